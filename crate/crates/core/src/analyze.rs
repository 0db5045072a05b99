//! Static properties of programs: the predicate dependency graph, tightness,
//! regularity, and recursion through private predicates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::asp::{BodyLiteral, Head, Predicate, Program, Rule, Sign};
use crate::control::UserGuide;
use crate::translate::is_regular;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

/// Vertices are predicates; an edge `p -> q` means that `q` occurs in the body
/// of a rule with head predicate `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DependencyGraph {
    pub vertices: BTreeSet<Predicate>,
    pub edges: BTreeSet<(Predicate, Predicate, Polarity)>,
}

impl DependencyGraph {
    fn successors(&self, from: &Predicate, positive_only: bool) -> Vec<&Predicate> {
        let mut out: Vec<&Predicate> = self
            .edges
            .iter()
            .filter(|(p, _, polarity)| p == from && (!positive_only || *polarity == Polarity::Positive))
            .map(|(_, q, _)| q)
            .collect();
        out.dedup();
        out
    }

    /// A shortest path `[start, .., start]` returning to `start`, if any.
    fn cycle_through(&self, start: &Predicate, positive_only: bool) -> Option<Vec<Predicate>> {
        let mut parent: BTreeMap<&Predicate, &Predicate> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([start]);
        let mut visited = BTreeSet::new();
        while let Some(current) = queue.pop_front() {
            for next in self.successors(current, positive_only) {
                if next == start {
                    let mut path = vec![start.clone()];
                    let mut node = current;
                    while node != start {
                        path.push(node.clone());
                        node = parent[node];
                    }
                    path.push(start.clone());
                    path.reverse();
                    return Some(path);
                }
                if visited.insert(next) {
                    parent.insert(next, current);
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// A cycle of positive edges, if any.
    pub fn positive_cycle(&self) -> Option<Vec<Predicate>> {
        self.vertices.iter().find_map(|p| self.cycle_through(p, true))
    }
}

pub fn dependency_graph(program: &Program) -> DependencyGraph {
    let mut graph = DependencyGraph {
        vertices: program.predicates(),
        edges: BTreeSet::new(),
    };
    for rule in &program.rules {
        let Some(head) = rule.head.predicate() else {
            continue;
        };
        if let Head::Choice(_) = rule.head {
            graph.edges.insert((head.clone(), head.clone(), Polarity::Negative));
        }
        for literal in &rule.body {
            if let BodyLiteral::Literal(literal) = literal {
                let polarity = if literal.sign == Sign::NoSign {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                };
                graph.edges.insert((head.clone(), literal.atom.predicate(), polarity));
            }
        }
    }
    graph
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Tightness,
    Regularity,
    PrivateRecursion,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Tightness => "tightness",
            Property::Regularity => "regularity",
            Property::PrivateRecursion => "private recursion",
        })
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tightness" => Ok(Property::Tightness),
            "regularity" => Ok(Property::Regularity),
            _ => Err(format!("unknown property `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Cycle(Vec<Predicate>),
    Rule(Rule),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cycle(cycle) => {
                let names: Vec<String> = cycle.iter().map(Predicate::to_string).collect();
                write!(f, "{}", names.join(" -> "))
            }
            Witness::Rule(rule) => write!(f, "{rule}"),
        }
    }
}

/// The outcome of checking a property; `verdict` is true when the program has it.
/// For private recursion the property is "free of private recursion".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub property: Property,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl AnalysisReport {
    fn new(property: Property, witness: Option<Witness>) -> Self {
        AnalysisReport {
            property,
            verdict: witness.is_none(),
            witness,
        }
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.property, &self.witness) {
            (Property::Tightness, None) => write!(f, "the program is tight"),
            (Property::Tightness, Some(w)) => {
                write!(f, "the program is not tight: positive cycle {w}")
            }
            (Property::Regularity, None) => write!(f, "the program is regular"),
            (Property::Regularity, Some(w)) => {
                write!(f, "the program is not regular: first irregular rule `{w}`")
            }
            (Property::PrivateRecursion, None) => write!(f, "the program has no private recursion"),
            (Property::PrivateRecursion, Some(w)) => {
                write!(f, "the program has private recursion: cycle {w}")
            }
        }
    }
}

/// A program is tight when its positive dependency graph is acyclic.
pub fn check_tightness(program: &Program) -> AnalysisReport {
    AnalysisReport::new(
        Property::Tightness,
        dependency_graph(program).positive_cycle().map(Witness::Cycle),
    )
}

/// A program is regular when the natural translation applies to all its rules.
pub fn check_regularity(program: &Program) -> AnalysisReport {
    AnalysisReport::new(
        Property::Regularity,
        program
            .rules
            .iter()
            .find(|rule| !is_regular(rule))
            .cloned()
            .map(Witness::Rule),
    )
}

/// Whether some dependency cycle passes through one of `private`.
pub fn check_recursion_through(program: &Program, private: &BTreeSet<Predicate>) -> AnalysisReport {
    let graph = dependency_graph(program);
    AnalysisReport::new(
        Property::PrivateRecursion,
        private
            .iter()
            .filter(|p| graph.vertices.contains(p))
            .find_map(|p| graph.cycle_through(p, false))
            .map(Witness::Cycle),
    )
}

/// Recursion through predicates that are neither input nor output in `guide`.
pub fn check_private_recursion(program: &Program, guide: &UserGuide) -> AnalysisReport {
    check_recursion_through(program, &guide.private_predicates(&program.predicates()))
}
