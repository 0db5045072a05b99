//! Assembly and execution of verification tasks.
//!
//! - Strong equivalence: the γ-translations of both programs, under ordering
//!   axioms, must entail each other formula by formula.
//! - External equivalence (including adherence to a specification and weak
//!   equivalence): completed definitions of private predicates are assumed,
//!   and the public parts of both sides must entail each other, optionally
//!   guided by a proof outline of definitions and (inductive) lemmas.
//!
//! A claim that the prover fails to establish makes the verdict inconclusive;
//! it is never evidence of non-equivalence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::analyze::{check_private_recursion, check_tightness, Witness};
use crate::asp::{Predicate, Program};
use crate::atp::{AtpError, Problem, Prover, ProverStatus};
use crate::control::{
    definition_shape, inductive_shape, replace_placeholders, validate_outline, AnnotatedFormula, Direction,
    ProofOutline, Role, Specification, UserGuide,
};
use crate::fol::{Formula, Quantifier, Sort, Theory};
use crate::lexer::ParseError;
use crate::transform::{completion_except, gamma_with, ordering_axioms_with, HereThereNaming, TransformError};
use crate::translate::{mu, tau_star};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("refusing to verify `{program}`: it is not tight (positive cycle {witness}); use --bypass-tightness if it is known to be locally tight")]
    RefusedNotTight { program: String, witness: Witness },
    #[error("refusing to verify `{program}`: it has private recursion (cycle {witness})")]
    RefusedPrivateRecursion { program: String, witness: Witness },
    #[error("{0}")]
    Validation(#[from] ParseError),
    #[error("{0}")]
    Transform(#[from] TransformError),
    #[error("{0}")]
    Atp(#[from] AtpError),
    #[error("{0}")]
    Unsupported(String),
}

impl VerifyError {
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            VerifyError::RefusedNotTight { .. } | VerifyError::RefusedPrivateRecursion { .. }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pending,
    Trivial,
    Proven,
    NotProven,
    Timeout,
    Error,
}

impl ClaimStatus {
    pub fn is_established(self) -> bool {
        matches!(self, ClaimStatus::Proven | ClaimStatus::Trivial)
    }
}

/// One proof obligation: the axioms must entail the conjecture.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    pub name: String,
    pub direction: Direction,
    /// Labelled axioms, e.g. `("assumption", ..)`.
    pub axioms: Vec<(String, Formula)>,
    pub conjecture: Formula,
    pub status: ClaimStatus,
    /// Indices of earlier claims that must be established before this one is attempted.
    pub dependencies: Vec<usize>,
    pub prover_status: Option<ProverStatus>,
    pub seconds: f64,
}

impl Claim {
    fn new(name: String, direction: Direction, axioms: Vec<(String, Formula)>, conjecture: Formula) -> Self {
        let trivial =
            conjecture == Formula::Truth || axioms.iter().any(|(_, axiom)| axiom.alpha_equivalent(&conjecture));
        Claim {
            name,
            direction,
            axioms,
            conjecture,
            status: if trivial {
                ClaimStatus::Trivial
            } else {
                ClaimStatus::Pending
            },
            dependencies: vec![],
            prover_status: None,
            seconds: 0.0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.status == ClaimStatus::Trivial
    }

    /// The TPTP problem for this claim.
    pub fn problem(&self, task: &str) -> Result<Problem, VerifyError> {
        Ok(Problem::new(
            &self.file_stem(task),
            &self.axioms,
            &(format!("conjecture {}", self.name), self.conjecture.clone()),
        )
        .map_err(AtpError::from)?)
    }

    /// `<task>_<claim>_<direction>`, used for saved problem files.
    pub fn file_stem(&self, task: &str) -> String {
        let sanitize = |s: &str| -> String {
            s.chars()
                .map(|c| {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                        c
                    } else {
                        '_'
                    }
                })
                .collect()
        };
        format!("{}_{}_{}", sanitize(task), sanitize(&self.name), self.direction)
    }
}

/// Which translation provides the here-and-there representation in strong equivalence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FormulaRepresentation {
    #[default]
    TauStar,
    Mu,
}

impl FromStr for FormulaRepresentation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tau-star" => Ok(FormulaRepresentation::TauStar),
            "mu" => Ok(FormulaRepresentation::Mu),
            _ => Err(format!("unknown formula representation `{s}`")),
        }
    }
}

impl fmt::Display for FormulaRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaRepresentation::TauStar => "tau-star",
            FormulaRepresentation::Mu => "mu",
        })
    }
}

fn represent(program: &Program, representation: FormulaRepresentation) -> Theory {
    match representation {
        FormulaRepresentation::TauStar => tau_star(program),
        FormulaRepresentation::Mu => mu(program),
    }
}

fn directions(requested: Direction) -> Vec<Direction> {
    match requested {
        Direction::Universal => vec![Direction::Forward, Direction::Backward],
        other => vec![other],
    }
}

/// Claims for strong equivalence: in the forward direction the γ-translation
/// of `left` plus ordering axioms must entail each γ-translated formula of
/// `right`; the backward direction is symmetric. Formulas shared by both
/// programs yield trivial claims.
pub fn assemble_strong_equivalence(
    left: &Program,
    right: &Program,
    representation: FormulaRepresentation,
    direction: Direction,
) -> Vec<Claim> {
    let left = represent(left, representation);
    let right = represent(right, representation);
    let predicates: BTreeSet<Predicate> = left.predicates().union(&right.predicates()).cloned().collect();
    let naming = HereThereNaming::new(&predicates);
    let ordering = ordering_axioms_with(&naming);
    let left = gamma_with(&left, &naming);
    let right = gamma_with(&right, &naming);

    let mut claims = Vec::new();
    for d in directions(direction) {
        let (premises, conclusions) = match d {
            Direction::Forward => (&left, &right),
            _ => (&right, &left),
        };
        let mut axioms: Vec<(String, Formula)> = ordering
            .formulas
            .iter()
            .map(|f| ("ordering axiom".to_string(), f.clone()))
            .collect();
        axioms.extend(
            premises
                .formulas
                .iter()
                .enumerate()
                .map(|(i, f)| (format!("rule {}", i + 1), f.clone())),
        );
        for (i, conjecture) in conclusions.formulas.iter().enumerate() {
            claims.push(Claim::new(
                format!("rule_{}", i + 1),
                d,
                axioms.clone(),
                conjecture.clone(),
            ));
        }
    }
    claims
}

/// One side of an external-equivalence task.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Program { name: String, program: Program },
    Specification { name: String, specification: Specification },
}

impl Side {
    pub fn name(&self) -> &str {
        match self {
            Side::Program { name, .. } | Side::Specification { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalEquivalence {
    pub left: Side,
    pub right: Side,
    pub user_guide: UserGuide,
    pub outline: ProofOutline,
    pub direction: Direction,
    pub bypass_tightness: bool,
}

/// Replace private predicates by fresh names: a predicate keeps its name unless
/// the name is already in use elsewhere, in which case `_p` is appended until
/// it is fresh. `taken` accumulates names across calls.
pub fn rename_private_predicates(
    theory: &Theory,
    guide: &UserGuide,
    taken: &mut BTreeSet<String>,
) -> (Theory, BTreeMap<Predicate, Predicate>) {
    let private = guide.private_predicates(&theory.predicates());
    let mut map = BTreeMap::new();
    for predicate in private {
        let mut name = predicate.name.clone();
        while taken.contains(&name) {
            name.push_str("_p");
        }
        taken.insert(name.clone());
        map.insert(predicate.clone(), Predicate::new(&name, predicate.arity));
    }
    let renamed = Theory::new(theory.formulas.iter().map(|f| f.rename_predicates(&map)).collect());
    (renamed, map)
}

/// The predicate a completed definition `forall V (p(V) <-> F)` defines.
fn defined_predicate(formula: &Formula) -> Option<Predicate> {
    let body = match formula {
        Formula::Quantified {
            quantifier: Quantifier::Forall,
            formula,
            ..
        } => formula,
        other => other,
    };
    match body {
        Formula::Iff(lhs, _) => match &**lhs {
            Formula::Atom(atom) => Some(atom.predicate()),
            _ => None,
        },
        _ => None,
    }
}

/// The parts of one side used when assembling final claims.
#[derive(Default)]
struct Prepared {
    /// Completed definitions of private predicates.
    private: Vec<(String, Formula)>,
    /// Public formulas, each with a claim name and the directions it applies to.
    public: Vec<(String, Direction, Formula)>,
    assumptions: Vec<(String, Formula)>,
}

fn prepare_formula(formula: &Formula, placeholders: &BTreeMap<String, Sort>) -> Formula {
    replace_placeholders(formula, placeholders).universal_closure()
}

fn check_program(name: &str, program: &Program, guide: &UserGuide) -> Result<(), VerifyError> {
    if let Some(witness) = check_tightness(program).witness {
        return Err(VerifyError::RefusedNotTight {
            program: name.to_string(),
            witness,
        });
    }
    if let Some(witness) = check_private_recursion(program, guide).witness {
        return Err(VerifyError::RefusedPrivateRecursion {
            program: name.to_string(),
            witness,
        });
    }
    Ok(())
}

fn prepare_program(
    name: &str,
    program: &Program,
    task: &ExternalEquivalence,
    taken: &mut BTreeSet<String>,
) -> Result<(Prepared, BTreeMap<Predicate, Predicate>), VerifyError> {
    let guide = &task.user_guide;
    let placeholders = guide.placeholders();
    let theory = tau_star(program);
    let theory = Theory::new(
        theory
            .formulas
            .iter()
            .map(|f| replace_placeholders(f, &placeholders))
            .collect(),
    );
    let (theory, renaming) = rename_private_predicates(&theory, guide, taken);
    let completed = completion_except(&theory, &guide.input_predicates())?;
    let private: BTreeSet<&Predicate> = renaming.values().collect();

    let mut prepared = Prepared::default();
    let mut constraints = 0;
    for formula in completed.formulas {
        match defined_predicate(&formula) {
            Some(p) if private.contains(&p) => prepared
                .private
                .push((format!("completed definition of {p} ({name})"), formula)),
            Some(p) => prepared
                .public
                .push((format!("{}_{}", p.name, p.arity), Direction::Universal, formula)),
            None => {
                constraints += 1;
                prepared
                    .public
                    .push((format!("constraint_{constraints}"), Direction::Universal, formula));
            }
        }
    }
    Ok((prepared, renaming))
}

fn prepare_specification(specification: &Specification, guide: &UserGuide) -> Prepared {
    let placeholders = guide.placeholders();
    let mut prepared = Prepared::default();
    for (i, assumption) in specification.assumptions.iter().enumerate() {
        prepared.assumptions.push((
            format!("assumption {}", assumption.display_name(i + 1)),
            prepare_formula(&assumption.formula, &placeholders),
        ));
    }
    for (i, spec) in specification.specs.iter().enumerate() {
        prepared.public.push((
            spec.display_name(i + 1),
            spec.direction,
            prepare_formula(&spec.formula, &placeholders),
        ));
    }
    prepared
}

/// A formula contributed by the proof outline, with the claims establishing it.
#[derive(Clone, Debug)]
struct OutlineFact {
    label: String,
    direction: Direction,
    formula: Formula,
    claims: Vec<usize>,
}

/// Turn a proof outline into claims. Definitions become axioms at once; each
/// lemma is a claim whose axioms are `base(direction)` plus all earlier outline
/// formulas applicable to its direction; an inductive lemma yields a base-case
/// and an inductive-step claim, after which the lemma itself becomes an axiom.
fn plan_outline(
    outline: &ProofOutline,
    placeholders: &BTreeMap<String, Sort>,
    requested: Direction,
    base: &dyn Fn(Direction) -> Vec<(String, Formula)>,
    claims: &mut Vec<Claim>,
) -> Result<Vec<OutlineFact>, VerifyError> {
    let mut facts: Vec<OutlineFact> = Vec::new();
    let mut counters: BTreeMap<Role, usize> = BTreeMap::new();
    for entry in &outline.entries {
        let index = counters.entry(entry.role).or_default();
        *index += 1;
        let name = entry.display_name(*index);
        if !entry.direction.applies_to(requested) {
            continue;
        }
        let entry = AnnotatedFormula {
            formula: prepare_formula(&entry.formula, placeholders),
            ..entry.clone()
        };
        let applicable: Vec<&OutlineFact> = facts
            .iter()
            .filter(|fact| fact.direction == Direction::Universal || fact.direction == entry.direction)
            .collect();
        let mut axioms = base(entry.direction);
        axioms.extend(applicable.iter().map(|f| (f.label.clone(), f.formula.clone())));
        let mut dependencies: Vec<usize> = applicable.iter().flat_map(|f| f.claims.clone()).collect();
        dependencies.sort_unstable();
        dependencies.dedup();

        let mut push = |claim_name: String, conjecture: Formula| {
            let mut claim = Claim::new(claim_name, entry.direction, axioms.clone(), conjecture);
            claim.dependencies = dependencies.clone();
            claims.push(claim);
            claims.len() - 1
        };
        let (formula, produced) = match entry.role {
            Role::Definition => {
                definition_shape(&entry)?;
                (entry.formula.clone(), vec![])
            }
            Role::Lemma => {
                let id = push(name.clone(), entry.formula.clone());
                (entry.formula.clone(), vec![id])
            }
            Role::InductiveLemma => {
                let induction = inductive_shape(&entry)?;
                let base_id = push(format!("{name}_base"), induction.base_case());
                let step_id = push(format!("{name}_step"), induction.inductive_step());
                (induction.conclusion(), vec![base_id, step_id])
            }
            _ => unreachable!("outlines contain definitions and lemmas only"),
        };
        facts.push(OutlineFact {
            label: format!("{} {name}", entry.role),
            direction: entry.direction,
            formula,
            claims: produced,
        });
    }
    Ok(facts)
}

/// Claims for the lemmas of an outline over fixed base axioms.
pub fn sequence_outline(
    outline: &ProofOutline,
    base_axioms: &[(String, Formula)],
    direction: Direction,
) -> Result<Vec<Claim>, VerifyError> {
    let mut claims = Vec::new();
    plan_outline(
        outline,
        &BTreeMap::new(),
        direction,
        &|_| base_axioms.to_vec(),
        &mut claims,
    )?;
    Ok(claims)
}

/// Split an inductive lemma `forall X N$ (N$ >= n -> F(X, N$))` into its base
/// case `forall X F(X, n)` and inductive step
/// `forall X N$ (N$ >= n and F(X, N$) -> F(X, N$ + 1))`.
pub fn split_inductive_lemma(formula: &Formula) -> Result<(Formula, Formula), VerifyError> {
    let entry = AnnotatedFormula {
        role: Role::InductiveLemma,
        direction: Direction::Universal,
        name: None,
        formula: formula.clone(),
        location: crate::lexer::Location { line: 1, column: 1 },
    };
    let induction = inductive_shape(&entry)?;
    Ok((induction.base_case(), induction.inductive_step()))
}

/// A user guide declaring every predicate of both programs as output, which
/// turns external equivalence into weak equivalence.
pub fn weak_equivalence_guide(left: &Program, right: &Program) -> UserGuide {
    UserGuide {
        outputs: left.predicates().union(&right.predicates()).cloned().collect(),
        ..UserGuide::default()
    }
}

/// Claims for external equivalence. Outline claims come first, then final
/// forward claims (left entails right), then final backward claims.
///
/// A specification is always placed on the left, so that the backward
/// direction states that the program has the properties of the specification.
pub fn assemble_external_equivalence(task: &ExternalEquivalence) -> Result<Vec<Claim>, VerifyError> {
    Ok(assemble(task)?.0)
}

/// The renamings of private predicates applied to the program sides of an
/// external-equivalence task, left side first (a specification, if any, is
/// placed on the left and has no renaming).
pub fn external_renamings(task: &ExternalEquivalence) -> Result<Vec<BTreeMap<Predicate, Predicate>>, VerifyError> {
    Ok(assemble(task)?.1)
}

type Renaming = BTreeMap<Predicate, Predicate>;

fn assemble(task: &ExternalEquivalence) -> Result<(Vec<Claim>, Vec<Renaming>), VerifyError> {
    let (left, right) = match (&task.left, &task.right) {
        (Side::Specification { .. }, Side::Specification { .. }) => {
            return Err(VerifyError::Unsupported(
                "at least one side of an external equivalence task must be a program".into(),
            ))
        }
        (Side::Program { .. }, Side::Specification { .. }) => (&task.right, &task.left),
        _ => (&task.left, &task.right),
    };
    let guide = &task.user_guide;
    let placeholders = guide.placeholders();

    for side in [left, right] {
        if let Side::Program { name, program } = side {
            if !task.bypass_tightness {
                check_program(name, program, guide)?;
            }
        }
    }

    let outline_defined: BTreeSet<String> = task
        .outline
        .entries
        .iter()
        .filter(|e| e.role == Role::Definition)
        .filter_map(|e| definition_shape(e).ok())
        .map(|(p, _)| p.name)
        .collect();
    let mut taken: BTreeSet<String> = guide
        .input_predicates()
        .iter()
        .chain(&guide.outputs)
        .map(|p| p.name.clone())
        .chain(outline_defined)
        .collect();
    // predicates a proof outline may refer to
    let mut known: BTreeSet<Predicate> = guide.input_predicates();
    known.extend(guide.outputs.iter().cloned());

    let mut prepared = Vec::new();
    let mut renamings = Vec::new();
    for side in [left, right] {
        let part = match side {
            Side::Program { name, program } => {
                let (part, renaming) = prepare_program(name, program, task, &mut taken)?;
                known.extend(renaming.values().cloned());
                known.extend(program.predicates().into_iter().filter(|p| !renaming.contains_key(p)));
                renamings.push(renaming);
                part
            }
            Side::Specification { specification, .. } => {
                let part = prepare_specification(specification, guide);
                for (_, _, f) in &part.public {
                    known.extend(f.predicates());
                }
                part
            }
        };
        prepared.push(part);
    }
    let (left_part, right_part) = (&prepared[0], &prepared[1]);

    validate_outline(&task.outline, &known)?;

    let mut assumptions: Vec<(String, Formula)> = guide
        .assumptions
        .iter()
        .enumerate()
        .map(|(i, a)| {
            (
                format!("assumption {}", a.display_name(i + 1)),
                prepare_formula(&a.formula, &placeholders),
            )
        })
        .collect();
    assumptions.extend(left_part.assumptions.iter().cloned());
    assumptions.extend(right_part.assumptions.iter().cloned());

    let mut shared = assumptions.clone();
    shared.extend(left_part.private.iter().cloned());
    shared.extend(right_part.private.iter().cloned());

    let public_axioms = |part: &Prepared, d: Direction, side: &str| -> Vec<(String, Formula)> {
        part.public
            .iter()
            .filter(|(_, direction, _)| direction.applies_to(d))
            .map(|(name, _, f)| (format!("{name} ({side})"), f.clone()))
            .collect()
    };
    let base = |d: Direction| -> Vec<(String, Formula)> {
        let mut axioms = shared.clone();
        match d {
            Direction::Forward => axioms.extend(public_axioms(left_part, d, left.name())),
            Direction::Backward => axioms.extend(public_axioms(right_part, d, right.name())),
            Direction::Universal => {}
        }
        axioms
    };

    let mut claims = Vec::new();
    let facts = plan_outline(&task.outline, &placeholders, task.direction, &base, &mut claims)?;

    for d in directions(task.direction) {
        let (premises, conclusions, premise_name) = match d {
            Direction::Forward => (left_part, right_part, left.name()),
            _ => (right_part, left_part, right.name()),
        };
        let applicable: Vec<&OutlineFact> = facts.iter().filter(|f| f.direction.applies_to(d)).collect();
        let mut axioms = shared.clone();
        axioms.extend(applicable.iter().map(|f| (f.label.clone(), f.formula.clone())));
        axioms.extend(public_axioms(premises, d, premise_name));
        let mut dependencies: Vec<usize> = applicable.iter().flat_map(|f| f.claims.clone()).collect();
        dependencies.sort_unstable();
        for (name, direction, conjecture) in &conclusions.public {
            if !direction.applies_to(d) {
                continue;
            }
            let mut claim = Claim::new(name.clone(), d, axioms.clone(), conjecture.clone());
            claim.dependencies = dependencies.clone();
            claims.push(claim);
        }
    }
    Ok((claims, renamings))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Success,
    Failure,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub name: String,
    pub direction: String,
    pub status: ClaimStatus,
    pub prover_status: Option<ProverStatus>,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimReport>,
    pub verdict: Verdict,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for claim in &self.claims {
            writeln!(f, "> Claim {} ({}):", claim.name, claim.direction)?;
            match claim.status {
                ClaimStatus::Trivial => writeln!(f, "  Status: Trivial (the conjecture is among the axioms)")?,
                ClaimStatus::Pending => writeln!(f, "  Status: Skipped (a lemma it depends on was not proven)")?,
                _ => {
                    let status = claim
                        .prover_status
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| "Error".into());
                    writeln!(f, "  Status: {status} ({:.2} seconds)", claim.seconds)?
                }
            }
        }
        match self.verdict {
            Verdict::Success => writeln!(f, "> Success! Anthem found a proof of the theorem."),
            Verdict::Inconclusive => writeln!(
                f,
                "> Inconclusive. Anthem could not prove every claim; this is not a proof that the equivalence fails."
            ),
            Verdict::Failure => writeln!(f, "> Failure! The prover reported an error."),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Task name used for saved problem files.
    pub task: String,
    /// Directory receiving `<task>_<claim>_<direction>.p` files.
    pub save_problems: Option<PathBuf>,
}

/// Attempt the claims in order. A claim whose dependencies are not all
/// established stays pending; trivial claims are not sent to the prover.
pub fn run_verification(
    claims: &mut [Claim],
    prover: &dyn Prover,
    options: &RunOptions,
) -> Result<VerificationReport, VerifyError> {
    if let Some(dir) = &options.save_problems {
        std::fs::create_dir_all(dir).map_err(AtpError::from)?;
    }
    for i in 0..claims.len() {
        let ready = claims[i]
            .dependencies
            .iter()
            .all(|&d| claims[d].status.is_established());
        let claim = &mut claims[i];
        if claim.is_trivial() || !ready {
            continue;
        }
        let problem = claim.problem(&options.task)?;
        if let Some(dir) = &options.save_problems {
            let path = dir.join(format!("{}.p", claim.file_stem(&options.task)));
            std::fs::write(path, problem.to_string()).map_err(AtpError::from)?;
        }
        log::info!("proving {} ({})", claim.name, claim.direction);
        let result = prover.prove(&problem)?;
        claim.seconds = result.seconds;
        claim.prover_status = Some(result.status);
        claim.status = match result.status {
            ProverStatus::Theorem => ClaimStatus::Proven,
            ProverStatus::Timeout => ClaimStatus::Timeout,
            ProverStatus::CounterSatisfiable | ProverStatus::GaveUp => ClaimStatus::NotProven,
            ProverStatus::Error => ClaimStatus::Error,
        };
    }
    Ok(report(claims))
}

/// Summarize claim statuses.
pub fn report(claims: &[Claim]) -> VerificationReport {
    let verdict = if claims.iter().all(|c| c.status.is_established()) {
        Verdict::Success
    } else if claims.iter().any(|c| c.status == ClaimStatus::Error) {
        Verdict::Failure
    } else {
        Verdict::Inconclusive
    };
    VerificationReport {
        claims: claims
            .iter()
            .map(|c| ClaimReport {
                name: c.name.clone(),
                direction: c.direction.to_string(),
                status: c.status,
                prover_status: c.prover_status,
                seconds: c.seconds,
            })
            .collect(),
        verdict,
    }
}
