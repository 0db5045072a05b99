//! TPTP problem emission, standard-interpretation axioms, and orchestration of
//! an external theorem prover.
//!
//! The prover runs as a subprocess on a temporary problem file; its verdict is
//! read from the SZS status line of its output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::asp::Predicate;
use crate::fol::tptp::{
    format_tptp, Signature, GENERAL, GREATER, GREATER_EQUAL, INFIMUM, INTEGER_EMBEDDING, IS_INTEGER, IS_SYMBOLIC, LESS,
    LESS_EQUAL, SUPREMUM, SYMBOL, SYMBOL_EMBEDDING,
};
use crate::fol::{fresh_name, Formula, FormulaError, Theory};

/// Environment variable overriding the prover binary.
pub const PROVER_VARIABLE: &str = "ANTHEM_PROVER";

#[derive(Debug, Error)]
pub enum AtpError {
    #[error("could not launch the prover `{binary}`: {source}")]
    ProverUnavailable { binary: String, source: std::io::Error },
    #[error("could not write the problem file: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Formula(#[from] FormulaError),
}

const RESERVED: &[&str] = &[
    GENERAL,
    SYMBOL,
    INTEGER_EMBEDDING,
    SYMBOL_EMBEDDING,
    INFIMUM,
    SUPREMUM,
    LESS,
    LESS_EQUAL,
    GREATER,
    GREATER_EQUAL,
    IS_INTEGER,
    IS_SYMBOLIC,
];

fn declarations_of_builtins() -> Vec<(String, String)> {
    let relation = format!("({GENERAL} * {GENERAL}) > $o");
    vec![
        (GENERAL.into(), "$tType".into()),
        (SYMBOL.into(), "$tType".into()),
        (INTEGER_EMBEDDING.into(), format!("$int > {GENERAL}")),
        (SYMBOL_EMBEDDING.into(), format!("{SYMBOL} > {GENERAL}")),
        (INFIMUM.into(), GENERAL.into()),
        (SUPREMUM.into(), GENERAL.into()),
        (IS_INTEGER.into(), format!("{GENERAL} > $o")),
        (IS_SYMBOLIC.into(), format!("{GENERAL} > $o")),
        (LESS.into(), relation.clone()),
        (LESS_EQUAL.into(), relation.clone()),
        (GREATER.into(), relation.clone()),
        (GREATER_EQUAL.into(), relation),
    ]
}

/// Axioms restricting the prover to standard interpretations: the universe
/// consists of `#inf`, the integers, the symbolic constants, and `#sup`,
/// totally ordered in that sequence, with symbolic constants ordered by name.
pub fn standard_axioms(symbols: &BTreeSet<String>) -> Vec<(String, String)> {
    let mut axioms: Vec<(&str, String)> = vec![
        (
            "is_integer",
            format!("![X: {GENERAL}]: ( {IS_INTEGER}(X) <=> ?[N: $int]: ( X = {INTEGER_EMBEDDING}(N) ) )"),
        ),
        (
            "is_symbolic",
            format!("![X: {GENERAL}]: ( {IS_SYMBOLIC}(X) <=> ?[S: {SYMBOL}]: ( X = {SYMBOL_EMBEDDING}(S) ) )"),
        ),
        (
            "universe",
            format!("![X: {GENERAL}]: ( ( X = {INFIMUM} ) | {IS_INTEGER}(X) | {IS_SYMBOLIC}(X) | ( X = {SUPREMUM} ) )"),
        ),
        (
            "integer_injective",
            format!("![X: $int, Y: $int]: ( ( {INTEGER_EMBEDDING}(X) = {INTEGER_EMBEDDING}(Y) ) => ( X = Y ) )"),
        ),
        (
            "symbolic_injective",
            format!("![X: {SYMBOL}, Y: {SYMBOL}]: ( ( {SYMBOL_EMBEDDING}(X) = {SYMBOL_EMBEDDING}(Y) ) => ( X = Y ) )"),
        ),
        (
            "integer_symbolic_disjoint",
            format!("![N: $int, S: {SYMBOL}]: ( {INTEGER_EMBEDDING}(N) != {SYMBOL_EMBEDDING}(S) )"),
        ),
        (
            "integer_not_bound",
            format!(
                "![N: $int]: ( ( {INTEGER_EMBEDDING}(N) != {INFIMUM} ) & ( {INTEGER_EMBEDDING}(N) != {SUPREMUM} ) )"
            ),
        ),
        (
            "symbolic_not_bound",
            format!(
                "![S: {SYMBOL}]: ( ( {SYMBOL_EMBEDDING}(S) != {INFIMUM} ) & ( {SYMBOL_EMBEDDING}(S) != {SUPREMUM} ) )"
            ),
        ),
        ("infimum_not_supremum", format!("{INFIMUM} != {SUPREMUM}")),
        ("less_irreflexive", format!("![X: {GENERAL}]: ~ {LESS}(X, X)")),
        (
            "less_transitive",
            format!("![X: {GENERAL}, Y: {GENERAL}, Z: {GENERAL}]: ( ( {LESS}(X, Y) & {LESS}(Y, Z) ) => {LESS}(X, Z) )"),
        ),
        (
            "less_total",
            format!("![X: {GENERAL}, Y: {GENERAL}]: ( {LESS}(X, Y) | ( X = Y ) | {LESS}(Y, X) )"),
        ),
        (
            "less_equal",
            format!("![X: {GENERAL}, Y: {GENERAL}]: ( {LESS_EQUAL}(X, Y) <=> ( {LESS}(X, Y) | ( X = Y ) ) )"),
        ),
        (
            "greater",
            format!("![X: {GENERAL}, Y: {GENERAL}]: ( {GREATER}(X, Y) <=> {LESS}(Y, X) )"),
        ),
        (
            "greater_equal",
            format!("![X: {GENERAL}, Y: {GENERAL}]: ( {GREATER_EQUAL}(X, Y) <=> {LESS_EQUAL}(Y, X) )"),
        ),
        (
            "integer_order",
            format!("![N: $int, M: $int]: ( {LESS}({INTEGER_EMBEDDING}(N), {INTEGER_EMBEDDING}(M)) <=> $less(N, M) )"),
        ),
        (
            "integers_below_symbols",
            format!("![N: $int, S: {SYMBOL}]: {LESS}({INTEGER_EMBEDDING}(N), {SYMBOL_EMBEDDING}(S))"),
        ),
        (
            "infimum_least",
            format!("![X: {GENERAL}]: ( ( X != {INFIMUM} ) => {LESS}({INFIMUM}, X) )"),
        ),
        (
            "supremum_greatest",
            format!("![X: {GENERAL}]: ( ( X != {SUPREMUM} ) => {LESS}(X, {SUPREMUM}) )"),
        ),
    ];
    let symbols: Vec<&String> = symbols.iter().collect();
    let mut order = Vec::new();
    for pair in symbols.windows(2) {
        order.push(format!(
            "{LESS}({SYMBOL_EMBEDDING}({}), {SYMBOL_EMBEDDING}({}))",
            pair[0], pair[1]
        ));
    }
    let mut out: Vec<(String, String)> = axioms.drain(..).map(|(name, text)| (name.to_string(), text)).collect();
    out.extend(
        order
            .into_iter()
            .enumerate()
            .map(|(i, text)| (format!("symbol_order_{}", i + 1), text)),
    );
    out
}

/// Predicates whose names cannot be used verbatim in TPTP (overloaded arities,
/// or clashes with constants and built-in names) get distinct names.
fn predicate_renaming(signature: &Signature) -> BTreeMap<Predicate, Predicate> {
    let mut arities: BTreeMap<&str, usize> = BTreeMap::new();
    for p in &signature.predicates {
        *arities.entry(&p.name).or_default() += 1;
    }
    let mut taken: BTreeSet<String> = RESERVED.iter().map(|s| s.to_string()).collect();
    taken.extend(signature.symbols.iter().cloned());
    taken.extend(signature.placeholders.keys().cloned());
    taken.extend(signature.predicates.iter().map(|p| p.name.clone()));
    let mut renaming = BTreeMap::new();
    for p in &signature.predicates {
        let clashes = arities[p.name.as_str()] > 1
            || RESERVED.contains(&p.name.as_str())
            || signature.symbols.contains(&p.name)
            || signature.placeholders.contains_key(&p.name);
        if clashes {
            let name = fresh_name(&format!("{}_{}", p.name, p.arity), &taken);
            taken.insert(name.clone());
            renaming.insert(p.clone(), Predicate::new(&name, p.arity));
        }
    }
    renaming
}

/// A self-contained TFF problem: declarations, axioms, and one conjecture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    pub declarations: Vec<(String, String)>,
    /// `(label, tptp formula)`; labels are informative and rendered as comments.
    pub axioms: Vec<(String, String)>,
    pub conjecture: (String, String),
}

impl Problem {
    /// Assemble a problem with the standard axioms first, then `axioms`, then `conjecture`.
    pub fn new(
        name: &str,
        axioms: &[(String, Formula)],
        conjecture: &(String, Formula),
    ) -> Result<Problem, FormulaError> {
        let signature = Signature::of(axioms.iter().map(|(_, f)| f).chain(std::iter::once(&conjecture.1)));
        let renaming = predicate_renaming(&signature);
        let render = |formula: &Formula| format_tptp(&formula.rename_predicates(&renaming));

        let mut declarations = declarations_of_builtins();
        let mut renamed = signature.clone();
        renamed.predicates = signature
            .predicates
            .iter()
            .map(|p| renaming.get(p).unwrap_or(p).clone())
            .collect();
        declarations.extend(renamed.declarations());

        let mut rendered = standard_axioms(&signature.symbols);
        for (label, formula) in axioms {
            rendered.push((label.clone(), render(formula)?));
        }
        Ok(Problem {
            name: name.to_string(),
            declarations,
            axioms: rendered,
            conjecture: (conjecture.0.clone(), render(&conjecture.1)?),
        })
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "% problem: {}", self.name)?;
        for (i, (name, ty)) in self.declarations.iter().enumerate() {
            writeln!(f, "tff(type_{}, type, {name}: {ty}).", i + 1)?;
        }
        for (i, (label, text)) in self.axioms.iter().enumerate() {
            writeln!(f, "% {label}")?;
            writeln!(f, "tff(axiom_{}, axiom, {text}).", i + 1)?;
        }
        writeln!(f, "% {}", self.conjecture.0)?;
        writeln!(f, "tff(conjecture, conjecture, {}).", self.conjecture.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ProverStatus {
    Theorem,
    CounterSatisfiable,
    Timeout,
    GaveUp,
    Error,
}

impl fmt::Display for ProverStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Interpret the SZS status line of prover output.
pub fn parse_szs(output: &str, timed_out: bool) -> ProverStatus {
    let status = output.lines().find_map(|line| {
        let (_, rest) = line.split_once("SZS status ")?;
        rest.split_whitespace().next()
    });
    match status {
        Some("Theorem" | "ContradictoryAxioms" | "Unsatisfiable") => ProverStatus::Theorem,
        Some("CounterSatisfiable" | "Satisfiable" | "CounterTheorem") => ProverStatus::CounterSatisfiable,
        Some("Timeout") => ProverStatus::Timeout,
        Some("GaveUp" | "Unknown" | "ResourceOut" | "Incomplete" | "MemoryOut") => ProverStatus::GaveUp,
        None if timed_out => ProverStatus::Timeout,
        _ => ProverStatus::Error,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProverResult {
    pub status: ProverStatus,
    pub seconds: f64,
    pub output: String,
}

/// Anything that can attempt a problem; the seam between task assembly and
/// the external prover.
pub trait Prover: Sync {
    fn prove(&self, problem: &Problem) -> Result<ProverResult, AtpError>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProverConfig {
    pub binary: String,
    /// Seconds per problem, at least one.
    pub time_limit: u64,
    /// Cores per problem, at least one.
    pub cores: usize,
    pub extra_args: Vec<String>,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            binary: std::env::var(PROVER_VARIABLE).unwrap_or_else(|_| "vampire".to_string()),
            time_limit: 60,
            cores: 1,
            extra_args: vec!["--mode".into(), "casc".into()],
        }
    }
}

impl ProverConfig {
    pub fn with_limits(time_limit: u64, cores: usize) -> Self {
        ProverConfig {
            time_limit: time_limit.max(1),
            cores: cores.max(1),
            ..ProverConfig::default()
        }
    }

    /// Whether the binary can be launched at all.
    pub fn is_available(&self) -> bool {
        Command::new(&self.binary)
            .arg("--version")
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status()
            .is_ok()
    }

    fn arguments(&self, path: &std::path::Path) -> Vec<String> {
        let mut args = self.extra_args.clone();
        args.extend([
            "--time_limit".to_string(),
            self.time_limit.to_string(),
            "--cores".to_string(),
            self.cores.to_string(),
        ]);
        args.push(path.display().to_string());
        args
    }
}

impl Prover for ProverConfig {
    fn prove(&self, problem: &Problem) -> Result<ProverResult, AtpError> {
        let mut file = tempfile::Builder::new().prefix("anthem-").suffix(".p").tempfile()?;
        std::io::Write::write_all(&mut file, problem.to_string().as_bytes())?;
        let path: PathBuf = file.path().to_path_buf();
        run(self, &self.arguments(&path))
    }
}

fn run(config: &ProverConfig, args: &[String]) -> Result<ProverResult, AtpError> {
    let start = Instant::now();
    log::debug!("running {} {}", config.binary, args.join(" "));
    let mut child = Command::new(&config.binary)
        .args(args)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|source| AtpError::ProverUnavailable {
            binary: config.binary.clone(),
            source,
        })?;

    let mut stdout = child.stdout.take().expect("piped stdout");
    let mut stderr = child.stderr.take().expect("piped stderr");
    let out_reader = std::thread::spawn(move || {
        let mut text = String::new();
        let _ = stdout.read_to_string(&mut text);
        text
    });
    let err_reader = std::thread::spawn(move || {
        let mut text = String::new();
        let _ = stderr.read_to_string(&mut text);
        text
    });

    // the prover enforces its own limit; this is a safety net
    let deadline = Duration::from_secs(config.time_limit) + Duration::from_secs(5);
    let mut timed_out = false;
    let exit = loop {
        if let Some(status) = child.try_wait()? {
            break Some(status);
        }
        if start.elapsed() > deadline {
            let _ = child.kill();
            let _ = child.wait();
            timed_out = true;
            break None;
        }
        std::thread::sleep(Duration::from_millis(10));
    };
    let mut output = out_reader.join().unwrap_or_default();
    output.push_str(&err_reader.join().unwrap_or_default());
    let mut status = parse_szs(&output, timed_out);
    if status == ProverStatus::Error && exit.is_some_and(|e| e.success()) && output.contains("Time limit") {
        status = ProverStatus::Timeout;
    }
    Ok(ProverResult {
        status,
        seconds: start.elapsed().as_secs_f64(),
        output,
    })
}

/// Render a theory's formulas as labelled axioms.
pub fn labelled(label: &str, theory: &Theory) -> Vec<(String, Formula)> {
    theory.formulas.iter().map(|f| (label.to_string(), f.clone())).collect()
}
