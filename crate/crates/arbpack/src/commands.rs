//! The four commands, as functions from document text to document text and an exit code.

use arbpack_core::engine::{solve as solve_instance, Outcome};
use arbpack_core::verify::{check_condition, cross_check, validate_packing, Caps, Condition, Verdict};
use arbpack_core::{Error, PackingMode, Weight};

use crate::document::{DocError, InstanceDoc, ReportDoc, SolutionDoc, Status, WitnessDoc};
use crate::gen::{generate, GenParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Document(#[from] DocError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

/// Standard output, diagnostics for standard error, and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub notes: Vec<String>,
    pub code: i32,
}

impl Output {
    fn new(stdout: String, code: i32) -> Self {
        Output { stdout, notes: Vec::new(), code }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub mode: PackingMode,
    /// Attach a violated inequality to infeasible answers when the instance is under `caps`.
    pub certificate: bool,
    pub unweighted: bool,
    pub caps: Caps,
}

pub fn solve(instance: &str, options: SolveOptions) -> Result<Output, CommandError> {
    let inst = InstanceDoc::parse(instance)?.build()?;
    let weights = if options.unweighted { vec![Weight::from_integer(0); inst.weights.len()] } else { inst.weights };
    let outcome = solve_instance(&inst.graph, inst.matroid.clone(), &weights, options.mode)?;
    let mut notes = Vec::new();
    let mut witness = None;
    if !outcome.is_feasible() && options.certificate {
        match check_condition(&inst.graph, Some(&*inst.matroid), options.mode, options.caps) {
            Ok(Verdict::Violated(v)) => witness = Some(v),
            Ok(Verdict::Holds) => {
                return Err(Error::Contract("infeasible instance satisfies its packing condition".into()).into())
            }
            Err(Error::CapExceeded { what, size, cap }) => {
                notes.push(format!("no certificate: {what} is {size}, above the cap of {cap}"))
            }
            Err(e) => return Err(e.into()),
        }
    }
    let doc = SolutionDoc::describe(&inst.graph, options.mode, &outcome, witness.as_ref());
    let code = if outcome.is_feasible() { EXIT_OK } else { EXIT_INFEASIBLE };
    Ok(Output { stdout: doc.print(), notes, code })
}

/// Checks a solution document against an instance. The mode defaults to the one recorded in
/// the solution.
pub fn validate(instance: &str, solution: &str, mode: Option<PackingMode>) -> Result<Output, CommandError> {
    let inst = InstanceDoc::parse(instance)?.build()?;
    let sol = SolutionDoc::parse(solution)?;
    let mode = match mode {
        Some(m) => m,
        None => PackingMode::from_name(&sol.mode)
            .ok_or_else(|| CommandError::Usage(format!("solution names unknown mode `{}`", sol.mode)))?,
    };
    if sol.status == Status::Infeasible {
        return Err(CommandError::Usage("the solution is marked infeasible and holds no packing".into()));
    }
    let packing = sol.packing(&inst.graph)?;
    let mut report = ReportDoc::new("validate", mode);
    let verdict = validate_packing(&inst.graph, Some(&*inst.matroid), &packing, mode)?;
    report.valid = Some(verdict.holds());
    report.violation = verdict.violation().map(|v| v.describe(&inst.graph));
    if let (Some(claimed), Verdict::Holds) = (sol.weight, &verdict) {
        let actual = packing.weight(&inst.weights);
        if claimed.0 != actual {
            report.valid = Some(false);
            report.violation = Some(format!("claimed weight {} but the arborescences weigh {actual}", claimed.0));
        }
    }
    let code = if report.valid == Some(true) { EXIT_OK } else { EXIT_ERROR };
    Ok(Output::new(report.print(), code))
}

/// Evaluates the packing condition of `mode` by enumeration and compares it with the solver.
/// With `exhaustive`, the solver weight is also compared with a brute-force optimum.
pub fn check(instance: &str, mode: PackingMode, caps: Caps, exhaustive: bool) -> Result<Output, CommandError> {
    let inst = InstanceDoc::parse(instance)?.build()?;
    let mut report = ReportDoc::new("check", mode);
    report.condition = Some(Condition::for_mode(mode, inst.graph.is_digraph()).name().into());
    let mut notes = Vec::new();
    let (verdict, solver, agrees) = if exhaustive {
        let r = cross_check(&inst.graph, inst.matroid.clone(), &inst.weights, mode, caps)?;
        notes.extend(r.problems.iter().cloned());
        let agrees = r.agrees();
        (r.condition, r.solver, agrees)
    } else {
        let verdict = check_condition(&inst.graph, Some(&*inst.matroid), mode, caps)?;
        let solver = solve_instance(&inst.graph, inst.matroid.clone(), &inst.weights, mode)?;
        let agrees = solver.is_feasible() == verdict.holds();
        (verdict, solver, agrees)
    };
    report.holds = Some(verdict.holds());
    report.witness = verdict.violation().map(|v| WitnessDoc::describe(&inst.graph, v));
    report.solver = Some(match solver {
        Outcome::Optimal { .. } => Status::Optimal,
        Outcome::Infeasible => Status::Infeasible,
    });
    report.agrees = Some(agrees);
    let code = match (agrees, verdict.holds()) {
        (false, _) => EXIT_ERROR,
        (true, true) => EXIT_OK,
        (true, false) => EXIT_INFEASIBLE,
    };
    Ok(Output { stdout: report.print(), notes, code })
}

pub fn gen(params: &GenParams) -> Result<Output, CommandError> {
    let doc = generate(params).map_err(CommandError::Usage)?;
    Ok(Output::new(doc.print(), EXIT_OK))
}
