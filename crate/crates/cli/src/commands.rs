use std::io::Write;

use fractus_core::fracops::rl_derivative_series;
use fractus_core::fundamental::{
    canonical_system, constant_green, evaluate, green_convolution, green_sections, green_series, homogeneous_solution,
    inhomogeneous_series, TAIL_WARNING,
};
use fractus_core::model::{CauchyProblem, Forcing, GeneralizedPowerSeries, GridFunction, PowerTerm};
use fractus_core::solvability::{classify_initial_data, project_initial_data, Verdict};
use fractus_core::volterra::{self, reconstruct_y, residual, Method, SolveOptions, SplitFunction, StartIterate};
use fractus_core::C64;

use crate::problem_file::{MethodName, ProblemFile};
use crate::CliError;

fn io_err(source: std::io::Error) -> CliError {
    CliError::Io {
        path: "<output>".into(),
        source,
    }
}

/// Prints the integrability table and verdict. Fails with
/// [`CliError::NoSolution`] after printing when the data rule out a solution.
pub fn cmd_check(file: &ProblemFile, out: &mut dyn Write) -> Result<(), CliError> {
    let p = file.to_problem()?;
    let report = classify_initial_data(&p);
    write!(out, "{report}").map_err(io_err)?;
    match report.verdict {
        Verdict::NoSolution(ks) => Err(CliError::NoSolution(ks)),
        _ => Ok(()),
    }
}

/// Writes the normalized problem file.
pub fn cmd_dump(file: &ProblemFile, out: &mut dyn Write) -> Result<(), CliError> {
    file.to_problem()?;
    out.write_all(file.to_json().as_bytes()).map_err(io_err)
}

#[derive(Debug, Clone, Default)]
pub struct SolveArgs {
    /// Overrides the file's solver method.
    pub method: Option<MethodName>,
    /// Number of evaluation points; defaults to the solver's node count.
    pub eval_nodes: Option<usize>,
    /// Zero out `b_k` for `k > k0` instead of failing.
    pub project_initial: bool,
}

/// A solution ready to be tabulated.
struct Solution {
    eval: Box<dyn Fn(f64) -> C64>,
    grading: f64,
    residual: Option<f64>,
    tail_bound: f64,
}

fn solve_options(file: &ProblemFile, method: Method) -> SolveOptions {
    SolveOptions {
        nodes: file.solver.nodes,
        grading: file.solver.grading,
        picard_tol: file.solver.tol,
        max_iterations: file.solver.max_iterations,
        method,
        start: StartIterate::Phi0,
    }
}

fn solve_on_grid(p: &CauchyProblem, opts: &SolveOptions) -> Result<Solution, CliError> {
    let phi = volterra::solve(p, opts)?;
    let res = residual(p, &phi)?;
    let y = reconstruct_y(p, &phi)?;
    Ok(Solution {
        grading: y.regular.grading(),
        eval: Box::new(move |x| y.eval(x)),
        residual: Some(res),
        tail_bound: 0.0,
    })
}

fn require_series(p: &CauchyProblem) -> Result<(), CliError> {
    if p.has_series_coefficients() {
        Ok(())
    } else {
        Err(CliError::Invalid(
            "the series path needs closed-form coefficients; tabulated coefficients are solved with --method picard"
                .into(),
        ))
    }
}

fn solve_by_series(file: &ProblemFile, p: &CauchyProblem, opts: &SolveOptions) -> Result<Solution, CliError> {
    require_series(p)?;
    let trunc = file.truncation();
    let sys = canonical_system(p, trunc)?;
    let mut series = homogeneous_solution(&sys, &p.initial)?;
    let mut tail_bound: f64 = p.initial.iter().zip(&sys.tail_bounds).map(|(b, t)| b.norm() * t).sum();
    let mut convolution: Option<GridFunction> = None;
    match &p.forcing {
        Forcing::Series(g) if !g.is_empty() => {
            let forced = inhomogeneous_series(p, g, trunc)?;
            tail_bound += evaluate(&forced, p.b).tail_estimate;
            series = series.add(&forced)?;
        }
        Forcing::Series(_) => {}
        Forcing::Sampled(g) => {
            let green = if p.constant_coefficients().is_some() {
                constant_green(p, trunc)?
            } else {
                green_sections(p, g.nodes(), trunc)?
            };
            convolution = Some(green_convolution(&green, g)?);
        }
    }
    let res = match convolution {
        Some(_) => None,
        None => {
            let phi = rl_derivative_series(&series, &p.alpha)?;
            let split = SplitFunction {
                singular: phi,
                regular: GridFunction::zeros(p.a, p.b, opts.nodes, 1.0)?,
            };
            Some(residual(p, &split)?)
        }
    };
    let grading = match opts.grading {
        Some(r) => r,
        None => volterra::build_phi0(p, opts)?.regular.grading(),
    };
    Ok(Solution {
        grading,
        eval: Box::new(move |x| series.eval(x) + convolution.as_ref().map_or(C64::new(0.0, 0.0), |c| c.interpolate(x))),
        residual: res,
        tail_bound,
    })
}

/// Solves the problem and writes `x,y_re,y_im` rows at
/// `x_i = a + (b−a)(i/N)^r`, `i = 1..N`, followed by comment lines with the
/// residual and the series tail bound.
pub fn cmd_solve(
    file: &ProblemFile,
    args: &SolveArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<(), CliError> {
    let mut p = file.to_problem()?;
    let report = classify_initial_data(&p);
    if let Verdict::NoSolution(ks) = &report.verdict {
        if !args.project_initial {
            return Err(CliError::NoSolution(ks.clone()));
        }
        let (projected, _) = project_initial_data(&p);
        let list = ks.iter().map(|k| format!("b_{k}")).collect::<Vec<_>>().join(", ");
        writeln!(
            diag,
            "WARNING: initial data projected (k0 = {}): {list} replaced by 0; this solves the special Cauchy problem, not the one given",
            report.k0
        )
        .map_err(io_err)?;
        p = projected;
    }

    let method = args.method.unwrap_or(file.solver.method);
    let sol = match method {
        MethodName::Picard => solve_on_grid(&p, &solve_options(file, Method::Picard))?,
        MethodName::Marching => solve_on_grid(&p, &solve_options(file, Method::Marching))?,
        MethodName::Series => solve_by_series(file, &p, &solve_options(file, Method::Picard))?,
    };

    let n = args.eval_nodes.unwrap_or(file.solver.nodes);
    if n == 0 {
        return Err(CliError::Invalid("--eval-nodes must be positive".into()));
    }
    let mut text = String::from("x,y_re,y_im\n");
    let mut peak: f64 = 0.0;
    for i in 1..=n {
        let x = p.a + (p.b - p.a) * (i as f64 / n as f64).powf(sol.grading);
        let y = (sol.eval)(x);
        peak = peak.max(y.norm());
        text.push_str(&format!("{x},{},{}\n", y.re + 0.0, y.im + 0.0));
    }
    match sol.residual {
        Some(r) => text.push_str(&format!("# residual={r:e}\n")),
        None => text.push_str("# residual=unavailable (tabulated forcing on the series path)\n"),
    }
    text.push_str(&format!("# tail_bound={:e}\n", sol.tail_bound));
    if sol.tail_bound > TAIL_WARNING * peak.max(f64::MIN_POSITIVE) {
        writeln!(
            diag,
            "WARNING: series tail bound {:e} is large next to max |y| = {peak:e}; raise solver.exponent_cap",
            sol.tail_bound
        )
        .map_err(io_err)?;
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn write_terms(
    out: &mut dyn Write,
    series: &GeneralizedPowerSeries,
    terms: usize,
    tail_bound: f64,
) -> Result<(), CliError> {
    let mut rows: Vec<PowerTerm> = series.terms().to_vec();
    rows.sort_by(|u, v| u.exponent.re.total_cmp(&v.exponent.re));
    let mut text = format!(
        "{:>24} {:>24} {:>24} {:>24}\n",
        "exponent_re", "exponent_im", "coeff_re", "coeff_im"
    );
    for t in rows.iter().take(terms) {
        text.push_str(&format!(
            "{:>24} {:>24} {:>24e} {:>24e}\n",
            t.exponent.re + 0.0,
            t.exponent.im + 0.0,
            t.coeff.re + 0.0,
            t.coeff.im + 0.0
        ));
    }
    text.push_str(&format!("tail_bound={:e}\n", tail_bound + 0.0));
    out.write_all(text.as_bytes()).map_err(io_err)
}

/// Lists the first `terms` terms of the canonical solution `y_i`.
pub fn cmd_fundamental(file: &ProblemFile, i: usize, terms: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let p = file.to_problem()?;
    require_series(&p)?;
    let sys = canonical_system(&p, file.truncation())?;
    if i == 0 || i > sys.k0 {
        return Err(CliError::Invalid(format!(
            "--i {i} is outside 1..={}; canonical solutions exist for i <= k0 = {}",
            sys.k0, sys.k0
        )));
    }
    write_terms(out, sys.entry(i), terms, sys.tail_bounds[i - 1])
}

/// Lists the first `terms` terms of `x ↦ G(x; ξ)`, a series in `x − ξ`.
/// The tail line is the size of the highest tenth of the terms at `x = b`.
pub fn cmd_green(file: &ProblemFile, xi: f64, terms: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let p = file.to_problem()?;
    require_series(&p)?;
    let section = green_series(&p, xi, file.truncation())?.section(xi)?;
    let tail = evaluate(&section, p.b).tail_estimate;
    write_terms(out, &section, terms, tail)
}
