//! Command-line interface: exact spectra, verification grids, and
//! representation-theoretic queries for bundles over round spheres.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sphere_spectra::branching::{branch, Bundle, BundleKind, Member};
use sphere_spectra::killing::{killing_space, primitive_killing};
use sphere_spectra::output::{spectrum_line, to_csv, to_json, SpectrumDoc, SpectrumLine};
use sphere_spectra::rat::{format_weight_list, parse_weight_list};
use sphere_spectra::rep::Algebra;
use sphere_spectra::spectra::{
    applicable_ops, operator_ev, sym_u_extrapolated, OperatorKind, SpectraError,
};
use sphere_spectra::verify::{run_suite, Suite, VerifyParams};
use sphere_spectra::Rat;

#[derive(Parser)]
#[command(
    name = "sphere-spectra",
    version,
    about = "Exact spectra of natural differential operators on round spheres"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List exact operator spectra over a bundle's harmonic catalog
    Spectrum(SpectrumArgs),
    /// Run exact verification suites over a parameter grid
    Verify(VerifyArgs),
    /// Restrict an so(n) highest weight to so(n-1)
    Branch(WeightArgs),
    /// Weyl dimension of an so(n) highest weight
    Dim(WeightArgs),
    /// Decompose a Killing tensor or Killing form space
    Killing(KillingArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    /// Higher-spin spinor bundles S_j
    Spinor,
    /// Trace-free symmetric j-tensors
    Sym,
    /// Differential j-forms
    Form,
    /// Spinor-valued j-forms
    SpinorForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Bundle family
    #[arg(long, value_enum)]
    space: Space,
    /// Sphere dimension (S^n, n >= 3)
    #[arg(long)]
    n: u32,
    /// Bundle degree j
    #[arg(long)]
    j: u32,
    /// Largest harmonic level k to list
    #[arg(long = "k-max")]
    k_max: u32,
    /// Restrict to one inner parameter s (spinor and sym families only)
    #[arg(long)]
    s: Option<u32>,
    /// Restrict to one operator: lap, D2, Tplus, Tminus, U, dstard, ddstar, cc
    #[arg(long)]
    op: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: branching, weitzenboeck, factorization, crosscheck,
    /// killing, or all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Smallest sphere dimension
    #[arg(long = "n-min", default_value_t = 3)]
    n_min: u32,
    /// Largest sphere dimension
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: u32,
    /// Largest bundle degree
    #[arg(long = "j-max", default_value_t = 3)]
    j_max: u32,
    /// Largest harmonic level
    #[arg(long = "k-max", default_value_t = 6)]
    k_max: u32,
    /// Seed for the randomized restriction checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct WeightArgs {
    /// Algebra parameter: the weight labels an so(n) representation
    #[arg(long)]
    n: u32,
    /// Highest weight as comma-separated rationals, e.g. 3/2,1/2
    #[arg(long)]
    weight: String,
}

#[derive(Args)]
struct KillingArgs {
    /// Sphere dimension (S^n, n >= 3)
    #[arg(long)]
    n: u32,
    /// Killing tensor rank
    #[arg(long)]
    degree: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match cli.cmd {
        Cmd::Spectrum(a) => run_spectrum(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Branch(a) => run_branch(a),
        Cmd::Dim(a) => run_dim(a),
        Cmd::Killing(a) => run_killing(a),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Operator eigenvalue for display.  The one fenced case (U on trace-free
/// symmetric tensors over S^3) is printed as its extrapolated closed form.
fn display_ev(m: &Member, op: OperatorKind) -> Rat {
    match operator_ev(m, op) {
        Ok(v) => v,
        Err(SpectraError::SymUOnS3) => {
            sym_u_extrapolated(m.j, m.k, m.s.expect("sym member"))
        }
        Err(e) => unreachable!("operator pre-validated: {e}"),
    }
}

fn run_spectrum(a: SpectrumArgs) -> ExitCode {
    let kind = match a.space {
        Space::Spinor => BundleKind::Spinor { j: a.j },
        Space::Sym => BundleKind::Sym { j: a.j },
        Space::Form => BundleKind::Form { j: a.j },
        Space::SpinorForm => BundleKind::SpinorForm { j: a.j },
    };
    if a.s.is_some() && matches!(a.space, Space::Form | Space::SpinorForm) {
        return usage("--s applies only to the spinor and sym families");
    }
    let bundle = match Bundle::new(a.n, kind) {
        Ok(b) => b,
        Err(e) => return usage(e),
    };
    let ops: Vec<OperatorKind> = match &a.op {
        Some(name) => match OperatorKind::parse(name) {
            Some(op) if applicable_ops(kind).contains(&op) => vec![op],
            Some(op) => return usage(format!("operator {op} does not act on this family")),
            None => return usage(format!("unknown operator '{name}'")),
        },
        None => applicable_ops(kind).to_vec(),
    };
    let mut lines: Vec<SpectrumLine> = Vec::new();
    for m in bundle.decompose(a.k_max) {
        if let Some(s) = a.s {
            if m.s != Some(s) {
                continue;
            }
        }
        for op in &ops {
            let ev = display_ev(&m, *op);
            lines.push(spectrum_line(&m, *op, &ev));
        }
    }
    match a.format {
        Format::Csv => print!("{}", to_csv(&lines)),
        Format::Json => {
            let mut params = BTreeMap::new();
            params.insert("space".to_string(), space_name(a.space).to_string());
            params.insert("n".to_string(), a.n.to_string());
            params.insert("j".to_string(), a.j.to_string());
            params.insert("k-max".to_string(), a.k_max.to_string());
            if let Some(s) = a.s {
                params.insert("s".to_string(), s.to_string());
            }
            if let Some(op) = &a.op {
                params.insert("op".to_string(), op.clone());
            }
            let doc = SpectrumDoc {
                command: "spectrum".to_string(),
                params,
                lines,
                status: "ok".to_string(),
                violations: Vec::new(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Table => print!("{}", render_table(&lines)),
    }
    ExitCode::SUCCESS
}

fn space_name(s: Space) -> &'static str {
    match s {
        Space::Spinor => "spinor",
        Space::Sym => "sym",
        Space::Form => "form",
        Space::SpinorForm => "spinor-form",
    }
}

fn render_table(lines: &[SpectrumLine]) -> String {
    let header = ["family", "n", "j", "k", "s", "weight", "dim", "mult", "op", "eig"];
    let mut rows: Vec<[String; 10]> = Vec::with_capacity(lines.len());
    for l in lines {
        let weight = l
            .weight
            .iter()
            .map(|p| {
                if p.1 == "1" {
                    p.0.clone()
                } else {
                    format!("{}/{}", p.0, p.1)
                }
            })
            .collect::<Vec<_>>()
            .join(",");
        let eig = if l.eig.1 == "1" {
            l.eig.0.clone()
        } else {
            format!("{}/{}", l.eig.0, l.eig.1)
        };
        rows.push([
            l.family.clone(),
            l.n.to_string(),
            l.j.to_string(),
            l.k.to_string(),
            l.s.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string()),
            format!("({weight})"),
            l.dim.clone(),
            l.mult.to_string(),
            l.op.clone(),
            eig,
        ]);
    }
    let mut width = [0usize; 10];
    for (i, h) in header.iter().enumerate() {
        width[i] = h.len();
    }
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            width[i] = width[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            for _ in cell.len()..width[i] {
                line.push(' ');
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &header.map(String::from));
    for row in &rows {
        emit(&mut out, row);
    }
    out
}

fn run_verify(a: VerifyArgs) -> ExitCode {
    let suite = match Suite::parse(&a.suite) {
        Some(s) => s,
        None => return usage(format!("unknown suite '{}'", a.suite)),
    };
    let params = VerifyParams {
        n_min: a.n_min,
        n_max: a.n_max,
        j_max: a.j_max,
        k_max: a.k_max,
        seed: a.seed,
    };
    let reports = match run_suite(suite, &params) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let mut total_checks = 0u64;
    let mut total_violations = 0usize;
    for r in &reports {
        total_checks += r.checks;
        total_violations += r.violations.len();
        println!(
            "suite={} checks={} status={}",
            r.suite.name(),
            r.checks,
            if r.passed() { "pass" } else { "fail" }
        );
        for v in &r.violations {
            println!("  violation: {v}");
        }
    }
    println!(
        "total checks={} violations={} status={}",
        total_checks,
        total_violations,
        if total_violations == 0 { "pass" } else { "fail" }
    );
    if total_violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_branch(a: WeightArgs) -> ExitCode {
    let w = match parse_weight_list(&a.weight) {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let alg = match Algebra::so(a.n) {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    let parent = match alg.irrep(&w) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let list = match branch(&parent) {
        Ok(l) => l,
        Err(e) => return usage(e),
    };
    let pdim = parent.dim().expect("dominant weight");
    println!(
        "so({}) ({})  dim {pdim}",
        a.n,
        format_weight_list(parent.weight())
    );
    let mut total = num_bigint::BigInt::from(0);
    for child in list.children() {
        let d = child.dim().expect("dominant weight");
        println!(
            "  -> so({}) ({})  dim {d}",
            a.n - 1,
            format_weight_list(child.weight())
        );
        total += d;
    }
    println!(
        "children {}  total dim {total}  conserved {}",
        list.children().len(),
        list.dim_conserved()
    );
    ExitCode::SUCCESS
}

fn run_dim(a: WeightArgs) -> ExitCode {
    let w = match parse_weight_list(&a.weight) {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let alg = match Algebra::so(a.n) {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    let irrep = match alg.irrep(&w) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    println!("{}", irrep.dim().expect("dominant weight"));
    ExitCode::SUCCESS
}

fn run_killing(a: KillingArgs) -> ExitCode {
    if a.n < 3 {
        return usage(format!("unsupported sphere dimension {} (need n >= 3)", a.n));
    }
    let dec = killing_space(a.n, a.degree);
    println!("Killing tensors of rank {} on S^{}", a.degree, a.n);
    let mut t = 0;
    while 2 * t <= a.degree {
        let d = a.degree - 2 * t;
        for piece in primitive_killing(a.n, d) {
            println!(
                "  degree {d}  ({})  dim {}",
                format_weight_list(piece.label.irrep().weight()),
                piece.dim
            );
        }
        t += 1;
    }
    println!("total dim {}", dec.total_dim);
    ExitCode::SUCCESS
}
