//! Command definitions for the `azumaya` binary.
//!
//! Every subcommand produces a [`Report`]. Exit codes: 0 when every check
//! passes, 1 when a mathematical check fails, 2 for usage and input errors.

use std::fs;
use std::path::{Path, PathBuf};

use azumaya_core::involutions::{
    adjoint_involution, check_involution_axioms, coarse_type, coarse_type_parallel, make_transpose_involution,
    tensor_involution, BilinearForm, CoarseType, MatrixAlgebra, Specialize, TensorProduct,
};
use azumaya_core::io::{matrix_to_json, ring_matrix_from_json, scalar_matrix_from_json, tuple_from_json};
use azumaya_core::linalg::Matrix;
use azumaya_core::report::Report;
use azumaya_core::rings::{Field, FieldInvolution, QuotientRing, RationalPoint, RingInvolution, Scalar};
use azumaya_core::sample::{random_field_matrix, seeded};
use azumaya_core::scenarios::{
    build_sphere_setup, check_generates_mat2, check_ordinary_extension, fiber_involution_check, sphere_report,
    standard_generators, FiberKind, WORD_BOUND,
};
use azumaya_core::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "azumaya", version, about = "Exact checks for involutions on Azumaya algebras")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Base field: q, q(i), q(sqrt(d)), gf:p or gf:p^2.
    #[arg(long, global = true, default_value = "gf:5")]
    pub field: String,

    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Random samples per randomized check.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Run independent checks in parallel. The report does not change.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Rebuild the sphere example and check its coarse type is {p: +1, q: -1}.
    VerifySphere,
    /// Classify the adjoint involution of a Gram matrix.
    Classify {
        #[arg(long)]
        gram: PathBuf,
        /// Use the conjugation of a quadratic field (hermitian forms).
        #[arg(long)]
        conjugate: bool,
    },
    /// Coarse type of a twisted transpose or of the sphere example.
    CoarseType {
        /// Twist matrix over the sphere ring.
        #[arg(long, conflicts_with = "sphere", required_unless_present = "sphere")]
        twist: Option<PathBuf>,
        #[arg(long)]
        sphere: bool,
        #[arg(long, default_value_t = 1)]
        tensor_power: usize,
        /// Number of sphere-ring variables after x0.
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Fiber involution over the o- or s-type fixed point.
    Fiber {
        #[arg(long, value_parser = ["o", "s"])]
        kind: String,
        /// Tuple file with "a" and optionally "m"; defaults to (e12, e21, e11).
        #[arg(long)]
        tuple: Option<PathBuf>,
    },
    /// Test whether the "a" matrices of a tuple generate Mat2.
    GenerateTest {
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Check λ(f)·f = 1 and the pointwise forms of a twist matrix.
    OrdinaryCheck {
        #[arg(long)]
        twist: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifySphere => "verify-sphere",
            Command::Classify { .. } => "classify",
            Command::CoarseType { .. } => "coarse-type",
            Command::Fiber { .. } => "fiber",
            Command::GenerateTest { .. } => "generate-test",
            Command::OrdinaryCheck { .. } => "ordinary-check",
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_field(text: &str) -> Result<Field> {
    text.parse()
}

/// `(±1, 0, …, 0)` on the sphere ring.
fn sphere_points(ring: &std::sync::Arc<QuotientRing>) -> Result<Vec<RationalPoint>> {
    let f = ring.field();
    let n = ring.nvars();
    let at = |sign: i64| {
        let mut v = vec![f.zero(); n];
        v[0] = f.from_i64(sign);
        v
    };
    Ok(vec![RationalPoint::new("p", at(1), ring)?, RationalPoint::new("q", at(-1), ring)?])
}

/// Runs the command. Errors are returned before any report is produced.
pub fn execute(cli: &Cli) -> Result<Report> {
    let c = &cli.common;
    match &cli.command {
        Command::VerifySphere => verify_sphere(c),
        Command::Classify { gram, conjugate } => classify(c, gram, *conjugate),
        Command::CoarseType { twist, sphere, tensor_power, n } => {
            coarse(c, twist.as_deref(), *sphere, *tensor_power, *n)
        }
        Command::Fiber { kind, tuple } => fiber(c, kind.parse()?, tuple.as_deref()),
        Command::GenerateTest { tuple } => generate_test(c, tuple),
        Command::OrdinaryCheck { twist, n } => ordinary(c, twist, *n),
    }
}

fn verify_sphere(c: &CommonArgs) -> Result<Report> {
    // Over the rationals the example needs i, so `q` means Q(i) here.
    let field = match c.field.as_str() {
        "q" => Field::gaussian(),
        other => parse_field(other)?,
    };
    let setup = build_sphere_setup(field)?;
    let sphere = sphere_report(&setup, c.samples, c.seed, c.parallel)?;
    let mut report = Report::new("verify-sphere", field.to_string(), c.seed);
    report.add_validation(None, &sphere.checks);
    report.set_result("coarse_type", &sphere.coarse_type);
    report.set_result("coarse_type_text", sphere.coarse_type.to_string());
    report.set_result("fixed_dimensions", &sphere.fixed_dimensions);
    report.set_result("nonconstant", sphere.nonconstant);
    report.set_result("not_ordinary", sphere.not_ordinary);
    report.set_result("justification", &sphere.justification);
    report.set_result("i", setup.i().to_string());
    report.set_result("samples", c.samples);
    Ok(report)
}

fn classify(c: &CommonArgs, gram: &Path, conjugate: bool) -> Result<Report> {
    let field = parse_field(&c.field)?;
    let g = scalar_matrix_from_json(&read_file(gram)?, field)?;
    let involution = if conjugate {
        if !field.is_quadratic() {
            return Err(Error::Input(format!("--conjugate needs a quadratic field, got {field}")));
        }
        FieldInvolution::Conjugation
    } else {
        FieldInvolution::Identity
    };
    let form = BilinearForm::new(g.clone(), involution)?;
    let alg = adjoint_involution(&form)?;
    let structure = alg.field_structure()?;
    let ty = structure.classify()?;
    let mut report = Report::new("classify", field.to_string(), c.seed);
    report.check("nondegenerate", true, format!("G = {g}"));
    report.add_validation(Some("axioms"), &check_involution_axioms(&structure, c.samples, c.seed));
    report.add_validation(Some("structure"), &structure.structure_checks());
    report.set_result("type", ty);
    report.set_result("degree", g.rows());
    report.set_result("factor", alg.factor().to_string());
    if let Ok(fixed) = structure.fixed_subspace_dimension() {
        report.set_result("fixed_dimension", fixed);
    }
    Ok(report)
}

fn twist_algebra(field: Field, path: &Path, n: usize) -> Result<MatrixAlgebra> {
    if n == 0 {
        return Err(Error::Input("--n must be at least 1".into()));
    }
    let ring = QuotientRing::sphere(field, n);
    let lambda = RingInvolution::sphere(&ring);
    let m = ring_matrix_from_json(&read_file(path)?, &ring)?;
    make_transpose_involution(&m, &lambda)
}

fn compute_coarse<A: Specialize + Sync + ?Sized>(alg: &A, points: &[RationalPoint], parallel: bool) -> Result<CoarseType> {
    if parallel {
        coarse_type_parallel(alg, points)
    } else {
        coarse_type(alg, points)
    }
}

fn coarse(c: &CommonArgs, twist: Option<&Path>, sphere: bool, power: usize, n: usize) -> Result<Report> {
    if power == 0 {
        return Err(Error::Input("--tensor-power must be at least 1".into()));
    }
    let mut field = parse_field(&c.field)?;
    let mut report;
    let (base, powered) = if sphere {
        if c.field == "q" {
            field = Field::gaussian();
        }
        let setup = build_sphere_setup(field)?;
        let points = setup.fixed_points();
        let base = compute_coarse(&setup, &points, c.parallel)?;
        let tensor = TensorProduct::power(&setup, power)?;
        let powered = compute_coarse(&tensor, &points, c.parallel)?;
        report = Report::new("coarse-type", field.to_string(), c.seed);
        report.set_result("algebra", "sphere");
        (base, powered)
    } else {
        let path = twist.ok_or_else(|| Error::Input("pass --twist or --sphere".into()))?;
        let alg = twist_algebra(field, path, n)?;
        let points = sphere_points(alg.ring())?;
        let base = compute_coarse(&alg, &points, c.parallel)?;
        let mut acc = alg.clone();
        for _ in 1..power {
            acc = tensor_involution(&acc, &alg)?;
        }
        let powered = compute_coarse(&acc, &points, c.parallel)?;
        report = Report::new("coarse-type", field.to_string(), c.seed);
        report.set_result("algebra", format!("twist {}", matrix_to_json(alg.twist())));
        report.set_result("factor", alg.factor().to_string());
        (base, powered)
    };
    let mut expected = CoarseType::new();
    for (k, v) in base.values() {
        expected.insert(k.clone(), if power.is_multiple_of(2) { 1 } else { *v })?;
    }
    report.check(
        "tensor_power_law",
        powered == expected,
        format!("c = {base}, c^⊗{power} = {powered}"),
    );
    report.set_result("tensor_power", power);
    report.set_result("coarse_type", &powered);
    report.set_result("coarse_type_text", powered.to_string());
    report.set_result("base_coarse_type", &base);
    report.set_result("nonconstant", !powered.is_constant());
    Ok(report)
}

fn matrix_text(m: &Matrix<Scalar>) -> String {
    matrix_to_json(m).to_string()
}

fn fiber(c: &CommonArgs, kind: FiberKind, tuple: Option<&Path>) -> Result<Report> {
    let field = parse_field(&c.field)?;
    let (a, m) = match tuple {
        Some(path) => {
            let t = tuple_from_json(&read_file(path)?, field)?;
            let m = match t.m {
                Some(m) => m,
                None => random_field_matrix(field, &mut seeded(c.seed), 2, 2),
            };
            (t.a, m)
        }
        None => (standard_generators(field), random_field_matrix(field, &mut seeded(c.seed), 2, 2)),
    };
    if a.len() < 2 {
        return Err(Error::Input(format!("tuples need r ≥ 2 matrices, found {}", a.len())));
    }
    let rep = fiber_involution_check(kind, &a, &m)?;
    let mut report = Report::new("fiber", field.to_string(), c.seed);
    report.add_validation(None, &rep.checks);
    report.set_result("kind", rep.kind);
    report.set_result("type", rep.involution_type);
    report.set_result("fixed_dimension", rep.fixed_dimension);
    report.set_result("m", matrix_text(&m));
    report.set_result("m_image", &rep.m_image);
    Ok(report)
}

fn generate_test(c: &CommonArgs, tuple: &Path) -> Result<Report> {
    let field = parse_field(&c.field)?;
    let t = tuple_from_json(&read_file(tuple)?, field)?;
    let generates = check_generates_mat2(&t.a);
    let mut report = Report::new("generate-test", field.to_string(), c.seed);
    report.set_result("generates", generates);
    report.set_result("r", t.a.len());
    report.set_result("word_bound", WORD_BOUND);
    Ok(report)
}

fn ordinary(c: &CommonArgs, twist: &Path, n: usize) -> Result<Report> {
    let field = parse_field(&c.field)?;
    if n == 0 {
        return Err(Error::Input("--n must be at least 1".into()));
    }
    let ring = QuotientRing::sphere(field, n);
    let lambda = RingInvolution::sphere(&ring);
    let m = ring_matrix_from_json(&read_file(twist)?, &ring)?;
    let points = sphere_points(&ring)?;
    let rep = check_ordinary_extension(&m, &lambda, &points)?;
    let mut report = Report::new("ordinary-check", field.to_string(), c.seed);
    report.add_validation(None, &rep.checks);
    report.set_result("factor", &rep.factor);
    report.set_result("coarse_type", &rep.coarse_type);
    report.set_result("coarse_type_text", rep.coarse_type.to_string());
    Ok(report)
}

/// A failing report for a command that stopped with a mathematical error.
pub fn error_report(cli: &Cli, err: &Error) -> Report {
    let mut report = Report::new(cli.command.name(), cli.common.field.clone(), cli.common.seed);
    report.check("completed", false, err.to_string());
    report
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

/// Writes the rendered report to `path`, or standard output.
pub fn write_report(report: &Report, format: Format, path: Option<&Path>) -> std::io::Result<()> {
    let text = render(report, format);
    match path {
        Some(p) => fs::write(p, text),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Runs a parsed command line end to end and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let (report, code) = match execute(cli) {
        Ok(r) => {
            let code = if r.passed() { 0 } else { 1 };
            (r, code)
        }
        Err(e) if e.is_input_error() => {
            eprintln!("error: {e}");
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            (error_report(cli, &e), 1)
        }
    };
    if let Err(e) = write_report(&report, cli.common.format, cli.common.output.as_deref()) {
        eprintln!("error: cannot write report: {e}");
        return 2;
    }
    code
}
