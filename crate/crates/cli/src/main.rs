mod examples;
mod inputs;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ehrlab::gt::{ehrhart_gt, gt_violations, stretched_kostka, verify_counterexample};
use ehrlab::hull::{contains, decompose_as_sum, idp_check, partition_polytope};
use ehrlab::poset::{ehrhart_from_lattice, hook_multiset_shape, hook_multiset_tree};
use ehrlab::search::{scan_idp_partition_polytopes, scan_negative_coefficients, with_jobs};
use ehrlab::{
    GTPattern, IdealLattice, LatticePoint, Partition, RowSums, ScanReport, UniPolynomial,
};
use serde::Serialize;
use serde_json::json;

use examples::{ExampleId, ExampleOptions};
use inputs::{parse_list, parse_partition, read, Loaded, PosetInput};

#[derive(Parser, Debug)]
#[command(
    name = "ehrlab",
    version,
    about = "Exact Ehrhart polynomials, linear extensions and IDP certificates"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Use the large default scan ranges.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce a published example and compare each value with its source.
    Example(ExampleArgs),
    /// Ehrhart polynomial of an order polytope or a GT polytope.
    Ehrhart(EhrhartArgs),
    /// Hook multiset and hook-formula count of a shape or rooted tree.
    Hooks(PosetInput),
    /// Number of linear extensions.
    Linext(PosetInput),
    /// Lattice points of the order polytope dilate on the hyperplane sum = k.
    Slice(SliceArgs),
    /// Integer decomposition checks on partition polytopes.
    Idp(IdpArgs),
    /// Validate a GT pattern, or verify the shipped non-IDP GT instance.
    GtVerify(GtVerifyArgs),
    /// Exhaustive scans.
    #[command(subcommand)]
    Scan(ScanCommand),
}

#[derive(Args, Debug)]
struct ExampleArgs {
    #[arg(value_enum)]
    id: ExampleId,
    /// Claw length (number of leaves).
    #[arg(long)]
    ell: Option<u32>,
    /// Largest dilate to count.
    #[arg(long, default_value_t = 4)]
    max_dilate: usize,
    /// Fixture directory (overrides EHRLAB_FIXTURES).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EhrhartArgs {
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long)]
    tree: Option<PathBuf>,
    /// GT polytope with top row --lambda and bottom row --mu.
    #[arg(long, requires = "lambda")]
    gt: bool,
    #[arg(long)]
    lambda: Option<String>,
    /// Bottom row (default: zeros).
    #[arg(long)]
    mu: Option<String>,
    /// Number of pattern rows, boundary rows included.
    #[arg(long)]
    rows: Option<usize>,
    /// Row sums, bottom to top; gives the stretched Kostka polynomial.
    #[arg(long)]
    sums: Option<String>,
}

#[derive(Args, Debug)]
struct SliceArgs {
    #[command(flatten)]
    input: PosetInput,
    #[arg(long, default_value_t = 5)]
    max_k: usize,
}

#[derive(Args, Debug)]
struct IdpArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, default_value_t = 2)]
    dilate: usize,
    /// Test a single lattice point of the dilate instead of all of them.
    #[arg(long)]
    point: Option<String>,
}

#[derive(Args, Debug)]
struct GtVerifyArgs {
    /// Pattern file to validate against --lambda / --mu (and --sums).
    #[arg(long, requires = "lambda")]
    pattern: Option<PathBuf>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    sums: Option<String>,
    /// Fixture directory for the non-IDP instance (overrides EHRLAB_FIXTURES).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ScanCommand {
    /// Negative Ehrhart coefficients over all posets up to isomorphism.
    Posets {
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// IDP over the partition polytope grid.
    Idp {
        #[arg(long)]
        max_a: Option<usize>,
        #[arg(long)]
        max_b: Option<usize>,
        #[arg(long, default_value_t = 2)]
        dilate: usize,
    },
}

/// What a command produced: the text rendering, the JSON value and whether
/// its verification passed.
struct Output {
    text: String,
    json: String,
    pass: bool,
}

impl Output {
    fn new(text: String, value: &impl Serialize, pass: bool) -> Result<Self> {
        Ok(Self {
            text,
            // Going through `Value` sorts every object's keys, so the output
            // is canonical and survives a parse/print cycle unchanged.
            json: serde_json::to_string_pretty(&serde_json::to_value(value)?)?,
            pass,
        })
    }
}

fn fixtures(explicit: &Option<PathBuf>) -> PathBuf {
    explicit
        .clone()
        .unwrap_or_else(ehrlab::fixtures::fixture_dir)
}

fn example(args: &ExampleArgs) -> Result<Output> {
    let opts = ExampleOptions {
        ell: args.ell,
        max_dilate: args.max_dilate,
        fixtures: fixtures(&args.fixtures),
    };
    let report = examples::run(args.id, &opts)?;
    Output::new(report.render_text(), &report, report.pass)
}

fn polynomial_output(input: String, poly: &UniPolynomial) -> Result<Output> {
    let array = serde_json::to_string(poly)?;
    let text = format!("{input}\n{poly}\n{array}\n");
    Output::new(
        text,
        &json!({ "input": input, "polynomial": poly, "rendering": poly.to_string() }),
        true,
    )
}

fn ehrhart(args: &EhrhartArgs) -> Result<Output> {
    let chosen = [
        args.shape.is_some(),
        args.poset.is_some(),
        args.tree.is_some(),
        args.gt,
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if chosen != 1 {
        bail!("give exactly one of --shape, --poset, --tree or --gt");
    }
    if args.gt {
        let lambda = parse_partition(args.lambda.as_deref().context("--gt needs --lambda")?)?;
        let mu = match &args.mu {
            Some(m) => parse_partition(m)?,
            None => Partition::zeros(lambda.len()),
        };
        if let Some(sums) = &args.sums {
            let w = RowSums(parse_list(sums)?);
            let poly = stretched_kostka(&lambda, &mu, &w, None)?;
            return polynomial_output(
                format!("stretched Kostka {lambda}/{mu}, sums {sums}"),
                &poly,
            );
        }
        let rows = args.rows.context("--gt needs --rows (or --sums)")?;
        if rows < 2 {
            bail!("--rows must be at least 2");
        }
        let poly = ehrhart_gt(&lambda, &mu, rows - 1)?;
        return polynomial_output(format!("GT polytope {lambda}/{mu}, {rows} rows"), &poly);
    }
    let input = PosetInput {
        shape: args.shape.clone(),
        poset: args.poset.clone(),
        tree: args.tree.clone(),
    };
    let poset = input.load()?.to_poset()?;
    let poly = ehrhart_from_lattice(&IdealLattice::new(&poset));
    polynomial_output(input.describe(), &poly)
}

fn hooks(input: &PosetInput) -> Result<Output> {
    let hooks = match input.load()? {
        Loaded::Shape(s) => hook_multiset_shape(&s),
        Loaded::Tree(t) => hook_multiset_tree(&t),
        Loaded::Poset(_) => bail!("hooks are defined for --shape or --tree"),
    };
    let count = hooks.hook_formula()?;
    let text = format!(
        "{}\nhooks {:?}\nproduct {}\nhook formula {}\n",
        input.describe(),
        hooks.values(),
        hooks.product(),
        count
    );
    let value = json!({
        "input": input.describe(),
        "hooks": hooks.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "product": hooks.product().to_string(),
        "hook_formula": count.to_string(),
    });
    Output::new(text, &value, true)
}

fn linext(input: &PosetInput) -> Result<Output> {
    let loaded = input.load()?;
    let count = IdealLattice::new(&loaded.to_poset()?).linear_extensions();
    let hook = match &loaded {
        Loaded::Shape(s) => Some(hook_multiset_shape(s).hook_formula()?),
        Loaded::Tree(t) => Some(hook_multiset_tree(t).hook_formula()?),
        Loaded::Poset(_) => None,
    };
    let pass = hook
        .as_ref()
        .is_none_or(|h| h.to_string() == count.to_string());
    let mut text = format!("{}\nlinear extensions {count}\n", input.describe());
    if let Some(h) = &hook {
        text.push_str(&format!("hook formula {h}\n"));
    }
    let value = json!({
        "input": input.describe(),
        "linear_extensions": count.to_string(),
        "hook_formula": hook.map(|h| h.to_string()),
    });
    Output::new(text, &value, pass)
}

fn slice(args: &SliceArgs) -> Result<Output> {
    let poset = args.input.load()?.to_poset()?;
    let counts: Vec<String> = IdealLattice::new(&poset)
        .slice_counts(args.max_k)
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = format!(
        "{}\nslice counts k=0..{}: {}\n",
        args.input.describe(),
        args.max_k,
        counts.join(", ")
    );
    Output::new(
        text,
        &json!({ "input": args.input.describe(), "counts": counts }),
        true,
    )
}

fn idp(args: &IdpArgs) -> Result<Output> {
    let poly = partition_polytope(args.a, args.b)?;
    let k = args.dilate;
    if let Some(point) = &args.point {
        let p = LatticePoint::new(parse_list(point)?);
        if p.dim() != args.b {
            bail!(
                "point has {} coordinates, P({},{}) lives in dimension {}",
                p.dim(),
                args.a,
                args.b,
                args.b
            );
        }
        let cert = contains(&poly, &p.divided(k as i64))?;
        let split = if cert.is_inside() {
            Some(decompose_as_sum(&p, &poly, k)?)
        } else {
            None
        };
        let mut text = format!(
            "{p}/{k} is {} P({},{})\n",
            if cert.is_inside() {
                "inside"
            } else {
                "outside"
            },
            args.a,
            args.b
        );
        if let Some(d) = &split {
            match &d.parts {
                Some(parts) => {
                    let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("decomposes as {}\n", parts.join(" + ")));
                }
                None => text.push_str(&format!("no decomposition ({} candidates)\n", d.examined)),
            }
        }
        let value = json!({
            "point": p,
            "dilate": k.to_string(),
            "certificate": cert,
            "decomposition": split.as_ref().map(|d| d.parts.clone()),
            "examined": split.as_ref().map(|d| d.examined.to_string()),
        });
        return Output::new(text, &value, true);
    }
    let violations = idp_check(&poly, k)?;
    let mut text = format!(
        "P({},{}) dilate {k}: {} violations\n",
        args.a,
        args.b,
        violations.len()
    );
    for v in &violations {
        text.push_str(&format!("  {} ({} candidates)\n", v.point, v.examined));
    }
    let pass = violations.is_empty();
    Output::new(text, &violations, pass)
}

fn gt_verify(args: &GtVerifyArgs) -> Result<Output> {
    if let Some(path) = &args.pattern {
        let pattern = GTPattern::parse(&read(path)?)
            .with_context(|| format!("parsing {}", path.display()))?;
        let lambda = parse_partition(args.lambda.as_deref().context("--pattern needs --lambda")?)?;
        let mu = match &args.mu {
            Some(m) => parse_partition(m)?,
            None => Partition::zeros(lambda.len()),
        };
        let sums = args
            .sums
            .as_deref()
            .map(parse_list)
            .transpose()?
            .map(RowSums);
        let violations = gt_violations(&pattern, &lambda, &mu, sums.as_ref())?;
        let mut text = format!("{}: {} violations\n", path.display(), violations.len());
        for v in &violations {
            text.push_str(&format!("  {v}\n"));
        }
        let pass = violations.is_empty();
        return Output::new(text, &violations, pass);
    }
    let input = ehrlab::fixtures::load_nonidp_instance(&fixtures(&args.fixtures))?;
    let report = verify_counterexample(&input)?;
    let mut text = format!(
        "non-IDP GT instance: {}\n",
        if report.pass() { "PASS" } else { "FAIL" }
    );
    for c in &report.checks {
        text.push_str(&format!(
            "  [{}] {}\n",
            if c.pass { "ok" } else { "FAIL" },
            c.name
        ));
        for d in &c.details {
            text.push_str(&format!("      {d}\n"));
        }
    }
    Output::new(text, &report, report.pass())
}

fn scan_text(report: &ScanReport) -> String {
    let scope: Vec<String> = report
        .scope
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let mut text = format!(
        "scan {}\nexamined {}\nviolations {}\n",
        scope.join(" "),
        report.examined,
        report.violations.len()
    );
    for v in &report.violations {
        text.push_str(&format!(
            "  {}\n",
            serde_json::to_string(v).unwrap_or_default()
        ));
    }
    text.push_str(&format!(
        "checksum {}\nelapsed {:.3} s\n",
        report.checksum,
        report.elapsed.as_secs_f64()
    ));
    text
}

fn scan(cmd: &ScanCommand, long: bool) -> Result<Output> {
    let report = match cmd {
        ScanCommand::Posets { max_size } => {
            scan_negative_coefficients(max_size.unwrap_or(if long { 7 } else { 6 }))?
        }
        ScanCommand::Idp {
            max_a,
            max_b,
            dilate,
        } => {
            let (a, b) = if long {
                (ehrlab::search::MAX_IDP_A, ehrlab::search::MAX_IDP_B)
            } else {
                (8, 4)
            };
            scan_idp_partition_polytopes(max_a.unwrap_or(a), max_b.unwrap_or(b), *dilate)?
        }
    };
    Output::new(scan_text(&report), &report, report.passed())
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Example(args) => example(args),
        Command::Ehrhart(args) => ehrhart(args),
        Command::Hooks(input) => hooks(input),
        Command::Linext(input) => linext(input),
        Command::Slice(args) => slice(args),
        Command::Idp(args) => idp(args),
        Command::GtVerify(args) => gt_verify(args),
        Command::Scan(cmd) => scan(cmd, cli.long),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = with_jobs(cli.jobs, || dispatch(&cli))
        .map_err(anyhow::Error::from)
        .and_then(|r| r);
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
