use std::path::Path;
use std::time::Instant;

use fcomplex::complex::{binomial, format_set, vertices};
use fcomplex::duality::{alexander_dual, homogeneous_complement, newton_dual};
use fcomplex::enumerate::{classify, enumerate_pure, ClassifyOptions, Predicates};
use fcomplex::fideal::{
    is_f_complex, is_lu_set, strong_verdict, well_distributed_collision, FIdealVerdict, Witness,
};
use fcomplex::homalg::{
    betti_table, is_cohen_macaulay, is_shellable, linear_verdict, minimal_primes, LinearVerdict,
    Shelling, Subject,
};
use fcomplex::{Complex, FieldSpec, SubsetFamily};
use serde_json::{json, Value};

use crate::format::{facet_lists, parse_complex, write_complex};
use crate::records::Report;
use crate::verify::{self, Fixtures};
use crate::{CheckKind, Cli, CliError, Command, DualArgs, EnumerateArgs, IdealArgs, IdealKind, VerifyTarget};

type Outcome = Result<(), CliError>;

pub fn execute(cli: &Cli) -> (Vec<Report>, Outcome) {
    let start = Instant::now();
    let single = |r: Result<Report, CliError>| match r {
        Ok(report) => (vec![report.timed(start.elapsed())], Ok(())),
        Err(e) => (Vec::new(), Err(e)),
    };
    let field = cli.field;
    match &cli.command {
        Command::Info { file } => single(info(file)),
        Command::Fvector { file } => single(fvector(file)),
        Command::Dual(args) => single(dual(args)),
        Command::Check { predicate, file } => single(check(*predicate, file)),
        Command::Cm { file } => single(cm(file, field)),
        Command::Betti(args) => single(betti(args, field)),
        Command::Linear(args) => single(linear(args, field)),
        Command::MinimalPrimes(args) => single(primes(args, false)),
        Command::Unmixed(args) => single(primes(args, true)),
        Command::Shellable { file, budget } => single(shellable(file, *budget)),
        Command::Enumerate(args) => single(enumerate(args, field)),
        Command::Verify {
            target: VerifyTarget::Paper { only, fixtures, list },
        } => verify_paper(only.as_deref(), fixtures.as_deref(), *list),
    }
}

pub fn load(path: &Path) -> Result<Complex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_complex(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn file_report(command: &str, file: &Path) -> Report {
    Report::new(command).param("file", file.display().to_string())
}

fn info(file: &Path) -> Result<Report, CliError> {
    let c = load(file)?;
    let (dim, pure) = c.dimension_and_purity();
    let f = if c.is_void() { None } else { Some(c.f_vector()?) };
    let mut r = file_report("info", file);
    r.verdict = json!({
        "n": c.n(),
        "facets": facet_lists(&c),
        "dimension": dim,
        "pure": pure,
        "f_vector": f.as_ref().map(|f| f.entries.clone()),
    });
    r = r
        .line(format!("complex: {c}"))
        .line(format!("n: {}", c.n()))
        .line(format!("facets: {}", facet_lists(&c).len()))
        .line(format!("dimension: {dim}"))
        .line(format!("pure: {pure}"));
    if let Some(f) = f {
        r = r.line(format!("f-vector: {f}"));
    }
    Ok(r)
}

fn fvector(file: &Path) -> Result<Report, CliError> {
    let c = load(file)?;
    let f = c.f_vector()?;
    let mut r = file_report("fvector", file);
    r.verdict = json!({ "f_vector": f.entries });
    Ok(r.line(format!("f-vector: {f}")))
}

fn dual(args: &DualArgs) -> Result<Report, CliError> {
    let c = load(&args.file)?;
    let (kind, d) = if args.newton {
        ("newton", newton_dual(&c)?)
    } else if args.alexander {
        ("alexander", alexander_dual(&c)?)
    } else {
        ("hcomp", homogeneous_complement(&c)?)
    };
    let mut r = file_report("dual", &args.file).param("kind", kind);
    r.verdict = json!({ "n": d.n(), "facets": facet_lists(&d) });
    Ok(r.line(write_complex(&d).trim_end().to_string()))
}

fn f_ideal_json(v: &FIdealVerdict) -> Value {
    json!({
        "route": v.route.to_string(),
        "generators": v.generators,
        "degree": v.degree,
        "facet_f_vector": v.facet_f_vector.entries,
        "nonface_f_vector": v.nonface_f_vector.entries,
    })
}

/// `route: both-agree, |G|=10=C(6,3)/2` and friends.
pub fn f_ideal_detail(v: &FIdealVerdict, n: u32) -> String {
    match v.degree {
        Some(d) => {
            let half = binomial(n as u64, d as u64);
            let rel = if 2 * v.generators as u128 == half { "=" } else { "≠" };
            format!("route: {}, |G|={}{rel}C({n},{d})/2", v.route, v.generators)
        }
        None => format!(
            "route: {}, f(δ_F)={}, f(δ_N)={}",
            v.route, v.facet_f_vector, v.nonface_f_vector
        ),
    }
}

fn check(kind: CheckKind, file: &Path) -> Result<Report, CliError> {
    let c = load(file)?;
    let n = c.n();
    let r = file_report("check", file);
    Ok(match kind {
        CheckKind::FIdeal => {
            let v = is_f_complex(&c)?;
            let mut r = r.param("predicate", "f-ideal").predicate(
                "f-ideal",
                v.is_f,
                Some(f_ideal_detail(&v, n)),
                f_ideal_json(&v),
            );
            if let Some(w) = &v.witness {
                r = r.witness(w.describe(n));
            }
            r
        }
        CheckKind::Lu => {
            let v = is_lu_set(&c.facet_family())?;
            let mut r = r.param("predicate", "lu").predicate(
                "lu",
                v.is_lu(),
                Some(format!("L: {}, U: {}", v.lower, v.upper)),
                json!({ "lower": v.lower, "upper": v.upper }),
            );
            if let Some(m) = v.lower_witness {
                r = r.witness(Witness::MissingLower(m).describe(n));
            }
            if let Some(m) = v.upper_witness {
                r = r.witness(Witness::UncoveredUpper(m).describe(n));
            }
            r
        }
        CheckKind::WellDistributed => {
            let collision = well_distributed_collision(&c)?;
            let mut r = r.param("predicate", "well-distributed").predicate(
                "well-distributed",
                collision.is_none(),
                None,
                json!({}),
            );
            if let Some(f) = collision {
                let complement = fcomplex::complex::full_mask(n) & !f;
                r = r.witness(format!(
                    "facet {} and its complement {} are both facets",
                    format_set(f, n),
                    format_set(complement, n)
                ));
            }
            r
        }
        CheckKind::Strong => {
            let v = strong_verdict(&c)?;
            let mut r = r.param("predicate", "strong").predicate(
                "strong",
                v.is_strong(),
                Some(format!(
                    "Δ f-ideal: {}, Δ′ f-ideal: {}",
                    v.complex.is_f, v.complement.is_f
                )),
                json!({
                    "complex": f_ideal_json(&v.complex),
                    "complement": f_ideal_json(&v.complement),
                    "complex_is_f": v.complex.is_f,
                    "complement_is_f": v.complement.is_f,
                }),
            );
            if let Some(w) = &v.complex.witness {
                r = r.witness(format!("Δ: {}", w.describe(n)));
            }
            if let Some(w) = &v.complement.witness {
                r = r.witness(format!("Δ′: {}", w.describe(n)));
            }
            r
        }
    })
}

fn cm(file: &Path, field: FieldSpec) -> Result<Report, CliError> {
    let c = load(file)?;
    if c.is_void() {
        return Err(fcomplex::Error::VoidComplex.into());
    }
    let value = is_cohen_macaulay(&c, field);
    Ok(file_report("cm", file)
        .param("field", field.to_string())
        .predicate("cohen-macaulay", value, Some(format!("field {field}")), json!({})))
}

/// Generators of the chosen ideal.
fn ideal_of(c: &Complex, kind: IdealKind) -> Result<SubsetFamily, CliError> {
    match kind {
        IdealKind::FacetIdeal => {
            if c.is_void() {
                return Err(fcomplex::Error::VoidComplex.into());
            }
            if c.is_empty_complex() {
                return Err(fcomplex::Error::UnitIdeal.into());
            }
            Ok(c.facet_family())
        }
        IdealKind::StanleyReisner => {
            let gens = c.minimal_nonfaces()?;
            if gens.is_empty() {
                return Err(CliError::Precondition(
                    "the complex is the full simplex, so its Stanley-Reisner ideal is zero".into(),
                ));
            }
            Ok(gens)
        }
    }
}

fn ideal_name(kind: IdealKind) -> &'static str {
    match kind {
        IdealKind::FacetIdeal => "facet-ideal",
        IdealKind::StanleyReisner => "stanley-reisner",
    }
}

fn linear_parts(v: &LinearVerdict) -> (Option<String>, Option<String>, Value) {
    match v {
        LinearVerdict::Linear { degree } => (
            Some(format!("degree {degree}")),
            None,
            json!({ "degree": degree }),
        ),
        LinearVerdict::NotUniform => (
            Some("generators of several degrees".into()),
            None,
            json!({ "degree": null }),
        ),
        LinearVerdict::OffDiagonal { i, j, value } => (
            None,
            Some(format!("β_{{{i},{j}}} = {value} is off the linear strand")),
            json!({ "off_diagonal": [i, j, value] }),
        ),
    }
}

fn betti(args: &IdealArgs, field: FieldSpec) -> Result<Report, CliError> {
    let c = load(&args.file)?;
    let gens = ideal_of(&c, args.ideal)?;
    let table = betti_table(&gens, field, Subject::Ideal)?;
    let lin = linear_verdict(&gens, field)?;
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(&(i, j), &b)| json!([i, j, b]))
        .collect();
    let (_, witness, extra) = linear_parts(&lin);
    let mut r = file_report("betti", &args.file)
        .param("as", ideal_name(args.ideal))
        .param("field", field.to_string());
    r.verdict = json!({ "entries": entries, "linear": lin.is_linear(), "linear_detail": extra });
    for (&(i, j), &b) in &table.entries {
        r = r.line(format!("({i},{j}):{b}"));
    }
    r = r.line(format!("linear: {}", lin.is_linear()));
    if let Some(w) = witness {
        r = r.witness(w);
    }
    Ok(r)
}

fn linear(args: &IdealArgs, field: FieldSpec) -> Result<Report, CliError> {
    let c = load(&args.file)?;
    let gens = ideal_of(&c, args.ideal)?;
    let lin = linear_verdict(&gens, field)?;
    let (detail, witness, extra) = linear_parts(&lin);
    let mut r = file_report("linear", &args.file)
        .param("as", ideal_name(args.ideal))
        .param("field", field.to_string())
        .predicate("linear", lin.is_linear(), detail, extra);
    if let Some(w) = witness {
        r = r.witness(w);
    }
    Ok(r)
}

fn primes(args: &IdealArgs, unmixed_only: bool) -> Result<Report, CliError> {
    let c = load(&args.file)?;
    let gens = ideal_of(&c, args.ideal)?;
    let p = minimal_primes(&gens)?;
    let components: Vec<Vec<u32>> = p.components.iter().map(|&m| vertices(m).collect()).collect();
    let mut heights = p.heights();
    heights.sort_unstable();
    heights.dedup();
    let r = file_report(if unmixed_only { "unmixed" } else { "minimal-primes" }, &args.file)
        .param("as", ideal_name(args.ideal));
    if unmixed_only {
        let list = heights.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
        return Ok(r.predicate(
            "unmixed",
            heights.len() == 1,
            Some(format!("heights {list}")),
            json!({ "heights": heights }),
        ));
    }
    let mut r = r;
    r.verdict = json!({ "components": components, "unmixed": heights.len() == 1 });
    Ok(r
        .line(format!("minimal primes: {}", p.components.len()))
        .line(p.decomposition()))
}

fn shellable(file: &Path, budget: u64) -> Result<Report, CliError> {
    let c = load(file)?;
    let r = file_report("shellable", file).param("budget", budget);
    match is_shellable(&c, budget)? {
        Shelling::Shellable(order) => {
            let shown: Vec<String> = order.iter().map(|&f| format_set(f, c.n())).collect();
            let lists: Vec<Vec<u32>> = order.iter().map(|&f| vertices(f).collect()).collect();
            Ok(r.predicate("shellable", true, None, json!({ "order": lists }))
                .line(format!("order: {}", shown.join(", "))))
        }
        Shelling::NotShellable => Ok(r.predicate("shellable", false, None, json!({}))),
        Shelling::BudgetExhausted => Err(CliError::Budget(budget)),
    }
}

fn enumerate(args: &EnumerateArgs, field: FieldSpec) -> Result<Report, CliError> {
    let (n, d, m) = (args.n, args.d, args.facets);
    let r = Report::new("enumerate")
        .param("n", n)
        .param("d", d)
        .param("facets", m)
        .param("iso", args.iso)
        .param("classify", args.classify);
    if !args.iso && !args.classify {
        let mut r = r.line(format!("n {n}"));
        let mut all = Vec::new();
        for c in enumerate_pure(n, d, m)? {
            r = r.line(list_line(&c));
            all.push(facet_lists(&c));
        }
        r.verdict = json!({ "complexes": all });
        return Ok(r);
    }
    let predicates = if args.classify {
        Predicates {
            f: true,
            strong: true,
            well_distributed: true,
            cm: args.cm,
        }
    } else {
        Predicates {
            f: false,
            strong: false,
            well_distributed: false,
            cm: false,
        }
    };
    let options = ClassifyOptions {
        iso: args.iso,
        field,
        predicates,
        jobs: args.jobs,
    };
    let report = classify(n, d, m, &options)?;
    let classes: Option<Vec<Value>> = report.iso_classes.as_ref().map(|classes| {
        classes
            .iter()
            .map(|c| {
                json!({
                    "facets": facet_lists(&c.representative),
                    "orbit": c.orbit_size,
                    "f": c.verdicts.f,
                    "strong": c.verdicts.strong,
                    "well_distributed": c.verdicts.well_distributed,
                    "cm": c.verdicts.cm,
                })
            })
            .collect()
    });
    let num = |x: Option<u128>| x.map(|v| v.to_string());
    let mut r = r;
    r.verdict = json!({
        "total": report.total.to_string(),
        "f": num(report.f_count),
        "well_distributed": num(report.well_distributed_count),
        "strong": num(report.strong_count),
        "cm": num(report.cm_count),
        "iso_classes": classes,
        "exact_iso": report.exact_iso,
        "shards": report.shards.len(),
    });
    if args.classify {
        for line in report.to_string().lines() {
            r = r.line(line);
        }
    } else {
        let classes = report.iso_classes.as_deref().unwrap_or_default();
        r = r
            .line(format!("# {} complexes, {} iso classes", report.total, classes.len()))
            .line(format!("n {n}"));
        for class in classes {
            r = r
                .line(format!("# orbit {}", class.orbit_size))
                .line(list_line(&class.representative));
        }
    }
    if !report.exact_iso {
        r = r.line("note: canonical forms above 10 vertices are heuristic; classes may be split");
    }
    Ok(r)
}

/// One `.cxl` line.
fn list_line(c: &Complex) -> String {
    facet_lists(c)
        .iter()
        .map(|f| f.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(", ")
}

fn verify_paper(only: Option<&str>, dir: Option<&Path>, list: bool) -> (Vec<Report>, Outcome) {
    if list {
        let mut r = Report::new("verify");
        r.verdict = json!({ "checks": verify::CHECK_NAMES });
        for name in verify::CHECK_NAMES {
            r = r.line(*name);
        }
        return (vec![r], Ok(()));
    }
    let fixtures = match dir {
        Some(dir) => match Fixtures::from_dir(dir) {
            Ok(f) => f,
            Err(e) => return (Vec::new(), Err(e)),
        },
        None => Fixtures::embedded(),
    };
    let outcomes = match verify::run_suite(&fixtures, only) {
        Ok(o) => o,
        Err(e) => return (Vec::new(), Err(e)),
    };
    let total = outcomes.len();
    let failed = outcomes.iter().filter(|o| o.gating && !o.passed).count();
    let mut reports: Vec<Report> = outcomes.iter().map(verify::CheckOutcome::report).collect();
    let informative = outcomes.iter().filter(|o| !o.gating && !o.passed).count();
    let mut summary = Report::new("verify");
    summary.verdict = json!({
        "checks": total,
        "failed": failed,
        "informative_mismatches": informative,
        "passed": failed == 0,
    });
    let passed = total - failed - informative;
    let mut line = format!("{passed} of {total} checks passed");
    if informative > 0 {
        line.push_str(&format!(", {informative} informative mismatch (not gating)"));
    }
    summary = summary.line(line);
    reports.push(summary);
    let outcome = if failed == 0 {
        Ok(())
    } else {
        Err(CliError::VerifyFailed { failed, total })
    };
    (reports, outcome)
}
