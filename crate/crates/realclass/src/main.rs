//! Command-line frontend: class counts, series coefficients, census runs,
//! polynomial tables, and the cross-layer verification suite, emitted as
//! machine-readable reports.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use realclass::census::{census_report, GroupSpec};
use realclass::count::{totals, CountReport};
use realclass::error::Error;
use realclass::ff::{canonical_nonsquare_units, norm_one_subgroup, prime_power_parts, Field};
use realclass::poly::{classify, enumerate_polys, PolyFilter};
use realclass::series::{gen_even_types, gen_real_classes, gen_theorem, IntSeries};
use realclass::verify::{run_verification, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "realclass",
    about = "Real conjugacy class counts for finite linear and unitary groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Real classes of the full groups.
    Real,
    /// Even-multiplicity type sums.
    Even,
    /// Real classes of the projective groups (equally, real classes
    /// contained in the determinant-one subgroups).
    Theorem,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gl,
    U,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    SelfReciprocal,
    SelfConjugate,
    ZetaSelfReciprocal,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form class counts for one (q, n).
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Generating-function coefficients up to a truncation order.
    Series {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 24)]
        order: usize,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Brute-force census of one small group.
    Census {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Enumeration and classification tables for monic polynomials.
    Polys {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        degree: usize,
        /// gl works over F_q, u over F_{q^2}.
        #[arg(long, value_enum, default_value_t = Kind::Gl)]
        ambient: Kind,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Cross-layer verification: formulas vs. series vs. census.
    Verify {
        #[arg(long, default_value_t = 15)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 4, 5, 7, 8, 9])]
        q: Vec<u64>,
        #[arg(long, default_value_t = 24)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn main() -> ExitCode {
    // restore default pipe semantics so `realclass ... | head` exits quietly
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> realclass::Result<ExitCode> {
    match cmd {
        Command::Count { q, n, format } => {
            prime_power_parts(q)?;
            let report = totals(q, n)?;
            print_count(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            q,
            order,
            which,
            format,
        } => {
            prime_power_parts(q)?;
            let (name, series) = match which {
                Which::Real => ("real", gen_real_classes(q, order)?),
                Which::Even => ("even", gen_even_types(q, order)?),
                Which::Theorem => ("theorem", gen_theorem(q, order)?),
            };
            print_series(q, name, &series, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { kind, n, q, format } => {
            let spec = match kind {
                Kind::Gl => GroupSpec::gl(n, q),
                Kind::U => GroupSpec::unitary(n, q),
            };
            let report = census_report(&spec)?;
            print_census(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Polys {
            q,
            degree,
            ambient,
            filter,
            format,
        } => {
            print_polys(q, degree, ambient, filter, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_n,
            q,
            order,
            format,
        } => {
            for &qq in &q {
                prime_power_parts(qq)?;
            }
            let opts = VerifyOptions {
                max_n,
                qs: q,
                order,
                ..VerifyOptions::default()
            };
            let checks = run_verification(&opts);
            let failed = print_verify(&checks, format);
            if failed > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_count(report: &CountReport, format: Format) {
    match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("q".into(), json!(report.q));
            obj.insert("n".into(), json!(report.n));
            obj.insert("gl_real".into(), json!(report.gl_real.to_string()));
            obj.insert("u_real".into(), json!(report.u_real.to_string()));
            obj.insert("in_sl".into(), json!(report.in_sl.to_string()));
            obj.insert("in_su".into(), json!(report.in_su.to_string()));
            obj.insert("pgl_real".into(), json!(report.pgl_real.to_string()));
            obj.insert("pgu_real".into(), json!(report.pgu_real.to_string()));
            let mut per_type = Map::new();
            for (nu, counts) in &report.per_type {
                per_type.insert(
                    nu.to_string(),
                    json!({
                        "real": counts.real.to_string(),
                        "sl": counts.sl.to_string(),
                        "pgl": counts.pgl.to_string(),
                    }),
                );
            }
            obj.insert("per_type".into(), Value::Object(per_type));
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("q,n,gl_real,u_real,in_sl,in_su,pgl_real,pgu_real");
            println!(
                "{},{},{},{},{},{},{},{}",
                report.q,
                report.n,
                report.gl_real,
                report.u_real,
                report.in_sl,
                report.in_su,
                report.pgl_real,
                report.pgu_real
            );
        }
        Format::Table => {
            println!("q = {}, n = {}", report.q, report.n);
            println!("real classes (GL = U):            {}", report.gl_real);
            println!("real classes in SL (= in SU):     {}", report.in_sl);
            println!("real classes of PGL (= of PGU):   {}", report.pgl_real);
            println!();
            println!("{:<16} {:>12} {:>12} {:>12}", "type", "real", "sl", "pgl");
            for (nu, counts) in &report.per_type {
                println!(
                    "{:<16} {:>12} {:>12} {:>12}",
                    nu.to_string(),
                    counts.real.to_string(),
                    counts.sl.to_string(),
                    counts.pgl.to_string()
                );
            }
        }
    }
}

fn print_series(q: u64, which: &str, series: &IntSeries, format: Format) {
    match format {
        Format::Json => {
            let coefficients: Vec<Value> = series
                .coeffs()
                .iter()
                .map(|c| json!(c.to_string()))
                .collect();
            let mut obj = Map::new();
            obj.insert("q".into(), json!(q));
            obj.insert("which".into(), json!(which));
            obj.insert("order".into(), json!(series.order()));
            obj.insert("coefficients".into(), Value::Array(coefficients));
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("n,coefficient");
            for (n, c) in series.coeffs().iter().enumerate() {
                println!("{n},{c}");
            }
        }
        Format::Table => {
            let joined: Vec<String> = series.coeffs().iter().map(BigInt::to_string).collect();
            println!("q = {q}, series = {which}, order = {}", series.order());
            println!("{}", joined.join(","));
        }
    }
}

fn print_census(report: &realclass::census::CensusReport, format: Format) {
    let kind = match report.spec.kind {
        realclass::census::GroupKind::GeneralLinear => "gl",
        realclass::census::GroupKind::Unitary => "u",
    };
    match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("kind".into(), json!(kind));
            obj.insert("n".into(), json!(report.spec.n));
            obj.insert("q".into(), json!(report.spec.q));
            obj.insert("group_order".into(), json!(report.group_order.to_string()));
            obj.insert("num_classes".into(), json!(report.num_classes));
            obj.insert("real_classes".into(), json!(report.real_classes));
            obj.insert("real_in_det_one".into(), json!(report.real_in_det_one));
            obj.insert("projective_real".into(), json!(report.projective_real));
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!(
                "kind,n,q,group_order,num_classes,real_classes,real_in_det_one,projective_real"
            );
            println!(
                "{},{},{},{},{},{},{},{}",
                kind,
                report.spec.n,
                report.spec.q,
                report.group_order,
                report.num_classes,
                report.real_classes,
                report.real_in_det_one,
                report.projective_real
            );
        }
        Format::Table => {
            let name = match report.spec.kind {
                realclass::census::GroupKind::GeneralLinear => "GL",
                realclass::census::GroupKind::Unitary => "U",
            };
            println!("{}({}, {})", name, report.spec.n, report.spec.q);
            println!("order:                 {}", report.group_order);
            println!("conjugacy classes:     {}", report.num_classes);
            println!("real classes:          {}", report.real_classes);
            println!("real in det-1 group:   {}", report.real_in_det_one);
            println!("projective real:       {}", report.projective_real);
        }
    }
}

fn print_polys(
    q: u64,
    degree: usize,
    ambient: Kind,
    filter: Filter,
    format: Format,
) -> realclass::Result<()> {
    prime_power_parts(q)?;
    let (field, zeta, ambient_name) = match ambient {
        Kind::Gl => {
            let field = Field::of_order(q)?;
            let zeta = canonical_nonsquare_units(&field).ok();
            (field, zeta, "gl")
        }
        Kind::U => {
            let group = norm_one_subgroup(q)?;
            let zeta = group.canonical_nonsquare().ok();
            (group.ambient().clone(), zeta, "u")
        }
    };
    let poly_filter = match filter {
        Filter::All => PolyFilter::All,
        Filter::SelfReciprocal => PolyFilter::SelfReciprocal,
        Filter::SelfConjugate => {
            if matches!(ambient, Kind::Gl) {
                return Err(Error::NotQuadraticExtension {
                    q,
                    order: field.order(),
                });
            }
            PolyFilter::SelfConjugate
        }
        Filter::ZetaSelfReciprocal => match &zeta {
            Some(z) => PolyFilter::ZetaSelfReciprocal(z.clone()),
            None => return Err(Error::EvenCharacteristic(q)),
        },
    };
    let filter_name = match filter {
        Filter::All => "all",
        Filter::SelfReciprocal => "self-reciprocal",
        Filter::SelfConjugate => "self-conjugate",
        Filter::ZetaSelfReciprocal => "zeta-self-reciprocal",
    };
    let polys = enumerate_polys(&field, degree, &poly_filter)?;
    let rows: Vec<(String, realclass::poly::PolyClassification)> = polys
        .iter()
        .map(|f| {
            let flags = classify(f, q, zeta.as_ref())?;
            Ok((f.to_string(), flags))
        })
        .collect::<realclass::Result<_>>()?;

    match format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(text, flags)| {
                    json!({
                        "poly": text,
                        "self_reciprocal": flags.self_reciprocal,
                        "self_conjugate": flags.self_conjugate,
                        "zeta_self_reciprocal": flags.zeta_self_reciprocal,
                    })
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("q".into(), json!(q));
            obj.insert("ambient".into(), json!(ambient_name));
            obj.insert("degree".into(), json!(degree));
            obj.insert("filter".into(), json!(filter_name));
            obj.insert(
                "zeta".into(),
                zeta.as_ref().map_or(Value::Null, |z| json!(z.to_string())),
            );
            obj.insert("count".into(), json!(rows.len()));
            obj.insert("polynomials".into(), Value::Array(list));
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("poly,self_reciprocal,self_conjugate,zeta_self_reciprocal");
            for (text, flags) in &rows {
                let opt = |b: Option<bool>| b.map_or(String::new(), |v| v.to_string());
                println!(
                    "{},{},{},{}",
                    csv_field(text),
                    flags.self_reciprocal,
                    opt(flags.self_conjugate),
                    opt(flags.zeta_self_reciprocal)
                );
            }
        }
        Format::Table => {
            println!(
                "field order {}, degree {degree}, filter {filter_name}, {} match(es){}",
                field.order(),
                rows.len(),
                zeta.as_ref()
                    .map(|z| format!(", zeta = {z}"))
                    .unwrap_or_default()
            );
            for (text, flags) in &rows {
                let mark = |b: Option<bool>| match b {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                };
                println!(
                    "{:<28} self-reciprocal: {:<3} self-conjugate: {:<3} zeta-fixed: {}",
                    text,
                    if flags.self_reciprocal { "yes" } else { "no" },
                    mark(flags.self_conjugate),
                    mark(flags.zeta_self_reciprocal)
                );
            }
        }
    }
    Ok(())
}

fn print_verify(checks: &[realclass::verify::Check], format: Format) -> usize {
    let failed = checks.iter().filter(|c| !c.passed).count();
    match format {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "params": c.params,
                        "status": if c.passed { "pass" } else { "fail" },
                        "detail": c.detail,
                    })
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("passed".into(), json!(checks.len() - failed));
            obj.insert("failed".into(), json!(failed));
            obj.insert("checks".into(), Value::Array(list));
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("name,params,status,detail");
            for c in checks {
                println!(
                    "{},{},{},{}",
                    csv_field(c.name),
                    csv_field(&c.params),
                    if c.passed { "pass" } else { "fail" },
                    csv_field(c.detail.as_deref().unwrap_or(""))
                );
            }
        }
        Format::Table => {
            for c in checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => println!("{status} {} ({}): {d}", c.name, c.params),
                    None => println!("{status} {} ({})", c.name, c.params),
                }
            }
            println!(
                "{} checks, {} passed, {} failed",
                checks.len(),
                checks.len() - failed,
                failed
            );
        }
    }
    failed
}
