//! Command-line front end. `run` maps every outcome to an exit code:
//! 0 success, 1 failed check or I/O error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exceptional as exc;
use crate::export::{self, to_json, Format, Kind};
use crate::nroots::NRootSpace;
use crate::qpar;
use crate::rootsys::{Family, RootSystem, SystemType};
use crate::special::{self, coxeter, qpoly, wn};
use crate::sweep::Sweep;
use crate::verify::{self, CheckRecord, Context, VerifyOptions};

const ALL_TYPES: [&str; 6] = ["D4", "D6", "D8", "D10", "E7", "E8"];

#[derive(Debug, Parser)]
#[command(name = "orthoroots", version, about = "Orthogonal root sets in types D, E7 and E8")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Args)]
struct Global {
    /// Root system type, e.g. D6 or E8.
    #[arg(long = "type", global = true, value_parser = parse_type)]
    stype: Option<SystemType>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Include the long E8 checks.
    #[arg(long, global = true)]
    full: bool,
    /// Seed for randomized tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

fn parse_type(s: &str) -> std::result::Result<SystemType, String> {
    SystemType::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Root system data.
    Roots {
        #[command(subcommand)]
        cmd: RootsCmd,
    },
    /// Positive n-roots.
    Nroots {
        #[command(subcommand)]
        cmd: NrootsCmd,
    },
    /// The quasiparabolic order.
    Qpar {
        #[command(subcommand)]
        cmd: QparCmd,
    },
    /// Macdonald representation bases.
    Macd {
        #[command(subcommand)]
        cmd: MacdCmd,
    },
    /// σ-classes, the nonnesting element, cyclic sieving.
    Special {
        #[command(subcommand)]
        cmd: SpecialCmd,
    },
    /// E7 and E8 structures.
    Exc {
        #[command(subcommand)]
        cmd: ExcCmd,
    },
    /// Run the verification suite (all types when --type is absent).
    Verify,
    /// Write one artifact.
    Export {
        #[arg(value_enum)]
        kind: Kind,
    },
}

#[derive(Debug, Subcommand)]
enum RootsCmd {
    Show,
}

#[derive(Debug, Subcommand)]
enum NrootsCmd {
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
enum Axiom {
    Qp1,
    Qp2,
    Levels,
    Scaled,
    Graded,
}

#[derive(Debug, Subcommand)]
enum QparCmd {
    Verify {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "qp1,qp2,levels")]
        axioms: Vec<Axiom>,
    },
    Hasse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    Noncrossing,
    Nonnesting,
    Both,
}

#[derive(Debug, Subcommand)]
enum MacdCmd {
    Basis {
        #[arg(long, value_enum, default_value = "both")]
        kind: BasisKind,
    },
    Cob,
}

#[derive(Debug, Subcommand)]
enum SpecialCmd {
    SigmaClasses,
    Wn,
    Csp,
    Heap,
}

#[derive(Debug, Subcommand)]
enum ExcCmd {
    Gamma {
        /// Print strongly regular parameters instead of the graph.
        #[arg(long)]
        certify_srg: bool,
    },
    /// The orthogonality graph on positive E8 roots.
    Orth,
    Fano {
        /// thetaC, thetaN, or an n-root ID in X_I.
        #[arg(long, default_value = "thetaC")]
        element: String,
    },
    Steiner,
    Hadamard,
    Compare,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.global.workers {
        pool = pool.num_threads(n as usize);
    }
    let outcome = match pool.build() {
        Ok(p) => p.install(|| dispatch(&cli)),
        Err(e) => Err(Error::Config(format!("thread pool: {e}"))),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::Config(_) | Error::Unsupported(..) => 2,
                Error::Invariant(_) | Error::Io { .. } => 1,
            }
        }
    }
}

impl Global {
    fn stype(&self) -> Result<SystemType> {
        self.stype.ok_or_else(|| Error::Usage("--type is required".into()))
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn emit(&self, text: &str) -> Result<()> {
        export::emit(self.out.as_deref(), text)
    }

    fn options(&self) -> VerifyOptions {
        VerifyOptions { full: self.full, seed: self.seed, ..Default::default() }
    }
}

fn require_family(t: SystemType, f: Family, what: &'static str) -> Result<()> {
    if t.family == f {
        Ok(())
    } else {
        Err(Error::Unsupported(t.name(), what))
    }
}

fn not_for(what: &str, f: Format) -> Error {
    Error::Usage(format!("{what} does not support --format {}", format!("{f:?}").to_lowercase()))
}

fn sweeps_out(g: &Global, sweeps: &[Sweep]) -> Result<bool> {
    let text = match g.format(Format::Text) {
        Format::Json => to_json(&json!(sweeps)),
        Format::Text => sweeps.iter().map(|s| s.summary() + "\n").collect(),
        f => return Err(not_for("this command", f)),
    };
    g.emit(&text)?;
    Ok(sweeps.iter().all(Sweep::pass))
}

fn dispatch(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::Roots { cmd: RootsCmd::Show } => {
            let rs = RootSystem::build(g.stype()?)?;
            let text = match g.format(Format::Text) {
                Format::Json => to_json(&export::rootsystem_json(&rs)),
                Format::Text => export::rootsystem_text(&rs),
                f => return Err(not_for("roots show", f)),
            };
            g.emit(&text)?;
            Ok(true)
        }
        Cmd::Nroots { cmd: NrootsCmd::List } => {
            let sp = NRootSpace::build(g.stype()?)?;
            let text = match g.format(Format::Text) {
                Format::Json => to_json(&export::nroots_json(&sp)),
                Format::Text => export::nroots_text(&sp),
                f => return Err(not_for("nroots list", f)),
            };
            g.emit(&text)?;
            Ok(true)
        }
        Cmd::Qpar { cmd } => qpar_cmd(g, cmd),
        Cmd::Macd { cmd } => macd_cmd(g, cmd),
        Cmd::Special { cmd } => special_cmd(g, cmd),
        Cmd::Exc { cmd } => exc_cmd(g, cmd),
        Cmd::Verify => verify_cmd(g),
        Cmd::Export { kind } => export_cmd(g, *kind),
    }
}

fn qpar_cmd(g: &Global, cmd: &QparCmd) -> Result<bool> {
    let sp = NRootSpace::build(g.stype()?)?;
    match cmd {
        QparCmd::Verify { axioms } => {
            let mut sweeps = Vec::new();
            for a in axioms.iter().unique() {
                sweeps.push(match a {
                    Axiom::Qp1 => qpar::verify_qp1(&sp),
                    Axiom::Qp2 => qpar::verify_qp2(&sp),
                    Axiom::Levels => qpar::level_change_laws(&sp),
                    Axiom::Scaled => qpar::verify_scaled(&sp),
                    Axiom::Graded => {
                        let qp = qpar::build_order(&sp)?;
                        qpar::relations_graded(&sp, &qp, &qp.reach())
                    }
                });
            }
            sweeps_out(g, &sweeps)
        }
        QparCmd::Hasse => {
            let qp = qpar::build_order(&sp)?;
            g.emit(&export::hasse(&qp, g.format(Format::Edges))?)?;
            Ok(true)
        }
    }
}

fn macd_cmd(g: &Global, cmd: &MacdCmd) -> Result<bool> {
    match cmd {
        MacdCmd::Basis { kind } => {
            let sp = NRootSpace::build(g.stype()?)?;
            let b = crate::macdonald::bases(&sp)?;
            let pick: Vec<(&str, &Vec<usize>)> = match kind {
                BasisKind::Noncrossing => vec![("noncrossing", &b.noncrossing)],
                BasisKind::Nonnesting => vec![("nonnesting", &b.nonnesting)],
                BasisKind::Both => vec![("noncrossing", &b.noncrossing), ("nonnesting", &b.nonnesting)],
            };
            let text = match g.format(Format::Text) {
                Format::Json => {
                    let mut v = serde_json::Map::new();
                    v.insert("type".into(), json!(sp.stype().name()));
                    for (name, ids) in &pick {
                        let recs: Vec<Value> = ids.iter().map(|&x| export::nroot_record(&sp, x)).collect();
                        v.insert((*name).into(), Value::Array(recs));
                    }
                    to_json(&Value::Object(v))
                }
                Format::Text => {
                    let mut out = String::new();
                    for (name, ids) in &pick {
                        let _ = writeln!(out, "# {name}: {}", ids.len());
                        for &x in ids.iter() {
                            out.push_str(&export::nroot_line(&sp, x));
                            out.push('\n');
                        }
                    }
                    out
                }
                f => return Err(not_for("macd basis", f)),
            };
            g.emit(&text)?;
            Ok(true)
        }
        MacdCmd::Cob => {
            let ctx = Context::build(g.stype()?)?;
            g.emit(&export::cob(&ctx, g.format(Format::Text))?)?;
            Ok(true)
        }
    }
}

fn special_cmd(g: &Global, cmd: &SpecialCmd) -> Result<bool> {
    let t = g.stype()?;
    let sp = NRootSpace::build(t)?;
    let qp = qpar::build_order(&sp)?;
    let fmt = g.format(Format::Text);
    if !matches!(fmt, Format::Json | Format::Text) {
        return Err(not_for("special", fmt));
    }
    let json_out = fmt == Format::Json;
    match cmd {
        SpecialCmd::SigmaClasses => {
            let classes = special::sigma_classes(&sp, &qp.reach())?;
            let polys = special::class_poincare(&qp, &classes);
            let text = if json_out {
                let recs: Vec<Value> = classes
                    .iter()
                    .zip(&polys)
                    .map(|(c, p)| {
                        json!({
                            "sigma": c.sigma,
                            "members": c.members,
                            "min_nonnesting": c.min_nonnesting,
                            "max_noncrossing": c.max_noncrossing,
                            "poincare": p.poly,
                            "factors": p.factors,
                        })
                    })
                    .collect();
                to_json(&Value::Array(recs))
            } else {
                let mut out = format!("# {} classes\n", classes.len());
                for (c, p) in classes.iter().zip(&polys) {
                    let _ = writeln!(
                        out,
                        "sigma {:?}  size {:>3}  nn {:>4}  nc {:>4}  {}",
                        c.sigma,
                        c.members.len(),
                        c.min_nonnesting,
                        c.max_noncrossing,
                        qpoly::render(&p.poly)
                    );
                }
                out
            };
            g.emit(&text)?;
            Ok(true)
        }
        SpecialCmd::Wn => {
            let w = wn::nonnesting_element(&sp, &qp)?;
            let text = if json_out {
                to_json(&json!({ "word": w.word, "length": w.word.len(), "chain": w.chain }))
            } else {
                w.word.iter().map(|i| format!("s{i}")).join(" ") + "\n"
            };
            g.emit(&text)?;
            Ok(true)
        }
        SpecialCmd::Csp => {
            let word = coxeter::standard_coxeter_word(t.rank);
            let ((_, dx), _) = special::poincare_closed_forms(t);
            let (rows, s) = coxeter::cyclic_sieving(&sp, &word, &dx)?;
            let text = if json_out {
                to_json(&json!({ "coxeter_word": word, "rows": rows, "pass": s.pass() }))
            } else {
                let mut out = format!("# c = {}\n", word.iter().map(|i| format!("s{i}")).join(" "));
                for r in &rows {
                    let e = if r.evaluation.abs() < 1e-9 { 0.0 } else { r.evaluation };
                    let _ = writeln!(out, "d={:<3} fixed {:>5}  PS_X(zeta^d) {e:>12.6}", r.power, r.fixed);
                }
                out + &s.summary() + "\n"
            };
            g.emit(&text)?;
            Ok(s.pass())
        }
        SpecialCmd::Heap => {
            let w = wn::nonnesting_element(&sp, &qp)?;
            let heap = wn::weak_interval_lattice(&sp, &qp, &w)?;
            let s = wn::heap_checks(&sp, &heap);
            let text = if json_out {
                to_json(&json!({ "heap": heap, "pass": s.pass() }))
            } else {
                let mut out = format!("# {} filters\n", heap.filters.len());
                for (f, img) in heap.filters.iter().zip(&heap.images) {
                    let _ = writeln!(out, "{f:0width$b} -> {img}", width = heap.word.len().max(1));
                }
                out + &s.summary() + "\n"
            };
            g.emit(&text)?;
            Ok(s.pass())
        }
    }
}

fn exc_cmd(g: &Global, cmd: &ExcCmd) -> Result<bool> {
    let t = g.stype.unwrap_or(match cmd {
        ExcCmd::Fano { .. } => SystemType::E7,
        _ => SystemType::E8,
    });
    match cmd {
        ExcCmd::Fano { element } => {
            require_family(t, Family::E7, "Fano labellings are defined in E7")?;
            let ctx = Context::build(t)?;
            let labels = exc::fano_labellings(&ctx.sp, &ctx.xi)?;
            let x = match element.as_str() {
                "thetaC" => ctx.qp.theta_c,
                "thetaN" => ctx.qp.theta_n,
                s => s.parse().map_err(|_| Error::Usage(format!("bad --element {s:?}")))?,
            };
            let l = labels
                .get(&x)
                .ok_or_else(|| Error::Usage(format!("n-root {x} is not alignment-free")))?;
            let text = match g.format(Format::Text) {
                Format::Json => to_json(&json!({ "element": x, "triples": l.render() })),
                Format::Text => l.render().join(" ") + "\n",
                f => return Err(not_for("exc fano", f)),
            };
            g.emit(&text)?;
            Ok(true)
        }
        _ => {
            require_family(t, Family::E8, "this structure is defined in E8")?;
            let sp = NRootSpace::build(t)?;
            let qp = qpar::build_order(&sp)?;
            let xi = qpar::alignment_free(&sp, &qp)?;
            match cmd {
                ExcCmd::Gamma { certify_srg: false } => {
                    g.emit(&export::graph(&exc::build_gamma(&sp, &xi)?, g.format(Format::Edges))?)?;
                    Ok(true)
                }
                ExcCmd::Gamma { certify_srg: true } => {
                    let p = exc::srg_certify(&exc::build_gamma(&sp, &xi)?)?;
                    let text = match g.format(Format::Text) {
                        Format::Json => to_json(&json!(p)),
                        _ => format!("SRG({}, {}, {}, {})\n", p.v, p.k, p.lambda, p.mu),
                    };
                    g.emit(&text)?;
                    Ok(true)
                }
                ExcCmd::Orth => {
                    g.emit(&export::graph(&exc::build_orthogonality_graph(&sp)?, g.format(Format::Edges))?)?;
                    Ok(true)
                }
                ExcCmd::Steiner => sweeps_out(g, &[exc::steiner_quadruple_systems(&sp)?]),
                ExcCmd::Hadamard => sweeps_out(g, &[exc::hadamard_check(&sp, qp.theta_c)?]),
                ExcCmd::Compare => {
                    let cmp = exc::distinguish_graphs(&exc::build_gamma(&sp, &xi)?, &exc::build_orthogonality_graph(&sp)?)?;
                    g.emit(&to_json(&json!(cmp)))?;
                    Ok(cmp.distinguished)
                }
                ExcCmd::Fano { .. } => unreachable!("handled above"),
            }
        }
    }
}

/// Per-type summary lines: checks, failures, and criteria covered.
pub fn summary(records: &[CheckRecord]) -> String {
    let mut out = String::new();
    for (t, group) in &records.iter().chunk_by(|r| r.stype.clone()) {
        let group: Vec<&CheckRecord> = group.collect();
        let failed: Vec<&str> = group.iter().filter(|r| !r.pass).map(|r| r.check.as_str()).collect();
        let crit = group.iter().filter_map(|r| r.criterion()).unique().sorted().join(",");
        let _ = writeln!(
            out,
            "{t}: {} checks, {} failed{} (criteria {crit})",
            group.len(),
            failed.len(),
            if failed.is_empty() { String::new() } else { format!(": {}", failed.join(" ")) }
        );
    }
    out
}

fn run_types(g: &Global) -> Result<Vec<CheckRecord>> {
    let types: Vec<SystemType> = match g.stype {
        Some(t) => vec![t],
        None => ALL_TYPES.iter().map(|s| SystemType::parse(s)).try_collect()?,
    };
    let mut records = Vec::new();
    for t in types {
        records.extend(verify::run_suite(t, &g.options())?);
    }
    Ok(records)
}

fn verify_cmd(g: &Global) -> Result<bool> {
    let records = run_types(g)?;
    g.emit(&export::report(&records, g.format(Format::Json))?)?;
    let s = summary(&records);
    if g.out.is_some() {
        print!("{s}");
    } else {
        eprint!("{s}");
    }
    Ok(verify::all_pass(&records))
}

fn export_cmd(g: &Global, kind: Kind) -> Result<bool> {
    let f = g.format(kind.default_format());
    let t = match kind {
        Kind::Gamma => g.stype.unwrap_or(SystemType::E8),
        Kind::Report => return verify_cmd(g),
        _ => g.stype()?,
    };
    let text = match kind {
        Kind::Rootsystem => {
            let rs = RootSystem::build(t)?;
            match f {
                Format::Json => to_json(&export::rootsystem_json(&rs)),
                Format::Text => export::rootsystem_text(&rs),
                _ => return Err(not_for("rootsystem", f)),
            }
        }
        Kind::Nroots => {
            let sp = NRootSpace::build(t)?;
            match f {
                Format::Json => to_json(&export::nroots_json(&sp)),
                Format::Text => export::nroots_text(&sp),
                _ => return Err(not_for("nroots", f)),
            }
        }
        Kind::Hasse => export::hasse(&qpar::build_order(&NRootSpace::build(t)?)?, f)?,
        Kind::Gamma => {
            require_family(t, Family::E8, "Γ is defined in E8")?;
            let sp = NRootSpace::build(t)?;
            let qp = qpar::build_order(&sp)?;
            let xi = qpar::alignment_free(&sp, &qp)?;
            export::graph(&exc::build_gamma(&sp, &xi)?, f)?
        }
        Kind::Bases => export::bases(&NRootSpace::build(t)?, f)?,
        Kind::Cob => export::cob(&Context::build(t)?, f)?,
        Kind::Report => unreachable!("handled above"),
    };
    g.emit(&text)?;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(run(["orthoroots", "--bogus"]), 2);
        assert_eq!(run(["orthoroots", "roots", "show", "--type", "D5"]), 2);
        assert_eq!(run(["orthoroots", "roots", "show", "--type", "X9"]), 2);
        assert_eq!(run(["orthoroots", "roots", "show"]), 2);
        assert_eq!(run(["orthoroots", "exc", "steiner", "--type", "E7"]), 2);
        assert_eq!(run(["orthoroots", "--version"]), 0);
    }

    #[test]
    fn summary_lines() {
        let recs = verify::run_suite(SystemType::d(4).unwrap(), &VerifyOptions::default()).unwrap();
        let s = summary(&recs);
        assert!(s.starts_with("D4: "), "{s}");
        assert!(s.contains(" 0 failed"), "{s}");
    }
}
