//! Deterministic renderings of root systems, n-roots, orders, graphs and bases.

use std::fmt::Write as _;
use std::path::Path;

use itertools::Itertools;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exceptional::Graph;
use crate::macdonald::{self, ChangeOfBasis};
use crate::nroots::{matching_string, NRootSpace};
use crate::qpar::QPSet;
use crate::rootsys::RootSystem;
use crate::verify::{CheckRecord, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Rootsystem,
    Nroots,
    Hasse,
    Gamma,
    Bases,
    Cob,
    Report,
}

impl Kind {
    pub fn default_format(self) -> Format {
        match self {
            Kind::Hasse | Kind::Gamma => Format::Edges,
            Kind::Cob => Format::Text,
            _ => Format::Json,
        }
    }
}

fn unsupported(what: &str, f: Format) -> Error {
    Error::Usage(format!("{what} cannot be rendered as {f:?}").to_lowercase())
}

/// Pretty JSON with a trailing newline.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// n/d in lowest terms, always with a denominator.
pub fn ratio(n: i64, d: i64) -> String {
    let g = n.gcd(&d).max(1);
    let (n, d) = if d < 0 { (-n / g, -d / g) } else { (n / g, d / g) };
    format!("{n}/{d}")
}

/// Coordinates scaled so that the Euclidean product is the form B.
pub fn embedding_strings(rs: &RootSystem, v: &[i32]) -> Vec<String> {
    // form_den is 1 or 4, so the scale factor is 1 or 1/2
    let den = if rs.stype.form_den() == 4 { 2 } else { 1 };
    v.iter().map(|&c| ratio(c as i64, den)).collect()
}

pub fn rootsystem_json(rs: &RootSystem) -> Value {
    json!({
        "type": rs.stype.name(),
        "rank": rs.rank(),
        "gram": rs.gram,
        "roots": rs.positive_roots,
        "heights": rs.heights,
        "embedding": rs.embedding.iter().map(|v| embedding_strings(rs, v)).collect::<Vec<_>>(),
    })
}

pub fn rootsystem_text(rs: &RootSystem) -> String {
    let mut out = format!("# {} rank {} positive roots {}\n", rs.stype.name(), rs.rank(), rs.num_positive());
    for r in 0..rs.num_positive() {
        let _ = writeln!(
            out,
            "{r:>3} ht {:>2}  {}  ({})",
            rs.height(r),
            rs.root(r).iter().join(""),
            embedding_strings(rs, &rs.embedding[r]).join(", ")
        );
    }
    out
}

pub fn nroot_record(sp: &NRootSpace, x: usize) -> Value {
    let rs = &sp.rs;
    let comps = &sp.elems[x].components;
    let f = &sp.feats[x];
    let mut rec = json!({
        "id": x,
        "components": comps,
        "roots": comps.iter().map(|&c| rs.root(c)).collect::<Vec<_>>(),
        "coords": comps.iter().map(|&c| embedding_strings(rs, &rs.embedding[c])).collect::<Vec<_>>(),
        "counts": { "A": f.a, "C": f.c, "N": f.n },
        "level": sp.level(x),
        "sigma": sp.sigmas[x],
    });
    if let Ok(m) = sp.matching(x) {
        rec["matching"] = json!(m);
    }
    rec
}

pub fn nroots_json(sp: &NRootSpace) -> Value {
    Value::Array((0..sp.len()).map(|x| nroot_record(sp, x)).collect())
}

pub fn nroot_line(sp: &NRootSpace, x: usize) -> String {
    let f = &sp.feats[x];
    let body = match sp.matching(x) {
        Ok(m) => matching_string(&m),
        Err(_) => format!("{:?}", sp.elems[x].components),
    };
    format!("{x:>4}  A{} C{} N{}  level {:>2}  {body}", f.a, f.c, f.n, sp.level(x))
}

pub fn nroots_text(sp: &NRootSpace) -> String {
    (0..sp.len()).map(|x| nroot_line(sp, x) + "\n").collect()
}

pub fn hasse(qp: &QPSet, f: Format) -> Result<String> {
    match f {
        Format::Edges | Format::Text => Ok(qp.hasse_edges()),
        Format::Json => Ok(to_json(&json!({ "levels": qp.levels, "covers": qp.covers }))),
        Format::Dot => {
            let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
            for (x, l) in qp.levels.iter().enumerate() {
                let _ = writeln!(out, "  {x} [label=\"{x}\", level={l}];");
            }
            for (u, v) in &qp.covers {
                let _ = writeln!(out, "  {u} -> {v};");
            }
            out.push_str("}\n");
            Ok(out)
        }
    }
}

pub fn graph(g: &Graph, f: Format) -> Result<String> {
    match f {
        Format::Edges | Format::Text => Ok(g.edge_list()),
        Format::Dot => Ok(g.dot()),
        Format::Json => Ok(to_json(&json!({
            "source": g.source,
            "vertices": g.labels,
            "edges": g.edges(),
        }))),
    }
}

pub fn bases(sp: &NRootSpace, f: Format) -> Result<String> {
    let b = macdonald::bases(sp)?;
    match f {
        Format::Json => Ok(to_json(&json!({
            "type": sp.stype().name(),
            "noncrossing": b.noncrossing.iter().map(|&x| nroot_record(sp, x)).collect::<Vec<_>>(),
            "nonnesting": b.nonnesting.iter().map(|&x| nroot_record(sp, x)).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut out = String::new();
            for (name, ids) in [("noncrossing", &b.noncrossing), ("nonnesting", &b.nonnesting)] {
                let _ = writeln!(out, "# {name}: {}", ids.len());
                for &x in ids.iter() {
                    out.push_str(&nroot_line(sp, x));
                    out.push('\n');
                }
            }
            Ok(out)
        }
        _ => Err(unsupported("bases", f)),
    }
}

pub fn cob_of(ctx: &Context) -> Result<ChangeOfBasis> {
    let order = macdonald::sigma_compatible_order(&ctx.sp, &ctx.nc.basis);
    macdonald::change_of_basis(&ctx.sp, &ctx.nc, &ctx.nn, &order)
}

pub fn cob(ctx: &Context, f: Format) -> Result<String> {
    let c = cob_of(ctx)?;
    match f {
        Format::Json => Ok(to_json(&json!({
            "type": ctx.sp.stype().name(),
            "layout": "row-major; entry [i][j] is the coefficient of noncrossing[i] in nonnesting[j]",
            "noncrossing": c.noncrossing,
            "nonnesting": c.nonnesting,
            "sigma": c.noncrossing.iter().map(|&x| &ctx.sp.sigmas[x]).collect::<Vec<_>>(),
            "matrix": c.matrix,
            "inverse": c.inverse,
        }))),
        Format::Text => {
            let mut out = format!("# noncrossing order: {}\n", c.noncrossing.iter().join(" "));
            let _ = writeln!(out, "# nonnesting order: {}", c.nonnesting.iter().join(" "));
            for row in &c.matrix {
                out.push_str(&row.iter().join(" "));
                out.push('\n');
            }
            Ok(out)
        }
        _ => Err(unsupported("cob", f)),
    }
}

pub fn report(records: &[CheckRecord], f: Format) -> Result<String> {
    match f {
        Format::Json => Ok(to_json(&json!(records))),
        Format::Text => Ok(records.iter().map(|r| r.line() + "\n").collect()),
        _ => Err(unsupported("report", f)),
    }
}

/// Write to a path, or standard output when none is given.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.to_path_buf(), source }),
        None => {
            use std::io::Write;
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes())
                .and_then(|_| o.flush())
                .map_err(|source| Error::Io { path: "<stdout>".into(), source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SystemType;

    #[test]
    fn ratios() {
        assert_eq!(ratio(2, 2), "1/1");
        assert_eq!(ratio(-1, 2), "-1/2");
        assert_eq!(ratio(0, 2), "0/1");
        assert_eq!(ratio(3, -6), "-1/2");
    }

    #[test]
    fn e_embedding_matches_form() {
        let rs = RootSystem::build(SystemType::E7).unwrap();
        for a in 0..rs.num_positive() {
            let v: Vec<f64> = embedding_strings(&rs, &rs.embedding[a])
                .iter()
                .map(|s| {
                    let (p, q) = s.split_once('/').unwrap();
                    p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap()
                })
                .collect();
            let n: f64 = v.iter().map(|x| x * x).sum();
            assert_eq!(n, 2.0);
        }
    }

    #[test]
    fn hasse_header() {
        let ctx = Context::build(SystemType::d(6).unwrap()).unwrap();
        let h = hasse(&ctx.qp, Format::Edges).unwrap();
        let first = h.lines().next().unwrap();
        assert!(first.starts_with("# levels: "));
        assert_eq!(first.split_whitespace().count() - 2, 15);
        assert!(bases(&ctx.sp, Format::Dot).is_err());
    }
}
