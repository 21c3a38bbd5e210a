//! The verification suite: one record per check, grouped by criterion.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exceptional as exc;
use crate::fixtures;
use crate::invariants as inv;
use crate::macdonald::{self, ExpansionTable, MacElement, Rewriter, Target};
use crate::nroots::NRootSpace;
use crate::poset::Reach;
use crate::qpar::{self, QPSet, XISet};
use crate::rootsys::{Family, SystemType};
use crate::special::{self, coxeter, qpoly, wn, SigmaClass};
use crate::sweep::Sweep;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    #[serde(rename = "type")]
    pub stype: String,
    pub parameters: Value,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl CheckRecord {
    pub fn criterion(&self) -> Option<u64> {
        self.parameters.get("criterion").and_then(Value::as_u64)
    }

    pub fn line(&self) -> String {
        format!(
            "{} {:<28} {:<4} {:>8.3}s  actual={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.stype,
            self.elapsed,
            self.actual
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Run the long E8 checks as well.
    pub full: bool,
    pub seed: u64,
    /// Randomized strategies and elements per strategy for confluence.
    pub strategies: usize,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { full: false, seed: 0, strategies: 100, samples: 100 }
    }
}

/// Everything derived once per type and shared by the checks.
pub struct Context {
    pub sp: NRootSpace,
    pub qp: QPSet,
    pub reach: Reach,
    pub xi: XISet,
    pub nc: ExpansionTable,
    pub nn: ExpansionTable,
    pub classes: Vec<SigmaClass>,
}

impl Context {
    pub fn build(t: SystemType) -> Result<Self> {
        let sp = NRootSpace::build(t)?;
        Self::from_space(sp)
    }

    pub fn from_space(sp: NRootSpace) -> Result<Self> {
        let qp = qpar::build_order(&sp)?;
        let reach = qp.reach();
        let xi = qpar::alignment_free(&sp, &qp)?;
        let (nc, nn) = {
            let rw = Rewriter::new(&sp)?;
            (ExpansionTable::build(&rw, Target::Noncrossing)?, ExpansionTable::build(&rw, Target::Nonnesting)?)
        };
        let classes = special::sigma_classes(&sp, &reach)?;
        Ok(Context { sp, qp, reach, xi, nc, nn, classes })
    }
}

struct Suite {
    stype: String,
    records: Vec<CheckRecord>,
}

type Outcome = (bool, Value, Value);

impl Suite {
    fn run(&mut self, criterion: u32, check: &str, params: Value, f: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let (pass, expected, actual) = match f() {
            Ok(o) => o,
            Err(e) => (false, Value::Null, json!(e.to_string())),
        };
        let mut parameters = json!({ "criterion": criterion });
        if let (Value::Object(p), Value::Object(extra)) = (&mut parameters, params) {
            p.extend(extra);
        }
        self.records.push(CheckRecord {
            check: check.into(),
            stype: self.stype.clone(),
            parameters,
            pass,
            expected,
            actual,
            elapsed: start.elapsed().as_secs_f64(),
        });
    }

    fn sweep(&mut self, criterion: u32, check: &str, f: impl FnOnce() -> Result<Sweep>) {
        self.run(criterion, check, json!({}), || {
            let s = f()?;
            Ok((s.pass(), json!({ "failures": 0 }), sweep_json(&s)))
        });
    }

    fn skipped(&mut self, criterion: u32, check: &str, why: &str) {
        self.run(criterion, check, json!({ "skipped": true }), || {
            Ok((true, Value::Null, json!(format!("skipped: {why}"))))
        });
    }
}

fn sweep_json(s: &Sweep) -> Value {
    json!({
        "checked": s.checked,
        "vacuous": s.vacuous,
        "failures": s.failures,
        "witnesses": s.witnesses,
    })
}

fn eq<T: Serialize + PartialEq>(expected: T, actual: T) -> Result<Outcome> {
    Ok((expected == actual, json!(expected), json!(actual)))
}

fn sorted_rows(sp: &NRootSpace, x: usize) -> Vec<Vec<i32>> {
    let mut v: Vec<Vec<i32>> = sp.elems[x].components.iter().map(|&c| sp.rs.root(c).to_vec()).collect();
    v.sort();
    v
}

/// Run every applicable check for one type.
pub fn run_suite(t: SystemType, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let mut suite = Suite { stype: t.name(), records: Vec::new() };

    let start = Instant::now();
    let sp = NRootSpace::build(t)?;
    let enum_secs = start.elapsed().as_secs_f64();
    suite.run(1, "nroot_count", json!({ "seconds_limit": 5 }), || {
        let want = fixtures::nroot_count(t).unwrap_or(sp.len());
        Ok((sp.len() == want && enum_secs < 5.0, json!(want), json!(sp.len())))
    });

    suite.sweep(2, "qp1", || Ok(qpar::verify_qp1(&sp)));
    suite.sweep(2, "qp2", || Ok(qpar::verify_qp2(&sp)));
    suite.sweep(2, "scaled_set", || Ok(qpar::verify_scaled(&sp)));
    suite.sweep(2, "level_change_laws", || Ok(qpar::level_change_laws(&sp)));

    let ctx = Context::from_space(sp)?;
    let Context { sp, qp, reach, xi, nc, nn, classes } = &ctx;
    let m = t.quadruple_count();
    let dim = t.dimension();

    suite.sweep(3, "feature_total", || Ok(inv::feature_total(sp)));
    suite.run(3, "height_square_sum", json!({}), || {
        let (c, s) = inv::square_sum_constant(sp);
        Ok((s.pass(), json!("constant"), json!({ "value": c, "sweep": sweep_json(&s) })))
    });
    suite.sweep(3, "classifier_oracle", || Ok(inv::classifier_oracle(sp)));
    suite.sweep(3, "quadruple_overlap", || Ok(inv::quadruple_overlaps(sp)));
    suite.sweep(3, "maximal_orthogonal", || Ok(inv::maximality(sp)));

    suite.run(4, "extremals", json!({}), || {
        let got: Vec<Vec<Vec<i32>>> =
            [qp.theta_a, qp.theta_c, qp.theta_n].iter().map(|&x| sorted_rows(sp, x)).collect();
        let want: Vec<Vec<Vec<i32>>> = match fixtures::exceptional_extremals(t) {
            Some(w) => w.to_vec(),
            None => fixtures::d_extremal_matchings(t.half_rank())
                .iter()
                .map(|mm| Ok(sorted_rows(sp, sp.id_of_matching(mm)?)))
                .collect::<Result<_>>()?,
        };
        eq(want, got)
    });

    suite.run(5, "basis_sizes", json!({}), || {
        eq(vec![dim, dim], vec![nc.basis.len(), nn.basis.len()])
    });
    if t.family == Family::E8 && !opts.full {
        suite.skipped(5, "polynomial_oracle", "E8 oracle runs under --full");
    } else {
        suite.sweep(5, "polynomial_oracle", || macdonald::oracle_equivalence(sp, nc));
    }
    suite.sweep(5, "noncrossing_odd_heights", || Ok(inv::noncrossing_odd_heights(sp)));

    suite.run(
        6,
        "confluence",
        json!({ "seed": opts.seed, "strategies": opts.strategies, "samples": opts.samples }),
        || {
            let s = confluence(sp, nc, nn, opts)?;
            Ok((s.pass(), json!({ "failures": 0 }), sweep_json(&s)))
        },
    );

    suite.sweep(7, "sign_coherence", || Ok(macdonald::sign_coherence_check(nc)));
    suite.sweep(7, "theta_c_maximal", || Ok(macdonald::maximal_in_b_order(nc, qp.theta_c)));
    if t.is_d() {
        suite.run(7, "theta_c_coefficient_sum", json!({}), || {
            let euler = macdonald::euler_numbers(t.half_rank() + 1);
            let want = fixtures::theta_c_coefficient_sum(t).unwrap_or(euler[t.half_rank() + 1] as i64);
            eq(want, nc.rows[qp.theta_c].iter().sum::<i64>())
        });
    }

    suite.run(8, "change_of_basis", json!({}), || {
        let order = macdonald::sigma_compatible_order(sp, &nc.basis);
        let cob = macdonald::change_of_basis(sp, nc, nn, &order)?;
        let uni = crate::linalg::is_upper_unitriangular(&cob.matrix);
        let ident = crate::linalg::is_identity(&crate::linalg::matmul(&cob.matrix, &cob.inverse));
        Ok((
            uni && ident,
            json!({ "size": dim, "unitriangular": true, "inverse_identity": true }),
            json!({ "size": cob.matrix.len(), "unitriangular": uni, "inverse_identity": ident }),
        ))
    });

    let wn_el = wn::nonnesting_element(sp, qp);
    suite.run(9, "wn_word", json!({}), || {
        let w = wn_el.as_ref().map_err(clone_err)?.clone();
        let want = fixtures::wn_word(t);
        let ok = wn::commutation_equivalent(&sp.rs, &w.word, &want);
        Ok((ok, json!({ "word": want, "length": m }), json!({ "word": w.word, "length": w.word.len() })))
    });
    suite.sweep(9, "wn_properties", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        wn::wn_checks(sp, qp, &wn_el.as_ref().map_err(clone_err)?.clone(), 20, &mut rng)
    });
    suite.run(9, "heap_filters", json!({}), || {
        let heap = wn::weak_interval_lattice(sp, qp, &wn_el.as_ref().map_err(clone_err)?.clone())?;
        let s = wn::heap_checks(sp, &heap);
        Ok((s.pass(), json!(dim), json!({ "filters": heap.filters.len(), "sweep": sweep_json(&s) })))
    });

    suite.sweep(10, "sigma_classes", || Ok(special::class_structure_checks(sp, classes, xi)));
    let exhaustive = t.family != Family::E8 || opts.full;
    suite.run(10, "eulerian_iff_class", json!({ "exhaustive": exhaustive }), || {
        let s = special::mobius_eulerian_check(sp, qp, reach, classes, exhaustive);
        Ok((s.pass(), json!({ "failures": 0 }), sweep_json(&s)))
    });
    suite.run(10, "xi_size", json!({}), || eq(fixtures::xi_size(t), xi.members.len()));
    suite.sweep(10, "xi_parity", || Ok(qpar::xi_parity_checks(sp, xi)));
    suite.sweep(10, "poset_congruence", || Ok(special::congruence_check(sp, qp, reach, classes)));
    suite.sweep(10, "sigma_reflection_law", || Ok(special::sigma_reflection_law(sp)));

    suite.run(11, "poincare", json!({}), || {
        let polys = special::class_poincare(qp, classes);
        let s = special::poincare_check(sp, qp, xi, &polys);
        let ((_, dx), (sx, dxi)) = special::poincare_closed_forms(t);
        Ok((
            s.pass(),
            json!({ "PS_X": dx, "PS_X_I": { "shift": sx, "factors": dxi } }),
            json!({
                "PS_X": qpoly::render(&qp.level_poly(0..sp.len())),
                "PS_X_I": qpoly::render(&qp.level_poly(xi.members.iter().copied())),
                "sweep": sweep_json(&s),
            }),
        ))
    });

    let word = coxeter::standard_coxeter_word(t.rank);
    if t.family == Family::E8 && !opts.full {
        suite.skipped(12, "cyclic_sieving", "E8 sieving runs under --full");
    } else {
        suite.run(12, "cyclic_sieving", json!({ "coxeter_word": word }), || {
            let ((_, dx), _) = special::poincare_closed_forms(t);
            let (rows, s) = coxeter::cyclic_sieving(sp, &word, &dx)?;
            Ok((s.pass(), json!({ "failures": 0 }), json!({ "rows": rows, "sweep": sweep_json(&s) })))
        });
    }
    suite.run(12, "coxeter_cover", json!({ "coxeter_word": word }), || {
        let orbit = if t.is_d() {
            Some(coxeter::coxeter_orbit(sp, &word, qp.theta_n)?)
        } else {
            coxeter::find_covering_seed(sp, &word)?
        };
        let ok = orbit.as_ref().is_some_and(|o| o.covers_all && o.elems.len() == t.coxeter_number() / 2);
        Ok((
            ok,
            json!({ "covers_all": true, "orbit_size": t.coxeter_number() / 2 }),
            json!(orbit.map(|o| json!({ "seed": o.seed, "covers_all": o.covers_all, "orbit_size": o.elems.len() }))),
        ))
    });

    match t.family {
        Family::E7 => e7_checks(&mut suite, &ctx),
        Family::E8 => e8_checks(&mut suite, &ctx),
        Family::D => {
            suite.sweep(15, "phi_action", || inv::phi_action_typed(sp));
            if (3..=5).contains(&t.half_rank()) {
                suite.sweep(15, "bruhat_isomorphism", || qpar::bruhat_iso_typeD(sp, qp, reach, xi));
            }
        }
    }

    suite.sweep(2, "relations_graded", || Ok(qpar::relations_graded(sp, qp, reach)));
    suite.sweep(2, "abstract_characterizations", || Ok(qpar::abstract_characterizations(sp, qp)));
    suite.sweep(2, "action_composes", || inv::action_composes(sp));
    Ok(suite.records)
}

fn e7_checks(suite: &mut Suite, ctx: &Context) {
    let Context { sp, qp, xi, .. } = ctx;
    let labels = exc::fano_labellings(sp, xi);
    suite.run(13, "fano_bijection", json!({}), || {
        let l = labels.as_ref().map_err(clone_err)?;
        eq(30, l.len())
    });
    suite.run(13, "fano_extremals", json!({}), || {
        let l = labels.as_ref().map_err(clone_err)?;
        let want = [exc::FanoLabelling::from_strs(&fixtures::FANO_LC), exc::FanoLabelling::from_strs(&fixtures::FANO_LN)];
        let got = [l[&qp.theta_c].clone(), l[&qp.theta_n].clone()];
        let rows_ok = exc::rows_match(sp, qp.theta_c, &exc::E7_MC);
        Ok((
            want == got && rows_ok,
            json!([want[0].render(), want[1].render()]),
            json!([got[0].render(), got[1].render()]),
        ))
    });
    suite.sweep(13, "fano_xor", || Ok(exc::xor_unique(labels.as_ref().map_err(clone_err)?, qp.theta_n)));
    suite.run(13, "fano_same_parity", json!({}), || {
        let (table, s) = exc::labelling_pair_intersections(labels.as_ref().map_err(clone_err)?, xi);
        Ok((s.pass(), json!({ "1": 210 }), json!(table)))
    });
    suite.sweep(13, "fano_level", || Ok(exc::e7_level_formula(qp, labels.as_ref().map_err(clone_err)?)));
    suite.sweep(13, "fano_equivariance", || Ok(exc::fano_equivariance(sp, labels.as_ref().map_err(clone_err)?)));
}

fn e8_checks(suite: &mut Suite, ctx: &Context) {
    let Context { sp, qp, xi, .. } = ctx;
    suite.sweep(14, "steiner_s348", || exc::steiner_quadruple_systems(sp));
    suite.sweep(14, "triple_completion", || Ok(inv::triple_completion(sp)));
    suite.sweep(14, "hadamard", || exc::hadamard_check(sp, qp.theta_c));
    let graphs = exc::build_gamma(sp, xi).and_then(|g| Ok((g, exc::build_orthogonality_graph(sp)?)));
    let srg = fixtures::SRG_E8;
    let srg_json = json!({ "v": srg.0, "k": srg.1, "lambda": srg.2, "mu": srg.3 });
    suite.run(14, "srg_gamma", json!({}), || {
        let (g, _) = graphs.as_ref().map_err(clone_err)?;
        let p = exc::srg_certify(g)?;
        Ok(((p.v, p.k, p.lambda, p.mu) == srg, srg_json.clone(), json!(p)))
    });
    suite.run(14, "srg_orthogonality", json!({}), || {
        let (_, o) = graphs.as_ref().map_err(clone_err)?;
        let p = exc::srg_certify(o)?;
        Ok(((p.v, p.k, p.lambda, p.mu) == srg, srg_json.clone(), json!(p)))
    });
    suite.sweep(14, "orthogonality_cliques", || {
        let (_, o) = graphs.as_ref().map_err(clone_err)?;
        Ok(exc::orth_cliques_are_nroots(sp, o))
    });
    suite.run(14, "same_parity_overlap", json!({}), || {
        let (g, _) = graphs.as_ref().map_err(clone_err)?;
        let (hist, s) = exc::same_parity_overlaps(sp, xi, g);
        Ok((s.pass(), json!([0, 2, 8]), json!(hist)))
    });
    suite.run(14, "edge_invariant", json!({ "statistic": "5-cliques through an edge" }), || {
        let (g, o) = graphs.as_ref().map_err(clone_err)?;
        let cmp = exc::distinguish_graphs(g, o)?;
        let ok = cmp.distinguished && cmp.gamma_cliques == fixtures::E8_CLIQUES && cmp.orth_cliques == fixtures::E8_CLIQUES;
        Ok((
            ok,
            json!({ "gamma_values": ">= 2", "orth_values": 1, "cliques": [2025, 2025] }),
            json!(cmp),
        ))
    });
}

fn clone_err(e: &Error) -> Error {
    Error::Invariant(e.to_string())
}

/// Random strategies on random small combinations agree with the table.
pub fn confluence(sp: &NRootSpace, nc: &ExpansionTable, nn: &ExpansionTable, opts: &VerifyOptions) -> Result<Sweep> {
    use rayon::prelude::*;
    let rw = Rewriter::new(sp)?;
    let parts: Vec<Sweep> = (0..opts.strategies)
        .into_par_iter()
        .map(|k| {
            let mut s = Sweep::new("confluence");
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(1_000_003).wrapping_add(k as u64));
            let (t, table) = if k % 2 == 0 { (Target::Noncrossing, nc) } else { (Target::Nonnesting, nn) };
            for _ in 0..opts.samples {
                let mut e = MacElement::zero();
                let mut want = MacElement::zero();
                for _ in 0..rng.gen_range(1..=3) {
                    let x = rng.gen_range(0..sp.len());
                    let c = rng.gen_range(-3..=3);
                    e.add_term(x, c);
                    want.add(&table.element(x), c);
                }
                let got = rw.normalize_random(t, &e, &mut rng);
                s.check(got == want, || format!("strategy {k}: {:?}", e.terms));
            }
            s
        })
        .collect();
    Ok(parts.into_iter().fold(Sweep::new("confluence"), Sweep::merge))
}

pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d6_suite() {
        let r = run_suite(SystemType::d(6).unwrap(), &VerifyOptions::default()).unwrap();
        for rec in &r {
            assert!(rec.pass, "{}", rec.line());
        }
        assert!(r.len() >= 25, "{} checks", r.len());
        let crit: std::collections::BTreeSet<u64> = r.iter().filter_map(CheckRecord::criterion).collect();
        let want: std::collections::BTreeSet<u64> = (1..=12).chain([15]).collect();
        assert_eq!(crit, want);
    }
}
