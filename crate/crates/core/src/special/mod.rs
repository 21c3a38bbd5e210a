//! Component sums, σ-classes and their level polynomials, plus the nonnesting
//! element w_N and Coxeter orbits (see [`wn`] and [`coxeter`]).

pub mod coxeter;
pub mod qpoly;
pub mod wn;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::macdonald::sigma_leq;
use crate::nroots::NRootSpace;
use crate::poset::{is_eulerian, Reach};
use crate::qpar::{QPSet, XISet};
use crate::rootsys::{Coeffs, Family, SystemType};
use crate::sweep::{par_sweep, Sweep};

pub use coxeter::{coxeter_orbit, cyclic_sieving, find_covering_seed, CoxeterOrbit};
pub use wn::{nonnesting_element, weak_interval_lattice, HeapLattice, NonnestingElement};

/// Sum of the components of x in simple-root coordinates.
pub fn sigma(sp: &NRootSpace, x: usize) -> &Coeffs {
    &sp.sigmas[x]
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaClass {
    pub sigma: Coeffs,
    pub members: Vec<usize>,
    pub min_nonnesting: usize,
    pub max_noncrossing: usize,
}

impl SigmaClass {
    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

/// Partition of X by σ. Each class must hold one nonnesting and one
/// noncrossing element and equal the interval between them.
pub fn sigma_classes(sp: &NRootSpace, reach: &Reach) -> Result<Vec<SigmaClass>> {
    let mut groups: BTreeMap<&Coeffs, Vec<usize>> = BTreeMap::new();
    for x in 0..sp.len() {
        groups.entry(&sp.sigmas[x]).or_default().push(x);
    }
    let mut groups: Vec<(Coeffs, Vec<usize>)> =
        groups.into_iter().map(|(s, m)| (s.clone(), m)).collect();
    groups.sort_by_key(|(s, _)| (s.iter().sum::<i32>(), s.clone()));
    groups
        .into_par_iter()
        .map(|(sigma, members)| {
            let nn: Vec<usize> = members.iter().copied().filter(|&x| sp.feats[x].n == 0).collect();
            let nc: Vec<usize> = members.iter().copied().filter(|&x| sp.feats[x].c == 0).collect();
            let (&[lo], &[hi]) = (nn.as_slice(), nc.as_slice()) else {
                return Err(Error::Invariant(format!(
                    "σ={sigma:?}: {} nonnesting and {} noncrossing members",
                    nn.len(),
                    nc.len()
                )));
            };
            let interval: Vec<usize> = reach.interval(lo, hi).iter().collect();
            if interval != members {
                return Err(Error::Invariant(format!(
                    "σ={sigma:?}: class of size {} is not the interval [{lo}, {hi}] of size {}",
                    members.len(),
                    interval.len()
                )));
            }
            Ok(SigmaClass { sigma, members, min_nonnesting: lo, max_noncrossing: hi })
        })
        .collect()
}

/// Class count equals the dimension, and X_I is the unique σ-maximal class.
pub fn class_structure_checks(sp: &NRootSpace, classes: &[SigmaClass], xi: &XISet) -> Sweep {
    let mut s = Sweep::new("sigma_classes");
    let dim = sp.stype().dimension();
    s.check(classes.len() == dim, || format!("{} classes, dimension {dim}", classes.len()));
    let top: Vec<&SigmaClass> = classes
        .iter()
        .filter(|c| !classes.iter().any(|d| d.sigma != c.sigma && sigma_leq(&c.sigma, &d.sigma)))
        .collect();
    s.check(top.len() == 1 && top[0].members == xi.members, || {
        format!("σ-maximal classes: {:?}", top.iter().map(|c| &c.sigma).collect::<Vec<_>>())
    });
    for c in classes {
        s.check(
            c.is_singleton() == (c.min_nonnesting == c.max_noncrossing),
            || format!("σ={:?}: singleton mismatch", c.sigma),
        );
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassPoly {
    pub sigma: Coeffs,
    pub poly: qpoly::QPoly,
    /// (s, D) with poly = q^s prod_{d in D} [d]_q, when such a form exists.
    pub factors: Option<(usize, Vec<usize>)>,
}

pub fn class_poincare(qp: &QPSet, classes: &[SigmaClass]) -> Vec<ClassPoly> {
    classes
        .iter()
        .map(|c| {
            let poly = qp.level_poly(c.members.iter().copied());
            let factors = qpoly::factor_shifted_qints(&poly);
            ClassPoly { sigma: c.sigma.clone(), poly, factors }
        })
        .collect()
}

/// Closed forms (shift, d's) of PS_X and PS_{X_I}.
pub fn poincare_closed_forms(t: SystemType) -> ((usize, Vec<usize>), (usize, Vec<usize>)) {
    let m = t.quadruple_count();
    match t.family {
        Family::D => {
            let k = t.half_rank();
            ((0, (2..=k).map(|i| 2 * i - 1).collect()), (m, (2..=k).collect()))
        }
        Family::E7 => ((0, vec![3, 5, 9]), (m, vec![2, 3, 5])),
        Family::E8 => ((0, vec![3, 5, 9, 15]), (m, vec![2, 3, 5, 8])),
    }
}

pub fn poincare_check(sp: &NRootSpace, qp: &QPSet, xi: &XISet, polys: &[ClassPoly]) -> Sweep {
    let mut s = Sweep::new("poincare");
    let ((s0, d0), (s1, d1)) = poincare_closed_forms(sp.stype());
    let ps_x = qp.level_poly(0..sp.len());
    let want_x = qpoly::product_form(s0, &d0);
    s.check(ps_x == want_x, || format!("PS_X = {} expected {}", qpoly::render(&ps_x), qpoly::render(&want_x)));
    let ps_xi = qp.level_poly(xi.members.iter().copied());
    let want_xi = qpoly::product_form(s1, &d1);
    s.check(ps_xi == want_xi, || {
        format!("PS_X_I = {} expected {}", qpoly::render(&ps_xi), qpoly::render(&want_xi))
    });
    for p in polys {
        s.check(p.factors.is_some(), || {
            format!("σ={:?}: {} does not factor", p.sigma, qpoly::render(&p.poly))
        });
    }
    s
}

/// For x nonnesting, y noncrossing, x <= y: [x, y] is Eulerian exactly when
/// it is a σ-class. With `exhaustive` false only the classes themselves are tested.
pub fn mobius_eulerian_check(
    sp: &NRootSpace,
    qp: &QPSet,
    reach: &Reach,
    classes: &[SigmaClass],
    exhaustive: bool,
) -> Sweep {
    let n = sp.len();
    let even = BitVec::from_ids(n, (0..n).filter(|&z| qp.levels[z] % 2 == 0));
    let class_of: BTreeMap<(usize, usize), usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.min_nonnesting, c.max_noncrossing), i))
        .collect();
    let pairs: Vec<(usize, usize)> = if exhaustive {
        let nn = sp.nonnesting();
        let nc = sp.noncrossing();
        nn.iter()
            .flat_map(|&x| nc.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| reach.leq(x, y))
            .collect()
    } else {
        class_of.keys().copied().collect()
    };
    let parts: Vec<Sweep> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut s = Sweep::new("eulerian_iff_class");
            let interval = reach.interval(x, y);
            let total = interval.count();
            let top_ok = x == y || 2 * reach.up[x].count_and3(&reach.down[y], &even) == total;
            let eul = top_ok && is_eulerian(reach, &qp.levels, &interval);
            let is_class = class_of.contains_key(&(x, y));
            s.check(eul == is_class, || {
                format!("[{x}, {y}] of size {total}: eulerian={eul}, class={is_class}")
            });
            s
        })
        .collect();
    parts.into_iter().fold(Sweep::new("eulerian_iff_class"), Sweep::merge)
}

/// Both projections to class extremes are order-preserving.
pub fn congruence_check(sp: &NRootSpace, qp: &QPSet, reach: &Reach, classes: &[SigmaClass]) -> Sweep {
    let mut lo = vec![0; sp.len()];
    let mut hi = vec![0; sp.len()];
    for c in classes {
        for &x in &c.members {
            lo[x] = c.min_nonnesting;
            hi[x] = c.max_noncrossing;
        }
    }
    let mut s = Sweep::new("poset_congruence");
    for c in classes {
        s.check(lo[c.min_nonnesting] == c.min_nonnesting && hi[c.max_noncrossing] == c.max_noncrossing, || {
            format!("σ={:?}: projections move class extremes", c.sigma)
        });
    }
    for &(x, y) in &qp.covers {
        s.check(reach.leq(lo[x], lo[y]) && reach.leq(hi[x], hi[y]), || {
            format!("cover {x} < {y}: projections not monotone")
        });
    }
    s
}

/// Signed component sums under simple reflections: -2α_i when α_i is a
/// component or a C becomes an A, +2α_i when an A becomes a C, else unchanged.
pub fn sigma_reflection_law(sp: &NRootSpace) -> Sweep {
    let rs = &sp.rs;
    let n = rs.rank();
    par_sweep("sigma_simple_reflection", sp.len(), |x, s| {
        for i in 1..=n {
            let alpha = rs.simple[i - 1];
            let mut signed = vec![0; n];
            for &c in &sp.elems[x].components {
                let r = rs.reflect_id(alpha, c);
                let k = if r.neg { -1 } else { 1 };
                for (t, v) in signed.iter_mut().zip(rs.root(r.id as usize)) {
                    *t += k * v;
                }
            }
            let y = sp.simple(i, x);
            let (a0, a1) = (sp.feats[x].a, sp.feats[y].a);
            let delta = if sp.elems[x].contains(alpha) || a1 == a0 + 1 {
                -2
            } else if a0 == a1 + 1 {
                2
            } else {
                0
            };
            let mut want = sp.sigmas[x].clone();
            want[i - 1] += delta;
            s.check(signed == want, || format!("x={x} s{i}: signed sum {signed:?}, want {want:?}"));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpar;

    fn setup(t: &str) -> (NRootSpace, QPSet, Reach, XISet) {
        let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
        let qp = qpar::build_order(&sp).unwrap();
        let reach = qp.reach();
        let xi = qpar::alignment_free(&sp, &qp).unwrap();
        (sp, qp, reach, xi)
    }

    #[test]
    fn d6_classes() {
        let (sp, qp, reach, xi) = setup("D6");
        let classes = sigma_classes(&sp, &reach).unwrap();
        assert_eq!(classes.len(), 5);
        assert!(class_structure_checks(&sp, &classes, &xi).pass());
        let tn = sigma(&sp, qp.theta_n);
        // 2(ε1+ε2+ε3) = 2α1 + 4α2 + 6α3 + 6α4 + 3α5 + 3α6
        assert_eq!(tn, &vec![2, 4, 6, 6, 3, 3]);
        let polys = class_poincare(&qp, &classes);
        assert!(poincare_check(&sp, &qp, &xi, &polys).pass());
        for (c, p) in classes.iter().zip(&polys) {
            if c.is_singleton() {
                let l = qp.levels[c.members[0]];
                assert_eq!(p.poly.len(), l + 1);
                assert_eq!(p.factors, Some((l, vec![])));
            }
        }
        assert!(mobius_eulerian_check(&sp, &qp, &reach, &classes, true).pass());
        assert!(congruence_check(&sp, &qp, &reach, &classes).pass());
        assert!(sigma_reflection_law(&sp).pass());
    }

    #[test]
    fn e7_classes() {
        let (sp, qp, reach, xi) = setup("E7");
        let classes = sigma_classes(&sp, &reach).unwrap();
        assert_eq!(classes.len(), 15);
        assert!(class_structure_checks(&sp, &classes, &xi).pass());
        let polys = class_poincare(&qp, &classes);
        let top = polys.iter().find(|p| p.sigma == sp.sigmas[qp.theta_n]).unwrap();
        assert_eq!(top.poly, qpoly::product_form(7, &[2, 3, 5]));
        assert!(poincare_check(&sp, &qp, &xi, &polys).pass());
        assert!(mobius_eulerian_check(&sp, &qp, &reach, &classes, true).pass());
        assert!(congruence_check(&sp, &qp, &reach, &classes).pass());
    }
}
