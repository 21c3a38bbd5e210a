//! The positive n-roots as a quasiparabolic W-set with level λ = C + 2N.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::nroots::{Label, NRootSpace};
use crate::poset::Reach;
use crate::sweep::{par_sweep, Sweep};

/// Scaled-set bound |λ(sx) − λ(x)| <= 1 for simple reflections.
pub fn verify_scaled(sp: &NRootSpace) -> Sweep {
    let n = sp.rs.rank();
    par_sweep("scaled", sp.len(), |x, s| {
        for i in 1..=n {
            let y = sp.simple(i, x);
            let d = sp.level(y) as i64 - sp.level(x) as i64;
            s.check(d.abs() <= 1, || format!("x={x} s{i}: Δλ={d}"));
        }
    })
}

/// QP1: λ(rx) = λ(x) implies rx = x.
pub fn verify_qp1(sp: &NRootSpace) -> Sweep {
    let m = sp.rs.num_positive();
    par_sweep("qp1", sp.len(), |x, s| {
        for r in 0..m {
            let y = sp.reflect(r, x);
            if sp.level(y) == sp.level(x) {
                s.check(y == x, || format!("x={x} r={r}: level kept but rx={y}"));
            } else {
                s.skip();
            }
        }
    })
}

/// QP2: λ(rx) > λ(x) and λ(srx) < λ(sx) imply rx = sx.
pub fn verify_qp2(sp: &NRootSpace) -> Sweep {
    let m = sp.rs.num_positive();
    let n = sp.rs.rank();
    par_sweep("qp2", sp.len(), |x, s| {
        for r in 0..m {
            let rx = sp.reflect(r, x);
            if sp.level(rx) <= sp.level(x) {
                s.vacuous += n as u64;
                continue;
            }
            for i in 1..=n {
                let sx = sp.simple(i, x);
                let srx = sp.simple(i, rx);
                if sp.level(srx) < sp.level(sx) {
                    s.check(rx == sx, || format!("x={x} r={r} s{i}: rx={rx} sx={sx}"));
                } else {
                    s.skip();
                }
            }
        }
    })
}

/// Covering relations of the quasiparabolic order and the extremal elements.
#[derive(Clone, Debug, Serialize)]
pub struct QPSet {
    pub levels: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
    pub theta_a: usize,
    pub theta_c: usize,
    pub theta_n: usize,
}

impl QPSet {
    pub fn reach(&self) -> Reach {
        Reach::from_covers(&self.up, &self.levels)
    }

    /// Level generating polynomial of a subset, coefficients by degree.
    pub fn level_poly(&self, members: impl IntoIterator<Item = usize>) -> Vec<i64> {
        let mut p = Vec::new();
        for x in members {
            let l = self.levels[x];
            if p.len() <= l {
                p.resize(l + 1, 0);
            }
            p[l] += 1;
        }
        p
    }

    /// Edge list with a level header, one cover "u v" per line.
    pub fn hasse_edges(&self) -> String {
        let mut out = format!("# levels: {}\n", self.levels.iter().join(" "));
        for (u, v) in &self.covers {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The unique elements of types A^M, C^M, N^M.
pub fn extremal(sp: &NRootSpace) -> Result<(usize, usize, usize)> {
    let m = sp.stype().quadruple_count();
    let unique = |name: &str, f: &dyn Fn(usize) -> bool| -> Result<usize> {
        let c: Vec<usize> = (0..sp.len()).filter(|&x| f(x)).collect();
        match c.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::Invariant(format!("{} elements of type {name}^M", c.len()))),
        }
    };
    Ok((
        unique("A", &|x| sp.feats[x].a == m)?,
        unique("C", &|x| sp.feats[x].c == m)?,
        unique("N", &|x| sp.feats[x].n == m)?,
    ))
}

pub fn build_order(sp: &NRootSpace) -> Result<QPSet> {
    let levels: Vec<usize> = (0..sp.len()).map(|x| sp.level(x)).collect();
    let mut up = vec![Vec::new(); sp.len()];
    let mut down = vec![Vec::new(); sp.len()];
    let mut covers = Vec::new();
    for (x, ups) in up.iter_mut().enumerate() {
        let mut ys: Vec<usize> = (0..sp.rs.num_positive())
            .map(|r| sp.reflect(r, x))
            .filter(|&y| levels[y] == levels[x] + 1)
            .collect();
        ys.sort_unstable();
        ys.dedup();
        for &y in &ys {
            covers.push((x, y));
            down[y].push(x);
        }
        *ups = ys;
    }
    let (theta_a, theta_c, theta_n) = extremal(sp)?;
    if !down[theta_a].is_empty() || !up[theta_n].is_empty() {
        return Err(Error::Invariant("extremal elements have covers on the wrong side".into()));
    }
    let minimal: Vec<usize> = (0..sp.len()).filter(|&x| down[x].is_empty()).collect();
    let maximal: Vec<usize> = (0..sp.len()).filter(|&x| up[x].is_empty()).collect();
    if minimal != vec![theta_a] || maximal != vec![theta_n] {
        return Err(Error::Invariant(format!(
            "order has minimal {minimal:?} and maximal {maximal:?}"
        )));
    }
    Ok(QPSet { levels, covers, up, down, theta_a, theta_c, theta_n })
}

/// Every generating relation x <= rx is a chain of covers.
pub fn relations_graded(sp: &NRootSpace, qp: &QPSet, reach: &Reach) -> Sweep {
    let m = sp.rs.num_positive();
    par_sweep("graded", sp.len(), |x, s| {
        for r in 0..m {
            let y = sp.reflect(r, x);
            if qp.levels[y] > qp.levels[x] {
                s.check(reach.leq(x, y), || format!("x={x} r={r}: x <= rx not reachable"));
            } else {
                s.skip();
            }
        }
    })
}

/// Level changes of reflection moves, classified by the moved quadruple.
pub fn level_change_laws(sp: &NRootSpace) -> Sweep {
    let rs = &sp.rs;
    let m = rs.num_positive();
    par_sweep("level_change", sp.len(), |x, s| {
        for r in 0..m {
            let q = match crate::nroots::moved_quadruple(rs, r, &sp.elems[x]) {
                Ok(Some(q)) => q,
                Ok(None) => {
                    s.skip();
                    continue;
                }
                Err(e) => {
                    s.check(false, || format!("x={x} r={r}: {e}"));
                    continue;
                }
            };
            let y = sp.reflect(r, x);
            let q2 = q.map(|b| rs.reflect_id(r, b).id as usize);
            let (Some(i), Some(j)) = (sp.quad_index(x, &q), sp.quad_index(y, &q2)) else {
                s.check(false, || format!("x={x} r={r}: moved set is not coplanar"));
                continue;
            };
            let (before, after) = (sp.quads[x][i].label, sp.quads[y][j].label);
            let d = sp.level(y) as i64 - sp.level(x) as i64;
            let (fx, fy) = (sp.feats[x], sp.feats[y]);
            let ok = match (before, after) {
                (Label::A, Label::C) | (Label::C, Label::N) => d > 0 && d % 2 != 0,
                (Label::C, Label::A) | (Label::N, Label::C) => d < 0 && d % 2 != 0,
                (Label::A, Label::N) => d > 0 && d % 2 == 0,
                (Label::N, Label::A) => d < 0 && d % 2 == 0,
                _ => false,
            };
            let keeps_a = !matches!(
                (before, after),
                (Label::C, Label::N) | (Label::N, Label::C)
            ) || fx.a == fy.a;
            s.check(ok && keeps_a, || {
                format!("x={x} r={r}: {before}->{after} with Δλ={d}, A {}->{}", fx.a, fy.a)
            });
        }
    })
}

/// The alignment-free elements and their parity split.
#[derive(Clone, Debug, Serialize)]
pub struct XISet {
    pub members: Vec<usize>,
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
    pub theta_c: usize,
    /// 1-based index of the unique simple component of θ_N.
    pub alpha_x: usize,
}

impl XISet {
    /// Simple reflections generating W_I, 1-based.
    pub fn generators(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|&i| i != self.alpha_x).collect()
    }
}

pub fn alignment_free(sp: &NRootSpace, qp: &QPSet) -> Result<XISet> {
    let members = sp.ids_with(|f| f.a == 0);
    let fiber: Vec<usize> =
        (0..sp.len()).filter(|&x| sp.sigmas[x] == sp.sigmas[qp.theta_n]).collect();
    if members != fiber {
        return Err(Error::Invariant("A = 0 does not cut out the σ-fiber of θ_N".into()));
    }
    let minimal: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&x| !qp.down[x].iter().any(|y| members.contains(y)))
        .collect();
    if minimal != vec![qp.theta_c] {
        return Err(Error::Invariant(format!("X_I has minimal elements {minimal:?}")));
    }
    let simple_in_n: Vec<usize> = (1..=sp.rs.rank())
        .filter(|&i| sp.elems[qp.theta_n].contains(sp.rs.simple[i - 1]))
        .collect();
    let [alpha_x] = simple_in_n[..] else {
        return Err(Error::Invariant(format!("θ_N has simple components {simple_in_n:?}")));
    };
    let (even, odd): (Vec<usize>, Vec<usize>) =
        members.iter().partition(|&&x| qp.levels[x] % 2 == 0);
    Ok(XISet { members, even, odd, theta_c: qp.theta_c, alpha_x })
}

/// W_I swaps the parity classes of X_I; every W_I reflection flips level parity.
pub fn xi_parity_checks(sp: &NRootSpace, xi: &XISet) -> Sweep {
    let rs = &sp.rs;
    let ax = xi.alpha_x - 1;
    let in_xi = BitVec::from_ids(sp.len(), xi.members.iter().copied());
    let mut s = Sweep::new("xi_parity");
    s.check(xi.even.len() == xi.odd.len(), || {
        format!("|X_I^e| = {} but |X_I^o| = {}", xi.even.len(), xi.odd.len())
    });
    for &x in &xi.members {
        for r in 0..rs.num_positive() {
            if rs.root(r)[ax] != 0 {
                continue;
            }
            let y = sp.reflect(r, x);
            s.check(in_xi.get(y) && sp.level(y) % 2 != sp.level(x) % 2, || {
                format!("x={x} r={r}: rx={y} leaves X_I or keeps parity")
            });
        }
        for &c in &sp.elems[x].components {
            s.check(rs.root(c)[ax] == 1, || format!("x={x}: component {c} has α_x-coefficient != 1"));
        }
    }
    s
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// Bruhat order on permutations of 0..k via the rank-matrix criterion.
pub fn bruhat_leq(u: &[usize], v: &[usize]) -> bool {
    let k = u.len();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let cu = u[..=i].iter().filter(|&&a| a >= j).count();
            let cv = v[..=i].iter().filter(|&&a| a >= j).count();
            cu <= cv
        })
    })
}

/// Permutations of [k] mapped to X_I by τ ↦ {i, τ(i)+k}; checks bijectivity,
/// λ = M + ℓ(τ), and that Bruhat order matches the quasiparabolic order.
#[allow(non_snake_case)]
pub fn bruhat_iso_typeD(sp: &NRootSpace, qp: &QPSet, reach: &Reach, xi: &XISet) -> Result<Sweep> {
    if !sp.stype().is_d() {
        return Err(Error::Unsupported(sp.stype().name(), "the Bruhat map is defined in type D"));
    }
    let k = sp.stype().half_rank();
    let m = sp.stype().quadruple_count();
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let mut s = Sweep::new("bruhat_iso");
    let mut images = Vec::with_capacity(perms.len());
    for p in &perms {
        let matching: Vec<(usize, usize)> = p.iter().enumerate().map(|(i, &t)| (i + 1, t + 1 + k)).collect();
        let x = sp.id_of_matching(&matching)?;
        s.check(qp.levels[x] == m + inversions(p), || {
            format!("τ={p:?}: λ={} but M+ℓ={}", qp.levels[x], m + inversions(p))
        });
        images.push(x);
    }
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    s.check(sorted == xi.members, || "image of S_k is not X_I".into());
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let (x, y) = (images[a], images[b]);
            s.check(bruhat_leq(pa, pb) == reach.leq(x, y), || {
                format!("τ={pa:?} σ={pb:?}: Bruhat and quasiparabolic order differ")
            });
        }
    }
    Ok(s)
}

/// Feature avoidance read off from level changes alone.
pub fn abstract_characterizations(sp: &NRootSpace, qp: &QPSet) -> Sweep {
    let m = sp.rs.num_positive();
    let lv = &qp.levels;
    // elements reaching θ_N through reflections that raise λ by exactly 2
    let mut by_two = vec![false; sp.len()];
    by_two[qp.theta_n] = true;
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); sp.len()];
    for x in 0..sp.len() {
        for r in 0..m {
            let y = sp.reflect(r, x);
            if lv[y] == lv[x] + 2 {
                preds[y].push(x);
            }
        }
    }
    let mut q = VecDeque::from([qp.theta_n]);
    while let Some(y) = q.pop_front() {
        for &x in &preds[y] {
            if !by_two[x] {
                by_two[x] = true;
                q.push_back(x);
            }
        }
    }
    let mut s = Sweep::new("abstract_characterizations");
    for x in 0..sp.len() {
        let (mut raise_even, mut lower_even) = (false, false);
        for r in 0..m {
            let d = lv[sp.reflect(r, x)] as i64 - lv[x] as i64;
            if d > 0 && d % 2 == 0 {
                raise_even = true;
            }
            if d < 0 && d % 2 == 0 {
                lower_even = true;
            }
        }
        let f = sp.feats[x];
        s.check((f.a == 0) == !raise_even, || format!("x={x}: A={} raise_even={raise_even}", f.a));
        s.check((f.n == 0) == !lower_even, || format!("x={x}: N={} lower_even={lower_even}", f.n));
        s.check((f.c == 0) == by_two[x], || format!("x={x}: C={} chain={}", f.c, by_two[x]));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SystemType;

    fn setup(t: &str) -> (NRootSpace, QPSet) {
        let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
        let qp = build_order(&sp).unwrap();
        (sp, qp)
    }

    #[test]
    fn axioms_small_types() {
        for t in ["D4", "D6", "D8", "E7"] {
            let (sp, _) = setup(t);
            for s in [verify_scaled(&sp), verify_qp1(&sp), verify_qp2(&sp), level_change_laws(&sp)] {
                assert!(s.pass(), "{t}: {}", s.summary());
                assert!(s.checked > 0);
            }
        }
    }

    #[test]
    fn d6_extremals_and_xi() {
        let (sp, qp) = setup("D6");
        assert_eq!(sp.matching(qp.theta_a).unwrap(), vec![(1, 2), (3, 4), (5, 6)]);
        assert_eq!(sp.matching(qp.theta_c).unwrap(), vec![(1, 4), (2, 5), (3, 6)]);
        assert_eq!(sp.matching(qp.theta_n).unwrap(), vec![(1, 6), (2, 5), (3, 4)]);
        assert_eq!(qp.levels[qp.theta_a], 0);
        assert_eq!(qp.levels[qp.theta_n], 6);
        let xi = alignment_free(&sp, &qp).unwrap();
        let mut lv: Vec<usize> = xi.members.iter().map(|&x| qp.levels[x]).collect();
        lv.sort_unstable();
        assert_eq!(lv, vec![3, 4, 4, 5, 5, 6]);
        let reach = qp.reach();
        assert!(bruhat_iso_typeD(&sp, &qp, &reach, &xi).unwrap().pass());
        assert!(xi_parity_checks(&sp, &xi).pass());
        assert!(abstract_characterizations(&sp, &qp).pass());
        assert!(relations_graded(&sp, &qp, &reach).pass());
    }

    #[test]
    fn bruhat_order_on_s3() {
        assert!(bruhat_leq(&[0, 1, 2], &[2, 1, 0]));
        assert!(!bruhat_leq(&[1, 0, 2], &[0, 2, 1]));
        assert!(bruhat_leq(&[1, 0, 2], &[2, 0, 1]));
    }

    #[test]
    fn bruhat_rejects_e7() {
        let (sp, qp) = setup("E7");
        let xi = alignment_free(&sp, &qp).unwrap();
        assert!(bruhat_iso_typeD(&sp, &qp, &qp.reach(), &xi).is_err());
        assert_eq!(xi.members.len(), 30);
        assert_eq!(xi.alpha_x, 7);
    }
}
