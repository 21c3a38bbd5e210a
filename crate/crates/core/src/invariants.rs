//! Exhaustive property sweeps over the positive n-roots of one type.

use itertools::Itertools;

use crate::bits::RootSet;
use crate::error::Result;
use crate::nroots::{classify_oracle, half_sum, NRootSpace};
use crate::sweep::{par_sweep, Sweep};

/// A + C + N = M on every n-root.
pub fn feature_total(sp: &NRootSpace) -> Sweep {
    let m = sp.stype().quadruple_count();
    par_sweep("feature_total", sp.len(), |x, s| {
        let f = &sp.feats[x];
        s.check(f.total() == m, || format!("x={x}: A+C+N = {} != {m}", f.total()));
    })
}

pub fn height_square_sum(sp: &NRootSpace, x: usize) -> i64 {
    sp.elems[x].components.iter().map(|&c| (sp.rs.height(c) as i64).pow(2)).sum()
}

/// Sum of squared component heights is the same for every n-root.
pub fn square_sum_constant(sp: &NRootSpace) -> (i64, Sweep) {
    let c = height_square_sum(sp, 0);
    let s = par_sweep("height_square_sum", sp.len(), |x, s| {
        let v = height_square_sum(sp, x);
        s.check(v == c, || format!("x={x}: {v} != {c}"));
    });
    (c, s)
}

/// Quadruples of one n-root meet in 0, 2 or 4 roots; symmetric differences
/// of those meeting in 2 are again coplanar.
pub fn quadruple_overlaps(sp: &NRootSpace) -> Sweep {
    par_sweep("quadruple_overlap", sp.len(), |x, s| {
        let qs = &sp.quads[x];
        for (a, b) in qs.iter().tuple_combinations() {
            let ma = RootSet::from_ids(a.members);
            let mb = RootSet::from_ids(b.members);
            let k = ma.and(&mb).len();
            s.check(matches!(k, 0 | 2), || format!("x={x}: quadruples meet in {k}"));
            if k == 2 {
                let d: Vec<usize> = ma.or(&mb).and_not(&ma.and(&mb)).iter().collect();
                let d: [usize; 4] = d.try_into().unwrap();
                s.check(half_sum(&sp.rs, &d).is_some(), || format!("x={x}: symmetric difference not coplanar"));
            }
        }
    })
}

/// Height classification agrees with the D4-subsystem construction.
pub fn classifier_oracle(sp: &NRootSpace) -> Sweep {
    par_sweep("classifier_oracle", sp.len(), |x, s| {
        for q in &sp.quads[x] {
            match classify_oracle(&sp.rs, &q.members) {
                Ok(l) => s.check(l == q.label, || format!("x={x} {:?}: {} vs {l}", q.members, q.label)),
                Err(e) => s.check(false, || format!("x={x}: {e}")),
            }
        }
    })
}

/// Every n-root is a maximal orthogonal set: no positive root extends it.
pub fn maximality(sp: &NRootSpace) -> Sweep {
    let rs = &sp.rs;
    par_sweep("maximal_orthogonal", sp.len(), |x, s| {
        let common = sp.elems[x]
            .components
            .iter()
            .fold(RootSet::full(rs.num_positive()), |acc, &c| acc.and(rs.orthogonal_to(c)));
        s.check(common.is_empty(), || format!("x={x} extends by {:?}", common.first()));
    })
}

/// Any three components have their coplanar completion inside the n-root (E8).
pub fn triple_completion(sp: &NRootSpace) -> Sweep {
    let rs = &sp.rs;
    par_sweep("triple_completion", sp.len(), |x, s| {
        let comps = &sp.elems[x].components;
        for t in comps.iter().combinations(3) {
            let inside = comps
                .iter()
                .filter(|c| !t.contains(c))
                .filter(|&&c| half_sum(rs, &[*t[0], *t[1], *t[2], c]).is_some())
                .count();
            s.check(inside == 1, || format!("x={x}: {t:?} completes {inside} ways"));
        }
    })
}

/// Every component of a noncrossing n-root has odd height, and every
/// odd-height root occurs in some noncrossing n-root.
pub fn noncrossing_odd_heights(sp: &NRootSpace) -> Sweep {
    let rs = &sp.rs;
    let mut s = Sweep::new("noncrossing_odd_heights");
    let mut seen = RootSet::empty();
    for x in sp.noncrossing() {
        for &c in &sp.elems[x].components {
            s.check(rs.height(c) % 2 == 1, || format!("x={x}: component {c} of even height"));
            seen.insert(c);
        }
    }
    for r in 0..rs.num_positive() {
        if rs.height(r) % 2 == 1 {
            s.check(seen.contains(r), || format!("odd root {r} in no noncrossing n-root"));
        }
    }
    s
}

/// act(u, act(v, x)) = act(uv, x) for every pair of simple reflections.
pub fn action_composes(sp: &NRootSpace) -> Result<Sweep> {
    let n = sp.rs.rank();
    let mut s = Sweep::new("action_composes");
    for x in 0..sp.len() {
        for i in 1..=n {
            for j in 1..=n {
                let two = sp.act_word(&[i, j], x)?;
                s.check(two == sp.simple(i, sp.simple(j, x)), || format!("x={x} s{i}s{j}"));
            }
        }
    }
    Ok(s)
}

/// Type D: s_α acts on matchings as the transposition of the two
/// coordinates in the support of α.
pub fn phi_action_typed(sp: &NRootSpace) -> Result<Sweep> {
    let rs = &sp.rs;
    let matchings: Vec<Vec<(usize, usize)>> = (0..sp.len()).map(|x| sp.matching(x)).try_collect()?;
    let mut s = Sweep::new("phi_action");
    for r in 0..rs.num_positive() {
        let support: Vec<usize> = (0..rs.embedding[r].len()).filter(|&i| rs.embedding[r][i] != 0).collect();
        let [a, b] = support[..] else {
            s.check(false, || format!("root {r} has support {support:?}"));
            continue;
        };
        let (a, b) = (a + 1, b + 1);
        let swap = |p: usize| if p == a { b } else if p == b { a } else { p };
        for x in 0..sp.len() {
            let mut want: Vec<(usize, usize)> = matchings[x]
                .iter()
                .map(|&(p, q)| (swap(p).min(swap(q)), swap(p).max(swap(q))))
                .collect();
            want.sort_unstable();
            let got = &matchings[sp.reflect(r, x)];
            s.check(*got == want, || format!("x={x} r={r}: {got:?} vs {want:?}"));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SystemType;

    #[test]
    fn d6_and_e7_sweeps() {
        for t in ["D6", "E7"] {
            let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
            for s in [
                feature_total(&sp),
                square_sum_constant(&sp).1,
                quadruple_overlaps(&sp),
                classifier_oracle(&sp),
                maximality(&sp),
                noncrossing_odd_heights(&sp),
                action_composes(&sp).unwrap(),
            ] {
                assert!(s.pass(), "{t}: {}", s.summary());
            }
        }
    }

    #[test]
    fn d8_phi_action() {
        let sp = NRootSpace::build(SystemType::d(8).unwrap()).unwrap();
        let s = phi_action_typed(&sp).unwrap();
        assert!(s.pass(), "{}", s.summary());
        assert_eq!(s.checked, 56 * 105);
        let e7 = NRootSpace::build(SystemType::E7).unwrap();
        assert!(phi_action_typed(&e7).is_err());
    }

    #[test]
    fn e8_triples_complete() {
        let sp = NRootSpace::build(SystemType::E8).unwrap();
        let s = triple_completion(&sp);
        assert!(s.pass(), "{}", s.summary());
        assert_eq!(s.checked, 2025 * 56);
    }
}
