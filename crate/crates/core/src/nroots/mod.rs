//! Positive n-roots: maximal orthogonal sets of positive roots, their W-action,
//! coplanar quadruples and the crossing / nesting / alignment statistics.

pub mod d4;

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::RootSet;
use crate::clique;
use crate::error::{Error, Result};
use crate::rootsys::{Coeffs, RootSystem, SystemType};

pub use d4::{classify_oracle, d4_partition, D4Partition};

/// A positive n-root, identified with its sorted component IDs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NRoot {
    pub components: Vec<usize>,
}

impl NRoot {
    pub fn new(mut components: Vec<usize>) -> Self {
        components.sort_unstable();
        NRoot { components }
    }

    pub fn mask(&self) -> RootSet {
        RootSet::from_ids(self.components.iter().copied())
    }

    pub fn contains(&self, id: usize) -> bool {
        self.components.binary_search(&id).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    A,
    C,
    N,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Label::A => "A",
            Label::C => "C",
            Label::N => "N",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadruple {
    pub members: [usize; 4],
    /// ID of (b1 + b2 + b3 + b4) / 2.
    pub half_sum: usize,
    pub label: Label,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FeatureCounts {
    pub a: usize,
    pub c: usize,
    pub n: usize,
    pub level: usize,
}

impl FeatureCounts {
    pub fn of(labels: impl IntoIterator<Item = Label>) -> Self {
        let mut f = FeatureCounts::default();
        for l in labels {
            match l {
                Label::A => f.a += 1,
                Label::C => f.c += 1,
                Label::N => f.n += 1,
            }
        }
        f.level = f.c + 2 * f.n;
        f
    }

    pub fn total(&self) -> usize {
        self.a + self.c + self.n
    }
}

/// Maximal orthogonal sets of positive roots, canonically ordered.
pub fn enumerate_nroots(rs: &RootSystem) -> Vec<NRoot> {
    let all = RootSet::full(rs.num_positive());
    clique::maximal_cliques(rs.orthogonality_rows(), all)
        .into_iter()
        .map(NRoot::new)
        .sorted()
        .collect()
}

/// Componentwise action of a word followed by absolute values.
pub fn act(rs: &RootSystem, word: &[usize], x: &NRoot) -> Result<NRoot> {
    let mut comps = Vec::with_capacity(x.components.len());
    for &c in &x.components {
        let v = rs.act_word(word, rs.root(c))?;
        let sr = rs
            .abs_root_id(&v)
            .ok_or_else(|| Error::Invariant("word image is not a root".into()))?;
        comps.push(sr.id as usize);
    }
    Ok(NRoot::new(comps))
}

/// Height trichotomy. Equalities are impossible for coplanar quadruples.
pub fn classify_heights(rs: &RootSystem, members: &[usize; 4]) -> Result<Label> {
    let mut h: Vec<i32> = members.iter().map(|&m| rs.height(m)).collect();
    h.sort_unstable();
    let (h1, h2, h3, h4) = (h[0], h[1], h[2], h[3]);
    if h1 + h2 + h3 == h4 || h2 + h3 == h1 + h4 {
        return Err(Error::Invariant(format!(
            "coplanar quadruple {members:?} has forbidden heights {h:?}"
        )));
    }
    Ok(if h1 + h2 + h3 < h4 {
        Label::A
    } else if h2 + h3 > h1 + h4 {
        Label::N
    } else {
        Label::C
    })
}

pub fn classify(rs: &RootSystem, q: &Quadruple) -> Result<Label> {
    classify_heights(rs, &q.members)
}

/// Half of the sum of four roots, if that is a positive root.
pub fn half_sum(rs: &RootSystem, members: &[usize; 4]) -> Option<usize> {
    let n = rs.rank();
    let mut v = vec![0; n];
    for &m in members {
        for (o, c) in v.iter_mut().zip(rs.root(m)) {
            *o += c;
        }
    }
    if v.iter().any(|c| c % 2 != 0) {
        return None;
    }
    let half: Coeffs = v.iter().map(|c| c / 2).collect();
    rs.root_id(&half)
}

pub fn coplanar_quadruples(rs: &RootSystem, x: &NRoot) -> Result<Vec<Quadruple>> {
    let mut out = Vec::new();
    for q in x.components.iter().copied().combinations(4) {
        let members = [q[0], q[1], q[2], q[3]];
        if let Some(h) = half_sum(rs, &members) {
            let label = classify_heights(rs, &members)?;
            out.push(Quadruple { members, half_sum: h, label });
        }
    }
    Ok(out)
}

pub fn feature_counts(rs: &RootSystem, x: &NRoot) -> Result<FeatureCounts> {
    Ok(FeatureCounts::of(coplanar_quadruples(rs, x)?.iter().map(|q| q.label)))
}

/// Components of `x` not orthogonal to root `alpha`; `None` when alpha is a component.
pub fn moved_quadruple(rs: &RootSystem, alpha: usize, x: &NRoot) -> Result<Option<[usize; 4]>> {
    if x.contains(alpha) {
        return Ok(None);
    }
    let moved: Vec<usize> =
        x.components.iter().copied().filter(|&c| rs.pairing(alpha, c) != 0).collect();
    if moved.len() != 4 {
        return Err(Error::Invariant(format!(
            "root {alpha} meets {} components of {:?}",
            moved.len(),
            x.components
        )));
    }
    Ok(Some([moved[0], moved[1], moved[2], moved[3]]))
}

/// Perfect matching of [n] (1-based, sorted pairs) for a type-D n-root.
pub fn matching_of(rs: &RootSystem, x: &NRoot) -> Result<Vec<(usize, usize)>> {
    if !rs.stype.is_d() {
        return Err(Error::Unsupported(rs.stype.name(), "matchings exist only in type D"));
    }
    let mut pairs: Vec<(usize, usize)> = x
        .components
        .iter()
        .map(|&c| {
            let nz: Vec<usize> = rs.embedding[c]
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(i, _)| i + 1)
                .collect();
            (nz[0], nz[1])
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    if pairs.len() * 2 != rs.rank() {
        return Err(Error::Invariant(format!("{:?} is not a matching", x.components)));
    }
    Ok(pairs)
}

/// Inverse of [`matching_of`].
pub fn nroot_of_matching(rs: &RootSystem, m: &[(usize, usize)]) -> Result<NRoot> {
    if !rs.stype.is_d() {
        return Err(Error::Unsupported(rs.stype.name(), "matchings exist only in type D"));
    }
    let n = rs.rank();
    let mut seen = vec![false; n + 1];
    let mut comps = Vec::with_capacity(n);
    for &(a, b) in m {
        let (i, j) = (a.min(b), a.max(b));
        if i == 0 || j > n || i == j || seen[i] || seen[j] {
            return Err(Error::Usage(format!("{m:?} is not a perfect matching of [{n}]")));
        }
        seen[i] = true;
        seen[j] = true;
        for sign in [-1, 1] {
            let mut e = vec![0; n];
            e[i - 1] = 1;
            e[j - 1] = sign;
            let id = (0..rs.num_positive())
                .find(|&r| rs.embedding[r] == e)
                .ok_or_else(|| Error::Invariant("missing type-D root".into()))?;
            comps.push(id);
        }
    }
    if comps.len() != n {
        return Err(Error::Usage(format!("{m:?} is not a perfect matching of [{n}]")));
    }
    Ok(NRoot::new(comps))
}

/// Render a matching as "12,36,45" style blocks (single-digit labels when n < 10).
pub fn matching_string(m: &[(usize, usize)]) -> String {
    let wide = m.iter().any(|&(_, b)| b >= 10);
    m.iter()
        .map(|&(a, b)| if wide { format!("{a}-{b}") } else { format!("{a}{b}") })
        .join(",")
}

/// Everything about the positive n-roots of one type, precomputed.
pub struct NRootSpace {
    pub rs: RootSystem,
    pub elems: Vec<NRoot>,
    pub masks: Vec<RootSet>,
    pub quads: Vec<Vec<Quadruple>>,
    pub feats: Vec<FeatureCounts>,
    pub sigmas: Vec<Coeffs>,
    index: HashMap<RootSet, usize>,
    /// action[r * len + x] = |s_r(x)|
    action: Vec<u32>,
}

impl NRootSpace {
    pub fn build(stype: SystemType) -> Result<Self> {
        Self::from_system(RootSystem::build(stype)?)
    }

    pub fn from_system(rs: RootSystem) -> Result<Self> {
        let elems = enumerate_nroots(&rs);
        let n = rs.rank();
        if let Some(bad) = elems.iter().find(|x| x.components.len() != n) {
            return Err(Error::Invariant(format!(
                "maximal orthogonal set of size {} in {}",
                bad.components.len(),
                rs.stype
            )));
        }
        let masks: Vec<RootSet> = elems.iter().map(|x| x.mask()).collect();
        let index: HashMap<RootSet, usize> =
            masks.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let quads: Vec<Vec<Quadruple>> = elems
            .par_iter()
            .map(|x| coplanar_quadruples(&rs, x))
            .collect::<Result<_>>()?;
        let feats: Vec<FeatureCounts> =
            quads.iter().map(|q| FeatureCounts::of(q.iter().map(|q| q.label))).collect();
        let sigmas: Vec<Coeffs> = elems
            .iter()
            .map(|x| {
                let mut s = vec![0; n];
                for &c in &x.components {
                    for (o, v) in s.iter_mut().zip(rs.root(c)) {
                        *o += v;
                    }
                }
                s
            })
            .collect();
        let len = elems.len();
        let rows: Vec<Vec<u32>> = (0..rs.num_positive())
            .into_par_iter()
            .map(|r| {
                elems
                    .iter()
                    .map(|x| {
                        let img = RootSet::from_ids(
                            x.components.iter().map(|&c| rs.reflect_id(r, c).id as usize),
                        );
                        index[&img] as u32
                    })
                    .collect()
            })
            .collect();
        let mut action = Vec::with_capacity(rs.num_positive() * len);
        for r in rows {
            action.extend(r);
        }
        Ok(NRootSpace { rs, elems, masks, quads, feats, sigmas, index, action })
    }

    pub fn stype(&self) -> SystemType {
        self.rs.stype
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn id_of(&self, x: &NRoot) -> Option<usize> {
        self.index.get(&x.mask()).copied()
    }

    pub fn id_of_mask(&self, m: &RootSet) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn level(&self, x: usize) -> usize {
        self.feats[x].level
    }

    /// |s_r(x)| for the reflection in positive root `r`.
    #[inline]
    pub fn reflect(&self, r: usize, x: usize) -> usize {
        self.action[r * self.len() + x] as usize
    }

    /// Simple reflection, 1-based index.
    #[inline]
    pub fn simple(&self, i: usize, x: usize) -> usize {
        self.reflect(self.rs.simple[i - 1], x)
    }

    /// s_{i_1}(s_{i_2}(... (x))) on element IDs.
    pub fn act_word(&self, word: &[usize], x: usize) -> Result<usize> {
        let n = self.rs.rank();
        let mut y = x;
        for &i in word.iter().rev() {
            if i == 0 || i > n {
                return Err(Error::Usage(format!("simple index {i} out of range 1..={n}")));
            }
            y = self.simple(i, y);
        }
        Ok(y)
    }

    /// Index into `quads[x]` of the quadruple with these members.
    pub fn quad_index(&self, x: usize, members: &[usize; 4]) -> Option<usize> {
        let mut m = *members;
        m.sort_unstable();
        self.quads[x].iter().position(|q| q.members == m)
    }

    /// Replace quadruple `q` of `x` by another block of its D4 partition.
    pub fn substitute(&self, x: usize, q: &[usize; 4], with: &[usize; 4]) -> Result<usize> {
        let mut m = self.masks[x];
        for &c in q {
            m.remove(c);
        }
        for &c in with {
            m.insert(c);
        }
        self.id_of_mask(&m)
            .ok_or_else(|| Error::Invariant("substituted set is not an n-root".into()))
    }

    pub fn ids_with(&self, pred: impl Fn(&FeatureCounts) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&x| pred(&self.feats[x])).collect()
    }

    pub fn noncrossing(&self) -> Vec<usize> {
        self.ids_with(|f| f.c == 0)
    }

    pub fn nonnesting(&self) -> Vec<usize> {
        self.ids_with(|f| f.n == 0)
    }

    pub fn sigma_height(&self, x: usize) -> i32 {
        self.sigmas[x].iter().sum()
    }

    pub fn matching(&self, x: usize) -> Result<Vec<(usize, usize)>> {
        matching_of(&self.rs, &self.elems[x])
    }

    pub fn id_of_matching(&self, m: &[(usize, usize)]) -> Result<usize> {
        let x = nroot_of_matching(&self.rs, m)?;
        self.id_of(&x).ok_or_else(|| Error::Invariant("matching is not an n-root".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(t: &str) -> NRootSpace {
        NRootSpace::build(SystemType::parse(t).unwrap()).unwrap()
    }

    fn quad_of_blocks(sp: &NRootSpace, blocks: &[(usize, usize)]) -> [usize; 4] {
        let n = sp.rs.rank();
        let mut comps = vec![];
        for &(i, j) in blocks {
            for s in [-1, 1] {
                let mut e = vec![0; n];
                e[i - 1] = 1;
                e[j - 1] = s;
                comps.push((0..sp.rs.num_positive()).find(|&r| sp.rs.embedding[r] == e).unwrap());
            }
        }
        comps.sort_unstable();
        [comps[0], comps[1], comps[2], comps[3]]
    }

    #[test]
    fn counts() {
        for (t, n) in [("D4", 3), ("D6", 15), ("D8", 105), ("E7", 135), ("E8", 2025)] {
            assert_eq!(space(t).len(), n, "{t}");
        }
    }

    #[test]
    fn quadruple_counts_and_levels() {
        for t in ["D4", "D6", "D8", "D10", "E7", "E8"] {
            let sp = space(t);
            let m = sp.stype().quadruple_count();
            for x in 0..sp.len() {
                assert_eq!(sp.quads[x].len(), m);
                assert_eq!(sp.feats[x].total(), m);
            }
        }
    }

    #[test]
    fn d6_example_type() {
        let sp = space("D6");
        let x = sp.id_of_matching(&[(1, 2), (3, 6), (4, 5)]).unwrap();
        let f = sp.feats[x];
        assert_eq!((f.a, f.c, f.n, f.level), (2, 0, 1, 2));
        let a = quad_of_blocks(&sp, &[(1, 2), (4, 5)]);
        assert_eq!(classify_heights(&sp.rs, &a).unwrap(), Label::A);
        let n = quad_of_blocks(&sp, &[(3, 6), (4, 5)]);
        assert_eq!(classify_heights(&sp.rs, &n).unwrap(), Label::N);
    }

    #[test]
    fn d4_alignment_from_simple_roots() {
        let sp = space("D4");
        let rs = &sp.rs;
        let s = &rs.simple;
        let q = [s[0], s[2], s[3], rs.highest];
        assert_eq!(classify_heights(rs, &q).unwrap(), Label::A);
        assert_eq!(classify_oracle(rs, &q).unwrap(), Label::A);
    }

    #[test]
    fn heights_agree_with_d4_oracle() {
        for t in ["D4", "D6", "D8", "E7", "E8"] {
            let sp = space(t);
            for x in 0..sp.len() {
                for q in &sp.quads[x] {
                    assert_eq!(classify_oracle(&sp.rs, &q.members).unwrap(), q.label, "{t}");
                }
            }
        }
    }

    #[test]
    fn moves_example() {
        let sp = space("D6");
        let rs = &sp.rs;
        let x = sp.id_of_matching(&[(1, 2), (3, 6), (4, 5)]).unwrap();
        let alpha = (0..rs.num_positive())
            .find(|&r| rs.embedding[r] == vec![0, 1, 0, -1, 0, 0])
            .unwrap();
        let y = sp.reflect(alpha, x);
        assert_eq!(sp.matching(y).unwrap(), vec![(1, 4), (2, 5), (3, 6)]);
        let q = moved_quadruple(rs, alpha, &sp.elems[x]).unwrap().unwrap();
        let mut want = quad_of_blocks(&sp, &[(1, 2), (4, 5)]);
        want.sort_unstable();
        assert_eq!(q, want);
        let fy = sp.feats[y];
        assert_eq!((fy.a, fy.c, fy.n), (0, 3, 0));
        let z = sp.simple(2, x);
        assert_eq!(sp.matching(z).unwrap(), vec![(1, 3), (2, 6), (4, 5)]);
        let fz = sp.feats[z];
        assert_eq!((fz.a, fz.c, fz.n, fz.level), (1, 1, 1, 3));
        assert_eq!(moved_quadruple(rs, sp.elems[x].components[0], &sp.elems[x]).unwrap(), None);
    }

    #[test]
    fn matchings_round_trip() {
        let sp = space("D6");
        for x in 0..sp.len() {
            let m = sp.matching(x).unwrap();
            assert_eq!(sp.id_of_matching(&m).unwrap(), x);
        }
        let d4 = space("D4");
        let x = d4.id_of_matching(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(d4.matching(x).unwrap(), vec![(1, 2), (3, 4)]);
        let e7 = space("E7");
        assert!(e7.matching(0).is_err());
    }

    #[test]
    fn act_agrees_with_table() {
        let sp = space("E7");
        for x in (0..sp.len()).step_by(7) {
            let w = [1, 3, 7, 2, 5];
            let direct = act(&sp.rs, &w, &sp.elems[x]).unwrap();
            assert_eq!(sp.id_of(&direct).unwrap(), sp.act_word(&w, x).unwrap());
            assert_eq!(sp.act_word(&[4, 4], x).unwrap(), x);
        }
    }

    #[test]
    fn simple_component_fixed() {
        let sp = space("E8");
        for x in 0..sp.len() {
            for i in 1..=8 {
                if sp.elems[x].contains(sp.rs.simple[i - 1]) {
                    assert_eq!(sp.simple(i, x), x);
                }
            }
        }
    }
}
