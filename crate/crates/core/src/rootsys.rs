//! Simply laced root systems of types D_n (n even), E7 and E8.
//!
//! Roots live in the simple-root basis as integer vectors. Each system also
//! carries an integer Euclidean embedding; for E7/E8 the bilinear form is a
//! quarter of the Euclidean product, for type D it is the product itself.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::bits::{RootSet, ROOTSET_CAPACITY};
use crate::error::{Error, Result};

/// Root-lattice vector in simple-root coordinates.
pub type Coeffs = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    D,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SystemType {
    pub family: Family,
    pub rank: usize,
}

impl SystemType {
    pub const E7: SystemType = SystemType { family: Family::E7, rank: 7 };
    pub const E8: SystemType = SystemType { family: Family::E8, rank: 8 };

    /// Type D_n. Only even n >= 4 is meaningful here, and the root count
    /// must fit in a [`RootSet`].
    pub fn d(n: usize) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::Config(format!("type D needs even rank >= 4, got {n}")));
        }
        if n * (n - 1) > ROOTSET_CAPACITY {
            return Err(Error::Config(format!(
                "D{n} has {} positive roots; at most {ROOTSET_CAPACITY} are supported",
                n * (n - 1)
            )));
        }
        Ok(SystemType { family: Family::D, rank: n })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_uppercase().as_str() {
            "E7" => Ok(Self::E7),
            "E8" => Ok(Self::E8),
            u if u.starts_with('D') => {
                let n: usize = u[1..]
                    .parse()
                    .map_err(|_| Error::Config(format!("bad type '{s}'")))?;
                Self::d(n)
            }
            _ => Err(Error::Config(format!("unknown type '{s}'"))),
        }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::D => format!("D{}", self.rank),
            Family::E7 => "E7".into(),
            Family::E8 => "E8".into(),
        }
    }

    pub fn is_d(&self) -> bool {
        self.family == Family::D
    }

    /// k with n = 2k, for type D.
    pub fn half_rank(&self) -> usize {
        self.rank / 2
    }

    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::D => 2 * self.rank - 2,
            Family::E7 => 18,
            Family::E8 => 30,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match self.family {
            Family::D => self.rank * (self.rank - 1),
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }

    /// Number of coplanar quadruples in every positive n-root.
    pub fn quadruple_count(&self) -> usize {
        match self.family {
            Family::D => {
                let k = self.half_rank();
                k * (k - 1) / 2
            }
            Family::E7 => 7,
            Family::E8 => 14,
        }
    }

    /// Dimension of the Macdonald representation.
    pub fn dimension(&self) -> usize {
        match self.family {
            Family::D => catalan(self.half_rank()),
            Family::E7 => 15,
            Family::E8 => 50,
        }
    }

    /// Number of Euclidean coordinates in the embedding.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::D => self.rank,
            Family::E7 | Family::E8 => 8,
        }
    }

    /// B = euclid / form_den.
    pub fn form_den(&self) -> i32 {
        match self.family {
            Family::D => 1,
            Family::E7 | Family::E8 => 4,
        }
    }

    /// Dynkin edges, 1-based.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            Family::E7 => vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
            Family::E8 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
        }
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn catalan(k: usize) -> usize {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as usize
}

/// Euclidean coordinates of the simple roots.
fn simple_embedding(t: SystemType) -> Vec<Vec<i32>> {
    let n = t.rank;
    match t.family {
        Family::D => {
            let mut out = Vec::with_capacity(n);
            for i in 0..n - 1 {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                out.push(v);
            }
            let mut v = vec![0; n];
            v[n - 2] = 1;
            v[n - 1] = 1;
            out.push(v);
            out
        }
        Family::E7 => {
            // coordinates eps_0 .. eps_7
            let mut out = Vec::with_capacity(7);
            for i in 1..=6 {
                let mut v = vec![0; 8];
                v[i] = 2;
                v[i + 1] = -2;
                out.push(v);
            }
            out.push(vec![-1, -1, -1, -1, 1, 1, 1, 1]);
            out
        }
        Family::E8 => {
            // coordinates eps_1 .. eps_8 stored at 0..7
            let mut out = Vec::with_capacity(8);
            out.push(vec![1, -1, -1, -1, -1, -1, -1, 1]);
            out.push(vec![2, 2, 0, 0, 0, 0, 0, 0]);
            for i in 3..=8 {
                let mut v = vec![0; 8];
                v[i - 2] = 2;
                v[i - 3] = -2;
                out.push(v);
            }
            out
        }
    }
}

/// Absolute value convention: a root with any negative coefficient is negated.
pub fn abs_coeffs(v: &[i32]) -> (Coeffs, bool) {
    if v.iter().any(|&c| c < 0) {
        (v.iter().map(|c| -c).collect(), true)
    } else {
        (v.to_vec(), false)
    }
}

/// Root ID together with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub id: u16,
    pub neg: bool,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub stype: SystemType,
    pub gram: Vec<Vec<i32>>,
    pub positive_roots: Vec<Coeffs>,
    pub heights: Vec<i32>,
    pub highest: usize,
    /// Integer Euclidean coordinates per positive root.
    pub embedding: Vec<Vec<i32>>,
    /// Root IDs of the simple roots, in diagram order.
    pub simple: Vec<usize>,
    index: HashMap<Coeffs, usize>,
    pairing: Vec<i8>,
    ortho: Vec<RootSet>,
    refl: Vec<SignedRoot>,
}

impl RootSystem {
    pub fn build(stype: SystemType) -> Result<Self> {
        if stype.is_d() {
            SystemType::d(stype.rank)?;
        } else if stype.rank != if stype.family == Family::E7 { 7 } else { 8 } {
            return Err(Error::Config(format!("{} has fixed rank", stype.name())));
        }
        let n = stype.rank;
        let mut gram = vec![vec![0; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in stype.dynkin_edges() {
            gram[a - 1][b - 1] = -1;
            gram[b - 1][a - 1] = -1;
        }

        // closure from the simple roots under simple reflections
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let mut seen: HashMap<Coeffs, ()> = HashMap::new();
        let mut queue: VecDeque<Coeffs> = (0..n).map(unit).collect();
        for v in &queue {
            seen.insert(v.clone(), ());
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let p: i32 = (0..n).map(|j| gram[i][j] * b[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut c = b.clone();
                c[i] -= p;
                if c.iter().all(|&x| x >= 0) && !seen.contains_key(&c) {
                    seen.insert(c.clone(), ());
                    queue.push_back(c);
                }
            }
        }
        let mut roots: Vec<Coeffs> = seen.into_keys().collect();
        roots.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let heights: Vec<i32> = roots.iter().map(|r| r.iter().sum()).collect();
        let highest = roots.len() - 1;
        let index: HashMap<Coeffs, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let simple: Vec<usize> = (0..n).map(|i| index[&unit(i)]).collect();

        let se = simple_embedding(stype);
        let dim = stype.ambient_dim();
        let embedding: Vec<Vec<i32>> = roots
            .iter()
            .map(|r| {
                let mut v = vec![0; dim];
                for (i, &c) in r.iter().enumerate() {
                    for (k, x) in se[i].iter().enumerate() {
                        v[k] += c * x;
                    }
                }
                v
            })
            .collect();

        let m = roots.len();
        let mut rs = RootSystem {
            stype,
            gram,
            positive_roots: roots,
            heights,
            highest,
            embedding,
            simple,
            index,
            pairing: Vec::new(),
            ortho: Vec::new(),
            refl: Vec::new(),
        };
        let mut pairing = vec![0i8; m * m];
        let mut ortho = vec![RootSet::empty(); m];
        for a in 0..m {
            for b in 0..m {
                let p = rs.bilinear_raw(&rs.positive_roots[a], &rs.positive_roots[b]);
                pairing[a * m + b] = p as i8;
                if p == 0 {
                    ortho[a].insert(b);
                }
            }
        }
        rs.pairing = pairing;
        rs.ortho = ortho;
        let mut refl = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let v = rs.reflect_raw(a, &rs.positive_roots[b]);
                let (abs, neg) = abs_coeffs(&v);
                let id = rs.index[&abs];
                refl.push(SignedRoot { id: id as u16, neg });
            }
        }
        rs.refl = refl;
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, id: usize) -> &[i32] {
        &self.positive_roots[id]
    }

    pub fn height(&self, id: usize) -> i32 {
        self.heights[id]
    }

    pub fn root_id(&self, v: &[i32]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// ID of |v| when v is a root.
    pub fn abs_root_id(&self, v: &[i32]) -> Option<SignedRoot> {
        let (a, neg) = abs_coeffs(v);
        self.index.get(&a).map(|&id| SignedRoot { id: id as u16, neg })
    }

    fn bilinear_raw(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn bilinear(&self, a: &[i32], b: &[i32]) -> Result<i32> {
        if a.len() != self.rank() || b.len() != self.rank() {
            return Err(Error::Usage(format!(
                "vector length {} / {} does not match rank {}",
                a.len(),
                b.len(),
                self.rank()
            )));
        }
        Ok(self.bilinear_raw(a, b))
    }

    /// B between two positive roots by ID.
    #[inline]
    pub fn pairing(&self, a: usize, b: usize) -> i32 {
        self.pairing[a * self.num_positive() + b] as i32
    }

    /// Positive roots orthogonal to root `a`.
    #[inline]
    pub fn orthogonal_to(&self, a: usize) -> &RootSet {
        &self.ortho[a]
    }

    pub fn orthogonality_rows(&self) -> &[RootSet] {
        &self.ortho
    }

    fn reflect_raw(&self, mirror: usize, target: &[i32]) -> Coeffs {
        let m = &self.positive_roots[mirror];
        let p = self.bilinear_raw(m, target);
        target.iter().zip(m).map(|(t, a)| t - p * a).collect()
    }

    /// s_mirror(target) = target - B(mirror, target) mirror.
    pub fn reflect(&self, mirror: &[i32], target: &[i32]) -> Result<Coeffs> {
        let p = self.bilinear(mirror, target)?;
        if self.bilinear_raw(mirror, mirror) != 2 {
            return Err(Error::Usage(format!("{mirror:?} is not a root")));
        }
        Ok(target.iter().zip(mirror).map(|(t, a)| t - p * a).collect())
    }

    /// |s_a(beta_b)| by ID, with the sign that was dropped.
    #[inline]
    pub fn reflect_id(&self, a: usize, b: usize) -> SignedRoot {
        self.refl[a * self.num_positive() + b]
    }

    /// Apply s_{i_1}(s_{i_2}(... s_{i_r}(v))). Indices are 1-based.
    pub fn act_word(&self, word: &[usize], v: &[i32]) -> Result<Coeffs> {
        let n = self.rank();
        if v.len() != n {
            return Err(Error::Usage(format!("vector length {} != rank {n}", v.len())));
        }
        let mut out = v.to_vec();
        for &i in word.iter().rev() {
            if i == 0 || i > n {
                return Err(Error::Usage(format!("simple index {i} out of range 1..={n}")));
            }
            let p: i32 = (0..n).map(|j| self.gram[i - 1][j] * out[j]).sum();
            out[i - 1] -= p;
        }
        Ok(out)
    }

    pub fn highest_root(&self) -> &[i32] {
        &self.positive_roots[self.highest]
    }

    /// Euclidean product of embedded roots (before scaling).
    pub fn euclid(&self, a: usize, b: usize) -> i32 {
        self.embedding[a].iter().zip(&self.embedding[b]).map(|(x, y)| x * y).sum()
    }

    /// Embedding of an arbitrary lattice vector.
    pub fn embed(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; self.stype.ambient_dim()];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = &self.embedding[self.simple[i]];
            for (o, x) in out.iter_mut().zip(e) {
                *o += c * x;
            }
        }
        out
    }

    /// Length of the Weyl group element given by a word: number of positive
    /// roots sent to negative roots.
    pub fn word_length(&self, word: &[usize]) -> Result<usize> {
        let mut len = 0;
        for r in &self.positive_roots {
            let img = self.act_word(word, r)?;
            if img.iter().any(|&c| c < 0) {
                len += 1;
            }
        }
        Ok(len)
    }

    /// Images of the simple roots; identifies a group element.
    pub fn word_signature(&self, word: &[usize]) -> Result<Vec<Coeffs>> {
        self.simple
            .iter()
            .map(|&s| self.act_word(word, &self.positive_roots[s]))
            .collect()
    }

    /// Simple indices i, j (1-based) adjacent in the diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.gram[i - 1][j - 1] == -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_types() -> Vec<SystemType> {
        vec![
            SystemType::d(4).unwrap(),
            SystemType::d(6).unwrap(),
            SystemType::d(8).unwrap(),
            SystemType::d(10).unwrap(),
            SystemType::E7,
            SystemType::E8,
        ]
    }

    #[test]
    fn root_counts_and_highest_height() {
        for t in all_types() {
            let rs = RootSystem::build(t).unwrap();
            assert_eq!(rs.num_positive(), t.positive_root_count(), "{t}");
            assert_eq!(rs.heights[rs.highest] as usize, t.coxeter_number() - 1, "{t}");
            for r in &rs.positive_roots {
                assert_eq!(rs.bilinear(r, r).unwrap(), 2);
            }
        }
    }

    #[test]
    fn embedding_matches_form() {
        for t in all_types() {
            let rs = RootSystem::build(t).unwrap();
            let m = rs.num_positive();
            for a in 0..m {
                for b in 0..m {
                    assert_eq!(rs.euclid(a, b), t.form_den() * rs.pairing(a, b));
                }
            }
        }
    }

    #[test]
    fn e_type_roots_have_expected_shapes() {
        // |2(e_i +- e_j)| and (+-1)^8 vectors with the right parity
        for t in [SystemType::E7, SystemType::E8] {
            let rs = RootSystem::build(t).unwrap();
            let mut two = 0;
            let mut ones = 0;
            for e in &rs.embedding {
                if e.iter().all(|x| x.abs() == 1) {
                    ones += 1;
                } else {
                    let nz: Vec<_> = e.iter().filter(|x| **x != 0).collect();
                    assert_eq!(nz.len(), 2);
                    assert!(nz.iter().all(|x| x.abs() == 2));
                    two += 1;
                }
            }
            if t == SystemType::E7 {
                assert_eq!((two, ones), (28, 35));
            } else {
                assert_eq!((two, ones), (56, 64));
            }
        }
    }

    #[test]
    fn highest_roots() {
        let e8 = RootSystem::build(SystemType::E8).unwrap();
        assert_eq!(e8.embedding[e8.highest], vec![0, 0, 0, 0, 0, 0, 2, 2]);
        let e7 = RootSystem::build(SystemType::E7).unwrap();
        assert_eq!(e7.embedding[e7.highest], vec![-2, 2, 0, 0, 0, 0, 0, 0]);
        let d4 = RootSystem::build(SystemType::d(4).unwrap()).unwrap();
        assert_eq!(d4.highest_root(), &[1, 2, 1, 1]);
    }

    #[test]
    fn small_pairings_and_reflections() {
        let d4 = RootSystem::build(SystemType::d(4).unwrap()).unwrap();
        let a = |i: usize| d4.root(d4.simple[i - 1]).to_vec();
        assert_eq!(d4.bilinear(&a(1), &a(3)).unwrap(), 0);
        assert_eq!(d4.bilinear(&a(1), &a(2)).unwrap(), -1);
        assert_eq!(d4.reflect(&a(2), &a(1)).unwrap(), vec![1, 1, 0, 0]);
        assert_eq!(d4.reflect(&a(2), &a(2)).unwrap(), vec![0, -1, 0, 0]);
        assert!(d4.bilinear(&[1, 0], &a(1)).is_err());
        assert!(d4.act_word(&[5], &a(1)).is_err());
        assert_eq!(d4.act_word(&[], &a(1)).unwrap(), a(1));
        assert_eq!(d4.act_word(&[3, 3], &a(2)).unwrap(), a(2));
    }

    #[test]
    fn bad_ranks_rejected() {
        assert!(SystemType::d(5).is_err());
        assert!(SystemType::d(2).is_err());
        assert!(SystemType::parse("D7").is_err());
        assert!(SystemType::parse("F4").is_err());
        assert_eq!(SystemType::parse("e8").unwrap(), SystemType::E8);
    }

    #[test]
    fn every_nonsimple_root_descends() {
        for t in all_types() {
            let rs = RootSystem::build(t).unwrap();
            for (id, r) in rs.positive_roots.iter().enumerate() {
                if rs.heights[id] > 1 {
                    let ok = rs.simple.iter().any(|&s| rs.bilinear(r, rs.root(s)).unwrap() > 0);
                    assert!(ok);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn reflections_preserve_form(a in 0usize..120, b in 0usize..120, c in 0usize..120) {
            let rs = RootSystem::build(SystemType::E8).unwrap();
            let (ra, rb, rc) = (rs.root(a), rs.root(b), rs.root(c));
            let sb = rs.reflect(ra, rb).unwrap();
            let sc = rs.reflect(ra, rc).unwrap();
            prop_assert_eq!(rs.bilinear(&sb, &sc).unwrap(), rs.bilinear(rb, rc).unwrap());
            prop_assert_eq!(rs.reflect(ra, &sb).unwrap(), rb.to_vec());
        }
    }
}
