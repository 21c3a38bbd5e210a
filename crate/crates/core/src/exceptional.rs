//! Fano labellings in E7; Steiner quadruple systems, the Hadamard matrix of
//! θ_C, and the graphs Γ and G_E8 in E8.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::RootSet;
use crate::clique;
use crate::error::{Error, Result};
use crate::linalg;
use crate::nroots::NRootSpace;
use crate::qpar::{QPSet, XISet};
use crate::rootsys::{Family, SystemType};
use crate::sweep::{par_sweep, Sweep};

pub type Triple = [u8; 3];

/// Seven triples over 1..=7, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FanoLabelling(pub Vec<Triple>);

impl FanoLabelling {
    pub fn from_strs(ts: &[&str]) -> Self {
        let mut v: Vec<Triple> = ts
            .iter()
            .map(|s| {
                let mut d: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
                d.sort_unstable();
                [d[0], d[1], d[2]]
            })
            .collect();
        v.sort_unstable();
        FanoLabelling(v)
    }

    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(|t| t.iter().map(|d| d.to_string()).collect()).collect()
    }

    /// Every pair of points in exactly one triple.
    pub fn is_steiner(&self) -> bool {
        let mut seen = BTreeSet::new();
        for t in &self.0 {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if !seen.insert((a, b)) {
                    return false;
                }
            }
        }
        seen.len() == 21
    }

    /// Third point of each triple is the XOR of the other two.
    pub fn xor_closed(&self) -> bool {
        self.0.iter().all(|t| t[0] ^ t[1] ^ t[2] == 0)
    }

    pub fn common(&self, other: &FanoLabelling) -> usize {
        self.0.iter().filter(|t| other.0.contains(t)).count()
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> Self {
        let mut v: Vec<Triple> = self
            .0
            .iter()
            .map(|t| {
                let mut u = t.map(&f);
                u.sort_unstable();
                u
            })
            .collect();
        v.sort_unstable();
        FanoLabelling(v)
    }

    /// Number of 3-subsets E such that no (E \ {j}) ∪ {i} with i <= j, j in E,
    /// is a block.
    pub fn level_statistic(&self) -> usize {
        let blocks: BTreeSet<Triple> = self.0.iter().copied().collect();
        (1..=7u8)
            .combinations(3)
            .filter(|e| {
                !e.iter().any(|&j| {
                    (1..=j).any(|i| {
                        let rest: Vec<u8> = e.iter().copied().filter(|&x| x != j).collect();
                        if rest.contains(&i) {
                            return false;
                        }
                        let mut t = [rest[0], rest[1], i];
                        t.sort_unstable();
                        blocks.contains(&t)
                    })
                })
            })
            .count()
    }
}

fn require(t: SystemType, want: Family, what: &'static str) -> Result<()> {
    if t.family == want {
        Ok(())
    } else {
        Err(Error::Unsupported(t.name(), what))
    }
}

/// abc with v = η_abc: -1 at coordinates 0, a, b, c and +1 elsewhere.
pub fn eta_triple(v: &[i32]) -> Option<Triple> {
    if v.len() != 8 || v[0] != -1 || v.iter().any(|&c| c != 1 && c != -1) {
        return None;
    }
    let neg: Vec<u8> = (1..8).filter(|&i| v[i] == -1).map(|i| i as u8).collect();
    (neg.len() == 3).then(|| [neg[0], neg[1], neg[2]])
}

pub fn fano_labelling(sp: &NRootSpace, x: usize) -> Result<FanoLabelling> {
    require(sp.stype(), Family::E7, "Fano labellings are defined in E7")?;
    let mut v = Vec::with_capacity(7);
    for &c in &sp.elems[x].components {
        let e = &sp.rs.embedding[c];
        v.push(eta_triple(e).ok_or_else(|| {
            Error::Invariant(format!("component {e:?} of {x} is not of the form η_abc"))
        })?);
    }
    v.sort_unstable();
    Ok(FanoLabelling(v))
}

/// Labellings of X_I; the map must be injective onto Steiner triple systems.
pub fn fano_labellings(sp: &NRootSpace, xi: &XISet) -> Result<BTreeMap<usize, FanoLabelling>> {
    let mut out = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for &x in &xi.members {
        let l = fano_labelling(sp, x)?;
        if !l.is_steiner() {
            return Err(Error::Invariant(format!("labelling of {x} is not a Steiner system")));
        }
        if !seen.insert(l.clone()) {
            return Err(Error::Invariant(format!("labelling of {x} repeats")));
        }
        out.insert(x, l);
    }
    if out.len() != 30 {
        return Err(Error::Invariant(format!("{} labellings, expected 30", out.len())));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairTable {
    pub same_parity: BTreeMap<usize, usize>,
    pub cross_parity: BTreeMap<usize, usize>,
}

/// Histogram of common-triple counts over distinct pairs.
pub fn labelling_pair_intersections(
    labels: &BTreeMap<usize, FanoLabelling>,
    xi: &XISet,
) -> (PairTable, Sweep) {
    let mut s = Sweep::new("fano_same_parity");
    let mut same = BTreeMap::new();
    let mut cross = BTreeMap::new();
    for part in [&xi.even, &xi.odd] {
        for (a, b) in part.iter().tuple_combinations() {
            let c = labels[a].common(&labels[b]);
            *same.entry(c).or_insert(0) += 1;
            s.check(c == 1, || format!("{a} and {b} share {c} triples"));
        }
    }
    for a in &xi.even {
        for b in &xi.odd {
            *cross.entry(labels[a].common(&labels[b])).or_insert(0) += 1;
        }
    }
    (PairTable { same_parity: same, cross_parity: cross }, s)
}

/// λ = 14 - d on X_I.
pub fn e7_level_formula(qp: &QPSet, labels: &BTreeMap<usize, FanoLabelling>) -> Sweep {
    let mut s = Sweep::new("fano_level");
    for (&x, l) in labels {
        let d = l.level_statistic();
        s.check(qp.levels[x] + d == 14, || format!("x={x}: λ={} d={d}", qp.levels[x]));
    }
    s
}

/// W_I = <s_1..s_6> acts on labels by the transposition (i i+1).
pub fn fano_equivariance(sp: &NRootSpace, labels: &BTreeMap<usize, FanoLabelling>) -> Sweep {
    let mut s = Sweep::new("fano_equivariance");
    for (&x, l) in labels {
        for i in 1..=6u8 {
            let y = sp.simple(i as usize, x);
            let want = l.relabel(|p| if p == i { i + 1 } else if p == i + 1 { i } else { p });
            s.check(labels.get(&y) == Some(&want), || format!("x={x} s{i}"));
        }
    }
    s
}

/// XOR closure holds for exactly one labelling, the given one.
pub fn xor_unique(labels: &BTreeMap<usize, FanoLabelling>, expected: usize) -> Sweep {
    let mut s = Sweep::new("fano_xor");
    let hits: Vec<usize> = labels.iter().filter(|(_, l)| l.xor_closed()).map(|(&x, _)| x).collect();
    s.check(hits == vec![expected], || format!("XOR-closed labellings: {hits:?}"));
    s
}

/// The coplanar quadruples of every E8 n-root form an S(3,4,8) on its
/// components, closed under complement, meeting pairwise in 0 or 2.
pub fn steiner_quadruple_systems(sp: &NRootSpace) -> Result<Sweep> {
    require(sp.stype(), Family::E8, "the Steiner system check is for E8")?;
    Ok(par_sweep("steiner_s348", sp.len(), |x, s| {
        let comps = &sp.elems[x].components;
        let pos = |c: usize| comps.iter().position(|&d| d == c).unwrap() as u8;
        let blocks: Vec<u8> = sp.quads[x]
            .iter()
            .map(|q| q.members.iter().fold(0u8, |m, &c| m | 1 << pos(c)))
            .collect();
        s.check(blocks.len() == 14, || format!("x={x}: {} quadruples", blocks.len()));
        s.check(is_s348(&blocks), || format!("x={x}: not an S(3,4,8)"));
        let set: BTreeSet<u8> = blocks.iter().copied().collect();
        s.check(blocks.iter().all(|b| set.contains(&!b)), || format!("x={x}: not complement-closed"));
        s.check(
            blocks.iter().tuple_combinations().all(|(a, b)| matches!((a & b).count_ones(), 0 | 2)),
            || format!("x={x}: quadruples meet in 1 or 3"),
        );
    }))
}

/// Blocks as 8-bit masks: 4-sets covering each 3-subset exactly once.
pub fn is_s348(blocks: &[u8]) -> bool {
    let mut cover = [0u8; 256];
    for &b in blocks {
        if b.count_ones() != 4 {
            return false;
        }
        for drop in 0..8 {
            if b >> drop & 1 == 1 {
                cover[(b & !(1 << drop)) as usize] += 1;
            }
        }
    }
    (0u16..256).filter(|t| t.count_ones() == 3).all(|t| cover[t as usize] == 1)
}

/// Rows of M'_C as given for E8 θ_C, in standard coordinates.
pub const E8_MC: [[i32; 8]; 8] = [
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [-1, 1, 1, -1, 1, -1, -1, 1],
    [-1, 1, -1, 1, -1, 1, -1, 1],
    [-1, -1, 1, 1, -1, -1, 1, 1],
    [-1, -1, -1, -1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

/// Rows of M_C for E7 θ_C, in Fano coordinates 0..7.
pub const E7_MC: [[i32; 8]; 7] = [
    [-1, -1, 1, -1, 1, 1, -1, 1],
    [-1, -1, 1, 1, -1, -1, 1, 1],
    [-1, -1, -1, 1, 1, 1, 1, -1],
    [-1, 1, -1, -1, 1, -1, 1, 1],
    [-1, 1, -1, 1, -1, 1, -1, 1],
    [-1, 1, 1, -1, -1, 1, 1, -1],
    [-1, 1, 1, 1, 1, -1, -1, -1],
];

/// Component rows of x in embedding coordinates, sorted.
pub fn component_rows(sp: &NRootSpace, x: usize) -> Vec<Vec<i32>> {
    let mut rows: Vec<Vec<i32>> = sp.elems[x].components.iter().map(|&c| sp.rs.embedding[c].clone()).collect();
    rows.sort();
    rows
}

pub fn rows_match(sp: &NRootSpace, x: usize, want: &[[i32; 8]]) -> bool {
    let mut w: Vec<Vec<i32>> = want.iter().map(|r| r.to_vec()).collect();
    w.sort();
    component_rows(sp, x) == w
}

/// θ_C gives a ±1 Hadamard matrix with |det| = 8^4 whose non-constant rows
/// split the columns into the 14 blocks of an S(3,4,8).
pub fn hadamard_check(sp: &NRootSpace, theta_c: usize) -> Result<Sweep> {
    require(sp.stype(), Family::E8, "the Hadamard check is for E8")?;
    let rows = component_rows(sp, theta_c);
    let mut s = Sweep::new("hadamard");
    s.check(rows.iter().flatten().all(|&v| v == 1 || v == -1), || "entries are not ±1".into());
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let dot: i32 = a.iter().zip(b).map(|(p, q)| p * q).sum();
            let want = if i == j { 8 } else { 0 };
            s.check(dot == want, || format!("rows {i},{j}: dot {dot}"));
        }
    }
    let m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
    let det = linalg::determinant(&m);
    s.check(det.magnitude() == &num_bigint::BigUint::from(4096u32), || format!("det {det}"));
    s.check(rows_match(sp, theta_c, &E8_MC), || "rows differ from M'_C".into());
    let blocks: Vec<u8> = rows
        .iter()
        .filter(|r| r.iter().any(|&v| v != r[0]))
        .flat_map(|r| {
            let plus = (0..8).filter(|&c| r[c] > 0).fold(0u8, |m, c| m | 1 << c);
            [plus, !plus]
        })
        .collect();
    s.check(blocks.len() == 14 && is_s348(&blocks), || "column blocks are not an S(3,4,8)".into());
    Ok(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct Graph {
    pub source: String,
    /// Vertex i stands for this ID (n-root or positive root).
    pub labels: Vec<usize>,
    #[serde(skip)]
    pub adj: Vec<RootSet>,
}

impl Graph {
    pub fn from_adjacency(source: &str, labels: Vec<usize>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let adj = (0..n)
            .map(|i| RootSet::from_ids((0..n).filter(|&j| j != i && adjacent(i, j))))
            .collect();
        Graph { source: source.into(), labels, adj }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_list(&self) -> String {
        let mut out = format!("# {}: {} vertices, {} edges\n", self.source, self.len(), self.edges().len());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn dot(&self) -> String {
        let mut out = format!("graph {} {{\n", self.source);
        for i in 0..self.len() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", self.labels[i]));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn cliques(&self, k: usize) -> Vec<Vec<usize>> {
        clique::cliques_of_size(&self.adj, RootSet::full(self.len()), k)
    }
}

/// Vertices X_I^e, edges between n-roots with no common component.
pub fn build_gamma(sp: &NRootSpace, xi: &XISet) -> Result<Graph> {
    require(sp.stype(), Family::E8, "Γ is defined in E8")?;
    let v = xi.even.clone();
    let masks: Vec<RootSet> = v.iter().map(|&x| sp.masks[x]).collect();
    Ok(Graph::from_adjacency("Gamma", v, |i, j| masks[i].and(&masks[j]).is_empty()))
}

/// Positive roots, edges between orthogonal roots.
pub fn build_orthogonality_graph(sp: &NRootSpace) -> Result<Graph> {
    require(sp.stype(), Family::E8, "G_E8 is built in E8")?;
    let rs = &sp.rs;
    let labels: Vec<usize> = (0..rs.num_positive()).collect();
    Ok(Graph::from_adjacency("G_E8", labels, |i, j| rs.orthogonal_to(i).contains(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

pub fn srg_certify(g: &Graph) -> Result<SrgParams> {
    let n = g.len();
    let fail = |m: String| Error::Invariant(format!("{} is not strongly regular: {m}", g.source));
    let k = g.adj.first().map_or(0, RootSet::len);
    if let Some(i) = (0..n).find(|&i| g.adj[i].len() != k) {
        return Err(fail(format!("vertex {i} has degree {}, vertex 0 has {k}", g.adj[i].len())));
    }
    let pairs: Vec<(usize, usize, bool, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n).map(move |j| (i, j, g.adj[i].contains(j), g.adj[i].and(&g.adj[j]).len()))
        })
        .collect();
    let constant = |adjacent: bool| -> Result<Option<usize>> {
        let mut it = pairs.iter().filter(|p| p.2 == adjacent);
        let Some(first) = it.next() else { return Ok(None) };
        match it.find(|p| p.3 != first.3) {
            Some(p) => Err(fail(format!(
                "pairs ({},{}) and ({},{}) have {} and {} common neighbours",
                first.0, first.1, p.0, p.1, first.3, p.3
            ))),
            None => Ok(Some(first.3)),
        }
    };
    let lambda = constant(true)?.ok_or_else(|| fail("no edges".into()))?;
    let mu = constant(false)?.ok_or_else(|| fail("no non-adjacent pairs, μ undefined".into()))?;
    Ok(SrgParams { v: n, k, lambda, mu })
}

/// Histogram: value = number of given cliques through an edge, count = edges.
pub fn edge_clique_statistic(g: &Graph, cliques: &[Vec<usize>]) -> BTreeMap<usize, usize> {
    let n = g.len();
    let mut per = vec![0usize; n * n];
    for c in cliques {
        for (a, b) in c.iter().tuple_combinations() {
            per[a * n + b] += 1;
        }
    }
    let mut hist = BTreeMap::new();
    for (u, v) in g.edges() {
        *hist.entry(per[u.min(v) * n + u.max(v)]).or_insert(0) += 1;
    }
    hist
}

/// Histogram of the number of 5-cliques through each edge, i.e. triangles
/// in the common neighbourhood of its endpoints.
pub fn edge_k5_statistic(g: &Graph) -> BTreeMap<usize, usize> {
    let counts: Vec<usize> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| {
            let common = g.adj[u].and(&g.adj[v]);
            let mut t = 0;
            for a in common.iter() {
                let na = g.adj[a].and(&common);
                for b in na.iter().filter(|&b| b > a) {
                    t += g.adj[b].and(&na).iter().filter(|&c| c > b).count();
                }
            }
            t
        })
        .collect();
    let mut hist = BTreeMap::new();
    for t in counts {
        *hist.entry(t).or_insert(0) += 1;
    }
    hist
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphComparison {
    pub gamma_srg: SrgParams,
    pub orth_srg: SrgParams,
    pub gamma_cliques: usize,
    pub orth_cliques: usize,
    /// 8-cliques through each edge; equal on both graphs.
    pub gamma_edge_cliques: BTreeMap<usize, usize>,
    pub orth_edge_cliques: BTreeMap<usize, usize>,
    /// 5-cliques through each edge; the certificate.
    pub gamma_edge_stat: BTreeMap<usize, usize>,
    pub orth_edge_stat: BTreeMap<usize, usize>,
    pub distinguished: bool,
}

pub fn distinguish_graphs(gamma: &Graph, orth: &Graph) -> Result<GraphComparison> {
    let gc = gamma.cliques(8);
    let oc = orth.cliques(8);
    let gamma_edge_stat = edge_k5_statistic(gamma);
    let orth_edge_stat = edge_k5_statistic(orth);
    let distinguished = gamma_edge_stat.len() >= 2 && orth_edge_stat.len() == 1;
    Ok(GraphComparison {
        gamma_srg: srg_certify(gamma)?,
        orth_srg: srg_certify(orth)?,
        gamma_cliques: gc.len(),
        orth_cliques: oc.len(),
        gamma_edge_cliques: edge_clique_statistic(gamma, &gc),
        orth_edge_cliques: edge_clique_statistic(orth, &oc),
        gamma_edge_stat,
        orth_edge_stat,
        distinguished,
    })
}

/// 8-cliques of G_E8 are exactly the n-roots.
pub fn orth_cliques_are_nroots(sp: &NRootSpace, orth: &Graph) -> Sweep {
    let mut s = Sweep::new("cliques_are_nroots");
    let mut got: Vec<RootSet> = orth.cliques(8).iter().map(|c| RootSet::from_ids(c.iter().copied())).collect();
    got.sort();
    let mut want = sp.masks.clone();
    want.sort();
    s.check(got == want, || format!("{} cliques, {} n-roots", got.len(), want.len()));
    s
}

/// Same-parity X_I pairs share 0, 2 or 8 components; Γ adjacency is the 0 case.
pub fn same_parity_overlaps(sp: &NRootSpace, xi: &XISet, gamma: &Graph) -> (BTreeMap<usize, usize>, Sweep) {
    let mut s = Sweep::new("same_parity_overlap");
    let mut hist = BTreeMap::new();
    for part in [&xi.even, &xi.odd] {
        for &a in part.iter() {
            for &b in part.iter() {
                let c = sp.masks[a].and(&sp.masks[b]).len();
                *hist.entry(c).or_insert(0) += 1;
                s.check(matches!(c, 0 | 2 | 8) && (c == 8) == (a == b), || format!("{a},{b} share {c}"));
            }
        }
    }
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            if i != j {
                let c = sp.masks[gamma.labels[i]].and(&sp.masks[gamma.labels[j]]).len();
                s.check(gamma.adj[i].contains(j) == (c == 0), || format!("Γ edge {i},{j} vs overlap {c}"));
            }
        }
    }
    (hist, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpar;

    fn setup(t: &str) -> (NRootSpace, QPSet, XISet) {
        let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
        let qp = qpar::build_order(&sp).unwrap();
        let xi = qpar::alignment_free(&sp, &qp).unwrap();
        (sp, qp, xi)
    }

    #[test]
    fn e7_fano() {
        let (sp, qp, xi) = setup("E7");
        let labels = fano_labellings(&sp, &xi).unwrap();
        let lc = FanoLabelling::from_strs(&["136", "145", "127", "235", "246", "347", "567"]);
        let ln = FanoLabelling::from_strs(&["123", "145", "246", "257", "347", "356", "167"]);
        assert_eq!(labels[&qp.theta_c], lc);
        assert_eq!(labels[&qp.theta_n], ln);
        assert!(rows_match(&sp, qp.theta_c, &E7_MC));
        assert_eq!(lc.level_statistic(), 7);
        assert_eq!(ln.level_statistic(), 0);
        assert!(xor_unique(&labels, qp.theta_n).pass());
        let (table, s) = labelling_pair_intersections(&labels, &xi);
        assert!(s.pass());
        assert_eq!(table.same_parity.get(&1), Some(&210));
        assert!(e7_level_formula(&qp, &labels).pass());
        assert!(fano_equivariance(&sp, &labels).pass());
    }

    #[test]
    fn s348_detects_bad_systems() {
        let good: Vec<u8> = vec![
            0x0f, 0xf0, 0x33, 0xcc, 0x55, 0xaa, 0x3c, 0xc3, 0x5a, 0xa5, 0x66, 0x99, 0x69, 0x96,
        ];
        assert!(is_s348(&good));
        let mut bad = good.clone();
        bad[0] = 0x17;
        assert!(!is_s348(&bad));
    }

    #[test]
    fn k4_has_no_mu() {
        let g = Graph::from_adjacency("K4", vec![0, 1, 2, 3], |_, _| true);
        let e = srg_certify(&g).unwrap_err();
        assert!(e.to_string().contains("μ undefined"));
        let c5 = Graph::from_adjacency("C5", (0..5).collect(), |i, j| (i + 5 - j) % 5 == 1 || (j + 5 - i) % 5 == 1);
        assert_eq!(srg_certify(&c5).unwrap(), SrgParams { v: 5, k: 2, lambda: 0, mu: 1 });
        assert!(c5.dot().contains("0 -- 1;"));
    }

    #[test]
    fn e8_structures() {
        let (sp, qp, xi) = setup("E8");
        assert!(steiner_quadruple_systems(&sp).unwrap().pass());
        assert!(hadamard_check(&sp, qp.theta_c).unwrap().pass());
        let gamma = build_gamma(&sp, &xi).unwrap();
        let orth = build_orthogonality_graph(&sp).unwrap();
        let (hist, s) = same_parity_overlaps(&sp, &xi, &gamma);
        assert!(s.pass(), "{}", s.summary());
        assert!(hist.contains_key(&2));
        assert!(orth_cliques_are_nroots(&sp, &orth).pass());
        let cmp = distinguish_graphs(&gamma, &orth).unwrap();
        let srg = SrgParams { v: 120, k: 63, lambda: 30, mu: 36 };
        assert_eq!((cmp.gamma_srg, cmp.orth_srg), (srg, srg));
        assert_eq!((cmp.gamma_cliques, cmp.orth_cliques), (2025, 2025));
        assert!(cmp.distinguished, "{:?} {:?}", cmp.gamma_edge_stat, cmp.orth_edge_stat);
        assert_eq!(cmp.gamma_edge_stat, BTreeMap::from([(300, 420), (332, 3360)]));
        assert_eq!(cmp.orth_edge_stat, BTreeMap::from([(300, 3780)]));
        assert_eq!(cmp.gamma_edge_cliques, cmp.orth_edge_cliques);
    }

    #[test]
    fn rejects_wrong_family() {
        let (sp, qp, xi) = setup("D6");
        assert!(fano_labellings(&sp, &xi).is_err());
        assert!(hadamard_check(&sp, qp.theta_c).is_err());
        assert!(build_gamma(&sp, &xi).is_err());
    }
}
