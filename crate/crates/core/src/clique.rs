//! Backtracking clique search over [`RootSet`] adjacency rows.
//!
//! Cliques are reported as ascending vertex lists; a clique is only ever
//! extended by vertices larger than its last element, so each is found once.

use rayon::prelude::*;

use crate::bits::RootSet;

fn extend(
    adj: &[RootSet],
    clique: &mut Vec<usize>,
    cand: RootSet,
    common: RootSet,
    target: Option<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if let Some(k) = target {
        if clique.len() == k {
            out.push(clique.clone());
            return;
        }
        if clique.len() + cand.len() < k {
            return;
        }
    } else if cand.is_empty() {
        // maximal iff nothing at all extends it
        if common.is_empty() {
            out.push(clique.clone());
        }
        return;
    }
    for v in cand.iter() {
        clique.push(v);
        let next = cand.and(&adj[v]).above(v);
        let next_common = common.and(&adj[v]);
        extend(adj, clique, next, next_common, target, out);
        clique.pop();
    }
}

fn search(adj: &[RootSet], vertices: RootSet, target: Option<usize>) -> Vec<Vec<usize>> {
    let firsts: Vec<usize> = vertices.iter().collect();
    let mut per_first: Vec<Vec<Vec<usize>>> = firsts
        .par_iter()
        .map(|&v| {
            let mut out = Vec::new();
            let mut clique = vec![v];
            let cand = vertices.and(&adj[v]).above(v);
            let common = vertices.and(&adj[v]);
            extend(adj, &mut clique, cand, common, target, &mut out);
            out
        })
        .collect();
    let mut all: Vec<Vec<usize>> = per_first.drain(..).flatten().collect();
    all.sort();
    all
}

/// All cliques of exactly `k` vertices inside `vertices`.
pub fn cliques_of_size(adj: &[RootSet], vertices: RootSet, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    search(adj, vertices, Some(k))
}

/// All maximal cliques inside `vertices` (not extendable by any vertex of `vertices`).
pub fn maximal_cliques(adj: &[RootSet], vertices: RootSet) -> Vec<Vec<usize>> {
    search(adj, vertices, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<RootSet> {
        (0..n)
            .map(|i| RootSet::from_ids([(i + 1) % n, (i + n - 1) % n]))
            .collect()
    }

    #[test]
    fn cycle_cliques() {
        let adj = cycle(5);
        let v = RootSet::full(5);
        assert_eq!(cliques_of_size(&adj, v, 2).len(), 5);
        assert_eq!(cliques_of_size(&adj, v, 3).len(), 0);
        assert_eq!(maximal_cliques(&adj, v).len(), 5);
    }

    #[test]
    fn complete_graph() {
        let n = 6;
        let adj: Vec<RootSet> = (0..n)
            .map(|i| RootSet::from_ids((0..n).filter(|&j| j != i)))
            .collect();
        let v = RootSet::full(n);
        assert_eq!(cliques_of_size(&adj, v, 3).len(), 20);
        assert_eq!(maximal_cliques(&adj, v), vec![(0..n).collect::<Vec<_>>()]);
    }
}
