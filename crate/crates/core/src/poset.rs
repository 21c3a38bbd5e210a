//! Reachability and Möbius computations on a graded cover digraph.

use std::collections::VecDeque;

use crate::bits::BitVec;

/// Up-sets and down-sets of every element, as bit rows.
#[derive(Clone, Debug)]
pub struct Reach {
    pub up: Vec<BitVec>,
    pub down: Vec<BitVec>,
}

impl Reach {
    /// `out[x]` lists the upper covers of x; `levels` must be a rank function.
    pub fn from_covers(out: &[Vec<usize>], levels: &[usize]) -> Self {
        let n = out.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(levels[x]));
        let mut up = vec![BitVec::new(n); n];
        for &x in &order {
            let mut row = BitVec::new(n);
            row.set(x);
            for &y in &out[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }
        let mut down = vec![BitVec::new(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].set(x);
            }
        }
        Reach { up, down }
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn interval(&self, a: usize, b: usize) -> BitVec {
        self.up[a].and(&self.down[b])
    }
}

/// Single reachability query by breadth-first search over upper covers.
pub fn bfs_leq(out: &[Vec<usize>], levels: &[usize], a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let mut seen = vec![false; out.len()];
    let mut q = VecDeque::from([a]);
    seen[a] = true;
    while let Some(x) = q.pop_front() {
        for &y in &out[x] {
            if y == b {
                return true;
            }
            if !seen[y] && levels[y] < levels[b] {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    false
}

/// μ(a, b) by the defining recursion over the interval [a, b].
pub fn mobius(reach: &Reach, levels: &[usize], a: usize, b: usize) -> i64 {
    if !reach.leq(a, b) {
        return 0;
    }
    let mut elems: Vec<usize> = reach.interval(a, b).iter().collect();
    elems.sort_by_key(|&z| levels[z]);
    let mut mu = std::collections::HashMap::new();
    for &z in &elems {
        let v = if z == a {
            1
        } else {
            -elems
                .iter()
                .filter(|&&w| w != z && levels[w] < levels[z] && reach.leq(w, z))
                .map(|w| mu[w])
                .sum::<i64>()
        };
        mu.insert(z, v);
    }
    mu[&b]
}

/// Whether μ(u, v) = (-1)^{λ(v) - λ(u)} for all u <= v inside `members`.
///
/// Uses the equivalent condition that every nontrivial subinterval has as
/// many even-level as odd-level elements; short intervals are tested first.
pub fn is_eulerian(reach: &Reach, levels: &[usize], members: &BitVec) -> bool {
    let n = levels.len();
    let even = BitVec::from_ids(n, (0..n).filter(|&z| levels[z] % 2 == 0));
    let elems: Vec<usize> = members.iter().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &a in &elems {
        for &b in &elems {
            if a != b && reach.leq(a, b) {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_by_key(|&(a, b)| levels[b] - levels[a]);
    pairs.into_iter().all(|(a, b)| {
        let total = reach.up[a].count_and(&reach.down[b]);
        let ev = reach.up[a].count_and3(&reach.down[b], &even);
        2 * ev == total
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Boolean lattice on 2 atoms: 0 < a, b < 1
    fn diamond() -> (Vec<Vec<usize>>, Vec<usize>) {
        (vec![vec![1, 2], vec![3], vec![3], vec![]], vec![0, 1, 1, 2])
    }

    #[test]
    fn diamond_is_eulerian() {
        let (out, lv) = diamond();
        let r = Reach::from_covers(&out, &lv);
        assert!(r.leq(0, 3) && !r.leq(1, 2));
        assert_eq!(mobius(&r, &lv, 0, 3), 1);
        assert_eq!(mobius(&r, &lv, 0, 1), -1);
        assert!(is_eulerian(&r, &lv, &BitVec::from_ids(4, 0..4)));
        assert!(bfs_leq(&out, &lv, 0, 3));
        assert!(!bfs_leq(&out, &lv, 3, 0));
    }

    #[test]
    fn chain_is_not_eulerian() {
        let out = vec![vec![1], vec![2], vec![]];
        let lv = vec![0, 1, 2];
        let r = Reach::from_covers(&out, &lv);
        assert_eq!(mobius(&r, &lv, 0, 2), 0);
        assert!(!is_eulerian(&r, &lv, &BitVec::from_ids(3, 0..3)));
        assert!(is_eulerian(&r, &lv, &BitVec::from_ids(3, [1])));
    }
}
