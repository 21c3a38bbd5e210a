//! The nonnesting element w_N, its commutation class and heap filters.

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nroots::NRootSpace;
use crate::qpar::QPSet;
use crate::rootsys::RootSystem;
use crate::sweep::Sweep;

#[derive(Clone, Debug, Serialize)]
pub struct NonnestingElement {
    /// 1-based simple reflections; w_N is their product in this order.
    pub word: Vec<usize>,
    /// θ_A, then each intermediate n-root, ending at θ_C.
    pub chain: Vec<usize>,
}

fn pairing_with_simple(sp: &NRootSpace, x: usize, i: usize) -> i32 {
    let g = &sp.rs.gram;
    sp.sigmas[x].iter().enumerate().map(|(j, &c)| c * g[j][i - 1]).sum()
}

fn admissible(sp: &NRootSpace, x: usize) -> Vec<usize> {
    (1..=sp.rs.rank()).filter(|&i| pairing_with_simple(sp, x, i) < 0).collect()
}

fn walk(sp: &NRootSpace, qp: &QPSet, mut pick: impl FnMut(&[usize]) -> usize) -> Result<NonnestingElement> {
    let mut x = qp.theta_a;
    let mut word = Vec::new();
    let mut chain = vec![x];
    let limit = sp.stype().quadruple_count();
    while x != qp.theta_c {
        let choices = admissible(sp, x);
        if choices.is_empty() || word.len() >= limit {
            return Err(Error::Invariant(format!(
                "no admissible simple root at {x} after {} steps",
                word.len()
            )));
        }
        let i = pick(&choices);
        let y = sp.simple(i, x);
        let mut want = sp.sigmas[x].clone();
        want[i - 1] += 2;
        if qp.levels[y] != qp.levels[x] + 1 || sp.sigmas[y] != want {
            return Err(Error::Invariant(format!("step s{i} from {x} breaks the λ/σ law")));
        }
        word.push(i);
        chain.push(y);
        x = y;
    }
    Ok(NonnestingElement { word, chain })
}

/// Greedy nonnesting sequence from θ_A to θ_C, always taking the lowest index.
pub fn nonnesting_element(sp: &NRootSpace, qp: &QPSet) -> Result<NonnestingElement> {
    walk(sp, qp, |c| c[0])
}

pub fn nonnesting_element_random<R: Rng>(sp: &NRootSpace, qp: &QPSet, rng: &mut R) -> Result<NonnestingElement> {
    walk(sp, qp, |c| c[rng.gen_range(0..c.len())])
}

/// All words obtained from `word` by swapping adjacent commuting letters.
pub fn commutation_class(rs: &RootSystem, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut q = VecDeque::from([word.to_vec()]);
    while let Some(w) = q.pop_front() {
        for p in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[p], w[p + 1]);
            if a != b && !rs.adjacent(a, b) {
                let mut v = w.clone();
                v.swap(p, p + 1);
                if seen.insert(v.clone()) {
                    q.push_back(v);
                }
            }
        }
    }
    seen
}

/// No word in the class has a factor i j i with i, j adjacent, or i i.
pub fn is_fully_commutative(rs: &RootSystem, class: &BTreeSet<Vec<usize>>) -> bool {
    class.iter().all(|w| {
        w.windows(2).all(|p| p[0] != p[1])
            && w.windows(3).all(|t| !(t[0] == t[2] && rs.adjacent(t[0], t[1])))
    })
}

/// Length, action, σ-height, full commutativity, and order-insensitivity
/// across `trials` random admissible walks.
pub fn wn_checks<R: Rng>(
    sp: &NRootSpace,
    qp: &QPSet,
    wn: &NonnestingElement,
    trials: usize,
    rng: &mut R,
) -> Result<Sweep> {
    let rs = &sp.rs;
    let m = sp.stype().quadruple_count();
    let mut s = Sweep::new("w_N");
    s.check(wn.word.len() == m && rs.word_length(&wn.word)? == m, || {
        format!("word {:?} is not reduced of length {m}", wn.word)
    });
    s.check(sp.act_word(&wn.word, qp.theta_c)? == qp.theta_a, || "w_N(θ_C) != θ_A".into());
    let gap = sp.sigma_height(qp.theta_c) - sp.sigma_height(qp.theta_a);
    s.check(gap == 2 * m as i32, || format!("ht σ(θ_C) - ht σ(θ_A) = {gap}"));
    let class = commutation_class(rs, &wn.word);
    s.check(is_fully_commutative(rs, &class), || "w_N is not fully commutative".into());
    let sig = rs.word_signature(&wn.word)?;
    for _ in 0..trials {
        let other = nonnesting_element_random(sp, qp, rng)?;
        s.check(rs.word_signature(&other.word)? == sig, || {
            format!("walk {:?} gives a different element", other.word)
        });
    }
    Ok(s)
}

/// Whether two words lie in the same commutation class.
pub fn commutation_equivalent(rs: &RootSystem, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && commutation_class(rs, a).contains(b)
}

#[derive(Clone, Debug, Serialize)]
pub struct HeapLattice {
    pub word: Vec<usize>,
    /// (p, q) with p < q in word position and letters equal or adjacent.
    pub covers: Vec<(usize, usize)>,
    /// Upward-closed position sets as bit masks, sorted by size then value.
    pub filters: Vec<u32>,
    /// v(θ_C) for each filter, v the subword on the filter's positions.
    pub images: Vec<usize>,
}

/// Order filters of the heap of w_N and their images on θ_C.
pub fn weak_interval_lattice(sp: &NRootSpace, qp: &QPSet, wn: &NonnestingElement) -> Result<HeapLattice> {
    let rs = &sp.rs;
    let w = &wn.word;
    let r = w.len();
    if r > 24 {
        return Err(Error::Unsupported(sp.stype().name(), "heap too large to enumerate"));
    }
    let linked = |p: usize, q: usize| w[p] == w[q] || rs.adjacent(w[p], w[q]);
    // above[p]: positions forced into any filter containing p
    let mut above = vec![0u32; r];
    for p in (0..r).rev() {
        for q in p + 1..r {
            if linked(p, q) {
                above[p] |= (1 << q) | above[q];
            }
        }
    }
    let covers: Vec<(usize, usize)> = (0..r)
        .flat_map(|p| (p + 1..r).map(move |q| (p, q)))
        .filter(|&(p, q)| linked(p, q) && !(p + 1..q).any(|t| linked(p, t) && above[t] >> q & 1 == 1))
        .collect();
    let mut filters: Vec<u32> = (0u32..1 << r)
        .filter(|&f| (0..r).all(|p| f >> p & 1 == 0 || f & above[p] == above[p]))
        .collect();
    filters.sort_by_key(|&f| (f.count_ones(), f));
    let images = filters
        .iter()
        .map(|&f| {
            let v: Vec<usize> = (0..r).filter(|&p| f >> p & 1 == 1).map(|p| w[p]).collect();
            sp.act_word(&v, qp.theta_c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HeapLattice { word: w.clone(), covers, filters, images })
}

/// Images are exactly the nonnesting set; filters closed under ∪ and ∩.
pub fn heap_checks(sp: &NRootSpace, heap: &HeapLattice) -> Sweep {
    let mut s = Sweep::new("heap_filters");
    let mut imgs = heap.images.clone();
    imgs.sort_unstable();
    let distinct = {
        let mut d = imgs.clone();
        d.dedup();
        d.len() == imgs.len()
    };
    s.check(distinct, || "two filters give the same n-root".into());
    s.check(imgs == sp.nonnesting(), || {
        format!("{} images vs {} nonnesting", imgs.len(), sp.nonnesting().len())
    });
    s.check(heap.filters.len() == sp.stype().dimension(), || {
        format!("{} filters, dimension {}", heap.filters.len(), sp.stype().dimension())
    });
    let set: BTreeSet<u32> = heap.filters.iter().copied().collect();
    for &a in &heap.filters {
        for &b in &heap.filters {
            s.check(set.contains(&(a | b)) && set.contains(&(a & b)), || {
                format!("filters {a:#b}, {b:#b} not closed")
            });
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpar;
    use crate::rootsys::SystemType;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(t: &str, published: &[usize], filters: usize) {
        let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
        let qp = qpar::build_order(&sp).unwrap();
        let wn = nonnesting_element(&sp, &qp).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = wn_checks(&sp, &qp, &wn, 20, &mut rng).unwrap();
        assert!(s.pass(), "{}", s.summary());
        assert!(commutation_equivalent(&sp.rs, &wn.word, published), "{t}: {:?}", wn.word);
        let heap = weak_interval_lattice(&sp, &qp, &wn).unwrap();
        assert_eq!(heap.filters.len(), filters);
        let s = heap_checks(&sp, &heap);
        assert!(s.pass(), "{}", s.summary());
    }

    #[test]
    fn d8_word_and_heap() {
        run("D8", &[2, 4, 6, 3, 5, 4], 14);
    }

    #[test]
    fn e7_word_and_heap() {
        run("E7", &[1, 3, 5, 2, 4, 3, 7], 15);
    }

    #[test]
    fn commutation_class_of_commuting_letters() {
        let rs = RootSystem::build(SystemType::d(6).unwrap()).unwrap();
        assert_eq!(commutation_class(&rs, &[1, 3, 5]).len(), 6);
        let c = commutation_class(&rs, &[1, 2, 1]);
        assert_eq!(c.len(), 1);
        assert!(!is_fully_commutative(&rs, &c));
    }
}
