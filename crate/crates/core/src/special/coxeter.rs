//! Orbits of a Coxeter element on n-roots and cyclic sieving.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nroots::NRootSpace;
use crate::sweep::Sweep;

use super::qpoly;

/// s_1 s_2 ... s_n.
pub fn standard_coxeter_word(rank: usize) -> Vec<usize> {
    (1..=rank).collect()
}

fn check_word(sp: &NRootSpace, word: &[usize]) -> Result<()> {
    let mut w = word.to_vec();
    w.sort_unstable();
    if w != standard_coxeter_word(sp.rs.rank()) {
        return Err(Error::Usage(format!("{word:?} is not a Coxeter word")));
    }
    Ok(())
}

/// Permutation of X induced by the Coxeter element.
pub fn coxeter_permutation(sp: &NRootSpace, word: &[usize]) -> Result<Vec<usize>> {
    check_word(sp, word)?;
    (0..sp.len()).map(|x| sp.act_word(word, x)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CoxeterOrbit {
    pub seed: usize,
    pub elems: Vec<usize>,
    /// Every positive root occurs exactly once among the orbit's components.
    pub covers_all: bool,
}

fn orbit_from(sp: &NRootSpace, perm: &[usize], seed: usize) -> CoxeterOrbit {
    let mut elems = vec![seed];
    let mut y = perm[seed];
    while y != seed {
        elems.push(y);
        y = perm[y];
    }
    let mut count = vec![0u32; sp.rs.num_positive()];
    for &x in &elems {
        for &c in &sp.elems[x].components {
            count[c] += 1;
        }
    }
    let covers_all = count.iter().all(|&c| c == 1);
    CoxeterOrbit { seed, elems, covers_all }
}

pub fn coxeter_orbit(sp: &NRootSpace, word: &[usize], seed: usize) -> Result<CoxeterOrbit> {
    let perm = coxeter_permutation(sp, word)?;
    Ok(orbit_from(sp, &perm, seed))
}

/// First seed, in ID order, whose orbit covers every positive root once.
pub fn find_covering_seed(sp: &NRootSpace, word: &[usize]) -> Result<Option<CoxeterOrbit>> {
    let perm = coxeter_permutation(sp, word)?;
    Ok((0..sp.len())
        .into_par_iter()
        .map(|x| orbit_from(sp, &perm, x))
        .find_first(|o| o.covers_all))
}

#[derive(Clone, Debug, Serialize)]
pub struct SievingRow {
    pub power: usize,
    pub fixed: usize,
    pub evaluation: f64,
}

/// |fix(c^d)| against PS_X at e^{2πi d/m}, m = h/2, for d in 0..m.
pub fn cyclic_sieving(sp: &NRootSpace, word: &[usize], ps_x: &[usize]) -> Result<(Vec<SievingRow>, Sweep)> {
    let perm = coxeter_permutation(sp, word)?;
    let m = sp.stype().coxeter_number() / 2;
    let mut s = Sweep::new("cyclic_sieving");
    let mut rows = Vec::with_capacity(m);
    let mut power: Vec<usize> = (0..sp.len()).collect();
    for d in 0..=m {
        let fixed = power.iter().enumerate().filter(|(x, &y)| *x == y).count();
        if d == m {
            s.check(fixed == sp.len(), || format!("c^{m} moves {} elements", sp.len() - fixed));
            break;
        }
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * d as f64 / m as f64);
        let v = qpoly::eval_qints(ps_x, z);
        s.check((v.re - fixed as f64).abs() < 1e-6 && v.im.abs() < 1e-6, || {
            format!("d={d}: {fixed} fixed, PS = {v}")
        });
        if d > 0 {
            s.check(fixed == 0, || format!("c^{d} fixes {fixed} elements"));
        }
        rows.push(SievingRow { power: d, fixed, evaluation: v.re });
        power = power.iter().map(|&y| perm[y]).collect();
    }
    Ok((rows, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpar;
    use crate::rootsys::SystemType;
    use crate::special::poincare_closed_forms;

    #[test]
    fn type_d_theta_n_covers() {
        for n in [4, 6, 8] {
            let sp = NRootSpace::build(SystemType::d(n).unwrap()).unwrap();
            let qp = qpar::build_order(&sp).unwrap();
            let o = coxeter_orbit(&sp, &standard_coxeter_word(n), qp.theta_n).unwrap();
            assert!(o.covers_all, "D{n}");
            assert_eq!(o.elems.len(), n - 1);
        }
    }

    #[test]
    fn d8_and_e7_sieving() {
        for t in ["D8", "E7"] {
            let st = SystemType::parse(t).unwrap();
            let sp = NRootSpace::build(st).unwrap();
            let (ps, _) = poincare_closed_forms(st);
            let word = standard_coxeter_word(sp.rs.rank());
            let (rows, s) = cyclic_sieving(&sp, &word, &ps.1).unwrap();
            assert!(s.pass(), "{t}: {}", s.summary());
            assert_eq!(rows[0].fixed, sp.len());
            assert!(find_covering_seed(&sp, &word).unwrap().is_some(), "{t}");
        }
    }

    #[test]
    fn rejects_non_coxeter_words() {
        let sp = NRootSpace::build(SystemType::d(4).unwrap()).unwrap();
        assert!(coxeter_orbit(&sp, &[1, 2, 3], 0).is_err());
    }
}
