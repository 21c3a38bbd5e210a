//! Products of linear forms in Euclidean coordinates, expanded exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg;
use crate::nroots::NRootSpace;
use crate::sweep::Sweep;

/// Exponent vector packed 8 bits per variable, variable 0 in the top byte.
pub type Monomial = u128;

const MAX_VARS: usize = 16;

fn shift(var: usize) -> u32 {
    8 * (MAX_VARS - 1 - var) as u32
}

pub fn exponents(m: Monomial, nvars: usize) -> Vec<u8> {
    (0..nvars).map(|v| (m >> shift(v)) as u8).collect()
}

/// Homogeneous polynomial with integer coefficients; zero terms never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyExpansion {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, i64>,
}

impl PolyExpansion {
    pub fn one(nvars: usize) -> Self {
        PolyExpansion { nvars, terms: BTreeMap::from([(0, 1)]) }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .next()
            .map(|&m| exponents(m, self.nvars).iter().map(|&e| e as u32).sum())
    }

    /// Multiply by the linear form sum_i c_i x_i.
    pub fn mul_linear(&self, form: &[i32]) -> Result<Self> {
        let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (&m, &c) in &self.terms {
            for (v, &a) in form.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if (m >> shift(v)) as u8 == u8::MAX {
                    return Err(Error::Usage("monomial exponent overflow".into()));
                }
                let e = out.entry(m + (1u128 << shift(v))).or_insert(0);
                *e = e
                    .checked_add(c.checked_mul(a as i64).ok_or_else(ovf)?)
                    .ok_or_else(ovf)?;
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(PolyExpansion { nvars: self.nvars, terms: out })
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (&m, &c) in &other.terms {
            let e = self.terms.entry(m).or_insert(0);
            *e += k * c;
        }
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&m, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = exponents(m, self.nvars)
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
                .collect();
            let sign = if c < 0 { " - " } else { " + " };
            if out.is_empty() && c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push_str(sign);
            }
            let a = c.abs();
            if a != 1 || mono.is_empty() {
                out.push_str(&a.to_string());
                if !mono.is_empty() {
                    out.push('*');
                }
            }
            out.push_str(&mono.join("*"));
        }
        out
    }
}

fn ovf() -> Error {
    Error::Invariant("coefficient overflow in polynomial expansion".into())
}

/// Product of the embedded components of an n-root.
pub fn expand_poly(sp: &NRootSpace, x: usize) -> Result<PolyExpansion> {
    let nvars = sp.stype().ambient_dim();
    if nvars > MAX_VARS {
        return Err(Error::Unsupported(sp.stype().name(), "too many coordinates to expand"));
    }
    let mut p = PolyExpansion::one(nvars);
    for &c in &sp.elems[x].components {
        p = p.mul_linear(&sp.rs.embedding[c])?;
    }
    Ok(p)
}

/// Dense rows over the union of monomials, columns in ascending monomial order.
pub fn dense_rows(polys: &[PolyExpansion]) -> (Vec<Monomial>, Vec<Vec<i64>>) {
    let mut cols: Vec<Monomial> = polys.iter().flat_map(|p| p.terms.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    let rows = polys
        .iter()
        .map(|p| {
            let mut r = vec![0; cols.len()];
            for (m, &c) in &p.terms {
                r[cols.binary_search(m).unwrap()] = c;
            }
            r
        })
        .collect();
    (cols, rows)
}

/// Dimension of the span of the given polynomials.
pub fn span_rank(polys: &[PolyExpansion]) -> usize {
    let (_, rows) = dense_rows(polys);
    linalg::rank(&rows)
}

/// Normal forms re-expanded as polynomials reproduce each element's own
/// product, and the span has dimension equal to the basis size.
pub fn oracle_equivalence(sp: &NRootSpace, table: &super::ExpansionTable) -> Result<Sweep> {
    use rayon::prelude::*;
    let polys: Vec<PolyExpansion> = (0..sp.len()).into_par_iter().map(|x| expand_poly(sp, x)).collect::<Result<_>>()?;
    let basis_pos: Vec<usize> = table.basis.clone();
    let parts: Vec<Sweep> = (0..sp.len())
        .into_par_iter()
        .map(|x| {
            let mut s = Sweep::new("polynomial_oracle");
            let mut acc = PolyExpansion { nvars: polys[x].nvars, terms: BTreeMap::new() };
            for (i, &c) in table.rows[x].iter().enumerate() {
                if c != 0 {
                    acc.add_scaled(&polys[basis_pos[i]], c);
                }
            }
            s.check(acc == polys[x], || format!("x={x}: normal form disagrees with its product"));
            s
        })
        .collect();
    let mut s = parts.into_iter().fold(Sweep::new("polynomial_oracle"), Sweep::merge);
    let rank = span_rank(&polys);
    s.check(rank == table.basis.len(), || format!("span rank {rank}, basis size {}", table.basis.len()));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SystemType;

    #[test]
    fn d4_crossing_product() {
        let sp = NRootSpace::build(SystemType::d(4).unwrap()).unwrap();
        let x = sp.id_of_matching(&[(1, 3), (2, 4)]).unwrap();
        let p = expand_poly(&sp, x).unwrap();
        // (x0^2 - x2^2)(x1^2 - x3^2)
        let mut want = PolyExpansion { nvars: 4, terms: BTreeMap::new() };
        let mono = |e: [u8; 4]| -> Monomial {
            e.iter().enumerate().map(|(v, &k)| (k as u128) << shift(v)).sum()
        };
        want.terms.insert(mono([2, 2, 0, 0]), 1);
        want.terms.insert(mono([2, 0, 0, 2]), -1);
        want.terms.insert(mono([0, 2, 2, 0]), -1);
        want.terms.insert(mono([0, 0, 2, 2]), 1);
        assert_eq!(p, want);
        assert_eq!(p.degree(), Some(4));
        assert!(p.render().contains("x0^2*x1^2"));
    }

    #[test]
    fn d6_span_has_dimension_five() {
        let sp = NRootSpace::build(SystemType::d(6).unwrap()).unwrap();
        let polys: Vec<_> = (0..sp.len()).map(|x| expand_poly(&sp, x).unwrap()).collect();
        assert_eq!(span_rank(&polys), 5);
    }

    #[test]
    fn oracle_agrees_through_e7() {
        for t in ["D4", "D6", "D8", "E7"] {
            let sp = NRootSpace::build(SystemType::parse(t).unwrap()).unwrap();
            let rw = super::super::Rewriter::new(&sp).unwrap();
            let table = super::super::ExpansionTable::build(&rw, super::super::Target::Noncrossing).unwrap();
            let s = oracle_equivalence(&sp, &table).unwrap();
            assert!(s.pass(), "{t}: {}", s.summary());
        }
    }
}
