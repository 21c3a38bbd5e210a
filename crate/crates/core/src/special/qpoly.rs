//! Integer polynomials in q, coefficients listed by degree.

use num_complex::Complex64;

pub type QPoly = Vec<i64>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// [d]_q = 1 + q + ... + q^{d-1}.
pub fn qint(d: usize) -> QPoly {
    vec![1; d]
}

pub fn mul(a: &[i64], b: &[i64]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn shift(p: &[i64], k: usize) -> QPoly {
    let mut out = vec![0; k];
    out.extend_from_slice(p);
    trim(out)
}

/// q^shift * prod [d]_q.
pub fn product_form(shift_by: usize, ds: &[usize]) -> QPoly {
    let p = ds.iter().fold(vec![1], |acc, &d| mul(&acc, &qint(d)));
    shift(&p, shift_by)
}

/// Exact quotient by a monic divisor, if the division is exact.
pub fn div_exact(p: &[i64], d: &[i64]) -> Option<QPoly> {
    let p = trim(p.to_vec());
    let d = trim(d.to_vec());
    if d.is_empty() || *d.last().unwrap() != 1 || p.len() < d.len() {
        return None;
    }
    let mut rem = p.clone();
    let mut quot = vec![0; p.len() - d.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d.len() - 1];
        quot[k] = c;
        for (j, &dj) in d.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(trim(quot))
    } else {
        None
    }
}

/// Write p as q^s prod_{d in D} [d]_q, choosing the largest quantum integer
/// factor first. Returns (s, D) with D ascending, or None.
pub fn factor_shifted_qints(p: &[i64]) -> Option<(usize, Vec<usize>)> {
    let p = trim(p.to_vec());
    let low = p.iter().position(|&c| c != 0)?;
    let mut rest = trim(p[low..].to_vec());
    let mut ds = Vec::new();
    while rest.len() > 1 {
        let deg = rest.len() - 1;
        let d = (2..=deg + 1).rev().find(|&d| div_exact(&rest, &qint(d)).is_some())?;
        rest = div_exact(&rest, &qint(d)).unwrap();
        ds.push(d);
    }
    if rest != vec![1] {
        return None;
    }
    ds.sort_unstable();
    Some((low, ds))
}

pub fn eval(p: &[i64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
}

/// prod [d]_q at z.
pub fn eval_qints(ds: &[usize], z: Complex64) -> Complex64 {
    ds.iter().fold(Complex64::new(1.0, 0.0), |acc, &d| acc * eval(&qint(d), z))
}

pub fn render(p: &[i64]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (k, 1) => format!("q^{k}"),
            (k, c) => format!("{c}q^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factor_known() {
        // q^7 [2][3][5]
        let p = product_form(7, &[2, 3, 5]);
        assert_eq!(factor_shifted_qints(&p), Some((7, vec![2, 3, 5])));
        assert_eq!(factor_shifted_qints(&[0, 0, 0, 1]), Some((3, vec![])));
        assert_eq!(factor_shifted_qints(&[1, 2]), None);
        assert_eq!(factor_shifted_qints(&[0, 1, 1, 0, 1]), None);
    }

    #[test]
    fn evaluation_at_roots_of_unity() {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
        assert!(eval_qints(&[5], z).norm() < 1e-9);
        assert!((eval_qints(&[3, 5], Complex64::new(1.0, 0.0)).re - 15.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn factorization_round_trips(ds in proptest::collection::vec(2usize..9, 0..5), k in 0usize..10) {
            let p = product_form(k, &ds);
            let mut want = ds.clone();
            want.sort_unstable();
            prop_assert_eq!(factor_shifted_qints(&p), Some((k, want)));
        }
    }
}
