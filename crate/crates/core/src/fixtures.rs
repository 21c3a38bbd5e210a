//! Published reference data: extremal n-roots, reduced words, labellings.
//!
//! Root vectors are simple-root coefficients in the Dynkin numbering used by
//! [`crate::rootsys`].

use crate::rootsys::{Family, SystemType};

pub const E7_THETA_A: [[i32; 7]; 7] = [
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [0, 1, 2, 1, 0, 0, 1],
    [0, 1, 2, 2, 2, 1, 1],
    [2, 3, 4, 3, 2, 1, 2],
];

pub const E7_THETA_C: [[i32; 7]; 7] = [
    [0, 1, 1, 1, 1, 0, 1],
    [0, 1, 2, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 1],
    [1, 1, 2, 1, 1, 0, 1],
    [1, 2, 2, 1, 1, 1, 1],
    [1, 2, 3, 3, 2, 1, 1],
];

pub const E7_THETA_N: [[i32; 7]; 7] = [
    [0, 0, 0, 0, 0, 0, 1],
    [0, 1, 2, 1, 0, 0, 1],
    [1, 1, 2, 1, 1, 0, 1],
    [1, 1, 2, 2, 1, 1, 1],
    [1, 2, 2, 1, 1, 1, 1],
    [1, 2, 2, 2, 1, 0, 1],
    [0, 1, 2, 2, 2, 1, 1],
];

pub const E8_THETA_A: [[i32; 8]; 8] = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 1, 2, 1, 0, 0, 0],
    [0, 1, 1, 2, 2, 2, 1, 0],
    [2, 2, 3, 4, 3, 2, 1, 0],
    [2, 3, 4, 6, 5, 4, 3, 2],
];

pub const E8_THETA_C: [[i32; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 1, 1, 0],
    [1, 1, 1, 2, 2, 1, 0, 0],
    [1, 1, 2, 2, 1, 1, 0, 0],
    [1, 1, 2, 2, 2, 1, 1, 0],
    [1, 1, 2, 3, 2, 1, 1, 1],
    [1, 1, 2, 3, 3, 3, 2, 1],
    [1, 3, 3, 5, 4, 3, 2, 1],
];

pub const E8_THETA_N: [[i32; 8]; 8] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 2, 2, 1, 0, 0, 0],
    [1, 1, 2, 2, 2, 2, 1, 0],
    [1, 1, 2, 3, 2, 2, 1, 1],
    [1, 1, 2, 3, 3, 2, 2, 1],
    [1, 2, 2, 3, 2, 2, 2, 1],
    [1, 2, 2, 3, 3, 2, 1, 1],
    [1, 2, 2, 4, 3, 2, 1, 0],
];

/// Components of θ_A, θ_C, θ_N for E7 and E8.
pub fn exceptional_extremals(t: SystemType) -> Option<[Vec<Vec<i32>>; 3]> {
    fn rows<const N: usize>(m: &[[i32; N]]) -> Vec<Vec<i32>> {
        let mut v: Vec<Vec<i32>> = m.iter().map(|r| r.to_vec()).collect();
        v.sort();
        v
    }
    match t.family {
        Family::E7 => Some([rows(&E7_THETA_A), rows(&E7_THETA_C), rows(&E7_THETA_N)]),
        Family::E8 => Some([rows(&E8_THETA_A), rows(&E8_THETA_C), rows(&E8_THETA_N)]),
        Family::D => None,
    }
}

/// θ_A, θ_C, θ_N in D_{2k} as matchings of [2k].
pub fn d_extremal_matchings(k: usize) -> [Vec<(usize, usize)>; 3] {
    let a = (1..=k).map(|i| (2 * i - 1, 2 * i)).collect();
    let c = (1..=k).map(|i| (i, i + k)).collect();
    let n = (1..=k).map(|i| (i, 2 * k + 1 - i)).collect();
    [a, c, n]
}

/// w_N in D_{2k}: w_{2,k-2} w_{3,k-3} ... w_{k,0} with w_{i,j} = s_i s_{i+2} ... s_{i+2j}.
pub fn d_wn_word(k: usize) -> Vec<usize> {
    (2..=k).flat_map(|i| (0..=k - i).map(move |t| i + 2 * t)).collect()
}

pub const E7_WN: [usize; 7] = [1, 3, 5, 2, 4, 3, 7];
pub const E8_WN: [usize; 14] = [1, 4, 6, 8, 3, 5, 7, 4, 6, 2, 5, 4, 3, 1];

pub fn wn_word(t: SystemType) -> Vec<usize> {
    match t.family {
        Family::D => d_wn_word(t.half_rank()),
        Family::E7 => E7_WN.to_vec(),
        Family::E8 => E8_WN.to_vec(),
    }
}

pub const FANO_LC: [&str; 7] = ["136", "145", "127", "235", "246", "347", "567"];
pub const FANO_LN: [&str; 7] = ["123", "145", "246", "257", "347", "356", "167"];

/// Positive n-root counts.
pub fn nroot_count(t: SystemType) -> Option<usize> {
    match (t.family, t.rank) {
        (Family::D, 4) => Some(3),
        (Family::D, 6) => Some(15),
        (Family::D, 8) => Some(105),
        (Family::D, 10) => Some(945),
        (Family::E7, _) => Some(135),
        (Family::E8, _) => Some(2025),
        _ => None,
    }
}

/// |X_I|: k! in D_{2k}, 30 in E7, 240 in E8.
pub fn xi_size(t: SystemType) -> usize {
    match t.family {
        Family::D => (1..=t.half_rank()).product(),
        Family::E7 => 30,
        Family::E8 => 240,
    }
}

/// Coefficient sum of θ_C in the noncrossing basis for D6, D8.
pub fn theta_c_coefficient_sum(t: SystemType) -> Option<i64> {
    match (t.family, t.rank) {
        (Family::D, 6) => Some(5),
        (Family::D, 8) => Some(16),
        _ => None,
    }
}

pub const SRG_E8: (usize, usize, usize, usize) = (120, 63, 30, 36);
pub const E8_CLIQUES: usize = 2025;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_words() {
        assert_eq!(d_wn_word(4), vec![2, 4, 6, 3, 5, 4]);
        assert_eq!(d_wn_word(3), vec![2, 4, 3]);
        assert_eq!(d_wn_word(2), vec![2]);
        for k in 2..6 {
            assert_eq!(d_wn_word(k).len(), k * (k - 1) / 2);
        }
    }

    #[test]
    fn d_matchings() {
        let [a, c, n] = d_extremal_matchings(3);
        assert_eq!(a, vec![(1, 2), (3, 4), (5, 6)]);
        assert_eq!(c, vec![(1, 4), (2, 5), (3, 6)]);
        assert_eq!(n, vec![(1, 6), (2, 5), (3, 4)]);
    }
}
