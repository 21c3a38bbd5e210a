//! The D4 subsystem spanned by a coplanar quadruple.
//!
//! Its 12 positive roots split into three orthogonal quadruples. Writing the
//! induced simple roots as a1, a2 (branch node), a3, a4:
//!
//! ```text
//! crossing   a1+a2, a2+a3, a2+a4, a1+a2+a3+a4
//! nesting    a2, a1+a2+a3, a1+a2+a4, a2+a3+a4
//! alignment  a1, a3, a4, a1+2a2+a3+a4
//! ```

use itertools::Itertools;

use super::Label;
use crate::error::{Error, Result};
use crate::rootsys::{Coeffs, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct D4Partition {
    pub crossing: [usize; 4],
    pub nesting: [usize; 4],
    pub alignment: [usize; 4],
}

impl D4Partition {
    pub fn get(&self, l: Label) -> [usize; 4] {
        match l {
            Label::A => self.alignment,
            Label::C => self.crossing,
            Label::N => self.nesting,
        }
    }

    pub fn label_of(&self, members: &[usize; 4]) -> Option<Label> {
        let mut m = *members;
        m.sort_unstable();
        [Label::A, Label::C, Label::N].into_iter().find(|&l| self.get(l) == m)
    }
}

fn sub(a: &[i32], b: &[i32]) -> Coeffs {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Positive roots of the D4 subsystem containing `members`.
pub fn subsystem_positive(rs: &RootSystem, members: &[usize; 4]) -> Result<Vec<usize>> {
    let n = rs.rank();
    let mut out: Vec<usize> = members.to_vec();
    for signs in 0..16u32 {
        let mut v = vec![0i32; n];
        for (k, &m) in members.iter().enumerate() {
            let s = if signs >> k & 1 == 1 { -1 } else { 1 };
            for (o, c) in v.iter_mut().zip(rs.root(m)) {
                *o += s * c;
            }
        }
        if v.iter().any(|c| c % 2 != 0) {
            return Err(Error::Invariant(format!("{members:?} is not coplanar")));
        }
        let half: Coeffs = v.iter().map(|c| c / 2).collect();
        match rs.abs_root_id(&half) {
            Some(sr) => out.push(sr.id as usize),
            None => return Err(Error::Invariant(format!("{members:?} is not coplanar"))),
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.len() != 12 {
        return Err(Error::Invariant(format!(
            "D4 subsystem of {members:?} has {} positive roots",
            out.len()
        )));
    }
    Ok(out)
}

/// Split the D4 subsystem of a coplanar quadruple into its three labelled quadruples.
pub fn d4_partition(rs: &RootSystem, members: &[usize; 4]) -> Result<D4Partition> {
    let pos = subsystem_positive(rs, members)?;
    let in_pos = |v: &[i32]| rs.root_id(v).filter(|id| pos.contains(id));
    let simple: Vec<usize> = pos
        .iter()
        .copied()
        .filter(|&p| {
            !pos.iter().any(|&q| q != p && in_pos(&sub(rs.root(p), rs.root(q))).is_some())
        })
        .collect();
    if simple.len() != 4 {
        return Err(Error::Invariant(format!(
            "D4 subsystem of {members:?} has {} indecomposable roots",
            simple.len()
        )));
    }
    let branch: Vec<usize> = simple
        .iter()
        .copied()
        .filter(|&s| simple.iter().filter(|&&t| t != s && rs.pairing(s, t) != 0).count() == 3)
        .collect();
    if branch.len() != 1 {
        return Err(Error::Invariant("induced D4 diagram has no branch node".into()));
    }
    let a2 = branch[0];
    let leaves: Vec<usize> = simple.iter().copied().filter(|&s| s != a2).collect();
    let (a1, a3, a4) = (leaves[0], leaves[1], leaves[2]);

    let combo = |cs: [i32; 4]| -> Result<usize> {
        let n = rs.rank();
        let mut v = vec![0; n];
        for (c, id) in cs.iter().zip([a1, a2, a3, a4]) {
            for (o, x) in v.iter_mut().zip(rs.root(id)) {
                *o += c * x;
            }
        }
        in_pos(&v).ok_or_else(|| Error::Invariant("D4 combination is not a root".into()))
    };
    let quad = |rows: [[i32; 4]; 4]| -> Result<[usize; 4]> {
        let mut q = [0; 4];
        for (slot, r) in q.iter_mut().zip(rows) {
            *slot = combo(r)?;
        }
        q.sort_unstable();
        Ok(q)
    };
    let part = D4Partition {
        crossing: quad([[1, 1, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1], [1, 1, 1, 1]])?,
        nesting: quad([[0, 1, 0, 0], [1, 1, 1, 0], [1, 1, 0, 1], [0, 1, 1, 1]])?,
        alignment: quad([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 2, 1, 1]])?,
    };
    let all: Vec<usize> = [part.crossing, part.nesting, part.alignment]
        .iter()
        .flatten()
        .copied()
        .sorted()
        .dedup()
        .collect();
    if all != pos {
        return Err(Error::Invariant("D4 partition does not cover the subsystem".into()));
    }
    Ok(part)
}

/// Label of a coplanar quadruple computed inside its D4 subsystem.
pub fn classify_oracle(rs: &RootSystem, members: &[usize; 4]) -> Result<Label> {
    let p = d4_partition(rs, members)?;
    p.label_of(members)
        .ok_or_else(|| Error::Invariant(format!("{members:?} is not a block of its D4 partition")))
}
