//! Integer partitions and Young diagrams (matrix convention, row 1 on top).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Result};

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiset union, the index of a product of monomials.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Contents `col - row` of all cells.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(r, c)| c as i64 - r as i64).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&l| l > c).count()).collect())
    }

    /// Hook length of every cell, in the order of [`Partition::cells`].
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(r, c)| (self.0[r] - c - 1) + (conj.0[c] - r - 1) + 1)
            .collect()
    }

    /// Rows whose last cell can be removed, top to bottom.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| r + 1 == self.len() || self.0[r + 1] < self.0[r])
            .collect()
    }

    /// Removes the last cell of row `r`, which must be a corner.
    pub fn remove_corner(&self, r: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// `z_λ = Π_i i^{m_i} m_i!`, where `m_i` counts the parts equal to `i`.
    pub fn z_factor(&self) -> u128 {
        let mut out: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut m = 0u128;
            while i < self.0.len() && self.0[i] == part {
                m += 1;
                i += 1;
                out *= part as u128 * m;
            }
        }
        out
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), ...`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![pt(&[3]), pt(&[2, 1]), pt(&[1, 1, 1])]);
    }

    #[test]
    fn shape_data() {
        let l = pt(&[3, 1]);
        assert_eq!(l.contents(), vec![0, 1, 2, -1]);
        assert_eq!(l.hooks(), vec![4, 2, 1, 1]);
        assert_eq!(l.conjugate(), pt(&[2, 1, 1]));
        assert_eq!(l.corners(), vec![0, 1]);
        assert_eq!(l.remove_corner(1), pt(&[3]));
        assert_eq!(pt(&[2, 2]).corners(), vec![1]);
        assert_eq!(pt(&[1, 2]), pt(&[2, 1]));
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn z_factors() {
        assert_eq!(pt(&[1, 1, 1]).z_factor(), 6);
        assert_eq!(pt(&[2, 2, 1]).z_factor(), 8);
        assert_eq!(pt(&[3]).z_factor(), 3);
        assert_eq!(Partition::empty().z_factor(), 1);
    }
}
