//! Permutations in one-line notation, Coxeter lengths and the descending
//! coset normal form used for reduced words and the Markov trace.
//!
//! Strand labels are 1-based. Composition is `(a·b)(x) = a(b(x))`, so right
//! multiplication by `s_i` swaps positions `i, i+1` of the one-line word.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Hard limit on strand count for the fixed-size representation.
pub const MAX_STRANDS: usize = 16;

/// Default bound for full enumeration of `S_n`.
pub const DEFAULT_ENUM_BOUND: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "at most {MAX_STRANDS} strands");
        let mut img = [0u8; MAX_STRANDS];
        for (i, x) in img.iter_mut().enumerate().take(n) {
            *x = i as u8 + 1;
        }
        Perm { n: n as u8, img }
    }

    /// Builds from one-line notation (1-based images).
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return Err(Error::BoundExceeded {
                what: "strands",
                value: n,
                bound: MAX_STRANDS,
            });
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            img[i] = x as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img[..self.n()].iter().map(|&x| x as usize).collect()
    }

    /// Image of strand `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.img[i] as usize == i + 1)
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut img = [0u8; MAX_STRANDS];
        for (i, x) in img.iter_mut().enumerate().take(self.n()) {
            *x = self.img[other.img[i] as usize - 1];
        }
        Ok(Perm { n: self.n, img })
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_STRANDS];
        for i in 0..self.n() {
            img[self.img[i] as usize - 1] = i as u8 + 1;
        }
        Perm { n: self.n, img }
    }

    /// Coxeter length (inversion count).
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The simple transposition `s_i = (i i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Perm> {
        Self::transposition(i, i + 1, n)
    }

    /// The transposition `(i j)`, `1 <= i < j <= n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Perm> {
        if !(1 <= i && i < j && j <= n) || n > MAX_STRANDS {
            return Err(invalid(format!("bad transposition ({i} {j}) in S_{n}")));
        }
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, j - 1);
        Ok(p)
    }

    /// `self · s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = *self;
        p.img.swap(i - 1, i);
        p
    }

    /// `s_i · self`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let mut p = *self;
        for x in p.img[..self.n()].iter_mut() {
            if *x as usize == i {
                *x += 1;
            } else if *x as usize == i + 1 {
                *x -= 1;
            }
        }
        p
    }

    /// Whether `length(self · s_i) > length(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.img[i - 1] < self.img[i]
    }

    /// Whether `length(s_i · self) > length(self)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.position(i) < self.position(i + 1)
    }

    /// Position of value `x` in the one-line word.
    fn position(&self, x: usize) -> usize {
        self.img[..self.n()]
            .iter()
            .position(|&y| y as usize == x)
            .expect("value in range")
            + 1
    }

    /// Coset decomposition at the top strand.
    ///
    /// Returns `(u, None)` when `n` is fixed, otherwise `(u, Some(k))` with
    /// `self = u · s_{n-1} s_{n-2} ... s_k` and lengths adding up. `u` is
    /// returned in `S_{n-1}`.
    pub fn coset_decompose(&self) -> (Perm, Option<usize>) {
        let n = self.n();
        if n == 0 {
            return (*self, None);
        }
        let (u, k) = self.coset_at(n);
        (u.restrict(n - 1), k)
    }

    /// Coset decomposition of a permutation fixing all strands above `m`.
    ///
    /// `u` keeps the full size and fixes every strand from `m` upward.
    pub(crate) fn coset_at(&self, m: usize) -> (Perm, Option<usize>) {
        debug_assert!(m >= 1 && m <= self.n());
        let k = self.position(m);
        if k == m {
            return (*self, None);
        }
        let mut u = *self;
        for p in k..m {
            u.img[p - 1] = self.img[p];
        }
        u.img[m - 1] = m as u8;
        (u, Some(k))
    }

    /// Drops trailing fixed strands down to size `m`.
    pub fn restrict(&self, m: usize) -> Perm {
        debug_assert!((m..self.n()).all(|i| self.img[i] as usize == i + 1));
        let mut p = *self;
        for x in p.img[m..].iter_mut() {
            *x = 0;
        }
        p.n = m as u8;
        p
    }

    /// Extends by fixed strands up to size `m`.
    pub fn extend(&self, m: usize) -> Result<Perm> {
        if m < self.n() || m > MAX_STRANDS {
            return Err(invalid(format!("cannot extend S_{} to S_{m}", self.n())));
        }
        let mut p = *self;
        for i in self.n()..m {
            p.img[i] = i as u8 + 1;
        }
        p.n = m as u8;
        Ok(p)
    }

    /// Canonical reduced word, built from the top strand down by coset
    /// decomposition.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut tail: Vec<Vec<usize>> = Vec::new();
        let mut cur = *self;
        for m in (1..=self.n()).rev() {
            let (u, k) = cur.coset_at(m);
            if let Some(k) = k {
                tail.push((k..m).rev().collect());
            }
            cur = u;
        }
        tail.into_iter().rev().flatten().collect()
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Perm> {
        let mut p = Perm::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(invalid(format!("generator index {i} out of range for S_{n}")));
            }
            p = p.mul_simple_right(i);
        }
        Ok(p)
    }
}

/// All permutations of `n` in lexicographic order of one-line notation.
pub fn all_perms(n: usize) -> Result<Vec<Perm>> {
    all_perms_bounded(n, DEFAULT_ENUM_BOUND)
}

pub fn all_perms_bounded(n: usize, bound: usize) -> Result<Vec<Perm>> {
    if n > bound || n > MAX_STRANDS {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: bound.min(MAX_STRANDS),
        });
    }
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Perm::from_one_line(&cur)?];
    while next_permutation(&mut cur) {
        out.push(Perm::from_one_line(&cur)?);
    }
    Ok(out)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.img[i])?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_one_line(v).unwrap()
    }

    #[test]
    fn group_operations() {
        assert_eq!(p(&[2, 1, 3]).compose(&p(&[2, 1, 3])).unwrap(), Perm::identity(3));
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(p(&[2, 3, 1]).compose(&p(&[3, 1, 2])).unwrap(), Perm::identity(3));
        assert!(p(&[1, 2]).compose(&Perm::identity(3)).is_err());
        assert!(Perm::from_one_line(&[1, 1, 2]).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(Perm::identity(4).length(), 0);
        assert_eq!(p(&[2, 1, 3]).length(), 1);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        assert_eq!(Perm::transposition(2, 5, 5).unwrap().length(), 5);
    }

    #[test]
    fn reduced_words() {
        assert!(Perm::identity(3).reduced_word().is_empty());
        assert_eq!(p(&[2, 1, 3]).reduced_word(), vec![1]);
        let w = p(&[3, 2, 1]).reduced_word();
        assert_eq!(w, vec![1, 2, 1]);
        assert_eq!(Perm::from_word(3, &w).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn transpositions() {
        assert_eq!(Perm::transposition(1, 2, 2).unwrap(), p(&[2, 1]));
        assert_eq!(Perm::transposition(1, 3, 3).unwrap(), p(&[3, 2, 1]));
        assert!(Perm::transposition(2, 2, 3).is_err());
        assert!(Perm::transposition(1, 4, 3).is_err());
        // s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i is reduced for (i j)
        for n in 2..=6 {
            for i in 1..n {
                for j in i + 1..=n {
                    let mut word: Vec<usize> = (i..j).collect();
                    word.extend((i..j - 1).rev());
                    let t = Perm::transposition(i, j, n).unwrap();
                    assert_eq!(Perm::from_word(n, &word).unwrap(), t);
                    assert_eq!(word.len(), 2 * (j - i) - 1);
                    assert_eq!(t.length(), word.len());
                }
            }
        }
    }

    #[test]
    fn coset_examples() {
        assert_eq!(Perm::identity(3).coset_decompose(), (Perm::identity(2), None));
        assert_eq!(
            Perm::simple(2, 3).unwrap().coset_decompose(),
            (Perm::identity(2), Some(2))
        );
        assert_eq!(p(&[3, 2, 1]).coset_decompose(), (p(&[2, 1]), Some(1)));
    }

    #[test]
    fn enumeration() {
        assert_eq!(all_perms(1).unwrap(), vec![Perm::identity(1)]);
        assert_eq!(all_perms(3).unwrap().len(), 6);
        assert_eq!(all_perms(5).unwrap().len(), 120);
        assert!(all_perms(9).is_err());
        assert_eq!(all_perms(0).unwrap(), vec![Perm::identity(0)]);
    }

    #[test]
    fn exhaustive_invariants() {
        for n in 1..=6 {
            for a in all_perms(n).unwrap() {
                // reduced word reassembles with the right length
                let w = a.reduced_word();
                assert_eq!(w.len(), a.length());
                assert_eq!(Perm::from_word(n, &w).unwrap(), a);
                // coset decomposition with additive lengths
                let (u, k) = a.coset_decompose();
                let u_full = u.extend(n).unwrap();
                match k {
                    None => assert_eq!(u_full, a),
                    Some(k) => {
                        let tail: Vec<usize> = (k..n).rev().collect();
                        let mut b = u_full;
                        for &i in &tail {
                            b = b.mul_simple_right(i);
                        }
                        assert_eq!(b, a);
                        assert_eq!(a.length(), u.length() + (n - k));
                    }
                }
                // right and left multiplication change length by one
                for i in 1..n {
                    let r = a.mul_simple_right(i);
                    let l = a.mul_simple_left(i);
                    let want_r = if a.right_ascent(i) { a.length() + 1 } else { a.length() - 1 };
                    let want_l = if a.left_ascent(i) { a.length() + 1 } else { a.length() - 1 };
                    assert_eq!(r.length(), want_r);
                    assert_eq!(l.length(), want_l);
                    assert_eq!(l, Perm::simple(i, n).unwrap().compose(&a).unwrap());
                    assert_eq!(r, a.compose(&Perm::simple(i, n).unwrap()).unwrap());
                }
            }
        }
    }
}
