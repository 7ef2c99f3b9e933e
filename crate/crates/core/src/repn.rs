//! Seminormal irreducible representations of `H_n`, characters, central
//! character values, and the closure map into symmetric functions.
//!
//! The representation `V_λ` has a basis of standard tableaux of shape `λ`.
//! For `σ_i` and a tableau `t`: if `i, i+1` share a row `σ_i` acts by `s`, if
//! they share a column by `-s^{-1}`, and otherwise `t` and `s_i t` span a
//! block with diagonal `α_t = z / (1 - s^{-2d})`, `z - α_t`, where
//! `d = c_t(i+1) - c_t(i)` is the content difference.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::coeff::Scalar;
use crate::error::{invalid, Error, Result};
use crate::hecke::HeckeElt;
use crate::partition::{partitions, Partition};
use crate::perm::{all_perms, Perm, DEFAULT_ENUM_BOUND};
use crate::symfun::{schur, SymFunc};

/// Largest `n` for which full character tables are built.
pub const CHARACTER_TABLE_BOUND: usize = 6;

/// Standard Young tableau, stored as the cell of each entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StdTableau {
    shape: Partition,
    cells: Vec<(usize, usize)>,
}

impl StdTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Cell `(row, col)`, 0-based, holding entry `k` (1-based).
    pub fn cell_of(&self, k: usize) -> (usize, usize) {
        self.cells[k - 1]
    }

    pub fn content_of(&self, k: usize) -> i64 {
        let (r, c) = self.cell_of(k);
        c as i64 - r as i64
    }

    /// Rows of the filling.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (k, &(r, c)) in self.cells.iter().enumerate() {
            rows[r][c] = k + 1;
        }
        rows
    }

    fn swapped(&self, i: usize) -> StdTableau {
        let mut t = self.clone();
        t.cells.swap(i - 1, i);
        t
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Standard tableaux of shape `λ`, grouped by the row of the largest entry
/// (top rows first), recursively.
pub fn std_tableaux(shape: &Partition) -> Result<Vec<StdTableau>> {
    let n = shape.weight();
    if n > DEFAULT_ENUM_BOUND {
        return Err(Error::BoundExceeded {
            what: "|λ|",
            value: n,
            bound: DEFAULT_ENUM_BOUND,
        });
    }
    fn rec(shape: &Partition) -> Vec<Vec<(usize, usize)>> {
        if shape.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for r in shape.corners() {
            let c = shape.parts()[r] - 1;
            for mut cells in rec(&shape.remove_corner(r)) {
                cells.push((r, c));
                out.push(cells);
            }
        }
        out
    }
    Ok(rec(shape)
        .into_iter()
        .map(|cells| StdTableau {
            shape: shape.clone(),
            cells,
        })
        .collect())
}

/// Dense square matrix over `Scalar`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &Scalar::one())
    }

    pub fn scalar(dim: usize, c: &Scalar) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.dim + c] = x;
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * d + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    /// `c` when the matrix is `c · I`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.is_diagonal() {
            return None;
        }
        let d = self.diagonal();
        match d.first() {
            None => Some(Scalar::zero()),
            Some(c) => d.iter().all(|x| x == c).then(|| c.clone()),
        }
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.dim == 0 {
            return Vec::<Vec<Scalar>>::new().serialize(serializer);
        }
        self.rows().serialize(serializer)
    }
}

/// `ρ_λ(σ_i)` together with its labels.
#[derive(Clone, Debug, Serialize)]
pub struct RepMatrix {
    pub lambda: Partition,
    pub generator: usize,
    pub matrix: Matrix,
}

/// Column `c` of a generator matrix as `(row, entry)` pairs.
type SparseColumns = Vec<Vec<(usize, Scalar)>>;

/// The seminormal representation `V_λ` with its generator matrices.
pub struct SeminormalRep {
    lambda: Partition,
    tableaux: Vec<StdTableau>,
    gens: Vec<SparseColumns>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let tableaux = std_tableaux(lambda)?;
        let n = lambda.weight();
        let index: HashMap<&StdTableau, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let z = Scalar::z();
        let s = Scalar::s();
        let neg_s_inv = -Scalar::s_pow(-1);
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut cols: SparseColumns = vec![Vec::new(); tableaux.len()];
            for (a, t) in tableaux.iter().enumerate() {
                let (ri, ci) = t.cell_of(i);
                let (rj, cj) = t.cell_of(i + 1);
                if ri == rj {
                    cols[a].push((a, s.clone()));
                } else if ci == cj {
                    cols[a].push((a, neg_s_inv.clone()));
                } else {
                    let d = t.content_of(i + 1) - t.content_of(i);
                    let b = index[&t.swapped(i)];
                    let denom = &Scalar::one() - &Scalar::s_pow(-2 * d as i32);
                    let alpha = &z / &denom;
                    cols[a].push((a, alpha.clone()));
                    let off = if a < b {
                        // lower entry at (b, a)
                        &(&alpha * &(&z - &alpha)) + &Scalar::one()
                    } else {
                        Scalar::one()
                    };
                    cols[a].push((b, off));
                }
            }
            for col in cols.iter_mut() {
                col.sort_by_key(|(r, _)| *r);
            }
            gens.push(cols);
        }
        Ok(SeminormalRep {
            lambda: lambda.clone(),
            tableaux,
            gens,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StdTableau] {
        &self.tableaux
    }

    pub fn generator_matrix(&self, i: usize) -> Result<Matrix> {
        let cols = self.gen_cols(i)?;
        let mut m = Matrix::zero(self.dim());
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col {
                m.set(*r, c, x.clone());
            }
        }
        Ok(m)
    }

    fn gen_cols(&self, i: usize) -> Result<&SparseColumns> {
        if i == 0 || i > self.gens.len() {
            return Err(invalid(format!("generator {i} out of range for λ = {}", self.lambda)));
        }
        Ok(&self.gens[i - 1])
    }

    /// `m · ρ(σ_i)`.
    fn right_gen(&self, m: &Matrix, i: usize) -> Matrix {
        let cols = &self.gens[i - 1];
        let d = self.dim();
        let mut out = Matrix::zero(d);
        for r in 0..d {
            for (c, col) in cols.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (k, g) in col {
                    let a = m.get(r, *k);
                    if !a.is_zero() {
                        acc += &(a * g);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// `ρ_λ(x)`, multiplying generator matrices along canonical reduced words.
    pub fn rep_of(&self, x: &HeckeElt) -> Result<Matrix> {
        if x.n() != self.lambda.weight() {
            return Err(Error::SizeMismatch {
                left: x.n(),
                right: self.lambda.weight(),
            });
        }
        if x.is_zero() {
            return Ok(Matrix::zero(self.dim()));
        }
        let y: Vec<(Perm, Scalar)> = x.terms().iter().map(|(p, c)| (*p, c.clone())).collect();
        Ok(self.level(y, x.n()))
    }

    fn level(&self, y: Vec<(Perm, Scalar)>, m: usize) -> Matrix {
        if m <= 1 {
            return Matrix::scalar(self.dim(), &y[0].1);
        }
        let mut groups: BTreeMap<Option<usize>, Vec<(Perm, Scalar)>> = BTreeMap::new();
        for (p, c) in y {
            let (u, k) = p.coset_at(m);
            groups.entry(k).or_default().push((u, c));
        }
        let mut out: Option<Matrix> = None;
        for (k, part) in groups {
            let mut r = self.level(part, m - 1);
            if let Some(k) = k {
                for i in (k..m).rev() {
                    r = self.right_gen(&r, i);
                }
            }
            out = Some(match out {
                None => r,
                Some(acc) => acc.add(&r),
            });
        }
        out.expect("nonempty")
    }

    pub fn character(&self, x: &HeckeElt) -> Result<Scalar> {
        Ok(self.rep_of(x)?.trace())
    }
}

/// `ρ_λ(σ_i)`.
pub fn rho(lambda: &Partition, i: usize) -> Result<RepMatrix> {
    let rep = SeminormalRep::new(lambda)?;
    Ok(RepMatrix {
        lambda: lambda.clone(),
        generator: i,
        matrix: rep.generator_matrix(i)?,
    })
}

pub fn rep_of(x: &HeckeElt, lambda: &Partition) -> Result<Matrix> {
    SeminormalRep::new(lambda)?.rep_of(x)
}

pub fn character(x: &HeckeElt, lambda: &Partition) -> Result<Scalar> {
    SeminormalRep::new(lambda)?.character(x)
}

/// Image in the annulus skein: `Σ_λ χ_λ(x) s_λ`.
pub fn closure(x: &HeckeElt) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for lambda in partitions(x.n()) {
        let chi = character(x, &lambda)?;
        if !chi.is_zero() {
            out = &out + &schur(&lambda).scale(&chi);
        }
    }
    Ok(out)
}

/// The scalar by which a central element acts on `V_λ`.
pub fn central_scalar(x: &HeckeElt, lambda: &Partition) -> Result<Scalar> {
    if !x.is_central() {
        return Err(Error::NotCentral);
    }
    rep_of(x, lambda)?.as_scalar().ok_or(Error::NotScalar)
}

/// One row of a character table: `χ_λ(ω_π)` for every `π`.
#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub lambda: Partition,
    pub values: Vec<(Perm, Scalar)>,
}

struct Values<'a>(&'a [(Perm, Scalar)]);

impl Serialize for Values<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (p, c) in self.0 {
            let key = serde_json::to_string(p).map_err(serde::ser::Error::custom)?;
            map.serialize_entry(&key, c)?;
        }
        map.end()
    }
}

impl Serialize for CharacterRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CharacterRow", 2)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("values", &Values(&self.values))?;
        st.end()
    }
}

/// Characters of every irreducible on every basis element `ω_π`.
pub fn character_table(n: usize) -> Result<Vec<CharacterRow>> {
    if n > CHARACTER_TABLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: CHARACTER_TABLE_BOUND,
        });
    }
    let mut perms = all_perms(n)?;
    let mut rows = Vec::new();
    for lambda in partitions(n) {
        let rep = SeminormalRep::new(&lambda)?;
        // ρ(ω_π) = ρ(ω_{πs_i}) ρ(σ_i) for the last letter i of π's word
        perms.sort_by_key(|p| p.length());
        let mut mats: HashMap<Perm, Matrix> = HashMap::new();
        for p in &perms {
            let m = match p.reduced_word().last() {
                None => Matrix::identity(rep.dim()),
                Some(&i) => rep.right_gen(&mats[&p.mul_simple_right(i)], i),
            };
            mats.insert(*p, m);
        }
        let mut values: Vec<(Perm, Scalar)> = mats.iter().map(|(p, m)| (*p, m.trace())).collect();
        values.sort_by_key(|t| t.0);
        rows.push(CharacterRow { lambda, values });
    }
    Ok(rows)
}
