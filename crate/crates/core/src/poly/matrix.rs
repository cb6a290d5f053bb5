use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Arc<Ring>, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("rows have different lengths".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: &Arc<Ring>, size: usize) -> Self {
        let entries = (0..size * size)
            .map(|k| if k / size == k % size { Polynomial::one(ring) } else { Polynomial::zero(ring) })
            .collect();
        PolyMatrix { ring: ring.clone(), rows: size, cols: size, entries }
    }

    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.ring(), &self.ring);
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("matrix shapes do not compose".into()));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: other.cols, entries })
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    /// Exact determinant: cofactor expansion up to size 4, fraction-free
    /// elimination above.
    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows <= 4 {
            Ok(self.cofactor_det())
        } else {
            Ok(self.bareiss_det())
        }
    }

    /// Laplace expansion along the first row, any size.
    pub fn determinant_cofactor(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.cofactor_det())
    }

    /// Bareiss fraction-free elimination, any size.
    pub fn determinant_bareiss(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.bareiss_det())
    }

    fn cofactor_det(&self) -> Polynomial {
        let idx: Vec<usize> = (0..self.rows).collect();
        self.cofactor_rec(&idx, &idx)
    }

    fn cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        match rows.len() {
            0 => Polynomial::one(&self.ring),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                &(self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]))
                    - &(self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]))
            }
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = e * &self.cofactor_rec(&rows[1..], &rest);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    fn bareiss_det(&self) -> Polynomial {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut a: Vec<Vec<Polynomial>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign_negative = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign_negative = !sign_negative;
                    }
                    None => return Polynomial::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign_negative {
            -&det
        } else {
            det
        }
    }

    /// All `size`×`size` minors, row subsets outermost, both in
    /// lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::MinorSize { size, rows: self.rows, cols: self.cols });
        }
        let row_sets = subsets(self.rows, size);
        let col_sets = subsets(self.cols, size);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(self.submatrix(r, c).determinant()?);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// k-element subsets of 0..n in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Matrix of formal partial derivatives: one row per function, one column
/// per ring variable.
pub fn jacobian(fs: &[Polynomial]) -> Result<PolyMatrix> {
    let first = fs.first().ok_or_else(|| Error::InvalidInput("empty function list".into()))?;
    let ring = first.ring().clone();
    if fs.iter().any(|f| f.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let n = ring.n();
    let entries = fs.iter().flat_map(|f| (0..n).map(move |i| f.derivative(i))).collect();
    PolyMatrix::new(&ring, fs.len(), n, entries)
}

/// Constant-term matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Rational>,
}

impl ConstantMatrix {
    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = Rational::one() / &a[rank][col];
            for r in 0..self.rows {
                if r != rank && !a[r][col].is_zero() {
                    let factor = &a[r][col] * &inv;
                    for c in col..self.cols {
                        let delta = &factor * &a[rank][c];
                        a[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// `min(rows, cols) - rank`; for a square matrix, size minus rank.
    pub fn corank(&self) -> usize {
        self.rows.min(self.cols) - self.rank()
    }
}

/// Value of every entry at the origin.
pub fn evaluate_at_origin(m: &PolyMatrix) -> ConstantMatrix {
    ConstantMatrix {
        rows: m.rows,
        cols: m.cols,
        entries: m.entries.iter().map(Polynomial::constant_term).collect(),
    }
}
