//! Exact 2x2 integer matrices with arbitrary-precision entries, plus the
//! small dense integer-matrix machinery (Smith and Hermite normal forms)
//! that the lattice computations build on.

use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub type Int = BigInt;

/// Immutable 2x2 integer matrix. Every operation returns a new value; entries
/// are arbitrary-precision, so powers and products never overflow.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat2 {
    pub a11: Int,
    pub a12: Int,
    pub a21: Int,
    pub a22: Int,
}

impl Mat2 {
    pub fn new(a11: Int, a12: Int, a21: Int, a22: Int) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn from_i64s(e: [i64; 4]) -> Self {
        Mat2::new(
            Int::from(e[0]),
            Int::from(e[1]),
            Int::from(e[2]),
            Int::from(e[3]),
        )
    }

    pub fn identity() -> Self {
        Mat2::from_i64s([1, 0, 0, 1])
    }

    pub fn scalar(n: &Int) -> Self {
        Mat2::new(n.clone(), Int::zero(), Int::zero(), n.clone())
    }

    /// T = [[1, 1], [0, 1]], the standard shear generator.
    pub fn std_t() -> Self {
        Mat2::from_i64s([1, 1, 0, 1])
    }

    /// S = [[0, -1], [1, 0]], the order-4 rotation.
    pub fn std_s() -> Self {
        Mat2::from_i64s([0, -1, 1, 0])
    }

    /// R = [[0, 1], [1, 0]], the coordinate swap (determinant -1).
    pub fn std_r() -> Self {
        Mat2::from_i64s([0, 1, 1, 0])
    }

    pub fn det(&self) -> Int {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn trace(&self) -> Int {
        &self.a11 + &self.a22
    }

    pub fn is_identity(&self) -> bool {
        self.a11.is_one() && self.a22.is_one() && self.a12.is_zero() && self.a21.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.a12.is_zero() && self.a21.is_zero() && self.a11 == self.a22
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        let d = self.det();
        d.is_one() || d == -Int::one()
    }

    pub fn ensure_unimodular(&self) -> Result<(), Error> {
        if self.is_unimodular() {
            Ok(())
        } else {
            Err(Error::NotUnimodular(self.det().to_string()))
        }
    }

    /// adj(A), so that A * adj(A) = det(A) * I.
    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(
            self.a22.clone(),
            -self.a12.clone(),
            -self.a21.clone(),
            self.a11.clone(),
        )
    }

    /// Exact inverse of a determinant +/-1 matrix (adjugate divided by det).
    pub fn unimodular_inverse(&self) -> Result<Mat2, Error> {
        let d = self.det();
        if d.is_one() {
            Ok(self.adjugate())
        } else if d == -Int::one() {
            Ok(-&self.adjugate())
        } else {
            Err(Error::NotUnimodular(d.to_string()))
        }
    }

    pub fn scalar_mul(&self, n: &Int) -> Mat2 {
        Mat2::new(
            n * &self.a11,
            n * &self.a12,
            n * &self.a21,
            n * &self.a22,
        )
    }

    /// Exact k-th power; k = 0 gives the identity, negative k requires a
    /// unimodular base.
    pub fn pow(&self, k: i64) -> Result<Mat2, Error> {
        let base = if k < 0 {
            self.unimodular_inverse()?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn entries(&self) -> [&Int; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }

    pub fn max_abs_entry(&self) -> Int {
        self.entries()
            .iter()
            .map(|e| e.abs())
            .max()
            .expect("four entries")
    }

    pub fn to_i64s(&self) -> Option<[i64; 4]> {
        Some([
            self.a11.to_i64()?,
            self.a12.to_i64()?,
            self.a21.to_i64()?,
            self.a22.to_i64()?,
        ])
    }

    /// The standard one-line text form used everywhere in the CLI.
    pub fn text(&self) -> String {
        format!("{} {} {} {}", self.a11, self.a12, self.a21, self.a22)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Accepts "a11 a12 a21 a22" or "a11,a12;a21,a22" (and mixtures).
    fn from_str(s: &str) -> Result<Self, Error> {
        let cleaned: String = s
            .chars()
            .map(|c| if c == ',' || c == ';' { ' ' } else { c })
            .collect();
        let parts: Vec<&str> = cleaned.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::ParseMatrix(s.to_string()));
        }
        let mut vals = Vec::with_capacity(4);
        for p in parts {
            vals.push(Int::from_str(p).map_err(|_| Error::ParseMatrix(s.to_string()))?);
        }
        Ok(Mat2::new(
            vals[0].clone(),
            vals[1].clone(),
            vals[2].clone(),
            vals[3].clone(),
        ))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
        )
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a11 + &rhs.a11,
            &self.a12 + &rhs.a12,
            &self.a21 + &rhs.a21,
            &self.a22 + &rhs.a22,
        )
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a11 - &rhs.a11,
            &self.a12 - &rhs.a12,
            &self.a21 - &rhs.a21,
            &self.a22 - &rhs.a22,
        )
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(
            -self.a11.clone(),
            -self.a12.clone(),
            -self.a21.clone(),
            -self.a22.clone(),
        )
    }
}

/// Smith normal form of a 2x2 integer matrix: u * a * v = diag(d1, d2) with
/// d1, d2 >= 0, d1 | d2 and both transforms unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d1: Int,
    pub d2: Int,
    pub u: Mat2,
    pub v: Mat2,
}

pub fn smith_normal_form(a: &Mat2) -> SnfResult {
    let m = IntMat::from_mat2(a);
    let (diag, u, v) = m.smith();
    let d1 = diag.first().cloned().unwrap_or_else(Int::zero);
    let d2 = diag.get(1).cloned().unwrap_or_else(Int::zero);
    SnfResult {
        d1,
        d2,
        u: u.to_mat2(),
        v: v.to_mat2(),
    }
}

/// Small dense integer matrix used for the 4x4 intertwiner systems. This is
/// deliberately minimal: just what the kernel and normal-form computations
/// need, not a general linear-algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        IntMat { rows: r, cols: c, data }
    }

    pub fn from_mat2(a: &Mat2) -> Self {
        IntMat::from_rows(vec![
            vec![a.a11.clone(), a.a12.clone()],
            vec![a.a21.clone(), a.a22.clone()],
        ])
    }

    pub fn to_mat2(&self) -> Mat2 {
        assert_eq!((self.rows, self.cols), (2, 2));
        Mat2::new(
            self.at(0, 0).clone(),
            self.at(0, 1).clone(),
            self.at(1, 0).clone(),
            self.at(1, 1).clone(),
        )
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row i += q * row j
    fn add_row(&mut self, i: usize, j: usize, q: &Int) {
        for c in 0..self.cols {
            let add = q * self.at(j, c);
            *self.at_mut(i, c) += add;
        }
    }

    /// col i += q * col j
    fn add_col(&mut self, i: usize, j: usize, q: &Int) {
        for r in 0..self.rows {
            let add = q * self.at(r, j);
            *self.at_mut(r, i) += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c).clone();
            *self.at_mut(i, c) = v;
        }
    }

    /// Smith normal form: returns (diag, u, v) with u * self * v diagonal,
    /// diagonal entries nonnegative and each dividing the next, u and v
    /// unimodular. Pivot selection (smallest nonzero absolute value, then
    /// lowest index) makes the output deterministic.
    pub fn smith(&self) -> (Vec<Int>, IntMat, IntMat) {
        let mut w = self.clone();
        let mut u = IntMat::identity(self.rows);
        let mut v = IntMat::identity(self.cols);
        let nmin = self.rows.min(self.cols);

        for t in 0..nmin {
            'outer: loop {
                // Find the smallest-magnitude nonzero pivot in the trailing block.
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..w.rows {
                    for j in t..w.cols {
                        if !w.at(i, j).is_zero() {
                            let better = match &pivot {
                                None => true,
                                Some((pi, pj)) => w.at(i, j).abs() < w.at(*pi, *pj).abs(),
                            };
                            if better {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
                let (pi, pj) = match pivot {
                    Some(p) => p,
                    None => break,
                };
                w.swap_rows(t, pi);
                u.swap_rows(t, pi);
                w.swap_cols(t, pj);
                v.swap_cols(t, pj);

                // Reduce the pivot column then the pivot row; restart if a
                // remainder survives (the pivot keeps shrinking, so this ends).
                let mut dirty = false;
                for i in (t + 1)..w.rows {
                    if !w.at(i, t).is_zero() {
                        let q = -w.at(i, t).div_floor(w.at(t, t));
                        w.add_row(i, t, &q);
                        u.add_row(i, t, &q);
                        if !w.at(i, t).is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in (t + 1)..w.cols {
                    if !w.at(t, j).is_zero() {
                        let q = -w.at(t, j).div_floor(w.at(t, t));
                        w.add_col(j, t, &q);
                        v.add_col(j, t, &q);
                        if !w.at(t, j).is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue 'outer;
                }

                // Divisibility pass: fold any non-multiple into the pivot row.
                for i in (t + 1)..w.rows {
                    for j in (t + 1)..w.cols {
                        if !w.at(i, j).mod_floor(w.at(t, t)).is_zero() {
                            let one = Int::one();
                            w.add_row(t, i, &one);
                            u.add_row(t, i, &one);
                            continue 'outer;
                        }
                    }
                }
                break;
            }
        }

        let mut diag = Vec::with_capacity(nmin);
        for t in 0..nmin {
            if w.at(t, t).is_negative() {
                w.negate_row(t);
                u.negate_row(t);
            }
            diag.push(w.at(t, t).clone());
        }
        (diag, u, v)
    }

    /// A basis of the integer kernel {x : self * x = 0}, as column vectors.
    /// The result is made deterministic by Hermite-reducing the raw basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Int>> {
        let (diag, _u, v) = self.smith();
        let mut raw: Vec<Vec<Int>> = Vec::new();
        for j in 0..self.cols {
            let dj = diag.get(j).cloned().unwrap_or_else(Int::zero);
            if dj.is_zero() {
                raw.push(v.column(j));
            }
        }
        hnf_rows(raw)
    }
}

/// Row-style Hermite normal form of a full set of lattice generators,
/// returned as a canonical basis (positive pivots, entries above each pivot
/// reduced into [0, pivot)). Zero rows are dropped.
pub(crate) fn hnf_rows(mut rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows.len() {
            break;
        }
        loop {
            // Smallest nonzero entry in this column at or below pivot_row.
            let mut best: Option<usize> = None;
            for (i, row) in rows.iter().enumerate().skip(pivot_row) {
                if !row[col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => row[col].abs() < rows[b][col].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let b = match best {
                Some(b) => b,
                None => break,
            };
            rows.swap(pivot_row, b);
            let mut any_left = false;
            for i in (pivot_row + 1)..rows.len() {
                if !rows[i][col].is_zero() {
                    let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                    for c in 0..cols {
                        let sub = &q * &rows[pivot_row][c];
                        rows[i][c] -= sub;
                    }
                    if !rows[i][col].is_zero() {
                        any_left = true;
                    }
                }
            }
            if !any_left {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for c in 0..cols {
                let v = -rows[pivot_row][c].clone();
                rows[pivot_row][c] = v;
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            if !rows[i][col].is_zero() {
                let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                for c in 0..cols {
                    let sub = &q * &rows[pivot_row][c];
                    rows[i][c] -= sub;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64s(e)
    }

    #[test]
    fn products() {
        let fib = m([1, 1, 1, 0]);
        assert_eq!(&fib * &fib, m([2, 1, 1, 1]));
        let r = Mat2::std_r();
        assert_eq!(&r * &r, Mat2::identity());
        let cat = m([2, 1, 1, 1]);
        assert_eq!(&Mat2::identity() * &cat, cat);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            m([2, 1, 1, 1]).unimodular_inverse().unwrap(),
            m([1, -1, -1, 2])
        );
        assert_eq!(
            m([1, 1, 1, 0]).unimodular_inverse().unwrap(),
            m([0, 1, 1, -1])
        );
        assert!(matches!(
            m([2, 0, 0, 2]).unimodular_inverse(),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn powers() {
        assert_eq!(m([2, 1, 1, 1]).pow(2).unwrap(), m([5, 3, 3, 2]));
        assert_eq!(m([2, 1, 1, 1]).pow(0).unwrap(), Mat2::identity());
        assert_eq!(Mat2::std_s().pow(4).unwrap(), Mat2::identity());
        let cat = m([2, 1, 1, 1]);
        let inv2 = cat.pow(-2).unwrap();
        assert_eq!(&inv2 * &cat.pow(2).unwrap(), Mat2::identity());
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&Mat2::identity());
        assert_eq!((s.d1, s.d2), (Int::from(1), Int::from(1)));

        let s = smith_normal_form(&m([1, 1, 1, 0]));
        assert_eq!((s.d1, s.d2), (Int::from(1), Int::from(1)));

        let s = smith_normal_form(&m([4, 3, 3, 1]));
        assert_eq!((s.d1, s.d2), (Int::from(1), Int::from(5)));
    }

    #[test]
    fn snf_zero_matrix() {
        let z = m([0, 0, 0, 0]);
        let s = smith_normal_form(&z);
        assert!(s.d1.is_zero() && s.d2.is_zero());
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!("2 1 1 1".parse::<Mat2>().unwrap(), m([2, 1, 1, 1]));
        assert_eq!("2,1;1,1".parse::<Mat2>().unwrap(), m([2, 1, 1, 1]));
        assert_eq!("-1, 0; 0, -1".parse::<Mat2>().unwrap(), m([-1, 0, 0, -1]));
        assert!("2 1 1".parse::<Mat2>().is_err());
        assert!("a b c d".parse::<Mat2>().is_err());
    }

    fn any_mat() -> impl Strategy<Value = Mat2> {
        (-40i64..=40, -40i64..=40, -40i64..=40, -40i64..=40)
            .prop_map(|(a, b, c, d)| m([a, b, c, d]))
    }

    proptest! {
        #[test]
        fn cayley_hamilton(a in any_mat()) {
            let sq = &a * &a;
            let t = a.trace();
            let d = a.det();
            let ch = &(&sq - &a.scalar_mul(&t)) + &Mat2::scalar(&d);
            prop_assert!(ch.is_zero());
        }

        #[test]
        fn snf_invariants(a in any_mat()) {
            let s = smith_normal_form(&a);
            // u * a * v reproduces the diagonal exactly
            let prod = &(&s.u * &a) * &s.v;
            prop_assert_eq!(prod, Mat2::new(s.d1.clone(), Int::zero(), Int::zero(), s.d2.clone()));
            prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
            prop_assert!(!s.d1.is_negative() && !s.d2.is_negative());
            // d1 divides d2, d1*d2 = |det|, d1 = gcd of the entries
            if !s.d1.is_zero() {
                prop_assert!(s.d2.mod_floor(&s.d1).is_zero());
            } else {
                prop_assert!(s.d2.is_zero());
            }
            prop_assert_eq!(&s.d1 * &s.d2, a.det().abs());
            let g = a.a11.gcd(&a.a12).gcd(&a.a21).gcd(&a.a22);
            prop_assert_eq!(s.d1, g);
        }

        #[test]
        fn unimodular_inverse_roundtrip(a in any_mat()) {
            if a.is_unimodular() {
                let inv = a.unimodular_inverse().unwrap();
                prop_assert_eq!(&a * &inv, Mat2::identity());
                prop_assert_eq!(&inv * &a, Mat2::identity());
            }
        }

        #[test]
        fn det_of_power(a in any_mat(), k in 0i64..6) {
            let p = a.pow(k).unwrap();
            let mut dk = Int::one();
            for _ in 0..k { dk *= a.det(); }
            prop_assert_eq!(p.det(), dk);
        }
    }
}
