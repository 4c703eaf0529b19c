//! Elliptic / parabolic / hyperbolic classification of unimodular matrices,
//! with exact orders for the finite-order cases and an exact quadratic-surd
//! eigenvalue for the hyperbolic ones.

use crate::error::Error;
use crate::mat::{Int, Mat2};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A quadratic surd (p + q*sqrt(d))/den in lowest terms, den > 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub p: Int,
    pub q: Int,
    pub den: Int,
    pub d: Int,
}

impl QuadSurd {
    pub fn new(p: Int, q: Int, den: Int, d: Int) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (mut p, mut q, mut den) = (p, q, den);
        if den.is_negative() {
            p = -p;
            q = -q;
            den = -den;
        }
        let g = p.gcd(&q).gcd(&den);
        if g > Int::one() {
            p /= &g;
            q /= &g;
            den /= &g;
        }
        QuadSurd { p, q, den, d }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))/{}", self.p, self.q, self.d, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatKind {
    /// Finite order; the payload is the least n >= 1 with M^n = I.
    Elliptic { order: u32 },
    Parabolic,
    Hyperbolic,
}

impl MatKind {
    pub fn is_elliptic(&self) -> bool {
        matches!(self, MatKind::Elliptic { .. })
    }
    pub fn name(&self) -> &'static str {
        match self {
            MatKind::Elliptic { .. } => "elliptic",
            MatKind::Parabolic => "parabolic",
            MatKind::Hyperbolic => "hyperbolic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatClass {
    pub kind: MatKind,
    pub trace: Int,
    pub det: Int,
    /// disc = trace^2 - 4 det.
    pub disc: Int,
    pub is_scalar: bool,
    /// Only present for hyperbolic matrices: the eigenvalue of larger
    /// absolute value, (t + sign(t) sqrt(disc))/2.
    pub eigenvalue: Option<QuadSurd>,
}

impl MatClass {
    pub fn order(&self) -> Option<u32> {
        match self.kind {
            MatKind::Elliptic { order } => Some(order),
            _ => None,
        }
    }
}

/// Classify a determinant +/-1 matrix by its trace and determinant.
///
/// Finite order happens exactly for det 1 with |trace| <= 1, for det -1 with
/// trace 0, and for the scalars +/-I; everything else with |trace| = 2 is
/// parabolic and the rest is hyperbolic.
pub fn classify(m: &Mat2) -> Result<MatClass, Error> {
    m.ensure_unimodular()?;
    let t = m.trace();
    let d = m.det();
    let disc = &t * &t - Int::from(4) * &d;
    let is_scalar = m.is_scalar();

    let kind = if is_scalar {
        // +I or -I
        if m.a11.is_one() {
            MatKind::Elliptic { order: 1 }
        } else {
            MatKind::Elliptic { order: 2 }
        }
    } else if d.is_one() {
        if t.is_zero() {
            MatKind::Elliptic { order: 4 }
        } else if t.is_one() {
            MatKind::Elliptic { order: 6 }
        } else if t == -Int::one() {
            MatKind::Elliptic { order: 3 }
        } else if t.abs() == Int::from(2) {
            MatKind::Parabolic
        } else {
            MatKind::Hyperbolic
        }
    } else {
        // det = -1
        if t.is_zero() {
            MatKind::Elliptic { order: 2 }
        } else {
            MatKind::Hyperbolic
        }
    };

    let eigenvalue = if matches!(kind, MatKind::Hyperbolic) {
        let s = if t.is_negative() { -Int::one() } else { Int::one() };
        Some(QuadSurd::new(t.clone(), s, Int::from(2), disc.clone()))
    } else {
        None
    };

    Ok(MatClass {
        kind,
        trace: t,
        det: d,
        disc,
        is_scalar,
        eigenvalue,
    })
}
