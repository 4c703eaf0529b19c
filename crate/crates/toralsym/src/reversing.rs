//! The reversing symmetry group R(M): all G in GL(2,Z) conjugating M to
//! M or M^{-1}.
//!
//! Reversibility is decided uniformly through lattice machinery: the integer
//! solutions of X M = M^{-1} X form a lattice of rank 0 or 2 (4 for the
//! scalars), and a reversor exists exactly when the determinant form of a
//! rank-2 lattice represents +1 or -1. The trace/determinant case labels of
//! the classification are attached afterwards as a cross-check, not used as
//! the decision procedure.

use crate::classify::MatKind;
use crate::error::Error;
use crate::group::GroupStructure;
use crate::mat::{hnf_rows, Int, IntMat, Mat2};
use crate::qform::{represents_unit, BQForm, Unit};
use crate::symmetry::{symmetry_group, SymmetryReport};
use num_traits::{One, Zero};

/// Integer solutions of X * right = left * X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntertwinerLattice {
    Rank0,
    Rank2 {
        b1: Mat2,
        b2: Mat2,
        /// det(x*b1 + y*b2) as a form in (x, y).
        form: BQForm,
    },
    /// Every integer matrix intertwines (only for scalar inputs).
    Full,
}

pub use IntertwinerLattice as ReversingLattice;

impl IntertwinerLattice {
    pub fn rank(&self) -> usize {
        match self {
            IntertwinerLattice::Rank0 => 0,
            IntertwinerLattice::Rank2 { .. } => 2,
            IntertwinerLattice::Full => 4,
        }
    }

    pub fn element(&self, x: &Int, y: &Int) -> Option<Mat2> {
        match self {
            IntertwinerLattice::Rank2 { b1, b2, .. } => {
                Some(&b1.scalar_mul(x) + &b2.scalar_mul(y))
            }
            _ => None,
        }
    }
}

fn vec_to_mat(v: &[Int]) -> Mat2 {
    Mat2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
}

/// Solve X * right = left * X over the integers by Smith-reducing the 4x4
/// coefficient system; the kernel basis is Hermite-normalized so the output
/// is deterministic.
pub fn intertwiner_lattice(right: &Mat2, left: &Mat2) -> IntertwinerLattice {
    // Unknowns (x11, x12, x21, x22); rows are the four entries of X*right - left*X.
    let z = Int::zero;
    let rows = vec![
        vec![&right.a11 - &left.a11, right.a21.clone(), -left.a12.clone(), z()],
        vec![right.a12.clone(), &right.a22 - &left.a11, z(), -left.a12.clone()],
        vec![-left.a21.clone(), z(), &right.a11 - &left.a22, right.a21.clone()],
        vec![z(), -left.a21.clone(), right.a12.clone(), &right.a22 - &left.a22],
    ];
    let sys = IntMat::from_rows(rows);
    let kernel = sys.kernel_basis();
    match kernel.len() {
        0 => IntertwinerLattice::Rank0,
        2 => {
            let b1 = vec_to_mat(&kernel[0]);
            let b2 = vec_to_mat(&kernel[1]);
            let a = b1.det();
            let c = b2.det();
            let b = &(&b1 + &b2).det() - &a - &c;
            IntertwinerLattice::Rank2 {
                b1,
                b2,
                form: BQForm::new(a, b, c),
            }
        }
        4 => IntertwinerLattice::Full,
        n => unreachable!("intertwiner space of 2x2 matrices has rank 0, 2 or 4, got {n}"),
    }
}

/// The lattice of integer solutions of X M = M^{-1} X.
pub fn reversing_lattice(m: &Mat2) -> Result<IntertwinerLattice, Error> {
    let minv = m.unimodular_inverse()?;
    Ok(intertwiner_lattice(m, &minv))
}

/// Exact order of a unimodular matrix if it is of finite order (<= 12 covers
/// everything a reversor can be).
fn order_exact(g: &Mat2) -> Option<u32> {
    let mut p = Mat2::identity();
    for n in 1..=12u32 {
        p = &p * g;
        if p.is_identity() {
            return Some(n);
        }
    }
    None
}

/// Find a reversor of M (a unimodular G with G M G^{-1} = M^{-1}), preferring
/// one of order 2 over one of order 4; None is a proof of irreversibility.
///
/// The search runs through the determinant form of the reversing lattice:
/// a witness for -1 gives a determinant -1 reversor (an involution whenever
/// the lattice is traceless), a witness for +1 gives one with G^2 = -I.
pub fn find_reversor(m: &Mat2) -> Result<Option<(Mat2, u32)>, Error> {
    m.ensure_unimodular()?;
    if m.is_scalar() {
        // Everything reverses a scalar; report the coordinate swap.
        return Ok(Some((Mat2::std_r(), 2)));
    }
    let lat = reversing_lattice(m)?;
    let (b1, b2, form) = match &lat {
        IntertwinerLattice::Rank0 => return Ok(None),
        IntertwinerLattice::Rank2 { b1, b2, form } => (b1, b2, form),
        IntertwinerLattice::Full => unreachable!("non-scalar input"),
    };
    for unit in [Unit::Minus, Unit::Plus] {
        if let Some((x, y)) = represents_unit(form, unit) {
            let g = &b1.scalar_mul(&x) + &b2.scalar_mul(&y);
            let minv = m.unimodular_inverse()?;
            debug_assert_eq!(&(&g * m) * &g.unimodular_inverse()?, minv);
            let order = order_exact(&g).expect("reversors here have finite order");
            return Ok(Some((g, order)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct ReversingReport {
    pub symmetry: SymmetryReport,
    pub structure: GroupStructure,
    pub theorem_case: u8,
    pub reversible: bool,
    pub reversor: Option<(Mat2, u32)>,
    pub lattice: IntertwinerLattice,
}

/// Classify R(M) with explicit generators: the symmetry generators plus a
/// reversor witness when one exists.
///
/// Case labels: (1) scalars; (2) involutions, D2; (3) order 4, D4;
/// (4) order 3 or 6, D6; for infinite order a reversor of order 2 gives
/// Dinf x C2 (5), one of order 4 only gives Cinf x_s C4 (6), and no reversor
/// gives Cinf x C2 (7).
pub fn reversing_group(m: &Mat2) -> Result<ReversingReport, Error> {
    let symmetry = symmetry_group(m)?;
    let lattice = if m.is_scalar() {
        IntertwinerLattice::Full
    } else {
        reversing_lattice(m)?
    };
    let reversor = find_reversor(m)?;
    let reversible = reversor.is_some();

    let class = &symmetry.class;
    let (structure, theorem_case) = if class.is_scalar {
        (GroupStructure::FullGl2Z, 1)
    } else {
        match class.kind {
            MatKind::Elliptic { .. } => {
                if class.det == -Int::one() {
                    (GroupStructure::D2, 2)
                } else if class.trace.is_zero() {
                    (GroupStructure::D4, 3)
                } else {
                    (GroupStructure::D6, 4)
                }
            }
            MatKind::Parabolic | MatKind::Hyperbolic => match &reversor {
                Some((_, 2)) => (GroupStructure::DinfxC2, 5),
                Some((_, 4)) => (GroupStructure::CinfSemidirC4, 6),
                Some((g, n)) => unreachable!(
                    "infinite-order matrices admit only order 2 or 4 reversors, got {g} of order {n}"
                ),
                None => (GroupStructure::CinfxC2, 7),
            },
        }
    };

    // Cross-check against the classification: elliptic and parabolic
    // matrices are always reversible, hyperbolic det -1 never.
    match class.kind {
        MatKind::Elliptic { .. } | MatKind::Parabolic => {
            debug_assert!(reversible, "elliptic/parabolic must be reversible: {m}")
        }
        MatKind::Hyperbolic => {
            if class.det == -Int::one() {
                debug_assert!(!reversible, "hyperbolic det -1 must be irreversible: {m}")
            }
        }
    }

    Ok(ReversingReport {
        symmetry,
        structure,
        theorem_case,
        reversible,
        reversor,
        lattice,
    })
}

impl ReversingReport {
    pub fn generators(&self) -> Vec<Mat2> {
        let mut g = self.symmetry.generators();
        if let Some((rev, _)) = &self.reversor {
            g.push(rev.clone());
        }
        g
    }

    /// Elements of R(M) when finite: S(M) together with the reversor coset.
    pub fn finite_elements(&self, m: &Mat2) -> Option<Vec<Mat2>> {
        if self.theorem_case == 1 {
            return None;
        }
        let sym = self.symmetry.finite_elements(m)?;
        let mut out = sym.clone();
        if let Some((g, _)) = &self.reversor {
            for s in &sym {
                out.push(s * g);
            }
        }
        out.sort();
        out.dedup();
        Some(out)
    }
}

/// Canonicalize a raw kernel representation for tests and reports.
pub fn lattice_basis_rows(lat: &IntertwinerLattice) -> Vec<Vec<Int>> {
    match lat {
        IntertwinerLattice::Rank2 { b1, b2, .. } => hnf_rows(vec![
            b1.entries().map(|e| e.clone()).to_vec(),
            b2.entries().map(|e| e.clone()).to_vec(),
        ]),
        _ => Vec::new(),
    }
}
