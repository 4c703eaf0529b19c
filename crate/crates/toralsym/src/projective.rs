//! The PGL(2,Z) = GL(2,Z)/{+-I} layer: symmetries and reversing symmetries
//! of the class [M], where every equation holds modulo sign.
//!
//! Projectively, [G] centralizes [M] when G M G^{-1} = +-M, and reverses it
//! when G M G^{-1} = +-M^{-1}; both extra signs are decided with the same
//! intertwiner-lattice machinery as the linear level, applied to -M and
//! -M^{-1}.

use crate::classify::{classify, MatKind};
use crate::error::Error;
use crate::group::GroupStructure;
use crate::mat::{Int, Mat2};
use crate::qform::{represents_unit, Unit};
use crate::reversing::{find_reversor, intertwiner_lattice, IntertwinerLattice};
use crate::symmetry::symmetry_group;
use num_traits::Signed;

/// Canonical lift of a projective class: the representative whose first
/// nonzero entry in reading order is positive.
pub fn canonical_lift(m: &Mat2) -> Mat2 {
    for e in m.entries() {
        if e.is_positive() {
            return m.clone();
        }
        if e.is_negative() {
            return -m;
        }
    }
    m.clone()
}

/// Report for the projective symmetry or reversing symmetry group of [M].
#[derive(Clone, Debug)]
pub struct ProjReport {
    /// Order of [M] in PGL(2,Z) when finite.
    pub class_order: Option<u32>,
    /// GL-level structure of S(M); its image mod +-I is the projective
    /// symmetry group before any anti-commuting extension.
    pub gl_structure: GroupStructure,
    /// Short name of the image of S(M) in PGL(2,Z).
    pub quotient: &'static str,
    /// Witness of G M G^{-1} = -M when one exists; the projective
    /// centralizer is twice the image of S(M) in that case.
    pub anti_symmetry: Option<Mat2>,
    /// Class [M] is conjugate to [M^{-1}] in PGL(2,Z).
    pub reversible: bool,
    /// +1 when the witness conjugates M to M^{-1}, -1 when to -M^{-1}.
    pub sign: Option<i32>,
    /// Canonical lift of the reversing witness class.
    pub reversor_class: Option<Mat2>,
}

fn unimodular_in(lat: &IntertwinerLattice) -> Option<Mat2> {
    match lat {
        IntertwinerLattice::Rank0 => None,
        IntertwinerLattice::Full => Some(Mat2::std_r()),
        IntertwinerLattice::Rank2 { form, .. } => {
            for unit in [Unit::Minus, Unit::Plus] {
                if let Some((x, y)) = represents_unit(form, unit) {
                    return lat.element(&x, &y);
                }
            }
            None
        }
    }
}

fn class_order(m: &Mat2) -> Result<Option<u32>, Error> {
    let class = classify(m)?;
    Ok(match class.kind {
        MatKind::Elliptic { order } => {
            // order of [M]: least n with M^n = +-I
            let mut n = 1u32;
            loop {
                let p = m.pow(n as i64)?;
                if p.is_scalar() {
                    break Some(n);
                }
                n += 1;
                assert!(n <= order, "order bound exceeded");
            }
        }
        _ => None,
    })
}

/// The projective symmetry group of [M]: the image of S(M) in PGL(2,Z),
/// extended by an anti-commuting class (G M G^{-1} = -M) when one exists;
/// such classes occur only for trace 0.
pub fn proj_symmetry_group(m: &Mat2) -> Result<ProjReport, Error> {
    let sym = symmetry_group(m)?;
    let anti_symmetry = if m.is_scalar() {
        None
    } else {
        let anti = intertwiner_lattice(m, &(-m));
        unimodular_in(&anti).map(|g| {
            debug_assert_eq!(&(&g * m) * &g.unimodular_inverse().expect("unimodular"), -m);
            canonical_lift(&g)
        })
    };
    Ok(ProjReport {
        class_order: class_order(m)?,
        gl_structure: sym.structure,
        quotient: sym.structure.projective_quotient(),
        anti_symmetry,
        reversible: false,
        sign: None,
        reversor_class: None,
    })
}

/// The projective reversing report: [M] is reversible iff some unimodular G
/// satisfies G M G^{-1} = M^{-1} or -M^{-1}. Both routes run through the
/// intertwiner lattices; the +1 route is preferred for the witness.
pub fn proj_reversing_group(m: &Mat2) -> Result<ProjReport, Error> {
    let mut report = proj_symmetry_group(m)?;
    if m.is_scalar() {
        report.reversible = true;
        report.sign = Some(1);
        report.reversor_class = Some(canonical_lift(&Mat2::std_r()));
        return Ok(report);
    }

    if let Some((g, _)) = find_reversor(m)? {
        report.reversible = true;
        report.sign = Some(1);
        report.reversor_class = Some(canonical_lift(&g));
        return Ok(report);
    }

    let minus_minv = -&m.unimodular_inverse()?;
    let lat = intertwiner_lattice(m, &minus_minv);
    if let Some(g) = unimodular_in(&lat) {
        debug_assert_eq!(
            &(&g * m) * &g.unimodular_inverse().expect("unimodular"),
            minus_minv
        );
        report.reversible = true;
        report.sign = Some(-1);
        report.reversor_class = Some(canonical_lift(&g));
    }
    Ok(report)
}

/// One row of the projective k-symmetry scan.
#[derive(Clone, Debug)]
pub struct ProjKScanEntry {
    pub k: u32,
    pub reversible: bool,
    pub sign: Option<i32>,
    /// [M^k] is projectively reversible while [M] is not.
    pub new_reversor: bool,
}

pub fn proj_k_symmetry_scan(m: &Mat2, kmax: u32) -> Result<Vec<ProjKScanEntry>, Error> {
    let base = proj_reversing_group(m)?;
    let mut out = Vec::new();
    for k in 1..=kmax {
        let p = m.pow(k as i64)?;
        let rep = proj_reversing_group(&p)?;
        out.push(ProjKScanEntry {
            k,
            reversible: rep.reversible,
            sign: rep.sign,
            new_reversor: rep.reversible && !base.reversible,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64s(e)
    }

    #[test]
    fn canonical_lift_fixes_leading_sign() {
        assert_eq!(canonical_lift(&m([-2, -1, -1, -1])), m([2, 1, 1, 1]));
        assert_eq!(canonical_lift(&m([0, -1, 1, 0])), m([0, 1, -1, 0]));
        assert_eq!(canonical_lift(&m([2, 1, 1, 1])), m([2, 1, 1, 1]));
    }

    #[test]
    fn cat_map_projective_symmetries() {
        let rep = proj_symmetry_group(&m([2, 1, 1, 1])).unwrap();
        assert_eq!(rep.quotient, "Cinf");
        assert!(rep.anti_symmetry.is_none(), "trace 3 admits no anti-commuting class");
        assert_eq!(rep.class_order, None);
    }

    #[test]
    fn order_four_projective_symmetries() {
        let rep = proj_symmetry_group(&Mat2::std_s()).unwrap();
        // image of C4 is C2, extended by an anti-commuting class
        assert_eq!(rep.quotient, "C2");
        assert_eq!(rep.class_order, Some(2));
        let g = rep.anti_symmetry.expect("trace 0 anti-commuter");
        let s = Mat2::std_s();
        assert_eq!(&(&g * &s) * &g.unimodular_inverse().unwrap(), -&s);
    }

    #[test]
    fn scalar_class_is_full() {
        let rep = proj_symmetry_group(&Mat2::identity()).unwrap();
        assert_eq!(rep.quotient, "PGL(2,Z)");
        let rep = proj_reversing_group(&m([-1, 0, 0, -1])).unwrap();
        assert!(rep.reversible);
    }

    #[test]
    fn fibonacci_is_projectively_reversible_with_sign_minus() {
        let fib = m([1, 1, 1, 0]);
        let rep = proj_reversing_group(&fib).unwrap();
        assert!(rep.reversible);
        assert_eq!(rep.sign, Some(-1));
        let g = rep.reversor_class.unwrap();
        let target = -&fib.unimodular_inverse().unwrap();
        assert_eq!(&(&g * &fib) * &g.unimodular_inverse().unwrap(), target);
    }

    #[test]
    fn cat_map_inherits_linear_reversor() {
        let rep = proj_reversing_group(&m([2, 1, 1, 1])).unwrap();
        assert!(rep.reversible);
        assert_eq!(rep.sign, Some(1));
    }

    #[test]
    fn involution_class_reverses_itself() {
        let rep = proj_reversing_group(&m([0, 1, 1, 0])).unwrap();
        assert!(rep.reversible);
    }

    #[test]
    fn projective_scan_of_fibonacci_sees_no_upgrade() {
        // [fib] is already reversible, so no k can introduce a first reversor
        let scan = proj_k_symmetry_scan(&m([1, 1, 1, 0]), 4).unwrap();
        assert!(scan.iter().all(|e| e.reversible));
        assert!(scan.iter().all(|e| !e.new_reversor));
    }
}
