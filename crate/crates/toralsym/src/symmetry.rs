//! The symmetry group S(M): the centralizer of M in GL(2,Z).
//!
//! For a non-scalar M every commuting integer matrix lives in the rank-2
//! lattice Z*I + Z*B, where B is the normalized traceless-ish part of M.
//! Unimodular elements of that lattice are the solutions of a Pell-type unit
//! equation, which yields the infinite-order generator in the non-elliptic
//! cases.

use crate::classify::{classify, MatClass, MatKind};
use crate::error::Error;
use crate::group::GroupStructure;
use crate::mat::{Int, Mat2};
use crate::qform::{pell4, BQForm};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The commutant order of a non-scalar integer matrix M: the lattice
/// Z*I + Z*B with B = (M - m11*I)/g, g = gcd(m12, m21, m11 - m22).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantBasis {
    pub g: Int,
    pub basis: Mat2,
    pub tb: Int,
    pub db: Int,
    /// Discriminant of the order: tb^2 - 4 db = (tr^2 - 4 det)/g^2.
    pub dprime: Int,
}

impl CommutantBasis {
    /// a*I + b*B.
    pub fn element(&self, a: &Int, b: &Int) -> Mat2 {
        &Mat2::scalar(a) + &self.basis.scalar_mul(b)
    }

    /// det(a*I + b*B) as a binary quadratic form in (a, b).
    pub fn unit_form(&self) -> BQForm {
        BQForm::new(Int::one(), self.tb.clone(), self.db.clone())
    }

    /// Express x = a*I + b*B if x lies in the commutant lattice.
    pub fn coefficients(&self, x: &Mat2) -> Option<(Int, Int)> {
        let b = &self.basis;
        let bv = if !b.a12.is_zero() {
            let (q, r) = x.a12.div_rem(&b.a12);
            if !r.is_zero() {
                return None;
            }
            q
        } else if !b.a21.is_zero() {
            let (q, r) = x.a21.div_rem(&b.a21);
            if !r.is_zero() {
                return None;
            }
            q
        } else {
            let diff = &b.a22 - &b.a11;
            let xdiff = &x.a22 - &x.a11;
            let (q, r) = xdiff.div_rem(&diff);
            if !r.is_zero() {
                return None;
            }
            q
        };
        let a = &x.a11 - &bv * &b.a11;
        if &self.element(&a, &bv) == x {
            Some((a, bv))
        } else {
            None
        }
    }
}

pub fn commutant_basis(m: &Mat2) -> Result<CommutantBasis, Error> {
    m.ensure_unimodular()?;
    if m.is_scalar() {
        return Err(Error::ScalarMatrix);
    }
    let diff = &m.a11 - &m.a22;
    let g = m.a12.gcd(&m.a21).gcd(&diff);
    debug_assert!(g.is_positive());
    let basis = Mat2::new(
        Int::zero(),
        m.a12.div_floor(&g),
        m.a21.div_floor(&g),
        (&m.a22 - &m.a11).div_floor(&g),
    );
    let tb = basis.trace();
    let db = basis.det();
    let dprime = &tb * &tb - Int::from(4) * &db;
    debug_assert_eq!(&Mat2::scalar(&m.a11) + &basis.scalar_mul(&g), *m);
    Ok(CommutantBasis { g, basis, tb, db, dprime })
}

/// The infinite-order generator of S(M) for a matrix that is not of finite
/// order: the unimodular element a*I + b*B with minimal b > 0, normalized to
/// positive trace.
///
/// Hyperbolic matrices get (a, b) from the fundamental solution of
/// u^2 - D' v^2 = +/-4 over the commutant order; parabolic ones have D' = 0
/// and take b = 1 directly.
pub fn fundamental_symmetry(m: &Mat2) -> Result<Mat2, Error> {
    let class = classify(m)?;
    if class.kind.is_elliptic() {
        return Err(Error::FiniteOrder);
    }
    let cb = commutant_basis(m)?;
    let (a, b) = match class.kind {
        MatKind::Hyperbolic => {
            let sol = pell4(&cb.dprime)?;
            // tr U = 2a + tb*b = +u
            let a = (&sol.u - &cb.tb * &sol.v).div_floor(&Int::from(2));
            (a, sol.v)
        }
        MatKind::Parabolic => {
            // det(aI + bB) = (a + tb*b/2)^2 when D' = 0; b = 1 is minimal and
            // a = 1 - tb/2 gives trace +2.
            let a = Int::one() - cb.tb.div_floor(&Int::from(2));
            (a, Int::one())
        }
        MatKind::Elliptic { .. } => unreachable!(),
    };
    let u = cb.element(&a, &b);
    debug_assert!(u.is_unimodular());
    debug_assert!(u.trace().is_positive());
    debug_assert_eq!(&u * m, m * &u);
    Ok(u)
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub class: MatClass,
    pub structure: GroupStructure,
    pub theorem_case: u8,
    pub finite_generators: Vec<Mat2>,
    pub infinite_generator: Option<Mat2>,
}

/// Classify S(M) and produce explicit generators.
///
/// Cases: (1) scalars have S(M) = GL(2,Z); (2) tr 0, det -1 gives C2 x C2;
/// (3) tr 0, det 1 gives C4; (4) tr +-1, det 1 gives C6; (5) infinite order
/// gives C2 x Cinf generated by -I and the fundamental unit of the
/// commutant order.
pub fn symmetry_group(m: &Mat2) -> Result<SymmetryReport, Error> {
    let class = classify(m)?;
    let neg_i = -&Mat2::identity();

    if class.is_scalar {
        return Ok(SymmetryReport {
            class,
            structure: GroupStructure::FullGl2Z,
            theorem_case: 1,
            finite_generators: vec![Mat2::std_s(), Mat2::std_t(), Mat2::std_r()],
            infinite_generator: None,
        });
    }

    let report = match class.kind {
        MatKind::Elliptic { .. } => {
            let (structure, theorem_case) = if class.det == -Int::one() {
                (GroupStructure::C2xC2, 2)
            } else if class.trace.is_zero() {
                (GroupStructure::C4, 3)
            } else {
                (GroupStructure::C6, 4)
            };
            SymmetryReport {
                class,
                structure,
                theorem_case,
                finite_generators: vec![neg_i, m.clone()],
                infinite_generator: None,
            }
        }
        MatKind::Parabolic | MatKind::Hyperbolic => {
            let u = fundamental_symmetry(m)?;
            SymmetryReport {
                class,
                structure: GroupStructure::C2xCinf,
                theorem_case: 5,
                finite_generators: vec![neg_i],
                infinite_generator: Some(u),
            }
        }
    };
    Ok(report)
}

impl SymmetryReport {
    /// All generators, finite and infinite.
    pub fn generators(&self) -> Vec<Mat2> {
        let mut g = self.finite_generators.clone();
        if let Some(u) = &self.infinite_generator {
            g.push(u.clone());
        }
        g
    }

    /// The elements of S(M) when it is finite: {+-M^j}. None when S(M) is
    /// infinite (case 5) or all of GL(2,Z) (case 1).
    pub fn finite_elements(&self, m: &Mat2) -> Option<Vec<Mat2>> {
        if self.theorem_case == 1 || self.theorem_case == 5 {
            return None;
        }
        let order = self.class.order().expect("finite case") as i64;
        let mut out = Vec::new();
        for j in 0..order {
            let p = m.pow(j).expect("unimodular power");
            out.push(p.clone());
            out.push(-&p);
        }
        out.sort();
        out.dedup();
        Some(out)
    }

    /// The elements of the group generated by the report that have all
    /// entries bounded by `h`. Returns None for case 1 (full GL(2,Z)), where
    /// enumeration belongs to the oracle.
    pub fn bounded_elements(&self, m: &Mat2, h: &Int) -> Option<Vec<Mat2>> {
        if self.theorem_case == 1 {
            return None;
        }
        let mut out: Vec<Mat2> = Vec::new();
        if let Some(fin) = self.finite_elements(m) {
            out = fin;
        } else {
            let u = self.infinite_generator.as_ref().expect("case 5");
            // Entry growth of U^k need not be monotone step by step, so walk
            // well past the bound before stopping.
            let stop = h * Int::from(64) + Int::from(64);
            for dir in [1i64, -1] {
                let step = if dir == 1 {
                    u.clone()
                } else {
                    u.unimodular_inverse().expect("unimodular")
                };
                let mut p = Mat2::identity();
                loop {
                    if p.max_abs_entry() <= *h {
                        out.push(p.clone());
                        out.push(-&p);
                    }
                    p = &p * &step;
                    if p.max_abs_entry() > stop {
                        break;
                    }
                }
            }
        }
        out.retain(|g| g.max_abs_entry() <= *h);
        out.sort();
        out.dedup();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64s(e)
    }

    #[test]
    fn commutant_examples() {
        let cb = commutant_basis(&m([1, 2, 2, 5])).unwrap();
        assert_eq!(cb.g, Int::from(2));
        assert_eq!(cb.basis, m([0, 1, 1, 2]));

        let cb = commutant_basis(&m([2, 1, 1, 1])).unwrap();
        assert_eq!(cb.g, Int::from(1));
        assert_eq!(cb.basis, m([0, 1, 1, -1]));

        assert!(matches!(
            commutant_basis(&Mat2::identity()),
            Err(Error::ScalarMatrix)
        ));
        assert!(matches!(
            commutant_basis(&m([-1, 0, 0, -1])),
            Err(Error::ScalarMatrix)
        ));
    }

    #[test]
    fn fundamental_symmetry_examples() {
        // square root of the cat map
        assert_eq!(fundamental_symmetry(&m([2, 1, 1, 1])).unwrap(), m([1, 1, 1, 0]));
        // parabolic proper root: U^2 = M
        let u = fundamental_symmetry(&m([1, 2, 0, 1])).unwrap();
        assert_eq!(u, m([1, 1, 0, 1]));
        assert_eq!(u.pow(2).unwrap(), m([1, 2, 0, 1]));
        // hyperbolic proper root
        let u = fundamental_symmetry(&m([1, 2, 2, 5])).unwrap();
        assert_eq!(u, m([0, 1, 1, 2]));
        assert_eq!(u.pow(2).unwrap(), m([1, 2, 2, 5]));
        // elliptic input is rejected
        assert!(matches!(
            fundamental_symmetry(&Mat2::std_s()),
            Err(Error::FiniteOrder)
        ));
    }

    #[test]
    fn fundamental_symmetry_b_is_minimal() {
        for e in [[2i64, 1, 1, 1], [1, 2, 2, 5], [3, 1, 2, 1], [1, 4, 0, 1], [5, 3, 3, 2]] {
            let mm = m(e);
            let cb = commutant_basis(&mm).unwrap();
            let u = fundamental_symmetry(&mm).unwrap();
            let (_, b) = cb.coefficients(&u).unwrap();
            assert!(b.is_positive());
            // no smaller b' > 0 admits any a' with det(a'I + b'B) = +-1
            let mut bp = Int::one();
            while bp < b {
                // a'^2 + tb a' b' + db b'^2 = n has an integer root iff the
                // discriminant (tb^2-4db) b'^2 + 4n is a perfect square
                for n in [1i64, -1] {
                    let disc = &cb.dprime * &bp * &bp + Int::from(4 * n);
                    if let Some(s) = crate::qform::exact_sqrt(&disc) {
                        // root must also be integral: a' = (-tb b' +- s)/2
                        let num = -&cb.tb * &bp + &s;
                        assert!(
                            num.is_odd(),
                            "smaller generator b'={bp} exists for {mm}"
                        );
                    }
                }
                bp += 1;
            }
        }
    }

    #[test]
    fn symmetry_group_cases() {
        let r = symmetry_group(&Mat2::std_s()).unwrap();
        assert_eq!(r.structure, GroupStructure::C4);
        assert_eq!(r.theorem_case, 3);

        let r = symmetry_group(&m([0, -1, 1, 1])).unwrap();
        assert_eq!(r.structure, GroupStructure::C6);
        assert_eq!(r.theorem_case, 4);

        let r = symmetry_group(&m([0, 1, 1, 0])).unwrap();
        assert_eq!(r.structure, GroupStructure::C2xC2);
        assert_eq!(r.theorem_case, 2);

        let r = symmetry_group(&m([2, 1, 1, 1])).unwrap();
        assert_eq!(r.structure, GroupStructure::C2xCinf);
        assert_eq!(r.theorem_case, 5);
        assert_eq!(r.infinite_generator, Some(m([1, 1, 1, 0])));

        let r = symmetry_group(&Mat2::identity()).unwrap();
        assert_eq!(r.structure, GroupStructure::FullGl2Z);
        assert_eq!(r.theorem_case, 1);
    }

    #[test]
    fn order_three_maps_to_case_four() {
        let r = symmetry_group(&m([0, 1, -1, -1])).unwrap();
        assert_eq!(r.class.order(), Some(3));
        assert_eq!(r.structure, GroupStructure::C6);
        assert_eq!(r.theorem_case, 4);
    }

    #[test]
    fn generators_commute_with_input() {
        for e in [
            [2i64, 1, 1, 1],
            [1, 1, 0, 1],
            [0, -1, 1, 1],
            [0, 1, 1, 0],
            [1, 2, 2, 5],
            [-3, 1, 1, 0],
        ] {
            let mm = m(e);
            let rep = symmetry_group(&mm).unwrap();
            if rep.theorem_case == 1 {
                continue;
            }
            for g in rep.generators() {
                assert!(g.is_unimodular());
                assert_eq!(&g * &mm, &mm * &g, "generator {g} of {mm}");
            }
        }
    }
}
