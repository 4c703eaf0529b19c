//! Torus-level dynamics of a unimodular matrix: fixed points of M^k and the
//! counts a_k = |det(M^k - I)|, orbit decomposition, affine (reversing)
//! symmetries, the k-symmetry scan, and Artin-Mazur zeta series.
//!
//! Fixed points are enumerated through Smith normal form coset
//! representatives, never by scanning denominators; infinite fixed sets
//! (eigenvalue 1 somewhere) are first-class values, not errors.

use crate::classify::{classify, MatKind};
use crate::error::Error;
use crate::mat::{smith_normal_form, Int, Mat2};
use crate::par::par_map;
use crate::reversing::{reversing_group, ReversingReport};
use crate::symmetry::{commutant_basis, symmetry_group, SymmetryReport};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A point of the torus [0,1)^2: (p1/q, p2/q) with 0 <= p1, p2 < q and
/// gcd(p1, p2, q) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    p1: Int,
    p2: Int,
    q: Int,
}

impl TorusPoint {
    pub fn zero() -> Self {
        TorusPoint {
            p1: Int::zero(),
            p2: Int::zero(),
            q: Int::one(),
        }
    }

    /// Canonical representative of (n1/d1, n2/d2) mod 1.
    pub fn new(n1: &Int, d1: &Int, n2: &Int, d2: &Int) -> Self {
        assert!(!d1.is_zero() && !d2.is_zero());
        let q = d1.lcm(d2);
        let p1 = (n1 * q.div_floor(d1)).mod_floor(&q);
        let p2 = (n2 * q.div_floor(d2)).mod_floor(&q);
        Self::reduce(p1, p2, q)
    }

    pub fn from_i64s(n1: i64, n2: i64, q: i64) -> Self {
        Self::new(&Int::from(n1), &Int::from(q), &Int::from(n2), &Int::from(q))
    }

    fn reduce(p1: Int, p2: Int, q: Int) -> Self {
        let g = p1.gcd(&p2).gcd(&q);
        if g > Int::one() {
            TorusPoint {
                p1: p1.div_floor(&g),
                p2: p2.div_floor(&g),
                q: q.div_floor(&g),
            }
        } else {
            TorusPoint { p1, p2, q }
        }
    }

    pub fn numerators(&self) -> (&Int, &Int) {
        (&self.p1, &self.p2)
    }

    pub fn denominator(&self) -> &Int {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p1.is_zero() && self.p2.is_zero()
    }

    /// Apply a matrix mod 1.
    pub fn apply(&self, m: &Mat2) -> TorusPoint {
        let n1 = (&m.a11 * &self.p1 + &m.a12 * &self.p2).mod_floor(&self.q);
        let n2 = (&m.a21 * &self.p1 + &m.a22 * &self.p2).mod_floor(&self.q);
        Self::reduce(n1, n2, self.q.clone())
    }

    pub fn neg(&self) -> TorusPoint {
        TorusPoint::reduce(
            (-&self.p1).mod_floor(&self.q),
            (-&self.p2).mod_floor(&self.q),
            self.q.clone(),
        )
    }

    /// Is M t = t (mod 1)?
    pub fn fixed_by(&self, m: &Mat2) -> bool {
        self.apply(m) == *self
    }

    pub fn coords(&self) -> (BigRational, BigRational) {
        (
            BigRational::new(self.p1.clone(), self.q.clone()),
            BigRational::new(self.p2.clone(), self.q.clone()),
        )
    }

    pub fn text(&self) -> String {
        format!("{}/{} {}/{}", self.p1, self.q, self.p2, self.q)
    }
}

impl PartialOrd for TorusPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TorusPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        // compare (p1/q, p2/q) as exact rationals
        (&self.p1 * &other.q).cmp(&(&other.p1 * &self.q)).then_with(|| {
            (&self.p2 * &other.q).cmp(&(&other.p2 * &self.q))
        })
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/{}, {}/{})", self.p1, self.q, self.p2, self.q)
    }
}

/// The solution set of M^k t = t (mod 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointSet {
    Finite(Vec<TorusPoint>),
    /// det(M^k - I) = 0: the solutions form finitely many lines (or the whole
    /// torus). `base` carries one point per line, `directions` the integer
    /// direction vectors.
    Infinite {
        base: Vec<TorusPoint>,
        directions: Vec<(Int, Int)>,
    },
}

impl FixedPointSet {
    pub fn count(&self) -> Option<usize> {
        match self {
            FixedPointSet::Finite(v) => Some(v.len()),
            FixedPointSet::Infinite { .. } => None,
        }
    }
}

/// a_k = |det(M^k - I)|, or None when det(M^k - I) = 0.
pub fn count_ak(m: &Mat2, k: u32) -> Result<Option<Int>, Error> {
    m.ensure_unimodular()?;
    let p = m.pow(k as i64)?;
    let d = (&p - &Mat2::identity()).det();
    Ok(if d.is_zero() { None } else { Some(d.abs()) })
}

/// All solutions of M^k t = t (mod 1), via Smith normal form of A = M^k - I:
/// with u A v = diag(d1, d2), the solutions are t = v (i/d1, j/d2) mod 1.
pub fn fixed_points(m: &Mat2, k: u32) -> Result<FixedPointSet, Error> {
    m.ensure_unimodular()?;
    let p = m.pow(k as i64)?;
    let a = &p - &Mat2::identity();
    let snf = smith_normal_form(&a);
    let (d1, d2, v) = (&snf.d1, &snf.d2, &snf.v);

    if d1.is_zero() {
        // A = 0: M^k = I, everything is fixed.
        return Ok(FixedPointSet::Infinite {
            base: vec![TorusPoint::zero()],
            directions: vec![
                (Int::one(), Int::zero()),
                (Int::zero(), Int::one()),
            ],
        });
    }
    if d2.is_zero() {
        // Rank 1: d1 lines in the direction of the second column of v.
        let mut base = Vec::new();
        let mut i = Int::zero();
        while &i < d1 {
            base.push(TorusPoint::new(
                &(&v.a11 * &i),
                d1,
                &(&v.a21 * &i),
                d1,
            ));
            i += 1;
        }
        base.sort();
        base.dedup();
        return Ok(FixedPointSet::Infinite {
            base,
            directions: vec![(v.a12.clone(), v.a22.clone())],
        });
    }

    let mut pts = Vec::new();
    let mut i = Int::zero();
    while &i < d1 {
        let mut j = Int::zero();
        while &j < d2 {
            // t = v * (i/d1, j/d2)
            let n1 = &v.a11 * &i * d2 + &v.a12 * &j * d1;
            let n2 = &v.a21 * &i * d2 + &v.a22 * &j * d1;
            let den = d1 * d2;
            pts.push(TorusPoint::new(&n1, &den, &n2, &den));
            j += 1;
        }
        i += 1;
    }
    pts.sort();
    pts.dedup();
    debug_assert_eq!(Int::from(pts.len()), (d1 * d2).abs());
    debug_assert!(pts.iter().all(|t| t.fixed_by(&p)));
    Ok(FixedPointSet::Finite(pts))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub least_period: u32,
    pub representative: TorusPoint,
}

/// Per-k periodic-point data. `orbit_counts` holds (n, c_n) for each divisor
/// n of k, where c_n is the number of orbits of least period n, computed by
/// Moebius inversion of the a_d; `orbits` is the direct grouping of the fixed
/// points under the action of M.
#[derive(Clone, Debug)]
pub struct PeriodicData {
    pub k: u32,
    pub count: Option<Int>,
    pub points: Vec<TorusPoint>,
    pub orbits: Vec<Orbit>,
    pub orbit_counts: Vec<(u32, Option<Int>)>,
}

fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Group a finite fixed-point set of M^k into M-orbits.
fn orbits_of(points: &[TorusPoint], m: &Mat2) -> Vec<Orbit> {
    let mut seen: std::collections::HashSet<TorusPoint> = std::collections::HashSet::new();
    let mut orbits = Vec::new();
    for start in points {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        let mut cur = start.apply(m);
        while &cur != start {
            orbit.push(cur.clone());
            cur = cur.apply(m);
        }
        let rep = orbit.iter().min().expect("nonempty orbit").clone();
        for t in orbit.iter() {
            seen.insert(t.clone());
        }
        orbits.push(Orbit {
            least_period: orbit.len() as u32,
            representative: rep,
        });
    }
    orbits.sort_by(|a, b| {
        a.least_period
            .cmp(&b.least_period)
            .then_with(|| a.representative.cmp(&b.representative))
    });
    orbits
}

/// a_k, fixed points, orbit decomposition and orbit counts for k = 1..kmax.
/// Each k is independent, so the per-k work runs through the parallel map.
pub fn periodic_counts(m: &Mat2, kmax: u32) -> Result<Vec<PeriodicData>, Error> {
    m.ensure_unimodular()?;
    let ks: Vec<u32> = (1..=kmax).collect();
    let per_k = par_map(&ks, |&k| {
        let count = count_ak(m, k).expect("checked unimodular");
        let (points, orbits) = match fixed_points(m, k).expect("checked unimodular") {
            FixedPointSet::Finite(pts) => {
                let orbs = orbits_of(&pts, m);
                (pts, orbs)
            }
            FixedPointSet::Infinite { .. } => (Vec::new(), Vec::new()),
        };
        (k, count, points, orbits)
    });

    let a: Vec<Option<Int>> = per_k.iter().map(|(_, c, _, _)| c.clone()).collect();
    let mut out = Vec::new();
    for (k, count, points, orbits) in per_k {
        let mut orbit_counts = Vec::new();
        for n in divisors(k) {
            let mut acc: Option<Int> = Some(Int::zero());
            for d in divisors(n) {
                match (&acc, &a[(d - 1) as usize]) {
                    (Some(s), Some(ad)) => {
                        acc = Some(s + Int::from(mobius(n / d)) * ad);
                    }
                    _ => {
                        acc = None;
                        break;
                    }
                }
            }
            let cn = acc.map(|s| {
                let (q, r) = s.div_rem(&Int::from(n));
                debug_assert!(r.is_zero(), "necklace counts must be integral");
                debug_assert!(!q.is_negative());
                q
            });
            orbit_counts.push((n, cn));
        }
        out.push(PeriodicData {
            k,
            count,
            points,
            orbits,
            orbit_counts,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineKind {
    Symmetry,
    Reversing,
}

/// An affine torus map t -> G t + translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub translation: TorusPoint,
    pub linear: Mat2,
}

/// Generators of the affine (reversing) symmetries of the automorphism:
/// (t, G) is one exactly when G is a linear (reversing) symmetry and
/// M t = t (mod 1). The generating set crosses Fix(M) with the linear
/// generators (identity included, so pure translations appear).
pub fn affine_symmetries(m: &Mat2, kind: AffineKind) -> Result<Vec<AffineMap>, Error> {
    let fix = match fixed_points(m, 1)? {
        FixedPointSet::Finite(pts) => pts,
        FixedPointSet::Infinite { .. } => return Err(Error::InfiniteFixedSet),
    };
    let mut linear = vec![Mat2::identity()];
    match kind {
        AffineKind::Symmetry => linear.extend(symmetry_group(m)?.generators()),
        AffineKind::Reversing => linear.extend(reversing_group(m)?.generators()),
    }
    linear.sort();
    linear.dedup();

    let mut out = Vec::new();
    for t in &fix {
        for g in &linear {
            debug_assert!(t.fixed_by(m));
            out.push(AffineMap {
                translation: t.clone(),
                linear: g.clone(),
            });
        }
    }
    Ok(out)
}

/// Truncated Artin-Mazur zeta series exp(sum_k a_k z^k / k) as exact
/// rationals; the coefficients of a genuine fixed-point count sequence are
/// integers, which is asserted after the fact rather than assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    pub truncation: u32,
    pub coefficients: Vec<BigRational>,
}

impl ZetaSeries {
    pub fn integer_coefficients(&self) -> Option<Vec<Int>> {
        self.coefficients
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Some(c.to_integer())
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn zeta_series(m: &Mat2, n: u32) -> Result<ZetaSeries, Error> {
    m.ensure_unimodular()?;
    let mut a = Vec::with_capacity(n as usize);
    for k in 1..=n {
        match count_ak(m, k)? {
            Some(ak) => a.push(BigRational::from_integer(ak)),
            None => return Err(Error::InfiniteFixedSet),
        }
    }
    // E_0 = 1, n E_n = sum_{j=1..n} a_j E_{n-j}
    let mut e = vec![BigRational::from_integer(Int::one())];
    for i in 1..=(n as usize) {
        let mut acc = BigRational::from_integer(Int::zero());
        for j in 1..=i {
            acc += &a[j - 1] * &e[i - j];
        }
        e.push(acc / BigRational::from_integer(Int::from(i as i64)));
    }
    Ok(ZetaSeries {
        truncation: n,
        coefficients: e,
    })
}

/// One row of the k-symmetry scan.
#[derive(Clone, Debug)]
pub struct KSymScanEntry {
    pub k: u32,
    pub power: Mat2,
    pub symmetry: SymmetryReport,
    pub reversing: ReversingReport,
    /// S(M^k) strictly contains S(M).
    pub new_symmetry: bool,
    /// R(M^k) strictly contains R(M).
    pub new_reversor: bool,
    /// Conformance with the classification of k-symmetries: elliptic
    /// matrices gain nothing unless M^k = +-I (full GL(2,Z) then), parabolic
    /// never gain, hyperbolic gain at most reversors at even k with det -1.
    pub theorem3_consistent: bool,
}

fn full_case(rep: &SymmetryReport) -> bool {
    rep.theorem_case == 1
}

/// Compare S(M^k) and R(M^k) against S(M) and R(M) for k = 1..kmax.
///
/// For infinite-order M the commutant lattice of M^k equals that of M, so
/// the symmetry parts are compared through the minimal unit coefficient; for
/// elliptic M the finite groups are compared as explicit element sets.
pub fn k_symmetry_scan(m: &Mat2, kmax: u32) -> Result<Vec<KSymScanEntry>, Error> {
    m.ensure_unimodular()?;
    let base_sym = symmetry_group(m)?;
    let base_rev = reversing_group(m)?;
    let base_class = classify(m)?;
    let base_finite_s = if full_case(&base_sym) {
        None
    } else {
        base_sym.finite_elements(m)
    };
    let base_finite_r = base_rev.finite_elements(m);
    let base_b = infinite_unit_coefficient(m, &base_sym)?;

    let ks: Vec<u32> = (1..=kmax).collect();
    let entries = par_map(&ks, |&k| -> Result<KSymScanEntry, Error> {
        let p = m.pow(k as i64)?;
        let symmetry = symmetry_group(&p)?;
        let reversing = reversing_group(&p)?;

        let new_symmetry = if full_case(&base_sym) {
            false
        } else if full_case(&symmetry) {
            true
        } else if base_class.kind.is_elliptic() {
            let sk = symmetry.finite_elements(&p).expect("elliptic power");
            let s1 = base_finite_s.as_ref().expect("elliptic base");
            sk != *s1
        } else {
            // same commutant order; groups agree iff the minimal unit
            // coefficients agree
            let bk = infinite_unit_coefficient(&p, &symmetry)?;
            bk != base_b
        };

        let new_reversor = if base_rev.theorem_case == 1 {
            false
        } else if reversing.theorem_case == 1 {
            true
        } else if base_class.kind.is_elliptic() {
            let rk = reversing.finite_elements(&p).expect("elliptic power");
            let r1 = base_finite_r.as_ref().expect("elliptic base");
            rk != *r1
        } else {
            new_symmetry || (reversing.reversible != base_rev.reversible)
        };

        let theorem3_consistent = if k == 1 {
            !new_symmetry && !new_reversor
        } else {
            match base_class.kind {
                MatKind::Elliptic { .. } => {
                    if new_symmetry || new_reversor {
                        p.is_scalar()
                    } else {
                        true
                    }
                }
                MatKind::Parabolic => !new_symmetry && !new_reversor,
                MatKind::Hyperbolic => {
                    !new_symmetry
                        && (!new_reversor
                            || (base_class.det == -Int::one() && k % 2 == 0))
                }
            }
        };

        Ok(KSymScanEntry {
            k,
            power: p,
            symmetry,
            reversing,
            new_symmetry,
            new_reversor,
            theorem3_consistent,
        })
    });
    entries.into_iter().collect()
}

/// |b| for the infinite generator U = a I + b B expressed in the commutant
/// basis of the matrix itself; None for elliptic input.
fn infinite_unit_coefficient(m: &Mat2, rep: &SymmetryReport) -> Result<Option<Int>, Error> {
    match &rep.infinite_generator {
        None => Ok(None),
        Some(u) => {
            let cb = commutant_basis(m)?;
            let (_, b) = cb
                .coefficients(u)
                .expect("fundamental unit lies in the commutant lattice");
            Ok(Some(b.abs()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64s(e)
    }

    fn cat() -> Mat2 {
        m([2, 1, 1, 1])
    }

    #[test]
    fn cat_map_fixed_points() {
        match fixed_points(&cat(), 1).unwrap() {
            FixedPointSet::Finite(pts) => {
                assert_eq!(pts, vec![TorusPoint::zero()]);
            }
            _ => panic!("expected finite"),
        }
        match fixed_points(&cat(), 2).unwrap() {
            FixedPointSet::Finite(pts) => {
                assert_eq!(pts.len(), 5);
                let p2 = cat().pow(2).unwrap();
                for t in &pts {
                    assert!(t.fixed_by(&p2));
                }
            }
            _ => panic!("expected finite"),
        }
    }

    #[test]
    fn parabolic_fixed_points_are_infinite() {
        match fixed_points(&m([1, 1, 0, 1]), 1).unwrap() {
            FixedPointSet::Infinite { base, directions } => {
                assert!(!base.is_empty());
                assert_eq!(directions.len(), 1);
            }
            _ => panic!("expected infinite"),
        }
        match fixed_points(&Mat2::identity(), 1).unwrap() {
            FixedPointSet::Infinite { directions, .. } => assert_eq!(directions.len(), 2),
            _ => panic!("expected infinite"),
        }
    }

    #[test]
    fn cat_map_counts_and_orbits() {
        let data = periodic_counts(&cat(), 5).unwrap();
        let a: Vec<Int> = data.iter().map(|d| d.count.clone().unwrap()).collect();
        assert_eq!(
            a,
            vec![
                Int::from(1),
                Int::from(5),
                Int::from(16),
                Int::from(45),
                Int::from(121)
            ]
        );
        // c_k via Moebius inversion: (1, 2, 5, 10) for k <= 4
        let c: Vec<Int> = data
            .iter()
            .take(4)
            .map(|d| {
                d.orbit_counts
                    .iter()
                    .find(|(n, _)| *n == d.k)
                    .unwrap()
                    .1
                    .clone()
                    .unwrap()
            })
            .collect();
        assert_eq!(
            c,
            vec![Int::from(1), Int::from(2), Int::from(5), Int::from(10)]
        );
        // direct orbit grouping agrees with the inversion
        for d in &data {
            for (n, cn) in &d.orbit_counts {
                let direct = d.orbits.iter().filter(|o| o.least_period == *n).count();
                assert_eq!(Some(Int::from(direct)), *cn, "k={} n={}", d.k, n);
            }
            // necklace identity: a_k = sum_{d|k} d c_d
            let mut acc = Int::zero();
            for (n, cn) in &d.orbit_counts {
                acc += Int::from(*n) * cn.clone().unwrap();
            }
            assert_eq!(acc, d.count.clone().unwrap());
        }
    }

    #[test]
    fn fixed_set_closed_under_action() {
        for e in [[2i64, 1, 1, 1], [1, 1, 1, 0], [5, 3, 3, 2], [-2, 1, 1, -1]] {
            let mm = m(e);
            if !mm.is_unimodular() {
                continue;
            }
            for k in 1..=4u32 {
                if let Ok(FixedPointSet::Finite(pts)) = fixed_points(&mm, k) {
                    for t in &pts {
                        assert!(pts.contains(&t.apply(&mm)));
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_cat_small() {
        let z = zeta_series(&cat(), 3).unwrap();
        let ints = z.integer_coefficients().unwrap();
        assert_eq!(
            ints,
            vec![Int::from(1), Int::from(1), Int::from(3), Int::from(8)]
        );
    }

    #[test]
    fn zeta_parabolic_is_error() {
        assert!(matches!(
            zeta_series(&m([1, 1, 0, 1]), 3),
            Err(Error::InfiniteFixedSet)
        ));
    }

    #[test]
    fn affine_maps_of_cat_and_cat_squared() {
        let gens = affine_symmetries(&cat(), AffineKind::Symmetry).unwrap();
        for g in &gens {
            assert!(g.translation.is_zero(), "Fix(cat) = origin only");
        }

        let c2 = m([5, 3, 3, 2]);
        let gens = affine_symmetries(&c2, AffineKind::Symmetry).unwrap();
        let wanted = AffineMap {
            translation: TorusPoint::from_i64s(1, 2, 5),
            linear: Mat2::identity(),
        };
        assert!(gens.contains(&wanted), "translation (1/5, 2/5) missing");
        for g in &gens {
            assert!(g.translation.fixed_by(&c2));
        }
    }

    #[test]
    fn affine_reversing_of_irreversible_has_no_reversor() {
        let fib = m([1, 1, 1, 0]);
        let gens = affine_symmetries(&fib, AffineKind::Reversing).unwrap();
        let minv = fib.unimodular_inverse().unwrap();
        for g in &gens {
            // every linear part is a symmetry, never a strict reversor
            assert_eq!(&g.linear * &fib, &fib * &g.linear);
            if g.linear.is_unimodular() {
                let conj = &(&g.linear * &fib) * &g.linear.unimodular_inverse().unwrap();
                assert_ne!(conj, minv);
            }
        }
    }

    #[test]
    fn ksym_scan_examples() {
        // the fibonacci matrix gains a reversor at k = 2 and nothing else
        let scan = k_symmetry_scan(&m([1, 1, 1, 0]), 3).unwrap();
        assert!(!scan[0].new_reversor);
        assert!(scan[1].new_reversor);
        assert!(!scan[1].new_symmetry);
        assert!(scan.iter().all(|e| e.theorem3_consistent));
        assert!(scan.iter().all(|e| !e.new_symmetry));

        // the cat map gains nothing
        let scan = k_symmetry_scan(&cat(), 6).unwrap();
        assert!(scan.iter().all(|e| !e.new_symmetry && !e.new_reversor));
        assert!(scan.iter().all(|e| e.theorem3_consistent));

        // order 4: S(M^2) = S(M^4) = GL(2,Z)
        let scan = k_symmetry_scan(&Mat2::std_s(), 4).unwrap();
        assert!(scan[1].new_symmetry && scan[1].new_reversor);
        assert_eq!(scan[1].symmetry.theorem_case, 1);
        assert!(scan[3].new_symmetry);
        assert_eq!(scan[3].symmetry.theorem_case, 1);
        assert!(!scan[2].new_symmetry, "M^3 = M^{{-1}} has the same groups");
        assert!(scan.iter().all(|e| e.theorem3_consistent));
    }
}
