//! Sparse exact polynomials in three variables (x, y, z) over the integers,
//! plus polynomial self-maps of 3-space. Just enough arithmetic for trace
//! maps: addition, multiplication, composition, exact evaluation, and a
//! canonical display order.

use crate::mat::Int;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent triple (x, y, z).
pub type Expo = [u32; 3];

/// Zero coefficients are never stored; equality is coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<Expo, Int>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3::default()
    }

    pub fn constant(c: i64) -> Self {
        Poly3::from_terms(vec![([0, 0, 0], Int::from(c))])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u32; 3];
        e[i] = 1;
        Poly3::from_terms(vec![(e, Int::one())])
    }

    pub fn x() -> Self {
        Poly3::var(0)
    }
    pub fn y() -> Self {
        Poly3::var(1)
    }
    pub fn z() -> Self {
        Poly3::var(2)
    }

    pub fn monomial(e: Expo, c: i64) -> Self {
        Poly3::from_terms(vec![(e, Int::from(c))])
    }

    pub fn from_terms(terms: Vec<(Expo, Int)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(Int::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        Poly3 { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Int) -> Poly3 {
        if c.is_zero() {
            return Poly3::zero();
        }
        Poly3 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational, z: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for _ in 0..e[0] {
                t *= x;
            }
            for _ in 0..e[1] {
                t *= y;
            }
            for _ in 0..e[2] {
                t *= z;
            }
            acc += t;
        }
        acc
    }

    pub fn eval_int(&self, x: &Int, y: &Int, z: &Int) -> Int {
        let mut acc = Int::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..e[0] {
                t *= x;
            }
            for _ in 0..e[1] {
                t *= y;
            }
            for _ in 0..e[2] {
                t *= z;
            }
            acc += t;
        }
        acc
    }

    /// Substitute polynomials for the three variables.
    pub fn compose(&self, fx: &Poly3, fy: &Poly3, fz: &Poly3) -> Poly3 {
        let mut acc = Poly3::zero();
        // cache powers of the substituted components
        let mut px: Vec<Poly3> = vec![Poly3::constant(1)];
        let mut py: Vec<Poly3> = vec![Poly3::constant(1)];
        let mut pz: Vec<Poly3> = vec![Poly3::constant(1)];
        for (e, c) in &self.terms {
            while px.len() <= e[0] as usize {
                let next = &px[px.len() - 1] * fx;
                px.push(next);
            }
            while py.len() <= e[1] as usize {
                let next = &py[py.len() - 1] * fy;
                py.push(next);
            }
            while pz.len() <= e[2] as usize {
                let next = &pz[pz.len() - 1] * fz;
                pz.push(next);
            }
            let m = &(&px[e[0] as usize] * &py[e[1] as usize]) * &pz[e[2] as usize];
            acc = &acc + &m.scale(c);
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e[0] + e[1] + e[2])
            .max()
            .unwrap_or(0)
    }
}

impl Add for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = out.entry(*e).or_insert_with(Int::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        Poly3 { terms: out }
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        self + &(-rhs)
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut out: BTreeMap<Expo, Int> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let entry = out.entry(e).or_insert_with(Int::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
        }
        Poly3 { terms: out }
    }
}

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

/// Canonical printing: graded lexicographic order (higher total degree
/// first; within a degree x before y before z), e.g. "2*x*z - y".
impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Expo, &Int)> = self.terms.iter().collect();
        // grlex: degree descending, then exponent vector descending
        ordered.sort_by(|(ea, _), (eb, _)| {
            let da = ea[0] + ea[1] + ea[2];
            let db = eb[0] + eb[1] + eb[2];
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });

        for (i, (e, c)) in ordered.iter().enumerate() {
            let is_const = e[0] == 0 && e[1] == 0 && e[2] == 0;
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || is_const {
                parts.push(abs.to_string());
            }
            for (vi, name) in VAR_NAMES.iter().enumerate() {
                match e[vi] {
                    0 => {}
                    1 => parts.push((*name).to_string()),
                    p => parts.push(format!("{name}^{p}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// A polynomial self-map of 3-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap3 {
    pub fx: Poly3,
    pub fy: Poly3,
    pub fz: Poly3,
}

impl PolyMap3 {
    pub fn identity() -> Self {
        PolyMap3 {
            fx: Poly3::x(),
            fy: Poly3::y(),
            fz: Poly3::z(),
        }
    }

    pub fn new(fx: Poly3, fy: Poly3, fz: Poly3) -> Self {
        PolyMap3 { fx, fy, fz }
    }

    /// self after other: (self . other)(p) = self(other(p)).
    pub fn compose(&self, other: &PolyMap3) -> PolyMap3 {
        PolyMap3 {
            fx: self.fx.compose(&other.fx, &other.fy, &other.fz),
            fy: self.fy.compose(&other.fx, &other.fy, &other.fz),
            fz: self.fz.compose(&other.fx, &other.fy, &other.fz),
        }
    }

    pub fn eval(
        &self,
        x: &BigRational,
        y: &BigRational,
        z: &BigRational,
    ) -> (BigRational, BigRational, BigRational) {
        (
            self.fx.eval(x, y, z),
            self.fy.eval(x, y, z),
            self.fz.eval(x, y, z),
        )
    }

    pub fn eval_int(&self, x: &Int, y: &Int, z: &Int) -> (Int, Int, Int) {
        (
            self.fx.eval_int(x, y, z),
            self.fy.eval_int(x, y, z),
            self.fz.eval_int(x, y, z),
        )
    }
}

impl fmt::Display for PolyMap3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.fx, self.fy, self.fz)
    }
}
