//! Nielsen trace maps: every GL(2,Z) matrix induces, through a free-group
//! automorphism, an exact polynomial self-map of 3-space in the half-trace
//! coordinates x = tr(A)/2, y = tr(B)/2, z = tr(AB)/2. These maps preserve
//! the invariant x^2 + y^2 + z^2 - 2xyz - 1 and fix the point (1, 1, 1);
//! -M and M induce the same map, so the construction lives on PGL(2,Z).
//!
//! Words are reduced symbolically in the algebra spanned by {I, A, B, AB}
//! with determinant-1 structure constants (A^2 = 2xA - I and the 2x2 trace
//! polarization identity), so every trace polynomial is exact.

use crate::error::Error;
use crate::mat::{Int, Mat2};
use crate::poly::{Poly3, PolyMap3};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Generator tokens: T^n = [[1, n], [0, 1]], S = [[0, -1], [1, 0]],
/// R = [[0, 1], [1, 0]]. Shear powers are kept folded so word length stays
/// logarithmic in the entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    T(Int),
    S,
    R,
}

impl Gen {
    pub fn matrix(&self) -> Mat2 {
        match self {
            Gen::T(n) => Mat2::new(Int::one(), n.clone(), Int::zero(), Int::one()),
            Gen::S => Mat2::std_s(),
            Gen::R => Mat2::std_r(),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(n) if n.is_one() => f.write_str("T"),
            Gen::T(n) if *n == -Int::one() => f.write_str("T^-1"),
            Gen::T(n) => write!(f, "T^{n}"),
            Gen::S => f.write_str("S"),
            Gen::R => f.write_str("R"),
        }
    }
}

/// A word in the generators, with an optional leading sign for -I.
/// Multiplying the tokens (times the sign) reproduces the source matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    pub negated: bool,
    pub tokens: Vec<Gen>,
}

impl GenWord {
    pub fn matrix(&self) -> Mat2 {
        let mut acc = Mat2::identity();
        for t in &self.tokens {
            acc = &acc * &t.matrix();
        }
        if self.negated {
            acc = -&acc;
        }
        acc
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        if self.tokens.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Decompose a unimodular matrix into generator tokens by column Euclid:
/// left-multiplications by T^q and S drive the lower-left entry to zero,
/// and a trailing R absorbs determinant -1.
pub fn decompose_word(m: &Mat2) -> Result<GenWord, Error> {
    m.ensure_unimodular()?;
    let det_neg = m.det() == -Int::one();
    // work with c = m (* R), which has determinant +1
    let mut c = if det_neg { m * &Mat2::std_r() } else { m.clone() };

    // Left operations applied so far, as tokens to invert later.
    enum Op {
        TPow(Int),
        S,
    }
    let mut ops: Vec<Op> = Vec::new();
    while !c.a21.is_zero() {
        if !c.a11.is_zero() {
            // kill a11 mod a21: T^{-q} with q = a11 div a21 (truncated)
            let (q, _) = c.a11.div_rem(&c.a21);
            if !q.is_zero() {
                let t = Gen::T(-&q).matrix();
                c = &t * &c;
                ops.push(Op::TPow(-q));
            }
        }
        // rotate: S * c swaps the rows with a sign, strictly shrinking |a21|
        c = &Mat2::std_s() * &c;
        ops.push(Op::S);
    }

    // c is now [[e, b], [0, e]] with e = +-1
    let mut negated = c.a11 == -Int::one();
    let shift = if negated { -&c.a12 } else { c.a12.clone() };

    let mut tokens: Vec<Gen> = Vec::new();
    // invert the accumulated left operations, leftmost first
    for op in ops {
        match op {
            Op::TPow(q) => tokens.push(Gen::T(-q)),
            // S^{-1} = -S
            Op::S => {
                tokens.push(Gen::S);
                negated = !negated;
            }
        }
    }
    if !shift.is_zero() {
        tokens.push(Gen::T(shift));
    }
    if det_neg {
        tokens.push(Gen::R);
    }

    let word = GenWord { negated, tokens };
    debug_assert_eq!(word.matrix(), *m, "decomposition must remultiply");
    Ok(word)
}

/// A freely reduced word over {a, a^-1, b, b^-1}, letters encoded as
/// +-1 (a) and +-2 (b).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeWord {
    letters: Vec<i8>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen_a() -> Self {
        FreeWord { letters: vec![1] }
    }

    pub fn gen_b() -> Self {
        FreeWord { letters: vec![2] }
    }

    pub fn push(&mut self, letter: i8) {
        debug_assert!(matches!(letter, 1 | -1 | 2 | -2));
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sums of (a, b): the image under abelianization.
    pub fn abelianized(&self) -> (i64, i64) {
        let mut ea = 0i64;
        let mut eb = 0i64;
        for &l in &self.letters {
            match l {
                1 => ea += 1,
                -1 => ea -= 1,
                2 => eb += 1,
                -2 => eb -= 1,
                _ => unreachable!(),
            }
        }
        (ea, eb)
    }

    /// Evaluate the word at concrete matrices.
    pub fn evaluate(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        let ainv = a.unimodular_inverse().expect("det 1 input");
        let binv = b.unimodular_inverse().expect("det 1 input");
        let mut acc = Mat2::identity();
        for &l in &self.letters {
            let f = match l {
                1 => a,
                -1 => &ainv,
                2 => b,
                -2 => &binv,
                _ => unreachable!(),
            };
            acc = &acc * f;
        }
        acc
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for &l in &self.letters {
            f.write_str(match l {
                1 => "a",
                -1 => "a'",
                2 => "b",
                -2 => "b'",
                _ => unreachable!(),
            })?;
        }
        Ok(())
    }
}

/// Substitute images for the letters of `w`.
fn substitute(w: &FreeWord, img_a: &FreeWord, img_b: &FreeWord) -> FreeWord {
    let inv_a = img_a.inverse();
    let inv_b = img_b.inverse();
    let mut out = FreeWord::identity();
    for &l in w.letters() {
        let rep = match l {
            1 => img_a,
            -1 => &inv_a,
            2 => img_b,
            -2 => &inv_b,
            _ => unreachable!(),
        };
        for &r in rep.letters() {
            out.push(r);
        }
    }
    out
}

const EXPANSION_LIMIT: i64 = 1 << 20;

fn shear_power(n: &Int) -> (FreeWord, FreeWord) {
    // T^n: a -> a, b -> a^n b
    let reps = n
        .abs()
        .to_i64()
        .filter(|v| *v <= EXPANSION_LIMIT)
        .expect("shear exponent too large to expand symbolically");
    let letter = if n.is_negative() { -1i8 } else { 1i8 };
    let mut img_b = FreeWord::identity();
    for _ in 0..reps {
        img_b.push(letter);
    }
    img_b.push(2);
    (FreeWord::gen_a(), img_b)
}

/// The free-group automorphism induced by a generator word, as the images
/// (phi(a), phi(b)). Token assignments: T: (a, ab), S: (b, a^-1), R: (b, a);
/// a leading sign acts as a -> a^-1, b -> b^-1. Tokens compose left to
/// right: the leftmost token is the outermost substitution. The
/// abelianization of the result is checked against the word's matrix.
pub fn induced_automorphism(w: &GenWord) -> (FreeWord, FreeWord) {
    let mut img_a = FreeWord::gen_a();
    let mut img_b = FreeWord::gen_b();
    for token in w.tokens.iter().rev() {
        let (ta, tb) = match token {
            Gen::T(n) => shear_power(n),
            Gen::S => {
                let mut b_inv_a = FreeWord::identity();
                b_inv_a.push(-1);
                (FreeWord::gen_b(), b_inv_a)
            }
            Gen::R => (FreeWord::gen_b(), FreeWord::gen_a()),
        };
        img_a = substitute(&img_a, &ta, &tb);
        img_b = substitute(&img_b, &ta, &tb);
    }
    if w.negated {
        img_a = img_a.inverse();
        img_b = img_b.inverse();
    }

    // abelianization must reproduce the source matrix
    let (a11, a21) = img_a.abelianized();
    let (a12, a22) = img_b.abelianized();
    debug_assert_eq!(
        Mat2::from_i64s([a11, a12, a21, a22]),
        w.matrix(),
        "abelianization mismatch for {w}"
    );
    let _ = (a11, a12, a21, a22);
    (img_a, img_b)
}

/// Symbolic element c0*I + c1*A + c2*B + c3*AB of the algebra generated by
/// two determinant-1 matrices, with coefficients polynomial in the
/// half-traces (x, y, z).
#[derive(Clone)]
struct AlgebraElement {
    c: [Poly3; 4],
}

impl AlgebraElement {
    fn one() -> Self {
        AlgebraElement {
            c: [
                Poly3::constant(1),
                Poly3::zero(),
                Poly3::zero(),
                Poly3::zero(),
            ],
        }
    }

    /// Multiply by a single letter on the right. The reductions come from
    /// A^2 = 2xA - I, B^2 = 2yB - I, (AB)A = 2zA + B - 2yI,
    /// BA = -AB + 2xB + 2yA + (2z - 4xy)I, and the inverse expansions
    /// A^-1 = 2xI - A, B^-1 = 2yI - B.
    fn mul_letter(&self, letter: i8) -> AlgebraElement {
        let [c0, c1, c2, c3] = &self.c;
        let two_x = Poly3::monomial([1, 0, 0], 2);
        let two_y = Poly3::monomial([0, 1, 0], 2);
        let two_z = Poly3::monomial([0, 0, 1], 2);
        let ba_const = &two_z - &Poly3::monomial([1, 1, 0], 4); // 2z - 4xy

        let c = match letter {
            1 => [
                &(&(-c1) + &(c2 * &ba_const)) - &(c3 * &two_y),
                &(&(c0 + &(c1 * &two_x)) + &(c2 * &two_y)) + &(c3 * &two_z),
                &(c2 * &two_x) + c3,
                -c2,
            ],
            2 => [
                -c2,
                -c3,
                c0 + &(c2 * &two_y),
                c1 + &(c3 * &two_y),
            ],
            -1 => {
                // right-multiply by 2xI - A
                let by_a = self.mul_letter(1);
                let scaled = AlgebraElement {
                    c: [
                        c0 * &two_x,
                        c1 * &two_x,
                        c2 * &two_x,
                        c3 * &two_x,
                    ],
                };
                [
                    &scaled.c[0] - &by_a.c[0],
                    &scaled.c[1] - &by_a.c[1],
                    &scaled.c[2] - &by_a.c[2],
                    &scaled.c[3] - &by_a.c[3],
                ]
            }
            -2 => {
                let by_b = self.mul_letter(2);
                let scaled = AlgebraElement {
                    c: [
                        c0 * &two_y,
                        c1 * &two_y,
                        c2 * &two_y,
                        c3 * &two_y,
                    ],
                };
                [
                    &scaled.c[0] - &by_b.c[0],
                    &scaled.c[1] - &by_b.c[1],
                    &scaled.c[2] - &by_b.c[2],
                    &scaled.c[3] - &by_b.c[3],
                ]
            }
            _ => unreachable!(),
        };
        AlgebraElement { c }
    }

    /// Half-trace: tr(c0 I + c1 A + c2 B + c3 AB)/2 = c0 + c1 x + c2 y + c3 z.
    fn half_trace(&self) -> Poly3 {
        let [c0, c1, c2, c3] = &self.c;
        &(&(c0 + &(c1 * &Poly3::x())) + &(c2 * &Poly3::y())) + &(c3 * &Poly3::z())
    }
}

/// The half-trace of w(A, B) as an exact polynomial in
/// (x, y, z) = (tr A / 2, tr B / 2, tr AB / 2), valid for all 2x2 matrices
/// of determinant 1 over any commutative ring containing 1/1 (evaluation at
/// rationals is exact).
pub fn trace_polynomial(w: &FreeWord) -> Poly3 {
    let mut el = AlgebraElement::one();
    for &l in w.letters() {
        el = el.mul_letter(l);
    }
    el.half_trace()
}

/// The Fricke-Vogt invariant x^2 + y^2 + z^2 - 2xyz - 1.
pub fn fricke_invariant() -> Poly3 {
    let mut p = Poly3::monomial([2, 0, 0], 1);
    p = &p + &Poly3::monomial([0, 2, 0], 1);
    p = &p + &Poly3::monomial([0, 0, 2], 1);
    p = &p + &Poly3::monomial([1, 1, 1], -2);
    &p + &Poly3::constant(-1)
}

/// The trace map of M: components are the trace polynomials of
/// (phi(a), phi(b), phi(a)phi(b)) for the induced automorphism phi.
///
/// Composition convention: trace_map(M * N) = trace_map(N).compose(trace_map(M)),
/// i.e. the induced polynomial maps anti-compose along matrix products.
pub fn trace_map(m: &Mat2) -> Result<PolyMap3, Error> {
    if m.max_abs_entry() > Int::from(EXPANSION_LIMIT) {
        return Err(Error::Unsupported(
            "matrix entries too large for symbolic trace-map expansion".into(),
        ));
    }
    let word = decompose_word(m)?;
    let (img_a, img_b) = induced_automorphism(&word);
    let img_ab = img_a.concat(&img_b);
    Ok(PolyMap3::new(
        trace_polynomial(&img_a),
        trace_polynomial(&img_b),
        trace_polynomial(&img_ab),
    ))
}

/// Result of checking a polynomial map against the trace-map invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantCheck {
    /// I(F(p)) - I(p) is the zero polynomial.
    pub preserves_invariant: bool,
    /// F(1, 1, 1) = (1, 1, 1).
    pub fixes_base_point: bool,
}

impl InvariantCheck {
    pub fn passes(&self) -> bool {
        self.preserves_invariant && self.fixes_base_point
    }
}

/// Symbolically verify that F preserves the Fricke-Vogt invariant and fixes
/// (1, 1, 1).
pub fn check_invariant(f: &PolyMap3) -> InvariantCheck {
    let inv = fricke_invariant();
    let composed = inv.compose(&f.fx, &f.fy, &f.fz);
    let preserves_invariant = (&composed - &inv).is_zero();
    let one = Int::one();
    let at = f.eval_int(&one, &one, &one);
    let fixes_base_point = at == (one.clone(), one.clone(), one);
    InvariantCheck {
        preserves_invariant,
        fixes_base_point,
    }
}

/// The three sign flips (x, -y, -z), (-x, y, -z), (-x, -y, z): involutions
/// preserving the invariant but moving the base point (1, 1, 1). They are
/// the nontrivial translation classes of the affine extension.
pub fn klein_flips() -> [PolyMap3; 3] {
    let x = Poly3::x();
    let y = Poly3::y();
    let z = Poly3::z();
    [
        PolyMap3::new(x.clone(), -&y, -&z),
        PolyMap3::new(-&x, y.clone(), -&z),
        PolyMap3::new(-&x, -&y, z.clone()),
    ]
}
