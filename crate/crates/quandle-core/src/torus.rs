//! The Dehn quandle of the torus.
//!
//! Elements are the contractible class plus normalized primitive slopes
//! `y/x`; the operations use the closed-form slope formulas and can be
//! cross-checked against conjugation of twist matrices in `SL(2,Z)`.
//! Arithmetic is arbitrary precision: iterated twists grow entries
//! quadratically.

use alloc::format;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Quandle, Result};

/// An element of the torus Dehn quandle.
///
/// `Primitive(x, y)` is the essential curve of slope `y/x` with
/// `gcd(x, y) = 1`, sign-normalized so `x > 0`, or `x = 0 && y = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Contractible,
    Primitive(BigInt, BigInt),
}

impl Slope {
    pub fn primitive(x: i64, y: i64) -> Result<Slope> {
        normalize_slope(&BigInt::from(x), &BigInt::from(y))
    }

    pub fn display(&self) -> alloc::string::String {
        match self {
            Slope::Contractible => "I".to_string(),
            Slope::Primitive(x, y) => format!("{y}/{x}"),
        }
    }
}

/// Normalize an integer pair to a slope: divide by the gcd, then fix
/// the sign so `x > 0` (or `x = 0, y = 1`).
pub fn normalize_slope(x: &BigInt, y: &BigInt) -> Result<Slope> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::input("(0, 0) does not determine a slope"));
    }
    let g = x.gcd(y);
    let mut x = x / &g;
    let mut y = y / &g;
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        x = -x;
        y = -y;
    }
    Ok(Slope::Primitive(x, y))
}

/// Sign-normalize a pair already known to be primitive; panics if the
/// pair is not primitive (that would be an arithmetic bug, not an input
/// problem).
fn normalize_primitive(x: BigInt, y: BigInt) -> Slope {
    assert!(
        x.gcd(&y).is_one(),
        "twist output ({x}, {y}) is not primitive"
    );
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        Slope::Primitive(-x, -y)
    } else {
        Slope::Primitive(x, y)
    }
}

/// `a ▷ b`: the image of `a` under the positive Dehn twist about `b`.
pub fn op_right(a: &Slope, b: &Slope) -> Slope {
    match (a, b) {
        (Slope::Contractible, _) => Slope::Contractible,
        (q, Slope::Contractible) => q.clone(),
        (Slope::Primitive(u, v), Slope::Primitive(x, y)) => {
            let xy = x * y;
            let nu = u - u * &xy + v * x * x;
            let nv = v + v * &xy - u * y * y;
            normalize_primitive(nu, nv)
        }
    }
}

/// `a ◁ b`: the image of `a` under the negative Dehn twist about `b`.
pub fn op_left(a: &Slope, b: &Slope) -> Slope {
    match (a, b) {
        (Slope::Contractible, _) => Slope::Contractible,
        (q, Slope::Contractible) => q.clone(),
        (Slope::Primitive(u, v), Slope::Primitive(x, y)) => {
            let xy = x * y;
            let nu = u + u * &xy - v * x * x;
            let nv = v - v * &xy + u * y * y;
            normalize_primitive(nu, nv)
        }
    }
}

/// A 2×2 integer matrix; twist matrices have determinant 1 and trace 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Inverse of a determinant-1 matrix (the adjugate).
    pub fn inv(&self) -> Mat2 {
        debug_assert!(self.det().is_one());
        Mat2 {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// Apply to a column vector.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn entries(&self) -> [BigInt; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }
}

/// The `SL(2,Z)` matrix of the positive twist about a slope:
/// `[[xy+1, -x²], [y², 1-xy]]`; the contractible class maps to the
/// identity.
pub fn slope_to_matrix(s: &Slope) -> Mat2 {
    match s {
        Slope::Contractible => Mat2::identity(),
        Slope::Primitive(x, y) => {
            let xy = x * y;
            Mat2 {
                a: &xy + 1,
                b: -(x * x),
                c: y * y,
                d: BigInt::one() - xy,
            }
        }
    }
}

/// Recover a slope from a twist matrix; inverse of [`slope_to_matrix`].
///
/// `x` and `y` come back up to a common sign from the off-diagonal
/// entries, and the diagonal fixes the sign of `xy`.
pub fn matrix_to_slope(m: &Mat2) -> Result<Slope> {
    if !m.det().is_one() {
        return Err(Error::domain(format!(
            "determinant {} != 1, not a twist matrix",
            m.det()
        )));
    }
    if m.trace() != BigInt::from(2) {
        return Err(Error::domain(format!(
            "trace {} != 2, not a twist matrix",
            m.trace()
        )));
    }
    if m.is_identity() {
        return Ok(Slope::Contractible);
    }
    let x2 = -&m.b;
    let y2 = m.c.clone();
    if x2.is_negative() || y2.is_negative() {
        return Err(Error::domain(
            "off-diagonal entries have the wrong signs for a twist matrix".to_string(),
        ));
    }
    let x = x2.sqrt();
    let y = y2.sqrt();
    if &x * &x != x2 || &y * &y != y2 {
        return Err(Error::domain(
            "off-diagonal entries are not perfect squares".to_string(),
        ));
    }
    // diagonal determines the sign of xy
    let xy: BigInt = &m.a - 1;
    let candidate = if xy.is_negative() {
        Slope::Primitive(x, -y)
    } else {
        Slope::Primitive(x, y)
    };
    // normalize the x = 0 case and validate the reconstruction
    let s = match candidate {
        Slope::Primitive(x, y) if x.is_zero() => normalize_primitive(x, y),
        other => other,
    };
    match &s {
        Slope::Primitive(x, y) if !x.gcd(y).is_one() => {
            return Err(Error::domain(format!(
                "recovered pair ({x}, {y}) is not primitive"
            )));
        }
        _ => {}
    }
    if slope_to_matrix(&s) != *m {
        return Err(Error::domain(
            "matrix is not of the twist form for any slope".to_string(),
        ));
    }
    Ok(s)
}

/// Compute `a ▷ b` the slow way: conjugate the twist matrices,
/// `M_b⁻¹ · M_a · M_b`, and recover the slope. This is the
/// cross-validation oracle, not the production path; a failure to
/// recover a slope here is a bug signal.
pub fn conjugation_oracle(a: &Slope, b: &Slope) -> Result<Slope> {
    if matches!(a, Slope::Contractible) {
        return Ok(Slope::Contractible);
    }
    let ma = slope_to_matrix(a);
    let mb = slope_to_matrix(b);
    matrix_to_slope(&mb.inv().mul(&ma).mul(&mb))
}

/// The torus Dehn quandle as a [`Quandle`] instance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TorusQuandle;

impl Quandle for TorusQuandle {
    type Elem = Slope;

    fn right(&self, a: &Slope, b: &Slope) -> Slope {
        op_right(a, b)
    }

    fn left(&self, a: &Slope, b: &Slope) -> Slope {
        op_left(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64, y: i64) -> Slope {
        Slope::primitive(x, y).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(s(2, 4), Slope::Primitive(1.into(), 2.into()));
        assert_eq!(s(-1, 1), Slope::Primitive(1.into(), (-1).into()));
        assert_eq!(s(0, -3), Slope::Primitive(0.into(), 1.into()));
        assert!(Slope::primitive(0, 0).is_err());
    }

    #[test]
    fn contractible_cases() {
        let q = s(3, 5);
        assert_eq!(op_right(&q, &Slope::Contractible), q);
        assert_eq!(op_right(&Slope::Contractible, &q), Slope::Contractible);
        assert_eq!(op_left(&q, &Slope::Contractible), q);
        assert_eq!(op_left(&Slope::Contractible, &q), Slope::Contractible);
    }

    #[test]
    fn idempotence_and_known_value() {
        assert_eq!(op_right(&s(1, 1), &s(1, 1)), s(1, 1));
        // slope 0 twisted about slope ∞ gives slope −1
        assert_eq!(op_right(&s(1, 0), &s(0, 1)), s(1, -1));
    }

    #[test]
    fn twist_matrices() {
        assert_eq!(slope_to_matrix(&s(1, 0)), Mat2::new(1, -1, 0, 1));
        assert_eq!(slope_to_matrix(&s(0, 1)), Mat2::new(1, 0, 1, 1));
        assert_eq!(slope_to_matrix(&Slope::Contractible), Mat2::identity());
        for (x, y) in [(1, 0), (0, 1), (2, 3), (5, -7)] {
            let m = slope_to_matrix(&s(x, y));
            assert!(m.det().is_one());
            assert_eq!(m.trace(), BigInt::from(2));
        }
    }

    #[test]
    fn matrix_roundtrip_and_rejection() {
        assert_eq!(matrix_to_slope(&Mat2::new(1, -1, 0, 1)).unwrap(), s(1, 0));
        assert_eq!(
            matrix_to_slope(&Mat2::identity()).unwrap(),
            Slope::Contractible
        );
        assert!(matches!(
            matrix_to_slope(&Mat2::new(2, 1, 0, 1)),
            Err(Error::Domain(_))
        ));
        // this one happens to be a twist matrix: slope 1/2
        assert_eq!(matrix_to_slope(&Mat2::new(3, -4, 1, -1)).unwrap(), s(2, 1));
        // det 1, trace 2, but -b is not a perfect square
        assert!(matrix_to_slope(&Mat2::new(3, -2, 2, -1)).is_err());
    }

    #[test]
    fn oracle_agrees_on_samples() {
        let slopes = [
            Slope::Contractible,
            s(1, 0),
            s(0, 1),
            s(1, 1),
            s(1, -1),
            s(2, 3),
            s(3, -5),
            s(7, 2),
        ];
        for a in &slopes {
            for b in &slopes {
                assert_eq!(op_right(a, b), conjugation_oracle(a, b).unwrap());
            }
        }
    }

    #[test]
    fn oracle_trivial_cases() {
        let a = s(4, 9);
        assert_eq!(conjugation_oracle(&a, &a).unwrap(), a);
        assert_eq!(conjugation_oracle(&a, &Slope::Contractible).unwrap(), a);
    }

    #[test]
    fn quandle_axioms_small_range() {
        let mut slopes = alloc::vec![Slope::Contractible];
        for x in 0..=4i64 {
            for y in -4..=4i64 {
                if let Ok(sl) = Slope::primitive(x, y) {
                    if !slopes.contains(&sl) {
                        slopes.push(sl);
                    }
                }
            }
        }
        for a in &slopes {
            assert_eq!(op_right(a, a), a.clone());
            for b in &slopes {
                assert_eq!(op_left(&op_right(a, b), b), a.clone());
                assert_eq!(op_right(&op_left(a, b), b), a.clone());
                for c in &slopes {
                    assert_eq!(
                        op_right(&op_right(a, b), c),
                        op_right(&op_right(a, c), &op_right(b, c))
                    );
                }
            }
        }
    }
}
