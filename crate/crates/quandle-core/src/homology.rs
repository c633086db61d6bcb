//! Alternating quandles on `R^{2g}` with the standard symplectic
//! intersection form, and their `±1`-reduced quotients.
//!
//! Basis order is `a_1, b_1, …, a_g, b_g`, so the pairing matrix `J` is
//! block diagonal with `[[0, 1], [-1, 0]]` blocks and transvections stay
//! block-local for single-handle classes.

use alloc::format;
use alloc::vec::Vec;
use alloc::vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Quandle, Result};

/// Coefficient ring: `Z` or `Z/m` with `m ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientRing {
    Integers,
    Mod(u64),
}

impl CoefficientRing {
    pub fn modulus(self) -> Option<u64> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::Mod(m) => Some(m),
        }
    }

    pub fn validate(self) -> Result<Self> {
        if let CoefficientRing::Mod(m) = self {
            if m < 2 {
                return Err(Error::input(format!("modulus {m} must be at least 2")));
            }
        }
        Ok(self)
    }

    /// Canonical representative: over `Z/m` reduce into `[0, m)`.
    pub fn reduce(self, v: &BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => v.clone(),
            CoefficientRing::Mod(m) => {
                let m = BigInt::from(m);
                ((v % &m) + &m) % &m
            }
        }
    }
}

/// A vector in `H_1` of a genus-`g` surface with coefficients in `R`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomologyElement {
    pub ring: CoefficientRing,
    pub genus: usize,
    coords: Vec<BigInt>,
}

impl HomologyElement {
    pub fn new(ring: CoefficientRing, genus: usize, coords: Vec<BigInt>) -> Result<Self> {
        ring.validate()?;
        if coords.len() != 2 * genus {
            return Err(Error::input(format!(
                "{} coordinates for genus {genus} (expected {})",
                coords.len(),
                2 * genus
            )));
        }
        Ok(HomologyElement {
            ring,
            genus,
            coords: coords.iter().map(|c| ring.reduce(c)).collect(),
        })
    }

    pub fn from_i64(ring: CoefficientRing, genus: usize, coords: &[i64]) -> Result<Self> {
        Self::new(ring, genus, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(ring: CoefficientRing, genus: usize) -> Self {
        HomologyElement {
            ring,
            genus,
            coords: vec![BigInt::zero(); 2 * genus],
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn negate(&self) -> HomologyElement {
        HomologyElement {
            ring: self.ring,
            genus: self.genus,
            coords: self.coords.iter().map(|c| self.ring.reduce(&-c)).collect(),
        }
    }

    fn compatible(&self, other: &HomologyElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::input("coefficient ring mismatch"));
        }
        if self.genus != other.genus {
            return Err(Error::input(format!(
                "genus mismatch: {} vs {}",
                self.genus, other.genus
            )));
        }
        Ok(())
    }
}

/// The symplectic intersection pairing: `⟨a_i, b_i⟩ = 1`,
/// `⟨b_i, a_i⟩ = -1`, all other basis pairings zero.
pub fn pairing(x: &HomologyElement, y: &HomologyElement) -> Result<BigInt> {
    x.compatible(y)?;
    let mut acc = BigInt::zero();
    for i in 0..x.genus {
        acc += &x.coords[2 * i] * &y.coords[2 * i + 1] - &x.coords[2 * i + 1] * &y.coords[2 * i];
    }
    Ok(x.ring.reduce(&acc))
}

/// `x ▷ y = x + ⟨x,y⟩ y`.
pub fn aq_right(x: &HomologyElement, y: &HomologyElement) -> Result<HomologyElement> {
    let c = pairing(x, y)?;
    Ok(HomologyElement {
        ring: x.ring,
        genus: x.genus,
        coords: x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| x.ring.reduce(&(a + &c * b)))
            .collect(),
    })
}

/// `x ◁ y = x - ⟨x,y⟩ y`.
pub fn aq_left(x: &HomologyElement, y: &HomologyElement) -> Result<HomologyElement> {
    let c = pairing(x, y)?;
    Ok(HomologyElement {
        ring: x.ring,
        genus: x.genus,
        coords: x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| x.ring.reduce(&(a - &c * b)))
            .collect(),
    })
}

/// The canonical representative of a `{v, -v}` orbit.
///
/// Over `Z` the first nonzero coordinate is positive; over `Z/m` the
/// representative is the lexicographically smaller of the two.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedHomologyElement(HomologyElement);

impl ReducedHomologyElement {
    pub fn lift(&self) -> &HomologyElement {
        &self.0
    }

    pub fn ring(&self) -> CoefficientRing {
        self.0.ring
    }

    pub fn genus(&self) -> usize {
        self.0.genus
    }
}

/// Map a homology class to its `±1` orbit representative.
pub fn reduce(x: &HomologyElement) -> ReducedHomologyElement {
    let neg = x.negate();
    let rep = match x.ring {
        CoefficientRing::Integers => {
            match x.coords.iter().find(|c| !c.is_zero()) {
                Some(first) if first.is_negative() => neg,
                _ => x.clone(),
            }
        }
        CoefficientRing::Mod(_) => {
            if neg.coords < x.coords {
                neg
            } else {
                x.clone()
            }
        }
    };
    ReducedHomologyElement(rep)
}

/// The reduced operation: lift, operate, reduce. Well-defined because
/// negating either lift negates or fixes the alternating-quandle output.
pub fn hd_right(
    x: &ReducedHomologyElement,
    y: &ReducedHomologyElement,
) -> Result<ReducedHomologyElement> {
    Ok(reduce(&aq_right(&x.0, &y.0)?))
}

pub fn hd_left(
    x: &ReducedHomologyElement,
    y: &ReducedHomologyElement,
) -> Result<ReducedHomologyElement> {
    Ok(reduce(&aq_left(&x.0, &y.0)?))
}

/// The matrix of the transvection `x ↦ x + ⟨x,y⟩ y`, i.e.
/// `I + y·(Jy)ᵀ`, acting on column vectors. Symplectic, and unchanged
/// under `y ↦ -y`.
pub fn transvection_matrix(y: &HomologyElement) -> Vec<Vec<BigInt>> {
    let n = 2 * y.genus;
    let jy = apply_j(y);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut e = &y.coords[i] * &jy[j];
            if i == j {
                e += 1;
            }
            m[i][j] = y.ring.reduce(&e);
        }
    }
    m
}

/// `J·y` in the block basis: `(a, b) ↦ (b, -a)` per handle.
fn apply_j(y: &HomologyElement) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(2 * y.genus);
    for i in 0..y.genus {
        out.push(y.ring.reduce(&y.coords[2 * i + 1].clone()));
        out.push(y.ring.reduce(&-&y.coords[2 * i]));
    }
    out
}

/// The pairing matrix `J` for genus `g`.
pub fn pairing_matrix(g: usize) -> Vec<Vec<BigInt>> {
    let n = 2 * g;
    let mut j = vec![vec![BigInt::zero(); n]; n];
    for i in 0..g {
        j[2 * i][2 * i + 1] = BigInt::one();
        j[2 * i + 1][2 * i] = -BigInt::one();
    }
    j
}

/// The alternating quandle on `R^{2g}` as a [`Quandle`] instance.
///
/// Operations panic on ring/genus mismatch; construct elements through
/// the same instance to avoid that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingQuandle {
    pub ring: CoefficientRing,
    pub genus: usize,
}

impl Quandle for AlternatingQuandle {
    type Elem = HomologyElement;

    fn right(&self, a: &HomologyElement, b: &HomologyElement) -> HomologyElement {
        aq_right(a, b).expect("mismatched elements in AlternatingQuandle")
    }

    fn left(&self, a: &HomologyElement, b: &HomologyElement) -> HomologyElement {
        aq_left(a, b).expect("mismatched elements in AlternatingQuandle")
    }
}

/// The reduced alternating quandle `HD_R(Σ)` as a [`Quandle`] instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedAlternatingQuandle {
    pub ring: CoefficientRing,
    pub genus: usize,
}

impl Quandle for ReducedAlternatingQuandle {
    type Elem = ReducedHomologyElement;

    fn right(&self, a: &ReducedHomologyElement, b: &ReducedHomologyElement) -> ReducedHomologyElement {
        hd_right(a, b).expect("mismatched elements in ReducedAlternatingQuandle")
    }

    fn left(&self, a: &ReducedHomologyElement, b: &ReducedHomologyElement) -> ReducedHomologyElement {
        hd_left(a, b).expect("mismatched elements in ReducedAlternatingQuandle")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoefficientRing = CoefficientRing::Integers;

    fn he(ring: CoefficientRing, g: usize, c: &[i64]) -> HomologyElement {
        HomologyElement::from_i64(ring, g, c).unwrap()
    }

    #[test]
    fn basis_pairings() {
        let a = he(Z, 1, &[1, 0]);
        let b = he(Z, 1, &[0, 1]);
        assert_eq!(pairing(&a, &b).unwrap(), BigInt::from(1));
        assert_eq!(pairing(&b, &a).unwrap(), BigInt::from(-1));
        assert_eq!(pairing(&a, &a).unwrap(), BigInt::zero());
    }

    #[test]
    fn genus_two_bilinear() {
        let x = he(Z, 2, &[1, 0, 1, 0]);
        let y = he(Z, 2, &[0, 1, 0, 1]);
        assert_eq!(pairing(&x, &y).unwrap(), BigInt::from(2));
    }

    #[test]
    fn mismatches_are_input_errors() {
        let a = he(Z, 1, &[1, 0]);
        let b = he(Z, 2, &[0, 1, 0, 0]);
        assert!(pairing(&a, &b).is_err());
        let c = he(CoefficientRing::Mod(5), 1, &[1, 0]);
        assert!(aq_right(&a, &c).is_err());
        assert!(HomologyElement::from_i64(Z, 2, &[1, 0]).is_err());
        assert!(HomologyElement::from_i64(CoefficientRing::Mod(1), 1, &[1, 0]).is_err());
    }

    #[test]
    fn aq_examples() {
        let x = he(Z, 1, &[1, 0]);
        let y = he(Z, 1, &[0, 1]);
        assert_eq!(aq_right(&x, &y).unwrap(), he(Z, 1, &[1, 1]));
        assert_eq!(aq_right(&x, &x).unwrap(), x);
        assert_eq!(aq_left(&aq_right(&x, &y).unwrap(), &y).unwrap(), x);
    }

    #[test]
    fn reduce_conventions() {
        assert_eq!(
            reduce(&he(Z, 2, &[-1, 0, 2, 0])).lift(),
            &he(Z, 2, &[1, 0, -2, 0])
        );
        let z = HomologyElement::zero(Z, 1);
        assert_eq!(reduce(&z).lift(), &z);
        let m5 = CoefficientRing::Mod(5);
        assert_eq!(reduce(&he(m5, 1, &[4, 0])).lift(), &he(m5, 1, &[1, 0]));
        // reduce(-x) = reduce(x)
        let x = he(Z, 2, &[3, -1, 0, 4]);
        assert_eq!(reduce(&x), reduce(&x.negate()));
    }

    #[test]
    fn hd_right_from_aq_example() {
        let x = reduce(&he(Z, 1, &[1, 0]));
        let y = reduce(&he(Z, 1, &[0, 1]));
        assert_eq!(hd_right(&x, &y).unwrap(), reduce(&he(Z, 1, &[1, 1])));
        assert_eq!(hd_right(&x, &x).unwrap(), x);
    }

    #[test]
    fn transvection_matrices() {
        let zero = HomologyElement::zero(Z, 2);
        let id: Vec<Vec<BigInt>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        assert_eq!(transvection_matrix(&zero), id);

        // g = 1, y = (0,1): matches the slope_to_matrix value for slope ∞
        let y = he(Z, 1, &[0, 1]);
        let m = transvection_matrix(&y);
        assert_eq!(m[0][0], BigInt::one());
        assert_eq!(m[0][1], BigInt::zero());
        assert_eq!(m[1][0], BigInt::one());
        assert_eq!(m[1][1], BigInt::one());
        assert_eq!(transvection_matrix(&y.negate()), m);
    }

    #[test]
    fn transvection_is_symplectic() {
        let j = pairing_matrix(2);
        for coords in [[1i64, 2, 3, 4], [0, 1, -5, 2], [7, 0, 0, -3]] {
            let y = he(Z, 2, &coords);
            let m = transvection_matrix(&y);
            // mᵀ · J · m = J
            let n = 4;
            let mut mt_j_m = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
            for r in 0..n {
                for c in 0..n {
                    let mut acc = BigInt::zero();
                    for k in 0..n {
                        for l in 0..n {
                            acc += &m[k][r] * &j[k][l] * &m[l][c];
                        }
                    }
                    mt_j_m[r][c] = acc;
                }
            }
            assert_eq!(mt_j_m, j);
        }
    }
}
