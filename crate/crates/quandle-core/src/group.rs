//! Permutations and elements of products `Z/m × S_n`, the ambient groups
//! used for conjugation quandles and augmentations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A permutation of `{0, …, n-1}`, stored as its image vector.
///
/// Composition is left-to-right: `(a.compose(b))[x] = b[a[x]]`, i.e. apply
/// `a` first. This matches the right-action flavour of augmentations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::input(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Transposition swapping `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; identity is "e".
    pub fn cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&format!("{}", x + 1));
                first = false;
                x = self.images[x];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

/// Element of `Z/m × S_n` (or plain `S_n` when `modulus` is `None`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    /// `(residue, modulus)` for the cyclic part, if any.
    pub cyclic: Option<(u64, u64)>,
    pub perm: Perm,
}

impl GroupElement {
    pub fn from_perm(perm: Perm) -> Self {
        GroupElement { cyclic: None, perm }
    }

    pub fn cyclic_perm(residue: u64, modulus: u64, perm: Perm) -> Self {
        GroupElement {
            cyclic: Some((residue % modulus, modulus)),
            perm,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.cyclic.map_or(true, |(r, _)| r == 0) && self.perm.is_identity()
    }

    /// `self` then `other`; cyclic parts add, permutations compose
    /// left-to-right.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let cyclic = match (self.cyclic, other.cyclic) {
            (Some((a, m)), Some((b, m2))) => {
                debug_assert_eq!(m, m2);
                Some(((a + b) % m, m))
            }
            (None, None) => None,
            _ => panic!("mixed cyclic/non-cyclic group elements"),
        };
        GroupElement {
            cyclic,
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            cyclic: self.cyclic.map(|(r, m)| ((m - r) % m, m)),
            perm: self.perm.inverse(),
        }
    }

    pub fn conjugate_by(&self, h: &GroupElement) -> GroupElement {
        h.inverse().compose(self).compose(h)
    }

    pub fn pow(&self, k: u32) -> GroupElement {
        let mut out = GroupElement {
            cyclic: self.cyclic.map(|(_, m)| (0, m)),
            perm: Perm::identity(self.perm.degree()),
        };
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    pub fn display(&self) -> String {
        match self.cyclic {
            Some((r, _)) => format!("({}, {})", r, self.perm.cycle_string()),
            None => self.perm.cycle_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn compose_is_left_to_right() {
        // apply (1 2) then (2 3): 1 -> 2 -> 3
        let a = Perm::transposition(3, 0, 1);
        let b = Perm::transposition(3, 1, 2);
        let c = a.compose(&b);
        assert_eq!(c.apply(0), 2);
        assert_eq!(c.apply(1), 0);
        assert_eq!(c.apply(2), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Perm::new(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
    }

    #[test]
    fn cycle_string() {
        assert_eq!(Perm::identity(4).cycle_string(), "e");
        assert_eq!(Perm::transposition(4, 0, 2).cycle_string(), "(1 3)");
    }

    #[test]
    fn cyclic_part_adds() {
        let g = GroupElement::cyclic_perm(7, 10, Perm::identity(2));
        let h = GroupElement::cyclic_perm(5, 10, Perm::identity(2));
        assert_eq!(g.compose(&h).cyclic, Some((2, 10)));
        assert!(g.compose(&g.inverse()).is_identity());
    }
}
