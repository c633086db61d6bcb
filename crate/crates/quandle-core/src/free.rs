//! The free quandle on `n` generators, realized inside the free group by
//! conjugation: elements are normal forms `s ^ w` with `s` a generator
//! and `w` a freely reduced conjugating word not beginning with `s^±`.
//!
//! This models the knot quandle of the `n`-punctured disk, and
//! [`evaluate`] is the unique homomorphism extending a generator
//! assignment into any quandle.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Quandle, Result};

/// A signed generator letter; `inverse` marks `g⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// Freely reduce a word (cancel adjacent `g⁺g⁻` / `g⁻g⁺`).
pub fn free_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        match out.last() {
            Some(&last) if last.gen == l.gen && last.inverse != l.inverse => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Normal form `gen ^ word`: the word is freely reduced and does not
/// begin with `gen^±` (the centralizer of a generator is the cyclic
/// subgroup it generates).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeQuandleElement {
    rank: usize,
    gen: usize,
    word: Vec<Letter>,
}

impl FreeQuandleElement {
    pub fn generator(rank: usize, gen: usize) -> Result<Self> {
        Self::new(rank, gen, &[])
    }

    /// Normalize `(gen, word)`: free reduction, then strip any leading
    /// run of `gen^±`. Idempotent.
    pub fn new(rank: usize, gen: usize, word: &[Letter]) -> Result<Self> {
        if gen >= rank {
            return Err(Error::input(format!(
                "generator {gen} out of range for rank {rank}"
            )));
        }
        for l in word {
            if l.gen >= rank {
                return Err(Error::input(format!(
                    "letter generator {} out of range for rank {rank}",
                    l.gen
                )));
            }
        }
        let mut word = free_reduce(word);
        let mut start = 0;
        while start < word.len() && word[start].gen == gen {
            start += 1;
        }
        word.drain(..start);
        Ok(FreeQuandleElement { rank, gen, word })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gen(&self) -> usize {
        self.gen
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }
}

fn check_ranks(a: &FreeQuandleElement, b: &FreeQuandleElement) -> Result<()> {
    if a.rank != b.rank {
        return Err(Error::input(format!(
            "rank mismatch: {} vs {}",
            a.rank, b.rank
        )));
    }
    Ok(())
}

/// `a ▷ b`: for `a = s^w`, `b = t^v`, conjugate by `v⁻¹ t v`.
pub fn fq_right(a: &FreeQuandleElement, b: &FreeQuandleElement) -> Result<FreeQuandleElement> {
    check_ranks(a, b)?;
    fq_op(a, b, false)
}

/// `a ◁ b`: conjugate by `v⁻¹ t⁻¹ v`.
pub fn fq_left(a: &FreeQuandleElement, b: &FreeQuandleElement) -> Result<FreeQuandleElement> {
    check_ranks(a, b)?;
    fq_op(a, b, true)
}

fn fq_op(
    a: &FreeQuandleElement,
    b: &FreeQuandleElement,
    inverse: bool,
) -> Result<FreeQuandleElement> {
    let mut word = a.word.clone();
    word.extend(b.word.iter().rev().map(|l| l.inv()));
    word.push(Letter {
        gen: b.gen,
        inverse,
    });
    word.extend(b.word.iter().copied());
    FreeQuandleElement::new(a.rank, a.gen, &word)
}

/// Evaluate under the homomorphism sending generator `i` to
/// `images[i]`: start at the generator image and fold the conjugating
/// word through the target operations.
pub fn evaluate<Q: Quandle>(
    a: &FreeQuandleElement,
    images: &[Q::Elem],
    target: &Q,
) -> Result<Q::Elem> {
    if images.len() != a.rank {
        return Err(Error::input(format!(
            "{} generator images for rank {}",
            images.len(),
            a.rank
        )));
    }
    let mut acc = images[a.gen].clone();
    for l in &a.word {
        acc = if l.inverse {
            target.left(&acc, &images[l.gen])
        } else {
            target.right(&acc, &images[l.gen])
        };
    }
    Ok(acc)
}

/// The free quandle of a given rank as a [`Quandle`] instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeQuandle {
    pub rank: usize,
}

impl Quandle for FreeQuandle {
    type Elem = FreeQuandleElement;

    fn right(&self, a: &FreeQuandleElement, b: &FreeQuandleElement) -> FreeQuandleElement {
        fq_right(a, b).expect("mismatched ranks in FreeQuandle")
    }

    fn left(&self, a: &FreeQuandleElement, b: &FreeQuandleElement) -> FreeQuandleElement {
        fq_left(a, b).expect("mismatched ranks in FreeQuandle")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteQuandle;
    use alloc::vec;

    fn el(gen: usize, word: &[Letter]) -> FreeQuandleElement {
        FreeQuandleElement::new(3, gen, word).unwrap()
    }

    #[test]
    fn normalization() {
        // (s, [s⁺]) → (s, [])
        assert_eq!(el(0, &[Letter::pos(0)]), el(0, &[]));
        // (s, [t⁺, t⁻]) → (s, [])
        assert_eq!(el(0, &[Letter::pos(1), Letter::neg(1)]), el(0, &[]));
        // (s, [s⁻, s⁻, t⁺]) → (s, [t⁺])
        assert_eq!(
            el(0, &[Letter::neg(0), Letter::neg(0), Letter::pos(1)]),
            el(0, &[Letter::pos(1)])
        );
        // free reduction can expose a strippable leading run
        assert_eq!(
            el(0, &[Letter::pos(1), Letter::neg(1), Letter::pos(0), Letter::pos(2)]),
            el(0, &[Letter::pos(2)])
        );
        assert!(FreeQuandleElement::new(2, 2, &[]).is_err());
        assert!(FreeQuandleElement::new(2, 0, &[Letter::pos(5)]).is_err());
    }

    #[test]
    fn conjugation_rule() {
        let s = el(0, &[]);
        let t = el(1, &[]);
        assert_eq!(fq_right(&s, &t).unwrap(), el(0, &[Letter::pos(1)]));
        assert_eq!(fq_right(&s, &s).unwrap(), s);
    }

    #[test]
    fn left_inverts_right() {
        let a = el(0, &[Letter::pos(1), Letter::neg(2), Letter::pos(1)]);
        let b = el(2, &[Letter::pos(0)]);
        assert_eq!(fq_left(&fq_right(&a, &b).unwrap(), &b).unwrap(), a);
        assert_eq!(fq_right(&fq_left(&a, &b).unwrap(), &b).unwrap(), a);
    }

    #[test]
    fn evaluate_examples() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let imgs = vec![0usize, 1, 2];
        assert_eq!(evaluate(&el(1, &[]), &imgs, &r3).unwrap(), 1);
        // (s0, [g1⁺]) ↦ imgs[0] ▷ imgs[1]
        assert_eq!(
            evaluate(&el(0, &[Letter::pos(1)]), &imgs, &r3).unwrap(),
            r3.op_right(0, 1)
        );
        // evaluate respects fq_right
        let a = el(0, &[Letter::pos(1), Letter::neg(2)]);
        let b = el(2, &[Letter::pos(0), Letter::pos(1)]);
        let lhs = evaluate(&fq_right(&a, &b).unwrap(), &imgs, &r3).unwrap();
        let rhs = r3.op_right(
            evaluate(&a, &imgs, &r3).unwrap(),
            evaluate(&b, &imgs, &r3).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_mismatch_errors() {
        let a = FreeQuandleElement::generator(2, 0).unwrap();
        let b = FreeQuandleElement::generator(3, 0).unwrap();
        assert!(fq_right(&a, &b).is_err());
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert!(evaluate(&a, &[0usize], &r3).is_err());
    }
}
