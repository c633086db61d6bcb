//! Low-degree rack and quandle homology of finite quandles over the
//! integers, computed by exact Smith normal form.
//!
//! Boundary convention, fixed once for reproducibility:
//!
//! ```text
//! ∂(x_1,…,x_n) = Σ_{i=2}^{n} (−1)^i [ (x_1,…,x̂_i,…,x_n)
//!                  − (x_1▷x_i,…,x_{i−1}▷x_i, x_{i+1},…,x_n) ],   ∂_1 = 0
//! ```
//!
//! The quandle complex restricts to tuples with no `x_i = x_{i+1}` and
//! drops degenerate targets (the degenerate tuples form a subcomplex).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::finite::FiniteQuandle;
use crate::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 4;
pub const DEFAULT_TUPLE_CAP: usize = 100_000;

/// A dense integer matrix, rows × cols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_i64(data: &[&[i64]]) -> IntMatrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        IntMatrix {
            rows,
            cols,
            data: data
                .iter()
                .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
                .collect(),
        }
    }

    pub fn matmul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let p = &self.data[i][k] * &o.data[k][j];
                    out.data[i][j] += p;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }
}

fn tuple_count(q: usize, n: usize, cap: usize) -> Result<usize> {
    let mut total: usize = 1;
    for _ in 0..n {
        total = total
            .checked_mul(q)
            .filter(|&t| t <= cap)
            .ok_or_else(|| {
                Error::resource(format!("{q}^{n} tuples exceed the cap {cap}"))
            })?;
    }
    Ok(total)
}

fn enumerate_tuples(q: usize, n: usize, quandle_complex: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = vec![0usize; n];
    loop {
        let degenerate = quandle_complex && t.windows(2).any(|w| w[0] == w[1]);
        if !degenerate {
            out.push(t.clone());
        }
        // odometer
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < q {
                break;
            }
            t[i] = 0;
        }
    }
}

fn boundary_matrix(
    q: &FiniteQuandle,
    n: usize,
    quandle_complex: bool,
    degree_cap: usize,
    tuple_cap: usize,
) -> Result<IntMatrix> {
    if n == 0 || n > degree_cap + 1 {
        return Err(Error::input(format!(
            "degree {n} out of range 1..={}",
            degree_cap + 1
        )));
    }
    tuple_count(q.size(), n, tuple_cap)?;
    if n == 1 {
        let cols = enumerate_tuples(q.size(), 1, quandle_complex).len();
        return Ok(IntMatrix::zero(0, cols));
    }
    let rows_basis = enumerate_tuples(q.size(), n - 1, quandle_complex);
    let cols_basis = enumerate_tuples(q.size(), n, quandle_complex);
    let row_index: BTreeMap<&[usize], usize> = rows_basis
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut m = IntMatrix::zero(rows_basis.len(), cols_basis.len());
    for (j, t) in cols_basis.iter().enumerate() {
        for i in 2..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut omit = t.clone();
            omit.remove(i - 1);
            if let Some(&r) = row_index.get(omit.as_slice()) {
                m.data[r][j] += sign;
            }
            let mut acted: Vec<usize> = (0..i - 1).map(|k| q.op_right(t[k], t[i - 1])).collect();
            acted.extend_from_slice(&t[i..]);
            if let Some(&r) = row_index.get(acted.as_slice()) {
                m.data[r][j] -= sign;
            }
        }
    }
    Ok(m)
}

/// The rack boundary `∂_n` with all tuples as basis.
pub fn rack_boundary(
    q: &FiniteQuandle,
    n: usize,
    degree_cap: usize,
    tuple_cap: usize,
) -> Result<IntMatrix> {
    boundary_matrix(q, n, false, degree_cap, tuple_cap)
}

/// The quandle boundary `∂_n` on non-degenerate tuples.
pub fn quandle_boundary(
    q: &FiniteQuandle,
    n: usize,
    degree_cap: usize,
    tuple_cap: usize,
) -> Result<IntMatrix> {
    boundary_matrix(q, n, true, degree_cap, tuple_cap)
}

/// Invariant factors and rank of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    /// Nonzero diagonal entries `d_1 | d_2 | …`, all positive.
    pub factors: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smith normal form by row/column reduction with minimal-absolute-value
/// pivoting (to control entry growth), over arbitrary-precision
/// integers.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut a = m.data.clone();
    let rows = m.rows;
    let cols = m.cols;
    let mut factors: Vec<BigInt> = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // find a nonzero pivot of minimal absolute value in the submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if a[pi][pj].magnitude() <= a[i][j].magnitude() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        // clear row and column t
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = &a[i][t] / &a[t][t];
                if !f.is_zero() {
                    for j in t..cols {
                        let s = &f * &a[t][j];
                        a[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    // remainder smaller than pivot: swap it up and restart
                    a.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = &a[t][j] / &a[t][t];
                if !f.is_zero() {
                    for i in t..rows {
                        let s = &f * &a[i][t];
                        a[i][j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // enforce divisibility: the pivot must divide the rest
        let mut disturbed = false;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if (&a[i][j] % &a[t][t]).is_zero() {
                    continue;
                }
                // fold the offending row into row t and redo this step
                for jj in t..cols {
                    let v = a[i][jj].clone();
                    a[t][jj] += v;
                }
                disturbed = true;
                break 'outer;
            }
        }
        if disturbed {
            continue;
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    Snf { factors }
}

/// A finitely generated abelian group: free rank plus invariant factors
/// `> 1` in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Render as `Z^r ⊕ Z/d₁ ⊕ …` (or `0`).
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

fn homology_from_boundaries(dn: &IntMatrix, dn1: &IntMatrix) -> HomologyGroup {
    let snf_n = smith_normal_form(dn);
    let snf_n1 = smith_normal_form(dn1);
    let chain_dim = dn.cols;
    let free_rank = chain_dim - snf_n.rank() - snf_n1.rank();
    let torsion = snf_n1
        .factors
        .iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    HomologyGroup { free_rank, torsion }
}

/// `H_n` of the quandle complex, over `Z`.
pub fn quandle_homology(
    q: &FiniteQuandle,
    n: usize,
    degree_cap: usize,
    tuple_cap: usize,
) -> Result<HomologyGroup> {
    let dn = quandle_boundary(q, n, degree_cap, tuple_cap)?;
    let dn1 = quandle_boundary(q, n + 1, degree_cap, tuple_cap)?;
    debug_assert!(n == 1 || dn.matmul(&dn1).is_zero());
    Ok(homology_from_boundaries(&dn, &dn1))
}

/// `H_n` of the rack complex, over `Z`.
pub fn rack_homology(
    q: &FiniteQuandle,
    n: usize,
    degree_cap: usize,
    tuple_cap: usize,
) -> Result<HomologyGroup> {
    let dn = rack_boundary(q, n, degree_cap, tuple_cap)?;
    let dn1 = rack_boundary(q, n + 1, degree_cap, tuple_cap)?;
    debug_assert!(n == 1 || dn.matmul(&dn1).is_zero());
    Ok(homology_from_boundaries(&dn, &dn1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::genus2_seventeen;

    const CAP: usize = 4;
    const TCAP: usize = 100_000;

    #[test]
    fn snf_basics() {
        let id = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            smith_normal_form(&id).factors,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
        let diag = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            smith_normal_form(&diag).factors,
            vec![BigInt::from(1), BigInt::from(6)]
        );
        let zero = IntMatrix::zero(3, 2);
        assert_eq!(smith_normal_form(&zero).factors, Vec::<BigInt>::new());
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMatrix::from_i64(&[&[4, 6, 2], &[6, 12, 8], &[2, 8, 14]]);
        let snf = smith_normal_form(&m);
        for w in snf.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn boundary_shapes() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let d1 = quandle_boundary(&r3, 1, CAP, TCAP).unwrap();
        assert_eq!((d1.rows, d1.cols), (0, 3));
        let d2 = quandle_boundary(&r3, 2, CAP, TCAP).unwrap();
        assert_eq!((d2.rows, d2.cols), (3, 6));
        // one-element quandle: all higher tuples degenerate
        let one = FiniteQuandle::trivial(1).unwrap();
        let d2 = quandle_boundary(&one, 2, CAP, TCAP).unwrap();
        assert_eq!(d2.cols, 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for q in [
            FiniteQuandle::dihedral(3).unwrap(),
            FiniteQuandle::dihedral(5).unwrap(),
        ] {
            for n in 2..=3 {
                let dn = quandle_boundary(&q, n, CAP, TCAP).unwrap();
                let dn1 = quandle_boundary(&q, n + 1, CAP, TCAP).unwrap();
                assert!(dn.matmul(&dn1).is_zero());
                let rn = rack_boundary(&q, n, CAP, TCAP).unwrap();
                let rn1 = rack_boundary(&q, n + 1, CAP, TCAP).unwrap();
                assert!(rn.matmul(&rn1).is_zero());
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero_seventeen() {
        let (q, _) = genus2_seventeen();
        let d2 = quandle_boundary(&q, 2, CAP, TCAP).unwrap();
        let d3 = quandle_boundary(&q, 3, CAP, TCAP).unwrap();
        assert!(d2.matmul(&d3).is_zero());
    }

    #[test]
    fn homology_of_r3() {
        // frozen from an independent Smith-normal-form oracle
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let h1 = quandle_homology(&r3, 1, CAP, TCAP).unwrap();
        assert_eq!((h1.free_rank, h1.torsion.len()), (1, 0));
        let h2 = quandle_homology(&r3, 2, CAP, TCAP).unwrap();
        assert!(h2.is_trivial());
        let h3 = quandle_homology(&r3, 3, CAP, TCAP).unwrap();
        assert_eq!(h3.free_rank, 0);
        assert_eq!(h3.torsion, vec![BigInt::from(3)]);
    }

    #[test]
    fn homology_of_point() {
        let one = FiniteQuandle::trivial(1).unwrap();
        for n in 2..=4 {
            assert!(quandle_homology(&one, n, 5, TCAP).unwrap().is_trivial());
        }
    }

    #[test]
    fn h1_rank_counts_orbits() {
        for n in 2..=9 {
            let q = FiniteQuandle::dihedral(n).unwrap();
            let h1 = quandle_homology(&q, 1, CAP, TCAP).unwrap();
            assert_eq!(h1.free_rank, q.orbits().len());
            assert!(h1.torsion.is_empty());
        }
    }

    #[test]
    fn caps_are_resource_errors() {
        let (q, _) = genus2_seventeen();
        assert!(matches!(
            quandle_boundary(&q, 4, 4, 10_000),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            quandle_boundary(&q, 6, 4, 100_000),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn display_forms() {
        let g = HomologyGroup {
            free_rank: 2,
            torsion: vec![BigInt::from(3), BigInt::from(6)],
        };
        assert_eq!(g.display(), "Z^2 ⊕ Z/3 ⊕ Z/6");
        let z = HomologyGroup {
            free_rank: 0,
            torsion: vec![],
        };
        assert_eq!(z.display(), "0");
    }
}
