use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::group::AbelianGroup;
use super::matrix::IntMatrix;
use super::smith::snf;
use crate::error::{Error, Result};

/// A finitely generated subgroup of ℤⁿ.
///
/// The basis is kept in column Hermite normal form: column `j` has its first
/// nonzero coordinate (the pivot) at row `p_j` with `p_0 < p_1 < …`, every
/// pivot is positive, and every other basis column has an entry in
/// `[0, pivot)` in that row. Two lattices are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: IntMatrix,
}

impl Lattice {
    /// The lattice spanned by the columns of `generators`; the ambient rank is
    /// the number of rows.
    pub fn span(generators: &IntMatrix) -> Self {
        let ambient = generators.rows();
        let rows = hermite_rows(generators.to_columns());
        Self {
            basis: IntMatrix::from_columns(ambient, &rows),
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<BigInt>]) -> Self {
        Self::span(&IntMatrix::from_columns(ambient, vectors))
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            basis: IntMatrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            basis: IntMatrix::identity(ambient),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Canonical basis, one generator per column.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        self.basis.to_columns()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_rank() {
            return None;
        }
        solve_integer(&self.basis, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.ambient_rank() == other.ambient_rank()
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// True when ℤⁿ / L is torsion-free.
    pub fn is_saturated(&self) -> bool {
        snf(&self.basis)
            .elementary_divisors()
            .iter()
            .all(One::is_one)
    }

    /// The smallest saturated lattice containing `self`, i.e. `(L ⊗ ℚ) ∩ ℤⁿ`.
    pub fn saturation(&self) -> Lattice {
        let n = self.ambient_rank();
        let id = IntMatrix::identity(n);
        orthogonal_complement(&orthogonal_complement(self, &id).expect("square"), &id)
            .expect("square")
    }
}

/// Row-style Hermite reduction of a list of vectors; returns the nonzero rows.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pr = 0;
    for col in 0..width {
        if pr == rows.len() {
            break;
        }
        loop {
            let pick = (pr..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(k) = pick else { break };
            rows.swap(pr, k);
            let mut clean = true;
            for i in pr + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[pr][col]);
                sub_multiple(&mut rows, i, pr, &q);
                clean &= rows[i][col].is_zero();
            }
            if clean {
                break;
            }
        }
        if rows[pr][col].is_zero() {
            continue;
        }
        if rows[pr][col].is_negative() {
            for x in rows[pr].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..pr {
            let q = rows[i][col].div_floor(&rows[pr][col]);
            if !q.is_zero() {
                sub_multiple(&mut rows, i, pr, &q);
            }
        }
        pr += 1;
    }
    rows.truncate(pr);
    rows
}

/// `rows[dst] -= q * rows[src]`
fn sub_multiple(rows: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (d, s) = if dst < src {
        let (a, b) = rows.split_at_mut(src);
        (&mut a[dst], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(dst);
        (&mut b[0], &a[src])
    };
    for (x, y) in d.iter_mut().zip(s) {
        *x -= q * y;
    }
}

/// All integer vectors `x` with `M·x = 0`, as a saturated lattice.
pub fn kernel_basis(m: &IntMatrix) -> Lattice {
    let s = snf(m);
    let k = s.v.select_columns(s.rank()..m.cols());
    Lattice::span(&k)
}

/// Some integer solution of `M·x = b`, or `None` if there is none over ℤ.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(
        b.len(),
        m.rows(),
        "right-hand side length must equal row count"
    );
    let s = snf(m);
    let ub = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, c) in ub.iter().enumerate() {
        if i < s.rank() {
            let (q, r) = c.div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

fn same_ambient(a: &Lattice, b: &Lattice) -> Result<()> {
    if a.ambient_rank() != b.ambient_rank() {
        return Err(Error::AmbientMismatch {
            left: a.ambient_rank(),
            right: b.ambient_rank(),
        });
    }
    Ok(())
}

/// `A ∩ B`.
pub fn lattice_intersect(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    same_ambient(a, b)?;
    // (u, w) with A·u = B·w; the map (u, w) ↦ A·u is injective on this kernel.
    let stacked = a.basis().hstack(&b.basis().neg());
    let kernel = kernel_basis(&stacked);
    let u_part = kernel.basis().select_rows(0..a.rank());
    Ok(Lattice::span(&(a.basis() * &u_part)))
}

/// `A + B`.
pub fn lattice_sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    same_ambient(a, b)?;
    Ok(Lattice::span(&a.basis().hstack(b.basis())))
}

/// Coordinates of the denominator's generators in the numerator's basis.
pub(crate) fn relative_coordinates(
    numerator: &Lattice,
    denominator: &Lattice,
) -> Result<IntMatrix> {
    same_ambient(numerator, denominator)?;
    let mut cols = Vec::with_capacity(denominator.rank());
    for (j, g) in denominator.generators().iter().enumerate() {
        let c = numerator
            .coordinates(g)
            .ok_or(Error::NotContained { generator: j })?;
        cols.push(c);
    }
    Ok(IntMatrix::from_columns(numerator.rank(), &cols))
}

/// The abelian group `numerator / denominator`.
pub fn quotient_presentation(numerator: &Lattice, denominator: &Lattice) -> Result<AbelianGroup> {
    let coords = relative_coordinates(numerator, denominator)?;
    let s = snf(&coords);
    Ok(AbelianGroup::from_diagonal(
        numerator.rank(),
        &s.elementary_divisors(),
    ))
}

/// All `y` with `yᵀ·P·x = 0` for every `x ∈ L`, as a saturated lattice.
pub fn orthogonal_complement(l: &Lattice, pairing: &IntMatrix) -> Result<Lattice> {
    let n = l.ambient_rank();
    if pairing.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            context: "pairing matrix".into(),
            expected: format!("{n}x{n}"),
            found: format!("{}x{}", pairing.rows(), pairing.cols()),
        });
    }
    // yᵀ (P B) = 0  ⇔  (P B)ᵀ y = 0
    Ok(kernel_basis(&(pairing * l.basis()).transpose()))
}
