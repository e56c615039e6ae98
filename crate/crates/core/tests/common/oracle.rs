//! Brute-force lattice membership that shares no code with the normal-form
//! routines.
//!
//! For generators `G` of rank `r` with gcd of `r × r` minors `d`, a vector `v`
//! lies in the ℤ-span of `G` iff every `(r+1)`-minor of `[G | v]` vanishes and
//! every `r`-minor of `[G | v]` using `v` is divisible by `d`. Both families of
//! minors are linear in `v`, so they are precomputed as integer forms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use trisect_core::{IntMatrix, Lattice};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor(cols: &[&[i64]], rows: &[usize]) -> BigInt {
    let k = rows.len();
    IntMatrix::from_fn(k, k, |i, j| BigInt::from(cols[j][rows[i]])).det()
}

/// Linear forms `v ↦ det([G_C | v] restricted to rows R)` over all row sets
/// of size `|C| + 1`.
fn forms(n: usize, gens: &[Vec<i64>], size: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let units: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for cs in subsets(gens.len(), size) {
        for rs in subsets(n, size + 1) {
            let form: Vec<i64> = units
                .iter()
                .map(|e| {
                    let mut cols: Vec<&[i64]> = cs.iter().map(|&c| gens[c].as_slice()).collect();
                    cols.push(e);
                    minor(&cols, &rs).to_i64().expect("small minor")
                })
                .collect();
            if form.iter().any(|&x| x != 0) {
                out.push(form);
            }
        }
    }
    out
}

pub struct SpanOracle {
    rank_forms: Vec<Vec<i64>>,
    index_forms: Vec<Vec<i64>>,
    divisor: i64,
}

impl SpanOracle {
    pub fn new(n: usize, gens: &[Vec<i64>]) -> Self {
        let mut rank = 0;
        let mut divisor = BigInt::from(1);
        for k in (1..=gens.len().min(n)).rev() {
            let cols: Vec<&[i64]> = gens.iter().map(Vec::as_slice).collect();
            let mut g = BigInt::zero();
            for cs in subsets(gens.len(), k) {
                let sel: Vec<&[i64]> = cs.iter().map(|&c| cols[c]).collect();
                for rs in subsets(n, k) {
                    g = g.gcd(&minor(&sel, &rs));
                }
            }
            if !g.is_zero() {
                rank = k;
                divisor = g;
                break;
            }
        }
        Self {
            rank_forms: forms(n, gens, rank),
            index_forms: if rank == 0 {
                vec![]
            } else {
                forms(n, gens, rank - 1)
            },
            divisor: divisor.to_i64().expect("small divisor"),
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let eval = |f: &Vec<i64>| f.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
        self.rank_forms.iter().all(|f| eval(f) == 0)
            && self.index_forms.iter().all(|f| eval(f) % self.divisor == 0)
    }
}

pub fn box_points(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Points of the box `|vᵢ| ≤ r` accepted by the oracle.
pub fn oracle_points(oracle: &SpanOracle, n: usize, r: i64) -> BTreeSet<Vec<i64>> {
    box_points(n, r)
        .into_iter()
        .filter(|v| oracle.contains(v))
        .collect()
}

/// Points of the box `|vᵢ| ≤ r` in a lattice, enumerated from its echelon
/// basis: each coefficient is bounded by the box at its pivot row.
pub fn lattice_points(l: &Lattice, r: i64) -> BTreeSet<Vec<i64>> {
    let n = l.ambient_rank();
    let basis: Vec<Vec<i64>> = l
        .generators()
        .iter()
        .map(|c| c.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|c| {
            c.iter()
                .position(|&x| x != 0)
                .expect("nonzero basis vector")
        })
        .collect();
    assert!(
        pivots.windows(2).all(|w| w[0] < w[1]),
        "basis not in echelon form"
    );
    for (j, c) in basis.iter().enumerate() {
        for later in &basis[j + 1..] {
            assert_eq!(later[pivots[j]], 0, "basis not in echelon form");
        }
        assert!(c[pivots[j]] > 0);
    }
    let mut out = BTreeSet::new();
    let mut stack = vec![(0usize, vec![0i64; n])];
    while let Some((j, v)) = stack.pop() {
        if j == basis.len() {
            if v.iter().all(|x| x.abs() <= r) {
                out.insert(v);
            }
            continue;
        }
        let (p, piv) = (pivots[j], basis[j][pivots[j]]);
        let lo = Integer::div_ceil(&(-r - v[p]), &piv);
        let hi = Integer::div_floor(&(r - v[p]), &piv);
        for c in lo..=hi {
            let w: Vec<i64> = v.iter().zip(&basis[j]).map(|(a, b)| a + c * b).collect();
            stack.push((j + 1, w));
        }
    }
    out
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
