//! The two cellular chain complexes of a trisected 4-manifold, their
//! homology, the closed-form groups, and the intersection pairing on `H₂`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{
    lattice_intersect, lattice_sum, relative_coordinates, snf, solve_integer, AbelianGroup,
    IntMatrix, Lattice,
};
use crate::surface::{l_lattice, l_partial_lattice, validate, Diagram, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomologySource {
    /// Complex built on `X₁` plus the γ 2-handles.
    Y,
    /// Complex built on `Σ × D²` plus all three families of 2-handles.
    Z,
    ClosedForm,
    Other,
}

impl HomologySource {
    pub fn name(self) -> &'static str {
        match self {
            HomologySource::Y => "y",
            HomologySource::Z => "z",
            HomologySource::ClosedForm => "closed",
            HomologySource::Other => "other",
        }
    }
}

/// A chain complex `0 → C₃ → C₂ → C₁ → C₀ → 0` of free abelian groups.
///
/// `boundaries[i]` is the matrix of `∂_{i+1} : C_{i+1} → C_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: [usize; 4],
    boundaries: [IntMatrix; 3],
    basis_meta: [String; 4],
    source: HomologySource,
}

impl ChainComplex {
    pub fn new(
        ranks: [usize; 4],
        boundaries: [IntMatrix; 3],
        basis_meta: [String; 4],
        source: HomologySource,
    ) -> Result<Self> {
        for (i, m) in boundaries.iter().enumerate() {
            if m.shape() != (ranks[i], ranks[i + 1]) {
                return Err(Error::DimensionMismatch {
                    context: format!("boundary d{}", i + 1),
                    expected: format!("{}x{}", ranks[i], ranks[i + 1]),
                    found: format!("{}x{}", m.rows(), m.cols()),
                });
            }
        }
        for i in 0..2 {
            let comp = &boundaries[i] * &boundaries[i + 1];
            if !comp.is_zero() {
                return Err(Error::Internal(format!(
                    "d{} after d{} is not zero: {comp}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(Self {
            ranks,
            boundaries,
            basis_meta,
            source,
        })
    }

    pub fn ranks(&self) -> [usize; 4] {
        self.ranks
    }

    /// `∂_i` for `i ∈ {1, 2, 3}`.
    pub fn boundary(&self, i: usize) -> &IntMatrix {
        assert!((1..=3).contains(&i), "boundary index {i} out of range");
        &self.boundaries[i - 1]
    }

    pub fn basis_meta(&self) -> &[String; 4] {
        &self.basis_meta
    }

    pub fn source(&self) -> HomologySource {
        self.source
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// `H₀ … H₃` of a trisected manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: [AbelianGroup; 4],
    pub source: HomologySource,
}

impl HomologyResult {
    pub fn h(&self, i: usize) -> &AbelianGroup {
        &self.groups[i]
    }

    /// Equal free ranks and invariant factors in every degree.
    pub fn isomorphic(&self, other: &HomologyResult) -> bool {
        self.groups == other.groups
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(i, g)| format!("H{i} = {g}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `H_i = ker ∂_i / im ∂_{i+1}`, read off from Smith forms.
pub fn homology_of(c: &ChainComplex) -> HomologyResult {
    let smiths: Vec<_> = c.boundaries.iter().map(snf).collect();
    let rank = |i: usize| {
        if (1..=3).contains(&i) {
            smiths[i - 1].rank()
        } else {
            0
        }
    };
    let groups = std::array::from_fn(|i| {
        let free = c.ranks[i] - rank(i) - rank(i + 1);
        let torsion: Vec<BigInt> = if i < 3 {
            smiths[i]
                .elementary_divisors()
                .into_iter()
                .filter(|d| *d > BigInt::from(1))
                .collect()
        } else {
            Vec::new()
        };
        AbelianGroup::new(free, torsion)
    });
    HomologyResult {
        groups,
        source: c.source,
    }
}

fn validated(d: &Diagram) -> Result<()> {
    validate(d).into_result().map(|_| ())
}

fn meet(a: &Lattice, b: &Lattice) -> Lattice {
    lattice_intersect(a, b).expect("families share the ambient rank")
}

/// Coordinates of `v` in the curve basis of a family.
fn curve_coordinates(d: &Diagram, f: Family, v: &[BigInt]) -> Result<Vec<BigInt>> {
    solve_integer(d.family(f), v).ok_or_else(|| {
        Error::Internal(format!(
            "class {v:?} is not an integer combination of the {f} curves"
        ))
    })
}

fn place(target: &mut IntMatrix, row0: usize, col: usize, v: &[BigInt], sign: i64) {
    for (i, x) in v.iter().enumerate() {
        target[(row0 + i, col)] = x * sign;
    }
}

/// The complex built from `X₁`: `C₃ = (L_α∩L_γ) ⊕ (L_β∩L_γ)`, `C₂ = L_γ`,
/// `C₁ = Hom(L^∂_α ∩ L^∂_β, ℤ)`, `C₀ = ℤ`.
pub fn build_cy(d: &Diagram) -> Result<ChainComplex> {
    validated(d)?;
    let n = d.signature().n();
    let m = d.signature().curves();
    let [la, lb, lg] = Family::ALL.map(|f| l_lattice(d, f));
    let ag = meet(&la, &lg);
    let bg = meet(&lb, &lg);
    let dual = meet(
        &l_partial_lattice(d, Family::Alpha),
        &l_partial_lattice(d, Family::Beta),
    );

    let c3 = ag.rank() + bg.rank();
    let mut d3 = IntMatrix::zeros(m, c3);
    for (j, v) in ag
        .generators()
        .iter()
        .chain(bg.generators().iter())
        .enumerate()
    {
        place(&mut d3, 0, j, &curve_coordinates(d, Family::Gamma, v)?, 1);
    }

    // ρ(x)(dᵢ) = ⟨dᵢ, x⟩ = dᵢᵀ·x for arc classes dᵢ.
    let d2 = &dual.basis().transpose() * d.family(Family::Gamma);
    let d1 = IntMatrix::zeros(1, dual.rank());
    debug_assert_eq!(dual.basis().rows(), n);

    ChainComplex::new(
        [1, dual.rank(), m, c3],
        [d1, d2, d3],
        [
            "Z".into(),
            "dual basis of the canonical basis of L^d_alpha ∩ L^d_beta".into(),
            "gamma curves".into(),
            "canonical bases of L_alpha∩L_gamma, then L_beta∩L_gamma".into(),
        ],
        HomologySource::Y,
    )
}

/// The complex built from `Σ × D²`: `C₃ = (L_α∩L_β) ⊕ (L_β∩L_γ) ⊕ (L_γ∩L_α)`,
/// `C₂ = L_α ⊕ L_β ⊕ L_γ`, `C₁ = H₁(Σ)`, `C₀ = ℤ`.
pub fn build_cz(d: &Diagram) -> Result<ChainComplex> {
    validated(d)?;
    let n = d.signature().n();
    let m = d.signature().curves();
    let lattices = Family::ALL.map(|f| l_lattice(d, f));
    // pair i is (family i, family i+1): αβ, βγ, γα
    let pairs: Vec<Lattice> = (0..3)
        .map(|i| meet(&lattices[i], &lattices[(i + 1) % 3]))
        .collect();

    let c3: usize = pairs.iter().map(Lattice::rank).sum();
    let mut d3 = IntMatrix::zeros(3 * m, c3);
    let mut col = 0;
    // ζ(x, y, z) = (x − z, y − x, z − y): a generator of L_μ ∩ L_ν with
    // (μ, ν) = (family i, family i+1) enters block i with + and block i+1 with −.
    for (i, pair) in pairs.iter().enumerate() {
        let (f, g) = (Family::ALL[i], Family::ALL[(i + 1) % 3]);
        for v in pair.generators() {
            place(&mut d3, i * m, col, &curve_coordinates(d, f, &v)?, 1);
            place(
                &mut d3,
                ((i + 1) % 3) * m,
                col,
                &curve_coordinates(d, g, &v)?,
                -1,
            );
            col += 1;
        }
    }

    let d2 = d
        .family(Family::Alpha)
        .hstack(d.family(Family::Beta))
        .hstack(d.family(Family::Gamma));
    let d1 = IntMatrix::zeros(1, n);

    ChainComplex::new(
        [1, n, 3 * m, c3],
        [d1, d2, d3],
        [
            "Z".into(),
            "e-basis of H1(Sigma)".into(),
            "alpha curves, beta curves, gamma curves".into(),
            "canonical bases of L_alpha∩L_beta, L_beta∩L_gamma, L_gamma∩L_alpha".into(),
        ],
        HomologySource::Z,
    )
}

/// Numerator `L_γ ∩ (L_α + L_β)` and denominator `(L_γ∩L_α) + (L_γ∩L_β)` of
/// the lattice quotient computing `H₂`.
pub fn h2_lattices(d: &Diagram) -> (Lattice, Lattice) {
    let [la, lb, lg] = Family::ALL.map(|f| l_lattice(d, f));
    let sum = lattice_sum(&la, &lb).expect("same ambient");
    let num = meet(&lg, &sum);
    let den = lattice_sum(&meet(&lg, &la), &meet(&lg, &lb)).expect("same ambient");
    (num, den)
}

/// `H₁ = H₁(Σ)/(L_α+L_β+L_γ)`, `H₂` as the lattice quotient, and
/// `H₃ = L_α ∩ L_β ∩ L_γ`.
pub fn h_closed_forms(d: &Diagram) -> Result<HomologyResult> {
    validated(d)?;
    let n = d.signature().n();
    let [la, lb, lg] = Family::ALL.map(|f| l_lattice(d, f));
    let total = lattice_sum(&lattice_sum(&la, &lb)?, &lg)?;
    let h1 = crate::exactalg::quotient_presentation(&Lattice::full(n), &total)?;
    let (num, den) = h2_lattices(d);
    let h2 = crate::exactalg::quotient_presentation(&num, &den)?;
    let h3 = AbelianGroup::free(meet(&meet(&la, &lb), &lg).rank());
    Ok(HomologyResult {
        groups: [AbelianGroup::free(1), h1, h2, h3],
        source: HomologySource::ClosedForm,
    })
}

/// A splitting `x = x′ + x″` with `x′ ∈ L_α`, `x″ ∈ L_β`, also returning the
/// curve-basis coordinates of both parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub alpha_part: Vec<BigInt>,
    pub beta_part: Vec<BigInt>,
    pub alpha_coords: Vec<BigInt>,
    pub beta_coords: Vec<BigInt>,
}

fn check_h2_class(d: &Diagram, x: &[BigInt]) -> Result<()> {
    let n = d.signature().n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            context: "H2 class".into(),
            expected: n.to_string(),
            found: x.len().to_string(),
        });
    }
    if !l_lattice(d, Family::Gamma).contains(x) {
        return Err(Error::NotInSum(format!("{x:?} (not in L_gamma)")));
    }
    Ok(())
}

pub fn decompose(d: &Diagram, x: &[BigInt]) -> Result<Decomposition> {
    check_h2_class(d, x)?;
    let a = d.family(Family::Alpha);
    let b = d.family(Family::Beta);
    let u = solve_integer(&a.hstack(b), x).ok_or_else(|| Error::NotInSum(format!("{x:?}")))?;
    let (ua, ub) = u.split_at(a.cols());
    Ok(Decomposition {
        alpha_part: a.mul_vec(ua),
        beta_part: b.mul_vec(ub),
        alpha_coords: ua.to_vec(),
        beta_coords: ub.to_vec(),
    })
}

/// `Φ(x, y) = −⟨x′, y⟩_Σ` for `x, y ∈ L_γ ∩ (L_α + L_β)` given in
/// `e`-coordinates, where `x = x′ + x″` with `x′ ∈ L_α`, `x″ ∈ L_β`.
pub fn phi(d: &Diagram, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    let split = decompose(d, x)?;
    decompose(d, y)?;
    Ok(-d.pairing(&split.alpha_part, y))
}

/// Intersection form on the free part of `H₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    /// Representatives of free generators of `H₂`, as classes in `L_γ`
    /// written in the `e`-basis of `H₁(Σ)`.
    pub generators: Vec<Vec<BigInt>>,
    /// Their coordinates in the γ-curve basis.
    pub gamma_coords: Vec<Vec<BigInt>>,
    pub matrix: IntMatrix,
    /// Invariant factors of the torsion subgroup of `H₂`, on which the
    /// pairing vanishes.
    pub torsion: Vec<BigInt>,
}

pub fn intersection_form(d: &Diagram) -> Result<IntersectionForm> {
    validated(d)?;
    let (num, den) = h2_lattices(d);
    let coords = relative_coordinates(&num, &den)?;
    let s = snf(&coords);
    // In the basis N·U⁻¹ the denominator is spanned by dᵢ times the i-th
    // vector, so the vectors past the rank generate the free part.
    let adapted = num.basis() * &s.u_inv;
    let generators: Vec<Vec<BigInt>> = (s.rank()..num.rank()).map(|j| adapted.column(j)).collect();
    let torsion = s
        .elementary_divisors()
        .into_iter()
        .filter(|x| *x > BigInt::from(1))
        .collect();

    let k = generators.len();
    let mut matrix = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            matrix[(i, j)] = phi(d, &generators[i], &generators[j])?;
        }
    }
    if !matrix.is_symmetric() {
        return Err(Error::Internal(format!(
            "intersection form {matrix} is not symmetric"
        )));
    }
    let gamma_coords = generators
        .iter()
        .map(|g| curve_coordinates(d, Family::Gamma, g))
        .collect::<Result<_>>()?;
    Ok(IntersectionForm {
        generators,
        gamma_coords,
        matrix,
        torsion,
    })
}

/// Coordinates in `C^Z₂ = L_α ⊕ L_β ⊕ L_γ` (curve bases, α block first) of
/// the 2-cycle `(x′, x″, −x)` representing the `H₂` class of `x`.
pub fn cz_cycle(d: &Diagram, x: &[BigInt]) -> Result<Vec<BigInt>> {
    let split = decompose(d, x)?;
    let mut v = split.alpha_coords;
    v.extend(split.beta_coords);
    v.extend(
        curve_coordinates(d, Family::Gamma, x)?
            .into_iter()
            .map(|c| -c),
    );
    Ok(v)
}
