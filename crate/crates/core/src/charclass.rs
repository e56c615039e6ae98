//! Linking matrices of the two handle decompositions, mod-2 cocycles
//! representing `w₂`, and the resulting spin criteria.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{apply_mod2, mod2, solve_mod2, IntMatrix};
use crate::surface::{
    infer_k, q_matrix, r_matrix, s_matrix, validate, Class, Diagram, Family, SurfaceSignature,
};

/// Intersection matrices of a diagram whose `(α, β)` pair is in standard
/// position, together with the arcs `a` completing `α` (and `β`) to a basis
/// of `L^∂_α` (and `L^∂_β`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramMatrices {
    sig: SurfaceSignature,
    k1: usize,
    /// `⟨γᵢ, βⱼ⟩`, `(g−p) × (g−p)`.
    pub q_gamma_beta: IntMatrix,
    /// `⟨αᵢ, γⱼ⟩`, `(g−p) × (g−p)`.
    pub q_alpha_gamma: IntMatrix,
    /// `⟨aᵢ, γⱼ⟩`, `l × (g−p)`.
    pub q_a_gamma: IntMatrix,
    /// `⟨βᵢ, αⱼ⟩`; carried along for reporting, unused by the formulas.
    pub q_beta_alpha: Option<IntMatrix>,
}

fn expect_shape(name: &str, m: &IntMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::DimensionMismatch {
            context: name.into(),
            expected: format!("{rows}x{cols}"),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    Ok(())
}

impl DiagramMatrices {
    pub fn new(
        sig: SurfaceSignature,
        k1: usize,
        q_gamma_beta: IntMatrix,
        q_alpha_gamma: IntMatrix,
        q_a_gamma: IntMatrix,
        q_beta_alpha: Option<IntMatrix>,
    ) -> Result<Self> {
        let (m, l) = (sig.curves(), sig.l());
        expect_shape("Q_gamma_beta", &q_gamma_beta, m, m)?;
        expect_shape("Q_alpha_gamma", &q_alpha_gamma, m, m)?;
        expect_shape("Q_a_gamma", &q_a_gamma, l, m)?;
        if let Some(q) = &q_beta_alpha {
            expect_shape("Q_beta_alpha", q, m, m)?;
        }
        if k1 < l || k1 > sig.k_max() {
            return Err(Error::InvalidSignature(format!(
                "k1 = {k1} outside [{l}, {}]",
                sig.k_max()
            )));
        }
        if k1 - l > m {
            return Err(Error::InvalidSignature(format!(
                "k1 - l = {} exceeds the number of alpha curves {m}",
                k1 - l
            )));
        }
        Ok(Self {
            sig,
            k1,
            q_gamma_beta,
            q_alpha_gamma,
            q_a_gamma,
            q_beta_alpha,
        })
    }

    /// Reads the matrices off a class-mode diagram. Refuses unless the
    /// diagram asserts that `(α, β)` is in standard position and carries the
    /// `l` standard arcs; the parallel pairs `αᵢ = βᵢ` must come first.
    pub fn from_standard_diagram(d: &Diagram) -> Result<Self> {
        if !d.standard_position() {
            return Err(Error::StandardPositionNotAsserted);
        }
        let arcs = d
            .standard_arcs()
            .ok_or_else(|| Error::Missing("standard_arcs".into()))?;
        validate(d).into_result()?;
        let sig = *d.signature();
        let arcs: Vec<Class> = arcs.to_rows().into_iter().map(Class::Arc).collect();
        let [alpha, beta, gamma] = Family::ALL.map(|f| d.curve_classes(f));
        Self::new(
            sig,
            infer_k(d)[0],
            q_matrix(&sig, &gamma, &beta)?,
            q_matrix(&sig, &alpha, &gamma)?,
            q_matrix(&sig, &arcs, &gamma)?,
            Some(q_matrix(&sig, &beta, &alpha)?),
        )
    }

    pub fn signature(&self) -> &SurfaceSignature {
        &self.sig
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    /// `⟨γᵢ, aⱼ⟩ = −⟨aⱼ, γᵢ⟩`.
    pub fn q_gamma_a(&self) -> IntMatrix {
        self.q_a_gamma.transpose().neg()
    }
}

/// Linking matrix of the γ 2-handles over `X₁`:
/// `[Q_γβ | Q_γa] · R · [Q_αγ ; Q_aγ]`.
pub fn linking_matrix_y(m: &DiagramMatrices) -> IntMatrix {
    let left = m.q_gamma_beta.hstack(&m.q_gamma_a());
    let right = m.q_alpha_gamma.vstack(&m.q_a_gamma);
    &(&left * &r_matrix(&m.sig)) * &right
}

/// Rows are the curve classes of α, β, γ in that order.
fn stacked_curves(d: &Diagram) -> IntMatrix {
    d.family(Family::Alpha)
        .hstack(d.family(Family::Beta))
        .hstack(d.family(Family::Gamma))
        .transpose()
}

/// Linking matrix of all 2-handles over `Σ × D²`: `Q_νa · S · Q_aν`, with
/// `Q_νa = −N·Aᵀ` for curve rows `N` and arc rows `A`, and `Q_aν = −Q_νaᵀ`.
pub fn linking_matrix_z(d: &Diagram) -> Result<IntMatrix> {
    validate(d).into_result()?;
    let q_nu_a = (&stacked_curves(d) * &d.arcs().transpose()).neg();
    let q_a_nu = q_nu_a.transpose().neg();
    Ok(&(&q_nu_a * &s_matrix(d.signature())) * &q_a_nu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum W2Basis {
    /// Cochains on the γ 2-handles.
    Gamma,
    /// Cochains on the α, β, γ 2-handles, in that order.
    AlphaBetaGamma,
}

impl W2Basis {
    pub fn name(self) -> &'static str {
        match self {
            W2Basis::Gamma => "gamma",
            W2Basis::AlphaBetaGamma => "alpha,beta,gamma",
        }
    }
}

/// A 2-cochain over 𝔽₂ representing `w₂`: the diagonal of a linking matrix
/// mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W2Representative {
    pub basis: W2Basis,
    pub coefficients: Vec<u8>,
    pub linking: IntMatrix,
}

impl W2Representative {
    fn from_linking(basis: W2Basis, linking: IntMatrix) -> Self {
        let coefficients = linking.diagonal().iter().map(mod2).collect();
        Self {
            basis,
            coefficients,
            linking,
        }
    }

    /// Value on a 2-chain given by integer coordinates in the same basis.
    pub fn evaluate(&self, chain: &[BigInt]) -> u8 {
        assert_eq!(
            chain.len(),
            self.coefficients.len(),
            "chain length mismatch"
        );
        chain
            .iter()
            .zip(&self.coefficients)
            .fold(0, |acc, (x, &c)| acc ^ (mod2(x) & c))
    }
}

pub fn w2_y(m: &DiagramMatrices) -> W2Representative {
    W2Representative::from_linking(W2Basis::Gamma, linking_matrix_y(m))
}

pub fn w2_z(d: &Diagram) -> Result<W2Representative> {
    Ok(W2Representative::from_linking(
        W2Basis::AlphaBetaGamma,
        linking_matrix_z(d)?,
    ))
}

/// Whether the `w₂` cocycle is a coboundary, with a witnessing 1-cochain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinVerdict {
    pub spin: bool,
    /// Coordinates of `d` over 𝔽₂ in the basis named by `witness_basis`.
    pub witness: Option<Vec<u8>>,
    pub witness_basis: String,
}

impl fmt::Display for SpinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) if self.spin => write!(f, "spin (witness {w:?} in {})", self.witness_basis),
            _ => write!(f, "not spin"),
        }
    }
}

fn verdict(system: &IntMatrix, rhs: &[u8], basis: String) -> SpinVerdict {
    let witness = solve_mod2(system, rhs);
    debug_assert!(witness
        .as_ref()
        .is_none_or(|w| apply_mod2(system, w) == rhs));
    SpinVerdict {
        spin: witness.is_some(),
        witness,
        witness_basis: basis,
    }
}

/// Spin criterion on the γ-basis cocycle: solvable iff some `d` in
/// `L^∂_α ∩ L^∂_β` has `⟨d, γᵢ⟩ ≡ cᵢ`. That lattice has basis
/// `{α₁ … α_{k₁−l}, a₁ … a_l}`; the pairings with γ are the corresponding
/// rows of `Q_αγ` and `Q_aγ`.
pub fn spin_y(m: &DiagramMatrices) -> SpinVerdict {
    let c = w2_y(m).coefficients;
    let parallel = m.k1 - m.sig.l();
    let pairings = m
        .q_alpha_gamma
        .select_rows(0..parallel)
        .vstack(&m.q_a_gamma);
    verdict(
        &pairings.transpose(),
        &c,
        format!("alpha_1..alpha_{parallel}, a_1..a_{}", m.sig.l()),
    )
}

/// Spin criterion on the α,β,γ cocycle: solvable iff some arc class `d` has
/// `⟨d, νᵢ⟩ ≡ c′ᵢ` for every curve.
pub fn spin_z(d: &Diagram) -> Result<SpinVerdict> {
    let c = w2_z(d)?.coefficients;
    let system = &stacked_curves(d) * &d.arcs().transpose();
    let basis = if d.custom_arcs().is_some() {
        "supplied arc basis"
    } else {
        "f-basis of H1(Sigma, dSigma)"
    };
    Ok(verdict(&system, &c, basis.into()))
}
