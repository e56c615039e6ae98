//! Reference diagrams: small hand-checkable fixtures and a deterministic
//! corpus of valid class-mode diagrams assembled from genus-one pieces,
//! boundary shifts, handle slides and symplectic transvections.

use num_bigint::BigInt;

use crate::charclass::DiagramMatrices;
use crate::exactalg::{dot, IntMatrix};
use crate::surface::{j_matrix, Diagram, Family, SurfaceSignature};

/// Curve triple `(α, β, γ)` on one handle with classes `x = e_{2i−1}`,
/// `y = e_{2i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    /// `(x, y, x + y)`
    Plus,
    /// `(x, y, x − y)`
    Minus,
    /// `(x, y, y)`
    BetaGamma,
    /// `(x, y, x)`
    GammaAlpha,
    /// `(x, x, y)`
    AlphaBeta,
    /// `(x, x, x)`
    Triple,
}

impl Piece {
    fn classes(self) -> [[i64; 2]; 3] {
        let (x, y) = ([1, 0], [0, 1]);
        match self {
            Piece::Plus => [x, y, [1, 1]],
            Piece::Minus => [x, y, [1, -1]],
            Piece::BetaGamma => [x, y, y],
            Piece::GammaAlpha => [x, y, x],
            Piece::AlphaBeta => [x, x, y],
            Piece::Triple => [x, x, x],
        }
    }

    fn alpha_equals_beta(self) -> bool {
        matches!(self, Piece::AlphaBeta | Piece::Triple)
    }
}

/// Places one piece on each of the first `g − p` handles; the remaining `p`
/// handles and the `b − 1` boundary classes stay free.
///
/// When every piece with `α = β` precedes the others, `(α, β)` is in
/// standard position and the `l` standard arcs are the `f`-classes of the
/// page handles and the boundary, which the returned diagram carries.
pub fn assemble(g: usize, p: usize, b: usize, pieces: &[Piece]) -> Diagram {
    let sig = SurfaceSignature::new(g, p, b).expect("valid signature");
    assert_eq!(pieces.len(), sig.curves(), "one piece per active handle");
    let n = sig.n();
    let mut families: [Vec<Vec<BigInt>>; 3] = Default::default();
    for (h, piece) in pieces.iter().enumerate() {
        for (fam, class) in families.iter_mut().zip(piece.classes()) {
            let mut v = vec![BigInt::from(0); n];
            v[2 * h] = class[0].into();
            v[2 * h + 1] = class[1].into();
            fam.push(v);
        }
    }
    let [a, bb, c] = families;
    let d = Diagram::new(sig, a, bb, c).expect("consistent lengths");

    let parallel = pieces.iter().take_while(|p| p.alpha_equals_beta()).count();
    if pieces[parallel..].iter().any(|p| p.alpha_equals_beta()) {
        return d;
    }
    let m = sig.curves();
    let arcs = IntMatrix::from_fn(sig.l(), n, |i, j| BigInt::from(u8::from(j == 2 * m + i)));
    d.with_standard_position(arcs).expect("arc shape")
}

/// Rebuilds a diagram from per-family class lists, keeping the standard
/// arcs only when `arcs` is given.
fn rebuild(d: &Diagram, families: [Vec<Vec<BigInt>>; 3], arcs: Option<IntMatrix>) -> Diagram {
    let [a, b, c] = families;
    let out = Diagram::new(*d.signature(), a, b, c).expect("same lengths");
    match arcs {
        Some(a) => out.with_standard_position(a).expect("arc shape"),
        None => out,
    }
}

/// Applies the transvection `x ↦ x + ⟨x, v⟩·v` to every curve class, and its
/// inverse transpose to the standard arcs. Intersection numbers and hence
/// the manifold are unchanged.
pub fn transvect(d: &Diagram, v: &[i64]) -> Diagram {
    let j = j_matrix(d.signature());
    let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let apply = |x: &Vec<BigInt>| -> Vec<BigInt> {
        let k = dot(x, &j.mul_vec(&v));
        x.iter().zip(&v).map(|(xi, vi)| xi + &k * vi).collect()
    };
    let families = Family::ALL.map(|f| d.classes(f).iter().map(apply).collect());
    // arcs transform by T⁻ᵀ = I − J·v·vᵀ
    let jv = j.mul_vec(&v);
    let arcs = d.standard_arcs().map(|a| {
        IntMatrix::from_fn(a.rows(), a.cols(), |i, c| {
            let row = a.row(i);
            &row[c] - &jv[c] * dot(&v, row)
        })
    });
    rebuild(d, families, arcs)
}

/// Handle slide within one family: `ν_target += sign·ν_source`.
pub fn slide(d: &Diagram, f: Family, target: usize, source: usize, sign: i64) -> Diagram {
    let mut families = Family::ALL.map(|f| d.classes(f));
    let fam = &mut families[f as usize];
    let src = fam[source].clone();
    for (t, s) in fam[target].iter_mut().zip(&src) {
        *t += s * sign;
    }
    // Sliding γ keeps (α, β) standard; sliding α or β may not.
    let arcs = if f == Family::Gamma {
        d.standard_arcs().cloned()
    } else {
        None
    };
    rebuild(d, families, arcs)
}

/// Adds `amount` copies of the boundary class `e_{2g+1+boundary}` to γ-curve
/// `curve`. Boundary classes pair trivially with everything, so the family
/// stays disjoint.
pub fn shift_gamma_by_boundary(d: &Diagram, curve: usize, boundary: usize, amount: i64) -> Diagram {
    let sig = d.signature();
    let idx = 2 * sig.g() + boundary;
    assert!(idx < sig.n(), "no such boundary class");
    let mut families = Family::ALL.map(|f| d.classes(f));
    families[Family::Gamma as usize][curve][idx] += amount;
    rebuild(d, families, d.standard_arcs().cloned())
}

/// Genus-one diagram `(e₁, e₂, e₁ + e₂)` on a once-punctured torus.
pub fn torus() -> Diagram {
    let sig = SurfaceSignature::new(1, 0, 1).expect("valid signature");
    Diagram::from_i64(sig, &[&[1, 0]], &[&[0, 1]], &[&[1, 1]]).expect("lengths")
}

/// The 4-ball: a disk with no curves.
pub fn ball() -> Diagram {
    let sig = SurfaceSignature::new(0, 0, 1).expect("valid signature");
    Diagram::from_i64(sig, &[], &[], &[]).expect("lengths")
}

/// Genus-two diagram with hyperbolic intersection form; the manifold is spin.
pub fn hyperbolic() -> Diagram {
    let sig = SurfaceSignature::new(2, 0, 1).expect("valid signature");
    Diagram::from_i64(
        sig,
        &[&[1, 0, 0, 0], &[0, 0, 1, 0]],
        &[&[0, 1, 0, 0], &[0, 0, 0, 1]],
        &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
    )
    .and_then(|d| d.with_standard_position(IntMatrix::zeros(0, 4)))
    .expect("lengths")
}

/// Intersection matrices of a `(2, 1; 0, 2)` diagram of the disk bundle over
/// `S²` with Euler number −1.
pub fn euler_minus_one_bundle() -> DiagramMatrices {
    DiagramMatrices::new(
        SurfaceSignature::new(2, 0, 2).expect("valid signature"),
        1,
        IntMatrix::from_i64(2, 2, &[1, 0, 0, -1]),
        IntMatrix::from_i64(2, 2, &[0, -1, 1, 1]),
        IntMatrix::from_i64(1, 2, &[1, 0]),
        Some(IntMatrix::identity(2)),
    )
    .expect("consistent shapes")
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub name: String,
    pub diagram: Diagram,
}

fn sample(name: &str, diagram: Diagram) -> Sample {
    Sample {
        name: name.into(),
        diagram,
    }
}

/// A fixed corpus of diagrams that pass every necessary-condition check,
/// covering `g = p`, `b ∈ {1, 2, 3}`, torsion in `H₁` and `H₂`-forms of
/// several ranks.
pub fn corpus() -> Vec<Sample> {
    use Piece::*;
    let plus_plus = assemble(2, 0, 1, &[Plus, Plus]);
    let plus_minus = assemble(2, 0, 1, &[Plus, Minus]);
    let page = assemble(2, 1, 2, &[Plus]);
    let mixed = assemble(3, 0, 1, &[Triple, Plus, Minus]);
    let ab_plus = assemble(2, 0, 2, &[AlphaBeta, Plus]);
    let wide = assemble(3, 1, 3, &[AlphaBeta, Minus]);
    let z2 = shift_gamma_by_boundary(&assemble(1, 0, 2, &[Plus]), 0, 0, 2);

    vec![
        sample("ball", ball()),
        sample("page-annulus", assemble(0, 0, 2, &[])),
        sample("page-torus", assemble(1, 1, 1, &[])),
        sample("page-genus2-b3", assemble(2, 2, 3, &[])),
        sample("torus-plus", assemble(1, 0, 1, &[Plus])),
        sample("torus-minus", assemble(1, 0, 1, &[Minus])),
        sample("torus-beta-gamma", assemble(1, 0, 1, &[BetaGamma])),
        sample("torus-gamma-alpha", assemble(1, 0, 1, &[GammaAlpha])),
        sample("torus-alpha-beta", assemble(1, 0, 1, &[AlphaBeta])),
        sample("torus-triple", assemble(1, 0, 1, &[Triple])),
        sample("plus-plus", plus_plus.clone()),
        sample("plus-minus", plus_minus.clone()),
        sample("plus-page-b2", page.clone()),
        sample("triple-plus-minus", mixed.clone()),
        sample("alphabeta-plus-b2", ab_plus.clone()),
        sample("alphabeta-minus-page-b3", wide.clone()),
        sample("torsion-z2", z2.clone()),
        sample(
            "torsion-z3-b3",
            shift_gamma_by_boundary(
                &shift_gamma_by_boundary(&assemble(1, 0, 3, &[Plus]), 0, 0, 3),
                0,
                1,
                3,
            ),
        ),
        sample(
            "torsion-z2-plus-minus",
            shift_gamma_by_boundary(&assemble(2, 0, 2, &[Minus, Plus]), 1, 0, 2),
        ),
        sample("plus-plus-twisted", transvect(&plus_plus, &[1, 0, 1, 0])),
        sample(
            "plus-minus-twisted",
            transvect(&transvect(&plus_minus, &[1, 0, 1, 0]), &[0, 1, 0, -1]),
        ),
        sample("plus-page-b2-twisted", transvect(&page, &[1, 0, 0, 1, 1])),
        sample("torsion-z2-twisted", transvect(&z2, &[0, 1, 1])),
        sample(
            "triple-plus-minus-slid",
            slide(
                &slide(&mixed, Family::Gamma, 2, 1, 1),
                Family::Gamma,
                0,
                2,
                -1,
            ),
        ),
        sample(
            "plus-minus-slid",
            slide(
                &slide(&plus_minus, Family::Alpha, 0, 1, 1),
                Family::Beta,
                1,
                0,
                -1,
            ),
        ),
        sample(
            "alphabeta-minus-page-b3-twisted",
            transvect(&wide, &[1, 1, 0, 1, 0, 0, 1, 0]),
        ),
        sample(
            "alphabeta-plus-b2-twisted",
            transvect(&ab_plus, &[0, 0, 1, 0, 1]),
        ),
        sample("hyperbolic", hyperbolic()),
        sample(
            "hyperbolic-twisted",
            transvect(&hyperbolic(), &[1, -1, 0, 1]),
        ),
    ]
}
