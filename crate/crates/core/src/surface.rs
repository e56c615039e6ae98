//! Homological model of the central surface and the diagram data model.
//!
//! `H₁(Σ)` carries the ordered basis `e₁..e_n`, `n = 2g + b − 1`: the pairs
//! `(e_{2i−1}, e_{2i})` are the handle curves and the last `b − 1` classes are
//! boundary-parallel. `H₁(Σ, ∂Σ)` carries the dual arc basis `f₁..f_n` with
//! `⟨fᵢ, eⱼ⟩ = δᵢⱼ`. Closed classes pair by `⟨x, y⟩ = xᵀ·J·y` with
//! `J = Sᵀ − S`, so `⟨e_{2i−1}, e_{2i}⟩ = 1`. An arc class `a` pairs with a
//! curve class `x` by `⟨a, x⟩ = aᵀ·x` and `⟨x, a⟩ = −⟨a, x⟩`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{
    dot, lattice_intersect, lattice_sum, orthogonal_complement, IntMatrix, Lattice,
};

/// Genus `g`, page genus `p` and boundary count `b` of a relative trisection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceSignature {
    g: usize,
    p: usize,
    b: usize,
}

impl SurfaceSignature {
    pub fn new(g: usize, p: usize, b: usize) -> Result<Self> {
        if p > g {
            return Err(Error::InvalidSignature(format!("p = {p} exceeds g = {g}")));
        }
        if b == 0 {
            return Err(Error::InvalidSignature("b must be at least 1".into()));
        }
        Ok(Self { g, p, b })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// `l = 2p + b − 1`, the lower bound for every `kᵢ`.
    pub fn l(&self) -> usize {
        2 * self.p + self.b - 1
    }

    /// Rank of `H₁(Σ)` and of `H₁(Σ, ∂Σ)`.
    pub fn n(&self) -> usize {
        2 * self.g + self.b - 1
    }

    /// Number of curves in each family, `g − p`.
    pub fn curves(&self) -> usize {
        self.g - self.p
    }

    /// `g + p + b − 1`, the upper bound for every `kᵢ`.
    pub fn k_max(&self) -> usize {
        self.g + self.p + self.b - 1
    }
}

impl fmt::Display for SurfaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, p={}, b={})", self.g, self.p, self.b)
    }
}

fn elbow(blocks: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(2 * blocks, 2 * blocks);
    for i in 0..blocks {
        m[(2 * i + 1, 2 * i)] = BigInt::from(1);
    }
    m
}

/// `S_{g,b} = ⊕^g [[0,0],[1,0]] ⊕ O_{b−1}`.
pub fn s_matrix(sig: &SurfaceSignature) -> IntMatrix {
    elbow(sig.g).direct_sum(&IntMatrix::zeros(sig.b - 1, sig.b - 1))
}

/// `J = Sᵀ − S`, the intersection matrix of `e₁..e_n`.
pub fn j_matrix(sig: &SurfaceSignature) -> IntMatrix {
    let s = s_matrix(sig);
    IntMatrix::from_fn(s.rows(), s.cols(), |i, j| &s[(j, i)] - &s[(i, j)])
}

/// `R = I_{g−p} ⊕^p [[0,0],[1,0]] ⊕ O_{b−1}`, of size `g + p + b − 1`.
pub fn r_matrix(sig: &SurfaceSignature) -> IntMatrix {
    IntMatrix::identity(sig.curves())
        .direct_sum(&elbow(sig.p))
        .direct_sum(&IntMatrix::zeros(sig.b - 1, sig.b - 1))
}

/// The fixed matrices `S`, `J`, `R` for one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingConventions {
    pub n: usize,
    pub s: IntMatrix,
    pub j: IntMatrix,
    pub r: IntMatrix,
}

impl PairingConventions {
    pub fn new(sig: &SurfaceSignature) -> Self {
        Self {
            n: sig.n(),
            s: s_matrix(sig),
            j: j_matrix(sig),
            r: r_matrix(sig),
        }
    }
}

/// A homology class on Σ: a closed curve in `e`-coordinates or a proper arc
/// in `f`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Class {
    Curve(Vec<BigInt>),
    Arc(Vec<BigInt>),
}

impl Class {
    fn coords(&self) -> &[BigInt] {
        match self {
            Class::Curve(v) | Class::Arc(v) => v,
        }
    }
}

/// `⟨x, y⟩_Σ` for closed classes.
pub fn curve_pairing(j: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> BigInt {
    dot(x, &j.mul_vec(y))
}

/// `⟨μ, ν⟩_Σ` for any mix of curve and arc classes. Two arcs have no
/// well-defined intersection number and are rejected.
pub fn intersection_number(sig: &SurfaceSignature, mu: &Class, nu: &Class) -> Result<BigInt> {
    let n = sig.n();
    for c in [mu, nu] {
        if c.coords().len() != n {
            return Err(Error::DimensionMismatch {
                context: "class coordinates".into(),
                expected: n.to_string(),
                found: c.coords().len().to_string(),
            });
        }
    }
    match (mu, nu) {
        (Class::Curve(x), Class::Curve(y)) => Ok(curve_pairing(&j_matrix(sig), x, y)),
        (Class::Arc(a), Class::Curve(x)) => Ok(dot(a, x)),
        (Class::Curve(x), Class::Arc(a)) => Ok(-dot(a, x)),
        (Class::Arc(_), Class::Arc(_)) => Err(Error::Missing(
            "arc-arc intersection numbers are not defined".into(),
        )),
    }
}

/// The intersection matrix with entries `⟨μᵢ, νⱼ⟩_Σ`.
pub fn q_matrix(sig: &SurfaceSignature, mu: &[Class], nu: &[Class]) -> Result<IntMatrix> {
    let mut m = IntMatrix::zeros(mu.len(), nu.len());
    for (i, x) in mu.iter().enumerate() {
        for (j, y) in nu.iter().enumerate() {
            m[(i, j)] = intersection_number(sig, x, y)?;
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alpha, Family::Beta, Family::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Gamma => "gamma",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// The family following this one cyclically (α → β → γ → α).
    pub fn next(self) -> Family {
        Family::ALL[(self.index() + 1) % 3]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A relative trisection diagram recorded by the homology classes of its
/// three curve families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    sig: SurfaceSignature,
    families: [IntMatrix; 3],
    k: Option<[usize; 3]>,
    arcs: Option<IntMatrix>,
    standard_arcs: Option<IntMatrix>,
    standard_position: bool,
}

impl Diagram {
    /// Each family is a list of class vectors of length `2g + b − 1`. Family
    /// sizes are not enforced here; [`validate`] reports them.
    pub fn new(
        sig: SurfaceSignature,
        alpha: Vec<Vec<BigInt>>,
        beta: Vec<Vec<BigInt>>,
        gamma: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        let n = sig.n();
        let mut families = Vec::with_capacity(3);
        for (family, classes) in Family::ALL.into_iter().zip([alpha, beta, gamma]) {
            for (i, v) in classes.iter().enumerate() {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        context: format!("{family}[{i}]"),
                        expected: format!("{n} entries (2g+b-1)"),
                        found: v.len().to_string(),
                    });
                }
            }
            families.push(IntMatrix::from_columns(n, &classes));
        }
        let [alpha, beta, gamma]: [IntMatrix; 3] = families.try_into().expect("three families");
        Ok(Self {
            sig,
            families: [alpha, beta, gamma],
            k: None,
            arcs: None,
            standard_arcs: None,
            standard_position: false,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(
        sig: SurfaceSignature,
        alpha: &[&[i64]],
        beta: &[&[i64]],
        gamma: &[&[i64]],
    ) -> Result<Self> {
        let conv = |f: &[&[i64]]| -> Vec<Vec<BigInt>> {
            f.iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        Self::new(sig, conv(alpha), conv(beta), conv(gamma))
    }

    /// Records user-supplied `(k₁, k₂, k₃)`, checked against [`infer_k`] during
    /// validation.
    pub fn with_k(mut self, k: [usize; 3]) -> Self {
        self.k = Some(k);
        self
    }

    /// Replaces the default arc basis `f₁..f_n` by the rows of `arcs`
    /// (`f`-coordinates). Must be an `n × n` unimodular matrix whose dual
    /// curves keep the intersection matrix `J`.
    pub fn with_arcs(mut self, arcs: IntMatrix) -> Result<Self> {
        let n = self.sig.n();
        if arcs.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                context: "arcs".into(),
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", arcs.rows(), arcs.cols()),
            });
        }
        self.arcs = Some(arcs);
        Ok(self)
    }

    /// Asserts that `(α, β)` is in standard position and supplies the `l`
    /// arcs completing `α` and `β` to bases of `L^∂_α` and `L^∂_β` (rows, in
    /// `f`-coordinates).
    pub fn with_standard_position(mut self, arcs: IntMatrix) -> Result<Self> {
        let (l, n) = (self.sig.l(), self.sig.n());
        if arcs.shape() != (l, n) {
            return Err(Error::DimensionMismatch {
                context: "standard_arcs".into(),
                expected: format!("{l}x{n} (l arcs of length 2g+b-1)"),
                found: format!("{}x{}", arcs.rows(), arcs.cols()),
            });
        }
        self.standard_arcs = Some(arcs);
        self.standard_position = true;
        Ok(self)
    }

    pub fn signature(&self) -> &SurfaceSignature {
        &self.sig
    }

    /// Class vectors of a family, one per column.
    pub fn family(&self, f: Family) -> &IntMatrix {
        &self.families[f.index()]
    }

    pub fn classes(&self, f: Family) -> Vec<Vec<BigInt>> {
        self.family(f).to_columns()
    }

    pub fn supplied_k(&self) -> Option<[usize; 3]> {
        self.k
    }

    /// Arc basis rows; the identity when none was supplied.
    pub fn arcs(&self) -> IntMatrix {
        self.arcs
            .clone()
            .unwrap_or_else(|| IntMatrix::identity(self.sig.n()))
    }

    pub fn custom_arcs(&self) -> Option<&IntMatrix> {
        self.arcs.as_ref()
    }

    pub fn standard_arcs(&self) -> Option<&IntMatrix> {
        self.standard_arcs.as_ref()
    }

    pub fn standard_position(&self) -> bool {
        self.standard_position
    }

    /// `⟨x, y⟩_Σ` for closed classes on this surface.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        curve_pairing(&j_matrix(&self.sig), x, y)
    }

    pub fn curve_classes(&self, f: Family) -> Vec<Class> {
        self.classes(f).into_iter().map(Class::Curve).collect()
    }
}

/// `L_ν`, spanned by the family's classes.
pub fn l_lattice(d: &Diagram, f: Family) -> Lattice {
    Lattice::span(d.family(f))
}

/// `L^∂_ν`: the arc classes pairing to zero with all of `L_ν`.
pub fn l_partial_lattice(d: &Diagram, f: Family) -> Lattice {
    let id = IntMatrix::identity(d.sig.n());
    orthogonal_complement(&l_lattice(d, f), &id).expect("identity pairing has matching size")
}

/// `kᵢ = l + rank(L_μ ∩ L_ν)` for the pairs (α,β), (β,γ), (γ,α).
pub fn infer_k(d: &Diagram) -> [usize; 3] {
    Family::ALL.map(|f| {
        let meet = lattice_intersect(&l_lattice(d, f), &l_lattice(d, f.next()))
            .expect("families share the ambient rank");
        d.sig.l() + meet.rank()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the necessary-condition checks on a diagram. Passing is
/// necessary for the diagram to come from a relative trisection, not
/// sufficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub inferred_k: [usize; 3],
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidDiagram(
                self.failures()
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect(),
            ))
        }
    }
}

pub fn validate(d: &Diagram) -> ValidationReport {
    let sig = d.sig;
    let want = sig.curves();
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };

    let lattices = Family::ALL.map(|f| l_lattice(d, f));

    for f in Family::ALL {
        let count = d.family(f).cols();
        push(
            format!("family_size.{f}"),
            count == want,
            format!("{count} curves, expected g-p = {want}"),
        );
    }

    let j = j_matrix(&sig);
    for f in Family::ALL {
        let fam = d.family(f);
        let q = &(&fam.transpose() * &j) * fam;
        push(
            format!("disjoint.{f}"),
            q.is_zero(),
            if q.is_zero() {
                "all intra-family intersection numbers vanish".into()
            } else {
                format!("intra-family intersection matrix is {q}")
            },
        );
    }

    for (f, l) in Family::ALL.iter().zip(&lattices) {
        let independent = l.rank() == d.family(*f).cols();
        let saturated = l.is_saturated();
        let ok = independent && saturated && l.rank() == want;
        let detail = if ok {
            format!("classes form a basis of a saturated rank-{want} lattice")
        } else if !independent {
            format!("classes are dependent (rank {})", l.rank())
        } else if !saturated {
            "classes span a non-saturated lattice".into()
        } else {
            format!("rank {} differs from g-p = {want}", l.rank())
        };
        push(format!("basis.{f}"), ok, detail);
    }

    for (i, f) in Family::ALL.iter().enumerate() {
        let partial = orthogonal_complement(&lattices[i], &IntMatrix::identity(sig.n()))
            .expect("identity pairing");
        let expected = sig.n() - lattices[i].rank();
        push(
            format!("partial_rank.{f}"),
            partial.rank() == sig.k_max() && partial.rank() == expected,
            format!(
                "rank L^d_{f} = {}, expected g+p+b-1 = {}",
                partial.rank(),
                sig.k_max()
            ),
        );
    }

    for (i, f) in Family::ALL.iter().enumerate() {
        let g = f.next();
        let sum = lattice_sum(&lattices[i], &lattices[(i + 1) % 3]).expect("same ambient");
        let ok = sum.is_saturated();
        push(
            format!("pair_sum_saturated.{f}_{g}"),
            ok,
            if ok {
                format!("H1(Sigma)/(L_{f} + L_{g}) is torsion-free")
            } else {
                format!("H1(Sigma)/(L_{f} + L_{g}) has torsion")
            },
        );
    }

    let inferred = infer_k(d);
    let bounds_ok = inferred.iter().all(|&k| sig.l() <= k && k <= sig.k_max());
    push(
        "k_bounds".into(),
        bounds_ok,
        format!(
            "inferred k = {inferred:?}, allowed range [{}, {}]",
            sig.l(),
            sig.k_max()
        ),
    );

    if let Some(k) = d.k {
        push(
            "k_consistency".into(),
            k == inferred,
            format!("supplied k = {k:?}, inferred k = {inferred:?}"),
        );
    }

    if let Some(arcs) = &d.arcs {
        let unimodular = arcs.is_unimodular();
        let preserves = unimodular && &(&arcs.transpose() * &j) * arcs == j;
        push(
            "arcs".into(),
            preserves,
            if preserves {
                "arc basis is unimodular with dual curves pairing by J".into()
            } else if !unimodular {
                "arc matrix is not unimodular".into()
            } else {
                "dual curves of the arc basis do not pair by J".into()
            },
        );
    }

    if let Some(arcs) = &d.standard_arcs {
        let ok = (0..arcs.rows()).all(|i| {
            let a = arcs.row(i);
            Family::ALL[..2]
                .iter()
                .all(|&f| d.classes(f).iter().all(|x| dot(a, x).is_zero()))
        });
        push(
            "standard_arcs".into(),
            ok,
            if ok {
                "standard arcs lie in L^d_alpha ∩ L^d_beta".into()
            } else {
                "a standard arc pairs nontrivially with an alpha or beta curve".into()
            },
        );
    }

    ValidationReport {
        inferred_k: inferred,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int_vec, quotient_presentation, AbelianGroup};

    fn torus() -> Diagram {
        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        Diagram::from_i64(sig, &[&[1, 0]], &[&[0, 1]], &[&[1, 1]]).unwrap()
    }

    #[test]
    fn signature_bounds() {
        assert!(SurfaceSignature::new(1, 2, 1).is_err());
        assert!(SurfaceSignature::new(1, 0, 0).is_err());
        let s = SurfaceSignature::new(2, 0, 2).unwrap();
        assert_eq!((s.l(), s.n(), s.k_max(), s.curves()), (1, 5, 3, 2));
    }

    #[test]
    fn convention_matrices() {
        let sig = SurfaceSignature::new(2, 1, 3).unwrap();
        let c = PairingConventions::new(&sig);
        assert_eq!(c.s.shape(), (6, 6));
        assert_eq!(c.s[(1, 0)], BigInt::from(1));
        assert_eq!(c.s[(3, 2)], BigInt::from(1));
        assert_eq!(c.j, c.j.transpose().neg());
        assert_eq!(c.j[(0, 1)], BigInt::from(1));
        // R = I_1 ⊕ elbow ⊕ O_2, size g+p+b-1 = 5
        let r = IntMatrix::from_i64(
            5,
            5,
            &[
                1, 0, 0, 0, 0, //
                0, 0, 0, 0, 0, //
                0, 1, 0, 0, 0, //
                0, 0, 0, 0, 0, //
                0, 0, 0, 0, 0,
            ],
        );
        assert_eq!(c.r, r);
    }

    #[test]
    fn j_rank_and_boundary_kernel() {
        let sig = SurfaceSignature::new(2, 0, 3).unwrap();
        let j = j_matrix(&sig);
        let ker = crate::exactalg::kernel_basis(&j);
        assert_eq!(ker.rank(), 2);
        assert_eq!(crate::exactalg::snf(&j).rank(), 4);
    }

    #[test]
    fn torus_q_matrices() {
        let d = torus();
        let sig = d.signature();
        let q = q_matrix(
            sig,
            &d.curve_classes(Family::Alpha),
            &d.curve_classes(Family::Gamma),
        )
        .unwrap();
        assert_eq!(q, IntMatrix::from_i64(1, 1, &[1]));
        let arcs: Vec<Class> = (0..2)
            .map(|i| Class::Arc(int_vec(&[(i == 0) as i64, (i == 1) as i64])))
            .collect();
        let qa = q_matrix(sig, &arcs, &d.curve_classes(Family::Gamma)).unwrap();
        assert_eq!(qa, IntMatrix::from_i64(2, 1, &[1, 1]));
        let qa_rev = q_matrix(sig, &d.curve_classes(Family::Gamma), &arcs).unwrap();
        assert_eq!(qa_rev, qa.transpose().neg());
        for f in Family::ALL {
            let c = d.curve_classes(f);
            assert!(q_matrix(sig, &c, &c).unwrap().is_zero());
        }
    }

    #[test]
    fn q_matrix_rejects_bad_lengths_and_arc_pairs() {
        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        let bad = [Class::Curve(int_vec(&[1, 0, 0]))];
        let ok = [Class::Curve(int_vec(&[1, 0]))];
        assert!(q_matrix(&sig, &bad, &ok).is_err());
        let arc = [Class::Arc(int_vec(&[1, 0]))];
        assert!(q_matrix(&sig, &arc, &arc).is_err());
    }

    #[test]
    fn lattices_of_the_torus() {
        let d = torus();
        assert_eq!(
            l_lattice(&d, Family::Alpha),
            Lattice::from_vectors(2, &[int_vec(&[1, 0])])
        );
        // (1,0)·y = 0 → y ∈ span f2
        assert_eq!(
            l_partial_lattice(&d, Family::Alpha),
            Lattice::from_vectors(2, &[int_vec(&[0, 1])])
        );
        assert_eq!(infer_k(&d), [0, 0, 0]);
    }

    #[test]
    fn empty_families() {
        let sig = SurfaceSignature::new(1, 1, 2).unwrap();
        let d = Diagram::from_i64(sig, &[], &[], &[]).unwrap();
        assert_eq!(l_lattice(&d, Family::Beta), Lattice::zero(3));
        assert_eq!(l_partial_lattice(&d, Family::Beta), Lattice::full(3));
        assert_eq!(infer_k(&d), [sig.l(); 3]);
        assert!(validate(&d).is_valid());
    }

    #[test]
    fn partial_lattice_contains_the_relative_images() {
        let d = torus();
        let j = j_matrix(d.signature());
        for f in Family::ALL {
            let partial = l_partial_lattice(&d, f);
            for x in d.classes(f) {
                assert!(partial.contains(&j.transpose().mul_vec(&x)));
            }
            let back = orthogonal_complement(&partial, &IntMatrix::identity(2)).unwrap();
            assert_eq!(back, l_lattice(&d, f).saturation());
        }
    }

    #[test]
    fn torus_validates() {
        let r = validate(&torus().with_k([0, 0, 0]));
        assert!(r.is_valid(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn rejects_intersecting_family() {
        let sig = SurfaceSignature::new(2, 0, 1).unwrap();
        let d = Diagram::from_i64(
            sig,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0]],
            &[&[0, 1, 0, 0], &[0, 0, 0, 1]],
            &[&[1, 0, 0, 0], &[0, 0, 1, 0]],
        )
        .unwrap();
        let r = validate(&d);
        assert!(!r.is_valid());
        assert!(r.failures().any(|c| c.name == "disjoint.alpha"));
        assert!(r.failures().all(|c| c.name != "disjoint.beta"));
    }

    #[test]
    fn rejects_non_saturated_family() {
        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        let d = Diagram::from_i64(sig, &[&[2, 0]], &[&[0, 1]], &[&[1, 1]]).unwrap();
        let r = validate(&d);
        assert!(r.failures().any(|c| c.name == "basis.alpha"));
        assert!(r.into_result().is_err());
    }

    #[test]
    fn rejects_wrong_k_and_wrong_size() {
        let r = validate(&torus().with_k([1, 0, 0]));
        assert_eq!(
            r.failures().map(|c| c.name.as_str()).collect::<Vec<_>>(),
            ["k_consistency"]
        );

        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        let d = Diagram::from_i64(sig, &[&[1, 0], &[0, 1]], &[&[0, 1]], &[&[1, 1]]).unwrap();
        assert!(validate(&d)
            .failures()
            .any(|c| c.name == "family_size.alpha"));
    }

    #[test]
    fn rejects_torsion_in_a_pair_sum() {
        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        let d = Diagram::from_i64(sig, &[&[1, 0]], &[&[0, 1]], &[&[1, 2]]).unwrap();
        let r = validate(&d);
        let names: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["pair_sum_saturated.gamma_alpha"]);
        let sum =
            lattice_sum(&l_lattice(&d, Family::Gamma), &l_lattice(&d, Family::Alpha)).unwrap();
        assert_eq!(
            quotient_presentation(&Lattice::full(2), &sum).unwrap(),
            AbelianGroup::new(0, vec![BigInt::from(2)])
        );
    }

    #[test]
    fn rejects_bad_vector_length() {
        let sig = SurfaceSignature::new(1, 0, 1).unwrap();
        let err = Diagram::from_i64(sig, &[&[1, 0, 0]], &[&[0, 1]], &[&[1, 1]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn arc_basis_checks() {
        let d = torus()
            .with_arcs(IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]))
            .unwrap();
        assert!(validate(&d).is_valid());
        let d = torus()
            .with_arcs(IntMatrix::from_i64(2, 2, &[2, 0, 0, 1]))
            .unwrap();
        assert!(validate(&d).failures().any(|c| c.name == "arcs"));
        assert!(torus().with_arcs(IntMatrix::identity(3)).is_err());
    }
}
