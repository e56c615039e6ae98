//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p trisect-cli --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::Command as Process;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trisect_cli::input::{parse_path, DiagramFile};
use trisect_core::charclass::{linking_matrix_y, linking_matrix_z, spin_y, spin_z, w2_y, w2_z};
use trisect_core::exactalg::{lattice_intersect, lattice_sum, mod2, snf};
use trisect_core::homology::{
    build_cy, build_cz, cz_cycle, decompose, h_closed_forms, homology_of, intersection_form,
};
use trisect_core::samples::{corpus, euler_minus_one_bundle, Sample};
use trisect_core::surface::{infer_k, l_lattice, validate};
use trisect_core::{AbelianGroup, Family, IntMatrix, Lattice};

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use oracle::{lattice_points, oracle_points, SpanOracle};

const SEED: u64 = 0x7215_ec7e_d1a9_0001;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:?}, limit {limit:?}"));
    }
    Ok(())
}

fn m(rows: usize, cols: usize, e: &[i64]) -> IntMatrix {
    IntMatrix::from_i64(rows, cols, e)
}

fn golden_matrix_mode() -> Verdict {
    let start = Instant::now();
    let bundle = euler_minus_one_bundle();
    let DiagramFile::Matrix(file) =
        parse_path(&fixture("euler-minus-one-bundle.json")).map_err(|e| e.to_string())?
    else {
        return Err("fixture is not in matrix mode".into());
    };
    let parsed = file.matrices().map_err(|e| e.to_string())?;
    ensure!(
        parsed == bundle,
        "fixture disagrees with the built-in matrices"
    );
    let want = m(2, 2, &[0, -1, -1, -1]);
    let linking = linking_matrix_y(&bundle);
    ensure!(linking == want, "linking {linking}, expected {want}");
    let w2 = w2_y(&bundle);
    ensure!(w2.coefficients == [0, 1], "w2 {:?}", w2.coefficients);
    let spin = spin_y(&bundle);
    ensure!(!spin.spin, "reported spin");
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "linking {linking}, w2 {:?}, spin {}",
        w2.coefficients, spin.spin
    ))
}

fn torus_fixture() -> Verdict {
    let start = Instant::now();
    let DiagramFile::Class(file) = parse_path(&fixture("torus.json")).map_err(|e| e.to_string())?
    else {
        return Err("fixture is not in class mode".into());
    };
    let d = file.diagram(false).map_err(|e| e.to_string())?;
    let expected = [
        AbelianGroup::free(1),
        AbelianGroup::trivial(),
        AbelianGroup::free(1),
        AbelianGroup::trivial(),
    ];
    let hy = homology_of(&build_cy(&d).map_err(|e| e.to_string())?);
    let hz = homology_of(&build_cz(&d).map_err(|e| e.to_string())?);
    let hc = h_closed_forms(&d).map_err(|e| e.to_string())?;
    for h in [&hy, &hz, &hc] {
        ensure!(h.groups == expected, "{}: {h}", h.source.name());
    }
    let form = intersection_form(&d).map_err(|e| e.to_string())?;
    ensure!(form.matrix == m(1, 1, &[-1]), "form {}", form.matrix);
    let linking = linking_matrix_z(&d).map_err(|e| e.to_string())?;
    let want = m(3, 3, &[0, 0, 0, -1, 0, -1, -1, 0, -1]);
    ensure!(linking == want, "linking {linking}");
    let w2 = w2_z(&d).map_err(|e| e.to_string())?;
    ensure!(w2.coefficients == [0, 0, 1], "w2 {:?}", w2.coefficients);
    let spin = spin_z(&d).map_err(|e| e.to_string())?;
    ensure!(!spin.spin, "reported spin");
    let k = infer_k(&d);
    ensure!(k == [0, 0, 0], "k {k:?}");
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "H = ({}), form {}, w2 {:?}, spin {}, k {:?}",
        hy.groups
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        form.matrix,
        w2.coefficients,
        spin.spin,
        k
    ))
}

fn triple_agreement(samples: &[Sample]) -> Verdict {
    ensure!(samples.len() >= 20, "corpus has {} diagrams", samples.len());
    let sigs: Vec<_> = samples.iter().map(|s| *s.diagram.signature()).collect();
    ensure!(sigs.iter().any(|s| s.g() == s.p()), "no g = p diagram");
    for b in 1..=3 {
        ensure!(sigs.iter().any(|s| s.b() == b), "no diagram with b = {b}");
    }
    let mut torsion = 0;
    for s in samples {
        let d = &s.diagram;
        ensure!(validate(d).is_valid(), "{} is not valid", s.name);
        let hy = homology_of(&build_cy(d).map_err(|e| format!("{}: {e}", s.name))?);
        let hz = homology_of(&build_cz(d).map_err(|e| format!("{}: {e}", s.name))?);
        let hc = h_closed_forms(d).map_err(|e| format!("{}: {e}", s.name))?;
        ensure!(hy.groups == hz.groups, "{}: Y {hy} vs Z {hz}", s.name);
        ensure!(hy.groups == hc.groups, "{}: Y {hy} vs closed {hc}", s.name);
        if !hy.h(1).invariant_factors().is_empty() {
            torsion += 1;
        }
    }
    ensure!(torsion > 0, "no diagram with torsion in H1");
    Ok(format!(
        "{} diagrams, {torsion} with torsion H1, all three methods equal",
        samples.len()
    ))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9i64..=9)))
}

fn snf_invariants(a: &IntMatrix) -> Result<(), String> {
    let s = snf(a);
    ensure!(&(&s.u * a) * &s.v == s.d, "UMV != D for {a}");
    ensure!(s.u.det().abs().is_one(), "U not unimodular for {a}");
    ensure!(s.v.det().abs().is_one(), "V not unimodular for {a}");
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            ensure!(i == j || s.d[(i, j)].is_zero(), "D not diagonal for {a}");
        }
    }
    let diag = s.d.diagonal();
    let r = s.rank();
    ensure!(
        diag[..r].iter().all(Signed::is_positive),
        "nonpositive divisor for {a}"
    );
    ensure!(
        diag[r..].iter().all(Zero::is_zero),
        "nonzero past the rank for {a}"
    );
    for w in diag[..r].windows(2) {
        ensure!(w[1].is_multiple_of(&w[0]), "divisibility fails for {a}");
    }
    Ok(())
}

fn random_generators(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let count = rng.gen_range(0..=n + 1);
    (0..count)
        .map(|_| (0..n).map(|_| rng.gen_range(-4i64..=4)).collect())
        .collect()
}

fn lattice(n: usize, gens: &[Vec<i64>]) -> Lattice {
    Lattice::from_vectors(
        n,
        &gens.iter().map(|g| oracle::to_big(g)).collect::<Vec<_>>(),
    )
}

fn exact_algebra() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let matrices = 500;
    for _ in 0..matrices {
        snf_invariants(&random_matrix(&mut rng))?;
    }
    let pairs = 200;
    let mut points = 0;
    for _ in 0..pairs {
        let n = rng.gen_range(1..=4);
        let (ga, gb) = (
            random_generators(&mut rng, n),
            random_generators(&mut rng, n),
        );
        let (a, b) = (lattice(n, &ga), lattice(n, &gb));
        let pa = oracle_points(&SpanOracle::new(n, &ga), n, 6);
        let pb = oracle_points(&SpanOracle::new(n, &gb), n, 6);
        let both: Vec<Vec<i64>> = ga.iter().chain(&gb).cloned().collect();
        let psum = oracle_points(&SpanOracle::new(n, &both), n, 6);
        let meet = lattice_intersect(&a, &b).map_err(|e| e.to_string())?;
        let join = lattice_sum(&a, &b).map_err(|e| e.to_string())?;
        ensure!(lattice_points(&a, 6) == pa, "span of {ga:?} disagrees");
        ensure!(
            lattice_points(&meet, 6) == pa.intersection(&pb).cloned().collect(),
            "intersection of {ga:?} and {gb:?} disagrees"
        );
        ensure!(
            lattice_points(&join, 6) == psum,
            "sum of {ga:?} and {gb:?} disagrees"
        );
        points += (13usize).pow(n as u32);
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "{matrices} SNF checks, {pairs} lattice pairs over {points} box points, {:.1?}",
        start.elapsed()
    ))
}

fn chain_complexes(samples: &[Sample]) -> Verdict {
    for s in samples {
        let d = &s.diagram;
        let cy = build_cy(d).map_err(|e| format!("{}: {e}", s.name))?;
        let cz = build_cz(d).map_err(|e| format!("{}: {e}", s.name))?;
        for c in [&cy, &cz] {
            for i in 1..3 {
                let dd = c.boundary(i) * c.boundary(i + 1);
                ensure!(
                    dd.is_zero(),
                    "{}: d{i} d{} != 0 in {}",
                    s.name,
                    i + 1,
                    c.source().name()
                );
            }
        }
        ensure!(
            cy.euler_characteristic() == cz.euler_characteristic(),
            "{}: chi(C^Y) = {}, chi(C^Z) = {}",
            s.name,
            cy.euler_characteristic(),
            cz.euler_characteristic()
        );
    }
    Ok(format!("{} diagrams, both complexes", samples.len()))
}

fn phi_well_defined(samples: &[Sample]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut tested = 0;
    for s in samples {
        let d = &s.diagram;
        let form = intersection_form(d).map_err(|e| format!("{}: {e}", s.name))?;
        ensure!(
            form.matrix.is_symmetric(),
            "{}: form {} not symmetric",
            s.name,
            form.matrix
        );
        if form.generators.is_empty() {
            continue;
        }
        tested += 1;
        let n = d.signature().n();
        let shared = lattice_intersect(&l_lattice(d, Family::Alpha), &l_lattice(d, Family::Beta))
            .map_err(|e| e.to_string())?
            .generators();
        for (i, x) in form.generators.iter().enumerate() {
            let split = decompose(d, x).map_err(|e| e.to_string())?;
            for _ in 0..10 {
                // x = (x′ + t) + (x″ − t) for a random t ∈ L_α ∩ L_β
                let mut alpha = split.alpha_part.clone();
                for g in &shared {
                    let c = BigInt::from(rng.gen_range(-5i64..=5));
                    for k in 0..n {
                        alpha[k] += &c * &g[k];
                    }
                }
                for (j, y) in form.generators.iter().enumerate() {
                    let value = -d.pairing(&alpha, y);
                    ensure!(
                        value == form.matrix[(i, j)],
                        "{}: Phi({i},{j}) = {value} after re-splitting, {} before",
                        s.name,
                        form.matrix[(i, j)]
                    );
                }
            }
        }
    }
    Ok(format!(
        "{tested} diagrams with free H2, 10 splittings per generator"
    ))
}

fn parity_law(samples: &[Sample]) -> Verdict {
    let mut tested = 0;
    for s in samples {
        let d = &s.diagram;
        let form = intersection_form(d).map_err(|e| e.to_string())?;
        if form.generators.is_empty() {
            continue;
        }
        tested += 1;
        let w2 = w2_z(d).map_err(|e| e.to_string())?;
        for (i, x) in form.generators.iter().enumerate() {
            let chain = cz_cycle(d, x).map_err(|e| e.to_string())?;
            let c = w2.evaluate(&chain);
            let square = mod2(&form.matrix[(i, i)]);
            ensure!(
                c == square,
                "{}: c'(h{i}) = {c}, Phi(h{i}, h{i}) = {square} mod 2",
                s.name
            );
        }
    }
    ensure!(tested > 0, "no diagram with free H2");
    Ok(format!("{tested} diagrams with free H2"))
}

fn cli_determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_trisect");
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture(""))
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    files.sort();
    for f in &files {
        let go = || {
            Process::new(bin)
                .args(["report", "--format", "json"])
                .arg(f)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (go()?, go()?);
        ensure!(a.stdout == b.stdout, "{} differs between runs", f.display());
        ensure!(
            a.status.code() == b.status.code(),
            "{} exit status differs",
            f.display()
        );
    }
    Ok(format!("{} fixtures, byte-identical JSON", files.len()))
}

fn main() {
    let samples = corpus();
    let criteria: Vec<Criterion> = vec![
        ("golden matrix-mode example", Box::new(golden_matrix_mode)),
        ("torus fixture", Box::new(torus_fixture)),
        (
            "triple agreement over the corpus",
            Box::new(|| triple_agreement(&samples)),
        ),
        ("exact-algebra oracles", Box::new(exact_algebra)),
        (
            "chain-complex sanity",
            Box::new(|| chain_complexes(&samples)),
        ),
        (
            "Phi well-defined and symmetric",
            Box::new(|| phi_well_defined(&samples)),
        ),
        ("parity law on H2", Box::new(|| parity_law(&samples))),
        ("CLI determinism", Box::new(cli_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
