//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use lace_poly::{binomial, rat, BigInt, Poly, Rational};
use lace_roots::{is_real_rooted, square_free_part, Certificate, RootInterval, Verdict};
use lace_simplicial::{random_complex, random_mixed_complex, Construction, SimplicialComplex};
use lace_subdiv::{
    bary_d, barycentric_table, colored_d, colored_p_table, edgewise_u, sample_h, strong_interlacing_check,
    Certifier, FTriangle, PRowTable, Variant,
};
use lace_zono::{certify_zonotope, count_lattice_points, ehrhart_polynomial, hstar, hstar_r, Zonotope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Re-verifies root witnesses of `p` by sign evaluation of its square-free
/// part: one interval per distinct root, each an exact root or a strict sign
/// change, with multiplicities adding up to the degree.
fn witnesses_valid(p: &Poly, witnesses: &[RootInterval]) -> bool {
    let s = square_free_part(p);
    let distinct = s.degree().unwrap_or(0);
    let total: usize = witnesses.iter().map(|w| w.multiplicity).sum();
    let zero = Rational::from_integer(0.into());
    witnesses.len() == distinct
        && Some(total) == p.degree()
        && witnesses.iter().all(|w| {
            if w.lo == w.hi {
                s.eval(&w.lo) == zero
            } else {
                w.lo < w.hi && s.eval(&w.lo) * s.eval(&w.hi) < zero
            }
        })
}

// ---------------------------------------------------------------------------
// 1. Table 1

fn table_one() -> Outcome {
    let expected: [[&str; 4]; 3] = [
        ["1+34x+19x^2", "30x+24x^2", "24x+30x^2", "19x+34x^2+x^3"],
        ["7+40x+7x^2", "4+40x+10x^2", "2+38x+14x^2", "1+34x+19x^2"],
        ["19+34x+x^2", "14+38x+2x^2", "10+40x+4x^2", "7+40x+7x^2"],
    ];
    let t = colored_p_table(3, 3).map_err(err)?;
    let mut checked = 0;
    for (j, row) in expected.iter().enumerate() {
        for (k, s) in row.iter().enumerate() {
            let want: Poly = s.parse().map_err(err)?;
            ensure(t.get(3, j, k) == &want, || format!("p^<3,{j}>_(3,{k}) = {} but expected {want}", t.get(3, j, k)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked}/12 entries exact"))
}

// ---------------------------------------------------------------------------
// 2. Operators against literal constructions

const COMPLEX_SEED: u64 = 0x0c0f_fee5;

fn random_complexes(count: usize) -> Vec<SimplicialComplex> {
    let mut g = rng(COMPLEX_SEED);
    (0..count)
        .map(|i| {
            let size = 1 + i % 4;
            let pool = size + g.gen_range(1..=3);
            let facets = g.gen_range(1..=4);
            if i % 2 == 0 {
                random_complex(&mut g, pool, facets, size)
            } else {
                random_mixed_complex(&mut g, pool, facets, size)
            }
        })
        .collect()
}

fn operators_vs_constructions() -> Outcome {
    let complexes = random_complexes(60);
    let checks: Vec<usize> = complexes
        .par_iter()
        .map(|delta| -> Result<usize, String> {
            let n = delta.rank();
            let h = delta.h_polynomial();
            let mut done = 0;
            let sd = Construction::Barycentric.apply(delta).complex.h_polynomial();
            let d = bary_d(n, &h).map_err(err)?;
            ensure(sd == d, || format!("{delta}: h(sd) = {sd}, D_{n}(h) = {d}"))?;
            done += 1;
            for r in 1..=3 {
                let esd = Construction::Edgewise(r).apply(delta).complex.h_polynomial();
                let u = edgewise_u(n, r, &h).map_err(err)?;
                ensure(esd == u, || format!("{delta}: h(esd_{r}) = {esd}, U^{n}_{r}(h) = {u}"))?;
                let col = Construction::Colored(r).apply(delta).complex.h_polynomial();
                let c = colored_d(n, r, &h).map_err(err)?;
                ensure(col == c, || format!("{delta}: h(sd_{r}) = {col}, D_({n},{r})(h) = {c}"))?;
                done += 2;
            }
            Ok(done)
        })
        .collect::<Result<_, _>>()?;
    let dims = complexes.iter().map(|c| c.dim()).max().unwrap_or(-1);
    Ok(format!(
        "{} complexes (seed {COMPLEX_SEED:#x}, dim <= {dims}), r in 1..=3, {} exact identities",
        complexes.len(),
        checks.iter().sum::<usize>()
    ))
}

// ---------------------------------------------------------------------------
// 3. Engine consistency

fn engine_corpus() -> Vec<(String, Construction, usize)> {
    let mut out = vec![
        ("trivial".to_string(), Construction::Identity, 5),
        ("barycentric".to_string(), Construction::Barycentric, 6),
    ];
    for r in 1..=4 {
        out.push((format!("esd_{r}"), Construction::Edgewise(r), 5));
        out.push((format!("F_{r}"), Construction::Colored(r), 5));
    }
    out
}

fn sum(ps: &[Poly]) -> Poly {
    ps.iter().sum()
}

fn engine_consistency() -> Outcome {
    let corpus = engine_corpus();
    let counts: Vec<usize> = corpus
        .par_iter()
        .map(|(name, construction, d)| -> Result<usize, String> {
            let (construction, d) = (*construction, *d);
            let f = FTriangle::cached(construction, d).map_err(err)?;
            let t = PRowTable::build(&f, d).map_err(|e| format!("{name}: {e}"))?;
            let mut checks = 0;
            for m in 0..=d {
                // Literal constructions on σ_m and ∂σ_m as the independent oracle.
                let h_sigma = construction.apply(&SimplicialComplex::simplex(m)).complex.h_polynomial();
                ensure(t.p(m, 0) == &h_sigma, || format!("{name}: p_({m},0) = {} but h(σ_{m}) = {h_sigma}", t.p(m, 0)))?;
                for k in 0..=m {
                    let rev = t.p(m, k).reverse(m).map_err(err)?;
                    ensure(&rev == t.p(m, m - k), || format!("{name}: p_({m},{k}) reciprocity"))?;
                    checks += 1;
                }
                if m >= 1 {
                    let theta = t.theta(m);
                    ensure(&theta.reverse(m).map_err(err)? == theta, || format!("{name}: θ_{m} not symmetric"))?;
                    let h_boundary =
                        construction.apply(&SimplicialComplex::simplex_boundary(m)).complex.h_polynomial();
                    let below = sum(t.row(m - 1));
                    ensure(below == h_boundary, || format!("{name}: Σ_k p_({},k) = {below} but h(∂σ_{m}) = {h_boundary}", m - 1))?;
                    ensure(&below + theta == h_sigma, || format!("{name}: Σ_k p_({},k) + θ_{m} != h(σ_{m})", m - 1))?;
                    checks += 4;
                }
            }
            if construction == Construction::Barycentric {
                ensure(*barycentric_table(d) == t, || "barycentric closed form differs from extraction".into())?;
            }
            Ok(checks)
        })
        .collect::<Result<_, _>>()?;
    Ok(format!("{} triangles, {} identities", corpus.len(), counts.iter().sum::<usize>()))
}

// ---------------------------------------------------------------------------
// 4. Strong interlacing of F_r

fn strong_interlacing() -> Outcome {
    let mut parts = 0;
    for r in 1..=4 {
        let f = FTriangle::cached(Construction::Colored(r), 5).map_err(err)?;
        let table = PRowTable::build(&f, 5).map_err(err)?;
        let cert = strong_interlacing_check(&f, 5, false).map_err(err)?;
        ensure(cert.verdict == Verdict::StrongInterlacing, || format!("F_{r}: {:?}", cert.hypothesis_report))?;
        for m in 2..=5 {
            let label = format!("h(σ_{}) interlaces θ_{m}", m - 1);
            let part = cert.part(&label).ok_or_else(|| format!("F_{r}: missing part `{label}`"))?;
            ensure(part.verdict == Verdict::Interlaces, || format!("F_{r}: {label} fails"))?;
            let theta = table.theta(m);
            if r >= 2 {
                ensure(!theta.is_zero() && theta.is_nonnegative(), || format!("F_{r}: θ_{m} = {theta}"))?;
                let prod = table.h_simplex(m - 1) * theta;
                ensure(witnesses_valid(&prod, &part.witnesses), || format!("F_{r}: witnesses for {label} do not recheck"))?;
            }
            parts += 1;
        }
        for n in 2..5 {
            let c = strong_interlacing_check(&f, n, false).map_err(err)?;
            ensure(c.holds(), || format!("F_{r}: fails with respect to {n}"))?;
        }
    }
    Ok(format!("F_r, r <= 4, n <= 5: {parts} θ certificates with rechecked rational witnesses"))
}

// ---------------------------------------------------------------------------
// 5 and 6. Decomposition theorem and real-rootedness on the corpus

const SAMPLES: usize = 1000;
const SAMPLE_SEED: u64 = 0x7e57_4100;

#[derive(Clone, Copy, Debug)]
enum Family {
    Barycentric,
    Edgewise(usize),
    Colored(usize),
}

#[derive(Clone)]
struct Case {
    family: Family,
    n: usize,
    certifier: Arc<Certifier>,
}

impl Case {
    fn name(&self) -> String {
        match self.family {
            Family::Barycentric => format!("barycentric n={}", self.n),
            Family::Edgewise(r) => format!("esd_{r} n={}", self.n),
            Family::Colored(r) => format!("F_{r} n={}", self.n),
        }
    }
}

fn theorem_corpus() -> Result<Vec<Case>, String> {
    let mut specs = Vec::new();
    for n in 1..=6 {
        specs.push((Family::Barycentric, n));
    }
    for n in 1..=5 {
        for r in [n, n + 1] {
            specs.push((Family::Edgewise(r), n));
        }
        for r in 2..=4 {
            specs.push((Family::Colored(r), n));
        }
    }
    specs
        .into_par_iter()
        .map(|(family, n)| {
            let table = match family {
                Family::Barycentric => (*barycentric_table(n)).clone(),
                Family::Edgewise(r) => {
                    PRowTable::build(&*FTriangle::cached(Construction::Edgewise(r), n).map_err(err)?, n).map_err(err)?
                }
                Family::Colored(r) => {
                    PRowTable::build(&*FTriangle::cached(Construction::Colored(r), 5).map_err(err)?, n).map_err(err)?
                }
            };
            Ok(Case { family, n, certifier: Arc::new(Certifier::new(table)) })
        })
        .collect()
}

/// The hypothesis-satisfying samples for one case; identical on every call.
fn samples(case_index: usize, n: usize, variant: Variant, ratio: bool) -> Vec<Poly> {
    let tag = (case_index as u64) << 8 | (variant == Variant::B) as u64 * 2 | ratio as u64;
    let mut g = rng(SAMPLE_SEED ^ tag);
    (0..SAMPLES).map(|_| sample_h(&mut g, n, variant, ratio, 9)).collect()
}

fn unconstrained(case_index: usize, n: usize) -> Vec<Poly> {
    let mut g = rng(SAMPLE_SEED ^ ((case_index as u64) << 8 | 0xff));
    (0..SAMPLES)
        .map(|_| Poly::new((0..=n).map(|_| rat(g.gen_range(0..=9))).collect()))
        .collect()
}

fn hypothesis_holds(cert: &Certificate) -> bool {
    cert.hypothesis_report
        .iter()
        .filter(|h| {
            !["conclusion", "theorem", "ratio", "pairwise"].iter().any(|p| h.name.starts_with(p))
        })
        .all(|h| h.holds)
}

/// Tallies for one block of samples.
#[derive(Default)]
struct Tally {
    certified: usize,
    literal_ratio: usize,
    literal_failures: usize,
    chain_ratio: usize,
    chain_failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.certified += other.certified;
        self.literal_ratio += other.literal_ratio;
        self.literal_failures += other.literal_failures;
        self.chain_ratio += other.chain_ratio;
        self.chain_failures += other.chain_failures;
        self.first_failure = self.first_failure.or(other.first_failure);
        self
    }
}

/// Nonnegativity and real-rootedness must hold on every sample. Interlacing is
/// checked under the adjacent ratio inequalities exactly as stated, and
/// separately under the pairwise ratio chain.
fn decomposition_theorem(corpus: &[Case]) -> Outcome {
    let jobs: Vec<(usize, Variant, bool)> = (0..corpus.len())
        .flat_map(|i| [Variant::A, Variant::B].into_iter().flat_map(move |v| [(i, v, false), (i, v, true)]))
        .collect();
    let tally = jobs
        .par_iter()
        .map(|&(i, variant, ratio)| -> Result<Tally, String> {
            let case = &corpus[i];
            let mut t = Tally::default();
            for h in samples(i, case.n, variant, ratio) {
                let cert = case.certifier.main_theorem(case.n, &h, variant).map_err(err)?;
                let where_ = || format!("{} variant {variant} h = {h}", case.name());
                ensure(hypothesis_holds(&cert), || format!("{}: hypotheses fail {:?}", where_(), cert.hypothesis_report))?;
                ensure(
                    matches!(cert.verdict, Verdict::NonnegSymDecomp | Verdict::InterlacingSymDecomp),
                    || format!("counterexample to nonnegativity or real-rootedness: {}: {}", where_(), cert.subject),
                )?;
                t.certified += 1;
                let lacing = cert.verdict == Verdict::InterlacingSymDecomp;
                let literal = cert.hypothesis_report.iter().filter(|h| h.name.starts_with("ratio")).all(|h| h.holds);
                let chain = cert.hypothesis("pairwise ratio chain") == Some(true);
                if literal {
                    t.literal_ratio += 1;
                    if !lacing {
                        t.literal_failures += 1;
                        if t.first_failure.is_none() {
                            t.first_failure = Some(format!("{}: {}", where_(), cert.subject));
                        }
                    }
                }
                if chain {
                    t.chain_ratio += 1;
                    t.chain_failures += usize::from(!lacing);
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let summary = format!(
        "{} (F,n) cases x 2 variants x {SAMPLES} h with and without ratio hypotheses: \
         {} nonnegative real-rooted decompositions, 0 counterexamples; \
         pairwise ratio chain: {} samples, {} not interlacing; \
         adjacent ratio inequalities as stated: {} samples, {} not interlacing",
        corpus.len(),
        tally.certified,
        tally.chain_ratio,
        tally.chain_failures,
        tally.literal_ratio,
        tally.literal_failures,
    );
    if tally.literal_failures + tally.chain_failures > 0 {
        let first = tally.first_failure.unwrap_or_default();
        return Err(format!("{summary}; first counterexample: {first}"));
    }
    Ok(summary)
}

fn operator_real_rootedness(corpus: &[Case]) -> Outcome {
    let counts: Vec<usize> = (0..corpus.len())
        .into_par_iter()
        .map(|i| -> Result<usize, String> {
            let case = &corpus[i];
            let n = case.n;
            let mut inputs = unconstrained(i, n);
            for variant in [Variant::A, Variant::B] {
                for ratio in [false, true] {
                    inputs.extend(samples(i, n, variant, ratio));
                }
            }
            for h in &inputs {
                let image = match case.family {
                    Family::Barycentric => bary_d(n, h),
                    Family::Edgewise(r) => edgewise_u(n, r, h),
                    Family::Colored(r) => colored_d(n, r, h),
                }
                .map_err(err)?;
                let table_image = case.certifier.table().apply_df(n, h).map_err(err)?;
                ensure(image == table_image, || format!("{}: operator {image} vs table {table_image}", case.name()))?;
                let cert = is_real_rooted(&image);
                ensure(cert.holds() && witnesses_valid(&image, &cert.witnesses) || image.degree() == Some(0) || image.is_zero(), || {
                    format!("{}: h = {h}, image {image} not certified real-rooted", case.name())
                })?;
            }
            Ok(inputs.len())
        })
        .collect::<Result<_, _>>()?;
    Ok(format!(
        "D_n, U^n_r (r >= n), D_(n,r): {} nonnegative inputs certified real-rooted with rechecked witnesses",
        counts.iter().sum::<usize>()
    ))
}

// ---------------------------------------------------------------------------
// 7. Cubes and [0,2]^2

/// `A_n(x) = Σ_k A(n,k) x^k`, `A(n,k) = Σ_{j<=k} (-1)^j C(n+1,j) (k+1-j)^n`.
fn eulerian(n: usize) -> Poly {
    let coeff = |k: usize| -> BigInt {
        (0..=k)
            .map(|j| {
                let term = binomial(n + 1, j) * BigInt::from(k + 1 - j).pow(n as u32);
                if j % 2 == 0 { term } else { -term }
            })
            .sum()
    };
    Poly::new((0..n.max(1)).map(|k| Rational::from_integer(coeff(k))).collect())
}

fn cubes() -> Outcome {
    let mut counts = 0;
    for n in 1..=4 {
        let cube = Zonotope::cube(n, 1);
        let hs = hstar(&cube).map_err(err)?;
        ensure(hs == eulerian(n), || format!("h*(cube {n}) = {hs} but A_{n} = {}", eulerian(n)))?;
        let ehr = ehrhart_polynomial(&cube);
        for m in 1..=3u32 {
            let brute = count_lattice_points(&cube, m).map_err(err)?;
            let formula = ehr.eval(&rat(m as i64));
            ensure(Rational::from_integer(brute.into()) == formula && brute == (m as u64 + 1).pow(n as u32), || {
                format!("cube {n} dilate {m}: brute {brute}, formula {formula}")
            })?;
            counts += 1;
        }
        for r in 1..=3 {
            let h = hstar_r(&cube, r).map_err(err)?;
            let c = is_real_rooted(&h);
            ensure(c.holds() && witnesses_valid(&h, &c.witnesses), || format!("h*_{r}(cube {n}) = {h} not real-rooted"))?;
            let cert = certify_zonotope(&cube, r).map_err(err)?;
            ensure(cert.holds(), || format!("cube {n} r={r}: {:?}", cert.hypothesis_report))?;
        }
    }
    let square = Zonotope::cube(2, 2);
    for r in 1..=3 {
        let cert = certify_zonotope(&square, r).map_err(err)?;
        ensure(cert.holds(), || format!("[0,2]^2 r={r}: {:?}", cert.hypothesis_report))?;
        let b = cert.part("(b)").ok_or("[0,2]^2: no decomposition part")?;
        ensure(matches!(b.verdict, Verdict::NonnegSymDecomp | Verdict::InterlacingSymDecomp), || {
            format!("[0,2]^2 r={r}: {}", b.subject)
        })?;
    }
    Ok(format!("cubes n <= 4 Eulerian, {counts} brute-force counts agree, h*_r real-rooted r <= 3, [0,2]^2 decomposition certified r <= 3"))
}

// ---------------------------------------------------------------------------
// 8. Skeleton theorem

const GAMMA_SEED: u64 = 0x5ce1_e704;
const GAMMAS: usize = 50;

fn skeleton() -> Outcome {
    let mut specs = Vec::new();
    for n in 1..=4 {
        specs.push((format!("barycentric n={n}"), Construction::Barycentric, n));
        for r in 2..=3 {
            specs.push((format!("F_{r} n={n}"), Construction::Colored(r), n));
        }
        for r in [n + 1, n + 2] {
            specs.push((format!("esd_{r} n={n}"), Construction::Edgewise(r), n));
        }
    }
    let total: usize = specs
        .par_iter()
        .enumerate()
        .map(|(i, (name, construction, n))| -> Result<usize, String> {
            let n = *n;
            let f = FTriangle::cached(*construction, n + 1).map_err(err)?;
            let certifier = Certifier::from_ftriangle(&f, n + 1).map_err(err)?;
            let mut g = rng(GAMMA_SEED ^ i as u64);
            for _ in 0..GAMMAS {
                let mut gamma: Vec<Rational> = (0..n + 2).map(|_| rat(g.gen_range(0..=9))).collect();
                gamma[0] = rat(1);
                let cert = certifier.skeleton(&gamma, n).map_err(err)?;
                let label = || format!("{name}, Γ h-vector {}", Poly::new(gamma.clone()));
                ensure(cert.verdict == Verdict::Certified, || format!("{}: {:?}", label(), cert.hypothesis_report))?;
                let a = cert.part("(a)").ok_or("missing part (a)")?;
                ensure(a.verdict == Verdict::InterlacingSymDecomp, label)?;
                let b = cert.part("(b)").ok_or("missing part (b)")?;
                ensure(b.verdict == Verdict::Interlaces, label)?;
            }
            Ok(GAMMAS)
        })
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .sum();
    Ok(format!("{} (F,n) pairs x {GAMMAS} Γ h-vectors: {total} skeleton certificates", specs.len()))
}

// ---------------------------------------------------------------------------

fn run<T>(f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(outcome) => outcome,
        Err(payload) => Err(payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    }
}

fn report(id: u8, title: &str, limit: Duration, elapsed: Duration, outcome: Outcome) -> bool {
    let outcome = outcome.and_then(|detail| {
        if elapsed <= limit {
            Ok(detail)
        } else {
            Err(format!("{detail}; runtime {elapsed:.2?} exceeds {limit:?}"))
        }
    });
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("[{tag}] criterion {id}: {title} ({elapsed:.2?}): {detail}");
    outcome.is_ok()
}

fn timed(f: impl FnOnce() -> Outcome) -> (Duration, Outcome) {
    let start = Instant::now();
    let outcome = run(f);
    (start.elapsed(), outcome)
}

fn main() {
    // Let libtest-style filters such as `--list` pass without running anything.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let secs = Duration::from_secs;
    let mut ok = true;

    let (t, o) = timed(table_one);
    ok &= report(1, "Table 1 reproduction", secs(1), t, o);
    let (t, o) = timed(operators_vs_constructions);
    ok &= report(2, "operators against constructions", secs(120), t, o);
    let (t, o) = timed(engine_consistency);
    ok &= report(3, "engine consistency", secs(60), t, o);
    let (t, o) = timed(strong_interlacing);
    ok &= report(4, "strong interlacing of F_r", secs(120), t, o);

    let start = Instant::now();
    let corpus = run(theorem_corpus);
    let setup = start.elapsed();
    match corpus {
        Ok(corpus) => {
            let (t5, o) = timed(|| decomposition_theorem(&corpus));
            ok &= report(5, "decomposition theorem property suite", secs(600), setup + t5, o);
            let (t6, o) = timed(|| operator_real_rootedness(&corpus));
            ok &= report(6, "operator real-rootedness", secs(600), setup + t5 + t6, o);
        }
        Err(e) => {
            ok &= report(5, "decomposition theorem property suite", secs(600), setup, Err(e.clone()));
            ok &= report(6, "operator real-rootedness", secs(600), setup, Err(e));
        }
    }

    let (t, o) = timed(cubes);
    ok &= report(7, "cubes and [0,2]^2", secs(60), t, o);
    let (t, o) = timed(skeleton);
    ok &= report(8, "skeleton theorem", secs(180), t, o);

    if !ok {
        std::process::exit(1);
    }
}
