//! One pass/fail line per acceptance criterion. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rrca::cherednik::{
    euler_families, ggor_on_hyperplane, ggor_to_c, named_parametrisation, naive_rewrite_product, CherednikAlgebra,
    CherednikParameter, GgorParameter, PbwElement,
};
use rrca::exactalg::{ExactMatrix, FieldSpec, Scalar, SparseVec};
use rrca::lift::{abstract_structure, concretize, gordon, modfinder, GordonOptions, LiftError};
use rrca::meataxe::{chop, is_irreducible, is_isomorphic, radical, FpMat, FpModule, Irreducibility, Subspace};
use rrca::refgroup::{load_group, ReflectionGroup, Side};
use rrca::restricted::RestrictedAlgebra;
use rrca::verma::{check_module_relations, verma_module, GradedModule};
use rrca_cli::GordonRecord;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn group(id: &str) -> ReflectionGroup {
    load_group(id).expect("shipped group")
}

fn g4_on(form: &str) -> (ReflectionGroup, Vec<Scalar>) {
    let g = group("G4");
    let k = ggor_on_hyperplane(&g, form).expect("hyperplane");
    let c = ggor_to_c(&g, &k);
    (g, c)
}

fn b2_euler_identity() -> Outcome {
    let g = group("B2");
    let c = named_parametrisation(&g, "BR").map_err(|e| e.to_string())?;
    let f = c[0].field().clone();
    let param = CherednikParameter::at_t_zero(&g, c).map_err(|e| e.to_string())?;
    let alg = CherednikAlgebra::new(Arc::new(g), param).map_err(|e| e.to_string())?;
    let p = |a: &PbwElement, b: &PbwElement| alg.product(a, b);
    let sq = |a: &PbwElement| alg.product(a, a);
    let k = |n: i64| alg.scalar(Scalar::from_int(&f, n));
    let a2 = sq(&alg.scalar(Scalar::variable(&f, "C1").ok_or("no C1")?));
    let b2 = sq(&alg.scalar(Scalar::variable(&f, "C2").ok_or("no C2")?));
    let sigma = sq(&alg.y(0)).add(&sq(&alg.y(1)));
    let pi = p(&sq(&alg.y(0)), &sq(&alg.y(1)));
    let big_sigma = sq(&alg.x(0)).add(&sq(&alg.x(1)));
    let big_pi = p(&sq(&alg.x(0)), &sq(&alg.x(1)));
    let eu2 = sq(&alg.euler_element());
    let eu4 = sq(&eu2);
    let eu6 = p(&eu4, &eu2);
    let eu8 = sq(&eu4);
    let ss = p(&sigma, &big_sigma);
    let s2 = sq(&sigma);
    let bs2 = sq(&big_sigma);
    let s2bp = p(&s2, &big_pi);
    let bs2p = p(&bs2, &pi);
    let ppi = p(&pi, &big_pi);
    let c6 = ss.add(&p(&k(4), &a2)).add(&p(&k(4), &b2)).scale(&Scalar::from_int(&f, -2));
    let c4 = p(&s2, &bs2)
        .add(&s2bp.add(&bs2p).sub(&p(&k(8), &ppi)).scale(&Scalar::from_int(&f, 2)))
        .add(&p(&p(&k(8), &a2.add(&b2)), &ss))
        .add(&p(&k(16), &sq(&a2.sub(&b2))));
    let inner = ss.add(&p(&k(4), &a2)).sub(&p(&k(4), &b2));
    let c2 = p(&inner, &s2bp.add(&bs2p))
        .sub(&p(&k(8), &p(&ss, &ppi)))
        .add(&p(&p(&k(2), &b2), &p(&s2, &bs2)))
        .scale(&Scalar::from_int(&f, -2));
    let c0 = sq(&s2bp.sub(&bs2p));
    let total = eu8.add(&p(&c6, &eu6)).add(&p(&c4, &eu4)).add(&p(&c2, &eu2)).add(&c0);
    ensure!(total.is_zero(), "degree-8 polynomial in eu is not zero ({} terms remain)", total.terms().len());
    Ok("eu is a zero of the degree-8 polynomial".into())
}

fn g4_parameter_map() -> Outcome {
    let g = group("G4");
    let k = GgorParameter::generic(&g);
    let c = ggor_to_c(&g, &k);
    let f = k.field();
    let want = [
        Scalar::parse(f, "(-z3+1)*k1_1 + (2*z3+1)*k1_2").map_err(|e| e.to_string())?,
        Scalar::parse(f, "(z3+2)*k1_1 + (-2*z3-1)*k1_2").map_err(|e| e.to_string())?,
    ];
    ensure!(c == want, "c = {:?}", c.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    Ok(format!("c(1) = {}, c(2) = {}", c[0], c[1]))
}

fn g4_euler_families() -> Outcome {
    let g = group("G4");
    let k = ggor_on_hyperplane(&g, "k1_1-k1_2").map_err(|e| e.to_string())?;
    let f = k.field().clone();
    let c = ggor_to_c(&g, &k);
    let label = |i: &usize| g.labels()[*i].to_string();
    let got: BTreeSet<(BTreeSet<String>, String)> =
        euler_families(&g, &c).into_iter().map(|(m, s)| (m.iter().map(label).collect(), s.to_string())).collect();
    let fam = |names: &[&str], s: &str| {
        (names.iter().map(|n| n.to_string()).collect::<BTreeSet<_>>(), Scalar::parse(&f, s).unwrap().to_string())
    };
    let want: BTreeSet<_> = [
        fam(&["phi_{1,0}"], "8*k"),
        fam(&["phi_{1,4}", "phi_{1,8}", "phi_{2,5}"], "-4*k"),
        fam(&["phi_{3,2}"], "0"),
        fam(&["phi_{2,3}", "phi_{2,1}"], "2*k"),
    ]
    .into_iter()
    .collect();
    ensure!(got == want, "families {got:?}");
    Ok("4 families with scalars 8k, -4k, 0, 2k".into())
}

fn g4_vermas() -> Outcome {
    let (g, c) = g4_on("k1_1-k1_2");
    let p = CherednikParameter::at_t_zero(&g, c).map_err(|e| e.to_string())?;
    let m = verma_module(&g, &p, 1).map_err(|e| e.to_string())?;
    ensure!(m.dim() == 24, "dim Delta(phi_{{1,4}}) = {}", m.dim());
    ensure!(m.generator_degrees() == [-1, -1, 0, 0, 1, 1], "generator degrees {:?}", m.generator_degrees());
    let big = verma_module(&g, &p, 6).map_err(|e| e.to_string())?;
    ensure!(big.dim() == 72, "dim Delta(phi_{{3,2}}) = {}", big.dim());
    Ok("dims 24 and 72, generator degrees [-1,-1,0,0,1,1]".into())
}

fn family_options(seed: u64) -> GordonOptions {
    // y1, y2, g2 as ModFinder generators; the record layout is y1 y2 g1 g2 x1 x2
    GordonOptions {
        families: Some(vec![vec![1, 2, 3]]),
        gset: Some(vec![0, 1, 3]),
        exclude_primes: vec![2, 3, 5],
        seed,
        ..Default::default()
    }
}

fn record(form: &str, opts: &GordonOptions) -> Result<GordonRecord, String> {
    let (g, c) = g4_on(form);
    let r = gordon(&g, c, opts).map_err(|e| e.to_string())?;
    Ok(GordonRecord::from_result(&g, form, opts.seed, &r))
}

fn g4_family_run() -> Outcome {
    let r = record("k1_1-k1_2", &family_options(1))?;
    ensure!(r.simple_dims == [9, 1, 7], "dims {:?}", r.simple_dims);
    ensure!(r.simple_pseries == ["1+2t+3t^2+2t^3+t^4", "1", "2+3t+2t^2"], "P-series {:?}", r.simple_pseries);
    ensure!(
        r.verma_decomposition == [[1, 1, 2], [1, 1, 2], [2, 2, 4]],
        "D = {:?}",
        r.verma_decomposition
    );
    let want = [
        ["t^4", "1", "0", "0", "0", "t+t^3", "t^2"],
        ["0", "0", "1", "0", "0", "0", "0"],
        ["0", "0", "0", "1", "t^2", "0", "t"],
    ];
    ensure!(r.simple_graded_gmod_struct == want, "graded structure {:?}", r.simple_graded_gmod_struct);
    let draws: usize = r.specializations.iter().map(|s| s.draws).sum();
    ensure!(draws <= 6, "{draws} specialization draws");
    Ok(format!("dims [9,1,7], D = [[1,1,2],[1,1,2],[2,2,4]], p = {}, {} draw(s)", r.specializations[0].p, draws))
}

fn g4_full_record() -> Outcome {
    let r = record("k1_1-k1_2", &GordonOptions::default())?;
    ensure!(r.simple_dims == [24, 9, 1, 7, 8, 16, 24], "dims {:?}", r.simple_dims);
    let want = vec![
        vec![1, 0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 2, 0, 0, 0],
        vec![0, 1, 1, 2, 0, 0, 0],
        vec![0, 2, 2, 4, 0, 0, 0],
        vec![0, 0, 0, 0, 2, 2, 0],
        vec![0, 0, 0, 0, 2, 2, 0],
        vec![0, 0, 0, 0, 0, 0, 3],
    ];
    ensure!(r.verma_decomposition == want, "D = {:?}", r.verma_decomposition);
    let fams: BTreeSet<BTreeSet<usize>> = r.cm_families.iter().map(|f| f.iter().copied().collect()).collect();
    let want: BTreeSet<BTreeSet<usize>> =
        [vec![1], vec![2, 3, 4], vec![7], vec![5, 6]].into_iter().map(|f| f.into_iter().collect()).collect();
    ensure!(fams == want, "CM families {:?}", r.cm_families);
    Ok("SimpleDims, VermaDecomposition and CMFamilies match".into())
}

fn g4_non_palindromic() -> Outcome {
    let r = record("k1_1-2*k1_2", &GordonOptions::default())?;
    let i = r.simple_pseries.iter().position(|p| p == "1+2t");
    ensure!(i.is_some(), "P-series {:?}", r.simple_pseries);
    Ok(format!("head of Delta({}) has P-series 1+2t", r.labels[i.unwrap()]))
}

fn generic_algebra(g: &Arc<ReflectionGroup>) -> Result<CherednikAlgebra, String> {
    let names: Vec<String> = (1..=g.num_reflection_classes()).map(|i| format!("C{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let f = FieldSpec::poly_ring(g.field(), &refs);
    let c = names.iter().map(|n| Scalar::variable(&f, n).unwrap()).collect();
    let param = CherednikParameter::at_t_zero(g, c).map_err(|e| e.to_string())?;
    CherednikAlgebra::new(g.clone(), param).map_err(|e| e.to_string())
}

fn random_element(alg: &CherednikAlgebra, rng: &mut ChaCha8Rng) -> PbwElement {
    let n = alg.rank();
    let f = alg.field().clone();
    let mut e = alg.zero();
    for _ in 0..3 {
        let (mut a, mut b) = (vec![0u32; n], vec![0u32; n]);
        for _ in 0..rng.gen_range(0..=2) {
            let side = if rng.gen_bool(0.5) { &mut a } else { &mut b };
            side[rng.gen_range(0..n)] += 1;
        }
        let h = rng.gen_range(0..alg.group().order());
        e = e.add(&PbwElement::term(&f, &a, &b, h, Scalar::from_int(&f, rng.gen_range(-3..=3))));
    }
    e
}

const P: u64 = 10007;

fn random_simple(rng: &mut ChaCha8Rng, n: usize) -> FpModule {
    loop {
        let gens = (0..2)
            .map(|_| {
                let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..P)).collect()).collect();
                FpMat::from_rows(P, n, &rows)
            })
            .collect();
        let m = FpModule::new(P, n, gens, None);
        if matches!(is_irreducible(&m, rng), Ok(Irreducibility::Irreducible)) {
            return m;
        }
    }
}

/// Bottom simples, then top simples, with random blocks coupling top to bottom.
fn planted_fp(rng: &mut ChaCha8Rng, bottom: &[FpModule], top: &[FpModule]) -> FpModule {
    let parts: Vec<&FpModule> = bottom.iter().chain(top).collect();
    let n: usize = parts.iter().map(|m| m.dim()).sum();
    let nb: usize = bottom.iter().map(|m| m.dim()).sum();
    let gens = (0..2)
        .map(|k| {
            let mut g = FpMat::zero(P, n, n);
            let mut off = 0;
            for m in &parts {
                let a = &m.generators()[k];
                for i in 0..m.dim() {
                    for j in 0..m.dim() {
                        g.set(off + i, off + j, a.get(i, j));
                    }
                }
                off += m.dim();
            }
            for i in 0..nb {
                for j in nb..n {
                    g.set(i, j, rng.gen_range(0..P));
                }
            }
            g
        })
        .collect();
    FpModule::new(P, n, gens, None)
}

fn meataxe_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let draw = |rng: &mut ChaCha8Rng| -> Vec<FpModule> {
        (0..rng.gen_range(1..=2)).map(|_| { let d = rng.gen_range(1..=3); random_simple(rng, d) }).collect()
    };
    let bottom = draw(rng);
    let top = draw(rng);
    let m = planted_fp(rng, &bottom, &top);
    let nb: usize = bottom.iter().map(|s| s.dim()).sum();
    let planted = Subspace::spanned_by(P, m.dim(), (0..nb).map(|i| (0..m.dim()).map(|k| u64::from(k == i)).collect()));
    let rad = radical(&m, rng).map_err(|e| e.to_string())?;
    ensure!(rad == planted, "radical of dimension {} instead of {nb}", rad.basis().len());
    let factors = chop(&m, rng).map_err(|e| e.to_string())?;
    let mut left: Vec<&FpModule> = bottom.iter().chain(&top).collect();
    for (s, k) in &factors {
        for _ in 0..*k {
            let i = left.iter().position(|t| is_isomorphic(s, t)).ok_or("unplanted composition factor")?;
            left.remove(i);
        }
    }
    ensure!(left.is_empty(), "{} planted factors missing", left.len());
    Ok(())
}

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(&q(), n)
}

/// Graded module over Q with a planted submodule of complexity 1..=5.
fn planted_submodule(rng: &mut ChaCha8Rng) -> (GradedModule, ExactMatrix) {
    let f = q();
    loop {
        let sizes: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
        let n: usize = sizes.iter().sum();
        let degrees: Vec<i32> = sizes.iter().enumerate().flat_map(|(d, &k)| vec![d as i32; k]).collect();
        let pool: Vec<i64> = [3, -1, 4, -5, 2][..rng.gen_range(1..=5)].to_vec();
        let mut cols: Vec<SparseVec> = vec![];
        let mut start = 0;
        for &k in &sizes {
            let mut rows: Vec<usize> = (start..start + k).collect();
            let keep = rng.gen_range(0..=k);
            while rows.len() > keep {
                rows.remove(rng.gen_range(0..rows.len()));
            }
            for &p in &rows {
                let mut c: SparseVec = [(p, int(1))].into_iter().collect();
                for r in (p + 1..start + k).filter(|r| !rows.contains(r)) {
                    if rng.gen_bool(0.6) {
                        c.insert(r, int(pool[rng.gen_range(0..pool.len())]));
                    }
                }
                cols.push(c);
            }
            start += k;
        }
        if cols.is_empty() || cols.len() == n {
            continue;
        }
        let u = ExactMatrix::from_columns(&f, n, cols.clone());
        let a = abstract_structure(&u).unwrap();
        if !(1..=5).contains(&a.complexity()) {
            continue;
        }
        let inside = cols.len();
        let mut basis = cols;
        basis.extend((0..n).filter(|i| !a.pivots().contains(i)).map(|i| [(i, int(1))].into_iter().collect()));
        let bdeg: Vec<i32> = basis.iter().map(|c| degrees[*c.keys().next().unwrap()]).collect();
        let b = ExactMatrix::from_columns(&f, n, basis);
        let binv = b.inverse().unwrap();
        let gen_degrees = vec![-1, 0, 1];
        let actions = gen_degrees
            .iter()
            .map(|&delta| {
                let cols = (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&i| bdeg[i] == bdeg[j] + delta && (j >= inside || i < inside))
                            .map(|i| (i, int([-2, -1, 1, 2][rng.gen_range(0..4)])))
                            .collect()
                    })
                    .collect();
                b.mul(&ExactMatrix::from_columns(&f, n, cols)).mul(&binv)
            })
            .collect();
        let names = vec!["y1".into(), "g1".into(), "x1".into()];
        return (GradedModule::new(&f, degrees, names, gen_degrees, actions).unwrap(), u);
    }
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ids = ["C2", "S3", "B2"];

    // (a) fast product against rewriting
    let mut pairs = 0;
    for id in ids {
        let alg = generic_algebra(&Arc::new(group(id)))?;
        for _ in 0..34 {
            let a = random_element(&alg, &mut rng);
            let b = random_element(&alg, &mut rng);
            ensure!(alg.product(&a, &b) == naive_rewrite_product(&alg, &a, &b), "(a) product differs on {id}");
            pairs += 1;
        }
    }

    // (b) Verma modules satisfy the defining relations
    let mut vermas = 0;
    for id in ids {
        let g = Arc::new(group(id));
        let alg = generic_algebra(&g)?;
        for j in 0..g.irreps().len() {
            let m = verma_module(&g, alg.parameter(), j).map_err(|e| e.to_string())?;
            ensure!(check_module_relations(&g, alg.parameter(), &m), "(b) relations fail on {id} irrep {j}");
            vermas += 1;
        }
    }

    // (c) dimensions of coinvariants and of the restricted algebra
    for id in ids {
        let g = Arc::new(group(id));
        ensure!(g.coinvariants(Side::X).dim() == g.order(), "(c) dim K[V]_G on {id}");
        ensure!(g.coinvariants(Side::Y).dim() == g.order(), "(c) dim K[V*]_G on {id}");
        let c = vec![Scalar::zero(g.field()); g.num_reflection_classes()];
        let r = RestrictedAlgebra::new(g.clone(), c).map_err(|e| e.to_string())?;
        ensure!(r.dim() == g.order().pow(3), "(c) dim of restricted algebra on {id}: {}", r.dim());
    }

    // (d) MeatAxe on planted block-triangular modules
    for i in 0..50 {
        meataxe_round_trip(&mut rng).map_err(|e| format!("(d) instance {i}: {e}"))?;
    }

    // (e) ModFinder on planted submodules; an instance pinned only by a quadratic
    // equation is reported as not linearly solvable and replaced
    let (mut recovered, mut stuck) = (0, 0);
    while recovered < 50 {
        let (m, u) = planted_submodule(&mut rng);
        match modfinder(&m, &abstract_structure(&u).unwrap(), &[0]) {
            Ok(found) => {
                ensure!(found == u, "(e) wrong submodule recovered");
                recovered += 1;
            }
            Err(LiftError::NotLinearlySolvable) => stuck += 1,
            Err(e) => return Err(format!("(e) {e}")),
        }
    }
    ensure!(stuck <= 2, "(e) {stuck} planted instances not linearly solvable");

    // (f) abstract structure of a concretization
    for _ in 0..50 {
        let (_, u) = planted_submodule(&mut rng);
        let a = abstract_structure(&u).unwrap();
        let mut values: Vec<i64> = (1..=40).collect();
        let theta: Vec<Scalar> =
            (0..a.complexity()).map(|_| int(values.remove(rng.gen_range(0..values.len())))).collect();
        let c = concretize(&a, &q(), &theta).map_err(|e| e.to_string())?;
        ensure!(abstract_structure(&c).unwrap() == a, "(f) structure not recovered");
    }

    Ok(format!(
        "{pairs} product pairs, {vermas} Vermas, dims, 50 MeatAxe, 50 ModFinder ({stuck} replaced), 50 structures"
    ))
}

fn determinism() -> Outcome {
    let runs: [(&str, GordonOptions); 3] = [
        ("k1_1-k1_2", family_options(5)),
        ("k1_1-k1_2", GordonOptions { seed: 5, ..Default::default() }),
        ("k1_1-2*k1_2", GordonOptions { seed: 5, ..Default::default() }),
    ];
    for (form, opts) in &runs {
        let first = record(form, opts)?.to_toml().map_err(|e| e.to_string())?;
        let second = record(form, opts)?.to_toml().map_err(|e| e.to_string())?;
        ensure!(first == second, "records at {form} differ between runs");
    }
    Ok("records of the family run, full record and 1+2t run are byte-identical".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("B2 Euler polynomial identity", b2_euler_identity, Duration::from_secs(60)),
        ("G4 parameter map", g4_parameter_map, Duration::from_secs(1)),
        ("G4 Euler families at k1=k2", g4_euler_families, Duration::from_secs(5)),
        ("G4 Verma construction", g4_vermas, Duration::from_secs(60)),
        ("G4 family {2,3,4} run", g4_family_run, Duration::from_secs(600)),
        ("G4 full hyperplane record", g4_full_record, Duration::from_secs(1800)),
        ("G4 non-palindromic head", g4_non_palindromic, Duration::from_secs(1800)),
        ("property suite on C2, S3, B2", property_suite, Duration::from_secs(600)),
        ("determinism of records", determinism, Duration::from_secs(3600)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let t = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if t > *budget => Err(format!("{msg}, but took {t:.2?} (budget {budget:?})")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg} [{t:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
