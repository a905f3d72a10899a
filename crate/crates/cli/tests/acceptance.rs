//! One line per acceptance criterion: PASS or FAIL, the elapsed time and its limit.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Zero;

use queer_core::enumerate::{diagrams, dominant_weights};
use queer_core::decompose::isotypicality_violations;
use queer_core::identities::check_cancellation_identities;
use queer_core::{
    decompose, depth, vanishing_predicate, Grid, Parity, Rat, Weight, XSpec,
};
use queer_oracle::algebra::{AlgebraKind, LieSuperalgebra};
use queer_oracle::classify::{predict, AlgebraClass};
use queer_oracle::ds::{ds_module, nilpotent_grading};
use queer_oracle::grothendieck::grothendieck_restriction_check;
use queer_oracle::hinich::hinich_check;
use queer_oracle::simple::{construct_simple, lower_singular_count};
use queer_oracle::sparse::Echelon;
use queer_oracle::{build_x, build_x_default, GModule, QElem, Q};
use queerds::json::Manifest;
use queerds::verify::{self, BUNDLED};

type Outcome = Result<String, String>;

fn r(a: i64) -> Rat {
    Rat::from_integer(a)
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seed() -> u64 {
    std::env::var("QUEERDS_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

fn golden_nilpotent() -> Outcome {
    let dec = decompose(&w(&[7, 4, 2, 0, -2, -4, -7]), &XSpec::nilpotent()).map_err(|e| e.to_string())?;
    let expected = [(w(&[7, 4, 0, -4, -7]), 1), (w(&[7, 2, 0, -2, -7]), 1), (w(&[4, 2, 0, -2, -4]), 2)];
    ensure(dec.entries.len() == 3, || format!("{} entries", dec.entries.len()))?;
    for (nu, g) in expected {
        let e = dec.entries.iter().find(|e| e.nu == nu).ok_or_else(|| format!("missing L{nu}"))?;
        let mut h = e.h.clone().ok_or("no grading")?;
        h.sort();
        ensure(e.mult == 2 && e.parity == Parity::Balanced && h == vec![r(-g), r(g)], || format!("L{nu}: {e:?}"))?;
    }
    Ok("three balanced entries, h = ±1, ±1, ±2".into())
}

fn golden_regimes() -> Outcome {
    let l = w(&[4, 1, 0, -1, -4]);
    let half = decompose(&l, &XSpec::rank_half(r(1)).unwrap()).map_err(|e| e.to_string())?;
    ensure(half.entries.len() == 1 && half.entries[0].nu == w(&[4, 1, -1, -4]) && half.entries[0].mult == 1, || format!("rank 1/2: {half:?}"))?;
    let tz = decompose(&l, &XSpec::semisimple(&[r(1), r(-1)]).unwrap()).map_err(|e| e.to_string())?;
    ensure(tz.entries.len() == 1 && tz.entries[0].nu == w(&[1, 0, -1]) && tz.entries[0].mult == 2, || format!("trace 0: {tz:?}"))?;
    let tn = decompose(&l, &XSpec::semisimple(&[r(1), r(1)]).unwrap()).map_err(|e| e.to_string())?;
    ensure(tn.is_zero(), || format!("trace != 0: {tn:?}"))?;
    Ok("L(4,1,-1,-4); 2 x L(1,0,-1); 0".into())
}

fn vanishing_lists() -> Outcome {
    let scan = |n: usize, keep: &dyn Fn(&Weight) -> bool| -> BTreeSet<String> {
        let mut all = dominant_weights(n, 5, true);
        // Weights of atypicality 1/2 vanish trivially under integral rank, so "atypical"
        // here means at least one pair of opposite coordinates.
        all.retain(|l| l.opposite_pairs() > 0 && keep(l) && vanishing_predicate(l));
        all.iter().map(|l| l.to_string()).collect()
    };
    let names = |ws: Vec<Vec<i64>>| -> BTreeSet<String> { ws.iter().map(|c| w(c).to_string()).collect() };

    let q3 = scan(3, &|_| true);
    ensure(q3 == names(vec![vec![1, 0, -1]]), || format!("q3: {q3:?}"))?;

    // The printed (2,0,-1,2) is read as (2,0,-1,-2).
    let mut q4_expected = vec![vec![2, 0, -1, -2], vec![2, 1, 0, -2]];
    for a in 2..=5 {
        q4_expected.push(vec![a, 1, 0, -1]);
        q4_expected.push(vec![1, 0, -1, -a]);
    }
    let q4 = scan(4, &|_| true);
    ensure(q4 == names(q4_expected), || format!("q4: {q4:?}"))?;
    ensure(!w(&[2, 0, -1, 2]).is_dominant(), || "(2,0,-1,2) should not be dominant".into())?;

    let q5 = scan(5, &|l| l.opposite_pairs() == 2);
    ensure(q5 == names(vec![vec![2, 1, 0, -1, -2], vec![3, 1, 0, -1, -3]]), || format!("q5: {q5:?}"))?;
    Ok(format!("q3: {}, q4: {}, q5: {} weights", q3.len(), q4.len(), q5.len()))
}

fn manifest() -> Manifest {
    verify::parse_manifest(BUNDLED).expect("bundled manifest parses")
}

fn oracle_adjoint() -> Outcome {
    let m = manifest();
    let mut covered = BTreeSet::new();
    for case in &m.cases {
        let kind = AlgebraKind::parse(&case.kind).ok_or("kind")?;
        let x = case.x.to_spec().map_err(|e| e.to_string())?;
        let res = verify::run_case(case).map_err(|e| e.to_string())?;
        ensure(res.pass, || format!("{}: expected {}, got {}", case.id, case.expected, res.got))?;
        let predicted = predict(kind, case.n, &x).map_err(|e| e.to_string())?;
        ensure(Some(predicted) == AlgebraClass::parse(&case.expected), || format!("{}: case analysis gives {predicted}", case.id))?;
        covered.insert((case.kind.clone(), x.support_size() == case.n, x.ss_coeffs().to_vec()));
    }
    let half = Rat::new(-1, 2);
    for c in [vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(1), r(1), half]] {
        ensure(covered.contains(&("psq".to_string(), true, c.clone())), || format!("no psq case for c = {c:?}"))?;
    }
    for kind in ["q", "sq", "pq", "psq"] {
        for full in [false, true] {
            ensure(covered.iter().any(|(k, f, _)| k == kind && *f == full), || format!("no {kind} case with full support = {full}"))?;
        }
    }
    Ok(format!("{} cases", m.cases.len()))
}

fn simples_specs() -> Vec<XSpec> {
    vec![XSpec::c_r(1), XSpec::nilpotent(), XSpec::semisimple(&[r(1), r(-1)]).unwrap(), XSpec::c_r(2)]
}

fn simples_weights() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![1, -1], vec![2, -2], vec![3, -3], vec![1, 0, -1], vec![2, 0, -2]]
}

fn graded_dims(lambda: &Weight, x: &XSpec) -> Result<BTreeMap<(Vec<i64>, i64), usize>, String> {
    let mut out = BTreeMap::new();
    for e in decompose(lambda, x).map_err(|e| e.to_string())?.entries {
        let ch: BTreeMap<Vec<i64>, usize> = if e.nu.n() == 0 {
            BTreeMap::from([(Vec::new(), 1)])
        } else {
            construct_simple::<Q>(&e.nu).map_err(|e| e.to_string())?.character().into_iter().map(|(k, (a, b))| (k, a + b)).collect()
        };
        let hs: Vec<i64> = e.h.map_or(vec![0; e.mult as usize], |h| h.iter().map(|v| v.to_integer()).collect());
        for h in hs {
            for (k, d) in &ch {
                *out.entry((k.clone(), h)).or_default() += d;
            }
        }
    }
    Ok(out)
}

fn oracle_simples() -> Outcome {
    // Total dimension of DS_x L(lambda) for the x of `simples_specs`, frozen from the oracle.
    let table: [(Vec<i64>, [usize; 4]); 6] = [
        (vec![0, 0], [1, 1, 1, 1]),
        (vec![1, -1], [0, 2, 2, 0]),
        (vec![2, -2], [0, 2, 2, 0]),
        (vec![3, -3], [0, 2, 2, 0]),
        (vec![1, 0, -1], [6, 0, 0, 0]),
        (vec![2, 0, -2], [10, 2, 2, 0]),
    ];
    let mut checked = 0;
    for (l, dims) in table {
        let lw = w(&l);
        let m = construct_simple::<Q>(&lw).map_err(|e| e.to_string())?;
        ensure(lower_singular_count(&m, &l) == 0, || format!("L{lw} not simple"))?;
        for (x, dim) in simples_specs().into_iter().zip(dims) {
            let xe = build_x_default::<Q>(&x, l.len()).map_err(|e| e.to_string())?;
            let grading = if x.ss_coeffs().is_empty() { nilpotent_grading(&xe) } else { None };
            let ds = ds_module(&m, &xe, grading.as_deref()).map_err(|e| e.to_string())?;
            ds.module.check_axioms().map_err(|e| format!("DS L{lw}, {x}: {e}"))?;
            let h = ds.h.clone().unwrap_or_else(|| vec![0; ds.reps.len()]);
            let mut got = BTreeMap::new();
            for (k, d) in ds.module.weights.iter().zip(h) {
                *got.entry((k.clone(), d)).or_default() += 1usize;
            }
            ensure(ds.reps.len() == dim, || format!("dim DS L{lw}, {x} = {}, expected {dim}", ds.reps.len()))?;
            let want = graded_dims(&lw, &x)?;
            ensure(got == want, || format!("L{lw}, {x}: oracle {got:?}, decompose {want:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (lambda, x) pairs"))
}

fn zigzag() -> Outcome {
    let s = verify::zigzag_suite(seed(), 200);
    ensure(s.failures.is_empty(), || format!("{:?}", s.failures))?;
    Ok(format!("{} modules, seed {}", s.cases, seed()))
}

fn hinich() -> Outcome {
    let s = verify::hinich_suite(seed(), 100);
    ensure(s.failures.is_empty(), || format!("{:?}", s.failures))?;
    let half = Rat::new(-1, 2);
    let ss = |c: &[Rat]| XSpec::semisimple(c).unwrap();
    let cases = [
        (2, XSpec::nilpotent()),
        (2, ss(&[r(1), r(1)])),
        (2, ss(&[r(1), r(-1)])),
        (3, XSpec::new(1, vec![r(2)]).unwrap()),
        (3, ss(&[r(1), r(1), half])),
        (3, ss(&[r(1), r(2), r(3)])),
        (4, XSpec::new(2, vec![]).unwrap()),
        (4, XSpec::new(1, vec![r(1), r(-1)]).unwrap()),
        (4, ss(&[r(1), r(1), r(1), r(1)])),
    ];
    let seq = cases.len();
    for (n, x) in cases {
        let g = LieSuperalgebra::<Q>::new(AlgebraKind::SQ, n);
        let adj = g.adjoint_module();
        let centre = Echelon::from_vectors([g.coords(&QElem::identity(n)).ok_or("T_Id not in sq")?]);
        let xe = build_x::<Q>(&x, n, &(0..n).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        let rep = hinich_check(&adj, &centre, &xe).map_err(|e| e.to_string())?;
        let y_in_sq = x.p1().is_zero();
        ensure(rep.holds(), || format!("sq({n}), {x}: {rep:?}"))?;
        ensure(rep.ds_sub == (1, 0) && rep.ds_total == (1, 0), || format!("sq({n}), {x}: {rep:?}"))?;
        ensure(rep.y == if y_in_sq { (1, 0) } else { (0, 0) }, || format!("sq({n}), {x}: Y = {:?}", rep.y))?;
        ensure(rep.ds_quotient == if y_in_sq { (1, 1) } else { (0, 0) }, || format!("sq({n}), {x}: DS(psq) = {:?}", rep.ds_quotient))?;
    }
    Ok(format!("{} random pairs, {seq} centre sequences", s.cases))
}

fn cancellation() -> Outcome {
    let mut fam = diagrams(Grid::Integral, 5, 7);
    fam.extend(diagrams(Grid::HalfIntegral, 5, 7));
    let rep = check_cancellation_identities(&fam);
    ensure(rep.violations.is_empty(), || format!("{} violations, first {:?}", rep.violations.len(), rep.violations.first()))?;
    Ok(format!("{} diagrams, {} instances", fam.len(), rep.checked))
}

fn restriction() -> Outcome {
    let m = manifest();
    let mut specs: Vec<XSpec> = Vec::new();
    for case in &m.cases {
        let x = case.x.to_spec().map_err(|e| e.to_string())?;
        if x.rank() <= r(1) && !specs.contains(&x) {
            specs.push(x);
        }
    }
    let mut modules: Vec<(String, GModule<Q>)> = Vec::new();
    for n in 2..=4 {
        modules.push((format!("V(q{n})"), GModule::standard(n)));
    }
    for n in 2..=3 {
        modules.push((format!("ad(q{n})"), LieSuperalgebra::<Q>::new(AlgebraKind::Q, n).adjoint_module()));
    }
    for l in simples_weights() {
        modules.push((format!("L{}", w(&l)), construct_simple::<Q>(&w(&l)).map_err(|e| e.to_string())?));
    }
    let mut checks = 0;
    for (name, module) in &modules {
        for x in &specs {
            if x.support_size() > module.n {
                continue;
            }
            let xe = build_x_default::<Q>(x, module.n).map_err(|e| e.to_string())?;
            let c = grothendieck_restriction_check(module, &xe).map_err(|e| e.to_string())?;
            ensure(c.holds(), || format!("{name}, {x}: {c:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{} modules x {} elements, {checks} checks", modules.len(), specs.len()))
}

fn depth_criterion() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for l in dominant_weights(n, 4, true) {
            let d = depth(&l).map_err(|e| e.to_string())?;
            ensure(d.depth == l.atypicality(), || format!("depth {l} = {}", d.depth))?;
            let mut cur = l.clone();
            let mut total = Rat::zero();
            for (x, nu) in &d.witness_chain {
                let m = decompose(&cur, x).map_err(|e| e.to_string())?.multiplicity(nu);
                ensure(m > 0, || format!("{l}: step {x} to {nu} is not a factor"))?;
                total += x.rank();
                cur = nu.clone();
            }
            ensure(total == d.depth, || format!("{l}: chain rank {total}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} weights"))
}

fn structural() -> Outcome {
    let specs = [XSpec::c_r(1), XSpec::nilpotent(), XSpec::semisimple(&[r(1), r(-1)]).unwrap(), XSpec::semisimple(&[r(1), r(2)]).unwrap(), XSpec::c_r(2)];
    let mut count = 0;
    for n in 1..=5 {
        for l in dominant_weights(n, 4, true) {
            for x in &specs {
                if x.support_size() > n {
                    continue;
                }
                let dec = decompose(&l, x).map_err(|e| e.to_string())?;
                let mut seen = HashSet::new();
                for e in &dec.entries {
                    ensure(e.nu.core() == l.core(), || format!("core changes: {l} -> {}", e.nu))?;
                    if let Some(h) = &e.h {
                        let mut a = h.clone();
                        let mut b: Vec<Rat> = h.iter().map(|v| -*v).collect();
                        a.sort();
                        b.sort();
                        ensure(a == b, || format!("grading of {l} -> {} is not symmetric", e.nu))?;
                        for v in h {
                            ensure(seen.insert((e.nu.clone(), *v)), || format!("{l}: repeated ({}, {v})", e.nu))?;
                        }
                    }
                    let dz = l.zero_count() as i64 - e.nu.zero_count() as i64;
                    let want = match e.parity {
                        Parity::Balanced => 0,
                        Parity::Single => x.support_size() as i64,
                    };
                    ensure(dz == want, || format!("{l} -> {} under {x}: {dz} zeros removed", e.nu))?;
                }
                ensure(isotypicality_violations(&dec).is_empty(), || format!("{l}, {x}: linked factors"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} decompositions"))
}

fn main() {
    let criteria: Vec<(&str, u64, fn() -> Outcome)> = vec![
        ("golden example, rank one nilpotent x on (7,4,2,0,-2,-4,-7)", 1, golden_nilpotent),
        ("golden example, three regimes on (4,1,0,-1,-4)", 1, golden_regimes),
        ("vanishing lists for q3, q4, q5", 10, vanishing_lists),
        ("oracle: DS of q, sq, pq, psq against the case analysis", 60, oracle_adjoint),
        ("oracle: DS of simple q2, q3 modules against decompose", 120, oracle_simples),
        ("zigzag decomposition suite", 30, zigzag),
        ("Hinich sequence suite", 30, hinich),
        ("cancellation identities, <= 5 symbols, positions <= 7", 60, cancellation),
        ("Grothendieck restriction identity", 60, restriction),
        ("depth equals atypicality, n <= 5, |lambda_i| <= 4", 30, depth_criterion),
        ("structural invariants, n <= 5", 60, structural),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let dt = t.elapsed();
        let over = dt > Duration::from_secs(limit);
        let (status, detail) = match (&res, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{:>2}] {name} ({:.2} s, limit {limit} s): {detail}", i + 1, dt.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
