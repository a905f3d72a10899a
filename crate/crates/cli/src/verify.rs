//! Manifest cases (oracle classification of `DS_x(g)` against the expected class) and the
//! randomized property suites.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use queer_core::{Rat, XSpec};
use queer_oracle::algebra::{AlgebraKind, LieSuperalgebra};
use queer_oracle::classify::{ds_adjoint, AlgebraClass};
use queer_oracle::grothendieck::grothendieck_restriction_check;
use queer_oracle::hinich::hinich_check;
use queer_oracle::zigzag::{ds_composite, ds_sum, image_intersection_dim, predicted_ds_sum, random_summands, zigzag_decompose, Bimodule};
use queer_oracle::{build_x, build_x_default, Field, GModule, Q};

use crate::json::{CaseResult, Manifest, ManifestCase, SuiteResult, VerifyReport};
use crate::CliError;

pub const BUNDLED: &str = include_str!("../manifests/bundled.json");

pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad manifest: {e}")))
}

pub fn run_case(case: &ManifestCase) -> Result<CaseResult, CliError> {
    let kind = AlgebraKind::parse(&case.kind).ok_or_else(|| CliError::Usage(format!("unknown algebra kind {:?}", case.kind)))?;
    if case.n == 0 || case.n > 4 {
        return Err(CliError::Domain(format!("rank {} is outside 1..=4", case.n)));
    }
    let x = case.x.to_spec()?;
    let g = LieSuperalgebra::<Q>::new(kind, case.n);
    let rep = ds_adjoint(&g, &build_x_default::<Q>(&x, case.n)?)?;
    let got = match (rep.class, rep.embedding_verified) {
        (_, Some(false)) => "embedding failed".to_string(),
        (Some(c), _) => c.to_string(),
        (None, _) => "unclassified".to_string(),
    };
    let expected_ok = AlgebraClass::parse(&case.expected).is_some();
    Ok(CaseResult {
        id: case.id.clone(),
        expected: case.expected.clone(),
        pass: expected_ok && got == case.expected && rep.centralizes,
        got,
        sdim: [rep.sdim.0, rep.sdim.1],
    })
}

fn r(a: i64) -> Rat {
    Rat::from_integer(a)
}

pub fn zigzag_suite(seed: u64, count: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..count {
        let (summands, cx, cy) = random_summands(&mut rng, 6, 7);
        let n = Bimodule::<Q>::assemble(&summands, cx, cy).scramble(&mut rng);
        let ok = match zigzag_decompose(&n) {
            Ok(got) => {
                let sum = ds_sum(&n);
                let comp = ds_composite(&n);
                got == summands
                    && sum == predicted_ds_sum(&summands)
                    && comp.0 >= sum.0
                    && comp.0 - sum.0 == comp.1 - sum.1
                    && (image_intersection_dim(&n) > 0 || comp == sum)
            }
            Err(_) => false,
        };
        if !ok {
            failures.push(format!("case {case}"));
        }
    }
    SuiteResult { name: "zigzag".into(), cases: count, failures }
}

fn hinich_pool() -> Vec<GModule<Q>> {
    let v2 = GModule::<Q>::standard(2);
    let v3 = GModule::<Q>::standard(3);
    vec![
        v2.clone(),
        v3.clone(),
        v3.dual(),
        v2.tensor(&v2.dual()),
        v2.tensor(&v2),
        LieSuperalgebra::<Q>::new(AlgebraKind::Q, 2).adjoint_module(),
        LieSuperalgebra::<Q>::new(AlgebraKind::SQ, 3).adjoint_module(),
    ]
}

fn hinich_specs(n: usize) -> Vec<XSpec> {
    let mut out = vec![XSpec::nilpotent(), XSpec::c_r(1), XSpec::semisimple(&[r(1), r(-1)]).expect("nonzero"), XSpec::semisimple(&[r(2), r(1)]).expect("nonzero")];
    if n >= 3 {
        out.push(XSpec::new(1, vec![r(2)]).expect("nonzero"));
        out.push(XSpec::semisimple(&[r(1), r(1), Rat::new(-1, 2)]).expect("nonzero"));
    }
    out.retain(|s| s.support_size() <= n);
    out
}

/// Random cyclic submodules generated by weight vectors, with random `x`.
pub fn hinich_suite(seed: u64, count: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modules = hinich_pool();
    let mut failures = Vec::new();
    for case in 0..count {
        let m = modules.choose(&mut rng).expect("nonempty");
        let spec = hinich_specs(m.n).choose(&mut rng).expect("nonempty").clone();
        let mut idx: Vec<usize> = (0..m.n).collect();
        idx.shuffle(&mut rng);
        let x = build_x::<Q>(&spec, m.n, &idx[..spec.support_size()]).expect("fits");
        let classes: Vec<Vec<usize>> = m.classes().into_values().collect();
        let gens: Vec<_> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let c = classes.choose(&mut rng).expect("nonempty");
                c.iter().map(|&i| (i, Q::from_i64(rng.gen_range(-2..=2)))).filter(|(_, a)| !a.is_zero()).collect::<Vec<_>>()
            })
            .filter(|v| !v.is_empty())
            .collect();
        let sub = m.generate(&gens);
        match hinich_check(m, &sub, &x) {
            Ok(rep) if rep.holds() => {}
            _ => failures.push(format!("case {case}")),
        }
    }
    SuiteResult { name: "hinich".into(), cases: count, failures }
}

/// Standard and adjoint modules against every rank <= 1 element that fits.
pub fn restriction_suite() -> SuiteResult {
    let one = r(1);
    let specs = [XSpec::c_r(1), XSpec::nilpotent(), XSpec::semisimple(&[one, -one]).expect("nonzero"), XSpec::semisimple(&[one, one]).expect("nonzero")];
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 2..=3 {
        let mods = [GModule::<Q>::standard(n), LieSuperalgebra::<Q>::new(AlgebraKind::Q, n).adjoint_module()];
        for (mi, m) in mods.iter().enumerate() {
            for x in &specs {
                cases += 1;
                let ok = build_x_default::<Q>(x, n).ok().and_then(|xe| grothendieck_restriction_check(m, &xe).ok()).is_some_and(|c| c.holds());
                if !ok {
                    failures.push(format!("q({n}) module {mi}, {x}"));
                }
            }
        }
    }
    SuiteResult { name: "restriction".into(), cases, failures }
}

pub fn verify(manifest_name: &str, manifest: &Manifest, suites: bool, seed: u64) -> Result<VerifyReport, CliError> {
    let cases = manifest.cases.iter().map(run_case).collect::<Result<Vec<_>, _>>()?;
    let suites = if suites { vec![zigzag_suite(seed, 50), hinich_suite(seed, 30), restriction_suite()] } else { Vec::new() };
    let pass = cases.iter().all(|c| c.pass) && suites.iter().all(|s| s.failures.is_empty());
    Ok(VerifyReport { manifest: manifest_name.to_string(), cases, suites, pass })
}
