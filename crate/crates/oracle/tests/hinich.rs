use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use queer_core::{Rat, XSpec};
use queer_oracle::algebra::{AlgebraKind, LieSuperalgebra};
use queer_oracle::hinich::hinich_check;
use queer_oracle::sparse::Echelon;
use queer_oracle::{build_x, Field, GModule, QElem, Q};

fn r(a: i64) -> Rat {
    Rat::from_integer(a)
}

fn pool() -> Vec<GModule<Q>> {
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

fn specs(n: usize) -> Vec<XSpec> {
    let mut out = vec![XSpec::nilpotent(), XSpec::c_r(1), XSpec::semisimple(&[r(1), r(-1)]).unwrap(), XSpec::semisimple(&[r(2), r(1)]).unwrap()];
    if n >= 3 {
        out.push(XSpec::new(1, vec![r(2)]).unwrap());
        out.push(XSpec::semisimple(&[r(1), r(1), Rat::new(-1, 2)]).unwrap());
    }
    out.retain(|s| s.support_size() <= n);
    out
}

#[test]
fn random_submodule_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let modules = pool();
    let mut nontrivial_y = 0;
    for case in 0..100 {
        let m = modules.choose(&mut rng).unwrap();
        let spec = specs(m.n).choose(&mut rng).unwrap().clone();
        let mut idx: Vec<usize> = (0..m.n).collect();
        idx.shuffle(&mut rng);
        let x = build_x::<Q>(&spec, m.n, &idx[..spec.support_size()]).unwrap();
        let classes: Vec<Vec<usize>> = m.classes().into_values().collect();
        let gens: Vec<_> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let c = classes.choose(&mut rng).unwrap();
                c.iter().map(|&i| (i, Q::from_i64(rng.gen_range(-2..=2)))).filter(|(_, a)| *a != Q::from_i64(0)).collect::<Vec<_>>()
            })
            .filter(|v| !v.is_empty())
            .collect();
        let sub = m.generate(&gens);
        let rep = hinich_check(m, &sub, &x).unwrap();
        assert!(rep.holds(), "case {case}: {rep:?}");
        if rep.y != (0, 0) {
            nontrivial_y += 1;
        }
    }
    assert!(nontrivial_y > 0);
}

#[test]
fn centre_sequence_of_sq() {
    let half = Rat::new(-1, 2);
    let cases: Vec<(usize, XSpec)> = vec![
        (2, XSpec::nilpotent()),
        (2, XSpec::semisimple(&[r(1), r(1)]).unwrap()),
        (2, XSpec::semisimple(&[r(1), r(-1)]).unwrap()),
        (3, XSpec::new(1, vec![r(2)]).unwrap()),
        (3, XSpec::semisimple(&[r(1), r(1), half]).unwrap()),
        (3, XSpec::semisimple(&[r(1), r(2), r(3)]).unwrap()),
        (4, XSpec::new(2, vec![]).unwrap()),
        (4, XSpec::new(1, vec![r(1), r(-1)]).unwrap()),
        (4, XSpec::semisimple(&[r(1), r(1), r(1), r(1)]).unwrap()),
    ];
    for (n, spec) in cases {
        let g = LieSuperalgebra::<Q>::new(AlgebraKind::SQ, n);
        let adj = g.adjoint_module();
        let x = build_x::<Q>(&spec, n, &(0..n).collect::<Vec<_>>()).unwrap();
        let centre = Echelon::from_vectors([g.coords(&QElem::identity(n)).unwrap()]);
        let rep = hinich_check(&adj, &centre, &x).unwrap();
        assert!(rep.holds(), "{spec} on sq({n})");
        // y lies in sq(n) exactly when the inverse power sum vanishes.
        let y_in_sq = spec.p1() == r(0);
        assert_eq!(rep.y, if y_in_sq { (1, 0) } else { (0, 0) }, "{spec} on sq({n})");
        assert_eq!(rep.ds_sub, (1, 0));
        assert_eq!(rep.ds_total, (1, 0));
        assert_eq!(rep.ds_quotient, if y_in_sq { (1, 1) } else { (0, 0) }, "{spec} on sq({n})");
    }
}
