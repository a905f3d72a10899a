use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use queer_core::enumerate::{diagrams, dominant_weights};
use queer_core::identities::check_cancellation_identities;
use queer_core::*;

fn rank_one_specs() -> Vec<XSpec> {
    let one = Rat::one();
    vec![
        XSpec::nilpotent(),
        XSpec::semisimple(&[one, -one]).unwrap(),
        XSpec::semisimple(&[one, Rat::from_integer(2)]).unwrap(),
    ]
}

fn small_weights(max_n: usize, bound: usize) -> Vec<Weight> {
    (1..=max_n).flat_map(|n| dominant_weights(n, bound, true)).collect()
}

/// Slot of `k` after the core slots of `d` are deleted.
fn howl_slot(d: &WeightDiagram, k: usize) -> usize {
    k - d.core_slots().iter().filter(|&&c| c < k).count()
}

#[test]
fn diagram_round_trip_exhaustive() {
    for l in small_weights(5, 6) {
        let d = WeightDiagram::from_weight(&l).unwrap();
        assert_eq!(d.to_weight(), l);
        assert_eq!(d.size(), l.n());
        assert_eq!(d.atypicality(), l.atypicality(), "{l}");
        assert_eq!(d.core_diagram().to_weight().coords(), &l.core()[..]);
    }
}

#[test]
fn arc_diagrams_are_valid_and_removals_stay_valid() {
    for g in [Grid::Integral, Grid::HalfIntegral] {
        for d in diagrams(g, 6, 8) {
            let a = ArcDiagram::build(&d);
            a.validate().unwrap();
            assert_eq!(ArcDiagram::build(&d), a);
            for m in a.maximal_arcs() {
                let r = a.remove_maximal_arc(&m).unwrap();
                r.validate().unwrap();
                assert!(r.is_subset_of(&a));
                assert_eq!(r.arcs().len() + 1, a.arcs().len());
                let dz = d.wedges() - r.base().wedges();
                assert_eq!(dz, usize::from(m.kind == ArcKind::Half));
            }
            if g == Grid::HalfIntegral {
                assert!(a.arcs().iter().all(|x| x.kind == ArcKind::Full));
            }
        }
    }
}

#[test]
fn arcs_correspond_under_howl() {
    for d in diagrams(Grid::Integral, 5, 7).into_iter().chain(diagrams(Grid::HalfIntegral, 5, 7)) {
        let h = d.howl();
        assert_eq!(h.howl(), h);
        let moved: Vec<Arc> = ArcDiagram::build(&d)
            .arcs()
            .iter()
            .map(|a| Arc {
                left: if a.left == 0 { 0 } else { howl_slot(&d, a.left) },
                right: howl_slot(&d, a.right),
                kind: a.kind,
            })
            .collect();
        let mut moved_sorted = moved.clone();
        moved_sorted.sort();
        assert_eq!(ArcDiagram::build(&h).arcs(), &moved_sorted[..], "{d}");
    }
}

#[test]
fn dominance_against_howl() {
    let ws: Vec<Weight> = small_weights(4, 3).into_iter().filter(|w| !w.is_typical()).collect();
    for eta in &ws {
        for mu in &ws {
            if eta.n() != mu.n() || eta.core() != mu.core() || !eta.dominance_order(mu) {
                continue;
            }
            let (he, hm) = (
                WeightDiagram::from_weight(eta).unwrap().howl().to_weight(),
                WeightDiagram::from_weight(mu).unwrap().howl().to_weight(),
            );
            assert!(!(he == hm || hm.dominance_order(&he)), "{eta} {mu}");
            let (de, dm) = (WeightDiagram::from_weight(eta).unwrap(), WeightDiagram::from_weight(mu).unwrap());
            assert_eq!(de.succ_compare(&dm).unwrap(), SuccOrder::Greater);
            assert_eq!(de.howl().succ_compare(&dm.howl()).unwrap(), SuccOrder::Greater);
        }
    }
}

#[test]
fn stabilization_properties() {
    for d in diagrams(Grid::Integral, 5, 7).into_iter().chain(diagrams(Grid::HalfIntegral, 5, 7)) {
        let s = d.stabilize();
        assert!(s.is_stable());
        assert_eq!(s.howl(), d.howl());
        let order = |x: &WeightDiagram| -> Vec<Symbol> { x.core_slots().iter().map(|&k| x.symbol(k)).collect() };
        assert_eq!(order(&s), order(&d));
        if d.is_stable() {
            assert_eq!(s, d);
        }
    }
}

#[test]
fn shrinking_injects_arcs() {
    for d in diagrams(Grid::Integral, 6, 8).into_iter().chain(diagrams(Grid::HalfIntegral, 6, 8)) {
        let a = ArcDiagram::build(&d);
        for m in a.arcs().iter().filter(|m| m.is_minimal_shape()) {
            let s = shrink(&d, m.left).unwrap();
            let lift = |k: usize| -> usize {
                if m.left == 0 {
                    k + 1
                } else if k >= m.left {
                    k + 2
                } else {
                    k
                }
            };
            let image: HashSet<Arc> = ArcDiagram::build(&s)
                .arcs()
                .iter()
                .map(|x| Arc { left: if x.left == 0 { 0 } else { lift(x.left) }, right: lift(x.right), kind: x.kind })
                .collect();
            let rest: HashSet<Arc> = a.arcs().iter().filter(|x| *x != m).copied().collect();
            assert_eq!(image, rest, "{d} at {}", m.left);
        }
    }
}

#[test]
fn cancellation_identities_on_six_slots() {
    let mut fam = diagrams(Grid::Integral, 5, 6);
    fam.extend(diagrams(Grid::HalfIntegral, 5, 6));
    let r = check_cancellation_identities(&fam);
    assert!(r.checked > 10_000);
    assert!(r.violations.is_empty(), "{:?}", &r.violations[..r.violations.len().min(5)]);
}

/// The multiplicity predicted from the shrink reduction and `q(2)`, `q(1)`.
fn base_case(lp: &Weight, x: &XSpec) -> u32 {
    let is_zero = lp.coords().iter().all(Zero::is_zero);
    match x.kind() {
        XKind::RankHalf => u32::from(is_zero),
        XKind::Nilpotent => {
            if is_zero {
                1
            } else {
                2
            }
        }
        XKind::SemisimpleTraceZero => {
            if is_zero {
                1
            } else if lp.integrality_class() == Integrality::Integral {
                2
            } else {
                0
            }
        }
        XKind::SemisimpleTraceNonzero => u32::from(is_zero),
        k => panic!("no base case for {k:?}"),
    }
}

#[test]
fn decomposition_invariants_exhaustive() {
    let specs: Vec<XSpec> = std::iter::once(XSpec::c_r(1)).chain(rank_one_specs()).collect();
    for l in small_weights(5, 4) {
        let bound = l.coords().iter().map(|c| c.abs().ceil().to_integer()).max().unwrap_or(0) as usize;
        for x in &specs {
            if x.support_size() > l.n() {
                continue;
            }
            let dec = decompose(&l, x).unwrap();
            let mut seen = HashSet::new();
            for e in &dec.entries {
                assert_eq!(e.nu.core(), l.core(), "core of {} in DS({l})", e.nu);
                assert!(e.mult >= 1);
                if let Some(h) = &e.h {
                    assert_eq!(h.len() as u32, e.mult);
                    let mut neg: Vec<Rat> = h.iter().map(|v| -*v).collect();
                    let mut hs = h.clone();
                    neg.sort();
                    hs.sort();
                    assert_eq!(neg, hs);
                    for v in h {
                        assert!(seen.insert((e.nu.clone(), *v)), "repeated factor in DS({l})");
                    }
                }
                let dz = l.zero_count() - e.nu.zero_count();
                match e.parity {
                    Parity::Balanced => assert_eq!(dz, 0),
                    Parity::Single => assert_eq!(dz, x.support_size()),
                }
                if x.kind() != XKind::RankHalf {
                    assert_eq!(e.mult, if e.parity == Parity::Single { 1 } else { 2 });
                }
            }
            assert!(decompose::isotypicality_violations(&dec).is_empty(), "{l}");

            let s = x.rank();
            let grid_half = l.integrality_class() == Integrality::HalfIntegral;
            for nu in dominant_weights(l.n() - x.support_size(), bound, true) {
                if nu.n() > 0 && (nu.integrality_class() == Integrality::HalfIntegral) != grid_half {
                    continue;
                }
                let m = dec.multiplicity(&nu);
                let signed: i64 = dec
                    .entries
                    .iter()
                    .filter(|e| e.nu == nu)
                    .map(|e| if e.parity == Parity::Single { 1 } else { 0 })
                    .sum();
                assert_eq!(signed, i64::from(smult(&l, &nu, s).unwrap()), "smult {l} {nu}");
                let necessary = necessary_condition(&l, &nu, s).unwrap();
                if m > 0 {
                    assert!(necessary, "{l} -> {nu}");
                }
                let predicted = match shrink_reduce(&l, &nu) {
                    Ok(lp) => base_case(&lp, x),
                    Err(Error::ArcNotSubset) | Err(Error::CoreMismatch) => 0,
                    Err(e) => panic!("{e}"),
                };
                assert_eq!(m, predicted, "m_x({l}; {nu}) for {x}");
            }
        }
    }
}

#[test]
fn depth_equals_atypicality() {
    for l in small_weights(5, 4) {
        let r = depth(&l).unwrap();
        assert_eq!(r.depth, l.atypicality(), "{l}");
        let mut cur = l.clone();
        let mut total = Rat::zero();
        for (x, nu) in &r.witness_chain {
            assert!(decompose(&cur, x).unwrap().multiplicity(nu) > 0);
            total += x.rank();
            cur = nu.clone();
        }
        assert_eq!(total, r.depth);
    }
}

#[test]
fn vanishing_is_the_nilpotent_zero_locus() {
    for l in small_weights(5, 4) {
        if l.is_typical() || l.n() < 2 {
            continue;
        }
        let nil = decompose(&l, &XSpec::nilpotent()).unwrap().is_zero();
        assert_eq!(vanishing_predicate(&l), nil, "{l}");
        if vanishing_predicate(&l) {
            for x in rank_one_specs() {
                assert!(decompose(&l, &x).unwrap().is_zero());
            }
        }
    }
}

fn arb_weight() -> impl Strategy<Value = Weight> {
    (0usize..4, proptest::collection::vec(0u8..4, 0..9), any::<bool>()).prop_map(|(r, syms, half)| {
        let grid = if half { Grid::HalfIntegral } else { Grid::Integral };
        let slots = syms
            .into_iter()
            .map(|s| match s {
                0 => Symbol::Empty,
                1 => Symbol::Gt,
                2 => Symbol::Lt,
                _ => Symbol::Times,
            })
            .collect();
        WeightDiagram::new(grid, if half { 0 } else { r }, slots).unwrap().to_weight()
    })
}

proptest! {
    #[test]
    fn atypicality_matches_diagram(l in arb_weight()) {
        let d = WeightDiagram::from_weight(&l).unwrap();
        prop_assert_eq!(d.atypicality(), l.atypicality());
        prop_assert_eq!(d.to_weight(), l);
    }

    #[test]
    fn zero_change_under_removals(l in arb_weight(), picks in proptest::collection::vec(0usize..8, 0..5)) {
        let mut a = ArcDiagram::from_weight(&l).unwrap();
        let mut halves = 0;
        for p in picks {
            let m = a.maximal_arcs();
            if m.is_empty() {
                break;
            }
            let arc = m[p % m.len()];
            halves += usize::from(arc.kind == ArcKind::Half);
            let next = a.remove_maximal_arc(&arc).unwrap();
            prop_assert!(next.is_subset_of(&a));
            a = next;
        }
        prop_assert_eq!(a.base().to_weight().zero_count() + halves, l.zero_count());
    }

    #[test]
    fn rank_one_entries_remove_maximal_arcs(l in arb_weight()) {
        prop_assume!(l.n() >= 2);
        for x in rank_one_specs() {
            for e in decompose(&l, &x).unwrap().entries {
                prop_assert!(necessary_condition(&l, &e.nu, Rat::one()).unwrap());
            }
        }
    }
}
