//! Property tests for the algebraic invariants.

use cablekit::cabling::{
    cabled_euler_closed_form, cabled_page, classify_cable, hopf_delta, resolve, CableCoefficients, VerdictKind,
};
use cablekit::data;
use cablekit::lens::{fiber_euler_raw, LensTorusKnot};
use cablekit::monodromy::{
    branch_point_count, compose_cobordism_word, monodromy_22_connected, monodromy_p1_connected,
    monodromy_p1_disconnected, CobordismPage, NoduleLayout,
};
use cablekit::openbook::{BindingComponent, RationalOpenBook, StabilizationMode};
use cablekit::slope::{eval_cont_frac, exceptional_slopes, neg_cont_frac, Slope};
use cablekit::words::{
    chain_model, mod10_class, transvection, word_to_symplectic, words_equal_on_homology, Generator, Step, TwistWord,
};
use num_integer::Integer;
use proptest::prelude::*;

/// Random twist word over `c1..c{2g+1}` of a chain model.
fn chain_word(g: usize, max_len: usize) -> impl Strategy<Value = TwistWord> {
    prop::collection::vec((1..=2 * g + 1, prop::bool::ANY), 0..=max_len).prop_map(|letters| {
        letters
            .into_iter()
            .map(|(i, pos)| Generator::twist_signed(&format!("c{i}"), if pos { 1 } else { -1 }))
            .collect()
    })
}

fn reduced_negative_slope() -> impl Strategy<Value = Slope> {
    (2i64..=200).prop_flat_map(|den| (1..den).prop_map(move |num| Slope::new(-num, den).unwrap()))
}

/// Books with one boundary per component.
fn book() -> impl Strategy<Value = RationalOpenBook> {
    let comp = (1i64..=7, -20i64..=20).prop_filter_map("multiplicity one", |(r, s)| {
        let c = BindingComponent::new(r, s).ok()?;
        (c.multiplicity == 1).then_some(c)
    });
    (0i64..=3, prop::collection::vec(comp, 1..=3)).prop_map(|(g, cs)| RationalOpenBook::new(g, cs, None))
}

/// Positive `(p, q)` pairs, `p > 0` and `q/p` above the Seifert slope.
fn positive_pairs(b: &RationalOpenBook, seeds: &[(i64, i64)]) -> CableCoefficients {
    let pairs = b
        .components
        .iter()
        .zip(seeds.iter().cycle())
        .map(|(c, &(p, t))| {
            let q = Integer::div_floor(&(c.seifert_numerator * p), &c.order) + t;
            (p, q)
        })
        .collect();
    CableCoefficients::new(pairs)
}

proptest! {
    #[test]
    fn twist_word_times_inverse_is_identity(g in 1usize..=3, w in (1usize..=3).prop_flat_map(|g| chain_word(g, 30))) {
        let g = g.max(w.curves().filter_map(|c| c[1..].parse::<usize>().ok()).max().unwrap_or(1).div_ceil(2));
        let sys = chain_model(g, 1);
        prop_assert!(word_to_symplectic(&w.then(&w.inverse()), &sys).unwrap().is_identity());
    }

    #[test]
    fn conjugated_twist_is_transvection_of_image(f in chain_word(2, 12), i in 1usize..=5, sign in prop::sample::select(vec![-1i64, 1])) {
        let sys = chain_model(2, 1);
        let c = format!("c{i}");
        let mf = word_to_symplectic(&f, &sys).unwrap();
        let conj = f.then(&TwistWord::new(vec![Generator::twist_signed(&c, sign)])).then(&f.inverse());
        let image = mf.apply(sys.class(&c).unwrap());
        prop_assert_eq!(word_to_symplectic(&conj, &sys).unwrap(), transvection(&image, sign));
    }

    #[test]
    fn genus_two_moves_keep_matrix_and_mod10(w in chain_word(2, 20), pos in 0usize..=20, mv in 0usize..5, i in 1usize..=4) {
        let sys = chain_model(2, 1);
        let ci = format!("c{i}");
        let cj = format!("c{}", i + 1);
        let far = format!("c{}", if i + 2 <= 5 { i + 2 } else { i - 2 });
        let (lhs, rhs) = match mv {
            0 => (TwistWord::positive(&[&ci, &cj, &ci]), TwistWord::positive(&[&cj, &ci, &cj])),
            1 => (TwistWord::positive(&[&ci, &far]), TwistWord::positive(&[&far, &ci])),
            2 => (TwistWord::parse_compact(&format!("{ci} {ci}'")), TwistWord::empty()),
            3 => (TwistWord::positive(&["c1", "c2", "c3", "c4", "c5"]).pow(6), TwistWord::positive(&["c1", "c2", "c3", "c4"]).pow(10)),
            _ => (TwistWord::positive(&["c1", "c2"]).pow(6), TwistWord::positive(&["c4", "c5"]).pow(6)),
        };
        let at = pos.min(w.len());
        let split = |x: &TwistWord| {
            TwistWord::new(w.generators[..at].to_vec()).then(x).then(&TwistWord::new(w.generators[at..].to_vec()))
        };
        let (a, b) = (split(&lhs), split(&rhs));
        prop_assert!(words_equal_on_homology(&a, &b, &sys).unwrap());
        prop_assert_eq!(mod10_class(&a, &sys).unwrap(), mod10_class(&b, &sys).unwrap());
    }

    #[test]
    fn continued_fractions_round_trip(s in reduced_negative_slope()) {
        let cf = neg_cont_frac(s).unwrap();
        prop_assert!(cf.terms.iter().all(|&a| a <= -2));
        prop_assert_eq!(eval_cont_frac(&cf).unwrap(), s);
    }

    #[test]
    fn reframe_inverts(r in 1i64..50, s in -200i64..200, k in -50i64..50) {
        let c = BindingComponent::new(r, s).unwrap();
        prop_assert_eq!(c.reframe(k).reframe(-k), c);
    }

    #[test]
    fn window_is_idempotent(r in 1i64..50, s in -200i64..200) {
        let w = BindingComponent::new(r, s).unwrap().normalize_to_window();
        prop_assert!(-r < w.seifert_numerator && w.seifert_numerator <= 0);
        prop_assert_eq!(w.normalize_to_window(), w);
        prop_assert_eq!((w.seifert_numerator - s).rem_euclid(r), 0);
    }

    #[test]
    fn lens_invariants(r in 1i64..=100, s in 0i64..100, k in -100i64..=100, l in -100i64..=100) {
        let Ok(t) = LensTorusKnot::new(r, s, k, l) else { return Ok(()) };
        if t.is_trivial() {
            prop_assert!(t.euler_characteristic().is_err());
            return Ok(());
        }
        let chi = t.euler_characteristic().unwrap();
        prop_assert_eq!(chi, fiber_euler_raw(r, s, k, l));
        let b = t.boundary_count().unwrap();
        let o = t.homological_order().unwrap();
        prop_assert!(b >= 1);
        prop_assert_eq!((chi - b).rem_euclid(2), 0);
        prop_assert_eq!(b % t.components(), 0);
        prop_assert_eq!(o.wrap * (b / t.components()), o.order);
        prop_assert_eq!(o.order, r / r.gcd(&t.reduced().k));
    }

    #[test]
    fn stabilization_lowers_chi(g in 0i64..4, n in 1usize..5, join in prop::bool::ANY) {
        let b = RationalOpenBook::integral(g, n);
        let mode = if join && n >= 2 { StabilizationMode::Join(0, 1) } else { StabilizationMode::SameComponent(0) };
        let s = b.positive_stabilize(mode).unwrap();
        prop_assert_eq!(s.page_euler_char(), b.page_euler_char() - 1);
        prop_assert!(s.validate().is_empty());
    }

    #[test]
    fn positive_cables_keep_the_contact_structure(b in book(), seeds in prop::collection::vec((1i64..=6, 1i64..=6), 3)) {
        let coeffs = positive_pairs(&b, &seeds);
        let v = classify_cable(&b, &coeffs).unwrap();
        prop_assert_eq!(v.kind, VerdictKind::SameContact);
        let neg = CableCoefficients::new(coeffs.pairs.iter().map(|&(p, q)| (-p, -q)).collect());
        prop_assert_eq!(classify_cable(&b, &neg).unwrap().kind, VerdictKind::ReversedContact);
    }

    #[test]
    fn negating_a_negative_cable_keeps_overtwistedness(b in book(), p in 2i64..=6, t in 1i64..=6) {
        let c = b.components[0];
        let q = Integer::div_ceil(&(c.seifert_numerator * p), &c.order) - t;
        let pairs: Vec<(i64, i64)> = std::iter::once((p, q)).chain(b.components[1..].iter().map(|_| (1, -1))).collect();
        let coeffs = CableCoefficients::new(pairs);
        let Ok(v) = classify_cable(&b, &coeffs) else { return Ok(()) };
        let neg = CableCoefficients::new(coeffs.pairs.iter().map(|&(p, q)| (-p, -q)).collect());
        let w = classify_cable(&b, &neg).unwrap();
        if v.kind == VerdictKind::Overtwisted {
            prop_assert_eq!(w.kind, VerdictKind::Overtwisted);
        }
    }

    #[test]
    fn exceptional_verdicts_match_exceptional_slopes(
        g in 1i64..=3,
        (r, s) in (2i64..=12).prop_flat_map(|r| (Just(r), -(r - 1)..=-1)),
        (p, q) in (2i64..=12).prop_flat_map(|p| (Just(p), -2 * p..=0)),
    ) {
        prop_assume!(r.gcd(&s) == 1 && p.gcd(&q) == 1);
        let seifert = Slope::new(s, r).unwrap();
        let cable = Slope::new(q, p).unwrap();
        prop_assume!(cable < seifert);
        let b = RationalOpenBook::new(g, vec![BindingComponent::new(r, s).unwrap()], None);
        let v = classify_cable(&b, &CableCoefficients::single(p, q)).unwrap();
        let exceptional = exceptional_slopes(seifert).unwrap().contains(&cable);
        prop_assert_eq!(v.kind == VerdictKind::ExceptionalTightPossible, exceptional, "{:?}", v);
    }

    #[test]
    fn cabled_euler_characteristic(g in 0i64..=4, p in -6i64..=6, q in -6i64..=6) {
        prop_assume!(p != 0 && q != 0 && p.gcd(&q) == 1);
        let b = RationalOpenBook::integral(g, 1);
        let page = cabled_page(&b, &CableCoefficients::single(p, q)).unwrap();
        let closed = cabled_euler_closed_form(b.page_euler_char(), p, q);
        prop_assert_eq!(page.page_euler_char(), closed);
        let torus = LensTorusKnot::new(1, 0, p.abs(), q.abs()).unwrap();
        prop_assert_eq!(closed, p.abs() * b.page_euler_char() + torus.euler_characteristic().unwrap() - p.abs());
    }

    #[test]
    fn resolution_gives_integral_books(b in book(), ls in prop::collection::vec(0i64..=5, 3)) {
        let l: Vec<i64> = b.components.iter().filter(|c| !c.is_integral()).zip(&ls).map(|(_, &x)| x).collect();
        let out = resolve(&b, &l).unwrap();
        prop_assert!(out.validate().is_empty());
        prop_assert!(out.components.iter().all(|c| c.order == 1));
        prop_assert_eq!(resolve(&out, &[]).unwrap(), out);
    }

    #[test]
    fn hopf_delta_vanishes_exactly_for_unit_p(p in 1i64..=20, q in -20i64..=-1, g in 1i64..=10) {
        prop_assert_eq!(hopf_delta(p, q, g).unwrap() == 0, p == 1);
        prop_assert_eq!(hopf_delta(-p, -q, g).unwrap() == 0, p == 1);
    }

    #[test]
    fn word_counts(g in 0usize..=5, n in 2usize..=6, p in 1usize..=5) {
        let d = branch_point_count(g, n);
        prop_assert_eq!(d, (2 * g + 2) + 2 * (n - 2));
        let book = RationalOpenBook::integral(g as i64, n).with_monodromy(TwistWord::parse_compact("x'"));
        let w = monodromy_p1_disconnected(&book, p).unwrap();
        prop_assert_eq!(w.positive_count(), d * (p - 1));
        prop_assert_eq!(w.negative_count(), 1);

        let conn = RationalOpenBook::integral(g as i64, 1).with_monodromy(TwistWord::empty());
        let w = monodromy_22_connected(&conn).unwrap();
        prop_assert_eq!(w.positive_count(), 2 * g + 1);
        prop_assert!(w.is_positive());
        if p >= 2 {
            let layout = NoduleLayout::connected(p, g).unwrap();
            let dd = 2 * g + 1;
            for j in 1..p {
                prop_assert_eq!(layout.garside_block(j).len(), dd * (2 * dd - 1));
            }
            let w = monodromy_p1_connected(&conn, p).unwrap();
            prop_assert_eq!(w.negative_count(), 2 * (p - 1));
            prop_assert_eq!(w.positive_count(), (p - 1) * dd * (2 * dd - 1));
        }
        let c = compose_cobordism_word(&TwistWord::empty(), &TwistWord::empty(), CobordismPage::Connected { genus: g }).unwrap();
        prop_assert!(c.rho.is_positive());
    }
}

#[test]
fn disk_detection_is_exhaustive() {
    for r in 1..=30i64 {
        for s in 0..r {
            for k in -30..=30i64 {
                for l in -30..=30i64 {
                    let Ok(t) = LensTorusKnot::new(r, s, k, l) else { continue };
                    if t.is_trivial() {
                        continue;
                    }
                    let disk = t.euler_characteristic().unwrap() == 1 && t.boundary_count().unwrap() == 1;
                    assert_eq!(disk, t.is_rational_unknot(), "({r},{s}) ({k},{l})");
                }
            }
        }
    }
}

#[test]
fn replay_preserves_the_matrix_within_a_system() {
    let ws = data::workspace().unwrap();
    for script in data::shipped_scripts().unwrap() {
        let log = ws.replay(&script).unwrap();
        let mut prev = (script.system.clone(), script.start.clone());
        let mut compared = 0;
        for r in &log.records {
            let moves_class = matches!(r.step, Step::ConjugateWhole { .. } | Step::Stabilize { .. });
            if r.system == prev.0 && !moves_class {
                let sys = ws.system(&r.system).unwrap();
                assert!(words_equal_on_homology(&prev.1, &r.word, sys).unwrap(), "{} step {}", script.name, r.index);
                compared += 1;
            }
            prev = (r.system.clone(), r.word.clone());
        }
        assert!(compared > 0, "{}", script.name);
    }
}
