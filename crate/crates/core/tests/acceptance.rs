//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use cablekit::cabling::{
    classify_cable, hopf_delta, induced_open_book_from_surgery, resolve, CableCoefficients, VerdictKind,
};
use cablekit::data;
use cablekit::lens::LensTorusKnot;
use cablekit::monodromy::{
    branch_point_count, monodromy_22_connected, monodromy_p1_connected, monodromy_p1_disconnected, stein_obstruction,
    NoduleLayout,
};
use cablekit::openbook::{BindingComponent, RationalOpenBook};
use cablekit::slope::{exceptional_slopes, farey_neighbors, farey_shortest_path, Slope};
use cablekit::words::{chain_model, word_to_symplectic, words_equal_on_homology, Generator, TwistWord};
use common::farey::{small_slopes, Graph};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn slope(s: &str) -> Slope {
    s.parse().unwrap()
}

fn sigma_book(r: i64, genus: i64) -> RationalOpenBook {
    let mut w = TwistWord::new(vec![Generator::fractional("bd", Slope::new(1, r).unwrap())]);
    w = w.then(&TwistWord::parse_compact("bd bd"));
    RationalOpenBook::new(genus, vec![BindingComponent::new(r, -1).unwrap()], Some(w))
}

fn exceptional() -> Check {
    let e = exceptional_slopes(slope("-1/3")).map_err(err)?;
    ensure(e == vec![slope("-1/2"), slope("-1")], || format!("exceptional slopes {e:?}"))?;
    let book = sigma_book(3, 1);
    let v = classify_cable(&book, &CableCoefficients::single(3, -2)).map_err(err)?;
    ensure(v.kind == VerdictKind::Overtwisted, || format!("(3,-2): {:?}", v.kind))?;
    let v = classify_cable(&book, &CableCoefficients::single(2, -1)).map_err(err)?;
    ensure(v.kind == VerdictKind::ExceptionalTightPossible, || format!("(2,-1): {:?}", v.kind))
}

fn torus_table() -> Check {
    // (r, s, k, l) -> (chi, boundaries, order, wrap)
    let rows = [
        ((7, 2, 1, 3), (1, 1, 7, 7)),
        ((5, 2, 1, -4), (1, 1, 5, 5)),
        ((1, 0, 3, 1), (1, 1, 1, 1)),
        ((4, 1, 2, 1), (0, 2, 2, 1)),
        ((8, 1, 2, 1), (-2, 2, 4, 2)),
    ];
    for ((r, s, k, l), want) in rows {
        let t = LensTorusKnot::new(r, s, k, l).map_err(err)?;
        let o = t.homological_order().map_err(err)?;
        let got = (t.euler_characteristic().map_err(err)?, t.boundary_count().map_err(err)?, o.order, o.wrap);
        ensure(got == want, || format!("({r},{s}) ({k},{l}): {got:?} != {want:?}"))?;
        ensure(t.is_rational_unknot() == (want.0 == 1), || format!("({r},{s}) ({k},{l}) disk detection"))?;
    }
    Ok(())
}

fn hopf() -> Check {
    let d = hopf_delta(2, -1, 1).map_err(err)?;
    ensure(d == -2, || format!("(2,-1,g=1) gave {d}"))?;
    for g in 0..=6 {
        for p in 1..=8i64 {
            for q in -9..=-1i64 {
                let Ok(d) = hopf_delta(p, q, g) else { continue };
                ensure((d == 0) == (p == 1), || format!("({p},{q},g={g}) gave {d}"))?;
                ensure(d == (1 - p) * (2 * g + q.abs() - 1), || format!("({p},{q},g={g}) formula"))?;
            }
        }
    }
    Ok(())
}

fn resolution() -> Check {
    let s = induced_open_book_from_surgery(&RationalOpenBook::trefoil(false), 0, Slope::integer(-5)).map_err(err)?;
    let c = s.book.components[0].normalize_to_window();
    ensure((c.order, c.seifert_numerator) == (5, -1), || format!("component {c:?}"))?;
    let r = resolve(&s.book, &[0]).map_err(err)?;
    ensure((r.genus, r.boundary_count_of_page) == (1, 5), || format!("page {} {}", r.genus, r.boundary_count_of_page))?;
    let w = r.monodromy.ok_or("no word")?;
    let boundary_pos = w.generators.iter().filter(|g| !g.is_negative() && g.curve.starts_with("bd")).count();
    ensure(boundary_pos == 5 && w.positive_count() == 5 && w.negative_count() == 2, || format!("word {w}"))
}

fn obstruction() -> Check {
    for p in 1..=100u32 {
        let o = stein_obstruction(p).map_err(err)?;
        let want = (p as i64 - 8).rem_euclid(10);
        ensure(o.length_mod10 == want, || format!("p={p}: length {}", o.length_mod10))?;
        ensure(o.required_mod10 == (p as i64 + 3).rem_euclid(10), || format!("p={p}: required"))?;
        ensure(o.obstructed && o.length_mod10 != o.required_mod10, || format!("p={p}: not obstructed"))?;
    }
    Ok(())
}

fn counts() -> Check {
    for g in 0..=5usize {
        for p in 1..=5usize {
            for n in 2..=6usize {
                let book = RationalOpenBook::integral(g as i64, n).with_monodromy(TwistWord::empty());
                let w = monodromy_p1_disconnected(&book, p).map_err(err)?;
                let d = (2 * g + 2) + 2 * (n - 2);
                ensure(d == branch_point_count(g, n), || format!("d for g={g} n={n}"))?;
                ensure(w.positive_count() == d * (p - 1) && w.is_positive(), || format!("g={g} n={n} p={p}"))?;
            }
            let book = RationalOpenBook::integral(g as i64, 1).with_monodromy(TwistWord::empty());
            if p >= 2 {
                let block = NoduleLayout::connected(p, g).map_err(err)?.garside_block(1);
                ensure(block.positive_count() == (2 * g + 1) * (4 * g + 1), || format!("block g={g} p={p}"))?;
                let w = monodromy_p1_connected(&book, p).map_err(err)?;
                ensure(w.positive_count() == (p - 1) * block.len(), || format!("connected g={g} p={p}"))?;
            }
            let w = monodromy_22_connected(&book).map_err(err)?;
            ensure(w.positive_count() == 2 * g + 1 && w.is_positive(), || format!("(2,2) g={g}"))?;
        }
    }
    Ok(())
}

fn oracle_suite() -> Check {
    let ws = data::workspace().map_err(err)?;
    let mut names = Vec::new();
    for r in ws.relations() {
        let sys = ws.system(&r.system).map_err(err)?;
        ensure(words_equal_on_homology(&r.lhs, &r.rhs, sys).map_err(err)?, || format!("relation {}", r.name))?;
        names.push(r.name.as_str());
    }
    for want in ["lantern", "generalized_lantern", "chain_g1"] {
        ensure(names.contains(&want), || format!("relation {want} not registered"))?;
    }
    let torus = chain_model(1, 1);
    let six = TwistWord::parse_compact("c1 c2").pow(6);
    ensure(words_equal_on_homology(&six, &TwistWord::parse_compact("bd"), &torus).map_err(err)?, || {
        "(T_a T_b)^6".into()
    })?;
    for g in 0..=3usize {
        let capped = chain_model(g, 0);
        let names: Vec<String> = (1..=2 * g + 1).map(|k| format!("c{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let w = TwistWord::positive(&refs).pow(2 * g as i64 + 2);
        ensure(word_to_symplectic(&w, &capped).map_err(err)?.is_identity(), || format!("odd chain g={g}"))?;
    }
    Ok(())
}

fn replays() -> Check {
    let ws = data::workspace().map_err(err)?;
    for script in data::shipped_scripts().map_err(err)? {
        let log = ws.replay(&script).map_err(err)?;
        ensure(log.records.len() == script.steps.len(), || format!("{}: step records", script.name))?;
        if let Some(e) = &script.expected {
            ensure(&log.final_word == e, || format!("{}: final word", script.name))?;
        }
    }
    let log = ws.replay(&data::script("cable_stabilization").map_err(err)?).map_err(err)?;
    let torus = RationalOpenBook::integral(1, 1).with_monodromy(TwistWord::parse_compact("c1 c1 c2"));
    let generated =
        monodromy_22_connected(&torus).map_err(err)?.rename(|c| c.strip_prefix('d').map(|k| format!("delta{k}")));
    ensure(log.final_word == generated, || format!("(2,2) route ends at {}", log.final_word))?;
    let head: Vec<&str> = log.final_word.generators.iter().take(3).map(|g| g.curve.as_str()).collect();
    ensure(head == ["delta3", "delta2", "delta1"], || format!("head {head:?}"))?;
    let log = ws.replay(&data::script("positive_refactorization").map_err(err)?).map_err(err)?;
    ensure(log.final_word.is_positive(), || format!("corollary script ends at {}", log.final_word))
}

fn farey() -> Check {
    let g = Graph::build();
    let slopes = small_slopes(&g);
    for &a in &slopes {
        let dist = g.distances(g.index[&a], &|_| true);
        for &b in &slopes {
            let path = farey_shortest_path(a, b);
            ensure(path.first() == Some(&a) && path.last() == Some(&b), || format!("{a} -> {b} endpoints"))?;
            ensure(path.windows(2).all(|w| farey_neighbors(w[0], w[1])), || format!("{a} -> {b} not a path"))?;
            ensure(Some(path.len() - 1) == dist[g.index[&b]], || format!("{a} -> {b} not shortest"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 exceptional slopes and verdicts", exceptional, Some(Duration::from_millis(1))),
        ("2 lens torus knot table", torus_table, Some(Duration::from_millis(1))),
        ("3 hopf delta", hopf, None),
        ("4 resolution of -5 surgery on the left trefoil", resolution, Some(Duration::from_millis(10))),
        ("5 mod 10 obstruction for p in 1..=100", obstruction, Some(Duration::from_secs(1))),
        ("6 word-count identities", counts, None),
        ("7 homology oracle suite", oracle_suite, Some(Duration::from_secs(1))),
        ("8 script replay", replays, Some(Duration::from_secs(1))),
        ("9 farey paths against BFS", farey, Some(Duration::from_secs(10))),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let outcome = match (result, limit) {
            (Err(e), _) => Err(e),
            (Ok(()), Some(l)) if took > l => Err(format!("took {took:?}, limit {l:?}")),
            (Ok(()), _) => Ok(()),
        };
        match outcome {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name}  ({took:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
