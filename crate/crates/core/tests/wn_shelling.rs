#![allow(clippy::needless_range_loop, clippy::manual_div_ceil)]

mod common;

use std::cmp::Ordering;

use common::*;
use cutcomplex::wn_shelling::{
    spanning_count_formula, verify_conjecture, verify_conjecture_with_order, ConjectureOptions, SpanningClass,
    VertexOrder, WnShelling,
};
use cutcomplex::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spanning_complements(w: &WnShelling) -> Vec<VertexSet> {
    let order = w.shelling_order();
    let report = w.complex().verify_shelling(&order).unwrap();
    report.spanning_facets().unwrap().iter().map(|f| f.complement(w.n())).collect()
}

#[test]
fn order_comparisons_follow_the_midpoint_rules() {
    for n in 9..=30 {
        let o = VertexOrder::new(n).unwrap();
        let m = o.m();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let before = o.before(x, y);
                if x < m {
                    assert_eq!(before, y < x || y >= 2 * m - x, "n={n} x={x} y={y}");
                } else {
                    assert_eq!(before, y + x < 2 * m || y > x, "n={n} x={x} y={y}");
                }
                if y < m {
                    assert_eq!(before, y < x && x + y < 2 * m, "n={n} x={x} y={y}");
                }
                if y > m {
                    assert_eq!(before, 2 * m <= x + y && x < y, "n={n} x={x} y={y}");
                }
            }
        }
    }
}

#[test]
fn vertex_order_matches_the_closed_form() {
    for n in 9..=40 {
        let o = VertexOrder::new(n).unwrap();
        let m = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 };
        assert_eq!(o.m(), m);
        let mut seen = vec![false; n];
        for (idx, &v) in o.sequence().iter().enumerate() {
            let t = idx as i64 + 1;
            let sign = if (t - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(v as i64, (m as i64 + sign * (t / 2)).rem_euclid(n as i64));
            assert_eq!(o.position(v), idx + 1);
            seen[v] = true;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(*o.sequence().last().unwrap(), 0);
    }
}

#[test]
fn leaders_stay_between_two_and_n_minus_two() {
    for n in 9..=16 {
        let w = WnShelling::new(n).unwrap();
        for f in w.complex().facets() {
            let sig = w.signature(f.complement(n)).unwrap();
            assert!((2..=n - 2).contains(&sig.leader), "n={n} {sig:?}");
            assert!(sig.low < sig.high);
            let o = w.vertex_order();
            assert!(o.before(sig.leader, sig.low) && o.before(sig.leader, sig.high));
        }
    }
}

fn precedence_matrix(w: &WnShelling) -> Vec<Vec<bool>> {
    let facets = w.complex().facets();
    facets.iter().map(|&f| facets.iter().map(|&g| w.precedes(f, g).unwrap()).collect()).collect()
}

#[test]
fn shelling_order_comparator_is_a_strict_total_order() {
    for n in 9..=12 {
        let w = WnShelling::new(n).unwrap();
        let p = precedence_matrix(&w);
        let t = p.len();
        for i in 0..t {
            assert!(!p[i][i], "n={n}: irreflexivity fails at {i}");
            for j in 0..t {
                if i != j {
                    assert!(p[i][j] ^ p[j][i], "n={n}: pair {i},{j} not exactly one way");
                }
            }
        }
        for i in 0..t {
            for j in 0..t {
                if !p[i][j] {
                    continue;
                }
                for k in 0..t {
                    assert!(!p[j][k] || p[i][k], "n={n}: transitivity fails on {i},{j},{k}");
                }
            }
        }
        let facets = w.complex().facets();
        for (i, &f) in facets.iter().enumerate() {
            for (j, &g) in facets.iter().enumerate() {
                let expected = if i == j {
                    Ordering::Equal
                } else if p[i][j] {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
                assert_eq!(w.cmp_prec(f, g).unwrap(), expected);
            }
        }
    }
}

#[test]
fn comparator_is_transitive_on_random_triples_up_to_sixteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 13..=16 {
        let w = WnShelling::new(n).unwrap();
        let facets = w.complex().facets();
        for _ in 0..20_000 {
            let [a, b, c] = [0; 3].map(|_| facets[rng.gen_range(0..facets.len())]);
            let (ab, bc, ac) = (w.precedes(a, b).unwrap(), w.precedes(b, c).unwrap(), w.precedes(a, c).unwrap());
            assert!(!(ab && bc) || ac, "n={n}");
            if a != b {
                assert!(ab ^ w.precedes(b, a).unwrap());
            }
        }
    }
}

#[test]
fn constructed_orders_are_shellings_by_the_definition() {
    for n in 9..=11 {
        let w = WnShelling::new(n).unwrap();
        let order = w.shelling_order();
        assert!(is_shelling_oracle(&order), "n={n}");
        let spanning: Vec<usize> = (0..order.len()).filter(|&j| is_spanning_oracle(&order, j)).collect();
        assert_eq!(spanning.len(), spanning_count_formula(n).unwrap().total);
    }
}

#[test]
fn displaced_facets_are_never_spanning() {
    for n in 9..=13 {
        let w = WnShelling::new(n).unwrap();
        let spanning = spanning_complements(&w);
        let mut displaced = 0;
        for f in w.complex().facets() {
            let c = f.complement(n);
            if w.displaced_class(c).unwrap().is_some() {
                displaced += 1;
                assert!(!spanning.contains(&c), "n={n} {c}");
            }
        }
        assert!(displaced > 0, "n={n}: no displaced facets at all");
    }
}

#[test]
fn spanning_facets_avoid_the_excluded_shapes() {
    for n in 9..=13 {
        let w = WnShelling::new(n).unwrap();
        for c in spanning_complements(&w) {
            let sig = w.signature(c).unwrap();
            assert_eq!(sig.high, n - 1, "n={n} {c}");
            assert!(![0, 1, 2, n - 2, n - 1].contains(&sig.leader), "n={n} {c}");
            for x in 0..n {
                let a = set(n, &[x, (x + 1) % n, (x + 4) % n]);
                let b = set(n, &[x, (x + 3) % n, (x + 4) % n]);
                assert!(c != a && c != b, "n={n} {c} has an excluded shape");
            }
        }
    }
}

#[test]
fn census_agrees_three_ways() {
    let expected_totals = [1, 6, 12, 19, 27];
    for (n, &expected) in (9..=13).zip(&expected_totals) {
        let w = WnShelling::new(n).unwrap();
        let mut from_order = spanning_complements(&w);
        from_order.sort();
        let members = w.spanning_class_members();
        let mut from_classes: Vec<VertexSet> = members.values().flatten().copied().collect();
        from_classes.sort();
        let formula = spanning_count_formula(n).unwrap();
        assert_eq!(from_order.len(), expected);
        assert_eq!(from_order, from_classes, "n={n}");
        assert_eq!(formula.total, expected);
        let size = |t| members.get(&t).map_or(0, Vec::len);
        assert_eq!(
            (size(SpanningClass::S1), size(SpanningClass::S2), size(SpanningClass::S3)),
            (formula.s1, formula.s2, formula.s3),
            "n={n}"
        );
    }
}

#[test]
fn spanning_facets_of_the_smallest_cases() {
    let w9 = WnShelling::new(9).unwrap();
    assert_eq!(spanning_complements(&w9), vec![set(9, &[3, 7, 8])]);
    let w10 = WnShelling::new(10).unwrap();
    assert_eq!(spanning_complements(&w10).len(), 6);
}

#[test]
fn conjecture_reports_pass_without_homology() {
    for n in 9..=13 {
        let r = verify_conjecture(n, &ConjectureOptions::default()).unwrap();
        assert!(r.all_pass, "{r:?}");
        assert_eq!(r.dimension, n as isize - 4);
        assert_eq!(r.facet_count, w_facets(n));
    }
}

fn w_facets(n: usize) -> usize {
    cut_complex_oracle(&cutcomplex::squared_cycle(n).unwrap(), 3).len()
}

#[test]
fn a_corrupted_order_is_rejected_with_the_oracle_witness() {
    let n = 9;
    let w = WnShelling::new(n).unwrap();
    let good = w.shelling_order();
    let swap = (1..good.len())
        .find(|&j| {
            let mut o = good.clone();
            o.swap(0, j);
            !is_shelling_oracle(&o)
        })
        .expect("some swap with the first facet breaks the order");
    let mut bad = good.clone();
    bad.swap(0, swap);
    let report = w.complex().verify_shelling(&bad).unwrap();
    assert!(!report.is_valid());
    let witness = report.witness().unwrap();
    assert_eq!(Some((witness.earlier, witness.later)), first_violation_oracle(&bad));

    let r = verify_conjecture_with_order(n, &bad, &ConjectureOptions::default()).unwrap();
    assert!(!r.shelling_valid);
    assert!(!r.all_pass);
    assert_eq!(r.witness, Some(witness));
}

#[test]
fn report_serializes_with_stable_field_names() {
    let options = ConjectureOptions { with_homology: true, ..ConjectureOptions::default() };
    let r = verify_conjecture(9, &options).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in [
        "n",
        "m",
        "facet_count",
        "dimension",
        "shelling_valid",
        "spanning_from_order",
        "spanning_from_S",
        "spanning_from_formula",
        "breakdown",
        "betti",
        "all_pass",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["breakdown"]["s1"], 1);
    assert_eq!(v["betti"]["field"], "gf2");
    assert_eq!(v["betti"]["from_dim"], -1);
    assert_eq!(v["betti"]["values"][6], 1);
}
