mod common;

use common::{ab, finite, random_acyclic_corpus};
use langdist::oracle::brute_inner_distance;
use langdist::{
    build_iat_transducer, dist_best_inp_alter, dist_err_correct, dist_err_detect,
    dist_first_inp_alter, dist_next_inp_alter, gen_family_a, gen_family_b, parse_nfa,
    range_intersection_nfa, working_bound, Algorithm, DistanceOptions, DistanceResult, Nfa,
};

fn check_agreement(a: &Nfa, expected: usize) {
    for prune_diagonals in [false, true] {
        let opts = DistanceOptions {
            prune_diagonals,
            ..Default::default()
        };
        for alg in Algorithm::ALL {
            let r = alg.run(a, &opts).unwrap();
            assert!(r.contains(expected), "{alg} gave {r}, expected {expected}");
            if let DistanceResult::Pair(x, y) = r {
                assert_eq!(y, x + 1);
            }
        }
    }
    assert!(expected <= working_bound(a).unwrap());
}

#[test]
fn small_examples() {
    let sigma = ab();
    assert_eq!(dist_err_detect(&finite(&sigma, &["aa", "ab"])).unwrap(), 1);
    assert_eq!(
        dist_err_correct(&finite(&sigma, &["aa", "ab"])).unwrap(),
        DistanceResult::Pair(1, 2)
    );
    assert_eq!(
        dist_next_inp_alter(&finite(&sigma, &["aa", "ab"])).unwrap(),
        1
    );
    assert_eq!(
        dist_best_inp_alter(&finite(&sigma, &["aab", "abb"])).unwrap(),
        1
    );
    assert_eq!(dist_err_detect(&gen_family_a(5).unwrap()).unwrap(), 5);
    assert_eq!(
        dist_err_correct(&gen_family_a(5).unwrap()).unwrap(),
        DistanceResult::Pair(5, 6)
    );
    assert_eq!(dist_first_inp_alter(&gen_family_b(4).unwrap()).unwrap(), 2);
    assert_eq!(
        dist_err_correct(&gen_family_b(3).unwrap()).unwrap(),
        DistanceResult::Pair(1, 2)
    );
    assert_eq!(dist_best_inp_alter(&gen_family_a(8).unwrap()).unwrap(), 8);
    assert_eq!(dist_best_inp_alter(&gen_family_b(8).unwrap()).unwrap(), 2);
}

#[test]
fn random_corpus_matches_oracle() {
    for a in random_acyclic_corpus(2024, 120) {
        let d = brute_inner_distance(&a, a.num_states()).unwrap();
        check_agreement(&a, d);
    }
}

#[test]
fn families_match_closed_forms() {
    for n in 2..=7 {
        check_agreement(&gen_family_a(n).unwrap(), n);
    }
    for n in 3..=5 {
        check_agreement(&gen_family_b(n).unwrap(), 2);
    }
}

#[test]
fn cyclic_oracle_bounds() {
    // Enumeration to length 3n covers two words of A_n.
    for n in 2..=4 {
        let a = gen_family_a(n).unwrap();
        assert_eq!(brute_inner_distance(&a, 3 * n).unwrap(), n);
    }
    assert_eq!(
        brute_inner_distance(&gen_family_b(3).unwrap(), 3).unwrap(),
        2
    );
}

#[test]
fn epsilon_transitions_in_the_input() {
    // {ab, aab, b} spread over empty-labeled edges.
    let text = "\
(START) |- s
s @epsilon p
s b f
p a q
q @epsilon r
q a r
r b f
f -| (FINAL)
";
    let a = parse_nfa(text).unwrap();
    let d = brute_inner_distance(&a, 5).unwrap();
    assert_eq!(d, 1);
    check_agreement(&a, d);

    // A_4 with every 0-edge split by an empty-labeled step.
    let text = "\
(START) |- 0
0 0 0m
0m @epsilon 1
1 0 1m
1m @epsilon 2
2 0 2m
2m @epsilon 3
3 1 0
3 -| (FINAL)
";
    check_agreement(&parse_nfa(text).unwrap(), 4);
}

/// Each level below the distance has no final triple, the distance level
/// has one, and finals only ever sit at the current level.
#[test]
fn levels_become_nonempty_exactly_at_the_distance() {
    let mut cases: Vec<(Nfa, usize)> = (2..=7).map(|n| (gen_family_a(n).unwrap(), n)).collect();
    cases.extend((3..=5).map(|n| (gen_family_b(n).unwrap(), 2)));
    for a in random_acyclic_corpus(5, 40) {
        let d = brute_inner_distance(&a, a.num_states()).unwrap();
        cases.push((a, d));
    }
    for (a, d) in cases {
        let t = build_iat_transducer(1, a.alphabet()).unwrap();
        let mut p = range_intersection_nfa(&t, &a).unwrap();
        let q = p.source().num_states();
        let r = a.alphabet().len();
        loop {
            let k = p.level() as usize;
            assert!(p.num_states() <= (1 + k + k * r) * q * q);
            assert_eq!(p.has_final_state(), p.has_accepting_path());
            assert_eq!(p.has_final_state(), k == d, "level {k}, distance {d}");
            for id in 0..p.num_states() {
                if p.is_final(id) {
                    assert_eq!(p.states()[id].counter.counter as usize, k);
                }
            }
            if k == d {
                break;
            }
            p.extend();
        }
    }
}

#[test]
fn a3_first_accepts_at_level_three() {
    let a = gen_family_a(3).unwrap();
    let mut p =
        range_intersection_nfa(&build_iat_transducer(1, a.alphabet()).unwrap(), &a).unwrap();
    let mut accepting = Vec::new();
    for _ in 0..3 {
        accepting.push(p.has_accepting_path());
        p.extend();
    }
    accepting.push(p.has_accepting_path());
    assert_eq!(accepting, [false, false, true, false]);
}

#[test]
fn next_without_reachable_final_returns_the_bound() {
    // On A_n nothing within n - 1 errors is found, so the answer is D = n.
    for n in 2..=6 {
        let a = gen_family_a(n).unwrap();
        assert_eq!(working_bound(&a).unwrap(), n);
        assert_eq!(dist_next_inp_alter(&a).unwrap(), n);
    }
}

#[test]
fn trivial_bound_of_one() {
    let sigma = ab();
    let a = finite(&sigma, &["ab", "abb", "bbbbbbbb"]);
    assert_eq!(working_bound(&a).unwrap(), 1);
    check_agreement(&a, 1);
}

#[test]
fn unreachable_part_is_ignored() {
    // Dead states and an unreachable pair of close words.
    let text = "\
(START) |- 0
0 a 1
1 a 2
2 a 3
0 b 4
4 b 5
5 b 3
3 -| (FINAL)
9 a 10
10 -| (FINAL)
9 b 10
0 a 7
";
    let a = parse_nfa(text).unwrap();
    check_agreement(&a, 3);
}
