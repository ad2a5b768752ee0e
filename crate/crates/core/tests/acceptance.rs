//! Acceptance suite. Every criterion runs and prints one PASS/FAIL line;
//! the test fails afterwards if any criterion failed.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::{ab, all_words, curated_transducers, random_acyclic_corpus, relates};
use langdist::oracle::{brute_inner_distance, brute_outputs, functionality_witness};
use langdist::{
    build_channel_transducer, build_iat_transducer, correct_product, detect_product,
    edit_distance_words, gen_family_a, gen_family_b, is_functional, Algorithm, DistanceOptions,
    DistanceResult, Nfa, Word,
};

type Outcome = Result<String, String>;

/// Distances per instance label and algorithm, for the pruning comparison.
type Results = HashMap<(String, Algorithm), DistanceResult>;

fn options(prune_diagonals: bool) -> DistanceOptions {
    DistanceOptions {
        prune_diagonals,
        deadline: None,
    }
}

fn run_all(
    label: &str,
    a: &Nfa,
    expected: usize,
    prune: bool,
    out: &mut Results,
) -> Result<(), String> {
    for alg in Algorithm::ALL {
        let r = alg
            .run(a, &options(prune))
            .map_err(|e| format!("{label} {alg}: {e}"))?;
        let ok = match alg {
            Algorithm::Correct => r.contains(expected),
            _ => r == DistanceResult::Exact(expected),
        };
        if !ok {
            return Err(format!("{label} {alg}: got {r}, expected {expected}"));
        }
        out.insert((label.to_string(), alg), r);
    }
    Ok(())
}

fn family_a_ground_truth(prune: bool, out: &mut Results) -> Outcome {
    for n in 2..=12 {
        run_all(&format!("A_{n}"), &gen_family_a(n).unwrap(), n, prune, out)?;
    }
    let start = Instant::now();
    for n in 2..=12 {
        let a = gen_family_a(n).unwrap();
        let d = Algorithm::Best
            .run(&a, &options(prune))
            .map_err(|e| e.to_string())?;
        if d != DistanceResult::Exact(n) {
            return Err(format!("A_{n} best: {d}"));
        }
    }
    let sweep = start.elapsed();
    if sweep >= Duration::from_secs(5) {
        return Err(format!("best sweep took {sweep:?}"));
    }
    Ok(format!(
        "A_2..A_12 exact for all algorithms; best sweep {sweep:?}"
    ))
}

fn family_b_ground_truth(prune: bool, out: &mut Results) -> Outcome {
    for n in 3..=8 {
        run_all(&format!("B_{n}"), &gen_family_b(n).unwrap(), 2, prune, out)?;
    }
    Ok("B_3..B_8 all equal 2".into())
}

fn oracle_corpus(prune: bool, out: &mut Results) -> Outcome {
    let corpus = random_acyclic_corpus(0xacce, 200);
    let start = Instant::now();
    for (i, a) in corpus.iter().enumerate() {
        let d = brute_inner_distance(a, a.num_states()).map_err(|e| format!("#{i}: {e}"))?;
        run_all(&format!("corpus#{i}"), a, d, prune, out)?;
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        return Err(format!("corpus took {elapsed:?}"));
    }
    Ok(format!(
        "{} instances, zero mismatches, {elapsed:?}",
        corpus.len()
    ))
}

fn transducer_semantics() -> Outcome {
    let sigma = ab();
    let words = all_words(&sigma, 5);
    let start = Instant::now();
    let mut checked = 0usize;
    for k in 1..=3u32 {
        let iat = build_iat_transducer(k, &sigma).unwrap();
        let ch = build_channel_transducer(k, &sigma).unwrap();
        let image: HashMap<&Word, _> = words
            .iter()
            .map(|u| (u, brute_outputs(&iat, u, 5)))
            .collect();
        for u in &words {
            let ch_out = brute_outputs(&ch, u, 5);
            for v in &words {
                let d = edit_distance_words(u, v);
                let fwd = image[u].contains(v);
                let render = || format!("k={k} u={} v={}", sigma.render(u), sigma.render(v));
                if fwd && !(1..=k as usize).contains(&d) {
                    return Err(format!("(i) {} with d={d}", render()));
                }
                if (1..=k as usize).contains(&d) && !fwd && !image[v].contains(u) {
                    return Err(format!("(ii) {} not covered", render()));
                }
                if u == v && fwd {
                    return Err(format!("(iii) {}", render()));
                }
                if ch_out.contains(v) != (d <= k as usize) {
                    return Err(format!("(iv) {} d={d}", render()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (k, u, v) triples in {:?}",
        start.elapsed()
    ))
}

fn characterizations() -> Outcome {
    let mut cases: Vec<(String, Nfa, usize)> = (2..=6)
        .map(|n| (format!("A_{n}"), gen_family_a(n).unwrap(), n))
        .collect();
    cases.extend((3..=4).map(|n| (format!("B_{n}"), gen_family_b(n).unwrap(), 2)));
    let mut checked = 0;
    for (name, a, d) in &cases {
        for k in 1..=(*d as u32 + 1).min(4) {
            let ch = build_channel_transducer(k, a.alphabet()).unwrap();
            let detect = is_functional(&detect_product(&ch, a).unwrap());
            if detect != ((k as usize) < *d) {
                return Err(format!("{name} k={k}: detect functional = {detect}"));
            }
            let correct = is_functional(&correct_product(&ch, a).unwrap());
            if correct != (2 * (k as usize) < *d) {
                return Err(format!("{name} k={k}: correct functional = {correct}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (instance, k) pairs"))
}

/// Minimum over several runs after a warm-up.
fn time(a: &Nfa, alg: Algorithm, runs: usize) -> Duration {
    let opts = DistanceOptions::default();
    alg.run(a, &opts).unwrap();
    (0..runs)
        .map(|_| {
            let start = Instant::now();
            alg.run(a, &opts).unwrap();
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn performance_ordering() -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for n in [13, 21] {
        let a = gen_family_a(n).unwrap();
        let best = time(&a, Algorithm::Best, 7);
        let first = time(&a, Algorithm::First, 7);
        let correct = time(&a, Algorithm::Correct, 3);
        let ratio = first.as_secs_f64() / best.as_secs_f64();
        notes.push(format!(
            "A_{n}: best {best:?}, first {first:?}, correct {correct:?}, first/best {ratio:.1}x"
        ));
        if !(best < first && first < correct) {
            failures.push(format!("A_{n}: ordering best < first < correct violated"));
        }
        if n == 21 && ratio < 10.0 {
            failures.push(format!("A_21: first/best ratio {ratio:.1}x is below 10x"));
        }
    }
    let notes = notes.join("; ");
    if failures.is_empty() {
        Ok(notes)
    } else {
        Err(format!("{}; {notes}", failures.join("; ")))
    }
}

fn functionality_soundness() -> Outcome {
    let suite = curated_transducers();
    if suite.len() < 100 {
        return Err(format!("only {} transducers", suite.len()));
    }
    let mut negatives = 0;
    for (name, t) in &suite {
        let fast = is_functional(t);
        let witness = functionality_witness(t, 6);
        match (fast, witness) {
            (true, None) => {}
            (false, Some((x, y1, y2))) => {
                if y1 == y2 || !relates(t, &x, &y1) || !relates(t, &x, &y2) {
                    return Err(format!("{name}: invalid witness"));
                }
                negatives += 1;
            }
            (fast, w) => return Err(format!("{name}: is_functional = {fast}, witness {w:?}")),
        }
    }
    Ok(format!(
        "{} transducers agree, {negatives} non-functional with witnesses",
        suite.len()
    ))
}

fn pruning_equivalence(plain: &Results) -> Outcome {
    let mut pruned = Results::new();
    family_a_ground_truth(true, &mut pruned)?;
    family_b_ground_truth(true, &mut pruned)?;
    oracle_corpus(true, &mut pruned)?;
    if pruned.len() != plain.len() {
        return Err(format!(
            "{} pruned results vs {} plain",
            pruned.len(),
            plain.len()
        ));
    }
    for (key, r) in &pruned {
        if plain.get(key) != Some(r) {
            return Err(format!(
                "{} {}: pruned {r} vs {:?}",
                key.0,
                key.1,
                plain.get(key)
            ));
        }
    }
    Ok(format!("{} results identical", pruned.len()))
}

#[test]
fn acceptance() {
    let mut plain = Results::new();
    let report: Vec<(u32, &str, Outcome)> = vec![
        (
            1,
            "family A ground truth",
            family_a_ground_truth(false, &mut plain),
        ),
        (
            2,
            "family B ground truth",
            family_b_ground_truth(false, &mut plain),
        ),
        (
            3,
            "oracle equivalence corpus",
            oracle_corpus(false, &mut plain),
        ),
        (4, "transducer semantics", transducer_semantics()),
        (
            5,
            "detection/correction characterizations",
            characterizations(),
        ),
        (6, "performance ordering", performance_ordering()),
        (7, "functionality-test soundness", functionality_soundness()),
        (
            8,
            "diagonal-pruning equivalence",
            pruning_equivalence(&plain),
        ),
    ];

    println!();
    let mut failed = Vec::new();
    for (id, name, outcome) in &report {
        match outcome {
            Ok(detail) => println!("PASS [{id}] {name}: {detail}"),
            Err(detail) => {
                println!("FAIL [{id}] {name}: {detail}");
                failed.push(*id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
