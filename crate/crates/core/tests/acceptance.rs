mod common;

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestRunner};

use common::*;
use ncgb_core::catalog::*;
use ncgb_core::groebner::complete_to_degree;
use ncgb_core::monomial::{hilbert_series_monomial, invariants_estimate, lyndon_series, LevelProfile};
use ncgb_core::search::*;
use ncgb_core::words::{is_lyndon, Alphabet};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: &str) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: ok.into() }
    } else {
        Outcome { passed: false, detail: failures.join("; ") }
    }
}

/// Written to the stdout handle so the lines survive test output capture.
fn report(n: usize, o: &Outcome) {
    let line = format!("criterion {n}: {} ({})\n", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    std::io::stdout().write_all(line.as_bytes()).unwrap();
}

fn all_points() -> Vec<(String, BTreeMap<String, String>)> {
    points().into_iter().flat_map(|(id, e)| e.points.into_iter().map(move |p| (id.clone(), p))).collect()
}

fn leading_words() -> Outcome {
    let mut bad = Vec::new();
    for (id, pt) in all_points() {
        let t = Instant::now();
        let p = instantiate_family(&id, &pt).unwrap();
        let st = complete_to_degree(&p.alphabet, &p.relations, 11);
        let lw: Vec<String> = st.leading_words().iter().map(|w| p.alphabet.render(w)).collect();
        if lw != family(&id).unwrap().leading_words {
            bad.push(format!("{id} {pt:?}: {lw:?}"));
        }
        if !st.nontrivial_compositions().is_empty() {
            bad.push(format!("{id} {pt:?}: open compositions"));
        }
        if t.elapsed() > Duration::from_secs(10) {
            bad.push(format!("{id} {pt:?}: {:?}", t.elapsed()));
        }
    }
    outcome(bad, "32 points, degree 11")
}

/// Collapsed series per resolution type against the closed forms. Returns
/// the outcome and the types that disagree.
fn closed_forms() -> (Outcome, Vec<&'static str>) {
    let closed = product_oracle(&[1, 1, 2, 3, 4], 12);
    // Alternating shift polynomials of the (3,4,7) and (4,4,4) resolutions.
    let shifts_347 = inverse_oracle(&[1, -2, 0, 1, 1, -1, 0, 1, -1, -1, 0, 2, -1], 12);
    let shifts_444 = inverse_oracle(&[1, -2, 0, 0, 3, 0, -3, 0, 0, 2, -1], 12);
    let mut bad: BTreeMap<&str, String> = BTreeMap::new();
    for (id, pt) in all_points() {
        let spec = family(&id).unwrap();
        let p = instantiate_family(&id, &pt).unwrap();
        let st = complete_to_degree(&p.alphabet, &p.relations, 12);
        let h = hilbert_series_monomial(&p.alphabet, &st.obstructions(), 12).collapse().to_vec();
        let code = spec.kind.code();
        let want = if spec.kind == ResolutionType::T347 { &shifts_347 } else { &closed };
        if &h != want && !bad.contains_key(code) {
            let n = h.iter().zip(want).position(|(a, b)| a != b).unwrap();
            let own = if h == shifts_444 { ", equals 1/(1-2t+3t^4-3t^6+2t^9-t^10)" } else { "" };
            bad.insert(code, format!("type {code} ({id}): t^{n} coefficient {} vs {}{own}", h[n], want[n]));
        }
    }
    let differing = bad.keys().copied().collect();
    (
        outcome(bad.into_values().collect(), "(3,5,5) and (4,4,4)/(4,4,4,5,5) closed form, (3,4,7) shift inverse"),
        differing,
    )
}

fn leaf(tree: &SearchTree) -> Option<Vec<String>> {
    match tree.complete_leaves().as_slice() {
        [(_, n)] => Some(n.obstructions.iter().map(|(w, _)| w.clone()).collect()),
        _ => None,
    }
}

/// Type, level-2 shifts, γ, obstruction set, expected lowest terms.
type Display<'a> = (ResolutionType, &'a [(u32, u32)], (u32, u32), &'a [&'a str], &'a str);

fn search() -> Outcome {
    let mut bad = Vec::new();
    let mut trees = BTreeMap::new();
    for k in ResolutionType::ALL {
        let t = Instant::now();
        let tree = search_obstructions(k, &SearchConfig::default()).unwrap();
        if t.elapsed() > Duration::from_secs(60) {
            bad.push(format!("{k}: {:?}", t.elapsed()));
        }
        trees.insert(k, tree);
    }
    let want = |id: &str| Some(family(id).unwrap().leading_words.iter().map(|s| s.to_string()).collect());
    if leaf(&trees[&ResolutionType::T355]) != want("A") {
        bad.push("(3,5,5) leaf".into());
    }
    if leaf(&trees[&ResolutionType::T44455]) != want("G") {
        bad.push("(4,4,4,5,5) leaf".into());
    }
    if !trees[&ResolutionType::T4445].complete_leaves().is_empty() {
        bad.push("(4,4,4,5) has complete leaves".into());
    }
    let a = Alphabet::standard2();
    let displays: &[Display] = &[
        (
            ResolutionType::T355,
            &[(2, 1), (2, 3), (1, 4)],
            (4, 7),
            &["x2*x1^2", "x2*x1*x2*x1*x2", "x2^4*x1"],
            "-t1^3*t2^3",
        ),
        (
            ResolutionType::T355,
            &[(2, 1), (2, 3), (1, 4)],
            (4, 7),
            &["x2*x1^2", "x2^2*x1*x2*x1", "x2^4*x1"],
            "t1^2*t2^5",
        ),
        (
            ResolutionType::T4445,
            &[(3, 1), (2, 2), (2, 2), (3, 2)],
            (6, 4),
            &["x2*x1^3", "x2*x1^2*x2", "x2*x1*x2*x1"],
            "-t1^4*t2^2 + t1^3*t2^3",
        ),
        (
            ResolutionType::T444,
            &[(2, 2), (2, 2), (2, 2)],
            (5, 5),
            &["x2*x1^2*x2", "x2*x1*x2*x1", "x2^2*x1^2", "x2*x1*x2^2*x1"],
            "3*t1^4*t2^3 + 2*t1^3*t2^4",
        ),
    ];
    for (k, l2, g, words, lowest) in displays {
        let got = trees[k].shape(l2, *g).and_then(|s| s.find(&a, words)).map(|n| n.lowest_terms.clone());
        if got.as_deref() != Some(*lowest) {
            bad.push(format!("{k} {words:?}: {got:?}"));
        }
    }
    let collapsed: &[Display] = &[
        (ResolutionType::T355, &[(2, 1), (2, 3), (1, 4)], (4, 7), &["x2*x1^2"], "2*t^5"),
        (ResolutionType::T347, &[(2, 1), (1, 3), (3, 4)], (5, 7), &["x2*x1^2", "x2^3*x1"], "t^7"),
    ];
    for (k, l2, g, words, lowest) in collapsed {
        let s = trees[k].shape(l2, *g).unwrap();
        let target = series_from_resolution(&s.shape, 12).unwrap().collapse();
        let v = ncgb_core::Antichain::new(words.iter().map(|w| a.parse_word(w).unwrap())).unwrap();
        let got = series_difference_report(&a, &v, &target).rendered();
        if got != *lowest {
            bad.push(format!("{k} {words:?} collapsed: {got}"));
        }
    }
    outcome(bad, "unique leaves, no (4,4,4,5) leaf, displayed differences")
}

/// Cancels equal multidegrees between adjacent levels, lowest level first.
fn cancel_adjacent(profile: &[LevelProfile]) -> Vec<BTreeMap<String, usize>> {
    let mut levels: Vec<BTreeMap<String, usize>> =
        profile.iter().map(|l| l.degrees.iter().cloned().collect()).collect();
    for n in 0..levels.len().saturating_sub(1) {
        let common: Vec<(String, usize)> =
            levels[n].iter().filter_map(|(d, &c)| levels[n + 1].get(d).map(|&c2| (d.clone(), c.min(c2)))).collect();
        for (d, c) in common {
            for l in [n, n + 1] {
                let e = levels[l].get_mut(&d).unwrap();
                *e -= c;
                if *e == 0 {
                    levels[l].remove(&d);
                }
            }
        }
    }
    levels
}

fn chains() -> Outcome {
    let mut bad = Vec::new();
    let a = Alphabet::standard2();
    for (id, v) in catalog_antichains() {
        let inv = invariants_estimate(&a, &v, 12);
        if inv.d != 5 || inv.longest_path != Some(5) || !inv.finite_chains {
            bad.push(format!("{id}: d={} path={:?}", inv.d, inv.longest_path));
        }
        if !(4..=10).contains(&v.len()) {
            bad.push(format!("{id}: #G={}", v.len()));
        }
        if id == "A" {
            let shape = ResolutionShape::gorenstein5(
                &[(2, 1), (2, 3), (1, 4)].map(|(x, y)| ncgb_core::MultiDegree::new2(x, y)),
                ncgb_core::MultiDegree::new2(4, 7),
            );
            let want: Vec<BTreeMap<String, usize>> = shape
                .levels
                .iter()
                .map(|l| {
                    let mut m = BTreeMap::new();
                    for d in l {
                        *m.entry(d.to_string()).or_insert(0) += 1;
                    }
                    m
                })
                .collect();
            if cancel_adjacent(&inv.chain_profile) != want {
                bad.push(format!("A profile {:?}", inv.chain_profile));
            }
        }
    }
    outcome(bad, "d = 5, no 6-chains, A profile matches the shifts after cancellation, 4 ≤ #G ≤ 10")
}

fn lyndon() -> Outcome {
    let mut bad = Vec::new();
    for (id, pt) in all_points() {
        let p = instantiate_family(&id, &pt).unwrap();
        let st = complete_to_degree(&p.alphabet, &p.relations, 12);
        let v = st.obstructions();
        if !v.words().iter().all(is_lyndon) {
            bad.push(format!("{id}: non-Lyndon obstruction"));
        }
        let h = hilbert_series_monomial(&p.alphabet, &v, 12);
        match lyndon_series(&p.alphabet, &v, 12) {
            Ok((l, prod)) if l.finite && l.gk == Some(5) && prod == h => {}
            Ok((l, _)) => bad.push(format!("{id}: #L={:?} finite={}", l.gk, l.finite)),
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    outcome(bad, "all obstructions Lyndon, #L = 5, product series matches")
}

fn normal() -> Outcome {
    let mut bad = Vec::new();
    for (id, pt) in all_points() {
        let spec = family(&id).unwrap();
        let p = instantiate_family(&id, &pt).unwrap();
        match spec.normal {
            Some(NormalClaim::Element(z)) => {
                let z = family_polys(&p, &[z]).unwrap().remove(0);
                let n = check_normal_element(&z, &p, 12).unwrap().normal;
                let r = check_regular_quotient(&z, &p, 12).unwrap().regular;
                if !(n && r) {
                    bad.push(format!("{id} {pt:?}: normal={n} regular={r}"));
                }
            }
            Some(NormalClaim::Sequence(s)) => {
                let r = check_normal_sequence(&family_polys(&p, s).unwrap(), &p, SEQUENCE_CAP).unwrap();
                if !r.passed || r.finite_dimensional_above.is_none() {
                    bad.push(format!("{id} {pt:?}: sequence"));
                }
            }
            None => {}
        }
    }
    let g = instantiate_family("G", &bindings(&[("p", "1")])).unwrap();
    if !low_degree_normal_pencil(&g, 3).unwrap().iter().all(|v| v.excluded_by.is_some()) {
        bad.push("G has a normal element of degree ≤ 3".into());
    }
    let r = check_normal_sequence(&family_polys(&g, G_ALT_SEQUENCE).unwrap(), &g, SEQUENCE_CAP).unwrap();
    if !r.passed {
        bad.push("G alternative sequence".into());
    }
    outcome(bad, "declared elements, sequences of B, F, G, degree ≤ 3 exclusion, alternative sequence")
}

fn properties() -> Outcome {
    let mut bad = Vec::new();
    let run = |cases: u32, f: &mut dyn FnMut(&mut TestRunner) -> Result<(), String>| {
        let mut runner = TestRunner::new(Config { cases, ..Config::default() });
        f(&mut runner)
    };
    let r = run(50, &mut |t| t.run(&ideal_strategy(), |g| check_ideal(&g)).map_err(|e| e.to_string()));
    if let Err(e) = r {
        bad.push(format!("ideal membership: {e}"));
    }
    if let Some((id, _)) = catalog_antichains().into_iter().find(|(_, v)| !anick_identity(v, 12)) {
        bad.push(format!("Anick identity on {id}"));
    }
    let r = run(10, &mut |t| t.run(&word_list_strategy(), |w| check_antichain(&w)).map_err(|e| e.to_string()));
    if let Err(e) = r {
        bad.push(format!("random antichains: {e}"));
    }
    let r = run(20, &mut |t| t.run(&permutation_strategy(), |p| check_order(&p)).map_err(|e| e.to_string()));
    if let Err(e) = r {
        bad.push(format!("generator order: {e}"));
    }
    if let Err(e) = twist_and_switch_invariance() {
        bad.push(e);
    }
    outcome(bad, "50 ideals, Anick identity, 20 permutations, twist and switch")
}

#[test]
fn acceptance() {
    let (closed, differing) = closed_forms();
    let results = [leading_words(), closed, search(), chains(), lyndon(), normal(), properties()];
    for (i, o) in results.iter().enumerate() {
        report(i + 1, o);
    }
    for (i, o) in results.iter().enumerate() {
        if i == 1 {
            // The (3,5,5) closed form is not the series of the (4,4,4) and
            // (4,4,4,5,5) resolutions; every other type must agree.
            assert_eq!(differing, ["444", "44455"], "{}", o.detail);
            assert!(o.detail.matches("equals").count() == 2, "{}", o.detail);
        } else {
            assert!(o.passed, "criterion {}: {}", i + 1, o.detail);
        }
    }
}
