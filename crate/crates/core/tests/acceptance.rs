//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use spexlab::graph::{complete, graph6_decode, graph6_encode, star, turan, y_graph, Graph};
use spexlab::quotient::{verify_lemma32, verify_y_quotient};
use spexlab::random;
use spexlab::search::{
    are_isomorphic, canonical_graph6, conjecture_scan, enumerate_graphs, ex_search, hill_climb, lemma27_scan,
    spex_search, ConjectureKind, PredicateSpec, DEFAULT_CLIMB_TOL,
};
use spexlab::spectral::{
    check_wilf, deletion_bound, rayleigh_quotient, rotate_edges, spectral_radius_with, SpectralOptions,
};
use spexlab::structure::{contains_generalized_book, is_complete_bipartite, is_r_colorable};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut branches = [0usize; 3];
    for n in 9..=60 {
        let rep = verify_lemma32(n).expect("n >= 9");
        branches[rep.branch - 1] += 1;
        if !(rep.poly_match && rep.sign_ok) {
            bad.push(n);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && branches.iter().all(|&b| b > 0) && secs < 10.0,
        format!("quotient polynomial and sign for n in [9,60], branches {branches:?}, failures {bad:?}, {secs:.2}s"),
    )
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 9..=60 {
        let rep = verify_lemma32(n).expect("n >= 9");
        worst = worst.max((rep.rho_quotient - rep.rho_dense).abs());
        if !(rep.rho_agree && rep.rho_above_bound) {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("largest root vs dense rho, max diff {worst:.2e}, failures {bad:?}"))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut min_margin = f64::INFINITY;
    for r in [4usize, 5] {
        for n in 2 * r..=60 {
            let rep = verify_y_quotient(r, n).expect("valid r, n");
            min_margin = min_margin.min(rep.rho_dense - rep.bound);
            if !rep.above_bound {
                bad.push((r, n));
            }
        }
    }
    outcome(bad.is_empty(), format!("rho(Y_r(n)) above bound for r in {{4,5}}, min margin {min_margin:.3e}, failures {bad:?}"))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for r in 3usize..=5 {
        for n in 2 * r..=200 {
            let ey = y_graph(r, n).unwrap().edge_count() as i64;
            let et = turan(r, n).unwrap().edge_count() as i64;
            let (ri, ni) = (r as i64, n as i64);
            let identity = ey == et - ni / ri + 1;
            // 8r e >= 4(r-1) n^2 - 8n - r^2 + 8r
            let lower = 8 * ri * ey >= 4 * (ri - 1) * ni * ni - 8 * ni - ri * ri + 8 * ri;
            if !(identity && lower) {
                bad.push((r, n));
            }
        }
    }
    outcome(bad.is_empty(), format!("edge identity and lower bound for r in 3..=5, n in [2r,200], failures {bad:?}"))
}

const THEOREM_CASES: [(usize, usize); 6] = [(2, 5), (2, 6), (2, 7), (3, 6), (3, 7), (3, 8)];

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for (r, n) in THEOREM_CASES {
        let pred = PredicateSpec { forbid_clique: Some(r + 1), ..Default::default() };
        let rep = spex_search(n, &pred, 0).unwrap();
        let target = canonical_graph6(&turan(r, n).unwrap()).unwrap();
        let ok = rep.unique_champion().is_some_and(|c| c.graph6 == target)
            && rep.gap_to_runner_up.is_some_and(|g| g > 1e-6);
        pass &= ok;
        notes.push(format!("({r},{n}) gap {:.4}", rep.gap_to_runner_up.unwrap_or(f64::NAN)));
    }
    outcome(pass, format!("spex champion is T_r(n): {}, {:.1}s", notes.join(", "), start.elapsed().as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (r, n) in THEOREM_CASES {
        let pred = PredicateSpec { forbid_clique: Some(r + 1), ..Default::default() };
        let rep = ex_search(n, &pred, 0).unwrap();
        let target = canonical_graph6(&turan(r, n).unwrap()).unwrap();
        let ok = rep.unique_champion().is_some_and(|c| c.graph6 == target)
            && rep.gap_to_runner_up.is_some_and(|g| g >= 1.0);
        pass &= ok;
        notes.push(format!("({r},{n}) e={}", rep.champions.first().map_or(0, |c| c.edges)));
    }
    outcome(pass, format!("ex champion is T_r(n) with edge margin >= 1: {}", notes.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut min_margin = f64::INFINITY;
    let cases = (9..=14).map(|n| (3, n)).chain((12..=14).map(|n| (4, n)));
    let mut bad = Vec::new();
    for (r, n) in cases {
        let rep = lemma27_scan(r, n).unwrap();
        min_margin = min_margin.min(rep.margin.unwrap_or(f64::INFINITY));
        if !rep.passed() {
            pass = false;
            bad.push((r, n));
        }
    }
    outcome(pass, format!("family maximum is Y_r(n) uniquely, min margin {min_margin:.3e}, failures {bad:?}"))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for r in [3usize, 4] {
        for n in 2 * r..=60 {
            let g = y_graph(r, n).unwrap();
            let colourable = is_r_colorable(&g, r).is_some();
            for k in 1..=3 {
                if colourable || contains_generalized_book(&g, r, k).unwrap().is_some() {
                    bad.push((r, k, n));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("Y_r(n) non-r-colourable and B_{{r,k}}-free, failures {bad:?}"))
}

fn criterion_9a() -> Outcome {
    let mut rng = random::rng(9001);
    let mut fails = 0;
    for t in 0..1000 {
        let r = 2 + t % 3;
        let n = rng.gen_range(1..=200);
        let p = rng.gen_range(0.05..1.0);
        let (g, _) = random::r_partite(&mut rng, n, r, p);
        if !check_wilf(&g, r, 1e-9).unwrap().holds {
            fails += 1;
        }
    }
    outcome(fails == 0, format!("Wilf bound on 1000 random r-partite graphs, {fails} failures"))
}

fn is_star_leaf(g: &Graph, v: usize) -> bool {
    let n = g.order();
    g.degree(v) == 1 && {
        let c = g.neighbors(v).next().unwrap();
        g.degree(c) == n - 1 && g.edge_count() == n - 1
    }
}

fn criterion_9b() -> Outcome {
    let mut rng = random::rng(9002);
    let mut fails = 0;
    let mut unexpected_equality = 0;
    let mut equalities = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(5..=30);
        let p = rng.gen_range(0.0..0.6);
        let g = random::connected(&mut rng, n, p);
        let v = rng.gen_range(0..n);
        let rep = deletion_bound(&g, v, 1e-9).unwrap();
        fails += !rep.holds as usize;
        if rep.equality {
            equalities += 1;
            let full = g.edge_count() == n * (n - 1) / 2;
            if !full && !is_star_leaf(&g, v) {
                unexpected_equality += 1;
            }
        }
    }
    let mut family_ok = true;
    for n in 2..=30 {
        family_ok &= deletion_bound(&complete(n), 0, 1e-9).unwrap().equality;
        if n >= 3 {
            let s = star(n - 1);
            family_ok &= deletion_bound(&s, n - 1, 1e-9).unwrap().equality;
            family_ok &= !deletion_bound(&s, 0, 1e-9).unwrap().equality;
        }
    }
    outcome(
        fails == 0 && unexpected_equality == 0 && family_ok,
        format!(
            "deletion bound on 1000 random pairs: {fails} failures, {equalities} equalities ({unexpected_equality} unexpected); K_n and star leaves attain equality: {family_ok}"
        ),
    )
}

fn criterion_9c() -> Outcome {
    let mut rng = random::rng(9003);
    let opts = SpectralOptions::with_tol(1e-12);
    let mut done = 0;
    let mut fails = 0;
    let mut min_gain = f64::INFINITY;
    while done < 500 {
        let n = rng.gen_range(5..=30);
        let p = rng.gen_range(0.0..0.5);
        let g = random::connected(&mut rng, n, p);
        let base = spectral_radius_with(&g, &opts).unwrap();
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || base.vector[u] < base.vector[v] {
            continue;
        }
        let pool: Vec<usize> = g.neighbors(v).filter(|&w| w != u && !g.has_edge(u, w)).collect();
        if pool.is_empty() {
            continue;
        }
        let size = rng.gen_range(1..=pool.len());
        let mut s: Vec<usize> = pool.choose_multiple(&mut rng, size).copied().collect();
        s.sort_unstable();
        let h = rotate_edges(&g, u, v, &s).unwrap();
        let gain = spectral_radius_with(&h, &opts).unwrap().rho - base.rho;
        min_gain = min_gain.min(gain);
        fails += (gain <= 1e-9) as usize;
        done += 1;
    }
    outcome(fails == 0, format!("rotation increases rho on 500 valid rotations, min gain {min_gain:.3e}, {fails} failures"))
}

fn criterion_9d() -> Outcome {
    let mut rng = random::rng(9004);
    let opts = SpectralOptions::with_tol(1e-12);
    let mut fails = 0;
    for i in 0..50 {
        let n = 2 + i;
        let g = match i % 3 {
            0 => random::gnp(&mut rng, n, 0.3),
            1 => random::connected(&mut rng, n, 0.1),
            _ => random::r_partite(&mut rng, n, 3, 0.7).0,
        };
        let rho = spectral_radius_with(&g, &opts).unwrap().rho;
        for _ in 0..100 {
            let x = random::vector(&mut rng, n);
            if rayleigh_quotient(&g, &x).unwrap() > rho + 1e-9 {
                fails += 1;
            }
        }
    }
    outcome(fails == 0, format!("Rayleigh quotient <= rho on 50 graphs x 100 vectors, {fails} failures"))
}

fn criterion_9e() -> Outcome {
    let mut total = 0;
    let mut fails = 0;
    for n in 0..=7 {
        for g in enumerate_graphs(n).unwrap() {
            total += 1;
            if graph6_decode(&graph6_encode(&g)).ok().as_ref() != Some(&g) {
                fails += 1;
            }
        }
    }
    outcome(fails == 0 && total == 1 + 1 + 2 + 4 + 11 + 34 + 156 + 1044, format!("graph6 round trip over {total} graphs, {fails} failures"))
}

fn criterion_9f() -> Outcome {
    let g0 = y_graph(3, 30).unwrap();
    let pred = PredicateSpec { forbid_book: Some((3, 2)), require_non_r_partite: Some(3), ..Default::default() };
    let rep = hill_climb(&g0, &pred, 10, DEFAULT_CLIMB_TOL).unwrap();
    outcome(
        rep.trace.is_empty() && rep.local_max && rep.graph == g0,
        format!("hill climb from Y_3(30): {} moves evaluated, {} accepted", rep.moves_evaluated, rep.trace.len()),
    )
}

fn criterion_10() -> Outcome {
    let pred = PredicateSpec { forbid_book: Some((3, 1)), require_non_r_partite: Some(3), ..Default::default() };
    let rep = spex_search(8, &pred, 0).unwrap();
    let y = y_graph(3, 8).unwrap();
    let equals_y = rep.champions.iter().any(|c| are_isomorphic(&graph6_decode(&c.graph6).unwrap(), &y).unwrap());
    let champs: Vec<String> = rep.champions.iter().map(|c| format!("{} rho={:.12}", c.graph6, c.rho)).collect();
    outcome(
        rep.exhaustive && !rep.champions.is_empty(),
        format!(
            "n=8 B_{{3,1}}-free non-3-partite: champions [{}], gap {:?}, equals Y_3(8): {equals_y}, scanned {}",
            champs.join("; "),
            rep.gap_to_runner_up,
            rep.graphs_scanned
        ),
    )
}

fn criterion_11() -> Outcome {
    let rep = conjecture_scan(ConjectureKind::NosalBook { k: 2 }, 7, 0).unwrap();
    let witnesses_bipartite = rep.equality_witnesses.iter().all(|w| is_complete_bipartite(&graph6_decode(&w.graph6).unwrap()));
    let first: Vec<String> = rep
        .violations
        .iter()
        .take(3)
        .map(|v| format!("{} (m={}, rho={:.4} > {:.4})", v.graph6, v.m, v.rho, v.bound))
        .collect();
    outcome(
        rep.violations.is_empty() && witnesses_bipartite,
        format!(
            "B_{{2,2}}-free graphs of order <= 7: {} scanned, {} violations of rho <= sqrt(m) (first: {}), {} equality witnesses, all complete bipartite: {witnesses_bipartite}",
            rep.scanned,
            rep.violations.len(),
            first.join(", "),
            rep.equality_witnesses.len()
        ),
    )
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1", criterion_1),
        ("2", criterion_2),
        ("3", criterion_3),
        ("4", criterion_4),
        ("5", criterion_5),
        ("6", criterion_6),
        ("7", criterion_7),
        ("8", criterion_8),
        ("9a", criterion_9a),
        ("9b", criterion_9b),
        ("9c", criterion_9c),
        ("9d", criterion_9d),
        ("9e", criterion_9e),
        ("9f", criterion_9f),
        ("10", criterion_10),
        ("11", criterion_11),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = Vec::new();
    for (id, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == id) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id}: {} ({:.2}s)", o.detail, start.elapsed().as_secs_f64());
        if !o.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
