//! Cross-checks against slow, independent reference computations.

use std::collections::HashSet;

use nalgebra::DMatrix;
use spexlab::graph::{graph6_encode, y_graph, Graph};
use spexlab::random::{self, Rng64};
use spexlab::search::{are_isomorphic, count_graphs, enumerate_graphs, EnumOptions};
use spexlab::spectral::{spectral_radius_with, SpectralOptions};
use spexlab::structure::{
    chromatic_number, clique_number, contains_generalized_book, max_cross_partition, PartitionMode,
};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Number of unlabelled graphs via Burnside: the average over permutations of
/// 2^(number of orbits on unordered pairs).
fn burnside_count(n: usize) -> u128 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = HashSet::new();
        let mut orbits = 0u32;
        for j in 1..n {
            for i in 0..j {
                if seen.contains(&(i, j)) {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b) = (i, j);
                loop {
                    seen.insert((a.min(b), a.max(b)));
                    a = p[a];
                    b = p[b];
                    if (a.min(b), a.max(b)) == (i, j) {
                        break;
                    }
                }
            }
        }
        total += 1u128 << orbits;
    }
    total / perms.len() as u128
}

fn pair_bits(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    bits
}

fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| pair_bits(g, p)).max().unwrap()
}

#[test]
fn burnside_oracle_matches_known_counts() {
    let known = [1u128, 1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &c) in known.iter().enumerate() {
        assert_eq!(burnside_count(n), c, "n={n}");
    }
}

#[test]
fn enumeration_counts_match_burnside() {
    for n in 0..=8 {
        let got = count_graphs(n, &EnumOptions::default()).unwrap() as u128;
        assert_eq!(got, burnside_count(n), "n={n}");
    }
}

#[test]
fn enumeration_matches_labelled_dedup() {
    for n in 1..=5 {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            classes.insert(brute_canonical(&Graph::from_edges(n, &edges).unwrap(), &perms));
        }
        let listed: HashSet<u64> = enumerate_graphs(n)
            .unwrap()
            .iter()
            .map(|g| brute_canonical(g, &perms))
            .collect();
        assert_eq!(listed, classes, "n={n}");
    }
}

#[test]
fn enumeration_has_no_isomorphic_pairs() {
    for n in 1..=6 {
        let graphs = enumerate_graphs(n).unwrap();
        let perms = permutations(n);
        let keys: HashSet<u64> = graphs.iter().map(|g| brute_canonical(g, &perms)).collect();
        assert_eq!(keys.len(), graphs.len(), "n={n}");
        if n <= 5 {
            for (i, a) in graphs.iter().enumerate() {
                for b in &graphs[i + 1..] {
                    assert!(!are_isomorphic(a, b).unwrap());
                }
            }
        }
    }
}

fn brute_contains_book(g: &Graph, r: usize, k: usize) -> bool {
    let n = g.order();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == r).any(|s| {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let clique = verts.iter().all(|&a| verts.iter().all(|&b| a == b || g.has_edge(a, b)));
        let pages = (0..n)
            .filter(|&x| s >> x & 1 == 0 && verts.iter().all(|&a| g.has_edge(a, x)))
            .count();
        clique && pages >= k
    })
}

#[test]
fn book_detection_matches_subset_search() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            for r in 2..=4 {
                for k in 1..=3 {
                    let found = contains_generalized_book(&g, r, k).unwrap();
                    assert_eq!(found.is_some(), brute_contains_book(&g, r, k), "{g:?} r={r} k={k}");
                    if let Some(w) = found {
                        assert_eq!((w.clique.len(), w.pages.len()), (r, k));
                        for &a in &w.clique {
                            assert!(w.clique.iter().all(|&b| a == b || g.has_edge(a, b)));
                            assert!(w.pages.iter().all(|&p| g.has_edge(a, p)));
                        }
                    }
                }
            }
        }
    }
}

fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&c| {
            if c == 0 {
                return n == 0;
            }
            let total = c.pow(n as u32);
            (0..total).any(|code| {
                let colour: Vec<usize> = (0..n).map(|v| code / c.pow(v as u32) % c).collect();
                g.edges().iter().all(|&(a, b)| colour[a] != colour[b])
            })
        })
        .unwrap()
}

fn brute_clique(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|s| {
            let v: Vec<usize> = (0..n).filter(|&x| s >> x & 1 == 1).collect();
            v.iter().all(|&a| v.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn chromatic_and_clique_numbers_match_brute_force() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(chromatic_number(&g), brute_chromatic(&g), "{g:?}");
            assert_eq!(clique_number(&g), brute_clique(&g), "{g:?}");
        }
    }
}

fn brute_max_cut(g: &Graph, r: usize) -> usize {
    let n = g.order();
    let total = r.pow(n as u32);
    (0..total)
        .map(|code| {
            let part: Vec<usize> = (0..n).map(|v| code / r.pow(v as u32) % r).collect();
            g.edges().iter().filter(|&&(a, b)| part[a] != part[b]).count()
        })
        .max()
        .unwrap()
}

#[test]
fn exact_cross_partition_matches_brute_force() {
    let mut rng: Rng64 = random::rng(11);
    for trial in 0..40 {
        let n = 3 + trial % 6;
        let g = random::gnp(&mut rng, n, 0.5);
        for r in 2..=3 {
            let cut = max_cross_partition(&g, r, PartitionMode::Exact).unwrap();
            assert!(cut.exact);
            assert_eq!(cut.cross_edges, brute_max_cut(&g, r), "{g:?} r={r}");
            assert_eq!(cut.partition.cross_edges(&g), cut.cross_edges);
        }
    }
}

fn dense_largest_eigenvalue(g: &Graph) -> f64 {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    m.symmetric_eigen().eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

#[test]
fn power_iteration_matches_dense_eigensolver() {
    let mut rng = random::rng(5);
    let opts = SpectralOptions::high_precision();
    for trial in 0..60 {
        let n = 2 + trial % 40;
        let g = match trial % 3 {
            0 => random::gnp(&mut rng, n, 0.3),
            1 => random::connected(&mut rng, n, 0.05),
            _ => random::r_partite(&mut rng, n, 2, 0.6).0,
        };
        let got = spectral_radius_with(&g, &opts).unwrap().rho;
        assert!((got - dense_largest_eigenvalue(&g)).abs() < 1e-9, "{} {got}", graph6_encode(&g));
    }
    for r in 3..=4 {
        for n in [2 * r, 17, 30] {
            let g = y_graph(r, n).unwrap();
            let got = spectral_radius_with(&g, &opts).unwrap().rho;
            assert!((got - dense_largest_eigenvalue(&g)).abs() < 1e-10);
        }
    }
}
