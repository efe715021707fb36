//! Exact structural predicates: colourability, cliques and generalized books,
//! colour-criticality, cross-edge-maximising partitions and degree classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{iter_bits, popcount, Graph, WORD};

/// An ordered list of disjoint vertex cells covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates disjointness, coverage and non-empty cells.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(i) = cells.iter().position(|c| c.is_empty()) {
            return Err(Error::InvalidInput(format!("cell {i} is empty")));
        }
        Self::new_allow_empty(n, cells)
    }

    pub fn new_allow_empty(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &cells {
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range for order {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInput(format!("vertex {v} appears in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInput(format!("vertex {v} is not covered")));
        }
        Ok(Partition { cells })
    }

    /// The one-cell partition.
    pub fn unit(n: usize) -> Self {
        Partition {
            cells: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// Cells `0..r` from a cell index per vertex; cells may come out empty.
    pub fn from_assignment(assignment: &[usize], r: usize) -> Self {
        let mut cells = vec![Vec::new(); r];
        for (v, &c) in assignment.iter().enumerate() {
            cells[c].push(v);
        }
        Partition { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn order(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Cell index of every vertex.
    pub fn assignment(&self) -> Vec<usize> {
        let mut a = vec![0; self.order()];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                a[v] = i;
            }
        }
        a
    }

    /// `e(V_i)` for every cell.
    pub fn internal_edges(&self, g: &Graph) -> Vec<usize> {
        let a = self.assignment();
        let mut out = vec![0; self.len()];
        for (x, y) in g.edges() {
            if a[x] == a[y] {
                out[a[x]] += 1;
            }
        }
        out
    }

    /// `Σ_{i<j} e(V_i, V_j)`.
    pub fn cross_edges(&self, g: &Graph) -> usize {
        let a = self.assignment();
        g.edges().iter().filter(|&&(x, y)| a[x] != a[y]).count()
    }
}

fn bitset(n: usize, members: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(WORD)];
    for v in members {
        b[v / WORD] |= 1 << (v % WORD);
    }
    b
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Greedy clique seeded from high-degree vertices.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&c| g.has_edge(c, v)) {
            clique.push(v);
        }
    }
    clique
}

struct Colorer<'a> {
    g: &'a Graph,
    r: usize,
    color: Vec<usize>,
    blocked: Vec<u32>,
    saturation: Vec<usize>,
    degree: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

impl Colorer<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.r + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], UNCOLORED);
        for w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.r + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
    }

    fn search(&mut self, max_used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.saturation[v] == self.r {
            return false;
        }
        let limit = (max_used + 2).min(self.r);
        for c in 0..limit {
            if self.blocked[v * self.r + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// A proper colouring with at most `r` colours, if one exists.
///
/// DSATUR-ordered backtracking. A greedy clique is precoloured with distinct
/// colours and new colours are opened one at a time, which removes colour
/// permutation symmetry.
pub fn is_r_colorable(g: &Graph, r: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if r == 0 {
        return None;
    }
    if r >= n {
        return Some((0..n).collect());
    }
    let clique = greedy_clique(g);
    if clique.len() > r {
        return None;
    }
    let mut col = Colorer {
        g,
        r,
        color: vec![UNCOLORED; n],
        blocked: vec![0; n * r],
        saturation: vec![0; n],
        degree: g.degrees(),
    };
    for (c, &v) in clique.iter().enumerate() {
        col.assign(v, c);
    }
    if !col.search(clique.len().saturating_sub(1)) {
        return None;
    }
    let coloring = col.color;
    assert!(
        g.edges().iter().all(|&(a, b)| coloring[a] != coloring[b]),
        "colouring search produced an improper colouring"
    );
    Some(coloring)
}

pub fn is_bipartite(g: &Graph) -> bool {
    is_r_colorable(g, 2).is_some()
}

/// Exact `χ(G)`, scanning upward from the greedy clique size.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let mut r = greedy_clique(g).len().max(1);
    while is_r_colorable(g, r).is_none() {
        r += 1;
    }
    r
}

fn clique_search(g: &Graph, q: usize, clique: &mut Vec<usize>, cand: Vec<u64>) -> bool {
    if clique.len() == q {
        return true;
    }
    if clique.len() + popcount(&cand) < q {
        return false;
    }
    let mut rest = cand;
    loop {
        let Some(v) = iter_bits(&rest).next() else { break };
        rest[v / WORD] &= !(1 << (v % WORD));
        if clique.len() + 1 + popcount(&rest) < q {
            break;
        }
        clique.push(v);
        if clique_search(g, q, clique, and(&rest, g.row(v))) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Some `q`-clique of `G`, found by plain branch and bound over candidate sets.
pub fn find_clique(g: &Graph, q: usize) -> Option<Vec<usize>> {
    if q == 0 {
        return Some(Vec::new());
    }
    let mut clique = Vec::new();
    let all = bitset(g.order(), 0..g.order());
    clique_search(g, q, &mut clique, all).then_some(clique)
}

pub fn contains_clique(g: &Graph, q: usize) -> bool {
    find_clique(g, q).is_some()
}

fn bron_kerbosch(g: &Graph, size: usize, p: Vec<u64>, x: Vec<u64>, best: &mut usize) {
    let np = popcount(&p);
    if np == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + np <= *best {
        return;
    }
    let pivot = iter_bits(&p)
        .chain(iter_bits(&x))
        .max_by_key(|&u| popcount(&and(&p, g.row(u))))
        .expect("p is non-empty");
    let mut p = p;
    let mut x = x;
    let branch: Vec<usize> = iter_bits(&p)
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in branch {
        bron_kerbosch(g, size + 1, and(&p, g.row(v)), and(&x, g.row(v)), best);
        p[v / WORD] &= !(1 << (v % WORD));
        x[v / WORD] |= 1 << (v % WORD);
    }
}

/// `ω(G)` by Bron–Kerbosch with Tomita pivoting.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    bron_kerbosch(g, 0, bitset(n, 0..n), vec![0; n.div_ceil(WORD)], &mut best);
    best
}

/// Smallest-last (degeneracy) vertex order.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order
}

/// A copy of `B_{r,k}`: an `r`-clique and `k` common neighbours of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookWitness {
    pub clique: Vec<usize>,
    pub pages: Vec<usize>,
}

struct BookSearch<'a> {
    g: &'a Graph,
    forward: Vec<Vec<u64>>,
    r: usize,
    k: usize,
}

impl BookSearch<'_> {
    fn extend(&self, clique: &mut Vec<usize>, cand: &[u64], common: &[u64]) -> Option<BookWitness> {
        let missing = self.r - clique.len();
        if missing == 0 {
            return (popcount(common) >= self.k).then(|| BookWitness {
                clique: clique.clone(),
                pages: iter_bits(common).take(self.k).collect(),
            });
        }
        if popcount(cand) < missing || popcount(common) < missing + self.k {
            return None;
        }
        for w in iter_bits(cand) {
            clique.push(w);
            let found = self.extend(
                clique,
                &and(cand, &self.forward[w]),
                &and(common, self.g.row(w)),
            );
            clique.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Decides whether `B_{r,k} ⊆ G`, i.e. whether some `r`-clique has at least
/// `k` common neighbours. Each clique is enumerated once along a degeneracy
/// order.
pub fn contains_generalized_book(g: &Graph, r: usize, k: usize) -> Result<Option<BookWitness>> {
    if r < 2 || k < 1 {
        return Err(Error::InvalidInput(format!("book needs r >= 2 and k >= 1, got r={r}, k={k}")));
    }
    let n = g.order();
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let forward: Vec<Vec<u64>> = (0..n)
        .map(|v| bitset(n, g.neighbors(v).filter(|&w| pos[w] > pos[v])))
        .collect();
    let search = BookSearch { g, forward, r, k };
    for &v in &order {
        let mut clique = vec![v];
        if let Some(w) = search.extend(&mut clique, &search.forward[v], g.row(v)) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// An edge whose removal lowers `χ(G)`, if any.
pub fn is_color_critical(g: &Graph) -> Result<Option<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("colour-criticality needs at least one edge".into()));
    }
    let chi = chromatic_number(g);
    for (a, b) in g.edges() {
        let h = g.without_edge(a, b)?;
        if is_r_colorable(&h, chi - 1).is_some() {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMode {
    Exact,
    Local,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossPartition {
    /// Exactly `r` cells; some may be empty.
    pub partition: Partition,
    pub cross_edges: usize,
    pub exact: bool,
}

/// Largest `rⁿ` the exact mode is willing to enumerate, with the explicit
/// guards `n <= 16` for `r = 2` and `n <= 12` for `r = 3`.
pub fn exact_partition_feasible(r: usize, n: usize) -> bool {
    match r {
        0 | 1 => true,
        2 => n <= 16,
        3 => n <= 12,
        _ => (r as f64).powi(n as i32) <= 3f64.powi(12),
    }
}

struct CutSearch<'a> {
    g: &'a Graph,
    r: usize,
    back: Vec<Vec<usize>>,
    tail: Vec<usize>,
    assign: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
}

impl CutSearch<'_> {
    fn run(&mut self, v: usize, used: usize, cross: usize) {
        let n = self.g.order();
        if v == n {
            if self.best.as_ref().is_none_or(|(b, _)| cross > *b) {
                self.best = Some((cross, self.assign.clone()));
            }
            return;
        }
        if let Some((b, _)) = &self.best {
            if cross + self.tail[v] <= *b {
                return;
            }
        }
        let limit = (used + 1).min(self.r);
        for c in 0..limit {
            let gained = self.back[v].iter().filter(|&&w| self.assign[w] != c).count();
            self.assign[v] = c;
            self.run(v + 1, used.max(c + 1), cross + gained);
        }
    }
}

/// Partition into `r` cells maximising the number of cross edges.
///
/// `Exact` enumerates assignments in restricted-growth order (vertex 0 in
/// cell 0, new cells opened in order) and keeps the lexicographically first
/// maximiser. `Local` moves single vertices, in index order, to the cell
/// holding the fewest of their neighbours until no move strictly helps.
pub fn max_cross_partition(g: &Graph, r: usize, mode: PartitionMode) -> Result<CrossPartition> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("need r >= 2 cells, got {r}")));
    }
    let n = g.order();
    match mode {
        PartitionMode::Exact => {
            if !exact_partition_feasible(r, n) {
                return Err(Error::Feasibility(format!(
                    "exact partition search limited to n <= 16 for r = 2, n <= 12 for r = 3 and \
                     r^n <= 3^12 otherwise (got r={r}, n={n})"
                )));
            }
            let back: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).filter(|&w| w < v).collect()).collect();
            let mut tail = vec![0; n + 1];
            for v in (0..n).rev() {
                tail[v] = tail[v + 1] + back[v].len();
            }
            let mut search = CutSearch {
                g,
                r,
                back,
                tail,
                assign: vec![0; n],
                best: None,
            };
            search.run(0, 0, 0);
            let (cross, assign) = search.best.unwrap_or((0, Vec::new()));
            Ok(CrossPartition {
                partition: Partition::from_assignment(&assign, r),
                cross_edges: cross,
                exact: true,
            })
        }
        PartitionMode::Local => {
            let mut assign: Vec<usize> = (0..n).map(|v| v % r).collect();
            loop {
                let mut moved = false;
                for v in 0..n {
                    let mut count = vec![0usize; r];
                    for w in g.neighbors(v) {
                        count[assign[w]] += 1;
                    }
                    let (best, &low) = count
                        .iter()
                        .enumerate()
                        .min_by_key(|&(c, &k)| (k, c))
                        .expect("r >= 2");
                    if low < count[assign[v]] {
                        assign[v] = best;
                        moved = true;
                    }
                }
                if !moved {
                    break;
                }
            }
            let partition = Partition::from_assignment(&assign, r);
            let cross_edges = partition.cross_edges(g);
            Ok(CrossPartition {
                partition,
                cross_edges,
                exact: false,
            })
        }
    }
}

/// True when some single-vertex move would increase the cross-edge count.
pub fn has_improving_move(g: &Graph, p: &Partition) -> bool {
    let assign = p.assignment();
    let r = p.len();
    (0..g.order()).any(|v| {
        let mut count = vec![0usize; r];
        for w in g.neighbors(v) {
            count[assign[w]] += 1;
        }
        count.iter().any(|&k| k < count[assign[v]])
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeClasses {
    pub eps: f64,
    /// Vertices with `d_{V_i}(v) >= 3 sqrt(eps) n`.
    pub w: Vec<usize>,
    /// Vertices with `d(v) <= (1 - 1/r - 5 sqrt(eps)) n`.
    pub l: Vec<usize>,
    pub w_cells: Vec<Vec<usize>>,
    pub l_cells: Vec<Vec<usize>>,
}

/// Degree classes relative to an `r`-cell partition.
///
/// Thresholds involve `sqrt(eps)`, so both comparisons are squared and
/// evaluated exactly on the binary value of `eps`; boundary cases count as
/// members.
pub fn degree_classes(g: &Graph, p: &Partition, eps: f64) -> Result<DegreeClasses> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidInput(format!("eps must lie in (0, 1), got {eps}")));
    }
    let n = g.order();
    if p.order() != n {
        return Err(Error::InvalidInput("partition does not cover the graph".into()));
    }
    let r = p.len();
    if r == 0 {
        return Err(Error::InvalidInput("partition has no cells".into()));
    }
    let eps_q = BigRational::from_float(eps).expect("finite eps");
    let n_q = BigRational::from_integer(BigInt::from(n));
    let r_q = BigRational::from_integer(BigInt::from(r));
    let nn_eps = &eps_q * &n_q * &n_q;
    let w_rhs = BigRational::from_integer(9.into()) * &nn_eps;
    let l_rhs = BigRational::from_integer(25.into()) * &nn_eps;
    let base = (BigRational::from_integer(1.into()) - BigRational::from_integer(1.into()) / &r_q) * &n_q;
    let assign = p.assignment();

    let mut w_cells = vec![Vec::new(); r];
    let mut l_cells = vec![Vec::new(); r];
    for v in 0..n {
        let c = assign[v];
        let inside = g.neighbors(v).filter(|&x| assign[x] == c).count();
        let inside_q = BigRational::from_integer(BigInt::from(inside));
        if &inside_q * &inside_q >= w_rhs {
            w_cells[c].push(v);
        }
        let slack = &base - BigRational::from_integer(BigInt::from(g.degree(v)));
        if !slack.is_negative() && &slack * &slack >= l_rhs {
            l_cells[c].push(v);
        }
    }
    let flatten = |cells: &[Vec<usize>]| {
        let mut all: Vec<usize> = cells.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    };
    Ok(DegreeClasses {
        eps,
        w: flatten(&w_cells),
        l: flatten(&l_cells),
        w_cells,
        l_cells,
    })
}

/// Complete bipartite once isolated vertices are dropped (needs an edge).
pub fn is_complete_bipartite(g: &Graph) -> bool {
    let core: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    if core.is_empty() {
        return false;
    }
    let h = g.induced(&core);
    let Some(col) = is_r_colorable(&h, 2) else {
        return false;
    };
    let a = col.iter().filter(|&&c| c == 0).count();
    h.edge_count() == a * (h.order() - a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, generalized_book, make_multipartite, turan, y_graph, YGraphLabels};

    #[test]
    fn colorability_examples() {
        assert!(is_r_colorable(&turan(3, 9).unwrap(), 3).is_some());
        assert!(is_r_colorable(&y_graph(3, 9).unwrap(), 3).is_none());
        let c5 = cycle(5).unwrap();
        assert!(is_r_colorable(&c5, 2).is_none());
        assert!(is_r_colorable(&c5, 3).is_some());
        assert_eq!(is_r_colorable(&Graph::empty(0), 0), Some(vec![]));
        assert!(is_r_colorable(&Graph::empty(2), 0).is_none());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&generalized_book(3, 2).unwrap()), 4);
        assert_eq!(chromatic_number(&y_graph(3, 9).unwrap()), 4);
        assert_eq!(chromatic_number(&complete(7)), 7);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn book_examples() {
        let w = contains_generalized_book(&complete(5), 3, 1).unwrap().unwrap();
        assert_eq!(w.clique.len(), 3);
        assert_eq!(w.pages.len(), 1);
        assert!(contains_generalized_book(&turan(3, 9).unwrap(), 3, 1).unwrap().is_none());
        let y = y_graph(3, 12).unwrap();
        for k in 1..=3 {
            assert!(contains_generalized_book(&y, 3, k).unwrap().is_none());
        }
        assert!(contains_generalized_book(&y, 2, 1).unwrap().is_some());
        assert!(contains_generalized_book(&y, 1, 1).is_err());
        assert!(contains_generalized_book(&y, 3, 0).is_err());
    }

    #[test]
    fn clique_finders_agree_on_small_families() {
        for g in [complete(6), turan(3, 9).unwrap(), y_graph(3, 9).unwrap(), cycle(7).unwrap()] {
            let w = clique_number(&g);
            assert!(contains_clique(&g, w));
            assert!(!contains_clique(&g, w + 1));
        }
    }

    #[test]
    fn color_critical_examples() {
        assert!(is_color_critical(&complete(4)).unwrap().is_some());
        assert!(is_color_critical(&cycle(4).unwrap()).unwrap().is_none());
        assert!(is_color_critical(&generalized_book(3, 2).unwrap()).unwrap().is_some());
        assert!(is_color_critical(&Graph::empty(3)).is_err());
    }

    #[test]
    fn cross_partition_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(max_cross_partition(&c5, 2, PartitionMode::Exact).unwrap().cross_edges, 4);
        let k33 = make_multipartite(&[3, 3]).unwrap();
        assert_eq!(max_cross_partition(&k33, 2, PartitionMode::Exact).unwrap().cross_edges, 9);
        let k4 = complete(4);
        let p = max_cross_partition(&k4, 2, PartitionMode::Exact).unwrap();
        assert_eq!(p.cross_edges, 4);
        assert_eq!(p.partition.cells(), &[vec![0, 1], vec![2, 3]]);
        assert!(matches!(
            max_cross_partition(&complete(17), 2, PartitionMode::Exact),
            Err(Error::Feasibility(_))
        ));
        assert!(matches!(
            max_cross_partition(&complete(13), 3, PartitionMode::Exact),
            Err(Error::Feasibility(_))
        ));
        let local = max_cross_partition(&c5, 2, PartitionMode::Local).unwrap();
        assert!(!local.exact);
        assert!(!has_improving_move(&c5, &local.partition));
    }

    #[test]
    fn degree_class_examples() {
        let t = turan(3, 9).unwrap();
        let natural = Partition::new(9, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        let dc = degree_classes(&t, &natural, 0.01).unwrap();
        assert!(dc.w.is_empty() && dc.l.is_empty());

        let l = YGraphLabels::new(3, 9).unwrap();
        let y = y_graph(3, 9).unwrap();
        let cells: Vec<Vec<usize>> = (0..3).map(|b| l.block_range(b).collect()).collect();
        let p = Partition::new(9, cells).unwrap();
        let dc = degree_classes(&y, &p, 0.0001).unwrap();
        assert!(dc.l.contains(&l.u));
        // Direct count: u and w each have one neighbour inside T_2, the
        // threshold 3 * 0.01 * 9 = 0.27 is cleared by any positive count.
        assert_eq!(dc.w, vec![l.u, l.w]);
        // L threshold 5.55: T_1 vertices and u drop to degree 5.
        let mut expect: Vec<usize> = l.block_range(l.t1).chain([l.u]).collect();
        expect.sort_unstable();
        assert_eq!(dc.l, expect);

        // Near eps = 1 both thresholds leave the feasible degree range.
        let nearly_one = degree_classes(&y, &p, 0.999_999).unwrap();
        assert!(nearly_one.l.is_empty() && nearly_one.w.is_empty());
        assert!(degree_classes(&y, &p, 0.0).is_err());
        assert!(degree_classes(&y, &p, 1.0).is_err());
        assert!(degree_classes(&y, &p, f64::NAN).is_err());
    }

    #[test]
    fn degree_class_boundary_is_inclusive() {
        // eps = 1/16 puts the W threshold at exactly 3 for n = 4.
        let g = complete(4);
        let p = Partition::unit(4);
        let dc = degree_classes(&g, &p, 1.0 / 16.0).unwrap();
        assert_eq!(dc.w, vec![0, 1, 2, 3]);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new_allow_empty(3, vec![vec![0, 1, 2], vec![]]).is_ok());
        assert!(Partition::new(2, vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert!(is_complete_bipartite(&make_multipartite(&[2, 3]).unwrap()));
        assert!(is_complete_bipartite(&crate::graph::union(&complete(2), &Graph::empty(2))));
        assert!(!is_complete_bipartite(&cycle(6).unwrap()));
        assert!(!is_complete_bipartite(&complete(3)));
        assert!(!is_complete_bipartite(&Graph::empty(3)));
    }
}
