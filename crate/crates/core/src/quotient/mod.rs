//! Equitable partitions, integer quotient matrices and the characteristic
//! polynomial check for `ρ(Y_3(n))`.

mod algebra;

pub use algebra::{char_poly, largest_root, IntMatrix, IntPoly};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{y_graph, Graph, YGraphLabels};
use crate::spectral::{spectral_radius_with, SpectralOptions};
use crate::structure::Partition;

/// Coarsest equitable partition refining `initial`.
///
/// Each round splits every cell by the vector of neighbour counts into the
/// current cells. Split pieces replace their parent in place, ordered by
/// signature; vertex order inside a piece follows the parent.
pub fn equitable_refine(g: &Graph, initial: &Partition) -> Result<Partition> {
    if initial.order() != g.order() {
        return Err(Error::InvalidInput("partition does not cover the graph".into()));
    }
    let mut cells: Vec<Vec<usize>> = initial.cells().iter().filter(|c| !c.is_empty()).cloned().collect();
    loop {
        let mut owner = vec![0usize; g.order()];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                owner[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for cell in &cells {
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; k];
                    for w in g.neighbors(v) {
                        sig[owner[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            // Stable sort keeps the parent's vertex order inside each piece.
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut piece: Vec<usize> = Vec::new();
            for idx in 0..keyed.len() {
                if idx > 0 && keyed[idx].0 != keyed[idx - 1].0 {
                    next.push(std::mem::take(&mut piece));
                }
                piece.push(keyed[idx].1);
            }
            next.push(piece);
        }
        if next.len() == k {
            return Partition::new(g.order(), cells);
        }
        cells = next;
    }
}

fn count_into(g: &Graph, v: usize, cell: &[usize]) -> usize {
    cell.iter().filter(|&&w| g.has_edge(v, w)).count()
}

pub fn is_equitable(g: &Graph, p: &Partition) -> bool {
    quotient_matrix(g, p).is_ok()
}

/// `b_ij` = number of neighbours in cell `j` of any vertex of cell `i`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<IntMatrix> {
    if p.order() != g.order() {
        return Err(Error::InvalidInput("partition does not cover the graph".into()));
    }
    let cells = p.cells();
    let mut rows = Vec::with_capacity(cells.len());
    for (i, ci) in cells.iter().enumerate() {
        let mut row = Vec::with_capacity(cells.len());
        for (j, cj) in cells.iter().enumerate() {
            let Some(&first) = ci.first() else {
                return Err(Error::InvalidInput(format!("cell {i} is empty")));
            };
            let expect = count_into(g, first, cj);
            for &v in &ci[1..] {
                let got = count_into(g, v, cj);
                if got != expect {
                    return Err(Error::NotEquitable {
                        cell_i: i,
                        cell_j: j,
                        vertex_a: first,
                        count_a: expect,
                        vertex_b: v,
                        count_b: got,
                    });
                }
            }
            row.push(BigInt::from(expect));
        }
        rows.push(row);
    }
    IntMatrix::from_rows(&rows)
}

fn poly_in_n(n: &BigInt, c: &[i64]) -> BigInt {
    c.iter().rev().fold(BigInt::from(0), |acc, &k| acc * n + k)
}

/// The 729-scaled characteristic polynomial of the six-cell quotient of
/// `Y_3(n)`, written out per residue of `n` mod 3.
///
/// Each coefficient of `x^i` is itself a cubic in `n`, listed from the
/// constant term upward.
pub fn lemma32_polynomial(n: usize) -> Result<IntPoly> {
    if n < 6 {
        return Err(Error::InvalidInput(format!("polynomial family defined for n >= 6, got {n}")));
    }
    let table: [[&[i64]; 7]; 3] = [
        [
            &[0, -2430, 1215, -135],
            &[-2916, 2916, -1296, 162],
            &[2187, -2673, 324, 27],
            &[0, -486, 162, -54],
            &[-729, 243, -243],
            &[0],
            &[729],
        ],
        [
            &[2160, -3240, 1215, -135],
            &[-3888, 3564, -1296, 162],
            &[2808, -2430, 324, 27],
            &[540, -648, 162, -54],
            &[-729, 243, -243],
            &[0],
            &[729],
        ],
        [
            &[-3375, -2025, 1215, -135],
            &[-1620, 2754, -1296, 162],
            &[2700, -2835, 324, 27],
            &[-702, -486, 162, -54],
            &[-972, 243, -243],
            &[0],
            &[729],
        ],
    ];
    let nb = BigInt::from(n);
    Ok(IntPoly::new(table[n % 3].iter().map(|c| poly_in_n(&nb, c)).collect()))
}

/// The six cells `{v}, {u}, {w}, T_1∖{v}, T_2∖{u,w}, T_3` of `Y_3(n)`.
pub fn lemma32_partition(n: usize) -> Result<Partition> {
    if n < 9 {
        return Err(Error::Precondition(format!(
            "the six-cell partition of Y_3(n) is only used for n >= 9, got {n}"
        )));
    }
    let l = YGraphLabels::new(3, n)?;
    let third = (0..3).find(|&b| b != l.t1 && b != l.t2).expect("three parts");
    let cells = vec![
        vec![l.v],
        vec![l.u],
        vec![l.w],
        l.block_range(l.t1).filter(|&z| z != l.v).collect(),
        l.block_range(l.t2).filter(|&z| z != l.u && z != l.w).collect(),
        l.block_range(third).collect(),
    ];
    Partition::new(n, cells)
}

fn scale(p: &IntPoly, k: i64) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(|c| c * k).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma32Report {
    pub n: usize,
    /// 1, 2 or 3 for `n ≡ 0, 1, 2 (mod 3)`.
    pub branch: usize,
    pub quotient: IntMatrix,
    /// `729 · det(xI - B)`.
    pub computed: IntPoly,
    pub expected: IntPoly,
    pub poly_match: bool,
    pub first_mismatch: Option<usize>,
    /// Exact sign of the polynomial at `x = 2n/3 - 7/12` is negative.
    pub sign_ok: bool,
    pub rho_quotient: f64,
    pub rho_dense: f64,
    pub rho_agree: bool,
    pub rho_above_bound: bool,
}

impl Lemma32Report {
    pub fn passed(&self) -> bool {
        self.poly_match && self.sign_ok && self.rho_agree && self.rho_above_bound
    }
}

pub const RHO_AGREEMENT_TOL: f64 = 1e-8;

/// Builds `Y_3(n)`, takes its six-cell quotient, and checks the exact
/// polynomial, the sign at `2n/3 - 7/12` and the agreement of the largest
/// root with the dense eigensolver.
pub fn verify_lemma32(n: usize) -> Result<Lemma32Report> {
    let g = y_graph(3, n)?;
    let p = lemma32_partition(n)?;
    let quotient = quotient_matrix(&g, &p)?;
    let computed = scale(&char_poly(&quotient), 729);
    let expected = lemma32_polynomial(n)?;
    let first_mismatch = computed.first_difference(&expected);
    let x_num = BigInt::from(8 * n as i64 - 7);
    let x_den = BigInt::from(12);
    let sign_ok = computed.sign_at(&x_num, &x_den) < 0;
    let rho_quotient = largest_root(&computed, 1e-12)?;
    let rho_dense = spectral_radius_with(&g, &SpectralOptions::high_precision())?.rho;
    let bound = 2.0 * n as f64 / 3.0 - 7.0 / 12.0;
    Ok(Lemma32Report {
        n,
        branch: n % 3 + 1,
        quotient,
        computed,
        expected,
        poly_match: first_mismatch.is_none(),
        first_mismatch,
        sign_ok,
        rho_quotient,
        rho_dense,
        rho_agree: (rho_quotient - rho_dense).abs() <= RHO_AGREEMENT_TOL,
        rho_above_bound: rho_dense > bound,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct YQuotientReport {
    pub r: usize,
    pub n: usize,
    pub cells: usize,
    pub char_poly: IntPoly,
    pub rho_quotient: f64,
    pub rho_dense: f64,
    pub rho_agree: bool,
    /// `(1 - 1/r) n - 2/r - r/(4n)` for `r >= 4`, `2n/3 - 7/12` for `r = 3`.
    pub bound: f64,
    pub above_bound: bool,
}

impl YQuotientReport {
    pub fn passed(&self) -> bool {
        self.rho_agree && self.above_bound
    }
}

/// Generic pipeline for any `r`: coarsest equitable refinement of the unit
/// partition, exact quotient polynomial, largest root against the dense
/// eigensolver, and the lower bound on `ρ(Y_r(n))` checked with a `1e-8`
/// safety margin.
pub fn verify_y_quotient(r: usize, n: usize) -> Result<YQuotientReport> {
    let g = y_graph(r, n)?;
    let p = equitable_refine(&g, &Partition::unit(n))?;
    let b = quotient_matrix(&g, &p)?;
    let cp = char_poly(&b);
    let rho_quotient = largest_root(&cp, 1e-12)?;
    let rho_dense = spectral_radius_with(&g, &SpectralOptions::high_precision())?.rho;
    let (rf, nf) = (r as f64, n as f64);
    let bound = if r == 3 {
        2.0 * nf / 3.0 - 7.0 / 12.0
    } else {
        (1.0 - 1.0 / rf) * nf - 2.0 / rf - rf / (4.0 * nf)
    };
    Ok(YQuotientReport {
        r,
        n,
        cells: p.len(),
        char_poly: cp,
        rho_quotient,
        rho_dense,
        rho_agree: (rho_quotient - rho_dense).abs() <= RHO_AGREEMENT_TOL,
        bound,
        above_bound: rho_dense - RHO_AGREEMENT_TOL > bound,
    })
}
