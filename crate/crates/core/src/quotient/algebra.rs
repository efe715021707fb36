//! Exact integer matrices and polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidInput("matrix rows must form a square".into()));
        }
        Ok(IntMatrix {
            order,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.order.max(1)).map(<[BigInt]>::to_vec).take(self.order).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.order;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// `x I - M` evaluated at an integer `x`.
    pub fn shifted(&self, x: &BigInt) -> IntMatrix {
        let n = self.order;
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = -&*e;
        }
        for i in 0..n {
            out.entries[i * n + i] += x;
        }
        out
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .into_iter()
            .map(|r| r.iter().map(BigInt::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Polynomial with integer coefficients `c_0 + c_1 x + … + c_d x^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Coefficients from the constant term upward; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `den^d · p(num/den)` for `den > 0`; same sign as `p(num/den)`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for i in (0..=d).rev() {
            acc += &self.coeffs[i] * num.pow(i as u32) * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(num/den)` computed in integers.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i32 {
        assert!(den.is_positive(), "denominator must be positive");
        let v = self.eval_scaled(num, den);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Divides out the (positive) content.
    pub fn primitive(&self) -> IntPoly {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Index of the first coefficient that differs from `other`.
    pub fn first_difference(&self, other: &IntPoly) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }

    /// Remainder of `self` by `divisor` scaled by a positive constant so the
    /// division stays in the integers (pseudo-remainder with positive factor).
    fn positive_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let lc_abs = lc.abs();
        let sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let t = rem[top].clone();
            if t.is_zero() {
                rem.pop();
                continue;
            }
            // rem <- |lc| * rem - sign(lc) * t * x^(top-dd) * divisor
            for c in rem.iter_mut() {
                *c *= &lc_abs;
            }
            let f = &sign * &t;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + i] -= &f * dc;
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
        }
        IntPoly::new(rem).primitive()
    }

    /// Sturm chain with every member scaled by a positive factor.
    fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.primitive(), self.derivative().primitive()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[k - 1].degree() == Some(0) {
                break;
            }
            let r = chain[k - 2].positive_pseudo_rem(&chain[k - 1]);
            let neg = IntPoly::new(r.coeffs.iter().map(|c| -c).collect());
            if neg.is_zero() {
                break;
            }
            chain.push(neg);
        }
        chain
    }
}

fn sign_changes(chain: &[IntPoly], num: &BigInt, den: &BigInt) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for p in chain {
        let s = p.sign_at(num, den);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn int(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    fn den(&self) -> BigInt {
        BigInt::one() << self.exp
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp);
        let an = &a.num << (e - a.exp);
        let bn = &b.num << (e - b.exp);
        Dyadic {
            num: an + bn,
            exp: e + 1,
        }
    }

    fn to_f64(&self) -> f64 {
        let n = self.num.to_f64().unwrap_or(f64::NAN);
        n / 2f64.powi(self.exp as i32)
    }
}

/// Largest real root of `p`.
///
/// The root is isolated with an exact Sturm count inside the Cauchy bound
/// `[-B, B]`, `B = 1 + max |c_i / c_d|`, and bisected at dyadic points until
/// the bracket is narrower than `tol`. Two Newton steps then polish the
/// midpoint, kept only if they stay inside the bracket.
pub fn largest_root(p: &IntPoly, tol: f64) -> Result<f64> {
    let Some(d) = p.degree() else {
        return Err(Error::InvalidInput("zero polynomial has no largest root".into()));
    };
    if d == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let lc = p.leading().expect("nonzero").abs();
    let max_ratio: BigInt = p.coeffs[..d]
        .iter()
        .map(|c| {
            let (q, r) = c.abs().div_rem(&lc);
            if r.is_zero() { q } else { q + 1 }
        })
        .max()
        .unwrap_or_default();
    let bound: BigInt = max_ratio + 1;
    let chain = p.sturm_chain();
    let count_above = |x: &Dyadic, hi: &Dyadic| {
        sign_changes(&chain, &x.num, &x.den()) - sign_changes(&chain, &hi.num, &hi.den())
    };
    let mut lo = Dyadic::int(-bound.clone());
    let mut hi = Dyadic::int(bound);
    if count_above(&lo, &hi) == 0 {
        return Err(Error::Numeric("no real root inside the Cauchy bound".into()));
    }
    // Invariant: a root lies in (lo, hi] and none lies above hi.
    let mut iterations = 0;
    while hi.to_f64() - lo.to_f64() > tol {
        let mut mid = Dyadic::midpoint(&lo, &hi);
        // Sturm counts need evaluation points off the roots of p; shifting by
        // ever smaller powers of two stays inside (lo, hi).
        while p.sign_at(&mid.num, &mid.den()) == 0 {
            mid = Dyadic { num: &mid.num * 2 + 1, exp: mid.exp + 1 };
        }
        if count_above(&mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 4096 {
            return Err(Error::Numeric("bisection failed to shrink the bracket".into()));
        }
    }
    let (a, b) = (lo.to_f64(), hi.to_f64());
    if p.sign_at(&hi.num, &hi.den()) == 0 {
        return Ok(b);
    }
    let dp = p.derivative();
    let mut x = 0.5 * (a + b);
    for _ in 0..2 {
        let slope = dp.eval_f64(x);
        if slope == 0.0 || !slope.is_finite() {
            break;
        }
        let next = x - p.eval_f64(x) / slope;
        if next.is_finite() && next >= a && next <= b {
            x = next;
        } else {
            break;
        }
    }
    Ok(x)
}

/// `det(x I - M)` by the Faddeev–LeVerrier recurrence. Every division by `k`
/// is exact over the integers.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    let n = m.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::zeros(n);
    for k in 1..=n {
        // acc <- M * acc + c_{n-k+1} I
        let mut next = m.mul(&acc);
        for i in 0..n {
            next.entries[i * n + i] += &coeffs[n - k + 1];
        }
        acc = next;
        let t = m.mul(&acc).trace();
        let (q, r) = (-t).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        coeffs[n - k] = q;
    }
    IntPoly::new(coeffs)
}

impl Serialize for IntPoly {
    /// Coefficients from the constant term upward, as decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
