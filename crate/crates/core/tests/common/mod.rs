//! Independent reference implementation used to cross-check the engine.
//!
//! Nothing here calls into the library's linear algebra: matrices are plain
//! nested vectors, twists are built from the intersection form directly, ranks
//! come from a separate Gaussian elimination, and the boundary-loop map is
//! computed by walking the relator letter by letter.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use surfbundle::symplectic::{BaseKind, HolonomyEntry, HolonomyProblem};
use surfbundle::ZMatrix;

pub type Mat = Vec<Vec<BigInt>>;
type QRow = Vec<BigRational>;

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let (n, m, k) = (a.len(), b[0].len(), b.len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect())
        .collect()
}

pub fn minus_identity(a: &Mat) -> Mat {
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= 1;
    }
    out
}

pub fn from_engine(m: &ZMatrix) -> Mat {
    m.to_rows()
}

fn q(m: &Mat) -> Vec<QRow> {
    m.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Row rank by plain Gaussian elimination over the rationals.
pub fn rank_q(mut rows: Vec<QRow>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for j in c..cols {
                let d = &f * &rows[r][j];
                rows[i][j] -= d;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

pub fn rank(m: &Mat) -> usize {
    rank_q(q(m))
}

/// Inverse by Gauss-Jordan over the rationals; panics unless the result is integral.
pub fn inverse(m: &Mat) -> Mat {
    let n = m.len();
    let mut a: Vec<QRow> = q(m)
        .into_iter()
        .zip(q(&identity(n)))
        .map(|(mut l, r)| {
            l.extend(r);
            l
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    a.into_iter()
        .map(|r| {
            r[n..]
                .iter()
                .map(|x| {
                    assert!(x.is_integer(), "inverse is not integral");
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

fn omega(x: &[BigInt], y: &[BigInt]) -> BigInt {
    (0..x.len() / 2)
        .map(|i| &x[2 * i] * &y[2 * i + 1] - &x[2 * i + 1] * &y[2 * i])
        .sum()
}

pub fn curve_class(name: &str, h: usize) -> Vec<BigInt> {
    let i: usize = name[1..].parse().expect("curve index");
    let mut v = vec![BigInt::zero(); 2 * h];
    match &name[..1] {
        "a" => v[2 * (i - 1)] = int(1),
        "b" => v[2 * i - 1] = int(1),
        "c" => {
            v[2 * (i - 1)] = int(1);
            v[2 * i] = int(-1);
        }
        other => panic!("unknown curve kind {other}"),
    }
    v
}

/// `x ↦ x ± ω(x, c)·c`, as a matrix acting on column vectors.
pub fn twist(c: &[BigInt], inverse: bool) -> Mat {
    let n = c.len();
    let sign = if inverse { int(-1) } else { int(1) };
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[j] = int(1);
        let w = omega(&e, c) * &sign;
        let col: Vec<BigInt> = e.iter().zip(c).map(|(x, ci)| x + &w * ci).collect();
        cols.push(col);
    }
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

/// Evaluates `"Ta1 Tb2^-1 ..."`, leftmost letter applied first.
pub fn word(w: &str, h: usize) -> Mat {
    let mut acc = identity(2 * h);
    for tok in w.split_whitespace() {
        let body = tok.strip_prefix('T').expect("letter starts with T");
        let (name, inverse) = match body.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (body, false),
        };
        acc = mul(&twist(&curve_class(name, h), inverse), &acc);
    }
    acc
}

pub fn hstack(ms: &[Mat]) -> Mat {
    (0..ms[0].len())
        .map(|i| ms.iter().flat_map(|m| m[i].iter().cloned()).collect())
        .collect()
}

pub fn vstack(ms: &[Mat]) -> Mat {
    ms.iter().flat_map(|m| m.iter().cloned()).collect()
}

/// Cylinder tuples swept by transporting each basis class once around the
/// boundary loop `∏ a b a⁻¹ b⁻¹`: crossing generator `x` forwards adds the
/// current class to block `x` and applies `M_x`; crossing it backwards applies
/// `M_x⁻¹` and subtracts the new class from block `x`.
pub fn beta_walk(ms: &[Mat]) -> Mat {
    let n = ms[0].len();
    let blocks = ms.len();
    let mut out: Mat = vec![vec![BigInt::zero(); n]; blocks * n];
    let inverses: Vec<Mat> = ms.iter().map(inverse).collect();
    for col in 0..n {
        let mut alpha: Vec<BigInt> = (0..n).map(|i| if i == col { int(1) } else { int(0) }).collect();
        for k in 0..blocks / 2 {
            let (a, b) = (2 * k, 2 * k + 1);
            for (gen, forward) in [(a, true), (b, true), (a, false), (b, false)] {
                if forward {
                    for i in 0..n {
                        out[gen * n + i][col] += &alpha[i];
                    }
                    alpha = apply(&ms[gen], &alpha);
                } else {
                    alpha = apply(&inverses[gen], &alpha);
                    for i in 0..n {
                        out[gen * n + i][col] -= &alpha[i];
                    }
                }
            }
        }
    }
    out
}

pub fn apply(m: &Mat, v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleDims {
    pub w: usize,
    pub fix: usize,
    pub k: usize,
    pub rank_beta: Option<usize>,
}

pub fn dims(ms: &[Mat], closed: bool) -> OracleDims {
    let n = ms[0].len();
    let shifted: Vec<Mat> = ms.iter().map(minus_identity).collect();
    let w = rank(&hstack(&shifted));
    let fix = n - rank(&vstack(&shifted));
    let k = ms.len() * n - w;
    let rank_beta = closed.then(|| rank(&beta_walk(ms)));
    OracleDims { w, fix, k, rank_beta }
}

pub fn betti(h: usize, g: usize, closed: bool, d: OracleDims) -> [usize; 5] {
    if closed {
        [1, 2 * h - d.w + 2 * g, 2 + d.k - d.rank_beta.unwrap(), 2 * g + d.fix, 1]
    } else {
        [1, 2 * h - d.w + 2 * g, 1 + d.k, 2 * g, 0]
    }
}

/// Every freely reduced nonempty word of length at most `max_len` over
/// `g_1^{±1}, ..., g_n^{±1}`, as `(generator, inverse)` letters.
pub fn reduced_words(n: usize, max_len: usize) -> Vec<Vec<(usize, bool)>> {
    let letters: Vec<(usize, bool)> = (0..n).flat_map(|i| [(i, false), (i, true)]).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if let Some(&(i, inv)) = w.last() {
                    if i == l.0 && inv != l.1 {
                        continue;
                    }
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Distinct products over all reduced words, without any pruning.
pub fn exhaustive_products(ms: &[Mat], max_len: usize) -> HashSet<Mat> {
    let inverses: Vec<Mat> = ms.iter().map(inverse).collect();
    reduced_words(ms.len(), max_len)
        .into_iter()
        .map(|w| {
            w.iter().fold(identity(ms[0].len()), |acc, &(i, inv)| {
                mul(if inv { &inverses[i] } else { &ms[i] }, &acc)
            })
        })
        .collect()
}

pub fn nullity_minus_identity(m: &Mat) -> usize {
    m.len() - rank(&minus_identity(m))
}

const CURVE_KINDS: [&str; 3] = ["a", "b", "c"];

/// Random twist word of length `0..=max_len` on a genus-`h` fiber.
pub fn random_word(rng: &mut ChaCha8Rng, h: usize, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let kind = CURVE_KINDS[rng.gen_range(0..3)];
            let top = if kind == "c" { h - 1 } else { h };
            let idx = rng.gen_range(1..=top);
            let inv = if rng.gen_bool(0.5) { "^-1" } else { "" };
            format!("T{kind}{idx}{inv}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn power(m: &Mat, k: i64) -> Mat {
    let base = if k < 0 { inverse(m) } else { m.clone() };
    (0..k.unsigned_abs()).fold(identity(m.len()), |acc, _| mul(&base, &acc))
}

/// A random holonomy problem together with the oracle's own matrices.
///
/// Closed bases use commuting pairs `(w_i, w_i^{k_i})`, which satisfy the
/// surface relation; one-boundary bases take independent words.
pub fn random_problem(rng: &mut ChaCha8Rng, base: BaseKind) -> (HolonomyProblem, Vec<Mat>) {
    let h = rng.gen_range(2..=3);
    let g = rng.gen_range(1..=2);
    let mut entries = Vec::new();
    let mut mats = Vec::new();
    for _ in 0..g {
        let w = random_word(rng, h, 8);
        let first = word(&w, h);
        entries.push(HolonomyEntry::Word(w.parse().unwrap()));
        let second = match base {
            BaseKind::Closed => {
                let k = rng.gen_range(-2..=2);
                let m = power(&first, k);
                let z = ZMatrix::from_rows(m.clone()).unwrap();
                entries.push(HolonomyEntry::Matrix(z));
                m
            }
            BaseKind::OneBoundary => {
                let w = random_word(rng, h, 8);
                entries.push(HolonomyEntry::Word(w.parse().unwrap()));
                word(&w, h)
            }
        };
        mats.push(first);
        mats.push(second);
    }
    let p = HolonomyProblem::new(h, base, g, entries).expect("random problem is valid");
    (p, mats)
}
