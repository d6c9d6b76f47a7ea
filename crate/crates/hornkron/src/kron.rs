//! Kronecker coefficients and enumeration of the Kronecker semigroup.
//!
//! - [`kron_coefficient`]: the character triple sum
//!   `g = (1/n!) sum_rho |C_rho| chi^a(rho) chi^b(rho) chi^c(rho)`.
//! - [`kron_oracle`]: an independent route through exact Schur-polynomial
//!   expansion in product variables `x_i y_j`; the two must agree on the
//!   oracle's (small) domain.
//! - [`enumerate_kron`]: all nonzero triples with bounded lengths up to a
//!   size cap.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_table, factorial, partitions_with_at_most};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The Kronecker coefficient `g(alpha, beta, gamma)`, zero when the sizes
/// differ. The `n!` division is asserted exact: a remainder would signal an
/// implementation bug in the character code.
pub fn kron_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return 0;
    }
    let t = character_table(n);
    let ra = t.row_index(alpha).expect("alpha indexes its table");
    let rb = t.row_index(beta).expect("beta indexes its table");
    let rc = t.row_index(gamma).expect("gamma indexes its table");
    let (rowa, rowb, rowc) = (t.row(ra), t.row(rb), t.row(rc));
    let sum: i128 = t
        .class_sizes()
        .iter()
        .enumerate()
        .map(|(i, &cls)| cls as i128 * rowa[i] as i128 * rowb[i] as i128 * rowc[i] as i128)
        .sum();
    let nf = factorial(n) as i128;
    assert!(
        sum % nf == 0 && sum >= 0,
        "character sum {sum} not divisible by {n}! for g({alpha},{beta},{gamma})"
    );
    (sum / nf) as u64
}

/// Exponent-vector polynomial in two groups of variables, used by the
/// Schur-expansion oracle. Keys are `(x exponents, y exponents)`.
type BiPoly = BTreeMap<(Vec<u32>, Vec<u32>), i64>;

/// Monomial expansion of the Schur polynomial `s_shape` in `nvars`
/// variables: content vector of each semistandard tableau, accumulated.
fn schur_monomials(shape: &Partition, nvars: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    if shape.len() > nvars {
        return out;
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; shape.part(r + 1) as usize])
        .collect();
    fn fill(
        shape: &Partition,
        r: usize,
        c: usize,
        nvars: usize,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, i64>,
    ) {
        if r == shape.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < grid[r].len() {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let above = if r > 0 && c < grid[r - 1].len() {
                grid[r - 1][c] + 1
            } else {
                1
            };
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            above.max(left)
        };
        for v in lo..=nvars as u32 {
            grid[r][c] = v;
            content[(v - 1) as usize] += 1;
            fill(shape, nr, nc, nvars, grid, content, out);
            content[(v - 1) as usize] -= 1;
        }
        grid[r][c] = 0;
    }
    if rows == 0 {
        out.insert(vec![0; nvars], 1);
        return out;
    }
    let mut content = vec![0u32; nvars];
    fill(shape, 0, 0, nvars, &mut grid, &mut content, &mut out);
    out
}

/// Expands `s_gamma` in the `e*f` product variables `z_(i,j) = x_i y_j` and
/// decomposes the result in the basis `s_a(x) s_b(y)` by peeling the
/// lexicographically greatest term. Returns the full coefficient map.
fn kron_decomposition(gamma: &Partition, e: usize, f: usize) -> BTreeMap<(Partition, Partition), u64> {
    // s_gamma in the ef product variables, translated to (x, y) exponents;
    // variable (i, j) contributes one box to x_i and one to y_j
    let mono = schur_monomials(gamma, e * f);
    let mut poly: BiPoly = BTreeMap::new();
    for (content, coeff) in mono {
        let mut xs = vec![0u32; e];
        let mut ys = vec![0u32; f];
        for (t, &m) in content.iter().enumerate() {
            xs[t / f] += m;
            ys[t % f] += m;
        }
        *poly.entry((xs, ys)).or_insert(0) += coeff;
    }
    poly.retain(|_, c| *c != 0);

    let mut schur_x: BTreeMap<Partition, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
    let mut schur_y: BTreeMap<Partition, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
    let mut out = BTreeMap::new();
    while let Some(((xs, ys), &coeff)) = poly.last_key_value() {
        let a = Partition::new(xs.clone()).expect("leading x exponent must be dominant");
        let b = Partition::new(ys.clone()).expect("leading y exponent must be dominant");
        assert!(coeff > 0, "negative leading coefficient {coeff} in Schur peel");
        let g = coeff as u64;
        let ma = schur_x
            .entry(a.clone())
            .or_insert_with(|| schur_monomials(&a, e))
            .clone();
        let mb = schur_y
            .entry(b.clone())
            .or_insert_with(|| schur_monomials(&b, f))
            .clone();
        for (ka, ca) in &ma {
            for (kb, cb) in &mb {
                let key = (ka.clone(), kb.clone());
                let entry = poly.entry(key).or_insert(0);
                *entry -= coeff * ca * cb;
            }
        }
        poly.retain(|_, c| *c != 0);
        out.insert((a, b), g);
    }
    out
}

/// Independent cross-check of [`kron_coefficient`]: the multiplicity of
/// `s_alpha(x) s_beta(y)` in `s_gamma` evaluated at the products `x_i y_j`.
/// Practical domain: `|gamma| <= 6`, `e, f <= 3`.
pub fn kron_oracle(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    e: usize,
    f: usize,
) -> Result<u64> {
    if alpha.len() > e || beta.len() > f || gamma.len() > e * f {
        return Err(Error::LengthBoundViolated(format!(
            "lengths ({}, {}, {}) exceed ({e}, {f}, {})",
            alpha.len(),
            beta.len(),
            gamma.len(),
            e * f
        )));
    }
    if alpha.size() != gamma.size() || beta.size() != gamma.size() {
        return Ok(0);
    }
    let table = kron_decomposition(gamma, e, f);
    Ok(table
        .get(&(alpha.clone(), beta.clone()))
        .copied()
        .unwrap_or(0))
}

/// One point of the Kronecker semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KronRecord {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub n: u64,
    pub g: u64,
}

impl KronRecord {
    /// CSV line with partitions in quoted comma syntax.
    pub fn to_csv(&self) -> String {
        format!(
            "\"{}\",\"{}\",\"{}\",{},{}",
            self.alpha, self.beta, self.gamma, self.n, self.g
        )
    }

    pub fn csv_header() -> &'static str {
        "alpha,beta,gamma,n,g"
    }
}

/// All triples with `|alpha| = |beta| = |gamma| = n <= nmax`, lengths
/// bounded by `(e, f, g_len)`, and nonzero Kronecker coefficient.
/// Deterministic order: `n` ascending, then `gamma` (outer), `alpha`,
/// `beta` in lexicographically decreasing partition order.
pub fn enumerate_kron(e: usize, f: usize, g_len: usize, nmax: u64) -> Vec<KronRecord> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        let table = character_table(n);
        let gammas = partitions_with_at_most(n, g_len);
        let alphas = partitions_with_at_most(n, e);
        let betas = partitions_with_at_most(n, f);
        let nf = factorial(n) as i128;
        let per_gamma: Vec<Vec<KronRecord>> = gammas
            .par_iter()
            .map(|gamma| {
                let rowc = table.row(table.row_index(gamma).expect("gamma in table"));
                let mut recs = Vec::new();
                for alpha in &alphas {
                    let rowa = table.row(table.row_index(alpha).expect("alpha in table"));
                    for beta in &betas {
                        let rowb = table.row(table.row_index(beta).expect("beta in table"));
                        let sum: i128 = table
                            .class_sizes()
                            .iter()
                            .enumerate()
                            .map(|(i, &cls)| {
                                cls as i128 * rowa[i] as i128 * rowb[i] as i128 * rowc[i] as i128
                            })
                            .sum();
                        assert!(sum % nf == 0 && sum >= 0, "non-integer Kronecker sum");
                        let g = (sum / nf) as u64;
                        if g > 0 {
                            recs.push(KronRecord {
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                                gamma: gamma.clone(),
                                n,
                                g,
                            });
                        }
                    }
                }
                recs
            })
            .collect();
        out.extend(per_gamma.into_iter().flatten());
    }
    out
}
