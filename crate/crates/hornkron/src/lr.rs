//! Littlewood-Richardson coefficients and the Horn combinatorics built on
//! them.
//!
//! - [`lr_coefficient`]: tableau counting (depth-first fill of the skew
//!   shape with lattice-word pruning).
//! - [`lr_oracle`]: an independent route through symmetric-group characters;
//!   the two must agree everywhere.
//! - [`horn_triples`]: the triples `(I, J, K)` with
//!   `c(tau(I), tau(J); tau(K)) = 1` that index one inequality each.
//! - [`lr_membership_system`] / [`lr_member`]: the full linear description
//!   of nonvanishing for lengths bounded by `(e, f, e+f)`.
//! - [`stretched_lr`]: coefficients along the ray `n -> (n a, n b, n c)` and
//!   the degree of their interpolating polynomial.

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_table, factorial, partitions_with_at_most};
use crate::error::{Error, Result};
use crate::inequalities::LinearForm;
use crate::partitions::{subsets, IndexSet, Partition};

/// The Littlewood-Richardson coefficient `c(alpha, beta; gamma)`, computed
/// by counting skew semistandard tableaux of shape `gamma/alpha` and content
/// `beta` whose reverse reading word is a lattice word. Returns 0 when the
/// sizes do not add up or `alpha` is not contained in `gamma`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) {
        return 0;
    }
    if beta.is_empty() {
        return 1; // gamma == alpha
    }
    let rows = gamma.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; gamma.part(r + 1) as usize])
        .collect();
    let mut counts = vec![0u32; beta.len() + 1];
    // cells in reverse reading order: top row to bottom, right to left
    let mut cells = Vec::with_capacity(gamma.size() as usize);
    for r in 0..rows {
        let lo = alpha.part(r + 1) as usize;
        let hi = gamma.part(r + 1) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    fn fill(
        cells: &[(usize, usize)],
        pos: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        alpha: &Partition,
        beta: &Partition,
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        // column-strict against the cell above, when it is part of the skew shape
        let min_v = if r > 0 && c >= alpha.part(r) as usize && c < grid[r - 1].len() {
            grid[r - 1][c] + 1
        } else {
            1
        };
        // weakly increasing along the row: bounded by the right neighbor
        let max_v = if c + 1 < grid[r].len() {
            grid[r][c + 1]
        } else {
            beta.len() as u32
        };
        let mut total = 0;
        for v in min_v..=max_v {
            let vi = v as usize;
            if counts[vi] >= beta.part(vi) {
                continue; // content exhausted
            }
            if v > 1 && counts[vi] >= counts[vi - 1] {
                continue; // lattice word would fail at this prefix
            }
            counts[vi] += 1;
            grid[r][c] = v;
            total += fill(cells, pos + 1, grid, counts, alpha, beta);
            counts[vi] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    fill(&cells, 0, &mut grid, &mut counts, alpha, beta)
}

/// Independent cross-check of [`lr_coefficient`] through the character
/// scalar product
/// `c = (1/(|a|! |b|!)) sum |C_rho||C_sigma| chi^a(rho) chi^b(sigma)
/// chi^g(rho u sigma)`.
/// The division is asserted exact; a remainder would be an implementation
/// bug, not bad input.
pub fn lr_oracle(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    let a = alpha.size();
    let b = beta.size();
    if a + b != gamma.size() {
        return 0;
    }
    let ta = character_table(a);
    let tb = character_table(b);
    let tg = character_table(a + b);
    let ra = ta.row_index(alpha).expect("alpha indexes its table");
    let rb = tb.row_index(beta).expect("beta indexes its table");
    let rg = tg.row_index(gamma).expect("gamma indexes its table");
    let mut sum: i128 = 0;
    for (ia, rho) in ta.partitions().iter().enumerate() {
        let ca = ta.class_sizes()[ia] as i128 * ta.row(ra)[ia] as i128;
        if ca == 0 {
            continue;
        }
        for (ib, sigma) in tb.partitions().iter().enumerate() {
            let cb = tb.class_sizes()[ib] as i128 * tb.row(rb)[ib] as i128;
            if cb == 0 {
                continue;
            }
            let union = merge_cycle_types(rho, sigma);
            let iu = tg.row_index(&union).expect("union indexes the big table");
            sum += ca * cb * tg.row(rg)[iu] as i128;
        }
    }
    let denom = factorial(a) as i128 * factorial(b) as i128;
    assert!(
        sum % denom == 0 && sum >= 0,
        "character sum {sum} not divisible by {denom} for c({alpha},{beta};{gamma})"
    );
    (sum / denom) as u64
}

fn merge_cycle_types(rho: &Partition, sigma: &Partition) -> Partition {
    let mut parts: Vec<u32> = rho.parts().iter().chain(sigma.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted descending")
}

/// A triple `(I, J, K)` with `I in P(r,e)`, `J in P(s,f)`,
/// `K in P(r+s,e+f)`; the value `c(tau(I), tau(J); tau(K))` is computed at
/// construction and stored. Triples with value 1 index the Horn-type
/// inequalities.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HornTriple {
    pub i: IndexSet,
    pub j: IndexSet,
    pub k: IndexSet,
    pub e: usize,
    pub f: usize,
    pub r: usize,
    pub s: usize,
    /// `c(tau(I), tau(J); tau(K))`, kept even when it is not 1 so
    /// exploratory queries can filter on it.
    pub lr_value: u64,
}

impl HornTriple {
    /// Validates the index data (`0 < r < e`, `0 < s < f`, compatible
    /// ambients and cardinalities) and computes the cohomological value.
    pub fn new(i: IndexSet, j: IndexSet, k: IndexSet) -> Result<Self> {
        let e = i.ambient();
        let f = j.ambient();
        let r = i.cardinality();
        let s = j.cardinality();
        if !(0 < r && r < e) || !(0 < s && s < f) {
            return Err(Error::BadRange(format!(
                "need 0 < r < e and 0 < s < f, got r={r}, e={e}, s={s}, f={f}"
            )));
        }
        if k.ambient() != e + f || k.cardinality() != r + s {
            return Err(Error::BadRange(format!(
                "K must have {} elements in ambient {}, got {} in {}",
                r + s,
                e + f,
                k.cardinality(),
                k.ambient()
            )));
        }
        let lr_value = lr_coefficient(&i.tau(), &j.tau(), &k.tau());
        Ok(HornTriple {
            e,
            f,
            r,
            s,
            i,
            j,
            k,
            lr_value,
        })
    }

    pub fn is_horn(&self) -> bool {
        self.lr_value == 1
    }

    /// One-line serialization: `I={...} J={...} K={...} r=. s=. c=.`.
    pub fn to_line(&self) -> String {
        fn braces(ix: &IndexSet) -> String {
            let s: Vec<String> = ix.indices().iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", s.join(","))
        }
        format!(
            "I={} J={} K={} r={} s={} c={}",
            braces(&self.i),
            braces(&self.j),
            braces(&self.k),
            self.r,
            self.s,
            self.lr_value
        )
    }
}

/// All Horn triples for the given `(e, f, r, s)`: the `(I, J, K)` in
/// `P(r,e) x P(s,f) x P(r+s,e+f)` with `c(tau(I), tau(J); tau(K)) = 1`, in
/// lexicographic order of `(I, J, K)`.
pub fn horn_triples(e: usize, f: usize, r: usize, s: usize) -> Result<Vec<HornTriple>> {
    if !(0 < r && r < e) || !(0 < s && s < f) {
        return Err(Error::BadRange(format!(
            "need 0 < r < e and 0 < s < f, got r={r}, e={e}, s={s}, f={f}"
        )));
    }
    let mut out = Vec::new();
    for i in subsets(r, e) {
        for j in subsets(s, f) {
            for k in subsets(r + s, e + f) {
                let t = HornTriple::new(i.clone(), j.clone(), k)?;
                if t.is_horn() {
                    out.push(t);
                }
            }
        }
    }
    Ok(out)
}

/// All Horn triples over every admissible `(r, s)` for the given `(e, f)`,
/// ordered by `(r, s)` then lexicographically.
pub fn all_horn_triples(e: usize, f: usize) -> Vec<HornTriple> {
    let mut out = Vec::new();
    for r in 1..e {
        for s in 1..f {
            out.extend(horn_triples(e, f, r, s).expect("ranges are valid"));
        }
    }
    out
}

/// The identity `c(tau(I), tau(J); tau(K)) = c(tau(I~), tau(J~);
/// tau(K_-))` where `I~ = I_- u {e+s+1, ..., e+f}` and `J~ = J_- u
/// {f+r+1, ..., e+f}`, all three sets living in `{1, ..., e+f}`.
pub fn tilde_duality_check(t: &HornTriple) -> bool {
    let (e, f, r, s) = (t.e, t.f, t.r, t.s);
    let mut i_tilde: Vec<usize> = t.i.complement().indices().to_vec();
    i_tilde.extend(e + s + 1..=e + f);
    let mut j_tilde: Vec<usize> = t.j.complement().indices().to_vec();
    j_tilde.extend(f + r + 1..=e + f);
    let i_tilde = IndexSet::new(i_tilde, e + f).expect("tilde set is increasing");
    let j_tilde = IndexSet::new(j_tilde, e + f).expect("tilde set is increasing");
    let k_minus = t.k.complement();
    let rhs = lr_coefficient(&i_tilde.tau(), &j_tilde.tau(), &k_minus.tau());
    rhs == t.lr_value
}

/// The complete linear description of `c(alpha, beta; gamma) != 0` for
/// lengths bounded by `(e, f, e+f)`: the size equality, the `2e + 2f` chain
/// inequalities, and one Horn inequality per triple.
#[derive(Clone, Debug, Serialize)]
pub struct LrMembershipSystem {
    pub e: usize,
    pub f: usize,
    /// `|alpha| + |beta| - |gamma|`, required to vanish.
    pub equality: LinearForm,
    /// Chain bounds in the fixed order `gamma[f+i] <= alpha[i]`,
    /// `alpha[i] <= gamma[i]`, `gamma[e+j] <= beta[j]`, `beta[j] <= gamma[j]`.
    pub bounds: Vec<LinearForm>,
    /// `|gamma_K| <= |alpha_I| + |beta_J|` for each Horn triple.
    pub horn: Vec<(HornTriple, LinearForm)>,
}

impl LrMembershipSystem {
    /// Every inequality of the system (chains then Horn), without the
    /// equality.
    pub fn inequalities(&self) -> impl Iterator<Item = &LinearForm> {
        self.bounds.iter().chain(self.horn.iter().map(|(_, f)| f))
    }

    /// Membership test for partitions already known to satisfy the length
    /// bounds.
    pub fn is_member(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
        if self.equality.slack(alpha, beta, gamma).expect("lengths checked") != 0 {
            return false;
        }
        self.inequalities()
            .all(|form| form.slack(alpha, beta, gamma).expect("lengths checked") >= 0)
    }
}

/// Builds the membership system for `(e, f)`.
pub fn lr_membership_system(e: usize, f: usize) -> LrMembershipSystem {
    assert!(e >= 1 && f >= 1, "need e, f >= 1");
    let d = e + f;
    let equality = LinearForm::new(
        vec![1; e],
        vec![1; f],
        vec![-1; d],
        "size".to_string(),
    );
    let mut bounds = Vec::with_capacity(2 * e + 2 * f);
    for i in 1..=e {
        let mut form = LinearForm::zero(e, f, d, format!("gamma[{}]<=alpha[{}]", f + i, i));
        form.coeff_alpha[i - 1] = 1;
        form.coeff_gamma[f + i - 1] = -1;
        bounds.push(form);
    }
    for i in 1..=e {
        let mut form = LinearForm::zero(e, f, d, format!("alpha[{}]<=gamma[{}]", i, i));
        form.coeff_alpha[i - 1] = -1;
        form.coeff_gamma[i - 1] = 1;
        bounds.push(form);
    }
    for j in 1..=f {
        let mut form = LinearForm::zero(e, f, d, format!("gamma[{}]<=beta[{}]", e + j, j));
        form.coeff_beta[j - 1] = 1;
        form.coeff_gamma[e + j - 1] = -1;
        bounds.push(form);
    }
    for j in 1..=f {
        let mut form = LinearForm::zero(e, f, d, format!("beta[{}]<=gamma[{}]", j, j));
        form.coeff_beta[j - 1] = -1;
        form.coeff_gamma[j - 1] = 1;
        bounds.push(form);
    }
    let horn = all_horn_triples(e, f)
        .into_iter()
        .map(|t| {
            let mut form = LinearForm::zero(
                e,
                f,
                d,
                format!("horn[{},{},{}]", t.i, t.j, t.k),
            );
            for &i in t.i.indices() {
                form.coeff_alpha[i - 1] = 1;
            }
            for &j in t.j.indices() {
                form.coeff_beta[j - 1] = 1;
            }
            for &k in t.k.indices() {
                form.coeff_gamma[k - 1] = -1;
            }
            (t, form)
        })
        .collect();
    LrMembershipSystem {
        e,
        f,
        equality,
        bounds,
        horn,
    }
}

/// Membership in the cone description of nonzero LR coefficients. Must
/// coincide with `lr_coefficient != 0` on its whole domain; length bounds
/// are checked strictly rather than truncated.
pub fn lr_member(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    e: usize,
    f: usize,
) -> Result<bool> {
    if alpha.len() > e || beta.len() > f || gamma.len() > e + f {
        return Err(Error::LengthBoundViolated(format!(
            "lengths ({}, {}, {}) exceed ({e}, {f}, {})",
            alpha.len(),
            beta.len(),
            gamma.len(),
            e + f
        )));
    }
    Ok(lr_membership_system(e, f).is_member(alpha, beta, gamma))
}

/// One nonzero LR triple from an enumeration sweep.
#[derive(Clone, Debug, Serialize)]
pub struct LrRecord {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub c: u64,
}

/// All triples with `l(alpha) <= e`, `l(beta) <= f`, `l(gamma) <= e+f`,
/// `1 <= |gamma| <= nmax`, and nonzero LR coefficient, in deterministic
/// order (size ascending, then `gamma`, `|alpha|`, `alpha`, `beta`).
pub fn enumerate_lr(e: usize, f: usize, nmax: u64) -> Vec<LrRecord> {
    let mut out = Vec::new();
    for g in 1..=nmax {
        let gammas = partitions_with_at_most(g, e + f);
        let per_gamma: Vec<Vec<LrRecord>> = gammas
            .par_iter()
            .map(|gamma| {
                let mut recs = Vec::new();
                for a in 0..=g {
                    for alpha in partitions_with_at_most(a, e) {
                        if !gamma.contains(&alpha) {
                            continue;
                        }
                        for beta in partitions_with_at_most(g - a, f) {
                            let c = lr_coefficient(&alpha, &beta, gamma);
                            if c > 0 {
                                recs.push(LrRecord {
                                    alpha: alpha.clone(),
                                    beta,
                                    gamma: gamma.clone(),
                                    c,
                                });
                            }
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

/// The stretched values `c(n a, n b; n c)` for `n = 1..=nmax`.
pub fn stretched_lr(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    nmax: u32,
) -> Vec<u64> {
    assert!(nmax >= 1, "need at least one stretch point");
    (1..=nmax)
        .map(|n| lr_coefficient(&alpha.scale(n), &beta.scale(n), &gamma.scale(n)))
        .collect()
}

/// Degree of the interpolating polynomial through `(1, v[0]), (2, v[1]),
/// ...`, by finite differences. The degree claim is `stable` once the
/// sample count is at least `degree + 2`.
pub fn fitted_degree(values: &[u64]) -> (usize, bool) {
    assert!(!values.is_empty());
    let mut row: Vec<i128> = values.iter().map(|&v| v as i128).collect();
    let mut degree = 0;
    for k in 0..row.len() {
        if row.iter().any(|&v| v != 0) {
            degree = k;
        }
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    (degree, values.len() >= degree + 2)
}

/// The bound `bin2(e) + bin2(f) + bin2(e+f) - e^2 - f^2 + 1` (with
/// `bin2(x) = x(x-1)/2`) on the degree of the stretched-LR polynomial for
/// lengths bounded by `(e, f, e+f)`.
pub fn stretched_degree_bound(e: u64, f: u64) -> i64 {
    let bin2 = |x: u64| (x * (x.saturating_sub(1)) / 2) as i64;
    bin2(e) + bin2(f) + bin2(e + f) - (e * e) as i64 - (f * f) as i64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ix(indices: &[usize], d: usize) -> IndexSet {
        IndexSet::new(indices.to_vec(), d).unwrap()
    }

    #[test]
    fn lr_basic_values() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        // size mismatch
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 1])), 0);
        // alpha not contained in gamma
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);
        // empty cases
        assert_eq!(
            lr_coefficient(&Partition::empty(), &Partition::empty(), &Partition::empty()),
            1
        );
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])), 1);
    }

    #[test]
    fn oracle_matches_direct_small() {
        assert_eq!(lr_oracle(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_oracle(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
    }

    #[test]
    fn oracle_equivalence_sweep() {
        // every triple with |gamma| <= 6 here; the acceptance suite pushes to 8
        for g in 0..=6u64 {
            for gamma in crate::characters::partitions_of(g) {
                for a in 0..=g {
                    for alpha in crate::characters::partitions_of(a) {
                        for beta in crate::characters::partitions_of(g - a) {
                            assert_eq!(
                                lr_coefficient(&alpha, &beta, &gamma),
                                lr_oracle(&alpha, &beta, &gamma),
                                "mismatch at c({alpha},{beta};{gamma})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutativity_sweep() {
        for g in 0..=7u64 {
            for gamma in crate::characters::partitions_of(g) {
                for a in 0..=g / 2 {
                    for alpha in crate::characters::partitions_of(a) {
                        for beta in crate::characters::partitions_of(g - a) {
                            assert_eq!(
                                lr_coefficient(&alpha, &beta, &gamma),
                                lr_coefficient(&beta, &alpha, &gamma)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_bounds() {
        for g in 0..=7u64 {
            for gamma in crate::characters::partitions_of(g) {
                for a in 0..=g {
                    for alpha in crate::characters::partitions_of(a) {
                        for beta in crate::characters::partitions_of(g - a) {
                            if lr_coefficient(&alpha, &beta, &gamma) != 0 {
                                assert!(gamma.len() <= alpha.len() + beta.len());
                                assert!(gamma.part(1) <= alpha.part(1) + beta.part(1));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn horn_triples_2211() {
        let ts = horn_triples(2, 2, 1, 1).unwrap();
        let expected = [
            (ix(&[1], 2), ix(&[1], 2), ix(&[1, 4], 4)),
            (ix(&[1], 2), ix(&[1], 2), ix(&[2, 3], 4)),
            (ix(&[1], 2), ix(&[2], 2), ix(&[2, 4], 4)),
            (ix(&[2], 2), ix(&[1], 2), ix(&[2, 4], 4)),
            (ix(&[2], 2), ix(&[2], 2), ix(&[3, 4], 4)),
        ];
        assert_eq!(ts.len(), expected.len());
        for (t, (i, j, k)) in ts.iter().zip(expected.iter()) {
            assert_eq!((&t.i, &t.j, &t.k), (i, j, k));
            assert_eq!(t.lr_value, 1);
        }
        // the triple of empty staircases
        let last = &ts[4];
        assert!(last.i.tau().is_empty() && last.j.tau().is_empty() && last.k.tau().is_empty());
    }

    #[test]
    fn horn_triples_degree_identity() {
        for (e, f) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            for r in 1..e {
                for s in 1..f {
                    for t in horn_triples(e, f, r, s).unwrap() {
                        assert_eq!(
                            t.i.tau().size() + t.j.tau().size(),
                            t.k.tau().size(),
                            "degree identity fails for {}",
                            t.to_line()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn horn_triples_bad_range() {
        assert!(horn_triples(1, 1, 1, 1).is_err());
        assert!(horn_triples(2, 2, 0, 1).is_err());
        assert!(horn_triples(2, 2, 2, 1).is_err());
    }

    #[test]
    fn tilde_duality_small() {
        for t in horn_triples(2, 2, 1, 1).unwrap() {
            assert!(tilde_duality_check(&t), "duality fails for {}", t.to_line());
        }
    }

    #[test]
    fn membership_system_shape() {
        let sys = lr_membership_system(2, 2);
        assert_eq!(sys.bounds.len(), 8);
        assert_eq!(sys.horn.len(), 5);
        // pairwise distinct after canonicalization
        let mut seen = std::collections::HashSet::new();
        for form in sys.inequalities() {
            assert!(
                seen.insert(form.coefficients()),
                "duplicate form {}",
                form.label
            );
        }

        let sys11 = lr_membership_system(1, 1);
        assert_eq!(sys11.bounds.len(), 4);
        assert!(sys11.horn.is_empty());
    }

    #[test]
    fn membership_examples() {
        assert!(lr_member(&p(&[1]), &p(&[1]), &p(&[2]), 2, 2).unwrap());
        // violates alpha_1 <= gamma_1
        assert!(!lr_member(&p(&[2]), &Partition::empty(), &p(&[1, 1]), 2, 2).unwrap());
        assert!(lr_member(&p(&[3, 2, 1]), &p(&[1]), &p(&[3, 2, 1]), 2, 2).is_err());
    }

    #[test]
    fn membership_matches_nonvanishing() {
        // desk-scale equivalence; the acceptance suite runs the larger sweeps
        let sys = lr_membership_system(2, 2);
        for g in 1..=7u64 {
            for gamma in partitions_with_at_most(g, 4) {
                for a in 0..=g {
                    for alpha in partitions_with_at_most(a, 2) {
                        for beta in partitions_with_at_most(g - a, 2) {
                            let member = sys.is_member(&alpha, &beta, &gamma);
                            let nonzero = lr_coefficient(&alpha, &beta, &gamma) != 0;
                            assert_eq!(
                                member, nonzero,
                                "membership mismatch at ({alpha},{beta},{gamma})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn stretched_values_and_degree() {
        let values = stretched_lr(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 5);
        assert_eq!(values, vec![2, 3, 4, 5, 6]);
        let (deg, stable) = fitted_degree(&values);
        assert_eq!(deg, 1);
        assert!(stable);

        let ones = stretched_lr(&p(&[1]), &p(&[1]), &p(&[2]), 4);
        assert_eq!(ones, vec![1, 1, 1, 1]);
        assert_eq!(fitted_degree(&ones), (0, true));

        assert_eq!(stretched_degree_bound(2, 2), 1);
        assert!(deg as i64 <= stretched_degree_bound(2, 2));
    }

    #[test]
    fn enumerate_lr_is_deterministic() {
        let a = enumerate_lr(2, 2, 5);
        let b = enumerate_lr(2, 2, 5);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(
                (&x.alpha, &x.beta, &x.gamma, x.c),
                (&y.alpha, &y.beta, &y.gamma, y.c)
            );
        }
        assert!(a.iter().all(|r| r.c > 0));
    }
}
