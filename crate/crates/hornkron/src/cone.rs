//! Exact rational linear algebra over enumerated lattice points: cone and
//! face dimensions by rank of saturated points, with stabilization
//! reporting.
//!
//! Rank is computed by fraction-free elimination (integer cross-elimination
//! with gcd reduction), so every result is exact and independent of row
//! order. No floating point anywhere.

use serde::Serialize;

use crate::inequalities::{saturated_triples, LinearForm};
use crate::kron::{enumerate_kron, KronRecord};
use crate::lr::{lr_membership_system, enumerate_lr, LrRecord};
use crate::partitions::Partition;

/// An integer row basis in echelon form. Inserting a vector reports whether
/// it enlarged the span; rows are reduced by gcd to keep entries small.
#[derive(Clone, Debug, Default)]
pub struct RowBasis {
    rows: Vec<Vec<i128>>,
}

impl RowBasis {
    pub fn new() -> Self {
        RowBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; if a nonzero remainder survives it is
    /// normalized and inserted, growing the rank.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.rows {
            let p = pivot(row).expect("basis rows are nonzero");
            if w.len() != row.len() {
                panic!("dimension mismatch in rank computation");
            }
            if w[p] != 0 {
                cross_eliminate(&mut w, row, p);
            }
        }
        match pivot(&w) {
            None => false,
            Some(p) => {
                normalize(&mut w);
                let at = self
                    .rows
                    .binary_search_by_key(&p, |r| pivot(r).unwrap())
                    .unwrap_err();
                self.rows.insert(at, w);
                // re-reduce later rows is unnecessary for rank; echelon order
                // by pivot column keeps elimination sound
                self.resort();
                true
            }
        }
    }

    fn resort(&mut self) {
        self.rows.sort_by_key(|r| pivot(r).unwrap());
    }
}

fn pivot(v: &[i128]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

fn cross_eliminate(w: &mut [i128], row: &[i128], p: usize) {
    let (a, b) = (row[p], w[p]);
    let g = gcd(a.unsigned_abs(), b.unsigned_abs()) as i128;
    let (a, b) = (a / g, b / g);
    for i in 0..w.len() {
        w[i] = w[i] * a - row[i] * b;
    }
}

fn normalize(w: &mut [i128]) {
    let mut g: u128 = 0;
    for &x in w.iter() {
        g = gcd(g, x.unsigned_abs());
    }
    if g > 1 {
        for x in w.iter_mut() {
            *x /= g as i128;
        }
    }
    if let Some(p) = pivot(w) {
        if w[p] < 0 {
            for x in w.iter_mut() {
                *x = -*x;
            }
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact rank over the rationals of a list of integer vectors.
pub fn rank(points: &[Vec<i64>]) -> usize {
    let mut basis = RowBasis::new();
    for v in points {
        basis.insert(v);
    }
    basis.rank()
}

/// A Kronecker triple as one coordinate vector of length
/// `(e+1) + (f+1) + (e+f+1)`.
pub fn embed_kron(rec: &KronRecord, e: usize, f: usize) -> Vec<i64> {
    embed(&rec.alpha, &rec.beta, &rec.gamma, e + 1, f + 1, e + f + 1)
}

/// An LR triple as one coordinate vector of length `e + f + (e+f)`.
pub fn embed_lr(rec: &LrRecord, e: usize, f: usize) -> Vec<i64> {
    embed(&rec.alpha, &rec.beta, &rec.gamma, e, f, e + f)
}

fn embed(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    la: usize,
    lb: usize,
    lg: usize,
) -> Vec<i64> {
    let mut v = Vec::with_capacity(la + lb + lg);
    for i in 1..=la {
        v.push(alpha.part(i) as i64);
    }
    for i in 1..=lb {
        v.push(beta.part(i) as i64);
    }
    for i in 1..=lg {
        v.push(gamma.part(i) as i64);
    }
    v
}

/// Rank of enumerated points together with whether it was still growing at
/// the size cap.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub e: usize,
    pub f: usize,
    pub nmax: u64,
    pub rank: usize,
    /// True when the last size step added nothing, so the reported rank is
    /// plausibly the dimension rather than an undercount.
    pub stabilized: bool,
    pub points: usize,
}

/// Dimension of the span of the Kronecker semigroup points with lengths
/// bounded by `(e+1, f+1, e+f+1)` and size up to `nmax`.
pub fn cone_dimension(e: usize, f: usize, nmax: u64) -> DimensionReport {
    let records = enumerate_kron(e + 1, f + 1, e + f + 1, nmax);
    dimension_of(&records, e, f, nmax)
}

fn dimension_of(records: &[KronRecord], e: usize, f: usize, nmax: u64) -> DimensionReport {
    let mut basis = RowBasis::new();
    let mut rank_before_last = 0;
    let mut last_n = 0;
    for rec in records {
        if rec.n != last_n {
            rank_before_last = basis.rank();
            last_n = rec.n;
        }
        basis.insert(&embed_kron(rec, e, f));
    }
    DimensionReport {
        e,
        f,
        nmax,
        rank: basis.rank(),
        stabilized: basis.rank() == rank_before_last && !records.is_empty(),
        points: records.len(),
    }
}

/// Rank of the saturated points of one form, with the certificate data the
/// reports carry: achieved rank, expected rank, and the size cap that
/// produced it.
#[derive(Clone, Debug, Serialize)]
pub struct FaceReport {
    pub form_label: String,
    pub saturated_count: usize,
    pub rank: usize,
    pub expected: usize,
    pub nmax: u64,
    pub pass: bool,
}

/// Dimension of the span of the semigroup points saturating `form`,
/// compared against `expected` (for an essential inequality, the cone
/// dimension minus one).
pub fn face_dimension(
    form: &LinearForm,
    e: usize,
    f: usize,
    nmax: u64,
    expected: usize,
) -> FaceReport {
    let records = enumerate_kron(e + 1, f + 1, e + f + 1, nmax);
    face_dimension_on(form, &records, nmax, e, f, expected)
}

/// Same as [`face_dimension`] on a caller-supplied point set.
pub fn face_dimension_on(
    form: &LinearForm,
    records: &[KronRecord],
    nmax: u64,
    e: usize,
    f: usize,
    expected: usize,
) -> FaceReport {
    let sat = saturated_triples(form, records);
    let points: Vec<Vec<i64>> = sat.iter().map(|r| embed_kron(r, e, f)).collect();
    let rank = rank(&points);
    FaceReport {
        form_label: form.label.clone(),
        saturated_count: sat.len(),
        rank,
        expected,
        nmax,
        pass: rank == expected,
    }
}

/// Minimality data for the LR membership system: for every inequality, the
/// rank of the nonzero-LR triples saturating it.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    pub e: usize,
    pub f: usize,
    pub nmax: u64,
    pub expected: usize,
    pub entries: Vec<FaceReport>,
    pub failures: Vec<String>,
}

/// For each inequality of the LR membership system at `(e, f)`, the rank of
/// the saturated nonzero-LR triples with `|gamma| <= nmax`; a facet of the
/// LR cone reaches `2e + 2f - 2`.
pub fn lr_minimality_report(e: usize, f: usize, nmax: u64) -> MinimalityReport {
    let system = lr_membership_system(e, f);
    let records = enumerate_lr(e, f, nmax);
    let expected = 2 * e + 2 * f - 2;
    let mut entries = Vec::new();
    for form in system.inequalities() {
        let mut basis = RowBasis::new();
        let mut count = 0;
        for rec in &records {
            let slack = form
                .slack(&rec.alpha, &rec.beta, &rec.gamma)
                .expect("enumerated lengths fit the system");
            if slack == 0 {
                count += 1;
                basis.insert(&embed_lr(rec, e, f));
            }
        }
        entries.push(FaceReport {
            form_label: form.label.clone(),
            saturated_count: count,
            rank: basis.rank(),
            expected,
            nmax,
            pass: basis.rank() == expected,
        });
    }
    let failures = entries
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.form_label.clone())
        .collect();
    MinimalityReport {
        e,
        f,
        nmax,
        expected,
        entries,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::murnaghan_form;

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(
            rank(&[vec![1, 0], vec![0, 1], vec![1, 1]]),
            2
        );
        assert_eq!(rank(&[vec![0, 0, 0]]), 0);
        assert_eq!(rank(&[vec![2, 4], vec![3, 6]]), 1);
    }

    #[test]
    fn rank_is_order_and_scale_invariant() {
        let rows = vec![
            vec![1, 2, 3, 0],
            vec![0, 1, 1, 1],
            vec![2, 5, 7, 1],
            vec![1, 0, 0, 5],
        ];
        let base = rank(&rows);
        let mut rev = rows.clone();
        rev.reverse();
        assert_eq!(rank(&rev), base);
        let scaled: Vec<Vec<i64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.iter().map(|&x| x * (i as i64 + 1)).collect())
            .collect();
        assert_eq!(rank(&scaled), base);
    }

    #[test]
    fn rank_of_small_enumeration() {
        // the n <= 2 points of the semigroup with lengths (2, 2, 3): the
        // four n = 2 generators span rank 4, and ((1),(1),(1)) lies on the
        // ray of ((2),(2),(2))
        let records = enumerate_kron(2, 2, 3, 2);
        let points: Vec<Vec<i64>> = records.iter().map(|r| embed_kron(r, 1, 1)).collect();
        assert_eq!(points.len(), 5);
        assert_eq!(rank(&points), 4);
    }

    #[test]
    fn cone_dimension_small() {
        let report = cone_dimension(1, 1, 6);
        assert_eq!(report.rank, 5);
        assert!(report.stabilized);

        let early = cone_dimension(1, 1, 1);
        assert!(early.rank < 5);
        assert!(!early.stabilized);
    }

    #[test]
    fn murnaghan_face_small() {
        let report = face_dimension(&murnaghan_form(1, 1), 1, 1, 6, 4);
        assert_eq!(report.rank, 4);
        assert!(report.pass);
        assert!(report.saturated_count > 0);
    }

    #[test]
    fn minimality_small() {
        let report = lr_minimality_report(1, 1, 8);
        assert_eq!(report.entries.len(), 4);
        assert_eq!(report.expected, 2);
        assert!(
            report.failures.is_empty(),
            "failures: {:?}",
            report.failures
        );
    }
}
