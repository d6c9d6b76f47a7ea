//! Symmetric-group combinatorics: partitions of `n`, conjugacy classes, and
//! irreducible characters by the border-strip (Murnaghan-Nakayama)
//! recursion, with a process-wide cache of full character tables.
//!
//! All arithmetic is exact; character values are `i64` (ample through the
//! supported range `n <= 20`) and orthogonality sums run in `i128`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// All partitions of `n`, lexicographically decreasing: `(n)` first,
/// `(1^n)` last. `partitions_of(0)` is the singleton list of the empty
/// partition.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    partitions_with_at_most(n, n as usize)
}

/// All partitions of `n` with at most `max_parts` parts, lexicographically
/// decreasing.
pub fn partitions_with_at_most(n: u64, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(n: u64, max_part: u64, slots: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(stack.clone()).expect("stack is weakly decreasing"));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = max_part.min(n);
        // a part below ceil(n / slots) cannot finish the sum
        let lo = n.div_ceil(slots as u64);
        let mut part = hi;
        while part >= lo && part >= 1 {
            stack.push(part as u32);
            rec(n - part, part, slots - 1, stack, out);
            stack.pop();
            part -= 1;
        }
    }
    rec(n, n, max_parts, &mut stack, &mut out);
    out
}

/// A conjugacy class of the symmetric group, named by its cycle lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleType(pub Partition);

impl CycleType {
    /// The order `z = prod m^(k_m) k_m!` of the centralizer of a permutation
    /// of this cycle type.
    pub fn centralizer_order(&self) -> u64 {
        let mut z: u64 = 1;
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let m = parts[i];
            let mut k = 0u64;
            while i < parts.len() && parts[i] == m {
                k += 1;
                i += 1;
            }
            z *= (m as u64).pow(k as u32) * factorial(k);
        }
        z
    }

    /// The class size `n! / z`.
    pub fn class_size(&self) -> u64 {
        let n = self.0.size();
        factorial(n) / self.centralizer_order()
    }
}

/// `n!` as an exact `u64`; supported for `n <= 20`.
pub fn factorial(n: u64) -> u64 {
    assert!(n <= 20, "factorial({n}) exceeds u64");
    (1..=n).product()
}

/// The irreducible character value `chi^lambda(rho)` by signed border-strip
/// removal, consuming cycles largest-first with memoization.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            rho: rho.size(),
        });
    }
    let mut memo = HashMap::new();
    let mut cycles = rho.parts().to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn_rec(lambda.parts(), &cycles, &mut memo))
}

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

fn mn_rec(shape: &[u32], cycles: &[u32], memo: &mut Memo) -> i64 {
    if cycles.is_empty() {
        return 1; // shape is empty too, sizes agree
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = cycles[0];
    let rest = &cycles[1..];
    let mut total: i64 = 0;
    for (smaller, sign) in remove_border_strips(shape, k) {
        total += sign * mn_rec(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// All shapes obtained by removing one border strip of length `k`, with the
/// sign `(-1)^(height-1)`. Works on the beta-set (first-column hook lengths):
/// removing a `k`-strip is replacing a beta value `b` by `b - k` when
/// `b - k` is not already present.
fn remove_border_strips(shape: &[u32], k: u32) -> Vec<(Vec<u32>, i64)> {
    let l = shape.len();
    let beta: Vec<u64> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p as u64 + (l - 1 - i) as u64)
        .collect(); // strictly decreasing
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k as u64 {
            continue;
        }
        let target = b - k as u64;
        if beta.contains(&target) {
            continue;
        }
        // rows crossed by the strip = values strictly between target and b
        let crossed = beta[i + 1..].iter().filter(|&&x| x > target).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (l - 1 - j) as u64) as u32)
            .collect();
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((parts, sign));
    }
    out
}

/// Complete character table of the symmetric group on `n` letters. Rows are
/// indexed by partitions of `n` (lexicographically decreasing), columns by
/// cycle types in the same order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u64,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    entries: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    /// Builds the table by the border-strip recursion, sharing one memo
    /// across all entries. Construction order is deterministic.
    pub fn build(n: u64) -> Self {
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let class_sizes: Vec<u64> = parts.iter().map(|p| CycleType(p.clone()).class_size()).collect();
        let mut memo = Memo::new();
        let entries = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|rho| {
                        let mut cycles = rho.parts().to_vec();
                        cycles.sort_unstable_by(|a, b| b.cmp(a));
                        mn_rec(lam.parts(), &cycles, &mut memo)
                    })
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            parts,
            index,
            entries,
            class_sizes,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    /// `chi^lambda(rho)`; panics if either partition is not a partition
    /// of `n`.
    pub fn chi(&self, lambda: &Partition, rho: &Partition) -> i64 {
        let li = self.index[lambda];
        let ri = self.index[rho];
        self.entries[li][ri]
    }

    /// Exact row orthogonality: `sum_rho |C_rho| chi^l(rho) chi^m(rho)
    /// = n! delta_{lm}`.
    pub fn row_orthogonality_holds(&self) -> bool {
        let nf = factorial(self.n) as i128;
        let m = self.parts.len();
        for a in 0..m {
            for b in a..m {
                let s: i128 = (0..m)
                    .map(|c| {
                        self.class_sizes[c] as i128
                            * self.entries[a][c] as i128
                            * self.entries[b][c] as i128
                    })
                    .sum();
                let expected = if a == b { nf } else { 0 };
                if s != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Exact column orthogonality: `sum_lambda chi^l(rho) chi^l(sigma)
    /// = z_rho delta_{rho sigma}`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let m = self.parts.len();
        for a in 0..m {
            for b in a..m {
                let s: i128 = (0..m)
                    .map(|l| self.entries[l][a] as i128 * self.entries[l][b] as i128)
                    .sum();
                let expected = if a == b {
                    CycleType(self.parts[a].clone()).centralizer_order() as i128
                } else {
                    0
                };
                if s != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Portable text format: a header line, `n`, the partition count, the
    /// row partitions in comma syntax, then one line of decimal entries per
    /// row. Class sizes are recomputed on load.
    pub fn to_text(&self) -> String {
        let mut s = String::from("hornkron character table v1\n");
        s.push_str(&format!("{}\n{}\n", self.n, self.parts.len()));
        for p in &self.parts {
            s.push_str(&format!("{p}\n"));
        }
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format and validates row orthogonality before
    /// trusting the data.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("");
        if header != "hornkron character table v1" {
            return Err(Error::BadTableFile(format!("unknown header '{header}'")));
        }
        let n: u64 = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::BadTableFile("missing n".into()))?;
        let m: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::BadTableFile("missing partition count".into()))?;
        let mut parts = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::BadTableFile("truncated partition list".into()))?;
            let p: Partition = line.parse()?;
            if p.size() != n {
                return Err(Error::BadTableFile(format!("{p} is not a partition of {n}")));
            }
            parts.push(p);
        }
        if parts != partitions_of(n) {
            return Err(Error::BadTableFile("rows out of canonical order".into()));
        }
        let mut entries = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::BadTableFile("truncated entries".into()))?;
            let row: std::result::Result<Vec<i64>, _> =
                line.split_whitespace().map(|t| t.parse::<i64>()).collect();
            let row = row.map_err(|e| Error::BadTableFile(format!("bad entry: {e}")))?;
            if row.len() != m {
                return Err(Error::BadTableFile("row has the wrong width".into()));
            }
            entries.push(row);
        }
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let class_sizes = parts.iter().map(|p| CycleType(p.clone()).class_size()).collect();
        let table = CharacterTable {
            n,
            parts,
            index,
            entries,
            class_sizes,
        };
        if !table.row_orthogonality_holds() {
            return Err(Error::BadTableFile("row orthogonality fails".into()));
        }
        Ok(table)
    }
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<u64, Arc<CharacterTable>>>> = OnceLock::new();

/// The cached character table for `n`. Safe for concurrent callers; repeated
/// calls return the identical table.
pub fn character_table(n: u64) -> Arc<CharacterTable> {
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    // build outside the lock; a racing builder produces the identical table
    let table = Arc::new(CharacterTable::build(n));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(n).or_insert(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: p(n) by the pentagonal-number recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                table[i] += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    table[i] += sign * table[i - g2];
                }
                k += 1;
            }
        }
        table[n] as u64
    }

    /// Independent oracle: the hook length formula for dim chi^lambda.
    fn hook_dimension(lambda: &Partition) -> u64 {
        let n = lambda.size();
        let conj = lambda.conjugate();
        let mut denom: u128 = 1;
        for (i, &row) in lambda.parts().iter().enumerate() {
            for j in 1..=row as usize {
                let hook = (row as u128 - j as u128) + (conj.part(j) as u128 - i as u128 - 1) + 1;
                denom *= hook;
            }
        }
        ((1..=n as u128).product::<u128>() / denom) as u64
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(8).len(), 22);
        for n in 0..=12u64 {
            assert_eq!(partitions_of(n).len() as u64, partition_count(n as usize));
            // lexicographically decreasing
            let list = partitions_of(n);
            for w in list.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
        assert_eq!(
            partitions_with_at_most(4, 2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=8u64 {
            let total: u64 = partitions_of(n)
                .iter()
                .map(|rho| CycleType(rho.clone()).class_size())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn mn_character_basics() {
        // trivial character
        for n in 1..=7u64 {
            for rho in partitions_of(n) {
                assert_eq!(mn_character(&p(&[n as u32]), &rho).unwrap(), 1);
            }
        }
        // sign of a 3-cycle
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1);
        // dimension of the standard representation of S_3
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn sign_character_values() {
        for n in 1..=7u64 {
            let sign_row = p(&vec![1u32; n as usize]);
            for rho in partitions_of(n) {
                let expected = if (n - rho.len() as u64) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&sign_row, &rho).unwrap(), expected);
            }
        }
    }

    #[test]
    fn dimensions_match_hook_lengths() {
        for n in 1..=8u64 {
            let id = p(&vec![1u32; n as usize]);
            for lam in partitions_of(n) {
                assert_eq!(
                    mn_character(&lam, &id).unwrap(),
                    hook_dimension(&lam) as i64,
                    "dimension mismatch at {lam}"
                );
            }
        }
    }

    #[test]
    fn table_orthogonality() {
        for n in 0..=8u64 {
            let t = character_table(n);
            assert!(t.row_orthogonality_holds(), "row orthogonality fails at n={n}");
            assert!(
                t.column_orthogonality_holds(),
                "column orthogonality fails at n={n}"
            );
        }
    }

    #[test]
    fn table_small_checks() {
        let t = character_table(3);
        let id = p(&[1, 1, 1]);
        let sum_sq: i64 = t
            .partitions()
            .to_vec()
            .iter()
            .map(|lam| {
                let d = t.chi(lam, &id);
                d * d
            })
            .sum();
        assert_eq!(sum_sq, 6);

        let t5 = character_table(5);
        let row = t5.row(t5.row_index(&p(&[5])).unwrap());
        assert!(row.iter().all(|&v| v == 1));
    }

    #[test]
    fn cache_returns_identical_table() {
        let a = character_table(6);
        let b = character_table(6);
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn text_round_trip_and_validation() {
        let t = character_table(5);
        let text = t.to_text();
        let back = CharacterTable::from_text(&text).unwrap();
        assert_eq!(back.partitions(), t.partitions());
        for i in 0..t.partitions().len() {
            assert_eq!(back.row(i), t.row(i));
        }
        // corrupt one entry: orthogonality validation must reject it
        let mut bad = text.clone();
        let last_line_start = bad.trim_end().rfind('\n').unwrap() + 1;
        bad.replace_range(last_line_start.., "9 9 9 9 9 9 9\n");
        assert!(CharacterTable::from_text(&bad).is_err());
    }
}
