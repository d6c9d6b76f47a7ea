//! Reduction formulas on the equality loci of the inequality families:
//! when a triple saturates a family member, its Kronecker coefficient
//! factors through smaller Littlewood-Richardson and Kronecker data.
//!
//! Every routine checks its equality hypothesis and length conditions
//! before summing, and every factor is an exact integer.

use serde::Serialize;

use crate::characters::partitions_with_at_most;
use crate::error::{Error, Result};
use crate::kron::kron_coefficient;
use crate::lr::{lr_coefficient, HornTriple};
use crate::partitions::{IndexSet, Partition};

/// One nonzero term of a reduction sum: the summation partitions, the
/// factors in formula order, and their product.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionTerm {
    pub parts: Vec<(String, Partition)>,
    pub factors: Vec<u64>,
    pub product: u64,
}

/// Value of a reduction sum together with its nonzero terms.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    pub value: u64,
    pub terms: Vec<ReductionTerm>,
}

/// The Murnaghan equality case: when `(n - alpha_1) + (n - beta_1) =
/// n - gamma_1`, the Kronecker coefficient equals
/// `c(abar, bbar; gbar)` on the first-part-removed partitions.
pub fn murnaghan_reduce(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(Error::EqualityNotSatisfied(format!(
            "sizes differ: |{alpha}|, |{beta}|, |{gamma}|"
        )));
    }
    let lhs = (n - alpha.part(1) as u64) + (n - beta.part(1) as u64);
    let rhs = n - gamma.part(1) as u64;
    if lhs != rhs {
        return Err(Error::EqualityNotSatisfied(format!(
            "(n-alpha_1)+(n-beta_1) = {lhs} but n-gamma_1 = {rhs}"
        )));
    }
    Ok(lr_coefficient(
        &alpha.drop_first(),
        &beta.drop_first(),
        &gamma.drop_first(),
    ))
}

/// Index used for the middle factor of the Weyl reduction. The shifted
/// column is the size-consistent default; the literal column is kept for
/// diagnostics and evaluates to zero wherever the sizes cannot match.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MiddleColumn {
    /// pair `(gamma_1, gamma_{e+j})`
    Shifted,
    /// pair `(gamma_1, gamma_j)`
    Literal,
}

/// The Weyl-type equality case. On
/// `n + gamma_1 + gamma_{e+j} = alpha_1 + beta_1 + beta_j` with
/// `J = {1..f} - {j-1}` and `K = {1..e+f} - {e+j-1}`:
///
/// `g = sum c(x, bbar_J; gbar_K) * c((gamma_1, gamma_{e+j}), y;
/// (beta_1, beta_j)) * g(abar, x, y)`
///
/// over `l(x) <= 2e`, `l(y) <= 2`, with the summation sizes forced by the
/// factors.
pub fn weyl_reduce(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    e: usize,
    f: usize,
    j: usize,
    middle: MiddleColumn,
) -> Result<ReductionResult> {
    if !(2 <= j && j <= f + 1) {
        return Err(Error::BadRange(format!("need 2 <= j <= f+1, got j={j}, f={f}")));
    }
    if alpha.len() > e + 1 || beta.len() > f + 1 || gamma.len() > e + f + 1 {
        return Err(Error::LengthBoundViolated(format!(
            "lengths ({}, {}, {}) exceed ({}, {}, {})",
            alpha.len(),
            beta.len(),
            gamma.len(),
            e + 1,
            f + 1,
            e + f + 1
        )));
    }
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(Error::EqualityNotSatisfied("sizes differ".into()));
    }
    let lhs = n + gamma.part(1) as u64 + gamma.part(e + j) as u64;
    let rhs = alpha.part(1) as u64 + beta.part(1) as u64 + beta.part(j) as u64;
    if lhs != rhs {
        return Err(Error::EqualityNotSatisfied(format!(
            "n + gamma_1 + gamma_{} = {lhs} but alpha_1 + beta_1 + beta_{j} = {rhs}",
            e + j
        )));
    }

    let j_set = IndexSet::new(
        (1..=f).filter(|&t| t != j - 1).collect(),
        f,
    )
    .expect("strictly increasing");
    let k_set = IndexSet::new(
        (1..=e + f).filter(|&t| t != e + j - 1).collect(),
        e + f,
    )
    .expect("strictly increasing");
    let bbar_j = beta.drop_first().select(&j_set)?;
    let gbar_k = gamma.drop_first().select(&k_set)?;

    let gamma_col = match middle {
        MiddleColumn::Shifted => gamma.part(e + j),
        MiddleColumn::Literal => gamma.part(j),
    };
    let gamma_pair = Partition::new(vec![gamma.part(1), gamma_col]).expect("gamma is decreasing");
    let beta_pair = Partition::new(vec![beta.part(1), beta.part(j)]).expect("beta is decreasing");

    // sizes forced by the factors: |x| from the first, |y| from the middle
    let sx = match gbar_k.size().checked_sub(bbar_j.size()) {
        Some(v) => v,
        None => return Ok(ReductionResult { value: 0, terms: vec![] }),
    };
    let sy = match beta_pair.size().checked_sub(gamma_pair.size()) {
        Some(v) => v,
        None => return Ok(ReductionResult { value: 0, terms: vec![] }),
    };

    let abar = alpha.drop_first();
    let mut value: u64 = 0;
    let mut terms = Vec::new();
    for x in partitions_with_at_most(sx, 2 * e) {
        let f1 = lr_coefficient(&x, &bbar_j, &gbar_k);
        if f1 == 0 {
            continue;
        }
        for y in partitions_with_at_most(sy, 2) {
            let f2 = lr_coefficient(&gamma_pair, &y, &beta_pair);
            if f2 == 0 {
                continue;
            }
            let f3 = kron_coefficient(&abar, &x, &y);
            if f3 == 0 {
                continue;
            }
            let product = f1 * f2 * f3;
            value += product;
            terms.push(ReductionTerm {
                parts: vec![("x".into(), x.clone()), ("y".into(), y.clone())],
                factors: vec![f1, f2, f3],
                product,
            });
        }
    }
    Ok(ReductionResult { value, terms })
}

/// The saturated Horn-type case. When
/// `n + |abar_I| - alpha_1 + |bbar_J| - beta_1 = |gbar_K| - gamma_1`,
///
/// `g = sum c(abar_{I-}, bbar_{J-}; y) * c(x, y; gbar_{K+}) *
/// c(u, v; gbar_{K-}) * c(a, u; abar_I) * c(b, v; bbar_J) * g(a, b, x)`
///
/// over partitions bounded by `l(x) <= (e-r)(f-s)`, `l(a), l(u) <= e-r`,
/// `l(y) <= min(r+s, (e-r)+(f-s))`, `l(b), l(v) <= f-s`, the sizes being
/// forced by the factors.
pub fn horn_reduce(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    t: &HornTriple,
) -> Result<ReductionResult> {
    let (e, f, r, s) = (t.e, t.f, t.r, t.s);
    if alpha.len() > e + 1 || beta.len() > f + 1 || gamma.len() > e + f + 1 {
        return Err(Error::LengthBoundViolated(format!(
            "lengths ({}, {}, {}) exceed ({}, {}, {})",
            alpha.len(),
            beta.len(),
            gamma.len(),
            e + 1,
            f + 1,
            e + f + 1
        )));
    }
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(Error::EqualityNotSatisfied("sizes differ".into()));
    }
    let abar = alpha.drop_first();
    let bbar = beta.drop_first();
    let gbar = gamma.drop_first();
    let abar_i = abar.select(&t.i)?;
    let abar_ic = abar.select(&t.i.complement())?;
    let bbar_j = bbar.select(&t.j)?;
    let bbar_jc = bbar.select(&t.j.complement())?;
    let gbar_kp = gbar.select(&t.k)?;
    let gbar_km = gbar.select(&t.k.complement())?;

    let lhs = n as i64 + abar_i.size() as i64 - alpha.part(1) as i64 + bbar_j.size() as i64
        - beta.part(1) as i64;
    let rhs = gbar_kp.size() as i64 - gamma.part(1) as i64;
    if lhs != rhs {
        return Err(Error::EqualityNotSatisfied(format!(
            "n + |abar_I| - alpha_1 + |bbar_J| - beta_1 = {lhs} but |gbar_K| - gamma_1 = {rhs}"
        )));
    }

    let la = e - r;
    let lb = f - s;
    let ly = (r + s).min(la + lb);
    let lx = la * lb;

    let sy = abar_ic.size() + bbar_jc.size();
    let sx = match gbar_kp.size().checked_sub(sy) {
        Some(v) => v,
        None => return Ok(ReductionResult { value: 0, terms: vec![] }),
    };

    let mut value: u64 = 0;
    let mut terms = Vec::new();
    for y in partitions_with_at_most(sy, ly) {
        let f1 = lr_coefficient(&abar_ic, &bbar_jc, &y);
        if f1 == 0 {
            continue;
        }
        for x in partitions_with_at_most(sx, lx) {
            let f2 = lr_coefficient(&x, &y, &gbar_kp);
            if f2 == 0 {
                continue;
            }
            for su in 0..=gbar_km.size() {
                let sv = gbar_km.size() - su;
                // the remaining factors force |a| = |b| = |x|
                if abar_i.size() < su || bbar_j.size() < sv {
                    continue;
                }
                let sa = abar_i.size() - su;
                let sb = bbar_j.size() - sv;
                if sa != sx || sb != sx {
                    continue;
                }
                for u in partitions_with_at_most(su, la) {
                    for v in partitions_with_at_most(sv, lb) {
                        let f3 = lr_coefficient(&u, &v, &gbar_km);
                        if f3 == 0 {
                            continue;
                        }
                        for a in partitions_with_at_most(sa, la) {
                            let f4 = lr_coefficient(&a, &u, &abar_i);
                            if f4 == 0 {
                                continue;
                            }
                            for b in partitions_with_at_most(sb, lb) {
                                let f5 = lr_coefficient(&b, &v, &bbar_j);
                                if f5 == 0 {
                                    continue;
                                }
                                let f6 = kron_coefficient(&a, &b, &x);
                                if f6 == 0 {
                                    continue;
                                }
                                // size bookkeeping of any nonzero term
                                debug_assert_eq!(y.size(), abar_ic.size() + bbar_jc.size());
                                debug_assert_eq!(x.size() + y.size(), gbar_kp.size());
                                debug_assert_eq!(u.size() + v.size(), gbar_km.size());
                                debug_assert_eq!(a.size() + u.size(), abar_i.size());
                                debug_assert_eq!(b.size() + v.size(), bbar_j.size());
                                let product = f1 * f2 * f3 * f4 * f5 * f6;
                                value += product;
                                terms.push(ReductionTerm {
                                    parts: vec![
                                        ("y".into(), y.clone()),
                                        ("x".into(), x.clone()),
                                        ("u".into(), u.clone()),
                                        ("v".into(), v.clone()),
                                        ("a".into(), a.clone()),
                                        ("b".into(), b.clone()),
                                    ],
                                    factors: vec![f1, f2, f3, f4, f5, f6],
                                    product,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ReductionResult { value, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::{horn_kron_form, weyl_kron_form};
    use crate::kron::enumerate_kron;
    use crate::lr::horn_triples;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn murnaghan_reduce_cases() {
        assert_eq!(murnaghan_reduce(&p(&[2, 1]), &p(&[3]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(murnaghan_reduce(&p(&[5]), &p(&[5]), &p(&[5])).unwrap(), 1);
        assert!(matches!(
            murnaghan_reduce(&p(&[3, 1]), &p(&[3, 1]), &p(&[4])),
            Err(Error::EqualityNotSatisfied(_))
        ));
    }

    #[test]
    fn murnaghan_reduce_matches_direct() {
        for rec in enumerate_kron(3, 3, 5, 6) {
            let n = rec.n;
            let lhs = (n - rec.alpha.part(1) as u64) + (n - rec.beta.part(1) as u64);
            if lhs == n - rec.gamma.part(1) as u64 {
                assert_eq!(
                    murnaghan_reduce(&rec.alpha, &rec.beta, &rec.gamma).unwrap(),
                    rec.g,
                    "reduction mismatch at ({},{},{})",
                    rec.alpha,
                    rec.beta,
                    rec.gamma
                );
            }
        }
    }

    #[test]
    fn weyl_reduce_worked_cases() {
        let r = weyl_reduce(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), 1, 1, 2, MiddleColumn::Shifted)
            .unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.terms.len(), 1);

        let r = weyl_reduce(&p(&[3, 1]), &p(&[3, 1]), &p(&[3, 1]), 1, 1, 2, MiddleColumn::Shifted)
            .unwrap();
        assert_eq!(r.value, 1);

        let r = weyl_reduce(&p(&[6]), &p(&[6]), &p(&[6]), 1, 1, 2, MiddleColumn::Shifted).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn weyl_reduce_literal_column_diverges() {
        // with the literal middle column the worked example loses its term
        let r = weyl_reduce(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), 1, 1, 2, MiddleColumn::Literal)
            .unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn weyl_reduce_rejects_bad_input() {
        assert!(matches!(
            weyl_reduce(&p(&[2, 1]), &p(&[2, 1]), &p(&[3]), 1, 1, 2, MiddleColumn::Shifted),
            Err(Error::EqualityNotSatisfied(_))
        ));
        assert!(weyl_reduce(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]), 1, 1, 3, MiddleColumn::Shifted)
            .is_err());
        assert!(weyl_reduce(
            &p(&[1, 1, 1]),
            &p(&[2, 1]),
            &p(&[2, 1]),
            1,
            1,
            2,
            MiddleColumn::Shifted
        )
        .is_err());
    }

    #[test]
    fn weyl_reduce_sweep_small() {
        // every saturated point of the Weyl-type form at (e, f) = (1, 1)
        let (e, f) = (1usize, 1usize);
        for rec in enumerate_kron(e + 1, f + 1, e + f + 1, 7) {
            for j in 2..=f + 1 {
                let form = weyl_kron_form(e, f, j).unwrap();
                if form.slack(&rec.alpha, &rec.beta, &rec.gamma).unwrap() == 0 {
                    let red = weyl_reduce(
                        &rec.alpha,
                        &rec.beta,
                        &rec.gamma,
                        e,
                        f,
                        j,
                        MiddleColumn::Shifted,
                    )
                    .unwrap();
                    assert_eq!(
                        red.value, rec.g,
                        "weyl reduction mismatch at ({},{},{}), j={j}",
                        rec.alpha, rec.beta, rec.gamma
                    );
                }
            }
        }
    }

    #[test]
    fn horn_reduce_trivial_case() {
        let ts = horn_triples(2, 2, 1, 1).unwrap();
        let t = ts
            .iter()
            .find(|t| t.k.indices() == [2, 3])
            .unwrap();
        let r = horn_reduce(&p(&[7]), &p(&[7]), &p(&[7]), t).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.terms.len(), 1);
        assert!(r.terms[0].parts.iter().all(|(_, p)| p.is_empty()));
    }

    #[test]
    fn horn_reduce_rejects_unsaturated() {
        let ts = horn_triples(2, 2, 1, 1).unwrap();
        let t = &ts[0]; // K = {1,4}
        assert!(matches!(
            horn_reduce(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2]), t),
            Err(Error::EqualityNotSatisfied(_))
        ));
    }

    #[test]
    fn horn_reduce_sweep_small() {
        let (e, f) = (2usize, 2usize);
        let records = enumerate_kron(e + 1, f + 1, e + f + 1, 6);
        for t in horn_triples(e, f, 1, 1).unwrap() {
            let form = horn_kron_form(&t);
            for rec in &records {
                if form.slack(&rec.alpha, &rec.beta, &rec.gamma).unwrap() == 0 {
                    let red = horn_reduce(&rec.alpha, &rec.beta, &rec.gamma, &t).unwrap();
                    assert_eq!(
                        red.value,
                        rec.g,
                        "horn reduction mismatch at ({},{},{}), {}",
                        rec.alpha,
                        rec.beta,
                        rec.gamma,
                        t.to_line()
                    );
                }
            }
        }
    }
}
