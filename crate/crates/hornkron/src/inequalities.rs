//! The linear inequality families on triples `(alpha, beta, gamma)`, as
//! exact integer forms, plus the sweep machinery that evaluates them on
//! enumerated nonzero Kronecker triples.
//!
//! Conventions shared by every constructor here: the symbol `n` is encoded
//! as the sum over the alpha coordinates, and a form built for `(e, f)`
//! carries coefficient vectors of lengths `e+1`, `f+1`, `e+f+1`. Evaluating
//! a form on longer partitions is an error, never a truncation. Slacks are
//! plain integers and forms are never rescaled by a gcd.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kron::{enumerate_kron, KronRecord};
use crate::lr::{all_horn_triples, HornTriple};
use crate::partitions::Partition;

/// An exact integer linear form on the concatenated coordinates
/// `(alpha, beta, gamma)`.
#[derive(Clone, Debug, Serialize)]
pub struct LinearForm {
    pub coeff_alpha: Vec<i64>,
    pub coeff_beta: Vec<i64>,
    pub coeff_gamma: Vec<i64>,
    pub label: String,
}

impl LinearForm {
    pub fn new(
        coeff_alpha: Vec<i64>,
        coeff_beta: Vec<i64>,
        coeff_gamma: Vec<i64>,
        label: String,
    ) -> Self {
        LinearForm {
            coeff_alpha,
            coeff_beta,
            coeff_gamma,
            label,
        }
    }

    pub fn zero(la: usize, lb: usize, lg: usize, label: String) -> Self {
        LinearForm {
            coeff_alpha: vec![0; la],
            coeff_beta: vec![0; lb],
            coeff_gamma: vec![0; lg],
            label,
        }
    }

    /// The integer slack at `(alpha, beta, gamma)`, partitions zero-padded
    /// to the coefficient lengths.
    pub fn slack(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<i64> {
        fn dot(coeff: &[i64], p: &Partition, label: &str, who: &str) -> Result<i64> {
            if p.len() > coeff.len() {
                return Err(Error::AmbientExceeded(format!(
                    "{who} has {} parts but form '{label}' allows {}",
                    p.len(),
                    coeff.len()
                )));
            }
            Ok(coeff
                .iter()
                .enumerate()
                .map(|(i, &c)| c * p.part(i + 1) as i64)
                .sum())
        }
        Ok(dot(&self.coeff_alpha, alpha, &self.label, "alpha")?
            + dot(&self.coeff_beta, beta, &self.label, "beta")?
            + dot(&self.coeff_gamma, gamma, &self.label, "gamma")?)
    }

    /// The raw coefficient data; forms are compared by these vectors.
    pub fn coefficients(&self) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
        (
            self.coeff_alpha.clone(),
            self.coeff_beta.clone(),
            self.coeff_gamma.clone(),
        )
    }

    /// Coefficientwise sum; the operands must share their ambient lengths.
    pub fn sum(&self, other: &LinearForm, label: String) -> LinearForm {
        assert_eq!(self.coeff_alpha.len(), other.coeff_alpha.len());
        assert_eq!(self.coeff_beta.len(), other.coeff_beta.len());
        assert_eq!(self.coeff_gamma.len(), other.coeff_gamma.len());
        let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        LinearForm {
            coeff_alpha: add(&self.coeff_alpha, &other.coeff_alpha),
            coeff_beta: add(&self.coeff_beta, &other.coeff_beta),
            coeff_gamma: add(&self.coeff_gamma, &other.coeff_gamma),
            label,
        }
    }

    pub fn same_coefficients(&self, other: &LinearForm) -> bool {
        self.coeff_alpha == other.coeff_alpha
            && self.coeff_beta == other.coeff_beta
            && self.coeff_gamma == other.coeff_gamma
    }
}

fn n_as_alpha_sum(e: usize) -> Vec<i64> {
    vec![1; e + 1]
}

/// The Murnaghan form: slack `n + gamma_1 - alpha_1 - beta_1`, nonnegative
/// on the whole Kronecker semigroup and zero on its Murnaghan facet.
pub fn murnaghan_form(e: usize, f: usize) -> LinearForm {
    let mut ca = n_as_alpha_sum(e);
    ca[0] -= 1;
    let mut cb = vec![0; f + 1];
    cb[0] = -1;
    let mut cg = vec![0; e + f + 1];
    cg[0] = 1;
    LinearForm::new(ca, cb, cg, "murnaghan".to_string())
}

/// The Weyl-type form for column `j` (`2 <= j <= f+1`): slack
/// `n + gamma_1 + gamma_{e+j} - alpha_1 - beta_1 - beta_j`. Restricted to
/// the Murnaghan facet the slack is `gamma_{e+j} - beta_j`, and the
/// Murnaghan form plus this form equals the comparison form
/// coefficientwise. Its vanishing locus hosts the Weyl reduction formula.
pub fn weyl_kron_form(e: usize, f: usize, j: usize) -> Result<LinearForm> {
    if !(2 <= j && j <= f + 1) {
        return Err(Error::BadRange(format!("need 2 <= j <= f+1, got j={j}, f={f}")));
    }
    let mut ca = n_as_alpha_sum(e);
    ca[0] -= 1;
    let mut cb = vec![0; f + 1];
    cb[0] = -1;
    cb[j - 1] -= 1;
    let mut cg = vec![0; e + f + 1];
    cg[0] = 1;
    cg[e + j - 1] += 1;
    Ok(LinearForm::new(
        ca,
        cb,
        cg,
        format!("weyl-kron[e={e},f={f},j={j}]"),
    ))
}

/// The Horn-type form of a triple: slack
/// `n + |abar_I| - alpha_1 + |bbar_J| - beta_1 - |gbar_K| + gamma_1`, where
/// the bar selects shifted coordinates (`abar_I` sums `alpha_{i+1}` over
/// `i` in `I`).
pub fn horn_kron_form(t: &HornTriple) -> LinearForm {
    let (e, f) = (t.e, t.f);
    let mut ca = n_as_alpha_sum(e);
    ca[0] -= 1;
    for &i in t.i.indices() {
        ca[i] += 1; // alpha_{i+1} is coordinate i (0-based)
    }
    let mut cb = vec![0; f + 1];
    cb[0] = -1;
    for &j in t.j.indices() {
        cb[j] += 1;
    }
    let mut cg = vec![0; e + f + 1];
    cg[0] = 1;
    for &k in t.k.indices() {
        cg[k] -= 1;
    }
    LinearForm::new(
        ca,
        cb,
        cg,
        format!("horn-kron[I={},J={},K={}]", t.i, t.j, t.k),
    )
}

/// Which of the two symmetric roles carries the distinguished column in the
/// final inequality family.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Side {
    Beta,
    Alpha,
}

/// The final form extending the chain bound on the `j`-th column: slack
/// `n + gamma_1 + gamma_j - alpha_1 - beta_1 - beta_j` (side beta,
/// `2 <= j <= f+1`), with the roles of `(alpha, e)` and `(beta, f)` swapped
/// on side alpha. Restricted to the Murnaghan facet the slack is
/// `gamma_j - beta_j`.
pub fn final_form(e: usize, f: usize, j: usize, side: Side) -> Result<LinearForm> {
    let hi = match side {
        Side::Beta => f + 1,
        Side::Alpha => e + 1,
    };
    if !(2 <= j && j <= hi) {
        return Err(Error::BadRange(format!(
            "need 2 <= j <= {hi} on side {side:?}, got j={j}"
        )));
    }
    let mut ca = n_as_alpha_sum(e);
    ca[0] -= 1;
    let mut cb = vec![0; f + 1];
    cb[0] = -1;
    let mut cg = vec![0; e + f + 1];
    cg[0] = 1;
    cg[j - 1] += 1;
    match side {
        Side::Beta => cb[j - 1] -= 1,
        Side::Alpha => ca[j - 1] -= 1,
    }
    let side_name = match side {
        Side::Beta => "beta",
        Side::Alpha => "alpha",
    };
    Ok(LinearForm::new(
        ca,
        cb,
        cg,
        format!("final[side={side_name},e={e},f={f},j={j}]"),
    ))
}

/// Index choice for the comparison form's gamma term.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ComparisonIndex {
    /// `gamma_{e+j}`: the variant that decomposes as Murnaghan plus
    /// Weyl-type.
    Shifted,
    /// `gamma_j`: the variant that decomposes as Murnaghan plus the final
    /// form.
    Literal,
}

/// The comparison form: slack
/// `2n + 2 gamma_1 + gamma_* - 2 alpha_1 - 2 beta_1 - beta_j` with
/// `gamma_* = gamma_{e+j}` (shifted) or `gamma_j` (literal).
pub fn comparison_form(e: usize, f: usize, j: usize, index: ComparisonIndex) -> Result<LinearForm> {
    if !(2 <= j && j <= f + 1) {
        return Err(Error::BadRange(format!("need 2 <= j <= f+1, got j={j}, f={f}")));
    }
    let mut ca: Vec<i64> = vec![2; e + 1];
    ca[0] = 0;
    let mut cb = vec![0; f + 1];
    cb[0] = -2;
    cb[j - 1] -= 1;
    let mut cg = vec![0; e + f + 1];
    cg[0] = 2;
    let pos = match index {
        ComparisonIndex::Shifted => e + j - 1,
        ComparisonIndex::Literal => j - 1,
    };
    cg[pos] += 1;
    let tag = match index {
        ComparisonIndex::Shifted => "e+j",
        ComparisonIndex::Literal => "j",
    };
    Ok(LinearForm::new(
        ca,
        cb,
        cg,
        format!("comparison[e={e},f={f},j={j},gamma={tag}]"),
    ))
}

/// Outcome of the redundancy certificate for the comparison form.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateResult {
    pub e: usize,
    pub f: usize,
    pub j: usize,
    /// Whether the shifted comparison form equals Murnaghan + Weyl-type
    /// coefficientwise.
    pub holds: bool,
    /// Whether the literal variant also satisfies that identity (it must
    /// not; it differs exactly at the two gamma positions).
    pub literal_variant_holds: bool,
    pub form9: LinearForm,
    pub murnaghan: LinearForm,
    pub weyl: LinearForm,
}

/// Verifies the exact vector identity
/// `comparison(shifted) = murnaghan + weyl_kron(j)` and that the literal
/// variant fails it.
pub fn redundancy_certificate(e: usize, f: usize, j: usize) -> Result<CertificateResult> {
    let murnaghan = murnaghan_form(e, f);
    let weyl = weyl_kron_form(e, f, j)?;
    let sum = murnaghan.sum(&weyl, "murnaghan+weyl".to_string());
    let form9 = comparison_form(e, f, j, ComparisonIndex::Shifted)?;
    let literal = comparison_form(e, f, j, ComparisonIndex::Literal)?;
    Ok(CertificateResult {
        e,
        f,
        j,
        holds: form9.same_coefficients(&sum),
        literal_variant_holds: literal.same_coefficients(&sum),
        form9,
        murnaghan,
        weyl,
    })
}

/// The inequality families, for sweep selection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Family {
    Murnaghan,
    WeylKron,
    HornKron,
    Final,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Murnaghan,
        Family::WeylKron,
        Family::HornKron,
        Family::Final,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Murnaghan => "murnaghan",
            Family::WeylKron => "weyl-kron",
            Family::HornKron => "horn-kron",
            Family::Final => "final",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "murnaghan" => Ok(Family::Murnaghan),
            "weyl-kron" | "weyl" => Ok(Family::WeylKron),
            "horn-kron" | "horn" => Ok(Family::HornKron),
            "final" => Ok(Family::Final),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

/// Every form of one family at `(e, f)`.
pub fn family_forms(e: usize, f: usize, family: Family) -> Vec<LinearForm> {
    match family {
        Family::Murnaghan => vec![murnaghan_form(e, f)],
        Family::WeylKron => (2..=f + 1)
            .map(|j| weyl_kron_form(e, f, j).expect("j in range"))
            .collect(),
        Family::HornKron => all_horn_triples(e, f)
            .iter()
            .map(horn_kron_form)
            .collect(),
        Family::Final => {
            let mut forms: Vec<LinearForm> = (2..=f + 1)
                .map(|j| final_form(e, f, j, Side::Beta).expect("j in range"))
                .collect();
            forms.extend((2..=e + 1).map(|j| final_form(e, f, j, Side::Alpha).expect("j in range")));
            forms
        }
    }
}

/// Every form of every family at `(e, f)`.
pub fn all_forms(e: usize, f: usize) -> Vec<LinearForm> {
    Family::ALL
        .iter()
        .flat_map(|&fam| family_forms(e, f, fam))
        .collect()
}

/// One negative-slack witness: a form and a semigroup point it fails on.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub form_label: String,
    pub triple: KronRecord,
    pub slack: i64,
}

/// The outcome of a verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct ViolationReport {
    pub e: usize,
    pub f: usize,
    pub nmax: u64,
    pub families: Vec<&'static str>,
    pub checked_points: usize,
    pub checked_forms: usize,
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates every form of the selected families on every point of the
/// Kronecker semigroup with lengths bounded by `(e+1, f+1, e+f+1)` and size
/// up to `nmax`, reporting all negative slacks.
pub fn verify_families(e: usize, f: usize, nmax: u64, families: &[Family]) -> ViolationReport {
    let records = enumerate_kron(e + 1, f + 1, e + f + 1, nmax);
    let forms: Vec<LinearForm> = families
        .iter()
        .flat_map(|&fam| family_forms(e, f, fam))
        .collect();
    verify_forms_on(e, f, nmax, families, &forms, &records)
}

/// Same sweep as [`verify_families`], for caller-supplied forms and points.
pub fn verify_forms_on(
    e: usize,
    f: usize,
    nmax: u64,
    families: &[Family],
    forms: &[LinearForm],
    records: &[KronRecord],
) -> ViolationReport {
    let mut violations = Vec::new();
    for rec in records {
        for form in forms {
            let slack = form
                .slack(&rec.alpha, &rec.beta, &rec.gamma)
                .expect("enumerated lengths fit the forms");
            if slack < 0 {
                violations.push(Violation {
                    form_label: form.label.clone(),
                    triple: rec.clone(),
                    slack,
                });
            }
        }
    }
    ViolationReport {
        e,
        f,
        nmax,
        families: families.iter().map(|fam| fam.name()).collect(),
        checked_points: records.len(),
        checked_forms: forms.len(),
        violations,
    }
}

/// All families at once.
pub fn verify_family(e: usize, f: usize, nmax: u64) -> ViolationReport {
    verify_families(e, f, nmax, &Family::ALL)
}

/// The records on which the form vanishes.
pub fn saturated_triples(form: &LinearForm, records: &[KronRecord]) -> Vec<KronRecord> {
    records
        .iter()
        .filter(|r| {
            form.slack(&r.alpha, &r.beta, &r.gamma)
                .expect("enumerated lengths fit the form")
                == 0
        })
        .cloned()
        .collect()
}
