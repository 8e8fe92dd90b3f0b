//! Closed forms for torus links: the twisted Alexander polynomial for the
//! `SL(2)` representations and their symmetric powers, Reidemeister torsion,
//! and its growth rate.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{rational_reduce, LaurentPoly, RationalFn};
use crate::presentation::TorusLinkParams;
use crate::repn::{check_label, is_interior};
use crate::scalars::{Cyclotomic, CyclotomicField, Precision, Scalar};

/// A torus link together with eigenvalue exponents `α = ζ_{2p}^a`,
/// `β = ζ_{2q}^b` and the symmetric power `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusEigenData {
    pub params: TorusLinkParams,
    pub a: i64,
    pub b: i64,
    pub n: usize,
}

impl TorusEigenData {
    pub fn new(params: TorusLinkParams, a: i64, b: i64, n: usize) -> Result<Self> {
        check_label(&params, a, b)?;
        if n < 1 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        Ok(TorusEigenData { params, a, b, n })
    }

    pub fn with_n(self, n: usize) -> Result<Self> {
        Self::new(self.params, self.a, self.b, n)
    }

    /// Set iff the label lies in the irreducible range `0 < a < p`, `0 < b < q`.
    pub fn irreducible_flag(&self) -> bool {
        is_interior(&self.params, self.a, self.b)
    }

    /// `p' = p / gcd(a, p)`.
    pub fn p_prime(&self) -> i64 {
        self.params.p / self.a.gcd(&self.params.p)
    }

    /// `q' = q / gcd(b, q)`.
    pub fn q_prime(&self) -> i64 {
        self.params.q / self.b.gcd(&self.params.q)
    }

    /// The field `Q(ζ_M)` with `M = lcm(2p, 2q)`.
    pub fn default_field(&self) -> CyclotomicField {
        CyclotomicField::for_torus(self.params.p as u64, self.params.q as u64)
    }

    fn check_odd_labels(&self) -> Result<()> {
        if self.n % 2 != 0 || self.a % 2 == 0 || self.b % 2 == 0 {
            return Err(Error::Parity(format!(
                "torsion formula needs n even and a, b odd (got n = {}, a = {}, b = {})",
                self.n, self.a, self.b
            )));
        }
        Ok(())
    }
}

type Poly = LaurentPoly<Cyclotomic>;

fn t_terms(f: &CyclotomicField, terms: &[(i64, Cyclotomic)]) -> Poly {
    LaurentPoly::from_terms(1, f, terms.iter().map(|(e, c)| (vec![*e], c.clone())))
}

/// `t^{2k} − c·t^k + 1`.
fn palindromic(f: &CyclotomicField, k: i64, c: Cyclotomic) -> Poly {
    t_terms(f, &[(2 * k, Cyclotomic::one(f)), (k, c.neg()), (0, Cyclotomic::one(f))])
}

/// `t^k − c`.
fn binomial(f: &CyclotomicField, k: i64, c: Cyclotomic) -> Poly {
    t_terms(f, &[(k, Cyclotomic::one(f)), (0, c.neg())])
}

/// The `SL(2)` formula
/// `(t^{pq} − (−1)^a)^{2μ} / ((t^p − β)(t^p − β⁻¹)(t^q − α)(t^q − α⁻¹))`
/// before reduction, over `field`.
pub fn closed_form_sl2_unreduced(data: &TorusEigenData, field: &CyclotomicField) -> Result<RationalFn<Cyclotomic>> {
    if data.n != 2 {
        return Err(Error::InvalidParams(format!("SL(2) formula needs n = 2, got {}", data.n)));
    }
    let TorusLinkParams { mu, p, q, .. } = data.params;
    let alpha = Cyclotomic::root_of_unity(field, 2 * p as u64, data.a)?;
    let beta = Cyclotomic::root_of_unity(field, 2 * q as u64, data.b)?;
    let sign = Cyclotomic::from_i64(field, if data.a % 2 == 0 { 1 } else { -1 });
    let num = binomial(field, p * q, sign).pow(2 * mu as u32);
    let inv = |z: &Cyclotomic| z.inv().ok_or(Error::DivisionByZero);
    let den = [
        binomial(field, p, beta.clone()),
        binomial(field, p, inv(&beta)?),
        binomial(field, q, alpha.clone()),
        binomial(field, q, inv(&alpha)?),
    ]
    .iter()
    .fold(Poly::one(1, field), |acc, f| &acc * f);
    RationalFn::new(num, den)
}

/// The reduced `SL(2)` closed form in the single variable `t`.
pub fn closed_form_sl2(data: &TorusEigenData) -> Result<RationalFn<Cyclotomic>> {
    let f = closed_form_sl2_unreduced(data, &data.default_field())?;
    Ok(rational_reduce(&f)?.value)
}

/// The symmetric-power formula before reduction, over `field` (whose order
/// must be a multiple of `lcm(2p, 2q)`).
///
/// Even `n`: `(t^{pq} − (−1)^a)^{nμ}` over
/// `∏_{j<n/2} (t^{2q} − 2cos((2j+1)aπ/p) t^q + 1)(t^{2p} − 2cos((2j+1)bπ/q) t^p + 1)`.
///
/// Odd `n`: `(t^{pq} − 1)^{nμ}` over
/// `(t^p − 1)(t^q − 1) ∏_{1≤j≤(n−1)/2} (t^{2q} − 2cos(2jaπ/p) t^q + 1)(t^{2p} − 2cos(2jbπ/q) t^p + 1)`.
pub fn closed_form_symn_unreduced(data: &TorusEigenData, field: &CyclotomicField) -> Result<RationalFn<Cyclotomic>> {
    let TorusLinkParams { mu, p, q, .. } = data.params;
    let n = data.n;
    let one = Cyclotomic::one(field);
    let (sign, odd_factors, ks): (i64, bool, Vec<i64>) = if n % 2 == 0 {
        let sign = if data.a % 2 == 0 { 1 } else { -1 };
        (sign, false, (0..n as i64 / 2).map(|j| 2 * j + 1).collect())
    } else {
        (1, true, (1..=(n as i64 - 1) / 2).map(|j| 2 * j).collect())
    };
    let num = binomial(field, p * q, Cyclotomic::from_i64(field, sign)).pow((n * mu) as u32);
    let mut den = Poly::one(1, field);
    if odd_factors {
        den = &(&den * &binomial(field, p, one.clone())) * &binomial(field, q, one);
    }
    for k in ks {
        // 2cos(kaπ/p) = ζ_{2p}^{ka} + ζ_{2p}^{−ka}
        let ca = Cyclotomic::two_cos(field, 2 * p as u64, k * data.a)?;
        let cb = Cyclotomic::two_cos(field, 2 * q as u64, k * data.b)?;
        den = &den * &palindromic(field, q, ca);
        den = &den * &palindromic(field, p, cb);
    }
    RationalFn::new(num, den)
}

/// The reduced symmetric-power closed form over `Q(ζ_{lcm(2p,2q)})`.
pub fn closed_form_symn(data: &TorusEigenData) -> Result<RationalFn<Cyclotomic>> {
    closed_form_symn_in(data, &data.default_field())
}

/// As [`closed_form_symn`], over a caller-chosen cyclotomic field.
pub fn closed_form_symn_in(data: &TorusEigenData, field: &CyclotomicField) -> Result<RationalFn<Cyclotomic>> {
    let f = closed_form_symn_unreduced(data, field)?;
    Ok(rational_reduce(&f)?.value)
}

/// `2^{n(μ−2)} / ∏_{j<n/2} sin²((2j+1)aπ/(2p)) sin²((2j+1)bπ/(2q))`, computed
/// exactly through `4sin²θ = 2 − (ζ + ζ⁻¹)`.
pub fn torsion_closed_form(data: &TorusEigenData) -> Result<Cyclotomic> {
    torsion_closed_form_in(data, &data.default_field())
}

pub fn torsion_closed_form_in(data: &TorusEigenData, field: &CyclotomicField) -> Result<Cyclotomic> {
    data.check_odd_labels()?;
    let TorusLinkParams { mu, p, q, .. } = data.params;
    let two = Cyclotomic::from_i64(field, 2);
    // Each j contributes 16 / ((2 − c_a)(2 − c_b)); together with 2^{n(μ−2)}
    // the powers of two collect into 2^{nμ}.
    let mut den = Cyclotomic::one(field);
    for j in 0..data.n as i64 / 2 {
        let k = 2 * j + 1;
        let ca = Cyclotomic::two_cos(field, 2 * p as u64, k * data.a)?;
        let cb = Cyclotomic::two_cos(field, 2 * q as u64, k * data.b)?;
        den = den.mul(&two.sub(&ca)).mul(&two.sub(&cb));
    }
    two.pow((data.n * mu) as i64)?.div(&den)
}

/// The torsion as the value at `t = 1` of the reduced closed form.
pub fn torsion_via_evaluation(data: &TorusEigenData) -> Result<Cyclotomic> {
    let field = data.default_field();
    let raw = closed_form_symn_unreduced(data, &field)?;
    if raw.den.eval_at_ones().is_zero() {
        return Err(Error::TorsionUndefined);
    }
    rational_reduce(&raw)?.value.eval_at_ones().map_err(|_| Error::TorsionUndefined)
}

/// Limit `(μ − 1/p′ − 1/q′) log 2` of `log 𝕋_n / n`.
pub fn growth_limit(data: &TorusEigenData) -> f64 {
    (data.params.mu as f64 - 1.0 / data.p_prime() as f64 - 1.0 / data.q_prime() as f64) * std::f64::consts::LN_2
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub torsion: f64,
    pub log_torsion_over_n: f64,
    pub predicted_limit: f64,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub limit: f64,
    /// `|log 𝕋_n / n − limit|` at the largest `n`.
    pub final_gap: f64,
    /// Whether the gap trends down; see [`gap_trends_down`].
    pub monotone_trend: bool,
}

impl GrowthReport {
    /// Columns `n, torsion, log_torsion_over_n, predicted_limit, gap`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,torsion,log_torsion_over_n,predicted_limit,gap\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{:e},{:.12},{:.12},{:.12}\n",
                r.n, r.torsion, r.log_torsion_over_n, r.predicted_limit, r.gap
            ));
        }
        out
    }
}

/// Block length used by [`gap_trends_down`].
pub const TREND_BLOCK: usize = 10;

/// The gap sequence oscillates with the residues of `n` modulo `2p′` and
/// `2q′`, so a pointwise monotonicity test is too strict. Instead the maxima
/// over consecutive blocks of [`TREND_BLOCK`] rows must be non-increasing,
/// and the last gap must be below the first.
pub fn gap_trends_down(gaps: &[f64]) -> bool {
    if gaps.len() < 2 {
        return true;
    }
    let maxima: Vec<f64> = gaps
        .chunks(TREND_BLOCK)
        .map(|c| c.iter().cloned().fold(f64::MIN, f64::max))
        .collect();
    maxima.windows(2).all(|w| w[1] <= w[0]) && gaps[gaps.len() - 1] < gaps[0]
}

/// `log 𝕋_n / n` for `n = 2, 4, …, n_max`, computed in parallel from the
/// exact torsion.
pub fn torsion_growth(data: &TorusEigenData, n_max: usize, prec: Precision) -> Result<GrowthReport> {
    data.with_n(2)?.check_odd_labels()?;
    let limit = growth_limit(data);
    let ns: Vec<usize> = (1..=n_max / 2).map(|k| 2 * k).collect();
    let rows = ns
        .par_iter()
        .map(|&n| {
            let t = torsion_closed_form(&data.with_n(n)?)?;
            let ln = t.to_complex(prec).ln_re();
            let per_n = ln / n as f64;
            Ok(GrowthRow {
                n,
                torsion: ln.exp(),
                log_torsion_over_n: per_n,
                predicted_limit: limit,
                gap: (per_n - limit).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let gaps: Vec<f64> = rows.iter().map(|r| r.gap).collect();
    Ok(GrowthReport {
        final_gap: gaps.last().copied().unwrap_or(f64::NAN),
        monotone_trend: gap_trends_down(&gaps),
        rows,
        limit,
    })
}
