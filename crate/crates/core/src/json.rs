//! JSON encodings of scalars, polynomials, rational functions,
//! representations and reports.
//!
//! * cyclotomic scalar: `{"N": 12, "coeffs": ["1/2", "0", …]}` in the power
//!   basis of `ζ_N`; plain integers and `"a/b"` strings are accepted as
//!   rationals on input.
//! * complex scalar: `{"re": "…", "im": "…"}` as decimal strings.
//! * polynomial: `{"vars": ["t1","t2"], "terms": [{"exp": [2,2], "coef": …}]}`.
//! * rational function: `{"num": …, "den": …}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::laurent::{var_names, LaurentPoly, RationalFn, Unit};
use crate::presentation::Presentation;
use crate::repn::{Mat, Representation};
use crate::scalars::{Complex, Cyclotomic, CyclotomicField, Precision, Scalar};
use crate::twisted::WadaInvariant;

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| BigRational::from_integer(k.into()))
            .ok_or_else(|| bad(format!("non-integer number {n}; use a \"a/b\" string"))),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let num: BigInt = num.trim().parse().map_err(|_| bad(format!("invalid rational `{s}`")))?;
            let den: BigInt = den.trim().parse().map_err(|_| bad(format!("invalid rational `{s}`")))?;
            if den.is_zero() {
                return Err(bad(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(bad(format!("expected rational, found {v}"))),
    }
}

fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Order `N` of the cyclotomic field a scalar lives in (1 for rationals).
fn cyclotomic_order(v: &Value) -> Result<u64> {
    match v {
        Value::Object(m) => match m.get("N") {
            Some(n) => n.as_u64().filter(|&n| n > 0).ok_or_else(|| bad("\"N\" must be a positive integer")),
            None => Err(bad("cyclotomic scalar needs \"N\"")),
        },
        _ => Ok(1),
    }
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    /// Decodes `v` into the field `ctx`.
    fn from_json(ctx: &Self::Ctx, v: &Value) -> Result<Self>;
}

fn cyclotomic_from_json(field: &CyclotomicField, v: &Value) -> Result<Cyclotomic> {
    let Value::Object(m) = v else {
        return Ok(Cyclotomic::from_rational(field, &parse_rational(v)?));
    };
    let n = cyclotomic_order(v)?;
    if field.order() % n != 0 {
        return Err(Error::RootNotInField {
            requested: n,
            order: field.order(),
        });
    }
    let coeffs = m
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("cyclotomic scalar needs a \"coeffs\" array"))?;
    // Σ c_k ζ_n^k with ζ_n = ζ_N^{N/n}
    let mut acc = Cyclotomic::zero(field);
    for (k, c) in coeffs.iter().enumerate() {
        let c = parse_rational(c)?;
        if !c.is_zero() {
            let z = Cyclotomic::root_of_unity(field, n, k as i64)?;
            acc = acc.add(&z.mul(&Cyclotomic::from_rational(field, &c)));
        }
    }
    Ok(acc)
}

impl JsonScalar for Cyclotomic {
    fn to_json(&self) -> Value {
        let coeffs: Vec<String> = self.coeffs().iter().map(rational_string).collect();
        json!({ "N": self.field().order(), "coeffs": coeffs })
    }

    fn from_json(ctx: &CyclotomicField, v: &Value) -> Result<Self> {
        cyclotomic_from_json(ctx, v)
    }
}

impl JsonScalar for Complex {
    fn to_json(&self) -> Value {
        let (re, im) = self.to_decimal_strings();
        json!({ "re": re, "im": im })
    }

    /// Accepts complex objects, and cyclotomic or rational values, which are
    /// embedded with `ζ_N = e^{2πi/N}`.
    fn from_json(ctx: &Precision, v: &Value) -> Result<Self> {
        if let Value::Object(m) = v {
            if m.contains_key("re") || m.contains_key("im") {
                let part = |k: &str| -> Result<String> {
                    match m.get(k) {
                        None => Ok("0".into()),
                        Some(Value::String(s)) => Ok(s.clone()),
                        Some(Value::Number(n)) => Ok(n.to_string()),
                        Some(x) => Err(bad(format!("invalid \"{k}\": {x}"))),
                    }
                };
                return Complex::parse(*ctx, &part("re")?, &part("im")?);
            }
        }
        let n = cyclotomic_order(v)?;
        Ok(cyclotomic_from_json(&CyclotomicField::new(n), v)?.to_complex(*ctx))
    }
}

pub fn unit_to_json(u: &Unit) -> Value {
    json!({
        "vars": var_names(u.exp.len()),
        "terms": [{ "exp": u.exp, "coef": u.sign }],
    })
}

pub fn poly_to_json<S: JsonScalar>(p: &LaurentPoly<S>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e, "coef": c.to_json() }))
        .collect();
    json!({ "vars": p.var_names(), "terms": terms })
}

pub fn poly_from_json<S: JsonScalar>(ctx: &S::Ctx, v: &Value) -> Result<LaurentPoly<S>> {
    let vars = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("polynomial needs a \"vars\" array"))?;
    let nvars = vars.len();
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("polynomial needs a \"terms\" array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exp: Vec<i64> = serde_json::from_value(t.get("exp").cloned().unwrap_or(Value::Null))?;
        if exp.len() != nvars {
            return Err(Error::VariableMismatch(exp.len(), nvars));
        }
        let coef = t.get("coef").ok_or_else(|| bad("term needs \"coef\""))?;
        out.push((exp, S::from_json(ctx, coef)?));
    }
    Ok(LaurentPoly::from_terms(nvars, ctx, out))
}

pub fn rational_to_json<S: JsonScalar>(f: &RationalFn<S>) -> Value {
    json!({ "num": poly_to_json(&f.num), "den": poly_to_json(&f.den) })
}

pub fn rational_from_json<S: JsonScalar>(ctx: &S::Ctx, v: &Value) -> Result<RationalFn<S>> {
    let num = poly_from_json(ctx, v.get("num").ok_or_else(|| bad("rational function needs \"num\""))?)?;
    let den = poly_from_json(ctx, v.get("den").ok_or_else(|| bad("rational function needs \"den\""))?)?;
    RationalFn::new(num, den)
}

pub fn mat_to_json<S: JsonScalar>(m: &Mat<S>) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(JsonScalar::to_json).collect()))
            .collect(),
    )
}

/// `{"dim", "backend", "generators": {name: rows}, "abel": {name: vector}}`.
pub fn representation_to_json<S: JsonScalar>(rep: &Representation<S>) -> Value {
    let mut gens = Map::new();
    let mut abel = Map::new();
    for (i, name) in rep.generator_names().iter().enumerate() {
        gens.insert(name.clone(), mat_to_json(rep.image(i)));
        abel.insert(name.clone(), json!(rep.abelianization()[i]));
    }
    json!({ "dim": rep.dim(), "backend": S::BACKEND, "generators": gens, "abel": abel })
}

fn generator_entries<'a>(v: &'a Value, pres: &Presentation) -> Result<Vec<&'a Value>> {
    let gens = v
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("representation needs a \"generators\" object"))?;
    if let Some(extra) = gens.keys().find(|k| pres.generator_index(k).is_none()) {
        return Err(Error::AlphabetMismatch(format!("unknown generator `{extra}` in representation")));
    }
    pres.generator_names()
        .iter()
        .map(|n| {
            gens.get(n)
                .ok_or_else(|| Error::AlphabetMismatch(format!("no image for generator `{n}`")))
        })
        .collect()
}

/// Smallest cyclotomic field containing every entry of a representation file.
pub fn representation_field(v: &Value, pres: &Presentation) -> Result<CyclotomicField> {
    let mut order = 1u64;
    for m in generator_entries(v, pres)? {
        for row in m.as_array().into_iter().flatten() {
            for e in row.as_array().into_iter().flatten() {
                order = order.lcm(&cyclotomic_order(e)?);
            }
        }
    }
    Ok(CyclotomicField::new(order))
}

/// Reads a representation file for `pres` and runs the relator check.
pub fn representation_from_json<S: JsonScalar>(
    ctx: &S::Ctx,
    v: &Value,
    pres: &Presentation,
) -> Result<Representation<S>> {
    let entries = generator_entries(v, pres)?;
    let mut images = Vec::with_capacity(entries.len());
    for (name, m) in pres.generator_names().iter().zip(entries) {
        let rows = m
            .as_array()
            .ok_or_else(|| bad(format!("image of `{name}` must be an array of rows")))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad(format!("image of `{name}` must be an array of rows")))?
                    .iter()
                    .map(|e| S::from_json(ctx, e))
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(Mat::from_rows(ctx, rows)?);
    }
    if let Some(dim) = v.get("dim") {
        let dim = dim.as_u64().ok_or_else(|| bad("\"dim\" must be a positive integer"))? as usize;
        if let Some(m) = images.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch(format!("declared dim {dim}, found a {0}x{0} image", m.dim())));
        }
    }
    if let Some(abel) = v.get("abel").and_then(Value::as_object) {
        for (i, name) in pres.generator_names().iter().enumerate() {
            if let Some(vec) = abel.get(name) {
                let vec: Vec<i64> = serde_json::from_value(vec.clone())?;
                if vec != pres.abelianization()[i] {
                    return Err(Error::AlphabetMismatch(format!(
                        "abelianization of `{name}` is {vec:?} in the representation but {:?} in the presentation",
                        pres.abelianization()[i]
                    )));
                }
            }
        }
    }
    Representation::new(pres, images)
}

/// Report `{"delta", "reduced_in_t", "polynomial", "unit_witness", …}`.
pub fn wada_report<S: JsonScalar>(pres: &Presentation, w: &WadaInvariant<S>, witness: Option<&Unit>) -> Value {
    json!({
        "delta": rational_to_json(&w.value),
        "reduced": rational_to_json(&w.reduced),
        "reduced_in_t": rational_to_json(&w.reduced_in_t),
        "polynomial": w.polynomial_flag,
        "unit_witness": witness.map(unit_to_json),
        "removed_column": pres.generator_names()[w.removed_column],
        "backend": w.backend,
        "reduced_in_product": w.reduced_in_product.as_ref().map(rational_to_json),
        "display": w.reduced_in_product.as_ref().unwrap_or(&w.reduced_in_t).to_string(),
    })
}
