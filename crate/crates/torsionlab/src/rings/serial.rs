//! JSON descriptors for rings, elements and generator lists.
//!
//! Schema: `{"family": string, "scalar": string, "params": {...},
//! "generators": [element-literals]}`. All numbers are exact textual
//! integers or fractions; no floats appear anywhere.
//!
//! Element literals: polynomial terms are `[[{"var":i,"exp":e},...], "c"]`,
//! monoid-algebra terms are `[["num/den"], "c"]`, tower elements are
//! coefficient lists `["m*p^e", ...]`, idealization pairs are
//! `["a/b", "q/p^k"]`.

use crate::rings::eventual::EventualSeqRing;
use crate::rings::idealization::{IdealizationElement, IdealizationRing, PLocal, PruferElement};
use crate::rings::monoid_algebra::MonoidAlgebraRing;
use crate::rings::monomial::{Monomial, RewriteSystem};
use crate::rings::mpoly::{MonomialRing, VarSet};
use crate::rings::product::ProductRing;
use crate::rings::tensor_square::TensorSquareRing;
use crate::rings::tower::TowerRing;
use crate::rings::{RingDescriptor, RingElement, RingError};
use crate::scalar::{normalize_localized, Scalar, ScalarDomain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

fn bad(msg: impl Into<String>) -> RingError {
    RingError::BadDescriptor(msg.into())
}

fn bad_el(msg: impl Into<String>) -> RingError {
    RingError::BadElement(msg.into())
}

pub fn scalar_domain_to_string(d: ScalarDomain) -> String {
    match d {
        ScalarDomain::Rational => "rational".into(),
        ScalarDomain::Integer => "integer".into(),
        ScalarDomain::PrimeField(p) => format!("F{p}"),
        ScalarDomain::LocalizedInteger(p) => format!("Z[1/{p}]"),
    }
}

pub fn scalar_domain_from_string(s: &str) -> Result<ScalarDomain, RingError> {
    if s == "rational" {
        return Ok(ScalarDomain::Rational);
    }
    if s == "integer" {
        return Ok(ScalarDomain::Integer);
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p.parse().map_err(|_| bad(format!("bad prime field: {s}")))?;
        return Ok(ScalarDomain::PrimeField(p));
    }
    if let Some(inner) = s.strip_prefix("Z[1/").and_then(|t| t.strip_suffix(']')) {
        let p: u64 = inner.parse().map_err(|_| bad(format!("bad localized domain: {s}")))?;
        return Ok(ScalarDomain::LocalizedInteger(p));
    }
    Err(bad(format!("unknown scalar domain: {s}")))
}

fn parse_bigint(s: &str) -> Result<BigInt, RingError> {
    BigInt::parse_bytes(s.trim().as_bytes(), 10).ok_or_else(|| bad_el(format!("bad integer: {s}")))
}

pub fn scalar_to_string(s: &Scalar) -> String {
    s.to_string()
}

pub fn scalar_from_string(domain: ScalarDomain, s: &str) -> Result<Scalar, RingError> {
    let s = s.trim();
    match domain {
        ScalarDomain::Rational => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (parse_bigint(a)?, parse_bigint(b)?),
                None => (parse_bigint(s)?, BigInt::one()),
            };
            Ok(Scalar::Rational(BigRational::new(num, den)))
        }
        ScalarDomain::Integer => Ok(Scalar::Integer(parse_bigint(s)?)),
        ScalarDomain::PrimeField(p) => {
            let v = parse_bigint(s)?;
            let m = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
            let digits = m.to_string().parse::<u64>().map_err(|_| bad_el(s))?;
            Ok(Scalar::Fp { p, value: digits })
        }
        ScalarDomain::LocalizedInteger(p) => {
            // "m*p^e" or "m"
            match s.split_once('*') {
                None => Ok(normalize_localized(p, parse_bigint(s)?, 0)),
                Some((m, rest)) => {
                    let (base, exp) = rest
                        .split_once('^')
                        .ok_or_else(|| bad_el(format!("expected p^e in {s}")))?;
                    let base: u64 = base.trim().parse().map_err(|_| bad_el(s))?;
                    if base != p {
                        return Err(bad_el(format!("base {base} does not match p = {p}")));
                    }
                    let exp: i64 = exp.trim().parse().map_err(|_| bad_el(s))?;
                    Ok(normalize_localized(p, parse_bigint(m)?, exp))
                }
            }
        }
    }
}

fn varset_params(vars: &VarSet, params: &mut Map<String, Value>) {
    match vars {
        VarSet::Named(names) => {
            params.insert("vars".into(), json!(names));
        }
        VarSet::Indexed { prefix, bound } => {
            params.insert("prefix".into(), json!(prefix));
            params.insert("bound".into(), json!(bound));
        }
        VarSet::HeadIndexed { head, tail, bound } => {
            params.insert("head".into(), json!(head));
            params.insert("tail".into(), json!(tail));
            params.insert("bound".into(), json!(bound));
        }
    }
}

fn varset_from_params(params: &Map<String, Value>) -> Result<VarSet, RingError> {
    if let Some(vars) = params.get("vars") {
        let names = vars
            .as_array()
            .ok_or_else(|| bad("vars must be an array"))?
            .iter()
            .map(|v| v.as_str().map(String::from).ok_or_else(|| bad("vars entries must be strings")))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(VarSet::Named(names));
    }
    let bound = params
        .get("bound")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("need vars, prefix+bound, or head+tail+bound"))? as u32;
    if let Some(head) = params.get("head").and_then(Value::as_str) {
        let tail = params
            .get("tail")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("head needs tail"))?;
        return Ok(VarSet::HeadIndexed { head: head.into(), tail: tail.into(), bound });
    }
    let prefix = params
        .get("prefix")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("need vars or prefix+bound"))?;
    Ok(VarSet::Indexed { prefix: prefix.into(), bound })
}

fn rewrite_to_json(r: &RewriteSystem) -> Value {
    match r {
        RewriteSystem::AllProductsZero => json!("square-zero"),
        RewriteSystem::DistinctProductsAndRisingPowers => json!("rising-powers"),
        RewriteSystem::SlidingAnnihilator => json!("sliding-annihilator"),
        RewriteSystem::Patterns(pats) => {
            json!({ "patterns": pats.iter().map(monomial_to_json).collect::<Vec<_>>() })
        }
    }
}

fn rewrite_from_json(v: &Value) -> Result<RewriteSystem, RingError> {
    match v {
        Value::String(s) => match s.as_str() {
            "square-zero" => Ok(RewriteSystem::AllProductsZero),
            "rising-powers" => Ok(RewriteSystem::DistinctProductsAndRisingPowers),
            "sliding-annihilator" => Ok(RewriteSystem::SlidingAnnihilator),
            other => Err(bad(format!("unknown rewrite system: {other}"))),
        },
        Value::Object(m) => {
            let pats = m
                .get("patterns")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("rewrite object needs patterns"))?
                .iter()
                .map(monomial_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RewriteSystem::Patterns(pats))
        }
        _ => Err(bad("rewrite must be a string or object")),
    }
}

fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(
        m.iter()
            .map(|(var, exp)| json!({ "var": var, "exp": exp }))
            .collect(),
    )
}

fn monomial_from_json(v: &Value) -> Result<Monomial, RingError> {
    let arr = v.as_array().ok_or_else(|| bad_el("monomial must be an array"))?;
    let mut pairs = Vec::new();
    for e in arr {
        let var = e
            .get("var")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad_el("monomial factor needs var"))?;
        let exp = e
            .get("exp")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad_el("monomial factor needs exp"))?;
        pairs.push((var as u32, exp as u32));
    }
    Ok(Monomial::from_pairs(&pairs))
}

pub fn descriptor_to_json(ring: &RingDescriptor) -> Value {
    let mut params = Map::new();
    match ring {
        RingDescriptor::Monomial(r) => {
            varset_params(&r.vars, &mut params);
            if let Some(rw) = &r.rewrite {
                params.insert("rewrite".into(), rewrite_to_json(rw));
            }
        }
        RingDescriptor::MonoidAlgebra(r) => {
            if let Some(cut) = &r.truncate_above {
                params.insert("truncate_above".into(), json!(cut.to_string()));
            }
        }
        RingDescriptor::Tower(r) | RingDescriptor::TowerLocalized(r) => {
            params.insert("p".into(), json!(r.p));
        }
        RingDescriptor::Idealization(r) => {
            params.insert("p".into(), json!(r.p));
        }
        RingDescriptor::TensorSquare(r) => {
            params.insert("p".into(), json!(r.p));
            params.insert("level".into(), json!(r.level));
        }
        RingDescriptor::EventualSequences(_) => {}
        RingDescriptor::ProductOfFields(r) => {
            params.insert("arity".into(), json!(r.arity));
        }
    }
    json!({
        "family": ring.family(),
        "scalar": scalar_domain_to_string(ring.scalar_domain()),
        "params": Value::Object(params),
    })
}

pub fn descriptor_from_json(v: &Value) -> Result<RingDescriptor, RingError> {
    let family = v
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing family"))?;
    let scalar = scalar_domain_from_string(
        v.get("scalar").and_then(Value::as_str).ok_or_else(|| bad("missing scalar"))?,
    )?;
    let empty = Map::new();
    let params = v.get("params").and_then(Value::as_object).unwrap_or(&empty);
    let p_param = || -> Result<u64, RingError> {
        params
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing p"))
    };
    match family {
        "polynomial" => Ok(RingDescriptor::Monomial(MonomialRing {
            scalar,
            vars: varset_from_params(params)?,
            rewrite: None,
        })),
        "monomial-quotient" => {
            let rewrite = rewrite_from_json(
                params.get("rewrite").ok_or_else(|| bad("quotient needs rewrite"))?,
            )?;
            Ok(RingDescriptor::Monomial(MonomialRing {
                scalar,
                vars: varset_from_params(params)?,
                rewrite: Some(rewrite),
            }))
        }
        "monoid-algebra" => {
            let truncate_above = match params.get("truncate_above").and_then(Value::as_str) {
                Some(s) => {
                    let sc = scalar_from_string(ScalarDomain::Rational, s)?;
                    let Scalar::Rational(r) = sc else { unreachable!() };
                    Some(r)
                }
                None => None,
            };
            Ok(RingDescriptor::MonoidAlgebra(MonoidAlgebraRing { scalar, truncate_above }))
        }
        "ST" => Ok(RingDescriptor::Tower(TowerRing::new(p_param()?))),
        "Sn-localized" => Ok(RingDescriptor::TowerLocalized(TowerRing::new(p_param()?))),
        "idealization" => Ok(RingDescriptor::Idealization(IdealizationRing::new(p_param()?))),
        "tensor-level" => {
            let level = params
                .get("level")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing level"))? as u32;
            Ok(RingDescriptor::TensorSquare(TensorSquareRing::new(p_param()?, level)))
        }
        "eventual-sequence" => Ok(RingDescriptor::EventualSequences(EventualSeqRing::new(scalar))),
        "finite-product" => {
            let arity = params
                .get("arity")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing arity"))? as usize;
            Ok(RingDescriptor::ProductOfFields(ProductRing::new(scalar, arity)))
        }
        other => Err(bad(format!("unknown family: {other}"))),
    }
}

pub fn element_to_json(ring: &RingDescriptor, e: &RingElement) -> Result<Value, RingError> {
    match (ring, e) {
        (RingDescriptor::Monomial(_), RingElement::Poly(x)) => Ok(Value::Array(
            x.terms()
                .map(|(m, c)| json!([monomial_to_json(m), scalar_to_string(c)]))
                .collect(),
        )),
        (RingDescriptor::MonoidAlgebra(_), RingElement::MonoidAlg(x)) => Ok(Value::Array(
            x.terms()
                .map(|(alpha, c)| json!([[alpha.to_string()], scalar_to_string(c)]))
                .collect(),
        )),
        (RingDescriptor::Tower(_), RingElement::Tower(x)) => Ok(Value::Array(
            x.coeffs().iter().map(|c| json!(scalar_to_string(c))).collect(),
        )),
        (RingDescriptor::TowerLocalized(_), RingElement::TowerFraction(x)) => Ok(json!({
            "num": x.num.coeffs().iter().map(scalar_to_string).collect::<Vec<_>>(),
            "den": x.den.coeffs().iter().map(scalar_to_string).collect::<Vec<_>>(),
        })),
        (RingDescriptor::Idealization(r), RingElement::Idealization(x)) => {
            let torsion = if x.torsion.is_zero() {
                "0".to_string()
            } else {
                format!("{}/{}^{}", x.torsion.numerator(), r.p, x.torsion.order_exponent())
            };
            Ok(json!([x.scalar.to_string(), torsion]))
        }
        (RingDescriptor::EventualSequences(_), RingElement::Eventual(x)) => Ok(json!({
            "prefix": x.prefix().iter().map(scalar_to_string).collect::<Vec<_>>(),
            "period": x.period().iter().map(scalar_to_string).collect::<Vec<_>>(),
        })),
        (RingDescriptor::ProductOfFields(_), RingElement::Product(x)) => Ok(Value::Array(
            x.components().iter().map(|c| json!(scalar_to_string(c))).collect(),
        )),
        _ => Err(RingError::UnsupportedFamily(ring.family())),
    }
}

pub fn element_from_json(ring: &RingDescriptor, v: &Value) -> Result<RingElement, RingError> {
    match ring {
        RingDescriptor::Monomial(r) => {
            let arr = v.as_array().ok_or_else(|| bad_el("polynomial must be a term list"))?;
            let mut terms = Vec::new();
            for t in arr {
                let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad_el("term must be [monomial, coeff]"))?;
                let m = monomial_from_json(&pair[0])?;
                let c = scalar_from_string(r.scalar, pair[1].as_str().ok_or_else(|| bad_el("coeff must be a string"))?)?;
                terms.push((m, c));
            }
            Ok(RingElement::Poly(r.from_terms(terms)))
        }
        RingDescriptor::MonoidAlgebra(r) => {
            let arr = v.as_array().ok_or_else(|| bad_el("monoid element must be a term list"))?;
            let mut terms = Vec::new();
            for t in arr {
                let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad_el("term must be [[alpha], coeff]"))?;
                let alpha_arr = pair[0].as_array().filter(|a| a.len() == 1).ok_or_else(|| bad_el("alpha must be a 1-element array"))?;
                let alpha_s = alpha_arr[0].as_str().ok_or_else(|| bad_el("alpha must be a string"))?;
                let Scalar::Rational(alpha) = scalar_from_string(ScalarDomain::Rational, alpha_s)? else {
                    unreachable!()
                };
                let c = scalar_from_string(r.scalar, pair[1].as_str().ok_or_else(|| bad_el("coeff must be a string"))?)?;
                terms.push((alpha, c));
            }
            Ok(RingElement::MonoidAlg(r.from_terms(terms)))
        }
        RingDescriptor::Tower(r) => {
            let coeffs = tower_coeffs_from_json(r, v)?;
            Ok(RingElement::Tower(r.from_coeffs(coeffs)?))
        }
        RingDescriptor::TowerLocalized(r) => {
            let num = v.get("num").ok_or_else(|| bad_el("fraction needs num"))?;
            let den = v.get("den").ok_or_else(|| bad_el("fraction needs den"))?;
            let num = r.from_coeffs(tower_coeffs_from_json(r, num)?)?;
            let den = r.from_coeffs(tower_coeffs_from_json(r, den)?)?;
            Ok(RingElement::TowerFraction(r.fraction(num, den)?))
        }
        RingDescriptor::Idealization(r) => {
            let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad_el("idealization element must be a pair"))?;
            let scalar_str = pair[0].as_str().ok_or_else(|| bad_el("scalar part must be a string"))?;
            let (num, den) = match scalar_str.split_once('/') {
                Some((a, b)) => (parse_bigint(a)?, parse_bigint(b)?),
                None => (parse_bigint(scalar_str)?, BigInt::one()),
            };
            let scalar = PLocal::new(r.p, num, den)?;
            let torsion_str = pair[1].as_str().ok_or_else(|| bad_el("torsion part must be a string"))?;
            let torsion = if torsion_str.trim() == "0" {
                PruferElement::zero(r.p)
            } else {
                let (q, pk) = torsion_str
                    .split_once('/')
                    .ok_or_else(|| bad_el("torsion must be q/p^k"))?;
                let (base, k) = pk.split_once('^').ok_or_else(|| bad_el("torsion must be q/p^k"))?;
                let base: u64 = base.trim().parse().map_err(|_| bad_el(torsion_str))?;
                if base != r.p {
                    return Err(bad_el(format!("torsion base {base} != p {}", r.p)));
                }
                let k: u32 = k.trim().parse().map_err(|_| bad_el(torsion_str))?;
                PruferElement::new(r.p, parse_bigint(q)?, k)
            };
            Ok(RingElement::Idealization(IdealizationElement { scalar, torsion }))
        }
        RingDescriptor::EventualSequences(r) => {
            let read = |key: &str| -> Result<Vec<Scalar>, RingError> {
                v.get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad_el(format!("sequence needs {key}")))?
                    .iter()
                    .map(|s| scalar_from_string(r.scalar, s.as_str().ok_or_else(|| bad_el("entries must be strings"))?))
                    .collect()
            };
            let prefix = read("prefix")?;
            let period = read("period")?;
            if period.is_empty() {
                return Err(bad_el("period must be nonempty"));
            }
            Ok(RingElement::Eventual(r.from_parts(prefix, period)))
        }
        RingDescriptor::ProductOfFields(r) => {
            let arr = v.as_array().ok_or_else(|| bad_el("product element must be an array"))?;
            if arr.len() != r.arity {
                return Err(bad_el(format!("expected {} components", r.arity)));
            }
            let comps = arr
                .iter()
                .map(|s| scalar_from_string(r.scalar, s.as_str().ok_or_else(|| bad_el("components must be strings"))?))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RingElement::Product(r.element(comps)))
        }
        RingDescriptor::TensorSquare(_) => Err(RingError::UnsupportedFamily("tensor-level")),
    }
}

fn tower_coeffs_from_json(r: &TowerRing, v: &Value) -> Result<Vec<Scalar>, RingError> {
    v.as_array()
        .ok_or_else(|| bad_el("tower element must be a coefficient list"))?
        .iter()
        .map(|c| {
            scalar_from_string(
                ScalarDomain::LocalizedInteger(r.p),
                c.as_str().ok_or_else(|| bad_el("coefficients must be strings"))?,
            )
        })
        .collect()
}

/// Full document with a ring and a generator list.
pub fn ring_with_generators_to_json(
    ring: &RingDescriptor,
    generators: &[RingElement],
) -> Result<Value, RingError> {
    let mut doc = descriptor_to_json(ring);
    let gens = generators
        .iter()
        .map(|g| element_to_json(ring, g))
        .collect::<Result<Vec<_>, _>>()?;
    doc.as_object_mut()
        .unwrap()
        .insert("generators".into(), Value::Array(gens));
    Ok(doc)
}

pub fn ring_with_generators_from_json(v: &Value) -> Result<(RingDescriptor, Vec<RingElement>), RingError> {
    let ring = descriptor_from_json(v)?;
    let gens = match v.get("generators") {
        None => vec![],
        Some(Value::Array(arr)) => arr
            .iter()
            .map(|g| element_from_json(&ring, g))
            .collect::<Result<Vec<_>, _>>()?,
        Some(_) => return Err(bad("generators must be an array")),
    };
    Ok((ring, gens))
}
