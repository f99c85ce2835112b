//! Structured (JSON) form: `{"vars": [...], "terms": [{"exp": [...], "coeff": ...}]}`.

use super::{MPoly, Mono, Ring, Vars};
use crate::error::{AlgebraError, Result};
use serde_json::{json, Value};

pub fn to_value<R: Ring>(p: &MPoly<R>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"exp": m.0, "coeff": c.to_json()}))
        .collect();
    json!({"vars": p.vars().to_vec(), "terms": terms})
}

pub fn from_value<R: Ring>(v: &Value) -> Result<MPoly<R>> {
    let bad = |what: &str| AlgebraError::Parse(format!("structured polynomial: {what}"));
    let names: Vec<String> = v
        .get("vars")
        .and_then(|x| x.as_array())
        .ok_or_else(|| bad("missing vars"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("non-string variable")))
        .collect::<Result<_>>()?;
    let vars: Vars = names.into();
    let mut terms = Vec::new();
    for t in v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| bad("missing terms"))? {
        let exp: Vec<u32> = t
            .get("exp")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("term without exp"))?
            .iter()
            .map(|x| x.as_u64().map(|k| k as u32).ok_or_else(|| bad("bad exponent")))
            .collect::<Result<_>>()?;
        if exp.len() != vars.len() {
            return Err(bad("exponent length"));
        }
        let c = R::from_json(t.get("coeff").ok_or_else(|| bad("term without coeff"))?)?;
        if c.is_zero() {
            return Err(bad("stored zero coefficient"));
        }
        terms.push((Mono(exp), c));
    }
    Ok(MPoly::from_terms(&vars, terms))
}

pub fn to_string<R: Ring>(p: &MPoly<R>) -> String {
    serde_json::to_string(&to_value(p)).expect("JSON values always serialize")
}

pub fn from_str<R: Ring>(s: &str) -> Result<MPoly<R>> {
    let v: Value = serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    from_value(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{mpoly::vars, CPoly, ParamRing, Rat};

    #[test]
    fn round_trip_over_parameters() {
        let v = vars(&["z", "zb"]);
        let c = CPoly::param(0);
        let p = MPoly::from_terms(
            &v,
            [
                (Mono(vec![3, 0]), c.sub(&CPoly::one())),
                (Mono(vec![0, 3]), c.neg()),
                (Mono(vec![1, 1]), CPoly::constant(Rat::new(-5, 7))),
            ],
        );
        let s = to_string(&p);
        assert_eq!(from_str::<CPoly>(&s).unwrap(), p);
    }
}
