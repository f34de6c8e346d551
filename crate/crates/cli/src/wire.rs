//! JSON wire format for group elements and tuples.

use ncm_core::groups::GroupRealization;
use ncm_core::linalg::QuadSqrt5;
use ncm_core::{Element, Family, NcTuple};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub fn encode_element(e: &Element) -> Value {
    match e {
        Element::Perm(w) => json!(w),
        Element::SignedPerm(w) => json!(w),
        Element::Dihedral { rotation, flip } => json!([rotation, *flip as u8]),
        Element::Matrix(rows) => Value::Array(
            rows.iter()
                .map(|row| {
                    Value::Array(
                        row.iter()
                            .map(|x| json!([x.a.to_string(), x.b.to_string()]))
                            .collect(),
                    )
                })
                .collect(),
        ),
    }
}

fn bad(what: &str, v: &Value) -> CliError {
    CliError::Input(format!("malformed {what}: {v}"))
}

fn int_list(v: &Value) -> Option<Vec<i64>> {
    v.as_array()?.iter().map(Value::as_i64).collect()
}

fn rational(v: &Value) -> Option<BigRational> {
    v.as_str()?.parse().ok()
}

pub fn decode_element(family: Family, v: &Value) -> CliResult<Element> {
    let err = || bad("element", v);
    match family {
        Family::A => int_list(v)
            .and_then(|w| w.into_iter().map(|x| u8::try_from(x).ok()).collect())
            .map(Element::Perm)
            .ok_or_else(err),
        Family::B | Family::D => int_list(v)
            .and_then(|w| w.into_iter().map(|x| i8::try_from(x).ok()).collect())
            .map(Element::SignedPerm)
            .ok_or_else(err),
        Family::I2 => match int_list(v).as_deref() {
            Some(&[r, f]) if r >= 0 && (f == 0 || f == 1) => Ok(Element::Dihedral {
                rotation: u32::try_from(r).map_err(|_| err())?,
                flip: f == 1,
            }),
            _ => Err(err()),
        },
        Family::H3 => {
            let rows = v.as_array().ok_or_else(err)?;
            rows.iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(err)?
                        .iter()
                        .map(|x| match x.as_array().map(Vec::as_slice) {
                            Some([a, b]) => Ok(QuadSqrt5 {
                                a: rational(a).ok_or_else(err)?,
                                b: rational(b).ok_or_else(err)?,
                            }),
                            _ => Err(err()),
                        })
                        .collect()
                })
                .collect::<CliResult<_>>()
                .map(Element::Matrix)
        }
    }
}

pub fn encode_tuple(group: &GroupRealization, t: &NcTuple) -> Value {
    Value::Array(t.parts.iter().map(|&p| encode_element(group.element(p))).collect())
}

pub fn decode_tuple(group: &GroupRealization, v: &Value) -> CliResult<NcTuple> {
    let parts = v.as_array().ok_or_else(|| bad("tuple", v))?;
    let family = group.spec().family;
    parts
        .iter()
        .map(|p| {
            let e = decode_element(family, p)?;
            group
                .id_of(&e)
                .ok_or_else(|| CliError::Input(format!("{e} is not an element of {}", group.spec())))
        })
        .collect::<CliResult<Vec<_>>>()
        .map(NcTuple::new)
}
