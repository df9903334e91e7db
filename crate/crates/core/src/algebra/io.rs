//! JSON algebra files.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Exact,
    Numeric,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    #[serde(default = "default_field")]
    field: String,
    basis: Vec<String>,
    #[serde(default)]
    products: Vec<ProductEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    left: String,
    right: String,
    result: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    basis: String,
    value: Value,
}

fn default_field() -> String {
    "exact".into()
}

fn parse_file(text: &str) -> Result<AlgebraFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// The `field` declared by an algebra file.
pub fn peek_field(text: &str) -> Result<FieldMode> {
    match parse_file(text)?.field.as_str() {
        "exact" => Ok(FieldMode::Exact),
        "numeric" => Ok(FieldMode::Numeric),
        other => Err(Error::Parse(format!("unknown field mode {other:?}"))),
    }
}

pub fn algebra_from_json<F: Scalar>(text: &str) -> Result<Algebra<F>> {
    let file = parse_file(text)?;
    if file.dim != file.basis.len() {
        return Err(Error::Parse(format!("dim {} but {} basis labels", file.dim, file.basis.len())));
    }
    for (i, l) in file.basis.iter().enumerate() {
        if file.basis[..i].contains(l) {
            return Err(Error::Parse(format!("duplicate basis label {l:?}")));
        }
    }
    let mut a = Algebra::zero(&file.name, file.basis);
    let index = |a: &Algebra<F>, l: &str| a.index_of(l).ok_or_else(|| Error::Parse(format!("unknown basis label {l:?}")));
    let mut seen = std::collections::BTreeSet::new();
    for p in &file.products {
        let (i, j) = (index(&a, &p.left)?, index(&a, &p.right)?);
        if !seen.insert((i, j)) {
            return Err(Error::Parse(format!("product {} {} given twice", p.left, p.right)));
        }
        for t in &p.result {
            let k = index(&a, &t.basis)?;
            let v = F::from_json(&t.value)?;
            let cur = a.constant(i, j, k).clone();
            a.set(i, j, k, cur + v);
        }
    }
    Ok(a)
}

pub fn algebra_to_json<F: Scalar>(a: &Algebra<F>) -> String {
    let products = a
        .support()
        .into_iter()
        .map(|(i, j)| ProductEntry {
            left: a.basis()[i].clone(),
            right: a.basis()[j].clone(),
            result: a
                .basis_product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Term { basis: a.basis()[k].clone(), value: c.to_json() })
                .collect(),
        })
        .collect();
    let file = AlgebraFile {
        name: a.name().to_string(),
        dim: a.dim(),
        field: if F::EXACT { "exact" } else { "numeric" }.into(),
        basis: a.basis().to_vec(),
        products,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("algebra serializes");
    s.push('\n');
    s
}

impl<F: Scalar> Algebra<F> {
    pub fn load(path: &std::path::Path) -> Result<Self> {
        algebra_from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        Ok(std::fs::write(path, algebra_to_json(self))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cf, Qi};

    const SAMPLE: &str = r#"{
        "name": "sample", "dim": 2, "field": "exact", "basis": ["a", "b"],
        "products": [
            { "left": "a", "right": "b", "result": [ { "basis": "b", "value": "1/2+3/4i" } ] },
            { "left": "b", "right": "a", "result": [ { "basis": "a", "value": "-2" } ] }
        ]
    }"#;

    #[test]
    fn round_trip_is_byte_exact() {
        let a: Algebra<Qi> = algebra_from_json(SAMPLE).unwrap();
        assert_eq!(a.constant(0, 1, 1), &"1/2+3/4i".parse::<Qi>().unwrap());
        let text = algebra_to_json(&a);
        let b: Algebra<Qi> = algebra_from_json(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(algebra_to_json(&b), text);
    }

    #[test]
    fn exact_file_loads_numerically() {
        let a: Algebra<Cf> = algebra_from_json(SAMPLE).unwrap();
        assert!((a.constant(1, 0, 0).0.re + 2.0).abs() < 1e-15);
        assert_eq!(peek_field(SAMPLE).unwrap(), FieldMode::Exact);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let bad_label = SAMPLE.replace("\"left\": \"a\"", "\"left\": \"z\"");
        assert!(algebra_from_json::<Qi>(&bad_label).is_err());
        let bad_dim = SAMPLE.replace("\"dim\": 2", "\"dim\": 3");
        assert!(algebra_from_json::<Qi>(&bad_dim).is_err());
        assert!(algebra_from_json::<Qi>("{").is_err());
        let float = SAMPLE.replace("\"-2\"", "-2.5");
        assert!(algebra_from_json::<Qi>(&float).is_err());
    }
}
