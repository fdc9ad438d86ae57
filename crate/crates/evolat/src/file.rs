//! The JSON algebra file format.

use evolat_core::scalar::{parse_rational, rational_literal};
use evolat_core::{EvolutionAlgebra, FieldDescriptor, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Largest accepted dimension.
pub const MAX_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<EvolutionAlgebra, CliError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_algebra()
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<EvolutionAlgebra, CliError> {
        let field = match &self.field {
            FieldSpec::Named(name) if name == "Q" => FieldDescriptor::Rationals,
            FieldSpec::Named(name) => {
                return Err(CliError::validation("field", format!("expected \"Q\" or {{\"Fp\": p}}, got \"{}\"", name)))
            }
            FieldSpec::Prime { p: 2 } => {
                return Err(CliError::validation("field", "characteristic 2 is not supported"))
            }
            FieldSpec::Prime { p } => {
                FieldDescriptor::prime(*p).map_err(|e| CliError::validation("field", e.to_string()))?
            }
        };
        let n = self.dim;
        if n == 0 || n > MAX_DIM {
            return Err(CliError::validation("dim", format!("must be between 1 and {}, got {}", MAX_DIM, n)));
        }
        if self.matrix.len() != n {
            return Err(CliError::validation("matrix", format!("expected {} rows, got {}", n, self.matrix.len())));
        }
        let mut matrix = Vec::with_capacity(n);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::validation(
                    format!("matrix[{}]", i),
                    format!("expected {} entries, got {}", n, row.len()),
                ));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, lit)| literal(&field, lit).map_err(|m| CliError::validation(format!("matrix[{}][{}]", i, j), m)))
                .collect::<Result<Vec<_>, _>>()?;
            matrix.push(parsed);
        }
        let e = EvolutionAlgebra::new(field, matrix)?;
        match &self.labels {
            None => Ok(e),
            Some(labels) if labels.len() == n => Ok(e.with_labels(labels.clone())?),
            Some(labels) => Err(CliError::validation("labels", format!("expected {} labels, got {}", n, labels.len()))),
        }
    }

    /// The file describing `e`. Only rational and prime-field algebras can be written.
    pub fn from_algebra(e: &EvolutionAlgebra) -> Result<Self, CliError> {
        let field = match e.field() {
            FieldDescriptor::Rationals => FieldSpec::Named("Q".into()),
            FieldDescriptor::PrimeField(p) => FieldSpec::Prime { p: *p as u64 },
            other => return Err(CliError::validation("field", format!("{} has no file representation", other))),
        };
        let matrix = e
            .matrix()
            .iter()
            .map(|row| row.iter().map(scalar_literal).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CliError::validation("matrix", "entries outside the base field"))?;
        let default: Vec<String> = (1..=e.dim()).map(|i| format!("e{}", i)).collect();
        let labels = (e.labels() != default.as_slice()).then(|| e.labels().to_vec());
        Ok(AlgebraFile { field, dim: e.dim(), matrix, labels })
    }
}

fn literal(field: &FieldDescriptor, text: &str) -> Result<Scalar, String> {
    let q = parse_rational(text).ok_or_else(|| format!("\"{}\" is not a scalar literal", text))?;
    let x = Scalar::rational(q);
    match field {
        FieldDescriptor::PrimeField(p) => x.reduce_mod(*p).map_err(|_| format!("\"{}\" has a denominator divisible by {}", text, p)),
        _ => Ok(x),
    }
}

fn scalar_literal(x: &Scalar) -> Option<String> {
    if let Some(r) = x.residue() {
        return Some(r.to_string());
    }
    x.as_rational().map(|q| rational_literal(&q))
}

/// Canonical text of an algebra file: one matrix row per line.
pub fn to_canonical(e: &EvolutionAlgebra) -> Result<String, CliError> {
    let f = AlgebraFile::from_algebra(e)?;
    let field = serde_json::to_string(&f.field).expect("field serializes");
    let rows: Vec<String> = f.matrix.iter().map(|r| format!("    {}", serde_json::to_string(r).expect("row serializes"))).collect();
    let mut out = format!("{{\n  \"field\": {},\n  \"dim\": {},\n  \"matrix\": [\n{}\n  ]", field, f.dim, rows.join(",\n"));
    if let Some(labels) = &f.labels {
        out.push_str(&format!(",\n  \"labels\": {}", serde_json::to_string(labels).expect("labels serialize")));
    }
    out.push_str("\n}\n");
    Ok(out)
}

/// Parses `Fp:P` into `P`.
pub fn parse_field_override(text: &str) -> Result<u32, CliError> {
    let bad = || CliError::Usage(format!("--field-override expects Fp:P with P an odd prime, got \"{}\"", text));
    let p: u64 = text.strip_prefix("Fp:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
    match FieldDescriptor::prime(p) {
        Ok(FieldDescriptor::PrimeField(p)) => Ok(p),
        _ => Err(bad()),
    }
}

/// Reinterprets a rational algebra over `F_p`.
pub fn apply_field_override(e: &EvolutionAlgebra, p: u32) -> Result<EvolutionAlgebra, CliError> {
    match e.field() {
        FieldDescriptor::Rationals => e
            .reduce_mod(p)
            .map_err(|_| CliError::validation("matrix", format!("a denominator is not invertible mod {}", p))),
        FieldDescriptor::PrimeField(q) if *q == p => Ok(e.clone()),
        other => Err(CliError::validation("field", format!("cannot reinterpret {} over F_{}", other, p))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = r#"{"field":"Q","dim":3,"matrix":[["1","0","0"],["0","1","0"],["1/4","1/4","1"]]}"#;

    #[test]
    fn parses_and_round_trips() {
        let e = parse_algebra(FIG2).unwrap();
        assert_eq!(e.entry(2, 0), &Scalar::ratio(1, 4));
        let canon = to_canonical(&e).unwrap();
        let again = parse_algebra(&canon).unwrap();
        assert_eq!(again, e);
        assert_eq!(to_canonical(&again).unwrap(), canon);
    }

    #[test]
    fn rejects_bad_input() {
        let char2 = r#"{"field":{"Fp":2},"dim":1,"matrix":[["1"]]}"#;
        assert!(matches!(parse_algebra(char2), Err(CliError::Validation { ref field, .. }) if field == "field"));
        let composite = r#"{"field":{"Fp":9},"dim":1,"matrix":[["1"]]}"#;
        assert!(matches!(parse_algebra(composite), Err(CliError::Validation { .. })));
        let ragged = r#"{"field":"Q","dim":2,"matrix":[["1","0"],["1"]]}"#;
        assert!(matches!(parse_algebra(ragged), Err(CliError::Validation { ref field, .. }) if field == "matrix[1]"));
        let zero = r#"{"field":"Q","dim":0,"matrix":[]}"#;
        assert!(matches!(parse_algebra(zero), Err(CliError::Validation { ref field, .. }) if field == "dim"));
        let float = r#"{"field":"Q","dim":1,"matrix":[["0.5"]]}"#;
        assert!(matches!(parse_algebra(float), Err(CliError::Validation { .. })));
        let number = r#"{"field":"Q","dim":1,"matrix":[[1]]}"#;
        assert!(matches!(parse_algebra(number), Err(CliError::Parse { .. })));
        let broken = "{\"field\": \"Q\",\n \"dim\": }";
        assert!(matches!(parse_algebra(broken), Err(CliError::Parse { line: 2, .. })));
    }

    #[test]
    fn prime_fields_and_overrides() {
        let text = r#"{"field":{"Fp":5},"dim":2,"matrix":[["1/2","0"],["-1","1"]]}"#;
        let e = parse_algebra(text).unwrap();
        assert_eq!(e.entry(0, 0), &Scalar::fp(3, 5));
        assert_eq!(e.entry(1, 0), &Scalar::fp(4, 5));
        assert_eq!(parse_field_override("Fp:7").unwrap(), 7);
        assert!(parse_field_override("Fp:8").is_err());
        assert!(parse_field_override("F7").is_err());
        let q = parse_algebra(FIG2).unwrap();
        let r = apply_field_override(&q, 5).unwrap();
        assert_eq!(r.entry(2, 0), &Scalar::fp(4, 5));
        assert!(apply_field_override(&q, 3).is_ok());
    }

    #[test]
    fn labels() {
        let text = r#"{"field":"Q","dim":2,"matrix":[["0","1"],["0","0"]],"labels":["a","b"]}"#;
        let e = parse_algebra(text).unwrap();
        assert_eq!(e.labels(), ["a", "b"]);
        assert!(to_canonical(&e).unwrap().contains("\"labels\": [\"a\",\"b\"]"));
    }
}
