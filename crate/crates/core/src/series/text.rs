//! Line-oriented (`index coefficient`) and JSON-array forms of a series.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Repr, Series};
use crate::error::{Error, Result};

impl Series {
    /// One `index coefficient` line per coefficient; zeros are skipped when
    /// `sparse` is set.
    pub fn to_text(&self, sparse: bool) -> String {
        let mut out = String::new();
        for i in 0..self.order() {
            let c = self.coeff(i);
            if sparse && c.is_zero() {
                continue;
            }
            out.push_str(&format!("{i} {c}\n"));
        }
        out
    }

    /// Parses the output of [`Series::to_text`]. Indices missing from a sparse
    /// listing are zero; `order` defaults to one past the largest index.
    pub fn from_text(text: &str, order: Option<usize>) -> Result<Series> {
        let mut terms: Vec<(usize, BigInt)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(i), Some(c), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::Parse(format!(
                    "line {}: expected `index coefficient`",
                    lineno + 1
                )));
            };
            let i: usize = i
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad index `{i}`", lineno + 1)))?;
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad coefficient `{c}`", lineno + 1)))?;
            terms.push((i, c));
        }
        let order = order.unwrap_or_else(|| terms.iter().map(|t| t.0 + 1).max().unwrap_or(0));
        let mut coeffs = vec![BigInt::zero(); order];
        for (i, c) in terms {
            if i >= order {
                return Err(Error::Parse(format!("index {i} is beyond order {order}")));
            }
            coeffs[i] = c;
        }
        Ok(Series::from_coeffs(coeffs))
    }

    /// Compact dense JSON array of exact decimal integers, e.g. `[1,-1,-1,0]`.
    pub fn to_json_array(&self) -> String {
        let body: Vec<String> = match &self.repr {
            Repr::Exact(c) => c.iter().map(|v| v.to_string()).collect(),
            Repr::Residues { coeffs, .. } => coeffs.iter().map(|v| v.to_string()).collect(),
        };
        format!("[{}]", body.join(","))
    }

    pub fn from_json_array(json: &str) -> Result<Series> {
        let value: serde_json::Value =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
        let coeffs = items
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("`{n}` is not an integer"))),
                other => Err(Error::Parse(format!("`{other}` is not an integer"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Series::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        let a = Series::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(a.to_text(true), "0 1\n1 -1\n2 -1\n5 1\n7 1\n");
        assert_eq!(Series::from_text(&a.to_text(true), Some(8)).unwrap(), a);
        assert_eq!(Series::from_text(&a.to_text(false), None).unwrap(), a);
        assert!(Series::from_text("0 1 2", None).is_err());
        assert!(Series::from_text("9 1", Some(3)).is_err());
    }

    #[test]
    fn json_forms() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let a = Series::from_coeffs(vec![BigInt::from(1), -big.clone(), BigInt::zero()]);
        let j = a.to_json_array();
        assert_eq!(j, "[1,-123456789012345678901234567890,0]");
        assert_eq!(Series::from_json_array(&j).unwrap(), a);
        assert!(Series::from_json_array("[1.5]").is_err());
        assert!(Series::from_json_array("{}").is_err());
    }
}
