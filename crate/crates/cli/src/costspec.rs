//! Textual cost-model syntax: `table:PATH`, `power:P`, `linear:B`,
//! `ceillog2:A`, `expr:FORMULA`. Scalars are exact rationals written as
//! integers, fractions (`13/2`), or decimals (`0.25`).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num::BigRational;

use criteria_core::efficiency::{parse_decimal, CostModel};

use crate::report::{CliResult, InputError};

/// Exact rational from an integer, fraction, or decimal literal.
pub fn parse_rational(s: &str) -> CliResult<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let value = match body.split_once('/') {
        Some((num, den)) => {
            let n = parse_decimal(num.trim()).map_err(InputError::from)?;
            let d = parse_decimal(den.trim()).map_err(InputError::from)?;
            if d == BigRational::from_integer(0.into()) {
                return Err(InputError(format!("zero denominator in {s:?}")));
            }
            n / d
        }
        None => parse_decimal(body).map_err(InputError::from)?,
    };
    Ok(if neg { -value } else { value })
}

/// Comma-separated rationals, e.g. `4,2,1`.
pub fn parse_rational_list(s: &str) -> CliResult<Vec<BigRational>> {
    s.split(',').map(parse_rational).collect()
}

/// Parse a cost model spec. Table files are JSON objects mapping category
/// counts to costs; non-integer costs must be written as strings.
pub fn parse_cost_spec(spec: &str) -> CliResult<CostModel> {
    let (kind, arg) = spec.split_once(':').ok_or_else(|| {
        InputError(format!(
            "cost spec {spec:?} must look like kind:arg (table:PATH, power:P, linear:B, ceillog2:A, expr:FORMULA)"
        ))
    })?;
    match kind {
        "power" => {
            let p: u32 = arg
                .parse()
                .map_err(|_| InputError(format!("power exponent {arg:?} must be a nonnegative integer")))?;
            Ok(CostModel::power(p))
        }
        "linear" => Ok(CostModel::linear(parse_rational(arg)?)?),
        "ceillog2" => Ok(CostModel::ceil_log2_scaled(parse_rational(arg)?)?),
        "expr" => Ok(CostModel::expr(arg)?),
        "table" => load_table(Path::new(arg)),
        other => Err(InputError(format!("unknown cost model kind {other:?}"))),
    }
}

fn load_table(path: &Path) -> CliResult<CostModel> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read cost table {}: {e}", path.display())))?;
    let raw: serde_json::Map<String, serde_json::Value> = serde_json::from_str(&text)?;
    let mut entries = BTreeMap::new();
    for (key, value) in raw {
        let e: u64 = key
            .parse()
            .map_err(|_| InputError(format!("table key {key:?} is not a category count")))?;
        let cost = match &value {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    BigRational::from_integer(i.into())
                } else if let Some(u) = n.as_u64() {
                    BigRational::from_integer(u.into())
                } else {
                    return Err(InputError(format!(
                        "table value for {key} must be an integer or a string rational"
                    )));
                }
            }
            serde_json::Value::String(s) => parse_rational(s)?,
            _ => {
                return Err(InputError(format!(
                    "table value for {key} must be an integer or a string rational"
                )))
            }
        };
        entries.insert(e, cost);
    }
    Ok(CostModel::table(entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_forms() {
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
        assert_eq!(parse_rational("13/2").unwrap(), rat(13, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn specs() {
        assert_eq!(
            parse_cost_spec("power:2").unwrap().cost(3).unwrap(),
            rat(9, 1)
        );
        assert_eq!(
            parse_cost_spec("linear:1").unwrap().cost(3).unwrap(),
            rat(3, 1)
        );
        assert_eq!(
            parse_cost_spec("ceillog2:1").unwrap().cost(5).unwrap(),
            rat(3, 1)
        );
        assert_eq!(
            parse_cost_spec("expr:e*e+1").unwrap().cost(3).unwrap(),
            rat(10, 1)
        );
        assert!(parse_cost_spec("power").is_err());
        assert!(parse_cost_spec("magic:1").is_err());
    }
}
