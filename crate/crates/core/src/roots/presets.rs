//! Named highest weights.

use super::system::{CartanType, RootSystem, Weight};
use crate::error::{Error, Result};

/// Names understood by [`named_weight`].
pub const PRESET_NAMES: &[&str] = &[
    "trivial",
    "vector",
    "adjoint",
    "spinor",
    "spinor+",
    "spinor-",
    "spinor16",
    "graviton",
    "gravitino",
    "3form",
];

/// Highest weight for a preset name.
///
/// `vector` is the first fundamental weight (the defining representation for
/// A/B/C/D); `spinor` is `½(1,…,1)` for B_n and D_n (`spinor+`), `spinor-`
/// flips the last sign on D_n. `graviton`, `gravitino` and `3form` are the
/// B₄ irreps of dimensions 44, 128 and 84.
pub fn named_weight(rs: &RootSystem, name: &str) -> Result<Weight> {
    let half = rs.scale() / 2;
    let n = rs.rank();
    let unsupported = || Error::domain(format!("preset `{name}` is not defined for {rs}"));
    let w = match name {
        "trivial" => rs.zero_weight(),
        "vector" => rs.fundamental_weights()[0].clone(),
        "adjoint" => rs
            .positive_roots()
            .last()
            .expect("nonempty root system")
            .coords
            .clone(),
        "spinor" | "spinor+" | "spinor16" => match rs.kind() {
            CartanType::B | CartanType::D => Weight(vec![half; n]),
            _ => return Err(unsupported()),
        },
        "spinor-" => match rs.kind() {
            CartanType::D => {
                let mut w = vec![half; n];
                w[n - 1] = -half;
                Weight(w)
            }
            _ => return Err(unsupported()),
        },
        "graviton" | "gravitino" | "3form" if rs.kind() == CartanType::B && n == 4 => {
            let v = match name {
                "graviton" => [4, 0, 0, 0],
                "gravitino" => [3, 1, 1, 1],
                _ => [2, 2, 2, 0],
            };
            Weight(v.iter().map(|c| c * half).collect())
        }
        _ => return Err(unsupported()),
    };
    if name == "spinor16" && rs.label() != "D5" {
        return Err(unsupported());
    }
    Ok(w)
}

/// Parses a highest weight: a preset name, or comma-separated Dynkin labels.
pub fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight> {
    let text = text.trim();
    if text.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
        return named_weight(rs, text);
    }
    let labels = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::domain(format!("bad Dynkin label `{}`", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    rs.weight_from_dynkin(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::character::weyl_dim;

    fn dim(rs: &RootSystem, name: &str) -> u64 {
        let w = named_weight(rs, name).unwrap();
        u64::try_from(&weyl_dim(rs, &w).unwrap()).unwrap()
    }

    #[test]
    fn preset_dimensions() {
        let b4: RootSystem = "B4".parse().unwrap();
        assert_eq!(dim(&b4, "graviton"), 44);
        assert_eq!(dim(&b4, "gravitino"), 128);
        assert_eq!(dim(&b4, "3form"), 84);
        assert_eq!(dim(&b4, "adjoint"), 36);
        assert_eq!(dim(&b4, "vector"), 9);
        let d5: RootSystem = "D5".parse().unwrap();
        assert_eq!(dim(&d5, "spinor16"), 16);
        assert_eq!(dim(&d5, "spinor-"), 16);
        let e6: RootSystem = "E6".parse().unwrap();
        assert_eq!(dim(&e6, "vector"), 27);
        assert_eq!(dim(&e6, "adjoint"), 78);
        assert!(named_weight(&e6, "spinor").is_err());
        assert!(named_weight(&b4, "spinor16").is_err());
    }

    #[test]
    fn dynkin_parsing() {
        let d5: RootSystem = "D5".parse().unwrap();
        assert_eq!(parse_weight(&d5, "0,0,0,0,1").unwrap(), Weight(vec![1; 5]));
        assert!(parse_weight(&d5, "0,0,x,0,1").is_err());
        assert!(parse_weight(&d5, "1,0").is_err());
    }
}
