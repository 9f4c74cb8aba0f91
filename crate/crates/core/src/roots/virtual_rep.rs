//! Formal integer combinations of irreducible representations, and the
//! decomposition of Weyl-symmetric characters into them.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::character::{irrep_character, weyl_dim, WeightMultiset};
use super::system::{RootSystem, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub hw: Weight,
    pub coeff: i64,
    /// U(1) charge label; carried along, never used in decomposition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<i64>,
}

/// `Σ coeff · V(hw)` over a named root system. Terms are kept sorted by
/// descending height, then descending coordinates, with distinct weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualRep {
    algebra: String,
    terms: Vec<Term>,
}

impl VirtualRep {
    pub fn new(rs: &RootSystem, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut merged: Vec<Term> = Vec::new();
        for t in terms {
            if !rs.is_integral(&t.hw) || !rs.is_dominant(&t.hw) {
                return Err(Error::domain(format!(
                    "{:?} is not a dominant weight of {rs}",
                    t.hw
                )));
            }
            match merged.iter_mut().find(|m| m.hw == t.hw) {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        merged.sort_by(|a, b| rs.height_order(&b.hw, &a.hw));
        Ok(Self {
            algebra: rs.label(),
            terms: merged,
        })
    }

    /// A single irrep with coefficient 1.
    pub fn irrep(rs: &RootSystem, hw: Weight) -> Result<Self> {
        Self::new(
            rs,
            [Term {
                hw,
                coeff: 1,
                charge: None,
            }],
        )
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn coefficient(&self, hw: &Weight) -> i64 {
        self.terms
            .iter()
            .find(|t| &t.hw == hw)
            .map_or(0, |t| t.coeff)
    }

    /// Number of distinct irreducible constituents.
    pub fn constituent_count(&self) -> usize {
        self.terms.len()
    }

    fn check_algebra(&self, rs: &RootSystem) -> Result<()> {
        if rs.label() != self.algebra {
            return Err(Error::domain(format!(
                "representation of {} used with {rs}",
                self.algebra
            )));
        }
        Ok(())
    }

    /// `Σ coeff · dim V(hw)`.
    pub fn dim(&self, rs: &RootSystem) -> Result<BigInt> {
        self.check_algebra(rs)?;
        self.terms.iter().try_fold(BigInt::from(0), |acc, t| {
            Ok(acc + BigInt::from(t.coeff) * BigInt::from(weyl_dim(rs, &t.hw)?))
        })
    }

    /// `(dim, coeff)` per term, in term order.
    pub fn dims(&self, rs: &RootSystem) -> Result<Vec<(u64, i64)>> {
        self.check_algebra(rs)?;
        self.terms
            .iter()
            .map(|t| {
                let d = weyl_dim(rs, &t.hw)?;
                let d = u64::try_from(&d).map_err(|_| Error::Internal("dimension overflow".into()))?;
                Ok((d, t.coeff))
            })
            .collect()
    }

    /// Irrep dimensions repeated by coefficient, sorted descending; negative
    /// coefficients contribute negated dimensions.
    pub fn signed_dimension_list(&self, rs: &RootSystem) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        for (d, c) in self.dims(rs)? {
            let d = d as i64;
            for _ in 0..c.unsigned_abs() {
                out.push(if c > 0 { d } else { -d });
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Character `Σ coeff · ch V(hw)`.
    pub fn character(&self, rs: &RootSystem) -> Result<WeightMultiset> {
        self.check_algebra(rs)?;
        let mut ch = WeightMultiset::new(rs.space_dim());
        for t in &self.terms {
            ch.add_scaled(&*irrep_character(rs, &t.hw)?, t.coeff);
        }
        Ok(ch)
    }

    pub fn negated(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// `{algebra, scale, terms: [{hw, dynkin, coeff, dim}]}`; `hw` holds the
    /// scaled integer coordinates.
    pub fn to_json(&self, rs: &RootSystem) -> Result<Value> {
        self.check_algebra(rs)?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut v = json!({
                    "hw": t.hw.coords(),
                    "dynkin": rs.dynkin_labels(&t.hw),
                    "coeff": t.coeff,
                    "dim": weyl_dim(rs, &t.hw)?.to_string().parse::<u64>().unwrap_or(u64::MAX),
                });
                if let Some(c) = t.charge {
                    v["charge"] = json!(c);
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({ "algebra": self.algebra, "scale": rs.scale(), "terms": terms }))
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::domain(format!("virtual representation JSON: {m}"));
        let label = value["algebra"].as_str().ok_or_else(|| bad("missing algebra"))?;
        let rs: RootSystem = label.parse()?;
        if let Some(scale) = value["scale"].as_i64() {
            if scale != rs.scale() {
                return Err(bad("scale does not match the algebra"));
            }
        }
        let terms = value["terms"]
            .as_array()
            .ok_or_else(|| bad("missing terms"))?
            .iter()
            .map(|t| {
                let hw = t["hw"]
                    .as_array()
                    .ok_or_else(|| bad("hw"))?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| bad("hw coordinate")))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Term {
                    hw: Weight(hw),
                    coeff: t["coeff"].as_i64().ok_or_else(|| bad("coeff"))?,
                    charge: t["charge"].as_i64(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&rs, terms)
    }
}

fn height_max(rs: &RootSystem, candidates: &[Weight]) -> usize {
    candidates
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| rs.height_order(a, b))
        .map(|(i, _)| i)
        .expect("nonempty candidates")
}

/// Greedy highest-weight stripping: repeatedly take the highest remaining
/// dominant weight (height, then coordinates) and subtract its irrep.
pub fn decompose(ws: &WeightMultiset, rs: &RootSystem) -> Result<VirtualRep> {
    strip(ws, rs, None)
}

/// Like [`decompose`], but `pick` chooses among the dominance-maximal
/// remaining dominant weights. Any choice yields the same result.
pub fn decompose_with(
    ws: &WeightMultiset,
    rs: &RootSystem,
    mut pick: impl FnMut(&[Weight]) -> usize,
) -> Result<VirtualRep> {
    strip(ws, rs, Some(&mut pick))
}

type Picker<'a> = &'a mut dyn FnMut(&[Weight]) -> usize;

fn strip(ws: &WeightMultiset, rs: &RootSystem, mut pick: Option<Picker<'_>>) -> Result<VirtualRep> {
    if ws.space_dim() != rs.space_dim() {
        return Err(Error::domain(format!(
            "character has {} coordinates, {rs} has {}",
            ws.space_dim(),
            rs.space_dim()
        )));
    }
    if let Some((w, _)) = ws.iter().find(|(w, _)| !rs.is_integral(w)) {
        return Err(Error::NotACharacter(format!("{w:?} is not a weight of {rs}")));
    }
    if !ws.is_weyl_symmetric(rs) {
        return Err(Error::NotACharacter(format!(
            "multiplicities are not Weyl-symmetric for {rs}"
        )));
    }
    let mut remaining = ws.clone();
    let mut terms = Vec::new();
    loop {
        let dominant: Vec<Weight> = remaining
            .iter()
            .filter(|(w, _)| rs.is_dominant(w))
            .map(|(w, _)| w.clone())
            .collect();
        if dominant.is_empty() {
            if let Some((w, _)) = remaining.iter().next() {
                return Err(Error::NotACharacter(format!(
                    "remainder has non-dominant extremal weight {w:?}"
                )));
            }
            break;
        }
        let hw = match pick.as_mut() {
            None => dominant[height_max(rs, &dominant)].clone(),
            Some(pick) => {
                let top = dominant.iter().map(|w| rs.height2(w)).max().expect("nonempty");
                let maximal: Vec<Weight> = dominant
                    .iter()
                    .filter(|w| {
                        rs.height2(w) == top
                            || !dominant.iter().any(|v| v != *w && rs.dominates(v, w))
                    })
                    .cloned()
                    .collect();
                maximal[pick(&maximal)].clone()
            }
        };
        let c = remaining.get(&hw);
        remaining.add_scaled(&*irrep_character(rs, &hw)?, -c);
        terms.push(Term {
            hw,
            coeff: c,
            charge: None,
        });
    }
    let rep = VirtualRep::new(rs, terms)?;
    debug_assert!(rep.character(rs).map(|ch| ch == *ws).unwrap_or(false));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::character::{alt_power, tensor_product};

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn single_irrep_round_trip() {
        let b4 = rs("B4");
        let hw = Weight(vec![3, 1, 1, 1]);
        let ch = irrep_character(&b4, &hw).unwrap();
        let rep = decompose(&ch, &b4).unwrap();
        assert_eq!(rep, VirtualRep::irrep(&b4, hw).unwrap());
        assert_eq!(rep.dim(&b4).unwrap(), BigInt::from(128));
    }

    #[test]
    fn vector_square_of_d4() {
        let d4 = rs("D4");
        let v = irrep_character(&d4, &Weight(vec![2, 0, 0, 0])).unwrap();
        let sq = decompose(&tensor_product(&v, &v).unwrap(), &d4).unwrap();
        assert_eq!(sq.signed_dimension_list(&d4).unwrap(), vec![35, 28, 1]);
    }

    #[test]
    fn not_a_character() {
        let a1 = rs("A1");
        let mut ws = WeightMultiset::new(2);
        ws.add_weight(Weight(vec![1, -1]), 1);
        assert!(matches!(decompose(&ws, &a1), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn virtual_difference() {
        let d5 = rs("D5");
        let s = irrep_character(&d5, &Weight(vec![1, 1, 1, 1, 1])).unwrap();
        let l2 = alt_power(&s, 2).unwrap();
        let rep = decompose(&l2.minus(&s), &d5).unwrap();
        assert_eq!(rep.signed_dimension_list(&d5).unwrap(), vec![120, -16]);
        assert_eq!(rep.dim(&d5).unwrap(), BigInt::from(104));
    }

    #[test]
    fn json_round_trip() {
        let d5 = rs("D5");
        let mut rep = VirtualRep::irrep(&d5, Weight(vec![2, 2, 2, 0, 0])).unwrap();
        rep.terms[0].charge = Some(-3);
        let v = rep.to_json(&d5).unwrap();
        assert_eq!(v["terms"][0]["dim"], 120);
        assert_eq!(VirtualRep::from_json(&v).unwrap(), rep);
    }
}
