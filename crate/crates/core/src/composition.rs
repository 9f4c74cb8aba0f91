//! The Cayley–Dickson tower R → C → H → O with exact coefficients.
//!
//! Basis convention: level `n` has basis `e_0..e_{2^n - 1}`; an element of
//! level `n` is a pair `(a, b)` of level `n - 1` elements, with `e_i = (e_i, 0)`
//! and `e_{h+i} = (0, e_i)` for `h = 2^{n-1}`. Products follow
//! `(a, b)(c, d) = (ac − d̄b, da + bc̄)`. At the octonion level this gives
//! `e_1 e_2 = e_3`, `e_4` the doubling unit and `e_{4+i} = e_i e_4`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, parse_scalar, scalar, Scalar};

pub const MAX_LEVEL: u8 = 3;

/// Element of the level-`level` Cayley–Dickson algebra (0 = R, 1 = C, 2 = H, 3 = O).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CDElement {
    level: u8,
    coords: Vec<Scalar>,
}

impl CDElement {
    pub fn new(level: u8, coords: Vec<Scalar>) -> Result<Self> {
        check_level(level)?;
        if coords.len() != 1 << level {
            return Err(Error::domain(format!(
                "level {level} needs {} coordinates, got {}",
                1usize << level,
                coords.len()
            )));
        }
        Ok(Self { level, coords })
    }

    pub fn from_i64(level: u8, coords: &[i64]) -> Result<Self> {
        Self::new(level, coords.iter().map(|&c| scalar(c)).collect())
    }

    pub fn zero(level: u8) -> Result<Self> {
        check_level(level)?;
        Ok(Self {
            level,
            coords: vec![Scalar::zero(); 1 << level],
        })
    }

    pub fn one(level: u8) -> Result<Self> {
        Self::basis(level, 0)
    }

    /// The basis unit `e_index`.
    pub fn basis(level: u8, index: usize) -> Result<Self> {
        let mut x = Self::zero(level)?;
        if index >= x.coords.len() {
            return Err(Error::domain(format!("no basis unit e{index} at level {level}")));
        }
        x.coords[index] = Scalar::one();
        Ok(x)
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        Self {
            level: self.level,
            coords: conj_slice(&self.coords),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_level(self, other)?;
        Ok(Self {
            level: self.level,
            coords: add_slices(&self.coords, &other.coords),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_level(self, other)?;
        Ok(Self {
            level: self.level,
            coords: sub_slices(&self.coords, &other.coords),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            level: self.level,
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        cd_multiply(self, other)
    }

    pub fn norm(&self) -> Scalar {
        norm(self)
    }
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}·e{i}", format_scalar(c)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn check_level(level: u8) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::Unsupported(format!(
            "Cayley–Dickson level {level} (only 0..=3 are composition algebras)"
        )));
    }
    Ok(())
}

fn same_level(x: &CDElement, y: &CDElement) -> Result<()> {
    if x.level != y.level {
        return Err(Error::domain(format!(
            "mismatched levels {} and {}",
            x.level, y.level
        )));
    }
    Ok(())
}

fn conj_slice(x: &[Scalar]) -> Vec<Scalar> {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c })
        .collect()
}

fn add_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn mul_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = sub_slices(&mul_slices(a, c), &mul_slices(&conj_slice(d), b));
    let second = add_slices(&mul_slices(d, a), &mul_slices(b, &conj_slice(c)));
    let mut out = first;
    out.extend(second);
    out
}

/// Cayley–Dickson product, applied recursively down to the reals.
pub fn cd_multiply(x: &CDElement, y: &CDElement) -> Result<CDElement> {
    same_level(x, y)?;
    Ok(CDElement {
        level: x.level,
        coords: mul_slices(&x.coords, &y.coords),
    })
}

/// Sum of squares of the coordinates, which is the real part of `x·x̄`.
pub fn norm(x: &CDElement) -> Scalar {
    x.coords.iter().map(|c| c * c).sum()
}

/// `x̄ / N(x)`.
pub fn inverse(x: &CDElement) -> Result<CDElement> {
    let n = norm(x);
    if n.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.conj().scale(&n.recip()))
}

/// `a(bc) − (ab)c`.
pub fn associator(a: &CDElement, b: &CDElement, c: &CDElement) -> Result<CDElement> {
    let left = cd_multiply(a, &cd_multiply(b, c)?)?;
    let right = cd_multiply(&cd_multiply(a, b)?, c)?;
    left.sub(&right)
}

/// `ab − ba`.
pub fn commutator(a: &CDElement, b: &CDElement) -> Result<CDElement> {
    cd_multiply(a, b)?.sub(&cd_multiply(b, a)?)
}

/// Fully antisymmetric trilinear form, stored on strictly increasing index
/// triples (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    dimension: usize,
    components: BTreeMap<[usize; 3], Scalar>,
}

impl ThreeForm {
    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            components: BTreeMap::new(),
        }
    }

    /// `e^0 ∧ e^1 ∧ e^2` on R³.
    pub fn volume3() -> Self {
        let mut phi = Self::zero(3);
        phi.set(0, 1, 2, Scalar::one()).expect("valid indices");
        phi
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Sets `φ(i, j, k)`; the antisymmetric images follow automatically.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<()> {
        if i.max(j).max(k) >= self.dimension {
            return Err(Error::domain("three-form index out of range"));
        }
        let Some((key, sign)) = sort_with_sign([i, j, k]) else {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(Error::domain("repeated index with nonzero value"))
            };
        };
        let value = if sign < 0 { -value } else { value };
        if value.is_zero() {
            self.components.remove(&key);
        } else {
            self.components.insert(key, value);
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        match sort_with_sign([i, j, k]) {
            None => Scalar::zero(),
            Some((key, sign)) => match self.components.get(&key) {
                None => Scalar::zero(),
                Some(v) if sign < 0 => -v,
                Some(v) => v.clone(),
            },
        }
    }

    /// Nonzero components on increasing triples.
    pub fn nonzero(&self) -> impl Iterator<Item = (&[usize; 3], &Scalar)> {
        self.components.iter()
    }
}

fn sort_with_sign(mut idx: [usize; 3]) -> Option<([usize; 3], i32)> {
    if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
        return None;
    }
    let mut sign = 1;
    for pass in 0..2 {
        for p in 0..2 - pass {
            if idx[p] > idx[p + 1] {
                idx.swap(p, p + 1);
                sign = -sign;
            }
        }
    }
    Some((idx, sign))
}

/// The octonion 3-form on Im O = R⁷: `φ(i, j, k)` is the real part of
/// `(e_{i+1} e_{j+1}) · conj(e_{k+1})`.
pub fn structure_3form() -> ThreeForm {
    let mut phi = ThreeForm::zero(7);
    for i in 0..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                let e = |n| CDElement::basis(3, n + 1).expect("octonion unit");
                let prod = cd_multiply(&cd_multiply(&e(i), &e(j)).expect("level"), &e(k).conj())
                    .expect("level");
                phi.set(i, j, k, prod.coords[0].clone()).expect("in range");
            }
        }
    }
    phi
}

/// Multiplication table `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dimension: usize,
    table: Vec<Scalar>,
}

impl StructureConstants {
    pub fn from_table(dimension: usize, table: Vec<Scalar>) -> Result<Self> {
        if table.len() != dimension.pow(3) {
            return Err(Error::domain("structure table must have dimension³ entries"));
        }
        Ok(Self { dimension, table })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dimension;
        &self.table[(i * n + j) * n + k]
    }

    /// Product of two coordinate vectors under this table.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dimension;
        let mut out = vec![Scalar::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `{dimension, triples: [[i, j, k, c], ...]}` over nonzero constants;
    /// integral `c` are JSON numbers, others `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let n = self.dimension;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let cv = match i64::try_from(c.numer()) {
                        Ok(v) if c.is_integer() => json!(v),
                        _ => json!(format_scalar(c)),
                    };
                    triples.push(json!([i, j, k, cv]));
                }
            }
        }
        json!({ "dimension": n, "triples": triples })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::domain(format!("structure constants JSON: {m}"));
        let n = value["dimension"]
            .as_u64()
            .ok_or_else(|| bad("missing dimension"))? as usize;
        let mut table = vec![Scalar::zero(); n.pow(3)];
        for t in value["triples"].as_array().ok_or_else(|| bad("missing triples"))? {
            let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| bad("triple shape"))?;
            let idx: Vec<usize> = t[..3]
                .iter()
                .map(|v| v.as_u64().map(|v| v as usize).filter(|&v| v < n))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("index"))?;
            let c = match &t[3] {
                Value::Number(x) => scalar(x.as_i64().ok_or_else(|| bad("coefficient"))?),
                Value::String(s) => parse_scalar(s)?,
                _ => return Err(bad("coefficient")),
            };
            table[(idx[0] * n + idx[1]) * n + idx[2]] = c;
        }
        Self::from_table(n, table)
    }
}

/// Full multiplication table of the level-`level` algebra, read off from
/// [`cd_multiply`] on basis pairs.
pub fn export_structure_constants(level: u8) -> Result<StructureConstants> {
    check_level(level)?;
    let n = 1usize << level;
    let mut table = Vec::with_capacity(n.pow(3));
    for i in 0..n {
        for j in 0..n {
            let p = cd_multiply(&CDElement::basis(level, i)?, &CDElement::basis(level, j)?)?;
            table.extend(p.coords);
        }
    }
    StructureConstants::from_table(n, table)
}

/// Left multiplication by `e_a` as an `n×n` matrix (column `j` = `e_a e_j`).
pub fn left_multiplication(level: u8, a: usize) -> Result<crate::exact::ExactMatrix> {
    let n = 1usize << level;
    let ea = CDElement::basis(level, a)?;
    let cols = (0..n)
        .map(|j| Ok(cd_multiply(&ea, &CDElement::basis(level, j)?)?.coords))
        .collect::<Result<Vec<_>>>()?;
    crate::exact::ExactMatrix::from_columns(&cols, n)
}

#[cfg(test)]
fn entries_are_units(s: &StructureConstants) -> bool {
    s.table
        .iter()
        .all(|c| c.is_zero() || (c.is_integer() && num_traits::Signed::abs(c).is_one()))
}
