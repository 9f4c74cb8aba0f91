//! Dimension bookkeeping: exceptional algebras as orthogonal-plus-spinor
//! extensions, the 4×4 magic square, coset dimensions, binomial splits,
//! exterior powers of the Spin(10) spinor and their restrictions, and the
//! B₄ → D₄ restrictions of the eleven-dimensional multiplet.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use super::branching::{branch, Projection};
use super::character::{alt_power, irrep_character, weyl_dim};
use super::presets::named_weight;
use super::system::{CartanType, RootSystem};
use super::virtual_rep::{decompose, VirtualRep};
use crate::error::{Error, Result};
use crate::exact::{binomial, BigCount};

fn rs(kind: CartanType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(kind, rank)
}

fn small(n: &BigUint) -> Result<u64> {
    u64::try_from(n).map_err(|_| Error::Internal("count overflow".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalRow {
    pub group: String,
    pub construction: String,
    /// Adjoint of the orthogonal algebra, extra factor (if any), spinor part.
    pub summands: Vec<u64>,
    pub from_construction: u64,
    pub from_roots: u64,
}

impl ExceptionalRow {
    pub fn holds(&self) -> bool {
        self.from_construction == self.from_roots
    }
}

/// F₄, E₆, E₇, E₈ as `so(n)` plus a spinor (and a U(1) or Sp(1) factor).
/// The left side comes from the exceptional root system, the right from the
/// orthogonal root system and Weyl dimensions of half-spin weights.
pub fn exceptional_dimension_table() -> Result<Vec<ExceptionalRow>> {
    use CartanType::*;
    let spin_dim = |kind, rank, name: &str| -> Result<u64> {
        let r = rs(kind, rank)?;
        small(&weyl_dim(&r, &named_weight(&r, name)?)?)
    };
    let a1 = rs(A, 1)?;
    let a1_fund = small(&weyl_dim(&a1, &named_weight(&a1, "vector")?)?)?;
    let rows = vec![
        (
            "F4",
            rs(F, 4)?,
            "so(9) adjoint + spinor",
            vec![rs(B, 4)?.dim() as u64, spin_dim(B, 4, "spinor")?],
        ),
        (
            "E6",
            rs(E, 6)?,
            "so(10) adjoint + u(1) + both half-spinors",
            vec![
                rs(D, 5)?.dim() as u64,
                1,
                spin_dim(D, 5, "spinor+")? + spin_dim(D, 5, "spinor-")?,
            ],
        ),
        (
            "E7",
            rs(E, 7)?,
            "so(12) adjoint + sp(1) + half-spinor ⊗ doublet",
            vec![
                rs(D, 6)?.dim() as u64,
                a1.dim() as u64,
                spin_dim(D, 6, "spinor+")? * a1_fund,
            ],
        ),
        (
            "E8",
            rs(E, 8)?,
            "so(16) adjoint + half-spinor",
            vec![rs(D, 8)?.dim() as u64, spin_dim(D, 8, "spinor+")?],
        ),
    ];
    Ok(rows
        .into_iter()
        .map(|(group, root_system, construction, summands)| ExceptionalRow {
            group: group.into(),
            construction: construction.into(),
            from_construction: summands.iter().sum(),
            summands,
            from_roots: root_system.dim() as u64,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicCell {
    pub label: String,
    pub dim: u64,
}

/// The 4×4 magic square in its compact form, rows and columns indexed by
/// R, C, H, O. Each dimension is read off a root system (plus torus factors
/// for the unitary entries).
pub fn magic_square_table() -> Result<[[MagicCell; 4]; 4]> {
    use CartanType::*;
    let cell = |label: &str, parts: &[(CartanType, usize)], torus: u64| -> Result<MagicCell> {
        let mut dim = torus;
        for &(k, r) in parts {
            dim += rs(k, r)?.dim() as u64;
        }
        Ok(MagicCell {
            label: label.into(),
            dim,
        })
    };
    let so3 = || cell("so(3)", &[(A, 1)], 0);
    let u3 = || cell("u(3)", &[(A, 2)], 1);
    let sp3 = || cell("sp(3)", &[(C, 3)], 0);
    let u6 = || cell("u(6)", &[(A, 5)], 1);
    let f4 = || cell("F4", &[(F, 4)], 0);
    let e6 = || cell("E6", &[(E, 6)], 0);
    let e7 = || cell("E7", &[(E, 7)], 0);
    Ok([
        [so3()?, u3()?, sp3()?, f4()?],
        [u3()?, cell("u(3)²", &[(A, 2), (A, 2)], 2)?, u6()?, e6()?],
        [sp3()?, u6()?, cell("so(12)", &[(D, 6)], 0)?, e7()?],
        [f4()?, e6()?, e7()?, cell("E8", &[(E, 8)], 0)?],
    ])
}

/// `dim G − Σ dim H_i`.
pub fn coset_dimension(g_dim: u64, h_dims: &[u64]) -> Result<u64> {
    let h: u64 = h_dims.iter().sum();
    g_dim
        .checked_sub(h)
        .ok_or_else(|| Error::domain(format!("subgroup dimension {h} exceeds {g_dim}")))
}

/// `(Σ_{k even} C(n,k), Σ_{k odd} C(n,k))`.
pub fn alternating_binomial_split(n: u64) -> Result<(BigCount, BigCount)> {
    if n == 0 {
        return Err(Error::domain("alternating binomial split needs n ≥ 1"));
    }
    let mut even = BigUint::zero();
    let mut odd = BigUint::zero();
    for k in 0..=n {
        let c = binomial(n, k)?;
        if k % 2 == 0 {
            even += c;
        } else {
            odd += c;
        }
    }
    Ok((even, odd))
}

/// One row of the exterior-power table of the Spin(10) spinor.
#[derive(Clone, Debug)]
pub struct ExteriorRow {
    pub k: usize,
    /// `(−1)^k C(16, k)`.
    pub su16: BigInt,
    pub spin10: VirtualRep,
    pub o9: VirtualRep,
    pub o8: VirtualRep,
}

/// Λᵏ of the D₅ spinor, decomposed under D₅ and restricted to B₄ and D₄.
pub struct ExteriorTable {
    pub d5: RootSystem,
    pub b4: RootSystem,
    pub d4: RootSystem,
    pub rows: Vec<ExteriorRow>,
}

pub fn exterior_power_table(ks: impl IntoIterator<Item = usize>) -> Result<ExteriorTable> {
    let d5 = rs(CartanType::D, 5)?;
    let b4 = rs(CartanType::B, 4)?;
    let d4 = rs(CartanType::D, 4)?;
    let to_b4 = Projection::preset(&d5, &b4)?;
    let to_d4 = Projection::preset(&b4, &d4)?;
    let spinor = irrep_character(&d5, &named_weight(&d5, "spinor16")?)?;
    let rows = ks
        .into_iter()
        .map(|k| {
            let ch = alt_power(&spinor, k)?;
            let spin10 = decompose(&ch, &d5)?;
            let o9 = branch(&spin10, &d5, &b4, &to_b4)?;
            let o8 = branch(&o9, &b4, &d4, &to_d4)?;
            let c = BigInt::from(binomial(16, k as u64)?);
            Ok(ExteriorRow {
                k,
                su16: if k % 2 == 0 { c } else { -c },
                spin10,
                o9,
                o8,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExteriorTable { d5, b4, d4, rows })
}

#[derive(Clone, Debug)]
pub struct OxidationCheck {
    pub name: &'static str,
    pub source_dim: u64,
    pub expected: Vec<i64>,
    pub branched: VirtualRep,
    pub actual: Vec<i64>,
}

impl OxidationCheck {
    pub fn holds(&self) -> bool {
        let mut e = self.expected.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        e == self.actual
    }
}

/// B₄ → D₄ restrictions of the graviton (44), three-form (84) and
/// gravitino (128).
pub fn oxidation_checks() -> Result<Vec<OxidationCheck>> {
    let b4 = rs(CartanType::B, 4)?;
    let d4 = rs(CartanType::D, 4)?;
    let p = Projection::preset(&b4, &d4)?;
    [
        ("graviton", vec![35, 8, 1]),
        ("3form", vec![56, 28]),
        ("gravitino", vec![56, 56, 8, 8]),
    ]
    .into_iter()
    .map(|(name, expected)| {
        let hw = named_weight(&b4, name)?;
        let source_dim = small(&weyl_dim(&b4, &hw)?)?;
        let branched = branch(&VirtualRep::irrep(&b4, hw)?, &b4, &d4, &p)?;
        let actual = branched.signed_dimension_list(&d4)?;
        Ok(OxidationCheck {
            name,
            source_dim,
            expected,
            branched,
            actual,
        })
    })
    .collect()
}

/// The eleven-dimensional multiplet as signed B₄ irreps:
/// graviton (+), gravitino (−), three-form (+).
pub fn sugra_triplet() -> Result<Vec<(&'static str, i64, u64)>> {
    let b4 = rs(CartanType::B, 4)?;
    [("graviton", 1), ("gravitino", -1), ("3form", 1)]
        .into_iter()
        .map(|(name, sign)| {
            let d = small(&weyl_dim(&b4, &named_weight(&b4, name)?)?)?;
            Ok((name, sign, d))
        })
        .collect()
}
