//! Restriction of representations along explicit linear maps of weight
//! coordinates.

use num_traits::{One, ToPrimitive};

use super::character::WeightMultiset;
use super::system::{CartanType, RootSystem, Weight};
use super::virtual_rep::{decompose, VirtualRep};
use crate::error::{Error, Result};
use crate::exact::{ratio, scalar, ExactMatrix, Scalar};

/// Linear map from source to target true orthogonal coordinates
/// (`target_dim × source_dim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    name: String,
    matrix: ExactMatrix,
}

impl Projection {
    pub fn new(name: impl Into<String>, matrix: ExactMatrix) -> Self {
        Self {
            name: name.into(),
            matrix,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// `D_n → B_{n−1}`: drop the last coordinate.
    pub fn drop_last(source_dim: usize) -> Self {
        let mut m = ExactMatrix::zeros(source_dim - 1, source_dim);
        for i in 0..source_dim - 1 {
            m.set(i, i, Scalar::one());
        }
        Self::new("drop-last", m)
    }

    pub fn identity(dim: usize) -> Self {
        Self::new("identity", ExactMatrix::identity(dim))
    }

    /// `D₈ → B₄`: the coordinate vector `e_i` of R⁸ goes to the `i`-th
    /// spinor weight `½(1, ±1, ±1, ±1)` of B₄, in lexicographic order. The
    /// D₈ vector then restricts to the B₄ spinor.
    pub fn spin_embedding_b4() -> Self {
        let mut spinors: Vec<[i64; 4]> = Vec::new();
        for bits in 0..8u32 {
            let s = |k: u32| if bits & (1 << (2 - k)) != 0 { 1 } else { -1 };
            spinors.push([1, s(0), s(1), s(2)]);
        }
        spinors.sort_unstable();
        let mut m = ExactMatrix::zeros(4, 8);
        for (col, s) in spinors.iter().enumerate() {
            for (row, &x) in s.iter().enumerate() {
                m.set(row, col, ratio(x, 2));
            }
        }
        Self::new("spin-embedding", m)
    }

    /// Preset for a source/target pair: D5→B4 drop-last, B4→D4 identity,
    /// D8→B4 spin embedding.
    pub fn preset(source: &RootSystem, target: &RootSystem) -> Result<Self> {
        use CartanType::*;
        match (source.kind(), source.rank(), target.kind(), target.rank()) {
            (D, n, B, m) if m + 1 == n => Ok(Self::drop_last(n)),
            (B, n, D, m) if n == m => Ok(Self::identity(n)),
            (D, 8, B, 4) => Ok(Self::spin_embedding_b4()),
            _ => Err(Error::InvalidProjection(format!(
                "no preset projection from {source} to {target}"
            ))),
        }
    }

    /// Image of a scaled source weight as a scaled target weight.
    pub fn apply(&self, w: &Weight, source: &RootSystem, target: &RootSystem) -> Result<Weight> {
        if w.len() != self.matrix.cols() || self.matrix.rows() != target.space_dim() {
            return Err(Error::InvalidProjection(format!(
                "{} maps R^{} → R^{}, used from {source} to {target}",
                self.name,
                self.matrix.cols(),
                self.matrix.rows()
            )));
        }
        let factor = ratio(target.scale(), source.scale());
        let v: Vec<Scalar> = w.coords().iter().map(|&c| scalar(c) * &factor).collect();
        let image = self.matrix.apply(&v);
        image
            .into_iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::InvalidProjection("coordinate overflow".into()))
                } else {
                    Err(Error::InvalidProjection(format!(
                        "{w:?} does not land on the {target} weight lattice"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Pushes a character through a projection.
pub fn project_character(
    ws: &WeightMultiset,
    source: &RootSystem,
    target: &RootSystem,
    projection: &Projection,
) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::new(target.space_dim());
    for (w, &c) in ws.iter() {
        let img = projection.apply(w, source, target)?;
        if !target.is_integral(&img) {
            return Err(Error::InvalidProjection(format!(
                "{img:?} is not an integral weight of {target}"
            )));
        }
        out.add_weight(img, c);
    }
    if !out.is_weyl_symmetric(target) {
        return Err(Error::InvalidProjection(format!(
            "projected character is not {target}-Weyl-symmetric"
        )));
    }
    Ok(out)
}

/// Restricts `rep` from `source` to `target` and decomposes.
pub fn branch(
    rep: &VirtualRep,
    source: &RootSystem,
    target: &RootSystem,
    projection: &Projection,
) -> Result<VirtualRep> {
    let ch = rep.character(source)?;
    decompose(&project_character(&ch, source, target, projection)?, target)
}

/// Highest weights of the two half-spin irreps of `D_n`: `½(1,…,1)` and
/// `½(1,…,1,−1)`.
pub fn half_spin_weights(d: &RootSystem) -> Result<(Weight, Weight)> {
    if d.kind() != CartanType::D {
        return Err(Error::domain(format!("{d} has no half-spin representations")));
    }
    let half = d.scale() / 2;
    let plus = Weight(vec![half; d.rank()]);
    let mut minus = plus.clone();
    *minus.0.last_mut().expect("rank ≥ 3") = -half;
    Ok((plus, minus))
}

/// `S⁺ − S⁻` of `g = D_n` restricted to `h` along `projection`.
pub fn kostant_multiplet(g: &RootSystem, h: &RootSystem, projection: &Projection) -> Result<VirtualRep> {
    let (plus, minus) = half_spin_weights(g)?;
    let rep = VirtualRep::new(
        g,
        [
            super::virtual_rep::Term {
                hw: plus,
                coeff: 1,
                charge: None,
            },
            super::virtual_rep::Term {
                hw: minus,
                coeff: -1,
                charge: None,
            },
        ],
    )?;
    branch(&rep, g, h, projection)
}
