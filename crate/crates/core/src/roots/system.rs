//! Root systems of the simple types in orthogonal coordinates, Weyl group
//! data (exponents, orders, enumeration) and Cartan-matrix isomorphism.
//!
//! Coordinates are stored as integers multiplied by a per-system `scale`.
//! The scale is 2 unless the weight lattice needs a finer grid (A_n in the
//! sum-zero hyperplane, E₆ inside the E₈ coordinates), in which case it is
//! the smallest multiple of 2 making every fundamental weight integral.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{inverse, scalar, BigCount, ExactMatrix, Scalar};

/// Enumeration refuses groups whose predicted order exceeds this.
pub const WEYL_ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Weight in the scaled orthogonal coordinates of its root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn times(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &Weight) -> i64 {
        dot(&self.0, &other.0)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub coords: Weight,
    /// Coefficients in the simple-root basis.
    pub simple_coeffs: Vec<i64>,
    pub height: i64,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    scale: i64,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: ExactMatrix,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    /// `Σ_{α>0} 2α/(α,α)` times `coroot_denominator`, for integral heights.
    coroot_sum: Vec<i64>,
    coroot_denominator: i64,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

/// Simple roots with coordinates doubled (so half-integers are integral).
fn doubled_simple_roots(kind: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let chain = |n: usize, len: usize| -> Vec<Vec<i64>> {
        (0..len)
            .map(|i| {
                let mut v = unit(n, i, 2);
                v[i + 1] = -2;
                v
            })
            .collect()
    };
    let bad = || {
        Error::domain(format!(
            "no simple root system of type {kind}{rank}"
        ))
    };
    Ok(match kind {
        CartanType::A if rank >= 1 => chain(rank + 1, rank),
        CartanType::B if rank >= 2 => {
            let mut r = chain(rank, rank - 1);
            r.push(unit(rank, rank - 1, 2));
            r
        }
        CartanType::C if rank >= 2 => {
            let mut r = chain(rank, rank - 1);
            r.push(unit(rank, rank - 1, 4));
            r
        }
        CartanType::D if rank >= 3 => {
            let mut r = chain(rank, rank - 1);
            let mut last = unit(rank, rank - 1, 2);
            last[rank - 2] = 2;
            r.push(last);
            r
        }
        CartanType::E if (6..=8).contains(&rank) => {
            let mut r = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            let mut a2 = unit(8, 0, 2);
            a2[1] = 2;
            r.push(a2);
            for i in 0..rank - 2 {
                let mut v = unit(8, i + 1, 2);
                v[i] = -2;
                r.push(v);
            }
            r
        }
        CartanType::F if rank == 4 => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        CartanType::G if rank == 2 => vec![vec![2, -2, 0], vec![-4, 2, 2]],
        _ => return Err(bad()),
    })
}

/// Positive roots in simple-root coordinates, by the root-string algorithm:
/// `β + α_i` is a root iff `p − ⟨β, α_i∨⟩ > 0`, `p` the length of the
/// `α_i`-string below `β`.
fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i, 1)).collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
            let mut p = 0;
            let mut below = beta.clone();
            loop {
                below[i] -= 1;
                if seen.contains(&below) {
                    p += 1;
                } else {
                    break;
                }
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots
}

impl RootSystem {
    /// Standard realization of a simple type. Accepts `A_n (n ≥ 1)`,
    /// `B_n (n ≥ 2)`, `C_n (n ≥ 2)`, `D_n (n ≥ 3)`, `E_6..E_8`, `F_4`, `G_2`.
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let doubled = doubled_simple_roots(kind, rank)?;
        let cartan: Vec<Vec<i64>> = doubled
            .iter()
            .map(|a| {
                doubled
                    .iter()
                    .map(|b| 2 * dot(a, b) / dot(b, b))
                    .collect()
            })
            .collect();
        let cartan_m = ExactMatrix::from_i64(
            rank,
            rank,
            &cartan.iter().flatten().copied().collect::<Vec<_>>(),
        )?;
        let cartan_inverse = inverse(&cartan_m)?;
        // ω_i = Σ_k (C⁻¹)_{ik} α_k, first in doubled rational coordinates.
        let space = doubled[0].len();
        let fw_rational: Vec<Vec<Scalar>> = (0..rank)
            .map(|i| {
                (0..space)
                    .map(|c| {
                        (0..rank)
                            .map(|k| cartan_inverse.get(i, k) * scalar(doubled[k][c]))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let lcm = fw_rational
            .iter()
            .flatten()
            .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .to_i64()
            .ok_or_else(|| Error::Internal("weight denominator overflow".into()))?;
        let scale = 2 * lcm;
        let scaled = |v: &[i64]| Weight(v.iter().map(|x| x * lcm).collect());
        let simple_roots: Vec<Weight> = doubled.iter().map(|v| scaled(v)).collect();
        let fundamental_weights: Vec<Weight> = fw_rational
            .iter()
            .map(|v| {
                Weight(
                    v.iter()
                        .map(|x| (x * scalar(lcm)).to_integer().to_i64().expect("small"))
                        .collect(),
                )
            })
            .collect();

        let mut positive_roots: Vec<PositiveRoot> = positive_roots_from_cartan(&cartan)
            .into_iter()
            .map(|coeffs| {
                let coords = coeffs
                    .iter()
                    .zip(&simple_roots)
                    .fold(Weight::zero(space), |acc, (&c, a)| acc.add(&a.times(c)));
                PositiveRoot {
                    height: coeffs.iter().sum(),
                    simple_coeffs: coeffs,
                    coords,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| a.simple_coeffs.cmp(&b.simple_coeffs))
        });

        let sum = positive_roots
            .iter()
            .fold(Weight::zero(space), |acc, r| acc.add(&r.coords));
        if sum.0.iter().any(|c| c % 2 != 0) {
            return Err(Error::Internal("2ρ is not divisible by 2".into()));
        }
        let rho = Weight(sum.0.iter().map(|c| c / 2).collect());

        let coroot_denominator = positive_roots
            .iter()
            .map(|r| r.coords.dot(&r.coords))
            .fold(1i64, |acc, n| acc.lcm(&n));
        let coroot_sum = positive_roots.iter().fold(vec![0i64; space], |mut acc, r| {
            let f = 2 * coroot_denominator / r.coords.dot(&r.coords);
            for (a, c) in acc.iter_mut().zip(&r.coords.0) {
                *a += f * c;
            }
            acc
        });

        let rs = Self {
            kind,
            rank,
            scale,
            simple_roots,
            positive_roots,
            cartan,
            cartan_inverse,
            fundamental_weights,
            rho,
            coroot_sum,
            coroot_denominator,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let expected = match self.kind {
            CartanType::A => self.rank * (self.rank + 2),
            CartanType::B | CartanType::C => self.rank * (2 * self.rank + 1),
            CartanType::D => self.rank * (2 * self.rank - 1),
            CartanType::E => [78, 133, 248][self.rank - 6],
            CartanType::F => 52,
            CartanType::G => 14,
        };
        if self.dim() != expected {
            return Err(Error::Internal(format!(
                "{} has {} positive roots, expected dimension {expected}",
                self.label(),
                self.positive_roots.len()
            )));
        }
        if !self.reflection_closed() {
            return Err(Error::Internal(format!("{} not closed under reflections", self.label())));
        }
        Ok(())
    }

    /// Every simple reflection maps Φ⁺ into Φ⁺ ∪ −Φ⁺.
    pub fn reflection_closed(&self) -> bool {
        let all: std::collections::HashSet<&Weight> =
            self.positive_roots.iter().map(|r| &r.coords).collect();
        (0..self.rank).all(|i| {
            self.positive_roots.iter().all(|r| {
                let img = self.reflect(&r.coords, i);
                all.contains(&img) || all.contains(&img.times(-1))
            })
        })
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// Integer factor between stored coordinates and true coordinates.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Number of orthogonal coordinates.
    pub fn space_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// `C_ij = ⟨α_i, α_j∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Dimension of the Lie algebra, `2|Φ⁺| + rank`.
    pub fn dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.space_dim())
    }

    /// `⟨λ, α∨⟩ = 2(λ, α)/(α, α)`.
    pub fn coroot_pairing(&self, w: &Weight, root: &Weight) -> i64 {
        let num = 2 * w.dot(root);
        let den = root.dot(root);
        debug_assert_eq!(num % den, 0, "weight outside the weight lattice");
        num / den
    }

    /// Dynkin label `⟨λ, α_i∨⟩`.
    pub fn dynkin_label(&self, w: &Weight, i: usize) -> i64 {
        self.coroot_pairing(w, &self.simple_roots[i])
    }

    pub fn dynkin_labels(&self, w: &Weight) -> Vec<i64> {
        (0..self.rank).map(|i| self.dynkin_label(w, i)).collect()
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.rank).all(|i| self.dynkin_label(w, i) >= 0)
    }

    /// Whether `w` pairs integrally with every coroot.
    pub fn is_integral(&self, w: &Weight) -> bool {
        w.len() == self.space_dim()
            && self.simple_roots.iter().all(|a| (2 * w.dot(a)) % a.dot(a) == 0)
    }

    pub fn weight_from_dynkin(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::domain(format!(
                "{} needs {} Dynkin labels, got {}",
                self.label(),
                self.rank,
                labels.len()
            )));
        }
        Ok(labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(self.zero_weight(), |acc, (&a, w)| acc.add(&w.times(a))))
    }

    /// Weight from true (unscaled) orthogonal coordinates.
    pub fn weight_from_coords(&self, coords: &[Scalar]) -> Result<Weight> {
        if coords.len() != self.space_dim() {
            return Err(Error::domain(format!(
                "{} weights have {} coordinates, got {}",
                self.label(),
                self.space_dim(),
                coords.len()
            )));
        }
        let w = coords
            .iter()
            .map(|c| {
                let s = c * scalar(self.scale);
                if s.is_integer() {
                    s.to_integer().to_i64().ok_or_else(|| Error::domain("coordinate too large"))
                } else {
                    Err(Error::domain("coordinate off the weight grid"))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)?;
        if !self.is_integral(&w) {
            return Err(Error::domain("not an integral weight"));
        }
        Ok(w)
    }

    /// True orthogonal coordinates of a stored weight.
    pub fn true_coords(&self, w: &Weight) -> Vec<Scalar> {
        w.0.iter()
            .map(|&c| Scalar::new(c.into(), self.scale.into()))
            .collect()
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let p = self.dynkin_label(w, i);
        w.sub(&self.simple_roots[i].times(p))
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = (0..self.rank).find(|&i| self.dynkin_label(&w, i) < 0) {
            w = self.reflect(&w, i);
        }
        w
    }

    /// `2·ht(λ) = Σ_{α>0} ⟨λ, α∨⟩`.
    pub fn height2(&self, w: &Weight) -> i64 {
        let n = dot(&w.0, &self.coroot_sum);
        debug_assert_eq!(n % self.coroot_denominator, 0);
        n / self.coroot_denominator
    }

    /// Compares weights by height, then lexicographically on coordinates.
    pub fn height_order(&self, a: &Weight, b: &Weight) -> Ordering {
        self.height2(a)
            .cmp(&self.height2(b))
            .then_with(|| a.cmp(b))
    }

    /// Coefficients of `w` in the simple-root basis.
    pub fn simple_root_coords(&self, w: &Weight) -> Vec<Scalar> {
        let labels = self.dynkin_labels(w);
        (0..self.rank)
            .map(|k| {
                (0..self.rank)
                    .map(|i| scalar(labels[i]) * self.cartan_inverse.get(i, k))
                    .sum()
            })
            .collect()
    }

    /// `a ≥ b` in dominance order: `a − b` is a non-negative root combination.
    pub fn dominates(&self, a: &Weight, b: &Weight) -> bool {
        let d = a.sub(b);
        let coords = self.simple_root_coords(&d);
        coords.iter().all(|c| c.is_integer() && *c >= Scalar::zero())
            && self.root_span_contains(&d)
    }

    fn root_span_contains(&self, d: &Weight) -> bool {
        let coords = self.simple_root_coords(d);
        let back = coords.iter().zip(&self.simple_roots).fold(
            vec![Scalar::zero(); self.space_dim()],
            |mut acc, (c, a)| {
                for (x, &y) in acc.iter_mut().zip(&a.0) {
                    *x += c * scalar(y);
                }
                acc
            },
        );
        back.iter().zip(&d.0).all(|(x, &y)| *x == scalar(y))
    }

    /// Simple reflections as integer matrices on Dynkin labels:
    /// `s_i(λ)_j = λ_j − λ_i C_ij`.
    pub fn simple_reflection_matrices(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| {
                        (0..self.rank)
                            .map(|k| {
                                let id = i64::from(j == k);
                                if k == i {
                                    id - self.cartan[i][j]
                                } else {
                                    id
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Simple reflections as orthogonal matrices on the true coordinates.
    pub fn simple_reflections_orthogonal(&self) -> Vec<ExactMatrix> {
        let n = self.space_dim();
        self.simple_roots
            .iter()
            .map(|a| {
                let aa = scalar(a.dot(a));
                let mut m = ExactMatrix::identity(n);
                for r in 0..n {
                    for c in 0..n {
                        let v = m.get(r, c) - scalar(2 * a.0[r] * a.0[c]) / &aa;
                        m.set(r, c, v);
                    }
                }
                m
            })
            .collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            Some('F') => CartanType::F,
            Some('G') => CartanType::G,
            _ => return Err(Error::domain(format!("unknown root system `{s}`"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::domain(format!("bad rank in `{s}`")))?;
        RootSystem::new(kind, rank)
    }
}

/// Builds the standard realization of type `kind` and the given rank.
pub fn build_root_system(kind: CartanType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(kind, rank)
}

/// Exponents from the transpose of the height partition: `m` occurs
/// `n_m − n_{m+1}` times, `n_h` the number of positive roots of height `h`.
pub fn exponents(rs: &RootSystem) -> Vec<u64> {
    let max_h = rs.positive_roots.iter().map(|r| r.height).max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max_h + 2];
    for r in &rs.positive_roots {
        counts[r.height as usize] += 1;
    }
    let mut out = Vec::new();
    for m in 1..=max_h {
        for _ in 0..counts[m] - counts[m + 1] {
            out.push(m as u64);
        }
    }
    out
}

/// `|W| = Π (m_i + 1)`.
pub fn weyl_order(rs: &RootSystem) -> BigCount {
    exponents(rs)
        .into_iter()
        .fold(BigUint::one(), |acc, m| acc * (m + 1))
}

/// Counts the Weyl group by walking the orbit of ρ, a regular dominant
/// weight, under the simple reflections. Each orbit point other than ρ has
/// a canonical parent (reflect at its first negative Dynkin label), so the
/// walk is a tree traversal and needs no visited set.
pub fn weyl_enumerate(rs: &RootSystem) -> Result<BigCount> {
    let predicted = weyl_order(rs);
    if predicted > BigUint::from(WEYL_ENUMERATION_CAP) {
        return Err(Error::EnumerationCap {
            predicted: predicted.to_string(),
            cap: WEYL_ENUMERATION_CAP,
        });
    }
    const MAX_RANK: usize = 8;
    let r = rs.rank;
    if r > MAX_RANK {
        return Err(Error::Unsupported(format!("enumeration above rank {MAX_RANK}")));
    }
    let reflections = rs.simple_reflection_matrices();
    let apply = |m: &Vec<Vec<i64>>, x: &[i64; MAX_RANK]| -> [i64; MAX_RANK] {
        let mut y = [0i64; MAX_RANK];
        for (j, row) in m.iter().enumerate() {
            y[j] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    };
    let mut stack = vec![[1i64; MAX_RANK]];
    let mut count: u64 = 0;
    while let Some(x) = stack.pop() {
        count += 1;
        for (i, s) in reflections.iter().enumerate() {
            if x[i] <= 0 {
                continue;
            }
            let y = apply(s, &x);
            if (0..r).find(|&j| y[j] < 0) == Some(i) {
                stack.push(y);
            }
        }
    }
    Ok(BigUint::from(count))
}

/// Odd sphere dimensions `2m_i + 1`.
pub fn sphere_decomposition(rs: &RootSystem) -> Vec<u64> {
    exponents(rs).into_iter().map(|m| 2 * m + 1).collect()
}

/// `χ(G/H) = |W(G)| / |W(H)|` for an equal-rank subgroup `H`, given as its
/// simple factors plus `torus_rank` U(1) factors.
pub fn euler_characteristic_coset(
    g: &RootSystem,
    h_factors: &[&RootSystem],
    torus_rank: usize,
) -> Result<BigCount> {
    let h_rank: usize = h_factors.iter().map(|h| h.rank).sum::<usize>() + torus_rank;
    if h_rank != g.rank {
        return Err(Error::domain(format!(
            "equal rank required: rank {} vs {h_rank}",
            g.rank
        )));
    }
    let num = weyl_order(g);
    let den = h_factors
        .iter()
        .fold(BigUint::one(), |acc, h| acc * weyl_order(h));
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{num} not divisible by {den}")));
    }
    Ok(q)
}

/// Poincaré polynomial of an equal-rank coset `G/H`, coefficient of `t^i`
/// at index `i`: `Π_G (1 − t^{2d}) / Π_H (1 − t^{2d})` over the degrees
/// `d = m + 1`, with a factor `1 − t²` per U(1).
pub fn coset_poincare_polynomial(
    g: &RootSystem,
    h_factors: &[&RootSystem],
    torus_rank: usize,
) -> Result<Vec<i64>> {
    let h_rank: usize = h_factors.iter().map(|h| h.rank).sum::<usize>() + torus_rank;
    if h_rank != g.rank {
        return Err(Error::domain(format!(
            "equal rank required: rank {} vs {h_rank}",
            g.rank
        )));
    }
    let factor = |d: u64| {
        let mut f = vec![0i64; 2 * d as usize + 1];
        f[0] = 1;
        f[2 * d as usize] = -1;
        f
    };
    let mut num = vec![1i64];
    for m in exponents(g) {
        num = poly_mul(&num, &factor(m + 1));
    }
    let mut divisors: Vec<u64> = h_factors
        .iter()
        .flat_map(|h| exponents(h).into_iter().map(|m| m + 1))
        .collect();
    divisors.extend(std::iter::repeat_n(1, torus_rank));
    for d in divisors {
        num = poly_div_exact(&num, &factor(d))
            .ok_or_else(|| Error::Internal(format!("1 − t^{} does not divide", 2 * d)))?;
    }
    Ok(num)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a polynomial with constant term 1; `None` if a remainder is
/// left.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    debug_assert_eq!(b[0], 1);
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - b.len() + 1];
    for i in 0..q.len() {
        let c = rem[i];
        q[i] = c;
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= c * y;
        }
    }
    rem.iter().all(|&x| x == 0).then_some(q)
}

/// Cartan matrices agree up to a simultaneous permutation of rows and columns.
pub fn root_system_isomorphic(a: &RootSystem, b: &RootSystem) -> bool {
    cartan_isomorphic(&a.cartan, &b.cartan)
}

pub fn cartan_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] {
                continue;
            }
            let consistent = a[i][i] == b[j][j]
                && perm
                    .iter()
                    .enumerate()
                    .all(|(k, &pk)| a[i][k] == b[j][pk] && a[k][i] == b[pk][j]);
            if consistent {
                used[j] = true;
                perm.push(j);
                if extend(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[j] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}
