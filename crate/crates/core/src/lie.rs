//! Matrix Lie algebras inside gl(n, Q): derivation and stabilizer algebras,
//! gamma matrices built from octonion left multiplication, Lie closures,
//! point stabilizers and infinitesimal orbit ranks.
//!
//! Every subalgebra is obtained as an exact nullspace or an exact span; there
//! is no thresholding anywhere.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::composition::{self, StructureConstants, ThreeForm};
use crate::error::{Error, Result};
use crate::exact::{
    format_scalar, is_zero_vector, nullspace_basis, parse_scalar, rank, rank_of_vectors, scalar,
    ExactMatrix, Scalar, Subspace,
};

/// Linearly independent family of `n×n` matrices spanning a subspace of gl(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebra {
    ambient_dim: usize,
    basis: Vec<ExactMatrix>,
    closed_under_bracket: bool,
}

impl MatrixAlgebra {
    /// Span of `mats`, keeping an independent subfamily in order.
    pub fn span_of(ambient_dim: usize, mats: impl IntoIterator<Item = ExactMatrix>) -> Result<Self> {
        let mut space = Subspace::new(ambient_dim * ambient_dim);
        let mut basis = Vec::new();
        for m in mats {
            if m.rows() != ambient_dim || m.cols() != ambient_dim {
                return Err(Error::domain(format!(
                    "expected {ambient_dim}x{ambient_dim} matrix, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            if space.insert(m.entries()) {
                basis.push(m);
            }
        }
        Ok(Self {
            ambient_dim,
            basis,
            closed_under_bracket: false,
        })
    }

    /// Wraps an already independent basis; fails if it is dependent.
    pub fn from_basis(ambient_dim: usize, basis: Vec<ExactMatrix>) -> Result<Self> {
        let n = basis.len();
        let algebra = Self::span_of(ambient_dim, basis)?;
        if algebra.dim() != n {
            return Err(Error::domain("basis matrices are linearly dependent"));
        }
        Ok(algebra)
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            closed_under_bracket: true,
        }
    }

    fn tagged_closed(mut self) -> Self {
        self.closed_under_bracket = true;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// Whether the constructor that produced this algebra guarantees closure.
    pub fn is_tagged_closed(&self) -> bool {
        self.closed_under_bracket
    }

    fn subspace(&self) -> Subspace {
        let mut s = Subspace::new(self.ambient_dim * self.ambient_dim);
        for b in &self.basis {
            s.insert(b.entries());
        }
        s
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.subspace().contains(m.entries())
    }

    /// Rank of the flattened basis stack; equals `dim` by construction.
    pub fn stack_rank(&self) -> usize {
        rank_of_vectors(&self.basis.iter().map(|b| b.entries().to_vec()).collect::<Vec<_>>())
    }

    /// Checks `[X, Y] ∈ span` for every pair of basis elements.
    pub fn verify_bracket_closure(&self) -> bool {
        let space = self.subspace();
        self.basis.iter().enumerate().all(|(i, x)| {
            self.basis[i + 1..]
                .iter()
                .all(|y| space.contains(x.commutator(y).entries()))
        })
    }

    /// Same subspace of gl(n): the concatenated stack has the rank of each side.
    pub fn same_span(&self, other: &Self) -> bool {
        if self.ambient_dim != other.ambient_dim || self.dim() != other.dim() {
            return false;
        }
        let space = self.subspace();
        other.basis.iter().all(|b| space.contains(b.entries()))
    }

    /// Every basis element is skew-symmetric.
    pub fn is_skew(&self) -> bool {
        self.basis.iter().all(ExactMatrix::is_skew_symmetric)
    }

    /// `{ambient_dim, basis: [[row-major "p/q" strings], ...]}`.
    pub fn to_json(&self) -> Value {
        let basis: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|b| b.entries().iter().map(format_scalar).collect())
            .collect();
        json!({ "ambient_dim": self.ambient_dim, "basis": basis })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::domain(format!("matrix algebra JSON: {m}"));
        let n = value["ambient_dim"]
            .as_u64()
            .ok_or_else(|| bad("missing ambient_dim"))? as usize;
        let mats = value["basis"]
            .as_array()
            .ok_or_else(|| bad("missing basis"))?
            .iter()
            .map(|b| {
                let entries = b
                    .as_array()
                    .ok_or_else(|| bad("basis element"))?
                    .iter()
                    .map(|x| parse_scalar(x.as_str().ok_or_else(|| bad("entry"))?))
                    .collect::<Result<Vec<_>>>()?;
                ExactMatrix::new(n, n, entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_basis(n, mats)
    }
}

/// Sign convention of a gamma system: `γ_i² = +I` with symmetric `γ_i`, or
/// `γ_i² = −I` with skew-symmetric `γ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    Positive,
    Negative,
}

impl Signature {
    fn sign(self) -> i64 {
        match self {
            Signature::Positive => 1,
            Signature::Negative => -1,
        }
    }
}

/// Real matrices `γ_1..γ_n` with `γ_i γ_j + γ_j γ_i = ±2 δ_ij I`.
#[derive(Clone, Debug)]
pub struct GammaSystem {
    n: usize,
    rep_dim: usize,
    signature: Signature,
    gammas: Vec<ExactMatrix>,
}

impl GammaSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rep_dim(&self) -> usize {
        self.rep_dim
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn gammas(&self) -> &[ExactMatrix] {
        &self.gammas
    }

    /// Exhaustive check of the Clifford relations and of the symmetry type.
    pub fn verify(&self) -> bool {
        let id = ExactMatrix::identity(self.rep_dim);
        let two = id.scale(&scalar(2 * self.signature.sign()));
        let shape_ok = self.gammas.iter().all(|g| match self.signature {
            Signature::Positive => g.is_symmetric(),
            Signature::Negative => g.is_skew_symmetric(),
        });
        shape_ok
            && self.gammas.iter().enumerate().all(|(i, gi)| {
                self.gammas.iter().enumerate().skip(i).all(|(j, gj)| {
                    let ac = gi.anticommutator(gj);
                    if i == j {
                        ac == two
                    } else {
                        ac.is_zero()
                    }
                })
            })
    }
}

/// `L_1..L_7` on R⁸ = O, with `L_a(x) = e_a x`.
pub fn left_multiplication_operators() -> Vec<ExactMatrix> {
    (1..8)
        .map(|a| composition::left_multiplication(3, a).expect("octonion unit"))
        .collect()
}

/// Gamma matrices for `1 ≤ n ≤ 9`.
///
/// For `n ≤ 7` these are the octonion operators `L_1..L_n` on R⁸ (negative
/// signature; seven symmetric anticommuting involutions do not exist on R⁸).
/// For `n ∈ {8, 9}` they are symmetric on R¹⁶: `[[0, −L_a], [L_a, 0]]` for
/// `a = 1..7`, `[[0, I], [I, 0]]`, and for `n = 9` the product `γ_1⋯γ_8`.
pub fn build_gamma_system(n: usize) -> Result<GammaSystem> {
    if n == 0 {
        return Err(Error::domain("gamma system needs at least one generator"));
    }
    if n > 9 {
        return Err(Error::Unsupported(format!("gamma system with n = {n} > 9")));
    }
    let ls = left_multiplication_operators();
    let system = if n <= 7 {
        GammaSystem {
            n,
            rep_dim: 8,
            signature: Signature::Negative,
            gammas: ls[..n].to_vec(),
        }
    } else {
        let z = ExactMatrix::zeros(8, 8);
        let id = ExactMatrix::identity(8);
        let mut gammas: Vec<ExactMatrix> = ls
            .iter()
            .map(|l| ExactMatrix::block2(&z, &-l, l, &z))
            .collect();
        gammas.push(ExactMatrix::block2(&z, &id, &id, &z));
        if n == 9 {
            let product = gammas
                .iter()
                .skip(1)
                .fold(gammas[0].clone(), |acc, g| &acc * g);
            let square = &product * &product;
            let product = if square == ExactMatrix::identity(16) {
                product
            } else {
                return Err(Error::Internal("γ1⋯γ8 does not square to I".into()));
            };
            gammas.push(product);
        }
        GammaSystem {
            n,
            rep_dim: 16,
            signature: Signature::Positive,
            gammas,
        }
    };
    if !system.verify() {
        return Err(Error::Internal(format!("Clifford relations fail for n = {n}")));
    }
    Ok(system)
}

/// Span of the bivectors `γ_i γ_j`, `i < j`.
pub fn spin_algebra(g: &GammaSystem) -> Result<MatrixAlgebra> {
    let mut mats = Vec::new();
    for i in 0..g.n {
        for j in i + 1..g.n {
            mats.push(&g.gammas[i] * &g.gammas[j]);
        }
    }
    Ok(MatrixAlgebra::from_basis(g.rep_dim, mats)?.tagged_closed())
}

fn matrices_from_flat(n: usize, vectors: Vec<Vec<Scalar>>) -> Vec<ExactMatrix> {
    vectors
        .into_iter()
        .map(|v| ExactMatrix::new(n, n, v).expect("n² entries"))
        .collect()
}

/// Derivations `D(xy) = D(x)y + xD(y)` of the algebra with table `s`.
pub fn derivation_algebra(s: &StructureConstants) -> Result<MatrixAlgebra> {
    let n = s.dimension();
    let var = |row: usize, col: usize| row * n + col;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut eq = vec![Scalar::zero(); n * n];
                for l in 0..n {
                    let c = s.get(i, j, l);
                    if !c.is_zero() {
                        eq[var(k, l)] += c;
                    }
                }
                for m in 0..n {
                    let c = s.get(m, j, k);
                    if !c.is_zero() {
                        eq[var(m, i)] -= c;
                    }
                    let c = s.get(i, m, k);
                    if !c.is_zero() {
                        eq[var(m, j)] -= c;
                    }
                }
                if !is_zero_vector(&eq) {
                    rows.push(eq);
                }
            }
        }
    }
    let mats = solve_homogeneous(n * n, rows);
    Ok(MatrixAlgebra::from_basis(n, matrices_from_flat(n, mats))?.tagged_closed())
}

fn solve_homogeneous(unknowns: usize, rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return nullspace_basis(&ExactMatrix::zeros(0, unknowns));
    }
    nullspace_basis(&ExactMatrix::from_rows(rows).expect("rows of equal length"))
}

/// Infinitesimal stabilizer `{X ∈ gl(n) : X·φ = 0}` of a three-form.
pub fn form_stabilizer(phi: &ThreeForm, ambient_dim: usize) -> Result<MatrixAlgebra> {
    if phi.dimension() != ambient_dim {
        return Err(Error::domain(format!(
            "three-form on R^{} used in gl({ambient_dim})",
            phi.dimension()
        )));
    }
    let n = ambient_dim;
    let var = |row: usize, col: usize| row * n + col;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut eq = vec![Scalar::zero(); n * n];
                for m in 0..n {
                    eq[var(m, i)] += phi.get(m, j, k);
                    eq[var(m, j)] += phi.get(i, m, k);
                    eq[var(m, k)] += phi.get(i, j, m);
                }
                if !is_zero_vector(&eq) {
                    rows.push(eq);
                }
            }
        }
    }
    let mats = solve_homogeneous(n * n, rows);
    Ok(MatrixAlgebra::from_basis(n, matrices_from_flat(n, mats))?.tagged_closed())
}

/// Smallest bracket-closed subspace containing `gens`.
pub fn lie_closure(gens: &[ExactMatrix]) -> Result<MatrixAlgebra> {
    let Some(first) = gens.first() else {
        return Err(Error::domain("lie_closure needs at least one generator"));
    };
    let n = first.rows();
    if gens.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::domain("generators must be square of equal size"));
    }
    let mut space = Subspace::new(n * n);
    let mut basis: Vec<ExactMatrix> = Vec::new();
    for g in gens {
        if space.insert(g.entries()) {
            basis.push(g.clone());
        }
    }
    let mut frontier = 0;
    let mut rounds = 0;
    while frontier < basis.len() {
        rounds += 1;
        if rounds > n * n {
            return Err(Error::Internal("lie_closure did not saturate".into()));
        }
        let end = basis.len();
        for i in frontier..end {
            for j in 0..end {
                if i == j {
                    continue;
                }
                let br = basis[i].commutator(&basis[j]);
                if space.insert(br.entries()) {
                    basis.push(br);
                }
            }
        }
        frontier = end;
    }
    Ok(MatrixAlgebra::from_basis(n, basis)?.tagged_closed())
}

fn check_point(a: &MatrixAlgebra, v: &[Scalar]) -> Result<()> {
    if v.len() != a.ambient_dim {
        return Err(Error::domain(format!(
            "point has {} coordinates, algebra acts on R^{}",
            v.len(),
            a.ambient_dim
        )));
    }
    if is_zero_vector(v) {
        return Err(Error::domain("base point must be nonzero"));
    }
    Ok(())
}

fn orbit_map(a: &MatrixAlgebra, v: &[Scalar]) -> ExactMatrix {
    let cols: Vec<Vec<Scalar>> = a.basis.iter().map(|b| b.apply(v)).collect();
    ExactMatrix::from_columns(&cols, a.ambient_dim).expect("columns of ambient length")
}

/// Rank of `X ↦ X·v` on `span(a)`.
pub fn orbit_tangent_rank(a: &MatrixAlgebra, v: &[Scalar]) -> Result<usize> {
    check_point(a, v)?;
    if a.dim() == 0 {
        return Ok(0);
    }
    Ok(rank(&orbit_map(a, v)))
}

/// `{X ∈ span(a) : X·v = 0}`.
pub fn point_stabilizer(a: &MatrixAlgebra, v: &[Scalar]) -> Result<MatrixAlgebra> {
    check_point(a, v)?;
    if a.dim() == 0 {
        return Ok(MatrixAlgebra::empty(a.ambient_dim));
    }
    let coeffs = nullspace_basis(&orbit_map(a, v));
    let n = a.ambient_dim;
    let mats = coeffs.into_iter().map(|c| {
        c.iter()
            .zip(&a.basis)
            .filter(|(t, _)| !t.is_zero())
            .fold(ExactMatrix::zeros(n, n), |acc, (t, b)| &acc + &b.scale(t))
    });
    let stab = MatrixAlgebra::from_basis(n, mats.collect())?;
    Ok(if a.closed_under_bracket {
        stab.tagged_closed()
    } else {
        stab
    })
}

/// Classical families available as explicit real matrix algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFamily {
    /// so(n) on Rⁿ.
    So,
    /// su(n) acting on R²ⁿ = Cⁿ.
    SuRealified,
    /// sp(n) acting on R⁴ⁿ = Hⁿ.
    SpRealified,
}

impl std::str::FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "so" => Ok(Self::So),
            "su" | "su_realified" => Ok(Self::SuRealified),
            "sp" | "sp_realified" => Ok(Self::SpRealified),
            other => Err(Error::domain(format!("unsupported classical family `{other}`"))),
        }
    }
}

/// Complex matrix as (real part, imaginary part).
struct Complex {
    re: ExactMatrix,
    im: ExactMatrix,
}

impl Complex {
    fn zeros(n: usize) -> Self {
        Self {
            re: ExactMatrix::zeros(n, n),
            im: ExactMatrix::zeros(n, n),
        }
    }

    /// Realification `[[Re, −Im], [Im, Re]]` on `(Re z, Im z)`.
    fn realify(&self) -> ExactMatrix {
        ExactMatrix::block2(&self.re, &-&self.im, &self.im, &self.re)
    }
}

fn unit_pair(n: usize, j: usize, k: usize, a: i64, b: i64) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    m.set(j, k, scalar(a));
    if j != k {
        m.set(k, j, scalar(b));
    } else {
        m.set(j, j, scalar(a + b));
    }
    m
}

/// Real basis of u(n) as complex matrices, optionally traceless.
fn unitary_basis(n: usize, traceless: bool) -> Vec<Complex> {
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let mut c = Complex::zeros(n);
            c.re = unit_pair(n, j, k, 1, -1);
            out.push(c);
            let mut c = Complex::zeros(n);
            c.im = unit_pair(n, j, k, 1, 1);
            out.push(c);
        }
    }
    if traceless {
        for j in 0..n.saturating_sub(1) {
            let mut c = Complex::zeros(n);
            c.im.set(j, j, Scalar::one());
            c.im.set(j + 1, j + 1, scalar(-1));
            out.push(c);
        }
    } else {
        for j in 0..n {
            let mut c = Complex::zeros(n);
            c.im.set(j, j, Scalar::one());
            out.push(c);
        }
    }
    out
}

/// sp(n) inside u(2n): `[[P, −Q̄], [Q, P̄]]` with `P ∈ u(n)`, `Q` complex symmetric.
fn symplectic_basis(n: usize) -> Vec<Complex> {
    let z = ExactMatrix::zeros(n, n);
    let mut out: Vec<Complex> = unitary_basis(n, false)
        .into_iter()
        .map(|p| Complex {
            re: ExactMatrix::block2(&p.re, &z, &z, &p.re),
            im: ExactMatrix::block2(&p.im, &z, &z, &-&p.im),
        })
        .collect();
    for j in 0..n {
        for k in j..n {
            let sym = if j == k {
                let mut m = ExactMatrix::zeros(n, n);
                m.set(j, j, Scalar::one());
                m
            } else {
                unit_pair(n, j, k, 1, 1)
            };
            out.push(Complex {
                re: ExactMatrix::block2(&z, &-&sym, &sym, &z),
                im: ExactMatrix::zeros(2 * n, 2 * n),
            });
            out.push(Complex {
                re: ExactMatrix::zeros(2 * n, 2 * n),
                im: ExactMatrix::block2(&z, &sym, &sym, &z),
            });
        }
    }
    out
}

/// Explicit real basis of so(n), su(n) on R²ⁿ or sp(n) on R⁴ⁿ.
pub fn classical_algebra(family: ClassicalFamily, n: usize) -> Result<MatrixAlgebra> {
    let (ambient, mats): (usize, Vec<ExactMatrix>) = match family {
        ClassicalFamily::So if (1..=16).contains(&n) => {
            let mut mats = Vec::new();
            for j in 0..n {
                for k in j + 1..n {
                    mats.push(unit_pair(n, j, k, 1, -1));
                }
            }
            (n, mats)
        }
        ClassicalFamily::SuRealified if (1..=8).contains(&n) => (
            2 * n,
            unitary_basis(n, true).iter().map(Complex::realify).collect(),
        ),
        ClassicalFamily::SpRealified if (1..=4).contains(&n) => (
            4 * n,
            symplectic_basis(n).iter().map(Complex::realify).collect(),
        ),
        _ => {
            return Err(Error::domain(format!(
                "classical algebra {family:?}({n}) is outside the supported range"
            )))
        }
    };
    Ok(MatrixAlgebra::from_basis(ambient, mats)?.tagged_closed())
}

/// Restricts 8×8 matrices fixing `e_0` to the imaginary block (rows/cols 1..8).
pub fn restrict_to_imaginary(m: &ExactMatrix) -> ExactMatrix {
    let n = m.rows() - 1;
    let mut out = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, m.get(i + 1, j + 1).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::export_structure_constants;
    use crate::exact::unit_vector;

    #[test]
    fn left_multiplications_are_complex_structures() {
        let ls = left_multiplication_operators();
        assert_eq!(ls[0].apply(&unit_vector(8, 0)), unit_vector(8, 1));
        let minus_id = ExactMatrix::identity(8).scale(&scalar(-1));
        for (a, la) in ls.iter().enumerate() {
            assert!(la.is_skew_symmetric());
            assert_eq!(&(la * la), &minus_id);
            for lb in &ls[a + 1..] {
                assert!(la.anticommutator(lb).is_zero());
            }
        }
    }

    #[test]
    fn gamma_range() {
        assert!(build_gamma_system(0).is_err());
        assert!(matches!(build_gamma_system(10), Err(Error::Unsupported(_))));
        let g1 = build_gamma_system(1).unwrap();
        assert_eq!(g1.gammas().len(), 1);
        let g9 = build_gamma_system(9).unwrap();
        assert_eq!(g9.rep_dim(), 16);
        assert!(g9.gammas().iter().all(ExactMatrix::is_symmetric));
    }

    #[test]
    fn small_spin_algebras() {
        assert_eq!(spin_algebra(&build_gamma_system(2).unwrap()).unwrap().dim(), 1);
        let s7 = spin_algebra(&build_gamma_system(7).unwrap()).unwrap();
        assert_eq!(s7.dim(), 21);
        assert_eq!(s7.stack_rank(), 21);
    }

    #[test]
    fn derivations_of_small_algebras() {
        for (level, dim) in [(0, 0), (1, 0), (2, 3)] {
            let s = export_structure_constants(level).unwrap();
            assert_eq!(derivation_algebra(&s).unwrap().dim(), dim, "level {level}");
        }
    }

    #[test]
    fn three_form_stabilizers() {
        assert_eq!(form_stabilizer(&ThreeForm::volume3(), 3).unwrap().dim(), 8);
        assert_eq!(form_stabilizer(&ThreeForm::zero(7), 7).unwrap().dim(), 49);
        assert!(form_stabilizer(&ThreeForm::zero(7), 6).is_err());
    }

    #[test]
    fn closure_examples() {
        let so3 = classical_algebra(ClassicalFamily::So, 3).unwrap();
        assert_eq!(lie_closure(so3.basis()).unwrap().dim(), 3);
        let single = unit_pair(4, 0, 1, 1, 0);
        assert_eq!(lie_closure(&[single]).unwrap().dim(), 1);
        assert!(lie_closure(&[]).is_err());
    }

    #[test]
    fn empty_and_zero_point() {
        let empty = MatrixAlgebra::empty(4);
        assert_eq!(orbit_tangent_rank(&empty, &unit_vector(4, 0)).unwrap(), 0);
        let so4 = classical_algebra(ClassicalFamily::So, 4).unwrap();
        assert!(point_stabilizer(&so4, &vec![Scalar::zero(); 4]).is_err());
        assert!(orbit_tangent_rank(&so4, &unit_vector(3, 0)).is_err());
    }

    #[test]
    fn classical_dims() {
        use ClassicalFamily::*;
        assert_eq!(classical_algebra(So, 8).unwrap().dim(), 28);
        let su4 = classical_algebra(SuRealified, 4).unwrap();
        assert_eq!((su4.dim(), su4.ambient_dim()), (15, 8));
        let sp2 = classical_algebra(SpRealified, 2).unwrap();
        assert_eq!((sp2.dim(), sp2.ambient_dim()), (10, 8));
        assert!(classical_algebra(SpRealified, 5).is_err());
        assert!("gl".parse::<ClassicalFamily>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let su2 = classical_algebra(ClassicalFamily::SuRealified, 2).unwrap();
        let back = MatrixAlgebra::from_json(&su2.to_json()).unwrap();
        assert!(back.same_span(&su2));
        assert_eq!(back.basis(), su2.basis());
    }
}
