//! Weight multisets (characters), the Weyl dimension formula, Freudenthal
//! multiplicities, exterior powers and tensor products.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::system::{RootSystem, Weight};
use crate::error::{Error, Result};

/// Map from weight to (possibly negative) multiplicity; zero entries are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    space_dim: usize,
    entries: BTreeMap<Weight, i64>,
}

impl WeightMultiset {
    pub fn new(space_dim: usize) -> Self {
        Self {
            space_dim,
            entries: BTreeMap::new(),
        }
    }

    /// The trivial character `{0 ↦ 1}`.
    pub fn trivial(space_dim: usize) -> Self {
        let mut m = Self::new(space_dim);
        m.add_weight(Weight::zero(space_dim), 1);
        m
    }

    pub fn from_entries(
        space_dim: usize,
        entries: impl IntoIterator<Item = (Weight, i64)>,
    ) -> Result<Self> {
        let mut m = Self::new(space_dim);
        for (w, c) in entries {
            if w.len() != space_dim {
                return Err(Error::domain("weight length mismatch"));
            }
            m.add_weight(w, c);
        }
        Ok(m)
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn add_weight(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed total dimension `Σ multiplicities`.
    pub fn dim(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(|&c| c > 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::new(self.space_dim);
        if k != 0 {
            for (w, c) in &self.entries {
                out.entries.insert(w.clone(), c * k);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (w, c) in &other.entries {
            self.add_weight(w.clone(), c * k);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    /// Multiplicities agree on every Weyl orbit.
    pub fn is_weyl_symmetric(&self, rs: &RootSystem) -> bool {
        self.entries.iter().all(|(w, &c)| {
            (0..rs.rank()).all(|i| self.get(&rs.reflect(w, i)) == c)
        })
    }
}

/// Weyl dimension formula `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dim(rs: &RootSystem, hw: &Weight) -> Result<BigUint> {
    check_dominant(rs, hw)?;
    let shifted = hw.add(rs.rho());
    let (num, den) = rs
        .positive_roots()
        .iter()
        .fold((BigUint::from(1u32), BigUint::from(1u32)), |(n, d), r| {
            let a = shifted.dot(&r.coords);
            let b = rs.rho().dot(&r.coords);
            (n * a as u64, d * b as u64)
        });
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal("Weyl dimension is not integral".into()));
    }
    Ok(q)
}

fn check_dominant(rs: &RootSystem, hw: &Weight) -> Result<()> {
    if hw.len() != rs.space_dim() || !rs.is_integral(hw) {
        return Err(Error::domain(format!("{hw:?} is not a weight of {rs}")));
    }
    if !rs.is_dominant(hw) {
        return Err(Error::domain(format!(
            "{hw:?} is not dominant for {rs} (Dynkin labels {:?})",
            rs.dynkin_labels(hw)
        )));
    }
    Ok(())
}

/// Dominant weights of the irrep with highest weight `hw`, by descending
/// height. These are the dominant `μ` with `hw − μ` a non-negative root
/// combination, reached from `hw` by subtracting positive roots.
pub fn dominant_weights(rs: &RootSystem, hw: &Weight) -> Vec<Weight> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(hw.clone());
    let mut queue = vec![hw.clone()];
    let mut next = 0;
    while next < queue.len() {
        let mu = queue[next].clone();
        next += 1;
        for r in rs.positive_roots() {
            let nu = mu.sub(&r.coords);
            if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push(nu);
            }
        }
    }
    queue.sort_by(|a, b| rs.height_order(b, a));
    queue
}

/// Freudenthal multiplicities of the dominant weights of `V(hw)`.
pub fn dominant_multiplicities(rs: &RootSystem, hw: &Weight) -> Result<Vec<(Weight, i64)>> {
    check_dominant(rs, hw)?;
    let order = dominant_weights(rs, hw);
    let rho = rs.rho();
    let top = hw.add(rho);
    let top_norm = top.dot(&top);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    let mut out = Vec::with_capacity(order.len());
    for mu in order {
        let m = if mu == *hw {
            1
        } else {
            let mut sum: i64 = 0;
            for r in rs.positive_roots() {
                let mut k = 1;
                loop {
                    let nu = mu.add(&r.coords.times(k));
                    let Some(&m_nu) = mult.get(&rs.dominant_conjugate(&nu)) else {
                        break;
                    };
                    sum += nu.dot(&r.coords) * m_nu;
                    k += 1;
                }
            }
            let shifted = mu.add(rho);
            let den = top_norm - shifted.dot(&shifted);
            if den <= 0 || (2 * sum) % den != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal recursion not integral at {mu:?}"
                )));
            }
            2 * sum / den
        };
        mult.insert(mu.clone(), m);
        if m != 0 {
            out.push((mu, m));
        }
    }
    Ok(out)
}

/// Weyl orbit of a dominant weight. Every non-dominant point has a canonical
/// parent (reflect at its first negative Dynkin label), so the orbit is
/// walked as a tree.
pub fn weyl_orbit(rs: &RootSystem, dominant: &Weight) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut stack = vec![dominant.clone()];
    while let Some(x) = stack.pop() {
        for i in 0..rs.rank() {
            if rs.dynkin_label(&x, i) <= 0 {
                continue;
            }
            let y = rs.reflect(&x, i);
            if (0..rs.rank()).find(|&j| rs.dynkin_label(&y, j) < 0) == Some(i) {
                stack.push(y);
            }
        }
        out.push(x);
    }
    out
}

type CharacterCache = RwLock<HashMap<(String, Weight), Arc<WeightMultiset>>>;

fn cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Full character of the irrep with highest weight `hw`, memoized per
/// `(root system, highest weight)`.
pub fn irrep_character(rs: &RootSystem, hw: &Weight) -> Result<Arc<WeightMultiset>> {
    let key = (rs.label(), hw.clone());
    if let Some(hit) = cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let mut ch = WeightMultiset::new(rs.space_dim());
    for (mu, m) in dominant_multiplicities(rs, hw)? {
        for w in weyl_orbit(rs, &mu) {
            ch.entries.insert(w, m);
        }
    }
    let ch = Arc::new(ch);
    let mut guard = cache().write().expect("cache lock");
    Ok(guard.entry(key).or_insert(ch).clone())
}

fn binomial_i64(n: i64, k: i64) -> Option<i64> {
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `k`-th exterior power of a genuine character.
pub fn alt_power(ws: &WeightMultiset, k: usize) -> Result<WeightMultiset> {
    if ws.entries.values().any(|&c| c < 0) {
        return Err(Error::domain("exterior power of a virtual character"));
    }
    let n = ws.space_dim;
    let mut levels: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); k + 1];
    levels[0].insert(Weight::zero(n), 1);
    let overflow = || Error::Internal("multiplicity overflow in exterior power".into());
    for (w, &m) in &ws.entries {
        for t in (1..=k).rev() {
            for j in 1..=(m as usize).min(t) {
                let c = binomial_i64(m, j as i64).ok_or_else(overflow)?;
                let shift = w.times(j as i64);
                let additions: Vec<(Weight, i64)> = levels[t - j]
                    .iter()
                    .map(|(v, &cv)| Ok((v.add(&shift), cv.checked_mul(c).ok_or_else(overflow)?)))
                    .collect::<Result<_>>()?;
                for (v, c) in additions {
                    *levels[t].entry(v).or_insert(0) += c;
                }
            }
        }
    }
    let mut out = WeightMultiset::new(n);
    for (w, c) in std::mem::take(&mut levels[k]) {
        out.add_weight(w, c);
    }
    Ok(out)
}

/// Multiset convolution: pairwise weight sums with multiplicity products.
pub fn tensor_product(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    if a.space_dim != b.space_dim {
        return Err(Error::domain("tensor product of characters in different spaces"));
    }
    let mut out = WeightMultiset::new(a.space_dim);
    for (wa, ca) in &a.entries {
        for (wb, cb) in &b.entries {
            out.add_weight(wa.add(wb), ca * cb);
        }
    }
    Ok(out)
}

/// Signed big-integer dimension.
pub fn signed_dim(ws: &WeightMultiset) -> BigInt {
    ws.entries.values().map(|&c| BigInt::from(c)).sum()
}
