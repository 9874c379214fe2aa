//! Irreducible representations by highest weight: dimensions, characters and
//! tensor-product decomposition.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weight::{int, Rational, Weight};

/// An irreducible representation `V_lambda` of the group with root system
/// `system`, labeled by a dominant integral highest weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepLabel {
    system: RootSystem,
    highest_weight: Weight,
}

impl IrrepLabel {
    pub fn new(system: RootSystem, highest_weight: Weight) -> Result<Self> {
        check_dominant_integral(&system, &highest_weight)?;
        Ok(IrrepLabel {
            system,
            highest_weight,
        })
    }

    pub fn trivial(system: RootSystem) -> Self {
        let n = system.ambient_rank();
        IrrepLabel {
            system,
            highest_weight: Weight::zero(n),
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn dim(&self) -> BigInt {
        weyl_dim_of(&self.system, &self.highest_weight)
            .expect("dominant integral weights have integral dimension")
    }
}

fn check_dominant_integral(system: &RootSystem, w: &Weight) -> Result<()> {
    system.check_weight(w)?;
    let ok = system
        .dynkin_labels(w)
        .iter()
        .all(|l| l.is_integer() && !l.is_negative());
    if ok {
        Ok(())
    } else {
        Err(Error::NotDominant {
            weight: w.clone(),
            system: system.label().to_string(),
        })
    }
}

/// Weights with positive integer multiplicities, ordered by weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset(BTreeMap<Weight, u64>);

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.0.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.0.iter().map(|(w, m)| (w, *m))
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for (w, k) in iter {
            m.insert(w, k);
        }
        m
    }
}

/// `prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`, required to be an
/// integer. `lambda` need only be dominant, not integral.
pub fn weyl_dim_of(system: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    system.check_weight(lambda)?;
    if !system.is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.clone(),
            system: system.label().to_string(),
        });
    }
    let rho = system.half_sum_positive_roots();
    let shifted = lambda + &rho;
    let value = system
        .positive_roots()
        .iter()
        .fold(Rational::one(), |acc, a| acc * shifted.dot(a) / rho.dot(a));
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegralDimension {
            weight: lambda.clone(),
            system: system.label().to_string(),
            value: value.to_string(),
        })
    }
}

pub fn weyl_dim(rep: &IrrepLabel) -> BigInt {
    rep.dim()
}

/// Dominant weights of `V_lambda` with their multiplicities, by Freudenthal's
/// recursion. Returned in order of increasing depth below `lambda`.
pub fn dominant_multiplicities(rep: &IrrepLabel) -> Vec<(Weight, u64)> {
    let rs = &rep.system;
    let lambda = &rep.highest_weight;
    let rho = rs.half_sum_positive_roots();

    // Dominant weights below lambda: closure under subtracting positive roots
    // while staying dominant.
    let mut found: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for a in rs.positive_roots() {
            let nu = &mu - a;
            if rs.is_dominant(&nu) && found.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut ordered: Vec<(Rational, Weight)> = found
        .iter()
        .map(|mu| (rs.height(&(lambda - mu)), mu.clone()))
        .collect();
    ordered.sort();

    let top = (lambda + &rho).norm_sq();
    let mut mult: HashMap<Weight, Rational> = HashMap::new();
    let mut out = Vec::with_capacity(ordered.len());
    for (_, mu) in ordered {
        let m = if &mu == lambda {
            Rational::one()
        } else {
            let mut rhs = Rational::zero();
            for a in rs.positive_roots() {
                let mut nu = &mu + a;
                loop {
                    let dom = rs.make_dominant(&nu).dominant;
                    let Some(m_nu) = mult.get(&dom) else { break };
                    rhs += m_nu * nu.dot(a);
                    nu = &nu + a;
                }
            }
            let denom = &top - (&mu + &rho).norm_sq();
            rhs * int(2) / denom
        };
        assert!(
            m.is_integer(),
            "Freudenthal produced non-integral multiplicity {m} at {mu}"
        );
        let mi = m.to_integer().to_u64().expect("multiplicity fits in u64");
        mult.insert(mu.clone(), m);
        out.push((mu, mi));
    }
    out
}

/// Full character of `V_lambda`: every weight with its multiplicity.
pub fn weight_multiplicities(rep: &IrrepLabel) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (mu, m) in dominant_multiplicities(rep) {
        for w in rep.system.orbit(&mu) {
            out.insert(w, m);
        }
    }
    out
}

/// Decomposes `V_a ⊗ V_b` into irreducibles by Klimyk's formula: every weight
/// `nu` of the smaller factor contributes `sign(w) V_{w(lambda + nu + rho) - rho}`.
/// Products of simple factors are decomposed factor by factor; torus
/// coordinates add.
pub fn tensor_decompose(a: &IrrepLabel, b: &IrrepLabel) -> Result<WeightMultiset> {
    if a.system != b.system {
        return Err(Error::SystemMismatch {
            left: a.system.label().to_string(),
            right: b.system.label().to_string(),
        });
    }
    let rs = &a.system;
    if rs.factors().len() == 1 && rs.torus_coords().is_empty() {
        return klimyk(a, b);
    }

    let n = rs.ambient_rank();
    let mut partial: Vec<(Weight, u64)> = {
        let mut base = Weight::zero(n).into_coords();
        for c in rs.torus_coords() {
            base[c] = &a.highest_weight[c] + &b.highest_weight[c];
        }
        vec![(Weight::new(base), 1)]
    };
    for (i, factor) in rs.factors().iter().enumerate() {
        let sub = rs.factor_system(i);
        let fa = IrrepLabel::new(sub.clone(), a.highest_weight.select(&factor.coords))?;
        let fb = IrrepLabel::new(sub, b.highest_weight.select(&factor.coords))?;
        let pieces = klimyk(&fa, &fb)?;
        let mut next = Vec::with_capacity(partial.len() * pieces.len());
        for (w, m) in &partial {
            for (piece, pm) in pieces.iter() {
                let mut coords = w.coords().to_vec();
                for (local, &global) in factor.coords.iter().enumerate() {
                    coords[global] = piece[local].clone();
                }
                next.push((Weight::new(coords), m * pm));
            }
        }
        partial = next;
    }
    Ok(partial.into_iter().collect())
}

fn klimyk(a: &IrrepLabel, b: &IrrepLabel) -> Result<WeightMultiset> {
    let rs = &a.system;
    let (big, small) = if a.dim() < b.dim() { (b, a) } else { (a, b) };
    let rho = rs.half_sum_positive_roots();
    let base = &big.highest_weight + &rho;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(small).iter() {
        let d = rs.make_dominant(&(&base + nu));
        if d.singular {
            continue;
        }
        let key = &d.dominant - &rho;
        *acc.entry(key).or_insert(0) += i64::from(d.sign) * m as i64;
    }
    let mut out = WeightMultiset::new();
    for (w, m) in acc {
        if m < 0 {
            return Err(Error::NegativeMultiplicity {
                weight: w,
                multiplicity: m,
            });
        }
        out.insert(w, m as u64);
    }
    Ok(out)
}

pub fn self_dual(rep: &IrrepLabel) -> bool {
    rep.system
        .dual_weight(&rep.highest_weight)
        .map(|d| d == rep.highest_weight)
        .unwrap_or(false)
}

/// Cartan component of the `k`-th symmetric power: highest weight `k * lambda`.
pub fn cartan_sym_power(rep: &IrrepLabel, k: u32) -> IrrepLabel {
    IrrepLabel {
        system: rep.system.clone(),
        highest_weight: rep.highest_weight.scale_int(i64::from(k)),
    }
}

/// Sum of `mult * dim` over a decomposition.
pub fn total_dim(system: &RootSystem, parts: &WeightMultiset) -> Result<BigInt> {
    parts.iter().try_fold(BigInt::zero(), |acc, (w, m)| {
        Ok(acc + weyl_dim_of(system, w)? * BigInt::from(m))
    })
}
