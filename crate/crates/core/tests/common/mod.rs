#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use lieindex::reps::IrrepLabel;
use lieindex::weight::{frac, int, Rational, Weight};
use lieindex::RootSystem;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Linear map given by the images of the ambient basis vectors.
#[derive(Clone, Debug)]
pub struct Element {
    pub columns: Vec<Weight>,
    /// Number of positive roots sent to negative roots.
    pub length: usize,
}

impl Element {
    pub fn apply(&self, x: &Weight) -> Weight {
        let n = x.len();
        let mut out = Weight::zero(n);
        for (i, col) in self.columns.iter().enumerate() {
            if !x[i].is_zero() {
                out = out.add_scaled(&x[i], col);
            }
        }
        out
    }
}

fn reflect(x: &Weight, root: &Weight) -> Weight {
    let c = int(2) * x.dot(root) / root.norm_sq();
    x.add_scaled(&-c, root)
}

fn is_positive(rs: &RootSystem, x: &Weight) -> bool {
    x.dot(rs.chamber()).is_positive()
}

/// Every element of the Weyl group, generated by the simple reflections and
/// identified by the image of the regular chamber vector.
pub fn weyl_group(rs: &RootSystem) -> Vec<Element> {
    let n = rs.ambient_rank();
    let identity: Vec<Weight> = (0..n).map(|i| Weight::unit(n, i)).collect();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut elems = Vec::new();
    seen.insert(rs.chamber().clone());
    queue.push_back(identity);
    while let Some(cols) = queue.pop_front() {
        for root in rs.simple_roots() {
            let next: Vec<Weight> = cols.iter().map(|c| reflect(c, root)).collect();
            let probe = Element {
                columns: next.clone(),
                length: 0,
            }
            .apply(rs.chamber());
            if seen.insert(probe) {
                queue.push_back(next);
            }
        }
        elems.push(cols);
    }
    elems
        .into_iter()
        .map(|columns| {
            let mut e = Element { columns, length: 0 };
            e.length = rs
                .positive_roots()
                .iter()
                .filter(|a| !is_positive(rs, &e.apply(a)))
                .count();
            e
        })
        .collect()
}

pub fn is_dominant_oracle(rs: &RootSystem, x: &Weight) -> bool {
    rs.positive_roots().iter().all(|a| !x.dot(a).is_negative())
}

/// The longest element.
pub fn longest(group: &[Element]) -> &Element {
    group.iter().max_by_key(|e| e.length).unwrap()
}

/// Dominant image and, for regular input, the sign of the unique element
/// reaching it.
pub fn dominant_by_enumeration(
    rs: &RootSystem,
    group: &[Element],
    x: &Weight,
) -> (Weight, Option<i8>) {
    let hits: Vec<(&Element, Weight)> = group
        .iter()
        .map(|g| (g, g.apply(x)))
        .filter(|(_, y)| is_dominant_oracle(rs, y))
        .collect();
    let dominant = hits[0].1.clone();
    assert!(
        hits.iter().all(|(_, y)| *y == dominant),
        "dominant image not unique"
    );
    let regular = rs.positive_roots().iter().all(|a| !x.dot(a).is_zero());
    let sign = regular.then(|| {
        assert_eq!(hits.len(), 1);
        if hits[0].0.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    });
    (dominant, sign)
}

/// Integer or half-odd-integer coordinates in a small window.
pub fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> Weight {
    if rng.gen_bool(0.5) {
        Weight::new((0..n).map(|_| int(rng.gen_range(-6..=6))).collect())
    } else {
        Weight::new(
            (0..n)
                .map(|_| frac(2 * rng.gen_range(-6..=6) + 1, 2))
                .collect(),
        )
    }
}

/// `sum k_i omega_i` with nonnegative labels of total at most `max_sum`.
pub fn random_dominant(rng: &mut ChaCha8Rng, rs: &RootSystem, max_sum: u32) -> Weight {
    let omega = rs.fundamental_weights();
    let mut budget = rng.gen_range(0..=max_sum);
    let mut w = Weight::zero(rs.ambient_rank());
    while budget > 0 {
        let i = rng.gen_range(0..omega.len());
        w = &w + &omega[i];
        budget -= 1;
    }
    w
}

pub fn random_irrep(rng: &mut ChaCha8Rng, rs: &RootSystem, max_sum: u32) -> IrrepLabel {
    IrrepLabel::new(rs.clone(), random_dominant(rng, rs, max_sum)).unwrap()
}

pub fn rational_weight(coords: &[(i64, i64)]) -> Weight {
    Weight::new(coords.iter().map(|&(n, d)| frac(n, d)).collect())
}

pub fn scale(w: &Weight, c: &Rational) -> Weight {
    w.scale(c)
}
