//! Root systems of the classified types in orthogonal coordinates, and the
//! Weyl-group operations the rest of the crate is built on.
//!
//! Every system carries a fixed regular vector (its chamber selector); the
//! positive roots are the roots pairing positively with it and the simple
//! roots are the positive roots that are not sums of two positive roots.
//! Chambers are fixed as follows:
//!
//! | type  | ambient | regular vector             |
//! |-------|---------|----------------------------|
//! | A_n   | n + 1   | (n, n-1, ..., 0)           |
//! | B_n   | n       | (n, ..., 1)                |
//! | C_n   | n       | (n, ..., 1)                |
//! | D_n   | n       | (n-1, ..., 0)              |
//! | E6    | 8       | (1,2,4,8,16,12,12,-12)     |
//! | E7    | 8       | (64,32,16,8,4,2,1,0)       |
//! | E8    | 8       | (23,6,5,4,3,2,1,0)         |
//! | F4    | 4       | (11,5,3,1)                 |
//! | G2    | 3       | (5,2,0)                    |
//!
//! E7 is realized inside the hyperplane `sum x_i = 0` of R^8 as the roots
//! `e_i - e_j` together with `1/2 (±1, ..., ±1)` having exactly four minus
//! signs, so that its A7 subsystem sits on the coordinate roots. E6 is the set
//! of E8 roots with `x_6 = x_7 = -x_8`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{int, Rational, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::E6 => 6,
            SimpleType::E7 => 7,
            SimpleType::E8 => 8,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    /// Number of orthogonal coordinates the type is realized in.
    pub fn ambient_dim(self) -> usize {
        match self {
            SimpleType::A(n) => n + 1,
            SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::E6 | SimpleType::E7 | SimpleType::E8 => 8,
            SimpleType::F4 => 4,
            SimpleType::G2 => 3,
        }
    }

    /// Bounds for a standalone system.
    fn check_standalone(self) -> Result<()> {
        let min = match self {
            SimpleType::A(_) => 1,
            SimpleType::B(_) | SimpleType::C(_) => 2,
            SimpleType::D(_) => 3,
            _ => 0,
        };
        self.check_min(min, "standalone")
    }

    /// Bounds for a factor of a product: low-rank coincidences such as
    /// D2 = A1 x A1 or B1 = C1 = A1 are allowed there.
    fn check_factor(self) -> Result<()> {
        let min = match self {
            SimpleType::D(_) => 2,
            _ => 1,
        };
        self.check_min(min, "product factor")
    }

    fn check_min(self, min: usize, what: &str) -> Result<()> {
        if self.rank() < min {
            return Err(Error::UnsupportedType {
                label: self.to_string(),
                reason: format!("{what} requires rank >= {min}"),
            });
        }
        Ok(())
    }

    fn roots(self) -> Vec<Weight> {
        let n = self.ambient_dim();
        let mut out = Vec::new();
        let pm_pairs = |out: &mut Vec<Weight>| {
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![0; n];
                        v[i] = si;
                        v[j] = sj;
                        out.push(Weight::from_ints(&v));
                    }
                }
            }
        };
        let half_signs = |filter: &dyn Fn(&[i64]) -> bool, out: &mut Vec<Weight>| {
            for mask in 0u32..(1 << n) {
                let v: Vec<i64> = (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                if filter(&v) {
                    out.push(Weight::halves(&v));
                }
            }
        };
        match self {
            SimpleType::A(_) | SimpleType::E7 => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let mut v = vec![0; n];
                            v[i] = 1;
                            v[j] = -1;
                            out.push(Weight::from_ints(&v));
                        }
                    }
                }
                if self == SimpleType::E7 {
                    half_signs(&|v| v.iter().filter(|&&x| x < 0).count() == 4, &mut out);
                }
            }
            SimpleType::B(_) | SimpleType::C(_) => {
                pm_pairs(&mut out);
                let len = if matches!(self, SimpleType::C(_)) {
                    2
                } else {
                    1
                };
                for i in 0..n {
                    for s in [len, -len] {
                        let mut v = vec![0; n];
                        v[i] = s;
                        out.push(Weight::from_ints(&v));
                    }
                }
            }
            SimpleType::D(_) => pm_pairs(&mut out),
            SimpleType::E8 | SimpleType::E6 => {
                pm_pairs(&mut out);
                half_signs(&|v| v.iter().filter(|&&x| x < 0).count() % 2 == 0, &mut out);
                if self == SimpleType::E6 {
                    out.retain(|r| r[5] == r[6] && r[6] == -&r[7]);
                }
            }
            SimpleType::F4 => {
                pm_pairs(&mut out);
                for i in 0..n {
                    for s in [1, -1] {
                        let mut v = vec![0; n];
                        v[i] = s;
                        out.push(Weight::from_ints(&v));
                    }
                }
                half_signs(&|_| true, &mut out);
            }
            SimpleType::G2 => {
                for i in 0..3 {
                    for j in 0..3 {
                        if i == j {
                            continue;
                        }
                        let mut v = vec![0; 3];
                        v[i] = 1;
                        v[j] = -1;
                        out.push(Weight::from_ints(&v));
                        let k = 3 - i - j;
                        let mut long = vec![-1; 3];
                        long[k] = 2;
                        let neg: Vec<i64> = long.iter().map(|x| -x).collect();
                        out.push(Weight::from_ints(&long));
                        out.push(Weight::from_ints(&neg));
                    }
                }
                out.sort();
                out.dedup();
            }
        }
        out
    }

    fn regular_vector(self) -> Weight {
        let n = self.ambient_dim() as i64;
        match self {
            SimpleType::A(_) | SimpleType::D(_) => {
                Weight::from_ints(&(0..n).map(|i| n - 1 - i).collect::<Vec<_>>())
            }
            SimpleType::B(_) | SimpleType::C(_) => {
                Weight::from_ints(&(0..n).map(|i| n - i).collect::<Vec<_>>())
            }
            SimpleType::E6 => Weight::from_ints(&[1, 2, 4, 8, 16, 12, 12, -12]),
            SimpleType::E7 => Weight::from_ints(&[64, 32, 16, 8, 4, 2, 1, 0]),
            SimpleType::E8 => Weight::from_ints(&[23, 6, 5, 4, 3, 2, 1, 0]),
            SimpleType::F4 => Weight::from_ints(&[11, 5, 3, 1]),
            SimpleType::G2 => Weight::from_ints(&[5, 2, 0]),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::E6 => f.write_str("E6"),
            SimpleType::E7 => f.write_str("E7"),
            SimpleType::E8 => f.write_str("E8"),
            SimpleType::F4 => f.write_str("F4"),
            SimpleType::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::UnsupportedType {
            label: s.to_string(),
            reason: reason.to_string(),
        };
        let upper = s.to_ascii_uppercase();
        match upper.as_str() {
            "E6" => return Ok(SimpleType::E6),
            "E7" => return Ok(SimpleType::E7),
            "E8" => return Ok(SimpleType::E8),
            "F4" => return Ok(SimpleType::F4),
            "G2" => return Ok(SimpleType::G2),
            _ => {}
        }
        let mut chars = upper.chars();
        let head = chars.next().ok_or_else(|| bad("empty type label"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| bad("expected a family letter followed by a rank, e.g. D8"))?;
        match head {
            'A' => Ok(SimpleType::A(rank)),
            'B' => Ok(SimpleType::B(rank)),
            'C' => Ok(SimpleType::C(rank)),
            'D' => Ok(SimpleType::D(rank)),
            'E' | 'F' | 'G' => Err(bad("exceptional types are E6, E7, E8, F4 and G2")),
            _ => Err(bad("unknown family")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    Simple(SimpleType),
    /// Factors in order, plus the number of torus coordinates carrying no roots.
    Product(Vec<SimpleType>, usize),
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::Simple(t) => write!(f, "{t}"),
            TypeLabel::Product(ts, torus) => {
                let mut parts: Vec<String> = ts.iter().map(ToString::to_string).collect();
                if *torus > 0 {
                    parts.push(format!("T{torus}"));
                }
                f.write_str(&parts.join("x"))
            }
        }
    }
}

/// One simple factor of a (possibly product) system, with the ambient
/// coordinates it occupies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: SimpleType,
    pub coords: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    label: TypeLabel,
    ambient_rank: usize,
    factors: Vec<Factor>,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Weight>,
    chamber: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantResult {
    pub dominant: Weight,
    /// `(-1)^l(w)`; fixed to `+1` when `singular`.
    pub sign: i8,
    pub singular: bool,
    /// Number of simple reflections applied.
    pub reflections: usize,
}

fn coroot(alpha: &Weight) -> Weight {
    let c = int(2) / alpha.norm_sq();
    alpha.scale(&c)
}

impl RootSystem {
    /// Builds a simple root system in its own coordinates.
    pub fn build(kind: SimpleType) -> Result<RootSystem> {
        kind.check_standalone()?;
        let n = kind.ambient_dim();
        Ok(Self::assemble(
            TypeLabel::Simple(kind),
            n,
            vec![Factor {
                kind,
                coords: (0..n).collect(),
            }],
        ))
    }

    /// Builds a product system inside `ambient_rank` shared coordinates. Each
    /// factor lists the ambient coordinates it occupies, in its own coordinate
    /// order; coordinates claimed by no factor are torus directions.
    pub fn product(
        ambient_rank: usize,
        factors: Vec<(SimpleType, Vec<usize>)>,
    ) -> Result<RootSystem> {
        let mut used = vec![false; ambient_rank];
        for (kind, coords) in &factors {
            kind.check_factor()?;
            if coords.len() != kind.ambient_dim() {
                return Err(Error::UnsupportedType {
                    label: kind.to_string(),
                    reason: format!(
                        "needs {} coordinates, got {}",
                        kind.ambient_dim(),
                        coords.len()
                    ),
                });
            }
            for &c in coords {
                if c >= ambient_rank || used[c] {
                    return Err(Error::UnsupportedType {
                        label: kind.to_string(),
                        reason: format!("coordinate {c} out of range or shared"),
                    });
                }
                used[c] = true;
            }
        }
        let torus = used.iter().filter(|u| !**u).count();
        let label = TypeLabel::Product(factors.iter().map(|f| f.0).collect(), torus);
        let factors = factors
            .into_iter()
            .map(|(kind, coords)| Factor { kind, coords })
            .collect();
        Ok(Self::assemble(label, ambient_rank, factors))
    }

    fn assemble(label: TypeLabel, ambient_rank: usize, factors: Vec<Factor>) -> RootSystem {
        let mut positive_roots = Vec::new();
        let mut simple_roots = Vec::new();
        let mut chamber = Weight::zero(ambient_rank);
        for factor in &factors {
            let embed = |w: &Weight| {
                let mut v = vec![Rational::zero(); ambient_rank];
                for (local, &global) in factor.coords.iter().enumerate() {
                    v[global] = w[local].clone();
                }
                Weight::new(v)
            };
            let regular = factor.kind.regular_vector();
            let pos: Vec<Weight> = factor
                .kind
                .roots()
                .into_iter()
                .filter(|r| {
                    let p = r.dot(&regular);
                    assert!(
                        !p.is_zero(),
                        "chamber selector of {} is not regular",
                        factor.kind
                    );
                    p.is_positive()
                })
                .collect();
            let pos_set: HashSet<&Weight> = pos.iter().collect();
            let simple: Vec<Weight> = pos
                .iter()
                .filter(|r| !pos.iter().any(|a| a != *r && pos_set.contains(&(*r - a))))
                .cloned()
                .collect();
            positive_roots.extend(pos.iter().map(embed));
            simple_roots.extend(simple.iter().map(embed));
            chamber = &chamber + &embed(&regular);
        }
        let simple_coroots = simple_roots.iter().map(coroot).collect();
        RootSystem {
            label,
            ambient_rank,
            factors,
            positive_roots,
            simple_roots,
            simple_coroots,
            chamber,
        }
    }

    pub fn label(&self) -> &TypeLabel {
        &self.label
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Weight] {
        &self.simple_coroots
    }

    /// The regular vector selecting the fundamental chamber.
    pub fn chamber(&self) -> &Weight {
        &self.chamber
    }

    /// Ambient coordinates on which no root is supported.
    pub fn torus_coords(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient_rank];
        for f in &self.factors {
            for &c in &f.coords {
                used[c] = true;
            }
        }
        (0..self.ambient_rank).filter(|&c| !used[c]).collect()
    }

    /// The factor as a standalone system in its own coordinates.
    pub fn factor_system(&self, i: usize) -> RootSystem {
        let f = &self.factors[i];
        let n = f.kind.ambient_dim();
        Self::assemble(
            TypeLabel::Simple(f.kind),
            n,
            vec![Factor {
                kind: f.kind,
                coords: (0..n).collect(),
            }],
        )
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        w.check_len(self.ambient_rank)
    }

    pub fn half_sum_positive_roots(&self) -> Weight {
        let sum = self
            .positive_roots
            .iter()
            .fold(Weight::zero(self.ambient_rank), |acc, r| &acc + r);
        sum.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Half-sum of the positive coroots; pairs to 1 with every simple root.
    pub fn half_sum_positive_coroots(&self) -> Weight {
        let sum = self
            .positive_roots
            .iter()
            .fold(Weight::zero(self.ambient_rank), |acc, r| &acc + &coroot(r));
        sum.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Whether `x` is a root (positive or negative).
    pub fn is_root(&self, x: &Weight) -> bool {
        self.positive_roots.iter().any(|r| r == x || &-r == x)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simple_roots.iter().all(|a| !w.dot(a).is_negative())
    }

    pub fn is_strictly_dominant(&self, w: &Weight) -> bool {
        self.simple_roots.iter().all(|a| w.dot(a).is_positive())
    }

    /// Coordinates `<w, alpha_i^vee>` with respect to the simple coroots.
    pub fn dynkin_labels(&self, w: &Weight) -> Vec<Rational> {
        self.simple_coroots.iter().map(|c| w.dot(c)).collect()
    }

    pub fn reflect(w: &Weight, root: &Weight) -> Weight {
        let c = w.dot(&coroot(root));
        w.add_scaled(&-c, root)
    }

    /// Moves `w` into the closed fundamental chamber by reflecting in any
    /// simple root that pairs negatively, counting reflections.
    pub fn make_dominant(&self, w: &Weight) -> DominantResult {
        let mut cur = w.clone();
        let mut count = 0usize;
        loop {
            let hit = self
                .simple_roots
                .iter()
                .zip(&self.simple_coroots)
                .find_map(|(a, c)| {
                    let p = cur.dot(c);
                    p.is_negative().then_some((a, p))
                });
            match hit {
                Some((a, p)) => {
                    cur = cur.add_scaled(&-p, a);
                    count += 1;
                }
                None => break,
            }
        }
        let singular = self.simple_roots.iter().any(|a| cur.dot(a).is_zero());
        let sign = if singular || count.is_multiple_of(2) {
            1
        } else {
            -1
        };
        DominantResult {
            dominant: cur,
            sign,
            singular,
            reflections: count,
        }
    }

    /// A positive root orthogonal to `w`, if any.
    pub fn orthogonal_root(&self, w: &Weight) -> Option<&Weight> {
        self.positive_roots.iter().find(|r| w.dot(r).is_zero())
    }

    /// Highest weight of the dual representation, `-w_0(lambda)`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        self.check_weight(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant {
                weight: lambda.clone(),
                system: self.label.to_string(),
            });
        }
        Ok(self.make_dominant(&-lambda).dominant)
    }

    /// Weyl orbit of `w`, by breadth-first closure under simple reflections.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        let mut out = vec![w.clone()];
        while let Some(x) = queue.pop_front() {
            for (a, c) in self.simple_roots.iter().zip(&self.simple_coroots) {
                let p = x.dot(c);
                if p.is_zero() {
                    continue;
                }
                let y = x.add_scaled(&-p, a);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Whether `x` lies in the weight lattice of the simply connected group
    /// with this root system: integral against every coroot and inside the
    /// span of the roots.
    pub fn in_weight_lattice(&self, x: &Weight) -> bool {
        self.simple_coroots.iter().all(|c| x.dot(c).is_integer())
            && linalg::in_span(&self.simple_roots, x)
    }

    /// Solves `sum_j c_j <alpha_j, alpha_i^vee> = targets_i` for `c`.
    fn solve_cartan(&self, targets: Vec<Rational>) -> Vec<Rational> {
        let r = self.rank();
        let mut rows: Vec<Vec<Rational>> = (0..r)
            .map(|i| {
                let mut row: Vec<Rational> = (0..r)
                    .map(|j| self.simple_roots[j].dot(&self.simple_coroots[i]))
                    .collect();
                row.push(targets[i].clone());
                row
            })
            .collect();
        for col in 0..r {
            let pivot = (col..r)
                .find(|&i| !rows[i][col].is_zero())
                .expect("Cartan matrix is invertible");
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for v in rows[col].iter_mut() {
                *v *= &inv;
            }
            for i in 0..r {
                if i != col && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    let prow = rows[col].clone();
                    for (v, p) in rows[i].iter_mut().zip(&prow) {
                        *v -= &f * p;
                    }
                }
            }
        }
        rows.into_iter().map(|mut row| row.pop().unwrap()).collect()
    }

    fn combine_simple(&self, coeffs: &[Rational]) -> Weight {
        coeffs
            .iter()
            .zip(&self.simple_roots)
            .fold(Weight::zero(self.ambient_rank), |acc, (c, a)| {
                acc.add_scaled(c, a)
            })
    }

    /// Coefficients of `x` in the simple-root basis, if `x` is in their span.
    pub fn simple_root_coefficients(&self, x: &Weight) -> Option<Vec<Rational>> {
        let targets = self.simple_coroots.iter().map(|c| x.dot(c)).collect();
        let coeffs = self.solve_cartan(targets);
        (self.combine_simple(&coeffs) == *x).then_some(coeffs)
    }

    /// Fundamental weights inside the span of the roots, dual to the simple
    /// coroots.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let targets = (0..r).map(|j| int(i64::from(i == j))).collect();
                self.combine_simple(&self.solve_cartan(targets))
            })
            .collect()
    }

    /// Height of `x` in the simple-root basis, via the half-sum of coroots.
    pub fn height(&self, x: &Weight) -> Rational {
        x.dot(&self.half_sum_positive_coroots())
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Standalone constructor matching the public operation name.
pub fn build_root_system(kind: SimpleType) -> Result<RootSystem> {
    RootSystem::build(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::frac;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn classification_counts() {
        for (s, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A7", 28),
            ("B4", 16),
            ("C3", 9),
            ("D4", 12),
            ("D8", 56),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            let rs = sys(s);
            assert_eq!(rs.positive_roots().len(), n, "{s}");
            assert_eq!(rs.rank(), s.parse::<SimpleType>().unwrap().rank(), "{s}");
        }
    }

    #[test]
    fn d4_positive_roots_are_ei_pm_ej() {
        let rs = sys("D4");
        for r in rs.positive_roots() {
            let nz: Vec<_> = r
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            assert_eq!(nz.len(), 2);
            assert_eq!(*nz[0].1, int(1));
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(
            sys("D4").half_sum_positive_roots(),
            Weight::from_ints(&[3, 2, 1, 0])
        );
        assert_eq!(
            sys("E8").half_sum_positive_roots(),
            Weight::from_ints(&[23, 6, 5, 4, 3, 2, 1, 0])
        );
        assert_eq!(
            sys("F4").half_sum_positive_roots(),
            Weight::halves(&[11, 5, 3, 1])
        );
    }

    #[test]
    fn e8_family_split() {
        let rs = sys("E8");
        let half = rs
            .positive_roots()
            .iter()
            .filter(|r| !r.is_integral())
            .count();
        assert_eq!(half, 64);
        assert!(rs
            .positive_roots()
            .iter()
            .filter(|r| !r.is_integral())
            .all(|r| r[0] == frac(1, 2)));
    }

    #[test]
    fn f4_family_split() {
        let rs = sys("F4");
        let roots = rs.positive_roots();
        let long = roots.iter().filter(|r| r.norm_sq() == int(2)).count();
        let short_int = roots
            .iter()
            .filter(|r| r.norm_sq() == int(1) && r.is_integral())
            .count();
        let half = roots.iter().filter(|r| !r.is_integral()).count();
        assert_eq!((long, short_int, half), (12, 4, 8));
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for s in ["A3", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let rs = sys(s);
            let rho = rs.half_sum_positive_roots();
            for c in rs.simple_coroots() {
                assert_eq!(rho.dot(c), int(1), "{s}");
            }
        }
    }

    #[test]
    fn simple_roots_generate_positive_roots() {
        for s in ["A4", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let rs = sys(s);
            for r in rs.positive_roots() {
                let c = rs.simple_root_coefficients(r).expect("in span");
                assert!(
                    c.iter().all(|x| x.is_integer() && !x.is_negative()),
                    "{s} {r}"
                );
            }
        }
    }

    #[test]
    fn low_rank_bounds() {
        assert!(RootSystem::build(SimpleType::D(2)).is_err());
        assert!(RootSystem::build(SimpleType::B(1)).is_err());
        assert!(RootSystem::build(SimpleType::A(0)).is_err());
        assert!(RootSystem::product(
            4,
            vec![
                (SimpleType::D(2), vec![0, 1]),
                (SimpleType::D(2), vec![2, 3])
            ]
        )
        .is_ok());
        assert!(RootSystem::product(
            4,
            vec![
                (SimpleType::D(2), vec![0, 1]),
                (SimpleType::D(2), vec![1, 2])
            ]
        )
        .is_err());
    }

    #[test]
    fn parse_labels() {
        assert_eq!("d8".parse::<SimpleType>().unwrap(), SimpleType::D(8));
        assert_eq!("E8".parse::<SimpleType>().unwrap(), SimpleType::E8);
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("Q3".parse::<SimpleType>().is_err());
    }

    #[test]
    fn make_dominant_on_dominant_input() {
        let rs = sys("D4");
        let r = rs.make_dominant(&Weight::from_ints(&[3, 2, 1, 0]));
        assert_eq!(r.dominant, Weight::from_ints(&[3, 2, 1, 0]));
        assert_eq!(r.sign, 1);
        assert!(!r.singular);
    }

    #[test]
    fn e8_singular_example() {
        let rs = sys("E8");
        let mu1 = Weight::halves(&[33, 1, 1, 1, 1, 1, 1, 1]);
        let rho_k = Weight::from_ints(&[7, 6, 5, 4, 3, 2, 1, 0]);
        let r = rs.make_dominant(&(&mu1 + &rho_k));
        assert!(r.singular);
        assert_eq!(r.sign, 1);
        let alpha = Weight::halves(&[1, -1, -1, -1, -1, -1, -1, 1]);
        assert!(rs.is_root(&alpha));
        assert!((&mu1 + &rho_k).dot(&alpha).is_zero());
    }

    #[test]
    fn dual_weights() {
        let d4 = sys("D4");
        assert_eq!(d4.dual_weight(&Weight::zero(4)).unwrap(), Weight::zero(4));
        let s = Weight::halves(&[1, 1, 1, 1]);
        assert_eq!(d4.dual_weight(&s).unwrap(), s);
        let d3 = sys("D3");
        assert_eq!(
            d3.dual_weight(&Weight::halves(&[1, 1, 1])).unwrap(),
            Weight::halves(&[1, 1, -1])
        );
        assert!(matches!(
            d3.dual_weight(&Weight::from_ints(&[0, 1, 0])),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn product_embeds_factors() {
        let k = RootSystem::product(
            5,
            vec![
                (SimpleType::D(3), vec![0, 1, 2]),
                (SimpleType::B(1), vec![3]),
            ],
        )
        .unwrap();
        assert_eq!(k.positive_roots().len(), 6 + 1);
        assert_eq!(k.torus_coords(), vec![4]);
        assert_eq!(k.label().to_string(), "D3xB1xT1");
        assert_eq!(
            k.half_sum_positive_roots(),
            Weight::new(vec![int(2), int(1), int(0), frac(1, 2), int(0)])
        );
    }

    #[test]
    fn weight_lattice_membership() {
        let e8 = sys("E8");
        assert!(e8.in_weight_lattice(&Weight::halves(&[1, 1, 1, 1, 1, 1, 1, 1])));
        assert!(!e8.in_weight_lattice(&Weight::halves(&[1, 1, 1, 1, 1, 1, 1, -1])));
        assert!(!e8.in_weight_lattice(&Weight::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0])));
        let e7 = sys("E7");
        assert!(!e7.in_weight_lattice(&Weight::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0])));
        let w = Weight::new(
            [6, -2, -2, -2, -2, -2, -2, 6]
                .iter()
                .map(|&c| frac(c, 8))
                .collect(),
        );
        // e_1 + e_8 - 1/4 (1,...,1), the highest weight of the 56-dimensional module
        assert!(e7.in_weight_lattice(&w));
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for s in ["A3", "B3", "C4", "D5", "E6", "E7", "F4", "G2"] {
            let g = sys(s);
            let omega = g.fundamental_weights();
            for (i, w) in omega.iter().enumerate() {
                for (j, c) in g.simple_coroots().iter().enumerate() {
                    assert_eq!(w.dot(c), int(i64::from(i == j)), "{s}");
                }
                assert!(g.in_weight_lattice(w));
            }
        }
        let d4 = sys("D4");
        assert!(d4
            .fundamental_weights()
            .contains(&Weight::halves(&[1, 1, 1, 1])));
    }
}
