//! Parity obstruction to weak almost complex structures: decompose
//! `E ⊗ TM^C` over `K`, sum the twisted Dirac indices, and combine with
//! self-duality of `E` and global definedness of `E ⊗ ΣM`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::catalog::{wolf_space_twist_summands, CaseId, SymmetricSpaceCase};
use crate::error::{Error, Result};
use crate::index::{index_bbw, integral_index, IndexInput};
use crate::reps::{self_dual, tensor_decompose, total_dim, IrrepLabel, WeightMultiset};
use crate::weight::{int, Weight};

/// Serializes as a JSON number when it fits in `i64`, otherwise as a string.
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(i) => s.serialize_i64(i),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Why a summand contributes zero: `mu + rho_K` is orthogonal to `root`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroWitness {
    pub root: Weight,
    /// 1-based coordinates of `mu + rho_K` that coincide, when the root has
    /// the form `e_i - e_j`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal_coordinates: Option<(usize, usize)>,
}

impl fmt::Display for ZeroWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.equal_coordinates {
            Some((i, j)) => write!(f, "coordinates {i} and {j} are equal"),
            None => write!(f, "orthogonal to root {}", self.root),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandIndex {
    pub weight: Weight,
    pub multiplicity: u64,
    #[serde(serialize_with = "serialize_bigint")]
    pub index: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_witness: Option<ZeroWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Excluded,
    NotExcluded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Excluded => "excluded",
            Verdict::NotExcluded => "not_excluded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub case_name: String,
    pub twist: Weight,
    pub summands: Vec<SummandIndex>,
    #[serde(serialize_with = "serialize_bigint")]
    pub total_index: BigInt,
    pub condition_a_self_dual: bool,
    pub condition_b_global: bool,
    pub condition_c_odd: bool,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

fn index_input(case: &SymmetricSpaceCase, mu: &Weight) -> Result<IndexInput> {
    IndexInput::new(case.g.clone(), case.rho_k.clone(), mu.clone())
}

/// Integral index of the Dirac operator twisted by `V_mu` over `case`.
pub fn summand_index(case: &SymmetricSpaceCase, mu: &Weight) -> Result<BigInt> {
    integral_index(&index_input(case, mu)?)
}

/// Both index routes for one twist; errors if they disagree.
pub fn checked_summand_index(case: &SymmetricSpaceCase, mu: &Weight) -> Result<BigInt> {
    let input = index_input(case, mu)?;
    let product = integral_index(&input)?;
    let bbw = index_bbw(&input)?;
    if product != bbw {
        return Err(Error::IndexMismatch {
            case: format!("{} at {mu}", case.name()),
            expected: product.to_string(),
            computed: bbw.to_string(),
        });
    }
    Ok(product)
}

/// A positive root of `G` orthogonal to `mu + rho_K`, if any.
pub fn zero_witness(case: &SymmetricSpaceCase, mu: &Weight) -> Option<ZeroWitness> {
    let shifted = mu + &case.rho_k;
    let root = case.g.orthogonal_root(&shifted)?.clone();
    let support: Vec<usize> = (0..root.len()).filter(|&i| !root[i].is_zero()).collect();
    let equal_coordinates = match support.as_slice() {
        [i, j] if root[*i] == int(1) && root[*j] == int(-1) => Some((i + 1, j + 1)),
        _ => None,
    };
    Some(ZeroWitness {
        root,
        equal_coordinates,
    })
}

/// Irreducible summands of `twist ⊗ (isotropy)`, with multiplicity.
pub fn decompose_with_twist(
    case: &SymmetricSpaceCase,
    twist: &IrrepLabel,
) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::new();
    for iso in &case.isotropy {
        for (w, m) in tensor_decompose(twist, iso)?.iter() {
            out.insert(w.clone(), m);
        }
    }
    let expected = twist.dim() * BigInt::from(case.metadata.dimension);
    let found = total_dim(&case.k, &out)?;
    if expected != found {
        return Err(Error::DimensionMismatch {
            context: format!("E ⊗ TM for {}", case.name()),
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(out)
}

pub fn decompose_twisted_tangent(case: &SymmetricSpaceCase) -> Result<WeightMultiset> {
    decompose_with_twist(case, &case.twist)
}

fn summand_indices(case: &SymmetricSpaceCase, parts: &WeightMultiset) -> Result<Vec<SummandIndex>> {
    parts
        .iter()
        .map(|(w, m)| {
            let index = summand_index(case, w)?;
            let zero_witness = if index.is_zero() {
                zero_witness(case, w)
            } else {
                None
            };
            Ok(SummandIndex {
                weight: w.clone(),
                multiplicity: m,
                index,
                zero_witness,
            })
        })
        .collect()
}

fn sum_indices(summands: &[SummandIndex]) -> BigInt {
    summands
        .iter()
        .map(|s| &s.index * BigInt::from(s.multiplicity))
        .sum()
}

/// Index of the Dirac operator twisted by `E ⊗ TM^C`.
pub fn total_index(case: &SymmetricSpaceCase) -> Result<BigInt> {
    total_index_with_twist(case, &case.twist)
}

pub fn total_index_with_twist(case: &SymmetricSpaceCase, twist: &IrrepLabel) -> Result<BigInt> {
    let parts = decompose_with_twist(case, twist)?;
    Ok(sum_indices(&summand_indices(case, &parts)?))
}

pub fn check_obstruction(case: &SymmetricSpaceCase) -> Result<ObstructionReport> {
    check_obstruction_with_twist(case, &case.twist)
}

/// Runs the criterion for an arbitrary `K`-dominant twist. Condition (b)
/// comes from the catalog metadata for the catalog twist and from the lattice
/// diagnostic otherwise.
pub fn check_obstruction_with_twist(
    case: &SymmetricSpaceCase,
    twist: &IrrepLabel,
) -> Result<ObstructionReport> {
    let mu = twist.highest_weight();
    let parts = decompose_with_twist(case, twist)?;
    let summands = summand_indices(case, &parts)?;
    let total_index = sum_indices(&summands);

    let mut notes = case.metadata.citations.clone();
    let lattice_ok = case.twist_lattice_check(mu);
    let is_catalog_twist = twist == &case.twist;
    let condition_b_global = if is_catalog_twist {
        case.metadata.twist_globally_defined
    } else {
        lattice_ok
    };
    notes.push(format!(
        "lattice check for E ⊗ ΣM: {}",
        if lattice_ok { "pass" } else { "fail" }
    ));
    if lattice_ok != condition_b_global {
        notes.push("warning: lattice check disagrees with cited global definedness".into());
    }
    if !case.metadata.dimension.is_multiple_of(4) {
        notes.push(format!(
            "dimension {} is 2 mod 4: no self-dual twist can give an odd index",
            case.metadata.dimension
        ));
    }

    let condition_a_self_dual = self_dual(twist);
    let condition_c_odd = total_index.is_odd();
    let verdict = if condition_a_self_dual && condition_b_global && condition_c_odd {
        Verdict::Excluded
    } else {
        Verdict::NotExcluded
    };
    Ok(ObstructionReport {
        case_name: case.name(),
        twist: mu.clone(),
        summands,
        total_index,
        condition_a_self_dual,
        condition_b_global,
        condition_c_odd,
        verdict,
        notes,
    })
}

/// `ind D_{Sym^{n-2} H ⊗ TM^C}` from the Clebsch–Gordan summands; must equal
/// `-(b_2 + b_0)`.
pub fn wolf_space_index(case: &SymmetricSpaceCase) -> Result<BigInt> {
    let total: BigInt = wolf_space_twist_summands(case)?
        .iter()
        .map(|r| checked_summand_index(case, r.highest_weight()))
        .sum::<Result<BigInt>>()?;
    let expected = -BigInt::from(case.metadata.b2 + case.metadata.b0);
    if total != expected {
        return Err(Error::IndexMismatch {
            case: case.name(),
            expected: expected.to_string(),
            computed: total.to_string(),
        });
    }
    Ok(total)
}

fn hp_rank(case: &SymmetricSpaceCase) -> Result<usize> {
    match case.id {
        CaseId::HpN { n } => Ok(n as usize),
        _ => Err(Error::InvalidParams {
            case: case.name(),
            reason: "R^{p,q} twists are defined for hp_n only".into(),
        }),
    }
}

/// Highest weight of `R^{p,q} = Sym^p H ⊗ Λ^q_0 E` on `HP^n`:
/// `p e_0 + e_1 + ... + e_q`.
pub fn rpq_weight(case: &SymmetricSpaceCase, p: u32, q: u32) -> Result<Weight> {
    let n = hp_rank(case)?;
    if q as usize > n {
        return Err(Error::InvalidParams {
            case: case.name(),
            reason: format!("q = {q} exceeds n = {n}"),
        });
    }
    let mut v = Weight::zero(n + 1).into_coords();
    v[0] = int(i64::from(p));
    for c in v.iter_mut().skip(1).take(q as usize) {
        *c = int(1);
    }
    Ok(Weight::new(v))
}

/// Index of `D_{R^{p,q}}` on `HP^n`, computed homogeneously.
pub fn rpq_index(case: &SymmetricSpaceCase, p: u32, q: u32) -> Result<BigInt> {
    let mu = rpq_weight(case, p, q)?;
    checked_summand_index(case, &mu)
}

/// `(-1)^q (b_{2q} + b_{2q-2})` for `p + q = n`, zero for `p + q < n`.
pub fn rpq_expected(case: &SymmetricSpaceCase, p: u32, q: u32) -> Result<BigInt> {
    let n = hp_rank(case)? as u32;
    if p + q < n {
        return Ok(BigInt::zero());
    }
    let q = i64::from(q);
    let b = case.betti(2 * q).unwrap_or(0) + case.betti(2 * q - 2).unwrap_or(0);
    let sign = if q % 2 == 0 { 1 } else { -1 };
    Ok(BigInt::from(sign * i64::from(b)))
}

/// The `R^{p,q}` index for `p + q < n`, `p + q + n` even; must vanish.
pub fn vanishing_low_twist(case: &SymmetricSpaceCase, p: u32, q: u32) -> Result<BigInt> {
    let n = hp_rank(case)? as u32;
    if p + q >= n || !(p + q + n).is_multiple_of(2) {
        return Err(Error::InvalidParams {
            case: case.name(),
            reason: format!("requires p + q < n and p + q + n even, got p={p}, q={q}"),
        });
    }
    let v = rpq_index(case, p, q)?;
    if !v.is_zero() {
        return Err(Error::IndexMismatch {
            case: format!("{} R^({p},{q})", case.name()),
            expected: "0".into(),
            computed: v.to_string(),
        });
    }
    Ok(v)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl ObstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table; indices are right-aligned.
    pub fn to_text(&self) -> String {
        let weights: Vec<String> = self.summands.iter().map(|s| s.weight.to_string()).collect();
        let indices: Vec<String> = self.summands.iter().map(|s| s.index.to_string()).collect();
        let total = self.total_index.to_string();
        let ww = weights
            .iter()
            .map(String::len)
            .max()
            .unwrap_or(0)
            .max("summand".len());
        let iw = indices
            .iter()
            .map(String::len)
            .chain([total.len(), "index".len()])
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(out, "case: {}", self.case_name);
        let _ = writeln!(out, "twist: {}", self.twist);
        let _ = writeln!(
            out,
            "{:<ww$}  {:>4}  {:>iw$}  zero witness",
            "summand", "mult", "index"
        );
        for (s, (w, i)) in self.summands.iter().zip(weights.iter().zip(&indices)) {
            let wit = s
                .zero_witness
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            let line = format!("{w:<ww$}  {:>4}  {i:>iw$}  {wit}", s.multiplicity);
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let _ = writeln!(out, "{:<ww$}  {:>4}  {total:>iw$}", "total", "");
        let _ = writeln!(
            out,
            "(a) twist self-dual:      {}",
            yes_no(self.condition_a_self_dual)
        );
        let _ = writeln!(
            out,
            "(b) E ⊗ ΣM global:        {}",
            yes_no(self.condition_b_global)
        );
        let _ = writeln!(
            out,
            "(c) index odd:            {}",
            yes_no(self.condition_c_odd)
        );
        let _ = writeln!(out, "verdict: {}", self.verdict);
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_get_with, Limits};

    fn get(id: CaseId) -> SymmetricSpaceCase {
        catalog_get_with(id, &Limits::default()).unwrap()
    }

    #[test]
    fn f4_report() {
        let r = check_obstruction(&get(CaseId::F4Spin9)).unwrap();
        let idx: Vec<i64> = r
            .summands
            .iter()
            .map(|s| s.index.to_i64().unwrap())
            .collect();
        assert_eq!(idx, vec![0, -1]);
        assert_eq!(r.total_index, BigInt::from(-1));
        assert_eq!(r.verdict, Verdict::Excluded);
        let wit = r.summands[0].zero_witness.as_ref().unwrap();
        assert_eq!(wit.root, Weight::halves(&[1, -1, -1, 1]));
    }

    #[test]
    fn e8_report() {
        let c = get(CaseId::E8Spin16 { k: 8 });
        let parts = decompose_twisted_tangent(&c).unwrap();
        let expected: WeightMultiset = [
            (Weight::halves(&[33, 1, 1, 1, 1, 1, 1, 1]), 1),
            (Weight::halves(&[31, 1, 1, 1, 1, 1, 1, -1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(parts, expected);
        let r = check_obstruction(&c).unwrap();
        assert_eq!(r.total_index, BigInt::from(-1));
        assert_eq!(r.verdict, Verdict::Excluded);
    }

    #[test]
    fn wolf_indices() {
        assert_eq!(
            wolf_space_index(&get(CaseId::HpN { n: 2 })).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            wolf_space_index(&get(CaseId::HpN { n: 4 })).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            wolf_space_index(&get(CaseId::Gr2Cn2 { n: 3 })).unwrap(),
            BigInt::from(-2)
        );
    }

    #[test]
    fn wolf_total_matches_obstruction_total() {
        for id in [CaseId::HpN { n: 3 }, CaseId::Gr2Cn2 { n: 2 }] {
            let c = get(id);
            assert_eq!(total_index(&c).unwrap(), wolf_space_index(&c).unwrap());
        }
        let hp = check_obstruction(&get(CaseId::HpN { n: 3 })).unwrap();
        assert_eq!(hp.verdict, Verdict::Excluded);
        let gr2 = check_obstruction(&get(CaseId::Gr2Cn2 { n: 3 })).unwrap();
        assert_eq!(gr2.verdict, Verdict::NotExcluded);
        assert!(!gr2.condition_c_odd);
    }

    #[test]
    fn rpq_values() {
        let c = get(CaseId::HpN { n: 4 });
        assert_eq!(vanishing_low_twist(&c, 2, 0).unwrap(), BigInt::zero());
        assert_eq!(vanishing_low_twist(&c, 0, 2).unwrap(), BigInt::zero());
        assert_eq!(rpq_index(&c, 4, 0).unwrap(), BigInt::from(1));
        assert_eq!(rpq_expected(&c, 4, 0).unwrap(), BigInt::from(1));
        assert!(vanishing_low_twist(&c, 4, 0).is_err());
        assert!(vanishing_low_twist(&c, 1, 0).is_err());
    }

    #[test]
    fn negative_controls() {
        for id in [CaseId::E7Su8, CaseId::GrRealOddPQ { p: 3, q: 3 }] {
            let r = check_obstruction(&get(id)).unwrap();
            assert!(!r.condition_a_self_dual, "{}", r.case_name);
            assert!(r.condition_c_odd, "{}", r.case_name);
            assert_eq!(r.verdict, Verdict::NotExcluded);
        }
    }

    #[test]
    fn zero_witness_reports_equal_coordinates() {
        let c = get(CaseId::GrRealEven { p: 2, q_half: 2 });
        // mu_2 = e_1 + e_3 gives mu + rho_K = (2,0,2,0)
        let w = zero_witness(&c, &Weight::from_ints(&[1, 0, 1, 0])).unwrap();
        assert_eq!(w.equal_coordinates, Some((1, 3)));
    }

    #[test]
    fn json_is_stable() {
        let c = get(CaseId::F4Spin9);
        let a = check_obstruction(&c).unwrap().to_json();
        let b = check_obstruction(&c).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains(r#""total_index": -1"#));
        assert!(a.contains(r#""verdict": "excluded""#));
    }

    #[test]
    fn text_table_lists_summands() {
        let t = check_obstruction(&get(CaseId::F4Spin9)).unwrap().to_text();
        assert!(t.contains("1/2*(3,1,1,1)"));
        assert!(t.contains("verdict: excluded"));
    }

    #[test]
    fn bigint_serialization_falls_back_to_string() {
        #[derive(Serialize)]
        struct W(#[serde(serialize_with = "serialize_bigint")] BigInt);
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        assert_eq!(
            serde_json::to_string(&W(big.clone())).unwrap(),
            format!("\"{big}\"")
        );
        assert_eq!(serde_json::to_string(&W(BigInt::from(-3))).unwrap(), "-3");
    }
}
