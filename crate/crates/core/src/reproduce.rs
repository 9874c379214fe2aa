//! Fixed battery of reference values: root data, decompositions and indices
//! for the catalog spaces, each labeled with a short anchor.

use num_bigint::BigInt;
use serde::Serialize;

use crate::catalog::{
    a7_first_fundamental, catalog_get_with, grassmannian_formula_weights,
    wolf_space_twist_summands, CaseId, Limits, SymmetricSpaceCase,
};
use crate::error::Result;
use crate::index::{index_bbw, index_product, IndexInput};
use crate::obstruction::{
    check_obstruction, decompose_twisted_tangent, rpq_index, total_index, vanishing_low_twist,
    wolf_space_index,
};
use crate::parse::parse_weight;
use crate::reps::{cartan_sym_power, self_dual, tensor_decompose, IrrepLabel, WeightMultiset};
use crate::roots::{RootSystem, SimpleType};
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

struct Battery {
    checks: Vec<Check>,
}

impl Battery {
    fn add(&mut self, anchor: &str, expected: impl ToString, computed: Result<String>) {
        let expected = expected.to_string();
        let (computed, pass) = match computed {
            Ok(c) => {
                let pass = c == expected;
                (c, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        self.checks.push(Check {
            anchor: anchor.to_string(),
            expected,
            computed,
            pass,
        });
    }

    /// For values fixed only up to sign.
    fn add_abs_one(&mut self, anchor: &str, computed: Result<BigInt>) {
        let computed = computed.map(|v| {
            if v == BigInt::from(1) || v == BigInt::from(-1) {
                "±1".to_string()
            } else {
                v.to_string()
            }
        });
        self.add(anchor, "±1", computed);
    }
}

fn sys(t: SimpleType) -> Result<RootSystem> {
    RootSystem::build(t)
}

fn multiset_string(m: &WeightMultiset) -> String {
    let parts: Vec<String> = m
        .iter()
        .map(|(w, k)| {
            if k == 1 {
                w.to_string()
            } else {
                format!("{k}x{w}")
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn expected_set(ws: &[Weight]) -> String {
    multiset_string(&ws.iter().map(|w| (w.clone(), 1)).collect())
}

fn case(id: CaseId) -> Result<SymmetricSpaceCase> {
    catalog_get_with(id, &Limits::default())
}

fn rep(t: SimpleType, w: Weight) -> Result<IrrepLabel> {
    IrrepLabel::new(sys(t)?, w)
}

fn e8_input(mu: Weight) -> Result<IndexInput> {
    IndexInput::new(
        sys(SimpleType::E8)?,
        Weight::from_ints(&[7, 6, 5, 4, 3, 2, 1, 0]),
        mu,
    )
}

fn f4_input(mu: Weight) -> Result<IndexInput> {
    IndexInput::new(sys(SimpleType::F4)?, Weight::halves(&[7, 5, 3, 1]), mu)
}

/// Runs every reference check.
pub fn run_battery() -> Vec<Check> {
    let mut b = Battery { checks: Vec::new() };
    let e8_mu1 = Weight::halves(&[33, 1, 1, 1, 1, 1, 1, 1]);
    let e8_mu2 = Weight::halves(&[31, 1, 1, 1, 1, 1, 1, -1]);

    // root data
    b.add(
        "D4 positive roots",
        12,
        sys(SimpleType::D(4)).map(|r| r.positive_roots().len().to_string()),
    );
    b.add(
        "E8 positive roots",
        120,
        sys(SimpleType::E8).map(|r| r.positive_roots().len().to_string()),
    );
    b.add(
        "F4 positive roots",
        24,
        sys(SimpleType::F4).map(|r| r.positive_roots().len().to_string()),
    );
    b.add(
        "rho of D4",
        "(3,2,1,0)",
        sys(SimpleType::D(4)).map(|r| r.half_sum_positive_roots().to_string()),
    );
    b.add(
        "rho of E8",
        "(23,6,5,4,3,2,1,0)",
        sys(SimpleType::E8).map(|r| r.half_sum_positive_roots().to_string()),
    );
    b.add(
        "rho of F4",
        "1/2*(11,5,3,1)",
        sys(SimpleType::F4).map(|r| r.half_sum_positive_roots().to_string()),
    );
    b.add(
        "E8: mu_1 + rho_K is singular",
        "orthogonal to 1/2*(1,-1,-1,-1,-1,-1,-1,1)",
        sys(SimpleType::E8).map(|g| {
            let x = &e8_mu1 + &Weight::from_ints(&[7, 6, 5, 4, 3, 2, 1, 0]);
            let alpha = Weight::halves(&[1, -1, -1, -1, -1, -1, -1, 1]);
            if g.make_dominant(&x).singular && x.dot(&alpha) == num_traits::Zero::zero() {
                format!("orthogonal to {alpha}")
            } else {
                "regular".into()
            }
        }),
    );

    // representations
    b.add(
        "Spin(16) half-spin dimension",
        128,
        rep(SimpleType::D(8), Weight::halves(&[1; 8])).map(|r| r.dim().to_string()),
    );
    b.add(
        "Spin(9) spin dimension",
        16,
        rep(SimpleType::B(4), Weight::halves(&[1; 4])).map(|r| r.dim().to_string()),
    );
    b.add(
        "Spin(8): e_1 ⊗ 2(e_1+...+e_4)",
        expected_set(&[
            Weight::from_ints(&[3, 2, 2, 2]),
            Weight::from_ints(&[2, 2, 2, 1]),
        ]),
        (|| {
            let a = rep(SimpleType::D(4), Weight::unit(4, 0))?;
            let c = rep(SimpleType::D(4), Weight::from_ints(&[2, 2, 2, 2]))?;
            Ok(multiset_string(&tensor_decompose(&a, &c)?))
        })(),
    );
    b.add(
        "Spin(16): (16,0,...,0) ⊗ half-spin",
        expected_set(&[e8_mu1.clone(), e8_mu2.clone()]),
        (|| {
            let a = rep(
                SimpleType::D(8),
                Weight::from_ints(&[16, 0, 0, 0, 0, 0, 0, 0]),
            )?;
            let s = rep(SimpleType::D(8), Weight::halves(&[1; 8]))?;
            Ok(multiset_string(&tensor_decompose(&a, &s)?))
        })(),
    );
    b.add(
        "Spin(9): spin ⊗ vector",
        expected_set(&[Weight::halves(&[1, 1, 1, 1]), Weight::halves(&[3, 1, 1, 1])]),
        (|| {
            let s = rep(SimpleType::B(4), Weight::halves(&[1; 4]))?;
            let v = rep(SimpleType::B(4), Weight::unit(4, 0))?;
            Ok(multiset_string(&tensor_decompose(&s, &v)?))
        })(),
    );
    b.add(
        "Spin(6) half-spin is not self-dual",
        false,
        rep(SimpleType::D(3), Weight::halves(&[1; 3])).map(|r| self_dual(&r).to_string()),
    );
    b.add(
        "SU(8): Sym^10 of the standard module is not self-dual",
        false,
        rep(SimpleType::A(7), a7_first_fundamental())
            .map(|r| self_dual(&cartan_sym_power(&r, 10)).to_string()),
    );
    b.add(
        "Spin(16): Cartan part of Sym^16 of the vector",
        "(16,0,0,0,0,0,0,0)",
        rep(SimpleType::D(8), Weight::unit(8, 0))
            .map(|r| cartan_sym_power(&r, 16).highest_weight().to_string()),
    );

    // indices
    b.add(
        "E8: index of mu_2 (product)",
        -1,
        e8_input(e8_mu2.clone()).map(|i| index_product(&i).to_string()),
    );
    b.add(
        "E8: index of mu_2 (dominance)",
        -1,
        e8_input(e8_mu2.clone())
            .and_then(|i| index_bbw(&i))
            .map(|v| v.to_string()),
    );
    b.add(
        "E8: index of mu_1 (product)",
        0,
        e8_input(e8_mu1.clone()).map(|i| index_product(&i).to_string()),
    );
    b.add(
        "E8: index of mu_1 (dominance)",
        0,
        e8_input(e8_mu1.clone())
            .and_then(|i| index_bbw(&i))
            .map(|v| v.to_string()),
    );
    b.add(
        "F4: index of 1/2*(3,1,1,1)",
        -1,
        f4_input(Weight::halves(&[3, 1, 1, 1])).map(|i| index_product(&i).to_string()),
    );
    b.add(
        "F4: index of 1/2*(1,1,1,1)",
        0,
        f4_input(Weight::halves(&[1, 1, 1, 1])).map(|i| index_product(&i).to_string()),
    );
    b.add_abs_one(
        "SO(8)/SO(4)xSO(4): index of mu_1 (dominance)",
        (|| {
            let c = case(CaseId::GrRealEven { p: 2, q_half: 2 })?;
            index_bbw(&IndexInput::new(
                c.g.clone(),
                c.rho_k.clone(),
                Weight::from_ints(&[2, 1, 1, 0]),
            )?)
        })(),
    );

    // catalog
    b.add(
        "SO(8)/SO(4)xSO(4): rho_K, isotropy, dimension",
        "(1,0,1,0) [(1,0,1,0)] 16",
        case(CaseId::GrRealEven { p: 2, q_half: 2 }).map(|c| {
            format!(
                "{} [{}] {}",
                c.rho_k,
                c.isotropy[0].highest_weight(),
                c.metadata.dimension
            )
        }),
    );
    b.add(
        "SO(10)/SO(6)xSO(4): twist",
        "(1,1,1,1,0)",
        case(CaseId::GrRealEven { p: 3, q_half: 2 }).map(|c| c.twist.highest_weight().to_string()),
    );
    b.add(
        "E8/Spin(16): rho_K, rho_G, isotropy, b0",
        "(7,6,5,4,3,2,1,0) (23,6,5,4,3,2,1,0) 1/2*(1,1,1,1,1,1,1,1) 1",
        case(CaseId::E8Spin16 { k: 8 }).map(|c| {
            format!(
                "{} {} {} {}",
                c.rho_k,
                c.rho_g,
                c.isotropy[0].highest_weight(),
                c.metadata.b0
            )
        }),
    );
    b.add(
        "E8/Spin(16): twist for k = 8",
        "(16,0,0,0,0,0,0,0)",
        case(CaseId::E8Spin16 { k: 8 }).map(|c| c.twist.highest_weight().to_string()),
    );
    b.add(
        "F4/Spin(9): twist",
        "(1,0,0,0)",
        case(CaseId::F4Spin9).map(|c| c.twist.highest_weight().to_string()),
    );
    b.add(
        "HP^2: G, K, b0, b2",
        "C3 C1xC2 1 0",
        case(CaseId::HpN { n: 2 }).map(|c| {
            format!(
                "{} {} {} {}",
                c.g.label(),
                c.k.label(),
                c.metadata.b0,
                c.metadata.b2
            )
        }),
    );
    b.add(
        "HP^3: Clebsch-Gordan summands",
        "[(2,1,0,0), (0,1,0,0)]",
        case(CaseId::HpN { n: 3 }).and_then(|c| {
            let s: Vec<String> = wolf_space_twist_summands(&c)?
                .iter()
                .map(|r| r.highest_weight().to_string())
                .collect();
            Ok(format!("[{}]", s.join(", ")))
        }),
    );

    // obstruction
    b.add(
        "SO(12)/SO(6)xSO(6): E ⊗ TM summands are mu_1..mu_6",
        expected_set(&grassmannian_formula_weights(3, 3)),
        case(CaseId::GrRealEven { p: 3, q_half: 3 })
            .and_then(|c| Ok(multiset_string(&decompose_twisted_tangent(&c)?))),
    );
    b.add(
        "E8/Spin(16): E ⊗ TM summands",
        expected_set(&[e8_mu1.clone(), e8_mu2.clone()]),
        case(CaseId::E8Spin16 { k: 8 })
            .and_then(|c| Ok(multiset_string(&decompose_twisted_tangent(&c)?))),
    );
    b.add(
        "F4/Spin(9): E ⊗ TM summands",
        expected_set(&[Weight::halves(&[1, 1, 1, 1]), Weight::halves(&[3, 1, 1, 1])]),
        case(CaseId::F4Spin9).and_then(|c| Ok(multiset_string(&decompose_twisted_tangent(&c)?))),
    );
    b.add_abs_one(
        "SO(8)/SO(4)xSO(4): total index",
        case(CaseId::GrRealEven { p: 2, q_half: 2 }).and_then(|c| total_index(&c)),
    );
    b.add(
        "E8/Spin(16): total index",
        -1,
        case(CaseId::E8Spin16 { k: 8 })
            .and_then(|c| total_index(&c))
            .map(|v| v.to_string()),
    );
    b.add(
        "F4/Spin(9): total index",
        -1,
        case(CaseId::F4Spin9)
            .and_then(|c| total_index(&c))
            .map(|v| v.to_string()),
    );
    b.add(
        "F4/Spin(9): verdict",
        "excluded",
        case(CaseId::F4Spin9)
            .and_then(|c| check_obstruction(&c))
            .map(|r| r.verdict.to_string()),
    );
    for (anchor, id) in [
        ("E7/(SU(8)/Z2): verdict, (a), (c)", CaseId::E7Su8),
        (
            "Gr_6(R^9), p, q odd: verdict, (a), (c)",
            CaseId::GrRealOddPQ { p: 3, q: 3 },
        ),
    ] {
        b.add(
            anchor,
            "not_excluded false true",
            case(id).and_then(|c| check_obstruction(&c)).map(|r| {
                format!(
                    "{} {} {}",
                    r.verdict, r.condition_a_self_dual, r.condition_c_odd
                )
            }),
        );
    }
    for (anchor, id, expected) in [
        ("HP^2: index of Sym^0 H ⊗ TM", CaseId::HpN { n: 2 }, -1),
        ("HP^4: index of Sym^2 H ⊗ TM", CaseId::HpN { n: 4 }, -1),
        (
            "Gr_2(C^5): index of Sym^1 H ⊗ TM",
            CaseId::Gr2Cn2 { n: 3 },
            -2,
        ),
    ] {
        b.add(
            anchor,
            expected,
            case(id)
                .and_then(|c| wolf_space_index(&c))
                .map(|v| v.to_string()),
        );
    }
    for (p, q) in [(2, 0), (0, 2)] {
        b.add(
            &format!("HP^4: index of R^({p},{q})"),
            0,
            case(CaseId::HpN { n: 4 })
                .and_then(|c| vanishing_low_twist(&c, p, q))
                .map(|v| v.to_string()),
        );
    }
    b.add(
        "HP^4: index of R^(4,0)",
        1,
        case(CaseId::HpN { n: 4 })
            .and_then(|c| rpq_index(&c, 4, 0))
            .map(|v| v.to_string()),
    );

    // notation
    b.add(
        "weight notation round trip",
        "1/2*(3,1,1,1)",
        parse_weight("1/2*(3,1,1,1)").map(|w| w.to_string()),
    );
    b.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes() {
        let checks = run_battery();
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(checks.len() > 30);
    }
}
