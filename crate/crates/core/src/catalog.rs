//! Equal-rank symmetric spaces `G/K` as shared-coordinate root data, with the
//! isotropy representation, a twist bundle and topological metadata.
//!
//! Coordinates are 0-based in code; `e_0` is the first ambient coordinate.
//!
//! | family          | G            | K                          | twist                                 |
//! |-----------------|--------------|----------------------------|---------------------------------------|
//! | `gr_real_even`  | `D_{p+q'}`   | `D_p x D_q'`               | `(q'-1) sum_{i<p} e_i + (p-2) e_p`    |
//! | `gr_real_oddq`  | `B_{p+m}`    | `D_p x B_m`, `q = 2m+1`    | `(q/2-1) sum_{i<p} e_i + (p-2) e_p`   |
//! | `gr_real_oddpq` | `B_{p+m}`    | `D_p x B_m`, `p` odd       | as above                              |
//! | `e8_spin16`     | `E8`         | `D8`                       | `(2k,0,...,0)`                        |
//! | `f4_spin9`      | `F4`         | `B4`                       | `(1,0,0,0)`                           |
//! | `e7_su8`        | `E7`         | `A7`                       | `10 w_1`                              |
//! | `hp_n`          | `C_{n+1}`    | `C_1 x C_n`                | `(n-2) e_0`                           |
//! | `gr2_cn2`       | `A_{n+1}`    | `A_1(e_0,e_{n+1}) x A_{n-1}` | `(n-2)/2 (e_0 - e_{n+1})`           |
//!
//! For the two quaternion-Kähler families the `Sp(1)` factor sits on the
//! first coordinate (and, for `gr2_cn2`, the last one) so that the chamber
//! of `G` induces the usual positive systems on `H` and `E`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::reps::{weight_multiplicities, IrrepLabel, WeightMultiset};
use crate::roots::{RootSystem, SimpleType};
use crate::weight::{frac, int, Rational, Weight};

pub const DEFAULT_MAX_PARAM: u32 = 12;
pub const MAX_PARAM_ENV: &str = "LIEINDEX_MAX_RANK";
pub const DEFAULT_E8_K: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_param: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_param: DEFAULT_MAX_PARAM,
        }
    }
}

impl Limits {
    /// Reads `LIEINDEX_MAX_RANK`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_PARAM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_param| Limits { max_param })
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GrRealEven,
    GrRealOddQ,
    GrRealOddPQ,
    E8Spin16,
    F4Spin9,
    E7Su8,
    HpN,
    Gr2Cn2,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::GrRealEven,
        Family::GrRealOddQ,
        Family::GrRealOddPQ,
        Family::E8Spin16,
        Family::F4Spin9,
        Family::E7Su8,
        Family::HpN,
        Family::Gr2Cn2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GrRealEven => "gr_real_even",
            Family::GrRealOddQ => "gr_real_oddq",
            Family::GrRealOddPQ => "gr_real_oddpq",
            Family::E8Spin16 => "e8_spin16",
            Family::F4Spin9 => "f4_spin9",
            Family::E7Su8 => "e7_su8",
            Family::HpN => "hp_n",
            Family::Gr2Cn2 => "gr2_cn2",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::GrRealEven => &["p", "q'"],
            Family::GrRealOddQ | Family::GrRealOddPQ => &["p", "q"],
            Family::E8Spin16 => &["k"],
            Family::F4Spin9 | Family::E7Su8 => &[],
            Family::HpN | Family::Gr2Cn2 => &["n"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the family names with `-` or `_`, plus the aliases `hp` and `gr2`.
    fn from_str(s: &str) -> Result<Family> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let fam = match norm.as_str() {
            "gr_real_even" => Family::GrRealEven,
            "gr_real_oddq" => Family::GrRealOddQ,
            "gr_real_oddpq" => Family::GrRealOddPQ,
            "e8_spin16" => Family::E8Spin16,
            "f4_spin9" => Family::F4Spin9,
            "e7_su8" => Family::E7Su8,
            "hp_n" | "hp" => Family::HpN,
            "gr2_cn2" | "gr2" => Family::Gr2Cn2,
            _ => return Err(Error::UnknownCase(s.to_string())),
        };
        Ok(fam)
    }
}

/// A catalog entry: family plus integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    GrRealEven { p: u32, q_half: u32 },
    GrRealOddQ { p: u32, q: u32 },
    GrRealOddPQ { p: u32, q: u32 },
    E8Spin16 { k: u32 },
    F4Spin9,
    E7Su8,
    HpN { n: u32 },
    Gr2Cn2 { n: u32 },
}

impl CaseId {
    pub fn family(&self) -> Family {
        match self {
            CaseId::GrRealEven { .. } => Family::GrRealEven,
            CaseId::GrRealOddQ { .. } => Family::GrRealOddQ,
            CaseId::GrRealOddPQ { .. } => Family::GrRealOddPQ,
            CaseId::E8Spin16 { .. } => Family::E8Spin16,
            CaseId::F4Spin9 => Family::F4Spin9,
            CaseId::E7Su8 => Family::E7Su8,
            CaseId::HpN { .. } => Family::HpN,
            CaseId::Gr2Cn2 { .. } => Family::Gr2Cn2,
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            CaseId::GrRealEven { p, q_half } => vec![p, q_half],
            CaseId::GrRealOddQ { p, q } | CaseId::GrRealOddPQ { p, q } => vec![p, q],
            CaseId::E8Spin16 { k } => vec![k],
            CaseId::F4Spin9 | CaseId::E7Su8 => vec![],
            CaseId::HpN { n } | CaseId::Gr2Cn2 { n } => vec![n],
        }
    }

    /// Builds an id from a family name and positional parameters. `e8_spin16`
    /// defaults to `k = 8`.
    pub fn parse(name: &str, params: &[u32]) -> Result<CaseId> {
        let family: Family = name.parse()?;
        let expected = family.param_names().len();
        let params: Vec<u32> = if family == Family::E8Spin16 && params.is_empty() {
            vec![DEFAULT_E8_K]
        } else {
            params.to_vec()
        };
        if params.len() != expected {
            return Err(Error::InvalidParams {
                case: family.to_string(),
                reason: format!(
                    "expected {} parameter(s) ({}), got {}",
                    expected,
                    family.param_names().join(", "),
                    params.len()
                ),
            });
        }
        let id = match family {
            Family::GrRealEven => CaseId::GrRealEven {
                p: params[0],
                q_half: params[1],
            },
            Family::GrRealOddQ => CaseId::GrRealOddQ {
                p: params[0],
                q: params[1],
            },
            Family::GrRealOddPQ => CaseId::GrRealOddPQ {
                p: params[0],
                q: params[1],
            },
            Family::E8Spin16 => CaseId::E8Spin16 { k: params[0] },
            Family::F4Spin9 => CaseId::F4Spin9,
            Family::E7Su8 => CaseId::E7Su8,
            Family::HpN => CaseId::HpN { n: params[0] },
            Family::Gr2Cn2 => CaseId::Gr2Cn2 { n: params[0] },
        };
        Ok(id)
    }

    /// Checks the parameter ranges for which the construction makes sense.
    pub fn validate(&self, limits: &Limits) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidParams {
                case: self.to_string(),
                reason,
            })
        };
        let max = limits.max_param;
        if let Some(&big) = self.params().iter().find(|&&v| v > max) {
            return fail(format!(
                "parameter {big} exceeds the bound {max} (set {MAX_PARAM_ENV} to raise it)"
            ));
        }
        match *self {
            CaseId::GrRealEven { p, q_half } => {
                if p < 2 || q_half < 2 {
                    return fail(
                        "requires p >= 2 and q' >= 2; smaller values give Hermitian spaces".into(),
                    );
                }
            }
            CaseId::GrRealOddQ { p, q } => {
                if p < 2 || p % 2 != 0 {
                    return fail("requires p even and p >= 2".into());
                }
                if q % 2 == 0 {
                    return fail("requires q odd; even q belongs to gr_real_even".into());
                }
                if q == 1 {
                    return fail("for q = 1 the twist weight is not a highest weight".into());
                }
            }
            CaseId::GrRealOddPQ { p, q } => {
                if p < 3 || p % 2 == 0 || q < 3 || q % 2 == 0 {
                    return fail("requires p and q odd with p, q >= 3".into());
                }
            }
            CaseId::E8Spin16 { k } => {
                if k < 1 {
                    return fail("requires k >= 1".into());
                }
            }
            CaseId::F4Spin9 | CaseId::E7Su8 => {}
            CaseId::HpN { n } | CaseId::Gr2Cn2 { n } => {
                if n < 2 {
                    return fail("requires n >= 2 for the twist Sym^(n-2) H".into());
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family();
        let params = self.params();
        if params.is_empty() {
            return write!(f, "{fam}");
        }
        let parts: Vec<String> = fam
            .param_names()
            .iter()
            .zip(&params)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        write!(f, "{fam}({})", parts.join(","))
    }
}

/// Lattice used by the descent diagnostic: the character lattice of the
/// maximal torus of `G` in ambient coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    /// `Z^n`, for `SO(N)`, `Sp(N)` in their standard coordinates.
    Integral,
    /// The weight lattice of the root system of `G` (simply connected `G`).
    WeightLattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metadata {
    /// Real dimension of `G/K`.
    pub dimension: u32,
    pub is_spin: bool,
    /// Whether `E ⊗ ΣM` is globally defined.
    pub twist_globally_defined: bool,
    /// Whether `E` by itself is only locally defined.
    pub locally_defined_twist: bool,
    pub b0: u32,
    pub b2: u32,
    /// Whether the obstruction criterion can apply at all (`dimension ≡ 0 mod 4`).
    pub usable: bool,
    pub lattice: LatticeKind,
    pub citations: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SymmetricSpaceCase {
    pub id: CaseId,
    pub g: RootSystem,
    pub k: RootSystem,
    pub rho_g: Weight,
    pub rho_k: Weight,
    /// Irreducible summands of the complexified isotropy representation.
    pub isotropy: Vec<IrrepLabel>,
    pub twist: IrrepLabel,
    pub metadata: Metadata,
}

fn weight_from(n: usize, entries: &[(usize, Rational)]) -> Weight {
    let mut v = Weight::zero(n).into_coords();
    for (i, c) in entries {
        v[*i] += c;
    }
    Weight::new(v)
}

fn block_sum(n: usize, range: std::ops::Range<usize>, c: &Rational) -> Vec<(usize, Rational)> {
    range.map(|i| (i, c.clone())).take(n).collect()
}

fn simple(kind: SimpleType) -> Result<RootSystem> {
    RootSystem::build(kind)
}

fn cite(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Builds and validates a catalog entry, with parameter bounds from the
/// environment.
pub fn catalog_get(id: CaseId) -> Result<SymmetricSpaceCase> {
    catalog_get_with(id, &Limits::from_env())
}

pub fn catalog_get_with(id: CaseId, limits: &Limits) -> Result<SymmetricSpaceCase> {
    id.validate(limits)?;
    let case = build_case(id)?;
    case.validate()?;
    Ok(case)
}

/// Parses the name and parameters, then builds the case.
pub fn catalog_lookup(name: &str, params: &[u32]) -> Result<SymmetricSpaceCase> {
    catalog_get(CaseId::parse(name, params)?)
}

fn build_case(id: CaseId) -> Result<SymmetricSpaceCase> {
    match id {
        CaseId::GrRealEven { p, q_half } => grassmannian_even(id, p as usize, q_half as usize),
        CaseId::GrRealOddQ { p, q } | CaseId::GrRealOddPQ { p, q } => {
            grassmannian_odd(id, p as usize, q as usize)
        }
        CaseId::E8Spin16 { k } => e8_spin16(id, k),
        CaseId::F4Spin9 => f4_spin9(id),
        CaseId::E7Su8 => e7_su8(id),
        CaseId::HpN { n } => hp_n(id, n as usize),
        CaseId::Gr2Cn2 { n } => gr2_cn2(id, n as usize),
    }
}

fn finish(
    id: CaseId,
    g: RootSystem,
    k: RootSystem,
    isotropy: Vec<Weight>,
    twist: Weight,
    metadata: Metadata,
) -> Result<SymmetricSpaceCase> {
    let rho_g = g.half_sum_positive_roots();
    let rho_k = k.half_sum_positive_roots();
    let isotropy = isotropy
        .into_iter()
        .map(|w| IrrepLabel::new(k.clone(), w))
        .collect::<Result<Vec<_>>>()?;
    let twist = IrrepLabel::new(k.clone(), twist)?;
    Ok(SymmetricSpaceCase {
        id,
        g,
        k,
        rho_g,
        rho_k,
        isotropy,
        twist,
        metadata,
    })
}

fn grassmannian_even(id: CaseId, p: usize, qh: usize) -> Result<SymmetricSpaceCase> {
    let n = p + qh;
    let g = simple(SimpleType::D(n))?;
    let k = RootSystem::product(
        n,
        vec![
            (SimpleType::D(p), (0..p).collect()),
            (SimpleType::D(qh), (p..n).collect()),
        ],
    )?;
    let iso = weight_from(n, &[(0, int(1)), (p, int(1))]);
    let twist = grassmannian_twist(n, p, int(qh as i64 - 1));
    let dimension = (4 * p * qh) as u32;
    let meta = Metadata {
        dimension,
        is_spin: true,
        twist_globally_defined: true,
        locally_defined_twist: false,
        b0: 1,
        b2: 0,
        usable: dimension.is_multiple_of(4),
        lattice: LatticeKind::Integral,
        citations: cite(&[
            "spin: Hirzebruch-Slodowy (1990)",
            "tangent bundle is H ⊗ H': Besse, Einstein Manifolds (1987), p. 312",
        ]),
    };
    finish(id, g, k, vec![iso], twist, meta)
}

/// `c * sum_{i<p} e_i + (p-2) e_p`.
fn grassmannian_twist(n: usize, p: usize, c: Rational) -> Weight {
    let mut entries = block_sum(n, 0..p, &c);
    entries.push((p, int(p as i64 - 2)));
    weight_from(n, &entries)
}

fn grassmannian_odd(id: CaseId, p: usize, q: usize) -> Result<SymmetricSpaceCase> {
    let m = (q - 1) / 2;
    let n = p + m;
    let g = simple(SimpleType::B(n))?;
    let k = RootSystem::product(
        n,
        vec![
            (SimpleType::D(p), (0..p).collect()),
            (SimpleType::B(m), (p..n).collect()),
        ],
    )?;
    let iso = weight_from(n, &[(0, int(1)), (p, int(1))]);
    let twist = grassmannian_twist(n, p, frac(q as i64 - 2, 2));
    let dimension = (2 * p * q) as u32;
    let mut citations = cite(&["not spin: Hirzebruch-Slodowy (1990)"]);
    if p % 2 == 1 {
        citations.push("dimension 2pq is 2 mod 4; twist is not self-dual for p odd".into());
    }
    let meta = Metadata {
        dimension,
        is_spin: false,
        twist_globally_defined: true,
        locally_defined_twist: true,
        b0: 1,
        b2: 0,
        usable: dimension.is_multiple_of(4),
        lattice: LatticeKind::Integral,
        citations,
    };
    finish(id, g, k, vec![iso], twist, meta)
}

fn e8_spin16(id: CaseId, kk: u32) -> Result<SymmetricSpaceCase> {
    let g = simple(SimpleType::E8)?;
    let k = RootSystem::product(8, vec![(SimpleType::D(8), (0..8).collect())])?;
    let iso = Weight::halves(&[1; 8]);
    let twist = weight_from(8, &[(0, int(2 * i64::from(kk)))]);
    let meta = Metadata {
        dimension: 128,
        is_spin: true,
        twist_globally_defined: true,
        locally_defined_twist: false,
        b0: 1,
        b2: 0,
        usable: true,
        lattice: LatticeKind::WeightLattice,
        citations: cite(&[
            "spin: Hirzebruch-Slodowy (1990)",
            "Spin(16) tensor products: Onishchik-Vinberg, Lie Groups and Algebraic Groups (1990), p. 303",
        ]),
    };
    finish(id, g, k, vec![iso], twist, meta)
}

fn f4_spin9(id: CaseId) -> Result<SymmetricSpaceCase> {
    let g = simple(SimpleType::F4)?;
    let k = RootSystem::product(4, vec![(SimpleType::B(4), (0..4).collect())])?;
    let meta = Metadata {
        dimension: 16,
        is_spin: true,
        twist_globally_defined: true,
        locally_defined_twist: false,
        b0: 1,
        b2: 0,
        usable: true,
        lattice: LatticeKind::WeightLattice,
        citations: cite(&[
            "spin: Hirzebruch-Slodowy (1990)",
            "tangent bundle from the spin representation: Besse, Einstein Manifolds (1987), p. 302",
        ]),
    };
    finish(
        id,
        g,
        k,
        vec![Weight::halves(&[1, 1, 1, 1])],
        Weight::unit(4, 0),
        meta,
    )
}

/// First fundamental weight of `A7` inside the sum-zero hyperplane.
pub fn a7_first_fundamental() -> Weight {
    Weight::new(
        (0..8)
            .map(|i| if i == 0 { frac(7, 8) } else { frac(-1, 8) })
            .collect(),
    )
}

fn e7_su8(id: CaseId) -> Result<SymmetricSpaceCase> {
    let g = simple(SimpleType::E7)?;
    let k = RootSystem::product(8, vec![(SimpleType::A(7), (0..8).collect())])?;
    let iso = Weight::halves(&[1, 1, 1, 1, -1, -1, -1, -1]);
    let twist = a7_first_fundamental().scale_int(10);
    let meta = Metadata {
        dimension: 70,
        // rho_G - rho_K lies in the E7 weight lattice
        is_spin: true,
        twist_globally_defined: true,
        locally_defined_twist: false,
        b0: 1,
        b2: 0,
        usable: false,
        lattice: LatticeKind::WeightLattice,
        citations: cite(&[
            "dimension 70 is 2 mod 4; the Sym^10 twist of the SU(8) standard bundle is not self-dual",
            "spin structure: from the weight-lattice check",
        ]),
    };
    finish(id, g, k, vec![iso], twist, meta)
}

fn hp_n(id: CaseId, n: usize) -> Result<SymmetricSpaceCase> {
    let g = simple(SimpleType::C(n + 1))?;
    let k = RootSystem::product(
        n + 1,
        vec![
            (SimpleType::C(1), vec![0]),
            (SimpleType::C(n), (1..=n).collect()),
        ],
    )?;
    let iso = weight_from(n + 1, &[(0, int(1)), (1, int(1))]);
    let twist = weight_from(n + 1, &[(0, int(n as i64 - 2))]);
    let dimension = (4 * n) as u32;
    let meta = Metadata {
        dimension,
        is_spin: true,
        twist_globally_defined: true,
        locally_defined_twist: false,
        b0: 1,
        b2: 0,
        usable: true,
        lattice: LatticeKind::Integral,
        citations: cite(&[
            "spin, and H, E globally defined: Salamon (1982)",
            "b2 = 0 and the index of R^{p,q}: LeBrun-Salamon (1994)",
        ]),
    };
    finish(id, g, k, vec![iso], twist, meta)
}

/// `c (e_0 - e_{n+1})` in the `n+2` coordinates of `gr2_cn2`.
fn gr2_h_multiple(n: usize, c: Rational) -> Weight {
    weight_from(n + 2, &[(0, c.clone()), (n + 1, -c)])
}

fn gr2_cn2(id: CaseId, n: usize) -> Result<SymmetricSpaceCase> {
    let amb = n + 2;
    let g = simple(SimpleType::A(n + 1))?;
    let k = RootSystem::product(
        amb,
        vec![
            (SimpleType::A(1), vec![0, n + 1]),
            (SimpleType::A(n - 1), (1..=n).collect()),
        ],
    )?;
    let iso = vec![
        weight_from(amb, &[(0, int(1)), (n, int(-1))]),
        weight_from(amb, &[(1, int(1)), (n + 1, int(-1))]),
    ];
    let twist = gr2_h_multiple(n, frac(n as i64 - 2, 2));
    let dimension = (4 * n) as u32;
    let meta = Metadata {
        dimension,
        is_spin: n.is_multiple_of(2),
        twist_globally_defined: true,
        locally_defined_twist: n % 2 == 1,
        b0: 1,
        b2: 1,
        usable: true,
        lattice: LatticeKind::WeightLattice,
        citations: cite(&[
            "spin iff n even: Salamon (1982)",
            "b2 = 1: LeBrun-Salamon (1994)",
        ]),
    };
    finish(id, g, k, iso, twist, meta)
}

impl SymmetricSpaceCase {
    pub fn name(&self) -> String {
        self.id.to_string()
    }

    pub fn ambient_rank(&self) -> usize {
        self.g.ambient_rank()
    }

    /// `rho_G - rho_K`, the highest weight of the spinor module of the isotropy
    /// representation.
    pub fn spinor_shift(&self) -> Weight {
        &self.rho_g - &self.rho_k
    }

    pub fn in_character_lattice(&self, w: &Weight) -> bool {
        match self.metadata.lattice {
            LatticeKind::Integral => w.is_integral(),
            LatticeKind::WeightLattice => self.g.in_weight_lattice(w),
        }
    }

    /// Diagnostic for `E ⊗ ΣM` being globally defined: `mu + rho_G - rho_K`
    /// must be a character of the torus of `G`. Weights of the product differ
    /// from this one by roots, so one weight decides.
    pub fn twist_lattice_check(&self, mu: &Weight) -> bool {
        self.in_character_lattice(&(mu + &self.spinor_shift()))
    }

    /// Diagnostic for `M` being spin.
    pub fn spin_lattice_check(&self) -> bool {
        self.in_character_lattice(&self.spinor_shift())
    }

    /// Diagnostic for `E` being globally defined on its own.
    pub fn twist_is_global(&self, mu: &Weight) -> bool {
        self.in_character_lattice(mu)
    }

    /// Twist with a different highest weight, checked to be `K`-dominant.
    pub fn with_twist(&self, mu: Weight) -> Result<IrrepLabel> {
        IrrepLabel::new(self.k.clone(), mu)
    }

    /// Checks the structural invariants of the entry.
    pub fn validate(&self) -> Result<()> {
        let fail = |detail: String| {
            Err(Error::Invariant {
                case: self.name(),
                detail,
            })
        };
        if self.rho_g != self.g.half_sum_positive_roots()
            || self.rho_k != self.k.half_sum_positive_roots()
        {
            return fail("stored rho differs from the half-sum of positive roots".into());
        }
        if let Some(r) = self
            .k
            .positive_roots()
            .iter()
            .find(|r| !self.g.positive_roots().contains(r))
        {
            return fail(format!("K root {r} is not a positive root of G"));
        }
        let mut char_total = WeightMultiset::new();
        let mut dim_total = BigInt::from(0);
        for rep in &self.isotropy {
            for (w, m) in weight_multiplicities(rep).iter() {
                char_total.insert(w.clone(), m);
            }
            dim_total += rep.dim();
        }
        let expected: WeightMultiset = self
            .g
            .positive_roots()
            .iter()
            .filter(|r| !self.k.positive_roots().contains(r))
            .flat_map(|r| [(r.clone(), 1), (-r, 1)])
            .collect();
        if char_total != expected {
            return fail("isotropy weights differ from the roots of G outside K".into());
        }
        if dim_total != BigInt::from(self.metadata.dimension) {
            return fail(format!(
                "isotropy dimension {dim_total} differs from dimension {}",
                self.metadata.dimension
            ));
        }
        if self.metadata.usable && !self.metadata.dimension.is_multiple_of(4) {
            return fail("usable case must have dimension divisible by 4".into());
        }
        Ok(())
    }

    /// Betti numbers of `HP^n`: one in each degree divisible by 4 up to `4n`,
    /// and zero in negative degrees.
    pub fn betti(&self, i: i64) -> Option<u32> {
        match self.id {
            CaseId::HpN { n } => Some(u32::from(i >= 0 && i % 4 == 0 && i <= 4 * i64::from(n))),
            _ => None,
        }
    }
}

/// The six weights `mu_1, ..., mu_6` obtained for `gr_real_even` by applying
/// the standard-representation tensor rules to each factor of `K`.
pub fn grassmannian_formula_weights(p: usize, q_half: usize) -> Vec<Weight> {
    let n = p + q_half;
    let qh = q_half as i64;
    let pi = p as i64;
    // first block of mu_1/3/5 and of mu_2/4/6
    let head_a: Vec<(usize, Rational)> = (0..p)
        .map(|i| (i, int(if i == 0 { qh } else { qh - 1 })))
        .collect();
    let head_b: Vec<(usize, Rational)> = (0..p)
        .map(|i| (i, int(if i + 1 == p { qh - 2 } else { qh - 1 })))
        .collect();
    let tails: [Vec<(usize, Rational)>; 3] = [
        vec![(p, int(pi - 1))],
        vec![(p, int(pi - 2)), (p + 1, int(1))],
        vec![(p, int(pi - 3))],
    ];
    let mut out = Vec::with_capacity(6);
    for tail in &tails {
        for head in [&head_a, &head_b] {
            let mut entries = head.clone();
            entries.extend(tail.iter().cloned());
            out.push(weight_from(n, &entries));
        }
    }
    out
}

/// Summands of `Sym^{n-2} H ⊗ (E ⊗ H) = Sym^{n-1} H ⊗ E ⊕ Sym^{n-3} H ⊗ E`,
/// with `Sym^{-1} = 0`. For `gr2_cn2` the bundle `E` splits in two.
pub fn wolf_space_twist_summands(case: &SymmetricSpaceCase) -> Result<Vec<IrrepLabel>> {
    let (n, h, es): (usize, Weight, Vec<Weight>) = match case.id {
        CaseId::HpN { n } => {
            let n = n as usize;
            (n, Weight::unit(n + 1, 0), vec![Weight::unit(n + 1, 1)])
        }
        CaseId::Gr2Cn2 { n } => {
            let n = n as usize;
            let half = frac(1, 2);
            (
                n,
                gr2_h_multiple(n, half.clone()),
                vec![
                    weight_from(
                        n + 2,
                        &[(0, half.clone()), (n + 1, half.clone()), (n, int(-1))],
                    ),
                    weight_from(n + 2, &[(0, -half.clone()), (n + 1, -half), (1, int(1))]),
                ],
            )
        }
        _ => {
            return Err(Error::InvalidParams {
                case: case.name(),
                reason: "Clebsch-Gordan summands are defined for hp_n and gr2_cn2 only".into(),
            })
        }
    };
    if n < 2 {
        return Err(Error::InvalidParams {
            case: case.name(),
            reason: "requires n >= 2".into(),
        });
    }
    let mut out = Vec::new();
    for power in [n as i64 - 1, n as i64 - 3] {
        if power < 0 {
            continue;
        }
        for e in &es {
            out.push(case.with_twist(&h.scale_int(power) + e)?);
        }
    }
    Ok(out)
}

/// Representative set of entries for the manifest and the `catalog` command.
pub fn default_case_ids() -> Vec<CaseId> {
    vec![
        CaseId::GrRealEven { p: 2, q_half: 2 },
        CaseId::GrRealEven { p: 3, q_half: 2 },
        CaseId::GrRealOddQ { p: 2, q: 3 },
        CaseId::GrRealOddQ { p: 4, q: 5 },
        CaseId::GrRealOddPQ { p: 3, q: 3 },
        CaseId::E8Spin16 { k: DEFAULT_E8_K },
        CaseId::F4Spin9,
        CaseId::E7Su8,
        CaseId::HpN { n: 2 },
        CaseId::HpN { n: 3 },
        CaseId::Gr2Cn2 { n: 2 },
        CaseId::Gr2Cn2 { n: 3 },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestParam {
    pub name: &'static str,
    pub value: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestRecord {
    pub name: String,
    pub family: &'static str,
    pub params: Vec<ManifestParam>,
    pub g: String,
    pub k: String,
    pub rho_g: Weight,
    pub rho_k: Weight,
    pub isotropy: Vec<Weight>,
    pub twist: Weight,
    pub metadata: Metadata,
}

impl From<&SymmetricSpaceCase> for ManifestRecord {
    fn from(c: &SymmetricSpaceCase) -> Self {
        let fam = c.id.family();
        ManifestRecord {
            name: c.name(),
            family: fam.name(),
            params: fam
                .param_names()
                .iter()
                .zip(c.id.params())
                .map(|(&name, value)| ManifestParam { name, value })
                .collect(),
            g: c.g.label().to_string(),
            k: c.k.label().to_string(),
            rho_g: c.rho_g.clone(),
            rho_k: c.rho_k.clone(),
            isotropy: c
                .isotropy
                .iter()
                .map(|r| r.highest_weight().clone())
                .collect(),
            twist: c.twist.highest_weight().clone(),
            metadata: c.metadata.clone(),
        }
    }
}

pub fn manifest(cases: &[SymmetricSpaceCase]) -> Vec<ManifestRecord> {
    cases.iter().map(ManifestRecord::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::tensor_decompose;

    fn get(id: CaseId) -> SymmetricSpaceCase {
        catalog_get_with(id, &Limits::default()).unwrap()
    }

    #[test]
    fn grassmannian_even_small() {
        let c = get(CaseId::GrRealEven { p: 2, q_half: 2 });
        assert_eq!(c.rho_g, Weight::from_ints(&[3, 2, 1, 0]));
        assert_eq!(c.rho_k, Weight::from_ints(&[1, 0, 1, 0]));
        assert_eq!(c.isotropy.len(), 1);
        assert_eq!(
            c.isotropy[0].highest_weight(),
            &Weight::from_ints(&[1, 0, 1, 0])
        );
        assert_eq!(c.metadata.dimension, 16);
    }

    #[test]
    fn grassmannian_twist_pattern() {
        let c = get(CaseId::GrRealEven { p: 3, q_half: 2 });
        assert_eq!(
            c.twist.highest_weight(),
            &Weight::from_ints(&[1, 1, 1, 1, 0])
        );
    }

    #[test]
    fn e8_entry() {
        let c = get(CaseId::E8Spin16 { k: 8 });
        assert_eq!(c.rho_k, Weight::from_ints(&[7, 6, 5, 4, 3, 2, 1, 0]));
        assert_eq!(c.rho_g, Weight::from_ints(&[23, 6, 5, 4, 3, 2, 1, 0]));
        assert_eq!(c.isotropy[0].highest_weight(), &Weight::halves(&[1; 8]));
        assert_eq!(
            c.twist.highest_weight(),
            &Weight::from_ints(&[16, 0, 0, 0, 0, 0, 0, 0])
        );
        assert_eq!(c.metadata.b0, 1);
    }

    #[test]
    fn f4_entry() {
        let c = get(CaseId::F4Spin9);
        assert_eq!(c.rho_k, Weight::halves(&[7, 5, 3, 1]));
        assert_eq!(c.rho_g, Weight::halves(&[11, 5, 3, 1]));
        assert_eq!(c.twist.highest_weight(), &Weight::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn hp_entry() {
        let c = get(CaseId::HpN { n: 2 });
        assert_eq!(c.g.label().to_string(), "C3");
        assert_eq!(c.k.label().to_string(), "C1xC2");
        assert_eq!(
            c.isotropy[0].highest_weight(),
            &Weight::from_ints(&[1, 1, 0])
        );
        assert_eq!((c.metadata.b0, c.metadata.b2), (1, 0));
        assert_eq!(c.betti(-2), Some(0));
        assert_eq!(c.betti(8), Some(1));
        assert_eq!(c.betti(10), Some(0));
    }

    #[test]
    fn e7_isotropy_is_seventy_dimensional() {
        let c = get(CaseId::E7Su8);
        assert_eq!(c.isotropy[0].dim(), BigInt::from(70));
        assert!(!c.metadata.usable);
    }

    #[test]
    fn every_default_case_validates() {
        for id in default_case_ids() {
            let c = get(id);
            assert_eq!(
                c.metadata.usable,
                c.metadata.dimension.is_multiple_of(4),
                "{}",
                c.name()
            );
        }
    }

    #[test]
    fn grassmannian_k_roots_live_on_blocks() {
        let (p, qh) = (3, 4);
        let c = get(CaseId::GrRealEven { p: 3, q_half: 4 });
        let expected: Vec<&Weight> =
            c.g.positive_roots()
                .iter()
                .filter(|r| {
                    let support: Vec<usize> = (0..p + qh).filter(|&i| r[i] != int(0)).collect();
                    support.iter().all(|&i| i < p) || support.iter().all(|&i| i >= p)
                })
                .collect();
        assert_eq!(expected.len(), c.k.positive_roots().len());
        assert!(expected.iter().all(|r| c.k.positive_roots().contains(r)));
    }

    #[test]
    fn lattice_diagnostics_match_metadata() {
        for id in default_case_ids() {
            let c = get(id);
            let mu = c.twist.highest_weight();
            assert_eq!(
                c.spin_lattice_check(),
                c.metadata.is_spin,
                "spin {}",
                c.name()
            );
            assert_eq!(
                c.twist_lattice_check(mu),
                c.metadata.twist_globally_defined,
                "descent {}",
                c.name()
            );
            assert_eq!(
                !c.twist_is_global(mu),
                c.metadata.locally_defined_twist,
                "twist {}",
                c.name()
            );
        }
    }

    #[test]
    fn parameter_errors() {
        let lim = Limits::default();
        assert!(catalog_get_with(CaseId::GrRealEven { p: 1, q_half: 3 }, &lim).is_err());
        assert!(catalog_get_with(CaseId::GrRealOddQ { p: 2, q: 1 }, &lim).is_err());
        assert!(catalog_get_with(CaseId::GrRealOddQ { p: 3, q: 3 }, &lim).is_err());
        assert!(catalog_get_with(CaseId::HpN { n: 1 }, &lim).is_err());
        assert!(catalog_get_with(CaseId::HpN { n: 13 }, &lim).is_err());
        assert!(catalog_get_with(CaseId::HpN { n: 13 }, &Limits { max_param: 13 }).is_ok());
        assert!(matches!(
            CaseId::parse("nope", &[]),
            Err(Error::UnknownCase(_))
        ));
        assert!(CaseId::parse("hp", &[]).is_err());
    }

    #[test]
    fn name_parsing() {
        assert_eq!(CaseId::parse("f4-spin9", &[]).unwrap(), CaseId::F4Spin9);
        assert_eq!(
            CaseId::parse("e8_spin16", &[]).unwrap(),
            CaseId::E8Spin16 { k: 8 }
        );
        assert_eq!(CaseId::parse("hp", &[3]).unwrap(), CaseId::HpN { n: 3 });
        assert_eq!(
            CaseId::parse("GR2-CN2", &[4]).unwrap(),
            CaseId::Gr2Cn2 { n: 4 }
        );
        assert_eq!(
            CaseId::GrRealEven { p: 2, q_half: 3 }.to_string(),
            "gr_real_even(p=2,q'=3)"
        );
    }

    #[test]
    fn wolf_summands_shape() {
        let c3 = get(CaseId::HpN { n: 3 });
        let s: Vec<Weight> = wolf_space_twist_summands(&c3)
            .unwrap()
            .iter()
            .map(|r| r.highest_weight().clone())
            .collect();
        assert_eq!(
            s,
            vec![
                Weight::from_ints(&[2, 1, 0, 0]),
                Weight::from_ints(&[0, 1, 0, 0])
            ]
        );
        let c2 = get(CaseId::HpN { n: 2 });
        assert_eq!(wolf_space_twist_summands(&c2).unwrap().len(), 1);
        assert_eq!(
            wolf_space_twist_summands(&get(CaseId::Gr2Cn2 { n: 2 }))
                .unwrap()
                .len(),
            2
        );
        assert!(wolf_space_twist_summands(&get(CaseId::F4Spin9)).is_err());
    }

    #[test]
    fn wolf_summands_match_tensor_product() {
        for id in [
            CaseId::HpN { n: 2 },
            CaseId::HpN { n: 5 },
            CaseId::Gr2Cn2 { n: 2 },
            CaseId::Gr2Cn2 { n: 4 },
        ] {
            let c = get(id);
            let mut klimyk = WeightMultiset::new();
            for iso in &c.isotropy {
                for (w, m) in tensor_decompose(&c.twist, iso).unwrap().iter() {
                    klimyk.insert(w.clone(), m);
                }
            }
            let cg: WeightMultiset = wolf_space_twist_summands(&c)
                .unwrap()
                .into_iter()
                .map(|r| (r.highest_weight().clone(), 1))
                .collect();
            assert_eq!(klimyk, cg, "{}", c.name());
        }
    }

    #[test]
    fn formula_weights_first_is_cartan_sum() {
        let w = grassmannian_formula_weights(2, 2);
        assert_eq!(w[0], Weight::from_ints(&[2, 1, 1, 0]));
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn manifest_serializes() {
        let cases: Vec<_> = [CaseId::F4Spin9, CaseId::HpN { n: 2 }]
            .into_iter()
            .map(get)
            .collect();
        let json = serde_json::to_string(&manifest(&cases)).unwrap();
        assert!(json.starts_with(r#"[{"name":"f4_spin9","family":"f4_spin9","params":[]"#));
    }
}
