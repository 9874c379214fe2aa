pub mod catalog;
pub mod error;
pub mod index;
pub mod linalg;
pub mod obstruction;
pub mod parse;
pub mod reproduce;
pub mod reps;
pub mod roots;
pub mod weight;

pub use error::{Error, Result};
pub use index::{index_bbw, index_product, IndexInput};
pub use reps::{
    tensor_decompose, weight_multiplicities, weyl_dim, weyl_dim_of, IrrepLabel, WeightMultiset,
};
pub use roots::{build_root_system, DominantResult, RootSystem, SimpleType, TypeLabel};
pub use weight::{inner, Rational, Weight};
