//! Root systems, Weyl groups and the Bruhat-cell evaluation of homogeneous
//! spaces `G/B`, `G/T` and `G/N(T)`.

mod bruhat;
mod system;
mod weyl;

pub use bruhat::{
    chi_flag, chi_g_mod_normalizer, chi_g_mod_t, flag_derivation, g_mod_n_derivation,
    g_mod_t_derivation,
};
pub use system::{build_root_system, RootSystem, WEYL_ORDER_CAP};
pub use weyl::{weyl_data, weyl_enumerate, WeylData};

use crate::dsl::CartanType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("{1}")]
    InvalidType(CartanType, String),
    #[error("Cartan type {0} is not supported: its Weyl group exceeds the enumeration cap of {cap}", cap = WEYL_ORDER_CAP)]
    OverCap(CartanType),
    #[error("Weyl group of {0} exceeded the enumeration cap of {cap} elements", cap = WEYL_ORDER_CAP)]
    CapExceeded(CartanType),
}
