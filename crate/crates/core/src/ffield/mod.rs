//! Prime fields and their finite extensions.

mod extension;
mod prime;

pub use extension::{
    element_of_order, element_order, field_create, ExtensionField, ExtensionFieldElement,
    MAX_CHARACTERISTIC, MAX_DEGREE,
};
pub use prime::{factor_u128, factor_u64, is_prime, multiplicative_order_mod, PrimeFieldElement};

