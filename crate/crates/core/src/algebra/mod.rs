//! Free modules over the tree families: fundamental and monomial bases,
//! products, coproducts, actions, the coaction, and checks of the identities
//! relating them.

pub mod checks;
pub mod combo;
pub mod monomial;
pub mod ops;

pub use checks::{
    check_coaction_coassociative, check_eq8, check_hopf_module, check_monomial_coaction,
    check_tau_monomial, Check,
};
pub use combo::{Basis, Family, Key, LinearCombo, TensorCombo};
pub use monomial::{
    apply_linear_map, coaction_monomial, coaction_transported, coinvariant_basis, convert,
    from_monomial, to_monomial, upper_set_with_mobius, LinearMap,
};
pub use ops::{
    act, action_ssym, action_ysym, coact, coaction, coproduct, coproduct_fund, product,
    product_fund, product_msym, shuffle_product, tensor_action, tree_product,
};
