//! Finite posets, the three concrete orders, and certificates for maps
//! between them.

pub mod certify;
pub mod orders;
pub mod poset;

pub use certify::{
    check_galois, check_interval_retract, fiber_interval, GaloisReport, PosetMapPair, RetractReport,
};
pub use orders::{
    bileveled_order, cached_bileveled_order, cached_tamari, cached_weak_order, rotations, tamari,
    tamari_by_min_perm, weak_covers, weak_order,
};
pub use poset::FinitePoset;
