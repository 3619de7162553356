#![allow(dead_code)]

use homassoc::catalog::{catalog_entries, catalog_get, Params};
use homassoc::HomAlgebra;

pub fn default(id: &str) -> HomAlgebra {
    catalog_get(id, &Params::new()).unwrap()
}

/// Every catalog entry at its default parameters.
pub fn all_defaults() -> Vec<(&'static str, HomAlgebra)> {
    catalog_entries().iter().map(|e| (e.id, e.instantiate(&e.default_params()).unwrap())).collect()
}
