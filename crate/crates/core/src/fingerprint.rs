use homassoc_exact::Vector;

use crate::algebra::HomAlgebra;
use crate::cohomology::cohomology_table;
use crate::derivations::derivation_space;
use crate::error::Result;
use crate::structure::center;

/// Isomorphism invariants, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub rank_alpha: usize,
    /// Monic characteristic polynomial of the twist, leading coefficient first.
    pub charpoly_alpha: Vector,
    pub der0: usize,
    pub der1: usize,
    pub center: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
    pub z3: usize,
    pub h3: usize,
}

pub fn fingerprint(a: &HomAlgebra) -> Result<Fingerprint> {
    let table = cohomology_table(a, 3)?;
    let (d2, d3) = (table.degree(2).expect("degree 2"), table.degree(3).expect("degree 3"));
    Ok(Fingerprint {
        dim: a.dim(),
        rank_alpha: a.twist().rank(),
        charpoly_alpha: a.twist().charpoly()?,
        der0: derivation_space(a, 0).dim(),
        der1: derivation_space(a, 1).dim(),
        center: center(a).dim(),
        z2: d2.dim_cocycles,
        b2: d2.dim_coboundaries,
        h2: d2.dim_cohomology,
        z3: d3.dim_cocycles,
        h3: d3.dim_cohomology,
    })
}
