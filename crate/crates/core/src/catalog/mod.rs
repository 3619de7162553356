//! Built-in, parameterized definitions of the classified algebras.
//!
//! Ids follow the scheme `A2_k` / `A3_k` (multiplicative classification),
//! `U2_k` / `U3_k` (unital classification), `T2_k` (twists of the matrix
//! algebra `M2` by morphism `k`), and `AT*` / `AU*` (compatible associative
//! algebras of associative-type entries).

mod data;
pub(crate) mod expr;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use homassoc_exact::{GaussianRational, Matrix, Vector};

use crate::algebra::{Cochain, HomAlgebra};
use crate::cohomology::{rank_certificate, CohomologyTable, RankCertificate};
use crate::constructions::{untwist, yau_twist};
use crate::error::{AlgebraError, Result};
use crate::verify::{check_associative, check_hom_associative, check_morphism, check_multiplicative, check_unital, VerificationReport};

use expr::{eval_vector, Env};

pub type Params = BTreeMap<String, GaussianRational>;

pub(crate) type Constraint = fn(&Params) -> std::result::Result<(), String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Dim2,
    Dim3,
    Unital2,
    Unital3,
    TwistedM2,
    Untwists,
    Base,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::Dim2, Family::Dim3, Family::Unital2, Family::Unital3, Family::TwistedM2, Family::Untwists, Family::Base];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dim2 => "dim2",
            Family::Dim3 => "dim3",
            Family::Unital2 => "unital2",
            Family::Unital3 => "unital3",
            Family::TwistedM2 => "twistedM2",
            Family::Untwists => "untwists",
            Family::Base => "base",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: i64,
    /// The parameter appears in a denominator or the twist must stay invertible.
    pub nonzero: bool,
}

/// Dimensions of `Z²`, `H²`, `Z³`, `H³` as published with the classification;
/// `None` where no value is given.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PublishedCohomology {
    pub z2: Option<usize>,
    pub h2: Option<usize>,
    pub z3: Option<usize>,
    pub h3: Option<usize>,
}

type ProductRow = (&'static str, &'static str, &'static str);

#[derive(Clone, Copy, Debug)]
pub(crate) enum Template {
    Table {
        basis: &'static [&'static str],
        unit: Option<usize>,
        products: &'static [ProductRow],
        twist: &'static [(&'static str, &'static str)],
    },
    /// `yau_twist(M2, φ)` with the images of the matrix units under `φ`.
    Twisted { images: &'static [(&'static str, &'static str)] },
    /// `untwist` of another entry.
    Untwist { of: &'static str },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub family: Family,
    pub provenance: &'static str,
    pub(crate) params: &'static [ParamSpec],
    pub(crate) template: Template,
    /// The product table as published, where it is not the source of truth.
    pub(crate) printed: Option<&'static [ProductRow]>,
    pub published_cohomology: PublishedCohomology,
    pub(crate) constraint: Option<Constraint>,
    /// Parameter values that avoid accidental coincidences when comparing
    /// against printed tables.
    pub(crate) probe: &'static [(&'static str, i64)],
}

fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let mut v = data::entries();
        v.sort_by(|a, b| a.id.cmp(b.id));
        v
    })
}

/// Every entry, sorted by id.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    entries()
}

pub fn catalog_entry(id: &str) -> Result<&'static CatalogEntry> {
    entries().iter().find(|e| e.id == id).ok_or_else(|| AlgebraError::UnknownCatalogId(id.to_string()))
}

impl CatalogEntry {
    /// Parameters including those inherited from the untwisted entry.
    pub fn params(&self) -> &'static [ParamSpec] {
        match self.template {
            Template::Untwist { of } => catalog_entry(of).map(|e| e.params()).unwrap_or(&[]),
            _ => self.params,
        }
    }

    pub fn basis_names(&self) -> Vec<String> {
        match self.template {
            Template::Table { basis, .. } => basis.iter().map(|s| s.to_string()).collect(),
            Template::Twisted { .. } => data::M2_BASIS.iter().map(|s| s.to_string()).collect(),
            Template::Untwist { of } => catalog_entry(of).map(|e| e.basis_names()).unwrap_or_default(),
        }
    }

    pub fn is_unital(&self) -> bool {
        match self.template {
            Template::Table { unit, .. } => unit.is_some(),
            Template::Twisted { .. } => false,
            Template::Untwist { of } => catalog_entry(of).map(|e| e.is_unital()).unwrap_or(false),
        }
    }

    /// Id of the entry this one is the compatible associative algebra of.
    pub fn untwist_of(&self) -> Option<&'static str> {
        match self.template {
            Template::Untwist { of } => Some(of),
            _ => None,
        }
    }

    pub fn has_printed_table(&self) -> bool {
        self.printed.is_some()
    }

    pub fn default_params(&self) -> Params {
        self.params().iter().map(|p| (p.name.to_string(), GaussianRational::from_integer(p.default))).collect()
    }

    /// Defaults overridden by the probe values.
    pub fn probe_params(&self) -> Params {
        let mut ps = self.default_params();
        for (k, v) in self.probe {
            ps.insert(k.to_string(), GaussianRational::from_integer(*v));
        }
        ps
    }

    /// Fills in defaults and checks admissibility.
    pub fn resolve_params(&self, given: &Params) -> Result<Params> {
        let specs = self.params();
        let mut ps = self.default_params();
        for (k, v) in given {
            if !specs.iter().any(|s| s.name == k) {
                return Err(AlgebraError::InadmissibleParameter {
                    name: k.clone(),
                    reason: format!("{} has no parameter of this name", self.id),
                });
            }
            ps.insert(k.clone(), v.clone());
        }
        for s in specs.iter().filter(|s| s.nonzero) {
            if ps[s.name].is_zero() {
                return Err(AlgebraError::InadmissibleParameter { name: s.name.to_string(), reason: "must be nonzero".into() });
            }
        }
        let own = match self.template {
            Template::Untwist { of } => catalog_entry(of)?.constraint,
            _ => self.constraint,
        };
        if let Some(check) = own {
            check(&ps).map_err(|reason| AlgebraError::InadmissibleParameter { name: self.id.to_string(), reason })?;
        }
        Ok(ps)
    }

    /// The morphism of `M2` used by a twisted entry.
    pub fn twisting_morphism(&self, params: &Params) -> Result<Option<Matrix>> {
        let Template::Twisted { images } = self.template else {
            return Ok(None);
        };
        let ps = self.resolve_params(params)?;
        let env = Env { basis: data::M2_BASIS, params: &ps };
        let cols = images.iter().map(|(_, e)| eval_vector(e, &env)).collect::<Result<Vec<_>>>()?;
        Ok(Some(Matrix::from_columns(4, &cols)?))
    }

    pub fn instantiate(&self, params: &Params) -> Result<HomAlgebra> {
        let ps = self.resolve_params(params)?;
        let a = match self.template {
            Template::Table { basis, unit, products, twist } => table_algebra(self.id, basis, unit, products, twist, &ps)?,
            Template::Twisted { .. } => {
                let phi = self.twisting_morphism(&ps)?.expect("twisted template");
                yau_twist(&matrix_algebra()?, &phi)?
            }
            Template::Untwist { of } => {
                let base = catalog_entry(of)?.instantiate(&ps)?;
                untwist(&base).map_err(|e| match e {
                    AlgebraError::NotInvertible(_) => {
                        AlgebraError::InadmissibleParameter { name: self.id.to_string(), reason: "the twist is not invertible".into() }
                    }
                    other => other,
                })?
            }
        };
        Ok(a.with_label(self.id))
    }
}

fn table_algebra(
    id: &str,
    basis: &[&str],
    unit: Option<usize>,
    products: &[ProductRow],
    twist: &[(&str, &str)],
    ps: &Params,
) -> Result<HomAlgebra> {
    let n = basis.len();
    let env = Env { basis, params: ps };
    let index = |name: &str| {
        basis
            .iter()
            .position(|b| *b == name)
            .ok_or_else(|| AlgebraError::Precondition(format!("table of {id} names unknown basis element {name}")))
    };
    let mut a = HomAlgebra::zero(id, n);
    for (l, r, e) in products {
        a.set_product(index(l)?, index(r)?, &eval_vector(e, &env)?)?;
    }
    for (x, e) in twist {
        a.set_twist_image(index(x)?, &eval_vector(e, &env)?)?;
    }
    a.with_unit(unit)
}

/// The 2x2 matrix algebra with identity twist, basis `E11, E12, E21, E22`.
pub fn matrix_algebra() -> Result<HomAlgebra> {
    catalog_entry("M2")?.instantiate(&Params::new())
}

/// Instantiates an entry; missing parameters take their default values.
pub fn catalog_get(id: &str, params: &Params) -> Result<HomAlgebra> {
    catalog_entry(id)?.instantiate(params)
}

/// Ids in alphabetical order, optionally restricted to one family.
pub fn catalog_list(filter: Option<Family>) -> Vec<&'static str> {
    entries().iter().filter(|e| filter.is_none_or(|f| e.family == f)).map(|e| e.id).collect()
}

/// A product that differs between the published table and the instantiated
/// algebra, which is taken as ground truth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDiscrepancy {
    pub id: &'static str,
    pub left: String,
    pub right: String,
    pub params: Params,
    pub printed: Vector,
    pub computed: Vector,
}

/// Compares the published product table of an entry with its instantiation.
/// Products absent from the published table are read as zero.
pub fn printed_discrepancies(id: &str, params: &Params) -> Result<Vec<TableDiscrepancy>> {
    let entry = catalog_entry(id)?;
    let Some(printed) = entry.printed else {
        return Ok(Vec::new());
    };
    let ps = entry.resolve_params(params)?;
    let a = entry.instantiate(&ps)?;
    let names = entry.basis_names();
    let basis: Vec<&str> = names.iter().map(String::as_str).collect();
    let n = basis.len();
    let env = Env { basis: &basis, params: &ps };
    let mut table = Cochain::zero(n, 2);
    for (l, r, e) in printed {
        let (i, j) = (position(&basis, l)?, position(&basis, r)?);
        table.set_at_basis(&[i, j], &eval_vector(e, &env)?);
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (printed_v, computed) = (table.at_basis(&[i, j]), a.mul_basis(i, j));
            if printed_v != computed {
                out.push(TableDiscrepancy {
                    id: entry.id,
                    left: names[i].clone(),
                    right: names[j].clone(),
                    params: ps.clone(),
                    printed: printed_v.to_vec(),
                    computed: computed.to_vec(),
                });
            }
        }
    }
    Ok(out)
}

fn position(basis: &[&str], name: &str) -> Result<usize> {
    basis
        .iter()
        .position(|b| *b == name)
        .ok_or_else(|| AlgebraError::Precondition(format!("unknown basis element {name}")))
}

/// Checks run on one entry at its default parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryVerification {
    pub id: &'static str,
    pub family: Family,
    pub hom_associative: Option<VerificationReport>,
    pub multiplicative: Option<VerificationReport>,
    pub unital: Option<VerificationReport>,
    /// Untwist entries: plain associativity.
    pub associative: Option<VerificationReport>,
    /// Untwist entries: the twist of the original entry is a morphism of the
    /// compatible algebra. Twisted entries: the twisting map is a morphism of `M2`.
    pub morphism: Option<VerificationReport>,
    /// Published-table mismatches, at defaults and at probe parameters.
    pub discrepancies: Vec<TableDiscrepancy>,
    pub error: Option<String>,
}

impl EntryVerification {
    /// All checks hold; discrepancies against published tables do not count.
    pub fn passes(&self) -> bool {
        self.error.is_none()
            && [&self.hom_associative, &self.multiplicative, &self.unital, &self.associative, &self.morphism]
                .into_iter()
                .flatten()
                .all(|r| r.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogReport {
    pub entries: Vec<EntryVerification>,
}

impl CatalogReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(EntryVerification::passes)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &TableDiscrepancy> {
        self.entries.iter().flat_map(|e| e.discrepancies.iter())
    }
}

pub fn verify_entry(entry: &'static CatalogEntry) -> EntryVerification {
    let mut v = EntryVerification {
        id: entry.id,
        family: entry.family,
        hom_associative: None,
        multiplicative: None,
        unital: None,
        associative: None,
        morphism: None,
        discrepancies: Vec::new(),
        error: None,
    };
    if let Err(e) = fill_verification(entry, &mut v) {
        v.error = Some(e.to_string());
    }
    v
}

fn fill_verification(entry: &'static CatalogEntry, v: &mut EntryVerification) -> Result<()> {
    let defaults = entry.default_params();
    let a = entry.instantiate(&defaults)?;
    v.hom_associative = Some(check_hom_associative(&a));
    v.multiplicative = Some(check_multiplicative(&a));
    if a.unit().is_some() {
        v.unital = Some(check_unital(&a)?);
    }
    match entry.template {
        Template::Untwist { of } => {
            let base = catalog_entry(of)?.instantiate(&defaults)?;
            v.associative = Some(check_associative(&a));
            v.morphism = Some(check_morphism(base.twist(), &a, &a)?);
        }
        Template::Twisted { .. } => {
            let phi = entry.twisting_morphism(&defaults)?.expect("twisted template");
            let m2 = matrix_algebra()?;
            v.morphism = Some(check_morphism(&phi, &m2, &m2)?);
        }
        Template::Table { .. } => {}
    }
    if entry.printed.is_some() {
        v.discrepancies = printed_discrepancies(entry.id, &defaults)?;
        let probe = entry.probe_params();
        if probe != defaults {
            v.discrepancies.extend(printed_discrepancies(entry.id, &probe)?);
        }
    }
    Ok(())
}

/// A computed cohomology dimension that differs from the published value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyMismatch {
    pub id: &'static str,
    /// One of `z2`, `h2`, `z3`, `h3`.
    pub quantity: &'static str,
    pub published: usize,
    pub computed: usize,
    pub certificate: RankCertificate,
}

/// Compares the published cohomology of an entry with a table computed for
/// the algebra `a`, returning a certified record for every difference.
pub fn cohomology_mismatches(entry: &CatalogEntry, a: &HomAlgebra, table: &CohomologyTable) -> Result<Vec<CohomologyMismatch>> {
    let p = entry.published_cohomology;
    let mut out = Vec::new();
    for (quantity, degree, published) in [("z2", 2, p.z2), ("h2", 2, p.h2), ("z3", 3, p.z3), ("h3", 3, p.h3)] {
        let (Some(published), Some(d)) = (published, table.degree(degree)) else { continue };
        let computed = if quantity.starts_with('z') { d.dim_cocycles } else { d.dim_cohomology };
        if computed != published {
            out.push(CohomologyMismatch { id: entry.id, quantity, published, computed, certificate: rank_certificate(a, d)? });
        }
    }
    Ok(out)
}

/// Verifies every entry at its default parameters. Entries are independent
/// and checked on separate threads; the report is in id order.
pub fn catalog_verify_all() -> CatalogReport {
    let all = entries();
    let entries = std::thread::scope(|s| {
        let handles: Vec<_> = all.iter().map(|e| s.spawn(move || verify_entry(e))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    CatalogReport { entries }
}
