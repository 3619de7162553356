//! Built-in tables. Products not listed are zero, twist images not listed are zero.

use super::{Constraint, CatalogEntry, Family, PublishedCohomology, ParamSpec, Params, Template};

const E2: &[&str] = &["e1", "e2"];
const E3: &[&str] = &["e1", "e2", "e3"];
pub(crate) const M2_BASIS: &[&str] = &["E11", "E12", "E21", "E22"];

const fn p(name: &'static str) -> ParamSpec {
    ParamSpec { name, default: 1, nonzero: false }
}

const fn nz(name: &'static str) -> ParamSpec {
    ParamSpec { name, default: 1, nonzero: true }
}

const fn coh(z2: usize, h2: usize, z3: Option<usize>, h3: Option<usize>) -> PublishedCohomology {
    PublishedCohomology { z2: Some(z2), h2: Some(h2), z3, h3 }
}

const NO_COH: PublishedCohomology = PublishedCohomology { z2: None, h2: None, z3: None, h3: None };

const fn table(
    basis: &'static [&'static str],
    unit: Option<usize>,
    products: &'static [(&'static str, &'static str, &'static str)],
    twist: &'static [(&'static str, &'static str)],
) -> Template {
    Template::Table { basis, unit, products, twist }
}

macro_rules! entry {
    ($id:expr, $family:expr, $prov:expr, $params:expr, $template:expr, $coh:expr) => {
        CatalogEntry {
            id: $id,
            family: $family,
            provenance: $prov,
            params: const { $params },
            template: $template,
            printed: None,
            published_cohomology: $coh,
            constraint: None,
            probe: &[],
        }
    };
}

const CLASS2: &str = "two-dimensional multiplicative classification";
const CLASS3: &str = "three-dimensional multiplicative classification";
const UNITAL2: &str = "two-dimensional unital classification";
const UNITAL3: &str = "three-dimensional unital classification";
const TWISTED: &str = "twists of the 2x2 matrix algebra by algebra morphisms";
const UNTWISTS: &str = "compatible associative algebras of associative-type entries";

fn m4_constraint(ps: &Params) -> Result<(), String> {
    if ps.get("l1").is_some_and(|v| v.is_one()) {
        Ok(())
    } else {
        Err("the map is an algebra morphism only for l1 = 1".into())
    }
}

fn m3_constraint(ps: &Params) -> Result<(), String> {
    let (g2, l1) = (&ps["g2"], &ps["l1"]);
    if &(g2 * g2) == &(l1 * l1) {
        Ok(())
    } else {
        Err("the map is an algebra morphism only for g2^2 = l1^2".into())
    }
}

fn m5_constraint(ps: &Params) -> Result<(), String> {
    let b3 = &ps["b3"];
    if b3.is_zero() || b3.is_one() {
        Ok(())
    } else {
        Err("the map is an algebra morphism only for b3 in {0, 1}".into())
    }
}

fn m8_constraint(ps: &Params) -> Result<(), String> {
    let (b1, b2, g1, g2) = (&ps["b1"], &ps["b2"], &ps["g1"], &ps["g2"]);
    if &(b1 * g2) == b2 && (g1.is_one() || g2.is_zero()) {
        Ok(())
    } else {
        Err("the map is an algebra morphism only for b1*g2 = b2 and (g1 = 1 or g2 = 0)".into())
    }
}

fn m9_constraint(ps: &Params) -> Result<(), String> {
    if ps["g4"].is_one() || ps["g2"].is_zero() {
        Ok(())
    } else {
        Err("the map is an algebra morphism only for g4 = 1 or g2 = 0".into())
    }
}

const M3_CHECK: Constraint = m3_constraint;

fn twisted(
    k: usize,
    params: &'static [ParamSpec],
    images: &'static [(&'static str, &'static str)],
    printed: &'static [(&'static str, &'static str, &'static str)],
    constraint: Option<Constraint>,
    probe: &'static [(&'static str, i64)],
) -> CatalogEntry {
    CatalogEntry {
        id: TWISTED_IDS[k - 1],
        family: Family::TwistedM2,
        provenance: TWISTED,
        params,
        template: Template::Twisted { images },
        printed: Some(printed),
        published_cohomology: NO_COH,
        constraint,
        probe,
    }
}

const TWISTED_IDS: [&str; 9] = ["T2_1", "T2_2", "T2_3", "T2_4", "T2_5", "T2_6", "T2_7", "T2_8", "T2_9"];

fn untwist_entry(
    id: &'static str,
    of: &'static str,
    printed: &'static [(&'static str, &'static str, &'static str)],
    coh: PublishedCohomology,
) -> CatalogEntry {
    CatalogEntry {
        id,
        family: Family::Untwists,
        provenance: UNTWISTS,
        params: &[],
        template: Template::Untwist { of },
        printed: Some(printed),
        published_cohomology: coh,
        constraint: None,
        probe: &[],
    }
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    let mut v = vec![
        entry!(
            "A2_1",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e1", "-e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2"), ("e2", "e2", "e1")], &[("e1", "e1"), ("e2", "-e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "A2_2",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e1", "e1"), ("e2", "e2", "e2")], &[("e1", "e1")]),
            coh(1, 0, Some(4), Some(4))
        ),
        entry!(
            "A2_3",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e1", "e1")], &[("e1", "e1")]),
            coh(3, 2, Some(6), Some(6))
        ),
        entry!(
            "A2_4",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2")], &[("e1", "e1"), ("e2", "e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "A2_5",
            Family::Dim2,
            CLASS2,
            &[ParamSpec { name: "k", default: 2, nonzero: false }],
            table(E2, None, &[("e1", "e1", "e1")], &[("e2", "k*e2")]),
            coh(1, 0, Some(4), Some(3))
        ),
        entry!(
            "A2_6",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e1", "e2")], &[("e1", "e1"), ("e2", "e2")]),
            coh(2, 1, Some(3), Some(3))
        ),
        entry!(
            "A2_7",
            Family::Dim2,
            CLASS2,
            &[p("a"), p("b"), p("c")],
            table(E2, None, &[("e1", "e2", "a*e1"), ("e2", "e1", "b*e1"), ("e2", "e2", "c*e1")], &[("e2", "e1")]),
            coh(2, 2, Some(2), Some(2))
        ),
        entry!(
            "A2_8",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e1", "e2", "e1"), ("e2", "e2", "e1 + e2")], &[("e1", "e1"), ("e2", "e1 + e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "A2_9",
            Family::Dim2,
            CLASS2,
            &[],
            table(E2, None, &[("e2", "e1", "e1"), ("e2", "e2", "e1 + e2")], &[("e1", "e1"), ("e2", "e1 + e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "A3_1",
            Family::Dim3,
            CLASS3,
            &[],
            table(
                E3,
                None,
                &[("e1", "e1", "e1"), ("e2", "e2", "e2 + e3"), ("e2", "e3", "e2 + e3"), ("e3", "e2", "e2 + e3"), ("e3", "e3", "e2 + e3")],
                &[("e1", "e1")]
            ),
            coh(12, 12, Some(42), Some(38))
        ),
        entry!(
            "A3_2",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2"), p("p3")],
            table(E3, None, &[("e1", "e1", "p1*e1"), ("e2", "e2", "p2*e2"), ("e3", "e3", "p3*e3")], &[("e1", "e1"), ("e2", "e2")]),
            coh(1, 1, Some(9), Some(9))
        ),
        entry!(
            "A3_3",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2"), p("p3")],
            table(
                E3,
                None,
                &[("e1", "e1", "p1*e1"), ("e2", "e2", "p2*e2"), ("e3", "e3", "p3*e3")],
                &[("e1", "e1"), ("e2", "e2"), ("e3", "e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "A3_4",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2"), p("p3"), p("p4"), p("p5"), p("p6")],
            table(
                E3,
                None,
                &[
                    ("e1", "e2", "p1*e1"),
                    ("e1", "e3", "p2*e1"),
                    ("e2", "e2", "p3*e1"),
                    ("e2", "e3", "p4*e1"),
                    ("e3", "e1", "p5*e1"),
                    ("e3", "e2", "p4*e1"),
                    ("e3", "e3", "p6*e1")
                ],
                &[("e2", "e1")]
            ),
            coh(7, 7, Some(2), Some(2))
        ),
        entry!(
            "A3_5",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2")],
            table(E3, None, &[("e2", "e2", "p1*e1"), ("e3", "e3", "p2*e3")], &[("e1", "e1"), ("e2", "e1 + e2")]),
            coh(1, 0, Some(11), Some(11))
        ),
        entry!(
            "A3_6",
            Family::Dim3,
            CLASS3,
            &[],
            table(
                E3,
                None,
                &[("e1", "e2", "e1"), ("e2", "e2", "e1"), ("e2", "e3", "e1"), ("e3", "e2", "e1")],
                &[("e2", "e1"), ("e3", "e3")]
            ),
            coh(3, 1, Some(18), Some(10))
        ),
        entry!(
            "A3_7",
            Family::Dim3,
            CLASS3,
            &[],
            table(
                E3,
                None,
                &[("e2", "e2", "e1"), ("e2", "e3", "e1"), ("e3", "e2", "e1"), ("e3", "e3", "e1")],
                &[("e1", "e1"), ("e2", "e1 + e2"), ("e3", "e3")]
            ),
            coh(1, 1, Some(14), Some(14))
        ),
        entry!(
            "A3_8",
            Family::Dim3,
            CLASS3,
            &[],
            table(
                E3,
                None,
                &[("e1", "e2", "-e3"), ("e2", "e1", "e3"), ("e2", "e2", "e3")],
                &[("e1", "e1"), ("e2", "e1 + e2"), ("e3", "e3")]
            ),
            coh(2, 2, Some(7), Some(7))
        ),
        entry!(
            "A3_9",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2"), ParamSpec { name: "a", default: 2, nonzero: false }],
            table(E3, None, &[("e2", "e3", "p1*e1"), ("e3", "e2", "p2*e1")], &[("e1", "a*e1"), ("e2", "e1 + a*e2"), ("e3", "e3")]),
            coh(0, 0, Some(5), Some(5))
        ),
        entry!(
            "A3_10",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2")],
            table(E3, None, &[("e2", "e2", "p1*e1"), ("e3", "e3", "p2*e1")], &[("e1", "e1"), ("e2", "e1 + e2"), ("e3", "-e3")]),
            coh(1, 0, Some(7), Some(4))
        ),
        entry!(
            "A3_11",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2"), p("p3")],
            table(E3, None, &[("e1", "e3", "p1*e1"), ("e2", "e3", "p2*e1"), ("e3", "e3", "p3*e1")], &[("e2", "e1"), ("e3", "e2")]),
            coh(2, 1, Some(19), Some(16))
        ),
        entry!(
            "A3_12",
            Family::Dim3,
            CLASS3,
            &[p("p1"), p("p2")],
            table(
                E3,
                None,
                &[("e2", "e3", "-p1*e1"), ("e3", "e2", "p1*e1"), ("e3", "e3", "p2*e1")],
                &[("e1", "e1"), ("e2", "e1 + e2"), ("e3", "e2 + e3")]
            ),
            coh(0, 0, Some(7), Some(5))
        ),
        entry!(
            "U2_1",
            Family::Unital2,
            UNITAL2,
            &[],
            table(E2, Some(0), &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2"), ("e2", "e2", "e1 + e2")], &[("e1", "e1"), ("e2", "e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U2_2",
            Family::Unital2,
            UNITAL2,
            &[],
            table(E2, Some(0), &[("e1", "e1", "e1"), ("e1", "e2", "-e2"), ("e2", "e1", "-e2"), ("e2", "e2", "e1")], &[("e1", "e1"), ("e2", "-e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U2_3",
            Family::Unital2,
            UNITAL2,
            &[],
            table(E2, Some(0), &[("e1", "e1", "e1"), ("e2", "e2", "e2")], &[("e1", "e1")]),
            coh(1, 0, Some(4), Some(2))
        ),
        entry!(
            "U2_4",
            Family::Unital2,
            UNITAL2,
            &[],
            table(E2, Some(0), &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2")], &[("e1", "e1"), ("e2", "e2")]),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_1",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e2", "e2", "e2 + e3"), ("e2", "e3", "e2 + e3"), ("e3", "e2", "e2 + e3"), ("e3", "e3", "e2 + e3")],
                &[("e1", "e1")]
            ),
            coh(12, 12, Some(42), Some(38))
        ),
        CatalogEntry {
            printed: Some(&[("e1", "e1", "e1"), ("e2", "e2", "e2"), ("e3", "e1", "e3"), ("e3", "e3", "e1 + e3")]),
            ..entry!(
                "U3_2",
                Family::Unital3,
                UNITAL3,
                &[],
                table(
                    E3,
                    Some(0),
                    &[("e1", "e1", "e1"), ("e2", "e2", "e2"), ("e1", "e3", "e3"), ("e3", "e1", "e3"), ("e3", "e3", "e1 + e3")],
                    &[("e1", "e1"), ("e3", "e3")]
                ),
                coh(1, 1, Some(11), Some(9))
            )
        },
        entry!(
            "U3_3",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e2", "e2", "e2"), ("e1", "e3", "-e3"), ("e3", "e1", "-e3"), ("e3", "e3", "e1")],
                &[("e1", "e1"), ("e3", "-e3")]
            ),
            coh(1, 0, Some(11), Some(7))
        ),
        entry!(
            "U3_4",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2"), ("e2", "e2", "e1 + e2"), ("e3", "e3", "e3")],
                &[("e1", "e1"), ("e2", "e2")]
            ),
            coh(1, 1, Some(11), Some(8))
        ),
        entry!(
            "U3_5",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "-e2"), ("e2", "e1", "-e2"), ("e2", "e2", "e1"), ("e3", "e3", "e3")],
                &[("e1", "e1"), ("e2", "-e2")]
            ),
            coh(1, 1, Some(11), Some(9))
        ),
        entry!(
            "U3_6",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "e2"),
                    ("e1", "e3", "e3"),
                    ("e2", "e1", "e2"),
                    ("e2", "e2", "e2"),
                    ("e2", "e3", "e3"),
                    ("e3", "e1", "e3"),
                    ("e3", "e2", "e3"),
                    ("e3", "e3", "e2 + e3")
                ],
                &[("e1", "e1"), ("e2", "e2"), ("e3", "e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_7",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "e2"),
                    ("e1", "e3", "-e3"),
                    ("e2", "e1", "e2"),
                    ("e2", "e2", "-e2"),
                    ("e2", "e3", "e3"),
                    ("e3", "e1", "-e3"),
                    ("e3", "e2", "e3"),
                    ("e3", "e3", "e2")
                ],
                &[("e1", "e1"), ("e2", "e2"), ("e3", "-e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_8",
            Family::Unital3,
            UNITAL3,
            &[],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "-e2"),
                    ("e1", "e3", "e3"),
                    ("e2", "e1", "-e2"),
                    ("e2", "e2", "e3"),
                    ("e2", "e3", "e2"),
                    ("e3", "e1", "e3"),
                    ("e3", "e2", "e2"),
                    ("e3", "e3", "-e3")
                ],
                &[("e1", "e1"), ("e2", "-e2"), ("e3", "e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_9",
            Family::Unital3,
            UNITAL3,
            &[p("a")],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "a*e2"), ("e1", "e3", "e3"), ("e2", "e1", "a*e2"), ("e3", "e1", "e3"), ("e3", "e3", "e3")],
                &[("e1", "e1"), ("e2", "a*e2"), ("e3", "e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_10",
            Family::Unital3,
            UNITAL3,
            &[p("a")],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "a*e2"), ("e1", "e3", "-e3"), ("e2", "e1", "a*e2"), ("e3", "e1", "-e3")],
                &[("e1", "e1"), ("e2", "a*e2"), ("e3", "-e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_11",
            Family::Unital3,
            UNITAL3,
            &[p("a")],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "a*e2"),
                    ("e1", "e3", "a^2*e3"),
                    ("e2", "e1", "a*e2"),
                    ("e2", "e2", "e3"),
                    ("e3", "e1", "a^2*e3")
                ],
                &[("e1", "e1"), ("e2", "a*e2"), ("e3", "a^2*e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_12",
            Family::Unital3,
            UNITAL3,
            &[nz("b")],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "e2"),
                    ("e1", "e3", "b*e3"),
                    ("e2", "e1", "e2"),
                    ("e2", "e2", "e2/b"),
                    ("e2", "e3", "e3"),
                    ("e3", "e1", "b*e3")
                ],
                &[("e1", "e1"), ("e2", "e2"), ("e3", "b*e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_13",
            Family::Unital3,
            UNITAL3,
            &[p("b")],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "-e2"), ("e1", "e3", "b*e3"), ("e2", "e1", "-e2"), ("e3", "e1", "b*e3")],
                &[("e1", "e1"), ("e2", "-e2"), ("e3", "b*e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_14",
            Family::Unital3,
            UNITAL3,
            &[p("b")],
            table(
                E3,
                Some(0),
                &[
                    ("e1", "e1", "e1"),
                    ("e1", "e2", "b^2*e2"),
                    ("e1", "e3", "b*e3"),
                    ("e2", "e1", "b^2*e2"),
                    ("e3", "e1", "b*e3"),
                    ("e3", "e3", "e2")
                ],
                &[("e1", "e1"), ("e2", "b^2*e2"), ("e3", "b*e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "U3_15",
            Family::Unital3,
            UNITAL3,
            &[p("a"), p("b")],
            table(
                E3,
                Some(0),
                &[("e1", "e1", "e1"), ("e1", "e2", "a*e2"), ("e1", "e3", "b*e3"), ("e2", "e1", "a*e2"), ("e3", "e1", "b*e3")],
                &[("e1", "e1"), ("e2", "a*e2"), ("e3", "b*e3")]
            ),
            coh(0, 0, Some(0), Some(0))
        ),
        entry!(
            "M2",
            Family::Base,
            "the 2x2 matrix algebra",
            &[],
            table(
                M2_BASIS,
                None,
                &[
                    ("E11", "E11", "E11"),
                    ("E11", "E12", "E12"),
                    ("E12", "E21", "E11"),
                    ("E12", "E22", "E12"),
                    ("E21", "E11", "E21"),
                    ("E21", "E12", "E22"),
                    ("E22", "E21", "E21"),
                    ("E22", "E22", "E22")
                ],
                &[("E11", "E11"), ("E12", "E12"), ("E21", "E21"), ("E22", "E22")]
            ),
            NO_COH
        ),
    ];

    v.push(twisted(
        1,
        const { &[nz("b1"), nz("b2")] },
        &[
            ("E11", "E11 - i*sqrt(b2)/sqrt(b1)*E21"),
            ("E12", "i*sqrt(b1)*sqrt(b2)*E11 + b1*E12 + b2*E21 - i*sqrt(b1)*sqrt(b2)*E22"),
            ("E21", "E21/b1"),
            ("E22", "i*sqrt(b2)/sqrt(b1)*E21 + E22"),
        ],
        &[
            ("E11", "E11", "E11 - i*sqrt(b2)/sqrt(b1)*E21"),
            ("E11", "E12", "i*sqrt(b1)*sqrt(b2)*E11 + b1*E12 + b2*E21 - i*sqrt(b1)*sqrt(b2)*E22"),
            ("E12", "E21", "E11 - i*sqrt(b2)/sqrt(b1)*E21"),
            ("E12", "E22", "i*sqrt(b1)*sqrt(b2)*E11 + b1*E12 + b2*E21 - i*sqrt(b1)*sqrt(b2)*E22"),
            ("E21", "E11", "E21/b1"),
            ("E21", "E12", "-i*sqrt(b2)/sqrt(b1)*E21 + E22"),
            ("E22", "E21", "E11/b1"),
            ("E22", "E22", "-i*sqrt(b2)/sqrt(b1)*E21 + E22"),
        ],
        None,
        &[("b1", 4), ("b2", 9)],
    ));
    v.push(twisted(
        2,
        const { &[nz("b1"), nz("b2")] },
        &[
            ("E11", "E11 + i*sqrt(b2)/sqrt(b1)*E21"),
            ("E12", "-i*sqrt(b1)*sqrt(b2)*E11 + b1*E12 + b2*E21 + i*sqrt(b1)*sqrt(b2)*E22"),
            ("E21", "E21/b1"),
            ("E22", "-i*sqrt(b2)/sqrt(b1)*E21 + E22"),
        ],
        &[
            ("E11", "E11", "E11 + i*sqrt(b2)/sqrt(b1)*E21"),
            ("E11", "E12", "-i*sqrt(b1)*sqrt(b1)*E11 + b1*E12 + b2*E21 + i*sqrt(b1)*sqrt(b1)*E22"),
            ("E12", "E21", "E11 + i*sqrt(b1)/sqrt(b1)*E21"),
            ("E12", "E22", "-i*sqrt(b1)*sqrt(b2)*E11 + b2*E12 + b2*E21 + i*sqrt(b1)*sqrt(b2)*E22"),
            ("E21", "E11", "E21/b1"),
            ("E21", "E12", "-i*sqrt(b2)/sqrt(b1)*E21 + E22"),
            ("E22", "E21", "E21/b1"),
            ("E22", "E22", "-i*sqrt(b2)/sqrt(b1)*E21 + E22"),
        ],
        None,
        &[("b1", 4), ("b2", 9)],
    ));
    v.push(twisted(
        3,
        const { &[nz("b2"), nz("l1"), nz("g2")] },
        &[
            ("E11", "E11 - l1*E21"),
            ("E12", "-b2/l1*E11 - b2/g2^2*E12 + b2*E21 + b2/l1*E22"),
            ("E21", "-l1^2/b2*E21"),
            ("E22", "l1*E21 + E22"),
        ],
        &[
            ("E11", "E11", "E11 - l1*E21"),
            ("E11", "E12", "-b2/l1*E11 - b2/g2^2*E12 + b2*E21 + b2/l1*E22"),
            ("E12", "E21", "E11 - l1*E21"),
            ("E12", "E22", "-b2/l1*E11 - b2/g2^2*E12 + b2*E21 + b2/l1*E22"),
            ("E21", "E11", "-l1^2/b2*E21"),
            ("E21", "E12", "l1*E21 + E22"),
            ("E22", "E21", "-l1^2/b2*E21"),
            ("E22", "E22", "l1*E21 + E22"),
        ],
        Some(M3_CHECK),
        &[("b2", 3), ("l1", 5), ("g2", 5)],
    ));
    v.push(twisted(
        4,
        const { &[nz("b1"), p("l1")] },
        &[
            ("E11", "E11 - l1*E21"),
            ("E12", "b1*l1*E11 + b1*E12 - b1*l1^2*E21 - b1*E22"),
            ("E21", "E21/b1"),
            ("E22", "l1*E21 + E22"),
        ],
        &[
            ("E11", "E11", "E11 - l1*E21"),
            ("E11", "E12", "b1*l1*E11 + b1*E12 - b1*l1^2*E21 - b1*E22"),
            ("E12", "E21", "E11 - l1*E21"),
            ("E12", "E22", "b1*l1*E11 + b1*E12 - b1*l1^2*E21 - b1*E22"),
            ("E21", "E11", "E21/b1"),
            ("E21", "E12", "l1*E21 + E22"),
            ("E22", "E21", "E21/b1"),
            ("E22", "E22", "l1*E21 + E22"),
        ],
        Some(m4_constraint),
        &[("b1", 3), ("l1", 1)],
    ));
    v.push(twisted(
        5,
        const { &[p("b3"), nz("g1")] },
        &[
            ("E11", "E11 + b3*g1*E21"),
            ("E12", "-b3*E11 + E12/g1 - b3*g1*E21 + b3*E22"),
            ("E21", "g1*E21"),
            ("E22", "-b3*g1*E21 + E22"),
        ],
        &[
            ("E11", "E11", "E11 + b3*g1*E21"),
            ("E11", "E12", "-b3*E11 + E12/g1 - b3*g1*E21 + b3*E22"),
            ("E12", "E21", "E11 + b3*g1*E21"),
            ("E12", "E22", "-b3*E11 + E12/g1 - b3*g1*E21 + b3*E22"),
            ("E21", "E11", "g1*E21"),
            ("E21", "E12", "-b3*g1*E21 + E22"),
            ("E22", "E21", "g1*E21"),
            ("E22", "E22", "-b3*g1*E21 + E22"),
        ],
        Some(m5_constraint),
        &[("b3", 1), ("g1", 5)],
    ));
    v.push(twisted(
        6,
        const { &[nz("b2"), p("g1")] },
        &[
            ("E11", "i*sqrt(b2)*sqrt(g1)*E21 + E22"),
            ("E12", "b2*E21"),
            ("E21", "i*sqrt(g1)/sqrt(b2)*E11 + E12/b2 + g1*E21 - i*sqrt(g1)/sqrt(b2)*E22"),
            ("E22", "E11 - i*sqrt(b2)*sqrt(g1)*E21"),
        ],
        &[
            ("E11", "E11", "i*sqrt(b2)*sqrt(g1)*E21 + E22"),
            ("E11", "E12", "b2*E21"),
            ("E12", "E21", "i*sqrt(b2)*sqrt(g1)*E21 + E22"),
            ("E12", "E22", "b2*E21"),
            ("E21", "E11", "i*sqrt(g1)/sqrt(b2)*E11 + E12/b2 + g1*E21 - i*sqrt(g1)/sqrt(b2)*E22"),
            ("E21", "E12", "E11 - i*sqrt(b2)*sqrt(g1)*E21"),
            ("E22", "E21", "i*sqrt(g1)/sqrt(b2)*E11 + E12/b2 + g1*E21 - i*sqrt(g1)/sqrt(b2)*E22"),
            ("E22", "E22", "E11 - i*sqrt(b2)*sqrt(g1)*E21"),
        ],
        None,
        &[("b2", 4), ("g1", 9)],
    ));
    v.push(twisted(
        7,
        const { &[nz("b2"), p("b4")] },
        &[
            ("E11", "b4/b2*E12 + E22"),
            ("E12", "b4*E11 - b4^2/b2*E12 + b2*E21 - b4*E22"),
            ("E21", "E12/b2"),
            ("E22", "E11 - b4/b2*E12"),
        ],
        &[
            ("E11", "E11", "b4/b2*E12 + E22"),
            ("E11", "E12", "b4*E11 - b4^2/b2*E12 + b2*E21 - b4*E22"),
            ("E12", "E21", "b4/b2*E12 + E22"),
            ("E12", "E22", "b4*E11 - b4^2/b2*E12 + b2*E21 - b4*E22"),
            ("E21", "E11", "E12/b2"),
            ("E21", "E12", "E11 - b4/b2*E12"),
            ("E22", "E21", "E12/b2"),
            ("E22", "E22", "E11 - b4/b2*E12"),
        ],
        None,
        &[("b2", 3), ("b4", 5)],
    ));
    v.push(twisted(
        8,
        const { &[nz("b1"), p("b2"), nz("g1"), p("g2")] },
        &[
            ("E11", "E11 + g2*E12"),
            ("E12", "E12/g1"),
            ("E21", "-g2*E11 - g2^2/g1*E12 + g1*E21 + g2*E22"),
            ("E22", "-b2/b1*E12 + E22"),
        ],
        &[
            ("E11", "E11", "E11 + g2*E12"),
            ("E11", "E12", "E12/g1"),
            ("E12", "E21", "E11 + g2*E12"),
            ("E12", "E22", "E12/g1"),
            ("E21", "E11", "-g2*E11 - g2^2/g1*E12 + g1*E21 + g2*E22"),
            ("E21", "E12", "-b2/b1*E12 + E22"),
            ("E22", "E21", "-g2*E11 - g2^2/g1*E12 + g1*E21 + g2*E22"),
            ("E22", "E22", "-b2/b1*E12 + E22"),
        ],
        Some(m8_constraint),
        &[("b1", 2), ("b2", 6), ("g1", 1), ("g2", 3)],
    ));
    v.push(twisted(
        9,
        const { &[p("g2"), nz("g4")] },
        &[
            ("E11", "-g2*E21 + E22"),
            ("E12", "E21/g4"),
            ("E21", "-g2*E11 + g4*E12 - g2^2/g4*E21 + g2*E22"),
            ("E22", "E11 + g2/g4*E21"),
        ],
        &[
            ("E11", "E11", "-g2*E21 + E22"),
            ("E11", "E12", "E21/g4"),
            ("E12", "E21", "-g2*E21 + E22"),
            ("E12", "E22", "E21/g4"),
            ("E21", "E11", "-g2*E11 + g4*E12 - g2^2/g4*E21 + g2*E22"),
            ("E21", "E12", "E11 + g2/g4*E21"),
            ("E22", "E21", "-g2*E11 + g4*E12 - g2^2/g4*E21 + g2*E22"),
            ("E22", "E22", "E11 + g2/g4*E21"),
        ],
        Some(m9_constraint),
        &[("g2", 3), ("g4", 1)],
    ));

    let untw = |id, of, printed, z2: usize, h2: Option<usize>, z3: usize, h3: Option<usize>| {
        untwist_entry(id, of, printed, PublishedCohomology { z2: Some(z2), h2, z3: Some(z3), h3 })
    };
    v.extend([
        untw("AT2_1", "A2_1", &[("e1", "e1", "-e1"), ("e1", "e2", "-e2"), ("e2", "e1", "-e2"), ("e2", "e2", "e1")], 4, Some(1), 4, Some(4)),
        untw("AT2_4", "A2_4", &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2")], 4, Some(1), 5, Some(5)),
        untw("AT2_6", "A2_6", &[("e1", "e1", "e2")], 4, Some(3), 5, Some(5)),
        untw("AT2_8", "A2_8", &[("e1", "e2", "e1"), ("e2", "e2", "e2")], 4, Some(2), 5, Some(5)),
        untw("AT2_9", "A2_9", &[("e1", "e2", "e1"), ("e2", "e2", "e2")], 4, Some(2), 5, Some(5)),
        untw("AT3_3", "A3_3", &[("e1", "e1", "p1*e1"), ("e2", "e2", "p2*e2"), ("e3", "e3", "p3*e3")], 9, Some(9), 18, None),
        untw(
            "AT3_7",
            "A3_7",
            &[("e2", "e1", "e1"), ("e2", "e2", "e1"), ("e2", "e3", "e1"), ("e3", "e2", "e1"), ("e3", "e3", "e1")],
            4,
            Some(4),
            5,
            None,
        ),
        untw("AT3_8", "A3_8", &[("e1", "e2", "-e3"), ("e2", "e1", "e3"), ("e2", "e2", "e3")], 8, Some(8), 24, None),
        untw("AT3_9", "A3_9", &[("e2", "e3", "p1/a*e1"), ("e3", "e2", "p2/a*e1")], 10, Some(6), 27, None),
        untw("AT3_10", "A3_10", &[("e2", "e2", "p1*e1"), ("e3", "e3", "p2*e1")], 10, Some(6), 23, None),
        untw(
            "AT3_12",
            "A3_12",
            &[("e2", "e1", "e3"), ("e2", "e3", "-p1*e1"), ("e3", "e2", "p1*e1"), ("e3", "e3", "p2*e1")],
            2,
            None,
            2,
            None,
        ),
        untw("AU2_1", "U2_1", &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2"), ("e2", "e2", "e1 + e2")], 5, Some(3), 1, Some(1)),
        untw("AU2_2", "U2_2", &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2"), ("e2", "e2", "e1")], 4, Some(2), 2, Some(2)),
        untw("AU2_4", "U2_4", &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e2", "e1", "e2")], 4, Some(2), 1, Some(1)),
        untw(
            "AU3_6",
            "U3_6",
            &[
                ("e1", "e1", "e1"),
                ("e1", "e2", "e2"),
                ("e1", "e3", "e3"),
                ("e2", "e1", "e2"),
                ("e2", "e2", "e2"),
                ("e2", "e3", "e3"),
                ("e3", "e1", "e3"),
                ("e3", "e2", "e3"),
                ("e3", "e3", "e2 + e3"),
            ],
            13,
            None,
            18,
            Some(18),
        ),
        untw(
            "AU3_7",
            "U3_7",
            &[
                ("e1", "e1", "e1"),
                ("e1", "e2", "e2"),
                ("e1", "e3", "e3"),
                ("e2", "e1", "e2"),
                ("e2", "e2", "-e2"),
                ("e2", "e3", "-e3"),
                ("e3", "e1", "e3"),
                ("e3", "e2", "-e3"),
                ("e3", "e3", "e2"),
            ],
            12,
            None,
            18,
            Some(18),
        ),
        untw(
            "AU3_8",
            "U3_8",
            &[
                ("e1", "e1", "e1"),
                ("e1", "e2", "e2"),
                ("e1", "e3", "e3"),
                ("e2", "e1", "e2"),
                ("e2", "e2", "e3"),
                ("e2", "e3", "e2"),
                ("e3", "e1", "e3"),
                ("e3", "e2", "-e2"),
                ("e3", "e3", "-e3"),
            ],
            12,
            None,
            2,
            Some(2),
        ),
        untw(
            "AU3_9",
            "U3_9",
            &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e1", "e3", "e3"), ("e2", "e1", "e2"), ("e3", "e1", "e3"), ("e3", "e3", "e3")],
            11,
            None,
            16,
            Some(16),
        ),
        untw(
            "AU3_10",
            "U3_10",
            &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e1", "e3", "e3"), ("e2", "e1", "e2"), ("e3", "e1", "e3")],
            12,
            Some(9),
            19,
            Some(19),
        ),
        untw(
            "AU3_11",
            "U3_11",
            &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e1", "e3", "e3"), ("e2", "e1", "e2"), ("e2", "e2", "e3"), ("e3", "e1", "e3")],
            10,
            Some(7),
            20,
            Some(20),
        ),
        untw(
            "AU3_12",
            "U3_12",
            &[
                ("e1", "e1", "e1"),
                ("e1", "e2", "e2"),
                ("e1", "e3", "e3"),
                ("e2", "e1", "e2"),
                ("e2", "e2", "e2"),
                ("e2", "e3", "e3"),
                ("e3", "e1", "e3"),
            ],
            10,
            Some(8),
            20,
            Some(20),
        ),
        untw(
            "AU3_14",
            "U3_14",
            &[("e1", "e1", "e1"), ("e1", "e2", "e2"), ("e1", "e3", "e3"), ("e2", "e1", "e2"), ("e3", "e1", "e3"), ("e3", "e3", "e2")],
            11,
            Some(5),
            20,
            Some(18),
        ),
    ]);
    v
}
