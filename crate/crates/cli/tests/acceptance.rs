//! End-to-end acceptance run. Prints one `criterion N: PASS|FAIL` line per
//! criterion and asserts the state each criterion is known to be in.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::time::Instant;

use homassoc::catalog::{
    catalog_entries, catalog_entry, catalog_get, catalog_list, cohomology_mismatches, matrix_algebra,
    printed_discrepancies, Family, Params,
};
use homassoc::cohomology::{coboundary, coboundary_matrix, cohomology_table};
use homassoc::constructions::{untwist, yau_twist};
use homassoc::deformation::{
    check_deformation, first_obstruction, obstruction_cochain, rigidity_probe, DeformationJet, ObstructionResult, Rigidity,
};
use homassoc::derivations::{
    commutator, commutator_inner_derivation, derivation_space, inner_derivation, is_derivation, twist_fixed_space,
};
use homassoc::fingerprint::fingerprint;
use homassoc::structure::{simplicity_certificate, SimplicityKind};
use homassoc::variety::{
    homass_ideal, ideal_membership, noniso_certificate, structure_ring, IdealFlags, NonIsoVerdict,
    PUBLISHED_HOM_ASSOC_BASIS_N2,
};
use homassoc::verify::{check_associative, check_hom_associative, check_morphism, check_multiplicative, check_unital};
use homassoc::{Cochain, GaussianRational, HomAlgebra, Subspace};
use homassoc_cli::dsl::{parse_algebra, serialize, serialize_with_basis};
use homassoc_cli::run_args;
use homassoc_poly::{buchberger, MonomialOrder, DEFAULT_BUDGET};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn default(id: &str) -> HomAlgebra {
    catalog_get(id, &Params::new()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let mut unital = 0;
    let mut failures = Vec::new();
    for family in [Family::Dim2, Family::Dim3, Family::Unital2, Family::Unital3] {
        for id in catalog_list(Some(family)) {
            let e = catalog_entry(id).unwrap();
            let a = e.instantiate(&e.default_params()).unwrap();
            let mut ok = check_hom_associative(&a).witnesses.is_empty() && check_multiplicative(&a).witnesses.is_empty();
            if e.is_unital() {
                ok &= check_unital(&a).unwrap().holds;
                unital += 1;
            }
            checked += 1;
            if !ok {
                failures.push(id);
            }
        }
    }
    outcome(
        checked == 40 && failures.is_empty(),
        format!("{checked} entries, {unital} unital, failures: {failures:?}"),
    )
}

fn all_ones(id: &str) -> Params {
    catalog_entry(id).unwrap().params().iter().map(|s| (s.name.to_string(), GaussianRational::one())).collect()
}

fn criterion_2() -> Outcome {
    let m2 = matrix_algebra().unwrap();
    let mut ok = true;
    let mut at_ones = BTreeMap::new();
    let mut at_probe = BTreeMap::new();
    for id in catalog_list(Some(Family::TwistedM2)) {
        let e = catalog_entry(id).unwrap();
        let params = e.resolve_params(&all_ones(id)).unwrap();
        let phi = e.twisting_morphism(&params).unwrap().unwrap();
        ok &= check_morphism(&phi, &m2, &m2).unwrap().holds;
        let a = yau_twist(&m2, &phi).unwrap();
        ok &= check_hom_associative(&a).holds && check_multiplicative(&a).holds;
        for (params, records) in [(params, &mut at_ones), (e.probe_params(), &mut at_probe)] {
            let d = printed_discrepancies(id, &params).unwrap();
            if !d.is_empty() {
                records.insert(id, d.len());
            }
        }
    }
    let typos = at_ones.contains_key("T2_1") && at_probe.contains_key("T2_1") && at_probe.contains_key("T2_2");
    outcome(
        ok && typos,
        format!(
            "9 morphisms valid and twists hom-associative: {ok}; discrepancy records at parameters 1 {at_ones:?}, \
             at generic parameters {at_probe:?}"
        ),
    )
}

fn criterion_3() -> Outcome {
    let m2 = matrix_algebra().unwrap();
    let mut simple = 0;
    for id in catalog_list(Some(Family::TwistedM2)) {
        let e = catalog_entry(id).unwrap();
        let phi = e.twisting_morphism(&e.resolve_params(&all_ones(id)).unwrap()).unwrap().unwrap();
        let v = simplicity_certificate(&yau_twist(&m2, &phi).unwrap()).unwrap();
        if v.multiplication_algebra_dim == 16 && v.kind == SimplicityKind::CertifiedSimple {
            simple += 1;
        }
    }
    let e2 = Subspace::span(2, &[vec![GaussianRational::zero(), GaussianRational::one()]]).unwrap();
    let ideal = simplicity_certificate(&default("A2_3")).unwrap().kind == SimplicityKind::ProperIdealFound(e2);
    outcome(simple == 9 && ideal, format!("{simple}/9 certified simple; A2_3 ideal span{{e2}} found: {ideal}"))
}

fn criterion_4() -> Outcome {
    let mut invertible = 0;
    let mut failures = Vec::new();
    for e in catalog_entries() {
        let a = e.instantiate(&e.default_params()).unwrap();
        if a.twist().inverse().is_none() {
            continue;
        }
        invertible += 1;
        let c = untwist(&a).unwrap();
        let ok = check_associative(&c).holds
            && check_morphism(a.twist(), &c, &c).unwrap().holds
            && yau_twist(&c, a.twist()).unwrap().same_structure(&a);
        if !ok {
            failures.push(e.id);
        }
    }
    let table = untwist(&default("A2_1")).unwrap().same_structure(&default("AT2_1"))
        && printed_discrepancies("AT2_1", &Params::new()).unwrap().is_empty();
    outcome(
        failures.is_empty() && table,
        format!("{invertible} invertible-twist entries round-trip, failures {failures:?}; compatible table of A2_1 reproduced: {table}"),
    )
}

const PUBLISHED_Z2_H2: [(&str, usize, usize); 9] = [
    ("A2_1", 0, 0),
    ("A2_2", 1, 0),
    ("A2_3", 3, 2),
    ("A2_5", 1, 0),
    ("A2_6", 2, 1),
    ("A2_7", 2, 2),
    ("A3_3", 0, 0),
    ("A3_8", 2, 2),
    ("U2_3", 1, 0),
];

const PUBLISHED_Z3: [(&str, usize); 7] =
    [("A2_2", 4), ("A2_3", 6), ("A2_5", 4), ("A2_6", 3), ("A2_7", 2), ("A3_9", 5), ("A3_10", 7)];

fn criterion_5() -> Outcome {
    let mut matched = Vec::new();
    let mut differing = Vec::new();
    let mut uncertified = Vec::new();
    let mut record = |id: &'static str, quantity: &'static str, published: usize, computed: usize| {
        if published == computed {
            matched.push(format!("{id}.{quantity}"));
            return;
        }
        let e = catalog_entry(id).unwrap();
        let a = e.instantiate(&e.default_params()).unwrap();
        let table = cohomology_table(&a, 3).unwrap();
        let certified = cohomology_mismatches(e, &a, &table)
            .unwrap()
            .iter()
            .any(|m| m.quantity == quantity && m.published == published && m.computed == computed && m.certificate.is_valid());
        if !certified {
            uncertified.push(format!("{id}.{quantity}"));
        }
        differing.push(format!("{id}.{quantity} {published}->{computed}"));
    };
    for (id, z2, h2) in PUBLISHED_Z2_H2 {
        let t = cohomology_table(&default(id), 2).unwrap();
        let d = t.degree(2).unwrap();
        record(id, "z2", z2, d.dim_cocycles);
        record(id, "h2", h2, d.dim_cohomology);
    }
    for (id, z3) in PUBLISHED_Z3 {
        let t = cohomology_table(&default(id), 3).unwrap();
        record(id, "z3", z3, t.degree(3).unwrap().dim_cocycles);
    }
    let total = matched.len() + differing.len();
    outcome(
        uncertified.is_empty(),
        format!(
            "{}/{total} published values reproduced; {} differ, each with a valid rank certificate: {}; uncertified: {uncertified:?}",
            matched.len(),
            differing.len(),
            differing.join(", ")
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut columns = 0;
    for e in catalog_entries() {
        let a = e.instantiate(&e.default_params()).unwrap();
        let n = a.dim();
        for m in 1..=2 {
            // Columns of the composite δ^{m+1}∘δ^m on the cochain space basis.
            let first = coboundary_matrix(&a, m).unwrap().matrix;
            for j in 0..first.cols() {
                columns += 1;
                let image = Cochain::from_coeffs(n, m + 1, first.column(j)).unwrap();
                if !coboundary(&a, &image).unwrap().is_zero() {
                    failures.push(format!("{} degree {m}", e.id));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{} entries, composites in degrees 1 and 2 ({columns} columns) vanish exactly; failures {failures:?}", catalog_entries().len()),
    )
}

struct InnerStats {
    brackets: usize,
    bracket_failures: usize,
    inner: usize,
    inner_failures: usize,
    unexplained: usize,
    commutator_failures: usize,
    a2_4_identity_fails: bool,
}

fn criterion_7_stats() -> InnerStats {
    let mut s = InnerStats {
        brackets: 0,
        bracket_failures: 0,
        inner: 0,
        inner_failures: 0,
        unexplained: 0,
        commutator_failures: 0,
        a2_4_identity_fails: false,
    };
    for e in catalog_entries() {
        let a = e.instantiate(&e.default_params()).unwrap();
        let spaces: Vec<_> = (0..=2).map(|k| derivation_space(&a, k)).collect();
        for k in 0..=1usize {
            for t in 0..=1usize {
                for d in spaces[k].operators() {
                    for f in spaces[t].operators() {
                        s.brackets += 1;
                        let c = commutator(&d, &f).unwrap();
                        if !is_derivation(&a, &c, (k + t) as u32).unwrap() {
                            s.bracket_failures += 1;
                        }
                    }
                }
            }
        }
        for k in 0..=1u32 {
            let next = a.twist_power(k + 1);
            for f in twist_fixed_space(&a).basis() {
                s.inner += 1;
                let d = inner_derivation(&a, f, k).unwrap();
                let holds = is_derivation(&a, &d, k + 1).unwrap();
                let cross_term_vanishes = (0..a.dim())
                    .all(|i| (0..a.dim()).all(|j| a.mul(&d.column(i), &next.column(j)).unwrap().iter().all(|x| x.is_zero())));
                if holds != cross_term_vanishes {
                    s.unexplained += 1;
                }
                if !holds {
                    s.inner_failures += 1;
                    if e.id == "A2_4" && k == 0 && d.is_identity() {
                        s.a2_4_identity_fails = true;
                    }
                }
                let c = commutator_inner_derivation(&a, f, k).unwrap();
                if !is_derivation(&a, &c, k + 1).unwrap() {
                    s.commutator_failures += 1;
                }
            }
        }
    }
    s
}

fn criterion_7() -> (Outcome, InnerStats) {
    let s = criterion_7_stats();
    let pass = s.bracket_failures == 0 && s.inner_failures == 0;
    let detail = format!(
        "brackets: {}/{} in the expected space; inner maps g -> mu(alpha^k g, f): {}/{} are alpha^(k+1)-derivations \
         (failures exactly where mu(D g, alpha^(k+1) h) != 0, {} unexplained; A2_4 f=e1 identity fails: {}); \
         commutator variant g -> [alpha^k g, f]: {} failures",
        s.brackets - s.bracket_failures,
        s.brackets,
        s.inner - s.inner_failures,
        s.inner,
        s.unexplained,
        s.a2_4_identity_fails,
        s.commutator_failures,
    );
    (outcome(pass, detail), s)
}

struct GroebnerStatus {
    non_members: Vec<usize>,
    n1_ok: bool,
}

fn criterion_8() -> (Outcome, GroebnerStatus) {
    let gb = buchberger(&homass_ideal(2, IdealFlags::HOM_ASSOC), DEFAULT_BUDGET).expect("terminates under the default budget");
    let ring = structure_ring(2, MonomialOrder::DegRevLex);
    let non_members: Vec<usize> = PUBLISHED_HOM_ASSOC_BASIS_N2
        .iter()
        .enumerate()
        .filter(|(_, g)| !ideal_membership(&ring.parse(g).unwrap(), &gb))
        .map(|(k, _)| k + 1)
        .collect();
    let gb1 = buchberger(&homass_ideal(1, IdealFlags::MULTIPLICATIVITY), DEFAULT_BUDGET).unwrap();
    let ring1 = structure_ring(1, MonomialOrder::DegRevLex);
    let n1_ok = gb1.polys() == [ring1.parse("a11*c111 - a11^2*c111").unwrap().monic()];
    let members = PUBLISHED_HOM_ASSOC_BASIS_N2.len() - non_members.len();
    let detail = format!(
        "basis for n=2 computed ({} polynomials); {members}/16 published generators are ideal members, \
         non-members #{non_members:?}; n=1 multiplicativity ideal reduces to <ac - a^2 c>: {n1_ok}",
        gb.polys().len()
    );
    (outcome(non_members.is_empty() && n1_ok, detail), GroebnerStatus { non_members, n1_ok })
}

fn criterion_9() -> Outcome {
    let ids = catalog_list(Some(Family::Dim2));
    let prints: Vec<_> = ids.iter().map(|id| fingerprint(&default(id)).unwrap()).collect();
    let mut collisions = Vec::new();
    let mut unflagged = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if prints[i] != prints[j] {
                continue;
            }
            collisions.push(format!("{}/{}", ids[i], ids[j]));
            let v = noniso_certificate(&default(ids[i]), &default(ids[j]), DEFAULT_BUDGET).unwrap();
            if !matches!(v, NonIsoVerdict::ProvenNonIsomorphic { .. }) {
                unflagged.push(format!("{}/{}", ids[i], ids[j]));
            }
        }
    }
    outcome(
        unflagged.is_empty(),
        format!("36 pairs; fingerprint collisions {collisions:?} all proven non-isomorphic; unresolved {unflagged:?}"),
    )
}

fn criterion_10() -> Outcome {
    let mut jets = 0;
    let mut ok = true;
    for id in ["A2_3", "A2_7"] {
        let a = default(id);
        for mu1 in cohomology_table(&a, 2).unwrap().degree(2).unwrap().cocycle_basis() {
            jets += 1;
            let jet = DeformationJet::new(a.clone(), vec![mu1.clone()]).unwrap();
            ok &= check_deformation(&jet, 1).unwrap().holds;
            let q = obstruction_cochain(&a, &mu1).unwrap();
            let minus_q: Vec<GaussianRational> = q.coeffs().iter().map(|x| -x).collect();
            let delta = coboundary_matrix(&a, 2).unwrap().matrix;
            let solvable = delta.solve(&minus_q).unwrap().is_some();
            ok &= solvable == delta.solve(q.coeffs()).unwrap().is_some();
            ok &= match first_obstruction(&a, &mu1).unwrap() {
                ObstructionResult::Extendable(mu2) => {
                    solvable && check_deformation(&DeformationJet::new(a.clone(), vec![mu1, mu2]).unwrap(), 2).unwrap().holds
                }
                ObstructionResult::Obstructed(_) => !solvable,
            };
        }
    }
    let mut rigid = Vec::new();
    let mut mismatched = Vec::new();
    for (id, _, published_h2) in PUBLISHED_Z2_H2 {
        let a = default(id);
        let h2 = cohomology_table(&a, 2).unwrap().degree(2).unwrap().dim_cohomology;
        let r = rigidity_probe(&a).unwrap() == Rigidity::RigidIndicated;
        if r {
            rigid.push(id);
        }
        if r != (h2 == 0) || r != (published_h2 == 0) {
            mismatched.push(id);
        }
    }
    outcome(
        ok && mismatched.is_empty(),
        format!("{jets} order-1 jets checked, obstruction verdicts agree with the linear solve: {ok}; rigid {rigid:?}; mismatched {mismatched:?}"),
    )
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("homassoc-acceptance-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn criterion_11() -> Outcome {
    let mut round_trips = 0;
    for e in catalog_entries() {
        let a = e.instantiate(&e.default_params()).unwrap();
        if parse_algebra(&serialize(&a)).unwrap() == a && parse_algebra(&serialize_with_basis(&a, &e.basis_names())).unwrap() == a {
            round_trips += 1;
        }
    }
    let cases = [
        ("unknown", "algebra a\ndim 2\nbasis e1 e2\nmul e1 e9 = e1\n", (4, 8)),
        ("duplicate", "algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = e1\nmul e1 e1 = e2\n", (5, 1)),
        ("scalar", "algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = 1/0*e1\n", (4, 13)),
    ];
    let mut errors_ok = 0;
    for (name, text, (line, column)) in cases {
        let path = temp_file(name, text);
        let out = run_args(["homassoc", "--deterministic", "verify", path.to_str().unwrap()]);
        let _ = std::fs::remove_file(&path);
        let json: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        if out.code == 2 && json["details"]["line"] == line && json["details"]["column"] == column {
            errors_ok += 1;
        }
    }
    let n = catalog_entries().len();
    outcome(
        round_trips == n && errors_ok == 3,
        format!("{round_trips}/{n} entries round-trip; {errors_ok}/3 documented errors exit 2 with position"),
    )
}

fn report(n: usize, o: &Outcome, started: Instant) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    let ms = started.elapsed().as_millis();
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n}: {verdict} - {} ({ms} ms)", o.detail);
}

#[test]
fn acceptance() {
    let mut results = BTreeMap::new();
    let simple: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let mut inner = None;
    let mut groebner = None;
    let _ = writeln!(std::io::stdout().lock());
    for n in 1..=11 {
        let started = Instant::now();
        let o = match n {
            7 => {
                let (o, s) = criterion_7();
                inner = Some(s);
                o
            }
            8 => {
                let (o, s) = criterion_8();
                groebner = Some(s);
                o
            }
            _ => simple.iter().find(|(k, _)| *k == n).unwrap().1(),
        };
        report(n, &o, started);
        results.insert(n, o.pass);
    }

    for n in [1, 2, 3, 4, 5, 6, 9, 10, 11] {
        assert!(results[&n], "criterion {n} regressed");
    }

    // Criterion 7 fails on its inner-derivation clause: the right-multiplication
    // map is an α^{k+1}-derivation exactly when its cross term vanishes, which
    // many catalog algebras violate. The bracket clause and the commutator form
    // of inner derivations hold everywhere.
    let s = inner.unwrap();
    assert!(!results[&7]);
    assert_eq!(s.bracket_failures, 0);
    assert!(s.inner_failures > 0);
    assert_eq!(s.unexplained, 0);
    assert!(s.a2_4_identity_fails);
    assert_eq!(s.commutator_failures, 0);

    // Criterion 8 fails because five printed generators are not in the ideal.
    let g = groebner.unwrap();
    assert!(!results[&8]);
    assert_eq!(g.non_members, vec![3, 4, 7, 8, 9]);
    assert!(g.n1_ok);
}
