//! One function per command.

use homassoc::catalog::{
    catalog_entry, catalog_list, catalog_verify_all, cohomology_mismatches, printed_discrepancies, Family,
};
use homassoc::cohomology::cohomology_table;
use homassoc::constructions::{untwist, yau_twist};
use homassoc::deformation::{check_deformation, first_obstruction, rigidity_probe, DeformationJet, ObstructionResult, Rigidity};
use homassoc::derivations::{derivation_space, inner_derivation_space, twist_fixed_space};
use homassoc::fingerprint::fingerprint;
use homassoc::structure::{associative_type_check, center, simplicity_certificate, AssociativeType, NotAssociativeType, SimplicityKind};
use homassoc::variety::{homass_ideal_in, ideal_membership, noniso_certificate, structure_ring, IdealFlags, NonIsoVerdict};
use homassoc::verify::{check_associative, check_hom_associative, check_morphism, check_multiplicative, check_unital};
use homassoc::{AlgebraError, Matrix, VerificationReport};
use homassoc_poly::{buchberger, MonomialOrder};
use serde_json::{json, Map, Value};

use crate::dsl::{self, format_lincomb};
use crate::report::{groebner_stats_json, table_discrepancy_json, vector_json, witness_json, Report, Status};
use crate::{load_algebra, read_source, CatalogCommand, CliError, Command, Equations, GroebnerCommand, Loaded, Options, Order};

type Result<T> = std::result::Result<T, CliError>;

pub fn command_name(c: &Command) -> String {
    match c {
        Command::Verify { .. } => "verify".into(),
        Command::Twist { .. } => "twist".into(),
        Command::Untwist { .. } => "untwist".into(),
        Command::Cohomology { .. } => "cohomology".into(),
        Command::Derivations { .. } => "derivations".into(),
        Command::Simple { .. } => "simple".into(),
        Command::Center { .. } => "center".into(),
        Command::AssocType { .. } => "assoc-type".into(),
        Command::Catalog { action } => match action {
            CatalogCommand::List { .. } => "catalog list".into(),
            CatalogCommand::Show { .. } => "catalog show".into(),
            CatalogCommand::VerifyAll => "catalog verify-all".into(),
        },
        Command::Groebner { action } => match action {
            GroebnerCommand::Ideal { .. } => "groebner ideal".into(),
            GroebnerCommand::Member { .. } => "groebner member".into(),
        },
        Command::Noniso { .. } => "noniso".into(),
        Command::Deform { .. } => "deform".into(),
        Command::Fingerprint { .. } => "fingerprint".into(),
    }
}

pub fn dispatch(c: &Command, opts: &Options) -> Result<Report> {
    let name = command_name(c);
    match c {
        Command::Verify { file } => verify(&name, &load_algebra(file, opts)?),
        Command::Twist { file, morphism } => twist(&name, &load_algebra(file, opts)?, morphism),
        Command::Untwist { file } => untwist_cmd(&name, &load_algebra(file, opts)?),
        Command::Cohomology { file, degree } => cohomology(&name, &load_algebra(file, opts)?, degree.map(usize::from)),
        Command::Derivations { file, k } => derivations(&name, &load_algebra(file, opts)?, *k),
        Command::Simple { file } => simple(&name, &load_algebra(file, opts)?),
        Command::Center { file } => center_cmd(&name, &load_algebra(file, opts)?),
        Command::AssocType { file } => assoc_type(&name, &load_algebra(file, opts)?, opts.budget),
        Command::Catalog { action } => match action {
            CatalogCommand::List { family } => catalog_list_cmd(&name, family.as_deref()),
            CatalogCommand::Show { id } => catalog_show(&name, id, opts),
            CatalogCommand::VerifyAll => Ok(catalog_verify_all_cmd(&name)),
        },
        Command::Groebner { action } => match action {
            GroebnerCommand::Ideal { n, equations, order } => groebner_ideal(&name, *n, equations, *order, opts.budget),
            GroebnerCommand::Member { poly, n, equations } => groebner_member(&name, poly, *n, equations, opts.budget),
        },
        Command::Noniso { first, second } => {
            noniso(&name, &load_algebra(first, opts)?, &load_algebra(second, opts)?, opts.budget)
        }
        Command::Deform { file, jet, order } => deform(&name, &load_algebra(file, opts)?, jet, *order),
        Command::Fingerprint { file } => fingerprint_cmd(&name, &load_algebra(file, opts)?),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_json(m.row(r))).collect())
}

fn named_vectors(vs: &[homassoc::Vector], names: &[String]) -> Value {
    Value::Array(vs.iter().map(|v| json!(format_lincomb(v, names))).collect())
}

fn verify(name: &str, l: &Loaded) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    r.dim("dim", a.dim());
    r.absorb(&check_hom_associative(a));
    r.absorb(&check_multiplicative(a));
    if a.unit().is_some() {
        r.absorb(&check_unital(a)?);
    }
    Ok(r)
}

fn twist(name: &str, l: &Loaded, morphism: &str) -> Result<Report> {
    let a = &l.algebra;
    let text = read_source(morphism)?;
    let map = dsl::parse_map(&text).map_err(|e| CliError::Parse { path: morphism.into(), source: e })?;
    if map.dim != a.dim() {
        return Err(AlgebraError::DimensionMismatch { context: "twisting map", expected: a.dim(), found: map.dim }.into());
    }
    let phi = map.to_matrix();
    let mut r = Report::new(name).label(&a.label);
    r.dim("dim", a.dim());
    r.absorb(&check_morphism(&phi, a, a)?);
    if r.status != Status::Ok {
        return Ok(r);
    }
    let twisted = yau_twist(a, &phi)?;
    r.absorb(&check_hom_associative(&twisted));
    r.absorb(&check_multiplicative(&twisted));
    r.detail("document", json!(dsl::serialize_with_basis(&twisted, &l.basis)));
    Ok(r)
}

fn untwist_cmd(name: &str, l: &Loaded) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    r.dim("dim", a.dim());
    let compatible = match untwist(a) {
        Ok(c) => c,
        Err(AlgebraError::NotInvertible(what)) => {
            r.status = Status::Fail;
            r.message = Some(format!("{what} is not invertible"));
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.absorb(&check_associative(&compatible));
    let auto = check_morphism(a.twist(), &compatible, &compatible)?;
    r.absorb(&VerificationReport { property: "twist_is_automorphism".into(), ..auto });
    r.detail("document", json!(dsl::serialize_with_basis(&compatible, &l.basis)));
    Ok(r)
}

fn cohomology(name: &str, l: &Loaded, degree: Option<usize>) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    let table = cohomology_table(a, degree.unwrap_or(3))?;
    let wanted: Vec<usize> = match degree {
        Some(d) => vec![d],
        None => vec![1, 2, 3],
    };
    for d in table.degrees.iter().filter(|d| wanted.contains(&d.degree)) {
        let m = d.degree;
        r.dim(&format!("c{m}"), d.dim_cochains);
        r.dim(&format!("z{m}"), d.dim_cocycles);
        r.dim(&format!("b{m}"), d.dim_coboundaries);
        r.dim(&format!("h{m}"), d.dim_cohomology);
        r.dim(&format!("rank_delta{m}"), d.rank_delta);
    }
    let Some(entry) = l.entry else { return Ok(r) };
    let reference = entry.instantiate(&entry.default_params())?;
    if !reference.same_structure(a) {
        return Ok(r);
    }
    let p = entry.published_cohomology;
    let mut published = Map::new();
    for (k, v) in [("z2", p.z2), ("h2", p.h2), ("z3", p.z3), ("h3", p.h3)] {
        if let Some(v) = v {
            published.insert(k.into(), json!(v));
        }
    }
    r.detail("published", Value::Object(published));
    for m in cohomology_mismatches(entry, a, &table)? {
        let degree = m.certificate.degree;
        if !wanted.contains(&degree) {
            continue;
        }
        let c = &m.certificate;
        if !c.is_valid() {
            r.status = Status::Fail;
        }
        r.discrepancies.push(json!({
            "kind": "cohomology",
            "id": m.id,
            "quantity": m.quantity,
            "published": m.published,
            "computed": m.computed,
            "certificate": {
                "degree": c.degree,
                "dim_cochains": c.dim_cochains,
                "rank_delta": c.rank_delta,
                "rank_delta_prev": c.rank_delta_prev,
                "cocycle_basis_size": c.cocycle_basis_size,
                "basis_are_cocycles": c.basis_are_cocycles,
                "basis_independent": c.basis_independent,
                "coboundaries_are_cocycles": c.coboundaries_are_cocycles,
                "valid": c.is_valid(),
            },
        }));
    }
    Ok(r)
}

fn derivations(name: &str, l: &Loaded, k: u32) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    let space = derivation_space(a, k);
    r.dim("derivations", space.dim());
    r.dim("fixed", twist_fixed_space(a).dim());
    r.detail("k", json!(k));
    r.detail("basis", Value::Array(space.operators().iter().map(matrix_json).collect()));
    if k >= 1 {
        r.dim("inner", inner_derivation_space(a, k - 1).dim());
    }
    Ok(r)
}

fn simple(name: &str, l: &Loaded) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    let v = simplicity_certificate(a)?;
    r.dim("multiplication_algebra", v.multiplication_algebra_dim);
    let verdict = match &v.kind {
        SimplicityKind::CertifiedSimple => "certified_simple",
        SimplicityKind::ProperIdealFound(s) => {
            r.detail("ideal", named_vectors(s.basis(), &l.basis));
            r.dim("ideal", s.dim());
            "proper_ideal_found"
        }
        SimplicityKind::Trivial => "trivial",
        SimplicityKind::Inconclusive => "inconclusive",
    };
    r.detail("verdict", json!(verdict));
    r.status = Status::from_holds(v.kind == SimplicityKind::CertifiedSimple);
    Ok(r)
}

fn center_cmd(name: &str, l: &Loaded) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    let z = center(a);
    r.dim("center", z.dim());
    r.detail("basis", named_vectors(z.basis(), &l.basis));
    Ok(r)
}

fn assoc_type(name: &str, l: &Loaded, budget: u64) -> Result<Report> {
    let a = &l.algebra;
    let mut r = Report::new(name).label(&a.label);
    match associative_type_check(a, budget)? {
        AssociativeType::Yes(product) => {
            let compatible = homassoc::HomAlgebra::new(format!("{}_compatible", a.label), product, Matrix::identity(a.dim()), a.unit())?;
            r.detail("verdict", json!("associative_type"));
            r.detail("compatible_product", json!(dsl::serialize_with_basis(&compatible, &l.basis)));
        }
        AssociativeType::No(reason) => {
            r.status = Status::Fail;
            r.detail("verdict", json!("not_associative_type"));
            match reason {
                NotAssociativeType::CandidateNotAssociative(w) => {
                    r.detail("reason", json!("candidate_not_associative"));
                    r.witnesses.push(witness_json("associative", &w));
                }
                NotAssociativeType::ProductOutsideImage { pair } => {
                    r.detail("reason", json!("product_outside_image"));
                    r.detail("pair", json!([l.basis[pair.0], l.basis[pair.1]]));
                }
                NotAssociativeType::NoCandidateOverAnyExtension => {
                    r.detail("reason", json!("no_candidate_over_any_extension"));
                }
            }
        }
        AssociativeType::Inconclusive(why) => {
            r.status = Status::Fail;
            r.detail("verdict", json!("inconclusive"));
            r.detail("reason", json!(why));
        }
    }
    Ok(r)
}

fn catalog_list_cmd(name: &str, family: Option<&str>) -> Result<Report> {
    let filter = match family {
        Some(f) => Some(Family::parse(f).ok_or_else(|| {
            let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            CliError::Usage(format!("unknown family `{f}`; known: {}", known.join(", ")))
        })?),
        None => None,
    };
    let ids = catalog_list(filter);
    let mut r = Report::new(name);
    r.dim("entries", ids.len());
    r.detail("ids", json!(ids));
    Ok(r)
}

fn catalog_show(name: &str, id: &str, opts: &Options) -> Result<Report> {
    let entry = catalog_entry(id)?;
    let params = entry.resolve_params(&opts.params)?;
    let a = entry.instantiate(&params)?;
    let names = entry.basis_names();
    let mut r = Report::new(name).label(entry.id);
    r.dim("dim", a.dim());
    r.detail("family", json!(entry.family.name()));
    r.detail("provenance", json!(entry.provenance));
    r.detail("unital", json!(entry.is_unital()));
    let specs: Vec<Value> = entry
        .params()
        .iter()
        .map(|s| json!({"name": s.name, "default": s.default, "nonzero": s.nonzero, "value": params[s.name].to_dsl_string()}))
        .collect();
    r.detail("params", Value::Array(specs));
    r.detail("document", json!(dsl::serialize_with_basis(&a, &names)));
    if let Some(phi) = entry.twisting_morphism(&params)? {
        r.detail("morphism", json!(dsl::serialize_map(&format!("phi_{}", entry.id), &phi, &names)));
    }
    if let Some(of) = entry.untwist_of() {
        r.detail("untwist_of", json!(of));
    }
    let p = entry.published_cohomology;
    r.detail("published_cohomology", json!({"z2": p.z2, "h2": p.h2, "z3": p.z3, "h3": p.h3}));
    if entry.has_printed_table() {
        r.discrepancies = printed_discrepancies(entry.id, &params)?.iter().map(table_discrepancy_json).collect();
    }
    Ok(r)
}

fn catalog_verify_all_cmd(name: &str) -> Report {
    let report = catalog_verify_all();
    let mut r = Report::new(name);
    r.dim("entries", report.entries.len());
    let mut per_entry = Map::new();
    for e in &report.entries {
        let mut m = Map::new();
        for rep in [&e.hom_associative, &e.multiplicative, &e.unital, &e.associative, &e.morphism].into_iter().flatten() {
            m.insert(rep.property.clone(), json!(rep.holds));
            r.witnesses.extend(rep.witnesses.iter().map(|w| {
                let mut v = witness_json(&rep.property, w);
                v["id"] = json!(e.id);
                v
            }));
        }
        if let Some(err) = &e.error {
            m.insert("error".into(), json!(err));
        }
        m.insert("passes".into(), json!(e.passes()));
        per_entry.insert(e.id.to_string(), Value::Object(m));
    }
    r.detail("entries", Value::Object(per_entry));
    r.discrepancies = report.discrepancies().map(table_discrepancy_json).collect();
    r.status = Status::from_holds(report.all_pass());
    r
}

fn flags(equations: &[Equations]) -> IdealFlags {
    IdealFlags {
        hom_assoc: equations.contains(&Equations::HomAssoc),
        multiplicativity: equations.contains(&Equations::Multiplicativity),
        unitality: equations.contains(&Equations::Unitality),
    }
}

fn groebner_ideal(name: &str, n: usize, equations: &[Equations], order: Order, budget: u64) -> Result<Report> {
    if n == 0 || n > 9 {
        return Err(CliError::Usage("n must be between 1 and 9".into()));
    }
    let order = match order {
        Order::Degrevlex => MonomialOrder::DegRevLex,
        Order::Lex => MonomialOrder::Lex,
    };
    let ring = structure_ring(n, order);
    let gens: Vec<_> = homass_ideal_in(&ring, n, flags(equations)).into_iter().filter(|p| !p.is_zero()).collect();
    let mut r = Report::new(name);
    r.dim("n", n);
    r.dim("generators", gens.len());
    if gens.is_empty() {
        r.dim("basis", 0);
        r.detail("basis", json!([]));
        return Ok(r);
    }
    let gb = buchberger(&gens, budget)?;
    r.dim("basis", gb.polys().len());
    r.groebner_stats(gb.stats());
    r.detail("basis", Value::Array(gb.polys().iter().map(|p| json!(ring.format(p))).collect()));
    r.detail("unit_ideal", json!(gb.is_unit_ideal()));
    Ok(r)
}

/// Largest index digit in the `cKIJ` / `aLI` variables of a polynomial.
pub fn infer_dimension(poly: &str) -> Option<usize> {
    let chars: Vec<char> = poly.chars().collect();
    let mut best = None;
    let mut p = 0;
    while p < chars.len() {
        if chars[p].is_ascii_alphabetic() {
            let start = p;
            while p < chars.len() && chars[p].is_ascii_alphanumeric() {
                p += 1;
            }
            let word = &chars[start..p];
            if (word[0] == 'c' || word[0] == 'a') && word.len() > 1 && word[1..].iter().all(|c| c.is_ascii_digit()) {
                let m = word[1..].iter().filter_map(|c| c.to_digit(10)).max().unwrap_or(0) as usize;
                best = Some(best.map_or(m, |b: usize| b.max(m)));
            }
        } else {
            p += 1;
        }
    }
    best
}

fn groebner_member(name: &str, poly: &str, n: Option<usize>, equations: &[Equations], budget: u64) -> Result<Report> {
    let n = match n.or_else(|| infer_dimension(poly)) {
        Some(n) if (1..=9).contains(&n) => n,
        _ => return Err(CliError::Usage("cannot infer n from the polynomial; pass -n".into())),
    };
    let ring = structure_ring(n, MonomialOrder::DegRevLex);
    let p = ring.parse(poly)?;
    let gens: Vec<_> = homass_ideal_in(&ring, n, flags(equations)).into_iter().filter(|g| !g.is_zero()).collect();
    let mut r = Report::new(name);
    r.dim("n", n);
    r.dim("generators", gens.len());
    let (member, nf) = if gens.is_empty() {
        (p.is_zero(), p.clone())
    } else {
        let gb = buchberger(&gens, budget)?;
        r.groebner_stats(gb.stats());
        r.dim("basis", gb.polys().len());
        (ideal_membership(&p, &gb), gb.normal_form(&p))
    };
    r.detail("polynomial", json!(ring.format(&p)));
    r.detail("normal_form", json!(ring.format(&nf)));
    r.detail("member", json!(member));
    r.status = Status::from_holds(member);
    Ok(r)
}

fn noniso(name: &str, a: &Loaded, b: &Loaded, budget: u64) -> Result<Report> {
    let (x, y) = (&a.algebra, &b.algebra);
    let mut r = Report::new(name).label(&format!("{} {}", x.label, y.label));
    if x.dim() != y.dim() {
        r.detail("verdict", json!("different_dimension"));
        return Ok(r);
    }
    let (fx, fy) = (fingerprint(x)?, fingerprint(y)?);
    if fx != fy {
        r.detail("verdict", json!("separated_by_fingerprint"));
        r.detail("fingerprints", json!([fingerprint_json(&fx), fingerprint_json(&fy)]));
        return Ok(r);
    }
    match noniso_certificate(x, y, budget)? {
        NonIsoVerdict::ProvenNonIsomorphic { stats } => {
            r.detail("verdict", json!("proven_non_isomorphic"));
            r.groebner_stats(&stats);
        }
        NonIsoVerdict::Inconclusive { reason, stats } => {
            r.status = Status::Fail;
            r.detail("verdict", json!("inconclusive"));
            r.detail("reason", json!(reason));
            if let Some(s) = stats {
                r.stats = groebner_stats_json(&s);
            }
        }
    }
    Ok(r)
}

fn deform(name: &str, l: &Loaded, jet_path: &str, order: Option<usize>) -> Result<Report> {
    let a = &l.algebra;
    let text = read_source(jet_path)?;
    let doc = dsl::parse_jet(&text).map_err(|e| CliError::Parse { path: jet_path.into(), source: e })?;
    if doc.dim != a.dim() {
        return Err(AlgebraError::DimensionMismatch { context: "jet", expected: a.dim(), found: doc.dim }.into());
    }
    let jet = DeformationJet::new(a.clone(), doc.to_cochains())?;
    let up_to = order.unwrap_or(jet.order());
    if up_to > jet.order() {
        return Err(CliError::Usage(format!("order {up_to} exceeds the jet order {}", jet.order())));
    }
    let mut r = Report::new(name).label(&a.label);
    r.dim("order", up_to);
    r.absorb(&check_deformation(&jet, up_to)?);
    let rigid = rigidity_probe(a)? == Rigidity::RigidIndicated;
    r.detail("rigid_indicated", json!(rigid));
    if r.status == Status::Ok && jet.order() >= 1 {
        match first_obstruction(a, &jet.terms()[0])? {
            ObstructionResult::Extendable(mu2) => {
                r.detail("obstruction", json!("extendable"));
                let ext = DeformationJet::new(a.clone(), vec![jet.terms()[0].clone(), mu2])?;
                r.detail("extension", json!(dsl::serialize_jet(&format!("{}_ext", doc.label), &ext, &l.basis)));
            }
            ObstructionResult::Obstructed(_) => {
                r.detail("obstruction", json!("obstructed"));
            }
        }
    }
    Ok(r)
}

fn fingerprint_json(f: &homassoc::fingerprint::Fingerprint) -> Value {
    json!({
        "dim": f.dim,
        "rank_alpha": f.rank_alpha,
        "charpoly_alpha": vector_json(&f.charpoly_alpha),
        "der0": f.der0,
        "der1": f.der1,
        "center": f.center,
        "z2": f.z2,
        "b2": f.b2,
        "h2": f.h2,
        "z3": f.z3,
        "h3": f.h3,
    })
}

fn fingerprint_cmd(name: &str, l: &Loaded) -> Result<Report> {
    let a = &l.algebra;
    let f = fingerprint(a)?;
    let mut r = Report::new(name).label(&a.label);
    for (k, v) in [
        ("dim", f.dim),
        ("rank_alpha", f.rank_alpha),
        ("der0", f.der0),
        ("der1", f.der1),
        ("center", f.center),
        ("z2", f.z2),
        ("b2", f.b2),
        ("h2", f.h2),
        ("z3", f.z3),
        ("h3", f.h3),
    ] {
        r.dim(k, v);
    }
    r.detail("charpoly_alpha", vector_json(&f.charpoly_alpha));
    Ok(r)
}
