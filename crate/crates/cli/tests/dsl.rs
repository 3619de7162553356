use homassoc::algebra::Cochain;
use homassoc::catalog::{catalog_entries, catalog_get, Params};
use homassoc::{GaussianRational, HomAlgebra, Matrix, Rational};
use homassoc_cli::dsl::{parse, parse_algebra, serialize, serialize_with_basis, ParseError};
use proptest::prelude::*;

#[test]
fn catalog_entries_round_trip() {
    for e in catalog_entries() {
        let a = e.instantiate(&e.default_params()).unwrap();
        assert_eq!(parse_algebra(&serialize(&a)).unwrap(), a, "{}", e.id);
        assert_eq!(parse_algebra(&serialize_with_basis(&a, &e.basis_names())).unwrap(), a, "{}", e.id);
    }
}

#[test]
fn sample_document_is_a2_4() {
    let text = "algebra A2_4\ndim 2\nbasis e1 e2\nmul e1 e1 = e1\nmul e1 e2 = e2\nmul e2 e1 = e2\nalpha e1 = e1\nalpha e2 = e2\n";
    assert_eq!(parse_algebra(text).unwrap(), catalog_get("A2_4", &Params::new()).unwrap());
}

#[test]
fn comments_blank_lines_and_signs() {
    let text = "# header\nalgebra x\n\ndim 2\nbasis u v   # names\nunit u\nmul u u = u\nmul u v = v\nmul v u = v\nmul v v = -u + 2/3*v\nalpha u = u\nalpha v = +v\n";
    let doc = parse(text).unwrap();
    assert_eq!(doc.unit.as_deref(), Some("u"));
    let a = doc.to_algebra();
    assert_eq!(a.unit(), Some(0));
    assert_eq!(a.mul_basis(1, 1), &[GaussianRational::from_integer(-1), GaussianRational::ratio(2, 3)]);
}

fn error(text: &str) -> ParseError {
    parse(text).unwrap_err()
}

#[test]
fn documented_errors_carry_positions() {
    let e = error("algebra a\ndim 2\nbasis e1 e2\nmul e1 e9 = e1\n");
    assert_eq!((e.line, e.column), (4, 8));
    assert_eq!(e.message, "unknown basis name e9");
    let e = error("algebra a\ndim 2\nbasis e1 e2\nmul e2 e2 = e1\nmul e2 e2 = e1\n");
    assert_eq!((e.line, e.column), (5, 1));
    let e = error("algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = 1/*e1\n");
    assert_eq!(e.line, 4);
    assert!(e.message.starts_with("malformed scalar"), "{}", e.message);
    let e = error("algebra a\ndim 1\nbasis e1 e2\n");
    assert!(e.message.starts_with("dim mismatch"));
}

#[test]
fn other_errors() {
    assert!(error("").message.contains("empty"));
    assert_eq!(error("map a\ndim 1\nbasis e1\n").expected, vec!["algebra".to_string()]);
    assert!(error("algebra a\ndim 2\nbasis e1 e1\n").message.contains("duplicate basis name"));
    assert!(error("algebra a\ndim 1\nbasis i\n").message.contains("reserved"));
    assert!(error("algebra a\ndim 1\nbasis e1\nmul e1 e1 = e1 e1\n").expected.contains(&"`+`".to_string()));
    assert!(error("algebra a\ndim 1\nbasis e1\nfoo e1\n").expected.contains(&"mul".to_string()));
    assert!(error("algebra a\ndim 1\nbasis e1\nmul e1 e1 = (1+2)*e1\n").message.contains("malformed scalar"));
    assert!(error("algebra a\ndim 1\nbasis e1\nmul e1 e1 = e1 $\n").message.contains("unexpected character"));
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        3 => Just(GaussianRational::zero()),
        1 => (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3).prop_map(|(a, b, c, d)| {
            GaussianRational::new(Rational::new(a, b).unwrap(), Rational::new(c, d).unwrap())
        }),
        1 => (-5i64..=5).prop_map(GaussianRational::from_integer),
    ]
}

fn algebra() -> impl Strategy<Value = HomAlgebra> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(scalar(), n * n * n),
            prop::collection::vec(scalar(), n * n),
            prop::option::of(0..n),
            "[a-zA-Z][a-zA-Z0-9_]{0,6}",
        )
            .prop_map(move |(p, t, unit, label)| {
                let product = Cochain::from_coeffs(n, 2, p).unwrap();
                let rows = t.chunks(n).map(|r| r.to_vec()).collect();
                HomAlgebra::new(label, product, Matrix::from_rows(rows).unwrap(), unit).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialize_then_parse_is_the_identity(a in algebra()) {
        prop_assert_eq!(parse_algebra(&serialize(&a)).unwrap(), a);
    }

    #[test]
    fn serialization_is_canonical(a in algebra()) {
        let text = serialize(&a);
        prop_assert_eq!(serialize(&parse_algebra(&text).unwrap()), text);
    }
}
