//! Randomized invariants over generated contexts and queries.

use proptest::prelude::*;

use latql_core::algebra;
use latql_core::export::{write_lattice, Format};
use latql_core::io::{read_burmeister, write_burmeister};
use latql_core::lattice::build_lattice;
use latql_core::oracle;
use latql_core::query::{parse_query, print_condition};
use latql_core::FormalContext;

fn arb_context() -> impl Strategy<Value = FormalContext> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(g, m)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), m), g)
        })
        .prop_map(|rows| {
            let g = rows.len();
            let m = rows[0].len();
            FormalContext::new(
                (0..g).map(|i| format!("g{i}")).collect(),
                (0..m).map(|i| format!("m{i}")).collect(),
                rows,
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn closure_laws(k in arb_context(), mask in any::<u64>()) {
        let g = k.object_count();
        let x = latql_core::ObjectSet::from_indices(
            g,
            (0..g).filter(|i| mask & (1 << i) != 0),
        ).unwrap();
        let xc = k.closure_objects(&x).unwrap();
        prop_assert!(x.is_subset(&xc));
        prop_assert_eq!(k.closure_objects(&xc).unwrap(), xc.clone());
        // Galois: X ⊆ Y′ ⟺ Y ⊆ X′ on the derived pair
        let xp = k.derive_objects(&x).unwrap();
        prop_assert_eq!(k.derive_attributes(&xp).unwrap(), xc);
    }

    #[test]
    fn lattice_matches_oracle(k in arb_context()) {
        let lat = build_lattice(&k);
        let pairs: Vec<_> = lat
            .concepts()
            .iter()
            .map(|c| (c.extent().clone(), c.intent().clone()))
            .collect();
        prop_assert_eq!(oracle::diff_against_lattice(&k, &pairs), (0, 0));
    }

    #[test]
    fn joins_and_meets_are_bounds(k in arb_context()) {
        let lat = build_lattice(&k);
        for c in 0..lat.len() {
            for d in 0..lat.len() {
                let j = lat.join(c, d).unwrap();
                prop_assert!(lat.le(c, j) && lat.le(d, j));
                let m = lat.meet(c, d).unwrap();
                prop_assert!(lat.le(m, c) && lat.le(m, d));
                // least / greatest among concepts bounding both
                for e in 0..lat.len() {
                    if lat.le(c, e) && lat.le(d, e) {
                        prop_assert!(lat.le(j, e));
                    }
                    if lat.le(e, c) && lat.le(e, d) {
                        prop_assert!(lat.le(e, m));
                    }
                }
            }
        }
    }

    #[test]
    fn weak_negation_is_antitone_on_comparables(k in arb_context()) {
        let lat = build_lattice(&k);
        for c in 0..lat.len() {
            for d in 0..lat.len() {
                if lat.le(c, d) {
                    let nc = algebra::weak_negation(&lat, c).unwrap();
                    let nd = algebra::weak_negation(&lat, d).unwrap();
                    prop_assert!(lat.le(nd, nc));
                }
            }
        }
    }

    #[test]
    fn burmeister_roundtrip(k in arb_context()) {
        let text = write_burmeister(&k, "t");
        let back = read_burmeister(&text, "t.cxt").unwrap();
        prop_assert_eq!(&back, &k);
        prop_assert_eq!(write_burmeister(&back, "t"), text);
    }

    #[test]
    fn rendering_is_deterministic(k in arb_context()) {
        let lat = build_lattice(&k);
        for format in [Format::Text, Format::Json, Format::Dot] {
            prop_assert_eq!(
                write_lattice(&lat, None, format),
                write_lattice(&build_lattice(&k), None, format)
            );
        }
    }

    #[test]
    fn condition_print_parse_roundtrip(names in proptest::collection::vec("[a-z][a-z0-9 ]{0,6}", 1..4)) {
        use latql_core::algebra::Condition;
        let atoms: Vec<Condition> = names.iter().map(|n| Condition::Atom(n.clone())).collect();
        let cond = if atoms.len() == 1 {
            atoms[0].clone()
        } else {
            Condition::Or(vec![Condition::And(atoms.clone()), atoms[0].clone()])
        };
        let q = format!("SELECT(k, {})", print_condition(&cond));
        let ast = parse_query(&q).unwrap();
        prop_assert_eq!(ast.to_string(), q);
    }
}
