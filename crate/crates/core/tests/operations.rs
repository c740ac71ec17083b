use shellgcd::format::{parse_complex, parse_json, to_json, to_text};
use shellgcd::random::{random_complex, random_flag_complex};
use shellgcd::verify::{verify_fixtures, PaperFixtures};
use shellgcd::{
    check_shelling_order, check_strong_gcd_order, check_weak_shelling_order, find_shelling_order,
    find_strong_gcd_order, find_weak_shelling_order, fixtures, is_sequentially_cm, reduced_homology,
    trivial_weak_shellability, Complex, Error, Face, FieldSpec, SearchConfig, SearchOutcome, TrivialWeak, VertexSet,
};

fn on(lo: i64, hi: i64, facets: &[&[i64]]) -> Complex {
    Complex::from_labelled_facets(VertexSet::range(lo, hi), facets.iter().map(|f| f.iter().copied())).unwrap()
}

fn faces(c: &Complex, sets: &[&[i64]]) -> Vec<Face> {
    let mut v: Vec<Face> = sets
        .iter()
        .map(|s| c.universe().face(s.iter().copied()).unwrap())
        .collect();
    v.sort();
    v
}

fn nonface_complex(lo: i64, hi: i64, nonfaces: &[&[i64]]) -> Complex {
    let u = VertexSet::range(lo, hi);
    let m: Vec<Face> = nonfaces.iter().map(|s| u.face(s.iter().copied()).unwrap()).collect();
    Complex::from_minimal_nonfaces(u, m).unwrap()
}

#[test]
fn construction() {
    let c = on(1, 6, &[&[1, 2, 3], &[3, 4, 5], &[4, 5, 6]]);
    assert_eq!(c.facets().len(), 3);
    assert_eq!(c.dim(), Some(2));
    assert_eq!(on(1, 2, &[&[1, 2], &[1]]).facets(), faces(&on(1, 2, &[]), &[&[1, 2]]));
    let void = on(1, 3, &[]);
    assert!(void.is_void());
    assert_eq!(void.dim(), None);
    assert_eq!(on(1, 3, &[&[]]).dim(), Some(-1));
}

#[test]
fn duals() {
    let d1 = fixtures::delta1();
    let dual = d1.alexander_dual();
    assert_eq!(
        dual.facets(),
        faces(&dual, &[&[1, 2, 3], &[3, 4, 5], &[4, 5, 6]]).as_slice()
    );
    assert_eq!(dual.alexander_dual(), d1);

    let d3_dual = fixtures::delta3().alexander_dual();
    let want = faces(
        &d3_dual,
        &[
            &[2, 3, 4, 7, 8, 9],
            &[0, 3, 4, 5, 8, 9],
            &[0, 1, 4, 5, 6, 9],
            &[0, 1, 2, 5, 6, 7],
            &[1, 2, 3, 6, 7, 8],
            &[0, 1, 2, 3, 4],
        ],
    );
    assert_eq!(d3_dual.facets(), want.as_slice());

    let simplex = on(1, 3, &[&[1, 2, 3]]);
    assert!(simplex.minimal_nonfaces().is_empty());
    assert!(simplex.alexander_dual().is_void());
}

#[test]
fn nonface_constructions() {
    assert_eq!(
        nonface_complex(1, 6, &[&[1, 2, 3], &[1, 2, 6], &[4, 5, 6]]),
        fixtures::delta1()
    );
    let k = nonface_complex(0, 4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
    assert_eq!(k, fixtures::k());
    assert_eq!(
        k.facets(),
        faces(&k, &[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]]).as_slice()
    );
    assert!(nonface_complex(1, 4, &[]).is_full_simplex());
    let u = VertexSet::range(1, 3);
    assert!(matches!(
        Complex::from_minimal_nonfaces(u, [Face::EMPTY]),
        Err(Error::EmptyNonface)
    ));
}

#[test]
fn links_and_skeleta() {
    let dual = fixtures::delta1().alexander_dual();
    let link = dual.link(dual.universe().face([3]).unwrap()).unwrap();
    assert_eq!(link.facets(), faces(&dual, &[&[1, 2], &[4, 5]]).as_slice());
    assert_eq!(dual.link(Face::EMPTY).unwrap(), dual);
    let tri = on(1, 3, &[&[1, 2, 3]]);
    assert_eq!(
        tri.link(tri.universe().face([1]).unwrap()).unwrap().facets(),
        faces(&tri, &[&[2, 3]]).as_slice()
    );

    let d3_dual = fixtures::delta3().alexander_dual();
    let gamma = d3_dual.pure_skeleton(5).unwrap();
    let six: Vec<Face> = d3_dual.facets().iter().copied().filter(|f| f.len() == 6).collect();
    assert_eq!(six.len(), 5);
    assert_eq!(gamma.facets(), six.as_slice());
    assert_eq!(gamma, fixtures::gamma());
    let k = fixtures::k();
    assert_eq!(k.pure_skeleton(1).unwrap(), k);
    let hat = fixtures::dunce_hat();
    assert_eq!(
        hat.pure_skeleton(0).unwrap().facets(),
        (0..8).map(Face::singleton).collect::<Vec<_>>().as_slice()
    );
}

#[test]
fn flags() {
    assert!(fixtures::k().is_flag());
    assert!(!fixtures::delta1().is_flag());
    assert!(on(1, 4, &[&[1, 2, 3, 4]]).is_flag());
    assert!(random_flag_complex(1, 6, 0.5).unwrap().is_flag());
    assert!(random_complex(3, 5, 1.0).unwrap().is_full_simplex());
}

#[test]
fn order_checks() {
    let c = on(1, 4, &[&[1, 2, 3], &[2, 3, 4]]);
    assert!(check_shelling_order(&c, c.facets()).unwrap().verdict);
    let c = on(1, 4, &[&[1, 2], &[3, 4]]);
    let mut rev = c.facets().to_vec();
    rev.reverse();
    assert!(!check_shelling_order(&c, c.facets()).unwrap().verdict);
    assert!(!check_shelling_order(&c, &rev).unwrap().verdict);
    let c = on(1, 4, &[&[1, 2, 3], &[3, 4]]);
    let listed = faces(&c, &[&[1, 2, 3]])
        .into_iter()
        .chain(faces(&c, &[&[3, 4]]))
        .collect::<Vec<_>>();
    assert!(check_shelling_order(&c, &listed).unwrap().verdict);

    let hat = fixtures::dunce_hat();
    assert!(
        check_weak_shelling_order(&hat, &fixtures::dunce_hat_listed_order())
            .unwrap()
            .verdict
    );
    let single = on(1, 3, &[&[1, 2]]);
    assert!(check_weak_shelling_order(&single, single.facets()).unwrap().verdict);

    assert!(
        check_strong_gcd_order(&fixtures::delta1(), &fixtures::delta1_nonface_order())
            .unwrap()
            .verdict
    );
    let cycle = on(1, 4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
    let m = cycle.minimal_nonfaces();
    assert!(!check_strong_gcd_order(&cycle, &m).unwrap().verdict);
    assert!(!check_strong_gcd_order(&cycle, &[m[1], m[0]]).unwrap().verdict);
    let one = nonface_complex(1, 3, &[&[1, 2]]);
    assert!(check_strong_gcd_order(&one, &one.minimal_nonfaces()).unwrap().verdict);
}

#[test]
fn order_search() {
    let cfg = SearchConfig::default();
    assert_eq!(
        find_shelling_order(&fixtures::delta1().alexander_dual(), &cfg),
        SearchOutcome::NoneExists
    );
    assert_eq!(
        find_shelling_order(&fixtures::dunce_hat(), &cfg),
        SearchOutcome::NoneExists
    );
    let c = on(1, 4, &[&[1, 2, 3], &[2, 3, 4]]);
    assert!(
        find_shelling_order(&c, &cfg)
            .certificate()
            .unwrap()
            .verify(&c)
            .unwrap()
            .verdict
    );

    assert_eq!(
        find_weak_shelling_order(&fixtures::delta3().alexander_dual(), &cfg),
        SearchOutcome::NoneExists
    );
    let hat = fixtures::dunce_hat();
    assert_eq!(
        find_weak_shelling_order(&hat, &cfg).certificate().unwrap().sequence,
        hat.facets()
    );
    let single = on(1, 3, &[&[1, 2]]);
    assert_eq!(
        find_weak_shelling_order(&single, &cfg).certificate().unwrap().sequence,
        single.facets()
    );

    let d1 = fixtures::delta1();
    assert!(
        find_strong_gcd_order(&d1, &cfg)
            .certificate()
            .unwrap()
            .verify(&d1)
            .unwrap()
            .verdict
    );
    assert_eq!(
        find_strong_gcd_order(&fixtures::delta3(), &cfg),
        SearchOutcome::NoneExists
    );
    let one = nonface_complex(1, 3, &[&[1, 2]]);
    assert!(find_strong_gcd_order(&one, &cfg).exists().unwrap());

    assert_eq!(
        trivial_weak_shellability(&hat),
        TrivialWeak::TriviallyYes { dimension_bound: true }
    );
    assert_eq!(
        trivial_weak_shellability(&on(1, 3, &[&[1, 2], &[2, 3], &[1, 3]])),
        TrivialWeak::Inconclusive
    );
    assert!(matches!(
        trivial_weak_shellability(&single),
        TrivialWeak::TriviallyYes { .. }
    ));
}

#[test]
fn homology_and_scm() {
    for f in FieldSpec::defaults() {
        let h = reduced_homology(&fixtures::k(), f).unwrap();
        assert_eq!((h.rank(0), h.rank(1)), (0, 1));
        assert!(reduced_homology(&on(1, 5, &[&[1, 2, 3, 4, 5]]), f)
            .unwrap()
            .is_acyclic());
        let d3_dual = fixtures::delta3().alexander_dual();
        assert!(!is_sequentially_cm(&d3_dual, f).unwrap().verdict);
        let hat = is_sequentially_cm(&fixtures::dunce_hat(), f).unwrap();
        assert!(hat.verdict);
    }
    assert!(matches!(
        reduced_homology(&on(1, 2, &[]), FieldSpec::GF2),
        Err(Error::VoidComplex)
    ));
}

#[test]
fn documents() {
    let d1 = parse_json(r#"{"vertices":[1,2,3,4,5,6], "nonfaces":[[1,2,3],[1,2,6],[4,5,6]]}"#).unwrap();
    assert_eq!(d1, fixtures::delta1());
    let edge = parse_json(r#"{"vertices":[1,2], "facets":[[1,2]]}"#).unwrap();
    assert!(edge.is_full_simplex() && edge.dim() == Some(1));
    let err = parse_json(r#"{"vertices":[1], "facets":[[1]], "nonfaces":[[1]]}"#).unwrap_err();
    assert!(matches!(err, Error::AmbiguousForm));
    for c in [
        fixtures::delta1(),
        fixtures::dunce_hat(),
        fixtures::k(),
        on(1, 3, &[&[]]),
    ] {
        assert_eq!(parse_complex(&to_json(&c)).unwrap(), c);
        assert_eq!(parse_complex(&to_text(&c)).unwrap(), c);
    }
}

#[test]
fn verification_and_negative_controls() {
    let cfg = SearchConfig::default();
    assert!(verify_fixtures(&PaperFixtures::default(), &cfg).all_passed());

    let mut fx = PaperFixtures::default();
    fx.delta1_nonface_order.reverse();
    let reversed = check_strong_gcd_order(&fx.delta1, &fx.delta1_nonface_order).unwrap();
    let claim = verify_fixtures(&fx, &cfg);
    let c = claim.claim("e1.sgcd-order").unwrap();
    assert_eq!(c.passed, reversed.verdict);
    assert!(c.detail.contains(&format!("verdict {}", reversed.verdict)));
    // the only disjoint pair is still filled by the middle non-face
    assert!(reversed.verdict);

    let mut fx = PaperFixtures::default();
    let hat = &fx.dunce_hat;
    fx.dunce_hat = Complex::from_facets(hat.universe_arc().clone(), hat.facets()[1..].iter().copied()).unwrap();
    let report = verify_fixtures(&fx, &cfg);
    let cm = report.claim("e2.cm").unwrap();
    assert!(!cm.passed);
    assert!(cm.detail.contains("fails at"), "{}", cm.detail);
    assert!(!report.all_passed());
}
