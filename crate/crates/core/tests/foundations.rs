//! Foundation checks: fixtures validate, censuses match the class labels,
//! canonical forms behave.

use dessin_core::canon::{canonical_form, decode, mirror};
use dessin_core::classify::{cubic_schemes, CubicClass};
use dessin_core::invariants::{
    degree, discrepancy, hyperbolic_parity_check, oval_census, weighted_counts_ok,
};
use dessin_core::star::{star, star0};
use dessin_core::validate::validate;

#[test]
fn star0_is_a_valid_hyperbolic_m_cubic() {
    let d = star0();
    let report = validate(&d);
    assert!(report.is_valid_dessin(), "star0: {:?}", report);
    assert_eq!(degree(&d), 3);
    assert!(weighted_counts_ok(&d));
    assert_eq!(d.euler_characteristic(), 1, "star0 lives on a disk");
    assert_eq!(d.boundary_component_count(), 1);
    assert!(d.orientable());

    let c = oval_census(&d).unwrap();
    assert!(c.hyperbolic);
    assert_eq!(c.l_odd, 1);
    assert_eq!(c.l_even, 0);
    assert_eq!(c.n_inner, 3);
    assert_eq!(c.delta, 0);
    assert_eq!(c.d, 0, "star0 is an M-dessin");
    assert_eq!(c.hyperbolic_defect(), 0);
    assert!(hyperbolic_parity_check(&d).unwrap());
}

#[test]
fn star_inflations_stay_valid_m_dessins() {
    for g in 0..3u32 {
        let d = star(g);
        let report = validate(&d);
        assert!(report.is_valid_dessin(), "star({}): {:?}", g, report);
        assert_eq!(degree(&d), 3);
        assert_eq!(d.euler_characteristic(), 1 - g as i64);
        assert_eq!(d.boundary_component_count(), 1 + g as usize);
        let c = oval_census(&d).unwrap();
        assert_eq!(c.l_even, g as i64, "star({}) has {} circles", g, g);
        assert_eq!(c.d, 0);
        assert_eq!(c.hyperbolic_defect(), 0);
        assert!(hyperbolic_parity_check(&d).unwrap());
    }
}

#[test]
fn schemes_build_and_validate() {
    for s in cubic_schemes() {
        let report = validate(&s.dessin);
        assert!(
            report.is_valid_dessin(),
            "scheme {}: {:?}",
            s.word,
            report
        );
        assert_eq!(degree(&s.dessin), 3, "scheme {}", s.word);
        assert!(weighted_counts_ok(&s.dessin), "scheme {}", s.word);
        assert_eq!(s.dessin.euler_characteristic(), 1, "scheme {} on a disk", s.word);
        assert_eq!(s.dessin.boundary_component_count(), 1, "scheme {}", s.word);
        assert!(s.dessin.orientable(), "scheme {}", s.word);
    }
}

#[test]
fn scheme_censuses_match_their_class_labels() {
    for s in cubic_schemes() {
        let c = oval_census(&s.dessin).unwrap();
        assert_eq!(c.n_oval, if s.label.has_oval() { 1 } else { 0 }, "{}", s.word);
        assert_eq!(c.n_zigzag, s.label.zigzags() as i64, "{}", s.word);
        assert_eq!(
            c.n_oval + c.n_zigzag + c.n_inner,
            3,
            "{}: weighted cross identity",
            s.word
        );
        assert_eq!(c.d, s.label.discrepancy(), "{}", s.word);
        assert_eq!(c.oval_count_defect(), 0, "{}", s.word);
    }
}

#[test]
fn scheme_class_labels_in_paper_order() {
    let labels: Vec<CubicClass> = cubic_schemes().iter().map(|s| s.label).collect();
    assert_eq!(
        labels,
        vec![
            CubicClass::II1,
            CubicClass::I1,
            CubicClass::I1,
            CubicClass::II3,
            CubicClass::I2,
            CubicClass::I1,
            CubicClass::II0,
            CubicClass::I0,
            CubicClass::I0,
            CubicClass::II2,
            CubicClass::II1,
        ]
    );
}

#[test]
fn canonical_forms_of_schemes() {
    let schemes = cubic_schemes();
    let forms: Vec<_> = schemes
        .iter()
        .map(|s| canonical_form(&s.dessin))
        .collect();
    // relabeling invariance: decoding and re-encoding is a fixed point
    for (s, f) in schemes.iter().zip(&forms) {
        let rebuilt = decode(f).unwrap_or_else(|e| panic!("decode {}: {}", s.word, e));
        assert!(validate(&rebuilt).is_valid_dessin(), "decoded {}", s.word);
        assert_eq!(&canonical_form(&rebuilt), f, "decode fixed point {}", s.word);
    }
    // mirror invariance
    for (s, f) in schemes.iter().zip(&forms) {
        assert_eq!(&canonical_form(&mirror(&s.dessin)), f, "mirror {}", s.word);
    }
    // the two mixed chains describe one dessin; all other schemes are
    // pairwise distinct
    let mut distinct = forms.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(distinct.len(), 10, "ten distinct cubics among eleven schemes");
    assert_eq!(forms[1], forms[2], "the two mixed chains coincide");
}

#[test]
fn star_canonical_form_is_stable() {
    let d = star0();
    let f = canonical_form(&d);
    let rebuilt = decode(&f).unwrap();
    assert_eq!(canonical_form(&rebuilt), f);
    assert_eq!(canonical_form(&mirror(&d)), f);
}

#[test]
fn double_cover_is_trichotomic() {
    for s in cubic_schemes() {
        let b = s.dessin.double_cover().unwrap();
        let report = validate(&b);
        assert!(report.is_trichotomic(), "double of {}: {:?}", s.word, report);
        assert_eq!(
            b.euler_characteristic(),
            2 * s.dessin.euler_characteristic(),
            "{}",
            s.word
        );
        assert_eq!(b.boundary_component_count(), 0, "double is closed");
    }
    let b = star0().double_cover().unwrap();
    assert!(validate(&b).is_trichotomic());
    assert_eq!(b.euler_characteristic(), 2);
}
