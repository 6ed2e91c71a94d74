use starcrit::constructions::{
    build_circulant, build_lemma1_case1, build_lemma1_case2, build_lemma1_case3,
    build_lemma1_case4, circular_distance, extend_lemma2_case1, extend_lemma2_case3,
    CirculantSpec, Construction,
};
use starcrit::detectors::{has_blue_star_plus_edge, is_good_coloring};
use starcrit::formulas::{r_formula, r_star_formula};
use starcrit::{HostSpec, TargetPair, TwoColoring};

fn degree_counts(c: &TwoColoring, red: bool) -> Vec<usize> {
    (0..c.order())
        .map(|v| {
            if red {
                c.red_degree(v).unwrap()
            } else {
                c.blue_degree(v).unwrap()
            }
        })
        .collect()
}

#[test]
fn every_generator_is_good_on_its_domain() {
    let mut checked = 0;
    for n in 3..=20 {
        for m in 3..=20 {
            let t = TargetPair::new(n, m).unwrap();
            for g in Construction::ALL {
                if g.applies(n, m) {
                    let c = g.build(n, m).unwrap();
                    assert!(is_good_coloring(&c, t), "{g} at ({n}, {m})");
                    checked += 1;
                } else {
                    assert!(g.build(n, m).is_err(), "{g} accepted ({n}, {m})");
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn constructions_sit_just_below_the_formulas() {
    for n in 3..=20 {
        for m in 3..=20 {
            let r = r_formula(n, m).unwrap();
            let rs = r_star_formula(n, m).unwrap();
            for g in Construction::ALL.into_iter().filter(|g| g.applies(n, m)) {
                let host = g.build(n, m).unwrap().host();
                match g {
                    Construction::Lemma2Case1 | Construction::Lemma2Case3 => {
                        assert_eq!(host, HostSpec::new(r - 1, rs - 1).unwrap(), "{g} ({n},{m})");
                    }
                    _ => assert_eq!(host, HostSpec::complete(r - 1).unwrap(), "{g} ({n},{m})"),
                }
            }
        }
    }
}

#[test]
fn case1_degree_profile() {
    for n in (4..=20).step_by(2) {
        for m in (n + 2..=22).step_by(2) {
            let c = build_lemma1_case1(n, m).unwrap();
            let red = degree_counts(&c, true);
            assert_eq!(red.iter().filter(|&&d| d == n - 1).count(), m - 2);
            assert!(red.iter().all(|&d| d == n - 1 || d == n - 2));
            let blue = degree_counts(&c, false);
            assert!(blue.iter().all(|&d| d == m - 1 || d == m - 2));
        }
    }
}

#[test]
fn case2_and_case3_are_regular() {
    for n in (3..=19).step_by(2) {
        for m in n + 2..=21 {
            let c = build_lemma1_case2(n, m).unwrap();
            assert!(degree_counts(&c, true).iter().all(|&d| d == n - 1));
            assert!(degree_counts(&c, false).iter().all(|&d| d == m - 1));
        }
    }
    for n in (4..=18).step_by(2) {
        for m in (n + 3..=21).step_by(2) {
            let c = build_lemma1_case3(n, m).unwrap();
            assert!(degree_counts(&c, true).iter().all(|&d| d == n - 1));
            assert!(degree_counts(&c, false).iter().all(|&d| d == m - 1));
        }
    }
}

#[test]
fn case4_blue_graph_is_triangle_free() {
    for n in 3..=20 {
        let c = build_lemma1_case4(n).unwrap();
        assert!(!has_blue_star_plus_edge(&c, 2));
        let c = extend_lemma2_case3(n, 3).unwrap();
        assert!(!has_blue_star_plus_edge(&c, 2));
    }
}

#[test]
fn circulant_colors_are_symmetric() {
    for order in 2..=16 {
        let dists: Vec<usize> = (1..=order / 2).filter(|d| d % 2 == 1).collect();
        let c = build_circulant(&CirculantSpec::new(order, dists.clone(), [])).unwrap();
        for i in 0..order {
            for j in 0..order {
                if i != j {
                    assert_eq!(c.is_red(i, j), c.is_red(j, i));
                    assert_eq!(c.is_red(i, j), dists.contains(&circular_distance(i, j, order)));
                }
            }
        }
    }
}

#[test]
fn lemma2_case1_pendant_profile() {
    for n in (4..=12).step_by(2) {
        for m in (n + 2..=16).step_by(2) {
            let c = extend_lemma2_case1(n, m).unwrap();
            let x = c.host().pendant().unwrap();
            assert_eq!(c.host(), HostSpec::new(n + m - 2, n + m - 3).unwrap());
            assert_eq!(c.red_degree(x).unwrap(), n - 1);
            assert_eq!(c.blue_degree(x).unwrap(), m - 2);
            // the pendant's blue neighbors are exactly the diagonal endpoints
            let core = c.shrink_pendant(0).unwrap();
            for v in c.blue_neighborhood(x).unwrap() {
                assert_eq!(core.red_degree(v).unwrap(), n - 1);
            }
        }
    }
}

#[test]
fn restriction_round_trips_lemma2_case3() {
    let c = extend_lemma2_case3(6, 7).unwrap();
    let core: Vec<_> = (0..12).collect();
    assert_eq!(c.restrict(&core).unwrap(), build_lemma1_case4(6).unwrap());
    let clique: Vec<_> = (0..6).collect();
    assert_eq!(
        build_lemma1_case4(6).unwrap().restrict(&clique).unwrap(),
        TwoColoring::all_red(HostSpec::complete(6).unwrap())
    );
}
