//! Lower-bound colorings for `r` and `r_*`.
//!
//! Vertices `v_0 … v_{N-1}` sit on a convex `N`-gon; a circulant coloring colors
//! `{v_i, v_j}` by the circular distance between `i` and `j`, optionally with some
//! diametral "diagonal" edges forced red.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::coloring::{HostSpec, TwoColoring};
use crate::error::ConstructionError;
use crate::formulas::CaseTag;

/// Distance-set description of a circulant coloring of `K_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    pub order: usize,
    pub red_distances: BTreeSet<usize>,
    /// `i` here makes `{i, i + order/2}` red.
    pub red_diagonals: BTreeSet<usize>,
    pub description: Option<CaseTag>,
}

impl CirculantSpec {
    pub fn new<D, G>(order: usize, red_distances: D, red_diagonals: G) -> Self
    where
        D: IntoIterator<Item = usize>,
        G: IntoIterator<Item = usize>,
    {
        Self {
            order,
            red_distances: red_distances.into_iter().collect(),
            red_diagonals: red_diagonals.into_iter().collect(),
            description: None,
        }
    }

    pub fn with_description(mut self, tag: CaseTag) -> Self {
        self.description = Some(tag);
        self
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = self.order;
        if n == 0 {
            return Err(ConstructionError::EmptyCirculant);
        }
        let max = n / 2;
        if let Some(&d) = self.red_distances.iter().find(|&&d| d == 0 || d > max) {
            return Err(ConstructionError::BadDistance { distance: d, max });
        }
        if !self.red_diagonals.is_empty() {
            if n % 2 == 1 {
                return Err(ConstructionError::DiagonalOnOddOrder { order: n });
            }
            if let Some(&i) = self.red_diagonals.iter().find(|&&i| i >= n) {
                return Err(ConstructionError::BadDiagonal { index: i, order: n });
            }
            if self.red_distances.contains(&max) {
                return Err(ConstructionError::RedundantDiagonals);
            }
        }
        Ok(())
    }
}

/// Circular distance between two positions on an `order`-gon.
pub fn circular_distance(i: usize, j: usize, order: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(order - d)
}

pub fn build_circulant(spec: &CirculantSpec) -> Result<TwoColoring, ConstructionError> {
    spec.validate()?;
    let n = spec.order;
    let host = HostSpec::complete(n)?;
    let mut c = TwoColoring::all_blue(host);
    for i in 0..n {
        for j in i + 1..n {
            if spec.red_distances.contains(&circular_distance(i, j, n)) {
                c.set_red(i, j, true)?;
            }
        }
    }
    for &i in &spec.red_diagonals {
        c.set_red(i, (i + n / 2) % n, true)?;
    }
    Ok(c)
}

fn complement(c: &TwoColoring) -> TwoColoring {
    let host = c.host();
    let rows = (0..c.order())
        .map(|v| host.neighbors(v) & !c.red_row(v))
        .collect();
    TwoColoring::from_red_rows(host, rows).expect("complement of a valid coloring is valid")
}

fn require(
    ok: bool,
    construction: &'static str,
    condition: &'static str,
    n: usize,
    m: usize,
) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::Precondition {
            construction,
            condition,
            n,
            m,
        })
    }
}

fn case1_checks(name: &'static str, n: usize, m: usize) -> Result<(), ConstructionError> {
    require(n >= 4 && n.is_multiple_of(2), name, "n even and n >= 4", n, m)?;
    require(m.is_multiple_of(2), name, "m even", n, m)?;
    require(n + 2 <= m, name, "n <= m - 2", n, m)
}

fn case1_spec(n: usize, m: usize) -> CirculantSpec {
    CirculantSpec::new(n + m - 2, 1..=(n - 2) / 2, 0..(m - 2) / 2)
        .with_description(CaseTag::BothEvenSmallN)
}

/// `K_{n+m-2}` with red distances `1..=(n-2)/2` and red diagonals at `0..(m-2)/2`.
/// Red degrees are `n-1` on diagonal endpoints and `n-2` elsewhere.
pub fn build_lemma1_case1(n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
    case1_checks("lemma1_case1", n, m)?;
    build_circulant(&case1_spec(n, m))
}

/// `K_{n+m-1}` with red distances `1..=(n-1)/2`: red `(n-1)`-regular, blue `(m-1)`-regular.
pub fn build_lemma1_case2(n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
    const NAME: &str = "lemma1_case2";
    require(n >= 3 && n % 2 == 1, NAME, "n odd and n >= 3", n, m)?;
    require(n + 2 <= m, NAME, "n <= m - 2", n, m)?;
    let spec =
        CirculantSpec::new(n + m - 1, 1..=(n - 1) / 2, []).with_description(CaseTag::OddSmallN);
    build_circulant(&spec)
}

/// `K_{n+m-1}` whose blue graph is the circulant with distances `1..=(m-1)/2`.
pub fn build_lemma1_case3(n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
    const NAME: &str = "lemma1_case3";
    require(n >= 4 && n.is_multiple_of(2), NAME, "n even and n >= 4", n, m)?;
    require(m % 2 == 1, NAME, "m odd", n, m)?;
    require(n + 2 <= m, NAME, "n <= m - 2", n, m)?;
    let blue =
        CirculantSpec::new(n + m - 1, 1..=(m - 1) / 2, []).with_description(CaseTag::OddSmallN);
    Ok(complement(&build_circulant(&blue)?))
}

/// `K_{2n}` with red `2K_n` on `{0..n-1}`, `{n..2n-1}` and blue `K_{n,n}` between them.
pub fn build_lemma1_case4(n: usize) -> Result<TwoColoring, ConstructionError> {
    require(n >= 3, "lemma1_case4", "n >= 3", n, 0)?;
    let host = HostSpec::complete(2 * n)?;
    let edges = (0..2 * n)
        .flat_map(|i| (i + 1..2 * n).map(move |j| (i, j)))
        .filter(|&(i, j)| (i < n) == (j < n));
    Ok(TwoColoring::from_red_edges(host, edges)?)
}

/// `K_{n+m-2} ⊔ K_{1,n+m-3}` extending the first construction.
///
/// The pendant vertex is blue to the `m-2` diagonal endpoints and red to the
/// other core vertices except one, which it misses. That missed vertex is
/// `v_{(n+m-4)/2}` on the polygon; the core is relabelled by the half-turn
/// `i -> i + (n+m-2)/2`, an automorphism of the core coloring, so the missed
/// vertex becomes the last core index and the attachment is normalized.
pub fn extend_lemma2_case1(n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
    case1_checks("lemma2_case1", n, m)?;
    let core = build_lemma1_case1(n, m)?;
    let order = n + m - 2;
    let half = order / 2;
    let rotate = |i: usize| (i + half) % order;

    let mut diagonal_ends = BTreeSet::new();
    for i in 0..(m - 2) / 2 {
        diagonal_ends.insert(rotate(i));
        diagonal_ends.insert(rotate(i + half));
    }
    let missed = rotate((n + m - 4) / 2);
    debug_assert_eq!(missed, order - 1);

    let red: Vec<usize> = (0..order)
        .filter(|v| *v != missed && !diagonal_ends.contains(v))
        .collect();
    Ok(core.with_pendant(order - 1, &red)?)
}

/// `K_{2n} ⊔ K_{1,n}`: the fourth construction plus a vertex blue to the red clique `{0..n-1}`.
pub fn extend_lemma2_case3(n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
    const NAME: &str = "lemma2_case3";
    require(n >= 3 && m >= 3, NAME, "n, m >= 3", n, m)?;
    require(n + 2 > m, NAME, "n > m - 2", n, m)?;
    Ok(build_lemma1_case4(n)?.with_pendant(n, &[])?)
}

/// The six generators, addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Lemma1Case1,
    Lemma1Case2,
    Lemma1Case3,
    Lemma1Case4,
    Lemma2Case1,
    Lemma2Case3,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::Lemma1Case1,
        Construction::Lemma1Case2,
        Construction::Lemma1Case3,
        Construction::Lemma1Case4,
        Construction::Lemma2Case1,
        Construction::Lemma2Case3,
    ];

    pub fn short_name(&self) -> &'static str {
        match self {
            Construction::Lemma1Case1 => "l1c1",
            Construction::Lemma1Case2 => "l1c2",
            Construction::Lemma1Case3 => "l1c3",
            Construction::Lemma1Case4 => "l1c4",
            Construction::Lemma2Case1 => "l2c1",
            Construction::Lemma2Case3 => "l2c3",
        }
    }

    /// Whether `(n, m)` lies in this generator's domain.
    pub fn applies(&self, n: usize, m: usize) -> bool {
        let small = n >= 3 && n + 2 <= m;
        match self {
            Construction::Lemma1Case1 | Construction::Lemma2Case1 => {
                small && n.is_multiple_of(2) && m.is_multiple_of(2)
            }
            Construction::Lemma1Case2 => small && n % 2 == 1,
            Construction::Lemma1Case3 => small && n.is_multiple_of(2) && m % 2 == 1,
            Construction::Lemma1Case4 | Construction::Lemma2Case3 => {
                n >= 3 && m >= 3 && n + 2 > m
            }
        }
    }

    pub fn build(&self, n: usize, m: usize) -> Result<TwoColoring, ConstructionError> {
        match self {
            Construction::Lemma1Case1 => build_lemma1_case1(n, m),
            Construction::Lemma1Case2 => build_lemma1_case2(n, m),
            Construction::Lemma1Case3 => build_lemma1_case3(n, m),
            Construction::Lemma1Case4 => {
                require(n + 2 > m, "lemma1_case4", "n > m - 2", n, m)?;
                build_lemma1_case4(n)
            }
            Construction::Lemma2Case1 => extend_lemma2_case1(n, m),
            Construction::Lemma2Case3 => extend_lemma2_case3(n, m),
        }
    }

    pub fn case_tag(&self) -> CaseTag {
        match self {
            Construction::Lemma1Case1 | Construction::Lemma2Case1 => CaseTag::BothEvenSmallN,
            Construction::Lemma1Case2 | Construction::Lemma1Case3 => CaseTag::OddSmallN,
            Construction::Lemma1Case4 | Construction::Lemma2Case3 => CaseTag::LargeN,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Construction::ALL
            .into_iter()
            .find(|c| c.short_name() == s)
            .ok_or_else(|| format!("unknown construction {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::{has_blue_star_plus_edge, has_red_star, is_good_coloring, TargetPair};

    fn red_degrees(c: &TwoColoring) -> Vec<usize> {
        (0..c.order()).map(|v| c.red_degree(v).unwrap()).collect()
    }

    fn blue_degrees(c: &TwoColoring) -> Vec<usize> {
        (0..c.order()).map(|v| c.blue_degree(v).unwrap()).collect()
    }

    #[test]
    fn circulant_seven_cycle() {
        let c = build_circulant(&CirculantSpec::new(7, [1], [])).unwrap();
        assert!(red_degrees(&c).iter().all(|&d| d == 2));
        assert!(c.is_red(0, 6) && c.is_red(3, 4) && !c.is_red(0, 2));
    }

    #[test]
    fn circulant_empty_is_all_blue() {
        let c = build_circulant(&CirculantSpec::new(4, [], [])).unwrap();
        assert_eq!(c, TwoColoring::all_blue(HostSpec::complete(4).unwrap()));
    }

    #[test]
    fn circulant_figure_one() {
        let c = build_circulant(&CirculantSpec::new(16, [1, 2, 3], [0, 1, 2, 3])).unwrap();
        let d = red_degrees(&c);
        assert_eq!(d.iter().filter(|&&x| x == 7).count(), 8);
        assert_eq!(d.iter().filter(|&&x| x == 6).count(), 8);
    }

    #[test]
    fn circulant_rejects_bad_specs() {
        assert!(matches!(
            build_circulant(&CirculantSpec::new(7, [4], [])),
            Err(ConstructionError::BadDistance { distance: 4, max: 3 })
        ));
        assert!(matches!(
            build_circulant(&CirculantSpec::new(7, [0], [])),
            Err(ConstructionError::BadDistance { .. })
        ));
        assert!(matches!(
            build_circulant(&CirculantSpec::new(7, [1], [0])),
            Err(ConstructionError::DiagonalOnOddOrder { order: 7 })
        ));
        assert!(matches!(
            build_circulant(&CirculantSpec::new(8, [4], [0])),
            Err(ConstructionError::RedundantDiagonals)
        ));
        assert!(matches!(
            build_circulant(&CirculantSpec::new(8, [1], [8])),
            Err(ConstructionError::BadDiagonal { index: 8, .. })
        ));
    }

    #[test]
    fn case1_degrees_and_examples() {
        let c = build_lemma1_case1(8, 10).unwrap();
        assert_eq!(c.order(), 16);
        // diagonal endpoint vs. interior vertex
        assert_eq!(c.red_degree(0).unwrap(), 7);
        assert_eq!(c.red_degree(4).unwrap(), 6);

        let c = build_lemma1_case1(4, 6).unwrap();
        let expected = build_circulant(&CirculantSpec::new(8, [1], [0, 1])).unwrap();
        assert_eq!(c, expected);
        assert!(!has_red_star(&c, 4));
        assert!(!has_blue_star_plus_edge(&c, 6));

        assert!(matches!(
            build_lemma1_case1(4, 5),
            Err(ConstructionError::Precondition { condition: "m even", .. })
        ));
        assert!(build_lemma1_case1(6, 6).is_err());
    }

    #[test]
    fn case2_examples() {
        let c = build_lemma1_case2(3, 5).unwrap();
        assert_eq!(c.order(), 7);
        assert!(red_degrees(&c).iter().all(|&d| d == 2));
        assert!(blue_degrees(&c).iter().all(|&d| d == 4));
        assert_eq!(c.blue_neighborhood(0).unwrap(), vec![2, 3, 4, 5]);

        let c = build_lemma1_case2(5, 7).unwrap();
        assert_eq!(c.order(), 11);
        assert!(red_degrees(&c).iter().all(|&d| d == 4));

        assert!(build_lemma1_case2(4, 6).is_err());
        assert!(build_lemma1_case2(5, 6).is_err());
    }

    #[test]
    fn case3_examples() {
        let c = build_lemma1_case3(4, 7).unwrap();
        assert_eq!(c.order(), 10);
        assert!(blue_degrees(&c).iter().all(|&d| d == 6));
        assert!(red_degrees(&c).iter().all(|&d| d == 3));
        assert!(c.is_blue(0, 3) && c.is_red(0, 4));

        let c = build_lemma1_case3(4, 9).unwrap();
        assert_eq!(c.order(), 12);
        assert!(blue_degrees(&c).iter().all(|&d| d == 8));

        assert!(build_lemma1_case3(5, 7).is_err());
        assert!(build_lemma1_case3(4, 8).is_err());
    }

    #[test]
    fn case4_examples() {
        let c = build_lemma1_case4(3).unwrap();
        assert_eq!(c.red_edges(), vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(c.blue_edges().len(), 9);
        assert!(!has_blue_star_plus_edge(&c, 2));
        assert!(build_lemma1_case4(2).is_err());

        let c = build_lemma1_case4(6).unwrap();
        assert!(is_good_coloring(&c, TargetPair::new(6, 7).unwrap()));
        assert_eq!(c.blue_neighborhood(0).unwrap(), (6..12).collect::<Vec<_>>());
    }

    #[test]
    fn lemma2_case1_pendant() {
        let c = extend_lemma2_case1(8, 14).unwrap();
        assert_eq!(c.host(), HostSpec::new(20, 19).unwrap());
        assert_eq!(c.blue_degree(20).unwrap(), 12);
        assert_eq!(c.red_degree(20).unwrap(), 7);
        // core is untouched by the half-turn relabelling
        assert_eq!(c.shrink_pendant(0).unwrap(), build_lemma1_case1(8, 14).unwrap());

        let c = extend_lemma2_case1(4, 6).unwrap();
        assert_eq!(c.host(), HostSpec::new(8, 7).unwrap());
        assert!(is_good_coloring(&c, TargetPair::new(4, 6).unwrap()));
        assert!(extend_lemma2_case1(3, 6).is_err());
    }

    #[test]
    fn lemma2_case3_pendant() {
        let c = extend_lemma2_case3(6, 7).unwrap();
        assert_eq!(c.host(), HostSpec::new(12, 6).unwrap());
        assert_eq!(c.blue_degree(12).unwrap(), 6);
        assert!(!has_blue_star_plus_edge(&c, 2));

        let c = extend_lemma2_case3(3, 3).unwrap();
        assert_eq!(c.host(), HostSpec::new(6, 3).unwrap());
        assert!(is_good_coloring(&c, TargetPair::new(3, 3).unwrap()));

        let core: Vec<_> = (0..6).collect();
        assert_eq!(c.restrict(&core).unwrap(), build_lemma1_case4(3).unwrap());
        assert!(extend_lemma2_case3(4, 7).is_err());
    }

    #[test]
    fn construction_names_round_trip() {
        for c in Construction::ALL {
            assert_eq!(c.short_name().parse::<Construction>().unwrap(), c);
        }
        assert!(Construction::Lemma1Case4.build(3, 6).is_err());
    }
}
