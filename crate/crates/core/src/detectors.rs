//! Detection of a red `K_{1,n}` and a blue `K_{1,m}+e`.
//!
//! The center of `K_{1,m}+e` is its unique vertex of degree `m`, so a blue copy
//! exists iff some vertex has blue degree at least `m` and a blue edge inside
//! its blue neighborhood. [`naive_contains_oracle`] decides the same question by
//! explicit enumeration and is kept independent of that characterization.

use itertools::Itertools;

use crate::coloring::{bits, TwoColoring, Vertex};
use crate::error::TargetError;

/// Largest host the naive oracle will enumerate.
pub const ORACLE_MAX_ORDER: usize = 9;

/// Red target `K_{1,n}` and blue target `K_{1,m}+e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TargetPair {
    n: usize,
    m: usize,
}

impl TargetPair {
    pub fn new(n: usize, m: usize) -> Result<Self, TargetError> {
        if n < 1 {
            return Err(TargetError::RedStarTooSmall(n));
        }
        if m < 2 {
            return Err(TargetError::BlueStarTooSmall(m));
        }
        Ok(Self { n, m })
    }

    /// Red star size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Blue star-plus-edge size.
    pub fn m(&self) -> usize {
        self.m
    }
}

pub fn has_red_star(c: &TwoColoring, n: usize) -> bool {
    (0..c.order()).any(|v| c.red_row(v).count_ones() as usize >= n)
}

/// A vertex of blue degree `>= m` whose blue neighborhood spans a blue edge.
pub fn blue_star_plus_edge_center(c: &TwoColoring, m: usize) -> Option<Vertex> {
    (0..c.order()).find(|&v| {
        let nb = c.blue_row(v);
        nb.count_ones() as usize >= m && bits(nb).any(|w| c.blue_row(w) & nb != 0)
    })
}

pub fn has_blue_star_plus_edge(c: &TwoColoring, m: usize) -> bool {
    blue_star_plus_edge_center(c, m).is_some()
}

/// True iff the coloring contains neither target, i.e. witnesses that its host
/// does not arrow `t`.
pub fn is_good_coloring(c: &TwoColoring, t: TargetPair) -> bool {
    !has_red_star(c, t.n) && !has_blue_star_plus_edge(c, t.m)
}

/// Decide whether `c` contains a red `K_{1,n}` or a blue `K_{1,m}+e` by listing
/// every candidate center, leaf set and leaf edge.
pub fn naive_contains_oracle(c: &TwoColoring, t: TargetPair) -> Result<bool, TargetError> {
    let order = c.order();
    if order > ORACLE_MAX_ORDER {
        return Err(TargetError::OracleHostTooLarge {
            order,
            limit: ORACLE_MAX_ORDER,
        });
    }
    Ok(naive_red_star(c, t.n) || naive_blue_star_plus_edge(c, t.m))
}

fn naive_red_star(c: &TwoColoring, n: usize) -> bool {
    let order = c.order();
    (0..order).any(|center| {
        let others = (0..order).filter(|&w| w != center);
        others
            .combinations(n)
            .any(|leaves| leaves.iter().all(|&w| c.is_red(center, w)))
    })
}

fn naive_blue_star_plus_edge(c: &TwoColoring, m: usize) -> bool {
    let order = c.order();
    (0..order).any(|center| {
        let others = (0..order).filter(|&w| w != center);
        others.combinations(m).any(|leaves| {
            leaves.iter().all(|&w| c.is_blue(center, w))
                && leaves
                    .iter()
                    .tuple_combinations()
                    .any(|(&a, &b)| c.is_blue(a, b))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::HostSpec;

    fn k(n: usize) -> HostSpec {
        HostSpec::complete(n).unwrap()
    }

    #[test]
    fn target_validation() {
        assert!(TargetPair::new(0, 3).is_err());
        assert!(TargetPair::new(1, 1).is_err());
        assert!(TargetPair::new(1, 2).is_ok());
    }

    #[test]
    fn all_blue_has_no_red_star() {
        let c = TwoColoring::all_blue(k(5));
        for n in 1..6 {
            assert!(!has_red_star(&c, n));
        }
    }

    #[test]
    fn all_blue_k4_has_blue_star_plus_edge() {
        let c = TwoColoring::all_blue(k(4));
        assert!(has_blue_star_plus_edge(&c, 3));
        assert!(!has_blue_star_plus_edge(&c, 4));
        let t = TargetPair::new(1, 3).unwrap();
        assert!(naive_contains_oracle(&c, t).unwrap());
    }

    #[test]
    fn triangle_is_the_m2_target() {
        let mut c = TwoColoring::all_red(k(4));
        assert!(!has_blue_star_plus_edge(&c, 2));
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            c.set_red(u, v, false).unwrap();
        }
        assert!(has_blue_star_plus_edge(&c, 2));
        assert_eq!(blue_star_plus_edge_center(&c, 2), Some(0));
    }

    #[test]
    fn all_red_k7_is_not_good() {
        let c = TwoColoring::all_red(k(7));
        assert!(!is_good_coloring(&c, TargetPair::new(3, 3).unwrap()));
    }

    #[test]
    fn pendant_non_edges_are_neither_color() {
        // K_3 ⊔ K_{1,1}: pendant 3 attached to 0 only, edge {3,0} blue
        let c = TwoColoring::all_blue(HostSpec::new(3, 1).unwrap());
        // vertex 0 has blue nbhd {1, 2, 3}; {1,2} blue gives K_{1,3}+e
        assert!(has_blue_star_plus_edge(&c, 3));
        // vertex 3 has blue degree 1 only
        assert_eq!(c.blue_degree(3).unwrap(), 1);
        let t = TargetPair::new(2, 3).unwrap();
        assert!(naive_contains_oracle(&c, t).unwrap());
        let mut c2 = c.clone();
        c2.set_red(1, 2, true).unwrap();
        // blue nbhd of 0 is {1,2,3}; 1-2 red, 3 not adjacent to 1 or 2 in the host
        assert!(!has_blue_star_plus_edge(&c2, 3));
        assert!(!naive_contains_oracle(&c2, t).unwrap());
    }

    #[test]
    fn oracle_refuses_large_hosts() {
        let c = TwoColoring::all_blue(k(10));
        assert!(matches!(
            naive_contains_oracle(&c, TargetPair::new(3, 3).unwrap()),
            Err(TargetError::OracleHostTooLarge { order: 10, .. })
        ));
    }
}
