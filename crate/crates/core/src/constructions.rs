//! Extremal colorings with known connected-matching avoidance.
//!
//! Block labels in diagnostics are 1-based (`A_1..A_5`, `B_1..B_3`); the
//! code indexes blocks from 0.

use serde::{Deserialize, Serialize};

use crate::bigraph::{new_from_blocks, BlockSpec, Color, Coloring};
use crate::error::Error;
use crate::search::Thresholds;

use Color::{Blue as B, Green as G, Red as R};

/// The left side is split into blocks `A_1, A_2, A_3` of sizes `a`; every
/// edge at `A_i` gets colour `i` (red, green, blue). Colour `i` then lives
/// in the single component `A_i × Right` with ν = `a_i`.
pub fn example1(a1: usize, a2: usize, a3: usize) -> Coloring {
    new_from_blocks(&example1_blocks(a1, a2, a3)).expect("example1 block spec is consistent")
}

pub fn example1_blocks(a1: usize, a2: usize, a3: usize) -> BlockSpec {
    BlockSpec::new(vec![a1, a2, a3], vec![a1 + a2 + a3], vec![vec![Some(R)], vec![Some(G)], vec![Some(B)]])
}

/// `t = min(k − l, 2l − k)` for the five-block construction.
pub fn lemma6_t(k: usize, l: usize) -> usize {
    (k - l).min(2 * l - k)
}

fn check_lemma6(k: usize, l: usize) -> Result<(), Error> {
    if l > k || 2 * l < k {
        return Err(Error::InvalidParams(format!("need k >= l >= k/2, got k={k}, l={l}")));
    }
    Ok(())
}

pub fn lemma6_blocks(k: usize, l: usize) -> Result<BlockSpec, Error> {
    check_lemma6(k, l)?;
    let t = lemma6_t(k, l);
    let left = vec![l, k - l + t, l, k - l + t, 2 * l - k - t];
    let right = vec![k, k, 2 * l - k + t];
    let table = vec![
        vec![Some(R), Some(B), Some(G)],
        vec![Some(R), Some(G), Some(B)],
        vec![Some(G), Some(R), Some(B)],
        vec![Some(B), Some(R), Some(G)],
        vec![Some(B), Some(G), Some(R)],
    ];
    Ok(BlockSpec::new(left, right, table))
}

/// Complete coloring of `K_{n,n}`, `n = k + 2l + t`, with left blocks
/// `A_1..A_5` of sizes `l, k−l+t, l, k−l+t, 2l−k−t` and right blocks
/// `B_1..B_3` of sizes `k, k, 2l−k+t`:
///
/// | | B_1 | B_2 | B_3 |
/// |---|---|---|---|
/// | A_1 | R | B | G |
/// | A_2 | R | G | B |
/// | A_3 | G | R | B |
/// | A_4 | B | R | G |
/// | A_5 | B | G | R |
///
/// It has no red `(k+1)`-, green `(l+1)`- or blue `(l+1)`-connected matching.
pub fn lemma6_coloring(k: usize, l: usize) -> Result<Coloring, Error> {
    new_from_blocks(&lemma6_blocks(k, l)?)
}

/// The stability family on `K_{3k−3, 3k−3}`.
///
/// Left blocks `A_1, A_2, A_3` have `k − 1` vertices each; right blocks have
/// sizes `b = (b1, b2, b3)` with `b3 <= k − 1`. `A_1B_1`, `A_2B_2` are red,
/// `A_1B_2`, `A_2B_1` blue, `A_3(B_1 ∪ B_2)` and `(A_1 ∪ A_2)B_3` green,
/// and `A_3 × B_3` is filled row-major from `pattern`, which may only hold
/// red and blue.
pub fn stability_example(k: usize, b: [usize; 3], pattern: &[Color]) -> Result<Coloring, Error> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let n = 3 * k - 3;
    if b.iter().sum::<usize>() != n {
        return Err(Error::InvalidParams(format!("b1 + b2 + b3 = {} but 3k - 3 = {n}", b.iter().sum::<usize>())));
    }
    if b[2] > k - 1 {
        return Err(Error::InvalidParams(format!("b3 = {} exceeds k - 1 = {}", b[2], k - 1)));
    }
    let cells = (k - 1) * b[2];
    if pattern.len() != cells {
        return Err(Error::InvalidParams(format!("pattern has {} entries, A_3 x B_3 has {cells}", pattern.len())));
    }
    if pattern.iter().any(|&c| c == G) {
        return Err(Error::InvalidParams("pattern may only use red and blue".into()));
    }
    let spec = BlockSpec::new(
        vec![k - 1; 3],
        b.to_vec(),
        vec![vec![Some(R), Some(B), Some(G)], vec![Some(B), Some(R), Some(G)], vec![Some(G), Some(G), None]],
    );
    let mut c = new_from_blocks(&spec)?;
    let (row0, col0) = (2 * (k - 1), b[0] + b[1]);
    for (p, &col) in pattern.iter().enumerate() {
        c.set(row0 + p / b[2], col0 + p % b[2], Some(col));
    }
    Ok(c)
}

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Construction {
    Example1 { a: [usize; 3] },
    Lemma6 { k: usize, l: usize },
    Stability { k: usize, b: [usize; 3], pattern: Vec<Color> },
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::Example1 { .. } => "example1",
            Construction::Lemma6 { .. } => "lemma6",
            Construction::Stability { .. } => "stability",
        }
    }

    pub fn build(&self) -> Result<Coloring, Error> {
        match self {
            Construction::Example1 { a } => Ok(example1(a[0], a[1], a[2])),
            Construction::Lemma6 { k, l } => lemma6_coloring(*k, *l),
            Construction::Stability { k, b, pattern } => stability_example(*k, *b, pattern),
        }
    }

    /// The thresholds `(red, green, blue)` the construction avoids.
    pub fn claimed_avoidance(&self) -> Result<Thresholds, Error> {
        match self {
            Construction::Example1 { a } => Ok(Thresholds::new(a[0] + 1, a[1] + 1, a[2] + 1)),
            Construction::Lemma6 { k, l } => {
                check_lemma6(*k, *l)?;
                Ok(Thresholds::new(k + 1, l + 1, l + 1))
            }
            Construction::Stability { k, .. } => {
                if *k == 0 {
                    return Err(Error::InvalidParams("k must be at least 1".into()));
                }
                Ok(Thresholds::new(*k, *k, *k))
            }
        }
    }
}

/// Avoided thresholds by construction name, for callers holding only a name
/// and numeric parameters (`example1: a1 a2 a3`, `lemma6: k l`,
/// `stability: k`).
pub fn claimed_avoidance(name: &str, params: &[usize]) -> Result<Thresholds, Error> {
    let bad = || Error::InvalidParams(format!("wrong parameter count {} for {name}", params.len()));
    let c = match name {
        "example1" => match params {
            [a1, a2, a3] => Construction::Example1 { a: [*a1, *a2, *a3] },
            _ => return Err(bad()),
        },
        "lemma6" => match params {
            [k, l] => Construction::Lemma6 { k: *k, l: *l },
            _ => return Err(bad()),
        },
        "stability" => match params {
            [k, ..] => Construction::Stability { k: *k, b: [0; 3], pattern: vec![] },
            _ => return Err(bad()),
        },
        other => return Err(Error::InvalidParams(format!("unknown construction {other:?}"))),
    };
    c.claimed_avoidance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{cm_profile, components, matching_number, meets_thresholds};

    #[test]
    fn example1_unit_blocks() {
        let c = example1(1, 1, 1);
        assert_eq!((c.n_left(), c.n_right()), (3, 3));
        assert!(c.is_complete());
        assert_eq!(cm_profile(&c), [1, 1, 1]);
    }

    #[test]
    fn example1_single_blue() {
        assert_eq!(example1(0, 0, 1), Coloring::monochromatic(1, 1, B));
    }

    #[test]
    fn example1_lower_bound_witnesses() {
        for k in 2..=8 {
            let c = example1(k - 1, k - 1, k - 1);
            assert_eq!(c.n_left(), 3 * k - 3);
            assert!(!meets_thresholds(&c, k, k, k).0, "k={k}");
        }
    }

    #[test]
    fn example1_one_component_per_colour() {
        let c = example1(2, 3, 4);
        for (i, col) in Color::ALL.into_iter().enumerate() {
            let cs = components(&c, col);
            assert_eq!(cs.len(), 1);
            assert_eq!(cs[0].left.len(), [2, 3, 4][i]);
            assert_eq!(cs[0].right.len(), 9);
            assert_eq!(matching_number(&cs[0]), [2, 3, 4][i]);
        }
    }

    #[test]
    fn lemma6_degenerate_square() {
        let c = lemma6_coloring(2, 2).unwrap();
        assert_eq!(c.n_left(), 6);
        for col in Color::ALL {
            let cs = components(&c, col);
            assert_eq!(cs.len(), 3, "{col}");
            for comp in &cs {
                assert_eq!((comp.left.len(), comp.right.len()), (2, 2));
                assert_eq!(comp.edges.len(), 4);
            }
        }
        assert!(!meets_thresholds(&c, 3, 3, 3).0);
    }

    #[test]
    fn lemma6_three_two() {
        let c = lemma6_coloring(3, 2).unwrap();
        assert_eq!(c.n_left(), 8);
        let p = cm_profile(&c);
        assert!(p[0] <= 3 && p[1] <= 2 && p[2] <= 2, "{p:?}");
    }

    #[test]
    fn lemma6_four_three_blocks() {
        let spec = lemma6_blocks(4, 3).unwrap();
        assert_eq!(spec.left_blocks, vec![3, 2, 3, 2, 1]);
        assert_eq!(spec.right_blocks, vec![4, 4, 3]);
        let c = lemma6_coloring(4, 3).unwrap();
        assert_eq!(c.n_left(), 11);
        assert!(!meets_thresholds(&c, 5, 4, 4).0);
    }

    #[test]
    fn lemma6_block_table_matches_listing() {
        let spec = lemma6_blocks(3, 2).unwrap();
        let listing = spec.describe();
        for pair in ["(1,1):R", "(2,1):R", "(3,2):R", "(4,2):R", "(5,3):R"] {
            assert!(listing.contains(pair));
        }
        for pair in ["(1,2):B", "(2,3):B", "(3,3):B", "(4,1):B", "(5,1):B"] {
            assert!(listing.contains(pair));
        }
        for pair in ["(1,3):G", "(2,2):G", "(3,1):G", "(4,3):G", "(5,2):G"] {
            assert!(listing.contains(pair));
        }
    }

    #[test]
    fn lemma6_rejects_bad_range() {
        assert!(lemma6_coloring(5, 2).is_err());
        assert!(lemma6_coloring(2, 3).is_err());
    }

    #[test]
    fn stability_small_cases() {
        let c = stability_example(3, [3, 2, 1], &[R, R]).unwrap();
        assert_eq!(c.n_left(), 6);
        assert!(c.is_complete());
        assert!(!meets_thresholds(&c, 3, 3, 3).0);

        let c = stability_example(3, [2, 2, 2], &[R, B, B, R]).unwrap();
        assert!(!meets_thresholds(&c, 3, 3, 3).0);

        let c = stability_example(2, [1, 1, 1], &[B]).unwrap();
        assert_eq!(cm_profile(&c), [1, 1, 1]);
    }

    #[test]
    fn stability_rejects_bad_sizes() {
        assert!(stability_example(3, [3, 3, 1], &[R, R]).is_err());
        assert!(stability_example(3, [1, 2, 3], &[R; 6]).is_err());
        assert!(stability_example(3, [3, 2, 1], &[R]).is_err());
        assert!(stability_example(3, [3, 2, 1], &[R, G]).is_err());
    }

    #[test]
    fn claimed_thresholds() {
        assert_eq!(claimed_avoidance("example1", &[2, 2, 2]).unwrap(), Thresholds::new(3, 3, 3));
        assert_eq!(claimed_avoidance("lemma6", &[3, 2]).unwrap(), Thresholds::new(4, 3, 3));
        assert_eq!(claimed_avoidance("stability", &[4]).unwrap(), Thresholds::new(4, 4, 4));
        assert!(claimed_avoidance("octahedron", &[1]).is_err());
        assert!(claimed_avoidance("lemma6", &[3]).is_err());
    }
}
