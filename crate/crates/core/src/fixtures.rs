//! Seeded random inputs: deficient colorings for the reducer and parameters
//! for the stability family. Same seed, same output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigraph::{Color, Coloring};
use crate::error::Error;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Side length used for reducer fixtures: `3n + 40d`.
pub fn deficient_side(n: usize, d: usize) -> usize {
    3 * n + 40 * d
}

/// A 3-coloured `K_{N,N}`, `N = 3n + 40d`, with at most `d` absent cells at
/// every vertex. The colouring style depends on the seed: uniform random
/// cells, random blocks smaller than `n` (many small components), or a
/// three-block layout.
pub fn deficient_coloring(n: usize, d: usize, seed: u64) -> Result<Coloring, Error> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let big_n = deficient_side(n, d);
    let mut r = rng(seed);
    let mut c = match seed % 3 {
        0 => Coloring::from_fn(big_n, big_n, |_, _| Some(Color::from_index(r.gen_range(0..3)))),
        1 => {
            let lb = random_blocks(big_n, n, &mut r);
            let rb = random_blocks(big_n, n, &mut r);
            let table: Vec<Vec<usize>> = (0..=lb[big_n - 1]).map(|_| (0..=rb[big_n - 1]).map(|_| r.gen_range(0..3)).collect()).collect();
            Coloring::from_fn(big_n, big_n, |u, v| Some(Color::from_index(table[lb[u]][rb[v]])))
        }
        _ => {
            let cut = |r: &mut ChaCha8Rng| {
                let a = r.gen_range(0..=big_n);
                let b = r.gen_range(0..=big_n);
                (a.min(b), a.max(b))
            };
            let (l1, l2) = cut(&mut r);
            let (r1, r2) = cut(&mut r);
            let block = |x: usize, a: usize, b: usize| usize::from(x >= a) + usize::from(x >= b);
            Coloring::from_fn(big_n, big_n, |u, v| Some(Color::from_index((block(u, l1, l2) + block(v, r1, r2)) % 3)))
        }
    };
    // d random perfect matchings, each cell dropped with probability 1/2
    let mut perm: Vec<usize> = (0..big_n).collect();
    for _ in 0..d {
        perm.shuffle(&mut r);
        for (u, &v) in perm.iter().enumerate() {
            if r.gen_bool(0.5) {
                c.set(u, v, None);
            }
        }
    }
    Ok(c)
}

/// Block index of each of `len` positions, blocks of random size in `1..n`
/// (size 1 when `n == 1`).
fn random_blocks(len: usize, n: usize, r: &mut ChaCha8Rng) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    let mut block = 0;
    while out.len() < len {
        let size = r.gen_range(1..n.max(2));
        for _ in 0..size.min(len - out.len()) {
            out.push(block);
        }
        block += 1;
    }
    out
}

/// Random right block sizes `(b1, b2, b3)` with `b3 <= k − 1` summing to
/// `3k − 3`, and a random red/blue pattern for `A_3 × B_3`.
pub fn random_stability(k: usize, seed: u64) -> Result<([usize; 3], Vec<Color>), Error> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let mut r = rng(seed);
    let total = 3 * k - 3;
    let b3 = r.gen_range(0..k);
    let b1 = r.gen_range(0..=total - b3);
    let b = [b1, total - b3 - b1, b3];
    let pattern = random_pattern((k - 1) * b3, &mut r);
    Ok((b, pattern))
}

/// Random red/blue pattern of the given length.
pub fn random_pattern_seeded(len: usize, seed: u64) -> Vec<Color> {
    random_pattern(len, &mut rng(seed))
}

fn random_pattern(len: usize, r: &mut ChaCha8Rng) -> Vec<Color> {
    (0..len).map(|_| if r.gen_bool(0.5) { Color::Red } else { Color::Blue }).collect()
}
