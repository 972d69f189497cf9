//! Seeded random automorphisms and mapping class words.

use rand::Rng;

use crate::freegroup::{FreeAutomorphism, Letter, ReducedWord};
use crate::mcg::{Twist, TwistGenerator};

/// A Nielsen move: swap two generators, invert one, or multiply one by
/// another on either side.
pub fn nielsen_move<R: Rng>(rng: &mut R, rank: usize) -> FreeAutomorphism {
    let gen = ReducedWord::generator;
    let mut images: Vec<ReducedWord> = (0..rank).map(gen).collect();
    let mut inverse = images.clone();
    let i = rng.random_range(0..rank);
    if rank == 1 {
        images[0] = gen(0).inverse();
        return FreeAutomorphism::new(images.clone(), images).expect("inversion");
    }
    let j = (i + rng.random_range(1..rank)) % rank;
    let x = |g, inv| Letter::new(g, inv);
    let e = rng.random_bool(0.5);
    match rng.random_range(0..4) {
        0 => {
            images.swap(i, j);
            inverse.swap(i, j);
        }
        1 => {
            images[i] = gen(i).inverse();
            inverse[i] = gen(i).inverse();
        }
        2 => {
            images[i] = ReducedWord::reduce([x(i, false), x(j, e)]);
            inverse[i] = ReducedWord::reduce([x(i, false), x(j, !e)]);
        }
        _ => {
            images[i] = ReducedWord::reduce([x(j, e), x(i, false)]);
            inverse[i] = ReducedWord::reduce([x(j, !e), x(i, false)]);
        }
    }
    FreeAutomorphism::new(images, inverse).expect("Nielsen moves are invertible")
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> ReducedWord {
    ReducedWord::reduce((0..len).map(|_| Letter::new(rng.random_range(0..rank), rng.random_bool(0.5))))
}

/// Up to `max_moves` Nielsen moves followed by conjugation by a word of
/// length up to `max_conjugator`. Zero moves are drawn with probability
/// 0.4, so inner automorphisms are common.
pub fn random_automorphism<R: Rng>(
    rng: &mut R,
    rank: usize,
    max_moves: usize,
    max_conjugator: usize,
) -> FreeAutomorphism {
    let moves = if rng.random_bool(0.4) { 0 } else { rng.random_range(1..=max_moves.max(1)) };
    let mut phi = FreeAutomorphism::identity(rank);
    for _ in 0..moves {
        phi = nielsen_move(rng, rank).compose(&phi).expect("same rank");
    }
    let len = rng.random_range(0..=max_conjugator);
    FreeAutomorphism::conjugation(rank, &random_word(rng, rank, len)).compose(&phi).expect("same rank")
}

/// A word of length `1..=max_len` in `TY`, `T_k`, `H_k` with powers `±1`.
pub fn random_twist_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<TwistGenerator> {
    let len = rng.random_range(1..=max_len.max(1));
    (0..len)
        .map(|_| {
            let twist = match rng.random_range(0..3) {
                0 => Twist::Y,
                1 => Twist::T(rng.random_range(1..=n)),
                _ => Twist::H(rng.random_range(1..=n)),
            };
            TwistGenerator::new(twist, if rng.random_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}
