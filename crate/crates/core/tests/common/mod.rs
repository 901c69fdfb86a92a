#![allow(dead_code)]

use pomset::{Atom, Op, Term};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random term over `points`, each used once.
pub fn random_term<R: Rng>(rng: &mut R, points: &[Atom]) -> Term {
    if points.len() == 1 {
        return Term::Leaf(points[0].clone().into());
    }
    let op = *[Op::Par, Op::Before, Op::Tensor].choose(rng).unwrap();
    let mut pts = points.to_vec();
    pts.shuffle(rng);
    let k = rng.gen_range(2..=pts.len().min(3));
    let mut cuts: Vec<usize> = (1..pts.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..k - 1].to_vec();
    cuts.sort_unstable();
    let mut groups = Vec::new();
    let mut start = 0;
    for c in cuts.into_iter().chain([pts.len()]) {
        groups.push(random_term(rng, &pts[start..c]));
        start = c;
    }
    Term::node(op, groups)
}

/// Points `p0..` with random names from a small alphabet and polarities.
pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Atom> {
    (0..n)
        .map(|i| {
            let name = ["a", "b", "c"][rng.gen_range(0..3)];
            if rng.gen_bool(0.5) {
                Atom::pos(name, i as u32)
            } else {
                Atom::neg(name, i as u32)
            }
        })
        .collect()
}
