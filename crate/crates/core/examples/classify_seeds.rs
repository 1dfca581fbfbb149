//! Reduces seeds to a rational multiple of a shifted T, B, C or L.

use pell_recurrence::pell::{classify, invariant_q, Classification, SeedPair};
use pell_recurrence::{family_term, Family};

fn main() {
    let seeds = [(1, 1), (1, -1), (1, 0), (3, 1), (0, 1), (-12, -70), (99, 577), (1, 2), (5, -3)];
    for (r, s) in seeds {
        let seed = SeedPair::new(r, s).unwrap();
        let q = invariant_q(&seed);
        println!("{:<12} Q = {:<6} {}", seed.to_string(), q, classify(&seed));
    }

    // a seed built from a family member comes back with the same parameters
    let (j, mu) = (7, -2);
    let seed = SeedPair::new(mu * family_term(Family::C, j), mu * family_term(Family::C, j + 1)).unwrap();
    let Classification::Member { family, shift, scale } = classify(&seed) else { unreachable!() };
    println!("\n{seed}: family {family}, shift {shift}, scale {scale}");
    for n in 0..4 {
        assert_eq!(seed.term(n), family_term(family, n + shift) * mu);
    }
}
