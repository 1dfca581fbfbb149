//! Prints each family, its first terms, a few negative indices, and checks
//! the relations that tie the families together.

use pell_recurrence::sequences::{cross_relations_check, term, term_fast, Relation};
use pell_recurrence::{family_term, Family, RecurrenceSpec};

fn main() {
    for f in Family::ALL {
        let prefix: Vec<String> = (0..8).map(|n| family_term(f, n).to_string()).collect();
        println!("{:<4} {:<8} {}", f.name(), f.oeis_id(), prefix.join(", "));
    }

    println!();
    for n in -3..=3 {
        println!("T({n:>2}) = {:>5}   L({n:>2}) = {:>5}", family_term(Family::T, n), family_term(Family::L, n));
    }

    // any seed works; here A(0) = 5, A(1) = -3
    let spec = RecurrenceSpec::six(5, -3);
    let big = term_fast(&spec, 500);
    assert_eq!(big, term(&spec, 500));
    println!("\nA(500) for seed (5, -3) has {} digits", big.to_string().trim_start_matches('-').len());

    // Pell numbers use a different recurrence, A(n) = 2A(n-1) + A(n-2)
    let pell = RecurrenceSpec::new(2, 1, 0, 1).expect("|q| = 1");
    let terms: Vec<String> = (-4..=6).map(|n| term_fast(&pell, n).to_string()).collect();
    println!("Pell numbers, n = -4..6: {}", terms.join(", "));

    println!();
    for r in Relation::ALL {
        println!("  {r}");
    }
    match cross_relations_check(-10..=30) {
        Ok(checked) => println!("all relations hold ({checked} checks on n in [-10, 30])"),
        Err(fail) => println!("relation failed: {fail}"),
    }
}
