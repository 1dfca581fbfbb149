//! Brute-force solutions of x² - Dy² = N checked against the families.

use pell_recurrence::pell::{family_solutions, pell_brute, PellEquation};

fn main() {
    for (d, n) in [(8, 1), (2, -1), (2, 8), (32, 4), (2, 7)] {
        let eq = PellEquation::new(d, n).unwrap();
        let brute = pell_brute(&eq, 10_000).unwrap();
        let shown: Vec<String> = brute.iter().map(|s| format!("({}, {})", s.x, s.y)).collect();
        println!("{eq}: {}", shown.join(" "));
        match family_solutions(&eq, 10_000) {
            Ok(fam) => println!("  family parameterization agrees: {}", fam == brute),
            Err(e) => println!("  {e}"),
        }
    }
}
