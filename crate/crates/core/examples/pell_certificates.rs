//! The square equation 32A(n)² + 2Q for arbitrary seeds, cascade
//! certificates and the closed forms for h and r.

use num_bigint::BigInt;
use pell_recurrence::pell::{certificate, fundamental_check, h_formula_check, telescope_check, Cascade, SeedPair};
use pell_recurrence::{family_term, Family};

fn main() {
    let seed = SeedPair::new(0, 1).unwrap();
    for n in 1..=3 {
        let rep = fundamental_check(&seed, n);
        println!("seed {seed}, n = {n}: {} = {} ({})", rep.lhs, rep.rhs, rep.holds());
    }
    let cascade = Cascade::new(&seed);
    let a: Vec<String> = (0..4).map(|k| cascade.at(k).to_string()).collect();
    println!("cascade a(0..3) = {}", a.join(", "));
    for m in [-2, 0, 4] {
        let rep = telescope_check(&seed, m, 5);
        println!("  telescoped m = {m:>2}, n = 5: holds = {}", rep.holds());
    }

    println!();
    for (r, s) in [(1, 0), (1, 1), (1, 7), (2, 12), (1, 2)] {
        let seed = SeedPair::new(r, s).unwrap();
        match certificate(&seed, 10, 10).unwrap() {
            Some(cert) => println!("{:<9} certificate m = {:>2}: {cert}", seed.to_string(), cert.m),
            None => println!("{:<9} no certificate for |m| <= 10", seed.to_string()),
        }
    }

    println!();
    for k in 2..=5 {
        let (t0, t1) = (family_term(Family::T, k), family_term(Family::T, k + 1));
        let s = BigInt::from(2) * &t1;
        let report = h_formula_check(&t0, &t1, &s).unwrap();
        for case in &report.cases {
            let r = case.r.as_ref().map_or("-".to_string(), |r| r.to_string());
            println!(
                "m = {:>2} {:?}: r = {r}, h = {}, certified = {}",
                report.m,
                case.branch,
                case.h_formula,
                case.certificate.is_some()
            );
        }
        assert!(report.consistent());
    }
}
