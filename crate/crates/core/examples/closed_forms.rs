//! Exact arithmetic in Q(√2): units, Binet coefficients for a seed, and the
//! generating function.

use num_bigint::BigInt;
use pell_recurrence::exact_arith::{alpha, beta, gamma};
use pell_recurrence::sequences::{closed_form_coeffs, gf_prefix, term};
use pell_recurrence::{QuadRat, RecurrenceSpec};

fn main() {
    let (a, b, g) = (alpha(), beta(), gamma());
    println!("α = {a}, β = {b}, γ = {g}");
    println!("αβ = {}", &a * &b);
    println!("γ² = {}", g.pow(2).unwrap());
    println!("α⁻³ = {}", a.pow(-3).unwrap());

    let x = QuadRat::from_ints(7, -5);
    println!("\nx = {x}, norm {}, 1/x = {}", x.norm(), x.inv().unwrap());

    let (r, s) = (BigInt::from(2), BigInt::from(6));
    let coeffs = closed_form_coeffs(&r, &s);
    println!("\nseed (2, 6): A(n) = ({})α^n + ({})β^n", coeffs.c1, coeffs.c2);
    let spec = RecurrenceSpec::six(r.clone(), s.clone());
    for n in [-2, 0, 5, 12] {
        let v = coeffs.evaluate(n);
        println!("  n = {n:>3}: closed form {v}, recurrence {}", term(&spec, n));
    }

    // the (1 - x) factors cancel, so the Taylor coefficients are the terms
    let series = gf_prefix(&r, &s, 8);
    let direct: Vec<BigInt> = (0..8).map(|n| term(&spec, n)).collect();
    println!("\ngenerating function coefficients: {series:?}");
    assert_eq!(series, direct);
}
