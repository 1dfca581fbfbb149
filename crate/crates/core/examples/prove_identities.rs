//! Runs the built-in identity corpus and a few ad-hoc expressions through the
//! prover.

use pell_recurrence::symbolic::{compile, corpus, numeric_sweep, parse_expr, parse_identity, prove, ProofOutcome};

fn main() {
    for entry in corpus() {
        let id = entry.identity();
        let outcome = prove(&id).expect("corpus entries only use supported families");
        let sweep = numeric_sweep(&id, -20..=50).expect("supported");
        println!(
            "{:<5} {:<8} sweep {:<6} {}",
            entry.name,
            if outcome.is_proven() { "proven" } else { "FALSE" },
            if sweep.is_ok() { "ok" } else { "differs" },
            entry.text
        );
    }

    println!();
    for text in ["T(n+1)^2 - T(n)T(n+2) == 1", "L(n)^2 == L(2n) + 2 == C(n)^2", "T(n) == B(n)"] {
        let id = parse_identity(text).expect("valid syntax");
        match prove(&id).expect("supported") {
            ProofOutcome::Proven => println!("proven:  {id}"),
            ProofOutcome::Counterexample { n, lhs_side, rhs_side, lhs_value, rhs_value } => println!(
                "refuted: {id}\n         sides {lhs_side} and {rhs_side} differ at n = {n}: {lhs_value} vs {rhs_value}"
            ),
        }
    }

    let expr = parse_expr("T(2n)").unwrap();
    println!("\nT(2n) in canonical form: {}", compile(&expr).unwrap());

    if let Err(e) = parse_identity("T(n == 1") {
        println!("parse error: {e}");
    }
}
