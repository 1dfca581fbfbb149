//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use pell_recurrence::cli::run_from_args;
use pell_recurrence::pell::{
    certificate, classify, family_solutions, fundamental_check, pell_brute, telescope_check,
    Classification, PellEquation, SeedPair,
};
use pell_recurrence::sequences::{cross_relations_check, family_term, term, term_fast, PREFIX_TABLES};
use pell_recurrence::symbolic::{corpus, numeric_sweep, prove};
use pell_recurrence::Family;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn within(budget: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    if took <= budget {
        Ok(took)
    } else {
        Err(format!("took {took:?}, budget {budget:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ac1_corpus() -> Check {
    let started = Instant::now();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_from_args(["pell-recurrence", "prove", "--all", "--sweep", "-20", "50"], &mut out, &mut err);
    ensure(code == 0, || format!("prove --all exited {code}: {}", String::from_utf8_lossy(&out)))?;
    let entries = corpus();
    ensure(entries.len() == 17, || format!("corpus has {} entries", entries.len()))?;
    for entry in entries {
        let id = entry.identity();
        let outcome = prove(&id).map_err(|e| e.to_string())?;
        ensure(outcome.is_proven(), || format!("{} not proven: {outcome:?}", entry.name))?;
        let sweep = numeric_sweep(&id, -20..=50).map_err(|e| e.to_string())?;
        sweep.map_err(|m| format!("{} numeric sweep: {m}", entry.name))?;
    }
    let took = within(Duration::from_secs(5), started)?;
    Ok(format!("{} identities proven, sweep n in [-20, 50] agrees ({took:?})", entries.len()))
}

fn ac2_prefixes() -> Check {
    let anchors = [
        (Family::T, [0, 1]),
        (Family::L, [2, 6]),
        (Family::B, [1, 5]),
        (Family::C, [2, 14]),
        (Family::E, [4, 20]),
    ];
    for (f, seed) in anchors {
        let table = PREFIX_TABLES.iter().find(|(g, _)| *g == f).unwrap().1;
        ensure(table[..2] == seed, || format!("{f} table does not start at {seed:?}"))?;
    }
    for (f, table) in PREFIX_TABLES {
        for (n, v) in table.iter().enumerate() {
            let got = family_term(f, n as i64);
            ensure(got == big(*v), || format!("{f}({n}) = {got}, table {v}"))?;
        }
    }
    let checked = cross_relations_check(-10..=30).map_err(|f| f.to_string())?;
    Ok(format!("7 prefix tables match; {checked} relation checks on [-10, 30]"))
}

fn ac3_elementary() -> Check {
    let cases = [
        ((1, 1), Family::B, -1, (1, 1)),
        ((1, -1), Family::C, -1, (-1, 2)),
        ((1, 0), Family::T, -1, (-1, 1)),
        ((3, 1), Family::L, -1, (1, 2)),
    ];
    for ((r, s), family, shift, (num, den)) in cases {
        let got = classify(&SeedPair::new(r, s).unwrap());
        let want = Classification::Member {
            family,
            shift,
            scale: BigRational::new(big(num), big(den)),
        };
        ensure(got == want, || format!("({r},{s}): got {got:?}, want {want:?}"))?;
    }
    Ok("(1,1)->B,-1,1  (1,-1)->C,-1,-1/2  (1,0)->T,-1,-1  (3,1)->L,-1,1/2".into())
}

fn ac4_round_trip() -> Check {
    let started = Instant::now();
    let scales = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    let mut count = 0;
    for family in [Family::T, Family::B, Family::C, Family::L] {
        for shift in -15i64..=15 {
            let (fj, fj1) = (family_term(family, shift), family_term(family, shift + 1));
            for (num, den) in scales {
                let scale = BigRational::new(big(num), big(den));
                let r = BigRational::from_integer(fj.clone()) * &scale;
                let s = BigRational::from_integer(fj1.clone()) * &scale;
                if !r.is_integer() || !s.is_integer() {
                    continue;
                }
                let seed = SeedPair::new(r.to_integer(), s.to_integer()).map_err(|e| e.to_string())?;
                let got = classify(&seed);
                let want = Classification::Member { family, shift, scale };
                ensure(got == want, || format!("seed {seed}: got {got:?}, want {want:?}"))?;
                count += 1;
            }
        }
    }
    let took = within(Duration::from_secs(10), started)?;
    Ok(format!("{count} generated seeds recovered exactly ({took:?})"))
}

fn ac5_equivalence() -> Check {
    let started = Instant::now();
    let seeds: Vec<(i64, i64)> = (-60i64..=60)
        .flat_map(|r| (-60i64..=60).map(move |s| (r, s)))
        .filter(|&(r, s)| r != 0 || s != 0)
        .collect();
    let results: Vec<Result<(bool, bool), String>> = seeds
        .par_iter()
        .map(|&(r, s)| {
            let seed = SeedPair::new(r, s).unwrap();
            let member = classify(&seed).is_member();
            let cert = certificate(&seed, 10, 10).map_err(|e| format!("seed {seed}: {e}"))?;
            if let Some(cert) = &cert {
                let mut rng = ChaCha8Rng::seed_from_u64(((r + 100) * 1000 + s + 100) as u64);
                for _ in 0..20 {
                    let n = rng.random_range(11..=200);
                    ensure(cert.check(&seed, n).holds(), || {
                        format!("seed {seed}: certificate {cert} fails at n = {n}")
                    })?;
                }
            }
            if member != cert.is_some() {
                println!(
                    "  finding: seed {seed} member = {member}, certificate = {:?}",
                    cert.as_ref().map(|c| (c.m, &c.h))
                );
            }
            Ok((member, cert.is_some()))
        })
        .collect();
    let mut members = 0;
    let mut mismatches = 0;
    for res in results {
        let (member, certified) = res?;
        members += usize::from(member);
        mismatches += usize::from(member != certified);
    }
    ensure(mismatches == 0, || format!("{mismatches} seeds where certificate and classification disagree"))?;
    let took = within(Duration::from_secs(60), started)?;
    Ok(format!("{} seeds, {members} members, certificate <=> member everywhere ({took:?})", seeds.len()))
}

fn ac6_fundamental() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let seeds: Vec<(i64, i64)> = std::iter::repeat_with(|| (rng.random_range(-100..=100), rng.random_range(-100..=100)))
        .filter(|&(r, s)| r != 0 || s != 0)
        .take(1000)
        .collect();
    let failures: Vec<String> = seeds
        .par_iter()
        .flat_map_iter(|&(r, s)| {
            let seed = SeedPair::new(r, s).unwrap();
            (1..=40i64).flat_map(move |n| {
                let seed = seed.clone();
                let fundamental = (!fundamental_check(&seed, n).holds())
                    .then(|| format!("fundamental ({r},{s}) n={n}"));
                let telescoped = (-2i64..=6).filter_map(move |m| {
                    (!telescope_check(&seed, m, n).holds()).then(|| format!("telescope ({r},{s}) m={m} n={n}"))
                });
                fundamental.into_iter().chain(telescoped).collect::<Vec<_>>()
            })
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} failures, first: {}", failures.len(), failures[0]))?;
    let took = within(Duration::from_secs(30), started)?;
    Ok(format!("1000 seeds x n in [1, 40] x m in [-2, 6] exact ({took:?})"))
}

fn ac7_pell_oracle() -> Check {
    let started = Instant::now();
    let mut summary = Vec::new();
    for (d, n) in [(8, 1), (2, -1), (2, 8), (32, 4)] {
        let eq = PellEquation::new(d, n).map_err(|e| e.to_string())?;
        let brute = pell_brute(&eq, 100_000).map_err(|e| e.to_string())?;
        let family = family_solutions(&eq, 100_000).map_err(|e| e.to_string())?;
        ensure(brute == family, || format!("{eq}: brute {brute:?} vs family {family:?}"))?;
        summary.push(format!("({d},{n}):{}", brute.len()));
    }
    let took = within(Duration::from_secs(30), started)?;
    Ok(format!("brute = family for y <= 10^5 [{}] ({took:?})", summary.join(" ")))
}

fn ac8_performance() -> Check {
    let spec = Family::L.spec().unwrap();
    let mut worst = Duration::ZERO;
    for n in [10_000i64, -10_000] {
        let started = Instant::now();
        let v = term_fast(&spec, n);
        let took = started.elapsed();
        worst = worst.max(took);
        ensure(took < Duration::from_millis(50), || format!("term_fast({n}) took {took:?}"))?;
        ensure(v == term(&spec, n), || format!("term_fast({n}) disagrees with iteration"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let n: i64 = rng.random_range(-10_000..=10_000);
        let f = [Family::T, Family::B, Family::C, Family::E][rng.random_range(0..4)];
        let spec = f.spec().unwrap();
        ensure(term_fast(&spec, n) == term(&spec, n), || format!("{f}({n}) disagrees"))?;
    }
    Ok(format!("|n| = 10^4 in {worst:?}; 20 random large indices agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Check); 8] = [
        ("AC1", "corpus proof", ac1_corpus),
        ("AC2", "family prefixes and relations", ac2_prefixes),
        ("AC3", "elementary classifications", ac3_elementary),
        ("AC4", "classification round-trip", ac4_round_trip),
        ("AC5", "certificate <=> classification", ac5_equivalence),
        ("AC6", "fundamental and telescoping equations", ac6_fundamental),
        ("AC7", "Pell oracle completeness", ac7_pell_oracle),
        ("AC8", "term_fast performance", ac8_performance),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("{id} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
