//! Acceptance checks. Runs without the libtest harness and prints one line
//! per criterion; exits nonzero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use barbell_w3::barbell::{
    hexagon_terms, is_admissible, psi, span_generators, t_poly, target_argument, w3_target, Disk, Expansions,
    TKind,
};
use barbell_w3::solver::{
    hexagon_case_analysis, reference_hexagon_cases, reference_table, regenerate_table, solve,
    table_patterns,
};
use barbell_w3::verify::{
    verify_hexagon_vanishing, verify_main_theorem, verify_span_vanishing, MainInputs, Params,
};
use barbell_w3::{matrix_rank, rank, Alphabet, Assignment, Pattern, RingElement, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn c1_expansions() -> Outcome {
    let e = Expansions::reference();
    ensure(e.t4.len() == 8 && e.t6.len() == 16, || {
        format!("{} and {} terms", e.t4.len(), e.t6.len())
    })?;
    for k in 1..=20 {
        if let Some(msg) = e.cross_check(k).map_err(|e| e.to_string())? {
            return Err(msg);
        }
        let c = target_argument(k).unwrap();
        let built = &t_poly(TKind::T4, &w("t"), &c).unwrap().scale(&int(2))
            + &t_poly(TKind::T6, &w("t"), &c).unwrap();
        ensure(built == e.target(Disk::Delta2, k).unwrap(), || format!("Δ2 target differs at k={k}"))?;
    }
    Ok("k=1..20, 8 + 16 terms".into())
}

fn w(s: &str) -> Word {
    Word::parse(s, Alphabet::Base).unwrap()
}

fn c2_psi_targets() -> Outcome {
    for k in 1..=20 {
        let f = psi(k).unwrap();
        for disk in Disk::ALL {
            let v = f.evaluate(&w3_target(disk, k).unwrap().value);
            ensure(v == int(disk.expected_psi()), || format!("Ψ_{k} on {disk} target = {v}"))?;
        }
    }
    for disk in Disk::ALL {
        for k in 1..=10 {
            let f = psi(k).unwrap();
            for j in 1..=10 {
                let v = f.evaluate(&w3_target(disk, j).unwrap().value);
                let want = if j == k { int(disk.expected_psi()) } else { BigRational::zero() };
                ensure(v == want, || format!("{disk}: Ψ_{k}(target_{j}) = {v}"))?;
            }
        }
    }
    Ok("diagonal 1 and 3 for k≤20, 10x10 cross matrices".into())
}

fn c3_hexagon() -> Outcome {
    let params = Params {
        kmax: 5,
        max_syllables: 2,
        max_exponent: 2,
        trials: 10_000,
        seed: 0,
        random_max_syllables: 5,
        random_max_exponent: 5,
    };
    let report = verify_hexagon_vanishing(&params).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("failing checks: {:?}", report.failures()))?;

    let signs: Vec<i8> = hexagon_terms().iter().map(|(s, _)| *s).collect();
    for k in 1..=5 {
        let analysis = hexagon_case_analysis(k).unwrap();
        ensure(analysis.holds(), || format!("case analysis fails at k={k}"))?;
        for b in reference_hexagon_cases() {
            let case = analysis
                .cases
                .iter()
                .find(|c| c.term == b.term && c.marker == b.marker)
                .unwrap();
            let (nu, mu) = case
                .unique()
                .ok_or_else(|| format!("term {} = {}: {} solutions", b.term, b.marker, case.solutions.len()))?;
            ensure((nu.clone(), mu.clone()) == b.at(k), || {
                format!("term {} = {} at k={k}: got ({nu}, {mu})", b.term, b.marker)
            })?;
            ensure(case.partner() == Some(b.partner), || {
                format!("term {}: partner {:?}, expected {}", b.term, case.partner(), b.partner)
            })?;
            ensure(signs[b.term - 1] == signs[b.partner - 1], || {
                format!("terms {} and {} have opposite signs", b.term, b.partner)
            })?;
        }
    }
    let exhaustive = report
        .checks
        .iter()
        .find(|c| c.name == "hexagon exhaustive k=1")
        .map(|c| c.details.clone())
        .unwrap_or_default();
    Ok(format!("{exhaustive}; 10^4 random pairs; 4 cases for k≤5"))
}

fn c4_table() -> Outcome {
    for k in 1..=10 {
        let rows = regenerate_table(k).unwrap();
        ensure(rows.len() == 21, || format!("{} rows at k={k}", rows.len()))?;
        for reference in reference_table() {
            let p = reference.pattern();
            let row = rows
                .iter()
                .find(|r| r.pattern == p)
                .ok_or_else(|| format!("row {p} missing"))?;
            for (got, want, count) in [
                (row.m1_unique(), reference.m1_at(k), row.m1_solutions.len()),
                (row.m2_unique(), reference.m2_at(k), row.m2_solutions.len()),
            ] {
                let (a, c) = got.ok_or_else(|| format!("{p} at k={k}: {count} solutions"))?;
                ensure((a.clone(), c.clone()) == want, || {
                    format!("{p} at k={k}: ({a}, {c}) vs ({}, {})", want.0, want.1)
                })?;
                ensure(!is_admissible(a, c), || format!("{p} at k={k}: ({a}, {c}) is admissible"))?;
            }
        }
    }
    Ok("21 rows, unique solutions, reference matches, none admissible, k=1..10".into())
}

fn c5_span() -> Outcome {
    let params = Params {
        kmax: 10,
        max_syllables: 3,
        max_exponent: 3,
        ..Params::default()
    };
    let report = verify_span_vanishing(&params).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("failing checks: {:?}", report.failures()))?;

    // Independent pass through the public functionals.
    let psis: Vec<_> = (1..=10).map(|k| psi(k).unwrap()).collect();
    let generators: Vec<_> = span_generators(3, 3, &TKind::ALL).collect();
    let bad = generators.par_iter().find_any(|g| psis.iter().any(|f| !f.evaluate(&g.value).is_zero()));
    if let Some(g) = bad {
        return Err(format!("Ψ nonzero on {}({}, {})", g.kind, g.pair.a(), g.pair.c()));
    }
    Ok(format!("{} generators, k≤10", generators.len()))
}

fn c6_rank() -> Outcome {
    let params = Params {
        kmax: 10,
        max_syllables: 1,
        max_exponent: 1,
        trials: 10,
        ..Params::default()
    };
    let report = verify_main_theorem(&params, &MainInputs::default()).map_err(|e| e.to_string())?;
    for name in ["rank d1", "rank d2"] {
        let c = report.checks.iter().find(|c| c.name == name).unwrap();
        ensure(c.status.is_pass(), || format!("{name}: {}", c.details))?;
    }
    for disk in Disk::ALL {
        let targets: Vec<RingElement> = (1..=10).map(|k| w3_target(disk, k).unwrap().value).collect();
        let elim = rank(&targets).unwrap();
        let matrix: Vec<Vec<BigRational>> = (1..=10)
            .map(|k| {
                let f = psi(k).unwrap();
                targets.iter().map(|t| f.evaluate(t)).collect()
            })
            .collect();
        let func = matrix_rank(&matrix);
        ensure(elim == 10 && func == 10, || format!("{disk}: elimination {elim}, functionals {func}"))?;
    }
    Ok("rank 10 for both disks by elimination and by functionals".into())
}

const ORACLE_SYLLABLES: usize = 4;
const ORACLE_EXPONENT: i64 = 3;

fn random_word(rng: &mut ChaCha8Rng, alphabet: Alphabet, max_syllables: usize, max_exponent: i64) -> Word {
    let letters = alphabet.letters();
    let n = rng.gen_range(1..=max_syllables);
    let mut out = Word::identity(alphabet);
    while out.syllable_count() < n {
        let l = letters[rng.gen_range(0..letters.len())];
        let mut e = rng.gen_range(1..=max_exponent);
        if rng.gen_bool(0.5) {
            e = -e;
        }
        out = out.concat(&Word::power(l, e)).unwrap();
    }
    out
}

fn c7_oracle() -> Outcome {
    let mut patterns: Vec<Pattern> = table_patterns().into_iter().map(|(p, _)| p).collect();
    patterns.extend(hexagon_terms().into_iter().map(|(_, p)| p));
    let domain = common::words_up_to(ORACLE_SYLLABLES, ORACLE_EXPONENT);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut instances = Vec::new();
    while instances.len() < 500 {
        let p = patterns[rng.gen_range(0..patterns.len())].clone();
        // Mostly planted targets; a quarter are arbitrary QUAD words.
        let target = if rng.gen_bool(0.75) {
            let a: Assignment = p
                .variables()
                .into_iter()
                .map(|v| (v, random_word(&mut rng, Alphabet::Base, 2, 2)))
                .collect();
            p.eval(&a).unwrap()
        } else {
            random_word(&mut rng, Alphabet::Quad, 4, 3)
        };
        if !target.is_identity() {
            instances.push((p, target));
        }
    }
    let mismatches: Vec<String> = instances
        .par_iter()
        .filter_map(|(p, target)| {
            let expected = common::oracle(p, target, &domain);
            let got: Vec<Assignment> = solve(p, target)
                .unwrap()
                .into_iter()
                .filter(|a| common::within(a, ORACLE_SYLLABLES, ORACLE_EXPONENT))
                .collect();
            (got != expected).then(|| format!("{p} = {target}: solver {got:?}, oracle {expected:?}"))
        })
        .collect();
    ensure(mismatches.is_empty(), || format!("{} mismatches, first: {}", mismatches.len(), mismatches[0]))?;
    let solved = instances
        .iter()
        .filter(|(p, t)| !solve(p, t).unwrap().is_empty())
        .count();
    Ok(format!("500 instances ({solved} with solutions), domain {} words", domain.len()))
}

fn c8_negative_control() -> Outcome {
    let fake = t_poly(TKind::T4, &w("t"), &w("u")).unwrap();
    let inputs = MainInputs {
        fake_target: Some(fake),
        ..MainInputs::default()
    };
    let params = Params {
        kmax: 10,
        max_syllables: 2,
        max_exponent: 2,
        trials: 1_000,
        ..Params::default()
    };
    let report = verify_main_theorem(&params, &inputs).map_err(|e| e.to_string())?;
    ensure(!report.passed(), || "report passed with a fake target".into())?;
    for k in 1..=10 {
        for d in ["d1", "d2"] {
            let name = format!("conclusion {d} k={k}");
            let c = report.checks.iter().find(|c| c.name == name).unwrap();
            ensure(!c.status.is_pass(), || format!("{name} passed"))?;
        }
    }
    Ok("all 20 conclusions fail".into())
}

fn run_verify_all(workers: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_barbell-w3"))
        .args(["verify", "all", "--kmax", "10", "--seed", "0", "--workers", workers, "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn c9_determinism() -> Outcome {
    let one = run_verify_all("1")?;
    let eight = run_verify_all("8")?;
    ensure(one == eight, || "reports differ".into())?;
    let parsed: serde_json::Value = serde_json::from_slice(&one).map_err(|e| e.to_string())?;
    let n = parsed.as_array().map_or(0, Vec::len);
    ensure(n == 4, || format!("{n} reports"))?;
    Ok(format!("{} identical bytes, 4 passing reports", one.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("target expansions", 1, c1_expansions),
        ("Ψ_k on the targets", 1, c2_psi_targets),
        ("Ψ_k kills hexagon relations", 60, c3_hexagon),
        ("solution table", 10, c4_table),
        ("Ψ_k kills the admissible span", 120, c5_span),
        ("linear independence", 10, c6_rank),
        ("solver matches brute force", 120, c7_oracle),
        ("negative control", 10, c8_negative_control),
        ("determinism across worker counts", 600, c9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let limit = Duration::from_secs(*limit);
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: pass  {name} ({elapsed:.2?}) {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}) {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
