//! The four suites: target values, hexagon vanishing, span vanishing, and
//! the combined non-membership certificate.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;

use super::passes::{hexagon_exhaustive, hexagon_random, span_sweep, Sweep};
use super::{Check, Evidence, Params, Report, Status};
use crate::barbell::{is_admissible, psi, w3_target, Disk, Expansions};
use crate::error::Result;
use crate::pattern::Pattern;
use crate::ring::{matrix_rank, rank, RingElement};
use crate::solver::{
    hexagon_case_analysis, reference_hexagon_cases, reference_table, regenerate_table,
    table_patterns, APPEARS_IN_EXCEPTIONS,
};
use crate::word::{Letter, Side};

const ANCHOR_HEXAGON: &str = "Ψ_k(H(ν, μ)) = 0 for all ν, μ";
const ANCHOR_CASES: &str = "a hexagon term equals m_1(k) or m_2(k) only in paired cases";
const ANCHOR_SPAN: &str = "coeff of m_1(k) and m_2(k) vanish on T_i(ā, c̄) for admissible (a, c)";
const ANCHOR_TABLE: &str = "M(a, c) = m_i(k) has a unique non-admissible solution for each monomial M";

/// Inputs of the combined certificate that tests may replace.
#[derive(Debug, Clone)]
pub struct MainInputs {
    /// Hard-coded target expansions; they are cross-checked against the
    /// polynomial formulas and then used as the targets.
    pub expansions: Expansions,
    /// Replaces every target (all `k`, both disks) when set.
    pub fake_target: Option<RingElement>,
}

impl Default for MainInputs {
    fn default() -> Self {
        MainInputs {
            expansions: Expansions::reference(),
            fake_target: None,
        }
    }
}

fn disk_label(disk: Disk) -> &'static str {
    match disk {
        Disk::Delta1 => "d1",
        Disk::Delta2 => "d2",
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn psi_row_check(disk: Disk, k: u64, kmax: u64) -> Result<Check> {
    let started = Instant::now();
    let f = psi(k)?;
    let expected = disk.expected_psi();
    let mut bad = Vec::new();
    for j in 1..=kmax {
        let v = f.evaluate(&w3_target(disk, j)?.value);
        let want = if j == k { int(expected) } else { BigRational::zero() };
        if v != want {
            bad.push(format!("Ψ_{k}(target_{j}) = {v}, expected {want}"));
        }
    }
    let anchor = match disk {
        Disk::Delta1 => "Ψ_k(T_4(t^-1, t u^-j t^-1)) = δ_kj",
        Disk::Delta2 => "Ψ_k((2T_4 + T_6)(t^-1, t u^-j t^-1)) = 3δ_kj",
    };
    let details = if bad.is_empty() {
        format!("row k={k} of the {kmax}x{kmax} matrix is {expected} on the diagonal, 0 elsewhere")
    } else {
        bad.join("; ")
    };
    Ok(Check::new(
        format!("psi {} k={k}", disk_label(disk)),
        anchor,
        Evidence::StructuralComplete,
        bad.is_empty(),
        details,
    )
    .timed(started))
}

pub fn verify_psi_targets(params: &Params) -> Result<Report> {
    params.validate()?;
    let mut checks = Vec::new();
    for disk in Disk::ALL {
        for k in 1..=params.kmax {
            checks.push(psi_row_check(disk, k, params.kmax)?);
        }
    }
    Ok(Report::new("psi", *params, checks))
}

fn sweep_check(name: String, anchor: &str, evidence: Evidence, sweep: &Sweep, k: u64, what: &str) -> Check {
    let failure = sweep.failure(k);
    let details = match failure {
        None => format!("{} {what} checked", sweep.checked),
        Some(msg) => msg.to_string(),
    };
    let mut c = Check::new(name, anchor, evidence, failure.is_none(), details);
    c.elapsed_ms = Some(sweep.elapsed.as_millis() as u64);
    c
}

fn case_analysis_check(k: u64) -> Result<Check> {
    let started = Instant::now();
    let analysis = hexagon_case_analysis(k)?;
    let mut problems = Vec::new();
    if !analysis.structural {
        problems.push("a case needed the bounded fallback".to_string());
    }
    for case in &analysis.cases {
        let label = format!("({}) = {}({k})", case.term, case.marker);
        if case.unique().is_none() {
            problems.push(format!("{label}: {} solutions", case.solutions.len()));
        } else if case.partner().is_none() {
            problems.push(format!("{label}: no unique partner term"));
        }
        if !case.balanced.iter().all(|b| *b) {
            problems.push(format!("{label}: coefficients of m_1, m_2 differ"));
        }
    }
    for b in reference_hexagon_cases() {
        let case = analysis
            .cases
            .iter()
            .find(|c| c.term == b.term && c.marker == b.marker);
        let matches = case.is_some_and(|c| {
            c.unique()
                .is_some_and(|(nu, mu)| (nu.clone(), mu.clone()) == b.at(k))
                && c.partner() == Some(b.partner)
        });
        if !matches {
            problems.push(format!("({}) = {}({k}) differs from the reference", b.term, b.marker));
        }
    }
    for case in &analysis.cases {
        if let Some(p) = case.partner() {
            let mirror = analysis
                .cases
                .iter()
                .find(|c| c.term == p && c.marker == case.marker.other());
            if mirror.map(|m| &m.solutions) != Some(&case.solutions) {
                problems.push(format!("({}) = {}({k}) has no mirror case", case.term, case.marker));
            }
        }
    }
    let ok = problems.is_empty();
    let details = if ok {
        let pairs: Vec<String> = analysis
            .cases
            .iter()
            .map(|c| format!("({})={}→({})", c.term, c.marker, c.partner().unwrap_or(0)))
            .collect();
        format!("8 cases, each with a unique (ν, μ): {}", pairs.join(", "))
    } else {
        problems.join("; ")
    };
    Ok(Check::new(
        format!("hexagon cases k={k}"),
        ANCHOR_CASES,
        Evidence::StructuralComplete,
        ok,
        details,
    )
    .timed(started))
}

fn table_patterns_check() -> Check {
    let started = Instant::now();
    let computed = table_patterns();
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    if computed.len() != reference_table().len() {
        problems.push(format!("{} distinct monomials, expected {}", computed.len(), reference_table().len()));
    }
    for row in reference_table() {
        let p = row.pattern();
        let Some((_, kinds)) = computed.iter().find(|(q, _)| *q == p) else {
            problems.push(format!("{p} does not occur in any T_i"));
            continue;
        };
        let kinds: Vec<u8> = kinds.iter().map(|k| k.number()).collect();
        if kinds != row.appears_in {
            let known = APPEARS_IN_EXCEPTIONS.iter().any(|(q, fixed)| {
                Pattern::parse(q).is_ok_and(|q| q == p) && *fixed == kinds.as_slice()
            });
            let msg = format!("{p} occurs in {kinds:?}, reference {:?}", row.appears_in);
            if known {
                notes.push(format!("known exception: {msg}"));
            } else {
                problems.push(msg);
            }
        }
    }
    let ok = problems.is_empty();
    let details = if ok {
        let mut d = format!("{} distinct monomials", computed.len());
        for n in notes {
            d.push_str("; ");
            d.push_str(&n);
        }
        d
    } else {
        problems.join("; ")
    };
    Check::new(
        "table patterns",
        "T_1, T_3, T_4, T_6 contain 21 distinct monomials",
        Evidence::StructuralComplete,
        ok,
        details,
    )
    .timed(started)
}

fn table_check(k: u64) -> Result<Check> {
    let started = Instant::now();
    let rows = regenerate_table(k)?;
    let mut problems = Vec::new();
    for reference in reference_table() {
        let p = reference.pattern();
        let Some(row) = rows.iter().find(|r| r.pattern == p) else {
            problems.push(format!("{p}: missing"));
            continue;
        };
        let solutions = [
            ("m_1", row.m1_unique(), reference.m1_at(k), row.m1_solutions.len()),
            ("m_2", row.m2_unique(), reference.m2_at(k), row.m2_solutions.len()),
        ];
        for (m, got, want, count) in solutions {
            match got {
                None => problems.push(format!("{p} = {m}({k}): {count} solutions")),
                Some((a, c)) => {
                    if (a.clone(), c.clone()) != want {
                        problems.push(format!("{p} = {m}({k}): got ({a}, {c}), reference ({}, {})", want.0, want.1));
                    }
                    let tail = a.boundary_letter(Side::Tail).map(|(l, _)| l);
                    let head = c.boundary_letter(Side::Head).map(|(l, _)| l);
                    if is_admissible(a, c) || tail != Some(Letter::T) || head != Some(Letter::T) {
                        problems.push(format!("{p} = {m}({k}): ({a}, {c}) is not of the t…t / t…t form"));
                    }
                }
            }
        }
    }
    let ok = problems.is_empty() && rows.len() == reference_table().len();
    let details = if ok {
        format!("{} rows, 2 unique solutions each, all match the reference, none admissible", rows.len())
    } else {
        problems.join("; ")
    };
    Ok(Check::new(format!("table k={k}"), ANCHOR_TABLE, Evidence::StructuralComplete, ok, details).timed(started))
}

struct Sweeps {
    hexagon: Sweep,
    random: Sweep,
    span: Sweep,
}

impl Sweeps {
    fn run(params: &Params) -> Sweeps {
        Sweeps {
            hexagon: hexagon_exhaustive(params),
            random: hexagon_random(params),
            span: span_sweep(params),
        }
    }
}

fn hexagon_report(params: &Params, exhaustive: &Sweep, random: &Sweep) -> Result<Report> {
    let mut checks = Vec::new();
    for k in 1..=params.kmax {
        checks.push(sweep_check(
            format!("hexagon exhaustive k={k}"),
            ANCHOR_HEXAGON,
            Evidence::ExhaustiveBounded,
            exhaustive,
            k,
            &format!(
                "pairs (ν, μ) with ≤{} syllables, |exponent| ≤{}, identity included,",
                params.max_syllables, params.max_exponent
            ),
        ));
        checks.push(sweep_check(
            format!("hexagon random k={k}"),
            ANCHOR_HEXAGON,
            Evidence::RandomSampled,
            random,
            k,
            &format!(
                "seeded pairs with ≤{} syllables, |exponent| ≤{}",
                params.random_max_syllables, params.random_max_exponent
            ),
        ));
        checks.push(case_analysis_check(k)?);
    }
    Ok(Report::new("hexagon", *params, checks))
}

pub fn verify_hexagon_vanishing(params: &Params) -> Result<Report> {
    params.validate()?;
    hexagon_report(params, &hexagon_exhaustive(params), &hexagon_random(params))
}

fn span_report(params: &Params, span: &Sweep) -> Result<Report> {
    let mut checks = vec![table_patterns_check()];
    for k in 1..=params.kmax {
        checks.push(sweep_check(
            format!("span k={k}"),
            ANCHOR_SPAN,
            Evidence::ExhaustiveBounded,
            span,
            k,
            &format!(
                "generators (kinds 1,3,4,6; admissible words with ≤{} syllables, |exponent| ≤{})",
                params.max_syllables, params.max_exponent
            ),
        ));
        checks.push(table_check(k)?);
    }
    Ok(Report::new("span", *params, checks))
}

pub fn verify_span_vanishing(params: &Params) -> Result<Report> {
    params.validate()?;
    span_report(params, &span_sweep(params))
}

fn expansions_check(expansions: &Expansions, kmax: u64) -> Result<Check> {
    let started = Instant::now();
    let mut problems = Vec::new();
    if expansions.t4.len() != 8 || expansions.t6.len() != 16 {
        problems.push(format!(
            "expansions have {} and {} terms, expected 8 and 16",
            expansions.t4.len(),
            expansions.t6.len()
        ));
    }
    for k in 1..=kmax {
        if let Some(msg) = expansions.cross_check(k)? {
            problems.push(msg);
            break;
        }
    }
    let ok = problems.is_empty();
    let details = if ok {
        format!("T_4 (8 terms) and T_6 (16 terms) agree for k=1..{kmax}")
    } else {
        problems.join("; ")
    };
    Ok(Check::new(
        "target expansions",
        "formula-built T_4, T_6 at (t^-1, t u^-k t^-1) equal the closed-form expansions",
        Evidence::StructuralComplete,
        ok,
        details,
    )
    .timed(started))
}

fn main_report(params: &Params, inputs: &MainInputs, sweeps: &Sweeps) -> Result<Report> {
    let kmax = params.kmax;
    let expansions = expansions_check(&inputs.expansions, kmax)?;
    let patterns = table_patterns_check();
    let base_ok = expansions.status.is_pass() && patterns.status.is_pass();
    let mut checks = vec![expansions, patterns];

    let target = |disk: Disk, k: u64| -> Result<RingElement> {
        match &inputs.fake_target {
            Some(t) => Ok(t.clone()),
            None => inputs.expansions.target(disk, k),
        }
    };

    let mut relations_ok = Vec::new();
    for k in 1..=kmax {
        let started = Instant::now();
        let parts = [
            ("hexagon exhaustive", sweeps.hexagon.failure(k).map(str::to_string)),
            ("hexagon random", sweeps.random.failure(k).map(str::to_string)),
            ("hexagon cases", {
                let c = case_analysis_check(k)?;
                (!c.status.is_pass()).then_some(c.details)
            }),
            ("span", sweeps.span.failure(k).map(str::to_string)),
            ("table", {
                let c = table_check(k)?;
                (!c.status.is_pass()).then_some(c.details)
            }),
        ];
        let failed: Vec<String> = parts
            .iter()
            .filter_map(|(n, f)| f.as_ref().map(|m| format!("{n}: {m}")))
            .collect();
        let ok = failed.is_empty();
        relations_ok.push(ok);
        let details = if ok {
            format!(
                "{} hexagon pairs, {} random pairs, {} span generators, case analysis and table replayed",
                sweeps.hexagon.checked, sweeps.random.checked, sweeps.span.checked
            )
        } else {
            failed.join("; ")
        };
        checks.push(
            Check::new(
                format!("relations k={k}"),
                "Ψ_k vanishes on the hexagon relations and on the admissible span",
                Evidence::StructuralComplete,
                ok,
                details,
            )
            .timed(started),
        );
    }

    let mut value_ok = Vec::new();
    for k in 1..=kmax {
        let f = psi(k)?;
        for disk in Disk::ALL {
            let v = f.evaluate(&target(disk, k)?);
            let want = int(disk.expected_psi());
            let ok = v == want;
            value_ok.push(ok);
            checks.push(Check::new(
                format!("value {} k={k}", disk_label(disk)),
                format!("Ψ_k(target) = {want} ≠ 0"),
                Evidence::StructuralComplete,
                ok,
                format!("Ψ_{k}(target) = {v}"),
            ));
        }
    }

    for disk in Disk::ALL {
        let started = Instant::now();
        let targets: Vec<RingElement> = (1..=kmax).map(|k| target(disk, k)).collect::<Result<_>>()?;
        let by_elimination = rank(&targets)?;
        let psis: Vec<_> = (1..=kmax).map(psi).collect::<Result<_>>()?;
        let matrix: Vec<Vec<BigRational>> = psis
            .iter()
            .map(|f| targets.iter().map(|t| f.evaluate(t)).collect())
            .collect();
        let by_functionals = matrix_rank(&matrix);
        let ok = by_elimination as u64 == kmax && by_functionals as u64 == kmax;
        checks.push(
            Check::new(
                format!("rank {}", disk_label(disk)),
                "the targets for k=1..kmax are linearly independent",
                Evidence::StructuralComplete,
                ok,
                format!("exact elimination: {by_elimination}, functional matrix: {by_functionals}, expected {kmax}"),
            )
            .timed(started),
        );
    }

    for (i, k) in (1..=kmax).enumerate() {
        for (d, disk) in Disk::ALL.into_iter().enumerate() {
            let ok = base_ok && relations_ok[i] && value_ok[2 * i + d];
            let details = if ok {
                format!("Ψ_{k} separates the target from the span modulo hexagon relations")
            } else {
                "a prerequisite check failed".to_string()
            };
            checks.push(Check::new(
                format!("conclusion {} k={k}", disk_label(disk)),
                "the target is not in the span of admissible generators modulo hexagon relations",
                Evidence::StructuralComplete,
                ok,
                details,
            ));
        }
    }
    Ok(Report::new("main", *params, checks))
}

pub fn verify_main_theorem(params: &Params, inputs: &MainInputs) -> Result<Report> {
    params.validate()?;
    main_report(params, inputs, &Sweeps::run(params))
}

/// The four suites in order psi, hexagon, span, main, sharing the sweeps.
pub fn verify_all(params: &Params) -> Result<Vec<Report>> {
    params.validate()?;
    let sweeps = Sweeps::run(params);
    Ok(vec![
        verify_psi_targets(params)?,
        hexagon_report(params, &sweeps.hexagon, &sweeps.random)?,
        span_report(params, &sweeps.span)?,
        main_report(params, &MainInputs::default(), &sweeps)?,
    ])
}

impl Report {
    /// Names of failing checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }
}
