//! The `verify` subcommand: every cross-method check in one report.

use std::collections::HashSet;
use std::path::Path;
use std::thread;

use num_bigint::BigUint;
use num_traits::Zero;
use treewalk_core::oracle::{dp_return_profile, dp_walk_count, weighted_dyck_count};
use treewalk_core::rlseq::{
    delete_component_pair, enumerate_sequences, s_closed_form, s_table_enumerated,
    s_table_recurrence,
};
use treewalk_core::series::gf_walk_counts;
use treewalk_core::triangles::{
    borel_entry_explicit, borel_entry_transform, catalan_entry, catalan_table,
};
use treewalk_core::walks::{
    first_return_count, second_return_count, walks_via_borel, walks_via_catalan,
    walks_via_components, walks_with_k_returns,
};
use treewalk_core::{Count, RLSequence, TriangleKind};

use crate::fixtures::{self, FixtureSet};
use crate::CliError;

type Outcome = Result<(), Vec<String>>;

struct Check {
    name: String,
    outcome: Outcome,
}

fn collect(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn internal(e: treewalk_core::Error) -> Vec<String> {
    vec![e.to_string()]
}

fn triangle_formulas(max_n: usize) -> Outcome {
    let table = catalan_table(max_n);
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            let formula = catalan_entry(n, k).map_err(internal)?;
            if table.entry(n, k).map_err(internal)? != &formula {
                failures.push(format!("C({n},{k}): recurrence disagrees with formula"));
            }
            if borel_entry_explicit(n, k).map_err(internal)?
                != borel_entry_transform(n, k).map_err(internal)?
            {
                failures.push(format!("B({n},{k}): explicit disagrees with transform"));
            }
        }
    }
    collect(failures)
}

fn grid_cell(
    n: usize,
    delta: u64,
    gf: Option<&Count>,
) -> Result<Option<String>, treewalk_core::Error> {
    let oracle = dp_walk_count(n, delta)?;
    let mut bad = Vec::new();
    if walks_via_components(n, delta)? != oracle {
        bad.push("components");
    }
    if walks_via_catalan(n, delta)? != oracle {
        bad.push("catalan");
    }
    if walks_via_borel(n, delta)? != oracle {
        bad.push("borel");
    }
    if gf.is_some_and(|g| g != &oracle) {
        bad.push("gf");
    }
    Ok((!bad.is_empty()).then(|| {
        format!(
            "n={n} delta={delta}: {} differ from oracle {oracle}",
            bad.join(", ")
        )
    }))
}

/// Shards the (n, delta) grid by delta across threads; failures are sorted
/// so the report does not depend on scheduling.
fn five_method_grid(max_n: usize, max_delta: u64) -> Outcome {
    let mut failures: Vec<String> = thread::scope(|scope| {
        let handles: Vec<_> = (1..=max_delta)
            .map(|delta| {
                scope.spawn(move || -> Vec<String> {
                    let gf = if delta >= 2 {
                        match gf_walk_counts(delta, max_n) {
                            Ok(v) => Some(v),
                            Err(e) => return vec![e.to_string()],
                        }
                    } else {
                        None
                    };
                    (1..=max_n)
                        .filter_map(|n| match grid_cell(n, delta, gf.as_ref().map(|g| &g[n])) {
                            Ok(msg) => msg,
                            Err(e) => Some(e.to_string()),
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("grid worker panicked"))
            .collect()
    });
    failures.sort();
    collect(failures)
}

fn return_profiles(max_n: usize, max_delta: u64) -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        for delta in 1..=max_delta {
            let profile = dp_return_profile(n, delta).map_err(internal)?;
            for (k, observed) in profile.iter().enumerate().skip(1) {
                if observed != &walks_with_k_returns(n, k, delta).map_err(internal)? {
                    failures.push(format!("n={n} delta={delta} k={k}: return count differs"));
                }
            }
            if profile[1] != first_return_count(n, delta).map_err(internal)? {
                failures.push(format!("n={n} delta={delta}: first-return count differs"));
            }
            if n >= 2 && profile[2] != second_return_count(n, delta).map_err(internal)? {
                failures.push(format!("n={n} delta={delta}: second-return count differs"));
            }
        }
    }
    collect(failures)
}

fn weighted_enumeration(max_n: usize, max_delta: u64, cap: usize) -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=max_n.min(cap) {
        for delta in 1..=max_delta {
            if weighted_dyck_count(n, delta, cap).map_err(internal)?
                != dp_walk_count(n, delta).map_err(internal)?
            {
                failures.push(format!("n={n} delta={delta}: weighted enumeration differs"));
            }
        }
    }
    collect(failures)
}

fn s_tables(max_n: usize, cap: usize) -> Outcome {
    let limit = max_n.min(cap);
    let enumerated = s_table_enumerated(limit, cap).map_err(internal)?;
    let recurrence = s_table_recurrence(limit);
    let mut failures = Vec::new();
    for n in 1..=limit {
        for k in 1..=n {
            let e = enumerated.get(n, k).map_err(internal)?;
            let r = recurrence.get(n, k).map_err(internal)?;
            let c = s_closed_form(n, k).map_err(internal)?;
            if e != r || r != &c {
                failures.push(format!(
                    "S({n},{k}): enumerated {e}, recurrence {r}, closed {c}"
                ));
            }
        }
    }
    collect(failures)
}

/// Deletion of the first component's outer pair, checked exhaustively.
fn bijection(max_n: usize, cap: usize) -> Outcome {
    let limit = max_n.min(cap);
    let mut failures = Vec::new();
    let mut previous: Vec<Vec<RLSequence>> = vec![vec![RLSequence::empty()]];
    for n in 1..=limit {
        let mut current: Vec<Vec<RLSequence>> = vec![Vec::new(); n + 1];
        for s in enumerate_sequences(n, cap).map_err(internal)? {
            current[s.component_count()].push(s);
        }
        for k in 1..=n {
            let target: HashSet<RLSequence> = previous[k - 1..].iter().flatten().copied().collect();
            let mut image = HashSet::with_capacity(current[k].len());
            for w in &current[k] {
                let alpha = delete_component_pair(w, 1).map_err(internal)?;
                if !image.insert(alpha) {
                    failures.push(format!("n={n} k={k}: two sequences map to {alpha}"));
                }
            }
            if image != target {
                failures.push(format!(
                    "n={n} k={k}: image has {} sequences, expected {}",
                    image.len(),
                    target.len()
                ));
            }
        }
        previous = current;
    }
    collect(failures)
}

fn central_binomials(max_n: usize) -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let expected = num_integer_binomial(2 * n, n);
        if walks_via_catalan(n, 2).map_err(internal)? != expected {
            failures.push(format!("n={n}: W(2) != binomial({}, {n})", 2 * n));
        }
    }
    collect(failures)
}

/// Multiplicative binomial, kept apart from the library's own binomials.
fn num_integer_binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn fixture_diffs(fixtures: &FixtureSet) -> Result<Outcome, CliError> {
    let mut diffs =
        fixtures::diff_triangle(fixtures, TriangleKind::Catalan, fixtures::TRIANGLE_ROWS)?;
    diffs.extend(fixtures::diff_triangle(
        fixtures,
        TriangleKind::Borel,
        fixtures::TRIANGLE_ROWS,
    )?);
    diffs.extend(fixtures::diff_polynomials(fixtures, None)?);
    Ok(collect(diffs))
}

pub fn run(
    max_n: usize,
    max_delta: u64,
    enum_cap: usize,
    fixture_dir: Option<&Path>,
) -> Result<String, CliError> {
    if max_n == 0 || max_delta == 0 || enum_cap == 0 {
        return Err(CliError::Usage(
            "--max-n, --max-delta and --enum-cap must be positive".into(),
        ));
    }
    let fixtures = FixtureSet::new(fixture_dir);
    let enum_n = max_n.min(enum_cap);
    let checks = vec![
        Check {
            name: format!("five-method agreement (n<={max_n}, delta<={max_delta})"),
            outcome: five_method_grid(max_n, max_delta),
        },
        Check {
            name: format!("weighted Dyck enumeration = DP (n<={enum_n})"),
            outcome: weighted_enumeration(max_n, max_delta, enum_cap),
        },
        Check {
            name: format!("return profile = k-return formula (n<={max_n})"),
            outcome: return_profiles(max_n, max_delta),
        },
        Check {
            name: format!("S table enumerated = recurrence = closed form (n<={enum_n})"),
            outcome: s_tables(max_n, enum_cap),
        },
        Check {
            name: format!("deletion bijection, i=1 (n<={enum_n})"),
            outcome: bijection(max_n, enum_cap),
        },
        Check {
            name: format!("Catalan recurrence and Borel explicit = transform (n<={max_n})"),
            outcome: triangle_formulas(max_n),
        },
        Check {
            name: format!("delta=2 gives central binomials (n<={max_n})"),
            outcome: central_binomials(max_n),
        },
        Check {
            name: "bundled fixtures".to_string(),
            outcome: fixture_diffs(&fixtures)?,
        },
    ];

    let mut out = String::new();
    let mut failed = 0;
    for check in &checks {
        match &check.outcome {
            Ok(()) => out.push_str(&format!("PASS  {}\n", check.name)),
            Err(details) => {
                failed += 1;
                out.push_str(&format!("FAIL  {}\n", check.name));
                for d in details {
                    out.push_str(&format!("        {d}\n"));
                }
            }
        }
    }
    let total = checks.len();
    out.push_str(&format!("{}/{total} checks passed\n", total - failed));
    if failed.is_zero() {
        Ok(out)
    } else {
        Err(CliError::Failed {
            output: out,
            message: format!("{failed} check(s) failed\n"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let out = run(1, 1, 14, None).unwrap();
        assert!(out.ends_with("8/8 checks passed\n"));
        assert!(run(0, 1, 14, None).is_err());
    }

    #[test]
    fn reference_binomial() {
        assert_eq!(num_integer_binomial(12, 6), BigUint::from(924u32));
        assert_eq!(num_integer_binomial(0, 0), BigUint::from(1u32));
    }
}
