//! Oracle-versus-formula verification table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::counting::{
    compositions, factorial, fubini, multinomial, relations_of_type, relations_total, stirling2,
    surjection_count, surjection_count_inclusion_exclusion, BigCount,
};
use crate::error::{Error, Result};
use crate::oracle::{
    enum_complete_cobwebs, enum_complete_cobwebs_iterative, enum_nonempty_subsets_of_product,
    enum_nonempty_subsets_of_product_iterative, enum_ordered_partitions,
    enum_ordered_partitions_iterative, enum_ordered_partitions_of_type,
    enum_ordered_partitions_of_type_iterative, enum_surjections, enum_surjections_iterative,
    COMPLETE_COBWEB_MAX_N, PRODUCT_SUBSETS_MAX_CELLS, SURJECTION_MAX_MAPS,
};

pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub input: String,
    /// Closed-form value.
    pub formula: String,
    /// Values from each enumeration route, in a fixed order.
    pub oracle: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {:<38} {:<16} formula={} oracle={}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.input,
                c.formula,
                c.oracle.join("/")
            );
        }
        let _ = writeln!(s, "summary: {} passed, {} failed", self.passed, self.failed);
        s
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn push(
        &mut self,
        name: &'static str,
        input: String,
        formula: BigCount,
        oracle: Vec<BigCount>,
    ) {
        let pass = oracle.iter().all(|o| *o == formula);
        self.checks.push(Check {
            name,
            input,
            formula: formula.to_string(),
            oracle: oracle.iter().map(ToString::to_string).collect(),
            pass,
        });
    }
}

/// Runs every formula against its enumeration oracles for `n = 1..=max_n`.
/// Output order is fixed, so two runs produce identical reports.
pub fn run(max_n: usize) -> Result<Report> {
    if max_n == 0 || max_n > COMPLETE_COBWEB_MAX_N {
        return Err(Error::Argument(format!(
            "max-n must be in 1..={COMPLETE_COBWEB_MAX_N}, got {max_n}"
        )));
    }
    let mut b = Builder { checks: Vec::new() };

    for n in 1..=max_n {
        b.push(
            "fubini = ordered partitions",
            format!("n={n}"),
            fubini(n),
            vec![
                enum_ordered_partitions(n, None)?,
                enum_ordered_partitions_iterative(n, None)?,
            ],
        );
    }

    for n in 1..=max_n {
        for k in 1..=n {
            let mut oracle = vec![
                surjection_count_inclusion_exclusion(n, k),
                enum_ordered_partitions(n, Some(k))?,
            ];
            if (k as u64).pow(n as u32) <= SURJECTION_MAX_MAPS {
                oracle.push(enum_surjections(n, k)?);
                oracle.push(enum_surjections_iterative(n, k)?);
            }
            b.push(
                "surjections = k!S(n,k)",
                format!("n={n} k={k}"),
                surjection_count(n, k),
                oracle,
            );
        }
    }

    for n in 1..=max_n {
        for t in compositions(n, None)? {
            b.push(
                "multinomial = typed partitions",
                format!("n={n} t={t}"),
                multinomial(n, &t)?,
                vec![
                    enum_ordered_partitions_of_type(n, &t)?,
                    enum_ordered_partitions_of_type_iterative(n, &t)?,
                ],
            );
        }
    }

    for n in 1..=max_n {
        for t in compositions(n, None)? {
            b.push(
                "multinomial = complete cobwebs",
                format!("n={n} t={t}"),
                multinomial(n, &t)?,
                vec![
                    enum_complete_cobwebs(n, &t)?,
                    enum_complete_cobwebs_iterative(n, &t)?,
                ],
            );
        }
    }

    for n in 1..=max_n {
        for t in compositions(n, None)? {
            if t.product() > BigCount::from(PRODUCT_SUBSETS_MAX_CELLS) {
                continue;
            }
            b.push(
                "relations of type = product subsets",
                format!("t={t}"),
                relations_of_type(&t)?,
                vec![
                    enum_nonempty_subsets_of_product(&t)?,
                    enum_nonempty_subsets_of_product_iterative(&t)?,
                ],
            );
        }
    }

    for n in 1..=max_n {
        let mut oracle_sum = BigCount::from(0u8);
        let mut covered = true;
        for t in compositions(n, None)? {
            if t.product() > BigCount::from(PRODUCT_SUBSETS_MAX_CELLS) {
                covered = false;
                break;
            }
            oracle_sum += enum_nonempty_subsets_of_product(&t)?;
        }
        if covered {
            b.push(
                "relations total = summed oracle",
                format!("n={n}"),
                relations_total(n)?,
                vec![oracle_sum],
            );
        }
    }

    for n in 1..=max_n {
        for k in 1..=n {
            let row_sum: BigCount = compositions(n, Some(k))?
                .map(|t| multinomial(n, &t))
                .sum::<Result<BigCount>>()?;
            b.push(
                "k-part multinomial sum = k!S(n,k)",
                format!("n={n} k={k}"),
                factorial(k) * stirling2(n, k),
                vec![row_sum, surjection_count(n, k)],
            );
        }
    }

    let passed = b.checks.iter().filter(|c| c.pass).count();
    let failed = b.checks.len() - passed;
    Ok(Report {
        max_n,
        checks: b.checks,
        passed,
        failed,
    })
}
