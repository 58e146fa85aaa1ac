//! Named verification checks run by `pcyclic verify`.

use std::fmt;

use pcyclic_core::codes::{run_engine, CyclicCode, Engine, WeightDistribution};
use pcyclic_core::expsums::{
    count_e1, count_e2, s_distribution_closed, t_distribution_closed, verify_power_identities, CountMode, DirectSums,
    ValueDistribution,
};
use pcyclic_core::quadforms::RankCensus;
use pcyclic_core::{Budget, Error};

/// (p, m, k) with its enumerator as (weight, frequency) rows.
pub type ReferenceEnumerator = ((u64, u32, u32), &'static [(u64, u64)]);

/// Weight enumerators published for two parameter sets, reproduced by the
/// `example` check.
pub const REFERENCE_ENUMERATORS: [ReferenceEnumerator; 2] = [
    (
        (3, 6, 4),
        &[(0, 1), (414, 728), (450, 32760), (468, 139048), (486, 199472), (504, 132496), (522, 26208), (558, 728)],
    ),
    ((3, 6, 1), &[(0, 1), (468, 95004), (477, 183456), (486, 728), (495, 170352), (504, 81900)]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum CheckName {
    RankCensus,
    TCensus,
    SCensus,
    E1,
    E2,
    Identities,
    Example,
    Engines,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::RankCensus,
        CheckName::TCensus,
        CheckName::SCensus,
        CheckName::E1,
        CheckName::E2,
        CheckName::Identities,
        CheckName::Example,
        CheckName::Engines,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::RankCensus => "rank-census",
            CheckName::TCensus => "t-census",
            CheckName::SCensus => "s-census",
            CheckName::E1 => "e1",
            CheckName::E2 => "e2",
            CheckName::Identities => "identities",
            CheckName::Example => "example",
            CheckName::Engines => "engines",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to these parameters.
    Skip(String),
    /// Refused by the enumeration budget.
    Refused(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl CheckLine {
    fn compare(name: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display, pass: bool) -> Self {
        CheckLine {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn from_error(name: impl Into<String>, err: &Error) -> Self {
        let status = match err {
            Error::BudgetExceeded { .. } => Status::Refused(err.to_string()),
            Error::UnsupportedCase(_) => Status::Skip(err.to_string()),
            _ => Status::Fail,
        };
        CheckLine { name: name.into(), status, lhs: err.to_string(), rhs: String::new() }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {}: {} == {}", self.name, self.lhs, self.rhs),
            Status::Fail if self.rhs.is_empty() => write!(f, "FAIL {}: {}", self.name, self.lhs),
            Status::Fail => write!(f, "FAIL {}: {} != {}", self.name, self.lhs, self.rhs),
            Status::Skip(why) => write!(f, "SKIP {}: {why}", self.name),
            Status::Refused(why) => write!(f, "REFUSED {}: {why}", self.name),
        }
    }
}

fn rows_text(dist: &ValueDistribution) -> String {
    let parts: Vec<String> = dist.rows().iter().map(|(v, f)| format!("{v}:{f}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn weights_text(rows: &[(u64, u64)]) -> String {
    let parts: Vec<String> = rows.iter().map(|(w, f)| format!("{w}:{f}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Runs one named check; a check may emit several lines.
pub fn run_check(code: &CyclicCode, check: CheckName, budget: &Budget) -> Vec<CheckLine> {
    let fam = code.family();
    let params = *code.params();
    let name = check.as_str();
    match check {
        CheckName::RankCensus => match (fam.rank_census(budget), RankCensus::closed_form(&params)) {
            (Ok(got), Ok(want)) => {
                let show = |c: RankCensus| format!("(n0, n1, n2) = ({}, {}, {})", c.n0, c.n1, c.n2);
                vec![CheckLine::compare(name, show(got), show(want), got == want)]
            }
            (Err(e), _) | (_, Err(e)) => vec![CheckLine::from_error(name, &e)],
        },
        CheckName::TCensus | CheckName::SCensus => {
            let closed = if check == CheckName::TCensus {
                t_distribution_closed(&params)
            } else {
                s_distribution_closed(&params)
            };
            let closed = match closed {
                Ok(c) => c,
                Err(e) => return vec![CheckLine::from_error(name, &e)],
            };
            let census = DirectSums::compute(fam, budget).and_then(|sums| {
                if check == CheckName::TCensus {
                    sums.t_census(fam)
                } else {
                    sums.s_census(fam)
                }
            });
            match census {
                Ok(c) => vec![CheckLine::compare(name, rows_text(&c), rows_text(&closed), c == closed)],
                Err(e) => vec![CheckLine::from_error(name, &e)],
            }
        }
        CheckName::E1 | CheckName::E2 => {
            let count = if check == CheckName::E1 { count_e1 } else { count_e2 };
            match (count(fam, CountMode::Brute, budget), count(fam, CountMode::Closed, budget)) {
                (Ok(a), Ok(b)) => vec![CheckLine::compare(name, a, b, a == b)],
                (Err(e), _) | (_, Err(e)) => vec![CheckLine::from_error(name, &e)],
            }
        }
        CheckName::Identities => match verify_power_identities(fam, budget) {
            Ok(checks) => checks
                .into_iter()
                .map(|c| {
                    let pass = c.holds();
                    CheckLine::compare(format!("{name}: {}", c.name), c.lhs, c.rhs, pass)
                })
                .collect(),
            Err(e) => vec![CheckLine::from_error(name, &e)],
        },
        CheckName::Example => {
            let key = (params.p, params.m, params.k);
            let Some((_, want)) = REFERENCE_ENUMERATORS.iter().find(|(k, _)| *k == key) else {
                let line = CheckLine {
                    name: name.into(),
                    status: Status::Skip("no reference enumerator for these parameters".into()),
                    lhs: String::new(),
                    rhs: String::new(),
                };
                return vec![line];
            };
            let want = WeightDistribution::from_rows(Engine::Closed, want.iter().copied());
            let mut lines = Vec::new();
            for engine in Engine::ALL {
                let line_name = format!("{name}: {engine}");
                lines.push(match run_engine(code, engine, budget) {
                    Ok(d) => CheckLine::compare(
                        line_name,
                        weights_text(d.rows()),
                        weights_text(want.rows()),
                        d.same_multiset(&want),
                    ),
                    Err(e) => CheckLine::from_error(line_name, &e),
                });
            }
            lines
        }
        CheckName::Engines => {
            let mut runs: Vec<(Engine, WeightDistribution)> = Vec::new();
            let mut lines = Vec::new();
            for engine in Engine::ALL {
                match run_engine(code, engine, budget) {
                    Ok(d) => {
                        let moment = d.satisfies_pless_first_moment(&params);
                        lines.push(CheckLine::compare(
                            format!("{name}: {engine} first moment"),
                            d.first_moment(),
                            u128::from(params.length())
                                * (u128::from(params.p) - 1)
                                * u128::from(params.p).pow(2 * params.m - 1),
                            moment,
                        ));
                        runs.push((engine, d));
                    }
                    Err(e) => lines.push(CheckLine::from_error(format!("{name}: {engine}"), &e)),
                }
            }
            for (i, (ea, a)) in runs.iter().enumerate() {
                for (eb, b) in &runs[i + 1..] {
                    lines.push(CheckLine::compare(
                        format!("{name}: {ea} vs {eb}"),
                        weights_text(a.rows()),
                        weights_text(b.rows()),
                        a.same_multiset(b),
                    ));
                }
            }
            lines
        }
    }
}
