//! Named verification runs. Each scenario rebuilds its groups from scratch,
//! records named checks, and lists the statements it trusts without proof.

mod build;
mod corollary;
mod groups;
mod intro;
mod report;
mod wh;

use std::time::Instant;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::pisub::{PrimeSet, FACT_AUT, FACT_EMBEDDING};

pub use groups::{gl32_on_points, pgl27, plane_stabilizer, line_stabilizer};
pub use report::{emit_report, emit_reports, Check, Format, ScenarioReport, Status, SCHEMA_VERSION};

/// Options shared by every scenario in a run.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Enables the brute-force automorphism count.
    pub deep: bool,
    /// Searches with a runtime budget give up after this instant.
    pub deadline: Option<Instant>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScenarioInfo {
    pub name: &'static str,
    pub description: &'static str,
    /// Needs the extended runtime budget of deep mode.
    pub deep: bool,
}

/// Collects named checks for one scenario.
#[derive(Debug, Default)]
pub struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    pub fn record(&mut self, name: &str, expected: Value, actual: Value, pass: bool) -> bool {
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
        pass
    }

    pub fn eq<T: Into<Value> + PartialEq + Clone>(&mut self, name: &str, expected: T, actual: T) -> bool {
        let pass = expected == actual;
        self.record(name, expected.into(), actual.into(), pass)
    }

    pub fn holds(&mut self, name: &str, actual: bool) -> bool {
        self.eq(name, true, actual)
    }

    pub fn at_least(&mut self, name: &str, min: u64, actual: u64) -> bool {
        self.record(name, Value::from(format!(">= {min}")), Value::from(actual), actual >= min)
    }

    pub fn into_checks(self) -> Vec<Check> {
        self.checks
    }
}

type Runner = fn(&RunConfig, &mut Recorder) -> Result<()>;

struct Scenario {
    info: ScenarioInfo,
    consumed_facts: &'static [&'static str],
    run: Runner,
}

const TRUSTED: &[&str] = &[FACT_EMBEDDING, FACT_AUT];

const REGISTRY: &[Scenario] = &[
    Scenario {
        info: ScenarioInfo {
            name: "pgl27-intro",
            description: "PGL(2,7) and PSL(2,7): a Sylow 2-subgroup of PGL(2,7) is {2,3}-maximal, its \
                          order-8 trace on PSL(2,7) is not (order-24 overgroups)",
            deep: false,
        },
        consumed_facts: &[],
        run: intro::pgl27_intro,
    },
    Scenario {
        info: ScenarioInfo {
            name: "extensions-build",
            description: "coset enumeration of GL(3,2) and the sweep over all 4096 relator tails: \
                          split and nonsplit extensions of F2^3 by GL(3,2), all of order 1344",
            deep: false,
        },
        consumed_facts: &[],
        run: build::extensions_build,
    },
    Scenario {
        info: ScenarioInfo {
            name: "alpha-aut",
            description: "1-cocycles of GL(3,2) on F2^3 and the outer involution alpha acting \
                          trivially on V and on G/V; deep mode counts Aut(G) by brute force",
            deep: true,
        },
        consumed_facts: &[],
        run: build::alpha_aut,
    },
    Scenario {
        info: ScenarioInfo {
            name: "corollary-split",
            description: "no Sylow 2-subgroup of the split extension F2^3:GL(3,2) is \
                          {2,3}-submaximal",
            deep: false,
        },
        consumed_facts: TRUSTED,
        run: corollary::corollary_split,
    },
    Scenario {
        info: ScenarioInfo {
            name: "corollary-nonsplit",
            description: "no Sylow 2-subgroup of the nonsplit extension F2^3.GL(3,2) is \
                          {2,3}-submaximal",
            deep: false,
        },
        consumed_facts: TRUSTED,
        run: corollary::corollary_nonsplit,
    },
    Scenario {
        info: ScenarioInfo {
            name: "example1",
            description: "G = (V+V*):GL(3,2) inside G* = G:<swap>: the Sylow 2-subgroup of G is \
                          {2,3}-submaximal while its image in G/V* is not",
            deep: false,
        },
        consumed_facts: TRUSTED,
        run: corollary::example1,
    },
    Scenario {
        info: ScenarioInfo {
            name: "example2",
            description: "nonsplit F2^3.GL(3,2): the Sylow 2-subgroup of the quotient is \
                          {2,3}-submaximal but no subgroup mapping onto it is",
            deep: false,
        },
        consumed_facts: TRUSTED,
        run: corollary::example2,
    },
    Scenario {
        info: ScenarioInfo {
            name: "wreath-remark",
            description: "GL(3,2) wr C2: a {2,3}-maximal subgroup whose projection to C2 is \
                          trivial and hence not {2,3}-maximal",
            deep: false,
        },
        consumed_facts: &[],
        run: intro::wreath_remark,
    },
    Scenario {
        info: ScenarioInfo {
            name: "wh-suite",
            description: "Wielandt-Hartley: |N(H):H| is coprime to 2 and 3 for every certified \
                          {2,3}-submaximal H",
            deep: false,
        },
        consumed_facts: &[],
        run: wh::wh_suite,
    },
    Scenario {
        info: ScenarioInfo {
            name: "star-properties",
            description: "images of pi-maximal subgroups under quotients by normal pi-subgroups, \
                          and preimages of pi-maximal subgroups of S3 in S4",
            deep: false,
        },
        consumed_facts: &[],
        run: intro::star_properties,
    },
];

pub fn list_scenarios() -> Vec<ScenarioInfo> {
    REGISTRY.iter().map(|s| s.info).collect()
}

/// The trusted statements a scenario's report lists.
pub fn consumed_facts(name: &str) -> Result<Vec<String>> {
    let s = lookup(name)?;
    Ok(s.consumed_facts.iter().map(|f| f.to_string()).collect())
}

fn lookup(name: &str) -> Result<&'static Scenario> {
    REGISTRY
        .iter()
        .find(|s| s.info.name == name)
        .ok_or_else(|| Error::UnknownScenario(name.into()))
}

pub(crate) fn pi23() -> PrimeSet {
    PrimeSet::new(&[2, 3]).expect("primes")
}

/// Runs one scenario. Unknown names are an error; failures inside the
/// scenario produce a report with status `error`.
pub fn run_scenario(name: &str, config: &RunConfig) -> Result<ScenarioReport> {
    let scenario = lookup(name)?;
    let facts: Vec<String> = scenario.consumed_facts.iter().map(|f| f.to_string()).collect();
    let start = Instant::now();
    let mut rec = Recorder::default();
    let outcome = (scenario.run)(config, &mut rec);
    let ms = start.elapsed().as_millis() as u64;
    Ok(match outcome {
        Ok(()) => ScenarioReport::from_checks(name, rec.into_checks(), facts, ms),
        Err(e) => ScenarioReport::error(name, rec.into_checks(), facts, &e.to_string(), ms),
    })
}

/// Runs scenarios in order. Unknown names and scenarios started after the
/// deadline yield `error` reports.
pub fn run_scenarios(names: &[String], config: &RunConfig) -> Vec<ScenarioReport> {
    names
        .iter()
        .map(|name| {
            if config.deadline.is_some_and(|d| Instant::now() > d) {
                let facts = consumed_facts(name).unwrap_or_default();
                return ScenarioReport::error(name, vec![], facts, &Error::Deadline.to_string(), 0);
            }
            run_scenario(name, config).unwrap_or_else(|e| {
                ScenarioReport::error(name, vec![], vec![], &e.to_string(), 0)
            })
        })
        .collect()
}

/// Exit status for a batch of reports: 2 on any error, 1 on any failure,
/// else 0.
pub fn exit_code(reports: &[ScenarioReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        2
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let names: Vec<&str> = list_scenarios().iter().map(|s| s.name).collect();
        let unique: std::collections::BTreeSet<_> = names.iter().collect();
        assert_eq!(unique.len(), names.len());
        assert!(names.contains(&"example1"));
        let deep: Vec<&str> = list_scenarios().iter().filter(|s| s.deep).map(|s| s.name).collect();
        assert_eq!(deep, ["alpha-aut"]);
    }

    #[test]
    fn consumed_facts_only_where_trusted() {
        for s in list_scenarios() {
            let facts = consumed_facts(s.name).unwrap();
            let trusts = matches!(
                s.name,
                "corollary-split" | "corollary-nonsplit" | "example1" | "example2"
            );
            assert_eq!(!facts.is_empty(), trusts, "{}", s.name);
        }
    }

    #[test]
    fn unknown_names() {
        assert_eq!(
            run_scenario("unknown", &RunConfig::default()).unwrap_err(),
            Error::UnknownScenario("unknown".into())
        );
        let reports = run_scenarios(&["unknown".into()], &RunConfig::default());
        assert_eq!(reports[0].status, Status::Error);
        assert_eq!(exit_code(&reports), 2);
    }

    #[test]
    fn expired_deadline_skips_scenarios() {
        let config = RunConfig {
            deep: false,
            deadline: Some(Instant::now() - std::time::Duration::from_secs(1)),
        };
        let reports = run_scenarios(&["pgl27-intro".into()], &config);
        assert_eq!(reports[0].status, Status::Error);
    }

    #[test]
    fn pgl27_intro_passes() {
        let r = run_scenario("pgl27-intro", &RunConfig::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.first_failure());
        assert!(r.consumed_facts.is_empty());
        assert_eq!(exit_code(&[r]), 0);
    }

    #[test]
    fn recorder_helpers() {
        let mut rec = Recorder::default();
        assert!(rec.eq("a", 1u64, 1));
        assert!(!rec.at_least("b", 3, 2));
        assert!(rec.holds("c", true));
        let r = ScenarioReport::from_checks("t", rec.into_checks(), vec![], 0);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_failure().unwrap().name, "b");
        assert_eq!(exit_code(&[r]), 1);
    }
}
