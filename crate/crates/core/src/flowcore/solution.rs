use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

use super::flow::Flow;
use super::instance::Instance;
use super::rational::{format_decimal, format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exact,
    Gk,
    GkAcyclic,
    Oracle,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Gk => "gk",
            Algorithm::GkAcyclic => "gk-acyclic",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "gk" => Ok(Algorithm::Gk),
            "gk-acyclic" => Ok(Algorithm::GkAcyclic),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(Error::InvalidArgument(format!(
                "unknown algorithm `{other}`"
            ))),
        }
    }
}

/// `(cost, fee)` corner of the frontier.
pub type ObjectivePoint = (Rational, Rational);

/// Result of any solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub flow: Flow,
    pub objective: Rational,
    pub algorithm: Algorithm,
    pub iterations: u64,
    /// Lagrange multiplier certifying optimality (exact solver only).
    pub lambda: Option<Rational>,
    /// Corners of the efficient edge the answer was interpolated on.
    pub frontier_edge: Option<(ObjectivePoint, ObjectivePoint)>,
}

impl Solution {
    pub fn new(flow: Flow, algorithm: Algorithm, iterations: u64) -> Self {
        Self {
            objective: flow.cost().clone(),
            flow,
            algorithm,
            iterations,
            lambda: None,
            frontier_edge: None,
        }
    }

    pub fn document(&self) -> SolutionDocument {
        SolutionDocument {
            algorithm: self.algorithm.as_str().to_string(),
            objective: self.objective.clone(),
            budget_used: self.flow.fee().clone(),
            iterations: self.iterations,
            lambda: self.lambda.clone(),
            frontier_edge: self.frontier_edge.clone(),
            flows: self.flow.values().to_vec(),
        }
    }
}

const DECIMALS: usize = 9;

/// Serializable form of a [`Solution`].
///
/// The text rendering is one `key value...` pair per line; rationals are
/// written exactly as `num/den` (or `num`), followed by a decimal where
/// useful:
///
/// ```text
/// algorithm exact
/// objective -6 -6.000000000
/// budget_used 2 2.000000000
/// iterations 11
/// lambda 2 2.000000000
/// frontier_edge -2 0 -10 4
/// edges 2
/// flow 1 1
/// flow 2 2
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionDocument {
    pub algorithm: String,
    pub objective: Rational,
    pub budget_used: Rational,
    pub iterations: u64,
    pub lambda: Option<Rational>,
    pub frontier_edge: Option<(ObjectivePoint, ObjectivePoint)>,
    pub flows: Vec<Rational>,
}

impl SolutionDocument {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let exact =
            |q: &Rational| format!("{} {}", format_rational(q), format_decimal(q, DECIMALS));
        let _ = writeln!(s, "algorithm {}", self.algorithm);
        let _ = writeln!(s, "objective {}", exact(&self.objective));
        let _ = writeln!(s, "budget_used {}", exact(&self.budget_used));
        let _ = writeln!(s, "iterations {}", self.iterations);
        if let Some(l) = &self.lambda {
            let _ = writeln!(s, "lambda {}", exact(l));
        }
        if let Some(((c1, b1), (c2, b2))) = &self.frontier_edge {
            let _ = writeln!(
                s,
                "frontier_edge {} {} {} {}",
                format_rational(c1),
                format_rational(b1),
                format_rational(c2),
                format_rational(b2)
            );
        }
        let _ = writeln!(s, "edges {}", self.flows.len());
        for (i, x) in self.flows.iter().enumerate() {
            let _ = writeln!(s, "flow {} {}", i + 1, format_rational(x));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut algorithm = None;
        let mut objective = None;
        let mut budget_used = None;
        let mut iterations = None;
        let mut lambda = None;
        let mut frontier_edge = None;
        let mut edges: Option<usize> = None;
        let mut flows: Vec<Option<Rational>> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let rational_at = |i: usize| -> Result<Rational> {
                let tok = tokens
                    .get(i)
                    .ok_or_else(|| parse_err(line, "missing value"))?;
                parse_rational(tok).ok_or_else(|| parse_err(line, format!("bad rational `{tok}`")))
            };
            match tokens[0] {
                "algorithm" => {
                    algorithm = Some(
                        tokens
                            .get(1)
                            .ok_or_else(|| parse_err(line, "missing algorithm"))?
                            .to_string(),
                    )
                }
                "objective" => objective = Some(rational_at(1)?),
                "budget_used" => budget_used = Some(rational_at(1)?),
                "iterations" => {
                    iterations = Some(
                        tokens
                            .get(1)
                            .and_then(|t| t.parse::<u64>().ok())
                            .ok_or_else(|| parse_err(line, "bad iteration count"))?,
                    )
                }
                "lambda" => lambda = Some(rational_at(1)?),
                "frontier_edge" => {
                    frontier_edge = Some((
                        (rational_at(1)?, rational_at(2)?),
                        (rational_at(3)?, rational_at(4)?),
                    ))
                }
                "edges" => {
                    let m = tokens
                        .get(1)
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(line, "bad edge count"))?;
                    edges = Some(m);
                    flows = vec![None; m];
                }
                "flow" => {
                    let m = edges.ok_or_else(|| parse_err(line, "flow line before edge count"))?;
                    let i = tokens
                        .get(1)
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&i| (1..=m).contains(&i))
                        .ok_or_else(|| parse_err(line, "bad edge index"))?;
                    if flows[i - 1].replace(rational_at(2)?).is_some() {
                        return Err(parse_err(line, format!("duplicate flow for edge {i}")));
                    }
                }
                other => return Err(parse_err(line, format!("unknown key `{other}`"))),
            }
        }
        let end = text.lines().count().max(1);
        let missing = |what: &str| parse_err(end, format!("missing {what}"));
        let flows = flows
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| parse_err(end, format!("missing flow for edge {}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            algorithm: algorithm.ok_or_else(|| missing("algorithm"))?,
            objective: objective.ok_or_else(|| missing("objective"))?,
            budget_used: budget_used.ok_or_else(|| missing("budget_used"))?,
            iterations: iterations.ok_or_else(|| missing("iterations"))?,
            lambda,
            frontier_edge,
            flows: if edges.is_some() {
                flows
            } else {
                return Err(missing("edges"));
            },
        })
    }

    pub fn to_json(&self) -> String {
        let s = |q: &Rational| format_rational(q);
        let doc = StructuredSolution {
            algorithm: self.algorithm.clone(),
            objective: s(&self.objective),
            objective_decimal: format_decimal(&self.objective, DECIMALS),
            budget_used: s(&self.budget_used),
            iterations: self.iterations,
            lambda: self.lambda.as_ref().map(s),
            frontier_edge: self
                .frontier_edge
                .as_ref()
                .map(|((c1, b1), (c2, b2))| [s(c1), s(b1), s(c2), s(b2)]),
            flows: self.flows.iter().map(s).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: StructuredSolution =
            serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        let q = |t: &str| {
            parse_rational(t).ok_or_else(|| Error::InvalidArgument(format!("bad rational `{t}`")))
        };
        Ok(Self {
            algorithm: doc.algorithm,
            objective: q(&doc.objective)?,
            budget_used: q(&doc.budget_used)?,
            iterations: doc.iterations,
            lambda: doc.lambda.as_deref().map(q).transpose()?,
            frontier_edge: match doc.frontier_edge {
                Some([c1, b1, c2, b2]) => Some(((q(&c1)?, q(&b1)?), (q(&c2)?, q(&b2)?))),
                None => None,
            },
            flows: doc.flows.iter().map(|t| q(t)).collect::<Result<_>>()?,
        })
    }

    /// Accepts either the text or the JSON rendering.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn flow(&self, inst: &Instance) -> Result<Flow> {
        Flow::new(inst, self.flows.clone())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct StructuredSolution {
    algorithm: String,
    objective: String,
    objective_decimal: String,
    budget_used: String,
    iterations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frontier_edge: Option<[String; 4]>,
    flows: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::instance::EdgeData;
    use crate::flowcore::rational::{rat, ratio};

    fn sample() -> SolutionDocument {
        let inst = Instance::new(
            2,
            0,
            1,
            2,
            vec![EdgeData::new(0, 1, 2, -4, 2), EdgeData::new(0, 1, 2, -1, 0)],
        )
        .unwrap();
        let flow = Flow::new(&inst, vec![ratio(1, 3), rat(2)]).unwrap();
        let mut sol = Solution::new(flow, Algorithm::Exact, 7);
        sol.lambda = Some(rat(2));
        sol.frontier_edge = Some(((rat(-2), rat(0)), (rat(-10), rat(4))));
        sol.document()
    }

    #[test]
    fn text_roundtrip() {
        let doc = sample();
        let text = doc.to_text();
        assert!(text.contains("objective -10/3 -3.333333333"));
        assert!(text.contains("lambda 2 2.000000000"));
        assert_eq!(SolutionDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn json_roundtrip() {
        let doc = sample();
        assert_eq!(SolutionDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn missing_flow_is_an_error() {
        let text = "algorithm gk\nobjective 0\nbudget_used 0\niterations 0\nedges 2\nflow 1 0\n";
        assert!(SolutionDocument::parse_text(text).is_err());
    }
}
