use std::fmt;

use crate::error::{parse_err, Error, Result};

use super::graph::Digraph;

/// A directed edge with capacity, per-unit cost and per-unit usage fee.
///
/// Node ids are zero-based; the file format is one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeData {
    pub tail: usize,
    pub head: usize,
    pub capacity: i64,
    pub cost: i64,
    pub fee: i64,
}

impl EdgeData {
    pub fn new(tail: usize, head: usize, capacity: i64, cost: i64, fee: i64) -> Self {
        Self {
            tail,
            head,
            capacity,
            cost,
            fee,
        }
    }
}

/// Budget-constrained flow instance on a directed multigraph.
///
/// Parallel edges and self-loops are allowed. Capacities, fees and the
/// budget are nonnegative; costs may have any sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    node_count: usize,
    edges: Vec<EdgeData>,
    source: usize,
    sink: usize,
    budget: i64,
}

impl Instance {
    pub fn new(
        node_count: usize,
        source: usize,
        sink: usize,
        budget: i64,
        edges: Vec<EdgeData>,
    ) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::InvalidInstance("instance has no nodes".into()));
        }
        if source >= node_count || sink >= node_count {
            return Err(Error::InvalidInstance(
                "source or sink is not a node".into(),
            ));
        }
        if source == sink {
            return Err(Error::InvalidInstance("source equals sink".into()));
        }
        if budget < 0 {
            return Err(Error::InvalidInstance("negative budget".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.tail >= node_count || e.head >= node_count {
                return Err(Error::InvalidInstance(format!(
                    "edge {} has an unknown endpoint",
                    i + 1
                )));
            }
            if e.capacity < 0 {
                return Err(Error::InvalidInstance(format!(
                    "edge {} has negative capacity",
                    i + 1
                )));
            }
            if e.fee < 0 {
                return Err(Error::InvalidInstance(format!(
                    "edge {} has negative fee",
                    i + 1
                )));
            }
        }
        Ok(Self {
            node_count,
            edges,
            source,
            sink,
            budget,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &EdgeData {
        &self.edges[index]
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    pub fn with_budget(&self, budget: i64) -> Result<Self> {
        Self::new(
            self.node_count,
            self.source,
            self.sink,
            budget,
            self.edges.clone(),
        )
    }

    /// Copy of the instance keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, &EdgeData) -> bool) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| e.clone())
            .collect();
        Self {
            edges,
            ..self.clone()
        }
    }

    pub fn digraph(&self) -> Digraph {
        Digraph::new(
            self.node_count,
            self.edges.iter().map(|e| (e.tail, e.head)).collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_instance(text)
    }

    /// Serializes into the line format accepted by [`parse_instance`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "p bcmcf {} {} {}",
            self.node_count,
            self.edges.len(),
            self.budget
        )?;
        writeln!(f, "n {} s", self.source + 1)?;
        writeln!(f, "n {} t", self.sink + 1)?;
        for e in &self.edges {
            writeln!(
                f,
                "a {} {} {} {} {}",
                e.tail + 1,
                e.head + 1,
                e.capacity,
                e.cost,
                e.fee
            )?;
        }
        Ok(())
    }
}

fn parse_int(token: Option<&str>, what: &str, line: usize) -> Result<i64> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not an integer")))
}

fn parse_node(token: Option<&str>, node_count: usize, line: usize) -> Result<usize> {
    let id = parse_int(token, "node id", line)?;
    if id < 1 || id as u64 > node_count as u64 {
        return Err(parse_err(line, format!("unknown node id {id}")));
    }
    Ok(id as usize - 1)
}

/// Parses the `p bcmcf` line format.
///
/// ```text
/// p bcmcf <n> <m> <B>
/// n <id> s
/// n <id> t
/// a <tail> <head> <capacity> <cost> <fee>
/// ```
///
/// Lines starting with `#` or `c` are comments.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize, i64)> = None;
    let mut source = None;
    let mut sink = None;
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('c') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let kind = tokens.next().unwrap_or_default();
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("bcmcf") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected problem type `bcmcf`, found {:?}", other),
                        ))
                    }
                }
                let n = parse_int(tokens.next(), "node count", line)?;
                let m = parse_int(tokens.next(), "edge count", line)?;
                let budget = parse_int(tokens.next(), "budget", line)?;
                if n < 1 {
                    return Err(parse_err(line, "node count must be positive"));
                }
                if m < 0 {
                    return Err(parse_err(line, "negative edge count"));
                }
                if budget < 0 {
                    return Err(parse_err(line, "negative budget"));
                }
                header = Some((n as usize, m as usize, budget));
            }
            "n" => {
                let (n, _, _) =
                    header.ok_or_else(|| parse_err(line, "node line before problem line"))?;
                let id = parse_node(tokens.next(), n, line)?;
                match tokens.next() {
                    Some("s") => {
                        if source.replace(id).is_some() {
                            return Err(parse_err(line, "duplicate source"));
                        }
                    }
                    Some("t") => {
                        if sink.replace(id).is_some() {
                            return Err(parse_err(line, "duplicate sink"));
                        }
                    }
                    other => {
                        return Err(parse_err(
                            line,
                            format!("node designator must be `s` or `t`, found {:?}", other),
                        ))
                    }
                }
            }
            "a" => {
                let (n, m, _) =
                    header.ok_or_else(|| parse_err(line, "arc line before problem line"))?;
                if edges.len() == m {
                    return Err(parse_err(line, format!("more than {m} arcs")));
                }
                let tail = parse_node(tokens.next(), n, line)?;
                let head = parse_node(tokens.next(), n, line)?;
                let capacity = parse_int(tokens.next(), "capacity", line)?;
                let cost = parse_int(tokens.next(), "cost", line)?;
                let fee = parse_int(tokens.next(), "fee", line)?;
                if capacity < 0 {
                    return Err(parse_err(line, format!("negative capacity {capacity}")));
                }
                if fee < 0 {
                    return Err(parse_err(line, format!("negative fee {fee}")));
                }
                edges.push(EdgeData::new(tail, head, capacity, cost, fee));
            }
            other => {
                return Err(parse_err(line, format!("unknown line type `{other}`")));
            }
        }
        if let Some(extra) = tokens.next() {
            return Err(parse_err(
                line,
                format!("unexpected trailing token `{extra}`"),
            ));
        }
    }

    let end = last_line.max(1);
    let (n, m, budget) = header.ok_or_else(|| parse_err(end, "missing problem line"))?;
    let source = source.ok_or_else(|| parse_err(end, "missing source"))?;
    let sink = sink.ok_or_else(|| parse_err(end, "missing sink"))?;
    if edges.len() != m {
        return Err(parse_err(
            end,
            format!("expected {m} arcs, found {}", edges.len()),
        ));
    }
    if source == sink {
        return Err(parse_err(end, "source equals sink"));
    }
    Instance::new(n, source, sink, budget, edges)
}
