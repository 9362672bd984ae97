use std::collections::VecDeque;

/// Plain arc list over nodes `0..node_count`; arc `i` is `arcs[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    pub node_count: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(node_count: usize, arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(arcs.iter().all(|&(u, v)| u < node_count && v < node_count));
        Self { node_count, arcs }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Outgoing arc indices per node, in index order.
    pub fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.node_count];
        for (i, &(u, _)) in self.arcs.iter().enumerate() {
            out[u].push(i);
        }
        out
    }

    /// Kahn's algorithm; `None` if the graph has a directed cycle
    /// (self-loops included).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.node_count];
        for &(_, v) in &self.arcs {
            indegree[v] += 1;
        }
        let out = self.out_arcs();
        let mut queue: VecDeque<usize> =
            (0..self.node_count).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.node_count);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &a in &out[u] {
                let v = self.arcs[a].1;
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == self.node_count).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_cycles_and_self_loops() {
        assert!(Digraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).is_acyclic());
        assert!(!Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).is_acyclic());
        assert!(!Digraph::new(2, vec![(0, 1), (1, 1)]).is_acyclic());
    }

    #[test]
    fn order_respects_arcs() {
        let g = Digraph::new(4, vec![(2, 0), (0, 1), (3, 2), (3, 1)]);
        let order = g.topological_order().unwrap();
        let pos: Vec<usize> = (0..4)
            .map(|v| order.iter().position(|&x| x == v).unwrap())
            .collect();
        assert!(g.arcs.iter().all(|&(u, v)| pos[u] < pos[v]));
    }
}
