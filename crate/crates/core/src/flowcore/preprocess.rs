use std::collections::VecDeque;

use num_traits::Zero;

use super::flow::Flow;
use super::instance::Instance;
use super::rational::Rational;

/// A preprocessed instance together with the id mappings back to the
/// instance it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub instance: Instance,
    /// Original node id -> compacted id, `None` for removed nodes.
    pub node_map: Vec<Option<usize>>,
    /// Compacted edge index -> original edge index.
    pub edge_map: Vec<usize>,
    original_edges: usize,
}

impl Reduced {
    /// Maps a flow on the reduced instance back to `original`, with zero
    /// flow on every removed edge.
    pub fn lift_flow(&self, original: &Instance, flow: &Flow) -> Flow {
        assert_eq!(original.edge_count(), self.original_edges);
        let mut values = vec![Rational::zero(); self.original_edges];
        for (i, &orig) in self.edge_map.iter().enumerate() {
            values[orig] = flow.value(i).clone();
        }
        Flow::new(original, values).expect("edge map covers the original instance")
    }

    pub fn removed_nodes(&self) -> usize {
        self.node_map.iter().filter(|m| m.is_none()).count()
    }
}

/// Removes every node other than source and sink that has no incoming or
/// no outgoing edge, repeatedly, along with the incident edges.
///
/// Worklist driven, so the whole fixed point costs `O(n + m)`.
pub fn preprocess(inst: &Instance) -> Reduced {
    let n = inst.node_count();
    let edges = inst.edges();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        outdeg[e.tail] += 1;
        indeg[e.head] += 1;
        incident[e.tail].push(i);
        if e.head != e.tail {
            incident[e.head].push(i);
        }
    }

    let keep_always = |v: usize| v == inst.source() || v == inst.sink();
    let mut node_alive = vec![true; n];
    let mut edge_alive = vec![true; edges.len()];
    let mut queue: VecDeque<usize> = (0..n)
        .filter(|&v| !keep_always(v) && (indeg[v] == 0 || outdeg[v] == 0))
        .collect();

    while let Some(v) = queue.pop_front() {
        if !node_alive[v] {
            continue;
        }
        node_alive[v] = false;
        for &i in &incident[v] {
            if !edge_alive[i] {
                continue;
            }
            edge_alive[i] = false;
            let e = &edges[i];
            outdeg[e.tail] -= 1;
            indeg[e.head] -= 1;
            for w in [e.tail, e.head] {
                if w != v && node_alive[w] && !keep_always(w) && (indeg[w] == 0 || outdeg[w] == 0) {
                    queue.push_back(w);
                }
            }
        }
    }

    let mut node_map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if node_alive[v] {
            node_map[v] = Some(next);
            next += 1;
        }
    }
    let mut edge_map = Vec::new();
    let mut new_edges = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if edge_alive[i] {
            let mut e = e.clone();
            e.tail = node_map[e.tail].expect("live edge has live tail");
            e.head = node_map[e.head].expect("live edge has live head");
            new_edges.push(e);
            edge_map.push(i);
        }
    }
    let instance = Instance::new(
        next,
        node_map[inst.source()].expect("source is kept"),
        node_map[inst.sink()].expect("sink is kept"),
        inst.budget(),
        new_edges,
    )
    .expect("preprocessing keeps a valid instance");
    Reduced {
        instance,
        node_map,
        edge_map,
        original_edges: edges.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::instance::EdgeData;
    use crate::flowcore::rational::rat;

    fn i1_edges() -> Vec<EdgeData> {
        vec![EdgeData::new(0, 1, 2, -4, 2), EdgeData::new(0, 1, 2, -1, 0)]
    }

    #[test]
    fn nothing_to_remove() {
        let inst = Instance::new(2, 0, 1, 2, i1_edges()).unwrap();
        let r = preprocess(&inst);
        assert_eq!(r.instance, inst);
        assert_eq!(r.edge_map, vec![0, 1]);
    }

    #[test]
    fn isolated_node_is_dropped() {
        let inst = Instance::new(3, 0, 1, 2, i1_edges()).unwrap();
        let r = preprocess(&inst);
        assert_eq!(r.instance, Instance::new(2, 0, 1, 2, i1_edges()).unwrap());
        assert_eq!(r.node_map, vec![Some(0), Some(1), None]);
    }

    #[test]
    fn dead_end_chain_collapses() {
        // s=0, t=1, chain s -> a(2) -> b(3) with b a dead end.
        let mut edges = i1_edges();
        edges.push(EdgeData::new(0, 2, 1, -1, 0));
        edges.push(EdgeData::new(2, 3, 1, -1, 0));
        let inst = Instance::new(4, 0, 1, 2, edges).unwrap();
        let r = preprocess(&inst);
        assert_eq!(r.instance.node_count(), 2);
        assert_eq!(r.instance.edges(), i1_edges().as_slice());
        // rescanning the result finds nothing more
        assert_eq!(preprocess(&r.instance).instance, r.instance);
    }

    #[test]
    fn self_loop_keeps_node_alive() {
        let mut edges = i1_edges();
        edges.push(EdgeData::new(2, 2, 1, -3, 1));
        let inst = Instance::new(3, 0, 1, 2, edges).unwrap();
        assert_eq!(preprocess(&inst).instance, inst);
    }

    #[test]
    fn lift_restores_original_indices() {
        let mut edges = vec![EdgeData::new(0, 2, 1, 0, 0)];
        edges.extend(i1_edges());
        let inst = Instance::new(3, 0, 1, 2, edges).unwrap();
        let r = preprocess(&inst);
        let flow = Flow::from_integers(&r.instance, &[1, 2]).unwrap();
        let lifted = r.lift_flow(&inst, &flow);
        assert_eq!(lifted.values(), &[rat(0), rat(1), rat(2)]);
        assert_eq!(lifted.cost(), flow.cost());
    }
}
