use std::ops::Neg;

use crate::flowcore::{Instance, LexCost};

use super::negative_cycle::negative_cycle;

/// One direction of an instance edge in the residual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidualArc {
    pub edge: usize,
    pub forward: bool,
    pub tail: usize,
    pub head: usize,
}

/// Residual graph of an integral flow. For each edge, `forward[e] = u_e - x_e`
/// and `backward[e] = x_e`; only arcs with positive capacity are present,
/// ordered by edge index with the forward arc first.
#[derive(Debug, Clone)]
pub struct ResidualGraph {
    node_count: usize,
    forward: Vec<i64>,
    backward: Vec<i64>,
    arcs: Vec<ResidualArc>,
}

impl ResidualGraph {
    pub fn new(inst: &Instance, flow: &[i64]) -> Self {
        assert_eq!(flow.len(), inst.edge_count());
        let mut forward = Vec::with_capacity(flow.len());
        let mut backward = Vec::with_capacity(flow.len());
        let mut arcs = Vec::new();
        for (i, (e, &x)) in inst.edges().iter().zip(flow).enumerate() {
            assert!(
                (0..=e.capacity).contains(&x),
                "flow outside [0, u] on edge {i}"
            );
            forward.push(e.capacity - x);
            backward.push(x);
            if e.capacity - x > 0 {
                arcs.push(ResidualArc {
                    edge: i,
                    forward: true,
                    tail: e.tail,
                    head: e.head,
                });
            }
            if x > 0 {
                arcs.push(ResidualArc {
                    edge: i,
                    forward: false,
                    tail: e.head,
                    head: e.tail,
                });
            }
        }
        Self {
            node_count: inst.node_count(),
            forward,
            backward,
            arcs,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[ResidualArc] {
        &self.arcs
    }

    pub fn capacity(&self, arc: &ResidualArc) -> i64 {
        if arc.forward {
            self.forward[arc.edge]
        } else {
            self.backward[arc.edge]
        }
    }

    /// Forward and backward residual capacity of an edge.
    pub fn edge_capacities(&self, edge: usize) -> (i64, i64) {
        (self.forward[edge], self.backward[edge])
    }

    /// Residual arc lengths: `+cost` forward, `-cost` backward.
    pub fn lengths<T: Clone + Neg<Output = T>>(&self, edge_costs: &[T]) -> Vec<T> {
        self.arcs
            .iter()
            .map(|a| {
                let c = edge_costs[a.edge].clone();
                if a.forward {
                    c
                } else {
                    -c
                }
            })
            .collect()
    }

    pub(crate) fn endpoints(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(|a| (a.tail, a.head)).collect()
    }
}

/// Simple closed walk of residual arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub arcs: Vec<ResidualArc>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Negative cycle under lexicographic lengths (one per residual arc).
pub fn find_negative_cycle(rg: &ResidualGraph, lengths: &[LexCost]) -> Option<Cycle> {
    assert_eq!(lengths.len(), rg.arcs().len());
    negative_cycle(rg.node_count(), &rg.endpoints(), lengths).map(|idx| Cycle {
        arcs: idx.into_iter().map(|a| rg.arcs()[a]).collect(),
    })
}
