use num_traits::Zero;

use super::flow::Flow;
use super::instance::{EdgeData, Instance};
use super::rational::Rational;

/// An instance with an appended zero-cost, zero-fee return arc `t -> s`.
///
/// The return arc is always the last edge. Its capacity `Σ u_e` stands in
/// for infinity: no s-t flow can carry more.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulation {
    instance: Instance,
    base_edges: usize,
}

pub fn add_return_arc(inst: &Instance) -> Circulation {
    let total: i64 = inst.edges().iter().map(|e| e.capacity).sum();
    let mut edges = inst.edges().to_vec();
    edges.push(EdgeData::new(inst.sink(), inst.source(), total, 0, 0));
    let instance = Instance::new(
        inst.node_count(),
        inst.source(),
        inst.sink(),
        inst.budget(),
        edges,
    )
    .expect("return arc keeps the instance valid");
    Circulation {
        instance,
        base_edges: inst.edge_count(),
    }
}

impl Circulation {
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn return_arc(&self) -> usize {
        self.base_edges
    }

    pub fn base_edge_count(&self) -> usize {
        self.base_edges
    }

    pub fn is_return_arc(&self, edge: usize) -> bool {
        edge == self.base_edges
    }

    /// Instance without the return arc.
    pub fn base(&self) -> Instance {
        self.instance.filter_edges(|i, _| i < self.base_edges)
    }

    /// Drops the return arc value from a circulation.
    pub fn project(&self, flow: &Flow) -> Flow {
        flow.truncated(&self.base())
    }

    /// Extends an s-t flow by routing its value back over the return arc.
    pub fn lift(&self, flow: &Flow) -> Flow {
        let mut out = Rational::zero();
        for (e, x) in self.instance.edges()[..self.base_edges]
            .iter()
            .zip(flow.values())
        {
            if e.tail == self.instance.source() {
                out += x;
            }
            if e.head == self.instance.source() {
                out -= x;
            }
        }
        let mut values = flow.values().to_vec();
        values.push(out);
        Flow::new(&self.instance, values).expect("one value per edge")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::flow::validate_flow;
    use crate::flowcore::rational::rat;

    fn i1() -> Instance {
        Instance::new(
            2,
            0,
            1,
            2,
            vec![EdgeData::new(0, 1, 2, -4, 2), EdgeData::new(0, 1, 2, -1, 0)],
        )
        .unwrap()
    }

    #[test]
    fn return_arc_capacity_is_total_capacity() {
        let c = add_return_arc(&i1());
        assert_eq!(c.return_arc(), 2);
        assert_eq!(c.instance().edge(2), &EdgeData::new(1, 0, 4, 0, 0));

        let i0 = Instance::new(2, 0, 1, 0, vec![EdgeData::new(0, 1, 1, 1, 0)]).unwrap();
        assert_eq!(add_return_arc(&i0).instance().edge(1).capacity, 1);
    }

    #[test]
    fn zero_capacity_edges_give_zero_return_capacity() {
        let inst = Instance::new(2, 0, 1, 0, vec![EdgeData::new(0, 1, 0, -3, 0)]).unwrap();
        let c = add_return_arc(&inst);
        assert_eq!(c.instance().edge(1).capacity, 0);
    }

    #[test]
    fn lift_and_project() {
        let inst = i1();
        let c = add_return_arc(&inst);
        let x = Flow::from_integers(&inst, &[1, 2]).unwrap();
        let lifted = c.lift(&x);
        assert_eq!(lifted.value(2), &rat(3));
        let report = validate_flow(c.instance(), lifted.values()).unwrap();
        assert!(report.conservation_violations.is_empty());
        assert_eq!(report.flow_value, rat(0));
        assert_eq!(c.project(&lifted), x);
    }
}
