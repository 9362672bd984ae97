//! Label-correcting negative cycle detection over any ordered length type.

use std::ops::{Add, Div};

use num_traits::Zero;

/// Lengths usable by [`negative_cycle`].
pub trait PathLength: Clone + PartialOrd + Add<Output = Self> + Zero {}

impl<T: Clone + PartialOrd + Add<Output = T> + Zero> PathLength for T {}

/// Lengths that can also be averaged over a cycle, for [`min_mean_cycle`].
pub trait MeanLength: PathLength + std::ops::Sub<Output = Self> {
    fn div_count(&self, k: usize) -> Self;
}

impl MeanLength for f64 {
    fn div_count(&self, k: usize) -> Self {
        self / k as f64
    }
}

impl MeanLength for crate::flowcore::Rational {
    fn div_count(&self, k: usize) -> Self {
        self.clone().div(crate::flowcore::rational::rat(k as i64))
    }
}

impl MeanLength for crate::flowcore::LexCost {
    fn div_count(&self, k: usize) -> Self {
        Self::new(self.primary.div_count(k), self.secondary.div_count(k))
    }
}

/// Sum of `lengths` over a list of arc indices.
pub fn cycle_length<L: PathLength>(cycle: &[usize], lengths: &[L]) -> L {
    cycle
        .iter()
        .fold(L::zero(), |acc, &a| acc + lengths[a].clone())
}

/// Bellman-Ford from a virtual source joined to every node with length
/// zero. Arcs are scanned in index order, so the result is deterministic.
///
/// Returns the arc indices of a simple cycle with strictly negative total
/// length, in traversal order, or `None` when no such cycle exists.
pub fn negative_cycle<L: PathLength>(
    node_count: usize,
    arcs: &[(usize, usize)],
    lengths: &[L],
) -> Option<Vec<usize>> {
    debug_assert_eq!(arcs.len(), lengths.len());
    if node_count == 0 || arcs.is_empty() {
        return None;
    }
    let mut dist = vec![L::zero(); node_count];
    let mut pred: Vec<Option<usize>> = vec![None; node_count];
    let max_passes = 3 * node_count + 3;
    for _ in 0..max_passes {
        let mut changed = false;
        for (a, &(u, v)) in arcs.iter().enumerate() {
            let candidate = dist[u].clone() + lengths[a].clone();
            if candidate < dist[v] {
                dist[v] = candidate;
                pred[v] = Some(a);
                changed = true;
            }
        }
        if !changed {
            return None;
        }
        // Parent-graph cycles only ever appear around negative cycles, so
        // checking every pass finds them early.
        if let Some(cycle) = pred_graph_cycle(&pred, arcs) {
            if cycle_length(&cycle, lengths) < L::zero() {
                return Some(cycle);
            }
        }
    }
    None
}

/// Finds a cycle in the functional graph `node -> tail(pred[node])`.
fn pred_graph_cycle(pred: &[Option<usize>], arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = pred.len();
    let mut stamp = vec![UNSEEN; n];
    for start in 0..n {
        if stamp[start] != UNSEEN {
            continue;
        }
        let mut v = start;
        loop {
            if stamp[v] == start {
                // v lies on a cycle discovered in this walk.
                let mut cycle = Vec::new();
                let mut w = v;
                loop {
                    let a = pred[w].expect("cycle nodes have predecessors");
                    cycle.push(a);
                    w = arcs[a].0;
                    if w == v {
                        break;
                    }
                }
                cycle.reverse();
                return Some(cycle);
            }
            if stamp[v] != UNSEEN {
                break;
            }
            stamp[v] = start;
            match pred[v] {
                Some(a) => v = arcs[a].0,
                None => break,
            }
        }
    }
    None
}

/// Karp's minimum mean cycle. Returns the cycle (arc indices in order)
/// and its mean length, or `None` for an acyclic graph.
#[allow(clippy::needless_range_loop)]
pub fn min_mean_cycle<L: MeanLength>(
    node_count: usize,
    arcs: &[(usize, usize)],
    lengths: &[L],
) -> Option<(Vec<usize>, L)> {
    let n = node_count;
    if n == 0 || arcs.is_empty() {
        return None;
    }
    // walk[k][v]: lightest walk with exactly k arcs ending at v.
    let mut walk: Vec<Vec<Option<L>>> = vec![vec![None; n]; n + 1];
    let mut pred: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n + 1];
    walk[0] = vec![Some(L::zero()); n];
    for k in 1..=n {
        for (a, &(u, v)) in arcs.iter().enumerate() {
            if let Some(du) = walk[k - 1][u].clone() {
                let candidate = du + lengths[a].clone();
                let better = match &walk[k][v] {
                    None => true,
                    Some(dv) => candidate < *dv,
                };
                if better {
                    walk[k][v] = Some(candidate);
                    pred[k][v] = Some(a);
                }
            }
        }
    }

    let mut best: Option<(usize, L)> = None;
    for v in 0..n {
        let Some(dn) = walk[n][v].clone() else {
            continue;
        };
        let mut worst: Option<L> = None;
        for k in 0..n {
            if let Some(dk) = walk[k][v].clone() {
                let mean = (dn.clone() - dk).div_count(n - k);
                if worst.as_ref().is_none_or(|w| mean > *w) {
                    worst = Some(mean);
                }
            }
        }
        if let Some(w) = worst {
            if best.as_ref().is_none_or(|(_, b)| w < *b) {
                best = Some((v, w));
            }
        }
    }
    let (v, _) = best?;

    // Recover the n-arc walk ending at v and split it into simple cycles.
    let mut walk_arcs = Vec::with_capacity(n);
    let mut w = v;
    for k in (1..=n).rev() {
        let a = pred[k][w].expect("walk exists");
        walk_arcs.push(a);
        w = arcs[a].0;
    }
    walk_arcs.reverse();
    let mut stack: Vec<usize> = Vec::new();
    let mut position = vec![usize::MAX; n];
    position[arcs[walk_arcs[0]].0] = 0;
    let mut best_cycle: Option<(Vec<usize>, L)> = None;
    for &a in &walk_arcs {
        stack.push(a);
        let head = arcs[a].1;
        if position[head] != usize::MAX {
            let start = position[head];
            let cycle: Vec<usize> = stack.drain(start..).collect();
            for &c in &cycle {
                position[arcs[c].1] = usize::MAX;
            }
            position[head] = stack.len();
            let mean = cycle_length(&cycle, lengths).div_count(cycle.len());
            if best_cycle.as_ref().is_none_or(|(_, m)| mean < *m) {
                best_cycle = Some((cycle, mean));
            }
        } else {
            position[head] = stack.len();
        }
    }
    best_cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::rational::{rat, ratio};
    use crate::flowcore::Rational;

    fn triangle() -> Vec<(usize, usize)> {
        vec![(0, 1), (1, 2), (2, 0)]
    }

    #[test]
    fn finds_negative_triangle() {
        let lengths = [rat(-1), rat(-1), rat(1)];
        let cycle = negative_cycle(3, &triangle(), &lengths).unwrap();
        assert_eq!(cycle.len(), 3);
        assert_eq!(cycle_length(&cycle, &lengths), rat(-1));
        for w in cycle.windows(2) {
            assert_eq!(triangle()[w[0]].1, triangle()[w[1]].0);
        }
    }

    #[test]
    fn zero_cycle_is_not_negative() {
        let lengths = [rat(-1), rat(-1), rat(2)];
        assert!(negative_cycle(3, &triangle(), &lengths).is_none());
    }

    #[test]
    fn self_loop_is_a_cycle() {
        let arcs = [(0, 1), (1, 1)];
        let cycle = negative_cycle(2, &arcs, &[3.0, -0.5]).unwrap();
        assert_eq!(cycle, vec![1]);
    }

    #[test]
    fn karp_picks_minimum_mean() {
        // two cycles through node 0: 0->1->0 (mean -1), 0->2->3->0 (mean -4/3)
        let arcs = [(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)];
        let lengths: Vec<Rational> = [-1, -1, -2, -2, 0].into_iter().map(rat).collect();
        let (cycle, mean) = min_mean_cycle(4, &arcs, &lengths).unwrap();
        assert_eq!(mean, ratio(-4, 3));
        assert_eq!(cycle.len(), 3);
    }

    #[test]
    fn karp_on_acyclic_graph() {
        assert!(min_mean_cycle(3, &[(0, 1), (1, 2)], &[1.0, 1.0]).is_none());
    }
}
