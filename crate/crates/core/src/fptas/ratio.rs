//! Minimum ratio cycles and paths: minimize `Σ num_e / Σ den_e` over
//! cycles (or s-t paths) with positive denominator, given `num_e ≥ 0`.

use std::fmt::Debug;

use num_traits::{Num, Signed, Zero};

use crate::error::{Error, Result};
use crate::flowcore::{Digraph, Rational};
use crate::mcc::negative_cycle;

/// Arithmetic usable by [`min_ratio_path_dag`]: `f64` or exact rationals.
pub trait Scalar: Num + PartialOrd + Clone + Debug {
    fn magnitude(&self) -> Self;

    /// Values within this fraction of the magnitudes that produced them
    /// count as equal; zero for exact arithmetic.
    fn relative_tolerance() -> Self;
}

impl Scalar for f64 {
    fn magnitude(&self) -> Self {
        self.abs()
    }

    fn relative_tolerance() -> Self {
        1e-9
    }
}

impl Scalar for Rational {
    fn magnitude(&self) -> Self {
        self.abs()
    }

    fn relative_tolerance() -> Self {
        Rational::zero()
    }
}

fn near<T: Scalar>(a: &T, b: &T, scale: &T) -> bool {
    (a.clone() - b.clone()).magnitude() <= T::relative_tolerance() * scale.clone()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioResult<T> {
    /// Arc indices in traversal order.
    pub edges: Vec<usize>,
    pub numerator: T,
    pub denominator: T,
    pub ratio: T,
}

impl<T: Scalar> RatioResult<T> {
    fn from_edges(edges: Vec<usize>, num: &[T], den: &[T]) -> Self {
        let numerator = edges.iter().fold(T::zero(), |acc, &a| acc + num[a].clone());
        let denominator = edges.iter().fold(T::zero(), |acc, &a| acc + den[a].clone());
        RatioResult {
            ratio: numerator.clone() / denominator.clone(),
            edges,
            numerator,
            denominator,
        }
    }
}

/// Lawler bisection on `λ`: a cycle of ratio below `λ` exists iff the
/// lengths `num − λ·den` admit a negative cycle. The bracket is geometric,
/// and the result is within a factor `1 + rel_tol` of the minimum.
///
/// Returns `None` when no cycle has positive denominator.
pub fn min_ratio_cycle(
    graph: &Digraph,
    num: &[f64],
    den: &[f64],
    rel_tol: f64,
) -> Option<RatioResult<f64>> {
    assert!(rel_tol > 0.0 && rel_tol < 1.0, "rel_tol must lie in (0, 1)");
    assert!(
        num.iter().all(|&x| x >= 0.0),
        "numerators must be nonnegative"
    );
    let n = graph.node_count;
    let arcs = &graph.arcs;

    let neg_den: Vec<f64> = den.iter().map(|d| -d).collect();
    let first = negative_cycle(n, arcs, &neg_den)?;
    let mut best = RatioResult::from_edges(first, num, den);

    // Ratio-zero cycles live on the num = 0 arcs.
    let free: Vec<usize> = (0..arcs.len()).filter(|&a| num[a] == 0.0).collect();
    let free_arcs: Vec<(usize, usize)> = free.iter().map(|&a| arcs[a]).collect();
    let free_len: Vec<f64> = free.iter().map(|&a| -den[a]).collect();
    if let Some(c) = negative_cycle(n, &free_arcs, &free_len) {
        return Some(RatioResult::from_edges(
            c.into_iter().map(|i| free[i]).collect(),
            num,
            den,
        ));
    }

    let min_num = num
        .iter()
        .copied()
        .filter(|&x| x > 0.0)
        .fold(f64::INFINITY, f64::min);
    let den_mass: f64 = den.iter().map(|d| d.max(0.0)).sum();
    let mut lo = min_num / den_mass;
    let mut hi = best.ratio;
    for _ in 0..256 {
        if hi <= lo * (1.0 + rel_tol) {
            break;
        }
        let mid = (lo * hi).sqrt();
        let lengths: Vec<f64> = num.iter().zip(den).map(|(a, d)| a - mid * d).collect();
        match negative_cycle(n, arcs, &lengths) {
            Some(c) => {
                let found = RatioResult::from_edges(c, num, den);
                if found.denominator > 0.0 && found.ratio < mid {
                    if found.ratio < best.ratio {
                        best = found;
                    }
                    hi = best.ratio.min(mid);
                } else {
                    lo = mid;
                }
            }
            None => lo = mid,
        }
    }
    Some(best)
}

/// `(A, D)` label of a partial path: numerator and denominator sums.
#[derive(Debug, Clone)]
struct Label<T> {
    num: T,
    den: T,
    pred: Option<usize>,
}

/// Where the unknown optimum `λ*` lies relative to a probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Less,
    Equal,
    Greater,
}

/// Exact minimum ratio s-t path in a DAG by sequential parametric search:
/// the topological shortest-path recursion runs on labels linear in the
/// unknown `λ*`, and every comparison whose outcome depends on `λ*` is
/// settled by a concrete shortest-path solve at the comparison's
/// breakpoint.
///
/// Returns `None` when no s-t path has positive denominator.
pub fn min_ratio_path_dag<T: Scalar>(
    graph: &Digraph,
    num: &[T],
    den: &[T],
    source: usize,
    sink: usize,
) -> Result<Option<RatioResult<T>>> {
    let order = graph.topological_order().ok_or(Error::NotAcyclic)?;
    let out = graph.out_arcs();

    if !has_positive_path(graph, &order, &out, den, source, sink) {
        return Ok(None);
    }

    let mut search = Interval::<T> {
        lo: T::zero(),
        hi: None,
        exact: false,
    };
    let mut labels: Vec<Option<Label<T>>> = vec![None; graph.node_count];
    labels[source] = Some(Label {
        num: T::zero(),
        den: T::zero(),
        pred: None,
    });
    for &v in &order {
        let Some(lv) = labels[v].clone() else {
            continue;
        };
        for &a in &out[v] {
            let w = graph.arcs[a].1;
            let cand = Label {
                num: lv.num.clone() + num[a].clone(),
                den: lv.den.clone() + den[a].clone(),
                pred: Some(a),
            };
            let better = match &labels[w] {
                None => true,
                Some(cur) => search.better(&cand, cur, |lambda| {
                    probe(graph, &order, &out, num, den, source, sink, lambda)
                }),
            };
            if better {
                labels[w] = Some(cand);
            }
        }
    }

    let mut path = Vec::new();
    let mut v = sink;
    while let Some(a) = labels[v].as_ref().and_then(|l| l.pred) {
        path.push(a);
        v = graph.arcs[a].0;
    }
    path.reverse();
    let result = RatioResult::from_edges(path, num, den);
    if result.denominator <= T::zero() {
        return Err(Error::Internal(
            "parametric search ended on a path without positive denominator".into(),
        ));
    }
    Ok(Some(result))
}

/// Known bracket `[lo, hi]` for `λ*`, with `hi = None` meaning unbounded.
struct Interval<T> {
    lo: T,
    hi: Option<T>,
    exact: bool,
}

impl<T: Scalar> Interval<T> {
    /// True when `a` beats `b` at `λ*`: smaller `num − λ*·den`, then
    /// larger `den`.
    fn better(&mut self, a: &Label<T>, b: &Label<T>, mut resolve: impl FnMut(&T) -> Side) -> bool {
        let dn = a.num.clone() - b.num.clone();
        let dd = a.den.clone() - b.den.clone();
        if dd.is_zero() {
            return dn < T::zero();
        }
        let root = dn / dd.clone();
        let side = if self.exact {
            if self.lo > root {
                Side::Greater
            } else if self.lo < root {
                Side::Less
            } else {
                Side::Equal
            }
        } else if root < self.lo {
            Side::Greater
        } else if self.hi.as_ref().is_some_and(|h| root > *h) {
            Side::Less
        } else {
            let side = resolve(&root);
            match side {
                Side::Less => self.hi = Some(root.clone()),
                Side::Greater => self.lo = root.clone(),
                Side::Equal => {
                    self.lo = root.clone();
                    self.hi = Some(root.clone());
                    self.exact = true;
                }
            }
            side
        };
        // f(λ) = dn − λ·dd = dd·(root − λ).
        match side {
            Side::Less => dd < T::zero(),
            Side::Greater | Side::Equal => dd > T::zero(),
        }
    }
}

/// Shortest s-t value at `λ` under lexicographic `(num − λ·den, −den)`,
/// classified against `λ*`. Each label also carries the magnitude of the
/// terms summed into it, so rounding noise reads as a tie.
#[allow(clippy::too_many_arguments)]
fn probe<T: Scalar>(
    graph: &Digraph,
    order: &[usize],
    out: &[Vec<usize>],
    num: &[T],
    den: &[T],
    source: usize,
    sink: usize,
    lambda: &T,
) -> Side {
    let mut best: Vec<Option<(T, T, T)>> = vec![None; graph.node_count];
    best[source] = Some((T::zero(), T::zero(), T::zero()));
    for &v in order {
        let Some((val, d, mag)) = best[v].clone() else {
            continue;
        };
        for &a in &out[v] {
            let w = graph.arcs[a].1;
            let cv = val.clone() + num[a].clone() - lambda.clone() * den[a].clone();
            let cd = d.clone() + den[a].clone();
            let cm = mag.clone() + num[a].magnitude() + lambda.clone() * den[a].magnitude();
            let take = match &best[w] {
                None => true,
                Some((bv, bd, bm)) => {
                    let scale = if cm > *bm { cm.clone() } else { bm.clone() };
                    if near(&cv, bv, &scale) {
                        cd > *bd
                    } else {
                        cv < *bv
                    }
                }
            };
            if take {
                best[w] = Some((cv, cd, cm));
            }
        }
    }
    let (val, d, mag) = best[sink].clone().expect("sink reachable");
    if near(&val, &T::zero(), &mag) {
        if d > T::zero() {
            Side::Equal
        } else {
            Side::Greater
        }
    } else if val < T::zero() {
        Side::Less
    } else {
        Side::Greater
    }
}

/// Longest-denominator s-t path is positive.
fn has_positive_path<T: Scalar>(
    graph: &Digraph,
    order: &[usize],
    out: &[Vec<usize>],
    den: &[T],
    source: usize,
    sink: usize,
) -> bool {
    let mut best: Vec<Option<T>> = vec![None; graph.node_count];
    best[source] = Some(T::zero());
    for &v in order {
        let Some(d) = best[v].clone() else { continue };
        for &a in &out[v] {
            let w = graph.arcs[a].1;
            let cand = d.clone() + den[a].clone();
            if best[w].as_ref().is_none_or(|b| cand > *b) {
                best[w] = Some(cand);
            }
        }
    }
    best[sink].as_ref().is_some_and(|d| *d > T::zero())
}
