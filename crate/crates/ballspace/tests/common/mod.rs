// Oracles are shared across test targets; not every target uses every one.
#![allow(dead_code)]

//! Independent oracles for cross-checking the exact kernels.
//!
//! These deliberately avoid the library's candidate-set machinery: graph
//! distances are re-derived by Dijkstra over a fine subdivision, and
//! sup/inf quantities over interval unions are re-derived by brute-force
//! grids, so that candidate completeness is audited rather than assumed.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use ballspace::exact::to_f64;
use ballspace::graph::MetricGraph;
use ballspace::metric_core::IntervalUnion;
use ballspace::point::GraphPoint;
use ballspace::rat;

/// Brute-force directed Hausdorff between uniform grids of two real
/// intervals, with grid spacing at most `delta` and endpoints included.
pub fn grid_hausdorff_intervals(a: f64, b: f64, c: f64, d: f64, delta: f64) -> f64 {
    let grid = |lo: f64, hi: f64| -> (f64, f64, usize) {
        let n = (((hi - lo) / delta).ceil() as usize).max(1);
        (lo, (hi - lo) / n as f64, n)
    };
    let directed = |(lo1, h1, n1): (f64, f64, usize), (lo2, h2, n2): (f64, f64, usize)| -> f64 {
        let mut sup: f64 = 0.0;
        for i in 0..=n1 {
            let x = lo1 + h1 * i as f64;
            // Nearest grid point of the second interval in O(1): the grid
            // is uniform, so the minimizer is the clamped rounded index.
            let j = ((x - lo2) / h2).round().clamp(0.0, n2 as f64) as usize;
            let mut best = (x - (lo2 + h2 * j as f64)).abs();
            for jj in j.saturating_sub(1)..=(j + 1).min(n2) {
                best = best.min((x - (lo2 + h2 * jj as f64)).abs());
            }
            sup = sup.max(best);
        }
        sup
    };
    let ga = grid(a, b);
    let gb = grid(c, d);
    directed(ga, gb).max(directed(gb, ga))
}

/// Approximate graph distance via Dijkstra on a subdivision of every edge
/// into `pieces` equal parts. `p` and `q` must land on subdivision nodes
/// (offsets that are multiples of `len / pieces`), which holds for vertices
/// and midpoints with even `pieces`.
pub fn subdivided_dijkstra(
    graph: &MetricGraph,
    p: &GraphPoint,
    q: &GraphPoint,
    pieces: usize,
) -> f64 {
    // Node ids: vertices [0, V); edge-interior nodes follow per edge.
    let nv = graph.vertex_count();
    let ne = graph.edge_count();
    let interior = pieces - 1;
    let node_count = nv + ne * interior;
    let node_of = |g: &GraphPoint| -> usize {
        match g {
            GraphPoint::Vertex(v) => *v,
            GraphPoint::Interior { edge, offset } => {
                let len = to_f64(&graph.edge(*edge).len);
                let frac = to_f64(offset) / len;
                let k = (frac * pieces as f64).round() as usize;
                assert!(
                    (frac * pieces as f64 - k as f64).abs() < 1e-9,
                    "point must lie on the subdivision"
                );
                if k == 0 {
                    graph.edge(*edge).u
                } else if k == pieces {
                    graph.edge(*edge).v
                } else {
                    nv + *edge * interior + (k - 1)
                }
            }
        }
    };
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); node_count];
    for e in 0..ne {
        let edge = graph.edge(e);
        let step = to_f64(&edge.len) / pieces as f64;
        let chain: Vec<usize> = std::iter::once(edge.u)
            .chain((0..interior).map(|i| nv + e * interior + i))
            .chain(std::iter::once(edge.v))
            .collect();
        for w in chain.windows(2) {
            adj[w[0]].push((w[1], step));
            adj[w[1]].push((w[0], step));
        }
    }

    #[derive(PartialEq)]
    struct Item(f64, usize);
    impl Eq for Item {}
    impl PartialOrd for Item {
        fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Item {
        fn cmp(&self, other: &Self) -> Ordering {
            other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
        }
    }

    let (src, dst) = (node_of(p), node_of(q));
    let mut dist = vec![f64::INFINITY; node_count];
    dist[src] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(Item(0.0, src));
    while let Some(Item(d, u)) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == dst {
            return d;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Item(nd, v));
            }
        }
    }
    dist[dst]
}

/// Brute-force `sup_{a in A} dist(a, B)` over a delta-grid of `A`, where
/// `dist(a, B)` is itself a delta-grid minimum of pairwise point distances.
/// The result underestimates the true supremum by at most `2 * delta`.
pub fn grid_sup_dist(graph: &MetricGraph, a: &IntervalUnion, b: &IntervalUnion, delta: f64) -> f64 {
    let samples = |iu: &IntervalUnion| -> Vec<GraphPoint> {
        let mut out = Vec::new();
        for iv in &iu.intervals {
            let span = to_f64(&(&iv.hi - &iv.lo));
            let n = ((span / delta).ceil() as usize).max(1);
            for i in 0..=n {
                let offset = &iv.lo + &(&(&iv.hi - &iv.lo) * &rat(i as f64 / n as f64));
                out.push(GraphPoint::Interior {
                    edge: iv.edge,
                    offset,
                });
            }
        }
        out
    };
    let pa = samples(a);
    let pb = samples(b);
    let mut sup: f64 = 0.0;
    for x in &pa {
        let mut min = f64::INFINITY;
        for y in &pb {
            min = min.min(to_f64(&graph.distance(x, y)));
        }
        sup = sup.max(min);
    }
    sup
}
