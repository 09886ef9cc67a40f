//! Metric graphs (1-complexes) with exact rational arithmetic.
//!
//! Vertices are joined by edges of positive rational length; points include
//! edge interiors, addressed by exact offsets. Parallel edges are allowed
//! (the circle uses two), self-loops are not. Distances, balls, spheres,
//! dilations and sup/inf of distance functions over interval unions are all
//! exact.
//!
//! Sup/inf computations over interval unions reduce to a finite candidate
//! set. Restricted to one edge `e = (u, v, len)`, the distance to a compact
//! set `B` is the lower envelope of
//!
//! * `dist(u,B) + s` and `dist(v,B) + (len - s)` (paths leaving the edge),
//! * per sub-interval `[c,d]` of `B` on `e`, the along-edge trough
//!   `max(0, c - s, s - d)`,
//!
//! all piecewise linear with slopes in {-1, 0, +1}. Extrema over an interval
//! of offsets therefore occur at interval endpoints, trough kinks, or
//! pairwise crossings of opposite-slope pieces — a finite rational set that
//! is enumerated and evaluated exactly.

use num_traits::Zero;
use rand::Rng;

use crate::exact::{rat, rat_abs, rat_half, rat_min, to_f64, Rat};
use crate::metric_core::{EdgeInterval, IntervalUnion};
use crate::point::{EdgeId, GraphPoint, VertexId};
use crate::Error;

#[derive(Debug, Clone)]
pub struct Vertex {
    pub label: String,
    /// Planar embedding for reporting, when the graph has a natural one.
    pub coords: Option<[f64; 2]>,
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub len: Rat,
}

#[derive(Debug, Clone)]
pub struct MetricGraph {
    id: String,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
    /// All-pairs shortest vertex distances.
    vdist: Vec<Vec<Rat>>,
    /// First edge on a shortest path between vertices, for reconstruction.
    vnext: Vec<Vec<Option<EdgeId>>>,
    /// Vertices that exist only because an unbounded model was windowed.
    window_ends: Vec<VertexId>,
}

impl MetricGraph {
    pub fn new(
        id: &str,
        vertices: Vec<Vertex>,
        edges: Vec<(VertexId, VertexId, f64)>,
        window_ends: Vec<VertexId>,
    ) -> Result<Self, Error> {
        let n = vertices.len();
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v, len) in &edges {
            if u >= n || v >= n {
                return Err(Error::Invalid("edge endpoint out of range".into()));
            }
            if u == v {
                return Err(Error::Invalid("self-loops are not supported".into()));
            }
            if !len.is_finite() || len <= 0.0 {
                return Err(Error::InvalidLength(len));
            }
            es.push(Edge {
                u,
                v,
                len: rat(len),
            });
        }
        let mut incident = vec![Vec::new(); n];
        for (i, e) in es.iter().enumerate() {
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        let (vdist, vnext) = all_pairs(n, &es)?;
        Ok(MetricGraph {
            id: id.to_string(),
            vertices,
            edges: es,
            incident,
            vdist,
            vnext,
            window_ends,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v]
    }

    pub fn window_ends(&self) -> &[VertexId] {
        &self.window_ends
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn vertex_distance(&self, u: VertexId, v: VertexId) -> &Rat {
        &self.vdist[u][v]
    }

    pub fn total_length(&self) -> Rat {
        self.edges.iter().map(|e| e.len.clone()).sum()
    }

    pub fn diameter(&self) -> Rat {
        // Over vertices plus per-edge interior maxima of the distance
        // function; sufficient for the compact graphs in the catalog where
        // it is used to bound searches.
        let mut best = Rat::zero();
        for u in 0..self.vertices.len() {
            for v in 0..self.vertices.len() {
                if self.vdist[u][v] > best {
                    best = self.vdist[u][v].clone();
                }
            }
        }
        for e in &self.edges {
            // Farthest interior point from any vertex w:
            // max_s min(d(w,u)+s, d(w,v)+len-s) = (d(w,u)+d(w,v)+len)/2.
            for w in 0..self.vertices.len() {
                let m = rat_half(&(&self.vdist[w][e.u] + &self.vdist[w][e.v] + &e.len));
                if m > best {
                    best = m;
                }
            }
        }
        best
    }

    /// Canonical form of a point: offsets 0 / len become vertices.
    pub fn canonical(&self, p: GraphPoint) -> GraphPoint {
        match p {
            GraphPoint::Interior { edge, offset } => {
                let e = &self.edges[edge];
                if offset.is_zero() {
                    GraphPoint::Vertex(e.u)
                } else if offset == e.len {
                    GraphPoint::Vertex(e.v)
                } else {
                    GraphPoint::Interior { edge, offset }
                }
            }
            v => v,
        }
    }

    pub fn contains(&self, p: &GraphPoint) -> bool {
        match p {
            GraphPoint::Vertex(v) => *v < self.vertices.len(),
            GraphPoint::Interior { edge, offset } => {
                *edge < self.edges.len()
                    && *offset >= Rat::zero()
                    && *offset <= self.edges[*edge].len
            }
        }
    }

    /// Exact shortest-path distance between two points of the complex.
    pub fn distance(&self, p: &GraphPoint, q: &GraphPoint) -> Rat {
        match (p, q) {
            (GraphPoint::Vertex(u), GraphPoint::Vertex(v)) => self.vdist[*u][*v].clone(),
            (GraphPoint::Vertex(u), GraphPoint::Interior { edge, offset })
            | (GraphPoint::Interior { edge, offset }, GraphPoint::Vertex(u)) => {
                self.dist_vertex_edge(*u, *edge, offset)
            }
            (
                GraphPoint::Interior {
                    edge: e1,
                    offset: o1,
                },
                GraphPoint::Interior {
                    edge: e2,
                    offset: o2,
                },
            ) => {
                let a = &self.edges[*e1];
                let b = &self.edges[*e2];
                let mut best: Option<Rat> = None;
                if e1 == e2 {
                    best = Some(rat_abs(&(o1 - o2)));
                }
                // Exit/enter through endpoint combinations.
                for (exit_cost, exit_v) in [(o1.clone(), a.u), (&a.len - o1, a.v)] {
                    for (enter_cost, enter_v) in [(o2.clone(), b.u), (&b.len - o2, b.v)] {
                        let c = &exit_cost + &self.vdist[exit_v][enter_v] + &enter_cost;
                        best = Some(match best {
                            Some(cur) => rat_min(cur, c),
                            None => c,
                        });
                    }
                }
                best.expect("non-empty candidate set")
            }
        }
    }

    fn dist_vertex_edge(&self, u: VertexId, edge: EdgeId, offset: &Rat) -> Rat {
        let e = &self.edges[edge];
        rat_min(
            &self.vdist[u][e.u] + offset,
            &self.vdist[u][e.v] + &(&e.len - offset),
        )
    }

    /// Distance from `x` to each endpoint of every edge, i.e. the vertex
    /// distance profile of an arbitrary point.
    fn dist_to_vertices(&self, x: &GraphPoint) -> Vec<Rat> {
        (0..self.vertices.len())
            .map(|v| self.distance(x, &GraphPoint::Vertex(v)))
            .collect()
    }

    /// Exact closed metric ball as a normalized interval union.
    pub fn ball(&self, x: &GraphPoint, t: &Rat) -> IntervalUnion {
        let dv = self.dist_to_vertices(x);
        let mut raw = Vec::new();
        for (eid, e) in self.edges.iter().enumerate() {
            // Reachable from the u side: d(x,u) + s <= t.
            let from_u = t - &dv[e.u];
            if from_u >= Rat::zero() {
                raw.push(EdgeInterval {
                    edge: eid,
                    lo: Rat::zero(),
                    hi: rat_min(e.len.clone(), from_u),
                });
            }
            let from_v = t - &dv[e.v];
            if from_v >= Rat::zero() {
                raw.push(EdgeInterval {
                    edge: eid,
                    lo: rat_max0(&e.len - &from_v),
                    hi: e.len.clone(),
                });
            }
            if let GraphPoint::Interior { edge, offset } = x {
                if *edge == eid {
                    raw.push(EdgeInterval {
                        edge: eid,
                        lo: rat_max0(offset - t),
                        hi: rat_min(e.len.clone(), offset + t),
                    });
                }
            }
        }
        self.normalize(raw)
    }

    /// Exact metric sphere `{ p : d(x,p) = t }` as a finite point set.
    pub fn sphere(&self, x: &GraphPoint, t: &Rat) -> Vec<GraphPoint> {
        let dv = self.dist_to_vertices(x);
        let mut out: Vec<GraphPoint> = Vec::new();
        let mut push = |g: GraphPoint, graph: &MetricGraph| {
            let c = graph.canonical(g);
            if !out.contains(&c) {
                out.push(c);
            }
        };
        for (eid, e) in self.edges.iter().enumerate() {
            let mut candidates = vec![t - &dv[e.u], &e.len - &(t - &dv[e.v])];
            if let GraphPoint::Interior { edge, offset } = x {
                if *edge == eid {
                    candidates.push(offset - t);
                    candidates.push(offset + t);
                }
            }
            for s in candidates {
                if s < Rat::zero() || s > e.len {
                    continue;
                }
                let p = GraphPoint::Interior {
                    edge: eid,
                    offset: s,
                };
                if self.distance(x, &p) == *t {
                    push(p, self);
                }
            }
        }
        out
    }

    /// Normalizes raw intervals: clamps, sorts, merges touching intervals
    /// per edge, and closes over covered vertices so that a vertex in the
    /// set is represented on every incident edge. The result is canonical.
    pub fn normalize(&self, raw: Vec<EdgeInterval>) -> IntervalUnion {
        let mut raw: Vec<EdgeInterval> = raw
            .into_iter()
            .filter_map(|iv| {
                let len = &self.edges[iv.edge].len;
                let lo = rat_max0(iv.lo);
                let hi = rat_min(iv.hi, len.clone());
                (lo <= hi).then_some(EdgeInterval {
                    edge: iv.edge,
                    lo,
                    hi,
                })
            })
            .collect();

        // Vertex closure: replicate covered endpoints on all incident edges.
        let mut covered = vec![false; self.vertices.len()];
        for iv in &raw {
            let e = &self.edges[iv.edge];
            if iv.lo.is_zero() {
                covered[e.u] = true;
            }
            if iv.hi == e.len {
                covered[e.v] = true;
            }
        }
        for (v, cov) in covered.iter().enumerate() {
            if !cov {
                continue;
            }
            for &eid in &self.incident[v] {
                let e = &self.edges[eid];
                let at = if e.u == v { Rat::zero() } else { e.len.clone() };
                raw.push(EdgeInterval {
                    edge: eid,
                    lo: at.clone(),
                    hi: at,
                });
            }
        }

        raw.sort_by(|a, b| a.edge.cmp(&b.edge).then(a.lo.cmp(&b.lo)));
        let mut merged: Vec<EdgeInterval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match merged.last_mut() {
                Some(last) if last.edge == iv.edge && iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => merged.push(iv),
            }
        }
        IntervalUnion {
            complex_id: self.id.clone(),
            intervals: merged,
        }
    }

    /// Set containment of normalized interval unions.
    pub fn subset(&self, a: &IntervalUnion, b: &IntervalUnion) -> bool {
        a.intervals.iter().all(|ia| {
            b.intervals
                .iter()
                .any(|ib| ib.edge == ia.edge && ib.lo <= ia.lo && ia.hi <= ib.hi)
        })
    }

    /// Exact distance from a point to an interval union, with a witness
    /// point of the set realizing it.
    pub fn dist_to_interval_union(&self, x: &GraphPoint, set: &IntervalUnion) -> (Rat, GraphPoint) {
        debug_assert_eq!(set.complex_id, self.id);
        let mut best: Option<(Rat, GraphPoint)> = None;
        for iv in &set.intervals {
            let mut candidates = vec![iv.lo.clone(), iv.hi.clone()];
            if let GraphPoint::Interior { edge, offset } = x {
                if *edge == iv.edge && *offset >= iv.lo && *offset <= iv.hi {
                    candidates.push(offset.clone());
                }
            }
            for s in candidates {
                let p = GraphPoint::Interior {
                    edge: iv.edge,
                    offset: s,
                };
                let d = self.distance(x, &p);
                if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                    best = Some((d, self.canonical(p)));
                }
            }
        }
        best.expect("interval union must be non-empty")
    }

    /// Exact directed supremum `sup_{a in A} dist(a, B)` with witnesses
    /// `(a*, nearest point of B to a*)`.
    pub fn sup_dist_interval_union(
        &self,
        a: &IntervalUnion,
        b: &IntervalUnion,
    ) -> (Rat, GraphPoint, GraphPoint) {
        let mut best: Option<(Rat, GraphPoint, GraphPoint)> = None;
        for iv in &a.intervals {
            let e = &self.edges[iv.edge];
            let (du, _) = self.dist_to_interval_union(&GraphPoint::Vertex(e.u), b);
            let (dv, _) = self.dist_to_interval_union(&GraphPoint::Vertex(e.v), b);

            // Pieces of dist(., B) on this edge, extended to all offsets:
            // ascending `alpha + s` and descending `beta - s`.
            let mut asc = vec![du.clone()]; // du + s
            let mut desc = vec![&dv + &e.len]; // dv + len - s
            let mut kinks: Vec<Rat> = Vec::new();
            for ib in &b.intervals {
                if ib.edge == iv.edge {
                    asc.push(-ib.hi.clone()); // s - hi
                    desc.push(ib.lo.clone()); // lo - s
                    kinks.push(ib.lo.clone());
                    kinks.push(ib.hi.clone());
                }
            }

            let mut candidates = vec![iv.lo.clone(), iv.hi.clone()];
            candidates.extend(kinks.into_iter().filter(|s| *s >= iv.lo && *s <= iv.hi));
            for alpha in &asc {
                for beta in &desc {
                    let s = rat_half(&(beta - alpha));
                    if s >= iv.lo && s <= iv.hi {
                        candidates.push(s);
                    }
                }
            }

            for s in candidates {
                let p = GraphPoint::Interior {
                    edge: iv.edge,
                    offset: s,
                };
                let (d, w) = self.dist_to_interval_union(&p, b);
                if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
                    best = Some((d, self.canonical(p), w));
                }
            }
        }
        best.expect("interval union must be non-empty")
    }

    /// Exact closed tubular neighborhood of an interval union.
    pub fn dilate(&self, set: &IntervalUnion, r: &Rat) -> IntervalUnion {
        if set.intervals.is_empty() {
            return set.clone();
        }
        let mut raw = Vec::new();
        for (eid, e) in self.edges.iter().enumerate() {
            let (du, _) = self.dist_to_interval_union(&GraphPoint::Vertex(e.u), set);
            let (dv, _) = self.dist_to_interval_union(&GraphPoint::Vertex(e.v), set);
            let from_u = r - &du;
            if from_u >= Rat::zero() {
                raw.push(EdgeInterval {
                    edge: eid,
                    lo: Rat::zero(),
                    hi: rat_min(e.len.clone(), from_u),
                });
            }
            let from_v = r - &dv;
            if from_v >= Rat::zero() {
                raw.push(EdgeInterval {
                    edge: eid,
                    lo: rat_max0(&e.len - &from_v),
                    hi: e.len.clone(),
                });
            }
            for iv in &set.intervals {
                if iv.edge == eid {
                    raw.push(EdgeInterval {
                        edge: eid,
                        lo: rat_max0(&iv.lo - r),
                        hi: rat_min(e.len.clone(), &iv.hi + r),
                    });
                }
            }
        }
        self.normalize(raw)
    }

    /// Samples an ε-net of an interval union (covering radius ≤ eps in the
    /// path metric).
    pub fn sample_interval_union(&self, set: &IntervalUnion, eps: f64) -> Vec<GraphPoint> {
        assert!(eps > 0.0, "net resolution must be positive");
        let step = rat(2.0 * eps);
        let mut out = Vec::new();
        for iv in &set.intervals {
            let span = &iv.hi - &iv.lo;
            if span.is_zero() {
                out.push(self.canonical(GraphPoint::Interior {
                    edge: iv.edge,
                    offset: iv.lo.clone(),
                }));
                continue;
            }
            let n = {
                let ratio = to_f64(&(&span / &step));
                ratio.ceil().max(1.0) as i64
            };
            let h = &span / rat(n as f64);
            for i in 0..=n {
                let offset = &iv.lo + &(&h * rat(i as f64));
                out.push(self.canonical(GraphPoint::Interior {
                    edge: iv.edge,
                    offset,
                }));
            }
        }
        out.dedup();
        out
    }

    /// Exact midpoint: a point `m` with `d(p,m) = d(m,q) = d(p,q)/2`.
    pub fn midpoint(&self, p: &GraphPoint, q: &GraphPoint) -> GraphPoint {
        let total = self.distance(p, q);
        let half = rat_half(&total);
        let legs = self.shortest_path_legs(p, q);
        let mut acc = Rat::zero();
        for (edge, from, to) in legs {
            let leg_len = rat_abs(&(&to - &from));
            if &acc + &leg_len >= half {
                let rest = &half - &acc;
                let offset = if to >= from {
                    &from + &rest
                } else {
                    &from - &rest
                };
                return self.canonical(GraphPoint::Interior { edge, offset });
            }
            acc = &acc + &leg_len;
        }
        self.canonical(q.clone())
    }

    /// Decomposes one shortest path from `p` to `q` into per-edge legs
    /// `(edge, from_offset, to_offset)`.
    pub fn shortest_path_legs(&self, p: &GraphPoint, q: &GraphPoint) -> Vec<(EdgeId, Rat, Rat)> {
        let total = self.distance(p, q);
        // Same-edge direct route.
        if let (
            GraphPoint::Interior {
                edge: e1,
                offset: o1,
            },
            GraphPoint::Interior {
                edge: e2,
                offset: o2,
            },
        ) = (p, q)
        {
            if e1 == e2 && rat_abs(&(o1 - o2)) == total {
                return vec![(*e1, o1.clone(), o2.clone())];
            }
        }
        // Otherwise route through best endpoint pair.
        type Exit = (Rat, VertexId, Option<(EdgeId, Rat)>);
        let exits = |x: &GraphPoint| -> Vec<Exit> {
            match x {
                GraphPoint::Vertex(v) => vec![(Rat::zero(), *v, None)],
                GraphPoint::Interior { edge, offset } => {
                    let e = &self.edges[*edge];
                    vec![
                        (offset.clone(), e.u, Some((*edge, offset.clone()))),
                        (&e.len - offset, e.v, Some((*edge, offset.clone()))),
                    ]
                }
            }
        };
        for (c1, w1, leg1) in exits(p) {
            for (c2, w2, leg2) in exits(q) {
                if &c1 + &self.vdist[w1][w2] + &c2 == total {
                    let mut legs = Vec::new();
                    if let Some((e, o)) = leg1 {
                        let at = if self.edges[e].u == w1 {
                            Rat::zero()
                        } else {
                            self.edges[e].len.clone()
                        };
                        if o != at {
                            legs.push((e, o, at));
                        }
                    }
                    legs.extend(self.vertex_path_legs(w1, w2));
                    if let Some((e, o)) = leg2 {
                        let at = if self.edges[e].u == w2 {
                            Rat::zero()
                        } else {
                            self.edges[e].len.clone()
                        };
                        if o != at {
                            legs.push((e, at, o));
                        }
                    }
                    return legs;
                }
            }
        }
        unreachable!("distance is realized through an endpoint pair");
    }

    fn vertex_path_legs(&self, mut u: VertexId, v: VertexId) -> Vec<(EdgeId, Rat, Rat)> {
        let mut legs = Vec::new();
        while u != v {
            let e = self.vnext[u][v].expect("connected graph");
            let edge = &self.edges[e];
            if edge.u == u {
                legs.push((e, Rat::zero(), edge.len.clone()));
                u = edge.v;
            } else {
                legs.push((e, edge.len.clone(), Rat::zero()));
                u = edge.u;
            }
        }
        legs
    }

    /// Distance to the nearest artificial window end (`None` when the graph
    /// has no window, i.e. models a compact space faithfully).
    pub fn boundary_distance(&self, p: &GraphPoint) -> Option<Rat> {
        self.window_ends
            .iter()
            .map(|&v| self.distance(p, &GraphPoint::Vertex(v)))
            .min()
    }

    /// Uniform random point by length measure, with exact offset.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> GraphPoint {
        let total = to_f64(&self.total_length());
        let mut target = rng.gen_range(0.0..total);
        for (eid, e) in self.edges.iter().enumerate() {
            let len = to_f64(&e.len);
            if target <= len {
                let offset = rat(target.clamp(0.0, len));
                return self.canonical(GraphPoint::Interior { edge: eid, offset });
            }
            target -= len;
        }
        GraphPoint::Vertex(0)
    }

    /// Reporting coordinates (linear interpolation along embedded edges).
    pub fn coords_of(&self, p: &GraphPoint) -> Option<Vec<f64>> {
        match p {
            GraphPoint::Vertex(v) => self.vertices[*v].coords.map(|c| c.to_vec()),
            GraphPoint::Interior { edge, offset } => {
                let e = &self.edges[*edge];
                let a = self.vertices[e.u].coords?;
                let b = self.vertices[e.v].coords?;
                let frac = to_f64(offset) / to_f64(&e.len);
                Some(vec![
                    a[0] + frac * (b[0] - a[0]),
                    a[1] + frac * (b[1] - a[1]),
                ])
            }
        }
    }

    /// Locates a planar coordinate on the embedded 1-complex.
    pub fn point_by_coords(&self, target: [f64; 2], tol: f64) -> Option<GraphPoint> {
        for (vid, v) in self.vertices.iter().enumerate() {
            if let Some(c) = v.coords {
                if (c[0] - target[0]).abs() <= tol && (c[1] - target[1]).abs() <= tol {
                    return Some(GraphPoint::Vertex(vid));
                }
            }
        }
        for (eid, e) in self.edges.iter().enumerate() {
            let (a, b) = (self.vertices[e.u].coords?, self.vertices[e.v].coords?);
            let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
            let len2 = dx * dx + dy * dy;
            let frac = ((target[0] - a[0]) * dx + (target[1] - a[1]) * dy) / len2;
            if !(0.0..=1.0).contains(&frac) {
                continue;
            }
            let px = a[0] + frac * dx;
            let py = a[1] + frac * dy;
            if (px - target[0]).abs() <= tol && (py - target[1]).abs() <= tol {
                let offset = &rat(frac) * &self.edges[eid].len;
                return Some(self.canonical(GraphPoint::Interior { edge: eid, offset }));
            }
        }
        None
    }
}

fn rat_max0(x: Rat) -> Rat {
    if x < Rat::zero() {
        Rat::zero()
    } else {
        x
    }
}

type DistanceTables = (Vec<Vec<Rat>>, Vec<Vec<Option<EdgeId>>>);

fn all_pairs(n: usize, edges: &[Edge]) -> Result<DistanceTables, Error> {
    let mut dist: Vec<Vec<Option<Rat>>> = vec![vec![None; n]; n];
    let mut next: Vec<Vec<Option<EdgeId>>> = vec![vec![None; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(Rat::zero());
    }
    for (eid, e) in edges.iter().enumerate() {
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            if dist[a][b].as_ref().is_none_or(|d| e.len < *d) {
                dist[a][b] = Some(e.len.clone());
                next[a][b] = Some(eid);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = dist[i][k].clone() else {
                continue;
            };
            for j in 0..n {
                let Some(dkj) = dist[k][j].clone() else {
                    continue;
                };
                let cand = &dik + &dkj;
                if dist[i][j].as_ref().is_none_or(|d| cand < *d) {
                    dist[i][j] = Some(cand);
                    next[i][j] = next[i][k];
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for row in dist {
        let mut r = Vec::with_capacity(n);
        for d in row {
            r.push(d.ok_or_else(|| Error::Invalid("graph must be connected".into()))?);
        }
        out.push(r);
    }
    Ok((out, next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn square_graph() -> MetricGraph {
        // 4-cycle with unit edges.
        let vs = (0..4)
            .map(|i| Vertex {
                label: format!("v{i}"),
                coords: None,
            })
            .collect();
        MetricGraph::new(
            "sq",
            vs,
            vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn vertex_distances_on_cycle() {
        let g = square_graph();
        assert_eq!(
            g.distance(&GraphPoint::Vertex(0), &GraphPoint::Vertex(2)),
            rat_int(2)
        );
        assert_eq!(
            g.distance(&GraphPoint::Vertex(1), &GraphPoint::Vertex(0)),
            rat_int(1)
        );
    }

    #[test]
    fn interior_distance_wraps_cycle() {
        let g = square_graph();
        let p = GraphPoint::interior(0, rat(0.25));
        let q = GraphPoint::interior(3, rat(0.75));
        // Direct through vertex 0: 0.25 + 0.25 = 0.5.
        assert_eq!(g.distance(&p, &q), rat(0.5));
    }

    #[test]
    fn ball_merges_and_closes_vertices() {
        let g = square_graph();
        let ball = g.ball(&GraphPoint::Vertex(0), &rat(1.0));
        // Radius 1 from a corner covers the two incident edges entirely and
        // the far endpoints appear as degenerate intervals on far edges.
        assert!(g.subset(&g.ball(&GraphPoint::Vertex(0), &rat(0.5)), &ball));
        let whole = g.ball(&GraphPoint::Vertex(0), &rat_int(2));
        for iv in &whole.intervals {
            assert!(iv.lo.is_zero());
            assert_eq!(iv.hi, g.edge(iv.edge).len);
        }
    }

    #[test]
    fn sphere_on_cycle() {
        let g = square_graph();
        let s = g.sphere(&GraphPoint::Vertex(0), &rat(0.5));
        assert_eq!(s.len(), 2);
        let s = g.sphere(&GraphPoint::Vertex(0), &rat_int(2));
        // Antipodal vertex only.
        assert_eq!(s, vec![GraphPoint::Vertex(2)]);
    }

    #[test]
    fn diameter_of_cycle_counts_interior_points() {
        // On a 4-cycle of unit edges, antipodal interior points realize
        // distance 2 = half the total length.
        let g = square_graph();
        assert_eq!(g.diameter(), rat_int(2));
    }

    #[test]
    fn midpoint_realizes_half_distance() {
        let g = square_graph();
        let p = GraphPoint::interior(0, rat(0.5));
        let q = GraphPoint::interior(2, rat(0.5));
        let m = g.midpoint(&p, &q);
        let d = g.distance(&p, &q);
        assert_eq!(g.distance(&p, &m), rat_half(&d));
        assert_eq!(g.distance(&m, &q), rat_half(&d));
    }
}
