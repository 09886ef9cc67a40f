//! Vantage-point tree for nearest-neighbor queries under an arbitrary
//! metric, used by the net-based Hausdorff kernels.
//!
//! Only the triangle inequality is assumed, so the same structure serves the
//! Euclidean, taxicab, hyperbolic, graph and product metrics. Directed
//! Hausdorff sweeps additionally use an abort threshold: once any neighbor
//! within the current supremum is found, the query point cannot raise the
//! supremum and the search stops early.

use crate::point::Point;
use crate::spaces::ModelSpace;
use crate::Error;

pub struct VpTree<'a> {
    points: &'a [Point],
    nodes: Vec<Node>,
    root: Option<usize>,
}

struct Node {
    item: usize,
    radius: f64,
    inner: Option<usize>,
    outer: Option<usize>,
}

impl<'a> VpTree<'a> {
    pub fn build(space: &dyn ModelSpace, points: &'a [Point]) -> Result<Self, Error> {
        let mut idx: Vec<usize> = (0..points.len()).collect();
        let mut tree = VpTree {
            points,
            nodes: Vec::with_capacity(points.len()),
            root: None,
        };
        tree.root = tree.build_rec(space, &mut idx)?;
        Ok(tree)
    }

    fn build_rec(
        &mut self,
        space: &dyn ModelSpace,
        idx: &mut [usize],
    ) -> Result<Option<usize>, Error> {
        if idx.is_empty() {
            return Ok(None);
        }
        let pivot = idx[0];
        let rest = &mut idx[1..];
        if rest.is_empty() {
            self.nodes.push(Node {
                item: pivot,
                radius: 0.0,
                inner: None,
                outer: None,
            });
            return Ok(Some(self.nodes.len() - 1));
        }
        let mut dists: Vec<(f64, usize)> = Vec::with_capacity(rest.len());
        for &i in rest.iter() {
            dists.push((space.distance(&self.points[pivot], &self.points[i])?, i));
        }
        dists.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mid = dists.len() / 2;
        let radius = dists[mid].0;
        for (slot, (_, i)) in rest.iter_mut().zip(dists.iter()) {
            *slot = *i;
        }
        let (inner_idx, outer_idx) = rest.split_at_mut(mid);
        let node_pos = self.nodes.len();
        self.nodes.push(Node {
            item: pivot,
            radius,
            inner: None,
            outer: None,
        });
        let inner = self.build_rec(space, inner_idx)?;
        let outer = self.build_rec(space, outer_idx)?;
        self.nodes[node_pos].inner = inner;
        self.nodes[node_pos].outer = outer;
        Ok(Some(node_pos))
    }

    /// Exact nearest neighbor of `q` among the indexed points.
    pub fn nearest(&self, space: &dyn ModelSpace, q: &Point) -> Result<(f64, usize), Error> {
        let mut best = (f64::INFINITY, usize::MAX);
        self.search(
            space,
            q,
            self.root,
            &mut best,
            f64::NEG_INFINITY,
            &mut false,
        )?;
        Ok(best)
    }

    /// Nearest neighbor with early abort: returns `None` as soon as any
    /// point within `abort_leq` is encountered.
    pub fn nearest_with_abort(
        &self,
        space: &dyn ModelSpace,
        q: &Point,
        abort_leq: f64,
    ) -> Result<Option<(f64, usize)>, Error> {
        let mut best = (f64::INFINITY, usize::MAX);
        let mut aborted = false;
        self.search(space, q, self.root, &mut best, abort_leq, &mut aborted)?;
        Ok(if aborted { None } else { Some(best) })
    }

    fn search(
        &self,
        space: &dyn ModelSpace,
        q: &Point,
        node: Option<usize>,
        best: &mut (f64, usize),
        abort_leq: f64,
        aborted: &mut bool,
    ) -> Result<(), Error> {
        let Some(n) = node else { return Ok(()) };
        if *aborted {
            return Ok(());
        }
        let node = &self.nodes[n];
        let d = space.distance(q, &self.points[node.item])?;
        if d < best.0 || (d == best.0 && node.item < best.1) {
            *best = (d, node.item);
        }
        if best.0 <= abort_leq {
            *aborted = true;
            return Ok(());
        }
        let (first, second, gap) = if d < node.radius {
            (node.inner, node.outer, node.radius - d)
        } else {
            (node.outer, node.inner, d - node.radius)
        };
        self.search(space, q, first, best, abort_leq, aborted)?;
        if !*aborted && gap <= best.0 {
            self.search(space, q, second, best, abort_leq, aborted)?;
        }
        Ok(())
    }

    /// Directed supremum `sup_q min_tree d(q, .)` over `queries`, exact over
    /// the given finite sets. Returns `(sup, argmax query index, nearest
    /// tree index for the argmax)`.
    pub fn directed_sup(
        &self,
        space: &dyn ModelSpace,
        queries: &[Point],
    ) -> Result<(f64, usize, usize), Error> {
        let mut sup = -1.0f64;
        let mut arg = 0usize;
        for (i, q) in queries.iter().enumerate() {
            match self.nearest_with_abort(space, q, sup)? {
                Some((d, _)) if d > sup => {
                    sup = d;
                    arg = i;
                }
                _ => {}
            }
        }
        let (d, j) = self.nearest(space, &queries[arg])?;
        Ok((d.max(0.0), arg, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::catalog::build_model;
    use crate::spaces::ModelParams;

    #[test]
    fn vp_tree_agrees_with_brute_force() {
        let space = build_model(
            "euclidean_rn",
            &ModelParams {
                dim: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        let pts: Vec<Point> = (0..60)
            .map(|i| {
                let t = i as f64 * 0.7;
                Point::euclid(&[t.sin() * 3.0, (2.0 * t).cos() * 2.0])
            })
            .collect();
        let tree = VpTree::build(space.as_ref(), &pts).unwrap();
        let queries: Vec<Point> = (0..25)
            .map(|i| Point::euclid(&[i as f64 * 0.31 - 3.0, 1.5 - i as f64 * 0.2]))
            .collect();
        for q in &queries {
            let (d, _) = tree.nearest(space.as_ref(), q).unwrap();
            let brute = pts
                .iter()
                .map(|p| space.distance(q, p).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!((d - brute).abs() < 1e-12);
        }
        // Directed sup matches brute force.
        let (sup, _, _) = tree.directed_sup(space.as_ref(), &queries).unwrap();
        let brute_sup = queries
            .iter()
            .map(|q| {
                pts.iter()
                    .map(|p| space.distance(q, p).unwrap())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max);
        assert!((sup - brute_sup).abs() < 1e-12);
    }
}
