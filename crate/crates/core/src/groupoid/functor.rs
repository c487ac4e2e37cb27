use std::fmt;

use super::{push_step, Edge, EdgePath, Step, Vertex};
use crate::error::{Error, Result};
use crate::params::Params;

/// A self-functor of the covering groupoid: a vertex permutation plus an
/// image path for every generating edge.
///
/// Construction checks that the vertex map is a permutation fixing every
/// boundary vertex, and that each edge image runs from the image of the
/// edge's source to the image of its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFunctor {
    params: Params,
    vertex_map: Vec<Vertex>,
    edge_map: Vec<EdgePath>,
}

impl GroupoidFunctor {
    pub fn new(
        params: Params,
        vertex_map: impl Fn(Vertex) -> Vertex,
        mut edge_map: impl FnMut(Edge) -> Result<EdgePath>,
    ) -> Result<Self> {
        let vertices = Vertex::all(&params);
        let mut hit = vec![false; vertices.len()];
        let mut images = Vec::with_capacity(vertices.len());
        for &v in &vertices {
            let w = vertex_map(v);
            if !w.is_valid_for(&params) || std::mem::replace(&mut hit[w.index(&params)], true) {
                return Err(Error::NotPermutation);
            }
            if v.is_boundary() && w != v {
                return Err(Error::BoundaryMoved(v.to_string()));
            }
            images.push(w);
        }

        let mut paths = Vec::new();
        for e in Edge::all(&params) {
            let path = edge_map(e)?;
            params.ensure_same(path.params())?;
            let from = images[e.source(&params).index(&params)];
            let to = images[e.target(&params).index(&params)];
            if path.start() != from || path.end() != to {
                return Err(Error::InconsistentFunctor {
                    edge: e.to_string(),
                    expected: format!("{from} -> {to}"),
                    found: format!("{} -> {}", path.start(), path.end()),
                });
            }
            paths.push(path);
        }
        Ok(GroupoidFunctor {
            params,
            vertex_map: images,
            edge_map: paths,
        })
    }

    pub fn identity(params: Params) -> Self {
        GroupoidFunctor {
            params,
            vertex_map: Vertex::all(&params),
            edge_map: Edge::all(&params)
                .into_iter()
                .map(|e| EdgePath::edge(params, e))
                .collect(),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn vertex(&self, v: Vertex) -> Vertex {
        self.vertex_map[v.index(&self.params)]
    }

    pub fn edge(&self, e: Edge) -> &EdgePath {
        &self.edge_map[e.index(&self.params)]
    }

    /// `(edge, image)` pairs in `(i, j)` order.
    pub fn edge_images(&self) -> impl Iterator<Item = (Edge, &EdgePath)> {
        Edge::all(&self.params).into_iter().zip(self.edge_map.iter())
    }

    /// Vertices not fixed by the functor, with their images.
    pub fn moved_vertices(&self) -> Vec<(Vertex, Vertex)> {
        Vertex::all(&self.params)
            .into_iter()
            .zip(self.vertex_map.iter().copied())
            .filter(|(v, w)| v != w)
            .collect()
    }

    pub fn apply(&self, path: &EdgePath) -> Result<EdgePath> {
        self.params.ensure_same(path.params())?;
        let mut buf = Vec::with_capacity(path.len());
        for step in path.steps() {
            let image = self.edge(step.edge).steps();
            if step.forward {
                for &s in image {
                    push_step(&mut buf, s);
                }
            } else {
                for &s in image.iter().rev() {
                    push_step(&mut buf, s.inv());
                }
            }
            self.params.check_budget(buf.len())?;
        }
        Ok(EdgePath::from_reduced_unchecked(
            self.params,
            self.vertex(path.start()),
            buf,
        ))
    }

    /// `self` first, then `then`.
    pub fn compose(&self, then: &GroupoidFunctor) -> Result<GroupoidFunctor> {
        self.params.ensure_same(&then.params)?;
        let vertex_map = self.vertex_map.iter().map(|&v| then.vertex(v)).collect();
        let edge_map = self
            .edge_map
            .iter()
            .map(|p| then.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupoidFunctor {
            params: self.params,
            vertex_map,
            edge_map,
        })
    }

    /// Describes the first vertex or edge where the two functors disagree.
    pub fn first_difference(&self, other: &GroupoidFunctor) -> Option<String> {
        if self.params != other.params {
            return Some("parameters".to_string());
        }
        for v in Vertex::all(&self.params) {
            if self.vertex(v) != other.vertex(v) {
                return Some(format!("{v}: {} vs {}", self.vertex(v), other.vertex(v)));
            }
        }
        self.edge_images()
            .zip(other.edge_map.iter())
            .find(|((_, a), b)| a != b)
            .map(|((e, a), b)| format!("{e}: {a} vs {b}"))
    }
}

impl fmt::Display for GroupoidFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, w) in self.moved_vertices() {
            writeln!(f, "{v} -> {w}")?;
        }
        for (e, p) in self.edge_images() {
            writeln!(f, "{e} -> {p}")?;
        }
        Ok(())
    }
}

/// Builds a nonempty path from `(level, sheet, forward)` triples.
fn path(params: &Params, steps: &[(usize, i64, bool)]) -> Result<EdgePath> {
    let steps = steps
        .iter()
        .map(|&(level, sheet, forward)| {
            Ok(Step {
                edge: Edge::new(params, level, sheet)?,
                forward,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    EdgePath::from_nonempty_steps(*params, steps)
}

fn swap_interior(i: usize) -> impl Fn(Vertex) -> Vertex {
    move |v| match v {
        Vertex::Interior(k) if k == i => Vertex::Interior(i + 1),
        Vertex::Interior(k) if k == i + 1 => Vertex::Interior(i),
        other => other,
    }
}

const F: bool = true;
const B: bool = false;

/// Lift of the half twist exchanging branch points `i` and `i+1`:
///
/// ```text
/// e[i-1,j] -> e[i-1,j] * e[i,j+1]
/// e[i,j]   -> e[i,j+1]^-1
/// e[i+1,j] -> e[i,j] * e[i+1,j]
/// ```
pub fn lift_beta(params: Params, i: usize) -> Result<GroupoidFunctor> {
    params.check_gap("i", i)?;
    GroupoidFunctor::new(params, swap_interior(i), |e| {
        let (k, j) = (e.level(), e.sheet() as i64);
        if k + 1 == i {
            path(&params, &[(k, j, F), (i, j + 1, F)])
        } else if k == i {
            path(&params, &[(i, j + 1, B)])
        } else if k == i + 1 {
            path(&params, &[(i, j, F), (k, j, F)])
        } else {
            Ok(EdgePath::edge(params, e))
        }
    })
}

/// Lift of the inverse half twist. Checked against [`lift_beta`] on both
/// sides before it is returned.
pub fn inverse_lift_beta(params: Params, i: usize) -> Result<GroupoidFunctor> {
    params.check_gap("i", i)?;
    let inverse = GroupoidFunctor::new(params, swap_interior(i), |e| {
        let (k, j) = (e.level(), e.sheet() as i64);
        if k + 1 == i {
            path(&params, &[(k, j, F), (i, j, F)])
        } else if k == i {
            path(&params, &[(i, j - 1, B)])
        } else if k == i + 1 {
            path(&params, &[(i, j - 1, F), (k, j, F)])
        } else {
            Ok(EdgePath::edge(params, e))
        }
    })?;
    let forward = lift_beta(params, i)?;
    let id = GroupoidFunctor::identity(params);
    for (a, b) in [(&forward, &inverse), (&inverse, &forward)] {
        let composite = a.compose(b)?;
        if let Some(e) = Edge::all(&params)
            .into_iter()
            .find(|&e| composite.edge(e) != id.edge(e))
        {
            return Err(Error::InverseCheck { i, edge: e.to_string() });
        }
    }
    Ok(inverse)
}

/// Action of the Dehn twist along the loop `x[i,j]` on the groupoid
/// (`j` read modulo `d`). It exchanges `v[i]` and `v[i+1]`, the only vertex
/// map under which the edge images below are endpoint-consistent.
///
/// ```text
/// e[i-1,j]   -> e[i-1,j] * e[i,j+1]
/// e[i-1,k]   -> e[i-1,k] * e[i,j]                (k != j)
/// e[i,j]     -> e[i,j+1]^-1
/// e[i,j+1]   -> e[i,j]^-1
/// e[i,k]     -> e[i,j]^-1 * e[i,k] * e[i,j]^-1   (k != j, j+1)
/// e[i+1,j+1] -> e[i,j+1] * e[i+1,j+1]
/// e[i+1,k]   -> e[i,j] * e[i+1,k]                (k != j+1)
/// ```
pub fn dehn_twist(params: Params, i: usize, j: i64) -> Result<GroupoidFunctor> {
    params.check_gap("i", i)?;
    let j = params.wrap_sheet(j);
    let next = params.wrap_sheet(j as i64 + 1);
    let (j, next) = (j as i64, next as i64);
    GroupoidFunctor::new(params, swap_interior(i), |e| {
        let (k, l) = (e.level(), e.sheet() as i64);
        if k + 1 == i {
            let partner = if l == j { next } else { j };
            path(&params, &[(k, l, F), (i, partner, F)])
        } else if k == i {
            if l == j {
                path(&params, &[(i, next, B)])
            } else if l == next {
                path(&params, &[(i, j, B)])
            } else {
                path(&params, &[(i, j, B), (i, l, F), (i, j, B)])
            }
        } else if k == i + 1 {
            let partner = if l == next { next } else { j };
            path(&params, &[(i, partner, F), (k, l, F)])
        } else {
            Ok(EdgePath::edge(params, e))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, n: usize) -> Params {
        Params::new(d, n).unwrap()
    }

    fn image(f: &GroupoidFunctor, i: usize, j: i64) -> String {
        f.edge(Edge::new(f.params(), i, j).unwrap()).to_string()
    }

    #[test]
    fn lift_beta_images() {
        let f = lift_beta(p(3, 3), 1).unwrap();
        assert_eq!(image(&f, 1, 1), "e[1,2]^-1");
        assert_eq!(image(&f, 3, 2), "e[3,2]");
        assert_eq!(image(&f, 0, 3), "e[0,3]*e[1,1]");
        assert_eq!(image(&f, 2, 2), "e[1,2]*e[2,2]");
        assert_eq!(f.vertex(Vertex::Interior(1)), Vertex::Interior(2));
        assert_eq!(f.vertex(Vertex::Interior(3)), Vertex::Interior(3));

        let f = lift_beta(p(4, 2), 1).unwrap();
        assert_eq!(image(&f, 0, 4), "e[0,4]*e[1,1]");
    }

    #[test]
    fn lift_beta_rejects_bad_index() {
        assert!(matches!(
            lift_beta(p(3, 3), 0),
            Err(Error::OutOfRange { name: "i", .. })
        ));
        assert!(matches!(
            lift_beta(p(3, 3), 3),
            Err(Error::OutOfRange { name: "i", .. })
        ));
        assert!(dehn_twist(p(3, 3), 3, 1).is_err());
        assert!(inverse_lift_beta(p(3, 3), 4).is_err());
    }

    #[test]
    fn dehn_twist_images() {
        let f = dehn_twist(p(3, 2), 1, 2).unwrap();
        assert_eq!(image(&f, 1, 2), "e[1,3]^-1");
        assert_eq!(image(&f, 1, 3), "e[1,2]^-1");
        assert_eq!(image(&f, 1, 1), "e[1,2]^-1*e[1,1]*e[1,2]^-1");
        let f = dehn_twist(p(3, 3), 1, 2).unwrap();
        assert_eq!(image(&f, 2, 3), "e[1,3]*e[2,3]");
        assert_eq!(image(&f, 2, 1), "e[1,2]*e[2,1]");
        assert_eq!(image(&f, 0, 2), "e[0,2]*e[1,3]");
        assert_eq!(image(&f, 0, 1), "e[0,1]*e[1,2]");
    }

    #[test]
    fn two_fold_dehn_twist_is_the_lift() {
        for n in 2..6 {
            let q = p(2, n);
            for i in 1..n {
                assert_eq!(dehn_twist(q, i, 2).unwrap(), lift_beta(q, i).unwrap());
            }
        }
    }

    #[test]
    fn inconsistent_functor_is_rejected() {
        let q = p(3, 2);
        let err = GroupoidFunctor::new(
            q,
            |v| v,
            |e| {
                if e == Edge::new(&q, 1, 1).unwrap() {
                    Ok(EdgePath::edge(q, Edge::new(&q, 0, 1).unwrap()))
                } else {
                    Ok(EdgePath::edge(q, e))
                }
            },
        );
        assert!(matches!(err, Err(Error::InconsistentFunctor { .. })));
        let err = GroupoidFunctor::new(q, |_| Vertex::Left(1), |e| Ok(EdgePath::edge(q, e)));
        assert!(matches!(err, Err(Error::NotPermutation)));
        let err = GroupoidFunctor::new(
            q,
            |v| match v {
                Vertex::Left(1) => Vertex::Left(2),
                Vertex::Left(2) => Vertex::Left(1),
                o => o,
            },
            |e| Ok(EdgePath::edge(q, e)),
        );
        assert!(matches!(err, Err(Error::BoundaryMoved(_))));
    }

    #[test]
    fn apply_expands_edgewise() {
        let q = p(3, 3);
        let f = lift_beta(q, 1).unwrap();
        let path = EdgePath::parse(q, "e[0,1]*e[1,1]").unwrap();
        // e[0,1] -> e[0,1]*e[1,2], e[1,1] -> e[1,2]^-1; the e[1,2] pair cancels.
        let img = f.apply(&path).unwrap();
        assert_eq!(img.to_string(), "e[0,1]");
        assert_eq!(img.start(), Vertex::Left(1));
        assert_eq!(img.end(), Vertex::Interior(1));
        let empty = EdgePath::empty(q, Vertex::Interior(1));
        assert_eq!(f.apply(&empty).unwrap(), EdgePath::empty(q, Vertex::Interior(2)));
        let id = GroupoidFunctor::identity(q);
        assert_eq!(id.apply(&path).unwrap(), path);
    }

    #[test]
    fn braid_triple_matches_hand_computation() {
        let q = p(4, 5);
        let i = 2;
        let a = lift_beta(q, i).unwrap();
        let b = lift_beta(q, i + 1).unwrap();
        let aba = a.compose(&b).unwrap().compose(&a).unwrap();
        for j in 1..=4 {
            assert_eq!(image(&aba, i + 2, j), format!("e[2,{j}]*e[3,{j}]*e[4,{j}]"));
            let j2 = q.wrap_sheet(j + 2);
            assert_eq!(image(&aba, i, j), format!("e[3,{j2}]^-1"));
        }
        assert_eq!(a.compose(&GroupoidFunctor::identity(q)).unwrap(), a);
    }

    #[test]
    fn inverse_lift_composes_to_identity() {
        let q = p(3, 3);
        let f = lift_beta(q, 1).unwrap();
        let g = inverse_lift_beta(q, 1).unwrap();
        let id = GroupoidFunctor::identity(q);
        assert_eq!(f.compose(&g).unwrap(), id);
        assert_eq!(g.compose(&f).unwrap(), id);
        assert_eq!(image(&g, 3, 1), "e[3,1]");
    }
}
