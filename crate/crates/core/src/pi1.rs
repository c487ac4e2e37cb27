//! Loops at the basepoint `v0[1]` and the free basis `x[i,j]`.
//!
//! The spanning tree is fixed: every boundary edge `e[0,j]`, `e[n,j]` plus
//! the first-sheet edges `e[i,1]` for `1 <= i <= n-1`. The tree path to
//! `v[i]` is `p_i = e[0,1] * e[1,1] * ... * e[i-1,1]`, so the non-tree edge
//! `e[i,j]` (`j >= 2`) contributes `p_i * e[i,j] * e[i,1]^-1 * p_i^-1`,
//! which is the loop `y[i,j]^-1 = (x[i,1] * ... * x[i,j-1])^-1`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::groupoid::{Edge, EdgePath, GroupoidFunctor, Step, Vertex};
use crate::params::Params;
use crate::words::{push_reduced, FreeAutomorphism, GeneratorSymbol, Letter, Word};

/// A reduced loop at [`Vertex::BASEPOINT`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasepointLoop(EdgePath);

impl BasepointLoop {
    pub fn new(path: EdgePath) -> Result<Self> {
        if path.start() != Vertex::BASEPOINT || path.end() != Vertex::BASEPOINT {
            return Err(Error::NotBasepointLoop {
                start: path.start().to_string(),
                end: path.end().to_string(),
            });
        }
        Ok(BasepointLoop(path))
    }

    pub fn path(&self) -> &EdgePath {
        &self.0
    }

    pub fn into_path(self) -> EdgePath {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpanningTree {
    params: Params,
}

impl SpanningTree {
    pub fn new(params: Params) -> Self {
        SpanningTree { params }
    }

    pub fn contains(&self, e: Edge) -> bool {
        e.level() == 0 || e.level() == self.params.n() || e.sheet() == 1
    }

    pub fn edges(&self) -> Vec<Edge> {
        Edge::all(&self.params)
            .into_iter()
            .filter(|&e| self.contains(e))
            .collect()
    }

    pub fn non_tree_edges(&self) -> Vec<Edge> {
        Edge::all(&self.params)
            .into_iter()
            .filter(|&e| !self.contains(e))
            .collect()
    }

    /// Whether the tree edges reach every vertex from the basepoint and
    /// number exactly one fewer than the vertices.
    pub fn is_spanning_tree(&self) -> bool {
        let params = &self.params;
        let vertices = Vertex::all(params);
        let edges = self.edges();
        if edges.len() + 1 != vertices.len() {
            return false;
        }
        let mut seen = vec![false; vertices.len()];
        seen[Vertex::BASEPOINT.index(params)] = true;
        let mut queue = VecDeque::from([Vertex::BASEPOINT]);
        while let Some(v) = queue.pop_front() {
            for e in &edges {
                let (s, t) = (e.source(params), e.target(params));
                let other = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !std::mem::replace(&mut seen[other.index(params)], true) {
                    queue.push_back(other);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

fn edge(params: &Params, level: usize, sheet: i64) -> Edge {
    Edge::new(params, level, sheet).expect("level checked by caller")
}

/// `p_i = e[0,1] * e[1,1] * ... * e[i-1,1]`, from `v0[1]` to `v[i]`.
pub fn base_path(params: Params, i: usize) -> Result<EdgePath> {
    params.check_gap("i", i)?;
    EdgePath::from_steps(
        params,
        Vertex::BASEPOINT,
        (0..i).map(|k| Step::forward(edge(&params, k, 1))),
    )
}

fn conjugated_by_base_path(params: Params, i: usize, middle: [Step; 2]) -> Result<BasepointLoop> {
    let p = base_path(params, i)?;
    let steps = p
        .steps()
        .iter()
        .copied()
        .chain(middle)
        .chain(p.inverse().steps().iter().copied())
        .collect::<Vec<_>>();
    BasepointLoop::new(EdgePath::from_steps(params, Vertex::BASEPOINT, steps)?)
}

/// `x[i,j] = p_i * e[i,j] * e[i,j+1]^-1 * p_i^-1`, `j` read modulo `d`.
pub fn loop_x(params: Params, i: usize, j: i64) -> Result<BasepointLoop> {
    params.check_gap("i", i)?;
    conjugated_by_base_path(
        params,
        i,
        [
            Step::forward(edge(&params, i, j)),
            Step::backward(edge(&params, i, j + 1)),
        ],
    )
}

/// `y[i,j] = p_i * e[i,1] * e[i,j]^-1 * p_i^-1`; `y[i,1]` is trivial.
pub fn loop_y(params: Params, i: usize, j: i64) -> Result<BasepointLoop> {
    params.check_gap("i", i)?;
    conjugated_by_base_path(
        params,
        i,
        [Step::forward(edge(&params, i, 1)), Step::backward(edge(&params, i, j))],
    )
}

/// Rewrites a loop in the free basis. Tree edges contribute nothing; a
/// non-tree edge `e[i,j]` traversed forwards contributes
/// `x[i,j-1]^-1 * ... * x[i,1]^-1`.
pub fn loop_to_word(lp: &BasepointLoop) -> Result<Word> {
    let path = lp.path();
    let params = *path.params();
    let tree = SpanningTree::new(params);
    let mut buf = Vec::new();
    for step in path.steps() {
        let e = step.edge;
        if tree.contains(e) {
            continue;
        }
        let symbols = (1..e.sheet()).map(|t| GeneratorSymbol::new(&params, e.level(), t).expect("non-tree edge"));
        if step.forward {
            for s in symbols.rev() {
                push_reduced(&mut buf, Letter::new(s, true));
            }
        } else {
            for s in symbols {
                push_reduced(&mut buf, Letter::new(s, false));
            }
        }
        params.check_budget(buf.len())?;
    }
    Word::reduce(params, buf)
}

/// Realises a word as a loop by substituting each `x[i,j]`.
pub fn word_to_loop(w: &Word) -> Result<BasepointLoop> {
    let params = *w.params();
    let mut path = EdgePath::empty(params, Vertex::BASEPOINT);
    for l in w.letters() {
        let piece = loop_x(params, l.symbol.i(), l.symbol.j() as i64)?.into_path();
        let piece = if l.inverse { piece.inverse() } else { piece };
        path = path.compose(&piece)?;
    }
    BasepointLoop::new(path)
}

/// The automorphism of `pi_1` induced by a functor fixing the basepoint:
/// `x[i,j] -> loop_to_word(F(x[i,j]))`.
pub fn functor_to_automorphism(f: &GroupoidFunctor) -> Result<FreeAutomorphism> {
    let params = *f.params();
    let moved = f.vertex(Vertex::BASEPOINT);
    if moved != Vertex::BASEPOINT {
        return Err(Error::BasepointMoved(moved.to_string()));
    }
    FreeAutomorphism::from_fn(params, |s| {
        let lp = loop_x(params, s.i(), s.j() as i64)?;
        let image = BasepointLoop::new(f.apply(lp.path())?)?;
        loop_to_word(&image)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{dehn_twist, lift_beta};

    fn p(d: usize, n: usize) -> Params {
        Params::new(d, n).unwrap()
    }

    #[test]
    fn base_paths() {
        let q = p(3, 4);
        assert_eq!(base_path(q, 1).unwrap().to_string(), "e[0,1]");
        assert_eq!(base_path(q, 2).unwrap().to_string(), "e[0,1]*e[1,1]");
        for i in 1..4 {
            let path = base_path(q, i).unwrap();
            assert_eq!(path.end(), Vertex::Interior(i));
            assert_eq!(path.len(), i);
        }
        assert!(base_path(q, 4).is_err());
    }

    #[test]
    fn basis_loops() {
        let q = p(3, 2);
        assert_eq!(
            loop_x(q, 1, 1).unwrap().path().to_string(),
            "e[0,1]*e[1,1]*e[1,2]^-1*e[0,1]^-1"
        );
        assert!(loop_y(q, 1, 1).unwrap().is_empty());
        let q = p(4, 3);
        for i in 1..3 {
            let mut product = EdgePath::empty(q, Vertex::BASEPOINT);
            for j in 1..4 {
                product = product.compose(loop_x(q, i, j).unwrap().path()).unwrap();
            }
            assert_eq!(loop_x(q, i, 4).unwrap().path(), &product.inverse());
        }
    }

    #[test]
    fn loops_to_words() {
        let q = p(3, 3);
        assert_eq!(loop_to_word(&loop_x(q, 2, 1).unwrap()).unwrap().to_string(), "x[2,1]");
        let q = p(5, 3);
        for i in 1..3 {
            for j in 1..=5 {
                let expected = (1..j).map(|t| format!("x[{i},{t}]")).collect::<Vec<_>>();
                let expected = if expected.is_empty() {
                    "1".to_string()
                } else {
                    expected.join("*")
                };
                assert_eq!(
                    loop_to_word(&loop_y(q, i, j as i64).unwrap()).unwrap().to_string(),
                    expected
                );
            }
        }
        let empty = BasepointLoop::new(EdgePath::empty(q, Vertex::BASEPOINT)).unwrap();
        assert!(loop_to_word(&empty).unwrap().is_empty());
    }

    #[test]
    fn word_loop_round_trip() {
        let q = p(3, 2);
        let w = Word::generator(q, 1, 1).unwrap();
        assert_eq!(word_to_loop(&w).unwrap(), loop_x(q, 1, 1).unwrap());
        assert!(word_to_loop(&Word::identity(q)).unwrap().is_empty());
        let w = Word::parse(q, "x[1,2]^-1*x[1,1]*x[1,2]").unwrap();
        assert_eq!(loop_to_word(&word_to_loop(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn non_closed_paths_are_rejected() {
        let q = p(3, 2);
        assert!(matches!(
            BasepointLoop::new(base_path(q, 1).unwrap()),
            Err(Error::NotBasepointLoop { .. })
        ));
    }

    #[test]
    fn basis_loops_are_nontrivial() {
        for d in 2..6 {
            for n in 2..6 {
                let q = p(d, n);
                let mut count = 0;
                for s in GeneratorSymbol::all(&q) {
                    let w = loop_to_word(&loop_x(q, s.i(), s.j() as i64).unwrap()).unwrap();
                    assert!(!w.is_empty());
                    count += 1;
                }
                assert_eq!(count, q.rank());
            }
        }
    }

    #[test]
    fn spanning_tree_shape() {
        for d in 2..6 {
            for n in 2..6 {
                let tree = SpanningTree::new(p(d, n));
                assert!(tree.is_spanning_tree());
                assert_eq!(tree.non_tree_edges().len(), (d - 1) * (n - 1));
                assert!(tree
                    .non_tree_edges()
                    .iter()
                    .all(|e| (1..n).contains(&e.level()) && e.sheet() >= 2));
            }
        }
    }

    #[test]
    fn functor_images() {
        let q = p(3, 2);
        let aut = functor_to_automorphism(&lift_beta(q, 1).unwrap()).unwrap();
        assert_eq!(aut.to_string(), "x[1,1] -> x[1,2]^-1\nx[1,2] -> x[1,2]*x[1,1]\n");
        assert!(functor_to_automorphism(&GroupoidFunctor::identity(q))
            .unwrap()
            .is_identity());
        let dehn = functor_to_automorphism(&dehn_twist(q, 1, 1).unwrap()).unwrap();
        assert!(!dehn.is_identity());
    }
}
