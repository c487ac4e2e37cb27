//! The base disk as a groupoid: vertices `0..=n+1`, one edge `e[i]` from
//! `i` to `i+1` for every gap `i = 0..=n`.

use std::fmt;

use super::{lift_beta, EdgePath, Vertex};
use crate::error::{Error, Result};
use crate::params::Params;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseStep {
    pub level: usize,
    pub forward: bool,
}

impl BaseStep {
    fn inv(self) -> Self {
        BaseStep {
            level: self.level,
            forward: !self.forward,
        }
    }

    fn end(&self) -> usize {
        if self.forward {
            self.level + 1
        } else {
            self.level
        }
    }
}

fn push(buf: &mut Vec<BaseStep>, step: BaseStep) {
    if buf
        .last()
        .is_some_and(|l| l.level == step.level && l.forward != step.forward)
    {
        buf.pop();
    } else {
        buf.push(step);
    }
}

/// Freely reduced path in the base disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePath {
    pub start: usize,
    steps: Vec<BaseStep>,
}

impl BasePath {
    pub fn new(start: usize, steps: impl IntoIterator<Item = BaseStep>) -> Self {
        let mut buf = Vec::new();
        for s in steps {
            push(&mut buf, s);
        }
        BasePath { start, steps: buf }
    }

    pub fn steps(&self) -> &[BaseStep] {
        &self.steps
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, BaseStep::end)
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for BasePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("1");
        }
        let tokens: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                if s.forward {
                    format!("e[{}]", s.level)
                } else {
                    format!("e[{}]^-1", s.level)
                }
            })
            .collect();
        f.write_str(&tokens.join("*"))
    }
}

/// A self-functor of the base disk groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFunctor {
    n: usize,
    vertex_map: Vec<usize>,
    edge_map: Vec<BasePath>,
}

impl BaseFunctor {
    pub fn vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn edge(&self, level: usize) -> &BasePath {
        &self.edge_map[level]
    }

    pub fn apply(&self, path: &BasePath) -> BasePath {
        let mut buf = Vec::new();
        for s in path.steps() {
            let img = self.edge_map[s.level].steps();
            if s.forward {
                img.iter().for_each(|&t| push(&mut buf, t));
            } else {
                img.iter().rev().for_each(|&t| push(&mut buf, t.inv()));
            }
        }
        BasePath {
            start: self.vertex(path.start),
            steps: buf,
        }
    }

    pub fn points(&self) -> usize {
        self.n
    }
}

/// The half twist `beta_i` of the disk: swaps `i` and `i+1`,
/// `e[i-1] -> e[i-1]*e[i]`, `e[i] -> e[i]^-1`, `e[i+1] -> e[i]*e[i+1]`.
pub fn base_half_twist(n: usize, i: usize) -> Result<BaseFunctor> {
    if !(1..n).contains(&i) {
        return Err(Error::range("i", i as i64, 1, n as i64 - 1));
    }
    let fwd = |level| BaseStep { level, forward: true };
    let vertex_map = (0..=n + 1)
        .map(|v| match v {
            v if v == i => i + 1,
            v if v == i + 1 => i,
            v => v,
        })
        .collect();
    let edge_map = (0..=n)
        .map(|k| {
            if k + 1 == i {
                BasePath::new(k, [fwd(k), fwd(i)])
            } else if k == i {
                BasePath::new(i + 1, [fwd(i).inv()])
            } else if k == i + 1 {
                BasePath::new(i, [fwd(i), fwd(k)])
            } else {
                BasePath::new(k, [fwd(k)])
            }
        })
        .collect();
    Ok(BaseFunctor {
        n,
        vertex_map,
        edge_map,
    })
}

fn project_vertex(params: &Params, v: Vertex) -> usize {
    match v {
        Vertex::Left(_) => 0,
        Vertex::Interior(i) => i,
        Vertex::Right(_) => params.n() + 1,
    }
}

/// Forgets sheets: `e[i,j] -> e[i]`, boundary copies collapse.
pub fn project(path: &EdgePath) -> BasePath {
    let params = path.params();
    BasePath::new(
        project_vertex(params, path.start()),
        path.steps().iter().map(|s| BaseStep {
            level: s.edge.level(),
            forward: s.forward,
        }),
    )
}

/// Whether `project ∘ lift_beta(i) = base_half_twist(i) ∘ project` on every
/// vertex and generating edge.
pub fn verify_lift(params: Params, i: usize) -> Result<bool> {
    let lift = lift_beta(params, i)?;
    let base = base_half_twist(params.n(), i)?;
    for v in Vertex::all(&params) {
        if project_vertex(&params, lift.vertex(v)) != base.vertex(project_vertex(&params, v)) {
            return Ok(false);
        }
    }
    for (e, img) in lift.edge_images() {
        let down = project(&EdgePath::edge(params, e));
        if project(img) != base.apply(&down) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_twist_images() {
        let b = base_half_twist(4, 2).unwrap();
        assert_eq!(b.edge(2).to_string(), "e[2]^-1");
        assert_eq!(b.edge(1).to_string(), "e[1]*e[2]");
        assert_eq!(b.edge(3).to_string(), "e[2]*e[3]");
        assert_eq!(b.edge(4).to_string(), "e[4]");
        assert_eq!(b.vertex(2), 3);
        assert!(base_half_twist(4, 4).is_err());
    }

    #[test]
    fn projection_collapses_sheets() {
        let q = Params::new(3, 2).unwrap();
        let path = EdgePath::parse(q, "e[1,1]*e[1,2]^-1").unwrap();
        let down = project(&path);
        assert!(down.is_empty());
        assert_eq!(down.start, 1);
        let path = EdgePath::parse(q, "e[0,2]*e[1,3]*e[2,1]").unwrap();
        assert_eq!(project(&path).to_string(), "e[0]*e[1]*e[2]");
        assert_eq!(project(&path).end(), 3);
    }

    #[test]
    fn lift_covers_half_twist() {
        assert!(verify_lift(Params::new(3, 4).unwrap(), 2).unwrap());
    }
}
