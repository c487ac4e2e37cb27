//! The covering groupoid: a directed graph modelling the `d`-fold cyclic
//! branched cover of the disk with `n` branch points.
//!
//! Vertices are the branch points `v[1]..v[n]` plus `d` copies of each
//! boundary point, `v0[j]` and `vN1[j]`. Every gap `i = 0..=n` carries `d`
//! parallel edges `e[i,1]..e[i,d]`; sheet indices are read modulo `d`.
//! Paths are elements of the free groupoid on this graph and are kept
//! freely reduced.

mod base;
mod functor;

pub use base::{base_half_twist, project, verify_lift, BaseFunctor, BasePath, BaseStep};
pub use functor::{dehn_twist, inverse_lift_beta, lift_beta, GroupoidFunctor};

use std::fmt;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::words::parse_indexed_token;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// Boundary vertex `0_(j)`.
    Left(usize),
    /// Branch point `i`, `1 <= i <= n`.
    Interior(usize),
    /// Boundary vertex `(n+1)_(j)`.
    Right(usize),
}

impl Vertex {
    /// The basepoint `0_(1)` of every loop.
    pub const BASEPOINT: Vertex = Vertex::Left(1);

    pub fn is_boundary(&self) -> bool {
        !matches!(self, Vertex::Interior(_))
    }

    pub(crate) fn index(&self, params: &Params) -> usize {
        let (d, n) = (params.d(), params.n());
        match *self {
            Vertex::Left(j) => j - 1,
            Vertex::Interior(i) => d + i - 1,
            Vertex::Right(j) => d + n + j - 1,
        }
    }

    pub(crate) fn is_valid_for(&self, params: &Params) -> bool {
        match *self {
            Vertex::Left(j) | Vertex::Right(j) => (1..=params.d()).contains(&j),
            Vertex::Interior(i) => (1..=params.n()).contains(&i),
        }
    }

    /// All `2d + n` vertices, in index order.
    pub fn all(params: &Params) -> Vec<Vertex> {
        let (d, n) = (params.d(), params.n());
        (1..=d)
            .map(Vertex::Left)
            .chain((1..=n).map(Vertex::Interior))
            .chain((1..=d).map(Vertex::Right))
            .collect()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Left(j) => write!(f, "v0[{j}]"),
            Vertex::Interior(i) => write!(f, "v[{i}]"),
            Vertex::Right(j) => write!(f, "vN1[{j}]"),
        }
    }
}

/// Edge `e[i,j]`, level `0 <= i <= n`, sheet `1 <= j <= d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    level: usize,
    sheet: usize,
}

impl Edge {
    /// The sheet is reduced modulo `d`.
    pub fn new(params: &Params, level: usize, sheet: i64) -> Result<Self> {
        if level > params.n() {
            return Err(Error::range("level", level as i64, 0, params.n() as i64));
        }
        Ok(Edge {
            level,
            sheet: params.wrap_sheet(sheet),
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn sheet(&self) -> usize {
        self.sheet
    }

    pub fn source(&self, _params: &Params) -> Vertex {
        if self.level == 0 {
            Vertex::Left(self.sheet)
        } else {
            Vertex::Interior(self.level)
        }
    }

    pub fn target(&self, params: &Params) -> Vertex {
        if self.level == params.n() {
            Vertex::Right(self.sheet)
        } else {
            Vertex::Interior(self.level + 1)
        }
    }

    pub(crate) fn index(&self, params: &Params) -> usize {
        self.level * params.d() + self.sheet - 1
    }

    /// All `(n+1) d` edges in `(i, j)` order.
    pub fn all(params: &Params) -> Vec<Edge> {
        let d = params.d();
        (0..=params.n())
            .flat_map(|level| (1..=d).map(move |sheet| Edge { level, sheet }))
            .collect()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.level, self.sheet)
    }
}

/// One edge traversed forwards (source to target) or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: Edge,
    pub forward: bool,
}

impl Step {
    pub fn forward(edge: Edge) -> Self {
        Step { edge, forward: true }
    }

    pub fn backward(edge: Edge) -> Self {
        Step { edge, forward: false }
    }

    pub fn inv(self) -> Self {
        Step {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    pub fn begin(&self, params: &Params) -> Vertex {
        if self.forward {
            self.edge.source(params)
        } else {
            self.edge.target(params)
        }
    }

    pub fn end(&self, params: &Params) -> Vertex {
        if self.forward {
            self.edge.target(params)
        } else {
            self.edge.source(params)
        }
    }

    fn cancels(&self, other: &Step) -> bool {
        self.edge == other.edge && self.forward != other.forward
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.forward {
            write!(f, "{}", self.edge)
        } else {
            write!(f, "{}^-1", self.edge)
        }
    }
}

pub(crate) fn push_step(buf: &mut Vec<Step>, step: Step) {
    if buf.last().is_some_and(|last| last.cancels(&step)) {
        buf.pop();
    } else {
        buf.push(step);
    }
}

/// An endpoint-compatible, freely reduced edge path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    params: Params,
    start: Vertex,
    steps: Vec<Step>,
}

impl EdgePath {
    pub fn empty(params: Params, at: Vertex) -> Self {
        EdgePath {
            params,
            start: at,
            steps: Vec::new(),
        }
    }

    pub fn edge(params: Params, edge: Edge) -> Self {
        EdgePath {
            params,
            start: edge.source(&params),
            steps: vec![Step::forward(edge)],
        }
    }

    /// Checks that consecutive steps meet and freely reduces.
    pub fn from_steps(params: Params, start: Vertex, steps: impl IntoIterator<Item = Step>) -> Result<Self> {
        if !start.is_valid_for(&params) {
            return Err(Error::parse(&start.to_string(), "vertex out of range"));
        }
        let mut at = start;
        let mut buf = Vec::new();
        for step in steps {
            if step.edge.level > params.n() {
                return Err(Error::range("level", step.edge.level as i64, 0, params.n() as i64));
            }
            if step.edge.sheet > params.d() {
                return Err(Error::range("sheet", step.edge.sheet as i64, 1, params.d() as i64));
            }
            let begin = step.begin(&params);
            if begin != at {
                return Err(Error::EndpointMismatch {
                    step: step.to_string(),
                    expected: at.to_string(),
                    found: begin.to_string(),
                });
            }
            at = step.end(&params);
            push_step(&mut buf, step);
        }
        params.check_budget(buf.len())?;
        Ok(EdgePath {
            params,
            start,
            steps: buf,
        })
    }

    /// Nonempty steps only; the start is the first step's origin.
    pub(crate) fn from_nonempty_steps(params: Params, steps: Vec<Step>) -> Result<Self> {
        let start = steps[0].begin(&params);
        Self::from_steps(params, start, steps)
    }

    pub(crate) fn from_reduced_unchecked(params: Params, start: Vertex, steps: Vec<Step>) -> Self {
        EdgePath { params, start, steps }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.steps.last().map_or(self.start, |s| s.end(&self.params))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `self` followed by `then`; requires `self.end() == then.start()`.
    pub fn compose(&self, then: &EdgePath) -> Result<EdgePath> {
        self.params.ensure_same(&then.params)?;
        if self.end() != then.start {
            return Err(Error::EndpointMismatch {
                step: then.to_string(),
                expected: self.end().to_string(),
                found: then.start.to_string(),
            });
        }
        let mut buf = self.steps.clone();
        for &s in &then.steps {
            push_step(&mut buf, s);
        }
        self.params.check_budget(buf.len())?;
        Ok(EdgePath {
            params: self.params,
            start: self.start,
            steps: buf,
        })
    }

    pub fn inverse(&self) -> EdgePath {
        EdgePath {
            params: self.params,
            start: self.end(),
            steps: self.steps.iter().rev().map(|s| s.inv()).collect(),
        }
    }

    /// Parses a nonempty `e[i,j]` path; use [`EdgePath::parse_at`] for the
    /// empty path `1`.
    pub fn parse(params: Params, text: &str) -> Result<EdgePath> {
        let steps = parse_steps(params, text)?;
        if steps.is_empty() {
            return Err(Error::parse(text, "the empty path needs an explicit start vertex"));
        }
        Self::from_nonempty_steps(params, steps)
    }

    pub fn parse_at(params: Params, start: Vertex, text: &str) -> Result<EdgePath> {
        Self::from_steps(params, start, parse_steps(params, text)?)
    }
}

fn parse_steps(params: Params, text: &str) -> Result<Vec<Step>> {
    let trimmed = text.trim();
    if trimmed == "1" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split('*')
        .map(|token| {
            let (level, sheet, inverse) = parse_indexed_token(token, "e", text)?;
            let level = usize::try_from(level).map_err(|_| Error::range("level", level, 0, params.n() as i64))?;
            let edge = Edge::new(&params, level, sheet)?;
            Ok(Step {
                edge,
                forward: !inverse,
            })
        })
        .collect()
}

impl fmt::Display for EdgePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
