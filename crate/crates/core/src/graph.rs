//! Simple undirected graphs and the graph families with fixed vertex conventions.
//!
//! Vertices are indexed `0..v`. Family generators pin the 1-based names used in
//! the literature to indices:
//!
//! | family        | indices                                                        |
//! |---------------|----------------------------------------------------------------|
//! | cycle `C_n`   | `x_i` at `i - 1`                                               |
//! | sun `S_n`     | rim `x_i` at `i - 1`, leaf `y_i` at `n + i - 1`                |
//! | prism         | first cycle `x_i` at `i - 1`, second cycle `y_i` at `n + i - 1` |
//! | complete      | `x_i` at `i - 1`                                               |
//! | wheel / fan   | center `x_0` at 0, rim or path `x_i` at `i`                    |
//! | friendship    | center `x_0` at 0, triangle `i` is `{0, 2i - 1, 2i}`           |
//! | multipartite  | parts occupy consecutive index ranges in the given order       |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named graph family together with its size parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Cycle(usize),
    Sun(usize),
    Prism(usize),
    Complete(usize),
    Wheel(usize),
    Fan(usize),
    Friendship(usize),
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::Sun(_) => "sun",
            Family::Prism(_) => "prism",
            Family::Complete(_) => "complete",
            Family::Wheel(_) => "wheel",
            Family::Fan(_) => "fan",
            Family::Friendship(_) => "friendship",
            Family::CompleteMultipartite(_) => "multipartite",
        }
    }

    /// Builds the graph. Fails when the parameter is below the family minimum.
    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n)
            | Family::Sun(n)
            | Family::Prism(n)
            | Family::Complete(n)
            | Family::Wheel(n)
            | Family::Fan(n)
            | Family::Friendship(n) => write!(f, "{}:{}", self.name(), n),
            Family::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "{}:{}", self.name(), parts.join(","))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:n`, e.g. `cycle:7`, or `multipartite:2,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("expected FAMILY:N, got {s:?}")))?;
        Family::from_parts(name, param)
    }
}

impl Family {
    /// Parses a family from its name and parameter text (`"fan"`, `"5"`).
    pub fn from_parts(name: &str, param: &str) -> Result<Self> {
        let int = |t: &str| -> Result<usize> {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("not a size: {t:?}")))
        };
        Ok(match name.trim().to_ascii_lowercase().as_str() {
            "cycle" => Family::Cycle(int(param)?),
            "sun" => Family::Sun(int(param)?),
            "prism" => Family::Prism(int(param)?),
            "complete" => Family::Complete(int(param)?),
            "wheel" => Family::Wheel(int(param)?),
            "fan" => Family::Fan(int(param)?),
            "friendship" => Family::Friendship(int(param)?),
            "multipartite" => {
                Family::CompleteMultipartite(param.split(',').map(int).collect::<Result<Vec<_>>>()?)
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency is kept both as bitset rows (constant-time membership) and as a
/// sorted edge list.
#[derive(Debug, Clone)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(usize, usize)>,
    family: Option<Family>,
}

impl PartialEq for Graph {
    /// Structural equality; family metadata is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `order` vertices. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let words = order.div_ceil(64);
        let mut g = Graph {
            order,
            words,
            rows: vec![0; order * words],
            edges: Vec::new(),
            family: None,
        };
        for (u, w) in edges {
            if u >= order || w >= order {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{w}) out of range for order {order}"
                )));
            }
            if u == w {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, w) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u},{w})")));
            }
            g.set(u, w);
            g.set(w, u);
            g.edges.push((u.min(w), u.max(w)));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn set(&mut self, u: usize, w: usize) {
        self.rows[u * self.words + w / 64] |= 1 << (w % 64);
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    /// Number of vertices `v`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn family(&self) -> Option<&Family> {
        self.family.as_ref()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.rows[u * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    /// Bitset row of `u`; bit `w` is set iff `uw` is an edge.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&w| self.has_edge(u, w))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order).map(|u| self.degree(u)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// `Some(r)` if every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.order).all(|u| self.degree(u) == r).then_some(r)
    }
}

fn require(ok: bool, family: &Family, min: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{family}: requires {min}")))
    }
}

fn ring(offset: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

/// Builds the family graph using the vertex conventions in the module docs.
pub fn build_family(family: &Family) -> Result<Graph> {
    let (order, edges): (usize, Vec<(usize, usize)>) = match *family {
        Family::Cycle(n) => {
            require(n >= 3, family, "n >= 3")?;
            (n, ring(0, n).collect())
        }
        Family::Sun(n) => {
            require(n >= 3, family, "n >= 3")?;
            (
                2 * n,
                ring(0, n).chain((0..n).map(|i| (i, n + i))).collect(),
            )
        }
        Family::Prism(n) => {
            require(n >= 3, family, "n >= 3")?;
            let edges = ring(0, n)
                .chain(ring(n, n))
                .chain((0..n).map(|i| (i, n + i)));
            (2 * n, edges.collect())
        }
        Family::Complete(n) => {
            require(n >= 1, family, "n >= 1")?;
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
            (n, edges.collect())
        }
        Family::Wheel(n) => {
            require(n >= 3, family, "n >= 3")?;
            let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
            (n + 1, (1..=n).map(|i| (0, i)).chain(rim).collect())
        }
        Family::Fan(n) => {
            require(n >= 1, family, "n >= 1")?;
            let path = (1..n).map(|i| (i, i + 1));
            (n + 1, (1..=n).map(|i| (0, i)).chain(path).collect())
        }
        Family::Friendship(n) => {
            require(n >= 1, family, "n >= 1")?;
            let edges = (1..=n).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
            (2 * n + 1, edges.collect())
        }
        Family::CompleteMultipartite(ref parts) => {
            require(
                !parts.is_empty() && parts.iter().all(|&p| p >= 1),
                family,
                "at least one part, every part size >= 1",
            )?;
            let mut part_of = Vec::new();
            for (k, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(k, p));
            }
            let order = part_of.len();
            let edges = (0..order).flat_map(|u| {
                let part_of = &part_of;
                (u + 1..order)
                    .filter(move |&w| part_of[u] != part_of[w])
                    .map(move |w| (u, w))
            });
            (order, edges.collect())
        }
    };
    Ok(Graph::new(order, edges)?.with_family(family.clone()))
}
