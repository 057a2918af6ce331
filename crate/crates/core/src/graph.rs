//! Simple undirected graphs on at most 128 vertices, family generators and
//! the join operation.
//!
//! Generators number vertices from 0. For paths and cycles vertex `i` is
//! `v_{i+1}` of the 1-based presentation `v_1 - v_2 - … - v_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::MAX_VERTICES;

/// An immutable simple graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = Builder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Open neighborhood of `v`.
    ///
    /// # Panics
    /// If `v >= n`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 => true,
            n => self.reach(0, self.vertices()).len() == n,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity { requested: n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Mutable accumulator used while a graph is being assembled.
pub(crate) struct Builder {
    adj: Vec<VertexSet>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Builder { adj: vec![VertexSet::EMPTY; n] })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop edge at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidFamily { family, reason: reason.into() }
}

/// Path `P_n`: edges `{i, i+1}`. `n = 1` gives `K_1`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `C_n`: the path plus the edge `{n-1, 0}`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete", "need n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,leaves}` with center 0.
pub fn make_star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(invalid("star", "need at least one leaf"));
    }
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Sun graph on `2n` vertices: a cycle on `0..n` and a leaf `n + i` hanging
/// off each cycle vertex `i`.
pub fn make_sun(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("sun", format!("need n >= 3, got {n}")));
    }
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let pendants = (0..n).map(|i| (i, n + i));
    Graph::from_edges(2 * n, cycle.chain(pendants))
}

/// Complete multipartite graph `K(m_1, …, m_k)`. Block `b` holds the
/// consecutive vertices starting at `m_1 + … + m_b`; see
/// [`multipartite_blocks`].
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(invalid("complete multipartite", "need at least 2 parts"));
    }
    if parts.contains(&0) {
        return Err(invalid("complete multipartite", "every part needs at least one vertex"));
    }
    let n = parts.iter().sum();
    check_capacity(n)?;
    let block = multipartite_blocks(parts);
    let mut b = Builder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if block[u] != block[v] {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Block index of each vertex of `K(parts)`.
pub fn multipartite_blocks(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i, m))
        .collect()
}

/// `g1 ∨ g2`: disjoint union plus every edge between the two sides. The
/// vertices of `g2` are shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    check_capacity(n1 + n2)?;
    let left = VertexSet::full(n1);
    let shift = |s: VertexSet| VertexSet::from_bits(s.bits().checked_shl(n1 as u32).unwrap_or(0));
    let right = shift(VertexSet::full(n2));
    let mut adj = Vec::with_capacity(n1 + n2);
    adj.extend(g1.adj.iter().map(|&s| s.union(right)));
    adj.extend(g2.adj.iter().map(|&s| shift(s).union(left)));
    Ok(Graph { adj })
}

/// A named graph family instance, or an explicit graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Sun(usize),
    CompleteMultipartite(Vec<usize>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Explicit(Graph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => make_path(*n),
            FamilySpec::Cycle(n) => make_cycle(*n),
            FamilySpec::Complete(n) => make_complete(*n),
            FamilySpec::Star(l) => make_star(*l),
            FamilySpec::Sun(n) => make_sun(*n),
            FamilySpec::CompleteMultipartite(parts) => make_complete_multipartite(parts),
            FamilySpec::Join(a, b) => join(&a.build()?, &b.build()?),
            FamilySpec::Explicit(g) => Ok(g.clone()),
        }
    }
}

/// Renders the grammar accepted by [`FromStr`]; explicit graphs render as
/// `graph6:<code>`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Sun(n) => write!(f, "sun:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|m| m.to_string()).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::Join(a, b) => write!(f, "join:{a}+{b}"),
            FamilySpec::Explicit(g) => write!(f, "graph6:{}", crate::io::emit_graph6(g)),
        }
    }
}

/// Parses `path:N`, `cycle:N`, `complete:N`, `star:N`, `sun:N`,
/// `kpartite:M1,M2,…` and `join:<spec>+<spec>` (joins nest).
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::FamilySpec(s.to_string());
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        let count = || arg.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "path" => Ok(FamilySpec::Path(count()?)),
            "cycle" => Ok(FamilySpec::Cycle(count()?)),
            "complete" => Ok(FamilySpec::Complete(count()?)),
            "star" => Ok(FamilySpec::Star(count()?)),
            "sun" => Ok(FamilySpec::Sun(count()?)),
            "kpartite" => arg
                .split(',')
                .map(|m| m.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(FamilySpec::CompleteMultipartite),
            "graph6" => crate::io::parse_graph6(arg).map(FamilySpec::Explicit),
            "join" => {
                // first '+' that splits the argument into two valid specs
                for (i, _) in arg.match_indices('+') {
                    if let (Ok(a), Ok(b)) = (arg[..i].parse(), arg[i + 1..].parse()) {
                        return Ok(FamilySpec::Join(Box::new(a), Box::new(b)));
                    }
                }
                Err(bad())
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for v in 0..g.n() {
            assert!(!g.neighbors(v).contains(v), "loop at {v}");
            for u in g.neighbors(v) {
                assert!(u < g.n());
                assert!(g.neighbors(u).contains(v), "asymmetric {u}-{v}");
            }
        }
    }

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn paths() {
        let p2 = make_path(2).unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let p4 = make_path(4).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        let p7 = make_path(7).unwrap();
        assert_eq!(p7.edge_count(), 6);
        assert_eq!(p7.degrees().iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(make_path(1).unwrap().n(), 1);
        assert_eq!(make_path(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn cycles() {
        assert_eq!(make_cycle(3).unwrap(), make_complete(3).unwrap());
        let c6 = make_cycle(6).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        assert_eq!(make_cycle(4).unwrap().neighbors(0).to_vec(), vec![1, 3]);
        assert!(matches!(make_cycle(2), Err(Error::InvalidFamily { .. })));
    }

    #[test]
    fn suns() {
        let s3 = make_sun(3).unwrap();
        assert_eq!(s3.n(), 6);
        assert_eq!(s3.edge_count(), 6);
        // triangle 0,1,2 with pendants 3,4,5
        for i in 0..3 {
            assert_eq!(s3.neighbors(3 + i).to_vec(), vec![i]);
        }
        assert_eq!(sorted_degrees(&make_sun(4).unwrap()), vec![1, 1, 1, 1, 3, 3, 3, 3]);
        assert!(matches!(make_sun(2), Err(Error::InvalidFamily { .. })));
    }

    #[test]
    fn multipartite() {
        assert_eq!(make_complete_multipartite(&[1, 1, 1]).unwrap(), make_complete(3).unwrap());
        let k22 = make_complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert!(k22.degrees().iter().all(|&d| d == 2));
        assert_eq!(make_complete_multipartite(&[1, 3]).unwrap(), make_star(3).unwrap());
        assert_eq!(multipartite_blocks(&[1, 3, 2]), vec![0, 1, 1, 1, 2, 2]);
        assert!(matches!(make_complete_multipartite(&[4]), Err(Error::InvalidFamily { .. })));
        assert!(matches!(make_complete_multipartite(&[2, 0]), Err(Error::InvalidFamily { .. })));
        for k in 2..8 {
            let g = make_complete_multipartite(&vec![1; k]).unwrap();
            let kk = make_complete(k).unwrap();
            assert_eq!(g.edge_count(), kk.edge_count());
            assert_eq!(sorted_degrees(&g), sorted_degrees(&kk));
        }
    }

    #[test]
    fn joins() {
        let k1 = make_complete(1).unwrap();
        assert_eq!(join(&k1, &k1).unwrap(), make_complete(2).unwrap());
        let p2 = make_path(2).unwrap();
        assert_eq!(join(&p2, &p2).unwrap(), make_complete(4).unwrap());
        let j = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(j, make_complete_multipartite(&[2, 3]).unwrap());
        assert_eq!(j.edge_count(), 6);
        let big = Graph::empty(100).unwrap();
        assert!(matches!(join(&big, &big), Err(Error::Capacity { requested: 200, .. })));
        let full = join(&Graph::empty(64).unwrap(), &Graph::empty(64).unwrap()).unwrap();
        assert_eq!(full.edge_count(), 64 * 64);
        assert_simple(&full);
    }

    #[test]
    fn generators_are_simple() {
        let graphs = [
            make_path(9).unwrap(),
            make_cycle(10).unwrap(),
            make_sun(5).unwrap(),
            make_star(4).unwrap(),
            make_complete(6).unwrap(),
            make_complete_multipartite(&[1, 2, 3]).unwrap(),
            join(&make_cycle(4).unwrap(), &make_path(3).unwrap()).unwrap(),
        ];
        graphs.iter().for_each(assert_simple);
    }

    #[test]
    fn connectivity() {
        assert!(make_cycle(5).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.reach(2, two_edges.vertices()).to_vec(), vec![2, 3]);
    }

    #[test]
    fn family_spec_grammar() {
        let cases = [
            ("path:10", FamilySpec::Path(10)),
            ("cycle:4", FamilySpec::Cycle(4)),
            ("complete:7", FamilySpec::Complete(7)),
            ("star:3", FamilySpec::Star(3)),
            ("sun:3", FamilySpec::Sun(3)),
            ("kpartite:1,2,3", FamilySpec::CompleteMultipartite(vec![1, 2, 3])),
        ];
        for (text, spec) in cases {
            assert_eq!(text.parse::<FamilySpec>().unwrap(), spec);
            assert_eq!(spec.to_string(), text);
        }
        let nested: FamilySpec = "join:join:path:2+cycle:3+complete:1".parse().unwrap();
        assert_eq!(nested.build().unwrap().n(), 6);
        assert_eq!(nested.to_string(), "join:join:path:2+cycle:3+complete:1");
        let right: FamilySpec = "join:path:4+join:path:2+path:3".parse().unwrap();
        assert_eq!(right.build().unwrap().n(), 9);
        for bad in ["path", "path:x", "tree:4", "join:path:3", "kpartite:1,,2"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
