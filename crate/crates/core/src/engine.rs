//! Exact domination number and γ-set enumeration.
//!
//! The search is a set-cover branch and bound over 128-bit masks. Every node
//! branches on the lowest-index uncovered vertex `u`: some member of the
//! closed neighborhood `N[u]` must join the set, so each candidate in `N[u]`
//! is tried in increasing order. A candidate that has been tried is excluded
//! from the later sibling subtrees, which makes every dominating set
//! reachable along exactly one path. Subtrees are cut when
//! `size + ceil(|uncovered| / max_v |N[v]|)` cannot beat the target.
//!
//! [`brute_force_dominion`] is an independent subset scan used as an oracle.

use std::time::{Duration, Instant};

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::Zeta;

/// Largest graph accepted by [`brute_force_dominion`].
pub const ORACLE_MAX_N: usize = 24;

/// γ(G), ζ(G) and optionally the γ-sets themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport<C = Zeta> {
    pub gamma: usize,
    pub zeta: C,
    /// Present only when requested; sorted by [`VertexSet`] order.
    pub sets: Option<Vec<VertexSet>>,
}

/// Wall-clock limit for a single search.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    /// Expires `limit` from now.
    pub fn within(limit: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(limit) }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// `N[v] = adj[v] ∪ {v}`, the vertices `v` covers.
pub fn closed_neighborhood(g: &Graph, v: usize) -> Result<VertexSet> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(g.neighbors(v).with(v))
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let covered = s
        .iter()
        .filter(|&v| v < g.n())
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v).with(v)));
    g.vertices().is_subset(covered)
}

/// γ(G). The empty graph has γ = 0.
pub fn domination_number(g: &Graph) -> usize {
    Search::new(g, Budget::unlimited())
        .minimum()
        .expect("an unlimited search cannot time out")
}

/// All γ-sets in increasing [`VertexSet`] order.
pub fn enumerate_gamma_sets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let mut search = Search::new(g, Budget::unlimited());
    let gamma = search.minimum().expect("unlimited");
    let mut sets = Vec::new();
    search
        .each_of_size(gamma, &mut |s| {
            sets.push(VertexSet::from_bits(s));
            Ok(())
        })
        .expect("unlimited");
    sets.sort_unstable();
    sets.into_iter()
}

/// γ and ζ counted in [`Zeta`].
pub fn dominion(g: &Graph) -> Result<GammaReport> {
    dominion_in(g, Budget::unlimited())
}

/// γ and ζ counted in any [`Count`] type, under a time budget.
pub fn dominion_in<C: Count>(g: &Graph, budget: Budget) -> Result<GammaReport<C>> {
    let mut search = Search::new(g, budget);
    let gamma = search.minimum()?;
    let mut zeta = C::zero();
    search.each_of_size(gamma, &mut |_| zeta.incr())?;
    Ok(GammaReport { gamma, zeta, sets: None })
}

/// Like [`dominion`], with the sorted γ-sets materialized.
pub fn dominion_with_sets(g: &Graph) -> Result<GammaReport> {
    let sets: Vec<VertexSet> = enumerate_gamma_sets(g).collect();
    let gamma = sets.first().map_or(0, |s| s.len());
    let zeta = sets.len() as Zeta;
    Ok(GammaReport { gamma, zeta, sets: Some(sets) })
}

struct Search {
    /// closed neighborhoods
    cover: Vec<u128>,
    all: u128,
    max_cover: u32,
    budget: Budget,
    nodes: u64,
}

impl Search {
    fn new(g: &Graph, budget: Budget) -> Self {
        let cover: Vec<u128> = (0..g.n()).map(|v| g.neighbors(v).with(v).bits()).collect();
        let max_cover = cover.iter().map(|c| c.count_ones()).max().unwrap_or(1);
        Search { cover, all: g.vertices().bits(), max_cover, budget, nodes: 0 }
    }

    fn lower_bound(&self, uncovered: u128) -> usize {
        uncovered.count_ones().div_ceil(self.max_cover) as usize
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 1024 == 1 && self.budget.expired() {
            return Err(Error::Timeout);
        }
        Ok(())
    }

    /// Max-coverage greedy; an upper bound on γ.
    fn greedy(&self) -> usize {
        let mut uncovered = self.all;
        let mut size = 0;
        while uncovered != 0 {
            let best = (0..self.cover.len())
                .max_by_key(|&v| ((self.cover[v] & uncovered).count_ones(), std::cmp::Reverse(v)))
                .expect("uncovered vertices exist");
            uncovered &= !self.cover[best];
            size += 1;
        }
        size
    }

    fn minimum(&mut self) -> Result<usize> {
        // `best` starts one above the greedy size so the greedy value itself
        // is confirmed by an explicit leaf.
        let mut best = self.greedy() + 1;
        self.improve(self.all, 0, 0, &mut best)?;
        Ok(best)
    }

    fn improve(&mut self, uncovered: u128, excluded: u128, size: usize, best: &mut usize) -> Result<()> {
        self.tick()?;
        if uncovered == 0 {
            *best = (*best).min(size);
            return Ok(());
        }
        if size + self.lower_bound(uncovered) >= *best {
            return Ok(());
        }
        let u = uncovered.trailing_zeros() as usize;
        let mut excluded = excluded;
        let mut candidates = self.cover[u] & !excluded;
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.improve(uncovered & !self.cover[c], excluded, size + 1, best)?;
            excluded |= 1u128 << c;
        }
        Ok(())
    }

    /// Calls `visit` once for every dominating set of exactly `k` vertices,
    /// provided no dominating set is smaller than `k`.
    fn each_of_size<F>(&mut self, k: usize, visit: &mut F) -> Result<()>
    where
        F: FnMut(u128) -> Result<()>,
    {
        self.descend(self.all, 0, 0, k, visit)
    }

    fn descend<F>(&mut self, uncovered: u128, chosen: u128, excluded: u128, k: usize, visit: &mut F) -> Result<()>
    where
        F: FnMut(u128) -> Result<()>,
    {
        self.tick()?;
        if uncovered == 0 {
            debug_assert_eq!(chosen.count_ones() as usize, k);
            return visit(chosen);
        }
        if chosen.count_ones() as usize + self.lower_bound(uncovered) > k {
            return Ok(());
        }
        let u = uncovered.trailing_zeros() as usize;
        let mut excluded = excluded;
        let mut candidates = self.cover[u] & !excluded;
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.descend(uncovered & !self.cover[c], chosen | 1u128 << c, excluded, k, visit)?;
            excluded |= 1u128 << c;
        }
        Ok(())
    }
}

/// Oracle: scans subsets by increasing size (increasing mask within a size)
/// and counts the dominating ones at the first size that has any.
pub fn brute_force_dominion(g: &Graph) -> Result<GammaReport> {
    brute_force_dominion_in(g)
}

pub fn brute_force_dominion_in<C: Count>(g: &Graph) -> Result<GammaReport<C>> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::Capacity { requested: n, max: ORACLE_MAX_N });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            let open = g.neighbors(v).bits() as u32;
            open | 1 << v
        })
        .collect();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let dominates = |mask: u32| {
        let mut covered = 0u32;
        let mut rest = mask;
        while rest != 0 {
            covered |= closed[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        covered == all
    };

    for k in 0..=n {
        let mut zeta = C::zero();
        for mask in subsets_of_size(n, k) {
            if dominates(mask) {
                zeta.incr()?;
            }
        }
        if !zeta.is_zero() {
            return Ok(GammaReport { gamma: k, zeta, sets: None });
        }
    }
    unreachable!("the full vertex set dominates")
}

/// k-subsets of `{0..n}` as masks, in increasing numeric order (Gosper).
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let first = if k == 0 { Some(0u64) } else { Some((1u64 << k) - 1) };
    std::iter::successors(first.filter(|&m| m < limit || k == 0), move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit).then_some(next)
    })
    .map(|m| m as u32)
}
