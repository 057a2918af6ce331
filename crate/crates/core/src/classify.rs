//! Structural classes of γ-sets: perfect, connected, total, independent and
//! clique.
//!
//! One-vertex sets are connected, independent and cliques, but not total
//! (their vertex is isolated in the induced subgraph).

use serde::Serialize;

use crate::count::Count;
use crate::engine::{enumerate_gamma_sets, is_dominating};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::Zeta;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClassFlags {
    /// Every vertex outside the set is covered by exactly one member.
    pub perfect: bool,
    pub connected: bool,
    /// No isolated vertex in the induced subgraph.
    pub total: bool,
    pub independent: bool,
    pub clique: bool,
}

impl ClassFlags {
    pub fn any(&self) -> bool {
        self.perfect || self.connected || self.total || self.independent || self.clique
    }
}

pub fn classify(g: &Graph, s: VertexSet) -> Result<ClassFlags> {
    if !s.is_subset(g.vertices()) || !is_dominating(g, s) {
        return Err(Error::NotDominating);
    }
    let inside = |v: usize| g.neighbors(v).intersection(s);

    let perfect = g
        .vertices()
        .difference(s)
        .iter()
        .all(|v| g.neighbors(v).intersection(s).len() == 1);
    let connected = s.first().is_none_or(|v| g.reach(v, s) == s);
    let total = s.iter().all(|v| !inside(v).is_empty());
    let independent = s.iter().all(|v| inside(v).is_empty());
    let clique = s.iter().all(|v| inside(v).with(v) == s);

    Ok(ClassFlags { perfect, connected, total, independent, clique })
}

/// Class counts over all γ-sets of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census<C = Zeta> {
    pub total_gamma_sets: C,
    pub perfect_count: C,
    pub connected_count: C,
    pub total_count: C,
    pub independent_count: C,
    pub clique_count: C,
    /// Sets with none of the five properties.
    pub none_count: C,
}

impl<C: Count> Census<C> {
    fn zero() -> Self {
        Census {
            total_gamma_sets: C::zero(),
            perfect_count: C::zero(),
            connected_count: C::zero(),
            total_count: C::zero(),
            independent_count: C::zero(),
            clique_count: C::zero(),
            none_count: C::zero(),
        }
    }

    pub fn add(&mut self, flags: ClassFlags) -> Result<()> {
        self.total_gamma_sets.incr()?;
        let tallies = [
            (flags.perfect, &mut self.perfect_count),
            (flags.connected, &mut self.connected_count),
            (flags.total, &mut self.total_count),
            (flags.independent, &mut self.independent_count),
            (flags.clique, &mut self.clique_count),
            (!flags.any(), &mut self.none_count),
        ];
        for (hit, count) in tallies {
            if hit {
                count.incr()?;
            }
        }
        Ok(())
    }

    pub fn from_flags<I: IntoIterator<Item = ClassFlags>>(flags: I) -> Result<Self> {
        let mut c = Self::zero();
        for f in flags {
            c.add(f)?;
        }
        Ok(c)
    }
}

pub fn census(g: &Graph) -> Result<Census> {
    census_in(g)
}

pub fn census_in<C: Count>(g: &Graph) -> Result<Census<C>> {
    let mut c = Census::zero();
    for s in enumerate_gamma_sets(g) {
        c.add(classify(g, s)?)?;
    }
    Ok(c)
}
