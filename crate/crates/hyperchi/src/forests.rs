//! Planted forests on `[n]`: rooted acyclic simple graphs, their degree
//! sequence monomials, and exhaustive enumeration.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::poly::Monomial;
use crate::{Error, Result};

/// A forest on `[n]` with one distinguished root per component, stored as a
/// parent map (roots have no parent). Edges are oriented away from roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlantedForest {
    n: u32,
    /// `parent[i]` is the parent of vertex `i+1`, or `None` at a root.
    parent: Vec<Option<u32>>,
}

impl PlantedForest {
    /// Build from a parent map, verifying acyclicity.
    pub fn new(n: u32, parent: Vec<Option<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadVertexCount(0));
        }
        assert_eq!(parent.len(), n as usize, "parent map must cover [n]");
        for p in parent.iter().flatten() {
            if *p < 1 || *p > n {
                return Err(Error::VertexOutOfRange { vertex: *p, n });
            }
        }
        let f = PlantedForest { n, parent };
        for v in 1..=n {
            // walk to a root; a walk longer than n vertices means a cycle
            let mut cur = v;
            for _ in 0..n {
                match f.parent[cur as usize - 1] {
                    Some(p) => cur = p,
                    None => break,
                }
            }
            if f.parent[cur as usize - 1].is_some() {
                return Err(Error::NotAHypertree {
                    n,
                    defect: crate::hypertrees::HypertreeDefect::Cycle,
                });
            }
        }
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        self.parent[v as usize - 1]
    }

    /// Roots in ascending order.
    pub fn roots(&self) -> Vec<u32> {
        (1..=self.n)
            .filter(|&v| self.parent[v as usize - 1].is_none())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    /// Rooted degree of each vertex: the number of edges starting there,
    /// i.e. the number of children.
    pub fn rooted_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize];
        for p in self.parent.iter().flatten() {
            deg[*p as usize - 1] += 1;
        }
        deg
    }

    /// The degree sequence monomial `prod_i x_i^(deg i)`.
    pub fn degree_monomial(&self) -> Monomial {
        Monomial::from_pairs(
            self.rooted_degrees()
                .iter()
                .enumerate()
                .map(|(i, &d)| (i as u32 + 1, d)),
        )
    }
}

/// `{"n":3,"roots":[1,3],"parent":{"2":1}}`
impl Serialize for PlantedForest {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PlantedForest", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("roots", &self.roots())?;
        let parent: BTreeMap<u32, u32> = (1..=self.n)
            .filter_map(|v| self.parent[v as usize - 1].map(|p| (v, p)))
            .collect();
        s.serialize_field("parent", &parent)?;
        s.end()
    }
}

/// All planted forests on `[n]` with exactly `k` components, each exactly
/// once, in ascending order of the parent vector (roots sort before parent
/// values). The count is `C(n-1, k-1) * n^(n-k)`.
///
/// Vertices are assigned in order; each tentative parent edge is checked
/// against the already-assigned chain so cyclic assignments are pruned as
/// soon as they close.
pub fn enumerate_planted_forests(n: u32, k: u32) -> Result<Vec<PlantedForest>> {
    if n == 0 {
        return Err(Error::BadVertexCount(0));
    }
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let mut out = Vec::new();
    let mut parent: Vec<Option<u32>> = vec![None; n as usize];

    fn creates_cycle(parent: &[Option<u32>], v: u32, candidate: u32) -> bool {
        // follow assigned parents from the candidate; unassigned vertices
        // (later than the current position) terminate the walk
        let mut cur = candidate;
        loop {
            if cur == v {
                return true;
            }
            match parent[cur as usize - 1] {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    fn rec(
        n: u32,
        k: u32,
        v: u32,
        roots_so_far: u32,
        parent: &mut Vec<Option<u32>>,
        out: &mut Vec<PlantedForest>,
    ) {
        if v > n {
            if roots_so_far == k {
                out.push(PlantedForest {
                    n,
                    parent: parent.clone(),
                });
            }
            return;
        }
        let remaining = n - v; // vertices after v
        // v as a root
        if roots_so_far < k {
            parent[v as usize - 1] = None;
            rec(n, k, v + 1, roots_so_far + 1, parent, out);
        }
        // v with a parent
        if roots_so_far + remaining >= k {
            for p in 1..=n {
                if p == v || creates_cycle(parent, v, p) {
                    continue;
                }
                parent[v as usize - 1] = Some(p);
                rec(n, k, v + 1, roots_so_far, parent, out);
            }
            parent[v as usize - 1] = None;
        }
    }

    rec(n, k, 1, 0, &mut parent, &mut out);
    Ok(out)
}
