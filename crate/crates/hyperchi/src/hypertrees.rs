//! Hypertrees, rooted hypertrees, and planted hyperforests on `[n]`.
//!
//! A hypergraph here is a family of hyperedges (subsets of `[n]` of size at
//! least two). It is a hyperforest when it has no simple cycle, which is
//! equivalent to its bipartite incidence graph being a forest; a connected
//! hyperforest is a hypertree. The primary enumerator follows the
//! root-removal recursion: a rooted hypertree on `S` corresponds to a planted
//! hyperforest on `S` minus the root together with a partition of the
//! forest's roots, one hyperedge per block.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::partitions::partitions_of_labels;
use crate::poly::{Monomial, Polynomial, Rat};
use crate::{Error, Result};

/// Why an edge family fails to be a hypertree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypertreeDefect {
    DuplicateEdge,
    Cycle,
    Disconnected,
}

impl fmt::Display for HypertreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypertreeDefect::DuplicateEdge => write!(f, "duplicate edge"),
            HypertreeDefect::Cycle => write!(f, "simple cycle"),
            HypertreeDefect::Disconnected => write!(f, "disconnected"),
        }
    }
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, v: u32) -> u32 {
        let mut v = v;
        while self.parent[v as usize] != v {
            self.parent[v as usize] = self.parent[self.parent[v as usize] as usize];
            v = self.parent[v as usize];
        }
        v
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

fn validate_edges(n: u32, edges: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    if n == 0 {
        return Err(Error::BadVertexCount(0));
    }
    let mut canon = Vec::with_capacity(edges.len());
    for e in edges {
        let mut e = e.clone();
        e.sort_unstable();
        e.dedup();
        if e.len() < 2 {
            return Err(Error::EdgeTooSmall(e));
        }
        for &v in &e {
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        canon.push(e);
    }
    canon.sort_by(|a, b| edge_cmp(a, b));
    Ok(canon)
}

/// Canonical edge order: least element, then size, then content.
pub(crate) fn edge_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a[0].cmp(&b[0])
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.cmp(b))
}

fn edge_list_cmp(a: &[Vec<u32>], b: &[Vec<u32>]) -> Ordering {
    for (ea, eb) in a.iter().zip(b.iter()) {
        match edge_cmp(ea, eb) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

/// Diagnose an edge family: `Ok(None)` means it is a hypertree on `[n]`.
/// Malformed input (an edge with fewer than two distinct vertices, or a
/// vertex outside `[n]`) is an error rather than a defect.
pub fn check_hypertree(n: u32, edges: &[Vec<u32>]) -> Result<Option<HypertreeDefect>> {
    let canon = validate_edges(n, edges)?;
    for w in canon.windows(2) {
        if w[0] == w[1] {
            return Ok(Some(HypertreeDefect::DuplicateEdge));
        }
    }
    let mut dsu = Dsu::new(n as usize);
    let mut merges = 0u32;
    for e in &canon {
        for &v in &e[1..] {
            if !dsu.union(e[0] - 1, v - 1) {
                return Ok(Some(HypertreeDefect::Cycle));
            }
            merges += 1;
        }
    }
    if merges != n - 1 {
        return Ok(Some(HypertreeDefect::Disconnected));
    }
    Ok(None)
}

/// True iff the family is a hypertree on `[n]`.
pub fn is_hypertree(n: u32, edges: &[Vec<u32>]) -> Result<bool> {
    Ok(check_hypertree(n, edges)?.is_none())
}

/// A hypertree on `[n]`: connected, no simple cycles. Edges are held in
/// canonical form (each edge sorted; edges ordered by least element, size,
/// content).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypertree {
    n: u32,
    edges: Vec<Vec<u32>>,
}

impl Hypertree {
    pub fn new(n: u32, edges: Vec<Vec<u32>>) -> Result<Self> {
        match check_hypertree(n, &edges)? {
            None => Ok(Hypertree {
                n,
                edges: validate_edges(n, &edges)?,
            }),
            Some(defect) => Err(Error::NotAHypertree { n, defect }),
        }
    }

    /// Used by the enumerators, whose output is a hypertree by construction.
    fn from_raw(n: u32, mut edges: Vec<Vec<u32>>) -> Self {
        for e in edges.iter_mut() {
            e.sort_unstable();
        }
        edges.sort_by(|a, b| edge_cmp(a, b));
        Hypertree { n, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Height in the hypertree poset: `#edges - 1`. The edgeless hypertree
    /// on `[1]` reports rank 0.
    pub fn rank(&self) -> u32 {
        (self.edges.len() as u32).saturating_sub(1)
    }

    /// Number of hyperedges containing each vertex.
    pub fn valences(&self) -> Vec<u32> {
        let mut val = vec![0u32; self.n as usize];
        for e in &self.edges {
            for &v in e {
                val[v as usize - 1] += 1;
            }
        }
        val
    }

    /// Multiset of edge sizes, ascending.
    pub fn edge_sizes(&self) -> Vec<u32> {
        let mut sizes: Vec<u32> = self.edges.iter().map(|e| e.len() as u32).collect();
        sizes.sort_unstable();
        sizes
    }

    /// `prod_e (|e|-1)^(|e|-2)` as an exact integer.
    pub fn e_weight_value(&self) -> BigInt {
        let mut acc = BigInt::one();
        for e in &self.edges {
            let s = e.len() as u32;
            acc *= BigInt::from(s - 1).pow(s - 2);
        }
        acc
    }

    /// Edge weight as a constant polynomial.
    pub fn e_weight(&self) -> Polynomial {
        Polynomial::constant(Rat::from_integer(self.e_weight_value()))
    }

    /// `prod_i x_i^(val(i)-1)`.
    pub fn v_weight(&self) -> Monomial {
        Monomial::from_pairs(
            self.valences()
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v > 0)
                .map(|(i, &v)| (i as u32 + 1, v - 1)),
        )
    }

    /// Unrooted weight: edge weight times vertex weight.
    pub fn weight_unrooted(&self) -> Polynomial {
        Polynomial::term(self.v_weight(), Rat::from_integer(self.e_weight_value()))
    }

    pub fn rooted_at(&self, root: u32) -> Result<RootedHypertree> {
        if root < 1 || root > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: self.n,
            });
        }
        Ok(RootedHypertree {
            tree: self.clone(),
            root,
        })
    }
}

impl Ord for Hypertree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| edge_list_cmp(&self.edges, &other.edges))
    }
}

impl PartialOrd for Hypertree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{"n":4,"edges":[[1,2],[2,3,4]]}`
impl Serialize for Hypertree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Hypertree", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

/// Rooted degrees for a hyperforest given its edges and component roots:
/// each hyperedge starts at its unique vertex closest to a root, and the
/// rooted degree of a vertex is the number of hyperedges starting there.
fn rooted_degrees(n: u32, edges: &[Vec<u32>], roots: &[u32]) -> Vec<u32> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
    for (idx, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v as usize - 1].push(idx);
        }
    }
    let mut deg = vec![0u32; n as usize];
    let mut seen_vertex = vec![false; n as usize];
    let mut seen_edge = vec![false; edges.len()];
    let mut queue = VecDeque::new();
    for &r in roots {
        seen_vertex[r as usize - 1] = true;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for &idx in &incident[v as usize - 1] {
            if seen_edge[idx] {
                continue;
            }
            seen_edge[idx] = true;
            deg[v as usize - 1] += 1;
            for &w in &edges[idx] {
                if !seen_vertex[w as usize - 1] {
                    seen_vertex[w as usize - 1] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    deg
}

fn rooted_weight(n: u32, edges: &[Vec<u32>], roots: &[u32]) -> Polynomial {
    let mut coeff = BigInt::one();
    for e in edges {
        let s = e.len() as u32;
        coeff *= BigInt::from(s - 1).pow(s - 2);
    }
    let deg = rooted_degrees(n, edges, roots);
    let mono = Monomial::from_pairs(deg.iter().enumerate().map(|(i, &d)| (i as u32 + 1, d)));
    Polynomial::term(mono, Rat::from_integer(coeff))
}

/// A hypertree with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedHypertree {
    tree: Hypertree,
    root: u32,
}

impl RootedHypertree {
    pub fn tree(&self) -> &Hypertree {
        &self.tree
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn n(&self) -> u32 {
        self.tree.n
    }

    /// Number of hyperedges starting at each vertex.
    pub fn rooted_degrees(&self) -> Vec<u32> {
        rooted_degrees(self.tree.n, &self.tree.edges, &[self.root])
    }

    /// `prod_e (|e|-1)^(|e|-2) * prod_i x_i^(deg i)`.
    pub fn weight_rooted(&self) -> Polynomial {
        rooted_weight(self.tree.n, &self.tree.edges, &[self.root])
    }
}

impl Ord for RootedHypertree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tree
            .cmp(&other.tree)
            .then(self.root.cmp(&other.root))
    }
}

impl PartialOrd for RootedHypertree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Hypertree JSON plus `"root"`.
impl Serialize for RootedHypertree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RootedHypertree", 3)?;
        s.serialize_field("n", &self.tree.n)?;
        s.serialize_field("edges", &self.tree.edges)?;
        s.serialize_field("root", &self.root)?;
        s.end()
    }
}

/// A hyperforest on `[n]` with one root per connected component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlantedHyperforest {
    n: u32,
    edges: Vec<Vec<u32>>,
    roots: Vec<u32>,
}

impl PlantedHyperforest {
    pub fn new(n: u32, edges: Vec<Vec<u32>>, mut roots: Vec<u32>) -> Result<Self> {
        let canon = validate_edges(n, &edges)?;
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(Error::NotAHypertree {
                    n,
                    defect: HypertreeDefect::DuplicateEdge,
                });
            }
        }
        let mut dsu = Dsu::new(n as usize);
        for e in &canon {
            for &v in &e[1..] {
                if !dsu.union(e[0] - 1, v - 1) {
                    return Err(Error::NotAHypertree {
                        n,
                        defect: HypertreeDefect::Cycle,
                    });
                }
            }
        }
        roots.sort_unstable();
        roots.dedup();
        for &r in &roots {
            if r < 1 || r > n {
                return Err(Error::VertexOutOfRange { vertex: r, n });
            }
        }
        // exactly one root per component
        let mut root_of = vec![None; n as usize];
        for &r in &roots {
            let c = dsu.find(r - 1);
            if root_of[c as usize].replace(r).is_some() {
                return Err(Error::InvalidRoots(format!(
                    "component of vertex {r} has more than one root"
                )));
            }
        }
        for v in 0..n {
            let c = dsu.find(v);
            if root_of[c as usize].is_none() {
                return Err(Error::InvalidRoots(format!(
                    "component of vertex {} has no root",
                    v + 1
                )));
            }
        }
        Ok(PlantedHyperforest {
            n,
            edges: canon,
            roots,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Roots in ascending order, one per component.
    pub fn roots(&self) -> &[u32] {
        &self.roots
    }

    pub fn component_count(&self) -> usize {
        self.roots.len()
    }

    pub fn rooted_degrees(&self) -> Vec<u32> {
        rooted_degrees(self.n, &self.edges, &self.roots)
    }

    /// `prod_e (|e|-1)^(|e|-2) * prod_i x_i^(deg i)`.
    pub fn weight_rooted(&self) -> Polynomial {
        rooted_weight(self.n, &self.edges, &self.roots)
    }
}

impl Ord for PlantedHyperforest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| edge_list_cmp(&self.edges, &other.edges))
            .then_with(|| self.roots.cmp(&other.roots))
    }
}

impl PartialOrd for PlantedHyperforest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Hypertree JSON plus `"roots"`.
impl Serialize for PlantedHyperforest {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PlantedHyperforest", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.serialize_field("roots", &self.roots)?;
        s.end()
    }
}

/// Intermediate value of the recursive enumerator: a planted hyperforest as
/// raw edges plus roots, before canonicalization.
#[derive(Clone)]
struct RawForest {
    edges: Vec<Vec<u32>>,
    roots: Vec<u32>,
}

/// Recursive generator with per-vertex-set memoization. Vertex subsets of
/// `[n]` are bitmasks (vertex `v` is bit `v-1`).
struct Enumerator {
    rht_cache: HashMap<u32, Rc<Vec<RawForest>>>,
    phf_cache: HashMap<u32, Rc<Vec<RawForest>>>,
}

fn mask_labels(mask: u32) -> Vec<u32> {
    (0..32)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

impl Enumerator {
    fn new() -> Self {
        Enumerator {
            rht_cache: HashMap::new(),
            phf_cache: HashMap::new(),
        }
    }

    /// All rooted hypertrees on the vertex set `mask` with the given root:
    /// one planted hyperforest on the remaining vertices plus one hyperedge
    /// per block of a partition of the forest's roots, each block joined to
    /// the root.
    fn rooted_with_root(&mut self, mask: u32, root: u32) -> Vec<RawForest> {
        let rest = mask & !(1 << (root - 1));
        if rest == 0 {
            return vec![RawForest {
                edges: Vec::new(),
                roots: vec![root],
            }];
        }
        let mut out = Vec::new();
        let forests = self.planted_on(rest);
        for forest in forests.iter() {
            let k = forest.roots.len();
            for blocks in (1..=k).flat_map(|i| partitions_of_labels(&forest.roots, i)) {
                let mut edges = forest.edges.clone();
                for block in blocks {
                    let mut e = block;
                    e.push(root);
                    e.sort_unstable();
                    edges.push(e);
                }
                out.push(RawForest {
                    edges,
                    roots: vec![root],
                });
            }
        }
        out
    }

    /// All rooted hypertrees on `mask`, over every choice of root.
    fn rooted_on(&mut self, mask: u32) -> Rc<Vec<RawForest>> {
        if let Some(hit) = self.rht_cache.get(&mask) {
            return Rc::clone(hit);
        }
        let mut out = Vec::new();
        for root in mask_labels(mask) {
            out.extend(self.rooted_with_root(mask, root));
        }
        let out = Rc::new(out);
        self.rht_cache.insert(mask, Rc::clone(&out));
        out
    }

    /// All planted hyperforests on `mask`, over every component count: a
    /// partition into components and an independently rooted hypertree on
    /// each block.
    fn planted_on(&mut self, mask: u32) -> Rc<Vec<RawForest>> {
        if let Some(hit) = self.phf_cache.get(&mask) {
            return Rc::clone(hit);
        }
        let labels = mask_labels(mask);
        let mut out = Vec::new();
        for k in 1..=labels.len() {
            self.planted_for_blocks(&labels, k, &mut out);
        }
        let out = Rc::new(out);
        self.phf_cache.insert(mask, Rc::clone(&out));
        out
    }

    fn planted_for_blocks(&mut self, labels: &[u32], k: usize, out: &mut Vec<RawForest>) {
        for blocks in partitions_of_labels(labels, k) {
            let options: Vec<Rc<Vec<RawForest>>> = blocks
                .iter()
                .map(|b| {
                    let m = b.iter().fold(0u32, |m, &v| m | 1 << (v - 1));
                    self.rooted_on(m)
                })
                .collect();
            let mut acc = vec![RawForest {
                edges: Vec::new(),
                roots: Vec::new(),
            }];
            for opts in &options {
                let mut next = Vec::with_capacity(acc.len() * opts.len());
                for base in &acc {
                    for tree in opts.iter() {
                        let mut merged = base.clone();
                        merged.edges.extend(tree.edges.iter().cloned());
                        merged.roots.extend_from_slice(&tree.roots);
                        next.push(merged);
                    }
                }
                acc = next;
            }
            for mut f in acc {
                f.roots.sort_unstable();
                out.push(f);
            }
        }
    }
}

fn full_mask(n: u32) -> u32 {
    if n >= 32 {
        panic!("vertex sets above 31 are not supported");
    }
    (1u32 << n) - 1
}

/// Every hypertree on `[n]` exactly once, in canonical order.
///
/// Implementation note: hypertrees correspond bijectively to rooted
/// hypertrees rooted at vertex 1, so the recursion is run once with that
/// root and the root is forgotten. For `n = 1` the edgeless hypergraph on
/// one vertex is taken as the unique hypertree.
pub fn enumerate_hypertrees(n: u32) -> Result<Vec<Hypertree>> {
    if n < 1 {
        return Err(Error::BadVertexCount(n));
    }
    let mut e = Enumerator::new();
    let mut out: Vec<Hypertree> = e
        .rooted_with_root(full_mask(n), 1)
        .into_iter()
        .map(|raw| Hypertree::from_raw(n, raw.edges))
        .collect();
    out.sort();
    Ok(out)
}

/// Every rooted hypertree on `[n]`, in canonical order; there are
/// `n * |HT_n|` of them.
pub fn enumerate_rooted_hypertrees(n: u32) -> Result<Vec<RootedHypertree>> {
    if n < 1 {
        return Err(Error::BadVertexCount(n));
    }
    let mut e = Enumerator::new();
    let mut out: Vec<RootedHypertree> = e
        .rooted_on(full_mask(n))
        .iter()
        .map(|raw| RootedHypertree {
            tree: Hypertree::from_raw(n, raw.edges.clone()),
            root: raw.roots[0],
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every planted hyperforest on `[n]` with exactly `k` components, in
/// canonical order.
pub fn enumerate_planted_hyperforests(n: u32, k: u32) -> Result<Vec<PlantedHyperforest>> {
    if n < 1 {
        return Err(Error::BadVertexCount(n));
    }
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let labels: Vec<u32> = (1..=n).collect();
    let mut e = Enumerator::new();
    let mut raw = Vec::new();
    e.planted_for_blocks(&labels, k as usize, &mut raw);
    let mut out: Vec<PlantedHyperforest> = raw
        .into_iter()
        .map(|f| {
            let mut edges = f.edges;
            for e in edges.iter_mut() {
                e.sort_unstable();
            }
            edges.sort_by(|a, b| edge_cmp(a, b));
            PlantedHyperforest {
                n,
                edges,
                roots: f.roots,
            }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Independent fast generator: depth-first growth over the candidate edges
/// in canonical order, pruning on cycles and on the weight budget
/// `sum (|e|-1) = n-1`. Because every edge set kept acyclic merges one
/// component per unit of weight, hitting the budget exactly forces
/// connectivity. Used to cross-check [`enumerate_hypertrees`].
pub fn enumerate_hypertrees_edge_growth(n: u32) -> Result<Vec<Hypertree>> {
    if n < 1 {
        return Err(Error::BadVertexCount(n));
    }
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    for mask in 1..(1u64 << n) {
        let e: Vec<u32> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        if e.len() >= 2 {
            candidates.push(e);
        }
    }
    candidates.sort_by(|a, b| edge_cmp(a, b));

    let target = n - 1;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn dfs(
        n: u32,
        candidates: &[Vec<u32>],
        start: usize,
        weight: u32,
        target: u32,
        dsu: &Dsu,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Hypertree>,
    ) {
        if weight == target {
            out.push(Hypertree::from_raw(
                n,
                chosen.iter().map(|&i| candidates[i].clone()).collect(),
            ));
            return;
        }
        for idx in start..candidates.len() {
            let e = &candidates[idx];
            let w = e.len() as u32 - 1;
            if weight + w > target {
                continue;
            }
            let mut next = Dsu {
                parent: dsu.parent.clone(),
            };
            let mut acyclic = true;
            for &v in &e[1..] {
                if !next.union(e[0] - 1, v - 1) {
                    acyclic = false;
                    break;
                }
            }
            if !acyclic {
                continue;
            }
            chosen.push(idx);
            dfs(n, candidates, idx + 1, weight + w, target, &next, chosen, out);
            chosen.pop();
        }
    }

    dfs(
        n,
        &candidates,
        0,
        0,
        target,
        &Dsu::new(n as usize),
        &mut chosen,
        &mut out,
    );
    out.sort();
    Ok(out)
}
