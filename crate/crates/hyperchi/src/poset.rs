//! The hypertree poset `HT_n`: order relation, rank, upper sets, and reduced
//! Euler characteristics of order complexes by chain counting.
//!
//! `t <= t'` holds when every edge of `t'` is contained in some edge of `t`;
//! the single hyperedge on all of `[n]` (the nuclear vertex) is the unique
//! minimum. The poset is graded by `rank = #edges - 1`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::Serialize;

use crate::hypertrees::{enumerate_hypertrees, Hypertree};
use crate::{Error, Result};

/// `a <= b` in the hypertree poset: every edge of `b` lies inside an edge
/// of `a`.
pub fn leq(a: &Hypertree, b: &Hypertree) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::MismatchedGroundSet(a.n(), b.n()));
    }
    Ok(b.edges().iter().all(|eb| {
        a.edges()
            .iter()
            .any(|ea| eb.iter().all(|v| ea.binary_search(v).is_ok()))
    }))
}

/// Chain counts of a finite poset's order complex: `chain_counts[l]` is the
/// number of strictly increasing chains with `l` elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainComplexSummary {
    pub chain_counts: BTreeMap<u32, u64>,
}

impl ChainComplexSummary {
    /// Reduced Euler characteristic: `-1 + sum_l (-1)^(l-1) * chain_counts[l]`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut total: i64 = -1;
        for (&len, &count) in &self.chain_counts {
            let signed = count as i64;
            if len % 2 == 1 {
                total += signed;
            } else {
                total -= signed;
            }
        }
        total
    }
}

/// Count strictly increasing chains in the subposet induced by `elements`.
/// `chains_ending[v][l]` is built by summing over predecessors, so the whole
/// computation is a DP over the order relation.
pub fn chain_counts(elements: &[Hypertree]) -> Result<ChainComplexSummary> {
    let m = elements.len();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in 0..m {
            if i != j && leq(&elements[i], &elements[j])? {
                below[j].push(i);
            }
        }
    }
    // ending[v] maps chain length -> count of chains ending at v
    let mut ending: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); m];
    // process in order of an extension of the partial order (by rank)
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| elements[i].rank());
    for &v in &order {
        ending[v].insert(1, 1);
        let preds = below[v].clone();
        for u in preds {
            let shorter: Vec<(u32, u64)> = ending[u].iter().map(|(&l, &c)| (l, c)).collect();
            for (l, c) in shorter {
                *ending[v].entry(l + 1).or_insert(0) += c;
            }
        }
    }
    let mut summary = ChainComplexSummary::default();
    for e in ending {
        for (l, c) in e {
            *summary.chain_counts.entry(l).or_insert(0) += c;
        }
    }
    Ok(summary)
}

/// Reduced Euler characteristic of the order complex of the induced
/// subposet. The empty subposet gives -1; a subposet with a unique minimum
/// or maximum is a cone and gives 0.
pub fn reduced_euler_characteristic(elements: &[Hypertree]) -> Result<i64> {
    Ok(chain_counts(elements)?.reduced_euler_characteristic())
}

/// The materialized poset of all hypertrees on `[n]`.
#[derive(Debug)]
pub struct HypertreePoset {
    n: u32,
    elements: Vec<Hypertree>,
    /// `above[i]` lists indices strictly above element `i`, ascending.
    above: Vec<Vec<u32>>,
}

static POSET_CACHE: Lazy<Mutex<HashMap<u32, Arc<HypertreePoset>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl HypertreePoset {
    /// Build (or fetch the memoized) poset for `[n]`.
    pub fn for_n(n: u32) -> Result<Arc<HypertreePoset>> {
        if let Some(hit) = POSET_CACHE.lock().unwrap().get(&n) {
            return Ok(Arc::clone(hit));
        }
        let built = Arc::new(HypertreePoset::build(n)?);
        POSET_CACHE
            .lock()
            .unwrap()
            .insert(n, Arc::clone(&built));
        Ok(built)
    }

    fn build(n: u32) -> Result<HypertreePoset> {
        let elements = enumerate_hypertrees(n)?;
        let m = elements.len();
        let mut above: Vec<Vec<u32>> = vec![Vec::new(); m];
        for i in 0..m {
            for j in 0..m {
                // comparable pairs have strictly increasing rank
                if elements[i].rank() < elements[j].rank()
                    && leq(&elements[i], &elements[j])?
                {
                    above[i].push(j as u32);
                }
            }
        }
        Ok(HypertreePoset { n, elements, above })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[Hypertree] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The nuclear vertex: the unique minimum, a single edge on all of `[n]`.
    pub fn nuclear_vertex(&self) -> &Hypertree {
        self.elements
            .iter()
            .min_by_key(|t| t.rank())
            .expect("poset is nonempty")
    }

    fn index_of(&self, t: &Hypertree) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    /// Everything strictly above `t`, in canonical order.
    pub fn upper_set_strict(&self, t: &Hypertree) -> Result<Vec<Hypertree>> {
        if t.n() != self.n {
            return Err(Error::MismatchedGroundSet(t.n(), self.n));
        }
        match self.index_of(t) {
            Some(i) => Ok(self
                .above[i]
                .iter()
                .map(|&j| self.elements[j as usize].clone())
                .collect()),
            None => Ok(self
                .elements
                .iter()
                .filter(|u| *u != t && leq(t, u).unwrap_or(false))
                .cloned()
                .collect()),
        }
    }

    /// Elements with nothing strictly above them.
    pub fn maximal_elements(&self) -> Vec<Hypertree> {
        self.elements
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.above[i].is_empty())
            .map(|(_, t)| t.clone())
            .collect()
    }

    /// Histogram of ranks.
    pub fn rank_histogram(&self) -> BTreeMap<u32, u64> {
        let mut hist = BTreeMap::new();
        for t in &self.elements {
            *hist.entry(t.rank()).or_insert(0u64) += 1;
        }
        hist
    }

    /// Histogram of shapes, keyed by (edge-size multiset, valence multiset).
    /// The valence multiset is needed to separate shapes with the same edge
    /// sizes, e.g. simplicial arcs from simplicial stars.
    pub fn shape_histogram(&self) -> BTreeMap<(Vec<u32>, Vec<u32>), u64> {
        let mut hist = BTreeMap::new();
        for t in &self.elements {
            let mut valences = t.valences();
            valences.sort_unstable();
            match hist.entry((t.edge_sizes(), valences)) {
                Entry::Vacant(e) => {
                    e.insert(1);
                }
                Entry::Occupied(mut e) => *e.get_mut() += 1,
            }
        }
        hist
    }
}

/// Multiset of edge sizes of `t`; the upper set of `t` decomposes as a
/// product of hypertree posets, one factor per edge, so its size is the
/// product of `|HT_j|` over this multiset.
pub fn interval_edge_sizes(t: &Hypertree) -> Vec<u32> {
    t.edge_sizes()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ht(n: u32, edges: &[&[u32]]) -> Hypertree {
        Hypertree::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn nuclear_vertex_is_minimum() {
        let poset = HypertreePoset::for_n(4).unwrap();
        let bottom = poset.nuclear_vertex();
        assert_eq!(bottom.edges(), &[vec![1, 2, 3, 4]]);
        for t in poset.elements() {
            assert!(leq(bottom, t).unwrap());
            assert!(leq(t, t).unwrap()); // reflexive
        }
    }

    #[test]
    fn leq_rejects_mismatched_ground_sets() {
        let a = ht(3, &[&[1, 2, 3]]);
        let b = ht(4, &[&[1, 2, 3, 4]]);
        assert!(matches!(
            leq(&a, &b),
            Err(Error::MismatchedGroundSet(3, 4))
        ));
    }

    #[test]
    fn partial_order_laws_small() {
        for n in 2..=4u32 {
            let poset = HypertreePoset::for_n(n).unwrap();
            let els = poset.elements();
            for a in els {
                for b in els {
                    let ab = leq(a, b).unwrap();
                    let ba = leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b); // antisymmetric
                    }
                    if ab {
                        for c in els {
                            if leq(b, c).unwrap() {
                                assert!(leq(a, c).unwrap()); // transitive
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cover_relations_increase_rank_by_one() {
        for n in 2..=5u32 {
            let poset = HypertreePoset::for_n(n).unwrap();
            let els = poset.elements();
            for a in els {
                for b in els {
                    if a != b && leq(a, b).unwrap() {
                        // cover: nothing strictly between
                        let is_cover = !els.iter().any(|c| {
                            c != a && c != b && leq(a, c).unwrap() && leq(c, b).unwrap()
                        });
                        if is_cover {
                            assert_eq!(b.rank(), a.rank() + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_elements_have_rank_n_minus_2() {
        let poset = HypertreePoset::for_n(5).unwrap();
        let maxes = poset.maximal_elements();
        assert_eq!(maxes.len(), 125);
        for t in &maxes {
            assert_eq!(t.rank(), 3);
            assert!(poset.upper_set_strict(t).unwrap().is_empty());
        }
    }

    #[test]
    fn upper_set_of_bottom_in_ht4() {
        let poset = HypertreePoset::for_n(4).unwrap();
        let up = poset.upper_set_strict(poset.nuclear_vertex()).unwrap();
        assert_eq!(up.len(), 28);
    }

    #[test]
    fn reduced_euler_characteristic_basics() {
        // empty subposet: only the empty simplex
        assert_eq!(reduced_euler_characteristic(&[]).unwrap(), -1);
        // a cone (unique minimum) is contractible
        let poset = HypertreePoset::for_n(3).unwrap();
        assert_eq!(
            reduced_euler_characteristic(poset.elements()).unwrap(),
            0
        );
    }

    #[test]
    fn mobius_values_small() {
        // reduced chi of HT_{n+1} above the bottom is (-1)^n n^(n-1)
        for (n, want) in [(1u32, -1i64), (2, 2), (3, -9), (4, 64)] {
            let poset = HypertreePoset::for_n(n + 1).unwrap();
            let up = poset.upper_set_strict(poset.nuclear_vertex()).unwrap();
            assert_eq!(
                reduced_euler_characteristic(&up).unwrap(),
                want,
                "n={n}"
            );
        }
    }

    #[test]
    fn chain_counts_three_points() {
        // HT_3 above the bottom: three incomparable elements
        let poset = HypertreePoset::for_n(3).unwrap();
        let up = poset.upper_set_strict(poset.nuclear_vertex()).unwrap();
        let summary = chain_counts(&up).unwrap();
        assert_eq!(summary.chain_counts, [(1u32, 3u64)].into_iter().collect());
        assert_eq!(summary.reduced_euler_characteristic(), 2);
    }

    #[test]
    fn interval_product_law() {
        // |{t' >= t}| = prod over edge sizes j of |HT_j|
        let mut ht_count: BTreeMap<u32, u64> = BTreeMap::new();
        for j in 1..=5 {
            ht_count.insert(j, enumerate_hypertrees(j).unwrap().len() as u64);
        }
        for n in 2..=5u32 {
            let poset = HypertreePoset::for_n(n).unwrap();
            for t in poset.elements() {
                let up = poset.upper_set_strict(t).unwrap().len() as u64 + 1;
                let want: u64 = interval_edge_sizes(t)
                    .iter()
                    .map(|j| ht_count[j])
                    .product();
                assert_eq!(up, want, "n={n}, t={t:?}");
            }
        }
    }

    #[test]
    fn example_interval_in_ht4() {
        let t = ht(4, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(interval_edge_sizes(&t), vec![2, 3]);
        let poset = HypertreePoset::for_n(4).unwrap();
        assert_eq!(poset.upper_set_strict(&t).unwrap().len() + 1, 4);
    }
}
