//! Brute-force reference generators. These deliberately share no code with
//! the production enumerators: forests come from filtering raw parent
//! vectors, hypertrees and hyperforests from filtering raw edge families
//! through the public structural checks.
//!
//! Not every test binary uses every oracle.
#![allow(dead_code)]

use hyperchi::hypertrees::{is_hypertree, Hypertree, PlantedHyperforest};
use hyperchi::PlantedForest;

/// Every planted forest on `[n]` with `k` components, by enumerating all
/// parent vectors (each vertex independently a root or a child of any other
/// vertex) and keeping the acyclic ones.
pub fn brute_force_planted_forests(n: u32, k: u32) -> Vec<PlantedForest> {
    let mut out = Vec::new();
    let mut parent: Vec<Option<u32>> = vec![None; n as usize];
    fn rec(n: u32, k: u32, v: u32, parent: &mut Vec<Option<u32>>, out: &mut Vec<PlantedForest>) {
        if v > n {
            if parent.iter().filter(|p| p.is_none()).count() == k as usize {
                if let Ok(f) = PlantedForest::new(n, parent.clone()) {
                    out.push(f);
                }
            }
            return;
        }
        parent[v as usize - 1] = None;
        rec(n, k, v + 1, parent, out);
        for p in 1..=n {
            if p != v {
                parent[v as usize - 1] = Some(p);
                rec(n, k, v + 1, parent, out);
            }
        }
        parent[v as usize - 1] = None;
    }
    rec(n, k, 1, &mut parent, &mut out);
    out.sort();
    out
}

/// All subsets of `[n]` of size at least two, the candidate hyperedges.
fn candidate_edges(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let e: Vec<u32> = (0..n)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| b + 1)
            .collect();
        if e.len() >= 2 {
            out.push(e);
        }
    }
    out
}

/// Every family of candidate edges whose weights `|e| - 1` sum to `budget`.
fn edge_families(n: u32, budget: u32) -> Vec<Vec<Vec<u32>>> {
    let candidates = candidate_edges(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        candidates: &[Vec<u32>],
        start: usize,
        left: u32,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if left == 0 {
            out.push(chosen.iter().map(|&i| candidates[i].clone()).collect());
            return;
        }
        for idx in start..candidates.len() {
            let w = candidates[idx].len() as u32 - 1;
            if w <= left {
                chosen.push(idx);
                rec(candidates, idx + 1, left - w, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&candidates, 0, budget, &mut chosen, &mut out);
    out
}

/// Every hypertree on `[n]`: all edge families with total weight `n - 1`,
/// filtered through the public hypertree check.
pub fn brute_force_hypertrees(n: u32) -> Vec<Hypertree> {
    let mut out = Vec::new();
    for family in edge_families(n, n - 1) {
        if is_hypertree(n, &family).unwrap() {
            out.push(Hypertree::new(n, family).unwrap());
        }
    }
    out.sort();
    out
}

/// Every planted hyperforest on `[n]` with `k` components: edge families
/// with total weight `n - k`, combined with every root assignment that the
/// structural validator accepts.
pub fn brute_force_planted_hyperforests(n: u32, k: u32) -> Vec<PlantedHyperforest> {
    let mut out = Vec::new();
    for family in edge_families(n, n - k) {
        for roots in subsets_of_size(n, k) {
            if let Ok(f) = PlantedHyperforest::new(n, family.clone(), roots) {
                out.push(f);
            }
        }
    }
    out.sort();
    out
}

fn subsets_of_size(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: u32, k: u32, next: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for v in next..=n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}
