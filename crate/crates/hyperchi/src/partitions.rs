//! Set partitions of `[n]` and the partition lattice functions `f(n, k)`.
//!
//! Partitions are enumerated through restricted growth strings, which yields
//! each partition exactly once in a fixed lexicographic order.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::poly::{h_poly, linear_sum, rat_int, rat_pow, Polynomial};
use crate::{Error, Result};

/// A partition of `[n]` into nonempty blocks.
///
/// Canonical form: blocks ordered by least element, elements sorted inside
/// each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// `{"n":3,"blocks":[[1,2],[3]]}`
impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SetPartition", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("blocks", &self.blocks)?;
        s.end()
    }
}

/// All partitions of the label set `labels` into exactly `k` blocks, in
/// restricted-growth-string order. Blocks inherit the canonical form (they
/// are ordered by first appearance, i.e. by least element).
pub(crate) fn partitions_of_labels(labels: &[u32], k: usize) -> Vec<Vec<Vec<u32>>> {
    let n = labels.len();
    if k == 0 || k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(
        labels: &[u32],
        k: usize,
        pos: usize,
        used: usize,
        rgs: &mut [usize],
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        let n = labels.len();
        if pos == n {
            if used == k {
                let mut blocks = vec![Vec::new(); k];
                for (i, &b) in rgs.iter().enumerate() {
                    blocks[b].push(labels[i]);
                }
                out.push(blocks);
            }
            return;
        }
        // remaining positions must still be able to open k - used new blocks
        let remaining = n - pos;
        let max_new = used.min(k - 1) + 1;
        for b in 0..max_new.min(k) {
            let newly_used = used.max(b + 1);
            if k - newly_used <= remaining - 1 || newly_used == k {
                rgs[pos] = b;
                rec(labels, k, pos + 1, newly_used, rgs, out);
            }
        }
    }
    rec(labels, k, 0, 0, &mut rgs, &mut out);
    out
}

/// Every partition of `[n]` with exactly `k` blocks, each exactly once, in
/// canonical (restricted-growth-string) order. The count is the Stirling
/// number `S(n, k)`.
pub fn enumerate_partitions(n: u32, k: u32) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::BadVertexCount(0));
    }
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let labels: Vec<u32> = (1..=n).collect();
    Ok(partitions_of_labels(&labels, k as usize)
        .into_iter()
        .map(|blocks| SetPartition { n, blocks })
        .collect())
}

/// The three block-weight functions used by the partition lattice sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockWeightKind {
    /// Block `t` weighs `(s_t)^(|t|-1)`.
    LinearPower,
    /// Block `t` weighs the constant `|t|^(|t|-1)`.
    CardinalPower,
    /// Block `t` weighs `h_(|t|-1)(s_t)`.
    Abel,
}

impl BlockWeightKind {
    /// The weight polynomial of one block.
    pub fn weight(self, block: &[u32]) -> Polynomial {
        let size = block.len() as u32;
        match self {
            BlockWeightKind::LinearPower => {
                let s = linear_sum(block.iter().copied()).expect("blocks are nonempty");
                s.pow(size - 1)
            }
            BlockWeightKind::CardinalPower => {
                Polynomial::constant(rat_pow(&rat_int(size as i64), size - 1))
            }
            BlockWeightKind::Abel => {
                let s = linear_sum(block.iter().copied()).expect("blocks are nonempty");
                h_poly(size - 1, &s)
            }
        }
    }
}

/// The partition lattice function `f(n, k)`: the sum over all partitions of
/// `[n]` with `k` blocks of the product of per-block weights.
pub fn partition_lattice_function(n: u32, k: u32, kind: BlockWeightKind) -> Result<Polynomial> {
    let mut total = Polynomial::zero();
    for partition in enumerate_partitions(n, k)? {
        let mut prod = Polynomial::one();
        for block in partition.blocks() {
            prod = prod.mul(&kind.weight(block));
        }
        total = total.add(&prod);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binomial, stirling2};
    use crate::poly::{linear_sum_1n, Monomial};
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    #[test]
    fn partitions_3_2_in_canonical_order() {
        let ps = enumerate_partitions(3, 2).unwrap();
        let got: Vec<Vec<Vec<u32>>> = ps.iter().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![vec![1, 2], vec![3]],
                vec![vec![1, 3], vec![2]],
                vec![vec![1], vec![2, 3]],
            ]
        );
    }

    #[test]
    fn forced_shapes() {
        for n in 1..=6 {
            let all_singletons = enumerate_partitions(n, n).unwrap();
            assert_eq!(all_singletons.len(), 1);
            assert!(all_singletons[0].blocks().iter().all(|b| b.len() == 1));
            let one_block = enumerate_partitions(n, 1).unwrap();
            assert_eq!(one_block.len(), 1);
            assert_eq!(one_block[0].blocks()[0].len(), n as usize);
        }
        assert!(matches!(
            enumerate_partitions(3, 0),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate_partitions(3, 4),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn counts_match_stirling_numbers() {
        for n in 1..=9u32 {
            for k in 1..=n {
                let count = enumerate_partitions(n, k).unwrap().len();
                assert_eq!(BigInt::from(count), stirling2(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn no_duplicates() {
        for n in 1..=7u32 {
            for k in 1..=n {
                let ps = enumerate_partitions(n, k).unwrap();
                let mut seen = std::collections::HashSet::new();
                for p in &ps {
                    assert!(seen.insert(p.blocks().to_vec()));
                }
            }
        }
    }

    #[test]
    fn lattice_function_linear_power_3_2() {
        // blocks {a,b} and {c} weigh (x_a+x_b)^1 and (x_c)^0, so the three
        // two-block partitions sum to 2(x_1+x_2+x_3) = C(2,1) s_[3]
        let f = partition_lattice_function(3, 2, BlockWeightKind::LinearPower).unwrap();
        assert_eq!(f, linear_sum_1n(3).unwrap().scale(&crate::poly::rat(2, 1)));
    }

    #[test]
    fn plain_linear_weight_example() {
        // weighting every block by s_t itself (no power) gives the
        // well-known 2(x1x2 + x1x3 + x2x3) on (3,2); kept as a guard that
        // LinearPower is the powered weight, not this one
        let mut sum = Polynomial::zero();
        for p in enumerate_partitions(3, 2).unwrap() {
            let mut prod = Polynomial::one();
            for block in p.blocks() {
                prod = prod.mul(&linear_sum(block.iter().copied()).unwrap());
            }
            sum = sum.add(&prod);
        }
        let mut want = Polynomial::zero();
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            want.add_term(Monomial::from_pairs([(a, 1), (b, 1)]), rat_int(2));
        }
        assert_eq!(sum, want);
    }

    #[test]
    fn lattice_function_singletons_are_one() {
        for kind in [
            BlockWeightKind::LinearPower,
            BlockWeightKind::CardinalPower,
            BlockWeightKind::Abel,
        ] {
            let f = partition_lattice_function(5, 5, kind).unwrap();
            assert_eq!(f, Polynomial::one());
        }
    }

    #[test]
    fn lattice_function_cardinal_4_2() {
        let f = partition_lattice_function(4, 2, BlockWeightKind::CardinalPower).unwrap();
        assert_eq!(f, Polynomial::constant_int(48)); // C(3,1) * 4^2
        assert_eq!(binomial(3, 1) * BigInt::from(16), BigInt::from(48));
    }

    #[test]
    fn lattice_function_is_symmetric() {
        // invariant under transposing any two variables
        for (n, k, kind) in [
            (4, 2, BlockWeightKind::LinearPower),
            (5, 3, BlockWeightKind::Abel),
            (4, 3, BlockWeightKind::CardinalPower),
        ] {
            let f = partition_lattice_function(n, k, kind).unwrap();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let swap: BTreeMap<u32, Polynomial> = [
                        (i, Polynomial::var(j)),
                        (j, Polynomial::var(i)),
                    ]
                    .into_iter()
                    .collect();
                    assert_eq!(f.substitute(&swap), f, "n={n} k={k} swap {i}<->{j}");
                }
            }
        }
    }

    #[test]
    fn abel_weight_uses_h_basis() {
        // h_3(s) for the block {1,2,4,5} is s(s+3)^2
        let block = [1, 2, 4, 5];
        let w = BlockWeightKind::Abel.weight(&block);
        let s = linear_sum(block).unwrap();
        assert_eq!(w, s.mul(&s.add(&Polynomial::constant_int(3)).pow(2)));
        let _ = linear_sum_1n(5).unwrap();
    }
}
