//! Brute-force enumerators used as ground truth for the counting formulas.
//!
//! Each enumerator walks every object it counts. Every count has a recursive
//! and an iterative implementation built on different constructions, and the
//! two are compared in tests so an oracle cannot silently share a bug with
//! the formula it checks.
//!
//! [`enum_graded_chains`] is experimental: it counts level-to-level relation
//! chains of a given type under three readings of "k-level graded poset".

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chain::{complete_chain, CobwebChain, LevelSequence};
use crate::counting::{BigCount, CompositionType};
use crate::error::{Error, Result};
use crate::ferrers::{masks_nested, next_combination};
use crate::matrix::BoolMatrix;

pub const ORDERED_PARTITION_MAX_N: usize = 10;
pub const PRODUCT_SUBSETS_MAX_CELLS: usize = 20;
pub const SURJECTION_MAX_MAPS: u64 = 10_000_000;
pub const COMPLETE_COBWEB_MAX_N: usize = 8;
pub const GRADED_CHAIN_MAX_ARCS: usize = 20;

/// Level chain with arbitrary blocks; the carrier for the experimental
/// graded-poset counts.
pub type GradedRelationChain = CobwebChain;

/// Blocks of an ordered set partition of `{0..n}`, each block ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedPartition(Vec<Vec<usize>>);

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Argument(
                    "ordered partition has an empty block".into(),
                ));
            }
            for &e in b {
                if e >= n || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::Argument(format!(
                        "element {e} repeated or outside 0..{n}"
                    )));
                }
            }
        }
        let mut blocks = blocks;
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        Ok(Self(blocks))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }

    /// `labels[e]` is the index of the block holding `e`.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.0.iter().map(Vec::len).sum();
        let mut labels = vec![0; n];
        for (i, b) in self.0.iter().enumerate() {
            for &e in b {
                labels[e] = i;
            }
        }
        labels
    }
}

/// Blocks written as `{a,b} {c}`.
impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .0
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        f.write_str(&blocks.join(" "))
    }
}

fn require_n(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument(format!("{what}: n must be positive")));
    }
    if n > max {
        return Err(Error::Size(format!(
            "{what} is limited to n <= {max}, got {n}"
        )));
    }
    Ok(())
}

fn require_type_total(n: usize, t: &CompositionType) -> Result<()> {
    if t.total() != n {
        return Err(Error::Argument(format!(
            "parts of {t} sum to {}, not {n}",
            t.total()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ordered partitions

/// Streams ordered partitions of `{0..n}` (into exactly `k` blocks when
/// given). Order: the first block runs over non-empty subsets of the
/// remaining elements by ascending bitmask, recursively.
pub fn for_each_ordered_partition(
    n: usize,
    k: Option<usize>,
    mut visit: impl FnMut(&OrderedPartition),
) -> Result<()> {
    require_n(n, ORDERED_PARTITION_MAX_N, "ordered partition enumeration")?;
    let mut blocks = Vec::new();
    first_block_recursion((1u32 << n) - 1, k, &mut blocks, &mut |b| {
        visit(&OrderedPartition(b.to_vec()))
    });
    Ok(())
}

fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn first_block_recursion(
    remaining: u32,
    k: Option<usize>,
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if remaining == 0 {
        if k.is_none_or(|k| k == blocks.len()) {
            visit(blocks);
        }
        return;
    }
    if k.is_some_and(|k| blocks.len() >= k) {
        return;
    }
    let mut sub = 1u32;
    while sub <= remaining {
        if sub & !remaining == 0 {
            blocks.push(mask_elements(sub));
            first_block_recursion(remaining & !sub, k, blocks, visit);
            blocks.pop();
        }
        sub += 1;
    }
}

/// Count of ordered partitions by the first-block recursion.
pub fn enum_ordered_partitions(n: usize, k: Option<usize>) -> Result<BigCount> {
    let mut count = 0u64;
    for_each_ordered_partition(n, k, |_| count += 1)?;
    Ok(count.into())
}

/// Count of ordered partitions by element insertion: element `i` either
/// joins one of the `m` existing blocks or opens a new block at one of
/// `m + 1` positions. Walks the choice sequences with an odometer.
pub fn enum_ordered_partitions_iterative(n: usize, k: Option<usize>) -> Result<BigCount> {
    let mut count = 0u64;
    for_each_ordered_partition_by_insertion(n, |p| {
        if k.is_none_or(|k| k == p.blocks().len()) {
            count += 1;
        }
    })?;
    Ok(count.into())
}

fn for_each_ordered_partition_by_insertion(
    n: usize,
    mut visit: impl FnMut(&OrderedPartition),
) -> Result<()> {
    require_n(n, ORDERED_PARTITION_MAX_N, "ordered partition enumeration")?;
    // choices[i] < m_i joins block choices[i]; otherwise opens a new block
    // at position choices[i] − m_i
    let mut choices = vec![0usize; n];
    let mut blocks_before = vec![0usize; n + 1];
    let refresh = |choices: &[usize], blocks_before: &mut [usize], from: usize| {
        for i in from..choices.len() {
            blocks_before[i + 1] = blocks_before[i] + usize::from(choices[i] >= blocks_before[i]);
        }
    };
    refresh(&choices, &mut blocks_before, 0);
    loop {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (e, &c) in choices.iter().enumerate() {
            let m = blocks.len();
            if c < m {
                blocks[c].push(e);
            } else {
                blocks.insert(c - m, vec![e]);
            }
        }
        visit(&OrderedPartition(blocks));

        let Some(i) = (0..n)
            .rev()
            .find(|&i| choices[i] + 1 < 2 * blocks_before[i] + 1)
        else {
            return Ok(());
        };
        choices[i] += 1;
        choices[i + 1..].iter_mut().for_each(|c| *c = 0);
        refresh(&choices, &mut blocks_before, i);
    }
}

// ---------------------------------------------------------------------------
// ordered partitions of a fixed type

/// Ordered partitions whose `i`-th block has size `t_i`, by choosing each
/// block as a combination of the remaining elements.
pub fn enum_ordered_partitions_of_type(n: usize, t: &CompositionType) -> Result<BigCount> {
    let mut count = 0u64;
    for_each_partition_of_type(n, t, |_| count += 1)?;
    Ok(count.into())
}

/// Streams ordered partitions of type `t`, blocks chosen in lexicographic
/// order of combinations of the remaining elements.
pub fn for_each_partition_of_type(
    n: usize,
    t: &CompositionType,
    mut visit: impl FnMut(&OrderedPartition),
) -> Result<()> {
    require_n(n, ORDERED_PARTITION_MAX_N, "typed partition enumeration")?;
    require_type_total(n, t)?;
    let remaining: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    typed_recursion(&remaining, t.parts(), &mut blocks, &mut |b| {
        visit(&OrderedPartition(b.to_vec()))
    });
    Ok(())
}

fn typed_recursion(
    remaining: &[usize],
    sizes: &[usize],
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let Some((&size, rest)) = sizes.split_first() else {
        visit(blocks);
        return;
    };
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let block: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
        let left: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(_, &e)| e)
            .collect();
        blocks.push(block);
        typed_recursion(&left, rest, blocks, visit);
        blocks.pop();
        if !next_combination(&mut idx, remaining.len()) {
            break;
        }
    }
}

/// Same count by walking the distinct permutations of the label word
/// `0^{t_1} 1^{t_2} …` in lexicographic order.
pub fn enum_ordered_partitions_of_type_iterative(
    n: usize,
    t: &CompositionType,
) -> Result<BigCount> {
    let mut count = 0u64;
    for_each_label_permutation(n, t, |_| count += 1)?;
    Ok(count.into())
}

fn for_each_label_permutation(
    n: usize,
    t: &CompositionType,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    require_n(n, ORDERED_PARTITION_MAX_N, "typed partition enumeration")?;
    require_type_total(n, t)?;
    let mut labels: Vec<usize> = t
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &f)| std::iter::repeat_n(i, f))
        .collect();
    loop {
        visit(&labels);
        if !next_permutation(&mut labels) {
            return Ok(());
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// subsets of a product set

fn product_tuples_recursive(parts: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some((&f, rest)) = parts.split_first() else {
        out.push(prefix.clone());
        return;
    };
    for x in 0..f {
        prefix.push(x);
        product_tuples_recursive(rest, prefix, out);
        prefix.pop();
    }
}

fn require_product_bound(t: &CompositionType) -> Result<usize> {
    let cells = t
        .parts()
        .iter()
        .try_fold(1usize, |acc, &f| acc.checked_mul(f))
        .filter(|&c| c <= PRODUCT_SUBSETS_MAX_CELLS)
        .ok_or_else(|| {
            Error::Size(format!(
                "product of {t} exceeds {PRODUCT_SUBSETS_MAX_CELLS} tuples"
            ))
        })?;
    Ok(cells)
}

/// Non-empty subsets of `V_1 × … × V_k`, by an include/exclude recursion
/// over the materialized tuples.
pub fn enum_nonempty_subsets_of_product(t: &CompositionType) -> Result<BigCount> {
    require_product_bound(t)?;
    let mut tuples = Vec::new();
    product_tuples_recursive(t.parts(), &mut Vec::new(), &mut tuples);
    fn walk(tuples: &[Vec<usize>], chosen: usize) -> u64 {
        match tuples.split_first() {
            None => u64::from(chosen > 0),
            Some((_, rest)) => walk(rest, chosen + 1) + walk(rest, chosen),
        }
    }
    Ok(walk(&tuples, 0).into())
}

/// Same count by an odometer over the tuples and a bitmask walk over
/// subsets.
pub fn enum_nonempty_subsets_of_product_iterative(t: &CompositionType) -> Result<BigCount> {
    let cells = require_product_bound(t)?;
    let parts = t.parts();
    let mut tuples = Vec::with_capacity(cells);
    let mut digits = vec![0usize; parts.len()];
    'odometer: loop {
        tuples.push(digits.clone());
        for i in (0..parts.len()).rev() {
            digits[i] += 1;
            if digits[i] < parts[i] {
                continue 'odometer;
            }
            digits[i] = 0;
        }
        break;
    }
    debug_assert_eq!(tuples.len(), cells);
    let count = (0..1u64 << tuples.len())
        .filter(|mask| (0..tuples.len()).any(|i| mask >> i & 1 == 1))
        .count();
    Ok((count as u64).into())
}

// ---------------------------------------------------------------------------
// surjections

fn require_surjection_bound(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::Argument("n and k must be positive".into()));
    }
    let maps = (k as u64).checked_pow(n as u32);
    if maps.is_none_or(|m| m > SURJECTION_MAX_MAPS) {
        return Err(Error::Size(format!(
            "{k}^{n} maps exceed the {SURJECTION_MAX_MAPS} enumeration budget"
        )));
    }
    Ok(())
}

/// Maps `{0..n} → {0..k}` hitting every target, by recursive assignment.
pub fn enum_surjections(n: usize, k: usize) -> Result<BigCount> {
    require_surjection_bound(n, k)?;
    fn assign(left: usize, k: usize, hit: u64) -> u64 {
        if left == 0 {
            return u64::from(hit.count_ones() as usize == k);
        }
        (0..k).map(|v| assign(left - 1, k, hit | 1 << v)).sum()
    }
    Ok(assign(n, k, 0).into())
}

/// Same count by an odometer over all `k^n` maps.
pub fn enum_surjections_iterative(n: usize, k: usize) -> Result<BigCount> {
    require_surjection_bound(n, k)?;
    let mut map = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let mut hit = vec![false; k];
        map.iter().for_each(|&v| hit[v] = true);
        if hit.iter().all(|&h| h) {
            count += 1;
        }
        let Some(i) = (0..n).rev().find(|&i| map[i] + 1 < k) else {
            break;
        };
        map[i] += 1;
        map[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(count.into())
}

// ---------------------------------------------------------------------------
// labeled complete cobwebs

/// Strict order of the complete cobweb whose level `r` is the block of
/// `labels` value `r`, as a row-major cell mask over `n × n`.
fn labeled_order_mask(template: &BoolMatrix, position: &[usize]) -> u64 {
    let n = position.len();
    let mut mask = 0u64;
    for (u, &pu) in position.iter().enumerate() {
        for (v, &pv) in position.iter().enumerate() {
            if template.get(pu, pv) {
                mask |= 1 << (u * n + v);
            }
        }
    }
    mask
}

/// Positions in the template chain's vertex order for each element.
fn positions_from_labels(labels: &[usize], levels: &LevelSequence) -> Vec<usize> {
    let mut next: Vec<usize> = (0..levels.len()).map(|r| levels.offset(r)).collect();
    labels
        .iter()
        .map(|&l| {
            let p = next[l];
            next[l] += 1;
            p
        })
        .collect()
}

fn complete_cobweb_setup(n: usize, t: &CompositionType) -> Result<BoolMatrix> {
    require_n(n, COMPLETE_COBWEB_MAX_N, "complete cobweb enumeration")?;
    require_type_total(n, t)?;
    let levels = LevelSequence::new(t.parts().to_vec())?;
    Ok(complete_chain(&levels)?.strict_order_matrix())
}

/// Distinct labeled complete cobweb posets of type `t` on `{0..n}`: each
/// ordered partition of type `t` places its blocks on the levels, and the
/// resulting strict orders are collected as a set.
pub fn enum_complete_cobwebs(n: usize, t: &CompositionType) -> Result<BigCount> {
    let template = complete_cobweb_setup(n, t)?;
    let levels = LevelSequence::new(t.parts().to_vec())?;
    let mut posets = BTreeSet::new();
    for_each_partition_of_type(n, t, |p| {
        let position = positions_from_labels(&p.labels(), &levels);
        posets.insert(labeled_order_mask(&template, &position));
    })?;
    Ok(posets.len().into())
}

/// Same set built from label-word permutations.
pub fn enum_complete_cobwebs_iterative(n: usize, t: &CompositionType) -> Result<BigCount> {
    let template = complete_cobweb_setup(n, t)?;
    let levels = LevelSequence::new(t.parts().to_vec())?;
    let mut posets = BTreeSet::new();
    for_each_label_permutation(n, t, |labels| {
        let position = positions_from_labels(labels, &levels);
        posets.insert(labeled_order_mask(&template, &position));
    })?;
    Ok(posets.len().into())
}

// ---------------------------------------------------------------------------
// experimental graded chains

/// Which level-to-level relation chains count as graded posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradedConstraint {
    /// Any blocks.
    AllBlocks,
    /// Every non-top vertex has an out-arc and every non-bottom vertex an
    /// in-arc: no block has an empty row or column.
    NoEmptyRowCol,
    /// Every block is Ferrers.
    FerrersBlocks,
}

impl GradedConstraint {
    pub const ALL: [GradedConstraint; 3] = [
        GradedConstraint::AllBlocks,
        GradedConstraint::NoEmptyRowCol,
        GradedConstraint::FerrersBlocks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GradedConstraint::AllBlocks => "all-blocks",
            GradedConstraint::NoEmptyRowCol => "no-empty-row-col",
            GradedConstraint::FerrersBlocks => "ferrers-blocks",
        }
    }

    /// Block given as row masks over `cols` columns.
    fn accepts(self, rows: &[u64], cols: usize) -> bool {
        match self {
            GradedConstraint::AllBlocks => true,
            GradedConstraint::NoEmptyRowCol => {
                rows.iter().all(|&r| r != 0)
                    && rows.iter().fold(0, |acc, &r| acc | r) == (1u64 << cols) - 1
            }
            GradedConstraint::FerrersBlocks => masks_nested(rows),
        }
    }
}

impl fmt::Display for GradedConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GradedConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown constraint `{s}`")))
    }
}

fn graded_arc_count(t: &CompositionType) -> Result<usize> {
    let arcs: usize = t.parts().windows(2).map(|w| w[0] * w[1]).sum();
    if arcs > GRADED_CHAIN_MAX_ARCS {
        return Err(Error::Size(format!(
            "type {t} has {arcs} potential arcs, limit is {GRADED_CHAIN_MAX_ARCS}"
        )));
    }
    Ok(arcs)
}

fn split_rows(mask: u64, rows: usize, cols: usize) -> Vec<u64> {
    (0..rows)
        .map(|r| (mask >> (r * cols)) & ((1u64 << cols) - 1))
        .collect()
}

/// Streams every chain of type `t` satisfying `constraint`. The arc bits of
/// all blocks, concatenated row-major block by block, are walked as one
/// ascending integer.
pub fn for_each_graded_chain(
    t: &CompositionType,
    constraint: GradedConstraint,
    mut visit: impl FnMut(&GradedRelationChain),
) -> Result<()> {
    let arcs = graded_arc_count(t)?;
    let levels = LevelSequence::new(t.parts().to_vec())?;
    let shapes: Vec<(usize, usize)> = t.parts().windows(2).map(|w| (w[0], w[1])).collect();
    for mask in 0..1u64 << arcs {
        let mut shift = 0;
        let mut blocks = Vec::with_capacity(shapes.len());
        let mut ok = true;
        for &(f, g) in &shapes {
            let cells = (mask >> shift) & ((1u64 << (f * g)) - 1);
            shift += f * g;
            if !constraint.accepts(&split_rows(cells, f, g), g) {
                ok = false;
                break;
            }
            blocks.push(BoolMatrix::from_cell_mask(f, g, cells)?);
        }
        if ok {
            visit(&CobwebChain::new(levels.clone(), blocks)?);
        }
    }
    Ok(())
}

/// Experimental count of graded relation chains of type `t`, by a single
/// mask walk over all arcs.
pub fn enum_graded_chains(t: &CompositionType, constraint: GradedConstraint) -> Result<BigCount> {
    let arcs = graded_arc_count(t)?;
    let shapes: Vec<(usize, usize)> = t.parts().windows(2).map(|w| (w[0], w[1])).collect();
    let count = (0..1u64 << arcs)
        .filter(|&mask| {
            let mut shift = 0;
            shapes.iter().all(|&(f, g)| {
                let cells = (mask >> shift) & ((1u64 << (f * g)) - 1);
                shift += f * g;
                constraint.accepts(&split_rows(cells, f, g), g)
            })
        })
        .count();
    Ok((count as u64).into())
}

/// Same count by recursing block by block.
pub fn enum_graded_chains_recursive(
    t: &CompositionType,
    constraint: GradedConstraint,
) -> Result<BigCount> {
    graded_arc_count(t)?;
    fn walk(parts: &[usize], constraint: GradedConstraint) -> u64 {
        let [f, g, ..] = parts else {
            return 1;
        };
        let (f, g) = (*f, *g);
        let mut total = 0;
        for cells in 0..1u64 << (f * g) {
            let rows: Vec<u64> = (0..f)
                .map(|r| (cells >> (r * g)) & ((1 << g) - 1))
                .collect();
            if constraint.accepts(&rows, g) {
                total += walk(&parts[1..], constraint);
            }
        }
        total
    }
    Ok(walk(t.parts(), constraint).into())
}

/// Experimental total over every composition of `n`.
pub fn enum_graded_total(n: usize, constraint: GradedConstraint) -> Result<BigCount> {
    crate::counting::compositions(n, None)?
        .map(|t| enum_graded_chains(&t, constraint))
        .sum()
}
