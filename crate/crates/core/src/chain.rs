//! Cobweb chains: graded digraphs given by level sizes and the biadjacency
//! blocks between consecutive levels.
//!
//! Level `r` (0-based here, `Φ_{r+1}` in the usual notation) occupies the
//! contiguous global vertex range `[Σ_{j<r} f_j, Σ_{j≤r} f_j)`. Every matrix
//! this module produces uses that vertex order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ferrers;
use crate::matrix::BoolMatrix;
use crate::text::{parse_usize, LineCursor};

/// Positive level sizes `⟨f_1, …, f_k⟩`, `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Argument(
                "a level sequence needs at least one level".into(),
            ));
        }
        if let Some(r) = sizes.iter().position(|&f| f == 0) {
            return Err(Error::Argument(format!("level {r} has size 0")));
        }
        Ok(Self(sizes))
    }

    /// Parses comma-separated sizes such as `1,2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let sizes = text
            .split(',')
            .map(|t| parse_usize(1, t.trim(), "level size"))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of levels `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Total vertex count `N`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Global index of the first vertex of `level`.
    pub fn offset(&self, level: usize) -> usize {
        self.0[..level].iter().sum()
    }

    pub fn level_range(&self, level: usize) -> std::ops::Range<usize> {
        let start = self.offset(level);
        start..start + self.0[level]
    }
}

/// Global vertex index in `0..N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn from_level(levels: &LevelSequence, level: usize, position: usize) -> Result<Self> {
        if level >= levels.len() || position >= levels.sizes()[level] {
            return Err(Error::Bounds(format!(
                "vertex ({level},{position}) not in levels {:?}",
                levels.sizes()
            )));
        }
        Ok(VertexId(levels.offset(level) + position))
    }

    /// `(level, position within level)`.
    pub fn locate(self, levels: &LevelSequence) -> Result<(usize, usize)> {
        let mut start = 0;
        for (r, &f) in levels.sizes().iter().enumerate() {
            if self.0 < start + f {
                return Ok((r, self.0 - start));
            }
            start += f;
        }
        Err(Error::Bounds(format!(
            "vertex {} out of range for {} vertices",
            self.0,
            levels.total()
        )))
    }
}

/// Graded digraph: levels plus `k − 1` inter-level biadjacency blocks,
/// block `i` of size `f_i × f_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CobwebChain {
    levels: LevelSequence,
    blocks: Vec<BoolMatrix>,
}

impl CobwebChain {
    pub fn new(levels: LevelSequence, blocks: Vec<BoolMatrix>) -> Result<Self> {
        if blocks.len() + 1 != levels.len() {
            return Err(Error::Shape(format!(
                "{} levels need {} blocks, got {}",
                levels.len(),
                levels.len() - 1,
                blocks.len()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            let (f, g) = (levels.sizes()[i], levels.sizes()[i + 1]);
            if b.rows() != f || b.cols() != g {
                return Err(Error::Shape(format!(
                    "block {i} is {}x{}, levels require {f}x{g}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(Self { levels, blocks })
    }

    pub fn levels(&self) -> &LevelSequence {
        &self.levels
    }

    pub fn blocks(&self) -> &[BoolMatrix] {
        &self.blocks
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.total()
    }

    /// Level index of `id`.
    pub fn level_of(&self, id: VertexId) -> Result<usize> {
        id.locate(&self.levels).map(|(r, _)| r)
    }

    /// Copy of the chain with the listed `(row, col)` arcs of one block removed.
    pub fn delete_arcs(&self, block_index: usize, arcs: &BTreeSet<(usize, usize)>) -> Result<Self> {
        let Some(block) = self.blocks.get(block_index) else {
            return Err(Error::Bounds(format!(
                "block index {block_index} out of range for {} blocks",
                self.blocks.len()
            )));
        };
        let mut block = block.clone();
        for &(r, c) in arcs {
            block.try_get(r, c)?;
            block.set(r, c, false);
        }
        let mut out = self.clone();
        out.blocks[block_index] = block;
        Ok(out)
    }

    /// Glues `self` and `next` along `self`'s last level and `next`'s first
    /// level, identified position by position.
    pub fn natural_join(&self, next: &CobwebChain) -> Result<Self> {
        let left = *self.levels.sizes().last().expect("non-empty levels");
        let right = next.levels.sizes()[0];
        if left != right {
            return Err(Error::JoinCondition { left, right });
        }
        let mut sizes = self.levels.sizes().to_vec();
        sizes.extend_from_slice(&next.levels.sizes()[1..]);
        let mut blocks = self.blocks.clone();
        blocks.extend(next.blocks.iter().cloned());
        Self::new(LevelSequence(sizes), blocks)
    }

    /// `N × N` Hasse adjacency: block `(r, r+1)` holds `blocks[r]`, every
    /// other entry is zero.
    pub fn adjacency_matrix(&self) -> BoolMatrix {
        let n = self.vertex_count();
        let mut a = BoolMatrix::zeros_unchecked(n, n);
        for (r, b) in self.blocks.iter().enumerate() {
            let (r0, c0) = (self.levels.offset(r), self.levels.offset(r + 1));
            for (i, j) in b.ones_iter() {
                a.set(r0 + i, c0 + j, true);
            }
        }
        a
    }

    /// `diag(B_1, …, B_{k−1})`. Single-level chains have no blocks and are
    /// rejected.
    pub fn biadjacency_diag(&self) -> Result<BoolMatrix> {
        if self.blocks.is_empty() {
            return Err(Error::Argument(
                "a single-level chain has no biadjacency blocks".into(),
            ));
        }
        BoolMatrix::direct_sum(&self.blocks)
    }

    /// Reflexive order `≤` of the associated poset, as the Boolean geometric
    /// series of the adjacency matrix.
    pub fn zeta_matrix(&self) -> BoolMatrix {
        self.adjacency_matrix()
            .boolean_geometric_series()
            .expect("adjacency matrix is square")
    }

    /// Strict order `<`: the zeta matrix with its diagonal cleared.
    pub fn strict_order_matrix(&self) -> BoolMatrix {
        let mut z = self.zeta_matrix();
        for i in 0..z.rows() {
            z.set(i, i, false);
        }
        z
    }

    pub fn leq(&self, u: VertexId, v: VertexId) -> Result<bool> {
        let n = self.vertex_count();
        if u.0 >= n || v.0 >= n {
            return Err(Error::Bounds(format!(
                "vertices ({}, {}) out of range for {n} vertices",
                u.0, v.0
            )));
        }
        Ok(self.zeta_matrix().get(u.0, v.0))
    }

    /// Every block all-ones (a KoDAG).
    pub fn is_complete(&self) -> bool {
        self.blocks.iter().all(BoolMatrix::is_all_ones)
    }

    /// Every block Ferrers (dimension 1).
    pub fn is_cobweb(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| ferrers::is_ferrers_dim1(b).is_dim1)
    }

    /// Chain file format: `k`, then the sizes, then the `k − 1` blocks in
    /// matrix text format separated by blank lines.
    pub fn to_text(&self) -> String {
        let sizes: Vec<String> = self
            .levels
            .sizes()
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut s = format!("{}\n{}\n", self.levels.len(), sizes.join(" "));
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                s.push('\n');
            }
            s.push_str(&b.to_text());
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cursor = LineCursor::new(text);
        cursor.skip_blank();
        let (line, k_text) = cursor.expect_line("level count")?;
        let k = parse_usize(line, k_text.trim(), "level count")?;
        let (line, sizes_text) = cursor.expect_line("level sizes")?;
        let sizes = sizes_text
            .split_whitespace()
            .map(|t| parse_usize(line, t, "level size"))
            .collect::<Result<Vec<_>>>()?;
        if sizes.len() != k {
            return Err(Error::parse(
                line,
                format!("expected {k} level sizes, found {}", sizes.len()),
            ));
        }
        let levels = LevelSequence::new(sizes).map_err(|e| Error::parse(line, e.to_string()))?;
        let mut blocks = Vec::with_capacity(k.saturating_sub(1));
        for _ in 1..k {
            let at = cursor.line_no();
            let b = BoolMatrix::parse_from(&mut cursor)?;
            blocks.push((at, b));
        }
        if !cursor.at_end() {
            return Err(Error::parse(
                cursor.line_no(),
                "trailing content after chain",
            ));
        }
        let at = blocks.last().map_or(line, |(at, _)| *at);
        Self::new(levels, blocks.into_iter().map(|(_, b)| b).collect())
            .map_err(|e| Error::parse(at, e.to_string()))
    }

    /// Reads `k − 1` blocks for `levels` from matrix text separated by
    /// blank lines.
    pub fn parse_blocks(levels: LevelSequence, text: &str) -> Result<Self> {
        let mut cursor = LineCursor::new(text);
        let mut blocks = Vec::new();
        while !cursor.at_end() {
            blocks.push(BoolMatrix::parse_from(&mut cursor)?);
        }
        Self::new(levels, blocks)
    }

    /// Graphviz rendering: one rank-aligned subgraph per level, arcs from
    /// lower to higher level, vertices named `L<r>_<i>` with 1-based level
    /// `r` and 0-based position `i`.
    pub fn to_dot(&self) -> String {
        let name = |r: usize, i: usize| format!("L{}_{}", r + 1, i);
        let mut s = String::from("digraph cobweb {\n  rankdir=BT;\n  node [shape=circle];\n");
        for (r, &f) in self.levels.sizes().iter().enumerate() {
            let _ = write!(s, "  subgraph level_{} {{\n    rank=same;\n", r + 1);
            for i in 0..f {
                let _ = writeln!(s, "    {0} [label=\"{0}\"];", name(r, i));
            }
            s.push_str("  }\n");
        }
        for (r, b) in self.blocks.iter().enumerate() {
            for (i, j) in b.ones_iter() {
                let _ = writeln!(s, "  {} -> {};", name(r, i), name(r + 1, j));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Two-level chain with an all-ones `p × l` block.
pub fn dibiclique(p: usize, l: usize) -> Result<CobwebChain> {
    if p == 0 || l == 0 {
        return Err(Error::Argument(format!(
            "di-biclique sizes must be positive, got {p} and {l}"
        )));
    }
    complete_chain(&LevelSequence(vec![p, l]))
}

/// Chain with every block all-ones.
pub fn complete_chain(levels: &LevelSequence) -> Result<CobwebChain> {
    let blocks = levels
        .sizes()
        .windows(2)
        .map(|w| BoolMatrix::ones(w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    CobwebChain::new(levels.clone(), blocks)
}
