//! Ferrers-dimension analysis of Boolean matrices.
//!
//! A 0/1 matrix is Ferrers (Ferrers dimension 1) when it contains neither
//! `[[1,0],[0,1]]` nor `[[0,1],[1,0]]` as a 2×2 submatrix on rows `r1 < r2`
//! and columns `c1 < c2`. Equivalently its row supports are totally ordered
//! by inclusion. Both characterizations are implemented and cross-checked.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;

/// Largest matrix (in cells) accepted by [`ferrers_dimension`].
pub const DIMENSION_MAX_CELLS: usize = 12;

/// Largest matrix (in cells) accepted by [`min_completion_to_ferrers`].
pub const COMPLETION_MAX_CELLS: usize = 20;

/// Coordinates of a 2×2 permutation submatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub r1: usize,
    pub r2: usize,
    pub c1: usize,
    pub c2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FerrersReport {
    pub is_dim1: bool,
    pub witness: Option<Witness>,
    pub dimension: Option<usize>,
    pub completion_arcs: Option<Vec<(usize, usize)>>,
}

/// Result of [`min_completion_to_ferrers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub count: usize,
    /// Added `(row, col)` positions, row-major ascending.
    pub arcs: Vec<(usize, usize)>,
    pub completed: BoolMatrix,
}

/// Exhaustive scan over all row pairs and column pairs, in lexicographic
/// order of `(r1, r2, c1, c2)`. Returns the first forbidden submatrix.
pub fn forbidden_pattern_witness(b: &BoolMatrix) -> Option<Witness> {
    let (rows, cols) = (b.rows(), b.cols());
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            for c1 in 0..cols {
                for c2 in c1 + 1..cols {
                    let (a, x, y, d) = (b.get(r1, c1), b.get(r1, c2), b.get(r2, c1), b.get(r2, c2));
                    if a == d && x == y && a != x {
                        return Some(Witness { r1, r2, c1, c2 });
                    }
                }
            }
        }
    }
    None
}

/// Nested-support check: sort rows by support size, then every support must
/// contain the previous one.
pub fn has_nested_row_supports(b: &BoolMatrix) -> bool {
    let mut order: Vec<usize> = (0..b.rows()).collect();
    order.sort_by_key(|&r| b.row_count_ones(r));
    order.windows(2).all(|w| b.row_subset(w[0], w[1]))
}

pub fn is_ferrers(b: &BoolMatrix) -> bool {
    has_nested_row_supports(b)
}

/// Classifies `b` as Ferrers dimension 1 or not, with a witness when not.
pub fn is_ferrers_dim1(b: &BoolMatrix) -> FerrersReport {
    let nested = has_nested_row_supports(b);
    let witness = if nested {
        debug_assert!(forbidden_pattern_witness(b).is_none());
        None
    } else {
        let w = forbidden_pattern_witness(b);
        assert!(w.is_some(), "nested-support and submatrix scans disagree");
        w
    };
    FerrersReport {
        is_dim1: nested,
        witness,
        dimension: None,
        completion_arcs: None,
    }
}

/// Row supports as bit masks; only valid when `cols ≤ 64`.
fn row_masks(b: &BoolMatrix) -> Vec<u64> {
    (0..b.rows()).map(|r| b.row_words(r)[0]).collect()
}

pub(crate) fn masks_nested(rows: &[u64]) -> bool {
    let mut sorted = rows.to_vec();
    sorted.sort_by_key(|m| m.count_ones());
    sorted.windows(2).all(|w| w[0] & !w[1] == 0)
}

fn cell_mask_to_rows(mask: u64, rows: usize, cols: usize) -> Vec<u64> {
    let row_bits = (1u64 << cols) - 1;
    (0..rows).map(|r| (mask >> (r * cols)) & row_bits).collect()
}

fn check_bound(b: &BoolMatrix, max_cells: usize, op: &str) -> Result<()> {
    if b.cells() > max_cells {
        return Err(Error::Size(format!(
            "{op} is limited to {max_cells} cells, matrix is {}x{} = {}",
            b.rows(),
            b.cols(),
            b.cells()
        )));
    }
    Ok(())
}

/// Smallest `d ≤ max_d` such that `b` is the intersection of `d` Ferrers
/// matrices, each entrywise `≥ b`. `None` when no such `d ≤ max_d` exists.
///
/// Intersecting Ferrers supersets equals `b` exactly when their zero sets
/// cover the zeros of `b`, so the search enumerates all Ferrers supersets,
/// keeps those with inclusion-maximal zero sets, and solves the covering
/// problem by depth-first search with increasing `d`.
pub fn ferrers_dimension(b: &BoolMatrix, max_d: usize) -> Result<Option<usize>> {
    check_bound(b, DIMENSION_MAX_CELLS, "Ferrers dimension search")?;
    if max_d == 0 {
        return Err(Error::Argument("max_d must be at least 1".into()));
    }
    if is_ferrers(b) {
        return Ok(Some(1));
    }
    let (rows, cols) = (b.rows(), b.cols());
    let all = (1u64 << b.cells()) - 1;
    let ones = b.cell_mask()?;
    let zeros = all & !ones;

    // zero sets of Ferrers supersets: every submask of `zeros` whose
    // complement is Ferrers
    let mut zero_sets = Vec::new();
    let mut sub = zeros;
    loop {
        if masks_nested(&cell_mask_to_rows(all & !sub, rows, cols)) {
            zero_sets.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & zeros;
    }
    let maximal: Vec<u64> = zero_sets
        .iter()
        .copied()
        .filter(|&z| !zero_sets.iter().any(|&o| o != z && z & !o == 0))
        .collect();

    for d in 2..=max_d {
        if covers(&maximal, zeros, 0, d) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn covers(sets: &[u64], target: u64, covered: u64, budget: usize) -> bool {
    let missing = target & !covered;
    if missing == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let cell = missing & missing.wrapping_neg();
    sets.iter()
        .filter(|&&s| s & cell != 0)
        .any(|&s| covers(sets, target, covered | s, budget - 1))
}

/// Fewest zero entries of `b` to flip to 1 so that the result is Ferrers.
/// Among minimal sets the row-major lexicographically smallest is returned.
pub fn min_completion_to_ferrers(b: &BoolMatrix) -> Result<Completion> {
    check_bound(b, COMPLETION_MAX_CELLS, "minimal Ferrers completion")?;
    let base = row_masks(b);
    let zeros: Vec<(usize, usize)> = b.zeros_iter().collect();
    for size in 0..=zeros.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut rows = base.clone();
            for &i in &idx {
                let (r, c) = zeros[i];
                rows[r] |= 1 << c;
            }
            if masks_nested(&rows) {
                let arcs: Vec<(usize, usize)> = idx.iter().map(|&i| zeros[i]).collect();
                let mut completed = b.clone();
                for &(r, c) in &arcs {
                    completed.set(r, c, true);
                }
                return Ok(Completion {
                    count: size,
                    arcs,
                    completed,
                });
            }
            if !next_combination(&mut idx, zeros.len()) {
                break;
            }
        }
    }
    unreachable!("the all-ones completion is always Ferrers")
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Full report: dim-1 classification plus dimension (bounded by `max_d`)
/// and minimal completion when the matrix is small enough for each search.
pub fn analyze(b: &BoolMatrix, max_d: usize) -> Result<FerrersReport> {
    let mut report = is_ferrers_dim1(b);
    if b.cells() <= DIMENSION_MAX_CELLS {
        report.dimension = ferrers_dimension(b, max_d)?;
    }
    if b.cells() <= COMPLETION_MAX_CELLS {
        report.completion_arcs = Some(min_completion_to_ferrers(b)?.arcs);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BoolMatrix {
        BoolMatrix::from_rows(rows).unwrap()
    }

    fn crossed() -> BoolMatrix {
        m(&[&[1, 0, 1], &[1, 1, 0]])
    }

    /// Independent brute force: all Ferrers supersets by the submatrix
    /// scan, then every `d`-tuple tested by explicit AND.
    fn brute_dimension(b: &BoolMatrix, max_d: usize) -> Option<usize> {
        let n = b.cells();
        let supersets: Vec<BoolMatrix> = (0..1u64 << n)
            .map(|mask| BoolMatrix::from_cell_mask(b.rows(), b.cols(), mask).unwrap())
            .filter(|s| b.is_submatrix_of(s) && forbidden_pattern_witness(s).is_none())
            .collect();
        fn search(
            sets: &[BoolMatrix],
            acc: Option<BoolMatrix>,
            d: usize,
            target: &BoolMatrix,
        ) -> bool {
            if d == 0 {
                return acc.as_ref() == Some(target);
            }
            sets.iter().any(|s| {
                let next = match &acc {
                    None => s.clone(),
                    Some(a) => a.and(s).unwrap(),
                };
                search(sets, Some(next), d - 1, target)
            })
        }
        (1..=max_d).find(|&d| search(&supersets, None, d, b))
    }

    #[test]
    fn dim1_examples() {
        let ones = BoolMatrix::ones(2, 3).unwrap();
        let r = is_ferrers_dim1(&ones);
        assert!(r.is_dim1);
        assert_eq!(r.witness, None);

        let r = is_ferrers_dim1(&crossed());
        assert!(!r.is_dim1);
        assert_eq!(
            r.witness,
            Some(Witness {
                r1: 0,
                r2: 1,
                c1: 1,
                c2: 2
            })
        );

        assert!(is_ferrers_dim1(&BoolMatrix::zeros(3, 4).unwrap()).is_dim1);
    }

    #[test]
    fn scan_and_nested_agree_exhaustively_up_to_4x4() {
        for rows in 1..=4 {
            for cols in 1..=4 {
                for mask in 0..1u64 << (rows * cols) {
                    let b = BoolMatrix::from_cell_mask(rows, cols, mask).unwrap();
                    assert_eq!(
                        forbidden_pattern_witness(&b).is_none(),
                        has_nested_row_supports(&b),
                        "{b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_examples_against_brute_force() {
        let anti = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(brute_dimension(&crossed(), 3), Some(2));
        assert_eq!(brute_dimension(&anti, 3), Some(2));
        assert_eq!(ferrers_dimension(&crossed(), 4).unwrap(), Some(2));
        assert_eq!(ferrers_dimension(&anti, 4).unwrap(), Some(2));
        assert_eq!(
            ferrers_dimension(&BoolMatrix::ones(3, 4).unwrap(), 1).unwrap(),
            Some(1)
        );
        assert_eq!(ferrers_dimension(&anti, 1).unwrap(), None);
    }

    #[test]
    fn dimension_matches_brute_force_on_all_2x3() {
        for mask in 0..1u64 << 6 {
            let b = BoolMatrix::from_cell_mask(2, 3, mask).unwrap();
            assert_eq!(
                ferrers_dimension(&b, 3).unwrap(),
                brute_dimension(&b, 3),
                "{b:?}"
            );
        }
    }

    #[test]
    fn dimension_matches_brute_force_on_all_3x3() {
        // brute force is quadratic in superset count; 3x3 keeps it small
        for mask in 0..1u64 << 9 {
            let b = BoolMatrix::from_cell_mask(3, 3, mask).unwrap();
            assert_eq!(
                ferrers_dimension(&b, 2).unwrap(),
                brute_dimension(&b, 2),
                "{b:?}"
            );
        }
    }

    #[test]
    fn identity_is_upper_and_lower_staircase_intersection() {
        let id = BoolMatrix::identity(3).unwrap();
        let upper = m(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let lower = upper.transpose();
        assert!(is_ferrers(&upper) && is_ferrers(&lower));
        assert_eq!(upper.and(&lower).unwrap(), id);
        assert_eq!(brute_dimension(&id, 3), Some(2));
        assert_eq!(ferrers_dimension(&id, 5).unwrap(), Some(2));
    }

    #[test]
    fn block_diagonal_of_ferrers_blocks_need_not_be_ferrers() {
        // Both summands are Ferrers, their direct sum is the forbidden pattern.
        let one = m(&[&[1]]);
        assert!(is_ferrers(&one));
        let sum = BoolMatrix::direct_sum(&[one.clone(), one]).unwrap();
        assert_eq!(sum, m(&[&[1, 0], &[0, 1]]));
        assert!(!is_ferrers(&sum));
        assert!(forbidden_pattern_witness(&sum).is_some());
    }

    #[test]
    fn deleting_an_arc_never_raises_dimension_beyond_bound_on_2x3() {
        // measured on the 2x3 family: all dimensions stay ≤ 2
        for mask in 0..1u64 << 6 {
            let b = BoolMatrix::from_cell_mask(2, 3, mask).unwrap();
            if is_ferrers(&b) {
                continue;
            }
            for (r, c) in b.ones_iter() {
                let mut smaller = b.clone();
                smaller.set(r, c, false);
                let d = ferrers_dimension(&smaller, 3).unwrap();
                assert!(d.is_some_and(|d| d <= 2), "{smaller:?}");
            }
        }
    }

    #[test]
    fn dimension_errors() {
        let big = BoolMatrix::zeros(3, 5).unwrap();
        assert!(matches!(ferrers_dimension(&big, 2), Err(Error::Size(_))));
        assert!(matches!(
            ferrers_dimension(&crossed(), 0),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn completion_examples() {
        let ones = BoolMatrix::ones(2, 2).unwrap();
        let c = min_completion_to_ferrers(&ones).unwrap();
        assert_eq!((c.count, c.arcs.as_slice()), (0, &[][..]));
        assert_eq!(c.completed, ones);

        let c = min_completion_to_ferrers(&crossed()).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.arcs, vec![(0, 1)]);
        assert!(is_ferrers(&c.completed));

        let c = min_completion_to_ferrers(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.arcs, vec![(0, 0)]);
        assert_eq!(c.completed, m(&[&[1, 1], &[1, 0]]));
    }

    #[test]
    fn completion_is_minimal_by_exhaustion() {
        // compare against a plain subset walk ordered by (size, arcs)
        for mask in 0..1u64 << 9 {
            let b = BoolMatrix::from_cell_mask(3, 3, mask).unwrap();
            let zeros: Vec<(usize, usize)> = b.zeros_iter().collect();
            let mut best: Option<Vec<(usize, usize)>> = None;
            for pick in 0..1u64 << zeros.len() {
                let arcs: Vec<(usize, usize)> = (0..zeros.len())
                    .filter(|i| pick >> i & 1 == 1)
                    .map(|i| zeros[i])
                    .collect();
                let mut t = b.clone();
                arcs.iter().for_each(|&(r, c)| t.set(r, c, true));
                if forbidden_pattern_witness(&t).is_some() {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some(cur) => (arcs.len(), &arcs) < (cur.len(), cur),
                };
                if better {
                    best = Some(arcs);
                }
            }
            let got = min_completion_to_ferrers(&b).unwrap();
            assert_eq!(Some(got.arcs), best, "{b:?}");
        }
    }

    #[test]
    fn completion_size_bound() {
        let big = BoolMatrix::zeros(3, 7).unwrap();
        assert!(matches!(
            min_completion_to_ferrers(&big),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
