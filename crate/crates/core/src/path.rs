//! Paths in Young's lattice, cut into label-decreasing blocks.
//!
//! A block of a path is a decreasing path, and a decreasing path is the same
//! thing as a column strip added in top-to-bottom order, so enumeration works
//! strip by strip rather than box by box.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{FusionContext, Partition};

/// A diagram box; `row` and `col` are 1-indexed, row 1 on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// Diagonal index `col - row`.
    pub fn label(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

pub fn diagonal_label(cell: Cell) -> i64 {
    cell.label()
}

/// Which partitions a walk may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Any partition with at most this many rows.
    Rows(usize),
    /// `(n, k)`-restricted partitions.
    Restricted(FusionContext),
}

impl Region {
    pub fn max_rows(&self) -> usize {
        match self {
            Region::Rows(r) => *r,
            Region::Restricted(c) => c.n(),
        }
    }

    pub fn admits(&self, p: &Partition) -> bool {
        match self {
            Region::Rows(r) => p.len() <= *r,
            Region::Restricted(c) => c.is_restricted(p),
        }
    }
}

/// Calls `f` with every column strip of size `r` that can be added to `base`
/// inside `max_rows` rows (and inside `cap`, if given). The cells are passed
/// top to bottom, which is decreasing label order.
pub fn for_each_column_strip(
    base: &Partition,
    r: usize,
    max_rows: usize,
    cap: Option<&Partition>,
    f: &mut dyn FnMut(&[Cell]),
) {
    let mut cells = Vec::with_capacity(r);
    strip_rec(base, r, 0, max_rows, cap, usize::MAX, &mut cells, f);
}

#[allow(clippy::too_many_arguments)]
fn strip_rec(
    base: &Partition,
    left: usize,
    row: usize,
    max_rows: usize,
    cap: Option<&Partition>,
    above: usize,
    cells: &mut Vec<Cell>,
    f: &mut dyn FnMut(&[Cell]),
) {
    if left == 0 {
        f(cells);
        return;
    }
    if row >= max_rows || max_rows - row < left {
        return;
    }
    let here = base.part(row);
    if here == 0 && above == 0 {
        return;
    }
    // `above` is the new length of the previous row
    if here < above && cap.is_none_or(|c| c.part(row) > here) {
        cells.push(Cell::new(row + 1, here + 1));
        strip_rec(base, left - 1, row + 1, max_rows, cap, here + 1, cells, f);
        cells.pop();
    }
    if here > 0 {
        strip_rec(base, left, row + 1, max_rows, cap, here, cells, f);
    }
}

/// Adds `cells` to `base`; the caller guarantees the result is a partition.
pub(crate) fn add_cells(base: &Partition, cells: &[Cell]) -> Partition {
    let rows = cells
        .iter()
        .map(|c| c.row)
        .max()
        .unwrap_or(0)
        .max(base.len());
    let mut parts = base.padded(rows);
    for c in cells {
        parts[c.row - 1] += 1;
    }
    Partition::from_decreasing(parts)
}

/// Every `ν` such that `ν/base` is a column strip of size `r` inside the region.
pub fn column_strip_targets(base: &Partition, r: usize, region: Region) -> Vec<Partition> {
    let mut out = Vec::new();
    if let Region::Restricted(c) = region {
        if r > c.n() {
            return out;
        }
    }
    for_each_column_strip(base, r, region.max_rows(), None, &mut |cells| {
        let nu = add_cells(base, cells);
        if region.admits(&nu) {
            out.push(nu);
        }
    });
    out
}

/// A path from `base` cut into consecutive decreasing blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    base: Partition,
    steps: Vec<Cell>,
    ascents: Vec<usize>,
}

impl LatticePath {
    /// Validates that every step is addable and every block is label-decreasing.
    pub fn new(base: Partition, steps: Vec<Cell>, ascents: Vec<usize>) -> Result<Self> {
        if ascents.iter().sum::<usize>() != steps.len() {
            return Err(Error::InvalidInput(format!(
                "ascents {ascents:?} do not sum to {} steps",
                steps.len()
            )));
        }
        let mut shape = base.padded(steps.iter().map(|c| c.row).max().unwrap_or(0));
        for c in &steps {
            let r = c.row - 1;
            if shape[r] + 1 != c.col || (r > 0 && shape[r - 1] < c.col) {
                return Err(Error::InvalidInput(format!(
                    "{c:?} is not addable to {shape:?}"
                )));
            }
            shape[r] += 1;
        }
        let path = LatticePath {
            base,
            steps,
            ascents,
        };
        for i in 0..path.ascents.len() {
            if path
                .block(i)
                .windows(2)
                .any(|w| w[0].label() <= w[1].label())
            {
                return Err(Error::InvalidInput(format!("block {i} is not decreasing")));
            }
        }
        Ok(path)
    }

    /// Builds a path from column strips given top-to-bottom.
    pub(crate) fn from_blocks(base: Partition, blocks: &[Vec<Cell>]) -> Self {
        LatticePath {
            base,
            ascents: blocks.iter().map(Vec::len).collect(),
            steps: blocks.iter().flatten().copied().collect(),
        }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn steps(&self) -> &[Cell] {
        &self.steps
    }

    pub fn ascents(&self) -> &[usize] {
        &self.ascents
    }

    pub fn num_blocks(&self) -> usize {
        self.ascents.len()
    }

    pub fn block(&self, i: usize) -> &[Cell] {
        let start: usize = self.ascents[..i].iter().sum();
        &self.steps[start..start + self.ascents[i]]
    }

    pub fn labels(&self) -> Vec<i64> {
        self.steps.iter().map(Cell::label).collect()
    }

    pub fn block_labels(&self, i: usize) -> Vec<i64> {
        self.block(i).iter().map(Cell::label).collect()
    }

    /// The partitions at the block boundaries, `base` first and the endpoint last.
    pub fn boundaries(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(self.ascents.len() + 1);
        let mut cur = self.base.clone();
        out.push(cur.clone());
        for i in 0..self.ascents.len() {
            cur = add_cells(&cur, self.block(i));
            out.push(cur.clone());
        }
        out
    }

    /// Partition after all steps.
    pub fn end(&self) -> Partition {
        add_cells(&self.base, &self.steps)
    }

    /// Every partition visited, one box at a time.
    pub fn chain(&self) -> Vec<Partition> {
        let mut out = vec![self.base.clone()];
        for c in &self.steps {
            let next = add_cells(out.last().unwrap(), std::slice::from_ref(c));
            out.push(next);
        }
        out
    }

    pub fn boundaries_restricted(&self, ctx: &FusionContext) -> bool {
        self.boundaries().iter().all(|p| ctx.is_restricted(p))
    }

    /// Block `i` adds a box in row 1.
    pub fn block_has_bot(&self, i: usize) -> bool {
        self.block(i).iter().any(|c| c.row == 1)
    }

    /// Block `i` adds a box in row `n`.
    pub fn block_has_top(&self, i: usize, ctx: &FusionContext) -> bool {
        self.block(i).iter().any(|c| c.row == ctx.n())
    }

    pub fn to_tableau(&self) -> PathTableau {
        path_to_tableau(self)
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.base)?;
        for i in 0..self.ascents.len() {
            write!(f, " |{:?}", self.block_labels(i))?;
        }
        Ok(())
    }
}

/// Calls `f` with every path from `base` whose blocks have the given sizes.
///
/// With a `target`, only paths ending there are produced. Under
/// `Region::Restricted` the partitions at block boundaries (including `base`
/// and the endpoint) must be restricted; single-box intermediates are not
/// checked. A negative ascent yields no paths.
pub fn for_each_path(
    base: &Partition,
    ascents: &[i64],
    region: Region,
    target: Option<&Partition>,
    f: &mut dyn FnMut(&LatticePath),
) {
    for_each_path_pruned(base, ascents, region, target, &|_| true, f);
}

/// Like [`for_each_path`], but a partial path is abandoned as soon as
/// `keep` rejects its blocks so far. `keep` sees at least one block.
pub fn for_each_path_pruned(
    base: &Partition,
    ascents: &[i64],
    region: Region,
    target: Option<&Partition>,
    keep: &dyn Fn(&[Vec<Cell>]) -> bool,
    f: &mut dyn FnMut(&LatticePath),
) {
    if ascents.iter().any(|&a| a < 0) || !region.admits(base) {
        return;
    }
    if let Some(t) = target {
        let total: i64 = ascents.iter().sum();
        if !t.contains(base) || t.size() as i64 - base.size() as i64 != total {
            return;
        }
    }
    let sizes: Vec<usize> = ascents.iter().map(|&a| a as usize).collect();
    let mut walk = Walk {
        base,
        region,
        target,
        keep,
        blocks: Vec::with_capacity(sizes.len()),
    };
    walk.run(base, &sizes, f);
}

struct Walk<'a> {
    base: &'a Partition,
    region: Region,
    target: Option<&'a Partition>,
    keep: &'a dyn Fn(&[Vec<Cell>]) -> bool,
    blocks: Vec<Vec<Cell>>,
}

impl Walk<'_> {
    fn run(&mut self, cur: &Partition, sizes: &[usize], f: &mut dyn FnMut(&LatticePath)) {
        let Some((&r, rest)) = sizes.split_first() else {
            f(&LatticePath::from_blocks(self.base.clone(), &self.blocks));
            return;
        };
        let max_rows = self.target.map_or(self.region.max_rows(), |t| {
            t.len().min(self.region.max_rows())
        });
        let mut strips = Vec::new();
        for_each_column_strip(cur, r, max_rows, self.target, &mut |cells| {
            strips.push(cells.to_vec())
        });
        for cells in strips {
            let next = add_cells(cur, &cells);
            if !self.region.admits(&next) {
                continue;
            }
            self.blocks.push(cells);
            if (self.keep)(&self.blocks) {
                self.run(&next, rest, f);
            }
            self.blocks.pop();
        }
    }
}

/// Paths from `base` to `target` with blocks of the given sizes.
pub fn enumerate_paths(
    base: &Partition,
    target: &Partition,
    ascents: &[i64],
    ctx: Option<&FusionContext>,
) -> Vec<LatticePath> {
    let region = match ctx {
        Some(c) => Region::Restricted(*c),
        None => Region::Rows(target.len()),
    };
    let mut out = Vec::new();
    for_each_path(base, ascents, region, Some(target), &mut |p| {
        out.push(p.clone())
    });
    out
}

/// The tableau of a path: column `i` lists the labels of block `i` in step
/// order, so each column decreases from top to bottom. Rows are aligned at
/// the bottom: row `j` of the tableau holds the `j`-th smallest label of each
/// column long enough to have one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathTableau {
    columns: Vec<Vec<i64>>,
}

impl PathTableau {
    pub fn new(columns: Vec<Vec<i64>>) -> Self {
        PathTableau { columns }
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Entry in bottom-aligned row `j` (1-indexed from the bottom) of column `i`.
    pub fn entry(&self, j: usize, i: usize) -> Option<i64> {
        let col = &self.columns[i];
        (j >= 1 && j <= col.len()).then(|| col[col.len() - j])
    }

    pub fn height(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Column lengths weakly decrease, columns strictly increase upward and
    /// rows weakly increase to the right.
    pub fn is_column_strict(&self) -> bool {
        let cols_ok = self
            .columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] > w[1]));
        let shape_ok = self.columns.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = (1..=self.height()).all(|j| {
            (0..self.columns.len().saturating_sub(1)).all(|i| {
                match (self.entry(j, i), self.entry(j, i + 1)) {
                    (Some(a), Some(b)) => a <= b,
                    _ => true,
                }
            })
        });
        cols_ok && shape_ok && rows_ok
    }
}

pub fn path_to_tableau(p: &LatticePath) -> PathTableau {
    PathTableau::new((0..p.num_blocks()).map(|i| p.block_labels(i)).collect())
}

/// Counts single-box chains from `from` to `to` that stay inside `region`
/// at every step.
pub fn count_chains(from: &Partition, to: &Partition, region: Region) -> u64 {
    use std::collections::HashMap;

    fn go(
        cur: &Partition,
        to: &Partition,
        region: Region,
        memo: &mut HashMap<Partition, u64>,
    ) -> u64 {
        if cur == to {
            return 1;
        }
        if let Some(&v) = memo.get(cur) {
            return v;
        }
        let mut total = 0u64;
        for_each_column_strip(cur, 1, to.len(), Some(to), &mut |cells| {
            let next = add_cells(cur, cells);
            if region.admits(&next) {
                total = total
                    .checked_add(go(&next, to, region, memo))
                    .expect("chain count overflow");
            }
        });
        memo.insert(cur.clone(), total);
        total
    }

    if !to.contains(from) || !region.admits(from) || !region.admits(to) {
        return 0;
    }
    go(from, to, region, &mut HashMap::new())
}
