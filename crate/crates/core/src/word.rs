//! Bracket words of two adjacent blocks and the pairing operators on them.
//!
//! The labels of two blocks are merged in increasing order. Labels from the
//! left block become `(` and labels from the right block become `)`; an equal
//! label in both blocks puts the left occurrence first, so the two pair with
//! each other.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::path::{Cell, LatticePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Paren {
    /// A label of the left block.
    Left,
    /// A label of the right block.
    Right,
}

impl Paren {
    pub fn flipped(self) -> Paren {
        match self {
            Paren::Left => Paren::Right,
            Paren::Right => Paren::Left,
        }
    }

    fn glyph(self) -> char {
        match self {
            Paren::Left => '(',
            Paren::Right => ')',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub label: i64,
    pub paren: Paren,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketWord {
    letters: Vec<Letter>,
}

/// Matching of a bracket word under the usual parenthesization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    partner: Vec<Option<usize>>,
}

impl Pairing {
    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner[i]
    }

    pub fn is_paired(&self, i: usize) -> bool {
        self.partner[i].is_some()
    }
}

impl BracketWord {
    /// Merges two strictly decreasing label sequences.
    pub fn word_of(left: &[i64], right: &[i64]) -> Result<Self> {
        for (name, block) in [("left", left), ("right", right)] {
            if block.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidInput(format!(
                    "{name} block {block:?} is not strictly decreasing"
                )));
            }
        }
        let mut letters: Vec<Letter> = left
            .iter()
            .map(|&label| Letter {
                label,
                paren: Paren::Left,
            })
            .chain(right.iter().map(|&label| Letter {
                label,
                paren: Paren::Right,
            }))
            .collect();
        letters.sort_by_key(|l| (l.label, l.paren));
        Ok(BracketWord { letters })
    }

    /// A word with labels `0, 1, ..` read off a string of `(` and `)`.
    pub fn from_brackets(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, ch)| {
                let paren = match ch {
                    '(' => Paren::Left,
                    ')' => Paren::Right,
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "unexpected {other:?} in {s:?}"
                        )))
                    }
                };
                Ok(Letter {
                    label: i as i64,
                    paren,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BracketWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn brackets(&self) -> String {
        self.letters.iter().map(|l| l.paren.glyph()).collect()
    }

    /// Bracket string with the letter at `mark` drawn as `◖` or `◗`.
    pub fn render_marked(&self, mark: Option<usize>) -> String {
        self.letters
            .iter()
            .enumerate()
            .map(|(i, l)| match (Some(i) == mark, l.paren) {
                (true, Paren::Left) => '◖',
                (true, Paren::Right) => '◗',
                (false, p) => p.glyph(),
            })
            .collect()
    }

    /// Left-to-right stack scan.
    pub fn pairing(&self) -> Pairing {
        let mut partner = vec![None; self.letters.len()];
        let mut stack = Vec::new();
        for (i, l) in self.letters.iter().enumerate() {
            match l.paren {
                Paren::Left => stack.push(i),
                Paren::Right => {
                    if let Some(j) = stack.pop() {
                        partner[i] = Some(j);
                        partner[j] = Some(i);
                    }
                }
            }
        }
        Pairing { partner }
    }

    fn unpaired(&self, paren: Paren) -> Vec<usize> {
        let pairing = self.pairing();
        (0..self.letters.len())
            .filter(|&i| self.letters[i].paren == paren && !pairing.is_paired(i))
            .collect()
    }

    pub fn unpaired_left(&self) -> Vec<usize> {
        self.unpaired(Paren::Left)
    }

    pub fn unpaired_right(&self) -> Vec<usize> {
        self.unpaired(Paren::Right)
    }

    /// `(l, r)`: unpaired left and right parentheses.
    pub fn word_type(&self) -> (usize, usize) {
        (self.unpaired_left().len(), self.unpaired_right().len())
    }

    /// Position `e` would flip: the rightmost unpaired `)`.
    pub fn e_position(&self) -> Option<usize> {
        self.unpaired_right().last().copied()
    }

    /// Position `f` would flip: the leftmost unpaired `(`.
    pub fn f_position(&self) -> Option<usize> {
        self.unpaired_left().first().copied()
    }

    pub fn flip(&self, positions: &[usize]) -> BracketWord {
        let mut letters = self.letters.clone();
        for &i in positions {
            letters[i].paren = letters[i].paren.flipped();
        }
        BracketWord { letters }
    }

    pub fn raise_e(&self) -> Result<BracketWord> {
        let i = self.e_position().ok_or(Error::UndefinedOperator(
            "e needs an unpaired right parenthesis",
        ))?;
        Ok(self.flip(&[i]))
    }

    pub fn lower_f(&self) -> Result<BracketWord> {
        let i = self.f_position().ok_or(Error::UndefinedOperator(
            "f needs an unpaired left parenthesis",
        ))?;
        Ok(self.flip(&[i]))
    }

    /// Positions flipped by `e^d` for `d > 0` and by `f^{-d}` for `d < 0`.
    pub fn power_positions(&self, d: i64) -> Result<Vec<usize>> {
        let mut word = self.clone();
        let mut flipped = Vec::with_capacity(d.unsigned_abs() as usize);
        for _ in 0..d.unsigned_abs() {
            let i = if d > 0 {
                word.e_position()
            } else {
                word.f_position()
            };
            let i = i.ok_or(Error::UndefinedOperator(if d > 0 {
                "e power exceeds unpaired right parentheses"
            } else {
                "f power exceeds unpaired left parentheses"
            }))?;
            word = word.flip(&[i]);
            flipped.push(i);
        }
        Ok(flipped)
    }

    /// Labels of one side, largest first.
    pub fn labels_of(&self, paren: Paren) -> Vec<i64> {
        self.letters
            .iter()
            .rev()
            .filter(|l| l.paren == paren)
            .map(|l| l.label)
            .collect()
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.brackets())
    }
}

/// The word of blocks `r` and `r + 1` of a path, with the diagram box behind
/// each letter. Letters are ordered by `(label, row)`, which is the same as
/// the label order with left-block duplicates first.
#[derive(Debug, Clone)]
pub struct PathWord {
    pub word: BracketWord,
    pub cells: Vec<Cell>,
}

impl PathWord {
    pub fn of_pair(path: &LatticePath, r: usize) -> PathWord {
        let mut tagged: Vec<(Cell, Paren)> = path
            .block(r)
            .iter()
            .map(|&c| (c, Paren::Left))
            .chain(path.block(r + 1).iter().map(|&c| (c, Paren::Right)))
            .collect();
        tagged.sort_by_key(|(c, _)| (c.label(), c.row));
        PathWord {
            word: BracketWord {
                letters: tagged
                    .iter()
                    .map(|&(c, paren)| Letter {
                        label: c.label(),
                        paren,
                    })
                    .collect(),
            },
            cells: tagged.into_iter().map(|(c, _)| c).collect(),
        }
    }

    pub fn position_of(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    /// Rebuilds `path` with blocks `r`, `r + 1` reassigned according to
    /// `word` (same letters, possibly different parentheses).
    pub fn rebuild(&self, path: &LatticePath, r: usize, word: &BracketWord) -> Result<LatticePath> {
        let mut blocks: Vec<Vec<Cell>> = (0..path.num_blocks())
            .map(|i| path.block(i).to_vec())
            .collect();
        for (idx, paren) in [(r, Paren::Left), (r + 1, Paren::Right)] {
            let mut cells: Vec<Cell> = self
                .cells
                .iter()
                .zip(word.letters())
                .filter(|(_, l)| l.paren == paren)
                .map(|(&c, _)| c)
                .collect();
            cells.sort_by_key(|c| c.row);
            blocks[idx] = cells;
        }
        let ascents = blocks.iter().map(Vec::len).collect();
        let steps = blocks.into_iter().flatten().collect();
        LatticePath::new(path.base().clone(), steps, ascents)
            .map_err(|e| Error::Internal(format!("rebuilt path is invalid: {e}")))
    }
}

/// Every adjacent pair of blocks has a word without unpaired `)`; the blocks
/// must have the column lengths of `mu`.
pub fn fits(path: &LatticePath, mu: &Partition) -> Result<bool> {
    let conj = mu.conjugate();
    if path.ascents() != conj.parts() {
        return Err(Error::InvalidInput(format!(
            "path blocks {:?} do not have the column lengths {:?} of {mu:?}",
            path.ascents(),
            conj.parts()
        )));
    }
    Ok(blocks_fit(path))
}

/// The bracket criterion without a shape check.
pub(crate) fn blocks_fit(path: &LatticePath) -> bool {
    (0..path.num_blocks().saturating_sub(1)).all(|r| {
        let w = PathWord::of_pair(path, r).word;
        w.word_type().1 == 0
    })
}
