//! Sign-reversing involutions on signed paths.
//!
//! `psi` is the classical involution: it fixes exactly the pairs `(id, P)`
//! with `P` fitting `μ`. `phi` is the level-`k` version for two-column `μ`.
//! It agrees with `psi` except on two small families of paths, where moving
//! the row-1 box between blocks would leave the restricted region; there it
//! uses `phi1` and `phi2`, which are inverse to each other.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partition::{conjugate_composition, sigma_dot, FusionContext, Partition, Permutation};
use crate::path::{Cell, LatticePath, PathTableau};
use crate::word::{blocks_fit, BracketWord, PathWord};

/// A permutation with a path whose block sizes are `σ.μ'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedTerm {
    pub sigma: Permutation,
    pub path: LatticePath,
}

impl SignedTerm {
    /// Checks that the block sizes of `path` are `σ.μ'`.
    pub fn new(sigma: Permutation, path: LatticePath, mu: &Partition) -> Result<Self> {
        let m = sigma.degree();
        let want = sigma_dot(&sigma, &conjugate_composition(mu, m))?;
        let have: Vec<i64> = path.ascents().iter().map(|&a| a as i64).collect();
        if want != have {
            return Err(Error::InvalidInput(format!(
                "blocks {have:?} do not match sigma.mu' = {want:?}"
            )));
        }
        Ok(SignedTerm { sigma, path })
    }

    pub fn sign(&self) -> i64 {
        self.sigma.sign()
    }
}

fn tracing() -> bool {
    static ON: OnceLock<bool> = OnceLock::new();
    *ON.get_or_init(|| std::env::var("FUSIONKIT_TRACE").is_ok_and(|v| v == "1"))
}

fn trace(step: &str, before: &BracketWord, after: &BracketWord, mark: Option<usize>) {
    if tracing() {
        eprintln!(
            "{step}: {} -> {}",
            before.render_marked(mark),
            after.render_marked(mark)
        );
    }
}

/// The first failure of column strictness met when reading the rows of `t`
/// from the bottom row up, each row from right to left. Returns the index
/// `r` of the left column of the offending pair `(r, r + 1)`. A failure is
/// either a strict descent `t(j, r) > t(j, r + 1)` or a box in column
/// `r + 1` with no box to its left.
pub fn canonical_violation(t: &PathTableau) -> Option<usize> {
    let m = t.columns().len();
    for j in 1..=t.height() {
        for r in (0..m.saturating_sub(1)).rev() {
            match (t.entry(j, r), t.entry(j, r + 1)) {
                (None, Some(_)) => return Some(r),
                (Some(a), Some(b)) if a > b => return Some(r),
                _ => {}
            }
        }
    }
    None
}

/// The classical involution on pairs `(σ, P)`.
pub fn psi(term: &SignedTerm, mu: &Partition) -> Result<SignedTerm> {
    let path = &term.path;
    let Some(r) = canonical_violation(&path.to_tableau()) else {
        if !term.sigma.is_identity() {
            return Err(Error::Internal(format!(
                "fitting path {path:?} paired with a non-identity permutation"
            )));
        }
        return Ok(term.clone());
    };
    let d = path.ascents()[r + 1] as i64 - path.ascents()[r] as i64 - 1;
    if d == 0 {
        return Err(Error::Internal(format!(
            "zero exponent at columns {r},{} of {path:?}",
            r + 1
        )));
    }
    let pw = PathWord::of_pair(path, r);
    let flips = pw.word.power_positions(d)?;
    let word = pw.word.flip(&flips);
    trace("psi", &pw.word, &word, None);
    let out = pw.rebuild(path, r, &word)?;
    SignedTerm::new(term.sigma.left_swap(r), out, mu)
}

/// Boxes of `ν/λ` in the last column of `ν`, top to bottom.
fn last_column(p: &LatticePath) -> (usize, Vec<Cell>) {
    let nu = p.end();
    let lambda = p.base();
    let c = nu.part(0);
    let cells = (0..nu.len())
        .take_while(|&i| nu.part(i) >= c)
        .filter(|&i| lambda.part(i) < c)
        .map(|i| Cell::new(i + 1, c))
        .collect();
    (c, cells)
}

fn two_blocks(p: &LatticePath) -> bool {
    p.num_blocks() == 2
}

fn row_cell(p: &LatticePath, block: usize, row: usize) -> Option<Cell> {
    p.block(block).iter().copied().find(|c| c.row == row)
}

/// Membership in the first exceptional family: `|P1| < |P2|`, `ν` is an
/// edge diagram, `P2` holds both the row-1 and the row-`n` box while `P1`
/// holds neither, and the row-1 box is unpaired in the word.
pub fn in_d1(p: &LatticePath, ctx: &FusionContext) -> bool {
    if !two_blocks(p) || p.ascents()[0] >= p.ascents()[1] || !ctx.is_edge(&p.end()) {
        return false;
    }
    if p.block_has_bot(0) || p.block_has_top(0, ctx) || !p.block_has_top(1, ctx) {
        return false;
    }
    let Some(bot) = row_cell(p, 1, 1) else {
        return false;
    };
    let pw = PathWord::of_pair(p, 0);
    let pos = pw.position_of(bot).expect("bot box is in the word");
    !pw.word.pairing().is_paired(pos)
}

/// Turns every unpaired `)` into `(` except the lowest unpaired box of the
/// last column.
pub fn phi1(p: &LatticePath, ctx: &FusionContext) -> Result<LatticePath> {
    if !in_d1(p, ctx) {
        return Err(Error::Domain(format!(
            "{p:?} is not in the first exceptional family"
        )));
    }
    let pw = PathWord::of_pair(p, 0);
    let pairing = pw.word.pairing();
    let (_, column) = last_column(p);
    let special = column
        .iter()
        .rev()
        .map(|&c| pw.position_of(c).expect("last column box is in the word"))
        .find(|&i| !pairing.is_paired(i))
        .ok_or_else(|| Error::Internal(format!("no unpaired box in the last column of {p:?}")))?;
    let flips: Vec<usize> = pw
        .word
        .unpaired_right()
        .into_iter()
        .filter(|&i| i != special)
        .collect();
    let word = pw.word.flip(&flips);
    trace("phi1", &pw.word, &word, Some(special));
    pw.rebuild(p, 0, &word)
}

/// The four conditions defining the second exceptional family, with the
/// boxes they refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D2Certificate {
    /// No unpaired `)`: the tableau is column strict.
    pub column_strict: bool,
    /// `ν` is an edge diagram, the row-`n` box is in `P1` and not in `P2`,
    /// and exactly one block has a row-1 box.
    pub structure: bool,
    /// The last column has boxes of `P2`, and the highest of them is not
    /// paired with the box left of the lowest last-column box.
    pub last_column: bool,
    /// The row-`n` box of `P1` is unpaired or paired with the special box.
    pub top_pairing: bool,
    /// Labels of the last column of `ν/λ`, bottom to top.
    pub column_labels: Vec<i64>,
    /// Label of the highest `P2` box of the last column.
    pub special: Option<i64>,
    /// Label of the box left of the lowest last-column box, if in `ν/λ`.
    pub left_of_lowest: Option<i64>,
    /// Label paired with the special box.
    pub special_partner: Option<i64>,
}

impl D2Certificate {
    pub fn holds(&self) -> bool {
        self.column_strict && self.structure && self.last_column && self.top_pairing
    }
}

struct D2Boxes {
    word: PathWord,
    special: Option<usize>,
    partner: Option<usize>,
    certificate: D2Certificate,
}

fn d2_boxes(p: &LatticePath, ctx: &FusionContext) -> Option<D2Boxes> {
    if !two_blocks(p) || p.ascents()[0] < p.ascents()[1] {
        return None;
    }
    let pw = PathWord::of_pair(p, 0);
    let pairing = pw.word.pairing();
    let column_strict = pw.word.word_type().1 == 0;
    let structure = ctx.is_edge(&p.end())
        && p.block_has_top(0, ctx)
        && !p.block_has_top(1, ctx)
        && (p.block_has_bot(0) != p.block_has_bot(1));

    let (c, column) = last_column(p);
    let in_p2 = |cell: &Cell| p.block(1).contains(cell);
    let special_cell = column.iter().copied().find(in_p2);
    let special = special_cell.and_then(|cell| pw.position_of(cell));
    let partner = special.and_then(|i| pairing.partner(i));
    let left_cell = column
        .last()
        .filter(|_| c >= 2)
        .map(|lowest| Cell::new(lowest.row, c - 1))
        .filter(|cell| pw.position_of(*cell).is_some());
    let left = left_cell.and_then(|cell| pw.position_of(cell));
    let last_column = special.is_some() && (partner.is_none() || partner != left);

    let top_pairing = match row_cell(p, 0, ctx.n()).and_then(|cell| pw.position_of(cell)) {
        Some(t) => match pairing.partner(t) {
            None => true,
            Some(q) => Some(q) == special,
        },
        None => false,
    };
    let label = |i: Option<usize>| i.map(|i| pw.word.letters()[i].label);
    let certificate = D2Certificate {
        column_strict,
        structure,
        last_column,
        top_pairing,
        column_labels: column.iter().rev().map(Cell::label).collect(),
        special: label(special),
        left_of_lowest: label(left),
        special_partner: label(partner),
    };
    Some(D2Boxes {
        word: pw,
        special,
        partner,
        certificate,
    })
}

/// Evaluates the second exceptional family. Paths with other than two
/// blocks or with `|P1| < |P2|` get an all-false certificate.
pub fn in_d2(p: &LatticePath, ctx: &FusionContext) -> D2Certificate {
    d2_boxes(p, ctx)
        .map(|b| b.certificate)
        .unwrap_or(D2Certificate {
            column_strict: false,
            structure: false,
            last_column: false,
            top_pairing: false,
            column_labels: Vec::new(),
            special: None,
            left_of_lowest: None,
            special_partner: None,
        })
}

/// Turns every unpaired `(` into `)`, together with the `(` paired with the
/// special box.
pub fn phi2(p: &LatticePath, ctx: &FusionContext) -> Result<LatticePath> {
    let boxes = d2_boxes(p, ctx)
        .filter(|b| b.certificate.holds())
        .ok_or_else(|| Error::Domain(format!("{p:?} is not in the second exceptional family")))?;
    let partner = boxes
        .partner
        .ok_or_else(|| Error::Internal(format!("special box of {p:?} is unpaired")))?;
    let mut flips = boxes.word.word.unpaired_left();
    flips.push(partner);
    let word = boxes.word.word.flip(&flips);
    trace("phi2", &boxes.word.word, &word, boxes.special);
    boxes.word.rebuild(p, 0, &word)
}

fn swap() -> Permutation {
    Permutation::identity(2).left_swap(0)
}

/// The level-`k` involution for two-column `μ`.
///
/// When `μ` has `n` rows the only terms have a full first column, all of
/// them fit, and every term is fixed.
pub fn phi(term: &SignedTerm, ctx: &FusionContext, mu: &Partition) -> Result<SignedTerm> {
    if mu.part(0) != 2 {
        return Err(Error::Unsupported(format!(
            "the level-k involution needs a two-column shape, got {mu:?}"
        )));
    }
    if term.sigma.degree() != 2 || !two_blocks(&term.path) {
        return Err(Error::InvalidInput(format!(
            "{:?} is not a two-block term",
            term.path
        )));
    }
    let p = &term.path;
    if mu.len() >= ctx.n() {
        return Ok(term.clone());
    }
    if !term.sigma.is_identity() {
        if in_d1(p, ctx) {
            return SignedTerm::new(Permutation::identity(2), phi1(p, ctx)?, mu);
        }
        return psi(term, mu);
    }
    if !blocks_fit(p) {
        return psi(term, mu);
    }
    if in_d2(p, ctx).holds() {
        return SignedTerm::new(swap(), phi2(p, ctx)?, mu);
    }
    Ok(term.clone())
}

/// A fitting path with restricted block boundaries outside the second
/// exceptional family.
pub fn is_k_fusion(p: &LatticePath, ctx: &FusionContext, mu: &Partition) -> bool {
    let conj = mu.conjugate();
    if p.ascents() != conj.parts() || !p.boundaries_restricted(ctx) || !blocks_fit(p) {
        return false;
    }
    mu.len() >= ctx.n() || !in_d2(p, ctx).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{enumerate_paths, Region};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    fn path(base: &str, blocks: &[&[(usize, usize)]]) -> LatticePath {
        let steps: Vec<Cell> = blocks
            .iter()
            .flat_map(|b| b.iter().map(|&(r, c)| Cell::new(r, c)))
            .collect();
        LatticePath::new(p(base), steps, blocks.iter().map(|b| b.len()).collect()).unwrap()
    }

    fn brackets(q: &LatticePath) -> String {
        PathWord::of_pair(q, 0).word.brackets()
    }

    // w = -3 0 1 2 3 with only 0 in the first block; n = 4, k = 3
    fn example_four() -> LatticePath {
        path("3,3,2", &[&[(3, 3)], &[(1, 4), (2, 4), (3, 4), (4, 1)]])
    }

    #[test]
    fn canonical_violation_examples() {
        let fits = PathTableau::new(vec![vec![3, 1], vec![2]]);
        assert_eq!(canonical_violation(&fits), None);
        let shape = PathTableau::new(vec![vec![0], vec![2, 1]]);
        assert_eq!(canonical_violation(&shape), Some(0));
        let right = PathTableau::new(vec![vec![5, 4], vec![5, 4], vec![3]]);
        assert_eq!(canonical_violation(&right), Some(1));
    }

    #[test]
    fn example_four_runs_through_phi1() {
        let q = example_four();
        let c = ctx(4, 3);
        assert!(c.is_edge(&q.end()), "{:?}", q.end());
        assert_eq!(brackets(&q), ")()))");
        assert!(in_d1(&q, &c));
        let image = phi1(&q, &c).unwrap();
        assert_eq!(
            PathWord::of_pair(&image, 0).word.render_marked(Some(3)),
            "(()◗("
        );
        assert!(in_d2(&image, &c).holds());
        assert_eq!(phi2(&image, &c).unwrap(), q);
    }

    #[test]
    fn example_five_runs_through_phi1() {
        // w = -2 0 2, all in the second block; n = 3, k = 2
        let q = path("2,1", &[&[], &[(1, 3), (2, 2), (3, 1)]]);
        let c = ctx(3, 2);
        assert_eq!(brackets(&q), ")))");
        assert!(in_d1(&q, &c));
        let image = phi1(&q, &c).unwrap();
        assert_eq!(
            PathWord::of_pair(&image, 0).word.render_marked(Some(2)),
            "((◗"
        );
        assert_eq!(phi2(&image, &c).unwrap(), q);
    }

    #[test]
    fn non_edge_is_not_exceptional() {
        let q = path("1", &[&[(2, 1)], &[(1, 2), (3, 1)]]);
        assert!(!ctx(3, 3).is_edge(&q.end()));
        assert!(!in_d1(&q, &ctx(3, 3)));
        assert!(!in_d2(&q, &ctx(3, 3)).holds());
    }

    #[test]
    fn bracket_fit_matches_tableau_strictness() {
        for size in 0..=8usize {
            for mu in Partition::all_of_size(size, size) {
                let conj: Vec<i64> = mu.conjugate().parts().iter().map(|&x| x as i64).collect();
                for lambda in Partition::all_up_to(3, 3) {
                    let region = Region::Rows(4);
                    crate::path::for_each_path(&lambda, &conj, region, None, &mut |q| {
                        assert_eq!(blocks_fit(q), q.to_tableau().is_column_strict(), "{q:?}");
                    });
                }
            }
        }
    }

    #[test]
    fn psi_fixes_fitting_paths_only() {
        let mu = p("2,1");
        let id = Permutation::identity(2);
        for q in enumerate_paths(&p("2,1"), &p("3,2,1"), &[2, 1], None) {
            let t = SignedTerm::new(id.clone(), q.clone(), &mu).unwrap();
            let image = psi(&t, &mu).unwrap();
            assert_eq!(image == t, blocks_fit(&q));
            assert_eq!(psi(&image, &mu).unwrap(), t);
        }
    }
}
