//! Garnir belts, brick permutations, and the expansion data used to rewrite
//! a row-standard basis word in terms of lower terms.
//!
//! For a node A = (l, r, c) with (l, r+1, c) also in the shape, the belt is
//! the maximal union of length-e bricks sitting right of A in row r and left
//! of the node below A in row r+1.  The defining relation attached to A is
//!   sum over d in D_A of  v psi_{t_A} tau_d = 0,
//! where t_A is a fixed row-standard filling, tau_d is the product over a
//! reduced word of d of factors (psi_{w_r} + 1) for the brick-swapping
//! permutations w_r, and D_A runs over the minimal-length right coset
//! representatives of S_a x S_c in S_b (b bricks in total, a in row r).
//! Expanding the products, the unique longest term has coefficient one and
//! can be solved for in terms of the remaining words.

use crate::perm::Perm;
use crate::setting::{Echar, Setting};
use crate::shape::{Multipartition, Node};
use crate::tableau::{t_row, Tableau};
use itertools::Itertools;

#[derive(Clone, Debug)]
pub struct GarnirData {
    pub node: Node,
    /// brick counts: b = a + c
    pub bricks: usize,
    pub bricks_top: usize,
    pub bricks_bottom: usize,
    /// the row-standard filling t_A
    pub t_a: Tableau,
    /// entry occupying A in t_A (0-based)
    pub k_a: usize,
    /// canonical word of d(t_A)
    pub word_t_a: Vec<usize>,
    /// canonical words of the brick-swapping permutations w_1..w_{b-1}
    pub brick_words: Vec<Vec<usize>>,
    /// canonical words (letters in S_b, 0-based) of the coset representatives
    pub coset_words: Vec<Vec<usize>>,
    /// word of the longest expansion term, asserted reduced
    pub max_word: Vec<usize>,
    /// the permutation of max_word
    pub g_perm: Perm,
}

/// Nodes A = (l, r, c) of the shape with (l, r+1, c) also in the shape.
pub fn garnir_nodes(shape: &Multipartition) -> Vec<Node> {
    shape
        .nodes()
        .into_iter()
        .filter(|&(l, r, c)| shape.contains((l, r + 1, c)))
        .collect()
}

/// Minimal-length coset representatives for S_a x S_c in S_{a+c}:
/// the permutations that are increasing on {0..a-1} and on {a..b-1}.
fn coset_reps(a: usize, c: usize) -> Vec<Perm> {
    let b = a + c;
    let mut out = Vec::new();
    for top_images in (0..b).combinations(a) {
        let mut map = vec![usize::MAX; b];
        let mut bottom = (0..b).filter(|p| !top_images.contains(p));
        for (i, &p) in top_images.iter().enumerate() {
            map[i] = p;
        }
        for j in a..b {
            map[j] = bottom.next().unwrap();
        }
        out.push(Perm::from_images(map));
    }
    out.sort_by_key(|d| d.length());
    out
}

pub fn garnir_data(s: &Setting, shape: &Multipartition, node: Node) -> GarnirData {
    let (l, r, c) = node;
    assert!(shape.contains((l, r + 1, c)), "not a Garnir node");
    let n = shape.size();
    let row_top = shape.row_len(l, r);
    let (a, cc) = match s.e {
        Echar::Fin(e) => {
            let e = e as usize;
            ((row_top - c) / e, (c + 1) / e)
        }
        Echar::Inf => (0, 0),
    };
    let b = a + cc;
    let e = match s.e {
        Echar::Fin(e) => e as usize,
        Echar::Inf => 0,
    };

    // build t_A
    let trow = t_row(shape);
    let start = trow.entry(node).unwrap();
    let end = trow.entry((l, r + 1, c)).unwrap();
    let mut positions = trow.positions.clone();
    let mut seq: Vec<Node> = Vec::new();
    // row r+1 nodes in the first c+1 columns (0-based 0..=c) not in the belt
    for k in 0..(c + 1 - e * cc) {
        seq.push((l, r + 1, k));
    }
    // belt nodes of row r, then belt nodes of row r+1
    for k in c..c + e * a {
        seq.push((l, r, k));
    }
    for k in (c + 1 - e * cc)..(c + 1) {
        seq.push((l, r + 1, k));
    }
    // remaining nodes of row r
    for k in (c + e * a)..row_top {
        seq.push((l, r, k));
    }
    assert_eq!(seq.len(), end - start + 1);
    for (offset, &p) in seq.iter().enumerate() {
        positions[start + offset] = p;
    }
    let t_a = Tableau { positions };
    assert!(t_a.is_row_standard());
    // first brick entry; equals t_A(A) whenever the belt meets row r
    let k_a = start + (c + 1).saturating_sub(e * cc);
    if a > 0 {
        assert_eq!(t_a.entry(node), Some(k_a));
    }

    // bricks occupy the consecutive entries k_a .. k_a + e*b - 1 of t_A and
    // all carry the same residue word, so weight projections commute with
    // every brick swap
    if b > 0 {
        let first: Vec<_> = (0..e).map(|t| {
            let (bl, br, bc) = t_a.positions[k_a + t];
            s.residue(bl, br, bc)
        }).collect();
        for j in 1..b {
            let word: Vec<_> = (0..e).map(|t| {
                let (bl, br, bc) = t_a.positions[k_a + j * e + t];
                s.residue(bl, br, bc)
            }).collect();
            assert_eq!(word, first, "brick residue words must agree");
        }
    }

    let word_t_a = t_a.d_perm(shape).canonical_word();

    // w_j swaps brick j with brick j+1 (j = 1..b-1, stored 0-based)
    let mut brick_words = Vec::new();
    for j in 1..b {
        let mut w = Perm::identity(n);
        for t in 0..e {
            let x = k_a + e * (j - 1) + t;
            w = w.then(&Perm::transposition(n, x, x + e));
        }
        brick_words.push(w.canonical_word());
    }

    let reps = if b == 0 { vec![Perm::identity(1)] } else { coset_reps(a, cc) };
    let coset_words: Vec<Vec<usize>> = reps.iter().map(|d| d.canonical_word()).collect();
    let max_len = a * cc;
    let d_max = coset_words.last().unwrap();
    assert_eq!(d_max.len(), max_len);

    let mut max_word = word_t_a.clone();
    for &letter in d_max {
        max_word.extend_from_slice(&brick_words[letter]);
    }
    let g_perm = Perm::from_word(n, &max_word);
    assert_eq!(
        g_perm.length(),
        max_word.len(),
        "the longest expansion term must be a reduced word"
    );

    GarnirData {
        node,
        bricks: b,
        bricks_top: a,
        bricks_bottom: cc,
        t_a,
        k_a,
        word_t_a,
        brick_words,
        coset_words,
        max_word,
        g_perm,
    }
}

impl GarnirData {
    /// All expansion terms other than the longest one, as words to apply to
    /// the cyclic generator.  Each coset word contributes one term per
    /// subset of its positions (factors (psi_w + 1) multiplied out).
    pub fn lower_terms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let last = self.coset_words.len() - 1;
        for (di, dword) in self.coset_words.iter().enumerate() {
            let k = dword.len();
            for mask in 0..(1u64 << k) {
                if di == last && mask == (1u64 << k) - 1 {
                    continue; // the solved-for longest term
                }
                let mut word = self.word_t_a.clone();
                for (j, &letter) in dword.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        word.extend_from_slice(&self.brick_words[letter]);
                    }
                }
                out.push(word);
            }
        }
        out
    }
}
