//! Closed-form models in the separated regime (e > n and every window of n
//! consecutive simple roots meets the dominant weight at most once):
//! separated residue sequences, seminormal representations on the direct sum
//! of all standard-tableau spans, and the matrix-unit dimension count.
//!
//! In this regime distinct standard tableaux of any shapes have distinct
//! residue sequences, the dots act as zero, and each generator permutes the
//! basis up to vanishing, so these serve as independent oracles for the
//! straightening engine.

use crate::intmat::IntMatrix;
use crate::setting::{Echar, Residue, Setting};
use crate::shape::{multipartitions, Multipartition};
use crate::tableau::{standard_tableaux, Tableau};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// (Lambda, alpha_i + alpha_{i+1} + ... + alpha_{i+n-1}).
fn window_weight(s: &Setting, i: Residue, n: usize) -> u64 {
    (0..n as i64).map(|j| s.lambda_mult(s.res(i + j))).sum()
}

/// Separation: e > n and every length-n window of simple roots pairs with
/// the dominant weight at most once.
pub fn is_separated(s: &Setting, n: usize) -> bool {
    match s.e {
        Echar::Fin(e) => {
            if e <= n as i64 {
                return false;
            }
            (0..e).all(|i| window_weight(s, i, n) <= 1)
        }
        Echar::Inf => {
            // only windows starting near a charge entry can be nonzero
            s.charge
                .iter()
                .flat_map(|&k| (k - n as i64)..=k)
                .all(|i| window_weight(s, i, n) <= 1)
        }
    }
}

/// Does the word satisfy the three closure conditions characterizing
/// residue sequences of standard tableaux in a separated setting?
/// (a) the first letter meets the dominant weight; (b) a letter not meeting
/// it has an earlier neighbour; (c) between equal letters both neighbours
/// occur.
pub fn satisfies_residue_conditions(s: &Setting, word: &[Residue]) -> bool {
    for (r, &ir) in word.iter().enumerate() {
        if r == 0 {
            if s.lambda_mult(ir) == 0 {
                return false;
            }
            continue;
        }
        let earlier = &word[..r];
        if s.lambda_mult(ir) == 0
            && !earlier
                .iter()
                .any(|&j| j == s.res(ir - 1) || j == s.res(ir + 1))
        {
            return false;
        }
        for (k, &is) in earlier.iter().enumerate() {
            if is == ir {
                let between = &word[k + 1..r];
                if !between.contains(&s.res(ir - 1)) || !between.contains(&s.res(ir + 1)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All residue words of length n satisfying the closure conditions,
/// generated by extending with letters that meet the weight or neighbour an
/// earlier letter (the only candidates condition (b) allows).
pub fn residue_sequences_by_conditions(s: &Setting, n: usize) -> BTreeSet<Vec<Residue>> {
    let weight_letters: Vec<Residue> = match s.e {
        Echar::Fin(e) => (0..e).filter(|&i| s.lambda_mult(i) > 0).collect(),
        Echar::Inf => {
            let set: BTreeSet<Residue> = s.charge.iter().copied().collect();
            set.into_iter().collect()
        }
    };
    let mut out = BTreeSet::new();
    let mut word = Vec::new();
    fn extend(
        s: &Setting,
        n: usize,
        weight_letters: &[Residue],
        word: &mut Vec<Residue>,
        out: &mut BTreeSet<Vec<Residue>>,
    ) {
        if word.len() == n {
            out.insert(word.clone());
            return;
        }
        let mut candidates: BTreeSet<Residue> = weight_letters.iter().copied().collect();
        for &j in word.iter() {
            candidates.insert(s.res(j - 1));
            candidates.insert(s.res(j + 1));
        }
        for i in candidates {
            word.push(i);
            if satisfies_residue_conditions(s, word) {
                extend(s, n, weight_letters, word, out);
            }
            word.pop();
        }
    }
    extend(s, n, &weight_letters, &mut word, &mut out);
    out
}

/// The same set by brute force: residue sequences of all standard tableaux
/// of all shapes of size n.
pub fn residue_sequences_by_tableaux(s: &Setting, n: usize) -> BTreeSet<Vec<Residue>> {
    let mut out = BTreeSet::new();
    for shape in multipartitions(n, s.level()) {
        for t in standard_tableaux(&shape) {
            out.insert(t.residues(s));
        }
    }
    out
}

/// The set of separated residue sequences, computed both ways with equality
/// asserted.
pub fn separated_residue_sequences(s: &Setting, n: usize) -> BTreeSet<Vec<Residue>> {
    assert!(is_separated(s, n), "setting is not separated for this n");
    let by_cond = residue_sequences_by_conditions(s, n);
    let by_tab = residue_sequences_by_tableaux(s, n);
    assert_eq!(
        by_cond, by_tab,
        "closure conditions must match tableau enumeration"
    );
    by_cond
}

/// The seminormal representation on the direct sum over all shapes of size n
/// of the standard-tableau spans: e(i) is the diagonal indicator of the
/// residue sequence, the dots act as zero, and the generator with letter r
/// swaps the entries (vanishing when the swap is not standard).
pub struct SeminormalRep {
    pub setting: Setting,
    pub n: usize,
    pub shapes: Vec<Multipartition>,
    /// basis[k] = (index into shapes, standard tableau)
    pub basis: Vec<(usize, Tableau)>,
    /// number of basis vectors per shape, aligned with `shapes`
    pub block_sizes: Vec<usize>,
}

impl SeminormalRep {
    pub fn new(setting: Setting, n: usize) -> SeminormalRep {
        assert!(is_separated(&setting, n), "setting is not separated for this n");
        let shapes = multipartitions(n, setting.level());
        let mut basis = Vec::new();
        let mut block_sizes = Vec::new();
        for (si, shape) in shapes.iter().enumerate() {
            let tabs = standard_tableaux(shape);
            block_sizes.push(tabs.len());
            for t in tabs {
                basis.push((si, t));
            }
        }
        SeminormalRep { setting, n, shapes, basis, block_sizes }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn index_of(&self, shape_idx: usize, t: &Tableau) -> Option<usize> {
        self.basis
            .iter()
            .position(|(si, u)| *si == shape_idx && u == t)
    }

    /// Matrix of the generator with 0-based letter r.
    pub fn psi_matrix(&self, r: usize) -> IntMatrix {
        let d = self.dim();
        let mut m = IntMatrix::zero(d, d);
        for (k, (si, t)) in self.basis.iter().enumerate() {
            let t2 = t.swap_entries(r);
            if t2.is_standard() {
                let j = self.index_of(*si, &t2).unwrap();
                // column j of row k: basis k maps to basis j
                *m.at_mut(k, j) = BigInt::one();
            }
        }
        m
    }

    /// Matrix of the weight idempotent for the residue word (a diagonal
    /// 0/1 matrix; by unique residue sequences at most one entry).
    pub fn e_matrix(&self, word: &[Residue]) -> IntMatrix {
        let d = self.dim();
        let mut m = IntMatrix::zero(d, d);
        for (k, (_, t)) in self.basis.iter().enumerate() {
            if t.residues(&self.setting) == word {
                *m.at_mut(k, k) = BigInt::one();
            }
        }
        m
    }

    /// Total dimension of the span of the matrix units, checked against
    /// level^n * n!.
    pub fn matrix_algebra_dim(&self) -> u64 {
        let total: u64 = self.block_sizes.iter().map(|&b| (b * b) as u64).sum();
        let level = self.setting.level() as u64;
        let factorial: u64 = (1..=self.n as u64).product();
        assert_eq!(
            total,
            level.pow(self.n as u32) * factorial,
            "sum of squared block sizes must be level^n * n!"
        );
        total
    }

    /// Verify the defining relations as matrix identities: orthogonal
    /// idempotents summing to one, dots zero, intertwining, distant
    /// commutation, the quadratic relation, and the braid relation with its
    /// plus/minus-one corrections.
    pub fn check_relations(&self) -> Result<(), String> {
        let d = self.dim();
        let words: BTreeSet<Vec<Residue>> = self
            .basis
            .iter()
            .map(|(_, t)| t.residues(&self.setting))
            .collect();
        // idempotents: e(i)e(j) = delta e(i) and sum to the identity
        let mut sum = IntMatrix::zero(d, d);
        for w in &words {
            let e = self.e_matrix(w);
            if e.mul(&e).data != e.data {
                return Err(format!("e({w:?}) is not idempotent"));
            }
            for (i, x) in e.data.iter().enumerate() {
                sum.data[i] += x;
            }
        }
        if sum.data != IntMatrix::identity(d).data {
            return Err("weight idempotents do not sum to the identity".into());
        }
        let psi: Vec<IntMatrix> = (0..self.n.saturating_sub(1)).map(|r| self.psi_matrix(r)).collect();
        for r in 0..psi.len() {
            // intertwining e(i) psi_r = psi_r e(s_r i)
            for w in &words {
                let mut sw = w.clone();
                sw.swap(r, r + 1);
                let lhs = self.e_matrix(w).mul(&psi[r]);
                let rhs = psi[r].mul(&self.e_matrix(&sw));
                if lhs.data != rhs.data {
                    return Err(format!("intertwining fails at r={r}, i={w:?}"));
                }
            }
            // distant commutation
            for t in (r + 2)..psi.len() {
                if psi[r].mul(&psi[t]).data != psi[t].mul(&psi[r]).data {
                    return Err(format!("distant letters {r},{t} do not commute"));
                }
            }
            // quadratic: psi_r^2 e(i) = 0 for neighbouring residues, e(i)
            // otherwise (equal residues cannot occur in this regime)
            let sq = psi[r].mul(&psi[r]);
            for w in &words {
                let (ir, ir1) = (w[r], w[r + 1]);
                if ir == ir1 {
                    return Err(format!("equal adjacent residues in {w:?}"));
                }
                let e = self.e_matrix(w);
                let lhs = sq.mul(&e);
                let adjacent = self.setting.arrow(ir, ir1) || self.setting.arrow(ir1, ir);
                let expect = if adjacent { IntMatrix::zero(d, d) } else { e };
                if lhs.data != expect.data {
                    return Err(format!("quadratic relation fails at r={r}, i={w:?}"));
                }
            }
        }
        // braid with corrections concentrated in degree zero
        for r in 0..psi.len().saturating_sub(1) {
            let lhs = {
                let a = psi[r].mul(&psi[r + 1]).mul(&psi[r]);
                let b = psi[r + 1].mul(&psi[r]).mul(&psi[r + 1]);
                let mut m = a;
                for (i, x) in b.data.iter().enumerate() {
                    m.data[i] -= x;
                }
                m
            };
            let mut rhs = IntMatrix::zero(d, d);
            for w in &words {
                let (ir, ir1, ir2) = (w[r], w[r + 1], w[r + 2]);
                let c = if ir2 != ir {
                    0
                } else if self.setting.arrow(ir, ir1) {
                    -1
                } else if self.setting.arrow(ir1, ir) {
                    1
                } else {
                    0
                };
                if c != 0 {
                    let e = self.e_matrix(w);
                    for (i, x) in e.data.iter().enumerate() {
                        rhs.data[i] += x * BigInt::from(c);
                    }
                }
            }
            if lhs.data != rhs.data {
                return Err(format!("braid relation fails at r={r}"));
            }
        }
        Ok(())
    }

    /// Matrix units: E_{st} maps basis t to basis s within one shape block.
    /// Returns all of them and checks E_{st}E_{uv} = delta_{tu} E_{sv}.
    pub fn matrix_units_check(&self) -> Result<usize, String> {
        let d = self.dim();
        let mut units: Vec<(usize, usize, usize)> = Vec::new(); // (shape, row, col)
        let mut offset = 0;
        for (si, &b) in self.block_sizes.iter().enumerate() {
            for i in 0..b {
                for j in 0..b {
                    units.push((si, offset + i, offset + j));
                }
            }
            offset += b;
        }
        let unit = |&(_, i, j): &(usize, usize, usize)| {
            let mut m = IntMatrix::zero(d, d);
            *m.at_mut(i, j) = BigInt::one();
            m
        };
        // spot-check the multiplication table on the full set when small
        for a in &units {
            for b in &units {
                let prod = unit(a).mul(&unit(b));
                let expect = if a.2 == b.1 {
                    let mut m = IntMatrix::zero(d, d);
                    *m.at_mut(a.1, b.2) = BigInt::one();
                    m
                } else {
                    IntMatrix::zero(d, d)
                };
                if prod.data != expect.data {
                    return Err("matrix unit multiplication failed".into());
                }
            }
        }
        let _ = BigInt::zero();
        Ok(units.len())
    }
}
