//! The graded module with standard homogeneous basis attached to a
//! multipartition, as a right module over the cyclotomic quiver Hecke
//! algebra: straightening of arbitrary generator words onto the standard
//! basis, exact integral Gram matrices of the cellular form, and graded
//! simple dimensions via pairing ranks.
//!
//! The basis element attached to a standard tableau t is the image of the
//! cyclic generator under the psi-product along the canonical reduced word
//! of d(t).  Canonical words are prefix-closed and their prefixes index
//! standard tableaux, which makes the inductive action formulas close up.

use crate::garnir::{garnir_data, garnir_nodes, GarnirData};
use crate::intmat::IntMatrix;
use crate::laurent::Laurent;
use crate::perm::Perm;
use crate::setting::{Residue, Setting};
use crate::shape::Multipartition;
use crate::tableau::{standard_tableaux, t_row, Tableau};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Exact coefficients on interned standard-tableau basis elements.
pub type Elem = BTreeMap<u32, BigInt>;

fn add_term(x: &mut Elem, id: u32, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = x.entry(id).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        x.remove(&id);
    }
}

fn add_scaled(x: &mut Elem, y: &Elem, c: &BigInt) {
    for (id, k) in y {
        add_term(x, *id, &(k * c));
    }
}

struct TabData {
    tab: Tableau,
    /// canonical reduced word of d(t)
    word: Vec<usize>,
    residues: Vec<Residue>,
    degree: i64,
}

pub struct SpechtModule {
    pub setting: Setting,
    pub shape: Multipartition,
    pub n: usize,
    level: usize,
    tabs: Vec<TabData>,
    index: HashMap<Vec<(usize, usize, usize)>, u32>,
    step_memo: HashMap<(u32, usize), Elem>,
    y_memo: HashMap<(u32, usize), Elem>,
    garnir: Vec<GarnirData>,
    top: u32,
    depth: usize,
    depth_limit: usize,
}

impl SpechtModule {
    pub fn new(setting: Setting, shape: Multipartition) -> SpechtModule {
        let level = setting.level();
        assert_eq!(shape.level(), level);
        let n = shape.size();
        let garnir = garnir_nodes(&shape)
            .into_iter()
            .map(|a| garnir_data(&setting, &shape, a))
            .collect();
        let mut m = SpechtModule {
            setting,
            shape,
            n,
            level,
            tabs: Vec::new(),
            index: HashMap::new(),
            step_memo: HashMap::new(),
            y_memo: HashMap::new(),
            garnir,
            top: 0,
            depth: 0,
            depth_limit: 10 * n.max(1) * (n * n.saturating_sub(1) / 2).max(1),
        };
        let trow = t_row(&m.shape);
        m.top = m.intern(trow);
        m
    }

    pub fn top_id(&self) -> u32 {
        self.top
    }

    pub fn intern(&mut self, t: Tableau) -> u32 {
        if let Some(&id) = self.index.get(&t.positions) {
            return id;
        }
        assert!(t.is_standard(), "only standard tableaux index basis elements");
        let data = TabData {
            word: t.d_perm(&self.shape).canonical_word(),
            residues: t.residues(&self.setting),
            degree: t.degree(&self.setting, self.level),
            tab: t,
        };
        let id = self.tabs.len() as u32;
        self.index.insert(data.tab.positions.clone(), id);
        self.tabs.push(data);
        id
    }

    pub fn tableau(&self, id: u32) -> &Tableau {
        &self.tabs[id as usize].tab
    }

    pub fn residues(&self, id: u32) -> &[Residue] {
        &self.tabs[id as usize].residues
    }

    pub fn degree(&self, id: u32) -> i64 {
        self.tabs[id as usize].degree
    }

    pub fn basis(&mut self, t: &Tableau) -> Elem {
        let id = self.intern(t.clone());
        let mut x = Elem::new();
        add_term(&mut x, id, &BigInt::one());
        x
    }

    fn enter(&mut self) {
        self.depth += 1;
        assert!(
            self.depth <= self.depth_limit,
            "straightening recursion exceeded depth {}",
            self.depth_limit
        );
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    /// Residue word carried by the image of the cyclic generator after
    /// acting by the given letters.
    fn weight_after(&self, word: &[usize]) -> Vec<Residue> {
        let mut j = self.tabs[self.top as usize].residues.clone();
        for &r in word {
            j.swap(r, r + 1);
        }
        j
    }

    /// Apply the generator with the given letter to an element.
    pub fn act_psi(&mut self, x: &Elem, r: usize) -> Elem {
        let mut out = Elem::new();
        for (id, c) in x.clone() {
            let s = self.step(id, r);
            add_scaled(&mut out, &s, &c);
        }
        out
    }

    /// Apply the dot generator at 0-based position k.
    pub fn act_y(&mut self, x: &Elem, k: usize) -> Elem {
        let mut out = Elem::new();
        for (id, c) in x.clone() {
            let s = self.y_on(id, k);
            add_scaled(&mut out, &s, &c);
        }
        out
    }

    /// Component of x on which the weight idempotent for the residue word
    /// acts as the identity.
    pub fn project_weight(&self, x: &Elem, i: &[Residue]) -> Elem {
        x.iter()
            .filter(|(id, _)| self.tabs[**id as usize].residues == i)
            .map(|(id, c)| (*id, c.clone()))
            .collect()
    }

    pub fn eval_word(&mut self, word: &[usize]) -> Elem {
        let mut x = Elem::new();
        add_term(&mut x, self.top, &BigInt::one());
        for &r in word {
            x = self.act_psi(&x, r);
        }
        x
    }

    fn fold_letters(&mut self, mut x: Elem, letters: &[usize]) -> Elem {
        for &r in letters {
            x = self.act_psi(&x, r);
        }
        x
    }

    #[cfg(debug_assertions)]
    fn check_elem(&self, x: &Elem, weight: &[Residue], degree: i64) {
        for id in x.keys() {
            let d = &self.tabs[*id as usize];
            debug_assert_eq!(d.residues, weight, "weight homogeneity violated");
            debug_assert_eq!(d.degree, degree, "degree homogeneity violated");
        }
    }

    /// v_t . psi_r expanded on the standard basis.
    fn step(&mut self, id: u32, r: usize) -> Elem {
        if let Some(v) = self.step_memo.get(&(id, r)) {
            return v.clone();
        }
        self.enter();
        let t = self.tabs[id as usize].tab.clone();
        let word = self.tabs[id as usize].word.clone();
        let w = Perm::from_word(self.n, &word);
        let mut word_r = word.clone();
        word_r.push(r);
        let res = if !w.is_right_descent(r) {
            let t2 = t.swap_entries(r);
            if t2.is_standard() {
                let id2 = self.intern(t2);
                let cw_u = self.tabs[id2 as usize].word.clone();
                let mut out = self.value_via(Vec::new(), word_r, cw_u);
                add_term(&mut out, id2, &BigInt::one());
                out
            } else if t2.is_row_standard() {
                self.garnir_step(word_r, &w.append(r))
            } else {
                // factor through the row stabilizer: the leading part of the
                // target word kills the generator, so only corrections remain
                let u = w.append(r);
                let t3 = row_sort(&t2);
                let pb = t3.d_perm(&self.shape);
                let pa = u.then(&pb.inverse());
                assert_eq!(pa.length() + pb.length(), u.length());
                assert!(pa.length() > 0);
                let mut target = pa.canonical_word();
                target.extend(pb.canonical_word());
                self.value_via(Vec::new(), word_r, target)
            }
        } else {
            // descent: v_t = v_{t2} psi_r with t2 standard, then square
            let u = w.append(r);
            let t2 = t.swap_entries(r);
            let id2 = self.intern(t2);
            debug_assert_eq!(Perm::from_word(self.n, &self.tabs[id2 as usize].word), u);
            let mut u_word_r = self.tabs[id2 as usize].word.clone();
            u_word_r.push(r);
            let corrections = self.value_via(Vec::new(), word.clone(), u_word_r);
            let mut out = self.act_psi(&corrections, r);
            let quad = self.square_on_basis(id2, r);
            add_scaled(&mut out, &quad, &BigInt::one());
            out
        };
        #[cfg(debug_assertions)]
        {
            let d = &self.tabs[id as usize];
            let mut weight = d.residues.clone();
            let degree =
                d.degree - self.setting.cartan(weight[r], weight[r + 1]);
            weight.swap(r, r + 1);
            self.check_elem(&res, &weight, degree);
        }
        self.leave();
        self.step_memo.insert((id, r), res.clone());
        res
    }

    /// v_t . psi_r^2 for standard t, from the quadratic relation at the
    /// weight of v_t.
    fn square_on_basis(&mut self, id: u32, r: usize) -> Elem {
        let j = self.tabs[id as usize].residues.clone();
        let x = {
            let mut e = Elem::new();
            add_term(&mut e, id, &BigInt::one());
            e
        };
        let (jr, jr1) = (j[r], j[r + 1]);
        if jr == jr1 {
            Elem::new()
        } else if self.setting.double_edge(jr, jr1) {
            // (2 y_r y_{r+1} - y_r^2 - y_{r+1}^2) e(i)
            let yr = self.act_y(&x, r);
            let yr1 = self.act_y(&x, r + 1);
            let mut out = Elem::new();
            let cross = self.act_y(&yr, r + 1);
            add_scaled(&mut out, &cross, &BigInt::from(2));
            let sq_r = self.act_y(&yr, r);
            add_scaled(&mut out, &sq_r, &BigInt::from(-1));
            let sq_r1 = self.act_y(&yr1, r + 1);
            add_scaled(&mut out, &sq_r1, &BigInt::from(-1));
            out
        } else if self.setting.arrow(jr, jr1) {
            // (y_r - y_{r+1}) e(i)
            let mut out = self.act_y(&x, r);
            let yr1 = self.act_y(&x, r + 1);
            add_scaled(&mut out, &yr1, &BigInt::from(-1));
            out
        } else if self.setting.arrow(jr1, jr) {
            let mut out = self.act_y(&x, r + 1);
            let yr = self.act_y(&x, r);
            add_scaled(&mut out, &yr, &BigInt::from(-1));
            out
        } else {
            x
        }
    }

    /// Rewrite the reduced word through the defining relation at a belt
    /// node: solve for the longest expansion term.
    fn garnir_step(&mut self, word_r: Vec<usize>, u: &Perm) -> Elem {
        let mut chosen = None;
        for (gi, gd) in self.garnir.iter().enumerate() {
            if gd.g_perm.length() > u.length() {
                continue;
            }
            let z = gd.g_perm.inverse().then(u);
            if gd.g_perm.length() + z.length() == u.length() {
                chosen = Some((gi, z));
                break;
            }
        }
        let (gi, z) = chosen.expect("row-standard non-standard word must factor through a belt");
        let gd = self.garnir[gi].clone();
        let zw = z.canonical_word();
        let mut target = gd.max_word.clone();
        target.extend(&zw);
        let mut out = self.value_via(Vec::new(), word_r, target);
        for lt in gd.lower_terms() {
            let mut full = lt;
            full.extend(&zw);
            let e = self.eval_word(&full);
            add_scaled(&mut out, &e, &BigInt::from(-1));
        }
        out
    }

    /// eval(prefix ++ w) - eval(prefix ++ v) for two reduced words of the
    /// same permutation, accumulated from commutation and braid moves.
    fn value_via(&mut self, mut prefix: Vec<usize>, mut w: Vec<usize>, mut v: Vec<usize>) -> Elem {
        debug_assert_eq!(w.len(), v.len());
        debug_assert_eq!(
            Perm::from_word(self.n, &w),
            Perm::from_word(self.n, &v)
        );
        self.enter();
        let mut acc = Elem::new();
        while w != v {
            let a = v.remove(0);
            if w[0] == a {
                w.remove(0);
            } else {
                let (w2, c) = self.first_letter(prefix.clone(), w, a);
                add_scaled(&mut acc, &c, &BigInt::one());
                w = w2;
            }
            prefix.push(a);
        }
        self.leave();
        acc
    }

    /// Move the letter a to the front of the reduced word w:
    /// eval(prefix ++ w) = eval(prefix ++ [a] ++ result) + corrections.
    /// Requires a to be a left descent of the permutation of w.
    fn first_letter(&mut self, prefix: Vec<usize>, w: Vec<usize>, a: usize) -> (Vec<usize>, Elem) {
        let b = w[0];
        if b == a {
            return (w[1..].to_vec(), Elem::new());
        }
        self.enter();
        let mut p1 = prefix.clone();
        p1.push(b);
        let (w2, c1) = self.first_letter(p1.clone(), w[1..].to_vec(), a);
        let result = if a.abs_diff(b) >= 2 {
            // distant letters commute exactly
            let mut nw = vec![b];
            nw.extend(&w2);
            (nw, c1)
        } else {
            let mut p2 = p1.clone();
            p2.push(a);
            let (w3, c2) = self.first_letter(p2, w2, b);
            let c3 = self.braid_correction(&prefix, b, a, &w3);
            let mut nw = vec![b, a];
            nw.extend(&w3);
            let mut c = c1;
            add_scaled(&mut c, &c2, &BigInt::one());
            add_scaled(&mut c, &c3, &BigInt::one());
            (nw, c)
        };
        self.leave();
        result
    }

    /// Correction for rewriting [b, a, b] as [a, b, a] after the prefix,
    /// with the given suffix still to be applied.
    fn braid_correction(
        &mut self,
        prefix: &[usize],
        b: usize,
        a: usize,
        suffix: &[usize],
    ) -> Elem {
        let r = a.min(b);
        debug_assert_eq!(a.max(b), r + 1);
        let j = self.weight_after(prefix);
        if j[r] != j[r + 2] {
            return Elem::new();
        }
        let (jr, jr1) = (j[r], j[r + 1]);
        let base = if self.setting.double_edge(jr, jr1) {
            // (y_r + y_{r+2} - 2 y_{r+1}) e(i)
            let e = self.eval_word(prefix);
            let mut out = self.act_y(&e, r);
            let high = self.act_y(&e, r + 2);
            add_scaled(&mut out, &high, &BigInt::one());
            let mid = self.act_y(&e, r + 1);
            add_scaled(&mut out, &mid, &BigInt::from(-2));
            out
        } else if self.setting.arrow(jr, jr1) {
            let e = self.eval_word(prefix);
            let mut out = Elem::new();
            add_scaled(&mut out, &e, &BigInt::from(-1));
            out
        } else if self.setting.arrow(jr1, jr) {
            self.eval_word(prefix)
        } else {
            return Elem::new();
        };
        // [r, r+1, r] = [r+1, r, r+1] + correction; sign flips the other way
        let sign = if b < a { BigInt::one() } else { BigInt::from(-1) };
        let folded = self.fold_letters(base, suffix);
        let mut out = Elem::new();
        add_scaled(&mut out, &folded, &sign);
        out
    }

    /// v_t . y_{k+1} (0-based position k) on the standard basis.
    fn y_on(&mut self, id: u32, k: usize) -> Elem {
        if id == self.top {
            return Elem::new();
        }
        if let Some(v) = self.y_memo.get(&(id, k)) {
            return v.clone();
        }
        self.enter();
        let word = self.tabs[id as usize].word.clone();
        let r = *word.last().unwrap();
        let u_tab = self.tabs[id as usize].tab.swap_entries(r);
        let uid = self.intern(u_tab);
        debug_assert_eq!(self.tabs[uid as usize].word, word[..word.len() - 1]);
        let delta = self.tabs[uid as usize].residues[r] == self.tabs[uid as usize].residues[r + 1];
        // v_t = v_u psi_r exactly, so commute y past the last letter
        let res = if k == r + 1 {
            let inner = self.y_on(uid, r);
            let mut out = self.act_psi(&inner, r);
            if delta {
                add_term(&mut out, uid, &BigInt::one());
            }
            out
        } else if k == r {
            let inner = self.y_on(uid, r + 1);
            let mut out = self.act_psi(&inner, r);
            if delta {
                add_term(&mut out, uid, &BigInt::from(-1));
            }
            out
        } else {
            let inner = self.y_on(uid, k);
            self.act_psi(&inner, r)
        };
        #[cfg(debug_assertions)]
        {
            let d = &self.tabs[id as usize];
            let (weight, degree) = (d.residues.clone(), d.degree + 2);
            self.check_elem(&res, &weight, degree);
        }
        self.leave();
        self.y_memo.insert((id, k), res.clone());
        res
    }

    /// Cellular form value for the two basis words (canonical reduced words
    /// unless overridden).  The computation is self-certifying: the result
    /// of pairing against the dual basis element must be an exact multiple
    /// of the cyclic generator.
    pub fn gram_entry_words(&mut self, ws: &[usize], wt: &[usize]) -> BigInt {
        let y_exps = y_exponents_deg(&self.setting, &self.shape);
        let mut x = self.eval_word(ws);
        for &l in wt.iter().rev() {
            x = self.act_psi(&x, l);
        }
        for (k, &e) in y_exps.iter().enumerate() {
            for _ in 0..e {
                x = self.act_y(&x, k);
            }
        }
        let top_res = self.tabs[self.top as usize].residues.clone();
        let x = self.project_weight(&x, &top_res);
        let c = x.get(&self.top).cloned().unwrap_or_else(BigInt::zero);
        assert!(
            x.len() <= 1,
            "pairing must land on the cyclic generator exactly"
        );
        c
    }

    pub fn gram_entry(&mut self, s_tab: &Tableau, t_tab: &Tableau) -> BigInt {
        let ws = s_tab.d_perm(&self.shape).canonical_word();
        let wt = t_tab.d_perm(&self.shape).canonical_word();
        self.gram_entry_words(&ws, &wt)
    }

    /// Gram matrix on an explicit list of tableaux (rows and columns in the
    /// given order), with an optional reduced-word override per tableau.
    pub fn gram_on(&mut self, tabs: &[Tableau], words: Option<&[Vec<usize>]>) -> IntMatrix {
        let words: Vec<Vec<usize>> = match words {
            Some(ws) => ws.to_vec(),
            None => tabs
                .iter()
                .map(|t| t.d_perm(&self.shape).canonical_word())
                .collect(),
        };
        let mut m = IntMatrix::zero(tabs.len(), tabs.len());
        for (i, wi) in words.iter().enumerate() {
            for (j, wj) in words.iter().enumerate() {
                *m.at_mut(i, j) = self.gram_entry_words(wi, wj);
            }
        }
        m.row_labels = tabs.iter().map(|t| t.display(&self.shape)).collect();
        m.col_labels = m.row_labels.clone();
        m
    }

    /// Full Gram matrix over all standard tableaux of the shape.
    pub fn gram_matrix(&mut self) -> IntMatrix {
        let tabs = standard_tableaux(&self.shape);
        self.gram_on(&tabs, None)
    }

    /// Graded dimensions of the simple head over a field of the given
    /// characteristic (0 for the rationals), reported per residue word and
    /// degree as the rank of the degree-d against degree-(-d) pairing.
    pub fn simple_dims(
        &mut self,
        characteristic: u64,
    ) -> BTreeMap<Vec<Residue>, BTreeMap<i64, usize>> {
        let tabs = standard_tableaux(&self.shape);
        let mut by_weight: BTreeMap<Vec<Residue>, Vec<Tableau>> = BTreeMap::new();
        for t in tabs {
            by_weight
                .entry(t.residues(&self.setting))
                .or_default()
                .push(t);
        }
        let mut out = BTreeMap::new();
        for (i, block) in by_weight {
            let dims = self.simple_dims_at(&block, characteristic);
            if !dims.is_empty() {
                out.insert(i, dims);
            }
        }
        out
    }

    /// Pairing ranks for the block of tableaux sharing one residue word.
    pub fn simple_dims_at(
        &mut self,
        block: &[Tableau],
        characteristic: u64,
    ) -> BTreeMap<i64, usize> {
        let mut by_deg: BTreeMap<i64, Vec<&Tableau>> = BTreeMap::new();
        for t in block {
            by_deg.entry(t.degree(&self.setting, self.level)).or_default().push(t);
        }
        let mut out = BTreeMap::new();
        for (&d, rows) in &by_deg {
            let Some(cols) = by_deg.get(&-d) else { continue };
            let mut m = IntMatrix::zero(rows.len(), cols.len());
            for (i, s) in rows.iter().enumerate() {
                for (j, t) in cols.iter().enumerate() {
                    *m.at_mut(i, j) = self.gram_entry(s, t);
                }
            }
            let rank = m.rank_over(characteristic);
            if rank > 0 {
                out.insert(d, rank);
            }
        }
        out
    }

    /// Graded dimension of the simple head as a Laurent polynomial.
    pub fn simple_graded_dim(&mut self, characteristic: u64) -> Laurent {
        let mut out = Laurent::zero();
        for (_, dims) in self.simple_dims(characteristic) {
            for (d, r) in dims {
                out.add_term(d, &BigInt::from(r));
            }
        }
        out
    }
}

fn row_sort(t: &Tableau) -> Tableau {
    let shape = t.shape();
    let mut rows = t.rows(&shape);
    for comp in &mut rows {
        for row in comp {
            row.sort_unstable();
        }
    }
    Tableau::from_rows(&rows)
}

/// Exponent of y_{k+1} in the dot product attached to the shape, from the
/// degree increments of the initial segments of the row filling.
pub fn y_exponents_deg(s: &Setting, shape: &Multipartition) -> Vec<u64> {
    let trow = t_row(shape);
    let level = shape.level();
    let mut prev = 0;
    let mut out = Vec::with_capacity(shape.size());
    for k in 1..=shape.size() {
        let d = trow.restrict(k).degree(s, level);
        let inc = d - prev;
        assert!(inc >= 0, "degree increments of the row filling are nonnegative");
        out.push(inc as u64);
        prev = d;
    }
    out
}

/// Codegree counterpart: increments of the initial segments of the column
/// filling.
pub fn y_exponents_codeg(s: &Setting, shape: &Multipartition) -> Vec<u64> {
    let tcol = crate::tableau::t_col(shape);
    let level = shape.level();
    let mut prev = 0;
    let mut out = Vec::with_capacity(shape.size());
    for k in 1..=shape.size() {
        let d = tcol.restrict(k).codegree(s, level);
        let inc = d - prev;
        assert!(inc >= 0, "codegree increments of the row filling are nonnegative");
        out.push(inc as u64);
        prev = d;
    }
    out
}

/// Graded character: residue word -> Laurent sum of q^{deg t}.
pub fn specht_character(
    s: &Setting,
    shape: &Multipartition,
) -> BTreeMap<Vec<Residue>, Laurent> {
    let level = shape.level();
    let mut out: BTreeMap<Vec<Residue>, Laurent> = BTreeMap::new();
    for t in standard_tableaux(shape) {
        out.entry(t.residues(s))
            .or_insert_with(Laurent::zero)
            .add_term(t.degree(s, level), &BigInt::one());
    }
    out
}

/// Run a closure on a thread with a large stack; deep straightening
/// recursions on bigger shapes can exceed the default stack size.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(256 * 1024 * 1024)
        .spawn(f)
        .expect("spawn worker thread")
        .join()
        .expect("worker thread panicked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setting::Echar;

    fn setting2() -> Setting {
        Setting::new(Echar::Fin(2), vec![0])
    }

    #[test]
    fn y_exponents_small() {
        // shape (2,2,1) at e=2: the dot product is y_2 y_4
        let exps = y_exponents_deg(&setting2(), &Multipartition::parse("2,2,1", 1).unwrap());
        assert_eq!(exps, vec![0, 1, 0, 1, 0]);
    }

    #[test]
    fn y_exponents_two_component() {
        // e=3, charge (0,2), shape (7,6,3,2|4,3,1)
        let s = Setting::new(Echar::Fin(3), vec![0, 2]);
        let mu = Multipartition::parse("7,6,3,2|4,3,1", 2).unwrap();
        let upper = y_exponents_deg(&s, &mu);
        let mut expect = vec![0u64; 26];
        for (pos, e) in [(3, 2), (6, 2), (8, 1), (10, 1), (11, 1), (13, 1), (15, 1), (16, 1), (21, 1), (25, 1)] {
            expect[pos - 1] = e;
        }
        assert_eq!(upper, expect);
        let lower = y_exponents_codeg(&s, &mu);
        let mut expect = vec![0u64; 26];
        for (pos, e) in [(3, 2), (4, 1), (7, 1), (11, 1), (15, 1), (19, 1)] {
            expect[pos - 1] = e;
        }
        assert_eq!(lower, expect);
    }

    #[test]
    fn straighten_belt_relation() {
        // e=2, shape (3,2): the row-standard filling [[1,4,5],[2,3]] equals
        // -2 times the row filling
        let mut m = SpechtModule::new(setting2(), Multipartition::parse("3,2", 1).unwrap());
        let t = Tableau::from_rows_1based(&[vec![vec![1, 4, 5], vec![2, 3]]]);
        let d = t.d_perm(&m.shape.clone());
        let x = m.eval_word(&d.canonical_word());
        let mut expect = Elem::new();
        add_term(&mut expect, m.top_id(), &BigInt::from(-2));
        assert_eq!(x, expect);
    }

    #[test]
    fn gram_of_221() {
        let mut m = SpechtModule::new(setting2(), Multipartition::parse("2,2,1", 1).unwrap());
        let tabs: Vec<Tableau> = vec![
            Tableau::from_rows_1based(&[vec![vec![1, 2], vec![3, 4], vec![5]]]),
            Tableau::from_rows_1based(&[vec![vec![1, 3], vec![2, 4], vec![5]]]),
            Tableau::from_rows_1based(&[vec![vec![1, 3], vec![2, 5], vec![4]]]),
            Tableau::from_rows_1based(&[vec![vec![1, 2], vec![3, 5], vec![4]]]),
            Tableau::from_rows_1based(&[vec![vec![1, 4], vec![2, 5], vec![3]]]),
        ];
        // the listed reduced words: 1, s2, s2 s4, s4, s2 s4 s3
        let words: Vec<Vec<usize>> = vec![vec![], vec![1], vec![1, 3], vec![3], vec![1, 3, 2]];
        let g = m.gram_on(&tabs, Some(&words));
        let expect = IntMatrix::from_rows(vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, -2],
        ]);
        assert_eq!(g.data, expect.data);
        // same values along the canonical words
        let g2 = m.gram_on(&tabs, None);
        assert_eq!(g2.data, expect.data);
        let mut div: Vec<BigInt> = g.snf_divisors();
        div.sort();
        assert_eq!(
            div,
            vec![1, 1, 1, 1, 2].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(m.simple_graded_dim(0).eval1(), BigInt::from(5));
        assert_eq!(m.simple_graded_dim(2).eval1(), BigInt::from(4));
    }

    #[test]
    fn word_independence() {
        // evaluating along any reduced word gives the same element
        for (e, shapes) in [
            (Echar::Fin(2), vec!["2,2", "3,1", "2,1,1", "3,2"]),
            (Echar::Fin(3), vec!["2,2", "3,2", "2,2,1"]),
            (Echar::Inf, vec!["2,2", "3,1"]),
        ] {
            let s = Setting::new(e, vec![0]);
            for text in shapes {
                let shape = Multipartition::parse(text, 1).unwrap();
                let mut m = SpechtModule::new(s.clone(), shape.clone());
                for t in standard_tableaux(&shape) {
                    let d = t.d_perm(&shape);
                    let a = m.eval_word(&d.canonical_word());
                    let b = m.eval_word(&d.alt_word());
                    assert_eq!(a, b, "e={e:?} shape {text} tableau {t:?}");
                }
            }
        }
    }

    #[test]
    fn gram_symmetric_small() {
        for (e, text) in [
            (Echar::Fin(2), "2,2"),
            (Echar::Fin(2), "3,2"),
            (Echar::Fin(3), "2,2,1"),
            (Echar::Inf, "3,1"),
        ] {
            let s = Setting::new(e, vec![0]);
            let shape = Multipartition::parse(text, 1).unwrap();
            let mut m = SpechtModule::new(s, shape);
            let g = m.gram_matrix();
            assert!(g.is_symmetric(), "e={e:?} {text}\n{:?}", g.data);
        }
    }

    #[test]
    fn semisimple_full_rank() {
        // e larger than n with small weight multiplicities: the form is
        // nondegenerate over the rationals
        let s = Setting::new(Echar::Fin(7), vec![0]);
        for text in ["3,1", "2,2", "2,1,1"] {
            let shape = Multipartition::parse(text, 1).unwrap();
            let mut m = SpechtModule::new(s.clone(), shape.clone());
            let g = m.gram_matrix();
            assert_eq!(g.rank_rational(), standard_tableaux(&shape).len(), "{text}");
        }
    }

    #[test]
    fn dot_nilpotence() {
        // each dot acts nilpotently
        let s = setting2();
        let shape = Multipartition::parse("2,2", 1).unwrap();
        let mut m = SpechtModule::new(s, shape.clone());
        for t in standard_tableaux(&shape) {
            for k in 0..4 {
                let mut x = m.basis(&t);
                for _ in 0..8 {
                    x = m.act_y(&x, k);
                }
                assert!(x.is_empty(), "y_{k} not nilpotent on {t:?}");
            }
        }
    }

    #[test]
    fn defining_relations_on_generator() {
        // generator relations: weight projection, dots vanish, row-stabilizer
        // letters vanish
        let s = Setting::new(Echar::Fin(3), vec![0]);
        let shape = Multipartition::parse("3,2", 1).unwrap();
        let mut m = SpechtModule::new(s, shape.clone());
        let top = {
            let t = t_row(&shape);
            m.basis(&t)
        };
        for k in 0..5 {
            assert!(m.act_y(&top, k).is_empty());
        }
        // s_1, s_2 fix the first row; s_4 fixes the second
        for r in [0, 1, 3] {
            assert!(m.act_psi(&top, r).is_empty(), "letter {r}");
        }
    }
}
