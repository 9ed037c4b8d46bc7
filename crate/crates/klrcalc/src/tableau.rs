//! Fillings of multipartition diagrams, standardness, residue sequences,
//! degrees, and the permutations relating a tableau to the row and column
//! superstandard fillings.

use crate::perm::Perm;
use crate::setting::{Residue, Setting};
use crate::shape::{d_above, d_below, Multipartition, Node};
use std::cmp::Ordering;
use std::fmt;

/// A bijective filling of a diagram by the entries 0..n-1 (displayed 1-based).
/// positions[k] is the node holding entry k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub positions: Vec<Node>,
}

impl Tableau {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn shape(&self) -> Multipartition {
        let level = self.positions.iter().map(|&(l, _, _)| l + 1).max().unwrap_or(1);
        let mut comps: Vec<Vec<u32>> = vec![Vec::new(); level];
        for &(l, r, _) in &self.positions {
            if comps[l].len() <= r {
                comps[l].resize(r + 1, 0);
            }
            comps[l][r] += 1;
        }
        Multipartition::new(comps)
    }

    /// Shape with the level fixed (trailing empty components kept).
    pub fn shape_with_level(&self, level: usize) -> Multipartition {
        let mut comps: Vec<Vec<u32>> = vec![Vec::new(); level];
        for &(l, r, _) in &self.positions {
            if comps[l].len() <= r {
                comps[l].resize(r + 1, 0);
            }
            comps[l][r] += 1;
        }
        Multipartition::new(comps)
    }

    pub fn entry(&self, node: Node) -> Option<usize> {
        self.positions.iter().position(|&p| p == node)
    }

    /// Entry-lists per component row, for display and serialization.
    pub fn rows(&self, shape: &Multipartition) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = shape
            .comps
            .iter()
            .map(|c| c.iter().map(|&len| vec![usize::MAX; len as usize]).collect())
            .collect();
        for (k, &(l, r, c)) in self.positions.iter().enumerate() {
            out[l][r][c] = k;
        }
        out
    }

    pub fn from_rows(rows: &[Vec<Vec<usize>>]) -> Tableau {
        let n: usize = rows.iter().flatten().map(|r| r.len()).sum();
        let mut positions = vec![(0, 0, 0); n];
        for (l, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (c, &k) in row.iter().enumerate() {
                    positions[k] = (l, r, c);
                }
            }
        }
        Tableau { positions }
    }

    /// 1-based convenience constructor for tests.
    pub fn from_rows_1based(rows: &[Vec<Vec<usize>>]) -> Tableau {
        let shifted: Vec<Vec<Vec<usize>>> = rows
            .iter()
            .map(|comp| comp.iter().map(|row| row.iter().map(|&k| k - 1).collect()).collect())
            .collect();
        Tableau::from_rows(&shifted)
    }

    pub fn is_row_standard(&self) -> bool {
        // entries increase left to right in every row
        for (k, &(l, r, c)) in self.positions.iter().enumerate() {
            if c > 0 {
                match self.entry((l, r, c - 1)) {
                    Some(m) if m < k => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        for (k, &(l, r, c)) in self.positions.iter().enumerate() {
            if c > 0 {
                match self.entry((l, r, c - 1)) {
                    Some(m) if m < k => {}
                    _ => return false,
                }
            }
            if r > 0 {
                match self.entry((l, r - 1, c)) {
                    Some(m) if m < k => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Swap the entries k and k+1 (the place-permutation action of s_{k+1}).
    pub fn swap_entries(&self, k: usize) -> Tableau {
        let mut positions = self.positions.clone();
        positions.swap(k, k + 1);
        Tableau { positions }
    }

    /// Apply a word letter by letter.
    pub fn act_word(&self, word: &[usize]) -> Tableau {
        let mut t = self.clone();
        for &r in word {
            t = t.swap_entries(r);
        }
        t
    }

    pub fn residues(&self, s: &Setting) -> Vec<Residue> {
        self.positions.iter().map(|&(l, r, c)| s.residue(l, r, c)).collect()
    }

    /// Integer contents kappa_l + c - r per entry.
    pub fn contents(&self, charge: &[i64]) -> Vec<i64> {
        self.positions
            .iter()
            .map(|&(l, r, c)| charge[l] + c as i64 - r as i64)
            .collect()
    }

    /// Restriction to the entries 0..m-1.
    pub fn restrict(&self, m: usize) -> Tableau {
        Tableau { positions: self.positions[..m].to_vec() }
    }

    /// Degree of a standard tableau (recursion over the largest entry).
    pub fn degree(&self, s: &Setting, level: usize) -> i64 {
        let mut deg = 0;
        let mut shape = self.shape_with_level(level);
        for k in (0..self.n()).rev() {
            deg += d_below(s, &shape, self.positions[k]);
            shape = shape.remove_node(self.positions[k]);
        }
        deg
    }

    pub fn codegree(&self, s: &Setting, level: usize) -> i64 {
        let mut codeg = 0;
        let mut shape = self.shape_with_level(level);
        for k in (0..self.n()).rev() {
            codeg += d_above(s, &shape, self.positions[k]);
            shape = shape.remove_node(self.positions[k]);
        }
        codeg
    }

    /// The permutation d(t) with t^lambda . d(t) = t.
    pub fn d_perm(&self, shape: &Multipartition) -> Perm {
        let trow = t_row(shape);
        let mut map = vec![0; self.n()];
        for (node_idx, node) in shape.nodes().iter().enumerate() {
            let _ = node_idx;
            let from = trow.entry(*node).unwrap();
            let to = self.entry(*node).unwrap();
            map[from] = to;
        }
        Perm::from_images(map)
    }

    /// The permutation d'(t) with t_lambda . d'(t) = t.
    pub fn d_prime_perm(&self, shape: &Multipartition) -> Perm {
        let tcol = t_col(shape);
        let mut map = vec![0; self.n()];
        for node in shape.nodes() {
            let from = tcol.entry(node).unwrap();
            let to = self.entry(node).unwrap();
            map[from] = to;
        }
        Perm::from_images(map)
    }

    /// Tableau dominance: Shape(s|m) dominates Shape(t|m) for all m.
    pub fn dominates(&self, other: &Tableau, level: usize) -> bool {
        assert_eq!(self.n(), other.n());
        (1..=self.n()).all(|m| {
            self.restrict(m)
                .shape_with_level(level)
                .dominates(&other.restrict(m).shape_with_level(level))
        })
    }

    /// Conjugate tableau (entries transported to the conjugate shape).
    pub fn conjugate(&self, level: usize) -> Tableau {
        let positions = self
            .positions
            .iter()
            .map(|&(l, r, c)| (level - 1 - l, c, r))
            .collect();
        Tableau { positions }
    }

    pub fn display(&self, shape: &Multipartition) -> String {
        let rows = self.rows(shape);
        let comp_strs: Vec<String> = rows
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "-".to_string()
                } else {
                    comp.iter()
                        .map(|row| {
                            row.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(",")
                        })
                        .collect::<Vec<_>>()
                        .join(";")
                }
            })
            .collect();
        format!("[{}]", comp_strs.join("|"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&self.shape()))
    }
}

/// t^lambda: fill components in order, rows left to right.
pub fn t_row(shape: &Multipartition) -> Tableau {
    Tableau { positions: shape.nodes() }
}

/// t_lambda: fill the components in reverse order, columns top to bottom.
pub fn t_col(shape: &Multipartition) -> Tableau {
    let mut positions = Vec::with_capacity(shape.size());
    for l in (0..shape.level()).rev() {
        let comp = &shape.comps[l];
        let width = comp.first().copied().unwrap_or(0) as usize;
        for c in 0..width {
            for (r, &len) in comp.iter().enumerate() {
                if c < len as usize {
                    positions.push((l, r, c));
                }
            }
        }
    }
    Tableau { positions }
}

/// Key used to order standard tableaux: the chain of restricted shapes,
/// compared so that t^lambda comes first and t_lambda last.
fn chain_cmp(a: &Tableau, b: &Tableau, level: usize) -> Ordering {
    for m in 1..=a.n() {
        let sa = a.restrict(m).shape_with_level(level);
        let sb = b.restrict(m).shape_with_level(level);
        match sa.cmp_dominance_key(&sb) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// All standard tableaux of the shape; first t^lambda, last t_lambda.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<Tableau> {
    let mut out = Vec::new();
    // build by removing the largest entry from a removable node
    fn build(shape: &Multipartition, out: &mut Vec<Tableau>, partial: &mut Vec<Node>) {
        if shape.size() == 0 {
            let mut positions = partial.clone();
            positions.reverse();
            out.push(Tableau { positions });
            return;
        }
        for node in shape.removable_nodes() {
            partial.push(node);
            let smaller = shape.remove_node(node);
            build(&smaller, out, partial);
            partial.pop();
        }
    }
    build(shape, &mut out, &mut Vec::new());
    let level = shape.level();
    out.sort_by(|a, b| chain_cmp(a, b, level));
    out
}

/// Standard tableaux with the given residue sequence, found by residue-guided
/// placement without enumerating all of Std(lambda).
pub fn standard_tableaux_with_residues(
    s: &Setting,
    shape: &Multipartition,
    word: &[Residue],
) -> Vec<Tableau> {
    assert_eq!(word.len(), shape.size());
    let mut out = Vec::new();
    fn build(
        s: &Setting,
        target: &Multipartition,
        word: &[Residue],
        cur: &Multipartition,
        positions: &mut Vec<Node>,
        out: &mut Vec<Tableau>,
    ) {
        let k = positions.len();
        if k == word.len() {
            out.push(Tableau { positions: positions.clone() });
            return;
        }
        for node in cur.addable_nodes_res(s, word[k]) {
            if !target.contains(node) {
                continue;
            }
            positions.push(node);
            let bigger = cur.add_node(node);
            build(s, target, word, &bigger, positions, out);
            positions.pop();
        }
    }
    build(
        s,
        shape,
        word,
        &Multipartition::empty(shape.level()),
        &mut Vec::new(),
        &mut out,
    );
    let level = shape.level();
    out.sort_by(|a, b| chain_cmp(a, b, level));
    out
}
