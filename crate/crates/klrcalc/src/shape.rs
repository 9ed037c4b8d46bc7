//! Multipartitions, diagrams, dominance, conjugation, and block data.

use crate::setting::{Residue, RootElement, Setting};
use std::cmp::Ordering;
use std::fmt;

/// A node (component, row, column), all 0-based.  The derived order is the
/// lexicographic one; it is the node order used throughout.
pub type Node = (usize, usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    /// Weakly decreasing positive parts per component; empty component = [].
    pub comps: Vec<Vec<u32>>,
}

impl Multipartition {
    pub fn new(comps: Vec<Vec<u32>>) -> Multipartition {
        for c in &comps {
            for w in c.windows(2) {
                assert!(w[0] >= w[1], "parts must be weakly decreasing");
            }
            assert!(c.iter().all(|&p| p > 0), "parts must be positive");
        }
        Multipartition { comps }
    }

    pub fn empty(level: usize) -> Multipartition {
        Multipartition { comps: vec![Vec::new(); level] }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().map(|&p| p as usize).sum()
    }

    pub fn row_len(&self, l: usize, r: usize) -> usize {
        self.comps[l].get(r).map_or(0, |&p| p as usize)
    }

    pub fn contains(&self, node: Node) -> bool {
        let (l, r, c) = node;
        l < self.level() && c < self.row_len(l, r)
    }

    /// All nodes of the diagram in lexicographic order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (l, comp) in self.comps.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                for c in 0..len as usize {
                    out.push((l, r, c));
                }
            }
        }
        out
    }

    /// Nodes that can be added keeping a multipartition shape
    /// (one candidate per row, including the virtual empty row below).
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.comps.iter().enumerate() {
            for r in 0..=comp.len() {
                let here = self.row_len(l, r);
                let above = if r == 0 { usize::MAX } else { self.row_len(l, r - 1) };
                if here < above {
                    out.push((l, r, here));
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.comps.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                let below = self.row_len(l, r + 1);
                if (len as usize) > below {
                    out.push((l, r, len as usize - 1));
                }
            }
        }
        out
    }

    pub fn addable_nodes_res(&self, s: &Setting, i: Residue) -> Vec<Node> {
        self.addable_nodes()
            .into_iter()
            .filter(|&(l, r, c)| s.residue(l, r, c) == s.res(i))
            .collect()
    }

    pub fn removable_nodes_res(&self, s: &Setting, i: Residue) -> Vec<Node> {
        self.removable_nodes()
            .into_iter()
            .filter(|&(l, r, c)| s.residue(l, r, c) == s.res(i))
            .collect()
    }

    pub fn add_node(&self, node: Node) -> Multipartition {
        let (l, r, c) = node;
        let mut comps = self.comps.clone();
        if r == comps[l].len() {
            assert_eq!(c, 0);
            comps[l].push(1);
        } else {
            assert_eq!(c, comps[l][r] as usize);
            comps[l][r] += 1;
        }
        Multipartition::new(comps)
    }

    pub fn remove_node(&self, node: Node) -> Multipartition {
        let (l, r, c) = node;
        let mut comps = self.comps.clone();
        assert_eq!(c, comps[l][r] as usize - 1);
        comps[l][r] -= 1;
        if comps[l][r] == 0 {
            assert_eq!(r, comps[l].len() - 1);
            comps[l].pop();
        }
        Multipartition { comps }
    }

    /// Partial sums over the flattened padded part list; dominance compares
    /// these pointwise.
    fn partial_sums(&self, pad: usize) -> Vec<u64> {
        let mut sums = Vec::new();
        let mut acc = 0u64;
        for comp in &self.comps {
            for r in 0..pad {
                acc += comp.get(r).copied().unwrap_or(0) as u64;
                sums.push(acc);
            }
        }
        sums
    }

    /// Dominance order on multipartitions of the same size and level.
    pub fn dominates(&self, other: &Multipartition) -> bool {
        assert_eq!(self.level(), other.level(), "level mismatch");
        assert_eq!(self.size(), other.size(), "size mismatch");
        let pad = self.size().max(1);
        let a = self.partial_sums(pad);
        let b = other.partial_sums(pad);
        a.iter().zip(&b).all(|(x, y)| x >= y)
    }

    /// Total order refining dominance: flattened part lists compared
    /// lexicographically, larger first.
    pub fn cmp_dominance_key(&self, other: &Multipartition) -> Ordering {
        let pad = self.size().max(other.size()).max(1);
        for l in 0..self.level().max(other.level()) {
            for r in 0..pad {
                let a = self.comps.get(l).and_then(|c| c.get(r)).copied().unwrap_or(0);
                let b = other.comps.get(l).and_then(|c| c.get(r)).copied().unwrap_or(0);
                match b.cmp(&a) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }

    /// Conjugate: components reversed, each partition transposed.
    pub fn conjugate(&self) -> Multipartition {
        let comps = self
            .comps
            .iter()
            .rev()
            .map(|c| transpose_partition(c))
            .collect();
        Multipartition { comps }
    }

    /// Residue content beta^lambda.
    pub fn beta(&self, s: &Setting) -> RootElement {
        let mut beta = RootElement::new();
        for (l, r, c) in self.nodes() {
            *beta.entry(s.residue(l, r, c)).or_insert(0) += 1;
        }
        beta
    }

    pub fn defect(&self, s: &Setting) -> i64 {
        s.defect(&self.beta(s))
    }

    /// Parse the shape grammar: components '|', parts ',', repetition '^'.
    pub fn parse(text: &str, level: usize) -> Result<Multipartition, String> {
        let mut comps = Vec::new();
        for part in text.split('|') {
            let part = part.trim();
            let mut parts = Vec::new();
            if !(part.is_empty() || part == "0" || part == "-") {
                for item in part.split(',') {
                    let item = item.trim();
                    let (base, reps) = match item.split_once('^') {
                        Some((b, r)) => (
                            b.trim().parse::<u32>().map_err(|_| format!("bad part {item:?}"))?,
                            r.trim().parse::<u32>().map_err(|_| format!("bad repetition {item:?}"))?,
                        ),
                        None => (item.parse::<u32>().map_err(|_| format!("bad part {item:?}"))?, 1),
                    };
                    if base == 0 {
                        return Err(format!("zero part in {text:?}"));
                    }
                    for _ in 0..reps {
                        parts.push(base);
                    }
                }
            }
            for w in parts.windows(2) {
                if w[0] < w[1] {
                    return Err(format!("parts not weakly decreasing in {text:?}"));
                }
            }
            comps.push(parts);
        }
        while comps.len() < level {
            comps.push(Vec::new());
        }
        if comps.len() != level {
            return Err(format!(
                "shape {text:?} has {} components but the level is {level}",
                comps.len()
            ));
        }
        Ok(Multipartition { comps })
    }
}

/// d_A: addable minus removable i-nodes strictly after A in the node order.
pub fn d_below(s: &Setting, shape: &Multipartition, a: Node) -> i64 {
    let (l, r, c) = a;
    let i = s.residue(l, r, c);
    let add = shape.addable_nodes_res(s, i).iter().filter(|&&b| b > a).count() as i64;
    let rem = shape.removable_nodes_res(s, i).iter().filter(|&&b| b > a).count() as i64;
    add - rem
}

/// d^A: addable minus removable i-nodes strictly before A.
pub fn d_above(s: &Setting, shape: &Multipartition, a: Node) -> i64 {
    let (l, r, c) = a;
    let i = s.residue(l, r, c);
    let add = shape.addable_nodes_res(s, i).iter().filter(|&&b| b < a).count() as i64;
    let rem = shape.removable_nodes_res(s, i).iter().filter(|&&b| b < a).count() as i64;
    add - rem
}

/// d_i = #addable - #removable i-nodes.
pub fn d_res(s: &Setting, shape: &Multipartition, i: Residue) -> i64 {
    shape.addable_nodes_res(s, i).len() as i64 - shape.removable_nodes_res(s, i).len() as i64
}

/// d_A^C: addable minus removable i-nodes strictly between A and C.
pub fn d_between(s: &Setting, shape: &Multipartition, a: Node, c: Node) -> i64 {
    assert!(a < c);
    let (l, r, cc) = a;
    let i = s.residue(l, r, cc);
    let add = shape
        .addable_nodes_res(s, i)
        .iter()
        .filter(|&&b| a < b && b < c)
        .count() as i64;
    let rem = shape
        .removable_nodes_res(s, i)
        .iter()
        .filter(|&&b| a < b && b < c)
        .count() as i64;
    add - rem
}

fn transpose_partition(parts: &[u32]) -> Vec<u32> {
    let Some(&max) = parts.first() else { return Vec::new() };
    (0..max)
        .map(|c| parts.iter().filter(|&&p| p > c).count() as u32)
        .collect()
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp_strs: Vec<String> = self
            .comps
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "-".to_string()
                } else {
                    c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "{}", comp_strs.join("|"))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// All partitions of n, most dominant first.
pub fn partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let top = n.min(max);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All level-`level` multipartitions of n, in the total order refining
/// dominance (more dominant first).
pub fn multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    fn rec(
        n: usize,
        level: usize,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Multipartition>,
    ) {
        if cur.len() == level {
            if n == 0 {
                out.push(Multipartition { comps: cur.clone() });
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in partitions(k) {
                cur.push(p);
                rec(n - k, level, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, level, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.cmp_dominance_key(b));
    out
}
