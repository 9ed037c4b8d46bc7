//! Permutations of {0,..,n-1} with canonical reduced words.
//!
//! Words are sequences of letters r (0-based) standing for the adjacent
//! transposition swapping r and r+1.  A word is read left to right; the
//! permutation of a word is the composite obtained by applying each letter
//! to the *values* produced so far, so appending a letter on the right of a
//! word is Coxeter right multiplication.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    /// map[x] = image of x
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { map: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn from_images(map: Vec<usize>) -> Self {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            assert!(v < map.len() && !seen[v], "not a permutation");
            seen[v] = true;
        }
        Perm { map }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Perm { map: inv }
    }

    /// Do `self`'s word, then `other`'s word: x -> other(self(x)).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { map: self.map.iter().map(|&v| other.map[v]).collect() }
    }

    /// Append letter r on the right of the word: swaps the values r, r+1.
    pub fn append(&self, r: usize) -> Perm {
        let mut map = self.map.clone();
        for v in map.iter_mut() {
            if *v == r {
                *v = r + 1;
            } else if *v == r + 1 {
                *v = r;
            }
        }
        Perm { map }
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(n);
        for &r in word {
            p = p.append(r);
        }
        p
    }

    /// Transposition swapping values a and b.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        // map currently swaps *positions* a,b of the identity, which is the
        // same permutation as swapping the values a,b.
        Perm { map }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] > self.map[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// True when appending letter r shortens the word.
    pub fn is_right_descent(&self, r: usize) -> bool {
        let inv = self.inverse();
        inv.map[r] > inv.map[r + 1]
    }

    /// Canonical reduced word: repeatedly peel the smallest right descent.
    pub fn canonical_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for r in 0..w.n() - 1 {
                if w.is_right_descent(r) {
                    rev.push(r);
                    w = w.append(r);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation with no descent");
        }
        rev.reverse();
        rev
    }

    /// Alternative convention used by the word-independence tests:
    /// repeatedly peel the *largest* right descent.
    pub fn alt_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for r in (0..w.n() - 1).rev() {
                if w.is_right_descent(r) {
                    rev.push(r);
                    w = w.append(r);
                    continue 'outer;
                }
            }
            unreachable!();
        }
        rev.reverse();
        rev
    }

    pub fn longest(n: usize) -> Perm {
        Perm { map: (0..n).rev().collect() }
    }

    /// All permutations of S_n, in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm { map: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.map)
    }
}

/// Display a word in the 1-based s_r notation.
pub fn word_display(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|r| format!("s{}", r + 1)).collect::<Vec<_>>().join(" ")
}
