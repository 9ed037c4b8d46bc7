//! The nil-Hecke special case: the column multipartition (1|1|...|1) with all
//! charges equal, where the module has basis indexed by permutations, the
//! generators act by length-increasing swaps, and the dots act by signed sums
//! over covering transpositions (Monk's rule).  A second realization on the
//! coinvariant algebra — dots as multiplication by the variables, generators
//! as divided differences, basis of Schubert polynomials — provides an
//! independent oracle.

use crate::perm::Perm;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Coefficients on the permutation basis (w = d(t) for the column shape).
pub type SchubertVec = BTreeMap<Perm, BigInt>;

/// deg psi_s = C(n,2) - 2 l(d(s)).
pub fn psi_degree(n: usize, w: &Perm) -> i64 {
    (n * (n - 1) / 2) as i64 - 2 * w.length() as i64
}

fn add_term(x: &mut SchubertVec, w: Perm, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = x.entry(w).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        // remove the zero entry we just created/updated
        let key: Vec<Perm> = x
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for k in key {
            x.remove(&k);
        }
    }
}

/// psi_s . psi_r = psi_{s(r,r+1)} when the length goes up, else 0.
pub fn act_psi(x: &SchubertVec, r: usize) -> SchubertVec {
    let mut out = SchubertVec::new();
    for (w, c) in x {
        let w2 = w.append(r);
        if w2.length() > w.length() {
            add_term(&mut out, w2, c);
        }
    }
    out
}

/// psi_v . y_{k+1} (0-based k): signed sum over covering transpositions,
/// positive for swaps with an earlier entry, negative for a later one.
pub fn act_y(x: &SchubertVec, k: usize) -> SchubertVec {
    let mut out = SchubertVec::new();
    for (w, c) in x {
        let n = w.n();
        for j in 0..n {
            if j == k {
                continue;
            }
            let w2 = w.then(&Perm::transposition(n, j, k));
            if w2.length() + 1 == w.length() {
                let signed = if j < k { c.clone() } else { -c };
                add_term(&mut out, w2, &signed);
            }
        }
    }
    out
}

/// Polynomials in x_1..x_n as exponent vector -> coefficient.
pub type Poly = BTreeMap<Vec<u32>, BigInt>;

fn poly_add(p: &mut Poly, mono: Vec<u32>, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(mono).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        let keys: Vec<Vec<u32>> = p
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for k in keys {
            p.remove(&k);
        }
    }
}

/// The coinvariant algebra: polynomials modulo symmetric polynomials of
/// positive degree, with monomial basis x^a, a_v <= n-1-v (0-based v).
pub struct Coinvariants {
    pub n: usize,
    schubert_cache: HashMap<Perm, Poly>,
}

/// Monomials of total degree d in the variables 0..vars-1.
fn compositions(d: u32, vars: usize) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if d == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(d - first, vars - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Coinvariants {
    pub fn new(n: usize) -> Coinvariants {
        Coinvariants { n, schubert_cache: HashMap::new() }
    }

    /// Reduce to the monomial basis using, for each variable k (1-based),
    /// the relation h_{n-k+1}(x_1,...,x_k) = 0 solved for x_k^{n-k+1}.
    pub fn reduce(&self, mut p: Poly) -> Poly {
        for v in (0..self.n).rev() {
            let bound = (self.n - 1 - v) as u32;
            loop {
                let Some((a, c)) = p
                    .iter()
                    .find(|(a, _)| a[v] > bound)
                    .map(|(a, c)| (a.clone(), c.clone()))
                else {
                    break;
                };
                p.remove(&a);
                // x_v^{bound+1} = - sum_{j<=bound} x_v^j h_{bound+1-j}(x_0..x_{v-1})
                let excess = a[v] - (bound + 1);
                for j in 0..=bound {
                    for h in compositions(bound + 1 - j, v) {
                        let mut mono = a.clone();
                        mono[v] = j + excess;
                        for (i, &e) in h.iter().enumerate() {
                            mono[i] += e;
                        }
                        poly_add(&mut p, mono, &-&c);
                    }
                }
            }
        }
        p
    }

    pub fn mult_x(&self, p: &Poly, k: usize) -> Poly {
        let mut out = Poly::new();
        for (a, c) in p {
            let mut mono = a.clone();
            mono[k] += 1;
            poly_add(&mut out, mono, c);
        }
        self.reduce(out)
    }

    /// Divided difference: (f - s_r f)/(x_r - x_{r+1}), computed exactly on
    /// representatives and then reduced.
    pub fn divided_diff(&self, p: &Poly, r: usize) -> Poly {
        let mut out = Poly::new();
        for (a, c) in p {
            let (hi, lo, sign) = if a[r] > a[r + 1] {
                (a[r], a[r + 1], BigInt::one())
            } else if a[r] < a[r + 1] {
                (a[r + 1], a[r], -BigInt::one())
            } else {
                continue;
            };
            for i in lo..hi {
                let mut mono = a.clone();
                mono[r] = i;
                mono[r + 1] = hi + lo - 1 - i;
                poly_add(&mut out, mono, &(&sign * c));
            }
        }
        self.reduce(out)
    }

    /// Schubert polynomial: sigma_{w_0} is the staircase monomial, and
    /// sigma_d = \partial_r sigma_{s_r d} whenever s_r d is longer than d.
    pub fn schubert(&mut self, d: &Perm) -> Poly {
        if let Some(p) = self.schubert_cache.get(d) {
            return p.clone();
        }
        let n = self.n;
        let result = if d.length() == n * (n - 1) / 2 {
            let mono: Vec<u32> = (0..n).map(|v| (n - 1 - v) as u32).collect();
            let mut p = Poly::new();
            poly_add(&mut p, mono, &BigInt::one());
            p
        } else {
            // left multiplication by s_r swaps the values r, r+1
            let r = (0..n - 1)
                .find(|&r| d.append(r).length() > d.length())
                .expect("a non-longest element has a left ascent");
            let longer = self.schubert(&d.append(r));
            self.divided_diff(&longer, r)
        };
        self.schubert_cache.insert(d.clone(), result.clone());
        result
    }
}

/// d'(t) for the column shape, from w = d(t): the complement through the
/// longest element.
pub fn d_prime(w: &Perm) -> Perm {
    Perm::longest(w.n()).then(w)
}

/// The sign epsilon with
/// psi_{t_lambda} y_1^{n-1} y_2^{n-2} ... y_{n-1} = epsilon psi_{t^lambda},
/// computed from the Monk-rule action.
pub fn staircase_sign(n: usize) -> i64 {
    let mut x = SchubertVec::new();
    add_term(&mut x, Perm::longest(n), &BigInt::one());
    for k in 0..n {
        for _ in 0..(n - 1 - k) {
            x = act_y(&x, k);
        }
    }
    assert_eq!(x.len(), 1, "staircase dot product must be a single term");
    let (w, c) = x.iter().next().unwrap();
    assert!(w.is_identity());
    let c = i64::try_from(c.clone()).unwrap();
    assert_eq!(c.abs(), 1);
    c
}
