//! The combinatorial Fock space: formal Laurent-coefficient combinations of
//! multipartitions with the quantum-group operators E_i, F_i, K_i acting
//! through signed node counts, a bilinear pairing weighted by the defect,
//! and a relation checker used as an oracle for the degree combinatorics.

use crate::laurent::Laurent;
use crate::setting::{Residue, Setting};
use crate::shape::{d_above, d_below, d_res, multipartitions, Multipartition};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};

pub type FockVector = BTreeMap<Multipartition, Laurent>;

pub fn basis(shape: &Multipartition) -> FockVector {
    FockVector::from([(shape.clone(), Laurent::one())])
}

pub fn add_scaled(out: &mut FockVector, shape: Multipartition, c: &Laurent) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(shape.clone()).or_insert_with(Laurent::zero);
    *entry += c;
    if entry.is_zero() {
        out.remove(&shape);
    }
}

/// E_i f_lambda = sum over removable i-nodes B of q^{d_B} f_{lambda - B}.
pub fn apply_e(s: &Setting, v: &FockVector, i: Residue) -> FockVector {
    let mut out = FockVector::new();
    for (shape, c) in v {
        for b in shape.removable_nodes_res(s, i) {
            let coeff = c * &Laurent::q(d_below(s, shape, b));
            add_scaled(&mut out, shape.remove_node(b), &coeff);
        }
    }
    out
}

/// F_i f_lambda = sum over addable i-nodes A of q^{-d^A} f_{lambda + A};
/// errors when the result would exceed the rank cap.
pub fn apply_f(
    s: &Setting,
    v: &FockVector,
    i: Residue,
    cap: usize,
) -> Result<FockVector, String> {
    let mut out = FockVector::new();
    for (shape, c) in v {
        if shape.size() + 1 > cap {
            return Err(format!(
                "applying F_{i} to a shape of size {} exceeds the rank cap {cap}",
                shape.size()
            ));
        }
        for a in shape.addable_nodes_res(s, i) {
            let coeff = c * &Laurent::q(-d_above(s, shape, a));
            add_scaled(&mut out, shape.add_node(a), &coeff);
        }
    }
    Ok(out)
}

/// K_i^{sign} f_lambda = q^{sign * d_i(lambda)} f_lambda (sign = +1 or -1).
pub fn apply_k(s: &Setting, v: &FockVector, i: Residue, sign: i64) -> FockVector {
    let mut out = FockVector::new();
    for (shape, c) in v {
        let coeff = c * &Laurent::q(sign * d_res(s, shape, i));
        add_scaled(&mut out, shape.clone(), &coeff);
    }
    out
}

/// Bilinear pairing with (f_lambda, f_mu) = delta q^{defect lambda}.
pub fn pairing(s: &Setting, u: &FockVector, v: &FockVector) -> Laurent {
    let mut out = Laurent::zero();
    for (shape, c) in u {
        if let Some(d) = v.get(shape) {
            out += &(&(c * d) * &Laurent::q(shape.defect(s)));
        }
    }
    out
}

/// Residues carried by nodes reachable within the rank cap.
pub fn relevant_residues(s: &Setting, cap: usize) -> Vec<Residue> {
    let mut set = BTreeSet::new();
    for n in 0..cap {
        for m in multipartitions(n, s.level()) {
            for (l, r, c) in m.addable_nodes() {
                set.insert(s.residue(l, r, c));
            }
        }
    }
    set.into_iter().collect()
}

pub struct RelationReport {
    pub name: String,
    pub failure: Option<String>,
}

fn report(name: &str, failure: Option<String>) -> RelationReport {
    RelationReport { name: name.to_string(), failure }
}

fn sym_int(d: i64) -> Laurent {
    if d >= 0 {
        Laurent::qint_sym(d as u64)
    } else {
        -&Laurent::qint_sym((-d) as u64)
    }
}

fn vec_eq(a: &FockVector, b: &FockVector) -> bool {
    a == b
}

/// Check the quantum-group relation families on all basis vectors up to the
/// rank cap; each family reports its first counterexample, if any.
pub fn check_relations(s: &Setting, cap: usize) -> Vec<RelationReport> {
    let residues = relevant_residues(s, cap);
    let shapes: Vec<Multipartition> = (0..=cap)
        .flat_map(|n| multipartitions(n, s.level()))
        .collect();
    let mut out = Vec::new();

    // wt(f_lambda) = Lambda - beta: the combinatorial count d_i equals the
    // pairing (Lambda - beta, alpha_i)
    let mut fail = None;
    'weight: for shape in &shapes {
        let beta = shape.beta(s);
        for &i in &residues {
            let pair = s.lambda_mult(i) as i64
                - beta.iter().map(|(&j, &m)| m as i64 * s.cartan(j, i)).sum::<i64>();
            if d_res(s, shape, i) != pair {
                fail = Some(format!("shape {shape}, residue {i}"));
                break 'weight;
            }
        }
    }
    out.push(report("weight: d_i(lambda) = (Lambda - beta, alpha_i)", fail));

    // [E_i, F_j] = delta_{ij} (K_i - K_i^{-1})/(q - q^{-1})
    let mut fail = None;
    'comm: for shape in shapes.iter().filter(|m| m.size() < cap) {
        let f = basis(shape);
        for &i in &residues {
            for &j in &residues {
                let ef = apply_e(s, &apply_f(s, &f, j, cap).unwrap(), i);
                let mut fe = apply_f(s, &apply_e(s, &f, i), j, cap).unwrap();
                if i == j {
                    add_scaled(&mut fe, shape.clone(), &sym_int(d_res(s, shape, i)));
                }
                if !vec_eq(&ef, &fe) {
                    fail = Some(format!("shape {shape}, i={i}, j={j}"));
                    break 'comm;
                }
            }
        }
    }
    out.push(report("commutator: [E_i, F_j] = delta (K_i - K_i^-1)/(q - q^-1)", fail));

    // K_i E_j K_i^{-1} = q^{c_ij} E_j  and the F counterpart
    let mut fail = None;
    'kcomm: for shape in shapes.iter().filter(|m| m.size() < cap) {
        let f = basis(shape);
        for &i in &residues {
            for &j in &residues {
                let c = s.cartan(i, j);
                let lhs = apply_k(s, &apply_e(s, &apply_k(s, &f, i, -1), j), i, 1);
                let rhs: FockVector = apply_e(s, &f, j)
                    .into_iter()
                    .map(|(m, x)| (m, &x * &Laurent::q(c)))
                    .collect();
                let lhs_f =
                    apply_k(s, &apply_f(s, &apply_k(s, &f, i, -1), j, cap).unwrap(), i, 1);
                let rhs_f: FockVector = apply_f(s, &f, j, cap)
                    .unwrap()
                    .into_iter()
                    .map(|(m, x)| (m, &x * &Laurent::q(-c)))
                    .collect();
                if !vec_eq(&lhs, &rhs) || !vec_eq(&lhs_f, &rhs_f) {
                    fail = Some(format!("shape {shape}, i={i}, j={j}"));
                    break 'kcomm;
                }
            }
        }
    }
    out.push(report("K-commutation: K_i E_j K_i^-1 = q^{c_ij} E_j", fail));

    // quantum Serre: sum_k (-1)^k [m choose k] X_i^k X_j X_i^{m-k} = 0 for
    // X = E and X = F, with m = 1 - c_ij
    let mut fail = None;
    'serre: for &i in &residues {
        for &j in &residues {
            if i == j {
                continue;
            }
            let m = (1 - s.cartan(i, j)) as usize;
            for shape in &shapes {
                let f = basis(shape);
                let mut total_e = FockVector::new();
                let mut total_f = FockVector::new();
                let f_room = shape.size() + m + 1 <= cap;
                for k in 0..=m {
                    let sign = if k % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                    let binom = Laurent::qbinom_sym(m as u64, k as u64).scale(&sign);
                    let mut x = f.clone();
                    for _ in 0..(m - k) {
                        x = apply_e(s, &x, i);
                    }
                    x = apply_e(s, &x, j);
                    for _ in 0..k {
                        x = apply_e(s, &x, i);
                    }
                    for (sh, c) in x {
                        add_scaled(&mut total_e, sh, &(&c * &binom));
                    }
                    if f_room {
                        let mut x = f.clone();
                        for _ in 0..(m - k) {
                            x = apply_f(s, &x, i, cap).unwrap();
                        }
                        x = apply_f(s, &x, j, cap).unwrap();
                        for _ in 0..k {
                            x = apply_f(s, &x, i, cap).unwrap();
                        }
                        for (sh, c) in x {
                            add_scaled(&mut total_f, sh, &(&c * &binom));
                        }
                    }
                }
                if !total_e.is_empty() || !total_f.is_empty() {
                    fail = Some(format!("shape {shape}, i={i}, j={j}, m={m}"));
                    break 'serre;
                }
            }
        }
    }
    out.push(report("quantum Serre relations for E and F", fail));

    // divided powers stay integral: the coefficients of E_i^k and F_i^k on a
    // basis vector divide exactly by the symmetric quantum factorial [k]!
    let mut fail = None;
    'div: for shape in &shapes {
        for &i in &residues {
            let mut xe = basis(shape);
            let mut xf = basis(shape);
            for k in 1..=3u64 {
                xe = apply_e(s, &xe, i);
                xf = if shape.size() + k as usize <= cap {
                    apply_f(s, &xf, i, cap).unwrap()
                } else {
                    FockVector::new()
                };
                let fact = Laurent::qfact_sym(k);
                for c in xe.values().chain(xf.values()) {
                    if c.div_exact(&fact).is_none() {
                        fail = Some(format!("shape {shape}, i={i}, k={k}"));
                        break 'div;
                    }
                }
            }
        }
    }
    out.push(report("divided powers: [k]! divides E_i^k and F_i^k", fail));

    // (E_i x, y) = (x, F_i y) and (F_i x, y) = (x, E_i y)
    let mut fail = None;
    'adj: for lam in shapes.iter().filter(|m| m.size() >= 1) {
        for mu in shapes.iter().filter(|m| m.size() + 1 == lam.size()) {
            let fl = basis(lam);
            let fm = basis(mu);
            for &i in &residues {
                let a = pairing(s, &apply_e(s, &fl, i), &fm);
                let b = pairing(s, &fl, &apply_f(s, &fm, i, cap).unwrap());
                let c = pairing(s, &apply_f(s, &fm, i, cap).unwrap(), &fl);
                let d = pairing(s, &fm, &apply_e(s, &fl, i));
                if a != b || c != d {
                    fail = Some(format!("lambda {lam}, mu {mu}, i={i}"));
                    break 'adj;
                }
            }
        }
    }
    out.push(report("biadjointness of E_i and F_i under the pairing", fail));

    out
}
