#![allow(dead_code)]

use rlmds::gf::{is_prime, prime_power};
use rlmds::{Elem, Field, LinearCode, Matrix};

pub fn els(xs: &[u32]) -> Vec<Elem> {
    xs.iter().map(|&x| Elem(x)).collect()
}

pub fn prime_powers_upto(bound: u32) -> Vec<u32> {
    (2..=bound).filter(|&q| prime_power(q).is_some()).collect()
}

/// Schoolbook product of two encoded elements, reduced by the field's
/// defining polynomial. Independent of the log tables.
pub fn mul_oracle(f: &Field, a: Elem, b: Elem) -> Elem {
    let p = f.characteristic();
    let Some(modulus) = f.modulus() else {
        assert!(is_prime(p));
        return Elem(((a.0 as u64 * b.0 as u64) % p as u64) as u32);
    };
    let (da, db) = (f.digits(a), f.digits(b));
    let m = da.len();
    let mut prod = vec![0u64; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p as u64;
        }
    }
    for top in (m..2 * m).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (i, &mc) in modulus.iter().enumerate() {
            let idx = top - m + i;
            prod[idx] = (prod[idx] + (p as u64 - c) * mc as u64 % p as u64) % p as u64;
        }
    }
    Elem(prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d) as u32)
}

pub fn add_oracle(f: &Field, a: Elem, b: Elem) -> Elem {
    let p = f.characteristic();
    let (da, db) = (f.digits(a), f.digits(b));
    Elem(da.iter().zip(&db).rev().fold(0, |acc, (x, y)| acc * p + (x + y) % p))
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Matrix) -> Elem {
    let f = m.field();
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return Elem::ONE;
    }
    if n == 1 {
        return m.get(0, 0);
    }
    let mut acc = Elem::ZERO;
    for c in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
        let minor = cofactor_det(&m.select_rows(&rows).select_columns(&cols));
        let term = f.mul(m.get(0, c), minor);
        acc = if c % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

/// Every message vector of length `k` over the field, in odometer order.
pub fn all_vectors(f: &Field, len: usize) -> Vec<Vec<Elem>> {
    let q = f.order();
    let total = (q as usize).pow(len as u32);
    (0..total)
        .map(|mut x| {
            (0..len)
                .map(|_| {
                    let d = x % q as usize;
                    x /= q as usize;
                    Elem(d as u32)
                })
                .collect()
        })
        .collect()
}

pub fn codewords(code: &LinearCode) -> Vec<Vec<Elem>> {
    all_vectors(code.field(), code.dim()).iter().map(|m| code.encode(m).unwrap()).collect()
}

pub fn hamming(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn brute_min_distance(code: &LinearCode) -> Option<usize> {
    codewords(code).iter().map(|w| w.iter().filter(|x| !x.is_zero()).count()).filter(|&w| w > 0).min()
}

pub fn brute_covering_radius(code: &LinearCode) -> usize {
    let words = codewords(code);
    all_vectors(code.field(), code.len())
        .iter()
        .map(|v| words.iter().map(|w| hamming(v, w)).min().unwrap())
        .max()
        .unwrap()
}

pub fn sorted_codewords(code: &LinearCode) -> Vec<Vec<Elem>> {
    let mut w = codewords(code);
    w.sort();
    w
}
