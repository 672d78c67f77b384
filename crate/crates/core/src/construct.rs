//! Builders for GRS codes, Roth-Lempel codes and their three-column
//! extension `C2`, together with the extension vector that realizes `C2`
//! from a Roth-Lempel code and an explicit parity-check matrix for `C2`.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{cramer_unit_solution, vandermonde, Matrix};

/// Parameters of `C2`: evaluation points, dimension and the three column
/// parameters `(delta, tau, pi)`.
#[derive(Debug, Clone)]
pub struct ConstructionParams {
    pub field: Field,
    pub alpha: Vec<Elem>,
    pub k: usize,
    pub delta: Elem,
    pub tau: Elem,
    pub pi: Elem,
}

/// The `(delta, tau, pi)` triple as canonical encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub delta: Elem,
    pub tau: Elem,
    pub pi: Elem,
}

impl Triple {
    pub fn new(delta: Elem, tau: Elem, pi: Elem) -> Triple {
        Triple { delta, tau, pi }
    }

    /// All `q^3` triples in lexicographic order.
    pub fn all(field: &Field) -> Vec<Triple> {
        let q = field.order();
        let mut out = Vec::with_capacity((q as usize).pow(3));
        for d in 0..q {
            for t in 0..q {
                for p in 0..q {
                    out.push(Triple::new(Elem(d), Elem(t), Elem(p)));
                }
            }
        }
        out
    }
}

impl ConstructionParams {
    pub fn new(field: &Field, alpha: Vec<Elem>, k: usize, triple: Triple) -> Result<Self> {
        let p = ConstructionParams {
            field: field.clone(),
            alpha,
            k,
            delta: triple.delta,
            tau: triple.tau,
            pi: triple.pi,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        for &a in self.alpha.iter().chain([&self.delta, &self.tau, &self.pi]) {
            f.element(a.0)?;
        }
        check_distinct(&self.alpha)?;
        if self.k < 3 {
            return Err(Error::InvalidParams(format!("dimension k = {} is below 3", self.k)));
        }
        if self.n() < self.k {
            return Err(Error::InvalidParams(format!("need n >= k, got n = {} and k = {}", self.n(), self.k)));
        }
        if self.n() > f.order() as usize {
            return Err(Error::InvalidParams(format!("n = {} exceeds q = {}", self.n(), f.order())));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn triple(&self) -> Triple {
        Triple::new(self.delta, self.tau, self.pi)
    }

    pub fn with_triple(&self, t: Triple) -> ConstructionParams {
        ConstructionParams { delta: t.delta, tau: t.tau, pi: t.pi, ..self.clone() }
    }

    /// True when the parameters lie outside `4 <= k + 1 <= n <= q`.
    pub fn outside_stated_range(&self) -> bool {
        !(self.k + 1 >= 4 && self.k < self.n() && self.n() <= self.field.order() as usize)
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.outside_stated_range() {
            w.push(format!(
                "parameters (n = {}, k = {}, q = {}) lie outside 4 <= k+1 <= n <= q",
                self.n(),
                self.k,
                self.field.order()
            ));
        }
        w
    }

    /// `a = sum alpha_i`.
    pub fn alpha_sum(&self) -> Elem {
        self.field.sum(self.alpha.iter().copied())
    }

    /// `b = (sum alpha_i)^2 - sum_{i<j} alpha_i alpha_j`.
    pub fn alpha_b(&self) -> Elem {
        let f = &self.field;
        let a = self.alpha_sum();
        f.sub(f.mul(a, a), elementary2(f, &self.alpha))
    }
}

fn check_distinct(points: &[Elem]) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        if points[..i].contains(a) {
            return Err(Error::DuplicatePoint(a.0));
        }
    }
    Ok(())
}

/// `sum_{i<j} x_i x_j`.
pub fn elementary2(f: &Field, xs: &[Elem]) -> Elem {
    let mut running = Elem::ZERO;
    let mut acc = Elem::ZERO;
    for &x in xs {
        acc = f.add(acc, f.mul(x, running));
        running = f.add(running, x);
    }
    acc
}

/// `GRS_k(alpha, v)`: generator `Vandermonde(alpha, k) * diag(v)`.
pub fn grs(field: &Field, alpha: &[Elem], v: &[Elem], k: usize) -> Result<LinearCode> {
    if v.len() != alpha.len() {
        return Err(Error::Dimension(format!("{} multipliers for {} points", v.len(), alpha.len())));
    }
    if let Some(i) = v.iter().position(|x| x.is_zero()) {
        return Err(Error::ZeroMultiplier(i));
    }
    if k == 0 || k > alpha.len() {
        return Err(Error::InvalidParams(format!("need 1 <= k <= n, got k = {k}, n = {}", alpha.len())));
    }
    let vm = vandermonde(field, alpha, k)?;
    LinearCode::new(Matrix::from_fn(field, k, alpha.len(), |r, c| field.mul(vm.get(r, c), v[c])))
}

/// Reed-Solomon code, `GRS_k(alpha, 1)`.
pub fn reed_solomon(field: &Field, alpha: &[Elem], k: usize) -> Result<LinearCode> {
    grs(field, alpha, &vec![Elem::ONE; alpha.len()], k)
}

/// Generator of the `[n+2, k]` Roth-Lempel code: the `k`-row Vandermonde
/// block followed by `(0,..,0,1)^T` and `(0,..,0,1,delta)^T`.
pub fn roth_lempel_generator(field: &Field, alpha: &[Elem], delta: Elem, k: usize) -> Result<Matrix> {
    check_distinct(alpha)?;
    if k < 3 {
        return Err(Error::InvalidParams(format!("Roth-Lempel codes need k >= 3, got {k}")));
    }
    if alpha.len() + 2 < k {
        return Err(Error::InvalidParams(format!("need n >= k - 2, got n = {} and k = {k}", alpha.len())));
    }
    field.element(delta.0)?;
    let n = alpha.len();
    let mut g = Matrix::zeros(field, k, n + 2);
    for r in 0..k {
        for c in 0..n {
            g.set(r, c, field.pow_u(alpha[c], r as u64));
        }
    }
    g.set(k - 1, n, Elem::ONE);
    g.set(k - 2, n + 1, Elem::ONE);
    g.set(k - 1, n + 1, delta);
    Ok(g)
}

pub fn roth_lempel(field: &Field, alpha: &[Elem], delta: Elem, k: usize) -> Result<LinearCode> {
    LinearCode::new(roth_lempel_generator(field, alpha, delta, k)?)
}

/// The `k x (n+3)` generator of `C2`.
pub fn c2_generator_matrix(params: &ConstructionParams) -> Result<Matrix> {
    params.validate()?;
    let f = &params.field;
    let k = params.k;
    let n = params.n();
    let g1 = roth_lempel_generator(f, &params.alpha, params.delta, k)?;
    let mut u3 = Matrix::zeros(f, k, 1);
    u3.set(k - 3, 0, Elem::ONE);
    u3.set(k - 2, 0, params.tau);
    u3.set(k - 1, 0, params.pi);
    let g2 = g1.hstack(&u3)?;
    debug_assert_eq!(g2.cols(), n + 3);
    Ok(g2)
}

pub fn c2_generator(params: &ConstructionParams) -> Result<LinearCode> {
    LinearCode::new(c2_generator_matrix(params)?)
}

/// The extension vector of length `n + 2` that maps the Roth-Lempel
/// generator to the last column of `C2`'s generator.
pub fn theorem1_u(params: &ConstructionParams) -> Result<Vec<Elem>> {
    params.validate()?;
    let f = &params.field;
    let n = params.n();
    let k = params.k;
    let w = cramer_unit_solution(f, &params.alpha)?;
    let mut u: Vec<Elem> = params
        .alpha
        .iter()
        .zip(&w)
        .map(|(&a, &wi)| f.mul(f.pow_u(a, (n + 2 - k) as u64), wi))
        .collect();
    let a = params.alpha_sum();
    let tau_minus_a = f.sub(params.tau, a);
    // pi - (tau - a) delta + e2 - a^2, i.e. pi - (tau - a) delta - b.
    let u_n1 = f.sub(f.sub(params.pi, f.mul(tau_minus_a, params.delta)), params.alpha_b());
    u.push(u_n1);
    u.push(tau_minus_a);
    Ok(u)
}

/// The `(n + 3 - k) x (n + 3)` parity-check matrix of `C2` built from the
/// weights `w_i = 1 / prod_{j != i}(alpha_i - alpha_j)`.
pub fn c2_parity(params: &ConstructionParams) -> Result<Matrix> {
    params.validate()?;
    let f = &params.field;
    let n = params.n();
    let k = params.k;
    let rows = n + 3 - k;
    let w = cramer_unit_solution(f, &params.alpha)?;
    let a = params.alpha_sum();
    let b = params.alpha_b();
    let minus_one = f.neg(Elem::ONE);
    let tau_minus_a = f.sub(params.tau, a);

    let mut h = Matrix::zeros(f, rows, n + 3);
    for j in 0..rows {
        for i in 0..n {
            h.set(j, i, f.mul(w[i], f.pow_u(params.alpha[i], j as u64)));
        }
    }
    // Rows n-k, n+1-k and n+2-k carry the special columns.
    let (r0, r1, r2) = (n - k, n + 1 - k, n + 2 - k);
    h.set(r0, n, minus_one);
    h.set(r1, n, f.sub(params.delta, a));
    h.set(r1, n + 1, minus_one);
    let corner = f.sub(f.sub(params.pi, b), f.mul(params.delta, tau_minus_a));
    h.set(r2, n, corner);
    h.set(r2, n + 1, tau_minus_a);
    h.set(r2, n + 2, minus_one);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Verdict;
    use crate::gf::{make_field, prime_field};

    fn el(xs: &[u32]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn gf4_example_is_mds() {
        let f = make_field(2, 2, None).unwrap();
        // (delta, tau, pi) = (0, 1 + w, w) with w encoded as 2.
        let p = ConstructionParams::new(&f, el(&[0, 1, 2]), 3, Triple::new(Elem(0), Elem(3), Elem(2))).unwrap();
        let c = c2_generator(&p).unwrap();
        assert_eq!((c.len(), c.dim(), c.minimum_distance()), (6, 3, Some(4)));
        assert_eq!(c.classify().unwrap().verdict, Verdict::Mds);
        assert!(p.outside_stated_range());
    }

    #[test]
    fn gf7_example_is_mds() {
        let f = prime_field(7).unwrap();
        let p = ConstructionParams::new(&f, el(&[2, 3, 5]), 3, Triple::new(Elem(3), Elem(0), Elem(2))).unwrap();
        let c = c2_generator(&p).unwrap();
        assert_eq!(c.minimum_distance(), Some(4));
    }

    #[test]
    fn params_validation() {
        let f = prime_field(5).unwrap();
        let t = Triple::new(Elem(0), Elem(0), Elem(0));
        assert!(ConstructionParams::new(&f, el(&[1, 2, 2]), 3, t).is_err());
        assert!(ConstructionParams::new(&f, el(&[1, 2, 3]), 2, t).is_err());
        assert!(ConstructionParams::new(&f, el(&[1, 2, 3]), 4, t).is_err());
        assert!(ConstructionParams::new(&f, el(&[1, 2, 7]), 3, t).is_err());
        let ok = ConstructionParams::new(&f, el(&[0, 1, 2, 3]), 3, t).unwrap();
        assert!(!ok.outside_stated_range());
        assert!(ok.warnings().is_empty());
    }

    #[test]
    fn grs_errors_and_whole_space() {
        let f = prime_field(7).unwrap();
        let a = el(&[1, 2, 3]);
        assert_eq!(grs(&f, &a, &el(&[1, 0, 1]), 2).unwrap_err(), Error::ZeroMultiplier(1));
        assert!(grs(&f, &el(&[1, 1, 3]), &el(&[1, 1, 1]), 2).is_err());
        let whole = grs(&f, &a, &el(&[2, 3, 4]), 3).unwrap();
        assert_eq!(whole.minimum_distance(), Some(1));
    }

    #[test]
    fn roth_lempel_square_block_has_rank_k() {
        let f = prime_field(7).unwrap();
        let g = roth_lempel_generator(&f, &el(&[1, 2, 3]), Elem(4), 3).unwrap();
        assert_eq!((g.rows(), g.cols(), g.rank()), (3, 5, 3));
        assert!(roth_lempel(&f, &el(&[1, 2, 3]), Elem(4), 2).is_err());
    }

    #[test]
    fn u_vector_small_case() {
        let f = prime_field(5).unwrap();
        let p = ConstructionParams::new(&f, el(&[1, 2, 3]), 3, Triple::new(Elem(2), Elem(0), Elem(1))).unwrap();
        let u = theorem1_u(&p).unwrap();
        // u_i = alpha_i^2 w_i with w = (3, 4, 3).
        assert_eq!(&u[..3], &el(&[3, 1, 2])[..]);
        let g1 = roth_lempel_generator(&f, &p.alpha, p.delta, 3).unwrap();
        assert_eq!(g1.mul_vec(&u).unwrap(), el(&[1, 0, 1]));
    }
}
