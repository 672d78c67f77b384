//! Linear codes given by a generator matrix: duals, distances, MDS-type
//! classification, u-extensions, coset-leader tables and covering radii.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldDescriptor};
use crate::matrix::{Matrix, MatrixJson};

/// Work bound used by exhaustive routines unless the caller supplies one.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// How to compute the minimum distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceStrategy {
    /// Scan all `q^k - 1` nonzero codewords.
    Enumerate,
    /// Smallest number of linearly dependent columns of the parity-check matrix.
    ColumnDependency,
    /// Enumerate when `q^k <= threshold`, otherwise use column dependency.
    Auto { threshold: u64 },
}

impl Default for DistanceStrategy {
    fn default() -> Self {
        DistanceStrategy::Auto { threshold: DEFAULT_BUDGET }
    }
}

#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    generator: Matrix,
    distance: OnceLock<Option<usize>>,
    dual: OnceLock<Box<LinearCode>>,
    canonical: OnceLock<Matrix>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over GF({}) ", self.len(), self.dim(), self.field.order())?;
        self.generator.fmt(f)
    }
}

impl LinearCode {
    /// Wraps a generator matrix, which must have full row rank. A `0 x n`
    /// generator gives the zero code.
    pub fn new(generator: Matrix) -> Result<LinearCode> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            generator,
            distance: OnceLock::new(),
            dual: OnceLock::new(),
            canonical: OnceLock::new(),
        })
    }

    /// Like [`LinearCode::new`] but drops dependent rows instead of failing.
    pub fn spanned_by(rows: Matrix) -> LinearCode {
        let e = rows.rref();
        let g = e.matrix.select_rows(&(0..e.pivots.len()).collect::<Vec<_>>());
        LinearCode::new(g).expect("rows of an echelon form are independent")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    /// Dimension `k`.
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Reduced row-echelon generator; equal for codes with equal codeword sets.
    pub fn canonical_generator(&self) -> &Matrix {
        self.canonical.get_or_init(|| self.generator.rref().matrix)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.canonical_generator() == other.canonical_generator()
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.vec_mul(message)
    }

    /// Membership via the parity-check matrix.
    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.parity_check().mul_vec(v)?.iter().all(|e| e.is_zero()))
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::Dimension(format!("vector of length {} for a code of length {}", v.len(), self.len())));
        }
        Ok(())
    }

    pub fn dual(&self) -> &LinearCode {
        self.dual.get_or_init(|| {
            let h = self.generator.null_space();
            Box::new(LinearCode::new(h).expect("null-space basis is independent"))
        })
    }

    /// Generator of the dual code.
    pub fn parity_check(&self) -> &Matrix {
        self.dual().generator()
    }

    /// Number of messages, `q^k`, saturating.
    pub fn size(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.dim() as u32)
    }

    /// Calls `f` on every nonzero codeword. Words are visited in an
    /// odometer order over messages, changing one row contribution per step.
    pub fn for_each_nonzero_codeword(&self, mut f: impl FnMut(&[Elem]) -> ControlFlow<()>) {
        let k = self.dim();
        let n = self.len();
        let q = self.field.order() as usize;
        let fd = &self.field;
        if k == 0 {
            return;
        }
        // Digit value t maps to element t (canonical order), so a full turn
        // of a digit returns it to zero.
        let mut msg = vec![0usize; k];
        let mut word = vec![Elem::ZERO; n];
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return;
                }
                let old = Elem(msg[i] as u32);
                msg[i] = (msg[i] + 1) % q;
                let new = Elem(msg[i] as u32);
                let diff = fd.sub(new, old);
                for (w, &g) in word.iter_mut().zip(self.generator.row(i)) {
                    *w = fd.add(*w, fd.mul(diff, g));
                }
                if msg[i] != 0 {
                    break;
                }
                i += 1;
            }
            if f(&word).is_break() {
                return;
            }
        }
    }

    /// Exact minimum distance with the default strategy; `None` for the zero code.
    pub fn minimum_distance(&self) -> Option<usize> {
        *self.distance.get_or_init(|| self.minimum_distance_with(DistanceStrategy::default()))
    }

    pub fn minimum_distance_with(&self, strategy: DistanceStrategy) -> Option<usize> {
        if self.dim() == 0 {
            return None;
        }
        match strategy {
            DistanceStrategy::Enumerate => Some(self.distance_by_enumeration()),
            DistanceStrategy::ColumnDependency => Some(min_dependent_columns(self.parity_check())),
            DistanceStrategy::Auto { threshold } => {
                if self.size() <= threshold {
                    Some(self.distance_by_enumeration())
                } else {
                    Some(min_dependent_columns(self.parity_check()))
                }
            }
        }
    }

    fn distance_by_enumeration(&self) -> usize {
        let mut best = usize::MAX;
        self.for_each_nonzero_codeword(|w| {
            let wt = weight(w);
            if wt < best {
                best = wt;
            }
            if best == 1 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        best
    }

    /// Minimum distance of the dual, read off this code's generator as the
    /// smallest number of dependent columns. `None` when the dual is zero.
    pub fn dual_distance(&self) -> Option<usize> {
        if self.dim() == self.len() {
            return None;
        }
        Some(min_dependent_columns(&self.generator))
    }

    /// `n - k + 1 - d`.
    pub fn singleton_defect(&self) -> Option<usize> {
        self.minimum_distance().map(|d| self.len() - self.dim() + 1 - d)
    }

    pub fn classify(&self) -> Result<Classification> {
        let (n, k) = (self.len(), self.dim());
        if k == 0 || k == n {
            return Err(Error::Degenerate { n, k });
        }
        let d = self.minimum_distance().expect("k >= 1");
        let d_dual = self.dual_distance().expect("k < n");
        Ok(Classification::from_distances(n, k, d, d_dual))
    }

    /// The `[n+1, k]` code whose extra coordinate is `sum u_i c_i`.
    pub fn extend_with_u(&self, u: &[Elem]) -> Result<LinearCode> {
        self.check_len(u)?;
        if u.iter().all(|e| e.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let gu = self.generator.mul_vec(u)?;
        let col = Matrix::from_fn(&self.field, self.dim(), 1, |r, _| gu[r]);
        LinearCode::new(self.generator.hstack(&col)?)
    }

    /// Distance from `v` to the nearest codeword: codeword scan when the code
    /// has at most `budget` words, otherwise a coset-leader lookup.
    pub fn distance_to_code(&self, v: &[Elem], budget: u64) -> Result<usize> {
        self.check_len(v)?;
        if self.size() <= budget {
            return Ok(self.distance_by_scan(v));
        }
        let table = CosetLeaderTable::for_code(self, budget)?;
        table.distance(v)
    }

    fn distance_by_scan(&self, v: &[Elem]) -> usize {
        let mut best = weight(v);
        self.for_each_nonzero_codeword(|w| {
            let d = v.iter().zip(w).filter(|(a, b)| a != b).count();
            if d < best {
                best = d;
            }
            if best == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        best
    }

    pub fn covering_radius(&self, budget: u64) -> Result<usize> {
        Ok(CosetLeaderTable::for_code(self, budget)?.covering_radius())
    }

    pub fn is_deep_hole(&self, v: &[Elem], budget: u64) -> Result<bool> {
        self.check_len(v)?;
        let table = CosetLeaderTable::for_code(self, budget)?;
        Ok(table.distance(v)? == table.covering_radius())
    }
}

/// Number of nonzero coordinates.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Smallest `w` such that some `w` columns of `m` are linearly dependent
/// (`cols + 1` if all columns are independent).
pub fn min_dependent_columns(m: &Matrix) -> usize {
    let n = m.cols();
    for w in 1..=n {
        if w > m.rows() {
            return w;
        }
        let dependent = (0..n).combinations(w).any(|cols| m.select_columns(&cols).rank() < w);
        if dependent {
            return w;
        }
    }
    n + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Mds,
    Nmds,
    Amds,
    Other,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Mds => "MDS",
            Verdict::Nmds => "NMDS",
            Verdict::Amds => "AMDS",
            Verdict::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub verdict: Verdict,
    pub singleton_defect: usize,
}

impl Classification {
    /// MDS takes precedence; NMDS when both the code and its dual are AMDS.
    pub fn from_distances(n: usize, k: usize, d: usize, d_dual: usize) -> Classification {
        let verdict = if d == n - k + 1 {
            Verdict::Mds
        } else if d == n - k && d_dual == k {
            Verdict::Nmds
        } else if d == n - k {
            Verdict::Amds
        } else {
            Verdict::Other
        };
        Classification { n, k, d, d_dual, verdict, singleton_defect: n - k + 1 - d }
    }

    /// The code itself is AMDS (including the NMDS case).
    pub fn is_amds(&self) -> bool {
        self.d + self.k == self.n
    }

    pub fn dual_is_amds(&self) -> bool {
        self.d_dual == self.k
    }
}

/// Minimum coset weights indexed by syndrome, for a fixed parity-check matrix.
#[derive(Debug, Clone)]
pub struct CosetLeaderTable {
    parity: Matrix,
    weights: Vec<u8>,
}

impl CosetLeaderTable {
    pub fn for_code(code: &LinearCode, budget: u64) -> Result<CosetLeaderTable> {
        CosetLeaderTable::from_parity_check(code.parity_check(), budget)
    }

    /// Builds the table for the code `{x : H x = 0}`; `H` must have full row rank.
    pub fn from_parity_check(h: &Matrix, budget: u64) -> Result<CosetLeaderTable> {
        let f = h.field().clone();
        let q = f.order() as u64;
        let r = h.rows();
        let needed = q.checked_pow(r as u32).unwrap_or(u64::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let rank = h.rank();
        if rank != r {
            return Err(Error::RankDeficient { rank, rows: r });
        }
        let size = needed as usize;

        // Distinct syndromes of weight-one vectors.
        let mut steps: Vec<Vec<Elem>> = Vec::new();
        let mut seen = HashSet::new();
        for c in 0..h.cols() {
            let col = h.column(c);
            for s in f.nonzero_elements() {
                let v: Vec<Elem> = col.iter().map(|&x| f.mul(s, x)).collect();
                if v.iter().any(|e| !e.is_zero()) && seen.insert(encode_syndrome(&v, q)) {
                    steps.push(v);
                }
            }
        }

        let mut weights = vec![u8::MAX; size];
        weights[0] = 0;
        let mut frontier = vec![0usize];
        let mut level = 0u8;
        let mut buf = vec![Elem::ZERO; r];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                let base = decode_syndrome(s, q, r);
                for step in &steps {
                    for i in 0..r {
                        buf[i] = f.add(base[i], step[i]);
                    }
                    let t = encode_syndrome(&buf, q);
                    if weights[t] == u8::MAX {
                        weights[t] = level + 1;
                        next.push(t);
                    }
                }
            }
            frontier = next;
            level += 1;
        }
        Ok(CosetLeaderTable { parity: h.clone(), weights })
    }

    pub fn syndrome(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.parity.mul_vec(v)
    }

    /// Weight of a coset leader for `v`'s coset, i.e. its distance to the code.
    pub fn distance(&self, v: &[Elem]) -> Result<usize> {
        let s = self.syndrome(v)?;
        Ok(self.weights[encode_syndrome(&s, self.parity.field().order() as u64)] as usize)
    }

    pub fn covering_radius(&self) -> usize {
        self.weights.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }
}

fn encode_syndrome(s: &[Elem], q: u64) -> usize {
    s.iter().rev().fold(0u64, |acc, e| acc * q + e.0 as u64) as usize
}

fn decode_syndrome(mut x: usize, q: u64, r: usize) -> Vec<Elem> {
    (0..r)
        .map(|_| {
            let d = (x as u64 % q) as u32;
            x /= q as usize;
            Elem(d)
        })
        .collect()
}

/// Serialized code: the field plus its generator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub schema: String,
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub generator: MatrixJson,
}

pub const CODE_SCHEMA: &str = "rlmds.code/v1";

impl CodeJson {
    pub fn of(code: &LinearCode) -> CodeJson {
        CodeJson {
            schema: CODE_SCHEMA.to_string(),
            field: FieldDescriptor::of(code.field()),
            n: code.len(),
            k: code.dim(),
            generator: MatrixJson::from(code.generator()),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let field = self.field.build()?;
        let g = Matrix::from_u32_rows(&field, &self.generator.0)?;
        if g.rows() != self.k || (g.rows() > 0 && g.cols() != self.n) {
            return Err(Error::Dimension(format!(
                "declared [{}, {}] but generator is {}x{}",
                self.n,
                self.k,
                g.rows(),
                g.cols()
            )));
        }
        let g = if g.rows() == 0 { Matrix::zeros(&field, 0, self.n) } else { g };
        LinearCode::new(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{make_field, prime_field};
    use crate::matrix::vandermonde;

    fn rs(q: u32, pts: &[u32], k: usize) -> LinearCode {
        let f = crate::gf::field_of_order(q).unwrap();
        let pts: Vec<Elem> = pts.iter().map(|&x| Elem(x)).collect();
        LinearCode::new(vandermonde(&f, &pts, k).unwrap()).unwrap()
    }

    #[test]
    fn whole_space_dual_is_zero_code() {
        let f = prime_field(3).unwrap();
        let c = LinearCode::new(Matrix::identity(&f, 4)).unwrap();
        assert_eq!(c.dual().dim(), 0);
        assert_eq!(c.dual().minimum_distance(), None);
        assert_eq!(c.dual_distance(), None);
        assert_eq!(c.minimum_distance(), Some(1));
        assert_eq!(c.covering_radius(DEFAULT_BUDGET).unwrap(), 0);
        assert!(matches!(c.classify(), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn grs3_gf5_dual() {
        let c = rs(5, &[1, 2, 3, 4], 3);
        let d = c.dual();
        assert_eq!((d.len(), d.dim()), (4, 1));
        assert!(c.generator().mul(&d.generator().transpose()).unwrap().is_zero());
        assert!(d.dual().same_code(&c));
    }

    #[test]
    fn rank_deficient_rejected() {
        let f = prime_field(5).unwrap();
        let g = Matrix::from_u32_rows(&f, &[vec![1, 2, 3], vec![2, 4, 1]]).unwrap();
        assert_eq!(LinearCode::new(g).unwrap_err(), Error::RankDeficient { rank: 1, rows: 2 });
    }

    #[test]
    fn strategies_agree_on_rs() {
        let c = rs(7, &[0, 1, 2, 3, 4, 5], 3);
        assert_eq!(c.minimum_distance_with(DistanceStrategy::Enumerate), Some(4));
        assert_eq!(c.minimum_distance_with(DistanceStrategy::ColumnDependency), Some(4));
        assert_eq!(c.classify().unwrap().verdict, Verdict::Mds);
        assert_eq!(c.dual_distance(), Some(4));
    }

    #[test]
    fn extension_by_unit_vector_duplicates_coordinate() {
        let c = rs(5, &[1, 2, 3, 4], 2);
        let mut u = vec![Elem::ZERO; 4];
        u[0] = Elem::ONE;
        let e = c.extend_with_u(&u).unwrap();
        assert_eq!(e.len(), 5);
        assert_eq!(e.dim(), 2);
        for r in 0..e.dim() {
            assert_eq!(e.generator().get(r, 4), e.generator().get(r, 0));
        }
        assert_eq!(e.minimum_distance(), c.minimum_distance());
        assert_eq!(c.extend_with_u(&[Elem::ZERO; 4]).unwrap_err(), Error::ZeroVector);
        assert!(matches!(c.extend_with_u(&[Elem::ONE; 3]), Err(Error::Dimension(_))));
    }

    #[test]
    fn classical_extension_of_rs() {
        // u = -1 gives the classical parity extension.
        let f = prime_field(5).unwrap();
        let c = rs(5, &[1, 2, 3, 4], 2);
        let u = vec![f.neg(Elem::ONE); 4];
        let e = c.extend_with_u(&u).unwrap();
        let mut sum_zero = true;
        e.for_each_nonzero_codeword(|w| {
            sum_zero &= f.sum(w.iter().copied()).is_zero();
            ControlFlow::Continue(())
        });
        assert!(sum_zero);
    }

    #[test]
    fn codeword_distance_zero_and_budget() {
        let c = rs(4, &[0, 1, 2, 3], 2);
        let w = c.encode(&[Elem(1), Elem(2)]).unwrap();
        assert_eq!(c.distance_to_code(&w, DEFAULT_BUDGET).unwrap(), 0);
        assert!(matches!(c.distance_to_code(&w, 1), Err(Error::BudgetExceeded { .. })));
        assert!(!c.is_deep_hole(&w, DEFAULT_BUDGET).unwrap());
        assert!(matches!(c.covering_radius(3), Err(Error::BudgetExceeded { needed: 16, budget: 3 })));
    }

    #[test]
    fn json_round_trip() {
        let f = make_field(2, 2, None).unwrap();
        let c = LinearCode::new(vandermonde(&f, &[Elem(0), Elem(1), Elem(2)], 2).unwrap()).unwrap();
        let j = CodeJson::of(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: CodeJson = serde_json::from_str(&text).unwrap();
        assert!(back.to_code().unwrap().same_code(&c));
    }
}
