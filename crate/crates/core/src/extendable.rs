//! Optimal extendability of `GRS_3(alpha, 1)`: append `I_3` to the
//! generator and compare dual distances.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::construct::reed_solomon;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;

/// `[G : I_k]`.
pub fn augment_identity(code: &LinearCode) -> LinearCode {
    let g = code.generator();
    let aug = g.hstack(&Matrix::identity(code.field(), code.dim())).expect("row counts agree");
    LinearCode::new(aug).expect("identity block keeps full row rank")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extendability {
    Optimal,
    Almost,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendabilityReport {
    pub alpha: Vec<Elem>,
    pub verdict: Extendability,
    /// 4 for optimal, 3 for almost, 2 when some point is zero.
    pub predicted_dual_distance: usize,
    pub measured_dual_distance: usize,
    pub all_nonzero: bool,
    pub no_zero_pair_sum: bool,
}

pub fn theorem5_verdict(field: &Field, alpha: &[Elem]) -> Result<ExtendabilityReport> {
    if alpha.len() < 4 {
        return Err(Error::InvalidParams(format!("need at least 4 points, got {}", alpha.len())));
    }
    let grs3 = reed_solomon(field, alpha, 3)?;
    let all_nonzero = alpha.iter().all(|a| !a.is_zero());
    let no_zero_pair_sum = alpha.iter().tuple_combinations().all(|(&a, &b)| !field.add(a, b).is_zero());
    let (verdict, predicted) = match (all_nonzero, no_zero_pair_sum) {
        (false, _) => (Extendability::Neither, 2),
        (true, true) => (Extendability::Optimal, 4),
        (true, false) => (Extendability::Almost, 3),
    };
    let measured = augment_identity(&grs3).dual_distance().expect("augmented code is not the whole space");
    Ok(ExtendabilityReport {
        alpha: alpha.to_vec(),
        verdict,
        predicted_dual_distance: predicted,
        measured_dual_distance: measured,
        all_nonzero,
        no_zero_pair_sum,
    })
}

/// Reports for every point set of size `sizes` drawn from `pool`, in
/// lexicographic order of index sets.
pub fn sweep_theorem5(field: &Field, pool: &[Elem], sizes: std::ops::RangeInclusive<usize>) -> Result<Vec<ExtendabilityReport>> {
    let sets: Vec<Vec<Elem>> = sizes
        .flat_map(|n| pool.iter().copied().combinations(n).collect::<Vec<_>>())
        .collect();
    sets.into_par_iter().map(|a| theorem5_verdict(field, &a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{make_field, prime_field};

    #[test]
    fn gf5_is_almost() {
        let f = prime_field(5).unwrap();
        let r = theorem5_verdict(&f, &[1, 2, 3, 4].map(Elem)).unwrap();
        assert_eq!(r.verdict, Extendability::Almost);
        assert_eq!(r.measured_dual_distance, 3);
    }

    #[test]
    fn gf8_nonzero_points_are_optimal() {
        let f = make_field(2, 3, None).unwrap();
        let all: Vec<Elem> = f.nonzero_elements().collect();
        let r = theorem5_verdict(&f, &all).unwrap();
        assert_eq!(r.verdict, Extendability::Optimal);
        assert_eq!(r.measured_dual_distance, 4);
        let g = augment_identity(&reed_solomon(&f, &all, 3).unwrap());
        assert_eq!((g.len(), g.dim()), (10, 3));
    }

    #[test]
    fn zero_point_gives_neither() {
        let f = prime_field(7).unwrap();
        let r = theorem5_verdict(&f, &[0, 1, 2, 3].map(Elem)).unwrap();
        assert_eq!(r.verdict, Extendability::Neither);
        assert_eq!(r.measured_dual_distance, 2);
        assert!(theorem5_verdict(&f, &[1, 2, 3].map(Elem)).is_err());
    }

    #[test]
    fn single_row_code_gains_one_column() {
        let f = prime_field(3).unwrap();
        let c = LinearCode::new(Matrix::from_u32_rows(&f, &[vec![1, 2, 1]]).unwrap()).unwrap();
        let a = augment_identity(&c);
        assert_eq!(a.len(), 4);
        assert_eq!(a.generator().get(0, 3), Elem::ONE);
    }
}
