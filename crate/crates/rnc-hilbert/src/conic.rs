//! Hilbert function of fat points at distinct points of a smooth plane conic.
//!
//! The dimension of the degree-d part of the ideal is computed by stripping
//! fixed components until the Segre regularity criterion applies:
//!
//! * if the two largest multiplicities satisfy alpha_1 + alpha_2 > d, the
//!   line through those two points meets every curve of the system in more
//!   than d points, so it is a fixed component; remove it;
//! * otherwise, if the multiplicity total exceeds 2d, the conic itself is a
//!   fixed component by the same Bezout count against a degree-2 curve;
//!   remove it;
//! * once neither rule fires, the system is regular by Segre's criterion
//!   (d >= alpha_1 + alpha_2 - 1 and d >= floor(sum alpha_i / 2)) and the
//!   dimension is the virtual count C(d+2, 2) - sum C(alpha_i + 1, 2).
//!
//! Removing a fixed component preserves the dimension: multiplication by its
//! equation is a bijection between the reduced system and the original one.
//! Every removal is logged in a [`ReductionTrace`].

use crate::schemes::{binomial, ConicScheme};

/// Kind of fixed component removed by one reduction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    /// The line through the two points of largest multiplicity.
    Line,
    /// The conic supporting the scheme.
    Conic,
}

/// One fixed-component removal, with the state it was applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub degree_before: i64,
    pub alphas_before: Vec<u32>,
}

/// Ordered log of the fixed-component removals performed for one query.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

/// Segre's criterion: the system of degree-d curves through the fat conic
/// points is regular iff d >= alpha_1 + alpha_2 - 1 and
/// d >= floor(sum alpha_i / 2). For s <= 1 the missing alpha counts as 0.
pub fn segre_regular(d: i64, alphas: &ConicScheme) -> bool {
    let a = alphas.multiplicities();
    let a1 = i64::from(a.first().copied().unwrap_or(0));
    let a2 = i64::from(a.get(1).copied().unwrap_or(0));
    let total = alphas.total_multiplicity() as i64;
    d >= a1 + a2 - 1 && d >= total / 2
}

/// Dimension of the degree-d part of the ideal of the fat conic scheme.
pub fn conic_ideal_dim(d: i64, alphas: &ConicScheme) -> u64 {
    conic_ideal_dim_traced(d, alphas).0
}

/// Same as [`conic_ideal_dim`], returning the reduction trace alongside.
pub fn conic_ideal_dim_traced(d: i64, alphas: &ConicScheme) -> (u64, ReductionTrace) {
    let mut d = d;
    let mut alphas: Vec<u32> = alphas.multiplicities().to_vec();
    let mut trace = ReductionTrace::default();

    loop {
        if d < 0 {
            return (0, trace);
        }
        if alphas.is_empty() {
            return (binomial(d + 2, 2), trace);
        }
        let a1 = i64::from(alphas[0]);
        let a2 = i64::from(alphas.get(1).copied().unwrap_or(0));
        if alphas.len() >= 2 && a1 + a2 > d {
            trace.steps.push(ReductionStep {
                kind: ReductionKind::Line,
                degree_before: d,
                alphas_before: alphas.clone(),
            });
            d -= 1;
            alphas[0] -= 1;
            alphas[1] -= 1;
        } else if alphas.iter().map(|&a| i64::from(a)).sum::<i64>() > 2 * d {
            trace.steps.push(ReductionStep {
                kind: ReductionKind::Conic,
                degree_before: d,
                alphas_before: alphas.clone(),
            });
            d -= 2;
            for a in alphas.iter_mut() {
                *a -= 1;
            }
        } else {
            // Segre-regular: alpha_1 + alpha_2 <= d and sum <= 2d.
            let conditions: u64 = alphas.iter().map(|&a| binomial(i64::from(a) + 1, 2)).sum();
            let dim = binomial(d + 2, 2).saturating_sub(conditions);
            return (dim, trace);
        }
        alphas.retain(|&a| a > 0);
        alphas.sort_unstable_by(|x, y| y.cmp(x));
    }
}

/// Hilbert function of the fat conic scheme in degree d: the codimension of
/// the ideal inside all degree-d ternary forms.
pub fn conic_hilbert_function(d: i64, alphas: &ConicScheme) -> u64 {
    binomial(d + 2, 2) - conic_ideal_dim(d, alphas)
}
