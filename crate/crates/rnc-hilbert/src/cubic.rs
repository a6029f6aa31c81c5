//! Hilbert functions of fat points supported on a rational normal cubic in
//! projective 3-space.
//!
//! The dimension of the degree-t part of the ideal is computed by a purely
//! combinatorial recursion on the total multiplicity: lowering the minimal
//! multiplicity m_s by one changes the dimension by the dimension, in degree
//! m_s, of the ideal of a fat point scheme on a plane conic — the projection
//! of the scheme from its last point. The conic side is handled by
//! [`crate::conic`]. Everything here depends only on the multiplicity
//! multiset, never on where the points sit on the curve.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::conic;
use crate::error::Error;
use crate::schemes::{binomial, FatPointScheme};

/// Projection of a fat point scheme from its last point onto a plane conic,
/// taken at degree t.
///
/// `n` is the multiplicity forced at the image of the projection center,
/// `n_list[i]` the multiplicity forced at the image of the i-th remaining
/// point, and `eval_degree` the degree (the minimal multiplicity m_s of the
/// source scheme) at which the conic ideal measures the dimension drop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TProjection {
    pub n: u32,
    pub n_list: Vec<u32>,
    pub eval_degree: u32,
}

impl TProjection {
    /// The projected multiplicities as one canonical conic scheme. The
    /// projection center's image and the other images play the same role:
    /// only the multiset matters on a smooth conic.
    pub fn conic_scheme(&self) -> crate::schemes::ConicScheme {
        let mut all = Vec::with_capacity(self.n_list.len() + 1);
        all.push(self.n);
        all.extend_from_slice(&self.n_list);
        crate::schemes::ConicScheme::from_multiplicities(&all)
    }
}

/// Hilbert data of one scheme in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRecord {
    pub t: u32,
    /// dim I_t.
    pub ideal_dim: u64,
    /// H(R/I, t) = C(t+3, 3) - dim I_t.
    pub hilbert_value: u64,
    /// Whether the fat points impose independent conditions in degree t.
    pub regular: bool,
    /// Multiplicity with which the cubic curve is forced as a fixed
    /// component of the degree-t system (clamped at m_s + 1).
    pub curve_mult: u32,
    /// Largest multiplicity forced on a secant line: (m_1 + m_2 - t)^+.
    pub line_mult_max: u32,
}

/// Whether the Bezout-type condition forcing the cubic as a fixed component
/// of multiplicity at least `nu` holds: for every l with 1 <= l <= nu,
///
/// ```text
/// 3t + 5(1 - l) < sum_i (m_i - l + 1)^+
/// ```
///
/// Vacuously true for nu = 0.
pub fn forces_curve_multiplicity(scheme: &FatPointScheme, t: u32, nu: u32) -> bool {
    (1..=i64::from(nu)).all(|l| curve_inequality(scheme.multiplicities(), t, l))
}

fn curve_inequality(mults: &[u32], t: u32, l: i64) -> bool {
    let lhs = 3 * i64::from(t) + 5 * (1 - l);
    let rhs: i64 = mults.iter().map(|&m| (i64::from(m) - l + 1).max(0)).sum();
    lhs < rhs
}

fn curve_bound_on(mults: &[u32], t: u32) -> u32 {
    let m_s = *mults.last().expect("scheme must be nonempty");
    let cap = m_s + 1;
    let mut n = 0;
    while n < cap && curve_inequality(mults, t, i64::from(n) + 1) {
        n += 1;
    }
    n
}

/// Largest n with the curve forced as an n-fold fixed component of the
/// degree-t system, clamped at m_s + 1.
///
/// The inequalities of [`forces_curve_multiplicity`] are nested, so the
/// supremum is found by scanning l upward until one fails; if the first
/// already fails the bound is 0.
pub fn curve_multiplicity_bound(scheme: &FatPointScheme, t: u32) -> Result<u32, Error> {
    if scheme.is_empty() {
        return Err(Error::EmptyScheme);
    }
    Ok(curve_bound_on(scheme.multiplicities(), t))
}

/// Multiplicity with which the line through two points of multiplicities
/// m_i, m_j is forced as a fixed component in degree t: (m_i + m_j - t)^+.
pub fn line_multiplicity_bound(m_i: u32, m_j: u32, t: u32) -> u32 {
    let forced = i64::from(m_i) + i64::from(m_j) - i64::from(t);
    u32::try_from(forced.max(0)).expect("line bound fits u32")
}

/// Whether every degree-t surface through the scheme contains the cubic
/// curve: equivalent to 3t < sum m_i.
///
/// The criterion only applies when the system is nonempty; otherwise the
/// question is vacuous and reported as an error instead of a boolean.
pub fn contains_curve(scheme: &FatPointScheme, t: u32) -> Result<bool, Error> {
    if ideal_dim(scheme, t) == 0 {
        return Err(Error::CriterionInapplicable { t });
    }
    Ok(3 * u64::from(t) < scheme.total_multiplicity())
}

fn projection_on(mults: &[u32], t: u32) -> TProjection {
    let m_s = *mults.last().expect("projection needs at least one point");
    let n_list = mults[..mults.len() - 1]
        .iter()
        .map(|&m| {
            let forced = u64::from(m) + u64::from(m_s);
            u32::try_from(forced.saturating_sub(u64::from(t))).expect("n_i fits u32")
        })
        .collect();
    TProjection {
        n: curve_bound_on(mults, t),
        n_list,
        eval_degree: m_s,
    }
}

/// Projection of a canonical scheme (s >= 2) from its last point, at degree t.
pub fn t_projection(scheme: &FatPointScheme, t: u32) -> Result<TProjection, Error> {
    if scheme.len() < 2 {
        return Err(Error::TooFewPoints(scheme.len()));
    }
    Ok(projection_on(scheme.multiplicities(), t))
}

/// Decrements the minimal entry of `work` (sorted non-increasing, positive),
/// returns the conic dimension its projection contributes at degree t, and
/// drops the entry if it reached zero.
///
/// The projection is taken on the decremented vector as-is: the decremented
/// entry, possibly zero, is the m_s of the projected scheme.
fn reduction_step(work: &mut Vec<u32>, t: u32) -> u64 {
    *work.last_mut().expect("step needs points") -= 1;
    let proj = projection_on(work, t);
    let drop = conic::conic_ideal_dim(i64::from(proj.eval_degree), &proj.conic_scheme());
    if *work.last().unwrap() == 0 {
        work.pop();
    }
    drop
}

fn single_point_dim(m: u32, t: u32) -> u64 {
    if t >= m {
        binomial(i64::from(t) + 3, 3) - binomial(i64::from(m) + 2, 3)
    } else {
        0
    }
}

fn base_dim(mults: &[u32], t: u32) -> u64 {
    match mults {
        [] => binomial(i64::from(t) + 3, 3),
        [m] => single_point_dim(*m, t),
        _ => unreachable!("base case requires at most one point"),
    }
}

/// Dimension of the degree-t part of the ideal of the fat point scheme.
///
/// Computed by repeatedly lowering the minimal multiplicity and subtracting
/// the conic dimension of the corresponding projection, down to the closed
/// forms for at most one point.
pub fn ideal_dim(scheme: &FatPointScheme, t: u32) -> u64 {
    let mut work = scheme.multiplicities().to_vec();
    let mut removed: u64 = 0;
    while work.len() >= 2 {
        removed += reduction_step(&mut work, t);
    }
    base_dim(&work, t)
        .checked_sub(removed)
        .expect("reduction must not exceed the base dimension")
}

/// Memo table for [`ideal_dim`], keyed by canonical multiplicities and
/// degree. Purely an accelerator: values are identical to the uncached
/// function. Get-or-insert goes through a mutex, so a shared cache can be
/// hit from several threads.
#[derive(Debug, Default)]
pub struct DimCache {
    map: Mutex<HashMap<(Vec<u32>, u32), u64>>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cached variant of [`ideal_dim`]. Every intermediate scheme visited by
    /// the reduction is memoized as well.
    pub fn ideal_dim(&self, scheme: &FatPointScheme, t: u32) -> u64 {
        let mut work = scheme.multiplicities().to_vec();
        // (state, conic cost paid on leaving it), outermost first.
        let mut pending: Vec<(Vec<u32>, u64)> = Vec::new();
        let mut dim = loop {
            if let Some(hit) = self.lookup(&work, t) {
                break hit;
            }
            if work.len() < 2 {
                break base_dim(&work, t);
            }
            let state = work.clone();
            let cost = reduction_step(&mut work, t);
            pending.push((state, cost));
        };
        let mut map = self.map.lock().expect("cache lock");
        map.insert((work, t), dim);
        for (state, cost) in pending.into_iter().rev() {
            dim = dim
                .checked_sub(cost)
                .expect("reduction must not exceed the base dimension");
            map.insert((state, t), dim);
        }
        dim
    }

    fn lookup(&self, mults: &[u32], t: u32) -> Option<u64> {
        let map = self.map.lock().expect("cache lock");
        map.get(&(mults.to_vec(), t)).copied()
    }
}

/// Full Hilbert data of the scheme in degree t.
pub fn hilbert_function(scheme: &FatPointScheme, t: u32) -> HilbertRecord {
    let dim = ideal_dim(scheme, t);
    let mults = scheme.multiplicities();
    HilbertRecord {
        t,
        ideal_dim: dim,
        hilbert_value: binomial(i64::from(t) + 3, 3) - dim,
        regular: is_regular(scheme, t),
        curve_mult: if mults.is_empty() {
            0
        } else {
            curve_bound_on(mults, t)
        },
        line_mult_max: if mults.len() >= 2 {
            line_multiplicity_bound(mults[0], mults[1], t)
        } else {
            0
        },
    }
}

/// Whether the fat points impose independent conditions to degree-t
/// surfaces: 3t >= sum m_i - 1 and t >= m_1 + m_2 - 1 (missing
/// multiplicities count as 0; the empty scheme is regular).
pub fn is_regular(scheme: &FatPointScheme, t: u32) -> bool {
    let m = scheme.multiplicities();
    let m1 = i64::from(m.first().copied().unwrap_or(0));
    let m2 = i64::from(m.get(1).copied().unwrap_or(0));
    let total = scheme.total_multiplicity() as i64;
    let t = i64::from(t);
    3 * t >= total - 1 && t >= m1 + m2 - 1
}

/// Smallest degree from which the scheme is regular:
/// max(ceil((sum m_i - 1) / 3), m_1 + m_2 - 1), and 0 for the empty scheme.
pub fn regularity_index(scheme: &FatPointScheme) -> u32 {
    let m = scheme.multiplicities();
    if m.is_empty() {
        return 0;
    }
    let m1 = i64::from(m[0]);
    let m2 = i64::from(m.get(1).copied().unwrap_or(0));
    let total = scheme.total_multiplicity() as i64;
    let by_total = (total - 1 + 2) / 3; // ceil((total - 1) / 3), total >= 1
    let by_pair = m1 + m2 - 1;
    u32::try_from(by_total.max(by_pair).max(0)).expect("regularity index fits u32")
}

/// Dimension of the degree-t part of the n-th power of the ideal of the
/// rational normal cubic itself.
///
/// Zero below degree 2n - 1; from degree 2n - 1 on,
/// C(t+3, 3) - C(n+1, 2)(3t + 6) + 5(1^2 + ... + n^2), which vanishes at
/// t = 2n - 1 so the branches agree there. n = 0 gives the full space.
pub fn symbolic_power_dim(n: u32, t: u32) -> u64 {
    let t_i = i64::from(t);
    if n == 0 {
        return binomial(t_i + 3, 3);
    }
    let n_i = i64::from(n);
    if t_i < 2 * n_i - 1 {
        return 0;
    }
    let squares = n_i * (n_i + 1) * (2 * n_i + 1) / 6;
    let value = binomial(t_i + 3, 3) as i128 - binomial(n_i + 1, 2) as i128 * (3 * t_i + 6) as i128
        + 5 * squares as i128;
    u64::try_from(value).expect("power dimension must be nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::conic_ideal_dim;
    use crate::schemes::{scheme_degree, Ambient};
    use proptest::prelude::*;

    fn scheme(mults: &[u32]) -> FatPointScheme {
        FatPointScheme::from_multiplicities(mults)
    }

    const REMARK_SCHEME: [u32; 7] = [3, 3, 2, 2, 2, 2, 1];

    #[test]
    fn curve_forcing_inequalities() {
        let z = scheme(&REMARK_SCHEME);
        assert!(forces_curve_multiplicity(&z, 4, 2)); // l=1: 12<15, l=2: 7<8
        assert!(!forces_curve_multiplicity(&z, 4, 3)); // l=3: 2<2 fails
        assert!(forces_curve_multiplicity(&z, 4, 0));
        assert!(forces_curve_multiplicity(&scheme(&[]), 9, 0));
    }

    #[test]
    fn curve_bound_values() {
        assert_eq!(curve_multiplicity_bound(&scheme(&REMARK_SCHEME), 4), Ok(2));
        assert_eq!(curve_multiplicity_bound(&scheme(&[1, 1, 1]), 1), Ok(0));
        assert_eq!(curve_multiplicity_bound(&scheme(&[1]), 5), Ok(0));
        assert_eq!(
            curve_multiplicity_bound(&scheme(&[]), 3),
            Err(Error::EmptyScheme)
        );
    }

    #[test]
    fn line_bound_values() {
        assert_eq!(line_multiplicity_bound(3, 3, 4), 2);
        assert_eq!(line_multiplicity_bound(3, 1, 4), 0);
        assert_eq!(line_multiplicity_bound(2, 2, 3), 1);
    }

    #[test]
    fn containment_values() {
        assert_eq!(contains_curve(&scheme(&REMARK_SCHEME), 4), Ok(true));
        assert_eq!(contains_curve(&scheme(&[1, 1, 1]), 1), Ok(false));
        let uniform = scheme(&[3, 3, 3, 3, 3, 3, 3]);
        assert!(ideal_dim(&uniform, 6) > 0);
        assert_eq!(contains_curve(&uniform, 6), Ok(true));
    }

    #[test]
    fn containment_criterion_inapplicable_on_zero_ideal() {
        // A triple point admits no surface of degree 1.
        assert_eq!(ideal_dim(&scheme(&[3]), 1), 0);
        assert_eq!(
            contains_curve(&scheme(&[3]), 1),
            Err(Error::CriterionInapplicable { t: 1 })
        );
    }

    #[test]
    fn projection_of_remark_scheme() {
        let p = t_projection(&scheme(&REMARK_SCHEME), 4).unwrap();
        assert_eq!(p.n, 2);
        assert_eq!(p.n_list, vec![0, 0, 0, 0, 0, 0]);
        assert_eq!(p.eval_degree, 1);
        assert_eq!(p.conic_scheme().multiplicities(), &[2]);
    }

    #[test]
    fn projection_capped_at_minimal_multiplicity_plus_one() {
        let p = t_projection(&scheme(&[2, 2]), 1).unwrap();
        assert_eq!(p.n, 3); // all three inequalities hold, cap m_s + 1 = 3
        assert_eq!(p.n_list, vec![3]);
        assert_eq!(p.eval_degree, 2);
    }

    #[test]
    fn projection_needs_two_points() {
        assert_eq!(t_projection(&scheme(&[4]), 2), Err(Error::TooFewPoints(1)));
        assert_eq!(t_projection(&scheme(&[]), 2), Err(Error::TooFewPoints(0)));
    }

    #[test]
    fn ideal_dim_golden_values() {
        // The unique quartic surface through (3,3,2,2,2,2,1) on the curve.
        assert_eq!(ideal_dim(&scheme(&REMARK_SCHEME), 4), 1);
        assert_eq!(ideal_dim(&scheme(&[]), 3), 20);
        assert_eq!(ideal_dim(&scheme(&[1, 1, 1]), 1), 1);
        assert_eq!(ideal_dim(&scheme(&[1; 7]), 2), 3);
        assert_eq!(ideal_dim(&scheme(&[2, 1, 1, 1, 1, 1, 1]), 2), 1);
        assert_eq!(ideal_dim(&scheme(&[2, 2, 2, 2, 2]), 4), 15);
    }

    #[test]
    fn single_point_closed_form_matches_stepwise_differences() {
        // Walking the multiplicity up one at a time must reproduce the
        // closed form: each step t >= m costs C(m+2, 2) conditions.
        for t in 0u32..10 {
            for m in 0u32..8 {
                let direct = single_point_dim(m, t);
                let mut stepped = binomial(i64::from(t) + 3, 3);
                for k in 0..m {
                    if t >= k {
                        stepped -= binomial(i64::from(k) + 2, 2);
                    } else {
                        stepped = 0;
                    }
                }
                assert_eq!(direct, stepped, "m={m} t={t}");
            }
        }
    }

    #[test]
    fn hilbert_record_values() {
        let rec = hilbert_function(&scheme(&REMARK_SCHEME), 4);
        assert_eq!(rec.ideal_dim, 1);
        assert_eq!(rec.hilbert_value, 34);
        assert!(!rec.regular);
        assert_eq!(rec.curve_mult, 2);
        assert_eq!(rec.line_mult_max, 2);

        let rec = hilbert_function(&scheme(&[2, 2, 2, 2, 2]), 3);
        assert_eq!(rec.hilbert_value, 20);
        assert_eq!(rec.hilbert_value, scheme(&[2, 2, 2, 2, 2]).degree());
        assert!(rec.regular);

        let rec = hilbert_function(&scheme(&[]), 0);
        assert_eq!(rec.ideal_dim, 1);
        assert_eq!(rec.hilbert_value, 0);
        assert!(rec.regular);
    }

    #[test]
    fn regularity_values() {
        assert!(is_regular(&scheme(&[2, 2, 2, 2, 2]), 3));
        assert!(!is_regular(&scheme(&REMARK_SCHEME), 4));
        assert!(is_regular(&scheme(&[1, 1]), 1));
        assert_eq!(regularity_index(&scheme(&[2, 2, 2, 2, 2])), 3);
        assert_eq!(regularity_index(&scheme(&REMARK_SCHEME)), 5);
        assert_eq!(regularity_index(&scheme(&[1])), 0);
        assert_eq!(regularity_index(&scheme(&[])), 0);
    }

    #[test]
    fn symbolic_power_values() {
        assert_eq!(symbolic_power_dim(1, 3), 10);
        assert_eq!(symbolic_power_dim(2, 3), 0);
        assert_eq!(symbolic_power_dim(2, 4), 6);
        assert_eq!(symbolic_power_dim(0, 4), 35);
    }

    #[test]
    fn symbolic_power_branches_agree_at_the_seam() {
        for n in 1u32..=20 {
            assert_eq!(symbolic_power_dim(n, 2 * n - 1), 0, "n={n}");
        }
    }

    #[test]
    fn cache_agrees_with_direct_computation() {
        let cache = DimCache::new();
        for mults in [&[3u32, 3, 2, 2, 2, 2, 1][..], &[2; 5], &[4, 1], &[]] {
            for t in 0u32..8 {
                let z = scheme(mults);
                assert_eq!(cache.ideal_dim(&z, t), ideal_dim(&z, t));
                // Second hit comes from the cache.
                assert_eq!(cache.ideal_dim(&z, t), ideal_dim(&z, t));
            }
        }
    }

    fn arb_scheme() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(1u32..6, 1..8)
    }

    proptest! {
        #[test]
        fn monotone_in_degree(raw in arb_scheme(), t in 0u32..14) {
            let z = scheme(&raw);
            prop_assert!(ideal_dim(&z, t) <= ideal_dim(&z, t + 1));
        }

        #[test]
        fn antitone_in_multiplicity(raw in arb_scheme(), idx in 0usize..8, t in 0u32..12) {
            let z = scheme(&raw);
            let mut bumped = raw.clone();
            let idx = idx % bumped.len();
            bumped[idx] += 1;
            let w = scheme(&bumped);
            prop_assert!(ideal_dim(&w, t) <= ideal_dim(&z, t));
        }

        #[test]
        fn sandwiched_between_virtual_and_full(raw in arb_scheme(), t in 0u32..14) {
            let z = scheme(&raw);
            let full = binomial(i64::from(t) + 3, 3);
            let virtual_dim = full.saturating_sub(scheme_degree(&raw, Ambient::Space));
            let dim = ideal_dim(&z, t);
            prop_assert!(virtual_dim <= dim && dim <= full);
        }

        #[test]
        fn depends_only_on_multiset(raw in arb_scheme(), t in 0u32..12, swap in 0usize..8) {
            let mut shuffled = raw.clone();
            let len = shuffled.len();
            shuffled.swap(swap % len, (swap / 2) % len);
            shuffled.rotate_left(swap % len.max(1));
            prop_assert_eq!(ideal_dim(&scheme(&raw), t), ideal_dim(&scheme(&shuffled), t));
        }

        /// Raising the minimal multiplicity by one lowers the dimension by
        /// exactly the conic dimension of the projection, and never more.
        #[test]
        fn projection_measures_the_dimension_drop(raw in arb_scheme(), t in 0u32..12) {
            let z = scheme(&raw);
            prop_assume!(z.len() >= 2);
            let mut bumped = z.multiplicities().to_vec();
            let last = bumped.len() - 1;
            bumped[last] += 1;
            let w = scheme(&bumped);
            let proj = t_projection(&z, t).unwrap();
            let drop = conic_ideal_dim(i64::from(proj.eval_degree), &proj.conic_scheme());
            prop_assert_eq!(ideal_dim(&z, t) - ideal_dim(&w, t), drop);
        }

        /// Independence of the conditions means the dimension equals the
        /// signed virtual count C(t+3,3) - degree exactly. (The comparison
        /// must stay signed: a crowded scheme can reach dimension zero while
        /// its conditions are dependent.)
        #[test]
        fn regularity_flag_matches_virtual_dimension(raw in arb_scheme(), t in 0u32..14) {
            let z = scheme(&raw);
            let virtual_dim = binomial(i64::from(t) + 3, 3) as i128 - z.degree() as i128;
            prop_assert_eq!(is_regular(&z, t), ideal_dim(&z, t) as i128 == virtual_dim);
        }

        #[test]
        fn regularity_index_is_first_regular_degree(raw in arb_scheme()) {
            let z = scheme(&raw);
            let idx = regularity_index(&z);
            let scan = (0..=idx + 3).find(|&t| is_regular(&z, t)).unwrap();
            prop_assert_eq!(idx, scan);
            // And the Hilbert function reaches the scheme degree exactly there.
            let scan_by_value = (0..=idx + 3)
                .find(|&t| hilbert_function(&z, t).hilbert_value == z.degree())
                .unwrap();
            prop_assert_eq!(idx, scan_by_value);
        }
    }
}
