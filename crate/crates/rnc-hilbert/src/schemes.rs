//! Canonical multiplicity vectors for fat point schemes, and the elementary
//! counting functions shared by every other module.
//!
//! A scheme of fat points is stored purely by its multiplicities: the Hilbert
//! function of fat points on a rational normal cubic (and of distinct points
//! on a smooth conic) does not depend on where the points sit on the curve.
//! Point coordinates therefore live only in the rank oracle, which needs
//! explicit points to build interpolation matrices.

use crate::error::Error;

/// Fat points in projective 3-space supported on a rational normal cubic.
///
/// Canonical form: multiplicities sorted non-increasing, all entries >= 1,
/// possibly empty. A point of multiplicity zero imposes no conditions, so
/// zeros are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FatPointScheme {
    mults: Vec<u32>,
}

/// Fat points at distinct points of a smooth plane conic.
///
/// Same canonical form as [`FatPointScheme`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicScheme {
    alphas: Vec<u32>,
}

/// Ambient projective space of a scheme: the plane P^2 or space P^3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Plane,
    Space,
}

impl Ambient {
    /// Projective dimension r (2 or 3).
    pub fn dim(self) -> u32 {
        match self {
            Ambient::Plane => 2,
            Ambient::Space => 3,
        }
    }
}

fn canonical_from_raw(raw: &[i64]) -> Result<Vec<u32>, Error> {
    let mut mults = Vec::with_capacity(raw.len());
    for &m in raw {
        if m < 0 {
            return Err(Error::NegativeMultiplicity(m));
        }
        if m > 0 {
            mults.push(m as u32);
        }
    }
    mults.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mults)
}

fn canonical_from_unsigned(raw: &[u32]) -> Vec<u32> {
    let mut mults: Vec<u32> = raw.iter().copied().filter(|&m| m > 0).collect();
    mults.sort_unstable_by(|a, b| b.cmp(a));
    mults
}

impl FatPointScheme {
    /// Builds the canonical form of a raw multiplicity list: zeros dropped,
    /// entries sorted non-increasing. Rejects negative entries.
    pub fn canonicalize(raw: &[i64]) -> Result<Self, Error> {
        Ok(Self {
            mults: canonical_from_raw(raw)?,
        })
    }

    /// Canonical form from already-nonnegative multiplicities.
    pub fn from_multiplicities(raw: &[u32]) -> Self {
        Self {
            mults: canonical_from_unsigned(raw),
        }
    }

    /// The multiplicities m_1 >= m_2 >= ... >= m_s >= 1.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Number of points s.
    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.mults.iter().map(|&m| u64::from(m)).sum()
    }

    /// Degree of the scheme in P^3: the number of linear conditions the fat
    /// points impose when independent.
    pub fn degree(&self) -> u64 {
        scheme_degree(&self.mults, Ambient::Space)
    }
}

impl ConicScheme {
    /// Same canonicalization as [`FatPointScheme::canonicalize`].
    pub fn canonicalize(raw: &[i64]) -> Result<Self, Error> {
        Ok(Self {
            alphas: canonical_from_raw(raw)?,
        })
    }

    /// Canonical form from already-nonnegative multiplicities.
    pub fn from_multiplicities(raw: &[u32]) -> Self {
        Self {
            alphas: canonical_from_unsigned(raw),
        }
    }

    /// The multiplicities alpha_1 >= ... >= alpha_s >= 1.
    pub fn multiplicities(&self) -> &[u32] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.alphas.iter().map(|&a| u64::from(a)).sum()
    }

    /// Degree of the scheme in P^2.
    pub fn degree(&self) -> u64 {
        scheme_degree(&self.alphas, Ambient::Plane)
    }
}

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k < 0 or n < k.
///
/// The zero convention keeps clamped dimension formulas valid without special
/// cases: every count in this crate is a binomial evaluated at possibly small
/// arguments.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // Exact at every step: acc * (n-i) is divisible by i+1 because the
        // running value is C(n, i+1) * (i+1)! / (i+1)!.
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow") / (i as u128 + 1);
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Total number of linear conditions a multiplicity vector imposes in P^r:
/// a point of multiplicity m contributes C(m + r - 1, r) conditions.
pub fn scheme_degree(mults: &[u32], ambient: Ambient) -> u64 {
    let r = i64::from(ambient.dim());
    mults
        .iter()
        .map(|&m| binomial(i64::from(m) + r - 1, r))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonicalize_sorts_and_drops_zeros() {
        let z = FatPointScheme::canonicalize(&[1, 3, 0, 2]).unwrap();
        assert_eq!(z.multiplicities(), &[3, 2, 1]);
    }

    #[test]
    fn canonicalize_empty() {
        let z = FatPointScheme::canonicalize(&[]).unwrap();
        assert!(z.is_empty());
        assert_eq!(z.multiplicities(), &[] as &[u32]);
    }

    #[test]
    fn canonicalize_already_canonical() {
        let z = FatPointScheme::canonicalize(&[2, 2, 2]).unwrap();
        assert_eq!(z.multiplicities(), &[2, 2, 2]);
    }

    #[test]
    fn canonicalize_rejects_negative() {
        assert_eq!(
            FatPointScheme::canonicalize(&[2, -1]),
            Err(Error::NegativeMultiplicity(-1))
        );
        assert_eq!(
            ConicScheme::canonicalize(&[-3]),
            Err(Error::NegativeMultiplicity(-3))
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(-1, 2), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(61, 3), 35990);
    }

    #[test]
    fn degree_space() {
        let z = FatPointScheme::canonicalize(&[3, 3, 2, 2, 2, 2, 1]).unwrap();
        assert_eq!(z.degree(), 37); // 2*C(5,3) + 4*C(4,3) + C(3,3)
        assert_eq!(FatPointScheme::canonicalize(&[]).unwrap().degree(), 0);
    }

    #[test]
    fn degree_plane() {
        assert_eq!(scheme_degree(&[2, 1], Ambient::Plane), 4); // C(3,2) + C(2,2)
        let n = ConicScheme::canonicalize(&[2, 1]).unwrap();
        assert_eq!(n.degree(), 4);
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(raw in proptest::collection::vec(0i64..20, 0..12)) {
            let once = FatPointScheme::canonicalize(&raw).unwrap();
            let again = FatPointScheme::canonicalize(
                &once.multiplicities().iter().map(|&m| i64::from(m)).collect::<Vec<_>>(),
            ).unwrap();
            prop_assert_eq!(once, again);
        }

        #[test]
        fn degree_additive_over_union(
            a in proptest::collection::vec(1u32..8, 0..8),
            b in proptest::collection::vec(1u32..8, 0..8),
        ) {
            let mut merged = a.clone();
            merged.extend_from_slice(&b);
            for ambient in [Ambient::Plane, Ambient::Space] {
                prop_assert_eq!(
                    scheme_degree(&merged, ambient),
                    scheme_degree(&a, ambient) + scheme_degree(&b, ambient)
                );
            }
        }

        #[test]
        fn canonical_multiset_preserved(raw in proptest::collection::vec(0i64..20, 0..12)) {
            let z = FatPointScheme::canonicalize(&raw).unwrap();
            let mut expected: Vec<i64> = raw.iter().copied().filter(|&m| m > 0).collect();
            expected.sort_unstable_by(|x, y| y.cmp(x));
            let got: Vec<i64> = z.multiplicities().iter().map(|&m| i64::from(m)).collect();
            prop_assert_eq!(got, expected);
        }
    }
}
