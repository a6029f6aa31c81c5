//! Independent ground truth by exact linear algebra over a prime field.
//!
//! A form of degree t lies in the ideal of a fat point scheme exactly when
//! all its partial derivatives of total order m_i - 1 vanish at the i-th
//! point. Those conditions become the rows of an interpolation matrix whose
//! entries live in F_p; the kernel dimension is dim I_t for the explicit
//! points used. Points are drawn from a seeded generator, so every query is
//! reproducible.
//!
//! Ranks are computed modulo a configurable prime. A rank mod p never
//! exceeds the characteristic-0 rank and agrees with it for all but a
//! vanishing fraction of point draws, so a disagreement between seeds is
//! resolved by re-running on a different prime before anything is reported
//! as a failure (see [`dim_cubic_consensus`]).
//!
//! Only derivatives of exact order m_i - 1 are used: for t >= m_i - 1 the
//! lower-order conditions follow from the Euler relation (valid mod p since
//! p > t), keeping the row count at C(m_i + r - 1, r) per point. A
//! multiplicity above t + 1 annihilates every degree-t form outright, so
//! those queries return 0 without building a matrix.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cubic;
use crate::error::Error;
use crate::schemes::{ConicScheme, FatPointScheme};

/// Default oracle modulus: 2^31 - 1. Products of two residues fit in 64
/// bits, and every degree/multiplicity allowed by the configuration caps is
/// far below it.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Moduli tried, in order, when seeds disagree at the current prime.
pub const ALTERNATE_PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 2_147_483_629];

// ---------------------------------------------------------------------------
// Prime field
// ---------------------------------------------------------------------------

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the first twelve primes are a
/// sufficient witness set for this range).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Arithmetic context for F_p. All operations are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, base: u64, exp: u64) -> u64 {
        pow_mod(base, exp, self.p)
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        pow_mod(a, self.p - 2, self.p)
    }

    fn reduce_signed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// `count` distinct field elements from a seeded generator.
    fn sample_distinct(&self, rng: &mut ChaCha8Rng, count: usize) -> Vec<u64> {
        let mut seen = HashSet::with_capacity(count);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let v = rng.gen_range(0..self.p);
            if seen.insert(v) {
                out.push(v);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Monomials and the interpolation matrix
// ---------------------------------------------------------------------------

/// All exponent vectors of the given total degree in `vars` variables, in a
/// fixed enumeration order. There are C(degree + vars - 1, vars - 1) of them.
fn monomials(degree: u32, vars: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            rec(remaining - e, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(degree, vars, &mut Vec::with_capacity(vars), &mut out);
    out
}

/// Matrix of vanishing conditions over F_p. Rows are derivative conditions
/// at explicit points, columns the degree-t monomials of the ambient space.
#[derive(Debug, Clone)]
pub struct InterpolationMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl InterpolationMatrix {
    fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn push_row(&mut self, row: Vec<u64>) {
        debug_assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(&row);
        self.rows += 1;
    }

    /// Exact rank over F_p by Gaussian elimination with pivoting on the
    /// first nonzero entry of each column.
    pub fn rank(&self) -> u64 {
        let f = self.field;
        let cols = self.cols;
        let rows = self.rows;
        let mut data = self.data.clone();
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in col..cols {
                    data.swap(rank * cols + c, pivot * cols + c);
                }
            }
            let inv = f.inv(data[rank * cols + col]);
            for r in rank + 1..rows {
                let factor = f.mul(data[r * cols + col], inv);
                if factor == 0 {
                    continue;
                }
                data[r * cols + col] = 0;
                for c in col + 1..cols {
                    let delta = f.mul(factor, data[rank * cols + c]);
                    data[r * cols + c] = f.sub(data[r * cols + c], delta);
                }
            }
            rank += 1;
        }
        rank as u64
    }

    /// Dimension of the kernel (forms satisfying every condition).
    pub fn kernel_dim(&self) -> u64 {
        self.cols as u64 - self.rank()
    }
}

/// Appends, for one point, the rows of all derivative conditions of exact
/// total order `mult - 1` against the degree-`deg` monomials `mons`.
fn push_vanishing_rows(
    matrix: &mut InterpolationMatrix,
    coords: &[u64],
    mult: u32,
    deg: u32,
    mons: &[Vec<u32>],
) {
    let f = matrix.field;
    let vars = coords.len();
    // powers[j][e] = coords[j]^e
    let powers: Vec<Vec<u64>> = coords
        .iter()
        .map(|&c| {
            let mut row = Vec::with_capacity(deg as usize + 1);
            let mut acc = 1u64;
            for _ in 0..=deg {
                row.push(acc);
                acc = f.mul(acc, c);
            }
            row
        })
        .collect();
    for beta in monomials(mult - 1, vars) {
        let row: Vec<u64> = mons
            .iter()
            .map(|gamma| {
                let mut entry = 1u64;
                for j in 0..vars {
                    if gamma[j] < beta[j] {
                        return 0;
                    }
                    // falling factorial gamma_j (gamma_j - 1) ... (gamma_j - beta_j + 1)
                    for k in 0..beta[j] {
                        entry = f.mul(entry, u64::from(gamma[j] - k));
                    }
                    entry = f.mul(entry, powers[j][(gamma[j] - beta[j]) as usize]);
                }
                entry
            })
            .collect();
        matrix.push_row(row);
    }
}

fn check_modulus(field: PrimeField, deg: u32, max_mult: u32) -> Result<(), Error> {
    let required = u64::from(deg.max(max_mult));
    if field.modulus() <= required {
        return Err(Error::ModulusTooSmall {
            modulus: field.modulus(),
            required,
        });
    }
    Ok(())
}

fn ensure_distinct(params: &[u64]) -> Result<(), Error> {
    let mut seen = HashSet::with_capacity(params.len());
    for &l in params {
        if !seen.insert(l) {
            return Err(Error::DuplicateParameter(l));
        }
    }
    Ok(())
}

/// Interpolation matrix for fat points on the rational normal cubic: the
/// i-th point is (1 : l_i : l_i^2 : l_i^3) for the given distinct
/// parameters, columns are the degree-t monomials of P^3.
pub fn build_matrix_cubic(
    field: PrimeField,
    scheme: &FatPointScheme,
    t: u32,
    lambdas: &[u64],
) -> Result<InterpolationMatrix, Error> {
    assert_eq!(
        lambdas.len(),
        scheme.len(),
        "one curve parameter per point required"
    );
    ensure_distinct(lambdas)?;
    let max_mult = scheme.multiplicities().first().copied().unwrap_or(0);
    check_modulus(field, t, max_mult)?;
    let mons = monomials(t, 4);
    let mut matrix = InterpolationMatrix::new(field, mons.len());
    for (&m, &l) in scheme.multiplicities().iter().zip(lambdas) {
        let coords = [1, l, field.mul(l, l), field.mul(field.mul(l, l), l)];
        push_vanishing_rows(&mut matrix, &coords, m, t, &mons);
    }
    Ok(matrix)
}

/// Interpolation matrix for fat points on a smooth plane conic: the i-th
/// point is (1 : l_i : l_i^2), columns are the degree-d monomials of P^2.
pub fn build_matrix_conic(
    field: PrimeField,
    alphas: &ConicScheme,
    d: u32,
    lambdas: &[u64],
) -> Result<InterpolationMatrix, Error> {
    assert_eq!(
        lambdas.len(),
        alphas.len(),
        "one conic parameter per point required"
    );
    ensure_distinct(lambdas)?;
    let max_mult = alphas.multiplicities().first().copied().unwrap_or(0);
    check_modulus(field, d, max_mult)?;
    let mons = monomials(d, 3);
    let mut matrix = InterpolationMatrix::new(field, mons.len());
    for (&a, &l) in alphas.multiplicities().iter().zip(lambdas) {
        let coords = [1, l, field.mul(l, l)];
        push_vanishing_rows(&mut matrix, &coords, a, d, &mons);
    }
    Ok(matrix)
}

// ---------------------------------------------------------------------------
// Oracle queries
// ---------------------------------------------------------------------------

/// Random generic-position trial results against the curve value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    /// Ideal dimension for points on the rational normal cubic, from the
    /// combinatorial engine.
    pub rnc_dim: u64,
    /// Ideal dimension for each random-point trial.
    pub generic_dims: Vec<u64>,
}

impl ProbeReport {
    /// Trials where the random points gave a larger ideal than the curve
    /// points (a violation of the expected comparison).
    pub fn violations(&self) -> Vec<usize> {
        self.generic_dims
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > self.rnc_dim)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn conjecture_consistent(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Rank-oracle queries at one fixed prime. Point draws are reproducible
/// from the seed passed to each query.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    field: PrimeField,
}

impl Oracle {
    pub fn new(prime: u64) -> Result<Self, Error> {
        Ok(Self {
            field: PrimeField::new(prime)?,
        })
    }

    pub fn with_default_prime() -> Self {
        Self::new(DEFAULT_PRIME).expect("default modulus is prime")
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// dim I_t for the scheme placed at seed-drawn distinct points of the
    /// rational normal cubic.
    pub fn dim_cubic(&self, scheme: &FatPointScheme, t: u32, seed: u64) -> Result<u64, Error> {
        let max_mult = scheme.multiplicities().first().copied().unwrap_or(0);
        if max_mult > t + 1 {
            // A nonzero degree-t form has multiplicity at most t at a point.
            return Ok(0);
        }
        let mut rng = Self::rng(seed);
        let lambdas = self.field.sample_distinct(&mut rng, scheme.len());
        Ok(build_matrix_cubic(self.field, scheme, t, &lambdas)?.kernel_dim())
    }

    /// Degree-d ideal dimension for the conic scheme placed at seed-drawn
    /// distinct points of a smooth conic.
    pub fn dim_conic(&self, alphas: &ConicScheme, d: u32, seed: u64) -> Result<u64, Error> {
        let max_mult = alphas.multiplicities().first().copied().unwrap_or(0);
        if max_mult > d + 1 {
            return Ok(0);
        }
        let mut rng = Self::rng(seed);
        let lambdas = self.field.sample_distinct(&mut rng, alphas.len());
        Ok(build_matrix_conic(self.field, alphas, d, &lambdas)?.kernel_dim())
    }

    /// Dimension of the degree-t part of the n-th power of the ideal of the
    /// rational normal cubic, as the rank of the span of
    /// {q0^a q1^b q2^c * M : a + b + c = n, deg M = t - 2n}, where the q_i
    /// are the three quadric generators.
    pub fn dim_power(&self, n: u32, t: u32) -> u64 {
        if t < 2 * n {
            return 0;
        }
        let f = self.field;
        let mons_t = monomials(t, 4);
        let col_of: HashMap<&[u32], usize> = mons_t
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i))
            .collect();

        // 2x2 minors of ((x0, x1, x2), (x1, x2, x3)).
        let quadrics: [Vec<([u32; 4], i64)>; 3] = [
            vec![([1, 0, 1, 0], 1), ([0, 2, 0, 0], -1)],
            vec![([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)],
            vec![([0, 1, 0, 1], 1), ([0, 0, 2, 0], -1)],
        ];

        let mul_by = |poly: &HashMap<[u32; 4], u64>, q: &[([u32; 4], i64)]| {
            let mut out: HashMap<[u32; 4], u64> = HashMap::new();
            for (exp, &coeff) in poly {
                for &(qexp, qcoeff) in q {
                    let mut e = *exp;
                    for j in 0..4 {
                        e[j] += qexp[j];
                    }
                    let term = f.mul(coeff, f.reduce_signed(qcoeff));
                    let slot = out.entry(e).or_insert(0);
                    *slot = f.add(*slot, term);
                }
            }
            out
        };

        let shift_mons = monomials(t - 2 * n, 4);
        let mut matrix = InterpolationMatrix::new(f, mons_t.len());
        for a in 0..=n {
            for b in 0..=n - a {
                let c = n - a - b;
                let mut product: HashMap<[u32; 4], u64> = HashMap::new();
                product.insert([0, 0, 0, 0], 1);
                for _ in 0..a {
                    product = mul_by(&product, &quadrics[0]);
                }
                for _ in 0..b {
                    product = mul_by(&product, &quadrics[1]);
                }
                for _ in 0..c {
                    product = mul_by(&product, &quadrics[2]);
                }
                for shift in &shift_mons {
                    let mut row = vec![0u64; mons_t.len()];
                    for (exp, &coeff) in &product {
                        let mut e = exp.to_vec();
                        for j in 0..4 {
                            e[j] += shift[j];
                        }
                        row[col_of[e.as_slice()]] = coeff;
                    }
                    matrix.push_row(row);
                }
            }
        }
        matrix.rank()
    }

    /// Dimension of the degree-t forms through the scheme that also vanish
    /// on the whole curve, by stacking the fat-point conditions with plain
    /// evaluations at 3t + 2 further distinct curve points (more than the
    /// 3t intersections a form not containing the curve could have).
    pub fn dim_curve_intersection(
        &self,
        scheme: &FatPointScheme,
        t: u32,
        seed: u64,
    ) -> Result<u64, Error> {
        let max_mult = scheme.multiplicities().first().copied().unwrap_or(0);
        if max_mult > t + 1 {
            return Ok(0);
        }
        let mut rng = Self::rng(seed);
        let extra = 3 * t as usize + 2;
        let params = self.field.sample_distinct(&mut rng, scheme.len() + extra);
        let (point_params, eval_params) = params.split_at(scheme.len());
        let mut matrix = build_matrix_cubic(self.field, scheme, t, point_params)?;
        let mons = monomials(t, 4);
        for &l in eval_params {
            let coords = [
                1,
                l,
                self.field.mul(l, l),
                self.field.mul(self.field.mul(l, l), l),
            ];
            push_vanishing_rows(&mut matrix, &coords, 1, t, &mons);
        }
        Ok(matrix.kernel_dim())
    }

    /// Compares the combinatorial curve value against `trials` random
    /// placements of the same multiplicities at uniformly drawn distinct
    /// points of P^3 (affine chart; coincidences rejected, further
    /// degeneracies left to chance).
    pub fn generic_probe(
        &self,
        scheme: &FatPointScheme,
        t: u32,
        trials: u32,
        seed: u64,
    ) -> Result<ProbeReport, Error> {
        let max_mult = scheme.multiplicities().first().copied().unwrap_or(0);
        check_modulus(self.field, t, max_mult)?;
        let rnc_dim = cubic::ideal_dim(scheme, t);
        let mut rng = Self::rng(seed);
        let mons = monomials(t, 4);
        let mut generic_dims = Vec::with_capacity(trials as usize);
        for _ in 0..trials {
            let dim = if max_mult > t + 1 {
                0
            } else {
                let mut points: HashSet<[u64; 3]> = HashSet::with_capacity(scheme.len());
                while points.len() < scheme.len() {
                    points.insert([
                        rng.gen_range(0..self.field.modulus()),
                        rng.gen_range(0..self.field.modulus()),
                        rng.gen_range(0..self.field.modulus()),
                    ]);
                }
                let mut matrix = InterpolationMatrix::new(self.field, mons.len());
                for (&m, pt) in scheme.multiplicities().iter().zip(points.iter()) {
                    let coords = [1, pt[0], pt[1], pt[2]];
                    push_vanishing_rows(&mut matrix, &coords, m, t, &mons);
                }
                matrix.kernel_dim()
            };
            generic_dims.push(dim);
        }
        Ok(ProbeReport {
            rnc_dim,
            generic_dims,
        })
    }
}

/// Runs [`Oracle::dim_cubic`] over all `seeds` and returns the common value.
/// If any two seeds disagree (a degenerate draw or a modulus artifact), the
/// whole batch is retried on the next prime in `primes`; only when every
/// prime is exhausted is the disagreement reported as an error.
pub fn dim_cubic_consensus(
    scheme: &FatPointScheme,
    t: u32,
    seeds: &[u64],
    primes: &[u64],
) -> Result<u64, Error> {
    assert!(!seeds.is_empty() && !primes.is_empty());
    let mut last_values = Vec::new();
    for &prime in primes {
        let oracle = Oracle::new(prime)?;
        let values: Result<Vec<u64>, Error> = seeds
            .iter()
            .map(|&s| oracle.dim_cubic(scheme, t, s))
            .collect();
        let values = values?;
        if values.windows(2).all(|w| w[0] == w[1]) {
            return Ok(values[0]);
        }
        last_values = values;
    }
    Err(Error::OracleDisagreement {
        mults: scheme.multiplicities().to_vec(),
        t,
        values: last_values,
        primes_tried: primes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::{binomial, scheme_degree, Ambient};

    fn scheme(mults: &[u32]) -> FatPointScheme {
        FatPointScheme::from_multiplicities(mults)
    }

    fn conic(alphas: &[u32]) -> ConicScheme {
        ConicScheme::from_multiplicities(alphas)
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2));
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(ALTERNATE_PRIMES[0]));
        assert!(is_prime(ALTERNATE_PRIMES[1]));
        assert!(!is_prime(1));
        assert!(!is_prime(2_147_483_646));
        assert!(PrimeField::new(91).is_err()); // 7 * 13
    }

    #[test]
    fn field_arithmetic() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.add(100, 5), 4);
        assert_eq!(f.sub(3, 7), 97);
        assert_eq!(f.mul(50, 50), 2500 % 101);
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(4, 4).len() as u64, binomial(7, 3));
        assert_eq!(monomials(6, 3).len() as u64, binomial(8, 2));
        assert_eq!(monomials(0, 4).len(), 1);
    }

    #[test]
    fn single_evaluation_row() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let m = build_matrix_cubic(f, &scheme(&[1]), 1, &[5]).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 4));
        assert_eq!(m.data, vec![1, 5, 25, 125]);
        assert_eq!(m.kernel_dim(), 3);
    }

    #[test]
    fn three_simple_points_one_plane() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let m = build_matrix_cubic(f, &scheme(&[1, 1, 1]), 1, &[2, 3, 11]).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 4));
        assert_eq!(m.rank(), 3); // Vandermonde-style independence
        assert_eq!(m.kernel_dim(), 1);
    }

    #[test]
    fn double_point_conditions() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let m = build_matrix_cubic(f, &scheme(&[2]), 2, &[7]).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 10));
        assert_eq!(m.kernel_dim(), 6);
    }

    #[test]
    fn matrix_shape_matches_scheme_degree() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let z = scheme(&[3, 2, 2, 1]);
        let m = build_matrix_cubic(f, &z, 6, &[1, 2, 3, 4]).unwrap();
        assert_eq!(m.rows() as u64, z.degree());
        assert_eq!(m.cols() as u64, binomial(9, 3));

        let n = conic(&[3, 1]);
        let mc = build_matrix_conic(f, &n, 5, &[1, 2]).unwrap();
        assert_eq!(
            mc.rows() as u64,
            scheme_degree(n.multiplicities(), Ambient::Plane)
        );
        assert_eq!(mc.cols() as u64, binomial(7, 2));
    }

    #[test]
    fn duplicate_parameter_rejected() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        assert_eq!(
            build_matrix_cubic(f, &scheme(&[1, 1]), 2, &[4, 4]).unwrap_err(),
            Error::DuplicateParameter(4)
        );
    }

    #[test]
    fn small_modulus_rejected() {
        let f = PrimeField::new(5).unwrap();
        assert!(matches!(
            build_matrix_cubic(f, &scheme(&[1]), 7, &[2]),
            Err(Error::ModulusTooSmall { .. })
        ));
    }

    #[test]
    fn rank_golden_cases() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut zero = InterpolationMatrix::new(f, 5);
        zero.push_row(vec![0; 5]);
        zero.push_row(vec![0; 5]);
        assert_eq!(zero.rank(), 0);

        let mut id = InterpolationMatrix::new(f, 3);
        id.push_row(vec![1, 0, 0]);
        id.push_row(vec![0, 1, 0]);
        id.push_row(vec![0, 0, 1]);
        assert_eq!(id.rank(), 3);
    }

    #[test]
    fn cubic_dimension_goldens() {
        let oracle = Oracle::with_default_prime();
        assert_eq!(
            oracle
                .dim_cubic(&scheme(&[3, 3, 2, 2, 2, 2, 1]), 4, 1)
                .unwrap(),
            1
        );
        assert_eq!(oracle.dim_cubic(&scheme(&[]), 2, 1).unwrap(), 10);
        assert_eq!(
            oracle.dim_cubic(&scheme(&[2, 2, 2, 2, 2]), 4, 9).unwrap(),
            15
        );
    }

    #[test]
    fn cubic_dimension_zero_when_multiplicity_exceeds_degree() {
        let oracle = Oracle::with_default_prime();
        assert_eq!(oracle.dim_cubic(&scheme(&[4]), 2, 3).unwrap(), 0);
        assert_eq!(oracle.dim_cubic(&scheme(&[4, 4, 1]), 1, 3).unwrap(), 0);
    }

    #[test]
    fn conic_dimension_goldens() {
        let oracle = Oracle::with_default_prime();
        assert_eq!(oracle.dim_conic(&conic(&[1, 1, 1, 1, 1]), 2, 5).unwrap(), 1);
        assert_eq!(oracle.dim_conic(&conic(&[2]), 1, 5).unwrap(), 0);
        assert_eq!(oracle.dim_conic(&conic(&[2, 2, 1, 1]), 3, 5).unwrap(), 2);
    }

    #[test]
    fn power_dimension_goldens() {
        let oracle = Oracle::with_default_prime();
        assert_eq!(oracle.dim_power(1, 3), 10);
        assert_eq!(oracle.dim_power(2, 3), 0);
        assert_eq!(oracle.dim_power(2, 4), 6);
        assert_eq!(oracle.dim_power(0, 3), 20);
    }

    #[test]
    fn intersection_goldens() {
        let oracle = Oracle::with_default_prime();
        assert_eq!(
            oracle
                .dim_curve_intersection(&scheme(&[3, 3, 2, 2, 2, 2, 1]), 4, 2)
                .unwrap(),
            1
        );
        assert_eq!(
            oracle
                .dim_curve_intersection(&scheme(&[1, 1, 1]), 1, 2)
                .unwrap(),
            0
        );
        assert_eq!(
            oracle.dim_curve_intersection(&scheme(&[]), 2, 2).unwrap(),
            3
        );
    }

    #[test]
    fn probe_single_simple_point() {
        let oracle = Oracle::with_default_prime();
        let report = oracle.generic_probe(&scheme(&[1]), 1, 1, 0).unwrap();
        assert_eq!(report.rnc_dim, 3);
        assert_eq!(report.generic_dims, vec![3]);
        assert!(report.conjecture_consistent());
    }

    #[test]
    fn probe_regular_scheme() {
        let oracle = Oracle::with_default_prime();
        let report = oracle
            .generic_probe(&scheme(&[2, 2, 2, 2, 2]), 4, 3, 1)
            .unwrap();
        assert_eq!(report.rnc_dim, 15);
        for &d in &report.generic_dims {
            assert!(d <= 15);
        }
    }

    #[test]
    fn position_independence_across_seeds() {
        let oracle = Oracle::with_default_prime();
        let z = scheme(&[3, 3, 2, 2, 2, 2, 1]);
        let first = oracle.dim_cubic(&z, 4, 100).unwrap();
        for seed in 101..105 {
            assert_eq!(oracle.dim_cubic(&z, 4, seed).unwrap(), first);
        }
    }

    #[test]
    fn consensus_returns_common_value() {
        let z = scheme(&[2, 2, 1]);
        let v = dim_cubic_consensus(&z, 3, &[1, 2, 3, 4, 5], &[DEFAULT_PRIME]).unwrap();
        assert_eq!(v, cubic::ideal_dim(&z, 3));
    }
}
