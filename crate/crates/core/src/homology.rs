//! Reduced simplicial homology over a field, computed from exact ranks of
//! boundary matrices.
//!
//! Characteristic 0 uses fraction-free integer elimination (Bareiss) on
//! `i128` entries with an automatic big-integer fallback, so no floating
//! point ever enters the computation. Prime characteristic uses modular
//! elimination. Over a field, reduced cohomology has the same dimensions as
//! reduced homology, so callers needing cohomology read the same table.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// The coefficient field: exact rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Char0,
    Prime(u64),
}

/// Primes are capped so that modular products fit in `u64`.
const MAX_PRIME: u64 = (1 << 31) - 1;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// A prime field, validating primality.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::CapExceeded {
                what: "prime characteristic",
                cap: MAX_PRIME as usize,
                actual: p as usize,
            });
        }
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Parses "0" or a prime, as used by the `--char` flag.
    pub fn parse(s: &str) -> Result<Self> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid characteristic '{s}'")))?;
        if v == 0 {
            Ok(FieldSpec::Char0)
        } else {
            FieldSpec::prime(v)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Char0 => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

/// Dimensions of reduced homology, keyed by degree (which starts at -1).
/// Zero entries are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyDims {
    dims: BTreeMap<i64, u64>,
}

impl HomologyDims {
    pub fn dim(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    fn insert(&mut self, degree: i64, dim: u64) {
        if dim > 0 {
            self.dims.insert(degree, dim);
        }
    }
}

/// Exact rank over the rationals: Bareiss elimination in `i128`, falling
/// back to big integers if an intermediate minor overflows.
pub(crate) fn rank_char0(matrix: &[Vec<i64>]) -> usize {
    match rank_bareiss_i128(matrix) {
        Some(r) => r,
        None => rank_bareiss_bigint(matrix),
    }
}

fn rank_bareiss_i128(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for r in rank + 1..rows {
            let head = m[r][col];
            for c in col + 1..cols {
                let a = pivot.checked_mul(m[r][c])?;
                let b = head.checked_mul(m[rank][c])?;
                m[r][c] = a.checked_sub(b)? / prev;
            }
            m[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let head = m[r][col].clone();
            for c in col + 1..cols {
                let v = (&pivot * &m[r][c] - &head * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Exact rank over the prime field Z/p.
pub(crate) fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let inv = |a: u64| -> u64 { mod_pow(a, p - 2, p) };
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let iv = inv(m[rank][col]);
        for c in col..cols {
            m[rank][c] = m[rank][c] * iv % p;
        }
        for r in rank + 1..rows {
            let f = m[r][col];
            if f != 0 {
                for c in col..cols {
                    m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank(matrix: &[Vec<i64>], field: &FieldSpec) -> usize {
    match field {
        FieldSpec::Char0 => rank_char0(matrix),
        FieldSpec::Prime(p) => rank_mod_p(matrix, *p),
    }
}

/// Dimensions of reduced simplicial homology of the augmented chain complex.
///
/// `dim H̃_i = f_i − rank ∂_i − rank ∂_{i+1}` with the augmentation map as
/// `∂_0` and the empty face spanning degree −1. Complexes with a cone point
/// short-circuit to the trivial answer. Errors on the void complex.
pub fn reduced_homology(cx: &SimplicialComplex, field: &FieldSpec) -> Result<HomologyDims> {
    if cx.is_void() {
        return Err(Error::VoidComplex);
    }
    if cx.cone_point().is_some() {
        return Ok(HomologyDims::default());
    }
    homology_by_ranks(cx, field)
}

/// The rank computation itself, with no cone shortcut; kept separate so
/// tests can validate the shortcut against it.
fn homology_by_ranks(cx: &SimplicialComplex, field: &FieldSpec) -> Result<HomologyDims> {
    let levels = cx.face_levels();
    // boundary_ranks[c] = rank of the boundary map from cardinality c faces
    // to cardinality c-1 faces; entry 0 is the (zero) map out of the empty face
    let mut boundary_ranks = vec![0usize; levels.len() + 1];
    for c in 1..levels.len() {
        boundary_ranks[c] = rank(&boundary_matrix(&levels[c - 1], &levels[c]), field);
    }
    let mut dims = HomologyDims::default();
    for c in 0..levels.len() {
        let f = levels[c].len();
        let below = boundary_ranks[c];
        let above = boundary_ranks.get(c + 1).copied().unwrap_or(0);
        let h = f as i64 - below as i64 - above as i64;
        assert!(h >= 0, "negative homology dimension: inconsistent ranks");
        dims.insert(c as i64 - 1, h as u64);
    }
    Ok(dims)
}

/// Signed incidence matrix between consecutive face levels; rows index the
/// smaller faces, columns the larger. For vertex level (`cols` of size 1)
/// this is the augmentation row of ones.
fn boundary_matrix(rows_faces: &[u64], cols_faces: &[u64]) -> Vec<Vec<i64>> {
    let row_index: BTreeMap<u64, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut m = vec![vec![0i64; cols_faces.len()]; rows_faces.len()];
    for (j, &face) in cols_faces.iter().enumerate() {
        let mut sign = 1i64;
        let mut rem = face;
        while rem != 0 {
            let low = rem & rem.wrapping_neg();
            let sub = face ^ low;
            let i = row_index[&sub];
            m[i][j] = sign;
            sign = -sign;
            rem ^= low;
        }
    }
    m
}

/// The reduced Euler characteristic from face counts:
/// `Σ_{i≥-1} (-1)^i f_i` with `f_{-1} = 1`.
pub fn reduced_euler_characteristic(cx: &SimplicialComplex) -> i64 {
    cx.face_counts()
        .iter()
        .enumerate()
        .map(|(c, &f)| if c % 2 == 0 { -(f as i64) } else { f as i64 })
        .sum()
}

/// Alternating sum of homology dimensions, for the Euler identity check.
pub fn euler_from_dims(dims: &HomologyDims) -> i64 {
    dims.iter()
        .map(|(d, v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
        .sum()
}
