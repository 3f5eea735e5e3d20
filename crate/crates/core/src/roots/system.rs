use std::collections::{HashSet, VecDeque};

use super::RootError;
use crate::dsl::{CartanType, Family};

/// Largest Weyl group the enumerator will walk.
pub const WEYL_ORDER_CAP: usize = 60_000;

/// A root system in its standard integral realization.
///
/// `F4` and `E6` have half-integral simple roots in the usual coordinates;
/// they are stored doubled, which leaves all Cartan integers unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub cartan: CartanType,
    pub simple_roots: Vec<Vec<i64>>,
    /// `cartan_matrix[i][j] = 2(α_i, α_j) / (α_i, α_i)`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_root_count: usize,
    /// `dim G/B`, equal to the number of positive roots.
    pub dimension_flag: usize,
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = -1;
    v
}

fn scaled(v: Vec<i64>, k: i64) -> Vec<i64> {
    v.into_iter().map(|x| x * k).collect()
}

fn simple_roots(ct: CartanType) -> Vec<Vec<i64>> {
    let n = ct.rank as usize;
    match ct.family {
        Family::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Family::B | Family::C | Family::D => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            roots.push(match ct.family {
                Family::B => unit(n, n - 1, 1),
                Family::C => unit(n, n - 1, 2),
                _ => {
                    let mut v = unit(n, n - 2, 1);
                    v[n - 1] = 1;
                    v
                }
            });
            roots
        }
        // short root first, inside the sum-zero plane of Z^3
        Family::G => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        Family::F => vec![
            scaled(diff(4, 1, 2), 2),
            scaled(diff(4, 2, 3), 2),
            unit(4, 3, 2),
            vec![1, -1, -1, -1],
        ],
        // Bourbaki labelling inside the E8 lattice, doubled
        Family::E => {
            let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            let mut a2 = unit(8, 0, 2);
            a2[1] = 2;
            roots.push(a2);
            for i in 0..4 {
                roots.push(scaled(diff(8, i + 1, i), 2));
            }
            roots
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Applies the simple reflection `s_i` to a vector in simple-root
/// coordinates: only coordinate `i` changes.
pub(crate) fn reflect(cartan_matrix: &[Vec<i64>], i: usize, v: &mut [i64]) {
    let pairing: i64 = cartan_matrix[i]
        .iter()
        .zip(v.iter())
        .map(|(c, x)| c * x)
        .sum();
    v[i] -= pairing;
}

/// Builds the standard realization and its positive roots. Types whose Weyl
/// group exceeds [`WEYL_ORDER_CAP`] are refused.
pub fn build_root_system(ct: CartanType) -> Result<RootSystem, RootError> {
    if let Some(msg) = ct.constraint_violation() {
        return Err(RootError::InvalidType(ct, msg));
    }
    if !CartanType::supported().contains(&ct) {
        return Err(RootError::OverCap(ct));
    }
    let simple = simple_roots(ct);
    let n = simple.len();
    let cartan_matrix: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let num = 2 * dot(&simple[i], &simple[j]);
                    let den = dot(&simple[i], &simple[i]);
                    debug_assert_eq!(num % den, 0, "non-crystallographic pairing in {ct}");
                    num / den
                })
                .collect()
        })
        .collect();

    // every root is W-conjugate to a simple root
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
    seen.extend(queue.iter().cloned());
    while let Some(root) = queue.pop_front() {
        for i in 0..n {
            let mut r = root.clone();
            reflect(&cartan_matrix, i, &mut r);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut positive_roots: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .collect();
    positive_roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let count = positive_roots.len();
    Ok(RootSystem {
        cartan: ct,
        simple_roots: simple,
        cartan_matrix,
        positive_roots,
        positive_root_count: count,
        dimension_flag: count,
    })
}
