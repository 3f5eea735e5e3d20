use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{build_root_system, RootError, RootSystem, WEYL_ORDER_CAP};
use crate::dsl::CartanType;

/// Order and length distribution of a Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylData {
    pub order: u64,
    /// `length_counts[ℓ]` is the number of elements of length `ℓ`.
    pub length_counts: Vec<u64>,
}

impl WeylData {
    pub fn longest_length(&self) -> usize {
        self.length_counts.len().saturating_sub(1)
    }

    /// Length counts as a JSON array indexed by length.
    pub fn length_counts_json(&self) -> String {
        serde_json::to_string(&self.length_counts).expect("plain integers serialize")
    }
}

/// Enumerates `W` as integer matrices on the root lattice (simple-root
/// basis), breadth first from the identity. The BFS depth of an element is
/// its length.
pub fn weyl_enumerate(rs: &RootSystem) -> Result<WeylData, RootError> {
    let n = rs.cartan_matrix.len();
    // off-diagonal neighbours of each node in the Dynkin diagram
    let links: Vec<Vec<(usize, i8)>> = rs
        .cartan_matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, &c)| j != i && c != 0)
                .map(|(j, &c)| (j, c as i8))
                .collect()
        })
        .collect();
    let mut identity = vec![0i8; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    let mut counts = vec![1u64];
    while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for w in &frontier {
            for i in 0..n {
                // s_i · w rewrites row i only; the diagonal entry 2 flips its sign
                let mut next = w.clone();
                for col in 0..n {
                    let mut pairing = 2 * w[i * n + col];
                    for &(j, c) in &links[i] {
                        pairing += c * w[j * n + col];
                    }
                    next[i * n + col] -= pairing;
                }
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() >= WEYL_ORDER_CAP {
                    return Err(RootError::CapExceeded(rs.cartan));
                }
                seen.insert(next.clone());
                next_frontier.push(next);
            }
        }
        if !next_frontier.is_empty() {
            counts.push(next_frontier.len() as u64);
        }
        frontier = next_frontier;
    }
    Ok(WeylData {
        order: seen.len() as u64,
        length_counts: counts,
    })
}

type Cache = Mutex<HashMap<CartanType, Arc<(RootSystem, WeylData)>>>;

/// Root system and Weyl data for `ct`, computed once per process.
pub fn weyl_data(ct: CartanType) -> Result<Arc<(RootSystem, WeylData)>, RootError> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("weyl cache poisoned").get(&ct) {
        return Ok(hit.clone());
    }
    let rs = build_root_system(ct)?;
    let wd = weyl_enumerate(&rs)?;
    let entry = Arc::new((rs, wd));
    cache
        .lock()
        .expect("weyl cache poisoned")
        .entry(ct)
        .or_insert(entry.clone());
    Ok(entry)
}
