//! Permutations of `{0, ..., d-1}` and conjugacy-class enumeration.
//!
//! This module backs the brute-force counting oracles. Permutations are
//! stored as image arrays and composed left to right: `(a.then(b))(x) =
//! b(a(x))`. All enumeration orders are deterministic (lexicographic on the
//! image array), so counts and any reported witnesses are reproducible.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;

use crate::partition::Partition;

/// A permutation of `{0, ..., d-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Build from an image array; panics if it is not a bijection.
    pub fn new(images: Vec<usize>) -> Self {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            assert!(x < d && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Perm { images }
    }

    pub fn identity(d: usize) -> Self {
        Perm {
            images: (0..d).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Left-to-right composition: `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    /// Commutator `self * other * self^-1 * other^-1` (left-to-right products).
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.then(other).then(&self.inverse()).then(&other.inverse())
    }

    /// The cycle type, as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut cycles = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(cycles)
    }
}

/// All of `S_d` in lexicographic order on image arrays.
pub fn all_perms(d: usize) -> Vec<Perm> {
    (0..d)
        .permutations(d)
        .map(|images| Perm { images })
        .collect()
}

/// The conjugacy class of cycle type `delta` inside `S_d`, `d = |delta|`,
/// in lexicographic order on image arrays.
pub fn class_members(delta: &Partition) -> Vec<Perm> {
    all_perms(delta.degree())
        .into_iter()
        .filter(|p| &p.cycle_type() == delta)
        .collect()
}

/// Histogram of `[a, b] = a b a^-1 b^-1` over all pairs `(a, b)` in
/// `S_d x S_d`, grouped by the product permutation. The map sends each
/// permutation reached to the number of pairs producing it.
///
/// This is the genus-one building block for the enumeration oracle; results
/// are cached per degree because the `(d!)^2` scan dominates oracle runtime.
pub fn commutator_histogram(d: usize) -> Arc<HashMap<Perm, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HashMap<Perm, u64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return Arc::clone(hit);
    }
    let perms = all_perms(d);
    let mut hist: HashMap<Perm, u64> = HashMap::new();
    for a in &perms {
        let a_inv = a.inverse();
        for b in &perms {
            let c = a.then(b).then(&a_inv).then(&b.inverse());
            *hist.entry(c).or_insert(0) += 1;
        }
    }
    let arc = Arc::new(hist);
    cache.lock().unwrap().insert(d, Arc::clone(&arc));
    arc
}

/// Histogram of products `[a_1,b_1] ... [a_g,b_g]` over all `2g`-tuples,
/// grouped by the product. For `g = 0` this is the identity with count 1.
pub fn genus_product_histogram(d: usize, genus: usize) -> HashMap<Perm, u64> {
    let mut hist = HashMap::new();
    hist.insert(Perm::identity(d), 1u64);
    if genus == 0 {
        return hist;
    }
    let base = commutator_histogram(d);
    for _ in 0..genus {
        let mut next: HashMap<Perm, u64> = HashMap::new();
        for (p, cp) in &hist {
            for (q, cq) in base.iter() {
                *next.entry(p.then(q)).or_insert(0) += cp * cq;
            }
        }
        hist = next;
    }
    hist
}
