//! Breadth-first enumeration of balls `B_r(1)` in a Cayley graph.
//!
//! Layers are produced in order of distance. Within a layer, elements
//! appear in shortlex order of their shortlex-least geodesic word: the
//! frontier is expanded element by element in its own order, letters in
//! alphabet order, and an element is kept at its first discovery.
//!
//! Neighbours of layer `d` lie in layers `d-1`, `d` and `d+1`, so only two
//! layers are kept for deduplication.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::{Elem, Group, GroupError};

pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;

/// Optional rayon pool. `None` runs on the calling thread.
#[derive(Debug, Clone, Default)]
pub struct Parallelism(Option<Arc<rayon::ThreadPool>>);

impl Parallelism {
    pub fn serial() -> Self {
        Self(None)
    }

    pub fn with_workers(workers: usize) -> Self {
        if workers <= 1 {
            return Self(None);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        Self(Some(Arc::new(pool)))
    }

    pub fn is_parallel(&self) -> bool {
        self.0.is_some()
    }

    /// Index of the first item satisfying `pred`, in slice order.
    pub fn position_first<T, F>(&self, items: &[T], pred: F) -> Option<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match &self.0 {
            None => items.iter().position(pred),
            Some(pool) => pool.install(|| items.par_iter().position_first(pred)),
        }
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match &self.0 {
            None => items.iter().map(f).collect(),
            Some(pool) => pool.install(|| items.par_iter().map(f).collect()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BallOptions {
    pub max_elements: usize,
    pub parallelism: Parallelism,
}

impl Default for BallOptions {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
            parallelism: Parallelism::serial(),
        }
    }
}

impl BallOptions {
    pub fn with_cap(max_elements: usize) -> Self {
        Self {
            max_elements,
            ..Self::default()
        }
    }
}

/// Iterator over the spheres `S_0, S_1, ..., S_radius`.
pub struct Layers<'g> {
    group: &'g Group,
    radius: usize,
    options: BallOptions,
    previous: HashSet<Elem>,
    current: Vec<Elem>,
    current_set: HashSet<Elem>,
    next_radius: usize,
    produced: usize,
    exhausted: bool,
    stopped: bool,
}

impl<'g> Layers<'g> {
    pub fn new(group: &'g Group, radius: usize, options: BallOptions) -> Self {
        Self {
            group,
            radius,
            options,
            previous: HashSet::new(),
            current: Vec::new(),
            current_set: HashSet::new(),
            next_radius: 0,
            produced: 0,
            exhausted: false,
            stopped: false,
        }
    }

    /// Total number of elements yielded so far.
    pub fn produced(&self) -> usize {
        self.produced
    }

    /// True once an empty sphere was reached, i.e. the whole (finite) group
    /// has been enumerated.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    fn expand(&self) -> Vec<Elem> {
        let group = self.group;
        let letters: Vec<&Elem> = group.alphabet().letters().map(|l| group.letter_elem(l)).collect();
        let (prev, cur) = (&self.previous, &self.current_set);
        let candidates = self.options.parallelism.map(&self.current, |e| {
            letters
                .iter()
                .map(|g| group.mul(e, g))
                .filter(|n| !prev.contains(n) && !cur.contains(n))
                .collect::<Vec<_>>()
        });
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for n in candidates.into_iter().flatten() {
            if !seen.contains(&n) {
                seen.insert(n.clone());
                next.push(n);
            }
        }
        next
    }
}

impl Iterator for Layers<'_> {
    type Item = Result<Vec<Elem>, GroupError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.stopped || self.exhausted || self.next_radius > self.radius {
            return None;
        }
        let layer = if self.next_radius == 0 {
            vec![self.group.identity()]
        } else {
            self.expand()
        };
        if layer.is_empty() {
            self.exhausted = true;
            return None;
        }
        if self.produced + layer.len() > self.options.max_elements {
            self.stopped = true;
            return Some(Err(GroupError::ResourceLimit {
                cap: self.options.max_elements,
            }));
        }
        self.produced += layer.len();
        self.next_radius += 1;
        let set: HashSet<Elem> = layer.iter().cloned().collect();
        self.previous = std::mem::replace(&mut self.current_set, set);
        self.current = layer.clone();
        Some(Ok(layer))
    }
}

/// Flattened ball enumeration.
pub fn ball_enumerate<'g>(
    group: &'g Group,
    radius: usize,
    options: &BallOptions,
) -> impl Iterator<Item = Result<Elem, GroupError>> + 'g {
    Layers::new(group, radius, options.clone()).flat_map(|layer| match layer {
        Ok(v) => v.into_iter().map(Ok).collect::<Vec<_>>(),
        Err(e) => vec![Err(e)],
    })
}
