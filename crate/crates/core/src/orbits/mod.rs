//! Orbits of matrix groups on the points of PG(7,2), the invariant line
//! spread, the five-orbit classification and the Segre triplet.

mod classify;
mod spread;
mod table1;
mod triplet;

pub use classify::{classify_point, Classifier, GsOrbit};
pub use spread::{
    bisecants, line_orbit_split, spread_from_w, tetrad_incidence, tetrad_lines, tetrad_pair_flats,
    tetrad_span_flats, LineOrbits, Spread,
};

pub use table1::{gb_orbit_labels, GbOrbit, TableRow, TABLE1};
pub use triplet::{parity_class, segre_triplet, Parity, SegreTriplet};

use serde::Serialize;

use crate::gf2::{GfMatrix, GfVector, PointSet};

/// Union-find over `0..n` with union by size and path compression.
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> DisjointSets {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitClass {
    /// Smallest point of the class in integer mask order.
    pub representative: GfVector,
    pub size: usize,
    #[serde(skip)]
    pub points: PointSet,
}

impl OrbitClass {
    /// `hist[w]` = number of points of weight `w`.
    pub fn weight_histogram(&self) -> [usize; 9] {
        let mut hist = [0; 9];
        for p in self.points.iter() {
            hist[p.weight() as usize] += 1;
        }
        hist
    }
}

/// A partition of the 255 points into orbits, ordered by representative.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    pub classes: Vec<OrbitClass>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, p: GfVector) -> Option<&OrbitClass> {
        self.classes.iter().find(|c| c.points.contains(p))
    }

    /// Disjoint, covering, and setwise invariant under each of `generators`.
    pub fn is_valid_for(&self, generators: &[GfMatrix]) -> bool {
        let mut union = PointSet::EMPTY;
        for c in &self.classes {
            if !union.is_disjoint(&c.points) {
                return false;
            }
            union = union | c.points;
        }
        union == PointSet::all()
            && self
                .classes
                .iter()
                .all(|c| generators.iter().all(|g| c.points.image(g) == c.points))
    }
}

/// Orbits of the group generated by `generators` on the 255 points.
pub fn point_orbits(generators: &[GfMatrix]) -> OrbitPartition {
    let mut dsu = DisjointSets::new(256);
    for p in GfVector::points() {
        for g in generators {
            dsu.union(p.0 as usize, g.apply(p).0 as usize);
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, PointSet> = Default::default();
    for p in GfVector::points() {
        by_root.entry(dsu.find(p.0 as usize)).or_default().insert(p);
    }
    let mut classes: Vec<OrbitClass> = by_root
        .into_values()
        .map(|points| OrbitClass {
            representative: points.min_point().expect("orbits are nonempty"),
            size: points.len(),
            points,
        })
        .collect();
    classes.sort_by_key(|c| c.representative);
    OrbitPartition { classes }
}
