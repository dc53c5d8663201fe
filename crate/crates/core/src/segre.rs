//! The Segre variety S(1,1,1) in PG(7,2) and its invariant attributes.
//!
//! Points are the decomposable tensors `E_ijk = u_i ⊗ u_j ⊗ u_k`, where
//! `u_0, u_1, u_2 = u_0 + u_1` are the three points of the projective line.
//! The model carries the 27 generator lines, the nine sub-varieties
//! `σ_i^r` with their ambient 3-flats `Y_i^r`, the 27 3-flats `Z(p)`
//! spanned by the generators through a point, and the 27 distinguished
//! tangents `L(p)`.

use std::fmt;

use serde::Serialize;

use crate::error::{construction, Result};
use crate::gf2::{Flat, GfVector, PointSet};

/// Index `(i, j, k)` of `E_ijk`, each in `0..=2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(pub [u8; 3]);

impl MultiIndex {
    pub fn new(i: u8, j: u8, k: u8) -> MultiIndex {
        assert!(
            i < 3 && j < 3 && k < 3,
            "multi-index entries must lie in 0..=2"
        );
        MultiIndex([i, j, k])
    }

    /// All 27 indices in lexicographic order.
    pub fn all() -> impl Iterator<Item = MultiIndex> {
        (0..27u8).map(|n| MultiIndex([n / 9, n / 3 % 3, n % 3]))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.0;
        write!(f, "E{i}{j}{k}")
    }
}

/// Basis number (1..=8) of `E_abc` for `a, b, c` in {0, 1}.
pub(crate) fn basis_number(bits: [u8; 3]) -> usize {
    match bits {
        [0, 0, 0] => 1,
        [1, 0, 0] => 2,
        [1, 1, 0] => 3,
        [0, 1, 0] => 4,
        [1, 0, 1] => 5,
        [0, 0, 1] => 6,
        [0, 1, 1] => 7,
        [1, 1, 1] => 8,
        _ => unreachable!("not a binary multi-index: {bits:?}"),
    }
}

/// Inverse of [`basis_number`].
pub(crate) fn basis_bits(n: usize) -> [u8; 3] {
    [
        [0, 0, 0],
        [1, 0, 0],
        [1, 1, 0],
        [0, 1, 0],
        [1, 0, 1],
        [0, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
    ][n - 1]
}

/// Coordinates of `E_ijk`; an entry 2 expands as `u_0 + u_1`.
pub fn segre_point(m: MultiIndex) -> GfVector {
    let expand = |i: u8| -> &'static [u8] {
        match i {
            0 => &[0],
            1 => &[1],
            _ => &[0, 1],
        }
    };
    let mut v = GfVector::ZERO;
    for &a in expand(m.0[0]) {
        for &b in expand(m.0[1]) {
            for &c in expand(m.0[2]) {
                v += GfVector::basis(basis_number([a, b, c]));
            }
        }
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct SegrePoint {
    pub index: String,
    pub point: GfVector,
}

/// Generator `L^r_ij`: the line along direction `r` through fixed indices `(i, j)`.
#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub direction: u8,
    pub fixed: [u8; 2],
    pub points: [GfVector; 3],
}

/// `σ_i^r`: the nine points with index `i` in position `r`, and their span `Y_i^r`.
#[derive(Clone, Debug)]
pub struct SubSegre {
    pub position: u8,
    pub value: u8,
    pub points: Vec<GfVector>,
    pub ambient: Flat,
}

#[derive(Clone, Debug)]
pub struct SegreModel {
    pub points: Vec<(MultiIndex, GfVector)>,
    pub generators: Vec<Generator>,
    pub sub_segres: Vec<SubSegre>,
    /// `Z(p)` for each point, in the order of `points`.
    pub z_flats: Vec<Flat>,
    /// `L(p)` for each point, in the order of `points`.
    pub tangents: Vec<[GfVector; 3]>,
    point_set: PointSet,
}

impl SegreModel {
    pub fn point_set(&self) -> PointSet {
        self.point_set
    }

    pub fn index_of(&self, p: GfVector) -> Option<MultiIndex> {
        self.points.iter().find(|(_, q)| *q == p).map(|(m, _)| *m)
    }

    /// The three generators through `p`.
    pub fn generators_through(&self, p: GfVector) -> Vec<&Generator> {
        self.generators
            .iter()
            .filter(|g| g.points.contains(&p))
            .collect()
    }

    pub fn tangent_of(&self, p: GfVector) -> Option<[GfVector; 3]> {
        self.points
            .iter()
            .position(|(_, q)| *q == p)
            .map(|i| self.tangents[i])
    }

    pub fn z_flat_of(&self, p: GfVector) -> Option<&Flat> {
        self.points
            .iter()
            .position(|(_, q)| *q == p)
            .map(|i| &self.z_flats[i])
    }

    /// Union of the 27 distinguished tangents.
    pub fn tangent_points(&self) -> PointSet {
        self.tangents.iter().flatten().copied().collect()
    }
}

fn with_position(r: u8, fixed: [u8; 2], t: u8) -> MultiIndex {
    // direction r (1-based) varies, the other two positions take `fixed` in order
    let [a, b] = fixed;
    match r {
        1 => MultiIndex([t, a, b]),
        2 => MultiIndex([a, t, b]),
        _ => MultiIndex([a, b, t]),
    }
}

/// Build the Segre model with all five attribute families.
pub fn build_model() -> Result<SegreModel> {
    let points: Vec<(MultiIndex, GfVector)> =
        MultiIndex::all().map(|m| (m, segre_point(m))).collect();
    let point_set: PointSet = points.iter().map(|(_, p)| *p).collect();
    if point_set.len() != 27 {
        return Err(construction("Segre points are not distinct"));
    }

    let mut generators = Vec::with_capacity(27);
    for r in 1..=3u8 {
        for i in 0..3 {
            for j in 0..3 {
                let pts = [0, 1, 2].map(|t| segre_point(with_position(r, [i, j], t)));
                if pts[0] + pts[1] != pts[2] {
                    return Err(construction(format!(
                        "generator L^{r}_{i}{j} is not a line"
                    )));
                }
                generators.push(Generator {
                    direction: r,
                    fixed: [i, j],
                    points: pts,
                });
            }
        }
    }

    let mut sub_segres = Vec::with_capacity(9);
    for r in 1..=3u8 {
        for i in 0..3u8 {
            let pts: Vec<GfVector> = points
                .iter()
                .filter(|(m, _)| m.0[r as usize - 1] == i)
                .map(|(_, p)| *p)
                .collect();
            let ambient = Flat::span_vectors(pts.iter().copied());
            if ambient.dim() != 3 {
                return Err(construction(format!("Y^{r}_{i} is not a 3-flat")));
            }
            sub_segres.push(SubSegre {
                position: r,
                value: i,
                points: pts,
                ambient,
            });
        }
    }

    let mut z_flats = Vec::with_capacity(27);
    let mut tangents = Vec::with_capacity(27);
    for &(m, p) in &points {
        let [i, j, k] = m.0;
        let through = [
            generator_points(1, [j, k]),
            generator_points(2, [i, k]),
            generator_points(3, [i, j]),
        ];
        let z = Flat::span_vectors(through.iter().flatten().copied());
        if z.dim() != 3 {
            return Err(construction(format!("Z({m}) is not a 3-flat")));
        }
        tangents.push(distinguished_tangent_in(p, &z, &through)?);
        z_flats.push(z);
    }

    Ok(SegreModel {
        points,
        generators,
        sub_segres,
        z_flats,
        tangents,
        point_set,
    })
}

fn generator_points(r: u8, fixed: [u8; 2]) -> [GfVector; 3] {
    [0, 1, 2].map(|t| segre_point(with_position(r, fixed, t)))
}

/// `L(p)` for a Segre point `p`: `p` together with the two points of `Z(p)`
/// lying on none of the three planes spanned by pairs of generators through `p`.
pub fn distinguished_tangent(model: &SegreModel, p: GfVector) -> Result<[GfVector; 3]> {
    let z = model
        .z_flat_of(p)
        .ok_or_else(|| crate::error::domain(format!("{p} is not a Segre point")))?;
    let through: Vec<[GfVector; 3]> = model
        .generators_through(p)
        .iter()
        .map(|g| g.points)
        .collect();
    distinguished_tangent_in(p, z, &through)
}

fn distinguished_tangent_in(
    p: GfVector,
    z: &Flat,
    through: &[[GfVector; 3]],
) -> Result<[GfVector; 3]> {
    if through.len() != 3 {
        return Err(construction(format!(
            "{} generators through {p}",
            through.len()
        )));
    }
    let planes: Vec<Flat> = (0..3)
        .map(|a| {
            let b = (a + 1) % 3;
            Flat::span_vectors(through[a].iter().chain(&through[b]).copied())
        })
        .collect();
    let external: Vec<GfVector> = z
        .points()
        .filter(|&q| planes.iter().all(|pl| !pl.contains(q)))
        .collect();
    if external.len() != 2 {
        return Err(construction(format!(
            "Z({p}) has {} points off the generator planes, expected 2",
            external.len()
        )));
    }
    let (mut a, mut b) = (external[0], external[1]);
    if a + b != p {
        return Err(construction(format!("L({p}) is not collinear")));
    }
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    Ok([p, a, b])
}
