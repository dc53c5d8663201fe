use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{construction, Result};
use crate::gf2::{GfVector, PointSet};
use crate::segre::{build_model, SegreModel};

/// The five `G_S`-orbits, numbered by length 12, 54, 108, 54, 27.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum GsOrbit {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl GsOrbit {
    pub const ALL: [GsOrbit; 5] = [
        GsOrbit::O1,
        GsOrbit::O2,
        GsOrbit::O3,
        GsOrbit::O4,
        GsOrbit::O5,
    ];

    /// 1-based orbit number.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn expected_size(self) -> usize {
        [12, 54, 108, 54, 27][self as usize]
    }
}

impl fmt::Display for GsOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.number())
    }
}

/// Orbit membership derived from the geometry of the Segre variety alone,
/// with no group computation.
///
/// - O5: the Segre points
/// - O2: points of the ambient 3-flats `Y_i^r` off the variety
/// - O4: points of distinguished tangents off the variety
/// - O3: third points of "other bisecants", i.e. lines through two Segre
///   points that share neither a generator nor a sub-variety `σ_i^r`
/// - O1: everything else
#[derive(Clone, Debug)]
pub struct Classifier {
    sets: [PointSet; 5],
}

impl Classifier {
    pub fn new(model: &SegreModel) -> Result<Classifier> {
        let s = model.point_set();
        let mut y_points = PointSet::EMPTY;
        for sub in &model.sub_segres {
            y_points = y_points | sub.ambient.point_set();
        }
        let o2 = y_points.difference(&s);
        let o4 = model.tangent_points().difference(&s).difference(&o2);

        let pts: Vec<GfVector> = model.points.iter().map(|(_, p)| *p).collect();
        let shares_sub = |a: GfVector, b: GfVector| {
            model
                .sub_segres
                .iter()
                .any(|sub| sub.points.contains(&a) && sub.points.contains(&b))
        };
        let mut pairs = 0;
        let mut o3 = PointSet::EMPTY;
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                if shares_sub(a, b) {
                    continue;
                }
                if s.contains(a + b) {
                    return Err(construction(format!("line {a},{b} lies on the variety")));
                }
                pairs += 1;
                o3.insert(a + b);
            }
        }
        if pairs != 108 || o3.len() != 108 {
            return Err(construction(format!(
                "found {pairs} other bisecants with {} distinct external points, expected 108",
                o3.len()
            )));
        }
        let o3 = o3.difference(&o2).difference(&o4);
        let o1 = (s | o2 | o3 | o4).complement();
        Ok(Classifier {
            sets: [o1, o2, o3, o4, s],
        })
    }

    pub fn classify(&self, p: GfVector) -> GsOrbit {
        // test order matters only if the defining sets overlap, which they must not
        for orbit in [GsOrbit::O5, GsOrbit::O2, GsOrbit::O4, GsOrbit::O3] {
            if self.sets[orbit as usize].contains(p) {
                return orbit;
            }
        }
        GsOrbit::O1
    }

    pub fn orbit(&self, o: GsOrbit) -> PointSet {
        self.sets[o as usize]
    }

    /// Union of the listed orbits.
    pub fn union(&self, orbits: &[GsOrbit]) -> PointSet {
        orbits
            .iter()
            .fold(PointSet::EMPTY, |acc, &o| acc | self.sets[o as usize])
    }
}

fn default_classifier() -> &'static Classifier {
    static CLASSIFIER: OnceLock<Classifier> = OnceLock::new();
    CLASSIFIER.get_or_init(|| {
        let model = build_model().expect("Segre model construction");
        Classifier::new(&model).expect("classifier construction")
    })
}

/// Definitional orbit label of a point.
pub fn classify_point(p: GfVector) -> GsOrbit {
    default_classifier().classify(p)
}
