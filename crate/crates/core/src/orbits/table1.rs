use std::fmt;

use serde::Serialize;

use super::{Classifier, GsOrbit, OrbitPartition};
use crate::error::{construction, Result};
use crate::gf2::parse_point;

/// Label of a `G_B`-orbit: the `G_S`-orbit, the common weight of its
/// points, and a prime distinguishing two classes with equal `(orbit, weight)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct GbOrbit {
    pub orbit: GsOrbit,
    pub weight: u8,
    pub primed: bool,
}

impl fmt::Display for GbOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{},{}", self.orbit.number(), self.weight)?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableRow {
    pub label: GbOrbit,
    pub size: usize,
    pub representative: &'static str,
}

const fn row(orbit: GsOrbit, weight: u8, primed: bool, size: usize, rep: &'static str) -> TableRow {
    TableRow {
        label: GbOrbit {
            orbit,
            weight,
            primed,
        },
        size,
        representative: rep,
    }
}

use GsOrbit::{O1, O2, O3, O4, O5};

/// The `G_B`-orbits: label, size and a representative in shorthand.
pub const TABLE1: [TableRow; 21] = [
    row(O1, 5, false, 8, "135u"),
    row(O1, 6, false, 4, "18u"),
    row(O2, 2, false, 12, "13"),
    row(O2, 3, false, 24, "123"),
    row(O2, 4, false, 6, "1278"),
    row(O2, 6, false, 12, "12u"),
    row(O3, 2, false, 4, "18"),
    row(O3, 3, false, 24, "128"),
    row(O3, 4, false, 24, "1238"),
    row(O3, 4, true, 24, "1248"),
    row(O3, 5, false, 24, "123u"),
    row(O3, 7, false, 8, "1u"),
    row(O4, 3, false, 8, "135"),
    row(O4, 4, false, 8, "1246"),
    row(O4, 4, true, 2, "1357"),
    row(O4, 5, false, 24, "178u"),
    row(O4, 6, false, 12, "13u"),
    row(O5, 1, false, 8, "1"),
    row(O5, 2, false, 12, "12"),
    row(O5, 4, false, 6, "1234"),
    row(O5, 8, false, 1, "u"),
];

/// Match each class of the `G_B` point partition to its table row.
///
/// Every row's representative must lie in a class of the listed size whose
/// points all have the listed weight and the listed `G_S`-orbit, and the
/// rows must use each class exactly once. The result is aligned with
/// `partition.classes`.
pub fn gb_orbit_labels(
    partition: &OrbitPartition,
    classifier: &Classifier,
) -> Result<Vec<GbOrbit>> {
    let mut labels: Vec<Option<GbOrbit>> = vec![None; partition.len()];
    for row in &TABLE1 {
        let rep = parse_point(row.representative)?;
        let idx = partition
            .classes
            .iter()
            .position(|c| c.points.contains(rep))
            .ok_or_else(|| construction(format!("{} not covered", row.representative)))?;
        let class = &partition.classes[idx];
        if class.size != row.size {
            return Err(construction(format!(
                "{}: class size {} but table lists {}",
                row.label, class.size, row.size
            )));
        }
        for p in class.points.iter() {
            if p.weight() as u8 != row.label.weight || classifier.classify(p) != row.label.orbit {
                return Err(construction(format!(
                    "{}: point {p} does not fit",
                    row.label
                )));
            }
        }
        if labels[idx].replace(row.label).is_some() {
            return Err(construction(format!(
                "{}: class already labelled",
                row.label
            )));
        }
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| {
                construction(format!(
                    "class of {} has no table row",
                    partition.classes[i].representative
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_elements;
    use crate::orbits::point_orbits;
    use crate::segre::build_model;

    #[test]
    fn table_sizes_sum_to_orbit_sizes() {
        for o in GsOrbit::ALL {
            let total: usize = TABLE1
                .iter()
                .filter(|r| r.label.orbit == o)
                .map(|r| r.size)
                .sum();
            assert_eq!(total, o.expected_size());
        }
    }

    #[test]
    fn gb_partition_matches_table() {
        let cat = named_elements().unwrap();
        let part = point_orbits(&cat.gb());
        assert_eq!(part.len(), TABLE1.len());
        let classifier = Classifier::new(&build_model().unwrap()).unwrap();
        let labels = gb_orbit_labels(&part, &classifier).unwrap();
        assert_eq!(labels.len(), 21);
        assert_eq!(labels.last().unwrap().to_string(), "O5,8");
        // a table that mislabels a class must be rejected
        let coarse = point_orbits(&cat.gs());
        assert!(gb_orbit_labels(&coarse, &classifier).is_err());
    }
}
