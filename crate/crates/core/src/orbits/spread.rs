use serde::Serialize;

use super::DisjointSets;
use crate::error::{construction, domain, Result};
use crate::gf2::{parse_point, Flat, GfMatrix, GfVector, PointSet};

/// A partition of the 255 points into 85 lines. Each line is stored with
/// its points ascending and lines are ordered by their smallest point.
#[derive(Clone, Debug, Serialize)]
pub struct Spread {
    pub lines: Vec<[GfVector; 3]>,
}

impl Spread {
    /// Index of the line through `p`.
    pub fn line_of(&self, p: GfVector) -> Option<usize> {
        self.lines.iter().position(|l| l.contains(&p))
    }

    /// `true` when every line is a line of PG(7,2) and the lines partition
    /// the points.
    pub fn is_spread(&self) -> bool {
        let mut seen = PointSet::EMPTY;
        for &[a, b, c] in &self.lines {
            if a + b != c {
                return false;
            }
            for p in [a, b, c] {
                if seen.contains(p) {
                    return false;
                }
                seen.insert(p);
            }
        }
        seen == PointSet::all()
    }

    /// Index of the image of line `i` under `g`, if it is again a spread line.
    pub fn image_of_line(&self, i: usize, g: &GfMatrix) -> Option<usize> {
        let mut img = self.lines[i].map(|p| g.apply(p));
        img.sort_unstable();
        self.lines.iter().position(|l| *l == img)
    }
}

/// The spread cut out by an element of order 3 acting fixed-point-freely:
/// each point `p` lies on the line `{p, Wp, W²p}`.
pub fn spread_from_w(w: &GfMatrix) -> Result<Spread> {
    if w.pow(3) != GfMatrix::IDENTITY || w == &GfMatrix::IDENTITY {
        return Err(domain("spread generator must have order 3"));
    }
    let mut covered = PointSet::EMPTY;
    let mut lines = Vec::with_capacity(85);
    for p in GfVector::points() {
        if covered.contains(p) {
            continue;
        }
        let mut line = [p, w.apply(p), w.apply(w.apply(p))];
        if line[0] + line[1] != line[2] || line[0] == line[1] {
            return Err(construction(format!("orbit of {p} is not a line")));
        }
        line.sort_unstable();
        for q in line {
            covered.insert(q);
        }
        lines.push(line);
    }
    Ok(Spread { lines })
}

/// Orbits of a group on the lines of a spread, each a list of line indices
/// ascending; orbits are ordered by their first index.
#[derive(Clone, Debug, Serialize)]
pub struct LineOrbits {
    pub orbits: Vec<Vec<usize>>,
}

impl LineOrbits {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Split the spread lines into orbits under `generators`. Fails if some
/// generator does not preserve the spread.
pub fn line_orbit_split(spread: &Spread, generators: &[GfMatrix]) -> Result<LineOrbits> {
    let n = spread.lines.len();
    let mut dsu = DisjointSets::new(n);
    for g in generators {
        for i in 0..n {
            let j = spread
                .image_of_line(i, g)
                .ok_or_else(|| construction(format!("generator does not preserve line {i}")))?;
            dsu.union(i, j);
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        by_root.entry(dsu.find(i)).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = by_root.into_values().collect();
    orbits.sort_by_key(|o| o[0]);
    Ok(LineOrbits { orbits })
}

/// The four spread lines La, Lb, Lc, Ld whose 12 points form O1.
pub fn tetrad_lines() -> [[GfVector; 3]; 4] {
    let line = |a: &str, b: &str, c: &str| {
        let mut l = [a, b, c].map(|s| parse_point(s).expect("valid shorthand"));
        l.sort_unstable();
        l
    };
    [
        line("18u", "357u", "246u"),
        line("27u", "135u", "468u"),
        line("36u", "157u", "248u"),
        line("45u", "137u", "268u"),
    ]
}

/// `U_h`: the 5-flat spanned by the three tetrad lines other than the `h`-th.
pub fn tetrad_span_flats() -> [Flat; 4] {
    let lines = tetrad_lines();
    std::array::from_fn(|h| {
        Flat::span_vectors(
            lines
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != h)
                .flat_map(|(_, l)| l.iter().copied()),
        )
    })
}

/// `U_hk` for `h < k`: the 3-flat spanned by the tetrad lines `h` and `k`,
/// in lexicographic order of `(h, k)`.
pub fn tetrad_pair_flats() -> Vec<((usize, usize), Flat)> {
    let lines = tetrad_lines();
    let mut out = Vec::with_capacity(6);
    for h in 0..4 {
        for k in h + 1..4 {
            let f = Flat::span_vectors(lines[h].iter().chain(&lines[k]).copied());
            out.push(((h, k), f));
        }
    }
    out
}

/// Number of the flats `U_h` containing `p`.
pub fn tetrad_incidence(p: GfVector) -> usize {
    tetrad_span_flats().iter().filter(|f| f.contains(p)).count()
}

/// Lines meeting `set` in exactly two points, each with its points ascending
/// and listed in ascending order.
pub fn bisecants(set: &PointSet) -> Vec<[GfVector; 3]> {
    let pts: Vec<GfVector> = set.iter().collect();
    let mut lines = Vec::new();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if !set.contains(a + b) {
                let mut l = [a, b, a + b];
                l.sort_unstable();
                lines.push(l);
            }
        }
    }
    lines.sort_unstable();
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_elements;
    use crate::orbits::{classify_point, GsOrbit};

    #[test]
    fn w_spread_splits_4_18_36_27() {
        let cat = named_elements().unwrap();
        let spread = spread_from_w(&cat.w()).unwrap();
        assert_eq!(spread.lines.len(), 85);
        assert!(spread.is_spread());
        let split = line_orbit_split(&spread, &cat.gs()).unwrap();
        let mut sizes = split.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 18, 27, 36]);
        let four = split.orbits.iter().find(|o| o.len() == 4).unwrap();
        let mut got: Vec<[GfVector; 3]> = four.iter().map(|&i| spread.lines[i]).collect();
        got.sort_unstable();
        let mut want = tetrad_lines().to_vec();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn tetrad_lines_carry_o1() {
        for l in tetrad_lines() {
            assert_eq!(l[0] + l[1], l[2]);
            for p in l {
                assert_eq!(classify_point(p), GsOrbit::O1);
            }
        }
        for f in tetrad_span_flats() {
            assert_eq!(f.dim(), 5);
        }
        for (_, f) in tetrad_pair_flats() {
            assert_eq!(f.dim(), 3);
        }
    }

    #[test]
    fn o1_bisecants_meet_o2() {
        let o1: PointSet = GfVector::points()
            .filter(|&p| classify_point(p) == GsOrbit::O1)
            .collect();
        let lines = bisecants(&o1);
        assert_eq!(lines.len(), 54);
        for l in lines {
            let third = l.iter().find(|p| !o1.contains(**p)).unwrap();
            assert_eq!(classify_point(*third), GsOrbit::O2);
        }
    }

    #[test]
    fn tetrad_incidence_by_orbit() {
        for p in GfVector::points() {
            let expected = match classify_point(p) {
                GsOrbit::O1 => 3,
                GsOrbit::O2 => 2,
                GsOrbit::O3 => 1,
                GsOrbit::O4 | GsOrbit::O5 => 0,
            };
            assert_eq!(tetrad_incidence(p), expected, "{p}");
        }
    }

    #[test]
    fn non_spread_generator_is_rejected() {
        let cat = named_elements().unwrap();
        let spread = spread_from_w(&cat.w()).unwrap();
        let k = cat.get("K").unwrap();
        assert!(line_orbit_split(&spread, &[k]).is_err());
        assert!(spread_from_w(&GfMatrix::IDENTITY).is_err());
    }
}
