use serde::Serialize;

use super::Anf;
use crate::error::{construction, domain, Result};
use crate::gf2::{flats_of_dimension, Flat, PointSet};

/// `P_X = 1 + Π(1 + f_i)` over a basis `f_i` of the forms vanishing on `X`.
/// Vanishes exactly on the points of `X` and has degree `codim X`.
pub fn flat_equation(x: &Flat) -> Result<Anf> {
    if x.codim() == 0 {
        return Err(domain("the whole space has no proper equation"));
    }
    let product = x
        .dual_forms()
        .into_iter()
        .fold(Anf::one(), |acc, f| acc * (Anf::one() + Anf::linear(f)));
    let p = Anf::one() + product;
    if p.degree() as usize != x.codim() {
        return Err(construction(format!(
            "flat equation has degree {} but codimension is {}",
            p.degree(),
            x.codim()
        )));
    }
    Ok(p)
}

/// Degree of a point-set read off from flat incidences.
#[derive(Clone, Debug, Serialize)]
pub struct IncidenceDegree {
    /// Least `d` such that every `d`-flat meets the set in an odd number of points.
    pub degree: u32,
    /// A `(d-1)`-flat meeting the set evenly; the empty flat when `d = 0`.
    pub witness: Flat,
    pub witness_meet: usize,
}

/// For `|psi|` odd, the degree of its equation is the least `d` for which
/// every `d`-flat is `psi`-odd, and some `(d-1)`-flat is then `psi`-even.
pub fn degree_by_incidence(psi: &PointSet) -> Result<IncidenceDegree> {
    if psi.len().is_multiple_of(2) {
        return Err(domain(format!(
            "incidence degree needs an odd point-set, got {} points",
            psi.len()
        )));
    }
    let mut witness = Flat::empty();
    let mut witness_meet = 0;
    for d in 0..=7usize {
        let even = flats_of_dimension(d)?.find_map(|f| {
            let m = f.meet_count(psi);
            (m % 2 == 0).then_some((f, m))
        });
        match even {
            Some((f, m)) => {
                witness = f;
                witness_meet = m;
            }
            None => {
                return Ok(IncidenceDegree {
                    degree: d as u32,
                    witness,
                    witness_meet,
                })
            }
        }
    }
    // the whole space meets an odd set oddly, so the loop always returns
    Err(construction("no dimension has only odd flats"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::anf_from_pointset;
    use crate::gf2::{parse_point, GfVector};

    fn flat(pts: &[&str]) -> Flat {
        Flat::span(
            &pts.iter()
                .map(|s| parse_point(s).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn flat_equations_vanish_on_the_flat() {
        for (x, deg) in [
            (flat(&["2", "3", "4", "5", "6", "7", "8"]), 1),
            (flat(&["1", "2"]), 6),
            (flat(&["1", "2", "7", "8"]), 4),
            (flat(&["13"]), 7),
        ] {
            let p = flat_equation(&x).unwrap();
            assert_eq!(p.degree(), deg);
            assert_eq!(p.zero_set(), x.point_set());
            assert!(!p.constant_term());
        }
        assert_eq!(
            flat_equation(&flat(&["2", "3", "4", "5", "6", "7", "8"])).unwrap(),
            Anf::var(1)
        );
        assert!(flat_equation(&Flat::whole_space()).is_err());
    }

    #[test]
    fn single_point_has_degree_seven() {
        let psi: PointSet = [GfVector(0x05)].into_iter().collect();
        let d = degree_by_incidence(&psi).unwrap();
        assert_eq!(d.degree, 7);
        assert_eq!(d.witness.dim(), 6);
        assert_eq!(d.witness_meet % 2, 0);
        assert_eq!(anf_from_pointset(&psi).degree(), 7);
    }

    #[test]
    fn even_sets_are_rejected() {
        let psi: PointSet = [GfVector(1), GfVector(2)].into_iter().collect();
        assert!(degree_by_incidence(&psi).is_err());
    }

    #[test]
    fn whole_space_has_degree_zero() {
        let d = degree_by_incidence(&PointSet::all()).unwrap();
        assert_eq!(d.degree, 0);
        assert!(d.witness.is_empty());
    }
}
