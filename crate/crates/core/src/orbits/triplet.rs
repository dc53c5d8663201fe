use serde::Serialize;

use super::{classify_point, Classifier, GsOrbit};
use crate::error::{construction, domain, Result};
use crate::gf2::{GfVector, PointSet};
use crate::groups::NamedCatalog;
use crate::segre::SegreModel;

/// The variety `S` and its two images `S' = W(S)`, `S'' = W²(S)`.
#[derive(Clone, Debug)]
pub struct SegreTriplet {
    pub s: PointSet,
    pub s1: PointSet,
    pub s2: PointSet,
}

impl SegreTriplet {
    pub fn parts(&self) -> [PointSet; 3] {
        [self.s, self.s1, self.s2]
    }
}

/// Build the triplet. Certifies that the copies are pairwise disjoint, that
/// `S' ∪ S''` is O4, and that every generator of `G_S^0` fixes each copy.
pub fn segre_triplet(model: &SegreModel, catalog: &NamedCatalog) -> Result<SegreTriplet> {
    let w = catalog.w();
    let s = model.point_set();
    let s1 = s.image(&w);
    let s2 = s1.image(&w);
    if !(s.is_disjoint(&s1) && s.is_disjoint(&s2) && s1.is_disjoint(&s2)) {
        return Err(construction("the three Segre copies overlap"));
    }
    if s1 | s2 != Classifier::new(model)?.orbit(GsOrbit::O4) {
        return Err(construction("S' and S'' do not make up O4"));
    }
    for g in catalog.gs0() {
        if [s, s1, s2].iter().any(|part| part.image(&g) != *part) {
            return Err(construction("a generator of G_S^0 moves a Segre copy"));
        }
    }
    Ok(SegreTriplet { s, s1, s2 })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of a point of O4: even when it has more nonzero coordinates in
/// positions `x2, x4, x6, x8` than in `x1, x3, x5, x7`. Points of O4 never
/// tie; a tie is reported as a construction error.
pub fn parity_class(p: GfVector) -> Result<Parity> {
    if classify_point(p) != GsOrbit::O4 {
        return Err(domain(format!("{p} is not a point of O4")));
    }
    let even = (p.0 & 0xaa).count_ones();
    let odd = (p.0 & 0x55).count_ones();
    match even.cmp(&odd) {
        std::cmp::Ordering::Greater => Ok(Parity::Even),
        std::cmp::Ordering::Less => Ok(Parity::Odd),
        std::cmp::Ordering::Equal => Err(construction(format!("{p} in O4 has tied parity"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_elements;
    use crate::segre::build_model;

    #[test]
    fn copies_lie_in_o4_and_are_swapped() {
        let cat = named_elements().unwrap();
        let model = build_model().unwrap();
        let t = segre_triplet(&model, &cat).unwrap();
        assert_eq!(t.s1.len(), 27);
        assert_eq!(t.s2.len(), 27);
        let j = cat.j();
        assert_eq!(t.s1.image(&j), t.s2);
        assert_eq!(t.s2.image(&j), t.s1);
        let w2j = cat.w().pow(2) * j;
        assert_eq!(t.s.image(&w2j), t.s2);
        assert_eq!(t.s2.image(&w2j), t.s);
    }

    #[test]
    fn parity_examples() {
        let p = |s: &str| crate::gf2::parse_point(s).unwrap();
        assert_eq!(parity_class(p("13456")).unwrap(), Parity::Odd);
        assert_eq!(parity_class(p("135")).unwrap(), Parity::Odd);
        assert_eq!(parity_class(p("2468")).unwrap(), Parity::Even);
        assert!(parity_class(p("12")).is_err());
        assert!(parity_class(GfVector::ZERO).is_err());
    }
}
