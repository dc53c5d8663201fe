use std::collections::{HashSet, VecDeque};

use super::StabilizerChain;
use crate::error::{Error, Result};
use crate::gf2::{GfMatrix, GfVector};

/// Default element cap for explicit closure.
pub const DEFAULT_CAP: usize = 1 << 21;

/// A finite subgroup of GL(8,2), given by generators and optionally by its
/// full element list and/or a stabilizer chain.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub generators: Vec<GfMatrix>,
    pub elements: Option<Vec<GfMatrix>>,
    pub chain: Option<StabilizerChain>,
}

impl MatrixGroup {
    pub fn from_generators(generators: Vec<GfMatrix>) -> MatrixGroup {
        MatrixGroup {
            generators,
            elements: None,
            chain: None,
        }
    }

    pub fn order(&self) -> Option<u128> {
        if let Some(e) = &self.elements {
            return Some(e.len() as u128);
        }
        self.chain.as_ref().map(|c| c.order())
    }

    pub fn elements(&self) -> Option<&[GfMatrix]> {
        self.elements.as_deref()
    }

    pub fn contains(&self, g: &GfMatrix) -> Option<bool> {
        if let Some(e) = &self.elements {
            return Some(e.contains(g));
        }
        self.chain.as_ref().map(|c| c.contains(g))
    }

    /// Whether every element (or every generator, when elements are unknown) fixes `p`.
    pub fn fixes(&self, p: GfVector) -> bool {
        let items = self.elements.as_deref().unwrap_or(&self.generators);
        items.iter().all(|g| g.apply(p) == p)
    }

    /// Checks the group axioms on the explicit element list.
    pub fn is_closed(&self) -> bool {
        let Some(elements) = &self.elements else {
            return false;
        };
        let set: HashSet<&GfMatrix> = elements.iter().collect();
        set.contains(&GfMatrix::IDENTITY)
            && elements
                .iter()
                .all(|a| a.inverse().is_some_and(|i| set.contains(&i)))
            && elements
                .iter()
                .all(|a| elements.iter().all(|b| set.contains(&(*a * *b))))
    }
}

/// Breadth-first closure of `generators` under left multiplication.
///
/// Elements are listed in discovery order starting from the identity, with
/// generators applied in ascending matrix order. Fails with
/// [`Error::Overflow`] once more than `cap` elements are found.
pub fn closure(generators: &[GfMatrix], cap: usize) -> Result<MatrixGroup> {
    let mut gens: Vec<GfMatrix> = generators.to_vec();
    if let Some(bad) = gens.iter().find(|g| !g.is_invertible()) {
        return Err(crate::error::domain(format!("singular generator {bad:?}")));
    }
    gens.sort_unstable();
    gens.dedup();
    let mut seen: HashSet<GfMatrix> = HashSet::from([GfMatrix::IDENTITY]);
    let mut elements = vec![GfMatrix::IDENTITY];
    let mut queue = VecDeque::from([GfMatrix::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = *g * x;
            if seen.insert(y) {
                if elements.len() == cap {
                    return Err(Error::Overflow { cap });
                }
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    Ok(MatrixGroup {
        generators: generators.to_vec(),
        elements: Some(elements),
        chain: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_elements;

    #[test]
    fn closure_sizes() {
        let cat = named_elements().unwrap();
        let gs = closure(&cat.gs(), DEFAULT_CAP).unwrap();
        assert_eq!(gs.order(), Some(1296));
        assert_eq!(closure(&cat.gs0(), DEFAULT_CAP).unwrap().order(), Some(648));
        assert_eq!(closure(&cat.gb(), DEFAULT_CAP).unwrap().order(), Some(48));
        assert!(closure(&cat.gb(), DEFAULT_CAP).unwrap().is_closed());
    }

    #[test]
    fn closure_is_deterministic() {
        let cat = named_elements().unwrap();
        let a = closure(&cat.gs(), DEFAULT_CAP).unwrap();
        let b = closure(&[cat.n(), cat.m()], DEFAULT_CAP).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn cap_overflow() {
        let cat = named_elements().unwrap();
        assert_eq!(
            closure(&cat.gs(), 100).unwrap_err(),
            Error::Overflow { cap: 100 }
        );
        assert!(closure(&[GfMatrix::ZERO], 10).is_err());
    }
}
