//! Deterministic Schreier-Sims for matrix groups acting on the 255 points.
//!
//! Group elements stay as 8x8 matrices (eight bytes each), so transversal
//! entries and strong generators are cheap to store and compose. Base points
//! are chosen as the smallest point (by integer mask) moved by the element
//! that forces a new level.

use crate::gf2::{GfMatrix, GfVector};

#[derive(Clone, Debug)]
struct Level {
    base: GfVector,
    gens: Vec<GfMatrix>,
    /// `transversal[p] = (u, u^-1)` with `u(base) = p`, for `p` in the basic orbit.
    transversal: Vec<Option<(GfMatrix, GfMatrix)>>,
    orbit: Vec<GfVector>,
}

impl Level {
    fn new(base: GfVector) -> Level {
        let mut level = Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; 256],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base.0 as usize] = Some((GfMatrix::IDENTITY, GfMatrix::IDENTITY));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            let (ux, _) = self.transversal[x.0 as usize].unwrap();
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y.0 as usize].is_none() {
                    let u = *g * ux;
                    let inv = u.inverse().expect("group elements are invertible");
                    self.transversal[y.0 as usize] = Some((u, inv));
                    self.orbit.push(y);
                }
            }
            k += 1;
        }
    }
}

/// A base and strong generating set with per-level transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    levels: Vec<Level>,
}

fn smallest_moved(g: &GfMatrix) -> Option<GfVector> {
    GfVector::points().find(|&p| g.apply(p) != p)
}

impl StabilizerChain {
    /// Build the chain for the group generated by `generators`.
    pub fn build(generators: &[GfMatrix]) -> StabilizerChain {
        let gens: Vec<GfMatrix> = generators
            .iter()
            .copied()
            .filter(|g| *g != GfMatrix::IDENTITY)
            .collect();
        let mut chain = StabilizerChain { levels: Vec::new() };
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = smallest_moved(g).expect("non-identity matrix moves a point");
                chain.levels.push(Level::new(b));
            }
        }
        // level i holds the generators fixing base[0..i]
        for g in &gens {
            for i in 0..chain.levels.len() {
                if (0..i).all(|l| g.apply(chain.levels[l].base) == chain.levels[l].base) {
                    chain.levels[i].gens.push(*g);
                }
            }
        }
        for level in &mut chain.levels {
            level.rebuild_orbit();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = self.levels[li].orbit.clone();
            let gens = self.levels[li].gens.clone();
            for &beta in &orbit {
                let (u_beta, _) = self.levels[li].transversal[beta.0 as usize].unwrap();
                for g in &gens {
                    let gb = g.apply(beta);
                    let (_, u_gb_inv) = self.levels[li].transversal[gb.0 as usize].unwrap();
                    let schreier = u_gb_inv * *g * u_beta;
                    if schreier == GfMatrix::IDENTITY {
                        continue;
                    }
                    let (h, j) = self.sift(schreier, li + 1);
                    if j < self.levels.len() || h != GfMatrix::IDENTITY {
                        if j == self.levels.len() {
                            let b = smallest_moved(&h).expect("non-identity residue moves a point");
                            self.levels.push(Level::new(b));
                        }
                        for l in (li + 1)..=j {
                            self.levels[l].gens.push(h);
                            self.levels[l].rebuild_orbit();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Strip `g` through the levels starting at `from`. Returns the residue and
    /// the index of the level where stripping stopped (`len` if it passed all).
    fn sift(&self, mut g: GfMatrix, from: usize) -> (GfMatrix, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match level.transversal[b.0 as usize] {
                Some((_, u_inv)) => g = u_inv * g,
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<GfVector> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators at each level.
    pub fn strong_generators(&self) -> Vec<&[GfMatrix]> {
        self.levels.iter().map(|l| l.gens.as_slice()).collect()
    }

    pub fn contains(&self, g: &GfMatrix) -> bool {
        let (h, j) = self.sift(*g, 0);
        j == self.levels.len() && h == GfMatrix::IDENTITY
    }

    /// Every strong generator at level `i` fixes the base points before `i`.
    pub fn strong_generators_fix_prefix(&self) -> bool {
        self.levels.iter().enumerate().all(|(i, level)| {
            level
                .gens
                .iter()
                .all(|g| self.levels[..i].iter().all(|l| g.apply(l.base) == l.base))
        })
    }
}

/// Order of the group generated by `generators`.
pub fn schreier_sims(generators: &[GfMatrix]) -> u128 {
    StabilizerChain::build(generators).order()
}
