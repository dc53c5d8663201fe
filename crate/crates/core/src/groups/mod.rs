//! Matrix groups acting on PG(7,2).
//!
//! `G_S` (the Segre stabilizer, order 1296) and its subgroups are generated
//! from named elements built as tensor products of GL(2,2) elements and as
//! position permutations of the three tensor factors. Explicit groups are
//! closed by breadth-first search; larger ones (the orthogonal groups of the
//! invariant quadric) go through a Schreier-Sims stabilizer chain.

mod closure;
mod commutant;
mod named;
mod schreier_sims;

pub use closure::{closure, MatrixGroup, DEFAULT_CAP};
pub use commutant::{centralizer_in_gl, commutant_basis, fix_subspace, stabilizer_of_point};
pub use named::{named_elements, NamedCatalog, NamedElement};
pub use schreier_sims::{schreier_sims, StabilizerChain};

use crate::error::{domain, Result};
use crate::gf2::{GfMatrix, GfVector};
use crate::segre::{basis_bits, basis_number};

/// An element of GL(2,2) acting on the projective line `{u_0, u_1, u_2}`.
///
/// `images[t]` is the image of `u_t` as a two-bit mask over `(u_0, u_1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gl2 {
    pub images: [u8; 2],
}

impl Gl2 {
    pub const IDENTITY: Gl2 = Gl2 {
        images: [0b01, 0b10],
    };
    /// `u_0 <-> u_1`.
    pub const SWAP: Gl2 = Gl2 {
        images: [0b10, 0b01],
    };
    /// The 3-cycle `u_0 -> u_1 -> u_2 -> u_0`.
    pub const CYCLE: Gl2 = Gl2 {
        images: [0b10, 0b11],
    };

    pub fn new(images: [u8; 2]) -> Gl2 {
        Gl2 { images }
    }

    pub fn is_invertible(&self) -> bool {
        let [a, b] = self.images;
        a & 3 != 0 && b & 3 != 0 && a & 3 != b & 3
    }

    /// The six invertible 2x2 matrices.
    pub fn all() -> Vec<Gl2> {
        let mut out = Vec::new();
        for a in 1..4u8 {
            for b in 1..4u8 {
                if a != b {
                    out.push(Gl2 { images: [a, b] });
                }
            }
        }
        out
    }

    fn apply(&self, v: u8) -> u8 {
        let mut out = 0;
        if v & 1 != 0 {
            out ^= self.images[0];
        }
        if v & 2 != 0 {
            out ^= self.images[1];
        }
        out
    }

    /// Whether this is one of the three involutions of GL(2,2), i.e. outside
    /// the index-2 subgroup of order 3.
    pub fn is_involution(&self) -> bool {
        *self != Gl2::IDENTITY && self.apply(self.images[0]) == 1 && self.apply(self.images[1]) == 2
    }
}

/// Matrix of `a0 ⊗ a1 ⊗ a2` in the basis `e1..e8`.
pub fn tensor_operator(a0: Gl2, a1: Gl2, a2: Gl2) -> Result<GfMatrix> {
    let factors = [a0, a1, a2];
    if let Some(bad) = factors.iter().find(|a| !a.is_invertible()) {
        return Err(domain(format!("singular GL(2,2) factor {bad:?}")));
    }
    let images = std::array::from_fn(|n| {
        let bits = basis_bits(n + 1);
        let parts: [u8; 3] = std::array::from_fn(|r| factors[r].apply(1 << bits[r]));
        let mut v = GfVector::ZERO;
        for a in 0..2u8 {
            for b in 0..2u8 {
                for c in 0..2u8 {
                    if parts[0] >> a & 1 == 1 && parts[1] >> b & 1 == 1 && parts[2] >> c & 1 == 1 {
                        v += GfVector::basis(basis_number([a, b, c]));
                    }
                }
            }
        }
        v
    });
    Ok(GfMatrix::from_images(images))
}

/// Matrix of the factor permutation induced by `rho`, given as the 1-based
/// images `[rho(1), rho(2), rho(3)]`: the factor in position `q` moves to
/// position `rho(q)`.
pub fn sym3_operator(rho: [usize; 3]) -> Result<GfMatrix> {
    let mut seen = [false; 4];
    for &r in &rho {
        if !(1..=3).contains(&r) || seen[r] {
            return Err(domain(format!("{rho:?} is not a permutation of 1..3")));
        }
        seen[r] = true;
    }
    let images = std::array::from_fn(|n| {
        let bits = basis_bits(n + 1);
        let mut out = [0u8; 3];
        for q in 0..3 {
            out[rho[q] - 1] = bits[q];
        }
        GfVector::basis(basis_number(out))
    });
    Ok(GfMatrix::from_images(images))
}

impl GfMatrix {
    /// Permutation matrix from cycle notation on basis indices, e.g. `"(1234)(8765)"`.
    pub fn from_cycles(text: &str) -> Result<GfMatrix> {
        let mut perm: [usize; 8] = std::array::from_fn(|i| i + 1);
        let mut seen = [false; 9];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| crate::error::parse(format!("bad cycle notation {text:?}")))?;
            let cycle: Vec<usize> = inner
                .0
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| crate::error::parse(format!("bad cycle {:?}", inner.0)))?;
            for (k, &i) in cycle.iter().enumerate() {
                if !(1..=8).contains(&i) || seen[i] {
                    return Err(crate::error::parse(format!(
                        "bad cycle entry {i} in {text:?}"
                    )));
                }
                seen[i] = true;
                perm[i - 1] = cycle[(k + 1) % cycle.len()];
            }
            rest = inner.1.trim_start();
        }
        GfMatrix::from_permutation(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::parse_point;

    #[test]
    fn gl2_has_six_elements_three_involutions() {
        let all = Gl2::all();
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|a| a.is_involution()).count(), 3);
        assert!(Gl2::SWAP.is_involution());
        assert!(!Gl2::CYCLE.is_involution());
        assert!(!Gl2::IDENTITY.is_involution());
    }

    #[test]
    fn tensor_examples() {
        let jx = tensor_operator(Gl2::SWAP, Gl2::IDENTITY, Gl2::IDENTITY).unwrap();
        assert_eq!(jx, GfMatrix::from_cycles("(12)(34)(56)(78)").unwrap());
        let ax = tensor_operator(Gl2::CYCLE, Gl2::IDENTITY, Gl2::IDENTITY).unwrap();
        let e = |s: &str| parse_point(s).unwrap();
        assert_eq!(ax.apply(e("1")), e("2"));
        assert_eq!(ax.apply(e("2")), e("12"));
        assert_eq!(
            tensor_operator(Gl2::IDENTITY, Gl2::IDENTITY, Gl2::IDENTITY).unwrap(),
            GfMatrix::IDENTITY
        );
        assert!(tensor_operator(Gl2::new([1, 1]), Gl2::IDENTITY, Gl2::IDENTITY).is_err());
    }

    #[test]
    fn sym3_examples() {
        assert_eq!(
            sym3_operator([2, 1, 3]).unwrap(),
            GfMatrix::from_cycles("(24)(57)").unwrap()
        );
        assert_eq!(
            sym3_operator([2, 3, 1]).unwrap(),
            GfMatrix::from_cycles("(375)(246)").unwrap()
        );
        assert_eq!(sym3_operator([1, 2, 3]).unwrap(), GfMatrix::IDENTITY);
        assert!(sym3_operator([1, 1, 3]).is_err());
    }

    #[test]
    fn cycle_parsing() {
        let c = GfMatrix::from_cycles("(1234)(8765)").unwrap();
        assert_eq!(c.order(), Some(4));
        assert_eq!(c.cycle_notation().unwrap(), "(1234)(5876)");
        assert!(GfMatrix::from_cycles("(11)").is_err());
        assert!(GfMatrix::from_cycles("(12").is_err());
        assert_eq!(GfMatrix::from_cycles("").unwrap(), GfMatrix::IDENTITY);
    }
}
