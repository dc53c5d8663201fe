use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::GfVector;
use crate::error::{domain, parse, Result};

/// An 8x8 matrix over GF(2), stored as rows.
///
/// Row `i` is the linear form giving output coordinate `x_{i+1}`, so applying
/// a matrix to a vector takes one parity per row. Products compose right to
/// left: `(A * B).apply(v) == A.apply(B.apply(v))`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GfMatrix {
    rows: [u8; 8],
}

impl GfMatrix {
    pub const IDENTITY: GfMatrix = GfMatrix {
        rows: [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80],
    };
    pub const ZERO: GfMatrix = GfMatrix { rows: [0; 8] };

    pub fn from_rows(rows: [u8; 8]) -> GfMatrix {
        GfMatrix { rows }
    }

    /// Build the matrix sending `e_{j+1}` to `images[j]`.
    pub fn from_images(images: [GfVector; 8]) -> GfMatrix {
        let mut rows = [0u8; 8];
        for (j, img) in images.iter().enumerate() {
            for (i, row) in rows.iter_mut().enumerate() {
                if img.0 >> i & 1 == 1 {
                    *row |= 1 << j;
                }
            }
        }
        GfMatrix { rows }
    }

    /// Permutation matrix with `e_i -> e_{perm[i-1]}` (1-based images).
    pub fn from_permutation(perm: [usize; 8]) -> Result<GfMatrix> {
        let mut seen = 0u16;
        for &p in &perm {
            if !(1..=8).contains(&p) || seen & (1 << p) != 0 {
                return Err(domain(format!("{perm:?} is not a permutation of 1..8")));
            }
            seen |= 1 << p;
        }
        Ok(GfMatrix::from_images(perm.map(GfVector::basis)))
    }

    pub fn rows(&self) -> [u8; 8] {
        self.rows
    }

    /// Image of `e_j`, `j` in `1..=8`.
    pub fn image(&self, j: usize) -> GfVector {
        self.apply(GfVector::basis(j))
    }

    pub fn images(&self) -> [GfVector; 8] {
        std::array::from_fn(|j| self.image(j + 1))
    }

    #[inline]
    pub fn apply(&self, v: GfVector) -> GfVector {
        let mut out = 0u8;
        for (i, row) in self.rows.iter().enumerate() {
            out |= (((row & v.0).count_ones() & 1) as u8) << i;
        }
        GfVector(out)
    }

    pub fn transpose(&self) -> GfMatrix {
        GfMatrix::from_images(self.rows.map(GfVector))
    }

    pub fn add(&self, other: &GfMatrix) -> GfMatrix {
        GfMatrix {
            rows: std::array::from_fn(|i| self.rows[i] ^ other.rows[i]),
        }
    }

    pub fn to_u64(&self) -> u64 {
        u64::from_le_bytes(self.rows)
    }

    pub fn from_u64(bits: u64) -> GfMatrix {
        GfMatrix {
            rows: bits.to_le_bytes(),
        }
    }

    pub fn rank(&self) -> usize {
        super::rank_of(self.rows.map(GfVector))
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == 8
    }

    pub fn inverse(&self) -> Option<GfMatrix> {
        // Gauss-Jordan on [A | I] with rows as bytes.
        let mut a = self.rows;
        let mut inv = GfMatrix::IDENTITY.rows;
        for col in 0..8 {
            let pivot = (col..8).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..8 {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(GfMatrix { rows: inv })
    }

    pub fn pow(&self, mut e: u64) -> GfMatrix {
        let mut base = *self;
        let mut acc = GfMatrix::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` for singular matrices.
    pub fn order(&self) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut x = *self;
        let mut n = 1;
        while x != GfMatrix::IDENTITY {
            x = x * *self;
            n += 1;
        }
        Some(n)
    }

    /// If this is a permutation matrix, the 1-based image of each basis index.
    pub fn as_permutation(&self) -> Option<[usize; 8]> {
        let mut out = [0usize; 8];
        let mut hit = 0u8;
        for (j, slot) in out.iter_mut().enumerate() {
            let img = self.image(j + 1);
            if img.weight() != 1 || hit & img.0 != 0 {
                return None;
            }
            hit |= img.0;
            *slot = img.0.trailing_zeros() as usize + 1;
        }
        Some(out)
    }

    /// Eight space-separated hex pairs, one per row.
    pub fn to_hex_rows(&self) -> String {
        self.rows
            .iter()
            .map(|r| format!("{r:02x}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_hex_rows(text: &str) -> Result<GfMatrix> {
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts.len() != 8 {
            return Err(parse(format!("expected 8 hex rows, got {}", parts.len())));
        }
        let mut rows = [0u8; 8];
        for (row, part) in rows.iter_mut().zip(&parts) {
            *row = GfVector::from_hex(part)?.0;
        }
        Ok(GfMatrix { rows })
    }

    /// Cycle notation of a permutation matrix on basis indices, fixed points omitted,
    /// e.g. `"(12)(34)(56)(78)"`. `None` if this is not a permutation matrix.
    pub fn cycle_notation(&self) -> Option<String> {
        let perm = self.as_permutation()?;
        let mut done = [false; 9];
        let mut out = String::new();
        for start in 1..=8 {
            if done[start] || perm[start - 1] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !done[i] {
                done[i] = true;
                out.push(char::from(b'0' + i as u8));
                i = perm[i - 1];
            }
            out.push(')');
        }
        Some(out)
    }
}

impl Mul for GfMatrix {
    type Output = GfMatrix;
    #[inline]
    fn mul(self, rhs: GfMatrix) -> GfMatrix {
        let mut rows = [0u8; 8];
        for (out, &a) in rows.iter_mut().zip(&self.rows) {
            let mut acc = 0u8;
            let mut bits = a;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                acc ^= rhs.rows[j];
                bits &= bits - 1;
            }
            *out = acc;
        }
        GfMatrix { rows }
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfMatrix[{}]", self.to_hex_rows())
    }
}

impl Serialize for GfMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex_rows())
    }
}

impl<'de> Deserialize<'de> for GfMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GfMatrix::from_hex_rows(&s).map_err(serde::de::Error::custom)
    }
}
