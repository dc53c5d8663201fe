use std::ops::{BitAnd, BitOr, BitXor, BitXorAssign, Not};

/// A 256-bit set indexed by a byte. Backs point sets, polynomial
/// coefficient masks and the rows of the wide GF(2) solver.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Bits256(pub [u64; 4]);

impl Bits256 {
    pub const EMPTY: Bits256 = Bits256([0; 4]);
    pub const FULL: Bits256 = Bits256([u64::MAX; 4]);

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let w = &mut self.0[i >> 6];
        if value {
            *w |= 1 << (i & 63);
        } else {
            *w &= !(1 << (i & 63));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.0[i >> 6] ^= 1 << (i & 63);
    }

    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Set bit positions in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Lowest set bit.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    /// 64 hex characters, most significant bit first.
    pub fn to_hex(&self) -> String {
        self.0.iter().rev().map(|w| format!("{w:016x}")).collect()
    }

    pub fn from_hex(text: &str) -> Option<Bits256> {
        if text.len() != 64 || !text.is_ascii() {
            return None;
        }
        let mut out = [0u64; 4];
        for (k, chunk) in text.as_bytes().chunks(16).enumerate() {
            let s = std::str::from_utf8(chunk).ok()?;
            out[3 - k] = u64::from_str_radix(s, 16).ok()?;
        }
        Some(Bits256(out))
    }
}

impl BitXor for Bits256 {
    type Output = Bits256;
    fn bitxor(self, rhs: Bits256) -> Bits256 {
        Bits256(std::array::from_fn(|k| self.0[k] ^ rhs.0[k]))
    }
}

impl BitXorAssign for Bits256 {
    fn bitxor_assign(&mut self, rhs: Bits256) {
        for k in 0..4 {
            self.0[k] ^= rhs.0[k];
        }
    }
}

impl BitAnd for Bits256 {
    type Output = Bits256;
    fn bitand(self, rhs: Bits256) -> Bits256 {
        Bits256(std::array::from_fn(|k| self.0[k] & rhs.0[k]))
    }
}

impl BitOr for Bits256 {
    type Output = Bits256;
    fn bitor(self, rhs: Bits256) -> Bits256 {
        Bits256(std::array::from_fn(|k| self.0[k] | rhs.0[k]))
    }
}

impl Not for Bits256 {
    type Output = Bits256;
    fn not(self) -> Bits256 {
        Bits256(self.0.map(|w| !w))
    }
}

/// Row-reduce `rows` over GF(2) restricted to the first `ncols` columns and
/// return a basis of the right null space `{c : row . c = 0 for every row}`.
///
/// Basis vectors come one per free column, in ascending free-column order.
pub fn null_space(rows: &[Bits256], ncols: usize) -> Vec<Bits256> {
    let (reduced, pivots) = reduce(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = Bits256::EMPTY;
        v.set(free, true);
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of `rows` over GF(2) on the first `ncols` columns.
pub fn rank(rows: &[Bits256], ncols: usize) -> usize {
    reduce(rows, ncols).1.len()
}

/// Reduced row echelon form: returns nonzero rows and their pivot columns.
fn reduce(rows: &[Bits256], ncols: usize) -> (Vec<Bits256>, Vec<usize>) {
    let mut m: Vec<Bits256> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..m.len()).find(|&i| m[i].get(col)) else {
            continue;
        };
        m.swap(r, found);
        let pivot_row = m[r];
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(col) {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_roundtrip_and_order() {
        let mut b = Bits256::EMPTY;
        b.set(0, true);
        b.set(255, true);
        let hex = b.to_hex();
        assert!(hex.starts_with('8') && hex.ends_with('1'));
        assert_eq!(Bits256::from_hex(&hex), Some(b));
        assert_eq!(Bits256::from_hex("zz"), None);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 255]);
        assert_eq!(b.first(), Some(0));
    }

    #[test]
    fn null_space_of_small_system() {
        // x0 + x1 = 0, x2 = 0 over 4 unknowns: null space {x0=x1, x2=0, x3 free}.
        let mut r1 = Bits256::EMPTY;
        r1.set(0, true);
        r1.set(1, true);
        let mut r2 = Bits256::EMPTY;
        r2.set(2, true);
        let ns = null_space(&[r1, r2], 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(v.get(0), v.get(1));
            assert!(!v.get(2));
        }
        assert_eq!(rank(&[r1, r2, r1 ^ r2], 4), 2);
    }
}
