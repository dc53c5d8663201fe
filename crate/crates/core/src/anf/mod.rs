//! Reduced polynomials in `x1..x8` over GF(2) and the correspondence between
//! point-sets of PG(7,2) and their equations.
//!
//! A polynomial is a set of monomials; monomial `x_{i1}..x_{ik}` is the 8-bit
//! mask with bits `i1-1..ik-1` set, and bit `T` of the coefficient mask holds
//! the coefficient of monomial `T`. The empty monomial is the constant 1.

mod flats;
mod invariants;
mod named;
mod symplectic;

pub use flats::{degree_by_incidence, flat_equation, IncidenceDegree};
pub use invariants::{invariant_polynomials, invariant_subspace, monomial_orbit_poly};
pub use named::{
    named_p_basis, named_q, seven_table, NamedPolynomial, PolyCatalog, SevenRow, SEVEN_TABLE,
};
pub use symplectic::{certify_symplectic, gram_matrix, symplectic_form};

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, parse, Result};
use crate::gf2::{Bits256, GfMatrix, GfVector, PointSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Anf(pub Bits256);

impl Anf {
    pub const ZERO: Anf = Anf(Bits256::EMPTY);

    pub fn one() -> Anf {
        Anf::monomial(0)
    }

    pub fn monomial(mask: u8) -> Anf {
        let mut b = Bits256::EMPTY;
        b.set(mask as usize, true);
        Anf(b)
    }

    /// The coordinate `x_i`, 1-based.
    pub fn var(i: usize) -> Anf {
        Anf::monomial(GfVector::basis(i).0)
    }

    /// The linear form `f . x`.
    pub fn linear(form: GfVector) -> Anf {
        form.support().map(Anf::var).fold(Anf::ZERO, |a, b| a + b)
    }

    /// Sum of the given monomials; repeated monomials cancel.
    pub fn from_monomials(monomials: impl IntoIterator<Item = u8>) -> Anf {
        let mut b = Bits256::EMPTY;
        for m in monomials {
            b.flip(m as usize);
        }
        Anf(b)
    }

    pub fn coeffs(&self) -> Bits256 {
        self.0
    }

    pub fn contains_monomial(&self, mask: u8) -> bool {
        self.0.get(mask as usize)
    }

    /// Monomials sorted by size, then lexicographically by index list.
    pub fn monomials(&self) -> Vec<u8> {
        let mut out: Vec<u8> = self.0.ones().map(|m| m as u8).collect();
        out.sort_by_key(|&m| monomial_key(m));
        out
    }

    pub fn term_count(&self) -> usize {
        self.0.count() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest monomial size; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.0
            .ones()
            .map(|m| (m as u8).count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn constant_term(&self) -> bool {
        self.0.get(0)
    }

    pub fn evaluate(&self, x: GfVector) -> bool {
        self.0.ones().filter(|&m| m as u8 & !x.0 == 0).count() % 2 == 1
    }

    /// Bit `x` holds the value at `x`.
    pub fn truth_table(&self) -> Bits256 {
        mobius(self.0)
    }

    /// The unique reduced polynomial with the given value table.
    pub fn from_truth_table(values: Bits256) -> Anf {
        Anf(mobius(values))
    }

    /// Product of `self` by `x_i`: each monomial `T` becomes `T ∪ {i}`.
    pub fn mul_var(&self, i: usize) -> Anf {
        let bit = GfVector::basis(i).0;
        Anf::from_monomials(self.0.ones().map(|m| m as u8 | bit))
    }

    /// Nonzero points where the polynomial vanishes.
    pub fn zero_set(&self) -> PointSet {
        PointSet::from_bits(!self.truth_table()) & PointSet::all()
    }

    pub fn to_hex(&self) -> String {
        self.0.to_hex()
    }

    pub fn from_hex(text: &str) -> Result<Anf> {
        Bits256::from_hex(text)
            .map(Anf)
            .ok_or_else(|| parse(format!("expected 64 hex digits, got {text:?}")))
    }

    /// Monomials as strings in canonical order.
    pub fn to_monomial_strings(&self) -> Vec<String> {
        self.monomials().into_iter().map(monomial_string).collect()
    }

    pub fn from_monomial_strings<S: AsRef<str>>(terms: &[S]) -> Result<Anf> {
        let masks = terms
            .iter()
            .map(|t| parse_monomial(t.as_ref()))
            .collect::<Result<Vec<u8>>>()?;
        Ok(Anf::from_monomials(masks))
    }

    /// Parse `"18 + 27 + 36"`, `"const + 1"` or `"0"`.
    pub fn parse(text: &str) -> Result<Anf> {
        let text = text.trim();
        if text == "0" {
            return Ok(Anf::ZERO);
        }
        let terms: Vec<&str> = text.split('+').map(str::trim).collect();
        Anf::from_monomial_strings(&terms)
    }
}

/// Binary Möbius transform; it is its own inverse.
fn mobius(mut b: Bits256) -> Bits256 {
    let mut a = [false; 256];
    for (x, slot) in a.iter_mut().enumerate() {
        *slot = b.get(x);
    }
    for i in 0..8 {
        let bit = 1 << i;
        for x in 0..256 {
            if x & bit != 0 {
                a[x] ^= a[x ^ bit];
            }
        }
    }
    for (x, &v) in a.iter().enumerate() {
        b.set(x, v);
    }
    b
}

pub(crate) fn monomial_key(m: u8) -> (u32, Vec<usize>) {
    (m.count_ones(), GfVector(m).support().collect())
}

/// `"18"` for `x1 x8`, `"const"` for the constant monomial.
pub fn monomial_string(m: u8) -> String {
    if m == 0 {
        return "const".to_owned();
    }
    GfVector(m)
        .support()
        .map(|i| char::from(b'0' + i as u8))
        .collect()
}

pub fn parse_monomial(text: &str) -> Result<u8> {
    if text == "const" {
        return Ok(0);
    }
    let mut mask = 0u8;
    if text.is_empty() {
        return Err(parse("empty monomial"));
    }
    for c in text.chars() {
        let d = c
            .to_digit(10)
            .filter(|d| (1..=8).contains(d))
            .ok_or_else(|| parse(format!("bad variable {c:?} in monomial {text:?}")))?;
        let bit = 1u8 << (d - 1);
        if mask & bit != 0 {
            return Err(parse(format!("repeated variable {d} in monomial {text:?}")));
        }
        mask |= bit;
    }
    Ok(mask)
}

// Addition over GF(2) is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Anf {
    type Output = Anf;
    fn add(self, rhs: Anf) -> Anf {
        Anf(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Anf {
    fn add_assign(&mut self, rhs: Anf) {
        self.0 ^= rhs.0;
    }
}

/// Reduced product: monomials multiply by union.
// Monomials multiply by union of their variable sets.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Anf {
    type Output = Anf;
    fn mul(self, rhs: Anf) -> Anf {
        let mut out = Bits256::EMPTY;
        let right: Vec<usize> = rhs.0.ones().collect();
        for a in self.0.ones() {
            for &b in &right {
                out.flip(a | b);
            }
        }
        Anf(out)
    }
}

impl std::iter::Sum for Anf {
    fn sum<I: Iterator<Item = Anf>>(iter: I) -> Anf {
        iter.fold(Anf::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.monomials().into_iter().map(monomial_string).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Anf({self})")
    }
}

impl Serialize for Anf {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_monomial_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Anf {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Anf, D::Error> {
        let terms = Vec::<String>::deserialize(d)?;
        Anf::from_monomial_strings(&terms).map_err(serde::de::Error::custom)
    }
}

/// The equation of `psi`: zero at the origin and on `psi`, one elsewhere.
pub fn anf_from_pointset(psi: &PointSet) -> Anf {
    let values = !psi.bits() & PointSet::all().bits();
    Anf::from_truth_table(values)
}

/// Zero set of `f` among the 255 points.
pub fn pointset_of(f: &Anf) -> PointSet {
    f.zero_set()
}

/// The polynomial `x -> f(Ax)`, built by substituting for each `x_i` the
/// linear form of row `i` of `A` and reducing.
pub fn substitute(f: &Anf, a: &GfMatrix) -> Result<Anf> {
    let table = substitution_table(a)?;
    let g: Anf = f.0.ones().map(|m| table[m]).sum();
    if g.degree() > f.degree() {
        return Err(crate::error::construction("substitution raised the degree"));
    }
    Ok(g)
}

/// Entry `T` is the image of monomial `T` under `x -> Ax`: the product of the
/// row linear forms over `i` in `T`.
pub(crate) fn substitution_table(a: &GfMatrix) -> Result<Vec<Anf>> {
    if !a.is_invertible() {
        return Err(domain("substitution matrix is singular"));
    }
    let rows = a.rows();
    let mut table = vec![Anf::ZERO; 256];
    table[0] = Anf::one();
    for t in 1..256usize {
        let top = 7 - (t as u8).leading_zeros() as usize;
        let rest = table[t & !(1 << top)];
        table[t] = GfVector(rows[top]).support().map(|j| rest.mul_var(j)).sum();
    }
    Ok(table)
}
