use std::fmt;

use serde::Serialize;

use super::{null_space, Bits256, GfVector, PointSet};
use crate::error::{domain, Result};

/// A projective subspace of PG(7,2), stored as the reduced row echelon basis
/// of its underlying vector subspace.
///
/// Each basis vector's highest set bit is its pivot; no other basis vector has
/// that bit. Vectors are sorted by descending pivot, so two flats are equal
/// exactly when their bases are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Flat {
    basis: Vec<GfVector>,
}

impl Flat {
    /// The flat spanned by nothing (only the zero vector).
    pub fn empty() -> Flat {
        Flat { basis: Vec::new() }
    }

    pub fn whole_space() -> Flat {
        Flat {
            basis: (1..=8).rev().map(GfVector::basis).collect(),
        }
    }

    /// Flat generated by `points`.
    pub fn span(points: &[GfVector]) -> Result<Flat> {
        if points.is_empty() {
            return Err(domain("span of an empty point list"));
        }
        if points.iter().any(|p| p.is_zero()) {
            return Err(domain("the zero vector is not a projective point"));
        }
        Ok(Flat::span_vectors(points.iter().copied()))
    }

    /// Span of arbitrary vectors; zero vectors are ignored.
    pub fn span_vectors(vectors: impl IntoIterator<Item = GfVector>) -> Flat {
        let mut flat = Flat::empty();
        for v in vectors {
            flat.absorb(v);
        }
        flat
    }

    /// Add `v` to the span, keeping the canonical form.
    fn absorb(&mut self, v: GfVector) -> bool {
        let v = self.reduce(v);
        if v.is_zero() {
            return false;
        }
        let pivot = 7 - v.0.leading_zeros();
        for row in &mut self.basis {
            if row.0 >> pivot & 1 == 1 {
                *row += v;
            }
        }
        self.basis.push(v);
        self.basis.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    /// Remainder of `v` after eliminating every pivot bit.
    fn reduce(&self, mut v: GfVector) -> GfVector {
        for row in &self.basis {
            let pivot = 7 - row.0.leading_zeros();
            if v.0 >> pivot & 1 == 1 {
                v += *row;
            }
        }
        v
    }

    pub fn basis(&self) -> &[GfVector] {
        &self.basis
    }

    /// Vector-space dimension `k`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension `k - 1`; the empty flat has dimension -1.
    pub fn dim(&self) -> i32 {
        self.basis.len() as i32 - 1
    }

    pub fn codim(&self) -> usize {
        8 - self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: GfVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_flat(&self, other: &Flat) -> bool {
        other.basis.iter().all(|&v| self.contains(v))
    }

    pub fn point_count(&self) -> usize {
        (1 << self.basis.len()) - 1
    }

    /// All `2^k - 1` points, in Gray-code order starting from a basis vector.
    pub fn points(&self) -> impl Iterator<Item = GfVector> + '_ {
        let n = 1u32 << self.basis.len();
        let mut acc = GfVector::ZERO;
        (1..n).map(move |i| {
            acc += self.basis[i.trailing_zeros() as usize];
            acc
        })
    }

    pub fn point_set(&self) -> PointSet {
        self.points().collect()
    }

    /// Number of points of the flat lying in `set`.
    pub fn meet_count(&self, set: &PointSet) -> usize {
        self.points().filter(|&p| set.contains(p)).count()
    }

    /// Basis of the dual forms vanishing on this flat (`codim` vectors `f`
    /// with `f . x = 0` for every `x` in the flat).
    pub fn dual_forms(&self) -> Vec<GfVector> {
        let rows: Vec<Bits256> = self
            .basis
            .iter()
            .map(|v| Bits256([v.0 as u64, 0, 0, 0]))
            .collect();
        null_space(&rows, 8)
            .into_iter()
            .map(|b| GfVector(b.0[0] as u8))
            .collect()
    }

    /// Intersection with `other`.
    pub fn meet(&self, other: &Flat) -> Flat {
        let forms = self.dual_forms().into_iter().chain(other.dual_forms());
        let rows: Vec<Bits256> = forms.map(|f| Bits256([f.0 as u64, 0, 0, 0])).collect();
        Flat::span_vectors(
            null_space(&rows, 8)
                .into_iter()
                .map(|b| GfVector(b.0[0] as u8)),
        )
    }

    /// Join with another flat.
    pub fn join(&self, other: &Flat) -> Flat {
        Flat::span_vectors(self.basis.iter().chain(&other.basis).copied())
    }
}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.shorthand())?;
        }
        write!(f, ">")
    }
}

/// Number of `k`-dimensional subspaces of V(n,2).
pub fn gaussian_binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    (num / den) as u64
}

/// Every flat of projective dimension `d` exactly once.
///
/// Flats are produced by pivot pattern (descending pivot tuples in
/// lexicographic order), and within a pattern by counting through the free
/// entries of the echelon matrix.
pub fn flats_of_dimension(d: usize) -> Result<impl Iterator<Item = Flat>> {
    if d > 7 {
        return Err(domain(format!("projective dimension {d} outside 0..=7")));
    }
    let k = d + 1;
    Ok(pivot_patterns(k).into_iter().flat_map(move |pivots| {
        // free slots: (row, bit) with bit below the row's pivot and not a pivot itself
        let pivot_mask: u8 = pivots.iter().fold(0, |m, &p| m | 1 << p);
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                (0..p)
                    .filter(move |&b| pivot_mask >> b & 1 == 0)
                    .map(move |b| (r, b))
            })
            .collect();
        let n = 1u64 << slots.len();
        (0..n).map(move |fill| {
            let mut rows: Vec<GfVector> = pivots.iter().map(|&p| GfVector(1 << p)).collect();
            for (s, &(r, b)) in slots.iter().enumerate() {
                if fill >> s & 1 == 1 {
                    rows[r].0 |= 1 << b;
                }
            }
            Flat { basis: rows }
        })
    }))
}

/// All descending `k`-tuples from `7..=0`, in lexicographic order.
fn pivot_patterns(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in (0..below).rev() {
            if p + 1 < k - cur.len() {
                break;
            }
            cur.push(p);
            go(k, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 8, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> GfVector {
        GfVector::parse_shorthand(s).unwrap()
    }

    #[test]
    fn span_of_two_points_is_a_line() {
        let line = Flat::span(&[p("1"), p("2")]).unwrap();
        assert_eq!(line.dim(), 1);
        let pts: HashSet<_> = line.points().collect();
        assert_eq!(pts, HashSet::from([p("1"), p("2"), p("12")]));
        assert_eq!(Flat::span(&[p("1"), p("2"), p("12")]).unwrap(), line);
        assert_eq!(Flat::span(&[p("12"), p("1")]).unwrap(), line);
    }

    #[test]
    fn span_errors() {
        assert!(Flat::span(&[]).is_err());
        assert!(Flat::span(&[GfVector::ZERO]).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(8, 1), 255);
        assert_eq!(gaussian_binomial(8, 2), 10795);
        assert_eq!(gaussian_binomial(8, 3), 97155);
        assert_eq!(gaussian_binomial(8, 4), 200787);
        assert_eq!(gaussian_binomial(8, 7), 255);
        assert_eq!(gaussian_binomial(8, 8), 1);
    }

    /// Independent count of 2-dimensional subspaces: unordered pairs of
    /// distinct points, each line counted once per its 3 choose 2 pairs.
    #[test]
    fn line_count_brute_force() {
        let mut lines = HashSet::new();
        for a in 1..=255u8 {
            for b in (a as u16 + 1)..=255u16 {
                let b = b as u8;
                lines.insert(Flat::span(&[GfVector(a), GfVector(b)]).unwrap());
            }
        }
        assert_eq!(lines.len(), 10795);
        let enumerated: HashSet<Flat> = flats_of_dimension(1).unwrap().collect();
        assert_eq!(enumerated, lines);
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomial() {
        for d in 0..=7 {
            let flats: Vec<Flat> = flats_of_dimension(d).unwrap().collect();
            assert_eq!(
                flats.len() as u64,
                gaussian_binomial(8, d as u32 + 1),
                "d={d}"
            );
            if d <= 2 || d >= 5 {
                let distinct: HashSet<&Flat> = flats.iter().collect();
                assert_eq!(distinct.len(), flats.len());
            }
            for f in flats.iter().take(50) {
                assert_eq!(f.dim(), d as i32);
                assert_eq!(Flat::span_vectors(f.basis().iter().copied()), *f);
            }
        }
        assert!(flats_of_dimension(8).is_err());
    }

    #[test]
    fn dual_forms_annihilate() {
        let x = Flat::span(&[p("1"), p("23"), p("456")]).unwrap();
        let forms = x.dual_forms();
        assert_eq!(forms.len(), 5);
        for f in &forms {
            for q in x.points() {
                assert!(!f.dot(q));
            }
        }
        let back =
            Flat::span_vectors(GfVector::points().filter(|v| forms.iter().all(|f| !f.dot(*v))));
        assert_eq!(back, x);
    }

    #[test]
    fn meet_and_join() {
        let a = Flat::span(&[p("1"), p("2"), p("3")]).unwrap();
        let b = Flat::span(&[p("3"), p("4")]).unwrap();
        assert_eq!(a.meet(&b), Flat::span(&[p("3")]).unwrap());
        assert_eq!(a.join(&b).dim(), 3);
        assert!(Flat::whole_space().contains_flat(&a));
    }
}
