use super::MatrixGroup;
use crate::error::{domain, Error, Result};
use crate::gf2::{null_space, Bits256, Flat, GfMatrix, GfVector};

/// Vectors fixed by `a`: the null space of `a + I`. Empty when only 0 is fixed.
pub fn fix_subspace(a: &GfMatrix) -> Flat {
    let m = a.add(&GfMatrix::IDENTITY);
    let rows: Vec<Bits256> = m
        .rows()
        .iter()
        .map(|&r| Bits256([r as u64, 0, 0, 0]))
        .collect();
    Flat::span_vectors(
        null_space(&rows, 8)
            .into_iter()
            .map(|b| GfVector(b.0[0] as u8)),
    )
}

/// Linear basis of `{X : XA = AX for every generator A}`.
///
/// Each generator contributes 64 equations in the 64 entries of `X`
/// (entry `(i, j)` is bit `8i + j` of [`GfMatrix::to_u64`]).
pub fn commutant_basis(generators: &[GfMatrix]) -> Vec<GfMatrix> {
    let mut rows = Vec::with_capacity(64 * generators.len());
    for a in generators {
        // column c = image of the unit matrix E_c under X -> XA + AX
        let cols: Vec<u64> = (0..64)
            .map(|c| {
                let e = GfMatrix::from_u64(1 << c);
                (e * *a).add(&(*a * e)).to_u64()
            })
            .collect();
        for r in 0..64 {
            let mut row = 0u64;
            for (c, col) in cols.iter().enumerate() {
                row |= (col >> r & 1) << c;
            }
            rows.push(Bits256([row, 0, 0, 0]));
        }
    }
    null_space(&rows, 64)
        .into_iter()
        .map(|b| GfMatrix::from_u64(b.0[0]))
        .collect()
}

/// Largest commutant dimension for which the span is enumerated explicitly.
const MAX_ENUMERATED_DIM: usize = 20;

/// Invertible elements of the commutant of `generators`, i.e. the centralizer
/// in GL(8,2) of the generated group.
pub fn centralizer_in_gl(generators: &[GfMatrix]) -> Result<MatrixGroup> {
    let basis = commutant_basis(generators);
    if basis.len() > MAX_ENUMERATED_DIM {
        return Err(Error::Overflow {
            cap: 1 << MAX_ENUMERATED_DIM,
        });
    }
    let mut elements: Vec<GfMatrix> = (0u32..1 << basis.len())
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(GfMatrix::ZERO, |acc, (_, b)| acc.add(b))
        })
        .filter(|x| x.is_invertible())
        .collect();
    elements.sort_unstable();
    let group = MatrixGroup {
        generators: elements.clone(),
        elements: Some(elements),
        chain: None,
    };
    if !group.is_closed() {
        return Err(crate::error::construction(
            "centralizer is not closed under products",
        ));
    }
    Ok(group)
}

/// Elements of `group` fixing `p`. Requires an explicit element list.
pub fn stabilizer_of_point(group: &MatrixGroup, p: GfVector) -> Result<MatrixGroup> {
    let elements = group
        .elements()
        .ok_or_else(|| domain("stabilizer_of_point needs an explicit element list"))?;
    let stab: Vec<GfMatrix> = elements
        .iter()
        .copied()
        .filter(|g| g.apply(p) == p)
        .collect();
    Ok(MatrixGroup {
        generators: stab.clone(),
        elements: Some(stab),
        chain: None,
    })
}
