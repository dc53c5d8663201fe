use std::sync::OnceLock;

use super::Anf;
use crate::error::{construction, Result};
use crate::gf2::{GfMatrix, GfVector};

fn quadric() -> &'static Anf {
    static Q2: OnceLock<Anf> = OnceLock::new();
    Q2.get_or_init(|| Anf::parse("18 + 27 + 36 + 45").expect("valid polynomial"))
}

/// Polar form of the invariant quadric: `B(x,y) = Q2(x+y) + Q2(x) + Q2(y)`.
pub fn symplectic_form(x: GfVector, y: GfVector) -> bool {
    let q = quadric();
    q.evaluate(x + y) ^ q.evaluate(x) ^ q.evaluate(y)
}

/// Gram matrix `G` with `G[i][j] = B(e_{i+1}, e_{j+1})`.
pub fn gram_matrix() -> GfMatrix {
    let mut rows = [0u8; 8];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..8 {
            if symplectic_form(GfVector::basis(i + 1), GfVector::basis(j + 1)) {
                *row |= 1 << j;
            }
        }
    }
    GfMatrix::from_rows(rows)
}

/// Check that `B` is bilinear (it agrees with `x^T G y` everywhere),
/// alternating, nondegenerate, and preserved by each of `generators`.
pub fn certify_symplectic(generators: &[GfMatrix]) -> Result<()> {
    let g = gram_matrix();
    if g.rank() != 8 {
        return Err(construction(format!("Gram matrix has rank {}", g.rank())));
    }
    for x in (0..=255u8).map(GfVector) {
        if symplectic_form(x, x) {
            return Err(construction(format!("B({x},{x}) is nonzero")));
        }
        for y in (0..=255u8).map(GfVector) {
            let b = symplectic_form(x, y);
            if b != x.dot(g.apply(y)) {
                return Err(construction(format!("B is not bilinear at ({x},{y})")));
            }
            if generators
                .iter()
                .any(|a| symplectic_form(a.apply(x), a.apply(y)) != b)
            {
                return Err(construction(format!(
                    "a generator does not preserve B at ({x},{y})"
                )));
            }
        }
    }
    Ok(())
}
