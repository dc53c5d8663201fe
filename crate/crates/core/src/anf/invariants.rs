use super::{monomial_key, substitution_table, Anf};
use crate::error::{construction, domain, Error, Result};
use crate::gf2::{null_space, Bits256, GfMatrix};

/// Sum of the monomials in the orbit of `rep` under the coordinate
/// permutations induced by `generators`.
pub fn monomial_orbit_poly(rep: u8, generators: &[GfMatrix]) -> Result<Anf> {
    let perms = generators
        .iter()
        .map(|g| {
            g.as_permutation()
                .ok_or_else(|| domain("monomial orbits need permutation matrices"))
        })
        .collect::<Result<Vec<[usize; 8]>>>()?;
    let act = |perm: &[usize; 8], m: u8| -> u8 {
        (0..8)
            .filter(|i| m >> i & 1 == 1)
            .fold(0u8, |acc, i| acc | 1 << (perm[i] - 1))
    };
    let mut seen = Bits256::EMPTY;
    seen.set(rep as usize, true);
    let mut frontier = vec![rep];
    while let Some(m) = frontier.pop() {
        for perm in &perms {
            let img = act(perm, m);
            if !seen.get(img as usize) {
                seen.set(img as usize, true);
                frontier.push(img);
            }
        }
    }
    Ok(Anf(seen))
}

/// Basis of the polynomials `f` of degree at most `max_degree` with
/// `f(0) = 0` and `f(Ax) = f(x)` for every generator `A`.
///
/// Unknowns are the coefficients of the monomials of size `1..=max_degree`,
/// in canonical monomial order; each generator contributes the equations
/// `(f∘A + f)_T = 0` for every monomial `T`.
pub fn invariant_subspace(generators: &[GfMatrix], max_degree: u32) -> Result<Vec<Anf>> {
    if !(1..=8).contains(&max_degree) {
        return Err(domain(format!("degree bound {max_degree} outside 1..=8")));
    }
    let mut unknowns: Vec<u8> = (1..=255u8)
        .filter(|m| m.count_ones() <= max_degree)
        .collect();
    unknowns.sort_by_key(|&m| monomial_key(m));
    let n = unknowns.len();

    let mut rows = Vec::new();
    for a in generators {
        let table = substitution_table(a)?;
        let mut eqs = vec![Bits256::EMPTY; 256];
        for (k, &m) in unknowns.iter().enumerate() {
            let image = table[m as usize] + Anf::monomial(m);
            if image.degree() > max_degree || image.constant_term() {
                return Err(construction("substitution left the coefficient space"));
            }
            for t in image.0.ones() {
                eqs[t].set(k, true);
            }
        }
        rows.extend(eqs.into_iter().filter(|r| !r.is_empty()));
    }
    Ok(null_space(&rows, n)
        .into_iter()
        .map(|v| Anf::from_monomials(v.ones().map(|k| unknowns[k])))
        .collect())
}

/// Every nonzero invariant polynomial of degree at most `max_degree`, sorted
/// by degree, then by coefficient mask in hex.
pub fn invariant_polynomials(generators: &[GfMatrix], max_degree: u32) -> Result<Vec<Anf>> {
    const MAX_DIM: usize = 16;
    let basis = invariant_subspace(generators, max_degree)?;
    if basis.len() > MAX_DIM {
        return Err(Error::Overflow { cap: 1 << MAX_DIM });
    }
    let mut all: Vec<Anf> = (1u32..1 << basis.len())
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, b)| *b)
                .sum()
        })
        .collect();
    all.sort_by_key(|f: &Anf| (f.degree(), f.to_hex()));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_elements;

    #[test]
    fn orbit_sums() {
        let cat = named_elements().unwrap();
        let gb = cat.gb();
        assert_eq!(
            monomial_orbit_poly(0b1000_0001, &gb).unwrap(),
            Anf::parse("18 + 27 + 36 + 45").unwrap()
        );
        assert_eq!(
            monomial_orbit_poly(0b0101_0101, &gb).unwrap(),
            Anf::parse("1357 + 2468").unwrap()
        );
        assert!(monomial_orbit_poly(1, &[cat.w()]).is_err());
    }

    #[test]
    fn gs_invariant_dimensions() {
        let cat = named_elements().unwrap();
        let dims: Vec<usize> = [2, 4, 6, 7]
            .iter()
            .map(|&d| invariant_subspace(&cat.gs(), d).unwrap().len())
            .collect();
        assert_eq!(dims, vec![1, 3, 4, 4]);
        assert_eq!(
            invariant_subspace(&cat.gs(), 2).unwrap(),
            vec![Anf::parse("18 + 27 + 36 + 45").unwrap()]
        );
        assert_eq!(invariant_subspace(&cat.gb(), 4).unwrap().len(), 13);
        assert!(invariant_subspace(&cat.gs(), 0).is_err());
    }

    #[test]
    fn fifteen_invariants_by_degree() {
        let cat = named_elements().unwrap();
        let all = invariant_polynomials(&cat.gs(), 7).unwrap();
        assert_eq!(all.len(), 15);
        let mut census = [0; 9];
        for f in &all {
            census[f.degree() as usize] += 1;
        }
        assert_eq!(census, [0, 0, 1, 0, 6, 0, 8, 0, 0]);
    }
}
