use serde::Serialize;

use super::{sym3_operator, tensor_operator, Gl2};
use crate::error::{construction, domain, Result};
use crate::gf2::{parse_point, GfMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct NamedElement {
    pub name: &'static str,
    pub matrix: GfMatrix,
}

/// The named elements of `G_S` and of its orthogonal overgroups.
#[derive(Clone, Debug)]
pub struct NamedCatalog {
    elements: Vec<NamedElement>,
}

impl NamedCatalog {
    pub fn iter(&self) -> impl Iterator<Item = &NamedElement> {
        self.elements.iter()
    }

    /// Look up by name. `M'`/`Mp` and `K'`/`Kp` are accepted interchangeably.
    pub fn get(&self, name: &str) -> Option<GfMatrix> {
        let name = match name {
            "Mp" => "M'",
            "Kp" => "K'",
            "K12" | "J12" => "K12",
            other => other,
        };
        self.elements
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.matrix)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.elements.iter().map(|e| e.name).collect()
    }

    /// Resolve a comma-separated generator list such as `"M,N,K"`.
    pub fn resolve_list(&self, list: &str) -> Result<Vec<GfMatrix>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                self.get(s).ok_or_else(|| {
                    domain(format!(
                        "unknown element {s:?}; known: {}",
                        self.names().join(", ")
                    ))
                })
            })
            .collect()
    }

    // Short accessors for the elements used everywhere.
    pub fn m(&self) -> GfMatrix {
        self.get("M").unwrap()
    }
    pub fn n(&self) -> GfMatrix {
        self.get("N").unwrap()
    }
    pub fn m_prime(&self) -> GfMatrix {
        self.get("M'").unwrap()
    }
    pub fn w(&self) -> GfMatrix {
        self.get("W").unwrap()
    }
    pub fn j(&self) -> GfMatrix {
        self.get("J").unwrap()
    }

    /// Generators of `G_S`.
    pub fn gs(&self) -> Vec<GfMatrix> {
        vec![self.m(), self.n()]
    }

    /// Generators of the index-2 subgroup `G_S^0`.
    pub fn gs0(&self) -> Vec<GfMatrix> {
        vec![self.m_prime(), self.n()]
    }

    /// Generators of `G_B`, the symmetry group of the basis cube.
    pub fn gb(&self) -> Vec<GfMatrix> {
        vec![self.m(), self.get("K12").unwrap()]
    }
}

fn check_cycles(name: &str, m: &GfMatrix, cycles: &str) -> Result<()> {
    let expected = GfMatrix::from_cycles(cycles)?;
    if *m != expected {
        return Err(construction(format!(
            "{name} acts as {:?}, expected {cycles}",
            m.cycle_notation()
        )));
    }
    Ok(())
}

fn check_images(name: &str, m: &GfMatrix, pairs: &[(&str, &str)]) -> Result<()> {
    for (from, to) in pairs {
        let (x, y) = (parse_point(from)?, parse_point(to)?);
        if m.apply(x) != y {
            return Err(construction(format!(
                "{name} maps {from} to {}, expected {to}",
                m.apply(x)
            )));
        }
    }
    Ok(())
}

fn check_order(name: &str, m: &GfMatrix, order: u64) -> Result<()> {
    match m.order() {
        Some(o) if o == order => Ok(()),
        other => Err(construction(format!(
            "{name} has order {other:?}, expected {order}"
        ))),
    }
}

/// Build and validate the catalog of named elements.
pub fn named_elements() -> Result<NamedCatalog> {
    let id = Gl2::IDENTITY;
    let (j, a) = (Gl2::SWAP, Gl2::CYCLE);

    let jj = tensor_operator(j, j, j)?;
    let jx = tensor_operator(j, id, id)?;
    let jy = tensor_operator(id, j, id)?;
    let jz = tensor_operator(id, id, j)?;
    let ax = tensor_operator(a, id, id)?;
    let ay = tensor_operator(id, a, id)?;
    let az = tensor_operator(id, id, a)?;
    let k12 = sym3_operator([2, 1, 3])?;
    let k13 = sym3_operator([3, 2, 1])?;
    let k23 = sym3_operator([1, 3, 2])?;
    let b = sym3_operator([2, 3, 1])?;
    let c = jx * k12;
    let m = jx * b;
    let n = ax * k12;
    let m_prime = jj * m;
    let w = GfMatrix::from_images(
        ["246", "2135", "248", "4137", "268", "6157", "468", "8357"]
            .map(|s| parse_point(s).unwrap()),
    );
    let k = GfMatrix::from_cycles("(18)")?;
    let k_prime = GfMatrix::from_cycles("(18)(27)")?;

    check_cycles("J", &jj, "(18)(27)(36)(45)")?;
    check_cycles("Jx", &jx, "(12)(34)(56)(78)")?;
    check_cycles("Jy", &jy, "(14)(23)(58)(67)")?;
    check_cycles("Jz", &jz, "(16)(25)(38)(47)")?;
    if jx * jy * jz != jj {
        return Err(construction("JxJyJz != J"));
    }
    check_cycles("JxJy", &(jx * jy), "(13)(24)(57)(68)")?;
    check_cycles("JxJz", &(jx * jz), "(15)(26)(37)(48)")?;
    check_cycles("JyJz", &(jy * jz), "(17)(28)(35)(46)")?;
    check_images(
        "Ax",
        &ax,
        &[
            ("1", "2"),
            ("2", "12"),
            ("4", "3"),
            ("3", "34"),
            ("6", "5"),
            ("5", "56"),
            ("7", "8"),
            ("8", "78"),
        ],
    )?;
    check_cycles("K12", &k12, "(24)(57)")?;
    check_cycles("C", &c, "(1234)(8765)")?;
    check_cycles("B", &b, "(375)(246)")?;
    check_images(
        "W",
        &w,
        &[
            ("1", "246"),
            ("2", "2135"),
            ("3", "248"),
            ("4", "4137"),
            ("5", "268"),
            ("6", "6157"),
            ("7", "468"),
            ("8", "8357"),
        ],
    )?;
    for (name, mat) in [
        ("J", &jj),
        ("Jx", &jx),
        ("Jy", &jy),
        ("Jz", &jz),
        ("K12", &k12),
        ("K13", &k13),
        ("K23", &k23),
        ("K", &k),
        ("K'", &k_prime),
    ] {
        check_order(name, mat, 2)?;
    }
    for (name, mat) in [("Ax", &ax), ("Ay", &ay), ("Az", &az), ("B", &b), ("W", &w)] {
        check_order(name, mat, 3)?;
    }
    check_order("C", &c, 4)?;
    check_order("M", &m, 6)?;
    check_order("N", &n, 6)?;

    let elements = [
        ("J", jj),
        ("Jx", jx),
        ("Jy", jy),
        ("Jz", jz),
        ("Ax", ax),
        ("Ay", ay),
        ("Az", az),
        ("K12", k12),
        ("K13", k13),
        ("K23", k23),
        ("C", c),
        ("B", b),
        ("M", m),
        ("N", n),
        ("M'", m_prime),
        ("W", w),
        ("K", k),
        ("K'", k_prime),
    ]
    .into_iter()
    .map(|(name, matrix)| NamedElement { name, matrix })
    .collect();
    Ok(NamedCatalog { elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds() {
        let cat = named_elements().unwrap();
        assert_eq!(cat.names().len(), 18);
        for e in cat.iter() {
            assert!(e.matrix.is_invertible(), "{}", e.name);
        }
        assert_eq!(cat.get("Mp"), cat.get("M'"));
        assert!(cat.get("X").is_none());
        assert_eq!(cat.resolve_list("M, N").unwrap().len(), 2);
        assert!(cat.resolve_list("M,Q").is_err());
    }

    #[test]
    fn w_images_by_basis() {
        let cat = named_elements().unwrap();
        let w = cat.w();
        assert_eq!(
            w.apply(parse_point("1").unwrap()),
            parse_point("246").unwrap()
        );
        assert_eq!(
            w.apply(parse_point("8").unwrap()),
            parse_point("3578").unwrap()
        );
        assert_eq!(w.pow(3), GfMatrix::IDENTITY);
    }
}
