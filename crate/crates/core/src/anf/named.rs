use serde::Serialize;

use super::{anf_from_pointset, flat_equation, monomial_orbit_poly, parse_monomial, Anf};
use crate::error::{construction, domain, Result};
use crate::gf2::{Flat, GfVector};
use crate::groups::named_elements;
use crate::orbits::{tetrad_pair_flats, tetrad_span_flats, Classifier, GsOrbit};
use crate::segre::build_model;

#[derive(Clone, Debug, Serialize)]
pub struct NamedPolynomial {
    pub name: &'static str,
    pub degree: u32,
    pub terms: usize,
    pub poly: Anf,
}

impl NamedPolynomial {
    fn new(name: &'static str, poly: Anf) -> NamedPolynomial {
        NamedPolynomial {
            name,
            degree: poly.degree(),
            terms: poly.term_count(),
            poly,
        }
    }
}

/// An ordered list of named polynomials.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct PolyCatalog {
    entries: Vec<NamedPolynomial>,
}

impl PolyCatalog {
    pub fn iter(&self) -> impl Iterator<Item = &NamedPolynomial> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Look up by name; a trailing `p` stands for a prime (`Q4p` = `Q4'`).
    pub fn get(&self, name: &str) -> Option<Anf> {
        let wanted = name.trim().replace('p', "'");
        self.entries
            .iter()
            .find(|e| e.name == wanted)
            .map(|e| e.poly)
    }

    /// Evaluate a sum of catalogue names such as `"Q2+Q4'"`.
    pub fn sum_of(&self, expr: &str) -> Result<Anf> {
        expr.split('+')
            .map(|n| {
                self.get(n)
                    .ok_or_else(|| domain(format!("unknown polynomial {:?}", n.trim())))
            })
            .sum()
    }

    pub fn merged(mut self, other: PolyCatalog) -> PolyCatalog {
        self.entries.extend(other.entries);
        self
    }
}

/// How a listed expansion constrains a polynomial.
enum Listing {
    /// Exactly these monomials.
    Full(&'static str),
    /// These monomials among the given total count.
    Partial(&'static str, usize),
    /// Checked separately.
    Derived,
}

/// `(name, orbit representative, listed expansion)`.
const P_SPECS: [(&str, &str, Listing); 15] = [
    ("P1", "1", Listing::Full("1 2 3 4 5 6 7 8")),
    (
        "P2",
        "12",
        Listing::Full("12 14 16 23 25 34 38 47 56 58 67 78"),
    ),
    (
        "P2'",
        "13",
        Listing::Full("13 15 17 35 37 57 24 26 28 46 48 68"),
    ),
    ("P2''", "18", Listing::Full("18 27 36 45")),
    (
        "P3",
        "123",
        Listing::Full(
            "123 124 134 234 125 126 156 256 146 147 167 467 \
             235 238 258 358 347 348 378 478 567 568 578 678",
        ),
    ),
    (
        "P3'",
        "135",
        Listing::Full("135 137 157 357 246 248 268 468"),
    ),
    ("P3''", "128", Listing::Derived),
    ("P4", "1234", Listing::Full("1234 1256 1467 2358 3478 5678")),
    (
        "P4'",
        "1278",
        Listing::Full("1278 1368 1458 2367 2457 3456"),
    ),
    (
        "P4''",
        "1246",
        Listing::Full("1246 1235 1347 1567 2348 2568 3578 4678"),
    ),
    ("P4'''", "1357", Listing::Full("1357 2468")),
    (
        "P4iv",
        "1238",
        Listing::Partial("1238 1258 1348 1478 1568 1678", 24),
    ),
    (
        "P4v",
        "1248",
        Listing::Full(
            "1248 1268 1468 1358 1378 1578 1237 1257 2357 2467 2478 2678 \
             2346 2368 3468 1356 1367 3567 1345 1457 3457 2456 2458 4568",
        ),
    ),
    ("P5", "12357", Listing::Derived),
    ("P6", "123678", Listing::Full("123678 124578 134568 234567")),
];

fn listed(terms: &str) -> Result<Anf> {
    let words: Vec<&str> = terms.split_whitespace().collect();
    Anf::from_monomial_strings(&words)
}

/// `Σ_{i ∉ {a,b}} x_a x_b x_i` over the four space diagonals `{a, b}`.
fn diagonal_cubic() -> Anf {
    [(1, 8), (2, 7), (3, 6), (4, 5)]
        .iter()
        .flat_map(|&(a, b)| {
            (1..=8)
                .filter(move |&i| i != a && i != b)
                .map(move |i| Anf::var(a) * Anf::var(b) * Anf::var(i))
        })
        .sum()
}

/// `x1x3x5x7(x2+x4+x6+x8) + x2x4x6x8(x1+x3+x5+x7)`.
fn split_quintic() -> Anf {
    let prod = |idx: [usize; 4]| {
        idx.iter()
            .map(|&i| Anf::var(i))
            .fold(Anf::one(), |a, b| a * b)
    };
    let sum = |idx: [usize; 4]| idx.iter().map(|&i| Anf::var(i)).sum::<Anf>();
    prod([1, 3, 5, 7]) * sum([2, 4, 6, 8]) + prod([2, 4, 6, 8]) * sum([1, 3, 5, 7])
}

/// The fifteen `G_B`-invariant orbit sums, each compared with its listed
/// expansion.
pub fn named_p_basis() -> Result<PolyCatalog> {
    let gb = named_elements()?.gb();
    let mut entries = Vec::with_capacity(P_SPECS.len());
    for (name, rep, listing) in &P_SPECS {
        let poly = monomial_orbit_poly(parse_monomial(rep)?, &gb)?;
        let ok = match listing {
            Listing::Full(terms) => poly == listed(terms)?,
            Listing::Partial(terms, total) => {
                let part = listed(terms)?;
                poly.term_count() == *total && (poly.0 & part.0) == part.0
            }
            Listing::Derived => true,
        };
        if !ok {
            return Err(construction(format!(
                "{name} differs from its listed expansion"
            )));
        }
        entries.push(NamedPolynomial::new(name, poly));
    }
    let cat = PolyCatalog { entries };
    let get = |n: &str| cat.get(n).expect("basis entry");
    if get("P3''") != diagonal_cubic() {
        return Err(construction("P3'' differs from its diagonal-sum form"));
    }
    if get("P5") != split_quintic() || get("P5") != get("P1") * get("P4'''") {
        return Err(construction("P5 differs from its product forms"));
    }
    Ok(cat)
}

fn require_equal(name: &str, routes: &[(&str, Anf)]) -> Result<Anf> {
    let (first_name, first) = routes[0];
    for (route, f) in &routes[1..] {
        if *f != first {
            return Err(construction(format!(
                "{name}: route {route:?} disagrees with route {first_name:?}"
            )));
        }
    }
    Ok(first)
}

fn sum_of_flats<'a>(flats: impl IntoIterator<Item = &'a Flat>) -> Result<Anf> {
    flats.into_iter().map(flat_equation).sum()
}

/// `Q2, Q4, Q4', Q6, Q6'`, each obtained along independent routes that must
/// agree: the equation of the orbit union, a sum of flat equations, and a
/// closed form in the `P`-basis.
pub fn named_q() -> Result<PolyCatalog> {
    let model = build_model()?;
    let classifier = Classifier::new(&model)?;
    let p = named_p_basis()?;
    let ps = |expr: &str| p.sum_of(expr);
    use GsOrbit::*;

    let q2 = require_equal(
        "Q2",
        &[
            (
                "orbit union",
                anf_from_pointset(&classifier.union(&[O2, O4, O5])),
            ),
            ("U_h flats", sum_of_flats(tetrad_span_flats().iter())?),
            ("P-basis", ps("P2''")?),
        ],
    )?;
    let q4 = require_equal(
        "Q4",
        &[
            (
                "orbit union",
                anf_from_pointset(&classifier.union(&[O2, O5])),
            ),
            (
                "Y flats",
                sum_of_flats(model.sub_segres.iter().map(|s| &s.ambient))?,
            ),
            ("P-basis", ps("P2''+P3'+P4'''+P4v")?),
        ],
    )?;
    let pair_flats = tetrad_pair_flats();
    let q4p = require_equal(
        "Q4'",
        &[
            (
                "orbit union",
                anf_from_pointset(&classifier.union(&[O3, O4, O5])),
            ),
            (
                "U_hk flats",
                sum_of_flats(pair_flats.iter().map(|(_, f)| f))?,
            ),
            ("P-basis", ps("P2'+P3'+P3''+P4'")?),
        ],
    )?;
    let lines: Vec<Flat> = model
        .generators
        .iter()
        .filter(|g| g.direction == 3)
        .map(|g| Flat::span(&g.points))
        .collect::<Result<_>>()?;
    if lines.len() != 9 {
        return Err(construction(
            "expected nine generators in the third direction",
        ));
    }
    let q6 = require_equal(
        "Q6",
        &[
            ("orbit union", anf_from_pointset(&classifier.orbit(O5))),
            ("generator lines", sum_of_flats(lines.iter())?),
            ("P-basis", ps("P2'+P2''+P3''+P4'+P4'''+P4v+P5+P6")?),
        ],
    )?;
    let q6p = require_equal(
        "Q6'",
        &[
            ("Q6+Q4+Q4'", q6 + q4 + q4p),
            ("P-basis", ps("P5+P6")?),
            (
                "orbit union",
                anf_from_pointset(&classifier.union(&[O2, O3, O4, O5])),
            ),
        ],
    )?;
    Ok(PolyCatalog {
        entries: vec![
            NamedPolynomial::new("Q2", q2),
            NamedPolynomial::new("Q4", q4),
            NamedPolynomial::new("Q4'", q4p),
            NamedPolynomial::new("Q6", q6),
            NamedPolynomial::new("Q6'", q6p),
        ],
    })
}

/// A row of the table of invariants of degree at most 4: degree, value on
/// each of O1..O5, and the size of the zero set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SevenRow {
    pub name: String,
    pub degree: u32,
    /// `None` when the polynomial is not constant on the orbit.
    pub values: [Option<u8>; 5],
    pub zero_set_size: usize,
}

/// The expected table: `(expression, degree, values on O1..O5, |ψ_Q|)`.
pub const SEVEN_TABLE: [(&str, u32, [u8; 5], usize); 7] = [
    ("Q2", 2, [1, 0, 1, 0, 0], 135),
    ("Q4", 4, [1, 0, 1, 1, 0], 81),
    ("Q4'", 4, [1, 1, 0, 0, 0], 189),
    ("Q4+Q4'", 4, [0, 1, 1, 1, 0], 39),
    ("Q2+Q4", 4, [0, 0, 0, 1, 0], 201),
    ("Q2+Q4'", 4, [0, 1, 1, 0, 0], 93),
    ("Q2+Q4+Q4'", 4, [1, 1, 0, 1, 0], 135),
];

/// Compute the rows of the table from `q` by evaluating every polynomial on
/// every point of each orbit.
pub fn seven_table(q: &PolyCatalog, classifier: &Classifier) -> Result<Vec<SevenRow>> {
    SEVEN_TABLE
        .iter()
        .map(|(expr, _, _, _)| {
            let f = q.sum_of(expr)?;
            let values = GsOrbit::ALL.map(|o| {
                let points = classifier.orbit(o);
                let mut vals = points.iter().map(|p: GfVector| f.evaluate(p) as u8);
                let first = vals.next()?;
                vals.all(|v| v == first).then_some(first)
            });
            Ok(SevenRow {
                name: expr.to_string(),
                degree: f.degree(),
                values,
                zero_set_size: f.zero_set().len(),
            })
        })
        .collect()
}
