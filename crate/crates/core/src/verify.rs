//! Verification suites: every count, order and identity the crate claims,
//! recomputed from scratch and recorded in a [`Report`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::anf::{
    anf_from_pointset, certify_symplectic, degree_by_incidence, invariant_polynomials,
    invariant_subspace, named_p_basis, named_q, seven_table, substitute, Anf, PolyCatalog,
    SEVEN_TABLE,
};
use crate::error::{parse, Result};
use crate::gf2::{parse_point, Bits256, GfMatrix, GfVector, PointSet};
use crate::groups::{
    centralizer_in_gl, closure, commutant_basis, fix_subspace, named_elements, schreier_sims,
    stabilizer_of_point, tensor_operator, Gl2, MatrixGroup, NamedCatalog, DEFAULT_CAP,
};
use crate::orbits::{
    bisecants, gb_orbit_labels, line_orbit_split, parity_class, point_orbits, segre_triplet,
    spread_from_w, tetrad_incidence, tetrad_lines, Classifier, GbOrbit, GsOrbit, Parity, Spread,
    TABLE1,
};
use crate::report::Report;
use crate::segre::{build_model, SegreModel};

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Groups,
    Orbits,
    Spread,
    Polys,
    Table1,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "groups", "orbits", "spread", "polys", "table1"];
}

impl FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "groups" => Suite::Groups,
            "orbits" => Suite::Orbits,
            "spread" => Suite::Spread,
            "polys" => Suite::Polys,
            "table1" => Suite::Table1,
            _ => return Err(parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::All,
            Suite::Groups,
            Suite::Orbits,
            Suite::Spread,
            Suite::Polys,
            Suite::Table1,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Objects shared by the suites, built once.
struct Context {
    cat: NamedCatalog,
    model: SegreModel,
    classifier: Classifier,
    gs: MatrixGroup,
    spread: Spread,
}

impl Context {
    fn build() -> Result<Context> {
        let cat = named_elements()?;
        let model = build_model()?;
        let classifier = Classifier::new(&model)?;
        let gs = closure(&cat.gs(), DEFAULT_CAP)?;
        let spread = spread_from_w(&cat.w())?;
        Ok(Context {
            cat,
            model,
            classifier,
            gs,
            spread,
        })
    }
}

/// Run a suite. Failures are recorded as failing checks, never as errors.
pub fn run_suite(suite: Suite, seed: u64) -> Report {
    let mut report = Report::new(&suite.to_string(), seed);
    let ctx = match Context::build() {
        Ok(ctx) => ctx,
        Err(e) => {
            report.check("setup", "named elements, model and classifier", "ok", e);
            return report;
        }
    };
    let r = &mut report;
    match suite {
        Suite::All => {
            groups(r, &ctx);
            orbits(r, &ctx);
            spread(r, &ctx);
            table1(r, &ctx);
            polys(r, &ctx, seed);
        }
        Suite::Groups => groups(r, &ctx),
        Suite::Orbits => orbits(r, &ctx),
        Suite::Spread => spread(r, &ctx),
        Suite::Polys => polys(r, &ctx, seed),
        Suite::Table1 => table1(r, &ctx),
    }
    report
}

fn sorted_sizes(mut v: Vec<usize>) -> String {
    v.sort_unstable();
    v.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Points are compared as hex masks: shorthand has several spellings of
/// one point (`13456` and `278u` coincide).
fn hex_of(shorthand: &str) -> String {
    parse_point(shorthand).expect("valid shorthand").to_hex()
}

fn sorted_elements(g: &MatrixGroup) -> Vec<GfMatrix> {
    let mut els = g.elements().unwrap_or(&[]).to_vec();
    els.sort_unstable();
    els
}

fn group_checks_orders(r: &mut Report, ctx: &Context) {
    let cases: [(&str, &str, Vec<GfMatrix>, u128); 3] = [
        ("groups.order.gs", "|<M,N>| = 1296", ctx.cat.gs(), 1296),
        ("groups.order.gs0", "|<M',N>| = 648", ctx.cat.gs0(), 648),
        ("groups.order.gb", "|<M,K12>| = 48", ctx.cat.gb(), 48),
    ];
    for (id, desc, gens, expected) in cases {
        r.check_with(id, desc, expected, || {
            Ok(closure(&gens, DEFAULT_CAP)?.order().unwrap_or(0))
        });
        r.check(
            &format!("{id}.schreier_sims"),
            "Schreier-Sims agrees with explicit closure",
            expected,
            schreier_sims(&gens),
        );
    }
    r.check_with(
        "groups.order.go8",
        "|<M,N,K>| = |GO+(8,2)| = 348364800",
        348_364_800u128,
        || Ok(schreier_sims(&ctx.cat.resolve_list("M,N,K")?)),
    );
    r.check_with(
        "groups.order.o8",
        "|<M,N,K'>| = |O+(8,2)| = 174182400",
        174_182_400u128,
        || Ok(schreier_sims(&ctx.cat.resolve_list("M,N,K'")?)),
    );
    r.check_with(
        "groups.orthogonal.preserve_q2",
        "M, N, K and K' all preserve Q2",
        true,
        || {
            let q2 = Anf::parse("18 + 27 + 36 + 45")?;
            let gens = ctx.cat.resolve_list("M,N,K,K'")?;
            let mut ok = true;
            for g in &gens {
                ok &= substitute(&q2, g)? == q2;
            }
            Ok(ok)
        },
    );
}

fn groups(r: &mut Report, ctx: &Context) {
    r.check(
        "groups.named",
        "named elements built and validated against their cycle forms",
        18,
        ctx.cat.iter().count(),
    );
    group_checks_orders(r, ctx);

    let gs0 = ctx.cat.gs0();
    r.check(
        "groups.commutant.dim",
        "commutant of {M',N} has dimension 2",
        2,
        commutant_basis(&gs0).len(),
    );
    let w = ctx.cat.w();
    r.check_with(
        "groups.centralizer",
        "invertible part of the commutant is {I, W, W^2}",
        true,
        || {
            let z = centralizer_in_gl(&gs0)?;
            let mut want = vec![GfMatrix::IDENTITY, w, w.pow(2)];
            want.sort_unstable();
            Ok(sorted_elements(&z) == want)
        },
    );
    let w_images = ["246", "2135", "248", "4137", "268", "6157", "468", "8357"];
    r.check(
        "groups.w.images",
        "W maps e1..e8 to 246, 2135, 248, 4137, 268, 6157, 468, 8357",
        w_images.map(hex_of).join(" "),
        (1..=8)
            .map(|j| w.image(j).to_hex())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let order_ok = w.pow(3) == GfMatrix::IDENTITY && w != GfMatrix::IDENTITY;
    r.check("groups.w.order", "W^3 = I and W != I", true, order_ok);
    r.check(
        "groups.w.fixed_free",
        "W fixes no point",
        0,
        fix_subspace(&w).point_count(),
    );
    let w2 = w.pow(2);
    let normalizes = ctx.gs.elements().is_some_and(|els| {
        els.iter().all(|a| {
            let conj = *a * w * a.inverse().expect("group elements are invertible");
            conj == w || conj == w2
        })
    });
    r.check(
        "groups.w.normalized",
        "A W A^-1 lies in {W, W^2} for all 1296 elements of G_S",
        true,
        normalizes,
    );

    let gs0_group = closure(&gs0, DEFAULT_CAP);
    r.check_with(
        "groups.gs0.parity",
        "a tensor product lies in G_S^0 iff it has an even number of involutive factors (216 cases)",
        216,
        || {
            let g = gs0_group.as_ref().map_err(Clone::clone)?;
            let all = Gl2::all();
            let mut agree = 0;
            for a in &all {
                for b in &all {
                    for c in &all {
                        let t = tensor_operator(*a, *b, *c)?;
                        let inv = [a, b, c].iter().filter(|x| x.is_involution()).count();
                        if g.contains(&t) == Some(inv % 2 == 0) {
                            agree += 1;
                        }
                    }
                }
            }
            Ok(agree)
        },
    );

    r.check_with(
        "groups.gb.structure",
        "G_B: order 48, maps onto Sym(4) on the space diagonals with kernel {I,J}, J central",
        "48 24 true true",
        || {
            let gb = closure(&ctx.cat.gb(), DEFAULT_CAP)?;
            let els = gb.elements().unwrap_or(&[]);
            let diag = |i: usize| [0, 1, 2, 3, 3, 2, 1, 0][i - 1];
            let mut images = BTreeSet::new();
            let mut kernel = Vec::new();
            for g in els {
                let perm = g.as_permutation().ok_or_else(|| {
                    crate::error::construction("G_B element is not a permutation")
                })?;
                let act: Vec<usize> = [1, 2, 3, 4].iter().map(|&i| diag(perm[i - 1])).collect();
                if act == [0, 1, 2, 3] {
                    kernel.push(*g);
                }
                images.insert(act);
            }
            kernel.sort_unstable();
            let mut want = vec![GfMatrix::IDENTITY, ctx.cat.j()];
            want.sort_unstable();
            let j = ctx.cat.j();
            let central = ctx.cat.gb().iter().all(|g| *g * j == j * *g);
            Ok(format!(
                "{} {} {} {}",
                els.len(),
                images.len(),
                kernel == want,
                central
            ))
        },
    );
    r.check_with(
        "groups.stabilizer_u",
        "the stabilizer of u in G_S is G_B",
        true,
        || {
            let stab = stabilizer_of_point(&ctx.gs, GfVector::UNIT)?;
            let gb = closure(&ctx.cat.gb(), DEFAULT_CAP)?;
            Ok(sorted_elements(&stab) == sorted_elements(&gb))
        },
    );
}

fn orbits(r: &mut Report, ctx: &Context) {
    let gs = ctx.cat.gs();
    let part = point_orbits(&gs);
    r.check(
        "orbits.gs.sizes",
        "G_S point-orbit sizes",
        "12,27,54,54,108",
        sorted_sizes(part.sizes()),
    );
    r.check(
        "orbits.gs.invariant",
        "orbits are disjoint, cover PG(7,2) and are invariant under M, N",
        true,
        part.is_valid_for(&gs),
    );
    let agree = part
        .classes
        .iter()
        .filter(|c| {
            let label = ctx.classifier.classify(c.representative);
            ctx.classifier.orbit(label) == c.points
        })
        .count();
    r.check(
        "orbits.classifier",
        "definitional classes coincide with the five G_S-orbits",
        5,
        agree,
    );
    let label_sizes: Vec<String> = GsOrbit::ALL
        .iter()
        .map(|&o| format!("{o}:{}", ctx.classifier.orbit(o).len()))
        .collect();
    r.check(
        "orbits.numbering",
        "O1..O5 have lengths 12, 54, 108, 54, 27",
        "O1:12 O2:54 O3:108 O4:54 O5:27",
        label_sizes.join(" "),
    );
    let gs0_part = point_orbits(&ctx.cat.gs0());
    r.check(
        "orbits.gs0.sizes",
        "G_S^0 has six orbits O1, O2, O3, S, S', S''",
        "12,27,27,27,54,108",
        sorted_sizes(gs0_part.sizes()),
    );

    let o1 = ctx.classifier.orbit(GsOrbit::O1);
    let o2 = ctx.classifier.orbit(GsOrbit::O2);
    let bis = bisecants(&o1);
    let thirds_in_o2 = bis.iter().all(|l| l.iter().any(|p| o2.contains(*p)));
    r.check(
        "orbits.o1.bisecants",
        "O1 has 54 bisecants, their external points lie in O2",
        "54 true",
        format!("{} {}", bis.len(), thirds_in_o2),
    );
    let mut incidence = BTreeMap::new();
    for p in GfVector::points() {
        incidence
            .entry(ctx.classifier.classify(p).to_string())
            .or_insert_with(BTreeSet::new)
            .insert(tetrad_incidence(p));
    }
    r.check(
        "orbits.tetrad_incidence",
        "number of 5-flats U_h through a point: 3 on O1, 2 on O2, 1 on O3, 0 on O4, O5",
        "{\"O1\": {3}, \"O2\": {2}, \"O3\": {1}, \"O4\": {0}, \"O5\": {0}}",
        format!("{incidence:?}"),
    );
    let p81: PointSet = GfVector::points()
        .filter(|&p| tetrad_incidence(p) == 0)
        .collect();
    r.check(
        "orbits.p81",
        "points on none of the U_h are exactly O4 and O5",
        true,
        p81 == ctx.classifier.union(&[GsOrbit::O4, GsOrbit::O5]),
    );

    let pt = |s: &str| parse_point(s).expect("valid shorthand");
    let w = ctx.cat.w();
    r.check(
        "orbits.w.examples",
        "W(13) = 68, W(18) = 1u, W(12) = 13456",
        ["68", "1u", "13456"].map(hex_of).join(" "),
        ["13", "18", "12"]
            .map(|s| w.apply(pt(s)).to_hex())
            .join(" "),
    );

    r.check_with(
        "orbits.triplet",
        "S, S', S'' disjoint; S' and S'' make up O4; G_S^0 fixes each",
        "27 27 27",
        || {
            let t = segre_triplet(&ctx.model, &ctx.cat)?;
            Ok(format!("{} {} {}", t.s.len(), t.s1.len(), t.s2.len()))
        },
    );
    r.check_with(
        "orbits.triplet.swaps",
        "J swaps S' and S''; W^2 J swaps S and S''",
        "true true",
        || {
            let t = segre_triplet(&ctx.model, &ctx.cat)?;
            let j = ctx.cat.j();
            let w2j = w.pow(2) * j;
            Ok(format!(
                "{} {}",
                t.s1.image(&j) == t.s2 && t.s2.image(&j) == t.s1,
                t.s.image(&w2j) == t.s2 && t.s2.image(&w2j) == t.s
            ))
        },
    );
    r.check_with(
        "orbits.triplet.parity",
        "S' = O4,3 even + O4,4 odd + O4,5 odd + O4,6 even + O4,4' odd; S'' the opposite",
        "true true",
        || {
            let t = segre_triplet(&ctx.model, &ctx.cat)?;
            let labels = gb_point_labels(ctx)?;
            // parity taken by S' on each G_B-orbit of O4
            let in_s1 = |l: &GbOrbit| match (l.weight, l.primed) {
                (3, false) | (6, false) => Parity::Even,
                _ => Parity::Odd,
            };
            let mut s1 = PointSet::EMPTY;
            let mut s2 = PointSet::EMPTY;
            for p in ctx.classifier.orbit(GsOrbit::O4).iter() {
                let l = &labels[&p];
                if parity_class(p)? == in_s1(l) {
                    s1.insert(p);
                } else {
                    s2.insert(p);
                }
            }
            Ok(format!("{} {}", s1 == t.s1, s2 == t.s2))
        },
    );
}

fn gb_point_labels(ctx: &Context) -> Result<BTreeMap<GfVector, GbOrbit>> {
    let part = point_orbits(&ctx.cat.gb());
    let labels = gb_orbit_labels(&part, &ctx.classifier)?;
    let mut map = BTreeMap::new();
    for (class, label) in part.classes.iter().zip(labels) {
        for p in class.points.iter() {
            map.insert(p, label);
        }
    }
    Ok(map)
}

fn spread(r: &mut Report, ctx: &Context) {
    let s = &ctx.spread;
    r.check(
        "spread.cover",
        "85 disjoint lines cover 255 points",
        "85 true",
        format!("{} {}", s.lines.len(), s.is_spread()),
    );
    let w = ctx.cat.w();
    r.check(
        "spread.minimal_polynomial",
        "W^2 p = p + W p for every point",
        true,
        GfVector::points().all(|p| w.apply(w.apply(p)) == p + w.apply(p)),
    );
    let line_of_e1 = s.line_of(GfVector::basis(1)).map(|i| s.lines[i]);
    r.check(
        "spread.line_e1",
        "the line through e1 is L(e1) = {1, 246, 1246}",
        "1 246 1246",
        line_of_e1
            .map(|l| l.map(|p| p.shorthand()).join(" "))
            .unwrap_or_default(),
    );
    let split = match line_orbit_split(s, &ctx.cat.gs()) {
        Ok(split) => split,
        Err(e) => {
            r.check("spread.split", "G_S permutes the spread lines", "ok", e);
            return;
        }
    };
    r.check(
        "spread.split",
        "G_S line-orbit sizes",
        "4,18,27,36",
        sorted_sizes(split.sizes()),
    );
    let lines_of = |size: usize| -> Vec<[GfVector; 3]> {
        split
            .orbits
            .iter()
            .find(|o| o.len() == size)
            .map(|o| o.iter().map(|&i| s.lines[i]).collect())
            .unwrap_or_default()
    };
    let mut l4 = lines_of(4);
    l4.sort_unstable();
    let mut tetrad = tetrad_lines().to_vec();
    tetrad.sort_unstable();
    r.check(
        "spread.tetrad",
        "the 4-line orbit is {La, Lb, Lc, Ld} with La = {18u, 357u, 246u}",
        true,
        l4 == tetrad,
    );
    let mut l27 = lines_of(27);
    l27.sort_unstable();
    let mut tangents: Vec<[GfVector; 3]> = ctx
        .model
        .tangents
        .iter()
        .map(|t| {
            let mut t = *t;
            t.sort_unstable();
            t
        })
        .collect();
    tangents.sort_unstable();
    r.check(
        "spread.tangents",
        "the 27-line orbit is the set of distinguished tangents",
        true,
        l27 == tangents,
    );
    let points_of = |size: usize| -> PointSet { lines_of(size).into_iter().flatten().collect() };
    use GsOrbit::*;
    let c = &ctx.classifier;
    r.check(
        "spread.point_sets",
        "P(L4) = O1, P(L18) = O2, P(L36) = O3, P(L27) = O4 + O5",
        "true true true true",
        format!(
            "{} {} {} {}",
            points_of(4) == c.orbit(O1),
            points_of(18) == c.orbit(O2),
            points_of(36) == c.orbit(O3),
            points_of(27) == c.union(&[O4, O5])
        ),
    );
    let cm = ctx.cat.get("C").unwrap_or(GfMatrix::IDENTITY);
    let t = tetrad_lines();
    let names = ["a", "b", "c", "d"];
    let cycle: Vec<String> = (0..4)
        .map(|h| {
            let mut img = t[h].map(|p| cm.apply(p));
            img.sort_unstable();
            let k = t.iter().position(|l| *l == img);
            format!("{}->{}", names[h], k.map_or("?", |k| names[k]))
        })
        .collect();
    r.check(
        "spread.c_cycle",
        "C permutes the tetrad as the 4-cycle (La Lb Lc Ld)",
        "a->b b->c c->d d->a",
        cycle.join(" "),
    );
}

fn table1(r: &mut Report, ctx: &Context) {
    let part = point_orbits(&ctx.cat.gb());
    r.check(
        "table1.count",
        "number of G_B-orbits equals the number of table rows",
        TABLE1.len(),
        part.len(),
    );
    for row in &TABLE1 {
        let rep = parse_point(row.representative).expect("valid shorthand");
        let actual = match part.class_of(rep) {
            Some(class) => {
                let weights: BTreeSet<u32> = class.points.iter().map(|p| p.weight()).collect();
                let orbits: BTreeSet<String> = class
                    .points
                    .iter()
                    .map(|p| ctx.classifier.classify(p).to_string())
                    .collect();
                format!("size={} w={:?} {:?}", class.size, weights, orbits)
            }
            None => "uncovered".to_owned(),
        };
        r.check(
            &format!("table1.{}", row.label),
            &format!("class of {} in G_B", row.representative),
            format!(
                "size={} w={{{}}} {{\"{}\"}}",
                row.size, row.label.weight, row.label.orbit
            ),
            actual,
        );
    }
    r.check_with(
        "table1.bijection",
        "table rows label every G_B-orbit exactly once",
        TABLE1.len(),
        || Ok(gb_orbit_labels(&part, &ctx.classifier)?.len()),
    );
}

fn polys(r: &mut Report, ctx: &Context, seed: u64) {
    let p = match named_p_basis() {
        Ok(p) => p,
        Err(e) => {
            r.check(
                "polys.p_basis",
                "G_B orbit sums match listed expansions",
                "ok",
                e,
            );
            return;
        }
    };
    r.check(
        "polys.p_basis",
        "fifteen G_B orbit sums match every listed expansion; term counts",
        "8 12 12 4 24 8 24 6 6 8 2 24 24 8 4",
        p.iter()
            .map(|e| e.terms.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let q = match named_q() {
        Ok(q) => q,
        Err(e) => {
            r.check(
                "polys.q_routes",
                "geometric and closed forms agree",
                "ok",
                e,
            );
            return;
        }
    };
    r.check(
        "polys.q_routes",
        "Q2, Q4, Q4', Q6, Q6' agree across geometric and closed-form routes; degrees",
        "2 4 4 6 6",
        q.iter()
            .map(|e| e.degree.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.check(
        "polys.q2.explicit",
        "Q2 = 18 + 27 + 36 + 45",
        "18 + 27 + 36 + 45",
        q.get("Q2").unwrap_or_default(),
    );
    for name in ["Q2", "Q4", "Q4'", "Q6"] {
        let f = q.get(name).unwrap_or_default();
        r.check_with(
            &format!("polys.incidence.{name}"),
            &format!("{name}: incidence degree equals ANF degree"),
            f.degree(),
            || Ok(degree_by_incidence(&f.zero_set())?.degree),
        );
    }
    seven(r, &q, ctx);
    q6_identity(r, &q, ctx);
    invariants(r, ctx);
    r.check_with(
        "polys.symplectic",
        "B(x,y) = Q2(x+y)+Q2(x)+Q2(y) is bilinear, alternating, rank 8, M- and N-invariant",
        "ok",
        || certify_symplectic(&ctx.cat.gs()).map(|_| "ok"),
    );
    properties(r, ctx, seed);
}

fn seven(r: &mut Report, q: &PolyCatalog, ctx: &Context) {
    let rows = match seven_table(q, &ctx.classifier) {
        Ok(rows) => rows,
        Err(e) => {
            r.check("polys.seven", "invariants of degree at most 4", "ok", e);
            return;
        }
    };
    for (row, (name, deg, vals, size)) in rows.iter().zip(SEVEN_TABLE) {
        let shown = |v: &[Option<u8>]| {
            v.iter()
                .map(|x| x.map_or("*".to_owned(), |b| b.to_string()))
                .collect::<String>()
        };
        r.check(
            &format!("polys.seven.{name}"),
            &format!("{name}: degree, values on O1..O5, |psi|"),
            format!("{deg} {} {size}", shown(&vals.map(Some))),
            format!(
                "{} {} {}",
                row.degree,
                shown(&row.values),
                row.zero_set_size
            ),
        );
    }
}

fn q6_identity(r: &mut Report, q: &PolyCatalog, ctx: &Context) {
    let get = |n: &str| q.get(n).unwrap_or_default();
    let (q2, q4, q4p, q6) = (get("Q2"), get("Q4"), get("Q4'"), get("Q6"));
    r.check(
        "polys.q6_identity",
        "Q2 Q4' + Q4 + Q4' = Q6 as reduced polynomials",
        q6.to_hex(),
        (q2 * q4p + q4 + q4p).to_hex(),
    );
    r.check(
        "polys.q6_identity.terms",
        "the unreduced product Q2 Q4' has 4 x 50 = 200 terms",
        200,
        q2.term_count() * q4p.term_count(),
    );
    r.check(
        "polys.q6p.zero_set",
        "Q6' = P5 + P6 vanishes exactly off O1",
        true,
        get("Q6'").zero_set() == ctx.classifier.orbit(GsOrbit::O1).complement(),
    );
}

fn invariants(r: &mut Report, ctx: &Context) {
    r.check_with(
        "polys.invariants.gb4",
        "G_B-invariant polynomials of degree at most 4 form a space of dimension 13",
        13,
        || Ok(invariant_subspace(&ctx.cat.gb(), 4)?.len()),
    );
    let gs = ctx.cat.gs();
    r.check_with(
        "polys.invariants.gs",
        "G_S-invariant dimension at degree bounds 2, 4, 6, 7",
        "1 3 4 4",
        || {
            let dims = [2, 4, 6, 7]
                .iter()
                .map(|&d| invariant_subspace(&gs, d).map(|b| b.len().to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(dims.join(" "))
        },
    );
    r.check_with(
        "polys.invariants.nesting",
        "each invariant basis element lies in the invariant space of the next bound",
        true,
        || {
            let mut ok = true;
            for d in 1..7 {
                let next: Vec<Anf> = invariant_polynomials(&gs, d + 1)?;
                for f in invariant_subspace(&gs, d)? {
                    ok &= next.contains(&f);
                }
            }
            Ok(ok)
        },
    );
    let all = invariant_polynomials(&gs, 7);
    r.check_with(
        "polys.invariants.census",
        "fifteen G_S-invariant polynomials of degree < 8: one quadratic, six quartics, eight sextics",
        "15 {2: 1, 4: 6, 6: 8}",
        || {
            let all = all.as_ref().map_err(Clone::clone)?;
            let mut census = BTreeMap::new();
            for f in all {
                *census.entry(f.degree()).or_insert(0) += 1;
            }
            Ok(format!("{} {census:?}", all.len()))
        },
    );
    r.check_with(
        "polys.invariants.incidence",
        "incidence degree equals ANF degree on all fifteen invariant point-sets",
        15,
        || {
            let all = all.as_ref().map_err(Clone::clone)?;
            let mut agree = 0;
            for f in all {
                if degree_by_incidence(&f.zero_set())?.degree == f.degree() {
                    agree += 1;
                }
            }
            Ok(agree)
        },
    );
}

fn random_pointset(rng: &mut ChaCha8Rng) -> PointSet {
    PointSet::from_bits(Bits256(rng.gen())) & PointSet::all()
}

fn random_invertible(rng: &mut ChaCha8Rng) -> GfMatrix {
    loop {
        let a = GfMatrix::from_u64(rng.gen());
        if a.is_invertible() {
            return a;
        }
    }
}

fn properties(r: &mut Report, ctx: &Context, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unions = 0;
    for mask in 0u8..32 {
        let orbits: Vec<GsOrbit> = GsOrbit::ALL
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &o)| o)
            .collect();
        let psi = ctx.classifier.union(&orbits);
        if anf_from_pointset(&psi).zero_set() == psi {
            unions += 1;
        }
    }
    r.check(
        "polys.roundtrip.orbit_unions",
        "point-set to equation and back on all 32 orbit unions",
        32,
        unions,
    );
    let mut roundtrips = 0;
    let mut degree_law = 0;
    for _ in 0..1000 {
        let psi = random_pointset(&mut rng);
        let f = anf_from_pointset(&psi);
        if f.zero_set() == psi && !f.constant_term() {
            roundtrips += 1;
        }
        let lawful = if psi.len() % 2 == 1 {
            f.degree() <= 7
        } else {
            psi == PointSet::all() || f.degree() == 8
        };
        if lawful {
            degree_law += 1;
        }
    }
    r.check(
        "polys.roundtrip.random",
        "point-set to equation and back on 1000 seeded random sets",
        1000,
        roundtrips,
    );
    r.check(
        "polys.degree_law",
        "odd sets have degree at most 7, other even sets degree 8 (1000 random sets)",
        1000,
        degree_law,
    );
    let mut preserved = 0;
    for _ in 0..100 {
        let f = Anf(Bits256(rng.gen()));
        let a = random_invertible(&mut rng);
        if substitute(&f, &a).is_ok_and(|g| g.degree() == f.degree()) {
            preserved += 1;
        }
    }
    r.check(
        "polys.degree_invariance",
        "degree is unchanged by 100 seeded random coordinate changes",
        100,
        preserved,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn spread_suite_passes() {
        let report = run_suite(Suite::Spread, DEFAULT_SEED);
        assert!(report.all_passed(), "{report}");
        assert!(report
            .checks
            .iter()
            .any(|c| c.description == "85 disjoint lines cover 255 points"));
    }
}
