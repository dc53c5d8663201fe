//! Deterministic exports of the computed objects as JSON, CSV or text.
//!
//! Every listing is in a fixed order (points by integer mask, lines and
//! classes by smallest point), so identical calls give identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::anf::{named_p_basis, named_q, PolyCatalog};
use crate::error::{domain, parse, Result};
use crate::gf2::{GfVector, PointSet};
use crate::groups::named_elements;
use crate::orbits::{
    gb_orbit_labels, point_orbits, segre_triplet, spread_from_w, Classifier, OrbitPartition,
};
use crate::segre::{build_model, SegreModel};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    Gs,
    Gs0,
    Gb,
}

impl FromStr for Group {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Group> {
        match s {
            "GS" => Ok(Group::Gs),
            "GS0" => Ok(Group::Gs0),
            "GB" => Ok(Group::Gb),
            _ => Err(parse(format!(
                "unknown group {s:?}; expected GS, GS0 or GB"
            ))),
        }
    }
}

/// One orbit of a point-orbit table.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitEntry {
    pub label: String,
    pub size: usize,
    pub representative: GfVector,
    /// `weight_histogram[w]` = number of points of weight `w`.
    pub weight_histogram: [usize; 9],
}

fn label_partition(
    part: &OrbitPartition,
    label: impl Fn(&PointSet) -> Result<String>,
) -> Result<Vec<OrbitEntry>> {
    part.classes
        .iter()
        .map(|c| {
            Ok(OrbitEntry {
                label: label(&c.points)?,
                size: c.size,
                representative: c.representative,
                weight_histogram: c.weight_histogram(),
            })
        })
        .collect()
}

/// Point orbits of a group, labelled `O1..O5`, `O1, O2, O3, S, S', S''`,
/// or `Oi,w` as appropriate, ordered by representative.
pub fn orbit_table(group: Group) -> Result<Vec<OrbitEntry>> {
    let cat = named_elements()?;
    let model = build_model()?;
    let classifier = Classifier::new(&model)?;
    match group {
        Group::Gs => {
            let part = point_orbits(&cat.gs());
            label_partition(&part, |pts| {
                let p = pts.min_point().ok_or_else(|| domain("empty orbit"))?;
                Ok(classifier.classify(p).to_string())
            })
        }
        Group::Gs0 => {
            let part = point_orbits(&cat.gs0());
            let t = segre_triplet(&model, &cat)?;
            label_partition(&part, |pts| {
                Ok(if *pts == t.s {
                    "S".to_owned()
                } else if *pts == t.s1 {
                    "S'".to_owned()
                } else if *pts == t.s2 {
                    "S''".to_owned()
                } else {
                    let p = pts.min_point().ok_or_else(|| domain("empty orbit"))?;
                    classifier.classify(p).to_string()
                })
            })
        }
        Group::Gb => {
            let part = point_orbits(&cat.gb());
            let labels = gb_orbit_labels(&part, &classifier)?;
            let mut entries = label_partition(&part, |_| Ok(String::new()))?;
            for (e, l) in entries.iter_mut().zip(labels) {
                e.label = l.to_string();
            }
            Ok(entries)
        }
    }
}

pub fn render_orbit_table(entries: &[OrbitEntry], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(pretty(&entries)),
        Format::Csv => {
            let mut out = String::from("label,size,representative,weight_histogram\n");
            for e in entries {
                let hist: Vec<String> = e.weight_histogram.iter().map(|n| n.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(&e.label),
                    e.size,
                    e.representative,
                    hist.join(" ")
                );
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = format!("{:<8} {:>5}  {:<10} weights 0..8\n", "orbit", "size", "rep");
            for e in entries {
                let hist: Vec<String> = e.weight_histogram.iter().map(|n| n.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{:<8} {:>5}  {:<10} {}",
                    e.label,
                    e.size,
                    e.representative.to_string(),
                    hist.join(" ")
                );
            }
            let total: usize = entries.iter().map(|e| e.size).sum();
            let _ = write!(out, "{} orbits, {} points", entries.len(), total);
            Ok(out)
        }
    }
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("exports always serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Every point with its `G_S`-orbit, `G_B`-orbit and weight.
pub fn export_orbits(format: Format) -> Result<String> {
    let cat = named_elements()?;
    let classifier = Classifier::new(&build_model()?)?;
    let part = point_orbits(&cat.gb());
    let labels = gb_orbit_labels(&part, &classifier)?;
    let rows: Vec<_> = GfVector::points()
        .map(|p| {
            let k = part
                .classes
                .iter()
                .position(|c| c.points.contains(p))
                .expect("orbits cover every point");
            (p, classifier.classify(p).to_string(), labels[k].to_string())
        })
        .collect();
    Ok(match format {
        Format::Json => pretty(
            &rows
                .iter()
                .map(|(p, gs, gb)| {
                    json!({"point": p, "GS_orbit": gs, "GB_orbit": gb, "weight": p.weight()})
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv | Format::Text => {
            let mut out = String::from("point,GS_orbit,GB_orbit,weight\n");
            for (p, gs, gb) in &rows {
                let _ = writeln!(out, "{},{},{},{}", p, gs, csv_field(gb), p.weight());
            }
            out
        }
    })
}

/// The 85 lines of the spread, each as three points in increasing order.
pub fn export_spread(format: Format) -> Result<String> {
    let spread = spread_from_w(&named_elements()?.w())?;
    Ok(match format {
        Format::Json => pretty(&spread.lines),
        Format::Csv | Format::Text => {
            let mut out = String::from("line,p1,p2,p3\n");
            for (i, [a, b, c]) in spread.lines.iter().enumerate() {
                let _ = writeln!(out, "{},{a},{b},{c}", i + 1);
            }
            out
        }
    })
}

/// The fifteen `P` polynomials followed by the five `Q` polynomials.
pub fn poly_catalog() -> Result<PolyCatalog> {
    Ok(named_p_basis()?.merged(named_q()?))
}

pub fn export_polys(format: Format) -> Result<String> {
    let cat = poly_catalog()?;
    Ok(match format {
        Format::Json => pretty(
            &cat.iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "degree": e.degree,
                        "terms": e.terms,
                        "hex": e.poly.to_hex(),
                        "monomials": e.poly,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv | Format::Text => {
            let mut out = String::from("name,degree,terms,hex\n");
            for e in cat.iter() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(e.name),
                    e.degree,
                    e.terms,
                    e.poly.to_hex()
                );
            }
            out
        }
    })
}

fn model_json(model: &SegreModel) -> serde_json::Value {
    json!({
        "points": model
            .points
            .iter()
            .map(|(m, p)| json!({"index": m.to_string(), "point": p}))
            .collect::<Vec<_>>(),
        "generators": model.generators,
        "sub_segres": model
            .sub_segres
            .iter()
            .map(|s| json!({
                "position": s.position,
                "value": s.value,
                "points": s.points,
                "ambient": s.ambient,
            }))
            .collect::<Vec<_>>(),
        "z_flats": model.z_flats,
        "tangents": model.tangents,
    })
}

/// The Segre model with every attribute family; JSON only.
pub fn export_model(format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(pretty(&model_json(&build_model()?))),
        _ => Err(domain("the model is exported as JSON only")),
    }
}
