//! Points, flats and the incidence scan in PG(7,2).
//!
//! Run with `cargo run --example gf2_flats`.

use segre_pg72::gf2::{flats_of_dimension, gaussian_binomial, parse_point, Flat};

fn main() -> segre_pg72::Result<()> {
    let p = parse_point("1246")?;
    println!("1246 = {} (mask {}), weight {}", p, p.to_hex(), p.weight());
    // 13456 and 278u name the same point: u is the all-ones vector.
    println!("13456 -> {}", parse_point("13456")?);

    let plane = Flat::span(&[parse_point("1")?, parse_point("246")?])?;
    let pts: Vec<String> = plane.points().map(|q| q.to_string()).collect();
    println!("span(1, 246) has dim {}: {}", plane.dim(), pts.join(" "));

    for d in 0..8usize {
        println!(
            "{d}-flats: {:>6} (Gaussian binomial [8, {}]_2 = {})",
            flats_of_dimension(d)?.count(),
            d + 1,
            gaussian_binomial(8, d as u32 + 1)
        );
    }
    Ok(())
}
