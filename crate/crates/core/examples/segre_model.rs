//! The 27 points of the Segre variety and their attributes.

use segre_pg72::segre::build_model;

fn main() -> segre_pg72::Result<()> {
    let model = build_model()?;
    println!(
        "{} points, {} generators",
        model.points.len(),
        model.generators.len()
    );
    for (i, (index, p)) in model.points.iter().enumerate().take(6) {
        let [a, b, c] = model.tangents[i];
        println!(
            "{index} = {p:<6} tangent {{{a}, {b}, {c}}}, Z(p) of dim {}",
            model.z_flats[i].dim()
        );
    }
    println!("...");
    println!("tangent points: {}", model.tangent_points().len());
    Ok(())
}
