//! The centralizer {I, W, W^2} of G_S^0 and the 85-line spread it defines.

use segre_pg72::groups::{centralizer_in_gl, named_elements};
use segre_pg72::orbits::{line_orbit_split, spread_from_w, tetrad_lines};

fn main() -> segre_pg72::Result<()> {
    let cat = named_elements()?;
    let z = centralizer_in_gl(&cat.gs0())?;
    println!("centralizer of G_S^0 has order {:?}", z.order());

    let w = cat.w();
    for j in 1..=8 {
        println!("W: e{j} -> {}", w.image(j));
    }

    let spread = spread_from_w(&w)?;
    println!(
        "{} lines, spread: {}",
        spread.lines.len(),
        spread.is_spread()
    );
    let split = line_orbit_split(&spread, &cat.gs())?;
    println!("G_S line orbits: {:?}", split.sizes());
    for (name, [a, b, c]) in ["La", "Lb", "Lc", "Ld"].iter().zip(tetrad_lines()) {
        println!("{name} = {{{a}, {b}, {c}}}");
    }
    Ok(())
}
