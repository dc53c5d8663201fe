//! Point orbits of G_S and G_B, with the definitional classifier labels.

use segre_pg72::export::{orbit_table, render_orbit_table, Format, Group};

fn main() -> segre_pg72::Result<()> {
    for group in [Group::Gs, Group::Gs0, Group::Gb] {
        println!("{group:?}");
        println!(
            "{}\n",
            render_orbit_table(&orbit_table(group)?, Format::Text)?
        );
    }
    Ok(())
}
