//! Orders of the named groups by explicit closure and by Schreier-Sims.

use std::time::Instant;

use segre_pg72::groups::{closure, named_elements, schreier_sims, DEFAULT_CAP};

fn main() -> segre_pg72::Result<()> {
    let cat = named_elements()?;
    for gens in ["M,N", "M',N", "M,K12"] {
        let g = cat.resolve_list(gens)?;
        let explicit = closure(&g, DEFAULT_CAP)?.order().unwrap_or(0);
        println!(
            "<{gens}>: closure {explicit}, Schreier-Sims {}",
            schreier_sims(&g)
        );
    }
    // Too large to enumerate; only the stabilizer chain sees these.
    for gens in ["M,N,K", "M,N,K'"] {
        let t = Instant::now();
        let order = schreier_sims(&cat.resolve_list(gens)?);
        println!("<{gens}>: {order} ({:?})", t.elapsed());
    }
    Ok(())
}
