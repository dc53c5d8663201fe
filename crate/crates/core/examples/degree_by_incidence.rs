//! Degree of a point set from how flats meet it, against the ANF degree.

use segre_pg72::anf::{anf_from_pointset, degree_by_incidence, named_q};
use segre_pg72::orbits::{Classifier, GsOrbit};
use segre_pg72::segre::build_model;

fn main() -> segre_pg72::Result<()> {
    let q = named_q()?;
    for name in ["Q2", "Q4", "Q4'", "Q6"] {
        let f = q.get(name).unwrap_or_default();
        let found = degree_by_incidence(&f.zero_set())?;
        println!(
            "{name:<4} ANF degree {}, incidence degree {} (witness of dim {} meeting psi in {})",
            f.degree(),
            found.degree,
            found.witness.dim(),
            found.witness_meet
        );
    }

    let s = Classifier::new(&build_model()?)?.orbit(GsOrbit::O5);
    let found = degree_by_incidence(&s)?;
    println!(
        "S: degree {} = ANF degree {}, witness {:?}",
        found.degree,
        anf_from_pointset(&s).degree(),
        found.witness
    );
    Ok(())
}
