//! G_S-invariant polynomials: the solver, the named Q's and the value table.

use segre_pg72::anf::{invariant_polynomials, invariant_subspace, named_q, seven_table};
use segre_pg72::groups::named_elements;
use segre_pg72::orbits::Classifier;
use segre_pg72::segre::build_model;

fn main() -> segre_pg72::Result<()> {
    let cat = named_elements()?;
    for d in [2, 4, 6, 7] {
        println!(
            "dim of invariants of degree <= {d}: {}",
            invariant_subspace(&cat.gs(), d)?.len()
        );
    }
    let all = invariant_polynomials(&cat.gs(), 7)?;
    println!("{} nonzero invariants of degree < 8", all.len());

    let q = named_q()?;
    println!("Q2 = {}", q.get("Q2").unwrap_or_default());
    let classifier = Classifier::new(&build_model()?)?;
    println!("{:<10} deg  O1 O2 O3 O4 O5  |psi|", "");
    for row in seven_table(&q, &classifier)? {
        let vals: Vec<String> = row
            .values
            .iter()
            .map(|v| v.map_or("*".into(), |b| b.to_string()))
            .collect();
        println!(
            "{:<10} {:>3}  {}  {:>5}",
            row.name,
            row.degree,
            vals.join("  "),
            row.zero_set_size
        );
    }
    Ok(())
}
