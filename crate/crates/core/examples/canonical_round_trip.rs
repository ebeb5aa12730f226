// Every dendriform structure is the domain structure of an O-operator:
// the identity map from the structure to its star algebra.

use dendrop::catalogue::catalogue_entry;
use dendrop::constructions::{canonical_operator_from_di, canonical_operator_from_tri, domain_dendriform_di, domain_dendriform_tri};
use dendrop::operators::validate_o_operator;
use dendrop::structures::star_product;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // not obtainable from a Rota-Baxter operator on its own space
    let d = catalogue_entry("extra-1").unwrap().dendriform;
    let (bimodule, op) = canonical_operator_from_di(&d)?;
    println!("star algebra product constants: {:?}", star_product(&d).product().nonzero().count());
    println!("bimodule of dimension {}", bimodule.dim());
    print!("{}", validate_o_operator(&op));
    assert_eq!(domain_dendriform_di(&op)?, d);

    let t = catalogue_entry("rb-3").unwrap().dendriform.to_tri();
    let (_, op) = canonical_operator_from_tri(&t)?;
    assert_eq!(domain_dendriform_tri(&op)?, t);
    println!("round trips exact");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
