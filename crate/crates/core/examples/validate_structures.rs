// Checking identities on basis elements and reading the violations.

use dendrop::catalogue::catalogue_entry;
use dendrop::exactlin::{FieldSpec, StructureTensor};
use dendrop::structures::{canonical_bimodule, validate_associativity, validate_bimodule_algebra, validate_dendriform_di, Algebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::Rational;

    // e2*e2 = e1
    let n2 = Algebra::new(StructureTensor::from_ratios(q, 2, &[(1, 1, 0, 1, 1)]));
    let rep = validate_associativity(&n2);
    print!("{rep}");
    assert!(rep.passed);

    // e1*e1 = e2, e2*e1 = e1 is not associative
    let bad = Algebra::new(StructureTensor::from_ratios(q, 2, &[(0, 0, 1, 1, 1), (1, 0, 0, 1, 1)]));
    let rep = validate_associativity(&bad);
    print!("{rep}");
    assert!(!rep.passed);
    let v = rep.first().unwrap();
    println!("first failure at basis indices {:?}", v.indices);

    // A acting on itself by multiplication
    let regular = canonical_bimodule(&n2)?;
    assert!(validate_bimodule_algebra(&regular).passed);

    for name in ["rb-3", "extra-5", "extra-2"] {
        let d = catalogue_entry(name).unwrap().dendriform;
        let rep = validate_dendriform_di(&d);
        print!("{name}: {rep}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
