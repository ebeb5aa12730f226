// Over F_2 in dimension 2, most dendriform dialgebras do not come from a
// weight-0 Rota-Baxter operator on their own space, yet every one of them
// comes from an O-operator.

use dendrop::constructions::{canonical_operator_from_di, domain_dendriform_di};
use dendrop::enumeration::{Enumeration, PhiImage};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let run = Enumeration::default();
    let phi = run.phi_image(2, 2)?;
    println!("{}", PhiImage::LABEL);
    println!(
        "associative products {}, Rota-Baxter pairs {}, dialgebras {}, image {}, missing {}",
        phi.associative_algebras,
        phi.rb_pairs,
        phi.all.len(),
        phi.image.len(),
        phi.missing.len()
    );
    let d = &phi.missing[0];
    let (_, op) = canonical_operator_from_di(d)?;
    assert_eq!(&domain_dendriform_di(&op)?, d);
    let show = |t: &dendrop::exactlin::StructureTensor| {
        t.nonzero().map(|(i, j, k, c)| format!("e{}e{} = {} e{}", i + 1, j + 1, c, k + 1)).collect::<Vec<_>>()
    };
    println!("first missing: prec {:?}, succ {:?}", show(d.prec()), show(d.succ()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
