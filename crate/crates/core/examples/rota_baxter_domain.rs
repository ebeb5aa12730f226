// A Rota-Baxter operator turns its algebra into a dendriform structure.

use dendrop::catalogue::catalogue_entry;
use dendrop::constructions::{check_operator_homomorphism, domain_dendriform_di, domain_dendriform_tri};
use dendrop::exactlin::{FieldSpec, Matrix, StructureTensor};
use dendrop::operators::{rb_as_o_operator, validate_o_operator, validate_rota_baxter, RotaBaxterOperator};
use dendrop::structures::{validate_dendriform_tri, Algebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::Rational;
    let half = q.parse_scalar("1/2")?;
    let n2 = Algebra::new(StructureTensor::from_ratios(q, 2, &[(1, 1, 0, 1, 1)]));

    // weight 0: x≺y = x P(y), x≻y = P(x) y
    let p = Matrix::diagonal(q, &[q.parse_scalar("1/4")?, half.clone()]);
    let rb = RotaBaxterOperator::new(n2.clone(), p, q.zero())?;
    print!("{}", validate_rota_baxter(&rb));
    let op = rb_as_o_operator(&rb)?.as_module();
    assert!(validate_o_operator(&op).passed);
    let d = domain_dendriform_di(&op)?;
    assert_eq!(d, catalogue_entry("rb-2").unwrap().dendriform);
    println!("domain dialgebra is rb-2: e2≺e2 = e2≻e2 = 1/2 e1");

    // weight 1 adds x·y = xy
    let p1 = Matrix::diagonal(q, &[q.parse_scalar("1/8")?, half]);
    let rb1 = RotaBaxterOperator::new(n2, p1, q.one())?;
    assert!(validate_rota_baxter(&rb1).passed);
    let op1 = rb_as_o_operator(&rb1)?;
    let t = domain_dendriform_tri(&op1)?;
    print!("{}", validate_dendriform_tri(&t));
    print!("{}", check_operator_homomorphism(&op1, &t));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
