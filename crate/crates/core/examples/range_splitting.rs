// Dendriform structures on the range of an operator, and how they split
// the algebra product.

use dendrop::constructions::{check_splitting, kernel_ideal_check, range_dendriform_quotient, range_dendriform_tri};
use dendrop::exactlin::{FieldSpec, Matrix, PivotRule, StructureTensor};
use dendrop::operators::{rb_as_o_operator, RotaBaxterOperator};
use dendrop::structures::{validate_dendriform_tri, Algebra, Dendriform};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::Rational;
    let n2 = Algebra::new(StructureTensor::from_ratios(q, 2, &[(1, 1, 0, 1, 1)]));

    // invertible: transport the domain structure along α
    let p = Matrix::diagonal(q, &[q.parse_scalar("1/8")?, q.parse_scalar("1/2")?]);
    let op = rb_as_o_operator(&RotaBaxterOperator::new(n2.clone(), p, q.one())?)?;
    let t = range_dendriform_tri(&op)?;
    print!("{}", validate_dendriform_tri(&t));
    print!("{}", check_splitting(&t, &n2)?);

    // rank one on F×F: work on R / ker α
    let split = Algebra::new(StructureTensor::from_ratios(q, 2, &[(0, 0, 0, 1, 1), (1, 1, 1, 1, 1)]));
    let p = Matrix::diagonal(q, &[q.from_i64(-1), q.zero()]);
    let op = rb_as_o_operator(&RotaBaxterOperator::new(split, p, q.one())?)?;
    println!("kernel is an ideal: {}", kernel_ideal_check(&op));
    let low = range_dendriform_quotient(&op, PivotRule::LowestIndex)?;
    let high = range_dendriform_quotient(&op, PivotRule::HighestIndex)?;
    assert_eq!(low, high);
    println!("image of dimension {}, spanned by {:?}", low.tri.dim(), low.embedding.column(0).iter().map(ToString::to_string).collect::<Vec<_>>());
    print!("{}", check_splitting(&low.tri, &low.image_algebra)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
