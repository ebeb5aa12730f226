// Isomorphism witnesses, operator equivalence, and exhaustive search over
// GL_n(F_p).

use dendrop::catalogue::catalogue_entry;
use dendrop::equivalence::{induced_intertwiner, search_dendriform_iso_fp, verify_dendriform_iso, verify_operator_equiv};
use dendrop::exactlin::{FieldSpec, Matrix, StructureTensor};
use dendrop::operators::{rb_as_o_operator, twist_by_range_automorphism, RotaBaxterOperator};
use dendrop::structures::{Algebra, DendriformDi};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f3 = FieldSpec::prime(3)?;
    let d1 = catalogue_entry("rb-3").unwrap().dendriform.to_field(f3)?;
    let h = Matrix::from_i64_rows(f3, &[&[1, 1], &[0, 2]]);
    let d2 = DendriformDi::new(d1.prec().transport(&h)?, d1.succ().transport(&h)?)?;
    print!("{}", verify_dendriform_iso(&d1, &d2, &h)?);

    let found = search_dendriform_iso_fp(&d1, &d2)?;
    let w = found.witness.expect("isomorphic");
    println!("search: witness after {} candidates", found.candidates_examined);
    assert!(verify_dendriform_iso(&d1, &d2, &w.matrix)?.passed);

    let four = catalogue_entry("rb-4").unwrap().dendriform.to_field(f3)?;
    let six = catalogue_entry("rb-6").unwrap().dendriform.to_field(f3)?;
    let none = search_dendriform_iso_fp(&four, &six)?;
    println!("rb-4 vs rb-6 over F_3: found {} after {} candidates", none.found(), none.candidates_examined);

    // twisting by an automorphism of the algebra gives an equivalent operator
    let q = FieldSpec::Rational;
    let n2 = Algebra::new(StructureTensor::from_ratios(q, 2, &[(1, 1, 0, 1, 1)]));
    let p = Matrix::diagonal(q, &[q.parse_scalar("1/8")?, q.parse_scalar("1/2")?]);
    let op1 = rb_as_o_operator(&RotaBaxterOperator::new(n2, p, q.one())?)?;
    let f = Matrix::diagonal(q, &[q.from_i64(4), q.from_i64(2)]);
    let op2 = twist_by_range_automorphism(&op1, &f)?;
    print!("{}", verify_operator_equiv(&op1, &op2, &f, &Matrix::identity(q, 2))?);
    let (g, rep) = induced_intertwiner(&op2, &op2)?;
    assert!(rep.passed && g == Matrix::identity(q, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
