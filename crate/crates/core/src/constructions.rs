//! Dendriform structures built from O-operators, on the domain and on the
//! range, and the canonical O-operator of a dendriform structure.

use crate::error::{Error, Result};
use crate::exactlin::{axpy, in_span, zero_vector, Matrix, PivotRule, StructureTensor, Vector};
use crate::operators::{validate_o_operator, OOperator, OperatorKind};
use crate::report::{ValidationReport, Validator};
use crate::structures::{
    validate_bimodule_algebra, Algebra, Bimodule, BimoduleAlgebra, Dendriform, DendriformDi,
    DendriformTri,
};

fn require_kind(op: &OOperator, kind: OperatorKind) -> Result<()> {
    if op.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind.as_str(),
        });
    }
    Ok(())
}

fn require_valid(op: &OOperator) -> Result<()> {
    let rep = validate_o_operator(op);
    match rep.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidOperator(format!("{} fails at {:?}", v.axiom, v.indices))),
    }
}

fn tensor_from_fn(op: &OOperator, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> StructureTensor {
    let mut t = StructureTensor::zero(op.field(), dim);
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in f(i, j).into_iter().enumerate() {
                t.set(i, j, k, c);
            }
        }
    }
    t
}

/// `u≺v = u r(α(v))` and `u≻v = ℓ(α(u))v`, without checking the operator.
fn domain_pair(op: &OOperator) -> (StructureTensor, StructureTensor) {
    let bm = op.domain().bimodule();
    let m = bm.dim();
    let lefts: Vec<Matrix> = (0..m).map(|u| bm.left_action(&op.map().column(u))).collect();
    let rights: Vec<Matrix> = (0..m).map(|v| bm.right_action(&op.map().column(v))).collect();
    let prec = tensor_from_fn(op, m, |u, v| rights[v].column(u));
    let succ = tensor_from_fn(op, m, |u, v| lefts[u].column(v));
    (prec, succ)
}

/// The trialgebra on the domain of a valid algebra-kind operator, with
/// `u·v = λ u∘v`.
pub fn domain_dendriform_tri(op: &OOperator) -> Result<DendriformTri> {
    require_kind(op, OperatorKind::Algebra)?;
    require_valid(op)?;
    let (prec, succ) = domain_pair(op);
    let weight = op.weight().expect("algebra kind carries a weight");
    let dot = op.domain().product().expect("algebra kind carries a product").scale(weight);
    DendriformTri::new(prec, succ, dot)
}

/// The dialgebra on the domain of a valid module-kind operator.
pub fn domain_dendriform_di(op: &OOperator) -> Result<DendriformDi> {
    require_kind(op, OperatorKind::Module)?;
    require_valid(op)?;
    let (prec, succ) = domain_pair(op);
    DendriformDi::new(prec, succ)
}

/// `α(u ⋆ v) = α(u)*α(v)` on basis pairs of the domain.
pub fn check_operator_homomorphism<D: Dendriform + ?Sized>(op: &OOperator, dend: &D) -> ValidationReport {
    let mut c = Validator::default().checker("operator homomorphism");
    let star = dend.star_product();
    let t = op.codomain().product();
    let m = op.domain().dim();
    if dend.dim() != m {
        let f = op.field();
        let (d, m) = (f.from_i64(dend.dim() as i64), f.from_i64(m as i64));
        c.compare("dim(dendriform) = dim(domain)", &[], &[d], &[m]);
        return c.finish();
    }
    let images: Vec<Vector> = (0..m).map(|u| op.map().column(u)).collect();
    for u in 0..m {
        for v in 0..m {
            let lhs = op.map().mul_vec(star.product().basis_product(u, v));
            let rhs = t.product(&images[u], &images[v]);
            c.compare("α(u⋆v) = α(u)*α(v)", &[u, v], &lhs, &rhs);
        }
    }
    c.finish()
}

fn require_dendriform<D: Dendriform>(d: &D) -> Result<()> {
    match d.validate().first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidDendriform(format!("{} fails at {:?}", v.axiom, v.indices))),
    }
}

/// `(V, ⋆)` acting on `V` by `L_≻` on the left and `R_≺` on the right.
fn canonical_actions(prec: &StructureTensor, succ: &StructureTensor, star: Algebra) -> Result<Bimodule> {
    let n = star.dim();
    let left = (0..n).map(|i| succ.left_multiplication(i)).collect();
    let right = (0..n).map(|i| prec.right_multiplication(i)).collect();
    Bimodule::new(star, n, left, right)
}

/// The identity map as a weight-1 O-operator from `(V, ·, L_≻, R_≺)` to
/// `(V, ⋆)`. Its domain trialgebra is `t` again; that and the validity of
/// every intermediate structure are checked before returning.
pub fn canonical_operator_from_tri(t: &DendriformTri) -> Result<(BimoduleAlgebra, OOperator)> {
    require_dendriform(t)?;
    let field = t.field();
    let bm = canonical_actions(t.prec(), t.succ(), t.star_product())?;
    let domain = BimoduleAlgebra::new(bm, t.dot().clone())?;
    if let Some(v) = validate_bimodule_algebra(&domain).first() {
        return Err(Error::Postcondition(format!("bimodule algebra: {} at {:?}", v.axiom, v.indices)));
    }
    let op = OOperator::on_algebra(domain.clone(), Matrix::identity(field, t.dim()), field.one())?;
    let back = domain_dendriform_tri(&op).map_err(|e| Error::Postcondition(e.to_string()))?;
    if &back != t {
        return Err(Error::Postcondition("round trip does not return the trialgebra".into()));
    }
    Ok((domain, op))
}

/// The dialgebra version: zero product on the domain, module-kind operator.
pub fn canonical_operator_from_di(d: &DendriformDi) -> Result<(Bimodule, OOperator)> {
    require_dendriform(d)?;
    let bm = canonical_actions(d.prec(), d.succ(), d.star_product())?;
    let op = OOperator::on_module(bm.clone(), Matrix::identity(d.field(), d.dim()))?;
    let back = domain_dendriform_di(&op).map_err(|e| Error::Postcondition(e.to_string()))?;
    if &back != d {
        return Err(Error::Postcondition("round trip does not return the dialgebra".into()));
    }
    Ok((bm, op))
}

/// Whether `ker α` is a two-sided ideal of `(R, ∘)`. Module-kind operators
/// have no product, so the answer is always yes.
pub fn kernel_ideal_check(op: &OOperator) -> bool {
    let Some(circ) = op.domain().product() else {
        return true;
    };
    let kernel = op.map().kernel_basis();
    let m = op.domain().dim();
    let f = op.field();
    kernel.iter().all(|k| {
        (0..m).all(|v| {
            let e = crate::exactlin::unit_vector(f, m, v);
            in_span(&kernel, &circ.product(k, &e)) && in_span(&kernel, &circ.product(&e, k))
        })
    })
}

/// Products on the range of an invertible operator, in the basis of `A`.
fn range_invertible(op: &OOperator) -> Result<(StructureTensor, StructureTensor, Option<StructureTensor>)> {
    require_valid(op)?;
    let alpha = op.map();
    if !alpha.is_square() {
        return Err(Error::Singular);
    }
    let alpha_inv = alpha.invert()?;
    let bm = op.domain().bimodule();
    let n = alpha.rows();
    let conj = |m: &Matrix| alpha.mul(m).mul(&alpha_inv);
    let rights: Vec<Matrix> = bm.right_matrices().iter().map(conj).collect();
    let lefts: Vec<Matrix> = bm.left_matrices().iter().map(conj).collect();
    let prec = tensor_from_fn(op, n, |x, y| rights[y].column(x));
    let succ = tensor_from_fn(op, n, |x, y| lefts[x].column(y));
    let dot = op.domain().product().map(|circ| {
        let w = op.weight().expect("algebra kind carries a weight");
        let pre: Vec<Vector> = (0..n).map(|x| alpha_inv.column(x)).collect();
        tensor_from_fn(op, n, |x, y| alpha.mul_vec(&circ.product(&pre[x], &pre[y]))).scale(w)
    });
    Ok((prec, succ, dot))
}

/// `x≺y = α(α⁻¹(x) r(y))`, `x≻y = α(ℓ(x)α⁻¹(y))`, `x·y = λα(α⁻¹(x)∘α⁻¹(y))`.
pub fn range_dendriform_tri(op: &OOperator) -> Result<DendriformTri> {
    require_kind(op, OperatorKind::Algebra)?;
    let (prec, succ, dot) = range_invertible(op)?;
    DendriformTri::new(prec, succ, dot.expect("algebra kind"))
}

/// `x≺y = α(α⁻¹(x) r(y))`, `x≻y = α(ℓ(x)α⁻¹(y))`.
pub fn range_dendriform_di(op: &OOperator) -> Result<DendriformDi> {
    require_kind(op, OperatorKind::Module)?;
    let (prec, succ, _) = range_invertible(op)?;
    DendriformDi::new(prec, succ)
}

/// The range structure of a possibly non-invertible operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeQuotient {
    /// Products on `α(R)`, in the basis given by the columns of `embedding`.
    pub tri: DendriformTri,
    /// `dim A × rank α`; column `a` is the `a`-th image basis vector.
    pub embedding: Matrix,
    /// `(α(R), *)` in the same basis.
    pub image_algebra: Algebra,
}

/// Range construction through `R / ker α`. The image basis is the reduced
/// row echelon basis of the column space of `α`, so it depends only on the
/// image. Preimages are chosen by `solve` under `rule`; when `ker α` is an
/// ideal the result does not depend on that choice.
pub fn range_dendriform_quotient(op: &OOperator, rule: PivotRule) -> Result<RangeQuotient> {
    require_valid(op)?;
    if !kernel_ideal_check(op) {
        return Err(Error::KernelNotIdeal);
    }
    let field = op.field();
    let alpha = op.map();
    let n = alpha.rows();
    let (echelon, pivots) = alpha.transpose().rref();
    let r = pivots.len();
    let basis: Vec<Vector> = (0..r).map(|a| echelon.row(a).to_vec()).collect();
    let embedding = Matrix::from_columns(field, n, &basis);
    // image vectors have a unique expansion read off at the pivot positions
    let coords = |w: &[crate::exactlin::Scalar]| -> Vector { pivots.iter().map(|&p| w[p].clone()).collect() };
    let sections: Vec<Vector> = basis
        .iter()
        .map(|b| alpha.solve_with(b, rule))
        .collect::<Result<_>>()?;
    let bm = op.domain().bimodule();
    let lefts: Vec<Matrix> = basis.iter().map(|b| bm.left_action(b)).collect();
    let rights: Vec<Matrix> = basis.iter().map(|b| bm.right_action(b)).collect();

    let mk = |f: &dyn Fn(usize, usize) -> Vector| tensor_from_fn(op, r, |a, b| coords(&f(a, b)));
    let prec = mk(&|a, b| alpha.mul_vec(&rights[b].mul_vec(&sections[a])));
    let succ = mk(&|a, b| alpha.mul_vec(&lefts[a].mul_vec(&sections[b])));
    let dot = match (op.domain().product(), op.weight()) {
        (Some(circ), Some(w)) => mk(&|a, b| {
            let mut out = zero_vector(field, n);
            axpy(&mut out, w, &alpha.mul_vec(&circ.product(&sections[a], &sections[b])));
            out
        }),
        _ => StructureTensor::zero(field, r),
    };
    let star = op.codomain().product();
    let image_algebra = Algebra::new(mk(&|a, b| star.product(&basis[a], &basis[b])));
    Ok(RangeQuotient {
        tri: DendriformTri::new(prec, succ, dot)?,
        embedding,
        image_algebra,
    })
}

/// `x*y` equals the sum of the dendriform products, entry by entry.
pub fn check_splitting<D: Dendriform + ?Sized>(dend: &D, a: &Algebra) -> Result<ValidationReport> {
    if dend.dim() != a.dim() {
        return Err(Error::dims(format!(
            "dendriform structure of dimension {}, algebra of dimension {}",
            dend.dim(),
            a.dim()
        )));
    }
    if dend.field() != a.field() {
        return Err(Error::FieldMismatch(a.field(), dend.field()));
    }
    let axiom = if dend.operations().len() == 3 {
        "x*y = x≺y + x≻y + x·y"
    } else {
        "x*y = x≺y + x≻y"
    };
    let mut c = Validator::default().checker("splitting");
    let star = dend.star_product();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            c.compare(axiom, &[i, j], a.product().basis_product(i, j), star.product().basis_product(i, j));
        }
    }
    Ok(c.finish())
}
