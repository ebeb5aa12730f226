//! Witness checks for isomorphic and equivalent operators and dendriform
//! structures, and an exhaustive isomorphism search over `GL_n(F_p)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, StructureTensor, Vector};
use crate::fastfp;
use crate::operators::{domain_morphism_into, twist_by_range_automorphism, OOperator};
use crate::report::{ValidationReport, Validator};
use crate::structures::Dendriform;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessRole {
    DendriformIso,
    OperatorIsoG,
    RangeAutomorphismF,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub matrix: Matrix,
    pub role: WitnessRole,
}

/// `F(x •₁ y) = F(x) •₂ F(y)` for every product, on basis pairs. `F` need
/// only be a linear bijection.
pub fn verify_dendriform_iso<D: Dendriform + ?Sized>(d1: &D, d2: &D, f: &Matrix) -> Result<ValidationReport> {
    let n = d1.dim();
    if d2.dim() != n || f.rows() != n {
        return Err(Error::dims(format!(
            "structures of dimension {} and {}, witness {}x{}",
            n,
            d2.dim(),
            f.rows(),
            f.cols()
        )));
    }
    if !f.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let mut c = Validator::default().checker("dendriform isomorphism");
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for ((name, t1), (_, t2)) in d1.operations().into_iter().zip(d2.operations()) {
        let axiom = match name {
            "prec" => "F(x≺y) = F(x)≺F(y)",
            "succ" => "F(x≻y) = F(x)≻F(y)",
            _ => "F(x·y) = F(x)·F(y)",
        };
        for i in 0..n {
            for j in 0..n {
                let lhs = f.mul_vec(t1.basis_product(i, j));
                let rhs = t2.product(&images[i], &images[j]);
                c.compare(axiom, &[i, j], &lhs, &rhs);
            }
        }
    }
    Ok(c.finish())
}

fn same_codomain_and_kind(op1: &OOperator, op2: &OOperator) -> Result<()> {
    if op1.codomain() != op2.codomain() {
        return Err(Error::CodomainMismatch);
    }
    if op1.kind() != op2.kind() {
        return Err(Error::KindMismatch {
            expected: op2.kind().as_str(),
        });
    }
    Ok(())
}

/// `g` is an isomorphism of domains and `α₁ = α₂ g`; weights must agree.
pub fn verify_operator_iso(op1: &OOperator, op2: &OOperator, g: &Matrix) -> Result<ValidationReport> {
    same_codomain_and_kind(op1, op2)?;
    let (m1, m2) = (op1.domain().dim(), op2.domain().dim());
    if g.rows() != m2 || g.cols() != m1 {
        return Err(Error::dims(format!("witness is {}x{}, domains have dimension {m1} and {m2}", g.rows(), g.cols())));
    }
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let mut c = Validator::default().checker("operator isomorphism");
    if let (Some(w1), Some(w2)) = (op1.weight(), op2.weight()) {
        c.compare("λ₁ = λ₂", &[], std::slice::from_ref(w1), std::slice::from_ref(w2));
    }
    domain_morphism_into(op1.domain(), op2.domain(), g, &mut c);
    let composed = op2.map().mul(g);
    for u in 0..m1 {
        c.compare("α₁(u) = α₂(g(u))", &[u], &op1.map().column(u), &composed.column(u));
    }
    Ok(c.finish())
}

/// `f α₁ = α₂ g`, with `g` an isomorphism from the `f`-twisted domain of
/// `op1` onto the domain of `op2`.
pub fn verify_operator_equiv(op1: &OOperator, op2: &OOperator, f: &Matrix, g: &Matrix) -> Result<ValidationReport> {
    same_codomain_and_kind(op1, op2)?;
    let twisted = twist_by_range_automorphism(op1, f)?;
    verify_operator_iso(&twisted, op2, g)
}

/// `g = α₂⁻¹ α₁` for invertible operators, with the report of
/// [`verify_operator_iso`] for it.
pub fn induced_intertwiner(op1: &OOperator, op2: &OOperator) -> Result<(Matrix, ValidationReport)> {
    same_codomain_and_kind(op1, op2)?;
    if !op1.map().is_invertible() {
        return Err(Error::Singular);
    }
    let g = op2.map().invert()?.mul(op1.map());
    let rep = verify_operator_iso(op1, op2, &g)?;
    Ok((g, rep))
}

/// Exhaustive search configuration.
#[derive(Clone, Copy, Debug)]
pub struct IsoSearch {
    pub max_dim: usize,
    pub parallel: bool,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch {
            max_dim: 3,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// First witness in lexicographic row-major order, if any.
    pub witness: Option<IsoWitness>,
    /// Invertible candidates tested, up to and including the witness.
    pub candidates_examined: u64,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

fn residues(t: &StructureTensor) -> Vec<u64> {
    t.entries().iter().map(|c| c.residue().expect("prime field")).collect()
}

struct Pattern {
    n: usize,
    p: u64,
    pairs: Vec<(Vec<u64>, Vec<u64>)>,
}

impl Pattern {
    fn matches(&self, f: &[u64]) -> bool {
        let (n, p) = (self.n, self.p);
        let cols: Vec<Vec<u64>> = (0..n).map(|c| (0..n).map(|r| f[r * n + c]).collect()).collect();
        let mut lhs = vec![0; n];
        let mut rhs = vec![0; n];
        for (a, b) in &self.pairs {
            let t1 = fastfp::Tensor { n, p, c: a };
            let t2 = fastfp::Tensor { n, p, c: b };
            for i in 0..n {
                for j in 0..n {
                    fastfp::mat_vec(f, t1.basis(i, j), p, &mut lhs);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    t2.product_into(&cols[i], &cols[j], &mut rhs);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Invertible candidates in `range` before and including the first hit.
    fn scan(&self, range: std::ops::Range<u64>) -> (u64, Option<u64>) {
        let mut digits = vec![0u64; self.n * self.n];
        let mut count = 0;
        for idx in range {
            fastfp::decode(idx, self.p, &mut digits);
            if !fastfp::invertible(&digits, self.n, self.p) {
                continue;
            }
            count += 1;
            if self.matches(&digits) {
                return (count, Some(idx));
            }
        }
        (count, None)
    }
}

const BLOCK: u64 = 1 << 12;

impl IsoSearch {
    /// Tests every invertible `F` in lexicographic order of row-major entry
    /// tuples and returns the first one that passes
    /// [`verify_dendriform_iso`]. Blocks of candidates are scanned in
    /// parallel waves; the least hit of the first wave containing one wins,
    /// so the answer does not depend on scheduling.
    pub fn search<D: Dendriform + ?Sized>(&self, d1: &D, d2: &D) -> Result<SearchOutcome> {
        let field = d1.field();
        let FieldSpec::Prime(p) = field else {
            return Err(Error::FieldNotFinite);
        };
        if d2.field() != field {
            return Err(Error::FieldMismatch(field, d2.field()));
        }
        let n = d1.dim();
        if d2.dim() != n || d1.operations().len() != d2.operations().len() {
            return Err(Error::dims("structures of different shape"));
        }
        if n > self.max_dim {
            return Err(Error::DimensionCap { dim: n, cap: self.max_dim });
        }
        let total = p
            .checked_pow((n * n) as u32)
            .ok_or(Error::BudgetExceeded {
                candidates: (p as u128).saturating_pow((n * n) as u32),
                budget: u64::MAX,
            })?;
        let pattern = Pattern {
            n,
            p,
            pairs: d1
                .operations()
                .into_iter()
                .zip(d2.operations())
                .map(|((_, a), (_, b))| (residues(a), residues(b)))
                .collect(),
        };
        let blocks = total.div_ceil(BLOCK);
        let wave = if self.parallel {
            (rayon::current_num_threads() as u64 * 4).max(1)
        } else {
            1
        };
        let mut examined = 0u64;
        let mut start = 0u64;
        while start < blocks {
            let end = (start + wave).min(blocks);
            let range = |b: u64| b * BLOCK..((b + 1) * BLOCK).min(total);
            let results: Vec<(u64, Option<u64>)> = if self.parallel {
                (start..end).into_par_iter().map(|b| pattern.scan(range(b))).collect()
            } else {
                (start..end).map(|b| pattern.scan(range(b))).collect()
            };
            for (count, hit) in results {
                examined += count;
                if let Some(idx) = hit {
                    let mut digits = vec![0u64; n * n];
                    fastfp::decode(idx, p, &mut digits);
                    let matrix = Matrix::from_fn(field, n, n, |r, c| field.element(digits[r * n + c]));
                    return Ok(SearchOutcome {
                        witness: Some(IsoWitness {
                            matrix,
                            role: WitnessRole::DendriformIso,
                        }),
                        candidates_examined: examined,
                    });
                }
            }
            start = end;
        }
        Ok(SearchOutcome {
            witness: None,
            candidates_examined: examined,
        })
    }
}

pub fn search_dendriform_iso_fp<D: Dendriform + ?Sized>(d1: &D, d2: &D) -> Result<SearchOutcome> {
    IsoSearch::default().search(d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{canonical_operator_from_tri, range_dendriform_tri};
    use crate::operators::{compose_with_domain_iso, rb_as_o_operator, RotaBaxterOperator};
    use crate::structures::{Algebra, DendriformDi, DendriformTri};

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn t(f: FieldSpec, entries: &[(usize, usize, usize, i64, i64)]) -> StructureTensor {
        StructureTensor::from_ratios(f, 2, entries)
    }

    fn rb4(f: FieldSpec) -> DendriformDi {
        DendriformDi::new(t(f, &[(1, 1, 0, 1, 1)]), StructureTensor::zero(f, 2)).unwrap()
    }

    fn rb6(f: FieldSpec) -> DendriformDi {
        DendriformDi::new(StructureTensor::zero(f, 2), t(f, &[(1, 1, 0, 1, 1)])).unwrap()
    }

    #[test]
    fn dendriform_iso_examples() {
        let id = Matrix::identity(q(), 2);
        assert!(verify_dendriform_iso(&rb4(q()), &rb4(q()), &id).unwrap().passed);
        let rep = verify_dendriform_iso(&rb4(q()), &rb6(q()), &id).unwrap();
        assert_eq!(rep.first().unwrap().axiom, "F(x≺y) = F(x)≺F(y)");
        assert_eq!(rep.first().unwrap().indices, vec![1, 1]);

        let scaled = DendriformDi::new(t(q(), &[(1, 1, 0, 4, 1)]), StructureTensor::zero(q(), 2)).unwrap();
        let f = Matrix::diagonal(q(), &[q().from_i64(4), q().one()]);
        assert!(verify_dendriform_iso(&rb4(q()), &scaled, &f).unwrap().passed);
        assert_eq!(
            verify_dendriform_iso(&rb4(q()), &scaled, &Matrix::zeros(q(), 2, 2)),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn search_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let out = search_dendriform_iso_fp(&rb4(f3), &rb6(f3)).unwrap();
        assert!(!out.found());
        assert_eq!(out.candidates_examined, 48);

        let swapped = DendriformDi::new(t(f3, &[(0, 0, 1, 1, 1)]), StructureTensor::zero(f3, 2)).unwrap();
        let out = search_dendriform_iso_fp(&rb4(f3), &swapped).unwrap();
        assert_eq!(out.witness.unwrap().matrix, Matrix::from_i64_rows(f3, &[&[0, 1], &[1, 0]]));

        // rb-4 has no automorphism before the identity in this order
        let out = search_dendriform_iso_fp(&rb4(f3), &rb4(f3)).unwrap();
        let w = out.witness.unwrap().matrix;
        assert!(verify_dendriform_iso(&rb4(f3), &rb4(f3), &w).unwrap().passed);

        assert_eq!(search_dendriform_iso_fp(&rb4(q()), &rb4(q())), Err(Error::FieldNotFinite));
        let big = DendriformDi::zero(f3, 4);
        assert_eq!(search_dendriform_iso_fp(&big, &big), Err(Error::DimensionCap { dim: 4, cap: 3 }));
    }

    #[test]
    fn search_is_schedule_independent() {
        let f3 = FieldSpec::prime(3).unwrap();
        let z = DendriformDi::zero(f3, 3);
        let par = IsoSearch::default().search(&z, &z).unwrap();
        let ser = IsoSearch { parallel: false, ..Default::default() }.search(&z, &z).unwrap();
        assert_eq!(par, ser);
        assert_eq!(par.candidates_examined, 1);
    }

    fn n2() -> Algebra {
        Algebra::new(t(q(), &[(1, 1, 0, 1, 1)]))
    }

    fn third_one() -> OOperator {
        let p = Matrix::diagonal(q(), &[q().from_ratio(1.into(), 3.into()).unwrap(), q().one()]);
        rb_as_o_operator(&RotaBaxterOperator::new(n2(), p, q().one()).unwrap()).unwrap()
    }

    #[test]
    fn operator_iso_examples() {
        let op = third_one();
        let id = Matrix::identity(q(), 2);
        assert!(verify_operator_iso(&op, &op, &id).unwrap().passed);

        let swap = Matrix::from_i64_rows(q(), &[&[0, 1], &[1, 0]]);
        let source = op.domain().pull_back(&swap).unwrap();
        let moved = compose_with_domain_iso(&op, &source, &swap).unwrap();
        assert!(verify_operator_iso(&moved, &op, &swap).unwrap().passed);

        let doubled = OOperator::new(op.domain().clone(), op.map().scale(&q().from_i64(2)), op.weight().cloned()).unwrap();
        let rep = verify_operator_iso(&op, &doubled, &id).unwrap();
        assert_eq!(rep.first().unwrap().axiom, "α₁(u) = α₂(g(u))");
    }

    #[test]
    fn operator_equiv_examples() {
        let op = third_one();
        let id = Matrix::identity(q(), 2);
        assert!(verify_operator_equiv(&op, &op, &id, &id).unwrap().passed);
        let f = Matrix::diagonal(q(), &[q().from_i64(4), q().from_i64(2)]);
        let tw = twist_by_range_automorphism(&op, &f).unwrap();
        assert!(verify_operator_equiv(&op, &tw, &f, &id).unwrap().passed);
        assert_eq!(
            verify_operator_equiv(&op, &tw, &f, &Matrix::zeros(q(), 2, 2)),
            Err(Error::NotInvertible)
        );
        // equivalent operators have isomorphic ranges, via f
        let r1 = range_dendriform_tri(&op).unwrap();
        let r2 = range_dendriform_tri(&tw).unwrap();
        assert!(verify_dendriform_iso(&r1, &r2, &f).unwrap().passed);
    }

    #[test]
    fn induced_intertwiner_examples() {
        let op = third_one();
        let (g, rep) = induced_intertwiner(&op, &op).unwrap();
        assert_eq!(g, Matrix::identity(q(), 2));
        assert!(rep.passed);

        let one = [(1, 1, 0, 1, 1)];
        let tri = DendriformTri::new(t(q(), &one), t(q(), &one), t(q(), &one)).unwrap();
        let (_, can) = canonical_operator_from_tri(&tri).unwrap();
        let h = Matrix::from_i64_rows(q(), &[&[1, 1], &[0, 1]]);
        let other = compose_with_domain_iso(&can, &can.domain().pull_back(&h).unwrap(), &h).unwrap();
        let (g, rep) = induced_intertwiner(&other, &can).unwrap();
        assert_eq!(g, h);
        assert!(rep.passed);

        // weight-1 diag(4/5, 2) has a different range structure
        let p = Matrix::diagonal(q(), &[q().from_ratio(4.into(), 5.into()).unwrap(), q().from_i64(2)]);
        let op2 = rb_as_o_operator(&RotaBaxterOperator::new(n2(), p, q().one()).unwrap()).unwrap();
        assert_ne!(range_dendriform_tri(&op).unwrap(), range_dendriform_tri(&op2).unwrap());
        let (_, rep) = induced_intertwiner(&op, &op2).unwrap();
        assert!(!rep.passed);
        let zero = OOperator::new(op.domain().clone(), Matrix::zeros(q(), 2, 2), Some(q().one())).unwrap();
        assert_eq!(induced_intertwiner(&op, &zero).map(|_| ()), Err(Error::Singular));
    }
}
