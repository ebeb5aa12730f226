//! Brute-force enumeration over `F_p` in low dimension.
//!
//! A candidate is an index whose base-`p` digits (most significant first)
//! are the entries of the object, so index order is lexicographic order.
//! Filters run on raw residues; survivors are converted to exact values.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::constructions::{canonical_operator_from_di, domain_dendriform_di};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, StructureTensor};
use crate::fastfp::{self, Identity, Tensor};
use crate::operators::{rb_as_o_operator, RotaBaxterOperator};
use crate::structures::{Algebra, DendriformDi};

pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Budget and scheduling for an enumeration run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Largest candidate space a single enumeration may walk.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

fn prime_field(p: u64) -> Result<(FieldSpec, u64)> {
    Ok((FieldSpec::prime(p)?, p))
}

fn residues(t: &StructureTensor) -> Vec<u64> {
    t.entries().iter().map(|c| c.residue().expect("prime field")).collect()
}

fn tensor_from_digits(field: FieldSpec, n: usize, digits: &[u64]) -> StructureTensor {
    StructureTensor::from_dense(field, n, digits.iter().map(|&d| field.element(d)).collect())
        .expect("digit count matches dimension")
}

fn assoc_identity<'a>(t: &'a Tensor<'a>) -> Identity<'a> {
    Identity {
        outer_left: vec![t],
        inner_left: vec![t],
        outer_right: vec![t],
        inner_right: vec![t],
    }
}

fn rb_holds(a: &Tensor, pm: &[u64], weight: u64) -> bool {
    let (n, p) = (a.n, a.p);
    let cols: Vec<Vec<u64>> = (0..n).map(|c| (0..n).map(|r| pm[r * n + c]).collect()).collect();
    let unit = |i: usize| -> Vec<u64> { (0..n).map(|k| u64::from(k == i)).collect() };
    let mut lhs = vec![0; n];
    let mut inner = vec![0; n];
    let mut rhs = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            lhs.iter_mut().for_each(|x| *x = 0);
            a.product_into(&cols[i], &cols[j], &mut lhs);
            inner.iter_mut().for_each(|x| *x = 0);
            a.product_into(&cols[i], &unit(j), &mut inner);
            a.product_into(&unit(i), &cols[j], &mut inner);
            for (x, &c) in inner.iter_mut().zip(a.basis(i, j)) {
                *x = (*x + fastfp::mul(weight, c, p)) % p;
            }
            fastfp::mat_vec(pm, &inner, p, &mut rhs);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

impl Enumeration {
    fn candidates(&self, p: u64, digits: usize) -> Result<u64> {
        let total = (p as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
        if total > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                candidates: total,
                budget: self.budget,
            });
        }
        Ok(total as u64)
    }

    /// Maps `keep` over `0..total` and keeps the hits, in index order.
    fn walk<T: Send>(&self, total: u64, keep: impl Fn(u64) -> Option<T> + Sync + Send) -> Vec<T> {
        if self.parallel {
            (0..total).into_par_iter().filter_map(keep).collect()
        } else {
            (0..total).filter_map(keep).collect()
        }
    }

    /// All associative products on `F_p^n`.
    pub fn associative_products(&self, n: usize, p: u64) -> Result<Vec<Algebra>> {
        let (field, p) = prime_field(p)?;
        let len = n * n * n;
        let total = self.candidates(p, len)?;
        Ok(self.walk(total, |idx| {
            let mut d = vec![0u64; len];
            fastfp::decode(idx, p, &mut d);
            let t = Tensor { n, p, c: &d };
            fastfp::identities_hold(&[assoc_identity(&t)], n).then(|| Algebra::new(tensor_from_digits(field, n, &d)))
        }))
    }

    /// All Rota-Baxter operators of the given weight on `a`.
    pub fn rb_operators(&self, a: &Algebra, weight: &Scalar) -> Result<Vec<RotaBaxterOperator>> {
        let field = a.field();
        let FieldSpec::Prime(p) = field else {
            return Err(Error::FieldNotFinite);
        };
        if weight.field() != field {
            return Err(Error::FieldMismatch(field, weight.field()));
        }
        let n = a.dim();
        let total = self.candidates(p, n * n)?;
        let raw = residues(a.product());
        let w = weight.residue().expect("prime field");
        Ok(self.walk(total, |idx| {
            let mut d = vec![0u64; n * n];
            fastfp::decode(idx, p, &mut d);
            let t = Tensor { n, p, c: &raw };
            rb_holds(&t, &d, w).then(|| {
                let m = Matrix::from_fn(field, n, n, |r, c| field.element(d[r * n + c]));
                RotaBaxterOperator::new(a.clone(), m, weight.clone()).expect("shapes agree")
            })
        }))
    }

    /// All dendriform dialgebras on `F_p^n`, ordered by `(≺, ≻)`.
    pub fn dendriform_di(&self, n: usize, p: u64) -> Result<Vec<DendriformDi>> {
        let (field, p) = prime_field(p)?;
        let len = n * n * n;
        let total = self.candidates(p, 2 * len)?;
        Ok(self.walk(total, |idx| {
            let mut d = vec![0u64; 2 * len];
            fastfp::decode(idx, p, &mut d);
            let (pd, sd) = d.split_at(len);
            let (prec, succ) = (Tensor { n, p, c: pd }, Tensor { n, p, c: sd });
            let ids = [
                Identity {
                    outer_left: vec![&prec],
                    inner_left: vec![&prec],
                    outer_right: vec![&prec],
                    inner_right: vec![&prec, &succ],
                },
                Identity {
                    outer_left: vec![&prec],
                    inner_left: vec![&succ],
                    outer_right: vec![&succ],
                    inner_right: vec![&prec],
                },
                Identity {
                    outer_left: vec![&succ],
                    inner_left: vec![&prec, &succ],
                    outer_right: vec![&succ],
                    inner_right: vec![&succ],
                },
            ];
            fastfp::identities_hold(&ids, n).then(|| {
                DendriformDi::new(tensor_from_digits(field, n, pd), tensor_from_digits(field, n, sd))
                    .expect("same shape")
            })
        }))
    }

    /// Dialgebras from weight-0 Rota-Baxter operators against all
    /// dialgebras. This is a finite-field analogue only; it says nothing
    /// about the picture over the complex numbers.
    pub fn phi_image(&self, n: usize, p: u64) -> Result<PhiImage> {
        let (field, _) = prime_field(p)?;
        let algebras = self.associative_products(n, p)?;
        let mut image: BTreeMap<DendriformDi, ImageWitness> = BTreeMap::new();
        let mut rb_pairs = 0usize;
        for a in &algebras {
            for rb in self.rb_operators(a, &field.zero())? {
                rb_pairs += 1;
                let op = rb_as_o_operator(&rb)?.as_module();
                let d = domain_dendriform_di(&op)?;
                image.entry(d.clone()).or_insert_with(|| ImageWitness {
                    dendriform: d,
                    algebra: a.clone(),
                    operator: rb.map().clone(),
                });
            }
        }
        let all = self.dendriform_di(n, p)?;

        if let Some(stray) = image.keys().find(|d| all.binary_search(d).is_err()) {
            return Err(Error::Postcondition(format!("image element outside the enumeration: {stray:?}")));
        }
        let round_trip = |d: &DendriformDi| canonical_operator_from_di(d).map(|_| ());
        let failures: Vec<Error> = if self.parallel {
            all.par_iter().filter_map(|d| round_trip(d).err()).collect()
        } else {
            all.iter().filter_map(|d| round_trip(d).err()).collect()
        };
        if let Some(e) = failures.into_iter().next() {
            return Err(Error::Postcondition(format!("canonical operator round trip: {e}")));
        }

        let missing = all.iter().filter(|d| !image.contains_key(d)).cloned().collect();
        Ok(PhiImage {
            dim: n,
            prime: p,
            associative_algebras: algebras.len(),
            rb_pairs,
            image: image.into_values().collect(),
            all,
            missing,
        })
    }
}

/// A dialgebra in the image, with the first `(A, P)` producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageWitness {
    pub dendriform: DendriformDi,
    pub algebra: Algebra,
    pub operator: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub dim: usize,
    pub prime: u64,
    pub associative_algebras: usize,
    /// Number of `(A, P)` pairs with `P` a weight-0 Rota-Baxter operator on `A`.
    pub rb_pairs: usize,
    /// Sorted by dialgebra.
    pub image: Vec<ImageWitness>,
    /// Every dialgebra, sorted. Each one is the domain structure of its
    /// canonical O-operator; that round trip has been checked.
    pub all: Vec<DendriformDi>,
    /// Dialgebras not produced by any Rota-Baxter operator, sorted.
    pub missing: Vec<DendriformDi>,
}

impl PhiImage {
    pub const LABEL: &'static str =
        "finite-field analogue: Rota-Baxter image versus all dendriform dialgebras over F_p";
}

pub fn enumerate_associative_products(n: usize, p: u64) -> Result<Vec<Algebra>> {
    Enumeration::default().associative_products(n, p)
}

pub fn enumerate_rb_operators(a: &Algebra, weight: &Scalar) -> Result<Vec<RotaBaxterOperator>> {
    Enumeration::default().rb_operators(a, weight)
}

pub fn enumerate_dendriform_di(n: usize, p: u64) -> Result<Vec<DendriformDi>> {
    Enumeration::default().dendriform_di(n, p)
}

pub fn phi_image_experiment(n: usize, p: u64) -> Result<PhiImage> {
    Enumeration::default().phi_image(n, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::validate_rota_baxter;
    use crate::structures::{validate_associativity, validate_dendriform_di};

    fn serial() -> Enumeration {
        Enumeration {
            parallel: false,
            ..Default::default()
        }
    }

    #[test]
    fn one_dimensional_counts() {
        assert_eq!(enumerate_associative_products(1, 2).unwrap().len(), 2);
        assert_eq!(enumerate_associative_products(1, 3).unwrap().len(), 3);
        assert_eq!(enumerate_dendriform_di(1, 2).unwrap().len(), 3);
        assert_eq!(enumerate_dendriform_di(1, 3).unwrap().len(), 5);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_associative_products(3, 3),
            Err(Error::BudgetExceeded { .. })
        ));
        let tight = Enumeration { budget: 255, parallel: true };
        assert!(tight.associative_products(2, 2).is_err());
        assert_eq!(Enumeration { budget: 256, parallel: true }.associative_products(2, 2).unwrap().len(), 28);
        assert!(matches!(enumerate_dendriform_di(2, 4), Err(Error::InvalidField(_))));
    }

    #[test]
    fn zero_algebra_accepts_every_map() {
        let f2 = FieldSpec::prime(2).unwrap();
        let ops = enumerate_rb_operators(&Algebra::zero(f2, 2), &f2.zero()).unwrap();
        assert_eq!(ops.len(), 16);
    }

    #[test]
    fn filters_agree_with_validators() {
        let f2 = FieldSpec::prime(2).unwrap();
        let algebras = serial().associative_products(2, 2).unwrap();
        assert!(algebras.iter().all(|a| validate_associativity(a).passed));
        let dd = serial().dendriform_di(2, 2).unwrap();
        assert!(dd.iter().all(|d| validate_dendriform_di(d).passed));
        // exhaustive cross-check against the exact validators on the small spaces
        let mut exact_assoc = 0;
        for idx in 0..256u64 {
            let mut d = vec![0u64; 8];
            fastfp::decode(idx, 2, &mut d);
            let a = Algebra::new(tensor_from_digits(f2, 2, &d));
            if validate_associativity(&a).passed {
                assert_eq!(algebras[exact_assoc], a);
                exact_assoc += 1;
            }
        }
        assert_eq!(exact_assoc, algebras.len());
        for a in &algebras {
            for w in [f2.zero(), f2.one()] {
                let ops = enumerate_rb_operators(a, &w).unwrap();
                let mut expected = Vec::new();
                for idx in 0..16u64 {
                    let mut d = vec![0u64; 4];
                    fastfp::decode(idx, 2, &mut d);
                    let m = Matrix::from_fn(f2, 2, 2, |r, c| f2.element(d[r * 2 + c]));
                    let rb = RotaBaxterOperator::new(a.clone(), m, w.clone()).unwrap();
                    if validate_rota_baxter(&rb).passed {
                        expected.push(rb);
                    }
                }
                assert_eq!(ops, expected);
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let par = Enumeration::default();
        assert_eq!(par.dendriform_di(2, 2).unwrap(), serial().dendriform_di(2, 2).unwrap());
        assert_eq!(par.associative_products(2, 3).unwrap(), serial().associative_products(2, 3).unwrap());
        assert_eq!(par.phi_image(2, 2).unwrap(), serial().phi_image(2, 2).unwrap());
    }

    #[test]
    fn n2_rb_operators_over_f2_and_f3() {
        for (p, expected) in [(2u64, 4usize), (3, 15)] {
            let f = FieldSpec::prime(p).unwrap();
            let n2 = Algebra::new(StructureTensor::from_ratios(f, 2, &[(1, 1, 0, 1, 1)]));
            let ops = enumerate_rb_operators(&n2, &f.zero()).unwrap();
            assert_eq!(ops.len(), expected);
        }
    }

    #[test]
    fn tiny_phi_image() {
        let out = phi_image_experiment(1, 2).unwrap();
        assert_eq!((out.all.len(), out.image.len(), out.missing.len()), (3, 1, 2));
    }
}
