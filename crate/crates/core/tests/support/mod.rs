//! Random valid operators over F_p, shared by the integration tests.
//!
//! Rota-Baxter operators in dimension 1 and 2 are drawn from the complete
//! lists; dimension 3 takes a direct sum of the two and moves it by a random
//! linear isomorphism.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;

use dendrop::constructions::{canonical_operator_from_tri, domain_dendriform_tri};
use dendrop::enumeration::Enumeration;
use dendrop::exactlin::{FieldSpec, Matrix, Scalar, StructureTensor};
use dendrop::operators::{
    compose_with_domain_iso, is_algebra_automorphism, rb_as_o_operator, twist_by_range_automorphism, OOperator,
    RotaBaxterOperator,
};
use dendrop::document::{Document, Entry, Labels, Payload, ResultSet};
use dendrop::structures::{validate_dendriform_di, Algebra, Bimodule, BimoduleAlgebra, DendriformDi, DendriformTri};

pub fn random_matrix(rng: &mut impl Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let p = field.order().expect("finite field");
    Matrix::from_fn(field, rows, cols, |_, _| field.element(rng.gen_range(0..p)))
}

pub fn random_gl(rng: &mut impl Rng, field: FieldSpec, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_nonzero(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    let p = field.order().expect("finite field");
    field.element(rng.gen_range(1..p))
}

pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let (n, m) = (a.dim(), b.dim());
    let mut t = StructureTensor::zero(a.field(), n + m);
    for (i, j, k, c) in a.product().nonzero() {
        t.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in b.product().nonzero() {
        t.set(n + i, n + j, n + k, c.clone());
    }
    Algebra::new(t)
}

pub fn block_diag(x: &Matrix, y: &Matrix) -> Matrix {
    let (n, m) = (x.rows(), y.rows());
    let field = x.field();
    Matrix::from_fn(field, n + m, n + m, |r, c| match (r < n, c < n) {
        (true, true) => x.get(r, c).clone(),
        (false, false) => y.get(r - n, c - n).clone(),
        _ => field.zero(),
    })
}

/// Complete lists of small associative algebras and their Rota-Baxter
/// operators of weight 0 and 1.
pub struct Pool {
    pub field: FieldSpec,
    pub algebras: [Vec<Algebra>; 2],
    ops: HashMap<(usize, usize, bool), Vec<Matrix>>,
}

impl Pool {
    pub fn new(p: u64) -> Pool {
        let run = Enumeration::default();
        Pool {
            field: FieldSpec::prime(p).unwrap(),
            algebras: [run.associative_products(1, p).unwrap(), run.associative_products(2, p).unwrap()],
            ops: HashMap::new(),
        }
    }

    fn pick(&mut self, rng: &mut impl Rng, dim: usize, unit_weight: bool) -> (Algebra, Matrix) {
        let list = &self.algebras[dim - 1];
        let idx = rng.gen_range(0..list.len());
        let a = list[idx].clone();
        let w = if unit_weight { self.field.one() } else { self.field.zero() };
        let ops = self.ops.entry((dim, idx, unit_weight)).or_insert_with(|| {
            Enumeration::default()
                .rb_operators(&a, &w)
                .unwrap()
                .into_iter()
                .map(|rb| rb.map().clone())
                .collect()
        });
        let m = ops[rng.gen_range(0..ops.len())].clone();
        (a, m)
    }

    /// A Rota-Baxter operator on a `dim`-dimensional algebra, `dim ≤ 3`.
    pub fn rota_baxter(&mut self, rng: &mut impl Rng, dim: usize) -> RotaBaxterOperator {
        let unit = rng.gen_bool(0.5);
        let (a, m) = match dim {
            1 | 2 => self.pick(rng, dim, unit),
            3 => {
                let (a2, m2) = self.pick(rng, 2, unit);
                let (a1, m1) = self.pick(rng, 1, unit);
                let h = random_gl(rng, self.field, 3);
                let a = direct_sum(&a2, &a1).transport(&h).unwrap();
                let m = h.mul(&block_diag(&m2, &m1)).mul(&h.invert().unwrap());
                (a, m)
            }
            _ => panic!("dimension {dim} not supported"),
        };
        // weight-1 operators scale to any nonzero weight
        let (m, w) = if unit {
            let c = random_nonzero(rng, self.field);
            (m.scale(&c), c)
        } else {
            (m, self.field.zero())
        };
        RotaBaxterOperator::new(a, m, w).unwrap()
    }

    /// A random automorphism of `a` found by sampling, else the identity.
    pub fn automorphism(&self, rng: &mut impl Rng, a: &Algebra, tries: usize) -> Matrix {
        for _ in 0..tries {
            let f = random_gl(rng, self.field, a.dim());
            if is_algebra_automorphism(a, &f) {
                return f;
            }
        }
        Matrix::identity(self.field, a.dim())
    }

    /// An O-operator: either a Rota-Baxter operator read as one, or the
    /// canonical operator of a domain trialgebra, moved along a random
    /// domain isomorphism and twisted by an automorphism of its codomain.
    pub fn o_operator(&mut self, rng: &mut impl Rng, dim: usize) -> OOperator {
        let rb = self.rota_baxter(rng, dim);
        let op = rb_as_o_operator(&rb).unwrap();
        let op = if rng.gen_bool(0.5) {
            if rb.weight().is_zero() && rng.gen_bool(0.5) {
                op.as_module()
            } else {
                op
            }
        } else {
            let t = domain_dendriform_tri(&op).unwrap();
            canonical_operator_from_tri(&t).unwrap().1
        };
        transported(self, rng, &op)
    }
}

/// `f∘α∘g` for a random isomorphism `g` onto the domain and an automorphism
/// `f` of the codomain.
pub fn transported(pool: &Pool, rng: &mut impl Rng, op: &OOperator) -> OOperator {
    let g = random_gl(rng, pool.field, op.domain().dim());
    let source = op.domain().pull_back(&g).unwrap();
    let op = compose_with_domain_iso(op, &source, &g).unwrap();
    let f = pool.automorphism(rng, op.codomain(), 40);
    twist_by_range_automorphism(&op, &f).unwrap()
}

/// A random element of `field`; small ratios over ℚ.
pub fn random_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    match field.order() {
        Some(p) => field.element(rng.gen_range(0..p)),
        None => {
            if rng.gen_bool(0.3) {
                return field.zero();
            }
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=6);
            field.from_ratio(num.into(), den.into()).unwrap()
        }
    }
}

pub fn random_entries(rng: &mut impl Rng, field: FieldSpec, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| random_scalar(rng, field)).collect()
}

pub fn random_tensor(rng: &mut impl Rng, field: FieldSpec, n: usize) -> StructureTensor {
    StructureTensor::from_dense(field, n, random_entries(rng, field, n * n * n)).unwrap()
}

pub fn any_matrix(rng: &mut impl Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    Matrix::from_entries(field, rows, cols, random_entries(rng, field, rows * cols)).unwrap()
}

static POOLS: std::sync::OnceLock<std::sync::Mutex<HashMap<u64, Pool>>> = std::sync::OnceLock::new();

/// Runs `f` on the shared pool for `F_p`, building it on first use.
pub fn with_pool<R>(p: u64, f: impl FnOnce(&mut Pool) -> R) -> R {
    let mut pools = POOLS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    f(pools.entry(p).or_insert_with(|| Pool::new(p)))
}

/// The domain structure as a trialgebra; module-kind operators give `·` = 0.
pub fn domain_tri(op: &OOperator) -> dendrop::structures::DendriformTri {
    match op.kind() {
        dendrop::operators::OperatorKind::Algebra => domain_dendriform_tri(op).unwrap(),
        dendrop::operators::OperatorKind::Module => dendrop::constructions::domain_dendriform_di(op).unwrap().to_tri(),
    }
}

pub fn range_tri(op: &OOperator) -> dendrop::structures::DendriformTri {
    match op.kind() {
        dendrop::operators::OperatorKind::Algebra => dendrop::constructions::range_dendriform_tri(op).unwrap(),
        dendrop::operators::OperatorKind::Module => dendrop::constructions::range_dendriform_di(op).unwrap().to_tri(),
    }
}

pub fn any_field(rng: &mut impl Rng) -> FieldSpec {
    match rng.gen_range(0..3) {
        0 => FieldSpec::Rational,
        1 => FieldSpec::prime(3).unwrap(),
        _ => FieldSpec::prime(5).unwrap(),
    }
}

/// Arbitrary, not necessarily valid, structures of every payload kind.
pub fn random_payload(r: &mut impl Rng, field: FieldSpec, depth: usize) -> Payload {
    let n = r.gen_range(0..4);
    let m = r.gen_range(0..4);
    let algebra = Algebra::new(random_tensor(r, field, n));
    let actions = |r: &mut _| (0..n).map(|_| any_matrix(r, field, m, m)).collect::<Vec<_>>();
    let bimodule = Bimodule::new(algebra.clone(), m, actions(r), actions(r)).unwrap();
    let kinds = if depth == 0 { 9 } else { 10 };
    match r.gen_range(0..kinds) {
        0 => Payload::Algebra(algebra),
        1 => Payload::Bimodule(bimodule),
        2 => Payload::BimoduleAlgebra(BimoduleAlgebra::new(bimodule, random_tensor(r, field, m)).unwrap()),
        3 => {
            let map = any_matrix(r, field, n, m);
            let op = if r.gen_bool(0.5) {
                OOperator::on_module(bimodule, map).unwrap()
            } else {
                let ba = BimoduleAlgebra::new(bimodule, random_tensor(r, field, m)).unwrap();
                OOperator::on_algebra(ba, map, random_scalar(r, field)).unwrap()
            };
            Payload::Operator(op)
        }
        4 => Payload::RotaBaxter(
            RotaBaxterOperator::new(algebra, any_matrix(r, field, n, n), random_scalar(r, field)).unwrap(),
        ),
        5 => Payload::DendriformDi(DendriformDi::new(random_tensor(r, field, n), random_tensor(r, field, n)).unwrap()),
        6 => Payload::DendriformTri(
            DendriformTri::new(random_tensor(r, field, n), random_tensor(r, field, n), random_tensor(r, field, n))
                .unwrap(),
        ),
        7 => Payload::Matrix(any_matrix(r, field, n, m)),
        8 => {
            let d = DendriformDi::new(random_tensor(r, field, n), random_tensor(r, field, n)).unwrap();
            Payload::Report(validate_dendriform_di(&d))
        }
        _ => {
            let mut rs = ResultSet {
                what: "random".into(),
                note: r.gen_bool(0.5).then(|| "note".to_string()),
                ..Default::default()
            };
            rs.counts.insert("items".into(), r.gen_range(0..100));
            let items = (0..r.gen_range(0..3))
                .map(|i| Entry {
                    labels: Labels {
                        name: Some(format!("item-{i}")),
                        basis: None,
                        typo_corrected: r.gen_bool(0.2),
                    },
                    payload: random_payload(r, field, depth - 1),
                })
                .collect();
            rs.groups.insert("items".into(), items);
            Payload::ResultSet(rs)
        }
    }
}

pub fn random_document(r: &mut impl Rng) -> Document {
    let field = any_field(r);
    let payload = random_payload(r, field, 1);
    let mut labels = Labels::default();
    if r.gen_bool(0.5) {
        labels.name = Some("doc".into());
    }
    Document::new(field, payload).with_labels(labels)
}
