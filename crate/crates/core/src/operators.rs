//! Rota-Baxter operators and O-operators, their validators, and the
//! transports along domain isomorphisms and codomain automorphisms.

use crate::error::{Error, Result};
use crate::exactlin::{add_vectors, axpy, FieldSpec, Matrix, Scalar, StructureTensor, Vector};
use crate::report::{Checker, ValidationReport, Validator};
use crate::structures::{canonical_bimodule, Algebra, Bimodule, BimoduleAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Module,
    Algebra,
}

impl OperatorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::Module => "module",
            OperatorKind::Algebra => "algebra",
        }
    }
}

/// What an O-operator is defined on: a bimodule, or a bimodule algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OperatorDomain {
    Module(Bimodule),
    Algebra(BimoduleAlgebra),
}

impl OperatorDomain {
    pub fn kind(&self) -> OperatorKind {
        match self {
            OperatorDomain::Module(_) => OperatorKind::Module,
            OperatorDomain::Algebra(_) => OperatorKind::Algebra,
        }
    }

    pub fn bimodule(&self) -> &Bimodule {
        match self {
            OperatorDomain::Module(b) => b,
            OperatorDomain::Algebra(r) => r.bimodule(),
        }
    }

    /// `∘`, when the domain carries one.
    pub fn product(&self) -> Option<&StructureTensor> {
        match self {
            OperatorDomain::Module(_) => None,
            OperatorDomain::Algebra(r) => Some(r.product()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        self.bimodule().algebra()
    }

    pub fn dim(&self) -> usize {
        self.bimodule().dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bimodule().field()
    }

    /// The structure on the same space for which `g` is an isomorphism onto
    /// `self`: actions conjugated by `g`, product pulled back.
    pub fn pull_back(&self, g: &Matrix) -> Result<OperatorDomain> {
        Ok(match self {
            OperatorDomain::Module(b) => OperatorDomain::Module(b.pull_back(g)?),
            OperatorDomain::Algebra(r) => OperatorDomain::Algebra(r.pull_back(g)?),
        })
    }

    fn precompose_actions(&self, phi: &Matrix) -> OperatorDomain {
        match self {
            OperatorDomain::Module(b) => OperatorDomain::Module(b.precompose_actions(phi)),
            OperatorDomain::Algebra(r) => OperatorDomain::Algebra(r.precompose_actions(phi)),
        }
    }
}

/// An O-operator `α: R → A`. `map` is `dim A × dim R`; the weight is present
/// exactly for the algebra kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OOperator {
    domain: OperatorDomain,
    map: Matrix,
    weight: Option<Scalar>,
}

fn check_map(domain: &OperatorDomain, map: &Matrix) -> Result<()> {
    let (n, m) = (domain.algebra().dim(), domain.dim());
    if map.rows() != n || map.cols() != m {
        return Err(Error::dims(format!(
            "operator matrix is {}x{}, expected {n}x{m}",
            map.rows(),
            map.cols()
        )));
    }
    if map.field() != domain.field() {
        return Err(Error::FieldMismatch(domain.field(), map.field()));
    }
    Ok(())
}

impl OOperator {
    pub fn on_module(domain: Bimodule, map: Matrix) -> Result<Self> {
        let domain = OperatorDomain::Module(domain);
        check_map(&domain, &map)?;
        Ok(OOperator {
            domain,
            map,
            weight: None,
        })
    }

    pub fn on_algebra(domain: BimoduleAlgebra, map: Matrix, weight: Scalar) -> Result<Self> {
        if weight.field() != domain.field() {
            return Err(Error::FieldMismatch(domain.field(), weight.field()));
        }
        let domain = OperatorDomain::Algebra(domain);
        check_map(&domain, &map)?;
        Ok(OOperator {
            domain,
            map,
            weight: Some(weight),
        })
    }

    pub fn new(domain: OperatorDomain, map: Matrix, weight: Option<Scalar>) -> Result<Self> {
        match (domain, weight) {
            (OperatorDomain::Module(b), None) => OOperator::on_module(b, map),
            (OperatorDomain::Algebra(r), Some(w)) => OOperator::on_algebra(r, map, w),
            (OperatorDomain::Module(_), Some(_)) => Err(Error::KindMismatch { expected: "algebra" }),
            (OperatorDomain::Algebra(_), None) => Err(Error::schema("weight", "algebra-kind operators need a weight")),
        }
    }

    pub fn kind(&self) -> OperatorKind {
        self.domain.kind()
    }

    pub fn domain(&self) -> &OperatorDomain {
        &self.domain
    }

    pub fn codomain(&self) -> &Algebra {
        self.domain.algebra()
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn weight(&self) -> Option<&Scalar> {
        self.weight.as_ref()
    }

    pub fn field(&self) -> FieldSpec {
        self.domain.field()
    }

    /// The module reading: forget `∘` and the weight.
    pub fn as_module(&self) -> OOperator {
        OOperator {
            domain: OperatorDomain::Module(self.domain.bimodule().clone()),
            map: self.map.clone(),
            weight: None,
        }
    }

    /// Installs the zero product on the domain with the given weight. A valid
    /// module O-operator stays valid for every weight.
    pub fn with_zero_product(&self, weight: Scalar) -> Result<OOperator> {
        let domain = BimoduleAlgebra::with_zero_product(self.domain.bimodule().clone());
        OOperator::on_algebra(domain, self.map.clone(), weight)
    }
}

/// A Rota-Baxter operator `P` of weight `λ` on an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotaBaxterOperator {
    algebra: Algebra,
    map: Matrix,
    weight: Scalar,
}

impl RotaBaxterOperator {
    pub fn new(algebra: Algebra, map: Matrix, weight: Scalar) -> Result<Self> {
        let n = algebra.dim();
        if map.rows() != n || map.cols() != n {
            return Err(Error::dims(format!(
                "Rota-Baxter matrix is {}x{}, algebra has dimension {n}",
                map.rows(),
                map.cols()
            )));
        }
        for f in [map.field(), weight.field()] {
            if f != algebra.field() {
                return Err(Error::FieldMismatch(algebra.field(), f));
            }
        }
        Ok(RotaBaxterOperator { algebra, map, weight })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }
}

const RB_AXIOM: &str = "P(x)P(y) = P(P(x)y) + P(xP(y)) + λP(xy)";
const O_MODULE_AXIOM: &str = "α(u)*α(v) = α(ℓ(α(u))v) + α(u r(α(v)))";
const O_ALGEBRA_AXIOM: &str = "α(u)*α(v) = α(ℓ(α(u))v) + α(u r(α(v))) + λα(u∘v)";

impl Validator {
    pub fn rota_baxter(&self, rb: &RotaBaxterOperator) -> ValidationReport {
        let mut c = self.checker("Rota-Baxter operator");
        let t = rb.algebra.product();
        let n = rb.algebra.dim();
        let p = &rb.map;
        let images: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = t.product(&images[i], &images[j]);
                let mut inner = t.right_product(&images[i], j);
                inner = add_vectors(&inner, &t.left_product(i, &images[j]));
                axpy(&mut inner, &rb.weight, t.basis_product(i, j));
                let rhs = p.mul_vec(&inner);
                c.compare(RB_AXIOM, &[i, j], &lhs, &rhs);
                if c.done() {
                    break 'outer;
                }
            }
        }
        c.finish()
    }

    /// Checks the defining identity for the operator's own kind.
    pub fn o_operator(&self, op: &OOperator) -> ValidationReport {
        let (kind, axiom) = match op.kind() {
            OperatorKind::Module => ("O-operator on a module", O_MODULE_AXIOM),
            OperatorKind::Algebra => ("O-operator on an algebra", O_ALGEBRA_AXIOM),
        };
        let mut c = self.checker(kind);
        let bm = op.domain.bimodule();
        let t = op.codomain().product();
        let m = bm.dim();
        let images: Vec<Vector> = (0..m).map(|u| op.map.column(u)).collect();
        let lefts: Vec<Matrix> = images.iter().map(|a| bm.left_action(a)).collect();
        let rights: Vec<Matrix> = images.iter().map(|a| bm.right_action(a)).collect();
        'outer: for u in 0..m {
            for v in 0..m {
                let lhs = t.product(&images[u], &images[v]);
                let mut inner = add_vectors(&lefts[u].column(v), &rights[v].column(u));
                if let (Some(circ), Some(w)) = (op.domain.product(), &op.weight) {
                    axpy(&mut inner, w, circ.basis_product(u, v));
                }
                let rhs = op.map.mul_vec(&inner);
                c.compare(axiom, &[u, v], &lhs, &rhs);
                if c.done() {
                    break 'outer;
                }
            }
        }
        c.finish()
    }

    /// `f(x*y) = f(x)*f(y)` on basis pairs.
    pub fn multiplicative(&self, a: &Algebra, f: &Matrix) -> ValidationReport {
        let mut c = self.checker("algebra endomorphism");
        check_multiplicative_into(a, f, &mut c);
        c.finish()
    }

    /// Whether `g: source → target` is a morphism of bimodules (and of
    /// products, when both carry one) over the same algebra.
    pub fn domain_morphism(&self, source: &OperatorDomain, target: &OperatorDomain, g: &Matrix) -> ValidationReport {
        let mut c = self.checker("bimodule morphism");
        domain_morphism_into(source, target, g, &mut c);
        c.finish()
    }
}

fn check_multiplicative_into(a: &Algebra, f: &Matrix, c: &mut Checker) {
    let t = a.product();
    let n = a.dim();
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(t.basis_product(i, j));
            let rhs = t.product(&images[i], &images[j]);
            c.compare("f(x*y) = f(x)*f(y)", &[i, j], &lhs, &rhs);
            if c.done() {
                return;
            }
        }
    }
}

pub(crate) fn domain_morphism_into(source: &OperatorDomain, target: &OperatorDomain, g: &Matrix, c: &mut Checker) {
    let (s, t) = (source.bimodule(), target.bimodule());
    for (i, (ls, lt)) in s.left_matrices().iter().zip(t.left_matrices()).enumerate() {
        c.compare("g(ℓ(x)v) = ℓ(x)g(v)", &[i], g.mul(ls).entries(), lt.mul(g).entries());
        if c.done() {
            return;
        }
    }
    for (i, (rs, rt)) in s.right_matrices().iter().zip(t.right_matrices()).enumerate() {
        c.compare("g(v r(x)) = g(v) r(x)", &[i], g.mul(rs).entries(), rt.mul(g).entries());
        if c.done() {
            return;
        }
    }
    if let (Some(ps), Some(pt)) = (source.product(), target.product()) {
        let m = source.dim();
        let images: Vec<Vector> = (0..m).map(|u| g.column(u)).collect();
        for u in 0..m {
            for v in 0..m {
                let lhs = g.mul_vec(ps.basis_product(u, v));
                let rhs = pt.product(&images[u], &images[v]);
                c.compare("g(u∘v) = g(u)∘g(v)", &[u, v], &lhs, &rhs);
                if c.done() {
                    return;
                }
            }
        }
    }
}

pub fn validate_rota_baxter(rb: &RotaBaxterOperator) -> ValidationReport {
    Validator::default().rota_baxter(rb)
}

pub fn validate_o_module(op: &OOperator) -> Result<ValidationReport> {
    if op.kind() != OperatorKind::Module {
        return Err(Error::KindMismatch { expected: "module" });
    }
    Ok(Validator::default().o_operator(op))
}

pub fn validate_o_algebra(op: &OOperator) -> Result<ValidationReport> {
    if op.kind() != OperatorKind::Algebra {
        return Err(Error::KindMismatch { expected: "algebra" });
    }
    Ok(Validator::default().o_operator(op))
}

/// Either validator, chosen by the operator's kind.
pub fn validate_o_operator(op: &OOperator) -> ValidationReport {
    Validator::default().o_operator(op)
}

/// `P` as an O-operator of the same weight on `(A, *, L, R)`.
pub fn rb_as_o_operator(rb: &RotaBaxterOperator) -> Result<OOperator> {
    let domain = canonical_bimodule(&rb.algebra)?;
    OOperator::on_algebra(domain, rb.map.clone(), rb.weight.clone())
}

pub fn check_multiplicative(a: &Algebra, f: &Matrix) -> ValidationReport {
    Validator::default().multiplicative(a, f)
}

pub fn is_algebra_automorphism(a: &Algebra, f: &Matrix) -> bool {
    f.is_invertible() && Validator::first_failure().multiplicative(a, f).passed
}

fn check_same_shape(source: &OperatorDomain, target: &OperatorDomain) -> Result<()> {
    if source.kind() != target.kind() {
        return Err(Error::KindMismatch {
            expected: target.kind().as_str(),
        });
    }
    if source.algebra() != target.algebra() {
        return Err(Error::CodomainMismatch);
    }
    if source.dim() != target.dim() {
        return Err(Error::dims(format!(
            "domains of dimension {} and {}",
            source.dim(),
            target.dim()
        )));
    }
    Ok(())
}

/// `α∘g` on `source`, where `g: source → op.domain` must be an isomorphism.
pub fn compose_with_domain_iso(op: &OOperator, source: &OperatorDomain, g: &Matrix) -> Result<OOperator> {
    check_same_shape(source, &op.domain)?;
    if !g.is_invertible() || g.rows() != op.domain.dim() {
        return Err(Error::NotInvertible);
    }
    let rep = Validator::default().domain_morphism(source, &op.domain, g);
    if let Some(v) = rep.first() {
        return Err(Error::NotIntertwining(format!("{} at {:?}", v.axiom, v.indices)));
    }
    Ok(OOperator {
        domain: source.clone(),
        map: op.map.mul(g),
        weight: op.weight.clone(),
    })
}

/// `f∘α`, with `x` acting on the domain as `f⁻¹(x)` did before.
pub fn twist_by_range_automorphism(op: &OOperator, f: &Matrix) -> Result<OOperator> {
    let a = op.codomain();
    if f.rows() != a.dim() {
        return Err(Error::dims("automorphism size differs from the codomain dimension"));
    }
    let f_inv = f.invert().map_err(|_| Error::NotInvertible)?;
    let rep = Validator::first_failure().multiplicative(a, f);
    if let Some(v) = rep.first() {
        return Err(Error::NotMultiplicative(format!("{} at {:?}", v.axiom, v.indices)));
    }
    Ok(OOperator {
        domain: op.domain.precompose_actions(&f_inv),
        map: f.mul(&op.map),
        weight: op.weight.clone(),
    })
}
