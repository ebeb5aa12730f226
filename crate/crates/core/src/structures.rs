//! Associative algebras, bimodules, bimodule algebras and dendriform di- and
//! trialgebras, with validators that check every identity on all basis
//! tuples. By multilinearity that is equivalent to the identity on all
//! elements.
//!
//! Right actions are stored as matrices acting on coordinate columns:
//! for each basis element `b_i` of the acting algebra we keep `ρ_i` with
//! `coords(v r(b_i)) = ρ_i · coords(v)`. The right-module law
//! `v r(x*y) = (v r(x)) r(y)` therefore reads `ρ(x*y) = ρ(y) ρ(x)`.

use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, unit_vector, zero_vector, FieldSpec, Matrix, Scalar, StructureTensor,
    Vector,
};
use crate::report::{ValidationReport, Validator};

/// An algebra given by structure constants. Associativity is not assumed;
/// see [`validate_associativity`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    product: StructureTensor,
}

impl Algebra {
    pub fn new(product: StructureTensor) -> Self {
        Algebra { product }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Algebra::new(StructureTensor::zero(field, dim))
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.product.field()
    }

    pub fn product(&self) -> &StructureTensor {
        &self.product
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.product.product(x, y)
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<Algebra> {
        Ok(Algebra::new(self.product.to_field(field)?))
    }

    /// The same algebra written in the basis obtained by applying `h`.
    pub fn transport(&self, h: &Matrix) -> Result<Algebra> {
        Ok(Algebra::new(self.product.transport(h)?))
    }
}

/// A bimodule `(V, ℓ, r)` over an algebra `A`: one `m×m` matrix per basis
/// element of `A` for each side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bimodule {
    algebra: Algebra,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

fn check_action_family(name: &str, algebra: &Algebra, dim: usize, mats: &[Matrix]) -> Result<()> {
    if mats.len() != algebra.dim() {
        return Err(Error::dims(format!(
            "{name}: expected {} matrices (one per basis element), got {}",
            algebra.dim(),
            mats.len()
        )));
    }
    for (i, m) in mats.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::dims(format!(
                "{name}[{i}] is {}x{}, module has dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        if m.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), m.field()));
        }
    }
    Ok(())
}

impl Bimodule {
    pub fn new(algebra: Algebra, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        check_action_family("left action", &algebra, dim, &left)?;
        check_action_family("right action", &algebra, dim, &right)?;
        Ok(Bimodule {
            algebra,
            dim,
            left,
            right,
        })
    }

    /// `dim`-dimensional module on which `A` acts by zero.
    pub fn zero(algebra: Algebra, dim: usize) -> Self {
        let z = Matrix::zeros(algebra.field(), dim, dim);
        let n = algebra.dim();
        Bimodule {
            algebra,
            dim,
            left: vec![z.clone(); n],
            right: vec![z; n],
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn left_matrices(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_matrices(&self) -> &[Matrix] {
        &self.right
    }

    fn combine(&self, mats: &[Matrix], x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (xi, m) in x.iter().zip(mats) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi));
            }
        }
        out
    }

    /// Matrix of `ℓ(x)` for `x ∈ A`.
    pub fn left_action(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.left, x)
    }

    /// Matrix of `v ↦ v r(x)` for `x ∈ A`.
    pub fn right_action(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.right, x)
    }

    /// `ℓ(x) v`
    pub fn act_left(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field(), self.dim);
        for (xi, m) in x.iter().zip(&self.left) {
            if !xi.is_zero() {
                axpy(&mut out, xi, &m.mul_vec(v));
            }
        }
        out
    }

    /// `v r(x)`
    pub fn act_right(&self, v: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field(), self.dim);
        for (xi, m) in x.iter().zip(&self.right) {
            if !xi.is_zero() {
                axpy(&mut out, xi, &m.mul_vec(v));
            }
        }
        out
    }

    /// The actions precomposed with a linear map `φ: A → A`:
    /// the new action of `b_i` is the old action of `φ(b_i)`.
    pub fn precompose_actions(&self, phi: &Matrix) -> Bimodule {
        let n = self.algebra.dim();
        let left = (0..n).map(|i| self.left_action(&phi.column(i))).collect();
        let right = (0..n).map(|i| self.right_action(&phi.column(i))).collect();
        Bimodule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            left,
            right,
        }
    }

    /// Actions conjugated by an invertible `g: W → V`, giving the unique
    /// structure on `W` for which `g` is a bimodule isomorphism.
    pub fn pull_back(&self, g: &Matrix) -> Result<Bimodule> {
        let g_inv = g.invert()?;
        if g.rows() != self.dim {
            return Err(Error::dims("pull-back map has the wrong size"));
        }
        let conj = |m: &Matrix| g_inv.mul(m).mul(g);
        Ok(Bimodule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            left: self.left.iter().map(conj).collect(),
            right: self.right.iter().map(conj).collect(),
        })
    }
}

/// An `A`-bimodule algebra `(R, ∘, ℓ, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimoduleAlgebra {
    bimodule: Bimodule,
    product: StructureTensor,
}

impl BimoduleAlgebra {
    pub fn new(bimodule: Bimodule, product: StructureTensor) -> Result<Self> {
        if product.dim() != bimodule.dim() {
            return Err(Error::dims(format!(
                "product has dimension {}, module has {}",
                product.dim(),
                bimodule.dim()
            )));
        }
        if product.field() != bimodule.field() {
            return Err(Error::FieldMismatch(bimodule.field(), product.field()));
        }
        Ok(BimoduleAlgebra { bimodule, product })
    }

    /// A bimodule with the zero multiplication.
    pub fn with_zero_product(bimodule: Bimodule) -> Self {
        let product = StructureTensor::zero(bimodule.field(), bimodule.dim());
        BimoduleAlgebra { bimodule, product }
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn product(&self) -> &StructureTensor {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        self.bimodule.algebra()
    }

    pub fn field(&self) -> FieldSpec {
        self.bimodule.field()
    }

    pub fn into_parts(self) -> (Bimodule, StructureTensor) {
        (self.bimodule, self.product)
    }

    /// See [`Bimodule::pull_back`]; the product is pulled back as well.
    pub fn pull_back(&self, g: &Matrix) -> Result<BimoduleAlgebra> {
        let bimodule = self.bimodule.pull_back(g)?;
        let product = self.product.transport(&g.invert()?)?;
        Ok(BimoduleAlgebra { bimodule, product })
    }

    pub fn precompose_actions(&self, phi: &Matrix) -> BimoduleAlgebra {
        BimoduleAlgebra {
            bimodule: self.bimodule.precompose_actions(phi),
            product: self.product.clone(),
        }
    }
}

/// Common surface of dendriform dialgebras and trialgebras.
pub trait Dendriform {
    fn dim(&self) -> usize;
    fn field(&self) -> FieldSpec;
    /// The products with their names: `prec`, `succ` and, for trialgebras, `dot`.
    fn operations(&self) -> Vec<(&'static str, &StructureTensor)>;
    fn validate_with(&self, validator: &Validator) -> ValidationReport;

    fn validate(&self) -> ValidationReport {
        self.validate_with(&Validator::default())
    }

    /// `x ⋆ y`, the entrywise sum of all products.
    fn star_product(&self) -> Algebra {
        let ops = self.operations();
        let mut sum = ops[0].1.clone();
        for (_, t) in &ops[1..] {
            sum = sum.add(t);
        }
        Algebra::new(sum)
    }
}

/// A dendriform dialgebra `(V, ≺, ≻)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DendriformDi {
    prec: StructureTensor,
    succ: StructureTensor,
}

fn same_shape(a: &StructureTensor, b: &StructureTensor) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::dims(format!("products of dimension {} and {}", a.dim(), b.dim())));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    Ok(())
}

impl DendriformDi {
    pub fn new(prec: StructureTensor, succ: StructureTensor) -> Result<Self> {
        same_shape(&prec, &succ)?;
        Ok(DendriformDi { prec, succ })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        let z = StructureTensor::zero(field, dim);
        DendriformDi {
            prec: z.clone(),
            succ: z,
        }
    }

    pub fn prec(&self) -> &StructureTensor {
        &self.prec
    }

    pub fn succ(&self) -> &StructureTensor {
        &self.succ
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<DendriformDi> {
        DendriformDi::new(self.prec.to_field(field)?, self.succ.to_field(field)?)
    }

    /// The trialgebra with `· = 0`.
    pub fn to_tri(&self) -> DendriformTri {
        DendriformTri {
            prec: self.prec.clone(),
            succ: self.succ.clone(),
            dot: StructureTensor::zero(self.prec.field(), self.prec.dim()),
        }
    }
}

/// A dendriform trialgebra `(T, ≺, ≻, ·)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DendriformTri {
    prec: StructureTensor,
    succ: StructureTensor,
    dot: StructureTensor,
}

impl DendriformTri {
    pub fn new(prec: StructureTensor, succ: StructureTensor, dot: StructureTensor) -> Result<Self> {
        same_shape(&prec, &succ)?;
        same_shape(&prec, &dot)?;
        Ok(DendriformTri { prec, succ, dot })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        DendriformDi::zero(field, dim).to_tri()
    }

    pub fn prec(&self) -> &StructureTensor {
        &self.prec
    }

    pub fn succ(&self) -> &StructureTensor {
        &self.succ
    }

    pub fn dot(&self) -> &StructureTensor {
        &self.dot
    }

    pub fn to_field(&self, field: FieldSpec) -> Result<DendriformTri> {
        DendriformTri::new(
            self.prec.to_field(field)?,
            self.succ.to_field(field)?,
            self.dot.to_field(field)?,
        )
    }

    /// Drops `·` when it vanishes.
    pub fn to_di(&self) -> Option<DendriformDi> {
        self.dot.is_zero().then(|| DendriformDi {
            prec: self.prec.clone(),
            succ: self.succ.clone(),
        })
    }
}

impl Dendriform for DendriformDi {
    fn dim(&self) -> usize {
        self.prec.dim()
    }

    fn field(&self) -> FieldSpec {
        self.prec.field()
    }

    fn operations(&self) -> Vec<(&'static str, &StructureTensor)> {
        vec![("prec", &self.prec), ("succ", &self.succ)]
    }

    fn validate_with(&self, validator: &Validator) -> ValidationReport {
        validator.dendriform_di(self)
    }
}

impl Dendriform for DendriformTri {
    fn dim(&self) -> usize {
        self.prec.dim()
    }

    fn field(&self) -> FieldSpec {
        self.prec.field()
    }

    fn operations(&self) -> Vec<(&'static str, &StructureTensor)> {
        vec![("prec", &self.prec), ("succ", &self.succ), ("dot", &self.dot)]
    }

    fn validate_with(&self, validator: &Validator) -> ValidationReport {
        validator.dendriform_tri(self)
    }
}

/// `(x•y)∘z` and `x•(y∘z)` for basis elements, with `•`, `∘` given per side.
fn triple(
    outer_left: &StructureTensor,
    inner_left: &StructureTensor,
    outer_right: &StructureTensor,
    inner_right: &StructureTensor,
    i: usize,
    j: usize,
    k: usize,
) -> (Vector, Vector) {
    let lhs = outer_left.right_product(inner_left.basis_product(i, j), k);
    let rhs = outer_right.left_product(i, inner_right.basis_product(j, k));
    (lhs, rhs)
}

const TRI_AXIOMS: [&str; 7] = [
    "(x≺y)≺z = x≺(y⋆z)",
    "(x≻y)≺z = x≻(y≺z)",
    "(x⋆y)≻z = x≻(y≻z)",
    "(x≻y)·z = x≻(y·z)",
    "(x≺y)·z = x·(y≻z)",
    "(x·y)≺z = x·(y≺z)",
    "(x·y)·z = x·(y·z)",
];

impl Validator {
    pub fn associativity(&self, alg: &Algebra) -> ValidationReport {
        let mut c = self.checker("associative algebra");
        let t = alg.product();
        let n = alg.dim();
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (l, r) = triple(t, t, t, t, i, j, k);
                    c.compare("(xy)z = x(yz)", &[i, j, k], &l, &r);
                    if c.done() {
                        break 'outer;
                    }
                }
            }
        }
        c.finish()
    }

    pub fn bimodule(&self, v: &Bimodule) -> ValidationReport {
        let mut c = self.checker("bimodule");
        bimodule_laws(v, &mut c);
        c.finish()
    }

    pub fn bimodule_algebra(&self, r: &BimoduleAlgebra) -> ValidationReport {
        let mut c = self.checker("bimodule algebra");
        bimodule_laws(&r.bimodule, &mut c);
        if !c.done() {
            bimodule_algebra_laws(r, &mut c);
        }
        c.finish()
    }

    pub fn dendriform_di(&self, d: &DendriformDi) -> ValidationReport {
        let mut c = self.checker("dendriform dialgebra");
        let (p, s) = (&d.prec, &d.succ);
        let star = p.add(s);
        let n = d.dim();
        let axioms: [(&str, [&StructureTensor; 4]); 3] = [
            ("(x≺y)≺z = x≺(y⋆z)", [p, p, p, &star]),
            ("(x≻y)≺z = x≻(y≺z)", [p, s, s, p]),
            ("x≻(y≻z) = (x⋆y)≻z", [s, &star, s, s]),
        ];
        'outer: for (ax, (name, [ol, il, or, ir])) in axioms.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (mut l, mut r) = triple(ol, il, or, ir, i, j, k);
                        if ax == 2 {
                            // written with the nested side first
                            std::mem::swap(&mut l, &mut r);
                        }
                        c.compare(name, &[i, j, k], &l, &r);
                        if c.done() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        c.finish()
    }

    pub fn dendriform_tri(&self, t: &DendriformTri) -> ValidationReport {
        let mut c = self.checker("dendriform trialgebra");
        let (p, s, d) = (&t.prec, &t.succ, &t.dot);
        let star = p.add(s).add(d);
        let n = t.dim();
        // [outer-left, inner-left, outer-right, inner-right]
        let axioms: [[&StructureTensor; 4]; 7] = [
            [p, p, p, &star],
            [p, s, s, p],
            [s, &star, s, s],
            [d, s, s, d],
            [d, p, d, s],
            [p, d, d, p],
            [d, d, d, d],
        ];
        'outer: for (name, [ol, il, or, ir]) in TRI_AXIOMS.iter().zip(axioms.iter()) {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (l, r) = triple(ol, il, or, ir, i, j, k);
                        c.compare(name, &[i, j, k], &l, &r);
                        if c.done() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        c.finish()
    }
}

fn bimodule_laws(v: &Bimodule, c: &mut crate::report::Checker) {
    let a = v.algebra();
    let n = a.dim();
    let (ls, rs) = (&v.left, &v.right);
    for i in 0..n {
        for j in 0..n {
            let prod = a.product().basis_product(i, j);
            let lhs = v.left_action(prod);
            let rhs = ls[i].mul(&ls[j]);
            c.compare("ℓ(x*y) = ℓ(x)ℓ(y)", &[i, j], lhs.entries(), rhs.entries());
            if c.done() {
                return;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let prod = a.product().basis_product(i, j);
            let lhs = v.right_action(prod);
            let rhs = rs[j].mul(&rs[i]);
            c.compare("v r(x*y) = (v r(x)) r(y)", &[i, j], lhs.entries(), rhs.entries());
            if c.done() {
                return;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = rs[j].mul(&ls[i]);
            let rhs = ls[i].mul(&rs[j]);
            c.compare("(ℓ(x)v) r(y) = ℓ(x)(v r(y))", &[i, j], lhs.entries(), rhs.entries());
            if c.done() {
                return;
            }
        }
    }
}

fn bimodule_algebra_laws(r: &BimoduleAlgebra, c: &mut crate::report::Checker) {
    let m = r.dim();
    let n = r.algebra().dim();
    let f = r.field();
    let circ = r.product();
    let (ls, rs) = (&r.bimodule.left, &r.bimodule.right);
    let basis: Vec<Vector> = (0..m).map(|i| unit_vector(f, m, i)).collect();
    // ℓ(x)(v∘w) = (ℓ(x)v)∘w
    for x in 0..n {
        for v in 0..m {
            for w in 0..m {
                let lhs = ls[x].mul_vec(circ.basis_product(v, w));
                let rhs = circ.right_product(&ls[x].column(v), w);
                c.compare("ℓ(x)(v∘w) = (ℓ(x)v)∘w", &[x, v, w], &lhs, &rhs);
                if c.done() {
                    return;
                }
            }
        }
    }
    // (v∘w) r(x) = v∘(w r(x))
    for v in 0..m {
        for w in 0..m {
            for x in 0..n {
                let lhs = rs[x].mul_vec(circ.basis_product(v, w));
                let rhs = circ.left_product(v, &rs[x].column(w));
                c.compare("(v∘w)r(x) = v∘(w r(x))", &[v, w, x], &lhs, &rhs);
                if c.done() {
                    return;
                }
            }
        }
    }
    // (v r(x))∘w = v∘(ℓ(x)w)
    for v in 0..m {
        for x in 0..n {
            for w in 0..m {
                let lhs = circ.right_product(&rs[x].column(v), w);
                let rhs = circ.left_product(v, &ls[x].column(w));
                c.compare("(v r(x))∘w = v∘(ℓ(x)w)", &[v, x, w], &lhs, &rhs);
                if c.done() {
                    return;
                }
            }
        }
    }
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let lhs = circ.product(&circ.product(&basis[u], &basis[v]), &basis[w]);
                let rhs = circ.product(&basis[u], &circ.product(&basis[v], &basis[w]));
                c.compare("(u∘v)∘w = u∘(v∘w)", &[u, v, w], &lhs, &rhs);
                if c.done() {
                    return;
                }
            }
        }
    }
}

pub fn validate_associativity(alg: &Algebra) -> ValidationReport {
    Validator::default().associativity(alg)
}

pub fn validate_bimodule(v: &Bimodule) -> ValidationReport {
    Validator::default().bimodule(v)
}

pub fn validate_bimodule_algebra(r: &BimoduleAlgebra) -> ValidationReport {
    Validator::default().bimodule_algebra(r)
}

pub fn validate_dendriform_di(d: &DendriformDi) -> ValidationReport {
    Validator::default().dendriform_di(d)
}

pub fn validate_dendriform_tri(t: &DendriformTri) -> ValidationReport {
    Validator::default().dendriform_tri(t)
}

pub fn star_product<D: Dendriform + ?Sized>(d: &D) -> Algebra {
    d.star_product()
}

/// `(A, ∗, L, R)`: `A` acting on itself by left and right multiplication.
pub fn canonical_bimodule(a: &Algebra) -> Result<BimoduleAlgebra> {
    if !Validator::first_failure().associativity(a).passed {
        return Err(Error::NotAssociative);
    }
    let n = a.dim();
    let t = a.product();
    let left = (0..n).map(|i| t.left_multiplication(i)).collect();
    let right = (0..n).map(|i| t.right_multiplication(i)).collect();
    let bimodule = Bimodule::new(a.clone(), n, left, right)?;
    BimoduleAlgebra::new(bimodule, t.clone())
}
