//! Structure-constant representations of algebras, coalgebras and Hopf
//! algebras, plus the convolution algebra Hom(C, A), grouplike and character
//! enumeration, and duals.
//!
//! Tables are dense but all axiom checks walk basis elements and expand the
//! (typically sparse) structure constants term by term, so checks stay cheap
//! at the dimensions this crate targets.

use std::fmt;
use std::sync::Arc;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    quotient_with_section, tensor_index, vec_axpy, vec_cmp, vec_is_zero, vec_zero, Matrix, Vector,
};
use crate::Error;

// ---------------------------------------------------------------------------
// axiom reports
// ---------------------------------------------------------------------------

/// One named axiom with a witness for the first failing basis tuple.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed_named(name: &str) -> Self {
        AxiomCheck {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn failed_named(name: &str, witness: String) -> Self {
        AxiomCheck {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }

    fn pass(name: &str) -> Self {
        Self::passed_named(name)
    }

    fn fail(name: &str, witness: String) -> Self {
        Self::failed_named(name, witness)
    }
}

#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    /// Turn a failing report into an error (used by constructors that demand
    /// validity).
    pub fn into_result(self) -> Result<(), Error> {
        match self.first_failure() {
            None => Ok(()),
            Some(f) => Err(Error::AxiomFailure(format!(
                "{}: {}",
                f.name,
                f.witness.as_deref().unwrap_or("")
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// algebras
// ---------------------------------------------------------------------------

/// A finite-dimensional unital associative algebra by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    /// dim x dim^2; column `tensor_index(i, j, dim)` is the product e_i e_j.
    pub mult: Matrix,
    pub unit: Vector,
    /// Optional presentation: generators as basis-coordinate vectors. Used by
    /// the algebra-map search; everything else ignores it.
    pub generators: Option<Vec<Vector>>,
}

impl AlgebraData {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Matrix,
        unit: Vector,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        if mult.rows() != dim || mult.cols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table is {}x{}, expected {dim}x{}",
                mult.rows(),
                mult.cols(),
                dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit vector length".into()));
        }
        if mult.field() != &field || unit.iter().any(|s| s.field() != field) {
            return Err(Error::MixedFields("algebra tables".into()));
        }
        Ok(AlgebraData {
            field,
            dim,
            labels,
            mult,
            unit,
            generators: None,
        })
    }

    pub fn with_generators(mut self, gens: Vec<Vector>) -> Self {
        self.generators = Some(gens);
        self
    }

    /// Product of two elements given in basis coordinates.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = vec_zero(&self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x.mul(y);
                let col = tensor_index(i, j, self.dim);
                for r in 0..self.dim {
                    let m = self.mult.get(r, col);
                    if !m.is_zero() {
                        out[r] = out[r].add(&c.mul(m));
                    }
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.mult.col(tensor_index(i, j, self.dim))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        basis_vec(&self.field, self.dim, i)
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        Matrix::from_cols(
            self.field.clone(),
            self.dim,
            (0..self.dim)
                .map(|j| self.multiply(a, &self.basis_vector(j)))
                .collect(),
        )
        .expect("well-formed columns")
    }

    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        Matrix::from_cols(
            self.field.clone(),
            self.dim,
            (0..self.dim)
                .map(|j| self.multiply(&self.basis_vector(j), a))
                .collect(),
        )
        .expect("well-formed columns")
    }

    pub fn power(&self, a: &[Scalar], e: usize) -> Vector {
        let mut out = self.unit.clone();
        for _ in 0..e {
            out = self.multiply(&out, a);
        }
        out
    }

    /// Two-sided inverse of `a`, if it exists.
    pub fn inverse_of(&self, a: &[Scalar]) -> Option<Vector> {
        let l = self.left_mult_matrix(a);
        let x = l.solve_vec(&self.unit).ok()?;
        if self.multiply(&x, a) == self.unit {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity and unit laws, checked on all basis tuples.
    pub fn axiom_report(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let mut assoc = AxiomCheck::pass("algebra.associativity");
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let lhs = self.multiply(&ij, &self.basis_vector(k));
                    let rhs = self.multiply(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        assoc = AxiomCheck::fail(
                            "algebra.associativity",
                            format!(
                                "on basis triple ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            ),
                        );
                        break 'outer;
                    }
                }
            }
        }
        report.push(assoc);
        let mut unit = AxiomCheck::pass("algebra.unit");
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                unit =
                    AxiomCheck::fail("algebra.unit", format!("unit law fails on {}", self.labels[i]));
                break;
            }
        }
        report.push(unit);
        report
    }

    /// Opposite algebra (reversed multiplication).
    pub fn opposite(&self) -> AlgebraData {
        let mut mult = Matrix::zero(self.field.clone(), self.dim, self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let col = self.basis_product(j, i);
                let idx = tensor_index(i, j, self.dim);
                for r in 0..self.dim {
                    mult.set(r, idx, col[r].clone());
                }
            }
        }
        AlgebraData {
            field: self.field.clone(),
            dim: self.dim,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            generators: self.generators.clone(),
        }
    }

    /// Tensor product algebra A (x) B with componentwise multiplication.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let n = self.dim;
        let m = other.dim;
        let dim = n * m;
        let mut mult = Matrix::zero(self.field.clone(), dim, dim * dim);
        for i1 in 0..n {
            for i2 in 0..m {
                let a = tensor_index(i1, i2, m);
                for j1 in 0..n {
                    for j2 in 0..m {
                        let b = tensor_index(j1, j2, m);
                        let p1 = self.basis_product(i1, j1);
                        let p2 = other.basis_product(i2, j2);
                        let col = tensor_index(a, b, dim);
                        for (r1, x) in p1.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (r2, y) in p2.iter().enumerate() {
                                if y.is_zero() {
                                    continue;
                                }
                                let row = tensor_index(r1, r2, m);
                                let v = mult.get(row, col).add(&x.mul(y));
                                mult.set(row, col, v);
                            }
                        }
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(dim);
        for l1 in &self.labels {
            for l2 in &other.labels {
                labels.push(format!("{l1}(x){l2}"));
            }
        }
        let mut unit = vec_zero(&self.field, dim);
        for (i, x) in self.unit.iter().enumerate() {
            for (j, y) in other.unit.iter().enumerate() {
                unit[tensor_index(i, j, m)] = x.mul(y);
            }
        }
        AlgebraData {
            field: self.field.clone(),
            dim,
            labels,
            mult,
            unit,
            generators: None,
        }
    }

    /// Monic minimal polynomial of `a` over the base field, coefficients
    /// low-to-high.
    pub fn minimal_polynomial(&self, a: &[Scalar]) -> Vector {
        let mut powers: Vec<Vector> = vec![self.unit.clone()];
        loop {
            let mat = Matrix::from_cols(self.field.clone(), self.dim, powers.clone())
                .expect("power columns");
            let next = self.multiply(powers.last().unwrap(), a);
            if let Ok(coords) = mat.solve_vec(&next) {
                if mat.apply(&coords) == next {
                    // next = sum coords_i a^i, so minpoly = t^k - sum coords_i t^i
                    let mut poly: Vector = coords.iter().map(|c| c.neg()).collect();
                    poly.push(self.field.one());
                    return poly;
                }
            }
            powers.push(next);
            assert!(
                powers.len() <= self.dim + 1,
                "minimal polynomial degree exceeds dimension"
            );
        }
    }

    /// Evaluate a polynomial (coefficients low-to-high, in the base field) at
    /// an algebra element.
    pub fn eval_poly(&self, poly: &[Scalar], a: &[Scalar]) -> Vector {
        let mut out = vec_zero(&self.field, self.dim);
        for c in poly.iter().rev() {
            out = self.multiply(&out, a);
            vec_axpy(&mut out, c, &self.unit);
        }
        out
    }

    /// All elements in canonical enumeration order (finite base field only,
    /// q^dim <= cap).
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Vector>, Error> {
        let q = self.field.size().ok_or_else(|| {
            Error::Unsupported("cannot enumerate an algebra over the rationals".into())
        })?;
        let total = q
            .checked_pow(self.dim as u32)
            .filter(|&t| t <= cap as u128)
            .ok_or_else(|| Error::CapExceeded(format!("{q}^{} elements to enumerate", self.dim)))?;
        let elems = self.field.elements()?;
        let mut out = Vec::with_capacity(total as usize);
        for k in 0..total {
            let mut v = Vec::with_capacity(self.dim);
            let mut rest = k;
            for _ in 0..self.dim {
                v.push(elems[(rest % q) as usize].clone());
                rest /= q;
            }
            out.push(v);
        }
        Ok(out)
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_in_basis(v, &self.labels)
    }
}

/// Render a coordinate vector as a linear combination of labelled basis
/// elements, e.g. `y + 2*1`.
pub fn format_in_basis(v: &[Scalar], labels: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            terms.push(labels[i].clone());
        } else if c.neg().is_one() && matches!(c, Scalar::Rational(_)) {
            terms.push(format!("-{}", labels[i]));
        } else {
            let cs = format!("{c}");
            if cs.len() > 1 && (cs.contains('+') || cs[1..].contains('-')) {
                terms.push(format!("({cs})*{}", labels[i]));
            } else {
                terms.push(format!("{cs}*{}", labels[i]));
            }
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// coalgebras
// ---------------------------------------------------------------------------

/// A finite-dimensional coalgebra by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    /// dim^2 x dim; column i is Delta(e_i) in the tensor-square basis.
    pub comult: Matrix,
    /// 1 x dim.
    pub counit: Matrix,
}

impl CoalgebraData {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        comult: Matrix,
        counit: Matrix,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        if comult.rows() != dim * dim || comult.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication table is {}x{}, expected {}x{dim}",
                comult.rows(),
                comult.cols(),
                dim * dim
            )));
        }
        if counit.rows() != 1 || counit.cols() != dim {
            return Err(Error::DimensionMismatch("counit row".into()));
        }
        if comult.field() != &field || counit.field() != &field {
            return Err(Error::MixedFields("coalgebra tables".into()));
        }
        Ok(CoalgebraData {
            field,
            dim,
            labels,
            comult,
            counit,
        })
    }

    /// Delta(e_i) as sparse terms (coefficient, first leg, second leg).
    pub fn delta_terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let c = self.comult.get(tensor_index(a, b, self.dim), i);
                if !c.is_zero() {
                    out.push((c.clone(), a, b));
                }
            }
        }
        out
    }

    /// (Delta (x) id) Delta (e_i) as sparse three-leg terms.
    pub fn delta2_terms(&self, i: usize) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, a, b) in self.delta_terms(i) {
            for (c2, a1, a2) in self.delta_terms(a) {
                out.push((c.mul(&c2), a1, a2, b));
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        let mut out = self.field.zero();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&x.mul(self.counit.get(0, i)));
            }
        }
        out
    }

    /// Delta applied to an arbitrary element, densely in the tensor square.
    pub fn delta_of(&self, v: &[Scalar]) -> Vector {
        self.comult.apply(v)
    }

    pub fn is_cocommutative(&self) -> bool {
        for i in 0..self.dim {
            for a in 0..self.dim {
                for b in 0..a {
                    if self.comult.get(tensor_index(a, b, self.dim), i)
                        != self.comult.get(tensor_index(b, a, self.dim), i)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn axiom_report(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let mut coassoc = AxiomCheck::pass("coalgebra.coassociativity");
        let n = self.dim;
        for i in 0..n {
            let mut lhs = vec_zero(&self.field, n * n * n);
            for (c, a, b) in self.delta_terms(i) {
                for (c2, a1, a2) in self.delta_terms(a) {
                    let idx = (a1 * n + a2) * n + b;
                    lhs[idx] = lhs[idx].add(&c.mul(&c2));
                }
            }
            let mut rhs = vec_zero(&self.field, n * n * n);
            for (c, a, b) in self.delta_terms(i) {
                for (c2, b1, b2) in self.delta_terms(b) {
                    let idx = (a * n + b1) * n + b2;
                    rhs[idx] = rhs[idx].add(&c.mul(&c2));
                }
            }
            if lhs != rhs {
                coassoc = AxiomCheck::fail(
                    "coalgebra.coassociativity",
                    format!("fails on {}", self.labels[i]),
                );
                break;
            }
        }
        report.push(coassoc);
        let mut counit = AxiomCheck::pass("coalgebra.counit");
        for i in 0..n {
            let mut left = vec_zero(&self.field, n);
            let mut right = vec_zero(&self.field, n);
            for (c, a, b) in self.delta_terms(i) {
                left[b] = left[b].add(&c.mul(self.counit.get(0, a)));
                right[a] = right[a].add(&c.mul(self.counit.get(0, b)));
            }
            let e = basis_vec(&self.field, n, i);
            if left != e || right != e {
                counit =
                    AxiomCheck::fail("coalgebra.counit", format!("fails on {}", self.labels[i]));
                break;
            }
        }
        report.push(counit);
        report
    }

    /// Tensor-product coalgebra C (x) D (used as the domain of 2-cochains).
    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let n = self.dim;
        let m = other.dim;
        let dim = n * m;
        let mut comult = Matrix::zero(self.field.clone(), dim * dim, dim);
        for i in 0..n {
            for j in 0..m {
                let col = tensor_index(i, j, m);
                for (c1, a1, a2) in self.delta_terms(i) {
                    for (c2, b1, b2) in other.delta_terms(j) {
                        let first = tensor_index(a1, b1, m);
                        let second = tensor_index(a2, b2, m);
                        let row = tensor_index(first, second, dim);
                        let v = comult.get(row, col).add(&c1.mul(&c2));
                        comult.set(row, col, v);
                    }
                }
            }
        }
        let mut counit = Matrix::zero(self.field.clone(), 1, dim);
        let mut labels = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..m {
                counit.set(
                    0,
                    tensor_index(i, j, m),
                    self.counit.get(0, i).mul(other.counit.get(0, j)),
                );
                labels.push(format!("{}(x){}", self.labels[i], other.labels[j]));
            }
        }
        CoalgebraData {
            field: self.field.clone(),
            dim,
            labels,
            comult,
            counit,
        }
    }
}

pub fn basis_vec(field: &FieldSpec, dim: usize, i: usize) -> Vector {
    let mut v = vec_zero(field, dim);
    v[i] = field.one();
    v
}

// ---------------------------------------------------------------------------
// Hopf algebras
// ---------------------------------------------------------------------------

/// A Hopf algebra: compatible algebra and coalgebra on one space plus a
/// bijective antipode.
#[derive(Debug, Clone)]
pub struct HopfAlgebraData {
    pub algebra: Arc<AlgebraData>,
    pub coalgebra: Arc<CoalgebraData>,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

impl HopfAlgebraData {
    /// Build and dimension-check; the antipode must be invertible as a
    /// matrix. Axioms are NOT enforced here — run [`Self::check_hopf_axioms`]
    /// (the `verify` subcommand does) so broken fixtures stay representable.
    pub fn new(
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: Matrix,
    ) -> Result<Arc<Self>, Error> {
        if algebra.dim != coalgebra.dim {
            return Err(Error::DimensionMismatch(
                "algebra and coalgebra dimensions differ".into(),
            ));
        }
        if algebra.field != coalgebra.field {
            return Err(Error::MixedFields("algebra and coalgebra fields".into()));
        }
        if antipode.rows() != algebra.dim || antipode.cols() != algebra.dim {
            return Err(Error::DimensionMismatch("antipode matrix".into()));
        }
        let antipode_inv = antipode
            .inverse()
            .ok_or_else(|| Error::AxiomFailure("antipode matrix is singular".into()))?;
        Ok(Arc::new(HopfAlgebraData {
            algebra: Arc::new(algebra),
            coalgebra: Arc::new(coalgebra),
            antipode,
            antipode_inv,
        }))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> &FieldSpec {
        &self.algebra.field
    }

    pub fn labels(&self) -> &[String] {
        &self.algebra.labels
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Full axiom report: bialgebra compatibility plus both antipode axioms,
    /// each with the first failing basis tuple as witness.
    pub fn check_hopf_axioms(&self) -> AxiomReport {
        let alg = &self.algebra;
        let co = &self.coalgebra;
        let n = alg.dim;
        let mut report = alg.axiom_report();
        for c in co.axiom_report().checks {
            report.push(c);
        }

        // Delta is an algebra map
        let mut delta_mult = AxiomCheck::pass("bialgebra.comult_multiplicative");
        'dm: for i in 0..n {
            for j in 0..n {
                let prod = alg.basis_product(i, j);
                let lhs = co.delta_of(&prod);
                let mut rhs = vec_zero(&alg.field, n * n);
                for (c1, a1, a2) in co.delta_terms(i) {
                    for (c2, b1, b2) in co.delta_terms(j) {
                        let c = c1.mul(&c2);
                        let p1 = alg.basis_product(a1, b1);
                        let p2 = alg.basis_product(a2, b2);
                        for (r1, x) in p1.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (r2, y) in p2.iter().enumerate() {
                                if y.is_zero() {
                                    continue;
                                }
                                let idx = tensor_index(r1, r2, n);
                                rhs[idx] = rhs[idx].add(&c.mul(&x.mul(y)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    delta_mult = AxiomCheck::fail(
                        "bialgebra.comult_multiplicative",
                        format!(
                            "Delta({} {}) != Delta({}) Delta({})",
                            alg.labels[i], alg.labels[j], alg.labels[i], alg.labels[j]
                        ),
                    );
                    break 'dm;
                }
            }
        }
        report.push(delta_mult);

        let unit_delta = {
            let lhs = co.delta_of(&alg.unit);
            let mut rhs = vec_zero(&alg.field, n * n);
            for (i, x) in alg.unit.iter().enumerate() {
                for (j, y) in alg.unit.iter().enumerate() {
                    rhs[tensor_index(i, j, n)] = x.mul(y);
                }
            }
            if lhs == rhs {
                AxiomCheck::pass("bialgebra.comult_unital")
            } else {
                AxiomCheck::fail("bialgebra.comult_unital", "Delta(1) != 1(x)1".into())
            }
        };
        report.push(unit_delta);

        // counit is an algebra map
        let mut eps_mult = AxiomCheck::pass("bialgebra.counit_multiplicative");
        'em: for i in 0..n {
            for j in 0..n {
                let prod = alg.basis_product(i, j);
                let lhs = co.counit_of(&prod);
                let rhs = co.counit.get(0, i).mul(co.counit.get(0, j));
                if lhs != rhs {
                    eps_mult = AxiomCheck::fail(
                        "bialgebra.counit_multiplicative",
                        format!(
                            "eps({} {}) != eps({}) eps({})",
                            alg.labels[i], alg.labels[j], alg.labels[i], alg.labels[j]
                        ),
                    );
                    break 'em;
                }
            }
        }
        report.push(eps_mult);
        report.push(if co.counit_of(&alg.unit).is_one() {
            AxiomCheck::pass("bialgebra.counit_unital")
        } else {
            AxiomCheck::fail("bialgebra.counit_unital", "eps(1) != 1".into())
        });

        // antipode axioms m(S (x) id)Delta = eta.eps = m(id (x) S)Delta
        let mut left = AxiomCheck::pass("hopf.antipode_left");
        let mut right = AxiomCheck::pass("hopf.antipode_right");
        for i in 0..n {
            let mut lhs = vec_zero(&alg.field, n);
            let mut rhs = vec_zero(&alg.field, n);
            for (c, a, b) in co.delta_terms(i) {
                let sa = self.antipode.col(a);
                let sb = self.antipode.col(b);
                vec_axpy(&mut lhs, &c, &alg.multiply(&sa, &alg.basis_vector(b)));
                vec_axpy(&mut rhs, &c, &alg.multiply(&alg.basis_vector(a), &sb));
            }
            let target: Vector = alg
                .unit
                .iter()
                .map(|u| u.mul(co.counit.get(0, i)))
                .collect();
            if left.passed && lhs != target {
                left = AxiomCheck::fail(
                    "hopf.antipode_left",
                    format!("m(S(x)id)Delta != unit.eps on {}", alg.labels[i]),
                );
            }
            if right.passed && rhs != target {
                right = AxiomCheck::fail(
                    "hopf.antipode_right",
                    format!("m(id(x)S)Delta != unit.eps on {}", alg.labels[i]),
                );
            }
        }
        report.push(left);
        report.push(right);
        report.push(
            if self.antipode.matmul(&self.antipode_inv) == Matrix::identity(alg.field.clone(), n)
            {
                AxiomCheck::pass("hopf.antipode_invertible")
            } else {
                AxiomCheck::fail("hopf.antipode_invertible", "cached inverse is wrong".into())
            },
        );
        report
    }

    /// Dual Hopf algebra on the dual basis: multiplication is the transpose
    /// of Delta, comultiplication the transpose of multiplication, antipode
    /// the transpose of the antipode.
    pub fn dual(&self) -> Result<Arc<HopfAlgebraData>, Error> {
        let n = self.dim();
        let field = self.field().clone();
        let labels: Vec<String> = self.labels().iter().map(|l| format!("{l}*")).collect();
        let alg = AlgebraData::new(
            field.clone(),
            labels.clone(),
            self.coalgebra.comult.transpose(),
            self.coalgebra.counit.row(0).to_vec(),
        )?;
        let co = CoalgebraData::new(
            field.clone(),
            labels,
            self.algebra.mult.transpose(),
            Matrix::from_rows(field.clone(), n, vec![self.algebra.unit.clone()])?,
        )?;
        let h = HopfAlgebraData::new(alg, co, self.antipode.transpose())?;
        h.check_hopf_axioms().into_result()?;
        Ok(h)
    }

    /// All grouplike elements, deterministically ordered, verified to form a
    /// group under multiplication with inverses given by the antipode.
    ///
    /// Over small finite fields this is exhaustive enumeration; otherwise
    /// grouplikes are retrieved as characters of the dual algebra.
    pub fn grouplikes(&self, cap: u64) -> Result<Vec<Vector>, Error> {
        let alg = &self.algebra;
        let co = &self.coalgebra;
        let n = self.dim();
        let mut found: Vec<Vector> = Vec::new();
        let enumerable = alg
            .field
            .size()
            .and_then(|q| q.checked_pow(n as u32))
            .map(|t| t <= cap as u128)
            .unwrap_or(false);
        if enumerable {
            for g in alg.enumerate_elements(cap)? {
                if is_grouplike(co, &g) {
                    found.push(g);
                }
            }
        } else {
            // characters of the dual algebra are exactly the grouplikes
            let dual_alg = AlgebraData::new(
                alg.field.clone(),
                self.labels().iter().map(|l| format!("{l}*")).collect(),
                co.comult.transpose(),
                co.counit.row(0).to_vec(),
            )?;
            for row in characters(&dual_alg, cap)? {
                if is_grouplike(co, &row) {
                    found.push(row);
                } else {
                    return Err(Error::MathFailure(
                        "dual character failed the grouplike check".into(),
                    ));
                }
            }
        }
        found.sort_by(|a, b| vec_cmp(a, b));
        for g in &found {
            let inv = self.apply_antipode(g);
            if !found.contains(&inv) {
                return Err(Error::MathFailure(
                    "grouplikes not closed under antipode".into(),
                ));
            }
            if alg.multiply(g, &inv) != alg.unit {
                return Err(Error::MathFailure("S(g) is not the inverse of g".into()));
            }
            for h in &found {
                if !found.contains(&alg.multiply(g, h)) {
                    return Err(Error::MathFailure(
                        "grouplikes not closed under multiplication".into(),
                    ));
                }
            }
        }
        Ok(found)
    }
}

fn is_grouplike(co: &CoalgebraData, g: &[Scalar]) -> bool {
    if !co.counit_of(g).is_one() {
        return false;
    }
    let n = co.dim;
    let dg = co.delta_of(g);
    for a in 0..n {
        for b in 0..n {
            if dg[tensor_index(a, b, n)] != g[a].mul(&g[b]) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// characters and algebra maps
// ---------------------------------------------------------------------------

/// All unital algebra maps A -> k, presentation-free: the commutator ideal is
/// quotiented out, then the commutative quotient is split along roots of
/// minimal polynomials of basis elements. Returned as value rows on the basis
/// of A, sorted lexicographically.
pub fn characters(alg: &AlgebraData, cap: u64) -> Result<Vec<Vector>, Error> {
    let mut gens: Vec<Vector> = Vec::new();
    for i in 0..alg.dim {
        for j in 0..i {
            let c = crate::linalg::vec_sub(&alg.basis_product(i, j), &alg.basis_product(j, i));
            if !vec_is_zero(&c) {
                gens.push(c);
            }
        }
    }
    let ideal = ideal_closure(alg, gens);
    let (proj, sec) = quotient_with_section(&alg.field, alg.dim, &ideal)?;
    let q = quotient_algebra(alg, &proj, &sec);
    let mut chars_on_q: Vec<Vector> = Vec::new();
    split_characters(&q, cap, &mut chars_on_q)?;
    let mut rows: Vec<Vector> = chars_on_q
        .into_iter()
        .map(|phi| pull_back_row(alg.dim, &proj, &phi, &alg.field))
        .collect();
    rows.sort_by(|a, b| vec_cmp(a, b));
    rows.dedup();
    // safety: verify multiplicativity and unitality exactly
    rows.retain(|row| {
        let phi = |v: &[Scalar]| -> Scalar {
            let mut s = alg.field.zero();
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    s = s.add(&c.mul(&row[i]));
                }
            }
            s
        };
        if !phi(&alg.unit).is_one() {
            return false;
        }
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                if phi(&alg.basis_product(i, j)) != row[i].mul(&row[j]) {
                    return false;
                }
            }
        }
        true
    });
    Ok(rows)
}

fn pull_back_row(dim: usize, proj: &Matrix, phi: &[Scalar], field: &FieldSpec) -> Vector {
    let mut row = vec_zero(field, dim);
    for (i, r) in row.iter_mut().enumerate() {
        let img = proj.col(i);
        let mut v = field.zero();
        for (k, c) in img.iter().enumerate() {
            if !c.is_zero() {
                v = v.add(&c.mul(&phi[k]));
            }
        }
        *r = v;
    }
    row
}

/// Smallest two-sided ideal containing the given elements.
fn ideal_closure(alg: &AlgebraData, gens: Vec<Vector>) -> crate::linalg::Subspace {
    let mut space = crate::linalg::Subspace::from_spanning(alg.field.clone(), alg.dim, gens);
    loop {
        let mut new_vecs: Vec<Vector> = Vec::new();
        for r in 0..space.dim() {
            let v = space.basis_vector(r).to_vec();
            for k in 0..alg.dim {
                let e = alg.basis_vector(k);
                let lv = alg.multiply(&e, &v);
                if !space.contains(&lv) {
                    new_vecs.push(lv);
                }
                let rv = alg.multiply(&v, &e);
                if !space.contains(&rv) {
                    new_vecs.push(rv);
                }
            }
        }
        if new_vecs.is_empty() {
            return space;
        }
        let mut rows: Vec<Vector> = (0..space.dim())
            .map(|r| space.basis_vector(r).to_vec())
            .collect();
        rows.extend(new_vecs);
        space = crate::linalg::Subspace::from_spanning(alg.field.clone(), alg.dim, rows);
    }
}

/// Algebra structure on a quotient by an ideal, through a chosen section.
fn quotient_algebra(alg: &AlgebraData, proj: &Matrix, sec: &Matrix) -> AlgebraData {
    let dim = proj.rows();
    let mut mult = Matrix::zero(alg.field.clone(), dim, dim * dim);
    for i in 0..dim {
        let vi = sec.col(i);
        for j in 0..dim {
            let vj = sec.col(j);
            let p = proj.apply(&alg.multiply(&vi, &vj));
            let col = tensor_index(i, j, dim);
            for (r, x) in p.iter().enumerate() {
                mult.set(r, col, x.clone());
            }
        }
    }
    AlgebraData {
        field: alg.field.clone(),
        dim,
        labels: (0..dim).map(|i| format!("q{i}")).collect(),
        mult,
        unit: proj.apply(&alg.unit),
        generators: None,
    }
}

/// Recursive splitting of a commutative algebra along linear factors of
/// minimal polynomials; accumulates characters as value rows on the current
/// basis.
fn split_characters(alg: &AlgebraData, cap: u64, out: &mut Vec<Vector>) -> Result<(), Error> {
    if alg.dim == 0 || vec_is_zero(&alg.unit) {
        return Ok(());
    }
    if alg.dim == 1 {
        // k * u with u invertible: the character sends x*u to x
        let u = &alg.unit[0];
        let inv = u
            .inv()
            .ok_or_else(|| Error::MathFailure("quotient unit not invertible".into()))?;
        out.push(vec![inv]);
        return Ok(());
    }
    let mut split_elem = None;
    for i in 0..alg.dim {
        let e = alg.basis_vector(i);
        let mp = alg.minimal_polynomial(&e);
        if mp.len() > 2 {
            split_elem = Some((e, mp));
            break;
        }
    }
    let Some((e, mp)) = split_elem else {
        return Err(Error::MathFailure(
            "no splitting element in a quotient of dimension >= 2".into(),
        ));
    };
    for lambda in roots_in_base_field(&alg.field, &mp, cap)? {
        let mut shifted = e.clone();
        for (k, u) in alg.unit.iter().enumerate() {
            shifted[k] = shifted[k].sub(&lambda.mul(u));
        }
        let ideal = ideal_closure(alg, vec![shifted]);
        if ideal.dim() == alg.dim {
            continue;
        }
        let (proj, sec) = quotient_with_section(&alg.field, alg.dim, &ideal)?;
        let q = quotient_algebra(alg, &proj, &sec);
        let mut sub = Vec::new();
        split_characters(&q, cap, &mut sub)?;
        for phi in sub {
            out.push(pull_back_row(alg.dim, &proj, &phi, &alg.field));
        }
    }
    Ok(())
}

/// Roots of a polynomial in the base field: rational-root search over the
/// rationals, exhaustive evaluation over finite fields.
pub fn roots_in_base_field(
    field: &FieldSpec,
    poly: &[Scalar],
    cap: u64,
) -> Result<Vec<Scalar>, Error> {
    match field {
        FieldSpec::Finite(_) => {
            let q = field.size().unwrap();
            if q > cap as u128 {
                return Err(Error::CapExceeded(format!("{q} field elements to try")));
            }
            let mut roots = Vec::new();
            for x in field.elements()? {
                if eval_scalar_poly(field, poly, &x).is_zero() {
                    roots.push(x);
                }
            }
            Ok(roots)
        }
        FieldSpec::Rational => rational_roots(poly),
    }
}

fn eval_scalar_poly(field: &FieldSpec, poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut out = field.zero();
    for c in poly.iter().rev() {
        out = out.mul(x).add(c);
    }
    out
}

/// Rational roots of a rational-coefficient polynomial by the rational root
/// theorem on the cleared-denominator integer form.
fn rational_roots(poly: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    use num::bigint::BigInt;
    use num::rational::BigRational;
    use num::{Signed, Zero};
    let coeffs: Vec<BigRational> = poly
        .iter()
        .map(|s| match s {
            Scalar::Rational(r) => r.clone(),
            _ => unreachable!("rational poly"),
        })
        .collect();
    let mut lcm = BigInt::from(1);
    for c in &coeffs {
        lcm = num::integer::lcm(lcm.clone(), c.denom().clone());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().map(|c| c.is_zero()).unwrap_or(false) {
        ints.pop();
    }
    if ints.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Scalar::Rational(BigRational::zero()));
        ints.drain(0..low);
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let p_divs = small_divisors(&a0)?;
    let q_divs = small_divisors(&an)?;
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p.clone() * BigInt::from(sign), q.clone());
                let mut val = BigRational::zero();
                for c in ints.iter().rev() {
                    val = val * &cand + BigRational::from_integer(c.clone());
                }
                if val.is_zero() {
                    let s = Scalar::Rational(cand);
                    if !roots.contains(&s) {
                        roots.push(s);
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    Ok(roots)
}

fn small_divisors(n: &num::bigint::BigInt) -> Result<Vec<num::bigint::BigInt>, Error> {
    use num::bigint::BigInt;
    use num::{Signed, ToPrimitive};
    let v = n.abs().to_u64().ok_or_else(|| {
        Error::CapExceeded("polynomial coefficients too large for root search".into())
    })?;
    if v == 0 {
        return Ok(vec![BigInt::from(1)]);
    }
    let mut divs = Vec::new();
    let mut f = 1u64;
    while f * f <= v {
        if v % f == 0 {
            divs.push(BigInt::from(f));
            if f != v / f {
                divs.push(BigInt::from(v / f));
            }
        }
        f += 1;
    }
    divs.sort();
    Ok(divs)
}

/// All unital multiplicative linear maps A -> B for a commutative target B
/// over the same base field. For one-dimensional B (the base field itself)
/// this reduces to [`characters`]. Otherwise A must carry a presentation:
/// candidate images of each generator are the roots of its minimal polynomial
/// in B, found by exhaustive search, and combinations are filtered by full
/// multiplicativity. Results are dim(B) x dim(A) matrices in a deterministic
/// lexicographic order.
pub fn algebra_maps(a: &AlgebraData, b: &AlgebraData, cap: u64) -> Result<Vec<Matrix>, Error> {
    if a.field != b.field {
        return Err(Error::MixedFields("algebra map endpoints".into()));
    }
    if b.dim == 1 {
        let unit_inv = b.unit[0]
            .inv()
            .ok_or_else(|| Error::MathFailure("target unit is zero".into()))?;
        let rows = characters(a, cap)?;
        let mut out = Vec::new();
        for row in rows {
            let m = Matrix::from_rows(
                a.field.clone(),
                a.dim,
                vec![row.iter().map(|v| v.mul(&unit_inv)).collect()],
            )?;
            out.push(m);
        }
        out.sort_by(matrix_cmp);
        return Ok(out);
    }
    if !b.is_commutative() {
        return Err(Error::Unsupported(
            "algebra maps into a non-commutative target".into(),
        ));
    }
    let gens = a.generators.clone().ok_or_else(|| {
        Error::NoPresentation("algebra-map search needs a generating set on the domain".into())
    })?;
    // spanning word basis: products of generators, greedily independent,
    // each word remembered as parent-word * generator
    let mut words: Vec<(Vector, Option<(usize, usize)>)> = vec![(a.unit.clone(), None)];
    let mut span =
        crate::linalg::Subspace::from_spanning(a.field.clone(), a.dim, vec![a.unit.clone()]);
    let mut frontier: Vec<usize> = vec![0];
    while span.dim() < a.dim {
        let mut next_frontier = Vec::new();
        for &wi in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let v = a.multiply(&words[wi].0, g);
                if !span.contains(&v) {
                    words.push((v.clone(), Some((wi, gi))));
                    next_frontier.push(words.len() - 1);
                    let mut rows: Vec<Vector> = (0..span.dim())
                        .map(|r| span.basis_vector(r).to_vec())
                        .collect();
                    rows.push(v);
                    span = crate::linalg::Subspace::from_spanning(a.field.clone(), a.dim, rows);
                }
            }
        }
        if next_frontier.is_empty() {
            return Err(Error::NoPresentation(
                "presentation does not generate the algebra".into(),
            ));
        }
        frontier = next_frontier;
    }
    let b_elems = b.enumerate_elements(cap)?;
    let mut candidates: Vec<Vec<Vector>> = Vec::new();
    for g in &gens {
        let mp = a.minimal_polynomial(g);
        let mut roots = Vec::new();
        for cand in &b_elems {
            if vec_is_zero(&b.eval_poly(&mp, cand)) {
                roots.push(cand.clone());
            }
        }
        candidates.push(roots);
    }
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if total > cap as u128 {
        return Err(Error::CapExceeded(format!(
            "{total} generator-image combinations"
        )));
    }
    let word_mat = Matrix::from_cols(
        a.field.clone(),
        a.dim,
        words.iter().map(|(w, _)| w.clone()).collect(),
    )?;
    let mut out: Vec<Matrix> = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    'combos: loop {
        let images: Vec<&Vector> = idx
            .iter()
            .enumerate()
            .map(|(g, &i)| &candidates[g][i])
            .collect();
        let mut word_images: Vec<Vector> = Vec::with_capacity(words.len());
        for (_, parent) in &words {
            let img = match parent {
                None => b.unit.clone(),
                Some((wi, gi)) => b.multiply(&word_images[*wi], images[*gi]),
            };
            word_images.push(img);
        }
        let mut phi = Matrix::zero(a.field.clone(), b.dim, a.dim);
        let mut consistent = true;
        for i in 0..a.dim {
            match word_mat.solve_vec(&a.basis_vector(i)) {
                Ok(coords) => {
                    let mut img = vec_zero(&a.field, b.dim);
                    for (w, c) in coords.iter().enumerate() {
                        if !c.is_zero() {
                            vec_axpy(&mut img, c, &word_images[w]);
                        }
                    }
                    for (r, v) in img.iter().enumerate() {
                        phi.set(r, i, v.clone());
                    }
                }
                Err(_) => {
                    consistent = false;
                    break;
                }
            }
        }
        if consistent {
            let ok = phi.apply(&a.unit) == b.unit
                && (0..a.dim).all(|i| {
                    (0..a.dim).all(|j| {
                        phi.apply(&a.basis_product(i, j)) == b.multiply(&phi.col(i), &phi.col(j))
                    })
                });
            if ok && !out.contains(&phi) {
                out.push(phi);
            }
        }
        let mut carry = 0;
        loop {
            if carry == idx.len() {
                break 'combos;
            }
            idx[carry] += 1;
            if idx[carry] < candidates[carry].len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
    }
    out.sort_by(matrix_cmp);
    Ok(out)
}

pub fn matrix_cmp(a: &Matrix, b: &Matrix) -> std::cmp::Ordering {
    for i in 0..a.rows().min(b.rows()) {
        let o = vec_cmp(a.row(i), b.row(i));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    a.rows().cmp(&b.rows())
}

// ---------------------------------------------------------------------------
// convolution
// ---------------------------------------------------------------------------

/// A linear map from a coalgebra to an algebra, the carrier of the
/// convolution product.
#[derive(Debug, Clone)]
pub struct ConvolutionMap {
    pub domain: Arc<CoalgebraData>,
    pub codomain: Arc<AlgebraData>,
    /// codomain.dim x domain.dim.
    pub matrix: Matrix,
}

impl ConvolutionMap {
    pub fn new(
        domain: Arc<CoalgebraData>,
        codomain: Arc<AlgebraData>,
        matrix: Matrix,
    ) -> Result<Self, Error> {
        if matrix.rows() != codomain.dim || matrix.cols() != domain.dim {
            return Err(Error::DimensionMismatch(format!(
                "convolution map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.dim,
                domain.dim
            )));
        }
        Ok(ConvolutionMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn apply_basis(&self, i: usize) -> Vector {
        self.matrix.col(i)
    }

    fn same_context(&self, other: &ConvolutionMap) -> bool {
        (Arc::ptr_eq(&self.domain, &other.domain) || *self.domain == *other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || *self.codomain == *other.codomain)
    }
}

/// The convolution unit eta.eps.
pub fn conv_unit(domain: &Arc<CoalgebraData>, codomain: &Arc<AlgebraData>) -> ConvolutionMap {
    let mut m = Matrix::zero(codomain.field.clone(), codomain.dim, domain.dim);
    for j in 0..domain.dim {
        let e = domain.counit.get(0, j);
        for (i, u) in codomain.unit.iter().enumerate() {
            m.set(i, j, e.mul(u));
        }
    }
    ConvolutionMap {
        domain: Arc::clone(domain),
        codomain: Arc::clone(codomain),
        matrix: m,
    }
}

/// The identity of H viewed in Hom(H, H).
pub fn identity_map(h: &HopfAlgebraData) -> ConvolutionMap {
    ConvolutionMap {
        domain: Arc::clone(&h.coalgebra),
        codomain: Arc::clone(&h.algebra),
        matrix: Matrix::identity(h.field().clone(), h.dim()),
    }
}

/// Convolution product (f*g)(h) = f(h_(1)) g(h_(2)).
pub fn convolve(f: &ConvolutionMap, g: &ConvolutionMap) -> Result<ConvolutionMap, Error> {
    if !f.same_context(g) {
        return Err(Error::MixedFields(
            "convolution of maps with different domain or codomain".into(),
        ));
    }
    let alg = &f.codomain;
    let co = &f.domain;
    let mut m = Matrix::zero(alg.field.clone(), alg.dim, co.dim);
    for h in 0..co.dim {
        let mut acc = vec_zero(&alg.field, alg.dim);
        for (c, a, b) in co.delta_terms(h) {
            let prod = alg.multiply(&f.apply_basis(a), &g.apply_basis(b));
            vec_axpy(&mut acc, &c, &prod);
        }
        for (i, v) in acc.iter().enumerate() {
            m.set(i, h, v.clone());
        }
    }
    ConvolutionMap::new(Arc::clone(co), Arc::clone(alg), m)
}

/// Convolution inverse: solves the linear system f*u = eta.eps and verifies
/// the two-sided identity; None when unsolvable or when verification fails.
pub fn conv_inverse(f: &ConvolutionMap) -> Option<ConvolutionMap> {
    let alg = &f.codomain;
    let co = &f.domain;
    let na = alg.dim;
    let nh = co.dim;
    // unknowns: u[a, k] flattened as a * nh + k
    let mut sys = Matrix::zero(alg.field.clone(), na * nh, na * nh);
    let mut rhs = vec_zero(&alg.field, na * nh);
    for h in 0..nh {
        for (c, a, b) in co.delta_terms(h) {
            let l = alg.left_mult_matrix(&f.apply_basis(a));
            for row in 0..na {
                for acol in 0..na {
                    let coef = l.get(row, acol);
                    if coef.is_zero() {
                        continue;
                    }
                    let r = tensor_index(row, h, nh);
                    let ccol = tensor_index(acol, b, nh);
                    let v = sys.get(r, ccol).add(&c.mul(coef));
                    sys.set(r, ccol, v);
                }
            }
        }
        let eps = co.counit.get(0, h);
        for (i, u) in alg.unit.iter().enumerate() {
            rhs[tensor_index(i, h, nh)] = eps.mul(u);
        }
    }
    let sol = sys.solve_vec(&rhs).ok()?;
    let mut m = Matrix::zero(alg.field.clone(), na, nh);
    for a in 0..na {
        for h in 0..nh {
            m.set(a, h, sol[tensor_index(a, h, nh)].clone());
        }
    }
    let u = ConvolutionMap::new(Arc::clone(co), Arc::clone(alg), m).ok()?;
    let unit = conv_unit(co, alg);
    if convolve(&u, f).ok()?.matrix != unit.matrix {
        return None;
    }
    if convolve(f, &u).ok()?.matrix != unit.matrix {
        return None;
    }
    Some(u)
}

impl fmt::Display for ConvolutionMap {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.domain.dim {
            writeln!(
                w,
                "{} -> {}",
                self.domain.labels[j],
                format_in_basis(&self.apply_basis(j), &self.codomain.labels)
            )?;
        }
        Ok(())
    }
}
