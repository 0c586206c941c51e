//! Cleftness: total integrals, their normalization, the induced measuring
//! action on the coinvariants, the 2-cocycle of a cleft extension, crossed
//! products, and the explicit comodule-algebra isomorphism with them.
//!
//! The 2-cocycle condition is operational: a table qualifies exactly when the
//! crossed product it defines is associative and unital.

use std::sync::Arc;

use crate::field::Scalar;
use crate::galois::{
    coinvariants, galois_check, morphism_space, CoinvariantAlgebra, ComoduleAlgebraData,
    GaloisOutcome, MorphismSpace,
};
use crate::hopf::{characters, conv_inverse, conv_unit, convolve, ConvolutionMap};
use crate::linalg::{tensor_index, vec_axpy, vec_cmp, vec_is_zero, vec_zero, Matrix, Vector};
use crate::Error;

/// A convolution-invertible colinear map t: H -> A, normalized so t(1) = 1,
/// with its convolution inverse.
#[derive(Debug, Clone)]
pub struct TotalIntegral {
    pub map: ConvolutionMap,
    pub inverse: ConvolutionMap,
    pub unit_normalized: bool,
    pub algebra_map: bool,
}

/// Result of an integral search: a definitive none is only possible when the
/// candidate space was exhausted completely (finite fields).
#[derive(Debug)]
pub enum IntegralSearch {
    Found(TotalIntegral),
    NoneDefinitive,
    CapExceeded,
}

impl IntegralSearch {
    pub fn found(self) -> Result<TotalIntegral, Error> {
        match self {
            IntegralSearch::Found(t) => Ok(t),
            IntegralSearch::NoneDefinitive => {
                Err(Error::MathFailure("no total integral exists".into()))
            }
            IntegralSearch::CapExceeded => {
                Err(Error::CapExceeded("integral search".into()))
            }
        }
    }
}

fn colinearity_holds(a: &ComoduleAlgebraData, t: &Matrix) -> bool {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    for h in 0..nh {
        let th = t.col(h);
        let lhs = a.rho_of(&th);
        let mut rhs = vec_zero(&a.algebra.field, na * nh);
        for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
            let t1 = t.col(h1);
            for (i, x) in t1.iter().enumerate() {
                if !x.is_zero() {
                    let idx = tensor_index(i, h2, nh);
                    rhs[idx] = rhs[idx].add(&c.mul(x));
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Try to upgrade a matrix into a normalized total integral: requires
/// colinearity, convolution invertibility, and applies the standard
/// normalization t' = u(1) t when t(1) != 1.
pub fn integral_from_matrix(a: &ComoduleAlgebraData, matrix: Matrix) -> Option<TotalIntegral> {
    normalize_candidate(a, matrix)
}

fn normalize_candidate(
    a: &ComoduleAlgebraData,
    matrix: Matrix,
) -> Option<TotalIntegral> {
    if !colinearity_holds(a, &matrix) {
        return None;
    }
    let t = ConvolutionMap::new(
        Arc::clone(&a.hopf.coalgebra),
        Arc::clone(&a.algebra),
        matrix,
    )
    .ok()?;
    let u = conv_inverse(&t)?;
    // locate 1_H in coordinates
    let unit_h = &a.hopf.algebra.unit;
    let t1 = t.apply(unit_h);
    let (t, u) = if t1 == a.algebra.unit {
        (t, u)
    } else {
        // t' = u(1) t, u' = u t(1)
        let u1 = u.apply(unit_h);
        let left = a.algebra.left_mult_matrix(&u1);
        let tm = left.matmul(&t.matrix);
        let right = a.algebra.right_mult_matrix(&t1);
        let um = right.matmul(&u.matrix);
        let t2 = ConvolutionMap::new(
            Arc::clone(&a.hopf.coalgebra),
            Arc::clone(&a.algebra),
            tm,
        )
        .ok()?;
        let u2 = ConvolutionMap::new(
            Arc::clone(&a.hopf.coalgebra),
            Arc::clone(&a.algebra),
            um,
        )
        .ok()?;
        if !colinearity_holds(a, &t2.matrix) {
            return None;
        }
        (t2, u2)
    };
    // verify the normalized pair exactly
    if t.apply(unit_h) != a.algebra.unit {
        return None;
    }
    let unit = conv_unit(&a.hopf.coalgebra, &a.algebra);
    if convolve(&t, &u).ok()?.matrix != unit.matrix {
        return None;
    }
    if convolve(&u, &t).ok()?.matrix != unit.matrix {
        return None;
    }
    let algebra_map = is_algebra_map(a, &t.matrix);
    Some(TotalIntegral {
        map: t,
        inverse: u,
        unit_normalized: true,
        algebra_map,
    })
}

fn is_algebra_map(a: &ComoduleAlgebraData, t: &Matrix) -> bool {
    let nh = a.hopf.dim();
    if t.apply(&a.hopf.algebra.unit) != a.algebra.unit {
        return false;
    }
    for i in 0..nh {
        for j in 0..nh {
            let lhs = t.apply(&a.hopf.algebra.basis_product(i, j));
            let rhs = a.algebra.multiply(&t.col(i), &t.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Candidate integrals built from the translation table and a linear
/// functional phi: t(h) = sum_i l_i(S^{-1} h) phi(r_i(S^{-1} h)).
fn gamma_candidates(a: &Arc<ComoduleAlgebraData>, cap: u64) -> Vec<Matrix> {
    let Ok(GaloisOutcome::Certified(cert)) = galois_check(a) else {
        return Vec::new();
    };
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let mut functionals: Vec<Vector> = Vec::new();
    // characters first: for Galois objects these produce algebra maps
    if cert.coinv.dim() == 1 {
        if let Ok(chars) = characters(&a.algebra, cap) {
            functionals.extend(chars);
        }
    }
    for i in 0..na {
        functionals.push(crate::hopf::basis_vec(field, na, i));
    }
    let mut out = Vec::new();
    for phi in functionals {
        let mut m = Matrix::zero(field.clone(), na, nh);
        for h in 0..nh {
            let sh = a.hopf.antipode_inv.col(h);
            let lift = cert.gamma_of(&sh);
            let mut acc = vec_zero(field, na);
            for (idx, c) in lift.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, j) = (idx / na, idx % na);
                let val = c.mul(&phi[j]);
                if !val.is_zero() {
                    acc[i] = acc[i].add(&val);
                }
            }
            for (r, x) in acc.iter().enumerate() {
                m.set(r, h, x.clone());
            }
        }
        out.push(m);
    }
    out
}

/// Search Hom^H(H, A) for a convolution-invertible element, normalized so
/// t(1) = 1. Over finite fields the colinear space is exhausted (up to the
/// cap), so a miss is definitive. Over the rationals, translation-map
/// candidates are tried first, then small-height elements of the colinear
/// space; an unsuccessful bounded search reports a cap, never a none.
pub fn find_total_integral(
    a: &Arc<ComoduleAlgebraData>,
    cap: u64,
) -> Result<IntegralSearch, Error> {
    search_integral(a, cap, false)
}

/// Same search restricted to algebra maps in Hom^H(H, A); over finite fields
/// exhaustion makes a none definitive, over the rationals the search goes
/// through characters of A (Galois objects) and reports a cap otherwise.
pub fn find_algebra_integral(
    a: &Arc<ComoduleAlgebraData>,
    cap: u64,
) -> Result<IntegralSearch, Error> {
    search_integral(a, cap, true)
}

fn search_integral(
    a: &Arc<ComoduleAlgebraData>,
    cap: u64,
    algebra_only: bool,
) -> Result<IntegralSearch, Error> {
    let coinv = coinvariants(a)?;
    let space = morphism_space(a, &coinv, MorphismSpace::BaseToTotal)?;
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = a.algebra.field.clone();
    let s = space.dim();
    let unmatrix = |v: &[Scalar]| -> Matrix {
        let mut m = Matrix::zero(field.clone(), na, nh);
        for i in 0..na {
            for h in 0..nh {
                m.set(i, h, v[tensor_index(i, h, nh)].clone());
            }
        }
        m
    };
    match field.size() {
        Some(q) => {
            let total = q.checked_pow(s as u32).filter(|&t| t <= cap as u128);
            let Some(total) = total else {
                return Ok(IntegralSearch::CapExceeded);
            };
            let elems = field.elements()?;
            let unit_h = &a.hopf.algebra.unit;
            // first success in the fixed enumeration order; a miss is
            // definitive because the whole space is walked
            for k in 0..total {
                let mut rest = k;
                let mut vec = vec_zero(&field, na * nh);
                for r in 0..s {
                    let c = &elems[(rest % q) as usize];
                    rest /= q;
                    if !c.is_zero() {
                        vec_axpy(&mut vec, c, space.basis_vector(r));
                    }
                }
                if vec_is_zero(&vec) {
                    continue;
                }
                let m = unmatrix(&vec);
                if algebra_only && !is_algebra_map(a, &m) {
                    continue;
                }
                // necessary condition, far cheaper than the convolution solve
                if a.algebra.inverse_of(&m.apply(unit_h)).is_none() {
                    continue;
                }
                if let Some(t) = normalize_candidate(a, m) {
                    if algebra_only && !t.algebra_map {
                        continue;
                    }
                    return Ok(IntegralSearch::Found(t));
                }
            }
            Ok(IntegralSearch::NoneDefinitive)
        }
        None => {
            // rationals: translation-table candidates first
            for m in gamma_candidates(a, cap) {
                if algebra_only && !is_algebra_map(a, &m) {
                    continue;
                }
                if let Some(t) = normalize_candidate(a, m) {
                    if !algebra_only || t.algebra_map {
                        return Ok(IntegralSearch::Found(t));
                    }
                }
            }
            // bounded deterministic small-height sweep over the colinear space
            if s > 0 {
                let heights: Vec<Scalar> =
                    [0i64, 1, -1, 2, -2, 3, -3].iter().map(|&n| field.from_integer(n)).collect();
                let trials: u64 = (heights.len() as u64).pow(s.min(8) as u32).min(10_000);
                for k in 0..trials {
                    let mut rest = k;
                    let mut vec = vec_zero(&field, na * nh);
                    for r in 0..s {
                        let c = &heights[(rest % heights.len() as u64) as usize];
                        rest /= heights.len() as u64;
                        if !c.is_zero() {
                            vec_axpy(&mut vec, c, space.basis_vector(r));
                        }
                    }
                    if vec_is_zero(&vec) {
                        continue;
                    }
                    let m = unmatrix(&vec);
                    if algebra_only && !is_algebra_map(a, &m) {
                        continue;
                    }
                    if let Some(t) = normalize_candidate(a, m) {
                        if !algebra_only || t.algebra_map {
                            return Ok(IntegralSearch::Found(t));
                        }
                    }
                }
            }
            Ok(IntegralSearch::CapExceeded)
        }
    }
}

/// The measuring action of H on B extracted from a total integral:
/// omega(h (x) b) = t(h_(1)) b u(h_(2)), stored as one dim B x dim B matrix
/// per H basis element.
#[derive(Debug, Clone)]
pub struct OmegaAction {
    pub matrices: Vec<Matrix>,
}

impl OmegaAction {
    pub fn trivial(hopf: &crate::hopf::HopfAlgebraData, b: &crate::hopf::AlgebraData) -> Self {
        let nh = hopf.dim();
        let mut matrices = Vec::with_capacity(nh);
        for h in 0..nh {
            let eps = hopf.coalgebra.counit.get(0, h);
            matrices.push(Matrix::identity(b.field.clone(), b.dim).scale(eps));
        }
        OmegaAction { matrices }
    }

    pub fn is_trivial(&self, hopf: &crate::hopf::HopfAlgebraData, b: &crate::hopf::AlgebraData) -> bool {
        self.matrices == Self::trivial(hopf, b).matrices
    }

    /// Action of an arbitrary H element on B coordinates.
    pub fn act(&self, h: &[Scalar], b: &[Scalar]) -> Vector {
        let dim = self.matrices[0].rows();
        let field = self.matrices[0].field().clone();
        let mut out = vec_zero(&field, dim);
        for (k, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vec_axpy(&mut out, c, &self.matrices[k].apply(b));
            }
        }
        out
    }
}

/// omega_t(h (x) b) = t(h_(1)) b u(h_(2)); every value is verified to land in
/// B.
pub fn omega(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
    t: &TotalIntegral,
) -> Result<OmegaAction, Error> {
    if !t.unit_normalized {
        return Err(Error::Unsupported("integral must be unit-normalized".into()));
    }
    let nh = a.hopf.dim();
    let nb = coinv.dim();
    let field = &a.algebra.field;
    let mut matrices = Vec::with_capacity(nh);
    for h in 0..nh {
        let mut cols = Vec::with_capacity(nb);
        for b in 0..nb {
            let bv = coinv.embedding.col(b);
            let mut acc = vec_zero(field, a.algebra.dim);
            for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
                let t1 = t.map.apply_basis(h1);
                let u2 = t.inverse.apply_basis(h2);
                let prod = a.algebra.multiply(&a.algebra.multiply(&t1, &bv), &u2);
                vec_axpy(&mut acc, &c, &prod);
            }
            let coords = coinv.restrict(&acc).ok_or_else(|| {
                Error::MathFailure(format!(
                    "omega value escapes the coinvariants at ({}, b{b})",
                    a.hopf.labels()[h]
                ))
            })?;
            cols.push(coords);
        }
        matrices.push(Matrix::from_cols(field.clone(), nb, cols)?);
    }
    Ok(OmegaAction { matrices })
}

/// A bilinear table sigma: H (x) H -> B together with its measuring action
/// and the integral it came from.
#[derive(Debug, Clone)]
pub struct TwoCocycle {
    pub hopf: Arc<crate::hopf::HopfAlgebraData>,
    pub base: crate::hopf::AlgebraData,
    pub omega: OmegaAction,
    /// `sigma[h][k]` in B coordinates.
    pub table: Vec<Vec<Vector>>,
    pub provenance: Option<String>,
}

impl TwoCocycle {
    /// sigma on arbitrary elements of H (x) H.
    pub fn eval(&self, h: &[Scalar], k: &[Scalar]) -> Vector {
        let field = &self.base.field;
        let mut out = vec_zero(field, self.base.dim);
        for (i, x) in h.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in k.iter().enumerate() {
                if !y.is_zero() {
                    vec_axpy(&mut out, &x.mul(y), &self.table[i][j]);
                }
            }
        }
        out
    }

    /// Normality: sigma(1, k) = eps(k) 1 and sigma(h, 1) = eps(h) 1.
    pub fn is_normalized(&self) -> bool {
        let hopf = &self.hopf;
        let nh = hopf.dim();
        let unit_h = &hopf.algebra.unit;
        for k in 0..nh {
            let eps = hopf.coalgebra.counit.get(0, k);
            let expect: Vector = self.base.unit.iter().map(|u| u.mul(eps)).collect();
            if self.eval(unit_h, &hopf.algebra.basis_vector(k)) != expect
                || self.eval(&hopf.algebra.basis_vector(k), unit_h) != expect
            {
                return false;
            }
        }
        true
    }

    /// The everywhere-trivial cocycle sigma = (eps (x) eps) 1.
    pub fn trivial(
        hopf: &Arc<crate::hopf::HopfAlgebraData>,
        base: &crate::hopf::AlgebraData,
        omega: OmegaAction,
    ) -> Self {
        let nh = hopf.dim();
        let mut table = Vec::with_capacity(nh);
        for h in 0..nh {
            let eh = hopf.coalgebra.counit.get(0, h);
            let mut row = Vec::with_capacity(nh);
            for k in 0..nh {
                let ek = hopf.coalgebra.counit.get(0, k);
                let c = eh.mul(ek);
                row.push(base.unit.iter().map(|u| u.mul(&c)).collect());
            }
            table.push(row);
        }
        TwoCocycle {
            hopf: Arc::clone(hopf),
            base: base.clone(),
            omega,
            table,
            provenance: Some("trivial".into()),
        }
    }
}

/// sigma(h (x) k) = t(h_(1)) t(k_(1)) u(h_(2) k_(2)), verified to land in B
/// and to be normalized.
pub fn extract_sigma(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
    t: &TotalIntegral,
) -> Result<TwoCocycle, Error> {
    if !t.unit_normalized {
        return Err(Error::Unsupported("integral must be unit-normalized".into()));
    }
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let om = omega(a, coinv, t)?;
    let mut table = Vec::with_capacity(nh);
    for h in 0..nh {
        let mut row = Vec::with_capacity(nh);
        for k in 0..nh {
            let mut acc = vec_zero(field, a.algebra.dim);
            for (c1, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
                for (c2, k1, k2) in a.hopf.coalgebra.delta_terms(k) {
                    let c = c1.mul(&c2);
                    let th = t.map.apply_basis(h1);
                    let tk = t.map.apply_basis(k1);
                    let hk = a.hopf.algebra.basis_product(h2, k2);
                    let u = t.inverse.apply(&hk);
                    let prod = a.algebra.multiply(&a.algebra.multiply(&th, &tk), &u);
                    vec_axpy(&mut acc, &c, &prod);
                }
            }
            let coords = coinv.restrict(&acc).ok_or_else(|| {
                Error::MathFailure(format!(
                    "sigma value escapes the coinvariants at ({}, {})",
                    a.hopf.labels()[h],
                    a.hopf.labels()[k]
                ))
            })?;
            row.push(coords);
        }
        table.push(row);
    }
    let cocycle = TwoCocycle {
        hopf: Arc::clone(&a.hopf),
        base: coinv.algebra.clone(),
        omega: om,
        table,
        provenance: Some("extracted from a total integral".into()),
    };
    if !cocycle.is_normalized() {
        return Err(Error::MathFailure("extracted sigma is not normalized".into()));
    }
    Ok(cocycle)
}

/// Crossed product B #_sigma H: B (x) H with coaction id (x) Delta and
/// multiplication (b # h)(c # k) =
/// b omega(h_(1) (x) c) sigma(h_(2) (x) k_(1)) # h_(3) k_(2).
/// Associativity of the result IS the operational 2-cocycle test: failure
/// returns the witness triple.
pub fn crossed_product(cocycle: &TwoCocycle) -> Result<Arc<ComoduleAlgebraData>, Error> {
    let hopf = &cocycle.hopf;
    let b = &cocycle.base;
    let nh = hopf.dim();
    let nb = b.dim;
    let dim = nb * nh;
    let field = &b.field;
    // measuring-action preconditions
    let om = &cocycle.omega;
    let mut unit_act = Matrix::zero(field.clone(), nb, nb);
    for (k, c) in hopf.algebra.unit.iter().enumerate() {
        unit_act = unit_act.add(&om.matrices[k].scale(c));
    }
    if unit_act != Matrix::identity(field.clone(), nb) {
        return Err(Error::AxiomFailure("action table: 1.b != b".into()));
    }
    for h in 0..nh {
        let eps = hopf.coalgebra.counit.get(0, h);
        let expect: Vector = b.unit.iter().map(|u| u.mul(eps)).collect();
        if om.matrices[h].apply(&b.unit) != expect {
            return Err(Error::AxiomFailure(format!(
                "action table: {}.1 != eps 1",
                hopf.labels()[h]
            )));
        }
        for i in 0..nb {
            for j in 0..nb {
                let lhs = om.matrices[h].apply(&b.basis_product(i, j));
                let mut rhs = vec_zero(field, nb);
                for (c, h1, h2) in hopf.coalgebra.delta_terms(h) {
                    let x = om.matrices[h1].col(i);
                    let y = om.matrices[h2].col(j);
                    vec_axpy(&mut rhs, &c, &b.multiply(&x, &y));
                }
                if lhs != rhs {
                    return Err(Error::AxiomFailure(format!(
                        "action table is not measuring at ({}, b{i}, b{j})",
                        hopf.labels()[h]
                    )));
                }
            }
        }
    }
    if !cocycle.is_normalized() {
        return Err(Error::AxiomFailure("sigma is not normalized".into()));
    }
    // multiplication table
    let mut mult = Matrix::zero(field.clone(), dim, dim * dim);
    for bi in 0..nb {
        for h in 0..nh {
            let row_a = tensor_index(bi, h, nh);
            for ci in 0..nb {
                for k in 0..nh {
                    let col = tensor_index(row_a, tensor_index(ci, k, nh), dim);
                    // sum over Delta^2(h), Delta(k)
                    for (c1, h1, h2, h3) in hopf.coalgebra.delta2_terms(h) {
                        for (c2, k1, k2) in hopf.coalgebra.delta_terms(k) {
                            let c = c1.mul(&c2);
                            // b * (h1.c) * sigma(h2, k1) in B
                            let hc = om.matrices[h1].col(ci);
                            let s = &cocycle.table[h2][k1];
                            let left = b.multiply(&b.basis_vector(bi), &hc);
                            let bval = b.multiply(&left, s);
                            let hk = hopf.algebra.basis_product(h3, k2);
                            for (rb, x) in bval.iter().enumerate() {
                                if x.is_zero() {
                                    continue;
                                }
                                for (rh, y) in hk.iter().enumerate() {
                                    if !y.is_zero() {
                                        let row = tensor_index(rb, rh, nh);
                                        let v = mult.get(row, col).add(&c.mul(&x.mul(y)));
                                        mult.set(row, col, v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec_zero(field, dim);
    for (bi, x) in b.unit.iter().enumerate() {
        for (h, y) in hopf.algebra.unit.iter().enumerate() {
            unit[tensor_index(bi, h, nh)] = x.mul(y);
        }
    }
    let mut labels = Vec::with_capacity(dim);
    for bl in &b.labels {
        for hl in hopf.labels() {
            labels.push(format!("{bl}#{hl}"));
        }
    }
    let alg = crate::hopf::AlgebraData::new(field.clone(), labels, mult, unit)?;
    // associativity IS the cocycle test; report the witness triple
    let rep = alg.axiom_report();
    if let Some(f) = rep.first_failure() {
        return Err(Error::AxiomFailure(format!(
            "sigma is not a 2-cocycle for the action: crossed product fails {} ({})",
            f.name,
            f.witness.as_deref().unwrap_or("")
        )));
    }
    // coaction id (x) Delta
    let mut coaction = Matrix::zero(field.clone(), dim * nh, dim);
    for bi in 0..nb {
        for h in 0..nh {
            let col = tensor_index(bi, h, nh);
            for (c, h1, h2) in hopf.coalgebra.delta_terms(h) {
                let row = tensor_index(tensor_index(bi, h1, nh), h2, nh);
                coaction.set(row, col, c.clone());
            }
        }
    }
    ComoduleAlgebraData::verified(Arc::new(alg), Arc::clone(hopf), coaction)
}

/// The isomorphism phi: B #_sigma H -> A, phi(b # h) = b t(h), with inverse
/// phi^{-1}(a) = a_(0) u(a_(1)) # a_(2); both composites, multiplicativity
/// and colinearity are verified exactly.
#[derive(Debug, Clone)]
pub struct CrossedProductIso {
    pub crossed: Arc<ComoduleAlgebraData>,
    /// dim A x dim(B#H).
    pub phi: Matrix,
    pub phi_inv: Matrix,
}

pub fn phi_iso(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
    t: &TotalIntegral,
    crossed: &Arc<ComoduleAlgebraData>,
) -> Result<CrossedProductIso, Error> {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let nb = coinv.dim();
    let dim = nb * nh;
    let field = &a.algebra.field;
    if crossed.algebra.dim != dim {
        return Err(Error::DimensionMismatch("crossed product dimension".into()));
    }
    let mut phi = Matrix::zero(field.clone(), na, dim);
    for b in 0..nb {
        let bv = coinv.embedding.col(b);
        for h in 0..nh {
            let v = a.algebra.multiply(&bv, &t.map.apply_basis(h));
            for (r, x) in v.iter().enumerate() {
                phi.set(r, tensor_index(b, h, nh), x.clone());
            }
        }
    }
    let mut phi_inv = Matrix::zero(field.clone(), dim, na);
    for j in 0..na {
        // group a_(0) u(a_(1)) by the third leg a_(2); only those sums lie in B
        let mut per_h: Vec<Vector> = (0..nh).map(|_| vec_zero(field, na)).collect();
        for (c, a0, h1, h2) in a.rho2_terms(j) {
            let u = t.inverse.apply_basis(h1);
            let bpart = a.algebra.multiply(&a.algebra.basis_vector(a0), &u);
            vec_axpy(&mut per_h[h2], &c, &bpart);
        }
        let mut acc = vec_zero(field, dim);
        for (h2, v) in per_h.iter().enumerate() {
            if vec_is_zero(v) {
                continue;
            }
            let coords = coinv.restrict(v).ok_or_else(|| {
                Error::MathFailure("phi inverse component escapes B".into())
            })?;
            for (b, x) in coords.iter().enumerate() {
                if !x.is_zero() {
                    acc[tensor_index(b, h2, nh)] = acc[tensor_index(b, h2, nh)].add(x);
                }
            }
        }
        for (r, x) in acc.iter().enumerate() {
            phi_inv.set(r, j, x.clone());
        }
    }
    // verification: two-sided inverse, algebra map, colinear
    if phi.matmul(&phi_inv) != Matrix::identity(field.clone(), na)
        || phi_inv.matmul(&phi) != Matrix::identity(field.clone(), dim)
    {
        return Err(Error::MathFailure("phi is not a two-sided inverse pair".into()));
    }
    for i in 0..dim {
        for j in 0..dim {
            let lhs = phi.apply(&crossed.algebra.basis_product(i, j));
            let rhs = a.algebra.multiply(&phi.col(i), &phi.col(j));
            if lhs != rhs {
                return Err(Error::MathFailure(format!(
                    "phi is not multiplicative at ({i}, {j})"
                )));
            }
        }
    }
    if phi.apply(&crossed.algebra.unit) != a.algebra.unit {
        return Err(Error::MathFailure("phi does not preserve the unit".into()));
    }
    // colinearity: rho_A(phi(v)) = (phi (x) id)(rho_#(v))
    for j in 0..dim {
        let lhs = a.rho_of(&phi.col(j));
        let mut rhs = vec_zero(field, na * nh);
        for (c, x, h) in crossed.rho_terms(j) {
            let px = phi.col(x);
            for (r, v) in px.iter().enumerate() {
                if !v.is_zero() {
                    let idx = tensor_index(r, h, nh);
                    rhs[idx] = rhs[idx].add(&c.mul(v));
                }
            }
        }
        if lhs != rhs {
            return Err(Error::MathFailure("phi is not colinear".into()));
        }
    }
    Ok(CrossedProductIso {
        crossed: Arc::clone(crossed),
        phi,
        phi_inv,
    })
}

/// Compare two cocycle tables entry-wise.
pub fn sigma_tables_equal(a: &TwoCocycle, b: &TwoCocycle) -> bool {
    a.table == b.table
}

/// Deterministic ordering key for integrals (used by searches and reports).
pub fn integral_cmp(a: &TotalIntegral, b: &TotalIntegral) -> std::cmp::Ordering {
    for j in 0..a.map.matrix.cols() {
        let o = vec_cmp(&a.map.matrix.col(j), &b.map.matrix.col(j));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}
