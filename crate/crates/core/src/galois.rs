//! Comodule algebras, coinvariants, the canonical maps, Galois certificates
//! with translation maps, Miyashita-Ulbrich actions, cotensor products,
//! opposites and the square envelope.
//!
//! The tensor square A (x)_B A is realized through a free left-B basis of A:
//! greedily chosen basis elements f_1..f_m with A = B f_1 + ... + B f_m, so
//! the quotient basis is {e_i (x) f_t}, the projection decomposes the second
//! leg over B, and every identity "in A (x)_B A" is evaluated after
//! projecting. The translation table is stored as a lifted representative in
//! A (x) A through the stored section.

use std::fmt;
use std::sync::Arc;

use crate::field::Scalar;
use crate::hopf::{
    basis_vec, AlgebraData, AxiomReport, HopfAlgebraData,
};
use crate::linalg::{tensor_index, vec_axpy, vec_is_zero, vec_zero, Matrix, Subspace, Vector};
use crate::Error;

// ---------------------------------------------------------------------------
// comodule algebras
// ---------------------------------------------------------------------------

/// An algebra with a right coaction of a Hopf algebra.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebraData {
    pub algebra: Arc<AlgebraData>,
    pub hopf: Arc<HopfAlgebraData>,
    /// (dim_A * dim_H) x dim_A; column j is rho(e_j).
    pub coaction: Matrix,
}

impl ComoduleAlgebraData {
    /// Dimension-checked construction. Comodule-algebra axioms are a report
    /// ([`Self::axiom_report`]); constructors that need validity call
    /// [`Self::verified`].
    pub fn new(
        algebra: Arc<AlgebraData>,
        hopf: Arc<HopfAlgebraData>,
        coaction: Matrix,
    ) -> Result<Arc<Self>, Error> {
        let na = algebra.dim;
        let nh = hopf.dim();
        if coaction.rows() != na * nh || coaction.cols() != na {
            return Err(Error::DimensionMismatch(format!(
                "coaction table is {}x{}, expected {}x{na}",
                coaction.rows(),
                coaction.cols(),
                na * nh
            )));
        }
        if algebra.field != *hopf.field() || coaction.field() != &algebra.field {
            return Err(Error::MixedFields("comodule algebra tables".into()));
        }
        Ok(Arc::new(ComoduleAlgebraData {
            algebra,
            hopf,
            coaction,
        }))
    }

    pub fn verified(
        algebra: Arc<AlgebraData>,
        hopf: Arc<HopfAlgebraData>,
        coaction: Matrix,
    ) -> Result<Arc<Self>, Error> {
        let c = Self::new(algebra, hopf, coaction)?;
        c.axiom_report().into_result()?;
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// rho(e_j) as sparse terms (coefficient, A leg, H leg).
    pub fn rho_terms(&self, j: usize) -> Vec<(Scalar, usize, usize)> {
        let nh = self.hopf.dim();
        let mut out = Vec::new();
        for a in 0..self.algebra.dim {
            for h in 0..nh {
                let c = self.coaction.get(tensor_index(a, h, nh), j);
                if !c.is_zero() {
                    out.push((c.clone(), a, h));
                }
            }
        }
        out
    }

    /// rho applied to a dense element, result in A (x) H coordinates.
    pub fn rho_of(&self, v: &[Scalar]) -> Vector {
        self.coaction.apply(v)
    }

    /// (rho (x) id) rho (e_j): sparse terms (coefficient, A leg, H leg 1, H leg 2).
    pub fn rho2_terms(&self, j: usize) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, a, h2) in self.rho_terms(j) {
            for (c2, a2, h1) in self.rho_terms(a) {
                out.push((c.mul(&c2), a2, h1, h2));
            }
        }
        out
    }

    /// Comodule-algebra axioms: coassociativity, counit law, and rho being a
    /// unital algebra map. Checked basis-wise.
    pub fn axiom_report(&self) -> AxiomReport {
        let mut report = self.algebra.axiom_report();
        let na = self.algebra.dim;
        let nh = self.hopf.dim();
        let co = &self.hopf.coalgebra;
        let field = &self.algebra.field;

        let mut coassoc = crate::hopf::AxiomCheck::passed_named("comodule.coassociativity");
        for j in 0..na {
            // (rho (x) id) rho vs (id (x) Delta) rho, densely in A (x) H (x) H
            let mut lhs = vec_zero(field, na * nh * nh);
            for (c, a, h1, h2) in self.rho2_terms(j) {
                let idx = (a * nh + h1) * nh + h2;
                lhs[idx] = lhs[idx].add(&c);
            }
            let mut rhs = vec_zero(field, na * nh * nh);
            for (c, a, h) in self.rho_terms(j) {
                for (c2, k1, k2) in co.delta_terms(h) {
                    let idx = (a * nh + k1) * nh + k2;
                    rhs[idx] = rhs[idx].add(&c.mul(&c2));
                }
            }
            if lhs != rhs {
                coassoc = crate::hopf::AxiomCheck::failed_named(
                    "comodule.coassociativity",
                    format!("fails on {}", self.algebra.labels[j]),
                );
                break;
            }
        }
        report.checks.push(coassoc);

        let mut counit = crate::hopf::AxiomCheck::passed_named("comodule.counit");
        for j in 0..na {
            let mut out = vec_zero(field, na);
            for (c, a, h) in self.rho_terms(j) {
                out[a] = out[a].add(&c.mul(co.counit.get(0, h)));
            }
            if out != basis_vec(field, na, j) {
                counit = crate::hopf::AxiomCheck::failed_named(
                    "comodule.counit",
                    format!("fails on {}", self.algebra.labels[j]),
                );
                break;
            }
        }
        report.checks.push(counit);

        let mut algmap = crate::hopf::AxiomCheck::passed_named("comodule.coaction_multiplicative");
        'am: for i in 0..na {
            for j in 0..na {
                let lhs = self.rho_of(&self.algebra.basis_product(i, j));
                // rho(e_i) rho(e_j) in the A (x) H tensor algebra
                let mut rhs = vec_zero(field, na * nh);
                for (c1, a1, h1) in self.rho_terms(i) {
                    for (c2, a2, h2) in self.rho_terms(j) {
                        let c = c1.mul(&c2);
                        let pa = self.algebra.basis_product(a1, a2);
                        let ph = self.hopf.algebra.basis_product(h1, h2);
                        for (ra, x) in pa.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (rh, y) in ph.iter().enumerate() {
                                if y.is_zero() {
                                    continue;
                                }
                                let idx = tensor_index(ra, rh, nh);
                                rhs[idx] = rhs[idx].add(&c.mul(&x.mul(y)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    algmap = crate::hopf::AxiomCheck::failed_named(
                        "comodule.coaction_multiplicative",
                        format!(
                            "rho({} {}) != rho({}) rho({})",
                            self.algebra.labels[i],
                            self.algebra.labels[j],
                            self.algebra.labels[i],
                            self.algebra.labels[j]
                        ),
                    );
                    break 'am;
                }
            }
        }
        report.checks.push(algmap);

        let unit_ok = {
            let lhs = self.rho_of(&self.algebra.unit);
            let mut rhs = vec_zero(field, na * nh);
            for (i, x) in self.algebra.unit.iter().enumerate() {
                for (h, y) in self.hopf.algebra.unit.iter().enumerate() {
                    rhs[tensor_index(i, h, nh)] = x.mul(y);
                }
            }
            lhs == rhs
        };
        report.checks.push(if unit_ok {
            crate::hopf::AxiomCheck::passed_named("comodule.coaction_unital")
        } else {
            crate::hopf::AxiomCheck::failed_named(
                "comodule.coaction_unital",
                "rho(1) != 1 (x) 1".into(),
            )
        });
        report
    }
}

// ---------------------------------------------------------------------------
// coinvariants
// ---------------------------------------------------------------------------

/// The coinvariant subalgebra B together with its embedding into A.
#[derive(Debug, Clone)]
pub struct CoinvariantAlgebra {
    pub subspace: Subspace,
    pub algebra: AlgebraData,
    /// dim_A x dim_B; columns are the echelon basis vectors of B inside A.
    pub embedding: Matrix,
}

impl CoinvariantAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Embed a B-coordinate vector into A.
    pub fn embed(&self, v: &[Scalar]) -> Vector {
        self.embedding.apply(v)
    }

    /// Express an element of A lying in B in B-coordinates.
    pub fn restrict(&self, v: &[Scalar]) -> Option<Vector> {
        self.subspace.coords_of(v)
    }
}

/// B = ker(rho - (. (x) 1)), verified closed under multiplication and
/// containing the unit, returned with its canonical echelon basis.
pub fn coinvariants(a: &ComoduleAlgebraData) -> Result<CoinvariantAlgebra, Error> {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    // rows of (rho - id (x) unit_H)
    let mut m = a.coaction.clone();
    for j in 0..na {
        for (h, u) in a.hopf.algebra.unit.iter().enumerate() {
            let r = tensor_index(j, h, nh);
            let v = m.get(r, j).sub(u);
            m.set(r, j, v);
        }
    }
    let subspace = m.kernel();
    let nb = subspace.dim();
    let embedding = subspace.embedding_matrix();
    if !subspace.contains(&a.algebra.unit) {
        return Err(Error::MathFailure(
            "coinvariants do not contain the unit".into(),
        ));
    }
    // closure under multiplication, with structure constants on the way
    let mut mult = Matrix::zero(field.clone(), nb, nb * nb);
    for i in 0..nb {
        for j in 0..nb {
            let prod = a
                .algebra
                .multiply(subspace.basis_vector(i), subspace.basis_vector(j));
            let coords = subspace.coords_of(&prod).ok_or_else(|| {
                Error::MathFailure("coinvariants not closed under multiplication".into())
            })?;
            let col = tensor_index(i, j, nb);
            for (r, x) in coords.iter().enumerate() {
                mult.set(r, col, x.clone());
            }
        }
    }
    let unit = subspace
        .coords_of(&a.algebra.unit)
        .expect("unit containment checked");
    let algebra = AlgebraData::new(
        field.clone(),
        (0..nb).map(|i| format!("b{i}")).collect(),
        mult,
        unit,
    )?;
    Ok(CoinvariantAlgebra {
        subspace,
        algebra,
        embedding,
    })
}

// ---------------------------------------------------------------------------
// the tensor square over B
// ---------------------------------------------------------------------------

/// A (x)_B A as an explicit quotient of A (x) A with a stored section.
#[derive(Debug, Clone)]
pub struct TensorOverBase {
    pub dim: usize,
    /// dim x dim_A^2.
    pub proj: Matrix,
    /// dim_A^2 x dim.
    pub section: Matrix,
    /// The greedily chosen free left-B basis of A.
    pub free_basis: Vec<Vector>,
}

impl TensorOverBase {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.proj.apply(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vector {
        self.section.apply(v)
    }
}

/// Greedy free left-B-module basis of A: elements f_1, ..., f_m with
/// A = B f_1 + ... + B f_m, the partial sums growing by exactly dim B at
/// every step. Candidates are the basis vectors, the unit, and a bounded
/// deterministic stream of small combinations; every accepted block is
/// verified exactly, so the search can only fail to find a basis, never
/// accept a wrong one.
fn free_module_basis(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
) -> Result<Vec<Vector>, GaloisFailure> {
    let na = a.algebra.dim;
    let nb = coinv.dim();
    if nb == 0 || na % nb != 0 {
        return Err(GaloisFailure::NotFree(format!(
            "dim A = {na} is not a multiple of dim B = {nb}"
        )));
    }
    let m = na / nb;
    let field = &a.algebra.field;
    let mut candidates: Vec<Vector> = vec![a.algebra.unit.clone()];
    candidates.extend((0..na).map(|i| a.algebra.basis_vector(i)));
    // sparse sums keep the section (and with it the translation table) sparse
    for i in 0..na {
        for j in (i + 1)..na {
            let mut v = a.algebra.basis_vector(i);
            v[j] = field.one();
            candidates.push(v);
        }
    }
    // deterministic pseudorandom combinations (xorshift digits), sparse
    // first: small supports keep the stored section and the translation
    // table sparse
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let extra = 600usize;
    let nonzero: Vec<Scalar> = match field.size() {
        Some(q) => {
            let take = (q.min(8) as usize).max(2);
            field
                .elements()
                .map_err(|e| GaloisFailure::NotFree(format!("{e}")))?
                .into_iter()
                .take(take)
                .skip(1)
                .collect()
        }
        None => [1i64, -1, 2, -2].iter().map(|&n| field.from_integer(n)).collect(),
    };
    for k in 0..extra {
        let support = (3 + k % 10).min(na);
        let mut v = vec![field.zero(); na];
        for _ in 0..support {
            let pos = (next() % na as u64) as usize;
            v[pos] = nonzero[(next() % nonzero.len() as u64) as usize].clone();
        }
        candidates.push(v);
    }
    let mut span = Subspace::zero(field.clone(), na);
    let mut picked: Vec<Vector> = Vec::new();
    for cand in &candidates {
        if picked.len() == m {
            break;
        }
        if vec_is_zero(cand) || span.contains(cand) {
            continue;
        }
        let mut rows: Vec<Vector> = (0..span.dim())
            .map(|r| span.basis_vector(r).to_vec())
            .collect();
        for b in 0..nb {
            rows.push(a.algebra.multiply(&coinv.embedding.col(b), cand));
        }
        let new_span = Subspace::from_spanning(field.clone(), na, rows);
        if new_span.dim() == span.dim() + nb {
            span = new_span;
            picked.push(cand.clone());
        }
    }
    if span.dim() != na || picked.len() != m {
        return Err(GaloisFailure::NotFree(format!(
            "no free module basis found among {} candidates (reached {}/{na})",
            candidates.len(),
            span.dim()
        )));
    }
    Ok(picked)
}

/// Build A (x)_B A: basis {e_i (x) f_t}, projection by decomposing the second
/// leg over the free basis, section the tautological inclusion.
fn tensor_square_over_base(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
    free_basis: &[Vector],
) -> Result<TensorOverBase, Error> {
    let na = a.algebra.dim;
    let nb = coinv.dim();
    let m = free_basis.len();
    let field = &a.algebra.field;
    // decomposition e_j = sum_t beta_{j,t} f_t with beta in B: solve once
    let mut cols = Vec::with_capacity(m * nb);
    for f in free_basis {
        for b in 0..nb {
            cols.push(a.algebra.multiply(&coinv.embedding.col(b), f));
        }
    }
    let system = Matrix::from_cols(field.clone(), na, cols)?;
    let inv = system
        .inverse()
        .ok_or_else(|| Error::MathFailure("free basis decomposition is singular".into()))?;
    // beta[j][t] as an element of A (embedded B element)
    let mut beta: Vec<Vec<Vector>> = Vec::with_capacity(na);
    for j in 0..na {
        let coords = inv.apply(&a.algebra.basis_vector(j));
        let mut row = Vec::with_capacity(m);
        for t in 0..m {
            let mut bvec = vec_zero(field, nb);
            for b in 0..nb {
                bvec[b] = coords[t * nb + b].clone();
            }
            row.push(coinv.embed(&bvec));
        }
        beta.push(row);
    }
    let dim = na * m;
    let mut proj = Matrix::zero(field.clone(), dim, na * na);
    for i in 0..na {
        for j in 0..na {
            let col = tensor_index(i, j, na);
            for t in 0..m {
                let u = a.algebra.multiply(&a.algebra.basis_vector(i), &beta[j][t]);
                for (r, x) in u.iter().enumerate() {
                    if !x.is_zero() {
                        let row = r * m + t;
                        let v = proj.get(row, col).add(x);
                        proj.set(row, col, v);
                    }
                }
            }
        }
    }
    let mut section = Matrix::zero(field.clone(), na * na, dim);
    for i in 0..na {
        for (t, f) in free_basis.iter().enumerate() {
            for (r, x) in f.iter().enumerate() {
                if !x.is_zero() {
                    section.set(tensor_index(i, r, na), i * m + t, x.clone());
                }
            }
        }
    }
    Ok(TensorOverBase {
        dim,
        proj,
        section,
        free_basis: free_basis.to_vec(),
    })
}

// ---------------------------------------------------------------------------
// the canonical maps and the certificate
// ---------------------------------------------------------------------------

/// can on A (x) A: a (x) b -> a b_(0) (x) b_(1), as an (nA nH) x nA^2 matrix.
pub fn can_on_tensor_square(a: &ComoduleAlgebraData) -> Matrix {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let mut m = Matrix::zero(field.clone(), na * nh, na * na);
    for j in 0..na {
        let terms = a.rho_terms(j);
        for i in 0..na {
            let col = tensor_index(i, j, na);
            for (c, b0, h) in &terms {
                let prod = a.algebra.basis_product(i, *b0);
                for (r, x) in prod.iter().enumerate() {
                    if !x.is_zero() {
                        let row = tensor_index(r, *h, nh);
                        let v = m.get(row, col).add(&c.mul(x));
                        m.set(row, col, v);
                    }
                }
            }
        }
    }
    m
}

/// can' on A (x) A: a (x) b -> a_(0) b (x) a_(1).
pub fn can_prime_on_tensor_square(a: &ComoduleAlgebraData) -> Matrix {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let mut m = Matrix::zero(field.clone(), na * nh, na * na);
    for i in 0..na {
        let terms = a.rho_terms(i);
        for j in 0..na {
            let col = tensor_index(i, j, na);
            for (c, a0, h) in &terms {
                let prod = a.algebra.basis_product(*a0, j);
                for (r, x) in prod.iter().enumerate() {
                    if !x.is_zero() {
                        let row = tensor_index(r, *h, nh);
                        let v = m.get(row, col).add(&c.mul(x));
                        m.set(row, col, v);
                    }
                }
            }
        }
    }
    m
}

/// Why an extension failed to certify.
#[derive(Debug, Clone)]
pub enum GaloisFailure {
    NotFree(String),
    /// The canonical map is not bijective; the witness is a nonzero kernel
    /// element of can lifted to A (x) A, when one exists.
    CanNotBijective {
        reason: String,
        witness: Option<Vector>,
    },
}

impl fmt::Display for GaloisFailure {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisFailure::NotFree(s) => write!(w, "A is not free over B: {s}"),
            GaloisFailure::CanNotBijective { reason, .. } => {
                write!(w, "canonical map not bijective: {reason}")
            }
        }
    }
}

#[derive(Debug)]
pub enum GaloisOutcome {
    Certified(Box<GaloisCertificate>),
    Failed(GaloisFailure),
}

impl GaloisOutcome {
    pub fn certified(self) -> Result<GaloisCertificate, Error> {
        match self {
            GaloisOutcome::Certified(c) => Ok(*c),
            GaloisOutcome::Failed(f) => Err(Error::MathFailure(format!("{f}"))),
        }
    }
}

/// A certified Hopf-Galois extension: coinvariants, the invertible canonical
/// map on the computed A (x)_B A, and the translation table gamma stored as a
/// lifted representative in A (x) A.
#[derive(Debug, Clone)]
pub struct GaloisCertificate {
    pub comodule: Arc<ComoduleAlgebraData>,
    pub coinv: CoinvariantAlgebra,
    pub tensor_sq: TensorOverBase,
    /// (nA nH) x dim(A (x)_B A).
    pub can_matrix: Matrix,
    pub can_inverse: Matrix,
    pub can_prime: Matrix,
    /// Per H basis element: the lifted representative of gamma(h) in A (x) A,
    /// dense of length nA^2.
    pub gamma: Vec<Vector>,
}

/// Decide the Galois property: verifies the comodule-algebra axioms, checks
/// B-freeness of A (dimension divisibility plus a greedy B-basis), builds
/// A (x)_B A, and inverts the canonical map. On success the whole translation
/// identity suite is verified before the certificate is returned.
pub fn galois_check(a: &Arc<ComoduleAlgebraData>) -> Result<GaloisOutcome, Error> {
    a.axiom_report().into_result()?;
    let coinv = coinvariants(a)?;
    let free = match free_module_basis(a, &coinv) {
        Ok(f) => f,
        Err(fail) => return Ok(GaloisOutcome::Failed(fail)),
    };
    let tensor_sq = tensor_square_over_base(a, &coinv, &free)?;
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let can_full = can_on_tensor_square(a);
    let can_prime_full = can_prime_on_tensor_square(a);
    let can_matrix = can_full.matmul(&tensor_sq.section);
    let can_prime = can_prime_full.matmul(&tensor_sq.section);
    if tensor_sq.dim != na * nh {
        let witness = if tensor_sq.dim > na * nh {
            let k = can_matrix.kernel();
            (k.dim() > 0).then(|| tensor_sq.lift(k.basis_vector(0)))
        } else {
            None
        };
        return Ok(GaloisOutcome::Failed(GaloisFailure::CanNotBijective {
            reason: format!(
                "A (x)_B A has dimension {} but A (x) H has dimension {}",
                tensor_sq.dim,
                na * nh
            ),
            witness,
        }));
    }
    let Some(can_inverse) = can_matrix.inverse() else {
        let k = can_matrix.kernel();
        let witness = (k.dim() > 0).then(|| tensor_sq.lift(k.basis_vector(0)));
        return Ok(GaloisOutcome::Failed(GaloisFailure::CanNotBijective {
            reason: "canonical map is singular".into(),
            witness,
        }));
    };
    // gamma(h) = can^{-1}(1 (x) h), lifted through the section
    let mut gamma = Vec::with_capacity(nh);
    for h in 0..nh {
        let mut rhs = vec_zero(&a.algebra.field, na * nh);
        for (i, u) in a.algebra.unit.iter().enumerate() {
            rhs[tensor_index(i, h, nh)] = u.clone();
        }
        let q = can_inverse.apply(&rhs);
        gamma.push(tensor_sq.lift(&q));
    }
    let cert = GaloisCertificate {
        comodule: Arc::clone(a),
        coinv,
        tensor_sq,
        can_matrix,
        can_inverse,
        can_prime,
        gamma,
    };
    let report = cert.translation_identities_report();
    if !report.all_passed() {
        let f = report.first_failure().unwrap();
        return Err(Error::MathFailure(format!(
            "certificate construction produced an inconsistent translation table ({})",
            f.name
        )));
    }
    Ok(GaloisOutcome::Certified(Box::new(cert)))
}

impl GaloisCertificate {
    pub fn hopf(&self) -> &Arc<HopfAlgebraData> {
        &self.comodule.hopf
    }

    /// Sparse (coefficient, left leg, right leg) view of the lifted gamma(h).
    pub fn gamma_terms(&self, h: usize) -> Vec<(Scalar, usize, usize)> {
        let na = self.comodule.algebra.dim;
        let mut out = Vec::new();
        for (idx, c) in self.gamma[h].iter().enumerate() {
            if !c.is_zero() {
                out.push((c.clone(), idx / na, idx % na));
            }
        }
        out
    }

    /// gamma applied to an arbitrary element of H (dense lift in A (x) A).
    pub fn gamma_of(&self, v: &[Scalar]) -> Vector {
        let na = self.comodule.algebra.dim;
        let mut out = vec_zero(&self.comodule.algebra.field, na * na);
        for (h, c) in v.iter().enumerate() {
            if !c.is_zero() {
                vec_axpy(&mut out, c, &self.gamma[h]);
            }
        }
        out
    }

    /// Negative-control helper: the same certificate with the two tensor legs
    /// of every gamma(h) swapped. Breaks the defining identity.
    pub fn with_swapped_gamma(&self) -> GaloisCertificate {
        let na = self.comodule.algebra.dim;
        let mut out = self.clone();
        for g in out.gamma.iter_mut() {
            let mut swapped = vec_zero(&self.comodule.algebra.field, na * na);
            for i in 0..na {
                for j in 0..na {
                    swapped[tensor_index(j, i, na)] = g[tensor_index(i, j, na)].clone();
                }
            }
            *g = swapped;
        }
        out
    }

    /// The seven translation-map identities, each evaluated exactly on all
    /// basis elements; identities stated in A (x)_B A are evaluated after
    /// projection to the computed quotient.
    pub fn translation_identities_report(&self) -> AxiomReport {
        let a = &self.comodule;
        let alg = &a.algebra;
        let h_alg = &a.hopf.algebra;
        let co = &a.hopf.coalgebra;
        let na = alg.dim;
        let nh = a.hopf.dim();
        let field = &alg.field;
        let q = self.tensor_sq.dim;
        let mut report = AxiomReport::default();

        // defining property: can(gamma(h)) = 1 (x) h
        let can_full = can_on_tensor_square(a);
        let mut defining = crate::hopf::AxiomCheck::passed_named("gamma.defining");
        for h in 0..nh {
            let lhs = can_full.apply(&self.gamma[h]);
            let mut rhs = vec_zero(field, na * nh);
            for (i, u) in alg.unit.iter().enumerate() {
                rhs[tensor_index(i, h, nh)] = u.clone();
            }
            if lhs != rhs {
                defining = crate::hopf::AxiomCheck::failed_named(
                    "gamma.defining",
                    format!("can(gamma({})) != 1 (x) {}", h_alg.labels[h], h_alg.labels[h]),
                );
                break;
            }
        }
        report.checks.push(defining);

        // centrality over B: (b.l_i) (x) r_i = l_i (x) (r_i.b) in A (x)_B A
        let mut central = crate::hopf::AxiomCheck::passed_named("gamma.base_central");
        'central: for h in 0..nh {
            let terms = self.gamma_terms(h);
            for b in 0..self.coinv.dim() {
                let bemb = self.coinv.embedding.col(b);
                let mut lhs = vec_zero(field, na * na);
                let mut rhs = vec_zero(field, na * na);
                for (c, i, j) in &terms {
                    let bl = alg.multiply(&bemb, &alg.basis_vector(*i));
                    for (r, x) in bl.iter().enumerate() {
                        if !x.is_zero() {
                            lhs[tensor_index(r, *j, na)] =
                                lhs[tensor_index(r, *j, na)].add(&c.mul(x));
                        }
                    }
                    let rb = alg.multiply(&alg.basis_vector(*j), &bemb);
                    for (r, x) in rb.iter().enumerate() {
                        if !x.is_zero() {
                            rhs[tensor_index(*i, r, na)] =
                                rhs[tensor_index(*i, r, na)].add(&c.mul(x));
                        }
                    }
                }
                if self.tensor_sq.project(&lhs) != self.tensor_sq.project(&rhs) {
                    central = crate::hopf::AxiomCheck::failed_named(
                        "gamma.base_central",
                        format!("fails on {} with base element b{}", h_alg.labels[h], b),
                    );
                    break 'central;
                }
            }
        }
        report.checks.push(central);

        // right colinearity: gamma(h_(1)) (x) h_(2) = l_i (x) r_i_(0) (x) r_i_(1)
        let mut right_col = crate::hopf::AxiomCheck::passed_named("gamma.right_colinear");
        for h in 0..nh {
            let mut lhs = vec_zero(field, q * nh);
            for (c, h1, h2) in co.delta_terms(h) {
                let p = self.tensor_sq.project(&self.gamma[h1]);
                for (r, x) in p.iter().enumerate() {
                    if !x.is_zero() {
                        lhs[tensor_index(r, h2, nh)] =
                            lhs[tensor_index(r, h2, nh)].add(&c.mul(x));
                    }
                }
            }
            let mut rhs = vec_zero(field, q * nh);
            for (c, i, j) in self.gamma_terms(h) {
                for (c2, j0, h2) in a.rho_terms(j) {
                    let mut t = vec_zero(field, na * na);
                    t[tensor_index(i, j0, na)] = c.mul(&c2);
                    let p = self.tensor_sq.project(&t);
                    for (r, x) in p.iter().enumerate() {
                        if !x.is_zero() {
                            rhs[tensor_index(r, h2, nh)] = rhs[tensor_index(r, h2, nh)].add(x);
                        }
                    }
                }
            }
            if lhs != rhs {
                right_col = crate::hopf::AxiomCheck::failed_named(
                    "gamma.right_colinear",
                    format!("fails on {}", h_alg.labels[h]),
                );
                break;
            }
        }
        report.checks.push(right_col);

        // left colinearity: gamma(h_(2)) (x) S(h_(1)) = l_i_(0) (x) r_i (x) l_i_(1)
        let mut left_col = crate::hopf::AxiomCheck::passed_named("gamma.left_colinear");
        for h in 0..nh {
            let mut lhs = vec_zero(field, q * nh);
            for (c, h1, h2) in co.delta_terms(h) {
                let p = self.tensor_sq.project(&self.gamma[h2]);
                let s = a.hopf.antipode.col(h1);
                for (r, x) in p.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (k, sv) in s.iter().enumerate() {
                        if !sv.is_zero() {
                            lhs[tensor_index(r, k, nh)] =
                                lhs[tensor_index(r, k, nh)].add(&c.mul(&x.mul(sv)));
                        }
                    }
                }
            }
            let mut rhs = vec_zero(field, q * nh);
            for (c, i, j) in self.gamma_terms(h) {
                for (c2, i0, h1) in a.rho_terms(i) {
                    let mut t = vec_zero(field, na * na);
                    t[tensor_index(i0, j, na)] = c.mul(&c2);
                    let p = self.tensor_sq.project(&t);
                    for (r, x) in p.iter().enumerate() {
                        if !x.is_zero() {
                            rhs[tensor_index(r, h1, nh)] = rhs[tensor_index(r, h1, nh)].add(x);
                        }
                    }
                }
            }
            if lhs != rhs {
                left_col = crate::hopf::AxiomCheck::failed_named(
                    "gamma.left_colinear",
                    format!("fails on {}", h_alg.labels[h]),
                );
                break;
            }
        }
        report.checks.push(left_col);

        // counit collapse: sum_i l_i(h) r_i(h) = eps(h) 1
        let mut collapse = crate::hopf::AxiomCheck::passed_named("gamma.counit_collapse");
        for h in 0..nh {
            let mut lhs = vec_zero(field, na);
            for (c, i, j) in self.gamma_terms(h) {
                vec_axpy(&mut lhs, &c, &alg.basis_product(i, j));
            }
            let eps = co.counit.get(0, h);
            let rhs: Vector = alg.unit.iter().map(|u| u.mul(eps)).collect();
            if lhs != rhs {
                collapse = crate::hopf::AxiomCheck::failed_named(
                    "gamma.counit_collapse",
                    format!("fails on {}", h_alg.labels[h]),
                );
                break;
            }
        }
        report.checks.push(collapse);

        // coaction section: a_(0) l_i(a_(1)) (x) r_i(a_(1)) = 1 (x) a
        let mut section = crate::hopf::AxiomCheck::passed_named("gamma.coaction_section");
        for j in 0..na {
            let mut lhs = vec_zero(field, na * na);
            for (c, a0, h) in a.rho_terms(j) {
                for (c2, i, r) in self.gamma_terms(h) {
                    let prod = alg.basis_product(a0, i);
                    let cc = c.mul(&c2);
                    for (row, x) in prod.iter().enumerate() {
                        if !x.is_zero() {
                            lhs[tensor_index(row, r, na)] =
                                lhs[tensor_index(row, r, na)].add(&cc.mul(x));
                        }
                    }
                }
            }
            let mut rhs = vec_zero(field, na * na);
            for (i, u) in alg.unit.iter().enumerate() {
                rhs[tensor_index(i, j, na)] = u.clone();
            }
            if self.tensor_sq.project(&lhs) != self.tensor_sq.project(&rhs) {
                section = crate::hopf::AxiomCheck::failed_named(
                    "gamma.coaction_section",
                    format!("fails on {}", alg.labels[j]),
                );
                break;
            }
        }
        report.checks.push(section);

        // anti-multiplicativity: gamma(h h') = l_i(h') l_j(h) (x) r_j(h) r_i(h')
        let mut anti = crate::hopf::AxiomCheck::passed_named("gamma.anti_multiplicative");
        'anti: for h in 0..nh {
            for hp in 0..nh {
                let prod = h_alg.basis_product(h, hp);
                let lhs = self.tensor_sq.project(&self.gamma_of(&prod));
                let mut rhs_lift = vec_zero(field, na * na);
                for (c1, li_p, ri_p) in self.gamma_terms(hp) {
                    for (c2, lj, rj) in self.gamma_terms(h) {
                        let c = c1.mul(&c2);
                        let left = alg.basis_product(li_p, lj);
                        let right = alg.basis_product(rj, ri_p);
                        for (r1, x) in left.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (r2, y) in right.iter().enumerate() {
                                if !y.is_zero() {
                                    let idx = tensor_index(r1, r2, na);
                                    rhs_lift[idx] = rhs_lift[idx].add(&c.mul(&x.mul(y)));
                                }
                            }
                        }
                    }
                }
                if lhs != self.tensor_sq.project(&rhs_lift) {
                    anti = crate::hopf::AxiomCheck::failed_named(
                        "gamma.anti_multiplicative",
                        format!("fails on ({}, {})", h_alg.labels[h], h_alg.labels[hp]),
                    );
                    break 'anti;
                }
            }
        }
        report.checks.push(anti);
        report
    }

    /// Pretty form of gamma(h) as a sum of basis tensor pairs.
    pub fn format_gamma(&self, h: usize) -> String {
        let labels = &self.comodule.algebra.labels;
        let terms: Vec<String> = self
            .gamma_terms(h)
            .into_iter()
            .map(|(c, i, j)| {
                if c.is_one() {
                    format!("{} (x) {}", labels[i], labels[j])
                } else {
                    format!("{c} * {} (x) {}", labels[i], labels[j])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

// ---------------------------------------------------------------------------
// center and the Miyashita-Ulbrich action
// ---------------------------------------------------------------------------

/// The center of an algebra with its embedding and induced structure.
#[derive(Debug, Clone)]
pub struct CenterData {
    pub subspace: Subspace,
    pub algebra: AlgebraData,
    /// parent-dim x center-dim.
    pub embedding: Matrix,
}

/// Z(B) as the kernel of b -> (left mult - right mult)(b), verified to be a
/// commutative subalgebra.
pub fn center(b: &AlgebraData) -> Result<CenterData, Error> {
    let n = b.dim;
    let field = &b.field;
    // rows indexed by (basis k, component r): [e_k, x]_r = 0
    let mut sys = Matrix::zero(field.clone(), n * n, n);
    for j in 0..n {
        for k in 0..n {
            let comm = crate::linalg::vec_sub(&b.basis_product(j, k), &b.basis_product(k, j));
            for (r, x) in comm.iter().enumerate() {
                sys.set(k * n + r, j, x.clone());
            }
        }
    }
    let subspace = sys.kernel();
    let z = subspace.dim();
    let embedding = subspace.embedding_matrix();
    let mut mult = Matrix::zero(field.clone(), z, z * z);
    for i in 0..z {
        for j in 0..z {
            let prod = b.multiply(subspace.basis_vector(i), subspace.basis_vector(j));
            let coords = subspace.coords_of(&prod).ok_or_else(|| {
                Error::MathFailure("center not closed under multiplication".into())
            })?;
            for (r, x) in coords.iter().enumerate() {
                mult.set(r, tensor_index(i, j, z), x.clone());
            }
        }
    }
    let unit = subspace
        .coords_of(&b.unit)
        .ok_or_else(|| Error::MathFailure("unit not central".into()))?;
    let algebra = AlgebraData::new(
        field.clone(),
        (0..z).map(|i| format!("z{i}")).collect(),
        mult,
        unit,
    )?;
    if !algebra.is_commutative() {
        return Err(Error::MathFailure("computed center is not commutative".into()));
    }
    Ok(CenterData {
        subspace,
        algebra,
        embedding,
    })
}

/// The Miyashita-Ulbrich module-algebra structure on Z(B): one action matrix
/// per H basis element.
#[derive(Debug, Clone)]
pub struct MuActionData {
    pub center: CenterData,
    /// Per H basis element, a dim Z(B) x dim Z(B) matrix.
    pub matrices: Vec<Matrix>,
}

impl MuActionData {
    /// Action of an arbitrary element of H on Z(B) coordinates.
    pub fn act(&self, h: &[Scalar], x: &[Scalar]) -> Vector {
        let z = self.center.algebra.dim;
        let field = &self.center.algebra.field;
        let mut out = vec_zero(field, z);
        for (k, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vec_axpy(&mut out, c, &self.matrices[k].apply(x));
            }
        }
        out
    }

    pub fn is_trivial(&self, hopf: &HopfAlgebraData) -> bool {
        let z = self.center.algebra.dim;
        let field = &self.center.algebra.field;
        (0..hopf.dim()).all(|h| {
            let eps = hopf.coalgebra.counit.get(0, h);
            self.matrices[h] == Matrix::identity(field.clone(), z).scale(eps)
        })
    }
}

impl GaloisCertificate {
    /// The action h.x = sum_i l_i(S^{-1} h) x r_i(S^{-1} h) on Z(B), with all
    /// module-algebra axioms and the commutation rule verified.
    pub fn mu_action(&self) -> Result<MuActionData, Error> {
        let a = &self.comodule;
        let alg = &a.algebra;
        let nh = a.hopf.dim();
        let field = &alg.field;
        let zc = center(&self.coinv.algebra)?;
        let z = zc.algebra.dim;
        // embedding of Z(B) into A
        let emb_a = self.coinv.embedding.matmul(&zc.embedding);
        let z_in_a = Subspace::from_spanning(
            field.clone(),
            alg.dim,
            (0..z).map(|i| emb_a.col(i)).collect(),
        );
        let mut matrices = Vec::with_capacity(nh);
        for h in 0..nh {
            let sh = a.hopf.antipode_inv.col(h);
            let gamma_lift = self.gamma_of(&sh);
            let mut cols = Vec::with_capacity(z);
            for x in 0..z {
                let xa = emb_a.col(x);
                let mut acc = vec_zero(field, alg.dim);
                let na = alg.dim;
                for (idx, c) in gamma_lift.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (i, j) = (idx / na, idx % na);
                    let lx = alg.multiply(&alg.basis_vector(i), &xa);
                    let lxr = alg.multiply(&lx, &alg.basis_vector(j));
                    vec_axpy(&mut acc, c, &lxr);
                }
                // express in Z(B) coordinates through the embedding columns
                let coords = z_in_a.coords_of(&acc).ok_or_else(|| {
                    Error::MathFailure(
                        "Miyashita-Ulbrich action value escaped the center".into(),
                    )
                })?;
                // z_in_a has an echelon basis; convert to emb_a column coords
                let col = change_to_column_coords(&z_in_a, &emb_a, &coords, field)?;
                cols.push(col);
            }
            matrices.push(Matrix::from_cols(field.clone(), z, cols)?);
        }
        let mu = MuActionData {
            center: zc,
            matrices,
        };
        self.verify_mu_axioms(&mu)?;
        Ok(mu)
    }

    fn verify_mu_axioms(&self, mu: &MuActionData) -> Result<(), Error> {
        let h_data = &self.comodule.hopf;
        let halg = &h_data.algebra;
        let co = &h_data.coalgebra;
        let z = mu.center.algebra.dim;
        let zalg = &mu.center.algebra;
        let field = &zalg.field;
        let nh = h_data.dim();
        // unit acts as identity
        let mut unit_mat = Matrix::zero(field.clone(), z, z);
        for (k, c) in halg.unit.iter().enumerate() {
            unit_mat = unit_mat.add(&mu.matrices[k].scale(c));
        }
        if unit_mat != Matrix::identity(field.clone(), z) {
            return Err(Error::MathFailure("unit does not act trivially".into()));
        }
        // (h k) . x = h . (k . x)
        for h in 0..nh {
            for k in 0..nh {
                let prod = halg.basis_product(h, k);
                let mut lhs = Matrix::zero(field.clone(), z, z);
                for (m, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = lhs.add(&mu.matrices[m].scale(c));
                    }
                }
                let rhs = mu.matrices[h].matmul(&mu.matrices[k]);
                if lhs != rhs {
                    return Err(Error::MathFailure(format!(
                        "action not multiplicative on ({}, {})",
                        halg.labels[h], halg.labels[k]
                    )));
                }
            }
        }
        // measuring: h.(xy) = (h_(1).x)(h_(2).y), h.1 = eps(h) 1
        for h in 0..nh {
            for x in 0..z {
                for y in 0..z {
                    let xy = zalg.basis_product(x, y);
                    let lhs = mu.matrices[h].apply(&xy);
                    let mut rhs = vec_zero(field, z);
                    for (c, h1, h2) in co.delta_terms(h) {
                        let hx = mu.matrices[h1].apply(&zalg.basis_vector(x));
                        let hy = mu.matrices[h2].apply(&zalg.basis_vector(y));
                        vec_axpy(&mut rhs, &c, &zalg.multiply(&hx, &hy));
                    }
                    if lhs != rhs {
                        return Err(Error::MathFailure(format!(
                            "measuring axiom fails on {}",
                            halg.labels[h]
                        )));
                    }
                }
            }
            let lhs = mu.matrices[h].apply(&zalg.unit);
            let eps = co.counit.get(0, h);
            let rhs: Vector = zalg.unit.iter().map(|u| u.mul(eps)).collect();
            if lhs != rhs {
                return Err(Error::MathFailure(format!(
                    "h.1 != eps(h) 1 on {}",
                    halg.labels[h]
                )));
            }
        }
        // commutation rule: x a = a_(0) (S(a_(1)).x) and a x = (a_(1).x) a_(0)
        let a = &self.comodule;
        let alg = &a.algebra;
        let emb_a = self.coinv.embedding.matmul(&mu.center.embedding);
        for ai in 0..alg.dim {
            let av = alg.basis_vector(ai);
            for x in 0..z {
                let xa = emb_a.col(x);
                let lhs1 = alg.multiply(&xa, &av);
                let lhs2 = alg.multiply(&av, &xa);
                let mut rhs1 = vec_zero(field, alg.dim);
                let mut rhs2 = vec_zero(field, alg.dim);
                for (c, a0, h) in a.rho_terms(ai) {
                    let sh = h_data.antipode.col(h);
                    let sx = mu.act(&sh, &zalg.basis_vector(x));
                    let sxa = emb_a.apply(&sx);
                    vec_axpy(&mut rhs1, &c, &alg.multiply(&alg.basis_vector(a0), &sxa));
                    let hx = mu.matrices[h].apply(&zalg.basis_vector(x));
                    let hxa = emb_a.apply(&hx);
                    vec_axpy(&mut rhs2, &c, &alg.multiply(&hxa, &alg.basis_vector(a0)));
                }
                if lhs1 != rhs1 || lhs2 != rhs2 {
                    return Err(Error::MathFailure(format!(
                        "commutation rule fails on ({}, z{})",
                        alg.labels[ai], x
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Convert coordinates in an echelon basis of a column span back to
/// coordinates over the original columns.
fn change_to_column_coords(
    span: &Subspace,
    columns: &Matrix,
    echelon_coords: &[Scalar],
    field: &crate::field::FieldSpec,
) -> Result<Vector, Error> {
    // solve columns * c = vector reconstructed from echelon coords
    let ambient = span.ambient();
    let mut v = vec_zero(field, ambient);
    for (i, c) in echelon_coords.iter().enumerate() {
        if !c.is_zero() {
            vec_axpy(&mut v, c, span.basis_vector(i));
        }
    }
    columns.solve_vec(&v)
}

// ---------------------------------------------------------------------------
// cotensor products, opposites, the square envelope
// ---------------------------------------------------------------------------

/// A cotensor product M box_H N realized as a subalgebra of M (x) N.
#[derive(Debug, Clone)]
pub struct CotensorAlgebra {
    pub comodule: Arc<ComoduleAlgebraData>,
    /// (dim_M * dim_N) x dim; columns are the basis inside M (x) N.
    pub embedding: Matrix,
    pub subspace: Subspace,
    pub left_dim: usize,
    pub right_dim: usize,
}

/// The equalizer { sum m_i (x) n_i : rho_M on the first leg agrees with the
/// coaction on the second leg }, with the induced one-sided coaction. The
/// Hopf algebra must be cocommutative for the result to be a comodule
/// algebra; the subalgebra property is re-verified on the computed basis.
pub fn cotensor(
    m: &ComoduleAlgebraData,
    n: &ComoduleAlgebraData,
) -> Result<CotensorAlgebra, Error> {
    if !Arc::ptr_eq(&m.hopf, &n.hopf) && !same_hopf(&m.hopf, &n.hopf) {
        return Err(Error::MixedFields(
            "cotensor factors over different Hopf algebras".into(),
        ));
    }
    if !m.hopf.is_cocommutative() {
        return Err(Error::Unsupported(
            "cotensor product of comodule algebras needs a cocommutative Hopf algebra".into(),
        ));
    }
    let nm = m.algebra.dim;
    let nn = n.algebra.dim;
    let nh = m.hopf.dim();
    let field = &m.algebra.field;
    // kernel of (rho_M (x) id) - (id (x) rho_N) into M (x) N (x) H
    let mut sys = Matrix::zero(field.clone(), nm * nn * nh, nm * nn);
    for i in 0..nm {
        for j in 0..nn {
            let col = tensor_index(i, j, nn);
            for (c, a, h) in m.rho_terms(i) {
                let row = (a * nn + j) * nh + h;
                let v = sys.get(row, col).add(&c);
                sys.set(row, col, v);
            }
            for (c, b, h) in n.rho_terms(j) {
                let row = (i * nn + b) * nh + h;
                let v = sys.get(row, col).sub(&c);
                sys.set(row, col, v);
            }
        }
    }
    let subspace = sys.kernel();
    let w = subspace.dim();
    let embedding = subspace.embedding_matrix();
    // products of basis elements and unit, expressed back in the subspace
    let unit_tensor = crate::linalg::vec_tensor(&m.algebra.unit, &n.algebra.unit);
    if !subspace.contains(&unit_tensor) {
        return Err(Error::MathFailure("cotensor does not contain 1 (x) 1".into()));
    }
    let tensor_mult = |u: &[Scalar], v: &[Scalar]| -> Vector {
        let mut out = vec_zero(field, nm * nn);
        for (iu, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (i1, j1) = (iu / nn, iu % nn);
            for (iv, cv) in v.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let (i2, j2) = (iv / nn, iv % nn);
                let c = cu.mul(cv);
                let pm = m.algebra.basis_product(i1, i2);
                let pn = n.algebra.basis_product(j1, j2);
                for (r1, x) in pm.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (r2, y) in pn.iter().enumerate() {
                        if !y.is_zero() {
                            let idx = tensor_index(r1, r2, nn);
                            out[idx] = out[idx].add(&c.mul(&x.mul(y)));
                        }
                    }
                }
            }
        }
        out
    };
    let mut mult = Matrix::zero(field.clone(), w, w * w);
    for i in 0..w {
        for j in 0..w {
            let prod = tensor_mult(subspace.basis_vector(i), subspace.basis_vector(j));
            let coords = subspace.coords_of(&prod).ok_or_else(|| {
                Error::MathFailure("cotensor is not closed under multiplication".into())
            })?;
            for (r, x) in coords.iter().enumerate() {
                mult.set(r, tensor_index(i, j, w), x.clone());
            }
        }
    }
    let unit = subspace.coords_of(&unit_tensor).expect("unit checked");
    let algebra = AlgebraData::new(
        field.clone(),
        (0..w).map(|i| format!("w{i}")).collect(),
        mult,
        unit,
    )?;
    // coaction through the first leg, expressed in cotensor coordinates
    let mut coaction = Matrix::zero(field.clone(), w * nh, w);
    for col in 0..w {
        let v = subspace.basis_vector(col);
        // apply rho_M to the first leg: result indexed by (a, j, h)
        let mut per_h: Vec<Vector> = (0..nh).map(|_| vec_zero(field, nm * nn)).collect();
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (idx / nn, idx % nn);
            for (c2, a, h) in m.rho_terms(i) {
                let t = tensor_index(a, j, nn);
                per_h[h][t] = per_h[h][t].add(&c.mul(&c2));
            }
        }
        for (h, vh) in per_h.iter().enumerate() {
            let coords = subspace.coords_of(vh).ok_or_else(|| {
                Error::MathFailure("cotensor coaction escapes the subspace".into())
            })?;
            for (r, x) in coords.iter().enumerate() {
                coaction.set(tensor_index(r, h, nh), col, x.clone());
            }
        }
    }
    let comodule = ComoduleAlgebraData::verified(Arc::new(algebra), Arc::clone(&m.hopf), coaction)?;
    Ok(CotensorAlgebra {
        comodule,
        embedding,
        subspace,
        left_dim: nm,
        right_dim: nn,
    })
}

fn same_hopf(a: &HopfAlgebraData, b: &HopfAlgebraData) -> bool {
    a.algebra.mult == b.algebra.mult
        && a.coalgebra.comult == b.coalgebra.comult
        && a.antipode == b.antipode
        && a.algebra.unit == b.algebra.unit
        && a.coalgebra.counit == b.coalgebra.counit
}

/// The opposite comodule algebra: reversed multiplication, coaction composed
/// with the antipode. Axioms are re-verified and fail for non-cocommutative H.
pub fn opposite(a: &ComoduleAlgebraData) -> Result<Arc<ComoduleAlgebraData>, Error> {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let mut coaction = Matrix::zero(field.clone(), na * nh, na);
    for j in 0..na {
        for (c, a0, h) in a.rho_terms(j) {
            let s = a.hopf.antipode.col(h);
            for (k, sv) in s.iter().enumerate() {
                if !sv.is_zero() {
                    let row = tensor_index(a0, k, nh);
                    let v = coaction.get(row, j).add(&c.mul(sv));
                    coaction.set(row, j, v);
                }
            }
        }
    }
    ComoduleAlgebraData::verified(
        Arc::new(a.algebra.opposite()),
        Arc::clone(&a.hopf),
        coaction,
    )
}

/// The square envelope A box_H A^op, certified as an H-Galois extension of
/// B (x) B^op, with the translation table cross-checked against the formula
/// assembled from the certificate of A.
#[derive(Debug)]
pub struct SquareEnvelope {
    pub opposite: Arc<ComoduleAlgebraData>,
    pub cotensor: CotensorAlgebra,
    pub cert: GaloisCertificate,
}

impl SquareEnvelope {
    pub fn dim(&self) -> usize {
        self.cotensor.comodule.algebra.dim
    }

    /// Express an element of A (x) A lying in the envelope in envelope
    /// coordinates.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vector> {
        self.cotensor.subspace.coords_of(v)
    }
}

pub fn square_envelope(
    a: &Arc<ComoduleAlgebraData>,
    cert: &GaloisCertificate,
) -> Result<SquareEnvelope, Error> {
    let op = opposite(a)?;
    let env = cotensor(a, &op)?;
    let env_cert = galois_check(&env.comodule)?.certified()?;
    // the coinvariants must be exactly B (x) B inside A (x) A
    let na = a.algebra.dim;
    let field = &a.algebra.field;
    let bdim = cert.coinv.dim();
    let mut expected_rows = Vec::new();
    for i in 0..bdim {
        for j in 0..bdim {
            expected_rows.push(crate::linalg::vec_tensor(
                &cert.coinv.embedding.col(i),
                &cert.coinv.embedding.col(j),
            ));
        }
    }
    let expected = Subspace::from_spanning(field.clone(), na * na, expected_rows);
    let actual_rows: Vec<Vector> = (0..env_cert.coinv.dim())
        .map(|i| env.embedding.apply(&env_cert.coinv.embedding.col(i)))
        .collect();
    let actual = Subspace::from_spanning(field.clone(), na * na, actual_rows);
    if expected != actual {
        return Err(Error::MathFailure(
            "envelope coinvariants differ from B (x) B^op".into(),
        ));
    }
    // Translation-table cross-check through the canonical map of the
    // enveloping algebra A (x) A^op: the pairing-formula representative and
    // the computed envelope table both live in the tensor square over B^e,
    // where that canonical map is injective and sends either one to
    // 1 (x) 1 (x) Delta(h).
    let nh = a.hopf.dim();
    let w = env.comodule.algebra.dim;
    for h in 0..nh {
        let mut formula = vec_zero(field, na * na * na * na);
        for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
            for (c1, li, ri) in cert.gamma_terms(h1) {
                for (c2, lj, rj) in cert.gamma_terms(h2) {
                    // (l_i(h1) (x) r_j(h2)) (x) (r_i(h1) (x) l_j(h2))
                    let first = tensor_index(li, rj, na);
                    let second = tensor_index(ri, lj, na);
                    let idx = tensor_index(first, second, na * na);
                    formula[idx] = formula[idx].add(&c.mul(&c1.mul(&c2)));
                }
            }
        }
        // the envelope's own table, lifted to (A (x) A)^{(x) 2}
        let mut table_lift = vec_zero(field, na * na * na * na);
        for (idx, c) in env_cert.gamma[h].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (idx / w, idx % w);
            let (ei, ej) = (env.subspace.basis_vector(i), env.subspace.basis_vector(j));
            for (p, x) in ei.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (r, y) in ej.iter().enumerate() {
                    if !y.is_zero() {
                        let t = tensor_index(p, r, na * na);
                        table_lift[t] = table_lift[t].add(&c.mul(&x.mul(y)));
                    }
                }
            }
        }
        let mut target = vec_zero(field, na * na * nh * nh);
        for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
            for (i, x) in a.algebra.unit.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in a.algebra.unit.iter().enumerate() {
                    if !y.is_zero() {
                        let idx = ((i * na + j) * nh + h1) * nh + h2;
                        target[idx] = target[idx].add(&c.mul(&x.mul(y)));
                    }
                }
            }
        }
        if enveloping_can(a, &formula) != target {
            return Err(Error::MathFailure(format!(
                "pairing formula fails the enveloping canonical identity on {}",
                a.hopf.algebra.labels[h]
            )));
        }
        if enveloping_can(a, &table_lift) != target {
            return Err(Error::MathFailure(format!(
                "envelope translation table disagrees with the pairing formula on {}",
                a.hopf.algebra.labels[h]
            )));
        }
    }
    Ok(SquareEnvelope {
        opposite: op,
        cotensor: env,
        cert: env_cert,
    })
}

/// The canonical map of the enveloping algebra A (x) A^op on a lift in
/// (A (x) A)^{(x) 2}:
/// (a (x) b) (x) (a' (x) b') -> a a'_(0) (x) b'_(0) b (x) a'_(1) (x) S(b'_(1)).
fn enveloping_can(a: &ComoduleAlgebraData, lift: &[Scalar]) -> Vector {
    let alg = &a.algebra;
    let na = alg.dim;
    let nh = a.hopf.dim();
    let field = &alg.field;
    let mut out = vec_zero(field, na * na * nh * nh);
    for (idx, c) in lift.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let first = idx / (na * na);
        let second = idx % (na * na);
        let (p, q) = (first / na, first % na);
        let (r, s) = (second / na, second % na);
        for (c1, r0, h1) in a.rho_terms(r) {
            let left = alg.basis_product(p, r0);
            for (c2, s0, h2) in a.rho_terms(s) {
                let right = alg.basis_product(s0, q);
                let sh = a.hopf.antipode.col(h2);
                let cc = c.mul(&c1.mul(&c2));
                for (aa, x) in left.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (bb, y) in right.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let cxy = cc.mul(&x.mul(y));
                        for (k, sv) in sh.iter().enumerate() {
                            if !sv.is_zero() {
                                let o = ((aa * na + bb) * nh + h1) * nh + k;
                                out[o] = out[o].add(&cxy.mul(sv));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// dualized actions
// ---------------------------------------------------------------------------

/// Turn a left H-module algebra (one action matrix per H basis element) into
/// a right comodule algebra over the dual Hopf algebra, taking
/// rho(a) = sum_i (e_i . a) (x) e^i. Module-algebra axioms are verified
/// first, comodule-algebra axioms after, so a wrong convention cannot pass.
pub fn dualize_action(
    hopf: &Arc<HopfAlgebraData>,
    action: &[Matrix],
    algebra: Arc<AlgebraData>,
) -> Result<(Arc<HopfAlgebraData>, Arc<ComoduleAlgebraData>), Error> {
    let nh = hopf.dim();
    let na = algebra.dim;
    let field = &algebra.field;
    if action.len() != nh {
        return Err(Error::DimensionMismatch(
            "one action matrix per Hopf basis element required".into(),
        ));
    }
    for m in action {
        if m.rows() != na || m.cols() != na {
            return Err(Error::DimensionMismatch("action matrix shape".into()));
        }
    }
    // module axioms
    let mut unit_mat = Matrix::zero(field.clone(), na, na);
    for (k, c) in hopf.algebra.unit.iter().enumerate() {
        unit_mat = unit_mat.add(&action[k].scale(c));
    }
    if unit_mat != Matrix::identity(field.clone(), na) {
        return Err(Error::AxiomFailure("module axiom: 1.a != a".into()));
    }
    for h in 0..nh {
        for k in 0..nh {
            let prod = hopf.algebra.basis_product(h, k);
            let mut lhs = Matrix::zero(field.clone(), na, na);
            for (m, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&action[m].scale(c));
                }
            }
            if lhs != action[h].matmul(&action[k]) {
                return Err(Error::AxiomFailure(format!(
                    "module axiom: ({} {}).a != {}.({}.a)",
                    hopf.labels()[h],
                    hopf.labels()[k],
                    hopf.labels()[h],
                    hopf.labels()[k]
                )));
            }
        }
    }
    // measuring
    for h in 0..nh {
        for i in 0..na {
            for j in 0..na {
                let lhs = action[h].apply(&algebra.basis_product(i, j));
                let mut rhs = vec_zero(field, na);
                for (c, h1, h2) in hopf.coalgebra.delta_terms(h) {
                    let ha = action[h1].col(i);
                    let hb = action[h2].col(j);
                    vec_axpy(&mut rhs, &c, &algebra.multiply(&ha, &hb));
                }
                if lhs != rhs {
                    return Err(Error::AxiomFailure(format!(
                        "measuring axiom fails on ({}, {}, {})",
                        hopf.labels()[h],
                        algebra.labels[i],
                        algebra.labels[j]
                    )));
                }
            }
        }
        let lhs = action[h].apply(&algebra.unit);
        let eps = hopf.coalgebra.counit.get(0, h);
        let rhs: Vector = algebra.unit.iter().map(|u| u.mul(eps)).collect();
        if lhs != rhs {
            return Err(Error::AxiomFailure(format!(
                "h.1 != eps(h)1 on {}",
                hopf.labels()[h]
            )));
        }
    }
    let dual = hopf.dual()?;
    let mut coaction = Matrix::zero(field.clone(), na * nh, na);
    for j in 0..na {
        for (i, act) in action.iter().enumerate() {
            let col = act.col(j);
            for (b, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    coaction.set(tensor_index(b, i, nh), j, x.clone());
                }
            }
        }
    }
    let comodule = ComoduleAlgebraData::verified(algebra, Arc::clone(&dual), coaction)?;
    Ok((dual, comodule))
}

// ---------------------------------------------------------------------------
// morphism spaces
// ---------------------------------------------------------------------------

/// Which hom-space of the two-object category attached to a comodule algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismSpace {
    /// Hom(H, B): arbitrary linear maps into the coinvariants.
    BaseToBase,
    /// Hom^H(H, A): colinear maps rho(t(h)) = t(h_(1)) (x) h_(2).
    BaseToTotal,
    /// Maps with rho(u(h)) = u(h_(2)) (x) S(h_(1)).
    TotalToBase,
    /// Maps with rho(w(h)) = w(h_(2)) (x) S(h_(1)) h_(3).
    TotalToTotal,
}

/// Basis of the requested space of linear maps H -> A, as a subspace of the
/// flattened map space (index a * dim_H + h).
pub fn morphism_space(
    a: &ComoduleAlgebraData,
    coinv: &CoinvariantAlgebra,
    which: MorphismSpace,
) -> Result<Subspace, Error> {
    let na = a.algebra.dim;
    let nh = a.hopf.dim();
    let field = &a.algebra.field;
    let dim = na * nh;
    match which {
        MorphismSpace::BaseToBase => {
            let mut rows = Vec::new();
            for b in 0..coinv.dim() {
                let emb = coinv.embedding.col(b);
                for h in 0..nh {
                    let mut v = vec_zero(field, dim);
                    for (i, x) in emb.iter().enumerate() {
                        v[tensor_index(i, h, nh)] = x.clone();
                    }
                    rows.push(v);
                }
            }
            Ok(Subspace::from_spanning(field.clone(), dim, rows))
        }
        _ => {
            // constraints: rho(T(e_h)) - <colinearity pattern> = 0
            // unknowns T[a, h] flattened a * nh + h; equations indexed by
            // (h, a-leg, h-leg)
            let mut sys = Matrix::zero(field.clone(), nh * na * nh, dim);
            for h in 0..nh {
                // LHS: rho applied to T(e_h)
                for acol in 0..na {
                    for (c, a0, hh) in a.rho_terms(acol) {
                        let row = (h * na + a0) * nh + hh;
                        let col = tensor_index(acol, h, nh);
                        let v = sys.get(row, col).add(&c);
                        sys.set(row, col, v);
                    }
                }
                // RHS patterns, subtracted
                match which {
                    MorphismSpace::BaseToTotal => {
                        for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
                            for a0 in 0..na {
                                let row = (h * na + a0) * nh + h2;
                                let col = tensor_index(a0, h1, nh);
                                let v = sys.get(row, col).sub(&c);
                                sys.set(row, col, v);
                            }
                        }
                    }
                    MorphismSpace::TotalToBase => {
                        for (c, h1, h2) in a.hopf.coalgebra.delta_terms(h) {
                            let s = a.hopf.antipode.col(h1);
                            for (k, sv) in s.iter().enumerate() {
                                if sv.is_zero() {
                                    continue;
                                }
                                for a0 in 0..na {
                                    let row = (h * na + a0) * nh + k;
                                    let col = tensor_index(a0, h2, nh);
                                    let v = sys.get(row, col).sub(&c.mul(sv));
                                    sys.set(row, col, v);
                                }
                            }
                        }
                    }
                    MorphismSpace::TotalToTotal => {
                        // w(h_(2)) (x) S(h_(1)) h_(3)
                        for (c, h1, h2, h3) in a.hopf.coalgebra.delta2_terms(h) {
                            let s = a.hopf.antipode.col(h1);
                            let mut sh3 = vec_zero(field, nh);
                            for (k, sv) in s.iter().enumerate() {
                                if !sv.is_zero() {
                                    vec_axpy(
                                        &mut sh3,
                                        sv,
                                        &a.hopf.algebra.basis_product(k, h3),
                                    );
                                }
                            }
                            for (k, sv) in sh3.iter().enumerate() {
                                if sv.is_zero() {
                                    continue;
                                }
                                for a0 in 0..na {
                                    let row = (h * na + a0) * nh + k;
                                    let col = tensor_index(a0, h2, nh);
                                    let v = sys.get(row, col).sub(&c.mul(sv));
                                    sys.set(row, col, v);
                                }
                            }
                        }
                    }
                    MorphismSpace::BaseToBase => unreachable!(),
                }
            }
            Ok(sys.kernel())
        }
    }
}

/// Format an element of A (x) A (or any tensor square) as basis pairs.
pub fn format_tensor(v: &[Scalar], labels: &[String]) -> String {
    let n = labels.len();
    let mut terms = Vec::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = (idx / n, idx % n);
        if c.is_one() {
            terms.push(format!("{} (x) {}", labels[i], labels[j]));
        } else {
            terms.push(format!("{c} * {} (x) {}", labels[i], labels[j]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub use crate::hopf::format_in_basis as format_element;

#[cfg(test)]
mod tests;
