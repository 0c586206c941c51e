//! Sweedler cohomology in low degree for a cocommutative Hopf algebra acting
//! on a commutative algebra: 1-cocycles, 1-coboundaries, their quotient, the
//! operational 2-cocycle predicate, class triviality and class equality.
//!
//! Triviality of a 2-cocycle class is decided through the crossed product it
//! defines: the class is trivial precisely when the crossed product admits an
//! algebra-map total integral. Over finite fields that search is exhaustive,
//! so a negative verdict comes with an exhaustion certificate.

use std::sync::Arc;

use crate::cleft::{
    crossed_product, find_algebra_integral, IntegralSearch, OmegaAction, TotalIntegral, TwoCocycle,
};
use crate::field::Scalar;
use crate::hopf::{
    algebra_maps, conv_inverse, conv_unit, convolve, matrix_cmp, AlgebraData,
    ConvolutionMap, HopfAlgebraData,
};
use crate::linalg::{tensor_index, vec_axpy, vec_is_zero, vec_zero, Matrix};
use crate::Error;

/// A linear map v: H -> B with its convolution-invertibility and
/// normalization flags, both verified at construction.
#[derive(Debug, Clone)]
pub struct OneCochain {
    pub map: ConvolutionMap,
    pub invertible: bool,
    pub normalized: bool,
}

impl OneCochain {
    pub fn new(
        hopf: &Arc<HopfAlgebraData>,
        base: &Arc<AlgebraData>,
        matrix: Matrix,
    ) -> Result<Self, Error> {
        let map = ConvolutionMap::new(Arc::clone(&hopf.coalgebra), Arc::clone(base), matrix)?;
        let invertible = conv_inverse(&map).is_some();
        let normalized = map.apply(&hopf.algebra.unit) == base.unit;
        Ok(OneCochain {
            map,
            invertible,
            normalized,
        })
    }

    pub fn unit(hopf: &Arc<HopfAlgebraData>, base: &Arc<AlgebraData>) -> Self {
        let u = conv_unit(&hopf.coalgebra, base);
        OneCochain {
            map: u,
            invertible: true,
            normalized: true,
        }
    }
}

fn require_sweedler_setting(hopf: &HopfAlgebraData, base: &AlgebraData) -> Result<(), Error> {
    if !hopf.is_cocommutative() {
        return Err(Error::Unsupported(
            "Sweedler cohomology needs a cocommutative Hopf algebra".into(),
        ));
    }
    if !base.is_commutative() {
        return Err(Error::Unsupported(
            "Sweedler cohomology needs a commutative coefficient algebra".into(),
        ));
    }
    Ok(())
}

/// The 1-cocycle condition v(hk) = v(h_(1)) (h_(2) . v(k)), checked on all
/// basis pairs; returns the first failing pair as witness.
pub fn is_one_cocycle(
    hopf: &HopfAlgebraData,
    base: &AlgebraData,
    omega: &OmegaAction,
    v: &OneCochain,
) -> (bool, Option<(usize, usize)>) {
    let nh = hopf.dim();
    for h in 0..nh {
        for k in 0..nh {
            let lhs = v.map.apply(&hopf.algebra.basis_product(h, k));
            let vk = v.map.apply_basis(k);
            let mut rhs = vec_zero(&base.field, base.dim);
            for (c, h1, h2) in hopf.coalgebra.delta_terms(h) {
                let act = omega.matrices[h2].apply(&vk);
                let prod = base.multiply(&v.map.apply_basis(h1), &act);
                vec_axpy(&mut rhs, &c, &prod);
            }
            if lhs != rhs {
                return (false, Some((h, k)));
            }
        }
    }
    (true, None)
}

/// How a cochain list was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationRoute {
    /// Complete enumeration of the candidate space (finite fields).
    Exhaustive,
    /// Trivial action: the cocycle condition collapses to multiplicativity,
    /// so the list is the algebra-map list.
    AlgebraMapReduction,
}

#[derive(Debug)]
pub struct CochainList {
    pub cochains: Vec<OneCochain>,
    pub route: EnumerationRoute,
}

fn omega_is_trivial(hopf: &HopfAlgebraData, base: &AlgebraData, omega: &OmegaAction) -> bool {
    omega.is_trivial(hopf, base)
}

/// All Sweedler 1-cocycles for the action, in deterministic order. Over
/// finite fields the full space of normalized maps is enumerated (cap); for
/// the trivial action the list is Alg(H, B) over any field.
pub fn one_cocycles(
    hopf: &Arc<HopfAlgebraData>,
    base: &Arc<AlgebraData>,
    omega: &OmegaAction,
    cap: u64,
) -> Result<CochainList, Error> {
    require_sweedler_setting(hopf, base)?;
    if omega_is_trivial(hopf, base, omega) {
        let maps = algebra_maps(&hopf.algebra, base, cap)?;
        let mut cochains = Vec::with_capacity(maps.len());
        for m in maps {
            let c = OneCochain::new(hopf, base, m)?;
            // algebra maps are convolution invertible (inverse through the
            // antipode) and unital
            if !c.invertible || !c.normalized {
                return Err(Error::MathFailure(
                    "algebra map failed the cochain flags".into(),
                ));
            }
            cochains.push(c);
        }
        return Ok(CochainList {
            cochains,
            route: EnumerationRoute::AlgebraMapReduction,
        });
    }
    let field = &base.field;
    let Some(q) = field.size() else {
        return Err(Error::Unsupported(
            "1-cocycle enumeration over an infinite field needs the trivial action".into(),
        ));
    };
    let nh = hopf.dim();
    let nb = base.dim;
    let total = q
        .checked_pow((nb * nh) as u32)
        .filter(|&t| t <= cap as u128)
        .ok_or_else(|| Error::CapExceeded(format!("{q}^{} cochain candidates", nb * nh)))?;
    let elems = field.elements()?;
    let mut out: Vec<OneCochain> = Vec::new();
    for kk in 0..total {
        let mut rest = kk;
        let mut m = Matrix::zero(field.clone(), nb, nh);
        for h in 0..nh {
            for b in 0..nb {
                m.set(b, h, elems[(rest % q) as usize].clone());
                rest /= q;
            }
        }
        if m.apply(&hopf.algebra.unit) != base.unit {
            continue;
        }
        let cochain = OneCochain::new(hopf, base, m)?;
        let (ok, _) = is_one_cocycle(hopf, base, omega, &cochain);
        if ok && cochain.invertible {
            out.push(cochain);
        }
    }
    out.sort_by(|a, b| matrix_cmp(&a.map.matrix, &b.map.matrix));
    Ok(CochainList {
        cochains: out,
        route: EnumerationRoute::Exhaustive,
    })
}

/// Result of the coboundary enumeration: over an infinite field with a
/// nontrivial action the orbit cannot be enumerated and is described instead.
#[derive(Debug)]
pub enum CoboundaryList {
    Enumerated(CochainList),
    Described(String),
}

/// The coboundaries v_b(h) = (h . b) b^{-1} for b a unit of B, deduplicated
/// and deterministically ordered.
pub fn one_coboundaries(
    hopf: &Arc<HopfAlgebraData>,
    base: &Arc<AlgebraData>,
    omega: &OmegaAction,
    cap: u64,
) -> Result<CoboundaryList, Error> {
    require_sweedler_setting(hopf, base)?;
    if omega_is_trivial(hopf, base, omega) {
        // (h.b) b^{-1} = eps(h) 1 for every unit b
        let unit = OneCochain::unit(hopf, base);
        return Ok(CoboundaryList::Enumerated(CochainList {
            cochains: vec![unit],
            route: EnumerationRoute::AlgebraMapReduction,
        }));
    }
    if base.field.size().is_none() {
        return Ok(CoboundaryList::Described(format!(
            "coboundaries are the orbit {{ h -> (h.b) b^-1 : b a unit of B }}; \
             the unit group of a {}-dimensional algebra over the rationals is \
             infinite and is not enumerated",
            base.dim
        )));
    }
    let nh = hopf.dim();
    let nb = base.dim;
    let mut out: Vec<Matrix> = Vec::new();
    for b in base.enumerate_elements(cap)? {
        let Some(binv) = base.inverse_of(&b) else {
            continue;
        };
        let mut m = Matrix::zero(base.field.clone(), nb, nh);
        for h in 0..nh {
            let hb = omega.matrices[h].apply(&b);
            let v = base.multiply(&hb, &binv);
            for (r, x) in v.iter().enumerate() {
                m.set(r, h, x.clone());
            }
        }
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out.sort_by(matrix_cmp);
    let mut cochains = Vec::with_capacity(out.len());
    for m in out {
        cochains.push(OneCochain::new(hopf, base, m)?);
    }
    Ok(CoboundaryList::Enumerated(CochainList {
        cochains,
        route: EnumerationRoute::Exhaustive,
    }))
}

/// First Sweedler cohomology: the cocycles modulo the coboundary subgroup
/// under convolution, with canonical (lexicographically least) coset
/// representatives.
#[derive(Debug)]
pub struct FirstCohomology {
    pub cocycle_count: usize,
    pub coboundary_count: usize,
    pub order: usize,
    pub representatives: Vec<OneCochain>,
    /// Whether an algebra-map base point backs the identification of the
    /// cohomology group with classes of algebra-map integrals.
    pub base_point_backed: bool,
}

pub fn first_cohomology(
    hopf: &Arc<HopfAlgebraData>,
    base: &Arc<AlgebraData>,
    omega: &OmegaAction,
    cap: u64,
    base_point_backed: bool,
) -> Result<FirstCohomology, Error> {
    let z1 = one_cocycles(hopf, base, omega, cap)?;
    let b1 = match one_coboundaries(hopf, base, omega, cap)? {
        CoboundaryList::Enumerated(l) => l,
        CoboundaryList::Described(d) => {
            return Err(Error::Unsupported(format!(
                "cannot form the quotient: {d}"
            )))
        }
    };
    // every coboundary is a cocycle
    for w in &b1.cochains {
        let (ok, _) = is_one_cocycle(hopf, base, omega, w);
        if !ok {
            return Err(Error::MathFailure(
                "a coboundary failed the cocycle condition".into(),
            ));
        }
    }
    // cosets: v ~ v' iff v' = w * v for a coboundary w
    let mut remaining: Vec<&OneCochain> = z1.cochains.iter().collect();
    let mut reps = Vec::new();
    while let Some(first) = remaining.first() {
        let v = (*first).clone();
        let mut coset: Vec<Matrix> = Vec::new();
        for w in &b1.cochains {
            let wv = convolve(&w.map, &v.map)?;
            coset.push(wv.matrix);
        }
        remaining.retain(|c| !coset.contains(&c.map.matrix));
        // canonical representative: lexicographically least member
        let mut least = coset[0].clone();
        for m in &coset[1..] {
            if matrix_cmp(m, &least) == std::cmp::Ordering::Less {
                least = m.clone();
            }
        }
        reps.push(OneCochain::new(hopf, base, least)?);
    }
    reps.sort_by(|a, b| matrix_cmp(&a.map.matrix, &b.map.matrix));
    let order = reps.len();
    if b1.cochains.is_empty() || z1.cochains.len() % b1.cochains.len() != 0 {
        return Err(Error::MathFailure(
            "coboundary subgroup does not divide the cocycle group".into(),
        ));
    }
    Ok(FirstCohomology {
        cocycle_count: z1.cochains.len(),
        coboundary_count: b1.cochains.len(),
        order,
        representatives: reps,
        base_point_backed,
    })
}

/// Verdict on a 2-cocycle class.
#[derive(Debug)]
pub enum Triviality {
    /// An algebra-map total integral on the crossed product witnesses the
    /// class being a coboundary.
    Trivial { witness: Box<TotalIntegral> },
    /// The full candidate space was enumerated without finding a witness.
    Nontrivial,
    /// The bounded search was inconclusive.
    Unknown,
}

/// A 2-cocycle with its class verdict.
#[derive(Debug)]
pub struct CocycleClass {
    pub representative: TwoCocycle,
    pub status: Triviality,
}

impl CocycleClass {
    pub fn is_trivial(&self) -> Option<bool> {
        match self.status {
            Triviality::Trivial { .. } => Some(true),
            Triviality::Nontrivial => Some(false),
            Triviality::Unknown => None,
        }
    }
}

/// Decide triviality of a 2-cocycle through its crossed product: the class
/// is trivial iff the crossed product carries an algebra-map total integral.
/// The crossed-product construction itself is the operational check that the
/// table is a 2-cocycle at all.
pub fn two_cocycle_trivial(sigma: &TwoCocycle, cap: u64) -> Result<CocycleClass, Error> {
    let crossed = crossed_product(sigma)?;
    let status = match find_algebra_integral(&crossed, cap)? {
        IntegralSearch::Found(t) => Triviality::Trivial { witness: Box::new(t) },
        IntegralSearch::NoneDefinitive => Triviality::Nontrivial,
        IntegralSearch::CapExceeded => Triviality::Unknown,
    };
    Ok(CocycleClass {
        representative: sigma.clone(),
        status,
    })
}

/// Convolution inverse of a 2-cochain (a map from the tensor-square
/// coalgebra of H into B).
fn two_cochain_inverse(sigma: &TwoCocycle) -> Result<Option<TwoCocycle>, Error> {
    let hopf = &sigma.hopf;
    let nh = hopf.dim();
    let nb = sigma.base.dim;
    let domain = Arc::new(hopf.coalgebra.tensor(&hopf.coalgebra));
    let codomain = Arc::new(sigma.base.clone());
    let mut m = Matrix::zero(sigma.base.field.clone(), nb, nh * nh);
    for h in 0..nh {
        for k in 0..nh {
            for (r, x) in sigma.table[h][k].iter().enumerate() {
                m.set(r, tensor_index(h, k, nh), x.clone());
            }
        }
    }
    let f = ConvolutionMap::new(domain, codomain, m)?;
    let Some(inv) = conv_inverse(&f) else {
        return Ok(None);
    };
    let mut table = Vec::with_capacity(nh);
    for h in 0..nh {
        let mut row = Vec::with_capacity(nh);
        for k in 0..nh {
            row.push(inv.matrix.col(tensor_index(h, k, nh)));
        }
        table.push(row);
    }
    Ok(Some(TwoCocycle {
        hopf: Arc::clone(hopf),
        base: sigma.base.clone(),
        omega: sigma.omega.clone(),
        table,
        provenance: Some("convolution inverse".into()),
    }))
}

/// Convolution product of two 2-cochains over the tensor-square coalgebra.
fn two_cochain_product(a: &TwoCocycle, b: &TwoCocycle) -> Result<TwoCocycle, Error> {
    let hopf = &a.hopf;
    let nh = hopf.dim();
    let field = &a.base.field;
    let mut table = Vec::with_capacity(nh);
    for h in 0..nh {
        let mut row = Vec::with_capacity(nh);
        for k in 0..nh {
            let mut acc = vec_zero(field, a.base.dim);
            for (c1, h1, h2) in hopf.coalgebra.delta_terms(h) {
                for (c2, k1, k2) in hopf.coalgebra.delta_terms(k) {
                    let c = c1.mul(&c2);
                    let prod = a.base.multiply(&a.table[h1][k1], &b.table[h2][k2]);
                    vec_axpy(&mut acc, &c, &prod);
                }
            }
            row.push(acc);
        }
        table.push(row);
    }
    Ok(TwoCocycle {
        hopf: Arc::clone(hopf),
        base: a.base.clone(),
        omega: a.omega.clone(),
        table,
        provenance: Some("cochain product".into()),
    })
}

/// Whether two 2-cocycles define the same cohomology class, decided by
/// testing triviality of sigma1 * sigma2^{-1}. Valid for cocommutative H and
/// commutative B, where normalized 2-cochains form an abelian group under
/// convolution and coboundaries a subgroup; the operation refuses to run
/// outside those hypotheses.
pub fn cocycle_classes_equal(
    s1: &TwoCocycle,
    s2: &TwoCocycle,
    cap: u64,
) -> Result<(bool, CocycleClass), Error> {
    require_sweedler_setting(&s1.hopf, &s1.base)?;
    if s1.base.dim != s2.base.dim || s1.omega.matrices != s2.omega.matrices {
        return Err(Error::Unsupported(
            "cocycle classes live over one action; the tables differ".into(),
        ));
    }
    let inv = two_cochain_inverse(s2)?.ok_or_else(|| {
        Error::MathFailure("second cocycle is not convolution invertible".into())
    })?;
    let quotient = two_cochain_product(s1, &inv)?;
    let class = two_cocycle_trivial(&quotient, cap)?;
    let equal = matches!(class.status, Triviality::Trivial { .. });
    Ok((equal, class))
}

/// Convenience: are all table values zero outside the unit coefficient?
pub fn cochain_values_in_unit_span(v: &OneCochain, base: &AlgebraData) -> bool {
    for h in 0..v.map.matrix.cols() {
        let col = v.map.apply_basis(h);
        // col must be a scalar multiple of the unit
        let mut ratio: Option<Scalar> = None;
        for (i, u) in base.unit.iter().enumerate() {
            if u.is_zero() {
                if !col[i].is_zero() {
                    return false;
                }
            } else {
                let r = col[i].div(u).unwrap();
                match &ratio {
                    None => ratio = Some(r),
                    Some(prev) => {
                        if *prev != r {
                            return false;
                        }
                    }
                }
            }
        }
        if !vec_is_zero(&col) && ratio.is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests;
