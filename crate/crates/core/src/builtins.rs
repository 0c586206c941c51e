//! Ready-made structure-constant data: the additive Hopf algebra
//! `H_q = k[x]/(x^q - x)` with primitive x, the Artin-Schreier objects
//! `S_a = k[y]/(y^q - y - a)`, the trigonometric algebra `Q[c,s]/(c^2+s^2-1, sc)`
//! with its quartic-field module algebra, group algebras, and the tensor
//! extensions B (x) S.

use std::sync::Arc;

use crate::field::{FieldSpec, Scalar};
use crate::galois::{
    dualize_action, galois_check, ComoduleAlgebraData, GaloisCertificate,
};
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebraData};
use crate::linalg::{tensor_index, vec_zero, Matrix, Vector};
use crate::Error;

fn binomial_in_field(field: &FieldSpec, n: usize, k: usize) -> Scalar {
    // Pascal's triangle in the field, fine at these sizes.
    let mut row: Vec<Scalar> = vec![field.one()];
    for _ in 0..n {
        let mut next = vec![field.one()];
        for i in 1..row.len() {
            next.push(row[i - 1].add(&row[i]));
        }
        next.push(field.one());
        row = next;
    }
    row[k].clone()
}

/// The group algebra kC2: basis {1, g}, Delta(g) = g (x) g, S(g) = g.
pub fn group_algebra_c2(field: FieldSpec) -> Result<Arc<HopfAlgebraData>, Error> {
    let labels = vec!["1".to_string(), "g".to_string()];
    let one = field.one();
    let zero = field.zero();
    let mut mult = Matrix::zero(field.clone(), 2, 4);
    // 1*1=1, 1*g=g, g*1=g, g*g=1
    mult.set(0, 0, one.clone());
    mult.set(1, 1, one.clone());
    mult.set(1, 2, one.clone());
    mult.set(0, 3, one.clone());
    let unit = vec![one.clone(), zero.clone()];
    let alg = AlgebraData::new(field.clone(), labels.clone(), mult, unit)?
        .with_generators(vec![vec![zero.clone(), one.clone()]]);
    let mut comult = Matrix::zero(field.clone(), 4, 2);
    comult.set(tensor_index(0, 0, 2), 0, one.clone());
    comult.set(tensor_index(1, 1, 2), 1, one.clone());
    let mut counit = Matrix::zero(field.clone(), 1, 2);
    counit.set(0, 0, one.clone());
    counit.set(0, 1, one.clone());
    let co = CoalgebraData::new(field.clone(), labels, comult, counit)?;
    let antipode = Matrix::identity(field, 2);
    let h = HopfAlgebraData::new(alg, co, antipode)?;
    h.check_hopf_axioms().into_result()?;
    Ok(h)
}

/// `H_q = k[x]/(x^q - x)` over k = GF(p^d), q = p^d, with x primitive and
/// S(x) = -x. Basis 1, x, ..., x^{q-1}; the comultiplication of x^i is the
/// binomial expansion of (x (x) 1 + 1 (x) x)^i mod p.
pub fn additive_hopf(p: u64, d: usize) -> Result<Arc<HopfAlgebraData>, Error> {
    let field = FieldSpec::finite(p, d)?;
    let q = field.size().ok_or_else(|| Error::InvalidField("field too large".into()))? as usize;
    let labels: Vec<String> = (0..q)
        .map(|i| match i {
            0 => "1".into(),
            1 => "x".into(),
            i => format!("x^{i}"),
        })
        .collect();
    // x^m for m >= q reduces through x^q = x
    let reduce_exp = |mut m: usize| -> usize {
        while m >= q {
            m -= q - 1;
        }
        m
    };
    let mut mult = Matrix::zero(field.clone(), q, q * q);
    for i in 0..q {
        for j in 0..q {
            mult.set(reduce_exp(i + j), tensor_index(i, j, q), field.one());
        }
    }
    let mut unit = vec_zero(&field, q);
    unit[0] = field.one();
    let mut x = vec_zero(&field, q);
    x[1] = field.one();
    let alg = AlgebraData::new(field.clone(), labels.clone(), mult, unit)?
        .with_generators(vec![x]);
    let mut comult = Matrix::zero(field.clone(), q * q, q);
    for i in 0..q {
        for k in 0..=i {
            comult.set(
                tensor_index(k, i - k, q),
                i,
                binomial_in_field(&field, i, k),
            );
        }
    }
    let mut counit = Matrix::zero(field.clone(), 1, q);
    counit.set(0, 0, field.one());
    let co = CoalgebraData::new(field.clone(), labels, comult, counit)?;
    let mut antipode = Matrix::zero(field.clone(), q, q);
    for i in 0..q {
        // S(x^i) = (-x)^i
        let sign = if i % 2 == 0 {
            field.one()
        } else {
            field.from_integer(-1)
        };
        antipode.set(i, i, sign);
    }
    let h = HopfAlgebraData::new(alg, co, antipode)?;
    h.check_hopf_axioms().into_result()?;
    Ok(h)
}

/// The Artin-Schreier comodule algebra `S_a = k[y]/(y^q - y - a)` with
/// coaction y -> y (x) 1 + 1 (x) x over H_q.
pub fn artin_schreier_comodule(
    hopf: &Arc<HopfAlgebraData>,
    a: &Scalar,
) -> Result<Arc<ComoduleAlgebraData>, Error> {
    let field = hopf.field().clone();
    let q = hopf.dim();
    let labels: Vec<String> = (0..q)
        .map(|i| match i {
            0 => "1".into(),
            1 => "y".into(),
            i => format!("y^{i}"),
        })
        .collect();
    // polynomial reduction mod y^q = y + a
    let reduce = |poly: Vec<Scalar>| -> Vector {
        let mut p = poly;
        while p.len() > q {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let deg = p.len(); // degree of the popped monomial
            let shift = deg - q;
            p[shift + 1] = p[shift + 1].add(&top);
            p[shift] = p[shift].add(&top.mul(a));
        }
        p.resize(q, field.zero());
        p
    };
    let mut mult = Matrix::zero(field.clone(), q, q * q);
    for i in 0..q {
        for j in 0..q {
            let mut poly = vec_zero(&field, i + j + 1);
            poly[i + j] = field.one();
            let red = reduce(poly);
            for (r, x) in red.iter().enumerate() {
                mult.set(r, tensor_index(i, j, q), x.clone());
            }
        }
    }
    let mut unit = vec_zero(&field, q);
    unit[0] = field.one();
    let mut y = vec_zero(&field, q);
    y[1] = field.one();
    let alg = AlgebraData::new(field.clone(), labels, mult, unit)?.with_generators(vec![y]);
    // rho(y^i) = (y (x) 1 + 1 (x) x)^i, binomial, exponents stay below q
    let mut coaction = Matrix::zero(field.clone(), q * q, q);
    for i in 0..q {
        for k in 0..=i {
            coaction.set(
                tensor_index(k, i - k, q),
                i,
                binomial_in_field(&field, i, k),
            );
        }
    }
    ComoduleAlgebraData::verified(Arc::new(alg), Arc::clone(hopf), coaction)
}

/// A Hopf algebra together with a certified Galois object over it.
pub struct GaloisObjectData {
    pub hopf: Arc<HopfAlgebraData>,
    pub comodule: Arc<ComoduleAlgebraData>,
    pub cert: GaloisCertificate,
}

/// Build H_q and the Artin-Schreier object S_a, certified.
pub fn builtin_artin_schreier(p: u64, d: usize, a: &Scalar) -> Result<GaloisObjectData, Error> {
    let hopf = additive_hopf(p, d)?;
    if a.field() != *hopf.field() {
        return Err(Error::MixedFields(
            "parameter a must lie in GF(p^d)".into(),
        ));
    }
    let comodule = artin_schreier_comodule(&hopf, a)?;
    let cert = galois_check(&comodule)?.certified()?;
    Ok(GaloisObjectData {
        hopf,
        comodule,
        cert,
    })
}

/// The regular comodule algebra A = H with coaction Delta.
pub fn regular_comodule(hopf: &Arc<HopfAlgebraData>) -> Result<Arc<ComoduleAlgebraData>, Error> {
    ComoduleAlgebraData::verified(
        Arc::clone(&hopf.algebra),
        Arc::clone(hopf),
        hopf.coalgebra.comult.clone(),
    )
}

/// The trigonometric Hopf algebra `Q[c,s]/(c^2 + s^2 - 1, sc)` with
/// Delta(c) = c (x) c - s (x) s, Delta(s) = s (x) c + c (x) s, eps(c) = 1,
/// eps(s) = 0, S(c) = c, S(s) = -s. Basis {1, c, s, c^2}.
pub fn trig_hopf() -> Result<Arc<HopfAlgebraData>, Error> {
    let field = FieldSpec::rational();
    let labels: Vec<String> = ["1", "c", "s", "c^2"].iter().map(|s| s.to_string()).collect();
    let one = field.one();
    let s = |n: i64| field.from_integer(n);
    // products in the basis {1, c, s, c^2}: c^3 = c, s^2 = 1 - c^2, sc = cs = 0
    let mut mult = Matrix::zero(field.clone(), 4, 16);
    let products: [(usize, usize, [i64; 4]); 16] = [
        (0, 0, [1, 0, 0, 0]),
        (0, 1, [0, 1, 0, 0]),
        (0, 2, [0, 0, 1, 0]),
        (0, 3, [0, 0, 0, 1]),
        (1, 0, [0, 1, 0, 0]),
        (1, 1, [0, 0, 0, 1]),
        (1, 2, [0, 0, 0, 0]),
        (1, 3, [0, 1, 0, 0]),
        (2, 0, [0, 0, 1, 0]),
        (2, 1, [0, 0, 0, 0]),
        (2, 2, [1, 0, 0, -1]),
        (2, 3, [0, 0, 0, 0]),
        (3, 0, [0, 0, 0, 1]),
        (3, 1, [0, 1, 0, 0]),
        (3, 2, [0, 0, 0, 0]),
        (3, 3, [0, 0, 0, 1]),
    ];
    for (i, j, coeffs) in products {
        let col = tensor_index(i, j, 4);
        for (r, &v) in coeffs.iter().enumerate() {
            if v != 0 {
                mult.set(r, col, s(v));
            }
        }
    }
    let unit = vec![one.clone(), s(0), s(0), s(0)];
    let c_gen = vec![s(0), one.clone(), s(0), s(0)];
    let s_gen = vec![s(0), s(0), one.clone(), s(0)];
    let alg = AlgebraData::new(field.clone(), labels.clone(), mult, unit)?
        .with_generators(vec![c_gen, s_gen]);
    // Delta(1) = 1(x)1
    // Delta(c) = c(x)c - s(x)s
    // Delta(s) = s(x)c + c(x)s
    // Delta(c^2) = Delta(c)^2 = 2 c^2 (x) c^2 + 1 (x) 1 - 1 (x) c^2 - c^2 (x) 1
    let mut comult = Matrix::zero(field.clone(), 16, 4);
    comult.set(tensor_index(0, 0, 4), 0, one.clone());
    comult.set(tensor_index(1, 1, 4), 1, one.clone());
    comult.set(tensor_index(2, 2, 4), 1, s(-1));
    comult.set(tensor_index(2, 1, 4), 2, one.clone());
    comult.set(tensor_index(1, 2, 4), 2, one.clone());
    comult.set(tensor_index(3, 3, 4), 3, s(2));
    comult.set(tensor_index(0, 0, 4), 3, one.clone());
    comult.set(tensor_index(0, 3, 4), 3, s(-1));
    comult.set(tensor_index(3, 0, 4), 3, s(-1));
    let mut counit = Matrix::zero(field.clone(), 1, 4);
    counit.set(0, 0, one.clone());
    counit.set(0, 1, one.clone());
    counit.set(0, 3, one.clone());
    let co = CoalgebraData::new(field.clone(), labels, comult, counit)?;
    let mut antipode = Matrix::identity(field.clone(), 4);
    antipode.set(2, 2, s(-1));
    let h = HopfAlgebraData::new(alg, co, antipode)?;
    h.check_hopf_axioms().into_result()?;
    Ok(h)
}

/// `Q[mu]/(mu^4 - 2)`, the quartic extension the trigonometric algebra acts on.
pub fn quartic_radical_algebra() -> Result<AlgebraData, Error> {
    let field = FieldSpec::rational();
    let labels: Vec<String> = ["1", "mu", "mu^2", "mu^3"].iter().map(|s| s.to_string()).collect();
    let mut mult = Matrix::zero(field.clone(), 4, 16);
    for i in 0..4 {
        for j in 0..4 {
            let e = i + j;
            let col = tensor_index(i, j, 4);
            if e < 4 {
                mult.set(e, col, field.one());
            } else {
                mult.set(e - 4, col, field.from_integer(2));
            }
        }
    }
    let mut unit = vec_zero(&field, 4);
    unit[0] = field.one();
    let mut mu = vec_zero(&field, 4);
    mu[1] = field.one();
    Ok(AlgebraData::new(field, labels, mult, unit)?.with_generators(vec![mu]))
}

/// The action of the trigonometric Hopf algebra on Q(2^{1/4}):
/// c fixes 1, kills mu and mu^3, negates mu^2; s kills 1 and mu^2,
/// negates mu, fixes mu^3. The c^2 matrix is the square of the c matrix.
pub fn trig_action_matrices(field: &FieldSpec) -> Vec<Matrix> {
    let s = |n: i64| field.from_integer(n);
    let diag = |entries: [i64; 4]| {
        let mut m = Matrix::zero(field.clone(), 4, 4);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, s(e));
        }
        m
    };
    let act_one = diag([1, 1, 1, 1]);
    let act_c = diag([1, 0, -1, 0]);
    let act_s = diag([0, -1, 0, 1]);
    let act_c2 = act_c.matmul(&act_c);
    vec![act_one, act_c, act_s, act_c2]
}

/// Everything the quartic example needs: the trigonometric Hopf algebra, its
/// dual, the quartic field as a certified Galois object over the dual, and
/// the raw action matrices.
pub struct TrigExample {
    pub hopf: Arc<HopfAlgebraData>,
    pub dual: Arc<HopfAlgebraData>,
    pub comodule: Arc<ComoduleAlgebraData>,
    pub cert: GaloisCertificate,
    pub action: Vec<Matrix>,
}

pub fn builtin_trig() -> Result<TrigExample, Error> {
    let hopf = trig_hopf()?;
    let algebra = Arc::new(quartic_radical_algebra()?);
    let action = trig_action_matrices(hopf.field());
    let (dual, comodule) = dualize_action(&hopf, &action, algebra)?;
    let cert = galois_check(&comodule)?.certified()?;
    Ok(TrigExample {
        hopf,
        dual,
        comodule,
        cert,
        action,
    })
}

/// The split algebra k x k (diagonal idempotents).
pub fn square_algebra(field: FieldSpec) -> Result<AlgebraData, Error> {
    let labels = vec!["e0".to_string(), "e1".to_string()];
    let mut mult = Matrix::zero(field.clone(), 2, 4);
    mult.set(0, tensor_index(0, 0, 2), field.one());
    mult.set(1, tensor_index(1, 1, 2), field.one());
    let unit = vec![field.one(), field.one()];
    let mut e1 = vec_zero(&field, 2);
    e1[1] = field.one();
    Ok(AlgebraData::new(field, labels, mult, unit)?.with_generators(vec![e1]))
}

/// 2x2 matrices over the base field, basis E11, E12, E21, E22.
pub fn matrix2_algebra(field: FieldSpec) -> Result<AlgebraData, Error> {
    let labels: Vec<String> = ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect();
    let idx = |r: usize, c: usize| r * 2 + c;
    let mut mult = Matrix::zero(field.clone(), 4, 16);
    for r in 0..2 {
        for c in 0..2 {
            for r2 in 0..2 {
                for c2 in 0..2 {
                    if c == r2 {
                        mult.set(
                            idx(r, c2),
                            tensor_index(idx(r, c), idx(r2, c2), 4),
                            field.one(),
                        );
                    }
                }
            }
        }
    }
    let mut unit = vec_zero(&field, 4);
    unit[idx(0, 0)] = field.one();
    unit[idx(1, 1)] = field.one();
    AlgebraData::new(field, labels, mult, unit)
}

/// Tensor extension A = B0 (x) S_a with coaction id (x) rho_S, certified;
/// coinvariants come out as B0 (x) 1.
pub fn builtin_tensor_extension(
    b0: &AlgebraData,
    p: u64,
    d: usize,
    a: &Scalar,
) -> Result<GaloisObjectData, Error> {
    let hopf = additive_hopf(p, d)?;
    if b0.field != *hopf.field() {
        return Err(Error::MixedFields(
            "B0 must live over the same field as H".into(),
        ));
    }
    let s = artin_schreier_comodule(&hopf, a)?;
    let alg = b0.tensor(&s.algebra);
    let nb = b0.dim;
    let ns = s.algebra.dim;
    let na = nb * ns;
    let nh = hopf.dim();
    let field = &b0.field;
    let mut coaction = Matrix::zero(field.clone(), na * nh, na);
    for b in 0..nb {
        for j in 0..ns {
            let col = tensor_index(b, j, ns);
            for (c, s0, h) in s.rho_terms(j) {
                let row = tensor_index(tensor_index(b, s0, ns), h, nh);
                coaction.set(row, col, c.clone());
            }
        }
    }
    let comodule = ComoduleAlgebraData::verified(Arc::new(alg), Arc::clone(&hopf), coaction)?;
    let cert = galois_check(&comodule)?.certified()?;
    Ok(GaloisObjectData {
        hopf,
        comodule,
        cert,
    })
}

/// The C2 action z -> -z on `k[z]/(z^2 - 2)`, as a module-algebra action of
/// the group algebra kC2 (used by the dualized classical example).
pub fn quadratic_c2_action(field: &FieldSpec) -> Result<(Arc<HopfAlgebraData>, AlgebraData, Vec<Matrix>), Error> {
    let hopf = group_algebra_c2(field.clone())?;
    let labels = vec!["1".to_string(), "z".to_string()];
    let mut mult = Matrix::zero(field.clone(), 2, 4);
    mult.set(0, tensor_index(0, 0, 2), field.one());
    mult.set(1, tensor_index(0, 1, 2), field.one());
    mult.set(1, tensor_index(1, 0, 2), field.one());
    mult.set(0, tensor_index(1, 1, 2), field.from_integer(2));
    let unit = vec![field.one(), field.zero()];
    let mut z = vec_zero(field, 2);
    z[1] = field.one();
    let alg = AlgebraData::new(field.clone(), labels, mult, unit)?.with_generators(vec![z]);
    let act_one = Matrix::identity(field.clone(), 2);
    let mut act_g = Matrix::identity(field.clone(), 2);
    act_g.set(1, 1, field.from_integer(-1));
    Ok((hopf, alg, vec![act_one, act_g]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_hopf_algebras_pass_axioms() {
        for h in [
            group_algebra_c2(FieldSpec::rational()).unwrap(),
            additive_hopf(2, 1).unwrap(),
            additive_hopf(3, 1).unwrap(),
            additive_hopf(2, 2).unwrap(),
            trig_hopf().unwrap(),
        ] {
            let report = h.check_hopf_axioms();
            assert!(report.all_passed(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn trig_is_commutative_and_cocommutative() {
        let h = trig_hopf().unwrap();
        assert!(h.algebra.is_commutative());
        assert!(h.is_cocommutative());
    }

    #[test]
    fn additive_hopf_is_cocommutative() {
        assert!(additive_hopf(2, 2).unwrap().is_cocommutative());
    }

    #[test]
    fn matrix2_is_associative_noncommutative() {
        let m2 = matrix2_algebra(FieldSpec::finite(3, 1).unwrap()).unwrap();
        assert!(m2.axiom_report().all_passed());
        assert!(!m2.is_commutative());
    }
}
