//! Cotensor products, opposite comodule algebras, and the square envelope
//! certified as a Galois extension of the enveloping base algebra, with the
//! translation table cross-checked against the pairing formula.
//!
//! Run with: cargo run --example square_envelope

use hgx::builtins::{
    additive_hopf, artin_schreier_comodule, builtin_tensor_extension, regular_comodule,
    square_algebra,
};
use hgx::field::FieldSpec;
use hgx::galois::{cotensor, galois_check, opposite, square_envelope};

fn main() {
    let h = additive_hopf(2, 1).unwrap();
    let s1 = artin_schreier_comodule(&h, &h.field().one()).unwrap();

    // cotensoring with the regular object recovers the dimension
    let reg = regular_comodule(&h).unwrap();
    let c = cotensor(&s1, &reg).unwrap();
    println!(
        "S box H has dimension {} (dim S = {})",
        c.comodule.algebra.dim, s1.algebra.dim
    );

    // the opposite object of a Galois extension is Galois
    let op = opposite(&s1).unwrap();
    println!(
        "opposite object certifies: {}",
        galois_check(&op).unwrap().certified().is_ok()
    );

    // the square envelope S box S^op: a Galois object of dimension dim H,
    // whose translation table matches the pairing formula assembled from the
    // table of S (both checks run inside square_envelope)
    let cert = galois_check(&s1).unwrap().certified().unwrap();
    let env = square_envelope(&s1, &cert).unwrap();
    println!(
        "square envelope of S: dimension {} = dim H, base dimension {}",
        env.dim(),
        env.cert.coinv.dim()
    );

    // over a genuine base: B0 (x) S has envelope of dimension dim B0^2 * dim H
    let b0 = square_algebra(FieldSpec::finite(2, 1).unwrap()).unwrap();
    let data = builtin_tensor_extension(&b0, 2, 1, &FieldSpec::finite(2, 1).unwrap().one()).unwrap();
    let env = square_envelope(&data.comodule, &data.cert).unwrap();
    println!(
        "square envelope of the tensor extension: dimension {}, base dimension {}",
        env.dim(),
        env.cert.coinv.dim()
    );
}
