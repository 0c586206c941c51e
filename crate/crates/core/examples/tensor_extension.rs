//! Extensions with a genuine coefficient algebra: B0 (x) S over GF(q) for a
//! split pair and for 2x2 matrices. The central action is trivial, the
//! degree-1 cohomology counts q-th roots in the center, and the twisted
//! envelope modules stay pairwise non-isomorphic.
//!
//! Run with: cargo run --example tensor_extension

use std::sync::Arc;

use hgx::builtins::{builtin_tensor_extension, matrix2_algebra, square_algebra};
use hgx::cleft::OmegaAction;
use hgx::cohomology::{first_cohomology, one_cocycles};
use hgx::field::FieldSpec;
use hgx::galois::square_envelope;
use hgx::picard::{envelope_modules_isomorphic, g1_twist, xi, BaseBimodule, hstable_check};
use hgx::linalg::Matrix;

fn main() {
    let cap = 1 << 20;
    let cases: Vec<(&str, hgx::hopf::AlgebraData, u64)> = vec![
        (
            "split pair over GF(2)",
            square_algebra(FieldSpec::finite(2, 1).unwrap()).unwrap(),
            2,
        ),
        (
            "2x2 matrices over GF(3)",
            matrix2_algebra(FieldSpec::finite(3, 1).unwrap()).unwrap(),
            3,
        ),
    ];
    for (name, b0, p) in cases {
        let field = FieldSpec::finite(p, 1).unwrap();
        let data = builtin_tensor_extension(&b0, p, 1, &field.one()).unwrap();
        println!("-- {name} --");
        println!(
            "  extension dimension {}, coinvariants dimension {}",
            data.comodule.algebra.dim,
            data.cert.coinv.dim()
        );
        let mu = data.cert.mu_action().unwrap();
        println!(
            "  center dimension {}, central action trivial: {}",
            mu.center.algebra.dim,
            mu.is_trivial(&data.hopf)
        );
        let z = Arc::new(mu.center.algebra.clone());
        let omega = OmegaAction {
            matrices: mu.matrices.clone(),
        };
        let h1 = first_cohomology(&data.hopf, &z, &omega, cap, true).unwrap();
        println!("  degree-1 cohomology order {}", h1.order);

        let env = square_envelope(&data.comodule, &data.cert).unwrap();
        let z1 = one_cocycles(&data.hopf, &z, &omega, cap).unwrap();
        let twists: Vec<_> = z1
            .cochains
            .iter()
            .map(|a| g1_twist(&env, &data.cert, a).unwrap())
            .collect();
        let mut distinct = true;
        for i in 0..twists.len() {
            for j in 0..i {
                if envelope_modules_isomorphic(&env, &twists[i], &twists[j], cap)
                    .unwrap()
                    .is_iso()
                {
                    distinct = false;
                }
            }
        }
        println!(
            "  {} twisted envelope modules, pairwise distinct: {distinct}",
            twists.len()
        );

        // H-stability and the central character of the regular bimodule
        let reg = BaseBimodule::regular(&data.cert.coinv.algebra);
        println!(
            "  regular bimodule stable: {}",
            hstable_check(&reg, &data.cert, &env, cap).unwrap().is_iso()
        );
        let x = xi(&reg, &data.cert, &mu).unwrap();
        println!(
            "  central character of the regular bimodule is the identity: {}\n",
            x == Matrix::identity(field.clone(), mu.center.algebra.dim)
        );
    }
}
