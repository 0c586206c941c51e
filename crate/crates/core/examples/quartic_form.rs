//! The quartic radical field as a Galois object: a module algebra over the
//! trigonometric algebra is dualized into a comodule algebra over the dual,
//! certified, and its Picard group computed with the explicit sign action.
//!
//! Run with: cargo run --example quartic_form

use hgx::builtins::builtin_trig;
use hgx::field::FieldSpec;
use hgx::hopf::format_in_basis;
use hgx::picard::{pic_galois_object, twist_action_line};

fn main() {
    let cap = 1 << 20;
    let trig = builtin_trig().unwrap();
    let f = FieldSpec::rational();

    println!("-- the trigonometric algebra --");
    println!(
        "  commutative and cocommutative: {} / {}",
        trig.hopf.algebra.is_commutative(),
        trig.hopf.is_cocommutative()
    );
    for g in trig.hopf.grouplikes(cap).unwrap() {
        println!("  grouplike: {}", format_in_basis(&g, trig.hopf.labels()));
    }

    println!("\n-- the action on Q adjoined a fourth root of 2 --");
    let labels = &trig.comodule.algebra.labels;
    for (hi, m) in trig.action.iter().enumerate() {
        let images: Vec<String> = (0..4)
            .map(|ai| {
                format!(
                    "{} -> {}",
                    labels[ai],
                    format_in_basis(&m.col(ai), labels)
                )
            })
            .collect();
        println!("  {} acts: {}", trig.hopf.labels()[hi], images.join(", "));
    }

    // dualizing turned the action into a coaction over the dual, and the
    // result certifies as a Galois object over the rationals
    println!("\n-- the dualized comodule algebra --");
    println!("  coinvariants dimension {}", trig.cert.coinv.dim());
    println!(
        "  translation identities pass: {}",
        trig.cert.translation_identities_report().all_passed()
    );

    let pic = pic_galois_object(&trig.comodule, &trig.cert, cap).unwrap();
    println!("\n-- the Picard group --");
    println!("  order {}", pic.order());
    let eps: Vec<_> = (0..4)
        .map(|h| trig.dual.coalgebra.counit.get(0, h).clone())
        .collect();
    for chi in &pic.characters {
        let kind = if *chi == eps { "identity" } else { "nontrivial" };
        println!(
            "  {kind} element twists the generator: {}",
            twist_action_line(&trig.comodule, chi, 1)
        );
    }
    let _ = f;
}
