//! Structure-constant Hopf algebras: axiom reports, cocommutativity,
//! grouplikes, characters and duals.
//!
//! Run with: cargo run --example hopf_axioms

use hgx::builtins::{additive_hopf, group_algebra_c2, trig_hopf};
use hgx::field::FieldSpec;
use hgx::hopf::{characters, format_in_basis};

fn main() {
    let cap = 1 << 20;

    // The group algebra QC2: basis {1, g}, Delta(g) = g (x) g, S(g) = g.
    let c2 = group_algebra_c2(FieldSpec::rational()).unwrap();
    println!("-- group algebra of C2 over Q --");
    for check in c2.check_hopf_axioms().checks {
        println!("  {}: {}", check.name, if check.passed { "ok" } else { "FAIL" });
    }
    println!("  cocommutative: {}", c2.is_cocommutative());

    // H_q = k[x]/(x^q - x) with x primitive, here q = 4.
    let h4 = additive_hopf(2, 2).unwrap();
    println!("\n-- additive Hopf algebra over GF(4) --");
    println!("  dimension {}", h4.dim());
    println!("  axioms pass: {}", h4.check_hopf_axioms().all_passed());
    println!(
        "  characters: {} (images of x are the roots of t^4 - t)",
        characters(&h4.algebra, cap).unwrap().len()
    );

    // The trigonometric algebra Q[c,s]/(c^2 + s^2 - 1, sc): a form of the
    // cyclic group algebra of order 4 that is both commutative and
    // cocommutative, with exactly two grouplikes over Q.
    let trig = trig_hopf().unwrap();
    println!("\n-- trigonometric algebra --");
    println!("  commutative: {}", trig.algebra.is_commutative());
    println!("  cocommutative: {}", trig.is_cocommutative());
    for g in trig.grouplikes(cap).unwrap() {
        println!("  grouplike: {}", format_in_basis(&g, trig.labels()));
    }

    // Duality swaps commutativity and cocommutativity; the double dual
    // returns the original tables.
    let dual = trig.dual().unwrap();
    println!("\n-- dual of the trigonometric algebra --");
    println!("  commutative: {}", dual.algebra.is_commutative());
    println!("  cocommutative: {}", dual.is_cocommutative());
    let double = dual.dual().unwrap();
    println!(
        "  double dual returns the original tables: {}",
        double.algebra.mult == trig.algebra.mult
            && double.coalgebra.comult == trig.coalgebra.comult
    );

    // Grouplikes of H are the characters of the dual algebra.
    println!(
        "\n  |G(Htrig)| = {}, |Alg(Htrig*, Q)| = {}",
        trig.grouplikes(cap).unwrap().len(),
        characters(&dual.algebra, cap).unwrap().len()
    );
}
