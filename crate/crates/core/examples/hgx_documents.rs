//! The HGX document format: emitting built-ins, parsing them back, and what
//! diagnostics look like on malformed input.
//!
//! Run with: cargo run --example hgx_documents

use std::sync::Arc;

use hgx::builtins::{additive_hopf, artin_schreier_comodule};
use hgx::hgx::{emit_document, parse_hgx, HgxDocument, HgxObject};

fn main() {
    let h = additive_hopf(2, 1).unwrap();
    let s = artin_schreier_comodule(&h, &h.field().one()).unwrap();
    let doc = HgxDocument {
        field: h.field().clone(),
        objects: vec![
            ("H".into(), HgxObject::Hopf(Arc::clone(&h))),
            (
                "S".into(),
                HgxObject::ComoduleAlgebra {
                    hopf_name: "H".into(),
                    data: s,
                },
            ),
        ],
    };
    let text = emit_document(&doc);
    println!("-- emitted document --\n{text}");

    let parsed = parse_hgx(&text).expect("emitted documents parse back");
    println!(
        "-- round trip -- parsed {} objects over {}",
        parsed.objects.len(),
        parsed.field
    );

    let broken = "\
field rational

[hopf K]
basis 1
unit: = 1
m: 1 * 1 = 2 * zz
delta: 1 = 1 (x) 1
counit: 1 = 1
";
    println!("\n-- diagnostics on malformed input --");
    match parse_hgx(broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(diags) => {
            for d in diags {
                println!("  {d}");
            }
        }
    }
}
