//! Proving that every partition of `m(m+1)/2` occurs in the tensor square of the staircase.
//!
//! Run with `--release`; `cargo run --release --example saxl -- 8` does length 8.

use kronpos::prover::{verify_saxl, SaxlOptions};

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for m in 1..=top {
        let r = verify_saxl(m, &SaxlOptions::default());
        let cube: Vec<String> = r.targets.iter().filter(|t| t.symmetric_cube_leaves > 0).map(|t| format!("({})", t.nu)).collect();
        println!("m={m}: {}/{} proved, leaves {:?}", r.proved, r.total, r.leaf_kinds);
        if !cube.is_empty() {
            println!("  symmetric-cube targets: {}", cube.join(" "));
        }
    }
}
