//! Driving the `kpos` dispatcher from code.

use kronpos::cli::dispatch;

fn main() {
    for args in [
        vec!["kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"],
        vec!["exceptions", "--n", "4", "--format", "text"],
        vec!["prove", "--m", "4", "--nu", "4,3,2,1", "--format", "text"],
        vec!["distance", "--lambda", "6", "--mu", "3,2,1", "--format", "text"],
        vec!["experiment", "coverage", "--m", "8", "--samples", "50", "--measure", "plancherel", "--format", "text"],
    ] {
        let out = dispatch(&args);
        println!("$ kpos {}\n{}", args.join(" "), out.stdout);
    }
}
