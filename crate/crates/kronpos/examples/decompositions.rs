//! Staircase identities: grids, layer decompositions and the caret.

use kronpos::decomp::{caret_decompose, height_criterion, layer_decomposition, stairgrid};
use kronpos::partition::{caret, staircase};
use kronpos::Partition;

fn main() {
    let g = stairgrid(10, 3);
    println!("3×3 grid of the staircase of length 10: cells {:?}, replays: {}", g.flakes, g.replay() == staircase(10));

    for (m, k, i) in [(20, 4, 1), (20, 4, 2), (37, 5, 2), (100, 8, 3)] {
        match layer_decomposition(m, k, i, true) {
            Ok(d) => println!(
                "smooth ({k},{i}) layers of length {m}: core {} and {} flakes, spread {}, replays: {}",
                d.core.len(),
                d.flakes.len(),
                d.flake_spread(),
                d.replay() == staircase(m)
            ),
            Err(e) => println!("({m},{k},{i}): {e}"),
        }
    }

    let d = layer_decomposition(20, 4, 1, true).unwrap();
    println!("recipe {}", serde_json::to_string(&d.recipe).unwrap());

    let c = caret_decompose(6);
    println!("caret 6: {} staircases, replays: {}", c.recipe.leaves().len(), c.replay() == caret(6));

    for nu in [Partition::new(vec![5, 4, 1]), Partition::new(vec![4, 3, 3]), Partition::new(vec![10])] {
        println!("height criterion for ({nu}) against length 4: {}", height_criterion(4, &nu).unwrap());
    }
}
