//! Blockwise distance: closed form, breadth-first search and the generalized version.

use kronpos::partition::{
    blockwise_distance, blockwise_distance_bfs, blockwise_trace, generalized_blockwise_distance, partitions, replay_moves,
    staircase,
};
use kronpos::Partition;

fn main() {
    let a = Partition::new(vec![5, 1]);
    let b = staircase(3);
    let trace = blockwise_trace(&a, &b).unwrap();
    println!("d(({a}), ({b})) = {} (search {}), trace {:?}", blockwise_distance(&a, &b).unwrap(), blockwise_distance_bfs(&a, &b).unwrap(), trace);
    println!("replays: {}", replay_moves(&a, &trace).unwrap() == b);

    let n = 8;
    let all: Vec<Partition> = partitions(n).collect();
    let diameter = all.iter().flat_map(|x| all.iter().map(move |y| blockwise_distance(x, y).unwrap())).max().unwrap();
    println!("diameter of the partitions of {n}: {diameter}");

    let g = generalized_blockwise_distance(&Partition::new(vec![3, 3]), &Partition::new(vec![4, 1]));
    println!("generalized distance (3,3) to (4,1): {} exact {} trace {:?}", g.value, g.exact, g.trace);
}
