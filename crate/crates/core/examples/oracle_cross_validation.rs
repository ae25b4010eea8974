//! Compares the exact solver with brute-force enumeration of every
//! singleton/non-singleton pattern on random small graphs.
//!
//!     cargo run --release --example oracle_cross_validation [count] [seed]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use weak_iasi::oracle::{cross_validate, ORACLE_LIMIT};
use weak_iasi::Graph;

fn random_graph(rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(2..=ORACLE_LIMIT);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(0.35) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("spanning tree has no isolated vertices")
}

fn main() -> weak_iasi::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let count = args.next().unwrap_or(100);
    let seed = args.next().unwrap_or(1);
    let mut rng = StdRng::seed_from_u64(seed);

    let mut agree = 0;
    for _ in 0..count {
        let g = random_graph(&mut rng);
        let cv = cross_validate(&g)?;
        if cv.agree {
            agree += 1;
        } else {
            println!("disagreement on {:?}: {}", g.edges(), serde_json::to_string(&cv)?);
        }
    }
    println!("{agree}/{count} random graphs agree (seed {seed})");
    Ok(())
}
