#![allow(dead_code)]

pub mod hull;

use polycut::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random connected graph on vertices 1..=n: Bernoulli(p) edges, then a
/// patch joining leftover components.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let mut g = Graph::with_vertices(1..=n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    loop {
        let comps = g.components();
        if comps.len() == 1 {
            return g;
        }
        let a = *comps[0].iter().next().unwrap();
        let b = *comps[1].iter().next().unwrap();
        g.add_edge(a, b);
    }
}
