//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hardness::Cnf1in3;
use crate::instance::ListInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Tree,
    Cycle,
    Interval,
    Deg2,
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(Shape::Tree),
            "cycle" => Ok(Shape::Cycle),
            "interval" => Ok(Shape::Interval),
            "deg2" => Ok(Shape::Deg2),
            _ => Err(Error::Precondition(format!("unknown shape '{s}'"))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Tree => "tree",
            Shape::Cycle => "cycle",
            Shape::Interval => "interval",
            Shape::Deg2 => "deg2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantedParams {
    pub shape: Shape,
    pub n: usize,
    pub seed: u64,
    pub list_width: usize,
    /// Fraction of lists that lose their planted image.
    pub noise: f64,
}

/// Random recursive tree: vertex `v > 0` hangs below a uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges_trusted(n, edges)
}

/// Connected interval graph: each new interval starts inside the union of
/// the earlier ones.
pub fn random_interval_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let max_len = (n / 2).max(1);
    let mut iv: Vec<(usize, usize)> = Vec::with_capacity(n);
    let mut reach = 0;
    for _ in 0..n {
        let a = rng.gen_range(0..=reach);
        let b = a + rng.gen_range(0..=max_len);
        reach = reach.max(b);
        iv.push((a, b));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_trusted(n, edges)
}

/// Disjoint paths and cycles with `n` vertices in total.
pub fn random_deg2_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=n - start);
        for i in 1..size {
            edges.push((start + i - 1, start + i));
        }
        if size >= 3 && rng.gen_bool(0.5) {
            edges.push((start, start + size - 1));
        }
        start += size;
    }
    Graph::from_edges_trusted(n, edges)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_trusted(n, edges)
}

/// Relabels `g` by a random permutation `σ` and gives each `u` the list
/// `σ(u)` plus `width - 1` distinct decoys; then `σ(u)` is removed from
/// `round(noise · n)` randomly chosen lists.
pub fn plant<R: Rng>(rng: &mut R, g: &Graph, width: usize, noise: f64) -> ListInstance {
    let n = g.n();
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let h = g.relabel(&sigma);
    let width = width.clamp(1, n.max(1));
    let mut lists: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut l = vec![sigma[u]];
            if width > 1 {
                // Decoys from V(H) ∖ {σ(u)}: sample indices of the others.
                for i in index::sample(rng, n - 1, width - 1) {
                    l.push(if i >= sigma[u] { i + 1 } else { i });
                }
            }
            l
        })
        .collect();
    let drop = ((noise * n as f64).round() as usize).min(n);
    for u in index::sample(rng, n, drop) {
        lists[u].retain(|&w| w != sigma[u]);
    }
    ListInstance::new(g.clone(), h, lists).expect("planted lists are in range")
}

/// Planted instance of the requested shape; deterministic per seed.
pub fn gen_planted(p: &PlantedParams) -> Result<ListInstance> {
    if p.n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if p.list_width == 0 || p.list_width > p.n {
        return Err(Error::Precondition(format!("list width must lie in 1..={}", p.n)));
    }
    if !(0.0..=1.0).contains(&p.noise) {
        return Err(Error::Precondition("noise must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let g = match p.shape {
        Shape::Tree => random_tree(&mut rng, p.n),
        Shape::Cycle if p.n < 3 => return Err(Error::Precondition("a cycle needs n >= 3".into())),
        Shape::Cycle => Graph::cycle(p.n),
        Shape::Interval => random_interval_graph(&mut rng, p.n),
        Shape::Deg2 => random_deg2_graph(&mut rng, p.n),
    };
    Ok(plant(&mut rng, &g, p.list_width, p.noise))
}

/// Random formula of `clauses` triples of distinct variables.
pub fn gen_sat_formula(vars: usize, clauses: usize, seed: u64) -> Result<Cnf1in3> {
    if vars < 3 {
        return Err(Error::Precondition("a formula needs at least three variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cl = (0..clauses)
        .map(|_| {
            let s = index::sample(&mut rng, vars, 3);
            [s.index(0), s.index(1), s.index(2)]
        })
        .collect();
    Cnf1in3::new(vars, cl)
}
