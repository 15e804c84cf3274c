//! Interval recognition: Lex-BFS, chordality, maximal cliques, and a
//! consecutive arrangement of the cliques.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximal cliques in an order where every vertex's cliques are consecutive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrdering {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueOrdering {
    /// For every vertex, the first and last clique containing it; `None` if
    /// some vertex is in no clique or its cliques are not consecutive.
    pub fn vertex_intervals(&self, n: usize) -> Option<Vec<(usize, usize)>> {
        let mut span: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut count = vec![0usize; n];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                if v >= n {
                    return None;
                }
                count[v] += 1;
                span[v] = Some(match span[v] {
                    None => (i, i),
                    Some((a, _)) => (a, i),
                });
            }
        }
        span.into_iter().zip(count).map(|(s, c)| s.filter(|&(a, b)| b - a + 1 == c)).collect()
    }

    /// The cliques are exactly the maximal cliques of `g` and are consecutive
    /// for every vertex.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.vertex_intervals(g.n()).is_none() {
            return false;
        }
        let mut expected = match maximal_cliques(g) {
            Some(c) => c,
            None => return false,
        };
        let mut got: Vec<Vec<usize>> = self
            .cliques
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        expected.sort();
        got.sort();
        expected == got
    }
}

/// Lexicographic breadth-first search; ties go to the smaller vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if !visited[v] && best.is_none_or(|b| label[v] > label[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// Perfect elimination ordering, or `None` if `g` is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let (later, parent, _) = elimination_structure(g, &peo);
    for v in 0..g.n() {
        if let Some(p) = parent[v] {
            let ok = later[v].iter().all(|&x| x == p || later[p].binary_search(&x).is_ok());
            if !ok {
                return None;
            }
        }
    }
    Some(peo)
}

/// For every vertex: its later neighbors (sorted), and the earliest of them.
fn elimination_structure(g: &Graph, peo: &[usize]) -> (Vec<Vec<usize>>, Vec<Option<usize>>, Vec<usize>) {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut later = vec![Vec::new(); n];
    let mut parent = vec![None; n];
    for v in 0..n {
        let mut l: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        parent[v] = l.iter().copied().min_by_key(|&w| pos[w]);
        l.sort_unstable();
        later[v] = l;
    }
    (later, parent, pos)
}

/// All maximal cliques (each sorted, listed by elimination order), or `None`
/// if `g` is not chordal.
pub fn maximal_cliques(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let peo = perfect_elimination_order(g)?;
    let (later, parent, _) = elimination_structure(g, &peo);
    let mut dominated = vec![false; g.n()];
    for u in 0..g.n() {
        if let Some(v) = parent[u] {
            if later[u].len() == later[v].len() + 1 {
                dominated[v] = true;
            }
        }
    }
    Some(
        peo.iter()
            .filter(|&&v| !dominated[v])
            .map(|&v| {
                let mut c = later[v].clone();
                c.push(v);
                c.sort_unstable();
                c
            })
            .collect(),
    )
}

/// A consecutive clique arrangement of a connected graph, or `None` when the
/// graph is not an interval graph.
pub fn recognize_interval(g: &Graph) -> Result<Option<CliqueOrdering>> {
    if !g.is_connected() {
        return Err(Error::Precondition("interval recognition needs a connected graph".into()));
    }
    let Some(cliques) = maximal_cliques(g) else {
        return Ok(None);
    };
    let mut sets = vec![Vec::new(); g.n()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            sets[v].push(i);
        }
    }
    Ok(consecutive_arrangement(cliques.len(), &sets)
        .map(|perm| CliqueOrdering { cliques: perm.into_iter().map(|i| cliques[i].clone()).collect() }))
}

/// Every component is an interval graph.
pub fn is_interval_graph(g: &Graph) -> bool {
    crate::graph::connected_components(g)
        .iter()
        .all(|block| matches!(recognize_interval(&g.induced(block)), Ok(Some(_))))
}

/// An order of `0..ground` in which every set is consecutive, or `None`.
///
/// Sets are grouped into overlap components; each component's order is
/// forced up to reversal and built by refining an ordered partition. The
/// component unions are laminar and are nested into each other's classes.
pub fn consecutive_arrangement(ground: usize, sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut work: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .filter(|s| s.len() >= 2 && s.len() < ground)
        .collect();
    work.sort();
    work.dedup();

    let overlap = |a: &[usize], b: &[usize]| {
        let common = crate::prune::intersect_sorted(a, b).len();
        common > 0 && common < a.len() && common < b.len()
    };
    let s = work.len();
    let mut adj = vec![Vec::new(); s];
    for i in 0..s {
        for j in i + 1..s {
            if overlap(&work[i], &work[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }

    struct Component {
        union: Vec<usize>,
        classes: Vec<Vec<usize>>,
        class_of: Vec<usize>,
        singleton: bool,
    }
    let mut comps: Vec<Component> = Vec::new();
    let mut seen = vec![false; s];
    for start in 0..s {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut bfs = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    bfs.push(y);
                    queue.push_back(y);
                }
            }
        }
        let mut classes = vec![work[start].clone()];
        for &x in &bfs[1..] {
            refine(&mut classes, ground, &work[x])?;
        }
        let mut union: Vec<usize> = classes.concat();
        union.sort_unstable();
        let class_of = class_index(&classes, ground);
        comps.push(Component { union, classes, class_of, singleton: bfs.len() == 1 });
    }

    let root = Component {
        union: (0..ground).collect(),
        classes: vec![(0..ground).collect()],
        class_of: vec![0; ground],
        singleton: true,
    };
    comps.push(root);
    let root_id = comps.len() - 1;
    let mut order: Vec<usize> = (0..root_id).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(comps[c].union.len()), !comps[c].singleton, c));

    // children[c][class] lists the components nested directly in that class.
    let mut children: Vec<Vec<Vec<usize>>> = comps.iter().map(|c| vec![Vec::new(); c.classes.len()]).collect();
    let mut placed = vec![root_id];
    for &a in &order {
        let u = &comps[a].union;
        let host = placed
            .iter()
            .rev()
            .copied()
            .filter(|&b| {
                let k = comps[b].class_of[u[0]];
                k != usize::MAX && u.iter().all(|&x| comps[b].class_of[x] == k)
            })
            .min_by_key(|&b| comps[b].union.len())?;
        let k = comps[host].class_of[u[0]];
        children[host][k].push(a);
        placed.push(a);
    }

    fn expand(c: usize, comps: &[Component], children: &[Vec<Vec<usize>>], out: &mut Vec<usize>, covered: &mut [bool]) {
        for (k, class) in comps[c].classes.iter().enumerate() {
            for &child in &children[c][k] {
                expand(child, comps, children, out, covered);
            }
            for &x in class {
                if !covered[x] {
                    covered[x] = true;
                    out.push(x);
                }
            }
        }
    }
    let mut out = Vec::with_capacity(ground);
    let mut covered = vec![false; ground];
    expand(root_id, &comps, &children, &mut out, &mut covered);

    is_consecutive_order(&out, sets).then_some(out)
}

fn class_index(classes: &[Vec<usize>], ground: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; ground];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            idx[x] = k;
        }
    }
    idx
}

/// Refines the ordered partition so that `set` becomes a run of classes,
/// appending its new elements at one end.
fn refine(classes: &mut Vec<Vec<usize>>, ground: usize, set: &[usize]) -> Option<()> {
    let idx = class_index(classes, ground);
    let mut hits = vec![0usize; classes.len()];
    let mut fresh = Vec::new();
    for &x in set {
        match idx[x] {
            usize::MAX => fresh.push(x),
            k => hits[k] += 1,
        }
    }
    let i = hits.iter().position(|&h| h > 0)?;
    let j = hits.iter().rposition(|&h| h > 0)?;
    let full = |k: usize| hits[k] == classes[k].len();
    if (i + 1..j).any(|k| !full(k)) {
        return None;
    }
    let last = classes.len() - 1;
    let in_set = |x: &usize| set.binary_search(x).is_ok();
    let split = |c: &Vec<usize>| -> (Vec<usize>, Vec<usize>) { c.iter().partition(|x| in_set(x)) };

    if fresh.is_empty() {
        if i == j {
            return None;
        }
        let (jin, jout) = split(&classes[j]);
        let (iin, iout) = split(&classes[i]);
        let mut next: Vec<Vec<usize>> = classes[..i].to_vec();
        next.extend([iout, iin].into_iter().filter(|c| !c.is_empty()));
        next.extend(classes[i + 1..j].iter().cloned());
        next.extend([jin, jout].into_iter().filter(|c| !c.is_empty()));
        next.extend(classes[j + 1..].iter().cloned());
        *classes = next;
        return Some(());
    }

    let left_ok = i == 0 && (0..j).all(full);
    let right_ok = j == last && (i + 1..=last).all(full);
    if left_ok {
        let (jin, jout) = split(&classes[j]);
        let mut next = vec![fresh];
        next.extend(classes[..j].iter().cloned());
        next.extend([jin, jout].into_iter().filter(|c| !c.is_empty()));
        next.extend(classes[j + 1..].iter().cloned());
        *classes = next;
        Some(())
    } else if right_ok {
        let (iin, iout) = split(&classes[i]);
        let mut next: Vec<Vec<usize>> = classes[..i].to_vec();
        next.extend([iout, iin].into_iter().filter(|c| !c.is_empty()));
        next.extend(classes[i + 1..].iter().cloned());
        next.push(fresh);
        *classes = next;
        Some(())
    } else {
        None
    }
}

/// Every set occupies consecutive positions of `order`.
pub fn is_consecutive_order(order: &[usize], sets: &[Vec<usize>]) -> bool {
    let mut pos = vec![usize::MAX; order.len()];
    for (i, &x) in order.iter().enumerate() {
        if x >= pos.len() || pos[x] != usize::MAX {
            return false;
        }
        pos[x] = i;
    }
    sets.iter().all(|s| {
        if s.is_empty() {
            return true;
        }
        let mut p: Vec<usize> = s.iter().map(|&x| pos[x]).collect();
        p.sort_unstable();
        p.dedup();
        p.last().unwrap() - p[0] + 1 == p.len()
    })
}
