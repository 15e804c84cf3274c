//! 2-SAT by strongly connected components of the implication graph.

/// A literal: variable index and polarity (`true` means the positive literal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    /// Literal asserting `var == value`.
    pub fn is(var: usize, value: bool) -> Self {
        Lit { var, positive: value }
    }

    pub fn negate(self) -> Self {
        Lit { var: self.var, positive: !self.positive }
    }

    #[inline]
    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// Conjunction of two-literal clauses. Unit clauses are written `(l, l)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    var_count: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(var_count: usize) -> Self {
        TwoSatFormula { var_count, clauses: Vec::new() }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    /// Adds a fresh variable and returns its index.
    pub fn add_var(&mut self) -> usize {
        self.var_count += 1;
        self.var_count - 1
    }

    /// Adds `a ∨ b`.
    ///
    /// # Panics
    /// If either variable index is out of range.
    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(
            a.var < self.var_count && b.var < self.var_count,
            "literal refers to a variable outside 0..{}",
            self.var_count
        );
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    /// `¬(a ∧ b)`.
    pub fn forbid_both(&mut self, a: Lit, b: Lit) {
        self.add_clause(a.negate(), b.negate());
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.var_count
            && self.clauses.iter().all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }
}

/// Implication graph: node `2v` is `v`, node `2v+1` is `¬v`; clause `a ∨ b`
/// contributes arcs `¬a → b` and `¬b → a`.
pub fn implication_graph(f: &TwoSatFormula) -> Vec<Vec<usize>> {
    let mut arcs = vec![Vec::new(); 2 * f.var_count];
    for &(a, b) in &f.clauses {
        arcs[a.negate().node()].push(b.node());
        arcs[b.negate().node()].push(a.node());
    }
    arcs
}

/// Satisfying assignment, or `None` when the formula is unsatisfiable.
pub fn solve_2sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let arcs = implication_graph(f);
    let comp = tarjan_scc(&arcs);
    // Tarjan numbers components in reverse topological order, so the literal
    // whose component has the smaller index is implied-later and is set true.
    (0..f.var_count)
        .map(|v| {
            let (p, n) = (comp[2 * v], comp[2 * v + 1]);
            (p != n).then_some(p < n)
        })
        .collect()
}

/// Iterative Tarjan; returns the component index of every node, numbered in
/// the order components are completed (sinks first).
fn tarjan_scc(arcs: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = arcs.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSEEN; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for s in 0..n {
        if index[s] != UNSEEN {
            continue;
        }
        call.push((s, 0));
        index[s] = next_index;
        low[s] = next_index;
        next_index += 1;
        stack.push(s);
        on_stack[s] = true;

        while let Some(top) = call.last_mut() {
            let u = top.0;
            if top.1 < arcs[u].len() {
                let v = arcs[u][top.1];
                top.1 += 1;
                if index[v] == UNSEEN {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let v = stack.pop().expect("tarjan stack underflow");
                    on_stack[v] = false;
                    comp[v] = next_comp;
                    if v == u {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
