//! Graphs and digraphs on dense vertex ids `0..n`.
//!
//! Provides connected components, strongly connected components and their
//! condensation, reachability, maximal independent sets (Bron–Kerbosch on the
//! complement, optionally restricted to sets closed under a reachability
//! relation) and deterministic DOT output.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph without loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_edge(self.adj.len(), u, v)?;
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Directed graph without loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(vertex_count: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(vertex_count);
        for &(u, v) in edges {
            d.add_edge(u, v)?;
        }
        Ok(d)
    }

    /// Adds `u → v`; repeated arcs are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_edge(self.out.len(), u, v)?;
        if let Err(pos) = self.out[u].binary_search(&v) {
            self.out[u].insert(pos, v);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Vertices reachable from any of `start` by a possibly empty path.
    pub fn reachable_from(&self, start: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = Vec::new();
        for &s in start {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

fn check_edge(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::input(format!(
            "edge ({u}, {v}) references a vertex outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::input(format!("loop at vertex {u}")));
    }
    Ok(())
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Strongly connected components of an implicit digraph on `0..n`.
///
/// `succ(v, k)` returns the `k`-th successor of `v`, or `None` once the
/// successors are exhausted. Returns the component id of every vertex, where
/// components are numbered in order of their smallest vertex.
pub fn scc_ids<F>(n: usize, succ: F) -> (Vec<usize>, usize)
where
    F: Fn(usize, usize) -> Option<usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut raw = vec![UNSEEN; n];
    let mut raw_count = 0;
    let mut counter = 0;
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = frames.last_mut() {
            match succ(v, *k) {
                Some(w) => {
                    *k += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                }
                None => {
                    frames.pop();
                    if let Some(&(parent, _)) = frames.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("Tarjan stack underflow");
                            on_stack[w] = false;
                            raw[w] = raw_count;
                            if w == v {
                                break;
                            }
                        }
                        raw_count += 1;
                    }
                }
            }
        }
    }

    // Renumber by smallest member.
    let mut renumber = vec![UNSEEN; raw_count];
    let mut next = 0;
    let mut ids = vec![0; n];
    for v in 0..n {
        let r = raw[v];
        if renumber[r] == UNSEEN {
            renumber[r] = next;
            next += 1;
        }
        ids[v] = renumber[r];
    }
    (ids, next)
}

/// Groups vertices by component id.
pub fn partition_from_ids(ids: &[usize], count: usize) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); count];
    for (v, &c) in ids.iter().enumerate() {
        parts[c].push(v);
    }
    parts
}

/// Quotient of a digraph by its strongly connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedDigraph {
    pub base: Digraph,
    /// Members of each component, sorted; ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
    /// Arcs between distinct components; always acyclic.
    pub dag: Digraph,
    pub colour: Vec<u8>,
}

/// Condenses `d`; every component starts with colour 0.
pub fn strongly_connected_condensation(d: &Digraph) -> CondensedDigraph {
    let n = d.vertex_count();
    let (ids, count) = scc_ids(n, |v, k| d.successors(v).get(k).copied());
    let components = partition_from_ids(&ids, count);
    let mut dag = Digraph::new(count);
    for (u, v) in d.edges() {
        if ids[u] != ids[v] {
            dag.add_edge(ids[u], ids[v]).expect("component ids are valid");
        }
    }
    CondensedDigraph {
        base: d.clone(),
        components,
        component_of: ids,
        dag,
        colour: vec![0; count],
    }
}

impl CondensedDigraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Components without incoming arcs.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.component_count()];
        for (_, v) in self.dag.edges() {
            has_in[v] = true;
        }
        (0..self.component_count()).filter(|&c| !has_in[c]).collect()
    }

    /// Components reachable from `from`, including `from`, sorted.
    pub fn reachable_set(&self, from: usize) -> Vec<usize> {
        let seen = self.dag.reachable_from(&[from]);
        (0..seen.len()).filter(|&c| seen[c]).collect()
    }
}

/// Bit set over vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn empty(n: usize) -> Self {
        VertexSet(vec![0; n.div_ceil(64).max(1)])
    }

    fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn or(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * 64 + b)
            })
        })
    }
}

struct IndependentSetSearch<'a> {
    /// Non-neighbours of each vertex in the input graph, excluding itself.
    free: Vec<VertexSet>,
    /// Closure requirements: every vertex reachable from `v`, including `v`.
    reach: Option<&'a [VertexSet]>,
    out: Vec<Vec<usize>>,
}

impl IndependentSetSearch<'_> {
    fn violates_closure(&self, r: &VertexSet, p: &VertexSet) -> bool {
        let Some(reach) = self.reach else {
            return false;
        };
        let allowed = r.or(p);
        r.iter().any(|v| !reach[v].is_subset(&allowed))
    }

    fn expand(&mut self, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet) {
        if self.violates_closure(r, &p) {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                self.out.push(r.iter().collect());
            }
            return;
        }
        let pivot = p
            .or(&x)
            .iter()
            .max_by_key(|&u| (p.and(&self.free[u]).count(), std::cmp::Reverse(u)))
            .expect("P is non-empty");
        let candidates: Vec<usize> = p.and_not(&self.free[pivot]).iter().collect();
        for v in candidates {
            r.insert(v);
            let np = p.and(&self.free[v]);
            let nx = x.and(&self.free[v]);
            self.expand(r, np, nx);
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Vertex order of a degeneracy decomposition of the complement of `g`.
fn degeneracy_order(free: &[VertexSet]) -> Vec<usize> {
    let n = free.len();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (free[v].and(&alive).count(), v))
            .expect("vertices remain");
        order.push(v);
        alive.remove(v);
    }
    order
}

fn independent_sets(g: &Graph, reach: Option<&[VertexSet]>, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::capacity("independent-set graph vertices", n, bound));
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let free: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = VertexSet::full(n);
            s.remove(v);
            for &u in g.neighbours(v) {
                s.remove(u);
            }
            s
        })
        .collect();
    let order = degeneracy_order(&free);
    let mut search = IndependentSetSearch {
        free,
        reach,
        out: Vec::new(),
    };
    let mut later = VertexSet::full(n);
    let mut earlier = VertexSet::empty(n);
    for v in order {
        later.remove(v);
        let p = later.and(&search.free[v]);
        let x = earlier.and(&search.free[v]);
        let mut r = VertexSet::empty(n);
        r.insert(v);
        search.expand(&mut r, p, x);
        earlier.insert(v);
    }
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// All maximal independent sets of `g`, each sorted, in lexicographic order.
///
/// The empty graph has the single maximal independent set `∅`.
pub fn maximal_independent_sets(g: &Graph, bound: usize) -> Result<Vec<Vec<usize>>> {
    independent_sets(g, None, bound)
}

/// The maximal independent sets `K` of `g` that are closed under `closure`:
/// whenever `u ∈ K` and `v` is reachable from `u` in `closure`, `v ∈ K`.
///
/// Branches of the search whose chosen vertices already reach outside the
/// remaining candidates are cut off.
pub fn maximal_independent_sets_closed(
    g: &Graph,
    closure: &Digraph,
    bound: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if closure.vertex_count() != n {
        return Err(Error::input(format!(
            "closure digraph has {} vertices, graph has {n}",
            closure.vertex_count()
        )));
    }
    let reach: Vec<VertexSet> = (0..n)
        .map(|v| {
            let seen = closure.reachable_from(&[v]);
            let mut s = VertexSet::empty(n);
            for (u, &b) in seen.iter().enumerate() {
                if b {
                    s.insert(u);
                }
            }
            s
        })
        .collect();
    independent_sets(g, Some(&reach), bound)
}

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

const HIGHLIGHT: &str = ", style=filled, fillcolor=lightgrey";

fn dot_body(
    keyword: &str,
    arrow: &str,
    name: &str,
    labels: &[String],
    highlighted: &[bool],
    edges: &[(usize, usize)],
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{keyword} {} {{", quote(name));
    for (v, label) in labels.iter().enumerate() {
        let style = if highlighted.get(v).copied().unwrap_or(false) {
            HIGHLIGHT
        } else {
            ""
        };
        let _ = writeln!(out, "  v{v} [label={}{style}];", quote(label));
    }
    for &(u, v) in edges {
        let _ = writeln!(out, "  v{u} {arrow} v{v};");
    }
    out.push_str("}\n");
    out
}

fn fill_labels(n: usize, labels: &[String]) -> Vec<String> {
    (0..n)
        .map(|v| labels.get(v).cloned().unwrap_or_else(|| v.to_string()))
        .collect()
}

/// DOT rendering of an undirected graph; vertices without a label use their
/// id and `highlighted` vertices are filled.
pub fn graph_to_dot(name: &str, g: &Graph, labels: &[String], highlighted: &[bool]) -> String {
    let labels = fill_labels(g.vertex_count(), labels);
    dot_body("graph", "--", name, &labels, highlighted, &g.edges())
}

/// DOT rendering of a digraph.
pub fn digraph_to_dot(name: &str, d: &Digraph, labels: &[String], highlighted: &[bool]) -> String {
    let labels = fill_labels(d.vertex_count(), labels);
    dot_body("digraph", "->", name, &labels, highlighted, &d.edges())
}

/// DOT rendering of a condensation; components with colour 1 are filled.
pub fn condensed_to_dot(name: &str, c: &CondensedDigraph, labels: &[String]) -> String {
    let labels = fill_labels(c.component_count(), labels);
    let highlighted: Vec<bool> = c.colour.iter().map(|&x| x == 1).collect();
    dot_body("digraph", "->", name, &labels, &highlighted, &c.dag.edges())
}
