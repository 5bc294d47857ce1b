//! Maximal subsemigroups of an arbitrary finite semigroup.
//!
//! Every maximal subsemigroup `M` of `S` misses elements of exactly one
//! `J`-class. The search visits each `J`-class containing a generator and
//! dispatches on whether it is maximal in the `J`-order and whether it is
//! regular. Regular non-maximal classes are analysed through four graphs on
//! the `L`- and `R`-classes of `J`; see [`JClassGraphs`].

use std::collections::HashSet;
use std::fmt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::graphs::{
    maximal_independent_sets_closed, strongly_connected_condensation, CondensedDigraph, Digraph, Graph,
};
use crate::rees_matrix::{max_r3_r4, max_r5, max_r6, RzmsMaxSubsemigroup, RzmsType, RzmsWitness};
use crate::semigroup::{greedy_generating_set, FiniteSemigroup, GreensStructure, PrincipalFactorIso};

/// How a maximal subsemigroup arises from its `J`-class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxType {
    /// `S ∖ J` for a non-regular `J`.
    S1,
    /// Meets every `H`-class of a regular `J`.
    S2,
    /// Keeps a union of `L`-classes and `R`-classes of `J`, both non-empty.
    S3,
    /// Keeps a union of `L`-classes of `J`.
    S4,
    /// Keeps a union of `R`-classes of `J`.
    S5,
    /// `S ∖ J` for a regular `J`.
    S6,
    /// `S ∖ J` for a maximal one-element `J`.
    MaxTrivial,
    MaxR3,
    MaxR4,
    MaxR5,
    MaxR6,
}

impl MaxType {
    pub const ALL: [MaxType; 11] = [
        MaxType::S1,
        MaxType::S2,
        MaxType::S3,
        MaxType::S4,
        MaxType::S5,
        MaxType::S6,
        MaxType::MaxTrivial,
        MaxType::MaxR3,
        MaxType::MaxR4,
        MaxType::MaxR5,
        MaxType::MaxR6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MaxType::S1 => "S1",
            MaxType::S2 => "S2",
            MaxType::S3 => "S3",
            MaxType::S4 => "S4",
            MaxType::S5 => "S5",
            MaxType::S6 => "S6",
            MaxType::MaxTrivial => "MAX-TRIVIAL",
            MaxType::MaxR3 => "MAX-R3",
            MaxType::MaxR4 => "MAX-R4",
            MaxType::MaxR5 => "MAX-R5",
            MaxType::MaxR6 => "MAX-R6",
        }
    }

    pub fn from_name(name: &str) -> Option<MaxType> {
        MaxType::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(name))
    }

    fn lifted(kind: RzmsType) -> MaxType {
        match kind {
            RzmsType::R3 => MaxType::MaxR3,
            RzmsType::R4 => MaxType::MaxR4,
            RzmsType::R5 => MaxType::MaxR5,
            _ => MaxType::MaxR6,
        }
    }
}

impl fmt::Display for MaxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The data a result was built from. Class ids are those of
/// [`GreensStructure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    /// A maximal subsemigroup of the principal factor, in its Rees 0-matrix
    /// coordinates (see [`PrincipalFactorIso`]).
    Rzms(RzmsWitness),
    /// Kept `L`-classes `A` and `R`-classes `B`.
    Rectangle { a: Vec<usize>, b: Vec<usize> },
    LClasses { a: Vec<usize> },
    RClasses { b: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubsemigroup {
    pub kind: MaxType,
    pub j_class: usize,
    /// `S ∖ M`, ascending.
    pub removed: Vec<usize>,
    pub size: usize,
    /// Sorted; generate exactly `M`.
    pub generators: Vec<usize>,
    pub witness: Witness,
}

impl MaximalSubsemigroup {
    /// Elements of `M`, ascending, for a semigroup with `n` elements.
    pub fn elements(&self, n: usize) -> Vec<usize> {
        let mut removed = self.removed.iter().peekable();
        (0..n)
            .filter(|&x| {
                if removed.peek() == Some(&&x) {
                    removed.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }
}

/// Digraphs `Γ_L`, `Γ_R` and graphs `Δ`, `Θ` of a regular `J`-class.
///
/// `Γ_L` is the condensation of the digraph on `J/L` with an arc
/// `L_a → L_{ax}` for each generator `x` above `J` with `ax ∈ J`; `Γ_R` is
/// the dual with `xa`. `Δ` and `Θ` live on the components of `Γ_L`
/// (vertices `0..cl`) followed by those of `Γ_R` (vertices `cl..`): `Δ`
/// joins components containing `L_e` and `R_e` for an idempotent `e ∈ J`,
/// and `Θ` those containing `L_x` and `R_x` for `x ∈ ⟨X′⟩ ∩ J`. A component
/// has colour 1 exactly when it touches an edge of `Θ`.
#[derive(Debug, Clone)]
pub struct JClassGraphs {
    pub j_class: usize,
    /// `L`-class ids of `J`, ascending; vertex `k` of `gamma_l.base` is
    /// `l_classes[k]`.
    pub l_classes: Vec<usize>,
    pub r_classes: Vec<usize>,
    pub gamma_l: CondensedDigraph,
    pub gamma_r: CondensedDigraph,
    pub delta: Graph,
    pub theta: Graph,
    /// `⟨X′⟩ ∩ J`, ascending.
    pub xprime_in_j: Vec<usize>,
}

impl JClassGraphs {
    fn l_pos(&self, l_class: usize) -> usize {
        self.l_classes.binary_search(&l_class).expect("L-class of J")
    }

    fn r_pos(&self, r_class: usize) -> usize {
        self.r_classes.binary_search(&r_class).expect("R-class of J")
    }

    /// Component of `Γ_L` containing `l_class`.
    pub fn l_component(&self, l_class: usize) -> usize {
        self.gamma_l.component_of[self.l_pos(l_class)]
    }

    pub fn r_component(&self, r_class: usize) -> usize {
        self.gamma_r.component_of[self.r_pos(r_class)]
    }

    /// `"L1"`, `"L2"`, … by position in `l_classes`.
    pub fn l_class_labels(&self) -> Vec<String> {
        (1..=self.l_classes.len()).map(|k| format!("L{k}")).collect()
    }

    pub fn r_class_labels(&self) -> Vec<String> {
        (1..=self.r_classes.len()).map(|k| format!("R{k}")).collect()
    }

    fn component_labels(c: &CondensedDigraph, names: &[String]) -> Vec<String> {
        c.components
            .iter()
            .map(|comp| {
                let inner: Vec<&str> = comp.iter().map(|&v| names[v].as_str()).collect();
                format!("{{{}}}", inner.join(", "))
            })
            .collect()
    }

    pub fn gamma_l_labels(&self) -> Vec<String> {
        Self::component_labels(&self.gamma_l, &self.l_class_labels())
    }

    pub fn gamma_r_labels(&self) -> Vec<String> {
        Self::component_labels(&self.gamma_r, &self.r_class_labels())
    }

    /// Labels of the vertices of `Δ` and `Θ`.
    pub fn bipartite_labels(&self) -> Vec<String> {
        let mut labels = self.gamma_l_labels();
        labels.extend(self.gamma_r_labels());
        labels
    }

    /// Colour of every `Δ`/`Θ` vertex.
    pub fn bipartite_colours(&self) -> Vec<u8> {
        let mut c = self.gamma_l.colour.clone();
        c.extend(&self.gamma_r.colour);
        c
    }
}

/// Membership vector of `⟨X′⟩` restricted to elements whose `J`-class is at
/// least `j`. Words whose prefix falls below `j` never come back up, so the
/// truncation is exact on that range.
fn xprime_closure(s: &FiniteSemigroup, gs: &GreensStructure, j: usize, positions: &[usize]) -> Vec<bool> {
    let above = gs.above_or_equal(j);
    let mut member = vec![false; s.size()];
    let mut queue: Vec<usize> = Vec::new();
    for &p in positions {
        let g = s.generators()[p];
        if !member[g] {
            member[g] = true;
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        for &p in positions {
            let y = s.right_mul_gen(x, p);
            if !member[y] && above[gs.j_class[y]] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    member
}

/// Builds [`JClassGraphs`] for the regular `J`-class `j`, with `X′` the
/// generators strictly above `j`.
pub fn build_jclass_graphs(s: &FiniteSemigroup, gs: &GreensStructure, j: usize) -> Result<JClassGraphs> {
    if j >= gs.j_count() {
        return Err(Error::input(format!("no J-class {j}")));
    }
    if !gs.regular[j] {
        return Err(Error::input(format!("J-class {} is not regular", j + 1)));
    }
    let positions = gs.x_prime_positions(s, j);
    let l_classes = gs.l_classes_in(j);
    let r_classes = gs.r_classes_in(j);
    let lpos = |l: usize| l_classes.binary_search(&l).expect("L-class of J");
    let rpos = |r: usize| r_classes.binary_search(&r).expect("R-class of J");
    let mut l_arcs = Digraph::new(l_classes.len());
    let mut r_arcs = Digraph::new(r_classes.len());
    for &x in &gs.j_classes[j] {
        for &p in &positions {
            let y = s.right_mul_gen(x, p);
            if gs.j_class[y] == j && gs.l_class[y] != gs.l_class[x] {
                l_arcs.add_edge(lpos(gs.l_class[x]), lpos(gs.l_class[y]))?;
            }
            let y = s.left_mul_gen(x, p);
            if gs.j_class[y] == j && gs.r_class[y] != gs.r_class[x] {
                r_arcs.add_edge(rpos(gs.r_class[x]), rpos(gs.r_class[y]))?;
            }
        }
    }
    let mut gamma_l = strongly_connected_condensation(&l_arcs);
    let mut gamma_r = strongly_connected_condensation(&r_arcs);
    let cl = gamma_l.component_count();
    let vertices = cl + gamma_r.component_count();
    let vertex_pair = |x: usize| {
        (
            gamma_l.component_of[lpos(gs.l_class[x])],
            cl + gamma_r.component_of[rpos(gs.r_class[x])],
        )
    };
    let mut delta = Graph::new(vertices);
    for &x in &gs.j_classes[j] {
        if gs.idempotent[x] {
            let (u, v) = vertex_pair(x);
            delta.add_edge(u, v)?;
        }
    }
    let member = xprime_closure(s, gs, j, &positions);
    let xprime_in_j: Vec<usize> = gs.j_classes[j].iter().copied().filter(|&x| member[x]).collect();
    let mut theta = Graph::new(vertices);
    for &x in &xprime_in_j {
        let (u, v) = vertex_pair(x);
        theta.add_edge(u, v)?;
    }
    for (u, v) in theta.edges() {
        gamma_l.colour[u] = 1;
        gamma_r.colour[v - cl] = 1;
    }
    Ok(JClassGraphs {
        j_class: j,
        l_classes,
        r_classes,
        gamma_l,
        gamma_r,
        delta,
        theta,
        xprime_in_j,
    })
}

/// Options for [`max_subsemigroups_with`].
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub bounds: Bounds,
    /// Only these types are reported; `None` reports all.
    pub types: Option<Vec<MaxType>>,
    /// Randomizes spanning trees and coset transversals in the subgroup
    /// search; results do not depend on it.
    pub seed: Option<u64>,
}

impl SearchOptions {
    fn wants(&self, t: MaxType) -> bool {
        self.types.as_ref().is_none_or(|ts| ts.contains(&t))
    }
}

#[derive(Debug, Clone, Default)]
pub struct MaxReport {
    /// Sorted by `J`-class, type and removed set.
    pub results: Vec<MaximalSubsemigroup>,
    /// Notes about generating sets that had to be replaced.
    pub diagnostics: Vec<String>,
}

/// All non-empty maximal subsemigroups of `s`.
pub fn max_subsemigroups(s: &FiniteSemigroup, bounds: &Bounds) -> Result<Vec<MaximalSubsemigroup>> {
    let gs = GreensStructure::new(s);
    let opts = SearchOptions {
        bounds: *bounds,
        ..SearchOptions::default()
    };
    Ok(max_subsemigroups_with(s, &gs, &opts)?.results)
}

/// [`max_subsemigroups`] with precomputed Green's structure and options.
pub fn max_subsemigroups_with(s: &FiniteSemigroup, gs: &GreensStructure, opts: &SearchOptions) -> Result<MaxReport> {
    let mut search = Search {
        s,
        gs,
        opts,
        seen: HashSet::new(),
        report: MaxReport::default(),
    };
    let mut classes: Vec<usize> = s.generators().iter().map(|&g| gs.j_class[g]).collect();
    classes.sort_unstable();
    classes.dedup();
    for j in classes {
        search
            .visit(j)
            .map_err(|e| e.context(format!("J-class {}", j + 1)))?;
    }
    let mut report = search.report;
    report.results.retain(|m| opts.wants(m.kind));
    report
        .results
        .sort_by(|a, b| (a.j_class, a.kind, &a.removed).cmp(&(b.j_class, b.kind, &b.removed)));
    Ok(report)
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    gs: &'a GreensStructure,
    opts: &'a SearchOptions,
    seen: HashSet<Vec<usize>>,
    report: MaxReport,
}

/// Per-class data shared by the constructions for one `J`-class.
struct ClassContext {
    j: usize,
    /// `X ∖ J` together with generators of the ideal strictly below `J`.
    base_generators: Vec<usize>,
}

impl<'a> Search<'a> {
    fn visit(&mut self, j: usize) -> Result<()> {
        let (s, gs) = (self.s, self.gs);
        let mut base_generators: Vec<usize> = s
            .generators()
            .iter()
            .copied()
            .filter(|&g| gs.j_class[g] != j)
            .collect();
        base_generators.extend(gs.ideal_below_generators(s, j));
        let ctx = ClassContext { j, base_generators };
        let size = gs.j_classes[j].len();
        if gs.is_maximal(j) {
            if size == 1 {
                if s.size() > 1 {
                    self.whole_class(&ctx, MaxType::MaxTrivial);
                }
            } else {
                self.lift_principal_factor(&ctx)?;
            }
            return Ok(());
        }
        let positions = gs.x_prime_positions(s, j);
        let member = xprime_closure(s, gs, j, &positions);
        if !gs.regular[j] {
            if !gs.j_classes[j].iter().any(|&x| member[x]) {
                self.whole_class(&ctx, MaxType::S1);
            }
            return Ok(());
        }
        let uncovered = s
            .generators()
            .iter()
            .any(|&g| gs.j_class[g] == j && !member[g]);
        if uncovered {
            self.regular_non_maximal(&ctx)?;
        }
        Ok(())
    }

    fn whole_class(&mut self, ctx: &ClassContext, kind: MaxType) {
        let removed = self.gs.j_classes[ctx.j].clone();
        self.emit(ctx, kind, removed, ctx.base_generators.clone(), Witness::None);
    }

    /// Lifts a maximal subsemigroup of the principal factor to `S`.
    fn lift(&mut self, ctx: &ClassContext, pfi: &PrincipalFactorIso, kind: MaxType, m: &RzmsMaxSubsemigroup) {
        let mut kept = vec![false; self.s.size()];
        for &code in &m.elements {
            if let Some(x) = pfi.backward(code) {
                kept[x] = true;
            }
        }
        let removed: Vec<usize> = self.gs.j_classes[ctx.j]
            .iter()
            .copied()
            .filter(|&x| !kept[x])
            .collect();
        let mut generators = ctx.base_generators.clone();
        generators.extend(m.generators.iter().filter_map(|&c| pfi.backward(c)));
        self.emit(ctx, kind, removed, generators, Witness::Rzms(m.witness.clone()));
    }

    fn lift_principal_factor(&mut self, ctx: &ClassContext) -> Result<()> {
        let bounds = &self.opts.bounds;
        let pfi = self.gs.principal_factor_iso(self.s, ctx.j)?;
        let r = &pfi.rzms;
        let mut found = max_r3_r4(r);
        found.extend(max_r5(r, bounds)?);
        found.extend(max_r6(r, None, bounds, self.opts.seed)?);
        for m in &found {
            self.lift(ctx, &pfi, MaxType::lifted(m.kind), m);
        }
        Ok(())
    }

    fn regular_non_maximal(&mut self, ctx: &ClassContext) -> Result<()> {
        let (s, gs, opts) = (self.s, self.gs, self.opts);
        let before = self.report.results.len();
        let needed = |t: MaxType| opts.wants(t) || opts.wants(MaxType::S6);
        if needed(MaxType::S2) {
            let pfi = gs.principal_factor_iso(s, ctx.j)?;
            for m in max_s2(s, gs, ctx.j, &pfi, &opts.bounds, opts.seed)? {
                self.lift(ctx, &pfi, MaxType::S2, &m);
            }
        }
        let graphs = build_jclass_graphs(s, gs, ctx.j)?;
        let mut rect_a: Vec<Vec<usize>> = Vec::new();
        let mut rect_b: Vec<Vec<usize>> = Vec::new();
        if needed(MaxType::S3) || needed(MaxType::S4) || needed(MaxType::S5) {
            for (a, b, removed, gens) in rectangles_of(s, gs, &graphs, &opts.bounds)? {
                rect_a.push(a.clone());
                rect_b.push(b.clone());
                let mut generators = ctx.base_generators.clone();
                generators.extend(gens);
                self.emit(ctx, MaxType::S3, removed, generators, Witness::Rectangle { a, b });
            }
        }
        if needed(MaxType::S4) {
            for (a, removed, gens) in one_sided(s, gs, &graphs, Side::L) {
                if rect_a.contains(&a) {
                    continue;
                }
                let mut generators = ctx.base_generators.clone();
                generators.extend(gens);
                self.emit(ctx, MaxType::S4, removed, generators, Witness::LClasses { a });
            }
        }
        if needed(MaxType::S5) {
            for (b, removed, gens) in one_sided(s, gs, &graphs, Side::R) {
                if rect_b.contains(&b) {
                    continue;
                }
                let mut generators = ctx.base_generators.clone();
                generators.extend(gens);
                self.emit(ctx, MaxType::S5, removed, generators, Witness::RClasses { b });
            }
        }
        let found_any = self.report.results.len() > before;
        if !found_any && graphs.theta.edge_count() == 0 {
            self.whole_class(ctx, MaxType::S6);
        }
        Ok(())
    }

    fn emit(&mut self, ctx: &ClassContext, kind: MaxType, mut removed: Vec<usize>, mut generators: Vec<usize>, witness: Witness) {
        removed.sort_unstable();
        if removed.is_empty() || !self.seen.insert(removed.clone()) {
            return;
        }
        let n = self.s.size();
        generators.sort_unstable();
        generators.dedup();
        let result = MaximalSubsemigroup {
            kind,
            j_class: ctx.j,
            size: n - removed.len(),
            removed,
            generators,
            witness,
        };
        let expected = result.elements(n);
        let mut result = result;
        if self.s.closure_of(&result.generators) != expected {
            self.report.diagnostics.push(format!(
                "{kind} result in J-class {}: constructed generators do not generate the subsemigroup; using all {} elements",
                ctx.j + 1,
                expected.len()
            ));
            result.generators = expected;
        }
        self.report.results.push(result);
    }
}

/// Results of the subgroup search on the principal factor of `j` that
/// contain `(EX′)φ`, where `E` holds the first idempotent of each `L`-class.
pub fn max_s2(
    s: &FiniteSemigroup,
    gs: &GreensStructure,
    j: usize,
    pfi: &PrincipalFactorIso,
    bounds: &Bounds,
    seed: Option<u64>,
) -> Result<Vec<RzmsMaxSubsemigroup>> {
    let mut seen_l = HashSet::new();
    let e: Vec<usize> = gs.j_classes[j]
        .iter()
        .copied()
        .filter(|&x| gs.idempotent[x] && seen_l.insert(gs.l_class[x]))
        .collect();
    let positions = gs.x_prime_positions(s, j);
    let mut required: Vec<usize> = Vec::new();
    for &x in &e {
        for &p in &positions {
            if let Some(code) = pfi.forward(s.right_mul_gen(x, p)) {
                required.push(code);
            }
        }
    }
    required.sort_unstable();
    required.dedup();
    max_r6(&pfi.rzms, Some(&required), bounds, seed)
}

/// Lookups shared by the generating-set constructions.
struct ClassIndex<'a> {
    s: &'a FiniteSemigroup,
    gs: &'a GreensStructure,
    g: &'a JClassGraphs,
}

impl ClassIndex<'_> {
    /// First element of the `H`-class `R ∩ L`.
    fn h_first(&self, r_class: usize, l_class: usize) -> usize {
        let h = self.gs.h_class_of(r_class, l_class).expect("H-classes of J are non-empty");
        self.gs.h_classes[h][0]
    }

    /// First idempotent of `J` accepted by `pred`.
    fn idempotent_where(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        self.gs.j_classes[self.g.j_class]
            .iter()
            .copied()
            .find(|&x| self.gs.idempotent[x] && pred(x))
    }

    fn h_class_generators(&self, x: usize) -> Vec<usize> {
        let members = &self.gs.h_classes[self.gs.h_class[x]];
        greedy_generating_set(self.s.size(), |a, b| self.s.multiply(a, b), members)
    }

    /// First `L`-class id of a `Γ_L` component.
    fn l_of_component(&self, c: usize) -> usize {
        self.g.l_classes[self.g.gamma_l.components[c][0]]
    }

    fn r_of_component(&self, c: usize) -> usize {
        self.g.r_classes[self.g.gamma_r.components[c][0]]
    }
}

/// Components in `within` with no arc from another component in `within`.
fn induced_sources(c: &CondensedDigraph, within: &[bool]) -> Vec<usize> {
    let mut has_in = vec![false; c.component_count()];
    for (u, v) in c.dag.edges() {
        if within[u] && within[v] {
            has_in[v] = true;
        }
    }
    (0..c.component_count()).filter(|&k| within[k] && !has_in[k]).collect()
}

type Rectangle = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

/// Maximal subsemigroups keeping `L`-classes `A` and `R`-classes `B`, both
/// non-empty: `(A, B, removed, generators inside J)`.
fn rectangles_of(s: &FiniteSemigroup, gs: &GreensStructure, g: &JClassGraphs, bounds: &Bounds) -> Result<Vec<Rectangle>> {
    let cl = g.gamma_l.component_count();
    let cr = g.gamma_r.component_count();
    let mut closure = Digraph::new(cl + cr);
    for (u, v) in g.gamma_l.dag.edges() {
        closure.add_edge(u, v)?;
    }
    for (u, v) in g.gamma_r.dag.edges() {
        closure.add_edge(cl + u, cl + v)?;
    }
    let idx = ClassIndex { s, gs, g };
    let theta_edges = g.theta.edges();
    let mut out = Vec::new();
    for set in maximal_independent_sets_closed(&g.delta, &closure, bounds.independent_set_vertices)? {
        let mut in_a = vec![false; cl];
        let mut in_b = vec![false; cr];
        for &v in &set {
            if v < cl {
                in_a[v] = true;
            } else {
                in_b[v - cl] = true;
            }
        }
        if !in_a.contains(&true) || !in_b.contains(&true) {
            continue;
        }
        if !theta_edges.iter().all(|&(u, v)| in_a[u] || in_b[v - cl]) {
            continue;
        }
        let l_in_a = |l: usize| in_a[g.l_component(l)];
        let r_in_b = |r: usize| in_b[g.r_component(r)];
        let mut a: Vec<usize> = g.l_classes.iter().copied().filter(|&l| l_in_a(l)).collect();
        let mut b: Vec<usize> = g.r_classes.iter().copied().filter(|&r| r_in_b(r)).collect();
        a.sort_unstable();
        b.sort_unstable();
        let removed: Vec<usize> = gs.j_classes[g.j_class]
            .iter()
            .copied()
            .filter(|&x| !l_in_a(gs.l_class[x]) && !r_in_b(gs.r_class[x]))
            .collect();

        let mut gens = Vec::new();
        let x = idx
            .idempotent_where(|e| l_in_a(gs.l_class[e]))
            .expect("every L-class of a regular J-class has an idempotent");
        gens.extend(idx.h_class_generators(x));
        for u in induced_sources(&g.gamma_l, &in_a) {
            gens.push(idx.h_first(gs.r_class[x], idx.l_of_component(u)));
        }
        let not_b: Vec<bool> = in_b.iter().map(|&b| !b).collect();
        for v in induced_sources(&g.gamma_r, &not_b) {
            gens.push(idx.h_first(idx.r_of_component(v), gs.l_class[x]));
        }
        let x2 = idx
            .idempotent_where(|e| r_in_b(gs.r_class[e]))
            .expect("every R-class of a regular J-class has an idempotent");
        gens.extend(idx.h_class_generators(x2));
        for u in induced_sources(&g.gamma_r, &in_b) {
            gens.push(idx.h_first(idx.r_of_component(u), gs.l_class[x2]));
        }
        let not_a: Vec<bool> = in_a.iter().map(|&a| !a).collect();
        for v in induced_sources(&g.gamma_l, &not_a) {
            gens.push(idx.h_first(gs.r_class[x2], idx.l_of_component(v)));
        }
        for u in g.gamma_l.sources() {
            if in_a[u] {
                gens.push(idx.h_first(b[0], idx.l_of_component(u)));
            }
        }
        out.push((a, b, removed, gens));
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum Side {
    L,
    R,
}

/// Candidates keeping only `L`-classes (or only `R`-classes): for each
/// colour-0 source `U`, the kept classes are those outside `U`. Returns
/// `(kept class ids, removed, generators inside J)`.
fn one_sided(s: &FiniteSemigroup, gs: &GreensStructure, g: &JClassGraphs, side: Side) -> Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let idx = ClassIndex { s, gs, g };
    let (this, other) = match side {
        Side::L => (&g.gamma_l, &g.gamma_r),
        Side::R => (&g.gamma_r, &g.gamma_l),
    };
    let class_of = |x: usize| match side {
        Side::L => gs.l_class[x],
        Side::R => gs.r_class[x],
    };
    let component_of = |class: usize| match side {
        Side::L => g.l_component(class),
        Side::R => g.r_component(class),
    };
    let classes = match side {
        Side::L => &g.l_classes,
        Side::R => &g.r_classes,
    };
    let mut out = Vec::new();
    for u in this.sources() {
        if this.colour[u] != 0 {
            continue;
        }
        let kept: Vec<usize> = classes.iter().copied().filter(|&c| component_of(c) != u).collect();
        if kept.is_empty() {
            continue;
        }
        let removed: Vec<usize> = gs.j_classes[g.j_class]
            .iter()
            .copied()
            .filter(|&x| component_of(class_of(x)) == u)
            .collect();
        let in_kept: Vec<bool> = (0..this.component_count()).map(|c| c != u).collect();
        let x = idx
            .idempotent_where(|e| component_of(class_of(e)) != u)
            .expect("every class of a regular J-class has an idempotent");
        let mut gens = idx.h_class_generators(x);
        for v in induced_sources(this, &in_kept) {
            gens.push(match side {
                Side::L => idx.h_first(gs.r_class[x], idx.l_of_component(v)),
                Side::R => idx.h_first(idx.r_of_component(v), gs.l_class[x]),
            });
        }
        for v in other.sources() {
            gens.push(match side {
                Side::L => idx.h_first(idx.r_of_component(v), gs.l_class[x]),
                Side::R => idx.h_first(gs.r_class[x], idx.l_of_component(v)),
            });
        }
        out.push((kept, removed, gens));
    }
    out
}
