//! Rees 0-matrix semigroups `M⁰[I, G, Λ; P]` over permutation groups.
//!
//! Elements are dense codes: `0` is the zero and `(i, g, λ)` is
//! `1 + (i·|G| + g)·|Λ| + λ`, where `g` indexes the sorted element list of
//! `G`. The structure matrix is indexed `[λ][i]`. Human-facing labels are
//! 1-based with `Λ` printed negatively so that the two index sets stay
//! visibly disjoint.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::graphs::{connected_components, maximal_independent_sets, Graph};
use crate::perm_group::{
    conjugate_subgroup, generate_group, maximal_subgroup_classes, right_coset_reps,
    right_coset_reps_random, PermGroup, Permutation,
};
use crate::semigroup::{greedy_generating_set, ClosureBuilder, FiniteSemigroup};

/// Largest group whose multiplication table is cached.
const GROUP_TABLE_LIMIT: usize = 512;

/// A Rees 0-matrix semigroup with a permutation group and structure matrix.
#[derive(Debug, Clone)]
pub struct ReesZeroMatrixSemigroup {
    rows: usize,
    cols: usize,
    group: PermGroup,
    /// `matrix[λ·rows + i]` is the group index of `p_{λ,i}`, or `None` for 0.
    matrix: Vec<Option<usize>>,
    table: Option<Vec<u32>>,
    inverse: Vec<usize>,
}

impl PartialEq for ReesZeroMatrixSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.group == other.group
            && self.matrix == other.matrix
    }
}

impl ReesZeroMatrixSemigroup {
    /// Builds from group-element indices; `matrix[λ·rows + i]`.
    pub fn new(rows: usize, cols: usize, group: PermGroup, matrix: Vec<Option<usize>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::input("index sets I and Λ must be non-empty"));
        }
        if matrix.len() != rows * cols {
            return Err(Error::input(format!(
                "structure matrix has {} entries, expected {}",
                matrix.len(),
                rows * cols
            )));
        }
        if let Some(bad) = matrix.iter().flatten().find(|&&g| g >= group.order()) {
            return Err(Error::input(format!("matrix entry index {bad} outside the group")));
        }
        let table = (group.order() <= GROUP_TABLE_LIMIT).then(|| {
            group
                .multiplication_table()
                .into_iter()
                .map(|x| x as u32)
                .collect()
        });
        let inverse = group
            .elements()
            .iter()
            .map(|p| group.index_of(&p.inverse()).expect("group is closed"))
            .collect();
        let r = ReesZeroMatrixSemigroup {
            rows,
            cols,
            group,
            matrix,
            table,
            inverse,
        };
        if !r.is_regular() {
            return Err(Error::input(
                "structure matrix must have a non-zero entry in every row and column",
            ));
        }
        Ok(r)
    }

    /// Builds from permutation entries given as rows indexed by `λ`.
    pub fn from_permutations(group: PermGroup, entries: &[Vec<Option<Permutation>>]) -> Result<Self> {
        let cols = entries.len();
        let rows = entries.first().map_or(0, Vec::len);
        let mut matrix = Vec::with_capacity(rows * cols);
        for (l, row) in entries.iter().enumerate() {
            if row.len() != rows {
                return Err(Error::input(format!(
                    "matrix row {} has {} entries, expected {rows}",
                    l + 1,
                    row.len()
                )));
            }
            for (i, entry) in row.iter().enumerate() {
                matrix.push(match entry {
                    None => None,
                    Some(p) => Some(group.index_of(p).ok_or_else(|| {
                        Error::input(format!(
                            "matrix entry {p} at row {}, column {} is not in the group",
                            l + 1,
                            i + 1
                        ))
                    })?),
                });
            }
        }
        ReesZeroMatrixSemigroup::new(rows, cols, group, matrix)
    }

    /// The Brandt semigroup `B(G, m)`: identity structure matrix.
    pub fn brandt(group: PermGroup, m: usize) -> Result<Self> {
        let matrix = (0..m * m)
            .map(|k| (k / m == k % m).then_some(0))
            .collect();
        ReesZeroMatrixSemigroup::new(m, m, group, matrix)
    }

    /// `|I|`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `|Λ|`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// `p_{λ,i}` as a group index.
    pub fn entry(&self, lambda: usize, i: usize) -> Option<usize> {
        self.matrix[lambda * self.rows + i]
    }

    pub fn size(&self) -> usize {
        self.rows * self.group.order() * self.cols + 1
    }

    pub fn encode(&self, i: usize, g: usize, lambda: usize) -> usize {
        1 + (i * self.group.order() + g) * self.cols + lambda
    }

    /// `None` for the zero, otherwise `(i, g, λ)`.
    pub fn decode(&self, code: usize) -> Option<(usize, usize, usize)> {
        if code == 0 {
            return None;
        }
        let k = code - 1;
        let lambda = k % self.cols;
        let rest = k / self.cols;
        Some((rest / self.group.order(), rest % self.group.order(), lambda))
    }

    pub fn group_mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.group.order() + b] as usize,
            None => {
                let e = self.group.elements();
                self.group.index_of(&e[a].then(&e[b])).expect("group is closed")
            }
        }
    }

    pub fn group_inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `(i,g,j)(k,h,l) = (i, g·p_{j,k}·h, l)`, or 0 when `p_{j,k} = 0`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let (Some((i, g, j)), Some((k, h, l))) = (self.decode(a), self.decode(b)) else {
            return 0;
        };
        match self.entry(j, k) {
            None => 0,
            Some(p) => self.encode(i, self.group_mul(self.group_mul(g, p), h), l),
        }
    }

    pub fn is_regular(&self) -> bool {
        (0..self.cols).all(|l| (0..self.rows).any(|i| self.entry(l, i).is_some()))
            && (0..self.rows).all(|i| (0..self.cols).any(|l| self.entry(l, i).is_some()))
    }

    pub fn has_zero_entry(&self) -> bool {
        self.matrix.iter().any(Option::is_none)
    }

    /// Bipartite graph on `I ⊔ Λ`: vertices `0..rows` are `I`, then `Λ`.
    pub fn graham_houghton(&self) -> Graph {
        let mut g = Graph::new(self.rows + self.cols);
        for l in 0..self.cols {
            for i in 0..self.rows {
                if self.entry(l, i).is_some() {
                    g.add_edge(i, self.rows + l).expect("bipartite edge");
                }
            }
        }
        g
    }

    /// Vertex labels of the Graham–Houghton graph: `1..` for `I`, `-1..` for `Λ`.
    pub fn graham_houghton_labels(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (i + 1).to_string())
            .chain((0..self.cols).map(|l| format!("-{}", l + 1)))
            .collect()
    }

    pub fn label(&self, code: usize) -> String {
        match self.decode(code) {
            None => "0".to_string(),
            Some((i, g, l)) => format!("({}, {}, -{})", i + 1, self.group.elements()[g], l + 1),
        }
    }

    /// Idempotents `(i, p_{λ,i}⁻¹, λ)` together with the zero.
    pub fn idempotents(&self) -> Vec<usize> {
        let mut out = vec![0];
        for i in 0..self.rows {
            for l in 0..self.cols {
                if let Some(p) = self.entry(l, i) {
                    out.push(self.encode(i, self.group_inv(p), l));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Sorted elements of the subsemigroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut b = ClosureBuilder::new(self.size(), |x, y| self.multiply(x, y));
        for &g in gens {
            b.add(g);
        }
        let mut out = b.elements().to_vec();
        out.sort_unstable();
        out
    }

    /// A generating set for the (closed) set `elements`, non-zero elements
    /// considered first.
    pub fn generators_of(&self, elements: &[usize]) -> Vec<usize> {
        let order: Vec<usize> = elements
            .iter()
            .copied()
            .filter(|&x| x != 0)
            .chain(elements.iter().copied().filter(|&x| x == 0))
            .collect();
        greedy_generating_set(self.size(), |x, y| self.multiply(x, y), &order)
    }

    /// The semigroup with every element as a generator.
    pub fn to_semigroup(&self, bounds: &Bounds) -> Result<FiniteSemigroup> {
        let gens: Vec<usize> = (0..self.size()).collect();
        self.to_semigroup_with(&gens, bounds)
    }

    /// The subsemigroup generated by the given element codes.
    pub fn to_semigroup_with(&self, gens: &[usize], bounds: &Bounds) -> Result<FiniteSemigroup> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= self.size()) {
            return Err(Error::input(format!("element code {bad} outside the semigroup")));
        }
        let enumerated = crate::semigroup::closure(
            gens,
            |&a, &b| self.multiply(a, b),
            |&a| self.label(a),
            bounds,
        )?;
        Ok(enumerated.semigroup)
    }

    /// Normalizes with deterministic spanning trees.
    pub fn normalize(&self) -> Result<Normalization> {
        self.normalize_inner(None)
    }

    /// Normalizes with spanning-tree roots and traversal order drawn from `rng`.
    pub fn normalize_random<R: Rng>(&self, rng: &mut R) -> Result<Normalization> {
        self.normalize_inner(Some(rng as &mut dyn rand::RngCore))
    }

    fn normalize_inner(&self, mut rng: Option<&mut dyn rand::RngCore>) -> Result<Normalization> {
        if !self.is_regular() {
            return Err(Error::input("normalization requires a regular Rees 0-matrix semigroup"));
        }
        let gh = self.graham_houghton();
        let comps = connected_components(&gh);
        let mut row_scale = vec![usize::MAX; self.rows];
        let mut col_scale = vec![usize::MAX; self.cols];
        let mut components = Vec::new();
        for comp in comps {
            let comp_rows: Vec<usize> = comp.iter().copied().filter(|&v| v < self.rows).collect();
            let comp_cols: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&v| v >= self.rows)
                .map(|v| v - self.rows)
                .collect();
            let root = match rng.as_deref_mut() {
                Some(r) => *comp_rows.choose(r).expect("regular components contain rows"),
                None => comp_rows[0],
            };
            row_scale[root] = 0;
            let mut anchor_col = None;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let mut next: Vec<usize> = gh.neighbours(v).to_vec();
                if let Some(r) = rng.as_deref_mut() {
                    next.shuffle(r);
                }
                for w in next {
                    if v < self.rows {
                        let (i, l) = (v, w - self.rows);
                        if col_scale[l] != usize::MAX {
                            continue;
                        }
                        let p = self.entry(l, i).expect("edge has an entry");
                        col_scale[l] = self.group_mul(p, self.group_inv(row_scale[i]));
                        if i == root && anchor_col.is_none() {
                            anchor_col = Some(l);
                        }
                    } else {
                        let (l, j) = (v - self.rows, w);
                        if row_scale[j] != usize::MAX {
                            continue;
                        }
                        let p = self.entry(l, j).expect("edge has an entry");
                        row_scale[j] = self.group_mul(self.group_inv(col_scale[l]), p);
                    }
                    queue.push_back(w);
                }
            }
            components.push((comp_rows, comp_cols, root, anchor_col.expect("root has a neighbour")));
        }

        // p' = b_λ⁻¹ p a_i⁻¹
        let matrix: Vec<Option<usize>> = (0..self.cols)
            .flat_map(|l| (0..self.rows).map(move |i| (l, i)))
            .map(|(l, i)| {
                self.entry(l, i).map(|p| {
                    self.group_mul(
                        self.group_mul(self.group_inv(col_scale[l]), p),
                        self.group_inv(row_scale[i]),
                    )
                })
            })
            .collect();
        let normalized = ReesZeroMatrixSemigroup {
            matrix,
            ..self.clone()
        };
        let degree = self.group.degree();
        let components = components
            .into_iter()
            .map(|(rows, cols, anchor_row, anchor_col)| {
                let mut entries: Vec<Permutation> = Vec::new();
                for &l in &cols {
                    for &i in &rows {
                        if let Some(p) = normalized.entry(l, i) {
                            entries.push(self.group.elements()[p].clone());
                        }
                    }
                }
                entries.sort();
                entries.dedup();
                let group = generate_group(degree, &entries)?;
                Ok(NormalComponent {
                    rows,
                    cols,
                    anchor_row,
                    anchor_col,
                    group,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Normalization {
            normalized,
            row_scale,
            col_scale,
            components,
        })
    }
}

/// One connected component of the Graham–Houghton graph after normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalComponent {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub anchor_row: usize,
    pub anchor_col: usize,
    /// Generated by the non-zero entries of this block.
    pub group: PermGroup,
}

/// A normalized copy of a Rees 0-matrix semigroup and the isomorphism
/// `(i, g, λ) ↦ (i, a_i·g·b_λ, λ)` onto it.
#[derive(Debug, Clone)]
pub struct Normalization {
    pub normalized: ReesZeroMatrixSemigroup,
    pub row_scale: Vec<usize>,
    pub col_scale: Vec<usize>,
    pub components: Vec<NormalComponent>,
}

impl Normalization {
    pub fn to_normalized(&self, code: usize) -> usize {
        let r = &self.normalized;
        match r.decode(code) {
            None => 0,
            Some((i, g, l)) => {
                let h = r.group_mul(r.group_mul(self.row_scale[i], g), self.col_scale[l]);
                r.encode(i, h, l)
            }
        }
    }

    pub fn from_normalized(&self, code: usize) -> usize {
        let r = &self.normalized;
        match r.decode(code) {
            None => 0,
            Some((i, h, l)) => {
                let g = r.group_mul(
                    r.group_mul(r.group_inv(self.row_scale[i]), h),
                    r.group_inv(self.col_scale[l]),
                );
                r.encode(i, g, l)
            }
        }
    }
}

/// The six forms of maximal subsemigroup of a regular Rees 0-matrix semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RzmsType {
    /// `{0}`, when `|R| = 2`.
    R1,
    /// `R ∖ {0}`, when `P` has no zero entry.
    R2,
    /// One `Λ` index removed.
    R3,
    /// One `I` index removed.
    R4,
    /// Complement of a rectangle from a maximal independent set.
    R5,
    /// Meets every `H`-class; from a maximal subgroup of `G`.
    R6,
}

impl RzmsType {
    pub fn name(self) -> &'static str {
        match self {
            RzmsType::R1 => "R1",
            RzmsType::R2 => "R2",
            RzmsType::R3 => "R3",
            RzmsType::R4 => "R4",
            RzmsType::R5 => "R5",
            RzmsType::R6 => "R6",
        }
    }
}

/// The data a result was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RzmsWitness {
    Zero,
    NonZero,
    RemovedCol(usize),
    RemovedRow(usize),
    /// Kept rows `X ⊆ I` and kept columns `Y ⊆ Λ`.
    IndependentSet { rows: Vec<usize>, cols: Vec<usize> },
    /// Maximal subgroup class of `G` (position in the class list, order of
    /// the representative) and the chosen coset tuple `t₁,…,t_n`.
    Subgroup {
        class: usize,
        order: usize,
        cosets: Vec<Permutation>,
    },
}

/// A maximal subsemigroup of a Rees 0-matrix semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RzmsMaxSubsemigroup {
    pub kind: RzmsType,
    pub witness: RzmsWitness,
    pub generators: Vec<usize>,
    /// Sorted element codes.
    pub elements: Vec<usize>,
}

impl RzmsMaxSubsemigroup {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

fn nonzero_codes(r: &ReesZeroMatrixSemigroup, keep: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut out = vec![0];
    for i in 0..r.rows() {
        for g in 0..r.group().order() {
            for l in 0..r.cols() {
                if keep(i, l) {
                    out.push(r.encode(i, g, l));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn explicit_result(r: &ReesZeroMatrixSemigroup, kind: RzmsType, witness: RzmsWitness, elements: Vec<usize>) -> RzmsMaxSubsemigroup {
    RzmsMaxSubsemigroup {
        kind,
        witness,
        generators: r.generators_of(&elements),
        elements,
    }
}

/// Types R1 and R2, each tested on its own condition.
pub fn max_r1_r2(r: &ReesZeroMatrixSemigroup) -> Vec<RzmsMaxSubsemigroup> {
    let mut out = Vec::new();
    if r.size() == 2 {
        out.push(RzmsMaxSubsemigroup {
            kind: RzmsType::R1,
            witness: RzmsWitness::Zero,
            generators: vec![0],
            elements: vec![0],
        });
    }
    if !r.has_zero_entry() {
        let elements: Vec<usize> = (1..r.size()).collect();
        out.push(explicit_result(r, RzmsType::R2, RzmsWitness::NonZero, elements));
    }
    out
}

/// True iff removing `removed` from the Graham–Houghton graph leaves no
/// isolated vertex.
fn removal_keeps_edges(gh: &Graph, removed: usize) -> bool {
    (0..gh.vertex_count())
        .filter(|&v| v != removed)
        .all(|v| gh.neighbours(v).iter().any(|&w| w != removed))
}

/// Types R3 (drop a column `λ`) and R4 (drop a row `i`).
pub fn max_r3_r4(r: &ReesZeroMatrixSemigroup) -> Vec<RzmsMaxSubsemigroup> {
    let gh = r.graham_houghton();
    let mut out = Vec::new();
    if r.cols() > 1 {
        for l in 0..r.cols() {
            if removal_keeps_edges(&gh, r.rows() + l) {
                let elements = nonzero_codes(r, |_, m| m != l);
                out.push(explicit_result(r, RzmsType::R3, RzmsWitness::RemovedCol(l), elements));
            }
        }
    }
    if r.rows() > 1 {
        for i in 0..r.rows() {
            if removal_keeps_edges(&gh, i) {
                let elements = nonzero_codes(r, |j, _| j != i);
                out.push(explicit_result(r, RzmsType::R4, RzmsWitness::RemovedRow(i), elements));
            }
        }
    }
    out
}

/// Type R5: one result per maximal independent set `X ∪ Y` of the
/// Graham–Houghton graph with `X ⊊ I`, `Y ⊊ Λ` both non-empty.
pub fn max_r5(r: &ReesZeroMatrixSemigroup, bounds: &Bounds) -> Result<Vec<RzmsMaxSubsemigroup>> {
    let gh = r.graham_houghton();
    let mut out = Vec::new();
    for set in maximal_independent_sets(&gh, bounds.independent_set_vertices)? {
        let rows: Vec<usize> = set.iter().copied().filter(|&v| v < r.rows()).collect();
        let cols: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&v| v >= r.rows())
            .map(|v| v - r.rows())
            .collect();
        if rows.is_empty() || cols.is_empty() || rows.len() == r.rows() || cols.len() == r.cols() {
            continue;
        }
        let (in_rows, in_cols) = (membership(r.rows(), &rows), membership(r.cols(), &cols));
        let elements = nonzero_codes(r, |i, l| in_rows[i] || in_cols[l]);
        out.push(explicit_result(r, RzmsType::R5, RzmsWitness::IndependentSet { rows, cols }, elements));
    }
    Ok(out)
}

fn membership(n: usize, items: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in items {
        m[x] = true;
    }
    m
}

/// Type R6 via maximal subgroups of `G`. When `required` is given only
/// results containing every listed element are kept. A `seed` randomizes the
/// spanning trees and coset transversals; the resulting sets do not depend on
/// it.
pub fn max_r6(
    r: &ReesZeroMatrixSemigroup,
    required: Option<&[usize]>,
    bounds: &Bounds,
    seed: Option<u64>,
) -> Result<Vec<RzmsMaxSubsemigroup>> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let norm = match rng.as_mut() {
        Some(rng) => r.normalize_random(rng)?,
        None => r.normalize()?,
    };
    let nr = &norm.normalized;
    let group = nr.group();
    let classes = maximal_subgroup_classes(group, bounds.subgroup_lattice_order)?;
    let idempotents: Vec<usize> = nr.idempotents().into_iter().filter(|&x| x != 0).collect();
    let comps = &norm.components;
    let index = |p: &Permutation| group.index_of(p).expect("element of G");

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for (class_idx, class) in classes.iter().enumerate() {
        let v = &class.representative;
        let normalizer_reps = match rng.as_mut() {
            Some(rng) => right_coset_reps_random(group, &class.normalizer, rng)?,
            None => class.normalizer_coset_reps.clone(),
        };
        let t1: Vec<(Permutation, PermGroup)> = normalizer_reps
            .into_iter()
            .filter_map(|t| {
                let conj = conjugate_subgroup(v, &t).ok()?;
                comps[0].group.is_subgroup_of(&conj).then_some((t, conj))
            })
            .collect();
        if t1.is_empty() {
            continue;
        }
        let v_reps = match rng.as_mut() {
            Some(rng) => right_coset_reps_random(group, v, rng)?,
            None => right_coset_reps(group, v)?,
        };
        let mut later: Vec<Vec<Permutation>> = Vec::new();
        for comp in &comps[1..] {
            let tk: Vec<Permutation> = v_reps
                .iter()
                .filter(|g| {
                    conjugate_subgroup(v, g)
                        .map(|c| comp.group.is_subgroup_of(&c))
                        .unwrap_or(false)
                })
                .cloned()
                .collect();
            later.push(tk);
        }
        if later.iter().any(Vec::is_empty) {
            continue;
        }
        let (i1, l1) = (comps[0].anchor_row, comps[0].anchor_col);
        for (t1_elem, conj) in &t1 {
            let t1_inv = t1_elem.inverse();
            for tuple in cartesian(&later) {
                let mut gens_norm: Vec<usize> = idempotents.clone();
                for x in conj.generators() {
                    gens_norm.push(nr.encode(i1, index(x), l1));
                }
                for (k, tk) in tuple.iter().enumerate() {
                    let comp = &comps[k + 1];
                    gens_norm.push(nr.encode(i1, index(&t1_inv.then(tk)), comp.anchor_col));
                    gens_norm.push(nr.encode(comp.anchor_row, index(&tk.inverse().then(t1_elem)), l1));
                }
                let mut generators: Vec<usize> = gens_norm.iter().map(|&x| norm.from_normalized(x)).collect();
                generators.sort_unstable();
                generators.dedup();
                // Without zero entries the generators need not reach 0.
                let mut elements = r.closure(&generators);
                if elements.first() != Some(&0) {
                    generators.insert(0, 0);
                    elements.insert(0, 0);
                }
                if let Some(req) = required {
                    if !req.iter().all(|x| elements.binary_search(x).is_ok()) {
                        continue;
                    }
                }
                if !seen.insert(elements.clone()) {
                    continue;
                }
                let mut cosets = vec![t1_elem.clone()];
                cosets.extend(tuple.iter().map(|&t| t.clone()));
                out.push(RzmsMaxSubsemigroup {
                    kind: RzmsType::R6,
                    witness: RzmsWitness::Subgroup {
                        class: class_idx,
                        order: v.order(),
                        cosets,
                    },
                    generators,
                    elements,
                });
            }
        }
    }
    Ok(out)
}

/// Every tuple choosing one entry from each list.
fn cartesian<T>(lists: &[Vec<T>]) -> Vec<Vec<&T>> {
    let mut out: Vec<Vec<&T>> = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// All maximal subsemigroups of a regular Rees 0-matrix semigroup, sorted by
/// type and then element set.
pub fn max_subsemigroups_rzms(r: &ReesZeroMatrixSemigroup, bounds: &Bounds) -> Result<Vec<RzmsMaxSubsemigroup>> {
    let mut out = max_r1_r2(r);
    out.extend(max_r3_r4(r));
    out.extend(max_r5(r, bounds)?);
    out.extend(max_r6(r, None, bounds, None)?);
    out.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.elements.cmp(&b.elements)));
    out.dedup_by(|a, b| a.elements == b.elements);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse(s, degree).unwrap()
    }

    fn cyclic2() -> PermGroup {
        generate_group(2, &[p(2, "(1 2)")]).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let gens = vec![
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
        ];
        generate_group(n, &gens).unwrap()
    }

    /// Brute-force maximal subsemigroups by subset enumeration.
    fn brute(r: &ReesZeroMatrixSemigroup) -> Vec<Vec<usize>> {
        let n = r.size();
        assert!(n <= 16);
        let closed = |mask: u32| {
            (0..n).filter(|a| mask >> a & 1 == 1).all(|a| {
                (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .all(|b| mask >> r.multiply(a, b) & 1 == 1)
            })
        };
        let full = (1u32 << n) - 1;
        let mut proper: Vec<u32> = (1..full).filter(|&m| closed(m)).collect();
        proper.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut maximal: Vec<u32> = Vec::new();
        for m in proper {
            if !maximal.iter().any(|&big| m & !big == 0) {
                maximal.push(m);
            }
        }
        let mut out: Vec<Vec<usize>> = maximal
            .iter()
            .map(|&m| (0..n).filter(|b| m >> b & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    fn sets(results: &[RzmsMaxSubsemigroup]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = results.iter().map(|m| m.elements.clone()).collect();
        out.sort();
        out
    }

    #[test]
    fn multiplication_in_brandt() {
        let b = ReesZeroMatrixSemigroup::brandt(cyclic2(), 2).unwrap();
        let x = 1; // the transposition is the second group element
        let a = b.encode(0, x, 0);
        let c = b.encode(0, x, 1);
        assert_eq!(b.multiply(a, c), b.encode(0, 0, 1));
        assert_eq!(b.multiply(c, c), 0);
        assert_eq!(b.multiply(0, a), 0);
        assert_eq!(b.multiply(a, 0), 0);
        assert_eq!(b.size(), 9);
    }

    #[test]
    fn rejects_non_regular_matrices() {
        let r = ReesZeroMatrixSemigroup::new(2, 2, cyclic2(), vec![Some(0), Some(0), None, None]);
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn associativity_spot_check() {
        let r = ReesZeroMatrixSemigroup::new(2, 2, cyclic2(), vec![Some(0), Some(0), Some(0), Some(1)]).unwrap();
        for a in 0..r.size() {
            for b in 0..r.size() {
                for c in 0..r.size() {
                    assert_eq!(r.multiply(r.multiply(a, b), c), r.multiply(a, r.multiply(b, c)));
                }
            }
        }
    }

    #[test]
    fn graham_houghton_examples() {
        let b = ReesZeroMatrixSemigroup::brandt(cyclic2(), 3).unwrap();
        let gh = b.graham_houghton();
        assert_eq!(gh.edge_count(), 3);
        assert_eq!(connected_components(&gh).len(), 3);
        let full = ReesZeroMatrixSemigroup::new(2, 3, cyclic2(), vec![Some(0); 6]).unwrap();
        assert_eq!(full.graham_houghton().edge_count(), 6);
    }

    #[test]
    fn normalization_invariants() {
        let s3 = sym(3);
        let entries: Vec<Option<usize>> = vec![Some(3), Some(1), None, Some(4), None, Some(2), None, Some(5), Some(1)];
        let r = ReesZeroMatrixSemigroup::new(3, 3, s3, entries).unwrap();
        let norm = r.normalize().unwrap();
        let nr = &norm.normalized;
        for comp in &norm.components {
            assert_eq!(nr.entry(comp.anchor_col, comp.anchor_row), Some(0));
        }
        // The map is a bijection preserving products.
        let mut seen = HashSet::new();
        for a in 0..r.size() {
            let fa = norm.to_normalized(a);
            assert_eq!(norm.from_normalized(fa), a);
            assert!(seen.insert(fa));
        }
        for a in (0..r.size()).step_by(3) {
            for b in 0..r.size() {
                assert_eq!(
                    norm.to_normalized(r.multiply(a, b)),
                    nr.multiply(norm.to_normalized(a), norm.to_normalized(b))
                );
            }
        }
    }

    #[test]
    fn normalization_of_identity_brandt_is_trivial() {
        let b = ReesZeroMatrixSemigroup::brandt(sym(3), 3).unwrap();
        let norm = b.normalize().unwrap();
        assert_eq!(norm.normalized, b);
        assert_eq!(norm.components.len(), 3);
        assert!(norm.components.iter().all(|c| c.group.order() == 1));
    }

    #[test]
    fn component_group_of_two_by_two() {
        let r = ReesZeroMatrixSemigroup::new(2, 2, cyclic2(), vec![Some(0), Some(0), Some(0), Some(1)]).unwrap();
        let norm = r.normalize().unwrap();
        assert_eq!(norm.components.len(), 1);
        assert_eq!(norm.components[0].group.order(), 2);
        assert!(max_r6(&r, None, &Bounds::default(), None).unwrap().is_empty());
    }

    #[test]
    fn small_examples_match_brute_force() {
        let c1 = PermGroup::trivial(1);
        let cases = vec![
            ReesZeroMatrixSemigroup::brandt(cyclic2(), 2).unwrap(),
            ReesZeroMatrixSemigroup::new(1, 1, c1.clone(), vec![Some(0)]).unwrap(),
            ReesZeroMatrixSemigroup::new(1, 1, cyclic2(), vec![Some(0)]).unwrap(),
            ReesZeroMatrixSemigroup::new(2, 2, cyclic2(), vec![Some(0), Some(0), Some(0), Some(1)]).unwrap(),
            ReesZeroMatrixSemigroup::new(2, 2, c1.clone(), vec![Some(0), None, Some(0), Some(0)]).unwrap(),
            ReesZeroMatrixSemigroup::new(2, 1, cyclic2(), vec![Some(0), Some(1)]).unwrap(),
            ReesZeroMatrixSemigroup::new(1, 2, cyclic2(), vec![Some(1), Some(1)]).unwrap(),
            ReesZeroMatrixSemigroup::new(2, 2, c1, vec![Some(0), Some(0), Some(0), Some(0)]).unwrap(),
        ];
        for r in &cases {
            let ours = max_subsemigroups_rzms(r, &Bounds::default()).unwrap();
            assert_eq!(sets(&ours), brute(r), "mismatch for {r:?}");
            for m in &ours {
                assert_eq!(r.closure(&m.generators), m.elements);
            }
        }
    }

    #[test]
    fn brandt_c2_type_counts() {
        let b = ReesZeroMatrixSemigroup::brandt(cyclic2(), 2).unwrap();
        let all = max_subsemigroups_rzms(&b, &Bounds::default()).unwrap();
        let count = |k| all.iter().filter(|m| m.kind == k).count();
        assert_eq!(count(RzmsType::R5), 2);
        assert_eq!(count(RzmsType::R6), 2);
        assert_eq!(all.len(), 4);
        assert!(max_r3_r4(&b).is_empty());
    }

    #[test]
    fn r1_r2_for_two_element_semigroup() {
        let r = ReesZeroMatrixSemigroup::new(1, 1, PermGroup::trivial(1), vec![Some(0)]).unwrap();
        let found = max_r1_r2(&r);
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].elements, vec![0]);
        assert_eq!(found[1].elements, vec![1]);
    }

    #[test]
    fn complete_bipartite_r3_r4_and_no_r5() {
        let r = ReesZeroMatrixSemigroup::new(2, 3, cyclic2(), vec![Some(0); 6]).unwrap();
        assert_eq!(max_r3_r4(&r).len(), 5);
        assert!(max_r5(&r, &Bounds::default()).unwrap().is_empty());
    }

    #[test]
    fn brandt_s3_r6_counts() {
        for (m, expected) in [(2usize, 11usize), (3, 31)] {
            let b = ReesZeroMatrixSemigroup::brandt(sym(3), m).unwrap();
            let found = max_r6(&b, None, &Bounds::default(), None).unwrap();
            assert_eq!(found.len(), expected);
        }
    }

    #[test]
    fn r6_independent_of_random_choices() {
        let s3 = sym(3);
        let entries: Vec<Option<usize>> = vec![Some(3), Some(1), None, Some(4), None, Some(2), None, Some(5), Some(1)];
        let r = ReesZeroMatrixSemigroup::new(3, 3, s3, entries).unwrap();
        let base = sets(&max_r6(&r, None, &Bounds::default(), None).unwrap());
        for seed in 0..5 {
            let other = sets(&max_r6(&r, None, &Bounds::default(), Some(seed)).unwrap());
            assert_eq!(base, other);
        }
    }

    #[test]
    fn required_subset_filters_r6() {
        let b = ReesZeroMatrixSemigroup::brandt(cyclic2(), 2).unwrap();
        let all = max_r6(&b, None, &Bounds::default(), None).unwrap();
        let must = all[0].elements.iter().copied().find(|x| !all[1].elements.contains(x)).unwrap();
        let filtered = max_r6(&b, Some(&[must]), &Bounds::default(), None).unwrap();
        assert_eq!(filtered.len(), 1);
        assert_eq!(filtered[0].elements, all[0].elements);
    }
}
