//! Finite semigroups given by generators, Green's relations and principal
//! factors.
//!
//! A [`FiniteSemigroup`] is enumerated breadth-first from its generators and
//! keeps its right and left Cayley graphs (one arc per generator). Elements
//! are dense indices in discovery order. Products come from a full table when
//! the semigroup is small enough, and otherwise by tracing the word of the
//! right operand through the right Cayley graph.

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::graphs::{partition_from_ids, scc_ids, Digraph};
use crate::perm_group::{generate_group, PermGroup, Permutation};
use crate::rees_matrix::ReesZeroMatrixSemigroup;

const NONE: u32 = u32::MAX;

/// A map of `{0, …, n − 1}` to itself, composed left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&x| x >= n) {
            return Err(Error::input(format!(
                "image {} out of range for degree {n}",
                bad + 1
            )));
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            images: (0..degree).collect(),
        }
    }

    /// Parses a 1-based image row such as `"1 3 4 1 5 5 5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let images = text
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::input(format!("invalid image '{tok}' in \"{text}\""))),
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::input("empty transformation"));
        }
        Transformation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Applies `self`, then `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        for &x in &self.images {
            seen[x] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    /// 1-based image row.
    pub fn label(&self) -> String {
        self.images
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finite semigroup on element indices `0..size`.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    generators: Vec<usize>,
    right: Vec<u32>,
    left: Vec<u32>,
    /// `(prefix, generator position)`; generators have prefix `NONE`.
    parent: Vec<(u32, u32)>,
    table: Option<Vec<u32>>,
    labels: Vec<String>,
}

/// A semigroup enumerated from concrete elements.
#[derive(Debug, Clone)]
pub struct Enumerated<T> {
    pub semigroup: FiniteSemigroup,
    /// The concrete element behind each index.
    pub elements: Vec<T>,
}

/// Enumerates `⟨gens⟩` breadth-first. Elements appear in discovery order,
/// starting with the distinct generators in input order.
pub fn closure<T, M, L>(gens: &[T], mul: M, label: L, bounds: &Bounds) -> Result<Enumerated<T>>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    if gens.is_empty() {
        return Err(Error::input("a semigroup needs at least one generator"));
    }
    let bound = bounds.semigroup_elements;
    let mut index: HashMap<T, u32> = HashMap::new();
    let mut elements: Vec<T> = Vec::new();
    let mut parent: Vec<(u32, u32)> = Vec::new();
    let mut generators: Vec<usize> = Vec::new();
    let mut gen_values: Vec<T> = Vec::new();
    for g in gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len() as u32);
            generators.push(elements.len());
            parent.push((NONE, gen_values.len() as u32));
            elements.push(g.clone());
            gen_values.push(g.clone());
        }
    }
    let k = gen_values.len();
    let mut right: Vec<u32> = Vec::new();
    let mut x = 0;
    while x < elements.len() {
        for (gpos, g) in gen_values.iter().enumerate() {
            let y = mul(&elements[x], g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    let i = elements.len();
                    if i >= bound {
                        return Err(Error::capacity("semigroup elements", i + 1, bound));
                    }
                    index.insert(y.clone(), i as u32);
                    elements.push(y);
                    parent.push((x as u32, gpos as u32));
                    i as u32
                }
            };
            right.push(idx);
        }
        x += 1;
    }
    let n = elements.len();
    let mut left = Vec::with_capacity(n * k);
    for e in &elements {
        for g in &gen_values {
            left.push(index[&mul(g, e)]);
        }
    }
    let labels = elements.iter().map(label).collect();
    let mut semigroup = FiniteSemigroup {
        generators,
        right,
        left,
        parent,
        table: None,
        labels,
    };
    if n <= bounds.table_elements {
        semigroup.build_table();
    }
    Ok(Enumerated { semigroup, elements })
}

impl FiniteSemigroup {
    /// The semigroup generated by transformations of a common degree.
    pub fn from_transformations(gens: &[Transformation], bounds: &Bounds) -> Result<Enumerated<Transformation>> {
        if let Some(first) = gens.first() {
            if let Some(bad) = gens.iter().find(|t| t.degree() != first.degree()) {
                return Err(Error::input(format!(
                    "transformations of degrees {} and {} cannot be composed",
                    first.degree(),
                    bad.degree()
                )));
            }
        }
        closure(gens, |a, b| a.then(b), Transformation::label, bounds)
    }

    /// The subsemigroup of a Cayley table generated by `generators` (all
    /// elements when `None`). The table is 0-based and validated for range
    /// and associativity. Labels are the 1-based table indices.
    pub fn from_table(table: &[Vec<usize>], generators: Option<&[usize]>, bounds: &Bounds) -> Result<Enumerated<usize>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::input("empty Cayley table"));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {} of the Cayley table has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::input(format!(
                    "entry {} in row {} is outside 1..{n}",
                    bad + 1,
                    r + 1
                )));
            }
        }
        check_associative(n, |a, b| table[a][b])?;
        let all: Vec<usize> = (0..n).collect();
        let gens = generators.unwrap_or(&all);
        if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
            return Err(Error::input(format!("generator {} is outside 1..{n}", bad + 1)));
        }
        closure(gens, |&a, &b| table[a][b], |&a| (a + 1).to_string(), bounds)
    }

    fn build_table(&mut self) {
        let n = self.size();
        let k = self.generators.len();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let (p, g) = self.parent[y];
                let prefix = if p == NONE { x as u32 } else { table[x * n + p as usize] };
                table[x * n + y] = self.right[prefix as usize * k + g as usize];
            }
        }
        self.table = Some(table);
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// Distinct generator element indices.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `x · generators()[g]`.
    pub fn right_mul_gen(&self, x: usize, g: usize) -> usize {
        self.right[x * self.generators.len() + g] as usize
    }

    /// `generators()[g] · x`.
    pub fn left_mul_gen(&self, x: usize, g: usize) -> usize {
        self.left[x * self.generators.len() + g] as usize
    }

    /// Generator positions spelling `x`.
    pub fn word(&self, x: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x;
        loop {
            let (p, g) = self.parent[cur];
            word.push(g as usize);
            if p == NONE {
                break;
            }
            cur = p as usize;
        }
        word.reverse();
        word
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        if let Some(t) = &self.table {
            return t[x * self.size() + y] as usize;
        }
        let mut z = x;
        for g in self.word(y) {
            z = self.right_mul_gen(z, g);
        }
        z
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.multiply(x, x) == x
    }

    /// The exact set `{x : x·x = x}`, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Sorted elements of the subsemigroup generated by `gens`.
    pub fn closure_of(&self, gens: &[usize]) -> Vec<usize> {
        let mut b = ClosureBuilder::new(self.size(), |x, y| self.multiply(x, y));
        for &g in gens {
            b.add(g);
        }
        let mut out = b.elements().to_vec();
        out.sort_unstable();
        out
    }
}

/// Fails unless `mul` is associative on `0..n`: exhaustively up to 200
/// elements, on 10 000 seeded random triples beyond.
pub fn check_associative(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<()> {
    let check = |a: usize, b: usize, c: usize| {
        if mul(mul(a, b), c) != mul(a, mul(b, c)) {
            Err(Error::input(format!(
                "multiplication is not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})",
                a + 1,
                b + 1,
                c + 1
            )))
        } else {
            Ok(())
        }
    };
    if n <= 200 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..10_000 {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}

/// Incrementally maintained closure inside a semigroup on `0..universe`.
#[derive(Clone)]
pub struct ClosureBuilder<F> {
    mul: F,
    member: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl<F: Fn(usize, usize) -> usize> ClosureBuilder<F> {
    pub fn new(universe: usize, mul: F) -> Self {
        ClosureBuilder {
            mul,
            member: vec![false; universe],
            elements: Vec::new(),
            generators: Vec::new(),
        }
    }

    fn mark(&mut self, z: usize) {
        if !self.member[z] {
            self.member[z] = true;
            self.elements.push(z);
        }
    }

    /// Adds `y` as a generator; returns false if it was already generated.
    ///
    /// Every new product has the form `c·y·w` with `c` old or empty, so it
    /// suffices to seed with `y` and `c·y` and then close under right
    /// multiplication by generators.
    pub fn add(&mut self, y: usize) -> bool {
        if self.member[y] {
            return false;
        }
        self.generators.push(y);
        let start = self.elements.len();
        self.mark(y);
        for k in 0..start {
            let z = (self.mul)(self.elements[k], y);
            self.mark(z);
        }
        let mut k = start;
        while k < self.elements.len() {
            let z = self.elements[k];
            for gi in 0..self.generators.len() {
                let w = (self.mul)(z, self.generators[gi]);
                self.mark(w);
            }
            k += 1;
        }
        true
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in discovery order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// Walks `order`, keeping each element not generated by the earlier ones.
pub fn greedy_generating_set(universe: usize, mul: impl Fn(usize, usize) -> usize, order: &[usize]) -> Vec<usize> {
    let mut b = ClosureBuilder::new(universe, mul);
    for &x in order {
        b.add(x);
    }
    b.generators
}

/// Green's relations of a finite semigroup.
///
/// Class ids are numbered in order of their smallest element.
#[derive(Debug, Clone)]
pub struct GreensStructure {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    /// Arc `J → J′` whenever some element of `J` times a generator (on
    /// either side) lies in `J′ ≠ J`; reachability is the strict `J`-order.
    pub j_order: Digraph,
    j_order_rev: Digraph,
    pub idempotent: Vec<bool>,
    /// Per `J`-class: contains an idempotent.
    pub regular: Vec<bool>,
    h_of: HashMap<(usize, usize), usize>,
}

impl GreensStructure {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let n = s.size();
        let k = s.generators().len();
        let (r_class, r_count) = scc_ids(n, |x, i| (i < k).then(|| s.right_mul_gen(x, i)));
        let (l_class, l_count) = scc_ids(n, |x, i| (i < k).then(|| s.left_mul_gen(x, i)));
        let (j_class, j_count) = scc_ids(n, |x, i| {
            if i < k {
                Some(s.right_mul_gen(x, i))
            } else if i < 2 * k {
                Some(s.left_mul_gen(x, i - k))
            } else {
                None
            }
        });
        let mut h_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut h_class = vec![0; n];
        for x in 0..n {
            let next = h_of.len();
            h_class[x] = *h_of.entry((r_class[x], l_class[x])).or_insert(next);
        }
        let h_count = h_of.len();
        let mut j_order = Digraph::new(j_count);
        let mut j_order_rev = Digraph::new(j_count);
        for x in 0..n {
            for g in 0..k {
                for y in [s.right_mul_gen(x, g), s.left_mul_gen(x, g)] {
                    let (a, b) = (j_class[x], j_class[y]);
                    if a != b {
                        j_order.add_edge(a, b).expect("valid class ids");
                        j_order_rev.add_edge(b, a).expect("valid class ids");
                    }
                }
            }
        }
        let idempotent: Vec<bool> = (0..n).map(|x| s.is_idempotent(x)).collect();
        let mut regular = vec![false; j_count];
        for x in 0..n {
            if idempotent[x] {
                regular[j_class[x]] = true;
            }
        }
        GreensStructure {
            r_classes: partition_from_ids(&r_class, r_count),
            l_classes: partition_from_ids(&l_class, l_count),
            h_classes: partition_from_ids(&h_class, h_count),
            j_classes: partition_from_ids(&j_class, j_count),
            r_class,
            l_class,
            h_class,
            j_class,
            j_order,
            j_order_rev,
            idempotent,
            regular,
            h_of,
        }
    }

    pub fn j_count(&self) -> usize {
        self.j_classes.len()
    }

    /// No `J`-class lies strictly above `j`.
    pub fn is_maximal(&self, j: usize) -> bool {
        self.j_order_rev.successors(j).is_empty()
    }

    /// `J`-classes strictly below `j`, as a membership vector.
    pub fn strictly_below(&self, j: usize) -> Vec<bool> {
        let mut v = self.j_order.reachable_from(self.j_order.successors(j));
        v[j] = false;
        v
    }

    /// `J`-classes greater than or equal to `j`, as a membership vector.
    pub fn above_or_equal(&self, j: usize) -> Vec<bool> {
        self.j_order_rev.reachable_from(&[j])
    }

    /// The `H`-class `R ∩ L`, if non-empty.
    pub fn h_class_of(&self, r: usize, l: usize) -> Option<usize> {
        self.h_of.get(&(r, l)).copied()
    }

    /// `R`-class ids inside `j`, ascending.
    pub fn r_classes_in(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.j_classes[j].iter().map(|&x| self.r_class[x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `L`-class ids inside `j`, ascending.
    pub fn l_classes_in(&self, j: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.j_classes[j].iter().map(|&x| self.l_class[x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Generators of `s` whose `J`-class lies strictly above `j`.
    pub fn x_prime(&self, s: &FiniteSemigroup, j: usize) -> Vec<usize> {
        let above = self.above_or_equal(j);
        s.generators()
            .iter()
            .copied()
            .filter(|&g| self.j_class[g] != j && above[self.j_class[g]])
            .collect()
    }

    /// Positions in `s.generators()` of [`x_prime`](Self::x_prime).
    pub fn x_prime_positions(&self, s: &FiniteSemigroup, j: usize) -> Vec<usize> {
        let above = self.above_or_equal(j);
        (0..s.generators().len())
            .filter(|&p| {
                let c = self.j_class[s.generators()[p]];
                c != j && above[c]
            })
            .collect()
    }

    /// All elements in `J`-classes strictly below `j`, ascending.
    pub fn ideal_below(&self, j: usize) -> Vec<usize> {
        let below = self.strictly_below(j);
        (0..self.j_class.len()).filter(|&x| below[self.j_class[x]]).collect()
    }

    /// A set generating exactly the ideal strictly below `j`: classes are
    /// visited from the top down, keeping each element not yet generated.
    pub fn ideal_below_generators(&self, s: &FiniteSemigroup, j: usize) -> Vec<usize> {
        let below = self.strictly_below(j);
        let order = self.topological_j_order();
        let elements: Vec<usize> = order
            .into_iter()
            .filter(|&c| below[c])
            .flat_map(|c| self.j_classes[c].iter().copied())
            .collect();
        greedy_generating_set(s.size(), |x, y| s.multiply(x, y), &elements)
    }

    /// `J`-class ids with every class before all classes below it.
    pub fn topological_j_order(&self) -> Vec<usize> {
        let m = self.j_count();
        let mut indegree: Vec<usize> = (0..m).map(|c| self.j_order_rev.successors(c).len()).collect();
        let mut ready: std::collections::BTreeSet<usize> = (0..m).filter(|&c| indegree[c] == 0).collect();
        let mut out = Vec::with_capacity(m);
        while let Some(c) = ready.pop_first() {
            out.push(c);
            for &d in self.j_order.successors(c) {
                indegree[d] -= 1;
                if indegree[d] == 0 {
                    ready.insert(d);
                }
            }
        }
        out
    }

    /// The group `H`-class `h` as a permutation group via its right regular
    /// action on itself.
    pub fn group_h_class_as_permgroup(&self, s: &FiniteSemigroup, h: usize) -> Result<HClassGroup> {
        let members = &self.h_classes[h];
        if !members.iter().any(|&x| self.idempotent[x]) {
            return Err(Error::input("H-class contains no idempotent, so it is not a group"));
        }
        let position: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &x)| (x, p)).collect();
        let m = members.len();
        let mut perms = Vec::with_capacity(m);
        for &h_elem in members {
            let images = members
                .iter()
                .map(|&a| {
                    position
                        .get(&s.multiply(a, h_elem))
                        .copied()
                        .ok_or_else(|| Error::input("H-class is not closed under multiplication"))
                })
                .collect::<Result<Vec<_>>>()?;
            perms.push(Permutation::from_images(images)?);
        }
        let group = generate_group(m, &perms)?;
        if group.order() != m {
            return Err(Error::input("H-class does not act regularly on itself"));
        }
        let mut element_of = vec![0; m];
        let mut index_of = HashMap::new();
        for (&x, p) in members.iter().zip(&perms) {
            let g = group.index_of(p).expect("generated");
            element_of[g] = x;
            index_of.insert(x, g);
        }
        Ok(HClassGroup {
            group,
            element_of,
            index_of,
        })
    }

    /// The isomorphism from the principal factor of a regular `J`-class onto
    /// a Rees 0-matrix semigroup. `I` indexes the `R`-classes of `J` and `Λ`
    /// its `L`-classes, both ascending.
    pub fn principal_factor_iso(&self, s: &FiniteSemigroup, j: usize) -> Result<PrincipalFactorIso> {
        if !self.regular[j] {
            return Err(Error::input(
                "principal factor of a non-regular J-class is a null semigroup; no Rees 0-matrix form",
            ));
        }
        let e = *self.j_classes[j]
            .iter()
            .find(|&&x| self.idempotent[x])
            .expect("regular class has an idempotent");
        let he = self.group_h_class_as_permgroup(s, self.h_class[e])?;
        let r_classes = self.r_classes_in(j);
        let l_classes = self.l_classes_in(j);
        let (re, le) = (self.r_class[e], self.l_class[e]);
        let first_of = |r: usize, l: usize| {
            let h = self.h_class_of(r, l).expect("every H-class of a J-class is non-empty");
            self.h_classes[h][0]
        };
        let row_reps: Vec<usize> = r_classes.iter().map(|&r| first_of(r, le)).collect();
        let col_reps: Vec<usize> = l_classes.iter().map(|&l| first_of(re, l)).collect();
        let (rows, cols) = (r_classes.len(), l_classes.len());
        let mut matrix = Vec::with_capacity(rows * cols);
        for &q in &col_reps {
            for &r in &row_reps {
                let p = s.multiply(q, r);
                matrix.push(if self.j_class[p] == j {
                    Some(*he.index_of.get(&p).ok_or_else(|| {
                        Error::input("sandwich entry left the group H-class")
                    })?)
                } else {
                    None
                });
            }
        }
        let rzms = ReesZeroMatrixSemigroup::new(rows, cols, he.group.clone(), matrix)?;
        let order = he.group.order();
        let mut forward = HashMap::with_capacity(self.j_classes[j].len());
        let mut backward = vec![usize::MAX; rows * order * cols];
        for (i, &r) in row_reps.iter().enumerate() {
            for (g, &h) in he.element_of.iter().enumerate() {
                let rh = s.multiply(r, h);
                for (l, &q) in col_reps.iter().enumerate() {
                    let x = s.multiply(rh, q);
                    let code = rzms.encode(i, g, l);
                    if self.j_class[x] != j || forward.insert(x, code).is_some() {
                        return Err(Error::input("principal factor map is not a bijection"));
                    }
                    backward[code - 1] = x;
                }
            }
        }
        if forward.len() != self.j_classes[j].len() {
            return Err(Error::input("principal factor map does not cover the J-class"));
        }
        Ok(PrincipalFactorIso {
            j_class: j,
            rzms,
            r_classes,
            l_classes,
            idempotent: e,
            forward,
            backward,
        })
    }
}

/// A group `H`-class as a permutation group.
#[derive(Debug, Clone)]
pub struct HClassGroup {
    pub group: PermGroup,
    /// Semigroup element for each group element index.
    pub element_of: Vec<usize>,
    pub index_of: HashMap<usize, usize>,
}

/// Isomorphism from a principal factor `J*` onto a Rees 0-matrix semigroup.
#[derive(Debug, Clone)]
pub struct PrincipalFactorIso {
    pub j_class: usize,
    pub rzms: ReesZeroMatrixSemigroup,
    /// `R`-class id of each row index `i`.
    pub r_classes: Vec<usize>,
    /// `L`-class id of each column index `λ`.
    pub l_classes: Vec<usize>,
    pub idempotent: usize,
    forward: HashMap<usize, usize>,
    backward: Vec<usize>,
}

impl PrincipalFactorIso {
    /// Non-zero code of a `J` element; `None` outside `J`.
    pub fn forward(&self, x: usize) -> Option<usize> {
        self.forward.get(&x).copied()
    }

    /// Element of `J` for a non-zero code; `None` for the zero.
    pub fn backward(&self, code: usize) -> Option<usize> {
        (code != 0).then(|| self.backward[code - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Transformation {
        Transformation::parse(s).unwrap()
    }

    fn w() -> Enumerated<Transformation> {
        let gens: Vec<Transformation> = [
            "1 3 4 1 5 5 5",
            "1 4 1 3 5 5 5",
            "3 3 1 2 5 5 5",
            "4 4 2 3 5 5 5",
            "1 1 3 4 5 5 6",
            "1 2 2 4 5 6 7",
            "1 4 3 4 5 6 7",
            "1 2 4 4 5 6 7",
        ]
        .iter()
        .map(|s| t(s))
        .collect();
        FiniteSemigroup::from_transformations(&gens, &Bounds::default()).unwrap()
    }

    fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
        let n = index + period - 1;
        let reduce = |e: usize| if e < index + period { e } else { index + (e - index) % period };
        let table: Vec<Vec<usize>> = (1..=n)
            .map(|a| (1..=n).map(|b| reduce(a + b) - 1).collect())
            .collect();
        FiniteSemigroup::from_table(&table, Some(&[0]), &Bounds::default())
            .unwrap()
            .semigroup
    }

    /// `x J y` iff `S¹xS¹ = S¹yS¹`, computed directly.
    fn ideal(s: &FiniteSemigroup, x: usize, side: u8) -> Vec<bool> {
        let n = s.size();
        let mut m = vec![false; n];
        m[x] = true;
        for a in 0..n {
            match side {
                0 => m[s.multiply(x, a)] = true,
                1 => m[s.multiply(a, x)] = true,
                _ => {
                    m[s.multiply(x, a)] = true;
                    m[s.multiply(a, x)] = true;
                    for b in 0..n {
                        m[s.multiply(s.multiply(a, x), b)] = true;
                    }
                }
            }
        }
        m
    }

    fn check_greens_against_ideals(s: &FiniteSemigroup) {
        let gs = GreensStructure::new(s);
        let n = s.size();
        let rights: Vec<Vec<bool>> = (0..n).map(|x| ideal(s, x, 0)).collect();
        let lefts: Vec<Vec<bool>> = (0..n).map(|x| ideal(s, x, 1)).collect();
        let twos: Vec<Vec<bool>> = (0..n).map(|x| ideal(s, x, 2)).collect();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(gs.r_class[x] == gs.r_class[y], rights[x] == rights[y]);
                assert_eq!(gs.l_class[x] == gs.l_class[y], lefts[x] == lefts[y]);
                assert_eq!(gs.j_class[x] == gs.j_class[y], twos[x] == twos[y]);
                assert_eq!(
                    gs.h_class[x] == gs.h_class[y],
                    gs.r_class[x] == gs.r_class[y] && gs.l_class[x] == gs.l_class[y]
                );
                // Reachability in the J-order matches ideal containment.
                let jx = gs.j_class[x];
                let jy = gs.j_class[y];
                let below = jx != jy && gs.strictly_below(jx)[jy];
                assert_eq!(below, twos[x][y] && !twos[y][x]);
            }
        }
    }

    #[test]
    fn transformation_basics() {
        let a = t("2 3 1");
        let b = t("1 1 3");
        assert_eq!(a.then(&b).label(), "1 3 1");
        assert_eq!(b.rank(), 2);
        assert!(Transformation::parse("1 4 2").is_err());
        assert!(Transformation::parse("1 x").is_err());
        assert!(Transformation::parse("0 1").is_err());
    }

    #[test]
    fn closure_examples() {
        let single = FiniteSemigroup::from_transformations(&[t("1 1")], &Bounds::default()).unwrap();
        assert_eq!(single.semigroup.size(), 1);
        // T2 from the constant map, the transposition and the identity.
        let t2 = FiniteSemigroup::from_transformations(&[t("1 1"), t("2 1"), t("1 2")], &Bounds::default()).unwrap();
        assert_eq!(t2.semigroup.size(), 4);
        assert_eq!(t2.semigroup.generators(), &[0, 1, 2]);
        let small = Bounds {
            semigroup_elements: 3,
            ..Bounds::default()
        };
        assert!(matches!(
            FiniteSemigroup::from_transformations(&[t("1 1"), t("2 1"), t("1 2")], &small),
            Err(Error::Capacity { .. })
        ));
        assert!(FiniteSemigroup::from_transformations(&[], &Bounds::default()).is_err());
    }

    #[test]
    fn table_and_traced_products_agree() {
        let e = w();
        let s = &e.semigroup;
        let traced = Bounds {
            table_elements: 0,
            ..Bounds::default()
        };
        let gens: Vec<Transformation> = s.generators().iter().map(|&g| e.elements[g].clone()).collect();
        let e2 = FiniteSemigroup::from_transformations(&gens, &traced).unwrap();
        for x in (0..s.size()).step_by(7) {
            for y in 0..s.size() {
                let expected = e.elements[x].then(&e.elements[y]);
                assert_eq!(e.elements[s.multiply(x, y)], expected);
                assert_eq!(e2.elements[e2.semigroup.multiply(x, y)], expected);
            }
        }
    }

    #[test]
    fn table_validation() {
        let bounds = Bounds::default();
        assert!(FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]], None, &bounds).is_ok());
        assert!(FiniteSemigroup::from_table(&[vec![0, 2], vec![1, 0]], None, &bounds).is_err());
        // x·y = y+1 capped is not associative.
        let bad = vec![vec![1, 1, 2], vec![1, 2, 2], vec![2, 2, 0]];
        assert!(FiniteSemigroup::from_table(&bad, None, &bounds).is_err());
        assert!(FiniteSemigroup::from_table(&[], None, &bounds).is_err());
    }

    #[test]
    fn monogenic_structure() {
        let s = monogenic(3, 1);
        assert_eq!(s.size(), 3);
        let gs = GreensStructure::new(&s);
        assert_eq!(gs.j_count(), 3);
        assert_eq!(gs.topological_j_order(), vec![0, 1, 2]);
        // {a²} lies above {a³} only, and the ideal below is generated by a³.
        let j = gs.j_class[1];
        assert_eq!(gs.ideal_below_generators(&s, j), vec![2]);
        assert!(gs.ideal_below_generators(&s, gs.j_class[2]).is_empty());
        assert_eq!(gs.x_prime(&s, j), vec![0]);
        assert!(gs.x_prime(&s, gs.j_class[0]).is_empty());
        assert_eq!(s.idempotents(), vec![2]);
        check_greens_against_ideals(&s);
    }

    #[test]
    fn greens_agree_with_ideals() {
        check_greens_against_ideals(&w().semigroup);
        let t3 = FiniteSemigroup::from_transformations(&[t("2 1 3"), t("2 3 1"), t("1 1 3")], &Bounds::default()).unwrap();
        assert_eq!(t3.semigroup.size(), 27);
        check_greens_against_ideals(&t3.semigroup);
    }

    #[test]
    fn group_is_one_class() {
        let s3 = FiniteSemigroup::from_transformations(&[t("2 1 3"), t("2 3 1")], &Bounds::default()).unwrap();
        let gs = GreensStructure::new(&s3.semigroup);
        assert_eq!(gs.j_count(), 1);
        assert_eq!(gs.h_classes.len(), 1);
        assert_eq!(s3.semigroup.idempotents().len(), 1);
        let hg = gs.group_h_class_as_permgroup(&s3.semigroup, 0).unwrap();
        assert_eq!(hg.group.order(), 6);
    }

    #[test]
    fn left_zero_idempotents() {
        let table: Vec<Vec<usize>> = (0..4).map(|a| vec![a; 4]).collect();
        let s = FiniteSemigroup::from_table(&table, None, &Bounds::default()).unwrap().semigroup;
        assert_eq!(s.idempotents().len(), 4);
    }

    #[test]
    fn stability() {
        let s = w().semigroup;
        let gs = GreensStructure::new(&s);
        for x in 0..s.size() {
            for y in 0..s.size() {
                let xy = s.multiply(x, y);
                assert_eq!(gs.j_class[x] == gs.j_class[xy], gs.r_class[x] == gs.r_class[xy]);
                let yx = s.multiply(y, x);
                assert_eq!(gs.j_class[x] == gs.j_class[yx], gs.l_class[x] == gs.l_class[yx]);
            }
        }
    }

    #[test]
    fn w_jclass_shape() {
        let e = w();
        let s = &e.semigroup;
        let gs = GreensStructure::new(s);
        let j = gs.j_class[0];
        assert_eq!(gs.l_classes_in(j).len(), 4);
        assert_eq!(gs.r_classes_in(j).len(), 6);
        assert!(gs.regular[j]);
        let xp: Vec<String> = gs.x_prime(s, j).iter().map(|&x| s.label(x).to_string()).collect();
        assert_eq!(xp, vec!["1 1 3 4 5 5 6", "1 2 2 4 5 6 7", "1 4 3 4 5 6 7", "1 2 4 4 5 6 7"]);

        let gens = gs.ideal_below_generators(s, j);
        assert_eq!(s.closure_of(&gens), gs.ideal_below(j));

        let pfi = gs.principal_factor_iso(s, j).unwrap();
        assert_eq!(pfi.rzms.rows(), 6);
        assert_eq!(pfi.rzms.cols(), 4);
        let hg = gs.group_h_class_as_permgroup(s, gs.h_class[pfi.idempotent]).unwrap();
        for (a, &x) in hg.element_of.iter().enumerate() {
            for (b, &y) in hg.element_of.iter().enumerate() {
                let prod = hg.group.elements()[a].then(&hg.group.elements()[b]);
                assert_eq!(hg.element_of[hg.group.index_of(&prod).unwrap()], s.multiply(x, y));
            }
        }
        check_principal_factor(s, &gs, &pfi);
    }

    fn check_principal_factor(s: &FiniteSemigroup, gs: &GreensStructure, pfi: &PrincipalFactorIso) {
        let jx = &gs.j_classes[pfi.j_class];
        for &x in jx {
            let fx = pfi.forward(x).unwrap();
            assert_eq!(pfi.backward(fx), Some(x));
            for &y in jx {
                let xy = s.multiply(x, y);
                let prod = pfi.rzms.multiply(fx, pfi.forward(y).unwrap());
                if gs.j_class[xy] == pfi.j_class {
                    assert_eq!(pfi.forward(xy), Some(prod));
                } else {
                    assert_eq!(prod, 0);
                }
            }
        }
    }

    #[test]
    fn principal_factors_of_full_transformation_monoid() {
        let t3 = FiniteSemigroup::from_transformations(&[t("2 1 3"), t("2 3 1"), t("1 1 3")], &Bounds::default()).unwrap();
        let s = &t3.semigroup;
        let gs = GreensStructure::new(s);
        assert_eq!(gs.j_count(), 3);
        for j in 0..gs.j_count() {
            let pfi = gs.principal_factor_iso(s, j).unwrap();
            assert!(pfi.rzms.is_regular());
            check_principal_factor(s, &gs, &pfi);
        }
    }

    #[test]
    fn non_regular_principal_factor_is_rejected() {
        let s = monogenic(3, 1);
        let gs = GreensStructure::new(&s);
        assert!(matches!(gs.principal_factor_iso(&s, 0), Err(Error::Input(_))));
        assert!(gs.group_h_class_as_permgroup(&s, gs.h_class[0]).is_err());
    }

    #[test]
    fn closure_builder_matches_full_closure() {
        let e = w();
        let s = &e.semigroup;
        let mut b = ClosureBuilder::new(s.size(), |x, y| s.multiply(x, y));
        let picks = [40usize, 3, 17, 90, 5];
        for (k, &x) in picks.iter().enumerate() {
            let x = x % s.size();
            b.add(x);
            // Brute-force closure of the generators so far.
            let gens: Vec<usize> = picks[..=k].iter().map(|&p| p % s.size()).collect();
            let mut set: std::collections::BTreeSet<usize> = gens.iter().copied().collect();
            loop {
                let cur: Vec<usize> = set.iter().copied().collect();
                let before = set.len();
                for &a in &cur {
                    for &c in &cur {
                        set.insert(s.multiply(a, c));
                    }
                }
                if set.len() == before {
                    break;
                }
            }
            let mut got = b.elements().to_vec();
            got.sort_unstable();
            assert_eq!(got, set.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn word_spells_element() {
        let s = w().semigroup;
        for x in 0..s.size() {
            let word = s.word(x);
            let mut z = s.generators()[word[0]];
            for &g in &word[1..] {
                z = s.right_mul_gen(z, g);
            }
            assert_eq!(z, x);
        }
    }

    #[test]
    fn rzms_as_semigroup() {
        let c2 = generate_group(2, &[Permutation::parse("(1 2)", 2).unwrap()]).unwrap();
        let b = ReesZeroMatrixSemigroup::brandt(c2, 2).unwrap();
        let s = b.to_semigroup(&Bounds::default()).unwrap();
        assert_eq!(s.size(), 9);
        let gs = GreensStructure::new(&s);
        assert_eq!(gs.j_count(), 2);
        assert!(gs.regular.iter().all(|&r| r));
    }
}
