//! Desk-scale permutation groups.
//!
//! Permutations act on the right: `a.then(&b)` (also written `&a * &b`) is the
//! permutation that applies `a` first and `b` second. With this convention
//! `g⁻¹Vg` is [`conjugate_subgroup`] and right cosets are `V·g`.
//!
//! Groups store their complete, sorted element list, so everything here is
//! exact and suitable only for small groups. The subgroup lattice is built by
//! cyclic extension and is capped by a configurable order bound.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A bijection of `{0, …, degree − 1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::input(format!(
                    "image list {images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::input(format!(
                        "point {} exceeds degree {degree}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::input(format!(
                        "point {} appears twice in cycle notation",
                        p + 1
                    )));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4)"`; `"()"` and the
    /// words `"id"`/`"1"` denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text).map_err(|e| Error::input(e.to_string()))?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Applies `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// 1-based disjoint cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(p + 1).to_string());
                p = self.images[p];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Error from [`parse_cycles`], carrying a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for CycleParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for CycleParseError {}

/// Parses 1-based cycle notation into 0-based cycles.
pub fn parse_cycles(text: &str) -> std::result::Result<Vec<Vec<usize>>, CycleParseError> {
    let trimmed = text.trim();
    if trimmed == "id" || trimmed == "1" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let err = |column: usize, message: &str| CycleParseError {
        column,
        message: message.to_string(),
    };
    let chars: Vec<char> = text.chars().collect();
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c != '(' {
            return Err(err(i + 1, "expected '('"));
        }
        let open = i;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
                i += 1;
            }
            if i >= chars.len() {
                return Err(err(open + 1, "unclosed '('"));
            }
            if chars[i] == ')' {
                i += 1;
                break;
            }
            if !chars[i].is_ascii_digit() {
                return Err(err(i + 1, "expected a point number or ')'"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let point: usize = digits
                .parse()
                .map_err(|_| err(start + 1, "point number out of range"))?;
            if point == 0 {
                return Err(err(start + 1, "points are numbered from 1"));
            }
            cycle.push(point - 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

/// A permutation group with its full sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group<order {}>{:?}", self.order(), self.generators)
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Wraps an element list already known to form a group.
    pub(crate) fn from_closed(
        degree: usize,
        mut elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in increasing order; the identity is always first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Full multiplication table over element indices.
    pub fn multiplication_table(&self) -> Vec<usize> {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                table.push(self.index_of(&a.then(b)).expect("group is closed"));
            }
        }
        table
    }
}

/// Enumerates `⟨gens⟩` by closure under right multiplication.
pub fn generate_group(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::input(format!(
            "generator {bad} has degree {}, expected {degree}",
            bad.degree()
        )));
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    let mut elements = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        elements.push(x);
    }
    Ok(PermGroup::from_closed(degree, elements, gens.to_vec()))
}

/// True iff `sub` is non-empty, contained in `group`, contains the identity
/// and is closed under composition.
pub fn is_subgroup(sub: &[Permutation], group: &PermGroup) -> bool {
    if sub.is_empty() || !sub.iter().all(|p| group.contains(p)) {
        return false;
    }
    let set: HashSet<&Permutation> = sub.iter().collect();
    if !set.contains(group.identity()) {
        return false;
    }
    sub.iter()
        .all(|a| sub.iter().all(|b| set.contains(&a.then(b))))
}

/// `g⁻¹Vg`.
pub fn conjugate_subgroup(v: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    if g.degree() != v.degree() {
        return Err(Error::input(format!(
            "conjugating element has degree {}, group has degree {}",
            g.degree(),
            v.degree()
        )));
    }
    let elements = v.elements.iter().map(|x| x.conjugate_by(g)).collect();
    let generators = v.generators.iter().map(|x| x.conjugate_by(g)).collect();
    Ok(PermGroup::from_closed(v.degree, elements, generators))
}

fn require_subgroup(group: &PermGroup, v: &PermGroup) -> Result<()> {
    if v.is_subgroup_of(group) {
        Ok(())
    } else {
        Err(Error::input("not a subgroup of the parent group"))
    }
}

/// `N_G(V) = {g ∈ G : g⁻¹Vg = V}`.
pub fn normalizer(group: &PermGroup, v: &PermGroup) -> Result<PermGroup> {
    require_subgroup(group, v)?;
    let elements: Vec<Permutation> = group
        .elements
        .iter()
        .filter(|g| v.generators.iter().all(|x| v.contains(&x.conjugate_by(g))))
        .cloned()
        .collect();
    let generators = small_generating_set(group.degree, &elements);
    Ok(PermGroup::from_closed(group.degree, elements, generators))
}

/// Representatives of the right cosets `V·r` of `V` in `G`, identity first.
pub fn right_coset_reps(group: &PermGroup, v: &PermGroup) -> Result<Vec<Permutation>> {
    require_subgroup(group, v)?;
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::with_capacity(group.order() / v.order());
    for (idx, g) in group.elements.iter().enumerate() {
        if covered[idx] {
            continue;
        }
        reps.push(g.clone());
        for x in &v.elements {
            covered[group.index_of(&x.then(g)).expect("coset lies in group")] = true;
        }
    }
    Ok(reps)
}

/// As [`right_coset_reps`], but every coset other than `V` itself is
/// represented by a randomly chosen member.
pub fn right_coset_reps_random<R: Rng>(
    group: &PermGroup,
    v: &PermGroup,
    rng: &mut R,
) -> Result<Vec<Permutation>> {
    let reps = right_coset_reps(group, v)?;
    Ok(reps
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            if k == 0 {
                return r;
            }
            let x = v.elements.choose(rng).expect("groups are non-empty");
            x.then(&r)
        })
        .collect())
}

/// One conjugacy class of maximal subgroups of a parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubgroupClass {
    pub representative: PermGroup,
    pub normalizer: PermGroup,
    /// Right transversal of the normalizer; conjugating the representative by
    /// these yields each member of the class exactly once.
    pub normalizer_coset_reps: Vec<Permutation>,
}

/// Index-based view of a group used for lattice computations.
struct IndexedGroup<'a> {
    group: &'a PermGroup,
    table: Vec<usize>,
    inverse: Vec<usize>,
    words: usize,
}

type Bits = Vec<u64>;

impl<'a> IndexedGroup<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let n = group.order();
        let table = group.multiplication_table();
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("inverse exists"))
            .collect();
        IndexedGroup {
            group,
            table,
            inverse,
            words: n.div_ceil(64),
        }
    }

    fn n(&self) -> usize {
        self.group.order()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n() + b]
    }

    fn empty(&self) -> Bits {
        vec![0; self.words]
    }

    /// Closure of `gens` as a bit set of element indices.
    fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = self.empty();
        set_bit(&mut bits, 0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !get_bit(&bits, y) {
                    set_bit(&mut bits, y);
                    queue.push(y);
                }
            }
        }
        bits
    }

    fn conjugate(&self, bits: &Bits, g: usize) -> Bits {
        let gi = self.inverse[g];
        let mut out = self.empty();
        for x in iter_bits(bits) {
            set_bit(&mut out, self.mul(self.mul(gi, x), g));
        }
        out
    }

    fn to_group(&self, bits: &Bits, gens: &[usize]) -> PermGroup {
        let elements = iter_bits(bits)
            .map(|i| self.group.elements[i].clone())
            .collect();
        let generators = gens
            .iter()
            .map(|&i| self.group.elements[i].clone())
            .collect();
        PermGroup::from_closed(self.group.degree, elements, generators)
    }
}

fn set_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn iter_bits(bits: &Bits) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

fn popcount(bits: &Bits) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Greedy generating set: keep each element not already generated.
fn small_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut generated: HashSet<Permutation> = HashSet::new();
    generated.insert(Permutation::identity(degree));
    for x in elements {
        if generated.contains(x) {
            continue;
        }
        gens.push(x.clone());
        let group = generate_group(degree, &gens).expect("degrees agree");
        generated = group.elements.into_iter().collect();
    }
    gens
}

/// Subgroups as `(bits, generators)` pairs, by cyclic extension.
fn subgroup_bits(ig: &IndexedGroup<'_>) -> Vec<(Bits, Vec<usize>)> {
    let n = ig.n();
    let mut index: HashMap<Bits, usize> = HashMap::new();
    let mut subgroups: Vec<(Bits, Vec<usize>)> = Vec::new();
    let mut cyclic_gens: Vec<(usize, Bits)> = Vec::new();
    for a in 0..n {
        let bits = ig.closure(&[a]);
        if !index.contains_key(&bits) {
            index.insert(bits.clone(), subgroups.len());
            let gens = if a == 0 { Vec::new() } else { vec![a] };
            subgroups.push((bits.clone(), gens));
            if a != 0 {
                cyclic_gens.push((a, bits));
            }
        }
    }
    let mut next = 0;
    while next < subgroups.len() {
        let (h, hgens) = subgroups[next].clone();
        next += 1;
        for (c, cbits) in &cyclic_gens {
            if is_subset(cbits, &h) {
                continue;
            }
            let mut gens = hgens.clone();
            gens.push(*c);
            let k = ig.closure(&gens);
            if !index.contains_key(&k) {
                index.insert(k.clone(), subgroups.len());
                subgroups.push((k, gens));
            }
        }
    }
    subgroups
}

/// Every subgroup of `group`, each exactly once, ordered by size and then by
/// element list.
pub fn all_subgroups(group: &PermGroup, bound: usize) -> Result<Vec<PermGroup>> {
    if group.order() > bound {
        return Err(Error::capacity("subgroup lattice", group.order(), bound));
    }
    let ig = IndexedGroup::new(group);
    let mut out: Vec<PermGroup> = subgroup_bits(&ig)
        .iter()
        .map(|(bits, gens)| ig.to_group(bits, gens))
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(out)
}

/// Conjugacy class representatives of the maximal subgroups of `group`,
/// largest first.
pub fn maximal_subgroup_classes(group: &PermGroup, bound: usize) -> Result<Vec<MaximalSubgroupClass>> {
    if group.order() > bound {
        return Err(Error::capacity("subgroup lattice", group.order(), bound));
    }
    if group.order() == 1 {
        return Ok(Vec::new());
    }
    let ig = IndexedGroup::new(group);
    let n = ig.n();
    let subs = subgroup_bits(&ig);
    let proper: Vec<&(Bits, Vec<usize>)> = subs.iter().filter(|(b, _)| popcount(b) < n).collect();
    let mut maximal: Vec<&(Bits, Vec<usize>)> = proper
        .iter()
        .filter(|(m, _)| {
            let size = popcount(m);
            !proper
                .iter()
                .any(|(k, _)| popcount(k) > size && is_subset(m, k))
        })
        .copied()
        .collect();
    // Largest first, then lexicographic on the element list.
    let key = |b: &Bits| iter_bits(b).collect::<Vec<_>>();
    maximal.sort_by(|(a, _), (b, _)| popcount(b).cmp(&popcount(a)).then_with(|| key(a).cmp(&key(b))));

    let mut assigned: HashSet<Bits> = HashSet::new();
    let mut classes = Vec::new();
    for (m, gens) in maximal {
        if assigned.contains(m) {
            continue;
        }
        for g in 0..n {
            assigned.insert(ig.conjugate(m, g));
        }
        let representative = ig.to_group(m, gens);
        let normalizer = normalizer(group, &representative)?;
        let normalizer_coset_reps = right_coset_reps(group, &normalizer)?;
        classes.push(MaximalSubgroupClass {
            representative,
            normalizer,
            normalizer_coset_reps,
        });
    }
    Ok(classes)
}
