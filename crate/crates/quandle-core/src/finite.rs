//! Finite quandles presented by operation tables.
//!
//! Elements are dense indices `0..n`; labels are cosmetic. The left
//! operation table is always materialized from the right one by column
//! inversion, so both directions are O(1).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{vec, string::ToString};

use crate::group::{GroupElement, Perm};
use crate::{Error, Quandle, Result};

/// One failed axiom instance, citing the witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ▷ x != x`.
    Idempotence { x: usize },
    /// Column `y` of the table is not a bijection: `x1 ▷ y = x2 ▷ y`.
    RightTranslationNotBijective { y: usize, x1: usize, x2: usize },
    /// `(x ▷ y) ▷ z != (x ▷ z) ▷ (y ▷ z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

/// Outcome of an exhaustive axiom check. Violations are capped at
/// [`AxiomReport::CAP`]; `truncated` records whether the cap was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
    pub truncated: bool,
}

impl AxiomReport {
    pub const CAP: usize = 100;

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively check the quandle axioms on a right-operation table.
///
/// Returns an input error for malformed tables (non-square or
/// out-of-range entries); otherwise a report listing every violating
/// pair/triple up to the cap.
pub fn check_axioms(rt: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = rt.len();
    for (x, row) in rt.iter().enumerate() {
        if row.len() != n {
            return Err(Error::input(format!(
                "table is not square: row {x} has length {} but there are {n} rows",
                row.len()
            )));
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::input(format!(
                    "entry [{x}][{y}] = {v} is out of range for size {n}"
                )));
            }
        }
    }

    let mut report = AxiomReport {
        violations: Vec::new(),
        truncated: false,
    };
    let push = |report: &mut AxiomReport, v: AxiomViolation| {
        if report.violations.len() < AxiomReport::CAP {
            report.violations.push(v);
        } else {
            report.truncated = true;
        }
    };

    for x in 0..n {
        if rt[x][x] != x {
            push(&mut report, AxiomViolation::Idempotence { x });
        }
    }
    for y in 0..n {
        let mut preimage = vec![usize::MAX; n];
        for x in 0..n {
            let v = rt[x][y];
            if preimage[v] != usize::MAX {
                push(
                    &mut report,
                    AxiomViolation::RightTranslationNotBijective {
                        y,
                        x1: preimage[v],
                        x2: x,
                    },
                );
            } else {
                preimage[v] = x;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if rt[rt[x][y]][z] != rt[rt[x][z]][rt[y][z]] {
                    push(&mut report, AxiomViolation::Distributivity { x, y, z });
                }
            }
        }
    }
    Ok(report)
}

/// A finite quandle with both operation tables materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    size: usize,
    rt: Vec<Vec<usize>>,
    lt: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl FiniteQuandle {
    /// Build from a right-operation table, verifying the axioms.
    pub fn from_rt(rt: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rt_labeled(rt, None)
    }

    pub fn from_rt_labeled(rt: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let report = check_axioms(&rt)?;
        if !report.passed() {
            return Err(Error::domain(format!(
                "table violates quandle axioms, first violation: {:?}",
                report.violations[0]
            )));
        }
        let n = rt.len();
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(Error::input(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
        }
        // lt is the column inverse of rt: lt[rt[x][y]][y] = x.
        let mut lt = vec![vec![0usize; n]; n];
        for y in 0..n {
            for x in 0..n {
                lt[rt[x][y]][y] = x;
            }
        }
        Ok(FiniteQuandle {
            size: n,
            rt,
            lt,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rt(&self) -> &[Vec<usize>] {
        &self.rt
    }

    pub fn lt(&self) -> &[Vec<usize>] {
        &self.lt
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn op_right(&self, x: usize, y: usize) -> usize {
        self.rt[x][y]
    }

    pub fn op_left(&self, x: usize, y: usize) -> usize {
        self.lt[x][y]
    }

    /// The trivial quandle: `x ▷ y = x`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("empty quandle"));
        }
        Self::from_rt((0..n).map(|x| vec![x; n]).collect())
    }

    /// The dihedral quandle `R_n`: `x ▷ y = 2y − x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("empty quandle"));
        }
        Self::from_rt(
            (0..n)
                .map(|x| (0..n).map(|y| (2 * y + n - x % n) % n).collect())
                .collect(),
        )
    }

    /// The Alexander quandle on `Z/m` with `x ▷ y = t(x−y)+y`; `t` must
    /// be a unit mod `m`.
    pub fn alexander(m: u64, t: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("modulus must be positive"));
        }
        let t = t % m;
        let ti = match mod_inverse(t, m) {
            Some(ti) => ti,
            None => {
                return Err(Error::input(format!("{t} is not a unit modulo {m}")));
            }
        };
        let m_us = m as usize;
        let rt = (0..m_us)
            .map(|x| {
                (0..m_us)
                    .map(|y| ((t * ((x as u64 + m - y as u64) % m) + y as u64) % m) as usize)
                    .collect()
            })
            .collect();
        let q = Self::from_rt(rt)?;
        // sanity: the left table must agree with t^{-1}(x-y)+y
        debug_assert!((0..m_us).all(|x| (0..m_us).all(|y| {
            q.lt[x][y] == ((ti * ((x as u64 + m - y as u64) % m) + y as u64) % m) as usize
        })));
        Ok(q)
    }

    /// Orbits of the inner action (connected components).
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if !orbit.insert(x) {
                    continue;
                }
                seen[x] = true;
                for y in 0..self.size {
                    stack.push(self.rt[x][y]);
                    stack.push(self.lt[x][y]);
                }
            }
            out.push(orbit);
        }
        out
    }

    /// Smallest subset containing `subset` closed under `▷` and `◁`.
    pub fn subquandle_generated(&self, subset: &[usize]) -> Result<BTreeSet<usize>> {
        if subset.is_empty() {
            return Err(Error::input("generating subset is empty"));
        }
        for &x in subset {
            if x >= self.size {
                return Err(Error::input(format!("element {x} out of range")));
            }
        }
        let mut set: BTreeSet<usize> = subset.iter().copied().collect();
        loop {
            let mut added = Vec::new();
            for &a in &set {
                for &b in &set {
                    for v in [self.rt[a][b], self.lt[a][b]] {
                        if !set.contains(&v) {
                            added.push(v);
                        }
                    }
                }
            }
            if added.is_empty() {
                return Ok(set);
            }
            set.extend(added);
        }
    }

    /// Restrict to a subset that is closed under both operations,
    /// reindexing elements in ascending order.
    pub fn subquandle(&self, subset: &BTreeSet<usize>) -> Result<FiniteQuandle> {
        let index: BTreeMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut rt = vec![vec![0; subset.len()]; subset.len()];
        for (&x, &i) in &index {
            for (&y, &j) in &index {
                let v = self.rt[x][y];
                match index.get(&v) {
                    Some(&k) => rt[i][j] = k,
                    None => {
                        return Err(Error::input(format!(
                            "subset not closed: {x} ▷ {y} = {v} escapes"
                        )));
                    }
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| subset.iter().map(|&x| l[x].clone()).collect());
        FiniteQuandle::from_rt_labeled(rt, labels)
    }
}

impl Quandle for FiniteQuandle {
    type Elem = usize;

    fn right(&self, a: &usize, b: &usize) -> usize {
        self.rt[*a][*b]
    }

    fn left(&self, a: &usize, b: &usize) -> usize {
        self.lt[*a][*b]
    }
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn mod_inverse(t: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd(t as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Anything that can serve as a carrier element for a conjugation
/// quandle.
pub trait Conjugable: Clone + Eq + Ord {
    /// `by⁻¹ · self · by`.
    fn conj(&self, by: &Self) -> Self;
    fn describe(&self) -> String;
}

impl Conjugable for Perm {
    fn conj(&self, by: &Self) -> Self {
        by.inverse().compose(self).compose(by)
    }
    fn describe(&self) -> String {
        self.cycle_string()
    }
}

impl Conjugable for GroupElement {
    fn conj(&self, by: &Self) -> Self {
        self.conjugate_by(by)
    }
    fn describe(&self) -> String {
        self.display()
    }
}

/// Conjugation quandle on a carrier closed under conjugation:
/// `x ▷ y = y⁻¹xy`. Element order follows the carrier slice.
pub fn conjugation_quandle<T: Conjugable>(carrier: &[T]) -> Result<FiniteQuandle> {
    if carrier.is_empty() {
        return Err(Error::input("empty carrier"));
    }
    let mut index = BTreeMap::new();
    for (i, g) in carrier.iter().enumerate() {
        if index.insert(g.clone(), i).is_some() {
            return Err(Error::input(format!(
                "carrier contains {} twice",
                g.describe()
            )));
        }
    }
    let n = carrier.len();
    let mut rt = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let c = carrier[x].conj(&carrier[y]);
            match index.get(&c) {
                Some(&k) => rt[x][y] = k,
                None => {
                    return Err(Error::input(format!(
                        "carrier not closed under conjugation: {} ▷ {} = {} escapes",
                        carrier[x].describe(),
                        carrier[y].describe(),
                        c.describe()
                    )));
                }
            }
        }
    }
    let labels = carrier.iter().map(|g| g.describe()).collect();
    FiniteQuandle::from_rt_labeled(rt, Some(labels))
}

/// All transpositions of `S_n`, in lexicographic order of `(a, b)`.
pub fn transpositions(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(Perm::transposition(n, a, b));
        }
    }
    out
}

/// Conjugation quandle of the transpositions of `S_n`.
pub fn transpositions_quandle(n: usize) -> Result<FiniteQuandle> {
    conjugation_quandle(&transpositions(n))
}

/// The seventeen-element quotient of the Dehn quandle of a genus-2
/// surface: the subset `{(0,e),(2,e)} ∪ {(1,(a b))}` of `Z/10 × S_6`
/// under conjugation. Returns the quandle together with the embedding
/// (the carrier, index by index).
pub fn genus2_seventeen() -> (FiniteQuandle, Vec<GroupElement>) {
    let e = Perm::identity(6);
    let mut carrier = vec![
        GroupElement::cyclic_perm(0, 10, e.clone()),
        GroupElement::cyclic_perm(2, 10, e),
    ];
    for t in transpositions(6) {
        carrier.push(GroupElement::cyclic_perm(1, 10, t));
    }
    let q = conjugation_quandle(&carrier).expect("carrier is closed under conjugation");
    (q, carrier)
}

/// The inner augmentation of a finite quandle: `ℓ(q)` is the permutation
/// `x ↦ x ▷ q`, together with the group it generates.
#[derive(Debug, Clone)]
pub struct InnerAugmentation {
    /// `ℓ(q)` for each element.
    pub twists: Vec<Perm>,
    /// BFS enumeration of the generated group, up to the cap.
    pub group: Vec<Perm>,
    /// Whether `group` is the whole generated group.
    pub group_complete: bool,
}

/// Enumerate the group generated by `gens` breadth-first, up to `cap`
/// elements. Deterministic: seeds and products explored in order.
pub fn generated_permutation_group(gens: &[Perm], degree: usize, cap: usize) -> (Vec<Perm>, bool) {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut order: Vec<Perm> = Vec::new();
    let id = Perm::identity(degree);
    seen.insert(id.clone());
    order.push(id);
    let mut frontier = 0;
    while frontier < order.len() {
        if order.len() >= cap {
            return (order, false);
        }
        let g = order[frontier].clone();
        frontier += 1;
        for h in gens {
            let gh = g.compose(h);
            if seen.insert(gh.clone()) {
                order.push(gh);
                if order.len() >= cap {
                    return (order, false);
                }
            }
        }
    }
    (order, true)
}

/// Compute the inner augmentation and verify both augmented-quandle
/// axioms: `q ▷ q = q` and `ℓ(q·γ) = γ⁻¹ ℓ(q) γ`, the latter over the
/// generated group (exhaustively when it has at most `group_cap`
/// elements, otherwise over the first `group_cap` BFS elements).
pub fn inner_augmentation(q: &FiniteQuandle, group_cap: usize) -> Result<InnerAugmentation> {
    let n = q.size();
    let mut twists = Vec::with_capacity(n);
    for c in 0..n {
        let images: Vec<usize> = (0..n).map(|x| q.op_right(x, c)).collect();
        twists.push(Perm::new(images).map_err(|_| {
            Error::internal(format!("right translation by {c} is not a bijection"))
        })?);
    }
    for c in 0..n {
        if q.op_right(c, c) != c {
            return Err(Error::internal(format!("{c} ▷ {c} != {c}")));
        }
    }
    let (group, group_complete) = generated_permutation_group(&twists, n, group_cap);
    for gamma in &group {
        for c in 0..n {
            let lhs = &twists[gamma.apply(c)];
            let rhs = gamma.inverse().compose(&twists[c]).compose(gamma);
            if *lhs != rhs {
                return Err(Error::internal(format!(
                    "augmentation axiom fails at element {c} under {}",
                    gamma.cycle_string()
                )));
            }
        }
    }
    Ok(InnerAugmentation {
        twists,
        group,
        group_complete,
    })
}

/// A verified quandle homomorphism between finite quandles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleHom {
    pub map: Vec<usize>,
}

impl QuandleHom {
    pub fn new(src: &FiniteQuandle, tgt: &FiniteQuandle, map: Vec<usize>) -> Result<Self> {
        if map.len() != src.size() {
            return Err(Error::input(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                src.size()
            )));
        }
        for &v in &map {
            if v >= tgt.size() {
                return Err(Error::input(format!("image {v} out of range")));
            }
        }
        for x in 0..src.size() {
            for y in 0..src.size() {
                if map[src.op_right(x, y)] != tgt.op_right(map[x], map[y]) {
                    return Err(Error::domain(format!(
                        "not a homomorphism: fails at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(QuandleHom { map })
    }

    pub fn is_surjective(&self, tgt_size: usize) -> bool {
        let mut hit = vec![false; tgt_size];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.iter().all(|&b| b)
    }
}

/// How each element of a quandle is obtained from a generating set.
#[derive(Debug, Clone, Copy)]
enum Recipe {
    Generator,
    Right(usize, usize),
    Left(usize, usize),
}

/// A greedy generating set with a derivation of every element and the
/// stage (generator count) at which it first becomes derivable.
struct GeneratingSet {
    gens: Vec<usize>,
    /// Elements in derivation order (recipes reference earlier entries).
    order: Vec<usize>,
    recipe: Vec<Recipe>,
    stage: Vec<usize>,
}

fn closure_size(q: &FiniteQuandle, seed: &[usize]) -> usize {
    let mut inset = vec![false; q.size()];
    let mut list: Vec<usize> = Vec::new();
    for &s in seed {
        if !inset[s] {
            inset[s] = true;
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..list.len() {
            let b = list[j];
            for v in [q.op_right(a, b), q.op_right(b, a), q.op_left(a, b), q.op_left(b, a)] {
                if !inset[v] {
                    inset[v] = true;
                    list.push(v);
                }
            }
        }
        i += 1;
    }
    list.len()
}

fn greedy_generating_set(q: &FiniteQuandle) -> GeneratingSet {
    let n = q.size();
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = 0usize;
    while covered < n {
        // add the element whose closure grows most; ties by smallest index
        let mut best = (0usize, usize::MAX);
        for x in 0..n {
            if gens.contains(&x) {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let sz = closure_size(q, &seed);
            if best.1 == usize::MAX || sz > best.0 {
                best = (sz, x);
            }
        }
        gens.push(best.1);
        covered = best.0;
    }

    // derivation with stages: after adding generator k, close under ops
    let mut stage = vec![usize::MAX; n];
    let mut recipe = vec![Recipe::Generator; n];
    let mut order: Vec<usize> = Vec::new();
    for (k, &g) in gens.iter().enumerate() {
        if stage[g] == usize::MAX {
            stage[g] = k;
            recipe[g] = Recipe::Generator;
            order.push(g);
        }
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            for j in 0..order.len() {
                let b = order[j];
                for (v, r) in [
                    (q.op_right(a, b), Recipe::Right(a, b)),
                    (q.op_left(a, b), Recipe::Left(a, b)),
                    (q.op_right(b, a), Recipe::Right(b, a)),
                    (q.op_left(b, a), Recipe::Left(b, a)),
                ] {
                    if stage[v] == usize::MAX {
                        stage[v] = k;
                        recipe[v] = r;
                        order.push(v);
                    }
                }
            }
            i += 1;
        }
    }
    GeneratingSet {
        gens,
        order,
        recipe,
        stage,
    }
}

/// Count quandle homomorphisms `src → tgt`; optionally collect the maps.
///
/// Backtracks over generator images (a greedy generating set) with
/// stagewise consistency checks; enumeration order is lexicographic on
/// the tuple of generator images.
pub fn hom_count(
    src: &FiniteQuandle,
    tgt: &FiniteQuandle,
    size_cap: usize,
    collect: bool,
) -> Result<(u128, Vec<QuandleHom>)> {
    if src.size() > size_cap {
        return Err(Error::resource(format!(
            "source size {} exceeds cap {size_cap}",
            src.size()
        )));
    }
    let gs = greedy_generating_set(src);
    let n = src.size();
    let mut images = vec![usize::MAX; n];
    let mut count: u128 = 0;
    let mut homs = Vec::new();

    // elements of each stage, in derivation order
    let per_stage: Vec<Vec<usize>> = (0..gs.gens.len())
        .map(|k| gs.order.iter().copied().filter(|&x| gs.stage[x] == k).collect())
        .collect();

    fn assign(
        src: &FiniteQuandle,
        tgt: &FiniteQuandle,
        gs: &GeneratingSet,
        per_stage: &[Vec<usize>],
        images: &mut Vec<usize>,
        k: usize,
        count: &mut u128,
        homs: &mut Vec<QuandleHom>,
        collect: bool,
    ) {
        if k == gs.gens.len() {
            *count += 1;
            if collect {
                homs.push(QuandleHom {
                    map: images.clone(),
                });
            }
            return;
        }
        for img in 0..tgt.size() {
            // derive the stage-k elements from this generator image
            let mut ok = true;
            for &x in &per_stage[k] {
                images[x] = match gs.recipe[x] {
                    Recipe::Generator => img,
                    Recipe::Right(a, b) => tgt.op_right(images[a], images[b]),
                    Recipe::Left(a, b) => tgt.op_left(images[a], images[b]),
                };
            }
            // consistency on every pair whose latest stage is k
            'check: for &x in &per_stage[k] {
                for y in 0..src.size() {
                    if gs.stage[y] > k {
                        continue;
                    }
                    if images[src.op_right(x, y)] != tgt.op_right(images[x], images[y])
                        || images[src.op_right(y, x)] != tgt.op_right(images[y], images[x])
                    {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                assign(src, tgt, gs, per_stage, images, k + 1, count, homs, collect);
            }
            for &x in &per_stage[k] {
                images[x] = usize::MAX;
            }
        }
    }

    assign(
        src, tgt, &gs, &per_stage, &mut images, 0, &mut count, &mut homs, collect,
    );
    Ok((count, homs))
}

/// Union-find based congruence closure: the smallest quandle congruence
/// containing the required pairs.
pub struct CongruenceCloser<'a> {
    q: &'a FiniteQuandle,
    parent: Vec<usize>,
}

impl<'a> CongruenceCloser<'a> {
    pub fn new(q: &'a FiniteQuandle) -> Self {
        CongruenceCloser {
            q,
            parent: (0..q.size()).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Identify `a` and `b` and propagate all consequences.
    pub fn require(&mut self, a: usize, b: usize) {
        let mut work = vec![(a, b)];
        while let Some((a, b)) = work.pop() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            // representatives are minimal indices
            self.parent[ra.max(rb)] = ra.min(rb);
            for c in 0..self.q.size() {
                work.push((self.q.op_right(a, c), self.q.op_right(b, c)));
                work.push((self.q.op_right(c, a), self.q.op_right(c, b)));
                work.push((self.q.op_left(a, c), self.q.op_left(b, c)));
                work.push((self.q.op_left(c, a), self.q.op_left(c, b)));
            }
        }
    }

    /// Build the quotient quandle and the projection map.
    pub fn quotient(mut self) -> Result<(FiniteQuandle, QuandleHom)> {
        let n = self.q.size();
        let reps: Vec<usize> = {
            let mut reps = BTreeSet::new();
            for x in 0..n {
                let r = self.find(x);
                reps.insert(r);
            }
            reps.into_iter().collect()
        };
        let class_of: BTreeMap<usize, usize> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut projection = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            projection[x] = class_of[&r];
        }
        let k = reps.len();
        let mut rt = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                rt[i][j] = projection[self.q.op_right(reps[i], reps[j])];
            }
        }
        let labels = self
            .q
            .labels()
            .map(|l| reps.iter().map(|&r| l[r].clone()).collect());
        let quotient = FiniteQuandle::from_rt_labeled(rt, labels)?;
        // the projection must be a quandle homomorphism by construction
        let hom = QuandleHom::new(self.q, &quotient, projection)
            .map_err(|e| Error::internal(format!("projection is not a homomorphism: {e}")))?;
        Ok((quotient, hom))
    }
}

/// Quotient by the smallest congruence containing `seeds`.
pub fn congruence_quotient(
    q: &FiniteQuandle,
    seeds: &[(usize, usize)],
) -> Result<(FiniteQuandle, QuandleHom)> {
    for &(a, b) in seeds {
        if a >= q.size() || b >= q.size() {
            return Err(Error::input(format!("seed pair ({a}, {b}) out of range")));
        }
    }
    let mut closer = CongruenceCloser::new(q);
    for &(a, b) in seeds {
        closer.require(a, b);
    }
    closer.quotient()
}

/// Largest quotient satisfying `(x ▷ y) ▷ y = x` (i.e. `▷ = ◁`).
pub fn universal_involutory_quotient(q: &FiniteQuandle) -> Result<(FiniteQuandle, QuandleHom)> {
    let mut closer = CongruenceCloser::new(q);
    for x in 0..q.size() {
        for y in 0..q.size() {
            closer.require(q.op_right(q.op_right(x, y), y), x);
        }
    }
    let (quot, hom) = closer.quotient()?;
    for x in 0..quot.size() {
        for y in 0..quot.size() {
            if quot.op_right(quot.op_right(x, y), y) != x {
                return Err(Error::internal("quotient is not involutory".to_string()));
            }
        }
    }
    Ok((quot, hom))
}

/// Largest quotient satisfying `(w▷x)▷(y▷z) = (w▷y)▷(x▷z)`.
pub fn universal_abelian_quotient(q: &FiniteQuandle) -> Result<(FiniteQuandle, QuandleHom)> {
    let n = q.size();
    let mut closer = CongruenceCloser::new(q);
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    closer.require(
                        q.op_right(q.op_right(w, x), q.op_right(y, z)),
                        q.op_right(q.op_right(w, y), q.op_right(x, z)),
                    );
                }
            }
        }
    }
    let (quot, hom) = closer.quotient()?;
    for w in 0..quot.size() {
        for x in 0..quot.size() {
            for y in 0..quot.size() {
                for z in 0..quot.size() {
                    if quot.op_right(quot.op_right(w, x), quot.op_right(y, z))
                        != quot.op_right(quot.op_right(w, y), quot.op_right(x, z))
                    {
                        return Err(Error::internal("quotient is not abelian".to_string()));
                    }
                }
            }
        }
    }
    Ok((quot, hom))
}

/// Check a candidate bijection for being a quandle isomorphism.
pub fn is_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle, map: &[usize]) -> bool {
    if a.size() != b.size() || map.len() != a.size() {
        return false;
    }
    let mut seen = vec![false; b.size()];
    for &v in map {
        if v >= b.size() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for x in 0..a.size() {
        for y in 0..a.size() {
            if map[a.op_right(x, y)] != b.op_right(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

/// Brute-force isomorphism search; only for size ≤ 8.
pub fn are_isomorphic(a: &FiniteQuandle, b: &FiniteQuandle) -> Result<bool> {
    if a.size() != b.size() {
        return Ok(false);
    }
    if a.size() > 8 {
        return Err(Error::resource(
            "brute-force isomorphism search is limited to size ≤ 8".to_string(),
        ));
    }
    let mut map: Vec<usize> = (0..a.size()).collect();
    // Heap's algorithm over all permutations
    fn heaps(
        a: &FiniteQuandle,
        b: &FiniteQuandle,
        map: &mut Vec<usize>,
        k: usize,
    ) -> bool {
        if k <= 1 {
            return is_isomorphism(a, b, map);
        }
        for i in 0..k {
            if heaps(a, b, map, k - 1) {
                return true;
            }
            if k % 2 == 0 {
                map.swap(i, k - 1);
            } else {
                map.swap(0, k - 1);
            }
        }
        false
    }
    let n = map.len();
    Ok(heaps(a, b, &mut map, n))
}
