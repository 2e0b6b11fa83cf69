//! The transfer-relation monoid as a first-class algebra: composition,
//! closure from generators, index/period analysis, cyclic-group extraction
//! and the equal-length generator/identity certificate construction.

use crate::engine::{self, slices_of, EngineError};
use crate::grid::{concat, self_concatenable_bipartite, Edge, GraphError, GridGraph, Vertex};
use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("power cap {0} exceeded without repetition")]
    PowerCapExceeded(u64),
    #[error("element is not composable with itself")]
    SelfIncomposable,
    #[error("padding column count {0} is odd")]
    OddPadding(u32),
    #[error("certificate invariant failed: {0}")]
    Certificate(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A matchability relation between the boundary columns of a graph segment.
/// Rows are indexed by subsets of the left occupancy, columns by subsets of
/// the right occupancy; storage is a row-major bit matrix, so equality and
/// hashing are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Relation {
    left_mask: u32,
    right_mask: u32,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(left_mask: u32, right_mask: u32) -> Self {
        let rows = 1usize << left_mask.count_ones();
        let wpr = engine::words_for(right_mask.count_ones() as usize);
        Relation {
            left_mask,
            right_mask,
            bits: vec![0; rows * wpr],
        }
    }

    pub fn left_mask(&self) -> u32 {
        self.left_mask
    }

    pub fn right_mask(&self) -> u32 {
        self.right_mask
    }

    pub fn left_arity(&self) -> usize {
        self.left_mask.count_ones() as usize
    }

    pub fn right_arity(&self) -> usize {
        self.right_mask.count_ones() as usize
    }

    fn words_per_row(&self) -> usize {
        engine::words_for(self.right_arity())
    }

    /// Marks (X', Y') as matchable; both arguments are subset indices over
    /// the sorted row lists of the respective boundary.
    pub fn insert(&mut self, x_subset: u32, y_subset: u32) {
        let wpr = self.words_per_row();
        self.bits[x_subset as usize * wpr + y_subset as usize / 64] |= 1 << (y_subset % 64);
    }

    pub fn contains(&self, x_subset: u32, y_subset: u32) -> bool {
        let wpr = self.words_per_row();
        self.bits[x_subset as usize * wpr + y_subset as usize / 64] >> (y_subset % 64) & 1 == 1
    }

    /// All (X', Y') pairs, in row-major order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for x in 0..1u32 << self.left_arity() {
            for y in 0..1u32 << self.right_arity() {
                if self.contains(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// ORs row `x_subset` into `out` (a bitset over right subsets).
    pub fn or_row_into(&self, x_subset: usize, out: &mut [u64]) {
        let wpr = self.words_per_row();
        for w in 0..wpr {
            out[w] |= self.bits[x_subset * wpr + w];
        }
    }

    pub fn full_left(&self) -> u32 {
        ((1u64 << self.left_arity()) - 1) as u32
    }

    /// Boolean matrix product.
    fn product(&self, other: &Relation) -> Relation {
        let mut out = Relation::empty(self.left_mask, other.right_mask);
        let wpr_out = out.words_per_row();
        let wpr_mid = self.words_per_row();
        let rows = 1usize << self.left_arity();
        for x in 0..rows {
            for w in 0..wpr_mid {
                let mut word = self.bits[x * wpr_mid + w];
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    let z = w * 64 + b;
                    for ow in 0..wpr_out {
                        out.bits[x * wpr_out + ow] |= other.bits[z * wpr_out + ow];
                    }
                }
            }
        }
        out
    }
}

/// Element of the transfer monoid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonoidElement {
    Zero,
    One,
    Rel(Relation),
}

impl MonoidElement {
    pub fn as_rel(&self) -> Option<&Relation> {
        match self {
            MonoidElement::Rel(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_self_composable(&self) -> bool {
        match self {
            MonoidElement::One => true,
            MonoidElement::Zero => false,
            MonoidElement::Rel(r) => r.left_mask == r.right_mask,
        }
    }
}

/// The monoid operation: relation product when the inner boundaries agree,
/// absorbing zero otherwise; One is neutral.
pub fn compose(a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
    match (a, b) {
        (MonoidElement::Zero, _) | (_, MonoidElement::Zero) => MonoidElement::Zero,
        (MonoidElement::One, x) | (x, MonoidElement::One) => x.clone(),
        (MonoidElement::Rel(r), MonoidElement::Rel(s)) => {
            if r.right_mask != s.left_mask {
                MonoidElement::Zero
            } else {
                MonoidElement::Rel(r.product(s))
            }
        }
    }
}

/// The transfer relation of a whole graph: the fold of its slice relations.
pub fn element_of(g: &GridGraph) -> Result<MonoidElement, EngineError> {
    element_of_bounded(g, engine::DEFAULT_WIDTH_BOUND)
}

pub fn element_of_bounded(g: &GridGraph, width_bound: u32) -> Result<MonoidElement, EngineError> {
    for col in 0..g.length() {
        if g.column_rows(col).len() as u32 > width_bound {
            return Err(EngineError::WidthBound(g.width(), width_bound));
        }
    }
    let padded;
    let g = if g.length() >= 2 {
        g
    } else {
        padded = GridGraph::new(g.width(), 2, g.vertices().clone(), g.edges().clone())
            .expect("adding an empty column preserves validity");
        &padded
    };
    let mut acc = MonoidElement::One;
    for s in slices_of(g) {
        acc = compose(&acc, &engine::slice_element(&s));
        if acc == MonoidElement::Zero {
            return Err(EngineError::ZeroFold);
        }
    }
    Ok(acc)
}

/// Index/period structure of the powers of an element: the smallest λ ≥ 1,
/// ρ ≥ 1 with a^(λ+ρ) = a^λ, plus the cycle a^λ .. a^(λ+ρ-1).
#[derive(Clone, Debug)]
pub struct PowerProfile {
    pub base: MonoidElement,
    pub index: u64,
    pub period: u64,
    pub cycle: Vec<MonoidElement>,
}

pub fn power_profile(a: &MonoidElement, cap: u64) -> Result<PowerProfile, MonoidError> {
    if !a.is_self_composable() || *a == MonoidElement::Zero {
        return Err(MonoidError::SelfIncomposable);
    }
    let mut first_seen: HashMap<MonoidElement, u64> = HashMap::new();
    let mut powers: Vec<MonoidElement> = Vec::new();
    let mut cur = a.clone();
    let mut t = 1u64;
    loop {
        if let Some(&s) = first_seen.get(&cur) {
            let index = s;
            let period = t - s;
            let cycle = powers[(index - 1) as usize..(index + period - 1) as usize].to_vec();
            return Ok(PowerProfile {
                base: a.clone(),
                index,
                period,
                cycle,
            });
        }
        first_seen.insert(cur.clone(), t);
        powers.push(cur.clone());
        if t >= cap {
            return Err(MonoidError::PowerCapExceeded(cap));
        }
        cur = compose(&cur, a);
        t += 1;
    }
}

/// A cyclic group located inside the monoid.
#[derive(Clone, Debug)]
pub struct GroupExtraction {
    /// The group's identity, an idempotent power of the base element.
    pub identity: MonoidElement,
    /// Order of the full cyclic group (the period ρ).
    pub order: u64,
    /// Generator of the subgroup of prime order `p`.
    pub generator: MonoidElement,
    /// Smallest prime factor of the order.
    pub p: u64,
    /// The group's elements: identity ∘ a^i for 0 ≤ i < order.
    pub elements: Vec<MonoidElement>,
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

pub fn is_prime(n: u64) -> bool {
    smallest_prime_factor(n) == Some(n)
}

/// Extracts the cyclic group carried by the power cycle, or None for an
/// aperiodic element (period 1).
pub fn extract_group(profile: &PowerProfile) -> Option<GroupExtraction> {
    let (lambda, rho) = (profile.index, profile.period);
    if rho == 1 {
        return None;
    }
    // The unique multiple of ρ in [λ, λ+ρ).
    let m = lambda.div_ceil(rho) * rho;
    let at = |exp: u64| -> &MonoidElement {
        debug_assert!(exp >= lambda);
        &profile.cycle[((exp - lambda) % rho) as usize]
    };
    let identity = at(m).clone();
    let p = smallest_prime_factor(rho).expect("rho >= 2");
    let generator = at(m + rho / p).clone();
    let elements = (0..rho).map(|i| at(m + i).clone()).collect();
    Some(GroupExtraction {
        identity,
        order: rho,
        generator,
        p,
        elements,
    })
}

/// Result of closing a generator set under the monoid operation.
#[derive(Clone, Debug)]
pub struct Closure {
    pub elements: BTreeSet<MonoidElement>,
    pub truncated: bool,
}

/// All products of the generators (nonempty words), up to `budget` distinct
/// elements.
pub fn closure(generators: &[MonoidElement], budget: usize) -> Closure {
    let mut elements: BTreeSet<MonoidElement> = BTreeSet::new();
    let mut frontier: VecDeque<MonoidElement> = VecDeque::new();
    for g in generators {
        if elements.insert(g.clone()) {
            frontier.push_back(g.clone());
        }
    }
    let mut truncated = false;
    'outer: while let Some(x) = frontier.pop_front() {
        for g in generators {
            let y = compose(&x, g);
            if elements.contains(&y) {
                continue;
            }
            if elements.len() >= budget {
                truncated = true;
                break 'outer;
            }
            elements.insert(y.clone());
            frontier.push_back(y);
        }
    }
    Closure {
        elements,
        truncated,
    }
}

/// Extends every rightmost vertex by a horizontal path through `added_cols`
/// new columns. Even counts preserve the graph's transfer relation.
pub fn pad_even_tail(g: &GridGraph, added_cols: u32) -> Result<GridGraph, MonoidError> {
    if added_cols % 2 != 0 {
        return Err(MonoidError::OddPadding(added_cols));
    }
    if added_cols == 0 {
        return Ok(g.clone());
    }
    let last = g.length() - 1;
    let mut vertices = g.vertices().clone();
    let mut edges = g.edges().clone();
    for row in g.column_rows(last) {
        for i in 0..added_cols {
            vertices.insert(Vertex::new(last + 1 + i, row));
            edges.insert(Edge::new(
                Vertex::new(last + i, row),
                Vertex::new(last + 1 + i, row),
            ));
        }
    }
    Ok(GridGraph::new(
        g.width(),
        g.length() + added_cols,
        vertices,
        edges,
    )?)
}

/// Equal-length rewriting of a (generator, identity) graph pair: pads an even
/// difference directly and squares the appropriate graph first when the
/// lengths differ in parity. Keeps the identity element and keeps the
/// generator of the same prime order (possibly replaced by its square).
pub fn equalize_lengths(
    a: &GridGraph,
    b: &GridGraph,
) -> Result<(GridGraph, GridGraph), MonoidError> {
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.length() % 2 != b.length() % 2 {
        if a.length() % 2 == 1 {
            // a odd, b even: b·b has odd length and the same (idempotent) element.
            b = concat(&b, &b)?;
        } else {
            // a even, b odd: a·a generates the same prime-order group.
            a = concat(&a, &a)?;
        }
    }
    let (la, lb) = (a.length(), b.length());
    if la < lb {
        a = pad_even_tail(&a, lb - la)?;
    } else if lb < la {
        b = pad_even_tail(&b, la - lb)?;
    }
    Ok((a, b))
}

/// Concrete witnesses for a cyclic group of odd prime order p: graphs whose
/// transfer relations are a generator and the identity, of equal length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCertificate {
    pub a: GridGraph,
    pub b: GridGraph,
    pub p: u64,
}

impl GroupCertificate {
    pub fn generator(&self) -> Result<MonoidElement, EngineError> {
        element_of(&self.a)
    }

    pub fn identity(&self) -> Result<MonoidElement, EngineError> {
        element_of(&self.b)
    }
}

/// Recomputes every certificate invariant from scratch.
pub fn verify_certificate(cert: &GroupCertificate) -> Result<(), MonoidError> {
    let fail = |msg: &str| Err(MonoidError::Certificate(msg.to_string()));
    if cert.a.width() != cert.b.width() {
        return fail("width mismatch between A and B");
    }
    if cert.a.length() != cert.b.length() {
        return fail("length mismatch between A and B");
    }
    if cert.p % 2 == 0 || !is_prime(cert.p) {
        return fail("p is not an odd prime");
    }
    let g = element_of(&cert.a)?;
    let e = element_of(&cert.b)?;
    if compose(&e, &e) != e {
        return fail("B's element is not idempotent");
    }
    if g == e {
        return fail("generator equals identity");
    }
    if compose(&e, &g) != g || compose(&g, &e) != g {
        return fail("identity does not fix the generator");
    }
    let mut pw = g.clone();
    for i in 1..cert.p {
        if pw == e {
            return fail(&format!("generator order divides {i} < p"));
        }
        pw = compose(&pw, &g);
    }
    if pw != e {
        return fail("generator^p is not the identity");
    }
    Ok(())
}

/// Statistics from a certificate search.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub distinct_elements: usize,
    pub products_computed: usize,
    pub self_composable: usize,
    pub groups_found: usize,
    pub even_period_groups: usize,
    pub group_orders: BTreeSet<u64>,
    pub truncated: bool,
}

/// Breadth-first search over words in the pool, tracking for every monoid
/// element the word of pool graphs that produced it, so that discovered
/// groups can be materialized as concrete graphs. Returns the first
/// certificate whose period has an odd prime factor.
pub fn discover_certificate(
    pool: &[GridGraph],
    budget: usize,
    power_cap: u64,
) -> Result<(Option<GroupCertificate>, SearchStats), MonoidError> {
    let mut stats = SearchStats::default();
    let pool_elems: Vec<MonoidElement> = pool
        .iter()
        .map(element_of)
        .collect::<Result<_, _>>()?;
    let mut words: HashMap<MonoidElement, Vec<usize>> = HashMap::new();
    let mut queue: VecDeque<MonoidElement> = VecDeque::new();
    let mut found: Option<GroupCertificate> = None;
    let consider = |elem: &MonoidElement,
                        word: &[usize],
                        stats: &mut SearchStats|
     -> Result<Option<GroupCertificate>, MonoidError> {
        if !elem.is_self_composable() {
            return Ok(None);
        }
        stats.self_composable += 1;
        // Group candidates must stay bipartite under repeated concatenation:
        // the decision problem concerns bipartite graphs, and the odd-order
        // theorem about groups in the monoid lives in that fragment. (The
        // unrestricted monoid contains order-2 groups: a single horizontal
        // edge composes with itself to the identity relation.)
        if !self_concatenable_bipartite(&concat_word(pool, word)?) {
            return Ok(None);
        }
        let profile = match power_profile(elem, power_cap) {
            Ok(p) => p,
            Err(MonoidError::PowerCapExceeded(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let Some(group) = extract_group(&profile) else {
            return Ok(None);
        };
        stats.groups_found += 1;
        stats.group_orders.insert(group.order);
        if group.order % 2 == 0 {
            stats.even_period_groups += 1;
        }
        let Some(q) = odd_prime_factor(group.order) else {
            return Ok(None);
        };
        let rho = group.order;
        let m = profile.index.div_ceil(rho) * rho;
        let base = concat_word(pool, word)?;
        let a_graph = repeat_concat(&base, m + rho / q)?;
        let b_graph = repeat_concat(&base, m)?;
        let (a_graph, b_graph) = equalize_lengths(&a_graph, &b_graph)?;
        let cert = GroupCertificate {
            a: a_graph,
            b: b_graph,
            p: q,
        };
        verify_certificate(&cert)?;
        Ok(Some(cert))
    };
    'search: for (i, e) in pool_elems.iter().enumerate() {
        if words.contains_key(e) {
            continue;
        }
        words.insert(e.clone(), vec![i]);
        queue.push_back(e.clone());
        if let Some(cert) = consider(e, &[i], &mut stats)? {
            found = Some(cert);
            break 'search;
        }
    }
    while found.is_none() {
        let Some(x) = queue.pop_front() else { break };
        let word = words[&x].clone();
        for (i, e) in pool_elems.iter().enumerate() {
            stats.products_computed += 1;
            let y = compose(&x, e);
            if y == MonoidElement::Zero || words.contains_key(&y) {
                continue;
            }
            if words.len() >= budget {
                stats.truncated = true;
                break;
            }
            let mut w = word.clone();
            w.push(i);
            words.insert(y.clone(), w.clone());
            queue.push_back(y.clone());
            if let Some(cert) = consider(&y, &w, &mut stats)? {
                found = Some(cert);
                break;
            }
        }
        if stats.truncated {
            break;
        }
    }
    stats.distinct_elements = words.len();
    Ok((found, stats))
}

fn odd_prime_factor(mut n: u64) -> Option<u64> {
    while n % 2 == 0 {
        n /= 2;
    }
    smallest_prime_factor(n)
}

fn concat_word(pool: &[GridGraph], word: &[usize]) -> Result<GridGraph, MonoidError> {
    let mut acc = pool[word[0]].clone();
    for &i in &word[1..] {
        acc = concat(&acc, &pool[i])?;
    }
    Ok(acc)
}

fn repeat_concat(g: &GridGraph, times: u64) -> Result<GridGraph, MonoidError> {
    assert!(times >= 1);
    let mut acc = g.clone();
    for _ in 1..times {
        acc = concat(&acc, g)?;
    }
    Ok(acc)
}
