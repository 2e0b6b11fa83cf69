//! Linear arrangements of gadget-block graphs at bounded cutwidth, and the
//! conversion of any linear arrangement into a path decomposition emitted in
//! a parenthesized term representation.

use crate::grid::{BlockKind, GridGraph, Vertex};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("graph is not a left-to-right chain of gadget blocks (column {0})")]
    NotBlockChain(u32),
    #[error("arrangement does not cover the graph's vertex set")]
    DomainMismatch,
    #[error("malformed term at byte {0}: {1}")]
    TermSyntax(usize, String),
}

/// A total order on a graph's vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearArrangement {
    order: Vec<Vertex>,
}

impl LinearArrangement {
    pub fn new(order: Vec<Vertex>) -> Self {
        LinearArrangement { order }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn positions(&self) -> HashMap<Vertex, usize> {
        self.order.iter().enumerate().map(|(i, v)| (*v, i)).collect()
    }
}

/// Block-local linearization orders: boundary-path endpoints first, the
/// internal pair in the middle, right-column vertices last, so consecutive
/// blocks chain with the connector edges spanning only the block boundary.
fn block_order(kind: BlockKind) -> &'static [(u32, u32)] {
    match kind {
        BlockKind::B00 => &[(0, 0), (0, 5), (0, 2), (0, 3), (1, 0), (1, 5)],
        BlockKind::B01 => &[(0, 1), (0, 4), (1, 2), (1, 3), (1, 1), (1, 4)],
        BlockKind::B10 => &[(0, 1), (0, 4), (0, 0), (0, 5), (1, 0), (1, 5)],
    }
}

/// Reads a block-chain graph back as its sequence of block kinds.
pub fn block_chain_of(g: &GridGraph) -> Result<Vec<BlockKind>, DecompError> {
    if g.length() % 2 != 0 {
        return Err(DecompError::NotBlockChain(g.length()));
    }
    let mut kinds = Vec::new();
    for i in 0..g.length() / 2 {
        let kind = BlockKind::from_column_masks(g.column_mask(2 * i), g.column_mask(2 * i + 1))
            .ok_or(DecompError::NotBlockChain(2 * i))?;
        kinds.push(kind);
    }
    Ok(kinds)
}

/// Fixed bounded-cutwidth arrangement for a chain of gadget blocks: each
/// block's vertices in its hardcoded order, blocks left to right.
pub fn linearize(gx: &GridGraph) -> Result<LinearArrangement, DecompError> {
    let kinds = block_chain_of(gx)?;
    let mut order = Vec::new();
    for (i, kind) in kinds.iter().enumerate() {
        for &(c, r) in block_order(*kind) {
            order.push(Vertex::new(2 * i as u32 + c, r));
        }
    }
    let arr = LinearArrangement::new(order);
    if arr.order.iter().any(|v| !gx.contains(*v)) || arr.len() != gx.vertex_count() {
        return Err(DecompError::DomainMismatch);
    }
    Ok(arr)
}

/// Maximum number of edges crossing any cut of the arrangement.
pub fn cutwidth_of(g: &GridGraph, arr: &LinearArrangement) -> Result<usize, DecompError> {
    let pos = arr.positions();
    if arr.len() != g.vertex_count() || g.vertices().iter().any(|v| !pos.contains_key(v)) {
        return Err(DecompError::DomainMismatch);
    }
    if arr.len() < 2 {
        return Ok(0);
    }
    let mut cuts = vec![0usize; arr.len() - 1];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let (lo, hi) = (pos[&a].min(pos[&b]), pos[&a].max(pos[&b]));
        for c in cuts.iter_mut().take(hi).skip(lo) {
            *c += 1;
        }
    }
    Ok(cuts.into_iter().max().unwrap_or(0))
}

/// An ordered sequence of vertex bags.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathDecomposition {
    bags: Vec<BTreeSet<Vertex>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<BTreeSet<Vertex>>) -> Self {
        PathDecomposition { bags }
    }

    pub fn bags(&self) -> &[BTreeSet<Vertex>] {
        &self.bags
    }

    /// Max bag size minus one; zero for the empty decomposition.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }
}

/// Bag i holds vertex i of the arrangement plus every earlier vertex that
/// still has a neighbor at position >= i. Width never exceeds the
/// arrangement's cutwidth.
pub fn path_decomposition(g: &GridGraph, arr: &LinearArrangement) -> PathDecomposition {
    let pos = arr.positions();
    let mut last_neighbor: HashMap<Vertex, usize> = HashMap::new();
    for v in arr.order() {
        last_neighbor.insert(*v, pos[v]);
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let hi = pos[&a].max(pos[&b]);
        for v in [a, b] {
            let m = last_neighbor.entry(v).or_insert(hi);
            *m = (*m).max(hi);
        }
    }
    let mut bags = Vec::with_capacity(arr.len());
    for (i, v) in arr.order().iter().enumerate() {
        let mut bag: BTreeSet<Vertex> = arr.order()[..i]
            .iter()
            .filter(|u| last_neighbor[u] >= i)
            .cloned()
            .collect();
        bag.insert(*v);
        bags.push(bag);
    }
    PathDecomposition::new(bags)
}

/// Checks the three decomposition axioms: vertex coverage, edge coverage,
/// and contiguity of each vertex's bag interval.
pub fn verify_decomposition(g: &GridGraph, pd: &PathDecomposition) -> bool {
    let mut first: HashMap<Vertex, usize> = HashMap::new();
    let mut last: HashMap<Vertex, usize> = HashMap::new();
    let mut count: HashMap<Vertex, usize> = HashMap::new();
    for (i, bag) in pd.bags().iter().enumerate() {
        for v in bag {
            first.entry(*v).or_insert(i);
            last.insert(*v, i);
            *count.entry(*v).or_insert(0) += 1;
        }
    }
    for v in g.vertices() {
        match (first.get(v), last.get(v)) {
            (Some(&f), Some(&l)) if count[v] == l - f + 1 => {}
            _ => return false,
        }
    }
    g.edges().iter().all(|e| {
        let (a, b) = e.endpoints();
        pd.bags().iter().any(|bag| bag.contains(&a) && bag.contains(&b))
    })
}

/// Grammar version announced in term file headers.
pub const TERM_GRAMMAR_VERSION: u32 = 1;

/// Canonical parenthesized form: `(pd (bag v<col>_<row> ...) ...)`.
pub fn term_representation(pd: &PathDecomposition) -> String {
    if pd.bags().is_empty() {
        return "(pd)".to_string();
    }
    let bags: Vec<String> = pd
        .bags()
        .iter()
        .map(|bag| {
            let vs: Vec<String> = bag.iter().map(|v| format!("v{}_{}", v.col, v.row)).collect();
            if vs.is_empty() {
                "(bag)".to_string()
            } else {
                format!("(bag {})", vs.join(" "))
            }
        })
        .collect();
    format!("(pd {})", bags.join(" "))
}

/// Parses the term grammar back; inverse of `term_representation`.
pub fn parse_term(text: &str) -> Result<PathDecomposition, DecompError> {
    let mut toks = Tokenizer::new(text);
    toks.expect("(")?;
    toks.expect("pd")?;
    let mut bags = Vec::new();
    loop {
        match toks.next()? {
            Tok::Close => break,
            Tok::Open => {
                toks.expect("bag")?;
                let mut bag = BTreeSet::new();
                loop {
                    match toks.next()? {
                        Tok::Close => break,
                        Tok::Word(w, at) => {
                            let body = w
                                .strip_prefix('v')
                                .ok_or_else(|| bad(at, "expected v<col>_<row>"))?;
                            let (c, r) = body
                                .split_once('_')
                                .ok_or_else(|| bad(at, "expected v<col>_<row>"))?;
                            let col = c.parse().map_err(|_| bad(at, "bad column"))?;
                            let row = r.parse().map_err(|_| bad(at, "bad row"))?;
                            bag.insert(Vertex::new(col, row));
                        }
                        Tok::Open => return Err(bad(toks.pos, "unexpected '('")),
                    }
                }
                bags.push(bag);
            }
            Tok::Word(_, at) => return Err(bad(at, "expected '(' or ')'")),
        }
    }
    if toks.peek_nonspace().is_some() {
        return Err(bad(toks.pos, "trailing input"));
    }
    Ok(PathDecomposition::new(bags))
}

fn bad(at: usize, msg: &str) -> DecompError {
    DecompError::TermSyntax(at, msg.to_string())
}

enum Tok {
    Open,
    Close,
    Word(String, usize),
}

struct Tokenizer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Tokenizer<'a> {
    fn new(s: &'a str) -> Self {
        Tokenizer {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek_nonspace(&mut self) -> Option<u8> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn next(&mut self) -> Result<Tok, DecompError> {
        match self.peek_nonspace() {
            None => Err(bad(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                Ok(Tok::Open)
            }
            Some(b')') => {
                self.pos += 1;
                Ok(Tok::Close)
            }
            Some(_) => {
                let start = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'(' && *b != b')')
                {
                    self.pos += 1;
                }
                Ok(Tok::Word(
                    String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned(),
                    start,
                ))
            }
        }
    }

    fn expect(&mut self, what: &str) -> Result<(), DecompError> {
        let at = self.pos;
        match (self.next()?, what) {
            (Tok::Open, "(") => Ok(()),
            (Tok::Close, ")") => Ok(()),
            (Tok::Word(w, _), _) if w == what => Ok(()),
            _ => Err(bad(at, &format!("expected {what:?}"))),
        }
    }
}
