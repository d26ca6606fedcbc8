//! The span `V_n` of the graph polynomials `p(G) = ∏_{ij ∈ E(G)} (x_i - x_j)`
//! over slim graphs `G ⊆ K_n` (those with connected complement), and the
//! character of `S_n` acting on it by relabeling variables.
//!
//! Every `p(G)` is homogeneous of degree `|E(G)|`, so `V_n` is kept as one
//! reduced echelon basis per degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::action::{apply, ExtendedPF, ExtendedSpace, Permutation};
use crate::character::chi_c1;
use crate::classify::area_class;
use crate::error::{Error, Result};
use crate::numth::{expect_integer, partitions_of, rat_int, Partition, Rational};
use crate::parking::{format_word, parse_word};

/// Largest `n` accepted without an explicit opt-in.
pub const DEFAULT_SLIM_BOUND: usize = 5;
/// Largest `n` accepted at all.
pub const MAX_SLIM_N: usize = 6;
/// Packed monomials hold 8 bits per variable.
pub const MAX_VARS: usize = 8;

/// A simple graph on `[n]`; bit `e` of `edges` is the `e`-th pair `(i, j)`,
/// `i < j`, in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: u32,
}

/// The pairs `(i, j)`, `i < j`, zero-based, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

impl LabeledGraph {
    pub fn new(n: usize, edges: u32) -> Result<Self> {
        let m = n * n.saturating_sub(1) / 2;
        if m > 32 || (m < 32 && edges >> m != 0) {
            return Err(Error::invalid(format!("edge mask {edges:#x} is too wide for n = {n}")));
        }
        Ok(LabeledGraph { n, edges })
    }

    /// From zero-based vertex pairs in any order.
    pub fn from_edges(n: usize, list: &[(usize, usize)]) -> Result<Self> {
        let index: HashMap<(usize, usize), usize> =
            pairs(n).into_iter().enumerate().map(|(e, p)| (p, e)).collect();
        let mut edges = 0u32;
        for &(i, j) in list {
            let key = (i.min(j), i.max(j));
            let e = index
                .get(&key)
                .ok_or_else(|| Error::invalid(format!("({i}, {j}) is not an edge of K_{n}")))?;
            edges |= 1 << e;
        }
        Ok(LabeledGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n)
            .into_iter()
            .enumerate()
            .filter(|(e, _)| self.edges >> e & 1 == 1)
            .map(|(_, p)| p)
            .collect()
    }

    pub fn complement(&self) -> LabeledGraph {
        let m = self.n * self.n.saturating_sub(1) / 2;
        let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        LabeledGraph { n: self.n, edges: !self.edges & full }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adjacency = vec![0u32; self.n];
        for (i, j) in self.edges() {
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adjacency[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_slim(&self) -> bool {
        self.complement().is_connected()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().iter().map(|(i, j)| format!("{}{}", i + 1, j + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn check_bound(n: usize, allow_big: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let bound = if allow_big { MAX_SLIM_N } else { DEFAULT_SLIM_BOUND };
    if n > bound {
        return Err(Error::ResourceBound(format!(
            "slim graph computations are limited to n <= {bound}{}",
            if allow_big { "" } else { " without --allow-big" }
        )));
    }
    Ok(())
}

/// All slim graphs on `[n]`, by increasing edge mask.
pub fn enumerate_slim(n: usize, allow_big: bool) -> Result<Vec<LabeledGraph>> {
    check_bound(n, allow_big)?;
    let m = n * (n - 1) / 2;
    Ok((0u32..1 << m)
        .map(|edges| LabeledGraph { n, edges })
        .filter(LabeledGraph::is_slim)
        .collect())
}

/// Exponent vector packed one byte per variable, `x_1` most significant, so
/// that within one degree the integer order is lexicographic order.
pub type Monomial = u64;

fn shift(n: usize, i: usize) -> u32 {
    8 * (n - 1 - i) as u32
}

pub fn exponents(n: usize, m: Monomial) -> Vec<u32> {
    (0..n).map(|i| ((m >> shift(n, i)) & 0xff) as u32).collect()
}

pub fn monomial_degree(m: Monomial) -> u32 {
    m.to_le_bytes().iter().map(|&b| b as u32).sum()
}

/// A polynomial in `x_1, …, x_n` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(0, c);
        p
    }

    /// `x_{i+1}` for zero-based `i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(1 << shift(n, i), Rational::one());
        p
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (&m, v) in &self.terms {
            out.add_term(m, v * c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (&a, u) in &self.terms {
            for (&b, v) in &other.terms {
                out.add_term(a + b, u * v);
            }
        }
        out
    }

    /// Relabels variables by `π`: the exponent of `x_{π(j)}` becomes the
    /// exponent of `x_j`, matching `(π·x)_j = x_{π(j)}` on words.
    pub fn permute(&self, pi: &Permutation) -> MultiPoly {
        assert_eq!(pi.degree(), self.n);
        let n = self.n;
        let mut out = MultiPoly::zero(n);
        for (&m, c) in &self.terms {
            let mut image = 0;
            for j in 0..n {
                image |= ((m >> shift(n, pi.image(j))) & 0xff) << shift(n, j);
            }
            out.add_term(image, c.clone());
        }
        out
    }

    /// Homogeneous components keyed by degree.
    pub fn by_degree(&self) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (&m, c) in &self.terms {
            out.entry(monomial_degree(m))
                .or_insert_with(|| MultiPoly::zero(self.n))
                .add_term(m, c.clone());
        }
        out
    }

    /// Parses expressions like `(x_4-x_1)(x_4-x_2)(1-2x_3+x_1+x_2)`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut parser = PolyParser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, n };
        let p = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded order, largest monomial first
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse((monomial_degree(**m), **m)));
        for (k, (&m, c)) in terms.into_iter().enumerate() {
            let mono: String = exponents(self.n, m)
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect::<Vec<_>>()
                .join("*");
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

struct PolyParser {
    chars: Vec<char>,
    pos: usize,
    n: usize,
}

impl PolyParser {
    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in {text:?}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut total = MultiPoly::zero(self.n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let term = self.term()?;
            total = total.add(&term.scale(&rat_int(sign)));
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut product = MultiPoly::constant(self.n, Rational::one());
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let digits: String = self.chars[start..self.pos].iter().collect();
                    let v: BigInt = digits.parse().map_err(|_| self.error("bad number"))?;
                    product = product.scale(&Rational::from_integer(v));
                }
                Some('x') => {
                    self.pos += 1;
                    if self.peek() == Some('_') {
                        self.pos += 1;
                    }
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let digits: String = self.chars[start..self.pos].iter().collect();
                    let i: usize = digits.parse().map_err(|_| self.error("bad variable index"))?;
                    if i == 0 || i > self.n {
                        return Err(self.error("variable index out of range"));
                    }
                    product = product.mul(&MultiPoly::var(self.n, i - 1));
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.error("expected ')'"));
                    }
                    self.pos += 1;
                    product = product.mul(&inner);
                }
                Some('*') if factors > 0 => {
                    self.pos += 1;
                    continue;
                }
                _ => break,
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected a term"));
        }
        Ok(product)
    }
}

/// `p(G)`, each factor written with the smaller vertex first.
pub fn graph_poly(g: &LabeledGraph) -> MultiPoly {
    let n = g.n;
    let mut acc: HashMap<Monomial, i64> = HashMap::from([(0, 1)]);
    for (i, j) in g.edges() {
        let (xi, xj) = (1u64 << shift(n, i), 1u64 << shift(n, j));
        let mut next: HashMap<Monomial, i64> = HashMap::with_capacity(acc.len() * 2);
        for (&m, &c) in &acc {
            *next.entry(m + xi).or_insert(0) += c;
            *next.entry(m + xj).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    let mut p = MultiPoly::zero(n);
    for (m, c) in acc {
        p.add_term(m, rat_int(c));
    }
    p
}

/// Reduced row echelon basis of a space of homogeneous polynomials of one
/// degree. Each row is monic at its pivot, which is its largest monomial,
/// and every other row vanishes there.
#[derive(Clone, Debug, Default)]
struct EchelonBlock {
    rows: Vec<BTreeMap<Monomial, Rational>>,
    pivots: HashMap<Monomial, usize>,
}

impl EchelonBlock {
    fn reduce(&self, v: &BTreeMap<Monomial, Rational>) -> BTreeMap<Monomial, Rational> {
        let mut out = v.clone();
        for (m, c) in v {
            if let Some(&r) = self.pivots.get(m) {
                for (&k, a) in &self.rows[r] {
                    let entry = out.entry(k).or_insert_with(Rational::zero);
                    *entry -= c * a;
                    if entry.is_zero() {
                        out.remove(&k);
                    }
                }
            }
        }
        out
    }

    /// Adds `v` if independent; returns whether the rank grew.
    fn insert(&mut self, v: &BTreeMap<Monomial, Rational>) -> bool {
        let reduced = self.reduce(v);
        let Some((&pivot, lead)) = reduced.iter().next_back() else {
            return false;
        };
        let inv = lead.recip();
        let row: BTreeMap<Monomial, Rational> = reduced.iter().map(|(&m, c)| (m, c * &inv)).collect();
        for other in &mut self.rows {
            if let Some(c) = other.get(&pivot).cloned() {
                for (&k, a) in &row {
                    let entry = other.entry(k).or_insert_with(Rational::zero);
                    *entry -= &c * a;
                    if entry.is_zero() {
                        other.remove(&k);
                    }
                }
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// `V_n` as one echelon block per degree.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    n: usize,
    blocks: BTreeMap<u32, EchelonBlock>,
    generators: usize,
}

impl SpanBasis {
    pub fn degree_n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.blocks.values().map(|b| b.rows.len()).sum()
    }

    /// Number of polynomials fed in.
    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// Dimension of each homogeneous component.
    pub fn graded_dimensions(&self) -> BTreeMap<u32, usize> {
        self.blocks.iter().map(|(&d, b)| (d, b.rows.len())).collect()
    }

    /// Basis rows, by degree and then by increasing pivot.
    pub fn rows(&self) -> Vec<MultiPoly> {
        let mut out = Vec::new();
        for block in self.blocks.values() {
            let mut order: Vec<(&Monomial, &usize)> = block.pivots.iter().collect();
            order.sort();
            for (_, &r) in order {
                out.push(MultiPoly { n: self.n, terms: block.rows[r].clone() });
            }
        }
        out
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        p.by_degree().into_iter().all(|(d, part)| match self.blocks.get(&d) {
            Some(block) => block.reduce(&part.terms).is_empty(),
            None => part.is_zero(),
        })
    }

    /// Whether relabeling by `π` maps every basis row into the span.
    pub fn is_invariant(&self, pi: &Permutation) -> bool {
        self.rows().iter().all(|row| self.contains(&row.permute(pi)))
    }

    /// Trace of `π` on the span: each relabeled row is written in the basis
    /// by reading its pivot coordinates, and the result is checked.
    pub fn trace(&self, pi: &Permutation) -> Result<BigInt> {
        if pi.degree() != self.n {
            return Err(Error::invalid(format!("permutation must have degree {}", self.n)));
        }
        let total: Rational = self
            .blocks
            .values()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|block| -> Result<Rational> {
                let mut sum = Rational::zero();
                for (&pivot, &r) in &block.pivots {
                    let image = MultiPoly { n: self.n, terms: block.rows[r].clone() }.permute(pi);
                    if !block.reduce(&image.terms).is_empty() {
                        return Err(Error::assertion("the span is not closed under relabeling"));
                    }
                    sum += image.coeff(pivot);
                }
                Ok(sum)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(Rational::zero(), |a, b| a + b);
        expect_integer(&total, &format!("trace of {pi}"))
    }
}

/// Builds `V_n` from all slim graphs, with a full pass over every graph.
pub fn build_vn(n: usize, allow_big: bool) -> Result<SpanBasis> {
    let graphs = enumerate_slim(n, allow_big)?;
    let polys: Vec<MultiPoly> = graphs.par_iter().map(graph_poly).collect();
    let mut blocks: BTreeMap<u32, EchelonBlock> = BTreeMap::new();
    for (g, p) in graphs.iter().zip(&polys) {
        blocks.entry(g.edge_count() as u32).or_default().insert(&p.terms);
    }
    blocks.retain(|_, b| !b.rows.is_empty());
    Ok(SpanBasis { n, blocks, generators: graphs.len() })
}

/// Character of `σ_n` at the canonical permutation of cycle type `λ`.
pub fn sigma_character(basis: &SpanBasis, lambda: &Partition) -> Result<BigInt> {
    if lambda.size() != basis.n {
        return Err(Error::invalid(format!("{lambda} is not a partition of {}", basis.n)));
    }
    basis.trace(&Permutation::of_cycle_type(lambda))
}

/// Inner product of a class function with the trivial character.
pub fn trivial_multiplicity(values: &BTreeMap<Partition, BigInt>) -> Rational {
    values
        .iter()
        .map(|(l, v)| Rational::new(v.clone(), l.z()))
        .fold(Rational::zero(), |a, b| a + b)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassComparison {
    pub lambda: String,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub sigma: BigInt,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub chi: BigInt,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    #[serde(serialize_with = "crate::report::display_as_string")]
    pub dimension: usize,
    pub classes: Vec<ClassComparison>,
    pub pass: bool,
}

/// Compares the character of `σ_n` with that of `τ_{n,1}` on every class.
pub fn verify_conjecture(n: usize, allow_big: bool) -> Result<ConjectureReport> {
    let basis = build_vn(n, allow_big)?;
    let classes = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let sigma = sigma_character(&basis, &lambda)?;
            let chi = chi_c1(n, &lambda)?;
            Ok(ClassComparison { lambda: lambda.key(), agree: sigma == chi, sigma, chi })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = classes.iter().all(|c| c.agree);
    Ok(ConjectureReport { n, dimension: basis.dimension(), classes, pass })
}

/// Orbit representatives and their images in `V_n`, as displayed for small
/// `n`. The words lie in the extended set with `c = C(n-1, 2) mod n`.
pub fn table_rows(n: usize) -> Result<Vec<(&'static str, &'static str)>> {
    Ok(match n {
        3 => vec![("001", "1-2x_3+x_1+x_2")],
        4 => vec![
            ("0003", "1-3x_4+x_1+x_2+x_3"),
            ("0012", "(x_4-x_1)(x_4-x_2)(1-2x_3+x_1+x_2)"),
        ],
        5 => vec![
            ("00001", "1-4x_5+x_1+x_2+x_3+x_4"),
            ("00033", "(-3x_4+x_1+x_2+x_3)(-3x_5+x_1+x_2+x_3)"),
            ("01113", "(x_1-x_2)(x_1-x_3)(x_1-x_4)"),
            ("00114", "(x_5-x_3)(x_5-x_4)(-2x_3+x_1+x_2)(-2x_4+x_1+x_2)"),
            ("00123", "(x_5-x_1)(x_5-x_2)(x_5-x_3)(x_4-x_1)(x_4-x_2)(1-2x_3+x_1+x_2)"),
        ],
        _ => return Err(Error::invalid("the table covers n = 3, 4, 5 only")),
    })
}

/// The equivariant map on the three words for `n = 3`.
pub fn table_map_n3() -> Vec<(&'static str, &'static str)> {
    vec![
        ("100", "1-2x_1+x_2+x_3"),
        ("010", "1-2x_2+x_1+x_3"),
        ("001", "1-2x_3+x_1+x_2"),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub word: String,
    pub polynomial: String,
    pub in_extended_set: bool,
    pub in_span: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub n: usize,
    pub c: u64,
    pub rows: Vec<TableRow>,
    /// Whether the words are pairwise in distinct orbits and cover them all.
    pub one_per_orbit: bool,
    /// Only checked for `n = 3`.
    pub equivariant: Option<bool>,
    pub pass: bool,
}

fn commutes_n3() -> Result<bool> {
    let map: Vec<(ExtendedPF, MultiPoly)> = table_map_n3()
        .into_iter()
        .map(|(w, p)| Ok((ExtendedPF::new(parse_word(w)?, 3, 1)?, MultiPoly::parse(p, 3)?)))
        .collect::<Result<_>>()?;
    for pi in Permutation::all(3) {
        for (x, p) in &map {
            let image = apply(&pi, x)?;
            let Some((_, q)) = map.iter().find(|(y, _)| *y == image) else {
                return Ok(false);
            };
            if p.permute(&pi) != *q {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks every table polynomial lies in `V_n`, and for `n = 3` that the
/// displayed map commutes with the action.
pub fn verify_table(n: usize) -> Result<TableReport> {
    let entries = table_rows(n)?;
    let basis = build_vn(n, false)?;
    let c = area_class(n as u64)?;
    let space = ExtendedSpace::classical(n, c as u32)?;
    let orbits = space.orbit_decomposition()?;
    let mut rows = Vec::new();
    let mut hit = vec![false; orbits.len()];
    let mut one_per_orbit = entries.len() == orbits.len();
    for (word, text) in entries {
        let coords = parse_word(word)?;
        let element = ExtendedPF::new(coords.clone(), n as u32, c as u32).ok();
        if let Some(x) = &element {
            match orbits.iter().position(|o| o.contains(x)) {
                Some(k) if !hit[k] => hit[k] = true,
                _ => one_per_orbit = false,
            }
        } else {
            one_per_orbit = false;
        }
        let poly = MultiPoly::parse(text, n)?;
        rows.push(TableRow {
            word: format_word(&coords),
            polynomial: text.to_string(),
            in_extended_set: element.is_some(),
            in_span: basis.contains(&poly),
        });
    }
    let equivariant = if n == 3 { Some(commutes_n3()?) } else { None };
    let pass = one_per_orbit
        && rows.iter().all(|r| r.in_extended_set && r.in_span)
        && equivariant.unwrap_or(true);
    Ok(TableReport { n, c, rows, one_per_orbit, equivariant, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::rat;

    // connected labeled graphs on n vertices, by the standard recurrence
    fn connected_count(n: usize) -> u64 {
        let mut c = vec![0u64; n + 1];
        let total = |k: usize| 1u64 << (k * k.saturating_sub(1) / 2);
        let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
        for k in 1..=n {
            let disconnected: u64 = (1..k).map(|j| binom(k as u64 - 1, j as u64 - 1) * c[j] * total(k - j)).sum();
            c[k] = total(k) - disconnected;
        }
        c[n]
    }

    #[test]
    fn slim_counts() {
        assert_eq!(enumerate_slim(3, false).unwrap().len(), 4);
        assert_eq!(enumerate_slim(4, false).unwrap().len(), 38);
        assert_eq!(enumerate_slim(5, false).unwrap().len(), 728);
        for n in 1..=5 {
            assert_eq!(enumerate_slim(n, false).unwrap().len() as u64, connected_count(n));
        }
        assert!(matches!(enumerate_slim(6, false), Err(Error::ResourceBound(_))));
        assert!(enumerate_slim(7, true).is_err());
    }

    #[test]
    fn graph_basics() {
        let g = LabeledGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.complement().edges(), vec![(0, 2), (1, 2)]);
        assert!(g.is_slim());
        let path = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_slim());
        assert!(LabeledGraph::new(3, 8).is_err());
        assert_eq!(path.to_string(), "{12,23}");
    }

    #[test]
    fn polynomials() {
        let empty = LabeledGraph::new(3, 0).unwrap();
        assert_eq!(graph_poly(&empty), MultiPoly::constant(3, Rational::one()));
        let edge = LabeledGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(graph_poly(&edge), MultiPoly::parse("x_1-x_2", 3).unwrap());
        let path = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let expanded = MultiPoly::parse("x1x2 - x1x3 - x2x2 + x2x3", 3).unwrap();
        assert_eq!(graph_poly(&path), expanded);
        assert_eq!(expanded.to_string(), "x1*x2 - x1*x3 - x2^2 + x2*x3");
        assert_eq!(
            MultiPoly::parse("1-2x_3+x_1+x_2", 3).unwrap().to_string(),
            "x1 + x2 - 2*x3 + 1"
        );
        assert!(MultiPoly::parse("x_4", 3).is_err());
        assert!(MultiPoly::parse("(x_1", 3).is_err());
        let half = MultiPoly::constant(2, rat(1, 2));
        assert_eq!(half.mul(&half), MultiPoly::constant(2, rat(1, 4)));
    }

    #[test]
    fn relabeling_is_a_left_action() {
        let p = MultiPoly::parse("x1x1x2 - 3x2x3 + x3", 3).unwrap();
        for a in Permutation::all(3) {
            for b in Permutation::all(3) {
                assert_eq!(p.permute(&b).permute(&a), p.permute(&a.then(&b)));
            }
        }
    }

    #[test]
    fn dimensions() {
        let expected = [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)];
        for (n, dim) in expected {
            assert_eq!(build_vn(n, false).unwrap().dimension(), dim, "n = {n}");
        }
        let v3 = build_vn(3, false).unwrap();
        for text in ["1", "x_1-x_2", "x_2-x_3", "x_1-x_3"] {
            assert!(v3.contains(&MultiPoly::parse(text, 3).unwrap()));
        }
        assert!(!v3.contains(&MultiPoly::parse("x_1", 3).unwrap()));
        assert_eq!(v3.graded_dimensions(), BTreeMap::from([(0, 1), (1, 2)]));
    }

    #[test]
    fn closure_under_generators() {
        for n in 2..=5 {
            let basis = build_vn(n, false).unwrap();
            let mut gens: Vec<Permutation> = (0..n - 1).map(|i| Permutation::adjacent_transposition(n, i)).collect();
            gens.push(Permutation::long_cycle(n));
            for g in gens {
                assert!(basis.is_invariant(&g), "n = {n}, generator {g}");
            }
        }
    }

    #[test]
    fn traces() {
        let v3 = build_vn(3, false).unwrap();
        assert_eq!(sigma_character(&v3, &Partition::ones(3)).unwrap(), BigInt::from(3));
        assert_eq!(sigma_character(&v3, &Partition::parse("2,1").unwrap()).unwrap(), BigInt::from(1));
        assert_eq!(sigma_character(&v3, &Partition::row(3)).unwrap(), BigInt::zero());
        for n in 3..=5 {
            let basis = build_vn(n, false).unwrap();
            let mut values = BTreeMap::new();
            for pi in Permutation::all(n) {
                let lambda = pi.cycle_type();
                let t = basis.trace(&pi).unwrap();
                let previous = values.entry(lambda).or_insert_with(|| t.clone());
                assert_eq!(*previous, t, "trace is not a class function for n = {n}");
            }
            let m = trivial_multiplicity(&values);
            assert!(m.is_integer() && !m.is_negative());
        }
    }

    #[test]
    fn conjecture_small() {
        for n in 1..=5 {
            let report = verify_conjecture(n, false).unwrap();
            assert!(report.pass, "n = {n}: {report:?}");
        }
    }

    #[test]
    fn table() {
        for n in 3..=5 {
            let report = verify_table(n).unwrap();
            assert!(report.pass, "{report:?}");
        }
        assert_eq!(verify_table(3).unwrap().equivariant, Some(true));
        assert!(verify_table(6).is_err());
    }
}
