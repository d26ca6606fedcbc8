//! The sets `PF̂_{n,c}` and `PF̂_{a,b,c}` and the shift-corrected action of the
//! symmetric group on them, together with brute-force fixed-point and orbit
//! counts.
//!
//! Permutations act on sequences by `π·(x_1, …, x_m) = (x_{π_1}, …, x_{π_m})`
//! followed by the unique constant shift that makes the first `m - 1`
//! coordinates a parking function again. Products are read left to right,
//! `(σπ)(i) = π(σ(i))`, which makes this a left action:
//! `π·(σ·x) = (πσ)·x`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numth::{expect_integer, partitions_of, Partition, Rational};
use crate::parking::{format_word, ParkingRule};

/// A permutation of `[n]` in one-line notation, stored zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line images `π_1, …, π_n` given one-based.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::invalid(format!(
                    "{images:?} is not a permutation of [{n}]"
                )));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Parses `"1432"` (single digits) or `"1,4,3,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |t: &str| Error::Parse(format!("bad permutation entry {t:?}"));
        let images = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad(t)))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(&c.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::from_one_line(&images)
    }

    /// The canonical representative `(1 … λ_1)(λ_1+1 … λ_1+λ_2)⋯`.
    pub fn of_cycle_type(lambda: &Partition) -> Self {
        Permutation {
            images: lambda.canonical_permutation(),
        }
    }

    /// Swaps `i` and `i + 1` (zero-based).
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    /// The cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Every permutation of `[n]` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right product: `self.then(other)` maps `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts).expect("cycle lengths are positive")
    }

    /// Embeds into `S_{n+extra}` fixing the new points.
    pub fn extend(&self, extra: usize) -> Permutation {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(n..n + extra);
        Permutation { images }
    }
}

/// Product in the module's convention: `compose(p, q)(i) = q(p(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Permutation {
    p.then(q)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<u32> = self.images.iter().map(|&v| v as u32 + 1).collect();
        f.write_str(&format_word(&one_based))
    }
}

/// An element of `PF̂_{n,c}` (modulus `n`) or `PF̂_{a,b,c}` (modulus `b`).
///
/// The first `len - 1` coordinates form a parking function for the rule
/// `(len - 1, modulus)` and the coordinates sum to `target` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedPF {
    coords: Vec<u32>,
    modulus: u32,
    target: u32,
}

impl ExtendedPF {
    /// Validates and builds an element; `target` is reduced modulo `modulus`.
    pub fn new(coords: Vec<u32>, modulus: u32, target: u32) -> Result<Self> {
        if coords.is_empty() || modulus == 0 {
            return Err(Error::invalid("extended parking functions need length and modulus >= 1"));
        }
        let target = target % modulus;
        let rule = rule_for(coords.len(), modulus)?;
        let (body, last) = coords.split_at(coords.len() - 1);
        if !rule.accepts(body) {
            return Err(Error::invalid(format!(
                "{} does not start with a parking function",
                format_word(&coords)
            )));
        }
        if last[0] >= modulus {
            return Err(Error::invalid("last coordinate must be a residue"));
        }
        let sum: u64 = coords.iter().map(|&v| v as u64).sum();
        if (sum % modulus as u64) as u32 != target {
            return Err(Error::invalid(format!(
                "{} does not sum to {target} mod {modulus}",
                format_word(&coords)
            )));
        }
        Ok(ExtendedPF {
            coords,
            modulus,
            target,
        })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The residue `c mod modulus` (so `c = n` appears as `0`).
    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for ExtendedPF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.coords))
    }
}

fn rule_for(len: usize, modulus: u32) -> Result<ParkingRule> {
    let a = len - 1;
    if a == 0 {
        // the empty parking function; any modulus works
        return Ok(ParkingRule::classical(0));
    }
    ParkingRule::rational(a, modulus)
}

/// Applies `π` to `x`: permute coordinates, then add the unique parking shift.
pub fn apply(pi: &Permutation, x: &ExtendedPF) -> Result<ExtendedPF> {
    let len = x.len();
    if pi.degree() != len {
        return Err(Error::invalid(format!(
            "permutation of degree {} applied to a sequence of length {len}",
            pi.degree()
        )));
    }
    let modulus = x.modulus;
    if (len as u32) % modulus != 0 {
        return Err(Error::invalid(format!(
            "modulus {modulus} must divide the length {len} for the action to be defined"
        )));
    }
    let rule = rule_for(len, modulus)?;
    let mut out = Vec::with_capacity(len);
    let mut counts = Vec::new();
    let coords = apply_raw(&rule, pi.images(), &x.coords, modulus, &mut out, &mut counts)
        .ok_or_else(|| Error::assertion("no parking shift exists"))?;
    Ok(ExtendedPF {
        coords: coords.to_vec(),
        modulus,
        target: x.target,
    })
}

/// [`apply`] restricted to the rational family: checks `gcd(a, b) = 1` and
/// `b | (a + 1)` where `a + 1 = π.degree()`.
pub fn apply_rational(pi: &Permutation, x: &ExtendedPF) -> Result<ExtendedPF> {
    let a = x.len() as u64 - 1;
    let b = x.modulus as u64;
    if a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
    }
    if (a + 1) % b != 0 {
        return Err(Error::invalid(format!("{b} does not divide {}", a + 1)));
    }
    apply(pi, x)
}

fn apply_raw<'a>(
    rule: &ParkingRule,
    images: &[usize],
    coords: &[u32],
    modulus: u32,
    out: &'a mut Vec<u32>,
    counts: &mut Vec<u32>,
) -> Option<&'a [u32]> {
    out.clear();
    out.extend(images.iter().map(|&j| coords[j]));
    let body = &out[..out.len() - 1];
    let y = (0..modulus).find(|&y| rule.accepts_shifted(body, y, modulus, counts))?;
    for v in out.iter_mut() {
        *v = (*v + y) % modulus;
    }
    Some(out)
}

/// The full set `PF̂` for one choice of parameters, with enumeration order
/// inherited from the lexicographic order of the underlying parking functions.
#[derive(Clone, Debug)]
pub struct ExtendedSpace {
    rule: ParkingRule,
    modulus: u32,
    label: u32,
    elements: Vec<ExtendedPF>,
}

impl ExtendedSpace {
    /// `PF̂_{n,c}` for `1 ≤ c ≤ n`.
    pub fn classical(n: usize, c: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if c == 0 || c as usize > n {
            return Err(Error::invalid(format!("c = {c} must lie in [1, {n}]")));
        }
        Ok(Self::build(ParkingRule::classical(n - 1), n as u32, c))
    }

    /// `PF̂_{a,b,c}` for coprime `a, b` and `1 ≤ c ≤ b`. The set exists for any
    /// such parameters; acting on it additionally needs `b | (a + 1)`.
    pub fn rational(a: usize, b: u32, c: u32) -> Result<Self> {
        let rule = ParkingRule::rational(a, b)?;
        if c == 0 || c > b {
            return Err(Error::invalid(format!("c = {c} must lie in [1, {b}]")));
        }
        Ok(Self::build(rule, b, c))
    }

    fn build(rule: ParkingRule, modulus: u32, label: u32) -> Self {
        let target = label % modulus;
        let elements = rule
            .enumerate()
            .into_iter()
            .map(|pf| {
                let mut coords = pf.into_coords();
                let sum: u64 = coords.iter().map(|&v| v as u64).sum();
                let m = modulus as u64;
                let last = (target as u64 + m - sum % m) % m;
                coords.push(last as u32);
                ExtendedPF {
                    coords,
                    modulus,
                    target,
                }
            })
            .collect();
        ExtendedSpace {
            rule,
            modulus,
            label,
            elements,
        }
    }

    pub fn elements(&self) -> &[ExtendedPF] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Degree of the acting symmetric group (sequence length).
    pub fn degree(&self) -> usize {
        self.rule.len() + 1
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The parameter `c` as given, in `[1, modulus]`.
    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn acts(&self) -> bool {
        self.degree() as u32 % self.modulus == 0
    }

    fn require_action(&self) -> Result<()> {
        if self.acts() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "{} does not divide {}; no action is defined",
                self.modulus,
                self.degree()
            )))
        }
    }

    pub fn apply(&self, pi: &Permutation, x: &ExtendedPF) -> Result<ExtendedPF> {
        self.require_action()?;
        apply(pi, x)
    }

    /// Number of elements fixed by `pi`.
    pub fn fixed_points(&self, pi: &Permutation) -> Result<u64> {
        self.require_action()?;
        if pi.degree() != self.degree() {
            return Err(Error::invalid("permutation degree mismatch"));
        }
        let mut out = Vec::with_capacity(self.degree());
        let mut counts = Vec::new();
        let mut fixed = 0;
        for x in &self.elements {
            let image = apply_raw(&self.rule, pi.images(), &x.coords, self.modulus, &mut out, &mut counts)
                .ok_or_else(|| Error::assertion("no parking shift exists"))?;
            if image == x.coords.as_slice() {
                fixed += 1;
            }
        }
        Ok(fixed)
    }

    /// Brute-force character value at cycle type `lambda`.
    pub fn character_at(&self, lambda: &Partition) -> Result<BigInt> {
        if lambda.size() != self.degree() {
            return Err(Error::invalid(format!(
                "{lambda} is not a partition of {}",
                self.degree()
            )));
        }
        Ok(BigInt::from(self.fixed_points(&Permutation::of_cycle_type(lambda))?))
    }

    /// Brute-force character on every cycle type.
    pub fn character(&self) -> Result<BTreeMap<Partition, BigInt>> {
        partitions_of(self.degree())
            .into_par_iter()
            .map(|lambda| {
                let value = self.character_at(&lambda)?;
                Ok((lambda, value))
            })
            .collect()
    }

    /// Burnside: `Σ_λ fix(λ)/z_λ`.
    pub fn burnside_orbit_count(&self) -> Result<BigInt> {
        let total = self
            .character()?
            .into_iter()
            .fold(Rational::zero(), |acc, (lambda, fix)| {
                acc + Rational::new(fix, lambda.z())
            });
        expect_integer(&total, "Burnside orbit count")
    }

    /// Explicit orbits via union-find under adjacent transpositions and the
    /// long cycle. Each orbit lists its elements in enumeration order; orbits
    /// are ordered by their first element.
    pub fn orbit_decomposition(&self) -> Result<Vec<Vec<ExtendedPF>>> {
        self.require_action()?;
        let n = self.degree();
        let index: HashMap<&[u32], usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.coords.as_slice(), i))
            .collect();
        let mut generators: Vec<Permutation> =
            (0..n.saturating_sub(1)).map(|i| Permutation::adjacent_transposition(n, i)).collect();
        if n > 2 {
            generators.push(Permutation::long_cycle(n));
        }
        let mut forest = UnionFind::new(self.elements.len());
        let mut out = Vec::with_capacity(n);
        let mut counts = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            for g in &generators {
                let image = apply_raw(&self.rule, g.images(), &x.coords, self.modulus, &mut out, &mut counts)
                    .ok_or_else(|| Error::assertion("no parking shift exists"))?;
                let j = *index
                    .get(image)
                    .ok_or_else(|| Error::assertion("action left the set"))?;
                forest.union(i, j);
            }
        }
        let mut groups: BTreeMap<usize, Vec<ExtendedPF>> = BTreeMap::new();
        let mut first_of_root: HashMap<usize, usize> = HashMap::new();
        for (i, x) in self.elements.iter().enumerate() {
            let root = forest.find(i);
            let first = *first_of_root.entry(root).or_insert(i);
            groups.entry(first).or_default().push(x.clone());
        }
        Ok(groups.into_values().collect())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `PF̂_{n,c}` in enumeration order.
pub fn build_epf_set(n: usize, c: u32) -> Result<Vec<ExtendedPF>> {
    Ok(ExtendedSpace::classical(n, c)?.elements)
}

/// Number of elements of `PF̂_{n,c}` fixed by the canonical permutation of
/// cycle type `lambda`.
pub fn brute_character(n: usize, c: u32, lambda: &Partition) -> Result<BigInt> {
    ExtendedSpace::classical(n, c)?.character_at(lambda)
}

pub fn burnside_orbit_count(n: usize, c: u32) -> Result<BigInt> {
    ExtendedSpace::classical(n, c)?.burnside_orbit_count()
}

pub fn orbit_decomposition(n: usize, c: u32) -> Result<Vec<Vec<ExtendedPF>>> {
    ExtendedSpace::classical(n, c)?.orbit_decomposition()
}

/// Brute-force character of `τ_{a,b,c}` at cycle type `lambda ⊢ a + 1`.
pub fn brute_character_rational(a: usize, b: u32, c: u32, lambda: &Partition) -> Result<BigInt> {
    ExtendedSpace::rational(a, b, c)?.character_at(lambda)
}

pub fn burnside_orbit_count_rational(a: usize, b: u32, c: u32) -> Result<BigInt> {
    ExtendedSpace::rational(a, b, c)?.burnside_orbit_count()
}

/// Brute-force character of the restriction of `τ_{n,c}` to `S_{n-1}`
/// (permutations fixing `n`) at cycle type `lambda ⊢ n - 1`.
pub fn restricted_character(n: usize, c: u32, lambda: &Partition) -> Result<BigInt> {
    if lambda.size() + 1 != n {
        return Err(Error::invalid(format!("{lambda} is not a partition of {}", n - 1)));
    }
    let space = ExtendedSpace::classical(n, c)?;
    let pi = Permutation::of_cycle_type(lambda).extend(1);
    Ok(BigInt::from(space.fixed_points(&pi)?))
}

/// Normalizes `c ∈ [1, n]` to its residue, with `c = n ↔ 0`.
pub fn residue(c: u32, n: u32) -> u32 {
    c % n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn epf(word: &str, modulus: u32, target: u32) -> ExtendedPF {
        let coords = crate::parking::parse_word(word).unwrap();
        ExtendedPF::new(coords, modulus, target).unwrap()
    }

    fn words(v: &[ExtendedPF]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn small_sets() {
        assert_eq!(words(&build_epf_set(3, 1).unwrap()), vec!["001", "010", "100"]);
        assert_eq!(words(&build_epf_set(3, 2).unwrap()), vec!["002", "011", "101"]);
        assert_eq!(words(&build_epf_set(3, 3).unwrap()), vec!["000", "012", "102"]);
        for c in 1..=4 {
            assert_eq!(build_epf_set(4, c).unwrap().len(), 16);
        }
        assert_eq!(build_epf_set(1, 1).unwrap().len(), 1);
        assert!(build_epf_set(3, 0).is_err());
        assert!(build_epf_set(3, 4).is_err());
    }

    #[test]
    fn documented_action_example() {
        let pi = Permutation::parse("1432").unwrap();
        let x = epf("0003", 4, 3);
        assert_eq!(apply(&pi, &x).unwrap().to_string(), "1011");
    }

    #[test]
    fn transposition_example_without_shift() {
        let pi = Permutation::parse("213").unwrap();
        assert_eq!(apply(&pi, &epf("011", 3, 2)).unwrap().to_string(), "101");
    }

    #[test]
    fn identity_acts_trivially() {
        for n in 1..=5 {
            for c in 1..=n as u32 {
                let id = Permutation::identity(n);
                for x in build_epf_set(n, c).unwrap() {
                    assert_eq!(apply(&id, &x).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn left_action_axiom_and_bijectivity() {
        for n in 1..=5usize {
            let perms = Permutation::all(n);
            for c in 1..=n as u32 {
                let space = ExtendedSpace::classical(n, c).unwrap();
                let set: std::collections::HashSet<&ExtendedPF> = space.elements().iter().collect();
                for pi in &perms {
                    let mut images = std::collections::HashSet::new();
                    for x in space.elements() {
                        let y = apply(pi, x).unwrap();
                        assert!(set.contains(&y));
                        images.insert(y);
                    }
                    assert_eq!(images.len(), space.len());
                }
                // the axiom on a sub-sample of pairs keeps the n = 5 case quick
                let step = if n == 5 { 7 } else { 1 };
                for pi in perms.iter().step_by(step) {
                    for sigma in perms.iter().step_by(step) {
                        let product = compose(pi, sigma);
                        for x in space.elements() {
                            let lhs = apply(pi, &apply(sigma, x).unwrap()).unwrap();
                            let rhs = apply(&product, x).unwrap();
                            assert_eq!(lhs, rhs, "pi={pi} sigma={sigma} x={x}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brute_character_examples() {
        let p = |s: &str| Partition::parse(s).unwrap();
        assert_eq!(brute_character(3, 1, &p("2,1")).unwrap(), BigInt::from(1));
        assert_eq!(brute_character(3, 3, &p("3")).unwrap(), BigInt::from(3));
        assert_eq!(brute_character(3, 1, &p("3")).unwrap(), BigInt::from(0));
        assert!(brute_character(3, 1, &p("2")).is_err());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(burnside_orbit_count(3, 3).unwrap(), BigInt::from(2));
        assert_eq!(burnside_orbit_count(3, 1).unwrap(), BigInt::from(1));
        assert_eq!(burnside_orbit_count(4, 1).unwrap(), BigInt::from(2));
        let orbits = orbit_decomposition(3, 3).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(words(&orbits[0]), vec!["000"]);
        assert_eq!(words(&orbits[1]), vec!["012", "102"]);
    }

    #[test]
    fn burnside_matches_explicit_orbits() {
        for n in 1..=6usize {
            for c in 1..=n as u32 {
                let space = ExtendedSpace::classical(n, c).unwrap();
                let count = space.burnside_orbit_count().unwrap();
                let orbits = space.orbit_decomposition().unwrap();
                assert_eq!(count, BigInt::from(orbits.len()), "n={n} c={c}");
                assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), space.len());
            }
        }
    }

    #[test]
    fn rational_closure_and_action() {
        for &(a, b) in &[(2usize, 3u32), (3, 2), (3, 4), (5, 2), (5, 3), (5, 6)] {
            let space = ExtendedSpace::rational(a, b, 1).unwrap();
            assert_eq!(space.len(), (b as usize).pow(a as u32 - 1));
            let set: std::collections::HashSet<&ExtendedPF> = space.elements().iter().collect();
            let perms = Permutation::all(a + 1);
            for pi in perms.iter().step_by(if a == 5 { 11 } else { 1 }) {
                let mut images = std::collections::HashSet::new();
                for x in space.elements() {
                    let y = apply_rational(pi, x).unwrap();
                    assert!(set.contains(&y));
                    images.insert(y);
                }
                assert_eq!(images.len(), space.len());
            }
        }
    }

    #[test]
    fn rational_full_closure_for_three_two() {
        let space = ExtendedSpace::rational(3, 2, 1).unwrap();
        let mut domain: Vec<ExtendedPF> = space.elements().to_vec();
        domain.sort();
        for pi in Permutation::all(4) {
            let mut image: Vec<ExtendedPF> = domain.iter().map(|x| apply_rational(&pi, x).unwrap()).collect();
            image.sort();
            assert_eq!(image, domain);
        }
    }

    #[test]
    fn rational_action_axiom_spot_check() {
        let space = ExtendedSpace::rational(5, 3, 1).unwrap();
        let perms = Permutation::all(6);
        for (k, pi) in perms.iter().enumerate().step_by(37) {
            let sigma = &perms[(k * 17 + 5) % perms.len()];
            let product = compose(pi, sigma);
            for x in space.elements() {
                let lhs = apply_rational(pi, &apply_rational(sigma, x).unwrap()).unwrap();
                assert_eq!(lhs, apply_rational(&product, x).unwrap());
            }
        }
    }

    #[test]
    fn rational_action_requires_divisibility() {
        let space = ExtendedSpace::rational(3, 5, 1).unwrap();
        assert!(!space.acts());
        let x = &space.elements()[0];
        assert!(apply_rational(&Permutation::identity(4), x).is_err());
        assert!(space.burnside_orbit_count().is_err());
    }

    #[test]
    fn permutation_basics() {
        let pi = Permutation::parse("1432").unwrap();
        assert_eq!(pi.to_string(), "1432");
        assert_eq!(pi.cycle_type(), Partition::parse("2,1,1").unwrap());
        assert_eq!(pi.then(&pi.inverse()), Permutation::identity(4));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::parse("1224").is_err());
        assert!(Permutation::parse("1,4,3,2").is_ok());
        let lambda = Partition::parse("3,2,1").unwrap();
        assert_eq!(Permutation::of_cycle_type(&lambda).cycle_type(), lambda);
    }

    #[test]
    fn invalid_elements_rejected() {
        assert!(ExtendedPF::new(vec![0, 3, 0, 0], 4, 3).is_err());
        assert!(ExtendedPF::new(vec![0, 0, 1], 3, 2).is_err());
        assert!(ExtendedPF::new(vec![0, 0, 2], 3, 2).is_ok());
    }
}
