//! Symmetric functions of a fixed degree in the power-sum, complete
//! homogeneous and Schur bases, with exact rational coefficients.
//!
//! Schur coefficients come from inner products against the irreducible
//! character table; `h`-coefficients from a triangular solve against the
//! power-sum expansions of the `h_μ`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::character::CharacterVector;
use crate::error::{Error, Result};
use crate::numth::{expect_integer, partitions_of, pow_signed, rat_int, Partition, Rational};

/// Default upper bound on the degree of character tables.
pub const DEFAULT_TABLE_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// power sums `p_λ`
    P,
    /// complete homogeneous `h_λ`
    H,
    /// Schur functions `s_λ`
    S,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::S => "s",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis {other:?}, expected p, h or s"))),
        }
    }
}

/// A homogeneous symmetric function of degree `n` expanded in one basis.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFun {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFun {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from `(λ, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFun::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::invalid(format!(
                    "{lambda} has size {} but the degree is {degree}",
                    lambda.size()
                )));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut f = SymFun::zero(degree, basis);
        f.add_term(lambda, Rational::one());
        f
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
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

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "expected a function in the {} basis, got {}",
                basis.name(),
                self.basis.name()
            )))
        }
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let (sign, magnitude) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let label: String = lambda.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            if magnitude.is_one() {
                write!(f, "{}[{label}]", self.basis.name())?;
            } else {
                write!(f, "{magnitude}·{}[{label}]", self.basis.name())?;
            }
        }
        Ok(())
    }
}

/// `Frob(χ) = Σ_λ χ(λ) p_λ / z_λ`.
pub fn frobenius(chi: &CharacterVector) -> SymFun {
    let mut f = SymFun::zero(chi.degree(), Basis::P);
    for (lambda, value) in chi.iter() {
        f.add_term(lambda.clone(), Rational::new(value.clone(), lambda.z()));
    }
    f
}

/// The irreducible characters `χ^μ(λ)` of `S_n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    // entries[i][j] = χ^{partitions[i]}(partitions[j])
    entries: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// Builds the table by the Murnaghan–Nakayama rule, refusing degrees above
    /// `bound`.
    pub fn with_bound(n: usize, bound: usize) -> Result<Self> {
        if n > bound {
            return Err(Error::ResourceBound(format!(
                "character table of degree {n} exceeds the bound {bound}"
            )));
        }
        let partitions = partitions_of(n);
        let mut memo = HashMap::new();
        let entries = partitions
            .iter()
            .map(|mu| {
                partitions
                    .iter()
                    .map(|lambda| murnaghan_nakayama(mu.parts(), lambda.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Ok(CharacterTable {
            n,
            partitions,
            entries,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, lambda: &Partition) -> Result<usize> {
        self.partitions
            .binary_search(lambda)
            .map_err(|_| Error::invalid(format!("{lambda} is not a partition of {}", self.n)))
    }

    /// `χ^μ(λ)`.
    pub fn value(&self, mu: &Partition, lambda: &Partition) -> Result<i64> {
        Ok(self.entries[self.index(mu)?][self.index(lambda)?])
    }

    /// `f^μ = χ^μ(1^n)`.
    pub fn dimension(&self, mu: &Partition) -> Result<i64> {
        self.value(mu, &Partition::ones(self.n))
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> bool {
        let z: Vec<BigInt> = self.partitions.iter().map(Partition::z).collect();
        let k = self.partitions.len();
        for a in 0..k {
            for b in a..k {
                // rows
                let row = (0..k).fold(Rational::zero(), |acc, j| {
                    acc + Rational::new(BigInt::from(self.entries[a][j] * self.entries[b][j]), z[j].clone())
                });
                if row != rat_int(i64::from(a == b)) {
                    return false;
                }
                // columns
                let col: i64 = (0..k).map(|i| self.entries[i][a] * self.entries[i][b]).sum();
                let expected = if a == b { z[a].clone() } else { BigInt::zero() };
                if BigInt::from(col) != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// The character table of `S_n` for `n ≤ DEFAULT_TABLE_BOUND`.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    CharacterTable::with_bound(n, DEFAULT_TABLE_BOUND)
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

// χ^shape(cycles) by stripping border strips of length cycles[0].
fn murnaghan_nakayama(shape: &[usize], cycles: &[usize], memo: &mut MnMemo) -> i64 {
    if cycles.is_empty() {
        return i64::from(shape.is_empty());
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = cycles[0];
    let len = shape.len();
    // beta-set: distinct first-column hook lengths
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        total += sign * murnaghan_nakayama(&reduced, &cycles[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Schur expansion of a power-sum expansion: `[s_μ] f = Σ_λ a_λ χ^μ(λ)`.
pub fn to_schur_with(f: &SymFun, table: &CharacterTable) -> Result<SymFun> {
    f.require(Basis::P)?;
    if table.degree() != f.degree {
        return Err(Error::invalid("character table degree mismatch"));
    }
    let mut out = SymFun::zero(f.degree, Basis::S);
    for mu in table.partitions() {
        let c = f.terms().try_fold(Rational::zero(), |acc, (lambda, a)| {
            Ok::<_, Error>(acc + a * rat_int(table.value(mu, lambda)?))
        })?;
        out.add_term(mu.clone(), c);
    }
    Ok(out)
}

pub fn to_schur(f: &SymFun) -> Result<SymFun> {
    to_schur_with(f, &character_table(f.degree)?)
}

/// Schur coefficients that are not nonnegative integers; empty for the
/// characteristic of a genuine representation.
pub fn schur_defects(s: &SymFun) -> Vec<(Partition, Rational)> {
    s.terms()
        .filter(|(_, c)| !c.is_integer() || c.is_negative())
        .map(|(l, c)| (l.clone(), c.clone()))
        .collect()
}

/// Power-sum expansion of `h_k = Σ_{λ ⊢ k} p_λ / z_λ`.
fn h_single(k: usize) -> Vec<(Partition, Rational)> {
    partitions_of(k)
        .into_iter()
        .map(|l| {
            let z = l.z();
            (l, Rational::new(BigInt::one(), z))
        })
        .collect()
}

/// Power-sum expansion of `h_μ = ∏ h_{μ_i}`.
pub fn h_in_p(mu: &Partition) -> BTreeMap<Partition, Rational> {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    acc.insert(Partition::empty(), Rational::one());
    for &part in mu.parts() {
        let factor = h_single(part);
        let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (lambda, c) in &acc {
            for (nu, d) in &factor {
                *next.entry(lambda.union(nu)).or_insert_with(Rational::zero) += c * d;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Converts an `h`-expansion to the power-sum basis.
pub fn h_to_p(f: &SymFun) -> Result<SymFun> {
    f.require(Basis::H)?;
    let mut out = SymFun::zero(f.degree, Basis::P);
    for (mu, b) in f.terms() {
        for (lambda, m) in h_in_p(mu) {
            out.add_term(lambda, b * m);
        }
    }
    Ok(out)
}

/// Converts a power-sum expansion to the `h` basis.
///
/// The transition matrix `M[μ][λ] = [p_λ] h_μ` is supported on refinements
/// `λ ≤ μ`, so it is triangular in canonical order with diagonal
/// `∏ 1/μ_i`; forward substitution solves it.
pub fn to_h(f: &SymFun) -> Result<SymFun> {
    f.require(Basis::P)?;
    let parts = partitions_of(f.degree);
    let rows: Vec<BTreeMap<Partition, Rational>> = parts.iter().map(h_in_p).collect();
    let mut solved: Vec<Rational> = Vec::with_capacity(parts.len());
    for (i, mu) in parts.iter().enumerate() {
        let diagonal = rows[i]
            .get(mu)
            .cloned()
            .ok_or_else(|| Error::assertion(format!("zero pivot for h[{}]", mu.key())))?;
        let mut residual = f.coeff(mu);
        for (j, row) in rows.iter().enumerate().take(i) {
            if let Some(m) = row.get(mu) {
                residual -= &solved[j] * m;
            }
        }
        for row in rows.iter().skip(i + 1) {
            if row.contains_key(mu) {
                return Err(Error::assertion("h-to-p transition matrix is not triangular"));
            }
        }
        solved.push(residual / diagonal);
    }
    SymFun::from_terms(f.degree, Basis::H, parts.into_iter().zip(solved))
}

/// Converts any expansion to the power-sum basis.
pub fn to_p(f: &SymFun) -> Result<SymFun> {
    match f.basis {
        Basis::P => Ok(f.clone()),
        Basis::H => h_to_p(f),
        Basis::S => {
            let table = character_table(f.degree)?;
            let mut out = SymFun::zero(f.degree, Basis::P);
            for (mu, c) in f.terms() {
                for lambda in table.partitions() {
                    let chi = table.value(mu, lambda)?;
                    out.add_term(lambda.clone(), c * Rational::new(BigInt::from(chi), lambda.z()));
                }
            }
            Ok(out)
        }
    }
}

/// Expresses `f` in the requested basis.
pub fn convert(f: &SymFun, target: Basis) -> Result<SymFun> {
    let p = to_p(f)?;
    match target {
        Basis::P => Ok(p),
        Basis::H => to_h(&p),
        Basis::S => to_schur(&p),
    }
}

/// `[s_μ] f` for a power-sum expansion `f`; must be an integer.
pub fn multiplicity(f: &SymFun, mu: &Partition) -> Result<BigInt> {
    f.require(Basis::P)?;
    if mu.size() != f.degree {
        return Err(Error::invalid(format!("{mu} is not a partition of {}", f.degree)));
    }
    let s = to_schur(f)?;
    expect_integer(&s.coeff(mu), &format!("multiplicity of s[{}]", mu.key()))
}

pub fn is_h_positive(f: &SymFun) -> Result<bool> {
    Ok(convert(f, Basis::H)?.is_nonnegative())
}

/// All Schur coefficients are nonnegative integers.
pub fn is_schur_positive(f: &SymFun) -> Result<bool> {
    Ok(schur_defects(&convert(f, Basis::S)?).is_empty())
}

/// Multiplicity of the standard representation `s_{(n-1,1)}` in `τ_{n,1}`,
/// from `Cat_{n-1} - o_{n,1}`.
pub fn standard_multiplicity(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("standard multiplicity needs n >= 2"));
    }
    Ok(crate::parking::catalan(n as u64 - 1) - crate::orbits::orbits_c1(n as u64)?)
}

/// Evaluates a power-sum expansion at `(1, …, 1, 0, …)` with `n` ones:
/// `p_λ ↦ n^{ℓ(λ)}`.
pub fn principal_specialization(f: &SymFun, n: u64) -> Result<Rational> {
    f.require(Basis::P)?;
    Ok(f.terms().fold(Rational::zero(), |acc, (lambda, c)| {
        acc + c * pow_signed(n, lambda.len() as i64)
    }))
}
