//! Computable subsets of ℕ and filters on ℕ.
//!
//! An [`IndexSet`] is an eventually periodic subset of ℕ: a union of
//! residue classes modulo some period, adjusted by finitely many added and
//! removed points. These sets are closed under the Boolean operations, and
//! they are rich enough to exhibit zero divisors and incomparable elements
//! in the quotient algebras built on top of them.
//!
//! A [`FilterSpec`] names one of three filter kinds with a decidable
//! membership test:
//!
//! * `Frechet` — the cofinite sets;
//! * `PrincipalAt(k)` — all sets containing `k`;
//! * `SupersetOf(base)` — all sets containing `base` up to a finite
//!   difference, for an infinite eventually periodic `base` (the filter
//!   generated by `base` together with the cofinite sets).
//!
//! Free ultrafilters admit no computable membership test and are
//! deliberately not represented.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

/// An eventually periodic subset of ℕ in canonical form.
///
/// The set represented is `(⋃ residue classes mod modulus) ∪ added ∖ removed`.
/// Canonical form means: `modulus` is the minimal period of the periodic
/// part, every member of `added` lies outside the periodic part, and every
/// member of `removed` lies inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    added: BTreeSet<u64>,
    removed: BTreeSet<u64>,
}

impl IndexSet {
    /// Builds the canonical form of `(⋃ classes of residues mod modulus) ∪ added ∖ removed`.
    ///
    /// The raw data need not be canonical; residues are reduced mod
    /// `modulus`, exceptional points are sorted into `added`/`removed`, and
    /// the period is minimized.
    ///
    /// # Panics
    /// Panics if `modulus == 0`.
    pub fn new(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        added: impl IntoIterator<Item = u64>,
        removed: impl IntoIterator<Item = u64>,
    ) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let residues: BTreeSet<u64> = residues.into_iter().map(|r| r % modulus).collect();
        let added: BTreeSet<u64> = added.into_iter().collect();
        let removed: BTreeSet<u64> = removed.into_iter().collect();

        // Membership in the raw (pre-canonical) set.
        let raw_contains = |n: u64| -> bool {
            let periodic = residues.contains(&(n % modulus));
            (periodic || added.contains(&n)) && !removed.contains(&n)
        };

        // The periodic part is untouched by the finite edits, so the minimal
        // period divides `modulus`: take the smallest divisor whose classes
        // reproduce the residue pattern.
        let mut minimal = modulus;
        for d in divisors(modulus) {
            if (0..modulus).all(|r| residues.contains(&r) == residues.contains(&(r % d))) {
                minimal = d;
                break;
            }
        }
        let min_residues: BTreeSet<u64> = residues.iter().map(|r| r % minimal).collect();

        // Re-derive the exceptional points against the minimized periodic part.
        let mut canon_added = BTreeSet::new();
        let mut canon_removed = BTreeSet::new();
        for &n in added.iter().chain(removed.iter()) {
            let in_set = raw_contains(n);
            let in_periodic = min_residues.contains(&(n % minimal));
            match (in_set, in_periodic) {
                (true, false) => {
                    canon_added.insert(n);
                }
                (false, true) => {
                    canon_removed.insert(n);
                }
                _ => {}
            }
        }

        IndexSet {
            modulus: minimal,
            residues: min_residues,
            added: canon_added,
            removed: canon_removed,
        }
    }

    /// The set of all naturals.
    pub fn full() -> Self {
        IndexSet::new(1, [0], [], [])
    }

    /// The empty set.
    pub fn empty() -> Self {
        IndexSet::new(1, [], [], [])
    }

    /// A finite set given by its elements.
    pub fn finite(elems: impl IntoIterator<Item = u64>) -> Self {
        IndexSet::new(1, [], elems, [])
    }

    /// The even naturals.
    pub fn evens() -> Self {
        IndexSet::new(2, [0], [], [])
    }

    /// The odd naturals.
    pub fn odds() -> Self {
        IndexSet::new(2, [1], [], [])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    /// Decides membership of `n`.
    pub fn contains(&self, n: u64) -> bool {
        if self.removed.contains(&n) {
            return false;
        }
        self.residues.contains(&(n % self.modulus)) || self.added.contains(&n)
    }

    /// True when the set is infinite, i.e. its periodic part is nonempty.
    pub fn is_infinite(&self) -> bool {
        !self.residues.is_empty()
    }

    /// True when the set is finite; its members are then exactly `added`.
    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    /// True when the complement is finite.
    pub fn is_cofinite(&self) -> bool {
        self.residues.len() as u64 == self.modulus
    }

    /// Exact union.
    pub fn union(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a || b)
    }

    /// Exact intersection.
    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && b)
    }

    /// Exact complement within ℕ.
    pub fn complement(&self) -> IndexSet {
        let residues: Vec<u64> = (0..self.modulus)
            .filter(|r| !self.residues.contains(r))
            .collect();
        IndexSet::new(
            self.modulus,
            residues,
            self.removed.iter().copied(),
            self.added.iter().copied(),
        )
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        self.intersection(&other.complement())
    }

    fn combine(&self, other: &IndexSet, op: impl Fn(bool, bool) -> bool) -> IndexSet {
        let lcm = self.modulus.lcm(&other.modulus);
        let residues: Vec<u64> = (0..lcm)
            .filter(|&r| {
                op(
                    self.residues.contains(&(r % self.modulus)),
                    other.residues.contains(&(r % other.modulus)),
                )
            })
            .collect();
        // Away from the finitely many exceptional points both operands agree
        // with their periodic parts, so only those points need sorting out;
        // IndexSet::new re-derives added/removed from raw membership.
        let exceptional: BTreeSet<u64> = self
            .added
            .iter()
            .chain(self.removed.iter())
            .chain(other.added.iter())
            .chain(other.removed.iter())
            .copied()
            .collect();
        let mut added = Vec::new();
        let mut removed = Vec::new();
        for &n in &exceptional {
            let actual = op(self.contains(n), other.contains(n));
            let periodic = op(
                self.residues.contains(&(n % self.modulus)),
                other.residues.contains(&(n % other.modulus)),
            );
            if actual && !periodic {
                added.push(n);
            } else if !actual && periodic {
                removed.push(n);
            }
        }
        IndexSet::new(lcm, residues, added, removed)
    }
}

/// Textual notation: `mod 2 {0} + {7} - {2}`, with the `+`/`-` parts optional.
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, items: &BTreeSet<u64>) -> fmt::Result {
            write!(f, "{{")?;
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")
        }
        write!(f, "mod {} ", self.modulus)?;
        list(f, &self.residues)?;
        if !self.added.is_empty() {
            write!(f, " + ")?;
            list(f, &self.added)?;
        }
        if !self.removed.is_empty() {
            write!(f, " - ")?;
            list(f, &self.removed)?;
        }
        Ok(())
    }
}

/// Parses the notation produced by `Display`.
impl std::str::FromStr for IndexSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let rest = s
            .strip_prefix("mod")
            .ok_or_else(|| format!("expected `mod`, got `{s}`"))?
            .trim_start();
        let brace = rest
            .find('{')
            .ok_or_else(|| "expected `{` after modulus".to_string())?;
        let modulus: u64 = rest[..brace]
            .trim()
            .parse()
            .map_err(|e| format!("bad modulus: {e}"))?;
        if modulus == 0 {
            return Err("modulus must be positive".into());
        }
        let mut rest = &rest[brace..];
        let residues = parse_braced_list(&mut rest)?;
        let mut added = Vec::new();
        let mut removed = Vec::new();
        loop {
            let trimmed = rest.trim_start();
            if let Some(r) = trimmed.strip_prefix('+') {
                rest = r;
                added = parse_braced_list(&mut rest)?;
            } else if let Some(r) = trimmed.strip_prefix('-') {
                rest = r;
                removed = parse_braced_list(&mut rest)?;
            } else if trimmed.is_empty() {
                break;
            } else {
                return Err(format!("unexpected trailing input `{trimmed}`"));
            }
        }
        Ok(IndexSet::new(modulus, residues, added, removed))
    }
}

fn parse_braced_list(rest: &mut &str) -> Result<Vec<u64>, String> {
    let s = rest.trim_start();
    let s = s
        .strip_prefix('{')
        .ok_or_else(|| format!("expected `{{`, got `{s}`"))?;
    let close = s.find('}').ok_or_else(|| "missing `}`".to_string())?;
    let inner = &s[..close];
    *rest = &s[close + 1..];
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| format!("bad element `{t}`: {e}"))
        })
        .collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// One of the three supported filter kinds on ℕ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FilterSpec {
    /// The cofinite (Fréchet) filter.
    Frechet,
    /// The principal ultrafilter at `k`: all sets containing `k`. Its
    /// quotient collapses onto plain numbers via evaluation at `k`, which
    /// makes it the oracle back-end for the whole algebra.
    PrincipalAt(u64),
    /// The filter generated by an infinite eventually periodic `base`
    /// together with the cofinite sets: all sets containing `base` up to a
    /// finite difference.
    SupersetOf(IndexSet),
}

impl FilterSpec {
    /// Builds a `SupersetOf` filter, rejecting finite bases (the induced
    /// ideal would be improper).
    pub fn superset_of(base: IndexSet) -> Result<FilterSpec, String> {
        if !base.is_infinite() {
            return Err("SupersetOf base must be infinite (nonempty residues)".into());
        }
        Ok(FilterSpec::SupersetOf(base))
    }

    /// Decides `S ∈ F`.
    ///
    /// Fréchet: true iff the complement of `S` is finite. Principal at `k`:
    /// true iff `k ∈ S`. Superset of `A`: true iff `A ∖ S` is finite.
    pub fn is_member(&self, set: &IndexSet) -> bool {
        match self {
            FilterSpec::Frechet => set.is_cofinite(),
            FilterSpec::PrincipalAt(k) => set.contains(*k),
            FilterSpec::SupersetOf(base) => base.difference(set).is_finite(),
        }
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterSpec::Frechet => write!(f, "frechet"),
            FilterSpec::PrincipalAt(k) => write!(f, "principal:{k}"),
            FilterSpec::SupersetOf(base) => write!(f, "superset:{base}"),
        }
    }
}
