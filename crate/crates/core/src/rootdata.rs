//! Split classical root data in the standard coordinate realisations.
//!
//! Roots (characters) and coweights (cocharacters) both live in `Z^d` with the
//! dot product as the pairing; `d` is `n` for type `A_{n-1}` and the rank for
//! `B`, `C`, `D`. Coweight lattices follow the simply-connected convention
//! (coroot lattice) except for `A^{GL}`, whose lattice is all of `Z^n`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    /// `A_{r}` with the `SL_{r+1}` cocharacter lattice (coordinates sum to zero).
    ASl,
    /// `A_{r}` with the `GL_{r+1}` cocharacter lattice `Z^{r+1}`.
    AGl,
    B,
    C,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    positive_roots: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
}

/// A cocharacter of the maximal torus, in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Coweight {
        Coweight(coords)
    }

    pub fn zero(dim: usize) -> Coweight {
        Coweight(vec![0; dim])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A Weyl group element as a signed permutation:
/// `(w x)_i = signs[i] * x[source[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    source: Vec<usize>,
    signs: Vec<i64>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> WeylElement {
        WeylElement {
            source: (0..dim).collect(),
            signs: vec![1; dim],
        }
    }

    pub fn from_parts(source: Vec<usize>, signs: Vec<i64>) -> WeylElement {
        assert_eq!(source.len(), signs.len());
        assert!(signs.iter().all(|s| s.abs() == 1));
        WeylElement { source, signs }
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.source.iter().enumerate().all(|(i, &s)| i == s) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.source
            .iter()
            .zip(&self.signs)
            .map(|(&s, &e)| e * x[s])
            .collect()
    }

    pub fn inverse(&self) -> WeylElement {
        let mut source = vec![0; self.source.len()];
        let mut signs = vec![1; self.source.len()];
        for (i, &s) in self.source.iter().enumerate() {
            source[s] = i;
            signs[s] = self.signs[i];
        }
        WeylElement { source, signs }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let source = self.source.iter().map(|&s| other.source[s]).collect();
        let signs = self
            .source
            .iter()
            .zip(&self.signs)
            .map(|(&s, &e)| e * other.signs[s])
            .collect();
        WeylElement { source, signs }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.source.iter().zip(&self.signs).map(|(s, e)| {
            if *e < 0 {
                format!("-{}", s + 1)
            } else {
                format!("{}", s + 1)
            }
        });
        write!(f, "[{}]", parts.format(" "))
    }
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pair_vec(dim: usize, i: usize, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = sj;
    v
}

impl RootSystem {
    pub fn new(kind: RootType, rank: usize) -> Result<RootSystem> {
        let min_rank = if kind == RootType::D { 2 } else { 1 };
        if rank < min_rank {
            return Err(Error::InvalidRootSystem(format!("{kind:?}{rank}")));
        }
        let dim = match kind {
            RootType::ASl | RootType::AGl => rank + 1,
            _ => rank,
        };
        let mut positive = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive.push(pair_vec(dim, i, j, -1));
                if !matches!(kind, RootType::ASl | RootType::AGl) {
                    positive.push(pair_vec(dim, i, j, 1));
                }
            }
            match kind {
                RootType::B => positive.push(unit(dim, i, 1)),
                RootType::C => positive.push(unit(dim, i, 2)),
                _ => {}
            }
        }
        let mut simple: Vec<Vec<i64>> = (0..dim - 1).map(|i| pair_vec(dim, i, i + 1, -1)).collect();
        match kind {
            RootType::B => simple.push(unit(dim, dim - 1, 1)),
            RootType::C => simple.push(unit(dim, dim - 1, 2)),
            RootType::D => simple.push(pair_vec(dim, dim - 2, dim - 1, 1)),
            _ => {}
        }
        Ok(RootSystem {
            kind,
            rank,
            positive_roots: positive,
            simple_roots: simple,
        })
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ambient coordinates.
    pub fn dim(&self) -> usize {
        match self.kind {
            RootType::ASl | RootType::AGl => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn is_simply_connected(&self) -> bool {
        self.kind != RootType::AGl
    }

    pub fn label(&self) -> String {
        match self.kind {
            RootType::ASl => format!("A{}sl", self.rank),
            RootType::AGl => format!("A{}gl", self.rank),
            RootType::B => format!("B{}", self.rank),
            RootType::C => format!("C{}", self.rank),
            RootType::D => format!("D{}", self.rank),
        }
    }

    pub fn contains(&self, mu: &Coweight) -> bool {
        let x = mu.coords();
        if x.len() != self.dim() {
            return false;
        }
        let sum: i64 = x.iter().sum();
        match self.kind {
            RootType::ASl => sum == 0,
            RootType::AGl | RootType::C => true,
            RootType::B | RootType::D => sum.rem_euclid(2) == 0,
        }
    }

    /// Checked coweight constructor.
    pub fn coweight(&self, coords: Vec<i64>) -> Result<Coweight> {
        let mu = Coweight(coords);
        if self.contains(&mu) {
            Ok(mu)
        } else {
            Err(Error::NotACoweight {
                system: self.label(),
                coweight: mu.0,
            })
        }
    }

    /// Class of `mu` in `X_*(T)` modulo the coroot lattice: the coordinate sum
    /// for `A^{GL}`, zero for the simply-connected types.
    pub fn component(&self, mu: &Coweight) -> i64 {
        match self.kind {
            RootType::AGl => mu.coords().iter().sum(),
            _ => 0,
        }
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| dot(mu.coords(), a) >= 0)
    }

    /// `Σ_{α > 0} α`.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut acc = vec![0; self.dim()];
        for a in &self.positive_roots {
            for (s, x) in acc.iter_mut().zip(a) {
                *s += x;
            }
        }
        acc
    }

    /// Exponents of the Weyl group.
    pub fn exponents(&self) -> Vec<u32> {
        let r = self.rank as u32;
        match self.kind {
            RootType::ASl | RootType::AGl => (1..=r).collect(),
            RootType::B | RootType::C => (0..r).map(|i| 2 * i + 1).collect(),
            RootType::D => {
                let mut e: Vec<u32> = (0..r - 1).map(|i| 2 * i + 1).collect();
                e.push(r - 1);
                e.sort_unstable();
                e
            }
        }
    }

    /// The dominant Weyl conjugate `mu⁺` and a `w` with `w · mu = mu⁺`.
    pub fn dominant_rep(&self, mu: &Coweight) -> (Coweight, WeylElement) {
        let x = mu.coords();
        let dim = x.len();
        let w = match self.kind {
            RootType::ASl | RootType::AGl => {
                let mut source: Vec<usize> = (0..dim).collect();
                source.sort_by(|&a, &b| x[b].cmp(&x[a]));
                WeylElement {
                    source,
                    signs: vec![1; dim],
                }
            }
            RootType::B | RootType::C | RootType::D => {
                let mut source: Vec<usize> = (0..dim).collect();
                source.sort_by(|&a, &b| x[b].abs().cmp(&x[a].abs()));
                let mut signs: Vec<i64> = source
                    .iter()
                    .map(|&s| if x[s] < 0 { -1 } else { 1 })
                    .collect();
                if self.kind == RootType::D && signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
                    // only even sign changes are available; the smallest
                    // absolute value absorbs the leftover sign
                    signs[dim - 1] = -signs[dim - 1];
                }
                WeylElement { source, signs }
            }
        };
        (Coweight(w.apply(x)), w)
    }

    /// Finite Weyl group as signed permutations, in a fixed order.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        if self.rank > 4 {
            return Err(Error::RankTooLarge(self.rank));
        }
        let dim = self.dim();
        let perms: Vec<Vec<usize>> = (0..dim).permutations(dim).collect();
        let sign_patterns: Vec<Vec<i64>> = match self.kind {
            RootType::ASl | RootType::AGl => vec![vec![1; dim]],
            _ => (0..1u32 << dim)
                .filter(|m| self.kind != RootType::D || m.count_ones() % 2 == 0)
                .map(|m| {
                    (0..dim)
                        .map(|i| if m >> i & 1 == 1 { -1 } else { 1 })
                        .collect()
                })
                .collect(),
        };
        Ok(perms
            .iter()
            .flat_map(|p| {
                sign_patterns.iter().map(move |s| WeylElement {
                    source: p.clone(),
                    signs: s.clone(),
                })
            })
            .collect())
    }

    pub fn positive_root_set(&self) -> HashSet<Vec<i64>> {
        self.positive_roots.iter().cloned().collect()
    }

    /// Coordinate box `|mu_i| <= r` that contains every coweight with
    /// `<mu⁺, 2ρ> <= bound` (for `A^{GL}`: the default enumeration box).
    fn coordinate_radius(&self, bound: i64) -> i64 {
        let n = self.dim() as i64;
        match self.kind {
            // <mu⁺, 2ρ> >= (n - 1)(max - min) >= (n - 1) |mu_i| when Σ mu = 0
            RootType::ASl => bound / (n - 1),
            RootType::AGl => (bound + 1) / 2,
            // the largest |mu_i| is weighted by the first entry of 2ρ
            RootType::B => bound / (2 * n - 1),
            RootType::C => bound / (2 * n),
            RootType::D => bound / (2 * n - 2),
        }
    }

    /// All coweights with `<mu⁺, 2ρ> <= bound`, lexicographically sorted.
    ///
    /// For `A^{GL}` that set is infinite along the centre; this scans the box
    /// `|mu_i| <= ⌈bound/2⌉` instead. Use
    /// [`enumerate_coweights_in_components`](Self::enumerate_coweights_in_components)
    /// to get complete connected components.
    pub fn enumerate_coweights(&self, bound: i64) -> Vec<Coweight> {
        if bound < 0 {
            return Vec::new();
        }
        let r = self.coordinate_radius(bound);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.dim());
        self.scan_box(&mut cur, -r, r, bound, None, &mut out);
        out
    }

    /// Coweights with `<mu⁺, 2ρ> <= bound` whose component lies in `components`.
    /// For simply-connected types only component 0 exists.
    pub fn enumerate_coweights_in_components(
        &self,
        bound: i64,
        components: std::ops::RangeInclusive<i64>,
    ) -> Vec<Coweight> {
        if self.kind != RootType::AGl {
            return if components.contains(&0) {
                self.enumerate_coweights(bound)
            } else {
                Vec::new()
            };
        }
        if bound < 0 {
            return Vec::new();
        }
        let n = self.dim() as i64;
        let spread = bound / (n - 1).max(1);
        let mut out = Vec::new();
        for c in components {
            let lo = c.div_euclid(n) - spread;
            let hi = c.div_euclid(n) + 1 + spread;
            let mut cur = Vec::with_capacity(self.dim());
            self.scan_box(&mut cur, lo, hi, bound, Some(c), &mut out);
        }
        out.sort();
        out
    }

    fn scan_box(
        &self,
        cur: &mut Vec<i64>,
        lo: i64,
        hi: i64,
        bound: i64,
        sum: Option<i64>,
        out: &mut Vec<Coweight>,
    ) {
        let dim = self.dim();
        let fixed_sum = match (self.kind, sum) {
            (RootType::ASl, _) => Some(0),
            (_, s) => s,
        };
        if cur.len() + 1 == dim {
            if let Some(s) = fixed_sum {
                let last = s - cur.iter().sum::<i64>();
                if (lo..=hi).contains(&last) {
                    cur.push(last);
                    self.keep_if_bounded(cur, bound, out);
                    cur.pop();
                }
                return;
            }
        }
        if cur.len() == dim {
            self.keep_if_bounded(cur, bound, out);
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            self.scan_box(cur, lo, hi, bound, sum, out);
            cur.pop();
        }
    }

    fn keep_if_bounded(&self, coords: &[i64], bound: i64, out: &mut Vec<Coweight>) {
        let mu = Coweight(coords.to_vec());
        if self.contains(&mu) && self.dominant_pairing(&mu) <= bound {
            out.push(mu);
        }
    }

    /// `<mu⁺, 2ρ>`, which also equals `Σ_{α>0} |<mu, α>|`.
    pub fn dominant_pairing(&self, mu: &Coweight) -> i64 {
        self.positive_roots
            .iter()
            .map(|a| dot(mu.coords(), a).abs())
            .sum()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The integer pairing of a cocharacter with a character.
pub fn pairing(mu: &Coweight, alpha: &[i64]) -> Result<i64> {
    if mu.coords().len() != alpha.len() {
        return Err(Error::SizeMismatch(mu.coords().len(), alpha.len()));
    }
    Ok(dot(mu.coords(), alpha))
}

impl FromStr for RootSystem {
    type Err = Error;

    /// `<letter><rank>[sl|gl]`: `A1`, `A2sl`, `A2gl`, `B2`, `C3`, `D4`.
    /// A bare `A<r>` means the `SL` flavour.
    fn from_str(s: &str) -> Result<RootSystem> {
        let bad = || Error::InvalidRootSystem(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str().to_ascii_lowercase();
        let digits_end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let rank: usize = rest[..digits_end].parse().map_err(|_| bad())?;
        let kind = match (letter, &rest[digits_end..]) {
            ('A', "" | "sl") => RootType::ASl,
            ('A', "gl") => RootType::AGl,
            ('B', "") => RootType::B,
            ('C', "") => RootType::C,
            ('D', "") => RootType::D,
            _ => return Err(bad()),
        };
        RootSystem::new(kind, rank).map_err(|_| bad())
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
