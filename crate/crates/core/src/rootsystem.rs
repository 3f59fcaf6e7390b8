//! Finite crystallographic root systems in the Bourbaki convention.
//!
//! Everything is stored in the fundamental-weight basis with exact integer
//! arithmetic. Rational quantities (the inverse Cartan matrix, the Gram matrix
//! of the invariant form) are cleared of denominators by a single positive
//! scale factor, so every sign query is an integer dot product.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple (connected) Dynkin type such as `E8` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    /// Admissible ranks: A n≥1, B n≥2, C n≥2, D n≥4, E 6..=8, F 4, G 2.
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::Inadmissible {
                factor: format!("{}{}", family.letter(), rank),
                reason: admissible_ranks(family).to_string(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Cartan matrix with `A[i][j] = <alpha_j, alpha_i^vee>`, Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // (i, j, A[i][j], A[j][i]) with 1-based nodes.
        let mut bonds: Vec<(usize, usize, i64, i64)> = Vec::new();
        match self.family {
            Family::A => bonds.extend((1..n).map(|i| (i, i + 1, -1, -1))),
            Family::B => {
                bonds.extend((1..n - 1).map(|i| (i, i + 1, -1, -1)));
                bonds.push((n - 1, n, -1, -2));
            }
            Family::C => {
                bonds.extend((1..n - 1).map(|i| (i, i + 1, -1, -1)));
                bonds.push((n - 1, n, -2, -1));
            }
            Family::D => {
                bonds.extend((1..n - 1).map(|i| (i, i + 1, -1, -1)));
                bonds.push((n - 2, n, -1, -1));
            }
            Family::E => {
                bonds.push((1, 3, -1, -1));
                bonds.push((2, 4, -1, -1));
                bonds.extend((3..n).map(|i| (i, i + 1, -1, -1)));
            }
            Family::F => {
                bonds.push((1, 2, -1, -1));
                bonds.push((2, 3, -1, -2));
                bonds.push((3, 4, -1, -1));
            }
            Family::G => bonds.push((1, 2, -3, -1)),
        }
        for (i, j, aij, aji) in bonds {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        }
        a
    }

    /// Half squared lengths of the simple roots, short roots normalized to 1.
    pub fn half_norms(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => (1..=n).map(|i| if i < n { 2 } else { 1 }).collect(),
            Family::C => (1..=n).map(|i| if i < n { 1 } else { 2 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Closed-form count of positive roots.
    pub fn num_positive_roots_formula(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B, _) | (Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::B, _) | (Family::C, _) => (1u128 << n) * fact(n),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
        }
    }

    /// The dual type together with the node relabelling `p` satisfying
    /// `A_dual[p(i)][p(j)] = A[j][i]` (0-based).
    pub fn dual(self) -> (SimpleType, Vec<usize>) {
        let n = self.rank;
        let identity: Vec<usize> = (0..n).collect();
        match self.family {
            Family::B => (SimpleType { family: Family::C, rank: n }, identity),
            Family::C => (SimpleType { family: Family::B, rank: n }, identity),
            Family::F | Family::G => (self, (0..n).rev().collect()),
            _ => (self, identity),
        }
    }
}

fn admissible_ranks(family: Family) -> &'static str {
    match family {
        Family::A => "type A needs rank >= 1",
        Family::B => "type B needs rank >= 2",
        Family::C => "type C needs rank >= 2",
        Family::D => "type D needs rank >= 4",
        Family::E => "type E needs rank 6, 7 or 8",
        Family::F => "type F needs rank 4",
        Family::G => "type G needs rank 2",
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(token: &str) -> Result<SimpleType> {
        let bad = |reason: &str| Error::InvalidTypeString {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = token.chars();
        let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
        let family = Family::from_char(letter).ok_or_else(|| bad("unknown family letter"))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("rank must be a decimal number"));
        }
        let rank: usize = digits.parse().map_err(|_| bad("rank out of range"))?;
        SimpleType::new(family, rank).map_err(|e| match e {
            Error::Inadmissible { reason, .. } => Error::InvalidTypeString {
                token: token.to_string(),
                reason,
            },
            other => other,
        })
    }
}

/// Parse a type string such as `"A2xB3xA1"` into its factors.
pub fn parse_type_string(s: &str) -> Result<Vec<SimpleType>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidTypeString {
            token: s.to_string(),
            reason: "empty type string".into(),
        });
    }
    s.split(['x', 'X']).map(str::parse).collect()
}

/// Integer vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// Integer vector in the fundamental-coweight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Parse a comma-separated coordinate list such as `"1,0,2"`.
    pub fn parse_coords(s: &str) -> Result<Weight> {
        parse_int_list(s)
            .map(Weight)
            .ok_or_else(|| Error::Parse { what: "weight", input: s.to_string() })
    }
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Coweight {
        Coweight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().ok()).collect()
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub root_coords: Vec<i64>,
    /// Coordinates in the fundamental-weight basis (`A · root_coords`).
    pub omega_coords: Vec<i64>,
    pub height: i64,
    pub is_long: bool,
    /// Index of the simple factor containing the root.
    pub factor: usize,
}

impl Root {
    pub fn as_weight(&self) -> Weight {
        Weight(self.omega_coords.clone())
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    fn from_rows(rows: &[Vec<i64>]) -> CartanMatrix {
        let n = rows.len();
        CartanMatrix { n, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `A[i][j]`, 0-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        CartanMatrix { n, entries }
    }

    /// Exact determinant (fraction-free elimination).
    pub fn determinant(&self) -> i64 {
        bareiss_determinant(&self.rows()) as i64
    }
}

/// A (possibly reducible) root system: an ordered product of simple factors.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<SimpleType>,
    offsets: Vec<usize>,
    rank: usize,
    cartan: CartanMatrix,
    half_norms: Vec<i64>,
    /// `inverse[j][m] = inverse_scale * (A^{-1})[j][m]`.
    inverse: Vec<i64>,
    inverse_scale: i64,
    /// `form[i][m] = c * d_i * (A^{-1})[i][m]` for some rational `c > 0`.
    form: Vec<i64>,
    positive_roots: Vec<Root>,
    pub(crate) dual_perm: OnceLock<Vec<usize>>,
}

impl RootSystem {
    /// Assemble the block-diagonal system for `factors` (in order).
    pub fn build(factors: &[SimpleType]) -> RootSystem {
        let rank: usize = factors.iter().map(|t| t.rank()).sum();
        let mut offsets = Vec::with_capacity(factors.len());
        let mut rows = vec![vec![0i64; rank]; rank];
        let mut half_norms = Vec::with_capacity(rank);
        let mut off = 0;
        for t in factors {
            offsets.push(off);
            let a = t.cartan_matrix();
            for (i, row) in a.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    rows[off + i][off + j] = v;
                }
            }
            half_norms.extend(t.half_norms());
            off += t.rank();
        }

        let (inv, inv_den) = exact_inverse(&rows);
        let inverse: Vec<i64> = inv.iter().flatten().copied().collect();
        let mut form = vec![0i64; rank * rank];
        for i in 0..rank {
            for m in 0..rank {
                form[i * rank + m] = half_norms[i] * inv[i][m];
            }
        }
        let form_gcd = form.iter().fold(0i64, |g, &v| gcd(g, v.abs())).max(1);
        form.iter_mut().for_each(|v| *v /= form_gcd);

        let cartan = CartanMatrix::from_rows(&rows);
        let mut rs = RootSystem {
            factors: factors.to_vec(),
            offsets,
            rank,
            cartan,
            half_norms,
            inverse,
            inverse_scale: inv_den,
            form,
            positive_roots: Vec::new(),
            dual_perm: OnceLock::new(),
        };
        rs.positive_roots = rs.enumerate_positive_roots();
        rs
    }

    /// Parse and build from a type string such as `"A2xB3"`.
    pub fn from_type_string(s: &str) -> Result<RootSystem> {
        Ok(RootSystem::build(&parse_type_string(s)?))
    }

    pub fn simple(t: SimpleType) -> RootSystem {
        RootSystem::build(&[t])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// 0-based offset of each factor's first node.
    pub fn factor_offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Index of the factor containing 0-based node `i`.
    pub fn factor_of_node(&self, i: usize) -> usize {
        match self.offsets.binary_search(&i) {
            Ok(f) => f,
            Err(f) => f - 1,
        }
    }

    /// Canonical type string: uppercase, factors in input order.
    pub fn type_string(&self) -> String {
        self.factors.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// The simple system of factor `f`, with its own node numbering.
    pub fn factor_system(&self, f: usize) -> RootSystem {
        RootSystem::simple(self.factors[f])
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank, got: len })
        }
    }

    pub(crate) fn check_generator(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        }
    }

    /// Fundamental weight `ϖ_j` (1-based `j`).
    pub fn fundamental_weight(&self, j: usize) -> Result<Weight> {
        self.check_generator(j)?;
        let mut c = vec![0; self.rank];
        c[j - 1] = 1;
        Ok(Weight(c))
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (1..=self.rank).map(|j| self.fundamental_weight(j).unwrap()).collect()
    }

    pub fn fundamental_coweight(&self, j: usize) -> Result<Coweight> {
        self.check_generator(j)?;
        let mut c = vec![0; self.rank];
        c[j - 1] = 1;
        Ok(Coweight(c))
    }

    /// `ρ`, all ω-coordinates equal to one.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// `ρ^∨`, all coweight coordinates equal to one.
    pub fn rho_vee(&self) -> Coweight {
        Coweight(vec![1; self.rank])
    }

    /// Simple root `α_i` (1-based) in ω-coordinates: column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_generator(i)?;
        Ok(Weight((0..self.rank).map(|k| self.cartan.get(k, i - 1)).collect()))
    }

    /// Scaled simple-root coordinates: `(numerators, den)` with `c = numerators / den`.
    pub fn simple_root_coords(&self, mu: &Weight) -> Result<(Vec<i64>, i64)> {
        self.check_len(mu.len())?;
        Ok((self.scaled_root_coords(mu.coords()), self.inverse_scale))
    }

    #[inline]
    pub(crate) fn scaled_root_coords(&self, mu: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|j| (0..n).map(|m| self.inverse[j * n + m] * mu[m]).sum())
            .collect()
    }

    /// Integer vector `v` with `sign(μ · v) = sign((μ, h))` for every `μ`.
    pub fn form_functional(&self, h: &Weight) -> Result<Vec<i64>> {
        self.check_len(h.len())?;
        let n = self.rank;
        Ok((0..n)
            .map(|i| (0..n).map(|m| self.form[i * n + m] * h.0[m]).sum())
            .collect())
    }

    /// Integer vector `v` with `sign(μ · v) = sign(<μ, h>)` for every `μ`.
    pub fn pairing_functional(&self, h: &Coweight) -> Result<Vec<i64>> {
        self.check_len(h.0.len())?;
        let n = self.rank;
        Ok((0..n)
            .map(|m| (0..n).map(|j| h.0[j] * self.inverse[j * n + m]).sum())
            .collect())
    }

    /// Sign of the W-invariant form `(λ, μ)`.
    pub fn invariant_form_sign(&self, lambda: &Weight, mu: &Weight) -> Result<i32> {
        self.check_len(lambda.len())?;
        let v = self.form_functional(mu)?;
        Ok(sign(dot(lambda.coords(), &v)))
    }

    /// A positive integer multiple of the Gram matrix `(ϖ_i, ϖ_m)`.
    pub fn scaled_gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        (0..n).map(|i| self.form[i * n..(i + 1) * n].to_vec()).collect()
    }

    /// Sign of the natural pairing `<λ, h>` between weights and coweights.
    pub fn natural_pairing_sign(&self, lambda: &Weight, h: &Coweight) -> Result<i32> {
        self.check_len(lambda.len())?;
        let v = self.pairing_functional(h)?;
        Ok(sign(dot(lambda.coords(), &v)))
    }

    /// Whether `μ` lies in the nonnegative span of the simple roots.
    pub fn in_positive_root_cone(&self, mu: &Weight) -> Result<bool> {
        self.check_len(mu.len())?;
        Ok(self.in_cone_raw(mu.coords()))
    }

    #[inline]
    pub(crate) fn in_cone_raw(&self, mu: &[i64]) -> bool {
        let n = self.rank;
        (0..n).all(|j| {
            let row = &self.inverse[j * n..(j + 1) * n];
            dot(row, mu) >= 0
        })
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Highest root and dominant short root of a simple system.
    pub fn dominant_roots(&self) -> Result<(Root, Root)> {
        if !self.is_simple() {
            return Err(Error::NotSimple(self.type_string()));
        }
        Ok(self.factor_dominant_roots(0))
    }

    /// Highest root and dominant short root of factor `f`.
    pub fn factor_dominant_roots(&self, f: usize) -> (Root, Root) {
        let dominant: Vec<&Root> = self
            .positive_roots
            .iter()
            .filter(|r| r.factor == f && r.omega_coords.iter().all(|&c| c >= 0))
            .collect();
        let long = dominant
            .iter()
            .copied()
            .filter(|r| r.is_long)
            .max_by_key(|r| r.height)
            .expect("every factor has a highest root");
        let short = dominant
            .iter()
            .copied()
            .find(|r| !r.is_long)
            .unwrap_or(long);
        (long.clone(), short.clone())
    }

    /// `(β, β)` for a root in simple-root coordinates (`(α_i, α_i) = 2 d_i`).
    pub fn root_norm(&self, root_coords: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if root_coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += root_coords[i] * root_coords[j] * self.half_norms[i] * self.cartan.get(i, j);
            }
        }
        s
    }

    /// Height of the coroot `β^∨` in the dual system's simple coroots.
    pub fn coroot_height(&self, root: &Root) -> i64 {
        let half = self.root_norm(&root.root_coords) / 2;
        root.root_coords
            .iter()
            .zip(&self.half_norms)
            .map(|(b, d)| b * d)
            .sum::<i64>()
            / half
    }

    /// Reflect a root in simple-root coordinates through `α_i` (0-based `i`).
    #[inline]
    pub(crate) fn reflect_root_coords(&self, i: usize, beta: &mut [i64]) {
        let pairing: i64 = (0..self.rank).map(|j| self.cartan.get(i, j) * beta[j]).sum();
        beta[i] -= pairing;
    }

    fn enumerate_positive_roots(&self) -> Vec<Root> {
        use std::collections::BTreeSet;
        let n = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                stack.push(e);
            }
        }
        while let Some(beta) = stack.pop() {
            for i in 0..n {
                let mut image = beta.clone();
                self.reflect_root_coords(i, &mut image);
                if seen.insert(image.clone()) {
                    stack.push(image);
                }
            }
        }
        let max_half: Vec<i64> = self
            .factors
            .iter()
            .enumerate()
            .map(|(f, t)| {
                let o = self.offsets[f];
                *self.half_norms[o..o + t.rank()].iter().max().unwrap()
            })
            .collect();
        let mut roots: Vec<Root> = seen
            .into_iter()
            .filter(|b| b.iter().all(|&c| c >= 0))
            .map(|b| {
                let omega = (0..n).map(|k| (0..n).map(|j| self.cartan.get(k, j) * b[j]).sum()).collect();
                let first = b.iter().position(|&c| c != 0).unwrap();
                let factor = self.factor_of_node(first);
                let norm = self.root_norm(&b);
                Root {
                    height: b.iter().sum(),
                    is_long: norm == 2 * max_half[factor],
                    omega_coords: omega,
                    root_coords: b,
                    factor,
                }
            })
            .collect();
        roots.sort_by(|x, y| (x.height, &x.root_coords).cmp(&(y.height, &y.root_coords)));
        roots
    }
}

#[inline]
pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn sign(x: i64) -> i32 {
    x.signum() as i32
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Exact inverse of an integer matrix as `(numerators, common positive denominator)`.
pub(crate) fn exact_inverse(rows: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = rows.len();
    let mut m: Vec<Vec<Ratio<i128>>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Ratio<i128>> = r.iter().map(|&v| Ratio::from_integer(v as i128)).collect();
            row.extend((0..n).map(|j| Ratio::from_integer((i == j) as i128)));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| m[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrices of finite type are invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for v in m[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && m[r][col] != Ratio::from_integer(0) {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    let den = m
        .iter()
        .flat_map(|r| r[n..].iter())
        .fold(1i128, |l, v| {
            let d = *v.denom();
            l / gcd128(l, d) * d
        });
    let inv = m
        .iter()
        .map(|r| r[n..].iter().map(|v| (*v.numer() * (den / *v.denom())) as i64).collect())
        .collect();
    (inv, den as i64)
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Fraction-free determinant.
pub(crate) fn bareiss_determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
