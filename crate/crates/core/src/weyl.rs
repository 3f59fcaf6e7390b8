//! Weyl group words and minimal-length orbit search.
//!
//! A word `r_{j1} r_{j2} ... r_{jl}` is stored left to right as written and
//! acts on weights rightmost letter first, so the trajectory of `λ` is
//! `r_{jl} λ`, `r_{j(l-1)} r_{jl} λ`, and so on.
//!
//! For a dominant `λ`, the minimal length of an element sending `λ` to `μ`
//! equals the graph distance from `λ` to `μ` in the orbit graph whose edges
//! are `{μ, r_i μ}`. A word gives a walk (dropping stationary steps leaves a
//! path) and a path gives a word, so breadth-first depth is the minimal
//! length.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// A word in the simple reflections, letters 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> WeylWord {
        WeylWord(letters)
    }

    pub fn empty() -> WeylWord {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Number of letters (not the Coxeter length).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word for the inverse element.
    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// Parse `"12342321"` (one digit per letter) or `"7,6,5,4"`.
    pub fn parse(s: &str, rank: usize) -> Result<WeylWord> {
        let s = s.trim();
        let bad = || Error::Parse { what: "word", input: s.to_string() };
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(bad());
        };
        let word = WeylWord(letters);
        word.check(rank)?;
        Ok(word)
    }

    /// Digits for rank ≤ 9, comma-separated integers otherwise.
    pub fn format(&self, rank: usize) -> String {
        if rank <= 9 {
            self.0.iter().map(|l| char::from(b'0' + *l as u8)).collect()
        } else {
            self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        }
    }

    pub fn check(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l > rank) {
            Some(&l) => Err(Error::IndexOutOfRange { index: l, rank }),
            None => Ok(()),
        }
    }

    /// Shift every letter by `offset` (embedding a factor word into a product).
    pub fn shifted(&self, offset: usize) -> WeylWord {
        WeylWord(self.0.iter().map(|l| l + offset).collect())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.0.iter().copied().max().unwrap_or(0);
        f.write_str(&self.format(max))
    }
}

/// A successful orbit search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSearchResult {
    pub depth: usize,
    pub witness: WeylWord,
    pub image: Weight,
    /// Orbit points discovered up to and including the hit level.
    pub explored: usize,
}

/// Outcome of an orbit search for one predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitSearch {
    Found(OrbitSearchResult),
    /// No hit at depth ≤ `depth_reached`; `explored` orbit points were seen.
    NotFound { explored: usize, depth_reached: usize, exhausted: bool },
}

impl OrbitSearch {
    pub fn found(&self) -> Option<&OrbitSearchResult> {
        match self {
            OrbitSearch::Found(r) => Some(r),
            OrbitSearch::NotFound { .. } => None,
        }
    }

    pub fn into_found(self) -> Option<OrbitSearchResult> {
        match self {
            OrbitSearch::Found(r) => Some(r),
            OrbitSearch::NotFound { .. } => None,
        }
    }
}

impl RootSystem {
    /// `r_i λ` for a 1-based generator `i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_generator(i)?;
        self.check_len(lambda.len())?;
        let mut c = lambda.coords().to_vec();
        self.reflect_in_place(i - 1, &mut c);
        Ok(Weight::new(c))
    }

    /// `(r_i μ)_k = μ_k − μ_i A[k][i]`, 0-based `i`.
    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, mu: &mut [i64]) {
        let mi = mu[i];
        if mi == 0 {
            return;
        }
        let a = self.cartan();
        for (k, v) in mu.iter_mut().enumerate() {
            let aki = a.get(k, i);
            if aki != 0 {
                *v -= mi * aki;
            }
        }
    }

    /// Apply a word, rightmost letter first.
    pub fn apply_word(&self, w: &WeylWord, lambda: &Weight) -> Result<Weight> {
        w.check(self.rank())?;
        self.check_len(lambda.len())?;
        let mut c = lambda.coords().to_vec();
        for &l in w.letters().iter().rev() {
            self.reflect_in_place(l - 1, &mut c);
        }
        Ok(Weight::new(c))
    }

    /// Coxeter length of the element represented by `w`: the number of
    /// positive roots it sends to negative roots.
    pub fn word_length(&self, w: &WeylWord) -> Result<usize> {
        w.check(self.rank())?;
        let mut count = 0;
        let mut beta = vec![0i64; self.rank()];
        for root in self.positive_roots() {
            beta.copy_from_slice(&root.root_coords);
            for &l in w.letters().iter().rev() {
                self.reflect_root_coords(l - 1, &mut beta);
            }
            if beta.iter().any(|&c| c < 0) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// `w₀ λ` for dominant `λ`, with a word reaching it by greedy descent.
    pub fn antidominant(&self, lambda: &Weight) -> Result<(Weight, WeylWord)> {
        self.check_len(lambda.len())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant { what: "antidominant input", coords: lambda.coords().to_vec() });
        }
        let mut c = lambda.coords().to_vec();
        let mut applied = Vec::new();
        while let Some(i) = c.iter().position(|&v| v > 0) {
            self.reflect_in_place(i, &mut c);
            applied.push(i + 1);
        }
        applied.reverse();
        Ok((Weight::new(c), WeylWord(applied)))
    }

    /// A reduced word for the longest element `w₀`.
    pub fn longest_word(&self) -> WeylWord {
        self.antidominant(&self.rho()).expect("ρ is dominant").1
    }

    /// Permutation `σ` (0-based) with `ϖ_j* = ϖ_{σ(j)}`.
    pub fn dual_permutation(&self) -> &[usize] {
        self.dual_perm.get_or_init(|| {
            let w0 = self.longest_word();
            (1..=self.rank())
                .map(|j| {
                    let img = self.apply_word(&w0, &self.fundamental_weight(j).unwrap()).unwrap();
                    img.coords()
                        .iter()
                        .position(|&c| c == -1)
                        .expect("−w₀ permutes the fundamental weights")
                })
                .collect()
        })
    }

    /// `λ* = −w₀ λ`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        self.check_len(lambda.len())?;
        let perm = self.dual_permutation();
        let mut out = vec![0; self.rank()];
        for (j, &c) in lambda.coords().iter().enumerate() {
            out[perm[j]] = c;
        }
        Ok(Weight::new(out))
    }

    /// Whether `w₀ = −1`.
    pub fn minus_one_longest(&self) -> bool {
        self.dual_permutation().iter().enumerate().all(|(j, &p)| j == p)
    }

    /// Breadth-first search of the orbit of dominant `start` for the first
    /// point (FIFO order, ascending generators) satisfying `test`.
    pub fn orbit_bfs_first_negative<F>(&self, start: &Weight, test: F, depth_limit: usize) -> Result<OrbitSearch>
    where
        F: Fn(&[i64]) -> bool,
    {
        let mut out = self.orbit_bfs_first_hits(start, std::slice::from_ref(&test), depth_limit)?;
        Ok(out.pop().unwrap())
    }

    /// One search per predicate, sharing a single traversal. Each result is
    /// identical to what a dedicated single-predicate search would return.
    pub fn orbit_bfs_first_hits<F>(&self, start: &Weight, tests: &[F], depth_limit: usize) -> Result<Vec<OrbitSearch>>
    where
        F: Fn(&[i64]) -> bool,
    {
        self.check_len(start.len())?;
        if !start.is_dominant() {
            return Err(Error::NotDominant { what: "search start", coords: start.coords().to_vec() });
        }
        let mut bfs = OrbitBfs::new(self, start);
        let mut results: Vec<Option<OrbitSearch>> = vec![None; tests.len()];
        let mut open = tests.len();
        loop {
            if open > 0 {
                for node in bfs.level_start..bfs.level_end {
                    let coords = bfs.coords(node);
                    for (t, test) in tests.iter().enumerate() {
                        if results[t].is_none() && test(coords) {
                            results[t] = Some(OrbitSearch::Found(bfs.result(node)));
                            open -= 1;
                        }
                    }
                    if open == 0 {
                        break;
                    }
                }
            }
            if open == 0 || bfs.depth == depth_limit || !bfs.expand() {
                break;
            }
        }
        // Orbit depth never exceeds l(w₀) = #Δ⁺.
        let exhausted = bfs.exhausted || bfs.depth >= self.num_positive_roots();
        Ok(results
            .into_iter()
            .map(|r| {
                r.unwrap_or(OrbitSearch::NotFound {
                    explored: bfs.visited_count(),
                    depth_reached: bfs.depth,
                    exhausted,
                })
            })
            .collect())
    }

    /// The full orbit of a dominant weight in BFS order with the depth of each point.
    pub fn orbit(&self, start: &Weight) -> Result<Vec<(Weight, usize)>> {
        self.check_len(start.len())?;
        if !start.is_dominant() {
            return Err(Error::NotDominant { what: "orbit start", coords: start.coords().to_vec() });
        }
        let mut bfs = OrbitBfs::new(self, start);
        let mut out = Vec::new();
        loop {
            for node in bfs.level_start..bfs.level_end {
                out.push((Weight::new(bfs.coords(node).to_vec()), bfs.depth));
            }
            if !bfs.expand() {
                break;
            }
        }
        Ok(out)
    }
}

/// Level-synchronous BFS state over an orbit.
struct OrbitBfs<'a> {
    rs: &'a RootSystem,
    rank: usize,
    coords: Vec<i64>,
    parent: Vec<u32>,
    generator: Vec<u16>,
    visited: HashMap<Box<[i64]>, u32>,
    level_start: usize,
    level_end: usize,
    depth: usize,
    exhausted: bool,
}

impl<'a> OrbitBfs<'a> {
    fn new(rs: &'a RootSystem, start: &Weight) -> OrbitBfs<'a> {
        let mut visited = HashMap::new();
        visited.insert(start.coords().to_vec().into_boxed_slice(), 0);
        OrbitBfs {
            rs,
            rank: rs.rank(),
            coords: start.coords().to_vec(),
            parent: vec![u32::MAX],
            generator: vec![0],
            visited,
            level_start: 0,
            level_end: 1,
            depth: 0,
            exhausted: false,
        }
    }

    #[inline]
    fn coords(&self, node: usize) -> &[i64] {
        &self.coords[node * self.rank..(node + 1) * self.rank]
    }

    fn visited_count(&self) -> usize {
        self.parent.len()
    }

    /// Generate the next level; false if the orbit is exhausted.
    fn expand(&mut self) -> bool {
        let mut scratch = vec![0i64; self.rank];
        for node in self.level_start..self.level_end {
            for i in 0..self.rank {
                if self.coords[node * self.rank + i] == 0 {
                    continue;
                }
                scratch.copy_from_slice(self.coords(node));
                self.rs.reflect_in_place(i, &mut scratch);
                if self.visited.contains_key(scratch.as_slice()) {
                    continue;
                }
                let id = self.parent.len() as u32;
                self.visited.insert(scratch.clone().into_boxed_slice(), id);
                self.coords.extend_from_slice(&scratch);
                self.parent.push(node as u32);
                self.generator.push(i as u16 + 1);
            }
        }
        let new_end = self.parent.len();
        if new_end == self.level_end {
            self.exhausted = true;
            return false;
        }
        self.level_start = self.level_end;
        self.level_end = new_end;
        self.depth += 1;
        true
    }

    /// Witness in written order: the last reflection applied comes first.
    fn result(&self, node: usize) -> OrbitSearchResult {
        let mut letters = Vec::with_capacity(self.depth);
        let mut cur = node;
        while self.parent[cur] != u32::MAX {
            letters.push(self.generator[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        OrbitSearchResult {
            depth: letters.len(),
            witness: WeylWord(letters),
            image: Weight::new(self.coords(node).to_vec()),
            explored: self.visited_count(),
        }
    }
}
