//! Independent oracles. Reflections, roots and the invariant form are rebuilt
//! here from the Cartan matrix alone; only `cartan()` and `half_norms()` are
//! taken from the library.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::Rational64;
use weylmin::RootSystem;

pub struct Oracle {
    pub n: usize,
    a: Vec<Vec<i64>>,
    /// `gram[i][k]` = (ϖ_i, ϖ_k) with (α_i, α_i) = 2 · half_norm_i.
    gram: Vec<Vec<Rational64>>,
    /// Positive coroots in simple-coroot coordinates.
    pub pos_coroots: Vec<Vec<i64>>,
}

impl Oracle {
    pub fn new(rs: &RootSystem) -> Oracle {
        let a = rs.cartan().rows();
        let d = rs.half_norms().to_vec();
        let n = a.len();
        let inv = invert(&a);
        // ϖ_i = Σ_j inv[j][i] α_j, and (α_j, ϖ_k) = δ_jk d_k.
        let gram = (0..n)
            .map(|i| (0..n).map(|k| inv[k][i] * Rational64::from_integer(d[k])).collect())
            .collect();
        // Coroots: reflect simple coroots with the transposed matrix.
        let at: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                // ⟨β^∨, α_i⟩ computed through the dual Cartan matrix.
                let p: i64 = (0..n).map(|j| b[j] * at[i][j]).sum();
                let mut c = b.clone();
                c[i] -= p;
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut pos_coroots: Vec<Vec<i64>> = seen.into_iter().filter(|b| b.iter().all(|&x| x >= 0)).collect();
        pos_coroots.sort();
        Oracle { n, a, gram, pos_coroots }
    }

    pub fn reflect(&self, i: usize, l: &[i64]) -> Vec<i64> {
        (0..self.n).map(|k| l[k] - l[i] * self.a[k][i]).collect()
    }

    /// Letters are 1-based, rightmost applied first.
    pub fn apply(&self, word: &[usize], l: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(l.to_vec(), |acc, &i| self.reflect(i - 1, &acc))
    }

    pub fn form(&self, l: &[i64], m: &[i64]) -> Rational64 {
        let mut s = Rational64::from_integer(0);
        for (row, &li) in self.gram.iter().zip(l) {
            for (&g, &mk) in row.iter().zip(m) {
                s += g * Rational64::from_integer(li * mk);
            }
        }
        s
    }

    /// Natural pairing ⟨μ, h^∨⟩ with a coweight in fundamental-coweight coordinates
    /// is Σ μ_i · (coefficient of α_i^∨ in h^∨); here via ϖ_i^∨ = Σ inv α^∨.
    pub fn inversions(&self, mu: &[i64]) -> usize {
        self.pos_coroots.iter().filter(|b| b.iter().zip(mu).map(|(x, y)| x * y).sum::<i64>() < 0).count()
    }

    /// Orbit of a weight by BFS.
    pub fn orbit(&self, l: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::from([l.to_vec()]);
        let mut queue = VecDeque::from([l.to_vec()]);
        let mut out = Vec::new();
        while let Some(m) = queue.pop_front() {
            for i in 0..self.n {
                let r = self.reflect(i, &m);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
            out.push(m);
        }
        out
    }

    /// ℓ⁻_h(λ) from inversion counts over the orbit, invariant-form pairing.
    pub fn ell_minus(&self, h: &[i64], l: &[i64]) -> Option<usize> {
        let zero = Rational64::from_integer(0);
        self.orbit(l).iter().filter(|m| self.form(m, h) < zero).map(|m| self.inversions(m)).min()
    }

    /// Every group element as a word, found on the regular orbit of ρ.
    pub fn group_words(&self) -> Vec<Vec<usize>> {
        let rho = vec![1; self.n];
        let mut words: HashMap<Vec<i64>, Vec<usize>> = HashMap::from([(rho.clone(), vec![])]);
        let mut queue = VecDeque::from([rho]);
        while let Some(m) = queue.pop_front() {
            let w = words[&m].clone();
            for i in 0..self.n {
                let r = self.reflect(i, &m);
                if !words.contains_key(&r) {
                    let mut w2 = vec![i + 1];
                    w2.extend_from_slice(&w);
                    words.insert(r.clone(), w2);
                    queue.push_back(r);
                }
            }
        }
        let mut all: Vec<Vec<usize>> = words.into_values().collect();
        all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        all
    }

    /// Length of a group element: inversions of w·ρ.
    pub fn length(&self, word: &[usize]) -> usize {
        self.inversions(&self.apply(word, &vec![1; self.n]))
    }
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| Rational64::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Rational64::from_integer(0)).expect("singular Cartan matrix");
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                if f != Rational64::from_integer(0) {
                    let pivot_row = m[c].clone();
                    for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn fundamental(n: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}

/// All simple types of rank ≤ `max` as type strings.
pub fn simple_types(max: usize) -> Vec<String> {
    let mut v = Vec::new();
    for n in 1..=max {
        v.push(format!("A{n}"));
    }
    for n in 2..=max {
        v.push(format!("B{n}"));
    }
    for n in 3..=max {
        v.push(format!("C{n}"));
    }
    for n in 4..=max {
        v.push(format!("D{n}"));
    }
    if max >= 2 {
        v.push("G2".into());
    }
    if max >= 4 {
        v.push("F4".into());
    }
    for n in 6..=max.min(8) {
        v.push(format!("E{n}"));
    }
    v
}
