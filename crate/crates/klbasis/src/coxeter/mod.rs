//! Finite Coxeter groups: enumeration via the exact geometric reflection
//! representation, canonical (ShortLex) words, lengths, descents, Bruhat
//! order, the longest element and the Poincaré polynomial.

mod ring;

use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use ring::NumberRing;
use std::collections::HashMap;
use std::sync::OnceLock;

pub const DEFAULT_CAP: usize = 100_000;

/// Symmetric Coxeter matrix; m(i,i) = 1, m(i,j) >= 2 for i != j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let rank = m.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if rank > 16 {
            return Err(Error::InvalidMatrix(format!("rank {rank} exceeds supported 16")));
        }
        if m.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        for i in 0..rank {
            if m[i][i] != 1 {
                return Err(Error::InvalidMatrix(format!("m({},{}) must be 1", i + 1, i + 1)));
            }
            for j in 0..rank {
                if i != j {
                    if m[i][j] < 2 {
                        return Err(Error::InvalidMatrix(format!(
                            "m({},{}) = {} < 2 (infinite entries are rejected)",
                            i + 1,
                            j + 1,
                            m[i][j]
                        )));
                    }
                    if m[i][j] != m[j][i] {
                        return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
                    }
                }
            }
        }
        Ok(CoxeterMatrix { rank, m })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    /// Named presets: A1..A4, B2..B4, D4, I2(m), H3, H4.
    pub fn preset(name: &str) -> Result<Self> {
        let chain = |rank: usize, first: u32, head: u32| -> Vec<Vec<u32>> {
            let mut m = vec![vec![2u32; rank]; rank];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 0..rank.saturating_sub(1) {
                let bond = if i == 0 { first } else { head };
                m[i][i + 1] = bond;
                m[i + 1][i] = bond;
            }
            m
        };
        let m = match name {
            "A1" => chain(1, 3, 3),
            "A2" => chain(2, 3, 3),
            "A3" => chain(3, 3, 3),
            "A4" => chain(4, 3, 3),
            "B2" => chain(2, 4, 3),
            "B3" => chain(3, 4, 3),
            "B4" => chain(4, 4, 3),
            "H3" => chain(3, 5, 3),
            "H4" => chain(4, 5, 3),
            "D4" => {
                let mut m = chain(4, 3, 3);
                // branch node 2: edges (1,2),(2,3),(2,4)
                m[2][3] = 2;
                m[3][2] = 2;
                m[1][3] = 3;
                m[3][1] = 3;
                m
            }
            _ => {
                if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
                    let v: u32 = rest
                        .parse()
                        .map_err(|_| Error::UnknownPreset(name.into()))?;
                    if v < 2 {
                        return Err(Error::UnknownPreset(name.into()));
                    }
                    vec![vec![1, v], vec![v, 1]]
                } else {
                    return Err(Error::UnknownPreset(name.into()));
                }
            }
        };
        CoxeterMatrix::new(m)
    }

    /// Explicit matrix from JSON `{"rank":n,"m":[[...]]}`.
    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Raw {
            rank: usize,
            m: Vec<Vec<u32>>,
        }
        let raw: Raw = serde_json::from_str(s)
            .map_err(|e| Error::InvalidMatrix(format!("bad matrix JSON: {e}")))?;
        if raw.m.len() != raw.rank {
            return Err(Error::InvalidMatrix("rank field does not match matrix size".into()));
        }
        CoxeterMatrix::new(raw.m)
    }
}

/// A group element, identified by its position in the enumeration order
/// (length-major, ShortLex-minor). The canonical reduced word is recovered
/// through the owning [`GroupContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub(crate) u32);

impl Element {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A fully enumerated finite Coxeter group.
pub struct GroupContext {
    matrix: CoxeterMatrix,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
    left_desc: Vec<u64>,
    right_desc: Vec<u64>,
    w0: Element,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

/// Builds the full group by breadth-first closure under right multiplication,
/// with exact reflection matrices as element keys.
pub fn build_group(matrix: CoxeterMatrix, cap: usize) -> Result<GroupContext> {
    let rank = matrix.rank();
    let mut l: u64 = 2;
    for i in 0..rank {
        for j in i + 1..rank {
            l = lcm(l, matrix.entry(i, j) as u64);
        }
    }
    let ring = NumberRing::new(l);
    let d = ring.degree;

    // generator matrices, row-major rank x rank of ring elements
    let mut gens: Vec<Vec<Vec<i64>>> = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut mat = identity_matrix(&ring, rank);
        for j in 0..rank {
            mat[i * rank + j] = if i == j {
                ring.from_int(-1)
            } else {
                ring.two_cos(l / matrix.entry(i, j) as u64)
            };
        }
        gens.push(mat);
    }

    let flatten = |m: &Vec<Vec<i64>>| -> Vec<i64> { m.iter().flatten().copied().collect() };

    let mut mats: Vec<Vec<Vec<i64>>> = vec![identity_matrix(&ring, rank)];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut lengths: Vec<u32> = vec![0];
    let mut right: Vec<u32> = vec![u32::MAX; rank];
    let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
    index.insert(flatten(&mats[0]), 0);

    let mut layer: Vec<u32> = vec![0];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &x in &layer {
            for s in 0..rank {
                if right[x as usize * rank + s] != u32::MAX {
                    continue;
                }
                let prod = mat_mul(&ring, rank, &mats[x as usize], &gens[s]);
                let key = flatten(&prod);
                let y = match index.get(&key) {
                    Some(&y) => y,
                    None => {
                        let y = mats.len() as u32;
                        if mats.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        index.insert(key, y);
                        mats.push(prod);
                        let mut w = words[x as usize].clone();
                        w.push(s as u8);
                        words.push(w);
                        lengths.push(lengths[x as usize] + 1);
                        right.resize(right.len() + rank, u32::MAX);
                        next.push(y);
                        y
                    }
                };
                right[x as usize * rank + s] = y;
                right[y as usize * rank + s] = x;
            }
        }
        layer = next;
    }
    drop(index);
    drop(mats);
    let _ = d;

    let n = words.len();
    let walk = |right: &[u32], start: u32, word: &[u8]| -> u32 {
        word.iter().fold(start, |cur, &s| right[cur as usize * rank + s as usize])
    };

    let mut left = vec![u32::MAX; n * rank];
    for x in 0..n as u32 {
        for s in 0..rank {
            let s_elem = right[s];
            left[x as usize * rank + s] = walk(&right, s_elem, &words[x as usize]);
        }
    }

    let mut inverse = vec![u32::MAX; n];
    for x in 0..n as u32 {
        let mut rev = words[x as usize].clone();
        rev.reverse();
        inverse[x as usize] = walk(&right, 0, &rev);
    }

    let mut left_desc = vec![0u64; n];
    let mut right_desc = vec![0u64; n];
    for x in 0..n {
        for s in 0..rank {
            if lengths[left[x * rank + s] as usize] < lengths[x] {
                left_desc[x] |= 1 << s;
            }
            if lengths[right[x * rank + s] as usize] < lengths[x] {
                right_desc[x] |= 1 << s;
            }
        }
    }

    if n > 1 && lengths[n - 1] == lengths[n - 2] {
        return Err(Error::ValidationFailure(
            "maximal-length element is not unique".into(),
        ));
    }

    Ok(GroupContext {
        matrix,
        words,
        lengths,
        right,
        left,
        inverse,
        left_desc,
        right_desc,
        w0: Element(n as u32 - 1),
        bruhat: OnceLock::new(),
    })
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

fn identity_matrix(ring: &NumberRing, rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![ring.zero(); rank * rank];
    for i in 0..rank {
        m[i * rank + i] = ring.from_int(1);
    }
    m
}

fn mat_mul(ring: &NumberRing, rank: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![ring.zero(); rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = &a[i * rank + k];
            if aik.iter().all(|&c| c == 0) {
                continue;
            }
            for j in 0..rank {
                let prod = ring.mul(aik, &b[k * rank + j]);
                out[i * rank + j] = ring.add(&out[i * rank + j], &prod);
            }
        }
    }
    out
}

impl GroupContext {
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.words.len() as u32).map(Element)
    }

    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.order());
        Element(index as u32)
    }

    /// Canonical reduced word, 0-based generator letters.
    pub fn word(&self, e: Element) -> &[u8] {
        &self.words[e.index()]
    }

    /// Canonical word rendered with 1-based comma-separated indices; empty for e.
    pub fn word_string(&self, e: Element) -> String {
        self.words[e.index()]
            .iter()
            .map(|&s| (s + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn length(&self, e: Element) -> u32 {
        self.lengths[e.index()]
    }

    /// Element from 1-based generator letters (any word, not necessarily reduced).
    pub fn element_from_letters(&self, letters: &[usize]) -> Result<Element> {
        let rank = self.rank();
        let mut cur = 0u32;
        for &g in letters {
            if g < 1 || g > rank {
                return Err(Error::InvalidWord(format!(
                    "generator index {g} out of range 1..={rank}"
                )));
            }
            cur = self.right[cur as usize * rank + (g - 1)];
        }
        Ok(Element(cur))
    }

    /// Element from CLI syntax: comma-separated 1-based indices, "" for e.
    pub fn parse_word(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(self.identity());
        }
        let letters: Result<Vec<usize>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidWord(format!("bad generator index '{t}'")))
            })
            .collect();
        self.element_from_letters(&letters?)
    }

    pub fn right_multiply_gen(&self, x: Element, s: usize) -> Element {
        Element(self.right[x.index() * self.rank() + s])
    }

    pub fn left_multiply_gen(&self, s: usize, x: Element) -> Element {
        Element(self.left[x.index() * self.rank() + s])
    }

    pub fn multiply(&self, x: Element, y: Element) -> Element {
        let rank = self.rank();
        let mut cur = x.0;
        for &s in &self.words[y.index()] {
            cur = self.right[cur as usize * rank + s as usize];
        }
        Element(cur)
    }

    pub fn inverse(&self, x: Element) -> Element {
        Element(self.inverse[x.index()])
    }

    pub fn is_left_descent(&self, s: usize, x: Element) -> bool {
        self.left_desc[x.index()] >> s & 1 == 1
    }

    pub fn is_right_descent(&self, x: Element, s: usize) -> bool {
        self.right_desc[x.index()] >> s & 1 == 1
    }

    pub fn left_descents(&self, x: Element) -> impl Iterator<Item = usize> + '_ {
        let mask = self.left_desc[x.index()];
        (0..self.rank()).filter(move |&s| mask >> s & 1 == 1)
    }

    pub fn right_descents(&self, x: Element) -> impl Iterator<Item = usize> + '_ {
        let mask = self.right_desc[x.index()];
        (0..self.rank()).filter(move |&s| mask >> s & 1 == 1)
    }

    pub fn w0(&self) -> Element {
        self.w0
    }

    /// Number of positive roots N = l(w0).
    pub fn n_positive_roots(&self) -> u32 {
        self.lengths[self.w0.index()]
    }

    fn bruhat_rows(&self) -> &Vec<Vec<u64>> {
        self.bruhat.get_or_init(|| {
            let n = self.order();
            let wlen = n.div_ceil(64);
            let mut rows: Vec<Vec<u64>> = vec![vec![0u64; wlen]; n];
            rows[0][0] = 1; // e <= e
            for w in 1..n {
                let s = (0..self.rank())
                    .find(|&s| self.is_left_descent(s, Element(w as u32)))
                    .expect("non-identity element must have a left descent");
                let v = self.left[w * self.rank() + s] as usize;
                let mut row = rows[v].clone();
                for y in 0..n {
                    if rows[v][y / 64] >> (y % 64) & 1 == 1 {
                        let sy = self.left[y * self.rank() + s] as usize;
                        row[sy / 64] |= 1 << (sy % 64);
                    }
                }
                rows[w] = row;
            }
            rows
        })
    }

    /// Bruhat order test y <= w.
    pub fn bruhat_leq(&self, y: Element, w: Element) -> bool {
        let rows = self.bruhat_rows();
        rows[w.index()][y.index() / 64] >> (y.index() % 64) & 1 == 1
    }

    /// All elements below w in Bruhat order, ascending by index.
    pub fn bruhat_interval_below(&self, w: Element) -> Vec<Element> {
        let rows = self.bruhat_rows();
        let row = &rows[w.index()];
        (0..self.order())
            .filter(|&y| row[y / 64] >> (y % 64) & 1 == 1)
            .map(|y| Element(y as u32))
            .collect()
    }

    /// All w with w^2 = e, including e.
    pub fn involutions(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.inverse(x) == x).collect()
    }

    /// Length generating function as a polynomial in q.
    pub fn poincare_polynomial(&self) -> LaurentPolynomial {
        let n = self.n_positive_roots() as usize;
        let mut census = vec![0i128; n + 1];
        for &l in &self.lengths {
            census[l as usize] += 1;
        }
        LaurentPolynomial::from_q_coeffs(&census)
    }
}
