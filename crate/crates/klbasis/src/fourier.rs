//! The nonabelian Fourier transform on M(G) for a finite group G: group
//! closure from permutation generators, Burnside class-sum character tables,
//! the pairing matrix over commuting conjugate pairs, and the abelian
//! reduction.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

pub const CLOSURE_CAP: usize = 20_000;

/// A finite group as a full multiplication table; element 0 is the identity.
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    /// permutation images when built from generators (for labeling only)
    perms: Option<Vec<Vec<u16>>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mult(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mult(self.mult(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32)
            .all(|a| (0..self.order as u32).all(|b| self.mult(a, b) == self.mult(b, a)))
    }

    /// Group-law sanity: exact identity/inverse checks for every element and
    /// associativity on at least 1000 seeded random triples.
    fn validate(&self) -> Result<()> {
        let n = self.order as u32;
        for a in 0..n {
            if self.mult(0, a) != a || self.mult(a, 0) != a {
                return Err(Error::PropertyViolation("identity law fails".into()));
            }
            if self.mult(a, self.inv(a)) != 0 || self.mult(self.inv(a), a) != 0 {
                return Err(Error::PropertyViolation("inverse law fails".into()));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x61_73_73_6f_63);
        for _ in 0..1000 {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if self.mult(self.mult(a, b), c) != self.mult(a, self.mult(b, c)) {
                return Err(Error::PropertyViolation("associativity fails".into()));
            }
        }
        Ok(())
    }
}

fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    // apply b first, then a
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Closure of a set of permutations of {0..n-1} under composition.
pub fn group_from_generators(gens: &[Vec<u16>]) -> Result<FiniteGroup> {
    let n_points = gens.first().map_or(1, |g| g.len());
    for g in gens {
        if g.len() != n_points {
            return Err(Error::InvalidInput("generators act on different point counts".into()));
        }
        let mut seen = vec![false; n_points];
        for &i in g {
            if (i as usize) >= n_points || seen[i as usize] {
                return Err(Error::InvalidInput("generator is not a bijection".into()));
            }
            seen[i as usize] = true;
        }
    }
    let identity: Vec<u16> = (0..n_points as u16).collect();
    let mut elems: Vec<Vec<u16>> = vec![identity.clone()];
    let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut queue = 0usize;
    while queue < elems.len() {
        let cur = elems[queue].clone();
        queue += 1;
        for g in gens {
            let next = compose(&cur, g);
            if !index.contains_key(&next) {
                if elems.len() >= CLOSURE_CAP {
                    return Err(Error::TooLarge { cap: CLOSURE_CAP });
                }
                index.insert(next.clone(), elems.len() as u32);
                elems.push(next);
            }
        }
    }
    let order = elems.len();
    let mut mult = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            mult[a * order + b] = index[&compose(&elems[a], &elems[b])];
        }
    }
    let mut inv = vec![0u32; order];
    for a in 0..order {
        let mut ip = vec![0u16; n_points];
        for (i, &img) in elems[a].iter().enumerate() {
            ip[img as usize] = i as u16;
        }
        inv[a] = index[&ip];
    }
    let g = FiniteGroup { order, mult, inv, perms: Some(elems) };
    g.validate()?;
    Ok(g)
}

fn cycle_perm(n_points: usize, offset: usize, len: usize) -> Vec<u16> {
    let mut p: Vec<u16> = (0..n_points as u16).collect();
    for i in 0..len {
        p[offset + i] = (offset + (i + 1) % len) as u16;
    }
    p
}

/// Presets: "trivial", "Zn", products like "Z2xZ2", and "Sn".
pub fn group_preset(name: &str) -> Result<FiniteGroup> {
    if name == "trivial" {
        return group_from_generators(&[vec![0u16]]);
    }
    if let Some(rest) = name.strip_prefix('S') {
        let n: usize = rest.parse().map_err(|_| Error::UnknownPreset(name.into()))?;
        if !(1..=8).contains(&n) {
            return Err(Error::UnknownPreset(name.into()));
        }
        if n == 1 {
            return group_from_generators(&[vec![0u16]]);
        }
        let mut swap: Vec<u16> = (0..n as u16).collect();
        swap.swap(0, 1);
        return group_from_generators(&[swap, cycle_perm(n, 0, n)]);
    }
    if name.starts_with('Z') {
        let mut sizes = Vec::new();
        for part in name.split('x') {
            let n: usize = part
                .strip_prefix('Z')
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::UnknownPreset(name.into()))?;
            sizes.push(n);
        }
        let total: usize = sizes.iter().sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for &n in &sizes {
            gens.push(cycle_perm(total, offset, n));
            offset += n;
        }
        return group_from_generators(&gens);
    }
    Err(Error::UnknownPreset(name.into()))
}

/// Parses "(1 2 3)(4 5),(1 2)" — generators separated by top-level commas,
/// each a product of cycles of 1-based points.
pub fn parse_permutation_spec(spec: &str) -> Result<FiniteGroup> {
    let mut gen_strs = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in spec.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::InvalidInput("unbalanced parentheses".into()));
                }
                cur.push(ch);
            }
            ',' if depth == 0 => {
                gen_strs.push(cur.clone());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::InvalidInput("unbalanced parentheses".into()));
    }
    gen_strs.push(cur);

    let mut cycles_per_gen: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 1usize;
    for gs in &gen_strs {
        let mut cycles = Vec::new();
        let mut rest = gs.trim();
        while let Some(open) = rest.find('(') {
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::InvalidInput("unbalanced parentheses".into()))?
                + open;
            let inner = &rest[open + 1..close];
            let points: Result<Vec<usize>> = inner
                .split([' ', ','])
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| Error::InvalidInput(format!("bad point '{t}'")))
                })
                .collect();
            let points = points?;
            let mut sorted = points.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != points.len() {
                return Err(Error::InvalidInput("repeated point in a cycle".into()));
            }
            if let Some(&m) = points.iter().max() {
                max_point = max_point.max(m);
            }
            cycles.push(points);
            rest = &rest[close + 1..];
        }
        if !rest.trim().is_empty() {
            return Err(Error::InvalidInput(format!("unexpected text '{}'", rest.trim())));
        }
        cycles_per_gen.push(cycles);
    }

    let mut gens = Vec::new();
    for cycles in cycles_per_gen {
        let mut p: Vec<u16> = (0..max_point as u16).collect();
        for cycle in cycles {
            let prev = p.clone();
            // the cycle maps point c_i to c_{i+1}; compose onto p
            let mut step: Vec<u16> = (0..max_point as u16).collect();
            for i in 0..cycle.len() {
                step[cycle[i] - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u16;
            }
            p = compose(&step, &prev);
        }
        gens.push(p);
    }
    group_from_generators(&gens)
}

/// "preset:S4" or "perm:(1 2),(1 2 3 4)".
pub fn group_from_spec(spec: &str) -> Result<FiniteGroup> {
    if let Some(name) = spec.strip_prefix("preset:") {
        group_preset(name)
    } else if let Some(p) = spec.strip_prefix("perm:") {
        parse_permutation_spec(p)
    } else {
        Err(Error::InvalidInput(format!(
            "group spec must start with 'preset:' or 'perm:', got '{spec}'"
        )))
    }
}

/// Conjugacy classes, ordered by (size, minimal member index); the
/// representative is the minimal member.
pub struct Classes {
    pub class_of: Vec<usize>,
    pub reps: Vec<u32>,
    pub members: Vec<Vec<u32>>,
}

pub fn conjugacy_classes(g: &FiniteGroup) -> Classes {
    let n = g.order() as u32;
    let mut class_of = vec![usize::MAX; n as usize];
    let mut members: Vec<Vec<u32>> = Vec::new();
    for x in 0..n {
        if class_of[x as usize] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut orbit = Vec::new();
        for gg in 0..n {
            let y = g.conj(gg, x);
            if class_of[y as usize] == usize::MAX {
                class_of[y as usize] = id;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (members[i].len(), members[i][0]));
    let members: Vec<Vec<u32>> = order.iter().map(|&i| members[i].clone()).collect();
    let mut class_of = class_of;
    for (new_id, m) in members.iter().enumerate() {
        for &x in m {
            class_of[x as usize] = new_id;
        }
    }
    let reps = members.iter().map(|m| m[0]).collect();
    Classes { class_of, reps, members }
}

/// Complex character table: rows are irreducible characters sorted by
/// (degree, then class-value tuples in descending lexicographic order);
/// columns follow the class order of [`conjugacy_classes`].
pub fn character_table(g: &FiniteGroup) -> Result<Vec<Vec<Complex64>>> {
    let classes = conjugacy_classes(g);
    character_table_for(g, &classes)
}

fn character_table_for(g: &FiniteGroup, classes: &Classes) -> Result<Vec<Vec<Complex64>>> {
    let k = classes.reps.len();
    let n = g.order();
    // class-algebra constants: C_j C_i = Σ_k a[j][i][k] C_k
    let mut a = vec![vec![vec![0i64; k]; k]; k];
    for (kk, &zk) in classes.reps.iter().enumerate() {
        for u in 0..n as u32 {
            let v = g.mult(g.inv(u), zk);
            a[classes.class_of[u as usize]][classes.class_of[v as usize]][kk] += 1;
        }
    }
    let b: Vec<DMatrix<f64>> = (0..k)
        .map(|j| DMatrix::from_fn(k, k, |i, kk| a[j][i][kk] as f64))
        .collect();

    const MAX_ATTEMPTS: usize = 20;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB1_62_6E_73 + attempt as u64);
        let weights: Vec<f64> = (0..k).map(|_| rng.gen::<f64>()).collect();
        let mut t = DMatrix::zeros(k, k);
        for (j, bj) in b.iter().enumerate() {
            t += bj * weights[j];
        }
        let eigen = t.clone().complex_eigenvalues();
        let mut separated = true;
        for i in 0..k {
            for j in i + 1..k {
                if (eigen[i] - eigen[j]).norm() < 1e-6 {
                    separated = false;
                }
            }
        }
        if !separated {
            continue;
        }
        match extract_characters(g, classes, &b, &t, &eigen) {
            Some(rows) => return Ok(rows),
            None => continue,
        }
    }
    Err(Error::NumericalDegeneracy { attempts: MAX_ATTEMPTS })
}

fn extract_characters(
    g: &FiniteGroup,
    classes: &Classes,
    b: &[DMatrix<f64>],
    t: &DMatrix<f64>,
    eigen: &nalgebra::DVector<Complex64>,
) -> Option<Vec<Vec<Complex64>>> {
    let k = classes.reps.len();
    let n = g.order() as f64;
    let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(k);
    for idx in 0..k {
        let v = null_space_vector(t, eigen[idx])?;
        let imax = (0..k).max_by(|&i, &j| v[i].norm().partial_cmp(&v[j].norm()).unwrap())?;
        if v[imax].norm() < 1e-8 {
            return None;
        }
        // ω_j = eigenvalue of B_j on this common eigenvector
        let mut omega = vec![Complex64::new(0.0, 0.0); k];
        for j in 0..k {
            let mut img = Complex64::new(0.0, 0.0);
            for kk in 0..k {
                img += Complex64::new(b[j][(imax, kk)], 0.0) * v[kk];
            }
            omega[j] = img / v[imax];
        }
        let mut denom = 0.0;
        for j in 0..k {
            denom += omega[j].norm_sqr() / classes.members[j].len() as f64;
        }
        if denom <= 0.0 {
            return None;
        }
        let deg = (n / denom).sqrt();
        let deg_round = deg.round();
        if (deg - deg_round).abs() > 1e-6 * deg_round.max(1.0) || deg_round < 1.0 {
            return None;
        }
        let row: Vec<Complex64> = (0..k)
            .map(|j| omega[j] * deg_round / classes.members[j].len() as f64)
            .collect();
        rows.push(row);
    }
    // Σ deg² = |G|
    let sum_sq: f64 = rows.iter().map(|r| r[0].re * r[0].re).sum();
    if (sum_sq - n).abs() > 1e-6 * n {
        return None;
    }
    // row orthogonality
    for x in 0..k {
        for y in 0..k {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..k {
                s += rows[x][j] * rows[y][j].conj() * classes.members[j].len() as f64;
            }
            s /= n;
            let expect = if x == y { 1.0 } else { 0.0 };
            if (s - Complex64::new(expect, 0.0)).norm() > 1e-8 {
                return None;
            }
        }
    }
    // deterministic row order: degree ascending, then values descending lex
    let key = |row: &Vec<Complex64>| -> (i64, Vec<(i64, i64)>) {
        let rounded: Vec<(i64, i64)> = row
            .iter()
            .map(|c| (-(c.re * 1e6).round() as i64, -(c.im * 1e6).round() as i64))
            .collect();
        ((row[0].re).round() as i64, rounded)
    };
    rows.sort_by_key(key);
    Some(rows)
}

/// One null-space vector of (T - λI), by Gaussian elimination with partial
/// pivoting; expects nullity exactly 1.
fn null_space_vector(t: &DMatrix<f64>, lambda: Complex64) -> Option<Vec<Complex64>> {
    let k = t.nrows();
    let mut m: Vec<Vec<Complex64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut e = Complex64::new(t[(i, j)], 0.0);
                    if i == j {
                        e -= lambda;
                    }
                    e
                })
                .collect()
        })
        .collect();
    let scale: f64 = m
        .iter()
        .flat_map(|r| r.iter().map(|c| c.norm()))
        .fold(0.0, f64::max)
        .max(1.0);
    let eps = 1e-10 * scale;
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let best = (row..k).max_by(|&i, &j| {
            m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap()
        })?;
        if m[best][col].norm() < eps {
            continue;
        }
        m.swap(row, best);
        let p = m[row][col];
        for r in row + 1..k {
            let f = m[r][col] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for c in col..k {
                let sub = f * m[row][c];
                m[r][c] -= sub;
            }
        }
        pivot_cols.push((row, col));
        row += 1;
    }
    if pivot_cols.len() != k - 1 {
        return None;
    }
    let free_col = (0..k).find(|c| !pivot_cols.iter().any(|&(_, pc)| pc == *c))?;
    let mut v = vec![Complex64::new(0.0, 0.0); k];
    v[free_col] = Complex64::new(1.0, 0.0);
    for &(r, c) in pivot_cols.iter().rev() {
        let mut s = Complex64::new(0.0, 0.0);
        for cc in c + 1..k {
            s += m[r][cc] * v[cc];
        }
        v[c] = -s / m[r][c];
    }
    let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for c in v.iter_mut() {
        *c /= norm;
    }
    Some(v)
}

/// A point of M(G): a conjugacy class paired with an irreducible character
/// of the centralizer of its representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MPair {
    pub class_index: usize,
    pub irrep_index: usize,
}

pub struct CentralizerData {
    /// global indices of the members, ascending (the local identity is 0)
    pub members: Vec<u32>,
    global_to_local: Vec<i64>,
    /// local class index per local element
    class_of: Vec<usize>,
    pub chars: Vec<Vec<Complex64>>,
}

impl CentralizerData {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// χ_row evaluated at a global element of the centralizer.
    pub fn char_value(&self, row: usize, global: u32) -> Complex64 {
        let local = self.global_to_local[global as usize];
        self.chars[row][self.class_of[local as usize]]
    }
}

pub struct MSet {
    pub pairs: Vec<MPair>,
    pub classes: Classes,
    pub centralizers: Vec<CentralizerData>,
}

fn centralizer_data(g: &FiniteGroup, x: u32) -> Result<CentralizerData> {
    let n = g.order() as u32;
    let members: Vec<u32> = (0..n).filter(|&h| g.mult(h, x) == g.mult(x, h)).collect();
    let k = members.len();
    let mut global_to_local = vec![-1i64; n as usize];
    for (i, &m) in members.iter().enumerate() {
        global_to_local[m as usize] = i as i64;
    }
    let mut mult = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            mult[a * k + b] = global_to_local[g.mult(members[a], members[b]) as usize] as u32;
        }
    }
    let inv = (0..k)
        .map(|a| global_to_local[g.inv(members[a]) as usize] as u32)
        .collect();
    let local = FiniteGroup { order: k, mult, inv, perms: None };
    local.validate()?;
    let classes = conjugacy_classes(&local);
    let chars = character_table_for(&local, &classes)?;
    Ok(CentralizerData {
        members,
        global_to_local,
        class_of: classes.class_of,
        chars,
    })
}

pub fn m_set(g: &FiniteGroup) -> Result<MSet> {
    let classes = conjugacy_classes(g);
    let mut centralizers = Vec::new();
    let mut pairs = Vec::new();
    for (ci, &rep) in classes.reps.iter().enumerate() {
        let data = centralizer_data(g, rep)?;
        for ri in 0..data.chars.len() {
            pairs.push(MPair { class_index: ci, irrep_index: ri });
        }
        centralizers.push(data);
    }
    Ok(MSet { pairs, classes, centralizers })
}

pub struct FourierMatrix {
    pub pairs: Vec<MPair>,
    pub entries: Vec<Vec<Complex64>>,
}

fn pairing_entry(g: &FiniteGroup, m: &MSet, p: &MPair, q: &MPair) -> Complex64 {
    let x = m.classes.reps[p.class_index];
    let y = m.classes.reps[q.class_index];
    let zx = &m.centralizers[p.class_index];
    let zy = &m.centralizers[q.class_index];
    let mut sum = Complex64::new(0.0, 0.0);
    for gg in 0..g.order() as u32 {
        let h = g.conj(gg, y);
        if g.mult(x, h) != g.mult(h, x) {
            continue;
        }
        let xg = g.conj(g.inv(gg), x);
        sum += zx.char_value(p.irrep_index, h) * zy.char_value(q.irrep_index, xg).conj();
    }
    sum / (zx.order() as f64 * zy.order() as f64)
}

/// Builds the pairing matrix and asserts M·M = I and M·conj(Mᵀ) = I to 1e-8.
pub fn fourier_matrix(g: &FiniteGroup) -> Result<FourierMatrix> {
    let m = m_set(g)?;
    let np = m.pairs.len();
    let entries: Vec<Vec<Complex64>> = (0..np)
        .map(|i| {
            (0..np)
                .map(|j| pairing_entry(g, &m, &m.pairs[i], &m.pairs[j]))
                .collect()
        })
        .collect();
    for (label, conj_second) in [("M·M", false), ("M·conj(Mᵀ)", true)] {
        for i in 0..np {
            for j in 0..np {
                let mut s = Complex64::new(0.0, 0.0);
                for t in 0..np {
                    let second = if conj_second { entries[j][t].conj() } else { entries[t][j] };
                    s += entries[i][t] * second;
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                if (s - Complex64::new(expect, 0.0)).norm() > 1e-8 {
                    return Err(Error::PropertyViolation(format!(
                        "{label} deviates from the identity at ({i},{j})"
                    )));
                }
            }
        }
    }
    Ok(FourierMatrix { pairs: m.pairs, entries })
}

/// For abelian G the pairing must collapse to σ(y)·conj(τ(x))/|G|.
pub fn abelian_reduction_check(g: &FiniteGroup) -> Result<bool> {
    if !g.is_abelian() {
        return Err(Error::InvalidInput("group is not abelian".into()));
    }
    let m = m_set(g)?;
    let fm = fourier_matrix(g)?;
    let n = g.order() as f64;
    for (i, p) in m.pairs.iter().enumerate() {
        for (j, q) in m.pairs.iter().enumerate() {
            let x = m.classes.reps[p.class_index];
            let y = m.classes.reps[q.class_index];
            let sigma_y = m.centralizers[p.class_index].char_value(p.irrep_index, y);
            let tau_x = m.centralizers[q.class_index].char_value(q.irrep_index, x);
            let expect = sigma_y * tau_x.conj() / n;
            if (fm.entries[i][j] - expect).norm() > 1e-10 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Label "classRep|irrepIndex" for CSV headers; the class representative is
/// rendered as a permutation in cycle notation when available.
pub fn pair_label(g: &FiniteGroup, m: &MSet, p: &MPair) -> String {
    let rep = m.classes.reps[p.class_index];
    let rep_str = match &g.perms {
        Some(perms) => cycle_notation(&perms[rep as usize]),
        None => rep.to_string(),
    };
    format!("{}|{}", rep_str, p.irrep_index)
}

fn cycle_notation(p: &[u16]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = p[start] as usize;
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = p[cur] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle.iter().map(|&i| (i + 1).to_string()).collect::<Vec<_>>().join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn closure_orders() {
        assert_eq!(group_from_generators(&[vec![1, 0]]).unwrap().order(), 2);
        assert_eq!(group_preset("trivial").unwrap().order(), 1);
        assert_eq!(group_preset("S3").unwrap().order(), 6);
        assert_eq!(group_preset("S4").unwrap().order(), 24);
        assert_eq!(group_preset("S5").unwrap().order(), 120);
        assert_eq!(group_preset("Z6").unwrap().order(), 6);
        assert_eq!(group_preset("Z2xZ2").unwrap().order(), 4);
        assert_eq!(group_preset("Z2xZ3").unwrap().order(), 6);
    }

    #[test]
    fn closure_cap() {
        match group_preset("S8") {
            Err(Error::TooLarge { cap }) => assert_eq!(cap, CLOSURE_CAP),
            other => panic!("expected TooLarge, got order {:?}", other.map(|g| g.order())),
        }
    }

    #[test]
    fn perm_spec_parsing() {
        let g = parse_permutation_spec("(1 2),(1 2 3 4)").unwrap();
        assert_eq!(g.order(), 24);
        let g = parse_permutation_spec("(1 2),(1 2 3 4 5)").unwrap();
        assert_eq!(g.order(), 120);
        let g = parse_permutation_spec("(1 2 3)(4 5)").unwrap();
        assert_eq!(g.order(), 6);
        assert!(parse_permutation_spec("(1 2").is_err());
        assert!(parse_permutation_spec("(1 1)").is_err());
        assert!(group_from_spec("preset:S4").unwrap().order() == 24);
        assert!(group_from_spec("nonsense").is_err());
    }

    #[test]
    fn class_census() {
        let g = group_preset("S4").unwrap();
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.members.iter().map(|m| m.len()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "classes sorted by size");
        assert_eq!(classes.reps[0], 0);
    }

    #[test]
    fn trivial_character_table() {
        let g = group_preset("trivial").unwrap();
        let rows = character_table(&g).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(close(rows[0][0], Complex64::new(1.0, 0.0), 1e-12));
    }

    #[test]
    fn z2_character_table() {
        let g = group_preset("Z2").unwrap();
        let rows = character_table(&g).unwrap();
        assert_eq!(rows.len(), 2);
        let expect = [[1.0, 1.0], [1.0, -1.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!(close(rows[i][j], Complex64::new(expect[i][j], 0.0), 1e-8));
            }
        }
    }

    #[test]
    fn s3_character_degrees() {
        let g = group_preset("S3").unwrap();
        let rows = character_table(&g).unwrap();
        let degs: Vec<i64> = rows.iter().map(|r| r[0].re.round() as i64).collect();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn s4_character_degrees() {
        let g = group_preset("S4").unwrap();
        let rows = character_table(&g).unwrap();
        let degs: Vec<i64> = rows.iter().map(|r| r[0].re.round() as i64).collect();
        assert_eq!(degs, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn m_set_censuses() {
        assert_eq!(m_set(&group_preset("trivial").unwrap()).unwrap().pairs.len(), 1);
        let m3 = m_set(&group_preset("S3").unwrap()).unwrap();
        assert_eq!(m3.pairs.len(), 8);
        let per_class: Vec<usize> = m3.centralizers.iter().map(|c| c.chars.len()).collect();
        assert_eq!(per_class, vec![3, 3, 2]);
        let m4 = m_set(&group_preset("S4").unwrap()).unwrap();
        assert_eq!(m4.pairs.len(), 21);
        let mut counts: Vec<usize> = m4.centralizers.iter().map(|c| c.chars.len()).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![3, 4, 4, 5, 5]);
    }

    /// Independent census oracle: |M(G)| must equal the number of pairs of
    /// commuting elements divided by |G| ... computed here directly as
    /// Σ_classes #classes(Z(rep)) via a raw commuting count per class.
    #[test]
    fn m_set_census_oracle() {
        for name in ["S3", "S4", "Z6"] {
            let g = group_preset(name).unwrap();
            let m = m_set(&g).unwrap();
            // #commuting pairs = Σ_x |Z(x)| = |G| · #classes; likewise
            // Σ_reps #classes(Z(rep)) = |M(G)| is checked against a direct
            // recount of conjugacy classes inside each centralizer
            let classes = conjugacy_classes(&g);
            let mut expected = 0usize;
            for &rep in &classes.reps {
                let members: Vec<u32> = (0..g.order() as u32)
                    .filter(|&h| g.mult(h, rep) == g.mult(rep, h))
                    .collect();
                let mut assigned = vec![false; g.order()];
                let mut count = 0;
                for &x in &members {
                    if assigned[x as usize] {
                        continue;
                    }
                    count += 1;
                    for &h in &members {
                        assigned[g.conj(h, x) as usize] = true;
                    }
                }
                expected += count;
            }
            assert_eq!(m.pairs.len(), expected, "census for {name}");
        }
    }

    #[test]
    fn trivial_fourier() {
        let fm = fourier_matrix(&group_preset("trivial").unwrap()).unwrap();
        assert_eq!(fm.entries.len(), 1);
        assert!(close(fm.entries[0][0], Complex64::new(1.0, 0.0), 1e-12));
    }

    #[test]
    fn z2_fourier_frozen() {
        let fm = fourier_matrix(&group_preset("Z2").unwrap()).unwrap();
        let expect = [
            [0.5, 0.5, 0.5, 0.5],
            [0.5, 0.5, -0.5, -0.5],
            [0.5, -0.5, 0.5, -0.5],
            [0.5, -0.5, -0.5, 0.5],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert!(
                    close(fm.entries[i][j], Complex64::new(expect[i][j], 0.0), 1e-9),
                    "entry ({i},{j}) = {}",
                    fm.entries[i][j]
                );
            }
        }
    }

    #[test]
    fn s3_fourier_real_involution() {
        let fm = fourier_matrix(&group_preset("S3").unwrap()).unwrap();
        assert_eq!(fm.entries.len(), 8);
        for row in &fm.entries {
            for e in row {
                assert!(e.im.abs() < 1e-8, "matrix should be real");
            }
        }
    }

    #[test]
    fn abelian_reduction() {
        for name in ["Z2", "Z6", "Z2xZ2"] {
            let g = group_preset(name).unwrap();
            assert!(g.is_abelian());
            assert!(abelian_reduction_check(&g).unwrap(), "reduction for {name}");
        }
        assert!(abelian_reduction_check(&group_preset("S3").unwrap()).is_err());
    }

    #[test]
    fn pair_permutation_conjugates_matrix() {
        let g = group_preset("S3").unwrap();
        let m = m_set(&g).unwrap();
        let fm = fourier_matrix(&g).unwrap();
        let np = m.pairs.len();
        // a fixed nontrivial relabeling of the pairs
        let perm: Vec<usize> = (0..np).map(|i| (i * 3 + 2) % np).collect();
        {
            let mut check = perm.clone();
            check.sort_unstable();
            assert_eq!(check, (0..np).collect::<Vec<_>>());
        }
        for i in 0..np {
            for j in 0..np {
                let direct = pairing_entry(&g, &m, &m.pairs[perm[i]], &m.pairs[perm[j]]);
                assert!(close(direct, fm.entries[perm[i]][perm[j]], 1e-12));
            }
        }
    }

    #[test]
    fn cycle_labels() {
        let g = group_preset("S3").unwrap();
        let m = m_set(&g).unwrap();
        let labels: Vec<String> =
            m.pairs.iter().map(|p| pair_label(&g, &m, p)).collect();
        assert_eq!(labels[0], "()|0");
        assert_eq!(labels.len(), 8);
        assert!(labels.iter().skip(3).take(3).all(|l| l.starts_with('(')));
    }
}
