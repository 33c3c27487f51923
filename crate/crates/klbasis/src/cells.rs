//! Cells, the a-function, distinguished involutions, the asymptotic ring J
//! with its integer structure constants, and the two-parameter commutation
//! property of the left/right actions on a two-sided cell.
//!
//! Everything is phrased over the normalized basis b_w = v^{-l(w)} c*_w with
//! structure constants b_x b_y = Σ_z h_{x,y,z} b_z.

use crate::coxeter::{Element, GroupContext};
use crate::error::{Error, Result};
use crate::hecke::KLTable;
use crate::poly::{BiLaurentPolynomial, LaurentPolynomial};
use std::collections::BTreeMap;

/// Left/right/two-sided cell partitions. Cells are sorted internally by
/// element index and listed in order of their minimal element.
pub struct CellData {
    pub left_cells: Vec<Vec<Element>>,
    pub right_cells: Vec<Vec<Element>>,
    pub two_sided_cells: Vec<Vec<Element>>,
    pub left_id: Vec<usize>,
    pub right_id: Vec<usize>,
    pub two_sided_id: Vec<usize>,
}

/// All (z, μ(z,w)) with nonzero μ, per w.
fn mu_lists(table: &mut KLTable) -> Vec<Vec<(u32, i128)>> {
    let g = table.group();
    let mut out = vec![Vec::new(); g.order()];
    for w in g.elements() {
        for z in g.bruhat_interval_below(w) {
            if z == w {
                continue;
            }
            let m = table.mu(z, w);
            if m != 0 {
                out[w.index()].push((z.index() as u32, m));
            }
        }
    }
    out
}

/// Iterative Tarjan; components are returned with sorted members.
fn strongly_connected_components(adj: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut index = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut comps: Vec<Vec<u32>> = Vec::new();
    let mut counter: u32 = 0;
    let mut call: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != u32::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if frame.1 == 0 {
                index[v as usize] = counter;
                low[v as usize] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v as usize] = true;
            }
            if frame.1 < adj[v as usize].len() {
                let w = adj[v as usize][frame.1];
                frame.1 += 1;
                if index[w as usize] == u32::MAX {
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                call.pop();
                if let Some(parent) = call.last() {
                    let p = parent.0 as usize;
                    low[p] = low[p].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

fn package_cells(mut comps: Vec<Vec<u32>>, n: usize) -> (Vec<Vec<Element>>, Vec<usize>) {
    comps.sort_by_key(|c| c[0]);
    let mut ids = vec![0usize; n];
    let cells: Vec<Vec<Element>> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.iter()
                .map(|&x| {
                    ids[x as usize] = i;
                    Element(x)
                })
                .collect()
        })
        .collect();
    (cells, ids)
}

/// Cell partitions from the canonical-basis product preorders: y ≼_L w is
/// seeded by b_y appearing in some b_s·b_w, i.e. for s with sw > w the
/// elements sw and every z with μ(z,w) ≠ 0, sz < z; mirrored for ≼_R.
pub fn cell_partition(table: &mut KLTable) -> CellData {
    let g = table.group();
    let n = g.order();
    let rank = g.rank();
    let mus = mu_lists(table);
    let mut left_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut right_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for w in 0..n {
        let we = g.element(w);
        for s in 0..rank {
            if !g.is_left_descent(s, we) {
                left_adj[w].push(g.left_multiply_gen(s, we).index() as u32);
                for &(z, _) in &mus[w] {
                    if g.is_left_descent(s, g.element(z as usize)) {
                        left_adj[w].push(z);
                    }
                }
            }
            if !g.is_right_descent(we, s) {
                right_adj[w].push(g.right_multiply_gen(we, s).index() as u32);
                for &(z, _) in &mus[w] {
                    if g.is_right_descent(g.element(z as usize), s) {
                        right_adj[w].push(z);
                    }
                }
            }
        }
        left_adj[w].sort_unstable();
        left_adj[w].dedup();
        right_adj[w].sort_unstable();
        right_adj[w].dedup();
    }
    let mut both_adj = left_adj.clone();
    for w in 0..n {
        both_adj[w].extend_from_slice(&right_adj[w]);
        both_adj[w].sort_unstable();
        both_adj[w].dedup();
    }
    let (left_cells, left_id) = package_cells(strongly_connected_components(&left_adj), n);
    let (right_cells, right_id) = package_cells(strongly_connected_components(&right_adj), n);
    let (two_sided_cells, two_sided_id) =
        package_cells(strongly_connected_components(&both_adj), n);
    CellData {
        left_cells,
        right_cells,
        two_sided_cells,
        left_id,
        right_id,
        two_sided_id,
    }
}

/// Row sweep for the structure constants h_{x,y,z}: for fixed x, the rows
/// F_y = b_x·b_y over the b-basis are produced by right multiplication along
/// canonical words, with μ-corrections.
struct HSweep<'g> {
    g: &'g GroupContext,
    mus: Vec<Vec<(u32, i128)>>,
}

impl<'g> HSweep<'g> {
    fn new(table: &mut KLTable<'g>) -> Self {
        let g = table.group();
        let mus = mu_lists(table);
        HSweep { g, mus }
    }

    /// rows[y][z] = h_{x,y,z}
    fn rows_for(&self, x: usize) -> Vec<Vec<LaurentPolynomial>> {
        let g = self.g;
        let n = g.order();
        let mut rows: Vec<Vec<LaurentPolynomial>> = Vec::with_capacity(n);
        let mut first = vec![LaurentPolynomial::zero(); n];
        first[x] = LaurentPolynomial::one();
        rows.push(first);
        for y in 1..n {
            let ye = g.element(y);
            let s = *g.word(ye).last().unwrap() as usize;
            let yp = g.right_multiply_gen(ye, s).index();
            // F_y = F_{y'}·b_s − Σ_{z: zs<z} μ(z,y') F_z
            let mut row = vec![LaurentPolynomial::zero(); n];
            {
                let base = &rows[yp];
                for u in 0..n {
                    let p = &base[u];
                    if p.is_zero() {
                        continue;
                    }
                    let ue = g.element(u);
                    if g.is_right_descent(ue, s) {
                        row[u].add_mul(p, 1, 1);
                        row[u].add_mul(p, 1, -1);
                    } else {
                        row[g.right_multiply_gen(ue, s).index()].add_mul(p, 1, 0);
                        for &(z, m) in &self.mus[u] {
                            if g.is_right_descent(g.element(z as usize), s) {
                                row[z as usize].add_mul(p, m, 0);
                            }
                        }
                    }
                }
            }
            for &(z, m) in &self.mus[yp] {
                if g.is_right_descent(g.element(z as usize), s) {
                    let zrow = &rows[z as usize];
                    for u in 0..n {
                        if !zrow[u].is_zero() {
                            row[u].add_mul(&zrow[u], -m, 0);
                        }
                    }
                }
            }
            rows.push(row);
        }
        rows
    }
}

/// a(z) = max over x, y of deg_v h_{x,y,z}.
pub fn a_function(table: &mut KLTable) -> Vec<u32> {
    let sweep = HSweep::new(table);
    let n = sweep.g.order();
    let mut amax = vec![0i64; n];
    for x in 0..n {
        for row in &sweep.rows_for(x) {
            for (z, p) in row.iter().enumerate() {
                if let Some(d) = p.degree() {
                    amax[z] = amax[z].max(d);
                }
            }
        }
    }
    amax.into_iter().map(|d| u32::try_from(d).expect("a-value must be nonnegative")).collect()
}

/// D = {z involution : a(z) = l(z) − 2·deg_q P_{e,z}}; validated to meet
/// every left cell exactly once.
pub fn distinguished_involutions(
    table: &mut KLTable,
    a: &[u32],
    cells: &CellData,
) -> Result<Vec<Element>> {
    let g = table.group();
    let e = g.identity();
    let mut d = Vec::new();
    for z in g.involutions() {
        let p = table.kl_polynomial(e, z);
        let deg = p.degree().expect("P_{e,z} is never zero");
        if a[z.index()] as i64 == g.length(z) as i64 - 2 * deg {
            d.push(z);
        }
    }
    let mut seen = vec![0usize; cells.left_cells.len()];
    for z in &d {
        seen[cells.left_id[z.index()]] += 1;
    }
    for (i, &count) in seen.iter().enumerate() {
        if count != 1 {
            return Err(Error::ValidationFailure(format!(
                "left cell {i} contains {count} distinguished involutions"
            )));
        }
    }
    Ok(d)
}

/// Structure constants of J: entry (x, y, z) is the coefficient of t_z in
/// t_x·t_y, i.e. γ_{x,y,z⁻¹} = coefficient of v^{a(z)} in h_{x,y,z}.
pub fn j_structure_constants(table: &mut KLTable, a: &[u32]) -> BTreeMap<(u32, u32, u32), i128> {
    let sweep = HSweep::new(table);
    let n = sweep.g.order();
    let mut gamma = BTreeMap::new();
    for x in 0..n {
        let rows = sweep.rows_for(x);
        for (y, row) in rows.iter().enumerate() {
            for (z, p) in row.iter().enumerate() {
                let c = p.coeff(a[z] as i64);
                if c != 0 {
                    gamma.insert((x as u32, y as u32, z as u32), c);
                }
            }
        }
    }
    gamma
}

/// Sparse J-element over the t-basis.
pub type JElement = BTreeMap<u32, i128>;

pub fn j_multiply(
    gamma: &BTreeMap<(u32, u32, u32), i128>,
    a: &JElement,
    b: &JElement,
) -> JElement {
    let mut out: JElement = BTreeMap::new();
    for (&x, &ca) in a {
        for (&y, &cb) in b {
            for (&(_, _, z), &gxyz) in gamma.range((x, y, 0)..=(x, y, u32::MAX)) {
                let add = crate::poly::cmul(crate::poly::cmul(ca, cb), gxyz);
                let entry = out.entry(z).or_insert(0);
                *entry = crate::poly::cadd(*entry, add);
            }
        }
    }
    out.retain(|_, &mut c| c != 0);
    out
}

/// Σ_{d∈D} t_d, the unit of J.
pub fn j_unit(d: &[Element]) -> JElement {
    d.iter().map(|z| (z.index() as u32, 1)).collect()
}

/// W_* = {w : a(w) = N}.
pub fn w_star(g: &GroupContext, a: &[u32]) -> Vec<Element> {
    let n_roots = g.n_positive_roots();
    g.elements().filter(|w| a[w.index()] == n_roots).collect()
}

/// W_! = {a·w0·c : lengths additive}.
pub fn w_bang(g: &GroupContext) -> Vec<Element> {
    let w0 = g.w0();
    let nn = g.n_positive_roots();
    let mut flags = vec![false; g.order()];
    for x in g.elements() {
        let xw0 = g.multiply(x, w0);
        if g.length(xw0) != g.length(x) + nn {
            continue;
        }
        for c in g.elements() {
            let w = g.multiply(xw0, c);
            if g.length(w) == g.length(x) + nn + g.length(c) {
                flags[w.index()] = true;
            }
        }
    }
    g.elements().filter(|w| flags[w.index()]).collect()
}

/// On the two-sided cell c, the left action L_x(m_w) = Σ h_{x,w,w'} m_{w'}
/// in v and the right action R_y(m_w) = Σ h_{w,y,w'} m_{w'} in v' must
/// commute for all simple x, y; terms outside c are discarded.
pub fn bimodule_commutation_check(table: &mut KLTable, cell: &[Element]) -> bool {
    let g = table.group();
    let rank = g.rank();
    let k = cell.len();
    let mut pos: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, w) in cell.iter().enumerate() {
        pos.insert(w.index() as u32, i);
    }
    let mus = mu_lists(table);

    let v_unit = |left: bool| -> BiLaurentPolynomial {
        if left {
            BiLaurentPolynomial::monomial(1, 1, 0).add(&BiLaurentPolynomial::monomial(1, -1, 0))
        } else {
            BiLaurentPolynomial::monomial(1, 0, 1).add(&BiLaurentPolynomial::monomial(1, 0, -1))
        }
    };
    let constant = |c: i128| -> BiLaurentPolynomial { BiLaurentPolynomial::monomial(c, 0, 0) };

    let mut lefts: Vec<Vec<Vec<BiLaurentPolynomial>>> = Vec::with_capacity(rank);
    let mut rights: Vec<Vec<Vec<BiLaurentPolynomial>>> = Vec::with_capacity(rank);
    for s in 0..rank {
        let mut l = vec![vec![BiLaurentPolynomial::zero(); k]; k];
        let mut r = vec![vec![BiLaurentPolynomial::zero(); k]; k];
        for (i, &w) in cell.iter().enumerate() {
            // left action by b_s
            if g.is_left_descent(s, w) {
                l[i][i] = l[i][i].add(&v_unit(true));
            } else {
                if let Some(&j) = pos.get(&(g.left_multiply_gen(s, w).index() as u32)) {
                    l[i][j] = l[i][j].add(&constant(1));
                }
                for &(z, m) in &mus[w.index()] {
                    if g.is_left_descent(s, g.element(z as usize)) {
                        if let Some(&j) = pos.get(&z) {
                            l[i][j] = l[i][j].add(&constant(m));
                        }
                    }
                }
            }
            // right action by b_s
            if g.is_right_descent(w, s) {
                r[i][i] = r[i][i].add(&v_unit(false));
            } else {
                if let Some(&j) = pos.get(&(g.right_multiply_gen(w, s).index() as u32)) {
                    r[i][j] = r[i][j].add(&constant(1));
                }
                for &(z, m) in &mus[w.index()] {
                    if g.is_right_descent(g.element(z as usize), s) {
                        if let Some(&j) = pos.get(&z) {
                            r[i][j] = r[i][j].add(&constant(m));
                        }
                    }
                }
            }
        }
        lefts.push(l);
        rights.push(r);
    }

    let matmul = |a: &Vec<Vec<BiLaurentPolynomial>>,
                  b: &Vec<Vec<BiLaurentPolynomial>>|
     -> Vec<Vec<BiLaurentPolynomial>> {
        let mut out = vec![vec![BiLaurentPolynomial::zero(); k]; k];
        for i in 0..k {
            for t in 0..k {
                if a[i][t].is_zero() {
                    continue;
                }
                for j in 0..k {
                    if !b[t][j].is_zero() {
                        out[i][j] = out[i][j].add(&a[i][t].mul(&b[t][j]));
                    }
                }
            }
        }
        out
    };

    for l in &lefts {
        for r in &rights {
            if matmul(l, r) != matmul(r, l) {
                return false;
            }
        }
    }
    true
}
