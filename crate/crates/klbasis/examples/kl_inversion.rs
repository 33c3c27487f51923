//! KL polynomials on B3: the nontrivial entries, mu coefficients along the
//! longest element, and the exact inversion formula.

use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};
use klbasis::hecke::{bitrace, verify_inversion, KLTable};

fn main() -> klbasis::Result<()> {
    let g = build_group(CoxeterMatrix::preset("B3")?, DEFAULT_CAP)?;
    let mut table = KLTable::new(&g);
    table.fill_all();

    let mut nontrivial = 0usize;
    let mut max_deg = 0i64;
    for w in g.elements() {
        for y in g.bruhat_interval_below(w) {
            let p = table.kl_polynomial(y, w);
            if !p.is_one() {
                nontrivial += 1;
                max_deg = max_deg.max(p.degree().unwrap());
            }
        }
    }
    println!("B3: {} pairs y ≤ w with P ≠ 1, max q-degree {}", nontrivial, max_deg);

    let w0 = g.w0();
    let mut mus = Vec::new();
    for y in g.elements() {
        let m = table.mu(y, w0);
        if m != 0 {
            mus.push(format!("mu(\"{}\", w0) = {m}", g.word_string(y)));
        }
    }
    println!("nonzero mu against w0:\n  {}", mus.join("\n  "));

    match verify_inversion(&mut table) {
        Ok(()) => println!("inversion formula: exact over all {} pairs", g.order() * g.order()),
        Err((x, w)) => println!("inversion FAILED at ({}, {})", g.word_string(x), g.word_string(w)),
    }

    let e = g.identity();
    println!("bitrace(e, e) = {} = |W|", bitrace(&g, e, e).q_string().unwrap());
    Ok(())
}
