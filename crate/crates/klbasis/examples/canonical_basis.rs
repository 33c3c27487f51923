//! The canonical basis element c*_{2312} of the A3 Hecke algebra, its
//! product with T_{w0}, and the identity that recovers the KL column.

use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};
use klbasis::hecke::{c_star, t_multiply, verify_cstar_identity, HeckeElement, KLTable};

fn main() -> klbasis::Result<()> {
    let g = build_group(CoxeterMatrix::preset("A3")?, DEFAULT_CAP)?;
    let mut table = KLTable::new(&g);
    let w = g.parse_word("2,3,1,2")?;

    let c = c_star(&mut table, w);
    println!("c*_{{2312}} has {} terms (coefficients in v):", c.num_terms());
    for (x, p) in c.terms() {
        println!("  T_{{{}}}: {}", g.word_string(x), p);
    }

    let prod = t_multiply(&g, &c, &HeckeElement::t(g.w0()));
    println!("\nc*_{{2312}} · T_{{w0}}:");
    for (x, p) in prod.terms() {
        println!("  T_{{{}}}: {}", g.word_string(x), p);
    }

    let recovered = verify_cstar_identity(&mut table, w)?;
    println!("\nrecovered P' column ({} rows, as polynomials in q):", recovered.len());
    for (y, p) in recovered {
        println!("  y = \"{}\": {}", g.word_string(y), p.inflate(2).q_string().unwrap());
    }
    Ok(())
}
