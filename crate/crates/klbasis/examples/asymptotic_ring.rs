//! The asymptotic ring J of A3: structure constants from leading h-terms,
//! the distinguished unit, and a sample multiplication.

use klbasis::cells::{
    a_function, cell_partition, distinguished_involutions, j_multiply, j_structure_constants,
    j_unit, JElement,
};
use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};
use klbasis::hecke::KLTable;

fn main() -> klbasis::Result<()> {
    let g = build_group(CoxeterMatrix::preset("A3")?, DEFAULT_CAP)?;
    let mut table = KLTable::new(&g);
    let data = cell_partition(&mut table);
    let a = a_function(&mut table);
    let gamma = j_structure_constants(&mut table, &a);
    println!("A3: {} nonzero structure constants", gamma.len());

    let d = distinguished_involutions(&mut table, &a, &data)?;
    let unit = j_unit(&d);
    let show = |el: &JElement| -> String {
        if el.is_empty() {
            return "0".into();
        }
        el.iter()
            .map(|(&x, &c)| {
                let w = g.word_string(g.element(x as usize));
                if c == 1 { format!("t_{{{w}}}") } else { format!("{c}·t_{{{w}}}") }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    println!("unit = {}", show(&unit));

    let x = g.parse_word("2,1,3")?;
    let xi = g.inverse(x);
    let tx: JElement = [(x.index() as u32, 1)].into();
    let txi: JElement = [(xi.index() as u32, 1)].into();
    println!("t_{{2,1,3}} · t_{{1,3,2}} = {}", show(&j_multiply(&gamma, &tx, &txi)));
    println!("t_{{2,1,3}} · t_{{2,1,3}} = {}", show(&j_multiply(&gamma, &tx, &tx)));

    let both = j_multiply(&gamma, &unit, &tx);
    assert_eq!(both, tx);
    println!("unit · t_{{2,1,3}} = t_{{2,1,3}}  (checked)");
    Ok(())
}
