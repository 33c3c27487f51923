//! Walk through the Coxeter engine: enumeration, canonical words, descent
//! sets, the longest element, and Bruhat order.

use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};

fn main() -> klbasis::Result<()> {
    for name in ["A3", "B3", "I2(7)", "H3"] {
        let g = build_group(CoxeterMatrix::preset(name)?, DEFAULT_CAP)?;
        println!(
            "{name}: |W| = {}, N = {}, w0 = \"{}\"",
            g.order(),
            g.n_positive_roots(),
            g.word_string(g.w0())
        );
    }

    let g = build_group(CoxeterMatrix::preset("A3")?, DEFAULT_CAP)?;
    let w = g.parse_word("2,3,1,2")?;
    println!("\nA3, w = \"{}\" (length {})", g.word_string(w), g.length(w));
    println!("  left descents:  {:?}", g.left_descents(w).collect::<Vec<_>>());
    println!("  right descents: {:?}", g.right_descents(w).collect::<Vec<_>>());
    println!("  inverse: \"{}\"", g.word_string(g.inverse(w)));

    let below = g.bruhat_interval_below(w);
    let words: Vec<String> = below.iter().map(|&y| g.word_string(y)).collect();
    println!("  {} elements below in Bruhat order: {}", below.len(), words.join(", "));

    println!(
        "\nPoincaré polynomial of A3: {}",
        g.poincare_polynomial().q_string().expect("even polynomial")
    );
    Ok(())
}
