//! Left and two-sided cells of A3, the a-function, and the distinguished
//! involutions (one per left cell).

use klbasis::cells::{a_function, cell_partition, distinguished_involutions};
use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};
use klbasis::hecke::KLTable;

fn main() -> klbasis::Result<()> {
    let g = build_group(CoxeterMatrix::preset("A3")?, DEFAULT_CAP)?;
    let mut table = KLTable::new(&g);

    let data = cell_partition(&mut table);
    println!(
        "A3: {} left cells, {} right cells, {} two-sided cells",
        data.left_cells.len(),
        data.right_cells.len(),
        data.two_sided_cells.len()
    );

    let a = a_function(&mut table);
    for (i, cell) in data.two_sided_cells.iter().enumerate() {
        let words: Vec<String> = cell.iter().map(|&e| g.word_string(e)).collect();
        println!("two-sided cell {i} (a = {}): {}", a[cell[0].index()], words.join(" | "));
    }

    let d = distinguished_involutions(&mut table, &a, &data)?;
    println!("\ndistinguished involutions, one per left cell:");
    for z in d {
        println!("  \"{}\"  (a = {}, length {})", g.word_string(z), a[z.index()], g.length(z));
    }
    Ok(())
}
