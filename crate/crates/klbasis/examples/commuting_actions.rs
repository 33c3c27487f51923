//! Each two-sided cell carries a left Hecke action in v and a right one in
//! an independent variable v'; this checks they commute, cell by cell.

use klbasis::cells::{bimodule_commutation_check, cell_partition};
use klbasis::coxeter::{build_group, CoxeterMatrix, DEFAULT_CAP};
use klbasis::hecke::KLTable;

fn main() -> klbasis::Result<()> {
    for name in ["A2", "B2", "A3"] {
        let g = build_group(CoxeterMatrix::preset(name)?, DEFAULT_CAP)?;
        let mut table = KLTable::new(&g);
        let data = cell_partition(&mut table);
        for (i, cell) in data.two_sided_cells.iter().enumerate() {
            let ok = bimodule_commutation_check(&mut table, cell);
            println!("{name} two-sided cell {i} ({} elements): commute = {ok}", cell.len());
            assert!(ok);
        }
    }
    Ok(())
}
