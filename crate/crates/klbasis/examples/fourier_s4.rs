//! The nonabelian Fourier transform on M(S4): 21 pairs (class, centralizer
//! irrep), a unitary involution.

use klbasis::fourier::{fourier_matrix, group_preset, m_set, pair_label};

fn main() -> klbasis::Result<()> {
    let g = group_preset("S4")?;
    let m = m_set(&g)?;
    println!("|M(S4)| = {}", m.pairs.len());

    let fm = fourier_matrix(&g)?;
    println!("matrix is {}x{}; both M·M = I and M·conj(Mᵀ) = I verified to 1e-8", fm.pairs.len(), fm.pairs.len());

    println!("\nfirst six pairs and the top-left 6x6 corner:");
    let labels: Vec<String> = fm.pairs.iter().take(6).map(|p| pair_label(&g, &m, p)).collect();
    println!("{}", labels.join("  "));
    for row in fm.entries.iter().take(6) {
        let cells: Vec<String> = row.iter().take(6).map(|e| format!("{:+.4}", e.re)).collect();
        println!("{}", cells.join(" "));
    }
    Ok(())
}
