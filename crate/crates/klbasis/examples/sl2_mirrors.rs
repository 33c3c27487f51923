//! Mirror recursion for SL2 in characteristic p: dimension rows of the
//! bases E^k, stabilization to E^∞, and the digit-product check.

use klbasis::sl2::{digit_product_dim, e_infinity, e_stage, stage_dimension_row};

fn main() -> klbasis::Result<()> {
    for (p, max) in [(2u64, 15u64), (3, 20)] {
        println!("p = {p}:");
        for k in 0..=3 {
            let row: Vec<String> =
                stage_dimension_row(p, k, max).iter().map(|d| d.to_string()).collect();
            println!("  E^{k}: {}", row.join(" "));
        }
    }

    let p = 3;
    let lambda = 13;
    let inf = e_infinity(p, lambda)?;
    println!("\nE^∞ at p={p}, λ={lambda}:");
    for (&w, &c) in inf.coeffs() {
        println!("  weight {w}: {c:+}");
    }
    println!(
        "dimension {} matches digit product {}",
        inf.dimension(),
        digit_product_dim(p, lambda)
    );

    let fixed = e_stage(2, 5, 11);
    assert_eq!(fixed, e_infinity(2, 11)?);
    println!("\np=2, λ=11 stabilizes by stage 5 (dimension {})", fixed.dimension());
    Ok(())
}
