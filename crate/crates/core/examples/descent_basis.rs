//! Lists the descent basis of the coinvariant algebra of G(6,3,2).

use grpn::coinv::{descent_basis_monomial, hilbert_series};
use grpn::group::{enumerate, GroupParams, Which};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(6, 3, 2)?;
    for g in enumerate(&params, Which::Gamma)? {
        let m = descent_basis_monomial(&g, &params)?;
        println!("{:<10} {:<12} fmaj {}", g.to_string(), m.to_string(), g.stats().fmaj);
    }
    println!("Hilbert series: {}", hilbert_series(&params)?);
    Ok(())
}
