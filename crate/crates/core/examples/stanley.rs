//! Generating functions of semistandard r-tableaux against standard ones.

use grpn::verify::verify_stanley_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in 1..=3usize {
        for n in 1..=3 {
            let bound = 2 * r as u32 + 1;
            let report = verify_stanley_all(r, n, bound)?;
            println!("r={r} n={n} B={bound}: pass={} shapes={}", report.pass, report.compared);
        }
    }
    Ok(())
}
