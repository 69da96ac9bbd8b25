//! Multiplicity of each restricted irreducible in each colored-descent
//! representation, next to the orbital tableau count.

use grpn::chars::theorem_main_report;
use grpn::group::GroupParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(3, 3, 2)?;
    let report = theorem_main_report(&params)?;
    for row in report.rows.iter().filter(|row| row.rhs > 0) {
        println!(
            "orbit {:<12} Des {:?} Col {:?}: inner product {} = {}",
            row.orbit.to_string(),
            row.class.des,
            row.class.colors,
            row.lhs,
            row.rhs
        );
    }
    println!("all equal: {}", report.all_equal);
    Ok(())
}
