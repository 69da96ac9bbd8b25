//! Descent statistics of one colored permutation.

use grpn::group::{ColoredPerm, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(8, 2, 6)?;
    let g = ColoredPerm::parse_window("6 2^5 4^4 3^1 1^6 5^3", &params)?;
    let st = g.stats();
    println!("element   {g}");
    println!("in H      {}", g.in_h(&params));
    println!("Des       {:?}", st.des);
    println!("f         {:?}", st.f_vector);
    println!("fmaj      {}", st.fmaj);
    println!("fdes      {}", st.fdes);
    println!("inv       {}", st.inv);
    println!("cycle type {}", g.cycle_type());
    Ok(())
}
