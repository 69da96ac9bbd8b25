//! Prints the character table of G(r,n) as CSV.
//!
//! Usage: `cargo run --example character_table -- 3 2`

use grpn::chars::CharacterTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: u32 = args.next().map_or(Ok(2), |s| s.parse())?;
    let n: u32 = args.next().map_or(Ok(2), |s| s.parse())?;
    let table = CharacterTable::compute(r, n)?;
    print!("{}", table.to_csv());
    for s in &table.shapes {
        println!("dim {s} = {}", table.dim(s).unwrap());
    }
    Ok(())
}
