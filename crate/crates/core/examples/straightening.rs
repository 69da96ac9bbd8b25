//! Rewrites monomials in the descent basis.

use grpn::coinv::{colored_index_permutation, complementary_partition, straighten, Monomial};
use grpn::group::GroupParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(6, 2, 3)?;
    for exps in [vec![11, 8, 1], vec![5, 8, 7], vec![2, 9, 4], vec![0, 0, 13]] {
        let m = Monomial(exps);
        if m.is_zero_in_quotient(&params) {
            println!("{m} = 0");
            continue;
        }
        let gamma = colored_index_permutation(&m, &params)?;
        let mu = complementary_partition(&m, &params)?;
        println!("{m}: gamma(M) = {gamma}, mu = {:?}", mu.parts());
        println!("    = {}", straighten(&m, &params)?);
    }
    Ok(())
}
