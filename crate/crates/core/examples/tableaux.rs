//! Standard r-tableaux, shape orbits, and the semistandard bijection.

use grpn::group::GroupParams;
use grpn::partition::RPartition;
use grpn::tabx::{all_orbits, enumerate_osyt_n, enumerate_rssyt, enumerate_syt, phi_lambda};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = RPartition::from_slices(&[&[2], &[1]]);
    for t in enumerate_syt(&shape)? {
        let st = t.stats();
        println!("{t}  Des {:?} f {:?} fmaj {}", st.des, st.f_vector, st.fmaj);
    }

    let params = GroupParams::new(4, 2, 2)?;
    for orb in all_orbits(&params) {
        let count = enumerate_osyt_n(&orb, &params)?.len();
        println!("orbit {} b={} u={} : {count} orbital tableaux", orb.representative(), orb.b, orb.u);
    }

    // θ-vectors split into a standard tableau and a gap vector
    for t in enumerate_rssyt(&RPartition::from_slices(&[&[1], &[1]]), 5) {
        let (std, delta) = phi_lambda(&t)?;
        println!("theta {:?} -> {std} delta {delta:?}", t.theta());
    }
    Ok(())
}
