//! Checks the Carlitz identities for a few groups.

use grpn::group::GroupParams;
use grpn::verify::{verify_carlitz, CarlitzVariant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (r, p, n) in [(2, 2, 2), (3, 3, 2), (4, 2, 2), (6, 3, 2)] {
        let params = GroupParams::new(r, p, n)?;
        for variant in [CarlitzVariant::H, CarlitzVariant::G] {
            let report = verify_carlitz(&params, 8, variant)?;
            println!("({r},{p},{n}) {variant:?}: pass={} compared={}", report.pass, report.compared);
        }
    }
    Ok(())
}
