//! Compares two independent descriptions of the stalks of S: the complex assembled
//! from translated copies of Y, and the sum of flag cohomologies over dominating
//! lattice points.

use cartan_sheaf::root_system::{CenterClass, DegreeWeights};
use cartan_sheaf::rational::int;
use cartan_sheaf::spectral_pipeline::{covering_window, crosscheck_stalks, sample_points, OrbitParams};

fn main() -> cartan_sheaf::Result<()> {
    for n in 2..=4 {
        let params = OrbitParams::new(n, int(1))?;
        let samples = sample_points(n, 40, 7, 2, 3);
        let window = covering_window(n, &samples)?;
        for z in CenterClass::all(n) {
            let r = crosscheck_stalks(&params, z, &samples, &window, &DegreeWeights::standard(n))?;
            println!(
                "N={n} center {z}: compared {}, excluded {}, mismatches {}",
                r.compared,
                r.excluded.len(),
                r.mismatches.len()
            );
        }
    }
    Ok(())
}
