//! The standard complex Y on a lattice window: generators, the square-zero check,
//! stalks at rational points and a JSON round trip.

use cartan_sheaf::rational::parse_list;
use cartan_sheaf::root_system::{CartanVector, CenterClass, DegreeWeights, LatticeBox};
use cartan_sheaf::sheaf_complex::{build_y, cohomology_dims, stalk_complex, SheafComplex};

fn main() -> cartan_sheaf::Result<()> {
    let n = 3;
    let window = LatticeBox::radius(n, 3)?;
    let y = build_y(n, &window, &DegreeWeights::standard(n))?;
    println!("Y on [-3, 3]^2: {} generators, {} differential entries", y.generators().len(), y.differential().len());
    y.check_square_zero()?;

    for coords in ["-1/2,-1/2", "-3/2,-1/3", "-5/2,-7/4"] {
        let p = CartanVector::new(n, parse_list(coords)?)?;
        for z in CenterClass::all(n) {
            let h = cohomology_dims(&stalk_complex(&y, z, &p)?)?;
            if !h.is_zero() {
                println!("  stalk at {p}, center {z}: {h}");
            }
        }
    }

    let text = y.to_json();
    let back = SheafComplex::from_json(&text)?;
    println!("JSON round trip: {} bytes, equal = {}", text.len(), back == y);
    Ok(())
}
