//! Floating-point checks on su(N): the norm map, the triangle inequality, the pairing
//! bound with its equality case, logarithms of small products and eigenvalue
//! intervals of products.

use cartan_sheaf::lie_numerics::{
    aligned_partner, check_pairing_bound, check_triangle, hermitian_eigs, norm_map, run_trials, NumericsOptions,
    SkewHermitian,
};
use cartan_sheaf::root_system::CartanVector;

fn main() -> cartan_sheaf::Result<()> {
    let x = SkewHermitian::from_cartan(&CartanVector::e(3, 1)?);
    let f = hermitian_eigs(&x)?;
    println!("spectrum of 2π e_1 in su(3): {:?} ({} sweeps)", f.spectrum.lambdas(), f.sweeps);

    let y = SkewHermitian::from_cartan(&CartanVector::e(3, 2)?.scaled(cartan_sheaf::rational::frac(-1, 3)));
    println!("triangle for (x, y): {:?}", check_triangle(&x, &y)?);
    let z = aligned_partner(&x, &norm_map(&y)?)?;
    println!("pairing bound on an aligned pair: {:?}", check_pairing_bound(&x, &z)?);

    for n in 2..=6 {
        let r = run_trials(&NumericsOptions { n, trials: 200, seed: 3, inject_fault: false })?;
        let worst = r.lemmas.values().map(|s| s.max_residual).fold(0.0, f64::max);
        println!("N={n}: all passed = {}, worst residual {worst:.2e}", r.passed);
    }
    Ok(())
}
