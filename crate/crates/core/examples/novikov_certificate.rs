//! The modules H_I(d) for the orbit through λe_1, the non-vanishing certificate for
//! the maps H_I(0) -> H_I(d), their jump spectra and the graded Hom with torus and
//! projective factors.

use cartan_sheaf::rational::{frac, int};
use cartan_sheaf::root_system::DegreeWeights;
use cartan_sheaf::spectral_pipeline::{certificate, jump_spectrum, pair_hom, NovikovWindows, OrbitParams, Side};
use cartan_sheaf::Subset;

fn main() -> cartan_sheaf::Result<()> {
    let n = 3;
    let params = OrbitParams::new(n, frac(3, 2))?;
    let w = DegreeWeights::standard(n);
    let windows = NovikovWindows::default();
    let grid = [int(0), frac(1, 2), int(1), int(2)];
    let report = certificate(&params, &grid, &windows, &w)?;
    for r in &report.records {
        let witness = r.tau.witness.as_ref().map(|t| t.lattice.to_string()).unwrap_or_default();
        println!("I={{{}}} d={}: H = {}  witness {witness}", r.h.flag, r.h.d, r.h.graded);
    }
    println!("verdict: {}", report.verdict.status);

    let jumps = jump_spectrum(&params, Subset::singleton(1), (-40, 40), int(4), &w)?;
    println!("\njumps of H_{{1}} below 4: {}", jumps.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(", "));

    let diag = pair_hom(&params, Side::Diagonal, Side::Diagonal, int(0), &windows, 0, &w)?;
    let torus = pair_hom(&params, Side::CliffordTorus, Side::Diagonal, int(0), &windows, 0, &w)?;
    let rp = pair_hom(&params, Side::RealProjective, Side::Diagonal, int(0), &windows, 2, &w)?;
    println!("Hom at d=0: diagonal {} terms, torus {} terms, projective (mod 2) {} terms", diag.total(), torus.total(), rp.total());
    Ok(())
}
