//! The jump functor at lattice points of the negative chamber returns the cohomology
//! of FL(I_m), shifted by -D(m).

use cartan_sheaf::flag_schubert::{betti, FlagType};
use cartan_sheaf::root_system::{center_class, CartanVector, DegreeWeights};
use cartan_sheaf::sheaf_complex::{delta_jump, jump_epsilon};
use cartan_sheaf::spectral_pipeline::{build_s_mainbfs, covering_window};
use cartan_sheaf::Subset;

fn main() -> cartan_sheaf::Result<()> {
    let n = 3;
    let w = DegreeWeights::standard(n);
    for x in [[0, 0], [-1, 0], [0, -2], [-1, -1], [-2, -1]] {
        let m = CartanVector::from_ints(n, &x)?;
        let i = if x == [0, 0] { Subset::full(n - 1) } else { m.i_set() };
        let corners = i
            .subsets()
            .map(|l| Ok(&m + &CartanVector::f_sum(n, l)?.scaled(jump_epsilon(n))))
            .collect::<cartan_sheaf::Result<Vec<_>>>()?;
        let z = center_class(&m)?;
        let s = build_s_mainbfs(n, Some(z), &covering_window(n, &corners)?, &w)?;
        let got = delta_jump(&s, z, i, &m, jump_epsilon(n))?;
        let want = betti(FlagType::new(n, i)?).shifted(-w.degree(&m)?);
        println!("m = {m}, I = {{{i}}}: {got}  (flag cohomology {want})");
    }
    Ok(())
}
