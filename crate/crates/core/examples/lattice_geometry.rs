//! Pairings, Weyl chambers, center classes and the degree function on the Cartan
//! lattice of su(N). Coordinates are in units of 2π.

use cartan_sheaf::rational::{frac, int};
use cartan_sheaf::root_system::{center_class, d_degree, dominance_leq, enumerate_lattice, Bound, CartanVector, LatticeBox};

fn main() -> cartan_sheaf::Result<()> {
    let n = 3;
    for k in 1..n {
        let e = CartanVector::e(n, k)?;
        println!("e_{k}: diagonal {:?}, <e_{k}, e_{k}> = {}", e.diagonal_entries().iter().map(|r| r.to_string()).collect::<Vec<_>>(), e.norm_sq());
    }

    let l = CartanVector::from_ints(n, &[-2, -1])?;
    println!("\nl = {l}");
    println!("  chamber {:?}, I_l = {{{}}}", l.chamber(), l.i_set());
    println!("  center class {}, degree D(l) = {}", center_class(&l)?, d_degree(&l)?);
    println!("  l <= 0: {}", dominance_leq(&l, &CartanVector::zero(n))?);

    let p = CartanVector::new(n, vec![frac(-3, 2), frac(-1, 3)])?;
    let bx = LatticeBox::certified_for(&p);
    println!("\nlattice points that can dominate {p} lie in lo={:?} hi={:?} ({} points)", bx.lo(), bx.hi(), bx.count());

    let neg = vec![Bound { lo: Some(int(-2)), hi: Some(int(0)) }; n - 1];
    let pts = enumerate_lattice(cartan_sheaf::CenterClass::identity(n), &neg)?;
    println!("central lattice points in [-2, 0]^2: {}", pts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}
