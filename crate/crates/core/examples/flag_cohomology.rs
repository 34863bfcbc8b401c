//! Cohomology of the partial flag varieties FL(I) of C^N and its free decomposition
//! over the elementary Schubert cells.

use cartan_sheaf::flag_schubert::{betti, elementary, g_space, inversions, partitions, verify_free_decomposition, FlagType};

fn main() -> cartan_sheaf::Result<()> {
    let n = 4;
    for ty in FlagType::all(n)? {
        println!("I = {{{}}}  blocks {:?}", ty.indices(), ty.block_sizes());
        println!("  H(FL(I)) = {}", betti(ty));
        println!("  G(I)     = {}", g_space(ty));
        let report = verify_free_decomposition(ty);
        println!("  free decomposition over {} cells: {}", report.cell_count, if report.passed { "ok" } else { "FAILED" });
    }

    let full = FlagType::new(n, cartan_sheaf::Subset::full(n - 1))?;
    let elem: Vec<_> = partitions(full).into_iter().filter(elementary).collect();
    println!("\nelementary cells of the full flag variety of C^{n}:");
    for a in elem {
        println!("  {a}  inversions {}", inversions(&a));
    }
    Ok(())
}
