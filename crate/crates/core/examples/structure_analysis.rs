//! Suspended paths, end-edge matchings and the trichotomy of a sparse graph.
use ramsey_books::generate::random_sparse_connected;
use ramsey_books::structure::{longest_suspended_path, max_end_edge_matching, trichotomy, TrichotomyParams};

fn main() -> ramsey_books::Result<()> {
    let g = random_sparse_connected(40, 1, 7)?;
    println!("n={} m={} excess={}", g.order(), g.size(), g.excess());
    println!("longest suspended path: {:?}", longest_suspended_path(&g));
    println!("end-edge matching: {:?}", max_end_edge_matching(&g));
    let report = trichotomy(&g, TrichotomyParams::new(6, 3)?)?;
    print!("{}", report.to_key_values());
    Ok(())
}
