//! Extracts a red copy of a sparse graph or blue disjoint books.
use ramsey_books::coloring::random_coloring;
use ramsey_books::extract::{sparse_or_books, verify_witness};
use ramsey_books::generate::random_sparse_connected;
use ramsey_books::Budget;

fn main() -> ramsey_books::Result<()> {
    let (n, k, t) = (34, 1, 1);
    let g = random_sparse_connected(n, 0, 3)?;
    let c = random_coloring(2 * n + t - 2, 0.45, 4)?;
    let out = sparse_or_books(&c, &g, k, t, &mut Budget::default())?;
    for line in out.trace() {
        println!("  {line}");
    }
    let w = out.witness().expect("guaranteed at this order");
    println!("{} (verified {})", w.description, verify_witness(&c, w));
    Ok(())
}
