//! Extracts a red star or blue disjoint books from a colouring of `K_{2n+t-2}`.
use ramsey_books::coloring::{burr_with_apex, perturb, random_coloring};
use ramsey_books::extract::{star_or_books, verify_witness};
use ramsey_books::Budget;

fn main() -> ramsey_books::Result<()> {
    let (n, k, t) = (7, 1, 2);
    let inputs = [
        ("random", random_coloring(2 * n + t - 2, 0.5, 1)?),
        ("perturbed extremal", perturb(&burr_with_apex(n, t, k)?, 3, 2)?),
    ];
    for (label, c) in inputs {
        let out = star_or_books(&c, n, k, t, &mut Budget::default())?;
        let w = out.witness().expect("guaranteed at this order");
        println!("{label}: {} (verified {})", w.description, verify_witness(&c, w));
    }
    Ok(())
}
