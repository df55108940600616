//! Builds the extremal colouring for `r(G, tB_k) >= 2n + t - 2` and checks it.
use ramsey_books::coloring::{burr_coloring, verify_extremal};
use ramsey_books::{Budget, PatternSpec};

fn main() -> ramsey_books::Result<()> {
    let (n, t, k) = (6, 2, 2);
    let (c, parts) = burr_coloring(n, t, k)?;
    println!("order {} with part sizes {:?}", c.order(), parts.sizes);
    for spec in ["star:6", "path:6"] {
        let g = PatternSpec::parse(spec)?.build()?;
        let check = verify_extremal(&c, &g, k, t, &mut Budget::default())?;
        println!("{spec}: avoids red G and blue {t}B_{k}: {}", check.is_extremal());
    }
    Ok(())
}
