//! Evaluates every closed-form bound for one parameter set.
use ramsey_books::bounds::{evaluate, BoundParams, TheoremId};

fn main() -> ramsey_books::Result<()> {
    let params = BoundParams::parse_pairs("n=40 m=41 k=1 t=2 chi=3 s=2 c=49".split_whitespace())?;
    for id in TheoremId::ALL {
        match evaluate(id, &params) {
            Ok(report) => println!("{:<20} {:>8}  hypotheses ok: {}", id.name(), report.floor, report.all_hypotheses_satisfied()),
            Err(e) => println!("{:<20} {e}", id.name()),
        }
    }
    Ok(())
}
