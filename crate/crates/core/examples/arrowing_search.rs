//! Exact small Ramsey numbers by exhaustive colouring search.
use ramsey_books::arrowing::{ramsey_number, RamseyValue};
use ramsey_books::PatternSpec;

fn main() -> ramsey_books::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for (red, blue) in [("star:3", "book:2,1"), ("star:4", "book:2,2"), ("path:4", "book:2,1"), ("complete:3", "complete:3")] {
        let g = PatternSpec::parse(red)?.build()?;
        let h = PatternSpec::parse(blue)?.build()?;
        match ramsey_number(&g, &h, 10, 1_000_000_000, workers)? {
            RamseyValue::Exact { value, .. } => println!("r({red}, {blue}) = {value}"),
            RamseyValue::LowerBound { at_least, .. } => println!("r({red}, {blue}) >= {at_least}"),
        }
    }
    Ok(())
}
