//! One line per acceptance criterion. Runs the full tier unless
//! `RAMSEY_BOOKS_TIER=fast` is set.

use ramsey_books::suite::{run_criterion, Tier, CRITERIA};

#[test]
fn acceptance() {
    let tier = match std::env::var("RAMSEY_BOOKS_TIER").as_deref() {
        Ok("fast") => Tier::Fast,
        _ => Tier::Full,
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let only: Option<u8> = std::env::var("RAMSEY_BOOKS_CRITERION").ok().and_then(|s| s.parse().ok());
    let mut failed = Vec::new();
    for &(id, ..) in &CRITERIA {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let report = run_criterion(id, tier, workers);
        println!("{}", report.line());
        if !report.pass {
            failed.push(report.id);
        }
    }
    println!("acceptance: {} failed {:?}", failed.len(), failed);
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
