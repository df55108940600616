//! DIMACS export of an arrowing instance, solved by the bundled DPLL and decoded.
use ramsey_books::arrowing::{decode_model, dpll, export_cnf, ArrowInstance};
use ramsey_books::{Budget, PatternSpec};

fn main() -> ramsey_books::Result<()> {
    let red = PatternSpec::parse("star:3")?.build()?;
    let blue = PatternSpec::book(1).build()?;
    for n in [4, 5] {
        let cnf = export_cnf(&ArrowInstance::new(n, red.clone(), blue.clone()))?;
        println!("N={n}: {} variables, {} clauses", cnf.num_vars, cnf.clauses.len());
        match dpll(&cnf, &mut Budget::default())? {
            Some(model) => {
                let lits: Vec<i64> = model.iter().enumerate().map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) }).collect();
                print!("{}", decode_model(n, &lits)?.to_text());
            }
            None => println!("unsatisfiable: K_{n} arrows the pair"),
        }
    }
    Ok(())
}
