//! Pattern strings, graph6 and edge lists.
use ramsey_books::formats::{read_graph_auto, write_edge_list, write_graph6};
use ramsey_books::PatternSpec;

fn main() -> ramsey_books::Result<()> {
    for spec in ["book:2,3", "copies:2,(book:2,1)", "cycle:5"] {
        let g = PatternSpec::parse(spec)?.build()?;
        let g6 = write_graph6(&g);
        assert_eq!(read_graph_auto(&g6)?, g);
        println!("{spec:<22} graph6 {g6:<10} edges {:?}", g.edge_list());
    }
    let g = read_graph_auto("4 3\n0 1\n1 2\n2 3\n")?;
    print!("{}", write_edge_list(&g));
    Ok(())
}
