//! Chromatic number and chromatic surplus by exhaustive enumeration.

use crate::error::{Budget, Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`chromatic_data`].
pub const DEFAULT_CHROMATIC_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticData {
    pub chromatic_number: usize,
    /// Smallest colour class over all proper colourings with exactly
    /// `chromatic_number` colours.
    pub surplus: usize,
}

pub fn chromatic_data(g: &Graph) -> Result<ChromaticData> {
    chromatic_data_with(g, DEFAULT_CHROMATIC_CAP, &mut Budget::default())
}

pub fn chromatic_data_with(g: &Graph, cap: usize, budget: &mut Budget) -> Result<ChromaticData> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    if n == 0 {
        return Ok(ChromaticData {
            chromatic_number: 0,
            surplus: 0,
        });
    }
    let order = coloring_order(g);
    let mut chi = 1;
    loop {
        let mut e = Enumerator::new(g, &order, chi);
        if e.run(budget, true)? {
            break;
        }
        chi += 1;
    }
    let mut e = Enumerator::new(g, &order, chi);
    e.run(budget, false)?;
    Ok(ChromaticData {
        chromatic_number: chi,
        surplus: e.best,
    })
}

/// Highest degree first, then breadth-first through neighbours so that
/// constraints bite early.
fn coloring_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            links[w] += 1;
        }
    }
    order
}

struct Enumerator<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colors: usize,
    assign: Vec<usize>,
    class_size: Vec<usize>,
    best: usize,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, order: &'a [usize], colors: usize) -> Self {
        Self {
            g,
            order,
            colors,
            assign: vec![usize::MAX; g.order()],
            class_size: vec![0; colors],
            best: usize::MAX,
        }
    }

    /// With `stop_at_first`, returns whether any proper colouring exists.
    /// Otherwise enumerates all of them up to colour permutation and records
    /// the minimum smallest-class size in `best`.
    fn run(&mut self, budget: &mut Budget, stop_at_first: bool) -> Result<bool> {
        self.go(0, 0, budget, stop_at_first)
    }

    fn go(&mut self, depth: usize, used: usize, budget: &mut Budget, stop: bool) -> Result<bool> {
        budget.tick()?;
        if depth == self.order.len() {
            // Canonical colourings use colours in order of first appearance,
            // so `used == colors` means every class is non-empty.
            if used == self.colors {
                let smallest = *self.class_size.iter().min().unwrap();
                self.best = self.best.min(smallest);
                return Ok(true);
            }
            return Ok(false);
        }
        // Not enough vertices left to open the remaining colours.
        if self.colors - used > self.order.len() - depth {
            return Ok(false);
        }
        let v = self.order[depth];
        let mut found = false;
        let limit = (used + 1).min(self.colors);
        for c in 0..limit {
            if self.g.neighbors(v).iter().any(|w| self.assign[w] == c) {
                continue;
            }
            self.assign[v] = c;
            self.class_size[c] += 1;
            let r = self.go(depth + 1, used.max(c + 1), budget, stop)?;
            self.class_size[c] -= 1;
            self.assign[v] = usize::MAX;
            if r {
                found = true;
                if stop || self.best == 1 {
                    return Ok(true);
                }
            }
        }
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternSpec;

    #[test]
    fn triangle_and_star() {
        let k3 = Graph::complete(3);
        assert_eq!(
            chromatic_data(&k3).unwrap(),
            ChromaticData { chromatic_number: 3, surplus: 1 }
        );
        let star = PatternSpec::Star(5).build().unwrap();
        assert_eq!(
            chromatic_data(&star).unwrap(),
            ChromaticData { chromatic_number: 2, surplus: 1 }
        );
    }

    #[test]
    fn complete_graphs() {
        for r in 1..=8 {
            let d = chromatic_data(&Graph::complete(r)).unwrap();
            assert_eq!((d.chromatic_number, d.surplus), (r, 1));
        }
    }

    #[test]
    fn even_cycle_has_balanced_classes() {
        let c6 = PatternSpec::Cycle(6).build().unwrap();
        assert_eq!(chromatic_data(&c6).unwrap(), ChromaticData { chromatic_number: 2, surplus: 3 });
        let c5 = PatternSpec::Cycle(5).build().unwrap();
        assert_eq!(chromatic_data(&c5).unwrap(), ChromaticData { chromatic_number: 3, surplus: 1 });
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(15);
        assert_eq!(chromatic_data(&g).unwrap_err(), Error::CapExceeded { order: 15, cap: 14 });
    }
}
