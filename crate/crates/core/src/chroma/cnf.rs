use std::fmt;

use crate::graphs::UGraph;

/// A CNF formula in DIMACS form; literals are non-zero, negative for
/// negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub variables: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.variables, self.clauses.len())?;
        for clause in &self.clauses {
            for lit in clause {
                write!(f, "{lit} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// Direct encoding of `k`-colourability: variable `v * k + i` (1-based
/// `i`) says vertex `v` takes colour `i`. One at-least-one clause per
/// vertex and one conflict clause per edge and colour; a model decodes to a
/// colouring by taking each vertex's least true colour.
pub fn export_cnf(g: &UGraph, k: u32) -> Cnf {
    let k = k as i64;
    let var = |v: usize, i: i64| v as i64 * k + i;
    let mut clauses: Vec<Vec<i64>> = (0..g.vertex_count())
        .map(|v| (1..=k).map(|i| var(v, i)).collect())
        .collect();
    for (u, v) in g.edges() {
        for i in 1..=k {
            clauses.push(vec![-var(u, i), -var(v, i)]);
        }
    }
    Cnf { variables: g.vertex_count() * k as usize, clauses }
}

#[cfg(test)]
mod tests {
    use super::super::search::tests::{brute_force_colourable, complete, cycle};
    use super::*;
    use crate::graphs::{neighbourhood_graph, WindowMode};

    /// Plain DPLL with unit propagation.
    fn dpll(clauses: &[Vec<i64>], assignment: &mut Vec<i8>) -> bool {
        loop {
            let mut unit = None;
            for clause in clauses {
                let mut free = None;
                let mut open = 0;
                let mut satisfied = false;
                for &lit in clause {
                    match assignment[lit.unsigned_abs() as usize] * lit.signum() as i8 {
                        1 => satisfied = true,
                        0 => {
                            open += 1;
                            free = Some(lit);
                        }
                        _ => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => return false,
                    1 => unit = free,
                    _ => {}
                }
            }
            let Some(lit) = unit else { break };
            assignment[lit.unsigned_abs() as usize] = lit.signum() as i8;
        }
        let Some(var) = (1..assignment.len()).find(|&v| assignment[v] == 0) else {
            return true;
        };
        for value in [1, -1] {
            let mut next = assignment.clone();
            next[var] = value;
            if dpll(clauses, &mut next) {
                *assignment = next;
                return true;
            }
        }
        false
    }

    fn satisfiable(cnf: &Cnf) -> bool {
        dpll(&cnf.clauses, &mut vec![0; cnf.variables + 1])
    }

    #[test]
    fn triangle_counts() {
        let cnf = export_cnf(&complete(3), 2);
        assert_eq!(cnf.variables, 6);
        assert_eq!(cnf.clauses.iter().filter(|c| c.len() == 2 && c[0] > 0).count(), 3);
        assert_eq!(cnf.clauses.iter().filter(|c| c[0] < 0).count(), 6);
        assert!(!satisfiable(&cnf));
        assert!(cnf.to_string().starts_with("p cnf 6 9\n1 2 0\n"));
    }

    #[test]
    fn n_seven_one_counts() {
        let g = neighbourhood_graph(7, 1, WindowMode::AllDistinct).unwrap();
        let cnf = export_cnf(&g, 3);
        assert_eq!(cnf.variables, 630);
        assert_eq!(cnf.clauses.len(), 210 + 3150);
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in [complete(4), cycle(5), cycle(6), neighbourhood_graph(3, 1, WindowMode::AllDistinct).unwrap()] {
            for k in 1..=4 {
                assert_eq!(satisfiable(&export_cnf(&g, k)), brute_force_colourable(&g, k));
            }
        }
    }
}
