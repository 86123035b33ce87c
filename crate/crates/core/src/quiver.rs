//! Finite acyclic quivers. Vertices are numbered 1..=n in the interchange
//! format (matching the usual A_n labelling); code below indexes 0-based.

use crate::error::{Error, QuiverIssue, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

/// A directed path; `arrows` lists arrow indices in traversal order and is
/// empty for the trivial path at a vertex. Endpoints are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub from: usize,
    pub to: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Quiver> {
        let q = Quiver { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    /// The A_n quiver with arrows a1..a(n-1); `orientation` has one char per
    /// arrow: '>' for k -> k+1, '<' for k+1 -> k.
    pub fn an(n: usize, orientation: &str) -> Result<Quiver> {
        if n == 0 {
            return Err(Error::InvalidInput("A_n needs n >= 1".into()));
        }
        let chars: Vec<char> = orientation.chars().collect();
        if chars.len() != n - 1 || chars.iter().any(|&c| c != '>' && c != '<') {
            return Err(Error::InvalidInput(format!(
                "orientation must be {} characters of '>' or '<', got {orientation:?}",
                n - 1
            )));
        }
        let arrows = chars
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let (from, to) = if c == '>' { (k + 1, k + 2) } else { (k + 2, k + 1) };
                Arrow {
                    name: format!("a{}", k + 1),
                    from,
                    to,
                }
            })
            .collect();
        Ok(Quiver { vertices: n, arrows })
    }

    /// All 2^(n-1) orientations of A_n, in lexicographic orientation order
    /// ('<' before '>').
    pub fn an_orientations(n: usize) -> Vec<Quiver> {
        assert!(n >= 1);
        let m = n - 1;
        (0..(1usize << m))
            .map(|bits| {
                let s: String = (0..m)
                    .map(|k| if bits >> (m - 1 - k) & 1 == 1 { '>' } else { '<' })
                    .collect();
                Quiver::an(n, &s).unwrap()
            })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for a in &self.arrows {
            if !seen.insert(a.name.clone()) {
                issues.push(QuiverIssue::DuplicateArrowName { name: a.name.clone() });
            }
            for v in [a.from, a.to] {
                if v == 0 || v > self.vertices {
                    issues.push(QuiverIssue::DanglingEndpoint {
                        name: a.name.clone(),
                        vertex: v,
                        vertices: self.vertices,
                    });
                }
            }
        }
        if issues.is_empty() && self.topo_order().is_none() {
            issues.push(QuiverIssue::Cyclic);
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Quiver(issues))
        }
    }

    #[inline]
    pub fn src(&self, arrow: usize) -> usize {
        self.arrows[arrow].from - 1
    }

    #[inline]
    pub fn tgt(&self, arrow: usize) -> usize {
        self.arrows[arrow].to - 1
    }

    /// Kahn's algorithm, smallest vertex first; `None` on a cycle.
    pub fn topo_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices;
        let mut indeg = vec![0usize; n];
        for a in 0..self.arrows.len() {
            indeg[self.tgt(a)] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for a in 0..self.arrows.len() {
                if self.src(a) == v {
                    let t = self.tgt(a);
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Every path, trivial ones included, in a canonical order: by start
    /// vertex, then depth-first with arrows visited in index order.
    pub fn all_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for s in 0..self.vertices {
            let mut stack = vec![Path {
                from: s,
                to: s,
                arrows: vec![],
            }];
            while let Some(p) = stack.pop() {
                // Push extensions in reverse so lower arrow indices pop first.
                let exts: Vec<usize> =
                    (0..self.arrows.len()).filter(|&a| self.src(a) == p.to).collect();
                for &a in exts.iter().rev() {
                    let mut q = p.clone();
                    q.to = self.tgt(a);
                    q.arrows.push(a);
                    stack.push(q);
                }
                out.push(p);
            }
        }
        out
    }

    /// Path-count table: entry (i, j) is the number of paths i -> j, the
    /// trivial path included. Computed by dynamic programming over a
    /// topological order (independent of `all_paths`).
    pub fn path_table(&self) -> Vec<Vec<u64>> {
        let n = self.vertices;
        let order = self.topo_order().expect("validated quiver");
        let mut counts = vec![vec![0u64; n]; n];
        for i in 0..n {
            counts[i][i] = 1;
            for &v in &order {
                if counts[i][v] == 0 {
                    continue;
                }
                for a in 0..self.arrows.len() {
                    if self.src(a) == v {
                        counts[i][self.tgt(a)] += counts[i][v];
                    }
                }
            }
        }
        counts
    }

    /// If the underlying graph is the line 1 - 2 - ... - n with one arrow per
    /// edge, return the orientation string; the indecomposable-interval
    /// oracle applies exactly to these quivers.
    pub fn as_an_orientation(&self) -> Option<String> {
        let n = self.vertices;
        if n == 0 || self.arrows.len() != n - 1 {
            return None;
        }
        let mut orientation = vec![None::<char>; n.saturating_sub(1)];
        for a in &self.arrows {
            let (lo, hi) = (a.from.min(a.to), a.from.max(a.to));
            if hi != lo + 1 || hi > n {
                return None;
            }
            let slot = &mut orientation[lo - 1];
            if slot.is_some() {
                return None;
            }
            *slot = Some(if a.from == lo { '>' } else { '<' });
        }
        orientation.into_iter().collect()
    }

    /// Monotone orientations of the A_n line ("all '>'" or "all '<'"); for
    /// other quivers, `None`.
    pub fn is_monotone_an(&self) -> Option<bool> {
        self.as_an_orientation().map(|o| {
            o.chars().all(|c| c == '>') || o.chars().all(|c| c == '<')
        })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Short human-readable description, e.g. "A3(><)" or "quiver(4v,3a)".
    pub fn describe(&self) -> String {
        match self.as_an_orientation() {
            Some(o) => format!("A{}({})", self.vertices, o),
            None => format!("quiver({}v,{}a)", self.vertices, self.arrows.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn an_shapes() {
        let q = Quiver::an(3, "><").unwrap();
        assert_eq!(q.vertices, 3);
        assert_eq!(q.arrows[0], Arrow { name: "a1".into(), from: 1, to: 2 });
        assert_eq!(q.arrows[1], Arrow { name: "a2".into(), from: 3, to: 2 });
        assert_eq!(q.as_an_orientation().as_deref(), Some("><"));
        assert_eq!(q.is_monotone_an(), Some(false));
        assert_eq!(Quiver::an(1, "").unwrap().as_an_orientation().as_deref(), Some(""));
        assert!(Quiver::an(3, ">").is_err());
        assert!(Quiver::an(3, ">x").is_err());
    }

    #[test]
    fn orientation_census_size() {
        assert_eq!(Quiver::an_orientations(1).len(), 1);
        assert_eq!(Quiver::an_orientations(4).len(), 8);
        let all: Vec<String> = Quiver::an_orientations(3)
            .iter()
            .map(|q| q.as_an_orientation().unwrap())
            .collect();
        assert_eq!(all, vec!["<<", "<>", "><", ">>"]);
    }

    #[test]
    fn validation_issues() {
        let cyc = Quiver {
            vertices: 2,
            arrows: vec![
                Arrow { name: "a".into(), from: 1, to: 2 },
                Arrow { name: "b".into(), from: 2, to: 1 },
            ],
        };
        assert!(matches!(cyc.validate(), Err(Error::Quiver(v)) if v == vec![QuiverIssue::Cyclic]));

        let dangling = Quiver {
            vertices: 1,
            arrows: vec![Arrow { name: "a".into(), from: 1, to: 3 }],
        };
        assert!(matches!(dangling.validate(), Err(Error::Quiver(v))
            if matches!(v[0], QuiverIssue::DanglingEndpoint { vertex: 3, .. })));

        let dup = Quiver {
            vertices: 2,
            arrows: vec![
                Arrow { name: "a".into(), from: 1, to: 2 },
                Arrow { name: "a".into(), from: 1, to: 2 },
            ],
        };
        assert!(matches!(dup.validate(), Err(Error::Quiver(v))
            if matches!(v[0], QuiverIssue::DuplicateArrowName { .. })));
    }

    #[test]
    fn path_table_a2() {
        let q = Quiver::an(2, ">").unwrap();
        assert_eq!(q.path_table(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn paths_match_table() {
        // Includes a multi-arrow (Kronecker-style) quiver: two parallel
        // arrows give two paths.
        let quivers = vec![
            Quiver::an(4, "><>").unwrap(),
            Quiver {
                vertices: 2,
                arrows: vec![
                    Arrow { name: "a".into(), from: 1, to: 2 },
                    Arrow { name: "b".into(), from: 1, to: 2 },
                ],
            },
            Quiver {
                vertices: 3,
                arrows: vec![
                    Arrow { name: "a".into(), from: 1, to: 2 },
                    Arrow { name: "b".into(), from: 2, to: 3 },
                    Arrow { name: "c".into(), from: 1, to: 3 },
                ],
            },
        ];
        for q in quivers {
            q.validate().unwrap();
            let table = q.path_table();
            let paths = q.all_paths();
            for i in 0..q.vertices {
                for j in 0..q.vertices {
                    let enumerated =
                        paths.iter().filter(|p| p.from == i && p.to == j).count() as u64;
                    assert_eq!(table[i][j], enumerated, "({i},{j}) in {}", q.describe());
                }
            }
        }
        let commuting_square = Quiver {
            vertices: 3,
            arrows: vec![
                Arrow { name: "a".into(), from: 1, to: 2 },
                Arrow { name: "b".into(), from: 2, to: 3 },
                Arrow { name: "c".into(), from: 1, to: 3 },
            ],
        };
        assert_eq!(commuting_square.path_table()[0][2], 2);
        assert_eq!(commuting_square.as_an_orientation(), None);
    }

    #[test]
    fn kronecker_is_not_a_line() {
        let q = Quiver {
            vertices: 2,
            arrows: vec![
                Arrow { name: "a".into(), from: 1, to: 2 },
                Arrow { name: "b".into(), from: 1, to: 2 },
            ],
        };
        assert_eq!(q.as_an_orientation(), None);
    }
}
