use crate::error::{Error, Result};
use crate::grading::IntVectorGroup;
use crate::invsemi::GradedInverseSemigroup;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub name: String,
    pub src: String,
    pub rng: String,
}

/// A finite directed graph. Paths run from source to range, and the range
/// of a path is its terminal vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdge>,
}

/// A path: its start vertex and its edges in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    edges: Vec<usize>,
}

struct Indexed {
    src: Vec<usize>,
    rng: Vec<usize>,
}

impl FiniteGraph {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let g = Self {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(n, s, r)| GraphEdge {
                    name: n.to_string(),
                    src: s.to_string(),
                    rng: r.to_string(),
                })
                .collect(),
        };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<Indexed> {
        let mut seen = HashMap::new();
        for name in self.vertices.iter().chain(self.edges.iter().map(|e| &e.name)) {
            if name.is_empty() || name == "0" || name.contains(['.', '*', ' ']) {
                return Err(Error::input(format!("graph name {name:?} is not allowed")));
            }
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(Error::input(format!("duplicate graph name {name}")));
            }
        }
        let vindex: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let vertex = |v: &str| {
            vindex
                .get(v)
                .copied()
                .ok_or_else(|| Error::input(format!("unknown vertex {v}")))
        };
        let src = self.edges.iter().map(|e| vertex(&e.src)).collect::<Result<Vec<_>>>()?;
        let rng = self.edges.iter().map(|e| vertex(&e.rng)).collect::<Result<Vec<_>>>()?;
        let idx = Indexed { src, rng };
        if let Some(cycle) = self.find_cycle(&idx) {
            let names: Vec<&str> = cycle.iter().map(|&e| self.edges[e].name.as_str()).collect();
            return Err(Error::Unsupported(format!(
                "graph has the cycle {}; only acyclic graphs give finite semigroups",
                names.join(".")
            )));
        }
        Ok(idx)
    }

    fn find_cycle(&self, idx: &Indexed) -> Option<Vec<usize>> {
        // 0 unvisited, 1 on the stack, 2 finished
        let n = self.vertices.len();
        let mut state = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        fn visit(
            v: usize,
            idx: &Indexed,
            state: &mut [u8],
            stack: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            state[v] = 1;
            for e in (0..idx.src.len()).filter(|&e| idx.src[e] == v) {
                let w = idx.rng[e];
                stack.push(e);
                if state[w] == 1 {
                    let start = stack.iter().position(|&f| idx.src[f] == w).expect("on stack");
                    return Some(stack[start..].to_vec());
                }
                if state[w] == 0 {
                    if let Some(c) = visit(w, idx, state, stack) {
                        return Some(c);
                    }
                }
                stack.pop();
            }
            state[v] = 2;
            None
        }
        (0..n).find_map(|v| {
            if state[v] == 0 {
                visit(v, idx, &mut state, &mut stack)
            } else {
                None
            }
        })
    }
}

/// The graph inverse semigroup of an acyclic graph: zero and all `pq*` with
/// `r(p) = r(q)`, graded by `|p| − |q|`.
///
/// Products follow `(pq*)(rs*) = (pt)s*` when `r = qt`, `p(st)*` when
/// `q = rt`, and `0` otherwise.
pub fn graph_inverse_semigroup(
    graph: &FiniteGraph,
    max_elements: usize,
) -> Result<GradedInverseSemigroup<IntVectorGroup>> {
    let idx = graph.check()?;
    let mut paths: Vec<Path> = Vec::new();
    let mut frontier: Vec<Path> = (0..graph.vertices.len())
        .map(|v| Path { start: v, edges: vec![] })
        .collect();
    let end = |p: &Path| p.edges.last().map_or(p.start, |&e| idx.rng[e]);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for e in (0..idx.src.len()).filter(|&e| idx.src[e] == end(p)) {
                let mut q = p.clone();
                q.edges.push(e);
                next.push(q);
            }
        }
        paths.append(&mut frontier);
        frontier = next;
        if paths.len() > max_elements {
            return Err(Error::resource("graph inverse semigroup elements", max_elements));
        }
    }
    let mut elems: Vec<Option<(usize, usize)>> = vec![None];
    for p in 0..paths.len() {
        for q in 0..paths.len() {
            if end(&paths[p]) == end(&paths[q]) {
                elems.push(Some((p, q)));
            }
        }
    }
    if elems.len() > max_elements {
        return Err(Error::resource("graph inverse semigroup elements", max_elements));
    }
    let path_index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let elem_index: HashMap<(usize, usize), usize> = elems
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| (e, i)))
        .collect();
    // `rest` such that `long = short·rest`, when `short` is a prefix of `long`
    let strip = |short: &Path, long: &Path| -> Option<Path> {
        (short.start == long.start && long.edges.starts_with(&short.edges)).then(|| Path {
            start: end(short),
            edges: long.edges[short.edges.len()..].to_vec(),
        })
    };
    let concat = |a: &Path, b: &Path| -> Path {
        let mut edges = a.edges.clone();
        edges.extend(&b.edges);
        Path { start: a.start, edges }
    };
    let product = |x: Option<(usize, usize)>, y: Option<(usize, usize)>| -> usize {
        let (Some((p, q)), Some((r, s))) = (x, y) else { return 0 };
        let (p, q, r, s) = (&paths[p], &paths[q], &paths[r], &paths[s]);
        if let Some(t) = strip(q, r) {
            elem_index[&(path_index[&concat(p, &t)], path_index[s])]
        } else if let Some(t) = strip(r, q) {
            elem_index[&(path_index[p], path_index[&concat(s, &t)])]
        } else {
            0
        }
    };
    let path_name = |p: &Path| -> String {
        if p.edges.is_empty() {
            graph.vertices[p.start].clone()
        } else {
            let names: Vec<&str> = p.edges.iter().map(|&e| graph.edges[e].name.as_str()).collect();
            names.join(".")
        }
    };
    let names = elems
        .iter()
        .map(|e| match e {
            None => "0".to_string(),
            Some((p, q)) => {
                let (p, q) = (&paths[*p], &paths[*q]);
                match (p.edges.is_empty(), q.edges.is_empty()) {
                    (_, true) => path_name(p),
                    (true, false) => format!("{}*", path_name(q)),
                    (false, false) => format!("{} {}*", path_name(p), path_name(q)),
                }
            }
        })
        .collect();
    let mul = elems
        .iter()
        .map(|&x| elems.iter().map(|&y| product(x, y)).collect())
        .collect();
    let inv = elems
        .iter()
        .map(|e| e.map_or(0, |(p, q)| elem_index[&(q, p)]))
        .collect();
    let deg = elems
        .iter()
        .map(|e| e.map(|(p, q)| vec![paths[p].edges.len() as i64 - paths[q].edges.len() as i64]))
        .collect();
    GradedInverseSemigroup::new_unchecked(names, 0, mul, inv, IntVectorGroup::integers(), deg)
}
