use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite acyclic quiver. Vertices are referred to by index internally and by
/// label at the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path `src -> ... -> tgt`, arrows listed in traversal order. The empty
/// arrow list is the trivial path at `src == tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            src: v,
            tgt: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Path) -> Path {
        assert_eq!(self.tgt, other.src, "paths not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path {
            src: self.src,
            tgt: other.tgt,
            arrows,
        }
    }

    /// Sort key: shorter paths first, then lexicographic in arrow order.
    pub fn order_key(&self) -> (usize, &[usize]) {
        (self.arrows.len(), &self.arrows)
    }
}

impl Quiver {
    /// Build a quiver from vertex labels and `(id, source label, target label)`
    /// triples, rejecting duplicates, dangling endpoints and directed cycles.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex `{v}`")));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (id, s, t) in arrows {
            let id = id.as_ref().to_string();
            if id.is_empty() || id.contains('.') {
                return Err(Error::Invalid(format!("bad arrow id `{id}`")));
            }
            if seen.insert(id.clone(), ()).is_some() {
                return Err(Error::Invalid(format!("duplicate arrow `{id}`")));
            }
            let src = *index
                .get(s.as_ref())
                .ok_or_else(|| Error::Invalid(format!("unknown vertex `{}`", s.as_ref())))?;
            let tgt = *index
                .get(t.as_ref())
                .ok_or_else(|| Error::Invalid(format!("unknown vertex `{}`", t.as_ref())))?;
            out.push(Arrow { id, src, tgt });
        }
        let q = Quiver { vertices, arrows: out };
        q.topological_order()?;
        Ok(q)
    }

    /// The Kronecker quiver `1 ⇉ 2` with arrows `a`, `b`.
    pub fn kronecker() -> Self {
        Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).expect("valid quiver")
    }

    /// The linearly oriented `A_n` quiver `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(&vs, &arrows).expect("valid quiver")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later vertex.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.tgt] += 1;
        }
        let mut ready: BTreeMap<usize, ()> = (0..n).filter(|&v| indeg[v] == 0).map(|v| (v, ())).collect();
        let mut order = Vec::with_capacity(n);
        while let Some((&v, _)) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.tgt] -= 1;
                if indeg[a.tgt] == 0 {
                    ready.insert(a.tgt, ());
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|v| !order.contains(v)).unwrap();
            return Err(Error::CyclicQuiver(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    /// The opposite quiver: same vertices and arrow ids, arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    src: a.tgt,
                    tgt: a.src,
                })
                .collect(),
        }
    }

    /// All paths from `i` to `j`, in path order; errors when exceeding `cap`.
    pub fn paths(&self, i: usize, j: usize, cap: usize) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        let mut stack = vec![Path::trivial(i)];
        while let Some(p) = stack.pop() {
            if p.tgt == j {
                out.push(p.clone());
                if out.len() > cap {
                    return Err(Error::InfiniteDimensional(cap));
                }
            }
            for (ai, a) in self.arrows.iter().enumerate() {
                if a.src == p.tgt {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    stack.push(Path {
                        src: p.src,
                        tgt: a.tgt,
                        arrows,
                    });
                    if stack.len() > cap {
                        return Err(Error::InfiniteDimensional(cap));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        Ok(out)
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertices[p.src])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Parse `e<vertex>` or dot-separated arrow ids.
    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('e') {
            if self.arrow_index(s).is_none() {
                if let Some(v) = self.vertex_index(rest) {
                    return Ok(Path::trivial(v));
                }
            }
        }
        let mut arrows = Vec::new();
        for id in s.split('.') {
            let a = self
                .arrow_index(id)
                .ok_or_else(|| Error::Parse(format!("unknown arrow `{id}` in path `{s}`")))?;
            arrows.push(a);
        }
        for w in arrows.windows(2) {
            if self.arrows[w[0]].tgt != self.arrows[w[1]].src {
                return Err(Error::Parse(format!("path `{s}` is not composable")));
            }
        }
        Ok(Path {
            src: self.arrows[arrows[0]].src,
            tgt: self.arrows[*arrows.last().unwrap()].tgt,
            arrows,
        })
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(vertices: {}", self.vertices.join(","))?;
        for a in &self.arrows {
            write!(f, "; {}: {}->{}", a.id, self.vertices[a.src], self.vertices[a.tgt])?;
        }
        write!(f, ")")
    }
}
