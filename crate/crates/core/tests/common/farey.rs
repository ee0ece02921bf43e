//! Finite piece of the Farey graph built from Stern–Brocot mediants, for
//! breadth-first oracles.

use std::collections::{HashMap, VecDeque};

use cablekit::slope::Slope;

pub const DEN: i64 = 12;
pub const SPAN: i64 = 13;

/// Vertices: ∞, the integers in [-SPAN, SPAN] and every mediant with
/// denominator at most DEN between consecutive integers. Edges are
/// recorded as the mediants are created, never via the determinant test.
pub struct Graph {
    pub verts: Vec<Slope>,
    pub index: HashMap<Slope, usize>,
    pub adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn build() -> Graph {
        let mut g = Graph { verts: Vec::new(), index: HashMap::new(), adj: Vec::new() };
        let inf = g.add(Slope::INFINITY);
        for n in -SPAN..=SPAN {
            let v = g.add(Slope::integer(n));
            g.link(inf, v);
        }
        for n in -SPAN..SPAN {
            let (a, b) = ((n, 1), (n + 1, 1));
            let (ia, ib) = (g.index[&Slope::integer(n)], g.index[&Slope::integer(n + 1)]);
            g.link(ia, ib);
            g.split(a, b, ia, ib);
        }
        g
    }

    fn add(&mut self, s: Slope) -> usize {
        if let Some(&i) = self.index.get(&s) {
            return i;
        }
        self.verts.push(s);
        self.adj.push(Vec::new());
        self.index.insert(s, self.verts.len() - 1);
        self.verts.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        if !self.adj[a].contains(&b) {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
    }

    fn split(&mut self, a: (i64, i64), b: (i64, i64), ia: usize, ib: usize) {
        let m = (a.0 + b.0, a.1 + b.1);
        if m.1 > DEN {
            return;
        }
        let im = self.add(Slope::new(m.0, m.1).unwrap());
        self.link(ia, im);
        self.link(im, ib);
        self.split(a, m, ia, im);
        self.split(m, b, im, ib);
    }

    pub fn distances(&self, src: usize, allowed: &dyn Fn(Slope) -> bool) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.verts.len()];
        dist[src] = Some(0);
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v].is_none() && allowed(self.verts[v]) {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }
}

pub fn small_slopes(g: &Graph) -> Vec<Slope> {
    g.verts
        .iter()
        .copied()
        .filter(|s| !s.is_infinite() && s.numerator().abs() <= DEN && s.denominator() <= DEN)
        .collect()
}
