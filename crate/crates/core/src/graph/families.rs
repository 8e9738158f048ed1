use super::Graph;

impl Graph {
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("star is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|x| (0..b).map(move |y| (x, a + y)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// The `d`-dimensional hypercube; vertex `v` is the bit string of `v`.
    pub fn hypercube(d: u32) -> Graph {
        let n = 1usize << d;
        let edges = (0..n)
            .flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i))))
            .filter(|&(a, b)| a < b);
        Graph::from_edges(n, edges).expect("hypercube is simple")
    }

    /// The Petersen graph as the Kneser graph K(5,2): 2-subsets of a 5-set,
    /// adjacent when disjoint.
    pub fn petersen() -> Graph {
        let pairs: Vec<u8> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1u8 << b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i] & pairs[j] == 0 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(pairs.len(), edges).expect("Petersen graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self.edges().into_iter().chain(
            other
                .edges()
                .into_iter()
                .map(|(a, b)| (a + shift, b + shift)),
        );
        Graph::from_edges(shift + other.order(), edges).expect("union of simple graphs is simple")
    }
}
