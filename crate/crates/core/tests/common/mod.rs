//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the library's own algorithms beyond constructing values.

#![allow(dead_code)]

use cutcomplex::{Graph, SimplicialComplex, VertexSet};
use rand::Rng;

pub fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

/// Every graph on `n` vertices, one per subset of the `C(n, 2)` pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Connectivity of the subgraph induced on `subset`, by union-find.
pub fn connected_union_find(adj: &[Vec<bool>], subset: &[usize]) -> bool {
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut parent: Vec<usize> = (0..adj.len()).collect();
    for &u in subset {
        for &v in subset {
            if adj[u][v] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
    }
    let roots: std::collections::HashSet<usize> = subset.iter().map(|&u| find(&mut parent, u)).collect();
    roots.len() <= 1
}

/// Whether some induced subgraph on at least four vertices is a cycle.
pub fn has_induced_long_cycle(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    (0u64..1 << n).any(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        vs.len() >= 4
            && vs.iter().all(|&u| vs.iter().filter(|&&v| adj[u][v]).count() == 2)
            && connected_union_find(adj, &vs)
    })
}

/// All `size`-subsets of `0..n` as sorted vectors.
pub fn subsets_of(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

/// Facets of `Δ_k(G)` by brute force, as sorted vertex lists.
pub fn cut_complex_oracle(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    let mut out: Vec<Vec<usize>> = subsets_of(n, k)
        .into_iter()
        .filter(|c| !connected_union_find(&adj, c))
        .map(|c| (0..n).filter(|v| !c.contains(v)).collect())
        .collect();
    out.sort();
    out
}

pub fn facet_lists(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = c.facets().iter().map(|f| f.to_vec()).collect();
    out.sort();
    out
}

/// Maximal elements of a family of sets.
pub fn maximal(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> =
        family.iter().copied().filter(|&a| !family.iter().any(|&b| b != a && a.is_subset(b))).collect();
    out.sort();
    out.dedup();
    out
}

/// Facets of the Alexander dual straight from the definition: the faces
/// are the sets whose complement is not a face.
pub fn alexander_dual_oracle(c: &SimplicialComplex) -> Vec<VertexSet> {
    let n = c.ground_size();
    let is_face = |s: VertexSet| c.facets().iter().any(|&f| s.is_subset(f));
    let faces: Vec<VertexSet> =
        (0u64..1 << n).map(VertexSet::from_bits).filter(|&s| !is_face(s.complement(n))).collect();
    maximal(&faces)
}

/// Shelling condition straight from the definition: for each `j > 0` the
/// intersection of `⟨F_j⟩` with the earlier facets is pure of codimension one.
pub fn is_shelling_oracle(order: &[VertexSet]) -> bool {
    (1..order.len()).all(|j| {
        let meets: Vec<VertexSet> = order[..j].iter().map(|&f| f.intersection(order[j])).collect();
        maximal(&meets).iter().all(|m| m.len() + 1 == order[j].len())
    })
}

/// First `(i, j)` with `i < j` violating the shelling condition.
pub fn first_violation_oracle(order: &[VertexSet]) -> Option<(usize, usize)> {
    (1..order.len()).find_map(|j| {
        let fj = order[j];
        let ridges: Vec<VertexSet> =
            order[..j].iter().map(|&f| f.intersection(fj)).filter(|m| m.len() + 1 == fj.len()).collect();
        (0..j)
            .find(|&i| {
                let meet = order[i].intersection(fj);
                !ridges.iter().any(|&r| meet.is_subset(r))
            })
            .map(|i| (i, j))
    })
}

/// Whether every codimension-one face of `order[j]` lies in an earlier facet.
pub fn is_spanning_oracle(order: &[VertexSet], j: usize) -> bool {
    let f = order[j];
    j > 0 && f.iter().all(|v| order[..j].iter().any(|&g| f.remove(v).is_subset(g)))
}

/// Rank over GF(p) by dense Gaussian elimination on `i64` residues.
pub fn dense_rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pr);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced Betti numbers over GF(p) from dense boundary matrices built here.
pub fn betti_oracle(c: &SimplicialComplex, p: i64) -> Vec<usize> {
    let n = c.ground_size();
    let is_face = |s: VertexSet| c.facets().iter().any(|&f| s.is_subset(f));
    let top = c.facets().iter().map(|f| f.len()).max().unwrap();
    let by_size: Vec<Vec<VertexSet>> = (0..=top)
        .map(|k| (0u64..1 << n).map(VertexSet::from_bits).filter(|s| s.len() == k && is_face(*s)).collect())
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 || k >= by_size.len() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[k - 1]
            .iter()
            .map(|&lo| {
                by_size[k]
                    .iter()
                    .map(|&hi| {
                        if !lo.is_subset(hi) {
                            return 0;
                        }
                        let gone = hi.difference(lo).min().unwrap();
                        let pos = hi.iter().position(|v| v == gone).unwrap();
                        if pos % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        dense_rank_mod(&rows, p)
    };
    (0..by_size.len()).map(|k| by_size[k].len() - rank(k) - rank(k + 1)).collect()
}
