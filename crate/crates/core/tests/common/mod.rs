//! Independent reference implementations used by the integration tests. They
//! share no code with the library beyond reading edge lists.

#![allow(dead_code)]

use hyperturan_core::UniformHypergraph;
use nalgebra::DMatrix;

pub fn edges(h: &UniformHypergraph) -> Vec<Vec<usize>> {
    h.edges().map(|e| e.to_vec()).collect()
}

pub fn degrees(h: &UniformHypergraph) -> Vec<usize> {
    let mut d = vec![0; h.n()];
    for e in h.edges() {
        for &v in e {
            d[v] += 1;
        }
    }
    d
}

/// Connected components by union-find, isolated vertices as singletons.
pub fn components(h: &UniformHypergraph) -> Vec<Vec<usize>> {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..h.n()).collect();
    for e in h.edges() {
        for w in e.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..h.n() {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Largest eigenvalue of a dense symmetric matrix.
pub fn dense_lambda_max(m: DMatrix<f64>) -> f64 {
    m.symmetric_eigen().eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

/// Adjacency matrix of a 2-uniform hypergraph.
pub fn graph_matrix(h: &UniformHypergraph) -> DMatrix<f64> {
    assert_eq!(h.r(), 2);
    let mut m = DMatrix::zeros(h.n(), h.n());
    for e in h.edges() {
        m[(e[0], e[1])] = 1.0;
        m[(e[1], e[0])] = 1.0;
    }
    m
}

/// Pair-multiplicity matrix of the 2-shadow.
pub fn shadow_matrix(h: &UniformHypergraph) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(h.n(), h.n());
    for e in h.edges() {
        for &a in e {
            for &b in e {
                if a != b {
                    m[(a, b)] += 1.0;
                }
            }
        }
    }
    m
}

/// Spectral radius of the adjacency tensor, computed componentwise with a
/// sum-normalized power iteration on `A x^{r−1} + x^{[r−1]}`. Returns the
/// Collatz-Wielandt upper estimate, which is never below the true value.
pub fn tensor_rho(h: &UniformHypergraph) -> f64 {
    let r = h.r();
    let es = edges(h);
    let mut best = 0.0f64;
    for comp in components(h) {
        if comp.len() == 1 {
            continue;
        }
        let mut x = vec![0.0; h.n()];
        for &v in &comp {
            x[v] = 1.0 / comp.len() as f64;
        }
        let mut upper = f64::INFINITY;
        for _ in 0..200_000 {
            let mut y: Vec<f64> = x.iter().map(|&xi| xi.powi(r as i32 - 1)).collect();
            for e in &es {
                if !comp.contains(&e[0]) {
                    continue;
                }
                for (i, &v) in e.iter().enumerate() {
                    let prod: f64 = e
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &u)| x[u])
                        .product();
                    y[v] += prod;
                }
            }
            let ratios: Vec<f64> = comp.iter().map(|&v| y[v] / x[v].powi(r as i32 - 1)).collect();
            let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
            upper = upper.min(hi);
            let root: Vec<f64> = y.iter().map(|&yi| yi.powf(1.0 / (r as f64 - 1.0))).collect();
            let s: f64 = comp.iter().map(|&v| root[v]).sum();
            for &v in &comp {
                x[v] = root[v] / s;
            }
            if hi - lo <= 1e-12 * hi {
                break;
            }
        }
        best = best.max(upper - 1.0);
    }
    best
}

/// Every injective map from `0..k` into `0..n`, by callback.
fn injections(k: usize, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                let stop = go(k, n, cur, used, f);
                cur.pop();
                used[v] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    go(k, n, &mut Vec::new(), &mut vec![false; n], f)
}

/// Berge containment by full enumeration: every injective vertex map and
/// every injective choice of covering hyperedges.
pub fn naive_berge(h: &UniformHypergraph, f_n: usize, f_edges: &[(usize, usize)]) -> bool {
    let es = edges(h);
    if f_edges.len() > es.len() || f_n > h.n() {
        return false;
    }
    injections(f_n, h.n(), &mut |phi| {
        let options: Vec<Vec<usize>> = f_edges
            .iter()
            .map(|&(a, b)| {
                (0..es.len())
                    .filter(|&i| es[i].contains(&phi[a]) && es[i].contains(&phi[b]))
                    .collect()
            })
            .collect();
        let mut found = false;
        injections(f_edges.len(), es.len(), &mut |choice| {
            found = choice.iter().zip(&options).all(|(c, opts)| opts.contains(c));
            found
        });
        found
    })
}

/// Isomorphism by trying every vertex permutation.
pub fn naive_isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> bool {
    if a.r() != b.r() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target: std::collections::BTreeSet<Vec<usize>> = b.edges().map(|e| e.to_vec()).collect();
    injections(a.n(), a.n(), &mut |perm| {
        a.edges().all(|e| {
            let mut img: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
            img.sort_unstable();
            target.contains(&img)
        })
    })
}

/// Berge-C_3 in a linear hypergraph: three edges pairwise meeting in three
/// distinct vertices.
pub fn naive_linear_c3(h: &UniformHypergraph) -> bool {
    let es = edges(h);
    let meet = |a: &[usize], b: &[usize]| a.iter().find(|v| b.contains(v)).copied();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            for k in j + 1..es.len() {
                if let (Some(x), Some(y), Some(z)) =
                    (meet(&es[i], &es[j]), meet(&es[j], &es[k]), meet(&es[i], &es[k]))
                {
                    if x != y && y != z && x != z {
                        return true;
                    }
                }
            }
        }
    }
    false
}
