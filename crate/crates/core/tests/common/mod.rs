//! Test-side oracles and generators shared by the integration suites.
//! Nothing here calls into the library except to build graphs.

#![allow(dead_code)]

use interval_total::constructions::{
    color_complete_bipartite, color_complete_even_min, color_complete_max, color_complete_spectrum,
    color_cycle_max, color_cycle_min, color_regular_bipartite, color_tree, color_wheel,
    wheel_spectrum,
};
use interval_total::{Certificate, Color, FamilySpec, Graph, RegularBipartite, TotalColoring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a random tree plus extra edges with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u][v] = true;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !present[a][b] && rng.gen_bool(p) {
                present[a][b] = true;
            }
        }
    }
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    let edges: Vec<_> = edges.filter(|&(a, b)| present[a][b]).collect();
    Graph::new(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// One representative per isomorphism class, by brute-force canonical form
/// over all vertex permutations. Fine up to about 6 vertices.
pub fn up_to_isomorphism(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                .collect();
            edges.sort();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        });
        if seen.insert((n, best.unwrap_or_default())) {
            out.push(g);
        }
    }
    out
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Largest degree sum over the vertex sets of shortest paths, by listing
/// every simple path. A path is shortest when no simple path between the
/// same endpoints is shorter. `None` if the graph is disconnected.
pub fn shortest_path_degree_sum_by_enumeration(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    // (shortest length, best sum at that length) for each ordered pair
    let mut best: Vec<Vec<Option<(usize, usize)>>> = vec![vec![None; n]; n];
    fn walk(
        g: &Graph,
        deg: &[usize],
        start: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        sum: usize,
        best: &mut [Vec<Option<(usize, usize)>>],
    ) {
        let last = *path.last().unwrap();
        let len = path.len() - 1;
        let slot = &mut best[start][last];
        *slot = match *slot {
            None => Some((len, sum)),
            Some((l, _)) if len < l => Some((len, sum)),
            Some((l, s)) if len == l => Some((l, s.max(sum))),
            other => other,
        };
        for &(w, _) in g.neighbors(last) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                walk(g, deg, start, path, on, sum + deg[w], best);
                path.pop();
                on[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        walk(g, &deg, s, &mut vec![s], &mut on, deg[s], &mut best);
    }
    let mut out = 0;
    for row in &best {
        for cell in row {
            out = out.max((*cell)?.1);
        }
    }
    Some(out)
}

/// Every interval total `t`-coloring check by plain enumeration over all
/// `t^(|V|+|E|)` assignments, with a hand-rolled check. Only for tiny graphs.
pub fn exists_by_enumeration(g: &Graph, t: Color) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    let total = n + m;
    let mut colors = vec![1 as Color; total];
    loop {
        let c = TotalColoring {
            t,
            vertex_colors: colors[..n].to_vec(),
            edge_colors: colors[n..].to_vec(),
        };
        if naive_check(g, &c) {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == total {
                return false;
            }
            colors[i] += 1;
            if colors[i] <= t {
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

fn naive_check(g: &Graph, c: &TotalColoring) -> bool {
    let n = g.vertex_count();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let x = c.edge_colors[e];
        if c.vertex_colors[a] == c.vertex_colors[b] || x == c.vertex_colors[a] || x == c.vertex_colors[b] {
            return false;
        }
    }
    for v in 0..n {
        let mut pal = vec![c.vertex_colors[v]];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a == v || b == v {
                pal.push(c.edge_colors[e]);
            }
        }
        pal.sort();
        for w in pal.windows(2) {
            if w[1] != w[0] + 1 {
                return false;
            }
        }
    }
    (1..=c.t).all(|x| c.vertex_colors.contains(&x) || c.edge_colors.contains(&x))
}

/// Every certificate the constructions claim over the sweep ranges.
pub fn construction_sweep() -> Vec<(String, Certificate)> {
    let mut out = Vec::new();
    let mut push = |label: String, cert: Certificate| out.push((label, cert));
    for n in 3..=50 {
        push(format!("cycle_min n={n}"), color_cycle_min(n).unwrap());
        push(format!("cycle_max n={n}"), color_cycle_max(n).unwrap());
    }
    for n in 1..=20 {
        push(format!("complete_max n={n}"), color_complete_max(n).unwrap());
        if n % 2 == 0 {
            push(format!("complete_even_min n={n}"), color_complete_even_min(n).unwrap());
        }
    }
    for n in 1..=12usize {
        let nn = n as Color;
        let lo = if n % 2 == 1 { nn } else { 3 * nn / 2 };
        for t in lo..=2 * nn - 1 {
            push(format!("complete_spectrum n={n} t={t}"), color_complete_spectrum(n, t).unwrap());
        }
    }
    for m in 1..=10 {
        for n in 1..=10 {
            push(format!("complete_bipartite {m},{n}"), color_complete_bipartite(m, n).unwrap());
        }
    }
    for n in 4..=30 {
        for t in wheel_spectrum(n) {
            push(format!("wheel n={n} t={t}"), color_wheel(n, t).unwrap());
        }
    }
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 20);
        let g = FamilySpec::TreeRandom { n, seed }.generate().unwrap();
        push(format!("tree n={n} seed={seed}"), color_tree(&g).unwrap());
    }
    for named in regular_bipartite_set() {
        let g = FamilySpec::RegularBipartiteNamed(named).generate().unwrap();
        push(format!("regular_bipartite {named:?}"), color_regular_bipartite(&g).unwrap());
    }
    out
}

pub fn regular_bipartite_set() -> Vec<RegularBipartite> {
    let mut set: Vec<RegularBipartite> = (1..=8)
        .map(|r| RegularBipartite::BalancedComplete { r })
        .collect();
    set.push(RegularBipartite::Cube);
    set.extend((4..=20).step_by(2).map(|n| RegularBipartite::EvenCycle { n }));
    set
}

/// A random coloring near `cert`: a few entries nudged or swapped. Valid
/// and invalid results both occur.
pub fn perturb(cert: &TotalColoring, rng: &mut ChaCha8Rng) -> TotalColoring {
    let mut c = cert.clone();
    let total = c.vertex_colors.len() + c.edge_colors.len();
    if total == 0 {
        return c;
    }
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..total);
        let x = rng.gen_range(0..=c.t + 1);
        if i < c.vertex_colors.len() {
            c.vertex_colors[i] = x;
        } else {
            c.edge_colors[i - c.vertex_colors.len()] = x;
        }
    }
    if rng.gen_bool(0.2) {
        c.t += rng.gen_range(-1..=1);
    }
    c
}

/// Colors drawn uniformly from `0..=t+1`.
pub fn random_coloring(g: &Graph, t: Color, rng: &mut ChaCha8Rng) -> TotalColoring {
    TotalColoring {
        t,
        vertex_colors: (0..g.vertex_count()).map(|_| rng.gen_range(0..=t + 1)).collect(),
        edge_colors: (0..g.edge_count()).map(|_| rng.gen_range(0..=t + 1)).collect(),
    }
}
