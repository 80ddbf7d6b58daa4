//! Small graph helpers on adjacency lists indexed by `usize`.

/// Articulation points of an undirected graph, iterative Tarjan.
pub fn articulation_points(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut time = 0;
    // (vertex, parent, next edge index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let w = adj[v][i];
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut[parent] = true;
                    }
                }
            }
        }
        cut[root] = root_children > 1;
    }
    cut
}

/// Number of connected components.
pub fn component_count(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn brute(adj: &[Vec<usize>]) -> Vec<bool> {
        let base = component_count(adj);
        (0..adj.len())
            .map(|v| {
                let rest: Vec<usize> = (0..adj.len()).filter(|&u| u != v).collect();
                let index = |u: usize| rest.iter().position(|&r| r == u);
                let sub: Vec<Vec<usize>> = rest
                    .iter()
                    .map(|&u| adj[u].iter().filter_map(|&w| index(w)).collect())
                    .collect();
                // removing an isolated vertex drops a component without cutting
                let isolated = adj[v].is_empty();
                component_count(&sub) > base - usize::from(isolated)
            })
            .collect()
    }

    #[test]
    fn path_and_cycle() {
        let path = undirected(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(articulation_points(&path), vec![false, true, true, false]);
        let cycle = undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(articulation_points(&cycle), vec![false; 4]);
    }

    #[test]
    fn matches_removal_on_all_small_graphs() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let adj = undirected(5, &edges);
            assert_eq!(articulation_points(&adj), brute(&adj), "{edges:?}");
        }
    }
}
