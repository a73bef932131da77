use crate::error::OracleError;
use crate::graph::Graph;
use crate::limits::Limits;

/// Chromatic number by exhaustive backtracking; refuses graphs above
/// `limits.max_chromatic_vertices`. The empty graph on no vertices needs 0
/// colors.
pub fn exact_chromatic(g: &Graph, limits: &Limits) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > limits.max_chromatic_vertices {
        return Err(OracleError::TooLarge {
            vertices: n,
            cap: limits.max_chromatic_vertices,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = if g.edge_count() > 0 { 2 } else { 1 };
    let mut color = vec![usize::MAX; n];
    Ok((lower..=n)
        .find(|&c| colorable(g, &order, 0, c, 0, &mut color))
        .expect("n colors always suffice"))
}

fn colorable(g: &Graph, order: &[usize], pos: usize, colors: usize, used: usize, color: &mut [usize]) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    // a fresh color is interchangeable with any other fresh one
    for c in 0..colors.min(used + 1) {
        if g.neighbors(v).iter().any(|&w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if colorable(g, order, pos + 1, colors, used.max(c + 1), color) {
            color[v] = usize::MAX;
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::gen_kneser;

    #[test]
    fn small_cases() {
        let l = Limits::default();
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(exact_chromatic(&tri, &l), Ok(3));
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(exact_chromatic(&c6, &l), Ok(2));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(exact_chromatic(&c5, &l), Ok(3));
        assert_eq!(exact_chromatic(&Graph::empty(4), &l), Ok(1));
        assert_eq!(exact_chromatic(&Graph::empty(0), &l), Ok(0));
        assert_eq!(exact_chromatic(&gen_kneser(5, 2, &l).unwrap().graph, &l), Ok(3));
        assert_eq!(
            exact_chromatic(&Graph::empty(17), &l),
            Err(OracleError::TooLarge { vertices: 17, cap: 16 })
        );
    }
}
