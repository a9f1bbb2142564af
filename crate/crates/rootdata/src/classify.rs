use crate::error::RootError;
use crate::types::{Family, SimpleType};

/// Splits a Cartan matrix into connected components and names each one.
///
/// Each component comes with its node indices, in the input's numbering.
pub fn classify_cartan(c: &[Vec<i64>]) -> Result<Vec<(SimpleType, Vec<usize>)>, RootError> {
    let n = c.len();
    let adj = |i: usize, j: usize| i != j && c[i][j] != 0;
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if adj(i, j) && comp[j] == usize::MAX {
                    comp[j] = start;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        out.push((classify_connected(c, &nodes)?, nodes));
    }
    Ok(out)
}

fn classify_connected(c: &[Vec<i64>], nodes: &[usize]) -> Result<SimpleType, RootError> {
    let n = nodes.len();
    let err = || RootError::UnknownDiagram(format!("{:?}", nodes.iter().map(|&i| nodes.iter().map(|&j| c[i][j]).collect::<Vec<_>>()).collect::<Vec<_>>()));
    for &i in nodes {
        if c[i][i] != 2 {
            return Err(err());
        }
    }
    let bond = |a: usize, b: usize| c[nodes[a]][nodes[b]] * c[nodes[b]][nodes[a]];
    let deg = |a: usize| (0..n).filter(|&b| b != a && bond(a, b) != 0).count();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            match bond(a, b) {
                0 => {}
                1..=3 => edges.push((a, b, bond(a, b))),
                _ => return Err(err()),
            }
        }
    }
    if edges.len() != n - 1 {
        return Err(err());
    }
    let st = |f, r| SimpleType::new(f, r).map_err(|_| err());
    if n == 1 {
        return st(Family::A, 1);
    }
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    if multi.len() > 1 || (0..n).any(|a| deg(a) > 3) {
        return Err(err());
    }
    if let Some(&&(a, b, m)) = multi.first() {
        if (0..n).any(|x| deg(x) > 2) {
            return Err(err());
        }
        if m == 3 {
            return if n == 2 { st(Family::G, 2) } else { Err(err()) };
        }
        if n == 2 {
            return st(Family::B, 2);
        }
        let (end, inner) = match (deg(a), deg(b)) {
            (1, _) => (a, b),
            (_, 1) => (b, a),
            _ => return if n == 4 { st(Family::F, 4) } else { Err(err()) },
        };
        // C_ij = −2 means α_j is the short root
        let end_short = c[nodes[inner]][nodes[end]] == -2;
        return st(if end_short { Family::B } else { Family::C }, n);
    }
    let branch: Vec<usize> = (0..n).filter(|&a| deg(a) == 3).collect();
    match branch.len() {
        0 => st(Family::A, n),
        1 => {
            let centre = branch[0];
            let mut arms: Vec<usize> = (0..n)
                .filter(|&b| b != centre && bond(centre, b) != 0)
                .map(|b| arm_length(n, &bond, centre, b))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => st(Family::D, n),
                [1, 2, 2] => st(Family::E, 6),
                [1, 2, 3] => st(Family::E, 7),
                [1, 2, 4] => st(Family::E, 8),
                _ => Err(err()),
            }
        }
        _ => Err(err()),
    }
}

fn arm_length(n: usize, bond: &dyn Fn(usize, usize) -> i64, centre: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, first, 1);
    loop {
        let next = (0..n).find(|&x| x != prev && x != cur && bond(cur, x) != 0);
        match next {
            Some(x) => {
                prev = cur;
                cur = x;
                len += 1;
            }
            None => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::build_root_system;

    #[test]
    fn classifies_every_built_system() {
        let types = [
            (Family::A, 1), (Family::A, 5), (Family::B, 2), (Family::B, 4), (Family::C, 3),
            (Family::C, 5), (Family::D, 4), (Family::D, 7), (Family::E, 6), (Family::E, 7),
            (Family::E, 8), (Family::F, 4), (Family::G, 2),
        ];
        for (f, r) in types {
            let t = SimpleType::new(f, r).unwrap();
            let rs = build_root_system(t);
            let got = classify_cartan(&rs.cartan).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].0, t, "classification of {t}");
        }
    }

    #[test]
    fn disconnected_components() {
        let c = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]];
        let got = classify_cartan(&c).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].1, vec![0]);
        assert_eq!(got[1].0.to_string(), "A2");
    }

    #[test]
    fn affine_diagram_is_rejected() {
        let c = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(classify_cartan(&c).is_err());
    }
}
