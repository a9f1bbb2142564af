use exactmath::rational::{int, rat, to_i64};
use exactmath::{Rational, RationalMatrix};

use crate::classify::classify_cartan;
use crate::error::RootError;
use crate::system::build_root_system;
use crate::types::{Family, SemisimpleTypeWithLevels, SimpleType};

/// Affine (or twisted affine) Dynkin diagram with Kac marks.
#[derive(Clone, Debug)]
pub struct AffineDiagram {
    pub ty: SimpleType,
    pub twist: u32,
    pub gram: RationalMatrix,
    pub marks: Vec<i64>,
}

impl AffineDiagram {
    pub fn nodes(&self) -> usize {
        self.marks.len()
    }

    /// Order of the automorphism with Kac coordinates `s`.
    pub fn order(&self, s: &[i64]) -> i64 {
        self.twist as i64 * s.iter().zip(&self.marks).map(|(a, b)| a * b).sum::<i64>()
    }
}

/// Node 0 is the affine node. Only `D4^(3)` is available among twisted diagrams.
pub fn affine_diagram(ty: SimpleType, twist: u32) -> Result<AffineDiagram, RootError> {
    match twist {
        1 => {
            let rs = build_root_system(ty);
            let n = ty.rank();
            let mut g = RationalMatrix::zeros(n + 1, n + 1);
            for i in 0..n {
                for j in 0..n {
                    g[(i + 1, j + 1)] = rs.gram[(i, j)].clone();
                }
                let mut e = vec![0; n];
                e[i] = 1;
                let v = -rs.root_inner(&rs.theta, &e);
                g[(0, i + 1)] = v.clone();
                g[(i + 1, 0)] = v;
            }
            g[(0, 0)] = rs.root_inner(&rs.theta, &rs.theta);
            let mut marks = vec![1];
            marks.extend(rs.theta.iter().copied());
            Ok(AffineDiagram { ty, twist, gram: g, marks })
        }
        3 if ty.family() == Family::D && ty.rank() == 4 => {
            let mut g = RationalMatrix::zeros(3, 3);
            g[(0, 0)] = rat(2, 3);
            g[(1, 1)] = rat(2, 3);
            g[(2, 2)] = int(2);
            g[(0, 1)] = rat(-1, 3);
            g[(1, 0)] = rat(-1, 3);
            g[(1, 2)] = int(-1);
            g[(2, 1)] = int(-1);
            Ok(AffineDiagram { ty, twist, gram: g, marks: vec![1, 2, 1] })
        }
        _ => Err(RootError::UnsupportedTwist(format!("{ty} with twist order {twist}"))),
    }
}

/// Fixed-point subalgebra of the automorphism with Kac coordinates `s`.
///
/// Levels are relative to ambient level 1: a component whose longest node has
/// norm `ν` in the ambient form gets level `2/ν`.
pub fn kac_fixed_subalgebra(ty: SimpleType, s: &[i64], twist: u32) -> Result<SemisimpleTypeWithLevels, RootError> {
    let d = affine_diagram(ty, twist)?;
    if s.len() != d.nodes() {
        return Err(RootError::InvalidKac(format!("expected {} coordinates, got {}", d.nodes(), s.len())));
    }
    if s.iter().any(|&x| x < 0) {
        return Err(RootError::InvalidKac("negative coordinate".into()));
    }
    if s.iter().all(|&x| x == 0) {
        return Err(RootError::InvalidKac("all coordinates zero".into()));
    }
    let zero: Vec<usize> = (0..s.len()).filter(|&i| s[i] == 0).collect();
    let cartan: Vec<Vec<i64>> = zero
        .iter()
        .map(|&i| {
            zero.iter()
                .map(|&j| to_i64(&(int(2) * &d.gram[(i, j)] / &d.gram[(j, j)])).expect("integral Cartan entry"))
                .collect()
        })
        .collect();
    let mut ideals = Vec::new();
    for (t, nodes) in classify_cartan(&cartan)? {
        let longest: Rational = nodes.iter().map(|&k| d.gram[(zero[k], zero[k])].clone()).max().expect("nonempty");
        ideals.push((t, int(2) / longest));
    }
    let abelian = s.iter().filter(|&&x| x != 0).count() - 1;
    Ok(SemisimpleTypeWithLevels::new(ideals, abelian))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_trivalent_node_gives_a2_cubed() {
        let e6 = SimpleType::new(Family::E, 6).unwrap();
        let d = affine_diagram(e6, 1).unwrap();
        assert_eq!(d.marks, vec![1, 1, 2, 2, 3, 2, 1]);
        let fixed = kac_fixed_subalgebra(e6, &[0, 0, 0, 0, 1, 0, 0], 1).unwrap();
        assert_eq!(fixed.to_string(), "A2,1 A2,1 A2,1");
        assert_eq!(d.order(&[0, 0, 0, 0, 1, 0, 0]), 3);
    }

    #[test]
    fn d4_triality_twist() {
        let d4 = SimpleType::new(Family::D, 4).unwrap();
        assert_eq!(kac_fixed_subalgebra(d4, &[1, 0, 0], 3).unwrap().to_string(), "G2,1");
        assert_eq!(kac_fixed_subalgebra(d4, &[0, 0, 1], 3).unwrap().to_string(), "A2,3");
    }

    #[test]
    fn errors() {
        let a2 = SimpleType::new(Family::A, 2).unwrap();
        assert!(kac_fixed_subalgebra(a2, &[0, 0, 0], 1).is_err());
        assert!(kac_fixed_subalgebra(a2, &[1, 0], 1).is_err());
        assert!(matches!(kac_fixed_subalgebra(a2, &[1, 0, 0], 3), Err(RootError::UnsupportedTwist(_))));
    }
}
