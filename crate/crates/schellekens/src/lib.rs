//! Candidate weight-one Lie algebras for a holomorphic VOA of central charge 24,
//! and the order-3 automorphism filter used to pin down an orbifold's `V_1`.
//!
//! Every simple ideal `X_{n,k}` of such a `V_1` satisfies `h∨/k = (dim V_1 − 24)/24`.

use std::collections::HashMap;
use std::fmt;

use exactmath::rational::int;
use exactmath::Rational;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rootdata::{affine_diagram, kac_fixed_subalgebra, Family, SemisimpleTypeWithLevels, SimpleType};

/// A semisimple `V_1` candidate with integer levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateAlgebra {
    pub value: SemisimpleTypeWithLevels,
    pub total_dim: usize,
}

impl CandidateAlgebra {
    pub fn new(value: SemisimpleTypeWithLevels) -> Self {
        let total_dim = value.dim();
        Self { value, total_dim }
    }

    /// Whether every ideal has `h∨/k = r`.
    pub fn satisfies_ratio(&self, r: &Rational) -> bool {
        self.value.ideals().iter().all(|(t, k)| &(int(t.dual_coxeter_formula() as i64) / k) == r)
    }
}

impl fmt::Display for CandidateAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Representatives up to isomorphism: `B_n` from rank 3, `D_n` from rank 4.
fn simple_types_up_to(dim_cap: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let mut push_family = |f: Family, start: usize| {
        let mut n = start;
        while let Ok(t) = SimpleType::new(f, n) {
            if t.dim() > dim_cap {
                break;
            }
            out.push(t);
            n += 1;
        }
    };
    push_family(Family::A, 1);
    push_family(Family::B, 3);
    push_family(Family::C, 2);
    push_family(Family::D, 4);
    for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        let t = SimpleType::new(f, n).expect("exceptional type");
        if t.dim() <= dim_cap {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// All `(X_n, k)` with `h∨(X_n) = r·k` for a positive integer `k` and `dim X_n ≤ dim_cap`.
pub fn simple_ideals_with_ratio(r: &Rational, dim_cap: usize) -> Vec<(SimpleType, u32)> {
    assert!(r > &Rational::zero(), "ratio must be positive");
    simple_types_up_to(dim_cap)
        .into_iter()
        .filter_map(|t| {
            let k = int(t.dual_coxeter_formula() as i64) / r;
            if k.is_integer() && k > Rational::zero() {
                Some((t, k.to_integer().to_u32().expect("small level")))
            } else {
                None
            }
        })
        .collect()
}

/// Every multiset of ratio-`r` ideals of total dimension `total_dim`, in a fixed order.
pub fn enumerate_candidates(total_dim: usize, r: &Rational) -> Vec<CandidateAlgebra> {
    let parts = simple_ideals_with_ratio(r, total_dim);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn walk(parts: &[(SimpleType, u32)], start: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<CandidateAlgebra>) {
        if left == 0 {
            let ideals = chosen.iter().map(|&i| (parts[i].0, int(parts[i].1 as i64))).collect();
            out.push(CandidateAlgebra::new(SemisimpleTypeWithLevels::new(ideals, 0)));
            return;
        }
        for i in start..parts.len() {
            let d = parts[i].0.dim();
            if d <= left {
                chosen.push(i);
                walk(parts, i, left - d, chosen, out);
                chosen.pop();
            }
        }
    }
    walk(&parts, 0, total_dim, &mut chosen, &mut out);
    out.sort_by(|a, b| sort_key(&a.value).cmp(&sort_key(&b.value)));
    out.dedup();
    out
}

fn sort_key(x: &SemisimpleTypeWithLevels) -> (Vec<(SimpleType, Rational)>, usize) {
    (x.ideals().to_vec(), x.abelian_rank())
}

/// Identifies `D3 ≅ A3`, `B2 ≅ C2` and `C1 ≅ A1`.
fn canonical(x: &SemisimpleTypeWithLevels) -> SemisimpleTypeWithLevels {
    let ideals = x
        .ideals()
        .iter()
        .map(|(t, k)| {
            let t = match (t.family(), t.rank()) {
                (Family::D, 3) => SimpleType::new(Family::A, 3).expect("A3"),
                (Family::B, 2) => SimpleType::new(Family::C, 2).expect("C2"),
                _ => *t,
            };
            (t, k.clone())
        })
        .collect();
    SemisimpleTypeWithLevels::new(ideals, x.abelian_rank())
}

/// Nonnegative `s` with `Σ marks_i s_i = total` and `gcd(s) = 1`.
fn kac_coordinates(marks: &[i64], total: i64) -> Vec<Vec<i64>> {
    fn rec(marks: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == marks.len() {
            if left == 0 && cur.iter().fold(0, |g, x| g.gcd(x)) == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left / marks[i] {
            cur.push(v);
            rec(marks, i + 1, left - v * marks[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(marks, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Fixed-point types, with levels, of the order-3 automorphisms of `X_{n,k}` and of the identity.
pub fn order3_fixed_options(t: SimpleType, k: &Rational) -> Vec<SemisimpleTypeWithLevels> {
    let mut out = vec![SemisimpleTypeWithLevels::new(vec![(t, k.clone())], 0)];
    let inner = affine_diagram(t, 1).expect("untwisted diagram exists");
    for s in kac_coordinates(&inner.marks, 3) {
        let fixed = kac_fixed_subalgebra(t, &s, 1).expect("valid Kac coordinates");
        out.push(canonical(&fixed.scale_levels(k)));
    }
    if t.family() == Family::D && t.rank() == 4 {
        let outer = affine_diagram(t, 3).expect("triality diagram");
        for s in kac_coordinates(&outer.marks, 1) {
            let fixed = kac_fixed_subalgebra(t, &s, 3).expect("valid Kac coordinates");
            out.push(fixed.scale_levels(k));
        }
    }
    out.sort_by_key(sort_key);
    out.dedup();
    out
}

/// How one orbit of ideals contributes to the fixed-point algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    /// Three isomorphic ideals permuted cyclically; the diagonal has triple level.
    Cycle { ideals: [usize; 3], fixed: SemisimpleTypeWithLevels },
    /// An ideal mapped to itself.
    Single { ideal: usize, fixed: SemisimpleTypeWithLevels },
}

impl Assignment {
    pub fn fixed(&self) -> &SemisimpleTypeWithLevels {
        match self {
            Assignment::Cycle { fixed, .. } | Assignment::Single { fixed, .. } => fixed,
        }
    }
}

/// Multiset of ideals plus abelian rank still to be produced.
#[derive(Clone)]
struct Remaining {
    ideals: Vec<(SimpleType, Rational)>,
    abelian: usize,
}

impl Remaining {
    fn take(&self, x: &SemisimpleTypeWithLevels) -> Option<Remaining> {
        if x.abelian_rank() > self.abelian {
            return None;
        }
        let mut ideals = self.ideals.clone();
        for ideal in x.ideals() {
            let pos = ideals.iter().position(|y| y == ideal)?;
            ideals.swap_remove(pos);
        }
        Some(Remaining { ideals, abelian: self.abelian - x.abelian_rank() })
    }
}

/// Searches for an order-3 automorphism of `c` whose fixed points have type `target`.
///
/// The automorphism permutes simple ideals in 3-cycles and fixed points; the witness lists
/// each orbit (ideal indices refer to `c.value.ideals()`).
pub fn admits_order3_with_fixed(c: &CandidateAlgebra, target: &SemisimpleTypeWithLevels) -> Option<Vec<Assignment>> {
    let ideals = c.value.ideals();
    let target = canonical(target);
    let mut cache: HashMap<(SimpleType, Rational), Vec<SemisimpleTypeWithLevels>> = HashMap::new();
    for (t, k) in ideals {
        cache.entry((*t, k.clone())).or_insert_with(|| order3_fixed_options(*t, k));
    }
    let start = Remaining { ideals: target.ideals().to_vec(), abelian: target.abelian_rank() };
    if c.value.abelian_rank() > 0 {
        // a torus part would need its own fixed-rank bookkeeping
        return None;
    }
    let mut used = vec![false; ideals.len()];
    let mut witness = Vec::new();
    if search(ideals, &cache, &mut used, start, &mut witness) {
        Some(witness)
    } else {
        None
    }
}

fn search(
    ideals: &[(SimpleType, Rational)],
    cache: &HashMap<(SimpleType, Rational), Vec<SemisimpleTypeWithLevels>>,
    used: &mut [bool],
    left: Remaining,
    witness: &mut Vec<Assignment>,
) -> bool {
    let Some(i) = used.iter().position(|u| !u) else {
        return left.ideals.is_empty() && left.abelian == 0;
    };
    let (t, k) = &ideals[i];
    used[i] = true;

    let partners: Vec<usize> = (i + 1..ideals.len()).filter(|&j| !used[j] && ideals[j] == ideals[i]).take(2).collect();
    if let [j, l] = partners[..] {
        let fixed = SemisimpleTypeWithLevels::new(vec![(*t, k * int(3))], 0);
        if let Some(next) = left.take(&fixed) {
            used[j] = true;
            used[l] = true;
            witness.push(Assignment::Cycle { ideals: [i, j, l], fixed });
            if search(ideals, cache, used, next, witness) {
                return true;
            }
            witness.pop();
            used[j] = false;
            used[l] = false;
        }
    }

    for option in &cache[&(*t, k.clone())] {
        if let Some(next) = left.take(option) {
            witness.push(Assignment::Single { ideal: i, fixed: option.clone() });
            if search(ideals, cache, used, next, witness) {
                return true;
            }
            witness.pop();
        }
    }
    used[i] = false;
    false
}
