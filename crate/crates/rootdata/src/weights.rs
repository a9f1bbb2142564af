use std::collections::{HashMap, HashSet, VecDeque};

use exactmath::rational::int;
use exactmath::Rational;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::RootError;
use crate::system::{RootSystem, Weight};
use crate::types::Family;

/// All weights of an irreducible highest-weight module with multiplicities.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub highest: Weight,
    pub entries: Vec<(Weight, u64)>,
}

impl WeightSystem {
    pub fn total_multiplicity(&self) -> u128 {
        self.entries.iter().map(|(_, m)| *m as u128).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.iter().any(|(x, _)| x == w)
    }
}

/// Integer-scaled copy of the weight form, for exact arithmetic in `i128`.
struct ScaledForm {
    form: Vec<Vec<i128>>,
}

impl ScaledForm {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let den = exactmath::rational::common_denominator((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| &rs.weight_form[(i, j)]));
        let d = Rational::from_integer(den.clone());
        let form = (0..n)
            .map(|i| (0..n).map(|j| (&rs.weight_form[(i, j)] * &d).to_integer().to_i128().unwrap()).collect())
            .collect();
        Self { form }
    }

    fn inner(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc += xi as i128 * self.form[i][j] * yj as i128;
            }
        }
        acc
    }
}

fn dominant_rep(rs: &RootSystem, mut v: Vec<i64>) -> Vec<i64> {
    loop {
        let Some(i) = v.iter().position(|&c| c < 0) else { return v };
        let c = v[i];
        for j in 0..v.len() {
            v[j] -= c * rs.cartan[i][j];
        }
    }
}

fn orbit(rs: &RootSystem, mu: &[i64]) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(mu.to_vec());
    queue.push_back(mu.to_vec());
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            let c = v[i];
            let r: Vec<i64> = (0..n).map(|j| v[j] - c * rs.cartan[i][j]).collect();
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        out.push(v);
    }
    out
}

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<Vec<i64>, RootError> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant_integral() {
        return Err(RootError::NotDominantIntegral(lambda.to_string()));
    }
    Ok(lambda.labels().expect("integral"))
}

/// Dominant weights of `Π(λ)` with Freudenthal multiplicities.
fn dominant_multiplicities(rs: &RootSystem, lam: &[i64]) -> Vec<(Vec<i64>, u64)> {
    let n = rs.rank();
    let pos: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| rs.root_labels(r)).collect();

    // dominant weights below λ with their depth (height of λ − μ)
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    depth.insert(lam.to_vec(), 0);
    queue.push_back(lam.to_vec());
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for (r, lab) in rs.positive_roots.iter().zip(&pos) {
            let nu: Vec<i64> = (0..n).map(|j| mu[j] - lab[j]).collect();
            if nu.iter().all(|&c| c >= 0) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + r.iter().sum::<i64>());
                queue.push_back(nu);
            }
        }
    }
    let mut dom: Vec<(Vec<i64>, i64)> = depth.into_iter().collect();
    dom.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));

    let form = ScaledForm::new(rs);
    let rho = vec![1i64; n];
    let lr: Vec<i64> = (0..n).map(|j| lam[j] + rho[j]).collect();
    let top = form.inner(&lr, &lr);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, _) in &dom {
        if mu.as_slice() == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mr: Vec<i64> = (0..n).map(|j| mu[j] + rho[j]).collect();
        let den = top - form.inner(&mr, &mr);
        let mut num: i128 = 0;
        for lab in &pos {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = (0..n).map(|j| mu[j] + k * lab[j]).collect();
                let Some(&m) = mult.get(&dominant_rep(rs, nu.clone())) else { break };
                num += 2 * m as i128 * form.inner(&nu, lab);
                k += 1;
            }
        }
        assert!(den > 0 && num.is_multiple_of(&den), "Freudenthal quotient not integral");
        mult.insert(mu.clone(), (num / den) as u64);
    }
    dom.into_iter().map(|(mu, _)| (mu.clone(), mult[&mu])).filter(|(_, m)| *m > 0).collect()
}

/// `Π(λ)` with multiplicities, closed under the Weyl group.
pub fn weight_system(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem, RootError> {
    let lam = require_dominant(rs, lambda)?;
    let mut entries = Vec::new();
    for (mu, m) in dominant_multiplicities(rs, &lam) {
        for w in orbit(rs, &mu) {
            entries.push((Weight::from_labels(rs.ty, &w)?, m));
        }
    }
    Ok(WeightSystem { highest: lambda.clone(), entries })
}

/// `w_0(λ)`, the lowest weight of `Π(λ)`.
pub fn lowest_weight(rs: &RootSystem, lambda: &Weight) -> Result<Weight, RootError> {
    let mut v = require_dominant(rs, lambda)?;
    let n = rs.rank();
    while let Some(i) = v.iter().position(|&c| c > 0) {
        let c = v[i];
        for j in 0..n {
            v[j] -= c * rs.cartan[i][j];
        }
    }
    Weight::from_labels(rs.ty, &v)
}

/// `min{(Λ|μ) : μ ∈ Π(λ)}` by enumeration of the Weyl orbits of the dominant weights.
///
/// For type A with `Λ` dominant the result is cross-checked against `(Λ|w_0 λ)`.
pub fn lin_min_over_weights(rs: &RootSystem, big: &Weight, lambda: &Weight) -> Result<Rational, RootError> {
    rs.check_weight(big)?;
    let lam = require_dominant(rs, lambda)?;
    if big.is_zero() || lam.iter().all(|&c| c == 0) {
        return Ok(Rational::zero());
    }
    let mut best: Option<Rational> = None;
    for (mu, _) in dominant_multiplicities(rs, &lam) {
        for w in orbit(rs, &mu) {
            let v = pair_labels(rs, big, &w);
            if best.as_ref().map_or(true, |b| v < *b) {
                best = Some(v);
            }
        }
    }
    let best = best.expect("nonempty weight system");
    if rs.ty.family() == Family::A && big.coords.iter().all(|c| !c.is_negative()) {
        let w0 = lowest_weight(rs, lambda)?;
        assert_eq!(best, rs.inner(big, &w0), "brute-force minimum disagrees with (Λ|w0 λ)");
    }
    Ok(best)
}

fn pair_labels(rs: &RootSystem, big: &Weight, w: &[i64]) -> Rational {
    let n = rs.rank();
    let mut acc = Rational::zero();
    for i in 0..n {
        if big.coords[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if w[j] != 0 {
                acc += &big.coords[i] * &rs.weight_form[(i, j)] * int(w[j]);
            }
        }
    }
    acc
}
