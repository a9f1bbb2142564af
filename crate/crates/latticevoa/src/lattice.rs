use std::collections::{BTreeSet, HashSet};

use exactmath::rational::{int, to_f64};
use exactmath::{BigInt, Rational, RationalMatrix};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rootdata::{build_root_system, Family, SimpleType};

use crate::intmat::hnf_rows;
use crate::LatticeError;

/// Discriminant group `Q*/Q` of a simply-laced root lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discriminant {
    Cyclic(u8),
    /// `Z2 × Z2`, digits 1, 2, 3 with `1 + 2 = 3`.
    Klein,
}

impl Discriminant {
    pub fn of(t: SimpleType) -> Result<Self, LatticeError> {
        let n = t.rank();
        Ok(match t.family() {
            Family::A => Discriminant::Cyclic((n + 1) as u8),
            Family::D if n % 2 == 0 => Discriminant::Klein,
            Family::D => Discriminant::Cyclic(4),
            Family::E => Discriminant::Cyclic([3, 2, 1][n - 6]),
            _ => return Err(LatticeError::UnsupportedComponent(t.to_string())),
        })
    }

    pub fn order(self) -> u8 {
        match self {
            Discriminant::Cyclic(m) => m,
            Discriminant::Klein => 4,
        }
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Discriminant::Cyclic(m) => (a + b) % m,
            Discriminant::Klein => a ^ b,
        }
    }

    /// Automorphisms induced by isometries of the root lattice, as digit maps.
    pub fn realizable_automorphisms(self, t: SimpleType) -> Vec<Vec<u8>> {
        match self {
            Discriminant::Klein if t.rank() == 4 => {
                let mut out = Vec::new();
                for p in permutations(&[1, 2, 3]) {
                    let mut m = vec![0u8];
                    m.extend(p);
                    out.push(m);
                }
                out
            }
            Discriminant::Klein => vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]],
            Discriminant::Cyclic(m) if m <= 2 => vec![(0..m).collect()],
            Discriminant::Cyclic(m) => vec![(0..m).collect(), (0..m).map(|d| (m - d) % m).collect()],
        }
    }
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Fundamental weight index (0-based) representing each nonzero digit.
fn digit_weights(t: SimpleType) -> Result<Vec<usize>, LatticeError> {
    let n = t.rank();
    Ok(match (t.family(), n) {
        (Family::A, _) => (0..n).collect(),
        (Family::D, _) => vec![n - 1, 0, n - 2],
        (Family::E, 6) => vec![0, 5],
        (Family::E, 7) => vec![6],
        (Family::E, 8) => vec![],
        _ => return Err(LatticeError::UnsupportedComponent(t.to_string())),
    })
}

/// A glue code: digit vectors over the discriminant groups of the components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueCode {
    pub components: Vec<SimpleType>,
    pub generators: Vec<Vec<u8>>,
}

impl GlueCode {
    pub fn new(components: Vec<SimpleType>, generators: Vec<Vec<u8>>) -> Result<Self, LatticeError> {
        for g in &generators {
            if g.len() != components.len() {
                return Err(LatticeError::NotEvenUnimodular(format!("codeword {g:?} has the wrong length")));
            }
            for (i, (&d, t)) in g.iter().zip(&components).enumerate() {
                if d >= Discriminant::of(*t)?.order() {
                    return Err(LatticeError::BadDigit { component: i, digit: d });
                }
            }
        }
        Ok(Self { components, generators })
    }

    /// `⟨[1012], [1120], [1201]⟩` on `E6⁴`.
    pub fn e6_4() -> Self {
        let e6 = SimpleType::new(Family::E, 6).expect("E6");
        Self::new(vec![e6; 4], vec![vec![1, 0, 1, 2], vec![1, 1, 2, 0], vec![1, 2, 0, 1]]).expect("valid code")
    }

    /// The hexacode-type glue on `D4⁶`.
    pub fn d4_6() -> Self {
        let d4 = SimpleType::new(Family::D, 4).expect("D4");
        let gens = ["111111", "222222", "002332", "023320", "032023", "020233"]
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect();
        Self::new(vec![d4; 6], gens).expect("valid code")
    }

    fn discriminants(&self) -> Vec<Discriminant> {
        self.components.iter().map(|t| Discriminant::of(*t).expect("checked in new")).collect()
    }

    /// All codewords, sorted.
    pub fn codewords(&self) -> Vec<Vec<u8>> {
        let disc = self.discriminants();
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        seen.insert(vec![0; self.components.len()]);
        let mut frontier: Vec<Vec<u8>> = seen.iter().cloned().collect();
        while let Some(w) = frontier.pop() {
            for g in &self.generators {
                let s: Vec<u8> = w.iter().zip(g).zip(&disc).map(|((a, b), d)| d.add(*a, *b)).collect();
                if seen.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|t| t.rank()).sum()
    }

    /// First ambient coordinate of each component.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for t in &self.components {
            out.push(acc);
            acc += t.rank();
        }
        out
    }

    /// Glue vector for a digit vector, in simple-root coordinates.
    pub fn glue_vector(&self, digits: &[u8]) -> Result<Vec<Rational>, LatticeError> {
        let mut v = vec![Rational::zero(); self.rank()];
        for (i, ((t, &d), off)) in self.components.iter().zip(digits).zip(self.offsets()).enumerate() {
            if d == 0 {
                continue;
            }
            let reps = digit_weights(*t)?;
            let idx = *reps.get(d as usize - 1).ok_or(LatticeError::BadDigit { component: i, digit: d })?;
            let w = fundamental_in_root_coords(*t, idx);
            for (k, x) in w.into_iter().enumerate() {
                v[off + k] = x;
            }
        }
        Ok(v)
    }
}

/// `Λ_i` in simple-root coordinates: row `i` of the inverse Cartan matrix.
pub fn fundamental_in_root_coords(t: SimpleType, i: usize) -> Vec<Rational> {
    let rs = build_root_system(t);
    let inv = rs.gram.inverse().expect("Cartan matrix is invertible");
    inv.row(i).to_vec()
}

fn block_gram(components: &[SimpleType]) -> Vec<Vec<i64>> {
    let n: usize = components.iter().map(|t| t.rank()).sum();
    let mut g = vec![vec![0i64; n]; n];
    let mut off = 0;
    for t in components {
        let rs = build_root_system(*t);
        for i in 0..t.rank() {
            for j in 0..t.rank() {
                g[off + i][off + j] = rs.cartan[i][j];
            }
        }
        off += t.rank();
    }
    g
}

/// An even lattice containing a root lattice `Q`, in simple-root coordinates of `Q`.
#[derive(Clone, Debug)]
pub struct EvenLattice {
    pub code: GlueCode,
    /// Gram matrix of the simple roots of `Q` (block diagonal).
    pub ambient_gram: Vec<Vec<i64>>,
    /// Basis rows in simple-root coordinates.
    pub basis: Vec<Vec<Rational>>,
    pub gram: Vec<Vec<i64>>,
}

impl EvenLattice {
    pub fn rank(&self) -> usize {
        self.ambient_gram.len()
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let g = self.ambient_gram[i][j];
                if g != 0 {
                    s += xi * yj * int(g);
                }
            }
        }
        s
    }

    pub fn det(&self) -> Rational {
        let m = RationalMatrix::from_fn(self.rank(), self.rank(), |i, j| int(self.gram[i][j]));
        m.det().expect("square")
    }

    /// `|N/Q|`.
    pub fn glue_index(&self) -> usize {
        self.code.codewords().len()
    }

    /// All norm-2 vectors, in simple-root coordinates of `Q`.
    pub fn roots(&self) -> Result<Vec<Vec<i64>>, LatticeError> {
        let offsets = self.code.offsets();
        let mut out = Vec::new();
        for word in self.code.codewords() {
            let shift = self.code.glue_vector(&word)?;
            let mut per_comp = Vec::new();
            for (t, &off) in self.code.components.iter().zip(&offsets) {
                let r = t.rank();
                let g: Vec<Vec<i64>> = (0..r).map(|i| self.ambient_gram[off + i][off..off + r].to_vec()).collect();
                per_comp.push(short_vectors(&g, &shift[off..off + r], &int(2)));
            }
            let mut found = Vec::new();
            combine(&per_comp, 0, Rational::zero(), &mut Vec::new(), &mut found);
            if !word.iter().all(|&d| d == 0) && !found.is_empty() {
                return Err(LatticeError::ExtraRoots);
            }
            for v in found {
                out.push(v.iter().map(|x| x.to_integer().to_i64().expect("small")).collect());
            }
        }
        out.sort();
        Ok(out)
    }
}

fn combine(
    per_comp: &[Vec<(Vec<Rational>, Rational)>],
    i: usize,
    norm: Rational,
    cur: &mut Vec<Rational>,
    out: &mut Vec<Vec<Rational>>,
) {
    if i == per_comp.len() {
        if norm == int(2) {
            out.push(cur.clone());
        }
        return;
    }
    for (v, n) in &per_comp[i] {
        let total = &norm + n;
        if total > int(2) {
            continue;
        }
        let len = cur.len();
        cur.extend(v.iter().cloned());
        combine(per_comp, i + 1, total, cur, out);
        cur.truncate(len);
    }
}

/// Vectors `y ∈ s + Z^n` with `yᵀ G y ≤ bound`, with their norms.
pub fn short_vectors(g: &[Vec<i64>], shift: &[Rational], bound: &Rational) -> Vec<(Vec<Rational>, Rational)> {
    let n = g.len();
    // Cholesky G = Rᵀ R
    let mut r = vec![vec![0f64; n]; n];
    for i in 0..n {
        for j in i..n {
            let mut s = g[i][j] as f64;
            for k in 0..i {
                s -= r[k][i] * r[k][j];
            }
            if i == j {
                r[i][i] = s.sqrt();
            } else {
                r[i][j] = s / r[i][i];
            }
        }
    }
    let s_f: Vec<f64> = shift.iter().map(to_f64).collect();
    let b = to_f64(bound) + 1e-9;
    let mut out = Vec::new();
    let mut y = vec![0f64; n];
    let mut k = vec![0i64; n];
    fn rec(
        i: usize,
        left: f64,
        r: &[Vec<f64>],
        s_f: &[f64],
        y: &mut [f64],
        k: &mut [i64],
        g: &[Vec<i64>],
        shift: &[Rational],
        bound: &Rational,
        out: &mut Vec<(Vec<Rational>, Rational)>,
    ) {
        let n = r.len();
        let c: f64 = -(i + 1..n).map(|j| r[i][j] * y[j]).sum::<f64>() / r[i][i];
        let rad = (left.max(0.0)).sqrt() / r[i][i];
        let lo = (c - rad - s_f[i]).ceil() as i64;
        let hi = (c + rad - s_f[i]).floor() as i64;
        for ki in lo..=hi {
            k[i] = ki;
            y[i] = ki as f64 + s_f[i];
            let t = r[i][i] * (y[i] - c);
            let rem = left - t * t;
            if rem < -1e-9 {
                continue;
            }
            if i == 0 {
                let v: Vec<Rational> = k.iter().zip(shift).map(|(&ki, s)| int(ki) + s).collect();
                let mut norm = Rational::zero();
                for a in 0..n {
                    for b in 0..n {
                        if g[a][b] != 0 {
                            norm += &v[a] * &v[b] * int(g[a][b]);
                        }
                    }
                }
                if &norm <= bound {
                    out.push((v, norm));
                }
            } else {
                rec(i - 1, rem, r, s_f, y, k, g, shift, bound, out);
            }
        }
    }
    if n > 0 {
        rec(n - 1, b, &r, &s_f, &mut y, &mut k, g, shift, bound, &mut out);
    }
    out
}

/// Lattice generated by the roots of `Q` and the glue vectors; checked even and unimodular.
pub fn assemble_niemeier(code: &GlueCode) -> Result<EvenLattice, LatticeError> {
    let n = code.rank();
    let mut gens: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for g in &code.generators {
        gens.push(code.glue_vector(g)?);
    }
    let den = gens.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let den_i = den.to_i128().expect("small denominator");
    let rows: Vec<Vec<i128>> = gens
        .iter()
        .map(|v| v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer().to_i128().expect("small")).collect())
        .collect();
    let h = hnf_rows(rows);
    if h.len() != n {
        return Err(LatticeError::NotEvenUnimodular("generators do not span full rank".into()));
    }
    let basis: Vec<Vec<Rational>> = h.iter().map(|r| r.iter().map(|&x| Rational::new(BigInt::from(x), BigInt::from(den_i))).collect()).collect();
    let ambient_gram = block_gram(&code.components);
    let mut lat = EvenLattice { code: code.clone(), ambient_gram, basis, gram: Vec::new() };
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = lat.inner(&lat.basis[i], &lat.basis[j]);
            if !v.is_integer() {
                return Err(LatticeError::NotEvenUnimodular(format!("non-integral inner product {v}")));
            }
            gram[i][j] = v.to_integer().to_i64().expect("small");
        }
        if gram[i][i] % 2 != 0 {
            return Err(LatticeError::NotEvenUnimodular(format!("odd norm {}", gram[i][i])));
        }
    }
    lat.gram = gram;
    let det = lat.det();
    if !det.is_one() {
        return Err(LatticeError::NotEvenUnimodular(format!("determinant {det}")));
    }
    Ok(lat)
}

/// Order of the group of component permutations with per-component realizable discriminant
/// automorphisms that map the code onto itself.
pub fn glue_automorphism_group_order(code: &GlueCode) -> u64 {
    let words = code.codewords();
    let n = code.components.len();
    let disc = code.discriminants();
    let auts: Vec<Vec<Vec<u8>>> = code.components.iter().zip(&disc).map(|(t, d)| d.realizable_automorphisms(*t)).collect();
    // codeword restrictions to every subset of positions
    let mut restricted: HashSet<(u32, Vec<u8>)> = HashSet::new();
    for mask in 0u32..(1 << n) {
        for w in &words {
            let r: Vec<u8> = (0..n).map(|i| if mask >> i & 1 == 1 { w[i] } else { 255 }).collect();
            restricted.insert((mask, r));
        }
    }
    let mut count = 0u64;
    let mut target_of = vec![usize::MAX; n];
    let mut aut_of = vec![0usize; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        code: &GlueCode,
        auts: &[Vec<Vec<u8>>],
        restricted: &HashSet<(u32, Vec<u8>)>,
        target_of: &mut [usize],
        aut_of: &mut [usize],
        used: &mut [bool],
        count: &mut u64,
    ) {
        let n = target_of.len();
        if i == n {
            *count += 1;
            return;
        }
        for t in 0..n {
            if used[t] || code.components[t] != code.components[i] {
                continue;
            }
            for a in 0..auts[i].len() {
                target_of[i] = t;
                aut_of[i] = a;
                let mask: u32 = (0..=i).map(|j| 1u32 << target_of[j]).sum();
                let ok = code.generators.iter().all(|g| {
                    let mut img = vec![255u8; n];
                    for j in 0..=i {
                        img[target_of[j]] = auts[j][aut_of[j]][g[j] as usize];
                    }
                    restricted.contains(&(mask, img))
                });
                if ok {
                    used[t] = true;
                    rec(i + 1, code, auts, restricted, target_of, aut_of, used, count);
                    used[t] = false;
                }
            }
        }
        target_of[i] = usize::MAX;
    }
    rec(0, code, &auts, &restricted, &mut target_of, &mut aut_of, &mut used, &mut count);
    count
}

/// Number of sublattices of the root lattice of `ty` isometric to the root lattice of `pattern`,
/// found by enumerating root tuples with the pattern's Gram matrix and deduplicating spans.
pub fn count_sublattices(ty: SimpleType, pattern: &[SimpleType]) -> usize {
    let rs = build_root_system(ty);
    assert!(ty.is_simply_laced() && pattern.iter().all(|t| t.is_simply_laced()), "simply-laced types only");
    let pg = block_gram(pattern);
    let k = pg.len();
    let g: Vec<Vec<i64>> = rs.cartan.clone();
    let roots = &rs.roots;
    let ip = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..a.len() {
            for j in 0..b.len() {
                s += a[i] * g[i][j] * b[j];
            }
        }
        s
    };
    let gram_r: Vec<Vec<i64>> = roots.iter().map(|a| roots.iter().map(|b| ip(a, b)).collect()).collect();
    let mut spans: HashSet<Vec<Vec<i128>>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(k: usize, pg: &[Vec<i64>], gram_r: &[Vec<i64>], roots: &[Vec<i64>], chosen: &mut Vec<usize>, spans: &mut HashSet<Vec<Vec<i128>>>) {
        let i = chosen.len();
        if i == k {
            let rows: Vec<Vec<i128>> = chosen.iter().map(|&c| roots[c].iter().map(|&x| x as i128).collect()).collect();
            spans.insert(hnf_rows(rows));
            return;
        }
        for r in 0..roots.len() {
            if chosen.iter().enumerate().all(|(j, &c)| gram_r[c][r] == pg[j][i]) {
                chosen.push(r);
                rec(k, pg, gram_r, roots, chosen, spans);
                chosen.pop();
            }
        }
    }
    rec(k, &pg, &gram_r, roots, &mut chosen, &mut spans);
    spans.len()
}

/// Sublattices of the `E6` root lattice isometric to `A2³`.
pub fn count_a2_cubed_sublattices() -> usize {
    let e6 = SimpleType::new(Family::E, 6).expect("E6");
    let a2 = SimpleType::new(Family::A, 2).expect("A2");
    count_sublattices(e6, &[a2, a2, a2])
}
