//! Root systems of semisimple Lie algebras and the Killing-normalized
//! pairing on weights.
//!
//! Weights are stored in fundamental-weight coordinates, roots in
//! simple-root coordinates. A product type such as `A1xA1` concatenates the
//! coordinates of its simple factors, and simple roots are addressed by
//! 1-based indices into that concatenation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{parse_rational, Rational};
use crate::error::{Error, Result};

mod weight;

pub use weight::Weight;

/// Cartan type of a simple factor (Bourbaki numbering).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

impl CartanType {
    fn parse(token: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown root system type `{token}`"));
        let mut chars = token.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (letter, n) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Cartan matrix `a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) | CartanType::F4 | CartanType::G2 => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D(_) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E(_) => {
                // 1-3-4-5-..., with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match *self {
            // alpha_n short
            CartanType::B(_) => a[n - 1][n - 2] = -2,
            // alpha_n long
            CartanType::C(_) => a[n - 2][n - 1] = -2,
            // alpha_3, alpha_4 short
            CartanType::F4 => a[2][1] = -2,
            // alpha_1 short
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

/// One simple factor with its derived data.
#[derive(Clone, Debug)]
pub struct SimpleFactor {
    kind: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, normalized so the highest root has length 2.
    half_lengths: Vec<Rational>,
    positive_roots: Vec<Vec<i64>>,
    dual_coxeter: Rational,
    offset: usize,
}

impl SimpleFactor {
    fn new(kind: CartanType, offset: usize) -> Self {
        let cartan = kind.cartan_matrix();
        let positive_roots = positive_roots(&cartan);
        let mut f = SimpleFactor {
            kind,
            half_lengths: symmetrizer(&cartan),
            cartan,
            positive_roots,
            dual_coxeter: Rational::zero(),
            offset,
        };
        let theta = f.highest_root();
        let scale = Rational::from_integer(2.into()) / f.root_form(&theta, &theta);
        for d in &mut f.half_lengths {
            *d = &*d * &scale;
        }
        // h^v = 1 + <delta, theta^v> = 1 + (delta, theta) since (theta, theta) = 2
        let delta = vec![Rational::one(); f.rank()];
        f.dual_coxeter = Rational::one() + f.form(&f.root_to_weight(&theta), &delta);
        f
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn dual_coxeter(&self) -> &Rational {
        &self.dual_coxeter
    }

    /// Index of this factor's first simple root in the concatenation.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty")
            .clone()
    }

    /// Fundamental coordinates of a root: `f_j = <beta, alpha_j^v> = sum_i c_i a_ji`.
    pub fn root_to_weight(&self, c: &[i64]) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|j| Rational::from_integer((0..n).map(|i| c[i] * self.cartan[j][i]).sum::<i64>().into()))
            .collect()
    }

    /// Normalized form of two roots given in simple coordinates.
    fn root_form(&self, a: &[i64], b: &[i64]) -> Rational {
        let w = self.root_to_weight(b);
        a.iter()
            .zip(&w)
            .zip(&self.half_lengths)
            .map(|((&ai, wi), d)| Rational::from_integer(ai.into()) * wi * d)
            .sum()
    }

    /// Normalized form (long roots of length 2) on fundamental coordinates:
    /// `(l, m) = sum_j c_j d_j m_j` with `l = sum c_j alpha_j`.
    pub fn form(&self, l: &[Rational], m: &[Rational]) -> Rational {
        let c = self.weight_to_root(l);
        c.iter()
            .zip(m)
            .zip(&self.half_lengths)
            .map(|((ci, mi), d)| ci * mi * d)
            .sum()
    }

    /// Simple-root coordinates of a weight: solves `f_j = sum_i c_i a_ji`.
    pub fn weight_to_root(&self, f: &[Rational]) -> Vec<Rational> {
        let n = self.rank();
        // augmented system, row j: sum_i a_ji c_i = f_j
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut row: Vec<Rational> = (0..n)
                    .map(|i| Rational::from_integer(self.cartan[j][i].into()))
                    .collect();
                row.push(f[j].clone());
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for k in col..=n {
                        let v = &m[col][k] * &factor;
                        m[r][k] = &m[r][k] - &v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n].clone()).collect()
    }

    /// Killing-normalized pairing: the normalized form divided by `2 h^v`.
    pub fn killing(&self, l: &[Rational], m: &[Rational]) -> Rational {
        self.form(l, m) / (Rational::from_integer(2.into()) * &self.dual_coxeter)
    }
}

/// `d_i` with `d_i a_ij = d_j a_ji`, `d_0 = 1` on each connected component.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<Rational> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && a[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * Rational::new(a[i][j].into(), a[j][i].into()));
                    stack.push(j);
                }
            }
        }
    }
    d.into_iter().map(Option::unwrap).collect()
}

/// Positive roots by closure: `beta + alpha_i` is a root iff the
/// `alpha_i`-string through `beta` extends upwards, i.e.
/// `p - <beta, alpha_i^v> > 0` with `p` the downward string length.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i itself: its string is -alpha_i..alpha_i
                if beta.iter().enumerate().all(|(k, &c)| c == (k == i) as i64) {
                    continue;
                }
                let pairing: i64 = (0..n).map(|k| beta[k] * a[i][k]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        for r in &layer {
            known.insert(r.clone());
            roots.push(r.clone());
        }
    }
    roots
}

/// Product of simple root systems.
#[derive(Clone, Debug)]
pub struct RootSystem {
    factors: Vec<SimpleFactor>,
    rank: usize,
}

/// Parses a type string such as `A3`, `B2`, `G2` or `A1xA1`.
pub fn build_root_system(spec: &str) -> Result<RootSystem> {
    RootSystem::parse(spec)
}

impl RootSystem {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for token in spec.split(['x', 'X', '*']).map(str::trim) {
            if token.is_empty() {
                return Err(Error::Invalid(format!("malformed root system type `{spec}`")));
            }
            let kind = CartanType::parse(token)?;
            factors.push(SimpleFactor::new(kind, offset));
            offset += kind.rank();
        }
        Ok(RootSystem { factors, rank: offset })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.kind.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Positive roots in global simple-root coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for f in &self.factors {
            for r in &f.positive_roots {
                let mut g = vec![0; self.rank];
                g[f.offset..f.offset + f.rank()].copy_from_slice(r);
                out.push(g);
            }
        }
        out
    }

    /// A root in global simple coordinates as a weight.
    pub fn root_weight(&self, c: &[i64]) -> Weight {
        let mut out = vec![Rational::zero(); self.rank];
        for f in &self.factors {
            let w = f.root_to_weight(&c[f.offset..f.offset + f.rank()]);
            out[f.offset..f.offset + f.rank()].clone_from_slice(&w);
        }
        Weight::new(out)
    }

    /// Highest roots of the simple factors, as weights.
    pub fn highest_roots(&self) -> Vec<Weight> {
        self.factors
            .iter()
            .map(|f| {
                let mut c = vec![0; self.rank];
                c[f.offset..f.offset + f.rank()].copy_from_slice(&f.highest_root());
                self.root_weight(&c)
            })
            .collect()
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::Invalid(format!(
                "weight has {} coordinates but the root system has rank {}",
                w.len(),
                self.rank
            )));
        }
        Ok(())
    }

    /// Killing-normalized pairing; simple factors are orthogonal.
    pub fn killing_pairing(&self, l: &Weight, m: &Weight) -> Result<Rational> {
        self.check(l)?;
        self.check(m)?;
        Ok(self
            .factors
            .iter()
            .map(|f| {
                let r = f.offset..f.offset + f.rank();
                f.killing(&l.coords()[r.clone()], &m.coords()[r])
            })
            .sum())
    }

    /// Half the sum of the positive roots: all ones in fundamental coordinates.
    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![Rational::one(); self.rank])
    }

    /// Half the sum of the positive roots computed literally (cross-check
    /// for [`RootSystem::weyl_vector`]).
    pub fn half_sum_of_positive_roots(&self) -> Weight {
        self.delta_i(&[]).expect("empty subset")
    }

    fn check_subset(&self, subset: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.rank];
        for &i in subset {
            if i == 0 || i > self.rank {
                return Err(Error::Invalid(format!(
                    "simple root index {i} out of range 1..={}",
                    self.rank
                )));
            }
            mask[i - 1] = true;
        }
        Ok(mask)
    }

    /// Half the sum of the positive roots outside the span of the simple
    /// roots indexed (1-based) by `subset`.
    pub fn delta_i(&self, subset: &[usize]) -> Result<Weight> {
        let mask = self.check_subset(subset)?;
        let mut sum = vec![0i64; self.rank];
        for r in self.positive_roots() {
            if r.iter().enumerate().any(|(k, &c)| c != 0 && !mask[k]) {
                for (s, c) in sum.iter_mut().zip(&r) {
                    *s += c;
                }
            }
        }
        let w = self.root_weight(&sum);
        Ok(w.scale(&Rational::new(1.into(), 2.into())))
    }

    /// `2<delta, mu> / <mu, mu>`.
    pub fn beta_value(&self, mu: &Weight) -> Result<Rational> {
        let mm = self.killing_pairing(mu, mu)?;
        if mm.is_zero() {
            return Err(Error::Invalid("beta is undefined for the zero weight".into()));
        }
        let dm = self.killing_pairing(&self.weyl_vector(), mu)?;
        Ok(Rational::from_integer(2.into()) * dm / mm)
    }

    /// Whether `mu = (2k/l) delta_I` has beta value `l/k`.
    pub fn check_prop63(&self, subset: &[usize], k: i64, l: i64) -> Result<bool> {
        if k == 0 || l == 0 {
            return Err(Error::Invalid("k and l must be nonzero".into()));
        }
        let d = self.delta_i(subset)?;
        if d.is_zero() {
            return Err(Error::Invalid(
                "delta_I vanishes when I contains every simple root".into(),
            ));
        }
        let mu = d.scale(&Rational::new((2 * k).into(), l.into()));
        Ok(self.beta_value(&mu)? == Rational::new(l.into(), k.into()))
    }

    /// Whether `<delta, delta_I> = <delta_I, delta_I>`.
    pub fn lemma69(&self, subset: &[usize]) -> Result<bool> {
        let d = self.delta_i(subset)?;
        Ok(self.killing_pairing(&self.weyl_vector(), &d)? == self.killing_pairing(&d, &d)?)
    }

    /// Whether `<lambda, alpha_i> > 0` for every simple root outside `subset`.
    pub fn is_ample(&self, subset: &[usize], lambda: &Weight) -> Result<bool> {
        self.check(lambda)?;
        let mask = self.check_subset(subset)?;
        // <lambda, alpha_i> is a positive multiple of the i-th coordinate
        Ok((0..self.rank).all(|i| mask[i] || lambda.coords()[i].is_positive()))
    }

    /// Ampleness of `delta_I`, i.e. of the anticanonical bundle of `G/P_I`.
    pub fn fano_check(&self, subset: &[usize]) -> Result<bool> {
        let d = self.delta_i(subset)?;
        self.is_ample(subset, &d)
    }

    /// Weyl dimension formula for a dominant weight.
    pub fn weyl_dim(&self, mu: &Weight) -> Result<u64> {
        self.check(mu)?;
        if !mu.is_dominant() {
            return Err(Error::Invalid(format!("weight {mu} is not dominant")));
        }
        let delta = self.weyl_vector();
        let shifted = mu.add(&delta);
        let mut num = Rational::one();
        for r in self.positive_roots() {
            let a = self.root_weight(&r);
            num *= self.killing_pairing(&shifted, &a)? / self.killing_pairing(&delta, &a)?;
        }
        if !num.is_integer() || !num.is_positive() {
            return Err(Error::Invalid(format!(
                "Weyl dimension {num} is not a positive integer"
            )));
        }
        num.to_integer()
            .try_into()
            .map_err(|_| Error::Invalid("dimension overflow".into()))
    }

    /// Casimir eigenvalue `|lambda|^2 - 2<delta, lambda>` on the irreducible
    /// module with lowest weight `lambda`.
    pub fn casimir_scalar_lowest(&self, lambda: &Weight) -> Result<Rational> {
        let ll = self.killing_pairing(lambda, lambda)?;
        let dl = self.killing_pairing(&self.weyl_vector(), lambda)?;
        Ok(ll - Rational::from_integer(2.into()) * dl)
    }

    /// Highest weight `-lambda` of the space of sections dual to the line
    /// bundle of weight `lambda` on `G/P_I`.
    ///
    /// `lambda` must be a character of `P_I` (zero on the simple roots in
    /// `subset`) with `-lambda` dominant.
    pub fn sections_highest_weight(&self, subset: &[usize], lambda: &Weight) -> Result<Weight> {
        self.check(lambda)?;
        let mask = self.check_subset(subset)?;
        let mu = lambda.neg();
        if !mu.is_dominant() {
            return Err(Error::Invalid(format!("-({lambda}) is not dominant")));
        }
        if let Some(i) = (0..self.rank).find(|&i| mask[i] && !mu.coords()[i].is_zero()) {
            return Err(Error::Invalid(format!(
                "weight does not extend to the parabolic: coordinate {} is nonzero",
                i + 1
            )));
        }
        Ok(mu)
    }

    /// Parses a weight as comma- or space-separated rationals.
    pub fn parse_weight(&self, text: &str) -> Result<Weight> {
        let coords = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        let w = Weight::new(coords);
        self.check(&w)?;
        Ok(w)
    }
}

/// Parses a 1-based index list such as `1,3`; the empty string is the empty
/// subset.
pub fn parse_subset(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad simple root index `{s}`")))
        })
        .collect()
}
