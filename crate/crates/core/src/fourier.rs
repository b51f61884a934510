//! Lusztig's Fourier matrix on `M(Γ)` for the groups occurring in E6
//! families: trivial, ℤ/2, ℤ/3 and S3.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{rat, Cyc3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSpec {
    Trivial,
    Z2,
    Z3,
    S3,
}

impl GroupSpec {
    pub const ALL: [GroupSpec; 4] = [GroupSpec::Trivial, GroupSpec::Z2, GroupSpec::Z3, GroupSpec::S3];

    pub fn name(self) -> &'static str {
        match self {
            GroupSpec::Trivial => "trivial",
            GroupSpec::Z2 => "z2",
            GroupSpec::Z3 => "z3",
            GroupSpec::S3 => "s3",
        }
    }

    fn generators(self) -> (usize, Vec<Vec<usize>>) {
        match self {
            GroupSpec::Trivial => (1, vec![]),
            GroupSpec::Z2 => (2, vec![vec![1, 0]]),
            GroupSpec::Z3 => (3, vec![vec![1, 2, 0]]),
            GroupSpec::S3 => (3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "trivial" | "1" => Ok(GroupSpec::Trivial),
            "z2" => Ok(GroupSpec::Z2),
            "z3" => Ok(GroupSpec::Z3),
            "s3" => Ok(GroupSpec::S3),
            _ => Err(Error::Parse(format!("unknown group '{s}' (expected trivial, z2, z3, s3)"))),
        }
    }
}

/// A character of a subgroup, stored as its value on every element of the
/// ambient group that lies in the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub label: String,
    pub values: BTreeMap<usize, Cyc3>,
}

impl Character {
    pub fn degree(&self) -> i64 {
        self.values.get(&0).map_or(0, |v| v.a.to_integer().try_into().unwrap_or(0))
    }

    pub fn at(&self, g: usize) -> &Cyc3 {
        &self.values[&g]
    }
}

/// A small group given by its multiplication table; element 0 is the
/// identity.
#[derive(Clone, Debug)]
pub struct FiniteGroupModel {
    pub spec: GroupSpec,
    pub perms: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    /// Conjugacy classes sorted by (element order, size, smallest member).
    pub classes: Vec<Vec<usize>>,
    pub irr: Vec<Character>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

impl FiniteGroupModel {
    pub fn build(spec: GroupSpec) -> Result<Self> {
        let (n, gens) = spec.generators();
        let id: Vec<usize> = (0..n).collect();
        let mut perms = vec![id];
        let mut i = 0;
        while i < perms.len() {
            for g in &gens {
                let p = compose(&perms[i], g);
                if !perms.contains(&p) {
                    perms.push(p);
                }
            }
            i += 1;
        }
        perms[1..].sort();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mul: Vec<Vec<usize>> =
            perms.iter().map(|a| perms.iter().map(|b| index(&compose(a, b))).collect()).collect();
        let order = perms.len();
        let inv: Vec<usize> = (0..order).map(|a| (0..order).find(|&b| mul[a][b] == 0).unwrap()).collect();
        let mut g = Self { spec, perms, mul, inv, classes: Vec::new(), irr: Vec::new() };
        g.check_axioms()?;
        g.classes = g.conjugacy_classes(&(0..order).collect::<Vec<_>>());
        let all: Vec<usize> = (0..order).collect();
        g.irr = g.irreducible_characters(&all, None)?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.mul[0][a] != a
                || self.mul[a][0] != a
                || self.mul[a][self.inv[a]] != 0
                || self.mul[self.inv[a]][a] != 0
            {
                return Err(Error::Consistency(format!("{}: identity or inverse axiom fails at {a}", self.spec)));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return Err(Error::Consistency(format!("{}: associativity fails", self.spec)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul[self.mul[g][x]][self.inv[g]]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mul[g][x] == self.mul[x][g]).collect()
    }

    /// Classes of the subgroup `sub` (closed under multiplication).
    pub fn conjugacy_classes(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for &x in sub {
            if seen[x] {
                continue;
            }
            let mut cl: Vec<usize> = sub.iter().map(|&g| self.conj(g, x)).collect();
            cl.sort_unstable();
            cl.dedup();
            for &y in &cl {
                seen[y] = true;
            }
            classes.push(cl);
        }
        classes.sort_by_key(|c| (self.element_order(c[0]), c.len(), c[0]));
        classes
    }

    /// Irreducible characters of the subgroup `sub`. Linear characters are
    /// the homomorphisms to the sixth roots of unity; whatever the linear
    /// characters leave of the regular character must be `d` times a single
    /// character of degree `d` (true for every group of order ≤ 6).
    ///
    /// `anchor` is an element of order 3 used to name non-real linear
    /// characters by their value there.
    fn irreducible_characters(&self, sub: &[usize], anchor: Option<usize>) -> Result<Vec<Character>> {
        let roots: Vec<Cyc3> = (0..3).flat_map(|k| [Cyc3::theta_pow(k), -&Cyc3::theta_pow(k)]).collect();
        let gens = self.generating_set(sub);
        let mut linear: Vec<BTreeMap<usize, Cyc3>> = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            if let Some(values) =
                self.extend_homomorphism(sub, &gens, &choice.iter().map(|&c| roots[c].clone()).collect::<Vec<_>>())
            {
                if !linear.contains(&values) {
                    linear.push(values);
                }
            }
            let mut k = 0;
            while k < choice.len() && choice[k] == roots.len() - 1 {
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
            choice[k] += 1;
        }
        let order = sub.len() as i64;
        let mut chars: Vec<BTreeMap<usize, Cyc3>> = linear;
        let rest = order - chars.len() as i64;
        if rest > 0 {
            let d = (1..=rest).find(|d| d * d == rest).ok_or_else(|| {
                Error::Consistency(format!("{}: nonlinear part of degree sum {rest} is not a single square", self.spec))
            })?;
            let mut values = BTreeMap::new();
            for &g in sub {
                let mut v = if g == 0 { Cyc3::from_int(order) } else { Cyc3::zero() };
                for c in &chars {
                    v = &v - &(&c[&0] * &c[&g]);
                }
                values.insert(g, v.scale(&(rat(1) / rat(d))));
            }
            chars.push(values);
        }
        let named: Vec<Character> = chars.into_iter().map(|values| self.name_character(values, sub, anchor)).collect();
        self.check_orthogonality(sub, &named)?;
        Ok(named)
    }

    fn generating_set(&self, sub: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &g in sub {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut span = vec![0usize];
        let mut i = 0;
        while i < span.len() {
            for &g in gens {
                let p = self.mul[span[i]][g];
                if !span.contains(&p) {
                    span.push(p);
                }
            }
            i += 1;
        }
        span
    }

    /// The homomorphism `sub → ℚ(θ)^×` sending `gens[i] ↦ images[i]`, if
    /// well defined.
    fn extend_homomorphism(&self, sub: &[usize], gens: &[usize], images: &[Cyc3]) -> Option<BTreeMap<usize, Cyc3>> {
        let mut values: BTreeMap<usize, Cyc3> = BTreeMap::from([(0, Cyc3::one())]);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for (g, img) in gens.iter().zip(images) {
                let y = self.mul[x][*g];
                let v = &values[&x] * img;
                match values.get(&y) {
                    Some(w) if *w != v => return None,
                    Some(_) => {}
                    None => {
                        values.insert(y, v);
                        queue.push(y);
                    }
                }
            }
        }
        (values.len() == sub.len()).then_some(values)
    }

    fn name_character(&self, values: BTreeMap<usize, Cyc3>, sub: &[usize], anchor: Option<usize>) -> Character {
        let deg = values[&0].clone();
        let label = if deg != Cyc3::one() {
            "r".to_string()
        } else if values.values().all(|v| *v == Cyc3::one()) {
            "1".to_string()
        } else if values.values().all(|v| v.is_rational()) {
            "eps".to_string()
        } else {
            let a = anchor
                .filter(|a| sub.contains(a))
                .or_else(|| sub.iter().copied().find(|&g| self.element_order(g) == 3))
                .expect("non-real character on a group without elements of order 3");
            if values[&a] == Cyc3::theta() {
                "theta".to_string()
            } else {
                "theta2".to_string()
            }
        };
        Character { label, values }
    }

    fn check_orthogonality(&self, sub: &[usize], chars: &[Character]) -> Result<()> {
        let order = rat(sub.len() as i64);
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let mut s = Cyc3::zero();
                for &g in sub {
                    s = &s + &(a.at(g) * &b.at(g).conj());
                }
                let expected = if i == j { Cyc3::from_rational(order.clone()) } else { Cyc3::zero() };
                if s != expected {
                    return Err(Error::Consistency(format!("{}: row orthogonality fails", self.spec)));
                }
            }
        }
        for &g in sub {
            for &h in sub {
                let mut s = Cyc3::zero();
                for c in chars {
                    s = &s + &(c.at(g) * &c.at(h).conj());
                }
                let conjugate = sub.iter().any(|&k| self.conj(k, g) == h);
                let centralizer = sub.iter().filter(|&&k| self.mul[k][g] == self.mul[g][k]).count() as i64;
                let expected = if conjugate { Cyc3::from_int(centralizer) } else { Cyc3::zero() };
                if s != expected {
                    return Err(Error::Consistency(format!("{}: column orthogonality fails", self.spec)));
                }
            }
        }
        Ok(())
    }

    /// Class names: `1` for the identity, `g<k>` for the first class of
    /// elements of order `k`, `g<k>'` for a second one.
    pub fn class_name(&self, class: usize) -> String {
        let x = self.classes[class][0];
        let k = self.element_order(x);
        if k == 1 {
            return "1".into();
        }
        let before = self.classes[..class].iter().filter(|c| self.element_order(c[0]) == k).count();
        format!("g{k}{}", "'".repeat(before))
    }
}

/// An element `(x, σ)` of `M(Γ)`.
#[derive(Clone, Debug)]
pub struct MPair {
    pub class: usize,
    pub x: usize,
    pub class_name: String,
    pub centralizer: Vec<usize>,
    pub sigma: Character,
}

impl MPair {
    pub fn label(&self) -> String {
        format!("({},{})", self.class_name, self.sigma.label)
    }
}

/// `M(Γ)` ordered by (class element order, class size, character degree,
/// character key), with the smallest element of each class as representative.
pub fn pair_set(g: &FiniteGroupModel) -> Result<Vec<MPair>> {
    pair_set_with(g, |class| class[0])
}

/// As [`pair_set`] with a chosen representative of each class.
pub fn pair_set_with(g: &FiniteGroupModel, rep: impl Fn(&[usize]) -> usize) -> Result<Vec<MPair>> {
    let mut pairs = Vec::new();
    for (c, class) in g.classes.iter().enumerate() {
        let x = rep(class);
        let cent = g.centralizer(x);
        let anchor = (g.element_order(x) == 3).then_some(x);
        for sigma in g.irreducible_characters(&cent, anchor)? {
            pairs.push(MPair { class: c, x, class_name: g.class_name(c), centralizer: cent.clone(), sigma });
        }
    }
    pairs.sort_by_cached_key(|p| {
        (g.element_order(p.x), g.classes[p.class].len(), p.class, p.sigma.degree(), character_key(&p.sigma))
    });
    Ok(pairs)
}

fn character_key(c: &Character) -> (u8, String) {
    let rank = match c.label.as_str() {
        "1" => 0,
        "eps" => 1,
        "theta" => 2,
        "theta2" => 3,
        _ => 4,
    };
    (rank, c.values.values().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

#[derive(Clone, Debug)]
pub struct FourierMatrix {
    pub group: GroupSpec,
    pub index: Vec<MPair>,
    pub entries: Vec<Vec<Cyc3>>,
}

impl FourierMatrix {
    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.iter().position(|p| p.label() == label)
    }

    pub fn entry(&self, row: &str, col: &str) -> Option<&Cyc3> {
        Some(&self.entries[self.position(row)?][self.position(col)?])
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i].conj()))
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().flatten().all(Cyc3::is_rational)
    }

    pub fn square(&self) -> Vec<Vec<Cyc3>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Cyc3::zero(), |acc, k| &acc + &(&self.entries[i][k] * &self.entries[k][j])))
                    .collect()
            })
            .collect()
    }

    pub fn squares_to_identity(&self) -> bool {
        let n = self.size();
        let sq = self.square();
        (0..n).all(|i| (0..n).all(|j| sq[i][j] == if i == j { Cyc3::one() } else { Cyc3::zero() }))
    }

    /// Rational entries, when all entries are rational.
    pub fn rational_entries(&self) -> Option<Vec<Vec<BigRational>>> {
        self.is_rational().then(|| self.entries.iter().map(|r| r.iter().map(|v| v.a.clone()).collect()).collect())
    }

    /// Labeled TSV: header row of pair labels, one row per pair.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("pair");
        for p in &self.index {
            out.push('\t');
            out.push_str(&p.label());
        }
        out.push('\n');
        for (p, row) in self.index.iter().zip(&self.entries) {
            out.push_str(&p.label());
            for v in row {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// `{(x,σ),(y,τ)} = |C(x)|⁻¹|C(y)|⁻¹ Σ_{g : x·gyg⁻¹ = gyg⁻¹·x} σ(gyg⁻¹)‾ τ(g⁻¹xg)`.
pub fn pairing(g: &FiniteGroupModel, a: &MPair, b: &MPair) -> Cyc3 {
    let (x, y) = (a.x, b.x);
    let mut s = Cyc3::zero();
    for h in 0..g.order() {
        let gyg = g.conj(h, y);
        if g.mul[x][gyg] != g.mul[gyg][x] {
            continue;
        }
        let gxg = g.conj(g.inv[h], x);
        s = &s + &(&a.sigma.at(gyg).conj() * b.sigma.at(gxg));
    }
    s.scale(&(rat(1) / rat((a.centralizer.len() * b.centralizer.len()) as i64)))
}

pub fn fourier_matrix(g: &FiniteGroupModel) -> Result<FourierMatrix> {
    fourier_matrix_from_pairs(g, pair_set(g)?)
}

pub fn fourier_matrix_from_pairs(g: &FiniteGroupModel, index: Vec<MPair>) -> Result<FourierMatrix> {
    let entries = index.iter().map(|a| index.iter().map(|b| pairing(g, a, b)).collect()).collect();
    let m = FourierMatrix { group: g.spec, index, entries };
    if !m.is_hermitian() {
        return Err(Error::Consistency(format!("Fourier matrix of {} is not hermitian", g.spec)));
    }
    if !m.squares_to_identity() {
        return Err(Error::Consistency(format!("Fourier matrix of {} does not square to the identity", g.spec)));
    }
    if g.spec == GroupSpec::S3 && !m.is_rational() {
        return Err(Error::Consistency("Fourier matrix of S3 has irrational entries".into()));
    }
    Ok(m)
}

/// Every row other than `c1`, `c2` has equal entries in columns `c1` and `c2`.
pub fn column_pair_equality(m: &FourierMatrix, c1: usize, c2: usize) -> bool {
    (0..m.size()).filter(|&r| r != c1 && r != c2).all(|r| m.entries[r][c1] == m.entries[r][c2])
}

pub const CUSPIDAL_PAIRS: [&str; 2] = ["(g3,theta)", "(g3,theta2)"];
