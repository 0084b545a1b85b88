//! Up/down sequences ("weights"), their encodings as shortest coset
//! representatives, and permutations in one-line notation.
//!
//! Permutations multiply as functions, `(uv)(x) = u(v(x))`, and act on
//! sequences from the right by `(s . w)[p] = s[w(p)]`, so that `s_i`
//! swaps the symbols at positions `i` and `i + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quotient::BSequence;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sym {
    Up,
    Down,
}

impl Sym {
    pub fn flip(self) -> Sym {
        match self {
            Sym::Up => Sym::Down,
            Sym::Down => Sym::Up,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sym::Up => '^',
            Sym::Down => 'v',
        }
    }
}

/// A sequence of `^` (up) and `v` (down) symbols, positions 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight(Vec<Sym>);

impl Weight {
    pub fn new(symbols: Vec<Sym>) -> Self {
        Weight(symbols)
    }

    /// `^^..^vv..v` with `k` ups.
    pub fn identity(n: usize, k: usize) -> Self {
        Weight((0..n).map(|p| if p < k { Sym::Up } else { Sym::Down }).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '^' => Ok(Sym::Up),
                'v' | 'V' => Ok(Sym::Down),
                _ => Err(Error::Parse(format!("weight {s:?} may contain only '^' and 'v'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of ups.
    pub fn k(&self) -> usize {
        self.0.iter().filter(|&&s| s == Sym::Up).count()
    }

    /// Symbol at 1-based position `p`.
    pub fn at(&self, p: usize) -> Sym {
        self.0[p - 1]
    }

    pub fn starts_with(&self, s: Sym) -> bool {
        self.0.first() == Some(&s)
    }

    pub fn wedge_pos(&self) -> Vec<usize> {
        self.positions(Sym::Up)
    }

    pub fn vee_pos(&self) -> Vec<usize> {
        self.positions(Sym::Down)
    }

    fn positions(&self, s: Sym) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x == s).map(|(i, _)| i + 1).collect()
    }

    /// `z^up_i = up_i - i`, for `i = 1..k`.
    pub fn wedge_dist(&self) -> Vec<usize> {
        self.wedge_pos().iter().enumerate().map(|(i, p)| p - (i + 1)).collect()
    }

    /// `z^down_i = i - down_{i-k}`, for `i = k+1..n`.
    pub fn vee_dist(&self) -> Vec<usize> {
        let k = self.k();
        self.vee_pos().iter().enumerate().map(|(j, p)| k + j + 1 - p).collect()
    }

    /// `b_i = 1 + #{ups strictly right of i}`.
    pub fn b_seq(&self) -> BSequence {
        let n = self.n();
        let mut b = vec![0u32; n];
        let mut ups = 0;
        for p in (0..n).rev() {
            b[p] = ups + 1;
            if self.0[p] == Sym::Up {
                ups += 1;
            }
        }
        BSequence(b)
    }

    pub fn from_vee_pos(n: usize, vees: &[usize]) -> Result<Self> {
        let mut s = vec![Sym::Up; n];
        for w in vees.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Invalid(format!("down positions must increase: {vees:?}")));
            }
        }
        for &p in vees {
            if p == 0 || p > n {
                return Err(Error::Invalid(format!("down position {p} outside 1..{n}")));
            }
            s[p - 1] = Sym::Down;
        }
        Ok(Weight(s))
    }

    pub fn from_wedge_dist(n: usize, dist: &[usize]) -> Result<Self> {
        let mut s = vec![Sym::Down; n];
        for (i, d) in dist.iter().enumerate() {
            let p = i + 1 + d;
            if p > n || (i > 0 && *d < dist[i - 1]) {
                return Err(Error::Invalid(format!("bad up-distance sequence {dist:?}")));
            }
            s[p - 1] = Sym::Up;
        }
        Ok(Weight(s))
    }

    pub fn from_vee_dist(n: usize, k: usize, dist: &[usize]) -> Result<Self> {
        let pos: Vec<usize> = dist
            .iter()
            .enumerate()
            .map(|(j, d)| (k + j + 1).checked_sub(*d).filter(|&p| p >= 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid(format!("bad down-distance sequence {dist:?}")))?;
        Self::from_vee_pos(n, &pos)
    }

    /// Inverse of [`Weight::b_seq`] for a weight with `k` ups.
    pub fn from_b_seq(b: &BSequence, k: usize) -> Result<Self> {
        let n = b.n();
        let bad = || Error::Invalid(format!("{b} is not the b-sequence of a weight with {k} ups"));
        if n == 0 {
            return if k == 0 { Ok(Weight(vec![])) } else { Err(bad()) };
        }
        let mut syms = Vec::with_capacity(n);
        let right_of_first = b.get(1) as usize - 1;
        syms.push(match k.checked_sub(right_of_first) {
            Some(0) => Sym::Down,
            Some(1) => Sym::Up,
            _ => return Err(bad()),
        });
        for i in 1..n {
            syms.push(match b.get(i) as i64 - b.get(i + 1) as i64 {
                0 => Sym::Down,
                1 => Sym::Up,
                _ => return Err(bad()),
            });
        }
        let w = Weight(syms);
        if w.b_seq() != *b {
            return Err(bad());
        }
        Ok(w)
    }

    /// Reduced word `t^up_{k, z_k} ... t^up_{1, z_1}` with `t^up_{i,l} = s_i s_{i+1} ... s_{i+l-1}`.
    pub fn wedge_word(&self) -> Vec<usize> {
        let d = self.wedge_dist();
        let mut word = Vec::new();
        for i in (1..=d.len()).rev() {
            for j in 0..d[i - 1] {
                word.push(i + j);
            }
        }
        word
    }

    /// Reduced word `t^down_{k+1, z_{k+1}} ... t^down_{n, z_n}` with
    /// `t^down_{k+i,l} = s_{k+i-1} s_{k+i-2} ... s_{k+i-l}`.
    pub fn vee_word(&self) -> Vec<usize> {
        let k = self.k();
        let d = self.vee_dist();
        let mut word = Vec::new();
        for (idx, &l) in d.iter().enumerate() {
            let ki = k + idx + 1;
            for t in 1..=l {
                word.push(ki - t);
            }
        }
        word
    }

    /// The shortest coset representative `z` with `e . z = self`.
    pub fn to_permutation(&self) -> Permutation {
        let k = self.k();
        let mut w = vec![0; self.n()];
        let (mut up, mut down) = (0, 0);
        for (p, s) in self.0.iter().enumerate() {
            match s {
                Sym::Up => {
                    up += 1;
                    w[p] = up;
                }
                Sym::Down => {
                    down += 1;
                    w[p] = k + down;
                }
            }
        }
        Permutation(w)
    }

    /// Right action: `(self . w)[p] = self[w(p)]`.
    pub fn act(&self, w: &Permutation) -> Weight {
        assert_eq!(w.size(), self.n(), "permutation size");
        Weight((1..=self.n()).map(|p| self.at(w.apply(p))).collect())
    }

    /// Number of (down, up) pairs with the down on the left.
    pub fn length(&self) -> usize {
        let mut downs = 0;
        let mut l = 0;
        for s in &self.0 {
            match s {
                Sym::Down => downs += 1,
                Sym::Up => l += downs,
            }
        }
        l
    }

    /// Bruhat order generated by `^v > v^`: every down of `self` is weakly
    /// left of the corresponding down of `other`.
    pub fn bruhat_leq(&self, other: &Weight) -> Result<bool> {
        if self.n() != other.n() || self.k() != other.k() {
            return Err(Error::Invalid(format!("{self} and {other} lie in different blocks")));
        }
        Ok(self.vee_pos().iter().zip(other.vee_pos()).all(|(a, b)| *a <= b))
    }

    /// Number of ups having some down to their left.
    pub fn defect(&self) -> usize {
        match self.0.iter().position(|&s| s == Sym::Down) {
            None => 0,
            Some(first) => self.0[first..].iter().filter(|&&s| s == Sym::Up).count(),
        }
    }

    pub fn max_defect(n: usize, k: usize) -> usize {
        if k < n {
            k
        } else {
            0
        }
    }

    pub fn is_max_defect(&self) -> bool {
        self.defect() == Self::max_defect(self.n(), self.k())
    }

    /// Swap the first down with the first up unless already of maximal defect.
    pub fn tilde(&self) -> Weight {
        if self.is_max_defect() {
            return self.clone();
        }
        let mut s = self.0.clone();
        let d = s.iter().position(|&x| x == Sym::Down).expect("a down exists below maximal defect");
        let u = s.iter().position(|&x| x == Sym::Up).expect("an up exists below maximal defect");
        s.swap(d, u);
        Weight(s)
    }

    /// Flip the first symbol.
    pub fn flip_first(&self) -> Weight {
        let mut s = self.0.clone();
        if let Some(f) = s.first_mut() {
            *f = f.flip();
        }
        Weight(s)
    }

    /// Key ordering weights by ascending down-position tuples.
    pub fn block_key(&self) -> Vec<usize> {
        self.vee_pos()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Weight::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// All weights with `k` ups among `n` positions, by ascending down positions.
pub fn block(n: usize, k: usize) -> Result<Vec<Weight>> {
    if k > n {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (1..=n - k).collect();
    loop {
        out.push(Weight::from_vee_pos(n, &combo)?);
        let m = combo.len();
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if combo[i] < n - (m - 1 - i) {
                combo[i] += 1;
                for j in i + 1..m {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A permutation of `{1..m}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        let mut seen = vec![false; m + 1];
        for &x in &one_line {
            if x == 0 || x > m || seen[x] {
                return Err(Error::Invalid(format!("{one_line:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn simple(m: usize, i: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(i - 1, i);
        p
    }

    pub fn longest(m: usize) -> Self {
        Permutation((1..=m).rev().collect())
    }

    /// Longest element of the parabolic subgroup `S_k` inside `S_m`.
    pub fn longest_parabolic(m: usize, k: usize) -> Self {
        Permutation((1..=m).map(|p| if p <= k { k + 1 - p } else { p }).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p - 1]
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes");
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (p, &x) in self.0.iter().enumerate() {
            inv[x - 1] = p + 1;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let m = self.size();
        let mut l = 0;
        for i in 0..m {
            for j in i + 1..m {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `self * s_i`: swaps one-line entries `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Permutation(p)
    }

    /// `s_i * self`: swaps the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&x| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `l(s_i * self) < l(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// `s_{a_1} s_{a_2} ... s_{a_r}`.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(m);
        for &i in word {
            if i == 0 || i >= m {
                return Err(Error::Invalid(format!("simple reflection s_{i} not in S_{m}")));
            }
            p = p.mul_simple_right(i);
        }
        Ok(p)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..w.size()).find(|&i| w.has_left_descent(i)).expect("non-identity has a descent");
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let m = self.size();
        (0..m).map(|i| (i + 1..m).filter(|&j| self.0[j] < self.0[i]).count()).collect()
    }

    pub fn from_lehmer_code(code: &[usize]) -> Result<Self> {
        let m = code.len();
        let mut avail: Vec<usize> = (1..=m).collect();
        let mut out = Vec::with_capacity(m);
        for &c in code {
            if c >= avail.len() {
                return Err(Error::Invalid(format!("{code:?} is not a Lehmer code")));
            }
            out.push(avail.remove(c));
        }
        Ok(Permutation(out))
    }

    /// All of `S_m` in lexicographic one-line order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Bruhat order by the tableau criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let m = self.size();
        for i in 1..m {
            let mut a: Vec<usize> = self.0[..i].to_vec();
            let mut b: Vec<usize> = other.0[..i].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// Embed into `S_big` fixing the points above `self.size()`.
    pub fn embed(&self, big: usize) -> Permutation {
        let mut p = self.0.clone();
        p.extend(self.size() + 1..=big);
        Permutation(p)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation(vec![]));
        }
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::new(v).map_err(serde::de::Error::custom)
    }
}

/// A weight enhanced by a permutation of its ups.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EnhancedWeight {
    pub weight: Weight,
    pub sigma: Permutation,
}

impl EnhancedWeight {
    pub fn new(weight: Weight, sigma: Permutation) -> Result<Self> {
        if sigma.size() != weight.k() {
            return Err(Error::Invalid(format!(
                "enhancement of {weight} needs a permutation of {} letters",
                weight.k()
            )));
        }
        Ok(EnhancedWeight { weight, sigma })
    }

    /// The preorder `l^s <= m^t` iff `l < m`, or `l = m` and `len s <= len t`.
    pub fn preceq(&self, other: &EnhancedWeight) -> bool {
        let lw = self.weight.bruhat_leq(&other.weight).unwrap_or(false);
        if self.weight == other.weight {
            self.sigma.length() <= other.sigma.length()
        } else {
            lw
        }
    }

    /// Strict part used to cut out the higher cells.
    pub fn strictly_above(&self, other: &EnhancedWeight) -> bool {
        if self.weight == other.weight {
            self.sigma.length() > other.sigma.length()
        } else {
            other.weight.bruhat_leq(&self.weight).unwrap_or(false)
        }
    }
}

/// Compare two weights of one block by the block order.
pub fn block_cmp(a: &Weight, b: &Weight) -> Ordering {
    a.block_key().cmp(&b.block_key())
}
