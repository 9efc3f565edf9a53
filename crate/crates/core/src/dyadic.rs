//! Dyadic rationals of `(0,1)` as a computable dense order with countably many dense colour
//! classes.
//!
//! A dyadic `a/2^k` (with `a` odd) has colour `t - 1` where `t` is the number of trailing
//! one bits of `a`. Every class is dense: an interval of length greater than `2^(n+2-k)` contains
//! a numerator `≡ 2^(n+1)-1 (mod 2^(n+2))` at exponent `k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest exponent representable.
pub const MAX_EXPONENT: u32 = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u64,
    exp: u32,
}

/// A point of `[0,1]`: a dyadic or one of the two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Point {
    num: u64,
    exp: u32,
}

impl Point {
    pub(crate) const ZERO: Point = Point { num: 0, exp: 0 };
    pub(crate) const ONE: Point = Point { num: 1, exp: 0 };

    fn scaled(self, k: u32) -> u128 {
        (self.num as u128) << (k.max(self.exp) - self.exp)
    }

    fn cmp_point(self, other: Point) -> Ordering {
        let k = self.exp.max(other.exp);
        self.scaled(k).cmp(&other.scaled(k))
    }
}

impl From<Dyadic> for Point {
    fn from(d: Dyadic) -> Point {
        Point { num: d.num, exp: d.exp }
    }
}

impl Dyadic {
    /// `num / 2^exp`; `num` must be odd and below `2^exp`.
    pub fn new(num: u64, exp: u32) -> Result<Self> {
        if exp == 0 || exp > MAX_EXPONENT {
            return Err(Error::Domain(format!("exponent {exp} outside 1..={MAX_EXPONENT}")));
        }
        if num % 2 == 0 || num >= 1u64 << exp {
            return Err(Error::Domain(format!("{num}/2^{exp} is not an odd numerator in (0,1)")));
        }
        Ok(Dyadic { num, exp })
    }

    pub fn half() -> Self {
        Dyadic { num: 1, exp: 1 }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn color(self) -> u32 {
        self.num.trailing_ones() - 1
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / (1u64 << self.exp) as f64
    }

    /// Every dyadic with exponent at most `max_exp`, in increasing order.
    pub fn all_up_to(max_exp: u32) -> Vec<Dyadic> {
        let k = max_exp.min(MAX_EXPONENT);
        if k == 0 {
            return Vec::new();
        }
        (1..1u64 << k)
            .map(|a| {
                let tz = a.trailing_zeros();
                Dyadic { num: a >> tz, exp: k - tz }
            })
            .collect()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        Point::from(*self).cmp_point(Point::from(*other))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, 1u64 << self.exp)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `a/b` with `b` a power of two (also written `2^k`); the fraction is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("`{s}` is not a dyadic fraction a/2^k in (0,1)"));
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim();
        let exp = if let Some(k) = b.strip_prefix("2^") {
            k.parse::<u32>().map_err(|_| bad())?
        } else {
            let b: u64 = b.parse().map_err(|_| bad())?;
            if !b.is_power_of_two() {
                return Err(bad());
            }
            b.trailing_zeros()
        };
        if a == 0 || exp > MAX_EXPONENT || a >= 1u64 << exp {
            return Err(bad());
        }
        let tz = a.trailing_zeros();
        Dyadic::new(a >> tz, exp - tz).map_err(|_| bad())
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The least-exponent, then least-numerator, dyadic strictly between `lo` and `hi` whose
/// numerator is `≡ residue (mod 2^modulus_bits)`.
fn simplest(lo: Point, hi: Point, modulus_bits: u32, residue: u64) -> Result<Dyadic> {
    if lo.cmp_point(hi) != Ordering::Less {
        return Err(Error::Order("empty interval".into()));
    }
    let modulus = 1u128 << modulus_bits;
    for k in 1..=MAX_EXPONENT {
        if (residue as u128) >= 1u128 << k {
            continue;
        }
        let floor_lo = if k >= lo.exp {
            (lo.num as u128) << (k - lo.exp)
        } else {
            (lo.num as u128) >> (lo.exp - k)
        };
        let least = floor_lo + 1;
        let r = residue as u128;
        let a = if least <= r {
            r
        } else {
            r + (least - r).div_ceil(modulus) * modulus
        };
        if a >= 1u128 << k {
            continue;
        }
        let cand = Point { num: a as u64, exp: k };
        if cand.cmp_point(hi) == Ordering::Less {
            return Dyadic::new(a as u64, k);
        }
    }
    Err(Error::TooLarge(format!("no suitable dyadic with exponent ≤ {MAX_EXPONENT}")))
}

pub(crate) fn between_points(lo: Point, hi: Point, color: u32) -> Result<Dyadic> {
    if color + 2 > MAX_EXPONENT {
        return Err(Error::TooLarge(format!("colour {color}")));
    }
    simplest(lo, hi, color + 2, (1u64 << (color + 1)) - 1)
}

/// The canonical dyadic of colour `n` strictly between `x` and `y`: least exponent, then least
/// numerator.
pub fn between(x: Dyadic, y: Dyadic, n: u32) -> Result<Dyadic> {
    if x >= y {
        return Err(Error::Order(format!("{x} is not below {y}")));
    }
    between_points(x.into(), y.into(), n)
}

/// The canonical dyadic of colour `n` above `x`.
pub fn above(x: Dyadic, n: u32) -> Result<Dyadic> {
    between_points(x.into(), Point::ONE, n)
}

/// The canonical dyadic of colour `n` below `y`.
pub fn below(y: Dyadic, n: u32) -> Result<Dyadic> {
    between_points(Point::ZERO, y.into(), n)
}

/// The canonical dyadic of colour `n`.
pub fn first_of_color(n: u32) -> Result<Dyadic> {
    between_points(Point::ZERO, Point::ONE, n)
}

/// A partial order- and colour-preserving map on dyadics, given by finitely many seed pairs and
/// extended lazily.
///
/// The image of a query depends only on the seeds and the query. Within a gap between
/// consecutive seeds (or the endpoints 0 and 1) the source gap's simplest dyadic is sent to the
/// simplest dyadic of the same colour in the image gap, and the construction recurses into the
/// side containing the query.
#[derive(Debug, Clone)]
pub struct ColorOrderMap {
    seeds: BTreeMap<Dyadic, Dyadic>,
    memo: BTreeMap<Dyadic, Dyadic>,
}

impl ColorOrderMap {
    pub fn new(pairs: impl IntoIterator<Item = (Dyadic, Dyadic)>) -> Result<Self> {
        let mut seeds = BTreeMap::new();
        for (s, t) in pairs {
            if s.color() != t.color() {
                return Err(Error::Constraint(format!(
                    "{s} has colour {} but {t} has colour {}",
                    s.color(),
                    t.color()
                )));
            }
            if let Some(prev) = seeds.insert(s, t) {
                if prev != t {
                    return Err(Error::Constraint(format!("{s} sent to both {prev} and {t}")));
                }
            }
        }
        let images: Vec<Dyadic> = seeds.values().copied().collect();
        if images.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Constraint("seed pairs do not preserve the order".into()));
        }
        Ok(ColorOrderMap { seeds, memo: BTreeMap::new() })
    }

    pub fn identity() -> Self {
        ColorOrderMap { seeds: BTreeMap::new(), memo: BTreeMap::new() }
    }

    pub fn seeds(&self) -> impl Iterator<Item = (Dyadic, Dyadic)> + '_ {
        self.seeds.iter().map(|(&s, &t)| (s, t))
    }

    /// The image of `q`.
    pub fn extend_map(&mut self, q: Dyadic) -> Result<Dyadic> {
        if let Some(&t) = self.seeds.get(&q) {
            return Ok(t);
        }
        if let Some(&t) = self.memo.get(&q) {
            return Ok(t);
        }
        let (mut s_lo, mut t_lo) = match self.seeds.range(..q).next_back() {
            Some((&s, &t)) => (Point::from(s), Point::from(t)),
            None => (Point::ZERO, Point::ZERO),
        };
        let (mut s_hi, mut t_hi) = match self.seeds.range(q..).next() {
            Some((&s, &t)) => (Point::from(s), Point::from(t)),
            None => (Point::ONE, Point::ONE),
        };
        let image = loop {
            let pivot = simplest(s_lo, s_hi, 1, 1)?;
            let pivot_image = between_points(t_lo, t_hi, pivot.color())?;
            match q.cmp(&pivot) {
                Ordering::Equal => break pivot_image,
                Ordering::Less => {
                    s_hi = pivot.into();
                    t_hi = pivot_image.into();
                }
                Ordering::Greater => {
                    s_lo = pivot.into();
                    t_lo = pivot_image.into();
                }
            }
        };
        self.memo.insert(q, image);
        Ok(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn colors() {
        assert_eq!(d("1/2").color(), 0);
        assert_eq!(d("3/4").color(), 1);
        assert_eq!(d("7/8").color(), 2);
        assert_eq!(d("5/8").color(), 0);
        assert_eq!(d("11/16").color(), 1);
    }

    #[test]
    fn between_examples() {
        assert_eq!(between(d("1/2"), d("3/4"), 0).unwrap(), d("5/8"));
        assert_eq!(between(d("1/2"), d("3/4"), 1).unwrap(), d("11/16"));
        assert!(matches!(between(d("3/4"), d("1/2"), 0), Err(Error::Order(_))));
        assert!(matches!(between(d("1/2"), d("1/2"), 0), Err(Error::Order(_))));
        assert_eq!(first_of_color(1).unwrap(), d("3/4"));
        assert_eq!(first_of_color(0).unwrap(), d("1/2"));
    }

    #[test]
    fn parsing() {
        assert_eq!(d("2/4"), d("1/2"));
        assert_eq!(d("5/2^3"), d("5/8"));
        assert_eq!(d("11/16").to_string(), "11/16");
        for bad in ["1/3", "0/2", "2/2", "3/2", "x", "1/0", "-1/2"] {
            assert!(bad.parse::<Dyadic>().is_err(), "{bad}");
        }
    }

    #[test]
    fn map_examples() {
        let mut m = ColorOrderMap::new([(d("1/2"), d("1/2"))]).unwrap();
        assert_eq!(m.extend_map(d("1/2")).unwrap(), d("1/2"));
        assert_eq!(m.extend_map(d("5/8")).unwrap(), d("5/8"));
        assert!(matches!(
            ColorOrderMap::new([(d("1/2"), d("1/2")), (d("5/8"), d("3/4"))]),
            Err(Error::Constraint(_))
        ));
        let mut m = ColorOrderMap::new([(d("1/4"), d("1/8"))]).unwrap();
        let img = m.extend_map(d("1/2")).unwrap();
        assert!(img > d("1/8") && img.color() == 0);
        assert!(matches!(
            ColorOrderMap::new([(d("1/4"), d("3/4")), (d("1/2"), d("1/2"))]),
            Err(Error::Constraint(_))
        ));
    }

    #[test]
    fn enumeration() {
        let all = Dyadic::all_up_to(3);
        assert_eq!(all.len(), 7);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.iter().filter(|x| x.color() == 1).count(), 2);
    }
}
