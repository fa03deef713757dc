//! Exact planar geometry over arbitrary-precision rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `p/q` or a terminating decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Option<Q> {
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let whole = BigInt::from_str(if int.is_empty() || int == "-" { "0" } else { int }).ok()?;
        let digits = BigInt::from_str(frac).ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f = Q::new(digits, scale);
        let w = Q::from_integer(whole.abs());
        let v = w + f;
        return Some(if neg { -v } else { v });
    }
    Q::from_str(s).ok()
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(0.0)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point { x: q(x), y: q(y) }
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn add(&self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn scale(&self, k: &Q) -> Point {
        Point { x: &self.x * k, y: &self.y * k }
    }

    pub fn neg(&self) -> Point {
        Point { x: -&self.x, y: -&self.y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(&self) -> Point {
        Point { x: -&self.y, y: self.x.clone() }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

pub fn cross(a: &Point, b: &Point) -> Q {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Point, b: &Point) -> Q {
    &a.x * &b.x + &a.y * &b.y
}

/// Sign of the turn a → b → c: Greater for a left (counter-clockwise) turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Q::zero())
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Position of `p` along `ab` as a fraction in [0, 1]; `p` must be on the segment.
pub fn param(p: &Point, a: &Point, b: &Point) -> Q {
    let d = b.sub(a);
    if !d.x.is_zero() {
        (&p.x - &a.x) / d.x
    } else {
        (&p.y - &a.y) / d.y
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegHit {
    Disjoint,
    Point(Point),
    /// The segments share a piece of positive length.
    Overlap,
}

/// Intersection of closed segments `ab` and `cd` (both of positive length).
pub fn intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> SegHit {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // collinear: compare the parameter intervals
        let (s, t) = (param(c, a, b), param(d, a, b));
        let (lo, hi) = if s <= t { (s, t) } else { (t, s) };
        let lo = lo.max(Q::zero());
        let hi = hi.min(Q::one());
        return match lo.cmp(&hi) {
            Ordering::Less => SegHit::Overlap,
            Ordering::Equal => SegHit::Point(a.add(&b.sub(a).scale(&lo))),
            Ordering::Greater => SegHit::Disjoint,
        };
    }
    if o1 != o2 && o3 != o4 {
        let r = b.sub(a);
        let s = d.sub(c);
        let den = cross(&r, &s);
        let t = cross(&c.sub(a), &s) / den;
        return SegHit::Point(a.add(&r.scale(&t)));
    }
    SegHit::Disjoint
}

/// 0 for directions in the upper half-plane (or pointing along +x), 1 otherwise.
fn half(d: &Point) -> u8 {
    if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Orders non-zero directions by counter-clockwise angle from +x in [0, 2π).
pub fn ccw_cmp(a: &Point, b: &Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Q::zero().cmp(&cross(a, b)))
}

/// Whether `w` lies strictly inside the counter-clockwise sweep from `from` to `to`.
/// Equal `from` and `to` sweep the full turn.
pub fn strictly_inside_ccw(from: &Point, to: &Point, w: &Point) -> bool {
    let fw = ccw_cmp(from, w);
    let wt = ccw_cmp(w, to);
    match ccw_cmp(from, to) {
        Ordering::Less => fw == Ordering::Less && wt == Ordering::Less,
        _ => fw == Ordering::Less || wt == Ordering::Less,
    }
}

/// Sorts direction-tagged items clockwise starting from the largest ccw angle.
pub fn sort_clockwise<T>(items: &mut [(Point, T)]) {
    items.sort_by(|a, b| ccw_cmp(&b.0, &a.0));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/6"), Some(qf(1, 2)));
        assert_eq!(parse_rational("-1.25"), Some(qf(-5, 4)));
        assert_eq!(parse_rational("-0.5"), Some(qf(-1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7)));
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&qf(-6, 4)), "-3/2");
        assert_eq!(format_rational(&q(4)), "4");
    }

    #[test]
    fn crossing_segments() {
        let hit = intersect(&Point::int(0, 0), &Point::int(2, 2), &Point::int(0, 2), &Point::int(2, 0));
        assert_eq!(hit, SegHit::Point(Point::int(1, 1)));
        let hit = intersect(&Point::int(0, 0), &Point::int(2, 0), &Point::int(1, 0), &Point::int(3, 0));
        assert_eq!(hit, SegHit::Overlap);
        let hit = intersect(&Point::int(0, 0), &Point::int(1, 0), &Point::int(1, 0), &Point::int(3, 0));
        assert_eq!(hit, SegHit::Point(Point::int(1, 0)));
        let hit = intersect(&Point::int(0, 0), &Point::int(1, 0), &Point::int(0, 1), &Point::int(1, 1));
        assert_eq!(hit, SegHit::Disjoint);
        let hit = intersect(&Point::int(0, 0), &Point::int(2, 0), &Point::int(1, 0), &Point::int(1, 5));
        assert_eq!(hit, SegHit::Point(Point::int(1, 0)));
    }

    #[test]
    fn angular_order() {
        let mut dirs: Vec<(Point, usize)> =
            vec![(Point::int(1, 0), 0), (Point::int(0, 1), 1), (Point::int(-1, 0), 2), (Point::int(0, -1), 3)];
        sort_clockwise(&mut dirs);
        let order: Vec<usize> = dirs.iter().map(|d| d.1).collect();
        assert_eq!(order, vec![3, 2, 1, 0]);
        assert!(strictly_inside_ccw(&Point::int(1, 0), &Point::int(0, 1), &Point::int(1, 1)));
        assert!(!strictly_inside_ccw(&Point::int(0, 1), &Point::int(1, 0), &Point::int(1, 1)));
        assert!(strictly_inside_ccw(&Point::int(0, 1), &Point::int(1, 0), &Point::int(-1, -1)));
        assert!(strictly_inside_ccw(&Point::int(0, 1), &Point::int(0, 1), &Point::int(1, 0)));
    }
}
