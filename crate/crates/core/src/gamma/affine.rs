use serde::{Deserialize, Serialize};

use super::prime::{is_prime, largest_prime_leq};
use crate::coloured::ColouredGraph;
use crate::error::{Error, Result};

/// Guards against `floor` landing one below an integer because of rounding
/// in `(1 - eps) * delta`.
const FLOOR_SLACK: f64 = 1e-9;

/// A point of the affine plane over `F_s`.
pub type Point = (u64, u64);

/// `q`-coloured graph on points of `F_s^2`: two points are joined iff their
/// line lies in one of the first `q` parallel classes, coloured by class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineGamma {
    pub s: u64,
    pub q: usize,
    pub delta: usize,
    pub points: Vec<Point>,
    pub coloured: ColouredGraph,
}

/// Line identifier of `point` within parallel class `class`.
///
/// Classes `0..s` are the slopes `m` (lines `y = m x + c`, identified by
/// `c`); class `s` is the vertical class (identified by `x`).
pub fn line_id(s: u64, class: u64, point: Point) -> u64 {
    let (x, y) = point;
    if class == s {
        x
    } else {
        (y + s * s - (class * x) % s) % s
    }
}

fn checked_vertex_count(q: usize, delta: usize) -> Result<usize> {
    q.checked_mul(delta.saturating_sub(1))
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::invalid("q(delta-1)+1 overflows"))
}

/// Checks every finite-scale inequality of the affine construction and
/// returns the prime `s`.
pub fn affine_feasibility(delta: usize, q: usize, lambda: usize, eps: f64) -> Result<u64> {
    if delta == 0 || q == 0 || lambda == 0 {
        return Err(Error::invalid("delta, q and lambda must be positive"));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(format!("eps {eps} not in (0,1)")));
    }
    let slack = (1.0 - eps) * delta as f64;
    let target = slack / lambda as f64;
    let m = (target + FLOOR_SLACK).floor() as u64;
    if m < 2 {
        return Err(Error::Infeasible(format!(
            "(1-eps)*delta/lambda = {target} admits no prime"
        )));
    }
    let s = largest_prime_leq(m)?;
    if q as u64 > s {
        return Err(Error::Infeasible(format!("q = {q} exceeds s = {s}")));
    }
    let n_points = checked_vertex_count(q, delta)? as u64;
    if n_points > s * s {
        return Err(Error::Infeasible(format!(
            "q(delta-1)+1 = {n_points} exceeds s^2 = {}",
            s * s
        )));
    }
    let per_clique = (slack / s as f64 + FLOOR_SLACK).floor() as usize;
    if per_clique < lambda {
        return Err(Error::Infeasible(format!(
            "floor((1-eps)*delta/s) = {per_clique} is below lambda = {lambda}"
        )));
    }
    Ok(s)
}

/// Builds the gadget for `(delta, q, lambda, eps)` after checking feasibility.
pub fn build_affine_gamma(delta: usize, q: usize, lambda: usize, eps: f64) -> Result<AffineGamma> {
    let s = affine_feasibility(delta, q, lambda, eps)?;
    affine_gamma_with_prime(s, q, delta)
}

/// Builds the gadget over a given prime `s`, checking only that the plane is
/// large enough (`q <= s`, `q(delta-1)+1 <= s^2`).
///
/// Points are the first `q(delta-1)+1` points of `F_s^2` in row-major order
/// `(0,0), (0,1), …, (0,s-1), (1,0), …`.
pub fn affine_gamma_with_prime(s: u64, q: usize, delta: usize) -> Result<AffineGamma> {
    if !is_prime(s) {
        return Err(Error::invalid(format!("{s} is not prime")));
    }
    if q == 0 || delta == 0 {
        return Err(Error::invalid("delta and q must be positive"));
    }
    if q as u64 > s {
        return Err(Error::Infeasible(format!("q = {q} exceeds s = {s}")));
    }
    let n_points = checked_vertex_count(q, delta)?;
    if n_points as u64 > s * s {
        return Err(Error::Infeasible(format!(
            "q(delta-1)+1 = {n_points} exceeds s^2 = {}",
            s * s
        )));
    }
    let points: Vec<Point> = (0..n_points as u64).map(|i| (i / s, i % s)).collect();
    affine_gamma_on_points(s, q, delta, points)
}

/// Builds the gadget on an explicit list of distinct points of `F_s^2`.
/// Used to re-derive a serialised gadget from its point list.
pub fn affine_gamma_on_points(
    s: u64,
    q: usize,
    delta: usize,
    points: Vec<Point>,
) -> Result<AffineGamma> {
    if !is_prime(s) {
        return Err(Error::invalid(format!("{s} is not prime")));
    }
    if q == 0 || q as u64 > s {
        return Err(Error::invalid(format!("q = {q} must lie in 1..={s}")));
    }
    if points.len() != checked_vertex_count(q, delta)? {
        return Err(Error::invalid(format!(
            "expected q(delta-1)+1 points, got {}",
            points.len()
        )));
    }
    let mut seen = std::collections::HashSet::with_capacity(points.len());
    for &(x, y) in &points {
        if x >= s || y >= s {
            return Err(Error::invalid(format!("point ({x},{y}) outside F_{s}^2")));
        }
        if !seen.insert((x, y)) {
            return Err(Error::invalid(format!("repeated point ({x},{y})")));
        }
    }
    let n_points = points.len();
    let mut edges = Vec::new();
    for class in 0..q as u64 {
        let mut lines: Vec<Vec<usize>> = vec![Vec::new(); s as usize];
        for (i, &pt) in points.iter().enumerate() {
            lines[line_id(s, class, pt) as usize].push(i);
        }
        for line in &lines {
            for (a, &u) in line.iter().enumerate() {
                for &v in &line[a + 1..] {
                    edges.push((u, v, class as usize + 1));
                }
            }
        }
    }
    let coloured = ColouredGraph::from_coloured_edges(n_points, q, &edges)?;
    Ok(AffineGamma {
        s,
        q,
        delta,
        points,
        coloured,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Slope of the line through two points, computed from scratch with a
    /// modular inverse; `s` means vertical.
    fn slope(s: u64, a: Point, b: Point) -> u64 {
        if a.0 == b.0 {
            return s;
        }
        let dx = (b.0 + s - a.0) % s;
        let dy = (b.1 + s - a.1) % s;
        let inv = (1..s).find(|&t| dx * t % s == 1).unwrap();
        dy * inv % s
    }

    #[test]
    fn worked_example() {
        let g = build_affine_gamma(25, 4, 2, 0.04).unwrap();
        assert_eq!((g.s, g.points.len()), (11, 97));
        assert!(g.coloured.max_class_degree() <= 10);
        // every edge carries the colour of its slope class
        for &(u, v, c) in g.coloured.coloured_edges() {
            assert_eq!(slope(11, g.points[u], g.points[v]) as usize + 1, c);
        }
        // and every pair in the first q classes is an edge
        for u in 0..97 {
            for v in u + 1..97 {
                let cls = slope(11, g.points[u], g.points[v]);
                assert_eq!(g.coloured.graph().has_edge(u, v), cls < 4);
            }
        }
    }

    #[test]
    fn infeasible_parameters() {
        let e = build_affine_gamma(25, 12, 2, 0.04).unwrap_err();
        assert!(
            matches!(&e, Error::Infeasible(m) if m.contains("exceeds s = 11")),
            "{e}"
        );
        let e = build_affine_gamma(4, 2, 4, 0.1).unwrap_err();
        assert!(matches!(e, Error::Infeasible(_)));
        assert!(build_affine_gamma(25, 4, 2, 1.5).is_err());
        assert!(affine_gamma_with_prime(6, 2, 3).is_err());
    }

    #[test]
    fn parallel_classes_partition_the_plane() {
        for s in [2u64, 3, 5, 7, 11, 13, 31, 53, 101] {
            for class in 0..=s {
                let mut sizes = vec![0u64; s as usize];
                for x in 0..s {
                    for y in 0..s {
                        sizes[line_id(s, class, (x, y)) as usize] += 1;
                    }
                }
                assert!(sizes.iter().all(|&c| c == s), "s={s} class={class}");
            }
        }
    }

    #[test]
    fn classes_are_disjoint_cliques() {
        for (s, q, delta) in [(5u64, 2usize, 6usize), (7, 3, 10), (11, 4, 25), (13, 5, 30)] {
            let g = affine_gamma_with_prime(s, q, delta).unwrap();
            for c in 1..=q {
                let class = g.coloured.class(c);
                for comp in class.components() {
                    for &v in &comp {
                        assert_eq!(class.degree(v), comp.len() - 1);
                    }
                }
                let mut on_line = vec![0usize; s as usize];
                for &pt in &g.points {
                    on_line[line_id(s, c as u64 - 1, pt) as usize] += 1;
                }
                assert_eq!(class.max_degree() + 1, *on_line.iter().max().unwrap());
            }
        }
    }
}
