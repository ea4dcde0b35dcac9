//! The polygon through `A = (q^n, 0)` and the mapped monomials
//! `A_i = (q^{n+i}, k-i)`, plus exact structural diagnostics.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::polynomial::{LatticePoint, SpecialPolynomial};

/// Closed vertex cycle `A, A_0, A_1, …, A_k` (clockwise). The closing edge
/// `A_k → A` runs along the x-axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialDiagram {
    vertices: Vec<LatticePoint>,
    source: SpecialPolynomial,
    degenerate: bool,
}

impl PolynomialDiagram {
    pub fn new(source: &SpecialPolynomial) -> Self {
        let mut vertices = Vec::with_capacity(source.k() as usize + 2);
        vertices.push(LatticePoint::new(source.coefficient(0), 0));
        vertices.extend(source.monomial_map());
        Self {
            vertices,
            source: source.clone(),
            degenerate: source.is_degenerate(),
        }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn source(&self) -> &SpecialPolynomial {
        &self.source
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `A_0 … A_k`, the part of the boundary above the x-axis.
    pub fn upper_chain(&self) -> &[LatticePoint] {
        &self.vertices[1..]
    }

    /// Edges of the closed cycle, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (&LatticePoint, &LatticePoint)> {
        let v = &self.vertices;
        (0..v.len()).map(move |i| (&v[i], &v[(i + 1) % v.len()]))
    }
}

pub fn build_diagram(p: &SpecialPolynomial) -> PolynomialDiagram {
    PolynomialDiagram::new(p)
}

/// Findings of [`validate_diagram`]. Nothing here is an error; a degenerate
/// diagram simply reports `simple = false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDiagnostics {
    pub vertex_count: usize,
    pub degenerate: bool,
    /// No edge meets another except adjacent edges at their shared vertex.
    pub simple: bool,
    /// Chain x strictly increasing and y dropping by exactly one per step.
    pub chain_monotone: bool,
    /// Chain edge slopes strictly increasing (the chain flattens).
    pub slopes_increasing: bool,
    /// Every turn is strict and has the same orientation.
    pub convex: bool,
}

pub fn validate_diagram(d: &PolynomialDiagram) -> DiagramDiagnostics {
    let pts: Vec<(BigInt, BigInt)> = d.vertices().iter().map(LatticePoint::signed).collect();
    DiagramDiagnostics {
        vertex_count: pts.len(),
        degenerate: d.is_degenerate(),
        simple: is_simple(&pts),
        chain_monotone: chain_monotone(d.upper_chain()),
        slopes_increasing: slopes_increasing(&pts[1..]),
        convex: is_convex(&pts),
    }
}

type Pt = (BigInt, BigInt);

/// Sign of the cross product `(b - a) × (c - a)`.
fn orient(a: &Pt, b: &Pt, c: &Pt) -> Ordering {
    let cross = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    cross.cmp(&BigInt::zero())
}

/// `c` lies within the bounding box of segment `ab` (assumes collinearity).
fn within_box(a: &Pt, b: &Pt, c: &Pt) -> bool {
    let between = |u: &BigInt, v: &BigInt, w: &BigInt| u.min(v) <= w && w <= u.max(v);
    between(&a.0, &b.0, &c.0) && between(&a.1, &b.1, &c.1)
}

fn segments_intersect(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1.is_eq() && within_box(a, b, c))
        || (o2.is_eq() && within_box(a, b, d))
        || (o3.is_eq() && within_box(c, d, a))
        || (o4.is_eq() && within_box(c, d, b))
}

fn is_simple(pts: &[Pt]) -> bool {
    let len = pts.len();
    if len < 3 {
        return false;
    }
    let edge = |i: usize| (&pts[i], &pts[(i + 1) % len]);
    for i in 0..len {
        let (a, b) = edge(i);
        if a == b {
            return false;
        }
        for j in i + 1..len {
            let (c, d) = edge(j);
            let adjacent = j == i + 1 || (i == 0 && j == len - 1);
            if adjacent {
                // Shared vertex is fine; folding back along the same line is not.
                let (shared, p, r) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                if orient(p, shared, r).is_eq()
                    && (within_box(shared, p, r) || within_box(shared, r, p))
                {
                    return false;
                }
            } else if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn chain_monotone(chain: &[LatticePoint]) -> bool {
    chain
        .windows(2)
        .all(|w| w[0].x < w[1].x && w[0].y == w[1].y + 1)
}

/// Compares `dy1/dx1 < dy2/dx2` by cross-multiplication; requires `dx > 0`.
fn slopes_increasing(chain: &[Pt]) -> bool {
    let deltas: Vec<(BigInt, BigInt)> = chain
        .windows(2)
        .map(|w| (&w[1].0 - &w[0].0, &w[1].1 - &w[0].1))
        .collect();
    if deltas.iter().any(|(dx, _)| !dx.is_positive()) {
        return false;
    }
    deltas
        .windows(2)
        .all(|w| &w[0].1 * &w[1].0 < &w[1].1 * &w[0].0)
}

fn is_convex(pts: &[Pt]) -> bool {
    let len = pts.len();
    let mut turn = None;
    for i in 0..len {
        match orient(&pts[i], &pts[(i + 1) % len], &pts[(i + 2) % len]) {
            Ordering::Equal => return false,
            o if turn.is_some_and(|t| t != o) => return false,
            o => turn = Some(o),
        }
    }
    true
}
