//! Fano polygons cut out by the halfplanes `⟨m, w_i⟩ ≥ −c_i`, and the way back
//! from a polygon without remainders to toric seed data.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{rat, Rat};
use crate::toric::{wedge, NullRoot, ToricSeedData, V2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanoError {
    #[error("halfplane intersection is unbounded")]
    Unbounded,
    #[error("vertex {0:?} is not a lattice point")]
    NotLattice((String, String)),
    #[error("vertex {0:?} is not primitive")]
    NotPrimitiveVertex(V2),
    #[error("facet with normal {0:?} has l = {1} not divisible by c = {2}")]
    HasRemainders(V2, i64, i64),
    #[error("invalid polygon: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub w: V2,
    pub c: i64,
    /// Lattice length of the edge; zero if the halfplane only touches a vertex.
    #[serde(default)]
    pub l: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoPolygon {
    pub vertices: Vec<V2>,
    pub facets: Vec<Facet>,
}

/// Input form: either vertices or facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolygonSpec {
    Vertices { vertices: Vec<V2> },
    Facets { facets: Vec<FacetSpec> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetSpec {
    pub w: V2,
    pub c: i64,
}

impl PolygonSpec {
    pub fn build(&self) -> Result<FanoPolygon, FanoError> {
        match self {
            PolygonSpec::Vertices { vertices } => FanoPolygon::from_vertices(vertices),
            PolygonSpec::Facets { facets } => {
                FanoPolygon::from_halfplanes(&facets.iter().map(|f| (f.w, f.c)).collect::<Vec<_>>())
            }
        }
    }
}

fn gcd2(v: V2) -> i64 {
    v[0].gcd(&v[1])
}

/// Counterclockwise order by angle, starting at the direction `(0, 1)` inclusive.
pub fn ccw_from_up(a: V2, b: V2) -> Ordering {
    let key = |v: V2| -> u8 {
        // half-open sectors from (0,1)
        let c = wedge([0, 1], v);
        let d = v[1];
        if c == 0 && d > 0 {
            0
        } else if c > 0 {
            1
        } else if c == 0 {
            2
        } else {
            3
        }
    };
    key(a).cmp(&key(b)).then_with(|| 0.cmp(&wedge(a, b)))
}

fn sort_ccw(vs: &mut [V2]) {
    vs.sort_by(|&a, &b| ccw_from_up(a, b));
}

impl FanoPolygon {
    /// Intersection of `⟨m, w⟩ ≥ −c` over the given halfplanes.
    pub fn from_halfplanes(hs: &[(V2, i64)]) -> Result<FanoPolygon, FanoError> {
        let mut planes: Vec<(V2, i64)> = Vec::new();
        for &(w, c) in hs {
            if w == [0, 0] {
                return Err(FanoError::Invalid("zero normal".into()));
            }
            if c <= 0 {
                return Err(FanoError::Invalid(format!("c = {c} must be positive")));
            }
            match planes.iter().find(|p| p.0 == w) {
                Some(p) if p.1 != c => {
                    return Err(FanoError::Invalid(format!("normal {w:?} with two values of c")))
                }
                Some(_) => {}
                None => planes.push((w, c)),
            }
        }
        let mut normals: Vec<V2> = planes.iter().map(|p| p.0).collect();
        sort_ccw(&mut normals);
        let s = normals.len();
        if s < 3 || (0..s).any(|j| wedge(normals[j], normals[(j + 1) % s]) <= 0) {
            return Err(FanoError::Unbounded);
        }
        let inside = |x: &Rat, y: &Rat| {
            planes
                .iter()
                .all(|&(w, c)| x * rat(w[0]) + y * rat(w[1]) >= rat(-c))
        };
        let mut verts: Vec<V2> = Vec::new();
        for (i, &(a, ca)) in planes.iter().enumerate() {
            for &(b, cb) in &planes[i + 1..] {
                let det = wedge(a, b);
                if det == 0 {
                    continue;
                }
                // a·m = -ca, b·m = -cb
                let x = Rat::new((-ca * b[1] + cb * a[1]).into(), det.into());
                let y = Rat::new((-cb * a[0] + ca * b[0]).into(), det.into());
                if !inside(&x, &y) {
                    continue;
                }
                if !x.is_integer() || !y.is_integer() {
                    return Err(FanoError::NotLattice((x.to_string(), y.to_string())));
                }
                let v = [
                    i64::try_from(x.to_integer()).expect("small"),
                    i64::try_from(y.to_integer()).expect("small"),
                ];
                if !verts.contains(&v) {
                    verts.push(v);
                }
            }
        }
        sort_ccw(&mut verts);
        for &v in &verts {
            if gcd2(v) != 1 {
                return Err(FanoError::NotPrimitiveVertex(v));
            }
        }
        let mut facets = Vec::with_capacity(s);
        for w in normals {
            let c = planes.iter().find(|p| p.0 == w).expect("present").1;
            let on: Vec<V2> = verts
                .iter()
                .copied()
                .filter(|v| v[0] * w[0] + v[1] * w[1] == -c)
                .collect();
            let l = match on.as_slice() {
                [p, q] => gcd2([q[0] - p[0], q[1] - p[1]]),
                _ => 0,
            };
            facets.push(Facet { w, c, l });
        }
        Ok(FanoPolygon {
            vertices: verts,
            facets,
        })
    }

    /// Polygon from its vertices, in any order.
    pub fn from_vertices(vs: &[V2]) -> Result<FanoPolygon, FanoError> {
        let mut vs = vs.to_vec();
        vs.dedup();
        sort_ccw(&mut vs);
        let k = vs.len();
        if k < 3 {
            return Err(FanoError::Invalid("fewer than three vertices".into()));
        }
        let mut hs = Vec::with_capacity(k);
        for j in 0..k {
            let (p, q) = (vs[j], vs[(j + 1) % k]);
            let d = [q[0] - p[0], q[1] - p[1]];
            let g = gcd2(d);
            let w = [-d[1] / g, d[0] / g];
            let c = -(p[0] * w[0] + p[1] * w[1]);
            if c <= 0 {
                return Err(FanoError::Invalid(
                    "origin is not strictly inside the polygon".into(),
                ));
            }
            hs.push((w, c));
        }
        let poly = FanoPolygon::from_halfplanes(&hs)?;
        if poly.vertices != vs {
            return Err(FanoError::Invalid("vertices are not in convex position".into()));
        }
        Ok(poly)
    }

    pub fn facet(&self, w: V2) -> Option<&Facet> {
        self.facets.iter().find(|f| f.w == w)
    }

    /// Lattice points of `P` as `(point, on boundary)`.
    pub fn lattice_points(&self) -> Vec<(V2, bool)> {
        let (x0, x1, y0, y1) = self.bounds();
        let mut out = Vec::new();
        for y in y0..=y1 {
            for x in x0..=x1 {
                let vals: Vec<i64> = self
                    .facets
                    .iter()
                    .map(|f| x * f.w[0] + y * f.w[1] + f.c)
                    .collect();
                if vals.iter().all(|&v| v >= 0) {
                    out.push(([x, y], vals.contains(&0)));
                }
            }
        }
        out
    }

    fn bounds(&self) -> (i64, i64, i64, i64) {
        let xs = self.vertices.iter().map(|v| v[0]);
        let ys = self.vertices.iter().map(|v| v[1]);
        (
            xs.clone().min().unwrap_or(0),
            xs.max().unwrap_or(0),
            ys.clone().min().unwrap_or(0),
            ys.max().unwrap_or(0),
        )
    }

    /// Plot with `o` vertices, `*` other boundary points, `.` interior, `+` the origin.
    pub fn ascii_plot(&self) -> String {
        let (x0, x1, y0, y1) = self.bounds();
        let pts: BTreeMap<(i64, i64), bool> =
            self.lattice_points().into_iter().map(|(p, b)| ((p[0], p[1]), b)).collect();
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            let row: Vec<String> = (x0..=x1)
                .map(|x| {
                    let ch = if self.vertices.contains(&[x, y]) {
                        'o'
                    } else if x == 0 && y == 0 {
                        '+'
                    } else {
                        match pts.get(&(x, y)) {
                            Some(true) => '*',
                            Some(false) => '.',
                            None => ' ',
                        }
                    };
                    ch.to_string()
                })
                .collect();
            out.push_str(row.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `P = ⋂ H⁺_{w_i, c_i}` for q-Painlevé data and its null root.
pub fn fano_polygon(data: &ToricSeedData, nr: &NullRoot) -> Result<FanoPolygon, FanoError> {
    if nr.c.len() != data.len() {
        return Err(FanoError::Invalid("null root has the wrong length".into()));
    }
    let hs: Vec<(V2, i64)> = data.vectors.iter().copied().zip(nr.c.iter().copied()).collect();
    let poly = FanoPolygon::from_halfplanes(&hs)?;
    for f in &poly.facets {
        let m = data.vectors.iter().filter(|&&w| w == f.w).count() as i64;
        if f.l != m * f.c {
            return Err(FanoError::Invalid(format!(
                "facet {:?}: l = {} but m·c = {}",
                f.w,
                f.l,
                m * f.c
            )));
        }
    }
    Ok(poly)
}

pub fn no_remainders(poly: &FanoPolygon) -> bool {
    poly.facets.iter().all(|f| f.l % f.c == 0)
}

/// `l_F / c_F` copies of each facet normal, counterclockwise from `(0, 1)`.
pub fn seed_from_polygon(poly: &FanoPolygon) -> Result<ToricSeedData, FanoError> {
    let mut vectors = Vec::new();
    for f in &poly.facets {
        if f.l % f.c != 0 {
            return Err(FanoError::HasRemainders(f.w, f.l, f.c));
        }
        vectors.extend(std::iter::repeat_n(f.w, (f.l / f.c) as usize));
    }
    Ok(ToricSeedData::new(vectors))
}

/// Multiset of vectors with multiplicities.
pub fn vector_multiset(data: &ToricSeedData) -> BTreeMap<V2, usize> {
    let mut m = BTreeMap::new();
    for &v in &data.vectors {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

/// Area of a lattice polygon, doubled.
pub fn double_area(poly: &FanoPolygon) -> i64 {
    let k = poly.vertices.len();
    (0..k)
        .map(|j| wedge(poly.vertices[j], poly.vertices[(j + 1) % k]))
        .sum::<i64>()
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::analyze;

    fn poly_of(vs: &[V2]) -> FanoPolygon {
        let d = ToricSeedData::new(vs.to_vec());
        let a = analyze(&d, false).unwrap();
        fano_polygon(&d, &a.null_root).unwrap()
    }

    #[test]
    fn e0_triangle() {
        let p = poly_of(&[[-1, 2], [-1, -1], [2, -1]]);
        let mut want = vec![[0, 1], [-1, -1], [1, 0]];
        sort_ccw(&mut want);
        assert_eq!(p.vertices, want);
        assert!(p.facets.iter().all(|f| f.c == 1 && f.l == 1));
        let s = seed_from_polygon(&p).unwrap();
        assert_eq!(s.vectors, vec![[-1, 2], [-1, -1], [2, -1]]);
    }

    #[test]
    fn e5_square() {
        let up = [0, 1];
        let p = poly_of(&[up, up, [-1, 0], [-1, 0], [0, -1], [0, -1], [1, 0], [1, 0]]);
        assert_eq!(p.vertices.len(), 4);
        assert!(p.vertices.iter().all(|v| v[0].abs() == 1 && v[1].abs() == 1));
        assert!(p.facets.iter().all(|f| f.c == 1 && f.l == 2));
        assert!(no_remainders(&p));
        assert_eq!(seed_from_polygon(&p).unwrap().len(), 8);
    }

    #[test]
    fn remainders() {
        let t = FanoPolygon::from_vertices(&[[1, 0], [0, 1], [-1, -1]]).unwrap();
        assert!(t.facets.iter().all(|f| f.l == 1 && f.c == 1));
        assert!(no_remainders(&t));
        let mut bad = t.clone();
        bad.facets[0].c = 2;
        assert!(!no_remainders(&bad));
        assert!(matches!(seed_from_polygon(&bad), Err(FanoError::HasRemainders(..))));
        // as halfplanes the doubled facet moves off the lattice
        let hs: Vec<(V2, i64)> = bad.facets.iter().map(|f| (f.w, f.c)).collect();
        assert!(matches!(
            FanoPolygon::from_halfplanes(&hs),
            Err(FanoError::NotLattice(_))
        ));
    }

    #[test]
    fn unbounded() {
        let e = FanoPolygon::from_halfplanes(&[([1, 0], 1), ([0, 1], 1)]).unwrap_err();
        assert_eq!(e, FanoError::Unbounded);
    }

    #[test]
    fn plot_marks_origin() {
        let t = FanoPolygon::from_vertices(&[[1, 0], [0, 1], [-1, -1]]).unwrap();
        let s = t.ascii_plot();
        assert!(s.contains('+'));
        assert_eq!(s.matches('o').count(), 3);
    }
}
