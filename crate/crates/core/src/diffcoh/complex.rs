//! Finite simplicial complexes with ordered vertices, their coboundary
//! matrices, and the four fixture triangulations the test suite leans on.
//!
//! Simplices are stored as strictly increasing vertex lists, sorted
//! lexicographically within each dimension; that ordering fixes both the
//! orientation convention and the coordinates of every cochain. The
//! coboundary is (δf)(v₀…v_{q+1}) = Σᵢ (−1)ⁱ f(v₀…v̂ᵢ…v_{q+1}), so
//! δ∘δ = 0 holds on the nose.

use crate::linalg::IntMat;
use num::{BigInt, One};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex {0:?} is not strictly increasing")]
    NotSorted(Vec<usize>),
    #[error("simplex {0:?} uses a vertex ≥ {1}")]
    VertexOutOfRange(Vec<usize>, usize),
    #[error("duplicate simplex {0:?}")]
    Duplicate(Vec<usize>),
    #[error("face {0:?} of simplex {1:?} is missing")]
    MissingFace(Vec<usize>, Vec<usize>),
}

/// Simplicial complex on vertices 0..n with explicit simplex lists per
/// dimension (dimension 0 is implicit: every vertex is present).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    /// simplices[d] lists the (d+1)-dimensional simplices, d ≥ 0 meaning
    /// dimension d+1 (edges at index 0), each sorted, lists sorted.
    higher: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Builds and validates: simplices strictly increasing, in range,
    /// distinct, every face present one dimension down.
    pub fn new(
        vertices: usize,
        mut higher: Vec<Vec<Vec<usize>>>,
    ) -> Result<SimplicialComplex, ComplexError> {
        while higher.last().is_some_and(Vec::is_empty) {
            higher.pop();
        }
        for (d, list) in higher.iter_mut().enumerate() {
            let dim = d + 1;
            for s in list.iter() {
                if s.len() != dim + 1 || s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(ComplexError::NotSorted(s.clone()));
                }
                if s.iter().any(|&v| v >= vertices) {
                    return Err(ComplexError::VertexOutOfRange(s.clone(), vertices));
                }
            }
            list.sort();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(ComplexError::Duplicate(w[0].clone()));
            }
        }
        let complex = SimplicialComplex { vertices, higher };
        for d in 1..=complex.maxdim() {
            for s in complex.simplices(d) {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if d >= 2 && complex.index_of(d - 1, &face).is_none() {
                        return Err(ComplexError::MissingFace(face, s.clone()));
                    }
                }
            }
        }
        Ok(complex)
    }

    /// Builds the downward closure of the given top simplices.
    pub fn from_closure(
        vertices: usize,
        top: &[&[usize]],
    ) -> Result<SimplicialComplex, ComplexError> {
        let maxdim = top.iter().map(|s| s.len().saturating_sub(1)).max().unwrap_or(0);
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<usize>>> = vec![Default::default(); maxdim];
        let mut stack: Vec<Vec<usize>> = top.iter().map(|s| s.to_vec()).collect();
        while let Some(s) = stack.pop() {
            if s.len() < 2 {
                continue;
            }
            if by_dim[s.len() - 2].insert(s.clone()) {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    stack.push(face);
                }
            }
        }
        SimplicialComplex::new(
            vertices,
            by_dim.into_iter().map(|set| set.into_iter().collect()).collect(),
        )
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn maxdim(&self) -> usize {
        self.higher.len()
    }

    /// Number of d-simplices (0 beyond the top dimension).
    pub fn count(&self, d: usize) -> usize {
        if d == 0 {
            self.vertices
        } else {
            self.higher.get(d - 1).map_or(0, Vec::len)
        }
    }

    /// The d-simplices in their canonical (lexicographic) order; for d = 0
    /// the vertices are implicit, so this returns an owned list.
    pub fn simplices(&self, d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            (0..self.vertices).map(|v| vec![v]).collect()
        } else {
            self.higher.get(d - 1).cloned().unwrap_or_default()
        }
    }

    pub fn index_of(&self, d: usize, simplex: &[usize]) -> Option<usize> {
        if d == 0 {
            return match simplex {
                [v] if *v < self.vertices => Some(*v),
                _ => None,
            };
        }
        let list = self.higher.get(d - 1)?;
        list.binary_search_by(|s| s.as_slice().cmp(simplex)).ok()
    }

    /// Matrix of δ: C^q → C^{q+1} in the canonical bases
    /// (count(q+1) rows × count(q) columns).
    pub fn coboundary_matrix(&self, q: usize) -> IntMat {
        let rows = self.count(q + 1);
        let cols = self.count(q);
        let mut m = IntMat::zero(rows, cols);
        for (r, s) in self.simplices(q + 1).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let c = self.index_of(q, &face).expect("faces are present");
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(r, c, sign);
            }
        }
        m
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.maxdim())
            .map(|d| {
                let n = self.count(d) as i64;
                if d % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexDto {
    vertices: usize,
    simplices: BTreeMap<String, Vec<Vec<usize>>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut simplices = BTreeMap::new();
        for d in 1..=self.maxdim() {
            if self.count(d) > 0 {
                simplices.insert(d.to_string(), self.simplices(d));
            }
        }
        ComplexDto {
            vertices: self.vertices,
            simplices,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<SimplicialComplex, D::Error> {
        let dto = ComplexDto::deserialize(deserializer)?;
        let mut higher: Vec<Vec<Vec<usize>>> = Vec::new();
        for (key, list) in dto.simplices {
            let d: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bad dimension key {key:?}")))?;
            if d == 0 {
                return Err(D::Error::custom("dimension 0 is implied by \"vertices\""));
            }
            if higher.len() < d {
                higher.resize(d, Vec::new());
            }
            higher[d - 1] = list;
        }
        SimplicialComplex::new(dto.vertices, higher).map_err(D::Error::custom)
    }
}

/// A single point.
pub fn point() -> SimplicialComplex {
    SimplicialComplex::new(1, vec![]).expect("point complex is valid")
}

/// The triangle boundary: 3 vertices, 3 edges, a minimal circle.
pub fn circle() -> SimplicialComplex {
    SimplicialComplex::from_closure(3, &[&[0, 1], &[0, 2], &[1, 2]]).expect("circle is valid")
}

/// The 7-vertex torus (Császár): faces {i, i+1, i+3} and {i, i+2, i+3}
/// mod 7, with the complete graph on 7 vertices as edge set; every edge
/// lies in exactly two triangles and χ = 0.
pub fn torus() -> SimplicialComplex {
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for i in 0..7usize {
        let mut a = vec![i, (i + 1) % 7, (i + 3) % 7];
        let mut b = vec![i, (i + 2) % 7, (i + 3) % 7];
        a.sort();
        b.sort();
        faces.push(a);
        faces.push(b);
    }
    let refs: Vec<&[usize]> = faces.iter().map(Vec::as_slice).collect();
    SimplicialComplex::from_closure(7, &refs).expect("torus is valid")
}

/// The 6-vertex projective plane (antipodal quotient of the icosahedron):
/// 10 faces, all 15 edges, χ = 1.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_closure(
        6,
        &[
            &[0, 1, 4],
            &[0, 2, 4],
            &[0, 2, 3],
            &[0, 3, 5],
            &[0, 1, 5],
            &[1, 3, 4],
            &[1, 2, 5],
            &[1, 2, 3],
            &[2, 4, 5],
            &[3, 4, 5],
        ],
    )
    .expect("projective plane is valid")
}

/// Times each edge appears as a face of a triangle; 2 everywhere for a
/// closed surface.
pub fn edge_face_counts(x: &SimplicialComplex) -> Vec<usize> {
    let mut counts = vec![0usize; x.count(1)];
    for f in x.simplices(2) {
        for i in 0..3 {
            let mut e = f.clone();
            e.remove(i);
            counts[x.index_of(1, &e).expect("edge present")] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(SimplicialComplex::new(2, vec![vec![vec![0, 1]]]).is_ok());
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![vec![1, 0]]]),
            Err(ComplexError::NotSorted(vec![1, 0]))
        );
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![vec![0, 2]]]),
            Err(ComplexError::VertexOutOfRange(vec![0, 2], 2))
        );
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![vec![0, 1], vec![0, 1]]]),
            Err(ComplexError::Duplicate(vec![0, 1]))
        );
        // a triangle without one of its edges
        assert_eq!(
            SimplicialComplex::new(
                3,
                vec![vec![vec![0, 1], vec![1, 2]], vec![vec![0, 1, 2]]]
            ),
            Err(ComplexError::MissingFace(vec![0, 2], vec![0, 1, 2]))
        );
    }

    #[test]
    fn coboundary_squares_to_zero() {
        for x in [point(), circle(), torus(), projective_plane()] {
            for q in 0..=x.maxdim() {
                let d1 = x.coboundary_matrix(q);
                let d2 = x.coboundary_matrix(q + 1);
                assert!(d2.mul(&d1).is_zero(), "δ∘δ ≠ 0 at q = {q}");
            }
        }
    }

    #[test]
    fn fixture_counts_and_euler_characteristics() {
        let pt = point();
        assert_eq!((pt.count(0), pt.count(1)), (1, 0));
        assert_eq!(pt.euler_characteristic(), 1);

        let s1 = circle();
        assert_eq!((s1.count(0), s1.count(1), s1.count(2)), (3, 3, 0));
        assert_eq!(s1.euler_characteristic(), 0);

        let t2 = torus();
        assert_eq!((t2.count(0), t2.count(1), t2.count(2)), (7, 21, 14));
        assert_eq!(t2.euler_characteristic(), 0);
        assert!(edge_face_counts(&t2).iter().all(|&c| c == 2));

        let rp2 = projective_plane();
        assert_eq!((rp2.count(0), rp2.count(1), rp2.count(2)), (6, 15, 10));
        assert_eq!(rp2.euler_characteristic(), 1);
        assert!(edge_face_counts(&rp2).iter().all(|&c| c == 2));
    }

    #[test]
    fn circle_coboundary_matrix_is_the_expected_incidence() {
        let s1 = circle();
        // edges [0,1],[0,2],[1,2]; δ⁰ row e = f(v₁) − f(v₀)
        let d0 = s1.coboundary_matrix(0);
        assert_eq!(
            d0,
            IntMat::from_i64_rows(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]])
        );
        // no 2-simplices: δ¹ has zero rows
        assert_eq!(s1.coboundary_matrix(1).rows(), 0);
        assert_eq!(s1.coboundary_matrix(1).cols(), 3);
    }

    #[test]
    fn json_round_trip() {
        let s1 = circle();
        let s = serde_json::to_string(&s1).unwrap();
        assert_eq!(s, r#"{"vertices":3,"simplices":{"1":[[0,1],[0,2],[1,2]]}}"#);
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, s1);

        let rp2 = projective_plane();
        let s = serde_json::to_string(&rp2).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rp2);

        // missing faces are rejected at parse time
        let bad = r#"{"vertices":3,"simplices":{"2":[[0,1,2]]}}"#;
        assert!(serde_json::from_str::<SimplicialComplex>(bad).is_err());
    }

    #[test]
    fn index_lookup() {
        let t2 = torus();
        for (i, e) in t2.simplices(1).iter().enumerate() {
            assert_eq!(t2.index_of(1, e), Some(i));
        }
        assert_eq!(t2.index_of(1, &[0, 0]), None);
        assert_eq!(t2.index_of(0, &[3]), Some(3));
    }
}
