//! Polyhedral readings of main-equation solutions.
//!
//! A solution (k, n, m) with k, n > 0 > m describes a polyhedral map on the
//! sphere with k edges per face, n edges per vertex and |m| edges in total:
//! Euler's theorem `V − E + F = 2` rewrites to `1/k + 1/n − 1/E = 1/2`.
//! These are the Platonic solids plus the dihedron/hosohedron family. An
//! all-positive solution satisfies `1/p + 1/q + 1/E = 1/2` instead, the
//! incidence equation of an equivelar {p,q} map on the genus-2 surface
//! (χ = −2).

use thiserror::Error;

use crate::dioph::main_equation;
use crate::vogel::named_label_for_solution;

/// Errors from the geometric layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("({0}, {1}, {2}) does not solve the main equation")]
    NotMainSolution(i64, i64, i64),
    #[error("zero entries have no incidence reading (the E = 0 degenerate family)")]
    ZeroEntry,
    #[error("2E is not divisible by both incidence degrees; no polyhedral map")]
    NonIntegralIncidence,
    /// Sign patterns other than (+,+,−) and (+,+,+) carry no map; the Euler
    /// characteristic the equation would force is reported for information.
    #[error("no geometric interpretation for this sign pattern (formal χ = {euler_char})")]
    NoGeometricInterpretation { euler_char: i64 },
    #[error("unknown map label `{0}`")]
    UnknownMapLabel(String),
}

/// The closed surface a map lives on, keyed by Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    /// χ = 2.
    Sphere,
    /// χ = −2.
    Genus2,
    /// Anything else (never produced by main-equation solutions).
    Other(i64),
}

impl Surface {
    fn from_euler(chi: i64) -> Self {
        match chi {
            2 => Self::Sphere,
            -2 => Self::Genus2,
            other => Self::Other(other),
        }
    }
}

/// Regularity data for a genus-2 map. Every constructed map is equivelar
/// (locally regular) by construction; full regularity additionally demands
/// a transitive automorphism action and is recorded from the published
/// census rather than computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularMapFlag {
    pub is_locally_regular: bool,
    pub is_regular: bool,
    /// Where the regularity call comes from.
    pub source: &'static str,
}

const REGULAR_MAP_SOURCE: &str = "Coxeter-Moser genus-2 regular map census";

/// The five catalog entries whose maps are regular, not merely equivelar.
const REGULAR_LABELS: [&str; 5] = ["Y1", "Y10", "Y11", "Y15", "Y43"];

/// The ten all-positive catalog labels.
const GENUS2_LABELS: [&str; 10] = [
    "Y1", "Y10", "Y11", "Y15", "Y29", "Y31", "Y35", "Y38", "Y43", "Y47",
];

/// Full incidence data of one polyhedral map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralMapData {
    /// Edges per face (p of the Schläfli symbol {p,q}).
    pub face_size: i64,
    /// Edges per vertex (q).
    pub vertex_degree: i64,
    pub edges: i64,
    pub vertices: i64,
    pub faces: i64,
    pub euler_char: i64,
    pub surface: Surface,
    /// Solid or map label, when one is known.
    pub name: Option<String>,
    /// Census regularity, attached to genus-2 maps with a catalog label.
    pub regular: Option<RegularMapFlag>,
}

impl PolyhedralMapData {
    /// Re-checks the incidence identities qV = 2E and pF = 2E and Euler's
    /// relation.
    pub fn is_consistent(&self) -> bool {
        self.vertex_degree * self.vertices == 2 * self.edges
            && self.face_size * self.faces == 2 * self.edges
            && self.vertices - self.edges + self.faces == self.euler_char
    }
}

/// V − E + F.
pub fn euler_char(vertices: i64, edges: i64, faces: i64) -> i64 {
    vertices - edges + faces
}

fn build_map(
    face_size: i64,
    vertex_degree: i64,
    edges: i64,
    expected_chi: i64,
    name: Option<String>,
    regular: Option<RegularMapFlag>,
) -> Result<PolyhedralMapData, GeometryError> {
    if (2 * edges) % vertex_degree != 0 || (2 * edges) % face_size != 0 {
        return Err(GeometryError::NonIntegralIncidence);
    }
    let vertices = 2 * edges / vertex_degree;
    let faces = 2 * edges / face_size;
    let chi = euler_char(vertices, edges, faces);
    assert_eq!(chi, expected_chi, "Euler characteristic forced by the equation");
    Ok(PolyhedralMapData {
        face_size,
        vertex_degree,
        edges,
        vertices,
        faces,
        euler_char: chi,
        surface: Surface::from_euler(chi),
        name,
        regular,
    })
}

fn spherical_name(p: i64, q: i64) -> Option<String> {
    match (p, q) {
        (3, 3) => Some("tetrahedron".into()),
        (4, 3) => Some("cube".into()),
        (3, 4) => Some("octahedron".into()),
        (5, 3) => Some("dodecahedron".into()),
        (3, 5) => Some("icosahedron".into()),
        (p, 2) => Some(format!("{p}-gon dihedron")),
        (2, q) => Some(format!("{q}-gon hosohedron")),
        _ => None,
    }
}

/// The census regularity flag for a genus-2 catalog label.
pub fn regular_map_flag(label: &str) -> Result<RegularMapFlag, GeometryError> {
    if !GENUS2_LABELS.contains(&label) {
        return Err(GeometryError::UnknownMapLabel(label.to_string()));
    }
    Ok(RegularMapFlag {
        is_locally_regular: true,
        is_regular: REGULAR_LABELS.contains(&label),
        source: REGULAR_MAP_SOURCE,
    })
}

/// Interprets a main-equation solution with nonzero entries as a polyhedral
/// map, in the orientation given.
///
/// - (k>0, n>0, m<0): sphere; faces first — k is the face size, n the
///   vertex degree, E = |m|. The dual map is returned alongside (one entry
///   when self-dual).
/// - all positive: genus-2 equivelar map. Each positive entry may play E;
///   the printed orientation (E = m) is preferred, falling back to E = n,
///   then E = k when 2E is not divisible by both remaining entries.
/// - any other sign pattern: no geometric interpretation.
pub fn interpret(k: i64, n: i64, m: i64) -> Result<Vec<PolyhedralMapData>, GeometryError> {
    if k == 0 || n == 0 || m == 0 {
        return Err(GeometryError::ZeroEntry);
    }
    if !main_equation().is_solution(k, n, m) {
        return Err(GeometryError::NotMainSolution(k, n, m));
    }
    if k > 0 && n > 0 && m < 0 {
        let edges = -m;
        let primary = build_map(k, n, edges, 2, spherical_name(k, n), None)?;
        let mut out = vec![primary];
        if k != n {
            out.push(build_map(n, k, edges, 2, spherical_name(n, k), None)?);
        }
        return Ok(out);
    }
    if k > 0 && n > 0 && m > 0 {
        let label = named_label_for_solution([k, n, m]);
        let flag = label.map(|l| regular_map_flag(l).expect("catalog label"));
        // candidate (p, q, E) orientations in printed-order preference
        let candidates = [(k, n, m), (k, m, n), (n, m, k)];
        for (p, q, edges) in candidates {
            if (2 * edges) % q == 0 && (2 * edges) % p == 0 {
                let name = |p: i64, q: i64| {
                    Some(match label {
                        Some(l) => format!("{{{p},{q}}} map ({l})"),
                        None => format!("{{{p},{q}}} map"),
                    })
                };
                let primary = build_map(p, q, edges, -2, name(p, q), flag.clone())?;
                let mut out = vec![primary];
                if p != q {
                    out.push(build_map(q, p, edges, -2, name(q, p), flag)?);
                }
                return Ok(out);
            }
        }
        return Err(GeometryError::NonIntegralIncidence);
    }
    // remaining patterns: report the χ the identity V − E + F = −2E/m forces
    Err(GeometryError::NoGeometricInterpretation {
        euler_char: -2 * m.signum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dioph::{classify, enumerate, main_equation, SolutionKind};

    #[test]
    fn cube_with_dual_octahedron() {
        let maps = interpret(4, 3, -12).unwrap();
        assert_eq!(maps.len(), 2);
        let cube = &maps[0];
        assert_eq!(
            (cube.edges, cube.vertices, cube.faces),
            (12, 8, 6),
            "cube counts"
        );
        assert_eq!(cube.surface, Surface::Sphere);
        assert_eq!(cube.name.as_deref(), Some("cube"));
        let octa = &maps[1];
        assert_eq!((octa.vertices, octa.faces), (6, 8));
        assert_eq!(octa.name.as_deref(), Some("octahedron"));
        for m in &maps {
            assert!(m.is_consistent());
        }
    }

    #[test]
    fn genus_two_unit_map() {
        let maps = interpret(6, 6, 6).unwrap();
        assert_eq!(maps.len(), 1, "self-dual");
        let m = &maps[0];
        assert_eq!((m.edges, m.vertices, m.faces), (6, 2, 2));
        assert_eq!(m.euler_char, -2);
        assert_eq!(m.surface, Surface::Genus2);
        let flag = m.regular.as_ref().unwrap();
        assert!(flag.is_regular && flag.is_locally_regular);
    }

    #[test]
    fn polygon_family_is_the_dihedron_pair() {
        let maps = interpret(2, 7, -7).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(maps[0].edges, 7);
        assert_eq!(maps[0].name.as_deref(), Some("7-gon hosohedron"));
        assert_eq!(maps[1].name.as_deref(), Some("7-gon dihedron"));
        // two faces, n vertices, n edges on the dihedron side
        assert_eq!((maps[1].vertices, maps[1].faces), (7, 2));
    }

    #[test]
    fn duality_swaps_vertices_and_faces() {
        let a = interpret(4, 3, -12).unwrap();
        let b = interpret(3, 4, -12).unwrap();
        assert_eq!(a[0].vertices, b[0].faces);
        assert_eq!(a[0].faces, b[0].vertices);
        assert_eq!(a[0].edges, b[0].edges);
        assert_eq!(a[0].euler_char, b[0].euler_char);
        let c = interpret(10, 5, 5).unwrap();
        let d = interpret(5, 10, 5).unwrap();
        assert_eq!(c[0].vertices, d[0].faces);
        assert_eq!(c[0].faces, d[0].vertices);
    }

    #[test]
    fn other_sign_patterns_are_rejected_with_formal_chi() {
        match interpret(1, -4, -4) {
            Err(GeometryError::NoGeometricInterpretation { euler_char }) => {
                assert_eq!(euler_char, 2)
            }
            other => panic!("expected no interpretation, got {other:?}"),
        }
        assert!(matches!(interpret(0, 0, 5), Err(GeometryError::ZeroEntry)));
        assert!(matches!(
            interpret(5, 5, 5),
            Err(GeometryError::NotMainSolution(..))
        ));
    }

    #[test]
    fn euler_char_examples() {
        assert_eq!(euler_char(8, 12, 6), 2);
        assert_eq!(euler_char(2, 6, 2), -2);
        assert_eq!(euler_char(4, 6, 4), 2);
    }

    #[test]
    fn census_flags() {
        assert!(regular_map_flag("Y15").unwrap().is_regular);
        assert!(!regular_map_flag("Y38").unwrap().is_regular);
        assert!(regular_map_flag("Y1").unwrap().is_regular);
        assert!(matches!(
            regular_map_flag("Y2"),
            Err(GeometryError::UnknownMapLabel(_))
        ));
    }

    #[test]
    fn full_survey_of_both_sign_patterns() {
        // (+,+,−) non-family classes: exactly the five Platonic solids as
        // two dual pairs plus the self-dual tetrahedron; (+,+,+): exactly
        // ten genus-2 maps.
        let main = main_equation();
        let sols = enumerate(&main, 50, false);
        let mut platonic_names = Vec::new();
        let mut genus2 = 0;
        for s in &sols {
            let cls = classify(s).unwrap();
            let [k, n, m] = s.canonical_descending();
            if k > 0 && n > 0 && m < 0 && cls.kind == SolutionKind::Isolated {
                for map in interpret(k, n, m).unwrap() {
                    assert_eq!(map.euler_char, 2);
                    assert!(map.is_consistent());
                    platonic_names.push(map.name.unwrap());
                }
            }
            if k > 0 && n > 0 && m > 0 {
                assert_eq!(cls.kind, SolutionKind::Isolated);
                genus2 += 1;
                for map in interpret(k, n, m).unwrap() {
                    assert_eq!(map.euler_char, -2);
                    assert!(map.is_consistent());
                    assert!(map.regular.is_some());
                }
            }
            if cls.kind == SolutionKind::PolygonFamily && m < 0 {
                for map in interpret(k, n, m).unwrap() {
                    assert_eq!(map.euler_char, 2);
                    assert!(map.is_consistent());
                }
            }
        }
        platonic_names.sort();
        assert_eq!(
            platonic_names,
            ["cube", "dodecahedron", "icosahedron", "octahedron", "tetrahedron"]
        );
        assert_eq!(genus2, 10);
    }
}
