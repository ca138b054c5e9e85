//! Record types and table builders behind the command-line surface:
//! solution tables, per-point records, subgroup records, and the
//! side-by-side comparison of the McKay and Diophantine routes.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character;
use crate::dioph::{
    classify, enumerate, equation_by_name, main_equation, SolutionKind, SolutionTriple,
};
use crate::geometry::{self, GeometryError};
use crate::mckay::{
    build_group, character_table, identify_affine_diagram, mckay_matrix, McKayError,
    SubgroupFamily,
};
use crate::vogel::{from_solution, AlgebraIdentity, RootSystem, VogelImage};

/// Failures at the reporting surface, split by who is at fault.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    /// The request itself is malformed (exit code 1 at the CLI).
    #[error("{0}")]
    InvalidInput(String),
    /// An internal consistency violation (exit code 2 at the CLI).
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl From<McKayError> for ReportError {
    fn from(e: McKayError) -> Self {
        match e {
            McKayError::InvalidFamily(_) => Self::InvalidInput(e.to_string()),
            other => Self::Internal(other.to_string()),
        }
    }
}

fn kind_str(kind: SolutionKind) -> &'static str {
    match kind {
        SolutionKind::PolygonFamily => "polygon-family",
        SolutionKind::ZeroFamily => "zero-family",
        SolutionKind::Isolated => "isolated",
    }
}

/// One enumerated solution with everything computed for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub k: i64,
    pub n: i64,
    pub m: i64,
    pub equation: String,
    /// Classification, main equation only.
    pub kind: Option<String>,
    pub family_parameter: Option<i64>,
    /// Canonical plane point; absent for the zero family and for sibling
    /// equations.
    pub vogel: Option<[i64; 3]>,
    /// Exact universal dimension (always an integer on these points).
    pub dim: Option<String>,
    /// Constant coefficient of the character expansion; computed for
    /// isolated solutions.
    pub rank: Option<i64>,
    pub algebra: Option<String>,
}

/// Which solutions `solution_records` keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveFilter {
    All,
    Isolated,
    Families,
}

fn algebra_labels(ids: &[AlgebraIdentity]) -> Vec<String> {
    // distinct variants can display identically (the so(8) point is both the
    // so-family member and the catalog entry of that name); show each label once
    let mut out: Vec<String> = Vec::new();
    for id in ids {
        let s = id.to_string();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn algebra_summary(ids: &[AlgebraIdentity]) -> String {
    algebra_labels(ids).join(", ")
}

fn rank_of_point(p: &crate::vogel::VogelPoint) -> Result<i64, ReportError> {
    let e = character::expand(p)
        .map_err(|e| ReportError::Internal(format!("expansion failed on a solution point: {e}")))?;
    i64::try_from(e.rank())
        .map_err(|_| ReportError::Internal("rank exceeds machine range".into()))
}

fn fill_main_fields(rec: &mut SolutionRecord, s: &SolutionTriple, with_rank: bool) -> Result<(), ReportError> {
    let cls = classify(s).expect("record building only classifies main solutions");
    rec.kind = Some(kind_str(cls.kind).to_string());
    rec.family_parameter = cls.family_parameter;
    match from_solution(s).expect("enumerated solutions map to the plane") {
        VogelImage::ZeroLine => {
            rec.algebra = Some("D(2,1;lambda)".to_string());
        }
        VogelImage::Point(p) => {
            rec.vogel = Some(p.canonical());
            let dim = p
                .dimension()
                .map_err(|e| ReportError::Internal(format!("dimension pole on a solution: {e}")))?;
            rec.dim = Some(dim.to_string());
            rec.algebra = Some(algebra_summary(&p.identify()));
            if with_rank {
                rec.rank = Some(rank_of_point(&p)?);
            }
        }
    }
    Ok(())
}

/// Enumerates an equation and assembles one record per solution. For the
/// main equation each record carries classification, plane point, exact
/// dimension and algebra identification; ranks are computed for isolated
/// solutions (they need a character expansion, which is pointless work for
/// ten thousand polygon-family members).
pub fn solution_records(
    equation: &str,
    bound: i64,
    filter: SolveFilter,
) -> Result<Vec<SolutionRecord>, ReportError> {
    if bound < 1 {
        return Err(ReportError::InvalidInput("bound must be at least 1".into()));
    }
    let eq = equation_by_name(equation)
        .map_err(|e| ReportError::InvalidInput(e.to_string()))?;
    let is_main = eq.name == "main";
    if !is_main && filter != SolveFilter::All {
        return Err(ReportError::InvalidInput(
            "family/isolated filters are defined only for the main equation".into(),
        ));
    }
    let mut out = Vec::new();
    for s in enumerate(&eq, bound, true) {
        let mut rec = SolutionRecord {
            k: s.k,
            n: s.n,
            m: s.m,
            equation: eq.name.to_string(),
            kind: None,
            family_parameter: None,
            vogel: None,
            dim: None,
            rank: None,
            algebra: None,
        };
        if is_main {
            let cls = classify(&s).expect("main solutions classify");
            match filter {
                SolveFilter::Isolated if cls.kind != SolutionKind::Isolated => continue,
                SolveFilter::Families if cls.kind == SolutionKind::Isolated => continue,
                _ => {}
            }
            fill_main_fields(&mut rec, &s, cls.kind == SolutionKind::Isolated)?;
        }
        out.push(rec);
    }
    Ok(out)
}

/// The isolated solutions within `bound` in catalog order: dimension
/// descending, ties by the canonical triple. Any bound ≥ 42 yields the
/// complete list of 15 classes.
pub fn isolated_catalog_records(bound: i64) -> Result<Vec<SolutionRecord>, ReportError> {
    let mut recs = solution_records("main", bound, SolveFilter::Isolated)?;
    recs.sort_by(|a, b| {
        let da: BigInt = a.dim.as_deref().unwrap_or("0").parse().unwrap();
        let db: BigInt = b.dim.as_deref().unwrap_or("0").parse().unwrap();
        db.cmp(&da).then_with(|| [a.k, a.n, a.m].cmp(&[b.k, b.n, b.m]))
    });
    Ok(recs)
}

/// Incidence data of one polyhedral map, flattened for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryRecord {
    pub face_size: i64,
    pub vertex_degree: i64,
    pub edges: i64,
    pub vertices: i64,
    pub faces: i64,
    pub euler_char: i64,
    pub surface: String,
    pub name: Option<String>,
    pub regular_map: Option<bool>,
}

impl From<&geometry::PolyhedralMapData> for GeometryRecord {
    fn from(m: &geometry::PolyhedralMapData) -> Self {
        Self {
            face_size: m.face_size,
            vertex_degree: m.vertex_degree,
            edges: m.edges,
            vertices: m.vertices,
            faces: m.faces,
            euler_char: m.euler_char,
            surface: match m.surface {
                geometry::Surface::Sphere => "sphere".into(),
                geometry::Surface::Genus2 => "genus-2".into(),
                geometry::Surface::Other(chi) => format!("chi={chi}"),
            },
            name: m.name.clone(),
            regular_map: m.regular.as_ref().map(|f| f.is_regular),
        }
    }
}

/// Raw character expansion: the representative fixing the exponent unit,
/// and the nonzero coefficients by exponent. Only emitted on request; the
/// exponents are representative-dependent, unlike dim and rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub scale_note: [i64; 3],
    pub coefficients: Vec<(i64, String)>,
}

/// Everything computed for a single main-equation solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VogelRecord {
    pub solution: [i64; 3],
    pub kind: String,
    /// Canonical plane point, absent on the zero family.
    pub vogel: Option<[i64; 3]>,
    pub dim: Option<String>,
    pub regular: Option<bool>,
    pub rank: Option<i64>,
    pub algebra: Vec<String>,
    pub geometry: Vec<GeometryRecord>,
    pub notes: Vec<String>,
    /// Full expansion data, populated in verbose mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expansion: Option<ExpansionRecord>,
}

/// Builds the full record for one solution of the main equation. Rejects
/// non-solutions, reporting the residual of the defining equation. With
/// `with_expansion` the raw exponential-sum coefficients are attached.
pub fn vogel_record(k: i64, n: i64, m: i64, with_expansion: bool) -> Result<VogelRecord, ReportError> {
    let eq = main_equation();
    if !eq.is_solution(k, n, m) {
        return Err(ReportError::InvalidInput(format!(
            "({k}, {n}, {m}) does not solve {eq}; residual knm - 2(kn+km+nm) = {}",
            eq.residual(k, n, m)
        )));
    }
    let s = SolutionTriple::new(k, n, m, "main");
    let cls = classify(&s).expect("main solution");
    let mut rec = VogelRecord {
        solution: [k, n, m],
        kind: kind_str(cls.kind).to_string(),
        vogel: None,
        dim: None,
        regular: None,
        rank: None,
        algebra: Vec::new(),
        geometry: Vec::new(),
        notes: Vec::new(),
        expansion: None,
    };
    match from_solution(&s).expect("verified solution") {
        VogelImage::ZeroLine => {
            rec.algebra.push("D(2,1;lambda)".to_string());
            // with t = 0 the numerator of the dimension formula equals its
            // denominator everywhere on the line
            rec.dim = Some("1".to_string());
            rec.notes.push(
                "zero family: the plane image is the whole line alpha+beta+gamma = 0; \
the formula value 1 is the superdimension of the D(2,1;lambda) family"
                    .into(),
            );
        }
        VogelImage::Point(p) => {
            rec.vogel = Some(p.canonical());
            rec.dim = Some(
                p.dimension()
                    .map_err(|e| ReportError::Internal(e.to_string()))?
                    .to_string(),
            );
            rec.regular = Some(
                character::is_regular(&p).map_err(|e| ReportError::Internal(e.to_string()))?,
            );
            let e = character::expand(&p)
                .map_err(|e| ReportError::Internal(format!("expansion failed: {e}")))?;
            rec.rank = Some(
                i64::try_from(e.rank())
                    .map_err(|_| ReportError::Internal("rank exceeds machine range".into()))?,
            );
            if with_expansion {
                rec.expansion = Some(ExpansionRecord {
                    scale_note: e.scale_note(),
                    coefficients: e
                        .coefficients()
                        .map(|(exp, c)| (exp, c.to_string()))
                        .collect(),
                });
            }
            rec.algebra = algebra_labels(&p.identify());
            match geometry::interpret(k, n, m) {
                Ok(maps) => rec.geometry = maps.iter().map(GeometryRecord::from).collect(),
                Err(GeometryError::NoGeometricInterpretation { euler_char }) => {
                    rec.notes.push(format!(
                        "no geometric interpretation for this sign pattern (formal chi = {euler_char})"
                    ));
                }
                Err(GeometryError::ZeroEntry) => {}
                Err(e) => return Err(ReportError::Internal(e.to_string())),
            }
            if cls.kind == SolutionKind::PolygonFamily {
                rec.notes.push(SERIES_NOTE.to_string());
            }
        }
    }
    Ok(rec)
}

/// One subgroup of SU(2) run through the whole pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayRecord {
    pub family: String,
    pub order: usize,
    pub class_count: usize,
    pub degrees: Vec<u32>,
    pub adjacency: Vec<Vec<u32>>,
    pub affine: String,
    pub finite: String,
}

/// Builds the group, its character table and its graph, and identifies the
/// affine diagram.
pub fn mckay_record(family: SubgroupFamily) -> Result<McKayRecord, ReportError> {
    let group = build_group(family)?;
    let table = character_table(&group)?;
    let graph = mckay_matrix(&group, &table)?;
    let affine = identify_affine_diagram(&graph)?;
    Ok(McKayRecord {
        family: family.to_string(),
        order: group.order(),
        class_count: group.classes.len(),
        degrees: graph.degrees.clone(),
        adjacency: graph.adjacency.clone(),
        affine: affine.to_string(),
        finite: affine.finite().to_string(),
    })
}

/// One row of the two-route comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub solutions: String,
    pub platonic: String,
    pub subgroups: Vec<String>,
    pub mckay: Vec<String>,
    pub diophantine: String,
    pub coincide: bool,
}

/// The full comparison table plus its convention footnotes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub footnotes: Vec<String>,
}

const SERIES_NOTE: &str = "series convention: the (2,a,-a) family lands on (-2,2,a), i.e. \
sl(a) = A(a-1); the same family is often tabulated one step up as sl(a+1) = A(a)";

const BD_NOTE: &str = "binary dihedral convention: BD of order 4n computes to the affine \
D-diagram on n+3 nodes, finite label D(n+2); tabulations using the subscript n-2 count \
the same diagram differently";

const DUAL_NOTE: &str = "solids are reported face-size first: (5,3,-30) reads as the \
dodecahedron and its dual icosahedron; both routes only consume the dual pair";

fn dioph_label_for(solution: [i64; 3]) -> Result<(String, Option<RootSystem>), ReportError> {
    let s = SolutionTriple::new(solution[0], solution[1], solution[2], "main");
    match from_solution(&s).map_err(|e| ReportError::Internal(e.to_string()))? {
        VogelImage::ZeroLine => Ok(("D(2,1;lambda)".to_string(), None)),
        VogelImage::Point(p) => {
            let ids = p.identify();
            let rs = ids.iter().find_map(AlgebraIdentity::root_system);
            // prefer the catalog name for display, then any family name
            let display = ids
                .iter()
                .find(|i| matches!(i, AlgebraIdentity::Named { .. }))
                .or_else(|| ids.first())
                .map(ToString::to_string)
                .unwrap_or_else(|| "unknown".to_string());
            Ok((display, rs))
        }
    }
}

fn mckay_finite(family: SubgroupFamily) -> Result<RootSystem, ReportError> {
    let group = build_group(family)?;
    let table = character_table(&group)?;
    let graph = mckay_matrix(&group, &table)?;
    Ok(identify_affine_diagram(&graph)?.finite())
}

/// Reproduces the route-comparison table from scratch: for each spherical
/// solution the subgroup pipeline runs in full, and the Diophantine column
/// comes from the plane identification. The polygon row is symbolic in n;
/// its three subgroup outcomes are verified here at n = 5.
pub fn comparison_report() -> Result<ComparisonReport, ReportError> {
    let mut rows = Vec::new();

    let solid_rows: [([i64; 3], &str, &str, SubgroupFamily); 3] = [
        (
            [5, 3, -30],
            "(5,3,-30) / (3,5,-30)",
            "dodecahedron / icosahedron",
            SubgroupFamily::BinaryIcosahedral,
        ),
        (
            [4, 3, -12],
            "(4,3,-12) / (3,4,-12)",
            "cube / octahedron",
            SubgroupFamily::BinaryOctahedral,
        ),
        (
            [3, 3, -6],
            "(3,3,-6)",
            "tetrahedron",
            SubgroupFamily::BinaryTetrahedral,
        ),
    ];
    for (solution, solutions, platonic, family) in solid_rows {
        let finite = mckay_finite(family)?;
        let (dioph_display, dioph_rs) = dioph_label_for(solution)?;
        let group_order = family.expected_order();
        rows.push(ComparisonRow {
            solutions: solutions.to_string(),
            platonic: platonic.to_string(),
            subgroups: vec![format!("{family} (order {group_order})")],
            mckay: vec![finite.to_string()],
            diophantine: dioph_display,
            coincide: dioph_rs.is_some_and(|rs| rs == finite),
        });
    }

    // polygon family: verify the three symbolic outcomes at n = 5
    let n = 5u32;
    let c_n = mckay_finite(SubgroupFamily::Cyclic(n))?;
    let c_2n = mckay_finite(SubgroupFamily::Cyclic(2 * n))?;
    let bd = mckay_finite(SubgroupFamily::BinaryDihedral(n))?;
    if c_n != RootSystem::A(n as i64 - 1)
        || c_2n != RootSystem::A(2 * n as i64 - 1)
        || bd != RootSystem::D(n as i64 + 2)
    {
        return Err(ReportError::Internal(
            "polygon-row subgroup outcomes deviate from the symbolic pattern".into(),
        ));
    }
    let (dioph_display, dioph_rs) = dioph_label_for([2, n as i64, -(n as i64)])?;
    // three distinct outcomes against one algebra: never a coincidence
    let mckay_set = [c_n, c_2n, bd];
    let coincide = dioph_rs.is_some_and(|rs| mckay_set.iter().all(|&m| m == rs));
    rows.push(ComparisonRow {
        solutions: "(2,n,-n)".to_string(),
        platonic: "n-gon dihedron / hosohedron".to_string(),
        subgroups: vec![
            "C(n) (order n)".to_string(),
            "C(2n) (order 2n)".to_string(),
            "BD (order 4n)".to_string(),
        ],
        mckay: vec![
            "A(n-1)".to_string(),
            "A(2n-1)".to_string(),
            "D~(n+2) affine, n+3 nodes".to_string(),
        ],
        diophantine: format!("sl(n) series ({dioph_display} at n = {n})"),
        coincide,
    });

    rows.push(ComparisonRow {
        solutions: "(0,0,0)".to_string(),
        platonic: "".to_string(),
        subgroups: vec![],
        mckay: vec![],
        diophantine: "D(2,1;lambda)".to_string(),
        coincide: false,
    });

    Ok(ComparisonReport {
        rows,
        footnotes: vec![
            DUAL_NOTE.to_string(),
            SERIES_NOTE.to_string(),
            BD_NOTE.to_string(),
        ],
    })
}

/// A quick end-to-end smoke test over every layer; returns one log line per
/// check. Any failure is an internal-consistency error.
pub fn selftest() -> Result<Vec<String>, ReportError> {
    let mut log = Vec::new();
    for family in [
        SubgroupFamily::BinaryTetrahedral,
        SubgroupFamily::BinaryOctahedral,
        SubgroupFamily::BinaryIcosahedral,
    ] {
        let rec = mckay_record(family)?;
        log.push(format!(
            "ok: {} order {} -> {} ({} nodes)",
            rec.family, rec.order, rec.affine, rec.class_count
        ));
    }
    let catalog = isolated_catalog_records(50)?;
    if catalog.len() != 15 {
        return Err(ReportError::Internal(format!(
            "isolated catalog has {} classes, expected 15",
            catalog.len()
        )));
    }
    log.push("ok: 15 isolated solution classes".to_string());
    for rec in &catalog {
        let p = crate::vogel::VogelPoint::from_integers(rec.vogel.unwrap())
            .map_err(|e| ReportError::Internal(e.to_string()))?;
        let dim = p
            .dimension()
            .map_err(|e| ReportError::Internal(e.to_string()))?;
        let expanded = character::expand(&p)
            .map_err(|e| ReportError::Internal(e.to_string()))?;
        if crate::exact::Rational::from(expanded.dim()) != dim {
            return Err(ReportError::Internal(format!(
                "dimension mismatch at ({}, {}, {})",
                rec.k, rec.n, rec.m
            )));
        }
    }
    log.push("ok: expansion dimension equals formula on all catalog points".to_string());
    let cmp = comparison_report()?;
    let coinciding = cmp.rows.iter().filter(|r| r.coincide).count();
    if coinciding != 1 {
        return Err(ReportError::Internal(format!(
            "{coinciding} coinciding comparison rows, expected exactly 1"
        )));
    }
    log.push("ok: exactly one coinciding comparison row".to_string());
    Ok(log)
}
