//! The analysis report shared by the JSON and markdown renderers.
//!
//! Vectors are objects keyed by basis label holding only nonzero
//! coefficients. Matrices are dense objects of rows. Every number is an
//! exact rational string.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use geomlab_core::fields::{
    analyze_field, energy_report, harmonic_map_classification, parallel_fields, parallel_null_line_fields, FieldError,
    InvariantVectorField,
};
use geomlab_core::linalg::{diagonalize_form, RatMatrix};
use geomlab_core::model::Model;
use geomlab_core::rational::{format_rational, Rational};
use geomlab_core::soliton::{
    algebraic_ricci_soliton_solve, einstein_solve, invariant_ricci_soliton_solve, SolitonVerdict, SolitonWitness,
};
use geomlab_core::{MetricLieAlgebra, Tensor};

pub const REPORT_SCHEMA: &str = "geomlab-report/1";

pub type Vector = IndexMap<String, String>;
pub type Matrix = IndexMap<String, IndexMap<String, String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub schema: String,
    pub conventions: Conventions,
    pub model: ModelSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<ConnectionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci: Option<RicciSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<WeylSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ledger: Option<LedgerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub biinvariant: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solitons: Option<SolitonSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walker: Option<WalkerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallel_fields: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub harmonic: Option<HarmonicSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Conventions {
    pub connection: String,
    pub curvature: String,
    pub ricci: String,
    pub scalar_curvature: String,
    pub weyl: String,
    pub soliton_equation: String,
    pub soliton_class: String,
    pub rough_laplacian: String,
    pub energy: String,
}

impl Default for Conventions {
    fn default() -> Self {
        let s = |t: &str| t.to_string();
        Self {
            connection: s(
                "nabla_{u_i} u_j = Lambda_i u_j from the Koszul formula; (Lambda_i)[k][j] is the u_k-coefficient",
            ),
            curvature: s("R(x,y) = [nabla_x, nabla_y] - nabla_[x,y]; R_ijkl = g(R(u_i,u_j)u_k, u_l)"),
            ricci: s("rho(y,z) = tr(x -> R(x,y)z); Rc = g^-1 rho"),
            scalar_curvature: s("tau = tr Rc"),
            weyl: s(
                "C = R - (1/(n-2))(Rc x ^ y + x ^ Rc y) + tau/((n-1)(n-2)) x ^ y with (x ^ y)z = g(y,z)x - g(x,z)y",
            ),
            soliton_equation: s("L_X g = sigma g - rho; algebraic: Rc = c Id + D with D a derivation"),
            soliton_class: s("constant > 0 shrinking, = 0 steady, < 0 expanding"),
            rough_laplacian: s(
                "nabla*nabla V = g^ij (nabla_{u_i} nabla_{u_j} V - nabla_{nabla_{u_i} u_j} V), no leading minus sign",
            ),
            energy: s("E(V) = (n/2 + |nabla V|^2 / 2) vol"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub name: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub metric: Matrix,
    /// `[positive, negative]` counts of the metric.
    pub signature: [usize; 2],
    pub brackets: Vec<BracketLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketLine {
    pub x: String,
    pub y: String,
    pub value: Vector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionSection {
    /// Nonzero `nabla_x y` for basis vectors.
    pub nabla: Vec<BracketLine>,
    pub torsion_free: bool,
    pub metric_compatible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub index: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvatureSection {
    pub flat: bool,
    /// Nonzero `R_ijkl` with `i < j` and `k < l`.
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RicciSection {
    pub rho: Matrix,
    pub ricci_operator: Matrix,
    pub scalar: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeylSection {
    pub conformally_flat: bool,
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerSection {
    pub l3: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l3_witness: Option<Vec<String>>,
    pub l5: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l5_witness: Option<Vec<String>>,
    pub locally_symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolitonSection {
    pub einstein: VerdictSection,
    pub invariant_ricci: VerdictSection,
    pub algebraic_ricci: VerdictSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictSection {
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    pub constant_pinned: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub family: Family,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation_basis: Option<Vec<Matrix>>,
}

/// Solution set `particular + span(kernel_basis)` over the named unknowns,
/// or the rank certificate when infeasible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Family {
    pub unknowns: Vec<String>,
    pub rank: usize,
    pub augmented_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particular: Option<Vec<String>>,
    pub kernel_basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkerSection {
    pub lines: Vec<Vector>,
    pub null_subspaces: Vec<Vec<Vector>>,
    pub unresolved: Vec<Vec<Vector>>,
    pub incomplete: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarmonicSection {
    pub harmonic_sections: Vec<Vector>,
    pub quadratic_obstruction_vanishes: bool,
    pub witnesses: Vec<PolarizationWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizationWitness {
    pub field: Vector,
    pub curvature_term: Vector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub coefficients: Vector,
    pub nabla_v: Vec<BracketLine>,
    pub rough_laplacian: Vector,
    pub curvature_term: Vector,
    pub is_harmonic_section: bool,
    pub is_harmonic_map: bool,
    pub is_critical_constant_length: bool,
    pub is_geodesic: bool,
    pub is_killing: bool,
    pub is_parallel: bool,
    pub lie_derivative_metric: Matrix,
    pub squared_length: String,
    pub energy: EnergySection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnergySection {
    pub volume: String,
    pub density: String,
    pub total: String,
}

/// Which sections a report carries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Sections {
    pub connection: bool,
    pub curvature: bool,
    pub solitons: bool,
    pub walker: bool,
    pub harmonic: bool,
}

impl Sections {
    pub fn all() -> Self {
        Self { connection: true, curvature: true, solitons: true, walker: true, harmonic: true }
    }
}

/// A vector field request: coefficients and the domain volume.
pub struct FieldRequest {
    pub coefficients: Vec<Rational>,
    pub volume: Rational,
}

struct Labels<'a>(&'a [String]);

impl Labels<'_> {
    fn vector(&self, v: &[Rational]) -> Vector {
        self.0
            .iter()
            .zip(v)
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(l, c)| (l.clone(), format_rational(c)))
            .collect()
    }

    fn matrix(&self, m: &RatMatrix) -> Matrix {
        self.0
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let cols =
                    self.0.iter().enumerate().map(|(j, col)| (col.clone(), format_rational(&m[(i, j)]))).collect();
                (row.clone(), cols)
            })
            .collect()
    }

    fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.0[i].clone()).collect()
    }

    /// Nonzero components with antisymmetric pairs reduced to `i < j`, `k < l`.
    fn pair_components(&self, t: &Tensor) -> Vec<Component> {
        t.nonzero()
            .filter(|(idx, _)| idx[0] < idx[1] && idx[2] < idx[3])
            .map(|(idx, v)| Component { index: self.names(&idx), value: format_rational(v) })
            .collect()
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn verdict_section(v: &SolitonVerdict, unknowns: Vec<String>, labels: &Labels) -> VerdictSection {
    let witness = match &v.witness {
        SolitonWitness::None => None,
        SolitonWitness::InvariantField { field } => {
            Some(Witness { field: Some(labels.vector(field)), derivation: None, derivation_basis: None })
        }
        SolitonWitness::Derivation { derivation, basis } => Some(Witness {
            field: None,
            derivation: Some(labels.matrix(derivation)),
            derivation_basis: Some(basis.generators.iter().map(|d| labels.matrix(d)).collect()),
        }),
    };
    VerdictSection {
        feasible: v.feasible,
        constant: v.constant.as_ref().map(format_rational),
        constant_pinned: v.constant_pinned,
        class: v.soliton_class.map(|c| c.as_str().to_string()),
        witness,
        family: Family {
            unknowns,
            rank: v.family.rank,
            augmented_rank: v.family.augmented_rank,
            particular: v.family.particular.as_deref().map(strings),
            kernel_basis: v.family.kernel_basis.iter().map(|k| strings(k)).collect(),
        },
        verified: v.verified,
    }
}

fn model_section(model: &Model) -> ModelSection {
    let m = &model.geometry;
    let labels = Labels(m.labels());
    let (pos, neg, _) = diagonalize_form(m.metric()).inertia();
    ModelSection {
        name: model.name.clone(),
        dimension: m.dim(),
        basis: m.labels().to_vec(),
        metric: labels.matrix(m.metric()),
        signature: [pos, neg],
        brackets: m
            .algebra()
            .stored_brackets()
            .map(|(i, j, v)| BracketLine { x: labels.0[i].clone(), y: labels.0[j].clone(), value: labels.vector(v) })
            .collect(),
        volume: model.volume.as_ref().map(format_rational),
    }
}

fn solitons(m: &MetricLieAlgebra, labels: &Labels) -> SolitonSection {
    let mut invariant_unknowns = labels.0.iter().map(|l| format!("X^{l}")).collect::<Vec<_>>();
    invariant_unknowns.push("sigma".into());
    let algebraic = algebraic_ricci_soliton_solve(m);
    let mut algebraic_unknowns = vec!["c".to_string()];
    algebraic_unknowns.extend((1..algebraic.family.unknowns()).map(|i| format!("t{i}")));
    SolitonSection {
        einstein: verdict_section(&einstein_solve(m), vec!["lambda".into()], labels),
        invariant_ricci: verdict_section(&invariant_ricci_soliton_solve(m), invariant_unknowns, labels),
        algebraic_ricci: verdict_section(&algebraic, algebraic_unknowns, labels),
    }
}

fn field_section(m: &MetricLieAlgebra, request: &FieldRequest, labels: &Labels) -> Result<FieldSection, FieldError> {
    let field = InvariantVectorField::new(m, request.coefficients.clone())?;
    let r = analyze_field(m, &field);
    let energy = energy_report(m, &field, &request.volume)?;
    Ok(FieldSection {
        coefficients: labels.vector(field.coefficients()),
        nabla_v: (0..m.dim())
            .map(|i| BracketLine { x: labels.0[i].clone(), y: "V".into(), value: labels.vector(&r.nabla_v.column(i)) })
            .collect(),
        rough_laplacian: labels.vector(&r.rough_laplacian),
        curvature_term: labels.vector(&r.curvature_term),
        is_harmonic_section: r.is_harmonic_section,
        is_harmonic_map: r.is_harmonic_map,
        is_critical_constant_length: r.is_critical_constant_length,
        is_geodesic: r.is_geodesic,
        is_killing: r.is_killing,
        is_parallel: r.is_parallel,
        lie_derivative_metric: labels.matrix(&r.lie_derivative_metric),
        squared_length: format_rational(&r.squared_length),
        energy: EnergySection {
            volume: format_rational(&energy.volume),
            density: format_rational(&energy.density),
            total: format_rational(&energy.total),
        },
    })
}

pub fn build_report(
    model: &Model,
    sections: Sections,
    field: Option<&FieldRequest>,
) -> Result<AnalysisReport, FieldError> {
    let m = &model.geometry;
    let labels = Labels(m.labels());
    let n = m.dim();
    let mut report = AnalysisReport {
        schema: REPORT_SCHEMA.to_string(),
        conventions: Conventions::default(),
        model: model_section(model),
        connection: None,
        curvature: None,
        ricci: None,
        weyl: None,
        ledger: None,
        biinvariant: None,
        solitons: None,
        walker: None,
        parallel_fields: None,
        harmonic: None,
        field: None,
    };
    if sections.connection {
        let conn = m.levi_civita();
        let nabla = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let v = conn.basis(i, j);
                let value = labels.vector(&v);
                (!value.is_empty()).then(|| BracketLine { x: labels.0[i].clone(), y: labels.0[j].clone(), value })
            })
            .collect();
        report.connection = Some(ConnectionSection {
            nabla,
            torsion_free: conn.is_torsion_free(m),
            metric_compatible: conn.is_metric_compatible(m),
        });
    }
    if sections.curvature {
        let curv = m.curvature();
        report.curvature =
            Some(CurvatureSection { flat: curv.is_flat(), components: labels.pair_components(&curv.r04) });
        let ric = m.ricci();
        report.ricci = Some(RicciSection {
            rho: labels.matrix(&ric.rho),
            ricci_operator: labels.matrix(&ric.ricci_operator),
            scalar: format_rational(&ric.scalar),
        });
        report.weyl = m
            .weyl()
            .ok()
            .map(|c| WeylSection { conformally_flat: c.is_zero(), components: labels.pair_components(&c) });
        let l = m.ledger_conditions();
        report.ledger = Some(LedgerSection {
            l3: l.l3,
            l3_witness: l.l3_witness.map(|(a, b, c)| labels.names(&[a, b, c])),
            l5: l.l5,
            l5_witness: l.l5_witness.map(|k| labels.names(&k)),
            locally_symmetric: l.locally_symmetric,
        });
        report.biinvariant = Some(m.is_biinvariant());
    }
    if sections.solitons {
        report.solitons = Some(solitons(m, &labels));
    }
    if sections.walker {
        let s = parallel_null_line_fields(m);
        let spaces =
            |v: &[Vec<Vec<Rational>>]| v.iter().map(|s| s.iter().map(|x| labels.vector(x)).collect()).collect();
        report.walker = Some(WalkerSection {
            lines: s.lines.iter().map(|x| labels.vector(x)).collect(),
            null_subspaces: spaces(&s.null_subspaces),
            unresolved: spaces(&s.unresolved),
            incomplete: s.incomplete,
        });
    }
    if sections.walker || sections.harmonic {
        report.parallel_fields = Some(parallel_fields(m).iter().map(|x| labels.vector(x)).collect());
    }
    if sections.harmonic {
        let c = harmonic_map_classification(m);
        report.harmonic = Some(HarmonicSection {
            harmonic_sections: c.subspace.iter().map(|x| labels.vector(x)).collect(),
            quadratic_obstruction_vanishes: c.quadratic_obstruction_vanishes,
            witnesses: c
                .witnesses
                .iter()
                .map(|(f, t)| PolarizationWitness { field: labels.vector(f), curvature_term: labels.vector(t) })
                .collect(),
        });
    }
    if let Some(request) = field {
        report.field = Some(field_section(m, request, &labels)?);
    }
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}
