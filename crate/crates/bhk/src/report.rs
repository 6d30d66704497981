//! Report documents and their sections.
//!
//! Every document goes through [`serde_json::Value`] before printing, whose
//! object map is ordered, so keys always come out sorted.

use bhk_core::groups::GroupElement;
use bhk_core::picard::{AgedElement, ResidueTable};
use bhk_core::smoothness::atomic_decomposition;
use bhk_core::{AdequacyReport, Atom, BhkPair, DelsarteMatrix, MirrorPair, SymmetrySubgroup};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::input::InputSpec;

pub const TOOL_NAME: &str = "bhk";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelsarteSection {
    pub matrix: [[i64; 4]; 4],
    pub weights: [u64; 4],
    pub degree: u64,
    pub exponent: u64,
    pub det: i64,
    /// `d·A⁻¹`
    pub b: [[i64; 4]; 4],
    pub calabi_yau: bool,
}

impl DelsarteSection {
    pub fn new(m: &DelsarteMatrix) -> Self {
        DelsarteSection {
            matrix: m.matrix().0,
            weights: m.weights(),
            degree: m.degree(),
            exponent: m.exponent(),
            det: m.det(),
            b: m.b().0,
            calabi_yau: m.is_calabi_yau(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomEntry {
    pub kind: String,
    pub variables: Vec<usize>,
    pub exponents: Vec<u64>,
}

impl From<&Atom> for AtomEntry {
    fn from(atom: &Atom) -> Self {
        let exponents = match atom {
            Atom::Fermat { exponent, .. } => vec![*exponent],
            Atom::Chain { exponents, .. } | Atom::Loop { exponents, .. } => exponents.clone(),
        };
        AtomEntry {
            kind: atom.kind().into(),
            variables: atom.variables().to_vec(),
            exponents,
        }
    }
}

/// The atomic decomposition, or why there is none.
pub fn atoms_section(m: &DelsarteMatrix) -> Result<Vec<AtomEntry>, String> {
    atomic_decomposition(m)
        .map(|dec| dec.atoms.iter().map(AtomEntry::from).collect())
        .map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdequacySection {
    pub verdict: bool,
    pub quasi_smooth: bool,
    pub well_formed: bool,
    pub weight_triple_gcd_ok: bool,
    pub characteristic_ok: bool,
    pub diagnostics: Vec<String>,
}

impl From<&AdequacyReport> for AdequacySection {
    fn from(r: &AdequacyReport) -> Self {
        AdequacySection {
            verdict: r.verdict,
            quasi_smooth: r.quasi_smooth,
            well_formed: r.well_formed,
            weight_triple_gcd_ok: r.weight_triple_gcd_ok,
            characteristic_ok: r.char_ok,
            diagnostics: r.diagnostics.clone(),
        }
    }
}

fn coords(elements: &[GroupElement]) -> Vec<[u64; 4]> {
    elements.iter().map(|g| g.coords()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupsSection {
    pub aut_order: usize,
    pub sl_order: usize,
    pub j_order: usize,
    pub g_order: usize,
    pub j_element: [u64; 4],
    pub g_generators: Vec<[u64; 4]>,
    pub g_is_j: bool,
    pub g_is_sl: bool,
}

impl GroupsSection {
    pub fn new(pair: &BhkPair) -> Self {
        let g = pair.group();
        GroupsSection {
            aut_order: pair.aut().order(),
            sl_order: pair.sl().order(),
            j_order: pair.j().order(),
            g_order: g.order(),
            j_element: bhk_core::groups::j_element(pair.matrix()).coords(),
            g_generators: coords(g.generators()),
            g_is_j: g == pair.j(),
            g_is_sl: g == pair.sl(),
        }
    }
}

/// The transposed matrix and the dual group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorSection {
    pub matrix: [[i64; 4]; 4],
    pub weights: [u64; 4],
    pub degree: u64,
    pub exponent: u64,
    pub det: i64,
    pub atoms: Vec<AtomEntry>,
    pub adequacy: AdequacySection,
    pub aut_order: usize,
    pub sl_order: usize,
    pub j_order: usize,
    pub dual_group_order: usize,
    pub dual_group_generators: Vec<[u64; 4]>,
    pub dual_is_j: bool,
    pub dual_is_sl: bool,
}

impl MirrorSection {
    pub fn new(mp: &MirrorPair) -> Self {
        let t = &mp.mirror;
        let m = t.matrix();
        MirrorSection {
            matrix: m.matrix().0,
            weights: m.weights(),
            degree: m.degree(),
            exponent: m.exponent(),
            det: m.det(),
            atoms: atoms_section(m).unwrap_or_default(),
            adequacy: t.adequacy().into(),
            aut_order: t.aut().order(),
            sl_order: t.sl().order(),
            j_order: t.j().order(),
            dual_group_order: t.group().order(),
            dual_group_generators: coords(t.group().generators()),
            dual_is_j: t.group() == t.j(),
            dual_is_sl: t.group() == t.sl(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgedEntry {
    pub element: [u64; 4],
    pub age: u8,
}

pub fn aged(set: &[AgedElement]) -> Vec<AgedEntry> {
    set.iter()
        .map(|a| AgedEntry {
            element: a.element.coords(),
            age: a.age,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoPair {
    pub rho_primal: u64,
    pub rho_mirror: u64,
}

impl From<(u64, u64)> for RhoPair {
    fn from((rho_primal, rho_mirror): (u64, u64)) -> Self {
        RhoPair {
            rho_primal,
            rho_mirror,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardSection {
    pub characteristic: u64,
    pub rho_primal: u64,
    pub rho_mirror: u64,
    /// Which method produced the reported numbers. `"all"` means every
    /// method ran and they agreed.
    pub provenance: String,
    /// Values from each method that ran, keyed by method name.
    pub methods: std::collections::BTreeMap<String, RhoPair>,
    /// `𝔗_d(p) ∩ G^T`, absent for the closed form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kelly_set_dual_group: Option<Vec<AgedEntry>>,
    /// `𝔗_d(p) ∩ G`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kelly_set_group: Option<Vec<AgedEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupEntry {
    pub order: usize,
    pub generators: Vec<[u64; 4]>,
    pub is_j: bool,
    pub is_sl: bool,
    pub dual_order: usize,
    pub dual_generators: Vec<[u64; 4]>,
    pub dual_is_j: bool,
    pub dual_is_sl: bool,
    pub mirror_adequate: bool,
}

impl SubgroupEntry {
    pub fn new(pair: &BhkPair, g: &SymmetrySubgroup, dual: &BhkPair) -> Self {
        SubgroupEntry {
            order: g.order(),
            generators: coords(g.generators()),
            is_j: g == pair.j(),
            is_sl: g == pair.sl(),
            dual_order: dual.group().order(),
            dual_generators: coords(dual.group().generators()),
            dual_is_j: dual.group() == dual.j(),
            dual_is_sl: dual.group() == dual.sl(),
            mirror_adequate: dual.adequacy().verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRowEntry {
    pub prime: u64,
    pub residue_mod_h_t: u64,
    pub residue_mod_h: u64,
    pub rho_primal: u64,
    pub rho_mirror: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrime {
    pub prime: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSection {
    pub primes_up_to: u64,
    pub h: u64,
    pub h_t: u64,
    pub rows: Vec<ScanRowEntry>,
    pub skipped: Vec<SkippedPrime>,
    /// `rho_primal` is 22 exactly for primes in these classes mod `h_T`.
    pub supersingular_residues_primal: Vec<u64>,
    /// `rho_mirror` is 22 exactly for primes in these classes mod `h`.
    pub supersingular_residues_mirror: Vec<u64>,
    pub generic_rho_primal: u64,
    pub generic_rho_mirror: u64,
}

impl ScanSection {
    pub fn new(primes_up_to: u64, t: &ResidueTable) -> Self {
        ScanSection {
            primes_up_to,
            h: t.degree,
            h_t: t.degree_t,
            rows: t
                .rows
                .iter()
                .map(|r| ScanRowEntry {
                    prime: r.prime,
                    residue_mod_h_t: r.residue_mod_h_t,
                    residue_mod_h: r.residue_mod_h,
                    rho_primal: r.rho_primal,
                    rho_mirror: r.rho_mirror,
                })
                .collect(),
            skipped: t
                .skipped
                .iter()
                .map(|(p, e)| SkippedPrime {
                    prime: *p,
                    reason: e.to_string(),
                })
                .collect(),
            supersingular_residues_primal: t.supersingular_residues_primal.clone(),
            supersingular_residues_mirror: t.supersingular_residues_mirror.clone(),
            generic_rho_primal: t.generic_rho_primal,
            generic_rho_mirror: t.generic_rho_mirror,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorSection {
    pub kind: String,
    pub message: String,
}

/// One output document. Sections a command does not produce are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: ToolInfo,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delsarte: Option<DelsarteSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<Vec<AtomEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adequacy: Option<AdequacySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<GroupsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<Vec<SubgroupEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub picard: Option<PicardSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorSection>,
}

impl ReportDocument {
    pub fn new(command: &str, source: Option<String>, input: Option<InputSpec>) -> Self {
        ReportDocument {
            tool: ToolInfo::default(),
            command: command.into(),
            source,
            input,
            ..Default::default()
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report documents always serialize")
    }

    /// Single-line JSON with sorted keys.
    pub fn to_json_line(&self) -> String {
        self.to_value().to_string()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable value")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render_text(&self.to_value(), 0, &mut out);
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| is_scalar(x) || inline(x)),
        other => is_scalar(other),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if inline(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", text_scalar(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if inline(item) {
                    out.push_str(&format!("{pad}- {}\n", text_scalar(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", text_scalar(other))),
    }
}

fn text_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
