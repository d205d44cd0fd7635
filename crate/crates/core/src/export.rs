//! JSON and DOT renderings of a polyhedron.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::ClassParams;
use crate::map::{MapInvariants, MapStructure};
use crate::presentation::Family;
use crate::sggi::SchlafliType;

/// What a map is a map of: its family label, type and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapLabel {
    pub family: String,
    pub schlafli: SchlafliType,
    pub parameters: BTreeMap<String, u64>,
    pub dual_form: bool,
}

impl MapLabel {
    pub fn from_family(family: Family, schlafli: SchlafliType) -> MapLabel {
        let parameters = match family {
            Family::Coxeter { .. } | Family::Custom => Vec::new(),
            Family::Lambda { i, j, .. } => vec![("i", i), ("j", j)],
            Family::Delta { i, j, a, b, .. } => vec![("i", i), ("j", j), ("a", a), ("b", b)],
        };
        MapLabel {
            family: family.name().to_string(),
            schlafli,
            parameters: parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            dual_form: false,
        }
    }

    pub fn from_params(params: &ClassParams) -> MapLabel {
        let parameters: Vec<(&str, u64)> = match params {
            ClassParams::Orientable(o) => vec![("i", o.i), ("j", o.j), ("k", o.k)],
            ClassParams::NonOrientable(n) => vec![("i", n.i), ("j", n.j), ("a", n.a), ("b", n.b)],
        };
        MapLabel {
            family: params.family_name().to_string(),
            schlafli: params.schlafli(),
            parameters: parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            dual_form: params.is_dual_form(),
        }
    }
}

/// The JSON export object; field order is the stable key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapSummary {
    pub family: String,
    #[serde(rename = "type")]
    pub schlafli: [u64; 2],
    pub parameters: BTreeMap<String, u64>,
    pub order: u64,
    pub flags: u64,
    pub orientable: bool,
    pub euler: i64,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub edge_multiplicity: u64,
    pub dual_form: bool,
}

impl MapSummary {
    pub fn new(label: &MapLabel, map: &MapStructure, inv: &MapInvariants) -> MapSummary {
        let flags = map.flag_count() as u64;
        MapSummary {
            family: label.family.clone(),
            schlafli: [label.schlafli.p, label.schlafli.q],
            parameters: label.parameters.clone(),
            order: flags,
            flags,
            orientable: inv.orientable,
            euler: inv.euler_characteristic,
            vertices: inv.vertex_count,
            edges: inv.edge_count,
            faces: inv.face_count,
            edge_multiplicity: inv.edge_multiplicity,
            dual_form: label.dual_form,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

/// The flag graph in DOT: one node per flag, one edge per adjacent pair.
pub fn flag_graph_dot(map: &MapStructure) -> String {
    let mut out = String::from("graph flags {\n");
    for x in 0..map.flag_count() {
        let _ = writeln!(out, "  {x};");
    }
    for rank in 0..3 {
        for x in 0..map.flag_count() {
            let y = map.adjacent(x, rank);
            if x < y {
                let _ = writeln!(out, "  {x} -- {y} [rank={rank}];");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_map(
    map: &MapStructure,
    invariants: &MapInvariants,
    label: &MapLabel,
    format: &str,
) -> Result<Vec<u8>> {
    match format.parse::<ExportFormat>()? {
        ExportFormat::Json => {
            let summary = MapSummary::new(label, map, invariants);
            let mut bytes = serde_json::to_vec_pretty(&summary).expect("summary serializes");
            bytes.push(b'\n');
            Ok(bytes)
        }
        ExportFormat::Dot => Ok(flag_graph_dot(map).into_bytes()),
    }
}
