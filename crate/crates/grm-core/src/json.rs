//! JSON schemas for posets, length functions, quivers, measures, class
//! posets and verification reports.
//!
//! Scalars travel as rational strings (`"3/2"`, `"4"`); bare integers are
//! accepted on ingestion. Nested arrays carry higher-depth chain values.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::length::LengthFunction;
use crate::measure::Measure;
use crate::order::{ChainValue, ElementId, Poset};
use crate::repcat::{CategoryLengthFunction, Fp, IndPoset, Quiver};
use crate::verify::{DetectionResult, MainPropertyReport, MainPropertyViolationKind};
use crate::Result;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueDoc {
    Int(i64),
    Str(String),
    List(Vec<ValueDoc>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LengthFunctionDoc {
    pub poset: PosetDoc,
    pub values: BTreeMap<String, ValueDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u8>,
    #[serde(rename = "maxLen", default, skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    #[serde(
        rename = "simpleLengths",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub simple_lengths: Option<BTreeMap<String, ValueDoc>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureDoc {
    pub order: Vec<String>,
    pub values: BTreeMap<String, ValueDoc>,
    pub ties: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndPosetDoc {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
    pub lengths: BTreeMap<String, String>,
    pub dims: BTreeMap<String, Vec<usize>>,
    pub labels: BTreeMap<String, String>,
}

pub fn value_to_doc(value: &ChainValue) -> ValueDoc {
    match value {
        ChainValue::Scalar(r) => ValueDoc::Str(r.to_string()),
        ChainValue::Chain(entries) => ValueDoc::List(entries.iter().map(value_to_doc).collect()),
    }
}

pub fn value_from_doc(doc: &ValueDoc) -> Result<ChainValue> {
    match doc {
        ValueDoc::Int(n) => Ok(ChainValue::integer(*n)),
        ValueDoc::Str(s) => {
            let r = BigRational::from_str(s.trim())
                .map_err(|e| Error::Parse(format!("bad rational `{}`: {}", s, e)))?;
            Ok(ChainValue::scalar(r))
        }
        ValueDoc::List(entries) => {
            let entries: Vec<ChainValue> =
                entries.iter().map(value_from_doc).collect::<Result<_>>()?;
            ChainValue::chain(entries)
        }
    }
}

/// Chain JSON is a bare array of element ids.
pub fn chain_to_doc(chain: &crate::order::Chain) -> Vec<String> {
    chain.members().iter().map(|m| m.to_string()).collect()
}

pub fn chain_from_doc(poset: &Poset, doc: &[String]) -> Result<crate::order::Chain> {
    crate::order::Chain::new(poset, doc.iter().cloned())
}

pub fn poset_to_doc(poset: &Poset) -> PosetDoc {
    PosetDoc {
        elements: poset.elements().iter().map(|e| e.to_string()).collect(),
        relations: poset
            .covers()
            .iter()
            .map(|&(lo, hi)| (poset.element(lo).to_string(), poset.element(hi).to_string()))
            .collect(),
    }
}

pub fn poset_from_doc(doc: &PosetDoc) -> Result<Arc<Poset>> {
    Poset::from_relations(
        doc.elements.clone(),
        doc.relations
            .iter()
            .map(|(a, b)| (ElementId::new(a.clone()), ElementId::new(b.clone()))),
    )
}

pub fn length_function_to_doc(f: &LengthFunction) -> LengthFunctionDoc {
    let values = f
        .poset()
        .elements()
        .iter()
        .zip(f.values())
        .map(|(e, v)| (e.to_string(), value_to_doc(v)))
        .collect();
    LengthFunctionDoc {
        poset: poset_to_doc(f.poset()),
        values,
    }
}

pub fn length_function_from_doc(doc: &LengthFunctionDoc) -> Result<LengthFunction> {
    let poset = poset_from_doc(&doc.poset)?;
    let mut values = BTreeMap::new();
    for (k, v) in &doc.values {
        values.insert(k.clone(), value_from_doc(v)?);
    }
    LengthFunction::new(poset, &values)
}

pub fn measure_to_doc(measure: &Measure) -> Result<MeasureDoc> {
    let (order, ties) = measure.sorted_order()?;
    let values = measure
        .poset()
        .elements()
        .iter()
        .zip(measure.values())
        .map(|(e, v)| (e.to_string(), value_to_doc(v)))
        .collect();
    Ok(MeasureDoc {
        order: order.iter().map(ElementId::to_string).collect(),
        values,
        ties: ties
            .iter()
            .map(|g| g.iter().map(ElementId::to_string).collect())
            .collect(),
    })
}

/// Sorted-order document for a plain length function (used by iterated
/// measures, whose output is a length function again).
pub fn length_function_order_doc(f: &LengthFunction) -> Result<MeasureDoc> {
    let (order, ties) = crate::length::sorted_order(f)?;
    let values = f
        .poset()
        .elements()
        .iter()
        .zip(f.values())
        .map(|(e, v)| (e.to_string(), value_to_doc(v)))
        .collect();
    Ok(MeasureDoc {
        order: order.iter().map(ElementId::to_string).collect(),
        values,
        ties: ties
            .iter()
            .map(|g| g.iter().map(ElementId::to_string).collect())
            .collect(),
    })
}

/// Parsed quiver input: the quiver, the field, the length bound, and the
/// length function on simples (defaulting to composition length).
pub struct QuiverInput {
    pub quiver: Arc<Quiver>,
    pub field: Fp,
    pub max_len: usize,
    pub ell: CategoryLengthFunction,
}

pub const DEFAULT_MAX_LEN: usize = 5;

pub fn quiver_from_doc(doc: &QuiverDoc) -> Result<QuiverInput> {
    let quiver = Quiver::new(doc.vertices.clone(), doc.arrows.iter().cloned())?;
    let field = Fp::new(doc.p.unwrap_or(2))?;
    let max_len = doc.max_len.unwrap_or(DEFAULT_MAX_LEN);
    let ell = match &doc.simple_lengths {
        None => CategoryLengthFunction::composition_length(quiver.vertex_count()),
        Some(map) => {
            let mut values = Vec::with_capacity(quiver.vertex_count());
            for v in quiver.vertices() {
                let doc_value = map.get(v).ok_or_else(|| {
                    Error::InvalidInput(format!("no simple length for vertex `{}`", v))
                })?;
                match value_from_doc(doc_value)? {
                    ChainValue::Scalar(r) => values.push(r),
                    _ => {
                        return Err(Error::InvalidInput(
                            "simple lengths must be scalars".to_owned(),
                        ))
                    }
                }
            }
            CategoryLengthFunction::new(values)?
        }
    };
    Ok(QuiverInput {
        quiver,
        field,
        max_len,
        ell,
    })
}

pub fn quiver_to_doc(input: &QuiverInput) -> QuiverDoc {
    QuiverDoc {
        vertices: input.quiver.vertices().to_vec(),
        arrows: input
            .quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                (
                    input.quiver.vertex(s).to_owned(),
                    input.quiver.vertex(t).to_owned(),
                )
            })
            .collect(),
        p: Some(input.field.p()),
        max_len: Some(input.max_len),
        simple_lengths: Some(
            input
                .quiver
                .vertices()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    (
                        v.clone(),
                        ValueDoc::Str(input.ell.simple_value(i).to_string()),
                    )
                })
                .collect(),
        ),
    }
}

pub fn ind_poset_to_doc(ip: &IndPoset) -> IndPosetDoc {
    let poset_doc = poset_to_doc(ip.poset());
    IndPosetDoc {
        elements: poset_doc.elements,
        relations: poset_doc.relations,
        lengths: ip
            .classes()
            .iter()
            .map(|c| (c.label.clone(), c.length.to_string()))
            .collect(),
        dims: ip
            .classes()
            .iter()
            .map(|c| (c.label.clone(), c.rep.dims().to_vec()))
            .collect(),
        labels: ip
            .classes()
            .iter()
            .map(|c| (c.label.clone(), c.label.clone()))
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MainPropertyReportDoc {
    pub checked: usize,
    pub violations: Vec<MainPropertyViolationDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MainPropertyViolationDoc {
    pub subobject: String,
    pub summands: Vec<String>,
    pub kind: String,
}

pub fn main_property_report_to_doc(report: &MainPropertyReport) -> MainPropertyReportDoc {
    MainPropertyReportDoc {
        checked: report.checked_triples,
        violations: report
            .violations
            .iter()
            .map(|v| MainPropertyViolationDoc {
                subobject: v.subobject.clone(),
                summands: v.summands.clone(),
                kind: match v.kind {
                    MainPropertyViolationKind::InequalityFailed => "inequality".to_owned(),
                    MainPropertyViolationKind::SummandFailed => "summand".to_owned(),
                },
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DetectionResultDoc {
    pub detected: Vec<String>,
    pub witnesses: BTreeMap<String, BTreeMap<String, String>>,
}

pub fn detection_result_to_doc(quiver: &Quiver, result: &DetectionResult) -> DetectionResultDoc {
    DetectionResultDoc {
        detected: result.detected.clone(),
        witnesses: result
            .witnesses
            .iter()
            .map(|(label, ell)| {
                (
                    label.clone(),
                    quiver
                        .vertices()
                        .iter()
                        .enumerate()
                        .map(|(i, v)| (v.clone(), ell.simple_value(i).to_string()))
                        .collect(),
                )
            })
            .collect(),
    }
}
