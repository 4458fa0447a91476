//! Spectral pseudometric, fuzzy weights and the spectrum embedding.

pub mod eigen;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::spectrum::{spectrum, SpectrumSpace};
use crate::Options;

/// `ν_γ(a)` for every parameter and element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValuationTable {
    /// `values[γ][a]`.
    pub values: Vec<Vec<f64>>,
}

impl ValuationTable {
    /// `ν_γ(a) = index of a`, independent of `γ`.
    pub fn index(s: &Semiring) -> Self {
        ValuationTable {
            values: vec![(0..s.size()).map(|a| a as f64).collect(); s.gamma_size()],
        }
    }

    /// From a map `parameter label → values`, which must cover every parameter.
    pub fn from_map(s: &Semiring, map: &BTreeMap<String, Vec<f64>>) -> Result<Self> {
        let mut values = Vec::with_capacity(s.gamma_size());
        for label in s.gamma() {
            let row = map.get(label).ok_or_else(|| Error::Reference {
                label: label.clone(),
                context: "valuation".into(),
            })?;
            if row.len() != s.size() {
                return Err(Error::Shape(format!(
                    "valuation for {label} has {} entries, expected {}",
                    row.len(),
                    s.size()
                )));
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(Error::Shape(format!("valuation for {label} is not finite")));
            }
            values.push(row.clone());
        }
        for key in map.keys() {
            if s.gamma_index_of(key).is_none() {
                return Err(Error::Reference {
                    label: key.clone(),
                    context: "valuation".into(),
                });
            }
        }
        Ok(ValuationTable { values })
    }

    pub fn parse(s: &Semiring, text: &str) -> Result<Self> {
        let map: BTreeMap<String, Vec<f64>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_map(s, &map)
    }

    /// `1 + max |ν_γ(a) − ν_γ(b)|`.
    pub fn max_distance(&self) -> f64 {
        let spread = self
            .values
            .iter()
            .map(|row| {
                let hi = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let lo = row.iter().copied().fold(f64::INFINITY, f64::min);
                if row.is_empty() {
                    0.0
                } else {
                    hi - lo
                }
            })
            .fold(0.0, f64::max);
        1.0 + spread
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricMatrix {
    pub distances: Vec<Vec<f64>>,
    /// Pairs with no common survivor in `T ∖ (P ∪ Q)`, set to `max_distance`.
    pub flagged: Vec<(usize, usize)>,
    pub max_distance: f64,
}

/// `d(P,Q) = min_γ min_{a,b ∉ P∪Q} |ν_γ(a) − ν_γ(b)|`.
pub fn metric_matrix(s: &Semiring, space: &SpectrumSpace, nu: &ValuationTable) -> Result<MetricMatrix> {
    let k = space.points.len();
    if k == 0 {
        return Err(Error::Precondition(format!("{} has an empty spectrum", s.name())));
    }
    let max_distance = nu.max_distance();
    let mut distances = vec![vec![0.0; k]; k];
    let mut flagged = Vec::new();
    for p in 0..k {
        for q in p + 1..k {
            let survivors: Vec<usize> = (0..s.size())
                .filter(|&a| !space.points[p].contains(a) && !space.points[q].contains(a))
                .collect();
            let d = if survivors.is_empty() {
                flagged.push((p, q));
                max_distance
            } else {
                let mut best = f64::INFINITY;
                for row in &nu.values {
                    for &a in &survivors {
                        for &b in &survivors {
                            best = best.min((row[a] - row[b]).abs());
                        }
                    }
                }
                best
            };
            distances[p][q] = d;
            distances[q][p] = d;
        }
    }
    Ok(MetricMatrix {
        distances,
        flagged,
        max_distance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum WeightScheme {
    /// `μ(P) = 1 − |P| / |T|`.
    Default,
    /// Point label (as rendered) to weight.
    Table(BTreeMap<String, f64>),
}

impl WeightScheme {
    pub fn parse(text: &str) -> Result<Self> {
        let map: BTreeMap<String, f64> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(WeightScheme::Table(map))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyWeights {
    pub weights: Vec<f64>,
    /// `μ(V(I)) = sup_{P ∈ V(I)} μ(P)`, zero for an empty closed set; one per ideal.
    pub closed_set_weights: Vec<f64>,
    /// `I ⊆ J ⇒ μ(V(J)) ≤ μ(V(I))` over the whole ideal lattice.
    pub monotone: bool,
    pub monotonicity_failures: Vec<(usize, usize)>,
}

pub fn fuzzy_weights(s: &Semiring, space: &SpectrumSpace, scheme: &WeightScheme) -> Result<FuzzyWeights> {
    let labels = space.point_labels(s);
    let weights: Vec<f64> = match scheme {
        WeightScheme::Default => space
            .points
            .iter()
            .map(|p| 1.0 - p.len() as f64 / s.size() as f64)
            .collect(),
        WeightScheme::Table(map) => labels
            .iter()
            .map(|l| {
                let w = *map.get(l).ok_or_else(|| Error::Reference {
                    label: l.clone(),
                    context: "weights".into(),
                })?;
                if (0.0..=1.0).contains(&w) {
                    Ok(w)
                } else {
                    Err(Error::Shape(format!("weight {w} for {l} is outside [0,1]")))
                }
            })
            .collect::<Result<_>>()?,
    };
    let closed_set_weights: Vec<f64> = space
        .closed_sets
        .iter()
        .map(|c| c.points.iter().map(|&p| weights[p]).fold(0.0, f64::max))
        .collect();
    let ideals = &space.lattice.ideals;
    let mut monotonicity_failures = Vec::new();
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            if crate::subset::is_subset(&ideals[i].members, &ideals[j].members)
                && closed_set_weights[j] > closed_set_weights[i]
            {
                monotonicity_failures.push((i, j));
            }
        }
    }
    Ok(FuzzyWeights {
        weights,
        closed_set_weights,
        monotone: monotonicity_failures.is_empty(),
        monotonicity_failures,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumGraph {
    pub structure: String,
    pub points: Vec<String>,
    pub metric: Vec<Vec<f64>>,
    pub flagged_pairs: Vec<(usize, usize)>,
    pub weights: Vec<f64>,
    pub adjacency: Vec<Vec<f64>>,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[P][j]`.
    pub eigenvectors: Vec<Vec<f64>>,
    pub k: usize,
    pub coordinates: Vec<Vec<f64>>,
    pub reconstruction_error: f64,
    pub orthonormality_error: f64,
    pub warnings: Vec<String>,
}

/// Normalises `-0.0` so exported text does not depend on rounding direction.
fn tidy(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Spectrum, metric, weights, adjacency `e^{-d}·μ·μ`, eigendecomposition
/// and the top-`k` coordinates.
pub fn embed(s: &Semiring, k: usize, nu: &ValuationTable, scheme: &WeightScheme, opts: &Options) -> Result<SpectrumGraph> {
    let space = spectrum(s, opts)?;
    let metric = metric_matrix(s, &space, nu)?;
    let weights = fuzzy_weights(s, &space, scheme)?;
    let n = space.points.len();
    let mut warnings = Vec::new();
    let k = if k > n {
        warnings.push(format!("k = {k} clamped to {n} points"));
        n
    } else {
        k
    };
    for &(p, q) in &metric.flagged {
        warnings.push(format!("no common survivor for points {p} and {q}; distance set to {}", metric.max_distance));
    }
    let w = &weights.weights;
    let adjacency: Vec<Vec<f64>> = (0..n)
        .map(|p| (0..n).map(|q| (-metric.distances[p][q]).exp() * w[p] * w[q]).collect())
        .collect();
    let e = eigen::jacobi(&adjacency);
    let reconstruction_error = eigen::reconstruction_error(&adjacency, &e);
    let orthonormality_error = eigen::orthonormality_error(&e);
    let coordinates = e.vectors.iter().map(|row| row[..k].iter().map(|&x| tidy(x)).collect()).collect();
    Ok(SpectrumGraph {
        structure: s.name().to_string(),
        points: space.point_labels(s),
        metric: metric.distances,
        flagged_pairs: metric.flagged,
        weights: weights.weights,
        adjacency,
        eigenvalues: e.values.iter().map(|&x| tidy(x)).collect(),
        eigenvectors: e.vectors.iter().map(|r| r.iter().map(|&x| tidy(x)).collect()).collect(),
        k,
        coordinates,
        reconstruction_error,
        orthonormality_error,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
    Csv,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "dot" => Ok(GraphFormat::Dot),
            "csv" => Ok(GraphFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_graph(g: &SpectrumGraph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Json => Ok(serde_json::to_string_pretty(g)? + "\n"),
        GraphFormat::Dot => {
            let mut out = format!("graph {} {{\n", quote(&g.structure));
            for (p, label) in g.points.iter().enumerate() {
                out += &format!("  {} [weight=\"{:.6}\"];\n", quote(label), g.weights[p]);
            }
            for p in 0..g.points.len() {
                for q in p + 1..g.points.len() {
                    if g.adjacency[p][q] != 0.0 {
                        out += &format!(
                            "  {} -- {} [label=\"{:.6}\"];\n",
                            quote(&g.points[p]),
                            quote(&g.points[q]),
                            g.adjacency[p][q]
                        );
                    }
                }
            }
            out += "}\n";
            Ok(out)
        }
        GraphFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["label".to_string(), "weight".to_string()];
            header.extend((1..=g.k).map(|i| format!("x{i}")));
            let csv_err = |e: csv::Error| Error::Shape(e.to_string());
            w.write_record(&header).map_err(csv_err)?;
            for (p, label) in g.points.iter().enumerate() {
                let mut row = vec![label.clone(), g.weights[p].to_string()];
                row.extend(g.coordinates[p].iter().map(|x| x.to_string()));
                w.write_record(&row).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Shape(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Shape(e.to_string()))
        }
    }
}
