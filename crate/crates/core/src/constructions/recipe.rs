//! Declarative construction requests and their built artifacts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    apex_witness, biregular_bipartite, blowup_cover, c5_blowup_regular, clique_minus_matching,
    cycle_rich, deficient_high_girth_with, g_family, high_girth_regular_with, rex_paths_closed_form,
    theorem6_extremal_with, turan_graph, ConstructionError, CyclePartition, DeficiencyPattern,
    DEFAULT_SWAP_BUDGET,
};
use crate::graph::Graph;
use crate::io::parse_graph_text;
use crate::named;
use crate::patterns::parse_pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Turan,
    CliqueMinusMatching,
    GFamily,
    Theorem6,
    C5BlowupRegular,
    BiregularBipartite,
    HighGirthRegular,
    DeficientHighGirth,
    BlowupCover,
    CycleRich,
    ApexWitness,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Turan,
        Family::CliqueMinusMatching,
        Family::GFamily,
        Family::Theorem6,
        Family::C5BlowupRegular,
        Family::BiregularBipartite,
        Family::HighGirthRegular,
        Family::DeficientHighGirth,
        Family::BlowupCover,
        Family::CycleRich,
        Family::ApexWitness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Turan => "TURAN",
            Family::CliqueMinusMatching => "CLIQUE_MINUS_MATCHING",
            Family::GFamily => "G_FAMILY",
            Family::Theorem6 => "THEOREM6",
            Family::C5BlowupRegular => "C5_BLOWUP_REGULAR",
            Family::BiregularBipartite => "BIREGULAR_BIPARTITE",
            Family::HighGirthRegular => "HIGH_GIRTH_REGULAR",
            Family::DeficientHighGirth => "DEFICIENT_HIGH_GIRTH",
            Family::BlowupCover => "BLOWUP_COVER",
            Family::CycleRich => "CYCLE_RICH",
            Family::ApexWitness => "APEX_WITNESS",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL.into_iter().find(|f| f.name() == norm)
    }

    /// Integer parameters the family needs.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            Family::Turan => &["n", "k"],
            Family::CliqueMinusMatching => &["m"],
            Family::GFamily => &["k"],
            Family::Theorem6 => &["n", "k"],
            Family::C5BlowupRegular => &["n", "d"],
            Family::BiregularBipartite => &["a", "da", "b", "db"],
            Family::HighGirthRegular => &["n", "r", "g"],
            Family::DeficientHighGirth => &["n", "r", "g", "i", "dist"],
            Family::BlowupCover => &["g"],
            Family::CycleRich => &["m", "ell", "k"],
            Family::ApexWitness => &["n"],
        }
    }

    /// Graph-valued parameters, given as pattern shorthand, graph6 or an
    /// edge list.
    pub fn required_graphs(self) -> &'static [&'static str] {
        match self {
            Family::BlowupCover => &["h", "f"],
            _ => &[],
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(
            self,
            Family::HighGirthRegular | Family::DeficientHighGirth | Family::BlowupCover
        )
    }
}

/// A family tag with its parameters. Serializes as
/// `{"family": ..., "params": {...}, "seed": ...}`; deserialization also
/// accepts the parameters inlined next to `family`, with string values taken
/// as graph parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Value")]
pub struct ConstructionRecipe {
    pub family: Family,
    pub params: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub graphs: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl TryFrom<Value> for ConstructionRecipe {
    type Error = String;

    fn try_from(v: Value) -> Result<Self, String> {
        let Value::Object(map) = v else {
            return Err("recipe must be a JSON object".into());
        };
        let mut family = None;
        let mut params = BTreeMap::new();
        let mut graphs = BTreeMap::new();
        let mut seed = None;
        let mut put = |key: &str, val: &Value| -> Result<(), String> {
            match val {
                Value::Number(x) => {
                    let x = x.as_i64().ok_or_else(|| format!("parameter {key} is not an integer"))?;
                    params.insert(key.to_string(), x);
                }
                Value::String(s) => {
                    graphs.insert(key.to_string(), s.clone());
                }
                _ => return Err(format!("parameter {key} must be an integer or a graph string")),
            }
            Ok(())
        };
        for (key, val) in &map {
            match key.as_str() {
                "family" => {
                    let s = val.as_str().ok_or("family must be a string")?;
                    family = Some(Family::parse(s).ok_or_else(|| format!("unknown family {s}"))?);
                }
                "seed" => {
                    if !val.is_null() {
                        seed = Some(val.as_u64().ok_or("seed must be a non-negative integer")?);
                    }
                }
                "params" | "graphs" => {
                    let Value::Object(inner) = val else {
                        return Err(format!("{key} must be an object"));
                    };
                    for (k, v) in inner {
                        put(k, v)?;
                    }
                }
                _ => put(key, val)?,
            }
        }
        let recipe = ConstructionRecipe {
            family: family.ok_or("missing family")?,
            params,
            graphs,
            seed,
        };
        recipe.validate().map_err(|e| e.to_string())?;
        Ok(recipe)
    }
}

/// A built graph with the properties it is expected to have.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub label: String,
    pub graph: Graph,
    pub expected_degree: Option<usize>,
    pub expected_girth_min: Option<usize>,
    pub expected_triangles: Option<BigUint>,
    /// Graphs the artifact must not contain.
    pub forbidden: Vec<(String, Graph)>,
    pub notes: Vec<String>,
}

impl Artifact {
    fn new(label: impl Into<String>, graph: Graph) -> Self {
        Artifact {
            label: label.into(),
            graph,
            expected_degree: None,
            expected_girth_min: None,
            expected_triangles: None,
            forbidden: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn degree(mut self, d: usize) -> Self {
        self.expected_degree = Some(d);
        self
    }

    fn girth(mut self, g: usize) -> Self {
        self.expected_girth_min = Some(g);
        self
    }

    fn triangles(mut self, t: impl Into<BigUint>) -> Self {
        self.expected_triangles = Some(t.into());
        self
    }

    fn forbid(mut self, name: impl Into<String>, f: Graph) -> Self {
        self.forbidden.push((name.into(), f));
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn parse_graph_param(s: &str) -> Result<Graph, ConstructionError> {
    parse_pattern(s)
        .or_else(|_| parse_graph_text(s))
        .map_err(|e| ConstructionError::BadParams(format!("graph {s:?}: {e}")))
}

impl ConstructionRecipe {
    pub fn new(family: Family) -> Self {
        ConstructionRecipe {
            family,
            params: BTreeMap::new(),
            graphs: BTreeMap::new(),
            seed: None,
        }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_graph(mut self, key: &str, value: &str) -> Self {
        self.graphs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recipe serializes")
    }

    fn get(&self, key: &str) -> Result<usize, ConstructionError> {
        let v = *self
            .params
            .get(key)
            .ok_or_else(|| ConstructionError::BadParams(format!("missing parameter {key}")))?;
        usize::try_from(v).map_err(|_| ConstructionError::BadParams(format!("parameter {key} = {v} is negative")))
    }

    fn graph(&self, key: &str) -> Result<Graph, ConstructionError> {
        let s = self
            .graphs
            .get(key)
            .ok_or_else(|| ConstructionError::BadParams(format!("missing graph parameter {key}")))?;
        parse_graph_param(s)
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        for p in self.family.required_params() {
            self.get(p)?;
        }
        for g in self.family.required_graphs() {
            self.graph(g)?;
        }
        if self.family.is_randomized() && self.seed.is_none() {
            return Err(ConstructionError::BadParams(format!(
                "{} needs a seed",
                self.family.name()
            )));
        }
        Ok(())
    }

    fn budget(&self) -> Result<u64, ConstructionError> {
        match self.params.get("budget") {
            Some(_) => Ok(self.get("budget")? as u64),
            None => Ok(DEFAULT_SWAP_BUDGET),
        }
    }

    pub fn build(&self) -> Result<Vec<Artifact>, ConstructionError> {
        self.validate()?;
        let seed = self.seed.unwrap_or(0);
        let out = match self.family {
            Family::Turan => {
                let (n, k) = (self.get("n")?, self.get("k")?);
                let g = turan_graph(n, k)?;
                let mut a = Artifact::new(format!("T({n},{k})"), g).forbid(format!("K{}", k + 1), named::complete(k + 1));
                if n % k == 0 {
                    a = a.degree(n - n / k);
                }
                vec![a]
            }
            Family::CliqueMinusMatching => {
                let m = self.get("m")?;
                let g = clique_minus_matching(m)?;
                vec![Artifact::new(format!("K{m}-M"), g)
                    .degree(m.saturating_sub(2))
                    .triangles(binom(m / 2, 3) * 8u32)]
            }
            Family::GFamily => {
                let k = self.get("k")?;
                let t = binom(k / 2 - 1, 3) * 8u32 + 3u32 - (k / 2) as u32;
                g_family(k)?
                    .into_iter()
                    .map(|(p, g)| {
                        Artifact::new(format!("K{}-C{:?}", k - 1, p.parts()), g)
                            .degree(k - 4)
                            .triangles(t.clone())
                    })
                    .collect()
            }
            Family::Theorem6 => {
                let (n, k) = (self.get("n")?, self.get("k")?);
                let member = match self.params.get("member") {
                    Some(_) => {
                        let idx = self.get("member")?;
                        let all = CyclePartition::all(k.saturating_sub(1));
                        Some(all.get(idx).cloned().ok_or_else(|| {
                            ConstructionError::BadParams(format!("member {idx} out of range 0..{}", all.len()))
                        })?)
                    }
                    None => None,
                };
                let g = theorem6_extremal_with(n, k, member)?;
                let plan = super::theorem6_plan(n, k)?;
                vec![Artifact::new(format!("theorem6({n},{k})"), g)
                    .degree(plan.regularity())
                    .triangles(rex_paths_closed_form(n, k)?)
                    .forbid(format!("P{k}"), named::path(k))
                    .note(format!("case {}", plan.case))]
            }
            Family::C5BlowupRegular => {
                let (n, d) = (self.get("n")?, self.get("d")?);
                let b = c5_blowup_regular(n, d, seed)?;
                let sizes: Vec<usize> = b.classes.iter().map(|c| c.len()).collect();
                vec![Artifact::new(format!("C5 blow-up {sizes:?}"), b.graph)
                    .degree(d)
                    .triangles(0u32)]
            }
            Family::BiregularBipartite => {
                let (a, da, b, db) = (self.get("a")?, self.get("da")?, self.get("b")?, self.get("db")?);
                let g = biregular_bipartite(a, da, b, db)?;
                let mut art = Artifact::new(format!("biregular({a},{da},{b},{db})"), g).triangles(0u32);
                if da == db {
                    art = art.degree(da);
                }
                vec![art]
            }
            Family::HighGirthRegular => {
                let (n, r, g) = (self.get("n")?, self.get("r")?, self.get("g")?);
                let gr = high_girth_regular_with(n, r, g, seed, self.budget()?)?;
                vec![Artifact::new(format!("high girth ({n},{r},{g})"), gr).degree(r).girth(g)]
            }
            Family::DeficientHighGirth => {
                let (n, r, g) = (self.get("n")?, self.get("r")?, self.get("g")?);
                let pat = DeficiencyPattern {
                    count: self.get("i")?,
                    min_pairwise_distance: self.get("dist")?.max(1),
                };
                let d = deficient_high_girth_with(n, r, g, pat, seed, self.budget()?)?;
                let mut art = Artifact::new(format!("deficient ({n},{r},{g},i={})", pat.count), d.graph)
                    .girth(g)
                    .note(format!("deficient vertices {:?}", d.deficient));
                if pat.count == 0 {
                    art = art.degree(r);
                }
                vec![art]
            }
            Family::BlowupCover => {
                let (h, f, g) = (self.graph("h")?, self.graph("f")?, self.get("g")?);
                let c = blowup_cover(&h, &f, g, seed)?;
                vec![Artifact::new("blowup cover", c.graph)
                    .degree(c.degree)
                    .forbid(self.graphs["f"].clone(), f)
                    .note(format!("core vertices {:?}", c.core))
                    .note(format!("gadget girth at least {g}, deficient vertices at distance at least {}", c.min_pairwise_distance))]
            }
            Family::CycleRich => {
                let (m, ell, k) = (self.get("m")?, self.get("ell")?, self.get("k")?);
                let c = cycle_rich(m, ell, k)?;
                vec![Artifact::new(format!("cycle rich ({m},{ell},{k})"), c.graph)
                    .degree(2 * m)
                    .forbid(format!("C{}", 2 * k + 1), named::cycle(2 * k + 1))
                    .note(format!("core order {}", c.core_order))]
            }
            Family::ApexWitness => {
                let n = self.get("n")?;
                let g = apex_witness(n)?;
                let r = 2 * (n - 1) / 5;
                vec![Artifact::new(format!("apex witness ({n})"), g)
                    .degree(r)
                    .triangles(BigUint::from(r * r / 4 - r / 2))
                    .note(format!("apex vertex {}", n - 1))]
            }
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let r = ConstructionRecipe::from_json(r#"{"family":"THEOREM6","n":12,"k":7}"#).unwrap();
        assert_eq!(r, ConstructionRecipe::new(Family::Theorem6).with("n", 12).with("k", 7));
        let back = ConstructionRecipe::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.to_json(), r#"{"family":"THEOREM6","params":{"k":7,"n":12}}"#);
        let c = ConstructionRecipe::from_json(
            r#"{"family":"BLOWUP_COVER","params":{"g":5},"graphs":{"h":"K2","f":"K3"},"seed":3}"#,
        )
        .unwrap();
        assert_eq!(c.seed, Some(3));
        assert!(ConstructionRecipe::from_json(r#"{"family":"HIGH_GIRTH_REGULAR","n":10,"r":3,"g":5}"#).is_err());
        assert!(ConstructionRecipe::from_json(r#"{"family":"TURAN","n":10}"#).is_err());
        assert!(ConstructionRecipe::from_json(r#"{"family":"NOPE"}"#).is_err());
    }

    #[test]
    fn builds() {
        let a = ConstructionRecipe::new(Family::Theorem6).with("n", 12).with("k", 7).build().unwrap();
        assert_eq!(a[0].expected_triangles, Some(BigUint::from(40u32)));
        let a = ConstructionRecipe::new(Family::GFamily).with("k", 10).build().unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.iter().all(|x| x.expected_triangles == Some(BigUint::from(30u32))));
        let a = ConstructionRecipe::new(Family::HighGirthRegular)
            .with("n", 10)
            .with("r", 3)
            .with("g", 5)
            .with_seed(1)
            .build()
            .unwrap();
        assert!(a[0].graph.girth().unwrap() >= 5);
        for fam in Family::ALL {
            assert_eq!(Family::parse(fam.name()), Some(fam));
        }
    }
}
