use std::path::{Path, PathBuf};

use rexlab_core::constructions::{Artifact, ConstructionRecipe, Family};
use rexlab_core::io::graph6_encode;
use rexlab_core::named;
use rexlab_core::patterns::{contains, count_copies};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct ArtifactManifest {
    pub label: String,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub degree: Option<usize>,
    pub girth: Option<usize>,
    pub triangles: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Manifest {
    pub recipe: ConstructionRecipe,
    pub artifacts: Vec<ArtifactManifest>,
}

impl Manifest {
    pub fn all_ok(&self) -> bool {
        self.artifacts.iter().all(|a| a.checks.iter().all(|c| c.ok))
    }
}

fn show<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn describe(a: Artifact) -> ArtifactManifest {
    let g = &a.graph;
    let degree = g.is_regular();
    let girth = g.girth();
    let triangles = count_copies(&named::complete(3), g).copies;
    let mut checks = Vec::new();
    if let Some(d) = a.expected_degree {
        checks.push(Check {
            name: "regular".into(),
            expected: d.to_string(),
            observed: show(degree),
            ok: degree == Some(d),
        });
    }
    if let Some(want) = a.expected_girth_min {
        checks.push(Check {
            name: "girth at least".into(),
            expected: want.to_string(),
            observed: show(girth),
            ok: girth.is_none_or(|x| x >= want),
        });
    }
    if let Some(t) = &a.expected_triangles {
        checks.push(Check {
            name: "triangles".into(),
            expected: t.to_string(),
            observed: triangles.to_string(),
            ok: *t == triangles,
        });
    }
    for (name, f) in &a.forbidden {
        let found = contains(f, g);
        checks.push(Check {
            name: format!("{name}-free"),
            expected: "absent".into(),
            observed: if found { "present" } else { "absent" }.into(),
            ok: !found,
        });
    }
    ArtifactManifest {
        label: a.label,
        graph6: graph6_encode(g),
        order: g.order(),
        edges: g.edge_count(),
        degree,
        girth,
        triangles: triangles.to_string(),
        checks,
        notes: a.notes,
    }
}

pub struct FlagParams {
    pub family: Option<String>,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub r: Option<i64>,
    pub g: Option<i64>,
    pub params: Vec<String>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
}

fn key_value(s: &str) -> Result<(&str, &str)> {
    s.split_once('=')
        .ok_or_else(|| CliError::Usage(format!("expected key=value, got {s:?}")))
}

/// Assembles a recipe from a JSON argument and/or flags. Flags override
/// the JSON; randomized families fall back to seed 0.
pub fn recipe_from(json: Option<&str>, flags: &FlagParams) -> Result<ConstructionRecipe> {
    let mut obj = match json {
        Some(s) => {
            let v: serde_json::Value = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("recipe: {e}")))?;
            match v {
                serde_json::Value::Object(m) => m,
                _ => return Err(CliError::Usage("recipe must be a JSON object".into())),
            }
        }
        None => serde_json::Map::new(),
    };
    if let Some(f) = &flags.family {
        obj.insert("family".into(), f.to_uppercase().replace('-', "_").into());
    }
    let family = obj
        .get("family")
        .and_then(|v| v.as_str())
        .and_then(Family::parse)
        .ok_or_else(|| CliError::Usage("missing or unknown family".into()))?;
    let mut params = match obj.remove("params") {
        Some(serde_json::Value::Object(m)) => m,
        Some(_) => return Err(CliError::Usage("params must be an object".into())),
        None => serde_json::Map::new(),
    };
    for (key, v) in [("n", flags.n), ("k", flags.k), ("r", flags.r), ("g", flags.g)] {
        if let Some(v) = v {
            params.insert(key.into(), v.into());
        }
    }
    if let Some(b) = flags.budget {
        params.insert("budget".into(), b.into());
    }
    for p in &flags.params {
        let (k, v) = key_value(p)?;
        let val = match v.parse::<i64>() {
            Ok(x) => x.into(),
            Err(_) => v.into(),
        };
        params.insert(k.into(), val);
    }
    obj.insert("params".into(), params.into());
    if let Some(s) = flags.seed {
        obj.insert("seed".into(), s.into());
    } else if family.is_randomized() && obj.get("seed").is_none_or(|v| v.is_null()) {
        obj.insert("seed".into(), 0.into());
    }
    ConstructionRecipe::from_json(&serde_json::Value::Object(obj).to_string()).map_err(CliError::Usage)
}

pub fn build(recipe: ConstructionRecipe) -> Result<Manifest> {
    let artifacts = recipe.build()?.into_iter().map(describe).collect();
    Ok(Manifest { recipe, artifacts })
}

/// `out` receives the graph6 lines, the manifest goes next to it with a
/// `.json` extension.
pub fn write(manifest: &Manifest, out: &Path) -> Result<PathBuf> {
    let io = |p: &Path, e: std::io::Error| CliError::Usage(format!("{}: {e}", p.display()));
    let mut g6 = String::new();
    for a in &manifest.artifacts {
        g6.push_str(&a.graph6);
        g6.push('\n');
    }
    std::fs::write(out, g6).map_err(|e| io(out, e))?;
    let mpath = out.with_extension("json");
    let body = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    std::fs::write(&mpath, body + "\n").map_err(|e| io(&mpath, e))?;
    Ok(mpath)
}
