//! Where real forms come from: the built-in catalog, a directory of catalog
//! documents, or a single document file.

use std::fs;
use std::path::{Path, PathBuf};

use cartan_ds::realform::{catalog_entries, catalog_form, CatalogDocument, FormId, RealForm, RealFormSpec};
use cartan_ds::Rational;

use crate::error::{CliError, Context};

pub struct Source {
    pub label: String,
    pub spec: RealFormSpec<Rational>,
}

pub fn read_document(path: &Path) -> Result<CatalogDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::json(path, &e))
}

fn document_spec(path: &Path, doc: &CatalogDocument) -> Result<RealFormSpec<Rational>, CliError> {
    doc.to_spec().context(|| path.display().to_string())
}

/// Catalog documents of a directory in file-name order, or the built-in
/// catalog.
pub fn catalog(dir: Option<&Path>) -> Result<Vec<Source>, CliError> {
    let Some(dir) = dir else {
        return Ok(catalog_entries()
            .into_iter()
            .map(|id| Source { label: id.to_string(), spec: RealFormSpec::Catalog(id) })
            .collect());
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::io(dir, e))?
        .map(|e| e.map(|e| e.path()).map_err(|err| CliError::io(dir, err)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let doc = read_document(p)?;
            Ok(Source { label: doc.id.clone(), spec: document_spec(p, &doc)? })
        })
        .collect()
}

/// A form argument: a document path, an id in the catalog directory, or a
/// built-in catalog id.
pub fn resolve(arg: &str, dir: Option<&Path>) -> Result<Source, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let doc = read_document(path)?;
        return Ok(Source { label: doc.id.clone(), spec: document_spec(path, &doc)? });
    }
    if dir.is_some() {
        let wanted = normalized_id(arg);
        if let Some(s) = catalog(dir)?.into_iter().find(|s| normalized_id(&s.label) == wanted) {
            return Ok(s);
        }
    }
    let id: FormId = arg.parse().context(String::new)?;
    let id = id.normalized().context(String::new)?;
    Ok(Source { label: id.to_string(), spec: RealFormSpec::Catalog(id) })
}

fn normalized_id(s: &str) -> String {
    s.parse::<FormId>()
        .and_then(FormId::normalized)
        .map(|id| id.to_string())
        .unwrap_or_else(|_| s.to_string())
}

pub fn build(src: &Source) -> Result<RealForm<Rational>, CliError> {
    catalog_form(&src.spec).context(|| src.label.clone())
}
