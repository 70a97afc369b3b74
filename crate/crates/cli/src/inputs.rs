use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use ehrlab::poset::poset_from_shape;
use ehrlab::{Partition, Poset, RootedTree, YoungShape};

/// Comma-separated integers such as `8,5,4`.
pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .with_context(|| format!("not an integer: {t:?}"))
        })
        .collect()
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    Ok(Partition::new(parse_list(text)?)?)
}

pub fn parse_shape(text: &str) -> Result<YoungShape> {
    let parts = parse_list(text)?
        .into_iter()
        .map(|v| usize::try_from(v).with_context(|| format!("negative part {v} in shape")))
        .collect::<Result<Vec<_>>>()?;
    Ok(YoungShape::from_padded(parts)?)
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// One poset-like input: a Young diagram, a poset file or a rooted tree file.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PosetInput {
    /// Young diagram, e.g. `8,5,4`.
    #[arg(long)]
    pub shape: Option<String>,
    /// Poset file: a line `n`, then cover relations `a < b` (1-indexed).
    #[arg(long)]
    pub poset: Option<PathBuf>,
    /// Tree file: a line `n`, then lines `child parent` (1-indexed).
    #[arg(long)]
    pub tree: Option<PathBuf>,
}

pub enum Loaded {
    Shape(YoungShape),
    Poset(Poset),
    Tree(RootedTree),
}

impl PosetInput {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(s) = &self.shape {
            return Ok(Loaded::Shape(parse_shape(s)?));
        }
        if let Some(p) = &self.poset {
            let text = read(p)?;
            return Ok(Loaded::Poset(
                Poset::parse(&text).with_context(|| format!("parsing {}", p.display()))?,
            ));
        }
        if let Some(t) = &self.tree {
            let text = read(t)?;
            return Ok(Loaded::Tree(
                RootedTree::parse(&text).with_context(|| format!("parsing {}", t.display()))?,
            ));
        }
        bail!("one of --shape, --poset or --tree is required")
    }

    pub fn describe(&self) -> String {
        match (&self.shape, &self.poset, &self.tree) {
            (Some(s), _, _) => format!("shape {s}"),
            (_, Some(p), _) => format!("poset {}", p.display()),
            (_, _, Some(t)) => format!("tree {}", t.display()),
            _ => String::new(),
        }
    }
}

impl Loaded {
    pub fn to_poset(&self) -> Result<Poset> {
        Ok(match self {
            Loaded::Shape(s) => poset_from_shape(s)?,
            Loaded::Poset(p) => p.clone(),
            Loaded::Tree(t) => t.to_poset()?,
        })
    }
}
