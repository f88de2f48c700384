//! Representations: one grid path per vertex.

use std::collections::{BTreeMap, BTreeSet};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::grid::{normalize_path, GridPath, GridPoint, Symmetry};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<C> {
    paths: BTreeMap<String, GridPath<C>>,
}

impl<C> Default for Representation<C> {
    fn default() -> Self {
        Representation { paths: BTreeMap::new() }
    }
}

impl<C: Coord> Representation<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, vertex: impl Into<String>, path: GridPath<C>) -> Option<GridPath<C>> {
        self.paths.insert(vertex.into(), path)
    }

    pub fn remove(&mut self, vertex: &str) -> Option<GridPath<C>> {
        self.paths.remove(vertex)
    }

    pub fn get(&self, vertex: &str) -> Option<&GridPath<C>> {
        self.paths.get(vertex)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &GridPath<C>)> {
        self.paths.iter()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &String> {
        self.paths.keys()
    }

    pub fn max_bends(&self) -> usize {
        self.paths.values().map(GridPath::bends).max().unwrap_or(0)
    }

    pub fn transform(&self, sym: Symmetry) -> Self {
        let paths = self.paths.iter().map(|(k, p)| (k.clone(), p.transform(sym))).collect();
        Representation { paths }
    }

    pub fn translate(&self, dx: &C, dy: &C) -> Self {
        let paths = self.paths.iter().map(|(k, p)| (k.clone(), p.translate(dx, dy))).collect();
        Representation { paths }
    }

    /// Keep only the given vertices.
    pub fn restrict<'a>(&self, keep: impl IntoIterator<Item = &'a str>) -> Self {
        let keep: BTreeSet<&str> = keep.into_iter().collect();
        let paths =
            self.paths.iter().filter(|(k, _)| keep.contains(k.as_str())).map(|(k, p)| (k.clone(), p.clone())).collect();
        Representation { paths }
    }
}

impl<C> FromIterator<(String, GridPath<C>)> for Representation<C> {
    fn from_iter<I: IntoIterator<Item = (String, GridPath<C>)>>(iter: I) -> Self {
        Representation { paths: iter.into_iter().collect() }
    }
}

/// Order-preserving renumbering of all x and all y values to `0..count`.
///
/// Positive-length overlaps and perpendicular incidences only depend on
/// the relative order of coordinates, so the intersection graph and all
/// crossing counts survive unchanged.
pub fn compress_coordinates<C: Coord>(rep: &Representation<C>) -> Representation<i64> {
    let mut xs = BTreeSet::new();
    let mut ys = BTreeSet::new();
    for (_, p) in rep.iter() {
        for c in p.corners() {
            xs.insert(c.x.clone());
            ys.insert(c.y.clone());
        }
    }
    let xi: BTreeMap<C, i64> = xs.into_iter().enumerate().map(|(i, v)| (v, i as i64)).collect();
    let yi: BTreeMap<C, i64> = ys.into_iter().enumerate().map(|(i, v)| (v, i as i64)).collect();
    rep.iter()
        .map(|(k, p)| {
            let q = p.map(|c| GridPoint::new(xi[&c.x], yi[&c.y])).expect("order-preserving maps keep paths canonical");
            (k.clone(), q)
        })
        .collect()
}

/// Serialize as a JSON object mapping each vertex to its corner list,
/// one vertex per line.
pub fn to_json(rep: &Representation<i64>) -> String {
    let mut out = String::from("{\n");
    let n = rep.len();
    for (i, (k, p)) in rep.iter().enumerate() {
        let corners: Vec<String> = p.corners().iter().map(|c| format!("[{},{}]", c.x, c.y)).collect();
        let key = serde_json::to_string(k).expect("string keys serialize");
        out.push_str(&format!("  {}: [{}]{}\n", key, corners.join(","), if i + 1 < n { "," } else { "" }));
    }
    out.push('}');
    out.push('\n');
    out
}

/// Parse the JSON format written by [`to_json`]; paths are normalized on read.
pub fn from_json(text: &str) -> Result<Representation<i64>> {
    let raw: BTreeMap<String, Vec<[i64; 2]>> =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    let mut rep = Representation::new();
    for (k, pts) in raw {
        let pts: Vec<GridPoint<i64>> = pts.into_iter().map(|[x, y]| GridPoint::new(x, y)).collect();
        rep.insert(k, normalize_path(&pts)?);
    }
    Ok(rep)
}
