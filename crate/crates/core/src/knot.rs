//! Planar-diagram (PD) codes of knots and links, their 4-regular plane graphs,
//! and per-diagram hull numbers tabulated by crossing number.
//!
//! Crossing `i` with labels `X[a, b, c, d]` becomes vertex `i` with darts
//! `4i .. 4i + 3` in that cyclic order; the two darts carrying the same label are
//! twins. Over/under information is ignored.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::convexity::CycleConvexity;
use crate::error::{Error, Result};
use crate::exact::solve;
use crate::plane::{hn_fc_exact, trace_faces, PlaneGraph, RotationSystem};

/// Prime knots with 3 to 8 crossings, one minimal diagram each.
pub const BUNDLED_PD_3_8: &str = include_str!("../data/rolfsen_pd_3_8.txt");
/// Prime knots with 9 crossings.
pub const BUNDLED_PD_9: &str = include_str!("../data/rolfsen_pd_9.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub name: String,
    pub crossings: Vec<[i64; 4]>,
}

impl PdCode {
    /// Number of link components: strands run `a -> c` and `b -> d` through
    /// every crossing `X[a, b, c, d]`.
    pub fn components(&self) -> usize {
        let mut index = HashMap::new();
        for q in &self.crossings {
            for &l in q {
                let next = index.len();
                index.entry(l).or_insert(next);
            }
        }
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for q in &self.crossings {
            for (a, b) in [(q[0], q[2]), (q[1], q[3])] {
                let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
                parent[ra] = rb;
            }
        }
        (0..parent.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count()
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }
}

#[derive(Deserialize)]
struct PdJson {
    name: String,
    crossings: Vec<Vec<i64>>,
}

/// Parses `name PD[X[a,b,c,d],...]` lines (blank lines and `#` comments
/// skipped) or a JSON array of `{"name", "crossings"}` objects.
pub fn parse_pd(text: &str) -> Result<Vec<PdCode>> {
    let raw: Vec<(String, Vec<Vec<i64>>)> = if text.trim_start().starts_with('[') {
        let items: Vec<PdJson> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("PD JSON: {e}")))?;
        items.into_iter().map(|p| (p.name, p.crossings)).collect()
    } else {
        text.lines()
            .enumerate()
            .map(|(i, line)| (i, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
            .map(|(i, line)| {
                parse_line(line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))
            })
            .collect::<Result<_>>()?
    };
    let mut names = HashSet::new();
    let mut out = Vec::with_capacity(raw.len());
    for (name, crossings) in raw {
        if !names.insert(name.clone()) {
            return Err(Error::Pd {
                name,
                reason: "duplicate name".into(),
            });
        }
        out.push(validate(name, crossings)?);
    }
    Ok(out)
}

fn parse_line(line: &str) -> std::result::Result<(String, Vec<Vec<i64>>), String> {
    let (name, rest) = line
        .split_once(char::is_whitespace)
        .ok_or_else(|| "expected `name PD[...]`".to_string())?;
    let body = rest
        .trim()
        .strip_prefix("PD[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| "expected `PD[...]`".to_string())?;
    let mut crossings = Vec::new();
    let mut tail = body.trim();
    while !tail.is_empty() {
        let inner = tail
            .strip_prefix("X[")
            .ok_or_else(|| format!("expected `X[` at `{tail}`"))?;
        let close = inner.find(']').ok_or_else(|| "unclosed `X[`".to_string())?;
        let labels = inner[..close]
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad label `{}`", t.trim()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        crossings.push(labels);
        tail = inner[close + 1..].trim_start();
        tail = tail.strip_prefix(',').unwrap_or(tail).trim_start();
    }
    Ok((name.to_string(), crossings))
}

fn validate(name: String, crossings: Vec<Vec<i64>>) -> Result<PdCode> {
    let mut quads = Vec::with_capacity(crossings.len());
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for (i, q) in crossings.into_iter().enumerate() {
        let quad: [i64; 4] = q.as_slice().try_into().map_err(|_| Error::Pd {
            name: name.clone(),
            reason: format!("crossing {i} has {} labels, expected 4", q.len()),
        })?;
        for l in quad {
            *count.entry(l).or_default() += 1;
        }
        quads.push(quad);
    }
    if let Some((l, c)) = count.iter().find(|&(_, &c)| c != 2) {
        return Err(Error::Pd {
            name,
            reason: format!("label {l} appears {c} times, expected 2"),
        });
    }
    Ok(PdCode {
        name,
        crossings: quads,
    })
}

/// One vertex per crossing, rotation in the listed cyclic order.
pub fn pd_to_plane_graph(pd: &PdCode) -> Result<PlaneGraph> {
    let mut seen: HashMap<i64, usize> = HashMap::new();
    let mut twins = Vec::new();
    for (i, q) in pd.crossings.iter().enumerate() {
        for (p, &l) in q.iter().enumerate() {
            let dart = 4 * i + p;
            match seen.remove(&l) {
                Some(other) if other / 4 == i => return Err(Error::Loop(i)),
                Some(other) => twins.push([other, dart]),
                None => {
                    seen.insert(l, dart);
                }
            }
        }
    }
    if let Some(l) = seen.keys().next() {
        return Err(Error::Pd {
            name: pd.name.clone(),
            reason: format!("label {l} appears once"),
        });
    }
    let n = pd.crossings.len();
    trace_faces(&RotationSystem {
        vertices: n,
        rotations: (0..n).map(|i| (4 * i..4 * i + 4).collect()).collect(),
        twins,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: usize,
    pub components: usize,
    pub hn_cc: usize,
    pub hn_fc: usize,
    pub witness_cc: Vec<usize>,
    pub witness_fc: Vec<usize>,
}

impl KnotRecord {
    pub fn equal(&self) -> bool {
        self.hn_cc == self.hn_fc
    }
}

pub fn analyze_knot(pd: &PdCode) -> Result<KnotRecord> {
    let pg = pd_to_plane_graph(pd)?;
    let cc = solve(&CycleConvexity::new(pg.underlying()));
    let fc = hn_fc_exact(&pg);
    if cc.hn > fc.hn {
        return Err(Error::Internal(format!(
            "{}: cycle hull number {} exceeds face hull number {}",
            pd.name, cc.hn, fc.hn
        )));
    }
    Ok(KnotRecord {
        name: pd.name.clone(),
        crossings: pd.crossings.len(),
        components: pd.components(),
        hn_cc: cc.hn,
        hn_fc: fc.hn,
        witness_cc: cc.witness.to_vec(),
        witness_fc: fc.witness.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    /// `counts[crossings][hn_cc]` = number of knots.
    pub counts: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub records: Vec<KnotRecord>,
}

impl Census {
    pub fn total(&self, crossings: usize) -> usize {
        self.counts
            .get(&crossings)
            .map_or(0, |row| row.values().sum())
    }

    pub fn count(&self, crossings: usize, hn: usize) -> usize {
        self.counts
            .get(&crossings)
            .and_then(|row| row.get(&hn))
            .copied()
            .unwrap_or(0)
    }

    /// Diagrams whose two hull numbers differ.
    pub fn differing(&self) -> Vec<&KnotRecord> {
        self.records.iter().filter(|r| !r.equal()).collect()
    }

    /// Counts by hull number (rows) and crossing number (columns).
    pub fn to_text(&self) -> String {
        let cols: Vec<usize> = self.counts.keys().copied().collect();
        let max_hn = self
            .counts
            .values()
            .flat_map(|row| row.keys())
            .copied()
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        let _ = write!(out, "{:<6}", "hn");
        for c in &cols {
            let _ = write!(out, "{c:>5}");
        }
        out.push('\n');
        for hn in 1..=max_hn {
            let _ = write!(out, "{hn:<6}");
            for &c in &cols {
                let _ = write!(out, "{:>5}", self.count(c, hn));
            }
            out.push('\n');
        }
        let _ = write!(out, "{:<6}", "total");
        for &c in &cols {
            let _ = write!(out, "{:>5}", self.total(c));
        }
        out.push('\n');
        let differing = self.differing();
        if differing.is_empty() {
            let _ = writeln!(out, "hn_cc = hn_fc on all {} diagrams", self.records.len());
        } else {
            for r in differing {
                let _ = writeln!(out, "{}: hn_cc = {}, hn_fc = {}", r.name, r.hn_cc, r.hn_fc);
            }
        }
        out
    }
}

/// Analyses the knots (links are skipped) with at most `max_crossings` crossings.
pub fn census(db: &[PdCode], max_crossings: usize) -> Result<Census> {
    let chosen: Vec<&PdCode> = db
        .iter()
        .filter(|pd| pd.crossings.len() <= max_crossings && pd.is_knot())
        .collect();
    let records = chosen
        .par_iter()
        .map(|pd| analyze_knot(pd))
        .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for r in &records {
        *counts
            .entry(r.crossings)
            .or_default()
            .entry(r.hn_cc)
            .or_default() += 1;
    }
    Ok(Census { counts, records })
}

/// The bundled 3-8 crossing table, optionally with the 9-crossing knots.
pub fn bundled_db(with_nine: bool) -> Vec<PdCode> {
    let mut db = parse_pd(BUNDLED_PD_3_8).expect("bundled PD data is valid");
    if with_nine {
        db.extend(parse_pd(BUNDLED_PD_9).expect("bundled PD data is valid"));
    }
    db
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "3_1 PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

    #[test]
    fn trefoil_graph() {
        let pd = &parse_pd(TREFOIL).unwrap()[0];
        assert_eq!(pd.crossings.len(), 3);
        assert!(pd.is_knot());
        let pg = pd_to_plane_graph(pd).unwrap();
        assert_eq!(pg.order(), 3);
        assert_eq!(pg.underlying().edge_count(), 6);
        assert!(pg.underlying().pairs().all(|(_, _, m)| m == 2));
        assert_eq!(pg.face_count(), 5);
        assert!(pg.is_spherical());
        let r = analyze_knot(pd).unwrap();
        assert_eq!((r.hn_cc, r.hn_fc), (1, 1));
    }

    #[test]
    fn figure_eight_graph() {
        let db = bundled_db(false);
        let pd = db.iter().find(|p| p.name == "4_1").unwrap();
        let pg = pd_to_plane_graph(pd).unwrap();
        assert_eq!(
            (pg.order(), pg.underlying().edge_count(), pg.face_count()),
            (4, 8, 6)
        );
        assert_eq!(hn_fc_exact(&pg).hn, 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_pd("a PD[X[1,2,3]]"), Err(Error::Pd { .. })));
        assert!(matches!(
            parse_pd("a PD[X[1,2,3,4]]"),
            Err(Error::Pd { .. })
        ));
        let dup = format!("{TREFOIL}\n{TREFOIL}");
        assert!(matches!(parse_pd(&dup), Err(Error::Pd { .. })));
        assert!(matches!(parse_pd("a PD[Y[1,2,3,4]]"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("a PD[X[1,x,3,4]]"), Err(Error::Parse(_))));
    }

    #[test]
    fn repeated_label_in_one_crossing_is_a_loop() {
        let pd = &parse_pd("kink PD[X[1,1,2,2]]").unwrap()[0];
        assert_eq!(pd_to_plane_graph(pd), Err(Error::Loop(0)));
    }

    #[test]
    fn json_input() {
        let text = r#"[{"name": "3_1", "crossings": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]}]"#;
        assert_eq!(parse_pd(text).unwrap(), parse_pd(TREFOIL).unwrap());
    }

    #[test]
    fn hopf_link_has_two_components() {
        let pd = &parse_pd("L2a1 PD[X[4,1,3,2],X[2,3,1,4]]").unwrap()[0];
        assert_eq!(pd.components(), 2);
        let census = census(std::slice::from_ref(pd), 10).unwrap();
        assert!(census.records.is_empty());
    }

    #[test]
    fn bundled_data_shape() {
        let db = bundled_db(true);
        assert_eq!(db.iter().filter(|p| p.crossings.len() <= 8).count(), 35);
        assert_eq!(db.iter().filter(|p| p.crossings.len() == 9).count(), 49);
        for pd in &db {
            assert!(pd.is_knot(), "{}", pd.name);
            let pg = pd_to_plane_graph(pd).unwrap();
            assert!(pg.is_four_regular().is_ok());
            assert!(pg.is_spherical(), "{}", pd.name);
        }
    }

    #[test]
    fn empty_db_gives_empty_table() {
        let c = census(&[], 8).unwrap();
        assert!(c.counts.is_empty());
    }
}
