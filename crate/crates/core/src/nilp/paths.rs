use std::collections::{BTreeMap, HashSet};

use super::{dual_sequence, StartSequence};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_configs`].
pub const MAX_ENUM_N: usize = 3;
/// Largest `a_n` accepted by [`enumerate_configs`].
pub const MAX_ENUM_AN: i64 = 8;
const MAX_ENUM_R: i64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    West,
    North,
    East,
    NorthEast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// West/north paths from `(a_i, 0)` to `(0, i)`.
    First,
    /// East/northeast paths from `(a_{n−i} + 1/2, 0)` to `(a_n + 1/2 + i, i)`.
    ///
    /// Abscissas of this family are stored shifted by `−1/2` so they stay integral.
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            p = match s {
                Step::West => (p.0 - 1, p.1),
                Step::North => (p.0, p.1 + 1),
                Step::East => (p.0 + 1, p.1),
                Step::NorthEast => (p.0 + 1, p.1 + 1),
            };
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices().last().unwrap()
    }

    /// Weight exponent: sum of `x` over north steps, or over the crossed
    /// abscissa of northeast steps.
    pub fn area(&self) -> i64 {
        let mut p = self.start;
        let mut area = 0;
        for s in &self.steps {
            match s {
                Step::West => p.0 -= 1,
                Step::East => p.0 += 1,
                Step::North => {
                    area += p.0;
                    p.1 += 1;
                }
                Step::NorthEast => {
                    area += p.0 + 1;
                    p.0 += 1;
                    p.1 += 1;
                }
            }
        }
        area
    }

    /// Origins `(x, y)` of the north steps.
    pub fn north_steps(&self) -> Vec<(i64, i64)> {
        let v = self.vertices();
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::North)
            .map(|(k, _)| v[k])
            .collect()
    }
}

/// A family of `n + 1` paths over a start sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathConfig {
    pub seq: StartSequence,
    pub family: Family,
    pub paths: Vec<LatticePath>,
}

impl PathConfig {
    pub fn area(&self) -> i64 {
        self.paths.iter().map(LatticePath::area).sum()
    }

    pub fn path_areas(&self) -> Vec<i64> {
        self.paths.iter().map(LatticePath::area).collect()
    }

    /// True when no two paths share a vertex and every step belongs to the family.
    pub fn is_valid(&self) -> bool {
        let allowed: &[Step] = match self.family {
            Family::First => &[Step::West, Step::North],
            Family::Second => &[Step::East, Step::NorthEast],
        };
        let mut seen = HashSet::new();
        for p in &self.paths {
            if p.steps.iter().any(|s| !allowed.contains(s)) {
                return false;
            }
            for v in p.vertices() {
                if !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exit data for the top path: it crosses `y = n` at `(ell, n)`.
///
/// With `r = None` the top path stops at `(ell, n)`; with `Some(r)` it steps
/// north and continues freely to `(0, n + r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExitSpec {
    pub ell: i64,
    pub r: Option<i64>,
}

fn walks(
    from: (i64, i64),
    to: (i64, i64),
    blocked: &HashSet<(i64, i64)>,
    prefix: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    if blocked.contains(&from) {
        return;
    }
    if from == to {
        out.push(prefix.clone());
        return;
    }
    if from.0 > to.0 {
        prefix.push(Step::West);
        walks((from.0 - 1, from.1), to, blocked, prefix, out);
        prefix.pop();
    }
    if from.1 < to.1 {
        prefix.push(Step::North);
        walks((from.0, from.1 + 1), to, blocked, prefix, out);
        prefix.pop();
    }
}

/// Every first-family configuration over `seq`, with its area.
///
/// Depth-first, path by path from path 0 upward, against a vertex-occupancy
/// set. Limited to `n <= 3`, `a_n <= 8`.
pub fn enumerate_configs(seq: &StartSequence, exit: Option<ExitSpec>) -> Result<Vec<(PathConfig, i64)>> {
    let n = seq.n();
    if n > MAX_ENUM_N || seq.last() > MAX_ENUM_AN {
        return Err(Error::SizeLimit(format!(
            "enumeration limited to n <= {MAX_ENUM_N}, a_n <= {MAX_ENUM_AN}; got n = {n}, a_n = {}",
            seq.last()
        )));
    }
    if let Some(e) = exit {
        if e.ell < 0 || e.ell > seq.last() {
            return Err(Error::InvalidArgument(format!("exit abscissa {} out of range", e.ell)));
        }
        if let Some(r) = e.r {
            if !(1..=MAX_ENUM_R).contains(&r) {
                return Err(Error::SizeLimit(format!("endpoint shift must lie in [1, {MAX_ENUM_R}]")));
            }
        }
    }
    let mut out = Vec::new();
    let mut paths = Vec::new();
    let mut occupied = HashSet::new();
    build(seq, exit, 0, &mut paths, &mut occupied, &mut out);
    Ok(out)
}

fn build(
    seq: &StartSequence,
    exit: Option<ExitSpec>,
    i: usize,
    paths: &mut Vec<LatticePath>,
    occupied: &mut HashSet<(i64, i64)>,
    out: &mut Vec<(PathConfig, i64)>,
) {
    let n = seq.n();
    if i > n {
        let cfg = PathConfig {
            seq: seq.clone(),
            family: Family::First,
            paths: paths.clone(),
        };
        let area = cfg.area();
        out.push((cfg, area));
        return;
    }
    let start = (seq.a()[i], 0);
    let target = match exit {
        Some(e) if i == n => (e.ell, n as i64),
        _ => (0, i as i64),
    };
    let mut found = Vec::new();
    walks(start, target, occupied, &mut Vec::new(), &mut found);
    let mut tails = vec![Vec::new()];
    if let (true, Some(ExitSpec { ell, r: Some(r) })) = (i == n, exit) {
        tails.clear();
        walks((ell, n as i64 + 1), (0, n as i64 + r), &HashSet::new(), &mut Vec::new(), &mut tails);
        for t in &mut tails {
            t.insert(0, Step::North);
        }
    }
    for steps in found {
        for tail in &tails {
            let mut all = steps.clone();
            all.extend(tail.iter().copied());
            let path = LatticePath { start, steps: all };
            let verts = path.vertices();
            for v in &verts {
                occupied.insert(*v);
            }
            paths.push(path);
            build(seq, exit, i + 1, paths, occupied, out);
            paths.pop();
            for v in &verts {
                occupied.remove(v);
            }
        }
    }
}

/// Maps a first-family configuration to the second family.
///
/// Each new path moves east and climbs over every original path it meets by a
/// northeast step crossing that path's north step.
pub fn to_second_family(config: &PathConfig) -> Result<PathConfig> {
    if config.family != Family::First {
        return Err(Error::InvalidArgument("expected a first-family configuration".into()));
    }
    let seq = &config.seq;
    let n = seq.n();
    let an = seq.last();
    let norths: HashSet<(i64, i64)> = config.paths.iter().flat_map(|p| p.north_steps()).collect();
    let mut paths = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let start = (seq.a()[n - i], 0);
        let target = (an + i as i64, i as i64);
        let mut p = start;
        let mut steps = Vec::new();
        while p != target {
            if p.0 > target.0 || p.1 > target.1 {
                return Err(Error::InvalidArgument(
                    "configuration is not a valid first-family path system".into(),
                ));
            }
            if norths.contains(&(p.0 + 1, p.1)) {
                steps.push(Step::NorthEast);
                p = (p.0 + 1, p.1 + 1);
            } else {
                steps.push(Step::East);
                p = (p.0 + 1, p.1);
            }
        }
        paths.push(LatticePath { start, steps });
    }
    Ok(PathConfig {
        seq: seq.clone(),
        family: Family::Second,
        paths,
    })
}

/// Inverse of [`to_second_family`].
pub fn from_second_family(config: &PathConfig) -> Result<PathConfig> {
    if config.family != Family::Second {
        return Err(Error::InvalidArgument("expected a second-family configuration".into()));
    }
    let seq = &config.seq;
    let n = seq.n();
    let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for p in &config.paths {
        let v = p.vertices();
        for (k, s) in p.steps.iter().enumerate() {
            if *s == Step::NorthEast {
                rows.entry(v[k].1).or_default().push(v[k].0 + 1);
            }
        }
    }
    for xs in rows.values_mut() {
        xs.sort_unstable();
    }
    let mut paths = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut steps = Vec::new();
        let mut x = seq.a()[j];
        for y in 0..j as i64 {
            let row = rows.get(&y).map(Vec::as_slice).unwrap_or(&[]);
            let idx = j - y as usize - 1;
            let xn = *row.get(idx).ok_or_else(|| {
                Error::InvalidArgument("second-family configuration has too few crossings".into())
            })?;
            if xn > x {
                return Err(Error::InvalidArgument("crossings are not monotone".into()));
            }
            steps.extend(std::iter::repeat_n(Step::West, (x - xn) as usize));
            steps.push(Step::North);
            x = xn;
        }
        steps.extend(std::iter::repeat_n(Step::West, x as usize));
        paths.push(LatticePath {
            start: (seq.a()[j], 0),
            steps,
        });
    }
    Ok(PathConfig {
        seq: seq.clone(),
        family: Family::First,
        paths,
    })
}

/// The reflection `(x, y) ↦ (a_n + 1/2 + y − x, y)` on true coordinates.
pub fn reflect_point(a_n: i64, p: (f64, f64)) -> (f64, f64) {
    (a_n as f64 + 0.5 + p.1 - p.0, p.1)
}

#[allow(non_snake_case)]
/// Reflects a second-family configuration onto a first-family one over the
/// dual sequence.
pub fn reflect_R(config: &PathConfig) -> Result<PathConfig> {
    if config.family != Family::Second {
        return Err(Error::InvalidArgument("expected a second-family configuration".into()));
    }
    let an = config.seq.last();
    let dual = dual_sequence(&config.seq);
    let paths = config
        .paths
        .iter()
        .map(|p| LatticePath {
            start: (an + p.start.1 - p.start.0, p.start.1),
            steps: p
                .steps
                .iter()
                .map(|s| match s {
                    Step::East => Step::West,
                    _ => Step::North,
                })
                .collect(),
        })
        .collect();
    Ok(PathConfig {
        seq: dual,
        family: Family::First,
        paths,
    })
}
