use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nilp::{Family, LatticePath, PathConfig, StartSequence, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitMode {
    /// Every path hugs the lower left: the `q → 0` extremal configuration.
    MinArea,
    /// Path `i` goes north `i` times, then west: the `q → ∞` extremal configuration.
    MaxArea,
}

/// A proposed corner flip and its effect on the area.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flip {
    pub path: usize,
    pub pos: usize,
    pub delta: i64,
}

/// Chain state. `area` is kept incrementally and always equals `config.area()`.
#[derive(Clone, Debug)]
pub struct McState {
    pub config: PathConfig,
    pub area: i64,
    pub rng_seed: u64,
    pub step_count: u64,
    rng: ChaCha8Rng,
    verts: Vec<Vec<(i64, i64)>>,
    occ: Vec<bool>,
    width: i64,
    movable: Vec<usize>,
}

impl McState {
    pub fn from_config(config: PathConfig, seed: u64) -> Self {
        assert_eq!(config.family, Family::First, "sampler runs on first-family configurations");
        let width = config.seq.last() + 1;
        let height = config.seq.n() as i64 + 1;
        let mut occ = vec![false; (width * height) as usize];
        let verts: Vec<Vec<(i64, i64)>> = config.paths.iter().map(LatticePath::vertices).collect();
        for v in verts.iter().flatten() {
            occ[(v.1 * width + v.0) as usize] = true;
        }
        let movable = (0..config.paths.len())
            .filter(|&i| config.paths[i].steps.len() >= 2)
            .collect();
        McState {
            area: config.area(),
            config,
            rng_seed: seed,
            step_count: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
            verts,
            occ,
            width,
            movable,
        }
    }

    /// Number of proposals in one sweep.
    pub fn sweep_len(&self) -> usize {
        self.movable
            .iter()
            .map(|&i| self.config.paths[i].steps.len() - 1)
            .sum::<usize>()
            .max(1)
    }

    /// Every `(path, pos)` pair the proposal distribution can draw.
    pub fn proposals(&self) -> Vec<(usize, usize)> {
        self.movable
            .iter()
            .flat_map(|&i| (0..self.config.paths[i].steps.len() - 1).map(move |k| (i, k)))
            .collect()
    }

    /// The flip at `(path, pos)` if it is a corner whose new vertex is free.
    pub fn flip_at(&self, path: usize, pos: usize) -> Option<Flip> {
        let steps = &self.config.paths[path].steps;
        let (x, y) = self.verts[path][pos];
        let (delta, new_v) = match (steps[pos], steps[pos + 1]) {
            (Step::North, Step::West) => (-1, (x - 1, y)),
            (Step::West, Step::North) => (1, (x, y + 1)),
            _ => return None,
        };
        if self.occ[(new_v.1 * self.width + new_v.0) as usize] {
            return None;
        }
        Some(Flip { path, pos, delta })
    }

    pub fn apply(&mut self, f: Flip) {
        let steps = &mut self.config.paths[f.path].steps;
        steps.swap(f.pos, f.pos + 1);
        let old = self.verts[f.path][f.pos + 1];
        let (x, y) = self.verts[f.path][f.pos];
        let new = match steps[f.pos] {
            Step::North => (x, y + 1),
            _ => (x - 1, y),
        };
        self.verts[f.path][f.pos + 1] = new;
        self.occ[(old.1 * self.width + old.0) as usize] = false;
        self.occ[(new.1 * self.width + new.0) as usize] = true;
        self.area += f.delta;
    }

    /// One Metropolis proposal. Returns whether the configuration changed.
    pub fn step(&mut self, q: f64) -> bool {
        self.step_count += 1;
        if self.movable.is_empty() {
            return false;
        }
        let path = self.movable[self.rng.gen_range(0..self.movable.len())];
        let pos = self.rng.gen_range(0..self.config.paths[path].steps.len() - 1);
        let Some(f) = self.flip_at(path, pos) else {
            return false;
        };
        let ratio = q.powi(f.delta as i32);
        if ratio >= 1.0 || self.rng.gen::<f64>() < ratio {
            self.apply(f);
            true
        } else {
            false
        }
    }
}

fn extremal_config(seq: &StartSequence, mode: InitMode) -> PathConfig {
    let n = seq.n();
    let a = seq.a();
    let mut paths = Vec::with_capacity(n + 1);
    // x_prev[y]: abscissa of the previous path's north step at height y
    let mut x_prev: Vec<i64> = Vec::new();
    for i in 0..=n {
        let mut steps = Vec::new();
        let mut x = a[i];
        let mut norths = Vec::with_capacity(i);
        for y in 0..i {
            let xn = match mode {
                InitMode::MaxArea => a[i],
                InitMode::MinArea => {
                    if y == 0 {
                        a[i - 1] + 1
                    } else {
                        x_prev[y - 1] + 1
                    }
                }
            };
            steps.extend(std::iter::repeat_n(Step::West, (x - xn) as usize));
            steps.push(Step::North);
            norths.push(xn);
            x = xn;
        }
        steps.extend(std::iter::repeat_n(Step::West, x as usize));
        paths.push(LatticePath { start: (a[i], 0), steps });
        x_prev = norths;
    }
    PathConfig {
        seq: seq.clone(),
        family: Family::First,
        paths,
    }
}

/// Extremal starting state.
pub fn init_state(seq: &StartSequence, mode: InitMode, seed: u64) -> McState {
    McState::from_config(extremal_config(seq, mode), seed)
}

/// Functional form of [`McState::step`].
pub fn mc_step(mut state: McState, q: f64) -> McState {
    state.step(q);
    state
}
