//! Search for energy-maximizing lexicons and the lambda phase transition.
//!
//! Two search routes over binary signal-object matrices:
//!
//! - [`enumerate_optimal`] walks every matrix of a small shape (guarded at
//!   20 cells, i.e. 2^20 candidates) and returns the exact maximum of the
//!   least-effort energy together with statistics over the full argmax set.
//!   The maximizer set is massively degenerate below the transition, so
//!   ensemble means over it are what the sweep reports.
//! - [`ga_optimize`] runs a generational, mutation-only genetic algorithm
//!   (no crossover) with elitism and column repair, usable beyond the
//!   enumeration guard, deterministic per seed.
//!
//! [`sweep_lambda`] evaluates either route across a bias grid and locates
//! the transition `lambda*` as the midpoint of the grid interval with the
//! largest jump in mean lexicon size: below it optimal lexicons collapse to
//! a single signal, above it they become one-to-one signal-object maps.

use crate::exec;
use crate::infotheory::{energy, measures, Bias, InfoError, LexicalMatrix};
use crate::rng::RngStream;
use thiserror::Error;

/// Cell-count cap for exhaustive search (2^20 matrices).
pub const ENUMERATION_GUARD: usize = 20;

/// Maximizers whose energy is within this of the maximum count as ties.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmergenceError {
    #[error("exhaustive search over {cells} cells exceeds the {guard}-cell guard")]
    SizeGuard { cells: usize, guard: usize },
    #[error("invalid parameters: {what}")]
    BadParams { what: String },
    #[error("lambda grid must be nonempty and strictly increasing")]
    BadGrid,
    #[error(transparent)]
    Info(#[from] InfoError),
}

// ---------------------------------------------------------------------------
// Genetic algorithm
// ---------------------------------------------------------------------------

/// Knobs of the mutation-driven GA.
#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    pub population_size: usize,
    /// Per-cell flip probability.
    pub mutation_rate: f64,
    pub generations: usize,
    /// Individuals copied unchanged into the next generation.
    pub elitism: usize,
    pub seed: u64,
}

impl GaParams {
    /// Defaults for an `n x m` problem: population 32, rate `2/(n*m)`
    /// (capped below 1 for tiny matrices), 2000 generations, elitism 1.
    pub fn for_size(n_signals: usize, n_objects: usize, seed: u64) -> Self {
        let cells = (n_signals * n_objects).max(1) as f64;
        GaParams {
            population_size: 32,
            mutation_rate: (2.0 / cells).min(0.5),
            generations: 2000,
            elitism: 1,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), EmergenceError> {
        if !(self.mutation_rate > 0.0 && self.mutation_rate < 1.0) {
            return Err(EmergenceError::BadParams {
                what: format!("mutation rate {} outside (0,1)", self.mutation_rate),
            });
        }
        if self.elitism == 0 || self.population_size < self.elitism {
            return Err(EmergenceError::BadParams {
                what: format!(
                    "need population_size >= elitism >= 1, got {} and {}",
                    self.population_size, self.elitism
                ),
            });
        }
        Ok(())
    }
}

/// Set one random link in every empty object column.
fn repair_columns(a: &mut LexicalMatrix, rng: &mut RngStream) {
    for j in 0..a.n_objects() {
        if a.column_degree(j) == 0 {
            let i = rng.next_index(a.n_signals());
            a.set_link(i, j, true);
        }
    }
}

/// Flip each cell independently with probability `rate`, then repair any
/// column left without links so the result is always a valid lexicon.
pub fn mutate(a: &LexicalMatrix, rate: f64, rng: &mut RngStream) -> LexicalMatrix {
    let mut out = a.clone();
    for i in 0..out.n_signals() {
        for j in 0..out.n_objects() {
            if rng.next_bool(rate) {
                let cur = out.link(i, j);
                out.set_link(i, j, !cur);
            }
        }
    }
    repair_columns(&mut out, rng);
    out
}

fn random_valid_matrix(n: usize, m: usize, rng: &mut RngStream) -> LexicalMatrix {
    let mut a = LexicalMatrix::zeros(n, m).expect("positive shape");
    for i in 0..n {
        for j in 0..m {
            a.set_link(i, j, rng.next_bool(0.5));
        }
    }
    repair_columns(&mut a, rng);
    a
}

/// Generational mutation-only GA maximizing the least-effort energy.
///
/// Each generation keeps the `elitism` fittest individuals and fills the
/// rest with mutated copies of parents drawn uniformly from the top half.
/// Deterministic given the seed.
pub fn ga_optimize(
    n_signals: usize,
    n_objects: usize,
    bias: Bias,
    params: &GaParams,
) -> Result<LexicalMatrix, EmergenceError> {
    if n_signals == 0 || n_objects == 0 {
        return Err(EmergenceError::BadParams { what: "matrix shape must be positive".into() });
    }
    params.validate()?;
    let mut rng = RngStream::new(params.seed);
    let pop_size = params.population_size;
    let mut population: Vec<LexicalMatrix> = (0..pop_size)
        .map(|_| random_valid_matrix(n_signals, n_objects, &mut rng))
        .collect();

    let fitness = |a: &LexicalMatrix| energy(a, bias).expect("population stays valid");
    let rank_indices = |fit: &[f64]| {
        let mut order: Vec<usize> = (0..fit.len()).collect();
        order.sort_by(|&i, &j| fit[j].partial_cmp(&fit[i]).unwrap().then(i.cmp(&j)));
        order
    };

    let parent_pool = (pop_size / 2).max(1);
    for _ in 0..params.generations {
        let fit: Vec<f64> = population.iter().map(&fitness).collect();
        let order = rank_indices(&fit);
        let mut next = Vec::with_capacity(pop_size);
        for &k in order.iter().take(params.elitism) {
            next.push(population[k].clone());
        }
        while next.len() < pop_size {
            let parent = &population[order[rng.next_index(parent_pool)]];
            next.push(mutate(parent, params.mutation_rate, &mut rng));
        }
        population = next;
    }

    let fit: Vec<f64> = population.iter().map(&fitness).collect();
    let best = rank_indices(&fit)[0];
    Ok(population.swap_remove(best))
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// Entropy, mutual information, and lexicon size of the matrix encoded by
/// `mask`, without allocating; `None` when an object column is unlinked.
fn mask_measures(n: usize, m: usize, mask: u64) -> Option<(f64, f64, u32)> {
    let mut marginal = [0.0f64; ENUMERATION_GUARD];
    let mut cond = 0.0;
    for j in 0..m {
        let mut degree = 0u32;
        for i in 0..n {
            if mask >> (i * m + j) & 1 == 1 {
                degree += 1;
            }
        }
        if degree == 0 {
            return None;
        }
        cond += (degree as f64).log2();
        let p = 1.0 / (m as f64 * degree as f64);
        for i in 0..n {
            if mask >> (i * m + j) & 1 == 1 {
                marginal[i] += p;
            }
        }
    }
    cond /= m as f64;
    let mut entropy = 0.0;
    let mut lexicon = 0u32;
    for &p in marginal.iter().take(n) {
        if p > 0.0 {
            entropy -= p * p.log2();
            lexicon += 1;
        }
    }
    Some((entropy, (entropy - cond).max(0.0), lexicon))
}

/// Exact optimum over every valid matrix of a shape, with statistics over
/// the complete argmax set.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalSet {
    pub omega_max: f64,
    /// Every maximizer (within 1e-12 of the maximum), in mask order.
    pub maximizers: Vec<LexicalMatrix>,
    pub mean_lexicon_size: f64,
    pub mean_mutual_info: f64,
}

impl OptimalSet {
    pub fn count(&self) -> usize {
        self.maximizers.len()
    }
}

/// The lambda-independent per-matrix table behind exhaustive search:
/// `(entropy, mutual information, lexicon size)` for each valid bit mask.
fn measure_table(n: usize, m: usize) -> Result<Vec<Option<(f64, f64, u32)>>, EmergenceError> {
    if n == 0 || m == 0 {
        return Err(EmergenceError::BadParams { what: "matrix shape must be positive".into() });
    }
    let cells = n * m;
    if cells > ENUMERATION_GUARD {
        return Err(EmergenceError::SizeGuard { cells, guard: ENUMERATION_GUARD });
    }
    Ok(exec::map_indexed(1usize << cells, |mask| mask_measures(n, m, mask as u64)))
}

fn scan_optimum(
    table: &[Option<(f64, f64, u32)>],
    lambda: f64,
) -> (f64, f64, f64, Vec<usize>) {
    let omega = |h: f64, i: f64| lambda * i - (1.0 - lambda) * h;
    let mut best = f64::NEG_INFINITY;
    for entry in table.iter().flatten() {
        best = best.max(omega(entry.0, entry.1));
    }
    let mut masks = Vec::new();
    let mut lex_sum = 0.0;
    let mut mi_sum = 0.0;
    for (mask, entry) in table.iter().enumerate() {
        if let Some((h, i, l)) = entry {
            if (omega(*h, *i) - best).abs() <= TIE_TOL {
                masks.push(mask);
                lex_sum += *l as f64;
                mi_sum += *i;
            }
        }
    }
    let count = masks.len() as f64;
    (best, lex_sum / count, mi_sum / count, masks)
}

/// Enumerate all `2^(n*m)` matrices (guarded) and return the energy maximum
/// with argmax-set statistics.
pub fn enumerate_optimal(
    n_signals: usize,
    n_objects: usize,
    bias: Bias,
) -> Result<OptimalSet, EmergenceError> {
    let table = measure_table(n_signals, n_objects)?;
    let (omega_max, mean_lex, mean_mi, masks) = scan_optimum(&table, bias.value());
    let maximizers = masks
        .into_iter()
        .map(|mask| LexicalMatrix::from_bits(n_signals, n_objects, mask as u64))
        .collect();
    Ok(OptimalSet {
        omega_max,
        maximizers,
        mean_lexicon_size: mean_lex,
        mean_mutual_info: mean_mi,
    })
}

// ---------------------------------------------------------------------------
// Lambda sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum SweepMethod {
    Exhaustive,
    /// GA per grid point; each point runs with a seed derived from
    /// `params.seed` and the point index.
    Ga(GaParams),
}

/// Optimum statistics at one bias value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub lambda: f64,
    pub omega_max: f64,
    pub mean_lexicon_size: f64,
    pub mean_mutual_info: f64,
}

/// Per-lambda optimum statistics plus the detected transition.
#[derive(Debug, Clone, PartialEq)]
pub struct EmergenceCurve {
    pub points: Vec<CurvePoint>,
    /// Midpoint of the grid interval with the largest jump in mean lexicon
    /// size; `None` for a single-point grid or a flat curve.
    pub transition: Option<f64>,
}

fn detect_transition(points: &[CurvePoint]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let mut best_jump = 0.0;
    let mut best_mid = None;
    for pair in points.windows(2) {
        let jump = (pair[1].mean_lexicon_size - pair[0].mean_lexicon_size).abs();
        if jump > best_jump {
            best_jump = jump;
            best_mid = Some(0.5 * (pair[0].lambda + pair[1].lambda));
        }
    }
    best_mid
}

/// Evaluate the optimum across a strictly increasing bias grid.
pub fn sweep_lambda(
    n_signals: usize,
    n_objects: usize,
    grid: &[Bias],
    method: &SweepMethod,
) -> Result<EmergenceCurve, EmergenceError> {
    if grid.is_empty() {
        return Err(EmergenceError::BadGrid);
    }
    if grid.windows(2).any(|w| !(w[1].value() > w[0].value())) {
        return Err(EmergenceError::BadGrid);
    }
    let points = match method {
        SweepMethod::Exhaustive => {
            let table = measure_table(n_signals, n_objects)?;
            exec::map_slice(grid, |b| {
                let (omega_max, mean_lex, mean_mi, _) = scan_optimum(&table, b.value());
                CurvePoint {
                    lambda: b.value(),
                    omega_max,
                    mean_lexicon_size: mean_lex,
                    mean_mutual_info: mean_mi,
                }
            })
        }
        SweepMethod::Ga(params) => {
            params.validate()?;
            let results = exec::map_indexed(grid.len(), |k| {
                let mut point_params = params.clone();
                point_params.seed = RngStream::derive(params.seed, k as u64);
                ga_optimize(n_signals, n_objects, grid[k], &point_params).map(|best| {
                    let meas = measures(&best).expect("GA output is valid");
                    CurvePoint {
                        lambda: grid[k].value(),
                        omega_max: energy(&best, grid[k]).expect("GA output is valid"),
                        mean_lexicon_size: meas.lexicon_size as f64,
                        mean_mutual_info: meas.mutual_info,
                    }
                })
            });
            results.into_iter().collect::<Result<Vec<_>, _>>()?
        }
    };
    let transition = detect_transition(&points);
    Ok(EmergenceCurve { points, transition })
}
