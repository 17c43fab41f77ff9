//! Probability model over binary signal-object matrices.
//!
//! A lexicon is a binary matrix `A` with `a[i][j] = 1` when signal `i` can
//! refer to object `j`. Objects are drawn uniformly and a speaker picks
//! uniformly among the signals linked to the drawn object:
//!
//! ```text
//! p(r_j)       = 1/m
//! p(s_i | r_j) = a[i][j] / w_j          (w_j = column link count)
//! ```
//!
//! From the induced joint we compute, in bits:
//!
//! ```text
//! H(S)    = -sum_i p(s_i) log2 p(s_i)
//! H(S|R)  = (1/m) sum_j log2 w_j        (uniform within a column)
//! I(S,R)  = H(S) - H(S|R)
//! ```
//!
//! and the least-effort energy balancing listener interests `I(S,R)`
//! against speaker effort `H(S)`:
//!
//! ```text
//! omega(lambda) = lambda * I(S,R) - (1 - lambda) * H(S),   0 < lambda < 1
//! ```
//!
//! This artifact **maximizes** omega; with these signs the three regimes are
//! single-signal lexicons for lambda below the transition, one-to-one
//! signal-object mappings above it, and non-synonymous lexicons at the
//! transition itself. A matrix with an unlinked object column leaves
//! `p(s|r)` undefined and is rejected rather than scored.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InfoError {
    #[error("object column {column} has no linked signal")]
    UnlinkedObject { column: usize },
    #[error("matrix needs at least one signal and one object")]
    EmptyMatrix,
    #[error("links length {got} does not match {rows} x {cols}")]
    ShapeMismatch { got: usize, rows: usize, cols: usize },
    #[error("bias must lie strictly inside (0,1), got {value}")]
    BiasOutOfRange { value: f64 },
}

/// Weight on listener interests in the energy, strictly inside (0,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bias(f64);

impl Bias {
    pub fn new(value: f64) -> Result<Self, InfoError> {
        if value > 0.0 && value < 1.0 {
            Ok(Bias(value))
        } else {
            Err(InfoError::BiasOutOfRange { value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Binary signal-object adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexicalMatrix {
    n_signals: usize,
    n_objects: usize,
    links: Vec<bool>,
}

impl LexicalMatrix {
    pub fn new(n_signals: usize, n_objects: usize, links: Vec<bool>) -> Result<Self, InfoError> {
        if n_signals == 0 || n_objects == 0 {
            return Err(InfoError::EmptyMatrix);
        }
        if links.len() != n_signals * n_objects {
            return Err(InfoError::ShapeMismatch {
                got: links.len(),
                rows: n_signals,
                cols: n_objects,
            });
        }
        Ok(LexicalMatrix { n_signals, n_objects, links })
    }

    /// Build from 0/1 rows; anything nonzero counts as a link.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, InfoError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(InfoError::ShapeMismatch { got: 0, rows: n, cols: m });
        }
        let links = rows.iter().flatten().map(|&v| v != 0).collect();
        LexicalMatrix::new(n, m, links)
    }

    /// All-zero matrix of the given shape (invalid until links are set).
    pub fn zeros(n_signals: usize, n_objects: usize) -> Result<Self, InfoError> {
        LexicalMatrix::new(n_signals, n_objects, vec![false; n_signals * n_objects])
    }

    /// Square one-to-one lexicon: signal i names object i.
    pub fn identity(n: usize) -> Self {
        let mut links = vec![false; n * n];
        for i in 0..n {
            links[i * n + i] = true;
        }
        LexicalMatrix { n_signals: n, n_objects: n, links }
    }

    /// Interpret the low `n*m` bits of `mask` as a row-major matrix.
    /// Used by exhaustive enumeration; requires `n*m <= 64`.
    pub fn from_bits(n_signals: usize, n_objects: usize, mask: u64) -> Self {
        let cells = n_signals * n_objects;
        assert!(cells <= 64, "bit mask only covers up to 64 cells");
        let links = (0..cells).map(|k| mask >> k & 1 == 1).collect();
        LexicalMatrix { n_signals, n_objects, links }
    }

    pub fn n_signals(&self) -> usize {
        self.n_signals
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn link(&self, signal: usize, object: usize) -> bool {
        self.links[signal * self.n_objects + object]
    }

    pub fn set_link(&mut self, signal: usize, object: usize, value: bool) {
        self.links[signal * self.n_objects + object] = value;
    }

    /// Number of signals linked to object `j`.
    pub fn column_degree(&self, object: usize) -> usize {
        (0..self.n_signals).filter(|&i| self.link(i, object)).count()
    }

    /// Number of objects signal `i` is linked to.
    pub fn row_degree(&self, signal: usize) -> usize {
        (0..self.n_objects).filter(|&j| self.link(signal, j)).count()
    }

    /// Signals that are connected at all (and hence carry probability).
    pub fn lexicon_size(&self) -> usize {
        (0..self.n_signals).filter(|&i| self.row_degree(i) > 0).count()
    }

    /// A matrix is valid when every object column has at least one link.
    pub fn validate(&self) -> Result<(), InfoError> {
        for j in 0..self.n_objects {
            if self.column_degree(j) == 0 {
                return Err(InfoError::UnlinkedObject { column: j });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

/// Joint table p(s_i, r_j), stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    n_signals: usize,
    n_objects: usize,
    probs: Vec<f64>,
}

impl JointDistribution {
    pub fn prob(&self, signal: usize, object: usize) -> f64 {
        self.probs[signal * self.n_objects + object]
    }

    /// Marginal p(s_i).
    pub fn signal_marginal(&self, signal: usize) -> f64 {
        (0..self.n_objects).map(|j| self.prob(signal, j)).sum()
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn n_signals(&self) -> usize {
        self.n_signals
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }
}

/// Entropies and mutual information of a valid lexicon, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoMeasures {
    pub entropy_s: f64,
    pub cond_entropy_s_given_r: f64,
    pub mutual_info: f64,
    pub lexicon_size: usize,
}

fn log2_or_zero(p: f64) -> f64 {
    if p > 0.0 {
        p.log2()
    } else {
        0.0
    }
}

/// Joint probability table induced by a valid matrix:
/// `p(s_i, r_j) = a[i][j] / (m * w_j)`.
pub fn joint_distribution(a: &LexicalMatrix) -> Result<JointDistribution, InfoError> {
    a.validate()?;
    let (n, m) = (a.n_signals(), a.n_objects());
    let mut probs = vec![0.0; n * m];
    for j in 0..m {
        let w = a.column_degree(j) as f64;
        for i in 0..n {
            if a.link(i, j) {
                probs[i * m + j] = 1.0 / (m as f64 * w);
            }
        }
    }
    Ok(JointDistribution { n_signals: n, n_objects: m, probs })
}

/// Entropy, conditional entropy, and mutual information of a valid matrix.
pub fn measures(a: &LexicalMatrix) -> Result<InfoMeasures, InfoError> {
    a.validate()?;
    let (n, m) = (a.n_signals(), a.n_objects());
    // p(s_i) = (1/m) sum_j a[i][j]/w_j; within a column the speaker is
    // uniform over the w_j linked signals, so H(S|R) = (1/m) sum_j log2 w_j.
    let mut cond = 0.0;
    let mut marginal = vec![0.0; n];
    for j in 0..m {
        let w = a.column_degree(j) as f64;
        cond += w.log2();
        for i in 0..n {
            if a.link(i, j) {
                marginal[i] += 1.0 / (m as f64 * w);
            }
        }
    }
    cond /= m as f64;
    let entropy_s = -marginal.iter().map(|&p| p * log2_or_zero(p)).sum::<f64>();
    let mutual_info = (entropy_s - cond).max(0.0);
    Ok(InfoMeasures {
        entropy_s,
        cond_entropy_s_given_r: cond,
        mutual_info,
        lexicon_size: a.lexicon_size(),
    })
}

/// Least-effort energy `omega = lambda*I(S,R) - (1-lambda)*H(S)` in bits.
/// Larger is better; this artifact maximizes it.
pub fn energy(a: &LexicalMatrix, bias: Bias) -> Result<f64, InfoError> {
    let m = measures(a)?;
    let lambda = bias.value();
    Ok(lambda * m.mutual_info - (1.0 - lambda) * m.entropy_s)
}
