//! Proving `ν ∈ ϱ_m ⊗ ϱ_m` for one target or for every partition of `m(m+1)/2`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{self as cert, Certificate, Kind};
use super::closure::rectangle_in_square;
use super::mixed::MixedSearch;
use super::search::{PairSearch, SearchConfig};
use super::verify::Verifier;
use crate::decomp::split::{split_with, SplitKind};
use crate::partition::{partitions, staircase, triangular, Partition, PartitionError};

/// Environment variable naming the default certificate cache directory.
pub const CACHE_ENV: &str = "KRONPOS_CACHE";

/// Combination rounds for the symmetric-cube closure on square targets.
const CLOSURE_LEVELS: usize = 4;

/// Stateful prover; memoized sub-results are shared by every target it is asked about.
pub struct Prover {
    pair: PairSearch,
}

impl Prover {
    pub fn new(config: SearchConfig) -> Prover {
        Prover { pair: PairSearch::new(config) }
    }

    /// Process-wide prover with the default limits.
    pub fn shared() -> &'static Prover {
        static SHARED: OnceLock<Prover> = OnceLock::new();
        SHARED.get_or_init(|| Prover::new(SearchConfig::default()))
    }

    pub fn config(&self) -> SearchConfig {
        self.pair.config
    }

    /// Tries, in order: base facts, the `2 × 2` grid splits, the symmetric-cube closure for squares,
    /// the pair recursion, the mixed fallback, and the closure for other rectangles.
    /// Only certificates that pass the verifier are returned.
    pub fn prove_in_staircase_square(&self, m: usize, nu: &Partition) -> Result<Option<Arc<Certificate>>, PartitionError> {
        let n = triangular(m);
        if nu.size() != n {
            return Err(PartitionError::SizeMismatch(nu.size(), n));
        }
        let found = self.search(m, nu);
        Ok(found.filter(|c| Verifier::new(self.pair.config.ceiling).verify(c).ok))
    }

    fn search(&self, m: usize, nu: &Partition) -> Option<Arc<Certificate>> {
        if let Some(c) = cert::dominance_staircase(m, nu, 2).or_else(|| cert::hook(m, nu)) {
            return Some(c);
        }
        for kind in [SplitKind::Uniform, SplitKind::Plancherel] {
            if let Ok(r) = split_with(kind, nu, m, None) {
                if let Some(c) = r.certificate {
                    return Some(c);
                }
            }
        }
        let rect = nu.is_rectangle().then(|| (nu.first(), nu.len()));
        if let Some((a, b)) = rect.filter(|(a, b)| a == b) {
            if let Some(c) = rectangle_in_square(a, b, m, CLOSURE_LEVELS) {
                return Some(c);
            }
        }
        let mut nodes = 0;
        if let Ok(Some(c)) = self.pair.prove(&staircase(m), nu, &mut nodes) {
            return Some(c);
        }
        let rho = staircase(m);
        let mixed = MixedSearch::new(&self.pair, self.pair.config.fallback_budget);
        let mut nodes = 0;
        if let Ok(Some(c)) = mixed.prove(&rho, &rho, nu, &mut nodes) {
            return Some(c);
        }
        if let Some((a, b)) = rect {
            return rectangle_in_square(a, b, m, CLOSURE_LEVELS);
        }
        None
    }
}

/// One-shot search with the given limits.
pub fn prove_in_staircase_square(m: usize, nu: &Partition, config: SearchConfig) -> Result<Option<Arc<Certificate>>, PartitionError> {
    if config == SearchConfig::default() {
        return Prover::shared().prove_in_staircase_square(m, nu);
    }
    Prover::new(config).prove_in_staircase_square(m, nu)
}

#[derive(Debug, Clone, Default)]
pub struct SaxlOptions {
    pub config: SearchConfig,
    /// Worker threads; `None` uses every available core.
    pub threads: Option<usize>,
    pub cache: Option<PathBuf>,
    /// Print a line to standard error every 1000 targets.
    pub progress: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TargetStatus {
    pub nu: Partition,
    pub proved: bool,
    pub from_cache: bool,
    /// Number of nodes of the certificate.
    pub nodes: usize,
    pub symmetric_cube_leaves: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SaxlReport {
    pub m: usize,
    pub n: usize,
    pub total: usize,
    pub proved: usize,
    pub from_cache: usize,
    pub failed: Vec<Partition>,
    /// Leaf kinds summed over all certificates.
    pub leaf_kinds: BTreeMap<String, usize>,
    pub targets: Vec<TargetStatus>,
}

impl SaxlReport {
    pub fn all_proved(&self) -> bool {
        self.proved == self.total
    }

    pub fn status(&self, nu: &Partition) -> Option<&TargetStatus> {
        self.targets.iter().find(|t| t.nu == *nu)
    }
}

/// Default cache directory from the environment, if set.
pub fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// File holding the certificate for `(m, ν)`.
pub fn cache_path(dir: &Path, m: usize, nu: &Partition) -> PathBuf {
    let name: Vec<String> = nu.parts().iter().map(|p| p.to_string()).collect();
    dir.join(format!("m{m}")).join(format!("{}.json", name.join("-")))
}

fn load_cached(dir: &Path, m: usize, nu: &Partition, ceiling: usize) -> Option<Arc<Certificate>> {
    let text = std::fs::read_to_string(cache_path(dir, m, nu)).ok()?;
    let c = Certificate::from_json(&text).ok()?;
    let rho = staircase(m);
    let goal_ok = c.goal.len() == 3 && c.goal[0] == *nu && c.goal[1] == rho && c.goal[2] == rho;
    (goal_ok && Verifier::new(ceiling).verify(&c).ok).then(|| Arc::new(c))
}

/// Writes through a temporary file and a rename, so concurrent writers of one key are harmless.
pub fn store_cached(dir: &Path, m: usize, nu: &Partition, c: &Certificate) -> std::io::Result<()> {
    let path = cache_path(dir, m, nu);
    let parent = path.parent().expect("cache paths have a parent");
    std::fs::create_dir_all(parent)?;
    let tmp = parent.join(format!(
        ".{}.{}.{:?}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("cert"),
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::write(&tmp, c.to_json())?;
    std::fs::rename(&tmp, &path)
}

/// Attempts every `ν ⊢ m(m+1)/2`, in lexicographic order.
pub fn verify_saxl(m: usize, options: &SaxlOptions) -> SaxlReport {
    let prover = if options.config == SearchConfig::default() { None } else { Some(Prover::new(options.config)) };
    let prover = prover.as_ref().unwrap_or_else(|| Prover::shared());
    let n = triangular(m);
    let mut targets: Vec<Partition> = partitions(n).collect();
    targets.sort();
    let total = targets.len();
    let done = AtomicUsize::new(0);
    let ceiling = options.config.ceiling;
    let work = |nu: &Partition| -> (TargetStatus, Option<Arc<Certificate>>) {
        let cached = options.cache.as_deref().and_then(|d| load_cached(d, m, nu, ceiling));
        let from_cache = cached.is_some();
        let found = cached.or_else(|| {
            let c = prover.prove_in_staircase_square(m, nu).ok().flatten();
            if let (Some(c), Some(dir)) = (&c, options.cache.as_deref()) {
                if let Err(e) = store_cached(dir, m, nu, c) {
                    eprintln!("cache write failed for {nu}: {e}");
                }
            }
            c
        });
        let k = done.fetch_add(1, Ordering::Relaxed) + 1;
        if options.progress && (k.is_multiple_of(1000) || k == total) {
            eprintln!("saxl m={m}: {k}/{total} targets");
        }
        let status = TargetStatus {
            nu: nu.clone(),
            proved: found.is_some(),
            from_cache,
            nodes: found.as_ref().map_or(0, |c| c.node_count()),
            symmetric_cube_leaves: found.as_ref().map_or(0, |c| c.count_kind(Kind::SymmetricCube)),
        };
        (status, found)
    };
    let run = || targets.par_iter().map(work).collect::<Vec<_>>();
    let results = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build().map(|p| p.install(run)).unwrap_or_else(|_| run()),
        None => run(),
    };
    let mut leaf_kinds = BTreeMap::new();
    for (_, c) in &results {
        if let Some(c) = c {
            for node in c.nodes() {
                if node.kind.is_leaf() {
                    *leaf_kinds.entry(format!("{:?}", node.kind)).or_insert(0) += 1;
                }
            }
        }
    }
    let statuses: Vec<TargetStatus> = results.into_iter().map(|(s, _)| s).collect();
    SaxlReport {
        m,
        n,
        total,
        proved: statuses.iter().filter(|s| s.proved).count(),
        from_cache: statuses.iter().filter(|s| s.from_cache).count(),
        failed: statuses.iter().filter(|s| !s.proved).map(|s| s.nu.clone()).collect(),
        leaf_kinds,
        targets: statuses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_staircases() {
        let r = verify_saxl(2, &SaxlOptions::default());
        assert_eq!((r.proved, r.total), (3, 3));
        let r = verify_saxl(4, &SaxlOptions::default());
        assert_eq!((r.proved, r.total), (42, 42));
        let c = Prover::shared().prove_in_staircase_square(2, &Partition::new(vec![1, 1, 1])).unwrap();
        assert!(c.is_some());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("kronpos-cache-test-{}", std::process::id()));
        let opts = SaxlOptions { cache: Some(dir.clone()), ..SaxlOptions::default() };
        let first = verify_saxl(3, &opts);
        assert_eq!(first.from_cache, 0);
        let second = verify_saxl(3, &opts);
        assert_eq!(second.from_cache, second.total);
        assert!(second.all_proved());
        std::fs::remove_dir_all(dir).ok();
    }
}
