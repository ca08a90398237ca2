//! The graded kernel complex of the transferred derivation and the
//! cohomology dimensions extracted from it.
//!
//! `K_n` is the kernel of the transferred derivation on Anick `n`-tuples; the
//! Anick differential restricts to the `K_n` and the cohomology of the
//! restricted complex gives the Hochschild cohomology of the conformal
//! algebra with trivial coefficients. Every space is graded by the index
//! degree and the differentials lower it by exactly one, so each degree is
//! handled as an independent finite computation. Reports always carry the
//! caps they were computed under: a zero total certifies vanishing inside
//! the window, nothing more.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::rc::Rc;

use serde::Serialize;

use crate::closed::{closed_anick_diff, tilde_partial_fast};
use crate::linalg::{Rational, RationalVector, SparseRationalMatrix};
use crate::morse::{
    chain_predicate, enumerate_chains, tilde_partial_general_with, AnickChain, DeltaEngine, GEngine,
};
use crate::rewrite::{is_obstruction, Family, LinComb};
use crate::{Error, Result};

/// Which pipeline computes the differentials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Printed formulas where available (all of `U(3)`; `U(2)` lengths 2 and
    /// 3), weighted Morse paths otherwise.
    Closed,
    /// Weighted Morse paths everywhere.
    Paths,
    /// Run both pipelines and fail on any disagreement.
    Both,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "closed" => Ok(Method::Closed),
            "paths" => Ok(Method::Paths),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method `{other}` (expected closed, paths, or both)")),
        }
    }
}

/// Chain space of fixed length and degree with its ordered basis.
#[derive(Clone, Debug)]
pub struct GradedChainSpace {
    pub family: Family,
    pub n: usize,
    pub d: u32,
    basis: Vec<AnickChain>,
}

impl GradedChainSpace {
    pub fn new(family: Family, n: usize, d: u32) -> Self {
        GradedChainSpace { family, n, d, basis: enumerate_chains(family, n, d) }
    }

    /// The empty space in degree "-1"; target of the derivation matrix in
    /// degree 0.
    fn empty(family: Family, n: usize) -> Self {
        GradedChainSpace { family, n, d: 0, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AnickChain] {
        &self.basis
    }

    pub fn index_of(&self, c: &AnickChain) -> Option<usize> {
        self.basis.binary_search(c).ok()
    }

    /// Coordinates of a chain combination in this space. Terms outside the
    /// basis are an internal error: the callers only produce homogeneous
    /// output of the right length and degree.
    pub fn to_vector(&self, x: &LinComb<AnickChain>) -> Result<RationalVector> {
        let mut v = RationalVector::zero(self.dim());
        for (c, coeff) in x.iter() {
            let Some(i) = self.index_of(c) else {
                return Err(Error::Consistency(format!(
                    "chain {c} is not in the ({}, {}) basis of {}",
                    self.n, self.d, self.family
                )));
            };
            v.set(i, coeff.clone());
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &RationalVector) -> LinComb<AnickChain> {
        let mut out = LinComb::zero();
        for (i, c) in v.iter() {
            out.add_term(self.basis[i].clone(), c.clone());
        }
        out
    }
}

/// Kernel of the transferred derivation in one bidegree, with its canonical
/// nullspace basis. Each basis vector is 1 at its own free column, so kernel
/// coordinates can be read off those positions.
#[derive(Clone, Debug)]
pub struct KernelSpace {
    pub space: GradedChainSpace,
    pub basis: Vec<RationalVector>,
    free_cols: Vec<usize>,
}

impl KernelSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_chains(&self, i: usize) -> LinComb<AnickChain> {
        self.space.from_vector(&self.basis[i])
    }

    /// Coordinates of `v` in the kernel basis, checking exact containment.
    pub fn coordinates(&self, v: &RationalVector) -> Result<RationalVector> {
        let mut coords = RationalVector::zero(self.dim());
        for (i, &fc) in self.free_cols.iter().enumerate() {
            coords.set(i, v.get(fc));
        }
        let mut recon = RationalVector::zero(self.space.dim());
        for (i, c) in coords.iter() {
            recon.add_scaled(&self.basis[i], c);
        }
        if &recon != v {
            return Err(Error::Containment(format!(
                "vector does not lie in the kernel at ({}, {}) of {}",
                self.space.n, self.space.d, self.space.family
            )));
        }
        Ok(coords)
    }
}

/// One `(n, d)` cell of a cohomology table.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CellRecord {
    pub n: usize,
    pub d: u32,
    pub dim_space: usize,
    pub dim_kernel: usize,
    pub dim_ker_delta: usize,
    pub dim_im_delta: usize,
    pub cohomology: usize,
}

/// Verification window of a report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Caps {
    pub n_max: usize,
    pub deg_max: u32,
}

/// Full per-(n, d) cohomology table with totals per homological degree.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CohomologyReport {
    pub family: String,
    pub caps: Caps,
    pub entries: Vec<CellRecord>,
    pub totals: BTreeMap<usize, usize>,
}

impl CohomologyReport {
    pub fn total(&self, n: usize) -> usize {
        self.totals.get(&n).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,d,dim_space,dim_kernel,dim_ker_delta,dim_im_delta,cohomology\n");
        for e in &self.entries {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{}",
                e.n, e.d, e.dim_space, e.dim_kernel, e.dim_ker_delta, e.dim_im_delta, e.cohomology
            );
        }
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}  (n <= {}, degree <= {})",
            self.family, self.caps.n_max, self.caps.deg_max
        );
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>6} {:>7} {:>9} {:>8} {:>10}",
            "n", "d", "space", "kernel", "ker diff", "im diff", "cohomology"
        );
        for e in &self.entries {
            if e.dim_space == 0 {
                continue;
            }
            let _ = writeln!(
                s,
                "{:>3} {:>3} {:>6} {:>7} {:>9} {:>8} {:>10}",
                e.n, e.d, e.dim_space, e.dim_kernel, e.dim_ker_delta, e.dim_im_delta, e.cohomology
            );
        }
        let _ = writeln!(s, "totals over d <= {}:", self.caps.deg_max);
        for (n, t) in &self.totals {
            let _ = writeln!(s, "  H^{n} = {t}");
        }
        s
    }
}

/// Number of chains of the given length and degree with every index >= 2.
pub fn regular_dim(family: Family, n: usize, d: u32) -> usize {
    enumerate_chains(family, n, d)
        .iter()
        .filter(|c| c.indices().iter().all(|&i| i >= 2))
        .count()
}

/// Cohomology workspace for one family: caches kernel bases and restricted
/// differential matrices per bidegree, cross-validating the closed-form and
/// path-based pipelines when the method asks for it.
pub struct Calculator {
    family: Family,
    method: Method,
    delta_engine: DeltaEngine,
    g_engine: GEngine,
    kernels: HashMap<(usize, u32), Rc<KernelSpace>>,
    restricted: HashMap<(usize, u32), Rc<SparseRationalMatrix>>,
}

impl Calculator {
    pub fn new(family: Family, method: Method, prune_zeros: bool) -> Self {
        Calculator {
            family,
            method,
            delta_engine: DeltaEngine::new(family, prune_zeros),
            g_engine: GEngine::new(family),
            kernels: HashMap::new(),
            restricted: HashMap::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn chain_space(&self, n: usize, d: u32) -> GradedChainSpace {
        GradedChainSpace::new(self.family, n, d)
    }

    /// Transferred derivation on a single chain, per the configured method.
    pub fn tilde_partial(&mut self, c: &AnickChain) -> Result<LinComb<AnickChain>> {
        match self.method {
            Method::Closed => Ok(tilde_partial_fast(self.family, c)),
            Method::Paths => Ok(tilde_partial_general_with(&mut self.g_engine, c)),
            Method::Both => {
                let fast = tilde_partial_fast(self.family, c);
                let general = tilde_partial_general_with(&mut self.g_engine, c);
                if fast != general {
                    return Err(Error::MethodMismatch(format!(
                        "derivation of {c}: fast {fast}, paths {general}"
                    )));
                }
                Ok(fast)
            }
        }
    }

    /// Anick differential on a single chain, per the configured method. The
    /// closed pipeline falls back to paths where no printed formula exists
    /// (`U(2)` beyond length 3).
    pub fn anick_delta(&mut self, c: &AnickChain) -> Result<LinComb<AnickChain>> {
        if c.len() < 2 {
            return Ok(LinComb::zero());
        }
        match self.method {
            Method::Closed => match closed_anick_diff(self.family, c) {
                Some(x) => Ok(x),
                None => Ok(self.delta_engine.delta(c)),
            },
            Method::Paths => Ok(self.delta_engine.delta(c)),
            Method::Both => {
                let paths = self.delta_engine.delta(c);
                if let Some(closed) = closed_anick_diff(self.family, c) {
                    if closed != paths {
                        return Err(Error::MethodMismatch(format!(
                            "differential of {c}: closed {closed}, paths {paths}"
                        )));
                    }
                }
                Ok(paths)
            }
        }
    }

    /// Matrix of the transferred derivation from `(n, d)` to `(n, d-1)` in
    /// the chain bases.
    pub fn tilde_matrix(&mut self, n: usize, d: u32) -> Result<SparseRationalMatrix> {
        let source = self.chain_space(n, d);
        let target = if d >= 1 {
            self.chain_space(n, d - 1)
        } else {
            GradedChainSpace::empty(self.family, n)
        };
        let mut m = SparseRationalMatrix::new(target.dim(), source.dim());
        for (j, c) in source.basis().iter().enumerate() {
            let image = self.tilde_partial(c)?;
            let v = target.to_vector(&image)?;
            for (i, x) in v.iter() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Basis of `K_n` in degree `d`: the nullspace of the derivation matrix.
    pub fn kernel_basis(&mut self, n: usize, d: u32) -> Result<Rc<KernelSpace>> {
        if let Some(hit) = self.kernels.get(&(n, d)) {
            return Ok(hit.clone());
        }
        let m = self.tilde_matrix(n, d)?;
        let (basis, free_cols) = m.nullspace_basis_with_free_cols();
        let kernel = Rc::new(KernelSpace { space: self.chain_space(n, d), basis, free_cols });
        self.kernels.insert((n, d), kernel.clone());
        Ok(kernel)
    }

    /// Matrix of the Anick differential restricted to `K_n^{(d)} ->
    /// K_{n-1}^{(d-1)}`, in kernel coordinates. Fails loudly if the image of
    /// a kernel vector leaves the target kernel.
    pub fn restricted_diff_matrix(&mut self, n: usize, d: u32) -> Result<Rc<SparseRationalMatrix>> {
        if let Some(hit) = self.restricted.get(&(n, d)) {
            return Ok(hit.clone());
        }
        let source = self.kernel_basis(n, d)?;
        let matrix = if n < 2 || d == 0 {
            // the complex ends at homological degree 1 and index degree 0
            SparseRationalMatrix::new(0, source.dim())
        } else {
            let target = self.kernel_basis(n - 1, d - 1)?;
            let mut m = SparseRationalMatrix::new(target.dim(), source.dim());
            for j in 0..source.dim() {
                let chains = source.basis_chains(j);
                let mut image = LinComb::zero();
                for (c, coeff) in chains.iter() {
                    let dc = self.anick_delta(c)?;
                    image.add_scaled(&dc, coeff);
                }
                let v = target.space.to_vector(&image)?;
                let coords = target.coordinates(&v)?;
                for (i, x) in coords.iter() {
                    m.set(i, j, x.clone());
                }
            }
            m
        };
        let matrix = Rc::new(matrix);
        self.restricted.insert((n, d), matrix.clone());
        Ok(matrix)
    }

    /// Kernel, image, and cohomology dimensions at one `(n, d)` cell.
    pub fn cohomology_dim(&mut self, n: usize, d: u32) -> Result<CellRecord> {
        assert!(n >= 1);
        let kernel = self.kernel_basis(n, d)?;
        let dim_space = kernel.space.dim();
        let dim_kernel = kernel.dim();
        let dim_ker_delta = if n == 1 {
            // the complex is not completed below homological degree 1
            dim_kernel
        } else {
            dim_kernel - self.restricted_diff_matrix(n, d)?.rank()
        };
        let dim_im_delta = self.restricted_diff_matrix(n + 1, d + 1)?.rank();
        if dim_im_delta > dim_ker_delta {
            return Err(Error::Consistency(format!(
                "image dimension exceeds kernel dimension at ({n}, {d})"
            )));
        }
        Ok(CellRecord {
            n,
            d,
            dim_space,
            dim_kernel,
            dim_ker_delta,
            dim_im_delta,
            cohomology: dim_ker_delta - dim_im_delta,
        })
    }

    /// Full table over `1 <= n <= n_max`, `0 <= d <= d_max`.
    pub fn cohomology_table(&mut self, n_max: usize, d_max: u32) -> Result<CohomologyReport> {
        assert!(n_max >= 1 && d_max >= 1);
        let mut entries = Vec::new();
        let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
        for n in 1..=n_max {
            let mut total = 0;
            for d in 0..=d_max {
                let cell = self.cohomology_dim(n, d)?;
                total += cell.cohomology;
                entries.push(cell);
            }
            totals.insert(n, total);
        }
        Ok(CohomologyReport {
            family: self.family.name().to_string(),
            caps: Caps { n_max, deg_max: d_max },
            entries,
            totals,
        })
    }
}

/// Seed of the zero-slot reconstruction: the free components `v_1` and
/// `v_j`, `j >= 3`, all combinations of regular chains of length `n - 2`.
#[derive(Clone, Debug, Default)]
pub struct KernelSeed {
    pub v1: LinComb<AnickChain>,
    pub higher: BTreeMap<u32, LinComb<AnickChain>>,
}

fn validate_seed_component(
    label: &str,
    x: &LinComb<AnickChain>,
    len: usize,
    degree: i64,
) -> Result<()> {
    for (c, _) in x.iter() {
        if c.len() != len {
            return Err(Error::InvalidSeed(format!("{label}: chain {c} must have length {len}")));
        }
        if i64::from(c.degree()) != degree {
            return Err(Error::InvalidSeed(format!(
                "{label}: chain {c} must be homogeneous of degree {degree}"
            )));
        }
        if c.indices().iter().any(|&i| i < 2) {
            return Err(Error::InvalidSeed(format!("{label}: chain {c} is not regular")));
        }
    }
    Ok(())
}

/// Rebuild the unique element of `K_n` in degree `d` whose zero-slot
/// decomposition starts from the given seed. Specific to `U(3)`, where the
/// slot recursion is justified; cross-checks the nullspace route.
pub fn reconstruct_from_seed(
    family: Family,
    n: usize,
    d: u32,
    seed: &KernelSeed,
) -> Result<LinComb<AnickChain>> {
    if family != Family::U3 {
        return Err(Error::InvalidSeed("seed reconstruction is specific to U(3)".into()));
    }
    if n < 3 {
        return Err(Error::InvalidSeed("seed reconstruction needs n >= 3".into()));
    }
    validate_seed_component("v1", &seed.v1, n - 2, i64::from(d) - 1)?;
    for (&j, vj) in &seed.higher {
        if j < 3 {
            return Err(Error::InvalidSeed("higher seed slots start at j = 3".into()));
        }
        validate_seed_component(&format!("v{j}"), vj, n - 2, i64::from(d) - i64::from(j))?;
    }

    let tilde = |x: &LinComb<AnickChain>| x.flat_map(|c| tilde_partial_fast(family, c));
    let append = |x: &LinComb<AnickChain>, j: u32| -> LinComb<AnickChain> {
        let mut out = LinComb::zero();
        for (c, coeff) in x.iter() {
            let appended = c.append(j);
            debug_assert!(chain_predicate(family, appended.indices()));
            out.add_term(appended, coeff.clone());
        }
        out
    };

    // v2 is forced: 2[v2|1] = -pi([tilde(v1)|1])
    let v2 = tilde(&seed.v1)
        .filter(|c| is_obstruction(family, c.last(), 1))
        .scale(&crate::linalg::rat(-1, 2));

    let mut slot = append(&seed.v1, 1);
    slot = slot.add(&append(&v2, 2));
    for (&j, vj) in &seed.higher {
        slot = slot.add(&append(vj, j));
    }

    // slot recursion: (i+1)[a_{i+1}|i] = -pi([tilde(a_i)|i])
    let mut result = append(&slot, 0);
    let mut a_i = slot;
    let mut i: u32 = 0;
    loop {
        let derived = tilde(&a_i);
        let kept = derived.filter(|c| is_obstruction(family, c.last(), i));
        if i == 0 && kept.iter().any(|(c, _)| c.last() == 1) {
            return Err(Error::InvalidSeed(
                "zero-slot derivative contains chains ending in 1".into(),
            ));
        }
        let a_next = kept.scale(&Rational::new((-1).into(), (i64::from(i) + 1).into()));
        if a_next.is_zero() {
            break;
        }
        result = result.add(&append(&a_next, i + 1));
        a_i = a_next;
        i += 1;
    }

    debug_assert!(result.flat_map(|c| tilde_partial_fast(family, c)).is_zero());
    Ok(result)
}
