//! Classical lower bounds on independence and clique numbers, the sharpened
//! `k + 1` bounds for the two degree-equivalence families, and the Turán
//! graph.
//!
//! Rational bounds are exact (`BigRational`). Only the Edwards–Elphick bound
//! involves a square root and is computed in `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{complement, Graph};
use crate::recognition::{
    clique_union_profile_from_degrees, is_clique_union, is_complete_multipartite,
    multipartite_profile_from_degrees, DegreeSequence,
};

pub type Rational = BigRational;

/// Tolerance for comparisons involving [`edwards_elphick`].
pub const FLOAT_TOLERANCE: f64 = 1e-9;

fn ratio(num: usize, den: usize) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Caro–Wei: `alpha >= sum 1/(d_i + 1)`.
pub fn caro_wei(d: &DegreeSequence) -> Rational {
    d.multiplicities()
        .into_iter()
        .fold(Rational::zero(), |acc, (deg, count)| {
            acc + ratio(count, deg + 1)
        })
}

fn require_vertices(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "bound needs at least one vertex".into(),
        ));
    }
    Ok(())
}

/// Turán: `alpha >= n^2 / (n + 2m)`.
pub fn turan_alpha(n: usize, m: usize) -> Result<Rational> {
    require_vertices(n)?;
    Ok(ratio(n * n, n + 2 * m))
}

/// Hansen–Zheng: `alpha >= ceil((2n - 2m/q) / (q + 1))` with `q = floor(2m/n)`.
/// The formula is undefined when `q = 0` (fewer than `n/2` edges); there the
/// value is `n - m`, which is exact for edgeless graphs and stays a valid
/// lower bound because every edge costs at most one vertex.
pub fn hansen_zheng(n: usize, m: usize) -> Result<usize> {
    require_vertices(n)?;
    let q = 2 * m / n;
    if q == 0 {
        return Ok(n - m);
    }
    // (2n - 2m/q)/(q+1) = (2nq - 2m) / (q(q+1)); the numerator is non-negative
    // because nq >= 2m - n and q >= 1 imply 2nq >= 2m.
    let num = 2 * n * q - 2 * m;
    Ok(num.div_ceil(q * (q + 1)))
}

/// Myers–Liu: `omega >= n^2 / (n^2 - 2m)`.
pub fn myers_liu(n: usize, m: usize) -> Result<Rational> {
    require_vertices(n)?;
    if 2 * m >= n * n {
        return Err(Error::InvalidArgument(format!("m={m} too large for n={n}")));
    }
    Ok(ratio(n * n, n * n - 2 * m))
}

/// Edwards–Elphick: `omega >= n / (n - sqrt(sum d_i^2 / n))`.
pub fn edwards_elphick(d: &DegreeSequence) -> Result<f64> {
    let n = d.n();
    require_vertices(n)?;
    d.check()?;
    let sum_sq: f64 = d.degrees().iter().map(|&x| (x * x) as f64).sum();
    let root = (sum_sq / n as f64).sqrt();
    Ok(n as f64 / (n as f64 - root))
}

fn turan_parts(n: usize, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "Turán graph needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let (q, r) = (n / k, n % k);
    Ok((0..k).map(|i| if i < k - r { q } else { q + 1 }).collect())
}

/// `T(n, k)`: complete `k`-partite graph with parts `floor(n/k)` and `ceil(n/k)`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    Ok(Graph::complete_multipartite(&turan_parts(n, k)?))
}

/// `t(n, k) = (n^2 - sum a_i^2) / 2` over the parts of `T(n, k)`.
pub fn turan_edge_count(n: usize, k: usize) -> Result<usize> {
    let parts = turan_parts(n, k)?;
    Ok((n * n - parts.iter().map(|a| a * a).sum::<usize>()) / 2)
}

/// `k` for the canonical clique union, `k + 1` for every other realization of
/// its degree sequence.
pub fn sharpened_alpha_bound(g: &Graph) -> Result<usize> {
    let profile = clique_union_profile_from_degrees(&g.degree_sequence())
        .ok_or(Error::OutsideFamily("disjoint union of cliques"))?;
    Ok(if is_clique_union(g).is_some() {
        profile.k()
    } else {
        profile.k() + 1
    })
}

/// `k` for the canonical complete multipartite graph, `k + 1` otherwise.
pub fn sharpened_omega_bound(g: &Graph) -> Result<usize> {
    let profile = multipartite_profile_from_degrees(&g.degree_sequence())?
        .ok_or(Error::OutsideFamily("complete multipartite graph"))?;
    Ok(if is_complete_multipartite(g).is_some() {
        profile.k()
    } else {
        profile.k() + 1
    })
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Every bound for one graph, optionally with the exact values.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub id: String,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "ser_rational")]
    pub caro_wei: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub turan_alpha: Rational,
    pub hansen_zheng: usize,
    #[serde(serialize_with = "ser_rational")]
    pub myers_liu: Rational,
    pub edwards_elphick: f64,
    pub sharpened_alpha: Option<usize>,
    pub sharpened_omega: Option<usize>,
    pub exact_alpha: Option<usize>,
    pub exact_omega: Option<usize>,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// CSV columns of [`BoundReport`], in order.
pub const REPORT_COLUMNS: [&str; 14] = [
    "schema_version",
    "id",
    "n",
    "m",
    "caro_wei",
    "turan_alpha",
    "hansen_zheng",
    "myers_liu",
    "edwards_elphick",
    "sharpened_alpha",
    "sharpened_omega",
    "exact_alpha",
    "exact_omega",
    "alpha_bounds_valid",
];

impl BoundReport {
    /// Every lower bound on alpha (resp. omega) is at most the exact value,
    /// for whichever exact values are present.
    pub fn bounds_hold(&self) -> bool {
        let alpha_ok = self.exact_alpha.is_none_or(|a| {
            let a_r = ratio(a, 1);
            self.caro_wei <= a_r
                && self.turan_alpha <= a_r
                && self.hansen_zheng <= a
                && self.sharpened_alpha.is_none_or(|s| s <= a)
        });
        let omega_ok = self.exact_omega.is_none_or(|w| {
            self.myers_liu <= ratio(w, 1)
                && self.edwards_elphick <= w as f64 + FLOAT_TOLERANCE
                && self.sharpened_omega.is_none_or(|s| s <= w)
        });
        alpha_ok && omega_ok
    }

    pub fn csv_record(&self) -> Vec<String> {
        let opt = |o: Option<usize>| o.map_or(String::new(), |v| v.to_string());
        vec![
            self.schema_version.to_string(),
            self.id.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.caro_wei.to_string(),
            self.turan_alpha.to_string(),
            self.hansen_zheng.to_string(),
            self.myers_liu.to_string(),
            format!("{:.12}", self.edwards_elphick),
            opt(self.sharpened_alpha),
            opt(self.sharpened_omega),
            opt(self.exact_alpha),
            opt(self.exact_omega),
            self.bounds_hold().to_string(),
        ]
    }
}

/// Assembles a [`BoundReport`]. The sharpened bounds are left empty when the
/// graph is outside the corresponding family.
pub fn compare_bounds(g: &Graph, id: &str, with_exact: bool) -> Result<BoundReport> {
    compare_bounds_with(g, id, with_exact.then(ExactSolver::default))
}

pub fn compare_bounds_with(
    g: &Graph,
    id: &str,
    solver: Option<ExactSolver>,
) -> Result<BoundReport> {
    let (n, m) = (g.n(), g.m());
    let d = g.degree_sequence();
    let optional = |r: Result<usize>| match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::OutsideFamily(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let (exact_alpha, exact_omega) = match solver {
        Some(s) => (
            Some(s.max_independent_set(g)?.size()),
            Some(s.max_independent_set(&complement(g))?.size()),
        ),
        None => (None, None),
    };
    Ok(BoundReport {
        schema_version: REPORT_SCHEMA_VERSION,
        id: id.to_string(),
        n,
        m,
        caro_wei: caro_wei(&d),
        turan_alpha: turan_alpha(n, m)?,
        hansen_zheng: hansen_zheng(n, m)?,
        myers_liu: myers_liu(n, m)?,
        edwards_elphick: edwards_elphick(&d)?,
        sharpened_alpha: optional(sharpened_alpha_bound(g))?,
        sharpened_omega: optional(sharpened_omega_bound(g))?,
        exact_alpha,
        exact_omega,
    })
}
