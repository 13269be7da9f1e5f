//! Verification campaigns over whole degree-equivalence classes.
//!
//! Profiles are visited as integer partitions (parts ascending) in
//! lexicographic order, grouped by total size. Work is sharded across
//! profiles with rayon and merged back in profile order, so outputs do not
//! depend on scheduling.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{compare_bounds, BoundReport, REPORT_COLUMNS, REPORT_SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::graph::io::encode_graph6;
use crate::graph::{contains_induced, Graph};
use crate::realizations::{enumerate_realizations, ENUMERATION_CAP};
use crate::recognition::{is_clique_union, Flavor, PartitionProfile};
use crate::witness::witness_independent_set;

/// Partitions of `n` into positive parts listed ascending, in lexicographic
/// order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for a in min..=rest {
            // the last part must absorb everything left
            if a != rest && rest - a < a {
                continue;
            }
            cur.push(a);
            rec(rest - a, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Every clique-union profile with `1 <= sum <= max_n`.
pub fn clique_union_profiles(max_n: usize) -> Vec<PartitionProfile> {
    (1..=max_n)
        .flat_map(integer_partitions)
        .map(|p| PartitionProfile::new(p, Flavor::CliqueUnion).expect("positive parts"))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignResult {
    pub profile: PartitionProfile,
    pub degree_sequence: String,
    pub realization_count: usize,
    pub canonical_found: bool,
    pub canonical_alpha: Option<usize>,
    pub min_noncanonical_alpha: Option<usize>,
    pub theorem_holds: bool,
    /// The witness construction produced a valid `k + 1` set for every
    /// non-canonical realization and refused the canonical one.
    pub witness_sound: bool,
    #[serde(skip)]
    pub reports: Vec<BoundReport>,
    #[serde(skip)]
    pub wall_time: Duration,
}

pub const CAMPAIGN_COLUMNS: [&str; 10] = [
    "schema_version",
    "profile",
    "k",
    "n",
    "realizations",
    "canonical_found",
    "canonical_alpha",
    "min_noncanonical_alpha",
    "theorem_holds",
    "witness_sound",
];

impl CampaignResult {
    pub fn csv_record(&self) -> Vec<String> {
        let opt = |o: Option<usize>| o.map_or(String::new(), |v| v.to_string());
        vec![
            REPORT_SCHEMA_VERSION.to_string(),
            self.profile.to_string(),
            self.profile.k().to_string(),
            self.profile.n().to_string(),
            self.realization_count.to_string(),
            self.canonical_found.to_string(),
            opt(self.canonical_alpha),
            opt(self.min_noncanonical_alpha),
            self.theorem_holds.to_string(),
            self.witness_sound.to_string(),
        ]
    }
}

fn check_size(p: &PartitionProfile) -> Result<()> {
    if p.n() > ENUMERATION_CAP {
        return Err(Error::SizeLimit {
            what: "campaign profile",
            cap: ENUMERATION_CAP,
            n: p.n(),
        });
    }
    Ok(())
}

/// Enumerates every realization of the profile's clique-union degree
/// sequence and checks that only the canonical graph has `alpha = k`.
pub fn verify_profile(profile: &PartitionProfile) -> Result<CampaignResult> {
    check_size(profile)?;
    let start = Instant::now();
    let profile = profile.with_flavor(Flavor::CliqueUnion);
    let k = profile.k();
    let d = profile.degree_sequence();
    let mut result = CampaignResult {
        degree_sequence: d.to_string(),
        profile: profile.clone(),
        realization_count: 0,
        canonical_found: false,
        canonical_alpha: None,
        min_noncanonical_alpha: None,
        theorem_holds: true,
        witness_sound: true,
        reports: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for g in enumerate_realizations(&d)? {
        result.realization_count += 1;
        let report = compare_bounds(&g, &encode_graph6(&g), true)?;
        let alpha = report.exact_alpha.expect("exact requested");
        let canonical = is_clique_union(&g).is_some();
        let witness = witness_independent_set(&g);
        if canonical {
            result.canonical_found = true;
            result.canonical_alpha = Some(alpha);
            result.theorem_holds &= alpha == k;
            result.witness_sound &= matches!(witness, Err(Error::Canonical(_)));
        } else {
            result.min_noncanonical_alpha = Some(
                result
                    .min_noncanonical_alpha
                    .map_or(alpha, |a| a.min(alpha)),
            );
            result.theorem_holds &= alpha > k;
            result.witness_sound &=
                witness.is_ok_and(|c| c.size() > k && c.size() <= alpha && c.validate(&g));
        }
        result.reports.push(report);
    }
    result.theorem_holds &= result.canonical_found;
    result.wall_time = start.elapsed();
    Ok(result)
}

/// Runs [`verify_profile`] on every clique-union profile with `sum <= max_n`.
pub fn verify_theorem(max_n: usize) -> Result<Vec<CampaignResult>> {
    if max_n > ENUMERATION_CAP {
        return Err(Error::SizeLimit {
            what: "theorem verification",
            cap: ENUMERATION_CAP,
            n: max_n,
        });
    }
    clique_union_profiles(max_n)
        .par_iter()
        .map(verify_profile)
        .collect()
}

pub fn write_campaign_csv<W: Write>(results: &[CampaignResult], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CAMPAIGN_COLUMNS)?;
    for r in results {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

/// Small named graphs for pattern lists: `pN` (path), `cN` (cycle),
/// `kN` (complete), `eN` (edgeless).
pub fn pattern_graph(name: &str) -> Result<Graph> {
    let name = name.trim().to_ascii_lowercase();
    let bad = || Error::InvalidArgument(format!("unknown pattern '{name}'"));
    let (kind, size) = name.split_at(1.min(name.len()));
    let n: usize = size.parse().map_err(|_| bad())?;
    match kind {
        "p" => Ok(Graph::path(n)),
        "c" => Graph::cycle(n),
        "k" => Ok(Graph::complete(n)),
        "e" => Ok(Graph::new(n)),
        _ => Err(bad()),
    }
}

/// First enumerated non-canonical realization with `alpha = k + 1` that
/// contains every pattern as an induced subgraph.
pub fn find_sharp_example(profile: &PartitionProfile, patterns: &[Graph]) -> Result<Option<Graph>> {
    check_size(profile)?;
    let profile = profile.with_flavor(Flavor::CliqueUnion);
    let k = profile.k();
    for g in enumerate_realizations(&profile.degree_sequence())? {
        if is_clique_union(&g).is_some() {
            continue;
        }
        let mut matches = true;
        for p in patterns {
            if !contains_induced(&g, p)? {
                matches = false;
                break;
            }
        }
        if matches && crate::exact::independence_number(&g)? == k + 1 {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// One realization's bounds within a sharpness campaign.
#[derive(Clone, Debug)]
pub struct SharpnessRow {
    pub profile: PartitionProfile,
    pub index: usize,
    pub canonical: bool,
    pub report: BoundReport,
    /// Non-canonical, every classical alpha bound is below `k + 1`, and
    /// `k + 1 <= alpha`.
    pub flagged: bool,
}

pub const SHARPNESS_COLUMNS: [&str; 4] = ["profile", "index", "canonical", "flagged"];

impl SharpnessRow {
    fn new(profile: &PartitionProfile, index: usize, g: &Graph) -> Result<Self> {
        let report = compare_bounds(g, &encode_graph6(g), true)?;
        let canonical = is_clique_union(g).is_some();
        let k1 = profile.k() + 1;
        let k1_r = BigRational::from_integer(BigInt::from(k1));
        let flagged = !canonical
            && report.caro_wei < k1_r
            && report.turan_alpha < k1_r
            && report.hansen_zheng < k1
            && report.exact_alpha.is_some_and(|a| k1 <= a);
        Ok(SharpnessRow {
            profile: profile.clone(),
            index,
            canonical,
            report,
            flagged,
        })
    }

    pub fn csv_record(&self) -> Vec<String> {
        let mut rec = vec![
            self.profile.to_string(),
            self.index.to_string(),
            self.canonical.to_string(),
            self.flagged.to_string(),
        ];
        rec.extend(self.report.csv_record());
        rec
    }
}

/// Per-realization bound reports for each profile, written as CSV.
pub fn bounds_report_campaign<W: Write>(
    profiles: &[PartitionProfile],
    out: W,
) -> Result<Vec<SharpnessRow>> {
    for p in profiles {
        check_size(p)?;
    }
    let per_profile: Vec<Vec<SharpnessRow>> = profiles
        .par_iter()
        .map(|p| {
            let p = p.with_flavor(Flavor::CliqueUnion);
            enumerate_realizations(&p.degree_sequence())?
                .enumerate()
                .map(|(i, g)| SharpnessRow::new(&p, i, &g))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let rows: Vec<SharpnessRow> = per_profile.into_iter().flatten().collect();
    let mut w = csv::Writer::from_writer(out);
    let header: Vec<&str> = SHARPNESS_COLUMNS
        .iter()
        .chain(REPORT_COLUMNS.iter())
        .copied()
        .collect();
    w.write_record(&header)?;
    for row in &rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn profile(parts: &[usize]) -> PartitionProfile {
        PartitionProfile::new(parts.to_vec(), Flavor::CliqueUnion).unwrap()
    }

    #[test]
    fn partitions_in_lexicographic_order() {
        assert_eq!(
            integer_partitions(3),
            vec![vec![1, 1, 1], vec![1, 2], vec![3]]
        );
        let counts: Vec<usize> = (1..=9).map(|n| integer_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert!(integer_partitions(0).is_empty());
    }

    #[test]
    fn small_profiles_verify() {
        let r = verify_profile(&profile(&[3, 3])).unwrap();
        assert_eq!(r.realization_count, 2);
        assert_eq!(
            (r.canonical_alpha, r.min_noncanonical_alpha),
            (Some(2), Some(3))
        );
        assert!(r.theorem_holds && r.witness_sound);

        let r = verify_profile(&profile(&[2, 3])).unwrap();
        assert_eq!(r.realization_count, 2);
        assert_eq!(
            (r.canonical_alpha, r.min_noncanonical_alpha),
            (Some(2), Some(3))
        );
        assert!(r.theorem_holds);

        let r = verify_profile(&profile(&[1])).unwrap();
        assert_eq!(r.realization_count, 1);
        assert_eq!(r.canonical_alpha, Some(1));
        assert!(r.theorem_holds);

        assert!(verify_profile(&profile(&[5, 6])).is_err());
        assert!(verify_theorem(11).is_err());
    }

    #[test]
    fn sharp_examples_on_two_triangles() {
        let g = find_sharp_example(&profile(&[3, 3]), &[]).unwrap().unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(6).unwrap()).unwrap());
        let c5 = pattern_graph("c5").unwrap();
        assert_eq!(find_sharp_example(&profile(&[3, 3]), &[c5]).unwrap(), None);
    }

    #[test]
    fn patterns() {
        assert_eq!(pattern_graph("P4").unwrap(), Graph::path(4));
        assert_eq!(pattern_graph("c5").unwrap(), Graph::cycle(5).unwrap());
        assert!(pattern_graph("x3").is_err());
        assert!(pattern_graph("c2").is_err());
        assert!(pattern_graph("").is_err());
    }

    #[test]
    fn sharpness_campaign() {
        let mut buf = Vec::new();
        let rows = bounds_report_campaign(&[profile(&[2, 2])], &mut buf).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].canonical && !rows[0].flagged);

        let rows = bounds_report_campaign(&[], &mut Vec::new()).unwrap();
        assert!(rows.is_empty());
    }
}
