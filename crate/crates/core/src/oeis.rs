//! OEIS b-file entries, an offline fixture store and claim verification.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{is_integer, ExactRational};
use crate::moments::catalog::NamedSequenceEntry;

/// Forces offline mode when set to anything but `0` or the empty string.
pub const OFFLINE_ENV: &str = "BETAMOM_OFFLINE";
/// Overrides the fixture directory.
pub const FIXTURES_ENV: &str = "BETAMOM_FIXTURES";

/// Number of terms compared by [`verify_claim`].
pub const CLAIM_TERMS: usize = 20;
/// Alignment shifts tried by [`verify_claim`], in order of preference.
pub const SHIFTS: [i64; 5] = [0, -1, 1, -2, 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisEntry {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

/// Checks the `A` + six digits form.
pub fn validate_id(id: &str) -> Result<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::ParseError(format!("malformed OEIS id {id:?}")))
    }
}

impl OeisEntry {
    pub fn new(id: &str, offset: i64, terms: Vec<BigInt>) -> Result<Self> {
        validate_id(id)?;
        if terms.is_empty() {
            return Err(Error::ParseError(format!("{id} has no terms")));
        }
        Ok(OeisEntry {
            id: id.to_string(),
            offset,
            terms,
        })
    }

    /// Parses b-file text. The offset is the first index; reading stops at
    /// the first gap in the indices.
    pub fn parse_bfile(id: &str, text: &str) -> Result<Self> {
        validate_id(id)?;
        let mut offset = None;
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let bad = || Error::ParseError(format!("{id}: bad line {}: {line:?}", lineno + 1));
            let index: i64 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let value: BigInt = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            let start = *offset.get_or_insert(index);
            if index != start + terms.len() as i64 {
                break;
            }
            terms.push(value);
        }
        Self::new(id, offset.unwrap_or(0), terms)
    }

    pub fn to_bfile(&self) -> String {
        let mut s = format!("# {}\n", self.id);
        for (i, t) in self.terms.iter().enumerate() {
            s.push_str(&format!("{} {}\n", self.offset + i as i64, t));
        }
        s
    }

    /// File name used by OEIS for the b-file, e.g. `b000108.txt`.
    pub fn bfile_name(id: &str) -> String {
        format!("b{}.txt", &id[1..])
    }
}

/// Directory of the fixtures shipped with the crate.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("oeis")
}

/// Looks up entries in memory, then in the fixture directory, then online.
#[derive(Debug)]
pub struct OeisClient {
    cache: RwLock<HashMap<String, Arc<OeisEntry>>>,
    fixtures: Option<PathBuf>,
    offline: bool,
}

impl OeisClient {
    pub fn new(fixtures: Option<PathBuf>, offline: bool) -> Self {
        OeisClient {
            cache: RwLock::new(HashMap::new()),
            fixtures,
            offline,
        }
    }

    /// Shipped fixtures, with the environment overrides applied.
    pub fn from_env() -> Self {
        let fixtures = std::env::var_os(FIXTURES_ENV).map(PathBuf::from).unwrap_or_else(default_fixture_dir);
        let offline = std::env::var(OFFLINE_ENV).is_ok_and(|v| !v.is_empty() && v != "0");
        Self::new(Some(fixtures), offline)
    }

    pub fn with_fixtures(mut self, dir: PathBuf) -> Self {
        self.fixtures = Some(dir);
        self
    }

    pub fn force_offline(mut self) -> Self {
        self.offline = true;
        self
    }

    pub fn is_offline(&self) -> bool {
        self.offline || !cfg!(feature = "network")
    }

    pub fn fetch(&self, id: &str) -> Result<Arc<OeisEntry>> {
        validate_id(id)?;
        if let Some(e) = self.cache.read().expect("cache lock").get(id) {
            return Ok(Arc::clone(e));
        }
        let entry = Arc::new(self.load(id)?);
        let mut cache = self.cache.write().expect("cache lock");
        Ok(Arc::clone(cache.entry(id.to_string()).or_insert(entry)))
    }

    fn load(&self, id: &str) -> Result<OeisEntry> {
        if let Some(dir) = &self.fixtures {
            let path = dir.join(OeisEntry::bfile_name(id));
            if let Ok(text) = std::fs::read_to_string(&path) {
                return OeisEntry::parse_bfile(id, &text);
            }
        }
        if self.is_offline() {
            return Err(Error::NetworkUnavailable(format!("offline and no fixture for {id}")));
        }
        download(id)
    }
}

#[cfg(feature = "network")]
fn download(id: &str) -> Result<OeisEntry> {
    use std::time::Duration;
    let agent = ureq::AgentBuilder::new().timeout(Duration::from_secs(10)).build();
    let url = format!("https://oeis.org/{id}/{}", OeisEntry::bfile_name(id));
    let mut last = String::new();
    for _ in 0..2 {
        match agent.get(&url).call() {
            Ok(resp) => {
                let text = resp.into_string().map_err(|e| Error::NetworkUnavailable(e.to_string()))?;
                return OeisEntry::parse_bfile(id, &text);
            }
            Err(ureq::Error::Status(404, _)) => return Err(Error::NotFound(id.to_string())),
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::NetworkUnavailable(last))
}

#[cfg(not(feature = "network"))]
fn download(id: &str) -> Result<OeisEntry> {
    Err(Error::NetworkUnavailable(format!("built without network support; no fixture for {id}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimVerdict {
    /// Computed term `n` equals OEIS term `n + shift`, counted from the
    /// first listed term.
    ExactPrefixMatch { shift: i64 },
    /// First disagreeing index at shift 0.
    Mismatch { index: usize },
    Unresolved(String),
}

impl ClaimVerdict {
    pub fn is_match(&self) -> bool {
        matches!(self, ClaimVerdict::ExactPrefixMatch { .. })
    }
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimVerdict::ExactPrefixMatch { shift: 0 } => write!(f, "match"),
            ClaimVerdict::ExactPrefixMatch { shift } => write!(f, "match (shift {shift:+})"),
            ClaimVerdict::Mismatch { index } => write!(f, "mismatch at n = {index}"),
            ClaimVerdict::Unresolved(why) => write!(f, "unresolved: {why}"),
        }
    }
}

fn first_difference(computed: &[ExactRational], terms: &[BigInt], shift: i64, count: usize) -> Option<usize> {
    for (n, c) in computed.iter().enumerate().take(count) {
        let k = n as i64 + shift;
        if k < 0 {
            continue;
        }
        let Some(t) = terms.get(k as usize) else {
            return Some(n);
        };
        if !is_integer(c) || c.numer() != t {
            return Some(n);
        }
    }
    None
}

/// Compares the first `count` computed terms against an entry, trying each
/// alignment in [`SHIFTS`].
pub fn compare(computed: &[ExactRational], entry: &OeisEntry, count: usize) -> ClaimVerdict {
    let count = count.min(computed.len());
    for shift in SHIFTS {
        if first_difference(computed, &entry.terms, shift, count).is_none() {
            return ClaimVerdict::ExactPrefixMatch { shift };
        }
    }
    ClaimVerdict::Mismatch {
        index: first_difference(computed, &entry.terms, 0, count).unwrap_or(0),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub entry_id: String,
    pub oeis_id: String,
    pub verdict: ClaimVerdict,
    /// Verdicts for the alternative A-numbers cited for the same row.
    pub alternatives: Vec<(String, ClaimVerdict)>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_match()
    }
}

fn verdict_for(client: &OeisClient, id: &str, computed: &[ExactRational]) -> ClaimVerdict {
    match client.fetch(id) {
        Ok(e) => compare(computed, &e, CLAIM_TERMS),
        Err(e) => ClaimVerdict::Unresolved(e.to_string()),
    }
}

/// Checks a catalog row against its cited entry and any alternatives.
pub fn verify_claim(client: &OeisClient, entry: &NamedSequenceEntry) -> Result<ClaimReport> {
    let oeis_id = entry
        .oeis_id
        .ok_or_else(|| Error::Precondition(format!("{} has no OEIS id", entry.id)))?;
    let computed = entry.terms(CLAIM_TERMS)?;
    Ok(ClaimReport {
        entry_id: entry.id.to_string(),
        oeis_id: oeis_id.to_string(),
        verdict: verdict_for(client, oeis_id, &computed),
        alternatives: entry
            .alternative_ids
            .iter()
            .map(|a| (a.to_string(), verdict_for(client, a, &computed)))
            .collect(),
    })
}
