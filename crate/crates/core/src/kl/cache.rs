use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{Column, KlEngine, QPoly};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{ElemId, GroupElement};

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const CACHE_HEADER: &str = "#g2cells-klcache v1 base=(1/4,1/4) order=r<s<t";

/// Summary of a cache file on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheInfo {
    pub columns: usize,
    pub entries: usize,
    pub max_length: usize,
}

fn corrupt(line: usize, what: impl std::fmt::Display) -> Error {
    Error::CorruptCache(format!("line {line}: {what}"))
}

fn check_header(first: Option<&str>) -> Result<()> {
    match first {
        Some(h) if h == CACHE_HEADER => Ok(()),
        Some(h) if h.starts_with("#g2cells-klcache") => Err(Error::VersionMismatch(format!(
            "found `{h}`, expected `{CACHE_HEADER}`"
        ))),
        Some(h) => Err(Error::CorruptCache(format!("unrecognised header `{h}`"))),
        None => Err(Error::CorruptCache("empty file".into())),
    }
}

fn laurent_to_q(p: &LaurentPoly, line: usize) -> Result<QPoly> {
    if !p.is_in_q() {
        return Err(corrupt(line, "polynomial is not a polynomial in q"));
    }
    let mut out = QPoly::new();
    for (k, c) in p.terms() {
        let i = (k / 2) as usize;
        if out.len() <= i {
            out.resize(i + 1, 0);
        }
        out[i] = i64::try_from(c).map_err(|_| corrupt(line, "coefficient out of range"))?;
    }
    Ok(out)
}

impl KlEngine {
    /// Writes every complete column, one `y<TAB>w<TAB>P` record per pair in id
    /// order. The output depends only on which columns are present.
    pub fn store_cache(&self, path: &Path) -> Result<usize> {
        let mut out = BufWriter::new(fs::File::create(path)?);
        writeln!(out, "{CACHE_HEADER}")?;
        let mut written = 0;
        for (w, slot) in self.columns.iter().enumerate() {
            let Some(col) = slot.get() else { continue };
            let wd = self.element(w as ElemId).digits();
            for &y in col.members() {
                let p = qpoly_text(col.get(y).expect("member has a polynomial"));
                writeln!(out, "{}\t{}\t{}", self.element(y).digits(), wd, p)?;
            }
            written += 1;
        }
        out.flush()?;
        Ok(written)
    }

    /// Loads the columns in `path`. Each column is checked to be the full
    /// interval below `w` with valid polynomials; columns beyond the registry
    /// are skipped. Returns the number of columns installed.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        let reader = BufReader::new(fs::File::open(path)?);
        let mut lines = reader.lines();
        let first = lines.next().transpose()?;
        check_header(first.as_deref())?;

        let mut loaded = 0;
        let mut current: Option<(GroupElement, Vec<(ElemId, QPoly)>)> = None;
        let mut skip: Option<GroupElement> = None;
        for (i, line) in lines.enumerate() {
            let n = i + 2;
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(corrupt(n, "expected three tab-separated fields"));
            }
            let y = GroupElement::parse(fields[0]).map_err(|e| corrupt(n, e))?;
            let w = GroupElement::parse(fields[1]).map_err(|e| corrupt(n, e))?;
            if w.digits() != fields[1] || y.digits() != fields[0] {
                return Err(corrupt(n, "word is not in canonical form"));
            }
            let p: LaurentPoly = fields[2].parse().map_err(|e| corrupt(n, e))?;
            if w.length() > self.registry().max_length() {
                skip = Some(w);
                continue;
            }
            if skip.as_ref() == Some(&w) {
                continue;
            }
            let same = matches!(&current, Some((cw, _)) if *cw == w);
            if !same {
                if let Some((cw, entries)) = current.take() {
                    loaded += self.install(cw, entries, n)?;
                }
                current = Some((w.clone(), Vec::new()));
            }
            let yid = self.id(&y).map_err(|e| corrupt(n, e))?;
            let q = laurent_to_q(&p, n)?;
            current.as_mut().expect("set above").1.push((yid, q));
        }
        if let Some((cw, entries)) = current.take() {
            loaded += self.install(cw, entries, 0)?;
        }
        Ok(loaded)
    }

    fn install(&self, w: GroupElement, mut entries: Vec<(ElemId, QPoly)>, line: usize) -> Result<usize> {
        let wid = self.id(&w)?;
        entries.sort_by_key(|(y, _)| *y);
        let reg = self.registry();
        let mut expected: Vec<ElemId> = (0..reg.count_below(w.length() + 1) as ElemId)
            .filter(|&y| reg.bruhat_leq(y, wid))
            .collect();
        expected.sort_unstable();
        let got: Vec<ElemId> = entries.iter().map(|(y, _)| *y).collect();
        if got != expected {
            return Err(corrupt(line, format!("column for {w} is not the interval [e, {w}]")));
        }
        for (y, p) in &entries {
            self.check_kl(*y, wid, p)
                .map_err(|e| corrupt(line, format!("column for {w}: {e}")))?;
        }
        let col = Column::from_entries(reg, wid, entries);
        Ok(usize::from(self.columns[wid as usize].set(col).is_ok()))
    }
}

/// Header check and record count without loading anything.
pub fn cache_info(path: &Path) -> Result<CacheInfo> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut lines = reader.lines();
    let first = lines.next().transpose()?;
    check_header(first.as_deref())?;
    let mut info = CacheInfo {
        columns: 0,
        entries: 0,
        max_length: 0,
    };
    let mut last_w: Option<String> = None;
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let (Some(_), Some(w), Some(_)) = (fields.next(), fields.next(), fields.next()) else {
            return Err(corrupt(i + 2, "expected three tab-separated fields"));
        };
        info.entries += 1;
        if last_w.as_deref() != Some(w) {
            info.columns += 1;
            info.max_length = info.max_length.max(w.len());
            last_w = Some(w.to_string());
        }
    }
    Ok(info)
}

fn qpoly_text(p: &[i64]) -> String {
    LaurentPoly::from_q_coeffs(p).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::KlEngine;

    fn tmp(name: &str) -> std::path::PathBuf {
        let dir = std::env::temp_dir().join(format!("g2cells-cache-{}-{name}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        dir.join("kl.cache")
    }

    fn warm(kl: &KlEngine, upto: usize) {
        for id in 0..kl.registry().count_below(upto + 1) {
            kl.column(id as ElemId).unwrap();
        }
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let a = KlEngine::with_max_length(12);
        warm(&a, 9);
        let p1 = tmp("rt1");
        let n = a.store_cache(&p1).unwrap();
        assert_eq!(n, a.columns_ready());

        let b = KlEngine::with_max_length(12);
        assert_eq!(b.load_cache(&p1).unwrap(), n);
        let p2 = tmp("rt2");
        b.store_cache(&p2).unwrap();
        assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());

        let w = GroupElement::parse("0121212").unwrap();
        let u = GroupElement::parse("").unwrap();
        assert_eq!(a.kl_poly(&u, &w).unwrap(), b.kl_poly(&u, &w).unwrap());
        let info = cache_info(&p1).unwrap();
        assert_eq!(info.columns, n);
        assert_eq!(info.max_length, 9);
    }

    #[test]
    fn version_mismatch_is_reported() {
        let p = tmp("ver");
        fs::write(&p, "#g2cells-klcache v0 base=(1/4,1/4) order=r<s<t\n").unwrap();
        let kl = KlEngine::with_max_length(6);
        assert!(matches!(kl.load_cache(&p), Err(Error::VersionMismatch(_))));
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let kl = KlEngine::with_max_length(8);
        let p = tmp("bad");
        fs::write(&p, "hello\n").unwrap();
        assert!(matches!(kl.load_cache(&p), Err(Error::CorruptCache(_))));

        // A column missing one member of its interval.
        fs::write(&p, format!("{CACHE_HEADER}\n\t1\t1\n")).unwrap();
        assert!(matches!(kl.load_cache(&p), Err(Error::CorruptCache(_))));

        // Wrong polynomial.
        fs::write(&p, format!("{CACHE_HEADER}\n\t1\t2\n1\t1\t1\n")).unwrap();
        assert!(matches!(kl.load_cache(&p), Err(Error::CorruptCache(_))));

        fs::write(&p, format!("{CACHE_HEADER}\n\t1\n")).unwrap();
        assert!(matches!(kl.load_cache(&p), Err(Error::CorruptCache(_))));
    }
}
