//! Parsing and serialization for CLI inputs and outputs.
//!
//! Arguments that denote structured values accept inline JSON or a file
//! path; named constructors use the `name:arg:arg` grammar. Integers
//! that fit in an `i64` serialize as JSON numbers, larger ones as
//! decimal strings, and the parsers accept both.

use std::fs;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use quandle_core::finite::{genus2_seventeen, transpositions_quandle, FiniteQuandle};
use quandle_core::free::{FreeQuandleElement, Letter};
use quandle_core::group::Perm;
use quandle_core::homology::{
    AlternatingQuandle, CoefficientRing, HomologyElement, ReducedHomologyElement,
};
use quandle_core::monodromy::{Base, RingMatrix};
use quandle_core::torus::{Mat2, Slope};
use quandle_core::{Error, Result};

/// Read an argument as JSON: inline if it looks like JSON, otherwise a
/// file path.
pub fn value_from_arg(s: &str) -> Result<Value> {
    let t = s.trim();
    if t.starts_with('{') || t.starts_with('[') || t == "I" {
        serde_json::from_str(if t == "I" { "\"I\"" } else { t })
            .map_err(|e| Error::input(format!("invalid JSON argument: {e}")))
    } else {
        let text =
            fs::read_to_string(t).map_err(|e| Error::input(format!("cannot read {t}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| Error::input(format!("{t}: invalid JSON: {e}")))
    }
}

// ---------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------

pub fn bigint_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            BigInt::from_str(&s).map_err(|_| Error::input(format!("{s} is not an integer")))
        }
        Value::String(s) => {
            BigInt::from_str(s).map_err(|_| Error::input(format!("\"{s}\" is not an integer")))
        }
        other => Err(Error::input(format!("expected an integer, got {other}"))),
    }
}

pub fn bigint_to_value(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(n) => json!(n),
        Err(_) => json!(b.to_string()),
    }
}

fn usize_from_value(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::input(format!("{what}: expected a nonnegative integer, got {v}")))
}

// ---------------------------------------------------------------------
// Finite quandles
// ---------------------------------------------------------------------

/// Parse a quandle argument: a named constructor (`trivial:n`,
/// `dihedral:n`, `alexander:m:t`, `conj-transpositions:n`,
/// `genus2-17`), inline JSON, or a file path.
pub fn parse_quandle(s: &str) -> Result<FiniteQuandle> {
    if let Some(q) = parse_quandle_constructor(s)? {
        return Ok(q);
    }
    let v = value_from_arg(s)?;
    quandle_from_value(&v)
}

fn parse_arg<T: FromStr>(part: &str, ctor: &str) -> Result<T> {
    part.parse()
        .map_err(|_| Error::input(format!("bad argument \"{part}\" for constructor {ctor}")))
}

fn parse_quandle_constructor(s: &str) -> Result<Option<FiniteQuandle>> {
    let parts: Vec<&str> = s.split(':').collect();
    let q = match (parts[0], parts.len()) {
        ("genus2-17", 1) => genus2_seventeen().0,
        ("trivial", 2) => FiniteQuandle::trivial(parse_arg(parts[1], s)?)?,
        ("dihedral", 2) => FiniteQuandle::dihedral(parse_arg(parts[1], s)?)?,
        ("alexander", 3) => {
            FiniteQuandle::alexander(parse_arg(parts[1], s)?, parse_arg(parts[2], s)?)?
        }
        ("conj-transpositions", 2) => transpositions_quandle(parse_arg(parts[1], s)?)?,
        ("genus2-17" | "trivial" | "dihedral" | "alexander" | "conj-transpositions", _) => {
            return Err(Error::input(format!(
                "wrong number of arguments for constructor {s}"
            )));
        }
        _ => return Ok(None),
    };
    Ok(Some(q))
}

/// Extract the raw operation table (and labels) without validating the
/// axioms; used by `axioms` so doctored tables can be reported rather
/// than rejected at parse time.
pub fn table_from_value(v: &Value) -> Result<(Vec<Vec<usize>>, Option<Vec<String>>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("quandle: expected a JSON object"))?;
    let size = usize_from_value(
        obj.get("size")
            .ok_or_else(|| Error::input("quandle: missing \"size\""))?,
        "size",
    )?;
    let rt_v = obj
        .get("rt")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("quandle: missing \"rt\" array"))?;
    let mut rt = Vec::with_capacity(rt_v.len());
    for (i, row) in rt_v.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::input(format!("rt[{i}] is not an array")))?;
        let mut r = Vec::with_capacity(row.len());
        for e in row {
            r.push(usize_from_value(e, "rt entry")?);
        }
        rt.push(r);
    }
    if rt.len() != size {
        return Err(Error::input(format!(
            "size {size} does not match {} table rows",
            rt.len()
        )));
    }
    let labels = match obj.get("labels") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => {
            let mut l = Vec::with_capacity(a.len());
            for e in a {
                l.push(
                    e.as_str()
                        .ok_or_else(|| Error::input("labels must be strings"))?
                        .to_string(),
                );
            }
            Some(l)
        }
        Some(other) => return Err(Error::input(format!("bad labels value: {other}"))),
    };
    Ok((rt, labels))
}

pub fn quandle_from_value(v: &Value) -> Result<FiniteQuandle> {
    let (rt, labels) = table_from_value(v)?;
    FiniteQuandle::from_rt_labeled(rt, labels)
}

pub fn quandle_to_value(q: &FiniteQuandle) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("size".into(), json!(q.size()));
    obj.insert("rt".into(), json!(q.rt()));
    if let Some(labels) = q.labels() {
        obj.insert("labels".into(), json!(labels));
    }
    Value::Object(obj)
}

// ---------------------------------------------------------------------
// Slopes
// ---------------------------------------------------------------------

pub fn slope_from_value(v: &Value) -> Result<Slope> {
    match v {
        Value::String(s) if s == "I" => Ok(Slope::Contractible),
        Value::Array(a) if a.len() == 2 => {
            let x = bigint_from_value(&a[0])?;
            let y = bigint_from_value(&a[1])?;
            match &quandle_core::torus::normalize_slope(&x, &y)? {
                s @ Slope::Primitive(nx, ny) if *nx == x && *ny == y => Ok(s.clone()),
                _ => Err(Error::input(format!(
                    "[{x}, {y}] is not a normalized primitive pair"
                ))),
            }
        }
        other => Err(Error::input(format!(
            "expected a slope \"I\" or [x, y], got {other}"
        ))),
    }
}

pub fn parse_slope(s: &str) -> Result<Slope> {
    slope_from_value(&value_from_arg(s)?)
}

pub fn slope_to_value(s: &Slope) -> Value {
    match s {
        Slope::Contractible => json!("I"),
        Slope::Primitive(x, y) => json!([bigint_to_value(x), bigint_to_value(y)]),
    }
}

pub fn slope_display(s: &Slope) -> String {
    match s {
        Slope::Contractible => "I".to_string(),
        Slope::Primitive(x, y) => format!("[{x},{y}]"),
    }
}

// ---------------------------------------------------------------------
// Homology elements
// ---------------------------------------------------------------------

pub fn ring_from_str(s: &str) -> Result<CoefficientRing> {
    if s == "Z" {
        return Ok(CoefficientRing::Integers);
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let m: u64 = m
            .parse()
            .map_err(|_| Error::input(format!("bad modulus in ring \"{s}\"")))?;
        return CoefficientRing::Mod(m).validate();
    }
    Err(Error::input(format!(
        "unknown ring \"{s}\" (expected \"Z\" or \"Z/m\")"
    )))
}

pub fn ring_to_string(r: CoefficientRing) -> String {
    match r.modulus() {
        None => "Z".to_string(),
        Some(m) => format!("Z/{m}"),
    }
}

pub fn homology_from_value(v: &Value) -> Result<HomologyElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("homology element: expected a JSON object"))?;
    let ring = ring_from_str(
        obj.get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::input("homology element: missing \"ring\""))?,
    )?;
    let genus = usize_from_value(
        obj.get("genus")
            .ok_or_else(|| Error::input("homology element: missing \"genus\""))?,
        "genus",
    )?;
    let coords_v = obj
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("homology element: missing \"coords\" array"))?;
    let coords = coords_v
        .iter()
        .map(bigint_from_value)
        .collect::<Result<Vec<BigInt>>>()?;
    HomologyElement::new(ring, genus, coords)
}

pub fn parse_homology(s: &str) -> Result<HomologyElement> {
    homology_from_value(&value_from_arg(s)?)
}

pub fn homology_to_value(x: &HomologyElement) -> Value {
    json!({
        "ring": ring_to_string(x.ring),
        "genus": x.genus,
        "coords": x.coords().iter().map(bigint_to_value).collect::<Vec<_>>(),
    })
}

pub fn reduced_to_value(x: &ReducedHomologyElement) -> Value {
    homology_to_value(x.lift())
}

// ---------------------------------------------------------------------
// Free quandle elements
// ---------------------------------------------------------------------

/// Parse the textual form `s2 ^ [g0+, g1-]`; the conjugator part is
/// optional (`s2` alone is the bare generator).
pub fn parse_free_element(s: &str, rank: usize) -> Result<FreeQuandleElement> {
    let t = s.trim();
    let (gen_part, word_part) = match t.split_once('^') {
        Some((g, w)) => (g.trim(), Some(w.trim())),
        None => (t, None),
    };
    let gen: usize = gen_part
        .strip_prefix('s')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| Error::input(format!("bad generator \"{gen_part}\" (expected sN)")))?;
    let mut word = Vec::new();
    if let Some(w) = word_part {
        let inner = w
            .strip_prefix('[')
            .and_then(|w| w.strip_suffix(']'))
            .ok_or_else(|| Error::input(format!("bad conjugator \"{w}\" (expected [..])")))?;
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (body, inverse) = match part.strip_suffix('+') {
                Some(b) => (b, false),
                None => (
                    part.strip_suffix('-')
                        .ok_or_else(|| Error::input(format!("letter \"{part}\" must end in + or -")))?,
                    true,
                ),
            };
            let g: usize = body
                .strip_prefix('g')
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| Error::input(format!("bad letter \"{part}\" (expected gN+/-)")))?;
            word.push(if inverse { Letter::neg(g) } else { Letter::pos(g) });
        }
    }
    FreeQuandleElement::new(rank, gen, &word)
}

pub fn free_element_display(a: &FreeQuandleElement) -> String {
    if a.word().is_empty() {
        return format!("s{}", a.gen());
    }
    let letters: Vec<String> = a
        .word()
        .iter()
        .map(|l| format!("g{}{}", l.gen, if l.inverse { "-" } else { "+" }))
        .collect();
    format!("s{} ^ [{}]", a.gen(), letters.join(", "))
}

// ---------------------------------------------------------------------
// Monodromy files
// ---------------------------------------------------------------------

/// The target quandle of a monodromy datum, with the cycles already
/// parsed into the matching element type.
pub enum MonodromyInput {
    Torus(Base, Vec<Slope>),
    Homology(AlternatingQuandle, Base, Vec<HomologyElement>),
    Finite(FiniteQuandle, Base, Vec<usize>),
}

impl MonodromyInput {
    pub fn len(&self) -> usize {
        match self {
            MonodromyInput::Torus(_, c) => c.len(),
            MonodromyInput::Homology(_, _, c) => c.len(),
            MonodromyInput::Finite(_, _, c) => c.len(),
        }
    }
}

/// Parse a monodromy file; returns the parsed datum plus the original
/// target JSON so edits can round-trip the file unchanged.
pub fn parse_monodromy(s: &str) -> Result<(MonodromyInput, Value)> {
    let v = value_from_arg(s)?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("monodromy: expected a JSON object"))?;
    let base = match obj.get("base").and_then(Value::as_str) {
        Some("disk") => Base::Disk,
        Some("sphere") => Base::Sphere,
        other => {
            return Err(Error::input(format!(
                "monodromy: bad base {other:?} (expected \"disk\" or \"sphere\")"
            )));
        }
    };
    let target = obj
        .get("target")
        .ok_or_else(|| Error::input("monodromy: missing \"target\""))?;
    let tobj = target
        .as_object()
        .ok_or_else(|| Error::input("monodromy: target must be an object"))?;
    let cycles = obj
        .get("cycles")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("monodromy: missing \"cycles\" array"))?;
    let input = match tobj.get("kind").and_then(Value::as_str) {
        Some("torus") => {
            let c = cycles
                .iter()
                .map(slope_from_value)
                .collect::<Result<Vec<_>>>()?;
            MonodromyInput::Torus(base, c)
        }
        Some("homology") => {
            let ring = ring_from_str(
                tobj.get("ring")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::input("homology target: missing \"ring\""))?,
            )?;
            let genus = usize_from_value(
                tobj.get("genus")
                    .ok_or_else(|| Error::input("homology target: missing \"genus\""))?,
                "genus",
            )?;
            let q = AlternatingQuandle { ring, genus };
            let c = cycles
                .iter()
                .map(|cv| {
                    // bare coordinate arrays inherit ring/genus from the target
                    match cv {
                        Value::Array(a) => HomologyElement::new(
                            ring,
                            genus,
                            a.iter().map(bigint_from_value).collect::<Result<Vec<_>>>()?,
                        ),
                        _ => {
                            let e = homology_from_value(cv)?;
                            if e.ring != ring || e.genus != genus {
                                return Err(Error::input(
                                    "cycle ring/genus does not match the target",
                                ));
                            }
                            Ok(e)
                        }
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            MonodromyInput::Homology(q, base, c)
        }
        Some("finite") => {
            let qv = tobj
                .get("quandle")
                .ok_or_else(|| Error::input("finite target: missing \"quandle\""))?;
            let q = match qv {
                Value::String(name) => parse_quandle(name)?,
                other => quandle_from_value(other)?,
            };
            let c = cycles
                .iter()
                .map(|cv| {
                    let i = usize_from_value(cv, "cycle")?;
                    if i >= q.size() {
                        return Err(Error::input(format!(
                            "cycle {i} out of range for quandle of size {}",
                            q.size()
                        )));
                    }
                    Ok(i)
                })
                .collect::<Result<Vec<_>>>()?;
            MonodromyInput::Finite(q, base, c)
        }
        other => {
            return Err(Error::input(format!(
                "monodromy: bad target kind {other:?} (expected torus, homology, or finite)"
            )));
        }
    };
    Ok((input, target.clone()))
}

pub fn base_to_str(b: Base) -> &'static str {
    match b {
        Base::Disk => "disk",
        Base::Sphere => "sphere",
    }
}

pub fn monodromy_to_value(base: Base, target: &Value, cycles: Vec<Value>) -> Value {
    json!({
        "base": base_to_str(base),
        "target": target,
        "cycles": cycles,
    })
}

// ---------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------

pub fn mat2_to_value(m: &Mat2) -> Value {
    let [a, b, c, d] = m.entries();
    json!([
        [bigint_to_value(&a), bigint_to_value(&b)],
        [bigint_to_value(&c), bigint_to_value(&d)]
    ])
}

pub fn ring_matrix_to_value(m: &RingMatrix) -> Value {
    json!(m
        .rows
        .iter()
        .map(|row| row.iter().map(bigint_to_value).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn perm_to_value(p: &Perm) -> Value {
    json!(p.cycle_string())
}
