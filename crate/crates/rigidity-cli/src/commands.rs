//! Command implementations shared by the binary and the test suites. Every
//! command returns serializable data; the binary picks JSON or text.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use rigidity_core::{
    are_isomorphic, bigraded_betti, build, canonical_form, classify, invariant_report, parse,
    truncate, BettiOptions, ComplexJson, DualPolytope, Error, SimplicialComplex,
};

/// Resolves a command-line input: an existing file is read as complex JSON,
/// anything else is parsed as a construction expression.
pub fn load_input(input: &str) -> Result<(DualPolytope, Option<String>), Error> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::invalid(format!("cannot read {input}: {e}")))?;
        let json: ComplexJson = serde_json::from_str(&text).map_err(|e| Error::Parse {
            position: 0,
            message: format!("invalid complex JSON: {e}"),
        })?;
        let complex = SimplicialComplex::from_json(&json)?;
        Ok((DualPolytope::from_complex(complex)?, json.name))
    } else {
        let expr = parse(input)?;
        Ok((build(&expr)?, Some(input.trim().to_string())))
    }
}

pub fn cmd_build(input: &str) -> Result<ComplexJson, Error> {
    let (p, name) = load_input(input)?;
    Ok(p.complex().to_json(name))
}

pub fn cmd_invariants(
    input: &str,
    opts: &BettiOptions,
) -> Result<rigidity_core::betti::InvariantReportJson, Error> {
    let (p, _) = load_input(input)?;
    Ok(invariant_report(&p, opts)?.to_json())
}

pub fn cmd_betti(input: &str, opts: &BettiOptions) -> Result<rigidity_core::betti::BettiJson, Error> {
    let (p, _) = load_input(input)?;
    Ok(bigraded_betti(&p, opts)?.to_json())
}

pub fn cmd_classify(input: &str) -> Result<classify::ClassificationJson, Error> {
    let (p, _) = load_input(input)?;
    Ok(classify::classification_json(&p))
}

#[derive(Clone, Debug, Serialize)]
pub struct SideSummary {
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub a: SideSummary,
    pub b: SideSummary,
    pub betti_equal: bool,
    pub tuple_equal: Option<bool>,
    pub isomorphic: bool,
    pub bijection: Option<Vec<usize>>,
    /// The interesting case: identical Betti data on combinatorially
    /// different polytopes.
    pub equal_betti_non_isomorphic: bool,
}

pub fn cmd_compare(input_a: &str, input_b: &str, opts: &BettiOptions) -> Result<CompareReport, Error> {
    let (pa, _) = load_input(input_a)?;
    let (pb, _) = load_input(input_b)?;
    let ta = bigraded_betti(&pa, opts)?;
    let tb = bigraded_betti(&pb, opts)?;
    let betti_equal = ta == tb;
    let tuple_equal = match (ta.tuple(), tb.tuple()) {
        (Ok(a), Ok(b)) => Some(a == b),
        _ => None,
    };
    let bijection = are_isomorphic(pa.complex(), pb.complex());
    let isomorphic = bijection.is_some();
    Ok(CompareReport {
        a: SideSummary { m: pa.m(), n: pa.n() },
        b: SideSummary { m: pb.m(), n: pb.n() },
        betti_equal,
        tuple_equal,
        isomorphic,
        bijection,
        equal_betti_non_isomorphic: betti_equal && !isomorphic,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub expr: String,
    pub facet_type: String,
    pub tuple: Option<Vec<usize>>,
}

/// Applies up to `depth` truncations (over all dual faces with 2..=n
/// vertices) to the base polytopes, deduplicates by canonical form, and
/// returns the constructions whose 2-face profile matches the target.
pub fn cmd_search(
    target: &BTreeMap<usize, usize>,
    bases: &[String],
    depth: usize,
    opts: &BettiOptions,
) -> Result<Vec<SearchHit>, Error> {
    if depth > 2 {
        return Err(Error::invalid("search depth is limited to 2 truncations"));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut level: Vec<(String, DualPolytope)> = Vec::new();
    for base in bases {
        let p = build(&parse(base)?)?;
        if seen.insert(canonical_form(p.complex())?.key()) {
            level.push((base.clone(), p));
        }
    }
    let mut pool = level.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for (expr, p) in &level {
            for face in p.truncatable_faces() {
                let cut = truncate(p, &face)?;
                if seen.insert(canonical_form(cut.complex())?.key()) {
                    let verts: Vec<String> = face.iter().map(|v| v.to_string()).collect();
                    let cut_expr = format!("truncate({expr},[{}])", verts.join(","));
                    next.push((cut_expr, cut));
                }
            }
        }
        pool.extend(next.iter().cloned());
        level = next;
    }
    let mut hits = Vec::new();
    for (expr, p) in pool {
        if p.n() < 3 {
            continue;
        }
        let profile = p.two_face_profile()?;
        if &profile.0 == target {
            let tuple = bigraded_betti(&p, opts)?.tuple().ok();
            hits.push(SearchHit { expr, facet_type: profile.type_string(), tuple });
        }
    }
    Ok(hits)
}

/// Parses a target profile of the form "4:4,5:4".
pub fn parse_profile(text: &str) -> Result<BTreeMap<usize, usize>, Error> {
    let mut out = BTreeMap::new();
    let mut offset = 0;
    for part in text.split(',') {
        let bad = || Error::Parse {
            position: offset,
            message: format!("profile entry '{part}' is not of the form k:count"),
        };
        let mut halves = part.splitn(2, ':');
        let k: usize = halves.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let count: usize =
            halves.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        out.insert(k, count);
        offset += part.len() + 1;
    }
    Ok(out)
}

// ---- text renderers ----

fn fmt_tuple(t: &[usize]) -> String {
    format!("({})", t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

pub fn render_betti_text(b: &rigidity_core::betti::BettiJson) -> String {
    let mut out = format!("m = {}  n = {}\nsigma = {}\n", b.m, b.n, b.sigma);
    match &b.tuple {
        Some(t) => out.push_str(&format!(
            "tuple (beta^(-1,4),...,beta^(-(m-4),2(m-3))): {}\n",
            fmt_tuple(t)
        )),
        None => out.push_str("tuple: only defined for 3-polytopes\n"),
    }
    out.push_str("entries  i  2j  rank\n");
    for [i, twoj, rank] in &b.entries {
        out.push_str(&format!("    {i:>6} {twoj:>3}  {rank}\n"));
    }
    out.push_str(&format!(
        "moment-angle betti: [{}]\n",
        b.moment_angle.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    ));
    out
}

pub fn render_invariants_text(r: &rigidity_core::betti::InvariantReportJson) -> String {
    let mut out = format!("m = {}  n = {}\n", r.m, r.n);
    out.push_str(&format!(
        "f = {:?}\nh = {:?}\n",
        r.f, r.h
    ));
    if let Some(profile) = &r.profile {
        let parts: Vec<String> = profile.iter().map(|(k, c)| format!("{k}^{c}")).collect();
        out.push_str(&format!("2-face profile: {}\n", parts.join(" ")));
    }
    if let Some(tf) = r.triangle_free {
        out.push_str(&format!("triangle-free: {tf}\n"));
    }
    out.push_str(&format!("flag: {}\nsigma = {}\n", r.flag, r.sigma));
    if let Some(t) = &r.tuple {
        out.push_str(&format!("betti tuple: {}\n", fmt_tuple(t)));
    }
    out.push_str(&format!("frequencies: {:?}\n", r.frequencies));
    out.push_str(&format!(
        "product of simplices: {}\n",
        match &r.product_of_simplices {
            Some(d) => format!("yes, factor dimensions {d:?}"),
            None => "no".to_string(),
        }
    ));
    out.push_str(&format!("vertex cut of a product of simplices: {}\n", r.vertex_cut_of_product));
    out
}

pub fn render_classify_text(c: &classify::ClassificationJson) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "product of simplices: {}\n",
        match &c.product_of_simplices {
            Some(d) => format!("yes, factor dimensions {d:?}"),
            None => "no".to_string(),
        }
    ));
    out.push_str(&format!("vertex cut of a product of simplices: {}\n", c.vertex_cut_of_product));
    if let Some(w) = &c.witness {
        out.push_str(&format!(
            "  witness: undo cut at dual vertex {} recovers factor dimensions {:?}\n",
            w.cut_vertex, w.factor_dims
        ));
    }
    out.push_str(&format!("sigma = {}\nfrequencies: {:?}\n", c.sigma, c.frequencies));
    out
}

pub fn render_compare_text(r: &CompareReport) -> String {
    let mut out = format!(
        "A: m = {}, n = {}\nB: m = {}, n = {}\n",
        r.a.m, r.a.n, r.b.m, r.b.n
    );
    out.push_str(&format!("betti tables equal: {}\n", r.betti_equal));
    if let Some(te) = r.tuple_equal {
        out.push_str(&format!("betti tuples equal: {te}\n"));
    }
    out.push_str(&format!("isomorphic: {}\n", r.isomorphic));
    if r.equal_betti_non_isomorphic {
        out.push_str(
            ">>> equal Betti data on non-isomorphic polytopes: the invariants do not separate these <<<\n",
        );
    }
    out
}

pub fn render_search_text(hits: &[SearchHit]) -> String {
    if hits.is_empty() {
        return "no matches\n".to_string();
    }
    let mut out = String::new();
    for h in hits {
        out.push_str(&format!(
            "{}  [{}]  tuple {}\n",
            h.expr,
            h.facet_type,
            h.tuple.as_deref().map_or("-".to_string(), fmt_tuple)
        ));
    }
    out
}

/// Exit codes: 1 parse error, 2 validation error, 3 cap exceeded.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::UnknownName(_) => 1,
        Error::CapExceeded(_) => 3,
        _ => 2,
    }
}
