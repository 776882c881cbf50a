//! The built-in catalogue of simple 3-polytopes with up to 9 facets,
//! their expected Betti tuples and facet-type strings, and the harness
//! that reconstructs every row and diffs it against expectations.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use rigidity_core::{
    bigraded_betti, build, canonical_form, connected_sum, parse, vc_family, BettiOptions,
    DualPolytope, Error,
};

/// How a table row is produced.
#[derive(Clone, Copy, Debug)]
pub enum RowConstruction {
    /// A single DSL expression.
    Expr(&'static str),
    /// All isomorphism classes of depth-fold vertex cuts of a base polytope.
    VcFamily { base: &'static str, depth: usize },
    /// Connected sum over every gluing permutation of the chosen facets,
    /// deduplicated by canonical form.
    ConnectedSumAllGluings { left: &'static str, right: &'static str },
}

#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub table: u8,
    pub label: &'static str,
    /// None marks rows with no stated construction; they are excluded from
    /// pass/fail and only serve as profile-search targets.
    pub construction: Option<RowConstruction>,
    pub expected_tuple: &'static [usize],
    pub expected_classes: usize,
    /// Facet-type strings when the catalogue lists them.
    pub expected_types: Option<&'static [&'static str]>,
    /// The catalogue's rigidity verdict; informational only.
    pub rigid: Option<bool>,
}

use RowConstruction::{ConnectedSumAllGluings, Expr, VcFamily};

pub const TABLE_ROWS: &[TableRow] = &[
    // ---- facet counts up to 8 ----
    TableRow {
        table: 1,
        label: "3^4",
        construction: Some(Expr("simplex(3)")),
        expected_tuple: &[],
        expected_classes: 1,
        expected_types: Some(&["3^4"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "vc(3^4)",
        construction: Some(VcFamily { base: "simplex(3)", depth: 1 }),
        expected_tuple: &[1],
        expected_classes: 1,
        expected_types: Some(&["3^2 4^3"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "vc^2(3^4)",
        construction: Some(VcFamily { base: "simplex(3)", depth: 2 }),
        expected_tuple: &[3, 2],
        expected_classes: 1,
        expected_types: Some(&["3^2 4^2 5^2"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "4^6",
        construction: Some(Expr("cube(3)")),
        expected_tuple: &[3, 0],
        expected_classes: 1,
        expected_types: Some(&["4^6"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "vc^3(3^4)",
        construction: Some(VcFamily { base: "simplex(3)", depth: 3 }),
        expected_tuple: &[6, 8, 3],
        expected_classes: 3,
        expected_types: Some(&["3^2 4^3 6^2", "3^3 5^3 6^1", "3^2 4^2 5^2 6^1"]),
        rigid: Some(false),
    },
    TableRow {
        table: 1,
        label: "vc(4^6)",
        construction: Some(VcFamily { base: "cube(3)", depth: 1 }),
        expected_tuple: &[6, 6, 1],
        expected_classes: 1,
        expected_types: Some(&["3^1 4^3 5^3"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "4^5 5^2",
        construction: Some(Expr("product(polygon(5),simplex(1))")),
        expected_tuple: &[6, 5, 0],
        expected_classes: 1,
        expected_types: Some(&["4^5 5^2"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "vc^4(3^4)",
        construction: Some(VcFamily { base: "simplex(3)", depth: 4 }),
        expected_tuple: &[10, 20, 15, 4],
        expected_classes: 7,
        expected_types: Some(&[
            "3^2 4^4 7^2",
            "3^3 4^1 5^2 6^1 7^1",
            "3^2 4^3 5^1 6^1 7^1",
            "3^2 4^2 5^3 7^1",
            "3^4 6^4",
            "3^3 4^1 5^1 6^3",
            "3^2 4^2 5^2 6^2",
        ]),
        rigid: Some(false),
    },
    TableRow {
        table: 1,
        label: "vc^2(4^6)",
        construction: Some(VcFamily { base: "cube(3)", depth: 2 }),
        expected_tuple: &[10, 18, 11, 2],
        expected_classes: 4,
        expected_types: Some(&["3^2 4^2 5^2 6^2", "3^1 4^4 5^1 6^2", "3^2 4^1 5^4 6^1", "3^2 5^6"]),
        rigid: Some(false),
    },
    TableRow {
        table: 1,
        label: "vc(4^5 5^2)",
        construction: Some(VcFamily { base: "product(polygon(5),simplex(1))", depth: 1 }),
        expected_tuple: &[10, 17, 9, 1],
        expected_classes: 1,
        expected_types: Some(&["3^1 4^3 5^3 6^1"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "4^6 6^2",
        construction: Some(Expr("product(polygon(6),simplex(1))")),
        expected_tuple: &[10, 16, 9, 0],
        expected_classes: 1,
        expected_types: Some(&["4^6 6^2"]),
        rigid: Some(true),
    },
    TableRow {
        table: 1,
        label: "4^4 5^4",
        construction: Some(Expr("truncate(product(polygon(5),simplex(1)),[0,5])")),
        expected_tuple: &[10, 16, 5, 0],
        expected_classes: 1,
        expected_types: Some(&["4^4 5^4"]),
        rigid: Some(true),
    },
    // ---- facet count 9 ----
    TableRow {
        table: 2,
        label: "vc^5(3^4)",
        construction: Some(VcFamily { base: "simplex(3)", depth: 5 }),
        expected_tuple: &[15, 40, 45, 24, 5],
        expected_classes: 24,
        expected_types: None,
        rigid: Some(false),
    },
    TableRow {
        table: 2,
        label: "vc^3(4^6)",
        construction: Some(VcFamily { base: "cube(3)", depth: 3 }),
        expected_tuple: &[15, 38, 39, 18, 3],
        expected_classes: 11,
        expected_types: None,
        rigid: Some(false),
    },
    TableRow {
        table: 2,
        label: "vc^2(4^5 5^2)",
        construction: Some(VcFamily { base: "product(polygon(5),simplex(1))", depth: 2 }),
        expected_tuple: &[15, 37, 36, 15, 2],
        expected_classes: 7,
        expected_types: None,
        rigid: Some(false),
    },
    TableRow {
        table: 2,
        label: "vc(4^6 6^2)",
        construction: Some(VcFamily { base: "product(polygon(6),simplex(1))", depth: 1 }),
        expected_tuple: &[15, 36, 35, 14, 1],
        expected_classes: 1,
        expected_types: Some(&["3^1 4^4 5^2 6^1 7^1"]),
        rigid: Some(true),
    },
    TableRow {
        table: 2,
        label: "vc(4^4 5^4)",
        construction: Some(VcFamily {
            base: "truncate(product(polygon(5),simplex(1)),[0,5])",
            depth: 1,
        }),
        expected_tuple: &[15, 36, 31, 10, 1],
        expected_classes: 2,
        expected_types: Some(&["3^1 4^3 5^3 6^2", "3^1 4^2 5^5 6^1"]),
        rigid: Some(false),
    },
    TableRow {
        table: 2,
        label: "4^7 7^2",
        construction: Some(Expr("product(polygon(7),simplex(1))")),
        expected_tuple: &[15, 35, 35, 14, 0],
        expected_classes: 1,
        expected_types: Some(&["4^7 7^2"]),
        rigid: Some(true),
    },
    TableRow {
        table: 2,
        label: "4^6 # 4^6",
        construction: Some(ConnectedSumAllGluings { left: "cube(3)", right: "cube(3)" }),
        expected_tuple: &[15, 36, 33, 12, 1],
        expected_classes: 1,
        expected_types: Some(&["4^6 6^3"]),
        rigid: Some(true),
    },
    TableRow {
        table: 2,
        label: "4^5 5^2 6^2",
        construction: None,
        expected_tuple: &[15, 35, 29, 8, 0],
        expected_classes: 1,
        expected_types: Some(&["4^5 5^2 6^2"]),
        rigid: Some(true),
    },
    TableRow {
        table: 2,
        label: "4^4 5^4 6^1",
        construction: None,
        expected_tuple: &[15, 35, 27, 6, 0],
        expected_classes: 1,
        expected_types: Some(&["4^4 5^4 6^1"]),
        rigid: Some(true),
    },
    TableRow {
        table: 2,
        label: "4^3 5^6",
        construction: None,
        expected_tuple: &[15, 35, 24, 3, 0],
        expected_classes: 1,
        expected_types: Some(&["4^3 5^6"]),
        rigid: Some(true),
    },
];

/// Builds every isomorphism class a row describes, in canonical order.
pub fn build_row_classes(construction: RowConstruction) -> Result<Vec<DualPolytope>, Error> {
    match construction {
        Expr(text) => Ok(vec![build(&parse(text)?)?]),
        VcFamily { base, depth } => vc_family(&build(&parse(base)?)?, depth),
        ConnectedSumAllGluings { left, right } => {
            let l = build(&parse(left)?)?;
            let r = build(&parse(right)?)?;
            let n = l.n();
            let mut classes: BTreeMap<_, DualPolytope> = BTreeMap::new();
            for perm in (0..n).permutations(n) {
                let sum = connected_sum(&l, 0, &r, 0, Some(&perm))?;
                let key = canonical_form(sum.complex())?.key();
                classes.entry(key).or_insert(sum);
            }
            Ok(classes.into_values().collect())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub tuple: Vec<usize>,
    pub facet_type: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub table: u8,
    pub label: &'static str,
    pub status: &'static str, // "ok" | "mismatch" | "search-only"
    pub expected_tuple: Vec<usize>,
    pub expected_classes: usize,
    pub classes: Vec<ClassReport>,
    pub diffs: Vec<String>,
    pub rigid: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesReport {
    pub rows: Vec<RowReport>,
    pub rows_checked: usize,
    pub rows_matched: usize,
    pub all_ok: bool,
}

/// Reconstructs every constructible row and compares tuples, class counts
/// and (where listed) facet-type multisets with the expectations.
pub fn run_tables(opts: &BettiOptions) -> Result<TablesReport, Error> {
    let mut rows = Vec::new();
    let mut checked = 0usize;
    let mut matched = 0usize;
    for row in TABLE_ROWS {
        let Some(construction) = row.construction else {
            rows.push(RowReport {
                table: row.table,
                label: row.label,
                status: "search-only",
                expected_tuple: row.expected_tuple.to_vec(),
                expected_classes: row.expected_classes,
                classes: Vec::new(),
                diffs: Vec::new(),
                rigid: row.rigid,
            });
            continue;
        };
        checked += 1;
        let classes = build_row_classes(construction)?;
        let mut reports = Vec::new();
        let mut diffs = Vec::new();
        for p in &classes {
            let tuple = bigraded_betti(p, opts)?.tuple()?;
            let facet_type = p.two_face_profile()?.type_string();
            if tuple != row.expected_tuple {
                diffs.push(format!(
                    "class {facet_type}: tuple {tuple:?}, expected {:?}",
                    row.expected_tuple
                ));
            }
            reports.push(ClassReport { tuple, facet_type });
        }
        if classes.len() != row.expected_classes {
            diffs.push(format!(
                "found {} isomorphism classes, expected {}",
                classes.len(),
                row.expected_classes
            ));
        }
        if let Some(expected_types) = row.expected_types {
            let mut got: Vec<&str> = reports.iter().map(|c| c.facet_type.as_str()).collect();
            let mut want: Vec<String> =
                expected_types.iter().map(|t| t.to_string()).collect();
            got.sort_unstable();
            want.sort_unstable();
            if got != want.iter().map(|s| s.as_str()).collect::<Vec<_>>() {
                diffs.push(format!("facet types {got:?}, expected {want:?}"));
            }
        }
        let ok = diffs.is_empty();
        matched += usize::from(ok);
        rows.push(RowReport {
            table: row.table,
            label: row.label,
            status: if ok { "ok" } else { "mismatch" },
            expected_tuple: row.expected_tuple.to_vec(),
            expected_classes: row.expected_classes,
            classes: reports,
            diffs,
            rigid: row.rigid,
        });
    }
    Ok(TablesReport { rows, rows_checked: checked, rows_matched: matched, all_ok: matched == checked })
}

pub fn render_tables_text(report: &TablesReport) -> String {
    let mut out = String::new();
    let tuple_str = |t: &[usize]| {
        let inner = t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        format!("({inner})")
    };
    for row in &report.rows {
        out.push_str(&format!(
            "[table {}] {:<14} expected {:<22} ",
            row.table,
            row.label,
            tuple_str(&row.expected_tuple)
        ));
        match row.status {
            "search-only" => out.push_str("search-only (no stated construction)\n"),
            _ => {
                out.push_str(&format!(
                    "{} class(es): {}  ->  {}\n",
                    row.classes.len(),
                    row.classes.iter().map(|c| c.facet_type.as_str()).collect::<Vec<_>>().join(", "),
                    if row.status == "ok" { "OK" } else { "MISMATCH" },
                ));
                for d in &row.diffs {
                    out.push_str(&format!("    !! {d}\n"));
                }
            }
        }
    }
    out.push_str(&format!(
        "{}/{} constructible rows matched\n",
        report.rows_matched, report.rows_checked
    ));
    out
}
