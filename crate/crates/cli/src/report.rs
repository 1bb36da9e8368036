//! Serializable reports and their text/TSV renderings.

use std::fmt::Write;

use khqt::analysis::{Analysis, JonesComparison};
use khqt::poly::{khovanov_indices, BigradedTable, KhIndex};
use khqt::verify::Check;
use khqt::{EdgeSet, Poly};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct InfoReport {
    pub name: Option<String>,
    pub crossings: usize,
    pub writhe: Option<i64>,
    pub c_plus: Option<usize>,
    pub components: Option<usize>,
    pub tait: Option<TaitSummary>,
    pub ribbon: RibbonSummary,
    pub quasitrees: usize,
}

#[derive(Debug, Serialize)]
pub struct TaitSummary {
    pub vertices: usize,
    pub e_plus: usize,
    pub e_minus: usize,
}

#[derive(Debug, Serialize)]
pub struct RibbonSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
    pub sigma0: String,
    pub sigma2: String,
}

impl InfoReport {
    pub fn new(name: Option<String>, a: &Analysis) -> Self {
        let rg = &a.ribbon;
        InfoReport {
            name: name.or_else(|| a.name.clone()),
            crossings: rg.edge_count(),
            writhe: a.meta.map(|m| m.writhe),
            c_plus: a.meta.map(|m| m.c_plus),
            components: a.components,
            tait: a.tait.as_ref().map(|g| TaitSummary {
                vertices: g.vertex_count,
                e_plus: g.e_plus(),
                e_minus: g.e_minus(),
            }),
            ribbon: RibbonSummary {
                vertices: rg.vertex_count(),
                edges: rg.edge_count(),
                faces: rg.face_count(),
                genus: a.ribbon_genus,
                sigma0: rg.sigma0().to_compact_string(),
                sigma2: rg.sigma2().to_compact_string(),
            },
            quasitrees: a.quasitrees.len(),
        }
    }

    pub fn text(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let mut s = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(s, "name: {n}");
        }
        let _ = writeln!(s, "crossings: {}", self.crossings);
        let _ = writeln!(s, "writhe: {}", opt(self.writhe.map(|w| w.to_string())));
        let _ = writeln!(s, "c_plus: {}", opt(self.c_plus.map(|w| w.to_string())));
        if let Some(t) = &self.tait {
            let _ = writeln!(s, "tait: V = {}, E+ = {}, E- = {}", t.vertices, t.e_plus, t.e_minus);
        }
        let r = &self.ribbon;
        let _ = writeln!(s, "ribbon: V = {}, E = {}, F = {}, g = {}", r.vertices, r.edges, r.faces, r.genus);
        let _ = writeln!(s, "sigma0: {}", r.sigma0);
        let _ = writeln!(s, "sigma2: {}", r.sigma2);
        let _ = writeln!(s, "quasi-trees: {}", self.quasitrees);
        s
    }

    pub const TSV_HEADER: &'static str =
        "name\tcrossings\twrithe\tc_plus\ttait_vertices\te_plus\te_minus\tribbon_vertices\tedges\tfaces\tgenus\tquasitrees";

    pub fn tsv_row(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_default();
        let r = &self.ribbon;
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            opt(self.name.clone()),
            self.crossings,
            opt(self.writhe.map(|w| w.to_string())),
            opt(self.c_plus.map(|w| w.to_string())),
            opt(self.tait.as_ref().map(|t| t.vertices.to_string())),
            opt(self.tait.as_ref().map(|t| t.e_plus.to_string())),
            opt(self.tait.as_ref().map(|t| t.e_minus.to_string())),
            r.vertices,
            r.edges,
            r.faces,
            r.genus,
            self.quasitrees
        )
    }
}

#[derive(Debug, Serialize)]
pub struct QuasiTreeRow {
    pub id: usize,
    pub edges: EdgeSet,
    pub genus: usize,
    pub cyclic_order: Vec<usize>,
    pub word: String,
    pub word_ascii: String,
    pub u: i64,
    pub v: i64,
    pub index: Option<KhIndex>,
    pub tree: Option<TreeRow>,
}

#[derive(Debug, Serialize)]
pub struct TreeRow {
    pub edges: EdgeSet,
    pub word: String,
    pub word_ascii: String,
    pub u: i64,
    pub v: i64,
}

pub fn quasitree_rows(a: &Analysis) -> Vec<QuasiTreeRow> {
    a.quasitrees
        .iter()
        .enumerate()
        .map(|(k, r)| QuasiTreeRow {
            id: k + 1,
            edges: r.quasitree.edges,
            genus: r.quasitree.genus,
            cyclic_order: r.chords.cyclic_order_one_based(),
            word: r.word.unicode(),
            word_ascii: r.word.ascii(),
            u: r.grading.u,
            v: r.grading.v,
            index: a.meta.map(|m| khovanov_indices(r.grading, &m)),
            tree: r.tree.as_ref().map(|t| TreeRow {
                edges: t.tree.edges,
                word: t.word.unicode(),
                word_ascii: t.word.ascii(),
                u: t.grading.u,
                v: t.grading.v,
            }),
        })
        .collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn quasitrees_text(rows: &[QuasiTreeRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let _ = write!(s, "Q{} {} g={} {} (u,v)=({},{}) order=({})", r.id, r.edges, r.genus, r.word, r.u, r.v, join(&r.cyclic_order));
        if let Some(k) = r.index {
            let _ = write!(s, " (i,j)=({},{})", k.i, k.j);
        }
        if let Some(t) = &r.tree {
            let _ = write!(s, "  T={} {}", t.edges, t.word);
        }
        s.push('\n');
    }
    s
}

pub const QUASITREE_TSV_HEADER: &str = "id\tedges\tgenus\tcyclic_order\tword\tu\tv\ti\tj\ttree\ttree_word\ttree_u\ttree_v";

pub fn quasitrees_tsv(rows: &[QuasiTreeRow]) -> String {
    let mut s = format!("{QUASITREE_TSV_HEADER}\n");
    for r in rows {
        let (i, j) = r.index.map(|k| (k.i.to_string(), k.j.to_string())).unwrap_or_default();
        let (te, tw, tu, tv) = r
            .tree
            .as_ref()
            .map(|t| (t.edges.to_string(), t.word_ascii.clone(), t.u.to_string(), t.v.to_string()))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{i}\t{j}\t{te}\t{tw}\t{tu}\t{tv}",
            r.id,
            r.edges,
            r.genus,
            join(&r.cyclic_order),
            r.word_ascii,
            r.u,
            r.v
        );
    }
    s
}

/// One row per spanning tree with its paired quasi-tree id.
pub fn trees_tsv(rows: &[QuasiTreeRow]) -> String {
    let mut s = String::from("tree\tword\tu\tv\tquasitree\n");
    let mut trees: Vec<(&TreeRow, usize)> = rows.iter().filter_map(|r| r.tree.as_ref().map(|t| (t, r.id))).collect();
    trees.sort_by_key(|(t, _)| t.edges);
    for (t, id) in trees {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{id}", t.edges, t.word_ascii, t.u, t.v);
    }
    s
}

#[derive(Debug, Serialize)]
pub struct GradingsReport<'a> {
    pub table: &'a BigradedTable,
    pub thickness: usize,
    pub ribbon_genus: usize,
    pub quasitrees: Vec<QuasiTreeRow>,
}

pub fn gradings_text(r: &GradingsReport<'_>) -> String {
    let m = r.table.meta;
    let mut s = format!(
        "w = {}, c+ = {}, V(RG) = {}, generators = {}, thickness = {} (g(RG) + 1 = {})\n",
        m.writhe,
        m.c_plus,
        m.ribbon_vertices,
        r.table.total(),
        r.thickness,
        r.ribbon_genus + 1
    );
    s.push_str("u\tv\ti\tj\tcount\n");
    for (b, k, c) in r.table.rows() {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{c}", b.u, b.v, k.i, k.j);
    }
    s.push('\n');
    s.push_str(&quasitrees_text(&r.quasitrees));
    s
}

pub fn gradings_tsv(r: &GradingsReport<'_>) -> String {
    let mut s = String::from("u\tv\ti\tj\tcount\n");
    for (b, k, c) in r.table.rows() {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{c}", b.u, b.v, k.i, k.j);
    }
    s
}

pub fn jones_text(j: &JonesComparison) -> String {
    let verdict = match j.equal {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "n/a (no diagram)",
    };
    format!(
        "euler characteristic: {}\ncalibrated (q^j -> {}^(j{:+}) t^({}(j{:+})/2)): {}\nbracket: {}\nverdict: {verdict}\n",
        j.euler.to_text("q"),
        j.calibration.epsilon,
        j.calibration.shift,
        if j.calibration.sigma < 0 { "-" } else { "" },
        j.calibration.shift,
        j.calibrated.to_text("t"),
        j.bracket.as_ref().map(|b: &Poly| b.to_text("t")).unwrap_or_else(|| "-".into()),
    )
}

pub fn checks_text(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    s
}

pub fn checks_tsv(checks: &[Check]) -> String {
    let mut s = String::from("check\tpassed\tdetail\n");
    for c in checks {
        let _ = writeln!(s, "{}\t{}\t{}", c.name, c.passed, c.detail.replace('\t', " "));
    }
    s
}
