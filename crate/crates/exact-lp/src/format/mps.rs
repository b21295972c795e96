//! The MPS text dialect.
//!
//! Free-form layout: section headers start in column 1, data lines are
//! indented, fields are whitespace-separated, and `*` in the first non-blank
//! column starts a comment line. Sections must appear in the order
//!
//! ```text
//! NAME  OBJSENSE  ROWS  COLUMNS  RHS  RANGES  BOUNDS  ENDATA
//! ```
//!
//! with `ROWS`, `COLUMNS` and `ENDATA` mandatory. `ROWS` must declare
//! exactly one `N` row — the objective; `L`/`G`/`E` rows become `<=`/`>=`/`=`
//! constraints in declaration order. `COLUMNS` carries `(row, value)` pairs
//! per line; a repeated `(column, row)` pair is an error rather than an
//! implicit sum. An `RHS` entry on the objective row sets the objective
//! constant to the *negated* value, following the common solver convention.
//!
//! `RANGES` turns a row into a two-sided constraint, expanded here into the
//! original row plus a companion named `<row>_rng`:
//!
//! * `L` row with rhs `b`, range `r` → `<= b` and `>= b − |r|`;
//! * `G` row → `>= b` and `<= b + |r|`;
//! * `E` row → `>= b, <= b + r` when `r >= 0`, else `>= b + r, <= b`.
//!
//! `BOUNDS` types `LO`/`UP`/`FX` set one or both bounds, `FR`/`MI`/`PL`
//! clear them. In this dialect variables are **free by default** (unlike
//! classic MPS, which assumes `[0, ∞)`), so a document means the same thing
//! whether it arrived as LP or MPS text; bound lines are therefore the only
//! source of bounds. Integer bound types (`BV`/`LI`/`UI`) and
//! semi-continuous ones (`SC`), like `MARKER` lines in `COLUMNS`, are
//! rejected as unsupported.

use std::collections::{BTreeMap, BTreeSet};

use super::FormatError;
use crate::instance::{valid_identifier, LpInstance, Relation};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Name,
    ObjSense,
    Rows,
    Columns,
    Rhs,
    Ranges,
    Bounds,
    EndData,
}

#[derive(Clone, Copy)]
enum RowRef {
    Objective,
    Con(usize),
}

struct ConRow {
    name: String,
    relation: Relation,
    coeffs: BTreeMap<String, Rational>,
    rhs: Rational,
    rhs_seen: bool,
    range: Option<Rational>,
}

/// Fields of a line with the 1-based column where each starts.
fn split_fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 0usize;
    let mut start: Option<(usize, usize)> = None; // (byte, col)
    for (byte, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push((c, &line[b..byte]));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push((c, &line[b..]));
    }
    out
}

fn strip_quotes(field: &str) -> &str {
    field.trim_matches('\'')
}

fn parse_value(lno: usize, col: usize, field: &str) -> Result<Rational, FormatError> {
    field
        .parse::<Rational>()
        .map_err(|e| FormatError::syntax(lno, col, format!("bad numeric literal '{field}': {e}")))
}

fn check_name(lno: usize, col: usize, name: &str) -> Result<(), FormatError> {
    if valid_identifier(name) {
        Ok(())
    } else {
        Err(FormatError::syntax(
            lno,
            col,
            format!("invalid identifier '{name}'"),
        ))
    }
}

struct MpsParser {
    model_name: Option<String>,
    maximize: bool,
    sense_set: bool,
    objective_row: Option<String>,
    rows_line: usize,
    row_lookup: BTreeMap<String, RowRef>,
    rows: Vec<ConRow>,
    var_order: Vec<String>,
    var_set: BTreeSet<String>,
    pairs_seen: BTreeSet<(String, String)>,
    objective_coeffs: BTreeMap<String, Rational>,
    objective_rhs: Option<Rational>,
    rhs_set_name: Option<String>,
    ranges_set_name: Option<String>,
    bounds_set_name: Option<String>,
    bounds: BTreeMap<String, (Option<Rational>, Option<Rational>)>,
}

impl MpsParser {
    fn new() -> Self {
        MpsParser {
            model_name: None,
            maximize: false,
            sense_set: false,
            objective_row: None,
            rows_line: 0,
            row_lookup: BTreeMap::new(),
            rows: Vec::new(),
            var_order: Vec::new(),
            var_set: BTreeSet::new(),
            pairs_seen: BTreeSet::new(),
            objective_coeffs: BTreeMap::new(),
            objective_rhs: None,
            rhs_set_name: None,
            ranges_set_name: None,
            bounds_set_name: None,
            bounds: BTreeMap::new(),
        }
    }

    fn lookup_row(&self, lno: usize, name: &str) -> Result<RowRef, FormatError> {
        self.row_lookup
            .get(name)
            .copied()
            .ok_or_else(|| FormatError::UnknownRow {
                line: lno,
                name: name.to_string(),
            })
    }

    fn set_sense(&mut self, lno: usize, col: usize, word: &str) -> Result<(), FormatError> {
        if self.sense_set {
            return Err(FormatError::syntax(lno, col, "objective sense given twice"));
        }
        self.maximize = match word.to_ascii_uppercase().as_str() {
            "MIN" | "MINIMIZE" => false,
            "MAX" | "MAXIMIZE" => true,
            other => {
                return Err(FormatError::syntax(
                    lno,
                    col,
                    format!("unknown objective sense '{other}'"),
                ))
            }
        };
        self.sense_set = true;
        Ok(())
    }

    fn rows_entry(&mut self, lno: usize, fields: &[(usize, &str)]) -> Result<(), FormatError> {
        let [(tcol, typ), (ncol, name)] = fields else {
            return Err(FormatError::syntax(
                lno,
                fields.first().map_or(1, |f| f.0),
                "a ROWS entry is 'type name'",
            ));
        };
        check_name(lno, *ncol, name)?;
        if self.row_lookup.contains_key(*name) {
            return Err(FormatError::syntax(
                lno,
                *ncol,
                format!("duplicate row '{name}'"),
            ));
        }
        let relation = match typ.to_ascii_uppercase().as_str() {
            "N" => {
                if self.objective_row.is_some() {
                    return Err(FormatError::syntax(
                        lno,
                        *tcol,
                        "a second N row; exactly one objective row is supported",
                    ));
                }
                self.objective_row = Some(name.to_string());
                self.row_lookup.insert(name.to_string(), RowRef::Objective);
                return Ok(());
            }
            "L" => Relation::Le,
            "G" => Relation::Ge,
            "E" => Relation::Eq,
            other => {
                return Err(FormatError::syntax(
                    lno,
                    *tcol,
                    format!("unknown row type '{other}'"),
                ))
            }
        };
        self.row_lookup
            .insert(name.to_string(), RowRef::Con(self.rows.len()));
        self.rows.push(ConRow {
            name: name.to_string(),
            relation,
            coeffs: BTreeMap::new(),
            rhs: Rational::zero(),
            rhs_seen: false,
            range: None,
        });
        Ok(())
    }

    fn columns_entry(&mut self, lno: usize, fields: &[(usize, &str)]) -> Result<(), FormatError> {
        if fields
            .iter()
            .any(|(_, f)| strip_quotes(f).eq_ignore_ascii_case("MARKER"))
        {
            return Err(FormatError::UnsupportedSection {
                line: lno,
                section: "COLUMNS integrality markers".to_string(),
            });
        }
        if fields.len() < 3 || fields.len() % 2 == 0 {
            return Err(FormatError::syntax(
                lno,
                fields.first().map_or(1, |f| f.0),
                "a COLUMNS entry is 'column row value [row value]'",
            ));
        }
        let (ccol, column) = fields[0];
        check_name(lno, ccol, column)?;
        if self.var_set.insert(column.to_string()) {
            self.var_order.push(column.to_string());
        }
        for pair in fields[1..].chunks(2) {
            let (rcol, row) = pair[0];
            let (vcol, value) = pair[1];
            let target = self.lookup_row(lno, row)?;
            let value = parse_value(lno, vcol, value)?;
            if !self
                .pairs_seen
                .insert((column.to_string(), row.to_string()))
            {
                return Err(FormatError::syntax(
                    lno,
                    rcol,
                    format!("duplicate coefficient for column '{column}' in row '{row}'"),
                ));
            }
            match target {
                RowRef::Objective => {
                    self.objective_coeffs.insert(column.to_string(), value);
                }
                RowRef::Con(i) => {
                    self.rows[i].coeffs.insert(column.to_string(), value);
                }
            }
        }
        Ok(())
    }

    fn check_set_name(
        slot: &mut Option<String>,
        lno: usize,
        col: usize,
        name: &str,
        section: &str,
    ) -> Result<(), FormatError> {
        match slot {
            Some(existing) if existing != name => Err(FormatError::syntax(
                lno,
                col,
                format!("multiple {section} sets ('{existing}' and '{name}')"),
            )),
            Some(_) => Ok(()),
            None => {
                *slot = Some(name.to_string());
                Ok(())
            }
        }
    }

    fn rhs_entry(&mut self, lno: usize, fields: &[(usize, &str)]) -> Result<(), FormatError> {
        if fields.len() < 3 || fields.len() % 2 == 0 {
            return Err(FormatError::syntax(
                lno,
                fields.first().map_or(1, |f| f.0),
                "an RHS entry is 'set row value [row value]'",
            ));
        }
        let (scol, set) = fields[0];
        Self::check_set_name(&mut self.rhs_set_name, lno, scol, set, "RHS")?;
        for pair in fields[1..].chunks(2) {
            let (rcol, row) = pair[0];
            let (vcol, value) = pair[1];
            let target = self.lookup_row(lno, row)?;
            let value = parse_value(lno, vcol, value)?;
            match target {
                RowRef::Objective => {
                    if self.objective_rhs.is_some() {
                        return Err(FormatError::syntax(
                            lno,
                            rcol,
                            "duplicate RHS entry for the objective row",
                        ));
                    }
                    self.objective_rhs = Some(value);
                }
                RowRef::Con(i) => {
                    if self.rows[i].rhs_seen {
                        return Err(FormatError::syntax(
                            lno,
                            rcol,
                            format!("duplicate RHS entry for row '{row}'"),
                        ));
                    }
                    self.rows[i].rhs = value;
                    self.rows[i].rhs_seen = true;
                }
            }
        }
        Ok(())
    }

    fn ranges_entry(&mut self, lno: usize, fields: &[(usize, &str)]) -> Result<(), FormatError> {
        if fields.len() < 3 || fields.len() % 2 == 0 {
            return Err(FormatError::syntax(
                lno,
                fields.first().map_or(1, |f| f.0),
                "a RANGES entry is 'set row value [row value]'",
            ));
        }
        let (scol, set) = fields[0];
        Self::check_set_name(&mut self.ranges_set_name, lno, scol, set, "RANGES")?;
        for pair in fields[1..].chunks(2) {
            let (rcol, row) = pair[0];
            let (vcol, value) = pair[1];
            let target = self.lookup_row(lno, row)?;
            let value = parse_value(lno, vcol, value)?;
            let i = match target {
                RowRef::Objective => {
                    return Err(FormatError::syntax(
                        lno,
                        rcol,
                        "a range cannot apply to the objective row",
                    ))
                }
                RowRef::Con(i) => i,
            };
            if self.rows[i].range.is_some() {
                return Err(FormatError::syntax(
                    lno,
                    rcol,
                    format!("duplicate range for row '{row}'"),
                ));
            }
            let companion = format!("{row}_rng");
            if self.row_lookup.contains_key(&companion) {
                return Err(FormatError::syntax(
                    lno,
                    rcol,
                    format!("range companion name '{companion}' collides with a declared row"),
                ));
            }
            self.rows[i].range = Some(value);
        }
        Ok(())
    }

    fn bounds_entry(&mut self, lno: usize, fields: &[(usize, &str)]) -> Result<(), FormatError> {
        let (tcol, typ) = match fields.first() {
            Some(f) => *f,
            None => return Err(FormatError::syntax(lno, 1, "empty BOUNDS entry")),
        };
        let typ = typ.to_ascii_uppercase();
        match typ.as_str() {
            "BV" | "LI" | "UI" | "SC" | "SI" => {
                return Err(FormatError::UnsupportedSection {
                    line: lno,
                    section: format!("bound type {typ}"),
                })
            }
            "LO" | "UP" | "FX" | "FR" | "MI" | "PL" => {}
            other => {
                return Err(FormatError::syntax(
                    lno,
                    tcol,
                    format!("unknown bound type '{other}'"),
                ))
            }
        }
        let takes_value = matches!(typ.as_str(), "LO" | "UP" | "FX");
        let expected = if takes_value { 4 } else { 3 };
        if fields.len() != expected {
            return Err(FormatError::syntax(
                lno,
                tcol,
                format!("a {typ} bound takes {} fields", expected - 1),
            ));
        }
        let (scol, set) = fields[1];
        Self::check_set_name(&mut self.bounds_set_name, lno, scol, set, "BOUNDS")?;
        let (_, column) = fields[2];
        if !self.var_set.contains(column) {
            return Err(FormatError::UnknownColumn {
                line: lno,
                name: column.to_string(),
            });
        }
        let entry = self
            .bounds
            .entry(column.to_string())
            .or_insert((None, None));
        match typ.as_str() {
            "LO" | "UP" | "FX" => {
                let (vcol, value) = fields[3];
                let value = parse_value(lno, vcol, value)?;
                match typ.as_str() {
                    "LO" => entry.0 = Some(value),
                    "UP" => entry.1 = Some(value),
                    _ => {
                        entry.0 = Some(value.clone());
                        entry.1 = Some(value);
                    }
                }
            }
            "FR" => *entry = (None, None),
            "MI" => entry.0 = None,
            "PL" => entry.1 = None,
            _ => unreachable!(),
        }
        Ok(())
    }

    fn build(self) -> Result<LpInstance, FormatError> {
        if self.objective_row.is_none() {
            return Err(FormatError::syntax(
                self.rows_line.max(1),
                1,
                "ROWS declares no objective (N) row",
            ));
        }
        let mut ins = match &self.model_name {
            Some(n) if !n.is_empty() => LpInstance::with_name(n),
            _ => LpInstance::new(),
        };
        for v in &self.var_order {
            ins.add_variable(v).expect("validated at declaration");
        }
        for (v, c) in &self.objective_coeffs {
            ins.add_objective_term(v, c.clone())
                .expect("validated at declaration");
        }
        if let Some(r) = &self.objective_rhs {
            // Solver convention: an RHS on the objective row shifts the
            // objective by the negated value.
            ins.add_objective_constant(-r);
        }
        for row in &self.rows {
            match &row.range {
                None => {
                    ins.add_constraint(
                        Some(&row.name),
                        row.coeffs.clone(),
                        row.relation,
                        row.rhs.clone(),
                    )
                    .expect("row names validated unique");
                }
                Some(r) => {
                    // A ranged row restricts its expression to an interval;
                    // emit the two sides as the original row plus `_rng`.
                    let b = &row.rhs;
                    let (base_rel, base_rhs, comp_rel, comp_rhs) = match row.relation {
                        Relation::Le => (Relation::Le, b.clone(), Relation::Ge, b - &r.abs()),
                        Relation::Ge => (Relation::Ge, b.clone(), Relation::Le, b + &r.abs()),
                        Relation::Eq => {
                            if r.is_negative() {
                                (Relation::Ge, b + r, Relation::Le, b.clone())
                            } else {
                                (Relation::Ge, b.clone(), Relation::Le, b + r)
                            }
                        }
                    };
                    ins.add_constraint(Some(&row.name), row.coeffs.clone(), base_rel, base_rhs)
                        .expect("row names validated unique");
                    ins.add_constraint(
                        Some(&format!("{}_rng", row.name)),
                        row.coeffs.clone(),
                        comp_rel,
                        comp_rhs,
                    )
                    .expect("companion collisions checked");
                }
            }
        }
        if self.maximize {
            ins.negate_objective();
        }
        for (v, (lo, up)) in &self.bounds {
            ins.set_lower(v, lo.clone()).expect("column checked");
            ins.set_upper(v, up.clone()).expect("column checked");
        }
        Ok(ins)
    }
}

/// Parses a document in the MPS dialect.
pub fn parse_mps(text: &str) -> Result<LpInstance, FormatError> {
    let mut p = MpsParser::new();
    let mut current: Option<Section> = None;
    let mut endata = false;
    let mut pending_objsense = false;
    let mut seen_columns = false;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        last_line = lno;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('*') {
            continue;
        }
        if endata {
            return Err(FormatError::syntax(lno, 1, "content after ENDATA"));
        }
        let indented = line.starts_with(|c: char| c.is_whitespace());
        let fields = split_fields(line);
        if !indented {
            // Section header.
            let (_, word) = fields[0];
            let upper = word.to_ascii_uppercase();
            let section = match upper.as_str() {
                "NAME" => Section::Name,
                "OBJSENSE" => Section::ObjSense,
                "ROWS" => Section::Rows,
                "COLUMNS" => Section::Columns,
                "RHS" => Section::Rhs,
                "RANGES" => Section::Ranges,
                "BOUNDS" => Section::Bounds,
                "ENDATA" => Section::EndData,
                "SOS" | "QUADOBJ" | "QMATRIX" | "QCMATRIX" => {
                    return Err(FormatError::UnsupportedSection {
                        line: lno,
                        section: upper,
                    })
                }
                other => {
                    return Err(FormatError::syntax(
                        lno,
                        1,
                        format!("unknown section '{other}'"),
                    ))
                }
            };
            if pending_objsense {
                return Err(FormatError::syntax(
                    lno,
                    1,
                    "OBJSENSE section is missing its value",
                ));
            }
            if let Some(prev) = current {
                if section <= prev {
                    return Err(FormatError::syntax(
                        lno,
                        1,
                        format!("section '{upper}' out of order"),
                    ));
                }
            }
            current = Some(section);
            match section {
                Section::Name => {
                    if fields.len() > 2 {
                        return Err(FormatError::syntax(lno, fields[2].0, "extra fields in NAME"));
                    }
                    p.model_name = Some(fields.get(1).map_or(String::new(), |f| f.1.to_string()));
                }
                Section::ObjSense => match fields.len() {
                    1 => pending_objsense = true,
                    2 => p.set_sense(lno, fields[1].0, fields[1].1)?,
                    _ => {
                        return Err(FormatError::syntax(
                            lno,
                            fields[2].0,
                            "extra fields in OBJSENSE",
                        ))
                    }
                },
                Section::Rows => p.rows_line = lno,
                Section::Columns => seen_columns = true,
                Section::EndData => endata = true,
                _ => {}
            }
            if !matches!(section, Section::Name | Section::ObjSense)
                && fields.len() > 1
            {
                return Err(FormatError::syntax(
                    lno,
                    fields[1].0,
                    "unexpected content after section header",
                ));
            }
            continue;
        }
        // Data line.
        let Some(section) = current else {
            return Err(FormatError::syntax(lno, fields[0].0, "data before any section"));
        };
        match section {
            Section::ObjSense => {
                if !pending_objsense || fields.len() != 1 {
                    return Err(FormatError::syntax(
                        lno,
                        fields[0].0,
                        "OBJSENSE takes a single MIN or MAX value",
                    ));
                }
                p.set_sense(lno, fields[0].0, fields[0].1)?;
                pending_objsense = false;
            }
            Section::Rows => p.rows_entry(lno, &fields)?,
            Section::Columns => p.columns_entry(lno, &fields)?,
            Section::Rhs => p.rhs_entry(lno, &fields)?,
            Section::Ranges => p.ranges_entry(lno, &fields)?,
            Section::Bounds => p.bounds_entry(lno, &fields)?,
            Section::Name | Section::EndData => {
                return Err(FormatError::syntax(
                    lno,
                    fields[0].0,
                    "unexpected data line in this section",
                ));
            }
        }
    }

    if !endata {
        return Err(FormatError::syntax(last_line.max(1), 1, "missing ENDATA"));
    }
    if p.rows_line == 0 {
        return Err(FormatError::syntax(last_line.max(1), 1, "missing ROWS section"));
    }
    if !seen_columns {
        return Err(FormatError::syntax(
            last_line.max(1),
            1,
            "missing COLUMNS section",
        ));
    }
    p.build()
}
