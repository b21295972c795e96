//! The LP text dialect.
//!
//! Grammar (case-insensitive keywords, `\` starts a line comment):
//!
//! ```text
//! doc        := sense objective "Subject To" constraint* [ "Bounds" bound* ] "End"
//! sense      := "Minimize" | "Min" | "Maximize" | "Max"
//! objective  := [ label ] expr
//! constraint := [ label ] expr relop signed-number
//! label      := name ":"
//! expr       := ( [sign] [number] name | [sign] number )*
//! relop      := "<=" | "=<" | "<" | ">=" | "=>" | ">" | "="
//! bound      := name "free"
//!             | name relop value
//!             | name "=" value
//!             | value relop name [ relop value ]
//! value      := signed-number | [sign] ("inf" | "infinity")
//! ```
//!
//! Numbers are integers (`3`), decimals (`0.5`, parsed exactly as 1/2), or
//! fractions of integers (`1/3`); exponents are not part of the dialect, so
//! `1e2` reads as the coefficient 1 applied to a variable named `e2`.
//! A number directly followed by a name (`2x` or `2 x`) is a coefficient;
//! repeated mentions of one variable accumulate. Constants on the left-hand
//! side fold into the right-hand side. Maximization is normalized away by
//! negating the objective, and variables are free unless the `Bounds`
//! section says otherwise.
//!
//! Integrality and related sections (`General`, `Integer`, `Binary`,
//! `Semi-Continuous`, `SOS`) are rejected loudly: downstream users solve
//! rational relaxations, and silently dropping integrality would change the
//! meaning of the file.

use std::collections::BTreeMap;

use super::FormatError;
use crate::instance::{InstanceError, LpInstance, Relation};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Number(Rational),
    Plus,
    Minus,
    Colon,
    Rel(Relation),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

const SECTION_WORDS: &[&str] = &["subject", "st", "bounds", "end"];
const UNSUPPORTED_WORDS: &[&str] = &[
    "general", "generals", "integer", "integers", "binary", "binaries", "bin", "semi",
    "semis", "semicontinuous", "sos", "sos1", "sos2",
];

fn is_reserved(word: &str) -> bool {
    let w = word.to_ascii_lowercase();
    matches!(
        w.as_str(),
        "minimize" | "min" | "maximize" | "max" | "to" | "free" | "inf" | "infinity"
    ) || SECTION_WORDS.contains(&w.as_str())
        || UNSUPPORTED_WORDS.contains(&w.as_str())
}

fn keyword(tok: &Tok) -> Option<String> {
    match tok {
        Tok::Name(n) if is_reserved(n) => Some(n.to_ascii_lowercase()),
        _ => None,
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, FormatError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '\\' {
            while let Some(&d) = chars.peek() {
                if d == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    name.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Name(name),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let digit_starts = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            chars.peek().is_some_and(|d| d.is_ascii_digit() || *d == '.')
        };
        if c.is_ascii_digit() || (c == '.' && {
            let mut ahead = chars.clone();
            ahead.next();
            ahead.peek().is_some_and(|d| d.is_ascii_digit())
        }) {
            let mut lit = String::new();
            while chars.peek().is_some_and(|d| d.is_ascii_digit() || *d == '.') {
                lit.push(bump(&mut chars));
            }
            if chars.peek() == Some(&'/') {
                let mut ahead = chars.clone();
                ahead.next();
                if ahead.peek().is_some_and(|d| d.is_ascii_digit() || *d == '.') {
                    lit.push(bump(&mut chars));
                    while digit_starts(&mut chars) {
                        lit.push(bump(&mut chars));
                    }
                }
            }
            let value = parse_literal(&lit)
                .map_err(|m| FormatError::syntax(tline, tcol, m))?;
            out.push(Spanned {
                tok: Tok::Number(value),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = simple {
            bump(&mut chars);
            out.push(Spanned {
                tok,
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c == '<' || c == '>' || c == '=' {
            bump(&mut chars);
            let rel = match (c, chars.peek()) {
                ('<', Some(&'=')) | ('=', Some(&'<')) => {
                    bump(&mut chars);
                    Relation::Le
                }
                ('>', Some(&'=')) | ('=', Some(&'>')) => {
                    bump(&mut chars);
                    Relation::Ge
                }
                ('<', _) => Relation::Le,
                ('>', _) => Relation::Ge,
                ('=', _) => Relation::Eq,
                _ => unreachable!(),
            };
            out.push(Spanned {
                tok: Tok::Rel(rel),
                line: tline,
                col: tcol,
            });
            continue;
        }
        return Err(FormatError::syntax(
            tline,
            tcol,
            format!("unexpected character '{c}'"),
        ));
    }
    Ok(out)
}

/// Parses a numeric literal, treating each side of a fraction bar as an
/// integer or decimal (`.5` and `5.` are normalized first).
fn parse_literal(lit: &str) -> Result<Rational, String> {
    let normalize = |part: &str| -> String {
        let mut s = part.to_string();
        if s.starts_with('.') {
            s.insert(0, '0');
        }
        if s.ends_with('.') {
            s.push('0');
        }
        s
    };
    let joined = match lit.split_once('/') {
        Some((num, den)) => format!("{}/{}", normalize(num), normalize(den)),
        None => normalize(lit),
    };
    joined
        .parse::<Rational>()
        .map_err(|e| format!("bad numeric literal '{lit}': {e}"))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => (self.end_line, self.end_col),
        }
    }

    fn error(&self, message: impl Into<String>) -> FormatError {
        let (line, col) = self.here();
        FormatError::syntax(line, col, message)
    }

    fn at_keyword(&self) -> Option<String> {
        self.peek().and_then(|t| keyword(&t.tok))
    }

    /// Consumes a keyword from `words`, if present.
    fn eat_keyword(&mut self, words: &[&str]) -> Option<String> {
        let kw = self.at_keyword()?;
        if words.contains(&kw.as_str()) {
            self.pos += 1;
            Some(kw)
        } else {
            None
        }
    }
}

fn ensure_var(ins: &mut LpInstance, name: &str, line: usize, col: usize) -> Result<(), FormatError> {
    if ins.variable_index(name).is_none() {
        ins.add_variable(name)
            .map_err(|e| map_instance_error(e, line, col))?;
    }
    Ok(())
}

fn map_instance_error(e: InstanceError, line: usize, col: usize) -> FormatError {
    FormatError::syntax(line, col, e.to_string())
}

/// Sign run (`+`/`-`), returning the net sign; `None` if no sign tokens.
fn take_signs(p: &mut Parser) -> Option<bool> {
    let mut seen = false;
    let mut negative = false;
    while let Some(t) = p.peek() {
        match t.tok {
            Tok::Plus => {
                seen = true;
                p.pos += 1;
            }
            Tok::Minus => {
                seen = true;
                negative = !negative;
                p.pos += 1;
            }
            _ => break,
        }
    }
    seen.then_some(negative)
}

/// One linear expression: accumulated coefficients plus a folded constant.
fn parse_expr(
    p: &mut Parser,
    ins: &mut LpInstance,
) -> Result<(BTreeMap<String, Rational>, Rational), FormatError> {
    let mut coeffs: BTreeMap<String, Rational> = BTreeMap::new();
    let mut constant = Rational::zero();
    loop {
        let signed = take_signs(p);
        let negative = signed.unwrap_or(false);
        match p.peek().map(|t| t.tok.clone()) {
            Some(Tok::Number(n)) => {
                p.pos += 1;
                let value = if negative { -&n } else { n };
                // A directly following identifier makes this a coefficient.
                if let Some(Spanned { tok: Tok::Name(name), line, col }) = p.peek().cloned() {
                    if !is_reserved(&name) {
                        p.pos += 1;
                        ensure_var(ins, &name, line, col)?;
                        *coeffs.entry(name).or_default() += &value;
                        continue;
                    }
                }
                constant += &value;
            }
            Some(Tok::Name(name)) if !is_reserved(&name) => {
                let (line, col) = p.here();
                p.pos += 1;
                ensure_var(ins, &name, line, col)?;
                let unit = if negative {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                *coeffs.entry(name).or_default() += &unit;
            }
            _ => {
                if signed.is_some() {
                    return Err(p.error("expected a term after sign"));
                }
                break;
            }
        }
    }
    Ok((coeffs, constant))
}

/// `[sign] number` — the only right-hand-side form.
fn parse_signed_number(p: &mut Parser) -> Result<Rational, FormatError> {
    let negative = take_signs(p).unwrap_or(false);
    match p.next().map(|t| t.tok) {
        Some(Tok::Number(n)) => Ok(if negative { -n } else { n }),
        _ => Err(p.error("expected a number")),
    }
}

enum Value {
    Finite(Rational),
    PosInf,
    NegInf,
}

/// Bound value: signed number or signed infinity.
fn parse_bound_value(p: &mut Parser) -> Result<Value, FormatError> {
    let negative = take_signs(p).unwrap_or(false);
    match p.peek().map(|t| t.tok.clone()) {
        Some(Tok::Number(n)) => {
            p.pos += 1;
            Ok(Value::Finite(if negative { -n } else { n }))
        }
        Some(Tok::Name(w))
            if matches!(w.to_ascii_lowercase().as_str(), "inf" | "infinity") =>
        {
            p.pos += 1;
            Ok(if negative { Value::NegInf } else { Value::PosInf })
        }
        _ => Err(p.error("expected a number or infinity")),
    }
}

/// `name ":"` lookahead.
fn take_label(p: &mut Parser) -> Result<Option<String>, FormatError> {
    let Some(Spanned { tok: Tok::Name(name), .. }) = p.peek() else {
        return Ok(None);
    };
    if is_reserved(name) {
        return Ok(None);
    }
    if matches!(p.toks.get(p.pos + 1).map(|t| &t.tok), Some(Tok::Colon)) {
        let name = name.clone();
        p.pos += 2;
        return Ok(Some(name));
    }
    Ok(None)
}

fn set_lower_value(
    ins: &mut LpInstance,
    var: &str,
    v: Value,
    p: &Parser,
) -> Result<(), FormatError> {
    match v {
        Value::Finite(x) => ins.set_lower(var, Some(x)).map_err(|e| {
            let (l, c) = p.here();
            map_instance_error(e, l, c)
        }),
        Value::NegInf => ins.set_lower(var, None).map_err(|e| {
            let (l, c) = p.here();
            map_instance_error(e, l, c)
        }),
        Value::PosInf => Err(p.error("a lower bound cannot be +inf")),
    }
}

fn set_upper_value(
    ins: &mut LpInstance,
    var: &str,
    v: Value,
    p: &Parser,
) -> Result<(), FormatError> {
    match v {
        Value::Finite(x) => ins.set_upper(var, Some(x)).map_err(|e| {
            let (l, c) = p.here();
            map_instance_error(e, l, c)
        }),
        Value::PosInf => ins.set_upper(var, None).map_err(|e| {
            let (l, c) = p.here();
            map_instance_error(e, l, c)
        }),
        Value::NegInf => Err(p.error("an upper bound cannot be -inf")),
    }
}

/// Parses one bounds entry; the caller loops until the `End` keyword.
fn parse_bound_entry(p: &mut Parser, ins: &mut LpInstance) -> Result<(), FormatError> {
    // Form starting with the variable name.
    if let Some(Spanned { tok: Tok::Name(name), line, col }) = p.peek().cloned() {
        if !is_reserved(&name) {
            p.pos += 1;
            ensure_var(ins, &name, line, col)?;
            if p.eat_keyword(&["free"]).is_some() {
                ins.set_lower(&name, None)
                    .and_then(|_| ins.set_upper(&name, None))
                    .map_err(|e| map_instance_error(e, line, col))?;
                return Ok(());
            }
            let rel = match p.next().map(|t| t.tok) {
                Some(Tok::Rel(r)) => r,
                _ => return Err(p.error("expected a relation or 'free' after variable")),
            };
            let v = parse_bound_value(p)?;
            return match rel {
                Relation::Le => set_upper_value(ins, &name, v, p),
                Relation::Ge => set_lower_value(ins, &name, v, p),
                Relation::Eq => match v {
                    Value::Finite(x) => {
                        ins.set_lower(&name, Some(x.clone()))
                            .and_then(|_| ins.set_upper(&name, Some(x)))
                            .map_err(|e| map_instance_error(e, line, col))
                    }
                    _ => Err(p.error("a fixed bound requires a finite value")),
                },
            };
        }
    }
    // Form starting with a value: `l <= x [<= u]` or `u >= x [>= l]`.
    let first = parse_bound_value(p)?;
    let rel1 = match p.next().map(|t| t.tok) {
        Some(Tok::Rel(r @ (Relation::Le | Relation::Ge))) => r,
        _ => return Err(p.error("expected <= or >= after bound value")),
    };
    let (name, line, col) = match p.next() {
        Some(Spanned { tok: Tok::Name(name), line, col }) if !is_reserved(&name) => {
            (name, line, col)
        }
        _ => return Err(p.error("expected a variable name")),
    };
    ensure_var(ins, &name, line, col)?;
    match rel1 {
        Relation::Le => set_lower_value(ins, &name, first, p)?,
        Relation::Ge => set_upper_value(ins, &name, first, p)?,
        Relation::Eq => unreachable!(),
    }
    // Optional second half, same direction.
    if let Some(Spanned { tok: Tok::Rel(rel2), .. }) = p.peek() {
        let rel2 = *rel2;
        if rel2 != rel1 {
            return Err(p.error("mixed directions in a double bound"));
        }
        p.pos += 1;
        let second = parse_bound_value(p)?;
        match rel1 {
            Relation::Le => set_upper_value(ins, &name, second, p)?,
            Relation::Ge => set_lower_value(ins, &name, second, p)?,
            Relation::Eq => unreachable!(),
        }
    }
    Ok(())
}

/// Parses a document in the LP dialect.
pub fn parse_lp(text: &str) -> Result<LpInstance, FormatError> {
    let toks = lex(text)?;
    let lines = text.lines().count().max(1);
    let mut p = Parser {
        end_line: lines,
        end_col: text.lines().last().map_or(1, |l| l.chars().count() + 1),
        toks,
        pos: 0,
    };
    let mut ins = LpInstance::new();

    let maximize = match p.eat_keyword(&["minimize", "min", "maximize", "max"]) {
        Some(kw) => kw.starts_with("max"),
        None => return Err(p.error("expected Minimize or Maximize")),
    };

    // Objective, optionally labelled. The label is cosmetic.
    let _ = take_label(&mut p)?;
    let (obj, constant) = parse_expr(&mut p, &mut ins)?;
    for (var, c) in obj {
        let (l, co) = p.here();
        ins.add_objective_term(&var, c)
            .map_err(|e| map_instance_error(e, l, co))?;
    }
    ins.add_objective_constant(constant);

    match p.eat_keyword(&["subject", "st"]).as_deref() {
        Some("subject") => {
            if p.eat_keyword(&["to"]).is_none() {
                return Err(p.error("expected 'To' after 'Subject'"));
            }
        }
        Some(_) => {}
        None => {
            if let Some(kw) = p.at_keyword() {
                if UNSUPPORTED_WORDS.contains(&kw.as_str()) {
                    let (line, _) = p.here();
                    return Err(FormatError::UnsupportedSection { line, section: kw });
                }
            }
            return Err(p.error("expected 'Subject To'"));
        }
    }

    loop {
        match p.at_keyword().as_deref() {
            Some("bounds") | Some("end") => break,
            Some(kw) if UNSUPPORTED_WORDS.contains(&kw) => {
                let (line, _) = p.here();
                return Err(FormatError::UnsupportedSection {
                    line,
                    section: kw.to_string(),
                });
            }
            _ => {}
        }
        if p.peek().is_none() {
            return Err(p.error("expected a constraint or 'End'"));
        }
        let (lline, lcol) = p.here();
        let label = take_label(&mut p)?;
        let (coeffs, lhs_constant) = parse_expr(&mut p, &mut ins)?;
        let relation = match p.next().map(|t| t.tok) {
            Some(Tok::Rel(r)) => r,
            _ => return Err(p.error("expected a relation in constraint")),
        };
        let rhs = parse_signed_number(&mut p)? - lhs_constant;
        ins.add_constraint(label.as_deref(), coeffs, relation, rhs)
            .map_err(|e| map_instance_error(e, lline, lcol))?;
    }

    if p.eat_keyword(&["bounds"]).is_some() {
        loop {
            match p.at_keyword().as_deref() {
                Some("end") => break,
                Some(kw) if UNSUPPORTED_WORDS.contains(&kw) => {
                    let (line, _) = p.here();
                    return Err(FormatError::UnsupportedSection {
                        line,
                        section: kw.to_string(),
                    });
                }
                _ => {}
            }
            if p.peek().is_none() {
                return Err(p.error("expected a bound or 'End'"));
            }
            parse_bound_entry(&mut p, &mut ins)?;
        }
    }

    if p.eat_keyword(&["end"]).is_none() {
        return Err(p.error("expected 'End'"));
    }
    if p.peek().is_some() {
        return Err(p.error("unexpected content after 'End'"));
    }

    if maximize {
        ins.negate_objective();
    }
    Ok(ins)
}

fn push_coeff_term(out: &mut String, first: bool, coeff: &Rational, name: Option<&str>) {
    let negative = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if negative {
            out.push_str("- ");
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    match name {
        Some(n) => {
            if mag != Rational::one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(n);
        }
        None => out.push_str(&mag.to_string()),
    }
}

fn render_linear(
    ins: &LpInstance,
    coeffs: &BTreeMap<String, Rational>,
    constant: &Rational,
) -> String {
    let mut s = String::new();
    let mut first = true;
    for name in ins.variables() {
        if let Some(c) = coeffs.get(name) {
            if !c.is_zero() {
                push_coeff_term(&mut s, first, c, Some(name.as_str()));
                first = false;
            }
        }
    }
    if !constant.is_zero() {
        push_coeff_term(&mut s, first, constant, None);
        first = false;
    }
    if first {
        s.push('0');
    }
    s
}

/// Renders `ins` in the LP dialect: canonical `Minimize`, every constraint
/// on its own labelled line, and an explicit bounds line for **every**
/// variable (`free` included), so nothing about the instance is implicit.
/// Rationals print as integers or exact `p/q` fractions.
pub fn write_lp(ins: &LpInstance) -> String {
    let mut out = String::new();
    if let Some(name) = ins.name() {
        out.push_str(&format!("\\ Problem: {name}\n"));
    }
    out.push_str("Minimize\n");
    out.push_str(&format!(
        " obj: {}\n",
        render_linear(ins, ins.objective_coeffs(), ins.objective_constant())
    ));
    out.push_str("Subject To\n");
    for con in ins.constraints() {
        out.push_str(&format!(
            " {}: {} {} {}\n",
            con.name,
            render_linear(ins, &con.coeffs, &Rational::zero()),
            con.relation.symbol(),
            con.rhs
        ));
    }
    out.push_str("Bounds\n");
    for name in ins.variables() {
        let b = ins.bounds(name).expect("declared variable");
        let line = match (&b.lower, &b.upper) {
            (None, None) => format!(" {name} free\n"),
            (Some(l), None) => format!(" {name} >= {l}\n"),
            (None, Some(u)) => format!(" {name} <= {u}\n"),
            (Some(l), Some(u)) if l == u => format!(" {name} = {l}\n"),
            (Some(l), Some(u)) => format!(" {l} <= {name} <= {u}\n"),
        };
        out.push_str(&line);
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn minimal_document() {
        let ins = parse_lp("Minimize obj: x\nSubject To\n c1: x >= 3\nEnd").unwrap();
        assert_eq!(ins.variables(), ["x".to_string()]);
        assert_eq!(ins.objective_coeff("x"), rat(1));
        let c = &ins.constraints()[0];
        assert_eq!(c.name, "c1");
        assert_eq!(c.relation, Relation::Ge);
        assert_eq!(c.rhs, rat(3));
        assert!(ins.bounds("x").unwrap().lower.is_none());
        assert!(ins.bounds("x").unwrap().upper.is_none());
    }

    #[test]
    fn decimals_parse_exactly() {
        let ins = parse_lp("Minimize obj: 0.5 x + y\nSubject To\nEnd").unwrap();
        assert_eq!(ins.objective_coeff("x"), Rational::new(1, 2));
        assert_eq!(ins.objective_coeff("y"), rat(1));
    }

    #[test]
    fn fractions_and_juxtaposition() {
        let ins = parse_lp("Minimize 1/3x + 2y - z\nSubject To\nEnd").unwrap();
        assert_eq!(ins.objective_coeff("x"), Rational::new(1, 3));
        assert_eq!(ins.objective_coeff("y"), rat(2));
        assert_eq!(ins.objective_coeff("z"), rat(-1));
    }

    #[test]
    fn integrality_sections_are_rejected() {
        let err = parse_lp("Minimize x\nSubject To\nGeneral\n x\nEnd").unwrap_err();
        assert!(matches!(err, FormatError::UnsupportedSection { section, .. } if section == "general"));
    }

    #[test]
    fn repeated_terms_accumulate() {
        let ins = parse_lp("Minimize x + x + 2 x\nSubject To\nEnd").unwrap();
        assert_eq!(ins.objective_coeff("x"), rat(4));
    }

    #[test]
    fn lhs_constants_fold_into_rhs() {
        let ins = parse_lp("Minimize x\nSubject To\n c: x + 5 >= 3\nEnd").unwrap();
        assert_eq!(ins.constraints()[0].rhs, rat(-2));
    }

    #[test]
    fn maximization_negates_the_objective() {
        let ins = parse_lp("Maximize obj: 2 x + 7\nSubject To\nEnd").unwrap();
        assert_eq!(ins.objective_coeff("x"), rat(-2));
        assert_eq!(*ins.objective_constant(), rat(-7));
    }

    #[test]
    fn bounds_forms() {
        let text = "Minimize a + b + c + d + e\nSubject To\nBounds\n\
                    -1 <= a <= 4\n b >= 2\n c <= 1/2\n d = 3\n e free\nEnd";
        let ins = parse_lp(text).unwrap();
        let get = |v: &str| ins.bounds(v).unwrap().clone();
        assert_eq!(get("a").lower, Some(rat(-1)));
        assert_eq!(get("a").upper, Some(rat(4)));
        assert_eq!(get("b").lower, Some(rat(2)));
        assert_eq!(get("b").upper, None);
        assert_eq!(get("c").upper, Some(Rational::new(1, 2)));
        assert_eq!(get("d").lower, Some(rat(3)));
        assert_eq!(get("d").upper, Some(rat(3)));
        assert_eq!(get("e").lower, None);
        assert_eq!(get("e").upper, None);
    }

    #[test]
    fn infinities_leave_bounds_open() {
        let text = "Minimize x + y\nSubject To\nBounds\n -inf <= x <= 2\n y >= -infinity\nEnd";
        let ins = parse_lp(text).unwrap();
        assert_eq!(ins.bounds("x").unwrap().lower, None);
        assert_eq!(ins.bounds("x").unwrap().upper, Some(rat(2)));
        assert_eq!(ins.bounds("y").unwrap().lower, None);
    }

    #[test]
    fn bounds_mention_declares_the_variable() {
        let ins = parse_lp("Minimize x\nSubject To\nBounds\n y >= 0\nEnd").unwrap();
        assert_eq!(ins.variables(), ["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn reversed_double_bound() {
        let ins = parse_lp("Minimize x\nSubject To\nBounds\n 4 >= x >= 1\nEnd").unwrap();
        assert_eq!(ins.bounds("x").unwrap().lower, Some(rat(1)));
        assert_eq!(ins.bounds("x").unwrap().upper, Some(rat(4)));
    }

    #[test]
    fn comments_are_skipped() {
        let text = "\\ a model\nMinimize \\ inline\n x\nSubject To\n c: x >= 3 \\ tail\nEnd";
        let ins = parse_lp(text).unwrap();
        assert_eq!(ins.constraints()[0].rhs, rat(3));
    }

    #[test]
    fn duplicate_constraint_names_error() {
        let err = parse_lp("Minimize x\nSubject To\n c: x >= 1\n c: x >= 2\nEnd").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 4, .. }), "{err:?}");
    }

    #[test]
    fn missing_end_is_an_error() {
        let err = parse_lp("Minimize x\nSubject To\n c: x >= 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { .. }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_lp("Minimize x\nSubject To\n c: x ; 3\nEnd").unwrap_err();
        match err {
            FormatError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 7);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_minimal() {
        let ins = parse_lp("Minimize obj: x\nSubject To\n c1: x >= 3\nEnd").unwrap();
        let again = parse_lp(&write_lp(&ins)).unwrap();
        assert!(ins.semantically_equal(&again));
    }

    #[test]
    fn round_trip_fraction_coefficient() {
        let mut ins = LpInstance::new();
        ins.add_variable("x").unwrap();
        ins.add_objective_term("x", Rational::new(1, 3)).unwrap();
        let text = write_lp(&ins);
        assert!(text.contains("1/3 x"), "{text}");
        let again = parse_lp(&text).unwrap();
        assert!(ins.semantically_equal(&again));
    }

    #[test]
    fn round_trip_empty_constraint_body() {
        let mut ins = LpInstance::new();
        ins.add_variable("x").unwrap();
        ins.set_lower("x", Some(rat(0))).unwrap();
        let text = write_lp(&ins);
        assert!(text.contains("Subject To\nBounds"), "{text}");
        let again = parse_lp(&text).unwrap();
        assert!(ins.semantically_equal(&again));
    }

    #[test]
    fn round_trip_negative_and_constant_objective() {
        let mut ins = LpInstance::new();
        ins.add_variable("x").unwrap();
        ins.add_variable("y").unwrap();
        ins.add_objective_term("x", rat(-1)).unwrap();
        ins.add_objective_constant(Rational::new(-7, 2));
        ins.add_constraint(
            None,
            [("x".to_string(), rat(2)), ("y".to_string(), rat(-3))]
                .into_iter()
                .collect(),
            Relation::Eq,
            Rational::new(5, 4),
        )
        .unwrap();
        ins.set_upper("y", Some(rat(-2))).unwrap();
        let again = parse_lp(&write_lp(&ins)).unwrap();
        assert!(ins.semantically_equal(&again));
    }

    #[test]
    fn exponent_free_numbers_keep_names_like_e1_usable() {
        let ins = parse_lp("Minimize 1e2\nSubject To\n c: e1 + e2 >= 0\nEnd").unwrap();
        // "1e2" is the coefficient 1 on the variable e2.
        assert_eq!(ins.objective_coeff("e2"), rat(1));
        assert_eq!(ins.variables().len(), 2);
    }
}
