//! Line-oriented text format for workspaces of named groups, homs,
//! crossed modules and group-groupoids. Everything is validated at load
//! time; errors carry file and line.
//!
//! ```text
//! # comment
//! begin group Z3
//! order 3
//! table
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! end
//!
//! begin hom f : Z3 -> Z3
//! map 0->0 1->2 2->1
//! end
//!
//! begin xmod X
//! top A
//! base B
//! alpha f
//! action
//! 0 1
//! 0 1
//! end
//!
//! begin gpgd G
//! arrows G1
//! objects G0
//! d0 s
//! d1 t
//! eps e
//! end
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gpgd::{validate_gpgd, Gpgd};
use crate::group::{Elt, FiniteGroup};
use crate::hom::GroupHom;
use crate::xmod::{validate_xmod, CrossedModule};

#[derive(Default)]
pub struct Workspace {
    pub groups: BTreeMap<String, Arc<FiniteGroup>>,
    pub homs: BTreeMap<String, GroupHom>,
    pub xmods: BTreeMap<String, Arc<CrossedModule>>,
    pub gpgds: BTreeMap<String, Gpgd>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    fn check_fresh(&self, file: &str, line: usize, name: &str) -> Result<()> {
        if self.groups.contains_key(name)
            || self.homs.contains_key(name)
            || self.xmods.contains_key(name)
            || self.gpgds.contains_key(name)
        {
            return Err(Error::Parse {
                file: file.to_string(),
                line,
                msg: format!("duplicate name `{name}`"),
            });
        }
        Ok(())
    }
}

struct Lines<'a> {
    file: &'a str,
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next significant line (1-based number, trimmed content).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.iter.by_ref() {
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t));
        }
        None
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { file: self.file.to_string(), line, msg: msg.into() }
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| self.err(0, format!("unexpected end of file, expected {what}")))
    }
}

fn parse_row(lines: &Lines, line: usize, text: &str, width: usize) -> Result<Vec<Elt>> {
    let row: Vec<Elt> = text
        .split_whitespace()
        .map(|t| t.parse::<Elt>().map_err(|_| lines.err(line, format!("bad index `{t}`"))))
        .collect::<Result<_>>()?;
    if row.len() != width {
        return Err(lines.err(line, format!("expected {width} entries, got {}", row.len())));
    }
    Ok(row)
}

/// Parses one file worth of definitions into the workspace. Earlier files
/// may be referenced by later ones.
pub fn parse_into(ws: &mut Workspace, file: &str, content: &str) -> Result<()> {
    let mut lines = Lines { file, iter: content.lines().enumerate() };
    while let Some((ln, text)) = lines.next() {
        let mut words = text.split_whitespace();
        if words.next() != Some("begin") {
            return Err(lines.err(ln, format!("expected `begin`, found `{text}`")));
        }
        let kind = words.next().ok_or_else(|| lines.err(ln, "missing block kind"))?;
        match kind {
            "group" => parse_group(ws, &mut lines, ln, &mut words)?,
            "hom" => parse_hom(ws, &mut lines, ln, &mut words)?,
            "xmod" => parse_xmod(ws, &mut lines, ln, &mut words)?,
            "gpgd" => parse_gpgd(ws, &mut lines, ln, &mut words)?,
            other => return Err(lines.err(ln, format!("unknown block kind `{other}`"))),
        }
    }
    Ok(())
}

fn take_name<'a>(
    lines: &Lines,
    ln: usize,
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<String> {
    words
        .next()
        .map(str::to_string)
        .ok_or_else(|| lines.err(ln, "missing name"))
}

fn parse_group<'a>(
    ws: &mut Workspace,
    lines: &mut Lines,
    ln: usize,
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<()> {
    let name = take_name(lines, ln, words)?;
    ws.check_fresh(lines.file, ln, &name)?;
    let (oln, otext) = lines.expect("`order <n>`")?;
    let n: usize = otext
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| lines.err(oln, "expected `order <n>`"))?;
    let (tln, ttext) = lines.expect("`table`")?;
    if ttext != "table" {
        return Err(lines.err(tln, "expected `table`"));
    }
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (rln, rtext) = lines.expect("table row")?;
        table.push(parse_row(lines, rln, rtext, n)?);
    }
    let (eln, etext) = lines.expect("`end`")?;
    if etext != "end" {
        return Err(lines.err(eln, "expected `end`"));
    }
    let g = FiniteGroup::from_table(&name, table)?;
    ws.groups.insert(name, g);
    Ok(())
}

fn lookup_group(ws: &Workspace, lines: &Lines, ln: usize, name: &str) -> Result<Arc<FiniteGroup>> {
    ws.groups
        .get(name)
        .cloned()
        .ok_or_else(|| lines.err(ln, format!("undefined group `{name}`")))
}

fn lookup_hom(ws: &Workspace, lines: &Lines, ln: usize, name: &str) -> Result<GroupHom> {
    ws.homs
        .get(name)
        .cloned()
        .ok_or_else(|| lines.err(ln, format!("undefined hom `{name}`")))
}

fn parse_hom<'a>(
    ws: &mut Workspace,
    lines: &mut Lines,
    ln: usize,
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<()> {
    // begin hom NAME : SRC -> DST
    let name = take_name(lines, ln, words)?;
    ws.check_fresh(lines.file, ln, &name)?;
    let rest: Vec<&str> = words.collect();
    let (src_name, dst_name) = match rest.as_slice() {
        [":", s, "->", d] => (*s, *d),
        _ => return Err(lines.err(ln, "expected `begin hom <name> : <src> -> <dst>`")),
    };
    let src = lookup_group(ws, lines, ln, src_name)?;
    let dst = lookup_group(ws, lines, ln, dst_name)?;
    let mut map: Vec<Option<Elt>> = vec![None; src.order()];
    loop {
        let (mln, mtext) = lines.expect("`map` or `end`")?;
        if mtext == "end" {
            break;
        }
        let body = mtext
            .strip_prefix("map")
            .ok_or_else(|| lines.err(mln, "expected `map i->j ...` or `end`"))?;
        for tok in body.split_whitespace() {
            let (i, j) = tok
                .split_once("->")
                .and_then(|(a, b)| Some((a.parse::<Elt>().ok()?, b.parse::<Elt>().ok()?)))
                .ok_or_else(|| lines.err(mln, format!("bad assignment `{tok}`")))?;
            if i >= src.order() {
                return Err(lines.err(mln, format!("source index {i} out of range")));
            }
            if map[i].is_some() {
                return Err(lines.err(mln, format!("source index {i} assigned twice")));
            }
            map[i] = Some(j);
        }
    }
    let map: Vec<Elt> = map
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| lines.err(ln, format!("source index {i} unassigned"))))
        .collect::<Result<_>>()?;
    let h = GroupHom::new(&src, &dst, map)?;
    ws.homs.insert(name, h);
    Ok(())
}

fn parse_xmod<'a>(
    ws: &mut Workspace,
    lines: &mut Lines,
    ln: usize,
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<()> {
    let name = take_name(lines, ln, words)?;
    ws.check_fresh(lines.file, ln, &name)?;
    let (mut top, mut base, mut alpha) = (None, None, None);
    let mut action: Option<Vec<Vec<Elt>>> = None;
    loop {
        let (fln, ftext) = lines.expect("xmod field or `end`")?;
        if ftext == "end" {
            break;
        }
        let (key, value) = ftext.split_once(char::is_whitespace).unwrap_or((ftext, ""));
        match key {
            "top" => top = Some(lookup_group(ws, lines, fln, value.trim())?),
            "base" => base = Some(lookup_group(ws, lines, fln, value.trim())?),
            "alpha" => alpha = Some(lookup_hom(ws, lines, fln, value.trim())?),
            "action" => {
                let b = base
                    .as_ref()
                    .ok_or_else(|| lines.err(fln, "`action` must come after `base`"))?
                    .order();
                let a = top
                    .as_ref()
                    .ok_or_else(|| lines.err(fln, "`action` must come after `top`"))?
                    .order();
                let mut rows = Vec::with_capacity(b);
                for _ in 0..b {
                    let (rln, rtext) = lines.expect("action row")?;
                    rows.push(parse_row(lines, rln, rtext, a)?);
                }
                action = Some(rows);
            }
            other => return Err(lines.err(fln, format!("unknown xmod field `{other}`"))),
        }
    }
    let missing = |what: &str| lines.err(ln, format!("xmod `{name}` is missing `{what}`"));
    let x = validate_xmod(
        &name,
        &top.ok_or_else(|| missing("top"))?,
        &base.ok_or_else(|| missing("base"))?,
        &alpha.ok_or_else(|| missing("alpha"))?,
        action.ok_or_else(|| missing("action"))?,
    )?;
    ws.xmods.insert(name, x);
    Ok(())
}

fn parse_gpgd<'a>(
    ws: &mut Workspace,
    lines: &mut Lines,
    ln: usize,
    words: &mut impl Iterator<Item = &'a str>,
) -> Result<()> {
    let name = take_name(lines, ln, words)?;
    ws.check_fresh(lines.file, ln, &name)?;
    let (mut arrows, mut objects) = (None, None);
    let (mut d0, mut d1, mut eps) = (None, None, None);
    loop {
        let (fln, ftext) = lines.expect("gpgd field or `end`")?;
        if ftext == "end" {
            break;
        }
        let (key, value) = ftext.split_once(char::is_whitespace).unwrap_or((ftext, ""));
        let value = value.trim();
        match key {
            "arrows" => arrows = Some(lookup_group(ws, lines, fln, value)?),
            "objects" => objects = Some(lookup_group(ws, lines, fln, value)?),
            "d0" => d0 = Some(lookup_hom(ws, lines, fln, value)?),
            "d1" => d1 = Some(lookup_hom(ws, lines, fln, value)?),
            "eps" => eps = Some(lookup_hom(ws, lines, fln, value)?),
            other => return Err(lines.err(fln, format!("unknown gpgd field `{other}`"))),
        }
    }
    let missing = |what: &str| lines.err(ln, format!("gpgd `{name}` is missing `{what}`"));
    let g = validate_gpgd(
        &name,
        &arrows.ok_or_else(|| missing("arrows"))?,
        &objects.ok_or_else(|| missing("objects"))?,
        &d0.ok_or_else(|| missing("d0"))?,
        &d1.ok_or_else(|| missing("d1"))?,
        &eps.ok_or_else(|| missing("eps"))?,
    )?;
    ws.gpgds.insert(name, g);
    Ok(())
}

pub fn write_group(name: &str, g: &FiniteGroup) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "begin group {name}");
    let _ = writeln!(s, "order {}", g.order());
    let _ = writeln!(s, "table");
    for i in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|j| g.add(i, j).to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let _ = writeln!(s, "end");
    s
}

pub fn write_hom(name: &str, src_name: &str, dst_name: &str, h: &GroupHom) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "begin hom {name} : {src_name} -> {dst_name}");
    let assigns: Vec<String> = h.map().iter().enumerate().map(|(i, &j)| format!("{i}->{j}")).collect();
    let _ = writeln!(s, "map {}", assigns.join(" "));
    let _ = writeln!(s, "end");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_roundtrip() {
        let s3 = FiniteGroup::symmetric(3);
        let text = write_group("S3", &s3);
        let mut ws = Workspace::new();
        parse_into(&mut ws, "t", &text).unwrap();
        assert_eq!(ws.groups["S3"].table(), s3.table());
    }

    #[test]
    fn full_workspace() {
        let text = "\
# a tiny workspace
begin group Z2
order 2
table
0 1
1 0
end
begin group Z4
order 4
table
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
end
begin hom inc : Z2 -> Z4
map 0->0 1->2
end
begin xmod X
top Z2
base Z4
alpha inc
action
0 1
0 1
0 1
0 1
end
begin hom mod2 : Z4 -> Z2
map 0->0 1->1 2->0 3->1
end
";
        let mut ws = Workspace::new();
        parse_into(&mut ws, "t", text).unwrap();
        assert_eq!(ws.xmods["X"].top().order(), 2);
        assert!(ws.homs["mod2"].is_surjective());
    }

    #[test]
    fn parse_errors_carry_position() {
        let mut ws = Workspace::new();
        match parse_into(&mut ws, "f", "begin group G\norder 2\ntable\n0 1\n1 1\nend\n") {
            // 1 1 is not a Latin square row set; from_table reports it.
            Err(Error::NotAGroup { .. }) => {}
            other => panic!("expected group validation failure, got {other:?}"),
        }
        match parse_into(&mut ws, "f", "begin hom h : A -> B\nend\n") {
            Err(Error::Parse { line: 1, msg, .. }) => assert!(msg.contains("undefined group `A`")),
            other => panic!("expected undefined reference, got {other:?}"),
        }
        let text = "begin group Z2\norder 2\ntable\n0 1\n1 0\nend\n";
        parse_into(&mut ws, "f", text).unwrap();
        match parse_into(&mut ws, "f", text) {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("duplicate name")),
            other => panic!("expected duplicate name, got {other:?}"),
        }
    }

    #[test]
    fn invalid_xmod_rejected_at_load() {
        // Zero boundary, trivial action, nonabelian top: CM2 fails.
        let mut ws = Workspace::new();
        let s3 = FiniteGroup::symmetric(3);
        let mut text = write_group("S3", &s3);
        text.push_str("begin hom z : S3 -> S3\nmap 0->0 1->0 2->0 3->0 4->0 5->0\nend\n");
        text.push_str("begin xmod bad\ntop S3\nbase S3\nalpha z\naction\n");
        for _ in 0..6 {
            text.push_str("0 1 2 3 4 5\n");
        }
        text.push_str("end\n");
        match parse_into(&mut ws, "f", &text) {
            Err(Error::AxiomViolation { axiom, .. }) => assert_eq!(axiom, "CM2"),
            other => panic!("expected CM2 rejection, got {other:?}"),
        }
    }

    proptest::proptest! {
        #[test]
        fn group_text_roundtrip(kind in 0usize..3, n in 1usize..9) {
            let g = match kind {
                0 => FiniteGroup::cyclic(n),
                1 => FiniteGroup::dihedral(n),
                _ => FiniteGroup::symmetric(n.min(4)),
            };
            let mut ws = Workspace::new();
            parse_into(&mut ws, "f", &write_group("G", &g)).unwrap();
            proptest::prop_assert_eq!(ws.groups["G"].table(), g.table());
        }

        #[test]
        fn corrupt_table_entry_rejected(i in 0usize..6, j in 0usize..6, delta in 1usize..6) {
            let g = FiniteGroup::symmetric(3);
            let mut table = g.table().to_vec();
            table[i][j] = (table[i][j] + delta) % 6;
            let mut text = format!("begin group G\norder 6\ntable\n");
            for row in &table {
                let row: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                text.push_str(&row.join(" "));
                text.push('\n');
            }
            text.push_str("end\n");
            let mut ws = Workspace::new();
            proptest::prop_assert!(parse_into(&mut ws, "f", &text).is_err());
        }
    }
}
