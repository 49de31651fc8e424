//! Textual grammar for groups, elements and subgroups.
//!
//! ```text
//! group    := factor ("x" factor)*          factor := "Z(" n ")"
//! element  := "[" (n ("," n)*)? "]"
//! subgroup := ("dual:")? ("all" | "trivial" | "gens=" (element ("," element)*)?)
//! ```

use super::{Element, FiniteAbelianGroup, Subgroup};
use crate::error::{Error, Result};
use crate::text::Cursor;

/// Parses `Z(4)xZ(2)` style input and normalizes it to invariant factors.
pub fn parse_group(src: &str) -> Result<FiniteAbelianGroup> {
    let mut cur = Cursor::new(src);
    let mut orders = Vec::new();
    loop {
        cur.expect("Z(")?;
        let at = cur.pos();
        let n = cur.number()?;
        if n == 0 {
            return Err(Error::parse(at, "cyclic order must be positive"));
        }
        orders.push(n);
        cur.expect(")")?;
        if !cur.eat("x") {
            break;
        }
    }
    cur.finish()?;
    FiniteAbelianGroup::from_cyclic_orders(&orders)
}

fn element_at(cur: &mut Cursor<'_>, group: &FiniteAbelianGroup) -> Result<Element> {
    let start = cur.pos();
    cur.expect("[")?;
    let mut coords = Vec::new();
    if !cur.eat("]") {
        loop {
            coords.push(cur.number()?);
            if cur.eat("]") {
                break;
            }
            cur.expect(",")?;
        }
    }
    group.element(coords).map_err(|e| match e {
        Error::MalformedElement(m) => Error::MalformedElement(format!("at position {start}: {m}")),
        other => other,
    })
}

/// Parses `[1,0]` as an element of `group` in invariant-factor coordinates.
pub fn parse_element(group: &FiniteAbelianGroup, src: &str) -> Result<Element> {
    let mut cur = Cursor::new(src);
    let x = element_at(&mut cur, group)?;
    cur.finish()?;
    Ok(x)
}

/// Parses a subgroup spec of `parent`. The `dual:` prefix is optional but,
/// when present, `parent` must be a dual group.
pub fn parse_subgroup(parent: &FiniteAbelianGroup, src: &str) -> Result<Subgroup> {
    let mut cur = Cursor::new(src);
    if cur.eat("dual:") && !parent.is_dual() {
        return Err(Error::GroupMismatch(format!(
            "`dual:` subgroup given where a subgroup of {parent} is expected"
        )));
    }
    if cur.eat("all") {
        cur.finish()?;
        return Ok(Subgroup::whole(parent));
    }
    if cur.eat("trivial") {
        cur.finish()?;
        return Ok(Subgroup::trivial(parent));
    }
    cur.expect("gens=")?;
    let mut gens = Vec::new();
    if !cur.at_end() {
        loop {
            gens.push(element_at(&mut cur, parent)?);
            if cur.at_end() {
                break;
            }
            cur.expect(",")?;
        }
    }
    Subgroup::generated(parent, &gens)
}
