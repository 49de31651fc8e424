use precompact::duality::Character;
use precompact::oracle::TheoremReport;
use precompact::topology::Witness;
use precompact::{Element, Subgroup};
use serde_json::{json, Value};

/// Generators as sorted coordinate lists.
pub fn subgroup(h: &Subgroup) -> Value {
    let mut gens: Vec<Vec<u64>> = h.generators().into_iter().map(Element::into_coords).collect();
    gens.sort();
    json!(gens)
}

pub fn subgroups(hs: &[Subgroup]) -> Value {
    Value::Array(hs.iter().map(subgroup).collect())
}

pub fn elements(h: &Subgroup) -> Value {
    Value::Array(h.elements().iter().map(|x| json!(x.coords())).collect())
}

pub fn elements_text(h: &Subgroup) -> String {
    let xs: Vec<String> = h.elements().iter().map(ToString::to_string).collect();
    format!("{{{}}}", xs.join(","))
}

fn character(chi: &Character) -> Value {
    json!({"kind": "character", "coeffs": chi.coeffs()})
}

pub fn witness(w: Option<&Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(Witness::Subgroup(h)) => json!({"kind": "subgroup", "generators": subgroup(h)}),
        Some(Witness::DualSubgroup(l)) => json!({"kind": "dual_subgroup", "generators": subgroup(l)}),
        Some(Witness::Character(chi)) => character(chi),
        Some(Witness::Element(x)) => json!({"kind": "element", "coords": x.coords()}),
    }
}

pub fn report(r: &TheoremReport) -> Value {
    json!({
        "id": r.theorem_id,
        "instances_checked": r.instances_checked,
        "failures": r.failure_count,
        "first_failure": r.first_failure.as_ref().map(|f| json!({
            "group": f.group,
            "H": f.h,
            "S": f.s,
            "detail": f.detail,
        })),
    })
}
