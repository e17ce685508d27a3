//! Expected records shipped with the front end.

use serde::Deserialize;

use rrca::cherednik::ggor_variable_names;
use rrca::exactalg::Scalar;
use rrca::groebner::MultiPoly;
use rrca::refgroup::ReflectionGroup;

use crate::record::Expected;
use crate::CliError;

const SHIPPED: &[&str] = &[include_str!("../expected/G4.toml")];

#[derive(Deserialize)]
struct Database {
    record: Vec<Expected>,
}

/// Every shipped expected record.
pub fn expected_records() -> Vec<Expected> {
    SHIPPED
        .iter()
        .flat_map(|t| toml::from_str::<Database>(t).expect("shipped expected records parse").record)
        .collect()
}

/// Coefficients of a linear form, scaled so that the first nonzero one is 1.
fn normalized_form(g: &ReflectionGroup, form: &str) -> Option<Vec<Scalar>> {
    let names = ggor_variable_names(g);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let f = MultiPoly::parse(g.field(), &refs, form).ok()?;
    let coef: Vec<Scalar> = (0..names.len())
        .map(|i| {
            let mut m = vec![0; names.len()];
            m[i] = 1;
            f.coeff(&m)
        })
        .collect();
    let lead = coef.iter().find(|c| !c.is_zero())?.clone();
    coef.iter().map(|c| c.checked_div(&lead).ok()).collect()
}

/// Expected record for a group and hyperplane, matching hyperplanes up to scaling.
pub fn lookup(g: &ReflectionGroup, hyperplane: &str) -> Result<Option<Expected>, CliError> {
    let want = normalized_form(g, hyperplane).ok_or_else(|| CliError::Usage(format!("not a linear form: {hyperplane}")))?;
    Ok(expected_records()
        .into_iter()
        .find(|e| e.group == g.name() && normalized_form(g, &e.hyperplane).as_ref() == Some(&want)))
}
