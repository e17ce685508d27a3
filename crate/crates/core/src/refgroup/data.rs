//! Line-oriented text format for shipped group data.
//!
//! ```text
//! # comment
//! name G4
//! field Q(z3)
//! dim 2
//! generator g1          # followed by `dim` rows of whitespace-separated entries
//! 1 0
//! 0 z3
//! diagonal g1           # optional: generator made diagonal in every irrep
//! irrep 2               # followed by one block of rows per generator, in order
//! ...
//! parametrisation BR C1 C2   # optional: `c<i> = <expr>` per reflection class
//! c1 = -2*C1
//! c2 = -2*C2
//! ```

use crate::exactalg::{parse_field, ExactMatrix, FieldSpec, Scalar};

use super::GroupError;

#[derive(Clone, Debug)]
pub struct Parametrisation {
    pub name: String,
    pub variables: Vec<String>,
    /// Expression for `c(class i)` in the parametrisation variables.
    pub class_values: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct GroupData {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub generator_names: Vec<String>,
    pub generators: Vec<ExactMatrix>,
    pub diagonal: Option<String>,
    /// Irreducible representations: one matrix per generator.
    pub irreps: Vec<Vec<ExactMatrix>>,
    pub parametrisations: Vec<Parametrisation>,
}

fn err(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Data(format!("line {}: {}", line + 1, msg.into()))
}

pub fn parse_group_data(text: &str) -> Result<GroupData, GroupError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.split('#').next().unwrap().split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let mut name = None;
    let mut field: Option<FieldSpec> = None;
    let mut dim: Option<usize> = None;
    let mut gen_names = vec![];
    let mut gens = vec![];
    let mut diagonal = None;
    let mut irreps = vec![];
    let mut params = vec![];
    let mut pos = 0;

    let read_matrix = |pos: &mut usize, f: &FieldSpec, d: usize| -> Result<ExactMatrix, GroupError> {
        let mut rows = vec![];
        for _ in 0..d {
            let (ln, toks) = lines.get(*pos).ok_or_else(|| GroupError::Data("unexpected end of file".into()))?;
            if toks.len() != d {
                return Err(err(*ln, format!("expected {d} entries")));
            }
            let row: Vec<Scalar> = toks
                .iter()
                .map(|t| Scalar::parse(f, t).map_err(|e| err(*ln, e.to_string())))
                .collect::<Result<_, _>>()?;
            rows.push(row);
            *pos += 1;
        }
        Ok(ExactMatrix::from_rows(f, &rows))
    };

    while pos < lines.len() {
        let (ln, toks) = &lines[pos];
        let ln = *ln;
        pos += 1;
        match toks[0] {
            "name" => name = Some(toks.get(1).ok_or_else(|| err(ln, "missing name"))?.to_string()),
            "field" => {
                field = Some(parse_field(&toks[1..].join(" ")).map_err(|e| err(ln, e.to_string()))?)
            }
            "dim" => dim = Some(toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| err(ln, "bad dim"))?),
            "generator" => {
                let f = field.as_ref().ok_or_else(|| err(ln, "field must precede generators"))?;
                let d = dim.ok_or_else(|| err(ln, "dim must precede generators"))?;
                gen_names.push(toks.get(1).ok_or_else(|| err(ln, "missing generator name"))?.to_string());
                gens.push(read_matrix(&mut pos, f, d)?);
            }
            "diagonal" => diagonal = Some(toks.get(1).ok_or_else(|| err(ln, "missing generator"))?.to_string()),
            "irrep" => {
                let f = field.as_ref().ok_or_else(|| err(ln, "field must precede irreps"))?;
                let d: usize = toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| err(ln, "bad irrep dim"))?;
                let mut mats = vec![];
                for _ in 0..gens.len() {
                    mats.push(read_matrix(&mut pos, f, d)?);
                }
                irreps.push(mats);
            }
            "parametrisation" => {
                let pname = toks.get(1).ok_or_else(|| err(ln, "missing parametrisation name"))?.to_string();
                let vars: Vec<String> = toks[2..].iter().map(|s| s.to_string()).collect();
                let mut values = vec![];
                while let Some((_, t)) = lines.get(pos) {
                    let Some(idx) = t[0].strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) else { break };
                    if t.get(1) != Some(&"=") || idx != values.len() + 1 {
                        return Err(err(lines[pos].0, "expected c<i> = <expr> in class order"));
                    }
                    values.push(t[2..].join(" "));
                    pos += 1;
                }
                params.push(Parametrisation { name: pname, variables: vars, class_values: values });
            }
            other => return Err(err(ln, format!("unknown keyword {other}"))),
        }
    }
    Ok(GroupData {
        name: name.ok_or_else(|| GroupError::Data("missing name".into()))?,
        field: field.ok_or_else(|| GroupError::Data("missing field".into()))?,
        dim: dim.ok_or_else(|| GroupError::Data("missing dim".into()))?,
        generator_names: gen_names,
        generators: gens,
        diagonal,
        irreps,
        parametrisations: params,
    })
}
