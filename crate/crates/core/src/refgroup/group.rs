use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::exactalg::{nullspace, ExactMatrix, FieldSpec, Scalar, SparseVec};

use super::coinvariant::{CoinvariantAlgebra, Side};
use super::data::{GroupData, Parametrisation};
use super::GroupError;

/// A reflection together with its position in the reflection library.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: usize,
    /// (orbit, hyperplane within orbit, reflection within hyperplane), 0-based.
    pub id: (usize, usize, usize),
    /// Index of the conjugacy class among reflection classes.
    pub class: usize,
    /// Non-trivial eigenvalue, equal to the determinant.
    pub eigenvalue: Scalar,
    /// Order of the pointwise stabiliser of the reflecting hyperplane.
    pub hyperplane_order: usize,
    /// Covector cutting out the reflecting hyperplane.
    pub root: Vec<Scalar>,
    /// Nonzero vector in the image of `1 - s`.
    pub coroot: Vec<Scalar>,
    /// `pairing[i][j] = (y_i, x_j)_s`.
    pub pairing: Vec<Vec<Scalar>>,
}

/// An irreducible representation: generator matrices plus derived data.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub dim: usize,
    pub generators: Vec<ExactMatrix>,
    pub elements: Vec<ExactMatrix>,
    pub character: Vec<Scalar>,
}

/// A finite complex reflection group with all derived combinatorial data.
#[derive(Debug)]
pub struct ReflectionGroup {
    name: String,
    field: FieldSpec,
    dim: usize,
    generator_names: Vec<String>,
    elements: Vec<ExactMatrix>,
    dual: Vec<ExactMatrix>,
    words: Vec<Vec<usize>>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    reflections: Vec<Reflection>,
    orbits: Vec<Vec<Vec<usize>>>,
    reflection_classes: Vec<usize>,
    irreps: Vec<Irrep>,
    diagonal: Option<usize>,
    parametrisations: Vec<Parametrisation>,
    coinvariants: [OnceLock<CoinvariantAlgebra>; 2],
    labels: OnceLock<Vec<super::characters::IrrepLabel>>,
}

fn normalized_covector(m: &ExactMatrix) -> Option<Vec<Scalar>> {
    let rows = m.rows();
    let row = rows.into_iter().find(|r| !r.is_empty())?;
    let (_, lead) = row.iter().next().unwrap();
    let inv = lead.inv().unwrap();
    Some((0..m.ncols()).map(|j| row.get(&j).map_or_else(|| Scalar::zero(m.field()), |v| v * &inv)).collect())
}

impl ReflectionGroup {
    pub fn from_data(data: GroupData) -> Result<Self, GroupError> {
        let field = data.field.clone();
        let n = data.dim;
        if data.generators.is_empty() {
            return Err(GroupError::Data("no generators".into()));
        }
        // breadth-first closure under right multiplication by generators
        let id = ExactMatrix::identity(&field, n);
        let mut index: HashMap<ExactMatrix, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (k, g) in data.generators.iter().enumerate() {
                let m = elements[e].mul(g);
                if !index.contains_key(&m) {
                    let i = elements.len();
                    if i > 100_000 {
                        return Err(GroupError::Data("group too large or infinite".into()));
                    }
                    index.insert(m.clone(), i);
                    elements.push(m);
                    let mut w = words[e].clone();
                    w.push(k);
                    words.push(w);
                    queue.push_back(i);
                }
            }
        }
        let order = elements.len();
        let mut mult = vec![vec![0usize; order]; order];
        for a in 0..order {
            for b in 0..order {
                mult[a][b] = index[&elements[a].mul(&elements[b])];
            }
        }
        let inverse: Vec<usize> = (0..order).map(|a| (0..order).find(|&b| mult[a][b] == 0).unwrap()).collect();
        let dual: Vec<ExactMatrix> = (0..order).map(|a| elements[inverse[a]].transpose()).collect();

        // conjugacy classes, ordered by first element
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<Vec<usize>> = vec![];
        for a in 0..order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..order).map(|g| mult[mult[g][a]][inverse[g]]).collect();
            cls.sort();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }

        let mut group = ReflectionGroup {
            name: data.name.clone(),
            field: field.clone(),
            dim: n,
            generator_names: data.generator_names.clone(),
            elements,
            dual,
            words,
            mult,
            inverse,
            classes,
            class_of,
            reflections: vec![],
            orbits: vec![],
            reflection_classes: vec![],
            irreps: vec![],
            diagonal: None,
            parametrisations: data.parametrisations.clone(),
            coinvariants: [OnceLock::new(), OnceLock::new()],
            labels: OnceLock::new(),
        };
        group.build_reflections()?;
        if let Some(dname) = &data.diagonal {
            let k = data
                .generator_names
                .iter()
                .position(|g| g == dname)
                .ok_or_else(|| GroupError::Data(format!("unknown diagonal generator {dname}")))?;
            group.diagonal = Some(k);
        }
        for (i, mats) in data.irreps.iter().enumerate() {
            let ir = group.build_irrep(mats).map_err(|e| GroupError::Irrep(i + 1, e.to_string()))?;
            group.irreps.push(ir);
        }
        group.validate_irreps()?;
        if let Some(k) = group.diagonal {
            for i in 0..group.irreps.len() {
                let d = super::characters::diagonalize(&group, &group.irreps[i], k)
                    .map_err(|e| GroupError::Irrep(i + 1, e.to_string()))?;
                group.irreps[i] = d;
            }
        }
        Ok(group)
    }

    fn build_reflections(&mut self) -> Result<(), GroupError> {
        let n = self.dim;
        let id = ExactMatrix::identity(&self.field, n);
        // reflections keyed by hyperplane covector
        let mut by_plane: HashMap<Vec<Scalar>, Vec<usize>> = HashMap::new();
        let mut plane_order: Vec<Vec<Scalar>> = vec![];
        let mut plane_of: HashMap<usize, usize> = HashMap::new();
        for (e, m) in self.elements.iter().enumerate() {
            let d = id.sub(m);
            if e == 0 || d.rank() != 1 {
                continue;
            }
            let key = normalized_covector(&d).unwrap();
            if !by_plane.contains_key(&key) {
                plane_order.push(key.clone());
            }
            by_plane.entry(key).or_default().push(e);
        }
        for (pi, key) in plane_order.iter().enumerate() {
            for &e in &by_plane[key] {
                plane_of.insert(e, pi);
            }
        }
        // hyperplane orbits via conjugation by generators
        let np = plane_order.len();
        let mut parent: Vec<usize> = (0..np).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let gen_elems: Vec<usize> = (0..self.generator_names.len())
            .map(|k| (0..self.elements.len()).find(|&e| self.words[e] == [k]).unwrap_or(0))
            .collect();
        for (&e, &pe) in &plane_of {
            for &g in &gen_elems {
                let c = self.mult[self.mult[g][e]][self.inverse[g]];
                let pc = plane_of[&c];
                let (a, b) = (find(&mut parent, pe), find(&mut parent, pc));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbit_index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut orbits: Vec<Vec<Vec<usize>>> = vec![];
        for (pi, key) in plane_order.iter().enumerate() {
            let root = find(&mut parent, pi);
            let oi = *orbit_index.entry(root).or_insert_with(|| {
                orbits.push(vec![]);
                orbits.len() - 1
            });
            orbits[oi].push(by_plane[key].clone());
        }
        let mut reflections = vec![];
        let mut class_reps: Vec<usize> = vec![];
        for (oi, orbit) in orbits.iter().enumerate() {
            for (hi, plane) in orbit.iter().enumerate() {
                for (ri, &e) in plane.iter().enumerate() {
                    let m = &self.elements[e];
                    let d = id.sub(m);
                    let root = normalized_covector(&d).unwrap();
                    let col = d.columns().iter().find(|c| !c.is_empty()).unwrap();
                    let coroot: Vec<Scalar> =
                        (0..n).map(|i| col.get(&i).cloned().unwrap_or_else(|| Scalar::zero(&self.field))).collect();
                    let denom = root.iter().zip(&coroot).fold(Scalar::zero(&self.field), |acc, (a, b)| &acc + &(a * b));
                    let inv = denom.inv().map_err(|_| GroupError::Data("reflection with <coroot, root> = 0".into()))?;
                    let pairing: Vec<Vec<Scalar>> =
                        (0..n).map(|i| (0..n).map(|j| &(&root[i] * &coroot[j]) * &inv).collect()).collect();
                    let cls = self.class_of[e];
                    let rc = match class_reps.iter().position(|&r| self.class_of[r] == cls) {
                        Some(p) => p,
                        None => {
                            class_reps.push(e);
                            class_reps.len() - 1
                        }
                    };
                    reflections.push(Reflection {
                        element: e,
                        id: (oi, hi, ri),
                        class: rc,
                        eigenvalue: m.determinant(),
                        hyperplane_order: plane.len() + 1,
                        root,
                        coroot,
                        pairing,
                    });
                }
            }
        }
        self.reflections = reflections;
        self.orbits = orbits;
        self.reflection_classes = class_reps;
        Ok(())
    }

    fn build_irrep(&self, gens: &[ExactMatrix]) -> Result<Irrep, GroupError> {
        let d = gens.first().map_or(0, |m| m.nrows());
        let mut elements: Vec<ExactMatrix> = Vec::with_capacity(self.order());
        for w in &self.words {
            let mut m = ExactMatrix::identity(&self.field, d);
            for &k in w {
                m = m.mul(&gens[k]);
            }
            elements.push(m);
        }
        // Cayley-graph relations: rho(e) rho(g_k) = rho(e g_k)
        let gen_elems: Vec<usize> = (0..gens.len())
            .map(|k| (0..self.order()).find(|&e| self.words[e] == [k]).unwrap())
            .collect();
        for e in 0..self.order() {
            for (k, g) in gens.iter().enumerate() {
                if elements[e].mul(g) != elements[self.mult[e][gen_elems[k]]] {
                    return Err(GroupError::Data("matrices do not satisfy the group relations".into()));
                }
            }
        }
        let character = elements.iter().map(|m| m.trace()).collect();
        Ok(Irrep { dim: d, generators: gens.to_vec(), elements, character })
    }

    fn validate_irreps(&self) -> Result<(), GroupError> {
        if self.irreps.is_empty() {
            return Ok(());
        }
        for (i, a) in self.irreps.iter().enumerate() {
            if !self.inner_product(&a.character, &a.character).is_one() {
                return Err(GroupError::Irrep(i + 1, "not irreducible".into()));
            }
            for (j, b) in self.irreps.iter().enumerate().skip(i + 1) {
                if !self.inner_product(&a.character, &b.character).is_zero() {
                    return Err(GroupError::Irrep(j + 1, format!("isomorphic to irrep {}", i + 1)));
                }
            }
        }
        let total: usize = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if total != self.order() {
            return Err(GroupError::Data(format!("irreps incomplete: sum of squares {total} != {}", self.order())));
        }
        Ok(())
    }

    /// `(1/|G|) sum_g a(g) b(g^-1)`.
    pub fn inner_product(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let f = a[0].field().clone();
        let mut acc = Scalar::zero(&f);
        for g in 0..self.order() {
            acc = &acc + &(&a[g] * &b[self.inverse[g]]);
        }
        &acc * &Scalar::from_frac(&f, 1, self.order() as i64)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Element index of generator `k`.
    pub fn generator_element(&self, k: usize) -> usize {
        (0..self.order()).find(|&e| self.words[e] == [k]).expect("generator is an element")
    }

    /// Matrix of element `e` acting on `V` (column vectors).
    pub fn element(&self, e: usize) -> &ExactMatrix {
        &self.elements[e]
    }

    /// Matrix of element `e` on `V*` in the dual basis (inverse transpose).
    pub fn dual_element(&self, e: usize) -> &ExactMatrix {
        &self.dual[e]
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn word(&self, e: usize) -> &[usize] {
        &self.words[e]
    }

    pub fn mult(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_index(&self, m: &ExactMatrix) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// Orbits of hyperplanes, each a list of hyperplanes, each a list of reflection elements.
    pub fn reflection_library(&self) -> &[Vec<Vec<usize>>] {
        &self.orbits
    }

    /// Element indices of reflection-class representatives, in order of first appearance.
    pub fn reflection_classes(&self) -> &[usize] {
        &self.reflection_classes
    }

    pub fn num_reflection_classes(&self) -> usize {
        self.reflection_classes.len()
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn diagonal_generator(&self) -> Option<usize> {
        self.diagonal
    }

    pub fn parametrisations(&self) -> &[Parametrisation] {
        &self.parametrisations
    }

    /// Images of the coordinate variables under element `e`: column `i` of the
    /// returned matrix is the image of variable `i` on the given side.
    pub fn linear_action(&self, side: Side, e: usize) -> &ExactMatrix {
        match side {
            Side::X => &self.dual[e],
            Side::Y => &self.elements[e],
        }
    }

    pub fn coinvariants(&self, side: Side) -> &CoinvariantAlgebra {
        let slot = match side {
            Side::X => &self.coinvariants[0],
            Side::Y => &self.coinvariants[1],
        };
        slot.get_or_init(|| CoinvariantAlgebra::compute(self, side).expect("coinvariant algebra"))
    }

    pub fn labels(&self) -> &[super::characters::IrrepLabel] {
        self.labels.get_or_init(|| super::characters::compute_labels(self))
    }

    /// Eigenvectors for `value` of a square matrix (as columns).
    pub(crate) fn eigenspace(m: &ExactMatrix, value: &Scalar) -> Vec<SparseVec> {
        let n = m.nrows();
        let shifted = m.sub(&ExactMatrix::identity(m.field(), n).scale(value));
        nullspace(&shifted).into_columns()
    }
}
