//! Reduction from one-in-three satisfiability to single-bend recognition.
//!
//! [`build_reduction_graph`] turns a formula into a graph `G_F` and
//! [`representation_from_assignment`] lays out `G_F` with single-bend paths
//! whenever an assignment makes exactly one variable per clause true.

mod layout;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{gen_octahedron, Graph};

pub use layout::{clause_gadget_representation, octahedron_representation, representation_from_assignment};

/// Conjunction of clauses, each a triple of distinct non-negated variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub variables: Vec<String>,
    pub clauses: Vec<[usize; 3]>,
}

impl Formula {
    /// Builds a formula from clauses of variable names; variables are
    /// numbered in order of first appearance.
    pub fn from_clauses<S: AsRef<str>>(clauses: &[[S; 3]]) -> Result<Self> {
        let mut f = Formula { variables: Vec::new(), clauses: Vec::new() };
        let mut index = BTreeMap::new();
        for (i, c) in clauses.iter().enumerate() {
            let mut triple = [0; 3];
            for (slot, name) in triple.iter_mut().zip(c) {
                let name = name.as_ref();
                *slot = *index.entry(name.to_string()).or_insert_with(|| {
                    f.variables.push(name.to_string());
                    f.variables.len() - 1
                });
            }
            if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
                return Err(Error::DuplicateLiteral(i + 1));
            }
            f.clauses.push(triple);
        }
        Ok(f)
    }

    /// Whether every clause has exactly one true variable.
    pub fn one_in_three(&self, a: &Assignment) -> bool {
        self.unsatisfied_clause(a).is_none()
    }

    fn unsatisfied_clause(&self, a: &Assignment) -> Option<usize> {
        self.clauses.iter().position(|c| c.iter().filter(|&&v| a.get(&self.variables[v])).count() != 1)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{} {} {}", self.variables[c[0]], self.variables[c[1]], self.variables[c[2]])?;
        }
        Ok(())
    }
}

/// Truth values by variable name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub truth: BTreeMap<String, bool>,
}

impl Assignment {
    /// Value of a variable; unassigned variables read as false.
    pub fn get(&self, var: &str) -> bool {
        self.truth.get(var).copied().unwrap_or(false)
    }

    /// Names of the true variables.
    pub fn true_variables(&self) -> BTreeSet<&str> {
        self.truth.iter().filter(|(_, &t)| t).map(|(k, _)| k.as_str()).collect()
    }
}

/// One clause per line with three whitespace-separated variable names.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut clauses = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let Ok(triple) = <[&str; 3]>::try_from(words.as_slice()) else {
            return Err(Error::ArityError { line: i + 1, found: words.len() });
        };
        if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
            return Err(Error::DuplicateLiteral(i + 1));
        }
        clauses.push(triple);
    }
    Formula::from_clauses(&clauses)
}

/// One `name value` pair per line, the value being `true`, `false`, `1` or
/// `0`. Blank lines and lines starting with `#` are skipped.
pub fn parse_assignment(text: &str) -> Result<Assignment> {
    let mut truth = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
        let words: Vec<&str> = line.split_whitespace().collect();
        let [name, value] = words[..] else { return Err(parse_err("expected a variable and a value")) };
        let value = match value {
            "true" | "1" => true,
            "false" | "0" => false,
            _ => return Err(parse_err("value must be true, false, 1 or 0")),
        };
        if truth.insert(name.to_string(), value).is_some() {
            return Err(parse_err("variable assigned twice"));
        }
    }
    Ok(Assignment { truth })
}

/// Corner of an octahedron; `x` and `X` are the non-adjacent pairs.
pub const OCTAHEDRON_CORNERS: [&str; 6] = ["a", "A", "b", "B", "c", "C"];

/// What a vertex of `G_F` stands for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    /// Octahedron corner of a clause gadget.
    GadgetCorner {
        clause: usize,
        corner: &'static str,
    },
    /// `W_ABC`, adjacent to `A`, `B`, `C` and `V`.
    GadgetW {
        clause: usize,
    },
    /// `w_abC`, `w_aBc` or `w_Abc`, joined to the variable in `position`
    /// 3, 2 or 1 of the clause.
    GadgetLittleW {
        clause: usize,
        position: usize,
    },
    /// `s_ab`, `s_ac` or `s_bc`.
    GadgetS {
        clause: usize,
        pair: &'static str,
    },
    Variable(usize),
    V,
    T,
    /// Smaller part of the `K_{2,4}`.
    K24Small(usize),
    /// Larger part of the `K_{2,4}` other than `T`.
    K24Large(usize),
    /// Corner of one of the four auxiliary octahedra `O1..O4`.
    Auxiliary {
        index: usize,
        corner: &'static str,
    },
}

/// `G_F` together with the role of each vertex.
#[derive(Clone, Debug)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: BTreeMap<String, Role>,
}

/// The three little `w` vertices, the octahedron triangle each one sees, and
/// the position in the clause of the variable it is joined to.
const LITTLE_W: [(&str, [&str; 3], usize); 3] =
    [("w_abC", ["a", "b", "C"], 3), ("w_aBc", ["a", "B", "c"], 2), ("w_Abc", ["A", "b", "c"], 1)];

const S_PAIRS: [(&str, [&str; 2]); 3] = [("s_ab", ["a", "b"]), ("s_ac", ["a", "c"]), ("s_bc", ["b", "c"])];

/// The 13-vertex clause gadget.
pub fn clause_gadget_graph() -> Graph {
    let mut g = gen_octahedron();
    add_gadget_extras(&mut g, |v| v.to_string());
    g
}

fn add_gadget_extras(g: &mut Graph, name: impl Fn(&str) -> String) {
    for v in ["A", "B", "C"] {
        g.add_edge(&name("W_ABC"), &name(v));
    }
    for (w, tri, _) in LITTLE_W {
        for v in tri {
            g.add_edge(&name(w), &name(v));
        }
    }
    for (s, pair) in S_PAIRS {
        for v in pair {
            g.add_edge(&name(s), &name(v));
        }
    }
}

pub(crate) fn gadget_label(clause: usize, v: &str) -> String {
    format!("c{}.{v}", clause + 1)
}

pub(crate) fn variable_label(f: &Formula, j: usize) -> String {
    format!("x.{}", f.variables[j])
}

pub(crate) fn auxiliary_label(index: usize, corner: &str) -> String {
    format!("O{index}.{corner}")
}

pub(crate) const K24_SMALL: [&str; 2] = ["K.k1", "K.k2"];
pub(crate) const K24_LARGE: [&str; 3] = ["K.t2", "K.t3", "K.t4"];

/// Builds `G_F`: one clause gadget per clause, one vertex per variable,
/// and 31 further vertices (`V`, a `K_{2,4}` containing `T`, and four
/// octahedra), for `13n + p + 31` vertices in total.
pub fn build_reduction_graph(f: &Formula) -> ReductionGraph {
    let mut g = Graph::new();
    let mut roles = BTreeMap::new();
    let mut role = |g: &mut Graph, label: String, r: Role| {
        g.add_vertex(&label);
        roles.insert(label, r);
    };
    for (i, clause) in f.clauses.iter().enumerate() {
        let name = |v: &str| gadget_label(i, v);
        for corner in OCTAHEDRON_CORNERS {
            role(&mut g, name(corner), Role::GadgetCorner { clause: i, corner });
        }
        role(&mut g, name("W_ABC"), Role::GadgetW { clause: i });
        for (w, _, position) in LITTLE_W {
            role(&mut g, name(w), Role::GadgetLittleW { clause: i, position });
        }
        for (s, _) in S_PAIRS {
            role(&mut g, name(s), Role::GadgetS { clause: i, pair: &s[2..] });
        }
        add_octahedron_edges(&mut g, name);
        add_gadget_extras(&mut g, name);
        for (w, _, position) in LITTLE_W {
            g.add_edge(&name(w), &variable_label(f, clause[position - 1]));
        }
        g.add_edge("V", &name("W_ABC"));
    }
    for j in 0..f.variables.len() {
        role(&mut g, variable_label(f, j), Role::Variable(j));
        g.add_edge("T", &variable_label(f, j));
    }
    role(&mut g, "V".into(), Role::V);
    role(&mut g, "T".into(), Role::T);
    g.add_edge("T", "V");
    for (i, k) in K24_SMALL.iter().enumerate() {
        role(&mut g, k.to_string(), Role::K24Small(i + 1));
    }
    for (i, t) in K24_LARGE.iter().enumerate() {
        role(&mut g, t.to_string(), Role::K24Large(i + 2));
    }
    for k in K24_SMALL {
        for t in K24_LARGE.iter().chain(&["T"]) {
            g.add_edge(k, t);
        }
    }
    for index in 1..=4 {
        let name = |v: &str| auxiliary_label(index, v);
        for corner in OCTAHEDRON_CORNERS {
            role(&mut g, name(corner), Role::Auxiliary { index, corner });
        }
        add_octahedron_edges(&mut g, name);
        let hub = if index <= 2 { "T" } else { "V" };
        for v in ["a", "b", "c"] {
            g.add_edge(hub, &name(v));
        }
    }
    ReductionGraph { graph: g, roles }
}

fn add_octahedron_edges(g: &mut Graph, name: impl Fn(&str) -> String) {
    for (i, u) in OCTAHEDRON_CORNERS.iter().enumerate() {
        for v in &OCTAHEDRON_CORNERS[i + 1..] {
            if !u.eq_ignore_ascii_case(v) {
                g.add_edge(&name(u), &name(v));
            }
        }
    }
}

/// Largest variable count [`brute_force_one_in_three`] accepts.
pub const BRUTE_FORCE_MAX_VARIABLES: usize = 25;

/// Exhaustive search for a one-in-three assignment. Assignments are tried
/// as binary numbers with the first variable as the lowest bit.
pub fn brute_force_one_in_three(f: &Formula) -> Result<Option<Assignment>> {
    let p = f.variables.len();
    if p > BRUTE_FORCE_MAX_VARIABLES {
        return Err(Error::TooLarge(format!("{p} variables, at most {BRUTE_FORCE_MAX_VARIABLES} supported")));
    }
    let masks: Vec<[u32; 3]> = f.clauses.iter().map(|c| c.map(|v| 1u32 << v)).collect();
    let found = (0u32..1 << p).find(|&bits| masks.iter().all(|c| c.iter().filter(|&&m| bits & m != 0).count() == 1));
    Ok(found.map(|bits| Assignment {
        truth: f.variables.iter().enumerate().map(|(j, v)| (v.clone(), bits >> j & 1 == 1)).collect(),
    }))
}

/// A random formula together with an assignment satisfying it: every clause
/// takes one variable from the planted true set and two from the false set.
pub fn random_planted_formula<R: Rng>(rng: &mut R, variables: usize, clauses: usize) -> (Formula, Assignment) {
    assert!(variables >= 3, "a clause needs three variables");
    let names: Vec<String> = (1..=variables).map(|i| format!("x{i}")).collect();
    let truths = rng.gen_range(1..=variables - 2);
    let mut order: Vec<usize> = (0..variables).collect();
    order.shuffle(rng);
    let (yes, no) = order.split_at(truths);
    let mut cls = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let mut c: Vec<&str> = no.choose_multiple(rng, 2).map(|&v| names[v].as_str()).collect();
        c.push(&names[*yes.choose(rng).unwrap()]);
        c.shuffle(rng);
        cls.push([c[0], c[1], c[2]]);
    }
    let f = Formula::from_clauses(&cls).expect("planted clauses use distinct variables");
    let a =
        Assignment { truth: f.variables.iter().map(|v| (v.clone(), yes.iter().any(|&y| names[y] == *v))).collect() };
    (f, a)
}
