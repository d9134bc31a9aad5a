//! Layered diagrams of fundamental-weight modules in type C.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index `t` of the simple module L(ω_t); 0 stands for the trivial module k.
pub type Label = usize;

/// Which kind of module a diagram draws.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    #[default]
    Weyl,
    Induced,
    Quotient,
    Submodule,
    Projective,
}

impl DiagramKind {
    /// The kind obtained by turning a diagram upside down.
    pub fn flipped(self) -> Self {
        match self {
            DiagramKind::Weyl => DiagramKind::Induced,
            DiagramKind::Induced => DiagramKind::Weyl,
            DiagramKind::Quotient => DiagramKind::Submodule,
            DiagramKind::Submodule => DiagramKind::Quotient,
            DiagramKind::Projective => DiagramKind::Projective,
        }
    }
}

/// A uniserial diagram, layers listed head first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleDiagram {
    pub highest: Label,
    pub layers: Vec<Label>,
    #[serde(default)]
    pub kind: DiagramKind,
}

impl ModuleDiagram {
    /// A Weyl module diagram, validated.
    pub fn weyl(highest: Label, layers: Vec<Label>) -> Result<Self> {
        let d = ModuleDiagram {
            highest,
            layers,
            kind: DiagramKind::Weyl,
        };
        d.validate()?;
        Ok(d)
    }

    /// The zero module.
    pub fn empty(highest: Label) -> Self {
        ModuleDiagram {
            highest,
            layers: Vec::new(),
            kind: DiagramKind::Quotient,
        }
    }

    /// Checks the structural invariants of the diagram's kind.
    pub fn validate(&self) -> Result<()> {
        if let Some(w) = self.layers.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Inconsistent(format!(
                "adjacent layers repeat L({}) in {self}",
                w[0]
            )));
        }
        if let Some(&t) = self.layers.iter().find(|&&t| t > self.highest) {
            return Err(Error::Inconsistent(format!(
                "label {t} exceeds highest {} in {self}",
                self.highest
            )));
        }
        if let Some(&t) = self.layers.iter().find(|&&t| t % 2 != self.highest % 2) {
            return Err(Error::Inconsistent(format!(
                "label {t} has the wrong parity in {self}"
            )));
        }
        match self.kind {
            DiagramKind::Weyl if self.head() != Some(self.highest) => Err(Error::Inconsistent(
                format!("Weyl diagram {self} must have head L({})", self.highest),
            )),
            DiagramKind::Induced if self.socle() != Some(self.highest) => Err(Error::Inconsistent(
                format!("induced diagram {self} must have socle L({})", self.highest),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.layers.len() == 1
    }

    pub fn head(&self) -> Option<Label> {
        self.layers.first().copied()
    }

    pub fn socle(&self) -> Option<Label> {
        self.layers.last().copied()
    }

    /// Turns the diagram upside down, e.g. V(ω_j) into H⁰(ω_j).
    pub fn flip(&self) -> Self {
        ModuleDiagram {
            highest: self.highest,
            layers: self.layers.iter().rev().copied().collect(),
            kind: self.kind.flipped(),
        }
    }

    /// Composition factors in ascending order.
    pub fn composition_factors(&self) -> Vec<Label> {
        let mut f = self.layers.clone();
        f.sort_unstable();
        f
    }

    /// Composition multiplicity of L(ω_t).
    pub fn multiplicity(&self, t: Label) -> usize {
        self.layers.iter().filter(|&&l| l == t).count()
    }
}

impl std::fmt::Display for ModuleDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.layers.iter().map(|t| t.to_string()).collect();
        write!(f, "[{}]", parts.join(";"))
    }
}

/// A module drawn as a graph of simple labels; edges run from upper to lower node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveDiagram {
    pub labels: Vec<Label>,
    pub edges: Vec<(usize, usize)>,
}

impl ProjectiveDiagram {
    /// Nodes reachable downward from `node`, i.e. the submodule it generates.
    pub fn generated(&self, node: usize) -> Vec<usize> {
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == v).map(|e| e.1));
        }
        (0..self.labels.len()).filter(|&v| seen[v]).collect()
    }

    /// The submodule generated by `node` as a uniserial diagram, when it is a chain.
    pub fn generated_uniserial(&self, node: usize) -> Option<ModuleDiagram> {
        let members = self.generated(node);
        let mut layers = vec![self.labels[node]];
        let mut v = node;
        loop {
            let below: Vec<usize> = self
                .edges
                .iter()
                .filter(|e| e.0 == v && members.contains(&e.1))
                .map(|e| e.1)
                .collect();
            match below.as_slice() {
                [] => break,
                [w] => {
                    v = *w;
                    layers.push(self.labels[v]);
                }
                _ => return None,
            }
        }
        (layers.len() == members.len()).then(|| ModuleDiagram {
            highest: self.labels[node],
            layers,
            kind: DiagramKind::Submodule,
        })
    }

    /// Nodes without an incoming edge.
    pub fn head(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| !self.edges.iter().any(|e| e.1 == v))
            .collect()
    }

    /// Nodes without an outgoing edge.
    pub fn socle(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| !self.edges.iter().any(|e| e.0 == v))
            .collect()
    }

    /// Composition multiplicity of L(ω_t).
    pub fn multiplicity(&self, t: Label) -> usize {
        self.labels.iter().filter(|&&l| l == t).count()
    }
}
