//! Tournaments carrying named vertices and named blocks.
//!
//! Role names starting with an ASCII uppercase letter denote blocks (vertex
//! sets such as `A` or `S`); any other name denotes a single vertex (`x`,
//! `u3`, ...). Vertex roles are pairwise disjoint, and so are block roles; a
//! named vertex may also belong to a block.

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Role {
    pub name: String,
    pub members: VertexSet,
}

impl Role {
    pub fn is_block(&self) -> bool {
        is_block_name(&self.name)
    }
}

pub fn is_block_name(name: &str) -> bool {
    name.starts_with(|c: char| c.is_ascii_uppercase())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledTournament {
    pub tournament: Tournament,
    roles: Vec<Role>,
}

impl LabeledTournament {
    pub fn new(tournament: Tournament) -> Self {
        LabeledTournament {
            tournament,
            roles: Vec::new(),
        }
    }

    /// Adds a role, keeping the insertion order for serialization.
    pub fn with_role(mut self, name: &str, members: VertexSet) -> Result<Self> {
        self.add_role(name, members)?;
        Ok(self)
    }

    pub fn add_role(&mut self, name: &str, members: VertexSet) -> Result<()> {
        let invalid = |message: &str| Error::InvalidRole {
            name: name.to_string(),
            message: message.to_string(),
        };
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(invalid("names must be non-empty and contain no whitespace"));
        }
        if self.roles.iter().any(|r| r.name == name) {
            return Err(invalid("defined twice"));
        }
        if !members.is_subset(self.tournament.vertices()) {
            return Err(invalid("member outside the vertex range"));
        }
        let block = is_block_name(name);
        if !block && members.len() != 1 {
            return Err(invalid("vertex roles name exactly one vertex"));
        }
        if let Some(other) = self
            .roles
            .iter()
            .find(|r| r.is_block() == block && !r.members.is_disjoint(members))
        {
            return Err(invalid(&format!("overlaps role {:?}", other.name)));
        }
        self.roles.push(Role {
            name: name.to_string(),
            members,
        });
        Ok(())
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, name: &str) -> Option<VertexSet> {
        self.roles.iter().find(|r| r.name == name).map(|r| r.members)
    }

    /// Index of a named vertex.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.role(name).filter(|m| m.len() == 1).and_then(VertexSet::first)
    }

    /// Like [`vertex`](Self::vertex) but panics on unknown names; for fixtures.
    pub fn v(&self, name: &str) -> usize {
        self.vertex(name)
            .unwrap_or_else(|| panic!("no vertex role {name:?}"))
    }

    /// Like [`role`](Self::role) but panics on unknown names; for fixtures.
    pub fn block(&self, name: &str) -> VertexSet {
        self.role(name)
            .unwrap_or_else(|| panic!("no role {name:?}"))
    }

    /// Resolves a vertex given either as an index or as a vertex role name.
    pub fn resolve(&self, token: &str) -> Option<usize> {
        match token.parse::<usize>() {
            Ok(i) if i < self.tournament.order() => Some(i),
            Ok(_) => None,
            Err(_) => self.vertex(token),
        }
    }
}

impl From<Tournament> for LabeledTournament {
    fn from(t: Tournament) -> Self {
        LabeledTournament::new(t)
    }
}
