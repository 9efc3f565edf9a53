//! Process-wide interning of variable and relation names.
//!
//! Formulas refer to variables and relation symbols by small integer ids so that evaluation can
//! index environments directly. The table only ever grows; ids are stable for the life of the
//! process and never observable in serialized output (names are printed instead).

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Default)]
struct Table {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn table() -> &'static RwLock<Table> {
    static TABLE: OnceLock<RwLock<Table>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

fn intern(name: &str) -> u32 {
    if let Some(&id) = table().read().expect("symbol table poisoned").ids.get(name) {
        return id;
    }
    let mut t = table().write().expect("symbol table poisoned");
    if let Some(&id) = t.ids.get(name) {
        return id;
    }
    let id = t.names.len() as u32;
    t.names.push(name.to_owned());
    t.ids.insert(name.to_owned(), id);
    id
}

fn name_of(id: u32) -> String {
    table().read().expect("symbol table poisoned").names[id as usize].clone()
}

/// A variable name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(intern(name))
    }

    /// Variable `{prefix}{index}`, the naming scheme used by all formula generators.
    pub fn indexed(prefix: &str, index: usize) -> Self {
        Var::new(&format!("{prefix}{index}"))
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        name_of(self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A relation symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u32);

impl Sym {
    pub fn new(name: &str) -> Self {
        Sym(intern(name))
    }

    pub fn name(self) -> String {
        name_of(self.0)
    }

    /// The edge relation of graphs and digraphs.
    pub fn edge() -> Self {
        Sym::new("E")
    }

    /// The strict order relation of linear orders.
    pub fn less() -> Self {
        Sym::new("<")
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
