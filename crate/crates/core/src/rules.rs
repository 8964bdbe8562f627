//! Rule bundles for the basic, general and plain model variants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::address::Address;
use crate::data::DataValue;
use crate::scalar::Scalar;
use crate::state::CellState;
use crate::topology::Topology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Stored pointers are used directly as effective addresses.
    Basic,
    /// Stored address bases pass through address modifiers every generation.
    General,
    /// No pointer part; addresses are derived from `(i, q)`.
    Plain,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Basic => "basic",
            Variant::General => "general",
            Variant::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "basic" => Some(Variant::Basic),
            "general" => Some(Variant::General),
            "plain" => Some(Variant::Plain),
            _ => None,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Global constants visible to every rule (`n`, `delta`, `A`, `B`, ...).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn set(&mut self, key: &str, value: i64) {
        self.0.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<i64> {
        self.0.get(key).copied()
    }

    /// Looks up a parameter that the ruleset itself installed.
    pub fn req(&self, key: &str) -> i64 {
        self.get(key)
            .unwrap_or_else(|| panic!("rule parameter {key:?} not set"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

/// Everything a data or pointer rule may read while computing a cell's
/// next state. All states come from the generation-`time` configuration.
pub struct RuleContext<'a, S: Scalar> {
    pub index: usize,
    pub state: &'a CellState<S>,
    pub neighbors: &'a [CellState<S>],
    pub effective: &'a [Address],
    pub stencil: &'a [CellState<S>],
    pub time: u64,
    pub params: &'a Params,
    pub topology: Topology,
}

impl<'a, S: Scalar> RuleContext<'a, S> {
    pub fn n(&self) -> usize {
        self.topology.len()
    }

    pub fn d(&self) -> &DataValue<S> {
        &self.state.data
    }

    /// Data of the k-th global neighbor.
    pub fn dn(&self, k: usize) -> &DataValue<S> {
        &self.neighbors[k].data
    }

    pub fn coords(&self) -> (usize, usize) {
        self.topology.coords(self.index)
    }
}

/// Inputs of an address modifier or pointer function.
pub struct AddressContext<'a, S: Scalar> {
    pub index: usize,
    pub state: &'a CellState<S>,
    pub stencil: &'a [CellState<S>],
    pub time: u64,
    pub params: &'a Params,
    pub topology: Topology,
}

impl<'a, S: Scalar> AddressContext<'a, S> {
    pub fn n(&self) -> usize {
        self.topology.len()
    }

    pub fn coords(&self) -> (usize, usize) {
        self.topology.coords(self.index)
    }
}

pub type DataRule<S> =
    Arc<dyn Fn(&RuleContext<'_, S>) -> Result<DataValue<S>, String> + Send + Sync>;
pub type PointerRule<S> =
    Arc<dyn Fn(&RuleContext<'_, S>) -> Result<Vec<Address>, String> + Send + Sync>;
pub type AddressRule<S> = Arc<dyn Fn(&AddressContext<'_, S>) -> Vec<Address> + Send + Sync>;

/// A complete automaton definition: rules, arm counts, stencil and constants.
#[derive(Clone)]
pub struct RuleSet<S: Scalar> {
    pub name: String,
    pub variant: Variant,
    /// Number of pointers stored per cell (0 for the plain model).
    pub stored_arms: usize,
    /// Number of global neighbors read per generation (`m`).
    pub arms: usize,
    /// Fixed local neighbors `W`, as relative addresses.
    pub stencil: Vec<Address>,
    pub params: Params,
    data_rule: DataRule<S>,
    pointer_rule: Option<PointerRule<S>>,
    /// Address modifiers (general) or pointer function (plain).
    address_rule: Option<AddressRule<S>>,
}

impl<S: Scalar> fmt::Debug for RuleSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleSet")
            .field("name", &self.name)
            .field("variant", &self.variant)
            .field("stored_arms", &self.stored_arms)
            .field("arms", &self.arms)
            .field("stencil", &self.stencil)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

fn lift_data<S: Scalar>(
    f: impl Fn(&RuleContext<'_, S>) -> DataValue<S> + Send + Sync + 'static,
) -> DataRule<S> {
    Arc::new(move |ctx| Ok(f(ctx)))
}

fn lift_pointer<S: Scalar>(
    f: impl Fn(&RuleContext<'_, S>) -> Vec<Address> + Send + Sync + 'static,
) -> PointerRule<S> {
    Arc::new(move |ctx| Ok(f(ctx)))
}

impl<S: Scalar> RuleSet<S> {
    /// Basic model with `arms` stored pointers.
    pub fn basic(
        name: &str,
        arms: usize,
        data: impl Fn(&RuleContext<'_, S>) -> DataValue<S> + Send + Sync + 'static,
        pointer: impl Fn(&RuleContext<'_, S>) -> Vec<Address> + Send + Sync + 'static,
    ) -> Self {
        RuleSet {
            name: name.to_string(),
            variant: Variant::Basic,
            stored_arms: arms,
            arms,
            stencil: Vec::new(),
            params: Params::new(),
            data_rule: lift_data(data),
            pointer_rule: Some(lift_pointer(pointer)),
            address_rule: None,
        }
    }

    /// General model: `stored` address bases are turned into `arms`
    /// effective addresses by `modifier` at the start of each generation.
    pub fn general(
        name: &str,
        stored: usize,
        arms: usize,
        data: impl Fn(&RuleContext<'_, S>) -> DataValue<S> + Send + Sync + 'static,
        pointer: impl Fn(&RuleContext<'_, S>) -> Vec<Address> + Send + Sync + 'static,
        modifier: impl Fn(&AddressContext<'_, S>) -> Vec<Address> + Send + Sync + 'static,
    ) -> Self {
        RuleSet {
            name: name.to_string(),
            variant: Variant::General,
            stored_arms: stored,
            arms,
            stencil: Vec::new(),
            params: Params::new(),
            data_rule: lift_data(data),
            pointer_rule: Some(lift_pointer(pointer)),
            address_rule: Some(Arc::new(modifier)),
        }
    }

    /// Plain model: the pointer function sees only the cell index and state.
    pub fn plain(
        name: &str,
        arms: usize,
        data: impl Fn(&RuleContext<'_, S>) -> DataValue<S> + Send + Sync + 'static,
        pointer_fn: impl Fn(usize, &CellState<S>, &Params, Topology) -> Vec<Address>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        RuleSet {
            name: name.to_string(),
            variant: Variant::Plain,
            stored_arms: 0,
            arms,
            stencil: Vec::new(),
            params: Params::new(),
            data_rule: lift_data(data),
            pointer_rule: None,
            address_rule: Some(Arc::new(move |ctx: &AddressContext<'_, S>| {
                pointer_fn(ctx.index, ctx.state, ctx.params, ctx.topology)
            })),
        }
    }

    pub fn with_stencil(mut self, stencil: Vec<Address>) -> Self {
        self.stencil = stencil;
        self
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.set(key, value);
        self
    }

    /// Replaces the data rule with a fallible one.
    pub fn with_try_data(
        mut self,
        f: impl Fn(&RuleContext<'_, S>) -> Result<DataValue<S>, String> + Send + Sync + 'static,
    ) -> Self {
        self.data_rule = Arc::new(f);
        self
    }

    pub fn with_try_pointer(
        mut self,
        f: impl Fn(&RuleContext<'_, S>) -> Result<Vec<Address>, String> + Send + Sync + 'static,
    ) -> Self {
        self.pointer_rule = Some(Arc::new(f));
        self
    }

    /// Absolute indices of the fixed local neighbors of cell `i`.
    pub fn stencil_targets(&self, topology: Topology, i: usize) -> Vec<usize> {
        self.stencil.iter().map(|&a| topology.resolve(i, a)).collect()
    }

    /// Effective addresses used by cell `i` this generation.
    pub fn effective_addresses(
        &self,
        topology: Topology,
        i: usize,
        state: &CellState<S>,
        stencil: &[CellState<S>],
        time: u64,
    ) -> Vec<Address> {
        match self.variant {
            Variant::Basic => state.pointers.clone(),
            Variant::General | Variant::Plain => {
                let ctx = AddressContext {
                    index: i,
                    state,
                    stencil,
                    time,
                    params: &self.params,
                    topology,
                };
                let rule = self.address_rule.as_ref().expect("variant has an address rule");
                rule(&ctx)
            }
        }
    }

    /// Computes `(d', P')` for cell `i` from already gathered inputs.
    pub fn evaluate(
        &self,
        topology: Topology,
        i: usize,
        state: &CellState<S>,
        neighbors: &[CellState<S>],
        effective: &[Address],
        stencil: &[CellState<S>],
        time: u64,
    ) -> Result<CellState<S>, String> {
        let ctx = RuleContext {
            index: i,
            state,
            neighbors,
            effective,
            stencil,
            time,
            params: &self.params,
            topology,
        };
        let data = (self.data_rule)(&ctx)?;
        let pointers = match &self.pointer_rule {
            Some(rule) => rule(&ctx)?,
            None => Vec::new(),
        };
        if pointers.len() != self.stored_arms {
            return Err(format!(
                "pointer rule produced {} pointers, expected {}",
                pointers.len(),
                self.stored_arms
            ));
        }
        Ok(CellState { data, pointers })
    }
}
