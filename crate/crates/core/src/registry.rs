//! Search engines behind a common trait, looked up by name.
//!
//! An engine owns the root-of-unity arithmetic used by the search. `"sixth"` works in
//! the Eisenstein integers and only handles `q = 6`; `"generic"` reduces modulo the
//! cyclotomic polynomial and handles every `q`. `"auto"` picks the first registered
//! engine that supports the requested `q`.

use crate::error::{Error, Result};
use crate::ring::{GenericRing, SixthRing};
use crate::search::{run_pipeline, SearchConfig, SearchOutcome};

pub trait SearchEngine: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn supports(&self, q: u32) -> bool;
    fn run(&self, cfg: &SearchConfig) -> Result<SearchOutcome>;
}

pub struct SixthEngine;

impl SearchEngine for SixthEngine {
    fn name(&self) -> &'static str {
        "sixth"
    }

    fn summary(&self) -> &'static str {
        "Eisenstein-integer arithmetic, q = 6 only"
    }

    fn supports(&self, q: u32) -> bool {
        q == 6
    }

    fn run(&self, cfg: &SearchConfig) -> Result<SearchOutcome> {
        run_pipeline(&SixthRing, cfg)
    }
}

pub struct GenericEngine;

impl SearchEngine for GenericEngine {
    fn name(&self) -> &'static str {
        "generic"
    }

    fn summary(&self) -> &'static str {
        "reduction modulo the q-th cyclotomic polynomial, any even q"
    }

    fn supports(&self, q: u32) -> bool {
        q >= 2
    }

    fn run(&self, cfg: &SearchConfig) -> Result<SearchOutcome> {
        run_pipeline(&GenericRing::new(cfg.q)?, cfg)
    }
}

pub struct EngineRegistry {
    engines: Vec<Box<dyn SearchEngine>>,
}

impl EngineRegistry {
    pub fn empty() -> Self {
        EngineRegistry { engines: Vec::new() }
    }

    /// Adds an engine; a later engine with the same name replaces the earlier one.
    pub fn register(&mut self, engine: Box<dyn SearchEngine>) {
        self.engines.retain(|e| e.name() != engine.name());
        self.engines.push(engine);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SearchEngine> {
        self.engines.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    pub fn engines(&self) -> impl Iterator<Item = &dyn SearchEngine> {
        self.engines.iter().map(|e| e.as_ref())
    }

    pub fn select(&self, name: &str, q: u32) -> Result<&dyn SearchEngine> {
        if name == "auto" {
            return self
                .engines()
                .find(|e| e.supports(q))
                .ok_or_else(|| Error::UnknownEngine(format!("no engine supports q = {q}")));
        }
        let engine = self.get(name).ok_or_else(|| Error::UnknownEngine(name.to_string()))?;
        if !engine.supports(q) {
            return Err(Error::invalid(format!("engine {name} does not support q = {q}")));
        }
        Ok(engine)
    }

    pub fn run(&self, cfg: &SearchConfig) -> Result<SearchOutcome> {
        cfg.validate()?;
        self.select(&cfg.engine, cfg.q)?.run(cfg)
    }
}

impl Default for EngineRegistry {
    fn default() -> Self {
        let mut r = EngineRegistry::empty();
        r.register(Box::new(SixthEngine));
        r.register(Box::new(GenericEngine));
        r
    }
}

/// Runs a search with the engine named in the configuration.
pub fn run(cfg: &SearchConfig) -> Result<SearchOutcome> {
    EngineRegistry::default().run(cfg)
}
