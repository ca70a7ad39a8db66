//! Central handle bundling the algebra selector with the per-process caches
//! (Serre components, root vectors).  All checks hang off this type.

use crate::algebra::{Element, Word};
use crate::coeffs::CartanMono;
use crate::lattice::AlgebraConfig;
use crate::oracle::ComponentBasis;
use crate::qrat::QRat;
use crate::tensor::Slot;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Key for the memoized root vectors: variant plus the signed root weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootVectorKey {
    pub variant: crate::cwbasis::RootVariant,
    /// -1, 0, +1: the alpha part of the root weight.
    pub alpha: i8,
    /// The delta part of the root weight.
    pub delta: i64,
}

pub struct Engine {
    pub cfg: AlgebraConfig,
    pub(crate) components: RwLock<HashMap<(bool, (usize, usize)), Arc<ComponentBasis>>>,
    pub(crate) root_vectors: RwLock<HashMap<RootVectorKey, Arc<Element>>>,
    /// Normal forms of single words (the leftmost-first strategy only).
    pub(crate) word_nf: RwLock<HashMap<Word, Arc<Element>>>,
    /// Fully reduced tensor slots.
    pub(crate) slot_reductions: RwLock<HashMap<(CartanMono, Word), Arc<Vec<(Slot, QRat)>>>>,
}

impl Engine {
    pub fn new(cfg: AlgebraConfig) -> Self {
        Engine {
            cfg,
            components: RwLock::new(HashMap::new()),
            root_vectors: RwLock::new(HashMap::new()),
            word_nf: RwLock::new(HashMap::new()),
            slot_reductions: RwLock::new(HashMap::new()),
        }
    }

    pub fn theta(&self) -> u8 {
        self.cfg.theta()
    }
}
