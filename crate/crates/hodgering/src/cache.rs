//! Build-once, share-forever per-degree caches.
//!
//! Cached values are immutable behind `Arc`, so concurrent readers are safe;
//! the mutex only guards first construction.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

pub struct Cache<K, V> {
    map: OnceLock<Mutex<BTreeMap<K, Arc<V>>>>,
}

impl<K: Ord + Clone, V> Cache<K, V> {
    pub const fn new() -> Self {
        Cache {
            map: OnceLock::new(),
        }
    }

    pub fn get_or_insert(&self, key: K, make: impl FnOnce() -> V) -> Arc<V> {
        let m = self.map.get_or_init(|| Mutex::new(BTreeMap::new()));
        let mut guard = m.lock().expect("cache mutex poisoned");
        if let Some(v) = guard.get(&key) {
            return v.clone();
        }
        let v = Arc::new(make());
        guard.insert(key, v.clone());
        v
    }
}
