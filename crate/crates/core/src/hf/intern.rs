//! Global hash-consing table for [`HfSet`] nodes.
//!
//! Keys are the addresses of a node's (already interned) children. A parent
//! holds strong references to its children, so a key's addresses stay valid
//! for as long as the parent is alive. The table itself only holds weak
//! references; a node removes its own entry when it is dropped.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::hash::{BuildHasher, RandomState};
use std::sync::{Arc, LazyLock, Mutex, Weak};

use super::{HfSet, Node};

const SHARDS: usize = 32;

type Shard = Mutex<HashMap<Box<[usize]>, Weak<Node>>>;

struct Table {
    shards: Vec<Shard>,
    hasher: RandomState,
}

static TABLE: LazyLock<Table> = LazyLock::new(|| Table {
    shards: (0..SHARDS).map(|_| Mutex::new(HashMap::new())).collect(),
    hasher: RandomState::new(),
});

fn shard_for(key: &[usize]) -> &'static Shard {
    let table = &*TABLE;
    &table.shards[(table.hasher.hash_one(key) as usize) % SHARDS]
}

fn key_of(elems: &[HfSet]) -> Box<[usize]> {
    elems.iter().map(HfSet::addr).collect()
}

/// `elems` must already be strictly increasing in canonical order.
pub(super) fn intern(elems: Vec<HfSet>) -> HfSet {
    let key = key_of(&elems);
    let shard = shard_for(&key);
    let mut map = shard.lock().unwrap_or_else(|p| p.into_inner());
    if let Some(node) = map.get(&key).and_then(Weak::upgrade) {
        drop(map);
        // `elems` may hold the last references to some nodes; release them
        // only after the shard lock is gone.
        drop(elems);
        return HfSet(node);
    }
    let rank = elems.iter().map(|e| e.0.rank + 1).max().unwrap_or(0);
    let node = Arc::new(Node {
        elems: elems.into_boxed_slice(),
        rank,
    });
    // Any replaced entry is a dead weak pointer; dropping it never runs a
    // node destructor.
    map.insert(key, Arc::downgrade(&node));
    HfSet(node)
}

impl Drop for Node {
    fn drop(&mut self) {
        let key = key_of(&self.elems);
        let shard = shard_for(&key);
        let mut map = shard.lock().unwrap_or_else(|p| p.into_inner());
        // Another thread may already have re-interned the same key.
        if let Some(w) = map.get(&key) {
            if std::ptr::eq(w.as_ptr(), self as *const Node) {
                map.remove(&key);
            }
        }
        drop(map);
        release_children(std::mem::take(&mut self.elems));
    }
}

thread_local! {
    static PENDING: RefCell<Vec<HfSet>> = const { RefCell::new(Vec::new()) };
    static DRAINING: Cell<bool> = const { Cell::new(false) };
}

/// Drops child references without recursing once per nesting level: nested
/// node destructors only queue their children while an outer drain runs.
fn release_children(kids: Box<[HfSet]>) {
    if kids.is_empty() {
        return;
    }
    let queued = PENDING.try_with(|p| p.borrow_mut().extend(kids.into_vec()));
    if queued.is_err() {
        // Thread-local storage is being torn down; fall back to plain drops.
        return;
    }
    if DRAINING.with(|d| d.replace(true)) {
        return;
    }
    loop {
        let next = PENDING.with(|p| p.borrow_mut().pop());
        match next {
            Some(x) => drop(x),
            None => break,
        }
    }
    DRAINING.with(|d| d.set(false));
}

#[cfg(test)]
fn is_registered(elems: &[HfSet]) -> bool {
    let key = key_of(elems);
    let map = shard_for(&key).lock().unwrap();
    map.get(&key).is_some_and(|w| w.strong_count() > 0)
}
