//! Random well-formed formulas and ill-typed mutants, for property tests
//! and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::syntax::{max_opt, Index, ModalFormula, PropFormula};

/// Shape parameters for the generators.
#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Upper bound on the number of nodes.
    pub max_size: usize,
    /// Largest index the generator picks on its own. Nesting can force
    /// larger ones, since every index must exceed the indices inside it.
    pub max_index: u32,
    pub atoms: Vec<String>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_size: 8,
            max_index: 4,
            atoms: vec!["p".into(), "q".into(), "r".into()],
        }
    }
}

fn pick_index<R: Rng>(rng: &mut R, floor: u32, cap: u32) -> u32 {
    rng.gen_range(floor..=cap.max(floor))
}

/// A random well-formed typed propositional formula with at most
/// `cfg.max_size` nodes.
pub fn random_prop<R: Rng>(rng: &mut R, cfg: &GenConfig) -> PropFormula {
    let size = rng.gen_range(1..=cfg.max_size.max(1));
    prop_of_size(rng, cfg, size)
}

fn prop_of_size<R: Rng>(rng: &mut R, cfg: &GenConfig, size: usize) -> PropFormula {
    if size <= 2 {
        return match rng.gen_range(0..6) {
            0 => PropFormula::Top,
            1 => PropFormula::Bot,
            _ => PropFormula::Atom(cfg.atoms.choose(rng).expect("atoms").clone()),
        };
    }
    let left = rng.gen_range(1..size - 1);
    let (a, b) = (
        prop_of_size(rng, cfg, left),
        prop_of_size(rng, cfg, size - 1 - left),
    );
    match rng.gen_range(0..3) {
        0 => PropFormula::and(a, b),
        1 => PropFormula::or(a, b),
        _ => {
            let floor = max_opt(a.max_index(), b.max_index()).map_or(1, |m| m.get() + 1);
            PropFormula::imp(pick_index(rng, floor, cfg.max_index), a, b)
        }
    }
}

/// A random well-formed typed modal formula with at most `cfg.max_size`
/// nodes.
pub fn random_modal<R: Rng>(rng: &mut R, cfg: &GenConfig) -> ModalFormula {
    let size = rng.gen_range(1..=cfg.max_size.max(1));
    modal_of_size(rng, cfg, size)
}

fn modal_of_size<R: Rng>(rng: &mut R, cfg: &GenConfig, size: usize) -> ModalFormula {
    if size == 1 {
        return match rng.gen_range(0..6) {
            0 => ModalFormula::Top,
            1 => ModalFormula::Bot,
            _ => ModalFormula::Atom(cfg.atoms.choose(rng).expect("atoms").clone()),
        };
    }
    if size == 2 || rng.gen_bool(0.3) {
        let a = modal_of_size(rng, cfg, size - 1);
        return if rng.gen_bool(0.7) {
            let floor = a.max_index().map_or(0, |m| m.get() + 1);
            ModalFormula::boxed(pick_index(rng, floor, cfg.max_index), a)
        } else {
            ModalFormula::not(a)
        };
    }
    let left = rng.gen_range(1..size - 1);
    let (a, b) = (
        modal_of_size(rng, cfg, left),
        modal_of_size(rng, cfg, size - 1 - left),
    );
    match rng.gen_range(0..3) {
        0 => ModalFormula::and(a, b),
        1 => ModalFormula::or(a, b),
        _ => ModalFormula::imp(a, b),
    }
}

fn count_imps(f: &PropFormula) -> usize {
    match f {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => 0,
        PropFormula::And(a, b) | PropFormula::Or(a, b) => count_imps(a) + count_imps(b),
        PropFormula::Imp(_, a, b) => 1 + count_imps(a) + count_imps(b),
    }
}

/// Rewrites the index of one implication so that it no longer exceeds the
/// indices inside it (or becomes 0 when there are none). `None` when `f`
/// has no implication.
pub fn mutate_index<R: Rng>(rng: &mut R, f: &PropFormula) -> Option<PropFormula> {
    let k = count_imps(f);
    if k == 0 {
        return None;
    }
    let target = rng.gen_range(0..k);
    let mut seen = 0;
    Some(mutate_at(rng, f, target, &mut seen))
}

fn mutate_at<R: Rng>(rng: &mut R, f: &PropFormula, target: usize, seen: &mut usize) -> PropFormula {
    match f {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => f.clone(),
        PropFormula::And(a, b) => {
            let a = mutate_at(rng, a, target, seen);
            PropFormula::and(a, mutate_at(rng, b, target, seen))
        }
        PropFormula::Or(a, b) => {
            let a = mutate_at(rng, a, target, seen);
            PropFormula::or(a, mutate_at(rng, b, target, seen))
        }
        PropFormula::Imp(n, a, b) => {
            let here = *seen == target;
            *seen += 1;
            let a2 = mutate_at(rng, a, target, seen);
            let b2 = mutate_at(rng, b, target, seen);
            let n = if here {
                let inner = max_opt(a.max_index(), b.max_index()).map_or(0, Index::get);
                Index(rng.gen_range(0..=inner))
            } else {
                *n
            };
            PropFormula::Imp(n, Box::new(a2), Box::new(b2))
        }
    }
}
