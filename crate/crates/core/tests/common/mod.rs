#![allow(dead_code)]

use paracase::random::Gen;
use paracase::{make_bot, make_internal_entailment, make_probe, make_top, InnerFormula, OuterFormula, Probe, Signature};
use proptest::prelude::*;
use proptest::sample::select;

pub const VARS: [&str; 3] = ["p", "q", "r"];

pub fn sig(n: usize) -> Signature {
    Signature::new(VARS.iter().take(n).copied()).unwrap()
}

pub fn inner(vars: &'static [&'static str], depth: u32) -> impl Strategy<Value = InnerFormula> {
    let leaf = prop_oneof![
        8 => select(vars).prop_map(InnerFormula::var),
        1 => Just(make_top()),
        1 => Just(make_bot()),
    ];
    leaf.prop_recursive(depth, 48, 2, |sub| {
        prop_oneof![
            3 => sub.clone().prop_map(InnerFormula::neg),
            3 => sub.clone().prop_map(InnerFormula::delta),
            3 => (sub.clone(), sub.clone()).prop_map(|(a, b)| a.and(b)),
            3 => (sub.clone(), sub.clone()).prop_map(|(a, b)| a.or(b)),
            1 => (select(Probe::ALL.to_vec()), sub.clone()).prop_map(|(k, a)| make_probe(k, a)),
            1 => (sub.clone(), sub).prop_map(|(a, b)| make_internal_entailment(a, b)),
        ]
    })
}

pub fn classical(vars: &'static [&'static str], depth: u32) -> impl Strategy<Value = InnerFormula> {
    select(vars).prop_map(InnerFormula::var).prop_recursive(depth, 32, 2, |sub| {
        prop_oneof![
            sub.clone().prop_map(InnerFormula::neg),
            (sub.clone(), sub.clone()).prop_map(|(a, b)| a.and(b)),
            (sub.clone(), sub).prop_map(|(a, b)| a.or(b)),
        ]
    })
}

pub fn outer(vars: &'static [&'static str]) -> impl Strategy<Value = OuterFormula> {
    inner(vars, 2).prop_map(OuterFormula::belief).prop_recursive(4, 24, 2, |sub| {
        prop_oneof![
            sub.clone().prop_map(OuterFormula::gneg),
            sub.clone().prop_map(OuterFormula::gdelta),
            (sub.clone(), sub.clone()).prop_map(|(a, b)| a.gand(b)),
            (sub.clone(), sub.clone()).prop_map(|(a, b)| a.gor(b)),
            (sub.clone(), sub.clone()).prop_map(|(a, b)| a.gimp(b)),
            (sub.clone(), sub).prop_map(|(a, b)| a.gcoimp(b)),
        ]
    })
}

/// A seeded generator, so that models can be drawn inside properties.
pub fn gen() -> impl Strategy<Value = Gen> {
    any::<u64>().prop_map(Gen::new)
}
