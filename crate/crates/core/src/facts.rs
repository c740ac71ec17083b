//! The four-slot fact table linking dual shellability, the strong
//! gcd-condition, sequential Cohen-Macaulayness of the dual and Golodness,
//! with provenance for every entry.
//!
//! Slots are filled by computation where the crate can decide them, then
//! closed under the known implications (and their contrapositives). Golodness
//! is never computed directly: it is inferred, equated with the other slots for
//! flag complexes, or left out of scope.

use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::homology::{sequential_witness, FieldSpec};
use crate::order::{find_shelling_order, find_strong_gcd_order, SearchConfig};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    DualShellable,
    StrongGcd,
    DualSeqCm,
    Golod,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::DualShellable, Slot::StrongGcd, Slot::DualSeqCm, Slot::Golod];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::DualShellable => "dual shellable",
            Slot::StrongGcd => "strong gcd",
            Slot::DualSeqCm => "dual seq-CM",
            Slot::Golod => "Golod",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Truth {
    True,
    False,
    Unknown,
    OutOfScope,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn from_option(b: Option<bool>) -> Self {
        b.map_or(Truth::Unknown, Truth::from_bool)
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Truth::True => Some(true),
            Truth::False => Some(false),
            _ => None,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Dual shellable ⇒ strong gcd-condition (needs no ghost vertices in the complex).
    ShellableImpliesStrongGcd,
    /// Shellable ⇒ sequentially Cohen-Macaulay, applied to the dual.
    ShellableImpliesSeqCm,
    /// Strong gcd-condition ⇒ Golod.
    StrongGcdImpliesGolod,
    /// Dual sequentially Cohen-Macaulay ⇒ Golod.
    SeqCmImpliesGolod,
    /// For flag complexes all four slots agree.
    FlagEquivalence,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::ShellableImpliesStrongGcd => "shellable=>sgcd",
            Rule::ShellableImpliesSeqCm => "shellable=>seqCM",
            Rule::StrongGcdImpliesGolod => "sgcd=>Golod",
            Rule::SeqCmImpliesGolod => "seqCM=>Golod",
            Rule::FlagEquivalence => "flag-equivalence",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Provenance {
    Unset,
    Computed,
    Inferred { rule: Rule, contrapositive: bool },
    FixtureClaim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub value: Truth,
    pub provenance: Provenance,
    /// A truth value asserted for a fixture but not reproduced here.
    pub paper_claim: Option<bool>,
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.value {
            Truth::True => "T",
            Truth::False => "F",
            Truth::Unknown => "?",
            Truth::OutOfScope => "out-of-scope",
        };
        f.write_str(v)?;
        if let Provenance::Inferred { rule, contrapositive } = self.provenance {
            write!(
                f,
                "-inferred({rule}{})",
                if contrapositive { ", contrapositive" } else { "" }
            )?;
        }
        if let Some(claim) = self.paper_claim {
            write!(f, "[claimed {}]", if claim { "T" } else { "F" })?;
        }
        Ok(())
    }
}

/// Two derivations disagree about a slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub slot: Slot,
    pub existing: Truth,
    pub implied: bool,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactTable {
    facts: [Fact; 4],
    is_flag: bool,
    has_ghost_vertices: bool,
    /// Sequential Cohen-Macaulayness of the dual per field; `None` where undefined.
    pub dual_seq_cm_by_field: Vec<(FieldSpec, Option<bool>)>,
    conflicts: Vec<Conflict>,
}

const IMPLICATIONS: [(Slot, Slot, Rule); 4] = [
    (Slot::DualShellable, Slot::StrongGcd, Rule::ShellableImpliesStrongGcd),
    (Slot::DualShellable, Slot::DualSeqCm, Rule::ShellableImpliesSeqCm),
    (Slot::StrongGcd, Slot::Golod, Rule::StrongGcdImpliesGolod),
    (Slot::DualSeqCm, Slot::Golod, Rule::SeqCmImpliesGolod),
];

impl FactTable {
    /// An empty table: three unknown slots and an out-of-scope Golod slot.
    pub fn new(is_flag: bool, has_ghost_vertices: bool) -> Self {
        let unknown = Fact {
            value: Truth::Unknown,
            provenance: Provenance::Unset,
            paper_claim: None,
        };
        let golod = Fact {
            value: Truth::OutOfScope,
            ..unknown.clone()
        };
        Self {
            facts: [unknown.clone(), unknown.clone(), unknown, golod],
            is_flag,
            has_ghost_vertices,
            dual_seq_cm_by_field: Vec::new(),
            conflicts: Vec::new(),
        }
    }

    pub fn get(&self, slot: Slot) -> &Fact {
        &self.facts[slot.index()]
    }

    pub fn value(&self, slot: Slot) -> Truth {
        self.get(slot).value
    }

    pub fn is_flag(&self) -> bool {
        self.is_flag
    }

    pub fn conflicts(&self) -> &[Conflict] {
        &self.conflicts
    }

    pub fn set_computed(&mut self, slot: Slot, value: Truth) {
        let fact = &mut self.facts[slot.index()];
        fact.value = value;
        fact.provenance = if matches!(value, Truth::True | Truth::False) {
            Provenance::Computed
        } else {
            Provenance::Unset
        };
    }

    /// Records an externally asserted value without adopting it.
    pub fn with_paper_claim(mut self, slot: Slot, claim: bool) -> Self {
        let fact = &mut self.facts[slot.index()];
        fact.paper_claim = Some(claim);
        if fact.value == Truth::OutOfScope {
            fact.provenance = Provenance::FixtureClaim;
        }
        self
    }

    /// Slots whose decided value contradicts a recorded claim.
    pub fn claim_mismatches(&self) -> Vec<Slot> {
        Slot::ALL
            .into_iter()
            .filter(|&s| {
                let f = self.get(s);
                matches!((f.value.as_bool(), f.paper_claim), (Some(v), Some(c)) if v != c)
            })
            .collect()
    }

    fn infer(&mut self, slot: Slot, value: bool, rule: Rule, contrapositive: bool) -> bool {
        let fact = &mut self.facts[slot.index()];
        match fact.value.as_bool() {
            Some(held) => {
                if held != value {
                    let c = Conflict {
                        slot,
                        existing: fact.value,
                        implied: value,
                        rule,
                    };
                    if !self.conflicts.contains(&c) {
                        self.conflicts.push(c);
                    }
                }
                false
            }
            None => {
                fact.value = Truth::from_bool(value);
                fact.provenance = Provenance::Inferred { rule, contrapositive };
                true
            }
        }
    }

    /// Applies every implication until nothing changes. Decided slots are never overwritten.
    pub fn close(&mut self) {
        loop {
            let mut changed = false;
            for (premise, conclusion, rule) in IMPLICATIONS {
                if rule == Rule::ShellableImpliesStrongGcd && self.has_ghost_vertices {
                    continue;
                }
                if self.value(premise) == Truth::True {
                    changed |= self.infer(conclusion, true, rule, false);
                }
                if self.value(conclusion) == Truth::False {
                    changed |= self.infer(premise, false, rule, true);
                }
            }
            if self.is_flag {
                for source in Slot::ALL {
                    if let Some(v) = self.value(source).as_bool() {
                        for target in Slot::ALL {
                            changed |= self.infer(target, v, Rule::FlagEquivalence, false);
                        }
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }
}

impl fmt::Display for FactTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<16} {:<40} | {:<12} {}",
            "dual shellable",
            self.get(Slot::DualShellable),
            "strong gcd",
            self.get(Slot::StrongGcd)
        )?;
        writeln!(
            f,
            "{:<16} {:<40} | {:<12} {}",
            "dual seq-CM",
            self.get(Slot::DualSeqCm),
            "Golod",
            self.get(Slot::Golod)
        )?;
        for c in &self.conflicts {
            writeln!(
                f,
                "conflict: {} held {:?} but {} implies {}",
                c.slot, c.existing, c.rule, c.implied
            )?;
        }
        Ok(())
    }
}

/// Decides the three combinatorial and homological slots for `c`, then closes the table.
///
/// Sequential Cohen-Macaulayness of the dual counts as true (false) only when it
/// holds (fails) over every requested field; a field-dependent answer stays unknown.
pub fn build_fact_table(c: &Complex, fields: &[FieldSpec], config: &SearchConfig) -> FactTable {
    let dual = c.alexander_dual();
    let mut table = FactTable::new(c.is_flag(), c.has_ghost_vertices());
    table.set_computed(
        Slot::DualShellable,
        Truth::from_option(find_shelling_order(&dual, config).exists()),
    );
    table.set_computed(
        Slot::StrongGcd,
        Truth::from_option(find_strong_gcd_order(c, config).exists()),
    );
    if !dual.is_void() {
        table.dual_seq_cm_by_field = fields
            .iter()
            .map(|&f| (f, Some(sequential_witness(&dual, f).is_none())))
            .collect();
        let verdicts: Vec<bool> = table.dual_seq_cm_by_field.iter().filter_map(|(_, v)| *v).collect();
        let seq_cm = if !verdicts.is_empty() && verdicts.iter().all(|&v| v) {
            Truth::True
        } else if !verdicts.is_empty() && verdicts.iter().all(|&v| !v) {
            Truth::False
        } else {
            Truth::Unknown
        };
        table.set_computed(Slot::DualSeqCm, seq_cm);
    } else {
        table.dual_seq_cm_by_field = fields.iter().map(|&f| (f, None)).collect();
    }
    table.close();
    table
}
