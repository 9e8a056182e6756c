//! Statement identifiers and the suite runner.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::group::Group;
use crate::verify::context::Analysis;
use crate::verify::witness::Verdict;

/// The checkable statements, identified by frozen id strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    Lemma2_1_1,
    Lemma2_1_2,
    Lemma2_1_3,
    Lemma2_1_4,
    Lemma2_1_5,
    Lemma2_1_6,
    Lemma2_2,
    Lemma2_3,
    Lemma2_4,
    Lemma2_5,
    Lemma2_6,
    Lemma2_7,
    Lemma3_1,
    Lemma3_2,
    Prop3_3,
    TheoremA,
    Theorem3_5,
    Lemma3_6,
    TheoremB,
    Lemma4_1,
    Lemma4_2,
    Lemma4_3,
    Theorem4_4,
    Theorem4_5,
    TheoremC,
}

impl Statement {
    /// Every statement, in suite order.
    pub const ALL: [Statement; 25] = [
        Statement::Lemma2_1_1,
        Statement::Lemma2_1_2,
        Statement::Lemma2_1_3,
        Statement::Lemma2_1_4,
        Statement::Lemma2_1_5,
        Statement::Lemma2_1_6,
        Statement::Lemma2_2,
        Statement::Lemma2_3,
        Statement::Lemma2_4,
        Statement::Lemma2_5,
        Statement::Lemma2_6,
        Statement::Lemma2_7,
        Statement::Lemma3_1,
        Statement::Lemma3_2,
        Statement::Prop3_3,
        Statement::TheoremA,
        Statement::Theorem3_5,
        Statement::Lemma3_6,
        Statement::TheoremB,
        Statement::Lemma4_1,
        Statement::Lemma4_2,
        Statement::Lemma4_3,
        Statement::Theorem4_4,
        Statement::Theorem4_5,
        Statement::TheoremC,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::Lemma2_1_1 => "Lemma2.1.1",
            Statement::Lemma2_1_2 => "Lemma2.1.2",
            Statement::Lemma2_1_3 => "Lemma2.1.3",
            Statement::Lemma2_1_4 => "Lemma2.1.4",
            Statement::Lemma2_1_5 => "Lemma2.1.5",
            Statement::Lemma2_1_6 => "Lemma2.1.6",
            Statement::Lemma2_2 => "Lemma2.2",
            Statement::Lemma2_3 => "Lemma2.3",
            Statement::Lemma2_4 => "Lemma2.4",
            Statement::Lemma2_5 => "Lemma2.5",
            Statement::Lemma2_6 => "Lemma2.6",
            Statement::Lemma2_7 => "Lemma2.7",
            Statement::Lemma3_1 => "Lemma3.1",
            Statement::Lemma3_2 => "Lemma3.2",
            Statement::Prop3_3 => "Prop3.3",
            Statement::TheoremA => "TheoremA",
            Statement::Theorem3_5 => "Theorem3.5",
            Statement::Lemma3_6 => "Lemma3.6",
            Statement::TheoremB => "TheoremB",
            Statement::Lemma4_1 => "Lemma4.1",
            Statement::Lemma4_2 => "Lemma4.2",
            Statement::Lemma4_3 => "Lemma4.3",
            Statement::Theorem4_4 => "Theorem4.4",
            Statement::Theorem4_5 => "Theorem4.5",
            Statement::TheoremC => "TheoremC",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Statement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown statement id {0:?}")]
pub struct UnknownStatement(pub String);

impl FromStr for Statement {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .iter()
            .find(|st| st.id() == s)
            .copied()
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

/// Runs the selected statement checks against one group, in suite order.
pub fn run_suite(g: &Group, analysis: &Analysis, selection: &[Statement]) -> Vec<Verdict> {
    use crate::verify::{graph_lemmas, real_lemmas, twopart_lemmas};
    let mut ordered: Vec<Statement> = Statement::ALL
        .iter()
        .filter(|s| selection.contains(s))
        .copied()
        .collect();
    ordered.dedup();
    ordered
        .into_iter()
        .map(|statement| match statement {
            Statement::Lemma2_1_1 => real_lemmas::check_lemma_2_1_1(g, analysis),
            Statement::Lemma2_1_2 => real_lemmas::check_lemma_2_1_2(g, analysis),
            Statement::Lemma2_1_3 => real_lemmas::check_lemma_2_1_3(g, analysis),
            Statement::Lemma2_1_4 => real_lemmas::check_lemma_2_1_4(g, analysis),
            Statement::Lemma2_1_5 => real_lemmas::check_lemma_2_1_5(g, analysis),
            Statement::Lemma2_1_6 => real_lemmas::check_lemma_2_1_6(g, analysis),
            Statement::Lemma2_2 => real_lemmas::check_lemma_2_2(g, analysis),
            Statement::Lemma2_3 => real_lemmas::check_lemma_2_3(g, analysis),
            Statement::Lemma2_4 => real_lemmas::check_lemma_2_4(g, analysis),
            Statement::Lemma2_5 => real_lemmas::check_lemma_2_5(g, analysis),
            Statement::Lemma2_6 => real_lemmas::check_lemma_2_6(g, analysis),
            Statement::Lemma2_7 => real_lemmas::check_lemma_2_7(g, analysis),
            Statement::Lemma3_1 => graph_lemmas::check_lemma_3_1(g, analysis),
            Statement::Lemma3_2 => graph_lemmas::check_lemma_3_2(g, analysis),
            Statement::Prop3_3 => graph_lemmas::check_prop_3_3(g, analysis),
            Statement::TheoremA => graph_lemmas::check_theorem_a(g, analysis),
            Statement::Theorem3_5 => graph_lemmas::check_theorem_3_5(g, analysis),
            Statement::Lemma3_6 => graph_lemmas::check_lemma_3_6(g, analysis),
            Statement::TheoremB => graph_lemmas::check_theorem_b(g, analysis),
            Statement::Lemma4_1 => twopart_lemmas::check_lemma_4_1(g, analysis),
            Statement::Lemma4_2 => twopart_lemmas::check_lemma_4_2(g, analysis),
            Statement::Lemma4_3 => twopart_lemmas::check_lemma_4_3(g, analysis),
            Statement::Theorem4_4 => twopart_lemmas::check_theorem_4_4(g, analysis),
            Statement::Theorem4_5 => twopart_lemmas::check_theorem_4_5(g, analysis),
            Statement::TheoremC => twopart_lemmas::check_theorem_c(g, analysis),
        })
        .collect()
}

/// Parses a selection of statement ids, rejecting unknown ids.
pub fn parse_selection(ids: &[String]) -> Result<Vec<Statement>, UnknownStatement> {
    ids.iter().map(|s| Statement::from_str(s)).collect()
}
