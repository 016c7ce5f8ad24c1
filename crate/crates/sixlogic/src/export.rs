//! Structured (JSON) import and export of rule sets, derivations and
//! proof certificates. Formulas and sequents travel as their concrete
//! syntax, so exported files stay diff-friendly and re-parseable.

use serde::{Deserialize, Serialize};

use crate::formula::{parse_schema_formula, ParseError};
use crate::gsix::{GSixRuleTag, ProofTree};
use crate::matrix::{Connective, FiniteMatrix};
use crate::rules::SchematicRule;
use crate::sequent::Sequent;
use crate::signed::{SfDerivation, SfStep, SignedRule};

/// Import failures.
#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown connective `{0}`")]
    UnknownConnective(String),
    #[error("unknown truth value `{0}`")]
    UnknownValue(String),
    #[error("unknown rule tag `{0}`")]
    UnknownTag(String),
}

fn connective_from_symbol(s: &str) -> Result<Connective, ExportError> {
    Connective::ALL
        .into_iter()
        .find(|c| c.symbol() == s)
        .ok_or_else(|| ExportError::UnknownConnective(s.to_string()))
}

/// One signed rule as `{connective, inputs, output}`, values by name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedRuleDto {
    pub connective: String,
    pub inputs: Vec<String>,
    pub output: String,
}

impl SignedRuleDto {
    pub fn from_rule(rule: &SignedRule, m: &FiniteMatrix) -> SignedRuleDto {
        SignedRuleDto {
            connective: rule.connective.symbol().to_string(),
            inputs: rule.inputs.iter().map(|&v| m.name(v).to_string()).collect(),
            output: m.name(rule.output).to_string(),
        }
    }

    pub fn to_rule(&self, m: &FiniteMatrix) -> Result<SignedRule, ExportError> {
        let value = |name: &str| {
            m.value_by_name(name)
                .ok_or_else(|| ExportError::UnknownValue(name.to_string()))
        };
        Ok(SignedRule {
            connective: connective_from_symbol(&self.connective)?,
            inputs: self
                .inputs
                .iter()
                .map(|n| value(n))
                .collect::<Result<_, _>>()?,
            output: value(&self.output)?,
        })
    }
}

pub fn signed_rules_to_json(rules: &[SignedRule], m: &FiniteMatrix) -> String {
    let dtos: Vec<SignedRuleDto> = rules.iter().map(|r| SignedRuleDto::from_rule(r, m)).collect();
    serde_json::to_string_pretty(&dtos).expect("rule DTOs serialize")
}

pub fn signed_rules_from_json(
    json: &str,
    m: &FiniteMatrix,
) -> Result<Vec<SignedRule>, ExportError> {
    let dtos: Vec<SignedRuleDto> = serde_json::from_str(json)?;
    dtos.iter().map(|d| d.to_rule(m)).collect()
}

/// A local sequent as formula strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequentDto {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl SequentDto {
    pub fn from_sequent(s: &Sequent) -> SequentDto {
        SequentDto {
            left: s.left.iter().map(|f| f.to_string()).collect(),
            right: s.right.iter().map(|f| f.to_string()).collect(),
        }
    }

    pub fn to_sequent(&self) -> Result<Sequent, ExportError> {
        Ok(Sequent::new(
            self.left
                .iter()
                .map(|s| parse_schema_formula(s))
                .collect::<Result<Vec<_>, _>>()?,
            self.right
                .iter()
                .map(|s| parse_schema_formula(s))
                .collect::<Result<Vec<_>, _>>()?,
        ))
    }
}

/// A schematic rule: name, premise schemas, conclusion schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchematicRuleDto {
    pub name: String,
    pub premises: Vec<SequentDto>,
    pub conclusion: SequentDto,
}

impl SchematicRuleDto {
    pub fn from_rule(rule: &SchematicRule) -> SchematicRuleDto {
        SchematicRuleDto {
            name: rule.name.clone(),
            premises: rule.premises.iter().map(SequentDto::from_sequent).collect(),
            conclusion: SequentDto::from_sequent(&rule.conclusion),
        }
    }

    pub fn to_rule(&self) -> Result<SchematicRule, ExportError> {
        Ok(SchematicRule::new(
            self.name.clone(),
            self.premises
                .iter()
                .map(|p| p.to_sequent())
                .collect::<Result<Vec<_>, _>>()?,
            self.conclusion.to_sequent()?,
        ))
    }
}

pub fn schematic_rules_to_json(rules: &[SchematicRule]) -> String {
    let dtos: Vec<SchematicRuleDto> = rules.iter().map(SchematicRuleDto::from_rule).collect();
    serde_json::to_string_pretty(&dtos).expect("rule DTOs serialize")
}

pub fn schematic_rules_from_json(json: &str) -> Result<Vec<SchematicRule>, ExportError> {
    let dtos: Vec<SchematicRuleDto> = serde_json::from_str(json)?;
    dtos.iter().map(|d| d.to_rule()).collect()
}

/// A proof-certificate node: `{sequent, rule, principal, children}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProofDto {
    pub sequent: String,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub principal: Option<String>,
    #[serde(default)]
    pub children: Vec<ProofDto>,
}

impl ProofDto {
    pub fn from_proof(t: &ProofTree) -> ProofDto {
        ProofDto {
            sequent: t.sequent.to_string(),
            rule: t.rule.to_string(),
            principal: t.principal.as_ref().map(|f| f.to_string()),
            children: t.children.iter().map(ProofDto::from_proof).collect(),
        }
    }

    pub fn to_proof(&self) -> Result<ProofTree, ExportError> {
        Ok(ProofTree {
            sequent: crate::sequent::parse_sequent(&self.sequent)?,
            rule: self
                .rule
                .parse::<GSixRuleTag>()
                .map_err(|e| ExportError::UnknownTag(e.0))?,
            principal: self
                .principal
                .as_ref()
                .map(|s| crate::formula::parse_formula(s))
                .transpose()?,
            children: self
                .children
                .iter()
                .map(|c| c.to_proof())
                .collect::<Result<_, _>>()?,
        })
    }
}

pub fn proof_to_json(t: &ProofTree) -> String {
    serde_json::to_string_pretty(&ProofDto::from_proof(t)).expect("proof DTOs serialize")
}

pub fn proof_from_json(json: &str) -> Result<ProofTree, ExportError> {
    let dto: ProofDto = serde_json::from_str(json)?;
    dto.to_proof()
}

/// A signed-calculus derivation node.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SfDerivationDto {
    /// Cells in value order, each a list of formula strings.
    pub cells: Vec<Vec<String>>,
    /// `axiom`, `weakening`, or a rule record.
    pub step: SfStepDto,
    #[serde(default)]
    pub children: Vec<SfDerivationDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SfStepDto {
    Axiom,
    Weakening,
    Rule {
        rule: SignedRuleDto,
        principals: Vec<String>,
    },
}

impl SfDerivationDto {
    pub fn from_derivation(d: &SfDerivation, m: &FiniteMatrix) -> SfDerivationDto {
        SfDerivationDto {
            cells: (0..d.sequent.width())
                .map(|i| d.sequent.cell(i).iter().map(|f| f.to_string()).collect())
                .collect(),
            step: match &d.step {
                SfStep::Axiom => SfStepDto::Axiom,
                SfStep::Weakening => SfStepDto::Weakening,
                SfStep::Rule { rule, principals } => SfStepDto::Rule {
                    rule: SignedRuleDto::from_rule(rule, m),
                    principals: principals.iter().map(|f| f.to_string()).collect(),
                },
            },
            children: d
                .children
                .iter()
                .map(|c| SfDerivationDto::from_derivation(c, m))
                .collect(),
        }
    }

    pub fn to_derivation(&self, m: &FiniteMatrix) -> Result<SfDerivation, ExportError> {
        let mut sequent = crate::sequent::NSequent::new(self.cells.len());
        for (i, cell) in self.cells.iter().enumerate() {
            for f in cell {
                sequent.insert(i, crate::formula::parse_formula(f)?);
            }
        }
        Ok(SfDerivation {
            sequent,
            step: match &self.step {
                SfStepDto::Axiom => SfStep::Axiom,
                SfStepDto::Weakening => SfStep::Weakening,
                SfStepDto::Rule { rule, principals } => SfStep::Rule {
                    rule: rule.to_rule(m)?,
                    principals: principals
                        .iter()
                        .map(|f| crate::formula::parse_formula(f))
                        .collect::<Result<_, _>>()?,
                },
            },
            children: self
                .children
                .iter()
                .map(|c| c.to_derivation(m))
                .collect::<Result<_, _>>()?,
        })
    }
}

pub fn sf_derivation_to_json(d: &SfDerivation, m: &FiniteMatrix) -> String {
    serde_json::to_string_pretty(&SfDerivationDto::from_derivation(d, m))
        .expect("derivation DTOs serialize")
}

pub fn sf_derivation_from_json(
    json: &str,
    m: &FiniteMatrix,
) -> Result<SfDerivation, ExportError> {
    let dto: SfDerivationDto = serde_json::from_str(json)?;
    dto.to_derivation(m)
}
