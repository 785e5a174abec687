//! Domain types and pure score arithmetic shared by every pipeline.
//!
//! Ratio-valued scores (faithfulness, context relevance) are kept as exact
//! rationals and only converted to floats when a report is emitted, so
//! equality assertions in tests are meaningful.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sentence::normalize_ws;

/// Exact rational score in `[0, 1]`.
pub type Score = Ratio<u64>;

/// Convert an exact score to an `f64` for display and report emission.
pub fn score_to_f64(score: Score) -> f64 {
    score.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Error, PartialEq)]
pub enum ScoreError {
    #[error("verdict set is empty")]
    EmptyVerdicts,
    #[error("similarity list is empty")]
    EmptyList,
    #[error("extracted count {extracted} exceeds total sentence count {total}")]
    CountExceedsTotal { extracted: u64, total: u64 },
    #[error("context has zero sentences")]
    ZeroTotalSentences,
    #[error("vector dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cosine similarity is undefined for an all-zero vector")]
    ZeroVector,
}

/// Constructor-level validation failure for domain types.
#[derive(Debug, Error, PartialEq)]
pub enum InvalidInput {
    #[error("{0} must be non-empty")]
    EmptyField(&'static str),
    #[error("statement {0} is empty")]
    EmptyStatement(usize),
    #[error("verdict indices must be exactly 0..{expected}, got {found} at position {position}")]
    BadVerdictIndex {
        expected: usize,
        found: usize,
        position: usize,
    },
    #[error("verdict count {verdicts} does not match statement count {statements}")]
    VerdictStatementMismatch { verdicts: usize, statements: usize },
    #[error("questions and similarities have different lengths: {questions} vs {similarities}")]
    LengthMismatch {
        questions: usize,
        similarities: usize,
    },
    #[error("at least one generated question is required")]
    NoQuestions,
    #[error("extracted sentence is not a verbatim part of the context: {0:?}")]
    NotVerbatim(String),
    #[error("pairwise candidates must differ")]
    IdenticalCandidates,
    #[error("candidate pair does not match dimension {0:?}")]
    DimensionPayloadMismatch(Dimension),
    #[error(transparent)]
    Score(#[from] ScoreError),
}

// ---------------------------------------------------------------------------
// Records and metric result types
// ---------------------------------------------------------------------------

/// One (question, context, answer) triple — the unit of scoring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub id: String,
    pub question: String,
    pub context: String,
    pub answer: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl EvalRecord {
    pub fn new(
        id: impl Into<String>,
        question: impl Into<String>,
        context: impl Into<String>,
        answer: impl Into<String>,
    ) -> Result<Self, InvalidInput> {
        let record = Self {
            id: id.into(),
            question: question.into(),
            context: context.into(),
            answer: answer.into(),
            metadata: BTreeMap::new(),
        };
        record.validate()?;
        Ok(record)
    }

    pub fn validate(&self) -> Result<(), InvalidInput> {
        if self.id.trim().is_empty() {
            return Err(InvalidInput::EmptyField("id"));
        }
        if self.question.trim().is_empty() {
            return Err(InvalidInput::EmptyField("question"));
        }
        if self.context.trim().is_empty() {
            return Err(InvalidInput::EmptyField("context"));
        }
        if self.answer.trim().is_empty() {
            return Err(InvalidInput::EmptyField("answer"));
        }
        Ok(())
    }
}

/// Ordered statements extracted from an answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementSet {
    statements: Vec<String>,
}

impl StatementSet {
    pub fn new(statements: Vec<String>) -> Result<Self, InvalidInput> {
        if statements.is_empty() {
            return Err(InvalidInput::EmptyField("statements"));
        }
        for (i, s) in statements.iter().enumerate() {
            if s.trim().is_empty() {
                return Err(InvalidInput::EmptyStatement(i));
            }
        }
        Ok(Self { statements })
    }

    pub fn statements(&self) -> &[String] {
        &self.statements
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

/// Per-statement support judgement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement_index: usize,
    pub supported: bool,
    pub explanation: String,
}

/// One verdict per statement, in statement order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSet {
    verdicts: Vec<Verdict>,
}

impl VerdictSet {
    /// Indices must be exactly `0..n` in order. An empty set is representable
    /// so that [`faithfulness_score`] can report `EmptyVerdicts` itself.
    pub fn new(verdicts: Vec<Verdict>) -> Result<Self, InvalidInput> {
        for (position, v) in verdicts.iter().enumerate() {
            if v.statement_index != position {
                return Err(InvalidInput::BadVerdictIndex {
                    expected: verdicts.len(),
                    found: v.statement_index,
                    position,
                });
            }
        }
        Ok(Self { verdicts })
    }

    pub fn from_flags(supported: &[bool]) -> Self {
        let verdicts = supported
            .iter()
            .enumerate()
            .map(|(i, &s)| Verdict {
                statement_index: i,
                supported: s,
                explanation: String::new(),
            })
            .collect();
        Self { verdicts }
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn supported_count(&self) -> u64 {
        self.verdicts.iter().filter(|v| v.supported).count() as u64
    }

    pub fn len(&self) -> usize {
        self.verdicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verdicts.is_empty()
    }
}

/// Faithfulness: supported statements over all statements.
#[derive(Debug, Clone, PartialEq)]
pub struct FaithfulnessResult {
    pub score: Score,
    pub statement_set: StatementSet,
    pub verdict_set: VerdictSet,
}

impl FaithfulnessResult {
    pub fn new(statement_set: StatementSet, verdict_set: VerdictSet) -> Result<Self, InvalidInput> {
        if verdict_set.len() != statement_set.len() {
            return Err(InvalidInput::VerdictStatementMismatch {
                verdicts: verdict_set.len(),
                statements: statement_set.len(),
            });
        }
        let score = faithfulness_score(&verdict_set)?;
        Ok(Self {
            score,
            statement_set,
            verdict_set,
        })
    }
}

/// Questions generated from an answer, with their similarity to the original.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratedQuestions {
    questions: Vec<String>,
    similarities: Vec<f64>,
}

impl GeneratedQuestions {
    pub fn new(questions: Vec<String>, similarities: Vec<f64>) -> Result<Self, InvalidInput> {
        if questions.is_empty() {
            return Err(InvalidInput::NoQuestions);
        }
        if questions.len() != similarities.len() {
            return Err(InvalidInput::LengthMismatch {
                questions: questions.len(),
                similarities: similarities.len(),
            });
        }
        Ok(Self {
            questions,
            similarities,
        })
    }

    pub fn questions(&self) -> &[String] {
        &self.questions
    }

    pub fn similarities(&self) -> &[f64] {
        &self.similarities
    }
}

/// Answer relevance: mean similarity between the original question and the
/// questions regenerated from the answer.
#[derive(Debug, Clone, PartialEq)]
pub struct AnswerRelevanceResult {
    pub score: f64,
    pub generated: GeneratedQuestions,
    /// True when fewer questions than configured could be parsed and the
    /// mean was taken over the survivors.
    pub degraded: bool,
}

impl AnswerRelevanceResult {
    pub fn new(generated: GeneratedQuestions, degraded: bool) -> Result<Self, ScoreError> {
        let score = mean_similarity(generated.similarities())?;
        Ok(Self {
            score,
            generated,
            degraded,
        })
    }
}

/// Context relevance: extracted crucial sentences over all context sentences.
#[derive(Debug, Clone, PartialEq)]
pub struct ContextRelevanceResult {
    pub score: Score,
    pub extracted_sentences: Vec<String>,
    pub total_sentences: u64,
    pub insufficient: bool,
}

impl ContextRelevanceResult {
    pub fn insufficient(total_sentences: u64) -> Result<Self, ScoreError> {
        let score = context_relevance_score(0, total_sentences, true)?;
        Ok(Self {
            score,
            extracted_sentences: Vec::new(),
            total_sentences,
            insufficient: true,
        })
    }

    /// Every extracted sentence must appear verbatim in the context after
    /// whitespace normalization.
    pub fn from_extraction(
        extracted_sentences: Vec<String>,
        total_sentences: u64,
        context: &str,
    ) -> Result<Self, InvalidInput> {
        let normalized_context = normalize_ws(context);
        for s in &extracted_sentences {
            if !normalized_context.contains(&normalize_ws(s)) {
                return Err(InvalidInput::NotVerbatim(s.clone()));
            }
        }
        let score =
            context_relevance_score(extracted_sentences.len() as u64, total_sentences, false)?;
        Ok(Self {
            score,
            extracted_sentences,
            total_sentences,
            insufficient: false,
        })
    }
}

// ---------------------------------------------------------------------------
// Pairwise comparison types
// ---------------------------------------------------------------------------

/// Quality dimension under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Faithfulness,
    AnswerRelevance,
    ContextRelevance,
}

impl Dimension {
    pub const ALL: [Dimension; 3] = [
        Dimension::Faithfulness,
        Dimension::AnswerRelevance,
        Dimension::ContextRelevance,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Dimension::Faithfulness => "faithfulness",
            Dimension::AnswerRelevance => "answer_relevance",
            Dimension::ContextRelevance => "context_relevance",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which candidate a judge (human or model) preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Preference {
    A,
    B,
}

impl Preference {
    pub fn flipped(self) -> Self {
        match self {
            Preference::A => Preference::B,
            Preference::B => Preference::A,
        }
    }
}

/// Provenance of a human preference label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSource {
    /// An annotator supplied the label.
    Explicit,
    /// The label follows from how the pair was constructed
    /// (grounded > ungrounded, complete > incomplete, focused > diluted).
    ConstructionImplied,
}

/// The two candidates being compared. Faithfulness and answer relevance
/// compare answers against a fixed context; context relevance compares
/// contexts for an answer-free question.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidatePair {
    Answers {
        context: String,
        answer_a: String,
        answer_b: String,
    },
    Contexts {
        context_a: String,
        context_b: String,
    },
}

impl CandidatePair {
    fn candidates(&self) -> (&str, &str) {
        match self {
            CandidatePair::Answers {
                answer_a, answer_b, ..
            } => (answer_a, answer_b),
            CandidatePair::Contexts {
                context_a,
                context_b,
            } => (context_a, context_b),
        }
    }
}

/// One question with two candidates and a human preference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseInstance {
    pub id: String,
    pub question: String,
    pub dimension: Dimension,
    pub candidates: CandidatePair,
    pub human_preference: Preference,
    pub label_source: LabelSource,
}

impl PairwiseInstance {
    pub fn new(
        id: impl Into<String>,
        question: impl Into<String>,
        dimension: Dimension,
        candidates: CandidatePair,
        human_preference: Preference,
        label_source: LabelSource,
    ) -> Result<Self, InvalidInput> {
        let instance = Self {
            id: id.into(),
            question: question.into(),
            dimension,
            candidates,
            human_preference,
            label_source,
        };
        instance.validate()?;
        Ok(instance)
    }

    pub fn validate(&self) -> Result<(), InvalidInput> {
        if self.id.trim().is_empty() {
            return Err(InvalidInput::EmptyField("id"));
        }
        if self.question.trim().is_empty() {
            return Err(InvalidInput::EmptyField("question"));
        }
        let payload_matches = match self.dimension {
            Dimension::Faithfulness | Dimension::AnswerRelevance => {
                matches!(self.candidates, CandidatePair::Answers { .. })
            }
            Dimension::ContextRelevance => {
                matches!(self.candidates, CandidatePair::Contexts { .. })
            }
        };
        if !payload_matches {
            return Err(InvalidInput::DimensionPayloadMismatch(self.dimension));
        }
        let (a, b) = self.candidates.candidates();
        if a == b {
            return Err(InvalidInput::IdenticalCandidates);
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Agreement accounting
// ---------------------------------------------------------------------------

/// Preference method whose agreement with humans is being measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ragas,
    GptScore,
    GptRanking,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Ragas, Method::GptScore, Method::GptRanking];

    pub fn label(self) -> &'static str {
        match self {
            Method::Ragas => "ragas",
            Method::GptScore => "gpt-score",
            Method::GptRanking => "gpt-ranking",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ragas" => Ok(Method::Ragas),
            "gpt-score" | "gpt_score" | "gptscore" => Ok(Method::GptScore),
            "gpt-ranking" | "gpt_ranking" | "gptranking" | "gpt-rank" => Ok(Method::GptRanking),
            other => Err(format!("unknown method: {other:?}")),
        }
    }
}

/// Agreement counts for one (method, dimension) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementCell {
    pub method: Method,
    pub dimension: Dimension,
    pub n_instances: u64,
    pub n_agreements: u64,
    pub n_unevaluable: u64,
}

impl AgreementCell {
    /// `n_agreements / n_instances` as an exact rational; `None` when no
    /// instance could be evaluated.
    pub fn accuracy(&self) -> Option<Score> {
        if self.n_instances == 0 {
            None
        } else {
            Some(Score::new(self.n_agreements, self.n_instances))
        }
    }
}

/// Per-method, per-dimension agreement with human preferences.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AgreementTable {
    cells: Vec<AgreementCell>,
}

impl AgreementTable {
    pub fn new(mut cells: Vec<AgreementCell>) -> Self {
        cells.sort_by_key(|c| (c.method, c.dimension));
        Self { cells }
    }

    pub fn cells(&self) -> &[AgreementCell] {
        &self.cells
    }

    pub fn cell(&self, method: Method, dimension: Dimension) -> Option<&AgreementCell> {
        self.cells
            .iter()
            .find(|c| c.method == method && c.dimension == dimension)
    }
}

// ---------------------------------------------------------------------------
// Pure score arithmetic
// ---------------------------------------------------------------------------

/// Supported statements over all statements, as an exact rational.
pub fn faithfulness_score(verdicts: &VerdictSet) -> Result<Score, ScoreError> {
    if verdicts.is_empty() {
        return Err(ScoreError::EmptyVerdicts);
    }
    Ok(Score::new(
        verdicts.supported_count(),
        verdicts.len() as u64,
    ))
}

/// Arithmetic mean of similarity values. Inputs are expected in `[-1, 1]`.
///
/// Uses Neumaier compensated summation so the result stays accurate for
/// lists up to at least 10^4 values.
pub fn mean_similarity(sims: &[f64]) -> Result<f64, ScoreError> {
    if sims.is_empty() {
        return Err(ScoreError::EmptyList);
    }
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for &x in sims {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }
    Ok((sum + compensation) / sims.len() as f64)
}

/// Extracted sentences over total sentences; zero when the context was
/// judged insufficient to answer the question.
pub fn context_relevance_score(
    extracted_count: u64,
    total_sentences: u64,
    insufficient: bool,
) -> Result<Score, ScoreError> {
    if total_sentences == 0 {
        return Err(ScoreError::ZeroTotalSentences);
    }
    if insufficient {
        return Ok(Score::new(0, 1));
    }
    if extracted_count > total_sentences {
        return Err(ScoreError::CountExceedsTotal {
            extracted: extracted_count,
            total: total_sentences,
        });
    }
    Ok(Score::new(extracted_count, total_sentences))
}

/// Cosine of the angle between two equal-dimension vectors, clamped to
/// `[-1, 1]` against floating-point drift.
pub fn cosine_similarity(u: &[f64], v: &[f64]) -> Result<f64, ScoreError> {
    if u.len() != v.len() {
        return Err(ScoreError::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    if u.is_empty() {
        return Err(ScoreError::DimensionMismatch { left: 0, right: 0 });
    }
    let mut dot = 0.0f64;
    let mut norm_u = 0.0f64;
    let mut norm_v = 0.0f64;
    for (&a, &b) in u.iter().zip(v.iter()) {
        dot += a * b;
        norm_u += a * a;
        norm_v += b * b;
    }
    if norm_u == 0.0 || norm_v == 0.0 {
        return Err(ScoreError::ZeroVector);
    }
    Ok((dot / (norm_u.sqrt() * norm_v.sqrt())).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faithfulness_all_supported_is_one() {
        let v = VerdictSet::from_flags(&[true, true, true, true]);
        assert_eq!(faithfulness_score(&v).unwrap(), Score::new(1, 1));
    }

    #[test]
    fn faithfulness_three_of_four() {
        let v = VerdictSet::from_flags(&[true, true, true, false]);
        assert_eq!(faithfulness_score(&v).unwrap(), Score::new(3, 4));
    }

    #[test]
    fn faithfulness_single_unsupported_is_zero() {
        let v = VerdictSet::from_flags(&[false]);
        assert_eq!(faithfulness_score(&v).unwrap(), Score::new(0, 1));
    }

    #[test]
    fn faithfulness_empty_rejected() {
        let v = VerdictSet::from_flags(&[]);
        assert_eq!(faithfulness_score(&v), Err(ScoreError::EmptyVerdicts));
    }

    #[test]
    fn verdict_indices_must_be_sequential() {
        let verdicts = vec![
            Verdict {
                statement_index: 0,
                supported: true,
                explanation: String::new(),
            },
            Verdict {
                statement_index: 2,
                supported: false,
                explanation: String::new(),
            },
        ];
        assert!(matches!(
            VerdictSet::new(verdicts),
            Err(InvalidInput::BadVerdictIndex { .. })
        ));
    }

    #[test]
    fn mean_of_identical_similarities() {
        assert_eq!(mean_similarity(&[1.0, 1.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn mean_of_single_orthogonal() {
        assert_eq!(mean_similarity(&[0.0]).unwrap(), 0.0);
    }

    #[test]
    fn mean_arithmetic() {
        let m = mean_similarity(&[0.2, 0.4, 0.9]).unwrap();
        assert!((m - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mean_empty_rejected() {
        assert_eq!(mean_similarity(&[]), Err(ScoreError::EmptyList));
    }

    #[test]
    fn mean_stable_for_large_lists() {
        let sims = vec![0.1f64; 10_000];
        let m = mean_similarity(&sims).unwrap();
        assert!((m - 0.1).abs() < 1e-12);
    }

    #[test]
    fn context_relevance_full() {
        assert_eq!(
            context_relevance_score(2, 2, false).unwrap(),
            Score::new(1, 1)
        );
    }

    #[test]
    fn context_relevance_insufficient_is_zero() {
        assert_eq!(
            context_relevance_score(0, 7, true).unwrap(),
            Score::new(0, 1)
        );
    }

    #[test]
    fn context_relevance_ratio() {
        assert_eq!(
            context_relevance_score(3, 12, false).unwrap(),
            Score::new(1, 4)
        );
    }

    #[test]
    fn context_relevance_count_exceeds_total() {
        assert_eq!(
            context_relevance_score(5, 3, false),
            Err(ScoreError::CountExceedsTotal {
                extracted: 5,
                total: 3
            })
        );
    }

    #[test]
    fn cosine_of_identical_vectors() {
        let u = [0.6, 0.8];
        assert_eq!(cosine_similarity(&u, &u).unwrap(), 1.0);
    }

    #[test]
    fn cosine_of_orthogonal_vectors() {
        assert_eq!(cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
    }

    #[test]
    fn cosine_independent_scalar_check() {
        // Oracle: dot = 4 + 10 + 18 = 32; |u| = sqrt(14); |v| = sqrt(77).
        let expected = 32.0 / (14.0f64.sqrt() * 77.0f64.sqrt());
        let got = cosine_similarity(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.974_631_846).abs() < 1e-9);
    }

    #[test]
    fn cosine_dimension_mismatch() {
        assert_eq!(
            cosine_similarity(&[1.0], &[1.0, 2.0]),
            Err(ScoreError::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn cosine_zero_vector_rejected() {
        assert_eq!(
            cosine_similarity(&[0.0, 0.0], &[1.0, 2.0]),
            Err(ScoreError::ZeroVector)
        );
    }

    #[test]
    fn record_requires_non_blank_fields() {
        assert!(matches!(
            EvalRecord::new("r1", "  ", "ctx", "ans"),
            Err(InvalidInput::EmptyField("question"))
        ));
        assert!(EvalRecord::new("r1", "q", "ctx", "ans").is_ok());
    }

    #[test]
    fn extraction_result_rejects_paraphrase() {
        let ctx = "The tower was completed in 1896. It was named after a queen.";
        let err = ContextRelevanceResult::from_extraction(
            vec!["The tower was finished in 1896.".into()],
            2,
            ctx,
        )
        .unwrap_err();
        assert!(matches!(err, InvalidInput::NotVerbatim(_)));
    }

    #[test]
    fn extraction_result_accepts_whitespace_variation() {
        let ctx = "The tower was completed in 1896.  It was named after a queen.";
        let r = ContextRelevanceResult::from_extraction(
            vec!["The tower was  completed in 1896.".into()],
            2,
            ctx,
        )
        .unwrap();
        assert_eq!(r.score, Score::new(1, 2));
    }

    #[test]
    fn pairwise_instance_rejects_identical_candidates() {
        let err = PairwiseInstance::new(
            "i1",
            "q",
            Dimension::Faithfulness,
            CandidatePair::Answers {
                context: "ctx".into(),
                answer_a: "same".into(),
                answer_b: "same".into(),
            },
            Preference::A,
            LabelSource::Explicit,
        )
        .unwrap_err();
        assert_eq!(err, InvalidInput::IdenticalCandidates);
    }

    #[test]
    fn pairwise_instance_rejects_payload_mismatch() {
        let err = PairwiseInstance::new(
            "i1",
            "q",
            Dimension::ContextRelevance,
            CandidatePair::Answers {
                context: "ctx".into(),
                answer_a: "a".into(),
                answer_b: "b".into(),
            },
            Preference::A,
            LabelSource::Explicit,
        )
        .unwrap_err();
        assert!(matches!(err, InvalidInput::DimensionPayloadMismatch(_)));
    }

    #[test]
    fn agreement_accuracy_is_exact() {
        let cell = AgreementCell {
            method: Method::Ragas,
            dimension: Dimension::Faithfulness,
            n_instances: 20,
            n_agreements: 19,
            n_unevaluable: 1,
        };
        assert_eq!(cell.accuracy().unwrap(), Score::new(19, 20));
    }

    #[test]
    fn method_parsing_accepts_cli_tokens() {
        assert_eq!("ragas".parse::<Method>().unwrap(), Method::Ragas);
        assert_eq!("gpt-score".parse::<Method>().unwrap(), Method::GptScore);
        assert_eq!("GPT-Ranking".parse::<Method>().unwrap(), Method::GptRanking);
        assert!("bleu".parse::<Method>().is_err());
    }
}
