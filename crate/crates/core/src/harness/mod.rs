//! File format, corpora and falsification campaigns.

pub mod campaign;
pub mod corpus;
pub mod format;

pub use campaign::{evaluate_case, run_campaign, CampaignId, CampaignReport, CaseOutcome, Failure};
pub use corpus::{case_rng, generate_corpus, CorpusMode, CorpusSpec};
pub use format::{parse_polytope, serialize_polytope};
