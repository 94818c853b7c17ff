//! Corpus generation and falsification campaigns.
//!
//! cargo run --release --example campaigns

use latpoly::harness::{generate_corpus, run_campaign, CampaignId, CorpusSpec};

fn main() -> latpoly::error::Result<()> {
    let polygons = CorpusSpec::exhaustive(2, 3, 6);
    println!("{} lattice polygons in [0,3]^2 up to equivalence", generate_corpus(&polygons)?.len());

    for id in [CampaignId::LemmaL3, CampaignId::PropP1, CampaignId::Lemma3l0] {
        let r = run_campaign(id, &polygons)?;
        println!("{id}: {} of {} satisfy the hypotheses, {} failures", r.hypothesis_count, r.examined, r.failures.len());
    }

    let random = CorpusSpec::random(3, 3, 6, 100, 1);
    for id in [CampaignId::Nakagawa, CampaignId::PropP1a, CampaignId::ThmTm2] {
        let r = run_campaign(id, &random)?;
        println!("{id}: {:?} in {:.2?}", r.verdicts, r.wall_time);
        for f in &r.failures {
            print!("  {}\n{}", f.reason, f.polytope);
        }
    }
    println!("{}", run_campaign(CampaignId::PropPr1, &CorpusSpec::random(3, 2, 4, 10, 3))?.to_json());
    Ok(())
}
