mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pomset::coherence::{calibrate, semantic_correct, CoherenceSpace};
use pomset::proofnet::{normalize, sequentialize, ProofStructure};
use pomset::rewrite::{includes, rules, successors};
use pomset::sequent::{check, proof_to_net, random_proof, Calculus, ProofTree};
use pomset::{from_relation, parse_term, to_relation, Term};

fn term(seed: u64, n: usize) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = common::random_points(&mut rng, n);
    common::random_term(&mut rng, &pts)
}

fn space() -> CoherenceSpace {
    calibrate(2).unwrap().space
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn syntax_round_trip(seed in any::<u64>(), n in 1usize..9) {
        let t = term(seed, n);
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn relation_round_trip(seed in any::<u64>(), n in 1usize..9) {
        let t = term(seed, n);
        prop_assert_eq!(from_relation(&to_relation(&t)).unwrap(), t);
    }

    #[test]
    fn dual_is_involutive(seed in any::<u64>(), n in 1usize..9) {
        let t = term(seed, n);
        prop_assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn sound_steps_shrink_relation(seed in any::<u64>(), n in 2usize..7) {
        let t = term(seed, n);
        let r = to_relation(&t);
        for (step, u) in successors(&t, rules::DICOGRAPH) {
            prop_assert!(to_relation(&u).is_subset_of(&r), "{} on {}", step.rule.name(), t);
        }
    }

    #[test]
    fn inclusion_is_reflexive(seed in any::<u64>(), n in 1usize..7) {
        let t = term(seed, n);
        let d = includes(&t, &t).unwrap().unwrap();
        prop_assert!(d.steps.is_empty());
    }

    #[test]
    fn proofs_check_and_round_trip(seed in any::<u64>(), sp in any::<bool>()) {
        let calculus = if sp { Calculus::SpPomset } else { Calculus::Dicograph };
        let p = random_proof(&mut ChaCha8Rng::seed_from_u64(seed), calculus, 4, 0.3);
        prop_assert!(check(&p, calculus).is_ok());
        prop_assert_eq!(ProofTree::from_json(&p.to_json()).unwrap(), p.clone());
        let net = proof_to_net(&p, calculus).unwrap();
        prop_assert!(net.is_correct());
        prop_assert_eq!(ProofStructure::from_json(&net.to_json()).unwrap(), net);
    }

    #[test]
    fn normal_forms_sequentialize(seed in any::<u64>()) {
        let p = random_proof(&mut ChaCha8Rng::seed_from_u64(seed), Calculus::Dicograph, 4, 0.3);
        let net = proof_to_net(&p, Calculus::Dicograph).unwrap();
        let (n, _) = normalize(&net).unwrap();
        prop_assert!(n.is_correct());
        let q = sequentialize(&n).unwrap().unwrap();
        prop_assert!(check(&q, Calculus::Dicograph).is_ok());
        prop_assert_eq!(proof_to_net(&q, Calculus::Dicograph).unwrap(), n.unfolded());
    }

    #[test]
    fn proofs_denote_cliques(seed in any::<u64>()) {
        // a conclusion of the form K * K^ reads as a cut, so normalize first
        let p = random_proof(&mut ChaCha8Rng::seed_from_u64(seed), Calculus::SpPomset, 3, 0.0);
        let (net, _) = normalize(&proof_to_net(&p, Calculus::SpPomset).unwrap()).unwrap();
        prop_assert!(semantic_correct(&net, &space()).unwrap());
    }
}
