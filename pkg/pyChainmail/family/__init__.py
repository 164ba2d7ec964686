from .family import FamilySpec, HypothesisReport, InvarianceReport, StrategyReport, BoundParameters, ChainStep, SpinThreshold, ObstructionCertificate, ProspectResult, family_member, find_mirror_pair, check_genex_hypotheses, verify_family_invariance, check_strategy_conditions, chain_constants, f_bound, evaluate_chain, obstruction_threshold, format_certificate, canonical_form, spec_from_canonical, prospect_base_graphs
