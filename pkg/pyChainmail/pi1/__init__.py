from .pi1 import GroupPresentation, EliminationStep, SimplificationResult, WeightOneCertificate, Inconclusive, generator_names, presentation_from_graph, exponent_matrix, abelianization, kill_generator_and_simplify, leftover_generators, weight_one_certificate, format_word, format_presentation, format_elimination, replay_elimination
