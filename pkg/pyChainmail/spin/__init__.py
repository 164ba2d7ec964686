from .spin import SpinStructure, FillingInvariants, KaplanStep, KaplanTrace, f_value, characteristic_subgraphs, base_filling, kaplan_invariants, simulate_kaplan, homology_order, homology_group, homology_is_cyclic
