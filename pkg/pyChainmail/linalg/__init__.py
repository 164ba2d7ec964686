from .linalg import SymmetricIntMatrix, SnfDiagonal, Gf2AffineSolutionSet, as_int_array, determinant, signature, smith_normal_form, group_order, format_group, rank_gf2, corank_gf2, solve_affine_gf2, enumerate_gf2_solutions
