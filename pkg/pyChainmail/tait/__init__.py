from .tait import PlanarDiagramCode, CheckerboardColoring, TaitGraph, WHITE, BLACK, parse_pd, format_pd, arcs, link_components, trace_faces, corner_faces, default_outer_face, checkerboard_coloring, crossing_sign, white_tait_graph, default_root, satisfies_weight_relation, reduce_tait, complete_to_tait
