from .graph import ChainmailGraph, Vertex, Edge, ValidationReport, validate, signed_edge_count, incident_edges, signed_degree, laplacian, induced_subgraph, contract_vertices, with_weight, relabel, graph_from_signed_counts, to_networkx, is_isomorphic, parse_graph, serialize_graph
