from .utils import ChainmailError, GraphSyntaxError, GraphValidationError, UnknownVertexError, DegenerateFraming, HypothesisError, DiagramSyntaxError, SplitDiagramError, NugatoryCrossingError, SpinExistenceError, gray_code_flips, format_matrix, format_subset, parse_int_range, worker_count
