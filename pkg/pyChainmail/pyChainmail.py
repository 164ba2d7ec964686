"""
Copyright (c) 2026 pyChainmail contributors

Report pipelines over the library modules: each function takes parsed input
and keyword options and returns a namedtuple, and each `format_*` turns one
into the plain text written by the command-line front end. Every text report
starts with a schema header and is byte-stable for fixed input.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import logging
from collections import namedtuple

from .family import (FamilySpec, check_genex_hypotheses, check_strategy_conditions, family_member,
                     format_certificate, obstruction_threshold, prospect_base_graphs, verify_family_invariance)
from .graph import laplacian, serialize_graph
from .linalg import determinant, format_group, signature
from .pi1 import Inconclusive, abelianization, format_elimination, format_presentation, presentation_from_graph, weight_one_certificate
from .spin import characteristic_subgraphs, homology_group, homology_is_cyclic, kaplan_invariants, simulate_kaplan
from .tait import checkerboard_coloring, reduce_tait, white_tait_graph, default_root
from .utils import DegenerateFraming, format_matrix, format_subset


logger = logging.getLogger(__name__)


SCHEMA = "pychainmail-report/1"

SpinRow = namedtuple('SpinRow', ['subgraph', 'f', 'b2', 'sigma', 'blow_ups'])
AnalysisReport = namedtuple('AnalysisReport', ['graph', 'laplacian', 'det', 'signature', 'homology', 'spins', 'notes'])
FamilyReport = namedtuple('FamilyReport', ['spec', 'hypotheses', 'invariance', 'strategy'])
TaitReport = namedtuple('TaitReport', ['tait', 'root', 'reduced'])
Pi1Row = namedtuple('Pi1Row', ['n', 'abelianization', 'certificate'])
Pi1Report = namedtuple('Pi1Report', ['presentation', 'killed_generator', 'rows'])


def _header(command):
    return [f"# schema: {SCHEMA}", f"# command: {command}"]


def analyze_graph(g, seed=None):
    """
    Laplacian, homology and the spin table of Y_D. Each contraction trace runs
    in declaration order, or in an order shuffled by `seed`.
    """
    A = laplacian(g)
    det = determinant(A)
    rows, notes = [], []
    for s in characteristic_subgraphs(g):
        try:
            filling = kaplan_invariants(g, s)
        except DegenerateFraming:
            rows.append(SpinRow(s.subgraph, s.f, None, None, None))
            notes.append(f"f = 0 on {format_subset(s.subgraph)}: degenerate framing, no spin filling from Kaplan's algorithm")
            continue
        trace = simulate_kaplan(g, s.subgraph, seed=seed) if s.subgraph else None
        if trace is not None and trace.final_framing != s.f:
            notes.append(f"contraction of {format_subset(s.subgraph)} ends at framing {trace.final_framing}, not f = {s.f}")
        blow_ups = trace.blow_ups if trace is not None else None
        rows.append(SpinRow(s.subgraph, s.f, filling.b2, filling.sigma, blow_ups))
    if det == 0:
        notes.append("det(A^D) = 0: H_1 is infinite")
    if not homology_is_cyclic(g):
        notes.append("H_1 is not cyclic: Y_D is not surgery on a knot")
    return AnalysisReport(g, A, det, signature(A), homology_group(g), tuple(rows), tuple(notes))


def format_analysis(report):
    lines = _header("analyze")
    lines += ["graph:"] + ["  " + line for line in serialize_graph(report.graph).splitlines()]
    lines += [
        f"laplacian: {format_matrix(report.laplacian.rows())}",
        f"det: {report.det}",
        f"signature: {report.signature}",
        f"homology: {format_group(report.homology)}",
        f"spin structures: {len(report.spins)}",
    ]
    for row in report.spins:
        if row.b2 is None:
            lines.append(f"  S = {format_subset(row.subgraph)}  f = {row.f}  degenerate")
        else:
            blow = "-" if row.blow_ups is None else row.blow_ups
            lines.append(f"  S = {format_subset(row.subgraph)}  f = {row.f}  b2 = {row.b2}  sigma = {row.sigma}  blow-ups = {blow}")
    lines += ["notes:"] + ["  - " + note for note in report.notes]
    return "\n".join(lines) + "\n"


def family_report(g, pivot, n_max=100):
    spec = FamilySpec(g, pivot)
    hypotheses = check_genex_hypotheses(g, pivot)
    invariance = verify_family_invariance(spec, n_max)
    strategy = check_strategy_conditions(spec, n_max)
    return FamilyReport(spec, hypotheses, invariance, strategy)


def format_family(report):
    h, inv, st = report.hypotheses, report.invariance, report.strategy
    mirror = "none" if h.mirror_pair is None else f"({h.mirror_pair[0]}, {h.mirror_pair[1]})"
    lines = _header("family") + [
        f"pivot: {report.spec.pivot}",
        "hypotheses:",
        f"  det = {h.det}: nonzero {'yes' if h.det_nonzero else 'no'}, even {'yes' if h.det_even else 'no'}",
        f"  pivot in every characteristic subgraph: {'yes' if h.pivot_in_all_characteristic else 'no'}",
        f"  mirror pair: {mirror}",
        f"  verdict: {'pass' if h.all_pass else 'fail'}",
        f"invariance for n = 0..{inv.n_max}:",
        f"  det = {inv.det}, signature = {inv.signature}",
    ]
    for subset, fs in inv.f_sequences:
        tail = f"{fs[0]}, {fs[1]}, ..., {fs[-1]}" if len(fs) > 3 else ", ".join(str(f) for f in fs)
        lines.append(f"  f on {format_subset(subset)}: {tail}")
    lines += [f"  n = {n} {kind}: {message}" for n, kind, message in inv.counterexamples]
    lines.append(f"  verdict: {'pass' if inv.passed else 'fail'}")
    lines += [
        "strategy conditions:",
        f"  (i) |H_1| even and nonzero: {'yes' if st.h_even else 'no'}",
        f"  (ii) M = {st.M}",
        f"  (iii) B = {st.B}",
        f"  (iv) every spin structure through the pivot: {'yes' if st.pivot_in_all else 'no'}; "
        f"min |f| from {st.min_abs_f[0]} to {st.min_abs_f[-1]}",
    ]
    return "\n".join(lines) + "\n"


def certify_family(g, pivot):
    return obstruction_threshold(FamilySpec(g, pivot))


def format_certify(cert):
    return "\n".join(_header("certify")) + "\n" + format_certificate(cert)


def tait_report(pd, outer_color='black', root=None):
    coloring = checkerboard_coloring(pd, outer_color)
    t = white_tait_graph(pd, coloring)
    root = root if root is not None else default_root(t)
    return TaitReport(t, root, reduce_tait(t, root))


def write_tait_graphs(report, prefix):
    """Write W to `<prefix>.tait.json` and the reduced graph to `<prefix>.reduced.json`; returns both paths."""
    paths = (f"{prefix}.tait.json", f"{prefix}.reduced.json")
    for path, g in zip(paths, (report.tait.underlying, report.reduced)):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(serialize_graph(g))
        logger.info("wrote %s", path)
    return paths


def format_tait(report, paths=None):
    lines = _header("tait") + [
        f"tait graph: {len(report.tait.underlying)} vertices, {len(report.tait.underlying.edges)} edges",
        f"root: {report.root}",
        f"reduced graph: {len(report.reduced)} vertices, {len(report.reduced.edges)} edges",
        f"reduced homology: {format_group(homology_group(report.reduced))}",
    ]
    if paths is not None:
        lines += [f"tait graph file: {paths[0]}", f"reduced graph file: {paths[1]}"]
    return "\n".join(lines) + "\n"


def pi1_report(g, kill, n_range=None, pivot=None):
    """
    Presentation of the group of Y_D and weight-one certificates killing
    `kill`, for D itself or for every member D_n of the family through
    `pivot` with n in `n_range`.
    """
    members = [(None, g)] if n_range is None else \
        [(n, family_member(FamilySpec(g, pivot), n)) for n in range(n_range[0], n_range[1] + 1)]
    rows = []
    for n, member in members:
        p = presentation_from_graph(member)
        rows.append(Pi1Row(n, abelianization(p), weight_one_certificate(p, kill)))
    return Pi1Report(presentation_from_graph(g), kill, tuple(rows))


def pi1_all_valid(report):
    return all(not isinstance(row.certificate, Inconclusive) for row in report.rows)


def format_pi1(report):
    lines = _header("pi1") + [
        f"presentation: {format_presentation(report.presentation)}",
        f"killed generator: {report.killed_generator}",
    ]
    for row in report.rows:
        cert = row.certificate
        label = "D" if row.n is None else f"n = {row.n}"
        if isinstance(cert, Inconclusive):
            lines.append(f"{label}: H_1 = {format_group(row.abelianization)}, inconclusive ({cert.reason})")
        else:
            exps = ", ".join(str(e) for e in cert.final_exponents)
            lines.append(f"{label}: H_1 = {format_group(row.abelianization)}, exponents {{{exps}}}, gcd {cert.gcd}, weight one")
        lines += ["  " + format_elimination(step) for step in cert.elimination_log]
    return "\n".join(lines) + "\n"


def prospect_report(max_vertices, max_multiplicity, weight_range, workers=None, max_candidates=2_000_000):
    return prospect_base_graphs(max_vertices, max_multiplicity, weight_range, workers=workers, max_candidates=max_candidates)


def format_prospect(result):
    lines = _header("prospect") + [
        f"candidates examined: {result.candidates}",
        f"complete: {'no' if result.partial else 'yes'}",
        f"specs: {len(result.specs)}",
    ]
    for k, spec in enumerate(result.specs):
        A = laplacian(spec.base)
        lines.append(f"spec {k + 1}: pivot {spec.pivot}, det {determinant(A)}, laplacian {format_matrix(A.rows())}")
    return "\n".join(lines) + "\n"
