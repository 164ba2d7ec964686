"""
Copyright (c) 2026 pyChainmail contributors

Families D_n obtained from a base graph D by lowering the weight of a pivot
vertex v by 2n, the hypotheses under which every such family keeps |H_1|
fixed and even while |f| grows linearly for every spin structure, and the
resulting certificate that Y_{D_n} is not surgery on a knot for all n >= N.

The certificate assumes Y_{D_n} = S^3_{s/t}(K) and glues the spin filling of
the chainmail diagram, a spin filling of the lens space L(t, s) and the trace
of an integral surgery on a cable of K into a closed spin 4-manifold X with

    b2(X)  <= (B + |f| - 2) + h + 1
    |s(X)| >= |f| - |sigma_A| - h - 1

(s = h = |det A^D|). Furuta's inequality, together with the absence of even
definite forms, says a closed smooth spin 4-manifold with nonzero signature
has b2 >= (10/8)|s| + 2, so the chain below that bound is a contradiction.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import itertools
import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from ..graph import graph_from_signed_counts, laplacian, serialize_graph, with_weight
from ..linalg import determinant, signature, solve_affine_gf2
from ..spin import characteristic_subgraphs, homology_order
from ..utils import ChainmailError, HypothesisError, format_matrix, format_subset, worker_count


logger = logging.getLogger(__name__)


FamilySpec = namedtuple('FamilySpec', ['base', 'pivot'])
HypothesisReport = namedtuple('HypothesisReport', ['det', 'det_nonzero', 'det_even', 'pivot_in_all_characteristic', 'mirror_pair', 'all_pass'])
InvarianceReport = namedtuple('InvarianceReport', ['n_max', 'det', 'signature', 'f_sequences', 'counterexamples', 'passed'])
StrategyReport = namedtuple('StrategyReport', ['n_max', 'orders', 'h_even', 'M', 'B', 'pivot_in_all', 'min_abs_f', 'all_pass'])
BoundParameters = namedtuple('BoundParameters', ['B', 'h', 'sigma_A', 'lens_b2_bound', 'lens_sigma_bound', 'trace_b2', 'trace_sigma_bound'])
ChainStep = namedtuple('ChainStep', ['f', 'b2_filling', 'sigma_filling', 'b2_upper', 'sigma_lower', 'holds'])
SpinThreshold = namedtuple('SpinThreshold', ['subgraph', 'f0', 'slope', 'f_bound', 'min_n'])
ObstructionCertificate = namedtuple('ObstructionCertificate', ['spec', 'bounds', 'per_spin', 'N', 'inequality_chain', 'notes'])
ProspectResult = namedtuple('ProspectResult', ['specs', 'partial', 'candidates'])

SLOPE = -2
MAX_PROSPECT_VERTICES = 8


def family_member(spec, n):
    if n < 0:
        raise ChainmailError(f"family index must be non-negative, got {n}")
    return with_weight(spec.base, spec.pivot, spec.base.weight(spec.pivot) - 2 * n)


def find_mirror_pair(g, pivot, A=None):
    """
    First pair (v', v'') of non-pivot vertices, in declaration order, whose
    Laplacian rows agree outside the pivot column and with
    mu(E(v', v'')) = w(v') = w(v'').
    """
    A = A if A is not None else laplacian(g).rows()
    p = g.index(pivot)
    others = [k for k in range(len(g)) if k != p]
    for a, b in itertools.combinations(others, 2):
        if not A[a][b] == A[a][a] == A[b][b]:
            continue
        if all(A[x][a] == A[x][b] for x in others if x not in (a, b)):
            return g.vertices[a].id, g.vertices[b].id
    return None


def check_genex_hypotheses(g, pivot):
    g.index(pivot)
    A = laplacian(g)
    det = determinant(A)
    in_all = all(pivot in s.subgraph for s in characteristic_subgraphs(g))
    mirror = find_mirror_pair(g, pivot, A.rows())
    det_nonzero, det_even = det != 0, det % 2 == 0
    return HypothesisReport(det, det_nonzero, det_even, in_all, mirror,
                            det_nonzero and det_even and in_all and mirror is not None)


def verify_family_invariance(spec, n_max):
    """
    Recompute D_n for n = 0..n_max and compare with D_0: determinant,
    signature, the characteristic subsets, and f_n - f_0 = -2n for spin
    structures through the pivot (f constant otherwise).
    """
    base = family_member(spec, 0)
    A0 = laplacian(base)
    det0, sig0 = determinant(A0), signature(A0)
    spins0 = characteristic_subgraphs(base)
    subsets0 = [s.subgraph for s in spins0]
    f_values = {s.subgraph: [] for s in spins0}
    counterexamples = []

    for n in range(n_max + 1):
        g = family_member(spec, n)
        A = laplacian(g)
        det = determinant(A)
        if det != det0:
            counterexamples.append((n, 'det', f"det(A^D_{n}) = {det}, expected {det0}"))
        if det0 != 0:
            sig = signature(A)
            if sig != sig0:
                counterexamples.append((n, 'signature', f"signature {sig}, expected {sig0}"))
        spins = characteristic_subgraphs(g)
        if [s.subgraph for s in spins] != subsets0:
            counterexamples.append((n, 'spin', f"characteristic subsets {[s.subgraph for s in spins]}"))
            continue
        for s, s0 in zip(spins, spins0):
            f_values[s.subgraph].append(s.f)
            expected = s0.f + SLOPE * n if spec.pivot in s.subgraph else s0.f
            if s.f != expected:
                counterexamples.append((n, 'f', f"f = {s.f} on {format_subset(s.subgraph)}, expected {expected}"))

    logger.info("family invariance up to n = %d: %d counterexamples", n_max, len(counterexamples))
    return InvarianceReport(n_max, det0, sig0, tuple((S, tuple(fs)) for S, fs in f_values.items()),
                            tuple(counterexamples), not counterexamples)


def check_strategy_conditions(spec, n_max):
    """
    Evaluate the four conditions of the obstruction strategy on n = 0..n_max:
    (i) |H_1| even and nonzero, (ii) |H_1| < M, (iii) |V| < B, (iv) every spin
    structure passes through the pivot, so |f| grows with slope 2.
    """
    orders, min_abs_f = [], []
    in_all = True
    for n in range(n_max + 1):
        g = family_member(spec, n)
        orders.append(homology_order(g))
        spins = characteristic_subgraphs(g)
        in_all = in_all and all(spec.pivot in s.subgraph for s in spins)
        min_abs_f.append(min(abs(s.f) for s in spins))
    h_even = all(h != 0 and h % 2 == 0 for h in orders)
    M, B = max(orders) + 1, len(spec.base) + 1
    return StrategyReport(n_max, tuple(orders), h_even, M, B, in_all, tuple(min_abs_f), h_even and in_all)


def chain_constants(bounds):
    K1 = bounds.B - 2 + bounds.lens_b2_bound + bounds.trace_b2
    K2 = abs(bounds.sigma_A) + bounds.lens_sigma_bound + bounds.trace_sigma_bound
    return K1, K2


def f_bound(bounds):
    """Largest |f| for which the inequality chain can fail."""
    K1, K2 = chain_constants(bounds)
    # a > K2 and 8(a + K1) < 10(a - K2) + 16  <=>  a > max(K2, 4 K1 + 5 K2 - 8)
    return max(K2, 4 * K1 + 5 * K2 - 8)


def evaluate_chain(bounds, f):
    K1, K2 = chain_constants(bounds)
    a = abs(f)
    b2_upper, sigma_lower = a + K1, a - K2
    holds = sigma_lower > 0 and 8 * b2_upper < 10 * sigma_lower + 16
    return ChainStep(f, bounds.B + a - 2, bounds.sigma_A - f, b2_upper, sigma_lower, holds)


def _chain_lines(bounds, label, n, f):
    step = evaluate_chain(bounds, f)
    return [
        f"  {label} n={n}: f = {f}, |f| = {abs(f)}",
        f"    b2(X_D,s) = B + |f| - 2 = {bounds.B} + {abs(f)} - 2 = {step.b2_filling}",
        f"    sigma(X_D,s) = sigma_A - f = {bounds.sigma_A} - ({f}) = {step.sigma_filling}",
        f"    b2 upper = {step.b2_filling} + {bounds.lens_b2_bound} + {bounds.trace_b2} = {step.b2_upper}",
        f"    |sigma| lower = {abs(f)} - {abs(bounds.sigma_A)} - {bounds.lens_sigma_bound} - {bounds.trace_sigma_bound} = {step.sigma_lower}",
        f"    8 * {step.b2_upper} = {8 * step.b2_upper} {'<' if step.holds else '>='} 10 * {step.sigma_lower} + 16 = {10 * step.sigma_lower + 16}"
        f" -> {'holds' if step.holds else 'fails'}",
    ]


def obstruction_threshold(spec):
    report = check_genex_hypotheses(spec.base, spec.pivot)
    h = abs(report.det)
    if h == 0:
        raise HypothesisError("det(A^D) = 0: H_1 is infinite")
    if h % 2 == 1:
        raise HypothesisError(f"condition (i) fails: |H_1| = {h} is odd")
    if not report.all_pass:
        failed = [name for name, ok in (("det nonzero and even", report.det_nonzero and report.det_even),
                                        (f"pivot '{spec.pivot}' in every characteristic subgraph", report.pivot_in_all_characteristic),
                                        ("mirror pair", report.mirror_pair is not None)) if not ok]
        raise HypothesisError("family hypotheses fail: " + ", ".join(failed))

    A = laplacian(spec.base)
    bounds = BoundParameters(len(spec.base), h, signature(A), h, h, 1, 1)
    F = f_bound(bounds)
    K1, K2 = chain_constants(bounds)

    per_spin, notes = [], []
    for s in characteristic_subgraphs(spec.base):
        min_n = max(0, (s.f + F) // 2 + 1)
        per_spin.append(SpinThreshold(s.subgraph, s.f, SLOPE, F, min_n))
        zeros = [n for n in range(min_n) if s.f + SLOPE * n == 0]
        if zeros:
            notes.append(f"f = 0 on {format_subset(s.subgraph)} at n = {zeros[0]}: degenerate framing, below the threshold")
    N = max(t.min_n for t in per_spin)

    chain = [
        f"A^D = {format_matrix(A.rows())}",
        f"B = |V_D| = {bounds.B}; h = |det A^D| = {h}; sigma_A = signature(A^D) = {bounds.sigma_A}",
        f"lens filling: b2 <= {bounds.lens_b2_bound}, |sigma| <= {bounds.lens_sigma_bound}; trace: b2 = {bounds.trace_b2}, |sigma| <= {bounds.trace_sigma_bound}",
        f"b2(X) <= |f| + K1 with K1 = B - 2 + h + 1 = {K1}",
        f"|sigma(X)| >= |f| - K2 with K2 = |sigma_A| + h + 1 = {K2}",
        f"contradiction with b2 >= (10/8)|sigma| + 2 iff |f| > max(K2, 4*K1 + 5*K2 - 8) = max({K2}, {4 * K1 + 5 * K2 - 8}) = {F}",
    ]
    for t in per_spin:
        label = format_subset(t.subgraph)
        chain.append(f"spin {label}: f(n) = {t.f0} - 2n; |f(n)| > {F} for all n >= {t.min_n}")
        if t.min_n > 0:
            chain += _chain_lines(bounds, label, t.min_n - 1, t.f0 + SLOPE * (t.min_n - 1))
        chain += _chain_lines(bounds, label, t.min_n, t.f0 + SLOPE * t.min_n)
    chain.append(f"N = max over spin structures = {N}")

    notes.append("f(n) = f(0) - 2n by direct evaluation of f; the threshold depends only on |f| growing")
    notes.append("signature(A^D_n) is constant in n because det(A^D_n) is constant and nonzero")
    logger.info("obstruction threshold N = %d (|f| bound %d)", N, F)
    return ObstructionCertificate(spec, bounds, tuple(per_spin), N, tuple(chain), tuple(notes))


def format_certificate(cert):
    lines = [
        f"pivot: {cert.spec.pivot}",
        "base graph:",
    ]
    lines += ["  " + line for line in serialize_graph(cert.spec.base).splitlines()]
    b = cert.bounds
    lines += [
        "bounds:",
        f"  B = {b.B}", f"  h = {b.h}", f"  sigma_A = {b.sigma_A}",
        f"  lens_b2_bound = {b.lens_b2_bound}", f"  lens_sigma_bound = {b.lens_sigma_bound}",
        f"  trace_b2 = {b.trace_b2}", f"  trace_sigma_bound = {b.trace_sigma_bound}",
        "spin structures:",
    ]
    lines += [f"  {format_subset(t.subgraph)}: f0 = {t.f0}, slope = {t.slope}, |f| bound = {t.f_bound}, minimal n = {t.min_n}"
              for t in cert.per_spin]
    lines += ["inequality chain:"] + ["  " + line for line in cert.inequality_chain]
    lines += ["notes:"] + ["  - " + note for note in cert.notes]
    lines.append(f"for all n >= {cert.N}, Y_{{D_n}} is not Dehn surgery on a knot")
    return "\n".join(lines) + "\n"


def canonical_form(g, pivot):
    """
    Lexicographically smallest (weights, upper triangle of signed counts) over
    all vertex orders that put the pivot first.
    """
    A = laplacian(g).rows()
    p = g.index(pivot)
    others = [k for k in range(len(g)) if k != p]
    best = None
    for perm in itertools.permutations(others):
        order = (p,) + perm
        key = (tuple(A[i][i] for i in order),
               tuple(A[order[i]][order[j]] for i in range(len(order)) for j in range(i + 1, len(order))))
        if best is None or key < best:
            best = key
    return best


def spec_from_canonical(key):
    weights, counts = key
    n = len(weights)
    ids = [f"v{k + 1}" for k in range(n)]
    pairs = [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)]
    return FamilySpec(graph_from_signed_counts(list(zip(ids, weights)), dict(zip(pairs, counts))), ids[0])


def _task_size(n, m, n_weights):
    r = n - 3
    span = 2 * m + 1
    return n_weights * (span * span * n_weights) ** r * span ** (r * (r - 1) // 2)


def _prospect_task(task):
    """
    Enumerate one slice of candidates: pivot 0 with weight wp, mirror pair
    (1, 2) with w = mu(1, 2) = c, pivot edges (a1, a2); the remaining vertices
    are free. Returns the canonical keys of candidates that pass.
    """
    n, c, a1, a2, m, weights = task
    rest = list(range(3, n))
    span = range(-m, m + 1)
    rest_pairs = list(itertools.combinations(rest, 2))
    found = set()
    count = 0
    for rest_choice in itertools.product(itertools.product(span, span, weights), repeat=len(rest)):
        for pair_counts in itertools.product(span, repeat=len(rest_pairs)):
            A = [[0] * n for _ in range(n)]
            A[1][1] = A[2][2] = A[1][2] = A[2][1] = c
            A[0][1] = A[1][0] = a1
            A[0][2] = A[2][0] = a2
            for x, (t, s, w) in zip(rest, rest_choice):
                A[x][x] = w
                A[x][1] = A[1][x] = A[x][2] = A[2][x] = t
                A[x][0] = A[0][x] = s
            for (x, y), k in zip(rest_pairs, pair_counts):
                A[x][y] = A[y][x] = k
            count += len(weights)
            # rows 1 and 2 agree off the pivot column, so det does not
            # depend on the pivot weight and the spin set only on its parity
            A[0][0] = weights[0]
            det = determinant(A)
            if det == 0 or det % 2:
                continue
            passing_parity = set()
            for parity in (0, 1):
                A[0][0] = parity
                sol = solve_affine_gf2(A, [A[i][i] for i in range(n)])
                if sol.particular[0] == 1 and all(v[0] == 0 for v in sol.kernel_basis):
                    passing_parity.add(parity)
            for wp in weights:
                if wp % 2 not in passing_parity:
                    continue
                A[0][0] = wp
                ids = [f"v{k + 1}" for k in range(n)]
                counts = {(ids[i], ids[j]): A[i][j] for i in range(n) for j in range(i + 1, n) if A[i][j]}
                g = graph_from_signed_counts([(v, A[i][i]) for i, v in enumerate(ids)], counts)
                if check_genex_hypotheses(g, ids[0]).all_pass:
                    found.add(canonical_form(g, ids[0]))
    return found, count


def prospect_base_graphs(max_vertices, max_multiplicity, weight_range, workers=None, max_candidates=2_000_000):
    """
    All base graphs (up to isomorphism fixing the pivot) with at most
    `max_vertices` vertices, |signed count| <= `max_multiplicity` per pair and
    weights in `weight_range`, that pass the family hypotheses for some pivot.
    Candidates are generated with a mirror pair in place, sliced into tasks in
    a fixed order and stopped before the budget `max_candidates` is exceeded,
    in which case the result is flagged partial.
    """
    if max_vertices > MAX_PROSPECT_VERTICES:
        raise ChainmailError(f"max_vertices must be at most {MAX_PROSPECT_VERTICES}")
    lo, hi = weight_range
    if lo > hi or max_multiplicity < 0:
        raise ChainmailError("empty search bounds")
    weights = list(range(lo, hi + 1))
    m = max_multiplicity

    tasks, budget, partial = [], 0, False
    for n in range(3, max_vertices + 1):
        for c in range(max(lo, -m), min(hi, m) + 1):
            for a1 in range(-m, m + 1):
                for a2 in range(a1, m + 1):
                    size = _task_size(n, m, len(weights))
                    if budget + size > max_candidates:
                        partial = True
                        break
                    budget += size
                    tasks.append((n, c, a1, a2, m, weights))
                if partial:
                    break
            if partial:
                break
        if partial:
            break

    workers = worker_count(workers)
    logger.info("prospecting %d tasks, %d candidates, %d workers", len(tasks), budget, workers)
    if workers == 1 or len(tasks) <= 1:
        results = [_prospect_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_prospect_task, tasks))

    keys = set()
    examined = 0
    for found, count in results:
        keys |= found
        examined += count
    specs = [spec_from_canonical(k) for k in sorted(keys, key=lambda k: (len(k[0]), k))]
    return ProspectResult(tuple(specs), partial, examined)
