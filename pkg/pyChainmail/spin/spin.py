"""
Copyright (c) 2026 pyChainmail contributors

Spin structures of chainmail surgeries. Spin structures on Y_D correspond to
characteristic subgraphs S (indicator x with A x = diag(A) mod 2). Kaplan's
algorithm, specialised to chainmail diagrams, slides the components of L_S
together (vertex contractions) into one unknot of framing f_s, then blows up
|f_s| - 1 meridians and blows the unknot down, giving a spin filling with

    b2 = |V_D| + |f_s| - 2,    sigma = sigma(A^D) - f_s.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import logging
import random
from collections import namedtuple

from ..graph import contract_vertices, induced_subgraph, laplacian
from ..linalg import determinant, enumerate_gf2_solutions, signature, smith_normal_form, solve_affine_gf2
from ..utils import ChainmailError, DegenerateFraming, SpinExistenceError


logger = logging.getLogger(__name__)


SpinStructure = namedtuple('SpinStructure', ['subgraph', 'f'])
FillingInvariants = namedtuple('FillingInvariants', ['b2', 'sigma'])
KaplanStep = namedtuple('KaplanStep', ['pair', 'weight'])
KaplanTrace = namedtuple('KaplanTrace', ['steps', 'final_framing', 'blow_ups'])


def f_value(g, subset):
    sub = induced_subgraph(g, subset)
    return sum(sub.weights()) + 2 * sum(e.sign for e in sub.edges)


def characteristic_subgraphs(g):
    A = laplacian(g)
    solutions = solve_affine_gf2(A, A.diagonal())
    if solutions.particular is None:
        raise SpinExistenceError("no characteristic subgraph: the linking matrix admits no spin structure")
    ids = g.ids()
    spins = []
    for x in enumerate_gf2_solutions(solutions):
        members = tuple(v for v, bit in zip(ids, x) if bit)
        spins.append(SpinStructure(members, f_value(g, members)))
    logger.debug("%d characteristic subgraphs", len(spins))
    return spins


def base_filling(g):
    return FillingInvariants(len(g), signature(laplacian(g)))


def kaplan_invariants(g, spin):
    if spin.f == 0:
        raise DegenerateFraming(f"f = 0 for {set(spin.subgraph) or '{}'}: no +-1 framed unknot to blow down")
    base = base_filling(g)
    return FillingInvariants(base.b2 + abs(spin.f) - 2, base.sigma - spin.f)


def simulate_kaplan(g, subset, order=None, seed=None):
    """
    Slide the components of L_S over each other by contracting their vertices
    one at a time. Without `order` the vertices are taken in lexicographic
    order of their ids, shuffled by `seed` when one is given.
    """
    members = sorted(set(subset))
    if len(members) == 0:
        raise ChainmailError("simulate_kaplan needs a nonempty vertex subset")
    for v in subset:
        g.index(v)
    if order is not None:
        if sorted(order) != sorted(members):
            raise ChainmailError("order must be a permutation of the subset")
        members = list(order)
    elif seed is not None:
        random.Random(seed).shuffle(members)

    current, acc = g, members[0]
    steps = []
    for v in members[1:]:
        merged = f"{acc}+{v}"
        current = contract_vertices(current, acc, v, merged_id=merged)
        steps.append(KaplanStep((acc, v), current.weight(merged)))
        acc = merged
    final = current.weight(acc)
    return KaplanTrace(tuple(steps), final, max(abs(final) - 1, 0))


def homology_order(g):
    return abs(determinant(laplacian(g)))


def homology_group(g):
    return smith_normal_form(laplacian(g))


def homology_is_cyclic(g):
    return sum(1 for d in homology_group(g).factors if d != 1) <= 1
