"""
Copyright (c) 2026 pyChainmail contributors

Fundamental groups of chainmail surgeries read off reduced Tait graphs, and
weight-one certificates: kill one generator, eliminate generators that occur
exactly once in some relator, and check that the survivor's exponents have
gcd 1. A valid certificate shows the group is normally generated by the
killed generator; failure never proves the opposite.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import logging
import math
from collections import namedtuple

import numpy as np
from sympy.combinatorics.free_groups import free_group

from ..graph import incident_edges, signed_degree
from ..linalg import smith_normal_form
from ..utils import ChainmailError


logger = logging.getLogger(__name__)


GroupPresentation = namedtuple('GroupPresentation', ['free_group', 'generators', 'relators'])
EliminationStep = namedtuple('EliminationStep', ['round', 'generator', 'word', 'relator'])
SimplificationResult = namedtuple('SimplificationResult', ['presentation', 'killed_generator', 'log'])
WeightOneCertificate = namedtuple('WeightOneCertificate', ['killed_generator', 'elimination_log', 'final_exponents', 'gcd'])
Inconclusive = namedtuple('Inconclusive', ['killed_generator', 'elimination_log', 'surviving_generators', 'final_exponents', 'reason'])

NEGATIVE_EDGE_FACTORS = ('inverse', 'reversed')


def generator_names(n):
    return [f"x{k + 1}" for k in range(n)]


def _lookup(p):
    return {str(gen): gen for gen in p.free_group.generators}


def presentation_from_graph(g, negative_edge_factor='inverse'):
    """
    One generator x_v per vertex and one relator per vertex,

        r_v = x_v^e(v) * prod over edges {v, u} of (x_u^-1 x_v)^mu,

    with e(v) = -w(v) - (signed degree of v). Edge factors follow the rotation
    at v when there is one, otherwise the canonical edge order. A negative
    edge contributes (x_u^-1 x_v)^-1 ('inverse') or x_u x_v^-1 ('reversed');
    both abelianize the same way.
    """
    if negative_edge_factor not in NEGATIVE_EDGE_FACTORS:
        raise ChainmailError(f"negative_edge_factor must be one of {NEGATIVE_EDGE_FACTORS}")
    if len(g) == 0:
        return GroupPresentation(None, (), ())
    names = generator_names(len(g))
    F, *gens = free_group(",".join(names))
    x = dict(zip(g.ids(), gens))
    if any(e.sign < 0 for e in g.edges):
        logger.warning("graph has negative edges: relator convention '%s' is experimental", negative_edge_factor)

    relators = []
    for vertex in g.vertices:
        v = vertex.id
        word = x[v] ** (-vertex.weight - signed_degree(g, v))
        order = g.rotation.get(v, ()) if g.rotation is not None else incident_edges(g, v)
        for k in order:
            e = g.edges[k]
            u = e.v if e.u == v else e.u
            if e.sign > 0:
                word = word * x[u] ** -1 * x[v]
            elif negative_edge_factor == 'inverse':
                word = word * x[v] ** -1 * x[u]
            else:
                word = word * x[u] * x[v] ** -1
        relators.append(word)
    return GroupPresentation(F, tuple(names), tuple(relators))


def exponent_matrix(p):
    gens = _lookup(p) if p.free_group is not None else {}
    return np.array([[r.exponent_sum(gens[name]) for name in p.generators] for r in p.relators],
                    dtype=object).reshape(len(p.relators), len(p.generators))


def abelianization(p):
    return smith_normal_form(exponent_matrix(p), ncols=len(p.generators))


def _solve(relator, gen):
    """Solve u g^eps v = 1 for g, where g occurs once in the relator."""
    letters = relator.letter_form
    F = relator.group
    for i, letter in enumerate(letters):
        if letter == gen.letter_form[0] or letter == (gen ** -1).letter_form[0]:
            eps = 1 if letter == gen.letter_form[0] else -1
            u = relator.subword(0, i) if i > 0 else F.identity
            v = relator.subword(i + 1, len(letters)) if i + 1 < len(letters) else F.identity
            return u ** -1 * v ** -1 if eps == 1 else v * u
    raise ChainmailError(f"{gen} does not occur in the relator")


def kill_generator_and_simplify(p, g0):
    """
    Set g0 = 1, then eliminate in rounds. Within a round relators are scanned
    in order and each may solve for the first generator (in generator order)
    occurring in it exactly once, as long as the solution avoids the
    generators solved earlier in the round and the generator does not occur
    in those solutions. A round's solutions are substituted together and the
    relators they came from are dropped. Trivial relators are kept.
    """
    if g0 not in p.generators:
        raise ChainmailError(f"unknown generator '{g0}'")
    gens = _lookup(p)
    F = p.free_group
    relators = [r.eliminate_word(gens[g0], F.identity, _all=True) for r in p.relators]
    generators = [name for name in p.generators if name != g0]
    log = []
    rnd = 0

    while True:
        rnd += 1
        solved, used = {}, []
        for idx, r in enumerate(relators):
            for name in generators:
                gen = gens[name]
                if name in solved or r.generator_count(gen) != 1:
                    continue
                word = _solve(r, gen)
                if any(word.generator_count(gens[h]) for h in solved):
                    continue
                if any(w.generator_count(gen) for w in solved.values()):
                    continue
                solved[name] = word
                used.append(idx)
                log.append(EliminationStep(rnd, name, word, r))
                logger.debug("round %d: %s = %s from %s", rnd, name, format_word(word), format_word(r))
                break
        if not solved:
            break
        substitution = {gens[name]: word for name, word in solved.items()}
        relators = [r.eliminate_words(substitution, _all=True) for idx, r in enumerate(relators) if idx not in used]
        generators = [name for name in generators if name not in solved]

    return SimplificationResult(GroupPresentation(F, tuple(generators), tuple(relators)), g0, tuple(log))


def leftover_generators(p, result):
    gens = _lookup(p)
    removed = [name for name in p.generators if name not in result.presentation.generators]
    words = list(result.presentation.relators) + [step.word for step in result.log]
    return tuple(name for name in removed if any(w.generator_count(gens[name]) for w in words))


def weight_one_certificate(p, g0):
    result = kill_generator_and_simplify(p, g0)
    q = result.presentation
    stale = leftover_generators(p, result)
    if stale:
        return Inconclusive(g0, result.log, q.generators, (),
                            f"removed generators still occur: {', '.join(stale)}")
    if len(q.generators) != 1:
        return Inconclusive(g0, result.log, q.generators, (),
                            f"{len(q.generators)} generators survive; need exactly one")
    survivor = _lookup(q)[q.generators[0]]
    exponents = tuple(r.exponent_sum(survivor) for r in q.relators)
    d = math.gcd(*exponents) if exponents else 0
    if d != 1:
        return Inconclusive(g0, result.log, q.generators, exponents, f"gcd of exponents is {d}")
    return WeightOneCertificate(g0, result.log, exponents, d)


def format_word(w):
    if w.is_identity:
        return "1"
    return " ".join(str(sym) if e == 1 else f"{sym}^{e}" for sym, e in w.array_form)


def format_presentation(p):
    return "< " + ", ".join(p.generators) + " | " + ", ".join(format_word(r) for r in p.relators) + " >"


def format_elimination(step):
    return f"round {step.round}: {step.generator} = {format_word(step.word)}  (from {format_word(step.relator)})"


def _letters(w):
    return [(str(sym), 1 if e > 0 else -1) for sym, e in w.array_form for _ in range(abs(e))]


def _reduce(letters):
    stack = []
    for letter in letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def _substitute(letters, mapping):
    out = []
    for name, e in letters:
        if name in mapping:
            word = mapping[name]
            out += word if e == 1 else [(n, -s) for n, s in reversed(word)]
        else:
            out.append((name, e))
    return _reduce(out)


def replay_elimination(p, g0, result):
    """
    Re-run a logged simplification on plain letter lists: every logged
    relator must be present when its round starts, substituting its solution
    into it must give the empty word, and the rounds must end at the returned
    presentation.
    """
    relators = [_substitute(_letters(r), {g0: []}) for r in p.relators]
    rounds = {}
    for step in result.log:
        rounds.setdefault(step.round, []).append(step)
    for rnd in sorted(rounds):
        mapping, remaining = {}, list(relators)
        for step in rounds[rnd]:
            relator = _letters(step.relator)
            word = _letters(step.word)
            if relator not in remaining:
                return False
            remaining.remove(relator)
            if _substitute(relator, {step.generator: word}):
                return False
            if any(name == step.generator for w in mapping.values() for name, _ in w):
                return False
            if any(name in mapping for name, _ in word):
                return False
            mapping[step.generator] = word
        relators = [_substitute(r, mapping) for r in remaining]
    return relators == [_letters(r) for r in result.presentation.relators]
