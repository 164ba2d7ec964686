"""
Copyright (c) 2026 pyChainmail contributors

Weighted, signed plane multigraphs. Each vertex stands for an unknot framed
by its weight, each edge for a clasp of the given sign; the graph is the
universal input of every other module in the package.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import json
import logging
from collections import Counter, namedtuple

import networkx as nx
import numpy as np

from ..linalg import SymmetricIntMatrix
from ..utils import ChainmailError, GraphSyntaxError, GraphValidationError, UnknownVertexError


logger = logging.getLogger(__name__)


Vertex = namedtuple('Vertex', ['id', 'weight'])
Edge = namedtuple('Edge', ['u', 'v', 'sign'])
ValidationReport = namedtuple('ValidationReport', ['ok', 'violations'])


class ChainmailGraph:
    """
    Vertices keep their declaration order, which is also the row order of the
    Laplacian. Edges are stored in canonical order: each edge is oriented so
    that `u` is declared before `v`, then edges are sorted by the declaration
    positions of their endpoints and by sign. Parallel edges of opposite sign
    are kept. The optional rotation maps a vertex id to the cyclic order of
    its incident edges, given as indices into `edges`.

    With check=True (the default) an invalid graph raises GraphValidationError;
    pass check=False to build one for `validate` to inspect.
    """

    def __init__(self, vertices, edges=(), rotation=None, check=True):
        self.vertices = tuple(Vertex(str(v), int(w)) for v, w in vertices)
        raw = [Edge(str(u), str(v), int(s)) for u, v, s in edges]
        position = {}
        for i, vertex in enumerate(self.vertices):
            position.setdefault(vertex.id, i)
        unknown = len(self.vertices)

        def rank(x):
            return (position.get(x, unknown), x)

        oriented = [e if rank(e.u) <= rank(e.v) else Edge(e.v, e.u, e.sign) for e in raw]
        order = sorted(range(len(oriented)), key=lambda k: (rank(oriented[k].u), rank(oriented[k].v), oriented[k].sign))
        self.edges = tuple(oriented[k] for k in order)
        new_index = {old: new for new, old in enumerate(order)}

        if rotation is None:
            self.rotation = None
        else:
            self.rotation = {
                str(v): tuple(new_index.get(int(k), int(k)) for k in cyclic)
                for v, cyclic in sorted(rotation.items(), key=lambda item: rank(str(item[0])))
            }

        self._position = position
        if check:
            report = validate(self)
            if not report.ok:
                raise GraphValidationError(report.violations)

    def ids(self):
        return [v.id for v in self.vertices]

    def index(self, v):
        try:
            return self._position[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex '{v}'")

    def has_vertex(self, v):
        return v in self._position

    def weight(self, v):
        return self.vertices[self.index(v)].weight

    def weights(self):
        return [v.weight for v in self.vertices]

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return (isinstance(other, ChainmailGraph) and self.vertices == other.vertices
                and self.edges == other.edges and self.rotation == other.rotation)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"ChainmailGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def validate(g):
    violations = []
    seen = Counter(v.id for v in g.vertices)
    for vid, count in seen.items():
        if count > 1:
            violations.append(f"duplicate vertex id '{vid}'")

    for k, e in enumerate(g.edges):
        if e.u == e.v:
            violations.append(f"self-loop: edge {k} joins '{e.u}' to itself")
        for end in (e.u, e.v):
            if end not in seen:
                violations.append(f"dangling endpoint: edge {k} refers to undeclared vertex '{end}'")
        if e.sign not in (1, -1):
            violations.append(f"bad sign: edge {k} has sign {e.sign}")

    if g.rotation is not None:
        for vid in g.rotation:
            if vid not in seen:
                violations.append(f"inconsistent rotation: undeclared vertex '{vid}'")
        for vertex in g.vertices:
            incident = Counter(k for k, e in enumerate(g.edges) if vertex.id in (e.u, e.v))
            cyclic = Counter(g.rotation.get(vertex.id, ()))
            if incident != cyclic:
                violations.append(f"inconsistent rotation at '{vertex.id}': expected each of edges "
                                  f"{sorted(incident)} exactly once, got {list(g.rotation.get(vertex.id, ()))}")

    return ValidationReport(not violations, violations)


def _check_pair(g, u, v):
    g.index(u)
    g.index(v)
    if u == v:
        raise ChainmailError(f"expected two distinct vertices, got '{u}' twice")


def signed_edge_count(g, u, v):
    _check_pair(g, u, v)
    return sum(e.sign for e in g.edges if {e.u, e.v} == {u, v})


def incident_edges(g, v):
    g.index(v)
    return [k for k, e in enumerate(g.edges) if v in (e.u, e.v)]


def signed_degree(g, v):
    return sum(g.edges[k].sign for k in incident_edges(g, v))


def laplacian(g):
    n = len(g)
    A = np.zeros((n, n), dtype=object)
    for i, vertex in enumerate(g.vertices):
        A[i, i] = vertex.weight
    for e in g.edges:
        i, j = g.index(e.u), g.index(e.v)
        A[i, j] += e.sign
        A[j, i] += e.sign
    return SymmetricIntMatrix(A)


def induced_subgraph(g, subset):
    members = set(subset)
    for v in members:
        g.index(v)
    kept = [k for k, e in enumerate(g.edges) if e.u in members and e.v in members]
    rotation = None
    if g.rotation is not None:
        renumber = {old: new for new, old in enumerate(kept)}
        rotation = {v: tuple(renumber[k] for k in g.rotation.get(v, ()) if k in renumber)
                    for v in g.ids() if v in members}
    return ChainmailGraph([v for v in g.vertices if v.id in members],
                          [g.edges[k] for k in kept], rotation)


def contract_vertices(g, i, j, merged_id=None):
    """
    Slide the unknot of i over the unknot of j: i and j become one vertex of
    weight w(i) + w(j) + 2 mu(E(i, j)) placed at the earlier of their
    positions. Edges between i and j disappear, all other edges at i or j move
    to the merged vertex with their signs. The rotation system is dropped.
    """
    _check_pair(g, i, j)
    merged_id = merged_id if merged_id is not None else f"{i}+{j}"
    weight = g.weight(i) + g.weight(j) + 2 * signed_edge_count(g, i, j)
    first = min(g.index(i), g.index(j))

    vertices = []
    for k, vertex in enumerate(g.vertices):
        if k == first:
            vertices.append((merged_id, weight))
        elif vertex.id not in (i, j):
            vertices.append(vertex)

    def moved(x):
        return merged_id if x in (i, j) else x

    edges = [(moved(e.u), moved(e.v), e.sign) for e in g.edges if {e.u, e.v} != {i, j}]
    logger.debug("contract %s, %s -> %s with weight %d", i, j, merged_id, weight)
    return ChainmailGraph(vertices, edges)


def with_weight(g, v, weight):
    vertices = [(x.id, weight if x.id == v else x.weight) for x in g.vertices]
    g.index(v)
    return ChainmailGraph(vertices, g.edges, g.rotation)


def relabel(g, mapping=None, order=None):
    """
    Rename vertices through `mapping` (old id -> new id) and/or reorder them
    (`order` lists the old ids in their new declaration order).
    """
    mapping = mapping or {}
    old_ids = list(order) if order is not None else g.ids()
    if sorted(old_ids) != sorted(g.ids()):
        raise ChainmailError("order must be a permutation of the vertex ids")
    rename = {v: mapping.get(v, v) for v in g.ids()}
    rotation = None
    if g.rotation is not None:
        # indices still refer to g.edges, which is the edge list passed on
        rotation = {rename[v]: list(cyc) for v, cyc in g.rotation.items()}
    return ChainmailGraph([(rename[v], g.weight(v)) for v in old_ids],
                          [(rename[e.u], rename[e.v], e.sign) for e in g.edges], rotation)


def graph_from_signed_counts(vertices, counts):
    """
    Build a graph from (id, weight) pairs and a map {(u, v): k}, realising each
    signed count k by |k| parallel edges of sign sgn(k).
    """
    edges = []
    for (u, v), k in counts.items():
        edges += [(u, v, 1 if k > 0 else -1)] * abs(int(k))
    return ChainmailGraph(vertices, edges)


def to_networkx(g):
    G = nx.MultiGraph()
    for vertex in g.vertices:
        G.add_node(vertex.id, weight=vertex.weight)
    for k, e in enumerate(g.edges):
        G.add_edge(e.u, e.v, key=k, sign=e.sign)
    return G


def _sign_profile(g):
    M = to_networkx(g)
    G = nx.Graph()
    G.add_nodes_from(M.nodes(data=True))
    for u, v, sign in M.edges(data='sign'):
        signs = G.edges[u, v]['signs'] if G.has_edge(u, v) else ()
        G.add_edge(u, v, signs=tuple(sorted(signs + (sign,))))
    return G


def is_isomorphic(g, h):
    """
    Isomorphism of weighted signed multigraphs: weights correspond and every
    pair of vertices carries the same multiset of edge signs. Rotations are
    ignored.
    """
    iso = nx.algorithms.isomorphism
    return nx.is_isomorphic(_sign_profile(g), _sign_profile(h),
                            node_match=iso.categorical_node_match('weight', None),
                            edge_match=iso.categorical_edge_match('signs', ()))


def _sign_token(value, path):
    if isinstance(value, bool):
        raise GraphSyntaxError(f"malformed sign token {value!r}", path=path)
    if value in (1, -1):
        return value
    if value in ("+", "+1", "1"):
        return 1
    if value in ("-", "-1"):
        return -1
    raise GraphSyntaxError(f"malformed sign token {value!r}", path=path)


def _int_field(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphSyntaxError(f"expected an integer, got {value!r}", path=path)
    return value


def parse_graph(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphSyntaxError(err.msg, line=err.lineno, column=err.colno)
    if not isinstance(data, dict):
        raise GraphSyntaxError("expected a JSON object", path="$")
    unknown_keys = set(data) - {"vertices", "edges", "rotation"}
    if unknown_keys:
        raise GraphSyntaxError(f"unexpected keys {sorted(unknown_keys)}", path="$")

    vertices = []
    for k, item in enumerate(data.get("vertices", [])):
        path = f"vertices[{k}]"
        if not isinstance(item, dict) or "id" not in item:
            raise GraphSyntaxError("expected an object with an 'id'", path=path)
        if not isinstance(item["id"], str) or not item["id"]:
            raise GraphSyntaxError("vertex id must be a non-empty string", path=path + ".id")
        vertices.append((item["id"], _int_field(item.get("weight", 0), path + ".weight")))

    edges = []
    for k, item in enumerate(data.get("edges", [])):
        path = f"edges[{k}]"
        if not isinstance(item, dict) or "u" not in item or "v" not in item:
            raise GraphSyntaxError("expected an object with 'u' and 'v'", path=path)
        edges.append((str(item["u"]), str(item["v"]), _sign_token(item.get("sign", 1), path + ".sign")))

    rotation = data.get("rotation")
    if rotation is not None:
        if not isinstance(rotation, dict):
            raise GraphSyntaxError("rotation must map vertex ids to edge index lists", path="rotation")
        for v, cyclic in rotation.items():
            if not isinstance(cyclic, list):
                raise GraphSyntaxError("expected a list of edge indices", path=f"rotation.{v}")
            for k in cyclic:
                _int_field(k, f"rotation.{v}")
                if not 0 <= k < len(edges):
                    raise GraphSyntaxError(f"edge index {k} out of range", path=f"rotation.{v}")

    g = ChainmailGraph(vertices, edges, rotation, check=False)
    report = validate(g)
    if not report.ok:
        raise GraphValidationError(report.violations)
    return g


def serialize_graph(g):
    """
    Graph file text: vertices in declaration order, edges in the canonical
    order of ChainmailGraph, i.e. sorted lexicographically by (position of u,
    position of v, sign) so that rotation indices survive a round trip.
    """
    lines = ["{", '  "vertices": [']
    lines += [f"    {json.dumps({'id': v.id, 'weight': v.weight})}," for v in g.vertices]
    if g.vertices:
        lines[-1] = lines[-1][:-1]
    lines += ["  ],", '  "edges": [']
    lines += [f"    {json.dumps({'u': e.u, 'v': e.v, 'sign': e.sign})}," for e in g.edges]
    if g.edges:
        lines[-1] = lines[-1][:-1]
    if g.rotation is None:
        lines += ["  ]", "}"]
    else:
        lines += ["  ],", '  "rotation": {']
        lines += [f"    {json.dumps(v)}: {json.dumps(list(cyc))}," for v, cyc in g.rotation.items()]
        if g.rotation:
            lines[-1] = lines[-1][:-1]
        lines += ["  }", "}"]
    return "\n".join(lines) + "\n"
