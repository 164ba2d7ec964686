"""
Copyright (c) 2026 pyChainmail contributors

Planar diagram codes, face tracing, checkerboard colorings and Tait graphs.
The reduced white Tait graph of a link diagram, read as a chainmail graph,
is a surgery diagram for the branched double cover of the link.

PD tuples list the four arc labels around a crossing counterclockwise,
starting at the incoming under-strand. A dart is a (crossing, position) pair.
The corner c of a crossing is the sector between positions c and c + 1, so
the under-strand sits at positions 0 and 2 and corners 0 and 2 face each
other.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import logging
import re
from collections import Counter, namedtuple

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..graph import ChainmailGraph, induced_subgraph, signed_degree
from ..utils import ChainmailError, DiagramSyntaxError, NugatoryCrossingError, SplitDiagramError


logger = logging.getLogger(__name__)


PlanarDiagramCode = namedtuple('PlanarDiagramCode', ['crossings'])
CheckerboardColoring = namedtuple('CheckerboardColoring', ['faces', 'colors', 'outer'])
TaitGraph = namedtuple('TaitGraph', ['underlying', 'root', 'boundary_lengths'])

WHITE, BLACK = 'white', 'black'
COLORS = (WHITE, BLACK)

_CROSSING = re.compile(r'X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]')


def parse_pd(text):
    """
    Read whitespace-separated tokens "X[a,b,c,d]" with positive arc labels;
    "#" starts a comment running to the end of the line.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos == len(body):
            break
        match = _CROSSING.match(body, pos)
        if match is None:
            token = body[pos:].split(None, 1)[0]
            raise DiagramSyntaxError(f"malformed crossing token '{token}'", crossing=len(crossings))
        labels = tuple(int(x) for x in match.groups())
        if 0 in labels:
            raise DiagramSyntaxError("arc labels must be positive", crossing=len(crossings))
        crossings.append(labels)
        pos = match.end()

    counts = Counter(label for c in crossings for label in c)
    for k, c in enumerate(crossings):
        for label in c:
            if counts[label] != 2:
                raise DiagramSyntaxError(f"arc label {label} occurs {counts[label]} times, expected 2", crossing=k)
    return PlanarDiagramCode(tuple(crossings))


def format_pd(pd):
    return " ".join("X[{},{},{},{}]".format(*c) for c in pd.crossings)


def arcs(pd):
    return sorted({label for c in pd.crossings for label in c})


def _components(n, pairs):
    if n == 0:
        return 0, np.zeros(0, dtype=int)
    rows = [a for a, _ in pairs]
    cols = [b for _, b in pairs]
    adjacency = coo_matrix((np.ones(len(pairs)), (rows, cols)), shape=(n, n))
    return connected_components(adjacency, directed=False)


def link_components(pd):
    """Number of components of the link: strands run from position i to i + 2."""
    if not pd.crossings:
        return 1
    labels = {label: k for k, label in enumerate(arcs(pd))}
    pairs = []
    for c in pd.crossings:
        pairs.append((labels[c[0]], labels[c[2]]))
        pairs.append((labels[c[1]], labels[c[3]]))
    return int(_components(len(labels), pairs)[0])


def _partners(pd):
    seen = {}
    partner = {}
    for k, c in enumerate(pd.crossings):
        for i, label in enumerate(c):
            if label in seen:
                partner[(k, i)] = seen[label]
                partner[seen[label]] = (k, i)
            else:
                seen[label] = (k, i)
    return partner


def trace_faces(pd):
    """
    Faces of the 4-valent plane graph as orbits of darts under "go to the
    other end of the arc, then turn to the next position counterclockwise".
    Each face is returned as its tuple of corners (crossing, corner). A
    diagram without crossings has two empty faces.
    """
    n = len(pd.crossings)
    if n == 0:
        return ((), ())
    partner = _partners(pd)
    pairs = [(k, partner[(k, i)][0]) for k in range(n) for i in range(4)]
    n_parts = int(_components(n, pairs)[0])
    if n_parts > 1:
        raise SplitDiagramError(f"diagram has {n_parts} disjoint pieces; split diagrams are not supported")

    visited = set()
    faces = []
    for k in range(n):
        for i in range(4):
            if (k, i) in visited:
                continue
            corners = []
            dart = (k, i)
            while dart not in visited:
                visited.add(dart)
                corners.append((dart[0], (dart[1] - 1) % 4))
                other = partner[dart]
                dart = (other[0], (other[1] + 1) % 4)
            faces.append(tuple(corners))

    if len(faces) != n + 2:
        raise DiagramSyntaxError(f"{len(faces)} faces for {n} crossings: the code is not planar")
    logger.debug("traced %d faces for %d crossings", len(faces), n)
    return tuple(faces)


def corner_faces(faces):
    return {corner: f for f, face in enumerate(faces) for corner in face}


def default_outer_face(faces):
    return max(range(len(faces)), key=lambda f: (len(faces[f]), -f))


def checkerboard_coloring(pd, outer_color=BLACK, outer_face=None):
    if outer_color not in COLORS:
        raise ChainmailError(f"outer color must be one of {COLORS}, got '{outer_color}'")
    faces = trace_faces(pd)
    outer = default_outer_face(faces) if outer_face is None else outer_face
    if not 0 <= outer < len(faces):
        raise ChainmailError(f"no face {outer}")
    other = BLACK if outer_color == WHITE else WHITE
    if not pd.crossings:
        return CheckerboardColoring(faces, tuple(outer_color if f == outer else other for f in range(2)), outer)

    face_of = corner_faces(faces)
    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(len(faces)))
    for k in range(len(pd.crossings)):
        for c in range(4):
            adjacency.add_edge(face_of[(k, c)], face_of[(k, (c + 1) % 4)])
    try:
        parity = nx.bipartite.color(adjacency)
    except nx.NetworkXError:
        raise DiagramSyntaxError("face adjacency is not bipartite: the code is not planar")
    colors = tuple(outer_color if parity[f] == parity[outer] else other for f in range(len(faces)))
    return CheckerboardColoring(faces, colors, outer)


def _white_corners(coloring, face_of, k):
    return (0, 2) if coloring.colors[face_of[(k, 0)]] == WHITE else (1, 3)


def crossing_sign(pd, coloring, c):
    """
    +1 when a quarter turn counterclockwise takes the under-strand through the
    white corners onto the over-strand, that is when corner 0 is white.
    """
    if not 0 <= c < len(pd.crossings):
        raise ChainmailError(f"no crossing {c}")
    face_of = corner_faces(coloring.faces)
    return 1 if coloring.colors[face_of[(c, 0)]] == WHITE else -1


def white_tait_graph(pd, coloring):
    """
    One vertex per white face, one edge per crossing joining its two white
    corners with sign -mu(c), and w(v) = -(sum of the edge signs at v). The
    rotation at a vertex is the order in which its boundary walk meets the
    crossings.
    """
    faces = coloring.faces
    face_of = corner_faces(faces)
    white = [f for f in range(len(faces)) if coloring.colors[f] == WHITE]
    ids = {f: f"f{f}" for f in white}

    edges = []
    weight = {f: 0 for f in white}
    for k in range(len(pd.crossings)):
        a, b = _white_corners(coloring, face_of, k)
        fa, fb = face_of[(k, a)], face_of[(k, b)]
        if fa == fb:
            raise NugatoryCrossingError(k)
        sign = -crossing_sign(pd, coloring, k)
        edges.append((ids[fa], ids[fb], sign))
        weight[fa] -= sign
        weight[fb] -= sign
    rotation = {ids[f]: [k for k, _ in faces[f]] for f in white} if pd.crossings else None
    g = ChainmailGraph([(ids[f], weight[f]) for f in white], edges, rotation)
    lengths = {ids[f]: len(faces[f]) for f in white}
    logger.debug("white Tait graph: %d vertices, %d edges", len(g), len(g.edges))
    return TaitGraph(g, None, lengths)


def default_root(t):
    ids = t.underlying.ids()
    if not ids:
        raise ChainmailError("Tait graph has no vertices")
    lengths = t.boundary_lengths or {}
    return max(ids, key=lambda v: (lengths.get(v, 0), -ids.index(v)))


def satisfies_weight_relation(g):
    return all(vertex.weight == -signed_degree(g, vertex.id) for vertex in g.vertices)


def reduce_tait(t, root=None):
    root = root if root is not None else (t.root if t.root is not None else default_root(t))
    g = t.underlying
    g.index(root)
    return induced_subgraph(g, [v for v in g.ids() if v != root])


def complete_to_tait(g, root_id='r'):
    """
    Add a root joined to every vertex v by |m_v| parallel edges of sign
    sgn(m_v), m_v = -w(v) - (signed degree of v), so that the weight relation
    holds everywhere.
    """
    if g.has_vertex(root_id):
        raise ChainmailError(f"root id '{root_id}' is already a vertex")
    edges = list(g.edges)
    added = {}
    for vertex in g.vertices:
        m = -vertex.weight - signed_degree(g, vertex.id)
        start = len(edges)
        edges += [(root_id, vertex.id, 1 if m > 0 else -1)] * abs(m)
        added[vertex.id] = list(range(start, len(edges)))
    root_weight = -sum(e[2] for e in edges[len(g.edges):])

    rotation = None
    if g.rotation is not None:
        rotation = {v: list(g.rotation.get(v, ())) + added[v] for v in g.ids()}
        rotation[root_id] = [k for v in g.ids() for k in added[v]]
    t = ChainmailGraph(list(g.vertices) + [(root_id, root_weight)], edges, rotation)
    return TaitGraph(t, root_id, None)
