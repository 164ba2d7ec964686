"""
Copyright (c) 2026 pyChainmail contributors

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import unittest
import argparse

import numpy as np

from . import tait
from ..graph import ChainmailGraph, laplacian, signed_edge_count
from ..linalg import determinant


TREFOIL = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
KINK = "X[1,1,2,2]"
HOPF = "X[4,1,3,2] X[2,3,1,4]"

D_EX_VERTICES = [("v1", -5), ("v2", 0), ("v3", 0), ("v4", -4)]
D_EX_EDGES = [("v1", "v2", 1)] + [("v1", "v3", 1)] * 3 + [("v2", "v4", 1), ("v3", "v4", 1)]


def mirror(pd):
    """Exchange over- and under-strands at every crossing."""
    return tait.PlanarDiagramCode(tuple(c[1:] + c[:1] for c in pd.crossings))


def random_graph(rng, n, max_mult=3, weight_bound=6):
    ids = [f"u{k}" for k in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(int(rng.integers(0, max_mult + 1))):
                edges.append((ids[i], ids[j], int(rng.choice([-1, 1]))))
    weights = rng.integers(-weight_bound, weight_bound + 1, size=n)
    return ChainmailGraph(list(zip(ids, (int(w) for w in weights))), edges)


class TestTait(unittest.TestCase):
    seed = 0
    n_random = 100

    def setUp(self):
        self.rng = np.random.default_rng(self.seed)
        self.trefoil = tait.parse_pd(TREFOIL)
        self.figure_eight = tait.parse_pd(FIGURE_EIGHT)


    def reduced_det(self, pd, outer_color='black', root=None):
        t = tait.white_tait_graph(pd, tait.checkerboard_coloring(pd, outer_color))
        return determinant(laplacian(tait.reduce_tait(t, root)))


    def test_parse_pd(self):
        self.assertEqual(len(self.trefoil.crossings), 3)
        self.assertEqual(tait.arcs(self.trefoil), [1, 2, 3, 4, 5, 6])
        self.assertEqual(tait.format_pd(self.trefoil), TREFOIL)
        commented = tait.parse_pd("# trefoil\nX[1, 5, 2, 4]\n  X[3,1,4,6] # second\nX[5,3,6,2]\n")
        self.assertEqual(commented, self.trefoil)
        self.assertEqual(tait.parse_pd("").crossings, ())
        self.assertEqual(tait.parse_pd("# nothing\n").crossings, ())
        self.assertEqual(tait.parse_pd(KINK).crossings, ((1, 1, 2, 2),))


    def test_parse_errors(self):
        for text in ("X[1,2,3]", "Y[1,1,2,2]", "X[0,1,1,0]", "X[1,2,3,4]", "X[1,1,2,2] X[1,2,3,3]", "X[1,1,2,2] junk"):
            with self.assertRaises(tait.DiagramSyntaxError):
                tait.parse_pd(text)
        with self.assertRaises(tait.DiagramSyntaxError) as ctx:
            tait.parse_pd("X[1,1,2,2] X[3,4,5]")
        self.assertEqual(ctx.exception.crossing, 1)


    def test_faces(self):
        self.assertEqual(len(tait.trace_faces(self.trefoil)), 5)
        self.assertEqual(len(tait.trace_faces(self.figure_eight)), 6)
        self.assertEqual(len(tait.trace_faces(tait.parse_pd(KINK))), 3)
        self.assertEqual(tait.trace_faces(tait.parse_pd("")), ((), ()))
        for pd in (self.trefoil, self.figure_eight):
            faces = tait.trace_faces(pd)
            corners = sorted(c for face in faces for c in face)
            self.assertEqual(corners, [(k, c) for k in range(len(pd.crossings)) for c in range(4)])
        self.assertEqual(sorted(len(f) for f in tait.trace_faces(self.trefoil)), [2, 2, 2, 3, 3])


    def test_split_and_components(self):
        with self.assertRaises(tait.SplitDiagramError):
            tait.trace_faces(tait.parse_pd("X[1,1,2,2] X[3,3,4,4]"))
        self.assertEqual(tait.link_components(self.trefoil), 1)
        self.assertEqual(tait.link_components(self.figure_eight), 1)
        self.assertEqual(tait.link_components(tait.parse_pd(HOPF)), 2)
        self.assertEqual(tait.link_components(tait.parse_pd("")), 1)


    def test_checkerboard_coloring(self):
        black = tait.checkerboard_coloring(self.trefoil, tait.BLACK)
        white = tait.checkerboard_coloring(self.trefoil, tait.WHITE)
        self.assertEqual(black.colors[black.outer], tait.BLACK)
        self.assertEqual(black.colors.count(tait.WHITE), 3)
        self.assertEqual(white.colors.count(tait.WHITE), 2)
        self.assertEqual(black.outer, white.outer)
        for a, b in zip(black.colors, white.colors):
            self.assertNotEqual(a, b)

        face_of = tait.corner_faces(black.faces)
        for k in range(3):
            for c in range(4):
                self.assertNotEqual(black.colors[face_of[(k, c)]], black.colors[face_of[(k, (c + 1) % 4)]])

        with self.assertRaises(tait.ChainmailError):
            tait.checkerboard_coloring(self.trefoil, 'green')
        with self.assertRaises(tait.ChainmailError):
            tait.checkerboard_coloring(self.trefoil, outer_face=7)


    def test_crossing_signs(self):
        coloring = tait.checkerboard_coloring(self.trefoil)
        signs = [tait.crossing_sign(self.trefoil, coloring, k) for k in range(3)]
        self.assertEqual(len(set(signs)), 1)

        mirrored = mirror(self.trefoil)
        mirrored_coloring = tait.checkerboard_coloring(mirrored)
        self.assertEqual([tait.crossing_sign(mirrored, mirrored_coloring, k) for k in range(3)], [-s for s in signs])

        flipped = tait.checkerboard_coloring(self.trefoil, tait.WHITE)
        self.assertEqual([tait.crossing_sign(self.trefoil, flipped, k) for k in range(3)], [-s for s in signs])

        with self.assertRaises(tait.ChainmailError):
            tait.crossing_sign(self.trefoil, coloring, 3)


    def test_trefoil_tait_graph(self):
        t = tait.white_tait_graph(self.trefoil, tait.checkerboard_coloring(self.trefoil))
        g = t.underlying
        self.assertEqual(len(g), 3)
        self.assertEqual(len(g.edges), 3)
        self.assertEqual(len({e.sign for e in g.edges}), 1)
        self.assertTrue(tait.satisfies_weight_relation(g))
        self.assertEqual(sorted(t.boundary_lengths.values()), [2, 2, 2])
        for u, v in [(g.ids()[0], g.ids()[1]), (g.ids()[1], g.ids()[2])]:
            self.assertEqual(abs(signed_edge_count(g, u, v)), 1)

        t = tait.white_tait_graph(self.trefoil, tait.checkerboard_coloring(self.trefoil, tait.WHITE))
        self.assertEqual(len(t.underlying), 2)
        self.assertEqual(len(t.underlying.edges), 3)
        self.assertEqual(sorted(abs(w) for w in t.underlying.weights()), [3, 3])


    def test_determinants(self):
        for pd, det in ((self.trefoil, 3), (self.figure_eight, 5)):
            for outer_color in (tait.BLACK, tait.WHITE):
                t = tait.white_tait_graph(pd, tait.checkerboard_coloring(pd, outer_color))
                for root in t.underlying.ids():
                    self.assertEqual(abs(self.reduced_det(pd, outer_color, root)), det)
                self.assertEqual(abs(self.reduced_det(pd, outer_color)), det)


    def test_kink(self):
        pd = tait.parse_pd(KINK)
        t = tait.white_tait_graph(pd, tait.checkerboard_coloring(pd, tait.BLACK))
        g = t.underlying
        self.assertEqual(len(g), 2)
        self.assertEqual([e.sign for e in g.edges], [-1])
        self.assertEqual(g.weights(), [1, 1])
        self.assertEqual(tait.default_root(t), g.ids()[0])
        reduced = tait.reduce_tait(t)
        self.assertEqual([(v.id, v.weight) for v in reduced.vertices], [(g.ids()[1], 1)])

        with self.assertRaises(tait.NugatoryCrossingError) as ctx:
            tait.white_tait_graph(pd, tait.checkerboard_coloring(pd, tait.WHITE))
        self.assertEqual(ctx.exception.crossing, 0)


    def test_unknot_diagram(self):
        pd = tait.parse_pd("")
        t = tait.white_tait_graph(pd, tait.checkerboard_coloring(pd))
        self.assertEqual(len(t.underlying), 1)
        self.assertEqual(len(tait.reduce_tait(t)), 0)


    def test_complete_to_tait(self):
        for n in (0, 1, 7):
            base = ChainmailGraph(D_EX_VERTICES, D_EX_EDGES)
            g = ChainmailGraph([("v1", -5 - 2 * n)] + D_EX_VERTICES[1:], D_EX_EDGES)
            t = tait.complete_to_tait(g)
            full = t.underlying
            self.assertEqual(t.root, 'r')
            self.assertEqual(signed_edge_count(full, 'r', 'v1'), 2 * n + 1)
            self.assertEqual(signed_edge_count(full, 'r', 'v2'), -2)
            self.assertEqual(signed_edge_count(full, 'r', 'v3'), -4)
            self.assertEqual(signed_edge_count(full, 'r', 'v4'), 2)
            self.assertEqual(full.weight('r'), 3 - 2 * n)
            self.assertTrue(tait.satisfies_weight_relation(full))
            self.assertEqual(tait.reduce_tait(t), g)
            self.assertFalse(tait.satisfies_weight_relation(base))

        with self.assertRaises(tait.ChainmailError):
            tait.complete_to_tait(ChainmailGraph([("r", 0)]))


    def test_complete_round_trip(self):
        for _ in range(self.n_random):
            g = random_graph(self.rng, int(self.rng.integers(1, 7)))
            t = tait.complete_to_tait(g)
            self.assertTrue(tait.satisfies_weight_relation(t.underlying))
            self.assertEqual(tait.reduce_tait(t), g)


    def test_rotation_carried(self):
        t = tait.white_tait_graph(self.figure_eight, tait.checkerboard_coloring(self.figure_eight))
        g = t.underlying
        for v in g.ids():
            self.assertEqual(sorted(g.rotation[v]), sorted(k for k, e in enumerate(g.edges) if v in (e.u, e.v)))
        completed = tait.complete_to_tait(tait.reduce_tait(t))
        self.assertIsNotNone(completed.underlying.rotation)
        self.assertEqual(len(completed.underlying.rotation['r']), sum(
            abs(signed_edge_count(completed.underlying, 'r', v)) for v in completed.underlying.ids() if v != 'r'))


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Run unit tests for the pyChainmail.tait module.')
    parser.add_argument('--seed', type=int, default=0,
                        help='Seed of the random graph corpus')
    parser.add_argument('--n_random', type=int, default=100,
                        help='Number of random graphs for the completion round trip')
    parser.add_argument('--verbosity', type=int, choices=[0,1,2], default=0,
                        help='Level of verbosity for test output')

    args = parser.parse_args()

    TestTait.seed = args.seed
    TestTait.n_random = args.n_random
    suite = unittest.TestLoader().loadTestsFromTestCase(TestTait)
    unittest.TextTestRunner(verbosity=args.verbosity).run(suite)
