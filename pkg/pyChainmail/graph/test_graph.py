"""
Copyright (c) 2026 pyChainmail contributors

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import unittest
import argparse
import json

import numpy as np

from . import graph


D_EX_VERTICES = [("v1", -5), ("v2", 0), ("v3", 0), ("v4", -4)]
D_EX_EDGES = [("v1", "v2", 1)] + [("v1", "v3", 1)] * 3 + [("v2", "v4", 1), ("v3", "v4", 1)]
A_EX = ((-5, 1, 3, 0), (1, 0, 0, 1), (3, 0, 0, 1), (0, 1, 1, -4))


def random_graph(rng, n, max_mult=4, weight_bound=9):
    ids = [f"u{k}" for k in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(int(rng.integers(0, max_mult + 1))):
                edges.append((ids[i], ids[j], int(rng.choice([-1, 1]))))
    rng.shuffle(edges)
    weights = rng.integers(-weight_bound, weight_bound + 1, size=n)
    return graph.ChainmailGraph(list(zip(ids, (int(w) for w in weights))), edges)


class TestGraph(unittest.TestCase):
    seed = 0
    n_random = 100

    def setUp(self):
        self.rng = np.random.default_rng(self.seed)
        self.d_ex = graph.ChainmailGraph(D_EX_VERTICES, D_EX_EDGES)


    def test_validate(self):
        self.assertTrue(graph.validate(self.d_ex).ok)
        self.assertTrue(graph.validate(graph.ChainmailGraph([])).ok)

        loop = graph.ChainmailGraph([("v1", 0)], [("v1", "v1", 1)], check=False)
        report = graph.validate(loop)
        self.assertFalse(report.ok)
        self.assertTrue(report.violations[0].startswith("self-loop"))

        bad = graph.ChainmailGraph([("a", 0), ("a", 1), ("b", 0)], [("a", "c", 1), ("a", "b", 2)], check=False)
        violations = graph.validate(bad).violations
        self.assertTrue(any(v.startswith("duplicate vertex id") for v in violations))
        self.assertTrue(any(v.startswith("dangling endpoint") for v in violations))
        self.assertTrue(any(v.startswith("bad sign") for v in violations))

        with self.assertRaises(graph.GraphValidationError) as ctx:
            graph.ChainmailGraph([("v1", 0)], [("v1", "v1", 1)])
        self.assertEqual(len(ctx.exception.violations), 1)


    def test_rotation(self):
        rotation = {"a": [0, 1], "b": [1], "c": [0]}
        g = graph.ChainmailGraph([("a", 0), ("b", 0), ("c", 0)], [("a", "c", 1), ("b", "a", -1)], rotation)
        self.assertEqual(g.edges, (graph.Edge("a", "b", -1), graph.Edge("a", "c", 1)))
        self.assertEqual(g.rotation, {"a": (1, 0), "b": (0,), "c": (1,)})

        broken = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1)], {"a": [0, 0], "b": [0]}, check=False)
        self.assertTrue(graph.validate(broken).violations[0].startswith("inconsistent rotation"))
        missing = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1)], {"a": [0]}, check=False)
        self.assertFalse(graph.validate(missing).ok)

        sub = graph.induced_subgraph(g, ["a", "c"])
        self.assertEqual(sub.rotation, {"a": (0,), "c": (0,)})
        renamed = graph.relabel(g, {"a": "x"})
        self.assertEqual(renamed.rotation["x"], (1, 0))


    def test_signed_edge_count(self):
        self.assertEqual(graph.signed_edge_count(self.d_ex, "v1", "v3"), 3)
        self.assertEqual(graph.signed_edge_count(self.d_ex, "v3", "v1"), 3)
        self.assertEqual(graph.signed_edge_count(self.d_ex, "v2", "v3"), 0)
        mixed = graph.ChainmailGraph([("u", 0), ("v", 0)], [("u", "v", 1), ("v", "u", -1)])
        self.assertEqual(graph.signed_edge_count(mixed, "u", "v"), 0)
        self.assertEqual(len(mixed.edges), 2)
        with self.assertRaises(graph.UnknownVertexError):
            graph.signed_edge_count(self.d_ex, "v1", "v9")
        with self.assertRaises(graph.ChainmailError):
            graph.signed_edge_count(self.d_ex, "v1", "v1")
        self.assertEqual(graph.signed_degree(self.d_ex, "v1"), 4)
        self.assertEqual(graph.incident_edges(self.d_ex, "v4"), [4, 5])


    def test_laplacian(self):
        self.assertEqual(graph.laplacian(self.d_ex).rows(), A_EX)
        self.assertEqual(graph.laplacian(graph.ChainmailGraph([("v", 7)])).rows(), ((7,),))
        self.assertEqual(graph.laplacian(graph.ChainmailGraph([])).n, 0)
        for _ in range(self.n_random):
            g = random_graph(self.rng, int(self.rng.integers(1, 7)))
            A = graph.laplacian(g).rows()
            ids = g.ids()
            for i, u in enumerate(ids):
                self.assertEqual(A[i][i], g.weight(u))
                for j, v in enumerate(ids):
                    if i != j:
                        count = sum(s for a, b, s in g.edges if (a, b) in ((u, v), (v, u)))
                        self.assertEqual(A[i][j], count)


    def test_induced_subgraph(self):
        sub = graph.induced_subgraph(self.d_ex, ["v4", "v1"])
        self.assertEqual(sub.ids(), ["v1", "v4"])
        self.assertEqual(sub.weights(), [-5, -4])
        self.assertEqual(sub.edges, ())
        self.assertEqual(graph.induced_subgraph(self.d_ex, self.d_ex.ids()), self.d_ex)
        self.assertEqual(len(graph.induced_subgraph(self.d_ex, [])), 0)
        with self.assertRaises(graph.UnknownVertexError):
            graph.induced_subgraph(self.d_ex, ["v1", "w"])
        for _ in range(self.n_random):
            g = random_graph(self.rng, int(self.rng.integers(1, 8)))
            keep = [k for k in range(len(g)) if self.rng.integers(0, 2)]
            sub = graph.induced_subgraph(g, [g.ids()[k] for k in keep])
            self.assertEqual(graph.laplacian(sub), graph.laplacian(g).principal_submatrix(keep))


    def test_contract_vertices(self):
        merged = graph.contract_vertices(self.d_ex, "v1", "v4")
        self.assertEqual(merged.ids(), ["v1+v4", "v2", "v3"])
        self.assertEqual(merged.weight("v1+v4"), -9)
        self.assertEqual(graph.signed_edge_count(merged, "v1+v4", "v2"), 2)
        self.assertEqual(graph.signed_edge_count(merged, "v1+v4", "v3"), 4)
        self.assertEqual(len(merged.edges), 6)

        isolated = graph.ChainmailGraph([("a", 2), ("b", -7)])
        self.assertEqual(graph.contract_vertices(isolated, "a", "b").weights(), [-5])
        clasp = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1)])
        single = graph.contract_vertices(clasp, "a", "b", merged_id="ab")
        self.assertEqual((single.ids(), single.weights(), single.edges), (["ab"], [2], ()))

        with self.assertRaises(graph.ChainmailError):
            graph.contract_vertices(self.d_ex, "v2", "v2")
        with self.assertRaises(graph.UnknownVertexError):
            graph.contract_vertices(self.d_ex, "v2", "x")

        for _ in range(self.n_random // 2):
            g = random_graph(self.rng, int(self.rng.integers(2, 6)))
            i, j = (g.ids()[int(k)] for k in self.rng.choice(len(g), size=2, replace=False))
            self.assertEqual(graph.contract_vertices(g, i, j, merged_id="m"),
                             graph.contract_vertices(g, j, i, merged_id="m"))


    def test_with_weight_and_relabel(self):
        g = graph.with_weight(self.d_ex, "v1", -11)
        self.assertEqual(g.weights(), [-11, 0, 0, -4])
        self.assertEqual(g.edges, self.d_ex.edges)
        with self.assertRaises(graph.UnknownVertexError):
            graph.with_weight(self.d_ex, "x", 0)

        reordered = graph.relabel(self.d_ex, order=["v4", "v3", "v2", "v1"])
        self.assertEqual(reordered.ids(), ["v4", "v3", "v2", "v1"])
        self.assertEqual(graph.signed_edge_count(reordered, "v3", "v1"), 3)
        renamed = graph.relabel(self.d_ex, {"v1": "p"})
        self.assertEqual(renamed.ids(), ["p", "v2", "v3", "v4"])
        with self.assertRaises(graph.ChainmailError):
            graph.relabel(self.d_ex, order=["v1", "v2"])


    def test_graph_from_signed_counts(self):
        g = graph.graph_from_signed_counts(D_EX_VERTICES, {("v1", "v2"): 1, ("v1", "v3"): 3, ("v2", "v4"): 1, ("v3", "v4"): 1})
        self.assertEqual(g, self.d_ex)
        h = graph.graph_from_signed_counts([("a", 0), ("b", 0)], {("a", "b"): -2})
        self.assertEqual(h.edges, (graph.Edge("a", "b", -1),) * 2)


    def test_to_networkx(self):
        G = graph.to_networkx(self.d_ex)
        self.assertEqual(G.number_of_nodes(), 4)
        self.assertEqual(G.number_of_edges(), 6)
        self.assertEqual(G.number_of_edges("v1", "v3"), 3)
        self.assertEqual(G.nodes["v1"]["weight"], -5)
        self.assertTrue(all(s == 1 for _, _, s in G.edges(data="sign")))


    def test_is_isomorphic(self):
        shuffled = graph.relabel(self.d_ex, {"v1": "a", "v2": "b"}, order=["v4", "v2", "v1", "v3"])
        self.assertTrue(graph.is_isomorphic(self.d_ex, shuffled))
        self.assertFalse(graph.is_isomorphic(self.d_ex, graph.with_weight(self.d_ex, "v1", -7)))

        plus = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1), ("a", "b", 1), ("a", "b", -1)])
        minus = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1), ("a", "b", -1), ("a", "b", -1)])
        self.assertFalse(graph.is_isomorphic(plus, minus))

        for _ in range(self.n_random // 2):
            g = random_graph(self.rng, int(self.rng.integers(2, 6)))
            i, j = (g.ids()[int(k)] for k in self.rng.choice(len(g), size=2, replace=False))
            self.assertTrue(graph.is_isomorphic(graph.contract_vertices(g, i, j), graph.contract_vertices(g, j, i)))


    def test_parse_graph(self):
        text = json.dumps({
            "vertices": [{"id": v, "weight": w} for v, w in D_EX_VERTICES],
            "edges": [{"u": u, "v": v, "sign": "+"} for u, v, _ in D_EX_EDGES],
        })
        self.assertEqual(graph.parse_graph(text), self.d_ex)
        self.assertEqual(graph.parse_graph(graph.serialize_graph(self.d_ex)), self.d_ex)
        self.assertEqual(graph.serialize_graph(graph.parse_graph(graph.serialize_graph(self.d_ex))),
                         graph.serialize_graph(self.d_ex))
        self.assertEqual(len(graph.parse_graph('{"vertices": [], "edges": []}')), 0)

        rotated = graph.ChainmailGraph([("a", 0), ("b", 0)], [("a", "b", 1), ("a", "b", -1)], {"a": [1, 0], "b": [0, 1]})
        self.assertEqual(graph.parse_graph(graph.serialize_graph(rotated)), rotated)

        with self.assertRaises(graph.GraphSyntaxError) as ctx:
            graph.parse_graph('{"vertices": [{"id": "a"}], "edges": [{"u": "a", "v": "b", "sign": "±"}]}')
        self.assertEqual(ctx.exception.path, "edges[0].sign")
        with self.assertRaises(graph.GraphSyntaxError) as ctx:
            graph.parse_graph('{\n  "vertices": [\n    {"id": "a",}\n  ]\n}')
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(graph.GraphValidationError) as ctx:
            graph.parse_graph('{"vertices": [{"id": "a", "weight": 1}], "edges": [{"u": "a", "v": "b"}]}')
        self.assertTrue(ctx.exception.violations[0].startswith("dangling endpoint"))
        with self.assertRaises(graph.GraphSyntaxError):
            graph.parse_graph('{"vertices": [{"id": "a", "weight": 1.5}]}')
        with self.assertRaises(graph.GraphSyntaxError):
            graph.parse_graph('[1, 2]')
        with self.assertRaises(graph.GraphSyntaxError):
            graph.parse_graph('{"nodes": []}')


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Run unit tests for the pyChainmail.graph module.')
    parser.add_argument('--seed', type=int, default=0,
                        help='Seed of the random graph corpus')
    parser.add_argument('--n_random', type=int, default=100,
                        help='Number of random graphs per property test')
    parser.add_argument('--verbosity', type=int, choices=[0,1,2], default=0,
                        help='Level of verbosity for test output')

    args = parser.parse_args()

    TestGraph.seed = args.seed
    TestGraph.n_random = args.n_random
    suite = unittest.TestLoader().loadTestsFromTestCase(TestGraph)
    unittest.TextTestRunner(verbosity=args.verbosity).run(suite)
