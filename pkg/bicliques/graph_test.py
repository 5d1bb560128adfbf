import random

from absl.testing import absltest
from absl.testing import parameterized

from bicliques import common
from bicliques import graph


class BicliqueSpecTest(parameterized.TestCase):

    def test_empty_side(self):
        with self.assertRaises(common.SpecError):
            graph.BicliqueSpec(j=0, k=2)

    def test_edge_out_of_range(self):
        with self.assertRaises(common.SpecError):
            graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 2)}))

    def test_duplicate_edge(self):
        with self.assertRaises(common.SpecError):
            graph.BicliqueSpec.from_edges(2, 2, [(0, 1), [0, 1]])

    def test_strict(self):
        with self.assertRaises(common.SpecError):
            graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 0)}), strict=True)
        spec = graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 0), (1, 1)}), strict=True)
        self.assertTrue(spec.is_strict())

    def test_swapped(self):
        spec = graph.BicliqueSpec(j=2, k=3, complement_edges=frozenset({(0, 2), (1, 0)}))
        swapped = spec.swapped()
        self.assertEqual((swapped.j, swapped.k), (3, 2))
        self.assertEqual(swapped.complement_edges, frozenset({(2, 0), (0, 1)}))
        self.assertEqual(swapped.swapped(), spec)


class ThreeCliqueParamsTest(parameterized.TestCase):

    def test_negative(self):
        with self.assertRaises(common.ParameterError):
            graph.ThreeCliqueParams(1, -1, 0, 0, 0, 0)

    def test_degenerate(self):
        with self.assertRaises(common.DegenerateParametersError):
            graph.ThreeCliqueParams(0, 0, 0, 0, 0, 0)

    @parameterized.parameters(
        ((1, 1, 1, 0, 0, 0),),
        ((13, 8, 1, 3, 5, 2),),
        ((0, 2, 0, 1, 0, 4),),
    )
    def test_from_params(self, values):
        p = graph.ThreeCliqueParams(*values)
        spec = graph.from_params(p)
        left, right = spec.degrees()
        self.assertEqual((spec.j, spec.k), (3, p.k))
        self.assertEqual(tuple(left), p.degrees())
        a, b, c, d, e, f = values
        # Edge count of the complement and the number of its non-isolated vertices.
        self.assertLen(spec.complement_edges, 2 * (a + b + c) + d + e + f)
        self.assertEqual(sum(1 for degree in right if degree), p.k)

    def test_complement_partner(self):
        g = graph.from_params(graph.ThreeCliqueParams(1, 1, 1, 0, 0, 0))
        h = graph.from_params(graph.ThreeCliqueParams(0, 0, 0, 1, 1, 1))
        self.assertEqual(graph.complement_partner(g), h)
        self.assertEqual(graph.complement_partner(h), g)


class StripTest(absltest.TestCase):

    def test_one_edge(self):
        strip = graph.strip_universal(graph.BicliqueSpec(j=2, k=3, complement_edges=frozenset({(0, 0)})))
        self.assertEqual((strip.p_left, strip.p_right), (1, 2))
        self.assertEqual(strip.reduced, graph.BicliqueSpec(j=1, k=1, complement_edges=frozenset({(0, 0)})))

    def test_complete(self):
        strip = graph.strip_universal(graph.BicliqueSpec(j=2, k=3))
        self.assertIsNone(strip.reduced)
        self.assertEqual(strip.p, 5)


class SimpleGraphTest(absltest.TestCase):

    def test_to_simple_graph(self):
        g = graph.to_simple_graph(graph.BicliqueSpec(j=2, k=1, complement_edges=frozenset({(1, 0)})))
        self.assertEqual(g.n, 3)
        self.assertEqual(g.edges, frozenset({(0, 1), (0, 2)}))

    def test_normalizes_pairs(self):
        self.assertEqual(graph.SimpleGraph(n=3, edges=frozenset({(2, 0)})).edges, frozenset({(0, 2)}))


class CanonicalKeyTest(absltest.TestCase):

    def test_left_relabelling(self):
        first = graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 0)}))
        second = graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(1, 1)}))
        self.assertEqual(graph.canonical_key(first), graph.canonical_key(second))

    def test_distinguishes(self):
        matching = graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 0), (1, 1)}))
        star = graph.BicliqueSpec(j=2, k=2, complement_edges=frozenset({(0, 0), (0, 1)}))
        self.assertNotEqual(graph.canonical_key(matching), graph.canonical_key(star))

    def test_from_columns(self):
        spec = graph.from_columns(2, [1, 3])
        self.assertEqual(spec.complement_edges, frozenset({(0, 0), (0, 1), (1, 1)}))


class IngestionTest(absltest.TestCase):

    def test_edge_list(self):
        spec = graph.parse_spec_text('# complement of a (2,3)-biclique\n2 3\n0 0  # first\n1 2\n')
        self.assertEqual(spec, graph.BicliqueSpec(j=2, k=3, complement_edges=frozenset({(0, 0), (1, 2)})))

    def test_json_params(self):
        spec = graph.parse_spec_text('{"params": [1, 1, 1, 0, 0, 0]}')
        self.assertEqual(spec, graph.from_params(graph.ThreeCliqueParams(1, 1, 1, 0, 0, 0)))

    def test_json_round_trip(self):
        spec = graph.BicliqueSpec(j=2, k=3, complement_edges=frozenset({(0, 0), (1, 2)}))
        self.assertEqual(graph.spec_from_dict(graph.spec_to_json(spec)), spec)

    def test_malformed(self):
        with self.assertRaises(common.SpecError):
            graph.parse_spec_text('2 x\n')
        with self.assertRaises(common.SpecError):
            graph.parse_spec_text('')
        with self.assertRaises(common.SpecError):
            graph.spec_from_dict({'j': 2})
        with self.assertRaises(common.SpecError):
            graph.spec_from_dict({'params': [1, 2]})

    def test_load_spec(self):
        path = self.create_tempfile(content='1 1\n0 0\n').full_path
        self.assertEqual(graph.load_spec(path),
                         graph.BicliqueSpec(j=1, k=1, complement_edges=frozenset({(0, 0)})))


class RandomSpecTest(absltest.TestCase):

    def test_strict(self):
        rng = random.Random(7)
        for _ in range(20):
            self.assertTrue(graph.random_spec(rng, 3, 4, strict=True).is_strict())

    def test_deterministic(self):
        self.assertEqual(graph.random_spec(random.Random(3), 4, 6),
                         graph.random_spec(random.Random(3), 4, 6))


if __name__ == '__main__':
    absltest.main()
