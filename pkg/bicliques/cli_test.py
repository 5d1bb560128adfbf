import csv
import io
import json

from absl import flags
from absl.testing import absltest
from absl.testing import flagsaver
from absl.testing import parameterized

from bicliques import cli


def _run(command):
    out = io.StringIO()
    code = cli.run(['main.py', command], out)
    return code, out.getvalue()


class FactorTest(absltest.TestCase):

    @flagsaver.flagsaver(params='1,1,1,0,0,0')
    def test_factor(self):
        code, text = _run('factor')
        self.assertEqual(code, 0)
        payload = json.loads(text)
        self.assertEqual(payload['factor'], ['-13', '14', '-6', '1'])
        self.assertEqual(payload['matching_numbers'], [1, 6, 9, 2])

    @flagsaver.flagsaver(params='1,1,1,0,0,0')
    def test_byte_identical(self):
        self.assertEqual(_run('chrom'), _run('chrom'))

    def test_spec_file(self):
        path = self.create_tempfile(content='2 3\n0 0\n').full_path
        with flagsaver.flagsaver(spec=path):
            code, text = _run('match')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text), {'matching_numbers': [1, 1, 0]})


class RelationTest(absltest.TestCase):

    @flagsaver.flagsaver(params='1,1,1,0,0,0', params2='0,0,0,1,1,1')
    def test_reflect_params(self):
        code, text = _run('reflect')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text), {'kind': 'reflection', 'shift': 5, 'verified': True})

    @flagsaver.flagsaver(poly='11,-7,-1,1', poly2='-13,14,-6,1')
    def test_reflect_polys_none(self):
        code, text = _run('reflect')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text)['kind'], 'none')

    @flagsaver.flagsaver(params='1,1,1,0,0,0')
    def test_partner(self):
        code, text = _run('partner')
        self.assertEqual(code, 0)
        payload = json.loads(text)
        self.assertEqual(payload['shift'], 5)
        self.assertEqual(payload['partner_factor'], ['-32', '29', '-9', '1'])

    @flagsaver.flagsaver(prop='5', r=1, s=1, t=1, u=2)
    def test_family(self):
        code, text = _run('family')
        self.assertEqual(code, 0)
        payload = json.loads(text)
        self.assertEqual(payload['c'], 10)
        self.assertEqual(payload['H'], [1, 1, 1, 1, 1, 3])
        self.assertTrue(payload['verified'])


class AlphaNTest(absltest.TestCase):

    @flagsaver.flagsaver(cubic='0,0,0')
    def test_cube(self):
        code, text = _run('alphan')
        self.assertEqual(code, 0)
        payload = json.loads(text)
        self.assertEqual(payload['params'], [13, 8, 1, 3, 5, 2])
        self.assertEqual((payload['n'], payload['N']), (15, 15))
        self.assertTrue(payload['verified'])

    @flagsaver.flagsaver(cubic='5,1,1')
    def test_unreduced(self):
        code, text = _run('alphan')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text)['n0'], 2)

    @flagsaver.flagsaver(cubic='0,0,0', scan_cap=0)
    def test_cap_exhausted(self):
        code, text = _run('alphan')
        self.assertEqual(code, 2)
        self.assertEqual(text, '')


class ErrorTest(parameterized.TestCase):

    def test_unknown_command(self):
        self.assertEqual(cli.run(['main.py', 'plot'], io.StringIO()), 2)
        self.assertEqual(cli.run(['main.py'], io.StringIO()), 2)

    def test_missing_input(self):
        self.assertEqual(_run('chrom')[0], 2)

    @flagsaver.flagsaver(params='1,2')
    def test_short_params(self):
        self.assertEqual(_run('chrom')[0], 2)

    @flagsaver.flagsaver(params='0,0,0,0,0,0')
    def test_degenerate_params(self):
        self.assertEqual(_run('chrom')[0], 2)

    @flagsaver.flagsaver(spec='/nonexistent/biclique.json')
    def test_missing_file(self):
        self.assertEqual(_run('chrom')[0], 2)

    def test_bad_json(self):
        path = self.create_tempfile(content='{"j": 2,').full_path
        with flagsaver.flagsaver(spec=path):
            self.assertEqual(_run('chrom')[0], 2)

    @flagsaver.flagsaver(poly='1,0,1', poly2='1,0,0,1')
    def test_degree_mismatch(self):
        self.assertEqual(_run('reflect')[0], 2)

    @flagsaver.flagsaver(suites=['nope'])
    def test_unknown_suite(self):
        self.assertEqual(_run('verify')[0], 2)


class VerifyTest(parameterized.TestCase):

    def test_flags_parsed(self):
        self.assertTrue(flags.FLAGS.is_parsed())

    @parameterized.parameters(*cli.SUITES)
    def test_small_suite(self, suite):
        with flagsaver.flagsaver(suites=[suite], budget='small', seed=1):
            code, text = _run('verify')
        payload = json.loads(text)
        self.assertEqual(code, 0, payload)
        self.assertTrue(payload['passed'])
        self.assertGreater(payload['suites'][suite]['checked'], 0)

    @parameterized.named_parameters(
        # Every j <= 3, j + k <= 7 spec plus the random ones.
        ('chromatic', 'chromatic', 6170 + 500),
        # [0, 3]^6 without the all-zero tuple.
        ('factor_3k', 'factor_3k', 4 ** 6 - 1),
        ('complement', 'complement', 500),
        ('translation', 'translation', 200),
        ('partner', 'partner', 500),
        ('families', 'families', None),
        ('acyclic', 'acyclic', 4),
        ('orientations', 'orientations', 100),
        # The {-1, 0, 1} x [-10, 10]^2 grid and 50 numeric checks.
        ('alphan', 'alphan', 3 * 21 * 21 + 50),
    )
    def test_default_suite(self, suite, checked):
        with flagsaver.flagsaver(suites=[suite], budget='default'):
            code, text = _run('verify')
        payload = json.loads(text)
        self.assertEqual(code, 0, payload)
        self.assertTrue(payload['passed'])
        self.assertEqual(payload['suites'][suite]['failures'], [])
        if checked is None:
            self.assertGreater(payload['suites'][suite]['checked'], 0)
        else:
            self.assertEqual(payload['suites'][suite]['checked'], checked)


class AtlasTest(absltest.TestCase):

    @flagsaver.flagsaver(j=2, max_k=2, workers=2)
    def test_two_by_two(self):
        code, text = _run('atlas')
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], ['j', 'k', 'canonical_id', 'factor', 'class_id', 'relation', 'shift'])
        self.assertLen(rows, 11)
        self.assertEqual({row[1] for row in rows[1:]}, {'1', '2'})
        self.assertEqual(rows[1][4], '0')

    @flagsaver.flagsaver(j=2, max_k=2)
    def test_deterministic(self):
        self.assertEqual(_run('atlas'), _run('atlas'))

    @flagsaver.flagsaver(j=0)
    def test_bad_size(self):
        self.assertEqual(_run('atlas')[0], 2)


if __name__ == '__main__':
    absltest.main()
