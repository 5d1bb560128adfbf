"""Command-line front end."""
import concurrent.futures
import csv
import dataclasses
import itertools
import json
import logging
import random
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from absl import flags

from bicliques import alphan
from bicliques import chromatic
from bicliques import common
from bicliques import graph
from bicliques import matchings
from bicliques import oracle
from bicliques import poly
from bicliques import reflect
from bicliques import utils


FLAGS = flags.FLAGS

flags.DEFINE_string('spec', None, 'Biclique file: JSON or "j k" edge list.')
flags.DEFINE_string('params', None, 'Six parameters a,b,c,d,e,f of a (3,k)-biclique.')
flags.DEFINE_string('spec2', None, 'Second biclique file, for reflect.')
flags.DEFINE_string('params2', None, 'Second parameter tuple, for reflect.')
flags.DEFINE_string('poly', None, 'Monic polynomial, coefficients constant term first.')
flags.DEFINE_string('poly2', None, 'Second polynomial, for reflect.')
flags.DEFINE_enum('prop', None, ['5', '6', '7'], 'Reflection family.')
flags.DEFINE_integer('r', 0, 'Family parameter r.')
flags.DEFINE_integer('s', 0, 'Family parameter s.')
flags.DEFINE_integer('t', 0, 'Family parameter t.')
flags.DEFINE_integer('u', 0, 'Family parameter u.')
flags.DEFINE_string('cubic', None, 'a2,a1,a0 of the monic cubic x^3 + a2 x^2 + a1 x + a0.')
flags.DEFINE_integer('scan_cap', None, 'Rows the alphan scan tries past its first row.')
flags.DEFINE_enum('budget', 'default', ['small', 'default'], 'Size of the verify suites.')
flags.DEFINE_list('suites', [], 'Verify suites to run; all when empty.')
flags.DEFINE_integer('seed', None, 'Seed for the random verify instances.')
flags.DEFINE_integer('j', 3, 'Left clique size for atlas.')
flags.DEFINE_integer('max_k', 4, 'Largest right clique size for atlas.')
flags.DEFINE_integer('workers', None, 'Worker threads for atlas.')


COMMANDS = ('chrom', 'factor', 'match', 'partner', 'reflect', 'family', 'alphan', 'verify', 'atlas')

USAGE = f'usage: main.py {{{",".join(COMMANDS)}}} [flags]'


def _read_spec(path: Optional[str], params: Optional[str], which: str = '') -> graph.BicliqueSpec:
    if path and params:
        raise common.SpecError(f'Give only one of --spec{which} and --params{which}')
    if path:
        return graph.load_spec(path)
    if params:
        return graph.from_params(graph.ThreeCliqueParams(*utils.parse_ints(params, 6, 'params')))
    raise common.SpecError(f'A biclique is required: --spec{which} or --params{which}')


def _read_poly(text: str) -> poly.IntPoly:
    return poly.IntPoly(tuple(utils.parse_ints(text, name='polynomial')))


def _factor_payload(s: graph.BicliqueSpec) -> Dict[str, Any]:
    m = matchings.matching_numbers(s)
    return {
        'j': s.j,
        'k': s.k,
        'poly': poly.to_json(chromatic.chromatic_polynomial(s, m)),
        'factor': poly.to_json(chromatic.interesting_factor(s, m=m if s.j <= s.k else None)),
        'factored_side': 'right' if s.j <= s.k else 'left',
        'matching_numbers': list(m.counts),
    }


def _cmd_chrom(out: TextIO) -> int:
    utils.emit(_factor_payload(_read_spec(FLAGS.spec, FLAGS.params)), out)
    return 0


def _cmd_match(out: TextIO) -> int:
    s = _read_spec(FLAGS.spec, FLAGS.params)
    utils.emit({'matching_numbers': list(matchings.matching_numbers(s).counts)}, out)
    return 0


def _cmd_partner(out: TextIO) -> int:
    s = _read_spec(FLAGS.spec, FLAGS.params)
    partner = graph.complement_partner(s)
    g = chromatic.interesting_factor(s)
    h = chromatic.interesting_factor(partner)
    found = reflect.find_reflection(g, h)
    expected = s.j + s.k - 1
    utils.emit({
        'spec': graph.spec_to_json(s),
        'partner': graph.spec_to_json(partner),
        'factor': poly.to_json(g),
        'partner_factor': poly.to_json(h),
        'expected_shift': expected,
        'shift': found,
        'verified': found == expected,
    }, out)
    return 0 if found == expected else 1


def _cmd_reflect(out: TextIO) -> int:
    if FLAGS.poly or FLAGS.poly2:
        if not (FLAGS.poly and FLAGS.poly2):
            raise common.BicliqueError('reflect needs both --poly and --poly2')
        g, h = _read_poly(FLAGS.poly), _read_poly(FLAGS.poly2)
    else:
        s_g = _read_spec(FLAGS.spec, FLAGS.params)
        s_h = _read_spec(FLAGS.spec2, FLAGS.params2, which='2')
        g, h = chromatic.interesting_factor(s_g), chromatic.interesting_factor(s_h)
    utils.emit(reflect.find_relation(g, h).to_json(), out)
    return 0


def _cmd_family(out: TextIO) -> int:
    if FLAGS.prop is None:
        raise common.BicliqueError('family needs --prop')
    check = reflect.verify_family(int(FLAGS.prop), FLAGS.r, FLAGS.s, FLAGS.t, FLAGS.u)
    utils.emit({
        'prop': int(FLAGS.prop),
        'G': list(check.g_params.as_tuple()),
        'H': list(check.h_params.as_tuple()),
        'c': check.c,
        'g': poly.to_json(check.g),
        'h': poly.to_json(check.h),
        'shift': check.found_shift,
        'matching_condition': check.matching_condition,
        'below_convention': check.below_convention,
        'verified': check.verified,
    }, out)
    return 0 if check.verified else 1


def _cmd_alphan(out: TextIO) -> int:
    if FLAGS.cubic is None:
        raise common.BicliqueError('alphan needs --cubic a2,a1,a0')
    a2, a1, a0 = utils.parse_ints(FLAGS.cubic, 3, 'cubic')
    result = alphan.alpha_plus_n(poly.IntPoly((a0, a1, a2, 1)), scan_cap=FLAGS.scan_cap)
    utils.emit(result.to_json(), out)
    return 0 if result.verified else 1


@dataclasses.dataclass
class SuiteResult:
    """Outcome of one verify suite."""
    checked: int = 0
    failures: List[str] = dataclasses.field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            logging.warning(f'Mismatch: {what}')
            self.failures.append(what)


def _suite_chromatic(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    max_total = 5 if small else 7
    for j in range(1, 4):
        for k in range(1, max_total - j + 1):
            pairs = [(l, r) for l in range(j) for r in range(k)]
            for mask in range(1 << len(pairs)):
                s = graph.BicliqueSpec(j=j, k=k, complement_edges=frozenset(
                    pair for bit, pair in enumerate(pairs) if mask >> bit & 1))
                expected = oracle.chromatic_poly_bruteforce(graph.to_simple_graph(s))
                result.check(chromatic.chromatic_polynomial(s) == expected, f'chromatic {graph.spec_to_json(s)}')
    for _ in range(common.VERIFY_RANDOM_SPECS // (10 if small else 1)):
        s = graph.random_spec(rng, rng.randint(1, 4), rng.randint(1, 8), rng.random())
        expected = oracle.chromatic_poly_bruteforce(graph.to_simple_graph(s))
        result.check(chromatic.chromatic_polynomial(s) == expected, f'chromatic {graph.spec_to_json(s)}')
    return result


def _suite_factor_3k(rng: random.Random, small: bool) -> SuiteResult:
    del rng
    result = SuiteResult()
    top = 1 if small else 3
    for values in itertools.product(range(top + 1), repeat=6):
        if not any(values):
            continue
        p = graph.ThreeCliqueParams(*values)
        by_matchings = chromatic.interesting_factor(graph.from_params(p), normalize=False)
        result.check(chromatic.interesting_factor_3k(p) == by_matchings, f'factor_3k {values}')
    return result


def _suite_complement(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    for _ in range(common.VERIFY_RANDOM_SPECS // (10 if small else 1)):
        s = graph.random_spec(rng, rng.randint(1, 4), rng.randint(1, 8), rng.random())
        m = matchings.matching_numbers(s)
        direct = matchings.matching_numbers(graph.complement_partner(s))
        via = matchings.complement_matching_numbers(m, s.j, s.k)
        back = matchings.complement_matching_numbers(via, s.j, s.k)
        result.check(via == direct and back == m, f'complement {graph.spec_to_json(s)}')
    return result


def _suite_translation(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    for _ in range(200 // (10 if small else 1)):
        j = rng.randint(1, 4)
        k_g = rng.randint(j, 6)
        k_h = rng.randint(k_g, 8)
        s_g = graph.random_spec(rng, j, k_g, rng.random())
        s_h = graph.BicliqueSpec(j=j, k=k_h, complement_edges=s_g.complement_edges)
        g = chromatic.interesting_factor(s_g)
        h = chromatic.interesting_factor(s_h)
        result.check(reflect.find_translation(g, h) == k_h - k_g,
                     f'translation {graph.spec_to_json(s_g)} in k={k_h}')
    return result


def _suite_partner(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    for _ in range(common.VERIFY_RANDOM_SPECS // (10 if small else 1)):
        j = rng.randint(1, 4)
        s = graph.random_spec(rng, j, rng.randint(j, 8), strict=True)
        partner = graph.complement_partner(s)
        c = reflect.find_reflection(chromatic.interesting_factor(s), chromatic.interesting_factor(partner))
        ok = c == s.j + s.k - 1 and matchings.theorem2_condition(
            matchings.matching_numbers(s), matchings.matching_numbers(partner), s.j, s.k, s.k, c)
        result.check(ok, f'partner {graph.spec_to_json(s)}')
    return result


def _suite_families(rng: random.Random, small: bool) -> SuiteResult:
    del rng
    result = SuiteResult()
    top = 2 if small else 4
    for prop in sorted(reflect.FAMILIES):
        for r, s, t, u in itertools.product(range(top + 1), repeat=4):
            try:
                check = reflect.verify_family(prop, r, s, t, u)
            except common.ParameterError:
                continue
            result.check(check.verified, f'family {prop} r={r} s={s} t={t} u={u}')
    return result


def _suite_acyclic(rng: random.Random, small: bool) -> SuiteResult:
    del rng, small
    result = SuiteResult()
    s_g = graph.from_params(graph.ThreeCliqueParams(1, 1, 1, 0, 0, 0))
    s_h = graph.from_params(graph.ThreeCliqueParams(0, 0, 0, 1, 1, 1))
    result.check(poly.eval_int(chromatic.chromatic_polynomial(s_g), 6) == 8520, 'P_G(6) = 8520')
    result.check(chromatic.acyclic_count(s_h) == 426, 'acyclic orientations of H = 426')
    result.check(chromatic.reflection_count_identity(s_g, s_h, 5), 'P_G(6) = C(6,3) * 426')
    result.check(oracle.acyclic_orientations_bruteforce(graph.to_simple_graph(s_h)) == 426,
                 'brute-force orientations of H = 426')
    return result


def _suite_orientations(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    max_edges = 10 if small else 14
    count = 20 if small else 100
    graphs = []
    while len(graphs) < count:
        n = rng.randint(1, 7)
        pairs = list(itertools.combinations(range(n), 2))
        chosen = frozenset(pair for pair in pairs if rng.random() < 0.5)
        if len(chosen) <= max_edges:
            graphs.append(graph.SimpleGraph(n=n, edges=chosen))
    for g in graphs:
        value = poly.eval_int(oracle.chromatic_poly_bruteforce(g), -1)
        expected = value if g.n % 2 == 0 else -value
        result.check(oracle.acyclic_orientations_bruteforce(g) == expected,
                     f'orientations n={g.n} edges={sorted(g.edges)}')
    return result


def _suite_alphan(rng: random.Random, small: bool) -> SuiteResult:
    result = SuiteResult()
    bound = 3 if small else common.VERIFY_ALPHAN_GRID
    results = []
    for a2, a1, a0 in itertools.product((-1, 0, 1), range(-bound, bound + 1), range(-bound, bound + 1)):
        q = poly.IntPoly((a0, a1, a2, 1))
        try:
            found = alphan.alpha_plus_n(q, scan_cap=FLAGS.scan_cap)
        except common.BicliqueError as err:
            result.check(False, f'alphan {q.format()}: {err}')
            continue
        state = found.search_state
        ok = (found.verified and min(found.params.as_tuple()) >= 0 and found.N >= 0
              and found.n >= 2 * state.i + 3)
        result.check(ok, f'alphan {q.format()}')
        results.append(found)
    for found in rng.sample(results, min(50, len(results))):
        residual = alphan.numeric_residual(found)
        result.check(residual < 1e-6, f'alphan numeric {found.certificate.q.format()}: {residual}')
    return result


SUITES: Dict[str, Callable[[random.Random, bool], SuiteResult]] = {
    'chromatic': _suite_chromatic,
    'factor_3k': _suite_factor_3k,
    'complement': _suite_complement,
    'translation': _suite_translation,
    'partner': _suite_partner,
    'families': _suite_families,
    'acyclic': _suite_acyclic,
    'orientations': _suite_orientations,
    'alphan': _suite_alphan,
}


def _cmd_verify(out: TextIO) -> int:
    names = FLAGS.suites or list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise common.BicliqueError(f'Unknown suites {unknown}, expected some of {list(SUITES)}')
    seed = common.VERIFY_SEED if FLAGS.seed is None else FLAGS.seed
    small = FLAGS.budget == 'small'
    report = {}
    passed = True
    for name in names:
        logging.info(f'Running suite {name} ({FLAGS.budget})')
        result = SUITES[name](random.Random(seed), small)
        logging.info(f'Suite {name}: {result.checked} checked, {len(result.failures)} failed')
        report[name] = {'checked': result.checked, 'failures': result.failures[:10]}
        passed = passed and not result.failures
    utils.emit({'passed': passed, 'suites': report}, out)
    return 0 if passed else 1


@dataclasses.dataclass
class AtlasClass:
    representative: poly.IntPoly
    class_id: int


def _atlas_entries(j: int, max_k: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """Canonical keys of every complement inside K_{j,k}, k = 1..max_k."""
    entries = []
    for k in range(1, max_k + 1):
        keys = set()
        for columns in itertools.combinations_with_replacement(range(1 << j), k):
            keys.add(graph.canonical_key(graph.from_columns(j, columns)))
        entries.extend((k, key) for key in sorted(keys))
        logging.info(f'atlas: k={k}, {len(keys)} classes of complements')
    return entries


def _cmd_atlas(out: TextIO) -> int:
    j, max_k = FLAGS.j, FLAGS.max_k
    if j < 1 or max_k < 1:
        raise common.BicliqueError(f'atlas needs j >= 1 and max_k >= 1, got {j} and {max_k}')
    entries = _atlas_entries(j, max_k)
    workers = FLAGS.workers or common.ATLAS_WORKERS

    def factor(entry: Tuple[int, Tuple[int, ...]]) -> poly.IntPoly:
        return chromatic.interesting_factor(graph.from_columns(j, entry[1]), normalize=False)

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        factors = list(executor.map(factor, entries))

    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['j', 'k', 'canonical_id', 'factor', 'class_id', 'relation', 'shift'])
    classes: List[AtlasClass] = []
    for (k, key), g in zip(entries, factors):
        relation = reflect.RelationReport(kind=reflect.RelationKind.NONE)
        owner = None
        for atlas_class in classes:
            relation = reflect.find_relation(g, atlas_class.representative)
            if relation.kind != reflect.RelationKind.NONE:
                owner = atlas_class
                break
        if owner is None:
            owner = AtlasClass(representative=g, class_id=len(classes))
            classes.append(owner)
            relation = reflect.RelationReport(kind=reflect.RelationKind.TRANSLATION, shift=0, verified=True)
        writer.writerow([
            j, k, f'{k}:' + '.'.join(str(mask) for mask in key),
            ' '.join(poly.to_json(g)), owner.class_id, relation.kind.value, relation.shift,
        ])
    logging.info(f'atlas: {len(entries)} bicliques in {len(classes)} classes')
    return 0


_HANDLERS: Dict[str, Callable[[TextIO], int]] = {
    'chrom': _cmd_chrom,
    'factor': _cmd_chrom,
    'match': _cmd_match,
    'partner': _cmd_partner,
    'reflect': _cmd_reflect,
    'family': _cmd_family,
    'alphan': _cmd_alphan,
    'verify': _cmd_verify,
    'atlas': _cmd_atlas,
}


def run(argv: List[str], out: Optional[TextIO] = None) -> int:
    """Dispatch argv[1] with flags already parsed; returns the exit code."""
    out = out or sys.stdout
    if len(argv) != 2 or argv[1] not in _HANDLERS:
        utils.fail(USAGE)
        return 2
    try:
        return _HANDLERS[argv[1]](out)
    except (common.BicliqueError, OSError, json.JSONDecodeError) as err:
        utils.fail(str(err))
        return 2
