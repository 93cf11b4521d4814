###############################################################################
#                                                                             #
#    This program is free software: you can redistribute it and/or modify     #
#    it under the terms of the GNU General Public License as published by     #
#    the Free Software Foundation, either version 3 of the License, or        #
#    (at your option) any later version.                                      #
#                                                                             #
#    This program is distributed in the hope that it will be useful,          #
#    but WITHOUT ANY WARRANTY; without even the implied warranty of           #
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            #
#    GNU General Public License for more details.                             #
#                                                                             #
#    You should have received a copy of the GNU General Public License        #
#    along with this program. If not, see <http://www.gnu.org/licenses/>.     #
#                                                                             #
###############################################################################

import random
import time
import unittest
from itertools import product
from unittest.mock import patch

import mpcoh.config.config as Config
from mpcoh.cohomology import atom_cohomology, kunneth_term
from mpcoh.criteria import (REG_FOUND, REG_MINUS_INFINITY, acm_closed_form_line,
                            balanced_regularity, balanced_split_condition,
                            is_acm, is_regular_at, monotonicity_violations,
                            omega_summand_condition, shape_match,
                            unit_split_condition, verify_criterion,
                            weight_multidegrees)
from mpcoh.exceptions import DomainError, PreconditionError, SemanticError
from mpcoh.sheaves import (Atom, Bundle, Diff, Line, Space, twist_atom,
                           twist_bundle)
from tests.common import (all_atoms, all_spaces, random_atom, random_bundle,
                          random_space)

P1P1 = Space((1, 1))
P1P2 = Space((1, 2))
P2P2 = Space((2, 2))


def lines(space, *twists):
    return Bundle.of(space, [Atom.line(a) for a in twists])


def omega_p1p2():
    return Bundle.of(P1P2, [Atom((Line(0), Diff(1, 2)))])


class TestMultidegrees(unittest.TestCase):

    def test_weight_multidegrees(self):
        self.assertEqual(list(weight_multidegrees(P1P2, -1)), [(-1, 0), (0, -1)])
        self.assertEqual(list(weight_multidegrees(P1P2, -3)), [(-1, -2)])
        self.assertEqual(list(weight_multidegrees(P1P2, -4)), [])


class TestRegularity(unittest.TestCase):

    def test_is_regular_at(self):
        self.assertEqual(is_regular_at(lines(P1P2, (0, 0)), (0, 0)), (True, None))
        regular, witness = is_regular_at(lines(P1P2, (-1, -1)), (0, 0))
        self.assertFalse(regular)
        self.assertEqual(witness.t, 0)
        self.assertTrue(is_regular_at(omega_p1p2(), (0, 0))[0])

    def test_first_failure(self):
        regular, witness = is_regular_at(omega_p1p2(), (-1, -1))
        self.assertFalse(regular)
        self.assertEqual(witness.i, 2)
        self.assertEqual(witness.k, (-1, -1))
        self.assertEqual(witness.q, (1, 1))
        self.assertEqual(witness.dim, 1)

    def test_balanced_regularity(self):
        self.assertEqual(balanced_regularity(lines(P1P2, (1, -2))).reg, 2)
        self.assertEqual(balanced_regularity(omega_p1p2()).reg, 0)
        for dims in [(1,), (2, 3), (1, 1, 1)]:
            space = Space(dims)
            result = balanced_regularity(lines(space, space.zero()))
            self.assertEqual(result.status, REG_FOUND)
            self.assertEqual(result.reg, 0)
            self.assertGreater(len(result.failures_at_reg_minus_1), 0)

    def test_zero_bundle(self):
        result = balanced_regularity(Bundle(P1P2))
        self.assertEqual(result.status, REG_MINUS_INFINITY)
        self.assertIsNone(result.reg)
        self.assertEqual(result.to_dict()['reg'], None)

    def test_line_bundles(self):
        rng = random.Random(3)
        for _ in range(150):
            space = random_space(rng, max_s=3, max_n=3)
            twists = [tuple(rng.randint(-3, 3) for _ in space.dims) for _ in range(rng.randint(1, 3))]
            result = balanced_regularity(lines(space, *twists))
            self.assertEqual(result.reg, max(-a for t in twists for a in t), twists)

    def test_line_bundles_exhaustive(self):
        for space in all_spaces(3, 3):
            for a in product(range(-3, 4), repeat=space.s):
                bundle = lines(space, a)
                reg = max(-x for x in a)
                self.assertEqual(is_regular_at(bundle, space.zero())[0], min(a) >= 0, (space, a))
                self.assertTrue(is_regular_at(bundle, space.balanced(reg))[0], (space, a))
                self.assertFalse(is_regular_at(bundle, space.balanced(reg - 1))[0], (space, a))
                if space.s < 3:
                    self.assertEqual(balanced_regularity(bundle).reg, reg, (space, a))

    def test_monotone(self):
        bundle = lines(P1P2, (1, -2), (0, 3))
        reg = balanced_regularity(bundle).reg
        for p in range(reg, reg + 4):
            self.assertTrue(is_regular_at(bundle, (p, p))[0])
        self.assertFalse(is_regular_at(bundle, (reg - 1, reg - 1))[0])
        self.assertEqual(monotonicity_violations(bundle, reg, reg + 6), ())
        self.assertEqual(balanced_regularity(bundle).to_dict()['monotonicity_violations'], [])

    def test_monotone_enumerated(self):
        for space in all_spaces(2, 2):
            for atom in all_atoms(space, range(-2, 3)):
                result = balanced_regularity(Bundle.of(space, [atom]))
                self.assertEqual(result.status, REG_FOUND, atom)
                self.assertEqual(result.monotonicity_violations, (), atom)
        rng = random.Random(31)
        for _ in range(40):
            space = random_space(rng, max_s=3, max_n=2)
            bundle = random_bundle(rng, space, max_summands=2, lo=-4, hi=4)
            result = balanced_regularity(bundle)
            self.assertEqual(result.status, REG_FOUND, bundle.to_expr())
            self.assertEqual(result.monotonicity_violations, (), bundle.to_expr())

    def test_monotonicity_violations_logged(self):
        bundle = lines(P1P2, (0, 0))
        with patch('mpcoh.criteria.is_regular_at', side_effect=lambda b, p: (p[0] != 3, None)):
            with self.assertLogs('warnings', level='WARNING') as logs:
                self.assertEqual(monotonicity_violations(bundle, 0, 5), (3,))
        self.assertEqual(len(logs.output), 1)
        self.assertIn('regular at 0 but not at 3', logs.output[0])


class TestAcm(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(is_acm(lines(P1P2, (0, 0))), (True, None))
        self.assertEqual(is_acm(lines(P1P2, (1, 0))), (True, None))
        acm, witness = is_acm(lines(P1P2, (-2, 0)))
        self.assertFalse(acm)
        self.assertEqual((witness.i, witness.t, witness.q), (1, 0, (1, 0)))

    def test_closed_form(self):
        self.assertTrue(acm_closed_form_line(P1P2, (0, 0)))
        self.assertFalse(acm_closed_form_line(P1P2, (-2, 0)))
        self.assertTrue(acm_closed_form_line(Space((2, 3)), (1, 3)))

    def test_closed_form_two_factors(self):
        for dims in [(1,), (3,), (1, 1), (1, 2), (2, 3)]:
            space = Space(dims)
            for a in product(range(-4, 5), repeat=space.s):
                self.assertEqual(acm_closed_form_line(space, a),
                                 is_acm(lines(space, a))[0], (dims, a))

    def test_closed_form_three_factors(self):
        space = Space((1, 1, 1))
        for a in product(range(-3, 4), repeat=3):
            if acm_closed_form_line(space, a):
                self.assertTrue(is_acm(lines(space, a))[0], a)
        # aCM although the pairwise test fails
        self.assertTrue(is_acm(lines(space, (0, 2, 1)))[0])
        self.assertFalse(acm_closed_form_line(space, (0, 2, 1)))

    def test_twist_invariant(self):
        rng = random.Random(7)
        for _ in range(100):
            space = random_space(rng)
            bundle = random_bundle(rng, space)
            t = rng.randint(-4, 4)
            self.assertEqual(is_acm(bundle)[0], is_acm(twist_bundle(bundle, space.balanced(t)))[0])


class TestBalancedCriterion(unittest.TestCase):

    def test_holds(self):
        result = balanced_split_condition(lines(P1P1, (1, 1), (0, 0)))
        self.assertTrue(result.condition_holds)
        self.assertFalse(result.vacuous)

    def test_fails(self):
        result = balanced_split_condition(lines(P1P1, (0, 1)))
        self.assertFalse(result.condition_holds)
        witness = result.witnesses[0]
        self.assertEqual((witness.i, witness.k, witness.t), (1, (-1, 0), -1))

    def test_omega_fails(self):
        bundle = Bundle.of(P2P2, [Atom((Line(0), Diff(1, 2)))])
        result = balanced_split_condition(bundle)
        self.assertFalse(result.condition_holds)
        self.assertTrue(any((w.i, w.k, w.t) == (3, (-2, -1), -1) for w in result.witnesses))

    def test_report(self):
        report = verify_criterion(lines(P1P1, (1, 1), (0, 0)), Config.CRITERION_BALANCED)
        self.assertTrue(report.condition_holds)
        self.assertTrue(report.shape_holds)
        self.assertTrue(report.consistent)
        report = verify_criterion(lines(P1P1, (0, 1)), Config.CRITERION_BALANCED)
        self.assertFalse(report.condition_holds)
        self.assertFalse(report.shape_holds)
        self.assertTrue(report.consistent)

    def test_balanced_sums_always_consistent(self):
        for dims in [(1, 1), (1, 2), (2, 2), (1, 1, 1)]:
            space = Space(dims)
            for ts in product(range(-2, 3), repeat=2):
                bundle = lines(space, *[space.balanced(t) for t in ts])
                report = verify_criterion(bundle, Config.CRITERION_BALANCED)
                self.assertTrue(report.condition_holds and report.shape_holds, (dims, ts))

    def assertWitnessOnSummand(self, bundle, witness):
        space = bundle.space
        atom = bundle.summands[witness.atom_index][0]
        twisted = twist_atom(space, atom, tuple(kj + witness.t for kj in witness.k))
        self.assertGreater(witness.dim, 0)
        self.assertEqual(kunneth_term(space, twisted, witness.q), witness.dim)
        self.assertEqual(atom_cohomology(space, twisted)[witness.i], witness.total)

    def test_witness_summand_order(self):
        bundle = lines(P1P1, (1, 1), (0, 1))
        report = verify_criterion(bundle, Config.CRITERION_BALANCED)
        self.assertFalse(report.condition_holds)
        for witness in report.condition_witnesses:
            self.assertEqual(witness.atom_index, 1)
            self.assertWitnessOnSummand(bundle, witness)
        self.assertEqual(report.to_dict()['condition_witnesses'][0]['atom_index'], '1')
        swapped = verify_criterion(lines(P1P1, (0, 1), (1, 1)), Config.CRITERION_BALANCED)
        self.assertEqual({w.atom_index for w in swapped.condition_witnesses}, {0})

    def test_witnesses_on_given_summands(self):
        rng = random.Random(41)
        for _ in range(60):
            space = random_space(rng, max_s=3, max_n=2)
            bundle = random_bundle(rng, space, max_summands=4, lo=-4, hi=4)
            for criterion in (Config.CRITERION_BALANCED, Config.CRITERION_UNIT):
                for witness in verify_criterion(bundle, criterion).condition_witnesses:
                    self.assertWitnessOnSummand(bundle, witness)

    def test_unbalanced_lines_fail(self):
        rng = random.Random(43)
        for _ in range(150):
            space = Space(tuple(rng.randint(1, 3) for _ in range(rng.choice((2, 3)))))
            twists = [space.balanced(rng.randint(-4, 4)) for _ in range(rng.randint(0, 4))]
            a = [rng.randint(-4, 4) for _ in space.dims]
            while len(set(a)) == 1:
                a[rng.randrange(space.s)] = rng.randint(-4, 4)
            twists.insert(rng.randint(0, len(twists)), tuple(a))
            bundle = lines(space, *twists)
            result = balanced_split_condition(bundle)
            self.assertFalse(result.condition_holds, bundle.to_expr())
            for witness in result.witnesses:
                self.assertGreater(len(set(bundle.atoms[witness.atom_index].line_twists())), 1)

    def test_diff_atoms_fail(self):
        for dims in [(2,), (3,), (1, 2), (2, 2), (1, 3), (2, 3), (1, 1, 2)]:
            space = Space(dims)
            for atom in all_atoms(space, range(-2, 3)):
                if atom.is_line():
                    continue
                result = balanced_split_condition(Bundle.of(space, [atom]))
                self.assertFalse(result.condition_holds, (dims, atom.to_expr()))

    def test_report_time(self):
        rng = random.Random(37)
        space = Space((3, 3, 3))
        bundle = Bundle.of(space, [random_atom(rng, space, lo=-4, hi=4) for _ in range(10)])
        start = time.perf_counter()
        report = verify_criterion(bundle, Config.CRITERION_BALANCED)
        report.to_dict()
        self.assertLess(time.perf_counter() - start, 1.0)


class TestUnitCriterion(unittest.TestCase):

    def test_holds(self):
        bundle = lines(P1P2, (0, 0), (0, 1), (1, 0))
        self.assertTrue(unit_split_condition(bundle).condition_holds)
        self.assertTrue(verify_criterion(bundle, Config.CRITERION_UNIT).consistent)

    def test_vacuous(self):
        rng = random.Random(13)
        for _ in range(20):
            result = unit_split_condition(random_bundle(rng, P1P1))
            self.assertTrue(result.vacuous)
            self.assertTrue(result.condition_holds)
            self.assertEqual(result.instances, 0)

    def test_known_discrepancy(self):
        report = verify_criterion(lines(P1P2, (0, 2)), Config.CRITERION_UNIT)
        self.assertTrue(report.condition_holds)
        self.assertFalse(report.shape_holds)
        self.assertFalse(report.consistent)


class TestOmegaCriterion(unittest.TestCase):

    def test_omega_summand(self):
        result = omega_summand_condition(omega_p1p2())
        self.assertTrue(result.condition_holds)
        self.assertEqual(result.instances, 3)
        report = verify_criterion(omega_p1p2(), Config.CRITERION_OMEGA)
        self.assertTrue(report.shape_holds)
        self.assertTrue(report.consistent)

    def test_trivial_bundle(self):
        result = omega_summand_condition(lines(P1P2, (0, 0)))
        self.assertTrue(result.condition_holds)
        self.assertEqual(result.instances, 1)
        self.assertTrue(verify_criterion(lines(P1P2, (0, 0)), Config.CRITERION_OMEGA).consistent)

    def test_precondition(self):
        self.assertRaises(PreconditionError, omega_summand_condition, lines(P1P2, (1, -2)))
        self.assertRaises(PreconditionError, verify_criterion, lines(P1P2, (1, -2)),
                          Config.CRITERION_OMEGA)


class TestShapes(unittest.TestCase):

    def test_balanced(self):
        self.assertEqual(shape_match(lines(P1P1, (2, 2), (-1, -1)), Config.CRITERION_BALANCED),
                         (True, 't_i = -1, 2'))
        self.assertFalse(shape_match(lines(P1P1, (0, 1)), Config.CRITERION_BALANCED)[0])

    def test_unit(self):
        bundle = lines(P1P1, (3, 3), (3, 4), (4, 3))
        self.assertEqual(shape_match(bundle, Config.CRITERION_UNIT),
                         (True, 't = 3: O + O(e_2) + O(e_1)'))
        self.assertFalse(shape_match(lines(P1P2, (0, 2)), Config.CRITERION_UNIT)[0])

    def test_omega(self):
        self.assertEqual(shape_match(lines(P1P1, (0, 1), (5, 5)), Config.CRITERION_OMEGA),
                         (True, 'summand 0: O(0,1)'))
        self.assertTrue(shape_match(omega_p1p2(), Config.CRITERION_OMEGA)[0])
        self.assertFalse(shape_match(lines(P1P1, (5, 5)), Config.CRITERION_OMEGA)[0])
        twisted = Bundle.of(P1P2, [Atom((Line(0), Diff(1, 3)))])
        self.assertFalse(shape_match(twisted, Config.CRITERION_OMEGA)[0])

    def test_zero_bundle(self):
        self.assertEqual(shape_match(Bundle(P1P1), Config.CRITERION_UNIT), (True, 'zero bundle'))
        self.assertEqual(shape_match(Bundle(P1P2), Config.CRITERION_BALANCED), (True, 'zero bundle'))
        self.assertEqual(shape_match(Bundle(P1P2), 'unit'), (True, 'zero bundle'))
        self.assertEqual(shape_match(Bundle(P1P1), Config.CRITERION_OMEGA), (False, None))

    def test_unit_keeps_input(self):
        bundle = lines(P1P1, (4, 3), (3, 3))
        self.assertEqual(shape_match(bundle, Config.CRITERION_UNIT), (True, 't = 3: O + O(e_1)'))
        self.assertEqual(bundle.atoms[0], Atom.line((4, 3)))

    def test_errors(self):
        self.assertRaises(DomainError, shape_match, lines(P1P1, (0, 0)), 'horrocks')
        self.assertRaises(DomainError, verify_criterion, lines(P1P1, (0, 0)), 'horrocks')
        self.assertRaises(SemanticError, verify_criterion, Bundle(P1P1), Config.CRITERION_BALANCED)


class TestTwistInvariance(unittest.TestCase):

    def test_free_t_conditions(self):
        rng = random.Random(19)
        for _ in range(60):
            space = random_space(rng)
            bundle = random_bundle(rng, space)
            twisted = twist_bundle(bundle, space.balanced(rng.randint(-3, 3)))
            for check in (balanced_split_condition, unit_split_condition):
                self.assertEqual(check(bundle).condition_holds, check(twisted).condition_holds)
