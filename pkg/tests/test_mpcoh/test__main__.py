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
import json
import os
import subprocess
import sys
import tempfile
import unittest

from mpcoh.config.output import PATH_REPORT_JSON, PATH_SWEEP_INCONSISTENT
from tests.common import are_files_equal

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class TestMain(unittest.TestCase):
    """Used to test the CLI end to end: exit codes and stdout."""

    def setUp(self):
        """Create a new temporary directory for each method."""
        self.dir_tmp_obj = tempfile.TemporaryDirectory(prefix='mpcoh_tmp')
        self.dir_tmp = self.dir_tmp_obj.name

    def tearDown(self):
        """Cleanup after each method finishes."""
        self.dir_tmp_obj.cleanup()

    def run_mpcoh(self, *args):
        proc = subprocess.Popen([sys.executable, '-m', 'mpcoh'] + list(args), cwd=REPO_ROOT,
                                stdout=subprocess.PIPE, stderr=subprocess.PIPE, encoding='utf-8')
        stdout, stderr = proc.communicate()
        return proc.returncode, stdout, stderr

    def run_json(self, *args):
        code, stdout, stderr = self.run_mpcoh(*args, '--json')
        self.assertEqual(code, 0, stderr)
        return json.loads(stdout)['result']

    def test_help(self):
        code, stdout, _ = self.run_mpcoh()
        self.assertEqual(code, 0)
        self.assertIn('koszul_verify', stdout)
        self.assertEqual(self.run_mpcoh('--version')[0], 0)

    def test_cohom(self):
        result = self.run_json('cohom', '--space', '1,2', 'O(-2,-3)')
        self.assertEqual(result['h'], ['0', '0', '0', '1'])
        self.assertEqual(result['chi'], '-1')
        result = self.run_json('cohom', '--space', '1,2', 'O(-1,-3)', '--twist=-1,0')
        self.assertEqual(result['bundle'], 'O(-2,-3)')
        self.assertEqual(result['h'], ['0', '0', '0', '1'])

    def test_cohom_text(self):
        code, stdout, _ = self.run_mpcoh('cohom', '--space', '1,2', 'O(1,1)')
        self.assertEqual(code, 0)
        self.assertIn('chi: 6', stdout)

    def test_json_is_deterministic(self):
        args = ('cohom', '--space', '1,2', 'O(1,-5) + 2*box(O(0), Om(1,2))', '--json')
        first = self.run_mpcoh(*args)
        second = self.run_mpcoh(*args)
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])

    def test_reg(self):
        result = self.run_json('reg', '--space', '1,2', 'O(1,-2)')
        self.assertEqual(result['status'], 'found')
        self.assertEqual(result['reg'], '2')
        result = self.run_json('reg', '--space', '1,2', 'box(O(0), Om(1,2))', '--at=-1,-1')
        self.assertIs(result['regular'], False)
        self.assertEqual(result['witness']['i'], '2')

    def test_acm(self):
        result = self.run_json('acm', '--space', '1,1,1', 'O(0,2,1)')
        self.assertIs(result['acm'], True)
        self.assertIs(result['closed_form'], False)
        self.assertIs(result['consistent'], False)

    def test_split(self):
        result = self.run_json('split', '--space', '1,2', 'O(0,2)', '--criterion', 'unit')
        self.assertEqual(result['criterion'], 'thm32')
        self.assertIs(result['condition_holds'], True)
        self.assertIs(result['shape_holds'], False)
        self.assertIs(result['consistent'], False)

    def test_split_thm_ids(self):
        result = self.run_json('split', '--criterion', 'thm31', '--space', '1,1', 'O(0,1)')
        self.assertEqual(result['criterion'], 'thm31')
        self.assertIs(result['condition_holds'], False)
        self.assertIs(result['shape_holds'], False)
        self.assertIs(result['consistent'], True)
        witness = result['condition_witnesses'][0]
        self.assertEqual((witness['i'], witness['k'], witness['t']), ('1', ['-1', '0'], '-1'))

        result = self.run_json('split', '--criterion', 'thm33', '--space', '1,2', 'box(O(0), Om(1,2))')
        self.assertEqual(result['criterion'], 'thm33')
        self.assertIs(result['condition_holds'], True)
        self.assertIs(result['shape_holds'], True)

    def test_serre(self):
        result = self.run_json('serre', '--space', '2,2', 'box(Om(1,3), O(-4))')
        self.assertIs(result['all_equal'], True)
        self.assertEqual(len(result['pairs']), 5)

    def test_koszul_verify(self):
        result = self.run_json('koszul_verify', '--space', '1,2')
        self.assertIs(result['all_pass'], True)
        self.assertEqual(len(result['terms']['first']), 3)

    def test_exit_codes(self):
        self.assertEqual(self.run_mpcoh('cohom', '--space', '1,2', 'O(1,2')[0], 2)
        self.assertEqual(self.run_mpcoh('cohom', '--space', '1,0', 'O(1,2)')[0], 2)
        self.assertEqual(self.run_mpcoh('cohom', '--space', '1,2', '')[0], 2)
        self.assertEqual(self.run_mpcoh('cohom', '--space', '1,2', 'O(1)')[0], 3)
        self.assertEqual(self.run_mpcoh('cohom', '--space', '1,2', 'box(O(0), Om(3,1))')[0], 3)
        self.assertEqual(self.run_mpcoh('split', '--space', '1,2', 'O(1,-2)',
                                        '--criterion', 'omega')[0], 4)

    def test_error_message(self):
        code, stdout, stderr = self.run_mpcoh('cohom', '--space', '1,2', 'O(1)')
        self.assertEqual(code, 3)
        self.assertEqual(stdout, '')
        self.assertIn('offset 3', stderr)

    def test_out_dir(self):
        args = ['sweep', '--space', '1,1', '--criterion', 'unit', '--min=-1', '--max', '1',
                '--max_summands', '1', '--prefix', 'run']
        out_a = os.path.join(self.dir_tmp, 'a')
        out_b = os.path.join(self.dir_tmp, 'b')
        self.assertEqual(self.run_mpcoh(*args, '--out_dir', out_a)[0], 0)
        self.assertEqual(self.run_mpcoh(*args, '--out_dir', out_b, '--cpus', '2')[0], 0)

        for path in (PATH_REPORT_JSON.format(prefix='run', command='sweep'),
                     PATH_SWEEP_INCONSISTENT.format(prefix='run', criterion='thm32')):
            self.assertTrue(are_files_equal(os.path.join(out_a, path), os.path.join(out_b, path)), path)
        self.assertTrue(os.path.isfile(os.path.join(out_a, 'mpcoh.log')))
