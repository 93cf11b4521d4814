import os
import shutil
import tempfile
import unittest

from mpcoh.exceptions import MPCohException
from mpcoh.support.common import decimal_strings, make_sure_path_exists


class TestSupportCommon(unittest.TestCase):

    def test_make_sure_path_exists(self):
        """ Tests if a path is always created """
        tmp_out_dir = os.path.join(tempfile.mkdtemp(prefix='mpcoh_tmp_'), 'a', 'b')
        try:
            self.assertTrue(make_sure_path_exists(''))
            self.assertTrue(make_sure_path_exists(tmp_out_dir))  # Create the directory.
            self.assertTrue(make_sure_path_exists(tmp_out_dir))  # Return True as it's already created.
            self.assertRaises(MPCohException, make_sure_path_exists, '/dev/null/fail')
        finally:
            shutil.rmtree(os.path.dirname(os.path.dirname(tmp_out_dir)))

    def test_decimal_strings(self):
        """ Integers become strings, everything else keeps its JSON type """
        self.assertEqual(decimal_strings(-3), '-3')
        self.assertEqual(decimal_strings(2 ** 100), str(2 ** 100))
        self.assertIs(decimal_strings(False), False)
        self.assertIsNone(decimal_strings(None))
        self.assertEqual(decimal_strings({'a': (1, [2, 'x']), 'b': {'c': 0}}),
                         {'a': ['1', ['2', 'x']], 'b': {'c': '0'}})
