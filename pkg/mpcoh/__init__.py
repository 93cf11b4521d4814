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

__author__ = 'The mpcoh developers'
__author_email__ = 'mpcoh@localhost'
__copyright__ = 'Copyright 2024'
__credits__ = ['The mpcoh developers']
__description__ = 'Exact sheaf cohomology, regularity and splitting criteria for decomposable bundles on multiprojective spaces.'
__email__ = 'mpcoh@localhost'
__license__ = 'GPL3'
__maintainer__ = 'The mpcoh developers'
__maintainer_email__ = 'mpcoh@localhost'
__name__ = 'mpcoh'
__python_requires__ = '>=3.8'
__status__ = 'Beta'
__title__ = 'mpcoh'
__version__ = '0.3.0'
