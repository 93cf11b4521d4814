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


def caret(text, position):
    """Two extra lines showing the input with a marker under character `position`."""
    if not text:
        return ''
    return f'\n  {text}\n  {" " * position}^'


def byte_offset(text, position):
    """UTF-8 byte offset of character `position` in `text`."""
    return len(text[:position].encode('utf-8'))


class MPCohException(Exception):
    """ Base exception for all mpcoh exceptions thrown in this project. """
    exit_code = 1

    def __init__(self, message=''):
        Exception.__init__(self, message)


class ExprParseError(MPCohException):
    """ Thrown when a space, bundle or multidegree expression cannot be parsed. """
    exit_code = 2

    def __init__(self, message='', text='', position=0, expected=()):
        self.text = text
        self.position = max(0, min(position, len(text)))
        self.offset = byte_offset(text, self.position)
        self.expected = tuple(sorted(set(expected)))
        MPCohException.__init__(self, message)

    def __str__(self):
        msg = f'{self.args[0]} (offset {self.offset})'
        if self.expected:
            msg += f', expected one of: {" ".join(self.expected)}'
        return msg + caret(self.text, self.position)


class SemanticError(MPCohException):
    """ Thrown when well-formed input does not describe a valid object (e.g. arity mismatch). """
    exit_code = 3

    def __init__(self, message=''):
        MPCohException.__init__(self, message)


class DomainError(SemanticError):
    """ Thrown when a cohomology degree or exterior power lies outside its range. """

    def __init__(self, message=''):
        SemanticError.__init__(self, message)


class PreconditionError(MPCohException):
    """ Thrown when a criterion is applied to a bundle outside its hypotheses. """
    exit_code = 4

    def __init__(self, message=''):
        MPCohException.__init__(self, message)


class ExprSemanticError(SemanticError):
    """ Thrown when a well-formed expression names an invalid object, e.g. the wrong arity. """

    def __init__(self, message='', text='', position=0):
        self.text = text
        self.position = max(0, min(position, len(text)))
        self.offset = byte_offset(text, self.position)
        SemanticError.__init__(self, message)

    def __str__(self):
        return f'{self.args[0]} (offset {self.offset})' + caret(self.text, self.position)
