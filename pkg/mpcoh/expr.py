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

"""
Parser and printer for the bundle expression language.

    space   := nat ("," nat)*
    bundle  := "0" | term ("+" term)*
    term    := [nat "*"] atom
    atom    := "O" "(" int ("," int)* ")"
             | "box" "(" factor ("," factor)* ")"
    factor  := "O" "(" int ")" | "Om" "(" nat "," int ")"

Om(p, t) is Omega^p(t). Whitespace is ignored. The grammar is LL(1) and is
parsed by recursive descent; every error carries the UTF-8 byte offset of the
token that caused it.
"""

import re
from dataclasses import dataclass
from typing import List, Tuple

from mpcoh.exceptions import ExprParseError, ExprSemanticError
from mpcoh.sheaves import Atom, Bundle, Line, Multidegree, Space, make_factor

INT = 'int'
NAME = 'name'
END = 'end of input'

_TOKEN_RE = re.compile(r'\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[(),+*]))')


@dataclass(frozen=True)
class Token(object):
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    """Split an expression into tokens, ending with an END token."""
    out = list()
    pos = 0
    while True:
        stripped = len(text) - len(text[pos:].lstrip())
        if stripped == len(text):
            out.append(Token(END, '', len(text)))
            return out
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprParseError(f'Unexpected character {text[stripped]!r}', text, stripped)
        if m.group('int') is not None:
            out.append(Token(INT, m.group('int'), m.start('int')))
        elif m.group('name') is not None:
            out.append(Token(NAME, m.group('name'), m.start('name')))
        else:
            out.append(Token(m.group('punct'), m.group('punct'), m.start('punct')))
        pos = m.end()


class _Parser(object):
    """Recursive-descent parser over a token list with one token of lookahead."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != END:
            self.pos += 1
        return token

    def fail(self, message: str, expected=(), token: Token = None):
        token = token or self.peek
        found = token.text if token.kind != END else END
        raise ExprParseError(f'{message}, found {found!r}', self.text, token.offset, expected)

    def expect(self, kind: str, text: str = None) -> Token:
        token = self.peek
        if token.kind != kind or (text is not None and token.text != text):
            self.fail('Unexpected token', [text or kind])
        return self.advance()

    def integer(self) -> int:
        return int(self.expect(INT).text)

    def natural(self) -> int:
        token = self.expect(INT)
        if token.text.startswith('-'):
            self.fail('Expected a non-negative integer', [INT], token)
        return int(token.text)

    def integer_list(self) -> Tuple[List[int], List[Token]]:
        tokens = [self.expect(INT)]
        while self.peek.kind == ',':
            self.advance()
            tokens.append(self.expect(INT))
        return [int(t.text) for t in tokens], tokens

    def finish(self):
        if self.peek.kind != END:
            self.fail('Trailing input', [END])

    # bundle grammar

    def bundle(self, space: Space) -> Bundle:
        if self.peek.kind == END:
            self.fail('Empty bundle expression', ['O', 'box', INT])
        if self.peek.kind == INT and self.peek.text == '0' and self.tokens[self.pos + 1].kind == END:
            self.advance()
            return Bundle(space)
        summands = [self.term(space)]
        while self.peek.kind == '+':
            self.advance()
            summands.append(self.term(space))
        self.finish()
        return Bundle(space, tuple(summands))

    def term(self, space: Space) -> Tuple[Atom, int]:
        mult = 1
        if self.peek.kind == INT:
            token = self.peek
            mult = self.natural()
            if mult < 1:
                raise ExprSemanticError('Multiplicity must be at least 1', self.text, token.offset)
            self.expect('*')
        return self.atom(space), mult

    def atom(self, space: Space) -> Atom:
        token = self.peek
        if token.kind == NAME and token.text == 'O':
            self.advance()
            self.expect('(')
            values, _ = self.integer_list()
            close = self.expect(')')
            if len(values) != space.s:
                raise ExprSemanticError(f'Line bundle has {len(values)} twists, the space '
                                        f'{space} has {space.s} factors', self.text, close.offset)
            return Atom.line(values)
        if token.kind == NAME and token.text == 'box':
            self.advance()
            self.expect('(')
            factors = [self.factor(space, 0)]
            while self.peek.kind == ',':
                self.advance()
                factors.append(self.factor(space, len(factors)))
            close = self.expect(')')
            if len(factors) != space.s:
                raise ExprSemanticError(f'Box product has {len(factors)} factors, the space '
                                        f'{space} has {space.s}', self.text, close.offset)
            return Atom(tuple(factors))
        self.fail('Expected an atom', ['O', 'box'])

    def factor(self, space: Space, slot: int):
        token = self.peek
        if slot >= space.s:
            raise ExprSemanticError(f'Box product has more factors than the space {space}',
                                    self.text, token.offset)
        if token.kind == NAME and token.text == 'O':
            self.advance()
            self.expect('(')
            a = self.integer()
            self.expect(')')
            return Line(a)
        if token.kind == NAME and token.text == 'Om':
            self.advance()
            self.expect('(')
            p_token = self.peek
            p = self.natural()
            self.expect(',')
            t = self.integer()
            self.expect(')')
            n = space.dims[slot]
            if p > n:
                raise ExprSemanticError(f'Om({p},{t}) needs 0 <= p <= {n} on P^{n}',
                                        self.text, p_token.offset)
            return make_factor(n, p, t)
        self.fail('Expected a factor', ['O', 'Om'])


def parse_space(text: str) -> Space:
    """Parse "n_1,...,n_s" into a Space.

    Raises
    ------
    ExprParseError
        If the text is not a comma separated list of integers >= 1.
    """
    parser = _Parser(text)
    if parser.peek.kind == END:
        parser.fail('Empty space expression', [INT])
    dims, tokens = parser.integer_list()
    parser.finish()
    for n, token in zip(dims, tokens):
        if n < 1:
            raise ExprParseError(f'Factor dimensions must be >= 1, found {n}', text, token.offset)
    return Space(tuple(dims))


def parse_multidegree(text: str, space: Space) -> Multidegree:
    """Parse "k_1,...,k_s" into a multidegree on `space`."""
    parser = _Parser(text)
    if parser.peek.kind == END:
        parser.fail('Empty multidegree', [INT])
    values, _ = parser.integer_list()
    parser.finish()
    if len(values) != space.s:
        raise ExprSemanticError(f'Multidegree has {len(values)} entries, the space {space} '
                                f'has {space.s} factors', text, len(text))
    return tuple(values)


def parse_bundle(text: str, space: Space) -> Bundle:
    """Parse a bundle expression on `space` into a normalized Bundle.

    Raises
    ------
    ExprParseError
        If the text does not follow the grammar.
    ExprSemanticError
        If an atom has the wrong arity, an exterior power is out of range or
        a multiplicity is zero.
    """
    return _Parser(text).bundle(space)


def format_bundle(bundle: Bundle) -> str:
    """Canonical text of a bundle: equal atoms merged, summands sorted."""
    return bundle.canonical().to_expr()
