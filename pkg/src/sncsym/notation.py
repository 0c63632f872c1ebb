#!/usr/bin/env python3
"""
Text and JSON notation for indices and elements.

Text grammar:

    block          {0,1,3}
    index          ({0},{0,2},{1,3})          () is the empty index
    superpartition (2,1;2,1,1)                (;) is the empty one
    element        3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2})]
    sSym element   -h[(1;)] + 2*h[(0;1)]

Whitespace is ignored everywhere. Parse failures raise NotationError with
the offending position and a description of what was expected.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from .algebra import SymbolicElement
from .bases import Basis, SymBasis
from .combinat import Supercomposition
from .errors import InvalidIndexError, NotationError, SncsymError
from .rational import format_rational, is_integral, parse_rational, qq
from .superpartition import Superpartition

logger = logging.getLogger(__name__)


class Scanner:
    """Cursor over a string that skips whitespace"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def fail(self, message: str, expected: str):
        raise NotationError(message, self.text, self.pos, expected)

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or "end of input"
            self.fail(f"unexpected {found!r}", repr(char))
        self.pos += 1

    def accept(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("missing number", "a nonnegative integer")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def rational(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isdigit() or self.text[self.pos] == "/"):
            self.pos += 1
        return parse_rational(self.text[start:self.pos])

    def finish(self):
        if not self.at_end():
            self.fail("trailing input", "end of input")


# ---------------------------------------------------------------- indices

def _block(scanner: Scanner) -> Tuple[int, ...]:
    start = scanner.pos
    scanner.expect("{")
    elements = [scanner.integer()]
    while scanner.accept(","):
        elements.append(scanner.integer())
    scanner.expect("}")
    if len(set(elements)) != len(elements):
        raise NotationError("repeated element in block", scanner.text, start, "distinct elements")
    return tuple(sorted(elements))


def _index(scanner: Scanner) -> Supercomposition:
    start = scanner.pos
    scanner.expect("(")
    blocks = []
    if not scanner.accept(")"):
        blocks.append(_block(scanner))
        while scanner.accept(","):
            blocks.append(_block(scanner))
        scanner.expect(")")
    try:
        return Supercomposition.from_blocks(blocks)
    except InvalidIndexError as e:
        raise NotationError(str(e), scanner.text, start, "disjoint blocks")


def parse_index(text: str, standard: bool = True) -> Supercomposition:
    """Parse a partial set supercomposition; by default its ground set must be 1..n"""
    scanner = Scanner(text)
    index = _index(scanner)
    scanner.finish()
    if standard and not index.is_standard():
        raise NotationError("blocks do not cover 1..n", text, 0, "a ground set {1,...,n}")
    return index


def parse_set_superpartition(text: str) -> Supercomposition:
    """Parse an index that must already be in canonical form"""
    index = parse_index(text)
    if not index.is_set_superpartition():
        raise NotationError("not a set superpartition", text, 0,
                            "distinct blocks, fermionic ones ordered by least positive element")
    return index


def _superpartition(scanner: Scanner) -> Superpartition:
    start = scanner.pos
    scanner.expect("(")
    sides: List[List[int]] = [[], []]
    side = 0
    while True:
        char = scanner.peek()
        if char == ";" and side == 0:
            scanner.pos += 1
            side = 1
            continue
        if char == ")":
            scanner.pos += 1
            break
        if sides[side]:
            scanner.expect(",")
        sides[side].append(scanner.integer())
    if side == 0:
        raise NotationError("missing ';'", scanner.text, scanner.pos - 1, "(fermionic;bosonic)")
    try:
        return Superpartition.of(*sides)
    except InvalidIndexError as e:
        raise NotationError(str(e), scanner.text, start, "distinct fermionic parts")


def parse_superpartition(text: str) -> Superpartition:
    scanner = Scanner(text)
    shape = _superpartition(scanner)
    scanner.finish()
    return shape


# ---------------------------------------------------------------- elements

def _terms(scanner: Scanner, symbols: Dict[str, Any], parse_argument) -> List[Tuple[Any, Any, Any]]:
    terms = []
    if scanner.peek() == "0":
        start = scanner.pos
        scanner.pos += 1
        if scanner.at_end():
            return terms
        scanner.pos = start
    sign = -1 if scanner.accept("-") else 1
    while True:
        coeff = qq(1)
        if scanner.peek().isdigit():
            coeff = scanner.rational()
            scanner.expect("*")
        position = scanner.pos
        name = scanner.word()
        if name not in symbols:
            scanner.pos = position
            scanner.fail(f"unknown basis {name!r}", " or ".join(symbols))
        scanner.expect("[")
        argument = parse_argument(scanner)
        scanner.expect("]")
        terms.append((symbols[name], argument, coeff * sign))
        if scanner.at_end():
            return terms
        if scanner.accept("+"):
            sign = 1
        elif scanner.accept("-"):
            sign = -1
        else:
            scanner.fail(f"unexpected {scanner.peek()!r}", "'+', '-' or end of input")


_NC_SYMBOLS = {basis.value: basis for basis in Basis}


def _nc_term(basis: Basis, index, coeff) -> SymbolicElement:
    if basis.classical:
        if not isinstance(index, Supercomposition):
            raise NotationError(f"{basis.value} needs a set superpartition index", str(index), 0,
                                "({...},...)")
        return SymbolicElement.of(basis, index, coeff)
    from .tableaux import FIRST, SECOND, schur

    if not isinstance(index, Superpartition):
        raise NotationError(f"{basis.value} needs a superpartition index", str(index), 0, "(..;..)")
    return schur(index, FIRST if basis == Basis.SCHUR else SECOND).scale(coeff)


def _nc_argument(scanner: Scanner):
    """A set superpartition index, or a superpartition for the Schur symbols"""
    position = scanner.pos
    semicolon = scanner.text.find(";", position)
    closing = scanner.text.find("]", position)
    if semicolon != -1 and (closing == -1 or semicolon < closing):
        return _superpartition(scanner)
    index = _index(scanner)
    if not index.is_standard():
        raise NotationError("blocks do not cover 1..n", scanner.text, position, "a ground set {1,...,n}")
    return index


def parse_element(text: str) -> SymbolicElement:
    """Parse a sum of m/p/e/h terms; S and Sbar terms are expanded in m"""
    scanner = Scanner(text)
    terms = _terms(scanner, _NC_SYMBOLS, _nc_argument)
    if not terms:
        return SymbolicElement(Basis.M)
    total: Optional[SymbolicElement] = None
    for basis, index, coeff in terms:
        piece = _nc_term(basis, index, coeff)
        total = piece if total is None else total + piece
    return total


_SYM_SYMBOLS = {basis.value: basis for basis in SymBasis}


def parse_ssym_element(text: str):
    from .ssym import SSymElement

    scanner = Scanner(text)
    terms = _terms(scanner, _SYM_SYMBOLS, _superpartition)
    if not terms:
        return SSymElement(SymBasis.M)
    total = None
    for basis, shape, coeff in terms:
        piece = SSymElement.of(basis, shape, coeff)
        total = piece if total is None else total + piece
    return total


# ---------------------------------------------------------------- JSON

def rational_to_json(value):
    value = qq(value)
    return int(value.numerator) if is_integral(value) else format_rational(value)


def rational_from_json(value):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise NotationError("coefficient must be an integer or a 'p/q' string", repr(value), None, "")
    return qq(value)


def index_to_json(index: Supercomposition) -> List[List[int]]:
    return [list(block) for block in index.blocks]


def index_from_json(data) -> Supercomposition:
    if not isinstance(data, list) or not all(
            isinstance(b, list) and b and all(isinstance(e, int) and not isinstance(e, bool) for e in b)
            for b in data):
        raise NotationError("index must be a list of nonempty integer lists", json.dumps(data), None,
                            "[[0, 1], [2]]")
    try:
        return Supercomposition.from_blocks(data)
    except InvalidIndexError as e:
        raise NotationError(str(e), json.dumps(data), None, "disjoint blocks")


def superpartition_to_json(shape: Superpartition) -> List[List[int]]:
    return [list(shape.antisym), list(shape.sym)]


def superpartition_from_json(data) -> Superpartition:
    if not isinstance(data, list) or len(data) != 2 or not all(isinstance(side, list) for side in data):
        raise NotationError("superpartition must be [fermionic, bosonic]", json.dumps(data), None,
                            "[[2, 1], [2, 1, 1]]")
    try:
        return Superpartition.of(data[0], data[1])
    except (InvalidIndexError, TypeError) as e:
        raise NotationError(str(e), json.dumps(data), None, "nonnegative integers")


def element_to_json(el) -> Dict[str, Any]:
    """{basis, terms: [{index, coeff}]} for either algebra"""
    if isinstance(el, SymbolicElement):
        encode = index_to_json
    else:
        encode = superpartition_to_json
    return {
        "basis": el.basis.value,
        "terms": [{"index": encode(index), "coeff": rational_to_json(coeff)}
                  for index, coeff in el.items()],
    }


def element_from_json(data, commuting: bool = False):
    if not isinstance(data, dict) or "basis" not in data or not isinstance(data.get("terms"), list):
        raise NotationError("element must be an object with basis and terms", json.dumps(data), None,
                            '{"basis": "m", "terms": [...]}')
    try:
        if commuting:
            from .ssym import SSymElement

            basis = SymBasis.parse(data["basis"])
            decode, build = superpartition_from_json, SSymElement
        else:
            basis = Basis.parse(data["basis"])
            decode, build = index_from_json, SymbolicElement
    except SncsymError as e:
        raise NotationError(str(e), json.dumps(data), None, "a known basis")
    pairs = []
    for term in data["terms"]:
        if not isinstance(term, dict) or "index" not in term:
            raise NotationError("term must have index and coeff", json.dumps(term), None,
                                '{"index": ..., "coeff": ...}')
        pairs.append((decode(term["index"]), rational_from_json(term.get("coeff", 1))))
    if commuting:
        return build(basis, dict(pairs))
    return build.from_pairs(basis, pairs)


def dumps(data) -> str:
    return json.dumps(data, indent=2)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise NotationError(e.msg, text, e.pos, "valid JSON")
