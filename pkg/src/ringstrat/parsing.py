"""Text grammar for elements and ideals of Z[sqrt d].

An element is a signed sum of monomials ``a``, ``b*w`` or ``w`` where ``w``
denotes sqrt(d), e.g. ``5+5*w`` or ``-w``.  An ideal is a comma-separated
list of elements: ``"10, 5+5*w"``.
"""
import re

from .errors import InvalidParameter

_MONOMIAL = re.compile(r"^([+-]?)(\d*)(\*?w)?$")


def parse_quad_element(text):
    s = "".join(str(text).split())
    if not s:
        raise InvalidParameter("empty element")
    a = b = 0
    for mono in re.findall(r"[+-]?[^+-]+", s):
        match = _MONOMIAL.match(mono)
        if not match or (not match.group(2) and not match.group(3)):
            raise InvalidParameter(f"cannot parse {mono!r} in {text!r}")
        sign, digits, root = match.groups()
        if root and root.startswith("*") and not digits:
            raise InvalidParameter(f"cannot parse {mono!r} in {text!r}")
        k = int(digits) if digits else 1
        if sign == "-":
            k = -k
        if root:
            b += k
        else:
            a += k
    return a, b


def parse_ideal_generators(text):
    parts = [p for p in str(text).split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise InvalidParameter(f"cannot parse ideal {text!r}")
    return [parse_quad_element(p) for p in parts]
