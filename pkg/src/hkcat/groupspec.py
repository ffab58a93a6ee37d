"""Textual group descriptions.

Grammar (whitespace between tokens is ignored, names are case-sensitive)::

    spec     := NAME '(' INT ')' | 'gens' ':' perm (',' perm)*
    perm     := cycle+
    cycle    := '(' [INT ((',')? INT)*] ')'
    NAME     := Sn | An | Cn | Dn | PGL2 | PGammaL2 | AGL1

Explicit generators share one degree: one more than the largest point that
appears anywhere, so fixed points can be pinned with 1-cycles, e.g.
``gens:(0 1)(3)`` has degree 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, FieldTooLarge, NotPrime, ParseError, UnknownFamily
from .permgroup import (
    Permutation,
    PermutationGroup,
    _byte_offset,
    _skip_ws,
    alternating_group,
    cyclic_group,
    dihedral_group,
    parse_cycles,
    symmetric_group,
)
from .projgroups import field_for_order, projective_group_generators

FAMILIES = ("Sn", "An", "Cn", "Dn", "PGL2", "PGammaL2", "AGL1")
_PROJECTIVE = {"PGL2", "PGammaL2", "AGL1"}


@dataclass(frozen=True)
class GroupSpec:
    family: str | None = None
    param: int | None = None
    generators: tuple | None = None

    @property
    def is_named(self):
        return self.family is not None

    @property
    def degree(self):
        if self.generators is not None:
            return self.generators[0].degree
        if self.family in ("PGL2", "PGammaL2"):
            return self.param + 1
        return self.param

    def __str__(self):
        if self.is_named:
            return f"{self.family}({self.param})"
        n = self.degree
        parts = [str(g) for g in self.generators]
        if all(g(n - 1) == n - 1 for g in self.generators):
            parts[-1] = ("" if parts[-1] == "()" else parts[-1]) + f"({n - 1})"
        return "gens:" + ",".join(parts)

    def resolve(self):
        """The permutation group this spec names."""
        if not self.is_named:
            return PermutationGroup(self.generators, name=str(self))
        if self.family in _PROJECTIVE:
            return projective_group_generators(self.family, self.param)
        build = {"Sn": symmetric_group, "An": alternating_group, "Cn": cyclic_group, "Dn": dihedral_group}
        group = build[self.family](self.param)
        group.name = str(self)
        return group


def named_group(family, param):
    return GroupSpec(family, param).resolve()


def _check_param(family, q):
    if family in _PROJECTIVE:
        try:
            field_for_order(q)
        except (NotPrime, FieldTooLarge) as exc:
            raise BadParameter(f"{family}({q}): {exc}") from None
    elif q < 1:
        raise BadParameter(f"{family}({q}): degree must be positive")


def parse_group_spec(text):
    pos = _skip_ws(text, 0)
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    if not name or not name[0].isalpha():
        raise ParseError(_byte_offset(text, start), {"NAME", "'gens'"}, text)
    pos = _skip_ws(text, pos)

    if name == "gens":
        if pos >= len(text) or text[pos] != ":":
            raise ParseError(_byte_offset(text, pos), {"':'"}, text)
        pos += 1
        perms = []
        while True:
            cycles, pos = parse_cycles(text, pos)
            perms.append(cycles)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos != len(text):
                raise ParseError(_byte_offset(text, pos), {"'('", "','", "end of input"}, text)
            break
        degree = max((i for cycles in perms for c in cycles for i in c), default=0) + 1
        return GroupSpec(generators=tuple(Permutation.from_cycles(c, degree) for c in perms))

    if pos >= len(text) or text[pos] != "(":
        raise ParseError(_byte_offset(text, pos), {"'('"}, text)
    pos = _skip_ws(text, pos + 1)
    num_start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if num_start == pos:
        raise ParseError(_byte_offset(text, num_start), {"INT"}, text)
    param = int(text[num_start:pos])
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != ")":
        raise ParseError(_byte_offset(text, pos), {"')'"}, text)
    pos = _skip_ws(text, pos + 1)
    if pos != len(text):
        raise ParseError(_byte_offset(text, pos), {"end of input"}, text)
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown group family {name!r}; expected one of {', '.join(FAMILIES)}")
    _check_param(name, param)
    return GroupSpec(name, param)


def resolve_group(text):
    return parse_group_spec(text).resolve()
