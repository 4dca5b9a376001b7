"""
Modularization of schemas into signatures.

Each type `T` of schema `S` gets the sort `S.TL`, and each constructor `C` the
kind `S.C`. Primitive arguments become payloads, everything else becomes children
whose sorts follow the argument types (lists and pairs map onto the container
kinds). `to_modular` and `from_modular` are mutually inverse.

.. code-block:: python

    lang = modularize_schema(parse_schema(text, "Fig"))
    term = to_modular(lang, GenericValue("Lit", (7,)))
    from_modular(lang, term)  # GenericValue("Lit", (7,))
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from cached_property import cached_property

from ..errors import ForeignKind, InvalidSchema, NonConformingValue
from ..terms import (
    Atomic,
    ListOf,
    NodeKind,
    PairOf,
    Signature,
    Sort,
    Term,
    build_list,
    build_pair,
    extract_list,
    leaf,
    leaf_value,
    prim_sort,
)
from .types import GenericValue, ListT, Named, PairT, PrimT, Schema, SchemaType
from .validate import normalize_type, validate_schema

__all__ = [
    "ModularizedLanguage",
    "dump_language",
    "from_modular",
    "modularize_schema",
    "to_modular",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Layout:
    """Where each constructor argument lives in the kind: payload or child slot."""

    kind: NodeKind
    type_name: str
    args: Tuple[SchemaType, ...]
    slots: Tuple[Tuple[bool, int], ...]
    """`(is_payload, index)` per argument."""


@dataclass(frozen=True)
class ModularizedLanguage:
    schema: Schema
    signature: Signature
    sort_of: Dict[str, Atomic]
    layouts: Dict[str, Layout]
    """Constructor name to its layout."""

    @cached_property
    def fragment_of(self) -> Dict[str, FrozenSet[NodeKind]]:
        fragments: Dict[str, set] = {name: set() for name in self.sort_of}
        for layout in self.layouts.values():
            fragments[layout.type_name].add(layout.kind)
        return {name: frozenset(kinds) for name, kinds in fragments.items()}

    @cached_property
    def by_kind(self) -> Dict[str, Layout]:
        return {layout.kind.name: layout for layout in self.layouts.values()}

    def kind(self, ctor: str) -> NodeKind:
        return self.layouts[ctor].kind

    @property
    def root_sort(self) -> Atomic:
        return self.sort_of[self.schema.root]


def modularize_schema(schema: Schema) -> ModularizedLanguage:
    report = validate_schema(schema)
    if not report.ok:
        raise InvalidSchema(report)
    sort_of = {t.name: Atomic(f"{schema.name}.{t.name}L") for t in schema.types}

    def translate(t: SchemaType) -> Sort:
        if isinstance(t, PrimT):
            return prim_sort(t.prim)
        if isinstance(t, Named):
            return sort_of[t.name]
        if isinstance(t, ListT):
            return ListOf(translate(t.elem))
        return PairOf(translate(t.first), translate(t.second))

    layouts = {}
    kinds = []
    for type_name, ctor in schema.constructors():
        args = tuple(normalize_type(a) for a in ctor.args)
        payloads, children, slots = [], [], []
        for arg in args:
            if isinstance(arg, PrimT):
                slots.append((True, len(payloads)))
                payloads.append(arg.prim)
            else:
                slots.append((False, len(children)))
                children.append(translate(arg))
        kind = NodeKind(
            f"{schema.name}.{ctor.name}",
            tuple(payloads),
            tuple(children),
            sort_of[type_name],
        )
        kinds.append(kind)
        layouts[ctor.name] = Layout(kind, type_name, args, tuple(slots))
    signature = Signature.of(schema.name, kinds)
    logger.debug(
        "modularized %s: %d sorts, %d kinds", schema.name, len(sort_of), len(kinds)
    )
    return ModularizedLanguage(schema, signature, sort_of, layouts)


def _encode(lang: ModularizedLanguage, t: SchemaType, value: Any) -> Term:
    if isinstance(t, PrimT):
        if not t.prim.accepts(value):
            raise NonConformingValue(t, value)
        return leaf(t.prim, value)
    if isinstance(t, Named):
        return _encode_value(lang, t.name, value)
    if isinstance(t, ListT):
        if not isinstance(value, tuple):
            raise NonConformingValue(t, value)
        elem = _sort(lang, t.elem)
        return build_list(elem, [_encode(lang, t.elem, v) for v in value])
    if not isinstance(value, tuple) or len(value) != 2:
        raise NonConformingValue(t, value)
    return build_pair(_encode(lang, t.first, value[0]), _encode(lang, t.second, value[1]))


def _sort(lang: ModularizedLanguage, t: SchemaType) -> Sort:
    if isinstance(t, PrimT):
        return prim_sort(t.prim)
    if isinstance(t, Named):
        return lang.sort_of[t.name]
    if isinstance(t, ListT):
        return ListOf(_sort(lang, t.elem))
    return PairOf(_sort(lang, t.first), _sort(lang, t.second))


def _encode_value(lang: ModularizedLanguage, type_name: str, value: Any) -> Term:
    if not isinstance(value, GenericValue):
        raise NonConformingValue(type_name, value)
    layout = lang.layouts.get(value.ctor)
    if layout is None or layout.type_name != type_name:
        raise NonConformingValue(type_name, value)
    if len(value.args) != len(layout.args):
        raise NonConformingValue(type_name, value)
    payloads: List[Any] = [None] * len(layout.kind.payloads)
    children: List[Optional[Term]] = [None] * len(layout.kind.child_sorts)
    for arg_type, (is_payload, index), arg in zip(layout.args, layout.slots, value.args):
        if is_payload:
            if not arg_type.prim.accepts(arg):
                raise NonConformingValue(arg_type, arg)
            payloads[index] = arg
        else:
            children[index] = _encode(lang, arg_type, arg)
    return Term(layout.kind, tuple(payloads), tuple(children))


def to_modular(
    lang: ModularizedLanguage, value: GenericValue, type_name: Optional[str] = None
) -> Term:
    """Encode `value` (of the root type unless `type_name` is given)."""
    return _encode_value(lang, type_name or lang.schema.root, value)


def _decode(lang: ModularizedLanguage, t: SchemaType, term: Term) -> Any:
    if isinstance(t, PrimT):
        if term.kind.name != f"{t.prim.value}F":
            raise ForeignKind(term.kind)
        return leaf_value(term)
    if isinstance(t, Named):
        return _decode_value(lang, term)
    if isinstance(t, ListT):
        if term.kind.name not in ("ConsF", "NilF"):
            raise ForeignKind(term.kind)
        return tuple(_decode(lang, t.elem, item) for item in extract_list(term))
    if term.kind.name != "PairF":
        raise ForeignKind(term.kind)
    first, second = term.children
    return (_decode(lang, t.first, first), _decode(lang, t.second, second))


def _decode_value(lang: ModularizedLanguage, term: Term) -> GenericValue:
    layout = lang.by_kind.get(term.kind.name)
    if layout is None or layout.kind != term.kind:
        raise ForeignKind(term.kind)
    args = []
    for arg_type, (is_payload, index) in zip(layout.args, layout.slots):
        if is_payload:
            args.append(term.payloads[index])
        else:
            args.append(_decode(lang, arg_type, term.children[index]))
    ctor = layout.kind.name[len(lang.schema.name) + 1 :]
    return GenericValue(ctor, tuple(args))


def from_modular(lang: ModularizedLanguage, term: Term) -> GenericValue:
    return _decode_value(lang, term)


def dump_language(lang: ModularizedLanguage) -> str:
    lines = [f"schema {lang.schema.name} root {lang.schema.root}"]
    for name, sort in lang.sort_of.items():
        lines.append(f"sort {name} = {sort}")
    for kind in lang.signature:
        lines.append(f"kind {kind.describe()}")
    frontier = ", ".join(map(str, lang.signature.frontier))
    if frontier:
        lines.append(f"frontier {frontier}")
    return "\n".join(lines) + "\n"
