from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple, Union

from ..errors import RequirementMissing
from ..terms import NodeKind, Sort

__all__ = ["PassRequirements", "SortRef"]

SortRef = Union[Sort, str]
"""A sort, or the name of a language type (`"Expr"`, `"Stmt"`) resolved per language."""


def _resolve(lang, ref: SortRef) -> Sort:
    return lang.sort(ref) if isinstance(ref, str) else ref


@dataclass(frozen=True)
class PassRequirements:
    """What a pass needs from a language before it may run on it."""

    kinds: FrozenSet[NodeKind] = frozenset()
    injections: Tuple[Tuple[SortRef, SortRef], ...] = ()
    operations: Tuple[str, ...] = field(default=())

    def missing(self, lang) -> List[str]:
        missing = [
            f"kind {kind.name}"
            for kind in sorted(self.kinds, key=lambda k: k.name)
            if kind not in lang.signature
        ]
        for source, target in self.injections:
            source, target = _resolve(lang, source), _resolve(lang, target)
            if not lang.injections.has(source, target):
                missing.append(f"injection {source} -> {target}")
        missing.extend(
            f"operation {op}" for op in self.operations if not type(lang.ops).provides(op)
        )
        return missing

    def check(self, pass_name: str, lang):
        missing = self.missing(lang)
        if missing:
            raise RequirementMissing(pass_name, lang.name, ", ".join(missing))
