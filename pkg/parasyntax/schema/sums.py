import logging
from typing import Dict, Iterable, Sequence

from ..errors import DuplicateKind, RemovedKindNotPresent
from ..terms import NodeKind, Signature

__all__ = ["sum_signatures"]

logger = logging.getLogger(__name__)


def sum_signatures(
    name: str,
    parts: Sequence[Signature],
    minus: Iterable[str] = (),
    plus: Iterable[NodeKind] = (),
) -> Signature:
    """
    Union of `parts`, without the kinds named in `minus`, with `plus` added.

    A kind shared verbatim by two parts is kept once; two different kinds with the
    same name are a :class:`DuplicateKind`.
    """
    kinds: Dict[str, NodeKind] = {}
    for part in parts:
        for kind in part:
            if kinds.get(kind.name, kind) != kind:
                raise DuplicateKind(kind.name)
            kinds[kind.name] = kind
    for kind_name in minus:
        if kind_name not in kinds:
            raise RemovedKindNotPresent(kind_name)
        del kinds[kind_name]
    for kind in plus:
        if kind.name in kinds:
            raise DuplicateKind(kind.name)
        kinds[kind.name] = kind
    signature = Signature.of(name, kinds.values())
    logger.debug(
        "signature %s: %d kinds, frontier %s",
        name,
        len(signature),
        ", ".join(map(str, signature.frontier)) or "empty",
    )
    return signature
