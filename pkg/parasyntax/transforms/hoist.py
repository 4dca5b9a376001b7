"""
Declaration hoisting.

A declaration `T x = e;` is split into `T x;` at the top of its block and the
assignment `x = e;` where it stood. Both passes are written once against the
generic fragments and run on every language whose injections and operations
provide them.

.. code-block:: python

    lang = get_language("minic")
    hoisted = hoist(lang.parse_term(source), lang)
"""
import logging
from typing import List, Optional, Sequence, Set, Tuple

from ..fragments import (
    ASSIGN,
    ASSIGN_L,
    BLOCK,
    BLOCK_ITEM_L,
    IDENT,
    IDENT_L,
    JUST_LOCAL_VAR_INIT,
    MULTI_LOCAL_VAR_DECL,
    MULTI_LOCAL_VAR_DECL_L,
    NO_LOCAL_VAR_INIT,
    SINGLE_LOCAL_VAR_DECL,
    VAR_DECL_BINDER_L,
    assign,
    block,
    ident_names,
    single_local_var_decl,
    var_decl_binder_to_lhs,
    var_init_to_rhs,
)
from ..terms import Term, extract_list, map_list
from ..traversal import rewrite, transform_bottom_up
from .requirements import PassRequirements

__all__ = [
    "ELEMENTARY_HOIST_REQUIREMENTS",
    "HOIST_REQUIREMENTS",
    "elementary_hoist",
    "hoist",
    "split_declaration",
]

logger = logging.getLogger(__name__)

HOIST_REQUIREMENTS = PassRequirements(
    kinds=frozenset(
        [
            IDENT,
            ASSIGN,
            BLOCK,
            MULTI_LOCAL_VAR_DECL,
            SINGLE_LOCAL_VAR_DECL,
            JUST_LOCAL_VAR_INIT,
            NO_LOCAL_VAR_INIT,
        ]
    ),
    injections=(
        (ASSIGN_L, BLOCK_ITEM_L),
        (MULTI_LOCAL_VAR_DECL_L, BLOCK_ITEM_L),
    ),
    operations=("var_init_to_rhs", "var_decl_binder_to_lhs"),
)

# The elementary pass only knows single-identifier binders.
ELEMENTARY_HOIST_REQUIREMENTS = PassRequirements(
    kinds=HOIST_REQUIREMENTS.kinds,
    injections=HOIST_REQUIREMENTS.injections + ((IDENT_L, VAR_DECL_BINDER_L),),
    operations=HOIST_REQUIREMENTS.operations,
)


def _remove_init(single: Term) -> Term:
    attrs, binder, _ = single.children
    return single_local_var_decl(attrs, binder, None)


def split_declaration(item: Term, lang) -> Optional[Tuple[Term, List[Term]]]:
    """
    For a block item holding a declaration: the item with every initializer
    removed, and the assignments the initializers become, in order.
    """
    inj = lang.injections
    decl = inj.try_proj(item, MULTI_LOCAL_VAR_DECL_L)
    if decl is None:
        return None
    attrs, singles = decl.children
    stores = []
    for single in extract_list(singles):
        decl_attrs, binder, opt = single.children
        if opt.kind == JUST_LOCAL_VAR_INIT:
            lhs = var_decl_binder_to_lhs(lang.ops, binder)
            rhs = var_init_to_rhs(lang.ops, attrs, decl_attrs, opt.children[0])
            stores.append(inj.inj(assign(lhs, rhs), BLOCK_ITEM_L))
    stripped = Term(MULTI_LOCAL_VAR_DECL, (), (attrs, map_list(_remove_init, singles)))
    return inj.inj(stripped, BLOCK_ITEM_L), stores


def _declarators(item: Term, lang) -> List[Tuple[List[str], Optional[Term]]]:
    decl = lang.injections.proj(item, MULTI_LOCAL_VAR_DECL_L)
    result = []
    for single in extract_list(decl.children[1]):
        _, binder, opt = single.children
        init = opt.children[0] if opt.kind == JUST_LOCAL_VAR_INIT else None
        result.append((lang.ops.bound_names(binder), init))
    return result


def _shadows(item: Term, seen: Set[str], lang) -> bool:
    """
    Whether moving the declaration `item` to the top of its block would capture a
    use of an outer binding: a bound name occurs earlier in the block, or an
    initializer reads a name bound by its own or a later declarator.
    """
    declarators = _declarators(item, lang)
    for k, (names, init) in enumerate(declarators):
        if seen.intersection(names):
            return True
        if init is None:
            continue
        later = {n for names_, _ in declarators[k:] for n in names_}
        if later.intersection(ident_names(init)):
            return True
    return False


def _hoist_items(items: Sequence[Term], lang, check_shadowing: bool) -> List[Term]:
    decls: List[Term] = []
    rest: List[Term] = []
    seen: Set[str] = set()
    for item in items:
        split = split_declaration(item, lang)
        if split is not None and check_shadowing and _shadows(item, seen, lang):
            logger.debug("%s: declaration kept in place: %s", lang.name, ident_names(item))
            split = None
        if split is None:
            rest.append(item)
        else:
            decls.append(split[0])
            rest.extend(split[1])
        seen.update(ident_names(item))
    return decls + rest


def _hoist(term: Term, lang, check_shadowing: bool) -> Term:
    @rewrite
    def hoist_block(node):
        if node.kind != BLOCK:
            return None
        items, end = node.children
        hoisted = _hoist_items(extract_list(items), lang, check_shadowing)
        return block(hoisted).with_child(1, end)

    return transform_bottom_up(hoist_block, term)


def elementary_hoist(term: Term, lang) -> Term:
    """
    Move every declaration of every block to the block's top, leaving its
    initializers behind as assignments.
    """
    ELEMENTARY_HOIST_REQUIREMENTS.check("ehoist", lang)
    return _hoist(term, lang, check_shadowing=False)


def hoist(term: Term, lang) -> Term:
    """
    :func:`elementary_hoist` for any binder shape, keeping in place the
    declarations whose move would change which binding a name refers to.
    """
    HOIST_REQUIREMENTS.check("hoist", lang)
    return _hoist(term, lang, check_shadowing=True)
