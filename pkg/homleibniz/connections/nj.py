"""¬J-connections: links from ``Λ^¬J`` and partial sums confined to one side."""

from __future__ import annotations

import logging

from homleibniz.algebra.ideals import derived
from homleibniz.connections.connections import (
    Connection,
    HypothesisMissingError,
    RootPartition,
    reachability_partition,
    search_connection,
    verify_connection,
)
from homleibniz.diagnostics.jsplit import JSplit, Side
from homleibniz.errors import HomLeibnizError
from homleibniz.roots.decomposition import (
    Root,
    RootNotInLambdaError,
    SplitDecomposition,
    is_symmetric,
)

logger = logging.getLogger(__name__)


class ClassMismatchError(HomLeibnizError, ValueError):
    """Raised when two roots are expected on the same side of the J split but are not."""


def _side_of(decomposition: SplitDecomposition, js: JSplit, root: Root) -> Side:
    if not decomposition.is_root(root):
        raise RootNotInLambdaError(f"{root} is not a root.", witness=root)
    side = js.side_of(root)
    if side is None:
        raise ClassMismatchError(f"{root} lies neither in Λ^J nor in Λ^¬J.", witness=root)
    return side


def nj_connected(
    decomposition: SplitDecomposition, js: JSplit, alpha: Root, beta: Root
) -> Connection | None:
    """
    A shortest ¬J-connection from ``α`` to ``β``, or ``None``.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :param alpha: Source root.
    :type alpha: homleibniz.roots.decomposition.Root
    :param beta: Target root, on the same side as ``alpha``.
    :type beta: homleibniz.roots.decomposition.Root
    :return: Certificate or ``None``.
    :rtype: homleibniz.connections.connections.Connection | None
    :raises RootNotInLambdaError: If either argument is not a root.
    :raises ClassMismatchError: If ``alpha`` and ``beta`` lie on different sides.
    """
    side = _side_of(decomposition, js, alpha)
    other = _side_of(decomposition, js, beta)
    if side is not other:
        raise ClassMismatchError(
            f"{alpha} lies in Λ^{side.value} but {beta} lies in Λ^{other.value}.",
            witness=(alpha, beta),
        )
    return search_connection(
        decomposition, alpha, beta, js.lambda_notJ, allowed=frozenset(js.roots_of(side))
    )


def verify_nj_connection(
    decomposition: SplitDecomposition,
    js: JSplit,
    alpha: Root,
    beta: Root,
    connection: Connection,
) -> bool:
    """Replay a ¬J-connection certificate, including the side and link filters."""
    side = js.side_of(alpha)
    if side is None or js.side_of(beta) is not side:
        return False
    return verify_connection(
        decomposition,
        alpha,
        beta,
        connection,
        links=js.lambda_notJ,
        allowed=frozenset(js.roots_of(side)),
    )


def _check_hypotheses(decomposition: SplitDecomposition, js: JSplit, side: Side) -> None:
    if not is_symmetric(decomposition, js.lambda_notJ):
        raise HypothesisMissingError("Λ^¬J symmetric")
    if side is Side.J:
        algebra = decomposition.algebra
        if not derived(algebra).is_full:
            raise HypothesisMissingError("L = [L, L]")
        if not is_symmetric(decomposition, js.lambda_J):
            raise HypothesisMissingError("Λ^J symmetric")


def nj_classes(decomposition: SplitDecomposition, js: JSplit, side: Side | str) -> RootPartition:
    """
    Partition one side of the J split into ¬J-connection classes.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :param side: ``J`` or ``notJ``.
    :type side: homleibniz.diagnostics.jsplit.Side | str
    :return: The classes of ``Λ^side``.
    :rtype: homleibniz.connections.connections.RootPartition
    :raises HypothesisMissingError: Naming the first hypothesis that fails.
    """
    side = Side(side)
    _check_hypotheses(decomposition, js, side)
    roots = js.roots_of(side)
    reach = {
        alpha: {beta for beta in roots if nj_connected(decomposition, js, alpha, beta)}
        for alpha in roots
    }
    partition = reachability_partition(roots, reach, f"¬J-connection on Λ^{side.value}")
    logger.debug("%d ¬J-classes on Λ^%s.", len(partition), side.value)
    return partition


def nj_class_of(decomposition: SplitDecomposition, js: JSplit, alpha: Root) -> tuple[Root, ...]:
    """``Λ_α^γ``: the roots of ``α``'s side that are ¬J-connected to ``α``."""
    side = _side_of(decomposition, js, alpha)
    return nj_classes(decomposition, js, side).class_of(alpha)
