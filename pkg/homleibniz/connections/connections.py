"""Connections of roots, their certificates, and the induced partition of Λ."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from homleibniz.errors import HomLeibnizError, InternalInconsistencyError
from homleibniz.roots.decomposition import (
    Root,
    RootNotInLambdaError,
    SplitDecomposition,
    is_symmetric,
    root_orbit,
    root_phi_pow,
)

logger = logging.getLogger(__name__)


class HypothesisMissingError(HomLeibnizError, ValueError):
    """Raised when a construction needs a hypothesis the algebra does not satisfy.

    :param hypothesis: Name of the missing hypothesis.
    :type hypothesis: str
    """

    def __init__(self, hypothesis: str, message: str | None = None) -> None:
        super().__init__(message or f"Hypothesis not satisfied: {hypothesis}.", witness=hypothesis)
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class Connection:
    """
    A certificate that ``α`` is connected to ``β``.

    ``chain[0] = α∘phi^-start_shift`` and
    ``partial_sums[-1] = end_sign * β∘phi^-end_shift``.
    """

    chain: tuple[Root, ...]
    partial_sums: tuple[Root, ...]
    start_shift: int
    end_shift: int
    end_sign: int

    @property
    def length(self) -> int:
        return len(self.chain)


@dataclass(frozen=True)
class RootPartition:
    """Disjoint root classes ordered by their smallest root."""

    classes: tuple[tuple[Root, ...], ...]

    def class_of(self, root: Root) -> tuple[Root, ...]:
        for cls in self.classes:
            if root in cls:
                return cls
        raise RootNotInLambdaError(f"{root} is not in any class.", witness=root)

    def __len__(self) -> int:
        return len(self.classes)


def partial_sums(decomposition: SplitDecomposition, chain: Sequence[Root]) -> tuple[Root, ...]:
    """``σ_1 = α_1`` and ``σ_{i+1} = σ_i∘phi^-1 + α_{i+1}∘phi^-1``."""
    sums: list[Root] = []
    for index, link in enumerate(chain):
        if index == 0:
            sums.append(link)
        else:
            sums.append(
                root_phi_pow(decomposition, sums[-1], 1) + root_phi_pow(decomposition, link, 1)
            )
    return tuple(sums)


def _targets(decomposition: SplitDecomposition, beta: Root) -> dict[Root, tuple[int, int]]:
    targets: dict[Root, tuple[int, int]] = {}
    orbit = root_orbit(decomposition, beta)
    for m, root in enumerate(orbit):
        targets.setdefault(root, (m, 1))
    for m, root in enumerate(orbit):
        targets.setdefault(-root, (m, -1))
    return targets


def search_connection(
    decomposition: SplitDecomposition,
    alpha: Root,
    beta: Root,
    links: Sequence[Root],
    allowed: Collection[Root] | None = None,
) -> Connection | None:
    """
    Breadth-first search for a shortest connection.

    States are partial sums. A start state is ``α∘phi^-n``; a successor of
    ``σ`` is ``σ∘phi^-1 + γ∘phi^-1`` for ``γ`` in ``links`` (sorted). A state
    is accepting when it lies in ``±orbit(β)``; non-accepting successors are
    kept only inside Λ (and inside ``allowed`` when given).

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param alpha: Source root.
    :type alpha: homleibniz.roots.decomposition.Root
    :param beta: Target root.
    :type beta: homleibniz.roots.decomposition.Root
    :param links: Roots usable as ``α_2, ..., α_k``.
    :type links: collections.abc.Sequence[homleibniz.roots.decomposition.Root]
    :param allowed: Optional set every partial sum must belong to.
    :type allowed: collections.abc.Collection[homleibniz.roots.decomposition.Root] | None
    :return: A shortest certificate, or ``None``.
    :rtype: Connection | None
    """
    targets = _targets(decomposition, beta)

    def admissible(root: Root) -> bool:
        return decomposition.is_root(root) and (allowed is None or root in allowed)

    def accepting(root: Root) -> bool:
        return root in targets and (allowed is None or root in allowed)

    def finish(path: tuple[Root, ...], sums: tuple[Root, ...], n: int) -> Connection:
        m, sign = targets[sums[-1]]
        return Connection(
            chain=path, partial_sums=sums, start_shift=n, end_shift=m, end_sign=sign
        )

    queue: deque[tuple[tuple[Root, ...], tuple[Root, ...], int]] = deque()
    visited: set[Root] = set()
    for n, start in enumerate(root_orbit(decomposition, alpha)):
        if not admissible(start):
            continue
        if accepting(start):
            return finish((start,), (start,), n)
        if start not in visited:
            visited.add(start)
            queue.append(((start,), (start,), n))

    ordered_links = sorted(links)
    while queue:
        path, sums, n = queue.popleft()
        shifted = root_phi_pow(decomposition, sums[-1], 1)
        for link in ordered_links:
            candidate = shifted + root_phi_pow(decomposition, link, 1)
            if accepting(candidate):
                return finish(path + (link,), sums + (candidate,), n)
            if admissible(candidate) and candidate not in visited:
                visited.add(candidate)
                queue.append((path + (link,), sums + (candidate,), n))
    logger.debug(
        "No connection from %s to %s after visiting %d states.", alpha, beta, len(visited)
    )
    return None


def _require_root(decomposition: SplitDecomposition, *roots: Root) -> None:
    for root in roots:
        if not decomposition.is_root(root):
            raise RootNotInLambdaError(f"{root} is not a root.", witness=root)


def connected(decomposition: SplitDecomposition, alpha: Root, beta: Root) -> Connection | None:
    """
    A shortest connection from ``α`` to ``β``, or ``None``.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param alpha: Source root.
    :type alpha: homleibniz.roots.decomposition.Root
    :param beta: Target root.
    :type beta: homleibniz.roots.decomposition.Root
    :return: Certificate or ``None``.
    :rtype: Connection | None
    :raises RootNotInLambdaError: If either argument is not a root.
    """
    _require_root(decomposition, alpha, beta)
    return search_connection(decomposition, alpha, beta, decomposition.roots)


def verify_connection(
    decomposition: SplitDecomposition,
    alpha: Root,
    beta: Root,
    connection: Connection,
    links: Iterable[Root] | None = None,
    allowed: Collection[Root] | None = None,
) -> bool:
    """
    Replay every condition of a connection certificate from scratch.

    With ``links``/``allowed`` it also checks the link and partial-sum filters
    of a non-J connection.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param alpha: Claimed source.
    :type alpha: homleibniz.roots.decomposition.Root
    :param beta: Claimed target.
    :type beta: homleibniz.roots.decomposition.Root
    :param connection: Certificate to check.
    :type connection: Connection
    :param links: Optional set the roots ``α_2, ..., α_k`` must come from.
    :type links: collections.abc.Iterable[homleibniz.roots.decomposition.Root] | None
    :param allowed: Optional set every partial sum must belong to.
    :type allowed: collections.abc.Collection[homleibniz.roots.decomposition.Root] | None
    :return: Whether the certificate is valid.
    :rtype: bool
    """
    chain = connection.chain
    if not chain or len(connection.partial_sums) != len(chain):
        return False
    if not (decomposition.is_root(alpha) and decomposition.is_root(beta)):
        return False
    if connection.start_shift < 0 or connection.end_shift < 0:
        return False
    if connection.end_sign not in (1, -1):
        return False
    if not all(decomposition.is_root(link) for link in chain):
        return False
    if links is not None:
        link_set = set(links)
        if not all(link in link_set for link in chain[1:]):
            return False
    if chain[0] != root_phi_pow(decomposition, alpha, connection.start_shift):
        return False
    if partial_sums(decomposition, chain) != connection.partial_sums:
        return False
    if not all(decomposition.is_root(s) for s in connection.partial_sums[:-1]):
        return False
    if allowed is not None and not all(s in allowed for s in connection.partial_sums):
        return False
    end = root_phi_pow(decomposition, beta, connection.end_shift)
    expected = end if connection.end_sign == 1 else -end
    return connection.partial_sums[-1] == expected


def shift_connection(
    decomposition: SplitDecomposition, connection: Connection, steps: int
) -> Connection:
    """
    Compose every root of a certificate with ``phi^-steps``.

    The result connects the same pair, starting at ``α∘phi^-(n + steps)``
    and ending at ``±β∘phi^-(m + steps)``.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative.")
    chain = tuple(root_phi_pow(decomposition, link, steps) for link in connection.chain)
    return Connection(
        chain=chain,
        partial_sums=partial_sums(decomposition, chain),
        start_shift=connection.start_shift + steps,
        end_shift=connection.end_shift + steps,
        end_sign=connection.end_sign,
    )


def reachability_partition(
    roots: Sequence[Root], reach: dict[Root, set[Root]], relation: str
) -> RootPartition:
    """
    Turn a reachability table into a partition, asserting it is an equivalence.

    :raises InternalInconsistencyError: If the table is not reflexive, symmetric and transitive.
    """
    for alpha in roots:
        if alpha not in reach[alpha]:
            raise InternalInconsistencyError(f"{relation} is not reflexive at {alpha}.")
        for beta in reach[alpha]:
            if alpha not in reach[beta]:
                raise InternalInconsistencyError(
                    f"{relation} is not symmetric: {alpha} reaches {beta} but not conversely."
                )
            if not reach[beta] <= reach[alpha]:
                raise InternalInconsistencyError(f"{relation} is not transitive through {beta}.")
    classes: list[tuple[Root, ...]] = []
    seen: set[Root] = set()
    for alpha in sorted(roots):
        if alpha in seen:
            continue
        members = tuple(sorted(reach[alpha]))
        seen.update(members)
        classes.append(members)
    return RootPartition(classes=tuple(classes))


def connection_table(decomposition: SplitDecomposition) -> dict[tuple[Root, Root], Connection]:
    """Certificates for every connected ordered pair of roots."""
    table: dict[tuple[Root, Root], Connection] = {}
    for alpha in decomposition.roots:
        for beta in decomposition.roots:
            certificate = connected(decomposition, alpha, beta)
            if certificate is not None:
                table[(alpha, beta)] = certificate
    return table


def connection_classes(decomposition: SplitDecomposition) -> RootPartition:
    """
    Partition Λ into connection classes.

    :param decomposition: Decomposition with a symmetric root system.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :return: The classes, each sorted, ordered by smallest root.
    :rtype: RootPartition
    :raises HypothesisMissingError: If Λ is not symmetric.
    """
    if not is_symmetric(decomposition):
        raise HypothesisMissingError("Λ symmetric")
    table = connection_table(decomposition)
    reach = {
        alpha: {beta for beta in decomposition.roots if (alpha, beta) in table}
        for alpha in decomposition.roots
    }
    partition = reachability_partition(decomposition.roots, reach, "connection")
    logger.debug("%d connection classes.", len(partition))
    return partition
