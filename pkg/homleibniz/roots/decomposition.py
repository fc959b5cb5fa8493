"""Split root-space decompositions ``L = H ⊕ (⊕ L_α)`` and the twist action on roots."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from homleibniz.algebra.ideals import product
from homleibniz.algebra.identities import IdentityReport, failed, passed
from homleibniz.algebra.model import HomAlgebra
from homleibniz.errors import HomLeibnizError, InternalInconsistencyError
from homleibniz.linalg.eigen import simultaneous_eigenspaces
from homleibniz.linalg.matrix import Matrix, Vector, is_zero_vector, linear_combination, vector
from homleibniz.linalg.subspace import Subspace, kernel, solve_coordinates, sum_all

logger = logging.getLogger(__name__)

DEFAULT_SEPARATING_MAX_MULTIPLIER = 8


class DecompositionError(HomLeibnizError, ValueError):
    """Raised when a split decomposition cannot be formed for the given H."""


class NotAbelianError(DecompositionError):
    """Raised when ``[H, H] != 0``."""


class NotPhiStableError(DecompositionError):
    """Raised when ``phi(H) != H``."""


class NotSplitError(DecompositionError):
    """Raised when the rational root spaces do not exhaust L."""


class HNotMaximalError(DecompositionError):
    """Raised when ``L_0`` is strictly larger than H."""


class NotSeparableError(HomLeibnizError, ValueError):
    """Raised when no separating element can exist (``α = 0`` or ``α = β``)."""


class RootNotInLambdaError(HomLeibnizError, ValueError):
    """Raised when a functional is expected to be a root but is not."""


@dataclass(frozen=True, order=True)
class Root:
    """Values ``α(h_1), ..., α(h_r)`` of a functional on the chosen basis of H."""

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, *values: int | str | Fraction) -> Root:
        return cls(values=vector(values))

    @classmethod
    def zero(cls, rank: int) -> Root:
        return cls(values=(Fraction(0),) * rank)

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def __neg__(self) -> Root:
        return Root(values=tuple(-v for v in self.values))

    def __add__(self, other: Root) -> Root:
        return Root(values=tuple(a + b for a, b in zip(self.values, other.values, strict=True)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True, eq=False)
class SplitDecomposition:
    """A verified split decomposition of a regular Hom-Leibniz algebra."""

    algebra: HomAlgebra
    H: Subspace
    h_basis: tuple[Vector, ...]
    roots: tuple[Root, ...]
    root_spaces: Mapping[Root, Subspace] = field(repr=False)
    phi_h: Matrix

    @property
    def rank(self) -> int:
        return len(self.h_basis)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @property
    def zero_root(self) -> Root:
        return Root.zero(self.rank)

    def is_root(self, root: Root) -> bool:
        return root in self.root_set

    def space(self, root: Root) -> Subspace:
        """``L_α`` for a root, H for zero, and the zero subspace otherwise."""
        if root.is_zero:
            return self.H
        return self.root_spaces.get(root, Subspace.zero(self.algebra.dim))

    def index_of(self, root: Root) -> int:
        return self.roots.index(root)


def _h_coordinates(h_basis: Sequence[Vector], v: Sequence[Fraction]) -> Vector | None:
    return solve_coordinates(h_basis, v)


def decompose(algebra: HomAlgebra, h_basis: Sequence[Sequence[Fraction]]) -> SplitDecomposition:
    """
    Root-space decomposition of ``algebra`` relative to ``span(h_basis)``.

    Uses ``T_h = phi^-1 ∘ R_h`` with ``R_h(v) = [v, h]``: a vector lies in
    ``L_α`` exactly when ``T_h v = α(h) v`` for every ``h`` in H.

    :param algebra: A regular Hom-Leibniz algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param h_basis: Ordered basis of the abelian subalgebra H.
    :type h_basis: collections.abc.Sequence[collections.abc.Sequence[fractions.Fraction]]
    :return: The decomposition with roots sorted by value vector.
    :rtype: SplitDecomposition
    :raises DecompositionError: If the algebra is not regular Hom-Leibniz or the basis
        is dependent.
    :raises NotAbelianError: If ``[H, H] != 0``.
    :raises NotPhiStableError: If ``phi(H) != H``.
    :raises HNotMaximalError: If ``L_0`` strictly contains H.
    :raises NotSplitError: If the root spaces do not exhaust L.
    """
    n = algebra.dim
    basis = tuple(vector(h) for h in h_basis)
    if not algebra.hom_leibniz_ok:
        raise DecompositionError(f"{algebra.name} does not satisfy the Hom-Leibniz identity.")
    if not algebra.automorphism_ok:
        raise DecompositionError(f"The twist of {algebra.name} is not an automorphism.")
    H = Subspace.span(basis, n)
    if H.dim != len(basis):
        raise DecompositionError("The H basis is linearly dependent.")

    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            value = algebra.bracket(x, y)
            if not is_zero_vector(value):
                raise NotAbelianError(
                    f"H is not abelian: [h{i + 1}, h{j + 1}] = {algebra.describe(value)}",
                    witness=(i, j),
                )

    phi_columns = []
    for i, h in enumerate(basis):
        coordinates = _h_coordinates(basis, algebra.twist(h))
        if coordinates is None:
            raise NotPhiStableError(
                f"phi(H) ≠ H: phi(h{i + 1}) = {algebra.describe(algebra.twist(h))} is outside H",
                witness=algebra.twist(h),
            )
        phi_columns.append(coordinates)
    phi_h = Matrix.from_columns(phi_columns, len(basis))

    operators = [algebra.phi_inverse @ algebra.right_multiplication(h) for h in basis]
    pieces = simultaneous_eigenspaces(operators, n)

    zero_space = Subspace.zero(n)
    root_spaces: dict[Root, Subspace] = {}
    for values, piece in pieces:
        if not any(values):
            zero_space = piece
        else:
            root_spaces[Root(values=values)] = piece

    if zero_space != H:
        raise HNotMaximalError(
            f"HNotMaximal: L_0 = {algebra.describe_span(zero_space)} ⊋ H",
            witness=zero_space,
        )
    covered = sum_all(root_spaces.values(), n) + H
    if covered.dim != n:
        uncovered = covered.complement_from(algebra.basis_vector(i) for i in range(n))
        raise NotSplitError(
            f"NotSplit: the rational root spaces miss {algebra.describe_span(uncovered)}",
            witness=uncovered,
        )

    roots = tuple(sorted(root_spaces))
    logger.debug(
        "Decomposed %s: rank %d, %d roots.", algebra.name, len(basis), len(roots)
    )
    return SplitDecomposition(
        algebra=algebra,
        H=H,
        h_basis=basis,
        roots=roots,
        root_spaces=root_spaces,
        phi_h=phi_h,
    )


def root_phi_pow(decomposition: SplitDecomposition, root: Root, z: int) -> Root:
    """
    The functional ``α ∘ phi^{-z}``.

    :param decomposition: The decomposition.
    :type decomposition: SplitDecomposition
    :param root: A root or the zero functional.
    :type root: Root
    :param z: Integer exponent.
    :type z: int
    :return: The transformed functional, again a root or zero.
    :rtype: Root
    :raises RootNotInLambdaError: If ``root`` is neither zero nor a root.
    :raises InternalInconsistencyError: If the image leaves ``Λ ∪ {0}``.
    """
    if not root.is_zero and not decomposition.is_root(root):
        raise RootNotInLambdaError(f"{root} is not a root.", witness=root)
    if z == 0 or root.is_zero:
        return root
    transform = decomposition.phi_h.power(-z).transpose()
    image = Root(values=transform.apply(root.values))
    if not image.is_zero and not decomposition.is_root(image):
        raise InternalInconsistencyError(
            f"{root}∘phi^{-z} = {image} is not a root.", witness=image
        )
    return image


def root_orbit(decomposition: SplitDecomposition, root: Root) -> list[Root]:
    """The cycle ``[α, αφ^-1, αφ^-2, ...]`` through ``α``."""
    if not decomposition.is_root(root):
        raise RootNotInLambdaError(f"{root} is not a root.", witness=root)
    orbit = [root]
    current = root_phi_pow(decomposition, root, 1)
    while current != root:
        orbit.append(current)
        if len(orbit) > len(decomposition.roots):
            raise InternalInconsistencyError(f"The orbit of {root} does not close.")
        current = root_phi_pow(decomposition, current, 1)
    return orbit


def is_symmetric(decomposition: SplitDecomposition, roots: Iterable[Root] | None = None) -> bool:
    """True iff the root set (or a given subset) is closed under negation."""
    selected = set(decomposition.roots if roots is None else roots)
    return all(-root in selected for root in selected)


def h_coordinates(decomposition: SplitDecomposition, h: Sequence[Fraction]) -> Vector:
    coordinates = _h_coordinates(decomposition.h_basis, h)
    if coordinates is None:
        raise DecompositionError(f"{decomposition.algebra.describe(h)} is not in H.")
    return coordinates


def evaluate(decomposition: SplitDecomposition, root: Root, h: Sequence[Fraction]) -> Fraction:
    coordinates = h_coordinates(decomposition, h)
    return sum((a * c for a, c in zip(root.values, coordinates)), Fraction(0))


def find_separating_element(
    decomposition: SplitDecomposition,
    alpha: Root,
    beta: Root,
    max_multiplier: int = DEFAULT_SEPARATING_MAX_MULTIPLIER,
) -> Vector:
    """
    An ``h0`` in H with ``α(h0) != 0`` and ``α(h0) != β(h0)``.

    Tries the basis elements first, then ``h_i + t h_j`` for ``t = 1, ...,
    max_multiplier``. A separating element always exists, but only this
    bounded family is searched.

    :param decomposition: The decomposition.
    :type decomposition: SplitDecomposition
    :param alpha: Functional that must not vanish.
    :type alpha: Root
    :param beta: Functional that must differ from ``alpha`` at ``h0``.
    :type beta: Root
    :param max_multiplier: Largest ``t`` to try.
    :type max_multiplier: int
    :return: ``h0`` as a vector of L.
    :rtype: homleibniz.linalg.matrix.Vector
    :raises NotSeparableError: If ``alpha`` is zero or equals ``beta``.
    :raises InternalInconsistencyError: If the bounded search finds nothing.
    """
    if alpha.is_zero or alpha == beta:
        raise NotSeparableError(f"Cannot separate {alpha} from {beta}.")
    r = decomposition.rank
    n = decomposition.algebra.dim
    candidates: list[tuple[Fraction, ...]] = [
        tuple(Fraction(int(k == i)) for k in range(r)) for i in range(r)
    ]
    for t in range(1, max_multiplier + 1):
        for i in range(r):
            for j in range(r):
                if i != j:
                    candidates.append(
                        tuple(
                            Fraction(int(k == i)) + (t if k == j else 0) for k in range(r)
                        )
                    )
    for coordinates in candidates:
        a = sum((x * c for x, c in zip(alpha.values, coordinates)), Fraction(0))
        b = sum((x * c for x, c in zip(beta.values, coordinates)), Fraction(0))
        if a != 0 and a != b:
            return linear_combination(coordinates, decomposition.h_basis, n)
    raise InternalInconsistencyError(
        f"No separating element for {alpha}, {beta} among basis vectors and "
        f"h_i + t h_j with t <= {max_multiplier}; raise "
        "search.separating_max_multiplier to search further."
    )


def _containment(
    name: str,
    decomposition: SplitDecomposition,
    source: Subspace,
    target: Subspace,
    indices: tuple[int, ...],
) -> IdentityReport:
    for v in source.basis:
        residual = target.reduce(v)
        if not is_zero_vector(residual):
            return failed(
                name,
                indices,
                residual,
                f"{name} fails: {decomposition.algebra.describe(v)} is outside the target",
            )
    return passed(name)


def verify_split(decomposition: SplitDecomposition) -> list[IdentityReport]:
    """
    Check every twist and product containment between root spaces.

    For ``α, β`` in ``Λ ∪ {0}``: ``phi(L_α) ⊆ L_{αφ^-1}`` and
    ``[L_α, L_β] ⊆ L_{αφ^-1 + βφ^-1}`` (target 0 when the sum is not a root).
    Also re-checks ``L_0 = H`` and that ``α -> αφ^-1`` permutes ``Λ``.

    :param decomposition: The decomposition.
    :type decomposition: SplitDecomposition
    :return: One report per containment, followed by the ``L_0`` and permutation reports.
    :rtype: list[homleibniz.algebra.identities.IdentityReport]
    """
    algebra = decomposition.algebra
    n = algebra.dim
    indexed = [decomposition.zero_root, *decomposition.roots]
    shifted = {root: root_phi_pow(decomposition, root, 1) for root in indexed}
    reports: list[IdentityReport] = []

    for position, root in enumerate(indexed):
        image = Subspace.span((algebra.twist(v) for v in decomposition.space(root).basis), n)
        reports.append(
            _containment(
                f"phi(L_{root}) ⊆ L_{shifted[root]}",
                decomposition,
                image,
                decomposition.space(shifted[root]),
                (position,),
            )
        )

    for p, alpha in enumerate(indexed):
        for q, beta in enumerate(indexed):
            target_root = shifted[alpha] + shifted[beta]
            target = decomposition.space(target_root)
            products = product(algebra, decomposition.space(alpha), decomposition.space(beta))
            reports.append(
                _containment(
                    f"[L_{alpha}, L_{beta}] ⊆ L_{target_root}",
                    decomposition,
                    products,
                    target,
                    (p, q),
                )
            )

    zero_space = Subspace.full(n)
    for h in decomposition.h_basis:
        operator = algebra.phi_inverse @ algebra.right_multiplication(h)
        zero_space = zero_space.intersect(kernel(operator))
    if zero_space == decomposition.H:
        reports.append(passed("L_0 = H"))
    else:
        extra = decomposition.H.complement_from(zero_space.basis)
        reports.append(
            failed("L_0 = H", (), extra.basis[0], f"L_0 = {algebra.describe_span(zero_space)}")
        )

    images = {shifted[root] for root in decomposition.roots}
    missing = [root for root in decomposition.roots if root not in images]
    if not missing:
        reports.append(passed("root permutation", "α -> αφ^-1 permutes Λ"))
    else:
        reports.append(
            failed(
                "root permutation",
                (decomposition.index_of(missing[0]),),
                missing[0].values,
                f"{missing[0]} is not of the form αφ^-1",
            )
        )
    return reports
