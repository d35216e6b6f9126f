"""Exact arithmetic for finite groups, homomorphisms, actions and crossed modules.

Elements are dense integer indices 0..n-1 and every operation is a table
lookup, so all computation is exact.  Constructors re-check their axioms
eagerly: downstream enumeration assumes validity, and failing fast keeps
the witness of a broken axiom close to its source.

Group equality is table identity.  Isomorphism testing exists only as a
brute-force utility for small orders; classification results elsewhere in
the package are reported as cardinalities and canonical encodings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import (
    EquivarianceFailure,
    KernelNotCentral,
    NoIdentity,
    NoInverse,
    NotAssociative,
    PeifferFailure,
    TooLarge,
)

AUT_SEARCH_BOUND = 24  # largest |H| for which automorphism enumeration runs


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on indices 0..order-1 given by its multiplication table."""

    order: int
    mul_table: tuple[tuple[int, ...], ...]
    identity: int
    inv_table: tuple[int, ...]
    name: str = "group"

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.order)

    def mul_many(self, *elts: int) -> int:
        acc = self.identity
        for x in elts:
            acc = self.mul_table[acc][x]
        return acc

    def conj(self, g: int, h: int) -> int:
        """g * h * g^-1."""
        return self.mul_table[self.mul_table[g][h]][self.inv_table[g]]

    def is_abelian(self) -> bool:
        t = self.mul_table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.mul_table[x][a]
            n += 1
        return n


def validate_group(order: int, mul_table: Sequence[Sequence[int]],
                   name: str = "group") -> FiniteGroup:
    """Check the group axioms on a raw table; derive identity and inverses."""
    if order <= 0:
        raise ValueError("order must be positive")
    if len(mul_table) != order or any(len(row) != order for row in mul_table):
        raise ValueError(f"multiplication table must be {order}x{order}")
    table = tuple(tuple(row) for row in mul_table)
    for row in table:
        for v in row:
            if not (0 <= v < order):
                raise ValueError(f"table entry {v} out of range")

    for a in range(order):
        ta = table[a]
        for b in range(order):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(order):
                if tab[c] != ta[tb[c]]:
                    raise NotAssociative(a, b, c)

    identity = None
    for e in range(order):
        if all(table[e][a] == a and table[a][e] == a for a in range(order)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    inv = [None] * order
    for a in range(order):
        for b in range(order):
            if table[a][b] == identity and table[b][a] == identity:
                inv[a] = b
                break
        if inv[a] is None:
            raise NoInverse(a)

    return FiniteGroup(order, table, identity, tuple(inv), name)


def group_from_operation(items: Sequence[Hashable], op: Callable,
                         name: str = "group") -> tuple[FiniteGroup, list]:
    """Build a validated group from a closed binary operation on hashable items.

    Returns the group together with the item list in index order.
    """
    items = list(items)
    index = {x: i for i, x in enumerate(items)}
    if len(index) != len(items):
        raise ValueError("duplicate items")
    table = []
    for a in items:
        row = []
        for b in items:
            c = op(a, b)
            if c not in index:
                raise ValueError(f"operation not closed at ({a!r}, {b!r})")
            row.append(index[c])
        table.append(row)
    return validate_group(len(items), table, name), items


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return validate_group(n, table, f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutation tuples; (p*q)(i) = p(q(i))."""
    perms = sorted(itertools.permutations(range(n)))
    grp, _ = group_from_operation(
        perms, lambda p, q: tuple(p[q[i]] for i in range(n)), f"S{n}")
    return grp


def trivial_group() -> FiniteGroup:
    return validate_group(1, [[0]], "1")


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between finite groups, stored as an image table."""

    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order

    def kernel_indices(self) -> list[int]:
        e = self.target.identity
        return [a for a in self.source.elements() if self.image[a] == e]

    def image_indices(self) -> list[int]:
        return sorted(set(self.image))


def validate_hom(source: FiniteGroup, target: FiniteGroup,
                 image: Sequence[int]) -> GroupHom:
    image = tuple(image)
    if len(image) != source.order:
        raise ValueError("image table has wrong length")
    for v in image:
        if not (0 <= v < target.order):
            raise ValueError(f"image entry {v} out of range")
    if image[source.identity] != target.identity:
        raise ValueError("identity is not preserved")
    for a in source.elements():
        for b in source.elements():
            if image[source.mul(a, b)] != target.mul(image[a], image[b]):
                raise ValueError(f"not a homomorphism at ({a}, {b})")
    return GroupHom(source, target, image)


@dataclass(frozen=True)
class GroupAction:
    """An action of `actor` on the group `space` by automorphisms."""

    actor: FiniteGroup
    space: FiniteGroup
    table: tuple[tuple[int, ...], ...]

    def act(self, g: int, h: int) -> int:
        return self.table[g][h]

    def is_faithful(self) -> bool:
        return len(set(self.table)) == self.actor.order


def validate_action(actor: FiniteGroup, space: FiniteGroup,
                    table: Sequence[Sequence[int]]) -> GroupAction:
    table = tuple(tuple(row) for row in table)
    if len(table) != actor.order or any(len(r) != space.order for r in table):
        raise ValueError("action table has wrong shape")
    ident = tuple(range(space.order))
    if table[actor.identity] != ident:
        raise ValueError("identity does not act trivially")
    for g in actor.elements():
        row = table[g]
        if sorted(row) != list(ident):
            raise ValueError(f"element {g} does not act bijectively")
        for h in space.elements():
            for h2 in space.elements():
                if row[space.mul(h, h2)] != space.mul(row[h], row[h2]):
                    raise ValueError(f"element {g} does not act by automorphisms")
    for g1 in actor.elements():
        for g2 in actor.elements():
            g12 = actor.mul(g1, g2)
            for h in space.elements():
                if table[g1][table[g2][h]] != table[g12][h]:
                    raise ValueError(f"action is not associative at ({g1}, {g2}, {h})")
    return GroupAction(actor, space, table)


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    row = tuple(range(space.order))
    return GroupAction(actor, space, tuple(row for _ in range(actor.order)))


def conjugation_action(grp: FiniteGroup) -> GroupAction:
    table = tuple(tuple(grp.conj(g, h) for h in grp.elements()) for g in grp.elements())
    return GroupAction(grp, grp, table)


@dataclass(frozen=True)
class CrossedModule:
    """Two groups G, H with a homomorphism beta: H -> G and an action alpha of G on H.

    Validated against equivariance  beta(alpha(g).h) = g beta(h) g^-1  and the
    Peiffer identity  alpha(beta(h)).h' = h h' h^-1;  beta(H) normal in G is
    asserted directly as well.
    """

    G: FiniteGroup
    H: FiniteGroup
    beta: GroupHom
    alpha: GroupAction

    def act(self, g: int, h: int) -> int:
        return self.alpha.table[g][h]

    def beta_of(self, h: int) -> int:
        return self.beta.image[h]


def validate_crossed_module(G: FiniteGroup, H: FiniteGroup, beta: GroupHom,
                            alpha: GroupAction) -> CrossedModule:
    if beta.source is not H or beta.target is not G:
        raise ValueError("beta must map H to G")
    if alpha.actor is not G or alpha.space is not H:
        raise ValueError("alpha must be an action of G on H")
    for g in G.elements():
        for h in H.elements():
            if beta.image[alpha.table[g][h]] != G.conj(g, beta.image[h]):
                raise EquivarianceFailure(g, h)
    for h in H.elements():
        bh = beta.image[h]
        for h2 in H.elements():
            if alpha.table[bh][h2] != H.conj(h, h2):
                raise PeifferFailure(h, h2)
    img = set(beta.image)
    for g in G.elements():
        for b in img:
            if G.conj(g, b) not in img:
                raise ValueError(f"beta(H) is not normal: conjugate of {b} by {g} escapes")
    return CrossedModule(G, H, beta, alpha)


def crossed_module(G: FiniteGroup, H: FiniteGroup, beta_image: Sequence[int],
                   alpha_table: Sequence[Sequence[int]]) -> CrossedModule:
    """Validate all components and assemble a crossed module."""
    return validate_crossed_module(
        G, H, validate_hom(H, G, beta_image), validate_action(G, H, alpha_table))


def semidirect_product(cm: CrossedModule) -> FiniteGroup:
    """The group on pairs (h, g) with (h,g)*(h',g') = (h * (g.h'), g*g')."""
    H, G = cm.H, cm.G
    pairs = [(h, g) for h in H.elements() for g in G.elements()]

    def op(a, b):
        (h, g), (h2, g2) = a, b
        return (H.mul(h, cm.act(g, h2)), G.mul(g, g2))

    grp, _ = group_from_operation(pairs, op, f"{H.name}x{G.name}")
    return grp


@dataclass(frozen=True)
class Strict2Group:
    """The one-object 2-group of a crossed module: objects G, morphisms H x G.

    The morphism (h, g) runs from g to beta(h)*g.  Vertical composition is
    (h', beta(h)g) o (h, g) = (h'h, g); the tensor (horizontal) product is
    (h, g) * (hb, gb) = (h * (g.hb), g*gb).
    """

    cm: CrossedModule

    # -- encoding ---------------------------------------------------------

    def morphisms(self) -> range:
        return range(self.cm.H.order * self.cm.G.order)

    def objects(self) -> range:
        return range(self.cm.G.order)

    def encode(self, h: int, g: int) -> int:
        return h * self.cm.G.order + g

    def decode(self, m: int) -> tuple[int, int]:
        return divmod(m, self.cm.G.order)

    # -- structure maps ------------------------------------------------------

    def source(self, m: int) -> int:
        return m % self.cm.G.order

    def target(self, m: int) -> int:
        h, g = self.decode(m)
        return self.cm.G.mul(self.cm.beta_of(h), g)

    def identity(self, g: int) -> int:
        return self.encode(self.cm.H.identity, g)

    def compose(self, m2: int, m1: int) -> int:
        """m2 o m1, defined when source(m2) == target(m1)."""
        h2, _ = self.decode(m2)
        h1, g1 = self.decode(m1)
        return self.encode(self.cm.H.mul(h2, h1), g1)

    def vertical_inverse(self, m: int) -> int:
        h, g = self.decode(m)
        return self.encode(self.cm.H.inv(h), self.target(m))

    def tensor(self, m: int, mb: int) -> int:
        h, g = self.decode(m)
        hb, gb = self.decode(mb)
        return self.encode(self.cm.H.mul(h, self.cm.act(g, hb)), self.cm.G.mul(g, gb))

    def tensor_inverse(self, m: int) -> int:
        h, g = self.decode(m)
        gi = self.cm.G.inv(g)
        return self.encode(self.cm.act(gi, self.cm.H.inv(h)), gi)


def two_group_from_crossed_module(cm: CrossedModule) -> Strict2Group:
    """Build the strict 2-group and verify category axioms and interchange."""
    tg = Strict2Group(cm)
    G, H = cm.G, cm.H
    for m in tg.morphisms():
        h, g = tg.decode(m)
        assert tg.source(m) == g
        assert tg.target(m) == G.mul(cm.beta_of(h), g)
    composable = [(m2, m1) for m1 in tg.morphisms() for m2 in tg.morphisms()
                  if tg.source(m2) == tg.target(m1)]
    assert len(composable) == H.order * H.order * G.order
    for m2, m1 in composable:
        c = tg.compose(m2, m1)
        assert tg.source(c) == tg.source(m1) and tg.target(c) == tg.target(m2)
    for g in tg.objects():
        e = tg.identity(g)
        for m in tg.morphisms():
            if tg.source(m) == g:
                assert tg.compose(m, e) == m
            if tg.target(m) == g:
                assert tg.compose(e, m) == m
    for m in tg.morphisms():
        vi = tg.vertical_inverse(m)
        assert tg.compose(vi, m) == tg.identity(tg.source(m))
        assert tg.compose(m, vi) == tg.identity(tg.target(m))
    for m3 in tg.morphisms():
        for m2 in tg.morphisms():
            if tg.source(m3) != tg.target(m2):
                continue
            for m1 in tg.morphisms():
                if tg.source(m2) != tg.target(m1):
                    continue
                assert tg.compose(tg.compose(m3, m2), m1) == \
                    tg.compose(m3, tg.compose(m2, m1))
    # interchange: (f1 o f2) * (f3 o f4) = (f1 * f3) o (f2 * f4)
    for f1, f2 in composable:
        for f3, f4 in composable:
            lhs = tg.tensor(tg.compose(f1, f2), tg.compose(f3, f4))
            rhs = tg.compose(tg.tensor(f1, f3), tg.tensor(f2, f4))
            assert lhs == rhs, "interchange law fails"
    return tg


# -- automorphisms, kernels, quotients ----------------------------------------

def _bijective_homs(src: FiniteGroup, dst: FiniteGroup) -> list[tuple[int, ...]]:
    """All group isomorphisms src -> dst as image tuples, by pruned search.

    Assigns images element by element, propagating products of already
    assigned elements and pruning on element order.
    """
    if src.order != dst.order:
        return []
    n = src.order
    src_orders = [src.element_order(a) for a in range(n)]
    dst_orders = [dst.element_order(a) for a in range(n)]
    found: list[tuple[int, ...]] = []

    def close(img: list[int], used: set[int]) -> bool:
        # propagate img over all products with both factors assigned
        changed = True
        while changed:
            changed = False
            assigned = [a for a in range(n) if img[a] is not None]
            for a in assigned:
                for b in assigned:
                    ab = src.mul(a, b)
                    v = dst.mul(img[a], img[b])
                    if img[ab] is None:
                        if v in used:
                            return False
                        img[ab] = v
                        used.add(v)
                        changed = True
                    elif img[ab] != v:
                        return False
        return True

    def extend(img: list[int], used: set[int]):
        try:
            a = img.index(None)
        except ValueError:
            found.append(tuple(img))
            return
        for v in range(n):
            if v in used or dst_orders[v] != src_orders[a]:
                continue
            img2 = list(img)
            used2 = set(used)
            img2[a] = v
            used2.add(v)
            if close(img2, used2):
                extend(img2, used2)

    start = [None] * n
    start[src.identity] = dst.identity
    extend(start, {dst.identity})
    return sorted(found)


def automorphism_group(H: FiniteGroup) -> tuple[FiniteGroup, GroupAction]:
    """Aut(H) as an abstract group with its tautological action on H.

    Exhaustive (pruned) search; refuses orders above AUT_SEARCH_BOUND.
    """
    if H.order > AUT_SEARCH_BOUND:
        raise TooLarge(H.order, AUT_SEARCH_BOUND)
    perms = _bijective_homs(H, H)
    grp, items = group_from_operation(
        perms, lambda p, q: tuple(p[q[i]] for i in range(H.order)), f"Aut({H.name})")
    action = GroupAction(grp, H, tuple(items))
    assert action.is_faithful()
    return grp, action


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup) -> tuple[int, ...] | None:
    """Brute-force isomorphism search for small orders; None if none exists."""
    if max(G1.order, G2.order) > AUT_SEARCH_BOUND:
        raise TooLarge(max(G1.order, G2.order), AUT_SEARCH_BOUND)
    isos = _bijective_homs(G1, G2)
    return isos[0] if isos else None


def kernel_of_beta(cm: CrossedModule) -> tuple[FiniteGroup, list[int]]:
    """The kernel A = ker(beta) as a group, with its inclusion into H.

    When beta is surjective, centrality of A in H is checked rather than
    assumed.
    """
    H = cm.H
    members = cm.beta.kernel_indices()
    grp, items = group_from_operation(
        members, lambda a, b: H.mul(a, b), f"ker(beta<{H.name}>)")
    if cm.beta.is_surjective():
        for a in members:
            for h in H.elements():
                if H.mul(a, h) != H.mul(h, a):
                    raise KernelNotCentral(a, h)
    return grp, items


def quotient_by_image(cm: CrossedModule) -> tuple[FiniteGroup, GroupHom]:
    """K = G / beta(H) with the canonical projection (beta(H) is normal)."""
    G = cm.G
    img = set(cm.beta.image)
    rep = {}
    for g in G.elements():
        coset = min(G.mul(b, g) for b in img)
        rep[g] = coset
    reps = sorted(set(rep.values()))
    grp, items = group_from_operation(
        reps, lambda a, b: rep[G.mul(a, b)], f"{G.name}/beta")
    idx = {r: i for i, r in enumerate(items)}
    proj = GroupHom(G, grp, tuple(idx[rep[g]] for g in G.elements()))
    assert grp.order * len(img) == G.order
    return grp, proj


def power_group(H: FiniteGroup, n: int, name: str | None = None) -> tuple[FiniteGroup, list]:
    """Direct power H^n on index tuples with pointwise multiplication."""
    tuples = list(itertools.product(H.elements(), repeat=n))
    grp, items = group_from_operation(
        tuples, lambda a, b: tuple(H.mul(x, y) for x, y in zip(a, b)),
        name or f"{H.name}^{n}")
    return grp, items
