"""Nonabelian Cech cocycles with crossed-module coefficients, and their classification.

A cocycle over a complex K assigns g_ij in G to every valid ordered pair and
h_ijk in H to every valid ordered triple, subject to

    beta(h_ijk) * g_ij * g_jk = g_ik                  (pair/triple identity)
    h_ikl * h_ijk = h_ijl * (g_ij . h_jkl)            (quadruple identity)

with the normalization g_ii = e and h_ijk = e whenever the first two or the
last two indices coincide.  Note that g_ji is stored independently of g_ij:
the normalization does not force g_ij * g_ji = e, only that the product lies
in beta(H).  A coboundary (gamma_i, eta_ij) acts by

    g'_ij  = gamma_i^-1 * beta(eta_ij) * g_ij * gamma_j
    h'_ijk = gamma_i^-1 . ( eta_ik * h_ijk * (g_ij . eta_jk)^-1 * eta_ij^-1 )

and cohomology classes are the orbits of this action (over a fixed complex;
refinements of the cover are out of scope).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import CrossedModule
from .complexes import SimplicialComplex, is_degenerate, valid_tuples
from .errors import (
    Cocyc1Failure,
    Cocyc2Failure,
    MissingEntry,
    NormalizationFailure,
    ResultNotCocycle,
    SearchSpaceTooLarge,
    StrategyMismatch,
)

DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class Cocycle:
    complex: SimplicialComplex
    cm: CrossedModule
    g: dict
    h: dict

    def key(self) -> tuple:
        """Canonical encoding: values in the fixed lexicographic tuple order."""
        gs = tuple(self.g[p] for p in valid_tuples(self.complex, 2))
        hs = tuple(self.h[t] for t in valid_tuples(self.complex, 3))
        return gs + hs

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cocycle) and self.complex == other.complex
                and self.cm == other.cm and self.g == other.g and self.h == other.h)


@dataclass(frozen=True)
class Coboundary:
    complex: SimplicialComplex
    cm: CrossedModule
    gamma: dict
    eta: dict

    def key(self) -> tuple:
        gs = tuple(self.gamma[v] for v in range(self.complex.vertex_count))
        es = tuple(self.eta[p] for p in valid_tuples(self.complex, 2))
        return gs + es

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coboundary) and self.complex == other.complex
                and self.cm == other.cm and self.gamma == other.gamma
                and self.eta == other.eta)


def coboundary(K: SimplicialComplex, cm: CrossedModule, gamma: dict,
               eta: dict) -> Coboundary:
    """Well-formedness: total gamma, total eta on valid pairs, eta_ii = e."""
    eH = cm.H.identity
    full_eta = {}
    for p in valid_tuples(K, 2):
        if p[0] == p[1]:
            if eta.get(p, eH) != eH:
                raise NormalizationFailure(p)
            full_eta[p] = eH
        else:
            if p not in eta:
                raise MissingEntry(p)
            full_eta[p] = eta[p]
    full_gamma = {}
    for v in range(K.vertex_count):
        if v not in gamma:
            raise MissingEntry((v,))
        full_gamma[v] = gamma[v]
    return Coboundary(K, cm, full_gamma, full_eta)


def identity_coboundary(K: SimplicialComplex, cm: CrossedModule) -> Coboundary:
    return coboundary(K, cm, {v: cm.G.identity for v in range(K.vertex_count)},
                      {p: cm.H.identity for p in valid_tuples(K, 2)})


def validate_cocycle(z: Cocycle) -> Cocycle:
    """Exhaustive check of totality, normalization and both cocycle identities.

    Diagnostics name the first failing tuple in lexicographic order.
    """
    K, cm = z.complex, z.cm
    G, H = cm.G, cm.H
    pairs = valid_tuples(K, 2)
    triples = valid_tuples(K, 3)
    quads = valid_tuples(K, 4)
    for p in pairs:
        if p not in z.g:
            raise MissingEntry(p)
        if not (0 <= z.g[p] < G.order):
            raise ValueError(f"g{p} out of range")
    for t in triples:
        if t not in z.h:
            raise MissingEntry(t)
        if not (0 <= z.h[t] < H.order):
            raise ValueError(f"h{t} out of range")
    for p in pairs:
        if p[0] == p[1] and z.g[p] != G.identity:
            raise NormalizationFailure(p)
    for t in triples:
        if (t[0] == t[1] or t[1] == t[2]) and z.h[t] != H.identity:
            raise NormalizationFailure(t)
    for (i, j, k) in triples:
        lhs = G.mul_many(cm.beta_of(z.h[(i, j, k)]), z.g[(i, j)], z.g[(j, k)])
        if lhs != z.g[(i, k)]:
            raise Cocyc1Failure(i, j, k)
    for (i, j, k, l) in quads:
        lhs = H.mul(z.h[(i, k, l)], z.h[(i, j, k)])
        rhs = H.mul(z.h[(i, j, l)], cm.act(z.g[(i, j)], z.h[(j, k, l)]))
        if lhs != rhs:
            raise Cocyc2Failure(i, j, k, l)
    return z


def cocycle(K: SimplicialComplex, cm: CrossedModule, g: dict, h: dict) -> Cocycle:
    """Fill omitted entries with identities, then validate."""
    eG, eH = cm.G.identity, cm.H.identity
    gg = dict(g)
    hh = dict(h)
    for p in valid_tuples(K, 2):
        gg.setdefault(p, eG)
    for t in valid_tuples(K, 3):
        hh.setdefault(t, eH)
    return validate_cocycle(Cocycle(K, cm, gg, hh))


def trivial_cocycle(K: SimplicialComplex, cm: CrossedModule) -> Cocycle:
    g = {p: cm.G.identity for p in valid_tuples(K, 2)}
    h = {t: cm.H.identity for t in valid_tuples(K, 3)}
    return validate_cocycle(Cocycle(K, cm, g, h))


def apply_coboundary(z: Cocycle, c: Coboundary) -> Cocycle:
    """Act on a cocycle; the result is re-validated before being returned."""
    K, cm = z.complex, z.cm
    if c.complex != K or c.cm != cm:
        raise ValueError("coboundary lives over a different complex or crossed module")
    G, H = cm.G, cm.H
    g2 = {}
    for (i, j) in valid_tuples(K, 2):
        g2[(i, j)] = G.mul_many(G.inv(c.gamma[i]), cm.beta_of(c.eta[(i, j)]),
                                z.g[(i, j)], c.gamma[j])
    h2 = {}
    for (i, j, k) in valid_tuples(K, 3):
        inner = H.mul_many(
            c.eta[(i, k)],
            z.h[(i, j, k)],
            H.inv(cm.act(z.g[(i, j)], c.eta[(j, k)])),
            H.inv(c.eta[(i, j)]),
        )
        h2[(i, j, k)] = cm.act(G.inv(c.gamma[i]), inner)
    try:
        return validate_cocycle(Cocycle(K, cm, g2, h2))
    except Exception as exc:  # indicates an implementation fault; never silent
        raise ResultNotCocycle(exc)


def compose_coboundaries(c: Coboundary, c2: Coboundary) -> Coboundary:
    """The coboundary acting like `c` followed by `c2`.

    gamma''_i = gamma_i * gamma'_i and eta''_ij = (gamma_i . eta'_ij) * eta_ij;
    this is the unique law making sequential application functorial, and it
    is property-tested against its defining contract rather than assumed.
    """
    K, cm = c.complex, c.cm
    G, H = cm.G, cm.H
    gamma = {v: G.mul(c.gamma[v], c2.gamma[v]) for v in range(K.vertex_count)}
    eta = {p: H.mul(cm.act(c.gamma[p[0]], c2.eta[p]), c.eta[p])
           for p in valid_tuples(K, 2)}
    return Coboundary(K, cm, gamma, eta)


def inverse_coboundary(c: Coboundary) -> Coboundary:
    K, cm = c.complex, c.cm
    G, H = cm.G, cm.H
    gamma = {v: G.inv(c.gamma[v]) for v in range(K.vertex_count)}
    eta = {p: cm.act(G.inv(c.gamma[p[0]]), H.inv(c.eta[p]))
           for p in valid_tuples(K, 2)}
    return Coboundary(K, cm, gamma, eta)


# -- shared search context -------------------------------------------------------

class _Context:
    """Precomputed tuple orders, beta fibers and constraint schedules for (K, cm)."""

    def __init__(self, K: SimplicialComplex, cm: CrossedModule):
        self.K, self.cm = K, cm
        G, H = cm.G, cm.H
        self.pairs = valid_tuples(K, 2)
        self.triples = valid_tuples(K, 3)
        self.quads = valid_tuples(K, 4)
        self.distinct_pairs = [p for p in self.pairs if p[0] != p[1]]
        self.pair_pos = {p: i for i, p in enumerate(self.distinct_pairs)}
        self.free_triples = [t for t in self.triples if not is_degenerate(t)]
        self.triple_pos = {t: i for i, t in enumerate(self.free_triples)}
        # beta fibers, each sorted ascending
        self.fiber = {g: [] for g in G.elements()}
        for h in H.elements():
            self.fiber[cm.beta_of(h)].append(h)
        self.kernel = self.fiber[G.identity]
        # transversal of left cosets beta(H)*g, minimal representative first
        img = sorted(set(cm.beta.image))
        self.coset_rep = {}
        for g in G.elements():
            self.coset_rep[g] = min(G.mul(b, g) for b in img)
        self.transversal = sorted(set(self.coset_rep.values()))
        # schedule: free triples checkable once all their distinct pairs are set
        def pair_level(p):
            return -1 if p[0] == p[1] else self.pair_pos[p]
        self.triples_at_pair = [[] for _ in self.distinct_pairs]
        for t in self.free_triples:
            i, j, k = t
            lvl = max(pair_level((i, j)), pair_level((j, k)), pair_level((i, k)))
            if lvl >= 0:
                self.triples_at_pair[lvl].append(t)
        # schedule: quadruples checkable once all their free triples are set
        def triple_level(t):
            return -1 if is_degenerate(t) else self.triple_pos[t]
        self.quads_at_triple = [[] for _ in self.free_triples]
        self.constant_quads = []
        for q in self.quads:
            i, j, k, l = q
            faces = [(i, k, l), (i, j, k), (i, j, l), (j, k, l)]
            lvl = max(triple_level(t) for t in faces)
            if lvl >= 0:
                self.quads_at_triple[lvl].append(q)
            else:
                self.constant_quads.append(q)
        # coboundary search schedule: pairs and triples by max vertex
        n = K.vertex_count
        self.pairs_at_vertex = [[] for _ in range(n)]
        for p in self.pairs:
            self.pairs_at_vertex[max(p)].append(p)
        self.triples_at_vertex = [[] for _ in range(n)]
        for t in self.triples:
            self.triples_at_vertex[max(t)].append(t)
        # flat index views of the packed encoding, for the orbit moves
        self.triple_pair_idx = []
        for (i, j, k) in self.free_triples:
            self.triple_pair_idx.append(
                (self.pair_pos[(i, j)], self.pair_pos[(j, k)],
                 self.pair_pos[(i, k)] if i != k else -1, i))

    def required_beta(self, g: dict, t: tuple) -> int:
        """The value beta(h_t) must take, namely g_ik * (g_ij * g_jk)^-1."""
        G = self.cm.G
        i, j, k = t
        return G.mul(g[(i, k)], G.inv(G.mul(g[(i, j)], g[(j, k)])))

    def estimate(self) -> int:
        return (self.cm.G.order ** len(self.distinct_pairs)
                * max(1, len(self.kernel)) ** len(self.free_triples))


class _Budget:
    def __init__(self, limit: int, estimate: int):
        self.limit, self.estimate, self.visited = limit, estimate, 0

    def tick(self, n: int = 1):
        self.visited += n
        if self.visited > self.limit:
            raise SearchSpaceTooLarge(self.estimate, self.limit)


# -- coboundary search (cohomology testing, stabilizers) --------------------------

def _coboundary_search(z: Cocycle, z2: Cocycle, budget: int,
                       find_all: bool) -> Iterator[Coboundary]:
    """Yield coboundaries c with apply_coboundary(z, c) == z2.

    Backtracking over vertex values with per-pair fiber pruning (the pair
    equation determines beta(eta_ij)) and per-triple checks.
    """
    K, cm = z.complex, z.cm
    G, H = cm.G, cm.H
    ctx = _Context(K, cm)
    n = K.vertex_count
    bud = _Budget(budget, G.order ** n * max(1, len(ctx.kernel)) ** len(ctx.distinct_pairs))
    gamma = [None] * n
    eta = {}

    def triple_ok(t) -> bool:
        i, j, k = t
        inner = H.mul_many(
            eta[(i, k)], z.h[t],
            H.inv(cm.act(z.g[(i, j)], eta[(j, k)])),
            H.inv(eta[(i, j)]))
        return cm.act(G.inv(gamma[i]), inner) == z2.h[t]

    def assign_pairs(v: int, idx: int) -> Iterator[Coboundary]:
        pairs = ctx.pairs_at_vertex[v]
        if idx == len(pairs):
            for t in ctx.triples_at_vertex[v]:
                if not triple_ok(t):
                    return
            yield from assign_vertex(v + 1)
            return
        p = pairs[idx]
        i, j = p
        if i == j:
            eta[p] = H.identity
            yield from assign_pairs(v, idx + 1)
            del eta[p]
            return
        need = G.mul_many(gamma[i], z2.g[p], G.inv(gamma[j]), G.inv(z.g[p]))
        for cand in ctx.fiber[need]:
            bud.tick()
            eta[p] = cand
            yield from assign_pairs(v, idx + 1)
            del eta[p]

    def assign_vertex(v: int) -> Iterator[Coboundary]:
        if v == n:
            yield coboundary(K, cm, {i: gamma[i] for i in range(n)}, dict(eta))
            return
        for val in G.elements():
            bud.tick()
            gamma[v] = val
            yield from assign_pairs(v, 0)
            gamma[v] = None

    for c in assign_vertex(0):
        yield c
        if not find_all:
            return


def are_cohomologous(z: Cocycle, z2: Cocycle,
                     budget: int = DEFAULT_BUDGET) -> Coboundary | None:
    """A witness coboundary carrying z to z2, or None (a definitive negative)."""
    if z.complex != z2.complex or z.cm != z2.cm:
        raise ValueError("cocycles live over different complexes or crossed modules")
    for c in _coboundary_search(z, z2, budget, find_all=False):
        assert apply_coboundary(z, c) == z2  # witness is verified before return
        return c
    return None


def stabilizer(z: Cocycle, budget: int = DEFAULT_BUDGET) -> list[Coboundary]:
    """All coboundaries fixing z; verified to be closed under composition."""
    out = list(_coboundary_search(z, z, budget, find_all=True))
    keys = {c.key() for c in out}
    for c in out:
        for c2 in out:
            assert compose_coboundaries(c, c2).key() in keys, \
                "stabilizer is not closed under composition"
    return sorted(out, key=lambda c: c.key())


# -- enumeration and classification ----------------------------------------------

def _enumerate_slice(ctx: _Context, bud: _Budget,
                     first_values: Sequence[int] | None = None) -> list[tuple]:
    """All valid cocycles with every g_ij in the coset transversal.

    Every cohomology class meets this slice: multiplying g_ij on the left by
    beta(eta_ij) moves it anywhere in its beta(H)-coset.  Backtracking
    assigns g on ordered distinct pairs, prunes a triple as soon as its
    beta-fiber is empty, then assigns h per triple fiber under the
    quadruple identity.
    """
    cm, G, H = ctx.cm, ctx.cm.G, ctx.cm.H
    eG, eH = G.identity, H.identity
    leaves: list[tuple] = []
    npairs, ntrip = len(ctx.distinct_pairs), len(ctx.free_triples)
    g: dict = {p: eG for p in ctx.pairs if p[0] == p[1]}
    h: dict = {t: eH for t in ctx.triples if is_degenerate(t)}
    gvec = [0] * npairs
    hvec = [0] * ntrip

    for q in ctx.constant_quads:
        i, j, k, l = q
        if H.mul(h[(i, k, l)], h[(i, j, k)]) != \
                H.mul(h[(i, j, l)], cm.act(g.get((i, j), eG), h[(j, k, l)])):
            return []  # cannot happen for a crossed module; defensive

    def quad_ok(q) -> bool:
        i, j, k, l = q
        lhs = H.mul(h[(i, k, l)], h[(i, j, k)])
        rhs = H.mul(h[(i, j, l)], cm.act(g[(i, j)], h[(j, k, l)]))
        return lhs == rhs

    def assign_h(ti: int):
        if ti == ntrip:
            leaves.append((tuple(gvec), tuple(hvec)))
            return
        t = ctx.free_triples[ti]
        for cand in ctx.fiber[ctx.required_beta(g, t)]:
            bud.tick()
            h[t] = cand
            hvec[ti] = cand
            if all(quad_ok(q) for q in ctx.quads_at_triple[ti]):
                assign_h(ti + 1)
            del h[t]

    def assign_g(pi: int):
        if pi == npairs:
            assign_h(0)
            return
        p = ctx.distinct_pairs[pi]
        domain = ctx.transversal if first_values is None or pi > 0 else first_values
        for val in domain:
            bud.tick()
            g[p] = val
            gvec[pi] = val
            if all(ctx.fiber[ctx.required_beta(g, t)] for t in ctx.triples_at_pair[pi]):
                assign_g(pi + 1)
            del g[p]

    if npairs == 0:
        assign_h(0)
    else:
        assign_g(0)
    return leaves


def _apply_packed(ctx: _Context, packed: tuple, gamma: Sequence[int],
                  eta_vec: Sequence[int]) -> tuple:
    """apply_coboundary on the packed (gvec, hvec) slice encoding.

    eta_vec is indexed by the distinct-pair order; diagonal entries are the
    identity by normalization.
    """
    G, H = ctx.cm.G, ctx.cm.H
    gmul, ginv, hmul, hinv = G.mul_table, G.inv_table, H.mul_table, H.inv_table
    act, beta = ctx.cm.alpha.table, ctx.cm.beta.image
    eH = H.identity
    gvec, hvec = packed
    g2 = []
    for idx, (i, j) in enumerate(ctx.distinct_pairs):
        v = gmul[ginv[gamma[i]]][beta[eta_vec[idx]]]
        g2.append(gmul[gmul[v][gvec[idx]]][gamma[j]])
    h2 = []
    for ti, (ij, jk, ik, i) in enumerate(ctx.triple_pair_idx):
        e_ik = eta_vec[ik] if ik >= 0 else eH
        inner = hmul[e_ik][hvec[ti]]
        inner = hmul[inner][hinv[act[gvec[ij]][eta_vec[jk]]]]
        inner = hmul[inner][hinv[eta_vec[ij]]]
        h2.append(act[ginv[gamma[i]]][inner])
    return (tuple(g2), tuple(h2))


def _slice_moves(ctx: _Context) -> list[tuple]:
    """Generator moves for the orbit partition within the slice.

    Kernel moves change a single eta_ij inside ker(beta); vertex moves set a
    single gamma_v and refill every eta with the minimal fiber element that
    keeps all g-values inside the transversal.  Together these moves connect
    exactly the intersections of cohomology classes with the slice.
    """
    moves = []
    G, H = ctx.cm.G, ctx.cm.H
    for pi, p in enumerate(ctx.distinct_pairs):
        for a in ctx.kernel:
            if a != H.identity:
                moves.append(("kernel", p, a))
    for v in range(ctx.K.vertex_count):
        for val in G.elements():
            if val != G.identity:
                moves.append(("vertex", v, val))
    return moves


def _apply_move(ctx: _Context, packed: tuple, move: tuple) -> tuple:
    cm, G, H = ctx.cm, ctx.cm.G, ctx.cm.H
    kind, a, b = move
    eta_vec = [H.identity] * len(ctx.distinct_pairs)
    gamma = [G.identity] * ctx.K.vertex_count
    if kind == "kernel":
        eta_vec[ctx.pair_pos[a]] = b
    else:
        gamma[a] = b
        gvec = packed[0]
        for i, p in enumerate(ctx.distinct_pairs):
            gi, gj = gamma[p[0]], gamma[p[1]]
            cur = gvec[i]
            target = ctx.coset_rep[G.mul_many(G.inv(gi), cur, gj)]
            need = G.mul_many(gi, target, G.inv(gj), G.inv(cur))
            eta_vec[i] = ctx.fiber[need][0]
    return _apply_packed(ctx, packed, gamma, eta_vec)


@dataclass
class ClassifyResult:
    count: int
    representatives: list[Cocycle]
    strategy: str
    cocycles_enumerated: int | None = None


def _unpack(ctx: _Context, packed: tuple) -> Cocycle:
    G, H = ctx.cm.G, ctx.cm.H
    g = {p: G.identity for p in ctx.pairs if p[0] == p[1]}
    g.update({p: packed[0][i] for i, p in enumerate(ctx.distinct_pairs)})
    h = {t: H.identity for t in ctx.triples if is_degenerate(t)}
    h.update({t: packed[1][i] for i, t in enumerate(ctx.free_triples)})
    return validate_cocycle(Cocycle(ctx.K, ctx.cm, g, h))


def _classify_brute(K: SimplicialComplex, cm: CrossedModule, budget: int,
                    workers: int) -> ClassifyResult:
    ctx = _Context(K, cm)
    bud = _Budget(budget, ctx.estimate())
    if workers > 1 and ctx.distinct_pairs:
        leaves = _enumerate_parallel(K, cm, budget, workers)
        bud.tick(len(leaves))  # coarse accounting; exact counts live per worker
    else:
        leaves = _enumerate_slice(ctx, bud)
    leaves = sorted(set(leaves))
    index = {packed: i for i, packed in enumerate(leaves)}

    parent = list(range(len(leaves)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    moves = _slice_moves(ctx)
    for i, packed in enumerate(leaves):
        for mv in moves:
            img = _apply_move(ctx, packed, mv)
            union(i, index[img])

    classes: dict[int, tuple] = {}
    for i, packed in enumerate(leaves):
        r = find(i)
        if r not in classes or packed < classes[r]:
            classes[r] = packed
    reps = sorted(classes.values())
    return ClassifyResult(len(reps), [_unpack(ctx, p) for p in reps], "brute",
                          len(leaves))


def _enumerate_parallel(K: SimplicialComplex, cm: CrossedModule, budget: int,
                        workers: int) -> list[tuple]:
    """Split the top-level g-assignment across processes; results are merged
    and canonically sorted, so the outcome matches the sequential run."""
    import multiprocessing as mp

    ctx = _Context(K, cm)
    values = list(ctx.transversal)
    payload = _pickle_payload(K, cm)
    tasks = [(payload, budget, [v]) for v in values]
    with mp.get_context("fork").Pool(processes=min(workers, len(tasks))) as pool:
        chunks = pool.map(_enumerate_task, tasks)
    out = []
    for ch in chunks:
        out.extend(ch)
    return out


def _pickle_payload(K: SimplicialComplex, cm: CrossedModule) -> tuple:
    return (
        sorted(tuple(sorted(s)) for s in K.simplices), K.vertex_count,
        cm.G.order, cm.G.mul_table, cm.H.order, cm.H.mul_table,
        cm.beta.image, cm.alpha.table,
    )


def _enumerate_task(args) -> list[tuple]:
    from .algebra import crossed_module, validate_group
    from .complexes import build_complex

    payload, budget, first_values = args
    sims, nverts, og, tg, oh, th, beta, alpha = payload
    K = build_complex(sims, vertex_count=nverts)
    G = validate_group(og, tg)
    H = validate_group(oh, th)
    cm = crossed_module(G, H, beta, alpha)
    ctx = _Context(K, cm)
    bud = _Budget(budget, ctx.estimate())
    return _enumerate_slice(ctx, bud, first_values=first_values)


def _cyclic_generator(H) -> int | None:
    for a in H.elements():
        if H.element_order(a) == H.order:
            return a
    return None


def _classify_abelian(K: SimplicialComplex, cm: CrossedModule) -> ClassifyResult:
    """Linear route: solve the cocycle system and quotient by the coboundary
    image over Z/n.  The count comes from elimination over Z/p^e (combined by
    CRT), a route independent of the integer-Smith-form oracle."""
    from .complexes import coboundary_matrix, normalized_tuples
    from .snf import image_size_mod, kernel_generators_mod, kernel_size_mod, solve_mod

    if cm.G.order != 1:
        raise StrategyMismatch("abelian strategy needs a trivial base group")
    if not cm.H.is_abelian():
        raise StrategyMismatch("abelian strategy needs abelian coefficients")
    gen = _cyclic_generator(cm.H)
    if gen is None:
        raise StrategyMismatch("abelian strategy needs cyclic coefficients")
    n = cm.H.order
    power = {}
    x, t = cm.H.identity, 0
    while t < n:
        power[t] = x
        x = cm.H.mul(x, gen)
        t += 1

    d2 = coboundary_matrix(K, 1)   # C^1 -> C^2, coboundaries
    d3 = coboundary_matrix(K, 2)   # C^2 -> C^3, cocycle condition
    count = kernel_size_mod(d3, n) // image_size_mod(d2, n)

    cols = normalized_tuples(K, 3)
    gens = kernel_generators_mod(d3, n) if d3 else \
        [[int(i == j) for j in range(len(cols))] for i in range(len(cols))]

    def cohomologous_vec(a, b):
        diff = [(x - y) % n for x, y in zip(a, b)]
        return solve_mod(d2, diff, n) is not None if d2 else all(v == 0 for v in diff)

    reps = [tuple([0] * len(cols))]
    queue = [reps[0]]
    while queue and len(reps) < count:
        base = queue.pop(0)
        for gvec in gens:
            cand = tuple((x + y) % n for x, y in zip(base, gvec))
            if not any(cohomologous_vec(cand, r) for r in reps):
                reps.append(cand)
                queue.append(cand)
                if len(reps) == count:
                    break
    assert len(reps) == count, "class representatives do not exhaust the count"

    out = []
    for vec in reps:
        h = {t: power[v] for t, v in zip(cols, vec)}
        g = {p: cm.G.identity for p in valid_tuples(K, 2)}
        out.append(cocycle(K, cm, g, h))
    return ClassifyResult(count, out, "abelian")


def classify(K: SimplicialComplex, cm: CrossedModule, strategy: str = "brute",
             budget: int = DEFAULT_BUDGET, workers: int = 1) -> ClassifyResult:
    """Cohomology classes over K with coefficients in cm.

    brute: pruned backtracking enumeration restricted to the band slice
    (every g_ij in a fixed transversal of beta(H)-cosets), followed by an
    orbit partition under slice-preserving coboundary moves.  abelian:
    linear algebra mod n; needs a trivial base group and cyclic coefficients.
    Representatives are lexicographically minimal in the fixed tuple order
    (within the slice for brute); output is deterministic.
    """
    if strategy == "brute":
        return _classify_brute(K, cm, budget, workers)
    if strategy == "abelian":
        return _classify_abelian(K, cm)
    raise StrategyMismatch(f"unknown strategy {strategy!r}")


# -- random sampling ----------------------------------------------------------

def random_coboundary(K: SimplicialComplex, cm: CrossedModule, rng) -> Coboundary:
    gamma = {v: rng.randrange(cm.G.order) for v in range(K.vertex_count)}
    eta = {}
    for p in valid_tuples(K, 2):
        eta[p] = cm.H.identity if p[0] == p[1] else rng.randrange(cm.H.order)
    return coboundary(K, cm, gamma, eta)


def sample_cocycle(K: SimplicialComplex, cm: CrossedModule, rng,
                   budget: int = DEFAULT_BUDGET) -> Cocycle:
    """A random valid cocycle: a randomized walk to one slice solution,
    followed by a uniformly random coboundary move off the slice."""
    ctx = _Context(K, cm)
    bud = _Budget(budget, ctx.estimate())
    cm_, G, H = ctx.cm, ctx.cm.G, ctx.cm.H
    g = {p: G.identity for p in ctx.pairs if p[0] == p[1]}
    h = {t: H.identity for t in ctx.triples if is_degenerate(t)}

    def pick_h(ti: int) -> bool:
        if ti == len(ctx.free_triples):
            return True
        t = ctx.free_triples[ti]
        cands = list(ctx.fiber[ctx.required_beta(g, t)])
        rng.shuffle(cands)
        for cand in cands:
            bud.tick()
            h[t] = cand
            ok = all(
                H.mul(h[(q[0], q[2], q[3])], h[(q[0], q[1], q[2])])
                == H.mul(h[(q[0], q[1], q[3])], cm_.act(g[(q[0], q[1])], h[(q[1], q[2], q[3])]))
                for q in ctx.quads_at_triple[ti])
            if ok and pick_h(ti + 1):
                return True
            del h[t]
        return False

    def pick_g(pi: int) -> bool:
        if pi == len(ctx.distinct_pairs):
            return pick_h(0)
        p = ctx.distinct_pairs[pi]
        cands = list(ctx.transversal)
        rng.shuffle(cands)
        for val in cands:
            bud.tick()
            g[p] = val
            if all(ctx.fiber[ctx.required_beta(g, t)] for t in ctx.triples_at_pair[pi]):
                if pick_g(pi + 1):
                    return True
            del g[p]
        return False

    if not pick_g(0):
        raise AssertionError("no valid cocycle exists (trivial one always does)")
    z = validate_cocycle(Cocycle(K, cm, dict(g), dict(h)))
    return apply_coboundary(z, random_coboundary(K, cm, rng))
