"""Linear and cyclic codes over the ring and over GF(2).

Binary codes are row spaces of int bitmasks in reduced row echelon form with
ascending pivots, so two BinaryCode values are equal exactly when they are
the same subspace.  Ring codes are generator lists; their spans are
enumerated through the Gray map, which is an additive bijection onto 3n-bit
vectors, so every size and rank here is a plain GF(2) rank.

The decomposition, dual-formula and size-formula routines are audits: they
compare a claimed identity against enumeration and report a witness when the
claim fails, never assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from . import ring
from .errors import CapExceeded, PreconditionError
from .gf2poly import degree, format_poly, poly_divmod, poly_mod, reciprocal, xn1
from .ring import gray_vec, gray_vec_inverse, ring_inner_product, scale_vec

DEFAULT_ENUM_CAP = 1 << 24
DEFAULT_DIST_CAP = 1 << 20
DEFAULT_RING_DUAL_CAP = 1 << 24


def rref(rows: Sequence[int], ncols: int) -> tuple[int, ...]:
    """Reduced row echelon basis, pivoting on the lowest column index first.

    The result is canonical for the row space: rows are nonzero, each has a
    distinct lowest set bit (its pivot), pivots ascend, and no row has a bit
    in another row's pivot column.
    """
    work = [r for r in rows if r]
    basis: list[int] = []  # kept with ascending pivot
    for col in range(ncols):
        pivot_row = None
        for i, r in enumerate(work):
            if (r >> col) & 1:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        piv = work.pop(pivot_row)
        basis = [b ^ piv if (b >> col) & 1 else b for b in basis]
        work = [w ^ piv if (w >> col) & 1 else w for w in work]
        work = [w for w in work if w]
        basis.append(piv)
        if not work:
            break
    return tuple(basis)


def nullspace(rows: Sequence[int], ncols: int) -> tuple[int, ...]:
    """Canonical basis of {x : x . row = 0 for every row}."""
    reduced = rref(rows, ncols)
    pivots = [(r & -r).bit_length() - 1 for r in reduced]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, piv in zip(reduced, pivots):
            if (row >> free) & 1:
                vec |= 1 << piv
        basis.append(vec)
    return rref(basis, ncols)


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code as its canonical RREF basis."""

    n: int
    basis: tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "BinaryCode":
        return cls(n, rref(rows, n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def contains(self, vec: int) -> bool:
        for row in self.basis:
            if vec & (row & -row):
                vec ^= row
        return vec == 0

    def contains_code(self, other: "BinaryCode") -> bool:
        return all(self.contains(row) for row in other.basis)

    def codewords(self) -> Iterator[int]:
        """All 2^dim codewords, walked in Gray-code order starting from 0."""
        yield 0
        cw = 0
        prev = 0
        for t in range(1, 1 << self.dim):
            g = t ^ (t >> 1)
            idx = ((g ^ prev) & -(g ^ prev)).bit_length() - 1
            cw ^= self.basis[idx]
            prev = g
            yield cw


def dual_binary(code: BinaryCode) -> BinaryCode:
    """Null space of the basis; dimension n - dim."""
    return BinaryCode(code.n, nullspace(code.basis, code.n))


def binary_cyclic(n: int, g: int) -> BinaryCode:
    """Cyclic code of length n generated by g, which must divide x^n - 1."""
    if g == 0 or poly_mod(xn1(n), g) != 0:
        raise PreconditionError(
            f"{format_poly(g)} does not divide x^{n}+1"
        )
    rows = [g << i for i in range(n - degree(g))]
    return BinaryCode.from_rows(n, rows)


def min_hamming(code: BinaryCode, cap: int = DEFAULT_DIST_CAP) -> int:
    """Minimum weight over nonzero codewords, by full enumeration."""
    if code.dim == 0:
        raise PreconditionError("zero code has no nonzero codeword")
    if code.size > cap:
        raise CapExceeded(f"2^{code.dim} codewords exceed distance cap {cap}")
    best = code.n + 1
    for cw in code.codewords():
        if cw:
            w = cw.bit_count()
            if w < best:
                best = w
    return best


# ---------------------------------------------------------------------------
# Ring codes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingCode:
    """A code over the ring, given by generator vectors of length n.

    When ``cyclic`` is set the code is the span of all cyclic shifts of the
    generators, i.e. the module they generate inside R[x]/(x^n - 1).
    """

    n: int
    generators: tuple[tuple[int, ...], ...]
    cyclic: bool = False


def sigma(vec: tuple[int, ...]) -> tuple[int, ...]:
    """Right cyclic shift: (r0,...,r_{n-1}) -> (r_{n-1}, r0, ..., r_{n-2})."""
    return vec[-1:] + vec[:-1]


def phi(mask: int, length: int) -> int:
    """Blockwise shift of a binary vector split into three equal thirds."""
    if length % 3 != 0:
        raise PreconditionError(f"length {length} not divisible by 3")
    n = length // 3
    full = (1 << n) - 1

    def rot(x: int) -> int:
        return ((x << 1) & full) | (x >> (n - 1))

    t0 = mask & full
    t1 = (mask >> n) & full
    t2 = (mask >> (2 * n)) & full
    return rot(t0) | rot(t1) << n | rot(t2) << (2 * n)


def _f2_generator_rows(code: RingCode) -> list[int]:
    # The module span over R equals the GF(2) span of {u*g : u in {1, v, v^2}}
    # taken over every generator (and every shift, when cyclic).
    rows = []
    for gen in code.generators:
        shifted = gen
        for _ in range(code.n if code.cyclic else 1):
            for unit in (ring.ONE, ring.V, ring.V2):
                rows.append(gray_vec(scale_vec(unit, shifted)))
            shifted = sigma(shifted)
    return rows


def gray_image_basis(code: RingCode) -> BinaryCode:
    """Canonical basis of the Gray image, a binary code of length 3n."""
    return BinaryCode.from_rows(3 * code.n, _f2_generator_rows(code))


def span_enumerate(code: RingCode, cap: int = DEFAULT_ENUM_CAP) -> frozenset[tuple[int, ...]]:
    """The full codeword set, pulled back through the Gray bijection."""
    image = gray_image_basis(code)
    if image.size > cap:
        raise CapExceeded(
            f"span estimate 2^{image.dim} exceeds enumeration cap {cap}"
        )
    n = code.n
    return frozenset(gray_vec_inverse(mask, n) for mask in image.codewords())


def build_ring_cyclic(n: int, f1: int, f2: int, f3: int) -> RingCode:
    """Cyclic ring code generated by v*f1, (1+v)*f2 and (1+v^2)*f3.

    Each fi must divide x^n - 1; polynomials are reduced mod x^n - 1 before
    being laid out as coefficient vectors, so fi = x^n - 1 contributes the
    zero vector.
    """
    modulus = xn1(n)
    for label, f in (("f1", f1), ("f2", f2), ("f3", f3)):
        if f == 0 or poly_mod(modulus, f) != 0:
            raise PreconditionError(
                f"{label} = {format_poly(f)} does not divide x^{n}+1"
            )

    def coeff_vec(unit: int, f: int) -> tuple[int, ...]:
        f = poly_mod(f, modulus)
        return tuple(unit if (f >> i) & 1 else 0 for i in range(n))

    gens = (
        coeff_vec(ring.V, f1),
        coeff_vec(ring.ONE_PLUS_V, f2),
        coeff_vec(ring.ONE_PLUS_V2, f3),
    )
    return RingCode(n, gens, cyclic=True)


def projections(span: frozenset[tuple[int, ...]], n: int) -> tuple[BinaryCode, BinaryCode, BinaryCode]:
    """The three binary projections: a-parts, b-parts and (a+c)-parts."""
    full = (1 << n) - 1
    a_rows, b_rows, c_rows = set(), set(), set()
    for vec in span:
        mask = gray_vec(vec)
        a_rows.add(mask & full)
        b_rows.add((mask >> n) & full)
        c_rows.add(mask >> (2 * n))
    return (
        BinaryCode.from_rows(n, a_rows),
        BinaryCode.from_rows(n, b_rows),
        BinaryCode.from_rows(n, c_rows),
    )


def _span_f2_basis(span: frozenset[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    masks = rref([gray_vec(v) for v in span], 3 * n)
    return [gray_vec_inverse(m, n) for m in masks]


def dual_ring_bruteforce(span: frozenset[tuple[int, ...]], n: int,
                         cap: int = DEFAULT_RING_DUAL_CAP) -> frozenset[tuple[int, ...]]:
    """Exact annihilator of the span under the ring inner product.

    Scans all 8^n candidate vectors; orthogonality is checked against an
    additive basis of the span, which suffices because the inner product is
    biadditive.
    """
    if 8 ** n > cap:
        raise CapExceeded(f"8^{n} candidates exceed ring dual cap {cap}")
    basis = _span_f2_basis(span, n)
    out = []
    for cand in product(ring.ELEMENTS, repeat=n):
        if all(ring_inner_product(cand, b) == 0 for b in basis):
            out.append(cand)
    return frozenset(out)


def dual_ring_formula(n: int, f1: int, f2: int, f3: int) -> RingCode:
    """The claimed dual: one generator v*h1r + (1+v)*h2r + (1+v^2)*h3r,
    where hi = (x^n - 1)/fi and hir is the reciprocal of hi.

    This is a claim under audit, not a trusted construction; compare its
    span against dual_ring_bruteforce.
    """
    modulus = xn1(n)
    gen = [0] * n
    for unit, f in zip((ring.V, ring.ONE_PLUS_V, ring.ONE_PLUS_V2), (f1, f2, f3)):
        if f == 0 or poly_mod(modulus, f) != 0:
            raise PreconditionError(f"{format_poly(f)} does not divide x^{n}+1")
        h = poly_divmod(modulus, f)[0]
        hr = poly_mod(reciprocal(h), modulus)
        for i in range(n):
            if (hr >> i) & 1:
                gen[i] ^= unit
    return RingCode(n, (tuple(gen),), cyclic=True)


def min_lee_enum(span: frozenset[tuple[int, ...]]) -> int:
    """Minimum Lee weight over nonzero codewords of an enumerated span."""
    weights = [ring.lee_weight_vec(v) for v in span if any(v)]
    if not weights:
        raise PreconditionError("zero code has no nonzero codeword")
    return min(weights)


def min_lee_formula(c1: BinaryCode, c2: BinaryCode, c3: BinaryCode,
                    cap: int = DEFAULT_DIST_CAP) -> int:
    """min of the three component Hamming distances (a claim under audit)."""
    return min(min_hamming(c, cap) for c in (c1, c2, c3))


def is_cyclic(span: frozenset[tuple[int, ...]]) -> bool:
    return all(sigma(v) in span for v in span)


def is_quasicyclic3(masks: frozenset[int] | set[int], length: int) -> bool:
    return all(phi(m, length) in masks for m in masks)


def is_self_orthogonal(span: frozenset[tuple[int, ...]], n: int) -> bool:
    """Whether every pair of codewords is orthogonal (checked on a basis)."""
    basis = _span_f2_basis(span, n)
    return all(
        ring_inner_product(x, y) == 0 for x in basis for y in basis
    )


# ---------------------------------------------------------------------------
# Audits.  Each one tests a structural claim against enumeration and carries
# a witness when the claim fails.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionAudit:
    """Does the Gray image equal C1 x C2 x C3, and does the reconstruction
    v*C1 + (1+v)*C2 + (1+v^2)*C3 reproduce the code?"""

    n: int
    code_size: int
    projection_sizes: tuple[int, int, int]
    product_size: int
    tensor_equal: bool
    tensor_witness: Optional[tuple[int, ...]]  # in C1 x C2 x C3, not in code
    reconstruction_equal: bool
    reconstruction_witness: Optional[tuple[int, ...]]
    reconstruction_witness_side: str  # "", "only_in_reconstruction", "only_in_code"

    @property
    def passed(self) -> bool:
        return self.tensor_equal and self.reconstruction_equal


def audit_decomposition(span: frozenset[tuple[int, ...]], n: int) -> DecompositionAudit:
    full = (1 << n) - 1
    a_set, b_set, c_set = set(), set(), set()
    psi = set()
    for vec in span:
        mask = gray_vec(vec)
        psi.add(mask)
        a_set.add(mask & full)
        b_set.add((mask >> n) & full)
        c_set.add(mask >> (2 * n))
    product_size = len(a_set) * len(b_set) * len(c_set)

    # The Gray image always sits inside the product, so equality is a size
    # question and any witness lives on the product side.
    tensor_equal = len(span) == product_size
    tensor_witness = None
    if not tensor_equal:
        for a in sorted(a_set):
            for b in sorted(b_set):
                for c in sorted(c_set):
                    mask = a | b << n | c << (2 * n)
                    if mask not in psi:
                        tensor_witness = gray_vec_inverse(mask, n)
                        break
                if tensor_witness:
                    break
            if tensor_witness:
                break

    # Reconstruction from the three projections: per-coordinate XOR of the
    # selected constants v, 1+v, 1+v^2.
    recon = set()
    for a in a_set:
        for b in b_set:
            base = tuple(
                (ring.V if (a >> i) & 1 else 0) ^ (ring.ONE_PLUS_V if (b >> i) & 1 else 0)
                for i in range(n)
            )
            for c in c_set:
                recon.add(tuple(
                    e ^ (ring.ONE_PLUS_V2 if (c >> i) & 1 else 0)
                    for i, e in enumerate(base)
                ))
    reconstruction_equal = recon == span
    witness = None
    side = ""
    if not reconstruction_equal:
        extra = recon - span
        if extra:
            witness = min(extra)
            side = "only_in_reconstruction"
        else:
            witness = min(span - recon)
            side = "only_in_code"

    return DecompositionAudit(
        n=n,
        code_size=len(span),
        projection_sizes=(len(a_set), len(b_set), len(c_set)),
        product_size=product_size,
        tensor_equal=tensor_equal,
        tensor_witness=tensor_witness,
        reconstruction_equal=reconstruction_equal,
        reconstruction_witness=witness,
        reconstruction_witness_side=side,
    )


@dataclass(frozen=True)
class DualFormulaAudit:
    """Span of the claimed dual generator versus the brute-force dual."""

    n: int
    fs: tuple[int, int, int]
    code_size: int
    brute_dual_size: int
    formula_span_size: int
    claimed_dual_size: int
    formula_matches_brute: bool
    witness: Optional[tuple[int, ...]]
    witness_side: str  # "", "only_in_brute", "only_in_formula"
    size_claim_matches: bool  # claimed 2^(sum deg fi) vs brute-force size
    product_law_ok: bool  # |C| * |dual| == 8^n
    three_generator_matches_brute: bool  # the <v h1r, (1+v) h2r, (1+v^2) h3r> variant


def audit_dual_formula(n: int, f1: int, f2: int, f3: int,
                       enum_cap: int = DEFAULT_ENUM_CAP,
                       dual_cap: int = DEFAULT_RING_DUAL_CAP) -> DualFormulaAudit:
    code_span = span_enumerate(build_ring_cyclic(n, f1, f2, f3), enum_cap)
    brute = dual_ring_bruteforce(code_span, n, dual_cap)
    formula_span = span_enumerate(dual_ring_formula(n, f1, f2, f3), enum_cap)

    modulus = xn1(n)
    three_gen = build_ring_cyclic(
        n,
        reciprocal(poly_divmod(modulus, f1)[0]),
        reciprocal(poly_divmod(modulus, f2)[0]),
        reciprocal(poly_divmod(modulus, f3)[0]),
    )
    three_gen_span = span_enumerate(three_gen, enum_cap)

    witness = None
    side = ""
    if formula_span != brute:
        missing = brute - formula_span
        if missing:
            witness = min(missing)
            side = "only_in_brute"
        else:
            witness = min(formula_span - brute)
            side = "only_in_formula"

    claimed = 1 << (degree(f1) + degree(f2) + degree(f3))
    return DualFormulaAudit(
        n=n,
        fs=(f1, f2, f3),
        code_size=len(code_span),
        brute_dual_size=len(brute),
        formula_span_size=len(formula_span),
        claimed_dual_size=claimed,
        formula_matches_brute=formula_span == brute,
        witness=witness,
        witness_side=side,
        size_claim_matches=claimed == len(brute),
        product_law_ok=len(code_span) * len(brute) == 8 ** n,
        three_generator_matches_brute=three_gen_span == brute,
    )


@dataclass(frozen=True)
class SizeFormulaAudit:
    """Rank-computed code size versus the claimed 2^(3n - sum deg fi)."""

    n: int
    fs: tuple[int, int, int]
    rank_log2: int
    claimed_log2: int
    matches: bool


def audit_size_formula(n: int, f1: int, f2: int, f3: int) -> SizeFormulaAudit:
    dim = gray_image_basis(build_ring_cyclic(n, f1, f2, f3)).dim
    claimed = 3 * n - (degree(f1) + degree(f2) + degree(f3))
    return SizeFormulaAudit(n=n, fs=(f1, f2, f3), rank_log2=dim,
                            claimed_log2=claimed, matches=dim == claimed)


@dataclass(frozen=True)
class SingleGeneratorAudit:
    """Span of the combined generator v*f1 + (1+v)*f2 + (1+v^2)*f3 versus
    the three-generator cyclic code (a uniqueness claim under audit)."""

    n: int
    fs: tuple[int, int, int]
    code_log2: int
    single_log2: int
    equal: bool
    witness: Optional[tuple[int, ...]]  # generated by three gens, missed by one


def combined_generator(n: int, f1: int, f2: int, f3: int) -> tuple[int, ...]:
    modulus = xn1(n)
    gen = [0] * n
    for unit, f in zip((ring.V, ring.ONE_PLUS_V, ring.ONE_PLUS_V2), (f1, f2, f3)):
        reduced = poly_mod(f, modulus)
        for i in range(n):
            if (reduced >> i) & 1:
                gen[i] ^= unit
    return tuple(gen)


def audit_single_generator(n: int, f1: int, f2: int, f3: int) -> SingleGeneratorAudit:
    code = build_ring_cyclic(n, f1, f2, f3)
    single = RingCode(n, (combined_generator(n, f1, f2, f3),), cyclic=True)
    code_basis = gray_image_basis(code)
    single_basis = gray_image_basis(single)
    equal = code_basis == single_basis
    witness = None
    if not equal:
        # Basis rows are comparable directly; pick one outside the other span.
        for row in code_basis.basis:
            if not single_basis.contains(row):
                witness = gray_vec_inverse(row, n)
                break
        else:
            for row in single_basis.basis:
                if not code_basis.contains(row):
                    witness = gray_vec_inverse(row, n)
                    break
    return SingleGeneratorAudit(
        n=n,
        fs=(f1, f2, f3),
        code_log2=code_basis.dim,
        single_log2=single_basis.dim,
        equal=equal,
        witness=witness,
    )
