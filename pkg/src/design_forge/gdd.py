"""Group divisible designs: verification, constructions, and the ingredient store.

A k-GDD of type g^u has gu points split into u groups of size g; its
blocks are k-subsets meeting every group at most once, such that each
pair of points from distinct groups lies in exactly one block and no
same-group pair lies in any block.  verify_gdd checks that definition by
exhaustive pair counting; every constructor in this module runs it before
returning, so a Gdd value in circulation is always a certified one.

Routes to the 4-GDDs of type 24^t consumed by the top-level assembly:

* t = 4: a transversal design TD(4,24), built from two MOLS of order 24
  obtained as the Kronecker (MacNeish) product of MOLS(8) and MOLS(3);
* t >= 5: Wilson inflation of a small ingredient GDD, type 6^t by weight
  4 or type 3^t by weight 8, loaded from the ingredient store (data files
  verified on load) or regenerated by the exact-cover search.

Points are numbered globally 0..N-1 with group i occupying a consecutive
range; gdd_24_t guarantees group i = {24i, ..., 24i + 23}.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product
from pathlib import Path


class GddError(ValueError):
    pass


class UnsupportedOrderError(GddError):
    """No construction for MOLS of this order is available here."""


class IngredientUnavailableError(GddError):
    """A required small design is neither constructible nor in the store."""


class BudgetExhaustedError(GddError):
    """The exact-cover search ran out of nodes before deciding existence."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class IngredientFileError(GddError):
    """An ingredient file is malformed or fails verification."""


@dataclass(frozen=True)
class GddType:
    """A multiset of group sizes, written g^u (e.g. '24^4' or '3^5 6^1')."""

    parts: tuple[tuple[int, int], ...]  # (group size, multiplicity) pairs

    def __post_init__(self) -> None:
        if not self.parts or any(g < 1 or u < 1 for g, u in self.parts):
            raise GddError("group sizes and multiplicities must be positive")

    @staticmethod
    def of(size: int, count: int) -> "GddType":
        return GddType(((size, count),))

    @staticmethod
    def parse(text: str) -> "GddType":
        parts = []
        for token in text.split():
            base, sep, exp = token.partition("^")
            if not sep or not base.isdigit() or not exp.isdigit():
                raise GddError(f"bad type token {token!r}, want g^u")
            parts.append((int(base), int(exp)))
        return GddType(tuple(parts))

    def group_sizes(self) -> list[int]:
        return [g for g, u in self.parts for _ in range(u)]

    def point_count(self) -> int:
        return sum(g * u for g, u in self.parts)

    def __str__(self) -> str:
        return " ".join(f"{g}^{u}" for g, u in self.parts)


@dataclass(frozen=True)
class Gdd:
    """A group divisible design with block size k; see verify_gdd."""

    gdd_type: GddType
    k: int
    groups: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]
    provenance: str = ""

    def point_count(self) -> int:
        return self.gdd_type.point_count()


@dataclass
class GddReport:
    """Findings of verify_gdd; passed iff every list is empty and the
    independently recomputed block count matches."""

    block_count_expected: int | None
    block_count_actual: int
    group_errors: list[str] = field(default_factory=list)
    block_errors: list[str] = field(default_factory=list)
    pair_errors: list[tuple[tuple[int, int], int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.block_count_expected == self.block_count_actual
            and not self.group_errors
            and not self.block_errors
            and not self.pair_errors
        )


def verify_gdd(design: Gdd) -> GddReport:
    """Check the three GDD definition clauses by exhaustive pair counting.

    Violations are report content, never exceptions: every cross-group
    pair covered other than once and every covered same-group pair is
    listed.  The expected block count (cross pairs / C(k,2)) is recomputed
    from the type alone as an independent cross-check.
    """
    n = design.point_count()
    k = design.k
    sizes = sorted(design.gdd_type.group_sizes())
    cross_pairs = (n * (n - 1) - sum(g * (g - 1) for g in sizes)) // 2
    per_block = k * (k - 1) // 2
    expected = cross_pairs // per_block if cross_pairs % per_block == 0 else None
    report = GddReport(block_count_expected=expected, block_count_actual=len(design.blocks))

    seen: set[int] = set()
    for group in design.groups:
        for p in group:
            if not 0 <= p < n:
                report.group_errors.append(f"point {p} outside 0..{n - 1}")
            elif p in seen:
                report.group_errors.append(f"point {p} in two groups")
            seen.add(p)
    if len(seen) != n:
        report.group_errors.append(f"groups cover {len(seen)} of {n} points")
    if sorted(len(g) for g in design.groups) != sizes:
        report.group_errors.append(
            f"group sizes {sorted(len(g) for g in design.groups)} != type {design.gdd_type}"
        )
    if report.group_errors:
        return report

    group_of = {p: i for i, group in enumerate(design.groups) for p in group}
    counts = bytearray(n * (n - 1) // 2)
    for idx, block in enumerate(design.blocks):
        if len(block) != k or len(set(block)) != k:
            report.block_errors.append(f"block {idx}: not {k} distinct points")
            continue
        if any(p not in group_of for p in block):
            report.block_errors.append(f"block {idx}: point out of range")
            continue
        if len({group_of[p] for p in block}) != k:
            report.block_errors.append(f"block {idx}: two points share a group")
        for a, b in combinations(block, 2):
            if a > b:
                a, b = b, a
            i = b * (b - 1) // 2 + a
            if counts[i] < 255:
                counts[i] += 1
    for b in range(n):
        for a in range(b):
            c = counts[b * (b - 1) // 2 + a]
            want = 1 if group_of[a] != group_of[b] else 0
            if c != want:
                report.pair_errors.append(((a, b), c))
    return report


def _require_valid(design: Gdd, what: str) -> Gdd:
    report = verify_gdd(design)
    if not report.passed:
        raise GddError(f"internal: {what} failed verification: {report}")
    return design


# --- mutually orthogonal Latin squares -------------------------------------


@dataclass(frozen=True)
class MolsSet:
    """Latin squares of one order, pairwise orthogonal.

    Both properties are verified exhaustively at construction: each row
    and column must be a permutation, and superimposing any two squares
    must produce all order^2 ordered symbol pairs.
    """

    order: int
    squares: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        m = self.order
        full = set(range(m))
        for s, sq in enumerate(self.squares):
            if len(sq) != m or any(len(row) != m for row in sq):
                raise GddError(f"square {s} is not {m}x{m}")
            for x in range(m):
                if set(sq[x]) != full:
                    raise GddError(f"square {s}: row {x} is not a permutation")
                if {sq[y][x] for y in range(m)} != full:
                    raise GddError(f"square {s}: column {x} is not a permutation")
        for s, t in combinations(range(len(self.squares)), 2):
            pairs = {
                (self.squares[s][x][y], self.squares[t][x][y])
                for x in range(m)
                for y in range(m)
            }
            if len(pairs) != m * m:
                raise GddError(f"squares {s} and {t} are not orthogonal")

    def __len__(self) -> int:
        return len(self.squares)


def _freeze(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def mols_prime_power(q: int) -> MolsSet:
    """The q-1 squares L_a(x, y) = a*x + y over Z_q, q prime."""
    if not _is_prime(q):
        raise UnsupportedOrderError(f"{q} is not prime")
    squares = [
        _freeze([[(a * x + y) % q for y in range(q)] for x in range(q)])
        for a in range(1, q)
    ]
    return MolsSet(order=q, squares=tuple(squares))


# Reduction polynomials for the two tiny binary fields needed as MOLS
# ingredients; bit i is the coefficient of x^i.
_BINARY_FIELD_POLY = {4: 0b111, 8: 0b1011}  # x^2+x+1, x^3+x+1


def _gf2_mul(x: int, y: int, poly: int, degree: int) -> int:
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x >> degree & 1:
            x ^= poly
    return r


def mols_binary_field(m: int) -> MolsSet:
    """m-1 MOLS of order m in {4, 8} from the local GF(2^k) tables.

    Addition is xor; L_a(x, y) = a*x + y exactly as in the prime case.
    """
    if m not in _BINARY_FIELD_POLY:
        raise UnsupportedOrderError(f"no binary field of order {m} here")
    poly = _BINARY_FIELD_POLY[m]
    degree = m.bit_length() - 1
    squares = [
        _freeze([[_gf2_mul(a, x, poly, degree) ^ y for y in range(m)] for x in range(m)])
        for a in range(1, m)
    ]
    return MolsSet(order=m, squares=tuple(squares))


def kronecker_mols(a: MolsSet, b: MolsSet) -> MolsSet:
    """MacNeish product: min(|a|, |b|) MOLS of order |a|*|b|.

    Cell ((x1, x2), (y1, y2)) of product square i holds the flattened pair
    (a_i(x1, y1), b_i(x2, y2)); rows, columns and symbols flatten as
    first*n + second with n = b.order.
    """
    m, n = a.order, b.order
    count = min(len(a), len(b))
    squares = []
    for i in range(count):
        sq = [[0] * (m * n) for _ in range(m * n)]
        for x1, x2, y1, y2 in product(range(m), range(n), range(m), range(n)):
            sq[x1 * n + x2][y1 * n + y2] = a.squares[i][x1][y1] * n + b.squares[i][x2][y2]
        squares.append(_freeze(sq))
    return MolsSet(order=m * n, squares=tuple(squares))


def mols_for_order(m: int) -> MolsSet:
    """MOLS for the orders this package needs: primes, 4, 8, and 24."""
    if _is_prime(m):
        return mols_prime_power(m)
    if m in _BINARY_FIELD_POLY:
        return mols_binary_field(m)
    if m == 24:
        return kronecker_mols(mols_binary_field(8), mols_prime_power(3))
    raise UnsupportedOrderError(f"no MOLS construction for order {m}")


# --- transversal designs and inflation --------------------------------------


def td_from_mols(k: int, m: int, mols: MolsSet) -> Gdd:
    """TD(k, m) from k-2 MOLS of order m: a verified k-GDD of type m^k.

    Group i is {i*m, ..., i*m + m - 1}; the block for cell (x, y) takes
    symbol x from group 0, y from group 1, and square i-2's entry at
    (x, y) from group i.
    """
    if k < 2:
        raise GddError("block size must be at least 2")
    if mols.order != m:
        raise GddError(f"MOLS order {mols.order} != {m}")
    if len(mols) < k - 2:
        raise IngredientUnavailableError(
            f"TD({k},{m}) needs {k - 2} MOLS of order {m}, have {len(mols)}"
        )
    groups = tuple(tuple(range(i * m, (i + 1) * m)) for i in range(k))
    blocks = []
    for x in range(m):
        for y in range(m):
            block = [x, m + y]
            for i in range(k - 2):
                block.append((i + 2) * m + mols.squares[i][x][y])
            blocks.append(tuple(block))
    design = Gdd(
        gdd_type=GddType.of(m, k),
        k=k,
        groups=groups,
        blocks=tuple(blocks),
        provenance=f"td({k},{m}) from mols",
    )
    return _require_valid(design, f"TD({k},{m})")


def _trivial_td(k: int) -> Gdd:
    # TD(k, 1): k singleton groups and the one block through them all.
    design = Gdd(
        gdd_type=GddType.of(1, k),
        k=k,
        groups=tuple((i,) for i in range(k)),
        blocks=(tuple(range(k)),),
        provenance=f"td({k},1) trivial",
    )
    return _require_valid(design, f"TD({k},1)")


def td_for_weight(k: int, w: int) -> Gdd:
    """The TD(k, w) used to replace blocks during inflation."""
    if w == 1:
        return _trivial_td(k)
    return td_from_mols(k, w, mols_for_order(w))


def inflate(design: Gdd, weight: int, td: Gdd | None = None) -> Gdd:
    """Wilson's fundamental construction with constant weight.

    Every point p becomes the w points {w*p, ..., w*p + w - 1}, groups
    inflate accordingly, and each block is replaced by a copy of
    TD(k, w) whose k groups sit over the block's k point sets.  Cross
    pairs inside a replaced block are covered exactly once by the TD;
    pairs over two different blocks are covered by the copies for the
    unique block containing the original pair, so the GDD property is
    preserved.  The output is verified, not assumed.
    """
    w = weight
    if w < 1:
        raise GddError("weight must be positive")
    if td is None:
        td = td_for_weight(design.k, w)
    if td.k != design.k or td.gdd_type != GddType.of(w, design.k):
        raise GddError(f"replacement design is not a TD({design.k},{w})")
    td_place = {}
    for i, group in enumerate(td.groups):
        for rank, p in enumerate(sorted(group)):
            td_place[p] = (i, rank)
    groups = tuple(
        tuple(sorted(w * p + j for p in group for j in range(w)))
        for group in design.groups
    )
    blocks = []
    for block in design.blocks:
        for td_block in td.blocks:
            new = [0] * design.k
            for t in td_block:
                i, rank = td_place[t]
                new[i] = w * block[i] + rank
            blocks.append(tuple(sorted(new)))
    inflated = Gdd(
        gdd_type=GddType(tuple((g * w, u) for g, u in design.gdd_type.parts)),
        k=design.k,
        groups=groups,
        blocks=tuple(blocks),
        provenance=f"inflate weight {w} of [{design.provenance or 'input'}]",
    )
    return _require_valid(inflated, f"inflation by {w}")


# --- exact-cover search for small ingredients --------------------------------


def exact_cover_search(
    gdd_type: GddType,
    k: int,
    node_budget: int = 1_000_000,
    seed: int = 0,
) -> Gdd | None:
    """Backtracking exact-cover search over the cross-group pairs.

    Candidate blocks are all k-subsets meeting k distinct groups; a
    solution is a block set covering every cross pair exactly once.  At
    each node the uncovered pair with the fewest usable candidate blocks
    is branched on, with candidate counts maintained incrementally, so
    infeasible states die immediately.

    Returns a verified Gdd, or None when the exhausted search tree proves
    nonexistence.  Raises BudgetExhaustedError when the node budget runs
    out first: that outcome is deliberately distinct from nonexistence.
    Deterministic for a fixed seed (the seed shuffles candidate order
    once, up front).
    """
    n = gdd_type.point_count()
    if n > 40:
        raise GddError(f"{n} points exceeds the desk-scale guard of 40")
    if k < 2:
        raise GddError("block size must be at least 2")
    sizes = gdd_type.group_sizes()
    if len(sizes) < k:
        return None  # fewer groups than a single block needs
    groups = []
    start = 0
    for g in sizes:
        groups.append(tuple(range(start, start + g)))
        start += g
    group_of = {p: i for i, grp in enumerate(groups) for p in grp}

    pair_index: dict[tuple[int, int], int] = {}
    for a in range(n):
        for b in range(a + 1, n):
            if group_of[a] != group_of[b]:
                pair_index[(a, b)] = len(pair_index)
    pair_count = len(pair_index)
    per_block = k * (k - 1) // 2
    if pair_count % per_block:
        return None  # block size cannot tile the cross pairs

    candidates: list[tuple[int, ...]] = []
    for chosen in combinations(range(len(groups)), k):
        for pts in product(*(groups[i] for i in chosen)):
            candidates.append(tuple(sorted(pts)))
    rng = random.Random(seed)
    rng.shuffle(candidates)
    block_pairs = [
        tuple(pair_index[(a, b)] for a, b in combinations(block, 2))
        for block in candidates
    ]
    blocks_of_pair: list[list[int]] = [[] for _ in range(pair_count)]
    for b, pairs in enumerate(block_pairs):
        for p in pairs:
            blocks_of_pair[p].append(b)

    covered = bytearray(pair_count)
    conflicts = [0] * len(candidates)  # covered pairs inside each candidate
    usable = [len(blocks_of_pair[p]) for p in range(pair_count)]
    chosen_blocks: list[int] = []
    nodes = 0

    def place(b: int) -> None:
        for p in block_pairs[b]:
            covered[p] = 1
        for p in block_pairs[b]:
            for b2 in blocks_of_pair[p]:
                conflicts[b2] += 1
                if conflicts[b2] == 1:
                    for q in block_pairs[b2]:
                        if not covered[q]:
                            usable[q] -= 1

    def unplace(b: int) -> None:
        for p in block_pairs[b]:
            for b2 in blocks_of_pair[p]:
                conflicts[b2] -= 1
                if conflicts[b2] == 0:
                    for q in block_pairs[b2]:
                        if not covered[q]:
                            usable[q] += 1
        for p in block_pairs[b]:
            covered[p] = 0

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExhaustedError(nodes)
        best_pair = -1
        best_count = None
        for p in range(pair_count):
            if not covered[p]:
                c = usable[p]
                if c == 0:
                    return False
                if best_count is None or c < best_count:
                    best_pair, best_count = p, c
                    if c == 1:
                        break
        if best_pair < 0:
            return True
        for b in blocks_of_pair[best_pair]:
            if conflicts[b] == 0:
                chosen_blocks.append(b)
                place(b)
                if search():
                    return True
                unplace(b)
                chosen_blocks.pop()
        return False

    if not search():
        return None
    design = Gdd(
        gdd_type=gdd_type,
        k=k,
        groups=tuple(groups),
        blocks=tuple(sorted(candidates[b] for b in chosen_blocks)),
        provenance=f"exact cover search (seed {seed})",
    )
    return _require_valid(design, f"search result for {gdd_type}")


# --- ingredient store --------------------------------------------------------
#
# Ingredient files: header `gdd <k> <type>`, then one `group <points...>`
# line per group and one `block <points...>` line per block.  Lines
# starting with `#` are comments.  Every loaded file is re-verified.

ENV_INGREDIENTS = "DESIGN_FORGE_INGREDIENTS"


def format_gdd_file(design: Gdd) -> str:
    lines = [f"gdd {design.k} {design.gdd_type}"]
    lines.extend("group " + " ".join(map(str, g)) for g in design.groups)
    lines.extend("block " + " ".join(map(str, b)) for b in design.blocks)
    return "\n".join(lines) + "\n"


def parse_gdd_file(text: str, what: str = "ingredient") -> Gdd:
    header: tuple[int, str] | None = None
    groups: list[tuple[int, ...]] = []
    blocks: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != "gdd" or len(tokens) < 3:
                raise IngredientFileError(f"{what} line {lineno}: expected 'gdd <k> <type>'")
            header = (int(tokens[1]), " ".join(tokens[2:]))
            continue
        try:
            points = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise IngredientFileError(f"{what} line {lineno}: non-integer point") from None
        if tokens[0] == "group":
            groups.append(points)
        elif tokens[0] == "block":
            blocks.append(points)
        else:
            raise IngredientFileError(f"{what} line {lineno}: unknown keyword {tokens[0]!r}")
    if header is None:
        raise IngredientFileError(f"{what}: missing 'gdd' header")
    k, type_text = header
    design = Gdd(
        gdd_type=GddType.parse(type_text),
        k=k,
        groups=tuple(groups),
        blocks=tuple(blocks),
        provenance=f"loaded {what}",
    )
    report = verify_gdd(design)
    if not report.passed:
        raise IngredientFileError(
            f"{what}: fails verification "
            f"({len(report.group_errors)} group, {len(report.block_errors)} block, "
            f"{len(report.pair_errors)} pair errors)"
        )
    return design


def write_gdd_file(design: Gdd, path: str | Path) -> None:
    Path(path).write_text(format_gdd_file(design), encoding="utf-8", newline="\n")


def read_gdd_file(path: str | Path) -> Gdd:
    return parse_gdd_file(Path(path).read_text(encoding="utf-8"), what=str(path))


class IngredientStore:
    """A directory of verified small GDDs consumed by recursive constructions."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    @staticmethod
    def default() -> "IngredientStore":
        env = os.environ.get(ENV_INGREDIENTS)
        if env:
            return IngredientStore(env)
        return IngredientStore(resources.files("design_forge").joinpath("data/ingredients"))

    def find(self, k: int, gdd_type: GddType) -> Gdd | None:
        """Load and verify the stored (k, type) ingredient, or None if absent."""
        if not self.directory.is_dir():
            return None
        for path in sorted(self.directory.glob("*.txt")):
            head = path.read_text(encoding="utf-8").lstrip().splitlines()
            if not head:
                continue
            tokens = head[0].split()
            if (
                len(tokens) >= 3
                and tokens[0] == "gdd"
                and tokens[1] == str(k)
                and " ".join(tokens[2:]) == str(gdd_type)
            ):
                return read_gdd_file(path)
        return None


# --- the 4-GDDs of type 24^t -------------------------------------------------


def _relabel_canonical(design: Gdd) -> Gdd:
    """Renumber points so group i is a consecutive ascending range."""
    order = sorted(design.groups, key=min)
    mapping: dict[int, int] = {}
    for group in order:
        for p in sorted(group):
            mapping[p] = len(mapping)
    relabelled = Gdd(
        gdd_type=design.gdd_type,
        k=design.k,
        groups=tuple(tuple(mapping[p] for p in sorted(g)) for g in order),
        blocks=tuple(sorted(tuple(sorted(mapping[p] for p in b)) for b in design.blocks)),
        provenance=design.provenance,
    )
    return _require_valid(relabelled, "relabelled design")


def gdd_24_t(t: int, store: IngredientStore | None = None) -> Gdd:
    """A verified 4-GDD of type 24^t, with group i = {24i, ..., 24i+23}.

    t = 4 is the transversal design TD(4,24).  For t >= 5 an ingredient
    4-GDD of type 6^t (inflated by weight 4) or 3^t (inflated by weight 8)
    is taken from the store; a missing 3^t ingredient is regenerated by
    exact_cover_search when the point count is desk-scale.  The route
    taken is recorded in the provenance field.
    """
    if t < 4:
        raise GddError(f"4-GDDs of type 24^t exist for t >= 4, got t = {t}")
    if t == 4:
        mols24 = kronecker_mols(mols_binary_field(8), mols_prime_power(3))
        td = td_from_mols(4, 24, mols24)
        return Gdd(
            gdd_type=td.gdd_type,
            k=4,
            groups=td.groups,
            blocks=td.blocks,
            provenance="td(4,24) from kronecker mols(8) x mols(3)",
        )
    store = store or IngredientStore.default()
    for size, weight in ((6, 4), (3, 8)):
        ingredient = store.find(4, GddType.of(size, t))
        if ingredient is not None:
            inflated = inflate(_relabel_canonical(ingredient), weight)
            return _relabel_canonical(
                Gdd(
                    gdd_type=inflated.gdd_type,
                    k=4,
                    groups=inflated.groups,
                    blocks=inflated.blocks,
                    provenance=f"inflate stored 4-gdd {size}^{t} by weight {weight}",
                )
            )
    if 3 * t <= 40:
        try:
            regenerated = exact_cover_search(GddType.of(3, t), 4)
        except BudgetExhaustedError:
            regenerated = None
        if regenerated is not None:
            inflated = inflate(regenerated, 8)
            return _relabel_canonical(
                Gdd(
                    gdd_type=inflated.gdd_type,
                    k=4,
                    groups=inflated.groups,
                    blocks=inflated.blocks,
                    provenance=f"inflate regenerated 4-gdd 3^{t} by weight 8",
                )
            )
    raise IngredientUnavailableError(
        f"no ingredient 4-GDD of type 6^{t} or 3^{t} available for type 24^{t}"
    )
