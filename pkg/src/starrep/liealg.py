"""The Lie algebra sl(n+1, C): basis, real forms, and the rank-one chart.

The preferred basis is H_k = E_{k+1,k+1} - E_{11} for k = 1..n followed
by the off-diagonal matrix units E_{ij} in lexicographic (i, j) order.
The chart (p, q) -> rank-one matrix realizes the coordinate functions
X -> trace(chart * X) as phase-space polynomials of degree <= 3 that are
linear in the q variables; their Poisson brackets reproduce the matrix
commutator exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import Matrix
from .moyal import poisson
from .poly import Polynomial, phase_space
from .scalars import GaussianRational, I, ONE, ZERO

COMPACT_FORM = "su(n+1)"
NONCOMPACT_FORM = "su(1,n)"


def _unit(size: int, i: int, j: int) -> Matrix:
    """Matrix unit E_ij, 1-based indices."""
    return Matrix(
        [[ONE if (r == i - 1 and c == j - 1) else ZERO for c in range(size)] for r in range(size)]
    )


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def require_traceless(x: Matrix):
    if x.rows != x.cols:
        raise ValueError("Lie algebra elements must be square matrices")
    if x.trace():
        raise ValueError("matrix is not traceless, so not in sl(n+1)")


class LieBasis:
    """Ordered basis of sl(n+1, C) with label lookup and bracket tables."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need n >= 1")
        size = n + 1
        labels: list[str] = []
        matrices: list[Matrix] = []
        for k in range(1, n + 1):
            labels.append(f"H{k}")
            matrices.append(_unit(size, k + 1, k + 1) - _unit(size, 1, 1))
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                if i != j:
                    labels.append(f"E{i}{j}")
                    matrices.append(_unit(size, i, j))
        self.n = n
        self.labels = labels
        self.matrices = matrices
        self._index = {label: k for k, label in enumerate(labels)}
        self._bracket_cache: dict[tuple[int, int], dict[int, GaussianRational]] = {}

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown basis label {label!r}") from None

    def matrix(self, label: str) -> Matrix:
        return self.matrices[self.index(label)]

    def coords(self, x: Matrix) -> list[GaussianRational]:
        """Coordinates of a traceless matrix in this basis (closed form)."""
        require_traceless(x)
        if x.rows != self.n + 1:
            raise ValueError(f"matrix size {x.rows} does not match n={self.n}")
        out = []
        for label in self.labels:
            if label.startswith("H"):
                k = int(label[1:])
                out.append(x[k, k])
            else:
                i, j = int(label[1]), int(label[2])
                out.append(x[i - 1, j - 1])
        return out

    def bracket_coords(self, i: int, j: int) -> dict[int, GaussianRational]:
        """Sparse coordinates of [basis_i, basis_j]."""
        cached = self._bracket_cache.get((i, j))
        if cached is None:
            coords = self.coords(commutator(self.matrices[i], self.matrices[j]))
            cached = {k: c for k, c in enumerate(coords) if c}
            self._bracket_cache[(i, j)] = cached
        return cached

    def combination(self, coords) -> Matrix:
        acc = Matrix.zeros(self.n + 1, self.n + 1)
        for k, c in enumerate(coords):
            if c:
                acc = acc + self.matrices[k].scale(c)
        return acc


@lru_cache(maxsize=None)
def basis_sl(n: int) -> LieBasis:
    """Basis of sl(n+1, C): H_1..H_n then E_ij, dimension (n+1)^2 - 1."""
    return LieBasis(n)


def structure_constants(n: int) -> dict[tuple[str, str], dict[str, GaussianRational]]:
    """Bracket table [b_i, b_j] = sum_k c_ij^k b_k for i < j."""
    basis = basis_sl(n)
    table = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            coords = basis.bracket_coords(i, j)
            if coords:
                table[(basis.labels[i], basis.labels[j])] = {
                    basis.labels[k]: c for k, c in coords.items()
                }
    return table


def structure_constants_json(n: int) -> dict:
    """JSON-ready structure-constant table keyed by basis labels."""
    table = structure_constants(n)
    return {
        "n": n,
        "basis": basis_sl(n).labels,
        "brackets": {
            f"[{li},{lj}]": {lk: str(c) for lk, c in sorted(coeffs.items())}
            for (li, lj), coeffs in sorted(table.items())
        },
    }


# -- real forms ---------------------------------------------------------------

def real_form_basis(n: int, form: str) -> list[tuple[str, Matrix]]:
    """Real basis of su(n+1) or su(1,n) inside sl(n+1, C).

    Every element X satisfies X* = -X for su(n+1) and X* = -J X J with
    J = diag(-1, I_n) for su(1,n); both families are traceless.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if form not in (COMPACT_FORM, NONCOMPACT_FORM):
        raise ValueError(f"unknown real form {form!r}")
    size = n + 1
    basis = basis_sl(n)
    out: list[tuple[str, Matrix]] = []
    for k in range(1, n + 1):
        out.append((f"iH{k}", basis.matrix(f"H{k}").scale(I)))
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            eij = _unit(size, i, j)
            eji = _unit(size, j, i)
            if form == COMPACT_FORM or i >= 2:
                out.append((f"X{i}{j}", eij - eji))
                out.append((f"Y{i}{j}", (eij + eji).scale(I)))
            else:
                # mixing the first row with the block changes the signature
                out.append((f"U{i}{j}", eij + eji))
                out.append((f"V{i}{j}", (eij - eji).scale(I)))
    return out


def real_form_identity_holds(x: Matrix, n: int, form: str) -> bool:
    """Check the defining identity of the real form for one matrix."""
    star = x.conjugate_transpose()
    if form == COMPACT_FORM:
        return star == -x
    j = Matrix(
        [
            [(-ONE if r == 0 else ONE) if r == c else ZERO for c in range(n + 1)]
            for r in range(n + 1)
        ]
    )
    return star == -(j * x * j)


# -- the rank-one chart and coordinate functions -------------------------------

@dataclass(frozen=True)
class SymbolicMatrix:
    """Matrix of phase-space polynomials."""

    n: int
    entries: tuple[tuple[Polynomial, ...], ...]

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return self.n + 1

    def trace(self) -> Polynomial:
        acc = Polynomial.zero(phase_space(self.n))
        for i in range(self.size):
            acc = acc + self.entries[i][i]
        return acc

    def minor_det(self, r1: int, r2: int, c1: int, c2: int) -> Polynomial:
        return self.entries[r1][c1] * self.entries[r2][c2] - self.entries[r1][c2] * self.entries[r2][c1]

    def all_minors_vanish(self) -> bool:
        for r1 in range(self.size):
            for r2 in range(r1 + 1, self.size):
                for c1 in range(self.size):
                    for c2 in range(c1 + 1, self.size):
                        if not self.minor_det(r1, r2, c1, c2).is_zero:
                            return False
        return True

    def evaluate(self, point: dict) -> Matrix:
        return Matrix([[e.evaluate(point) for e in row] for row in self.entries])


@lru_cache(maxsize=None)
def rank_one_chart(n: int) -> SymbolicMatrix:
    """Chart (p, q) -> rank-one traceless matrix.

    Row 1 is (-sum_j p_j q_j, q_1, ..., q_n) and row k+1 is p_k times
    row 1, so every 2x2 minor vanishes identically.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    space = phase_space(n)
    p = [Polynomial.variable(space, f"p{k}") for k in range(1, n + 1)]
    q = [Polynomial.variable(space, f"q{k}") for k in range(1, n + 1)]
    contraction = Polynomial.zero(space)
    for pk, qk in zip(p, q):
        contraction = contraction + pk * qk
    first_row = [-contraction] + q
    rows = [tuple(first_row)]
    for k in range(n):
        rows.append(tuple(p[k] * entry for entry in first_row))
    return SymbolicMatrix(n, tuple(rows))


def coordinate_function(x: Matrix) -> Polynomial:
    """Phase-space symbol of a Lie algebra element: trace(chart * X).

    Linear in X, of total degree <= 3 and of degree <= 1 in the q
    variables.
    """
    require_traceless(x)
    n = x.rows - 1
    chart = rank_one_chart(n)
    acc = Polynomial.zero(phase_space(n))
    for i in range(n + 1):
        for j in range(n + 1):
            c = x[j, i]
            if c:
                acc = acc + chart[i, j].scale(c)
    return acc


# -- the nilpotent subalgebra behind the chart normalization -------------------

@dataclass
class HeisenbergReport:
    """Closure data for span{E_{n+1,2}..E_{n+1,n}, E_{21}..E_{n+1,1}}."""

    n: int
    dim: int
    center_label: str
    center_symbol: str
    closed: bool
    brackets_ok: bool
    symbols_ok: bool
    nonzero_brackets: list[str]

    @property
    def ok(self) -> bool:
        return self.closed and self.brackets_ok and self.symbols_ok


def heisenberg_report(n: int) -> HeisenbergReport:
    """Verify the nilpotent span is Heisenberg of dimension 2n-1.

    The only nonzero brackets must be [E_{n+1,k}, E_{k,1}] = E_{n+1,1}
    for k = 2..n, with E_{n+1,1} central, and the coordinate functions
    of the members must be the monomials p_{k-1} q_n, q_{k-1} and q_n.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    size = n + 1
    members = [(f"E{n + 1}{k}", _unit(size, n + 1, k)) for k in range(2, n + 1)]
    members += [(f"E{k}1", _unit(size, k, 1)) for k in range(2, n + 2)]
    center_label = f"E{n + 1}1"
    center = _unit(size, n + 1, 1)

    closed = True
    brackets_ok = True
    nonzero = []
    for a_label, a in members:
        for b_label, b in members:
            br = commutator(a, b)
            if br.is_zero:
                continue
            nonzero.append(f"[{a_label},{b_label}]")
            expected_pair = (
                a_label.startswith(f"E{n + 1}")
                and a_label != center_label
                and b_label == f"E{a_label[len(str(n + 1)) + 1:]}1"
            )
            if br != center and br != -center:
                closed = False
            if not expected_pair and not (
                b_label.startswith(f"E{n + 1}") and b_label != center_label
            ):
                brackets_ok = False
    # center must commute with everything
    for _, a in members:
        if not commutator(center, a).is_zero:
            brackets_ok = False

    space = phase_space(n)
    symbols_ok = True
    for k in range(2, n + 1):
        expected = Polynomial.variable(space, f"p{k - 1}") * Polynomial.variable(space, f"q{n}")
        if coordinate_function(_unit(size, n + 1, k)) != expected:
            symbols_ok = False
        if coordinate_function(_unit(size, k, 1)) != Polynomial.variable(space, f"q{k - 1}"):
            symbols_ok = False
    if coordinate_function(center) != Polynomial.variable(space, f"q{n}"):
        symbols_ok = False

    return HeisenbergReport(
        n=n,
        dim=len(members),
        center_label=center_label,
        center_symbol=str(coordinate_function(center)),
        closed=closed,
        brackets_ok=brackets_ok,
        symbols_ok=symbols_ok,
        nonzero_brackets=sorted(nonzero),
    )


def poisson_represents_bracket(n: int) -> bool:
    """Poisson brackets of coordinate functions match matrix brackets."""
    basis = basis_sl(n)
    symbols = [coordinate_function(m) for m in basis.matrices]
    for i, a in enumerate(basis.matrices):
        for j, b in enumerate(basis.matrices):
            lhs = poisson(symbols[i], symbols[j])
            rhs = coordinate_function(commutator(a, b))
            if lhs != rhs:
                return False
    return True
