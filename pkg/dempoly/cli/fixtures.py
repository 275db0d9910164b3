"""Published inequality lists, tables and point families as fixtures.

Every fixture is regenerated from the general path generators and compared
with the published data. Misprints are encoded as annotated corrections:
the comparison runs against the corrected form and the literal form is
kept for audit.
"""

from dataclasses import (dataclass, field)
from enum import Enum
import logging
import re
from typing import (
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from dempoly.errors.exceptions import InvalidInputError
from dempoly.pathgen.paths import BoundForm
from dempoly.polytope.points import (
    MultiExponent,
    enumerate_points,
)
from dempoly.polytope.system import (
    Inequality,
    InequalitySystem,
    build_system,
)
from dempoly.rootsys.cartan import (
    Family,
    LieType,
)
from dempoly.rootsys.roots import (
    Root,
    root_by_label,
    root_from_label,
)
from dempoly.rootsys.weights import fundamental_weight

# Get logger instance
logger = logging.getLogger(__name__)

TERM_PATTERN = re.compile(r"(\d*)s(\[\s*\d+\s*,\s*-?\d+\s*\])")
BOUND_PATTERN = re.compile(r"(\d*)m(\d+)")

Row = Tuple[Tuple[int, ...], Tuple[int, ...]]


class ComparisonMode(Enum):
    """Enumerator for the ways a fixture is compared.

    Attributes:
        inequality_list: The generated system equals the published list.
        inequality_rows: Every published row is a generated inequality.
        point_set: The published polytope has the generated point set.
        lemma_points: The published points lie in the generated point set.
    """
    inequality_list = "inequality-list"
    inequality_rows = "inequality-rows"
    point_set = "point-set"
    lemma_points = "lemma-points"


class Gate(Enum):
    """Enumerator for the effect of a failing fixture.

    Attributes:
        hard: A failure fails the fixture check.
        soft: A failure is reported only.
    """
    hard = "hard"
    soft = "soft"


@dataclass(frozen=True)
class Typo:
    """Misprint in the published data and its correction."""
    literal: str
    corrected: str

    def to_dict(self) -> Dict[str, str]:
        return {"literal": self.literal, "corrected": self.corrected}


@dataclass
class Outcome:
    """Differences found by a fixture check.

    Attributes:
        missing: Published items that were not generated.
        unexpected: Generated items that were not published.
        flagged: Known discrepancies, reported but not failed.
    """
    missing: List[str] = field(default_factory=list)
    unexpected: List[str] = field(default_factory=list)
    flagged: List[str] = field(default_factory=list)

    def extend(self, other: "Outcome") -> None:
        self.missing.extend(other.missing)
        self.unexpected.extend(other.unexpected)
        self.flagged.extend(other.flagged)


@dataclass(frozen=True)
class Fixture:
    """Published data with the check regenerating it.

    Args:
        identifier: Short name, e.g. ``table1-sp8``.
        source: Where the data is published.
        mode: Comparison mode.
        check: Regenerates and compares the data.
        gate: Whether a failure fails the fixture check.
        typos: Misprints corrected in the fixture data.
    """
    identifier: str
    source: str
    mode: ComparisonMode
    check: Callable[[], Outcome]
    gate: Gate = Gate.hard
    typos: Tuple[Typo, ...] = ()


@dataclass
class FixtureResult:
    """Outcome of one fixture."""
    fixture: Fixture
    outcome: Outcome

    @property
    def passed(self) -> bool:
        return not self.outcome.missing and not self.outcome.unexpected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.fixture.identifier,
            "source": self.fixture.source,
            "mode": self.fixture.mode.value,
            "gate": self.fixture.gate.value,
            "passed": self.passed,
            "missing": self.outcome.missing,
            "unexpected": self.outcome.unexpected,
            "known_discrepancies": self.outcome.flagged,
            "typos": [typo.to_dict() for typo in self.fixture.typos],
        }


def parse_inequality(text: str, system: InequalitySystem) -> Row:
    """Parse ``"2s[1,1] + s[1,-2] <= m1 + 2m2"`` in the coordinates of
    `system`.

    A right-hand side ``0`` is the zero form.

    Raises:
        dempoly.errors.exceptions.InvalidInputError: Malformed text or a
            root outside the inversion set.
    """
    try:
        lhs, rhs = text.split("<=")
    except ValueError:
        raise InvalidInputError(f"'{text}' is not an inequality")
    lie_type = system.lie_type
    positions = system.poset.positions()
    coeffs = [0] * system.dim
    for term in lhs.split("+"):
        match = TERM_PATTERN.fullmatch(term.strip())
        if match is None:
            raise InvalidInputError(f"malformed term '{term.strip()}'")
        root = root_from_label(lie_type, "a" + match.group(2))
        if root not in positions:
            raise InvalidInputError(
                f"{root.label} is not a coordinate of {lie_type}"
            )
        coeffs[positions[root]] += int(match.group(1) or 1)
    bound = [0] * lie_type.rank
    if rhs.strip() != "0":
        for term in rhs.split("+"):
            match = BOUND_PATTERN.fullmatch(term.strip())
            if match is None:
                raise InvalidInputError(f"malformed bound '{term.strip()}'")
            bound[int(match.group(2)) - 1] += int(match.group(1) or 1)
    return tuple(coeffs), tuple(bound)


def _render(row: Row, system: InequalitySystem) -> str:
    return Inequality(row[0], BoundForm(row[1])).render(system.order)


def compare_inequalities(
    system: InequalitySystem,
    expected: Sequence[str],
    exact: bool = True,
) -> Outcome:
    """Compare published inequalities with the generated ones.

    Args:
        system: Generated system.
        expected: Published inequalities in the text form of
            :py:func:`parse_inequality`.
        exact: Whether generated inequalities beyond `expected` count as
            differences.
    """
    wanted = [parse_inequality(text, system) for text in expected]
    generated = [(ineq.coeffs, ineq.bound.b) for ineq in system.inequalities]
    outcome = Outcome()
    outcome.missing = [
        _render(row, system) for row in wanted if row not in generated
    ]
    if exact:
        outcome.unexpected = [
            _render(row, system) for row in generated if row not in wanted
        ]
    return outcome


def _point(
    system: InequalitySystem,
    entries: Dict[Root, int],
) -> MultiExponent:
    positions = system.poset.positions()
    point = [0] * system.dim
    for root, s in entries.items():
        point[positions[root]] += s
    return tuple(point)


def _describe(point: Sequence[int], system: InequalitySystem) -> str:
    terms = [
        (f"{s}" if s > 1 else "") + "e" + label[1:]
        for label, s in zip(system.order, point) if s
    ]
    return " + ".join(terms) if terms else "0"


# Published inequality lists

INTRO_SP6 = (
    "s[1,1] <= m1",
    "s[1,1] + s[1,2] <= m1 + m2",
    "s[1,1] + s[1,2] + s[1,-1] <= m1 + m2 + m3",
    "s[1,1] + s[1,2] + s[1,3] + s[1,-1] <= m1 + m2 + 2m3",
    "s[1,1] + s[1,2] + s[1,3] + s[1,-2] + s[1,-1] <= m1 + 2m2 + 2m3",
    "2s[1,1] + 2s[1,2] + s[1,3] + 2s[1,-1] <= 2m1 + 2m2 + 2m3",
    "2s[1,1] + s[1,2] + s[1,3] + s[1,-2] + 2s[1,-1] <= 2m1 + 2m2 + 2m3",
    "2s[1,1] + 2s[1,2] + s[1,3] + s[1,-2] + 2s[1,-1] <= 2m1 + 3m2 + 2m3",
)

INTRO_SL4 = (
    "s[1,1] <= m1",
    "s[1,1] + s[1,2] <= m1 + m2",
    "s[2,3] + s[3,3] <= m2 + m3",
    "s[3,3] <= m3",
    "s[1,1] + s[1,2] + s[1,3] + s[3,3] <= m1 + m2 + m3",
    "s[1,1] + s[1,3] + s[2,3] + s[3,3] <= m1 + m2 + m3",
    "s[1,1] + s[1,2] + s[1,3] + s[2,3] + s[3,3] <= m1 + 2m2 + m3",
)

# S(omega_2) of the sl4 example, as exponents per label
INTRO_SL4_POINTS: Tuple[Dict[str, int], ...] = (
    {},
    {"a[1,2]": 1},
    {"a[1,3]": 1},
    {"a[2,3]": 1},
    {"a[1,2]": 1, "a[2,3]": 1},
)

# rectangle constraint of the full PBW polytope violated by the last point
INTRO_SL4_RECTANGLE = "s[1,2] + s[2,3] <= m2"

TABLE1_SP8 = (
    # j = 4
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + 2s[1,-1] "
    "<= 2m1 + 2m2 + 2m3 + 2m4",
    "s[1,1] + s[1,2] + s[1,3] + s[1,4] + s[1,-1] <= m1 + m2 + m3 + 2m4",
    # j = 3
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + s[1,-3] + 2s[1,-1] "
    "<= 2m1 + 2m2 + 3m3 + 2m4",
    "2s[1,1] + 2s[1,2] + s[1,3] + s[1,4] + s[1,-3] + 2s[1,-1] "
    "<= 2m1 + 2m2 + 2m3 + 2m4",
    "s[1,1] + s[1,2] + s[1,3] + s[1,4] + s[1,-3] + s[1,-1] "
    "<= m1 + m2 + 2m3 + 2m4",
    # j = 2
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + s[1,-3] + s[1,-2] + 2s[1,-1] "
    "<= 2m1 + 3m2 + 3m3 + 2m4",
    "2s[1,1] + 2s[1,2] + s[1,3] + s[1,4] + s[1,-3] + s[1,-2] + 2s[1,-1] "
    "<= 2m1 + 3m2 + 2m3 + 2m4",
    "2s[1,1] + s[1,2] + s[1,3] + s[1,4] + s[1,-3] + s[1,-2] + 2s[1,-1] "
    "<= 2m1 + 2m2 + 2m3 + 2m4",
    "s[1,1] + s[1,2] + s[1,3] + s[1,4] + s[1,-3] + s[1,-2] + s[1,-1] "
    "<= m1 + 2m2 + 2m3 + 2m4",
)

TABLE3_SO9 = (
    # j = 4
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + 2s[1,-4] "
    "<= 2m1 + 2m2 + 2m3 + 2m4",
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + s[1,-4] "
    "<= 2m1 + 2m2 + 2m3 + m4",
    # j = 3
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + 2s[1,-4] + 2s[1,-3] "
    "<= 2m1 + 2m2 + 4m3 + 2m4",
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + s[1,-4] + s[1,-3] "
    "<= 2m1 + 2m2 + 3m3 + m4",
    "2s[1,1] + 2s[1,2] + s[1,3] + s[1,4] + s[1,-4] + s[1,-3] "
    "<= 2m1 + 2m2 + 2m3 + m4",
    # j = 2
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + 2s[1,-4] + 2s[1,-3] "
    "+ 2s[1,-2] <= 2m1 + 4m2 + 4m3 + 2m4",
    "2s[1,1] + 2s[1,2] + 2s[1,3] + s[1,4] + s[1,-4] + s[1,-3] + s[1,-2] "
    "<= 2m1 + 3m2 + 3m3 + m4",
    "2s[1,1] + 2s[1,2] + s[1,3] + s[1,4] + s[1,-4] + s[1,-3] + s[1,-2] "
    "<= 2m1 + 3m2 + 2m3 + m4",
    "2s[1,1] + s[1,2] + s[1,3] + s[1,4] + s[1,-4] + s[1,-3] + s[1,-2] "
    "<= 2m1 + 2m2 + 2m3 + m4",
)


def _check_intro_sp6() -> Outcome:
    return compare_inequalities(build_system(LieType("C", 3)), INTRO_SP6)


def _check_intro_sl4() -> Outcome:
    system = build_system(LieType("A", 3))
    outcome = compare_inequalities(system, INTRO_SL4)
    points = enumerate_points(system, (0, 1, 0))
    expected = {
        _point(system, {
            root_from_label(system.lie_type, label): s
            for label, s in entries.items()
        })
        for entries in INTRO_SL4_POINTS
    }
    outcome.extend(_compare_point_sets(points.as_set(), expected, system))
    coeffs, bound = parse_inequality(INTRO_SL4_RECTANGLE, system)
    rectangle = Inequality(coeffs, BoundForm(bound))
    last = _point(system, {
        root_from_label(system.lie_type, label): s
        for label, s in INTRO_SL4_POINTS[-1].items()
    })
    if rectangle.slack(last, (0, 1, 0)) >= 0:
        outcome.missing.append(
            f"{_describe(last, system)} violating {INTRO_SL4_RECTANGLE}"
        )
    return outcome


def _check_table(
    lie_type: LieType,
    rows: Sequence[str],
) -> Callable[[], Outcome]:
    def check() -> Outcome:
        system = build_system(lie_type, include_redundant=True)
        return compare_inequalities(system, rows, exact=False)
    return check


def _compare_point_sets(
    generated: Set[MultiExponent],
    published: Set[MultiExponent],
    system: InequalitySystem,
    prefix: str = "",
) -> Outcome:
    outcome = Outcome()
    outcome.missing = [
        prefix + _describe(p, system) for p in sorted(published - generated)
    ]
    outcome.unexpected = [
        prefix + _describe(p, system) for p in sorted(generated - published)
    ]
    return outcome


def _row(
    system: InequalitySystem,
    entries: Sequence[Tuple[Root, int]],
    bound: int,
) -> Inequality:
    coeffs = [0] * system.dim
    positions = system.poset.positions()
    for root, c in entries:
        coeffs[positions[root]] += c
    b = [0] * system.lie_type.rank
    b[0] = bound
    return Inequality(tuple(coeffs), BoundForm(tuple(b)))


def _published_points(
    system: InequalitySystem,
    rows: List[Inequality],
) -> Set[MultiExponent]:
    """Points of a published polytope; row bounds are read at ``m_1 = 1``.
    """
    published = InequalitySystem(
        word=system.word,
        poset=system.poset,
        inequalities=tuple(rows),
    )
    unit = tuple(1 if pos == 0 else 0 for pos in range(system.lie_type.rank))
    return enumerate_points(published, unit).as_set()


def table2_rows(system: InequalitySystem, i: int) -> List[Inequality]:
    """Published polytope of ``S(omega_i)`` in type C, with ``m_i = 1``."""
    lt = system.lie_type
    n = lt.rank

    def a(j: int, barred: bool = False) -> Root:
        return root_by_label(lt, 1, j, barred)

    unbarred = [a(j) for j in range(i, n + 1)]
    bottom = a(1, True)
    rows = []
    if i > 1:
        rows.append(_row(system, [(a(j), 1) for j in range(1, i)], 0))
    if i == 1:
        every = unbarred + [a(j, True) for j in range(n - 1, 0, -1)]
        rows.append(_row(system, [(r, 1) for r in every], 1))
        return rows
    if i < n:
        middle = [a(j, True) for j in range(n - 1, i, -1)]
    else:
        middle = [a(j, True) for j in range(n - 1, 1, -1)]
    barred = [a(j, True) for j in range(n - 1, 1, -1)]
    rows.append(_row(
        system, [(r, 1) for r in unbarred + middle + [bottom]], 1
    ))
    rows.append(_row(
        system, [(r, 1) for r in unbarred + barred + [bottom]], 2
    ))
    rows.append(_row(
        system, [(r, 1) for r in unbarred + barred] + [(bottom, 2)], 2
    ))
    return rows


def table4_rows(system: InequalitySystem, i: int) -> List[Inequality]:
    """Published polytope of ``S(omega_i)`` in type B, with ``m_i = 1``."""
    lt = system.lie_type
    n = lt.rank

    def a(j: int, barred: bool = False) -> Root:
        return root_by_label(lt, 1, j, barred)

    rows = []
    if i > 1:
        rows.append(_row(system, [(a(j), 1) for j in range(1, i)], 0))
    if i == n:
        every = [a(n)] + [a(j, True) for j in range(n, 1, -1)]
        rows.append(_row(system, [(r, 1) for r in every], 1))
        return rows
    head = [a(j) for j in range(i, n)]
    tail = [a(j, True) for j in range(n, i, -1)]
    every = head + [a(n)] + [a(j, True) for j in range(n, 1, -1)]
    rows.append(_row(system, [(r, 1) for r in head + tail], 1))
    rows.append(_row(system, [(r, 1) for r in every], 2))
    rows.append(_row(
        system,
        [(r, 2) for r in head] + [(a(n), 1)] + [(r, 2) for r in tail],
        2,
    ))
    return rows


def _check_fundamental_table(
    family: Family,
    ranks: Sequence[int],
    rows: Callable[[InequalitySystem, int], List[Inequality]],
    known: Callable[[int, int], Optional[str]],
) -> Callable[[], Outcome]:
    def check() -> Outcome:
        outcome = Outcome()
        for n in ranks:
            lt = LieType(family, n)
            system = build_system(lt)
            for i in range(1, n + 1):
                generated = enumerate_points(
                    system, fundamental_weight(lt, i)
                ).as_set()
                published = _published_points(system, rows(system, i))
                found = _compare_point_sets(
                    generated, published, system, f"{lt} omega_{i}: "
                )
                note = known(n, i)
                if note is not None:
                    if found.missing or found.unexpected:
                        outcome.flagged.append(
                            f"{lt} omega_{i}: {note}; "
                            f"{len(generated)} generated vs "
                            f"{len(published)} published points"
                        )
                    else:
                        outcome.flagged.append(
                            f"{lt} omega_{i}: {note}; point sets agree"
                        )
                    continue
                outcome.extend(found)
        return outcome
    return check


def _table2_known(n: int, i: int) -> Optional[str]:
    if i == n:
        return (
            "row 2 bounds s[1,n] + .. + s[1,-1] by m_n, the general "
            "inequalities give 2m_n"
        )
    return None


def _table4_known(n: int, i: int) -> Optional[str]:
    if i < n:
        return "row 2 omits s[1,n] from its support"
    return None


def lemma_points(word_system: InequalitySystem, i: int) -> Iterator[
    Dict[Root, int]
]:
    """Points claimed to lie in ``S(omega_i)`` for the word starting at 1.

    Type A uses the hook ``alpha_(1,n)``; the type B pair ranges are
    restricted to ``j' <= i`` and ``i <= n - 1``.
    """
    lt = word_system.lie_type
    n = lt.rank
    family = lt.family
    r_i = [r for r in word_system.poset.elements if r.coeffs[i - 1] > 0]

    def a(start: int, end: int, barred: bool = False) -> Root:
        return root_by_label(lt, start, end, barred)

    def pair(x: Root, y: Root) -> Dict[Root, int]:
        return {x: 2} if x == y else {x: 1, y: 1}

    yield {}
    for root in r_i:
        yield {root: 1}
    if family is Family.A:
        for p in range(i, n):
            for q in range(2, i + 1):
                yield pair(a(1, p), a(q, n))
    elif family is Family.C or (family is Family.B and i < n):
        for j in range(i, n + 1):
            for jp in range(2, i + 1):
                yield pair(a(1, j), a(1, jp, True))
        for j in range(2, i + 1):
            for jp in range(j, i + 1):
                yield pair(a(1, j, True), a(1, jp, True))
        if family is Family.B:
            yield {a(1, n): 2}
    elif family is Family.D:
        if i <= n - 2:
            yield pair(a(1, n - 1), a(1, n, True))
            for j in range(i, n):
                for jp in range(2, i + 1):
                    yield pair(a(1, j), a(1, jp, True))
            for j in range(2, i + 1):
                for jp in range(2, i + 1):
                    if j != jp:
                        yield pair(a(1, j, True), a(1, jp, True))


def _check_lemma(
    family: Family,
    ranks: Sequence[int],
) -> Callable[[], Outcome]:
    def check() -> Outcome:
        outcome = Outcome()
        for n in ranks:
            lt = LieType(family, n)
            system = build_system(lt)
            for i in range(1, n + 1):
                points = enumerate_points(system, fundamental_weight(lt, i))
                for entries in lemma_points(system, i):
                    point = _point(system, entries)
                    if point not in points:
                        outcome.missing.append(
                            f"{lt} omega_{i}: {_describe(point, system)}"
                        )
        return outcome
    return check


FIXTURES: Tuple[Fixture, ...] = (
    Fixture(
        identifier="intro-sp6",
        source="Introduction, sp6 example",
        mode=ComparisonMode.inequality_list,
        check=_check_intro_sp6,
    ),
    Fixture(
        identifier="intro-sl4",
        source="Introduction, sl4 example",
        mode=ComparisonMode.inequality_list,
        check=_check_intro_sl4,
        typos=(
            Typo(
                literal="s_{1 + s_{1,2}} <= m_1 + m_2",
                corrected="s[1,1] + s[1,2] <= m1 + m2",
            ),
            Typo(
                literal="R = {a_1, a_{1,2}, a_{1,3}, a_{2,3}, a_4}",
                corrected="R = {a[1,1], a[1,2], a[1,3], a[2,3], a[3,3]}",
            ),
        ),
    ),
    Fixture(
        identifier="table1-sp8",
        source="Table: coefficients and inequalities for sp8",
        mode=ComparisonMode.inequality_rows,
        check=_check_table(LieType("C", 4), TABLE1_SP8),
    ),
    Fixture(
        identifier="table2-C-fund",
        source="Table: polytopes for fundamental modules, type C",
        mode=ComparisonMode.point_set,
        check=_check_fundamental_table(
            Family.C, (2, 3, 4), table2_rows, _table2_known
        ),
        typos=(
            Typo(
                literal="omega_i, 1 < d < n: s[1,i] + .. + s[1,-1] <= m_d",
                corrected="omega_i, 1 < i < n: ... <= m_i",
            ),
        ),
    ),
    Fixture(
        identifier="table3-so9",
        source="Table: coefficients and inequalities for so(9)",
        mode=ComparisonMode.inequality_rows,
        check=_check_table(LieType("B", 4), TABLE3_SO9),
        typos=(
            Typo(
                literal="q + sum_{l=2}^4 m_l + sum_{l=2}^3",
                corrected="q + sum_{l=2}^4 m_l + sum_{l=2}^3 m_l",
            ),
        ),
    ),
    Fixture(
        identifier="table4-B-fund",
        source="Table: polytopes for fundamental modules, type B",
        mode=ComparisonMode.point_set,
        check=_check_fundamental_table(
            Family.B, (2, 3, 4), table4_rows, _table4_known
        ),
        typos=(
            Typo(
                literal="omega_n: s_{1,1} + .. + s_{n-1} = 0",
                corrected="omega_n: s[1,1] + .. + s[1,n-1] <= 0",
            ),
        ),
    ),
    Fixture(
        identifier="remark-A-fund",
        source="Remark: points of S_w(omega_i), type A",
        mode=ComparisonMode.lemma_points,
        check=_check_lemma(Family.A, (2, 3, 4)),
    ),
    Fixture(
        identifier="lemma-C-fund",
        source="Lemma: points of S_w(omega_i), type C",
        mode=ComparisonMode.lemma_points,
        check=_check_lemma(Family.C, (2, 3, 4)),
    ),
    Fixture(
        identifier="lemma-B-fund",
        source="Lemma: points of S_w(omega_i), type B",
        mode=ComparisonMode.lemma_points,
        check=_check_lemma(Family.B, (2, 3, 4)),
        gate=Gate.soft,
        typos=(
            Typo(
                literal="2 <= j' <= n",
                corrected="2 <= j' <= i, and only for i <= n - 1",
            ),
            Typo(
                literal="2 m_{1,n}",
                corrected="2 m_{1,n} for i <= n - 1",
            ),
        ),
    ),
    Fixture(
        identifier="lemma-D-fund",
        source="Lemma: points of S_w(omega_i), type D",
        mode=ComparisonMode.lemma_points,
        check=_check_lemma(Family.D, (4, 5)),
        gate=Gate.soft,
    ),
)


def fixture_ids() -> List[str]:
    return [fixture.identifier for fixture in FIXTURES]


def fixtures_check(identifier: Optional[str] = None) -> List[FixtureResult]:
    """Regenerate every fixture, or only `identifier`, and compare.

    Raises:
        dempoly.errors.exceptions.InvalidInputError: Unknown identifier.
    """
    selected = [
        f for f in FIXTURES if identifier is None or f.identifier == identifier
    ]
    if not selected:
        raise InvalidInputError(
            f"unknown fixture '{identifier}'; choose from {fixture_ids()}"
        )
    results = []
    for fixture in selected:
        result = FixtureResult(fixture=fixture, outcome=fixture.check())
        logger.info(
            f"Fixture '{fixture.identifier}': "
            f"{'pass' if result.passed else 'FAIL'}"
            + (
                f", {len(result.outcome.flagged)} known discrepancies"
                if result.outcome.flagged else ""
            )
        )
        results.append(result)
    return results
