"""Command handlers of the command line interface."""

from dataclasses import dataclass
import logging
from multiprocessing.pool import Pool
from typing import (Any, Callable, Dict, List, Optional, Sequence, Tuple)

from dempoly.cli.fixtures import (
    Gate,
    fixtures_check,
)
from dempoly.cli.reports import (
    EXIT_INVALID,
    Report,
)
from dempoly.cli.sweep import sweep
from dempoly.demchar.verify import verify_against_points
from dempoly.errors.exceptions import (
    ParameterError,
    ResourceLimitError,
)
from dempoly.ideal.generators import (
    complement_min_generators,
    default_box,
    theorem_generators,
    upset_equality,
)
from dempoly.models.config import (
    Config,
    SweepCheckEnum,
)
from dempoly.models.run_config import (
    CommandEnum,
    RunConfig,
)
from dempoly.pathgen.degree import max_pbw_degree
from dempoly.pathgen.families import paths_for_word
from dempoly.polytope.faces import face_embedding_check
from dempoly.polytope.minkowski import (
    minkowski_check,
    minkowski_decompose,
    normality_check,
)
from dempoly.polytope.points import (
    enumerate_points,
    membership,
)
from dempoly.polytope.system import (
    InequalitySystem,
    build_system_for_word,
)
from dempoly.rootsys.cartan import LieType
from dempoly.rootsys.posets import inversion_set
from dempoly.rootsys.roots import (
    build_positive_roots,
    differential_table,
)
from dempoly.rootsys.weights import (
    Weight,
    as_weight,
    check_dominant,
)
from dempoly.rootsys.words import (
    ReflectionWord,
    is_reduced,
    reflection_word,
)
from dempoly.utils.logging import log_command

# Get logger instance
logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, "CommandContext"], Report]


@dataclass
class CommandContext:
    """Application configuration and resources shared by the handlers.

    Attributes:
        config: Application configuration.
        pool: Worker pool, or ``None`` for serial execution.
    """
    config: Config
    pool: Optional[Pool] = None


def _lie_type(run_config: RunConfig, context: CommandContext) -> LieType:
    max_rank = context.config.limits.max_rank
    if run_config.rank is not None and run_config.rank > max_rank:
        raise ResourceLimitError(
            f"rank {run_config.rank} exceeds limits.max_rank={max_rank}"
        )
    return LieType(run_config.family, run_config.rank)


def _weight(
    values: Optional[Sequence[int]],
    lie_type: LieType,
    context: CommandContext,
) -> Weight:
    weight = check_dominant(as_weight(lie_type, values or ()))
    max_sum = context.config.limits.max_weight_sum
    if sum(weight) > max_sum:
        raise ResourceLimitError(
            f"weight {weight} exceeds limits.max_weight_sum={max_sum}"
        )
    return weight


def _max_points(run_config: RunConfig, context: CommandContext) -> int:
    if run_config.max_points is not None:
        return run_config.max_points
    return context.config.limits.max_points


def _word(run_config: RunConfig, lie_type: LieType) -> ReflectionWord:
    return reflection_word(
        lie_type, run_config.start, run_config.variant, run_config.end
    )


def _setup(
    run_config: RunConfig,
    context: CommandContext,
) -> Tuple[ReflectionWord, InequalitySystem, Weight]:
    """Word, system and weight of a weighted command."""
    lie_type = _lie_type(run_config, context)
    word = _word(run_config, lie_type)
    system = build_system_for_word(
        word,
        include_redundant=run_config.include_redundant,
        include_coefficients=run_config.include_coefficients,
    )
    return word, system, _weight(run_config.weight, lie_type, context)


def _point(
    values: Optional[Sequence[int]],
    system: InequalitySystem,
) -> Tuple[int, ...]:
    point = tuple(values or ())
    if len(point) != system.dim:
        raise ParameterError(
            f"--point needs {system.dim} entries in the order "
            f"{system.order}, got {len(point)}"
        )
    return point


def _header(run_config: RunConfig) -> Dict[str, Any]:
    return {"parameters": run_config.parameters()}


@log_command
def run_roots(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    roots = build_positive_roots(lie_type)
    rows = [
        {
            "label": root.label,
            "coeffs": list(root.coeffs),
            "height": root.height,
        }
        for root in roots
    ]
    payload = _header(run_config)
    payload.update({"type": str(lie_type), "roots": rows, "count": len(rows)})
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_poset(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    poset = inversion_set(_word(run_config, lie_type))
    labels = poset.labels
    covers = [[labels[upper], labels[lower]] for upper, lower in poset.covers]
    payload = _header(run_config)
    payload.update({
        "type": str(lie_type),
        "elements": labels,
        "covers": covers,
        "chain": poset.is_chain(),
        "count": len(labels),
    })
    return Report(
        command=run_config.command.value,
        payload=payload,
        rows=[{"upper": upper, "lower": lower} for upper, lower in covers],
    )


@log_command
def run_word(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    word = _word(run_config, lie_type)
    payload = _header(run_config)
    payload.update({
        "type": str(lie_type),
        "variant": word.variant.value,
        "letters": list(word.letters),
        "literal": list(word.literal),
        "reduced": is_reduced(lie_type, word.letters),
        "length": len(word),
    })
    return Report(command=run_config.command.value, payload=payload)


@log_command
def run_derivatives(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    rows = [
        {"beta": beta.label, "alpha": alpha.label, "image": image.label}
        for beta, alpha, image in differential_table(lie_type)
    ]
    payload = _header(run_config)
    payload.update({"type": str(lie_type), "actions": rows})
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_paths(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    paths = paths_for_word(
        _word(run_config, lie_type),
        include_redundant=run_config.include_redundant,
        include_coefficients=run_config.include_coefficients,
    )
    entries = [path.to_dict() for path in paths]
    payload = _header(run_config)
    payload.update({"paths": entries, "count": len(entries)})
    rows = [
        {
            "id": entry["id"],
            "kind": entry["kind"],
            "roots": entry["roots"],
            "coeffs": entry["coeffs"],
            "bound": entry["bound"],
        }
        for entry in entries
    ]
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_inequalities(
    run_config: RunConfig,
    context: CommandContext,
) -> Report:
    lie_type = _lie_type(run_config, context)
    system = build_system_for_word(
        _word(run_config, lie_type),
        include_redundant=run_config.include_redundant,
        include_coefficients=run_config.include_coefficients,
    )
    payload = _header(run_config)
    payload.update(system.to_dict())
    rows = [
        {"id": ineq.identifier, "text": ineq.render(system.order)}
        for ineq in system.inequalities
    ]
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_points(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    points = enumerate_points(
        system, weight, _max_points(run_config, context), context.pool
    )
    payload = _header(run_config)
    payload.update(points.to_dict())
    rows = [dict(zip(system.order, point)) for point in points]
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_count(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    points = enumerate_points(
        system, weight, _max_points(run_config, context), context.pool
    )
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "count": len(points)})
    return Report(command=run_config.command.value, payload=payload)


@log_command
def run_membership(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    point = _point(run_config.point, system)
    result = membership(point, system, weight)
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "point": list(point)})
    payload.update(result.to_dict(system.order))
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=result.member,
    )


@log_command
def run_max_degree(run_config: RunConfig, context: CommandContext) -> Report:
    word, _, weight = _setup(run_config, context)
    degree = max_pbw_degree(word, weight, _max_points(run_config, context))
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "max_degree": degree})
    return Report(command=run_config.command.value, payload=payload)


@log_command
def run_dim_check(run_config: RunConfig, context: CommandContext) -> Report:
    word, system, weight = _setup(run_config, context)
    points = enumerate_points(
        system, weight, _max_points(run_config, context), context.pool
    )
    oracle = verify_against_points(word, weight, points)
    passed = oracle.point_count == oracle.dimension
    payload = _header(run_config)
    payload.update({
        "lambda": list(weight),
        "points": oracle.point_count,
        "dim": oracle.dimension,
    })
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=passed,
    )


@log_command
def run_weight_check(
    run_config: RunConfig,
    context: CommandContext,
) -> Report:
    word, system, weight = _setup(run_config, context)
    points = enumerate_points(
        system, weight, _max_points(run_config, context), context.pool
    )
    oracle = verify_against_points(word, weight, points)
    payload = _header(run_config)
    payload.update({"lambda": list(weight)})
    payload.update(oracle.to_dict())
    del payload["passed"]
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=oracle.passed,
    )


@log_command
def run_minkowski(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    other = _weight(run_config.mu, system.lie_type, context)
    report = minkowski_check(
        system, weight, other, _max_points(run_config, context)
    )
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "mu": list(other)})
    payload.update(report.to_dict())
    del payload["passed"]
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=report.passed,
    )


@log_command
def run_normality(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    results = normality_check(
        system, weight, run_config.kmax, _max_points(run_config, context)
    )
    rows = [{"k": k, "passed": passed} for k, passed in results.items()]
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "dilations": rows})
    return Report(
        command=run_config.command.value,
        payload=payload,
        rows=rows,
        passed=all(results.values()),
    )


@log_command
def run_decompose(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    point = _point(run_config.point, system)
    summands = minkowski_decompose(
        system, point, weight, _max_points(run_config, context)
    )
    rows = [{"i": i, "summand": list(summand)} for i, summand in summands]
    payload = _header(run_config)
    payload.update({
        "lambda": list(weight),
        "point": list(point),
        "order": system.order,
        "summands": rows,
    })
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_ideal_gens(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    generators = theorem_generators(system, weight)
    payload = _header(run_config)
    payload.update(generators.to_dict())
    rows = [
        {
            "point": list(point),
            "paths": [p.path for p in generators.generators[point]],
        }
        for point in generators.sorted_points()
    ]
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_ideal_min_gens(
    run_config: RunConfig,
    context: CommandContext,
) -> Report:
    _, system, weight = _setup(run_config, context)
    points = enumerate_points(
        system, weight, _max_points(run_config, context), context.pool
    )
    box = (
        tuple(run_config.box) if run_config.box is not None
        else default_box(points, run_config.box_pad)
    )
    minimal = complement_min_generators(points, box)
    payload = _header(run_config)
    payload.update({
        "lambda": list(weight),
        "order": system.order,
        "box": list(box),
        "generators": [list(p) for p in minimal],
        "count": len(minimal),
    })
    rows = [dict(zip(system.order, point)) for point in minimal]
    return Report(command=run_config.command.value, payload=payload, rows=rows)


@log_command
def run_ideal_check(run_config: RunConfig, context: CommandContext) -> Report:
    _, system, weight = _setup(run_config, context)
    report = upset_equality(
        system,
        weight,
        box=run_config.box,
        box_pad=run_config.box_pad,
        max_points=_max_points(run_config, context),
    )
    payload = _header(run_config)
    payload.update({"lambda": list(weight), "order": system.order})
    payload.update(report.to_dict())
    del payload["passed"]
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=report.passed,
    )


@log_command
def run_face_check(run_config: RunConfig, context: CommandContext) -> Report:
    lie_type = _lie_type(run_config, context)
    weight = _weight(run_config.weight, lie_type, context)
    report = face_embedding_check(
        lie_type,
        run_config.start,
        run_config.substart,
        weight,
        variant=run_config.variant,
        end=run_config.end,
        max_points=_max_points(run_config, context),
    )
    payload = _header(run_config)
    payload.update({"lambda": list(weight)})
    payload.update(report.to_dict())
    del payload["passed"]
    return Report(
        command=run_config.command.value,
        payload=payload,
        passed=report.passed,
    )


@log_command
def run_fixtures(run_config: RunConfig, context: CommandContext) -> Report:
    results = fixtures_check(run_config.fixture)
    entries = [result.to_dict() for result in results]
    passed = all(
        result.passed for result in results
        if result.fixture.gate is Gate.hard
    )
    rows = [
        {
            "id": entry["id"],
            "mode": entry["mode"],
            "gate": entry["gate"],
            "passed": entry["passed"],
            "missing": len(entry["missing"]),
            "unexpected": len(entry["unexpected"]),
            "known_discrepancies": len(entry["known_discrepancies"]),
            "typos": len(entry["typos"]),
        }
        for entry in entries
    ]
    payload = _header(run_config)
    payload["fixtures"] = entries
    return Report(
        command=run_config.command.value,
        payload=payload,
        rows=rows,
        passed=passed,
    )


@log_command
def run_sweep(run_config: RunConfig, context: CommandContext) -> Report:
    defaults = context.config.sweep
    limits = context.config.limits
    families = run_config.families if run_config.families is not None else (
        defaults.families
    )
    ranks = run_config.ranks if run_config.ranks is not None else (
        defaults.ranks
    )
    max_weight_sum = (
        run_config.max_weight_sum if run_config.max_weight_sum is not None
        else defaults.max_weight_sum
    )
    checks: List[SweepCheckEnum] = (
        run_config.checks if run_config.checks is not None
        else defaults.checks
    )
    if ranks and max(ranks) > limits.max_rank:
        raise ResourceLimitError(
            f"rank {max(ranks)} exceeds limits.max_rank={limits.max_rank}"
        )
    if max_weight_sum > limits.max_weight_sum:
        raise ResourceLimitError(
            f"weight sum {max_weight_sum} exceeds "
            f"limits.max_weight_sum={limits.max_weight_sum}"
        )
    result = sweep(
        families=families,
        ranks=ranks,
        max_weight_sum=max_weight_sum,
        checks=checks,
        kmax=defaults.kmax,
        max_points=_max_points(run_config, context),
        max_box_volume=limits.max_box_volume,
        pool=context.pool,
        chunksize=context.config.jobs.chunksize,
    )
    payload = _header(run_config)
    payload.update({
        "rows": result.rows,
        "count": len(result.rows),
        "soft_failures": result.soft_failures,
        "limited": result.limited,
    })
    return Report(
        command=run_config.command.value,
        payload=payload,
        rows=result.rows,
        passed=result.passed,
        exit_code=EXIT_INVALID if result.limited else None,
    )


COMMANDS: Dict[CommandEnum, Handler] = {
    CommandEnum.roots: run_roots,
    CommandEnum.poset: run_poset,
    CommandEnum.word: run_word,
    CommandEnum.derivatives: run_derivatives,
    CommandEnum.paths: run_paths,
    CommandEnum.inequalities: run_inequalities,
    CommandEnum.points: run_points,
    CommandEnum.count: run_count,
    CommandEnum.membership: run_membership,
    CommandEnum.max_degree: run_max_degree,
    CommandEnum.dim_check: run_dim_check,
    CommandEnum.weight_check: run_weight_check,
    CommandEnum.minkowski: run_minkowski,
    CommandEnum.normality: run_normality,
    CommandEnum.decompose: run_decompose,
    CommandEnum.ideal_gens: run_ideal_gens,
    CommandEnum.ideal_min_gens: run_ideal_min_gens,
    CommandEnum.ideal_check: run_ideal_check,
    CommandEnum.face_check: run_face_check,
    CommandEnum.fixtures: run_fixtures,
    CommandEnum.sweep: run_sweep,
}
