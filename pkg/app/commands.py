"""
Command objects behind the CLI subcommands.

Each command takes a dict of already-parsed inputs and returns a payload
for app.report (or a body for the serializer), so commands can be driven
directly from tests without going through argv.
"""

import logging
from typing import Any, Dict, List, Optional

from app.config import settings
from app.monitoring import event, track_command
from app.serialization import body_payload
from core.command_base import CommandBase
from evidence.measures import discord, measure_report, nonspecificity, strife, total_NS
from explorer.search import search_subadditivity_violations, summarize
from families.generators import generate_family, uniform_body, verify_strong_symmetry
from possibility.distribution import to_consonant_body
from possibility.maximizer import StrifeMaximum, maximize_series
from possibility.measures import (
    possibilistic_discord,
    possibilistic_nonspecificity,
    possibilistic_strife,
    possibilistic_total_NS,
)

logger = logging.getLogger(__name__)

CROSS_CHECK_TOLERANCE = 1e-10


class MeasureCommand(CommandBase):
    name = "measure"

    @track_command("measure")
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        report = measure_report(input["body"])
        return {"rows": [report.model_dump()]}


class PossibilityCommand(CommandBase):
    """Closed forms next to the general forms on the induced nested body"""

    name = "possibility"

    @track_command("possibility")
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        dist = input["distribution"]
        body = to_consonant_body(dist)
        pairs = {
            "nonspecificity": (possibilistic_nonspecificity(dist), nonspecificity(body)),
            "strife": (possibilistic_strife(dist), strife(body)),
            "total_NS": (possibilistic_total_NS(dist), total_NS(body)),
            "discord": (possibilistic_discord(dist), discord(body)),
        }
        row: Dict[str, Any] = {"n": dist.size}
        for key, (closed, _) in pairs.items():
            row[key] = closed
        for key, (closed, general) in pairs.items():
            delta = abs(closed - general)
            row[f"delta_{key}"] = delta
            if delta > CROSS_CHECK_TOLERANCE:
                logger.warning(event("cross_check_mismatch", measure=key, delta=delta, values=list(dist.values)))
        return {"rows": [row]}


def _nondecreasing(series: List[StrifeMaximum]) -> List[bool]:
    flags = []
    for i, result in enumerate(series):
        flags.append(i == 0 or result.max_value >= series[i - 1].max_value)
    return flags


class MaximizeCommand(CommandBase):
    """Maxima per n for strife, discord, or both side by side"""

    name = "maximize"

    @track_command("maximize")
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        n_values = input["n_values"]
        objective = input.get("objective", "strife")
        resolution = input.get("resolution")
        if resolution is None:
            resolution = settings.default_resolution
        objectives = ["strife", "discord"] if objective == "both" else [objective]

        series = {name: maximize_series(n_values, name, resolution) for name in objectives}
        flags = {name: _nondecreasing(results) for name, results in series.items()}

        rows = []
        for position, result in enumerate(series[objectives[0]]):
            row: Dict[str, Any] = {"n": result.n}
            for name in objectives:
                current = series[name][position]
                row[name] = current.max_value
                row[f"{name}_argmax"] = list(current.argmax.values)
                row[f"{name}_nondecreasing"] = flags[name][position]
            rows.append(row)

        summary: Dict[str, Any] = {"resolution": resolution}
        for name in objectives:
            summary[f"{name}_nondecreasing"] = all(flags[name])
        return {"rows": rows, "summary": summary}


class FamiliesCommand(CommandBase):
    """Members of a symmetric family, or its uniform body with {"uniform": True}"""

    name = "families"

    @track_command("families")
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        spec = input["spec"]
        frame = input["frame"]
        family = generate_family(spec, frame)
        if input.get("uniform"):
            return {"body": uniform_body(family, frame)}

        symmetry = verify_strong_symmetry(family, frame)
        rows = [
            {"set": list(focal_set.labels(frame)), "cardinality": focal_set.cardinality}
            for focal_set in family
        ]
        summary = {
            "kind": spec.kind.value,
            "focal_sets": len(family),
            "symmetric": symmetry.symmetric,
            "cardinalities": sorted(symmetry.cardinalities),
            "memberships": list(symmetry.memberships),
        }
        return {"rows": rows, "summary": summary}


class SearchCommand(CommandBase):
    name = "search"

    @track_command("search")
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        workers: Optional[int] = input.get("workers")
        max_focal: Optional[int] = input.get("max_focal")
        if max_focal is None:
            max_focal = settings.search_max_focal
        records = search_subadditivity_violations(
            input["x_size"],
            input["y_size"],
            input["trials"],
            input["seed"],
            measure=input.get("measure", "S"),
            workers=workers,
            max_focal=max_focal,
        )
        rows = [
            {
                "trial": record.trial,
                "seed": record.seed,
                "measure": record.measure,
                "joint_value": record.joint_value,
                "marginal_sum": record.marginal_sum,
                "violation": record.violation,
                "relative_violation": record.relative_violation,
                "joint": body_payload(record.joint),
            }
            for record in records
        ]
        summary = {
            "measure": input.get("measure", "S"),
            "x_size": input["x_size"],
            "y_size": input["y_size"],
            "trials": input["trials"],
            "seed": input["seed"],
            "max_focal": max_focal,
            **summarize(records),
        }
        return {"rows": rows, "summary": summary}
