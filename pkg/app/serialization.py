"""
Body documents: parsing (JSON or YAML) and canonical JSON output.

Canonical form lists masses in bitmask order and sets in frame order,
so serialize(parse(text)) == text for any canonical document.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from pydantic import ValidationError

from app.schemas import BodyDocument, MassEntry
from core.errors import DocumentError
from evidence.models import BodyOfEvidence, Frame
from evidence.validation import make_frame, product_frame, validate_body
from possibility.distribution import PossibilityDistribution, parse_distribution

STDIN = "-"


def read_text(source: Union[str, Path]) -> str:
    """Contents of a file, or standard input for "-" """
    if str(source) == STDIN:
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {source}: {e.strerror}", {"path": str(source)}) from e


def load_document(text: str) -> BodyDocument:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise DocumentError(f"not a JSON or YAML document: {e}") from e
    if not isinstance(raw, dict):
        raise DocumentError("a body document must be a mapping", {"type": type(raw).__name__})
    try:
        return BodyDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise DocumentError(first["msg"], {"field": location}) from e


def document_frame(document: BodyDocument) -> Frame:
    if document.product_of is None:
        return make_frame(document.universe)
    x_labels, y_labels = document.product_of
    frame = product_frame(make_frame(x_labels), make_frame(y_labels))
    if list(frame.labels) != document.universe:
        raise DocumentError(
            "universe must list the x|y pairs of product_of in row-major order",
            {"expected": list(frame.labels[:4])},
        )
    return frame


def document_to_body(document: BodyDocument, renormalize: bool = False) -> BodyOfEvidence:
    frame = document_frame(document)
    return validate_body(frame, [(entry.set, entry.mass) for entry in document.masses], renormalize)


def parse_body(text: str, renormalize: bool = False) -> BodyOfEvidence:
    return document_to_body(load_document(text), renormalize)


def load_body(source: Union[str, Path], renormalize: bool = False) -> BodyOfEvidence:
    return parse_body(read_text(source), renormalize)


def body_to_document(body: BodyOfEvidence) -> BodyDocument:
    frame = body.frame
    product_of = None
    if frame.is_product:
        product_of = [list(factor.labels) for factor in frame.factors]
    return BodyDocument(
        universe=list(frame.labels),
        product_of=product_of,
        masses=[
            MassEntry(set=list(frame.labels_of(bits)), mass=mass)
            for bits, _, mass in body.entries()
        ],
    )


def body_payload(body: BodyOfEvidence) -> Dict[str, Any]:
    """Canonical dict with keys universe, product_of (product frames only), masses"""
    return body_to_document(body).model_dump(exclude_none=True)


def serialize_body(body: BodyOfEvidence) -> str:
    return json.dumps(body_payload(body), indent=2, ensure_ascii=False) + "\n"


def load_distribution(source: str) -> PossibilityDistribution:
    """Inline decimals, or a file holding one value per line"""
    if source == STDIN or Path(source).is_file():
        return parse_distribution(read_text(source))
    return parse_distribution(source)
