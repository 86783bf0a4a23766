"""
Lattice Files

Reader and writer for the line-oriented ``.lat`` format::

    # comment
    elements: 0 a b c e 1
    covers: 0<a a<b a<c a<e b<1 c<1 e<1
    bottom: 0
    top: 1
    neutral: e
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from ..config import get_settings
from ..core.lattice import BoundedLattice, validate_bounded_lattice
from ..core.poset import build_poset, transitive_reduction
from ..errors import BoundMismatch, CycleDetected, LatticeFileSyntaxError, UnknownLabel

logger = logging.getLogger(__name__)

KEYS = ("elements", "covers", "bottom", "top", "neutral")


class LatticeFile(BaseModel):
    """Parsed contents of a ``.lat`` file before any order-theoretic validation."""

    path: Optional[str] = None
    labels: List[str]
    covers: List[Tuple[str, str]] = Field(default_factory=list)
    bottom: Optional[str] = None
    top: Optional[str] = None
    neutral: Optional[str] = Field(None, description="Default neutral candidate for commands taking --e")
    covers_line: int = 0


def read_lattice_file(text: str, path: Optional[str] = None) -> LatticeFile:
    """
    Tokenize ``text`` into a LatticeFile.

    Raises:
        LatticeFileSyntaxError
    """
    fields = {}
    lines = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise LatticeFileSyntaxError("expected 'key: value'", line_no, len(raw) - len(raw.lstrip()) + 1)
        key, value = line.split(":", 1)
        key = key.strip()
        if key not in KEYS:
            raise LatticeFileSyntaxError(f"unknown key {key!r}", line_no)
        if key in fields:
            raise LatticeFileSyntaxError(f"duplicate key {key!r}", line_no)
        fields[key] = (value, line.index(":") + 1)
        lines[key] = line_no

    if "elements" not in fields:
        raise LatticeFileSyntaxError("missing 'elements' line", len(text.splitlines()) + 1)

    labels = fields["elements"][0].split()
    if not labels:
        raise LatticeFileSyntaxError("no elements declared", lines["elements"])

    covers = []
    if "covers" in fields:
        value, offset = fields["covers"]
        for match in re.finditer(r"\S+", value):
            token, column = match.group(), offset + match.start() + 1
            parts = token.split("<")
            if len(parts) != 2 or not all(parts):
                raise LatticeFileSyntaxError(f"malformed cover {token!r}, expected x<y", lines["covers"], column)
            covers.append((parts[0], parts[1]))

    def single(key: str) -> Optional[str]:
        if key not in fields:
            return None
        tokens = fields[key][0].split()
        if len(tokens) != 1:
            raise LatticeFileSyntaxError(f"'{key}' takes exactly one label", lines[key])
        return tokens[0]

    return LatticeFile(path=path, labels=labels, covers=covers, bottom=single("bottom"), top=single("top"),
                       neutral=single("neutral"), covers_line=lines.get("covers", 0))


def lattice_from_file(parsed: LatticeFile) -> BoundedLattice:
    """
    Build and validate the lattice described by ``parsed``.

    Raises:
        BoundMismatch: declared bottom/top differ from the computed ones
        plus every lattice-core error
    """
    try:
        poset = build_poset(parsed.labels, parsed.covers)
    except CycleDetected as exc:
        raise CycleDetected(exc.cycle, line=parsed.covers_line) from exc
    except UnknownLabel as exc:
        raise UnknownLabel(exc.label, exc.where, line=parsed.covers_line) from exc
    L = validate_bounded_lattice(poset)
    for which, declared, computed in (("bottom", parsed.bottom, L.bottom), ("top", parsed.top, L.top)):
        if declared is not None and declared != L.label(computed):
            raise BoundMismatch(which, declared, L.label(computed))
    if parsed.neutral is not None:
        L.index_of(parsed.neutral)
    logger.debug(f"Parsed {L!r} from {parsed.path or '<text>'}")
    return L


def parse_lattice_file(text: str) -> BoundedLattice:
    return lattice_from_file(read_lattice_file(text))


def load_lattice(path: Union[str, Path]) -> Tuple[BoundedLattice, LatticeFile]:
    path = Path(path)
    parsed = read_lattice_file(path.read_text(encoding="utf-8"), str(path))
    return lattice_from_file(parsed), parsed


def load_fixture(name: str) -> Tuple[BoundedLattice, LatticeFile]:
    """Load a bundled ``.lat`` file, e.g. ``load_fixture("l1")``."""
    filename = name if name.endswith(".lat") else f"{name}.lat"
    return load_lattice(get_settings().fixtures_dir / filename)


def serialize_lattice(L: BoundedLattice, neutral: Optional[int] = None) -> str:
    """``.lat`` text for ``L``: declared element order and the cover relation."""
    labels = [L.label(i) for i in L.declared_order]
    covers = " ".join(f"{x}<{y}" for x, y in transitive_reduction(L.poset))
    lines = [
        f"elements: {' '.join(labels)}",
        f"covers: {covers}".rstrip(),
        f"bottom: {L.label(L.bottom)}",
        f"top: {L.label(L.top)}",
    ]
    if neutral is not None:
        lines.append(f"neutral: {L.label(neutral)}")
    return "\n".join(lines) + "\n"
