"""Curves moved at most once across by periodic surface maps.

Instances are given as a signature (three cone orders), a group order N and
three images in Z/N. Structured results are plain dicts that follow the
same JSON schema as the ``turnover`` command-line tool.
"""

from __future__ import annotations

import json
from typing import Any, Optional, Sequence

from . import _core
from ._core import InvalidInstance

__version__ = _core.__version__

__all__ = [
    "InvalidInstance",
    "certify",
    "complex",
    "enumerate",
    "min_fpf",
    "reason",
    "render",
    "reproduce",
    "torus",
    "validate",
]


def reason(err: InvalidInstance) -> str:
    """Machine-readable code of an InvalidInstance, e.g. ``"not_surjective"``."""
    return err.args[1] if len(err.args) > 1 else "invalid"


def validate(signature: Sequence[int], order: int, images: Sequence[int]) -> dict[str, Any]:
    """Normalized instance, invariants and lcm-law flag; raises InvalidInstance."""
    return json.loads(_core.validate(list(signature), order, list(images)))


def certify(
    signature: Sequence[int],
    order: int,
    images: Sequence[int],
    all_generators: bool = True,
    with_geometry: bool = False,
) -> list[dict[str, Any]]:
    """One certificate per generator f^k (or only k = 1)."""
    return json.loads(_core.certify(list(signature), order, list(images), all_generators, with_geometry))


def complex(signature: Sequence[int], order: int, images: Sequence[int]) -> dict[str, Any]:
    """Faces, edges and vertex labels of the invariant cell structure."""
    return json.loads(_core.complex(list(signature), order, list(images)))


def enumerate(
    max_order: Optional[int] = None,
    max_genus: Optional[int] = None,
    fpf_only: bool = False,
    jobs: int = 0,
) -> list[dict[str, Any]]:
    """Admissible instances up to equivalence, by group order or by genus."""
    return json.loads(_core.enumerate(max_order, max_genus, fpf_only, jobs))


def min_fpf(max_genus: int, jobs: int = 0) -> Optional[dict[str, Any]]:
    """Smallest-genus fixed-point-free instance, or None below ``max_genus``."""
    found = _core.min_fpf(max_genus, jobs)
    return None if found is None else json.loads(found)


def torus(a: int, b: int, c: int, d: int) -> dict[str, Any]:
    """Certificate for the finite-order torus map [[a, b], [c, d]]."""
    return json.loads(_core.torus(a, b, c, d))


def render(
    signature: Sequence[int],
    order: int,
    images: Sequence[int],
    depth: int = 1,
    curves: bool = False,
    generator: int = 1,
    size: Optional[int] = None,
) -> str:
    """SVG picture of the tiling in the Poincare disk."""
    return _core.render(list(signature), order, list(images), depth, curves, generator, size)


def reproduce(example: str, genus: int = 2) -> dict[str, Any]:
    """Check the worked examples: ``"3.2"`` (genus 11) or ``"3.1"`` with a genus."""
    return json.loads(_core.reproduce(example, genus))
