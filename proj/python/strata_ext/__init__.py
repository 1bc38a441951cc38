"""Exact Ext groups, stratification checks and Chevalley-Eilenberg cohomology."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from . import _core

__all__ = ["Report", "commands", "data_dir", "run", "ext_dims", "stratify", "lie_cohomology"]


@dataclass(frozen=True)
class Report:
    exit_code: int
    data: dict[str, Any]
    text: str

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def data_dir() -> Path:
    """Bundled definitions: $STRATA_DATA_DIR, the installed copy, or the source tree."""
    env = os.environ.get("STRATA_DATA_DIR")
    if env:
        return Path(env)
    here = Path(__file__).resolve().parent
    for candidate in (here / "data", here.parents[1] / "data"):
        if candidate.is_dir():
            return candidate
    raise FileNotFoundError("no bundled data directory found; set STRATA_DATA_DIR")


def commands() -> list[str]:
    return list(_core.commands())


def run(
    command: str,
    *args: str,
    paths: Optional[Sequence[os.PathLike | str]] = None,
    max_degree: Optional[int] = None,
    order: Optional[str] = None,
    segment: Optional[str] = None,
    exhaustive_bound: int = 8,
    samples: int = 100,
    seed: Optional[int] = None,
) -> Report:
    """Run one report command against the given definition files (default: bundled data)."""
    files = [str(p) for p in (paths if paths is not None else [data_dir()])]
    code, body, text = _core.run(
        files, command, list(args), max_degree, order, segment, exhaustive_bound, samples, seed
    )
    return Report(code, json.loads(body), text)


def ext_dims(algebra: str, v: str, w: str, max_degree: int, **kwargs: Any) -> list[int]:
    report = run("ext", algebra, v, w, max_degree=max_degree, **kwargs)
    if report.exit_code == 2:
        raise ValueError(report.data["error"])
    return report.data["dims"]


def stratify(algebra: str, order: Optional[str] = None, **kwargs: Any) -> Report:
    return run("stratify", algebra, order=order, **kwargs)


def lie_cohomology(lie_algebra: str, x: str, y: str, **kwargs: Any) -> list[int]:
    report = run("lie-cohomology", lie_algebra, x, y, **kwargs)
    if report.exit_code == 2:
        raise ValueError(report.data["error"])
    return report.data["dims"]
