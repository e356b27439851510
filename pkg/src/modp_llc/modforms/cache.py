"""Write-once disk cache of q-expansion coefficients.

One file per (name, weight, precision): a header line ``name weight precision``
then one decimal integer per line.  Files are created under a temporary name
and hard-linked into place, so readers never see a partial file and the first
writer wins.
"""
from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Callable, Sequence

ENV_VAR = "MODP_LLC_CACHE"


class CacheError(OSError):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "modp_llc"


class QExpansionCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, name: str, weight: int, precision: int) -> Path:
        return self.directory / f"{name}_k{weight}_N{precision}.txt"

    def load(self, name: str, weight: int, precision: int) -> list[int] | None:
        path = self.path(name, weight, precision)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        except OSError as exc:
            raise CacheError(f"cannot read {path}: {exc}") from exc
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines or lines[0].split() != [name, str(weight), str(precision)]:
            raise CacheError(f"{path}: bad header")
        try:
            coeffs = [int(x) for x in lines[1:]]
        except ValueError as exc:
            raise CacheError(f"{path}: bad coefficient line") from exc
        if len(coeffs) != precision + 1:
            raise CacheError(f"{path}: expected {precision + 1} coefficients, found {len(coeffs)}")
        return coeffs

    def store(self, name: str, weight: int, precision: int, coeffs: Sequence[int]) -> None:
        path = self.path(name, weight, precision)
        body = f"{name} {weight} {precision}\n" + "".join(f"{c}\n" for c in coeffs)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-")
            try:
                with os.fdopen(fd, "w") as fh:
                    fh.write(body)
                try:
                    os.link(tmp, path)
                except FileExistsError:
                    pass
            finally:
                os.unlink(tmp)
        except OSError as exc:
            raise CacheError(f"cannot write {path}: {exc}") from exc

    def get_or_create(self, name: str, weight: int, precision: int,
                      compute: Callable[[], Sequence[int]]) -> list[int]:
        got = self.load(name, weight, precision)
        if got is not None:
            return got
        coeffs = list(compute())
        self.store(name, weight, precision, coeffs)
        return coeffs
