"""Line-oriented readers shared by the TSV loaders."""

from __future__ import annotations

import os
from typing import Iterator, Tuple, Union

PathLike = Union[str, "os.PathLike[str]"]


class LoadError(ValueError):
    """Raised when a data file is malformed or inconsistent.

    The message always names the file and, where it applies, the 1-based
    line number of the offending record.
    """

    def __init__(self, path, message, lineno=None):
        self.path = str(path)
        self.lineno = lineno
        where = self.path if lineno is None else f"{self.path}:{lineno}"
        super().__init__(f"{where}: {message}")


def iter_records(path: PathLike) -> Iterator[Tuple[int, str]]:
    """Yield ``(lineno, line)`` for every data line of a UTF-8 text file.

    Blank lines and lines starting with ``#`` are skipped. Trailing newline
    characters are removed; other whitespace is left to the caller.
    """
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield lineno, line
