"""
Text serialization of priors.

File format: a header line ``N=<int> label=<string>`` followed by one
probability per line in round-trip decimal precision.
"""
from pathlib import Path
from typing import Union

from mcp_grover_schedules.features.prior.common import Prior, PriorError

PathLike = Union[str, Path]


def format_prior(prior: Prior) -> str:
    """Render a prior in the line-oriented file format."""
    lines = [f"N={prior.N} label={prior.label}"]
    lines.extend(repr(value) for value in prior.p.tolist())
    return "\n".join(lines) + "\n"


def write_prior(prior: Prior, path: PathLike) -> None:
    Path(path).write_text(format_prior(prior), encoding="utf-8")


def _parse_header(line: str) -> tuple[int, str]:
    if not line.startswith("N="):
        raise PriorError(f"missing prior header, got {line[:40]!r}")
    size, _, rest = line[2:].partition(" ")
    if not rest.startswith("label="):
        raise PriorError("prior header lacks label=")
    try:
        return int(size), rest[len("label="):]
    except ValueError:
        raise PriorError(f"invalid N in prior header: {size!r}")


def parse_prior(text: str) -> Prior:
    """
    Parse a prior from its file format.
    
    Raises:
        PriorError: If the header is missing or the count does not match N
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise PriorError("empty prior file")
    N, label = _parse_header(lines[0])
    try:
        values = [float(line) for line in lines[1:]]
    except ValueError as e:
        raise PriorError(f"invalid probability value: {e}")
    if len(values) != N:
        raise PriorError(
            f"prior header says N={N} but {len(values)} values follow")
    return Prior(values, label=label)


def read_prior(path: PathLike) -> Prior:
    return parse_prior(Path(path).read_text(encoding="utf-8"))


def read_weights(path: PathLike) -> tuple[float, ...]:
    """
    Read raw non-negative weights for a custom distribution.
    
    Accepts either a prior file (with header) or a bare list of numbers,
    one per line.
    
    Args:
        path: File to read
        
    Returns:
        Tuple of weights in file order
    """
    if not path:
        raise PriorError("custom distribution needs a file path")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise PriorError(f"cannot read weights from {path}: {e}")
    stripped = text.lstrip()
    if stripped.startswith("N="):
        return tuple(parse_prior(text).p.tolist())
    try:
        return tuple(float(line) for line in text.split() if line)
    except ValueError as e:
        raise PriorError(f"invalid weight in {path}: {e}")
