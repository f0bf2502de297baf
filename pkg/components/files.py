import json
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from components.errors import ParseError
from schemas.instance import Instance, Point
from schemas.solution import Solution


def _numbers(tokens: List[str], kind, line_no: int, expected: int):
    if len(tokens) != expected:
        raise ParseError(f"expected {expected} values, found {len(tokens)}", line_no)
    try:
        return [kind(t) for t in tokens]
    except ValueError as e:
        raise ParseError(f"non-numeric token in {' '.join(tokens)!r}", line_no) from e


def parse_instance(text: str) -> Instance:
    """
    Parse the instance format: '#' comment lines, a header line "n d", then
    exactly n lines "x y".

    Args:
        text (str): File contents.

    Returns:
        Instance: Points in file order.

    Raises:
        ParseError: On a malformed header, a wrong point count or a bad token.
    """
    rows = [
        (line_no, line.split())
        for line_no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("missing header line 'n d'", 1)

    header_line, header = rows[0]
    n, d = _numbers(header, int, header_line, 2)
    if n < 0:
        raise ParseError(f"point count must be non-negative, got {n}", header_line)
    body = rows[1:]
    if len(body) != n:
        last = body[-1][0] if body else header_line
        raise ParseError(f"header announces {n} points, found {len(body)}", last)

    points = []
    for line_no, tokens in body:
        x, y = _numbers(tokens, float, line_no, 2)
        try:
            points.append(Point(x=x, y=y))
        except ValidationError as e:
            raise ParseError("coordinates must be finite", line_no) from e
    try:
        return Instance(points=points, d=d)
    except ValidationError as e:
        raise ParseError(f"invalid distance parameter d={d}", header_line) from e


def format_instance(instance: Instance, comment: str = "") -> str:
    """Canonical text form; 17 significant digits round-trip every double."""
    lines = [f"# {c}" for c in comment.splitlines()]
    lines.append(f"{instance.n} {instance.d}")
    lines.extend(f"{p.x:.17g} {p.y:.17g}" for p in instance.points)
    return "\n".join(lines) + "\n"


def read_instance(path: Union[str, Path]) -> Instance:
    with open(path, "r", encoding="utf-8") as f:
        return parse_instance(f.read())


def write_instance(path: Union[str, Path], instance: Instance, comment: str = ""):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_instance(instance, comment))


def format_solution(solution: Solution) -> str:
    return json.dumps(solution.model_dump(mode="json", by_alias=True), indent=2) + "\n"


def read_solution(path: Union[str, Path]) -> Solution:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        return Solution.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"invalid solution file {path}: {e}") from e


def write_solution(path: Union[str, Path], solution: Solution):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_solution(solution))
