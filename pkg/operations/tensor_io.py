"""
Reading and writing partial tensors: slice text and JSON
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.config import Config
from core.constants import (
    CELL_SEPARATOR,
    COMMENT_PREFIX,
    JSON_INDENT,
    MISSING_CELL,
    PHASE_MARKER,
    SLICE_SEPARATOR,
)
from core.enums import ValueMode
from core.exceptions import (
    DuplicateIndexError,
    EmptyPatternError,
    NonzeroViolationError,
    PreconditionError,
    RaggedRowsError,
    TensorParseError,
)
from core.logging_config import get_logger
from models.scalars import HALF_TURN, FloatPolar, PolarScalar
from models.tensor import MultiIndex, PartialTensor
from utils.helpers import format_index, format_rational, parse_rational_literal

logger = get_logger()

_CELL_SPLIT = re.compile(r"[\s" + re.escape(CELL_SEPARATOR) + r"]+")


def parse_slice_text(text: str, source: str = "<text>") -> PartialTensor:
    """
    Parse a 3-way tensor laid out like a printed table.

    Lines are rows (index i), slices separated by '|' are the third index k,
    and cells within a slice are the columns j. Cells are separated by
    whitespace or '&'; '*' marks a missing value; '#' starts a comment.

    Cell grammar:
        rational or decimal literal, e.g. "1", "-3/4", "0.8469"
        mag@turns, e.g. "1@1/3" for e^(2πi/3)
        a leading '-' adds half a turn

    Args:
        text: Slice text
        source: Name used in diagnostics

    Returns:
        PartialTensor: Exact-mode tensor with dims (rows, columns, slices)

    Raises:
        RaggedRowsError: If rows or slices differ in shape
        NonzeroViolationError: If a cell is zero
        TensorParseError: If a cell is not a valid literal
        EmptyPatternError: If every cell is '*'

    Example:
        >>> parse_slice_text("5").dims
        (1, 1, 1)
    """
    entries: Dict[MultiIndex, PolarScalar] = {}
    n_slices: Optional[int] = None
    n_columns: Optional[int] = None
    row = 0

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(COMMENT_PREFIX, 1)[0].strip()
        if not line:
            continue
        row += 1
        slices = [_split_cells(chunk) for chunk in line.split(SLICE_SEPARATOR)]
        if n_slices is None:
            n_slices = len(slices)
            n_columns = len(slices[0])
        if len(slices) != n_slices:
            raise RaggedRowsError(line_number, "slices", n_slices, len(slices))
        for k, cells in enumerate(slices, start=1):
            if len(cells) != n_columns:
                raise RaggedRowsError(line_number, f"cells in slice {k}", n_columns, len(cells))
            for j, cell in enumerate(cells, start=1):
                if cell == MISSING_CELL:
                    continue
                index = (row, j, k)
                location = f"{source} line {line_number}, cell {format_index(index)}"
                entries[index] = parse_cell(cell, location)

    if n_slices is None or n_columns == 0:
        raise EmptyPatternError(source)
    if not entries:
        raise EmptyPatternError(source)
    logger.debug(f"Parsed slice text {source}: dims {(row, n_columns, n_slices)}, m={len(entries)}")
    return PartialTensor.from_entries((row, n_columns, n_slices), entries, source)


def parse_cell(cell: str, location: str) -> PolarScalar:
    """
    Parse one slice-text cell into an exact scalar.

    Raises:
        NonzeroViolationError: If the value is zero
        TensorParseError: If the cell is not a valid literal
    """
    magnitude_text, marker, phase_text = cell.partition(PHASE_MARKER)
    try:
        value = parse_rational_literal(magnitude_text)
        phase = parse_rational_literal(phase_text) if marker else Fraction(0)
    except (ValueError, ZeroDivisionError):
        raise TensorParseError(location, f"invalid literal {cell!r}")
    if value == 0:
        raise NonzeroViolationError(location)
    if value < 0:
        phase += HALF_TURN
    return PolarScalar(abs(value), phase)


def _split_cells(chunk: str) -> List[str]:
    stripped = chunk.strip()
    if not stripped:
        return []
    return [cell for cell in _CELL_SPLIT.split(stripped) if cell]


def parse_json(text: str, source: str = "<json>") -> PartialTensor:
    """
    Parse the JSON tensor format.

    Schema:
        {"dims": [int, ...],
         "entries": [{"index": [int, ...], "mag": str|number, "phase_turns": str|number}]}

    The tensor is exact when every mag and phase_turns is a string holding a
    rational literal; otherwise it is a float-mode tensor.

    Raises:
        TensorParseError: If the document does not follow the schema
        IndexOutOfRangeError: If an index lies outside dims
        DuplicateIndexError: If an index repeats
        NonzeroViolationError: If a magnitude is zero
        EmptyPatternError: If there are no entries
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise TensorParseError(source, f"invalid JSON: {e.msg} at line {e.lineno}")
    if not isinstance(document, dict):
        raise TensorParseError(source, "top level must be an object")

    dims = document.get("dims")
    if not isinstance(dims, list) or not all(_is_int(n) for n in dims):
        raise TensorParseError(source, "'dims' must be a list of integers")
    raw_entries = document.get("entries")
    if not isinstance(raw_entries, list):
        raise TensorParseError(source, "'entries' must be a list")
    if not raw_entries:
        raise EmptyPatternError(source)

    parsed = []
    exact = True
    seen = set()
    for position, entry in enumerate(raw_entries):
        location = f"{source} entries[{position}]"
        if not isinstance(entry, dict):
            raise TensorParseError(location, "entry must be an object")
        index = entry.get("index")
        if not isinstance(index, list) or not all(_is_int(i) for i in index):
            raise TensorParseError(location, "'index' must be a list of integers")
        index = tuple(index)
        if index in seen:
            raise DuplicateIndexError(index)
        seen.add(index)
        if "mag" not in entry:
            raise TensorParseError(location, "missing 'mag'")
        magnitude = _json_number(entry["mag"], location, "mag")
        phase = _json_number(entry.get("phase_turns", "0"), location, "phase_turns")
        if magnitude == 0:
            raise NonzeroViolationError(location)
        if magnitude < 0:
            raise TensorParseError(location, "'mag' must be positive; encode signs in phase_turns")
        exact = exact and isinstance(magnitude, Fraction) and isinstance(phase, Fraction)
        parsed.append((index, magnitude, phase))

    entries = {}
    for index, magnitude, phase in parsed:
        if exact:
            entries[index] = PolarScalar(magnitude, phase)
        else:
            entries[index] = FloatPolar(float(magnitude), phase)
    tensor = PartialTensor.from_entries(tuple(dims), entries, source)
    logger.debug(f"Parsed JSON {source}: dims {tensor.dims}, m={tensor.m()}, mode={tensor.mode.value}")
    return tensor


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _json_number(value, location: str, key: str) -> Union[Fraction, float]:
    if isinstance(value, str):
        try:
            return parse_rational_literal(value)
        except (ValueError, ZeroDivisionError):
            raise TensorParseError(location, f"'{key}' is not a rational literal: {value!r}")
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        if value != value or value in (float("inf"), float("-inf")):
            raise TensorParseError(location, f"'{key}' must be finite")
        return float(value)
    raise TensorParseError(location, f"'{key}' must be a string or a number")


def serialize_json(tensor: PartialTensor) -> str:
    """
    Canonical JSON form of a tensor.

    Exact values are written as rational strings; float values as JSON
    numbers with full precision, so parse_json restores the tensor.
    """
    entries = []
    for index, value in tensor.items():
        if tensor.mode is ValueMode.EXACT:
            magnitude = format_rational(value.magnitude)
        else:
            magnitude = value.magnitude
        phase = value.phase_turns
        entries.append({
            "index": list(index),
            "mag": magnitude,
            "phase_turns": format_rational(phase) if isinstance(phase, Fraction) else phase,
        })
    return json.dumps({"dims": list(tensor.dims), "entries": entries}, sort_keys=True, indent=JSON_INDENT)


def format_slice_text(tensor: PartialTensor) -> str:
    """
    Slice-text form of a 3-way tensor.

    Raises:
        PreconditionError: If the tensor does not have exactly 3 modes
    """
    if tensor.order != 3:
        raise PreconditionError("format_slice_text", f"slice text holds 3-way tensors, got {tensor.order} modes")
    values = tensor.as_dict()
    n_rows, n_columns, n_slices = tensor.dims
    lines = []
    for i in range(1, n_rows + 1):
        slices = []
        for k in range(1, n_slices + 1):
            cells = [_format_cell(values.get((i, j, k))) for j in range(1, n_columns + 1)]
            slices.append(" ".join(cells))
        lines.append(f" {SLICE_SEPARATOR} ".join(slices))
    return "\n".join(lines) + "\n"


def _format_cell(value) -> str:
    if value is None:
        return MISSING_CELL
    if isinstance(value, PolarScalar):
        return str(value)
    magnitude = repr(value.magnitude)
    phase = value.phase_turns
    if phase == 0:
        return magnitude
    phase_text = format_rational(phase) if isinstance(phase, Fraction) else repr(phase)
    return f"{magnitude}{PHASE_MARKER}{phase_text}"


def load_tensor(path: Union[str, Path]) -> PartialTensor:
    """
    Read a tensor file, choosing the parser from the extension or content.

    Raises:
        TensorParseError: If the file cannot be read
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise TensorParseError(str(path), f"cannot read file: {e}")
    if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return parse_json(text, path.name)
    return parse_slice_text(text, path.name)


def bundled_tables() -> List[str]:
    """Names of the example tensors shipped in resources/tables"""
    return sorted(p.stem for p in Config.tables_dir().glob("*.slices"))


def load_named_pattern(name: str) -> PartialTensor:
    """
    Load a bundled table by name ("table5") or any tensor file by path.

    Example:
        >>> load_named_pattern("table1").m()
        7
    """
    bundled = Config.tables_dir() / f"{name}.slices"
    if bundled.is_file():
        return load_tensor(bundled)
    return load_tensor(name)
