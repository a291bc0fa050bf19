"""
Tests for slice-text and JSON tensor input/output
"""

from fractions import Fraction

import pytest

from core.enums import ValueMode
from core.exceptions import (
    DuplicateIndexError,
    EmptyPatternError,
    IndexOutOfRangeError,
    NonzeroViolationError,
    PreconditionError,
    RaggedRowsError,
    TensorParseError,
)
from models.scalars import PolarScalar
from operations.tensor_io import (
    bundled_tables,
    format_slice_text,
    load_named_pattern,
    load_tensor,
    parse_json,
    parse_slice_text,
    serialize_json,
)


class TestSliceText:

    def test_table1_cross_pattern(self, table1):
        assert table1.dims == (3, 3, 3)
        assert table1.m() == 7
        assert table1.is_exact()
        assert all(value == PolarScalar(Fraction(1)) for value in table1.values)
        assert set(table1.pattern.indices) == {
            (1, 1, 1), (1, 2, 1), (1, 3, 1), (1, 1, 2), (1, 1, 3), (2, 1, 1), (3, 1, 1)
        }

    def test_single_cell(self):
        tensor = parse_slice_text("5")
        assert tensor.dims == (1, 1, 1)
        assert tensor.pattern.indices == ((1, 1, 1),)
        assert tensor.value((1, 1, 1)).magnitude == 5

    def test_zero_cell_is_rejected(self):
        with pytest.raises(NonzeroViolationError):
            parse_slice_text("1 0 | 1 1")

    def test_ragged_rows(self):
        with pytest.raises(RaggedRowsError) as info:
            parse_slice_text("1 1 | 1 1\n1 | 1 1")
        assert info.value.line == 2

    def test_ragged_slices(self):
        with pytest.raises(RaggedRowsError):
            parse_slice_text("1 1 | 1 1\n1 1")

    def test_all_missing_is_empty(self):
        with pytest.raises(EmptyPatternError):
            parse_slice_text("* * | * *\n* * | * *")

    def test_blank_text_is_empty(self):
        with pytest.raises(EmptyPatternError):
            parse_slice_text("# only a comment\n\n")

    def test_invalid_literal_names_the_cell(self):
        with pytest.raises(TensorParseError) as info:
            parse_slice_text("1 x | 1 1", source="bad.slices")
        assert "(1,2,1)" in str(info.value)

    def test_negative_and_polar_cells(self):
        tensor = parse_slice_text("-1 2@1/3 | 3/4 -0.5@1/4")
        assert tensor.value((1, 1, 1)) == PolarScalar(Fraction(1), Fraction(1, 2))
        assert tensor.value((1, 2, 1)) == PolarScalar(Fraction(2), Fraction(1, 3))
        assert tensor.value((1, 1, 2)) == PolarScalar(Fraction(3, 4))
        assert tensor.value((1, 2, 2)) == PolarScalar(Fraction(1, 2), Fraction(3, 4))

    def test_decimal_literals_are_exact(self, table5):
        assert table5.value((1, 1, 1)).magnitude == Fraction(11718, 10000)

    def test_ampersand_separated_cells(self):
        assert parse_slice_text("1 & 2 | 3 & *").m() == 3

    def test_table5_has_fifteen_observations(self, table5):
        assert table5.m() == 15
        assert table5.is_positive()

    def test_table4_negative_entry(self, table4):
        assert table4.value((1, 1, 1)).phase_turns == Fraction(1, 2)
        assert table4.value((1, 1, 1)).sign_bit() == 1


class TestJson:

    def test_table4_json_matches_slice_text(self, table4, table4_json):
        assert table4_json == table4

    def test_empty_entries(self):
        with pytest.raises(EmptyPatternError):
            parse_json('{"dims": [3, 3, 3], "entries": []}')

    def test_matrix_case(self):
        tensor = parse_json('{"dims":[2,2],"entries":[{"index":[1,1],"mag":"2","phase_turns":"0"}]}')
        assert tensor.dims == (2, 2)
        assert tensor.m() == 1
        assert tensor.is_exact()

    def test_out_of_range_index(self):
        with pytest.raises(IndexOutOfRangeError):
            parse_json('{"dims":[2,2],"entries":[{"index":[3,1],"mag":"1","phase_turns":"0"}]}')

    def test_duplicate_index(self):
        text = ('{"dims":[2,2],"entries":[{"index":[1,1],"mag":"1","phase_turns":"0"},'
                '{"index":[1,1],"mag":"2","phase_turns":"0"}]}')
        with pytest.raises(DuplicateIndexError):
            parse_json(text)

    def test_zero_magnitude(self):
        with pytest.raises(NonzeroViolationError):
            parse_json('{"dims":[2,2],"entries":[{"index":[1,1],"mag":"0","phase_turns":"0"}]}')

    def test_numbers_give_float_mode(self):
        tensor = parse_json('{"dims":[2,2],"entries":[{"index":[1,2],"mag":1.5,"phase_turns":0.25}]}')
        assert tensor.mode is ValueMode.FLOAT
        assert tensor.phase_targets() == [Fraction(1, 4)]

    def test_malformed_document(self):
        with pytest.raises(TensorParseError):
            parse_json("[1, 2]")
        with pytest.raises(TensorParseError):
            parse_json("{not json")

    def test_exact_round_trip(self, table3):
        tensor = table3.with_values([PolarScalar(Fraction(k + 2, 3), Fraction(k, 7)) for k in range(table3.m())])
        assert parse_json(serialize_json(tensor)) == tensor

    def test_serialization_is_key_sorted(self, table1):
        text = serialize_json(table1)
        assert text.index('"dims"') < text.index('"entries"')
        assert '"mag": "1"' in text


class TestFiles:

    def test_slice_text_round_trip(self, table4):
        assert parse_slice_text(format_slice_text(table4), table4.pattern.source) == table4

    def test_format_requires_three_modes(self):
        tensor = parse_json('{"dims":[2,2],"entries":[{"index":[1,1],"mag":"2","phase_turns":"0"}]}')
        with pytest.raises(PreconditionError):
            format_slice_text(tensor)

    def test_load_picks_parser(self, tmp_path, table4):
        path = tmp_path / "t4.txt"
        path.write_text(serialize_json(table4))
        assert load_tensor(path) == table4

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(TensorParseError):
            load_tensor(tmp_path / "missing.slices")

    def test_bundled_tables(self):
        assert {"table1", "table2", "table3", "table4", "table5"} <= set(bundled_tables())
        assert load_named_pattern("table2").m() == 7
