"""Stirling triangle: three computation routes, enumeration oracle, disk format."""
import pytest

from bernocchi.stirling import (
    TriangleFormatError,
    TriangleInvariantError,
    TriangleVersionError,
    set_partitions,
    shared_triangle,
    stirling_enumerate,
    stirling_explicit,
    stirling_via_series,
    triangle_build,
    triangle_load,
    triangle_save,
)


def test_partition_enumerator_lists_all_of_three():
    blocks = [sorted(sorted(block) for block in p) for p in set_partitions([1, 2, 3])]
    blocks.sort()
    assert blocks == [
        [[1], [2], [3]],
        [[1], [2, 3]],
        [[1, 2], [3]],
        [[1, 2, 3]],
        [[1, 3], [2]],
    ]


def test_enumeration_oracle_values():
    assert stirling_enumerate(4, 2) == 7
    assert stirling_enumerate(5, 1) == 1
    assert stirling_enumerate(0, 0) == 1
    assert stirling_enumerate(3, 2) == 3
    assert stirling_enumerate(5, 7) == 0


def test_enumeration_oracle_is_capped():
    with pytest.raises(ValueError):
        stirling_enumerate(11, 3)


def test_triangle_rows():
    t = triangle_build(4)
    assert t.row(0) == (1,)
    assert t.row(1) == (0, 1)
    assert t.row(4) == (0, 1, 7, 6, 1)


def test_triangle_matches_enumeration():
    t = triangle_build(8)
    for n in range(9):
        for k in range(n + 1):
            assert t.value(n, k) == stirling_enumerate(n, k)


def test_triangle_value_conventions():
    t = triangle_build(5)
    assert t.value(3, 5) == 0  # k > n
    with pytest.raises(ValueError):
        t.value(6, 1)  # row not built
    with pytest.raises(ValueError):
        t.value(-1, 0)


def test_explicit_sum_values():
    assert stirling_explicit(3, 2) == 3  # (1/2)(-2*1 + 1*8)
    assert stirling_explicit(4, 2) == 7  # (1/2)(-2*1 + 16)
    assert stirling_explicit(5, 5) == 1
    assert stirling_explicit(0, 0) == 1
    assert stirling_explicit(4, 0) == 0
    assert stirling_explicit(2, 6) == 0


def test_series_route_values():
    assert stirling_via_series(4, 2) == 7
    assert stirling_via_series(3, 3) == 1
    assert stirling_via_series(2, 3) == 0


def test_series_route_rejects_small_order():
    with pytest.raises(ValueError):
        stirling_via_series(5, 2, order=4)
    with pytest.raises(ValueError):
        stirling_via_series(3, 0)


def test_three_routes_agree():
    limit = 16  # the full sweep to 40 runs in the acceptance suite
    t = triangle_build(limit)
    for n in range(limit + 1):
        for k in range(n + 1):
            value = t.value(n, k)
            if k >= 1:
                assert stirling_explicit(n, k) == value
                assert stirling_via_series(n, k, order=limit) == value


def test_row_sums_satisfy_bell_recurrence():
    from bernocchi.exact import binomial

    t = triangle_build(16)
    bell = [sum(t.row(n)) for n in range(17)]
    for n in range(16):
        assert bell[n + 1] == sum(binomial(n, k) * bell[k] for k in range(n + 1))


def test_shared_triangle_grows_and_snapshots():
    small = shared_triangle(3)
    big = shared_triangle(12)
    assert small.max_n == 3
    assert big.row(3) == small.row(3)
    assert big.value(12, 3) == triangle_build(12).value(12, 3)


def test_save_load_round_trip(tmp_path):
    t = triangle_build(10)
    path = tmp_path / "triangle.txt"
    triangle_save(t, path)
    assert triangle_load(path) == t


def test_load_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    with pytest.raises(TriangleFormatError):
        triangle_load(path)


def test_load_bad_magic(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("NOTATRIANGLE v1 max_n=2\nEND 0\n")
    with pytest.raises(TriangleFormatError):
        triangle_load(path)


def test_load_version_mismatch(tmp_path):
    path = tmp_path / "v2.txt"
    triangle_save(triangle_build(2), path)
    path.write_text(path.read_text().replace("STIRLING2 v1", "STIRLING2 v2", 1))
    with pytest.raises(TriangleVersionError):
        triangle_load(path)


def test_load_missing_end(tmp_path):
    path = tmp_path / "noend.txt"
    triangle_save(triangle_build(2), path)
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(TriangleFormatError):
        triangle_load(path)


def test_load_wrong_end_count(tmp_path):
    path = tmp_path / "count.txt"
    triangle_save(triangle_build(2), path)
    path.write_text(path.read_text().replace("END 6", "END 7"))
    with pytest.raises(TriangleFormatError):
        triangle_load(path)


def test_load_corrupted_row_length(tmp_path):
    # drop one entry line and patch the END count so only the row shape is wrong
    path = tmp_path / "short.txt"
    triangle_save(triangle_build(3), path)
    lines = path.read_text().splitlines()
    del lines[3]  # removes entry "1 1 1"
    lines[-1] = "END 9"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(TriangleInvariantError):
        triangle_load(path)


def test_load_tampered_value(tmp_path):
    path = tmp_path / "tampered.txt"
    triangle_save(triangle_build(4), path)
    path.write_text(path.read_text().replace("4 2 7", "4 2 8"))
    with pytest.raises(TriangleInvariantError):
        triangle_load(path)


def test_load_garbled_entry(tmp_path):
    path = tmp_path / "garbled.txt"
    triangle_save(triangle_build(2), path)
    path.write_text(path.read_text().replace("2 1 1", "2 1 one"))
    with pytest.raises(TriangleFormatError):
        triangle_load(path)
