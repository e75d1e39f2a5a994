import pytest

from colorpart.colored import (
    PRESETS,
    ColoredPart,
    ResidueSystem,
    count_D,
    count_D_qseries,
    enumerate_colored,
    format_colored,
    get_preset,
    identity_check,
    is_valid_colored,
    iter_colored,
    multiplicity,
    parse_colored,
    parse_system,
)
from oracles import brute_colored

MOD7 = PRESETS["mod7"]

# The six reference partitions of 15 and of 14, with colors written out.
REFERENCE_S15 = [
    "15@1+",
    "11@2-,3@2+,1@1+",
    "9@3-,5@3+,1@1+",
    "7@4+,5@3+,3@2+",
    "7@4-,5@3+,3@2+",
    "7@4+,7@4-,1@1+",
]
REFERENCE_T14 = [
    "14@1+",
    "14@1-",
    "12@2-,2@2+",
    "10@3-,4@3+",
    "8@4-,6@4+",
    "8@4-,4@3+,2@2+",
]


def test_residue_system_validation():
    with pytest.raises(ValueError):
        ResidueSystem((4,), (3,))
    with pytest.raises(ValueError):
        ResidueSystem((4, 4), (1,))
    s = ResidueSystem((6, 6, 6, 6), (0, 0, 2, 2))
    assert s.zero_count == 2 and s.r == 1 and not s.parity_required
    assert ResidueSystem((2,), (1,)).r == 0 and ResidueSystem((2,), (1,)).parity_required
    assert ResidueSystem((2,), (0,)).r == 0


@pytest.mark.parametrize(
    "preset, side, n, expected",
    [("mod7", "S", 7, 2), ("mod3", "S", 3, 4), ("mod5", "T", 10, 8), ("mod7", "T", 14, 2)],
)
def test_multiplicity_examples(preset, side, n, expected):
    assert multiplicity(getattr(get_preset(preset), side), n) == expected


def test_mod7_multiplicity_prose():
    S, T = MOD7.S, MOD7.T
    for n in range(1, 501):
        if n % 2:
            assert multiplicity(S, n) == (2 if n % 7 == 0 else 1)
            assert multiplicity(T, n) == 0
        else:
            assert multiplicity(S, n) == 0
            assert multiplicity(T, n) == (2 if n % 7 == 0 else 1)


def _as_sets(texts):
    return {frozenset(parse_colored(t)) for t in texts}


def test_reference_partitions_of_15_and_14():
    s15 = enumerate_colored(MOD7.S, 15)
    t14 = enumerate_colored(MOD7.T, 14)
    assert {frozenset(p) for p in s15} == _as_sets(REFERENCE_S15)
    assert {frozenset(p) for p in t14} == _as_sets(REFERENCE_T14)
    assert count_D(MOD7.S, 15) == count_D(MOD7.T, 14) == 6


def test_mod11_three():
    parts = enumerate_colored(PRESETS["mod11"].S, 3)
    assert parts == [(ColoredPart(3, 1, "+"),), (ColoredPart(3, 1, "-"),)]


def test_count_examples():
    assert count_D(PRESETS["mod5"].S, 3) == 8
    assert count_D(PRESETS["mod5"].T, 0) == 1
    assert count_D(MOD7.S, 0) == 0
    assert count_D(MOD7.S, -1) == 0
    assert count_D_qseries(PRESETS["mod3"].T, 0) == [1]
    assert count_D_qseries(MOD7.S, 15)[15] == 6


def test_enumeration_against_brute_force():
    for preset in PRESETS.values():
        for system in (preset.S, preset.T):
            for N in range(0, 15):
                found = enumerate_colored(system, N)
                assert len(found) == len(set(found))
                assert all(is_valid_colored(system, p) for p in found)
                brute = brute_colored(system.C, system.A, N, system.parity_required)
                assert {frozenset(p) for p in found} == set(brute)


def test_enumeration_is_canonical():
    for preset in PRESETS.values():
        for N in (10, 17):
            found = enumerate_colored(preset.T, N)
            assert found == sorted(found, key=lambda parts: [p.sort_key() for p in parts])
            for parts in found:
                assert list(parts) == sorted(parts, key=ColoredPart.sort_key)


def test_count_routes_agree():
    for preset in PRESETS.values():
        for system in (preset.S, preset.T):
            series = count_D_qseries(system, 120)
            assert [count_D(system, N) for N in range(121)] == series
            for N in range(0, 26):
                assert count_D(system, N) == sum(1 for _ in iter_colored(system, N))


def test_odd_universe_parity():
    for name in ("mod7", "mod5", "mod11"):
        system = PRESETS[name].S
        for N in range(0, 60, 2):
            assert count_D(system, N) == 0


@pytest.mark.parametrize("name, N, ds, dt", [("mod7", 15, 6, 6), ("mod5", 3, 8, 1), ("mod11", 3, 2, 1)])
def test_identity_spot_values(name, N, ds, dt):
    preset = get_preset(name)
    record = identity_check(preset, N).records[-1]
    assert (record.N, record.D_S, record.D_T) == (N, ds, dt)
    assert record.passed and record.oracle_agrees


def test_identity_check_small_ranges():
    for preset in PRESETS.values():
        report = identity_check(preset, 60)
        assert report.passed and not report.failures()
        assert [r.N for r in report.records] == list(range(preset.N0, 61))
        assert identity_check(preset, 60, method="qseries").passed
        assert identity_check(preset, 60, method="enumeration").passed


def test_identity_check_reports_failures():
    bogus = PRESETS["mod7"].__class__(
        "bogus", ResidueSystem((2,), (1,)), ResidueSystem((2,), (0,)), m=0, N0=1, p_exponent=0
    )
    report = identity_check(bogus, 10)
    assert not report.passed
    assert report.failures()


def test_preset_constants():
    p5, p11 = get_preset("mod5"), get_preset("mod11")
    assert (p5.m, p5.N0, p5.p_exponent, p5.k, p5.S_k_count) == (3, 3, 3, 1, 4)
    assert (p11.m, p11.N0, p11.p_exponent, p11.k, p11.S_k_count) == (3, 3, 1, 1, 2)
    p23 = get_preset("mod23")
    assert p23.S.A == (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23)
    assert p23.T.A == (0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22)
    assert p23.S.C == (46,) * 12
    with pytest.raises(KeyError):
        get_preset("mod13")


def test_parse_and_format():
    pi = parse_colored("1@1, 7@4-, 7@4+", MOD7.S)
    assert format_colored(pi) == "7@4+,7@4-,1@1+"
    assert parse_colored("") == () == parse_colored("()")
    with pytest.raises(ValueError):
        parse_colored("3@3+", get_preset("mod5").S)
    with pytest.raises(ValueError):
        parse_colored("7@4+,7@4+", MOD7.S)
    with pytest.raises(ValueError):
        parse_colored("7#4")
    system = parse_system("t=2;C=2,22;A=1,11")
    assert system == PRESETS["mod11"].S
    for bad in ("t=2;C=2;A=1", "C=2;A=1", "t=1;C=4;A=3"):
        with pytest.raises(ValueError):
            parse_system(bad)
