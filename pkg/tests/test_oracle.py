"""Brute-force enumeration tests and the frozen regression fixture.

The fixture tests compare against tests/fixtures/enumeration_f12.json,
which is the byte-exact output of

    numsem enumerate-all --frobenius-bound 12 --format json --output tests/fixtures/enumeration_f12.json

Rerun that command to regenerate it after an intentional change.
"""

import json
from pathlib import Path

import pytest

from numsem import (
    NATURALS,
    BoundTooLarge,
    NumericalSemigroup,
    all_semigroups_up_to,
    arithmetic_extensions,
    doubles_oracle,
    extension_oracle,
    halve,
)
from numsem.cli import main

NS = NumericalSemigroup
FIXTURE = Path(__file__).parent / "fixtures" / "enumeration_f12.json"


class TestAllSemigroupsUpTo:
    def test_bound_one(self):
        rep = all_semigroups_up_to(1)
        assert rep.semigroups == (NATURALS, NS.from_generators([2, 3]))
        assert rep.counts_by_frobenius == {-1: 1, 1: 1}

    def test_bound_five(self):
        assert len(all_semigroups_up_to(5).semigroups) == 12

    def test_report_invariants(self):
        rep = all_semigroups_up_to(9)
        assert sum(rep.counts_by_frobenius.values()) == len(rep.semigroups)
        assert len(set(rep.semigroups)) == len(rep.semigroups)
        assert list(rep.semigroups) == sorted(rep.semigroups)
        for s in rep.semigroups:
            assert s.frobenius <= 9

    def test_every_result_really_is_a_semigroup(self):
        # constructor revalidates closure; surviving construction is the check
        for s in all_semigroups_up_to(8).semigroups:
            assert NS.from_gaps(s.gaps) == s

    def test_cap(self):
        with pytest.raises(BoundTooLarge):
            all_semigroups_up_to(21)
        with pytest.raises(ValueError):
            all_semigroups_up_to(0)


class TestFrozenFixture:
    def test_fixture_matches_current_enumeration(self):
        data = json.loads(FIXTURE.read_text())
        rep = all_semigroups_up_to(12)
        assert data == rep.to_json_dict()

    def test_fixture_counts_frozen(self):
        data = json.loads(FIXTURE.read_text())
        assert data["counts"] == {
            "-1": 1, "1": 1, "2": 1, "3": 2, "4": 2, "5": 5, "6": 4,
            "7": 11, "8": 10, "9": 21, "10": 22, "11": 51, "12": 40,
        }
        assert len(data["semigroups"]) == 171

    def test_fixture_bytes_match_cli_output(self, capsys):
        assert main(["enumerate-all", "--frobenius-bound", "12", "--format", "json"]) == 0
        assert capsys.readouterr().out == FIXTURE.read_text()


class TestDoublesOracle:
    def test_worked_example_count(self):
        assert len(doubles_oracle(NS.from_generators([4, 5, 11]), 15)) == 18

    def test_tight_bound(self):
        assert doubles_oracle(NS.from_generators([4, 5, 11]), 13) == []

    def test_naturals(self):
        got = doubles_oracle(NATURALS, 5)
        assert got == [NS.from_generators([2, 3]), NS.from_generators([2, 5]), NS.from_generators([2, 7])]
        assert NATURALS not in got

    def test_results_halve_back(self):
        s = NS.from_generators([3, 4, 5])
        for t in doubles_oracle(s, 10):
            assert halve(t) == s


class TestExtensionOracle:
    def test_known_families(self):
        assert [str(t) for t in extension_oracle(NS.from_generators([2, 5]))] == ["<1>", "<2,3>", "<2,5>"]
        assert extension_oracle(NATURALS).members == (NATURALS,)

    def test_second_smallest_member(self):
        members = extension_oracle(NS.from_generators([5, 7, 9])).members
        by_inclusion = sorted(members, key=lambda t: t.genus, reverse=True)
        assert by_inclusion[0] == NS.from_generators([5, 7, 9])
        assert by_inclusion[1] == NS.from_generators([5, 6, 7, 8, 9])

    def test_agreement_with_closure_route(self):
        for s in all_semigroups_up_to(8).semigroups:
            assert extension_oracle(s).members == arithmetic_extensions(s).members
