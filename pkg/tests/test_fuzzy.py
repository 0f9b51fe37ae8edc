import json
import random

import pytest

from iaarank import (
    FuzzyNumber,
    Interval,
    IntervalSet,
    Region,
    ScaleConfig,
    canonicalize,
    construct_fuzzy,
    evaluation_points,
    membership_at,
)

import oracle
from conftest import make_set

WIDE = ScaleConfig(0, 10)


def triples(fz):
    return [(r.left, r.right, r.height) for r in fz.regions]


class TestMembershipAt:
    def test_film_h_at_4(self, film_sets):
        assert membership_at(film_sets["Film H"], 4) == pytest.approx(0.8)

    def test_film_b_at_5(self, film_sets):
        assert membership_at(film_sets["Film B"], 5) == pytest.approx(0.4)

    def test_film_b_outside(self, film_sets):
        assert membership_at(film_sets["Film B"], 8) == 0.0


class TestConstruction:
    def test_film_a_single_spike(self, film_numbers):
        assert triples(film_numbers["Film A"]) == [(1, 1, 1.0)]

    def test_film_b_regions(self, film_numbers):
        assert triples(film_numbers["Film B"]) == [
            (3, 4, 0.2),
            (5, 5, 0.4),
            (5, 6, 0.2),
            (6, 6, 0.4),
            (6, 7, 0.2),
            (10, 10, 0.2),
        ]

    def test_film_h_regions(self, film_numbers):
        assert triples(film_numbers["Film H"]) == [
            (1, 1.5, 0.2),
            (1.5, 2, 0.4),
            (2, 3, 0.6),
            (3, 6.5, 0.8),
            (6.5, 8, 0.6),
            (8, 8.8, 0.8),
            (8.8, 9.3, 0.6),
            (9.3, 10, 0.4),
        ]

    def test_endpoints_retained(self, film_numbers):
        assert film_numbers["Film B"].endpoints == (3, 4, 5, 6, 7, 10)

    def test_label_and_n(self, film_numbers):
        fz = film_numbers["Film G"]
        assert fz.label == "Film G"
        assert fz.n == 5

    def test_out_of_scale_rejected(self):
        iset = make_set("x", [(0, 5)])
        with pytest.raises(Exception):
            construct_fuzzy(iset, ScaleConfig(1, 10))

    def test_heights_are_fifths(self, film_numbers):
        for fz in film_numbers.values():
            for region in fz.regions:
                assert region.height * fz.n == pytest.approx(
                    round(region.height * fz.n)
                )

    def test_full_height_iff_total_overlap(self, film_numbers):
        for label in ("Film A", "Film I", "Film J"):
            assert max(r.height for r in film_numbers[label].regions) == 1.0
        assert max(r.height for r in film_numbers["Film B"].regions) < 1.0


class TestEvaluationPoints:
    def test_film_b_vs_best(self, film_numbers, film_ideals):
        best, _ = film_ideals
        assert evaluation_points(film_numbers["Film B"], best) == (3, 4, 5, 6, 7, 10)

    def test_self_union_idempotent(self, film_numbers):
        fz = film_numbers["Film A"]
        assert evaluation_points(fz, fz) == (1,)

    def test_film_g_vs_best(self, film_numbers, film_ideals):
        best, _ = film_ideals
        assert evaluation_points(film_numbers["Film G"], best) == (8, 9, 9.5, 10)


class TestCanonicalize:
    def test_adjacent_equal_segments_merge(self):
        merged = canonicalize([Region(0, 1, 0.5), Region(1, 2, 0.5)])
        assert merged == (Region(0, 2, 0.5),)

    def test_spike_keeps_segments_split(self):
        regions = (Region(0, 1, 0.5), Region(1, 1, 0.8), Region(1, 2, 0.5))
        assert canonicalize(regions) == regions

    def test_redundant_spike_dropped(self):
        merged = canonicalize([Region(0, 1, 0.5), Region(1, 1, 0.5), Region(1, 2, 0.5)])
        assert merged == (Region(0, 2, 0.5),)

    def test_spike_inside_segment_splits_it(self):
        cleaned = canonicalize([Region(0, 4, 0.5), Region(2, 2, 0.8)])
        assert cleaned == (Region(0, 2, 0.5), Region(2, 2, 0.8), Region(2, 4, 0.5))

    def test_zero_regions(self):
        assert canonicalize([]) == ()

    def test_idempotent_on_films(self, film_numbers):
        for fz in film_numbers.values():
            assert canonicalize(fz.regions) == fz.regions

    def test_idempotent_on_random_sets(self):
        rng = random.Random(23)
        for trial in range(300):
            pairs = oracle.random_pairs(rng)
            fz = construct_fuzzy(make_set(f"t{trial}", pairs), WIDE)
            assert canonicalize(fz.regions) == fz.regions


class TestOracleEquivalence:
    def test_quick_random_sample(self):
        rng = random.Random(31)
        for trial in range(300):
            pairs = oracle.random_pairs(rng)
            fz = construct_fuzzy(make_set(f"t{trial}", pairs), WIDE)
            xs = list(fz.endpoints)
            xs += [(a + b) / 2 for a, b in zip(xs, xs[1:])]
            xs += [rng.uniform(0, 10) for _ in range(30)]
            for x in xs:
                assert fz.membership(x) == oracle.count_membership(pairs, x)

    def test_regions_match_oracle_decomposition(self):
        rng = random.Random(37)
        for trial in range(300):
            pairs = oracle.random_pairs(rng)
            fz = construct_fuzzy(make_set(f"t{trial}", pairs), WIDE)
            assert triples(fz) == oracle.brute_regions(pairs)

    def test_support_preserved(self):
        rng = random.Random(41)
        for trial in range(300):
            pairs = oracle.random_pairs(rng)
            fz = construct_fuzzy(make_set(f"t{trial}", pairs), WIDE)
            spans = []
            for left, right in sorted(pairs):
                if spans and left <= spans[-1][1]:
                    spans[-1][1] = max(spans[-1][1], right)
                else:
                    spans.append([left, right])
            region_spans = []
            for r in fz.regions:
                if region_spans and r.left <= region_spans[-1][1]:
                    region_spans[-1][1] = max(region_spans[-1][1], r.right)
                else:
                    region_spans.append([r.left, r.right])
            assert region_spans == spans


class TestFuzzyNumberType:
    def test_membership_max_rule(self, film_numbers):
        fz = film_numbers["Film B"]
        assert fz.membership(5) == pytest.approx(0.4)
        assert fz.membership(5.5) == pytest.approx(0.2)
        assert fz.membership(4.5) == 0.0
        assert fz.membership(10) == pytest.approx(0.2)

    def test_support_bounds(self, film_numbers):
        fz = film_numbers["Film B"]
        assert fz.support_min == 3
        assert fz.support_max == 10

    def test_needs_regions(self):
        with pytest.raises(ValueError):
            FuzzyNumber(regions=(), endpoints=(1,), n=1, scale=WIDE)

    def test_rejects_unsorted_regions(self):
        with pytest.raises(ValueError):
            FuzzyNumber(
                regions=(Region(2, 3, 0.5), Region(0, 1, 0.5)),
                endpoints=(0, 3),
                n=2,
                scale=WIDE,
            )

    def test_rejects_overlapping_segments(self):
        with pytest.raises(ValueError):
            FuzzyNumber(
                regions=(Region(0, 2, 0.5), Region(1, 3, 0.5)),
                endpoints=(0, 3),
                n=2,
                scale=WIDE,
            )

    def test_region_height_bounds(self):
        with pytest.raises(ValueError):
            Region(0, 1, 0.0)
        with pytest.raises(ValueError):
            Region(0, 1, 1.5)
        with pytest.raises(ValueError):
            Region(2, 1, 0.5)

    def test_json_round_trip(self, film_numbers, film_scale):
        fz = film_numbers["Film B"]
        payload = json.loads(json.dumps(fz.to_dict()))
        assert set(payload) == {"label", "n", "regions", "endpoints"}
        again = FuzzyNumber.from_dict(payload, film_scale)
        assert again == fz
