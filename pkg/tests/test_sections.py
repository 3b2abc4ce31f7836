from math import comb

import pytest

from detscheme import (
    ConditionError,
    DegreeData,
    family_dimension,
    family_dimension_via_sections,
    resolution_term,
    resolution_terms,
    section_count,
    section_table,
    tail_section_count,
    vanishing_threshold,
)
from detscheme.corpus import random_standard_instances

from .conftest import E1, E2, E3


class TestTailTerms:
    def test_rank_matches_tuple_count(self):
        for d in random_standard_instances(30, seed=3):
            for term in resolution_terms(d):
                assert term.rank == len(term.degree_offsets)
                expected = comb(d.a, d.a - d.b - term.s - 1) * comb(d.b + term.s - 1, term.s)
                assert term.rank == expected

    def test_out_of_range_index(self):
        with pytest.raises(ValueError):
            resolution_term(E1, 1)
        with pytest.raises(ValueError):
            resolution_term(E1, -1)

    def test_single_term_examples(self):
        # E1: a-b-s-1 = 0, so the s=0 term is the single offset n - ell
        assert tail_section_count(E1, 0, 1) == 0
        assert tail_section_count(E1, 0, 3) == 1
        assert tail_section_count(E3, 1, -10) == 0


class TestSectionCount:
    def test_frozen_table(self):
        # frozen from scripts/freeze_reference_values.py
        assert section_table(E1, -1, 2) == [(-1, 0), (0, 2), (1, 7), (2, 15)]

    def test_hypersurface_rejected(self):
        with pytest.raises(ConditionError):
            section_count(DegreeData(3, (1, 2), (0, 0)), 0)

    def test_vanishing_window(self):
        for d in random_standard_instances(40, seed=13):
            threshold = vanishing_threshold(d)
            for t in range(threshold - 4, threshold):
                assert section_count(d, t) == 0

    def test_nonnegative_from_min_beta(self):
        for d in random_standard_instances(40, seed=29):
            for t in range(min(d.betas), max(d.alphas) + 3):
                assert section_count(d, t) >= 0


class TestGrandIdentity:
    def test_fixture_values(self):
        assert family_dimension_via_sections(E1) == 18
        assert family_dimension_via_sections(E2) == 36
        assert family_dimension_via_sections(E3) == 29

    def test_dimension_hypothesis_enforced(self):
        with pytest.raises(ConditionError):
            family_dimension_via_sections(DegreeData(4, (1, 1, 1, 1), (0, 0)))

    def test_randomized_suite(self):
        # the package's central cross-check: both dimension routes agree exactly
        instances = random_standard_instances(200, seed=42)
        for d in instances:
            assert family_dimension_via_sections(d) == family_dimension(d).dim_y
