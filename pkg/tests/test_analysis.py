"""Report building: field contracts, engine cross-check, serialization."""

from __future__ import annotations

import json

import pytest

from hypercode import (
    BitMatrix,
    EngineDisagreement,
    EnumerationCapError,
    analyze_hypergraph,
    analyze_matrix,
    complete_3partite,
    fano_circulant,
    parse_matrix,
)
from hypercode.analysis import CSV_COLUMNS


class TestAnalyzeHypergraph:
    def test_fano_report(self):
        report = analyze_hypergraph(fano_circulant(), method="both", weights=True)
        assert (report.length, report.dimension, report.min_distance) == (7, 4, 3)
        assert report.method == "both"
        assert report.witness == (0,)
        assert report.distance_exact is True
        assert not report.self_orthogonal and not report.self_dual
        assert report.weight_dist == {0: 1, 3: 7, 4: 7, 7: 1}

    def test_methods_agree_on_value(self):
        hg = complete_3partite(2)
        by_codewords = analyze_hypergraph(hg, method="codeword")
        by_subsets = analyze_hypergraph(hg, method="eonv")
        assert by_codewords.min_distance == by_subsets.min_distance == 4
        assert by_codewords.witness is None
        assert by_subsets.witness == (0,)

    def test_threads_do_not_change_the_report(self):
        hg = complete_3partite(3)
        single = analyze_hypergraph(hg, method="both", weights=True)
        pooled = analyze_hypergraph(hg, method="both", weights=True, threads=4)
        assert single == pooled

    def test_early_exit_flags_inexact(self):
        report = analyze_hypergraph(fano_circulant(), method="both", early_exit=7)
        assert report.distance_exact is False
        assert report.min_distance >= 3

    def test_invalid_method(self):
        with pytest.raises(ValueError):
            analyze_hypergraph(fano_circulant(), method="magic")

    def test_cap_propagates(self):
        with pytest.raises(EnumerationCapError):
            analyze_hypergraph(fano_circulant(), cap=3)


class TestAnalyzeMatrix:
    def test_zero_code_has_no_distance(self):
        report = analyze_matrix(BitMatrix.zeros(2, 5), method="both")
        assert (report.length, report.dimension) == (5, 0)
        assert report.min_distance is None
        assert report.witness is None
        assert report.distance_exact is None
        assert report.self_orthogonal and not report.self_dual

    def test_matrix_with_zero_columns(self):
        # dropping always-zero coordinates must not change the distance
        matrix = parse_matrix("2 4\n1010\n0010\n")
        report = analyze_matrix(matrix, method="both")
        assert report.length == 4
        assert report.min_distance == 1

    def test_generic_matrix_engines_agree(self):
        matrix = parse_matrix("3 5\n11010\n01101\n10111\n")
        report = analyze_matrix(matrix, method="both")
        assert report.distance_exact is True
        assert report.min_distance is not None

    def test_engine_disagreement_is_raised(self, monkeypatch):
        import hypercode.analysis as analysis_module

        real = analysis_module.codeword_distance_search

        def lying_search(code, **kwargs):
            result = real(code, **kwargs)
            return type(result)(result.value + 1, result.exact, result.method)

        monkeypatch.setattr(analysis_module, "codeword_distance_search", lying_search)
        with pytest.raises(EngineDisagreement):
            analyze_hypergraph(fano_circulant(), method="both")


class TestSerialization:
    def test_json_fields_and_order(self):
        report = analyze_hypergraph(fano_circulant(), method="both", weights=True)
        data = json.loads(report.to_json())
        assert list(data) == [
            "length",
            "dimension",
            "min_distance",
            "min_distance_method",
            "witness_subset",
            "self_orthogonal",
            "self_dual",
            "weight_distribution",
            "distance_exact",
        ]
        assert data["witness_subset"] == [1]
        assert data["weight_distribution"] == {"0": 1, "3": 7, "4": 7, "7": 1}

    def test_json_omits_absent_fields(self):
        report = analyze_matrix(BitMatrix.zeros(2, 5))
        data = json.loads(report.to_json())
        assert "min_distance" not in data
        assert "witness_subset" not in data
        assert "weight_distribution" not in data
        assert "distance_exact" not in data

    def test_csv_round_trip_fields(self):
        report = analyze_hypergraph(fano_circulant(), method="both", weights=True)
        header, row = report.to_csv().splitlines()
        assert header == ",".join(CSV_COLUMNS)
        values = dict(zip(header.split(","), row.split(",")))
        assert values["length"] == "7"
        assert values["min_distance"] == "3"
        assert values["witness_subset"] == "1"
        assert values["self_orthogonal"] == "false"
        assert values["weight_distribution"] == "0:1;3:7;4:7;7:1"
