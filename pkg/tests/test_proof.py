# -*- coding: utf-8 -*-
from __future__ import annotations

import copy
import json

import pytest

from srg_lab.params import SrgParams
from srg_lab_apps.proof import (
    SRG19,
    ApexSearch,
    CertificateKind,
    ClassLayout,
    CycleStructure,
    ProofConfig,
    cycle_edges,
    exhaust_apex_assignments,
    prove_nonexistence_19,
    replay_file,
    replay_trace,
)


# Fixtures
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@pytest.fixture(scope="module")
def trace():
    return prove_nonexistence_19()


@pytest.fixture
def trace_data(trace):
    return copy.deepcopy(trace.to_dict())


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Layout
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestLayout:

    def test_blocks(self):
        """Verify the canonical blocks of srg(19,6,1,2)."""
        layout = ClassLayout.for_params(SRG19)
        assert layout.A == (3, 4, 5, 6)
        assert layout.B == (7, 8, 9, 10)
        assert layout.C == (11, 12, 13, 14)
        assert layout.W == (15, 16, 17, 18)

    def test_base_edges(self):
        """Verify the anchor triangle plus each anchor's class."""
        edges = ClassLayout.for_params(SRG19).base_edges()
        assert len(edges) == 3 + 12
        assert (1, 7) in edges and (2, 14) in edges

    def test_single_cycle_walk(self):
        """Verify the 12-cycle walks a_i b_i c_i a_(i+1)."""
        edges = cycle_edges(ClassLayout.for_params(SRG19), CycleStructure((12,)))
        assert len(edges) == 12
        assert edges[:3] == ((3, 7), (7, 11), (11, 4))
        assert edges[-1] == (14, 3)

    def test_two_cycle_walk(self):
        """Verify each 6-cycle closes on its own."""
        edges = cycle_edges(ClassLayout.for_params(SRG19), CycleStructure((6, 6)))
        assert edges[:6] == ((3, 7), (7, 11), (11, 4), (4, 8), (8, 12), (12, 3))
        assert edges[6] == (5, 9)

    def test_structure_must_cover_classes(self):
        """Verify a 6-cycle does not cover classes of size 4."""
        with pytest.raises(ValueError):
            cycle_edges(ClassLayout.for_params(SRG19), CycleStructure((6,)))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Refutation
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestRefute:

    @staticmethod
    def _search(lengths):
        layout = ClassLayout.for_params(SRG19)
        return ApexSearch(SRG19, layout, cycle_edges(layout, CycleStructure(lengths)))

    def test_first_apex_is_consistent(self):
        """Verify one apex on one edge violates nothing."""
        assert self._search((6, 6)).refute(((0, 15),)) is None

    def test_shared_apex_on_consecutive_edges(self):
        """Verify one apex on two consecutive edges puts (7, 15) in two triangles."""
        certificate = self._search((6, 6)).refute(((0, 15), (1, 15)))
        assert certificate.kind is CertificateKind.EDGE_IN_TWO_TRIANGLES
        assert certificate.witnesses == {"edge": [7, 15], "apexes": [3, 11]}

    def test_w_pair_over_mu(self):
        """Verify the mu witness is reported ahead of the local rules it also breaks."""
        path = ((0, 15), (1, 16), (2, 17), (3, 18), (4, 15), (5, 16), (6, 17), (7, 16))
        certificate = self._search((12,)).refute(path)
        assert certificate.kind is CertificateKind.MU_VIOLATION_WITH_WITNESSES
        assert certificate.witnesses == {"pair": [16, 17], "common": [5, 9, 11]}

    def test_partial_graph_adds_apex_edges(self):
        """Verify a step joins the apex to both ends of its edge."""
        g = self._search((12,)).partial_graph(((0, 15),))
        assert g.has_edge(15, 3) and g.has_edge(15, 7)
        assert g.degree(15) == 2


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Proof
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestProveNonexistence:

    def test_no_surviving_completions(self, trace):
        """Verify both admissible cases are refuted."""
        assert trace.surviving_completions == 0
        assert trace.counterexamples == []
        assert [case.structure.label for case in trace.cases] == ["6+6", "12"]

    def test_root_has_one_child_per_case(self, trace):
        """Verify the decision tree root branches on the cycle structure."""
        assert trace.root.label == "srg(19,6,1,2)"
        assert len(trace.root.children) == 2

    def test_lemmas_hold(self, trace):
        """Verify every recorded lemma holds."""
        assert [lemma.name for lemma in trace.lemmas] == [
            "partition", "triangle_bookkeeping", "w_independent", "class_matching",
            "bijections", "cycle_structures", "case_layouts"]
        assert all(lemma.holds for lemma in trace.lemmas)

    def test_lemmas_show_their_arithmetic(self, trace):
        """Verify counting records carry the arithmetic and the layouts are recomputed."""
        lemmas = {lemma.name: lemma for lemma in trace.lemmas}
        assert "19 - 7 - 12 = 0" in lemmas["triangle_bookkeeping"].statement
        assert "6 - 3 * 2 = 0" in lemmas["w_independent"].statement
        assert "|W| = 19 - 3 - 3 * 4 = 4" in lemmas["partition"].statement
        assert lemmas["bijections"].basis == "counting"
        assert lemmas["case_layouts"].basis == "checked"
        assert "6+6, 12" in lemmas["case_layouts"].statement

    def test_two_six_cycles_exhaust_apexes(self, trace):
        """Verify the 6+6 case runs out of apexes somewhere."""
        kinds = {leaf.certificate.kind for leaf in trace.cases[0].leaves}
        assert CertificateKind.NO_APEX_AVAILABLE in kinds

    def test_twelve_cycle_hits_mu(self, trace):
        """Verify some 12-cycle leaf is a W pair with three common neighbors."""
        mu_leaves = [leaf for leaf in trace.cases[1].leaves
                     if leaf.certificate.kind is CertificateKind.MU_VIOLATION_WITH_WITNESSES]
        assert any(len(leaf.certificate.witnesses["common"]) == 3 for leaf in mu_leaves)

    def test_twelve_cycle_forced_prefix(self, trace):
        """Verify apex 16 on edge 9-13 after the forced prefix shares 5, 9, 11 with apex 17."""
        path = ((0, 15), (1, 16), (2, 17), (3, 18), (4, 15), (5, 16), (6, 17), (7, 16))
        leaf = next(leaf for leaf in trace.cases[1].leaves if leaf.path == path)
        assert leaf.certificate.to_dict() == {
            "kind": "mu_violation_with_witnesses",
            "witnesses": {"pair": [16, 17], "common": [5, 9, 11]}}

    def test_stats(self, trace):
        """Verify stats add up over the cases."""
        assert trace.stats.leaves == sum(len(case.leaves) for case in trace.cases)
        assert trace.stats.nodes_explored == sum(case.nodes for case in trace.cases)
        assert sum(trace.certificate_counts().values()) == trace.stats.leaves

    def test_to_dict_schema(self, trace):
        """Verify the trace serializes to plain JSON."""
        data = json.loads(json.dumps(trace.to_dict()))
        assert data["params"] == {"n": 19, "k": 6, "lambda": 1, "mu": 2}
        assert data["labeling"]["W"] == [15, 16, 17, 18]
        assert data["surviving_completions"] == 0
        assert [case["label"] for case in data["cases"]] == ["6+6", "12"]

    def test_parallel_matches_serial(self, trace):
        """Verify a process pool gives the same leaves."""
        parallel = prove_nonexistence_19(ProofConfig(jobs=2))
        assert parallel.certificate_counts() == trace.certificate_counts()
        assert parallel.surviving_completions == 0


def test_paley9_scale_has_nothing_to_place():
    """Verify srg(9,4,1,2) has no W class, so the case closes without apex steps."""
    case = exhaust_apex_assignments(CycleStructure((6,)), SrgParams(9, 4, 1, 2))
    assert case.leaves == []
    assert case.completions == [()]
    assert case.nodes == 1


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Replay
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestReplay:

    def test_trace_replays(self, trace_data):
        """Verify every leaf certificate checks out and the tree is exhaustive."""
        report = replay_trace(trace_data)
        assert report.ok, report.failures[:3]
        assert report.checked_leaves == sum(len(c["leaves"]) for c in trace_data["cases"])

    def test_file_round_trip(self, trace, tmp_path):
        """Verify a written trace replays from disk."""
        path = tmp_path / "trace.json"
        trace.write_json(str(path))
        assert replay_file(str(path)).ok

    def test_tampered_certificate(self, trace_data):
        """Verify a forged certificate is reported with its leaf index."""
        trace_data["cases"][0]["leaves"][0]["certificate"] = {
            "kind": "edge_in_two_triangles",
            "witnesses": {"edge": [0, 1], "apexes": [2]}}
        report = replay_trace(trace_data)
        assert not report.ok
        assert any(f.case == "6+6" and f.leaf_index == 0 for f in report.failures)

    def test_missing_leaf(self, trace_data):
        """Verify dropping a leaf leaves a branch uncovered."""
        trace_data["cases"][1]["leaves"].pop()
        report = replay_trace(trace_data)
        assert not report.ok
        assert any(f.reason == "branch not covered" for f in report.failures)

    def test_wrong_structure(self, trace_data):
        """Verify edges must form the declared cycle structure."""
        trace_data["cases"][0]["label"] = "12"
        report = replay_trace(trace_data)
        assert any(f.reason == "edges do not form structure 12" for f in report.failures)

    def test_surviving_completion_fails(self, trace_data):
        """Verify a declared completion keeps the report from passing."""
        trace_data["cases"][0]["completions"] = [[[0, 15]]]
        report = replay_trace(trace_data)
        assert report.surviving_completions == 1
        assert not report.ok

    def test_dropped_case(self, trace_data):
        """Verify a trace without the 12-cycle case does not replay."""
        trace_data["cases"].pop()
        report = replay_trace(trace_data)
        assert not report.ok
        assert [(f.case, f.reason) for f in report.failures] == [("12", "case missing from trace")]

    def test_no_cases(self, trace_data):
        """Verify an empty case list names every missing structure."""
        trace_data["cases"] = []
        report = replay_trace(trace_data)
        assert not report.ok
        assert report.checked_leaves == 0
        assert sorted(f.case for f in report.failures) == ["12", "6+6"]

    def test_wrong_params(self, trace_data):
        """Verify the trace must be about srg(19,6,1,2)."""
        trace_data["params"]["mu"] = 1
        report = replay_trace(trace_data)
        assert not report.ok
        assert report.failures[0].case == "trace"
        assert report.failures[0].reason.startswith("params are not srg(19,6,1,2)")

    def test_wrong_class_sizes(self, trace_data):
        """Verify the labeling must split the vertices into classes of four."""
        trace_data["labeling"]["A"].append(trace_data["labeling"]["W"].pop())
        report = replay_trace(trace_data)
        assert [f.reason for f in report.failures] == ["class A has 5 vertices, expected 4"]
