"""
Unit Tests for TraceRecorder

Every accepted step is checked against the guarded rho comparison; rejected
steps leave the recorder where it was.
"""

import json

import pytest

from spext.families import cycle, h_n, k1n_plus, path, star
from spext.graph import is_isomorphic, make_graph
from spext.transforms import (
    MonotonicityViolation,
    StepKind,
    TraceRecorder,
    TransformPreconditionError,
)
from spext.transforms.recorder import attach


class TestRecorderSwitch:
    """Tests for recorded switches"""

    def test_c4_switch_recorded(self, c4):
        recorder = TraceRecorder(c4)
        result = recorder.switch(0, 1, [2])
        assert result.edges == ((0, 1), (0, 2), (0, 3), (2, 3))
        assert is_isomorphic(result, k1n_plus(4))
        (step,) = recorder.steps
        assert step.kind == StepKind.SWITCH
        assert step.moved == (2,)
        assert step.rho_after > step.rho_before

    def test_centre_to_leaf_switch_rejected(self):
        """Moving a star leaf from the centre to another leaf lowers rho"""
        recorder = TraceRecorder(star(5))
        with pytest.raises(MonotonicityViolation) as excinfo:
            recorder.switch(1, 0, [2])
        assert excinfo.value.before == star(5)
        assert recorder.graph == star(5)
        assert recorder.steps == []

    def test_isomorphic_result_rejected(self):
        """P_3 switched onto its end is P_3 again: indistinguishable, not greater"""
        recorder = TraceRecorder(path(3))
        with pytest.raises(MonotonicityViolation, match="indistinguishable"):
            recorder.switch(0, 1, [2])

    def test_disconnected_switch_refused(self):
        graph = make_graph(5, [(0, 1), (1, 2), (3, 4)])
        with pytest.raises(TransformPreconditionError, match="connected"):
            TraceRecorder(graph).switch(0, 1, [2])

    def test_violation_payload_is_json(self):
        recorder = TraceRecorder(star(5))
        with pytest.raises(MonotonicityViolation) as excinfo:
            recorder.switch(1, 0, [2])
        payload = json.loads(str(excinfo.value).partition(": ")[2])
        assert payload["step"]["kind"] == "SWITCH"
        assert payload["before"]["edges"] == [[0, 1], [0, 2], [0, 3], [0, 4]]


class TestRecorderEdges:
    """Tests for recorded edge additions and deletions"""

    def test_add_edge_on_connected_graph(self):
        recorder = TraceRecorder(path(3))
        assert recorder.add_edge(2, 0) == cycle(3)
        (step,) = recorder.steps
        assert (step.u, step.v) == (0, 2)

    def test_add_edge_joining_components(self):
        """Joining two triangles by a bridge raises rho"""
        graph = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        recorder = TraceRecorder(graph)
        recorder.add_edge(2, 3)
        assert recorder.trace().is_monotone()

    def test_add_edge_inside_weaker_component(self):
        """rho of a disconnected graph may stay flat; that is accepted"""
        graph = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4)])
        recorder = TraceRecorder(graph)
        recorder.add_edge(4, 5)
        assert len(recorder.steps) == 1

    def test_delete_edge(self):
        recorder = TraceRecorder(cycle(3))
        assert recorder.delete_edge(0, 1) == path(3).without_edge(0, 1).with_edge(0, 2)
        (step,) = recorder.steps
        assert step.kind == StepKind.DELETE_EDGE
        assert step.rho_after < step.rho_before


class TestRecorderMerge:
    """Tests for recorded merges"""

    def test_merge_reports_moved_vertices(self, triangle_chain):
        recorder = TraceRecorder(triangle_chain)
        result = recorder.merge(1, 3)
        (step,) = recorder.steps
        assert step.kind == StepKind.MERGE
        assert step.moved == (5, 6)
        assert result.degree(3) == 2
        assert recorder.trace().replay() == result


class TestTrace:
    """Tests for traces produced by the recorder"""

    def test_chaining_and_replay(self, c4):
        recorder = TraceRecorder(c4)
        recorder.switch(0, 1, [2])
        recorder.add_edge(1, 3)
        trace = recorder.trace()
        assert trace.initial == c4
        assert trace.final == recorder.graph
        assert trace.replay() == trace.final
        assert trace.is_monotone()
        assert trace.steps[1].rho_before == trace.steps[0].rho_after

    def test_perron_is_cached(self, paw):
        recorder = TraceRecorder(paw)
        assert recorder.perron is recorder.perron


class TestAttach:
    """Tests for sharing a recorder between operations"""

    def test_creates_recorder(self, paw):
        recorder = attach(paw, None)
        assert recorder.graph == paw

    def test_reuses_positioned_recorder(self, paw):
        recorder = TraceRecorder(paw)
        assert attach(paw, recorder) is recorder

    def test_rejects_mispositioned_recorder(self, paw):
        with pytest.raises(ValueError, match="different graph"):
            attach(h_n(5), TraceRecorder(paw))
