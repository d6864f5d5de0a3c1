import dataclasses
import math

import pytest

from ocycles import (
    Direction,
    PathCertificate,
    StepCapExceeded,
    WalkError,
    bfs_path,
    find_path,
    min_vertex,
    replay_certificate,
    step_cap,
    validate_params,
    vertices,
    walk_general,
    walk_kperm,
    walk_multiset,
)
from conftest import guaranteed_instances


class TestWalkMultiset:
    def test_identity(self):
        p = validate_params(multiset=(1, 2, 3, 4, 5), s=2)
        cert, trace = walk_multiset((1, 2), p)
        assert cert.steps == ()
        assert trace == ()
        assert replay_certificate(cert, p).ok

    def test_single_transposition(self):
        p = validate_params(multiset=(1, 2, 3, 4, 5), s=2)
        cert, trace = walk_multiset((2, 1), p)
        assert len(cert.steps) == 2
        assert trace == (0,)
        assert [st.direction for st in cert.steps] == [Direction.FORWARD, Direction.BACKWARD]
        assert cert.terminus == (1, 2)
        assert replay_certificate(cert, p).ok

    def test_two_rounds(self):
        p = validate_params(multiset=(1, 2, 3, 4, 5), s=2)
        cert, trace = walk_multiset((3, 4), p)
        assert len(trace) <= 2
        assert replay_certificate(cert, p).ok

    def test_high_multiplicity_replacement(self):
        # the needed symbol saturates the remainder, so the forward word's
        # suffix must deliberately leave one copy unused
        p = validate_params(multiset=(1, 1, 1, 2, 2, 2), s=2)
        cert, trace = walk_multiset((2, 2), p)
        assert replay_certificate(cert, p).ok
        assert trace == (0, 1)

    def test_trace_strictly_increasing_everywhere(self):
        for kwargs in (dict(multiset=(1, 1, 2, 2, 3), s=2), dict(multiset=(1, 1, 1, 2, 2, 2), s=2)):
            p = validate_params(**kwargs)
            for v in vertices(p):
                cert, trace = walk_multiset(v, p)
                assert list(trace) == sorted(set(trace)), (v, trace)
                assert len(trace) <= p.s
                assert replay_certificate(cert, p).ok

    def test_full_perm_instance_accepted(self):
        p = validate_params(n=5, k=5, s=2)
        cert, trace = walk_multiset((4, 5), p)
        assert replay_certificate(cert, p).ok

    def test_rejects_large_overlap(self):
        p = validate_params(multiset=(1, 2, 3, 4), s=2)
        with pytest.raises(WalkError, match="2s < k"):
            walk_multiset((2, 1), p)

    def test_rejects_proper_kperm_mode(self):
        p = validate_params(n=5, k=3, s=1)
        with pytest.raises(WalkError):
            walk_multiset((2,), p)


class TestWalkKperm:
    def test_identity(self):
        p = validate_params(n=5, k=4, s=1)
        cert = walk_kperm((1,), p)
        assert cert.steps == ()

    def test_from_highest_symbol(self):
        p = validate_params(n=5, k=4, s=1)
        cert = walk_kperm((5,), p)
        assert cert.terminus == (1,)
        assert replay_certificate(cert, p).ok

    def test_d_trace_monotone(self):
        p = validate_params(n=6, k=4, s=1)
        rounds = []
        cert = walk_kperm((6,), p, rounds)
        assert replay_certificate(cert, p).ok
        assert rounds == sorted(rounds, reverse=True)
        assert rounds[-1] == 0

    def test_d_trace_monotone_everywhere(self):
        p = validate_params(n=7, k=5, s=3)  # coprime regime, bfs splices
        for v in list(vertices(p))[::17]:
            rounds = []
            cert = walk_kperm(v, p, rounds)
            assert rounds == sorted(rounds, reverse=True)
            assert replay_certificate(cert, p).ok

    def test_rejects_unsupported_overlap(self):
        with pytest.raises(WalkError):
            walk_kperm((1, 2, 3), validate_params(n=5, k=4, s=3))  # s = k-1
        with pytest.raises(WalkError):
            walk_kperm((1, 2, 3), validate_params(n=7, k=6, s=3))  # gcd 3, 2s >= k


class TestWalkGeneral:
    def test_identity(self):
        p = validate_params(n=5, k=4, s=2)
        assert walk_general((1, 2), p).steps == ()

    def test_rotation_instance(self):
        p = validate_params(n=5, k=4, s=2)  # gcd(2,4) = 2
        cert = walk_general((3, 4), p)
        assert cert.terminus == (1, 2)
        assert replay_certificate(cert, p).ok

    def test_rotation_large_blocks(self):
        p = validate_params(n=7, k=6, s=4)  # gcd(4,6) = 2
        cert = walk_general((2, 4, 6, 1), p)
        assert replay_certificate(cert, p).ok

    def test_delegates_to_letter_exchange_when_coprime(self):
        for n, k, s in [(5, 4, 1), (6, 5, 2), (7, 5, 3)]:
            p = validate_params(n=n, k=k, s=s)
            assert math.gcd(s, k) == 1
            for v in list(vertices(p))[::11]:
                assert walk_general(v, p) == walk_kperm(v, p)

    def test_max_overlap_uses_rotation(self):
        # s = k-1 is outside the letter-exchange preconditions even though
        # gcd(k-1, k) = 1; the rotation walker covers it
        p = validate_params(n=5, k=4, s=3)
        for v in list(vertices(p))[::7]:
            cert = walk_general(v, p)
            assert replay_certificate(cert, p).ok
            assert len(cert.steps) <= step_cap(p)

    def test_rejects_full_perm(self):
        with pytest.raises(WalkError):
            walk_general((2, 1), validate_params(n=4, k=4, s=2))


class TestBfsPath:
    def test_finds_short_witness(self):
        p = validate_params(n=5, k=5, s=3)  # coprime full-perm regime
        cert = bfs_path((3, 2, 1), min_vertex(p), p)
        assert replay_certificate(cert, p).ok

    def test_unreachable_raises(self):
        p = validate_params(n=4, k=4, s=2)  # disconnected instance
        with pytest.raises(WalkError, match="no path"):
            bfs_path((1, 3), min_vertex(p), p)


class TestReplay:
    def test_empty_certificate_at_minimum(self):
        p = validate_params(n=5, k=4, s=2)
        cert = PathCertificate((1, 2), (), (1, 2))
        assert replay_certificate(cert, p).ok

    def test_empty_certificate_elsewhere_fails(self):
        p = validate_params(n=5, k=4, s=2)
        cert = PathCertificate((2, 3), (), (2, 3))
        report = replay_certificate(cert, p)
        assert not report.ok
        assert "minimum" in report.violation

    def test_corrupted_edge_word_is_located(self):
        p = validate_params(n=6, k=4, s=2)
        cert = walk_general((4, 3), p)
        assert len(cert.steps) >= 2
        bad_edge = dataclasses.replace(cert.steps[1].edge, word=(1, 1, 1, 1))
        bad_step = dataclasses.replace(cert.steps[1], edge=bad_edge)
        tampered = dataclasses.replace(
            cert, steps=cert.steps[:1] + (bad_step,) + cert.steps[2:]
        )
        report = replay_certificate(tampered, p)
        assert not report.ok
        assert report.step == 1

    def test_wrong_terminus_detected(self):
        p = validate_params(n=5, k=4, s=1)
        cert = walk_kperm((3,), p)
        forged = dataclasses.replace(cert, terminus=(2,))
        assert not replay_certificate(forged, p).ok


class TestFindPathEverywhere:
    @pytest.mark.parametrize("max_n", [5])
    def test_all_vertices_all_guaranteed_instances(self, max_n):
        for p in guaranteed_instances(max_n):
            cap = step_cap(p)
            for v in vertices(p):
                cert = find_path(v, p)
                assert replay_certificate(cert, p).ok, (p, v)
                assert len(cert.steps) <= cap, (p, v)

    def test_cap_never_exceeded_without_signal(self):
        # the walkers raise rather than silently overrun
        p = validate_params(n=7, k=6, s=4)
        for v in list(vertices(p))[::41]:
            try:
                cert = find_path(v, p)
            except StepCapExceeded:  # pragma: no cover - would be a bug
                pytest.fail("step cap exceeded")
            assert len(cert.steps) <= step_cap(p)
