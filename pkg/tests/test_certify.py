import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phisystems.certify import (
    Verdict,
    VerdictTable,
    certify,
    certify_verdict,
    fermat_congruence_holds,
)

from conftest import TABLE_LIMIT


class TestFermatCongruence:
    def test_worked_examples(self):
        assert fermat_congruence_holds(5, 2)
        assert not fermat_congruence_holds(4, 2)
        # 9 is composite; a single passing congruence proves nothing
        assert fermat_congruence_holds(9, 2)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            fermat_congruence_holds(0, 2)
        with pytest.raises(ValueError):
            fermat_congruence_holds(5, 4)
        with pytest.raises(ValueError):
            fermat_congruence_holds(5, 1)

    @given(
        st.integers(min_value=1, max_value=100_000),
        st.sampled_from([2, 3, 5, 7, 11, 13, 41, 97, 499, 997]),
    )
    def test_holds_iff_p_misses_m(self, m, p):
        assert fermat_congruence_holds(m, p) == (m % p != 0)


class TestCertify:
    def test_worked_examples(self, table):
        c = certify(2, table)
        assert c.verdict is Verdict.PRIME and c.checks == ()
        c = certify(25, table)
        assert c.verdict is Verdict.COMPOSITE and c.failing_modulus == 5
        c = certify(29, table)
        assert c.verdict is Verdict.PRIME
        assert [k.modulus for k in c.checks] == [2, 3, 5]
        assert all(k.residue == 1 for k in c.checks)

    def test_rejects_m_below_two(self, table):
        for m in (0, 1):
            with pytest.raises(ValueError):
                certify(m, table)

    def test_rejects_sieve_too_small(self):
        from phisystems.arith import build_spf

        small = build_spf(10)
        with pytest.raises(ValueError):
            certify(200, small)

    def test_equivalence_full_range(self, table):
        for m in range(2, 20_001):
            assert (certify(m, table).verdict is Verdict.PRIME) == table.is_prime(m)

    @given(st.integers(min_value=2, max_value=TABLE_LIMIT**2))
    def test_equivalence_property(self, table, m):
        assert (certify(m, table).verdict is Verdict.PRIME) == table.is_prime(m)

    @given(st.integers(min_value=2, max_value=1_000_000))
    def test_verdict_fast_path_agrees(self, table, m):
        cert = certify(m, table)
        ok, failing = certify_verdict(m, table)
        assert ok == (cert.verdict is Verdict.PRIME)
        assert failing == cert.failing_modulus

    @given(st.integers(min_value=2, max_value=1_000_000))
    def test_full_system_size(self, table, pi, m):
        cert = certify(m, table, full_checks=True)
        assert len(cert.checks) == pi.prime_pi(math.isqrt(m))
        assert [k.exponent for k in cert.checks] == [k.modulus - 1 for k in cert.checks]

    @given(st.integers(min_value=4, max_value=1_000_000))
    def test_composite_failing_modulus(self, table, m):
        cert = certify(m, table)
        if cert.verdict is Verdict.COMPOSITE:
            assert cert.failing_modulus is not None
            assert m % cert.failing_modulus == 0
            if m <= table.limit:
                assert cert.failing_modulus == table.smallest_factor(m)
            assert cert.checks[-1].modulus == cert.failing_modulus
            assert cert.checks[-1].residue != 1

    def test_short_circuit_vs_full(self, table):
        fast = certify(45, table)
        assert [k.modulus for k in fast.checks] == [2, 3]
        full = certify(45, table, full_checks=True)
        assert [k.modulus for k in full.checks] == [2, 3, 5]
        assert fast.failing_modulus == full.failing_modulus == 3

    def test_perfect_square_caught_at_root(self, table):
        # the bracketed root bound is tight at squares: p = sqrt(m) is included
        cert = certify(49, table)
        assert cert.verdict is Verdict.COMPOSITE and cert.failing_modulus == 7

    def test_check_count_spans_certification_window(self, table, pi):
        # across the x-window of an n, system size varies between
        # pi(sqrt(n)) and pi(sqrt(2n - 3))
        n = 5000
        sizes = {
            len(certify(n + x, table, full_checks=True).checks)
            for x in range(1, n - 2, 97)
        }
        assert min(sizes) >= pi.prime_pi(math.isqrt(n))
        assert max(sizes) <= pi.prime_pi(math.isqrt(2 * n - 3))


class TestVerdictTable:
    def test_matches_direct_certification(self, table):
        vt = VerdictTable(table)
        arr = vt.ensure(500)
        for m in range(2, 501):
            assert bool(arr[m]) == (certify(m, table).verdict is Verdict.PRIME)

    def test_grows_incrementally(self, table):
        vt = VerdictTable(table)
        vt.ensure(50)
        first = vt.verdicts.copy()
        arr = vt.ensure(200)
        assert (arr[: len(first)] == first).all()
        assert vt.limit == 200
        assert vt.ensure(100) is arr  # no shrink, no rebuild
