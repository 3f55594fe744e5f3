import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hadamard_oracles.matcore import (
    FormatError,
    PhaseMatrix,
    SignMatrix,
    StateVector,
    UnitaryDense,
    format_pmat,
    format_smat,
    mat_apply,
    parse_pmat,
    parse_smat,
    phase_mul,
    phase_to_unitary,
    sign_gram,
    unitarity_defect,
)
from hadamard_oracles.schwinger import schwinger_basis

H2 = SignMatrix([[1, 1], [-1, 1]])


class TestTypes:
    def test_sign_matrix_rejects_zero(self):
        with pytest.raises(ValueError):
            SignMatrix([[1, 0], [1, 1]])

    def test_sign_matrix_rejects_non_square(self):
        with pytest.raises(ValueError):
            SignMatrix([[1, 1]])

    def test_entries_are_read_only(self):
        with pytest.raises(ValueError):
            H2.entries[0, 0] = -1

    @pytest.mark.parametrize("entries,d", [([[0, 2]], 2), ([[2]], 2), ([[-1]], 3), ([[0]], 0)])
    def test_phase_matrix_rejects(self, entries, d):
        with pytest.raises(ValueError):
            PhaseMatrix(entries, d)

    def test_phase_matrix_equality_ignores_denominator(self):
        a = PhaseMatrix([[0, 1], [1, 0]], 2)
        assert a == a.with_denominator(8)
        assert hash(a) == hash(a.with_denominator(8))
        assert a.with_denominator(8).reduced().d == 2

    def test_state_vector_normalization_flag(self):
        with pytest.raises(ValueError):
            StateVector([1.0, 1.0])
        assert StateVector([1.0, 1.0], normalized=False).n == 2

    def test_unitary_flag_enforced(self):
        with pytest.raises(ValueError):
            UnitaryDense([[1, 1], [0, 1]])


class TestSignGram:
    def test_order_one(self):
        assert sign_gram(SignMatrix([[1]])).tolist() == [[1]]

    def test_coin_rows(self):
        assert sign_gram(H2).tolist() == [[2, 0], [0, 2]]

    def test_rank_one(self):
        assert sign_gram(SignMatrix([[1, 1], [1, 1]])).tolist() == [[2, 2], [2, 2]]

    @given(st.integers(1, 12).flatmap(
        lambda n: st.lists(st.sampled_from([-1, 1]), min_size=n * n, max_size=n * n)
        .map(lambda v: np.array(v).reshape(n, n))))
    def test_symmetric_with_constant_diagonal(self, a):
        g = sign_gram(SignMatrix(a))
        assert np.array_equal(g, g.T)
        assert (np.diag(g) == a.shape[0]).all()
        # integer route for comparison
        assert np.array_equal(g, a.astype(np.int64) @ a.T.astype(np.int64))


class TestPhaseToUnitary:
    def test_order_one(self):
        u = phase_to_unitary(PhaseMatrix([[0]], 1))
        assert u.entries.tolist() == [[1.0]]

    def test_fourier_two(self):
        u = phase_to_unitary(PhaseMatrix([[0, 0], [0, 1]], 2))
        expected = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        assert np.allclose(u.entries, expected, atol=1e-15, rtol=0)
        assert u.unitary

    def test_schwinger_eight_is_unitary(self):
        u = phase_to_unitary(schwinger_basis(8))
        assert unitarity_defect(u) <= 1e-12

    def test_unnormalized_not_flagged(self):
        assert not phase_to_unitary(schwinger_basis(4), normalize=False).unitary

    @given(st.integers(1, 10), st.integers(1, 24), st.data())
    def test_moduli(self, n, d, data):
        m = data.draw(st.lists(st.integers(0, d - 1), min_size=n * n, max_size=n * n))
        u = phase_to_unitary(PhaseMatrix(np.array(m).reshape(n, n), d))
        assert np.allclose(np.abs(u.entries), 1 / math.sqrt(n), atol=1e-12, rtol=0)


class TestMatApply:
    def test_identity(self):
        v = StateVector([0.6, 0.8j])
        assert np.array_equal(mat_apply(UnitaryDense.identity(2), v).amplitudes, v.amplitudes)

    def test_coin_splits_evenly(self):
        u = phase_to_unitary(PhaseMatrix([[0, 0], [0, 1]], 2))
        out = mat_apply(u, StateVector.basis(2, 0))
        assert np.allclose(out.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-15)
        assert np.allclose(np.abs(out.amplitudes) ** 2, 0.5)

    def test_coin_is_involution(self):
        u = phase_to_unitary(PhaseMatrix([[0, 0], [0, 1]], 2))
        e1 = StateVector.basis(2, 0)
        out = mat_apply(u, mat_apply(u, e1))
        assert np.abs(out.amplitudes - e1.amplitudes).max() <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            mat_apply(UnitaryDense.identity(3), StateVector.basis(2, 0))

    @given(st.integers(1, 16), st.integers(0, 2**32 - 1))
    def test_norm_preserved(self, n, seed):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        v = StateVector(a / np.linalg.norm(a))
        out = mat_apply(phase_to_unitary(schwinger_basis(n)), v)
        assert abs(out.norm() - 1.0) <= 1e-9


phases = st.builds(
    lambda d, m: (m % d, d), st.integers(1, 64), st.integers(0, 10**6)
)


class TestPhaseMul:
    @pytest.mark.parametrize("a,b,expected", [
        ((1, 2), (1, 2), Fraction(0, 1)),
        ((1, 8), (2, 8), Fraction(3, 8)),
        ((1, 4), (1, 2), Fraction(3, 4)),
    ])
    def test_examples(self, a, b, expected):
        r = phase_mul(a, b)
        assert r == expected
        assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)

    @given(phases, phases, phases)
    def test_group_laws(self, x, y, z):
        assert phase_mul(x, y) == phase_mul(y, x)
        assert phase_mul(phase_mul(x, y), z) == phase_mul(x, phase_mul(y, z))
        assert phase_mul(x, (0, 1)) == Fraction(*x)

    @given(phases, phases)
    def test_matches_complex_product(self, x, y):
        e = lambda p: complex(math.cos(2 * math.pi * p[0] / p[1]), math.sin(2 * math.pi * p[0] / p[1]))
        r = phase_mul(x, y)
        assert abs(e(x) * e(y) - e((r.numerator, r.denominator))) < 1e-9

    def test_result_is_reduced(self):
        r = phase_mul((2, 8), (2, 8))
        assert (r.numerator, r.denominator) == (1, 2)


class TestFileFormats:
    def test_smat_round_trip(self):
        text = "H 2\n++\n-+\n"
        assert format_smat(parse_smat(text)) == text

    def test_pmat_round_trip(self):
        text = format_pmat(schwinger_basis(5))
        assert text.splitlines()[0] == "P 5 5"
        assert format_pmat(parse_pmat(text)) == text
        assert parse_pmat(text) == schwinger_basis(5)

    @pytest.mark.parametrize("text", [
        "H 2\n++\n-+",          # missing final newline
        "H 2\n++\n-+\n\n",      # extra blank line
        "H 2\n++ \n-+\n",       # trailing whitespace
        "H 2\r\n++\r\n-+\r\n",  # CRLF
        "H 2\n++\n",            # too few rows
        "H 2\n+0\n-+\n",        # bad character
        "H 02\n++\n-+\n",       # non-canonical integer
        "H  2\n++\n-+\n",
        "P 2 2\n0 0\n0 1\n",    # wrong letter
        "H 0\n",
    ])
    def test_smat_rejects(self, text):
        with pytest.raises(FormatError):
            parse_smat(text)

    @pytest.mark.parametrize("text", [
        "P 2 2\n0 0\n0 2\n",    # numerator out of range
        "P 2 2\n0  0\n0 1\n",   # double space
        "P 2 2\n0 0 \n0 1\n",
        "P 2 2\n0 0\n0 -1\n",
        "P 2\n0 0\n0 1\n",
        "P 2 0\n0 0\n0 0\n",
        "P 2 2\n0 0\n0 1",
    ])
    def test_pmat_rejects(self, text):
        with pytest.raises(FormatError):
            parse_pmat(text)
