from fractions import Fraction

import pytest

from treealg import (
    BitMatrix,
    HElem,
    RationalMatrix,
    basis_forests,
    basis_matrix,
    build_fmn,
    check_mod2_invertible,
    decompose,
    enumerate_forests,
    ladder,
    parse_forest,
    sigma,
    sigma_forest,
    sigma_kernel,
    words_ending_in_y,
)


class TestRationalMatrix:
    def test_rank_and_rref(self):
        m = RationalMatrix([[1, 2], [2, 4]])
        assert m.rank() == 1
        red, pivots = m.rref()
        assert pivots == [0]
        assert red.entries[0] == [Fraction(1), Fraction(2)]

    def test_solve(self):
        m = RationalMatrix([[2, 0], [1, 1]])
        assert m.solve([4, 3]) == [Fraction(2), Fraction(1)]

    def test_solve_rejects_singular(self):
        with pytest.raises(ValueError):
            RationalMatrix([[1, 1], [1, 1]]).solve([1, 2])

    def test_nullspace(self):
        m = RationalMatrix([[1, 1, 0], [0, 0, 1]])
        (v,) = m.nullspace()
        assert v == [Fraction(-1), Fraction(1), Fraction(0)]

    def test_mod2_requires_integers(self):
        with pytest.raises(ValueError):
            RationalMatrix([[Fraction(1, 2)]]).mod2()


class TestBitMatrix:
    def test_rank(self):
        # rows 11, 01 over GF(2)
        m = BitMatrix([0b11, 0b10], 2)
        assert m.rank() == 2
        assert m.is_invertible()

    def test_singular(self):
        m = BitMatrix([0b11, 0b11], 2)
        assert m.rank() == 1
        assert not m.is_invertible()


class TestBasisFamily:
    def test_degree_one(self):
        assert [f.encoding for f in basis_forests(1)] == ["[]"]

    def test_degree_two(self):
        assert [f.encoding for f in basis_forests(2)] == ["[[]]", "[] []"]

    def test_degree_three_exhausts_forests(self):
        assert basis_forests(3) == enumerate_forests(3)

    def test_sizes_and_degrees(self):
        for d in range(1, 9):
            fam = basis_forests(d)
            assert len(fam) == 2 ** (d - 1)
            assert all(f.degree == d for f in fam)


class TestBasisMatrix:
    def test_degree_one(self):
        assert basis_matrix(1).entries == [[Fraction(1)]]

    def test_degree_two(self):
        assert basis_matrix(2).entries == [
            [Fraction(1), Fraction(2)],
            [Fraction(-1), Fraction(1)],
        ]

    def test_degree_three_full_rank(self):
        m = basis_matrix(3)
        assert (m.rows, m.cols) == (4, 4)
        assert m.rank() == 4

    def test_full_rank_up_to_eight(self):
        for d in range(1, 9):
            assert basis_matrix(d).rank() == 2 ** (d - 1)

    def test_mod2_invertible_up_to_eight(self):
        for d in range(1, 9):
            assert check_mod2_invertible(d)

    def test_word_basis_order(self):
        assert words_ending_in_y(3) == ("xxy", "xyy", "yxy", "yyy")


class TestDecompose:
    def test_basis_element_is_indicator(self):
        for d in (2, 3, 4):
            for u in basis_forests(d):
                coeffs = decompose(HElem.from_forest(u), d)
                assert coeffs[u] == 1
                assert all(c == 0 for v, c in coeffs.items() if v != u)

    def test_reproduces_sigma(self):
        target = HElem.from_forest(parse_forest("[[][]]"))
        coeffs = decompose(target, 3)
        recombined = sum(
            (c * sigma_forest(u) for u, c in coeffs.items()),
            start=sigma(HElem.zero()),
        )
        assert recombined == sigma(target)

    def test_relation_decomposes_to_zero(self):
        coeffs = decompose(build_fmn(2, 2), 4)
        assert all(c == 0 for c in coeffs.values())

    def test_rejects_mixed_degrees(self):
        mixed = HElem.from_forest(parse_forest("[]")) + HElem.from_forest(
            parse_forest("[[]]")
        )
        with pytest.raises(ValueError):
            decompose(mixed, 2)


class TestKernel:
    def test_dimensions(self):
        expected = {1: 0, 2: 0, 3: 0, 4: 1, 5: 4, 6: 16}
        for d, dim in expected.items():
            assert len(sigma_kernel(d)) == dim

    def test_kernel_elements_vanish(self):
        for d in range(1, 7):
            for k in sigma_kernel(d):
                assert sigma(k).is_zero()

    def test_kernel_kills_x_too(self):
        from treealg import rtm_apply
        from treealg.words import X

        for d in range(1, 7):
            for k in sigma_kernel(d):
                assert rtm_apply(k, X).is_zero()

    def test_deterministic(self):
        first = [k.terms for k in sigma_kernel(5)]
        second = [k.terms for k in sigma_kernel(5)]
        assert first == second
