"""Unit tests for GF(p) arithmetic."""

import pickle
import random

import pytest

from src.algebra.coeff import ArithOp, PrimeField, fp_arith, fp_inv
from src.errors import DivisionByZeroError, NonPrimeModulusError


class TestPrimeField:
    """Tests for field construction."""

    def test_default_prime(self):
        assert PrimeField().p == 32003

    @pytest.mark.parametrize("p", [4, 2, 1, 0, 32001, 2**31 + 11])
    def test_rejects_bad_modulus(self, p):
        with pytest.raises(NonPrimeModulusError):
            PrimeField(p)

    def test_largest_supported_prime(self):
        assert PrimeField(2**31 - 1).p == 2**31 - 1

    def test_equality_and_pickle(self, field7):
        assert field7 == PrimeField(7)
        assert field7 != PrimeField(11)
        assert pickle.loads(pickle.dumps(field7)) == field7

    def test_canonical_residue(self, field7):
        assert field7(-1) == 6
        assert field7(15) == 1


class TestFieldOps:
    """Tests for the field operations."""

    def test_examples_mod_7(self, field7):
        assert fp_arith(3, 5, "add", field7) == 1
        assert fp_arith(3, 5, ArithOp.SUB, field7) == 5
        assert fp_arith(3, 5, ArithOp.MUL, field7) == 1
        assert fp_inv(3, field7) == 5

    def test_inverse_of_zero(self, field7):
        with pytest.raises(DivisionByZeroError):
            fp_inv(0, field7)

    def test_neg_and_symmetric(self, field7):
        assert field7.neg(0) == 0
        assert field7.neg(2) == 5
        assert field7.symmetric(6) == -1
        assert field7.symmetric(3) == 3

    def test_field_axioms_on_random_samples(self):
        field = PrimeField(32003)
        p = field.p
        rng = random.Random(20240101)
        for _ in range(10_000):
            a, b, c = (rng.randrange(p) for _ in range(3))
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
            assert field.add(field.sub(a, b), b) == a
            assert field.add(a, field.neg(a)) == 0
            if a:
                assert field.mul(a, field.inv(a)) == 1
                assert field.div(field.mul(a, b), a) == b
