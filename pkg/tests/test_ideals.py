import pytest

from asmlab import (
    Asm,
    MinorSpec,
    Permutation,
    construct_yo_primes,
    enumerate_asms,
    fulton_minor_specs,
    ideal_colon,
    ideal_intersection,
    ideal_sum,
    init_ideal,
    is_minimal_prime,
    minimal_primes,
    minimal_primes_bruteforce,
    natural_init_ideal,
    perm_from_prime,
    perm_set_naive,
    perm_set_via_primes,
    yo_induction_states,
)
from asmlab.errors import (
    NonReducedWordError,
    NotBadblockError,
    SizeMismatchError,
    SupportViolationError,
)
from asmlab.ideals import SquarefreeIdeal, cell_label, monomial_label, parse_cell_label


def fs(*cells):
    return frozenset(cells)


class TestLabels:
    def test_cell_label_round_trip(self):
        assert cell_label((2, 13)) == "z_2_13"
        assert parse_cell_label("z_2_13") == (2, 13)

    def test_monomial_label(self):
        assert monomial_label(frozenset()) == "1"
        assert monomial_label(fs((1, 3), (2, 1))) == "z_1_3*z_2_1"


class TestFultonGenerators:
    def test_worked_example_specs(self, worked_example):
        specs = fulton_minor_specs(worked_example)
        assert len(specs) == 5
        sizes = sorted(s.size for s in specs)
        assert sizes == [1, 1, 2, 2, 2]

    def test_identity_has_none(self):
        assert fulton_minor_specs(Asm.identity(4)) == []

    def test_a3_specs(self, a3):
        specs = fulton_minor_specs(a3)
        assert sorted((s.rows, s.cols) for s in specs) == [
            ((1,), (1,)),
            ((1, 2), (1, 2)),
        ]

    def test_antidiagonal(self):
        assert MinorSpec((1, 2), (1, 3)).antidiagonal() == fs((1, 3), (2, 1))


class TestInitIdeal:
    def test_worked_example(self, worked_example):
        assert init_ideal(worked_example).sorted_gens() == [
            ((1, 1),),
            ((1, 2),),
            ((1, 3), (2, 1)),
            ((1, 3), (2, 2)),
        ]

    def test_non_km_gvd(self, non_km_gvd):
        assert init_ideal(non_km_gvd).sorted_gens() == [
            ((1, 1),),
            ((1, 2), (3, 1)),
            ((1, 3), (2, 2)),
            ((2, 1),),
            ((2, 2), (3, 1)),
        ]

    def test_identity_zero(self):
        assert init_ideal(Asm.identity(5)).is_zero

    def test_a3(self, a3):
        assert init_ideal(a3).sorted_gens() == [((1, 1),), ((1, 2), (2, 1))]

    def test_natural_oracle_n_le_4(self):
        for n in range(1, 5):
            for A in enumerate_asms(n):
                assert natural_init_ideal(A).gens == init_ideal(A).gens


class TestIdealArithmetic:
    def test_intersection_perm_split(self):
        I312 = init_ideal(Permutation((3, 1, 2)).to_asm())
        I231 = init_ideal(Permutation((2, 3, 1)).to_asm())
        assert I312.sorted_gens() == [((1, 1),), ((1, 2),)]
        assert I231.sorted_gens() == [((1, 1),), ((2, 1),)]
        meet = ideal_intersection(I312, I231)
        assert meet.sorted_gens() == [((1, 1),), ((1, 2), (2, 1))]

    def test_intersection_idempotent(self, b4):
        I = init_ideal(b4)
        assert ideal_intersection(I, I).gens == I.gens

    def test_b4_split(self, b4):
        I3412 = init_ideal(Permutation((3, 4, 1, 2)).to_asm())
        I2341 = init_ideal(Permutation((2, 3, 4, 1)).to_asm())
        assert ideal_intersection(I3412, I2341).gens == init_ideal(b4).gens

    def test_sum(self):
        I = SquarefreeIdeal.make(3, [fs((1, 1))])
        J = SquarefreeIdeal.make(3, [fs((1, 1), (2, 2)), fs((2, 1))])
        assert ideal_sum(I, J).sorted_gens() == [((1, 1),), ((2, 1),)]

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            ideal_sum(SquarefreeIdeal.zero(3), SquarefreeIdeal.zero(4))

    def test_colon(self, non_km_gvd):
        I = init_ideal(non_km_gvd)
        colon = ideal_colon(I, fs((1, 3)))
        assert colon.sorted_gens() == [
            ((1, 1),),
            ((1, 2), (3, 1)),
            ((2, 1),),
            ((2, 2),),
        ]
        assert ideal_colon(I, frozenset()).gens == I.gens
        assert ideal_colon(I, fs((1, 1))).is_unit


class TestMinimalPrimes:
    def test_b4_primes(self, b4):
        primes = minimal_primes(init_ideal(b4))
        assert primes == {
            fs((1, 1), (2, 1), (3, 1)),
            fs((1, 1), (2, 1), (1, 2), (2, 2)),
        }

    def test_principal(self):
        I = SquarefreeIdeal.make(2, [fs((1, 1))])
        assert minimal_primes(I) == {fs((1, 1))}

    def test_non_km_gvd_primes_pure(self, non_km_gvd):
        primes = minimal_primes(init_ideal(non_km_gvd))
        assert len(primes) == 3
        assert {len(P) for P in primes} == {4}

    def test_zero_ideal(self):
        assert minimal_primes(SquarefreeIdeal.zero(3)) == {frozenset()}

    def test_matches_bruteforce(self):
        for n in range(1, 5):
            for A in enumerate_asms(n):
                I = init_ideal(A)
                assert minimal_primes(I) == minimal_primes_bruteforce(I)

    def test_is_minimal_prime(self, b4):
        I = init_ideal(b4)
        assert is_minimal_prime(I, fs((1, 1), (2, 1), (3, 1)))
        assert not is_minimal_prime(I, I.support())
        with pytest.raises(SupportViolationError):
            is_minimal_prime(I, fs((4, 4)))

    def test_every_prime_passes_criterion(self):
        for A in enumerate_asms(4):
            I = init_ideal(A)
            if I.is_zero:
                continue
            for P in minimal_primes(I):
                assert is_minimal_prime(I, P)


class TestPipeDreams:
    def test_known_words(self):
        assert str(perm_from_prime(fs((1, 1), (2, 1), (3, 1)), 4)) == "2341"
        assert str(perm_from_prime(fs((1, 1), (2, 1), (1, 2), (2, 2)), 4)) == "3412"
        assert perm_from_prime(frozenset(), 3) == Permutation.identity(3)

    def test_length_matches_height(self, b4, b5):
        for A in (b4, b5):
            for P in minimal_primes(init_ideal(A)):
                assert perm_from_prime(P, A.n).length == len(P)

    def test_non_reduced(self):
        with pytest.raises(NonReducedWordError):
            perm_from_prime(fs((1, 1), (1, 2), (2, 1)), 2)


class TestPermSetViaPrimes:
    def test_b4(self, b4):
        pa = perm_set_via_primes(b4)
        assert {str(w) for w in pa.perms} == {"3412", "2341"}
        assert pa.codim == 3 and not pa.equidimensional

    def test_a6(self, a6):
        pa = perm_set_via_primes(a6)
        assert {str(w) for w in pa.perms} == {"562314", "462513", "456213", "462351"}

    def test_identity(self):
        pa = perm_set_via_primes(Asm.identity(4))
        assert pa.perms == {Permutation.identity(4)}
        assert pa.codim == 0 and pa.equidimensional

    def test_agrees_with_naive(self):
        for n in range(1, 5):
            for A in enumerate_asms(n):
                assert perm_set_via_primes(A).perms == perm_set_naive(A)


class TestYoPrimes:
    def test_b4(self, b4):
        Y, O = construct_yo_primes(b4, 3, 1)
        assert Y == fs((1, 1), (2, 1), (3, 1))
        assert O == fs((1, 1), (2, 1), (1, 2), (2, 2))
        I = init_ideal(b4)
        assert is_minimal_prime(I, Y) and is_minimal_prime(I, O)
        assert len(Y) != len(O)

    def test_badblock8_base_state(self, badblock8):
        states = {cell: (Y, O) for cell, Y, O in yo_induction_states(badblock8, 4, 2)}
        assert states[(4, 8)] == (fs((4, 2), (4, 3)), fs((1, 6), (2, 3), (3, 3)))
        assert states[(6, 8)] == (fs((4, 2), (4, 3)), fs((1, 6), (2, 3), (3, 3)))

    def test_badblock8_primes(self, badblock8):
        Y, O = construct_yo_primes(badblock8, 4, 2)
        I = init_ideal(badblock8)
        assert is_minimal_prime(I, Y) and is_minimal_prime(I, O)
        assert len(Y) != len(O)

    def test_not_badblock(self):
        with pytest.raises(NotBadblockError):
            construct_yo_primes(Asm.identity(4), 2, 1)
