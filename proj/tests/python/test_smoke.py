"""Smoke tests for the python bindings."""

import pytest

import modtab


def test_ring_arithmetic():
    ring = modtab.ResidueRing(8)
    assert ring.mul(3, 5) == 7
    assert ring.inverse(3) == 3
    assert ring.units() == [1, 3, 5, 7]
    assert modtab.mul(5, 2, 3) == 1
    assert modtab.inverse(9, 2) == 5
    assert modtab.inverse(6, 2) is None
    assert modtab.units(1) == [0]


def test_ring_rejects_bad_moduli():
    with pytest.raises(ValueError):
        modtab.ResidueRing(0)
    with pytest.raises(ValueError):
        modtab.ResidueRing(2**32)


def test_table_and_checks():
    table = modtab.render_table(8)
    assert table[3] == [0, 3, 6, 1, 4, 7, 2, 5]
    assert modtab.table_text(2) == "*|0 1\n-----\n0|0 0\n1|0 1\n"

    report = modtab.check_diagonal(30, "units")
    assert report["holds"] is False
    assert report["witness"] == [7, 13]

    assert modtab.check_diagonal(24, "structural")["holds"] is True


def test_cube():
    assert modtab.cube_check(2)["holds"] is True
    assert modtab.cube_check(5)["witness"] == [1, 2, 3]
    assert modtab.cube_scan(50) == [1, 2]


def test_unit_group():
    assert modtab.euler_phi(24) == 8
    structure = modtab.unit_group_structure(24)
    assert structure["cyclic_orders"] == [2, 2, 2]
    assert structure["exponent"] == 2
    assert modtab.is_f2_vector_space(24) is True
    assert modtab.is_f2_vector_space(5) is False
    assert modtab.factorize(24)["factors"] == [[2, 3], [3, 1]]


def test_crt():
    iso = modtab.CrtIsomorphism(3, 8)
    assert iso.forward(17) == (2, 1)
    assert iso.backward(2, 1) == 17
    with pytest.raises(ValueError):
        modtab.CrtIsomorphism(4, 6)


def test_primes():
    table = modtab.PrimeTable(10000)
    assert table.pi(10) == 4
    assert table.bertrand_witness(100) == 101
    assert table.erdos_witnesses(10) == (11, 13)
    assert table.ramanujan_primes(5) == [2, 11, 17, 29, 41]
    assert table.dirichlet_witness(5, 2, avoid=10) == 7
    assert table.smallest_nondividing_prime(24) == 5


def test_ramanujan_inconclusive():
    with pytest.raises(modtab.Inconclusive):
        modtab.PrimeTable(100).ramanujan_primes(5)


def test_verify():
    verdict = modtab.verify_crt(limit=100)
    assert verdict["overall"] is True
    assert verdict["steps"][-1]["evidence"]["surviving"] == [1, 2, 3, 4, 6, 8, 12, 24]

    assert modtab.verify_dirichlet()["overall"] is True
    assert modtab.verify_proposition(n=5)["overall"] is True
    assert modtab.verify_bertrand(scan_limit=1000, sieve_limit=10000)["overall"] is True
    assert modtab.verify_erdos(scan_limit=1000, sieve_limit=10000)["overall"] is True
    assert modtab.verify_units(max_prime_power=100, sieve_limit=10000)["overall"] is True
