"""Exit criteria.  Each test is one criterion, checked exactly (or at the
stated statistical tolerance) and within its time budget."""

import time
from fractions import Fraction
from pathlib import Path

import pytest

from qbell.cigler import cigler_qstirling, qbell_poly, qstirling_oracle, verify_cigler_identity
from qbell.classical import bell, enumerate_set_partitions
from qbell.cli import main
from qbell.dobinski import dobinski_bell, dobinski_qbell, poisson_mc
from qbell.series import egf_extract_bell
from qbell.umbral import XPolynomial, apply_functional, rota_functional

GOLDEN = Path(__file__).parent / "golden"


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


@pytest.mark.criterion("AC01 bell == set-partition enumeration, n<=12")
def test_ac01_bell_oracle():
    with Budget(5):
        for n in range(13):
            assert bell(n) == enumerate_set_partitions(n), n


@pytest.mark.criterion("AC02 EGF exp(e^x-1) coefficients == bell, n<=25")
def test_ac02_egf_route():
    with Budget(1):
        assert egf_extract_bell(25) == [bell(n) for n in range(26)]


@pytest.mark.criterion("AC03 Rota functional on X^n == bell, n<=20")
def test_ac03_umbral_route():
    L = rota_functional()
    with Budget(1):
        for n in range(21):
            assert apply_functional(L, XPolynomial.x_power(n)) == bell(n), n


@pytest.mark.criterion("AC04 Cigler identity exact for n<=12")
def test_ac04_cigler_identity():
    with Budget(2):
        report = verify_cigler_identity(12)
    assert len(report.cases) == 13
    assert report.passed, report.lines()


@pytest.mark.criterion("AC05 q-Stirling recurrence == basis-conversion oracle, n<=12")
def test_ac05_recurrence_certification():
    with Budget(2):
        for n in range(13):
            row = qstirling_oracle(n)
            for k in range(n + 1):
                assert cigler_qstirling(n, k) == row[k], (n, k)


@pytest.mark.criterion("AC06 B_n(1) == B_n and B_n(0) == B_(n-1), n<=16")
def test_ac06_qbell_specializations():
    with Budget(1):
        for n in range(17):
            p = qbell_poly(n)
            assert p(1) == bell(n), n
            if n >= 1:
                assert p(0) == bell(n - 1), n


@pytest.mark.criterion("AC07 Dobinski enclosure certifies bell(n), width < 1/2, n<=15")
def test_ac07_dobinski_certification():
    with Budget(10):
        for n in range(16):
            res = dobinski_bell(n)
            assert res.enclosure.width < Fraction(1, 2), n
            assert list(res.enclosure.integers()) == [bell(n)], n
            assert res.certified_value == bell(n)


@pytest.mark.criterion("AC08 q-Dobinski enclosure contains B_n(q0), width <= 1e-6")
def test_ac08_q_dobinski_certification():
    points = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1, 2)]
    with Budget(30):
        for n in range(11):
            for q0 in points:
                res = dobinski_qbell(n, q0)
                assert res.enclosure.width <= Fraction(1, 10**6), (n, q0)
                assert qbell_poly(n)(q0) in res.enclosure, (n, q0)


@pytest.mark.criterion("AC09 Monte Carlo z-score <= 5 with 1e6 samples")
def test_ac09_monte_carlo():
    cases = [(3, Fraction(1)), (4, Fraction(1, 2)), (5, Fraction(1))]
    with Budget(30):
        for n, q0 in cases:
            est = poisson_mc(n, q0, 10**6, 20040209)
            z = est.z_score(qbell_poly(n)(q0))
            assert z <= 5, (n, q0, z)


@pytest.mark.criterion("AC10 nonnegative integer q-Stirling coefficients; deg B_n(q) = n(n-1)/2")
def test_ac10_structural_laws():
    with Budget(2):
        for n in range(15):
            for k in range(n + 1):
                for c in cigler_qstirling(n, k).coeffs:
                    assert c.denominator == 1 and c >= 0, (n, k)
            if n >= 1:
                assert qbell_poly(n).degree == n * (n - 1) // 2, n


@pytest.mark.criterion("AC11 CLI golden outputs byte-identical; exit-code contract")
def test_ac11_cli(capsys):
    goldens = [
        ("bell_max3.txt", ["bell", "--max", "3"]),
        ("qbell_poly_n2.txt", ["qbell-poly", "--n", "2"]),
        ("qbell_eval_n3_q1_2.txt", ["qbell-eval", "--n", "3", "--q", "1/2"]),
        ("dobinski_n4.txt", ["dobinski", "--n", "4"]),
        ("dobinski_n3_q1_2.txt", ["dobinski", "--n", "3", "--q", "1/2"]),
        ("dobinski_n0.txt", ["dobinski", "--n", "0"]),
    ]
    with Budget(5):
        for name, argv in goldens:
            assert main(argv) == 0, argv
            out, _ = capsys.readouterr()
            assert out == (GOLDEN / name).read_text(), name

        usage_errors = [
            ["bell", "--max", "x"],
            ["stirling"],
            ["qstirling", "--n", "2"],
            ["qbell-poly", "--n", "-1"],
            ["qbell-eval", "--n", "3", "--q", "1/0"],
            ["verify", "--suite", "bogus", "--max", "3"],
            ["dobinski", "--n", "2", "--width", "0"],
            ["mc", "--n", "2", "--samples", "10", "--seed", "1"],
        ]
        for argv in usage_errors:
            assert main(argv) == 2, argv
            _, err = capsys.readouterr()
            assert err, argv

        assert main(["verify", "--suite", "cigler", "--max", "10"]) == 0
        assert main(["verify", "--suite", "egf", "--max", "20"]) == 0
        assert main(["verify", "--suite", "q0-shift", "--max", "12"]) == 0
        assert main(["mc", "--n", "0", "--q", "1", "--samples", "1000", "--seed", "7"]) == 0
        capsys.readouterr()
