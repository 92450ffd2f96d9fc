import math
from fractions import Fraction

import pytest

import selfinv as si


def circle():
    return si.SelfInversiveForm(1, "A", [1, 0, 1])


def test_phi_and_inverse():
    g = si.phi(circle())
    assert g.coeffs == [-2, 0, 2]
    assert si.phi_inverse(g) == circle()
    assert si.phi_closed_form(circle()) == g


def test_psi_round_trip():
    p = si.SelfInversiveForm(2, "B", [1, 0, 0, 1])
    g = si.psi(p)
    assert g.coeffs == [2, 0, -6, 0]
    assert si.psi_inverse(g) == p
    with pytest.raises(ValueError):
        si.psi_inverse(g, "odd")


def test_discriminants():
    assert si.dis_via_hankel(circle()) == 16
    assert si.dis_via_resultant(si.phi(circle())) == 16
    q = Fraction(3, 7)
    f = si.SelfInversiveForm(1, "A", [1, q, 1])
    assert si.dis_via_hankel(f) == 16 - 4 * q * q
    report = si.discriminant_report(circle(), oracle=True)
    assert report["scale_check"] is True
    assert report["k"] == 2


def test_power_sums_and_hankel():
    sums = si.power_sums(circle())
    assert sums[0] == (2, 0)
    assert sums[1] == (0, 0)
    assert si.hankel_matrix(circle()) == [[(2, 0), (0, 0)], [(0, 0), (2, 0)]]
    assert si.hankel_determinant(circle()) == (4, 0)


def test_gaussian_entries():
    f = si.SelfInversiveForm(2, "A", [1, (Fraction(1, 2), 3), (Fraction(1, 2), -3), 1])
    assert si.validate(f)
    assert f.zeta[1] == (Fraction(1, 2), 3)
    bad = si.SelfInversiveForm(1, "A", [1, 1j, 1])
    assert not si.validate(bad)
    with pytest.raises(si.ValidationError):
        si.phi(bad)


def test_roots_and_classification():
    r = si.find_roots([1, 0, 1])
    assert sorted(z.imag for z in r["roots"]) == pytest.approx([-1, 1])
    assert r["circle_count"] == 2
    c = si.classify_circle_roots(si.SelfInversiveForm(1, "A", [1, 3, 1]))
    assert c["k"] == 0 and c["sign"] == -1 and c["consistent"]


def test_sample_w_and_errors():
    f = si.sample_w([math.pi / 2, -math.pi / 2])
    assert f.is_monic() and si.validate(f)
    with pytest.raises(si.PreconditionError):
        si.sample_w([1.0, 1.0])
    with pytest.raises(si.PreconditionError):
        si.dis_via_hankel(si.SelfInversiveForm(1, "A", [2, 0, 2]))


def test_deflate_and_json():
    f = si.SelfInversiveForm(1, "A", [1, 2, 1])
    assert si.deflate(f) == si.SelfInversiveForm(0, "A", [1, 1])
    text = circle().to_json()
    assert text == '{"n":1,"space":"A","zeta":[[1,1,0,1],[0,1,0,1],[1,1,0,1]]}'
    assert si.SelfInversiveForm.from_json(text) == circle()
