"""Smoke test for the hecke_f2 extension module."""

import json

import hecke_f2 as h


def main():
    f3 = h.f_generator(3, 20)
    assert f3.support() == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18], f3
    assert h.delta(50).support() == [1, 9, 25, 49]

    d = h.delta(2000)
    assert h.apply_tell(11, d ** 3).support() == h.delta(2000 // 11 + 1).support()
    assert (h.theta(d) + d).support() == []

    name, level, back = h.QSeries.from_f2qser(f3.to_f2qser("f3", 3))
    assert (name, level) == ("f3", 3) and back == f3

    assert h.derive_companion("U3", 3) == "X^3 + yX^2 + (y + y^2)X + y + y^3"

    ctx = h.HeckeContext(3, 41)
    dims = ctx.dimensions()
    assert dims["vnew"] <= dims["new"] <= dims["k"]
    assert ctx.qexpansion([1]).support()[:3] == [1, 2, 3]

    series, bound = h.extract_series("f")
    assert series.startswith("xy + x^3y + xy^5"), series

    assert h.frattini_class(7, 3) == "g7-"
    assert h.tangent_nullity("prime-quotient", 3) == 2

    report = json.loads(h.verify("tangent"))
    assert len(report["checks"]) == 16
    assert all(c["status"] == "pass" for c in report["checks"])

    try:
        h.f_generator(7, 10)
    except ValueError:
        pass
    else:
        raise AssertionError("level 7 accepted")

    print(f"hecke_f2 smoke test passed (f extracted at bound {bound})")


if __name__ == "__main__":
    main()
