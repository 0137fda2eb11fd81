import nilq


def test_apply_odd():
    assert nilq.apply("eta(1)", "x1", mode="odd", n=2) == "t + u"
    assert nilq.apply("tau(1)", "x1*x2", mode="odd", n=2) == "-x1*x2"


def test_apply_q():
    assert nilq.apply("qdel(1)", "x1^2", mode="q", n=2) == "q*x1 + q^2*x2"


def test_pair():
    assert nilq.pair("h[1,2,1]", "h[2,2]") == "1 + 2*q^2 + q^3"
    assert nilq.pair("h[1,2,1]", "h[2,2]", oracle=True) == "1 + 2*q^2 + q^3"
    assert nilq.pair("e[2]", "e[2]") == "q^-1"


def test_gaussian():
    assert nilq.gaussian_binomial(2, 1) == "1 + q"
    assert nilq.gaussian_binomial(7, 2).startswith("1 + q + 2*q^2")


def test_verify_suite():
    reports = nilq.verify("cybe", n=3, max_deg=4)
    assert reports and all(r["pass"] for r in reports)
    assert "cybe" in nilq.suites()


def test_insertion_routes_agree():
    a = nilq.insertion([2, 2], 2, "h[2]", route="recursive")
    b = nilq.insertion([2, 2], 2, "h[2]", route="explicit")
    c = nilq.insertion([2, 2], 2, "h[2]", route="direct")
    assert a == b == c


def test_factorization():
    assert nilq.factorization(5)["pass"]
