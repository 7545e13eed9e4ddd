import pmf


def test_group_orders():
    assert pmf.group_orders() == (85030560, 17496)


def test_cusps():
    c = pmf.cusp_counts()
    assert c["cusp_classes"] == 4860
    assert c["boundary_points"] == 810


def test_theta():
    assert pmf.theta_coefficients(4) == ["1", "6", "0", "6", "6"]
    assert pmf.theta_identity(200)


def test_eisenstein_norm():
    assert pmf.eis_norm("2+w") == "3"


def test_graded_dims_two_quadrics():
    dims = pmf.graded_dims(["X1^2 - X2*X3", "X2^2 - X1*X3"], nx=3, cap=5)
    assert dims == [1, 3, 4, 4, 4, 4]
    assert pmf.graded_dims(["X1^2 - X2*X3", "X2^2 - X1*X3"], nx=3, cap=5, prime_index=1) == dims


def test_weighted_ring():
    # one variable of weight 1 and one of weight 2
    assert pmf.graded_dims([], nx=1, ny=1, cap=4) == [1, 1, 2, 2, 3]


def test_hilbert_fit():
    pts = [(k, 729 * (k - 1) * (k - 2) * (k - 3) // 2 + 810) for k in range(7, 12)]
    coeffs, ok = pmf.hilbert_fit(pts)
    assert ok
    assert coeffs == ["-1377", "8019/2", "-2187", "729/2"]


def test_orbit_sizes():
    sizes = pmf.orbit_sizes()
    assert len(sizes) == 12
    assert sizes[0] == 10
    assert sizes[5] == 45


def test_qseries_report():
    rep = pmf.run("qseries")
    assert rep["schema"] == "pmf.report/1"
    [check] = rep["checks"]
    assert check["status"] == "PASS"
    short = pmf.run("qseries", qterms=1)
    assert short["checks"][0]["status"] == "PARTIAL"
