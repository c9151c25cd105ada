import itertools

import pytest

import fusion_exp as fx


@pytest.fixture
def toy():
    return fx.GroupParams(23, 11, 2), fx.FieldParams(11, 2, [1, 0])


def test_worked_example(toy):
    g, f = toy
    base = fx.FusionBase(g, f, [2, 4])
    y = base ** fx.FieldElement(f, [3, 5])
    assert y.residues == [16, 1]
    for solver in ("bsgs", "rho", "bruteforce", "exhaustive"):
        assert fx.fdlog(base, y, solver=solver).coeffs == [3, 5]


def test_lambda():
    assert fx.symbolic_lambda(2) == [["y0", "-y1"], ["y1", "y0"]]
    f = fx.FieldParams(11, 2, [1, 0])
    assert fx.FieldElement(f, [3, 5]).lambda_matrix() == [[3, 6], [5, 3]]


def test_errors():
    with pytest.raises(fx.FusionExpError) as e:
        fx.FieldParams(5, 2, [1, 0])
    assert e.value.code == "NotIrreducible"
    assert isinstance(e.value, ValueError)
    assert fx.is_irreducible(11, [1, 0, 1])
    assert not fx.is_irreducible(5, [1, 0, 1])


def test_group_ops(toy):
    g, _ = toy
    assert (fx.GroupElement(g, 4) * fx.GroupElement(g, 18)).residue == 3
    assert (fx.GroupElement.generator(g) ** 7).residue == 13
    assert fx.dlog_bsgs(fx.GroupElement.generator(g), fx.GroupElement(g, 13)) == 7


def test_protocols(toy):
    g, f = toy
    rng = fx.Rng(1)
    base = fx.FusionBase(g, f, [2, 4])
    for _ in range(50):
        a = fx.fdh_keygen(base, rng)
        b = fx.fdh_keygen(base, rng)
        assert fx.fdh_shared(a, b.public_key) == fx.fdh_shared(b, a.public_key)
        kp = fx.felgamal_keygen(base, rng)
        msg = fx.FusionBase.random(g, f, rng)
        ct = fx.felgamal_encrypt(base, kp.public_key, msg, rng)
        assert fx.felgamal_decrypt(kp.secret, ct) == msg


def test_vss(toy):
    g, f = toy
    rng = fx.Rng(2)
    base = fx.unit_embed(fx.GroupElement.generator(g), f)
    secret = fx.FieldElement(f, [7, 1])
    d = fx.vss_deal(secret, 2, 4, base, rng)
    assert all(fx.vss_verify(d, i) for i in range(1, 5))
    for subset in itertools.combinations(d.shares, 3):
        assert fx.vss_reconstruct(list(subset)) == secret
    shares = d.shares
    shares[1].value = shares[1].value + fx.FieldElement.one(f)
    d.shares = shares
    assert not fx.vss_verify(d, 2)
    with pytest.raises(fx.FusionExpError) as e:
        fx.vss_reconstruct_verified(d, shares[:3])
    assert e.value.code == "VerifyFailed"
    assert e.value.index == 2


def test_big_integers():
    g = fx.GroupParams.generate(64, 3)
    assert g.q.bit_length() == 64
    assert g.modulus == 2 * g.q + 1
    f = fx.FieldParams(g.q, 3, fx.find_irreducible(g.q, 3, 1))
    rng = fx.Rng(3)
    x = fx.FieldElement.random(f, rng)
    base = fx.FusionBase.random(g, f, rng)
    assert all(0 <= c < g.q for c in x.coeffs)
    assert (base ** x) ** x.inverse() == base


def test_reduction_matrix(toy):
    g, f = toy
    report = fx.run_reduction_matrix(g, f, 5, seed=1)
    assert len(report["arrows"]) == 8
    assert all(a["successes"] == a["trials"] == 5 for a in report["arrows"])
