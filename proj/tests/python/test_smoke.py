import lcalib


VIR_TEXT = """
confalg vir {
  generators L;
  bracket [L ~ L] = (D + 2*lam) L;
}
"""


def test_axioms():
    v = lcalib.vir()
    assert v.rank == 1
    assert v.check_skew()
    assert v.check_jacobi()
    c = lcalib.cur_sl2()
    assert c.rank == 3
    assert c.is_current
    assert c.check_skew()
    assert c.check_jacobi()


def test_bracket_rendering():
    v = lcalib.vir()
    assert v.bracket(0, 0) == "(D + 2*lam) L"


def test_parse_round():
    algs = lcalib.parse_algebras(VIR_TEXT)
    assert set(algs) == {"vir"}
    assert algs["vir"].bracket(0, 0) == lcalib.vir().bracket(0, 0)


def test_solve_vir():
    s = lcalib.solve(lcalib.vir(), "tqc", 2, 2)
    assert s.dimension == 0
    s = lcalib.solve(lcalib.vir(), "cder", 2, 2)
    assert s.dimension == 2
    assert lcalib.inner_quotient_dimension(lcalib.vir(), "cder", 2, 2) == 0


def test_ledger_vir():
    entries = lcalib.ledger(VIR_TEXT, 2, 2)
    assert entries
    assert all(passed for (_, _, _, passed) in entries)


def test_triple_hom_kinds():
    text = VIR_TEXT + "modmap ident : vir -> vir {\n  L |-> L;\n}\n"
    kinds = lcalib.triple_hom_kinds(text, "ident")
    assert kinds == {"hom": True, "antihom": False, "triplehom": True}
