"""Smoke test for the nabelian_py extension.

Build first:  pip install --no-build-isolation -e crates/python
"""
import json

import nabelian_py as nab

EXPECTED = {
    "semisimple3": "AllN",
    "a2_hereditary": "NotNAbelianUpTo(11)",
    "auslander_kx2": "ExactlyN(1)",
    "nakayama_x2": "NotNAbelianUpTo(11)",
    "aus2_a2": "ExactlyN(2)",
}


def main():
    for name in nab.corpus_names():
        alg = nab.Algebra.from_corpus(name)
        verdict = alg.detect()
        assert verdict["result"] == EXPECTED[name], (name, verdict)
        assert alg.gldim() == alg.opposite().gldim()
        print(f"{name:14} dim {alg.dim:2}  {verdict['result']}")

    kx2 = nab.Algebra.from_text(
        """
        field Q
        vertex 1 2
        arrow a 1 2
        arrow b 2 1
        relation a*b
        """
    )
    s1 = kx2.simple("1")
    assert s1.star_dual().is_zero()
    assert s1.double_dual_dims() == (1, 1, 0, 0)
    assert s1.grade() == "2"
    assert kx2.simple("2").is_torsion_free(1)
    assert kx2.n_cokernel("P(1)->P(2): [[b]]", 1) == ["P(2)->P(1): [[a]]"]
    assert kx2.is_n_abelian(1) and not kx2.is_n_abelian(2)

    a2 = nab.Algebra.from_corpus("a2_hereditary")
    checks = {c[0]: c for c in a2.cross_check(1, samples=20)}
    assert checks["pdim_one_torsion_free"][1] is False and checks["pdim_one_torsion_free"][4] == "S(1)"

    report = json.loads(nab.Algebra.from_corpus("aus2_a2").selftest(seed=42, samples=20))
    assert report["status"] == "ok", report
    try:
        nab.Algebra.from_text("field Q\nvertex 1\nbogus\n")
    except ValueError as e:
        assert "line 3" in str(e)
    else:
        raise AssertionError("parse error expected")
    print("ok")


if __name__ == "__main__":
    main()
