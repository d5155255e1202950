#!/usr/bin/env python3
"""Smoke test for the Python bindings. Builds the extension module if it is
not present, then exercises the main surface end to end."""
import json
import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)

if not os.path.exists(os.path.join(HERE, "cyclic_census_py.so")):
    subprocess.run(["bash", os.path.join(HERE, "build.sh")], check=True)

import cyclic_census_py as cc  # noqa: E402


def check(name, cond):
    if not cond:
        raise SystemExit(f"FAIL: {name}")
    print(f"ok {name}")


check("count C27xC3 = 11", cc.count("C 27 x C 3") == 11)
check("count D16 = 12", cc.count("D 8") == 12)
check("count SL(2,3) = 13", cc.count("SL23") == 13)
check("count Dic7 = 11", cc.count("Dic 7") == 11)

g = cc.Group("Q 8")
check("Q8 axioms", g.axioms_hold())
check("Q8 lattice size 6", g.lattice_size() == 6)
check("Q8 hasse edges 7", g.hasse_dot().count("->") == 7)

f5 = cc.Group("F5")
order, total, per = f5.profile()
check("F5 profile", order == 20 and total == 12 and per[4] == 5)
check("F5 sylow n_2 = 5", f5.sylow_count(2) == 5)

a4 = cc.Group("A4")
check("A4 not CLT", not a4.is_clt())
check("A4 cyclic subgroups", len(a4.cyclic_subgroups()) == 8)

check("phi(21) = 12", cc.euler_phi(21) == 12)
check("abelian [2,18] = 12", cc.abelian_count([2, 18]) == 12)
check("shapes(11) has 7 classes", len(cc.shape_classes(11)) == 7)
check("shapes(12) includes p^2qr", "p^2qr" in cc.shape_classes(12))

check("33 tables shipped", len(cc.table_ids()) == 33)
rep = json.loads(cc.reproduce_table("T1"))
check("T1 reproduces 3 rows", len(rep["rows"]) == 3 and rep["ok"])
check("T1 first row T", rep["rows"][0]["t_recomputed"] == "14p - 14")

rep = json.loads(cc.reproduce_table("T8"))
flagged = [r for r in rep["rows"] if r["verdict"] == "unparsed"]
check("T8 flags the malformed cell", flagged and flagged[0]["t_recomputed"] == "q - 9")

ok, _ = cc.verify_theorem(11)
check("membership check for 11", ok)
ok, _ = cc.verify_theorem(12)
check("membership check for 12", ok)
ok, _ = cc.verify_registry()
check("registry check", ok)
ok, summary = cc.audit_tables()
check("table audit", ok and len(json.loads(summary)["tables"]) == 33)

print("smoke test passed")
