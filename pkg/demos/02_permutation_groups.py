"""Permutation groups: orders, Sylow subgroups, cosets and double cosets.

Groups are given by generators; a stabilizer chain answers membership and
order questions, and small groups (the default cap is 10080 elements,
override with BLOCKPERM_CAP) can be enumerated outright.
"""

from blockperm.permgrp import PermGroup, parse_group

g = parse_group("sym:7")
print("S_7 has order", g.order())

s7 = g.sylow_subgroup(7)
print("a Sylow 7-subgroup has order", s7.order())

n = g.normalizer(s7)
print("its normalizer has order", n.order(),
      "(= 42, the Frobenius group of order 42)")

dcs = g.double_cosets(s7, s7)
print("S_7 splits into", len(dcs), "double cosets P\\G/P")
print("double coset sizes:", sorted(size for _rep, size in dcs))
assert sum(size for _rep, size in dcs) == g.order()

# conjugacy classes of p-subgroups drive the vertex and weight machinery
classes = PermGroup.symmetric(5).p_subgroups_up_to_conjugacy(2)
print("S_5 has", len(classes), "classes of 2-subgroups, orders",
      [h.order() for h in classes])
