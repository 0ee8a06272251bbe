"""Ordinary characters of symmetric groups and permutation multiplicities.

Character values come from the Murnaghan-Nakayama rule with exact integer
arithmetic.  The multiplicity of the hook character chi_(p-i, 1^i) in the
permutation character on cosets of a Sylow p-subgroup of S_p has a closed
form; the naive way of writing that formula down is wrong at (p, i) =
(7, 2), and the oracle here exposes it.
"""

from blockperm import symchars

parts, classes, table = symchars.character_table(5)
print("S_5 has", len(parts), "irreducible characters of degrees",
      [symchars.dimension(l) for l in parts])

# multiplicities in k[S_7 / C_7]
mult = [symchars.sylow_multiplicity(7, i) for i in range(7)]
print("hook multiplicities for p = 7:", mult)

print("closed form vs brute-force character average:")
for p in (3, 5, 7, 11, 13):
    ok = all(symchars.sylow_multiplicity(p, i)
             == symchars.sylow_multiplicity_oracle(p, i) for i in range(p))
    print("  p = %2d: %s" % (p, "agree" if ok else "DISAGREE"))

printed = symchars.sylow_multiplicity_printed(7, 2)
print("the carelessly transcribed formula gives", printed,
      "at (7, 2); not even an integer. The correct value is",
      symchars.sylow_multiplicity(7, 2))

# p-cores sort characters into blocks
lam = (5, 1, 1)
print("7-core of", lam, "is", symchars.p_core(lam, 7),
      "so it lies in the principal block:",
      symchars.same_block(lam, (7,), 7))
