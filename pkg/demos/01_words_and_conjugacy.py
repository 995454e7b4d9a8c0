"""Words in the surface group: reduction, the boundary word, conjugacy.

Run:  python demos/01_words_and_conjugacy.py
"""

from mcgcocycles import FreeGroup, commutator, conjugator

F = FreeGroup(2)

print("The genus 2 surface group has generators A1 A2 B1 B2.")
w = F.word("A1 B2 b2 a1 B1")
print(f"Words reduce on construction:  'A1 B2 b2 a1 B1'  ->  {w}")

x, y = F.word("A1 B1"), F.word("b1 a1 A2")
print(f"Products reduce across the seam:  ({x}) * ({y})  =  {x * y}")

z = F.zeta()
print(f"\nThe boundary word zeta is a product of commutators: {z}")
print(f"It has 4g = {len(z)} letters, and [A1, B1] = {commutator(F.a(1), F.b(1))}.")

core, prefix = F.word("B1 A2 b1").cyclic_reduce()
print(f"\nCyclic reduction splits off the conjugating part:")
print(f"  B1 A2 b1  =  ({prefix}) ({core}) ({prefix.inverse()})")

u = F.word("A1 B2")
target = u * z * u.inverse()
found = conjugator(target, z)
print(f"\nConjugacy is decided by rotating cyclically reduced cores.")
print(f"  conjugator({target}, zeta) = {found}")
print(f"  check: witness conjugates zeta back to the target:",
      found * z * found.inverse() == target)

print(f"\nNon-conjugate pairs are recognized:",
      conjugator(F.a(1), F.b(1)))
