# Different sequences with the same norm, from products of binary polynomials.
from baseq.normeq import (U, V, SignPolynomial, composed_product, dual, mask_table,
                          negrev_equivalent, same_norm, same_norm_pairs)
from baseq.seqcore import naf_vector

p = SignPolynomial.parse("++-")     # 1 + x - x^2
q = SignPolynomial.parse("+--")     # 1 - y - y^2, placed at y = x^3
print(composed_product([p, q]), composed_product([p, q], [0, 1]))
print(U, V, same_norm(U, V), negrev_equivalent(U, V))
print(naf_vector(U).values)
print(dual(q))

# every dual mask keeps the norm
f = [SignPolynomial.parse(s) for s in ("++-", "+-", "++-+")]
for mask, seq in mask_table(f).items():
    print(mask, seq, naf_vector(seq) == naf_vector(mask_table(f)[(0, 0, 0)]))

# exhaustive scan for short lengths
for L in range(1, 12):
    groups = same_norm_pairs(L)
    print(L, len(groups), [" ".join(map(str, g)) for g in groups[:2]])
