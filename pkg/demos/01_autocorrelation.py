# Nonperiodic autocorrelation of +/-1 sequences and the base-sequence condition.
import numpy as np

from baseq import BaseQuadruple, BinarySequence, is_base_sequences, naf, naf_vector
from baseq.seqcore import alternate, negate, reverse

A = BinarySequence.parse("++++--+-+")
print(A, A.signs)
print("N_A:", naf_vector(A).values)

# same numbers straight from numpy: full correlation, keep lags >= 0
x = np.array(A.signs)
print("numpy:", np.correlate(x, x, "full")[len(x) - 1:])

# negation and reversal keep the norm, alternation flips odd lags
print(naf_vector(negate(A)) == naf_vector(A), naf_vector(reverse(A)) == naf_vector(A))
print([naf(alternate(A), i) for i in range(len(A))])

# four sequences whose autocorrelations cancel at every nonzero lag
S = BaseQuadruple.parse("++++--+-+", "+++-+++--", "++--+--+", "++++-+-+")
rows = np.zeros((4, S.n + 1), dtype=int)
for k, s in enumerate(S):
    rows[k, :len(s)] = naf_vector(s).values
print(rows)
print("column sums:", rows.sum(axis=0))   # 4n+2, then zeros
print("base sequences:", is_base_sequences(S))
