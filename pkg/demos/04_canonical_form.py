# Canonical form: one distinguished member per equivalence class.
import random

from baseq import decode, encode, format_code, parse_code
from baseq.canonical import canonical_members, canonical_oracle, canonicalize, is_canonical
from baseq.group import ORDER, apply, group

row = decode(parse_code("0165;6123", 7))
G = group(1)
rng = random.Random(1)
for _ in range(5):
    g = G.element(rng.randrange(ORDER))
    img = apply(g, row)
    print(format_code(encode(img)), "->", format_code(encode(canonicalize(img))))

# two routes to the same answer
img = apply(G.element(2345), row)
print(canonicalize(img) == canonical_oracle(img))

print(is_canonical(parse_code("06142;1675", 8)), is_canonical(parse_code("06142;1624", 8)))

# the central column of (C;D) is pinned when no quad is 2 or 7
print([format_code(c) for c in canonical_members(decode(parse_code("0165;6142", 7)))])
