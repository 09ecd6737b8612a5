# Quad decomposition: a pair of sequences folded into 2x2 quads and a
# symbol code that lists one label per quad.
from baseq import BaseQuadruple, decode, encode, format_code, parse_code
from baseq.quadcodec import BS, GOLAY, QuadSymbol, code_shape, quad_at, symmetry_type

S = BaseQuadruple.parse("++++--+-+", "+++-+++--", "++--+--+", "++++-+-+")
code = encode(S)
print(format_code(code))          # 06142;1675, leading 0 stands for Golay quad 3'

for i in range(1, 5):
    print(i, quad_at((S.a, S.b), i))

# entry sums: Golay quads 2 mod 4, BS-quads 0 mod 4
print({k: sum(sum(c) for c in pat) % 4 for k, pat in GOLAY.items()})
print({k: (sum(sum(c) for c in pat) % 4, symmetry_type(QuadSymbol("bs", k))) for k, pat in BS.items()})

# shapes depend on the parity of n
for n in range(0, 5):
    print(n, code_shape(n))

# round trip through text
for n, text in [(1, "0;0"), (2, "03;1"), (7, "0165;6123")]:
    qd = decode(parse_code(text, n))
    print(text, "->", qd, "->", format_code(encode(qd)))
