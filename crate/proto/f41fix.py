"""Diagnose the printed F41 example: find the nearest genuine F41 witness."""
from proto import (CAT, FIX, satisfies, left_unit, right_unit, is_assoc,
                   rows_ok, transpose)

G6B = FIX["F41"]
l41, r41 = CAT["F41"][0], CAT["F41"][1]
l53, r53 = CAT["F53"][0], CAT["F53"][1]

# does the printed grid satisfy F53 instead (rows/cols swapped in typesetting)?
print("printed grid satisfies F53:", satisfies(G6B, l53, r53)[0])
print("transpose satisfies F41:", satisfies(transpose(G6B), l41, r41)[0])

# which catalog identities does the printed grid satisfy?
sat = [lab for lab, (l, r, *_x) in CAT.items() if satisfies(G6B, l, r)[0]]
print("printed grid satisfies:", sorted(sat, key=lambda s: int(s[1:])))

# enumerate all reduced latin squares of order 6 (row0 = col0 = identity)
def reduced_squares(n):
    grid = [[0] * n for _ in range(n)]
    grid[0] = list(range(n))
    for i in range(n):
        grid[i][0] = i
    rowm = [1 << i for i in range(n)]
    rowm[0] = (1 << n) - 1
    colm = [1 << grid[0][c] for c in range(n)]
    colm[0] = (1 << n) - 1
    full = (1 << n) - 1
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def rec(k):
        if k == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[k]
        m = full & ~rowm[r] & ~colm[c]
        while m:
            b = m & (-m)
            m ^= b
            v = b.bit_length() - 1
            grid[r][c] = v
            rowm[r] |= b
            colm[c] |= b
            yield from rec(k + 1)
            rowm[r] ^= b
            colm[c] ^= b

    yield from rec(0)

def hamming(a, b):
    return sum(1 for r1, r2 in zip(a, b) for x, y in zip(r1, r2) if x != y)

hits = []
for g in reduced_squares(6):
    if satisfies(g, l41, r41)[0] and not is_assoc(g)[0]:
        hits.append((hamming(G6B, g), g))
hits.sort(key=lambda t: (t[0], t[1]))
print("nonassociative reduced F41 loops of order 6:", len(hits))
for d, g in hits[:4]:
    print("  hamming distance", d, ":")
    for row in g:
        print("   ", row)

# smaller orders?
for n in (5,):
    small = []
    for g in reduced_squares(n):
        if satisfies(g, l41, r41)[0] and not is_assoc(g)[0]:
            small.append(g)
    print(f"nonassociative reduced F41 loops of order {n}:", len(small))
