"""Node-count estimates for first-witness searches with incremental pruning.

Pruning scheme (same one planned for the real implementation): each identity
instance (x,y,z) is parked on the first undecided cell its evaluation needs;
assigning that cell re-evaluates the instance, which either proves a violation
(prune: every completion of this prefix violates the identity), parks on the
next undecided cell, or resolves. Resolved instances are re-checked by a full
scan at each leaf, so stale parking after backtracking costs time, never
correctness, and proven violations never cut off a satisfying completion, so
the first leaf reached is still the lexicographic minimum.
"""
import time
from proto import CAT, left_unit, right_unit, is_assoc

def compile_eq(l, r):
    # postfix over stack: 0..2 push x/y/z, -1 multiplies top two
    prog = []
    def rec(u):
        if u[0] == 'v':
            prog.append("xyz".index(u[1]))
        else:
            rec(u[1]); rec(u[2]); prog.append(-1)
    rec(l)
    nl = len(prog)
    rec(r)
    return prog, nl

def find_first(n, lab, pred, node_cap=5_000_000):
    l, r, *_ = CAT[lab]
    prog, nl = compile_eq(l, r)
    grid = [[-1] * n for _ in range(n)]
    rowm = [0] * n
    colm = [0] * n
    full = (1 << n) - 1
    nodes = 0
    watch = [[] for _ in range(n * n)]  # cell index -> instance list

    def run(x, y, z):
        """-> ('blocked', cell) | ('viol',) | ('ok',)"""
        st = []
        lv = None
        for i, op in enumerate(prog):
            if op >= 0:
                st.append((x, y, z)[op])
            else:
                b = st.pop(); a = st.pop()
                v = grid[a][b]
                if v < 0:
                    return ('blocked', a * n + b)
                st.append(v)
            if i == nl - 1:
                lv = st.pop()
        return ('ok',) if lv == st[0] else ('viol',)

    trips = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]
    for t in trips:
        s = run(*t)
        assert s[0] == 'blocked'
        watch[s[1]].append(t)

    def leaf_ok():
        for t in trips:
            if run(*t)[0] != 'ok':
                return False
        if pred == "no_left_unit":
            return left_unit(grid) is None
        if pred == "no_right_unit":
            return right_unit(grid) is None
        if pred == "not_associative":
            return not is_assoc(grid)[0]
        return True

    capped = False

    def rec(idx):
        nonlocal nodes, capped
        if idx == n * n:
            return [row[:] for row in grid] if leaf_ok() else None
        rr, cc = divmod(idx, n)
        m = full & ~rowm[rr] & ~colm[cc]
        while m:
            b = m & (-m)
            m ^= b
            v = b.bit_length() - 1
            grid[rr][cc] = v
            rowm[rr] |= b
            colm[cc] |= b
            nodes += 1
            if nodes > node_cap:
                capped = True
            ok = not capped
            if ok:
                wl = watch[idx]
                for t in wl:
                    s = run(*t)
                    if s[0] == 'viol':
                        ok = False
                        break
                    if s[0] == 'blocked' and s[1] != idx:
                        watch[s[1]].append(t)
            if ok:
                w = rec(idx + 1)
                if w is not None:
                    return w
            grid[rr][cc] = -1
            rowm[rr] ^= b
            colm[cc] ^= b
            if capped:
                return None
        return None

    w = rec(0)
    return w, nodes, capped

CASES = [
    ("F35", "no_left_unit", 5), ("F35", "no_left_unit", 6),
    ("F40", "no_right_unit", 5), ("F40", "no_right_unit", 6),
    ("F43", "no_right_unit", 5), ("F43", "no_right_unit", 6),
    ("F51", "no_right_unit", 5), ("F51", "no_right_unit", 6),
    ("F48", "no_right_unit", 5),
    ("F57", "no_left_unit", 5),
    ("F38", "not_associative", 5),
    ("F41", "not_associative", 5), ("F41", "not_associative", 6),
    ("F53", "not_associative", 6),
    ("F45", "no_right_unit", 5), ("F45", "no_right_unit", 6),
    ("F60", "no_left_unit", 5), ("F60", "no_left_unit", 6),
]

if __name__ == "__main__":
    for lab, pred, n in CASES:
        t0 = time.time()
        w, nodes, capped = find_first(n, lab, pred)
        dt = time.time() - t0
        tag = "CAPPED" if capped else ("witness" if w else "exhausted-none")
        print(f"{lab:4s} {pred:16s} n={n}: {tag:15s} nodes={nodes:>9d} {dt:6.1f}s", flush=True)
        if w:
            print("      ", w, flush=True)
