"""Pure-Python implementations of the hot kernels.

Tokens are packed integers ``(label << 2) | (role << 1) | signbit`` with
role 0 = over, 1 = under and signbit 0 = ``+``, 1 = ``-``.
"""


def canonical_form(tokens):
    n = len(tokens)
    if n == 0:
        return ()
    best = None
    for start in range(n):
        # canonical words always open with an over pass of crossing 1
        if tokens[start] & 2:
            continue
        mapping = {}
        nxt = 1
        out = []
        undecided = best is not None
        for k in range(n):
            t = tokens[(start + k) % n]
            lab = t >> 2
            new = mapping.get(lab)
            if new is None:
                new = nxt
                mapping[lab] = new
                nxt += 1
            v = (new << 2) | (t & 3)
            if undecided:
                b = best[k]
                if v > b:
                    out = None
                    break
                if v < b:
                    undecided = False
            out.append(v)
        if out is not None and (best is None or undecided is False):
            best = tuple(out)
    if best is None:
        # no over pass at all; cannot happen for valid codes
        raise ValueError("code has no over pass")
    return best


def warping_profile(tokens):
    """Forward warping degree at each basepoint ``0..n-1``."""
    n = len(tokens)
    if n == 0:
        return [0]
    seen = set()
    count = 0
    for t in tokens:
        lab = t >> 2
        if lab not in seen:
            seen.add(lab)
            if t & 2:
                count += 1
    out = [count]
    for b in range(n - 1):
        # moving past a first-met pass flips which pass is met first
        count += -1 if tokens[b] & 2 else 1
        out.append(count)
    return out
