"""Pure-Python exhaustive scan over Z_q^n.

Reference implementation of the hot loop; crossbifix._scan is the compiled
mirror. Words travel through here as base-q integers (most significant
symbol first), so numeric order is lexicographic order.
"""

IMPLEMENTATION = "python"


def find_candidates(q, n, members, prefixes, suffixes, limit=0, start=0):
    """Scan encodings [start, q**n) for words compatible with an indexed code.

    `prefixes[j]` / `suffixes[j]` (1 <= j <= n-1) hold the encoded length-j
    prefixes and suffixes of the code. A word survives when it is bifix-free,
    none of its prefixes is a code suffix and none of its suffixes is a code
    prefix. Survivors outside `members` are the candidates.

    Returns (candidates, examined): candidate encodings in ascending order,
    and the number of non-member words that were actually checked. With
    limit > 0 the scan stops after that many candidates.
    """
    member_set = frozenset(members)
    pre_sets = [frozenset(vals) for vals in prefixes]
    suf_sets = [frozenset(vals) for vals in suffixes]
    total = q ** n
    digits = [0] * n
    rem = start
    for i in range(n - 1, -1, -1):
        digits[i] = rem % q
        rem //= q
    candidates = []
    examined = 0
    idx = start
    while idx < total:
        pv = 0
        sv = 0
        pw = 1
        overlap = False
        for j in range(1, n):
            pv = pv * q + digits[j - 1]
            sv = digits[n - j] * pw + sv
            pw *= q
            if pv == sv or pv in suf_sets[j] or sv in pre_sets[j]:
                overlap = True
                break
        if overlap:
            examined += 1
        elif idx not in member_set:
            examined += 1
            candidates.append(idx)
            if limit and len(candidates) >= limit:
                break
        i = n - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] == q:
                digits[i] = 0
                i -= 1
            else:
                break
        idx += 1
    return candidates, examined
