"""Synchronized, partially synchronized, weakly synchronized.

Each relation implies the next one and neither implication reverses.  This
walks through one pair for each gap, shows that partial synchronicity is not
transitive, and then counts the three relations over every pair of small
log-concave sequences.
"""
import itertools
from collections import Counter

from lcseq.relations import (
    f_pair,
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
)
from lcseq.search import SearchConfig, lstar_candidates
from lcseq.sequence import parse_sequence as P


def show(A, B):
    s, p, w = (is_synchronized(A, B), is_partially_synchronized(A, B), is_weakly_synchronized(A, B))
    print(f"  {A} vs {B}: sync={s.holds} partial={p.holds} weak={w.holds}")
    for name, rep in (("sync", s), ("partial", p)):
        if not rep.holds:
            v = rep.violation
            cond = f" condition ({v.condition})" if v.condition else ""
            print(f"    {name} breaks at (m,n)=({v.m},{v.n}){cond}: {v.lhs} < {v.rhs}")


print("partial but not synchronized:")
show(P("1,3,5"), P("1,4,13"))

print("\nweak but not partial:")
A, B = P("1,20,200,1800"), P("1,6,30,60")
show(A, B)
# f(m,n) = a_m b_n + a_n b_m should not grow as (m,n) spreads apart
print("    f(2,1) =", f_pair(A, B, 2, 1), " f(3,0) =", f_pair(A, B, 3, 0))

print("\nnot transitive:")
X, Y, Z = P("1,2,3"), P("1,3,8"), P("1,4,15")
for U, V in ((X, Y), (Y, Z), (X, Z)):
    print(f"  {U} ~p {V}: {is_partially_synchronized(U, V).holds}")

print("\nhead and tail conditions catch shifted supports quickly:")
show(P("1"), P("@2:1"))
show(P("1,1,1"), P("1"))

seqs = lstar_candidates(SearchConfig(max_len=3, max_value=4))
tally = Counter()
for A, B in itertools.combinations_with_replacement(seqs, 2):
    key = (is_synchronized(A, B).holds,
           is_partially_synchronized_bruteforce(A, B).holds,
           is_weakly_synchronized(A, B).holds)
    tally[key] += 1

print(f"\n{len(seqs)} sequences (length <= 3, values <= 4), unordered pairs by (sync, partial, weak):")
for key, count in sorted(tally.items(), reverse=True):
    print("  ", key, count)
assert (True, False, True) not in tally and (False, True, False) not in tally
