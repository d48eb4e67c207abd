"""Why partial synchronicity is preserved by convolution.

For A*C and B*C, the step difference f(m,n) - f(m+1,n-1) expands as a double
sum of g(k,l) c_k c_l.  The terms pair up as g(k,l) + g(l-1,k+1) = 0, and for
partially synchronized A, B the surviving terms (k >= l) are nonnegative.
Here the expansion is done by hand for one (m,n) and then checked
everywhere with the library.
"""
from lcseq.relations import f_pair, is_partially_synchronized
from lcseq.sequence import convolve, parse_sequence, term
from lcseq.theorems import g_value, proof_trace_window

A, B, C = parse_sequence("1,2,3"), parse_sequence("1,3,8"), parse_sequence("2,3,1")
m, n = 2, 1
print("A ~p B:", is_partially_synchronized(A, B).holds)

ks = range(C.offset, C.end)
print(f"\ng(k,l) at (m,n)=({m},{n}); rows k, columns l")
print("      " + "".join(f"{l:>6}" for l in ks))
for k in ks:
    print(f"{k:>6}" + "".join(f"{str(g_value(A, B, m, n, k, l)):>6}" for l in ks))

total = sum(g_value(A, B, m, n, k, l) * term(C, k) * term(C, l) for k in ks for l in ks)
AC, BC = convolve(A, C), convolve(B, C)
direct = f_pair(AC, BC, m, n) - f_pair(AC, BC, m + 1, n - 1)
print("\nsum g(k,l) c_k c_l =", total)
print("direct difference  =", direct)

pairs = [(k, l) for k in range(-2, 5) for l in range(-2, 5)]
print("antisymmetric everywhere:",
      all(g_value(A, B, m, n, k, l) + g_value(A, B, m, n, l - 1, k + 1) == 0 for k, l in pairs))
print("nonnegative for k >= l: ",
      all(g_value(A, B, m, n, k, l) >= 0 for k, l in pairs if k >= l))

rep = proof_trace_window(A, B, C)
print("\nfull window check:", rep.holds, rep.detail)

# without the premise the identity still holds but g can go negative
A, B, C = parse_sequence("1,20,200,1800"), parse_sequence("1,6,30,60"), parse_sequence("40,60,10,1")
rep = proof_trace_window(A, B, C)
print("weak-only pair:", rep.holds, rep.detail)
