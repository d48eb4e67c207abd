"""Weak synchronicity does not survive convolution.

Two weakly synchronized sequences A and B are each convolved with the same
log-concave C.  The products are compared term by term at every index, and
the one index where the weak inequality breaks is printed with its margin.
"""
from lcseq.relations import is_weakly_synchronized
from lcseq.sequence import convolve, format_sequence, parse_sequence, term

A = parse_sequence("1,20,200,1800")
B = parse_sequence("1,6,30,60")
C = parse_sequence("40,60,10,1")

print("A =", format_sequence(A))
print("B =", format_sequence(B))
print("C =", format_sequence(C))
print("A ~w B:", is_weakly_synchronized(A, B).holds)

AC, BC = convolve(A, C), convolve(B, C)
print()
print("A*C =", format_sequence(AC))
print("B*C =", format_sequence(BC))

# a_{k-1} b_{k+1} + a_{k+1} b_{k-1} <= 2 a_k b_k, index by index
print()
print(" k   2 a_k b_k      a_{k-1}b_{k+1} + a_{k+1}b_{k-1}")
for k in range(-1, AC.end + 1):
    lhs = 2 * term(AC, k) * term(BC, k)
    rhs = term(AC, k - 1) * term(BC, k + 1) + term(AC, k + 1) * term(BC, k - 1)
    flag = "   <-- fails by %s" % (rhs - lhs) if rhs > lhs else ""
    print(f"{k:2d}  {str(lhs):>12}  {str(rhs):>12}{flag}")

rep = is_weakly_synchronized(AC, BC)
print()
print("A*C ~w B*C:", rep.holds)
print("library report:", rep.to_json()["violation"])
