"""
Bell states from a Hadamard and a CNOT
======================================

A Hadamard on the left qubit followed by a CNOT it controls maps |x>|y> to
(1-y, y, y-2xy, (1-2x)(1-y)) / sqrt2.  Everything below is exact: the 1/sqrt2
factors live in Q(i, sqrt2).
"""

import itertools

from booleket import bell_closed_form, bell_matrix, bell_state, inner_product
from booleket.render import render_bell, render_matrix

print(render_matrix(bell_matrix(), "latex"))

for x, y in itertools.product((0, 1), repeat=2):
    state = bell_state(x, y)
    print(render_bell(state, "text", with_approx=True))
    assert state.ket == bell_closed_form(x, y)

# The four outputs are orthonormal
pairs = list(itertools.product((0, 1), repeat=2))
gram = [[str(inner_product(bell_state(*s).ket, bell_state(*t).ket)) for t in pairs] for s in pairs]
for row in gram:
    print(row)
