"""
Superpositions and exact normalization
======================================

A state sum_x a_x |x> is normalized when sum_x |a_x|^2 = 1.  The check is an
exact equality, so amplitudes such as 3/5 and 4i/5 or 1/sqrt2 pass and
nothing is rounded.
"""

from booleket import inner_product, parse_amplitude, superpose

for literals in (["3/5", "4/5i"], ["1/2s2", "1/2s2"], ["1", "1"], ["1/2", "1/2", "1/2", "1/2i"]):
    amps = [parse_amplitude(s) for s in literals]
    s = superpose(len(amps), amps)
    print(literals, "norm^2 =", s.norm_sq(), "normalized:", s.is_normalized())

# The expanded ket agrees with the amplitude list
s = superpose(3, [parse_amplitude("1/2"), parse_amplitude("1/2i"), parse_amplitude("1/2s2")])
print(s.ket(), inner_product(s.ket(), s.ket()))
