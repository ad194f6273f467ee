"""
Rigidity, contractibility, and deformation chains
=================================================

"""

from digitop import (
    are_homotopic,
    builders,
    constant,
    homotopy_class,
    identity,
    is_contractible,
    is_rigid_image,
)

# a two-rail ladder with four rungs; no self-map can move at all
fig = builders.figure1()
print("figure1 rigid:", is_rigid_image(fig))
print("figure1 contractible:", is_contractible(fig))

# an interval deforms to a point; the chain below shows each one-step stage
span = builders.interval(0, 3)
answer = are_homotopic(identity(span), constant(span, span, 0))
print("interval id ~ const:", answer.verdict)
for stage in answer.witness.chain:
    print("  ", stage.assignment)

# small cycles are contractible, longer ones are not
for n in range(3, 8):
    print(f"C_{n} contractible:", is_contractible(builders.cycle(n)))

# the homotopy class of the identity shrinks as the cycle grows
for n in (4, 5, 6):
    cls = homotopy_class(identity(builders.cycle(n)))
    print(f"class(id) on C_{n}:", len(cls.members), "maps")
