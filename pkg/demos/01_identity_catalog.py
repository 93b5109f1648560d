"""Tour of the identity language.

Every twisted identity in the catalog is an ordinary term equation (the
associative family) or a cyclic-sum-equals-zero statement (the bracket
family).  This script prints the whole catalog, parses a few identities
from text, and shows the twist/id exchange that pairs the first family
with the second.
"""

from homlab import (
    ASSOC_TAGS,
    LIE_TAGS,
    NotSApplicable,
    TypeTag,
    builtin,
    parse_identity,
    render_identity,
    s_transform,
)

print("The ten twisted associativity laws:")
for tag in ASSOC_TAGS:
    print(f"  {tag.name:<5} {render_identity(builtin(tag))}")

print("\nThe ten twisted Jacobi laws:")
for tag in LIE_TAGS:
    print(f"  {tag.name:<5} {render_identity(builtin(tag))}")

# Parsing is strict: products carry no precedence, so every product must
# be grouped (one ungrouped product is allowed at the top of a side and
# inside a(...), both self-delimiting).
ident = parse_identity("a(x)*(y*z) = (x*y)*a(z)")
assert ident == builtin(TypeTag("assoc", "I1"))
print("\nparsed back the first associative law from plain text")

# The exchange alpha <-> id carries I-family laws to II-family laws and
# is an involution where defined.
for i in "123":
    first = builtin(TypeTag("lie", "I" + i))
    image = s_transform(first)
    target = builtin(TypeTag("lie", "II" + i))
    assert (image.lhs, image.rhs) == (target.lhs, target.rhs)
    print(f"S(lie I{i})  = lie II{i}:  {render_identity(image)}")

# It refuses identities where the twist wraps a whole product.
try:
    s_transform(builtin(TypeTag("lie", "III")))
except NotSApplicable as exc:
    print(f"\nS(lie III) is undefined, as it must be: {exc}")
