"""Walk through the counterexample catalog.

Each catalog entry is a tiny hom-monoid with zero, written in the
shorthand "only nonzero products and twist values are listed".  Loading
one and computing its type profile shows exactly which implications
between twisted associativity types it refutes.
"""

from homlab import counterexample_fixtures, type_profile, verify_fixture

for fixture in counterexample_fixtures():
    magma = fixture.magma()
    profile = type_profile(magma).names("assoc")
    report = verify_fixture(fixture)
    print(f"#{fixture.num:<2} {fixture.claim}")
    print(f"    relations: {fixture.relations or '(none)'}")
    print(f"    satisfies: {', '.join(sorted(profile))}")
    print(f"    verdict:   {'claims confirmed' if report.passed else report.mismatches}")

# A closer look at one structure: the four-element carrier refuting
# "I3 implies I1".
fixture4 = counterexample_fixtures()[3]
print("\nfull table of catalog entry 4:")
print(fixture4.magma().describe())
