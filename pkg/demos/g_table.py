"""Reproduce the minimal-order table for irreducible degrees 2 through 9.

For each degree n the solver compares every candidate construction it
knows, picks the smallest order, and confirms the winner by computing the
full character-degree multiset of an explicit realization.  Degrees 6 and 8
have no prime-power structure, so they come from the fixed witness catalog
instead of a parametric family.
"""

from chardeg import character_degrees, g_report, realize, spec_text


def main():
    print(f"{'n':>3} {'g(n)':>6} {'case':>8}  witness and its degree multiset")
    for n in range(2, 10):
        report = g_report(n)
        spec = report.witness_specs[0]
        multiset = character_degrees(realize(spec))
        print(
            f"{n:>3} {report.min_order:>6} {report.case_label:>8}  "
            f"{spec_text(spec)}  {sorted(multiset.degrees)}"
        )
        for note in report.anomalies:
            print(f"{'':>21}note: {note}")


if __name__ == "__main__":
    main()
