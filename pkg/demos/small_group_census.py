"""Enumerate every group of order up to 12 and inspect its degrees.

The enumerator fills a Cayley table cell by cell with associativity
propagated as it goes, then reduces the survivors up to isomorphism.  The
resulting census is an independent check on the rest of the library: the
catalog's small groups must each land on exactly one class, and each class
carries its own character-degree multiset computed from the bare table.
"""

from chardeg import character_degrees, enumerate_groups, table_to_realization


def main():
    total = 0
    for n in range(1, 13):
        tables = enumerate_groups(n)
        total += len(tables)
        print(f"order {n:>2}: {len(tables)} group(s)")
        for i, t in enumerate(tables):
            multiset = character_degrees(table_to_realization(t))
            orders = sorted(set(t.element_orders()))
            abelian = "abelian" if len(multiset.degrees) == n else "nonabelian"
            print(
                f"   class {i}: element orders from {orders}, "
                f"degrees {sorted(multiset.degrees)} ({abelian})"
            )
    print(f"\n{total} isomorphism classes in total for orders 1..12")


if __name__ == "__main__":
    main()
