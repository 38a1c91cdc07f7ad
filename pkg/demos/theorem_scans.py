"""Scan prime ranges for the exceptional minimal-witness cases.

For degree p the candidates are the simple group PSL2(p) and a Frobenius
group (C_q)^m x| C_p of order p * q^m with q^m the least prime power
congruent to 1 mod p.  The Frobenius order wins for every prime except
p = 19, where PSL2(19) of order 3420 beats 19 * 191 = 3629.

For degree p^2 a third construction joins: the direct product of two
minimal degree-p witnesses (degrees multiply).  Here the extraspecial group
of order p^5 wins only at p = 19 again, a coincidence the two scans make
plain.  The final scan records that the least prime q = 1 mod p stayed
below p^2 throughout, the inequality the minimal orders hinge on.
"""

from chardeg import kanold_scan, scan_theorem_a, scan_theorem_b


def main():
    scan_a = scan_theorem_a(200)
    print("degree p, primes up to 200:")
    for row in scan_a.rows:
        print(f"  p={row.p:<4} case ({row.case_label})  g(p) = {row.min_order}")
    print(f"simple-group wins: {list(scan_a.case_a)}")

    scan_b = scan_theorem_b(71)
    print("\ndegree p^2, primes up to 71:")
    for row in scan_b.rows:
        print(f"  p={row.p:<4} case ({row.case_label})  g(p^2) = {row.min_order}")
    print(f"extraspecial wins: {list(scan_b.case_a)}")

    rows = kanold_scan(200)
    print("\nleast prime q = 1 (mod p) versus p^2:")
    for row in rows:
        margin = "q < p^2" if row.holds else "q >= p^2  (!)"
        print(f"  p={row.p:<4} q={row.q:<6} {margin}")
    print(
        "holds for all scanned primes"
        if all(r.holds for r in rows)
        else "violated in range"
    )


if __name__ == "__main__":
    main()
