"""The u/v coefficient triangles and their closed-form consistency.

The triangles are generated by a standalone rational recursion seeded at
u_1^1 = 0, v_1^1 = 1.  Independently, the same numbers must appear inside
the polynomial families as u_n^k = (n+1) alpha_n^(n+1-2k) and
v_n^k = (n+1) lambda_n^(n+1-2k) — the recursion never touches the
polynomials, so exact agreement is a strong joint test of both.
"""

from acpolys import build_by_recurrence, build_uv, check_uv_consistency, row_width

N = 10

uv = build_uv(N)

print(f"v triangle (rows n = 1..{N}):")
for n in range(1, N + 1):
    row = "  ".join(str(uv.v[(n, k)]) for k in range(1, row_width(n) + 1))
    print(f"  n={n:<3d} {row}")

print(f"\nu triangle (rows n = 1..{N}):")
for n in range(1, N + 1):
    row = "  ".join(str(uv.u[(n, k)]) for k in range(1, row_width(n) + 1))
    print(f"  n={n:<3d} {row}")

family = build_by_recurrence(N)
checks = check_uv_consistency(uv, family)
passed = sum(c.status == "pass" for c in checks)
print(f"\nconsistency with the polynomial coefficient tables: "
      f"{passed}/{len(checks)} exact checks pass")
