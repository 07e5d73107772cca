"""Regenerates tests/oracle/reference_values.hpp from mpmath (50 digits)."""

from pathlib import Path

from mpmath import mp, mpf, pcfu, sqrt, gamma, quad

mp.dps = 50

ORDERS = [0.6, 1, 1.6, 2, 5, 20, 100]
ARGS = [-50, -30, -10, -2.5, -1, 0, 0.5, 2, 5, 30, 50]
ZERO_ORDERS = [0.6, 1, 2.5, 7, 40]
U_RATIOS = [(2, 0, 1), (2, -1, 1), (2, 1, 3), (0.75, -4, 2), (7, -3, 0.5)]


def phi(n, x):
    return pcfu(n - 1, x) / pcfu(n, x)


def w(n, x):
    return (n + mpf(1) / 2) * phi(n, x) / phi(n + 1, x)


def lit(v):
    return mp.nstr(v, 25, min_fixed=-5, max_fixed=5)


def main():
    lines = [
        "#pragma once",
        "",
        "// Generated by gen_reference.py (mpmath, 50 digits). Do not edit.",
        "",
        "namespace pcf::oracle {",
        "",
        "struct RatioSample {",
        "  double n;",
        "  double x;",
        "  double phi;",
        "  double w;",
        "};",
        "",
        "inline constexpr RatioSample kRatios[] = {",
    ]
    for n in ORDERS:
        for x in ARGS:
            nn, xx = mpf(n), mpf(x)
            lines.append(f"    {{{n}, {x}, {lit(phi(nn, xx))}, {lit(w(nn, xx))}}},")
    lines += ["};", "", "struct ZeroSample {", "  double n;", "  double phi;", "};", "",
              "inline constexpr ZeroSample kAtZero[] = {"]
    for n in ZERO_ORDERS:
        nn = mpf(n)
        value = sqrt(2) * gamma(nn / 2 + mpf(3) / 4) / gamma(nn / 2 + mpf(1) / 4)
        assert abs(value / phi(nn, 0) - 1) < mpf(10) ** -30
        lines.append(f"    {{{n}, {lit(value)}}},")
    lines.append("};")
    lines += ["", "struct URatioSample {", "  double n;", "  double y;", "  double z;",
              "  double ratio;", "};", "", "// U(n, z) / U(n, y)",
              "inline constexpr URatioSample kURatios[] = {"]
    for n, y, z in U_RATIOS:
        value = pcfu(n, z) / pcfu(n, y)
        lines.append(f"    {{{n}, {y}, {z}, {lit(value)}}},")
    lines.append("};")
    lines += ["", "}  // namespace pcf::oracle", ""]
    out = Path(__file__).with_name("reference_values.hpp")
    out.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
