"""Derivations printed as worked examples, as ``(multiplicity, d/dx coefficient, d/dy coefficient)``.

Transcribed term by term into the canonical text form of ``multiarr.render``."""

THETA_EXAMPLES = [
    ((3, 5, 2, 2), "1/10 x^5 - 1/6 x^3 y^2", "-1/15 y^5"),
    ((3, 5, 4, 4), "1/280 x^7 - 1/60 x^5 y^2 + 1/24 x^3 y^4", "1/30 x^2 y^5 - 1/210 y^7"),
    ((3, 9, 4, 4), "1/432 x^9 - 1/112 x^7 y^2 + 1/80 x^5 y^4 - 1/144 x^3 y^6", "-1/945 y^9"),
    ((5, 7, 2, 2), "1/42 x^7 - 1/30 x^5 y^2", "-1/105 y^7"),
    ((5, 7, 4, 4), "1/504 x^9 - 1/140 x^7 y^2 + 1/120 x^5 y^4", "1/210 x^2 y^7 - 1/630 y^9"),
    ((5, 11, 4, 4), "1/1584 x^11 - 1/432 x^9 y^2 + 1/336 x^7 y^4 - 1/720 x^5 y^6", "-1/10395 y^11"),
    ((7, 9, 2, 2), "1/270 x^9 - 1/210 x^7 y^2", "-1/945 y^9"),
    ((7, 9, 4, 4), "1/2376 x^11 - 1/756 x^9 y^2 + 1/840 x^7 y^4", "1/1890 x^2 y^9 - 1/4158 y^11"),
    ((7, 13, 4, 4), "1/9360 x^13 - 1/2640 x^11 y^2 + 1/2160 x^9 y^4 - 1/5040 x^7 y^6", "-1/135135 y^13"),
    ((1, 3, 2, 2), "1/6 x^3 - 1/2 x y^2", "-1/3 y^3"),
    ((1, 5, 3, 3), "1/40 x^5 - 1/12 x^3 y^2 + 1/8 x y^4", "1/15 y^5"),
    ((1, 3, 4, 4), "-1/120 x^5 + 1/12 x^3 y^2 + 1/8 x y^4", "1/6 x^2 y^3 + 1/30 y^5"),
    ((1, 7, 4, 4), "1/336 x^7 - 1/80 x^5 y^2 + 1/48 x^3 y^4 - 1/48 x y^6", "-1/105 y^7"),
    ((1, 5, 5, 5), "-1/1680 x^7 + 1/240 x^5 y^2 - 1/48 x^3 y^4 - 1/48 x y^6", "-1/30 x^2 y^5 - 1/210 y^7"),
    ((1, 9, 5, 5), "1/3456 x^9 - 1/672 x^7 y^2 + 1/320 x^5 y^4 - 1/288 x^3 y^6 + 1/384 x y^8", "1/945 y^9"),
    ((1, 3, 6, 6), "1/1680 x^7 - 1/80 x^5 y^2 - 1/16 x^3 y^4 - 1/48 x y^6", "-1/24 x^4 y^3 - 1/20 x^2 y^5 - 1/280 y^7"),
    ((1, 7, 6, 6), "-1/24192 x^9 + 1/3360 x^7 y^2 - 1/960 x^5 y^4 + 1/288 x^3 y^6 + 1/384 x y^8", "1/210 x^2 y^7 + 1/1890 y^9"),
    ((1, 11, 6, 6), "1/42240 x^11 - 1/6912 x^9 y^2 + 1/2688 x^7 y^4 - 1/1920 x^5 y^6 + 1/2304 x^3 y^8 - 1/3840 x y^10", "-1/10395 y^11"),
    ((1, 5, 7, 7), "1/40320 x^9 - 1/3360 x^7 y^2 + 1/320 x^5 y^4 + 1/96 x^3 y^6 + 1/384 x y^8", "1/120 x^4 y^5 + 1/140 x^2 y^7 + 1/2520 y^9"),
]

THETA_PRIME_EXAMPLES = [
    ((2, 2, 3), "-2/3 x^3 - 2 x^2 y", "-2 x y^2 - 2/3 y^3"),
    ((3, 3, 5), "2/15 x^5 + 2/3 x^4 y + 4/3 x^3 y^2", "4/3 x^2 y^3 + 2/3 x y^4 + 2/15 y^5"),
    ((4, 4, 3), "2/5 x^5 + 2/3 x^4 y", "2/3 x y^4 + 2/5 y^5"),
    ((4, 4, 7), "-2/105 x^7 - 2/15 x^6 y - 2/5 x^5 y^2 - 2/3 x^4 y^3", "-2/3 x^3 y^4 - 2/5 x^2 y^5 - 2/15 x y^6 - 2/105 y^7"),
    ((5, 5, 5), "-8/105 x^7 - 4/15 x^6 y - 4/15 x^5 y^2", "-4/15 x^2 y^5 - 4/15 x y^6 - 8/105 y^7"),
    ((5, 5, 9), "2/945 x^9 + 2/105 x^8 y + 8/105 x^7 y^2 + 8/45 x^6 y^3 + 4/15 x^5 y^4", "4/15 x^4 y^5 + 8/45 x^3 y^6 + 8/105 x^2 y^7 + 2/105 x y^8 + 2/945 y^9"),
    ((6, 6, 3), "-4/21 x^7 - 4/15 x^6 y", "-4/15 x y^6 - 4/21 y^7"),
    ((6, 6, 7), "2/189 x^9 + 2/35 x^8 y + 4/35 x^7 y^2 + 4/45 x^6 y^3", "4/45 x^3 y^6 + 4/35 x^2 y^7 + 2/35 x y^8 + 2/189 y^9"),
    ((6, 6, 11), "-2/10395 x^11 - 2/945 x^10 y - 2/189 x^9 y^2 - 2/63 x^8 y^3 - 4/63 x^7 y^4 - 4/45 x^6 y^5", "-4/45 x^5 y^6 - 4/63 x^4 y^7 - 2/63 x^3 y^8 - 2/189 x^2 y^9 - 2/945 x y^10 - 2/10395 y^11"),
    ((7, 7, 5), "2/63 x^9 + 2/21 x^8 y + 8/105 x^7 y^2", "8/105 x^2 y^7 + 2/21 x y^8 + 2/63 y^9"),
]
