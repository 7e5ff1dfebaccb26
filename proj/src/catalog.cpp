#include "lagobs/catalog.hpp"

#include <algorithm>
#include <map>

namespace lagobs {

std::string to_string(const IsoparametricFamily& f) {
    return "(" + std::to_string(f.g) + "," + std::to_string(f.m1) + "," + std::to_string(f.m2) + ")";
}

IsoparametricFamily validate_family(int g, int m1, int m2) {
    const std::string tag = "(g, m1, m2) = (" + std::to_string(g) + ", " + std::to_string(m1) + ", " +
                            std::to_string(m2) + "): ";
    if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
        throw DomainError(tag + "g must be 1, 2, 3, 4 or 6");
    if (m1 < 1 || m2 < 1) throw DomainError(tag + "multiplicities must be positive");
    if (m1 > m2) throw DomainError(tag + "multiplicities must be ordered m1 <= m2");
    if (g % 2 == 1 && m1 != m2) throw DomainError(tag + "odd g forces m1 = m2");
    if (g == 3 && m1 != 1 && m1 != 2 && m1 != 4 && m1 != 8)
        throw DomainError(tag + "g = 3 requires m in {1, 2, 4, 8}");
    if (g == 6 && (m1 != m2 || m1 > 2)) throw DomainError(tag + "g = 6 requires m1 = m2 in {1, 2}");

    const int twice_n = g * (m1 + m2);
    if (twice_n % 2 != 0) throw DomainError(tag + "n = g(m1+m2)/2 is not an integer");
    return IsoparametricFamily{g, m1, m2, twice_n / 2};
}

int minimal_maslov(const IsoparametricFamily& f) {
    return f.g % 2 == 0 ? f.m1 + f.m2 : 2 * f.m1;
}

bool orientable(const IsoparametricFamily& f) {
    return (2 * f.n / f.g) % 2 == 0;
}

int collapse_step(const IsoparametricFamily& f) {
    return (f.n + 1) / minimal_maslov(f);
}

namespace {

// Coinciding degrees add.
BettiProfile accumulate(int n, const std::vector<int>& degrees) {
    std::map<int, std::int64_t> dims;
    for (int d : degrees) ++dims[d];
    return make_profile(n, {dims.begin(), dims.end()});
}

BettiProfile sphere(int n) {
    if (n == 0) return make_profile(0, {{0, 2}});
    return make_profile(n, {{0, 1}, {n, 1}});
}

}  // namespace

BettiProfile munzner_betti_N(const IsoparametricFamily& f) {
    const int n = f.n, a = f.m1, b = f.m2;
    switch (f.g) {
        case 1:
            return sphere(n);
        case 2:
            return accumulate(n, {0, a, b, n});
        case 3:
            return accumulate(n, {0, a, a, 2 * a, 2 * a, n});
        case 4:
            return accumulate(n, {0, a, b, a + b, a + b, 2 * a + b, a + 2 * b, n});
        case 6:
            if (a == 2) return make_partial_profile(n, {{0, 1}, {3, 0}, {6, 2}, {9, 0}, {12, 1}});
            throw DomainError("no Z2 homology table available for g = 6, m = 1");
        default:
            throw DomainError("invalid family " + to_string(f));
    }
}

GaussImageHomology gauss_image_betti_g3(const IsoparametricFamily& f) {
    if (f.g != 3) throw DomainError("Gauss image homology is only derived for g = 3, got " + to_string(f));
    const int m = f.m1, n = f.n;

    if (m % 2 == 1) return {sphere(n), true};

    // Z3-transfer: H_k(L) embeds in H_k(N), so only degrees 0, m, 2m, n can
    // survive, with dim H_m(L) = dim H_2m(L) =: l by duality and H_0 = H_n = 1.
    const BettiProfile cover = munzner_betti_N(f);
    const std::int64_t chi_L = euler_char(cover) / f.g;
    // chi(L) = 1 + l + l + 1 for even m.
    const std::int64_t twice_l = chi_L - 2;
    if (twice_l < 0 || twice_l % 2 != 0 || twice_l / 2 > cover.at(m).value())
        throw DomainError("Euler characteristic " + std::to_string(chi_L) + " inconsistent with transfer bound");
    const std::int64_t l = twice_l / 2;

    std::vector<BettiProfile::Entry> entries{{0, 1}, {n, 1}};
    if (l > 0) {
        entries.emplace_back(m, l);
        entries.emplace_back(2 * m, l);
    }
    return {make_profile(n, entries), false};
}

std::vector<CitedFact> cited_facts(const IsoparametricFamily& f) {
    if (f.g == 1 || f.g == 2)
        return {{"real-form-wide",
                 "the Gauss image is a real form of Q_n(C) (Lagrangian sphere or real quadric), hence wide",
                 "Oh: real forms of compact irreducible Hermitian symmetric spaces are wide"}};
    if (f.g == 3)
        return {{"h1-z3", "H_1(L;Z) = Z_3 for the Gauss image of a Cartan hypersurface",
                 "homogeneous-space computation of the abelianised fundamental group (Ma-Ohnita presentation)"}};
    return {};
}

GaussImageData gauss_image_data(const IsoparametricFamily& f) {
    GaussImageData d;
    d.family = f;
    d.maslov = minimal_maslov(f);
    d.nu = collapse_step(f);
    d.orientable = orientable(f);
    d.covering_degree = f.g;
    if (!(f.g == 6 && f.m1 == 1)) d.betti_N = munzner_betti_N(f);
    if (f.g == 3) d.betti_L = gauss_image_betti_g3(f);
    d.cited = cited_facts(f);
    return d;
}

std::vector<IsoparametricFamily> enumerate_families(int bound) {
    if (bound < 2) throw DomainError("multiplicity bound must be at least 2");
    std::vector<IsoparametricFamily> out;
    for (int g : {1, 2, 3, 4, 6})
        for (int m1 = 1; 2 * m1 <= bound; ++m1)
            for (int m2 = m1; m1 + m2 <= bound; ++m2) {
                try {
                    out.push_back(validate_family(g, m1, m2));
                } catch (const DomainError&) {
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lagobs
