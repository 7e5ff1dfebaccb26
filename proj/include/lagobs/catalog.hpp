#ifndef LAGOBS_CATALOG_HPP
#define LAGOBS_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lagobs/homology.hpp"

namespace lagobs {

/**
 * Isoparametric hypersurface N^n in S^{n+1} with g distinct principal
 * curvatures of multiplicities m1 <= m2, n = g(m1+m2)/2.
 *
 * g = 1 is encoded as m1 = m2 = n (great sphere) and g = 2 as (k, n-k), so
 * the minimal Maslov number is 2n/g on every branch.
 */
struct IsoparametricFamily {
    int g = 1;
    int m1 = 1;
    int m2 = 1;
    int n = 1;

    auto operator<=>(const IsoparametricFamily&) const = default;
};

std::string to_string(const IsoparametricFamily& f);

/// A fact taken from the literature rather than computed here.
struct CitedFact {
    std::string id;
    std::string statement;
    std::string source;

    bool operator==(const CitedFact&) const = default;
};

struct GaussImageHomology {
    BettiProfile profile;
    bool cited = false;
};

/// Catalog record for the Gauss image L = N / Z_g in the hyperquadric Q_n(C).
struct GaussImageData {
    IsoparametricFamily family;
    int maslov = 0;
    int nu = 0;
    bool orientable = false;
    int covering_degree = 0;
    std::optional<BettiProfile> betti_N;
    std::optional<GaussImageHomology> betti_L;
    std::vector<CitedFact> cited;
};

IsoparametricFamily validate_family(int g, int m1, int m2);

/// N_L = 2n/g.
int minimal_maslov(const IsoparametricFamily& f);
bool orientable(const IsoparametricFamily& f);
/// nu = floor((n+1)/N_L); the spectral sequence is stationary from page nu+1.
int collapse_step(const IsoparametricFamily& f);

/// Z2 homology of the hypersurface N itself (partial for g = 6, m = 2).
BettiProfile munzner_betti_N(const IsoparametricFamily& f);

/// Z2 homology of the Gauss image for g = 3.
GaussImageHomology gauss_image_betti_g3(const IsoparametricFamily& f);

std::vector<CitedFact> cited_facts(const IsoparametricFamily& f);

GaussImageData gauss_image_data(const IsoparametricFamily& f);

/// All valid families with m1 + m2 <= bound, sorted by (g, m1, m2).
std::vector<IsoparametricFamily> enumerate_families(int bound);

}  // namespace lagobs

#endif  // LAGOBS_CATALOG_HPP
