#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rootlab/classify.hpp"
#include "rootlab/involutions.hpp"

namespace rootlab {

// A point X in the positive-definite model of the Cartan subspace,
// identified with its metric dual (same coordinates in the simple-root
// basis).
struct BasePoint {
    Vec coords;
};

// Validates coords != 0 and B(X,X) > 0 against the given Gram form.
BasePoint make_base_point(const RootSystem& rs, const Vec& coords);
BasePoint make_base_point(const Mat& gram, const Vec& coords);

// A_alpha: the dual of a root alpha has coordinates equal to alpha's
// coefficients.
BasePoint root_vector(const RootSystem& rs, const Root& alpha);

// Positive-root multiplicities, default 1 everywhere.
using MultiplicityMap = std::function<int(const Root&)>;
MultiplicityMap unit_multiplicity();

struct AustereReport {
    Vec x;
    bool verdict = false;
    // Canonically sorted multiset of projected direction vectors.
    std::vector<std::pair<Vec, int>> multiset;
    // verdict true: a complete negation pairing as index pairs [i, j] into
    // multiset (the zero vector self-pairs).  verdict false: the first
    // multiset element whose negation count mismatches.
    std::vector<std::pair<int, int>> pairing;
    Vec failing;
};

// The criterion multiset {(-1/alpha(X)) * (alpha - (alpha(X)/B(X,X)) X) :
// alpha positive, alpha(X) != 0}, counted with multiplicity.
std::vector<std::pair<Vec, int>> austere_multiset(const RootSystem& rs,
                                                  const BasePoint& x,
                                                  const MultiplicityMap& m);

AustereReport is_austere(const RootSystem& rs, const BasePoint& x,
                         const MultiplicityMap& m);

// Same computations against an explicit Gram form (used by the
// normalization-invariance checks, where per-component rescalings of G must
// not change the verdict).
std::vector<std::pair<Vec, int>> austere_multiset_with_gram(
    const Mat& gram, const std::vector<Root>& positives, const BasePoint& x,
    const MultiplicityMap& m);
AustereReport is_austere_with_gram(const Mat& gram,
                                   const std::vector<Root>& positives,
                                   const BasePoint& x, const MultiplicityMap& m);

// Shape-operator spectrum {-alpha(xi)/alpha(X) : alpha(X) != 0} with
// multiplicity; requires B(xi, X) = 0.
std::vector<Rat> shape_spectrum(const RootSystem& rs, const BasePoint& x,
                                const Vec& xi, const MultiplicityMap& m);

struct SurveyEntry {
    Root root;
    bool verdict = false;
};

struct SurveyReport {
    // Every real root, each with its criterion verdict (pseudo-sphere
    // orbits); every imaginary root (pseudo-hyperbolic candidates).
    std::vector<SurveyEntry> sphere;
    std::vector<Root> hyperbolic;
};

SurveyReport austere_orbit_survey(const SatakeDiagram& d, const Involution& inv);

} // namespace rootlab
