#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootlab/catalog.hpp"
#include "rootlab/involutions.hpp"
#include "rootlab/json_io.hpp"

namespace rootlab {

// Ambient root system with two commuting involutions on the root lattice:
// sigma for the symmetric pair and theta for the Cartan involution.  Both
// act on simple-root coordinates; diagram-sourced involutions are the
// negated dual (the diagram machinery produces the +1-fixed map).
struct AmbientData {
    RootSystem system;
    Involution sigma;
    Involution theta;
    std::optional<SatakeDiagram> sigma_diagram;
    std::optional<SatakeDiagram> theta_diagram;
};

// Parses {"sigma_system": {...}, "sigma_matrix"|"sigma_diagram": ...,
// "theta_matrix"|"theta_diagram": ...}.  Diagram references carry
// {"label","r","l","role"}.  Checks: squares to identity, commuting,
// root-permuting; throws InputError on any violation.
AmbientData load_ambient(const ordered_json& doc);
AmbientData load_ambient_file(const std::string& path);

// Outcome of the restriction steps.  `restricted` lists the distinct
// nonzero restrictions in canonical order (positives lexicographically,
// each followed by its negative); fibers map each of them to the ambient
// roots restricting onto it.
struct RestrictionResult {
    std::vector<Vec> restricted;
    std::map<Vec, std::vector<Root>> fibers;
    int rank = 0;
    bool degenerate = false; // every ambient root restricted to zero

    // Filled by run_recipe:
    std::vector<Vec> fundamental;            // fundamental restricted roots
    std::set<int> black;                     // indices into fundamental
    std::vector<std::pair<int, int>> arrows; // indices into fundamental, i < j
    int split_rank = 0;
    std::vector<Catalog::Instantiated> candidates; // all matching (label,r,l)
    std::optional<SatakeDiagram> diagram;          // primary recognized type

    int multiplicity(const Vec& lambda) const;
};

// Restriction only: lambda_a = (a - sigma(a))/2 over all ambient roots,
// nonzero values collected with fibers; verifies reflection closure of the
// restricted set under the ambient form (StructuralError otherwise);
// rank = dimension of the span.
RestrictionResult restrict_ambient(const AmbientData& amb);

// Full run: fundamental restricted roots, black nodes (step-3 quantity
// (a - sigma a - theta a + sigma theta a)/4 vanishes), arrows (equal
// nonzero step-4 values), split rank, shape recognition, and the standard
// diagram of the recognized type.  Throws InputError when the restriction
// is degenerate and StructuralError on representative-dependent step
// values, arrow groups larger than two, or unrecognizable shapes.
RestrictionResult run_recipe(const AmbientData& amb);

// Serialized form: the diagram object plus rank, split_rank and the fiber
// multiplicities keyed by restricted-root string.
ordered_json restriction_to_json(const RestrictionResult& res);

// True iff the result's recognized (label, rank, split rank) equals the
// catalog row instantiated at params; `diff`, when non-null, receives a
// field-level description of any mismatch.  Label comparison accepts any
// recognized candidate whose diagram is isomorphic to the computed one.
bool verify_against_catalog(const Catalog& cat, const RestrictionResult& res,
                            const CatalogEntry& entry, const Bindings& params,
                            std::string* diff = nullptr);

} // namespace rootlab
