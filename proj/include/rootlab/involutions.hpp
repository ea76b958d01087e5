#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootlab/root_system.hpp"

namespace rootlab {

// Satake diagram: Dynkin diagram of rs with a black node subset and an
// order-2 arrow pairing on white nodes.  Node indices are 0-based
// internally and 1-based in every serialized or printed form.
struct SatakeDiagram {
    RootSystem rs;
    std::string label;
    int r = 0; // rank = number of simple roots
    int l = 0; // split rank = number of arrow orbits on white nodes
    std::set<int> black;
    std::vector<std::pair<int, int>> arrows; // (i, j) with i < j, both white

    bool is_black(int i) const { return black.count(i) > 0; }
    std::vector<int> whites() const;
    // The Satake involution p on white nodes (identity off arrows).
    int p(int i) const;
};

// Diagram for a Table-3 type label at parameters (r, l).  Exceptional
// labels carry fixed (r, l); doubled "X+X" labels have r = 2l and pair the
// two copies node by node.  Inadmissible parameters raise InputError naming
// the violated constraint.
SatakeDiagram standard_diagram(const std::string& label, int r, int l);

// True when the label names a type whose parameters are fixed (exceptional
// types and their doubles); fills (r, l) accordingly.
bool fixed_parameters(const std::string& label, int* r, int* l);

// Every label standard_diagram accepts, in the canonical preference order
// used when several labels realize the same diagram (e.g. rank-1 BI/BCI).
const std::vector<std::string>& standard_labels();

// The induced involution on the root lattice (the +1-eigenroot map; the
// geometric Cartan involution is its negation).
struct Involution {
    Mat matrix;
    bool validated = false;
    bool from_search = false; // closed form failed and search took over
};

struct ValidationReport {
    bool involutive = false;
    bool isometry = false;
    bool permutes_roots = false;
    bool neg_on_black = false;
    bool white_congruence = false;
    bool ok() const {
        return involutive && isometry && permutes_roots && neg_on_black &&
               white_congruence;
    }
    std::string summary() const;
};

// Closed form: w0(black) composed with the extension of p to black nodes by
// the opposition involution of the black subdiagram.  Falls back to
// involution_by_search when the composite fails validation.
Involution induced_involution(const SatakeDiagram& d);

// Constraint search: images of white simple roots are roots congruent to
// the arrow partner modulo nonnegative integer combinations of black simple
// roots, with the full map involutive, isometric and root-permuting.
// Throws StructuralError unless exactly one solution exists.
Involution involution_by_search(const SatakeDiagram& d);

ValidationReport validate(const SatakeDiagram& d, const Mat& matrix);

// One-line-per-row ASCII rendering with filled/open circles and arrows.
std::string render_ascii(const SatakeDiagram& d);

} // namespace rootlab
