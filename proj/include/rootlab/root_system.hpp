#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "rootlab/rational.hpp"

namespace rootlab {

// Roots are integer coefficient vectors over the fixed fundamental system
// a1..ar (Bourbaki numbering); every root is all-nonnegative or
// all-nonpositive in these coordinates.
using Root = std::vector<int>;

struct RootHash {
    size_t operator()(const Root& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v)
            h = (h ^ std::hash<int>()(x)) * 1099511628211ull;
        return h;
    }
};

struct Component {
    std::string family; // A, B, C, D, BC, E, F, G
    int rank = 0;
};

struct Descriptor {
    std::vector<Component> components;
    int total_rank() const;
};

// "A3", "BC2", "E6", "A1+A1", "B5+G2" ...
Descriptor parse_descriptor(const std::string& text);
std::string descriptor_str(const Descriptor& d);

// Reduced or non-reduced root system generated from Bourbaki simple roots,
// long roots normalized to squared length 2 per reduced irreducible
// component; BC components carry the B Gram with doubled short roots added.
class RootSystem {
public:
    static RootSystem build(const Descriptor& d);
    static RootSystem build(const std::string& descriptor_text);

    const Descriptor& descriptor() const { return desc_; }
    int rank() const { return rank_; }
    const Mat& gram() const { return gram_; }

    // Canonical order: positive roots in lexicographic order, each
    // immediately followed by its negative.
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positives() const { return positives_; }

    // Component index (0-based) of simple root i (0-based); the half-open
    // coordinate range of component c.
    int component_of(int i) const { return comp_of_[i]; }
    std::pair<int, int> component_range(int c) const { return ranges_[c]; }
    int component_count() const { return (int)ranges_.size(); }

    bool is_root(const Root& v) const;
    bool is_root_vec(const Vec& v) const; // integral and a root

    Rat inner(const Vec& a, const Vec& b) const;
    Rat inner(const Root& a, const Root& b) const;
    Rat inner(const Root& a, const Vec& b) const;

    // v - (2<v,beta>/<beta,beta>) beta; beta must be a root.
    Vec reflect(const Root& beta, const Vec& v) const;
    Root reflect(const Root& beta, const Root& v) const;

    // Longest element of the Weyl group generated by the simple reflections
    // indexed by `subset` (0-based), as a matrix on simple-root coordinates.
    // Computed by greedy descent; asserts w0^2 = id and that w0 sends every
    // subset-positive root to a negative one.
    Mat longest_weyl(const std::vector<int>& subset) const;

    Root simple(int i) const;

    // Gram matrix with component c rescaled by factors[c]; used for the
    // normalization-invariance checks.
    Mat rescaled_gram(const std::vector<Rat>& factors) const;

private:
    Descriptor desc_;
    int rank_ = 0;
    Mat gram_;
    std::vector<Root> roots_;
    std::vector<Root> positives_;
    std::vector<int> comp_of_;
    std::vector<std::pair<int, int>> ranges_;
    std::unordered_set<Root, RootHash> root_set_;
};

// True when the first nonzero coefficient is positive (roots are
// sign-definite, so this matches "all coefficients >= 0").
bool root_is_positive(const Root& v);
bool vec_is_positive(const Vec& v);

// Pretty printer matching the tables' typography: "a1+2a2+3a3", "-a1-a2",
// "0" for the zero vector.
std::string root_str(const Root& v);
std::string vec_str(const Vec& v);

// LaTeX variant: "\alpha_{1}+2\alpha_{2}".
std::string root_latex(const Root& v);

// Parses "a1+2a2", "-a1-a2", "2a3"; rank checked by the caller.
Root parse_root(const std::string& text, int rank);

} // namespace rootlab
