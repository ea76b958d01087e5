#pragma once

#include <string>
#include <vector>

#include "rootlab/involutions.hpp"

namespace rootlab {

enum class RootKind { real, imaginary };

struct RootSet {
    RootKind kind = RootKind::real;
    // Canonical order: positive members lexicographically, each followed by
    // its negative.
    std::vector<Root> members;
    std::vector<Root> positive_members() const;
};

// {a : inv(a) = a}; the involution must have passed validation.
RootSet real_roots(const RootSystem& rs, const Involution& inv);

// {a : inv(a) = -a}.
RootSet imaginary_roots(const RootSystem& rs, const Involution& inv);

// Closed-form real-root families per type label; the all-real types return
// every root, l = 0 returns the empty set.
RootSet closed_form_real_roots(const std::string& label, int r, int l);

// True for the labels whose real set is all restricted roots.
bool all_real_label(const std::string& label);

struct TableSelection {
    std::string label;
    int r = 0;
    int l = 0;
};

// Deterministic Table-1 style document over the given rows.
// Formats: "text" (aligned columns), "json", "latex" (tabular fragment).
std::string emit_table(const std::vector<TableSelection>& rows,
                       const std::string& format);

// Root-set renderers shared with the CLI: "±(a1+a2), ±(...)" text form,
// "\pm(\alpha_{1}+...)" latex form, "(none)" when empty.
std::string rootset_text(const RootSet& s);
std::string rootset_latex(const RootSet& s);

} // namespace rootlab
