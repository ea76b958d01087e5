#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rootlab/errors.hpp"

namespace rootlab {

// Mini expression language for the table's rank/split-rank formulas:
//   EXPR := term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := INT | IDENT | 'min(' EXPR ',' EXPR ')' | '[' EXPR '/2]'
//           | '(' EXPR ')'
//   COND := EXPR ('='|'!='|'>'|'<') EXPR | IDENT 'even' | IDENT 'odd'
//         | 'true'
struct Expr {
    enum class Kind { integer, param, add, sub, mul, min, half };
    Kind kind = Kind::integer;
    long long value = 0; // integer
    std::string name;    // param
    std::shared_ptr<const Expr> a, b;
};
using ExprPtr = std::shared_ptr<const Expr>;

struct Cond {
    enum class Kind { cmp, even, odd, always };
    Kind kind = Kind::always;
    std::string op; // "=", "!=", ">", "<"
    ExprPtr a, b;   // cmp
    std::string var; // even / odd
};

using Bindings = std::map<std::string, long long>;

ExprPtr parse_formula(const std::string& src);   // throws InputError with offset
Cond parse_condition(const std::string& src);    // likewise

std::string print_formula(const ExprPtr& e);
std::string print_condition(const Cond& c);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool cond_equal(const Cond& a, const Cond& b);

long long eval_formula(const ExprPtr& e, const Bindings& env);
bool eval_condition(const Cond& c, const Bindings& env);

// One table row: a symmetric pair mapped to its diagram type with rank and
// split-rank formulas and (for conditional siblings) a case condition.
struct CatalogEntry {
    std::string section;            // table block tag
    std::string pair_g, pair_h;
    std::string label;
    std::string rank_src, srank_src, cond_src;
    ExprPtr rank, srank;
    Cond cond;
    std::vector<std::string> params;
    std::vector<Cond> domain;       // parameter-validity side conditions
    bool flagged = false;           // transcribed verbatim, fails admissibility

    std::string pair_str() const { return "(" + pair_g + ", " + pair_h + ")"; }
};

class Catalog {
public:
    // Parses the shipped JSON data (top-level array of row objects).
    static Catalog load(const std::string& json_text);
    // The copy embedded at build time from the shipped data file.
    static const Catalog& shipped();

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    // Case-insensitive substring match on the "(g, h)" pair string.
    std::vector<const CatalogEntry*> lookup(const std::string& pattern) const;

    // All rows sharing the exact pair of the given entry.
    std::vector<const CatalogEntry*> siblings(const CatalogEntry& e) const;

    // Evaluates the unique sibling whose condition holds; DataError when no
    // condition or several conditions hold.
    struct Instantiated {
        std::string label;
        long long r = 0;
        long long l = 0;
    };
    Instantiated instantiate(const CatalogEntry& e, const Bindings& env) const;

private:
    std::vector<CatalogEntry> entries_;
};

// Admissibility-closure sweep over the whole catalog: every non-flagged row
// must admit at least one non-degenerate sample and zero admissibility
// failures over the sampled parameter grid; every flagged row must fail at
// least once.  Returns a list of violations (empty = pass).
std::vector<std::string> catalog_closure_violations(const Catalog& cat);

} // namespace rootlab
