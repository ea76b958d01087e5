#include "rootlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rootlab/embedded_data.hpp"
#include "rootlab/involutions.hpp"
#include "rootlab/json_io.hpp"

namespace rootlab {

namespace {

ExprPtr mk(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

[[noreturn]] void syntax_error(size_t offset, const std::string& what) {
    throw InputError("syntax error at offset " + std::to_string(offset) + ": " + what);
}

// Recursive-descent parser over the raw source; whitespace is skipped but
// offsets refer to the original string.
class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr parse_expr_all() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != src_.size())
            syntax_error(pos_, "trailing input");
        return e;
    }

    Cond parse_cond_all() {
        skip_ws();
        if (src_.compare(pos_, 4, "true") == 0 && !std::isalnum(peek_at(pos_ + 4))) {
            pos_ += 4;
            skip_ws();
            if (pos_ != src_.size())
                syntax_error(pos_, "trailing input");
            Cond c;
            c.kind = Cond::Kind::always;
            return c;
        }
        ExprPtr lhs = expr();
        skip_ws();
        // IDENT even / IDENT odd
        if (src_.compare(pos_, 4, "even") == 0 || src_.compare(pos_, 3, "odd") == 0) {
            bool even = src_[pos_] == 'e';
            if (lhs->kind != Expr::Kind::param)
                syntax_error(pos_, "parity test needs a parameter on the left");
            pos_ += even ? 4 : 3;
            skip_ws();
            if (pos_ != src_.size())
                syntax_error(pos_, "trailing input");
            Cond c;
            c.kind = even ? Cond::Kind::even : Cond::Kind::odd;
            c.var = lhs->name;
            return c;
        }
        std::string op;
        if (src_.compare(pos_, 2, "!=") == 0)
            op = "!=";
        else if (peek() == '=' || peek() == '>' || peek() == '<')
            op = std::string(1, peek());
        else
            syntax_error(pos_, "expected a comparison operator");
        pos_ += op.size();
        ExprPtr rhs = expr();
        skip_ws();
        if (pos_ != src_.size())
            syntax_error(pos_, "trailing input");
        Cond c;
        c.kind = Cond::Kind::cmp;
        c.op = op;
        c.a = lhs;
        c.b = rhs;
        return c;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;

    char peek_at(size_t i) const { return i < src_.size() ? src_[i] : '\0'; }
    char peek() const { return peek_at(pos_); }
    void skip_ws() {
        while (pos_ < src_.size() && src_[pos_] == ' ')
            ++pos_;
    }

    ExprPtr expr() {
        ExprPtr v = term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                return v;
            ++pos_;
            ExprPtr w = term();
            Expr e;
            e.kind = c == '+' ? Expr::Kind::add : Expr::Kind::sub;
            e.a = v;
            e.b = w;
            v = mk(std::move(e));
        }
    }

    ExprPtr term() {
        ExprPtr v = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*')
                return v;
            ++pos_;
            ExprPtr w = factor();
            Expr e;
            e.kind = Expr::Kind::mul;
            e.a = v;
            e.b = w;
            v = mk(std::move(e));
        }
    }

    ExprPtr factor() {
        skip_ws();
        char c = peek();
        if (std::isdigit((unsigned char)c)) {
            long long v = 0;
            while (std::isdigit((unsigned char)peek())) {
                v = v * 10 + (peek() - '0');
                ++pos_;
            }
            Expr e;
            e.kind = Expr::Kind::integer;
            e.value = v;
            return mk(std::move(e));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr v = expr();
            skip_ws();
            if (peek() != ')')
                syntax_error(pos_, "expected ')'");
            ++pos_;
            return v;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr v = expr();
            skip_ws();
            if (src_.compare(pos_, 3, "/2]") != 0)
                syntax_error(pos_, "expected '/2]'");
            pos_ += 3;
            Expr e;
            e.kind = Expr::Kind::half;
            e.a = v;
            return mk(std::move(e));
        }
        if (src_.compare(pos_, 4, "min(") == 0) {
            pos_ += 4;
            ExprPtr a = expr();
            skip_ws();
            if (peek() != ',')
                syntax_error(pos_, "expected ','");
            ++pos_;
            ExprPtr b = expr();
            skip_ws();
            if (peek() != ')')
                syntax_error(pos_, "expected ')'");
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::min;
            e.a = a;
            e.b = b;
            return mk(std::move(e));
        }
        if (std::isalpha((unsigned char)c)) {
            std::string name;
            while (std::isalpha((unsigned char)peek()))
                name += src_[pos_++];
            Expr e;
            e.kind = Expr::Kind::param;
            e.name = name;
            return mk(std::move(e));
        }
        syntax_error(pos_, "expected a factor");
    }
};

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("formula overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("formula overflow");
    return r;
}

bool is_sum_kind(const ExprPtr& e) {
    return e->kind == Expr::Kind::add || e->kind == Expr::Kind::sub;
}

// Child rendering with parentheses exactly where reparsing would otherwise
// reassociate; parse(print(ast)) == ast for arbitrary trees.
std::string print_child(const ExprPtr& e, bool parens) {
    std::string s = print_formula(e);
    return parens ? "(" + s + ")" : s;
}

} // namespace

ExprPtr parse_formula(const std::string& src) {
    return Parser(src).parse_expr_all();
}

Cond parse_condition(const std::string& src) {
    return Parser(src).parse_cond_all();
}

std::string print_formula(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::integer:
        return std::to_string(e->value);
    case Expr::Kind::param:
        return e->name;
    case Expr::Kind::add:
        return print_formula(e->a) + "+" + print_child(e->b, is_sum_kind(e->b));
    case Expr::Kind::sub:
        return print_formula(e->a) + "-" + print_child(e->b, is_sum_kind(e->b));
    case Expr::Kind::mul:
        return print_child(e->a, is_sum_kind(e->a)) + "*" +
               print_child(e->b, is_sum_kind(e->b) || e->b->kind == Expr::Kind::mul);
    case Expr::Kind::min:
        return "min(" + print_formula(e->a) + "," + print_formula(e->b) + ")";
    case Expr::Kind::half:
        return "[" + print_formula(e->a) + "/2]";
    }
    throw StructuralError("unreachable formula kind");
}

std::string print_condition(const Cond& c) {
    switch (c.kind) {
    case Cond::Kind::always:
        return "true";
    case Cond::Kind::even:
        return c.var + " even";
    case Cond::Kind::odd:
        return c.var + " odd";
    case Cond::Kind::cmp:
        return print_formula(c.a) + c.op + print_formula(c.b);
    }
    throw StructuralError("unreachable condition kind");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Expr::Kind::integer:
        return a->value == b->value;
    case Expr::Kind::param:
        return a->name == b->name;
    case Expr::Kind::half:
        return expr_equal(a->a, b->a);
    default:
        return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    }
}

bool cond_equal(const Cond& a, const Cond& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Cond::Kind::always:
        return true;
    case Cond::Kind::even:
    case Cond::Kind::odd:
        return a.var == b.var;
    case Cond::Kind::cmp:
        return a.op == b.op && expr_equal(a.a, b.a) && expr_equal(a.b, b.b);
    }
    return false;
}

long long eval_formula(const ExprPtr& e, const Bindings& env) {
    switch (e->kind) {
    case Expr::Kind::integer:
        return e->value;
    case Expr::Kind::param: {
        auto it = env.find(e->name);
        if (it == env.end())
            throw InputError("unbound parameter '" + e->name + "'");
        return it->second;
    }
    case Expr::Kind::add:
        return checked_add(eval_formula(e->a, env), eval_formula(e->b, env));
    case Expr::Kind::sub:
        return checked_add(eval_formula(e->a, env), -eval_formula(e->b, env));
    case Expr::Kind::mul:
        return checked_mul(eval_formula(e->a, env), eval_formula(e->b, env));
    case Expr::Kind::min:
        return std::min(eval_formula(e->a, env), eval_formula(e->b, env));
    case Expr::Kind::half: {
        long long v = eval_formula(e->a, env);
        return v >= 0 ? v / 2 : (v - 1) / 2; // floor
    }
    }
    throw StructuralError("unreachable formula kind");
}

bool eval_condition(const Cond& c, const Bindings& env) {
    switch (c.kind) {
    case Cond::Kind::always:
        return true;
    case Cond::Kind::even:
    case Cond::Kind::odd: {
        auto it = env.find(c.var);
        if (it == env.end())
            throw InputError("unbound parameter '" + c.var + "'");
        bool even = (it->second % 2 + 2) % 2 == 0;
        return c.kind == Cond::Kind::even ? even : !even;
    }
    case Cond::Kind::cmp: {
        long long a = eval_formula(c.a, env);
        long long b = eval_formula(c.b, env);
        if (c.op == "=")
            return a == b;
        if (c.op == "!=")
            return a != b;
        if (c.op == ">")
            return a > b;
        return a < b;
    }
    }
    return false;
}

Catalog Catalog::load(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw InputError(std::string("catalog JSON parse failure: ") + e.what());
    }
    if (!doc.is_array())
        throw InputError("catalog must be a JSON array of row objects");
    Catalog cat;
    for (const auto& row : doc) {
        CatalogEntry e;
        e.section = row.value("section", std::string());
        auto pair = row.at("pair");
        e.pair_g = pair.at(0).get<std::string>();
        e.pair_h = pair.at(1).get<std::string>();
        e.label = row.at("label").get<std::string>();
        e.rank_src = row.at("rank").get<std::string>();
        e.srank_src = row.at("srank").get<std::string>();
        e.cond_src = row.value("cond", std::string("true"));
        e.rank = parse_formula(e.rank_src);
        e.srank = parse_formula(e.srank_src);
        e.cond = parse_condition(e.cond_src);
        if (row.contains("params"))
            for (const auto& p : row["params"])
                e.params.push_back(p.get<std::string>());
        if (row.contains("domain"))
            for (const auto& d : row["domain"])
                e.domain.push_back(parse_condition(d.get<std::string>()));
        e.flagged = row.value("flagged", false);
        cat.entries_.push_back(std::move(e));
    }
    return cat;
}

const Catalog& Catalog::shipped() {
    static const Catalog cat = Catalog::load(embedded::catalog_json());
    return cat;
}

namespace {

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ')
            out += (char)std::tolower((unsigned char)c);
    return out;
}

} // namespace

std::vector<const CatalogEntry*> Catalog::lookup(const std::string& pattern) const {
    std::string pat = normalize(pattern);
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (normalize(e.pair_str()).find(pat) != std::string::npos)
            out.push_back(&e);
    return out;
}

std::vector<const CatalogEntry*> Catalog::siblings(const CatalogEntry& e) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& other : entries_)
        if (other.pair_g == e.pair_g && other.pair_h == e.pair_h)
            out.push_back(&other);
    return out;
}

Catalog::Instantiated Catalog::instantiate(const CatalogEntry& e,
                                           const Bindings& env) const {
    std::vector<const CatalogEntry*> sibs = siblings(e);
    std::vector<const CatalogEntry*> active;
    for (const CatalogEntry* s : sibs)
        if (eval_condition(s->cond, env))
            active.push_back(s);
    if (active.size() != 1) {
        std::ostringstream os;
        os << "catalog row " << e.pair_str() << ": " << active.size()
           << " sibling conditions hold at";
        for (const auto& [k, v] : env)
            os << " " << k << "=" << v;
        throw DataError(os.str());
    }
    const CatalogEntry* hit = active.front();
    return {hit->label, eval_formula(hit->rank, env), eval_formula(hit->srank, env)};
}

namespace {

const std::map<std::string, int>& family_minimum() {
    static const std::map<std::string, int> table = {{"D", 3}};
    return table;
}

// Family-minimum degenerations only (not diagram shape violations): these
// parameter samples name systems below the family's smallest rank and are
// skipped rather than counted against a row.
bool is_degenerate(const std::string& label, long long r, long long l) {
    if (r < 1 || l < 1)
        return true;
    std::string base = label.substr(0, label.find('+'));
    static const std::map<std::string, std::string> fam = {
        {"AI", "A"},  {"AII", "A"},  {"AIII", "A"}, {"BI", "B"}, {"BCI", "BC"},
        {"BCIII", "BC"}, {"CI", "C"}, {"CIII", "C"}, {"DI", "D"}, {"DIII", "D"},
        {"A", "A"},   {"B", "B"},    {"C", "C"},    {"D", "D"},  {"BC", "BC"},
    };
    auto it = fam.find(base);
    if (it == fam.end())
        return false;
    long long comp_rank = label.find('+') != std::string::npos ? l : r;
    auto mn = family_minimum().find(it->second);
    int need = mn == family_minimum().end() ? 1 : mn->second;
    return comp_rank < need;
}

bool admissible(const std::string& label, long long r, long long l) {
    if (r < 1 || l < 1 || r > 1000 || l > 1000)
        return false;
    try {
        standard_diagram(label, (int)r, (int)l);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

} // namespace

std::vector<std::string> catalog_closure_violations(const Catalog& cat) {
    std::vector<std::string> bad;
    for (const CatalogEntry& e : cat.entries()) {
        // Parameter grid: i, j over 0..8, others over 1..8; capped at 6
        // non-degenerate samples per row.
        std::vector<std::vector<long long>> ranges;
        for (const std::string& p : e.params) {
            std::vector<long long> vals;
            long long lo = (p == "i" || p == "j") ? 0 : 1;
            for (long long v = lo; v <= 8; ++v)
                vals.push_back(v);
            ranges.push_back(vals);
        }
        bool seen_fail = false;
        int nondeg = 0;
        std::vector<size_t> idx(e.params.size(), 0);
        for (;;) {
            Bindings env;
            for (size_t k = 0; k < e.params.size(); ++k)
                env[e.params[k]] = ranges[k][idx[k]];
            bool in_domain = true;
            for (const Cond& d : e.domain)
                if (!eval_condition(d, env)) {
                    in_domain = false;
                    break;
                }
            if (in_domain && eval_condition(e.cond, env)) {
                long long r = eval_formula(e.rank, env);
                long long l = eval_formula(e.srank, env);
                if (!is_degenerate(e.label, r, l)) {
                    ++nondeg;
                    if (!admissible(e.label, r, l))
                        seen_fail = true;
                    if (nondeg >= 6)
                        break;
                }
            }
            // next grid point (odometer); empty grids run exactly once
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == ranges[k].size()) {
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size())
                break;
        }
        if (e.flagged) {
            if (!seen_fail)
                bad.push_back("flagged row did not fail: " + e.pair_str());
        } else {
            if (nondeg == 0)
                bad.push_back("no non-degenerate sample: " + e.pair_str() + " " + e.label);
            else if (seen_fail)
                bad.push_back("admissibility failure: " + e.pair_str() + " " + e.label);
        }
    }
    return bad;
}

} // namespace rootlab
