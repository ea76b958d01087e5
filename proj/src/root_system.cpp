#include "rootlab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace rootlab {

int Descriptor::total_rank() const {
    int r = 0;
    for (const auto& c : components)
        r += c.rank;
    return r;
}

namespace {

void check_component(const Component& c) {
    const std::string& f = c.family;
    int r = c.rank;
    if (f == "A" || f == "B" || f == "C" || f == "BC") {
        if (r < 1)
            throw InputError(f + " requires rank >= 1");
    } else if (f == "D") {
        if (r < 3)
            throw InputError("D requires rank >= 3");
    } else if (f == "E") {
        if (r != 6 && r != 7 && r != 8)
            throw InputError("E requires rank 6, 7 or 8");
    } else if (f == "F") {
        if (r != 4)
            throw InputError("F requires rank 4");
    } else if (f == "G") {
        if (r != 2)
            throw InputError("G requires rank 2");
    } else {
        throw InputError("unknown family '" + f + "'");
    }
}

// Gram block per family: Bourbaki Cartan data, long roots of squared
// length 2.
Mat gram_block(const std::string& family, int rank) {
    Mat g(rank, Vec(rank, Rat(0)));
    auto put = [&](int i, int j, Rat v) {
        g[i][j] = v;
        g[j][i] = v;
    };
    if (family == "A") {
        for (int i = 0; i < rank; ++i)
            put(i, i, Rat(2));
        for (int i = 0; i + 1 < rank; ++i)
            put(i, i + 1, Rat(-1));
    } else if (family == "B" || family == "BC") {
        if (rank == 1) {
            put(0, 0, Rat(2));
        } else {
            for (int i = 0; i + 1 < rank; ++i)
                put(i, i, Rat(2));
            put(rank - 1, rank - 1, Rat(1));
            for (int i = 0; i + 1 < rank; ++i)
                put(i, i + 1, Rat(-1));
        }
    } else if (family == "C") {
        if (rank == 1) {
            put(0, 0, Rat(2));
        } else {
            for (int i = 0; i + 1 < rank; ++i)
                put(i, i, Rat(1));
            put(rank - 1, rank - 1, Rat(2));
            for (int i = 0; i + 2 < rank; ++i)
                put(i, i + 1, Rat(-1, 2));
            put(rank - 2, rank - 1, Rat(-1));
        }
    } else if (family == "D") {
        for (int i = 0; i < rank; ++i)
            put(i, i, Rat(2));
        for (int i = 0; i + 3 < rank; ++i)
            put(i, i + 1, Rat(-1));
        put(rank - 3, rank - 2, Rat(-1));
        put(rank - 3, rank - 1, Rat(-1));
    } else if (family == "E") {
        for (int i = 0; i < rank; ++i)
            put(i, i, Rat(2));
        std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
        if (rank >= 7)
            edges.push_back({6, 7});
        if (rank == 8)
            edges.push_back({7, 8});
        for (auto [a, b] : edges)
            put(a - 1, b - 1, Rat(-1));
    } else if (family == "F") {
        put(0, 0, Rat(2));
        put(1, 1, Rat(2));
        put(2, 2, Rat(1));
        put(3, 3, Rat(1));
        put(0, 1, Rat(-1));
        put(1, 2, Rat(-1));
        put(2, 3, Rat(-1, 2));
    } else { // G
        put(0, 0, Rat(2, 3));
        put(1, 1, Rat(2));
        put(0, 1, Rat(-1));
    }
    return g;
}

} // namespace

Descriptor parse_descriptor(const std::string& text) {
    Descriptor d;
    size_t i = 0;
    while (i < text.size()) {
        std::string fam;
        while (i < text.size() && std::isalpha((unsigned char)text[i]))
            fam += (char)std::toupper((unsigned char)text[i++]);
        std::string digits;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            digits += text[i++];
        if (fam.empty() || digits.empty())
            throw InputError("bad root system descriptor '" + text + "'");
        int rank = std::atoi(digits.c_str());
        // E6/E7/E8, F4, G2 are written with their fixed rank attached.
        Component c{fam, rank};
        check_component(c);
        d.components.push_back(c);
        if (i < text.size()) {
            if (text[i] != '+')
                throw InputError("bad root system descriptor '" + text + "'");
            ++i;
            if (i == text.size())
                throw InputError("bad root system descriptor '" + text + "'");
        }
    }
    if (d.components.empty())
        throw InputError("empty root system descriptor");
    return d;
}

std::string descriptor_str(const Descriptor& d) {
    std::string out;
    for (size_t i = 0; i < d.components.size(); ++i) {
        if (i)
            out += "+";
        out += d.components[i].family + std::to_string(d.components[i].rank);
    }
    return out;
}

bool root_is_positive(const Root& v) {
    for (int x : v)
        if (x != 0)
            return x > 0;
    return false;
}

bool vec_is_positive(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_zero())
            return x > Rat(0);
    return false;
}

RootSystem RootSystem::build(const std::string& descriptor_text) {
    return build(parse_descriptor(descriptor_text));
}

RootSystem RootSystem::build(const Descriptor& d) {
    RootSystem rs;
    rs.desc_ = d;
    for (const auto& c : d.components)
        check_component(c);
    rs.rank_ = d.total_rank();
    int n = rs.rank_;
    rs.gram_ = Mat(n, Vec(n, Rat(0)));
    rs.comp_of_.assign(n, 0);
    int off = 0;
    for (size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& c = d.components[ci];
        Mat blk = gram_block(c.family, c.rank);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                rs.gram_[off + i][off + j] = blk[i][j];
        for (int i = 0; i < c.rank; ++i)
            rs.comp_of_[off + i] = (int)ci;
        rs.ranges_.push_back({off, off + c.rank});
        off += c.rank;
    }

    // Reflection closure per component via simple reflections, then BC
    // doubles of the minimum-norm roots.
    std::set<Root> all;
    for (size_t ci = 0; ci < d.components.size(); ++ci) {
        auto [lo, hi] = rs.ranges_[ci];
        std::set<Root> comp;
        std::vector<Root> frontier;
        for (int i = lo; i < hi; ++i) {
            Root v(n, 0);
            v[i] = 1;
            comp.insert(v);
            frontier.push_back(v);
        }
        while (!frontier.empty()) {
            std::vector<Root> next;
            for (const Root& a : frontier) {
                for (int i = lo; i < hi; ++i) {
                    Root si(n, 0);
                    si[i] = 1;
                    Rat c2 = Rat(2) * rs.inner(a, si) / rs.inner(si, si);
                    long long c = c2.as_integer();
                    Root b = a;
                    b[i] -= (int)c;
                    if (comp.insert(b).second)
                        next.push_back(b);
                }
            }
            frontier = std::move(next);
        }
        comp.erase(Root(n, 0));
        if (d.components[ci].family == "BC") {
            Rat mn;
            bool first = true;
            for (const Root& a : comp) {
                Rat nr = rs.inner(a, a);
                if (first || nr < mn) {
                    mn = nr;
                    first = false;
                }
            }
            std::vector<Root> doubles;
            for (const Root& a : comp)
                if (rs.inner(a, a) == mn) {
                    Root b = a;
                    for (int& x : b)
                        x *= 2;
                    doubles.push_back(b);
                }
            for (auto& b : doubles)
                comp.insert(b);
        }
        all.insert(comp.begin(), comp.end());
    }

    for (const Root& v : all)
        if (root_is_positive(v))
            rs.positives_.push_back(v);
    std::sort(rs.positives_.begin(), rs.positives_.end());
    for (const Root& p : rs.positives_) {
        rs.roots_.push_back(p);
        Root m = p;
        for (int& x : m)
            x = -x;
        rs.roots_.push_back(m);
    }
    rs.root_set_.insert(rs.roots_.begin(), rs.roots_.end());
    return rs;
}

bool RootSystem::is_root(const Root& v) const {
    if ((int)v.size() != rank_)
        throw InputError("dimension mismatch: expected rank " + std::to_string(rank_));
    return root_set_.count(v) > 0;
}

bool RootSystem::is_root_vec(const Vec& v) const {
    if ((int)v.size() != rank_)
        throw InputError("dimension mismatch: expected rank " + std::to_string(rank_));
    Root r(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (!v[i].is_integer())
            return false;
        r[i] = (int)v[i].num();
    }
    return root_set_.count(r) > 0;
}

Rat RootSystem::inner(const Vec& a, const Vec& b) const {
    if ((int)a.size() != rank_ || (int)b.size() != rank_)
        throw InputError("dimension mismatch in inner product");
    Rat s(0);
    for (int i = 0; i < rank_; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < rank_; ++j)
            if (!b[j].is_zero() && !gram_[i][j].is_zero())
                s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
    if ((int)a.size() != rank_ || (int)b.size() != rank_)
        throw InputError("dimension mismatch in inner product");
    Rat s(0);
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0 && !gram_[i][j].is_zero())
                s += Rat(a[i]) * gram_[i][j] * Rat(b[j]);
    }
    return s;
}

Rat RootSystem::inner(const Root& a, const Vec& b) const {
    Vec av(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        av[i] = Rat(a[i]);
    return inner(av, b);
}

Vec RootSystem::reflect(const Root& beta, const Vec& v) const {
    if (!is_root(beta))
        throw InputError("reflection axis " + root_str(beta) + " is not a root");
    Rat c = Rat(2) * inner(beta, v) / inner(beta, beta);
    Vec out = v;
    for (int i = 0; i < rank_; ++i)
        out[i] -= c * Rat(beta[i]);
    return out;
}

Root RootSystem::reflect(const Root& beta, const Root& v) const {
    if (!is_root(beta))
        throw InputError("reflection axis " + root_str(beta) + " is not a root");
    Rat c2 = Rat(2) * inner(beta, v) / inner(beta, beta);
    long long c = c2.as_integer();
    Root out = v;
    for (int i = 0; i < rank_; ++i)
        out[i] -= (int)(c * beta[i]);
    return out;
}

Root RootSystem::simple(int i) const {
    Root v(rank_, 0);
    v[i] = 1;
    return v;
}

Mat RootSystem::longest_weyl(const std::vector<int>& subset) const {
    for (int i : subset)
        if (i < 0 || i >= rank_)
            throw InputError("simple-root index out of range");
    Mat m = mat_identity(rank_);
    // Right-multiply by simple reflections while some subset simple root
    // still has a positive image; the fixpoint is the longest element.
    size_t guard = positives_.size() + 1;
    for (size_t step = 0; step <= guard; ++step) {
        int pick = -1;
        for (int i : subset) {
            Vec col = mat_col(m, i);
            if (vec_is_positive(col)) {
                pick = i;
                break;
            }
        }
        if (pick < 0)
            break;
        if (step == guard)
            throw StructuralError("longest-element descent failed to terminate");
        // m <- m * s_pick: column j gets col_j - c(j,pick) * col_pick.
        Root sp = simple(pick);
        Vec colp = mat_col(m, pick);
        for (int j = 0; j < rank_; ++j) {
            if (j == pick) {
                mat_set_col(m, j, vec_neg(colp));
                continue;
            }
            Rat c = Rat(2) * inner(simple(j), sp) / inner(sp, sp);
            if (c.is_zero())
                continue;
            Vec colj = mat_col(m, j);
            mat_set_col(m, j, vec_sub(colj, vec_scale(c, colp)));
        }
    }
    // Self-checks: involutive and subset-negative.
    Mat sq = mat_mul(m, m);
    if (sq != mat_identity(rank_))
        throw StructuralError("longest element is not involutive");
    for (int i : subset) {
        Vec col = mat_col(m, i);
        if (vec_is_positive(col) || vec_is_zero(col))
            throw StructuralError("longest element fixes a subset-positive root");
    }
    return m;
}

Mat RootSystem::rescaled_gram(const std::vector<Rat>& factors) const {
    if (factors.size() != ranges_.size())
        throw InputError("one scale factor per component required");
    for (const Rat& f : factors)
        if (!(f > Rat(0)))
            throw InputError("component scale factors must be positive");
    Mat g = gram_;
    for (size_t c = 0; c < ranges_.size(); ++c) {
        auto [lo, hi] = ranges_[c];
        for (int i = lo; i < hi; ++i)
            for (int j = lo; j < hi; ++j)
                g[i][j] *= factors[c];
    }
    return g;
}

namespace {

std::string coeff_str(const std::string& mag, int index, bool latex) {
    std::string var = latex ? "\\alpha_{" + std::to_string(index) + "}"
                            : "a" + std::to_string(index);
    return mag + var;
}

template <class Coeff>
std::string format_terms(const std::vector<Coeff>& v, bool latex,
                         const std::function<std::string(const Coeff&)>& mag,
                         const std::function<bool(const Coeff&)>& is_zero,
                         const std::function<bool(const Coeff&)>& is_neg) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i]))
            continue;
        std::string m = mag(v[i]);
        bool neg = is_neg(v[i]);
        if (out.empty())
            out += (neg ? "-" : "") + coeff_str(m, (int)i + 1, latex);
        else
            out += (neg ? "-" : "+") + coeff_str(m, (int)i + 1, latex);
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string root_str(const Root& v) {
    return format_terms<int>(
        v, false,
        [](const int& c) {
            int a = c < 0 ? -c : c;
            return a == 1 ? std::string() : std::to_string(a);
        },
        [](const int& c) { return c == 0; }, [](const int& c) { return c < 0; });
}

std::string root_latex(const Root& v) {
    return format_terms<int>(
        v, true,
        [](const int& c) {
            int a = c < 0 ? -c : c;
            return a == 1 ? std::string() : std::to_string(a);
        },
        [](const int& c) { return c == 0; }, [](const int& c) { return c < 0; });
}

std::string vec_str(const Vec& v) {
    return format_terms<Rat>(
        v, false,
        [](const Rat& c) {
            Rat a = c < Rat(0) ? -c : c;
            return a == Rat(1) ? std::string() : a.str();
        },
        [](const Rat& c) { return c.is_zero(); },
        [](const Rat& c) { return c < Rat(0); });
}

Root parse_root(const std::string& text, int rank) {
    Root out(rank, 0);
    size_t i = 0;
    auto fail = [&] { throw InputError("bad root expression '" + text + "'"); };
    if (text.empty())
        fail();
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (i > 0) {
            fail(); // terms after the first need an explicit sign
        }
        int coeff = 1;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            coeff = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                coeff = coeff * 10 + (text[i++] - '0');
        }
        if (i >= text.size() || text[i] != 'a')
            fail();
        ++i;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
            fail();
        int idx = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            idx = idx * 10 + (text[i++] - '0');
        if (idx < 1 || idx > rank)
            throw InputError("simple-root index a" + std::to_string(idx) +
                             " out of range 1.." + std::to_string(rank));
        out[idx - 1] += sign * coeff;
    }
    return out;
}

} // namespace rootlab
