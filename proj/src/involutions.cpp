#include "rootlab/involutions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace rootlab {

std::vector<int> SatakeDiagram::whites() const {
    std::vector<int> out;
    for (int i = 0; i < r; ++i)
        if (!is_black(i))
            out.push_back(i);
    return out;
}

int SatakeDiagram::p(int i) const {
    for (auto [a, b] : arrows) {
        if (a == i)
            return b;
        if (b == i)
            return a;
    }
    return i;
}

namespace {

struct ExcData {
    Descriptor desc;
    int l;
    std::vector<int> black;               // 1-based
    std::vector<std::pair<int, int>> arrows; // 1-based
};

const std::map<std::string, ExcData>& exceptional_table() {
    static const std::map<std::string, ExcData> table = {
        {"EI", {{{{"E", 6}}}, 6, {}, {}}},
        {"EII", {{{{"E", 6}}}, 4, {}, {{1, 6}, {3, 5}}}},
        {"EIII", {{{{"E", 6}}}, 2, {3, 4, 5}, {{1, 6}}}},
        {"EIV", {{{{"E", 6}}}, 2, {2, 3, 4, 5}, {}}},
        {"EV", {{{{"E", 7}}}, 7, {}, {}}},
        {"EVI", {{{{"E", 7}}}, 4, {2, 5, 7}, {}}},
        {"EVII", {{{{"E", 7}}}, 3, {2, 3, 4, 5}, {}}},
        {"EVIII", {{{{"E", 8}}}, 8, {}, {}}},
        {"EIX", {{{{"E", 8}}}, 4, {2, 3, 4, 5}, {}}},
        {"FI", {{{{"F", 4}}}, 4, {}, {}}},
        {"FII", {{{{"F", 4}}}, 1, {1, 2, 3}, {}}},
        {"FIII", {{{{"F", 4}}}, 2, {2, 3}, {}}},
        {"G", {{{{"G", 2}}}, 2, {}, {}}},
    };
    return table;
}

// Doubled types with a fixed component: label -> (family, component rank).
const std::map<std::string, std::pair<std::string, int>>& double_fixed_table() {
    static const std::map<std::string, std::pair<std::string, int>> table = {
        {"EI+EI", {"E", 6}},
        {"EV+EV", {"E", 7}},
        {"EVIII+EVIII", {"E", 8}},
        {"FI+FI", {"F", 4}},
        {"G+G", {"G", 2}},
    };
    return table;
}

SatakeDiagram make_diagram(const std::string& label, const Descriptor& desc,
                           int r, int l, const std::vector<int>& black1,
                           const std::vector<std::pair<int, int>>& arrows1) {
    SatakeDiagram d;
    d.rs = RootSystem::build(desc);
    d.label = label;
    d.r = r;
    d.l = l;
    for (int b : black1)
        d.black.insert(b - 1);
    for (auto [a, b] : arrows1)
        d.arrows.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
    std::sort(d.arrows.begin(), d.arrows.end());
    return d;
}

std::vector<int> range1(int lo, int hi) { // 1-based inclusive, empty if lo > hi
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i)
        out.push_back(i);
    return out;
}

} // namespace

const std::vector<std::string>& standard_labels() {
    static const std::vector<std::string> labels = {
        "AI",   "AII",  "AIII", "BI",   "BII",   "BCI",  "BCII", "BCIII",
        "CI",   "CII",  "CIII", "DI",   "DII",   "DIII", "EI",   "EII",
        "EIII", "EIV",  "EV",   "EVI",  "EVII",  "EVIII", "EIX", "FI",
        "FII",  "FIII", "G",    "A+A",  "B+B",   "C+C",  "BC+BC", "D+D",
        "EI+EI", "EV+EV", "EVIII+EVIII", "FI+FI", "G+G",
    };
    return labels;
}

bool fixed_parameters(const std::string& label, int* r, int* l) {
    auto& exc = exceptional_table();
    if (auto it = exc.find(label); it != exc.end()) {
        *r = it->second.desc.total_rank();
        *l = it->second.l;
        return true;
    }
    auto& dbl = double_fixed_table();
    if (auto it = dbl.find(label); it != dbl.end()) {
        *r = 2 * it->second.second;
        *l = it->second.second;
        return true;
    }
    return false;
}

SatakeDiagram standard_diagram(const std::string& label, int r, int l) {
    auto& exc = exceptional_table();
    if (auto it = exc.find(label); it != exc.end()) {
        const ExcData& e = it->second;
        int R = e.desc.total_rank();
        if (r != R || l != e.l)
            throw InputError(label + " requires (r,l)=(" + std::to_string(R) + "," +
                             std::to_string(e.l) + ")");
        return make_diagram(label, e.desc, R, e.l, e.black, e.arrows);
    }

    if (label.find('+') != std::string::npos) {
        std::string fam;
        int k = 0;
        auto& dbl = double_fixed_table();
        if (auto it = dbl.find(label); it != dbl.end()) {
            fam = it->second.first;
            k = it->second.second;
            if (l != k || r != 2 * k)
                throw InputError(label + " requires (r,l)=(" + std::to_string(2 * k) +
                                 "," + std::to_string(k) + ")");
        } else {
            std::string x = label.substr(0, label.find('+'));
            if (label != x + "+" + x ||
                (x != "A" && x != "B" && x != "C" && x != "D" && x != "BC"))
                throw InputError("unknown doubled type '" + label + "'");
            if (r != 2 * l || l < 1)
                throw InputError(label + " requires r=2l, l>=1");
            if (x == "D" && l < 3)
                throw InputError("D component needs rank >= 3");
            fam = x;
            k = l;
        }
        Descriptor desc{{{fam, k}, {fam, k}}};
        std::vector<std::pair<int, int>> arrows;
        for (int i = 1; i <= k; ++i)
            arrows.push_back({i, k + i});
        return make_diagram(label, desc, r, l, {}, arrows);
    }

    if (label == "AI") {
        if (l != r || r < 1)
            throw InputError("AI requires l=r>=1");
        return make_diagram(label, {{{"A", r}}}, r, l, {}, {});
    }
    if (label == "AII") {
        if (r != 2 * l + 1 || l < 1)
            throw InputError("AII requires r=2l+1, l>=1");
        std::vector<int> black;
        for (int i = 1; i <= r; i += 2)
            black.push_back(i);
        return make_diagram(label, {{{"A", r}}}, r, l, black, {});
    }
    if (label == "AIII") {
        if (l < 1 || 2 * l > r + 1)
            throw InputError("AIII requires 1<=l<=(r+1)/2");
        std::vector<std::pair<int, int>> arrows;
        for (int i = 1; i <= l && i < r + 1 - i; ++i)
            arrows.push_back({i, r + 1 - i});
        return make_diagram(label, {{{"A", r}}}, r, l, range1(l + 1, r - l), arrows);
    }
    if (label == "BI" || label == "BCI" || label == "CI" || label == "BII" ||
        label == "BCII" || label == "CII") {
        std::string fam = label.substr(0, label.find('I'));
        bool two = label.size() >= 2 && label.substr(label.size() - 2) == "II";
        if (two && l != 1)
            throw InputError(label + " requires l=1");
        if (l < 1 || l > r)
            throw InputError(label + " requires 1<=l<=r");
        return make_diagram(label, {{{fam, r}}}, r, l, range1(l + 1, r), {});
    }
    if (label == "BCIII" || label == "CIII") {
        std::string fam = label == "BCIII" ? "BC" : "C";
        if (l < 1 || 2 * l > r)
            throw InputError(label + " requires 1<=2l<=r");
        std::vector<int> black;
        for (int i = 1; i < 2 * l; i += 2)
            black.push_back(i);
        for (int i = 2 * l + 1; i <= r; ++i)
            black.push_back(i);
        return make_diagram(label, {{{fam, r}}}, r, l, black, {});
    }
    if (label == "DI" || label == "DII") {
        if (label == "DII" && l != 1)
            throw InputError("DII requires l=1");
        if (r < 3)
            throw InputError("D requires r>=3");
        if (l == r)
            return make_diagram(label, {{{"D", r}}}, r, l, {}, {});
        if (l == r - 1)
            return make_diagram(label, {{{"D", r}}}, r, l, {}, {{r - 1, r}});
        if (1 <= l && l <= r - 2)
            return make_diagram(label, {{{"D", r}}}, r, l, range1(l + 1, r), {});
        throw InputError("DI requires 1<=l<=r");
    }
    if (label == "DIII") {
        if (r < 3 || l != r / 2)
            throw InputError("DIII requires l=[r/2], r>=3");
        std::vector<int> black;
        if (r % 2 == 0) {
            for (int i = 1; i < r; i += 2)
                black.push_back(i);
            return make_diagram(label, {{{"D", r}}}, r, l, black, {});
        }
        for (int i = 1; i < r - 1; i += 2)
            black.push_back(i);
        return make_diagram(label, {{{"D", r}}}, r, l, black, {{r - 1, r}});
    }
    throw InputError("unknown type label '" + label + "'");
}

std::string ValidationReport::summary() const {
    auto word = [](bool b) { return b ? "pass" : "FAIL"; };
    std::ostringstream os;
    os << "involutive: " << word(involutive) << ", isometry: " << word(isometry)
       << ", root permutation: " << word(permutes_roots)
       << ", -id on black: " << word(neg_on_black)
       << ", white congruence mod black span: " << word(white_congruence);
    return os.str();
}

ValidationReport validate(const SatakeDiagram& d, const Mat& m) {
    const RootSystem& rs = d.rs;
    int n = rs.rank();
    ValidationReport rep;
    if ((int)m.size() != n)
        throw InputError("involution dimension mismatch");

    rep.involutive = mat_mul(m, m) == mat_identity(n);

    rep.isometry = true;
    for (int i = 0; i < n && rep.isometry; ++i)
        for (int j = i; j < n; ++j)
            if (rs.inner(mat_col(m, i), mat_col(m, j)) != rs.gram()[i][j]) {
                rep.isometry = false;
                break;
            }

    rep.permutes_roots = true;
    for (const Root& a : rs.roots()) {
        Vec av(n);
        for (int i = 0; i < n; ++i)
            av[i] = Rat(a[i]);
        if (!rs.is_root_vec(mat_apply(m, av))) {
            rep.permutes_roots = false;
            break;
        }
    }

    rep.neg_on_black = true;
    for (int b : d.black) {
        Vec col = mat_col(m, b);
        Vec want(n, Rat(0));
        want[b] = Rat(-1);
        if (col != want) {
            rep.neg_on_black = false;
            break;
        }
    }

    rep.white_congruence = true;
    for (int w : d.whites()) {
        Vec col = mat_col(m, w);
        col[d.p(w)] -= Rat(1);
        for (int i = 0; i < n; ++i) {
            bool black_i = d.is_black(i);
            if ((!black_i && !col[i].is_zero()) || (black_i && !col[i].is_integer())) {
                rep.white_congruence = false;
                break;
            }
        }
        if (!rep.white_congruence)
            break;
    }
    return rep;
}

namespace {

Involution closed_form_involution(const SatakeDiagram& d) {
    const RootSystem& rs = d.rs;
    int n = rs.rank();
    std::vector<int> black(d.black.begin(), d.black.end());
    Mat w0 = rs.longest_weyl(black);

    // Opposition involution of the black subdiagram: w0(a_b) = -a_{op(b)}.
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j)
        perm[j] = d.is_black(j) ? -1 : d.p(j);
    for (int b : black) {
        Vec col = mat_col(w0, b);
        int target = -1;
        for (int i = 0; i < n; ++i) {
            if (col[i].is_zero())
                continue;
            if (target != -1 || col[i] != Rat(-1)) {
                target = -2;
                break;
            }
            target = i;
        }
        if (target < 0 || !d.is_black(target))
            throw StructuralError("black subsystem has no opposition involution");
        perm[b] = target;
    }

    // theta~ = w0 composed with the permutation: column j = w0(a_{perm[j]}).
    Mat m(n, Vec(n, Rat(0)));
    for (int j = 0; j < n; ++j)
        mat_set_col(m, j, mat_col(w0, perm[j]));

    Involution inv;
    inv.matrix = std::move(m);
    inv.validated = validate(d, inv.matrix).ok();
    return inv;
}

} // namespace

Involution involution_by_search(const SatakeDiagram& d) {
    const RootSystem& rs = d.rs;
    int n = rs.rank();
    std::vector<int> black(d.black.begin(), d.black.end());
    std::vector<int> whites = d.whites();

    // Candidate images per white node: roots congruent to the arrow partner
    // modulo nonnegative integer black combinations, with matching norm.
    std::map<int, std::vector<Root>> cands;
    for (int w : whites) {
        Rat norm_w = rs.inner(rs.simple(w), rs.simple(w));
        std::vector<Root> cs;
        for (const Root& v : rs.roots()) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int diff = v[i] - (i == d.p(w) ? 1 : 0);
                if (d.is_black(i))
                    ok = diff >= 0;
                else
                    ok = diff == 0;
            }
            if (ok && rs.inner(v, v) == norm_w)
                cs.push_back(v);
        }
        cands[w] = std::move(cs);
    }

    std::vector<int> order = whites;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cands[a].size() != cands[b].size())
            return cands[a].size() < cands[b].size();
        return a < b;
    });

    Mat base(n, Vec(n, Rat(0)));
    for (int b : black) {
        Vec col(n, Rat(0));
        col[b] = Rat(-1);
        mat_set_col(base, b, col);
    }

    std::vector<Mat> solutions;
    std::map<int, Root> assigned;

    std::function<void(size_t)> bt = [&](size_t k) {
        if (solutions.size() > 1)
            return;
        if (k == order.size()) {
            Mat full = base;
            for (auto& [w, v] : assigned) {
                Vec col(n);
                for (int i = 0; i < n; ++i)
                    col[i] = Rat(v[i]);
                mat_set_col(full, w, col);
            }
            ValidationReport rep = validate(d, full);
            if (rep.ok())
                solutions.push_back(std::move(full));
            return;
        }
        int w = order[k];
        Root aw = rs.simple(w);
        for (const Root& v : cands[w]) {
            bool ok = true;
            for (int b : black) // isometry against black images
                if (rs.inner(v, rs.simple(b)) != -rs.inner(aw, rs.simple(b))) {
                    ok = false;
                    break;
                }
            if (ok)
                for (auto& [w2, v2] : assigned)
                    if (rs.inner(v, v2) != rs.inner(aw, rs.simple(w2))) {
                        ok = false;
                        break;
                    }
            if (ok) {
                assigned[w] = v;
                bt(k + 1);
                assigned.erase(w);
            }
        }
    };
    bt(0);

    if (solutions.size() != 1) {
        std::ostringstream os;
        os << "involution search for " << d.label << "(" << d.r << "," << d.l
           << ") found " << solutions.size() << " solutions; candidates per white node:";
        for (int w : whites) {
            os << " a" << (w + 1) << ":[";
            for (size_t i = 0; i < cands[w].size(); ++i)
                os << (i ? ", " : "") << root_str(cands[w][i]);
            os << "]";
        }
        throw StructuralError(os.str());
    }
    Involution inv;
    inv.matrix = std::move(solutions.front());
    inv.validated = true;
    inv.from_search = true;
    return inv;
}

Involution induced_involution(const SatakeDiagram& d) {
    try {
        Involution inv = closed_form_involution(d);
        if (inv.validated)
            return inv;
    } catch (const StructuralError&) {
        // fall through to the search
    }
    return involution_by_search(d);
}

std::string render_ascii(const SatakeDiagram& d) {
    std::ostringstream os;
    os << d.label << "  r=" << d.r << "  l=" << d.l << "\n";
    os << "system: " << descriptor_str(d.rs.descriptor()) << "\n";
    os << "nodes:";
    for (int i = 0; i < d.r; ++i)
        os << " " << (d.is_black(i) ? "●" : "○") << (i + 1);
    os << "\n";
    os << "arrows:";
    if (d.arrows.empty()) {
        os << " (none)";
    } else {
        for (size_t k = 0; k < d.arrows.size(); ++k)
            os << (k ? ", " : " ") << (d.arrows[k].first + 1) << " <-> "
               << (d.arrows[k].second + 1);
    }
    os << "\n";
    return os.str();
}

} // namespace rootlab
