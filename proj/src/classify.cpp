#include "rootlab/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rootlab/json_io.hpp"

namespace rootlab {

namespace {

Root neg_root(const Root& v) {
    Root out = v;
    for (int& x : out)
        x = -x;
    return out;
}

std::vector<Root> canonical_members(const std::set<Root>& set) {
    std::vector<Root> pos;
    for (const Root& v : set)
        if (root_is_positive(v))
            pos.push_back(v);
    std::sort(pos.begin(), pos.end());
    std::vector<Root> out;
    for (const Root& p : pos) {
        out.push_back(p);
        out.push_back(neg_root(p));
    }
    return out;
}

Vec to_vec(const Root& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(v[i]);
    return out;
}

} // namespace

std::vector<Root> RootSet::positive_members() const {
    std::vector<Root> out;
    for (const Root& v : members)
        if (root_is_positive(v))
            out.push_back(v);
    return out;
}

RootSet real_roots(const RootSystem& rs, const Involution& inv) {
    if (!inv.validated)
        throw InputError("refusing to classify with an unvalidated involution");
    std::set<Root> fixed;
    for (const Root& a : rs.roots())
        if (mat_apply(inv.matrix, to_vec(a)) == to_vec(a))
            fixed.insert(a);
    RootSet out;
    out.kind = RootKind::real;
    out.members = canonical_members(fixed);
    return out;
}

RootSet imaginary_roots(const RootSystem& rs, const Involution& inv) {
    if (!inv.validated)
        throw InputError("refusing to classify with an unvalidated involution");
    std::set<Root> negd;
    for (const Root& a : rs.roots())
        if (mat_apply(inv.matrix, to_vec(a)) == to_vec(neg_root(a)))
            negd.insert(a);
    RootSet out;
    out.kind = RootKind::imaginary;
    out.members = canonical_members(negd);
    return out;
}

bool all_real_label(const std::string& label) {
    return label == "AI" || label == "EI" || label == "EV" || label == "EVIII" ||
           label == "FI" || label == "G";
}

namespace {

// c * (a_from + ... + a_to) accumulated onto v (1-based, empty when from > to).
void add_run(Root& v, int from, int to, int c = 1) {
    for (int k = from; k <= to; ++k)
        v[k - 1] += c;
}

std::set<Root> closed_form_positive(const std::string& label, int r, int l,
                                    const RootSystem& rs) {
    std::set<Root> out;
    int n = r;
    auto fresh = [n] { return Root(n, 0); };

    if (all_real_label(label)) {
        for (const Root& v : rs.positives())
            out.insert(v);
        return out;
    }
    if (label == "AII" || label == "EIV" || label.find('+') != std::string::npos)
        return out;
    if (label == "AIII") {
        for (int i = 1; i <= l; ++i) {
            Root v = fresh();
            add_run(v, i, r + 1 - i);
            out.insert(v);
        }
        return out;
    }
    if (label == "BI" || label == "BCI") {
        for (int i = 1; i <= l; ++i) {
            for (int j = i + 1; j <= l; ++j) {
                Root v = fresh();
                add_run(v, i, j - 1);
                out.insert(v);
                Root w = fresh();
                add_run(w, i, r);
                add_run(w, j, r);
                out.insert(w);
            }
            Root v = fresh();
            add_run(v, i, r);
            out.insert(v);
            if (label == "BCI") {
                Root w = fresh();
                add_run(w, i, r, 2);
                out.insert(w);
            }
        }
        return out;
    }
    if (label == "BCIII") {
        for (int i = 1; i <= l; ++i) {
            Root v = fresh();
            add_run(v, 2 * i - 1, 2 * i - 1);
            add_run(v, 2 * i, r, 2);
            out.insert(v);
        }
        return out;
    }
    if (label == "CI") {
        for (int i = 1; i <= l; ++i) {
            for (int j = i + 1; j <= l; ++j) {
                Root v = fresh();
                add_run(v, i, j - 1);
                out.insert(v);
                Root w = fresh();
                add_run(w, i, j - 1);
                add_run(w, j, r - 1, 2);
                add_run(w, r, r);
                out.insert(w);
            }
            Root v = fresh();
            add_run(v, i, r - 1, 2);
            add_run(v, r, r);
            out.insert(v);
        }
        return out;
    }
    if (label == "CIII") {
        for (int i = 1; i <= l; ++i) {
            Root v = fresh();
            add_run(v, 2 * i - 1, 2 * i - 1);
            add_run(v, 2 * i, r - 1, 2);
            add_run(v, r, r);
            out.insert(v);
        }
        return out;
    }
    if (label == "DI") {
        for (int i = 1; i <= l; ++i)
            for (int j = i + 1; j <= l; ++j) {
                Root v = fresh();
                add_run(v, i, j - 1);
                out.insert(v);
                Root w = fresh();
                add_run(w, i, r - 2);
                add_run(w, j, r);
                out.insert(w);
            }
        return out;
    }
    if (label == "DIII") {
        for (int i = 1; i <= l; ++i) {
            Root v = fresh();
            add_run(v, 2 * i - 1, r - 2);
            add_run(v, 2 * i, r);
            out.insert(v);
        }
        return out;
    }

    static const std::map<std::string, std::vector<std::string>> fixed = {
        {"EII",
         {"010000", "000100", "001110", "010100", "011110", "011210", "101111",
          "111111", "111211", "112221", "112321", "122321"}},
        {"EIII", {"101111", "122321"}},
        {"EVI",
         {"1000000", "0010000", "1010000", "0112100", "1112100", "1122100",
          "1122221", "1112221", "2234321", "1224321", "1234321", "0112221"}},
        {"EVII", {"0000001", "0112221", "2234321"}},
        {"EIX",
         {"00000010", "00000001", "00000011", "01122210", "01122211", "01122221",
          "22343210", "22343221", "22343211", "23465421", "23465431", "23465432"}},
        {"FII", {"1232"}},
        {"FIII", {"1110", "0122", "1232", "2342"}},
    };
    auto it = fixed.find(label);
    if (it == fixed.end())
        throw InputError("no closed form for label '" + label + "'");
    for (const std::string& s : it->second) {
        Root v(n, 0);
        for (int i = 0; i < n; ++i)
            v[i] = s[i] - '0';
        out.insert(v);
    }
    return out;
}

} // namespace

RootSet closed_form_real_roots(const std::string& label, int r, int l) {
    RootSet out;
    out.kind = RootKind::real;
    if (l == 0)
        return out; // every index family is empty
    SatakeDiagram d = standard_diagram(label, r, l);
    std::set<Root> set;
    for (const Root& p : closed_form_positive(label, r, l, d.rs)) {
        if (!d.rs.is_root(p))
            throw StructuralError("closed form produced a non-root for " + label);
        set.insert(p);
        set.insert(neg_root(p));
    }
    out.members = canonical_members(set);
    return out;
}

std::string rootset_text(const RootSet& s) {
    std::vector<Root> pos = s.positive_members();
    if (pos.empty())
        return "(none)";
    std::string out;
    for (size_t i = 0; i < pos.size(); ++i)
        out += (i ? ", " : "") + ("\u00b1(" + root_str(pos[i]) + ")");
    return out;
}

std::string rootset_latex(const RootSet& s) {
    std::vector<Root> pos = s.positive_members();
    if (pos.empty())
        return "(none)";
    std::string out;
    for (size_t i = 0; i < pos.size(); ++i)
        out += (i ? ", " : "") + ("\\pm(" + root_latex(pos[i]) + ")");
    return out;
}

std::string emit_table(const std::vector<TableSelection>& rows,
                       const std::string& format) {
    if (format != "text" && format != "json" && format != "latex")
        throw InputError("unknown format '" + format + "'");

    struct RowData {
        TableSelection sel;
        RootSet set;
        size_t total_roots;
        bool all_real;
    };
    std::vector<RowData> data;
    for (const auto& sel : rows) {
        RootSet set = closed_form_real_roots(sel.label, sel.r, sel.l);
        SatakeDiagram d = standard_diagram(sel.label, sel.r, sel.l);
        data.push_back({sel, std::move(set), d.rs.roots().size(),
                        all_real_label(sel.label)});
    }

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : data) {
            ordered_json o;
            o["type"] = row.sel.label;
            o["r"] = row.sel.r;
            o["l"] = row.sel.l;
            ordered_json roots = ordered_json::array();
            for (const Root& v : row.set.members)
                roots.push_back(v);
            o["real_roots"] = roots;
            arr.push_back(o);
        }
        return arr.dump(1) + "\n";
    }

    std::ostringstream os;
    if (format == "latex") {
        os << "\\begin{tabular}{lccl}\n";
        os << "type & $r$ & $l$ & real restricted roots \\\\\n\\hline\n";
        for (const auto& row : data) {
            os << row.sel.label << " & " << row.sel.r << " & " << row.sel.l << " & ";
            if (row.all_real)
                os << "all restricted roots (" << row.total_roots << " roots)";
            else
                os << rootset_latex(row.set);
            os << " \\\\\n";
        }
        os << "\\end{tabular}\n";
        return os.str();
    }

    // text: aligned columns
    size_t wl = 4, wr = 1, ws = 1;
    for (const auto& row : data) {
        wl = std::max(wl, row.sel.label.size());
        wr = std::max(wr, std::to_string(row.sel.r).size());
        ws = std::max(ws, std::to_string(row.sel.l).size());
    }
    for (const auto& row : data) {
        os << row.sel.label << std::string(wl - row.sel.label.size() + 2, ' ');
        std::string rstr = std::to_string(row.sel.r);
        std::string sstr = std::to_string(row.sel.l);
        os << "r=" << rstr << std::string(wr - rstr.size() + 2, ' ');
        os << "l=" << sstr << std::string(ws - sstr.size() + 2, ' ');
        if (row.all_real)
            os << "all restricted roots (" << row.total_roots << " roots)";
        else
            os << rootset_text(row.set);
        os << "\n";
    }
    return os.str();
}

} // namespace rootlab
