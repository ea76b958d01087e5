#include "rootlab/recipe.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace rootlab {

namespace {

Vec root_to_vec(const Root& a) {
    Vec v(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        v[i] = Rat(a[i]);
    return v;
}

void check_matrix_involution(const RootSystem& rs, const Mat& m,
                             const std::string& name) {
    if ((int)m.size() != rs.rank())
        throw InputError(name + " matrix is " + std::to_string(m.size()) +
                         "x" + std::to_string(m.size()) + ", ambient rank is " +
                         std::to_string(rs.rank()));
    if (mat_mul(m, m) != mat_identity(m.size()))
        throw InputError(name + " matrix does not square to the identity");
    for (const Root& a : rs.roots())
        if (!rs.is_root_vec(mat_apply(m, root_to_vec(a))))
            throw InputError(name + " matrix does not permute the roots (image of " +
                             root_str(a) + " is not a root)");
}

// One involution from either "<name>_matrix" or "<name>_diagram"; diagram
// references yield the negated dual (the diagram machinery produces the
// +1-fixed map).
Involution load_involution(const ordered_json& doc, const std::string& name,
                           const RootSystem& rs,
                           std::optional<SatakeDiagram>* diagram_out) {
    std::string mkey = name + "_matrix";
    std::string dkey = name + "_diagram";
    bool has_m = doc.contains(mkey);
    bool has_d = doc.contains(dkey);
    if (has_m == has_d)
        throw InputError("ambient input needs exactly one of \"" + mkey +
                         "\" and \"" + dkey + "\"");
    if (has_m) {
        Mat m = mat_from_json(doc[mkey]);
        check_matrix_involution(rs, m, name);
        return Involution{m, false, false};
    }
    const ordered_json& ref = doc[dkey];
    if (!ref.contains("role"))
        throw InputError("\"" + dkey + "\" requires a \"role\" field");
    if (ref["role"].get<std::string>() != name)
        throw InputError("\"" + dkey + "\" declares role \"" +
                         ref["role"].get<std::string>() + "\", expected \"" +
                         name + "\"");
    SatakeDiagram d = standard_diagram(ref["label"].get<std::string>(),
                                       ref["r"].get<int>(), ref["l"].get<int>());
    if (descriptor_str(d.rs.descriptor()) != descriptor_str(rs.descriptor()))
        throw InputError("\"" + dkey + "\" lives on " +
                         descriptor_str(d.rs.descriptor()) +
                         ", the ambient system is " +
                         descriptor_str(rs.descriptor()));
    Involution dual = induced_involution(d);
    if (!dual.validated)
        throw StructuralError("diagram-sourced involution failed validation");
    *diagram_out = d;
    return Involution{mat_neg(dual.matrix), true, dual.from_search};
}

} // namespace

AmbientData load_ambient(const ordered_json& doc) {
    if (!doc.contains("sigma_system"))
        throw InputError("ambient input requires \"sigma_system\"");
    AmbientData amb{RootSystem::build(descriptor_from_json(doc["sigma_system"])),
                    {}, {}, std::nullopt, std::nullopt};
    amb.sigma = load_involution(doc, "sigma", amb.system, &amb.sigma_diagram);
    amb.theta = load_involution(doc, "theta", amb.system, &amb.theta_diagram);
    if (mat_mul(amb.sigma.matrix, amb.theta.matrix) !=
        mat_mul(amb.theta.matrix, amb.sigma.matrix))
        throw InputError("sigma and theta do not commute");
    return amb;
}

AmbientData load_ambient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open ambient input file '" + path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& ex) {
        throw InputError("bad JSON in '" + path + "': " + ex.what());
    }
    return load_ambient(doc);
}

int RestrictionResult::multiplicity(const Vec& lambda) const {
    auto it = fibers.find(lambda);
    return it == fibers.end() ? 0 : (int)it->second.size();
}

RestrictionResult restrict_ambient(const AmbientData& amb) {
    const RootSystem& rs = amb.system;
    RestrictionResult res;
    Rat half(1, 2);
    for (const Root& a : rs.roots()) {
        Vec va = root_to_vec(a);
        Vec lambda = vec_scale(half, vec_sub(va, mat_apply(amb.sigma.matrix, va)));
        if (vec_is_zero(lambda))
            continue; // sigma-fixed roots restrict to zero and have no fiber
        res.fibers[lambda].push_back(a);
    }
    std::vector<Vec> pos;
    for (const auto& [lambda, fiber] : res.fibers)
        if (vec_is_positive(lambda))
            pos.push_back(lambda);
    std::sort(pos.begin(), pos.end());
    for (const Vec& p : pos) {
        res.restricted.push_back(p);
        res.restricted.push_back(vec_neg(p));
    }
    res.degenerate = res.restricted.empty();
    res.rank = span_dimension(res.restricted);

    // Reflection closure under the ambient form.
    std::set<Vec> rset(res.restricted.begin(), res.restricted.end());
    for (const Vec& lambda : pos) {
        Rat nn = rs.inner(lambda, lambda);
        for (const Vec& mu : res.restricted) {
            Rat c = Rat(2) * rs.inner(mu, lambda) / nn;
            Vec image = vec_sub(mu, vec_scale(c, lambda));
            if (!rset.count(image))
                throw StructuralError(
                    "restricted set is not reflection-closed: s_{" +
                    vec_str(lambda) + "}(" + vec_str(mu) + ") = " +
                    vec_str(image) + " is not a restricted root");
        }
    }
    return res;
}

namespace {

// Node/edge data compared by the shape matcher: Cartan integers, colors,
// doubled-root flags and arrow pairs.
struct Shape {
    int n = 0;
    std::vector<std::vector<Rat>> cartan;
    std::vector<char> black, doubled;
    std::set<std::pair<int, int>> arrows;
};

Shape computed_shape(const RestrictionResult& res, const RootSystem& ambient) {
    Shape s;
    s.n = (int)res.fundamental.size();
    s.cartan.assign(s.n, std::vector<Rat>(s.n));
    std::set<Vec> rset(res.restricted.begin(), res.restricted.end());
    for (int j = 0; j < s.n; ++j) {
        Rat nn = ambient.inner(res.fundamental[j], res.fundamental[j]);
        for (int i = 0; i < s.n; ++i)
            s.cartan[i][j] =
                Rat(2) * ambient.inner(res.fundamental[i], res.fundamental[j]) / nn;
    }
    for (int i = 0; i < s.n; ++i) {
        s.black.push_back(res.black.count(i) > 0);
        s.doubled.push_back(rset.count(vec_scale(Rat(2), res.fundamental[i])) > 0);
    }
    for (auto [i, j] : res.arrows)
        s.arrows.insert({std::min(i, j), std::max(i, j)});
    return s;
}

Shape standard_shape(const SatakeDiagram& d) {
    Shape s;
    s.n = d.r;
    s.cartan.assign(s.n, std::vector<Rat>(s.n));
    for (int j = 0; j < s.n; ++j) {
        Root bj = d.rs.simple(j);
        Rat nn = d.rs.inner(bj, bj);
        for (int i = 0; i < s.n; ++i)
            s.cartan[i][j] = Rat(2) * d.rs.inner(d.rs.simple(i), bj) / nn;
    }
    for (int i = 0; i < s.n; ++i) {
        s.black.push_back(d.is_black(i));
        Root twice(s.n, 0);
        twice[i] = 2;
        s.doubled.push_back(d.rs.is_root(twice));
    }
    for (auto [i, j] : d.arrows)
        s.arrows.insert({std::min(i, j), std::max(i, j)});
    return s;
}

// First (lexicographic) bijection std-node -> computed-node preserving the
// directed Cartan matrix, colors, doubled flags and arrows, if any.
bool find_isomorphism(const Shape& computed, const Shape& std_side,
                      std::vector<int>* out) {
    if (computed.n != std_side.n)
        return false;
    int n = computed.n;
    std::vector<int> assign(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int k) {
        if (k == n) {
            std::set<std::pair<int, int>> mapped;
            for (auto [i, j] : std_side.arrows) {
                int a = assign[i], b = assign[j];
                mapped.insert({std::min(a, b), std::max(a, b)});
            }
            return mapped == computed.arrows;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || computed.black[v] != std_side.black[k] ||
                computed.doubled[v] != std_side.doubled[k])
                continue;
            bool ok = computed.cartan[v][v] == std_side.cartan[k][k];
            for (int j = 0; ok && j < k; ++j)
                ok = computed.cartan[v][assign[j]] == std_side.cartan[k][j] &&
                     computed.cartan[assign[j]][v] == std_side.cartan[j][k];
            if (!ok)
                continue;
            assign[k] = v;
            used[v] = 1;
            if (place(k + 1))
                return true;
            used[v] = 0;
            assign[k] = -1;
        }
        return false;
    };
    if (!place(0))
        return false;
    *out = assign;
    return true;
}

std::string shape_diagnostic(const RestrictionResult& res) {
    std::ostringstream os;
    os << "rank " << res.rank << ", split rank " << res.split_rank
       << ", black nodes {";
    bool first = true;
    for (int b : res.black) {
        os << (first ? "" : ", ") << b + 1;
        first = false;
    }
    os << "}, arrows {";
    first = true;
    for (auto [i, j] : res.arrows) {
        os << (first ? "" : ", ") << "(" << i + 1 << "," << j + 1 << ")";
        first = false;
    }
    os << "}, fundamental roots";
    for (const Vec& f : res.fundamental)
        os << " " << vec_str(f);
    return os.str();
}

// Coordinates of target in the basis (all in ambient coordinates); the
// basis is linearly independent and target lies in its span.
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& target) {
    size_t m = target.size(), n = basis.size();
    std::vector<Vec> a(m, Vec(n + 1, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i)
            a[i][j] = basis[j][i];
    for (size_t i = 0; i < m; ++i)
        a[i][n] = target[i];
    std::vector<size_t> pivot_row(n);
    size_t row = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t p = row;
        while (p < m && a[p][col].is_zero())
            ++p;
        if (p == m)
            throw StructuralError("fundamental restricted roots are dependent");
        std::swap(a[row], a[p]);
        for (size_t k = 0; k < m; ++k) {
            if (k == row || a[k][col].is_zero())
                continue;
            Rat f = a[k][col] / a[row][col];
            for (size_t j = col; j <= n; ++j)
                a[k][j] -= f * a[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (size_t k = row; k < m; ++k)
        if (!a[k][n].is_zero())
            throw StructuralError("vector outside the restricted span");
    Vec x(n);
    for (size_t col = 0; col < n; ++col)
        x[col] = a[pivot_row[col]][n] / a[pivot_row[col]][col];
    return x;
}

} // namespace

RestrictionResult run_recipe(const AmbientData& amb) {
    RestrictionResult res = restrict_ambient(amb);
    if (res.rank == 0)
        throw InputError(
            "every ambient root restricts to zero (degenerate input); the "
            "recipe needs a nonzero restricted system");
    const RootSystem& rs = amb.system;

    std::vector<Vec> pos;
    for (const Vec& lambda : res.restricted)
        if (vec_is_positive(lambda))
            pos.push_back(lambda);
    std::set<Vec> posset(pos.begin(), pos.end());
    for (const Vec& lambda : pos) {
        bool sum = false;
        for (const Vec& mu : pos) {
            if (posset.count(vec_sub(lambda, mu))) { // covers lambda = mu + mu
                sum = true;
                break;
            }
        }
        if (!sum)
            res.fundamental.push_back(lambda);
    }
    if ((int)res.fundamental.size() != res.rank)
        throw StructuralError("found " + std::to_string(res.fundamental.size()) +
                              " fundamental restricted roots in a system of rank " +
                              std::to_string(res.rank));

    // Step 3/4 quantity per fiber, with the representative-independence
    // check over every fiber.
    Rat quarter(1, 4);
    std::map<Vec, Vec> step_value;
    for (const auto& [lambda, fiber] : res.fibers) {
        bool have = false;
        Vec q;
        for (const Root& alpha : fiber) {
            Vec va = root_to_vec(alpha);
            Vec sa = mat_apply(amb.sigma.matrix, va);
            Vec ta = mat_apply(amb.theta.matrix, va);
            Vec sta = mat_apply(amb.sigma.matrix, ta);
            Vec qa = vec_scale(quarter,
                               vec_add(vec_sub(va, sa), vec_sub(sta, ta)));
            if (!have) {
                q = qa;
                have = true;
            } else if (qa != q) {
                throw StructuralError(
                    "step 3/4 value depends on the representative within the "
                    "fiber of " + vec_str(lambda));
            }
        }
        step_value[lambda] = q;
    }

    std::map<Vec, std::vector<int>> white_groups;
    for (int i = 0; i < res.rank; ++i) {
        const Vec& q = step_value.at(res.fundamental[i]);
        if (vec_is_zero(q))
            res.black.insert(i);
        else
            white_groups[q].push_back(i);
    }
    for (const auto& [q, members] : white_groups) {
        if (members.size() > 2) {
            std::ostringstream os;
            os << "step-4 value " << vec_str(q) << " shared by "
               << members.size() << " white nodes; arrows must pair";
            throw StructuralError(os.str());
        }
        if (members.size() == 2)
            res.arrows.push_back({members[0], members[1]});
    }
    std::sort(res.arrows.begin(), res.arrows.end());
    res.split_rank = (int)white_groups.size();

    // Shape recognition against the standard diagrams at (rank, split).
    Shape mine = computed_shape(res, rs);
    std::optional<SatakeDiagram> primary;
    std::vector<int> primary_map;
    for (const std::string& label : standard_labels()) {
        SatakeDiagram d;
        try {
            d = standard_diagram(label, res.rank, res.split_rank);
        } catch (const InputError&) {
            continue;
        }
        std::vector<int> perm;
        if (!find_isomorphism(mine, standard_shape(d), &perm))
            continue;
        res.candidates.push_back({label, res.rank, res.split_rank});
        if (!primary) {
            primary = d;
            primary_map = perm;
        }
    }
    if (!primary)
        throw StructuralError("unrecognizable restricted diagram: " +
                              shape_diagnostic(res));
    res.diagram = primary;

    // The dual (-theta) on the restricted system, expressed in the
    // recognized simple-root basis, must validate against the diagram.
    std::set<Vec> rset(res.restricted.begin(), res.restricted.end());
    for (const Vec& lambda : res.restricted)
        if (!rset.count(mat_apply(amb.theta.matrix, lambda)))
            throw StructuralError("theta does not preserve the restricted set");
    std::vector<Vec> basis(res.rank);
    for (int j = 0; j < res.rank; ++j)
        basis[j] = res.fundamental[primary_map[j]];
    Mat dual = mat_identity(res.rank);
    for (int j = 0; j < res.rank; ++j)
        mat_set_col(dual, j,
                    coords_in_basis(basis,
                                    vec_neg(mat_apply(amb.theta.matrix, basis[j]))));
    ValidationReport rep = validate(*res.diagram, dual);
    if (!rep.ok())
        throw StructuralError("recipe output failed Satake validation: " +
                              rep.summary());
    return res;
}

ordered_json restriction_to_json(const RestrictionResult& res) {
    if (!res.diagram)
        throw InputError("serialization requires a full recipe run");
    ordered_json o = diagram_to_json(*res.diagram);
    o["rank"] = res.rank;
    o["split_rank"] = res.split_rank;
    ordered_json mult;
    for (const Vec& lambda : res.restricted)
        mult[vec_str(lambda)] = res.multiplicity(lambda);
    o["multiplicities"] = mult;
    return o;
}

bool verify_against_catalog(const Catalog& cat, const RestrictionResult& res,
                            const CatalogEntry& entry, const Bindings& params,
                            std::string* diff) {
    Catalog::Instantiated want = cat.instantiate(entry, params);
    bool label_ok = false;
    for (const auto& c : res.candidates)
        label_ok = label_ok || c.label == want.label;
    bool rank_ok = res.rank == want.r;
    bool split_ok = res.split_rank == want.l;
    if (diff) {
        std::ostringstream os;
        if (!label_ok) {
            os << "label: computed " << (res.diagram ? res.diagram->label : "?");
            if (res.candidates.size() > 1) {
                os << " (candidates";
                for (const auto& c : res.candidates)
                    os << " " << c.label;
                os << ")";
            }
            os << ", catalog " << want.label;
        }
        if (!rank_ok)
            os << (os.str().empty() ? "" : "; ") << "rank: computed " << res.rank
               << ", catalog " << want.r;
        if (!split_ok)
            os << (os.str().empty() ? "" : "; ") << "split_rank: computed "
               << res.split_rank << ", catalog " << want.l;
        *diff = os.str();
    }
    return label_ok && rank_ok && split_ok;
}

} // namespace rootlab
