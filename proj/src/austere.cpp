#include "rootlab/austere.hpp"

#include <algorithm>
#include <map>

namespace rootlab {

namespace {

Rat gram_inner(const Mat& gram, const Vec& a, const Vec& b) {
    size_t n = gram.size();
    Rat s(0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < n; ++j)
            if (!b[j].is_zero() && !gram[i][j].is_zero())
                s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

Vec root_to_vec(const Root& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(v[i]);
    return out;
}

BasePoint checked_point(const Mat& gram, const Vec& coords) {
    if (coords.size() != gram.size())
        throw InputError("base point dimension mismatch");
    if (vec_is_zero(coords))
        throw InputError("base point must be nonzero");
    if (!(gram_inner(gram, coords, coords) > Rat(0)))
        throw InputError("base point needs B(X,X) > 0");
    return BasePoint{coords};
}

} // namespace

BasePoint make_base_point(const RootSystem& rs, const Vec& coords) {
    return checked_point(rs.gram(), coords);
}

BasePoint make_base_point(const Mat& gram, const Vec& coords) {
    return checked_point(gram, coords);
}

BasePoint root_vector(const RootSystem& rs, const Root& alpha) {
    if (!rs.is_root(alpha))
        throw InputError(root_str(alpha) + " is not a root");
    return BasePoint{root_to_vec(alpha)};
}

MultiplicityMap unit_multiplicity() {
    return [](const Root&) { return 1; };
}

std::vector<std::pair<Vec, int>> austere_multiset_with_gram(
    const Mat& gram, const std::vector<Root>& positives, const BasePoint& x,
    const MultiplicityMap& m) {
    Rat bxx = gram_inner(gram, x.coords, x.coords);
    std::map<Vec, int> acc;
    for (const Root& a : positives) {
        Vec av = root_to_vec(a);
        Rat ax = gram_inner(gram, av, x.coords);
        if (ax.is_zero())
            continue;
        int count = m(a);
        if (count <= 0)
            throw InputError("multiplicities must be positive");
        Rat scale = Rat(-1) / ax;
        Rat proj = ax / bxx;
        Vec v(av.size());
        for (size_t i = 0; i < av.size(); ++i)
            v[i] = scale * (av[i] - proj * x.coords[i]);
        acc[v] += count;
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::pair<Vec, int>> austere_multiset(const RootSystem& rs,
                                                  const BasePoint& x,
                                                  const MultiplicityMap& m) {
    return austere_multiset_with_gram(rs.gram(), rs.positives(), x, m);
}

AustereReport is_austere_with_gram(const Mat& gram,
                                   const std::vector<Root>& positives,
                                   const BasePoint& x, const MultiplicityMap& m) {
    AustereReport rep;
    rep.x = x.coords;
    rep.multiset = austere_multiset_with_gram(gram, positives, x, m);

    std::map<Vec, int> index;
    for (size_t i = 0; i < rep.multiset.size(); ++i)
        index[rep.multiset[i].first] = (int)i;

    rep.verdict = true;
    for (const auto& [v, count] : rep.multiset) {
        Vec nv = vec_neg(v);
        auto it = index.find(nv);
        int other = it == index.end() ? 0 : rep.multiset[it->second].second;
        if (other != count) {
            rep.verdict = false;
            rep.failing = v;
            rep.pairing.clear();
            return rep;
        }
    }
    // Complete pairing witness: each element paired with its negation, the
    // zero vector with itself, reported once per unordered pair.
    for (size_t i = 0; i < rep.multiset.size(); ++i) {
        const Vec& v = rep.multiset[i].first;
        if (vec_is_zero(v)) {
            rep.pairing.push_back({(int)i, (int)i});
            continue;
        }
        int j = index.at(vec_neg(v));
        if ((int)i <= j)
            rep.pairing.push_back({(int)i, j});
    }
    return rep;
}

AustereReport is_austere(const RootSystem& rs, const BasePoint& x,
                         const MultiplicityMap& m) {
    return is_austere_with_gram(rs.gram(), rs.positives(), x, m);
}

std::vector<Rat> shape_spectrum(const RootSystem& rs, const BasePoint& x,
                                const Vec& xi, const MultiplicityMap& m) {
    if (xi.size() != x.coords.size())
        throw InputError("xi dimension mismatch");
    if (!rs.inner(xi, x.coords).is_zero())
        throw InputError("spectrum requires B(xi, X) = 0");
    std::vector<Rat> out;
    for (const Root& a : rs.positives()) {
        Rat ax = rs.inner(a, x.coords);
        if (ax.is_zero())
            continue;
        Rat value = -rs.inner(a, xi) / ax;
        int count = m(a);
        if (count <= 0)
            throw InputError("multiplicities must be positive");
        for (int k = 0; k < count; ++k)
            out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SurveyReport austere_orbit_survey(const SatakeDiagram& d, const Involution& inv) {
    if (!inv.validated)
        throw InputError("survey requires a validated involution");
    SurveyReport rep;
    RootSet real = real_roots(d.rs, inv);
    RootSet imag = imaginary_roots(d.rs, inv);
    MultiplicityMap unit = unit_multiplicity();
    for (const Root& a : real.members) {
        AustereReport r = is_austere(d.rs, root_vector(d.rs, a), unit);
        rep.sphere.push_back({a, r.verdict});
    }
    rep.hyperbolic = imag.members;
    return rep;
}

} // namespace rootlab
