#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rootlab/errors.hpp"

namespace rootlab {

// Exact rational number on checked 64-bit numerator/denominator.
// Always normalized: den > 0, gcd(|num|, den) = 1.  Intermediate products
// run through 128-bit integers and throw OverflowError if the reduced value
// does not fit; no silent wraparound, no floating point anywhere.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Integer value; throws unless den == 1.
    long long as_integer() const {
        if (den_ != 1)
            throw InputError("expected an integer, got " + str());
        return num_;
    }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0)
            throw InputError("division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 lhs = i128(a.num_) * b.den_;
        i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or "p" when q = 1.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "p", "p/q", optional leading sign, nothing else.
    static Rat parse(std::string_view s) {
        size_t i = 0;
        auto fail = [&] { throw InputError("bad rational '" + std::string(s) + "'"); };
        if (s.empty()) fail();
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail();
        long long n = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            if (n > (INT64_MAX - 9) / 10) throw OverflowError("rational literal too large");
            n = n * 10 + (s[i] - '0');
            ++i;
        }
        long long d = 1;
        if (i < s.size()) {
            if (s[i] != '/') fail();
            ++i;
            if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail();
            d = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                if (d > (INT64_MAX - 9) / 10) throw OverflowError("rational literal too large");
                d = d * 10 + (s[i] - '0');
                ++i;
            }
            if (i != s.size()) fail();
        }
        return Rat(neg ? -n : n, d);
    }

private:
    using i128 = __int128;

    long long num_;
    long long den_;

    void assign(long long n, long long d) {
        if (d == 0)
            throw InputError("zero denominator");
        *this = from_i128(i128(n), i128(d));
    }

    static i128 abs128(i128 v) { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rat from_i128(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            Rat r;
            return r;
        }
        i128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw OverflowError("rational overflow");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
};

// Rational column vector in simple-root coordinates.
using Vec = std::vector<Rat>;

// Rational matrix, row major: m[i][j], image of basis vector e_j is column j.
using Mat = std::vector<Vec>;

inline bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_neg(const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline Vec vec_scale(const Rat& c, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = c * v[i];
    return out;
}

inline Mat mat_identity(size_t n) {
    Mat m(n, Vec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = Rat(1);
    return m;
}

inline Mat mat_neg(const Mat& m) {
    Mat out = m;
    for (auto& row : out)
        for (auto& x : row)
            x = -x;
    return out;
}

// m * v with the row-major convention above.
inline Vec mat_apply(const Mat& m, const Vec& v) {
    size_t n = m.size();
    Vec out(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!v[j].is_zero() && !m[i][j].is_zero())
                out[i] += m[i][j] * v[j];
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size();
    Mat out(n, Vec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (!a[i][k].is_zero())
                for (size_t j = 0; j < n; ++j)
                    if (!b[k][j].is_zero())
                        out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Vec mat_col(const Mat& m, size_t j) {
    Vec out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        out[i] = m[i][j];
    return out;
}

inline void mat_set_col(Mat& m, size_t j, const Vec& v) {
    for (size_t i = 0; i < m.size(); ++i)
        m[i][j] = v[i];
}

// Dimension of the span of a family of rational vectors (Gaussian elimination).
inline int span_dimension(std::vector<Vec> vs) {
    int rank = 0;
    size_t dim = vs.empty() ? 0 : vs[0].size();
    size_t row = 0;
    for (size_t col = 0; col < dim && row < vs.size(); ++col) {
        size_t pivot = row;
        while (pivot < vs.size() && vs[pivot][col].is_zero())
            ++pivot;
        if (pivot == vs.size())
            continue;
        std::swap(vs[row], vs[pivot]);
        for (size_t k = 0; k < vs.size(); ++k) {
            if (k == row || vs[k][col].is_zero())
                continue;
            Rat f = vs[k][col] / vs[row][col];
            for (size_t j = col; j < dim; ++j)
                vs[k][j] -= f * vs[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

struct VecHash {
    size_t operator()(const Vec& v) const {
        size_t h = 1469598103934665603ull;
        for (const Rat& x : v) {
            h = (h ^ std::hash<long long>()(x.num())) * 1099511628211ull;
            h = (h ^ std::hash<long long>()(x.den())) * 1099511628211ull;
        }
        return h;
    }
};

} // namespace rootlab
