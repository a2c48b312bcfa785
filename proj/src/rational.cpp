#include "polyforge/rational.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyforge {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rat(boost::multiprecision::mpz_int(text));
        }
        boost::multiprecision::mpz_int num(text.substr(0, slash));
        boost::multiprecision::mpz_int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational literal: " + text);
        Rat q(num);
        q /= Rat(den);
        return q;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: " + text);
    }
}

std::string rational_to_string(const Rat& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
    return os.str();
}

std::string rational_to_decimal(const Rat& q, int digits) {
    using boost::multiprecision::mpz_int;
    mpz_int num = boost::multiprecision::numerator(q);
    mpz_int den = boost::multiprecision::denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_int ip = num / den;
    mpz_int rem = num % den;
    std::ostringstream os;
    if (neg && (ip != 0 || rem != 0)) os << '-';
    os << ip;
    if (digits > 0) {
        os << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << (rem / den);
            rem %= den;
        }
    }
    return os.str();
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw IntegrityError("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw IntegrityError("sub: dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw IntegrityError("add: dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

int matrix_rank(RatMat rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return matrix_rank(std::move(diffs));
}

RatVec solve_linear(RatMat a, RatVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw IntegrityError("solve_linear: non-square system");
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw IntegrityError("solve_linear: singular system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

RatVec nullspace_vector(const RatMat& rows, int dim) {
    // Reduce to row echelon form, then back-substitute with the free column
    // pinned to 1. Requires a one-dimensional nullspace.
    RatMat m = rows;
    std::vector<int> pivot_col;
    size_t row = 0;
    for (int col = 0; col < dim && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (int c = 0; c < dim; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) != dim - 1)
        throw IntegrityError("nullspace_vector: nullity is not 1");
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < dim; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    RatVec x(dim, Rat(0));
    x[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        int pc = pivot_col[r];
        x[pc] = -m[r][free_col] / m[r][pc];
    }
    return x;
}

RatVec AffineChart::to_chart(const RatVec& ambient) const {
    // Solve sum t_i basis_i = ambient - origin; the system is consistent by
    // construction (all chart inputs lie in the span). Solved via the normal
    // equations, which are exact over the rationals.
    int d = dim();
    RatVec rhs = sub(ambient, origin);
    RatMat gram(d, RatVec(d));
    RatVec g(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) gram[i][j] = dot(basis[i], basis[j]);
        g[i] = dot(basis[i], rhs);
    }
    RatVec t = solve_linear(gram, g);
    // Consistency check: the solution must reproduce the ambient point.
    RatVec back = origin;
    for (int i = 0; i < d; ++i) back = add(back, scale(basis[i], t[i]));
    if (back != ambient) throw IntegrityError("to_chart: point outside affine span");
    return t;
}

RatVec AffineChart::from_chart(const RatVec& chart) const {
    RatVec p = origin;
    for (int i = 0; i < dim(); ++i) p = add(p, scale(basis[i], chart[i]));
    return p;
}

AffineChart build_chart(const std::vector<RatVec>& points) {
    if (points.empty()) throw ValidationError("build_chart: no points");
    AffineChart chart;
    chart.origin = points[0];
    chart.basis_points.push_back(0);
    RatMat rows;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d = sub(points[i], points[0]);
        rows.push_back(d);
        if (matrix_rank(rows) == static_cast<int>(chart.basis.size()) + 1) {
            chart.basis.push_back(d);
            chart.basis_points.push_back(static_cast<int>(i));
        } else {
            rows.pop_back();
        }
    }
    return chart;
}

int Hyperplane::side(const RatVec& p) const {
    Rat v = dot(normal, p) - offset;
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

Hyperplane hyperplane_through(const std::vector<RatVec>& points, const RatVec& below) {
    if (points.empty()) throw IntegrityError("hyperplane_through: no points");
    int dim = static_cast<int>(points[0].size());
    RatMat diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    Hyperplane h;
    h.normal = nullspace_vector(diffs, dim);
    h.offset = dot(h.normal, points[0]);
    int s = h.side(below);
    if (s == 0) throw IntegrityError("hyperplane_through: reference point on hyperplane");
    if (s > 0) {
        for (auto& c : h.normal) c = -c;
        h.offset = -h.offset;
    }
    return h;
}

std::vector<Rat> hyperplane_key(const Hyperplane& h) {
    std::vector<Rat> key = h.normal;
    key.push_back(h.offset);
    Rat lead = 0;
    for (const Rat& c : h.normal) {
        if (c != 0) { lead = c; break; }
    }
    if (lead == 0) throw IntegrityError("hyperplane_key: zero normal");
    Rat a = lead < 0 ? Rat(-lead) : lead;
    for (auto& c : key) c /= a;
    return key;
}

} // namespace polyforge
