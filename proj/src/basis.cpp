#include "qmcstab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qmcstab/csv.hpp"

namespace qmcstab {

namespace {

void trim(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

void check_degree(int n) {
    if (n < 0) throw std::invalid_argument("shifted_legendre: degree must be >= 0");
    if (n > kMaxLegendreDegree)
        throw std::invalid_argument("shifted_legendre: degree exceeds cap " +
                                    std::to_string(kMaxLegendreDegree));
}

// Coefficients of (2x-1) * p.
std::vector<double> mul_affine(const std::vector<double>& p) {
    std::vector<double> r(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k + 1] += 2.0 * p[k];
        r[k] -= p[k];
    }
    return r;
}

}  // namespace

int Poly1D::degree() const { return static_cast<int>(coeffs.size()) - 1; }

double Poly1D::eval(double x) const {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

Poly1D poly_add(const Poly1D& p, const Poly1D& q) {
    std::vector<double> c(std::max(p.coeffs.size(), q.coeffs.size()), 0.0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) c[k] += p.coeffs[k];
    for (std::size_t k = 0; k < q.coeffs.size(); ++k) c[k] += q.coeffs[k];
    trim(c);
    return Poly1D{std::move(c)};
}

Poly1D poly_mul(const Poly1D& p, const Poly1D& q) {
    std::vector<double> c(p.coeffs.size() + q.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
    trim(c);
    return Poly1D{std::move(c)};
}

Poly1D poly_scale(const Poly1D& p, double s) {
    std::vector<double> c = p.coeffs;
    for (double& v : c) v *= s;
    trim(c);
    return Poly1D{std::move(c)};
}

Poly1D poly_derivative(const Poly1D& p) {
    if (p.coeffs.size() <= 1) return Poly1D{{0.0}};
    std::vector<double> c(p.coeffs.size() - 1);
    for (std::size_t k = 1; k < p.coeffs.size(); ++k)
        c[k - 1] = static_cast<double>(k) * p.coeffs[k];
    trim(c);
    return Poly1D{std::move(c)};
}

Poly1D shifted_legendre(int n) {
    check_degree(n);
    // (k+1) Lt_{k+1} = (2k+1)(2x-1) Lt_k - k Lt_{k-1}, Lt_0 = 1, Lt_1 = 2x-1.
    std::vector<double> prev{1.0};
    if (n == 0) return Poly1D{prev};
    std::vector<double> cur{-1.0, 2.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next = mul_affine(cur);
        for (double& v : next) v *= static_cast<double>(2 * k + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= static_cast<double>(k) * prev[j];
        for (double& v : next) v /= static_cast<double>(k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return poly_scale(Poly1D{cur}, std::sqrt(static_cast<double>(2 * n + 1)));
}

std::vector<double> shifted_legendre_values(int max_degree, double x) {
    check_degree(max_degree);
    std::vector<double> vals(static_cast<std::size_t>(max_degree) + 1);
    const double t = 2.0 * x - 1.0;
    double prev = 1.0;
    vals[0] = 1.0;
    if (max_degree == 0) return vals;
    double cur = t;
    vals[1] = std::sqrt(3.0) * cur;
    for (int k = 1; k < max_degree; ++k) {
        const double next =
            (static_cast<double>(2 * k + 1) * t * cur - static_cast<double>(k) * prev) /
            static_cast<double>(k + 1);
        prev = cur;
        cur = next;
        vals[k + 1] = std::sqrt(static_cast<double>(2 * k + 3)) * cur;
    }
    return vals;
}

double shifted_legendre_value(int n, double x) {
    return shifted_legendre_values(n, x)[static_cast<std::size_t>(n)];
}

int MultiIndex::total_degree() const {
    int d = 0;
    for (int i : indices) d += i;
    return d;
}

namespace {

// All compositions of total degree d into s parts, lexicographic order.
void append_degree_block(int s, int d, std::vector<int>& scratch, int pos, int remaining,
                         std::vector<MultiIndex>& out) {
    if (pos == s - 1) {
        scratch[pos] = remaining;
        out.push_back(MultiIndex{scratch});
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        scratch[pos] = v;
        append_degree_block(s, d, scratch, pos + 1, remaining - v, out);
    }
}

}  // namespace

std::vector<MultiIndex> graded_index_set(int s, std::size_t m) {
    if (s < 1) throw std::invalid_argument("graded_index_set: dimension must be >= 1");
    if (m < 1) throw std::invalid_argument("graded_index_set: m must be >= 1");
    std::vector<MultiIndex> out;
    std::vector<int> scratch(static_cast<std::size_t>(s), 0);
    for (int d = 0; out.size() < m; ++d) append_degree_block(s, d, scratch, 0, d, out);
    out.resize(m);
    return out;
}

std::vector<MultiIndex> graded_index_set_capped(int s, int max_degree) {
    if (s < 1) throw std::invalid_argument("graded_index_set: dimension must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("graded_index_set: negative degree cap");
    std::vector<MultiIndex> out;
    std::vector<int> scratch(static_cast<std::size_t>(s), 0);
    for (int d = 0; d <= max_degree; ++d) append_degree_block(s, d, scratch, 0, d, out);
    return out;
}

TensorBasis TensorBasis::first_m(int s, std::size_t m) {
    return TensorBasis{s, graded_index_set(s, m)};
}

TensorBasis TensorBasis::up_to_degree(int s, int max_degree) {
    return TensorBasis{s, graded_index_set_capped(s, max_degree)};
}

int TensorBasis::max_1d_degree() const {
    int d = 0;
    for (const auto& mi : index_set)
        for (int i : mi.indices) d = std::max(d, i);
    return d;
}

double eval_tensor(const TensorBasis& basis, std::size_t j, std::span<const double> x) {
    if (j >= basis.size()) throw std::invalid_argument("eval_tensor: basis position out of range");
    if (static_cast<int>(x.size()) != basis.dimension)
        throw std::invalid_argument("eval_tensor: point dimension mismatch");
    const MultiIndex& mi = basis.index_set[j];
    double v = 1.0;
    for (int c = 0; c < basis.dimension; ++c)
        v *= shifted_legendre_value(mi.indices[static_cast<std::size_t>(c)], x[c]);
    return v;
}

void write_basis_csv(const TensorBasis& basis, std::ostream& out) {
    out << "position,multi_index,total_degree\n";
    for (std::size_t j = 0; j < basis.size(); ++j) {
        out << j << ',';
        const auto& idx = basis.index_set[j].indices;
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (c) out << ' ';
            out << idx[c];
        }
        out << ',' << basis.index_set[j].total_degree() << "\n";
    }
}

}  // namespace qmcstab
