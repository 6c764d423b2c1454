#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace qmcstab {

// Dense univariate polynomial in the monomial basis, coeffs[k] * x^k.
struct Poly1D {
    std::vector<double> coeffs{0.0};

    int degree() const;
    double eval(double x) const;  // Horner
    static Poly1D constant(double c) { return Poly1D{{c}}; }
};

Poly1D poly_add(const Poly1D& p, const Poly1D& q);
Poly1D poly_mul(const Poly1D& p, const Poly1D& q);
Poly1D poly_scale(const Poly1D& p, double s);
Poly1D poly_derivative(const Poly1D& p);

// Monomial coefficients of high-degree Legendre polynomials exhaust double
// precision; constructions beyond this degree are refused.
inline constexpr int kMaxLegendreDegree = 64;

// sqrt(2n+1) * L_n(2x-1): orthonormal on [0,1] with positive leading
// coefficient. Coefficients built by the three-term recurrence.
Poly1D shifted_legendre(int n);

// p_0(x) .. p_max_degree(x) by the value recurrence; stable at high degree
// where the monomial form is not.
std::vector<double> shifted_legendre_values(int max_degree, double x);
double shifted_legendre_value(int n, double x);

struct MultiIndex {
    std::vector<int> indices;

    int total_degree() const;
    bool operator==(const MultiIndex&) const = default;
};

// First m multi-indices in graded-lexicographic order (total degree
// ascending, ties lexicographic).
std::vector<MultiIndex> graded_index_set(int s, std::size_t m);
// All multi-indices of total degree <= max_degree, same order.
std::vector<MultiIndex> graded_index_set_capped(int s, int max_degree);

// Tensor products of the 1D orthonormal family over a graded index set.
struct TensorBasis {
    int dimension = 1;
    std::vector<MultiIndex> index_set;

    static TensorBasis first_m(int s, std::size_t m);
    static TensorBasis up_to_degree(int s, int max_degree);

    std::size_t size() const { return index_set.size(); }
    int max_1d_degree() const;
};

double eval_tensor(const TensorBasis& basis, std::size_t j, std::span<const double> x);

// Exact L^2([0,1]) inner products via rational coefficient convolution and
// integral x^k -> 1/(k+1); the tensor overload multiplies per-coordinate
// integrals. Double coefficients convert to rationals without rounding.
double inner_product_exact(const Poly1D& p, const Poly1D& q);
double inner_product_exact(const std::vector<Poly1D>& p_factors,
                           const std::vector<Poly1D>& q_factors);

// Same integrals for the orthonormal family itself, carried out on the exact
// integer-coefficient representation (no double rounding anywhere).
double legendre_inner_product_exact(int i, int j);
double legendre_tensor_inner_product_exact(const MultiIndex& a, const MultiIndex& b);

// CSV with header position,multi_index,total_degree.
void write_basis_csv(const TensorBasis& basis, std::ostream& out);

}  // namespace qmcstab
