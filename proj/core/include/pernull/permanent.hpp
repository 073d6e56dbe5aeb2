#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pernull/error.hpp"
#include "pernull/graph.hpp"

namespace pernull {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kPermanentLimit = 24;
inline constexpr std::size_t kInterpolationLimit = 14;
inline constexpr std::size_t kSachsLimit = 20;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    /// x*I - A(g).
    static IntMatrix shifted_adjacency(const Graph& g, long long x);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Ryser's formula with Gray-code column updates. per of the 0x0 matrix is 1.
BigInt permanent(const IntMatrix& m, Guard guard = Guard::Enforce);

/// Coefficients of per(xI - A(G)) = sum_k b_k x^(n-k); coeffs[k] holds b_k.
struct PermPolynomial {
    std::vector<BigInt> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    /// Multiplicity of the root 0: the number of trailing zero coefficients.
    std::size_t zero_root_multiplicity() const;

    /// "x^3 + 3x - 2" style rendering.
    std::string to_string() const;

    friend bool operator==(const PermPolynomial&, const PermPolynomial&) = default;
};

/// Product of two monic polynomials in the b_k convention.
PermPolynomial multiply(const PermPolynomial& a, const PermPolynomial& b);

/// Evaluates per(xI - A) at x = 0..n with Ryser and recovers the coefficients
/// by exact rational interpolation. Throws InvariantViolation if a coefficient
/// comes out non-integral.
PermPolynomial perm_polynomial_interpolation(const Graph& g, Guard guard = Guard::Enforce);

/// b_k = (-1)^k * sum over Sachs subgraphs H on k vertices of 2^c(H), where
/// c(H) counts cycles. Branches on the lowest undecided vertex: leave it out,
/// pair it with a neighbor, or close a cycle whose minimum vertex it is.
/// Subproblems are memoized on the set of undecided vertices.
PermPolynomial perm_polynomial_sachs(const Graph& g, Guard guard = Guard::Enforce);

/// Per-nullity read off the Sachs coefficients.
std::size_t per_nullity_oracle(const Graph& g, Guard guard = Guard::Enforce);

/// Spanning subgraph whose components are single edges and cycles.
struct SachsSubgraph {
    VertexSet covered;
    std::vector<Edge> edges;
    std::vector<CycleInfo> cycles;

    std::size_t order() const noexcept { return covered.size(); }
    std::size_t cycle_count() const noexcept { return cycles.size(); }
};

/// True iff s is a Sachs subgraph of g: vertex-disjoint edges and cycles of g
/// whose union is exactly s.covered.
bool is_sachs_subgraph_of(const SachsSubgraph& s, const Graph& g);

/// A Sachs subgraph covering the most vertices, by branch and bound.
SachsSubgraph max_sachs_subgraph(const Graph& g, Guard guard = Guard::Enforce);

}  // namespace pernull
