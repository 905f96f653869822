#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pachner {

class FacetComplex;

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (f_-1, f_0, ..., f_n) where f_-1 is half the Euler characteristic.
///
/// Vectors read off a complex are nonnegative and satisfy
/// f_-1 = chi / 2. Vectors produced by virtual moves carry `is_virtual` and
/// may be anything.
template <class T>
struct BasicFVector {
    int n = -1;
    Rational f_minus1 = 0;
    std::vector<T> f; // f[k] = f_k, k = 0..n
    bool is_virtual = false;

    /// Index -1 reads the f_-1 slot.
    Rational at(int k) const { return k < 0 ? f_minus1 : Rational(f[k]); }

    friend bool operator==(const BasicFVector& a, const BasicFVector& b)
    {
        return a.n == b.n && a.f_minus1 == b.f_minus1 && a.f == b.f;
    }
};

using FVector = BasicFVector<Integer>;
using RationalFVector = BasicFVector<Rational>;

FVector f_vector(const FacetComplex& c);
/// The f-vector of the empty boundary of a closed n-complex: dimension n - 1, all zero.
FVector zero_fvector(int n);
RationalFVector to_rational(const FVector& fv);
/// Throws VerificationFailed if any entry is not an integer.
FVector to_integral(const RationalFVector& fv);

/// Sum of (-1)^k f_k.
Rational alternating_sum(const RationalFVector& fv);

/// Comma separated f_0..f_n, optionally prefixed by "chi/2=<r>,".
std::string format_fvector(const FVector& fv, bool with_chi = false);
std::string format_fvector(const RationalFVector& fv, bool with_chi = false);
/// Inverse of format_fvector. Without the chi prefix, f_-1 is chi / 2.
FVector parse_fvector(std::string_view text);

/// binom(a, b), zero unless 0 <= b <= a.
Integer binomial(int a, int b);

/// Largest move type in the canonical lower half, floor((n-1)/2); -1 for n = 0.
int lower_half(int n);

struct DVector {
    int n;
    int i;
    std::vector<Integer> d; // d[k] = d_{k,i}
};

/// f-vector change caused by one bistellar i-move in dimension n.
DVector d_vector(int n, int i);

/// Residual of the closed Dehn-Sommerville system, rows i = -1..n stored at
/// index i + 1. Zero iff the system holds.
std::vector<Rational> ds_residual_closed(const RationalFVector& fv);
std::vector<Rational> ds_residual_closed(const FVector& fv);
/// Residual of the system for a manifold with boundary. fv_boundary has
/// dimension n - 1 (an empty boundary is allowed as zero_fvector(n)).
std::vector<Rational> ds_residual_boundary(const RationalFVector& fv, const RationalFVector& fv_boundary);
std::vector<Rational> ds_residual_boundary(const FVector& fv, const FVector& fv_boundary);
bool is_zero(const std::vector<Rational>& residual);

/// Universal coefficients with f_i = sum_j q(i, j) f_j for the upper rows
/// i = floor((n+1)/2)..n and columns j = -1..floor((n-1)/2).
struct QMatrix {
    int n;
    int first_row;
    int last_col;
    std::vector<std::vector<Integer>> q; // q[i - first_row][j + 1]

    const Integer& at(int i, int j) const { return q[i - first_row][j + 1]; }
};

QMatrix q_matrix(int n);

/// Completes (f_-1, ..., f_{floor((n-1)/2)}) to a full vector via q_matrix.
RationalFVector complete_f(const std::vector<Rational>& lower, int n);

/// f(M) - f(dM) / 2 entrywise, the f_-1 slot included.
RationalFVector hat_f(const FVector& fv, const FVector& fv_boundary);

/// Signed move counts x_0..x_{floor((n-1)/2)}: x_i > 0 means x_i i-moves,
/// x_i < 0 means |x_i| (n-i)-moves.
struct VirtualMovePlan {
    int n = 0;
    std::vector<Integer> x;

    Integer total_moves() const;
    /// Move types in firing order: ascending i, each repeated |x_i| times.
    std::vector<int> move_types() const;
    VirtualMovePlan negated() const;
    /// "0:+8; N=8", or "N=0" for the empty plan.
    std::string to_string() const;

    friend bool operator==(const VirtualMovePlan&, const VirtualMovePlan&) = default;
};

VirtualMovePlan solve_virtual_plan(const RationalFVector& src, const RationalFVector& dst);
VirtualMovePlan solve_virtual_plan(const FVector& src, const FVector& dst);

RationalFVector apply_virtual(const RationalFVector& fv, const VirtualMovePlan& plan);
FVector apply_virtual(const FVector& fv, const VirtualMovePlan& plan);

} // namespace pachner
