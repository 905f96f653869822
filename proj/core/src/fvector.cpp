#include "pachner/fvector.hpp"

#include <cstdlib>
#include <sstream>

#include "pachner/complex.hpp"
#include "pachner/error.hpp"

namespace pachner {

namespace {

Integer sign(int exponent)
{
    return (exponent % 2 == 0) ? Integer(1) : Integer(-1);
}

bool is_integral(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

std::string rational_string(const Rational& r)
{
    return r.str();
}

template <class T>
std::string format_impl(const BasicFVector<T>& fv, bool with_chi)
{
    std::string out;
    if (with_chi)
        out = "chi/2=" + rational_string(fv.f_minus1) + ",";
    for (std::size_t k = 0; k < fv.f.size(); ++k) {
        if (k)
            out += ',';
        out += fv.f[k].str();
    }
    return out;
}

// Coefficient of f_j in row i of the closed system, i, j in -1..n.
Integer ds_coefficient(int n, int i, int j)
{
    Integer c = (i == j) ? 1 : 0;
    if (j >= i)
        c -= sign(n - j) * binomial(j + 1, i + 1);
    return c;
}

} // namespace

FVector f_vector(const FacetComplex& c)
{
    FVector fv;
    fv.n = c.dim();
    Integer chi = 0;
    const auto counts = face_counts(c);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        fv.f.emplace_back(counts[k]);
        chi += sign(static_cast<int>(k)) * Integer(counts[k]);
    }
    fv.f_minus1 = Rational(chi, 2);
    return fv;
}

FVector zero_fvector(int n)
{
    FVector fv;
    fv.n = n - 1;
    fv.f.assign(n >= 1 ? n : 0, Integer(0));
    return fv;
}

RationalFVector to_rational(const FVector& fv)
{
    RationalFVector out;
    out.n = fv.n;
    out.f_minus1 = fv.f_minus1;
    out.is_virtual = fv.is_virtual;
    for (const Integer& v : fv.f)
        out.f.emplace_back(v);
    return out;
}

FVector to_integral(const RationalFVector& fv)
{
    FVector out;
    out.n = fv.n;
    out.f_minus1 = fv.f_minus1;
    out.is_virtual = fv.is_virtual;
    for (const Rational& v : fv.f) {
        if (!is_integral(v))
            throw Error(ErrorKind::VerificationFailed, "entry " + v.str() + " is not an integer");
        out.f.push_back(boost::multiprecision::numerator(v));
    }
    return out;
}

Rational alternating_sum(const RationalFVector& fv)
{
    Rational chi = 0;
    for (std::size_t k = 0; k < fv.f.size(); ++k)
        chi += Rational(sign(static_cast<int>(k))) * fv.f[k];
    return chi;
}

std::string format_fvector(const FVector& fv, bool with_chi)
{
    return format_impl(fv, with_chi);
}

std::string format_fvector(const RationalFVector& fv, bool with_chi)
{
    return format_impl(fv, with_chi);
}

FVector parse_fvector(std::string_view text)
{
    std::string body(text);
    std::optional<Rational> half_chi;
    if (body.rfind("chi/2=", 0) == 0) {
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::ParseError, "f-vector has no entries");
        try {
            half_chi = Rational(body.substr(6, comma - 6));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad chi/2 value in '" + body + "'");
        }
        body = body.substr(comma + 1);
    }
    FVector fv;
    std::stringstream ss(body);
    std::string item;
    Integer chi = 0;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw Error(ErrorKind::ParseError, "empty f-vector entry in '" + std::string(text) + "'");
        item = item.substr(first, last - first + 1);
        if (item.find_first_not_of("+-0123456789") != std::string::npos)
            throw Error(ErrorKind::ParseError, "bad f-vector entry '" + item + "'");
        Integer v(item);
        chi += sign(static_cast<int>(fv.f.size())) * v;
        fv.f.push_back(v);
    }
    if (fv.f.empty())
        throw Error(ErrorKind::ParseError, "f-vector has no entries");
    fv.n = static_cast<int>(fv.f.size()) - 1;
    fv.f_minus1 = half_chi ? *half_chi : Rational(chi, 2);
    return fv;
}

Integer binomial(int a, int b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    Integer r = 1;
    for (int k = 1; k <= b; ++k)
        r = r * (a - b + k) / k;
    return r;
}

int lower_half(int n)
{
    return n >= 1 ? (n - 1) / 2 : -1;
}

DVector d_vector(int n, int i)
{
    if (n < 0 || i < 0 || i > n)
        throw Error(ErrorKind::BadType, "move type " + std::to_string(i) + " outside [0, " + std::to_string(n) + "]");
    DVector dv{n, i, {}};
    for (int k = 0; k <= n; ++k)
        dv.d.push_back(binomial(n + 1 - i, k - i) - binomial(i + 1, n + 1 - k));
    return dv;
}

std::vector<Rational> ds_residual_closed(const RationalFVector& fv)
{
    const int n = fv.n;
    std::vector<Rational> res;
    for (int i = -1; i <= n; ++i) {
        Rational r = 0;
        for (int j = -1; j <= n; ++j) {
            const Integer c = ds_coefficient(n, i, j);
            if (c != 0)
                r += Rational(c) * fv.at(j);
        }
        res.push_back(r);
    }
    return res;
}

std::vector<Rational> ds_residual_closed(const FVector& fv)
{
    return ds_residual_closed(to_rational(fv));
}

std::vector<Rational> ds_residual_boundary(const RationalFVector& fv, const RationalFVector& fv_boundary)
{
    if (fv_boundary.n != fv.n - 1 || fv_boundary.f.size() != static_cast<std::size_t>(fv.n))
        throw Error(ErrorKind::DimensionMismatch, "boundary f-vector must have dimension " + std::to_string(fv.n - 1));
    std::vector<Rational> res = ds_residual_closed(fv);
    // Subtract f_i(dM); the boundary has no f_n.
    for (int i = -1; i < fv.n; ++i)
        res[i + 1] -= fv_boundary.at(i);
    return res;
}

std::vector<Rational> ds_residual_boundary(const FVector& fv, const FVector& fv_boundary)
{
    return ds_residual_boundary(to_rational(fv), to_rational(fv_boundary));
}

bool is_zero(const std::vector<Rational>& residual)
{
    for (const Rational& r : residual)
        if (r != 0)
            return false;
    return true;
}

QMatrix q_matrix(int n)
{
    if (n < 1)
        throw Error(ErrorKind::UnsupportedDimension, "q_matrix needs n >= 1");
    const int first_row = (n + 1) / 2;
    const int last_col = lower_half(n);
    const int vars = n + 2;

    // Columns: upper unknowns first, then the lower ones.
    std::vector<int> order;
    for (int j = first_row; j <= n; ++j)
        order.push_back(j);
    for (int j = -1; j <= last_col; ++j)
        order.push_back(j);
    const int upper = n - first_row + 1;

    std::vector<std::vector<Rational>> rows;
    for (int i = -1; i <= n; ++i) {
        std::vector<Rational> row;
        for (int j : order)
            row.emplace_back(ds_coefficient(n, i, j));
        rows.push_back(std::move(row));
    }

    // Reduced row echelon form.
    std::size_t pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < vars && pivot_row < rows.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < rows.size() && rows[r][col] == 0)
            ++r;
        if (r == rows.size())
            continue;
        std::swap(rows[r], rows[pivot_row]);
        const Rational p = rows[pivot_row][col];
        for (Rational& v : rows[pivot_row])
            v /= p;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == pivot_row || rows[other][col] == 0)
                continue;
            const Rational factor = rows[other][col];
            for (int c = 0; c < vars; ++c)
                rows[other][c] -= factor * rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    for (int k = 0; k < upper; ++k)
        if (k >= static_cast<int>(pivot_cols.size()) || pivot_cols[k] != k)
            throw Error(ErrorKind::NonIntegralCoefficient,
                        "elimination did not isolate f_" + std::to_string(order[k]));
    if (static_cast<int>(pivot_cols.size()) != upper)
        throw Error(ErrorKind::NonIntegralCoefficient, "unexpected rank of the Dehn-Sommerville system");

    QMatrix qm{n, first_row, last_col, {}};
    for (int k = 0; k < upper; ++k) {
        std::vector<Integer> qrow;
        for (int c = upper; c < vars; ++c) {
            const Rational v = -rows[k][c];
            if (!is_integral(v))
                throw Error(ErrorKind::NonIntegralCoefficient,
                            "q(" + std::to_string(order[k]) + "," + std::to_string(order[c]) + ") = " + v.str());
            qrow.push_back(boost::multiprecision::numerator(v));
        }
        qm.q.push_back(std::move(qrow));
    }
    return qm;
}

RationalFVector complete_f(const std::vector<Rational>& lower, int n)
{
    const QMatrix qm = q_matrix(n);
    if (static_cast<int>(lower.size()) != qm.last_col + 2)
        throw Error(ErrorKind::DimensionMismatch,
                    "need " + std::to_string(qm.last_col + 2) + " lower entries for n = " + std::to_string(n));
    RationalFVector fv;
    fv.n = n;
    fv.f_minus1 = lower[0];
    for (int k = 0; k <= qm.last_col; ++k)
        fv.f.push_back(lower[k + 1]);
    for (int i = qm.first_row; i <= n; ++i) {
        Rational v = 0;
        for (int j = -1; j <= qm.last_col; ++j)
            v += Rational(qm.at(i, j)) * lower[j + 1];
        fv.f.push_back(v);
    }
    return fv;
}

RationalFVector hat_f(const FVector& fv, const FVector& fv_boundary)
{
    if (fv_boundary.n != fv.n - 1)
        throw Error(ErrorKind::DimensionMismatch, "boundary f-vector must have dimension " + std::to_string(fv.n - 1));
    RationalFVector out = to_rational(fv);
    out.f_minus1 -= fv_boundary.f_minus1 / 2;
    for (int k = 0; k < fv.n; ++k)
        out.f[k] -= Rational(fv_boundary.f[k], 2);
    return out;
}

Integer VirtualMovePlan::total_moves() const
{
    Integer total = 0;
    for (const Integer& v : x)
        total += abs(v);
    return total;
}

std::vector<int> VirtualMovePlan::move_types() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int type = x[i] >= 0 ? static_cast<int>(i) : n - static_cast<int>(i);
        for (Integer c = abs(x[i]); c > 0; --c)
            out.push_back(type);
    }
    return out;
}

VirtualMovePlan VirtualMovePlan::negated() const
{
    VirtualMovePlan out = *this;
    for (Integer& v : out.x)
        v = -v;
    return out;
}

std::string VirtualMovePlan::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        out += std::to_string(i) + ":" + (x[i] > 0 ? "+" : "") + x[i].str() + "; ";
    }
    return out + "N=" + total_moves().str();
}

VirtualMovePlan solve_virtual_plan(const RationalFVector& src, const RationalFVector& dst)
{
    if (src.n != dst.n)
        throw Error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(src.n) + " and " + std::to_string(dst.n) + " differ");
    if (src.f_minus1 != dst.f_minus1)
        throw Error(ErrorKind::ChiMismatch, "chi/2 differs: " + src.f_minus1.str() + " vs " + dst.f_minus1.str());
    if (!is_zero(ds_residual_closed(src)) || !is_zero(ds_residual_closed(dst)))
        throw Error(ErrorKind::ResidualNonzero, "inputs violate the Dehn-Sommerville equations");

    const int n = src.n;
    VirtualMovePlan plan;
    plan.n = n;
    // Unit lower-triangular system on rows k = 0..floor((n-1)/2).
    for (int k = 0; k <= lower_half(n); ++k) {
        Rational rhs = dst.f[k] - src.f[k];
        for (int i = 0; i < k; ++i)
            rhs -= Rational(plan.x[i] * d_vector(n, i).d[k]);
        if (!is_integral(rhs))
            throw Error(ErrorKind::VerificationFailed, "non-integral move count " + rhs.str());
        plan.x.push_back(boost::multiprecision::numerator(rhs));
    }
    if (apply_virtual(src, plan).f != dst.f)
        throw Error(ErrorKind::VerificationFailed, "plan does not reproduce the target in every coordinate");
    return plan;
}

VirtualMovePlan solve_virtual_plan(const FVector& src, const FVector& dst)
{
    return solve_virtual_plan(to_rational(src), to_rational(dst));
}

RationalFVector apply_virtual(const RationalFVector& fv, const VirtualMovePlan& plan)
{
    if (plan.n != fv.n)
        throw Error(ErrorKind::DimensionMismatch, "plan dimension differs from the f-vector");
    RationalFVector out = fv;
    out.is_virtual = true;
    for (std::size_t i = 0; i < plan.x.size(); ++i) {
        if (plan.x[i] == 0)
            continue;
        const DVector dv = d_vector(fv.n, static_cast<int>(i));
        for (int k = 0; k <= fv.n; ++k)
            out.f[k] += Rational(plan.x[i] * dv.d[k]);
    }
    return out;
}

FVector apply_virtual(const FVector& fv, const VirtualMovePlan& plan)
{
    return to_integral(apply_virtual(to_rational(fv), plan));
}

} // namespace pachner
