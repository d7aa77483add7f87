#include "chowcalc/abelian.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace chowcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
}

void IntMatrix::append_row(const std::vector<Int>& row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("IntMatrix: row length does not match column count");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

AbelianGroupType::AbelianGroupType(std::vector<Int> orders)
{
    std::size_t zeros = 0;
    std::vector<Int> finite;
    for (auto& d : orders) {
        if (d < 0)
            throw std::invalid_argument("AbelianGroupType: negative order");
        if (d == 0)
            ++zeros;
        else if (d != 1)
            finite.push_back(std::move(d));
    }
    // Pairwise (a, b) -> (gcd, lcm) sweeps sort the exponent of every prime
    // into place; iterate until all pairs satisfy divisibility.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(finite.begin(), finite.end());
        for (std::size_t i = 0; i + 1 < finite.size(); ++i) {
            for (std::size_t j = i + 1; j < finite.size(); ++j) {
                if (finite[j] % finite[i] != 0) {
                    Int g = gcd(finite[i], finite[j]);
                    Int l = lcm(finite[i], finite[j]);
                    finite[i] = g;
                    finite[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::erase(finite, Int(1));
    factors_ = std::move(finite);
    factors_.insert(factors_.end(), zeros, Int(0));
}

std::size_t AbelianGroupType::rank() const
{
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

std::string AbelianGroupType::to_string() const
{
    if (factors_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            out += " + ";
        out += (factors_[i] == 0) ? "Z" : "Z/" + factors_[i].get_str();
    }
    return out;
}

namespace {

    // Position of the nonzero entry of minimal absolute value in the
    // submatrix a[t.., t..], if any.
    bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj)
    {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < a.rows(); ++i) {
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0)
                    continue;
                Int v = abs(a.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        return found;
    }

    bool pivot_is_lone(const IntMatrix& a, std::size_t t)
    {
        for (std::size_t i = t + 1; i < a.rows(); ++i)
            if (a.at(i, t) != 0)
                return false;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a.at(t, j) != 0)
                return false;
        return true;
    }

}  // namespace

std::vector<Int> smith_normal_form(const IntMatrix& m)
{
    IntMatrix a = m;
    const std::size_t k = std::min(a.rows(), a.cols());
    std::vector<Int> diag(k, Int(0));

    for (std::size_t t = 0; t < k; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(a, t, pi, pj))
            break;  // submatrix is zero; remaining factors stay 0
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        while (!pivot_is_lone(a, t)) {
            // Euclidean reduction of column t then row t against the pivot;
            // repeat with a fresh minimal pivot until both are clear.
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0)
                    continue;
                Int q = a.at(i, t) / a.at(t, t);  // truncated: |remainder| < |pivot|
                if (q != 0)
                    for (std::size_t j = t; j < a.cols(); ++j)
                        a.at(i, j) -= q * a.at(t, j);
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0)
                    continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0)
                    for (std::size_t i = t; i < a.rows(); ++i)
                        a.at(i, j) -= q * a.at(i, t);
            }
            find_pivot(a, t, pi, pj);
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
        }

        // Divisibility fix-up: fold a non-divisible entry into the pivot
        // row and reduce again.
        bool divides_all = false;
        while (!divides_all) {
            divides_all = true;
            for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i) {
                for (std::size_t j = t + 1; j < a.cols() && divides_all; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        for (std::size_t c = t; c < a.cols(); ++c)
                            a.at(t, c) += a.at(i, c);
                        while (!pivot_is_lone(a, t)) {
                            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                                if (a.at(r, t) == 0)
                                    continue;
                                Int q = a.at(r, t) / a.at(t, t);
                                if (q != 0)
                                    for (std::size_t c = t; c < a.cols(); ++c)
                                        a.at(r, c) -= q * a.at(t, c);
                            }
                            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                                if (a.at(t, c) == 0)
                                    continue;
                                Int q = a.at(t, c) / a.at(t, t);
                                if (q != 0)
                                    for (std::size_t r = t; r < a.rows(); ++r)
                                        a.at(r, c) -= q * a.at(r, t);
                            }
                            find_pivot(a, t, pi, pj);
                            a.swap_rows(t, pi);
                            a.swap_cols(t, pj);
                        }
                        divides_all = false;
                    }
                }
            }
        }
        diag[t] = abs(a.at(t, t));
    }
    return diag;
}

AbelianGroupType cokernel(std::size_t generator_count, const IntMatrix& relations)
{
    if (relations.cols() != generator_count)
        throw std::invalid_argument("cokernel: relation matrix has wrong column count");
    std::vector<Int> snf = smith_normal_form(relations);
    std::vector<Int> orders;
    std::size_t rank = 0;
    for (const Int& d : snf) {
        if (d != 0) {
            ++rank;
            orders.push_back(d);
        }
    }
    orders.insert(orders.end(), generator_count - rank, Int(0));
    return AbelianGroupType(std::move(orders));
}

IntMatrix hermite_normal_form(const IntMatrix& m)
{
    IntMatrix h = m;
    std::size_t r = 0;  // next pivot row
    for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
        // Clear column j below row r by repeated Euclidean steps.
        while (true) {
            std::size_t best = h.rows();
            Int bv;
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, j) == 0)
                    continue;
                Int v = abs(h.at(i, j));
                if (best == h.rows() || v < bv) {
                    best = i;
                    bv = v;
                }
            }
            if (best == h.rows())
                break;  // column empty below r
            h.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, j) == 0)
                    continue;
                Int q = h.at(i, j) / h.at(r, j);
                for (std::size_t c = 0; c < h.cols(); ++c)
                    h.at(i, c) -= q * h.at(r, c);
                if (h.at(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h.at(r, j) == 0)
            continue;
        if (h.at(r, j) < 0)
            for (std::size_t c = 0; c < h.cols(); ++c)
                h.at(r, c) = -h.at(r, c);
        // Entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
            if (q != 0)
                for (std::size_t c = 0; c < h.cols(); ++c)
                    h.at(i, c) -= q * h.at(r, c);
        }
        ++r;
    }
    IntMatrix out(0, h.cols());
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> row(h.cols());
        for (std::size_t c = 0; c < h.cols(); ++c)
            row[c] = h.at(i, c);
        out.append_row(row);
    }
    return out;
}

bool hermite_slice_equal(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("hermite_slice_equal: column counts differ");
    return hermite_normal_form(a) == hermite_normal_form(b);
}

AbelianGroupType direct_sum(const AbelianGroupType& a, const AbelianGroupType& b)
{
    std::vector<Int> orders = a.factors();
    orders.insert(orders.end(), b.factors().begin(), b.factors().end());
    return AbelianGroupType(std::move(orders));
}

AbelianGroupType tensor_product(const AbelianGroupType& a, const AbelianGroupType& b)
{
    std::vector<Int> orders;
    for (const Int& x : a.factors())
        for (const Int& y : b.factors())
            orders.push_back(gcd(x, y));
    return AbelianGroupType(std::move(orders));
}

AbelianGroupType tor_product(const AbelianGroupType& a, const AbelianGroupType& b)
{
    std::vector<Int> orders;
    for (const Int& x : a.factors())
        for (const Int& y : b.factors())
            if (x != 0 && y != 0)
                orders.push_back(gcd(x, y));
    return AbelianGroupType(std::move(orders));
}

AbelianGroupType localize(const AbelianGroupType& a, const std::set<Int>& s)
{
    if (s.empty())
        throw std::invalid_argument("localize: prime set is empty");
    for (const Int& p : s)
        if (!is_prime(p))
            throw std::invalid_argument("localize: " + p.get_str() + " is not prime");
    std::vector<Int> orders;
    for (Int m : a.factors()) {
        if (m != 0)
            for (const Int& p : s)
                while (m % p == 0)
                    m /= p;
        orders.push_back(m);
    }
    return AbelianGroupType(std::move(orders));
}

AbelianGroupType l_primary_part(const AbelianGroupType& a, const Int& l)
{
    if (!is_prime(l))
        throw std::invalid_argument("l_primary_part: l must be prime");
    std::vector<Int> orders;
    for (const Int& m : a.factors())
        orders.push_back(m == 0 ? Int(0) : pow_int(l, valuation(m, l)));
    return AbelianGroupType(std::move(orders));
}

bool embeds(const AbelianGroupType& a, const AbelianGroupType& b, const Int& l)
{
    if (!is_prime(l))
        throw std::invalid_argument("embeds: l must be prime");
    std::vector<unsigned> ea;
    for (const Int& m : a.factors()) {
        if (m == 0)
            throw std::invalid_argument("embeds: first group has an infinite summand");
        unsigned e = valuation(m, l);
        if (e > 0)
            ea.push_back(e);
    }
    std::size_t zeros = 0;
    std::vector<unsigned> eb;
    for (const Int& m : b.factors()) {
        if (m == 0) {
            ++zeros;
            continue;
        }
        unsigned e = valuation(m, l);
        if (e > 0)
            eb.push_back(e);
    }
    unsigned emax = 0;
    for (unsigned e : ea)
        emax = std::max(emax, e);
    // Counting summands of order >= l^k on each side is the exact
    // embedding criterion for abelian l-groups.
    for (unsigned k = 1; k <= emax; ++k) {
        std::size_t ca = 0, cb = zeros;
        for (unsigned e : ea)
            if (e >= k)
                ++ca;
        for (unsigned e : eb)
            if (e >= k)
                ++cb;
        if (ca > cb)
            return false;
    }
    return true;
}

}  // namespace chowcalc
