#include "chowcalc/invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace chowcalc {

GroupKind GroupKind::gl(unsigned n) {
    if (n < 1)
        throw std::invalid_argument("GL(n) requires n >= 1");
    return GroupKind(Family::GL, n);
}

GroupKind GroupKind::sl(unsigned n) {
    if (n < 2)
        throw std::invalid_argument("SL(n) requires n >= 2");
    return GroupKind(Family::SL, n);
}

GroupKind GroupKind::sp_from_m(unsigned m) {
    if (m < 1)
        throw std::invalid_argument("Sp(2m) requires m >= 1");
    return GroupKind(Family::Sp, m);
}

std::string GroupKind::display() const {
    switch (family_) {
        case Family::GL: return "GL(" + std::to_string(size_) + ")";
        case Family::SL: return "SL(" + std::to_string(size_) + ")";
        case Family::Sp: return "Sp(" + std::to_string(2 * size_) + ")";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::uint32_t> fundamental_degrees(GroupKind kind) {
    std::vector<std::uint32_t> out;
    switch (kind.family()) {
        case GroupKind::Family::GL:
            for (unsigned i = 1; i <= kind.rank(); ++i)
                out.push_back(i);
            break;
        case GroupKind::Family::SL:
            for (unsigned i = 2; i <= kind.rank(); ++i)
                out.push_back(i);
            break;
        case GroupKind::Family::Sp:
            for (unsigned i = 1; i <= kind.rank(); ++i)
                out.push_back(2 * i);
            break;
    }
    return out;
}

IntPolynomial elementary_symmetric(const Grading& grading,
                                   const std::vector<std::size_t>& vars, unsigned k) {
    if (k > vars.size())
        return IntPolynomial::zero(grading);
    // e[j] accumulates e_j of the variables consumed so far
    std::vector<IntPolynomial> e(k + 1, IntPolynomial::zero(grading));
    e[0] = IntPolynomial::constant(grading, 1);
    for (std::size_t v : vars) {
        IntPolynomial x = IntPolynomial::generator(grading, v);
        for (unsigned j = std::min<std::size_t>(k, vars.size()); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * x;
    }
    return e[k];
}

namespace {

std::vector<std::size_t> all_vars(unsigned rank) {
    std::vector<std::size_t> v(rank);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// e_i with every variable squared, for the Sp invariants.
IntPolynomial elementary_symmetric_squares(unsigned rank, unsigned i) {
    Grading g(rank, 1);
    IntPolynomial e = elementary_symmetric(g, all_vars(rank), i);
    std::vector<IntPolynomial> squares;
    for (unsigned v = 0; v < rank; ++v) {
        auto x = IntPolynomial::generator(g, v);
        squares.push_back(x * x);
    }
    return substitute(e, squares);
}

}  // namespace

IntPolynomial invariant_generator(GroupKind kind, unsigned i) {
    unsigned r = kind.rank();
    switch (kind.family()) {
        case GroupKind::Family::GL:
            if (i < 1 || i > r)
                throw std::out_of_range("invariant index for GL");
            return elementary_symmetric(Grading(r, 1), all_vars(r), i);
        case GroupKind::Family::SL:
            if (i < 2 || i > r)
                throw std::out_of_range("invariant index for SL");
            return elementary_symmetric(Grading(r, 1), all_vars(r), i);
        case GroupKind::Family::Sp:
            if (i < 1 || i > r)
                throw std::out_of_range("invariant index for Sp");
            return elementary_symmetric_squares(r, i);
    }
    throw std::logic_error("unreachable");
}

WeylData weyl_data(GroupKind kind) {
    unsigned r = kind.rank();
    Grading g(r, 1);
    std::vector<std::vector<IntPolynomial>> gens;
    auto identity = [&] {
        std::vector<IntPolynomial> images;
        for (unsigned v = 0; v < r; ++v)
            images.push_back(IntPolynomial::generator(g, v));
        return images;
    };
    for (unsigned v = 0; v + 1 < r; ++v) {
        auto images = identity();
        std::swap(images[v], images[v + 1]);
        gens.push_back(std::move(images));
    }
    if (kind.family() == GroupKind::Family::Sp) {
        auto images = identity();
        images[0] = -images[0];
        gens.push_back(std::move(images));
    }
    return WeylData{kind, r, fundamental_degrees(kind), std::move(gens)};
}

bool check_invariance(const IntPolynomial& f, const WeylData& w) {
    for (const auto& images : w.action_generators)
        if (substitute(f, images) != f)
            return false;
    return true;
}

Grading levi_block_grading(const std::vector<unsigned>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("empty block list");
    Grading g;
    for (unsigned b : blocks) {
        if (b == 0)
            throw std::invalid_argument("block of size zero");
        for (unsigned j = 1; j <= b; ++j)
            g.push_back(j);
    }
    return g;
}

IntPolynomial levi_elementary_expansion(unsigned k, const std::vector<unsigned>& blocks) {
    Grading g = levi_block_grading(blocks);
    unsigned n = std::accumulate(blocks.begin(), blocks.end(), 0u);
    if (k > n)
        throw std::out_of_range("k exceeds the total torus rank");
    // offsets[b] = index of e_1^(b) in the block-generator ring
    std::vector<std::size_t> offsets;
    std::size_t off = 0;
    for (unsigned b : blocks) {
        offsets.push_back(off);
        off += b;
    }
    IntPolynomial out(g);
    Monomial m(g.size(), 0);
    // compositions (k_1,...,k_B), 0 <= k_b <= blocks[b], summing to k
    auto rec = [&](auto&& self, std::size_t b, unsigned remaining) -> void {
        if (b == blocks.size()) {
            if (remaining == 0)
                out.add_term(m, 1);
            return;
        }
        for (unsigned kb = 0; kb <= std::min(blocks[b], remaining); ++kb) {
            if (kb > 0)
                m[offsets[b] + kb - 1] = 1;
            self(self, b + 1, remaining - kb);
            if (kb > 0)
                m[offsets[b] + kb - 1] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace chowcalc
