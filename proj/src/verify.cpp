#include "chowcalc/verify.hpp"

#include "chowcalc/chevalley.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace chowcalc {

namespace {

struct SuiteReport {
    std::ostream& out;
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;

    void record(const std::string& label, bool ok)
    {
        ++cases;
        if (!ok)
            ++failures;
        out << suite << " " << label << ": " << (ok ? "ok" : "FAIL") << "\n";
    }

    bool finish()
    {
        out << suite << ": " << cases << " cases, " << failures << " failures\n";
        return failures == 0;
    }
};

std::vector<GroupKind> presentation_grid_kinds()
{
    std::vector<GroupKind> kinds;
    for (unsigned n = 1; n <= 6; ++n)
        kinds.push_back(GroupKind::gl(n));
    for (unsigned n = 2; n <= 6; ++n)
        kinds.push_back(GroupKind::sl(n));
    for (unsigned m = 1; m <= 4; ++m)
        kinds.push_back(GroupKind::sp_from_m(m));
    return kinds;
}

const std::vector<long> kPresentationPrimePowers = {2, 3, 4, 5, 8, 9};

std::vector<IntPolynomial> diagonal_ideal(const DiagonalPresentation& p)
{
    Grading g = p.grading();
    std::vector<IntPolynomial> out;
    for (std::size_t i = 0; i < p.generators().size(); ++i)
        out.push_back(IntPolynomial::generator(g, i) * p.generators()[i].annihilator);
    return out;
}

bool oracle_case(GroupKind kind, const Int& q)
{
    auto [p, table] = twisted_coinvariants(kind, q, 0);
    auto ideal = diagonal_ideal(p);
    for (std::uint32_t d = 0; d <= 8; ++d)
        if (component_closed_form(p, d) != component_oracle(p.grading(), ideal, d))
            return false;
    return true;
}

bool suite_oracle(std::ostream& out)
{
    SuiteReport report{out, "oracle"};
    for (GroupKind kind : presentation_grid_kinds())
        for (long q : kPresentationPrimePowers)
            report.record(kind.display() + " q=" + std::to_string(q),
                          oracle_case(kind, q));
    return report.finish();
}

bool suite_reduction(std::ostream& out)
{
    SuiteReport report{out, "reduction"};
    const std::vector<GroupKind> kinds = {
        GroupKind::gl(1), GroupKind::gl(2), GroupKind::gl(3),
        GroupKind::sp_from_m(2), GroupKind::sl(3),
    };
    for (GroupKind kind : kinds)
        for (long q : {2, 3, 4})
            report.record(kind.display() + " q=" + std::to_string(q),
                          verify_ideal_reduction(kind, q, 8));
    return report.finish();
}

using ElementKey = std::tuple<std::string, std::uint32_t, Int>;

std::vector<ElementKey> element_keys(const WreathBasis& b)
{
    std::vector<ElementKey> keys;
    for (const BasedElement& e : b.elements)
        keys.emplace_back(e.label.to_string(), e.degree, e.order);
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool stability_case(const Int& l, unsigned b, std::uint32_t cutoff)
{
    WreathBasis base = truncated_polynomial_basis(l, b, cutoff);
    std::vector<ElementKey> reference;
    for (std::uint32_t extra : {0u, 1u, 5u}) {
        WreathBasis stable = stable_f_l(base, l, cutoff + extra);
        std::vector<ElementKey> keys = element_keys(stable);
        if (extra == 0)
            reference = std::move(keys);
        else if (keys != reference)
            return false;
    }
    return true;
}

bool suite_stability(std::ostream& out)
{
    SuiteReport report{out, "stability"};
    for (long l : {2, 3})
        for (unsigned b : {1u, 2u})
            for (std::uint32_t cutoff = 2; cutoff <= 8; ++cutoff)
                report.record("l=" + std::to_string(l) + " b=" + std::to_string(b) +
                                  " D=" + std::to_string(cutoff),
                              stability_case(l, b, cutoff));
    return report.finish();
}

const std::vector<long> kOddPrimes = {3, 5, 7, 11, 13};

bool suite_guillot(std::ostream& out)
{
    SuiteReport report{out, "guillot"};
    for (unsigned n = 1; n <= 5; ++n)
        for (long q : {2, 3, 4})
            for (long l : kOddPrimes) {
                if (q % l == 0)
                    continue;
                report.record("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                  " l=" + std::to_string(l),
                              guillot_check(n, q, l, 10));
            }
    return report.finish();
}

bool suite_embedding(std::ostream& out)
{
    SuiteReport report{out, "embedding"};
    const std::vector<std::tuple<unsigned, long, long>> grid = {
        {2, 2, 3}, {3, 2, 7}, {4, 2, 3}, {6, 2, 3}, {2, 4, 3},
    };
    for (const auto& [n, q, l] : grid)
        report.record("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                          " l=" + std::to_string(l),
                      check_restriction_embedding(n, q, l, 6));
    return report.finish();
}

bool suite_orders(std::ostream& out)
{
    SuiteReport report{out, "orders"};
    for (unsigned n = 1; n <= 8; ++n)
        for (long q : {2, 3, 4})
            for (long l : kOddPrimes) {
                if (q % l == 0)
                    continue;
                bool ok = shape_order_exponent(sylow_shape(n, q, l)) ==
                          glq_l_part_order(n, q, l);
                report.record("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                  " l=" + std::to_string(l),
                              ok);
            }
    return report.finish();
}

}  // namespace

std::vector<std::string> verify_suite_names()
{
    return {"oracle", "reduction", "stability", "guillot", "embedding", "orders"};
}

std::optional<bool> run_verify_suite(const std::string& name, std::ostream& out)
{
    if (name == "oracle")
        return suite_oracle(out);
    if (name == "reduction")
        return suite_reduction(out);
    if (name == "stability")
        return suite_stability(out);
    if (name == "guillot")
        return suite_guillot(out);
    if (name == "embedding")
        return suite_embedding(out);
    if (name == "orders")
        return suite_orders(out);
    return std::nullopt;
}

}  // namespace chowcalc
