// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] is the path to the built CLI binary (used by the determinism check).

#include "chowcalc/chevalley.hpp"
#include "chowcalc/output.hpp"
#include "chowcalc/verify.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace chowcalc;

namespace {

// Runtime budgets from the acceptance contract.
constexpr double kPresentationSecondsPerCase = 1.0;
constexpr double kOracleGridSeconds = 30.0;
constexpr double kReductionGridSeconds = 60.0;

std::vector<std::string> g_details;

void detail(std::string line)
{
    g_details.push_back(std::move(line));
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

AbelianGroupType grp(std::vector<long> v)
{
    return AbelianGroupType(std::vector<Int>(v.begin(), v.end()));
}

std::vector<GroupKind> presentation_kinds()
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

// Expected fundamental degrees, restated literally per family.
std::vector<std::uint32_t> expected_degrees(GroupKind kind)
{
    std::vector<std::uint32_t> out;
    switch (kind.family()) {
    case GroupKind::Family::GL:
        for (std::uint32_t d = 1; d <= kind.rank(); ++d)
            out.push_back(d);
        break;
    case GroupKind::Family::SL:
        for (std::uint32_t d = 2; d <= kind.rank(); ++d)
            out.push_back(d);
        break;
    case GroupKind::Family::Sp:
        for (std::uint32_t i = 1; i <= kind.rank(); ++i)
            out.push_back(2 * i);
        break;
    }
    return out;
}

bool criterion_presentations()
{
    bool ok = true;
    for (GroupKind kind : presentation_kinds())
        for (long q : {2, 3, 4, 5, 8, 9}) {
            auto start = std::chrono::steady_clock::now();
            ChevalleyQuery query;
            query.kind = kind;
            query.q = q;
            auto [p, table] = chow_BG(query);
            double elapsed = seconds_since(start);

            std::vector<std::uint32_t> degrees = expected_degrees(kind);
            const auto& gens = p.generators();
            bool match = gens.size() == degrees.size();
            for (std::size_t i = 0; match && i < gens.size(); ++i) {
                Int annihilator = 1;
                for (std::uint32_t k = 0; k < degrees[i]; ++k)
                    annihilator *= q;
                annihilator -= 1;
                match = gens[i].degree == degrees[i] &&
                        gens[i].name == "c" + std::to_string(degrees[i]) &&
                        gens[i].annihilator == annihilator;
            }
            if (!match || elapsed >= kPresentationSecondsPerCase) {
                ok = false;
                detail("criterion 1: " + kind.display() + " q=" + std::to_string(q) +
                       (match ? " exceeded the per-case budget" : " wrong presentation"));
            }
        }
    return ok;
}

bool run_suite_within(const std::string& name, double budget_seconds)
{
    std::ostringstream sink;
    auto start = std::chrono::steady_clock::now();
    auto ok = run_verify_suite(name, sink);
    double elapsed = seconds_since(start);
    if (!ok || !*ok) {
        detail("suite " + name + " reported failures:\n" + sink.str());
        return false;
    }
    if (elapsed >= budget_seconds) {
        detail("suite " + name + " took " + std::to_string(elapsed) + "s, budget " +
               std::to_string(budget_seconds) + "s");
        return false;
    }
    return true;
}

bool criterion_levi()
{
    GradedTable spot = twisted_coinvariants_levi({1, 1}, 3, 2);
    bool ok = spot.at(1) == grp({0, 2}) && spot.at(2) == grp({2, 2, 8});
    if (!ok)
        detail("criterion 4: blocks (1,1) q=3 spot values differ");
    for (unsigned n = 1; n <= 3 && ok; ++n)
        for (long q : {2, 3}) {
            GradedTable levi = twisted_coinvariants_levi({n}, q, 6);
            ChevalleyQuery query;
            query.kind = GroupKind::gl(n);
            query.q = q;
            query.cutoff = 6;
            GradedTable direct = chow_BG(query).second;
            for (std::uint32_t d = 0; d <= 6; ++d)
                if (levi.at(d) != direct.at(d)) {
                    ok = false;
                    detail("criterion 4: blocks (" + std::to_string(n) + ") q=" +
                           std::to_string(q) + " differs from GL at d=" +
                           std::to_string(d));
                }
        }
    return ok;
}

BasedElement acceptance_atom(const std::string& name, std::uint32_t degree, long order)
{
    return {Label::make_atom(name), degree, Int(order)};
}

WreathBasis acceptance_basis(std::vector<BasedElement> elems)
{
    WreathBasis b;
    b.mode = GradingMode::Dimension;
    b.elements = std::move(elems);
    return b;
}

std::set<std::tuple<std::string, std::uint32_t, Int>> element_set(const WreathBasis& b)
{
    std::set<std::tuple<std::string, std::uint32_t, Int>> out;
    for (const auto& e : b.elements)
        out.insert({e.label.to_string(), e.degree, e.order});
    return out;
}

bool criterion_f_l()
{
    using Expected = std::set<std::tuple<std::string, std::uint32_t, Int>>;
    bool ok = true;

    auto first = f_l(acceptance_basis({acceptance_atom("e", 1, 2)}), 2);
    ok = ok && element_set(first) == Expected{{"g(e)", 2, Int(4)}};

    auto second = f_l(acceptance_basis({acceptance_atom("e", 2, 3)}), 2);
    ok = ok && element_set(second) == Expected{{"[e,e]", 4, Int(3)}};

    auto third = f_l(
        acceptance_basis({acceptance_atom("e1", 1, 0), acceptance_atom("e2", 1, 2)}), 2);
    ok = ok && element_set(third) == Expected{{"[e1,e2]", 2, Int(2)},
                                              {"g(e1)", 2, Int(0)},
                                              {"g(e2)", 2, Int(4)}};
    if (!ok) {
        detail("criterion 5: a worked decomposition differs");
        return false;
    }

    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_int_distribution<int> order_pick(0, 4);
    for (long l : {2L, 3L, 5L}) {
        const long orders[] = {0, l, l * l, l == 2 ? 9 : 4, 0};
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<BasedElement> elems;
            int n = size(rng);
            for (int i = 0; i < n; ++i)
                elems.push_back(acceptance_atom("e" + std::to_string(i),
                                                static_cast<std::uint32_t>(deg(rng)),
                                                orders[order_pick(rng)]));
            WreathBasis b = acceptance_basis(std::move(elems));
            std::size_t suppressed = 0;
            auto out = f_l(b, Int(l), &suppressed);
            auto r = r_set(b, Int(l));
            std::size_t expected =
                cyclic_orbits(b.elements.size(), static_cast<unsigned>(l), r).size() +
                r.size();
            for (std::size_t i : r)
                expected += (static_cast<std::size_t>(l) - 1) * b.elements[i].degree - 1;
            if (out.elements.size() + suppressed != expected) {
                detail("criterion 5: cardinality mismatch at l=" + std::to_string(l) +
                       " trial " + std::to_string(trial));
                return false;
            }
        }
    }
    return true;
}

bool criterion_theorem_a_spot()
{
    ChevalleyQuery query;
    query.kind = GroupKind::sp_from_m(2);
    query.q = 3;
    query.cutoff = 4;
    query.inverted = {Int(2), Int(3)};
    GradedTable table = theorem_a(query).second;
    bool ok = table.at(4) == grp({5}) && table.at(2).trivial();
    if (!ok)
        detail("criterion 10: localized Sp(4) q=3 table differs");
    return ok;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& cache_dir,
                  const std::string& args)
{
    std::string command =
        "CHOWCALC_CACHE='" + cache_dir + "' '" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {};
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

bool criterion_determinism(const std::string& cli)
{
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() /
                    ("chowcalc-acceptance-" + std::to_string(::getpid()));
    fs::path cache_a = root / "a";
    fs::path cache_b = root / "b";
    std::error_code ec;
    fs::remove_all(root, ec);
    fs::create_directories(cache_a);
    fs::create_directories(cache_b);

    std::vector<std::string> invocations = {
        "ring --group gl --n 2 --q 3 --max-degree 3 --format text",
        "ring --group gl --n 2 --q 3 --max-degree 3 --format csv",
        "ring --group gl --n 2 --q 3 --max-degree 3 --format doc",
        "ring --group sp --m 2 --q 3 --invert 2,3 --max-degree 4",
        "ring --group sl --n 3 --q 2 --max-degree 6 --format doc",
        "levi --blocks 1,1 --q 3 --max-degree 4",
        "wreath --l 3 --b 1 --height 1 --max-degree 5",
        "sylow-shape --n 6 --q 2 --l 3",
        "sylow-model --n 6 --q 2 --l 3 --max-degree 4",
    };
    for (const std::string& suite : verify_suite_names())
        invocations.push_back("verify " + suite);

    bool ok = true;
    for (const std::string& args : invocations) {
        RunResult cold = run_cli(cli, cache_a.string(), args);
        RunResult warm = run_cli(cli, cache_a.string(), args);
        RunResult fresh = run_cli(cli, cache_b.string(), args);
        if (cold.exit_code != 0 || warm.exit_code != 0 || fresh.exit_code != 0) {
            ok = false;
            detail("criterion 11: nonzero exit for '" + args + "'");
            continue;
        }
        if (cold.output.empty() || fnv1a(cold.output) != fnv1a(warm.output) ||
            cold.output != warm.output || cold.output != fresh.output) {
            ok = false;
            detail("criterion 11: byte mismatch for '" + args + "'");
        }
    }
    fs::remove_all(root, ec);
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    struct Criterion {
        int number;
        const char* name;
        bool passed;
    };
    std::vector<Criterion> results;
    results.push_back({1, "presentation reproduction", criterion_presentations()});
    results.push_back(
        {2, "closed form equals SNF oracle", run_suite_within("oracle", kOracleGridSeconds)});
    results.push_back({3, "twisted ideal reduction",
                       run_suite_within("reduction", kReductionGridSeconds)});
    results.push_back({4, "Levi engine spot values", criterion_levi()});
    results.push_back({5, "wreath decomposition closed form", criterion_f_l()});
    results.push_back({6, "stabilization independence",
                       run_suite_within("stability", kOracleGridSeconds)});
    results.push_back(
        {7, "Sylow order accounting", run_suite_within("orders", kOracleGridSeconds)});
    results.push_back(
        {8, "mod-l survivor consistency", run_suite_within("guillot", kOracleGridSeconds)});
    results.push_back({9, "restriction embedding",
                       run_suite_within("embedding", kOracleGridSeconds)});
    results.push_back({10, "localization spot value", criterion_theorem_a_spot()});
    results.push_back({11, "CLI determinism", criterion_determinism(cli)});

    bool all = true;
    for (const Criterion& c : results) {
        std::cout << "criterion " << c.number << ": " << (c.passed ? "PASS" : "FAIL")
                  << " - " << c.name << "\n";
        all = all && c.passed;
    }
    for (const std::string& line : g_details)
        std::cerr << line << "\n";
    return all ? 0 : 1;
}
