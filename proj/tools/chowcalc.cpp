#include <CLI11.hpp>

#include "chowcalc/output.hpp"
#include "chowcalc/verify.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace chowcalc;

/// Print through the cache: replay a stored payload byte-for-byte when the
/// descriptor was rendered before, otherwise compute, store and print.
int emit(const std::string& descriptor, const std::string& format,
         const std::function<std::string()>& compute)
{
    std::string key = cache_key(descriptor, format);
    if (auto hit = cache_fetch(key)) {
        std::cout << *hit;
        return 0;
    }
    std::string payload = compute();
    cache_store(key, payload);
    std::cout << payload;
    return 0;
}

struct RingArgs {
    std::string group;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    bool has_n = false;
    bool has_m = false;
    long q = 0;
    std::uint32_t max_degree = 12;
    std::vector<long> invert;
    std::string format = "text";
};

int run_ring(const RingArgs& args)
{
    std::optional<GroupKind> kind;
    if (args.group == "gl" || args.group == "sl") {
        if (!args.has_n || args.has_m) {
            std::cerr << "ring: --group " << args.group << " takes --n, not --m\n";
            return 2;
        }
        kind = args.group == "gl" ? GroupKind::gl(args.n) : GroupKind::sl(args.n);
    } else if (args.group == "sp") {
        if (!args.has_m || args.has_n) {
            std::cerr << "ring: --group sp takes --m, not --n\n";
            return 2;
        }
        kind = GroupKind::sp_from_m(args.m);
    } else {
        std::cerr << "ring: --group must be gl, sl or sp\n";
        return 2;
    }
    auto format = parse_format(args.format);
    if (!format) {
        std::cerr << "ring: --format must be text, csv or doc\n";
        return 2;
    }

    ChevalleyQuery query;
    query.kind = *kind;
    query.q = args.q;
    query.cutoff = args.max_degree;
    query.inverted = std::set<Int>(args.invert.begin(), args.invert.end());

    std::string descriptor =
        canonical_ring_query(query.kind, query.q, query.cutoff, query.inverted);
    return emit(descriptor, format_name(*format), [&] {
        GradedTable table = [&] {
            if (query.inverted.empty())
                return chow_BG(query).second;
            std::vector<std::string> warnings;
            GradedTable t = theorem_a(query, &warnings).second;
            for (const std::string& w : warnings)
                std::cerr << "warning: " << w << "\n";
            return t;
        }();
        return render(make_document(descriptor, table), *format);
    });
}

int run_levi(const std::vector<unsigned>& blocks, long q, std::uint32_t max_degree)
{
    std::string descriptor = canonical_levi_query(blocks, q, max_degree);
    return emit(descriptor, format_name(OutputFormat::text), [&] {
        GradedTable table = twisted_coinvariants_levi(blocks, q, max_degree);
        return render(make_document(descriptor, table), OutputFormat::text);
    });
}

int run_wreath(long l, unsigned b, unsigned height, std::uint32_t max_degree)
{
    std::string descriptor = canonical_wreath_query(l, b, height, max_degree);
    return emit(descriptor, format_name(OutputFormat::text), [&] {
        GradedTable table = iterate_tower(l, b, height, max_degree + 1);
        return render(make_document(descriptor, table), OutputFormat::text);
    });
}

int run_sylow_shape(unsigned n, long q, long l)
{
    std::string descriptor = canonical_sylow_shape_query(n, q, l);
    return emit(descriptor, "text", [&] {
        SylowShape shape = sylow_shape(n, q, l);
        std::string towers;
        for (std::size_t i = 0; i < shape.towers.size(); ++i)
            towers += (i ? "," : "") + std::to_string(shape.towers[i]);
        return "l: " + shape.l.get_str() + "\nb: " + std::to_string(shape.b) +
               "\ntowers: " + (towers.empty() ? "none" : towers) + "\n";
    });
}

int run_sylow_model(unsigned n, long q, long l, std::uint32_t max_degree)
{
    std::string descriptor = canonical_sylow_model_query(n, q, l, max_degree);
    return emit(descriptor, format_name(OutputFormat::text), [&] {
        GradedTable table = sylow_chow_model(sylow_shape(n, q, l), max_degree + 1);
        return render(make_document(descriptor, table), OutputFormat::text);
    });
}

int run_verify(const std::string& suite)
{
    auto ok = run_verify_suite(suite, std::cout);
    if (!ok) {
        std::cerr << "verify: unknown suite '" << suite << "'; available:";
        for (const std::string& name : verify_suite_names())
            std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    return *ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chow rings of classifying spaces of finite Chevalley groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    RingArgs ring;
    CLI::App* ring_cmd = app.add_subcommand(
        "ring", "Graded Chow table of BG for GL, SL or Sp over F_q");
    ring_cmd->add_option("--group", ring.group, "gl, sl or sp")->required();
    ring_cmd->add_option("--n", ring.n, "size for gl/sl");
    ring_cmd->add_option("--m", ring.m, "size for sp (the group is Sp(2m))");
    ring_cmd->add_option("--q", ring.q, "prime power")->required();
    ring_cmd->add_option("--max-degree", ring.max_degree, "last degree reported");
    ring_cmd->add_option("--invert", ring.invert, "primes to invert")->delimiter(',');
    ring_cmd->add_option("--format", ring.format, "text, csv or doc");

    std::vector<unsigned> levi_blocks;
    long levi_q = 0;
    std::uint32_t levi_degree = 12;
    CLI::App* levi_cmd = app.add_subcommand(
        "levi", "Twisted coinvariants of a Levi subgroup GL(n1) x GL(n2) x ...");
    levi_cmd->add_option("--blocks", levi_blocks, "block sizes")
        ->delimiter(',')
        ->required();
    levi_cmd->add_option("--q", levi_q, "prime power")->required();
    levi_cmd->add_option("--max-degree", levi_degree, "last degree reported");

    long wreath_l = 0;
    unsigned wreath_b = 0, wreath_height = 0;
    std::uint32_t wreath_degree = 12;
    CLI::App* wreath_cmd = app.add_subcommand(
        "wreath", "Iterated wreath tower table over Z[t]/(l^b t)");
    wreath_cmd->add_option("--l", wreath_l, "prime")->required();
    wreath_cmd->add_option("--b", wreath_b, "base exponent")->required();
    wreath_cmd->add_option("--height", wreath_height, "tower height")->required();
    wreath_cmd->add_option("--max-degree", wreath_degree, "last degree reported");

    unsigned shape_n = 0;
    long shape_q = 0, shape_l = 0;
    std::uint32_t shape_degree = 12;
    CLI::App* shape_cmd = app.add_subcommand(
        "sylow-shape", "Wreath-tower decomposition of an l-Sylow subgroup of GL_n(F_q)");
    shape_cmd->add_option("--n", shape_n, "matrix size")->required();
    shape_cmd->add_option("--q", shape_q, "prime power")->required();
    shape_cmd->add_option("--l", shape_l, "odd prime not dividing q")->required();
    shape_cmd->add_option("--max-degree", shape_degree,
                          "accepted for symmetry; the shape has no grading");

    unsigned model_n = 0;
    long model_q = 0, model_l = 0;
    std::uint32_t model_degree = 12;
    CLI::App* model_cmd = app.add_subcommand(
        "sylow-model", "Chow table of the Sylow model for GL_n(F_q) at l");
    model_cmd->add_option("--n", model_n, "matrix size")->required();
    model_cmd->add_option("--q", model_q, "prime power")->required();
    model_cmd->add_option("--l", model_l, "odd prime not dividing q")->required();
    model_cmd->add_option("--max-degree", model_degree, "last degree reported");

    std::string suite;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run a consistency suite and report per case");
    verify_cmd->add_option("suite", suite, "oracle, reduction, stability, guillot, embedding or orders")
        ->required();

    try {
        app.parse(argc, argv);
        ring.has_n = ring_cmd->count("--n") > 0;
        ring.has_m = ring_cmd->count("--m") > 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ring_cmd->parsed())
            return run_ring(ring);
        if (levi_cmd->parsed())
            return run_levi(levi_blocks, levi_q, levi_degree);
        if (wreath_cmd->parsed())
            return run_wreath(wreath_l, wreath_b, wreath_height, wreath_degree);
        if (shape_cmd->parsed())
            return run_sylow_shape(shape_n, shape_q, shape_l);
        if (model_cmd->parsed())
            return run_sylow_model(model_n, model_q, model_l, model_degree);
        if (verify_cmd->parsed())
            return run_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
