#include "chowcalc/output.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace chowcalc {

void OutputDocument::validate() const
{
    if (components.empty())
        throw std::invalid_argument("document has no components");
    std::uint32_t previous = 0;
    bool first = true;
    for (const auto& [degree, group] : components) {
        if (!first && degree <= previous)
            throw std::invalid_argument("component degrees must be strictly increasing");
        if (degree > cutoff)
            throw std::invalid_argument("component degree exceeds the cutoff");
        previous = degree;
        first = false;
    }
}

OutputDocument make_document(std::string descriptor, const GradedTable& table)
{
    OutputDocument doc;
    doc.descriptor = std::move(descriptor);
    doc.cutoff = table.cutoff;
    for (std::uint32_t d = 0; d <= table.cutoff; ++d)
        doc.components.emplace_back(d, table.at(d));
    doc.version = tool_version();
    return doc;
}

std::optional<OutputFormat> parse_format(const std::string& name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "doc")
        return OutputFormat::doc;
    return std::nullopt;
}

const char* format_name(OutputFormat format)
{
    switch (format) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::doc: return "doc";
    }
    return "";
}

namespace {

std::string factor_list(const AbelianGroupType& group)
{
    std::string out;
    bool first = true;
    for (const Int& m : group.factors()) {
        if (!first)
            out += ';';
        out += m.get_str();
        first = false;
    }
    return out;
}

std::string render_text(const OutputDocument& doc)
{
    std::size_t width = std::string("degree").size();
    for (const auto& [degree, group] : doc.components)
        width = std::max(width, std::to_string(degree).size());
    std::ostringstream out;
    out << std::setw(static_cast<int>(width)) << "degree" << "  group\n";
    for (const auto& [degree, group] : doc.components)
        out << std::setw(static_cast<int>(width)) << degree << "  "
            << group.to_string() << "\n";
    return out.str();
}

std::string render_csv(const OutputDocument& doc)
{
    std::string out = "degree,factors\n";
    for (const auto& [degree, group] : doc.components)
        out += std::to_string(degree) + "," + factor_list(group) + "\n";
    return out;
}

std::string render_doc(const OutputDocument& doc)
{
    std::string out;
    out += "descriptor: " + doc.descriptor + "\n";
    out += "version: " + doc.version + "\n";
    out += "cutoff: " + std::to_string(doc.cutoff) + "\n";
    for (const auto& [degree, group] : doc.components)
        out += "component: " + std::to_string(degree) + "=" + factor_list(group) + "\n";
    return out;
}

}  // namespace

std::string render(const OutputDocument& doc, OutputFormat format)
{
    doc.validate();
    switch (format) {
    case OutputFormat::text: return render_text(doc);
    case OutputFormat::csv: return render_csv(doc);
    case OutputFormat::doc: return render_doc(doc);
    }
    throw std::invalid_argument("unknown output format");
}

namespace {

std::string joined(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += ',';
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string canonical_ring_query(GroupKind kind, const Int& q, std::uint32_t d,
                                 const std::set<Int>& inverted)
{
    std::string family, size;
    switch (kind.family()) {
    case GroupKind::Family::GL: family = "gl"; size = "n"; break;
    case GroupKind::Family::SL: family = "sl"; size = "n"; break;
    case GroupKind::Family::Sp: family = "sp"; size = "m"; break;
    }
    std::vector<std::string> primes;
    for (const Int& p : inverted)
        primes.push_back(p.get_str());
    return "ring:" + family + ":" + size + "=" + std::to_string(kind.rank()) +
           ":q=" + q.get_str() + ":d=" + std::to_string(d) +
           ":invert=" + joined(primes);
}

std::string canonical_levi_query(const std::vector<unsigned>& blocks, const Int& q,
                                 std::uint32_t d)
{
    std::vector<std::string> sizes;
    for (unsigned b : blocks)
        sizes.push_back(std::to_string(b));
    return "levi:blocks=" + joined(sizes) + ":q=" + q.get_str() +
           ":d=" + std::to_string(d);
}

std::string canonical_wreath_query(const Int& l, unsigned b, unsigned height,
                                   std::uint32_t d)
{
    return "wreath:l=" + l.get_str() + ":b=" + std::to_string(b) +
           ":h=" + std::to_string(height) + ":d=" + std::to_string(d);
}

std::string canonical_sylow_shape_query(unsigned n, const Int& q, const Int& l)
{
    return "sylow-shape:n=" + std::to_string(n) + ":q=" + q.get_str() +
           ":l=" + l.get_str();
}

std::string canonical_sylow_model_query(unsigned n, const Int& q, const Int& l,
                                        std::uint32_t d)
{
    return "sylow-model:n=" + std::to_string(n) + ":q=" + q.get_str() +
           ":l=" + l.get_str() + ":d=" + std::to_string(d);
}

std::uint64_t fnv1a(const std::string& data)
{
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::optional<std::string> cache_directory()
{
    if (const char* dir = std::getenv("CHOWCALC_CACHE"); dir && *dir)
        return std::string(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/chowcalc";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/chowcalc";
    return std::nullopt;
}

std::string cache_key(const std::string& descriptor, const std::string& format)
{
    return descriptor + "|" + format + "|" + tool_version();
}

namespace {

std::optional<std::filesystem::path> cache_path(const std::string& key)
{
    auto dir = cache_directory();
    if (!dir)
        return std::nullopt;
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key);
    return std::filesystem::path(*dir) / (name.str() + ".out");
}

}  // namespace

std::optional<std::string> cache_fetch(const std::string& key)
{
    auto path = cache_path(key);
    if (!path)
        return std::nullopt;
    std::ifstream in(*path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream data;
    data << in.rdbuf();
    if (!in.good() && !in.eof())
        return std::nullopt;
    return data.str();
}

void cache_store(const std::string& key, const std::string& payload)
{
    auto path = cache_path(key);
    if (!path)
        return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    if (ec)
        return;
    std::filesystem::path tmp = *path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return;
        out << payload;
        if (!out.good())
            return;
    }
    std::filesystem::rename(tmp, *path, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

}  // namespace chowcalc
