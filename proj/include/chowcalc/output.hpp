#pragma once

#include "chowcalc/presentations.hpp"
#include "chowcalc/invariants.hpp"
#include "chowcalc/chevalley.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chowcalc {

#ifndef CHOWCALC_VERSION
#define CHOWCALC_VERSION "0.0.0"
#endif

inline const char* tool_version() { return CHOWCALC_VERSION; }

/// A rendered query result: descriptor plus per-degree invariant factors.
/// The timestamp is informational only and is never serialized, so identical
/// queries always render to identical bytes.
struct OutputDocument {
    std::string descriptor;
    std::uint32_t cutoff = 0;
    std::vector<std::pair<std::uint32_t, AbelianGroupType>> components;
    std::string version;
    std::string timestamp;

    /// Throws unless degrees are strictly increasing up to the cutoff.
    void validate() const;
};

OutputDocument make_document(std::string descriptor, const GradedTable& table);

enum class OutputFormat { text, csv, doc };

std::optional<OutputFormat> parse_format(const std::string& name);
const char* format_name(OutputFormat format);

/// text: aligned two-column table, groups rendered as "Z/2 + Z/8".
/// csv: "degree,factors" header, factors semicolon-separated, 0 = Z.
/// doc: every OutputDocument field except the timestamp, one per line.
std::string render(const OutputDocument& doc, OutputFormat format);

// Canonical query strings: lowercase, fixed flag order, set values sorted.
std::string canonical_ring_query(GroupKind kind, const Int& q, std::uint32_t d,
                                 const std::set<Int>& inverted);
std::string canonical_levi_query(const std::vector<unsigned>& blocks, const Int& q,
                                 std::uint32_t d);
std::string canonical_wreath_query(const Int& l, unsigned b, unsigned height,
                                   std::uint32_t d);
std::string canonical_sylow_shape_query(unsigned n, const Int& q, const Int& l);
std::string canonical_sylow_model_query(unsigned n, const Int& q, const Int& l,
                                        std::uint32_t d);

/// 64-bit FNV-1a, the cache key hash.
std::uint64_t fnv1a(const std::string& data);

/// Cache root: $CHOWCALC_CACHE, else $XDG_CACHE_HOME/chowcalc, else
/// $HOME/.cache/chowcalc; empty when none of those resolve.
std::optional<std::string> cache_directory();

/// Key for one rendered payload; ties the entry to the tool version.
std::string cache_key(const std::string& descriptor, const std::string& format);

std::optional<std::string> cache_fetch(const std::string& key);

/// Atomic write-to-temporary-then-rename; failures degrade to a no-op.
void cache_store(const std::string& key, const std::string& payload);

}  // namespace chowcalc
