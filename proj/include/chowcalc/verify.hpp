#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chowcalc {

/// Consistency-suite names accepted by run_verify_suite, in display order:
/// oracle, reduction, stability, guillot, embedding, orders.
std::vector<std::string> verify_suite_names();

/// Runs one suite, printing a line per case and a summary line to out.
/// Returns true iff every case passed, std::nullopt for an unknown name.
std::optional<bool> run_verify_suite(const std::string& name, std::ostream& out);

}  // namespace chowcalc
