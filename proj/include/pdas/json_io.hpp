#pragma once

// JSON forms of machines, systems and reports. Readers reject unknown fields
// and report every problem they find through ValidationError.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "pdas/compile.hpp"
#include "pdas/dpas.hpp"
#include "pdas/pcpa.hpp"
#include "pdas/reduction.hpp"
#include "pdas/report.hpp"

namespace pdas {

using json = nlohmann::ordered_json;

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

Pda pda_from_json(const json& doc);
json to_json(const Pda& pda);

PcpaSystem pcpa_from_json(const json& doc);
json to_json(const PcpaSystem& sys, const std::optional<std::string>& contract = std::nullopt);
json to_json(const CompiledSystem& compiled);

DpasSystem dpas_from_json(const json& doc);
json to_json(const DpasSystem& sys);

json to_json(const ReductionBundle& bundle);

/// Words print as bare strings when every symbol is one character, and as
/// space-separated names otherwise.
std::string format_word(const Word& w);

/// Array of {word, lhs, rhs, status}.
json to_json(const ComparisonReport& report);

}  // namespace pdas
