#pragma once

#include "json.hpp"
#include "parfus/blocks.hpp"
#include "parfus/functors.hpp"

namespace parfus {

using Json = nlohmann::json;

// --- groups ------------------------------------------------------------------
Json group_to_json(const FiniteGroup& g);
// {"order": n, "table": [[...]], "label": "..."} with identity at index 0.
FiniteGroup group_from_json(const Json& j);
FiniteGroup load_group_file(const std::string& path);

// --- command documents -------------------------------------------------------
Json info_to_json(const FiniteGroup& g, int cap);
std::string info_markdown(const FiniteGroup& g, int cap);

Json decompose_to_json(const FiniteGroup& g, int cap);
std::string decompose_markdown(const FiniteGroup& g, int cap);  // ends with the footer line
std::string decompose_csv(const FiniteGroup& g, int cap);

Json simples_to_json(AlgebraContext& ctx);
std::string simples_markdown(AlgebraContext& ctx);
std::string simples_csv(AlgebraContext& ctx);

Json fusion_to_json(AlgebraContext& ctx, const FusionTable& t);

// named verification reports, e.g. {"foundations", <report>}
using SuiteResults = std::vector<std::pair<std::string, CheckReport>>;
Json suites_to_json(const FiniteGroup& g, const SuiteResults& rs);
std::string suites_markdown(const FiniteGroup& g, const SuiteResults& rs);

Json christmas_to_json(const FiniteGroup& g, const ChristmasImage& img);
std::string christmas_markdown(const FiniteGroup& g, const ChristmasImage& img);

Json matryoshka_to_json(const FiniteGroup& g, uint64_t subgroup_mask,
                        const std::optional<MatryoshkaData>& md);
std::string matryoshka_markdown(const FiniteGroup& g, uint64_t subgroup_mask,
                                const std::optional<MatryoshkaData>& md);

}  // namespace parfus
