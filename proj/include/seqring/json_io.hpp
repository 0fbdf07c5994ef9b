#pragma once

#include "seqring/orbit.hpp"
#include "seqring/zero_analysis.hpp"

#include <json.hpp>

namespace seqring {

using nlohmann::json;

json apset_to_json(const APSet& s);
APSet apset_from_json(const json& j);

json equation_to_json(const Equation& e);
Equation equation_from_json(const json& j);

json matk_to_json(const MatK& a);
MatK matk_from_json(const json& j);

json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

json seq_to_json(const ExactSeq& f);
ExactSeq seq_from_json(const json& j);

json regular_to_json(const RegularFunction& f);
RegularFunction regular_from_json(const json& j, std::size_t n);

json subvariety_to_json(const Subvariety& y);
Subvariety subvariety_from_json(const json& j, std::size_t n);

// {"zero_set_window", "apset", "status", "periods_checked", "witnesses"}.
json decomposition_report(const Decomposition& dec, std::uint64_t periods_checked,
                          const std::vector<PeriodWitness>& witnesses = {});

} // namespace seqring
