#ifndef QPOCH_SERIALIZE_HPP
#define QPOCH_SERIALIZE_HPP

// Wire formats shared by the CLI and its tests.
//
// TSV: a provenance line "# <command> <args...> qpoch-<version>", then one
// tab-separated row per record, LF line endings.
// JSON: {"meta": {...}, "data": [...]}; coefficients are decimal strings so
// that arbitrarily large values survive.

#include <string>
#include <vector>

#include <json.hpp>

#include "qpoch/classify.hpp"
#include "qpoch/closed_form.hpp"
#include "qpoch/series.hpp"

namespace qpoch {

struct OutputMeta {
  std::string command;
  std::vector<std::string> args;
};

std::string version_string();
std::string tsv_header(const OutputMeta& meta);

/// Rows "<exponent>\t<coefficient>" for nonzero coefficients, ascending.
std::string series_tsv(const OutputMeta& meta, const TruncSeries& s);
/// data: [[exponent, "coefficient"], ...]; meta.order records the truncation.
nlohmann::json series_json(const OutputMeta& meta, const TruncSeries& s);
/// Inverse of series_json.
TruncSeries series_from_json(const nlohmann::json& doc);

/// Row "<target>\t<index>\t<value>\t<case>\t<n>\t<segment>\t<lower>\t<upper>".
std::string coeff_tsv(const OutputMeta& meta, char target, const BigIndex& index,
                      const CoeffAnswer& answer);
nlohmann::json coeff_json(const OutputMeta& meta, char target, const BigIndex& index,
                          const CoeffAnswer& answer);

/// Rows "<h>\t<members comma-separated, or ->\t<cutoff, or ->".
std::string table_tsv(const OutputMeta& meta, const HTable& table);
nlohmann::json table_json(const OutputMeta& meta, const HTable& table);

}  // namespace qpoch

#endif  // QPOCH_SERIALIZE_HPP
