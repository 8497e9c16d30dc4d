#include "qpoch/serialize.hpp"

#include <sstream>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

nlohmann::json meta_json(const OutputMeta& meta) {
  return nlohmann::json{{"command", meta.command}, {"args", meta.args}, {"version", version_string()}};
}

std::string members_field(const std::vector<std::size_t>& members) {
  if (members.empty()) {
    return "-";
  }
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += std::to_string(members[i]);
  }
  return out;
}

}  // namespace

std::string version_string() { return std::string("qpoch-") + QPOCH_VERSION; }

std::string tsv_header(const OutputMeta& meta) {
  std::string line = "# " + meta.command;
  for (const auto& a : meta.args) {
    line += ' ';
    line += a;
  }
  line += ' ';
  line += version_string();
  line += '\n';
  return line;
}

std::string series_tsv(const OutputMeta& meta, const TruncSeries& s) {
  std::ostringstream os;
  os << tsv_header(meta);
  for (std::size_t t = 0; t <= s.order(); ++t) {
    if (!s[t].is_zero()) {
      os << t << '\t' << s[t] << '\n';
    }
  }
  return os.str();
}

nlohmann::json series_json(const OutputMeta& meta, const TruncSeries& s) {
  nlohmann::json m = meta_json(meta);
  m["order"] = s.order();
  nlohmann::json data = nlohmann::json::array();
  for (std::size_t t = 0; t <= s.order(); ++t) {
    if (!s[t].is_zero()) {
      data.push_back(nlohmann::json::array({t, s[t].to_string()}));
    }
  }
  return nlohmann::json{{"meta", std::move(m)}, {"data", std::move(data)}};
}

TruncSeries series_from_json(const nlohmann::json& doc) {
  try {
    const std::size_t order = doc.at("meta").at("order").get<std::size_t>();
    TruncSeries s(order);
    for (const auto& entry : doc.at("data")) {
      const std::size_t e = entry.at(0).get<std::size_t>();
      if (e > order) {
        throw UsageError("series json: exponent " + std::to_string(e) + " beyond order");
      }
      s[e] = Coefficient::from_string(entry.at(1).get<std::string>());
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("series json: ") + e.what());
  }
}

std::string coeff_tsv(const OutputMeta& meta, char target, const BigIndex& index,
                      const CoeffAnswer& answer) {
  std::ostringstream os;
  os << tsv_header(meta) << target << '\t' << index << '\t' << answer.value << '\t'
     << to_string(answer.case_tag) << '\t' << answer.block.n << '\t'
     << to_string(answer.block.segment) << '\t' << answer.block.lower << '\t'
     << answer.block.upper << '\n';
  return os.str();
}

nlohmann::json coeff_json(const OutputMeta& meta, char target, const BigIndex& index,
                          const CoeffAnswer& answer) {
  nlohmann::json block{{"n", answer.block.n.to_string()},
                       {"segment", to_string(answer.block.segment)},
                       {"lower", answer.block.lower.to_string()},
                       {"upper", answer.block.upper.to_string()},
                       {"upper_closed", answer.block.upper_closed}};
  nlohmann::json data{{"target", std::string(1, target)},
                      {"index", index.to_string()},
                      {"value", answer.value.to_string()},
                      {"case", to_string(answer.case_tag)},
                      {"block", std::move(block)}};
  return nlohmann::json{{"meta", meta_json(meta)}, {"data", std::move(data)}};
}

std::string table_tsv(const OutputMeta& meta, const HTable& table) {
  std::ostringstream os;
  os << tsv_header(meta);
  for (const auto& [h, row] : table.rows) {
    os << h << '\t' << members_field(row.members) << '\t';
    if (row.cutoff) {
      os << *row.cutoff;
    } else {
      os << '-';
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json table_json(const OutputMeta& meta, const HTable& table) {
  nlohmann::json m = meta_json(meta);
  m["kind"] = table.kind == TableKind::s ? "S" : "Shat";
  m["subjects_upto"] = table.subjects_upto;
  nlohmann::json data = nlohmann::json::array();
  for (const auto& [h, row] : table.rows) {
    nlohmann::json r{{"h", h}, {"members", row.members}};
    r["cutoff"] = row.cutoff ? nlohmann::json(*row.cutoff) : nlohmann::json(nullptr);
    data.push_back(std::move(r));
  }
  return nlohmann::json{{"meta", std::move(m)}, {"data", std::move(data)}};
}

}  // namespace qpoch
