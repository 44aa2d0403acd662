#include "cycgrp/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cycgrp {

namespace {

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(Errc::InvalidArgument, "unknown format '" + name + "'");
}

nlohmann::json census_to_json(const std::string& label, const CyclicCensus& census) {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [k, count] : census.c) c[std::to_string(k)] = count;
  return {
      {"label", label},
      {"order", census.group_order},
      {"c", c},
      {"pi_e", census.pi_e},
      {"pi", census.pi},
      {"pi_c", census.pi_c},
      {"num_cyclic", census.num_cyclic},
      {"delta", census.delta},
      {"identity_order_sum", census.order_sum_identity()},
      {"identity_eq1", census.deficiency_identity()},
  };
}

CyclicCensus census_from_json(const nlohmann::json& j, std::string* label) {
  try {
    CyclicCensus out;
    if (label != nullptr) *label = j.at("label").get<std::string>();
    out.group_order = j.at("order").get<std::size_t>();
    for (const auto& [k, count] : j.at("c").items()) out.c[std::stoul(k)] = count.get<std::size_t>();
    out.pi_e = j.at("pi_e").get<std::vector<std::size_t>>();
    out.pi = j.at("pi").get<std::vector<std::size_t>>();
    out.pi_c = j.at("pi_c").get<std::vector<std::size_t>>();
    out.num_cyclic = j.at("num_cyclic").get<std::size_t>();
    out.delta = j.at("delta").get<std::int64_t>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed census report: ") + e.what());
  }
}

std::string census_csv_header() { return "label,order,c,pi_e,pi,pi_c,num_cyclic,delta,identity_order_sum,identity_eq1"; }

std::string census_to_csv_row(const std::string& label, const CyclicCensus& census) {
  std::string c;
  for (const auto& [k, count] : census.c) {
    if (!c.empty()) c += ';';
    c += std::to_string(k) + ":" + std::to_string(count);
  }
  std::ostringstream os;
  os << csv_field(label) << ',' << census.group_order << ',' << c << ',' << join(census.pi_e, ";") << ','
     << join(census.pi, ";") << ',' << join(census.pi_c, ";") << ',' << census.num_cyclic << ',' << census.delta << ','
     << (census.order_sum_identity() ? "true" : "false") << ',' << (census.deficiency_identity() ? "true" : "false");
  return os.str();
}

std::string census_to_text(const std::string& label, const CyclicCensus& census) {
  std::ostringstream os;
  os << "group       " << label << "\n"
     << "order       " << census.group_order << "\n"
     << "k     c_k   phi(k)\n";
  for (const auto& [k, count] : census.c) {
    os << k;
    for (auto w = std::to_string(k).size(); w < 6; ++w) os << ' ';
    os << count;
    for (auto w = std::to_string(count).size(); w < 6; ++w) os << ' ';
    os << totient(k) << "\n";
  }
  os << "pi_e        {" << join(census.pi_e, ",") << "}\n"
     << "pi          {" << join(census.pi, ",") << "}\n"
     << "pi_c        {" << join(census.pi_c, ",") << "}\n"
     << "|C(G)|      " << census.num_cyclic << "\n"
     << "delta       " << census.delta << "\n"
     << "sum c_k*phi(k) = |G|        " << (census.order_sum_identity() ? "ok" : "FAILED") << "\n"
     << "sum c_k*(phi(k)-1) = delta  " << (census.deficiency_identity() ? "ok" : "FAILED") << "\n";
  return os.str();
}

std::string format_census(const std::string& label, const CyclicCensus& census, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return census_to_json(label, census).dump() + "\n";
    case ReportFormat::Csv: return census_csv_header() + "\n" + census_to_csv_row(label, census) + "\n";
    case ReportFormat::Table: return census_to_text(label, census);
  }
  return {};
}

void write_table(std::ostream& os, const Group& g) {
  os << "n=" << g.order() << " label=" << g.label() << "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto row = g.row(static_cast<Elem>(a));
    for (std::size_t b = 0; b < row.size(); ++b) os << (b > 0 ? " " : "") << row[b];
    os << "\n";
  }
}

std::string table_to_string(const Group& g) {
  std::ostringstream os;
  write_table(os, g);
  return os.str();
}

Group read_table(std::istream& is) {
  std::string header;
  while (std::getline(is, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (header.rfind("n=", 0) != 0) throw Error(Errc::InvalidArgument, "table header must start with 'n='");
  std::size_t n = 0;
  std::string label;
  try {
    std::size_t used = 0;
    n = std::stoul(header.substr(2), &used);
    const auto rest = header.substr(2 + used);
    const auto lp = rest.find("label=");
    if (lp != std::string::npos) label = rest.substr(lp + 6);
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, "bad table header '" + header + "'");
  }
  if (n == 0 || n > kMaxOrder) throw Error(Errc::InvalidArgument, "table order out of range");
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string line;
    if (!std::getline(is, line)) throw Error(Errc::InvalidArgument, "table ends after " + std::to_string(a) + " rows");
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) throw Error(Errc::InvalidArgument, "negative entry in row " + std::to_string(a));
      rows[a].push_back(static_cast<std::size_t>(v));
    }
    if (!ls.eof()) throw Error(Errc::InvalidArgument, "non-numeric entry in row " + std::to_string(a));
  }
  return make_group(rows, label);
}

}  // namespace cycgrp
