#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cycgrp/census.hpp"
#include "cycgrp/group.hpp"

namespace cycgrp {

enum class ReportFormat { Table, Json, Csv };

ReportFormat parse_format(const std::string& name);

/// {"label","order","c":{"k":count},"pi_e","pi","pi_c","num_cyclic","delta",
///  "identity_order_sum","identity_eq1"}
nlohmann::json census_to_json(const std::string& label, const CyclicCensus& census);

/// Inverse of census_to_json; the label is returned through `label`.
CyclicCensus census_from_json(const nlohmann::json& j, std::string* label = nullptr);

std::string census_csv_header();
std::string census_to_csv_row(const std::string& label, const CyclicCensus& census);
std::string census_to_text(const std::string& label, const CyclicCensus& census);

std::string format_census(const std::string& label, const CyclicCensus& census, ReportFormat format);

/// "n=<order> label=<label>" followed by n rows of space-separated indices.
void write_table(std::ostream& os, const Group& g);
std::string table_to_string(const Group& g);

/// Reads one table in the write_table format. Syntax problems throw
/// Error(InvalidArgument); table problems surface from make_group.
Group read_table(std::istream& is);

}  // namespace cycgrp
