#pragma once

#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace reebsurg::cli {

using json = nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Output of one subcommand: the JSON document plus a tabular view of it.
struct Report {
  json doc;
  std::vector<Table> tables;
};

inline std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

inline void print_tsv(std::ostream& os, const Report& r) {
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) os << "\n";
    first = false;
    os << "# " << t.title << "\n";
    for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "\t" : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << "\n";
    }
  }
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\";
    out += c;
  }
  return out;
}

inline void print_md(std::ostream& os, const Report& r) {
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) os << "\n";
    first = false;
    os << "### " << t.title << "\n\n|";
    for (const auto& h : t.header) os << " " << md_escape(h) << " |";
    os << "\n|";
    for (size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t.rows) {
      os << "|";
      for (const auto& c : row) os << " " << md_escape(c) << " |";
      os << "\n";
    }
  }
}

inline void print(std::ostream& os, const Report& r, const std::string& format) {
  if (format == "tsv")
    print_tsv(os, r);
  else if (format == "md")
    print_md(os, r);
  else
    os << r.doc.dump(2) << "\n";
}

}  // namespace reebsurg::cli
