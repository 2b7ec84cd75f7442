#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hkcount/hkcount.h"
#include "json.hpp"

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct TableDeleter {
  void operator()(hk_table* t) const { hk_table_free(t); }
};
using TablePtr = std::unique_ptr<hk_table, TableDeleter>;

std::string cell(const hk_table* t, size_t row, size_t col) {
  const char* s = hk_table_cell(t, row, col);
  return s ? s : "";
}

void print_table(const hk_table* t, std::ostream& out) {
  const size_t cols = hk_table_columns(t);
  const size_t rows = hk_table_rows(t);
  std::vector<size_t> width(cols);
  for (size_t c = 0; c < cols; ++c) {
    width[c] = std::string(hk_table_column_name(t, c)).size();
    for (size_t r = 0; r < rows; ++r) width[c] = std::max(width[c], cell(t, r, c).size());
  }
  auto line = [&](auto&& get) {
    std::string s;
    for (size_t c = 0; c < cols; ++c) {
      const std::string v = get(c);
      if (c > 0) s += "  ";
      // Right-align everything but free text in the first column.
      if (c == 0) {
        s += v + std::string(width[c] - v.size(), ' ');
      } else {
        s += std::string(width[c] - v.size(), ' ') + v;
      }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line([&](size_t c) { return std::string(hk_table_column_name(t, c)); });
  for (size_t r = 0; r < rows; ++r) line([&](size_t c) { return cell(t, r, c); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void print_csv(const hk_table* t, std::ostream& out) {
  const size_t cols = hk_table_columns(t);
  for (size_t c = 0; c < cols; ++c) out << (c ? "," : "") << csv_field(hk_table_column_name(t, c));
  out << '\n';
  for (size_t r = 0; r < hk_table_rows(t); ++r) {
    for (size_t c = 0; c < cols; ++c) out << (c ? "," : "") << csv_field(cell(t, r, c));
    out << '\n';
  }
}

void print_json(const std::string& command, const Params& params, const hk_table* t,
                std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) doc["params"][k] = v;
  doc["results"] = nlohmann::ordered_json::array();
  const size_t cols = hk_table_columns(t);
  for (size_t r = 0; r < hk_table_rows(t); ++r) {
    nlohmann::ordered_json row;
    row["index"] = nlohmann::ordered_json::object();
    for (size_t c = 0; c + 1 < cols; ++c) row["index"][hk_table_column_name(t, c)] = cell(t, r, c);
    row["value"] = cell(t, r, cols - 1);
    doc["results"].push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

void print_selftest(const hk_table* t, std::ostream& out) {
  // columns: check, expected, status, value
  size_t passed = 0;
  const size_t rows = hk_table_rows(t);
  for (size_t r = 0; r < rows; ++r) {
    const std::string status = cell(t, r, 2);
    out << status << ' ' << cell(t, r, 0);
    if (status == "PASS") {
      ++passed;
    } else {
      out << " (got " << cell(t, r, 3) << ")";
    }
    out << '\n';
  }
  out << passed << '/' << rows << " checks passed\n";
}

int exit_code(hk_status s) {
  if (s == HK_OK) return 0;
  return s == HK_ERR_INVALID_ARGUMENT ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curve counts on K3 and K3[2]-type varieties, and Chow-ring checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hk_version()));

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  int hmax = 0;
  auto* k3 = app.add_subcommand("k3", "Genus-0 counts on a K3 surface by h");
  k3->add_option("--hmax", hmax, "Largest h")->required()->check(CLI::NonNegativeNumber);
  add_format(k3);

  int smax = 0;
  std::string method = "jacobi";
  auto* k3two = app.add_subcommand("k3two", "Counts on K3[2]-type varieties by s = 2 (b,b)");
  k3two->add_option("--smax", smax, "Largest s")->required()->check(CLI::NonNegativeNumber);
  k3two->add_option("--method", method, "Formula to evaluate")
      ->check(CLI::IsMember({"jacobi", "gamma0", "both"}));
  add_format(k3two);

  std::string which;
  bool via_euler = false;
  auto* fano = app.add_subcommand("fano", "Genus and j-line degree of the cubic-cone curve");
  fano->add_option("quantity", which, "genus or degree")
      ->required()
      ->check(CLI::IsMember({"genus", "degree"}));
  fano->add_flag("--via-euler", via_euler, "Use the Euler-class discriminant for the degree");
  add_format(fano);

  std::string series_name;
  int order = 0;
  auto* series = app.add_subcommand("series", "Coefficients of a named q-series");
  series->add_option("name", series_name, "Series name")
      ->required()
      ->check(CLI::IsMember({"delta", "invdelta", "e2", "e4", "theta4", "f", "g2", "g4"}));
  series->add_option("--order", order, "Truncation order")->required()->check(CLI::PositiveNumber);
  add_format(series);

  int qorder = 0;
  auto* jacobi = app.add_subcommand("jacobi", "Two-variable coefficient grid for K3[2]");
  jacobi->add_option("--qorder", qorder, "Truncation order in q")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(jacobi);

  std::string level = "quick";
  auto* selftest = app.add_subcommand("selftest", "Run the built-in cross-checks");
  selftest->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const char* cache = std::getenv("HKCOUNT_LR_CACHE");
  if (cache != nullptr && *cache != '\0') {
    if (hk_lr_cache_load(cache, nullptr) != HK_OK) {
      std::cerr << "hkcount: ignoring LR cache " << cache << ": " << hk_last_error() << '\n';
    }
  }

  hk_table* raw = nullptr;
  hk_status status = HK_OK;
  std::string command;
  Params params;
  if (*k3) {
    command = "k3";
    params = {{"hmax", std::to_string(hmax)}};
    status = hk_k3(hmax, &raw);
  } else if (*k3two) {
    command = "k3two";
    params = {{"smax", std::to_string(smax)}, {"method", method}};
    const hk_method m = method == "gamma0" ? HK_METHOD_GAMMA0
                        : method == "both" ? HK_METHOD_BOTH
                                           : HK_METHOD_JACOBI;
    status = hk_k3two(smax, m, &raw);
  } else if (*fano) {
    command = "fano";
    params = {{"quantity", which}, {"via_euler", via_euler ? "true" : "false"}};
    status = hk_fano(which == "genus" ? HK_FANO_GENUS : HK_FANO_DEGREE, via_euler ? 1 : 0, &raw);
  } else if (*series) {
    command = "series";
    params = {{"name", series_name}, {"order", std::to_string(order)}};
    status = hk_series(series_name.c_str(), order, &raw);
  } else if (*jacobi) {
    command = "jacobi";
    params = {{"qorder", std::to_string(qorder)}};
    status = hk_jacobi(qorder, &raw);
  } else {
    command = "selftest";
    params = {{"level", level}};
    status = hk_selftest(level == "full" ? HK_SELFTEST_FULL : HK_SELFTEST_QUICK, &raw);
  }
  TablePtr table(raw);

  if (table) {
    if (format == "json") {
      print_json(command, params, table.get(), std::cout);
    } else if (format == "csv") {
      print_csv(table.get(), std::cout);
    } else if (command == "selftest") {
      print_selftest(table.get(), std::cout);
    } else if (command == "fano") {
      std::cout << cell(table.get(), hk_table_rows(table.get()) - 1, 1) << '\n';
    } else {
      print_table(table.get(), std::cout);
    }
  }
  if (status != HK_OK) {
    std::cerr << "hkcount: " << hk_status_name(status) << ": " << hk_last_error() << '\n';
  }

  if (cache != nullptr && *cache != '\0' && hk_lr_cache_save(cache) != HK_OK) {
    std::cerr << "hkcount: could not write LR cache " << cache << ": " << hk_last_error() << '\n';
  }
  return exit_code(status);
}
